use proptest::prelude::*;
use voawb_core::algebroid::conformal::{extend_conformal, CElem};
use voawb_core::algebroid::from_envelope::{canonical_splitting, split_v1, truncate_from_envelope};
use voawb_core::algebroid::truncated::{TruncatedVA, Val};
use voawb_core::algebroid::*;
use voawb_core::envelope::{omega_state, tau_state, Envelope};
use voawb_core::error::Error;
use voawb_core::regfun::{self, to_mirror, Poly4, RegFun, Side};
use voawb_core::Scalar;

fn alg() -> VertexAlgebroid {
    build_algebroid(Scalar::k()).unwrap()
}

fn tau(i: usize) -> Frame {
    frame_unit(i, regfun::one())
}

fn x(a: u32, b: u32) -> RegFun {
    regfun::coord(a, b)
}

// x11 x12 x21 x22 in the mirror
fn var(a: u32, b: u32) -> Poly4 {
    to_mirror(&x(a, b))
}

#[test]
fn frame_values() {
    let g = alg();
    for i in 0..3 {
        assert!(frame_is_zero(&g.gamma(&regfun::one(), &tau(i))));
        for j in 0..3 {
            let want = if i == j { regfun::constant(Scalar::k()) } else { RegFun::new() };
            assert_eq!(g.pair_tt(&tau(i), &tau(j)), want);
            assert!(frame_is_zero(&g.c(&tau(i), &tau(j))));
        }
    }
}

#[test]
fn anchor_and_differential() {
    let g = alg();
    let span = Span::standard(2);
    for (_, a) in &span.functions {
        for (_, t) in span.fields() {
            assert_eq!(g.pair(&V1::field(t.clone()), &V1::form(d(a))), apply(&t, a));
            for (_, b) in span.functions.iter().take(4) {
                assert_eq!(apply(&frame_mul(a, &t), b), regfun::mul_uncapped(a, &apply(&t, b)));
            }
        }
    }
}

// hand-derived: τ3(x11) = x11/√2, τ3(x22) = −x22/√2, τ3(x11 x22) = 0
#[test]
fn pairing_frozen_value() {
    let g = alg();
    let p = g.pair_tt(&frame_unit(2, x(1, 1)), &frame_unit(2, x(2, 2)));
    let want =
        Poly4::constant(Scalar::one()).add(&var(1, 2).mul(&var(2, 1))).scale(&Scalar::k().sub_ref(&Scalar::frac(1, 2)));
    assert_eq!(to_mirror(&p), want);
}

#[test]
fn gamma_frozen_value() {
    let g = alg();
    let gam = g.gamma(&x(1, 1), &frame_unit(2, x(1, 2)));
    assert_eq!(to_mirror(&pair_tw(&tau(2), &gam)), var(1, 1).mul(&var(1, 2)));
}

// the forced pairing recomputed on polynomials
#[test]
fn pairing_matches_mirror() {
    let g = alg();
    let fs: Vec<RegFun> = Span::standard(1).functions.into_iter().map(|(_, f)| f).collect();
    let fld = |i: usize, p: &Poly4| regfun::mirror_field(Side::Left, i, p);
    for a in &fs {
        for b in &fs {
            let (pa, pb) = (to_mirror(a), to_mirror(b));
            for i in 0..3 {
                for j in 0..3 {
                    let mut want = Poly4::default();
                    if i == j {
                        want = pa.mul(&pb).scale(&Scalar::k());
                    }
                    want = want.add(&pa.mul(&fld(j, &fld(i, &pb))).scale(&Scalar::int(-1)));
                    want = want.add(&fld(i, &pb.mul(&fld(j, &pa))).scale(&Scalar::int(-1)));
                    let got = g.pair_tt(&frame_unit(i, a.clone()), &frame_unit(j, b.clone()));
                    assert_eq!(to_mirror(&got), want);
                }
            }
        }
    }
}

#[test]
fn full_axiom_suite() {
    let g = alg();
    let rep = check_axioms(&g, g.variant, &Span::standard(2), &Span::small());
    for r in &rep.results {
        assert!(r.passed(), "{} failed at {:?}", r.id, r.witness);
        assert!(r.checked > 0, "{} checked nothing", r.id);
    }
}

#[test]
fn c_variant_resolution() {
    let span = Span::small();
    let tri = Span { functions: vec![], coeffs: span.coeffs.clone() };
    let passing: Vec<CVariant> = resolve_c_variant(&Scalar::k(), &span, &tri)
        .into_iter()
        .filter(|(_, r)| r.all_pass())
        .map(|(v, _)| v)
        .collect();
    assert_eq!(passing, vec![DEFAULT_VARIANT]);
    assert_eq!(DEFAULT_VARIANT, CVariant { s1: 1, s2: -1 });
}

#[test]
fn truncated_axioms() {
    let g = alg();
    let t = TruncatedVA::new(&g);
    let rep = t.check_axioms(&Span::standard(1), &Span::small());
    assert!(rep.all_pass(), "{:?}", rep.failures());
    let rep = t.check_conformal_axioms(&Span::standard(1), &Span::small());
    assert!(rep.all_pass(), "{:?}", rep.failures());
}

#[test]
fn truncated_products() {
    let g = alg();
    let t = TruncatedVA::new(&g);
    let ti = |i| Val::one(V1::field(tau(i)));
    // τ_(1)τ' = k δ, τ_(0)τ' = [τ, τ']
    for i in 0..3 {
        for j in 0..3 {
            let one = t.op(1, &ti(i), &ti(j)).unwrap();
            let want = if i == j { regfun::constant(Scalar::k()) } else { RegFun::new() };
            assert_eq!(one, Val::fun(want));
            let zero = t.op(0, &ti(i), &ti(j)).unwrap();
            assert_eq!(zero, Val::one(V1::field(bracket(&tau(i), &tau(j)))));
        }
    }
    assert!(t.op(-1, &ti(0), &ti(1)).is_none());
}

#[test]
fn conformal_extension() {
    let g = alg();
    let c = extend_conformal(TruncatedVA::new(&g), 3);
    let xe = CElem::one(V1::field(frame_unit(0, x(1, 2))));
    let ye = CElem::one(V1::field(tau(0)));
    let dx = c.partial(&xe).unwrap();
    assert!(c.product(0, &dx, &ye).unwrap().is_zero());
    for n in 1..4 {
        let lhs = c.product(n, &dx, &ye).unwrap();
        let rhs = c.product(n - 1, &xe, &ye).unwrap().scaled(&Scalar::int(-n));
        assert_eq!(lhs, rhs);
    }
    assert!(!c.product(1, &dx, &ye).unwrap().is_zero());
    assert!(c.partial_pow(3, &xe).is_err());

    let mut fns = Span::standard(1).functions;
    fns.truncate(3);
    let tri = Span { functions: fns, coeffs: Span::small().coeffs };
    let rep = c.check_axioms(&Span::standard(1), &tri, 29).unwrap();
    assert!(rep.all_pass(), "{:?}", rep.failures());
}
#[test]
fn algebroid_from_envelope() {
    let env = Envelope::new(Scalar::k(), 3, 6).unwrap();
    let ea = truncate_from_envelope(&env, canonical_splitting()).unwrap();
    let g = alg();
    for i in 0..3 {
        for j in 0..3 {
            let want = if i == j { regfun::constant(Scalar::k()) } else { RegFun::new() };
            assert_eq!(ea.try_pair(&tau(i), &tau(j)).unwrap(), want);
            assert!(frame_is_zero(&ea.try_c(&tau(i), &tau(j)).unwrap()));
        }
    }
    let span = Span::standard(1);
    for (lx, x) in span.fields() {
        for (la, a) in &span.functions {
            assert!(frame_is_zero(&frame_sub(&ea.try_gamma(a, &x).unwrap(), &g.gamma(a, &x))), "γ({la}, {lx})");
        }
        for (ly, y) in span.fields() {
            assert_eq!(ea.try_pair(&x, &y).unwrap(), g.pair_tt(&x, &y), "⟨{lx}, {ly}⟩");
            assert!(frame_is_zero(&frame_sub(&ea.try_c(&x, &y).unwrap(), &g.c(&x, &y))), "c({lx}, {ly})");
        }
    }
    let rep = check_axioms(&ea, DEFAULT_VARIANT, &Span::small(), &Span { functions: vec![], coeffs: vec![] });
    assert!(rep.all_pass(), "{:?}", rep.failures());
}

#[test]
fn other_splittings() {
    let env = Envelope::new(Scalar::k(), 3, 4).unwrap();
    // π∘s must be the identity
    let swapped = [tau_state(1), tau_state(0), tau_state(2)];
    assert_eq!(truncate_from_envelope(&env, swapped).err(), Some(Error::SplittingInvalid));
    let doubled = [tau_state(0).scaled(&Scalar::int(2)), tau_state(1), tau_state(2)];
    assert_eq!(truncate_from_envelope(&env, doubled).err(), Some(Error::SplittingInvalid));
    assert!(truncate_from_envelope(&env, [omega_state(0), tau_state(1), tau_state(2)]).is_err());
    // shifting s by a form changes ⟨,⟩ by the pairing with it
    let shifted = [tau_state(0).plus(&omega_state(0)), tau_state(1), tau_state(2)];
    let ea = truncate_from_envelope(&env, shifted).unwrap();
    let p = ea.try_pair(&tau(0), &tau(0)).unwrap();
    assert_eq!(p, regfun::constant(Scalar::k().add_ref(&Scalar::int(2))));
    assert_eq!(ea.try_pair(&tau(1), &tau(1)).unwrap(), regfun::constant(Scalar::k()));
    let v = split_v1(&ea.splitting[0]).unwrap();
    assert_eq!(v.w[0], regfun::one());
}

fn small_fun() -> impl Strategy<Value = RegFun> {
    prop::collection::vec(-3i64..=3, 5)
        .prop_map(|cs| regfun::basis_upto(1).into_iter().zip(cs).map(|(k, c)| (k, Scalar::int(c))).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn gamma_and_pairing_laws(a in small_fun(), b in small_fun(), f in small_fun(), i in 0usize..3, j in 0usize..3) {
        let g = alg();
        let t1 = frame_unit(i, f.clone());
        let t2 = frame_unit(j, regfun::one());
        prop_assert_eq!(g.pair_tt(&t1, &t2), g.pair_tt(&t2, &t1));
        let c12 = g.c(&t1, &t2);
        let c21 = g.c(&t2, &t1);
        prop_assert!(frame_is_zero(&frame_add(&c12, &c21)));
        // γ(a, bτ) = γ(ab, τ) − aγ(b, τ) − τ(a)∂b − τ(b)∂a
        let ab = regfun::mul_uncapped(&a, &b);
        let lhs = g.gamma(&a, &frame_mul(&b, &t1));
        let mut rhs = frame_sub(&g.gamma(&ab, &t1), &frame_mul(&a, &g.gamma(&b, &t1)));
        rhs = frame_sub(&rhs, &frame_mul(&apply(&t1, &a), &d(&b)));
        rhs = frame_sub(&rhs, &frame_mul(&apply(&t1, &b), &d(&a)));
        prop_assert!(frame_is_zero(&frame_sub(&lhs, &rhs)));
    }
}
