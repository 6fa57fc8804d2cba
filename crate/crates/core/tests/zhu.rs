use proptest::prelude::*;
use voawb_core::envelope::{fun_state, omega_state, tau_state, vacuum, Envelope, ONE};
use voawb_core::regfun::{self, FKey, RegFun};
use voawb_core::zhu::{pbw, zhu_checks, ZhuElement};
use voawb_core::Scalar;

fn env() -> Envelope {
    Envelope::new(Scalar::k(), 6, 6).unwrap()
}

/// a ⊗ w acting on functions: g ↦ a · w_1(w_2(⋯ w_l(g))).
fn act(z: &ZhuElement, g: &RegFun) -> RegFun {
    let mut out = RegFun::new();
    for ((a, w), c) in &z.terms {
        let mut h = g.clone();
        for &x in w.iter().rev() {
            h = regfun::tau(x as usize, &h);
        }
        out.add_scaled(&regfun::mul_uncapped(&RegFun::basis(*a), &h), c);
    }
    out
}

fn elem(a: FKey, w: &[u8]) -> ZhuElement {
    ZhuElement::basis((a, w.to_vec()))
}

#[test]
fn reduction_examples() {
    let e = env();
    // x(−2)1 = −[x], x(−1)1 = [x]
    for i in 0..3 {
        assert_eq!(e.reduce_o(&tau_state(i)), elem(ONE, &[i as u8]));
        let v = e.tau(i, -2, &vacuum()).unwrap();
        assert_eq!(e.reduce_o(&v), elem(ONE, &[i as u8]).scaled(&Scalar::int(-1)));
        assert!(e.reduce_o(&omega_state(i)).is_zero());
    }
    // x(−1)y(−1)1 = [y]*[x]: letters come out reversed
    let v = e.tau(0, -1, &tau_state(2)).unwrap();
    let mut want = elem(ONE, &[0, 2]);
    for k in 0..3 {
        want.add_term((ONE, vec![k as u8]), regfun::sl2().cs(2, 0, k));
    }
    assert_eq!(e.reduce_o(&v), want);
    assert_eq!(pbw(&[2, 0], &e).terms.len(), want.terms.len());
    let a = (1, 0, 1);
    assert_eq!(e.reduce_o(&fun_state(&RegFun::basis(a))), elem(a, &[]));
}

#[test]
fn lift_round_trip() {
    let e = env();
    for k in regfun::basis_upto(1) {
        for w in [vec![], vec![0], vec![2, 1], vec![0, 0, 1]] {
            let z = elem(k, &w);
            let back = e.reduce_o(&e.zhu_lift(&z).unwrap());
            // the lift of a non-PBW word comes back straightened
            let mut want = ZhuElement::new();
            for (w2, c) in pbw(&w, &e).terms {
                want.add_term((k, w2), c);
            }
            assert_eq!(back, want);
        }
    }
}

#[test]
fn sl2_relations_in_letters() {
    let e = env();
    let m = regfun::sl2().ehf_in_tau();
    let letter = |r: usize| {
        let mut z = ZhuElement::new();
        for (i, c) in m[r].iter().enumerate() {
            z.add_term((ONE, vec![i as u8]), c.clone());
        }
        z
    };
    let (x, h, y) = (letter(0), letter(1), letter(2));
    let br = |a: &ZhuElement, b: &ZhuElement| e.d_product(a, b).minus(&e.d_product(b, a));
    assert_eq!(br(&x, &y), h);
    assert_eq!(br(&h, &x), x.scaled(&Scalar::int(2)));
}

#[test]
fn all_checks_pass() {
    let r = zhu_checks(&env(), 50, 25).unwrap();
    assert!(r.all_pass(), "{:?}", r.failures());
    assert_eq!(r.get("a-commute").unwrap().checked, 50);
    assert_eq!(r.get("associative").unwrap().checked, 25);
}

fn state(e: &Envelope, a: FKey, w: &[u8], shift: bool) -> voawb_core::envelope::EVec {
    let mut v = fun_state(&RegFun::basis(a));
    for (n, &x) in w.iter().enumerate() {
        let m = if shift && n == 0 { -2 } else { -1 };
        v = e.tau(x as usize, m, &v).unwrap();
    }
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn star_acts_as_composition(
        ia in 0usize..5, ib in 0usize..5,
        wa in prop::collection::vec(0u8..3, 0..2),
        wb in prop::collection::vec(0u8..3, 0..2),
        sa: bool, sb: bool,
    ) {
        let e = env();
        let keys = regfun::basis_upto(1);
        let u = state(&e, keys[ia], &wa, sa);
        let v = state(&e, keys[ib], &wb, sb);
        let z = e.reduce_o(&e.star(&u, &v).unwrap());
        let (zu, zv) = (e.reduce_o(&u), e.reduce_o(&v));
        for g in keys.iter().map(|k| RegFun::basis(*k)) {
            prop_assert_eq!(act(&z, &g), act(&zu, &act(&zv, &g)));
        }
    }

    #[test]
    fn d_product_matches_composition(ia in 0usize..5, ib in 0usize..5, wa in prop::collection::vec(0u8..3, 0..3), wb in prop::collection::vec(0u8..3, 0..3)) {
        let e = env();
        let keys = regfun::basis_upto(1);
        let (x, y) = (elem(keys[ia], &wa), elem(keys[ib], &wb));
        let z = e.d_product(&x, &y);
        for g in keys.iter().map(|k| RegFun::basis(*k)) {
            prop_assert_eq!(act(&z, &g), act(&x, &act(&y, &g)));
        }
    }
}
