use proptest::prelude::*;
use voawb_core::error::Error;
use voawb_core::intertwine::*;
use voawb_core::lie_core::{
    casimir, conformal_weight, dual_basis_fast, dual_hom_pairing, hom_basis, tensor_all, HomTensor, Rep,
};
use voawb_core::linalg::{self, Matrix};
use voawb_core::regfun::{self, RegFun};
use voawb_core::weyl::WVec;
use voawb_core::Scalar;

fn irreps(ws: [u32; 3]) -> [Rep; 3] {
    ws.map(Rep::irrep)
}

fn invariants(reps: &[Rep; 3]) -> Vec<Vec<Scalar>> {
    let t = tensor_all(reps);
    let rows: Matrix = t.ehf.iter().flatten().cloned().collect();
    linalg::kernel(&rows, t.dim)
}

#[test]
fn omega_examples() {
    let g = regfun::sl2();
    for n in 0..=3 {
        let c = casimir(g, &Rep::irrep(n));
        let want: Matrix = (0..=n as usize)
            .map(|i| (0..=n as usize).map(|j| if i == j { casimir_value(n) } else { Scalar::zero() }).collect())
            .collect();
        assert_eq!(c, want);
    }
    assert_eq!(casimir_value(1), Scalar::frac(3, 2));
    // trivial first factor
    let reps = irreps([0, 1, 2]);
    let t: Vec<Scalar> = (0..6).map(|i| Scalar::int(i + 1)).collect();
    assert!(omega_action(&reps, Pair::P12, &t).iter().all(Scalar::is_zero));
    // on invariant tensors Ω₁₂ + Ω₁₃ + Ω₂₃ = −½ Σ C
    for ws in [[1, 1, 2], [2, 2, 2], [1, 2, 1], [2, 2, 0]] {
        let reps = irreps(ws);
        let inv = invariants(&reps);
        assert!(!inv.is_empty(), "{ws:?}");
        let total = ws.iter().fold(Scalar::zero(), |a, &w| a.add_ref(&casimir_value(w)));
        let factor = total.mul_ref(&Scalar::frac(-1, 2));
        for t in &inv {
            let mut s = vec![Scalar::zero(); t.len()];
            for which in [Pair::P12, Pair::P13, Pair::P23] {
                for (x, y) in s.iter_mut().zip(omega_action(&reps, which, t)) {
                    *x = x.add_ref(&y);
                }
            }
            let want: Vec<Scalar> = t.iter().map(|x| x.mul_ref(&factor)).collect();
            assert_eq!(s, want, "{ws:?}");
        }
    }
    // the dual side carries the transposed operator
    let reps = irreps([1, 2, 1]);
    let duals = reps.clone().map(|r| r.dual());
    for which in [Pair::P12, Pair::P13, Pair::P23] {
        assert_eq!(omega_matrix(&duals, which), linalg::transpose(&omega_matrix(&reps, which)));
    }
}

fn table(l: u32, m: u32, n: u32, idx: usize, level: &Scalar, cap: usize) -> IntertwinerTable {
    let (fs, _) = dual_basis_fast(&[Rep::irrep(l), Rep::irrep(m)], &Rep::irrep(n)).unwrap();
    IntertwinerTable::new(&Rep::irrep(l), &Rep::irrep(m), &Rep::irrep(n), level, fs[idx].clone(), cap).unwrap()
}

fn unit(d: usize, i: usize) -> Vec<Scalar> {
    (0..d).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect()
}

fn samples(t: &IntertwinerTable) -> Vec<WVec> {
    let md = &t.src;
    let top = md.top(0);
    let last = md.top(md.rep.dim - 1);
    let mut out = vec![top.clone(), last.clone()];
    out.push(md.act(0, -1, &top).unwrap());
    out.push(md.act(2, -1, &md.act(1, -1, &last).unwrap()).unwrap());
    out.push(md.act(1, -2, &top).unwrap().plus(&md.act(0, -1, &md.act(0, -1, &top).unwrap()).unwrap()));
    out
}

#[test]
fn table_examples() {
    let k = Scalar::k();
    let t = table(1, 1, 2, 0, &k, 3);
    // top level reproduces f
    for a in 0..2 {
        for b in 0..2 {
            let got = t.apply(&unit(2, a), -1, &t.src.top(b)).unwrap();
            let want: WVec = (0..3).map(|c| ((vec![], c), t.f.mat[c][a * 2 + b].clone())).collect();
            assert_eq!(got, want);
            // below the top level of the target
            assert!(t.apply(&unit(2, a), 0, &t.src.top(b)).unwrap().is_zero());
            let w = t.tgt.top(1);
            assert_eq!(t.elem(&w, &unit(2, a), -1, &t.src.top(b)).unwrap(), t.f.mat[1][a * 2 + b]);
        }
    }
    let h = conformal_weight(2, &k).unwrap().sub_ref(&conformal_weight(1, &k).unwrap().mul_ref(&Scalar::int(2)));
    assert_eq!(t.offset, h);
    // the vacuum channel is the module action itself
    let vac = IntertwinerTable::new(
        &Rep::irrep(0),
        &Rep::irrep(2),
        &Rep::irrep(2),
        &k,
        HomTensor { mat: linalg::identity(3) },
        3,
    )
    .unwrap();
    for u in samples(&vac) {
        for n in -3..=2 {
            let want = if n == -1 { u.clone() } else { WVec::new() };
            assert_eq!(vac.apply(&[Scalar::one()], n, &u).unwrap(), want);
        }
    }
}

#[test]
fn table_commutation() {
    let k = Scalar::k();
    for (l, m, n) in [(1, 1, 2), (1, 1, 0), (2, 1, 1), (1, 2, 1)] {
        let t = table(l, m, n, 0, &k, 4);
        let dl = l as usize + 1;
        for u in samples(&t) {
            let du = voawb_core::weyl::WeylModule::degree_of(&u).unwrap() as i32;
            for a in 0..dl {
                let v = unit(dl, a);
                for nn in (du - 4).max(-2 - du)..=0 {
                    // [x(p), v_(n)] = (x·v)_(n+p)
                    for i in 0..3u8 {
                        for p in -1..=2 {
                            let lhs = t
                                .tgt
                                .act(i, p, &t.apply(&v, nn, &u).unwrap())
                                .unwrap()
                                .minus(&t.apply(&v, nn, &t.src.act(i, p, &u).unwrap()).unwrap());
                            let rhs = t.apply(&t.act_top(i as usize, &v), nn + p, &u).unwrap();
                            assert_eq!(lhs, rhs, "({l},{m},{n}) x{i}({p}) v{a}_({nn})");
                        }
                    }
                    // [L₋₁, v_(n)] = (h − n) v_(n−1)
                    if du - nn <= 2 {
                        let lhs = t
                            .tgt
                            .sugawara(-1, &t.apply(&v, nn, &u).unwrap())
                            .unwrap()
                            .minus(&t.apply(&v, nn, &t.src.sugawara(-1, &u).unwrap()).unwrap());
                        let c = t.offset.sub_ref(&Scalar::int(nn as i64));
                        assert_eq!(lhs, t.apply(&v, nn - 1, &u).unwrap().scaled(&c), "L-1 ({l},{m},{n})");
                    }
                }
            }
        }
    }
}

#[test]
fn kz_examples() {
    let k = Scalar::k();
    let (phi, psi) = kz_channels([1, 1, 1, 1], &k).unwrap();
    assert_eq!(phi.labels, vec![(0, 0, 0), (2, 0, 0)]);
    for idx in 0..2 {
        let s = phi.series(idx, 4).unwrap();
        assert_eq!(s.coeffs[0], unit(2, idx));
        let alpha = phi.labels[idx].0;
        let d = |w| conformal_weight(w, &k).unwrap();
        assert_eq!(s.exponents, (d(1).sub_ref(&d(1)).sub_ref(&d(alpha)), d(alpha).sub_ref(&d(1)).sub_ref(&d(1))));
        assert_eq!(phi.series_z1(idx, 4).unwrap(), s);
        let t = psi.series(idx, 4).unwrap();
        assert_eq!(t.exponents.0, s.exponents.0.neg_ref());
        assert_eq!(psi.series_z1(idx, 4).unwrap(), t);
    }
    // mismatched internal weights pair to zero at every order
    let gram: Matrix =
        (0..2).map(|p| (0..2).map(|q| dual_hom_pairing(&phi.basis[p], &psi.basis[q]).unwrap()).collect()).collect();
    assert_eq!(gram, linalg::identity(2));
    let (_, _, ser) = pairing_series(&phi.series(0, 5).unwrap(), &psi.series(1, 5).unwrap(), &gram);
    assert!(ser.iter().all(Scalar::is_zero));
    let (ea, eb, ser) = pairing_series(&phi.series(1, 5).unwrap(), &psi.series(1, 5).unwrap(), &gram);
    assert!(ea.is_zero() && eb.is_zero());
    assert_eq!(ser[0], Scalar::one());
    assert!(ser[1..].iter().all(Scalar::is_zero));
}

#[test]
fn kz_binomial_series() {
    // channel (1,1,0; 0): one-dimensional, F = (1 − x)^{−β} with β = 3/(2ϰ)
    let k = Scalar::k();
    let (phi, _) = kz_channels([1, 1, 0, 0], &k).unwrap();
    assert_eq!(phi.basis.len(), 1);
    let beta = Scalar::frac(3, 2).div_ref(&k.add_ref(&Scalar::int(2))).unwrap();
    let s = phi.series(0, 6).unwrap();
    let mut c = Scalar::one();
    for m in 0..=6 {
        assert_eq!(s.coeffs[m], vec![c.clone()], "order {m}");
        c = c.mul_ref(&beta.add_ref(&Scalar::int(m as i64))).div_ref(&Scalar::int(m as i64 + 1)).unwrap();
    }
    let d1 = conformal_weight(1, &k).unwrap();
    assert_eq!(s.exponents, (d1.mul_ref(&Scalar::int(-2)), Scalar::zero()));
}

#[test]
fn kz_resonance() {
    // at k = 0, Δ(2) − Δ(0) = 1 and the α = 0 solution hits the α = 2 exponent
    let (phi, _) = kz_channels([1, 1, 1, 1], &Scalar::zero()).unwrap();
    assert_eq!(phi.series(0, 3), Err(Error::Resonance(1)));
    assert!(phi.series(1, 3).is_ok());
    assert!(kz_channels([1, 1, 0, 1], &Scalar::k()).is_err());
}

#[test]
fn pairing_is_constant() {
    let r = pairing_constancy(2, &Scalar::k(), 4).unwrap();
    for x in &r.results {
        assert!(x.passed(), "{} {:?}", x.id, x.witness);
        assert!(x.checked > 0);
    }
    // 66 ordered pairs of solutions, orders 0..=4
    assert_eq!(r.get("pairing-constant").unwrap().checked, 66 * 5);
}

#[test]
fn triple_products() {
    let k = Scalar::k();
    let e = TripleEngine::new(&k, 3);
    let one = regfun::one();
    let c = regfun::coord(2, 1);
    for d in regfun::basis_upto(1) {
        let r = e.triple(&one, &one, &c, d).unwrap();
        assert!(r.passed());
        assert_eq!(r.series[0], c.coeff(&d));
    }
    let (a, b) = (regfun::coord(1, 1), regfun::coord(2, 2));
    let mut c = regfun::coord(1, 2);
    c.add_scaled(&RegFun::basis((1, 0, 0)), &Scalar::int(3));
    let mut nonzero = 0;
    for d in regfun::basis_upto(3) {
        let r = e.triple(&a, &b, &c, d).unwrap();
        assert!(r.passed(), "{d:?}");
        nonzero += usize::from(!r.expected.is_zero());
    }
    assert!(nonzero > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn omega_self_adjoint(cf in prop::collection::vec(-3i64..=3, 2), cg in prop::collection::vec(-3i64..=3, 2), w in 0usize..3) {
        let (phi, psi) = kz_channels([1, 1, 1, 1], &Scalar::k()).unwrap();
        let which = [Pair::P12, Pair::P13, Pair::P23][w];
        let f = phi.tensor(&cf.iter().map(|&x| Scalar::int(x)).collect::<Vec<_>>());
        let g = psi.tensor(&cg.iter().map(|&x| Scalar::int(x)).collect::<Vec<_>>());
        let r = |c: &KzChannel| { let r = c.reps(); [r[0].clone(), r[1].clone(), r[2].clone()] };
        let lhs = dual_hom_pairing(&hom_times_omega(&f, &r(&phi), which), &g).unwrap();
        let rhs = dual_hom_pairing(&f, &hom_times_omega(&g, &r(&psi), which)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hom_spaces_close_under_omega(ws in (0u32..=2, 0u32..=2, 0u32..=2, 0u32..=2)) {
        let ws = [ws.0, ws.1, ws.2, ws.3];
        let src = tensor_all(&irreps([ws[0], ws[1], ws[2]]));
        let n = hom_basis(&src, &Rep::irrep(ws[3])).len();
        match kz_channels(ws, &Scalar::k()) {
            Ok((phi, _)) => prop_assert_eq!(phi.basis.len(), n),
            Err(_) => prop_assert_eq!(n, 0),
        }
    }
}
