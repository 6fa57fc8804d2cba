use std::time::Instant;

use voawb_core::lie_core::{build_sl2, conformal_weight, Rep};
use voawb_core::linalg;
use voawb_core::scalar::{Nf, Scalar};
use voawb_core::weyl::{virasoro_check, WVec, WeylModule};

fn module(n: u32, level: Scalar, cap: usize) -> WeylModule {
    WeylModule::new(&build_sl2(), Rep::irrep(n), level, cap)
}

#[test]
fn affine_commutators_hold() {
    let md = module(1, Scalar::k(), 4);
    let g = build_sl2();
    for d in 0..=2 {
        for key in md.basis(d).unwrap() {
            let v = WVec::basis(key);
            for i in 0..3u8 {
                for j in 0..3u8 {
                    for m in -1..=2 {
                        for n in -1..=2 {
                            let lhs = md
                                .act(i, m, &md.act(j, n, &v).unwrap())
                                .unwrap()
                                .minus(&md.act(j, n, &md.act(i, m, &v).unwrap()).unwrap());
                            let mut rhs = WVec::new();
                            for (k, c) in g.bracket(i as usize, j as usize) {
                                rhs.add_scaled(&md.act(k as u8, m + n, &v).unwrap(), &Scalar::from_nf(c));
                            }
                            if m + n == 0 && i == j {
                                rhs.add_scaled(&v, &Scalar::k().mul_ref(&Scalar::int(m as i64)));
                            }
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn virasoro_vacuum_n4() {
    let t = Instant::now();
    let md = module(0, Scalar::k(), 4);
    let rep = virasoro_check(&md).unwrap();
    assert!(rep.failure.is_none(), "{:?}", rep.failure);
    let k = Scalar::k();
    assert_eq!(rep.central_charge, k.mul_ref(&Scalar::int(3)).div_ref(&k.add_ref(&Scalar::int(2))).unwrap());
    eprintln!("virasoro N=4: {} checks in {:?}", rep.checked, t.elapsed());
}

#[test]
fn virasoro_v1_n3() {
    let md = module(1, Scalar::k(), 3);
    assert!(virasoro_check(&md).unwrap().failure.is_none());
}

#[test]
fn l_commutator_with_modes() {
    let md = module(1, Scalar::k(), 4);
    for d in 0..=2 {
        for key in md.basis(d).unwrap() {
            let v = WVec::basis(key);
            for m in -1..=1 {
                for n in -1..=2 {
                    for i in 0..3u8 {
                        let lhs = md
                            .sugawara(m, &md.act(i, n, &v).unwrap())
                            .unwrap()
                            .minus(&md.act(i, n, &md.sugawara(m, &v).unwrap()).unwrap());
                        let rhs = md.act(i, m + n, &v).unwrap().scaled(&Scalar::int(-n as i64));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}

#[test]
fn l1_lm1_on_vacuum() {
    let md = module(0, Scalar::k(), 3);
    for d in 0..=2 {
        for key in md.basis(d).unwrap() {
            let v = WVec::basis(key);
            let a = md.sugawara(1, &md.sugawara(-1, &v).unwrap()).unwrap();
            let b = md.sugawara(-1, &md.sugawara(1, &v).unwrap()).unwrap();
            assert_eq!(a.minus(&b), md.sugawara(0, &v).unwrap().scaled(&Scalar::int(2)));
        }
    }
    let top = md.top(0);
    assert!(md.sugawara(1, &top).unwrap().is_zero());
    let delta = conformal_weight(0, &Scalar::k()).unwrap();
    assert!(delta.is_zero());
}

#[test]
fn contragredient_adjoint_and_gram() {
    let md = module(0, Scalar::k(), 3);
    let dual = WeylModule::new(&build_sl2(), Rep::irrep(0).dual(), Scalar::k(), 3);
    for key in md.basis(1).unwrap() {
        let v = WVec::basis(key);
        for dk in dual.basis(2).unwrap() {
            let u = WVec::basis(dk);
            for i in 0..3u8 {
                let a = dual.pair(&dual.act(i, 1, &u).unwrap(), &md, &v).unwrap();
                let b = dual.pair(&u, &md, &md.act(i, -1, &v).unwrap()).unwrap();
                assert!(a.add_ref(&b).is_zero());
            }
        }
    }
    let gm = md.gram(&dual, 2).unwrap();
    let det = linalg::det(&gm);
    assert!(!det.is_zero());
    assert!(det.is_generic());
}

#[test]
fn singular_vectors() {
    let t = Instant::now();
    let formal = module(0, Scalar::k(), 4);
    for n in 1..=4 {
        assert!(formal.find_singular(n).unwrap().is_empty(), "degree {n}");
    }
    eprintln!("formal singular search N=4: {:?}", t.elapsed());
    let g = build_sl2();
    let e = &g.ehf_in_tau()[0];
    let at1 = module(0, Scalar::int(1), 2);
    assert!(at1.find_singular(1).unwrap().is_empty());
    let sing = at1.find_singular(2).unwrap();
    // e(-1)^2 1 has h-weight 4, so its g-orbit is the 5-dimensional irrep
    assert_eq!(sing.len(), 5);
    let e2 = at1.act_combo(e, -1, &at1.act_combo(e, -1, &at1.top(0)).unwrap()).unwrap();
    let mut fam = sing.clone();
    fam.push(e2.clone());
    assert_eq!(linalg::span_rank(&fam), 5);
    for v in &sing {
        for i in 0..3u8 {
            let w = at1.act(i, 0, v).unwrap();
            let mut f2 = sing.clone();
            f2.push(w);
            assert_eq!(linalg::span_rank(&f2), 5);
        }
    }
    let at2 = module(0, Scalar::int(2), 3);
    let s3 = at2.find_singular(3).unwrap();
    let e3 = at2.act_combo(e, -1, &e2_at(&at2, e)).unwrap();
    let r = linalg::span_rank(&s3);
    let mut fam3 = s3.clone();
    fam3.push(e3);
    assert!(r > 0);
    assert_eq!(linalg::span_rank(&fam3), r);
    let _ = Nf::one();
}

fn e2_at(md: &WeylModule, e: &[Scalar]) -> WVec {
    md.act_combo(e, -1, &md.act_combo(e, -1, &md.top(0)).unwrap()).unwrap()
}
