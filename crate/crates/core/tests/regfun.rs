use proptest::prelude::*;
use voawb_core::lie_core::build_sl2;
use voawb_core::linalg;
use voawb_core::regfun::*;
use voawb_core::scalar::Scalar;

fn basis2() -> Vec<FKey> {
    basis_upto(2)
}

fn small_fun() -> impl Strategy<Value = RegFun> {
    prop::collection::vec((0usize..14, -3i64..=3), 1..4).prop_map(|v| {
        let b = basis2();
        v.into_iter().map(|(i, c)| (b[i], Scalar::int(c))).collect()
    })
}

#[test]
fn product_matches_mirror() {
    let b = basis_upto(2);
    for x in &b {
        for y in &b {
            let (fx, fy) = (RegFun::basis(*x), RegFun::basis(*y));
            let p = mul(&fx, &fy, 4).unwrap();
            let m = to_mirror(&fx).mul(&to_mirror(&fy));
            assert_eq!(to_mirror(&p), m, "{x:?} {y:?}");
        }
    }
}

#[test]
fn decompose_examples() {
    let one_p = to_mirror(&one());
    assert_eq!(pw_decompose(&one_p).unwrap(), one());
    let x11 = coord(1, 1);
    let d = pw_decompose(&to_mirror(&x11)).unwrap();
    assert!(d.terms.keys().all(|k| k.0 == 1));
    let sq = mul(&x11, &x11, 4).unwrap();
    assert!(sq.terms.keys().all(|k| k.0 == 2));
    let p = mul(&x11, &coord(2, 2), 4).unwrap();
    let blocks: Vec<u32> = p.terms.keys().map(|k| k.0).collect();
    assert!(blocks.contains(&0) && blocks.contains(&2));
    assert_eq!(p.coeff(&(0, 0, 0)), Scalar::frac(1, 2));
    for k in basis_upto(3) {
        let f = RegFun::basis(k);
        assert_eq!(pw_decompose(&to_mirror(&f)).unwrap(), f);
    }
}

#[test]
fn fields_match_mirror_and_commute() {
    let g = build_sl2();
    for k in basis_upto(3) {
        let f = RegFun::basis(k);
        for i in 0..3 {
            for side in [Side::Left, Side::Right] {
                assert_eq!(to_mirror(&field(side, i, &f)), mirror_field(side, i, &to_mirror(&f)));
            }
            for j in 0..3 {
                assert_eq!(tau(i, &tau_r(j, &f)), tau_r(j, &tau(i, &f)));
                // bracket relations for both sides
                let mut br = RegFun::new();
                let mut brr = RegFun::new();
                for (kk, c) in g.bracket(i, j) {
                    br.add_scaled(&tau(kk, &f), &Scalar::from_nf(c.clone()));
                    brr.add_scaled(&tau_r(kk, &f), &Scalar::from_nf(c));
                }
                assert_eq!(tau(i, &tau(j, &f)).minus(&tau(j, &tau(i, &f))), br);
                assert_eq!(tau_r(i, &tau_r(j, &f)).minus(&tau_r(j, &tau_r(i, &f))), brr);
            }
        }
    }
}

#[test]
fn transition_identities() {
    let g = build_sl2();
    let a = transition_matrix().unwrap();
    for j in 0..3 {
        for k in 0..3 {
            let mut s1 = RegFun::new();
            let mut s2 = RegFun::new();
            for i in 0..3 {
                s1.add_assign(&mul(&a[i][j], &a[i][k], 4).unwrap());
                s2.add_assign(&mul(&a[j][i], &a[k][i], 4).unwrap());
            }
            let d = if j == k { one() } else { RegFun::new() };
            assert_eq!(s1, d);
            assert_eq!(s2, d);
        }
    }
    // τ_i(a^{jk}) = -C_{ipk} a^{jp},  τ_i^R(a^{jk}) = C_{ijq} a^{qk}
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let mut l = RegFun::new();
                let mut r = RegFun::new();
                for p in 0..3 {
                    l.add_scaled(&a[j][p], &g.cs(i, p, k).neg_ref());
                    r.add_scaled(&a[p][k], &g.cs(i, j, p));
                }
                assert_eq!(tau(i, &a[j][k]), l);
                assert_eq!(tau_r(i, &a[j][k]), r);
            }
        }
    }
    // τ_i = a^{ji} τ_j^R as operators
    for key in basis_upto(2) {
        let f = RegFun::basis(key);
        for i in 0..3 {
            let mut rhs = RegFun::new();
            for j in 0..3 {
                rhs.add_assign(&mul(&a[j][i], &tau_r(j, &f), 6).unwrap());
            }
            assert_eq!(tau(i, &f), rhs);
        }
    }
}

#[test]
fn form_properties() {
    // left and right invariance: (x·a, b) = -(a, x·b)
    let b = basis_upto(2);
    for x in &b {
        for y in &b {
            let (fx, fy) = (RegFun::basis(*x), RegFun::basis(*y));
            assert_eq!(form_a(&fx, &fy), form_a(&fy, &fx));
            for i in 0..3 {
                assert!(form_a(&tau(i, &fx), &fy).add_ref(&form_a(&fx, &tau(i, &fy))).is_zero());
                assert!(form_a(&tau_r(i, &fx), &fy).add_ref(&form_a(&fx, &tau_r(i, &fy))).is_zero());
            }
        }
    }
    // nondegenerate on each block
    for l in 0..=3u32 {
        let keys: Vec<FKey> = basis_upto(l).into_iter().filter(|k| k.0 == l).collect();
        let m: linalg::Matrix = keys
            .iter()
            .map(|x| keys.iter().map(|y| form_a(&RegFun::basis(*x), &RegFun::basis(*y))).collect())
            .collect();
        assert_eq!(linalg::rank(&m), keys.len());
    }
}

#[test]
fn cutoff_enforced() {
    let x = coord(1, 1);
    let sq = mul(&x, &x, 2).unwrap();
    assert!(matches!(mul(&sq, &x, 2), Err(voawb_core::Error::CutoffExceeded)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]
    #[test]
    fn ring_laws(a in small_fun(), b in small_fun(), c in small_fun()) {
        let ab = mul(&a, &b, 6).unwrap();
        prop_assert_eq!(&ab, &mul(&b, &a, 6).unwrap());
        prop_assert_eq!(mul(&ab, &c, 6).unwrap(), mul(&a, &mul(&b, &c, 6).unwrap(), 6).unwrap());
        prop_assert_eq!(form_a(&ab, &c), form_a(&b, &mul(&a, &c, 6).unwrap()));
        prop_assert_eq!(form_a(&a, &b), form_a(&one(), &ab));
        for i in 0..3 {
            let lhs = tau(i, &ab);
            let rhs = mul(&tau(i, &a), &b, 6).unwrap().plus(&mul(&a, &tau(i, &b), 6).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
