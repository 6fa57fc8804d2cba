use proptest::prelude::*;
use voawb_core::envelope::analysis::{b_basis, char_check, singular_block_match};
use voawb_core::envelope::*;
use voawb_core::linalg;
use voawb_core::regfun;
use voawb_core::Scalar;

fn env() -> Envelope {
    Envelope::new(Scalar::k(), 4, 12).unwrap()
}

fn assert_report(r: voawb_core::algebroid::AxiomReport) {
    for x in &r.results {
        assert!(x.passed(), "{} failed at {:?}", x.id, x.witness);
        assert!(x.checked > 0, "{} checked nothing", x.id);
    }
}

fn same_span(a: &[EVec], b: &[EVec]) -> bool {
    let mut both = a.to_vec();
    both.extend(b.iter().cloned());
    let r = linalg::span_rank(&both);
    r == linalg::span_rank(a) && r == linalg::span_rank(b)
}

#[test]
fn mode_examples() {
    let e = env();
    let vac = vacuum();
    for i in 0..3 {
        for j in 0..3 {
            let want = if i == j { vac.clone() } else { EVec::new() };
            assert_eq!(e.tau(i, 1, &omega_state(j)).unwrap(), want);
            // [τ̄_i(1), τ̄_j(−1)]1 = k̄ δ_ij 1
            let want = if i == j { vac.scaled(&e.kbar) } else { EVec::new() };
            assert_eq!(e.bar(i, 1, &e.bar(j, -1, &vac).unwrap()).unwrap(), want);
        }
    }
    for i in 0..3 {
        // τ̄_i(−1)1 = τ_j(−1)a^{ij} + k̄ ω̃_i
        let mut rhs = e.omega_tilde_state(i).scaled(&e.kbar);
        for j in 0..3 {
            rhs.add_assign(&e.tau(j, -1, &fun_state(e.a(i, j))).unwrap());
        }
        assert_eq!(e.bar(i, -1, &vac).unwrap(), rhs);
        // τ_i(−1)1 − τ̄_j(−1)a^{ji} = k ω_i
        let mut lhs = tau_state(i);
        for j in 0..3 {
            lhs.sub_assign(&e.bar(j, -1, &fun_state(e.a(j, i))).unwrap());
        }
        assert_eq!(lhs, omega_state(i).scaled(&Scalar::k()));
    }
    // a_(−1) b = ab
    let (a, b) = (regfun::coord(1, 2), regfun::coord(2, 1));
    let ab = e.state_mode(&fun_state(&a), -1, &fun_state(&b)).unwrap();
    assert_eq!(ab, fun_state(&regfun::mul_uncapped(&a, &b)));
    // a_(n) and ω_(n), n ≥ 0, kill B
    let bvec = b_elem(&a, &[(0, 1), (1, 2)]);
    for n in 0..3 {
        assert!(e.fun(&b, n, &bvec).unwrap().is_zero());
        assert!(e.omega(0, n, &bvec).unwrap().is_zero());
    }
    assert!(e.tau(0, -5, &vac).is_err());
}

#[test]
fn vertex_operator_examples() {
    let e = env();
    let samples = e.samples();
    for (_, v) in samples.iter().take(5) {
        for n in -2..=2 {
            let got = e.state_mode(&vacuum(), n, v).unwrap();
            let want = if n == -1 { v.clone() } else { EVec::new() };
            assert_eq!(got, want);
            for i in 0..3 {
                assert_eq!(e.state_mode(&tau_state(i), n, v).unwrap(), e.tau(i, n, v).unwrap());
            }
        }
    }
}

#[test]
fn commutator_relations() {
    let e = env();
    let s = e.samples();
    let sub: Vec<_> = [0, 1, 2, 4].iter().map(|&i| s[i].clone()).collect();
    assert_report(e.commutator_checks(&sub, &[-1, 0, 1]).unwrap());
}

#[test]
fn conformal_vector() {
    let e = env();
    assert_report(e.conformal_checks(&e.samples()).unwrap());
}

#[test]
fn invariant_form() {
    let e = env();
    assert_report(e.form_checks(&e.samples()).unwrap());
    assert_report(e.pairing_checks().unwrap());
    // nondegeneracy, certified at one specialization of k
    let ec = Envelope::new(Scalar::from_nf(linalg::certificate_level()), 2, 4).unwrap();
    for lambda in 0..=2 {
        for n in 0..=2 {
            let (d, r) = ec.gram_rank(lambda, n).unwrap();
            assert_eq!(d, r, "λ={lambda} n={n}");
        }
    }
}

#[test]
fn bar_form_and_rho() {
    let e = env();
    assert_report(e.bar_checks(&e.samples()).unwrap());
    // b ∈ B is its own bar form
    let b = b_elem(&regfun::coord(1, 1), &[(0, 2)]);
    assert_eq!(e.to_bar_form(&b).unwrap(), b);
    // ρ(x(m)) b for m ≥ 0 is the ordinary action
    for m in 0..=2 {
        assert_eq!(e.rho(1, m, &b).unwrap(), e.tau(1, m, &b).unwrap());
    }
    // round trip on sampled degree-3 keys
    let e3 = Envelope::new(Scalar::k(), 3, 12).unwrap();
    let lower = e3.lower_basis(0, 3);
    let tops = b_basis(0, 3);
    let picks = lower.iter().step_by(7).chain(tops.iter().step_by(3)).cloned();
    for k in picks.chain(e3.full_basis(1, 1)) {
        let v = EVec::basis(k);
        let bf = e3.to_bar_form(&v).unwrap();
        let back = e3.unbar(&bf).unwrap();
        assert_eq!(back, v);
        assert_eq!(e3.to_bar_form(&back).unwrap(), bf);
    }
}

#[test]
fn t_map_examples() {
    let e = env();
    let a = regfun::coord(1, 2);
    assert_eq!(e.t_map(&fun_state(&a)).unwrap(), fun_state(&a));
    for i in 0..3 {
        let mut want = EVec::new();
        for j in 0..3 {
            let f = regfun::mul_uncapped(e.a(j, i), &a);
            for (k, c) in &f.terms {
                want.add_term((vec![(-1, j as u8)], *k, vec![]), c.clone());
            }
        }
        assert_eq!(e.t_map(&e.tau(i, -1, &fun_state(&a)).unwrap()).unwrap(), want);
    }
}

#[test]
fn invariant_space() {
    let e = Envelope::new(Scalar::k(), 2, 8).unwrap();
    for lambda in 0..=2 {
        assert_eq!(e.invariant_space(lambda, 0).unwrap().len(), (lambda as usize + 1).pow(2));
        for n in 1..=2 {
            if lambda == 2 && n == 2 {
                continue;
            }
            assert!(e.invariant_space(lambda, n).unwrap().is_empty(), "λ={lambda} n={n}");
        }
    }
    // at k = 1 the fixed space is the singular space
    let e1 = Envelope::new(Scalar::int(1), 2, 8).unwrap();
    let s = e1.invariant_space(0, 2).unwrap();
    let sing = e1.singular_space(0, 2).unwrap();
    assert_eq!(s.len(), 5);
    assert!(same_span(&s, &sing));
}

#[test]
fn characters() {
    let rows = char_check(3, 3);
    for r in &rows {
        assert_eq!(r.enumerated, r.predicted, "{r:?}");
    }
    let find = |l, n| rows.iter().find(|r| r.lambda == l && r.n == n).unwrap().predicted;
    assert_eq!(find(0, 2), 27);
    assert_eq!(find(0, 1), 6);
    for l in 0..=3 {
        assert_eq!(find(l, 0), ((l + 1) * (l + 1)) as u64);
    }
}

#[test]
fn generation_from_top() {
    let e = Envelope::new(Scalar::k(), 2, 8).unwrap();
    for r in e.generate_from_top(2, 1).unwrap() {
        assert!(r.solved && r.rank == r.dim_b, "{r:?}");
    }
    let a = fun_state(&regfun::coord(2, 2));
    assert_eq!(e.lift_from_top(&a, 1, 0).unwrap(), a);
    for r in 0..3 {
        let v = e.lift_from_top(&omega_state(r), 0, 1).unwrap();
        assert_eq!(e.top_component(&v).unwrap(), omega_state(r));
    }
}

#[test]
fn singular_blocks() {
    let m = singular_block_match(&Scalar::int(1), 0, 2).unwrap();
    assert_eq!(m.len(), 1);
    assert_eq!((m[0].degree, m[0].mu, m[0].dim_x), (2, 4, 5));
    assert!(m[0].passed(0));
    let m = singular_block_match(&Scalar::int(2), 0, 3).unwrap();
    assert_eq!(m.len(), 1);
    assert_eq!((m[0].degree, m[0].mu), (3, 6));
    assert!(m[0].passed(0));
    assert!(singular_block_match(&Scalar::k(), 0, 2).unwrap().is_empty());
}

fn small_state() -> impl Strategy<Value = EVec> {
    prop::collection::vec(-2i64..=2, 4).prop_map(|cs| {
        let fs = [regfun::one(), regfun::coord(1, 1), regfun::coord(1, 2), regfun::coord(2, 2)];
        let mut v = EVec::new();
        for (f, c) in fs.iter().zip(cs) {
            v.add_scaled(&b_elem(f, &[(0, 1)]), &Scalar::int(c));
        }
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]
    #[test]
    fn actions_commute(v in small_state(), i in 0usize..3, j in 0usize..3, m in -1i32..=1, n in -1i32..=1) {
        let e = Envelope::new(Scalar::k(), 3, 8).unwrap();
        let lr = e.tau(i, m, &e.bar(j, n, &v).unwrap()).unwrap();
        let rl = e.bar(j, n, &e.tau(i, m, &v).unwrap()).unwrap();
        prop_assert_eq!(lr, rl);
        let d = degree_of(&v).unwrap_or(0) as i64;
        prop_assert_eq!(e.virasoro(0, &v).unwrap(), v.scaled(&Scalar::int(d)));
    }

    #[test]
    fn form_is_symmetric(u in small_state(), v in small_state()) {
        let e = Envelope::new(Scalar::k(), 3, 8).unwrap();
        let w = e.tau(0, -1, &u).unwrap();
        let x = e.bar(2, -1, &v).unwrap();
        prop_assert_eq!(e.bilinear_form(&w, &x).unwrap(), e.bilinear_form(&x, &w).unwrap());
    }
}
