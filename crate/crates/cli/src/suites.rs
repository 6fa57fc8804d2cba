//! The named check suites. Each suite appends records; an error inside one
//! step becomes a failing record and the suite carries on.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use voawb_core::algebroid::conformal::extend_conformal;
use voawb_core::algebroid::from_envelope::{canonical_splitting, truncate_from_envelope};
use voawb_core::algebroid::truncated::TruncatedVA;
use voawb_core::algebroid::{
    build_algebroid, check_axioms, frame_is_zero, frame_sub, resolve_c_variant, AlgebroidData, AxiomReport, Span,
    DEFAULT_VARIANT,
};
use voawb_core::envelope::analysis::{char_check, singular_block_match};
use voawb_core::envelope::Envelope;
use voawb_core::intertwine::{pairing_constancy, TripleEngine};
use voawb_core::lie_core::{build_sl2, casimir, conformal_weight, Rep};
use voawb_core::linalg;
use voawb_core::regfun::{self, RegFun, Side};
use voawb_core::weyl::{virasoro_check_modes, WVec, WeylModule};
use voawb_core::zhu::zhu_checks;
use voawb_core::{Result, Scalar};

use crate::config::RunConfig;
use crate::report::{Record, Status};

pub struct SuiteDef {
    pub name: &'static str,
    /// Needs the formal level; skipped at a numeric one.
    pub generic: bool,
    pub about: &'static str,
    run: fn(&mut Ctx),
}

pub const SUITES: &[SuiteDef] = &[
    SuiteDef { name: "lie", generic: false, about: "sl2 structure constants and Casimirs", run: lie },
    SuiteDef { name: "weyl-virasoro", generic: false, about: "Sugawara Virasoro relations on V_0 and V_1", run: weyl },
    SuiteDef {
        name: "regfun",
        generic: false,
        about: "Peter-Weyl product, frames, transition matrix",
        run: regfun_suite,
    },
    SuiteDef {
        name: "algebroid-axioms",
        generic: false,
        about: "vertex algebroid, 1-truncated and conformal axioms",
        run: algebroid,
    },
    SuiteDef {
        name: "envelope-identities",
        generic: true,
        about: "mode algebra, conformal vector, bar form",
        run: envelope,
    },
    SuiteDef {
        name: "char",
        generic: false,
        about: "graded dimensions against the Weyl module decomposition",
        run: char_suite,
    },
    SuiteDef { name: "generate", generic: true, about: "B generated from the top levels", run: generate },
    SuiteDef {
        name: "singular",
        generic: false,
        about: "singular vectors at k = 1, 2 and their partners",
        run: singular,
    },
    SuiteDef { name: "kz", generic: true, about: "KZ series and constancy of the pairing", run: kz },
    SuiteDef { name: "triple", generic: true, about: "top-level triple products against a·b·c", run: triple },
    SuiteDef { name: "zhu", generic: true, about: "Zhu algebra against differential operators", run: zhu },
    SuiteDef { name: "form", generic: true, about: "invariant bilinear form", run: form },
];

pub fn find(name: &str) -> Option<&'static SuiteDef> {
    SUITES.iter().find(|d| d.name == name)
}

struct Ctx<'a> {
    cfg: &'a RunConfig,
    level: Scalar,
    suite: &'static str,
    out: Vec<Record>,
}

impl Ctx<'_> {
    fn push(&mut self, id: &str, anchor: &str, status: Status, witness: Option<String>, ms: u64) {
        let ms = if self.cfg.timings { ms } else { 0 };
        self.out.push(Record { suite: self.suite.into(), id: id.into(), anchor: anchor.into(), status, witness, ms });
    }

    /// One check; `f` returns a witness on failure.
    fn step(&mut self, id: &str, anchor: &str, f: impl FnOnce() -> Result<Option<String>>) {
        let t = Instant::now();
        let r = f();
        let ms = t.elapsed().as_millis() as u64;
        match r {
            Ok(None) => self.push(id, anchor, Status::Pass, None, ms),
            Ok(Some(w)) => self.push(id, anchor, Status::Fail, Some(w), ms),
            Err(e) => self.push(id, anchor, Status::Fail, Some(format!("error: {e}")), ms),
        }
    }

    /// One record per axiom of the report, ids prefixed.
    fn axioms(&mut self, prefix: &str, anchor: &str, f: impl FnOnce() -> Result<AxiomReport>) {
        let t = Instant::now();
        let r = f();
        let ms = t.elapsed().as_millis() as u64;
        let rep = match r {
            Ok(rep) => rep,
            Err(e) => {
                return self.push(prefix.trim_end_matches('.'), anchor, Status::Fail, Some(format!("error: {e}")), ms)
            }
        };
        for a in &rep.results {
            let id = format!("{prefix}{}", a.id);
            if a.checked == 0 {
                self.push(&id, anchor, Status::Skip, Some("nothing to check".into()), ms);
            } else if a.passed() {
                self.push(&id, anchor, Status::Pass, None, ms);
            } else {
                self.push(&id, anchor, Status::Fail, a.witness.clone(), ms);
            }
        }
    }
}

fn fail_if(bad: bool, w: impl FnOnce() -> String) -> Option<String> {
    bad.then(w)
}

pub fn run_suite(def: &SuiteDef, cfg: &RunConfig) -> Vec<Record> {
    let mut cx = Ctx { cfg, level: cfg.level.scalar(), suite: def.name, out: Vec::new() };
    if def.generic && !cx.level.is_generic() {
        eprintln!("warning: suite {} needs the formal level; skipped at k = {}", def.name, cfg.level);
        cx.push("level", "generic level", Status::Skip, Some(format!("k = {} is not generic", cfg.level)), 0);
        return cx.out;
    }
    let run = def.run;
    let mut out = Vec::new();
    let res = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| {
        run(&mut cx);
        std::mem::take(&mut cx.out)
    }));
    match res {
        Ok(records) => out.extend(records),
        Err(p) => {
            // keep whatever the suite recorded before it panicked
            out.append(&mut cx.out);
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            out.push(Record {
                suite: def.name.into(),
                id: "panic".into(),
                anchor: "suite aborted".into(),
                status: Status::Fail,
                witness: msg,
                ms: 0,
            });
        }
    }
    out
}

// ---- lie

fn lie(cx: &mut Ctx) {
    let g = regfun::sl2();
    let c = |i, j, k| g.cs(i, j, k);
    cx.step("antisymmetry", "totally antisymmetric structure constants", || {
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    if c(i, j, k) != c(j, i, k).neg_ref() || c(i, j, k) != c(j, k, i) {
                        return Ok(Some(format!("C({i},{j},{k})")));
                    }
                }
            }
        }
        Ok(None)
    });
    cx.step("jacobi", "Jacobi identity", || {
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        let mut s = Scalar::zero();
                        for m in 0..3 {
                            s = s.add_ref(&c(i, j, m).mul_ref(&c(m, k, l)));
                            s = s.add_ref(&c(j, k, m).mul_ref(&c(m, i, l)));
                            s = s.add_ref(&c(k, i, m).mul_ref(&c(m, j, l)));
                        }
                        if !s.is_zero() {
                            return Ok(Some(format!("({i},{j},{k}) component {l}")));
                        }
                    }
                }
            }
        }
        Ok(None)
    });
    cx.step("killing-normalization", "sum C_ipq C_jqp = 2 h^v delta_ij", || {
        let two_h = g.hv().mul_ref(&Scalar::int(2));
        if two_h != Scalar::int(4) {
            return Ok(Some(format!("2h^v = {two_h}")));
        }
        for i in 0..3 {
            for j in 0..3 {
                let mut s = Scalar::zero();
                for p in 0..3 {
                    for q in 0..3 {
                        s = s.add_ref(&c(i, p, q).mul_ref(&c(j, q, p)));
                    }
                }
                let want = if i == j { two_h.clone() } else { Scalar::zero() };
                if s != want {
                    return Ok(Some(format!("({i},{j}) = {s}")));
                }
            }
        }
        Ok(None)
    });
    let max = cx.cfg.max_weight;
    cx.step("casimir", "Casimir acts by n(n+2)/2 on V_n", || {
        for n in 0..=max {
            let m = casimir(g, &Rep::irrep(n));
            let want = Scalar::frac((n * (n + 2)) as i64, 2);
            for (i, row) in m.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    if *x != if i == j { want.clone() } else { Scalar::zero() } {
                        return Ok(Some(format!("V_{n} entry ({i},{j})")));
                    }
                }
            }
        }
        Ok(None)
    });
}

// ---- weyl-virasoro

fn weyl(cx: &mut Ctx) {
    let g = build_sl2();
    let level = cx.level.clone();
    let cap = cx.cfg.max_degree;
    if level.add_ref(&g.hv()).is_zero() {
        return cx.step("critical-level", "Sugawara construction needs k + h^v != 0", || {
            Ok(Some(format!("k = {level} is critical")))
        });
    }
    cx.step("central-charge", "Sugawara central charge 3k/(k+2)", || {
        let md = WeylModule::new(&g, Rep::irrep(0), level.clone(), 0);
        let want = level.mul_ref(&Scalar::int(3)).div_ref(&level.add_ref(&Scalar::int(2)))?;
        Ok(fail_if(md.central_charge() != want, || format!("c = {}", md.central_charge())))
    });
    cx.step("delta-1", "conformal weight of V_1 is 3/(4(k+2))", || {
        let want = Scalar::int(3).div_ref(&level.add_ref(&Scalar::int(2)).mul_ref(&Scalar::int(4)))?;
        let got = conformal_weight(1, &level)?;
        Ok(fail_if(got != want, || format!("Δ(1) = {got}")))
    });
    for lam in [0u32, 1] {
        cx.step(&format!("virasoro-v{lam}"), "Virasoro relations for the Sugawara modes", || {
            let md = WeylModule::new(&g, Rep::irrep(lam), level.clone(), cap);
            let r = virasoro_check_modes(&md, 2)?;
            Ok(r.failure.map(|(m, n, k)| format!("[L_{m}, L_{n}] on {k:?}")))
        });
        cx.step(&format!("l0-v{lam}"), "L_0 acts by n + Δ(λ) in degree n", || {
            let md = WeylModule::new(&g, Rep::irrep(lam), level.clone(), cap);
            let delta = conformal_weight(lam, &level)?;
            for d in 0..=cap {
                let e = delta.add_ref(&Scalar::int(d as i64));
                for key in md.basis(d)? {
                    let v = WVec::basis(key.clone());
                    if md.sugawara(0, &v)? != v.scaled(&e) {
                        return Ok(Some(format!("{key:?}")));
                    }
                }
            }
            Ok(None)
        });
    }
}

// ---- regfun

fn regfun_suite(cx: &mut Ctx) {
    use regfun::{basis_upto, eval_identity, field, mirror_field, mul, tau, tau_r, to_mirror, transition_matrix};
    let g = build_sl2();
    cx.step("product-oracle", "Peter-Weyl product equals the polynomial product", || {
        let b = basis_upto(2);
        for x in &b {
            for y in &b {
                let (fx, fy) = (RegFun::basis(*x), RegFun::basis(*y));
                if to_mirror(&mul(&fx, &fy, 4)?) != to_mirror(&fx).mul(&to_mirror(&fy)) {
                    return Ok(Some(format!("{x:?} {y:?}")));
                }
            }
        }
        Ok(None)
    });
    cx.step("fields-mirror", "left and right invariant fields agree with the coordinate fields", || {
        for k in basis_upto(2) {
            let f = RegFun::basis(k);
            for i in 0..3 {
                for side in [Side::Left, Side::Right] {
                    if to_mirror(&field(side, i, &f)) != mirror_field(side, i, &to_mirror(&f)) {
                        return Ok(Some(format!("{side:?} τ{i} on {k:?}")));
                    }
                }
            }
        }
        Ok(None)
    });
    cx.step("field-brackets", "left and right fields commute and close under the bracket", || {
        for k in basis_upto(2) {
            let f = RegFun::basis(k);
            for i in 0..3 {
                for j in 0..3 {
                    let (mut br, mut brr) = (RegFun::new(), RegFun::new());
                    for (kk, c) in g.bracket(i, j) {
                        br.add_scaled(&tau(kk, &f), &Scalar::from_nf(c.clone()));
                        brr.add_scaled(&tau_r(kk, &f), &Scalar::from_nf(c));
                    }
                    let ok = tau(i, &tau_r(j, &f)) == tau_r(j, &tau(i, &f))
                        && tau(i, &tau(j, &f)).minus(&tau(j, &tau(i, &f))) == br
                        && tau_r(i, &tau_r(j, &f)).minus(&tau_r(j, &tau_r(i, &f))) == brr;
                    if !ok {
                        return Ok(Some(format!("({i},{j}) on {k:?}")));
                    }
                }
            }
        }
        Ok(None)
    });
    let a = transition_matrix();
    let a = match a {
        Ok(a) => a,
        Err(e) => return cx.step("transition-matrix", "transition matrix", || Err(e)),
    };
    cx.step("transition-identity", "a^{ij}(1) = -δ_ij", || {
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { Scalar::int(-1) } else { Scalar::zero() };
                if eval_identity(&a[i][j]) != want {
                    return Ok(Some(format!("a^({i}{j})(1)")));
                }
            }
        }
        Ok(None)
    });
    cx.step("transition-orthogonal", "a is orthogonal", || {
        for j in 0..3 {
            for k in 0..3 {
                let (mut s1, mut s2) = (RegFun::new(), RegFun::new());
                for i in 0..3 {
                    s1.add_assign(&mul(&a[i][j], &a[i][k], 4)?);
                    s2.add_assign(&mul(&a[j][i], &a[k][i], 4)?);
                }
                let d = if j == k { regfun::one() } else { RegFun::new() };
                if s1 != d || s2 != d {
                    return Ok(Some(format!("({j},{k})")));
                }
            }
        }
        Ok(None)
    });
    cx.step("transition-derivatives", "τ_i a^{jk} and τ^R_i a^{jk} in terms of a", || {
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let (mut l, mut r) = (RegFun::new(), RegFun::new());
                    for p in 0..3 {
                        l.add_scaled(&a[j][p], &g.cs(i, p, k).neg_ref());
                        r.add_scaled(&a[p][k], &g.cs(i, j, p));
                    }
                    if tau(i, &a[j][k]) != l || tau_r(i, &a[j][k]) != r {
                        return Ok(Some(format!("i={i} a^({j}{k})")));
                    }
                }
            }
        }
        Ok(None)
    });
    cx.step("transition-frames", "τ_i = a^{ji} τ^R_j", || {
        for key in basis_upto(2) {
            let f = RegFun::basis(key);
            for i in 0..3 {
                let mut rhs = RegFun::new();
                for j in 0..3 {
                    rhs.add_assign(&mul(&a[j][i], &tau_r(j, &f), 6)?);
                }
                if tau(i, &f) != rhs {
                    return Ok(Some(format!("τ{i} on {key:?}")));
                }
            }
        }
        Ok(None)
    });
}

// ---- algebroid-axioms

fn algebroid(cx: &mut Ctx) {
    let alg = match build_algebroid(cx.level.clone()) {
        Ok(a) => a,
        Err(e) => return cx.step("build", "forced extension of γ, ⟨,⟩, c", || Err(e)),
    };
    let lam = cx.cfg.max_weight.min(2);
    cx.axioms("", "vertex algebroid axioms", || {
        Ok(check_axioms(&alg, alg.variant, &Span::standard(lam), &Span::small()))
    });
    let level = cx.level.clone();
    cx.step("c-variant", "reading of the c-extension axiom", || {
        let span = Span::small();
        let tri = Span { functions: vec![], coeffs: span.coeffs.clone() };
        let passing: Vec<_> =
            resolve_c_variant(&level, &span, &tri).into_iter().filter(|(_, r)| r.all_pass()).map(|(v, _)| v).collect();
        Ok(fail_if(passing != vec![DEFAULT_VARIANT], || format!("passing readings: {passing:?}")))
    });
    let t = TruncatedVA::new(&alg);
    cx.axioms("truncated.", "1-truncated vertex algebra axioms", || {
        Ok(t.check_axioms(&Span::standard(1), &Span::small()))
    });
    cx.axioms("truncated-conformal.", "1-truncated conformal algebra axioms", || {
        Ok(t.check_conformal_axioms(&Span::standard(1), &Span::small()))
    });
    let n = cx.cfg.max_degree;
    cx.axioms("graded.", "graded conformal algebra axioms", || {
        let c = extend_conformal(TruncatedVA::new(&alg), n);
        let mut fns = Span::standard(1).functions;
        fns.truncate(3);
        let tri = Span { functions: fns, coeffs: Span::small().coeffs };
        c.check_axioms(&Span::standard(1), &tri, 29)
    });
    cx.step("from-envelope", "algebroid of the envelope with the canonical splitting", || {
        let env = Envelope::new(level.clone(), 3, 6)?;
        let ea = truncate_from_envelope(&env, canonical_splitting())?;
        let span = Span::standard(1);
        for (lx, x) in span.fields() {
            for (la, a) in &span.functions {
                if !frame_is_zero(&frame_sub(&ea.try_gamma(a, &x)?, &alg.gamma(a, &x))) {
                    return Ok(Some(format!("γ({la}, {lx})")));
                }
            }
            for (ly, y) in span.fields() {
                if ea.try_pair(&x, &y)? != alg.pair_tt(&x, &y) {
                    return Ok(Some(format!("⟨{lx}, {ly}⟩")));
                }
                if !frame_is_zero(&frame_sub(&ea.try_c(&x, &y)?, &alg.c(&x, &y))) {
                    return Ok(Some(format!("c({lx}, {ly})")));
                }
            }
        }
        Ok(None)
    });
}

// ---- envelope-identities, form

fn envelope_at(cx: &mut Ctx, n: usize, lam: u32) -> Option<Envelope> {
    match Envelope::new(cx.level.clone(), n, lam) {
        Ok(e) => Some(e),
        Err(e) => {
            cx.step("envelope", "envelope construction", || Err(e));
            None
        }
    }
}

fn envelope(cx: &mut Ctx) {
    let Some(env) = envelope_at(cx, cx.cfg.max_degree, cx.cfg.max_weight) else { return };
    let s = env.samples();
    let sub: Vec<_> = [0, 1, 2, 4].iter().map(|&i| s[i].clone()).collect();
    cx.axioms("", "mode commutators", || env.commutator_checks(&sub, &[-1, 0, 1]));
    cx.axioms("", "conformal vector", || env.conformal_checks(&s));
    cx.axioms("", "bar form and ρ", || env.bar_checks(&s));
}

fn form(cx: &mut Ctx) {
    let Some(env) = envelope_at(cx, cx.cfg.max_degree, cx.cfg.max_weight) else { return };
    let s = env.samples();
    cx.axioms("", "invariant bilinear form", || env.form_checks(&s));
    cx.axioms("", "pairing of A with functions and forms", || env.pairing_checks());
    let (n, lam) = (cx.cfg.max_degree.min(2), cx.cfg.max_weight.min(2));
    // nondegeneracy is certified at one specialization of k
    cx.step("gram-nondegenerate", "nonzero Gram determinants on the blocks", || {
        let ec = Envelope::new(Scalar::from_nf(linalg::certificate_level()), n, lam.max(4))?;
        for l in 0..=lam {
            for d in 0..=n {
                let (dim, rank) = ec.gram_rank(l, d)?;
                if dim != rank {
                    return Ok(Some(format!("λ={l} n={d}: rank {rank} of {dim}")));
                }
            }
        }
        Ok(None)
    });
}

// ---- char, generate, singular

fn char_suite(cx: &mut Ctx) {
    for r in char_check(cx.cfg.max_degree, cx.cfg.max_weight) {
        cx.step(&format!("dim-l{}-n{}", r.lambda, r.n), "graded dimension of the λ block", || {
            Ok(fail_if(r.enumerated != r.predicted, || format!("{} != {}", r.enumerated, r.predicted)))
        });
    }
}

fn generate(cx: &mut Ctx) {
    let (n, lam) = (cx.cfg.max_degree.min(2), cx.cfg.max_weight.min(2));
    let Some(env) = envelope_at(cx, n, 8) else { return };
    match env.generate_from_top(n, lam) {
        Ok(rows) => {
            for r in rows {
                cx.step(&format!("gen-l{}-n{}", r.lambda, r.n), "B generated by the top levels", || {
                    Ok(fail_if(!r.solved || r.rank != r.dim_b, || format!("rank {} of {}", r.rank, r.dim_b)))
                });
            }
        }
        Err(e) => cx.step("generate", "B generated by the top levels", || Err(e)),
    }
}

fn singular(cx: &mut Ctx) {
    let g = build_sl2();
    let e = g.ehf_in_tau()[0].clone();
    for k in [1i64, 2] {
        cx.step(&format!("find-singular-k{k}"), "e(-1)^(k+1)1 is singular in V_0 at level k", || {
            let deg = k as usize + 1;
            let md = WeylModule::new(&g, Rep::irrep(0), Scalar::int(k), deg);
            for d in 1..deg {
                if !md.find_singular(d)?.is_empty() {
                    return Ok(Some(format!("unexpected singular vector in degree {d}")));
                }
            }
            let sing = md.find_singular(deg)?;
            let mut v = md.top(0);
            for _ in 0..deg {
                v = md.act_combo(&e, -1, &v)?;
            }
            let r = linalg::span_rank(&sing);
            let mut fam = sing.clone();
            fam.push(v);
            Ok(fail_if(r == 0 || linalg::span_rank(&fam) != r, || format!("rank {r}, e(-1)^{deg}1 outside")))
        });
        cx.step(&format!("block-match-k{k}"), "singular block X and its partner Y at the dual level", || {
            let m = singular_block_match(&Scalar::int(k), 0, k as usize + 1)?;
            if m.len() != 1 {
                return Ok(Some(format!("{} singular blocks", m.len())));
            }
            Ok(fail_if(!m[0].passed(0), || format!("{:?}", (m[0].mu, m[0].dim_y, m[0].y_singular, m[0].equal))))
        });
    }
    cx.step("invariants-are-functions", "the fixed space S is A in degrees 1 and 2", || {
        let env = Envelope::new(Scalar::k(), 2, 8)?;
        for lam in 0..=2u32 {
            if env.invariant_space(lam, 0)?.len() != (lam as usize + 1).pow(2) {
                return Ok(Some(format!("λ={lam} n=0")));
            }
            for n in 1..=2 {
                if !env.invariant_space(lam, n)?.is_empty() {
                    return Ok(Some(format!("λ={lam} n={n}")));
                }
            }
        }
        Ok(None)
    });
}

// ---- kz, triple, zhu

fn kz(cx: &mut Ctx) {
    let (w, level, order) = (cx.cfg.max_weight.min(2), cx.level.clone(), cx.cfg.order);
    cx.axioms("", "KZ series and constancy of the pairing", || pairing_constancy(w, &level, order));
}

fn triple(cx: &mut Ctx) {
    let engine = TripleEngine::new(&cx.level, cx.cfg.order);
    let ones = regfun::basis_upto(1).into_iter().filter(|k| k.0 == 1).collect::<Vec<_>>();
    let ds = regfun::basis_upto(3);
    let mut rng = ChaCha8Rng::seed_from_u64(cx.cfg.seed);
    for _ in 0..4 {
        let abc: Vec<_> = (0..3).map(|_| *ones.choose(&mut rng).expect("λ=1 block")).collect();
        let id = format!(
            "E{}{}{}*E{}{}{}*E{}{}{}",
            abc[0].0, abc[0].1, abc[0].2, abc[1].0, abc[1].1, abc[1].2, abc[2].0, abc[2].1, abc[2].2
        );
        cx.step(&id, "(d*, Y(a,z1)Y(b,z2)c) = (d*, abc), symmetric in a, b", || {
            let f = |k| RegFun::basis(k);
            for d in &ds {
                let r = engine.triple(&f(abc[0]), &f(abc[1]), &f(abc[2]), *d)?;
                if !r.passed() {
                    return Ok(Some(format!("d = {d:?}")));
                }
            }
            Ok(None)
        });
    }
}

fn zhu(cx: &mut Ctx) {
    let Some(env) = envelope_at(cx, cx.cfg.max_degree.max(6), cx.cfg.max_weight.max(6)) else { return };
    cx.axioms("", "Zhu algebra", || zhu_checks(&env, 50, 25));
}
