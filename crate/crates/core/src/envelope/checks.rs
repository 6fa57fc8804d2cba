//! Structural checks of the envelope: mode commutators, the two Sugawara-type forms of
//! the conformal vector, Virasoro relations, the invariant form and the bar form.

use super::form::jets;
use super::{b_elem, fun_state, omega_state, tau_state, vacuum, EKey, EVec, Envelope, Op, DIM};
use crate::algebroid::{Acc, AxiomReport};
use crate::error::{Error, Result};
use crate::linalg::{self, Lin};
use crate::regfun::{self, RegFun};
use crate::scalar::Scalar;

/// Treats running past the degree or block cutoff as "not checked".
fn soft<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::CutoffExceeded) | Err(Error::BlockCutoffExceeded) => Ok(None),
        Err(e) => Err(e),
    }
}

fn delta(a: bool) -> i64 {
    a as i64
}

impl Envelope {
    pub fn comm(&self, x: &Op, y: &Op, v: &EVec) -> Result<EVec> {
        let xy = self.apply(x, &self.apply(y, v)?)?;
        let yx = self.apply(y, &self.apply(x, v)?)?;
        Ok(xy.minus(&yx))
    }

    /// ϖ written through the left action and the forms.
    pub fn varpi(&self) -> Result<EVec> {
        let mut out = EVec::new();
        let mut quad = EVec::new();
        for j in 0..DIM {
            out.add_assign(&self.tau(j, -1, &omega_state(j))?);
            quad.add_assign(&self.omega(j, -1, &omega_state(j))?);
        }
        out.add_scaled(&quad, &self.kbar.mul_ref(&Scalar::frac(1, 2)));
        Ok(out)
    }

    /// ω̃_i = a^{ip} ω_p as a state.
    pub fn omega_tilde_state(&self, i: usize) -> EVec {
        let mut out = EVec::new();
        for p in 0..DIM {
            out.add_assign(&b_elem(self.a(i, p), &[(0, p as u8)]));
        }
        out
    }

    /// Small spanning sample of states of weight ≤ 2.
    pub fn samples(&self) -> Vec<(String, EVec)> {
        let x = |a, b| regfun::coord(a, b);
        vec![
            ("1".into(), vacuum()),
            ("x12".into(), fun_state(&x(1, 2))),
            ("w0".into(), omega_state(0)),
            ("t1(-1)x11".into(), self.tau(1, -1, &fun_state(&x(1, 1))).unwrap_or_default()),
            ("x21 w2".into(), b_elem(&x(2, 1), &[(0, 2)])),
            ("t2(-2)1".into(), EVec::basis((vec![(-2, 2)], super::ONE, vec![]))),
            ("t0(-1)t1(-1)1".into(), self.tau(0, -1, &tau_state(1)).unwrap_or_default()),
            ("x22 dw1".into(), b_elem(&x(2, 2), &[(1, 1)])),
        ]
    }

    /// The mode commutation relations on `samples`, with modes in `modes`.
    pub fn commutator_checks(&self, samples: &[(String, EVec)], modes: &[i32]) -> Result<AxiomReport> {
        let fs = [regfun::coord(1, 2), regfun::coord(2, 1)];
        let k = self.level.clone();
        let kb = self.kbar.clone();
        let mut results = Vec::new();
        let pairs: Vec<(i32, i32)> = modes.iter().flat_map(|&m| modes.iter().map(move |&n| (m, n))).collect();

        macro_rules! law {
            ($id:expr, |$v:ident, $i:ident, $j:ident, $m:ident, $n:ident| $lhs:expr, $rhs:expr) => {{
                let mut acc = Acc::new($id);
                for (lab, $v) in samples {
                    for $i in 0..DIM {
                        for $j in 0..DIM {
                            for &($m, $n) in &pairs {
                                let Some(l) = soft((|| -> Result<EVec> { $lhs })())? else { continue };
                                let Some(r) = soft((|| -> Result<EVec> { $rhs })())? else { continue };
                                acc.check(l == r, || format!("v={lab} i={} j={} m={} n={}", $i, $j, $m, $n));
                            }
                        }
                    }
                }
                results.push(acc.done());
            }};
        }
        let cterm = |op: &dyn Fn(usize) -> Op, i: usize, j: usize, v: &EVec| -> Result<EVec> {
            let mut out = EVec::new();
            for s in 0..DIM {
                let c = self.c(i, j, s);
                if !c.is_zero() {
                    out.add_scaled(&self.apply(&op(s), v)?, c);
                }
            }
            Ok(out)
        };

        law!("affine-left", |v, i, j, m, n| self.comm(&Op::Tau(i, m), &Op::Tau(j, n), v), {
            cterm(&|s| Op::Tau(s, m + n), i, j, v)
                .map(|o| o.plus(&v.scaled(&k.mul_ref(&Scalar::int(m as i64 * delta(i == j && m + n == 0))))))
        });
        law!("affine-right", |v, i, j, m, n| self.comm(&Op::Bar(i, m), &Op::Bar(j, n), v), {
            cterm(&|s| Op::Bar(s, m + n), i, j, v)
                .map(|o| o.plus(&v.scaled(&kb.mul_ref(&Scalar::int(m as i64 * delta(i == j && m + n == 0))))))
        });
        law!("left-right-commute", |v, i, j, m, n| self.comm(&Op::Tau(i, m), &Op::Bar(j, n), v), Ok(EVec::new()));
        law!(
            "modes-commute",
            |v, i, j, m, n| {
                let mut o = self.comm(&Op::Fun(fs[i % 2].clone(), m), &Op::Fun(fs[j % 2].clone(), n), v)?;
                o.add_assign(&self.comm(&Op::Fun(fs[i % 2].clone(), m), &Op::Omega(j, n), v)?);
                o.add_assign(&self.comm(&Op::Omega(i, m), &Op::Omega(j, n), v)?);
                Ok(o)
            },
            Ok(EVec::new())
        );
        law!("tau-fun", |v, i, j, m, n| self.comm(&Op::Tau(i, m), &Op::Fun(fs[j % 2].clone(), n), v), {
            self.fun(&regfun::tau(i, &fs[j % 2]), m + n, v)
        });
        law!("bar-fun", |v, i, j, m, n| self.comm(&Op::Bar(i, m), &Op::Fun(fs[j % 2].clone(), n), v), {
            self.fun(&regfun::tau_r(i, &fs[j % 2]), m + n, v)
        });
        law!("tau-omega", |v, i, j, m, n| self.comm(&Op::Tau(i, m), &Op::Omega(j, n), v), {
            cterm(&|s| Op::Omega(s, m + n), i, j, v)
                .map(|o| o.plus(&v.scaled(&Scalar::int(m as i64 * delta(i == j && m + n == 0)))))
        });
        law!("bar-omega-tilde", |v, i, j, m, n| self.comm(&Op::Bar(i, m), &Op::OmegaTilde(j, n), v), {
            cterm(&|s| Op::OmegaTilde(s, m + n), i, j, v)
                .map(|o| o.plus(&v.scaled(&Scalar::int(m as i64 * delta(i == j && m + n == 0)))))
        });
        law!("bar-omega", |v, i, j, m, n| self.comm(&Op::Bar(i, m), &Op::Omega(j, n), v), {
            self.fun(self.a(i, j), m + n - 1, v).map(|o| o.scaled(&Scalar::int(m as i64)))
        });
        law!("tau-omega-tilde", |v, i, j, m, n| self.comm(&Op::Tau(i, m), &Op::OmegaTilde(j, n), v), {
            self.fun(self.a(j, i), m + n - 1, v).map(|o| o.scaled(&Scalar::int(m as i64)))
        });
        let mut acc = Acc::new("tau-from-bar");
        for (lab, v) in samples {
            for j in 0..DIM {
                for &m in modes {
                    let Some(l) = soft(self.tau(j, m, v))? else { continue };
                    let Some(r) = soft(self.tau_via_bar(j, m, v))? else { continue };
                    acc.check(l == r, || format!("v={lab} j={j} m={m}"));
                }
            }
        }
        results.push(acc.done());
        Ok(AxiomReport { results, notes: vec![format!("modes {modes:?}")] })
    }

    /// Σ_i Σ_l {τ̄_i(−1−l) a^{ij}_(m+l) v + a^{ij}_(m−1−l) τ̄_i(l) v} + k ω_j(m) v.
    pub fn tau_via_bar(&self, j: usize, m: i32, v: &EVec) -> Result<EVec> {
        let Some(d) = super::degree_of(v) else { return Ok(EVec::new()) };
        let d = d as i32;
        let mut out = self.omega(j, m, v)?.scaled(&self.level);
        for i in 0..DIM {
            let a = self.a(i, j);
            for l in 0..=(d - 1 - m).max(-1) {
                out.add_assign(&self.bar(i, -1 - l, &self.fun(a, m + l, v)?)?);
            }
            for l in 0..=d {
                out.add_assign(&self.fun(a, m - 1 - l, &self.bar(i, l, v)?)?);
            }
        }
        Ok(out)
    }
}

impl Envelope {
    /// ϖ through the right action: τ̄_i(−1)ω̃_i + (k/2) ω_s ω_s.
    pub fn varpi_bar(&self) -> Result<EVec> {
        let mut out = EVec::new();
        let mut quad = EVec::new();
        for i in 0..DIM {
            out.add_assign(&self.bar(i, -1, &self.omega_tilde_state(i))?);
            quad.add_assign(&self.omega(i, -1, &omega_state(i))?);
        }
        out.add_scaled(&quad, &self.level.mul_ref(&Scalar::frac(1, 2)));
        Ok(out)
    }

    /// ϖ as a difference of Sugawara vectors; None at the critical level.
    pub fn varpi_sugawara(&self) -> Result<Option<EVec>> {
        let kappa = self.level.add_ref(&Scalar::int(2));
        if kappa.is_zero() {
            return Ok(None);
        }
        let mut out = EVec::new();
        for i in 0..DIM {
            out.add_assign(&self.tau(i, -1, &tau_state(i))?);
            out.sub_assign(&self.bar(i, -1, &self.bar(i, -1, &vacuum())?)?);
        }
        Ok(Some(out.scaled(&kappa.mul_ref(&Scalar::int(2)).inv()?)))
    }

    /// The conformal vector and its Virasoro modes.
    pub fn conformal_checks(&self, samples: &[(String, EVec)]) -> Result<AxiomReport> {
        let mut results = Vec::new();
        let w = self.varpi()?;
        let vac = vacuum();

        let mut acc = Acc::new("varpi-forms");
        acc.check(self.varpi_bar()? == w, || "right form".into());
        if let Some(s) = self.varpi_sugawara()? {
            acc.check(s == w, || "Sugawara difference".into());
        }
        results.push(acc.done());

        let mut acc = Acc::new("omega-square");
        let mut sq = EVec::new();
        let mut sqt = EVec::new();
        for s in 0..DIM {
            sq.add_assign(&self.omega(s, -1, &omega_state(s))?);
            sqt.add_assign(&self.omega_tilde(s, -1, &self.omega_tilde_state(s))?);
        }
        acc.check(sq == sqt, || "ω_s ω_s vs ω̃_s ω̃_s".into());
        results.push(acc.done());

        let mut acc = Acc::new("varpi-products");
        let dw = self.partial(&w)?;
        let wants = [dw, w.scaled(&Scalar::int(2)), EVec::new(), vac.scaled(&Scalar::int(DIM as i64)), EVec::new()];
        for (n, want) in wants.iter().enumerate() {
            acc.check(&self.state_mode(&w, n as i32, &w)? == want, || format!("n={n}"));
        }
        results.push(acc.done());

        let mut acc = Acc::new("virasoro-modes");
        for (lab, v) in samples {
            for n in -1..=2 {
                let Some(l) = soft(self.virasoro(n, v))? else { continue };
                let Some(r) = soft(self.state_mode(&w, n + 1, v))? else { continue };
                acc.check(l == r, || format!("v={lab} n={n}"));
            }
        }
        results.push(acc.done());

        let c = Scalar::int(2 * DIM as i64);
        let mut acc = Acc::new("virasoro-algebra");
        for (lab, v) in samples {
            for m in -2..=2i32 {
                for n in -2..=2i32 {
                    let Some(l) = soft(self.comm(&Op::Vir(m), &Op::Vir(n), v))? else { continue };
                    let Some(mut r) = soft(self.virasoro(m + n, v).map(|x| x.scaled(&Scalar::int((m - n) as i64))))?
                    else {
                        continue;
                    };
                    if m + n == 0 {
                        let z = c.mul_ref(&Scalar::frac((m * m * m - m) as i64, 12));
                        r.add_scaled(v, &z);
                    }
                    acc.check(l == r, || format!("v={lab} m={m} n={n}"));
                }
            }
        }
        results.push(acc.done());

        let mut acc = Acc::new("L0-L-1");
        for (lab, v) in samples {
            let d = super::degree_of(v).unwrap_or(0);
            acc.check(self.virasoro(0, v)? == v.scaled(&Scalar::int(d as i64)), || format!("L0 v={lab}"));
            if let Some(l) = soft(self.virasoro(-1, v))? {
                acc.check(l == self.partial(v)?, || format!("L-1 v={lab}"));
            }
        }
        results.push(acc.done());

        let mut acc = Acc::new("virasoro-weights");
        let f = regfun::coord(1, 2);
        for (lab, v) in samples {
            for m in -1..=2i32 {
                for n in -2..=2i32 {
                    let checks: Vec<(Op, Op, i64)> = vec![
                        (Op::Fun(f.clone(), n), Op::Fun(f.clone(), m + n), -(m + n + 1) as i64),
                        (Op::Tau(1, n), Op::Tau(1, m + n), -n as i64),
                        (Op::Bar(0, n), Op::Bar(0, m + n), -n as i64),
                        (Op::Omega(2, n), Op::Omega(2, m + n), -n as i64),
                    ];
                    for (x, y, s) in checks {
                        let Some(l) = soft(self.comm(&Op::Vir(m), &x, v))? else { continue };
                        let Some(r) = soft(self.apply(&y, v))? else { continue };
                        acc.check(l == r.scaled(&Scalar::int(s)), || format!("v={lab} m={m} {x:?}"));
                    }
                }
            }
        }
        results.push(acc.done());

        Ok(AxiomReport { results, notes: vec![format!("central charge {c}")] })
    }

    /// Symmetry and the adjoint relations of the invariant form, on pairs of samples.
    pub fn form_checks(&self, samples: &[(String, EVec)]) -> Result<AxiomReport> {
        let mut results = Vec::new();
        let mut acc = Acc::new("form-symmetric");
        for (la, u) in samples {
            for (lb, v) in samples {
                acc.check(self.bilinear_form(u, v)? == self.bilinear_form(v, u)?, || format!("{la}, {lb}"));
            }
        }
        results.push(acc.done());

        let f = regfun::coord(2, 1);
        let mut acc = Acc::new("form-adjoint");
        for (la, u) in samples {
            for (lb, v) in samples {
                for n in -2..=2i32 {
                    let pairs: Vec<(Op, Op, i64)> = vec![
                        (Op::Fun(f.clone(), n), Op::Fun(f.clone(), -n - 2), 1),
                        (Op::Omega(1, n), Op::Omega(1, -n), -1),
                        (Op::Tau(2, n), Op::Tau(2, -n), -1),
                        (Op::Bar(0, n), Op::Bar(0, -n), -1),
                        (Op::Vir(n), Op::Vir(-n), 1),
                    ];
                    for (x, y, s) in pairs {
                        let Some(xu) = soft(self.apply(&x, u))? else { continue };
                        let Some(yv) = soft(self.apply(&y, v))? else { continue };
                        let l = self.bilinear_form(&xu, v)?;
                        let r = self.bilinear_form(u, &yv)?.mul_ref(&Scalar::int(s));
                        acc.check(l == r, || format!("u={la} v={lb} {x:?}"));
                    }
                }
            }
        }
        results.push(acc.done());
        Ok(AxiomReport { results, notes: vec![] })
    }

    /// Bar form round trip, ρ, generators of B and the reconstruction of ω.
    pub fn bar_checks(&self, samples: &[(String, EVec)]) -> Result<AxiomReport> {
        let mut results = Vec::new();
        let mut acc = Acc::new("bar-round-trip");
        for (lab, v) in samples {
            let Some(b) = soft(self.to_bar_form(v))? else { continue };
            let Some(u) = soft(self.unbar(&b))? else { continue };
            acc.check(u == *v, || lab.clone());
        }
        results.push(acc.done());

        let mut acc = Acc::new("rho-values");
        for i in 0..DIM {
            let r = self.rho(i, -1, &vacuum())?;
            acc.check(r == omega_state(i).scaled(&self.level), || format!("ρ(τ_{i}(−1))1"));
        }
        let lower: Vec<EVec> = [vacuum(), tau_state(0), self.tau(2, -1, &fun_state(&regfun::coord(1, 1)))?]
            .into_iter()
            .chain((0..DIM).map(|i| EVec::basis((vec![(-2, i as u8)], super::ONE, vec![]))))
            .collect();
        let bs: Vec<EVec> = vec![
            vacuum(),
            omega_state(1),
            b_elem(&regfun::coord(1, 2), &[(0, 0)]),
            b_elem(&RegFun::basis(super::ONE), &[(1, 2)]),
        ];
        for b in &bs {
            for v in &lower {
                for i in 0..DIM {
                    for m in -2..=2i32 {
                        let Some(rb) = soft(self.rho(i, m, b))? else { continue };
                        let Some(tv) = soft(self.tau(i, -m, v))? else { continue };
                        let l = self.bilinear_form(&rb, v)?;
                        let r = self.bilinear_form(b, &tv)?.neg_ref();
                        acc.check(l == r, || format!("adjoint i={i} m={m}"));
                    }
                }
            }
        }
        results.push(acc.done());

        let mut acc = Acc::new("b-invariants");
        for lambda in 0..=1u32 {
            for n in 1..=2usize {
                let mut keys: Vec<EKey> = Vec::new();
                for j in jets(n) {
                    for r in 0..=lambda {
                        for c in 0..=lambda {
                            keys.push((vec![], (lambda, r, c), j.clone()));
                        }
                    }
                }
                let mut imgs = Vec::new();
                for k in &keys {
                    let v = EVec::basis(k.clone());
                    let mut img: Lin<(usize, EKey)> = Lin::new();
                    for i in 0..DIM {
                        for (kk, c) in self.tau(i, 1, &v)?.terms {
                            img.add_term((i, kk), c);
                        }
                    }
                    imgs.push(img);
                }
                acc.check(linalg::relations(&imgs).is_empty(), || format!("λ={lambda} n={n}"));
            }
        }
        results.push(acc.done());

        // ω_r = (1/2h^∨) C_{rlj} a^{ij}_(−2) a^{il};  x_(−1)a = a_(−1)x + ∂τ(a)
        let mut acc = Acc::new("generators");
        for r in 0..DIM {
            let mut s = EVec::new();
            for i in 0..DIM {
                for l in 0..DIM {
                    for j in 0..DIM {
                        let c = self.c(r, l, j);
                        if c.is_zero() {
                            continue;
                        }
                        s.add_scaled(&self.fun(self.a(i, j), -2, &fun_state(self.a(i, l)))?, c);
                    }
                }
            }
            acc.check(s.scaled(&Scalar::frac(1, 4)) == omega_state(r), || format!("ω_{r}"));
        }
        for a in [regfun::coord(1, 2), regfun::coord(2, 2)] {
            for i in 0..DIM {
                let x = tau_state(i);
                let fa = fun_state(&a);
                let l = self.state_mode(&x, -1, &fa)?.minus(&self.state_mode(&fa, -1, &x)?);
                acc.check(l == self.partial(&fun_state(&regfun::tau(i, &a)))?, || format!("x_(−1)a, i={i}"));
                let mut d = EVec::new();
                for j in 0..DIM {
                    d.add_assign(&b_elem(&regfun::tau(j, &a), &[(0, j as u8)]));
                }
                acc.check(self.state_mode(&fa, -2, &vacuum())? == d, || format!("∂a, i={i}"));
            }
        }
        // a^{ij}_(−3) a^{ij} = h^∨ ω_s ω_s;  a_(0)ϖ = −∂a
        let mut cube = EVec::new();
        let mut sq = EVec::new();
        for i in 0..DIM {
            for j in 0..DIM {
                cube.add_assign(&self.fun(self.a(i, j), -3, &fun_state(self.a(i, j)))?);
            }
            sq.add_assign(&self.omega(i, -1, &omega_state(i))?);
        }
        acc.check(cube == sq.scaled(&Scalar::int(2)), || "a^{ij}_(−3)a^{ij}".into());
        let w = self.varpi()?;
        for a in [regfun::coord(1, 2), regfun::coord(1, 1)] {
            let l = self.state_mode(&fun_state(&a), 0, &w)?;
            acc.check(l == self.partial(&fun_state(&a))?.scaled(&Scalar::int(-1)), || "a_(0)ϖ".into());
        }
        results.push(acc.done());

        let mut acc = Acc::new("bar-invariants");
        for lambda in 0..=1u32 {
            for n in 1..=2usize {
                let mut imgs = Vec::new();
                for k in super::analysis::b_basis(lambda, n) {
                    let v = EVec::basis(k);
                    let mut img: Lin<(usize, EKey)> = Lin::new();
                    for i in 0..DIM {
                        let Some(r) = soft(self.bar(i, 1, &v))? else { continue };
                        for (kk, c) in r.terms {
                            img.add_term((i, kk), c);
                        }
                    }
                    imgs.push(img);
                }
                acc.check(linalg::relations(&imgs).is_empty(), || format!("λ={lambda} n={n}"));
            }
        }
        results.push(acc.done());
        Ok(AxiomReport { results, notes: vec![] })
    }

    /// Values of the form, block orthogonality and (w, b) = (t(w), b).
    pub fn pairing_checks(&self) -> Result<AxiomReport> {
        let mut results = Vec::new();
        let vac = vacuum();
        let mut acc = Acc::new("form-values");
        acc.check(self.bilinear_form(&vac, &vac)?.is_one(), || "(1, 1)".into());
        for b in [regfun::one(), regfun::coord(1, 1), regfun::coord(2, 1)] {
            let one_b = self.bilinear_form(&vac, &fun_state(&b))?;
            for i in 0..DIM {
                for j in 0..DIM {
                    let l = self.bilinear_form(&tau_state(i), &b_elem(&b, &[(0, j as u8)]))?;
                    let r = if i == j { one_b.neg_ref() } else { Scalar::zero() };
                    acc.check(l == r, || format!("(τ_{i}(−1)1, b ω_{j})"));
                }
            }
        }
        results.push(acc.done());

        let mut acc = Acc::new("block-orthogonal");
        for n in 0..=1usize {
            for l1 in 0..=2u32 {
                for l2 in 0..=2u32 {
                    if l1 == l2 {
                        continue;
                    }
                    for k1 in self.full_basis(l1, n) {
                        for k2 in self.full_basis(l2, n) {
                            let z = self.bilinear_form(&EVec::basis(k1.clone()), &EVec::basis(k2.clone()))?;
                            acc.check(z.is_zero(), || format!("{k1:?} {k2:?}"));
                        }
                    }
                }
            }
        }
        results.push(acc.done());

        let mut acc = Acc::new("t-pairing");
        for lambda in 0..=1u32 {
            for n in 0..=2usize {
                let bs = super::analysis::b_basis(lambda, n);
                for (t, w) in self.lower_basis(lambda, n).into_iter().enumerate() {
                    let w = EVec::basis(w);
                    let Some(tw) = soft(self.t_map(&w).and_then(|t| self.unbar(&t)))? else { continue };
                    // a deterministic spread of b's
                    for b in bs.iter().skip(t % 3).step_by(5) {
                        let b = EVec::basis(b.clone());
                        acc.check(self.bilinear_form(&w, &b)? == self.bilinear_form(&tw, &b)?, || {
                            format!("λ={lambda} n={n}")
                        });
                    }
                }
            }
        }
        results.push(acc.done());
        Ok(AxiomReport { results, notes: vec![] })
    }

    /// Size and rank of the Gram matrix of (U(ĝ₋) ⊗ B_λ)_n.
    pub fn gram_rank(&self, lambda: u32, n: usize) -> Result<(usize, usize)> {
        let vs: Vec<EVec> = self.full_basis(lambda, n).into_iter().map(EVec::basis).collect();
        let g = self.gram(&vs)?;
        Ok((vs.len(), linalg::rank(&g)))
    }
}
