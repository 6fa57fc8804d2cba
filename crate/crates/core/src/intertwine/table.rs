//! Components v_(n) of the intertwiner Φ^f(v, z) for v in the top level V_λ.
//!
//! Descendants of the source are peeled off with [v_(n), x(p)] = −(x·v)_(n+p).
//! On the top level u₁ ∈ V_μ the vector v_(−d−1)u₁ ∈ V_ν[d] is fixed by the
//! differential equation dΦ/dz = ϰ⁻¹ Σ_i :τ_i(z) Φ(τ_i·v, z):, which at degree d reads
//! X_d ∘ ((d + h) − Ω/ϰ) = ϰ⁻¹ Σ_i Σ_{m=1}^{d} τ_i(−m) X_{d−m} ∘ (τ_i ⊗ 1),
//! with h = Δ(ν) − Δ(λ) − Δ(μ) and Ω = Σ τ_i ⊗ τ_i on V_λ ⊗ V_μ.

use std::collections::HashMap;
use std::sync::Mutex;

use super::kron;
use crate::error::{Error, Result};
use crate::lie_core::{conformal_weight, is_equivariant, HomTensor, Rep};
use crate::linalg::{self, Matrix};
use crate::regfun::sl2;
use crate::scalar::Scalar;
use crate::weyl::{Mono, WVec, WeylModule};

pub struct IntertwinerTable {
    pub f: HomTensor,
    pub level: Scalar,
    /// Δ(ν) − Δ(λ) − Δ(μ); the series itself has integral powers only.
    pub offset: Scalar,
    pub src: WeylModule,
    pub tgt: WeylModule,
    dl: usize,
    dm: usize,
    taus_l: Vec<Matrix>,
    omega: Matrix,
    kappa: Scalar,
    tops: Mutex<Vec<Vec<WVec>>>,
    cache: Mutex<HashMap<(usize, i32, Mono, usize), WVec>>,
}

fn weight(r: &Rep) -> Result<u32> {
    r.weight.ok_or_else(|| Error::Invalid("intertwiner needs irreducible modules".into()))
}

impl IntertwinerTable {
    /// Φ^f : V_{λ,k} ⊗ V_{μ,k} → V_{ν,k}, truncated at degree `cap` of both modules.
    pub fn new(lam: &Rep, mu: &Rep, nu: &Rep, level: &Scalar, f: HomTensor, cap: usize) -> Result<IntertwinerTable> {
        let g = sl2();
        if !is_equivariant(&f, &lam.tensor(mu), nu) {
            return Err(Error::Invalid("f is not g-equivariant".into()));
        }
        let kappa = level.add_ref(&g.hv());
        if kappa.is_zero() {
            return Err(Error::Invalid("critical level".into()));
        }
        let offset = conformal_weight(weight(nu)?, level)?
            .sub_ref(&conformal_weight(weight(lam)?, level)?)
            .sub_ref(&conformal_weight(weight(mu)?, level)?);
        let taus_l = lam.taus(g);
        let taus_m = mu.taus(g);
        let mut omega = linalg::zeros(lam.dim * mu.dim, lam.dim * mu.dim);
        for (a, b) in taus_l.iter().zip(&taus_m) {
            for (orow, krow) in omega.iter_mut().zip(kron(a, b)) {
                for (o, x) in orow.iter_mut().zip(krow) {
                    *o = o.add_ref(&x);
                }
            }
        }
        // top level: X_0 = f
        let x0: Vec<WVec> =
            (0..lam.dim * mu.dim).map(|p| (0..nu.dim).map(|c| ((vec![], c), f.mat[c][p].clone())).collect()).collect();
        Ok(IntertwinerTable {
            level: level.clone(),
            offset,
            src: WeylModule::new(g, mu.clone(), level.clone(), cap),
            tgt: WeylModule::new(g, nu.clone(), level.clone(), cap),
            dl: lam.dim,
            dm: mu.dim,
            taus_l,
            omega,
            kappa,
            tops: Mutex::new(vec![x0]),
            cache: Mutex::new(HashMap::new()),
            f,
        })
    }

    /// X_d(e_a ⊗ e_b) = (e_a)_(−d−1) e_b, for all a, b.
    fn top(&self, d: usize) -> Result<Vec<WVec>> {
        if d > self.tgt.cap {
            return Err(Error::CutoffExceeded);
        }
        if let Some(x) = self.tops.lock().unwrap().get(d) {
            return Ok(x.clone());
        }
        let prev: Vec<Vec<WVec>> = (0..d).map(|e| self.top(e)).collect::<Result<_>>()?;
        let n = self.dl * self.dm;
        let kinv = self.kappa.inv()?;
        let mut rhs = vec![WVec::new(); n];
        for (i, t) in self.taus_l.iter().enumerate() {
            for m in 1..=d {
                let xs = &prev[d - m];
                for a in 0..self.dl {
                    for b in 0..self.dm {
                        let mut v = WVec::new();
                        for (a2, row) in t.iter().enumerate() {
                            if !row[a].is_zero() {
                                v.add_scaled(&xs[a2 * self.dm + b], &row[a]);
                            }
                        }
                        if !v.is_zero() {
                            rhs[a * self.dm + b].add_scaled(&self.tgt.act(i as u8, -(m as i32), &v)?, &kinv);
                        }
                    }
                }
            }
        }
        let shift = Scalar::int(d as i64).add_ref(&self.offset);
        let mut mat = linalg::zeros(n, n);
        for p in 0..n {
            for q in 0..n {
                let mut x = self.omega[p][q].mul_ref(&kinv).neg_ref();
                if p == q {
                    x = x.add_ref(&shift);
                }
                mat[p][q] = x;
            }
        }
        let minv = linalg::inverse(&mat).map_err(|_| Error::Resonance(d))?;
        let mut out = vec![WVec::new(); n];
        for (p, r) in rhs.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            for (q, o) in out.iter_mut().enumerate() {
                if !minv[p][q].is_zero() {
                    o.add_scaled(r, &minv[p][q]);
                }
            }
        }
        let mut tops = self.tops.lock().unwrap();
        if tops.len() == d {
            tops.push(out.clone());
        }
        Ok(out)
    }

    fn mode_basis(&self, a: usize, n: i32, mono: &[(i32, u8)], w: usize) -> Result<WVec> {
        let Some(&(p, i)) = mono.first() else {
            let d = -n - 1;
            if d < 0 {
                return Ok(WVec::new());
            }
            return Ok(self.top(d as usize)?[a * self.dm + w].clone());
        };
        let key = (a, n, mono.to_vec(), w);
        if let Some(v) = self.cache.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        // v_(n) x(p) R = x(p) v_(n) R − (x·v)_(n+p) R
        let rest = &mono[1..];
        let mut out = self.tgt.act(i, p, &self.mode_basis(a, n, rest, w)?)?;
        for (a2, row) in self.taus_l[i as usize].iter().enumerate() {
            if !row[a].is_zero() {
                out.add_scaled(&self.mode_basis(a2, n + p, rest, w)?, &row[a].neg_ref());
            }
        }
        self.cache.lock().unwrap().insert(key, out.clone());
        Ok(out)
    }

    /// v_(n) u for v ∈ V_λ (coordinates) and u ∈ V_{μ,k}.
    pub fn apply(&self, v: &[Scalar], n: i32, u: &WVec) -> Result<WVec> {
        let mut out = WVec::new();
        for ((mono, w), c) in &u.terms {
            for (a, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    out.add_scaled(&self.mode_basis(a, n, mono, *w)?, &x.mul_ref(c));
                }
            }
        }
        Ok(out)
    }

    /// ⟨w', v_(n) u⟩, with w' given by its coordinates on the PBW basis of V_{ν,k}.
    pub fn elem(&self, w_dual: &WVec, v: &[Scalar], n: i32, u: &WVec) -> Result<Scalar> {
        let img = self.apply(v, n, u)?;
        Ok(w_dual.terms.iter().fold(Scalar::zero(), |acc, (k, c)| acc.add_ref(&c.mul_ref(&img.coeff(k)))))
    }

    /// τ_i · v on V_λ.
    pub fn act_top(&self, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        super::mat_vec(&self.taus_l[i], v)
    }
}
