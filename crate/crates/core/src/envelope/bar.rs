//! The right affine action at level k̄ = −4 − k, the bar form U(ḡ₋) ⊗ B, the ρ action
//! of ĝ on B, and the map t on U(ĝ₋) ⊗ A.

use super::{key_degree, EKey, EVec, Envelope, DIM, ONE};
use crate::error::{Error, Result};
use crate::linalg::{self, Lin};
use crate::regfun::{self, FKey, RegFun};
use crate::scalar::Scalar;
use crate::weyl::{monomials, Mono};

/// Σ P̄ ⊗ b: keys are (PBW monomial in τ̄, function, jet).
pub type BarVec = Lin<EKey>;

impl Envelope {
    pub fn bar_key(&self, i: u8, m: i32, key: &EKey) -> Result<EVec> {
        let d = key_degree(key) as i32;
        if d - m < 0 {
            return Ok(EVec::new());
        }
        self.check_degree((d - m) as usize)?;
        self.cached(&self.bar_cache, (i, m, key.clone()), || {
            let v = EVec::basis(key.clone());
            let i = i as usize;
            let mut out = EVec::new();
            for j in 0..DIM {
                let a = &self.a[i][j];
                for l in 0..=(d - 1 - m).max(-1) {
                    let w = self.fun(a, m + l, &v)?;
                    out.add_assign(&self.tau(j, -1 - l, &w)?);
                }
                for l in 0..=d {
                    let w = self.tau(j, l, &v)?;
                    out.add_assign(&self.fun(a, m - 1 - l, &w)?);
                }
            }
            out.add_scaled(&self.omega_tilde(i, m, &v)?, &self.kbar);
            Ok(out)
        })
    }

    /// τ̄_i(m) v.
    pub fn bar(&self, i: usize, m: i32, v: &EVec) -> Result<EVec> {
        let mut out = EVec::new();
        for (k, c) in &v.terms {
            out.add_scaled(&self.bar_key(i as u8, m, k)?, c);
        }
        Ok(out)
    }

    /// Product of PBW monomials in U(ĝ₋) (no central terms arise).
    pub fn pbw_mul(&self, a: &[(i32, u8)], b: &Lin<Mono>) -> Result<Lin<Mono>> {
        let mut cur: EVec = b.terms.iter().map(|(m, c)| ((m.clone(), ONE, vec![]), c.clone())).collect();
        for &(n, i) in a.iter().rev() {
            cur = self.tau(i as usize, n, &cur)?;
        }
        Ok(cur.terms.into_iter().map(|((m, _, _), c)| (m, c)).collect())
    }

    /// ρ(τ_j(m)) b for b ∈ B: the B component of τ_j(m) b in the bar form.
    pub fn rho_key(&self, j: usize, m: i32, f: FKey, jet: &[(u8, u8)]) -> Result<EVec> {
        let b = EVec::basis((vec![], f, jet.to_vec()));
        let mut out = self.tau(j, m, &b)?;
        if m < 0 {
            for (i, q, c) in self.bar_expansion(j, -m as usize, &b)? {
                out.sub_assign(&self.bar(i, -(q as i32), &c)?);
            }
        }
        if out.terms.keys().any(|k| !k.0.is_empty()) {
            return Err(Error::Invalid("ρ left B".into()));
        }
        Ok(out)
    }

    pub fn rho(&self, j: usize, m: i32, b: &EVec) -> Result<EVec> {
        let mut out = EVec::new();
        for ((mono, f, jet), c) in &b.terms {
            if !mono.is_empty() {
                return Err(Error::Invalid("ρ acts on B".into()));
            }
            out.add_scaled(&self.rho_key(j, m, *f, jet)?, c);
        }
        Ok(out)
    }

    /// τ_j(−m) b = Σ_{i, 1≤q≤m} τ̄_i(−q)(b ∂^{(m−q)}a^{ij}) + ρ(τ_j(−m)) b; returns the (i, q, b ∂^{(m−q)}a^{ij}).
    fn bar_expansion(&self, j: usize, m: usize, b: &EVec) -> Result<Vec<(usize, usize, EVec)>> {
        let mut out = Vec::new();
        for i in 0..DIM {
            for q in 1..=m {
                let c = self.mul_b(b, &self.dp(&self.a[i][j], m - q)?)?;
                if !c.is_zero() {
                    out.push((i, q, c));
                }
            }
        }
        Ok(out)
    }

    /// Rewrites v in the form Σ τ̄(−n)⋯ ⊗ b.
    pub fn to_bar_form(&self, v: &EVec) -> Result<BarVec> {
        let mut out = BarVec::new();
        for ((mono, f, jet), c) in &v.terms {
            let mut cur = BarVec::basis((vec![], *f, jet.clone()));
            for &(n, j) in mono.iter().rev() {
                let mut next = BarVec::new();
                for ((pb, g, jt), cc) in &cur.terms {
                    let b = EVec::basis((vec![], *g, jt.clone()));
                    for (i, q, bb) in self.bar_expansion(j as usize, -n as usize, &b)? {
                        let prod = self.pbw_mul(pb, &Lin::basis(vec![(-(q as i32), i as u8)]))?;
                        for (pm, pc) in &prod.terms {
                            for ((_, h, hj), bc) in &bb.terms {
                                next.add_term((pm.clone(), *h, hj.clone()), pc.mul_ref(bc).mul_ref(cc));
                            }
                        }
                    }
                    let r = self.rho_key(j as usize, n, *g, jt)?;
                    for ((_, h, hj), bc) in &r.terms {
                        next.add_term((pb.clone(), *h, hj.clone()), bc.mul_ref(cc));
                    }
                }
                cur = next;
            }
            out.add_scaled(&cur, c);
        }
        Ok(out)
    }

    /// Inverse of `to_bar_form`: lets the τ̄ modes act.
    pub fn unbar(&self, w: &BarVec) -> Result<EVec> {
        let mut out = EVec::new();
        for ((mono, f, jet), c) in &w.terms {
            let mut cur = EVec::basis((vec![], *f, jet.clone()));
            for &(n, i) in mono.iter().rev() {
                cur = self.bar(i as usize, n, &cur)?;
            }
            out.add_scaled(&cur, c);
        }
        Ok(out)
    }

    /// t(τ_{i1}(−m1)⋯τ_{il}(−ml) a) = Σ τ̄_{jl}(−ml)⋯τ̄_{j1}(−m1) (a^{j1 i1}⋯a^{jl il} a), on U(ĝ₋) ⊗ A.
    /// The τ̄ word is the reverse of the τ word: that is the order in which the bar form produces it.
    pub fn t_map(&self, v: &EVec) -> Result<BarVec> {
        let mut out = BarVec::new();
        for ((mono, f, jet), c) in &v.terms {
            if !jet.is_empty() {
                return Err(Error::Invalid("t is defined on U(ĝ₋) ⊗ A".into()));
            }
            // (word, function) pairs, built factor by factor
            let mut terms: Vec<(Vec<(i32, u8)>, RegFun)> = vec![(vec![], RegFun::basis(*f))];
            for &(n, i) in mono {
                let mut next = Vec::new();
                for (w, g) in &terms {
                    for j in 0..DIM {
                        let h = regfun::mul_uncapped(&self.a[j][i as usize], g);
                        if h.is_zero() {
                            continue;
                        }
                        if regfun::max_block(&h) > self.max_block {
                            return Err(Error::BlockCutoffExceeded);
                        }
                        let mut w2 = w.clone();
                        w2.push((n, j as u8));
                        next.push((w2, h));
                    }
                }
                terms = next;
            }
            for (w, g) in terms {
                // reversed word, as a product in U(ḡ₋), brought to PBW order
                let w: Vec<(i32, u8)> = w.into_iter().rev().collect();
                let prod = self.pbw_mul(&w, &Lin::basis(vec![]))?;
                for (pm, pc) in &prod.terms {
                    for (k, gc) in &g.terms {
                        out.add_term((pm.clone(), *k, vec![]), pc.mul_ref(gc).mul_ref(c));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Basis of (U(ĝ₋) ⊗ A_λ)_n.
    pub fn lower_basis(&self, lambda: u32, n: usize) -> Vec<EKey> {
        let d = lambda + 1;
        let mut out = Vec::new();
        for m in monomials(DIM, n) {
            for r in 0..d {
                for c in 0..d {
                    out.push((m.clone(), (lambda, r, c), vec![]));
                }
            }
        }
        out
    }

    /// S ∩ (U(ĝ₋) ⊗ A_λ)_n: the fixed points of t, compared in the bar form.
    pub fn invariant_space(&self, lambda: u32, n: usize) -> Result<Vec<EVec>> {
        let basis = self.lower_basis(lambda, n);
        let mut images = Vec::with_capacity(basis.len());
        for k in &basis {
            let v = EVec::basis(k.clone());
            images.push(self.to_bar_form(&v)?.minus(&self.t_map(&v)?));
        }
        Ok(combos(&basis, &linalg::relations(&images)))
    }

    /// Vectors of (U(ĝ₋) ⊗ A_λ)_n killed by ĝ>0 (generated by the τ_i(1)).
    pub fn singular_space(&self, lambda: u32, n: usize) -> Result<Vec<EVec>> {
        let basis = self.lower_basis(lambda, n);
        let mut images = Vec::with_capacity(basis.len());
        for k in &basis {
            let v = EVec::basis(k.clone());
            let mut img: Lin<(usize, EKey)> = Lin::new();
            for i in 0..DIM {
                for (kk, c) in self.tau(i, 1, &v)?.terms {
                    img.add_term((i, kk), c);
                }
            }
            images.push(img);
        }
        Ok(combos(&basis, &linalg::relations(&images)))
    }
}

pub(crate) fn combos(basis: &[EKey], rels: &[Vec<Scalar>]) -> Vec<EVec> {
    rels.iter()
        .map(|r| basis.iter().zip(r).filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k.clone(), c.clone())).collect())
        .collect()
}
