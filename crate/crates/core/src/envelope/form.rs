//! The invariant symmetric form on UA, extended from (·,·)_A on A ⊂ B.

use super::{key_degree, EKey, EVec, Envelope, DIM};
use crate::error::Result;
use crate::regfun::{self, RegFun};
use crate::scalar::Scalar;

impl Envelope {
    /// σ(P) v with σ(x(m)) = −x(−m); the outermost factor of P acts first.
    fn sigma_apply(&self, mono: &[(i32, u8)], v: &EVec) -> Result<EVec> {
        let mut cur = v.clone();
        for &(n, i) in mono {
            cur = self.tau(i as usize, -n, &cur)?.scaled(&Scalar::int(-1));
        }
        Ok(cur)
    }

    fn pair_key(&self, k: &EKey, v: &EVec) -> Result<Scalar> {
        let (mono, f, jet) = k;
        let w = self.sigma_apply(mono, v)?;
        let b = EVec::basis((vec![], *f, jet.clone()));
        let mut total = Scalar::zero();
        for ((q, g, gj), c) in &w.terms {
            if !gj.is_empty() {
                continue;
            }
            // (b, Q g) = (σ(Q) b, g), and B pairs with A only in degree 0
            let sb = self.sigma_apply(q, &b)?;
            let fb: RegFun = sb
                .terms
                .iter()
                .filter(|(k, _)| k.0.is_empty() && k.2.is_empty())
                .map(|(k, c)| (k.1, c.clone()))
                .collect();
            total = total.add_ref(&regfun::form_a(&fb, &RegFun::basis(*g)).mul_ref(c));
        }
        Ok(total)
    }

    /// (u, v).
    pub fn bilinear_form(&self, u: &EVec, v: &EVec) -> Result<Scalar> {
        let mut total = Scalar::zero();
        for (k, c) in &u.terms {
            let vd: EVec = v
                .terms
                .iter()
                .filter(|(kk, _)| key_degree(kk) == key_degree(k))
                .map(|(kk, cc)| (kk.clone(), cc.clone()))
                .collect();
            if vd.is_zero() {
                continue;
            }
            total = total.add_ref(&self.pair_key(k, &vd)?.mul_ref(c));
        }
        Ok(total)
    }

    /// Gram matrix of the form on a list of vectors.
    pub fn gram(&self, vs: &[EVec]) -> Result<Vec<Vec<Scalar>>> {
        vs.iter().map(|u| vs.iter().map(|v| self.bilinear_form(u, v)).collect()).collect()
    }

    /// All degree-n basis keys of U(ĝ₋) ⊗ B_λ with jets of weight ≤ n.
    pub fn full_basis(&self, lambda: u32, n: usize) -> Vec<EKey> {
        let mut out = Vec::new();
        for jd in 0..=n {
            for jet in jets(jd) {
                for m in crate::weyl::monomials(DIM, n - jd) {
                    for r in 0..=lambda {
                        for c in 0..=lambda {
                            out.push((m.clone(), (lambda, r, c), jet.clone()));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Jet monomials of weight exactly n.
pub fn jets(n: usize) -> Vec<super::Jet> {
    fn rec(left: usize, min: (u8, u8), cur: &mut super::Jet, out: &mut Vec<super::Jet>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 0..left as u8 {
            for i in 0..DIM as u8 {
                let f = (p, i);
                if f < min || p as usize + 1 > left {
                    continue;
                }
                cur.push(f);
                rec(left - p as usize - 1, f, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, (0, 0), &mut Vec::new(), &mut out);
    out
}
