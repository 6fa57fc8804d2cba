//! Character bookkeeping, generation of B from the top, and the singular-block
//! comparison X ⊗ V_λ* = V_μ ⊗ Y at integral level.

use super::form::jets;
use super::{EKey, EVec, Envelope, DIM};
use crate::error::{Error, Result};
use crate::lie_core::{dual_level, Rep};
use crate::linalg::{self, Lin};
use crate::regfun;
use crate::scalar::Scalar;
use crate::weyl::{colored_partitions, WKey, WVec, WeylModule};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharRow {
    pub lambda: u32,
    pub n: usize,
    /// dim (U(ĝ₋) ⊗ B_λ)_n by enumeration of the basis.
    pub enumerated: u64,
    /// (dim V_λ)² Σ_{i+j=n} p(i) p(j).
    pub predicted: u64,
}

/// Dimensions of the graded pieces against the decomposition ⊕ V_{λ,k} ⊗ V_{λ*,k̄}.
pub fn char_check(max_n: usize, max_lambda: u32) -> Vec<CharRow> {
    let mut out = Vec::new();
    for lambda in 0..=max_lambda {
        let d = (lambda as u64 + 1).pow(2);
        for n in 0..=max_n {
            let mut enumerated = 0u64;
            for jd in 0..=n {
                enumerated += d * jets(jd).len() as u64 * crate::weyl::monomials(DIM, n - jd).len() as u64;
            }
            let predicted =
                d * (0..=n).map(|i| colored_partitions(DIM, i) * colored_partitions(DIM, n - i)).sum::<u64>();
            out.push(CharRow { lambda, n, enumerated, predicted });
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct GenRow {
    pub lambda: u32,
    pub n: usize,
    pub dim_b: usize,
    /// Rank of the B-components of (U(ĝ₋) ⊗ A_λ)_n.
    pub rank: usize,
    pub solved: bool,
}

/// Basis keys of B_{λ,n}.
pub fn b_basis(lambda: u32, n: usize) -> Vec<EKey> {
    let mut out = Vec::new();
    for j in jets(n) {
        for r in 0..=lambda {
            for c in 0..=lambda {
                out.push((vec![], (lambda, r, c), j.clone()));
            }
        }
    }
    out
}

impl Envelope {
    /// The B component of v in the bar form (the part outside J̄ ⊗ B).
    pub fn top_component(&self, v: &EVec) -> Result<EVec> {
        Ok(super::b_part(&self.to_bar_form(v)?))
    }

    /// For each b in B_{λ,n}, some v ∈ (U(ĝ₋) ⊗ A_λ)_n with b − v ∈ J̄ ⊗ B.
    pub fn generate_from_top(&self, max_n: usize, max_lambda: u32) -> Result<Vec<GenRow>> {
        let mut out = Vec::new();
        for lambda in 0..=max_lambda {
            for n in 0..=max_n {
                let lower = self.lower_basis(lambda, n);
                let mut imgs = Vec::with_capacity(lower.len());
                for k in &lower {
                    imgs.push(self.top_component(&EVec::basis(k.clone()))?);
                }
                let bs: Vec<EVec> = b_basis(lambda, n).into_iter().map(EVec::basis).collect();
                let rank = linalg::span_rank(&imgs);
                let mut all = imgs.clone();
                all.extend(bs.iter().cloned());
                let solved = linalg::span_rank(&all) == rank;
                out.push(GenRow { lambda, n, dim_b: bs.len(), rank, solved });
            }
        }
        Ok(out)
    }

    /// An explicit v ∈ (U(ĝ₋) ⊗ A_λ)_n with top component b.
    pub fn lift_from_top(&self, b: &EVec, lambda: u32, n: usize) -> Result<EVec> {
        let lower = self.lower_basis(lambda, n);
        let mut imgs = Vec::with_capacity(lower.len() + 1);
        for k in &lower {
            imgs.push(self.top_component(&EVec::basis(k.clone()))?);
        }
        imgs.push(b.clone());
        let rel = linalg::relations(&imgs).into_iter().find(|r| !r[lower.len()].is_zero()).ok_or(Error::NoSolution)?;
        let s = rel[lower.len()].inv()?.neg_ref();
        Ok(lower.iter().zip(&rel).filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k.clone(), c.mul_ref(&s))).collect())
    }
}

#[derive(Clone, Debug)]
pub struct BlockMatch {
    pub degree: usize,
    /// Highest weight of X ≅ V_μ.
    pub mu: u32,
    pub dim_x: usize,
    pub dim_y: usize,
    pub y_singular: bool,
    pub y_g_stable: bool,
    pub equal: bool,
    /// Y as vectors of V_{μ*, k̄}.
    pub y: Vec<WVec>,
}

impl BlockMatch {
    pub fn passed(&self, lambda: u32) -> bool {
        self.dim_y == lambda as usize + 1 && self.y_singular && self.y_g_stable && self.equal
    }
}

/// Singular g-irreps X ≅ V_μ in V_{λ,k0} of degree ≤ n_max, each matched with Y ⊂ V_{μ*,k̄0}.
pub fn singular_block_match(level: &Scalar, lambda: u32, n_max: usize) -> Result<Vec<BlockMatch>> {
    let g = regfun::sl2();
    let md = WeylModule::new(g, Rep::irrep(lambda), level.clone(), n_max);
    let ehf = g.ehf_in_tau();
    let (e, h, f) = (&ehf[0], &ehf[1], &ehf[2]);
    let mut out = Vec::new();
    for n in 1..=n_max {
        let sing = md.find_singular(n)?;
        if sing.is_empty() {
            continue;
        }
        // highest weight vectors of weight μ: kernel of e(0) and h(0) − μ on the singular space
        let mut hws: Vec<(u32, WVec)> = Vec::new();
        for mu in (0..=lambda + 2 * n as u32).rev() {
            let mut imgs: Vec<Lin<(u8, WKey)>> = Vec::new();
            for v in &sing {
                let mut img = Lin::new();
                for (k, c) in md.act_combo(e, 0, v)?.terms {
                    img.add_term((0, k), c);
                }
                let hv = md.act_combo(h, 0, v)?.minus(&v.scaled(&Scalar::int(mu as i64)));
                for (k, c) in hv.terms {
                    img.add_term((1, k), c);
                }
                imgs.push(img);
            }
            for rel in linalg::relations(&imgs) {
                let mut v = WVec::new();
                for (s, c) in sing.iter().zip(&rel) {
                    v.add_scaled(s, c);
                }
                hws.push((mu, v));
            }
        }
        for (mu, u) in hws {
            let mut xs = vec![u.clone()];
            for _ in 0..mu {
                let next = md.act_combo(f, 0, xs.last().unwrap())?;
                xs.push(next);
            }
            out.push(match_block(level, lambda, n, mu, &xs)?);
        }
    }
    Ok(out)
}

fn match_block(level: &Scalar, lambda: u32, n: usize, mu: u32, xs: &[WVec]) -> Result<BlockMatch> {
    let env = Envelope::new(level.clone(), n, lambda + 2 * n as u32 + 2)?;
    // X ⊗ V_λ* inside U(ĝ₋) ⊗ A_λ: (mono, w) ⊗ v^c ↦ τ(mono) E(λ, w, c)
    let mut bars = Vec::new();
    for x in xs {
        for c in 0..=lambda {
            let v: EVec =
                x.terms.iter().map(|((m, w), s)| ((m.clone(), (lambda, *w as u32, c), vec![]), s.clone())).collect();
            let b = env.to_bar_form(&v)?;
            if let Some(k) = b.terms.keys().find(|k| k.1 .0 != mu || !k.2.is_empty()) {
                return Err(Error::MatchFailed(format!("degree {n}: term {k:?} outside U(ḡ₋) ⊗ A_{mu}")));
            }
            bars.push(b);
        }
    }
    // Y: the column parts, row by row
    let mut ys: Vec<WVec> = Vec::new();
    for b in &bars {
        for r in 0..=mu {
            let y: WVec = b
                .terms
                .iter()
                .filter(|(k, _)| k.1 .1 == r)
                .map(|(k, s)| ((k.0.clone(), k.1 .2 as usize), s.clone()))
                .collect();
            if !y.is_zero() {
                ys.push(y);
            }
        }
    }
    let y = independent(&ys);
    let kbar = dual_level(level);
    let g = regfun::sl2();
    let dual = WeylModule::new(g, Rep::irrep(mu).dual(), kbar, n);
    let mut y_singular = true;
    let mut y_g_stable = true;
    for v in &y {
        for i in 0..DIM as u8 {
            y_singular &= dual.act(i, 1, v)?.is_zero() && dual.act(i, 2, v)?.is_zero();
            let mut with = y.clone();
            with.push(dual.act(i, 0, v)?);
            y_g_stable &= linalg::span_rank(&with) == y.len();
        }
    }
    // V_μ ⊗ Y spanned by E(μ, r, ·) ⊗ y
    let mut vy: Vec<Lin<EKey>> = Vec::new();
    for r in 0..=mu {
        for v in &y {
            vy.push(v.terms.iter().map(|((m, c), s)| ((m.clone(), (mu, r, *c as u32), vec![]), s.clone())).collect());
        }
    }
    let rx = linalg::span_rank(&bars);
    let ry = linalg::span_rank(&vy);
    let mut both = bars.clone();
    both.extend(vy);
    let equal = rx == ry && linalg::span_rank(&both) == rx;
    Ok(BlockMatch { degree: n, mu, dim_x: xs.len(), dim_y: y.len(), y_singular, y_g_stable, equal, y })
}

fn independent(vs: &[WVec]) -> Vec<WVec> {
    let mut out: Vec<WVec> = Vec::new();
    for v in vs {
        let mut t = out.clone();
        t.push(v.clone());
        if linalg::span_rank(&t) > out.len() {
            out.push(v.clone());
        }
    }
    out
}
