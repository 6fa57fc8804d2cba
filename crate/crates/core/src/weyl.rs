//! Truncated Weyl modules over the affine algebra of sl2.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::lie_core::{LieAlgebra, Rep};
use crate::linalg::{self, Lin, Matrix};
use crate::scalar::Scalar;

/// PBW monomial: factors (mode, index), sorted ascending, all modes negative.
pub type Mono = Vec<(i32, u8)>;

pub fn mono_degree(m: &[(i32, u8)]) -> usize {
    m.iter().map(|&(n, _)| (-n) as usize).sum()
}

/// All PBW monomials of degree exactly n over `dim` colors.
pub fn monomials(dim: usize, n: usize) -> Vec<Mono> {
    fn rec(dim: usize, left: usize, min: (i32, u8), cur: &mut Mono, out: &mut Vec<Mono>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for m in (1..=left as i32).rev() {
            for i in 0..dim as u8 {
                let f = (-m, i);
                if f < min {
                    continue;
                }
                cur.push(f);
                rec(dim, left - m as usize, f, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(dim, n, (i32::MIN, 0), &mut Vec::new(), &mut out);
    out
}

/// Number of colored partitions of n with `dim` colors.
pub fn colored_partitions(dim: usize, n: usize) -> u64 {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for _ in 0..dim {
            for t in part..=n {
                p[t] += p[t - part];
            }
        }
    }
    p[n]
}

pub type WKey = (Mono, usize);
pub type WVec = Lin<WKey>;

pub struct WeylModule {
    pub g: LieAlgebra,
    pub rep: Rep,
    pub taus: Vec<Matrix>,
    pub level: Scalar,
    pub cap: usize,
    cache: Mutex<HashMap<(u8, i32, Mono, usize), WVec>>,
}

impl WeylModule {
    pub fn new(g: &LieAlgebra, rep: Rep, level: Scalar, cap: usize) -> WeylModule {
        let taus = rep.taus(g);
        WeylModule { g: g.clone(), rep, taus, level, cap, cache: Mutex::new(HashMap::new()) }
    }

    pub fn top(&self, w: usize) -> WVec {
        WVec::basis((vec![], w))
    }

    pub fn basis(&self, n: usize) -> Result<Vec<WKey>> {
        if n > self.cap {
            return Err(Error::CutoffExceeded);
        }
        let mut out = Vec::new();
        for m in monomials(self.g.dim, n) {
            for w in 0..self.rep.dim {
                out.push((m.clone(), w));
            }
        }
        Ok(out)
    }

    pub fn degree_of(v: &WVec) -> Option<usize> {
        v.terms.keys().map(|(m, _)| mono_degree(m)).max()
    }

    /// τ_i(m) applied to a basis vector.
    pub fn act_basis(&self, i: u8, m: i32, mono: &[(i32, u8)], w: usize) -> Result<WVec> {
        if m < 0 && mono_degree(mono) + (-m) as usize > self.cap {
            return Err(Error::CutoffExceeded);
        }
        if m > 0 && mono_degree(mono) < m as usize {
            return Ok(WVec::new());
        }
        let key = (i, m, mono.to_vec(), w);
        if let Some(v) = self.cache.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let out = self.act_raw(i, m, mono, w)?;
        self.cache.lock().unwrap().insert(key, out.clone());
        Ok(out)
    }

    fn act_raw(&self, i: u8, m: i32, mono: &[(i32, u8)], w: usize) -> Result<WVec> {
        let mut out = WVec::new();
        if mono.is_empty() {
            if m < 0 {
                out.add_term((vec![(m, i)], w), Scalar::one());
            } else if m == 0 {
                for (r, row) in self.taus[i as usize].iter().enumerate() {
                    out.add_term((vec![], r), row[w].clone());
                }
            }
            return Ok(out);
        }
        let (n1, j1) = mono[0];
        if m < 0 && (m, i) <= (n1, j1) {
            let mut nm = Vec::with_capacity(mono.len() + 1);
            nm.push((m, i));
            nm.extend_from_slice(mono);
            out.add_term((nm, w), Scalar::one());
            return Ok(out);
        }
        let rest = &mono[1..];
        // y (x rest) + [x, y] rest
        let inner = self.act_basis(i, m, rest, w)?;
        for ((mm, ww), c) in &inner.terms {
            out.add_scaled(&self.act_basis(j1, n1, mm, *ww)?, c);
        }
        for (k, cst) in self.g.bracket(i as usize, j1 as usize) {
            let t = self.act_basis(k as u8, m + n1, rest, w)?;
            out.add_scaled(&t, &Scalar::from_nf(cst));
        }
        if m + n1 == 0 && i == j1 {
            out.add_term((rest.to_vec(), w), self.level.mul_ref(&Scalar::int(m as i64)));
        }
        Ok(out)
    }

    pub fn act(&self, i: u8, m: i32, v: &WVec) -> Result<WVec> {
        let mut out = WVec::new();
        for ((mono, w), c) in &v.terms {
            out.add_scaled(&self.act_basis(i, m, mono, *w)?, c);
        }
        Ok(out)
    }

    /// (Σ_i x_i τ_i)(m) applied to v.
    pub fn act_combo(&self, x: &[Scalar], m: i32, v: &WVec) -> Result<WVec> {
        let mut out = WVec::new();
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(&self.act(i as u8, m, v)?, c);
            }
        }
        Ok(out)
    }

    /// L_n via the normally ordered Sugawara sum.
    pub fn sugawara(&self, n: i32, v: &WVec) -> Result<WVec> {
        let kappa = self.level.add_ref(&self.g.hv());
        if kappa.is_zero() {
            return Err(Error::Invalid("critical level".into()));
        }
        let pref = Scalar::one().div_ref(&kappa.mul_ref(&Scalar::int(2)))?;
        let mut out = WVec::new();
        let d = WeylModule::degree_of(v).unwrap_or(0) as i32;
        // right factor has mode r = max(p, q); pairs with p != q occur twice in the sum over j
        let rmin = n.div_euclid(2) + (n.rem_euclid(2));
        for r in rmin..=d.max(rmin) {
            let mult = if 2 * r == n { 1 } else { 2 };
            for i in 0..self.g.dim as u8 {
                let t = self.act(i, r, v)?;
                if t.is_zero() {
                    continue;
                }
                let t2 = self.act(i, n - r, &t)?;
                out.add_scaled(&t2, &Scalar::int(mult));
            }
        }
        Ok(out.scaled(&pref))
    }

    pub fn central_charge(&self) -> Scalar {
        let kappa = self.level.add_ref(&self.g.hv());
        self.level.mul_ref(&Scalar::int(self.g.dim as i64)).div_ref(&kappa).expect("noncritical")
    }

    /// Contragredient pairing of a vector of V_{λ*,k} (self) with a vector of V_{λ,k}.
    pub fn pair(&self, dual_vec: &WVec, other: &WeylModule, v: &WVec) -> Result<Scalar> {
        let mut total = Scalar::zero();
        for ((mono, w), c) in &dual_vec.terms {
            let mut cur = v.clone();
            for &(n, i) in mono {
                cur = other.act(i, -n, &cur)?;
            }
            let sign = if mono.len() % 2 == 0 { Scalar::one() } else { Scalar::int(-1) };
            let top = cur.coeff(&(vec![], *w));
            total = total.add_ref(&top.mul_ref(c).mul_ref(&sign));
        }
        Ok(total)
    }

    /// Basis of vectors of degree n killed by all positive modes.
    pub fn find_singular(&self, n: usize) -> Result<Vec<WVec>> {
        let basis = self.basis(n)?;
        let mut images = Vec::with_capacity(basis.len());
        for (mono, w) in &basis {
            let mut img = Lin::new();
            for i in 0..self.g.dim as u8 {
                for m in 1..=2 {
                    for ((mm, ww), c) in self.act_basis(i, m, mono, *w)?.terms {
                        img.add_term((i, m, mm, ww), c);
                    }
                }
            }
            images.push(img);
        }
        let rel = linalg::relations(&images);
        Ok(rel
            .into_iter()
            .map(|coeffs| basis.iter().zip(coeffs).filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k.clone(), c)).collect())
            .collect())
    }

    pub fn gram(&self, dual: &WeylModule, n: usize) -> Result<Matrix> {
        let b = self.basis(n)?;
        let bd = dual.basis(n)?;
        let mut m = linalg::zeros(bd.len(), b.len());
        for (r, kd) in bd.iter().enumerate() {
            let u = WVec::basis(kd.clone());
            for (c, k) in b.iter().enumerate() {
                m[r][c] = dual.pair(&u, self, &WVec::basis(k.clone()))?;
            }
        }
        Ok(m)
    }
}

/// Outcome of a Virasoro check: either all pass or a witness.
#[derive(Debug)]
pub struct VirasoroReport {
    pub checked: usize,
    pub failure: Option<(i32, i32, WKey)>,
    pub central_charge: Scalar,
}

/// [L_m, L_n] = (m-n) L_{m+n} + δ (m³-m)/12 c on basis vectors whose intermediate degrees stay within the cap.
pub fn virasoro_check(md: &WeylModule) -> Result<VirasoroReport> {
    virasoro_check_modes(md, md.cap as i32)
}

/// As [`virasoro_check`], with |m|, |n| ≤ max_mode.
pub fn virasoro_check_modes(md: &WeylModule, max_mode: i32) -> Result<VirasoroReport> {
    let c = md.central_charge();
    let nmax = md.cap as i32;
    let mut checked = 0;
    for d in 0..=md.cap {
        for key in md.basis(d)? {
            let v = WVec::basis(key.clone());
            let di = d as i32;
            for m in -max_mode..=max_mode {
                for n in -max_mode..=max_mode {
                    let ok = |x: i32| x >= 0 && x <= nmax;
                    if !(ok(di - n) && ok(di - m) && ok(di - m - n)) {
                        continue;
                    }
                    let lhs = md.sugawara(m, &md.sugawara(n, &v)?)?.minus(&md.sugawara(n, &md.sugawara(m, &v)?)?);
                    let mut rhs = md.sugawara(m + n, &v)?.scaled(&Scalar::int((m - n) as i64));
                    if m + n == 0 {
                        let cc = c.mul_ref(&Scalar::frac((m * m * m - m) as i64, 12));
                        rhs.add_scaled(&v, &cc);
                    }
                    checked += 1;
                    if lhs != rhs {
                        return Ok(VirasoroReport { checked, failure: Some((m, n, key)), central_charge: c });
                    }
                }
            }
        }
    }
    Ok(VirasoroReport { checked, failure: None, central_charge: c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_core::build_sl2;

    #[test]
    fn basis_dims() {
        let g = build_sl2();
        let md = WeylModule::new(&g, Rep::irrep(0), Scalar::k(), 4);
        assert_eq!(md.basis(1).unwrap().len(), 3);
        assert_eq!(md.basis(2).unwrap().len(), 9);
        assert_eq!(md.basis(4).unwrap().len() as u64, colored_partitions(3, 4));
        assert!(md.basis(5).is_err());
    }

    #[test]
    fn single_commutator() {
        let g = build_sl2();
        let md = WeylModule::new(&g, Rep::irrep(0), Scalar::k(), 2);
        let v = md.act(0, -1, &md.top(0)).unwrap();
        let r = md.act(0, 1, &v).unwrap();
        assert_eq!(r, md.top(0).scaled(&Scalar::k()));
    }

    #[test]
    fn l0_eigen() {
        let g = build_sl2();
        let md = WeylModule::new(&g, Rep::irrep(1), Scalar::k(), 2);
        let delta = crate::lie_core::conformal_weight(1, &Scalar::k()).unwrap();
        for n in 0..=2 {
            for key in md.basis(n).unwrap() {
                let v = WVec::basis(key);
                let l0 = md.sugawara(0, &v).unwrap();
                assert_eq!(l0, v.scaled(&delta.add_ref(&Scalar::int(n as i64))));
            }
        }
    }
}
