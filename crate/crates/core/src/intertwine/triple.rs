//! (d*, Y(a, z₁)Y(b, z₂)c) for a, b, c on the top level R(G) = ⊕ V_λ ⊗ V_λ*,
//! assembled from intertwiner tables on both sides and compared with the
//! KZ series and with the pointwise product a·b·c.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::kz::{kz_channels, KzChannel, KzSeries};
use super::table::IntertwinerTable;
use crate::error::{Error, Result};
use crate::lie_core::{dual_basis_fast, dual_level, HomTensor, Rep};
use crate::regfun::{self, FKey, RegFun};
use crate::scalar::Scalar;
use crate::weyl::WVec;

#[derive(Clone, Debug)]
pub struct TripleReport {
    /// Coefficients of (z₂/z₁)^m, m = 0..=M.
    pub series: Vec<Scalar>,
    /// (d*, a·b·c) from the pointwise product.
    pub expected: Scalar,
    /// The same series with a and b exchanged.
    pub swapped: Vec<Scalar>,
    /// Per-channel agreement of the table coefficients with the KZ series.
    pub kz_agree: bool,
    /// The fractional exponents of the two sides cancel in every channel.
    pub offsets_cancel: bool,
}

impl TripleReport {
    pub fn passed(&self) -> bool {
        self.series.first() == Some(&self.expected)
            && self.series[1..].iter().all(Scalar::is_zero)
            && self.swapped == self.series
            && self.kz_agree
            && self.offsets_cancel
    }
}

type TableKey = (bool, u32, u32, u32, usize);
type Channels = Arc<(KzChannel, KzChannel, Vec<KzSeries>, Vec<KzSeries>)>;

/// Tables and series shared across many triple products at one level and order.
pub struct TripleEngine {
    pub level: Scalar,
    pub order: usize,
    tables: Mutex<HashMap<TableKey, Arc<IntertwinerTable>>>,
    channels: Mutex<HashMap<[u32; 4], Option<Channels>>>,
}

fn rep(n: u32, dual: bool) -> Rep {
    if dual {
        Rep::irrep(n).dual()
    } else {
        Rep::irrep(n)
    }
}

fn unit(d: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); d];
    v[i] = Scalar::one();
    v
}

impl TripleEngine {
    pub fn new(level: &Scalar, order: usize) -> TripleEngine {
        TripleEngine {
            level: level.clone(),
            order,
            tables: Mutex::new(HashMap::new()),
            channels: Mutex::new(HashMap::new()),
        }
    }

    /// Φ^{h} for the idx-th element h of the dual basis of Hom(V_l ⊗ V_m, V_n) (or its dual side).
    fn table(&self, dual: bool, l: u32, m: u32, n: u32, idx: usize) -> Result<Arc<IntertwinerTable>> {
        let key = (dual, l, m, n, idx);
        if let Some(t) = self.tables.lock().unwrap().get(&key) {
            return Ok(t.clone());
        }
        let (fs, gs) = dual_basis_fast(&[Rep::irrep(l), Rep::irrep(m)], &Rep::irrep(n))?;
        let (h, level): (HomTensor, Scalar) =
            if dual { (gs[idx].clone(), dual_level(&self.level)) } else { (fs[idx].clone(), self.level.clone()) };
        let t = Arc::new(IntertwinerTable::new(&rep(l, dual), &rep(m, dual), &rep(n, dual), &level, h, self.order)?);
        self.tables.lock().unwrap().insert(key, t.clone());
        Ok(t)
    }

    fn channels(&self, w: [u32; 4]) -> Result<Option<Channels>> {
        if let Some(c) = self.channels.lock().unwrap().get(&w) {
            return Ok(c.clone());
        }
        let c = match kz_channels(w, &self.level) {
            Ok((phi, psi)) => {
                let d = phi.basis.len();
                let s: Vec<KzSeries> = (0..d).map(|i| phi.series(i, self.order)).collect::<Result<_>>()?;
                let t: Vec<KzSeries> = (0..d).map(|i| psi.series(i, self.order)).collect::<Result<_>>()?;
                Some(Arc::new((phi, psi, s, t)))
            }
            Err(Error::EmptyChannel) => None,
            Err(e) => return Err(e),
        };
        self.channels.lock().unwrap().insert(w, c.clone());
        Ok(c)
    }

    /// ⟨e_out*, u_(p−1) v_(−p−1) w⟩ for p = 0..=M, one side of channel (α, i, j).
    fn side(
        &self,
        dual: bool,
        ws: [u32; 4],
        alpha: u32,
        ij: (usize, usize),
        uvw: [usize; 3],
        out: usize,
    ) -> Result<Vec<Scalar>> {
        let [l, m, n, g] = ws;
        let inner = self.table(dual, m, n, alpha, ij.1)?;
        let outer = self.table(dual, l, alpha, g, ij.0)?;
        let top = WVec::basis((vec![], uvw[2]));
        let (u, v) = (unit(l as usize + 1, uvw[0]), unit(m as usize + 1, uvw[1]));
        let mut coeffs = Vec::with_capacity(self.order + 1);
        for p in 0..=self.order as i32 {
            let y = inner.apply(&v, -p - 1, &top)?;
            let z = outer.apply(&u, p - 1, &y)?;
            coeffs.push(z.coeff(&(vec![], out)));
        }
        Ok(coeffs)
    }

    /// The series for basis vectors a = E(λ,·,·), b = E(μ,·,·), c = E(ν,·,·), d* dual to E(γ,·,·).
    fn basis_series(
        &self,
        a: FKey,
        b: FKey,
        c: FKey,
        d: FKey,
        agree: &mut bool,
        cancel: &mut bool,
    ) -> Result<Vec<Scalar>> {
        let ws = [a.0, b.0, c.0, d.0];
        let mut total = vec![Scalar::zero(); self.order + 1];
        let Some(ch) = self.channels(ws)? else { return Ok(total) };
        let (phi, psi, s_phi, s_psi) = &*ch;
        let dims = ws.map(|w| w as usize + 1);
        let flat = (a.1 as usize * dims[1] + b.1 as usize) * dims[2] + c.1 as usize;
        let flat_bar = (a.2 as usize * dims[1] + b.2 as usize) * dims[2] + c.2 as usize;
        for (idx, &(alpha, i, j)) in phi.labels.iter().enumerate() {
            let left = self.side(false, ws, alpha, (i, j), [a.1 as usize, b.1 as usize, c.1 as usize], d.1 as usize)?;
            let right = self.side(true, ws, alpha, (i, j), [a.2 as usize, b.2 as usize, c.2 as usize], d.2 as usize)?;
            // the KZ coefficients on the same inputs
            for (p, x) in left.iter().enumerate() {
                let t = phi.tensor(&s_phi[idx].coeffs[p]);
                *agree &= t.mat[d.1 as usize][flat] == *x;
            }
            for (p, x) in right.iter().enumerate() {
                let t = psi.tensor(&s_psi[idx].coeffs[p]);
                *agree &= t.mat[d.2 as usize][flat_bar] == *x;
            }
            let ea = s_phi[idx].exponents.0.add_ref(&s_psi[idx].exponents.0);
            let eb = s_phi[idx].exponents.1.add_ref(&s_psi[idx].exponents.1);
            let inner =
                self.table(false, b.0, c.0, alpha, j)?.offset.add_ref(&self.table(true, b.0, c.0, alpha, j)?.offset);
            let outer =
                self.table(false, a.0, alpha, d.0, i)?.offset.add_ref(&self.table(true, a.0, alpha, d.0, i)?.offset);
            *cancel &= ea.is_zero() && eb.is_zero() && inner.is_zero() && outer.is_zero();
            for m in 0..=self.order {
                for p in 0..=m {
                    if !left[p].is_zero() && !right[m - p].is_zero() {
                        total[m] = total[m].add_ref(&left[p].mul_ref(&right[m - p]));
                    }
                }
            }
        }
        Ok(total)
    }

    fn series(
        &self,
        a: &RegFun,
        b: &RegFun,
        c: &RegFun,
        d: FKey,
        agree: &mut bool,
        cancel: &mut bool,
    ) -> Result<Vec<Scalar>> {
        let mut total = vec![Scalar::zero(); self.order + 1];
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                for (kc, cc) in &c.terms {
                    let s = self.basis_series(*ka, *kb, *kc, d, agree, cancel)?;
                    let coef = ca.mul_ref(cb).mul_ref(cc);
                    for (t, x) in total.iter_mut().zip(s) {
                        if !x.is_zero() {
                            *t = t.add_ref(&x.mul_ref(&coef));
                        }
                    }
                }
            }
        }
        Ok(total)
    }

    /// (d*, Y(a, z₁)Y(b, z₂)c) through order M against (d*, a·b·c).
    pub fn triple(&self, a: &RegFun, b: &RegFun, c: &RegFun, d: FKey) -> Result<TripleReport> {
        let (mut agree, mut cancel) = (true, true);
        let series = self.series(a, b, c, d, &mut agree, &mut cancel)?;
        let swapped = self.series(b, a, c, d, &mut agree, &mut cancel)?;
        let abc = regfun::mul_uncapped(&regfun::mul_uncapped(a, b), c);
        Ok(TripleReport { series, expected: abc.coeff(&d), swapped, kz_agree: agree, offsets_cancel: cancel })
    }
}

/// One-shot version of [`TripleEngine::triple`].
pub fn triple_product(
    a: &RegFun,
    b: &RegFun,
    c: &RegFun,
    d: FKey,
    level: &Scalar,
    order: usize,
) -> Result<TripleReport> {
    TripleEngine::new(level, order).triple(a, b, c, d)
}
