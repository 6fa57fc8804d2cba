//! Series solutions of the KZ system on Hom_g(V_λ ⊗ V_μ ⊗ V_ν, V_γ).
//!
//! Φ = z₁^a z₂^b Σ_m c_m x^m with x = z₂/z₁ and c_m acted on from the right by Ω.
//! Matching powers of x gives two recursions:
//!   z₂: c_m ((b + m) − Ω₂₃/ϰ) = −ϰ⁻¹ (c_0 + … + c_{m−1}) Ω₁₂
//!   z₁: c_m ((a − m) − (Ω₁₂ + Ω₁₃)/ϰ) = ϰ⁻¹ (c_0 + … + c_{m−1}) Ω₁₂

use super::{compose_hom, hom_times_omega, Pair};
use crate::algebroid::{Acc, AxiomReport};
use crate::error::{Error, Result};
use crate::lie_core::{conformal_weight, dual_basis_fast, dual_hom_pairing, dual_level, HomTensor, Rep};
use crate::linalg::{self, Matrix};
use crate::regfun::sl2;
use crate::scalar::Scalar;

/// (α, i, j): the basis element r_i^α ⊗ f_j^α.
pub type Label = (u32, usize, usize);

#[derive(Clone, Debug)]
pub struct KzChannel {
    /// λ, μ, ν, γ.
    pub weights: [u32; 4],
    /// true for the V_{·*, k̄} side.
    pub dual: bool,
    pub level: Scalar,
    pub labels: Vec<Label>,
    pub basis: Vec<HomTensor>,
    /// Ω₁₂, Ω₁₃, Ω₂₃ in the basis, acting on row vectors.
    pub omega: [Matrix; 3],
    reps: [Rep; 4],
}

#[derive(Clone, Debug, PartialEq)]
pub struct KzSeries {
    pub label: Label,
    /// Exponents of z₁ and z₂.
    pub exponents: (Scalar, Scalar),
    /// c_m in the channel basis, m = 0..=M.
    pub coeffs: Vec<Vec<Scalar>>,
}

fn rep(n: u32, dual: bool) -> Rep {
    if dual {
        Rep::irrep(n).dual()
    } else {
        Rep::irrep(n)
    }
}

/// The channel for level k and its partner for the dual modules at k̄, with dual bases.
pub fn kz_channels(weights: [u32; 4], level: &Scalar) -> Result<(KzChannel, KzChannel)> {
    let [l, m, n, g] = weights;
    let mut labels = Vec::new();
    let (mut left, mut right) = (Vec::new(), Vec::new());
    let mut alpha = m.abs_diff(n);
    while alpha <= m + n {
        let outer = dual_basis_fast(&[Rep::irrep(l), Rep::irrep(alpha)], &Rep::irrep(g));
        let inner = dual_basis_fast(&[Rep::irrep(m), Rep::irrep(n)], &Rep::irrep(alpha));
        match (outer, inner) {
            (Ok((rs, ss)), Ok((fs, gs))) => {
                for (i, (r, s)) in rs.iter().zip(&ss).enumerate() {
                    for (j, (f, gg)) in fs.iter().zip(&gs).enumerate() {
                        labels.push((alpha, i, j));
                        left.push(compose_hom(r, f, l as usize + 1));
                        right.push(compose_hom(s, gg, l as usize + 1));
                    }
                }
            }
            (Err(Error::EmptyChannel), _) | (_, Err(Error::EmptyChannel)) => {}
            (Err(e), _) | (_, Err(e)) => return Err(e),
        }
        alpha += 2;
    }
    if labels.is_empty() {
        return Err(Error::EmptyChannel);
    }
    let kbar = dual_level(level);
    Ok((
        KzChannel::new(weights, false, level.clone(), labels.clone(), left)?,
        KzChannel::new(weights, true, kbar, labels, right)?,
    ))
}

fn coords(basis: &[HomTensor], t: &HomTensor) -> Result<Vec<Scalar>> {
    let flat = |h: &HomTensor| -> Vec<Scalar> { h.mat.iter().flatten().cloned().collect() };
    let cols: Vec<Vec<Scalar>> = basis.iter().map(flat).collect();
    let rows = cols[0].len();
    let m: Matrix = (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    linalg::solve(&m, &flat(t)).map_err(|_| Error::Invalid("Ω leaves the Hom space".into()))
}

fn row_times(v: &[Scalar], m: &Matrix) -> Vec<Scalar> {
    (0..m.first().map_or(0, |r| r.len()))
        .map(|q| {
            v.iter().zip(m).fold(Scalar::zero(), |acc, (x, row)| {
                if x.is_zero() || row[q].is_zero() {
                    acc
                } else {
                    acc.add_ref(&x.mul_ref(&row[q]))
                }
            })
        })
        .collect()
}

impl KzChannel {
    fn new(
        weights: [u32; 4],
        dual: bool,
        level: Scalar,
        labels: Vec<Label>,
        basis: Vec<HomTensor>,
    ) -> Result<KzChannel> {
        let reps = weights.map(|w| rep(w, dual));
        let three = [reps[0].clone(), reps[1].clone(), reps[2].clone()];
        let mut omega: [Matrix; 3] = Default::default();
        for (slot, which) in [Pair::P12, Pair::P13, Pair::P23].into_iter().enumerate() {
            omega[slot] =
                basis.iter().map(|b| coords(&basis, &hom_times_omega(b, &three, which))).collect::<Result<_>>()?;
        }
        Ok(KzChannel { weights, dual, level, labels, basis, omega, reps })
    }

    pub fn reps(&self) -> &[Rep; 4] {
        &self.reps
    }

    fn kappa(&self) -> Scalar {
        self.level.add_ref(&sl2().hv())
    }

    fn delta(&self, n: u32) -> Result<Scalar> {
        conformal_weight(n, &self.level)
    }

    /// Leading exponents (Δ(γ) − Δ(λ) − Δ(α), Δ(α) − Δ(μ) − Δ(ν)) at this side's level.
    pub fn exponents(&self, alpha: u32) -> Result<(Scalar, Scalar)> {
        let [l, m, n, g] = self.weights;
        let a = self.delta(g)?.sub_ref(&self.delta(l)?).sub_ref(&self.delta(alpha)?);
        let b = self.delta(alpha)?.sub_ref(&self.delta(m)?).sub_ref(&self.delta(n)?);
        Ok((a, b))
    }

    fn solve_row(&self, lhs: &Matrix, rhs: &[Scalar], order: usize) -> Result<Vec<Scalar>> {
        // c lhs = rhs  ⇔  lhsᵀ cᵀ = rhsᵀ
        let t = linalg::transpose(lhs);
        if linalg::rank(&t) < t.len() {
            return Err(Error::Resonance(order));
        }
        linalg::solve(&t, rhs)
    }

    fn recursion(&self, idx: usize, order: usize, via_z1: bool) -> Result<KzSeries> {
        let label = self.labels[idx];
        let (a, b) = self.exponents(label.0)?;
        let kinv = self.kappa().inv()?;
        let d = self.basis.len();
        let [w12, w13, w23] = &self.omega;
        let mut c0 = vec![Scalar::zero(); d];
        c0[idx] = Scalar::one();
        // the leading term must solve the order-0 equation
        let lead = |c: &[Scalar], shift: &Scalar, w: &Matrix| -> Vec<Scalar> {
            let cw = row_times(c, w);
            c.iter().zip(cw).map(|(x, y)| x.mul_ref(shift).sub_ref(&y.mul_ref(&kinv))).collect()
        };
        let w1: Matrix = (0..d).map(|p| (0..d).map(|q| w12[p][q].add_ref(&w13[p][q])).collect()).collect();
        if lead(&c0, &b, w23).iter().any(|x| !x.is_zero()) || lead(&c0, &a, &w1).iter().any(|x| !x.is_zero()) {
            return Err(Error::RecursionInconsistent(0));
        }
        let mut coeffs = vec![c0.clone()];
        let mut partial = c0;
        for m in 1..=order {
            let (shift, w, sign) = if via_z1 {
                (a.sub_ref(&Scalar::int(m as i64)), &w1, kinv.clone())
            } else {
                (b.add_ref(&Scalar::int(m as i64)), w23, kinv.neg_ref())
            };
            let lhs: Matrix = (0..d)
                .map(|p| {
                    (0..d)
                        .map(|q| {
                            let x = w[p][q].mul_ref(&kinv).neg_ref();
                            if p == q {
                                x.add_ref(&shift)
                            } else {
                                x
                            }
                        })
                        .collect()
                })
                .collect();
            let rhs: Vec<Scalar> = row_times(&partial, w12).iter().map(|x| x.mul_ref(&sign)).collect();
            let c = self.solve_row(&lhs, &rhs, m)?;
            for (p, x) in partial.iter_mut().zip(&c) {
                *p = p.add_ref(x);
            }
            coeffs.push(c);
        }
        Ok(KzSeries { label, exponents: (a, b), coeffs })
    }

    /// The solution with leading coefficient basis[idx], through order M (z₂ recursion).
    pub fn series(&self, idx: usize, order: usize) -> Result<KzSeries> {
        self.recursion(idx, order, false)
    }

    /// Same solution from the z₁ equation.
    pub fn series_z1(&self, idx: usize, order: usize) -> Result<KzSeries> {
        self.recursion(idx, order, true)
    }

    /// A coefficient vector as a tensor in Hom(V_λ ⊗ V_μ ⊗ V_ν, V_γ).
    pub fn tensor(&self, c: &[Scalar]) -> HomTensor {
        let mut mat = linalg::zeros(self.basis[0].mat.len(), self.basis[0].mat[0].len());
        for (x, b) in c.iter().zip(&self.basis) {
            if x.is_zero() {
                continue;
            }
            for (row, brow) in mat.iter_mut().zip(&b.mat) {
                for (cell, y) in row.iter_mut().zip(brow) {
                    if !y.is_zero() {
                        *cell = cell.add_ref(&x.mul_ref(y));
                    }
                }
            }
        }
        HomTensor { mat }
    }
}

/// (Φ, Ψ) as a series: exponent sums and the coefficients of x^m.
pub fn pairing_series(phi: &KzSeries, psi: &KzSeries, gram: &Matrix) -> (Scalar, Scalar, Vec<Scalar>) {
    let order = phi.coeffs.len().min(psi.coeffs.len());
    let mut out = Vec::with_capacity(order);
    for m in 0..order {
        let mut s = Scalar::zero();
        for p in 0..=m {
            let cg = row_times(&phi.coeffs[p], gram);
            for (x, y) in cg.iter().zip(&psi.coeffs[m - p]) {
                if !x.is_zero() && !y.is_zero() {
                    s = s.add_ref(&x.mul_ref(y));
                }
            }
        }
        out.push(s);
    }
    (phi.exponents.0.add_ref(&psi.exponents.0), phi.exponents.1.add_ref(&psi.exponents.1), out)
}

/// Constancy of (Φ^{ijα}, Ψ^{i'j'β}) on every channel with weights ≤ max_weight.
pub fn pairing_constancy(max_weight: u32, level: &Scalar, order: usize) -> Result<AxiomReport> {
    let mut lead = Acc::new("kz-leading-term");
    let mut gram_acc = Acc::new("kz-leading-pairing");
    let mut sym = Acc::new("omega-symmetric");
    let mut flat = Acc::new("kz-flatness");
    let mut cons = Acc::new("pairing-constant");
    let mut deriv = Acc::new("pairing-derivatives");
    let mut expo = Acc::new("exponents-cancel");
    let w = max_weight;
    for l in 0..=w {
        for m in 0..=w {
            for n in 0..=w {
                for g in 0..=w {
                    let (phi, psi) = match kz_channels([l, m, n, g], level) {
                        Ok(x) => x,
                        Err(Error::EmptyChannel) => continue,
                        Err(e) => return Err(e),
                    };
                    let tag = format!("({l},{m},{n};{g})");
                    let d = phi.basis.len();
                    let mut gram = linalg::zeros(d, d);
                    for p in 0..d {
                        for q in 0..d {
                            gram[p][q] = dual_hom_pairing(&phi.basis[p], &psi.basis[q])?;
                            let want = if p == q { Scalar::one() } else { Scalar::zero() };
                            gram_acc.check(gram[p][q] == want, || format!("{tag} ({p},{q}) = {}", gram[p][q]));
                        }
                    }
                    // (fΩ, g) = (f, gΩ)
                    let reps3 = |c: &KzChannel| [c.reps[0].clone(), c.reps[1].clone(), c.reps[2].clone()];
                    for which in [Pair::P12, Pair::P13, Pair::P23] {
                        for p in 0..d {
                            for q in 0..d {
                                let lhs = dual_hom_pairing(
                                    &hom_times_omega(&phi.basis[p], &reps3(&phi), which),
                                    &psi.basis[q],
                                )?;
                                let rhs = dual_hom_pairing(
                                    &phi.basis[p],
                                    &hom_times_omega(&psi.basis[q], &reps3(&psi), which),
                                )?;
                                sym.check(lhs == rhs, || format!("{tag} {which:?} ({p},{q})"));
                            }
                        }
                    }
                    let mut phis = Vec::with_capacity(d);
                    let mut psis = Vec::with_capacity(d);
                    for idx in 0..d {
                        let s = phi.series(idx, order)?;
                        let t = psi.series(idx, order)?;
                        flat.check(phi.series_z1(idx, order)? == s, || format!("{tag} Φ{:?}", s.label));
                        flat.check(psi.series_z1(idx, order)? == t, || format!("{tag} Ψ{:?}", t.label));
                        let mut e0 = vec![Scalar::zero(); d];
                        e0[idx] = Scalar::one();
                        lead.check(s.coeffs[0] == e0 && t.coeffs[0] == e0, || format!("{tag} {:?}", s.label));
                        phis.push(s);
                        psis.push(t);
                    }
                    for (p, s) in phis.iter().enumerate() {
                        for (q, t) in psis.iter().enumerate() {
                            let (ea, eb, ser) = pairing_series(s, t, &gram);
                            let same = s.label.0 == t.label.0;
                            if same {
                                expo.check(ea.is_zero() && eb.is_zero(), || format!("{tag} {:?}", s.label));
                            }
                            for (mm, c) in ser.iter().enumerate() {
                                let want = if mm == 0 && p == q { Scalar::one() } else { Scalar::zero() };
                                cons.check(*c == want, || format!("{tag} {:?}·{:?} x^{mm}: {c}", s.label, t.label));
                                // d/dz₁ and d/dz₂ of z₁^A z₂^B Σ P_m x^m, coefficientwise
                                let m_s = Scalar::int(mm as i64);
                                let d1 = ea.sub_ref(&m_s).mul_ref(c);
                                let d2 = eb.add_ref(&m_s).mul_ref(c);
                                deriv.check(d1.is_zero() && d2.is_zero(), || format!("{tag} x^{mm}"));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(AxiomReport {
        results: vec![lead.done(), gram_acc.done(), sym.done(), flat.done(), expo.done(), cons.done(), deriv.done()],
        notes: vec![],
    })
}
