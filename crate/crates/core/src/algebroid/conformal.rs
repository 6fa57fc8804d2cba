//! The graded conformal algebra C = C_0 ⊕ C_1 ⊕ ∂C_1 ⊕ ∂²C_1 ⊕ … extending a
//! 1-truncated conformal algebra, truncated at a maximal degree.

use super::truncated::{TruncatedVA, Val};
use super::{d, Acc, AlgebroidData, AxiomReport, Span, V1};
use crate::error::{Error, Result};
use crate::regfun::RegFun;
use crate::scalar::{binom_s, Scalar};

/// c0 + Σ_i ∂^i(parts[i]), with c0 ∈ C_0 and parts[i] ∈ C_1 (degree i + 1).
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CElem {
    pub c0: RegFun,
    pub parts: Vec<V1>,
}

impl CElem {
    pub fn zero() -> CElem {
        CElem::default()
    }
    pub fn fun(a: RegFun) -> CElem {
        CElem { c0: a, parts: vec![] }
    }
    pub fn one(x: V1) -> CElem {
        CElem { c0: RegFun::new(), parts: vec![x] }.normalized()
    }
    fn from_val(v: Val) -> CElem {
        CElem { c0: v.v0, parts: vec![v.v1] }.normalized()
    }
    fn normalized(mut self) -> CElem {
        while self.parts.last().is_some_and(|p| p.is_zero()) {
            self.parts.pop();
        }
        self
    }
    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.parts.iter().all(|p| p.is_zero())
    }
    /// Largest degree of a nonzero component.
    pub fn degree(&self) -> usize {
        self.parts.iter().rposition(|p| !p.is_zero()).map(|i| i + 1).unwrap_or(0)
    }
    pub fn plus(&self, o: &CElem) -> CElem {
        let n = self.parts.len().max(o.parts.len());
        let parts = (0..n)
            .map(|i| match (self.parts.get(i), o.parts.get(i)) {
                (Some(a), Some(b)) => a.plus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => V1::zero(),
            })
            .collect();
        CElem { c0: self.c0.plus(&o.c0), parts }.normalized()
    }
    pub fn scaled(&self, s: &Scalar) -> CElem {
        CElem { c0: self.c0.scaled(s), parts: self.parts.iter().map(|p| p.scaled(s)).collect() }.normalized()
    }
    pub fn minus(&self, o: &CElem) -> CElem {
        self.plus(&o.scaled(&Scalar::int(-1)))
    }
    fn components(&self) -> Vec<(usize, Val)> {
        let mut out = Vec::new();
        if !self.c0.is_zero() {
            out.push((0, Val::fun(self.c0.clone())));
        }
        for (i, p) in self.parts.iter().enumerate() {
            if !p.is_zero() {
                out.push((i, Val::one(p.clone())));
            }
        }
        out
    }
}

fn falling(n: i64, i: usize) -> i64 {
    (0..i as i64).map(|t| n - t).product()
}

fn factorial(j: usize) -> i64 {
    (1..=j as i64).product()
}

pub struct GradedConformal<'a, D: AlgebroidData> {
    pub base: TruncatedVA<'a, D>,
    pub max_degree: usize,
}

/// Extends the 1-truncated conformal algebra of `base` up to degree `max_degree`.
pub fn extend_conformal<D: AlgebroidData>(base: TruncatedVA<'_, D>, max_degree: usize) -> GradedConformal<'_, D> {
    GradedConformal { base, max_degree: max_degree.max(1) }
}

impl<'a, D: AlgebroidData> GradedConformal<'a, D> {
    fn bounded(&self, e: CElem) -> Result<CElem> {
        if e.degree() > self.max_degree {
            return Err(Error::ReductionDiverged);
        }
        Ok(e)
    }

    /// Whether products of total degree `deg` lowered by `drop` stay within the bound.
    fn fits(&self, deg: usize, drop: i64) -> bool {
        deg as i64 - drop <= self.max_degree as i64
    }

    pub fn partial(&self, u: &CElem) -> Result<CElem> {
        let mut parts = vec![V1::form(d(&u.c0))];
        parts.extend(u.parts.iter().cloned());
        self.bounded(CElem { c0: RegFun::new(), parts }.normalized())
    }

    pub fn partial_pow(&self, j: usize, u: &CElem) -> Result<CElem> {
        let mut cur = u.clone();
        for _ in 0..j {
            cur = self.partial(&cur)?;
        }
        Ok(cur)
    }

    /// ∂^{(j)} = ∂^j / j!.
    pub fn divided_partial(&self, j: usize, u: &CElem) -> Result<CElem> {
        Ok(self.partial_pow(j, u)?.scaled(&Scalar::frac(1, factorial(j))))
    }

    /// x_(m) y for x, y ∈ C_0 ⊕ C_1; only m = 0, 1 can be nonzero.
    fn base_product(&self, m: i64, x: &Val, y: &Val) -> Result<CElem> {
        if !(0..=1).contains(&m) {
            return Ok(CElem::zero());
        }
        let v = self.base.op(m as i32, x, y).ok_or(Error::ReductionDiverged)?;
        Ok(CElem::from_val(v))
    }

    /// (∂^i x)_(n)(∂^j y).
    fn product_hom(&self, n: i64, i: usize, x: &Val, j: usize, y: &Val) -> Result<CElem> {
        if n < i as i64 {
            return Ok(CElem::zero());
        }
        // (∂^i x)_(n) = (−1)^i n^{(i)} x_(n−i)
        let pre = falling(n, i) * if i % 2 == 0 { 1 } else { -1 };
        let m = n - i as i64;
        // x_(m) ∂^j y = Σ_l C(j, l) m^{(l)} ∂^{j−l}(x_(m−l) y)
        let mut out = CElem::zero();
        for l in 0..=j.min(m as usize) {
            let c = binom_s(j as i64, l as i64).mul_ref(&Scalar::int(falling(m, l) * pre));
            if c.is_zero() {
                continue;
            }
            let p = self.base_product(m - l as i64, x, y)?;
            if p.is_zero() {
                continue;
            }
            out = out.plus(&self.partial_pow(j - l, &p)?.scaled(&c));
        }
        self.bounded(out)
    }

    /// u_(n) v.
    pub fn product(&self, n: i64, u: &CElem, v: &CElem) -> Result<CElem> {
        let mut out = CElem::zero();
        if n < 0 {
            return Err(Error::Invalid("conformal products need n ≥ 0".into()));
        }
        for (i, x) in u.components() {
            for (j, y) in v.components() {
                out = out.plus(&self.product_hom(n, i, &x, j, &y)?);
            }
        }
        Ok(out)
    }

    /// Span elements with their ∂-images up to the degree bound.
    pub fn sample(&self, span: &Span) -> Vec<(String, CElem)> {
        let mut base: Vec<(String, CElem)> =
            span.functions.iter().map(|(l, a)| (l.clone(), CElem::fun(a.clone()))).collect();
        base.extend(span.fields().into_iter().map(|(l, t)| (l, CElem::one(V1::field(t)))));
        base.extend(span.forms().into_iter().map(|(l, w)| (l, CElem::one(V1::form(w)))));
        let mut out = Vec::new();
        for (l, e) in base {
            let mut cur = e;
            let mut j = 0;
            loop {
                let label = if j == 0 { l.clone() } else { format!("∂^{j}({l})") };
                out.push((label, cur.clone()));
                match self.partial(&cur) {
                    Ok(next) if !next.is_zero() && next.degree() < self.max_degree => cur = next,
                    _ => break,
                }
                j += 1;
            }
        }
        out
    }

    /// The three defining identities of a graded conformal algebra, plus translation
    /// covariance of the products, on `span` (pairs) and every `stride`-th triple from `triples` (quasi-Jacobi).
    pub fn check_axioms(&self, span: &Span, triples: &Span, stride: usize) -> Result<AxiomReport> {
        let elems = self.sample(span);
        let small = self.sample(triples);
        let mut results = Vec::new();
        let top = self.max_degree as i64;

        let mut acc = Acc::new("d-product");
        for (la, a) in &elems {
            let Ok(da) = self.partial(a) else { continue };
            for (lb, b) in &elems {
                for n in 0..=top + 1 {
                    if !self.fits(da.degree() + b.degree(), n + 1) {
                        continue;
                    }
                    let lhs = self.product(n, &da, b)?;
                    let rhs = if n == 0 { CElem::zero() } else { self.product(n - 1, a, b)?.scaled(&Scalar::int(-n)) };
                    acc.check(lhs == rhs, || format!("n={n} a={la} b={lb}"));
                }
            }
        }
        results.push(acc.done());

        let mut acc = Acc::new("translation");
        for (la, a) in &elems {
            for (lb, b) in &elems {
                if a.degree() + b.degree() > self.max_degree {
                    continue;
                }
                for n in 0..=top {
                    let Ok(lhs) = self.product(n, a, b).and_then(|p| self.partial(&p)) else { continue };
                    let (Ok(da), Ok(db)) = (self.partial(a), self.partial(b)) else { continue };
                    let rhs = self.product(n, &da, b)?.plus(&self.product(n, a, &db)?);
                    acc.check(lhs == rhs, || format!("n={n} a={la} b={lb}"));
                }
            }
        }
        results.push(acc.done());

        let mut acc = Acc::new("skew-symmetry");
        for (la, a) in &elems {
            for (lb, b) in &elems {
                let span_deg = (a.degree() + b.degree()) as i64;
                for n in 0..=top {
                    if !self.fits(a.degree() + b.degree(), n + 1) {
                        continue;
                    }
                    let lhs = self.product(n, a, b)?;
                    let mut rhs = CElem::zero();
                    for j in 0..=span_deg.max(0) {
                        let p = self.product(n + j, b, a)?;
                        if p.is_zero() {
                            continue;
                        }
                        let t = self.divided_partial(j as usize, &p)?;
                        let s = if (n + 1 + j) % 2 == 0 { 1 } else { -1 };
                        rhs = rhs.plus(&t.scaled(&Scalar::int(s)));
                    }
                    acc.check(lhs == rhs, || format!("n={n} a={la} b={lb}"));
                }
            }
        }
        results.push(acc.done());

        let mut acc = Acc::new("quasi-jacobi");
        let stride = stride.max(1);
        let len = small.len();
        for t in (0..len * len * len).step_by(stride) {
            let ((la, a), (lb, b), (lc, c)) = (&small[t / (len * len)], &small[(t / len) % len], &small[t % len]);
            {
                {
                    let budget = (a.degree() + b.degree() + c.degree()) as i64;
                    for m in 0..=budget.min(top) {
                        for n in 0..=budget.min(top) {
                            if !self.fits(budget as usize, m + n + 2) {
                                continue;
                            }
                            let lhs = self.product(m, a, &self.product(n, b, c)?)?;
                            let mut rhs = self.product(n, b, &self.product(m, a, c)?)?;
                            for j in 0..=m {
                                let ab = self.product(j, a, b)?;
                                if ab.is_zero() {
                                    continue;
                                }
                                let t = self.product(m + n - j, &ab, c)?;
                                rhs = rhs.plus(&t.scaled(&binom_s(m, j)));
                            }
                            acc.check(lhs == rhs, || format!("m={m} n={n} a={la} b={lb} c={lc}"));
                        }
                    }
                }
            }
        }
        results.push(acc.done());

        Ok(AxiomReport { results, notes: vec![format!("truncated at degree {}", self.max_degree)] })
    }
}
