//! The 1-truncated vertex algebra V_0 = A, V_1 = T ⊕ Ω attached to a vertex algebroid.

use super::{apply, bracket, d, frame_add, frame_mul, frame_scale, frame_sub, lie, pair_tw, Acc, AlgebroidData};
use super::{AxiomReport, Span, V1};
use crate::regfun::{self, RegFun};
use crate::scalar::Scalar;

/// An element of V_0 ⊕ V_1.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Val {
    pub v0: RegFun,
    pub v1: V1,
}

impl Val {
    pub fn zero() -> Val {
        Val::default()
    }
    pub fn fun(a: RegFun) -> Val {
        Val { v0: a, v1: V1::zero() }
    }
    pub fn one(x: V1) -> Val {
        Val { v0: RegFun::new(), v1: x }
    }
    pub fn is_zero(&self) -> bool {
        self.v0.is_zero() && self.v1.is_zero()
    }
    pub fn plus(&self, o: &Val) -> Val {
        Val { v0: self.v0.plus(&o.v0), v1: self.v1.plus(&o.v1) }
    }
    pub fn minus(&self, o: &Val) -> Val {
        Val { v0: self.v0.minus(&o.v0), v1: self.v1.minus(&o.v1) }
    }
    pub fn scaled(&self, s: &Scalar) -> Val {
        Val { v0: self.v0.scaled(s), v1: self.v1.scaled(s) }
    }
}

fn opt_sum(a: Option<Val>, b: Option<Val>) -> Option<Val> {
    Some(a?.plus(&b?))
}

/// Operations (−1), (0), (1) built from the algebroid data.
pub struct TruncatedVA<'a, D: AlgebroidData> {
    pub alg: &'a D,
}

impl<'a, D: AlgebroidData> TruncatedVA<'a, D> {
    pub fn new(alg: &'a D) -> Self {
        TruncatedVA { alg }
    }

    pub fn vacuum(&self) -> Val {
        Val::fun(regfun::one())
    }

    /// ∂ : V_0 → V_1; undefined on V_1.
    pub fn partial(&self, u: &Val) -> Option<Val> {
        if !u.v1.is_zero() {
            return None;
        }
        Some(Val::one(V1::form(d(&u.v0))))
    }

    /// u_(n) v for n ∈ {−1, 0, 1}; None where some component would leave V_0 ⊕ V_1.
    pub fn op(&self, n: i32, u: &Val, v: &Val) -> Option<Val> {
        if !(-1..=1).contains(&n) {
            return None;
        }
        let mut out = Val::zero();
        if !u.v0.is_zero() && !v.v0.is_zero() {
            out = out.plus(&self.op00(n, &u.v0, &v.v0));
        }
        if !u.v0.is_zero() && !v.v1.is_zero() {
            out = out.plus(&self.op01(n, &u.v0, &v.v1));
        }
        if !u.v1.is_zero() && !v.v0.is_zero() {
            out = out.plus(&self.op10(n, &u.v1, &v.v0));
        }
        if !u.v1.is_zero() && !v.v1.is_zero() {
            out = out.plus(&self.op11(n, &u.v1, &v.v1)?);
        }
        Some(out)
    }

    fn op00(&self, n: i32, a: &RegFun, b: &RegFun) -> Val {
        if n == -1 {
            Val::fun(regfun::mul_uncapped(a, b))
        } else {
            Val::zero()
        }
    }

    fn op01(&self, n: i32, a: &RegFun, x: &V1) -> Val {
        match n {
            -1 => {
                let t = frame_mul(a, &x.t);
                let w = frame_sub(&frame_mul(a, &x.w), &self.alg.gamma(a, &x.t));
                Val::one(V1 { t, w })
            }
            0 => Val::fun(apply(&x.t, a).scaled(&Scalar::int(-1))),
            _ => Val::zero(),
        }
    }

    fn op10(&self, n: i32, x: &V1, a: &RegFun) -> Val {
        match n {
            -1 => {
                let mut r = self.op01(-1, a, x);
                r.v1.w = frame_add(&r.v1.w, &d(&apply(&x.t, a)));
                r
            }
            0 => Val::fun(apply(&x.t, a)),
            _ => Val::zero(),
        }
    }

    fn op11(&self, n: i32, x: &V1, y: &V1) -> Option<Val> {
        match n {
            -1 => None,
            0 => {
                let t = bracket(&x.t, &y.t);
                let half = Scalar::frac(1, 2);
                let mut w = frame_scale(&Scalar::int(-1), &self.alg.c(&x.t, &y.t));
                w = frame_add(&w, &frame_scale(&half, &d(&self.alg.pair_tt(&x.t, &y.t))));
                w = frame_add(&w, &lie(&x.t, &y.w));
                w = frame_sub(&w, &lie(&y.t, &x.w));
                w = frame_add(&w, &d(&pair_tw(&y.t, &x.w)));
                Some(Val::one(V1 { t, w }))
            }
            1 => Some(Val::fun(self.alg.pair(x, y))),
            _ => Some(Val::zero()),
        }
    }

    fn labelled(&self, span: &Span) -> (Vec<(String, RegFun)>, Vec<(String, V1)>) {
        let mut xs: Vec<(String, V1)> = span.fields().into_iter().map(|(l, t)| (l, V1::field(t))).collect();
        xs.extend(span.forms().into_iter().map(|(l, w)| (l, V1::form(w))));
        (span.functions.clone(), xs)
    }

    fn all_elements(&self, span: &Span) -> Vec<(String, Val)> {
        let (fs, xs) = self.labelled(span);
        let mut out: Vec<(String, Val)> = fs.into_iter().map(|(l, a)| (l, Val::fun(a))).collect();
        out.extend(xs.into_iter().map(|(l, x)| (l, Val::one(x))));
        out
    }

    /// α_(0)(β_(i)γ) = (α_(0)β)_(i)γ + β_(i)(α_(0)γ) wherever both sides are defined.
    fn jacobi(&self, id: &'static str, ns: &[i32], elems: &[(String, Val)]) -> super::AxiomResult {
        let mut acc = Acc::new(id);
        for (la, a) in elems {
            for (lb, b) in elems {
                for (lc, c) in elems {
                    for &i in ns {
                        let lhs = self.op(i, b, c).and_then(|bc| self.op(0, a, &bc));
                        let r1 = self.op(0, a, b).and_then(|ab| self.op(i, &ab, c));
                        let r2 = self.op(0, a, c).and_then(|ac| self.op(i, b, &ac));
                        if let (Some(l), Some(r)) = (lhs, opt_sum(r1, r2)) {
                            acc.check(l == r, || format!("i={i} α={la} β={lb} γ={lc}"));
                        }
                    }
                }
            }
        }
        acc.done()
    }

    /// Axioms of a 1-truncated vertex algebra. `triples` feeds the Jacobi-type identity.
    pub fn check_axioms(&self, span: &Span, triples: &Span) -> AxiomReport {
        let (fs, xs) = self.labelled(span);
        let one = self.vacuum();
        let m1 = Scalar::int(-1);
        let mut results = Vec::new();
        let va = |a: &RegFun| Val::fun(a.clone());
        let vx = |x: &V1| Val::one(x.clone());
        let da = |a: &RegFun| Val::one(V1::form(d(a)));

        let mut acc = Acc::new("vacuum");
        for (la, a) in &fs {
            acc.check(self.op(-1, &va(a), &one) == Some(va(a)), || format!("a={la}"));
        }
        for (lx, x) in &xs {
            acc.check(self.op(-1, &vx(x), &one) == Some(vx(x)), || format!("x={lx}"));
            acc.check(self.op(0, &vx(x), &one) == Some(Val::zero()), || format!("x={lx}"));
        }
        results.push(acc.done());

        let mut acc = Acc::new("d-zero-product");
        for (la, a) in &fs {
            for (lb, b) in &fs {
                acc.check(self.op(0, &da(a), &va(b)) == Some(Val::zero()), || format!("a={la} b={lb}"));
            }
            for (lx, x) in &xs {
                acc.check(self.op(0, &da(a), &vx(x)) == Some(Val::zero()), || format!("a={la} x={lx}"));
            }
        }
        results.push(acc.done());

        let mut acc = Acc::new("d-one-product");
        for (la, a) in &fs {
            for (lx, x) in &xs {
                let lhs = self.op(1, &da(a), &vx(x));
                let rhs = self.op(0, &va(a), &vx(x)).map(|v| v.scaled(&m1));
                acc.check(lhs == rhs, || format!("a={la} x={lx}"));
            }
        }
        results.push(acc.done());

        let mut acc = Acc::new("d-derivation");
        for (la, a) in &fs {
            for (lb, b) in &fs {
                let lhs = self.op(-1, &va(a), &va(b)).and_then(|p| self.partial(&p));
                let rhs = opt_sum(self.op(-1, &da(a), &va(b)), self.op(-1, &va(a), &da(b)));
                acc.check(lhs == rhs, || format!("a={la} b={lb}"));
            }
        }
        results.push(acc.done());

        let mut acc = Acc::new("d-commutes");
        for (la, a) in &fs {
            for (lx, x) in &xs {
                let lhs = self.op(0, &vx(x), &va(a)).and_then(|p| self.partial(&p));
                acc.check(lhs == self.op(0, &vx(x), &da(a)), || format!("a={la} x={lx}"));
            }
        }
        results.push(acc.done());

        let mut acc = Acc::new("commutative");
        for (la, a) in &fs {
            for (lb, b) in &fs {
                acc.check(self.op(-1, &va(a), &va(b)) == self.op(-1, &va(b), &va(a)), || format!("a={la} b={lb}"));
            }
        }
        results.push(acc.done());

        let mut acc = Acc::new("quasi-commutative");
        for (la, a) in &fs {
            for (lx, x) in &xs {
                let lhs = self.op(-1, &va(a), &vx(x));
                let corr = self.op(0, &vx(x), &va(a)).and_then(|p| self.partial(&p));
                let rhs = opt_sum(self.op(-1, &vx(x), &va(a)), corr.map(|c| c.scaled(&m1)));
                acc.check(lhs == rhs, || format!("a={la} x={lx}"));
            }
        }
        results.push(acc.done());

        let mut acc = Acc::new("skew-0");
        for (la, a) in &fs {
            for (lx, x) in &xs {
                let rhs = self.op(0, &va(a), &vx(x)).map(|v| v.scaled(&m1));
                acc.check(self.op(0, &vx(x), &va(a)) == rhs, || format!("a={la} x={lx}"));
            }
        }
        for (lx, x) in &xs {
            for (ly, y) in &xs {
                let corr = self.op(1, &vx(y), &vx(x)).and_then(|p| self.partial(&p));
                let rhs = opt_sum(self.op(0, &vx(y), &vx(x)).map(|v| v.scaled(&m1)), corr);
                acc.check(self.op(0, &vx(x), &vx(y)) == rhs, || format!("x={lx} y={ly}"));
            }
        }
        results.push(acc.done());

        let mut acc = Acc::new("skew-1");
        for (lx, x) in &xs {
            for (ly, y) in &xs {
                acc.check(self.op(1, &vx(x), &vx(y)) == self.op(1, &vx(y), &vx(x)), || format!("x={lx} y={ly}"));
            }
        }
        results.push(acc.done());

        let mut acc = Acc::new("associative");
        for (la, a) in &fs {
            for (lb, b) in &fs {
                for (lc, c) in fs.iter().take(5) {
                    let lhs = self.op(-1, &va(a), &va(b)).and_then(|p| self.op(-1, &p, &va(c)));
                    let rhs = self.op(-1, &va(b), &va(c)).and_then(|p| self.op(-1, &va(a), &p));
                    acc.check(lhs == rhs, || format!("a={la} b={lb} c={lc}"));
                }
            }
        }
        results.push(acc.done());

        let elems = self.all_elements(triples);
        results.push(self.jacobi("jacobi", &[-1, 0, 1], &elems));

        let mut acc = Acc::new("mixed-0");
        for (la, a) in &fs {
            for (lb, b) in &fs {
                for (lx, x) in &xs {
                    let lhs = self.op(-1, &va(a), &vx(x)).and_then(|p| self.op(0, &p, &va(b)));
                    let rhs = self.op(0, &vx(x), &va(b)).and_then(|p| self.op(-1, &va(a), &p));
                    acc.check(lhs == rhs, || format!("a={la} b={lb} x={lx}"));
                }
            }
        }
        results.push(acc.done());

        let mut acc = Acc::new("mixed-associative");
        for (la, a) in &fs {
            for (lb, b) in &fs {
                for (lx, x) in &xs {
                    let lhs = self.op(-1, &va(a), &va(b)).and_then(|p| self.op(-1, &p, &vx(x)));
                    let t1 = self.op(-1, &va(b), &vx(x)).and_then(|p| self.op(-1, &va(a), &p));
                    let t2 = self.op(0, &va(b), &vx(x)).and_then(|p| self.op(-1, &da(a), &p));
                    let t3 = self.op(0, &va(a), &vx(x)).and_then(|p| self.op(-1, &da(b), &p));
                    acc.check(lhs == opt_sum(opt_sum(t1, t2), t3), || format!("a={la} b={lb} x={lx}"));
                }
            }
        }
        results.push(acc.done());

        let mut acc = Acc::new("mixed-1");
        for (la, a) in &fs {
            for (lx, x) in &xs {
                for (ly, y) in &xs {
                    let lhs = self.op(-1, &va(a), &vx(x)).and_then(|p| self.op(1, &p, &vx(y)));
                    let t1 = self.op(1, &vx(x), &vx(y)).and_then(|p| self.op(-1, &va(a), &p));
                    let t2 = self.op(0, &vx(y), &va(a)).and_then(|p| self.op(0, &vx(x), &p));
                    acc.check(lhs == opt_sum(t1, t2.map(|v| v.scaled(&m1))), || format!("a={la} x={lx} y={ly}"));
                }
            }
        }
        results.push(acc.done());

        AxiomReport { results, notes: vec!["(∂a)_(1)x = −a_(0)x checked in degree-correct form".into()] }
    }

    /// Axioms of the 1-truncated conformal algebra obtained by forgetting (−1).
    pub fn check_conformal_axioms(&self, span: &Span, triples: &Span) -> AxiomReport {
        let full = self.check_axioms(span, &Span { functions: vec![], coeffs: vec![] });
        let keep = ["d-zero-product", "d-one-product", "d-commutes", "skew-0", "skew-1"];
        let mut results: Vec<_> = full.results.into_iter().filter(|r| keep.contains(&r.id)).collect();
        results.push(self.jacobi("jacobi", &[0, 1], &self.all_elements(triples)));
        AxiomReport { results, notes: vec![] }
    }
}
