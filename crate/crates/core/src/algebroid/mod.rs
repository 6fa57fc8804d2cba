//! The vertex algebroid of sl2 at level k on regular functions of SL2.
//!
//! Sections of T and Ω are coefficient triples in the left-invariant frames
//! τ_i and ω_i, with ω_i(τ_j) = δ_ij.

pub mod conformal;
pub mod from_envelope;
pub mod truncated;

use crate::error::{Error, Result};
use crate::regfun::{self, FKey, RegFun};
use crate::scalar::Scalar;

pub type Frame = [RegFun; 3];

pub fn frame_zero() -> Frame {
    Default::default()
}

/// The frame element τ_i (or ω_i) with coefficient f.
pub fn frame_unit(i: usize, f: RegFun) -> Frame {
    let mut x = frame_zero();
    x[i] = f;
    x
}

pub fn frame_add(x: &Frame, y: &Frame) -> Frame {
    [x[0].plus(&y[0]), x[1].plus(&y[1]), x[2].plus(&y[2])]
}

pub fn frame_sub(x: &Frame, y: &Frame) -> Frame {
    [x[0].minus(&y[0]), x[1].minus(&y[1]), x[2].minus(&y[2])]
}

pub fn frame_scale(s: &Scalar, x: &Frame) -> Frame {
    [x[0].scaled(s), x[1].scaled(s), x[2].scaled(s)]
}

/// Multiplication by a function.
pub fn frame_mul(f: &RegFun, x: &Frame) -> Frame {
    [mul(f, &x[0]), mul(f, &x[1]), mul(f, &x[2])]
}

pub fn frame_is_zero(x: &Frame) -> bool {
    x.iter().all(|f| f.is_zero())
}

fn mul(a: &RegFun, b: &RegFun) -> RegFun {
    regfun::mul_uncapped(a, b)
}

fn half() -> Scalar {
    Scalar::frac(1, 2)
}

/// An element of V_1 = T ⊕ Ω.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct V1 {
    pub t: Frame,
    pub w: Frame,
}

impl V1 {
    pub fn zero() -> V1 {
        V1::default()
    }
    pub fn field(t: Frame) -> V1 {
        V1 { t, w: frame_zero() }
    }
    pub fn form(w: Frame) -> V1 {
        V1 { t: frame_zero(), w }
    }
    pub fn is_zero(&self) -> bool {
        frame_is_zero(&self.t) && frame_is_zero(&self.w)
    }
    pub fn plus(&self, o: &V1) -> V1 {
        V1 { t: frame_add(&self.t, &o.t), w: frame_add(&self.w, &o.w) }
    }
    pub fn minus(&self, o: &V1) -> V1 {
        V1 { t: frame_sub(&self.t, &o.t), w: frame_sub(&self.w, &o.w) }
    }
    pub fn scaled(&self, s: &Scalar) -> V1 {
        V1 { t: frame_scale(s, &self.t), w: frame_scale(s, &self.w) }
    }
    pub fn mul_fun(&self, f: &RegFun) -> V1 {
        V1 { t: frame_mul(f, &self.t), w: frame_mul(f, &self.w) }
    }
}

/// x(a) for a vector field x.
pub fn apply(x: &Frame, a: &RegFun) -> RegFun {
    let mut out = RegFun::new();
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        let t = regfun::tau(i, a);
        if !t.is_zero() {
            out.add_assign(&mul(xi, &t));
        }
    }
    out
}

/// Lie bracket of vector fields.
pub fn bracket(x: &Frame, y: &Frame) -> Frame {
    let g = regfun::sl2();
    let mut out = frame_zero();
    for i in 0..3 {
        for j in 0..3 {
            if x[i].is_zero() || y[j].is_zero() {
                continue;
            }
            let p = mul(&x[i], &y[j]);
            for (k, c) in g.bracket(i, j) {
                out[k].add_scaled(&p, &Scalar::from_nf(c));
            }
        }
    }
    for k in 0..3 {
        out[k].add_assign(&apply(x, &y[k]));
        out[k].sub_assign(&apply(y, &x[k]));
    }
    out
}

/// The differential ∂a = Σ τ_i(a) ω_i.
pub fn d(a: &RegFun) -> Frame {
    [regfun::tau(0, a), regfun::tau(1, a), regfun::tau(2, a)]
}

/// Lie derivative of a 1-form along a vector field.
pub fn lie(x: &Frame, w: &Frame) -> Frame {
    let g = regfun::sl2();
    let mut out = frame_zero();
    for j in 0..3 {
        if w[j].is_zero() {
            continue;
        }
        out[j].add_assign(&apply(x, &w[j]));
        for i in 0..3 {
            if x[i].is_zero() {
                continue;
            }
            let p = mul(&x[i], &w[j]);
            for (s, c) in g.bracket(i, j) {
                out[s].add_scaled(&p, &Scalar::from_nf(c));
            }
        }
    }
    for i in 0..3 {
        if !w[i].is_zero() && !x[i].is_zero() {
            out = frame_add(&out, &frame_mul(&w[i], &d(&x[i])));
        }
    }
    out
}

/// Canonical pairing T × Ω → A.
pub fn pair_tw(x: &Frame, w: &Frame) -> RegFun {
    let mut out = RegFun::new();
    for i in 0..3 {
        if !x[i].is_zero() && !w[i].is_zero() {
            out.add_assign(&mul(&x[i], &w[i]));
        }
    }
    out
}

/// The level-dependent data γ, ⟨,⟩ on T × T and c. The geometric part is shared.
pub trait AlgebroidData {
    fn level(&self) -> &Scalar;
    fn gamma(&self, a: &RegFun, x: &Frame) -> Frame;
    fn pair_tt(&self, x: &Frame, y: &Frame) -> RegFun;
    fn c(&self, x: &Frame, y: &Frame) -> Frame;

    /// Full pairing on V_1, zero on Ω × Ω.
    fn pair(&self, u: &V1, v: &V1) -> RegFun {
        let mut out = self.pair_tt(&u.t, &v.t);
        out.add_assign(&pair_tw(&u.t, &v.w));
        out.add_assign(&pair_tw(&v.t, &u.w));
        out
    }
}

/// Sign choices for the two γ-terms of the c-extension axiom, whose joining
/// operator is ambiguous as written: c(aτ1, τ2) = ac(τ1, τ2) + s1 γ(a, [τ1, τ2]) + s2 γ(τ2(a), τ1) + ….
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CVariant {
    pub s1: i8,
    pub s2: i8,
}

impl CVariant {
    pub const ALL: [CVariant; 4] = [
        CVariant { s1: 1, s2: 1 },
        CVariant { s1: 1, s2: -1 },
        CVariant { s1: -1, s2: 1 },
        CVariant { s1: -1, s2: -1 },
    ];
}

impl std::fmt::Display for CVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = |x: i8| if x > 0 { '+' } else { '-' };
        write!(f, "c(aτ1,τ2) = ac(τ1,τ2) {} γ(a,[τ1,τ2]) {} γ(τ2(a),τ1) + …", s(self.s1), s(self.s2))
    }
}

/// A_{sl2,k} with γ, ⟨,⟩ and c given by the forced extensions of
/// γ(·, g) = 0, ⟨τ_i, τ_j⟩ = kδ_ij and c(τ_i, τ_j) = 0.
#[derive(Clone, Debug)]
pub struct VertexAlgebroid {
    pub level: Scalar,
    pub variant: CVariant,
}

/// Variant used by `build_algebroid`: the only one for which the full suite passes
/// (see `resolve_c_variant`).
pub const DEFAULT_VARIANT: CVariant = CVariant { s1: 1, s2: -1 };

impl VertexAlgebroid {
    pub fn with_variant(level: Scalar, variant: CVariant) -> VertexAlgebroid {
        VertexAlgebroid { level, variant }
    }

    /// ⟨aτ_i, bτ_j⟩ = kab δ_ij − a τ_jτ_i(b) − τ_i(b τ_j(a)).
    fn pair_basic(&self, a: &RegFun, i: usize, b: &RegFun, j: usize) -> RegFun {
        let mut out = RegFun::new();
        if i == j {
            out.add_scaled(&mul(a, b), &self.level);
        }
        out.sub_assign(&mul(a, &regfun::tau(j, &regfun::tau(i, b))));
        out.sub_assign(&regfun::tau(i, &mul(b, &regfun::tau(j, a))));
        out
    }

    /// c(aτ_i, τ_j) = −½kδ_ij ∂a + ½∂(τ_iτ_j(a)).
    fn c0(&self, a: &RegFun, i: usize, j: usize) -> Frame {
        let mut f = regfun::tau(i, &regfun::tau(j, a)).scaled(&half());
        if i == j {
            f.add_scaled(a, &self.level.mul_ref(&half()).neg_ref());
        }
        d(&f)
    }

    /// c(aτ_i, bτ_j), from the c-extension axiom with the constant field τ_j in front.
    fn c_basic(&self, a: &RegFun, i: usize, b: &RegFun, j: usize) -> Frame {
        let ati = frame_unit(i, a.clone());
        let mut out = frame_mul(b, &self.c0(a, i, j));
        let br = bracket(&frame_unit(j, regfun::one()), &ati);
        let g = self.gamma(b, &br);
        out = frame_sub(&out, &frame_scale(&Scalar::int(self.variant.s1 as i64), &g));
        let p = self.pair_basic(&regfun::one(), j, a, i);
        out = frame_add(&out, &frame_scale(&half(), &frame_mul(&p, &d(b))));
        let inner = regfun::tau(j, &mul(a, &regfun::tau(i, b)));
        frame_sub(&out, &frame_scale(&half(), &d(&inner)))
    }
}

impl AlgebroidData for VertexAlgebroid {
    fn level(&self) -> &Scalar {
        &self.level
    }

    /// γ(a, Σ b_i τ_i) = −Σ (τ_i(a) ∂b_i + τ_i(b_i) ∂a).
    fn gamma(&self, a: &RegFun, x: &Frame) -> Frame {
        let mut out = frame_zero();
        let da = d(a);
        for (i, b) in x.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let ta = regfun::tau(i, a);
            if !ta.is_zero() {
                out = frame_sub(&out, &frame_mul(&ta, &d(b)));
            }
            let tb = regfun::tau(i, b);
            if !tb.is_zero() {
                out = frame_sub(&out, &frame_mul(&tb, &da));
            }
        }
        out
    }

    fn pair_tt(&self, x: &Frame, y: &Frame) -> RegFun {
        let mut out = RegFun::new();
        for i in 0..3 {
            for j in 0..3 {
                if !x[i].is_zero() && !y[j].is_zero() {
                    out.add_assign(&self.pair_basic(&x[i], i, &y[j], j));
                }
            }
        }
        out
    }

    fn c(&self, x: &Frame, y: &Frame) -> Frame {
        let mut out = frame_zero();
        for i in 0..3 {
            for j in 0..3 {
                if !x[i].is_zero() && !y[j].is_zero() {
                    out = frame_add(&out, &self.c_basic(&x[i], i, &y[j], j));
                }
            }
        }
        out
    }
}

/// Result for one axiom over the spanning set.
#[derive(Clone, Debug, PartialEq)]
pub struct AxiomResult {
    pub id: &'static str,
    pub checked: usize,
    pub witness: Option<String>,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomReport {
    pub results: Vec<AxiomResult>,
    pub notes: Vec<String>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.passed())
    }
    pub fn failures(&self) -> Vec<&AxiomResult> {
        self.results.iter().filter(|r| !r.passed()).collect()
    }
    pub fn get(&self, id: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.id == id)
    }
}

pub(crate) struct Acc {
    id: &'static str,
    checked: usize,
    witness: Option<String>,
}

impl Acc {
    pub(crate) fn new(id: &'static str) -> Acc {
        Acc { id, checked: 0, witness: None }
    }
    pub(crate) fn check(&mut self, ok: bool, w: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(w());
        }
    }
    pub(crate) fn done(self) -> AxiomResult {
        AxiomResult { id: self.id, checked: self.checked, witness: self.witness }
    }
}

/// Labelled test elements for the axiom checks.
#[derive(Clone, Debug)]
pub struct Span {
    pub functions: Vec<(String, RegFun)>,
    pub coeffs: Vec<(String, RegFun)>,
}

fn key_label(k: FKey) -> String {
    format!("E{}{}{}", k.0, k.1, k.2)
}

impl Span {
    /// Matrix coefficients with λ ≤ max_lambda, and a fixed list of field coefficients.
    pub fn standard(max_lambda: u32) -> Span {
        let functions = regfun::basis_upto(max_lambda).into_iter().map(|k| (key_label(k), RegFun::basis(k))).collect();
        let mut mixed = regfun::coord(1, 1);
        mixed.add_scaled(&regfun::coord(2, 1), &Scalar::int(2));
        let coeffs = vec![
            ("1".to_string(), regfun::one()),
            ("x12".to_string(), regfun::coord(1, 2)),
            ("x11+2x21".to_string(), mixed),
        ];
        Span { functions, coeffs }
    }

    /// A smaller set for the expensive three-argument axioms.
    pub fn small() -> Span {
        let mut s = Span::standard(1);
        s.coeffs.truncate(2);
        s
    }

    pub fn fields(&self) -> Vec<(String, Frame)> {
        let mut out = Vec::new();
        for (l, c) in &self.coeffs {
            for i in 0..3 {
                out.push((format!("{l}·τ{}", i + 1), frame_unit(i, c.clone())));
            }
        }
        out
    }

    pub fn forms(&self) -> Vec<(String, Frame)> {
        let mut out = Vec::new();
        for (l, c) in &self.coeffs {
            for i in 0..3 {
                out.push((format!("{l}·ω{}", i + 1), frame_unit(i, c.clone())));
            }
        }
        out
    }
}

fn eqf(a: &Frame, b: &Frame) -> bool {
    frame_is_zero(&frame_sub(a, b))
}

fn eqr(a: &RegFun, b: &RegFun) -> bool {
    a.minus(b).is_zero()
}

/// Checks every axiom of a vertex algebroid (and the structure it presupposes)
/// on the spanning set `span`; three-argument axioms use `triples`.
pub fn check_axioms<D: AlgebroidData>(alg: &D, variant: CVariant, span: &Span, triples: &Span) -> AxiomReport {
    let fs = &span.functions;
    let ts = span.fields();
    let ws = span.forms();
    let t3 = triples.fields();
    let sgn = |s: i8| Scalar::int(s as i64);
    let mut results = Vec::new();

    // structure: T acts by derivations, Jacobi, Ω a T-module, ∂ a derivation and T-morphism
    let mut acc = Acc::new("T-derivation");
    for (lx, x) in &ts {
        for (la, a) in fs {
            for (lb, b) in fs.iter().take(5) {
                let lhs = apply(x, &mul(a, b));
                let rhs = mul(&apply(x, a), b).plus(&mul(a, &apply(x, b)));
                acc.check(eqr(&lhs, &rhs), || format!("τ={lx} a={la} b={lb}"));
            }
        }
    }
    results.push(acc.done());

    let mut acc = Acc::new("T-jacobi");
    for (lx, x) in &t3 {
        for (ly, y) in &t3 {
            for (lz, z) in &t3 {
                let s = frame_add(
                    &bracket(x, &bracket(y, z)),
                    &frame_add(&bracket(y, &bracket(z, x)), &bracket(z, &bracket(x, y))),
                );
                acc.check(frame_is_zero(&s), || format!("{lx}, {ly}, {lz}"));
            }
        }
    }
    results.push(acc.done());

    let mut acc = Acc::new("T-action");
    for (lx, x) in &ts {
        for (ly, y) in &ts {
            for (la, a) in fs {
                let lhs = apply(&bracket(x, y), a);
                let rhs = apply(x, &apply(y, a)).minus(&apply(y, &apply(x, a)));
                acc.check(eqr(&lhs, &rhs), || format!("τ={lx} ν={ly} a={la}"));
            }
        }
    }
    results.push(acc.done());

    let mut acc = Acc::new("Omega-module");
    for (lx, x) in &ts {
        for (ly, y) in &ts {
            for (lw, w) in &ws {
                let lhs = lie(&bracket(x, y), w);
                let rhs = frame_sub(&lie(x, &lie(y, w)), &lie(y, &lie(x, w)));
                acc.check(eqf(&lhs, &rhs), || format!("τ={lx} ν={ly} ω={lw}"));
            }
        }
    }
    results.push(acc.done());

    let mut acc = Acc::new("d-derivation");
    for (la, a) in fs {
        for (lb, b) in fs {
            let lhs = d(&mul(a, b));
            let rhs = frame_add(&frame_mul(a, &d(b)), &frame_mul(b, &d(a)));
            acc.check(eqf(&lhs, &rhs), || format!("a={la} b={lb}"));
        }
    }
    results.push(acc.done());

    let mut acc = Acc::new("d-equivariant");
    for (lx, x) in &ts {
        for (la, a) in fs {
            acc.check(eqf(&lie(x, &d(a)), &d(&apply(x, a))), || format!("τ={lx} a={la}"));
        }
    }
    results.push(acc.done());

    let mut acc = Acc::new("pair-symmetric");
    for (lx, x) in &ts {
        for (ly, y) in &ts {
            acc.check(eqr(&alg.pair_tt(x, y), &alg.pair_tt(y, x)), || format!("{lx}, {ly}"));
        }
    }
    results.push(acc.done());

    let mut acc = Acc::new("c-skew");
    for (lx, x) in &ts {
        for (ly, y) in &ts {
            acc.check(eqf(&alg.c(x, y), &frame_scale(&Scalar::int(-1), &alg.c(y, x))), || format!("{lx}, {ly}"));
        }
    }
    results.push(acc.done());

    // the listed axioms
    let mut acc = Acc::new("bracket-leibniz");
    for (lx, x) in &ts {
        for (ly, y) in &ts {
            for (la, a) in fs {
                let lhs = bracket(x, &frame_mul(a, y));
                let rhs = frame_add(&frame_mul(a, &bracket(x, y)), &frame_mul(&apply(x, a), y));
                acc.check(eqf(&lhs, &rhs), || format!("τ={lx} ν={ly} a={la}"));
            }
        }
    }
    results.push(acc.done());

    let mut acc = Acc::new("anchor-linear");
    for (lx, x) in &ts {
        for (la, a) in fs {
            for (lb, b) in fs {
                let lhs = apply(&frame_mul(a, x), b);
                acc.check(eqr(&lhs, &mul(a, &apply(x, b))), || format!("τ={lx} a={la} b={lb}"));
            }
        }
    }
    results.push(acc.done());

    let mut acc = Acc::new("pair-d");
    for (lx, x) in &ts {
        for (la, a) in fs {
            acc.check(eqr(&alg.pair(&V1::field(x.clone()), &V1::form(d(a))), &apply(x, a)), || {
                format!("τ={lx} a={la}")
            });
        }
    }
    results.push(acc.done());

    let mut acc = Acc::new("omega-leibniz");
    for (lx, x) in &ts {
        for (lw, w) in &ws {
            for (la, a) in fs {
                let lhs = lie(x, &frame_mul(a, w));
                let rhs = frame_add(&frame_mul(&apply(x, a), w), &frame_mul(a, &lie(x, w)));
                acc.check(eqf(&lhs, &rhs), || format!("τ={lx} ω={lw} a={la}"));
            }
        }
    }
    results.push(acc.done());

    let mut acc = Acc::new("omega-linear");
    for (lx, x) in &ts {
        for (lw, w) in &ws {
            for (la, a) in fs {
                let lhs = lie(&frame_mul(a, x), w);
                let rhs = frame_add(&frame_mul(a, &lie(x, w)), &frame_mul(&pair_tw(x, w), &d(a)));
                acc.check(eqf(&lhs, &rhs), || format!("τ={lx} ω={lw} a={la}"));
            }
        }
    }
    results.push(acc.done());

    let mut acc = Acc::new("pair-invariant");
    for (lx, x) in &ts {
        for (ly, y) in &ts {
            for (lw, w) in &ws {
                let lhs = apply(x, &pair_tw(y, w));
                let rhs = pair_tw(&bracket(x, y), w).plus(&pair_tw(y, &lie(x, w)));
                acc.check(eqr(&lhs, &rhs), || format!("τ={lx} ν={ly} ω={lw}"));
            }
        }
    }
    results.push(acc.done());

    let mut acc = Acc::new("gamma-extension");
    for (lx, x) in &ts {
        for (la, a) in fs {
            for (lb, b) in fs {
                let lhs = alg.gamma(a, &frame_mul(b, x));
                let mut rhs = frame_sub(&alg.gamma(&mul(a, b), x), &frame_mul(a, &alg.gamma(b, x)));
                rhs = frame_sub(&rhs, &frame_mul(&apply(x, a), &d(b)));
                rhs = frame_sub(&rhs, &frame_mul(&apply(x, b), &d(a)));
                acc.check(eqf(&lhs, &rhs), || format!("τ={lx} a={la} b={lb}"));
            }
        }
    }
    results.push(acc.done());

    let mut acc = Acc::new("pair-extension");
    for (lx, x) in &ts {
        for (ly, y) in &ts {
            for (la, a) in fs {
                let lhs = alg.pair_tt(&frame_mul(a, x), y);
                let mut rhs = mul(a, &alg.pair_tt(x, y));
                rhs.add_assign(&pair_tw(y, &alg.gamma(a, x)));
                rhs.sub_assign(&apply(x, &apply(y, a)));
                acc.check(eqr(&lhs, &rhs), || format!("τ1={lx} τ2={ly} a={la}"));
            }
        }
    }
    results.push(acc.done());

    let mut acc = Acc::new("c-extension");
    for (lx, x) in &ts {
        for (ly, y) in &ts {
            for (la, a) in fs {
                let lhs = alg.c(&frame_mul(a, x), y);
                let gx = alg.gamma(a, x);
                let mut rhs = frame_mul(a, &alg.c(x, y));
                rhs = frame_add(&rhs, &frame_scale(&sgn(variant.s1), &alg.gamma(a, &bracket(x, y))));
                rhs = frame_add(&rhs, &frame_scale(&sgn(variant.s2), &alg.gamma(&apply(y, a), x)));
                rhs = frame_add(&rhs, &lie(y, &gx));
                let mut inner = apply(x, &apply(y, a));
                inner.sub_assign(&pair_tw(y, &gx));
                let pxy = alg.pair_tt(x, y);
                rhs = frame_sub(&rhs, &frame_scale(&half(), &frame_mul(&pxy, &d(a))));
                rhs = frame_add(&rhs, &frame_scale(&half(), &d(&inner)));
                acc.check(eqf(&lhs, &rhs), || format!("τ1={lx} τ2={ly} a={la}"));
            }
        }
    }
    results.push(acc.done());

    let mut acc = Acc::new("pair-cubic");
    for (lx, x) in &t3 {
        for (ly, y) in &t3 {
            for (lz, z) in &t3 {
                let lhs = alg.pair_tt(&bracket(x, y), z).plus(&alg.pair_tt(y, &bracket(x, z)));
                let mut rhs = apply(x, &alg.pair_tt(y, z));
                rhs.add_scaled(&apply(y, &alg.pair_tt(x, z)), &half().neg_ref());
                rhs.add_scaled(&apply(z, &alg.pair_tt(x, y)), &half().neg_ref());
                rhs.add_assign(&pair_tw(y, &alg.c(x, z)));
                rhs.add_assign(&pair_tw(z, &alg.c(x, y)));
                acc.check(eqr(&lhs, &rhs), || format!("{lx}, {ly}, {lz}"));
            }
        }
    }
    results.push(acc.done());

    let mut acc = Acc::new("dlie-c");
    for (lx, x) in &t3 {
        for (ly, y) in &t3 {
            for (lz, z) in &t3 {
                let mut lhs = lie(x, &alg.c(y, z));
                lhs = frame_sub(&lhs, &lie(y, &alg.c(x, z)));
                lhs = frame_add(&lhs, &lie(z, &alg.c(x, y)));
                lhs = frame_sub(&lhs, &alg.c(&bracket(x, y), z));
                lhs = frame_add(&lhs, &alg.c(&bracket(x, z), y));
                lhs = frame_sub(&lhs, &alg.c(&bracket(y, z), x));
                let mut inner = alg.pair_tt(&bracket(x, y), z);
                inner.add_assign(&alg.pair_tt(&bracket(x, z), y));
                inner.sub_assign(&alg.pair_tt(&bracket(y, z), x));
                inner.sub_assign(&apply(x, &alg.pair_tt(y, z)));
                inner.add_assign(&apply(y, &alg.pair_tt(x, z)));
                inner.add_scaled(&pair_tw(z, &alg.c(x, y)), &Scalar::int(-2));
                let rhs = frame_scale(&half().neg_ref(), &d(&inner));
                acc.check(eqf(&lhs, &rhs), || format!("{lx}, {ly}, {lz}"));
            }
        }
    }
    results.push(acc.done());

    AxiomReport { results, notes: vec![format!("c-extension read as: {variant}")] }
}

/// Runs the axiom suite for every reading of the c-extension axiom.
pub fn resolve_c_variant(level: &Scalar, span: &Span, triples: &Span) -> Vec<(CVariant, AxiomReport)> {
    CVariant::ALL
        .iter()
        .map(|&v| {
            let alg = VertexAlgebroid::with_variant(level.clone(), v);
            (v, check_axioms(&alg, v, span, triples))
        })
        .collect()
}

/// A_{sl2,k}. The forced extensions are validated on a small spanning set.
pub fn build_algebroid(level: Scalar) -> Result<VertexAlgebroid> {
    let alg = VertexAlgebroid::with_variant(level, DEFAULT_VARIANT);
    let span = Span::small();
    let rep = check_axioms(&alg, DEFAULT_VARIANT, &span, &Span { functions: vec![], coeffs: vec![] });
    if let Some(f) = rep.failures().first() {
        return Err(Error::ExtensionInconsistent(format!("{}: {}", f.id, f.witness.clone().unwrap_or_default())));
    }
    Ok(alg)
}
