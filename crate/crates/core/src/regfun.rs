//! Regular functions on SL2 in Peter–Weyl blocks, with a polynomial mirror.
//!
//! Block element E(λ, r, c) stands for v_r ⊗ v^c and is the function g ↦ ρ_λ(g)_{c r}.
//! Left-invariant fields act on the row index, right-invariant ones on the column index:
//! (τ f)(g) = d/dt f(g exp(tτ)), (τ^R f)(g) = d/dt f(exp(-tτ) g).

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::lie_core::{build_sl2, dual_basis_fast, LieAlgebra, Rep};
use crate::linalg::{self, Lin, Matrix};
use crate::scalar::Scalar;

pub type FKey = (u32, u32, u32);
pub type RegFun = Lin<FKey>;

type Table = HashMap<(FKey, FKey), Vec<(FKey, Scalar)>>;

struct Cache {
    g: LieAlgebra,
    taus: RwLock<HashMap<u32, Arc<Vec<Matrix>>>>,
    products: RwLock<HashMap<(u32, u32), Arc<Table>>>,
    mirrors: RwLock<HashMap<FKey, Arc<Poly4>>>,
}

fn cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(|| Cache {
        g: build_sl2(),
        taus: RwLock::new(HashMap::new()),
        products: RwLock::new(HashMap::new()),
        mirrors: RwLock::new(HashMap::new()),
    })
}

pub fn sl2() -> &'static LieAlgebra {
    &cache().g
}

/// τ_i matrices on V_λ.
pub fn taus(lam: u32) -> Arc<Vec<Matrix>> {
    let c = cache();
    if let Some(t) = c.taus.read().unwrap().get(&lam) {
        return t.clone();
    }
    let t = Arc::new(Rep::irrep(lam).taus(&c.g));
    c.taus.write().unwrap().insert(lam, t.clone());
    t
}

pub fn block_dim(lam: u32) -> usize {
    ((lam + 1) * (lam + 1)) as usize
}

/// All basis keys with λ ≤ cap.
pub fn basis_upto(cap: u32) -> Vec<FKey> {
    let mut out = Vec::new();
    for l in 0..=cap {
        for r in 0..=l {
            for c in 0..=l {
                out.push((l, r, c));
            }
        }
    }
    out
}

pub fn one() -> RegFun {
    RegFun::basis((0, 0, 0))
}

pub fn constant(s: Scalar) -> RegFun {
    RegFun::single((0, 0, 0), s)
}

/// Matrix coordinate x_{ab} (a, b ∈ {1, 2}).
pub fn coord(a: u32, b: u32) -> RegFun {
    // x_{ab} = g_{ab} = ρ_1(g)_{a-1, b-1} = E(1, b-1, a-1)
    RegFun::basis((1, b - 1, a - 1))
}

pub fn max_block(f: &RegFun) -> u32 {
    f.terms.keys().map(|k| k.0).max().unwrap_or(0)
}

fn product_table(l: u32, m: u32) -> Arc<Table> {
    let (l, m) = (l.min(m), l.max(m));
    let c = cache();
    if let Some(t) = c.products.read().unwrap().get(&(l, m)) {
        return t.clone();
    }
    let mut table: Table = HashMap::new();
    let (dl, dm) = ((l + 1) as usize, (m + 1) as usize);
    let srcs = [Rep::irrep(l), Rep::irrep(m)];
    let mut nu = m - l;
    while nu <= l + m {
        let (fs, gs) = dual_basis_fast(&srcs, &Rep::irrep(nu)).expect("Clebsch-Gordan channel");
        for (f, g) in fs.iter().zip(&gs) {
            for r in 0..dl {
                for r2 in 0..dm {
                    let col_f = r * dm + r2;
                    let fcol: Vec<(usize, &Scalar)> =
                        (0..=nu as usize).map(|s| (s, &f.mat[s][col_f])).filter(|(_, x)| !x.is_zero()).collect();
                    if fcol.is_empty() {
                        continue;
                    }
                    for cc in 0..dl {
                        for c2 in 0..dm {
                            let col_g = cc * dm + c2;
                            for t in 0..=nu as usize {
                                let gv = &g.mat[t][col_g];
                                if gv.is_zero() {
                                    continue;
                                }
                                let e = table.entry(((l, r as u32, cc as u32), (m, r2 as u32, c2 as u32))).or_default();
                                for (s, fv) in &fcol {
                                    e.push(((nu, *s as u32, t as u32), fv.mul_ref(gv)));
                                }
                            }
                        }
                    }
                }
            }
        }
        nu += 2;
    }
    let t = Arc::new(table);
    c.products.write().unwrap().insert((l, m), t.clone());
    t
}

/// Product through the dual-basis formula, block by block.
pub fn mul(a: &RegFun, b: &RegFun, cap: u32) -> Result<RegFun> {
    let mut out = RegFun::new();
    if a.is_zero() || b.is_zero() {
        return Ok(out);
    }
    if max_block(a) + max_block(b) > cap {
        // the top block may still cancel; compute and check
        let r = mul_uncapped(a, b);
        if max_block(&r) > cap {
            return Err(Error::CutoffExceeded);
        }
        return Ok(r);
    }
    out = mul_uncapped(a, b);
    Ok(out)
}

pub fn mul_uncapped(a: &RegFun, b: &RegFun) -> RegFun {
    let mut acc: BTreeMap<FKey, Scalar> = BTreeMap::new();
    for (ka, ca) in &a.terms {
        for (kb, cb) in &b.terms {
            if ka.0 == 0 {
                let e = acc.entry(*kb).or_default();
                *e = e.add_ref(&ca.mul_ref(cb));
                continue;
            }
            if kb.0 == 0 {
                let e = acc.entry(*ka).or_default();
                *e = e.add_ref(&ca.mul_ref(cb));
                continue;
            }
            let t = product_table(ka.0, kb.0);
            let key = if ka.0 <= kb.0 { (*ka, *kb) } else { (*kb, *ka) };
            if let Some(entries) = t.get(&key) {
                let cab = ca.mul_ref(cb);
                for (k, v) in entries {
                    let e = acc.entry(*k).or_default();
                    *e = e.add_ref(&v.mul_ref(&cab));
                }
            }
        }
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Same product, with λ = μ blocks ordered the other way round (checks commutativity of the table).
pub fn mul_swapped(a: &RegFun, b: &RegFun) -> RegFun {
    mul_uncapped(b, a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// τ_i or τ_i^R applied to f.
pub fn field(side: Side, i: usize, f: &RegFun) -> RegFun {
    let mut out = RegFun::new();
    for (&(l, r, c), v) in &f.terms {
        if l == 0 {
            continue;
        }
        let t = taus(l);
        let x = &t[i];
        match side {
            Side::Left => {
                for s in 0..=l {
                    let m = &x[s as usize][r as usize];
                    if !m.is_zero() {
                        out.add_term((l, s, c), m.mul_ref(v));
                    }
                }
            }
            Side::Right => {
                for s in 0..=l {
                    let m = &x[c as usize][s as usize];
                    if !m.is_zero() {
                        out.add_term((l, r, s), m.mul_ref(v).neg_ref());
                    }
                }
            }
        }
    }
    out
}

pub fn tau(i: usize, f: &RegFun) -> RegFun {
    field(Side::Left, i, f)
}

pub fn tau_r(i: usize, f: &RegFun) -> RegFun {
    field(Side::Right, i, f)
}

/// Value at the identity element.
pub fn eval_identity(f: &RegFun) -> Scalar {
    f.terms.iter().filter(|((_, r, c), _)| r == c).fold(Scalar::zero(), |a, (_, v)| a.add_ref(v))
}

/// (a, b) = (1, ab): the λ = 0 component of the product.
pub fn form_a(a: &RegFun, b: &RegFun) -> Scalar {
    let mut total = Scalar::zero();
    for (ka, ca) in &a.terms {
        for (kb, cb) in &b.terms {
            if ka.0 != kb.0 {
                continue;
            }
            if ka.0 == 0 {
                total = total.add_ref(&ca.mul_ref(cb));
                continue;
            }
            let t = product_table(ka.0, kb.0);
            let key = if ka <= kb { (*ka, *kb) } else { (*kb, *ka) };
            if let Some(es) = t.get(&key) {
                for (k, v) in es {
                    if k.0 == 0 {
                        total = total.add_ref(&v.mul_ref(ca).mul_ref(cb));
                    }
                }
            }
        }
    }
    total
}

// ---------- polynomial mirror ----------

/// Polynomial in x11, x12, x21, x22 reduced by x11·x22 → 1 + x12·x21.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly4 {
    pub terms: BTreeMap<[u32; 4], Scalar>,
}

impl Poly4 {
    pub fn constant(s: Scalar) -> Poly4 {
        let mut p = Poly4::default();
        p.add_mono([0; 4], s);
        p
    }
    pub fn var(v: usize) -> Poly4 {
        let mut e = [0; 4];
        e[v] = 1;
        let mut p = Poly4::default();
        p.add_mono(e, Scalar::one());
        p
    }
    /// Adds c·x^e, reducing with the determinant relation.
    pub fn add_mono(&mut self, e: [u32; 4], c: Scalar) {
        if c.is_zero() {
            return;
        }
        if e[0] > 0 && e[3] > 0 {
            let t = e[0].min(e[3]);
            // (x11 x22)^t = (1 + x12 x21)^t
            for j in 0..=t {
                let b = crate::scalar::binom_s(t as i64, j as i64);
                self.add_mono([e[0] - t, e[1] + j, e[2] + j, e[3] - t], c.mul_ref(&b));
            }
            return;
        }
        let entry = self.terms.entry(e).or_default();
        *entry = entry.add_ref(&c);
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }
    pub fn add(&self, o: &Poly4) -> Poly4 {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_mono(*e, c.clone());
        }
        r
    }
    pub fn scale(&self, s: &Scalar) -> Poly4 {
        let mut r = Poly4::default();
        for (e, c) in &self.terms {
            r.add_mono(*e, c.mul_ref(s));
        }
        r
    }
    pub fn mul(&self, o: &Poly4) -> Poly4 {
        let mut r = Poly4::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_mono([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]], c1.mul_ref(c2));
            }
        }
        r
    }
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }
    /// Apply the derivation sending each variable x_v to images[v].
    pub fn derive(&self, images: &[Poly4; 4]) -> Poly4 {
        let mut r = Poly4::default();
        for (e, c) in &self.terms {
            for v in 0..4 {
                if e[v] == 0 {
                    continue;
                }
                let mut rest = *e;
                rest[v] -= 1;
                let mut mono = Poly4::default();
                mono.add_mono(rest, c.mul_ref(&Scalar::int(e[v] as i64)));
                r = r.add(&mono.mul(&images[v]));
            }
        }
        r
    }
}

const X11: usize = 0;
const X12: usize = 1;
const X21: usize = 2;
const X22: usize = 3;

fn var_index(a: usize, b: usize) -> usize {
    2 * a + b
}

/// Images of the coordinates under τ_i (left) or τ_i^R (right), from the 2x2 matrix of τ_i.
pub fn coordinate_field(side: Side, i: usize) -> [Poly4; 4] {
    let x = &taus(1)[i];
    let mut out: [Poly4; 4] = Default::default();
    for a in 0..2 {
        for b in 0..2 {
            let mut p = Poly4::default();
            for c in 0..2 {
                match side {
                    // τ(x_ab) = Σ_c x_ac X_cb
                    Side::Left => p = p.add(&Poly4::var(var_index(a, c)).scale(&x[c][b])),
                    // τ^R(x_ab) = -Σ_c X_ac x_cb
                    Side::Right => p = p.add(&Poly4::var(var_index(c, b)).scale(&x[a][c].neg_ref())),
                }
            }
            out[var_index(a, b)] = p;
        }
    }
    out
}

pub fn mirror_field(side: Side, i: usize, p: &Poly4) -> Poly4 {
    p.derive(&coordinate_field(side, i))
}

fn factorial(n: u32) -> Scalar {
    (1..=n as i64).fold(Scalar::one(), |a, k| a.mul_ref(&Scalar::int(k)))
}

/// Polynomial form of E(λ, r, c) = coefficient of v_c in g·v_r.
pub fn mirror_basis(k: FKey) -> Arc<Poly4> {
    let c = cache();
    if let Some(p) = c.mirrors.read().unwrap().get(&k) {
        return p.clone();
    }
    let (n, r, col) = k;
    // polynomials in formal x, y with Poly4 coefficients: index by power of y
    let gx = [Poly4::var(X11), Poly4::var(X21)];
    let gy = [Poly4::var(X12), Poly4::var(X22)];
    let mut acc: Vec<Poly4> = vec![Poly4::constant(Scalar::one())];
    let mul_lin = |acc: &Vec<Poly4>, l: &[Poly4; 2]| -> Vec<Poly4> {
        let mut out = vec![Poly4::default(); acc.len() + 1];
        for (j, a) in acc.iter().enumerate() {
            out[j] = out[j].add(&a.mul(&l[0]));
            out[j + 1] = out[j + 1].add(&a.mul(&l[1]));
        }
        out
    };
    for _ in 0..(n - r) {
        acc = mul_lin(&acc, &gx);
    }
    for _ in 0..r {
        acc = mul_lin(&acc, &gy);
    }
    // v_r = n!/(n-r)! x^{n-r} y^r; coefficient on v_c is coeff(x^{n-c} y^c) (n-c)!/n!
    let pre = factorial(n).div_ref(&factorial(n - r)).unwrap();
    let post = factorial(n - col).div_ref(&factorial(n)).unwrap();
    let p = Arc::new(acc[col as usize].scale(&pre.mul_ref(&post)));
    c.mirrors.write().unwrap().insert(k, p.clone());
    p
}

pub fn to_mirror(f: &RegFun) -> Poly4 {
    let mut p = Poly4::default();
    for (k, c) in &f.terms {
        p = p.add(&mirror_basis(*k).scale(c));
    }
    p
}

/// Peter–Weyl decomposition of a reduced polynomial by a linear solve.
pub fn pw_decompose(p: &Poly4) -> Result<RegFun> {
    if p.terms.is_empty() {
        return Ok(RegFun::new());
    }
    let cap = p.degree();
    let keys = basis_upto(cap);
    let polys: Vec<Lin<[u32; 4]>> =
        keys.iter().map(|k| mirror_basis(*k).terms.iter().map(|(e, c)| (*e, c.clone())).collect()).collect();
    let mut all = polys.clone();
    all.push(p.terms.iter().map(|(e, c)| (*e, c.clone())).collect());
    let (_, m) = linalg::to_columns(&all);
    let n = keys.len();
    let a: Matrix = m.iter().map(|r| r[..n].to_vec()).collect();
    let b: Vec<Scalar> = m.iter().map(|r| r[n].clone()).collect();
    let x = linalg::solve(&a, &b)?;
    Ok(keys.into_iter().zip(x).filter(|(_, c)| !c.is_zero()).collect())
}

/// a^{ij}(g) = -tr(g^{-1} X_i g X_j), computed on the mirror and decomposed.
pub fn transition_matrix() -> Result<Vec<Vec<RegFun>>> {
    static T: OnceLock<Vec<Vec<RegFun>>> = OnceLock::new();
    if let Some(t) = T.get() {
        return Ok(t.clone());
    }
    let t1 = taus(1);
    let g = [[Poly4::var(X11), Poly4::var(X12)], [Poly4::var(X21), Poly4::var(X22)]];
    let neg = |p: &Poly4| p.scale(&Scalar::int(-1));
    let ginv = [[Poly4::var(X22), neg(&Poly4::var(X12))], [neg(&Poly4::var(X21)), Poly4::var(X11)]];
    let matmul_pc = |a: &[[Poly4; 2]; 2], m: &Matrix| -> [[Poly4; 2]; 2] {
        let mut o: [[Poly4; 2]; 2] = Default::default();
        for r in 0..2 {
            for c in 0..2 {
                for l in 0..2 {
                    o[r][c] = o[r][c].add(&a[r][l].scale(&m[l][c]));
                }
            }
        }
        o
    };
    let matmul_pp = |a: &[[Poly4; 2]; 2], b: &[[Poly4; 2]; 2]| -> [[Poly4; 2]; 2] {
        let mut o: [[Poly4; 2]; 2] = Default::default();
        for r in 0..2 {
            for c in 0..2 {
                for l in 0..2 {
                    o[r][c] = o[r][c].add(&a[r][l].mul(&b[l][c]));
                }
            }
        }
        o
    };
    let dim = sl2().dim;
    let mut out = vec![vec![RegFun::new(); dim]; dim];
    for i in 0..dim {
        let conj = matmul_pp(&matmul_pc(&ginv, &t1[i]), &g);
        for j in 0..dim {
            let prod = matmul_pc(&conj, &t1[j]);
            let tr = prod[0][0].add(&prod[1][1]);
            out[i][j] = pw_decompose(&neg(&tr))?;
        }
    }
    // τ_i^R = a^{ij} τ_j on the coordinate functions
    for i in 0..dim {
        for a in 0..2 {
            for b in 0..2 {
                let x = coord(a + 1, b + 1);
                let lhs = tau_r(i, &x);
                let mut rhs = RegFun::new();
                for j in 0..dim {
                    rhs.add_assign(&mul_uncapped(&out[i][j], &tau(j, &x)));
                }
                if lhs != rhs {
                    return Err(Error::FrameSolveFailed);
                }
            }
        }
    }
    let _ = T.set(out.clone());
    Ok(out)
}

/// Sparse serialization (λ, row, col, value).
pub fn to_sparse(f: &RegFun) -> Vec<(u32, u32, u32, String)> {
    f.terms.iter().map(|(&(l, r, c), v)| (l, r, c, v.to_string())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_relation() {
        let x = |a, b| coord(a, b);
        let d = mul(&x(1, 1), &x(2, 2), 4).unwrap().minus(&mul(&x(1, 2), &x(2, 1), 4).unwrap());
        assert_eq!(d, one());
    }

    #[test]
    fn identity_values() {
        let a = transition_matrix().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let v = eval_identity(&a[i][j]);
                assert_eq!(v, if i == j { Scalar::int(-1) } else { Scalar::zero() });
                assert!(a[i][j].terms.keys().all(|k| k.0 == 0 || k.0 == 2));
            }
        }
    }

    #[test]
    fn form_values() {
        assert_eq!(form_a(&one(), &one()), Scalar::one());
        assert_eq!(form_a(&coord(1, 1), &coord(2, 2)), Scalar::frac(1, 2));
        assert!(form_a(&coord(1, 1), &coord(1, 1)).is_zero());
    }
}
