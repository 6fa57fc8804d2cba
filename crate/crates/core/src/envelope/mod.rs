//! The chiral envelope UA = U(ĝ₋) ⊗ B of the sl2 vertex algebroid on A = O(SL2).
//!
//! B is the free commutative A-algebra on the divided derivatives ∂^{(p)}ω_i of the
//! left-invariant forms. Elements are stored in the left PBW form τ(−n)⋯ ⊗ b; the
//! right action τ̄ and the function and form modes are computed from that model.

pub mod analysis;
pub mod bar;
pub mod checks;
pub mod form;
pub mod vertex;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::lie_core::dual_level;
use crate::linalg::Lin;
use crate::regfun::{self, FKey, RegFun};
use crate::scalar::Scalar;
use crate::weyl::{mono_degree, Mono};

/// Sorted multiset of (p, i), standing for ∂^{(p)}ω_i.
pub type Jet = Vec<(u8, u8)>;
/// (PBW monomial, Peter–Weyl basis function, jet monomial).
pub type EKey = (Mono, FKey, Jet);
pub type EVec = Lin<EKey>;

pub const DIM: usize = 3;
pub const ONE: FKey = (0, 0, 0);

pub fn jet_degree(j: &[(u8, u8)]) -> usize {
    j.iter().map(|&(p, _)| p as usize + 1).sum()
}

pub fn key_degree(k: &EKey) -> usize {
    mono_degree(&k.0) + jet_degree(&k.2)
}

/// Largest conformal weight among the terms.
pub fn degree_of(v: &EVec) -> Option<usize> {
    v.terms.keys().map(key_degree).max()
}

pub fn is_homogeneous(v: &EVec) -> bool {
    let mut ds = v.terms.keys().map(key_degree);
    match ds.next() {
        None => true,
        Some(d) => ds.all(|e| e == d),
    }
}

fn jet_with(jet: &[(u8, u8)], f: (u8, u8)) -> Jet {
    let mut j = jet.to_vec();
    let pos = j.partition_point(|x| *x <= f);
    j.insert(pos, f);
    j
}

fn jet_merge(a: &[(u8, u8)], b: &[(u8, u8)]) -> Jet {
    let mut j: Jet = a.iter().chain(b).copied().collect();
    j.sort_unstable();
    j
}

fn jet_replace(jet: &[(u8, u8)], r: usize, f: (u8, u8)) -> Jet {
    let mut j = jet.to_vec();
    j.remove(r);
    jet_with(&j, f)
}

pub fn vacuum() -> EVec {
    EVec::basis((vec![], ONE, vec![]))
}

/// f · ∂^{(p1)}ω_{i1} ⋯ as an element of B.
pub fn b_elem(f: &RegFun, jet: &[(u8, u8)]) -> EVec {
    let mut j = jet.to_vec();
    j.sort_unstable();
    f.terms.iter().map(|(k, c)| ((vec![], *k, j.clone()), c.clone())).collect()
}

pub fn fun_state(f: &RegFun) -> EVec {
    b_elem(f, &[])
}

pub fn omega_state(i: usize) -> EVec {
    EVec::basis((vec![], ONE, vec![(0, i as u8)]))
}

/// τ_i(−1)1.
pub fn tau_state(i: usize) -> EVec {
    EVec::basis((vec![(-1, i as u8)], ONE, vec![]))
}

/// Only the B part (empty PBW monomial).
pub fn b_part(v: &EVec) -> EVec {
    v.terms.iter().filter(|(k, _)| k.0.is_empty()).map(|(k, c)| (k.clone(), c.clone())).collect()
}

pub fn fun_of(v: &EVec) -> RegFun {
    v.terms.iter().filter(|(k, _)| k.0.is_empty() && k.2.is_empty()).map(|(k, c)| (k.1, c.clone())).collect()
}

/// A single mode operator.
#[derive(Clone, Debug)]
pub enum Op {
    Tau(usize, i32),
    Bar(usize, i32),
    Fun(RegFun, i32),
    Omega(usize, i32),
    OmegaTilde(usize, i32),
    Partial,
    Vir(i32),
}

type Cache<K> = Mutex<HashMap<K, EVec>>;

pub struct Envelope {
    pub level: Scalar,
    pub kbar: Scalar,
    pub max_degree: usize,
    pub max_block: u32,
    cs: Vec<Vec<Vec<Scalar>>>,
    a: Arc<Vec<Vec<RegFun>>>,
    tau_cache: Cache<(u8, i32, EKey)>,
    fun_cache: Cache<(FKey, i32, EKey)>,
    omega_cache: Cache<(u8, i32, EKey)>,
    bar_cache: Cache<(u8, i32, EKey)>,
    dp_cache: Cache<(FKey, usize)>,
}

impl Envelope {
    pub fn new(level: Scalar, max_degree: usize, max_block: u32) -> Result<Envelope> {
        let g = regfun::sl2();
        let cs = (0..DIM).map(|i| (0..DIM).map(|j| (0..DIM).map(|k| g.cs(i, j, k)).collect()).collect()).collect();
        Ok(Envelope {
            kbar: dual_level(&level),
            level,
            max_degree,
            max_block,
            cs,
            a: Arc::new(regfun::transition_matrix()?),
            tau_cache: Mutex::default(),
            fun_cache: Mutex::default(),
            omega_cache: Mutex::default(),
            bar_cache: Mutex::default(),
            dp_cache: Mutex::default(),
        })
    }

    /// a^{ij}, with τ_i^R = a^{ij} τ_j.
    pub fn a(&self, i: usize, j: usize) -> &RegFun {
        &self.a[i][j]
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.cs[i][j][k]
    }

    fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.max_degree {
            return Err(Error::CutoffExceeded);
        }
        Ok(())
    }

    fn check_block(&self, k: &FKey) -> Result<()> {
        if k.0 > self.max_block {
            return Err(Error::BlockCutoffExceeded);
        }
        Ok(())
    }

    pub fn check_vec(&self, v: &EVec) -> Result<()> {
        for k in v.terms.keys() {
            self.check_block(&k.1)?;
            self.check_degree(key_degree(k))?;
        }
        Ok(())
    }

    fn cached<K: std::hash::Hash + Eq + Clone>(
        &self,
        cache: &Cache<K>,
        key: K,
        f: impl FnOnce() -> Result<EVec>,
    ) -> Result<EVec> {
        if let Some(v) = cache.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let v = f()?;
        cache.lock().unwrap().insert(key, v.clone());
        Ok(v)
    }

    // ---- the commutative algebra B

    /// Product of two elements of B.
    pub fn mul_b(&self, x: &EVec, y: &EVec) -> Result<EVec> {
        let mut out = EVec::new();
        for ((m1, f1, j1), c1) in &x.terms {
            for ((m2, f2, j2), c2) in &y.terms {
                if !m1.is_empty() || !m2.is_empty() {
                    return Err(Error::Invalid("mul_b needs elements of B".into()));
                }
                let jet = jet_merge(j1, j2);
                self.check_degree(jet_degree(&jet))?;
                let p = regfun::mul_uncapped(&RegFun::basis(*f1), &RegFun::basis(*f2));
                let c = c1.mul_ref(c2);
                for (k, v) in &p.terms {
                    self.check_block(k)?;
                    out.add_term((vec![], *k, jet.clone()), v.mul_ref(&c));
                }
            }
        }
        Ok(out)
    }

    /// ∂ on B: a derivation with ∂f = Σ τ_i(f) ω_i and ∂∂^{(p)}ω = (p+1)∂^{(p+1)}ω.
    fn partial_b(&self, f: &FKey, jet: &[(u8, u8)]) -> Result<EVec> {
        self.check_degree(jet_degree(jet) + 1)?;
        let mut out = EVec::new();
        let fb = RegFun::basis(*f);
        for i in 0..DIM {
            let t = regfun::tau(i, &fb);
            if t.is_zero() {
                continue;
            }
            let nj = jet_with(jet, (0, i as u8));
            for (k, c) in &t.terms {
                out.add_term((vec![], *k, nj.clone()), c.clone());
            }
        }
        for (r, &(p, i)) in jet.iter().enumerate() {
            out.add_term((vec![], *f, jet_replace(jet, r, (p + 1, i))), Scalar::int(p as i64 + 1));
        }
        Ok(out)
    }

    /// ∂^{(p)} of a basis function, as an element of B.
    fn dp_basis(&self, f: FKey, p: usize) -> Result<EVec> {
        if p == 0 {
            return Ok(EVec::basis((vec![], f, vec![])));
        }
        self.check_degree(p)?;
        self.cached(&self.dp_cache, (f, p), || {
            let prev = self.dp_basis(f, p - 1)?;
            let mut out = EVec::new();
            for ((_, g, j), c) in &prev.terms {
                out.add_scaled(&self.partial_b(g, j)?, c);
            }
            Ok(out.scaled(&Scalar::frac(1, p as i64)))
        })
    }

    /// ∂^{(p)} a ∈ B.
    pub fn dp(&self, a: &RegFun, p: usize) -> Result<EVec> {
        let mut out = EVec::new();
        for (k, c) in &a.terms {
            out.add_scaled(&self.dp_basis(*k, p)?, c);
        }
        Ok(out)
    }

    // ---- left affine action at level k

    pub fn tau_key(&self, i: u8, m: i32, key: &EKey) -> Result<EVec> {
        let d = key_degree(key);
        if m < 0 {
            self.check_degree(d + (-m) as usize)?;
        }
        if m > 0 && d < m as usize {
            return Ok(EVec::new());
        }
        self.cached(&self.tau_cache, (i, m, key.clone()), || self.tau_raw(i, m, key))
    }

    fn tau_raw(&self, i: u8, m: i32, key: &EKey) -> Result<EVec> {
        let (mono, f, jet) = key;
        let mut out = EVec::new();
        if mono.is_empty() {
            if m < 0 {
                out.add_term((vec![(m, i)], *f, jet.clone()), Scalar::one());
            } else {
                out = self.tau_b(i as usize, m as usize, f, jet);
            }
            return Ok(out);
        }
        let (n1, j1) = mono[0];
        if m < 0 && (m, i) <= (n1, j1) {
            let mut nm = Vec::with_capacity(mono.len() + 1);
            nm.push((m, i));
            nm.extend_from_slice(mono);
            out.add_term((nm, *f, jet.clone()), Scalar::one());
            return Ok(out);
        }
        let rest: EKey = (mono[1..].to_vec(), *f, jet.clone());
        let inner = self.tau_key(i, m, &rest)?;
        out = self.tau(j1 as usize, n1, &inner)?;
        for k in 0..DIM {
            let c = &self.cs[i as usize][j1 as usize][k];
            if !c.is_zero() {
                out.add_scaled(&self.tau_key(k as u8, m + n1, &rest)?, c);
            }
        }
        if m + n1 == 0 && i == j1 {
            out.add_term(rest, self.level.mul_ref(&Scalar::int(m as i64)));
        }
        Ok(out)
    }

    /// τ_i(m), m ≥ 0, on f·jet ∈ B.
    fn tau_b(&self, i: usize, m: usize, f: &FKey, jet: &[(u8, u8)]) -> EVec {
        let mut out = EVec::new();
        if m == 0 {
            for (k, c) in &regfun::tau(i, &RegFun::basis(*f)).terms {
                out.add_term((vec![], *k, jet.to_vec()), c.clone());
            }
        }
        for (r, &(p, jr)) in jet.iter().enumerate() {
            let p = p as usize;
            if p >= m {
                for s in 0..DIM {
                    let c = &self.cs[i][jr as usize][s];
                    if !c.is_zero() {
                        out.add_term((vec![], *f, jet_replace(jet, r, ((p - m) as u8, s as u8))), c.clone());
                    }
                }
            }
            if m >= 1 && p + 1 == m && jr as usize == i {
                let mut nj = jet.to_vec();
                nj.remove(r);
                out.add_term((vec![], *f, nj), Scalar::int(m as i64));
            }
        }
        out
    }

    pub fn tau(&self, i: usize, m: i32, v: &EVec) -> Result<EVec> {
        let mut out = EVec::new();
        for (k, c) in &v.terms {
            out.add_scaled(&self.tau_key(i as u8, m, k)?, c);
        }
        Ok(out)
    }

    // ---- modes of functions and forms

    pub fn fun_key(&self, f: FKey, n: i32, key: &EKey) -> Result<EVec> {
        let d = key_degree(key) as i64 - n as i64 - 1;
        if d < 0 {
            return Ok(EVec::new());
        }
        self.check_degree(d as usize)?;
        self.cached(&self.fun_cache, (f, n, key.clone()), || {
            let (mono, g, jet) = key;
            if mono.is_empty() {
                if n >= 0 {
                    return Ok(EVec::new());
                }
                let dp = self.dp_basis(f, (-1 - n) as usize)?;
                return self.mul_b(&dp, &EVec::basis((vec![], *g, jet.clone())));
            }
            let (n1, j1) = mono[0];
            let rest: EKey = (mono[1..].to_vec(), *g, jet.clone());
            // a_(n) τ(n1) R = τ(n1) a_(n) R − (τ a)_(n+n1) R
            let mut out = self.tau(j1 as usize, n1, &self.fun_key(f, n, &rest)?)?;
            let ta = regfun::tau(j1 as usize, &RegFun::basis(f));
            for (k, c) in &ta.terms {
                out.add_scaled(&self.fun_key(*k, n + n1, &rest)?, &c.neg_ref());
            }
            Ok(out)
        })
    }

    /// a_(n) v.
    pub fn fun(&self, a: &RegFun, n: i32, v: &EVec) -> Result<EVec> {
        let mut out = EVec::new();
        for (fk, cf) in &a.terms {
            for (k, c) in &v.terms {
                out.add_scaled(&self.fun_key(*fk, n, k)?, &cf.mul_ref(c));
            }
        }
        Ok(out)
    }

    pub fn omega_key(&self, j: u8, n: i32, key: &EKey) -> Result<EVec> {
        let d = key_degree(key) as i64 - n as i64;
        if d < 0 {
            return Ok(EVec::new());
        }
        self.check_degree(d as usize)?;
        self.cached(&self.omega_cache, (j, n, key.clone()), || {
            let (mono, g, jet) = key;
            if mono.is_empty() {
                if n >= 0 {
                    return Ok(EVec::new());
                }
                return Ok(EVec::basis((vec![], *g, jet_with(jet, ((-1 - n) as u8, j)))));
            }
            let (n1, j1) = mono[0];
            let rest: EKey = (mono[1..].to_vec(), *g, jet.clone());
            // [ω_j(n), τ_i(m)] = −C_ijs ω_s(m+n) − m δ_{m+n,0} δ_ij
            let mut out = self.tau(j1 as usize, n1, &self.omega_key(j, n, &rest)?)?;
            for s in 0..DIM {
                let c = &self.cs[j1 as usize][j as usize][s];
                if !c.is_zero() {
                    out.add_scaled(&self.omega_key(s as u8, n + n1, &rest)?, &c.neg_ref());
                }
            }
            if n + n1 == 0 && j == j1 {
                out.add_term(rest, Scalar::int(-n1 as i64));
            }
            Ok(out)
        })
    }

    /// ω_j(n) v.
    pub fn omega(&self, j: usize, n: i32, v: &EVec) -> Result<EVec> {
        let mut out = EVec::new();
        for (k, c) in &v.terms {
            out.add_scaled(&self.omega_key(j as u8, n, k)?, c);
        }
        Ok(out)
    }

    /// ω̃_i(m) v with ω̃_i = a^{ip} ω_p.
    pub fn omega_tilde(&self, i: usize, m: i32, v: &EVec) -> Result<EVec> {
        let Some(d) = degree_of(v) else { return Ok(EVec::new()) };
        let d = d as i32;
        let mut out = EVec::new();
        for p in 0..DIM {
            let a = &self.a[i][p];
            for l in 0..=(d - m).max(-1) {
                let w = self.omega(p, m + l, v)?;
                out.add_assign(&self.fun(a, -1 - l, &w)?);
            }
            for l in 0..d {
                let w = self.fun(a, l, v)?;
                out.add_assign(&self.omega(p, m - 1 - l, &w)?);
            }
        }
        Ok(out)
    }

    // ---- translation and Virasoro

    pub fn partial_key(&self, key: &EKey) -> Result<EVec> {
        let (mono, f, jet) = key;
        if mono.is_empty() {
            return self.partial_b(f, jet);
        }
        let (n1, j1) = mono[0];
        let rest: EKey = (mono[1..].to_vec(), *f, jet.clone());
        // [∂, τ(n)] = −n τ(n−1)
        let mut out = self.tau_key(j1, n1 - 1, &rest)?.scaled(&Scalar::int(-n1 as i64));
        out.add_assign(&self.tau(j1 as usize, n1, &self.partial_key(&rest)?)?);
        Ok(out)
    }

    pub fn partial(&self, v: &EVec) -> Result<EVec> {
        let mut out = EVec::new();
        for (k, c) in &v.terms {
            out.add_scaled(&self.partial_key(k)?, c);
        }
        Ok(out)
    }

    /// 𝓛_n v = ϖ_(n+1) v, with ϖ = τ_j(−1)ω_j + (k̄/2) ω_s ω_s.
    pub fn virasoro(&self, n: i32, v: &EVec) -> Result<EVec> {
        let Some(d) = degree_of(v) else { return Ok(EVec::new()) };
        let d = d as i32;
        let mut out = EVec::new();
        let mut quad = EVec::new();
        for j in 0..DIM {
            for l in 0..=(d - n - 1).max(-1) {
                let w = self.omega(j, n + 1 + l, v)?;
                out.add_assign(&self.tau(j, -1 - l, &w)?);
                quad.add_assign(&self.omega(j, -1 - l, &w)?);
            }
            for l in 0..=d {
                let w = self.tau(j, l, v)?;
                out.add_assign(&self.omega(j, n - l, &w)?);
                let w = self.omega(j, l, v)?;
                quad.add_assign(&self.omega(j, n - l, &w)?);
            }
        }
        out.add_scaled(&quad, &self.kbar.mul_ref(&Scalar::frac(1, 2)));
        Ok(out)
    }

    pub fn apply(&self, op: &Op, v: &EVec) -> Result<EVec> {
        match op {
            Op::Tau(i, m) => self.tau(*i, *m, v),
            Op::Bar(i, m) => self.bar(*i, *m, v),
            Op::Fun(a, n) => self.fun(a, *n, v),
            Op::Omega(j, n) => self.omega(*j, *n, v),
            Op::OmegaTilde(j, n) => self.omega_tilde(*j, *n, v),
            Op::Partial => self.partial(v),
            Op::Vir(n) => self.virasoro(*n, v),
        }
    }

    /// The normal form of x_1 x_2 ⋯ x_r v (x_r acts first).
    pub fn normal_form(&self, word: &[Op], v: &EVec) -> Result<EVec> {
        let mut cur = v.clone();
        for op in word.iter().rev() {
            cur = self.apply(op, &cur)?;
        }
        Ok(cur)
    }
}
