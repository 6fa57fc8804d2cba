//! Dense exact linear algebra over Scalar, plus a modular rank certificate.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Nf, Scalar, Q};

pub type Matrix = Vec<Vec<Scalar>>;

pub fn zeros(r: usize, c: usize) -> Matrix {
    vec![vec![Scalar::zero(); c]; r]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Scalar::one();
    }
    m
}

pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = b.first().map_or(0, |r| r.len());
    let mut out = zeros(a.len(), n);
    for (i, row) in a.iter().enumerate() {
        for (l, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b[l].iter().enumerate() {
                if !y.is_zero() {
                    out[i][j] = out[i][j].add_ref(&x.mul_ref(y));
                }
            }
        }
    }
    out
}

pub fn transpose(a: &Matrix) -> Matrix {
    let n = a.first().map_or(0, |r| r.len());
    (0..n).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

fn weight(s: &Scalar) -> usize {
    s.num().c.len() + s.den().c.len()
}

/// Reduced row echelon form; returns pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| weight(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot");
        if !inv.is_one() {
            for x in m[r].iter_mut().skip(c) {
                if !x.is_zero() {
                    *x = x.mul_ref(&inv);
                }
            }
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (j, pv) in prow.iter().enumerate().skip(c) {
                if !pv.is_zero() {
                    row[j] = row[j].sub_ref(&f.mul_ref(pv));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of {x : m x = 0}.
pub fn kernel(m: &Matrix, cols: usize) -> Vec<Vec<Scalar>> {
    let mut a = m.clone();
    let piv = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::one();
            for (r, &p) in piv.iter().enumerate() {
                v[p] = a[r][f].neg_ref();
            }
            v
        })
        .collect()
}

/// One solution of m x = b.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Vec<Scalar>> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut a: Matrix = m
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let piv = rref(&mut a);
    if piv.last() == Some(&cols) {
        return Err(Error::NoSolution);
    }
    let mut x = vec![Scalar::zero(); cols];
    for (r, &p) in piv.iter().enumerate() {
        x[p] = a[r][cols].clone();
    }
    Ok(x)
}

pub fn det(m: &Matrix) -> Scalar {
    let n = m.len();
    let mut a = m.clone();
    let mut d = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).filter(|&i| !a[i][c].is_zero()).min_by_key(|&i| weight(&a[i][c])) else {
            return Scalar::zero();
        };
        if p != c {
            a.swap(p, c);
            d = d.neg_ref();
        }
        d = d.mul_ref(&a[c][c]);
        let inv = a[c][c].inv().expect("pivot");
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].mul_ref(&inv);
            for j in c..n {
                if !a[c][j].is_zero() {
                    let t = f.mul_ref(&a[c][j]);
                    a[i][j] = a[i][j].sub_ref(&t);
                }
            }
        }
    }
    d
}

pub fn inverse(m: &Matrix) -> Result<Matrix> {
    let n = m.len();
    let mut a: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut a);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return Err(Error::DivisionByZero);
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Sparse linear combination keyed by an ordered basis label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lin<K: Ord> {
    pub terms: BTreeMap<K, Scalar>,
}

impl<K: Ord + Clone> Default for Lin<K> {
    fn default() -> Self {
        Lin { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Lin<K> {
    pub fn new() -> Self {
        Self::default()
    }
    pub fn single(k: K, c: Scalar) -> Self {
        let mut l = Self::new();
        l.add_term(k, c);
        l
    }
    pub fn basis(k: K) -> Self {
        Self::single(k, Scalar::one())
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn add_term(&mut self, k: K, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v = v.add_ref(&c);
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }
    pub fn add_scaled(&mut self, o: &Self, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &o.terms {
            self.add_term(k.clone(), if c.is_one() { v.clone() } else { v.mul_ref(c) });
        }
    }
    pub fn add_assign(&mut self, o: &Self) {
        self.add_scaled(o, &Scalar::one());
    }
    pub fn sub_assign(&mut self, o: &Self) {
        self.add_scaled(o, &Scalar::int(-1));
    }
    pub fn scaled(&self, c: &Scalar) -> Self {
        let mut r = Self::new();
        r.add_scaled(self, c);
        r
    }
    pub fn plus(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }
    pub fn minus(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.sub_assign(o);
        r
    }
    pub fn coeff(&self, k: &K) -> Scalar {
        self.terms.get(k).cloned().unwrap_or_default()
    }
    pub fn map_scalars(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<Self> {
        let mut r = Self::new();
        for (k, v) in &self.terms {
            r.add_term(k.clone(), f(v)?);
        }
        Ok(r)
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for Lin<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(it: I) -> Self {
        let mut l = Lin::new();
        for (k, c) in it {
            l.add_term(k, c);
        }
        l
    }
}

/// Coordinates of a family of vectors with respect to the union of their supports.
pub fn to_columns<K: Ord + Clone>(vs: &[Lin<K>]) -> (Vec<K>, Matrix) {
    let mut keys: Vec<K> = vs.iter().flat_map(|v| v.terms.keys().cloned()).collect();
    keys.sort();
    keys.dedup();
    let idx: BTreeMap<&K, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut m = zeros(keys.len(), vs.len());
    for (j, v) in vs.iter().enumerate() {
        for (k, c) in &v.terms {
            m[idx[k]][j] = c.clone();
        }
    }
    (keys, m)
}

/// Kernel of the map sending basis vector j to vs[j].
pub fn relations<K: Ord + Clone>(vs: &[Lin<K>]) -> Vec<Vec<Scalar>> {
    let (_, m) = to_columns(vs);
    if m.is_empty() {
        return (0..vs.len())
            .map(|j| (0..vs.len()).map(|i| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
            .collect();
    }
    kernel(&m, vs.len())
}

pub fn span_rank<K: Ord + Clone>(vs: &[Lin<K>]) -> usize {
    let (_, m) = to_columns(vs);
    rank(&m)
}

/// Reduction of Z[i,√2] modulo a prime p ≡ 1 (mod 8) sending i, √2 to square roots in F_p.
/// A nonzero minor after specializing k and reducing certifies that the exact minor is nonzero.
pub struct ModP {
    pub p: u64,
    i: u64,
    s: u64,
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn addm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}

impl Default for ModP {
    fn default() -> Self {
        ModP::new()
    }
}

impl ModP {
    pub fn new() -> ModP {
        let p: u64 = 0xffff_ffff_0000_0001;
        for g in 2..200 {
            let z = powm(g, (p - 1) / 8, p);
            let i = mulm(z, z, p);
            let s = addm(z, powm(z, 7, p), p);
            if mulm(i, i, p) == p - 1 && mulm(s, s, p) == 2 {
                return ModP { p, i, s };
            }
        }
        unreachable!("no primitive eighth root found")
    }
    fn red_int(&self, n: &BigInt) -> u64 {
        let pb = BigInt::from(self.p);
        let mut r = n % &pb;
        if r.is_negative() {
            r += &pb;
        }
        r.to_u64().unwrap()
    }
    fn red_q(&self, r: &Q) -> Option<u64> {
        let d = self.red_int(r.denom());
        if d == 0 {
            return None;
        }
        Some(mulm(self.red_int(r.numer()), powm(d, self.p - 2, self.p), self.p))
    }
    pub fn red_nf(&self, a: &Nf) -> Option<u64> {
        let p = self.p;
        let c0 = self.red_q(&a.c[0])?;
        let c1 = self.red_q(&a.c[1])?;
        let c2 = self.red_q(&a.c[2])?;
        let c3 = self.red_q(&a.c[3])?;
        let is = mulm(self.i, self.s, p);
        Some(
            ((c0 as u128 + mulm(c1, self.i, p) as u128 + mulm(c2, self.s, p) as u128 + mulm(c3, is, p) as u128)
                % p as u128) as u64,
        )
    }
    /// Rank of m after k = k0 and reduction; None if some entry is not integral at p.
    pub fn rank(&self, m: &Matrix, k0: &Nf) -> Option<usize> {
        let p = self.p;
        let mut a: Vec<Vec<u64>> = Vec::with_capacity(m.len());
        for row in m {
            let mut r = Vec::with_capacity(row.len());
            for x in row {
                r.push(if x.is_zero() { 0 } else { self.red_nf(&x.evaluate_level(k0).ok()?)? });
            }
            a.push(r);
        }
        let rows = a.len();
        let cols = a.first().map_or(0, |r| r.len());
        let mut rk = 0;
        for c in 0..cols {
            let Some(pr) = (rk..rows).find(|&i| a[i][c] != 0) else { continue };
            a.swap(rk, pr);
            let inv = powm(a[rk][c], p - 2, p);
            for i in rk + 1..rows {
                if a[i][c] == 0 {
                    continue;
                }
                let f = mulm(a[i][c], inv, p);
                for j in c..cols {
                    let t = mulm(f, a[rk][j], p);
                    a[i][j] = addm(a[i][j], p - t, p);
                }
            }
            rk += 1;
            if rk == rows {
                break;
            }
        }
        Some(rk)
    }
}

/// Level used for specialization certificates: far from every small rational relation.
pub fn certificate_level() -> Nf {
    Nf::rat(Q::new(BigInt::from(1_000_003), BigInt::from(1009)))
}

pub fn is_one_nf(x: &Nf) -> bool {
    x.c[0].is_one() && x.c[1].is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::int(n)
    }

    #[test]
    fn kernel_and_solve() {
        let k = Scalar::k();
        let m = vec![vec![s(1), k.clone(), s(0)], vec![s(2), &k * &s(2), s(1)]];
        let ker = kernel(&m, 3);
        assert_eq!(ker.len(), 1);
        let v = &ker[0];
        for row in &m {
            let dot = row.iter().zip(v).fold(Scalar::zero(), |a, (x, y)| a + x * y);
            assert!(dot.is_zero());
        }
        let x = solve(&m, &[s(1), s(3)]).unwrap();
        assert_eq!(x[2], s(1));
    }

    #[test]
    fn det_inverse() {
        let k = Scalar::k();
        let m = vec![vec![k.clone(), s(1)], vec![s(1), k.clone()]];
        assert_eq!(det(&m), &k * &k - s(1));
        let inv = inverse(&m).unwrap();
        assert_eq!(matmul(&m, &inv), identity(2));
    }

    #[test]
    fn modp_roots() {
        let mp = ModP::new();
        let m = vec![vec![Scalar::i(), Scalar::sqrt2()], vec![Scalar::sqrt2(), Scalar::i()]];
        // det = -1 - 2 = -3
        assert_eq!(mp.rank(&m, &Nf::zero()), Some(2));
        let sing = vec![vec![Scalar::sqrt2(), s(2)], vec![s(1), Scalar::sqrt2()]];
        assert_eq!(mp.rank(&sing, &Nf::zero()), Some(1));
    }
}
