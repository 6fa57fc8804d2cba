//! sl2 in an orthonormal basis, its finite-dimensional representations and invariant Hom spaces.

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalar::{qf, Nf, Scalar, Q};

/// Structure constants in an orthonormal basis τ_1..τ_dim.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    pub dim: usize,
    /// c[i][j][k] = C_{ijk}, with [τ_i, τ_j] = Σ_k C_{ijk} τ_k.
    pub c: Vec<Vec<Vec<Nf>>>,
    pub dual_coxeter: Q,
    /// τ_i written in the (e, h, f) basis.
    pub from_ehf: Vec<[Nf; 3]>,
}

pub fn build_sl2() -> LieAlgebra {
    let r = Nf::rat(qf(1, 2)).mul_ref(&Nf::sqrt2()); // 1/√2
    let ir = r.mul_ref(&Nf::i());
    let z = Nf::zero();
    let from_ehf = vec![
        [r.clone(), z.clone(), r.clone()],
        [ir.clone(), z.clone(), ir.neg_ref()],
        [z.clone(), r.clone(), z.clone()],
    ];
    // brackets of e,h,f as 2x2 matrices, then re-expand in the τ basis
    let m = |x: &[Nf; 3]| -> [[Nf; 2]; 2] { [[x[1].clone(), x[0].clone()], [x[2].clone(), x[1].neg_ref()]] };
    let mul = |a: &[[Nf; 2]; 2], b: &[[Nf; 2]; 2]| -> [[Nf; 2]; 2] {
        let mut o: [[Nf; 2]; 2] = Default::default();
        for i in 0..2 {
            for j in 0..2 {
                o[i][j] = a[i][0].mul_ref(&b[0][j]).add_ref(&a[i][1].mul_ref(&b[1][j]));
            }
        }
        o
    };
    let mats: Vec<[[Nf; 2]; 2]> = from_ehf.iter().map(m).collect();
    // trace form is the normalized form; basis is orthonormal so C_ijk = tr([τi,τj] τk)
    let mut c = vec![vec![vec![Nf::zero(); 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let ab = mul(&mats[i], &mats[j]);
            let ba = mul(&mats[j], &mats[i]);
            let mut br: [[Nf; 2]; 2] = Default::default();
            for a in 0..2 {
                for b in 0..2 {
                    br[a][b] = ab[a][b].sub_ref(&ba[a][b]);
                }
            }
            for k in 0..3 {
                let p = mul(&br, &mats[k]);
                c[i][j][k] = p[0][0].add_ref(&p[1][1]);
            }
        }
    }
    LieAlgebra { dim: 3, c, dual_coxeter: Q::from_integer(2.into()), from_ehf }
}

impl LieAlgebra {
    pub fn hv(&self) -> Scalar {
        Scalar::from_q(self.dual_coxeter.clone())
    }
    pub fn cs(&self, i: usize, j: usize, k: usize) -> Scalar {
        Scalar::from_nf(self.c[i][j][k].clone())
    }
    /// e, h, f written in the τ basis (rows).
    pub fn ehf_in_tau(&self) -> Matrix {
        // from_ehf rows give τ_i = Σ_t M[i][t] x_t; x_t = Σ_i (M^{-1})[t][i] τ_i
        let m: Matrix = self.from_ehf.iter().map(|r| r.iter().map(|x| Scalar::from_nf(x.clone())).collect()).collect();
        linalg::inverse(&m).expect("basis change")
    }
    /// Nonzero C_{ijk} over k.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<(usize, Nf)> {
        (0..self.dim).filter(|&k| !self.c[i][j][k].is_zero()).map(|k| (k, self.c[i][j][k].clone())).collect()
    }
}

/// A finite-dimensional representation given by integer e, h, f matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct Rep {
    pub dim: usize,
    pub ehf: [Matrix; 3],
    /// Highest weight when irreducible; dual irreps keep the weight of V_λ* = V_λ.
    pub weight: Option<u32>,
    pub is_dual: bool,
}

impl Rep {
    /// V_n with basis v_j, h v_j = (n-2j) v_j, f v_j = v_{j+1}, e v_j = j(n-j+1) v_{j-1}.
    pub fn irrep(n: u32) -> Rep {
        let d = n as usize + 1;
        let mut e = linalg::zeros(d, d);
        let mut h = linalg::zeros(d, d);
        let mut f = linalg::zeros(d, d);
        for j in 0..d {
            let jj = j as i64;
            h[j][j] = Scalar::int(n as i64 - 2 * jj);
            if j + 1 < d {
                f[j + 1][j] = Scalar::one();
            }
            if j > 0 {
                e[j - 1][j] = Scalar::int(jj * (n as i64 - jj + 1));
            }
        }
        Rep { dim: d, ehf: [e, h, f], weight: Some(n), is_dual: false }
    }
    pub fn dual(&self) -> Rep {
        let neg_t = |m: &Matrix| -> Matrix {
            linalg::transpose(m).into_iter().map(|r| r.into_iter().map(|x| x.neg_ref()).collect()).collect()
        };
        Rep {
            dim: self.dim,
            ehf: [neg_t(&self.ehf[0]), neg_t(&self.ehf[1]), neg_t(&self.ehf[2])],
            weight: self.weight,
            is_dual: !self.is_dual,
        }
    }
    pub fn tensor(&self, o: &Rep) -> Rep {
        let d = self.dim * o.dim;
        let mk = |a: &Matrix, b: &Matrix| -> Matrix {
            let mut m = linalg::zeros(d, d);
            for i in 0..self.dim {
                for j in 0..o.dim {
                    let row = i * o.dim + j;
                    for i2 in 0..self.dim {
                        if !a[i][i2].is_zero() {
                            m[row][i2 * o.dim + j] = m[row][i2 * o.dim + j].add_ref(&a[i][i2]);
                        }
                    }
                    for j2 in 0..o.dim {
                        if !b[j][j2].is_zero() {
                            m[row][i * o.dim + j2] = m[row][i * o.dim + j2].add_ref(&b[j][j2]);
                        }
                    }
                }
            }
            m
        };
        Rep {
            dim: d,
            ehf: [mk(&self.ehf[0], &o.ehf[0]), mk(&self.ehf[1], &o.ehf[1]), mk(&self.ehf[2], &o.ehf[2])],
            weight: None,
            is_dual: false,
        }
    }
    /// Matrix of the orthonormal basis element τ_i.
    pub fn tau(&self, g: &LieAlgebra, i: usize) -> Matrix {
        let mut m = linalg::zeros(self.dim, self.dim);
        for (t, coef) in g.from_ehf[i].iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            for (a, row) in self.ehf[t].iter().enumerate() {
                for (b, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        m[a][b] = m[a][b].add_ref(&x.mul_nf(coef));
                    }
                }
            }
        }
        m
    }
    pub fn taus(&self, g: &LieAlgebra) -> Vec<Matrix> {
        (0..g.dim).map(|i| self.tau(g, i)).collect()
    }
}

pub fn irrep_action(g: &LieAlgebra, v: &Rep, x: usize, vec: &[Scalar]) -> Result<Vec<Scalar>> {
    if vec.len() != v.dim {
        return Err(Error::Dimension(format!("vector of length {} for rep of dim {}", vec.len(), v.dim)));
    }
    let m = v.tau(g, x);
    Ok(m.iter().map(|row| row.iter().zip(vec).fold(Scalar::zero(), |a, (x, y)| a + x * y)).collect())
}

pub fn casimir(g: &LieAlgebra, v: &Rep) -> Matrix {
    let mut out = linalg::zeros(v.dim, v.dim);
    for t in v.taus(g) {
        let sq = linalg::matmul(&t, &t);
        for a in 0..v.dim {
            for b in 0..v.dim {
                out[a][b] = out[a][b].add_ref(&sq[a][b]);
            }
        }
    }
    out
}

/// Δ(λ) = (λ, λ+2ρ) / (2(k + h^∨)); for sl2 (λ, λ+2ρ) = n(n+2)/2.
pub fn conformal_weight(n: u32, level: &Scalar) -> Result<Scalar> {
    let kappa = level.add_ref(&Scalar::int(2));
    if kappa.is_zero() {
        return Err(Error::Invalid("critical level".into()));
    }
    let c = Scalar::frac((n * (n + 2)) as i64, 4);
    c.div_ref(&kappa)
}

/// k̄ = -2h^∨ - k.
pub fn dual_level(level: &Scalar) -> Scalar {
    Scalar::int(-4).sub_ref(level)
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomTensor {
    /// Matrix of size dim(target) x dim(source tensor product).
    pub mat: Matrix,
}

/// Basis of Hom_g(src, tgt), by solving the equivariance system.
pub fn hom_basis(src: &Rep, tgt: &Rep) -> Vec<HomTensor> {
    let (ds, dt) = (src.dim, tgt.dim);
    let n = ds * dt;
    let mut rows: Matrix = Vec::new();
    for t in 0..3 {
        let (xs, xt) = (&src.ehf[t], &tgt.ehf[t]);
        // (F Xs - Xt F)[a][b] = 0, unknown F[a][c] at a*ds + c
        for a in 0..dt {
            for b in 0..ds {
                let mut r = vec![Scalar::zero(); n];
                for c in 0..ds {
                    if !xs[c][b].is_zero() {
                        r[a * ds + c] = r[a * ds + c].add_ref(&xs[c][b]);
                    }
                }
                for c in 0..dt {
                    if !xt[a][c].is_zero() {
                        r[c * ds + b] = r[c * ds + b].sub_ref(&xt[a][c]);
                    }
                }
                if r.iter().any(|x| !x.is_zero()) {
                    rows.push(r);
                }
            }
        }
    }
    let ker = if rows.is_empty() { linalg::kernel(&linalg::zeros(1, n), n) } else { linalg::kernel(&rows, n) };
    ker.into_iter().map(|v| HomTensor { mat: (0..dt).map(|a| v[a * ds..(a + 1) * ds].to_vec()).collect() }).collect()
}

pub fn tensor_all(reps: &[Rep]) -> Rep {
    let mut r = reps[0].clone();
    for x in &reps[1..] {
        r = r.tensor(x);
    }
    r
}

pub fn is_equivariant(f: &HomTensor, src: &Rep, tgt: &Rep) -> bool {
    (0..3).all(|t| linalg::matmul(&f.mat, &src.ehf[t]) == linalg::matmul(&tgt.ehf[t], &f.mat))
}

/// (f, g) = tr(f g*) / dim(target), g* the transpose under the natural dual bases.
pub fn dual_hom_pairing(f: &HomTensor, g: &HomTensor) -> Result<Scalar> {
    if f.mat.len() != g.mat.len() || f.mat.first().map(|r| r.len()) != g.mat.first().map(|r| r.len()) {
        return Err(Error::Invalid("weight mismatch".into()));
    }
    let mut tr = Scalar::zero();
    for (fr, gr) in f.mat.iter().zip(&g.mat) {
        for (x, y) in fr.iter().zip(gr) {
            if !x.is_zero() && !y.is_zero() {
                tr = tr.add_ref(&x.mul_ref(y));
            }
        }
    }
    tr.div_ref(&Scalar::int(f.mat.len() as i64))
}

/// Bases {f_i} of Hom(⊗V_λ, V_ν) and {g_i} of Hom(⊗V_λ*, V_ν*) with (f_i, g_j) = δ_ij.
pub fn dual_basis(srcs: &[Rep], tgt: &Rep) -> Result<(Vec<HomTensor>, Vec<HomTensor>)> {
    let src = tensor_all(srcs);
    let dsrc = tensor_all(&srcs.iter().map(Rep::dual).collect::<Vec<_>>());
    let fs = hom_basis(&src, tgt);
    if fs.is_empty() {
        return Err(Error::EmptyChannel);
    }
    let hs = hom_basis(&dsrc, &tgt.dual());
    let n = fs.len();
    // G = P H with pairing matrix M_ij = (f_i, h_j): need M P^T = I
    let mut m = linalg::zeros(n, hs.len());
    for i in 0..n {
        for j in 0..hs.len() {
            m[i][j] = dual_hom_pairing(&fs[i], &hs[j])?;
        }
    }
    if hs.len() != n {
        return Err(Error::Dimension("dual Hom space has different dimension".into()));
    }
    let pt = linalg::inverse(&m)?;
    let gs = (0..n)
        .map(|i| {
            let mut mat = linalg::zeros(tgt.dim, src.dim);
            for (j, h) in hs.iter().enumerate() {
                let c = &pt[j][i];
                if c.is_zero() {
                    continue;
                }
                for a in 0..tgt.dim {
                    for b in 0..src.dim {
                        mat[a][b] = mat[a][b].add_ref(&h.mat[a][b].mul_ref(c));
                    }
                }
            }
            HomTensor { mat }
        })
        .collect();
    Ok((fs, gs))
}

/// Intertwiners V_tgt -> src for an irreducible `tgt` in a weight basis, built from
/// highest-weight vectors of `src` (kernel of e on the top weight space) and lowering by f.
pub fn intertwiners_into(tgt: &Rep, src: &Rep) -> Vec<Matrix> {
    let hdiag = |r: &Rep| -> Vec<Scalar> { (0..r.dim).map(|a| r.ehf[1][a][a].clone()).collect() };
    let (ht, hs) = (hdiag(tgt), hdiag(src));
    let top = ht.iter().enumerate().max_by_key(|(_, x)| x.as_nf().and_then(|n| n.as_rational().cloned())).unwrap();
    let (t0, wt) = (top.0, top.1.clone());
    let wspace: Vec<usize> = (0..src.dim).filter(|&a| hs[a] == wt).collect();
    if wspace.is_empty() {
        return vec![];
    }
    let e = &src.ehf[0];
    let rows: Matrix = (0..src.dim).map(|r| wspace.iter().map(|&c| e[r][c].clone()).collect()).collect();
    let ker = linalg::kernel(&rows, wspace.len());
    let apply = |m: &Matrix, v: &[Scalar]| -> Vec<Scalar> {
        m.iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(Scalar::zero(), |a, (x, y)| if x.is_zero() || y.is_zero() { a } else { a + x * y })
            })
            .collect()
    };
    ker.into_iter()
        .map(|kv| {
            let mut w = vec![Scalar::zero(); src.dim];
            for (c, &a) in wspace.iter().enumerate() {
                w[a] = kv[c].clone();
            }
            let mut u = vec![Scalar::zero(); tgt.dim];
            u[t0] = Scalar::one();
            let mut m = linalg::zeros(src.dim, tgt.dim);
            for _ in 0..tgt.dim {
                let Some(b) = (0..tgt.dim).find(|&b| !u[b].is_zero()) else { break };
                let inv = u[b].inv().unwrap();
                for a in 0..src.dim {
                    m[a][b] = w[a].mul_ref(&inv);
                }
                u = apply(&tgt.ehf[2], &u);
                w = apply(&src.ehf[2], &w);
            }
            m
        })
        .collect()
}

/// Weight-space version of `dual_basis` for irreducible targets.
pub fn dual_basis_fast(srcs: &[Rep], tgt: &Rep) -> Result<(Vec<HomTensor>, Vec<HomTensor>)> {
    let src = tensor_all(srcs);
    let dsrc = tensor_all(&srcs.iter().map(Rep::dual).collect::<Vec<_>>());
    let qs = intertwiners_into(tgt, &src);
    if qs.is_empty() {
        return Err(Error::EmptyChannel);
    }
    let ps = intertwiners_into(&tgt.dual(), &dsrc);
    let gs: Vec<HomTensor> = qs.iter().map(|q| HomTensor { mat: linalg::transpose(q) }).collect();
    let fs0: Vec<HomTensor> = ps.iter().map(|p| HomTensor { mat: linalg::transpose(p) }).collect();
    let n = gs.len();
    let mut m = linalg::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[i][j] = dual_hom_pairing(&fs0[i], &gs[j])?;
        }
    }
    let mi = linalg::inverse(&m)?;
    let fs = (0..n)
        .map(|i| {
            let mut mat = linalg::zeros(tgt.dim, src.dim);
            for (l, f) in fs0.iter().enumerate() {
                let c = &mi[i][l];
                if c.is_zero() {
                    continue;
                }
                for a in 0..tgt.dim {
                    for b in 0..src.dim {
                        if !f.mat[a][b].is_zero() {
                            mat[a][b] = mat[a][b].add_ref(&f.mat[a][b].mul_ref(c));
                        }
                    }
                }
            }
            HomTensor { mat }
        })
        .collect();
    Ok((fs, gs))
}

/// Σ_i f_i ⊗ g_i flattened, to compare across basis choices.
pub fn canonical_element(fs: &[HomTensor], gs: &[HomTensor]) -> Matrix {
    let rows = fs[0].mat.len() * fs[0].mat[0].len();
    let cols = gs[0].mat.len() * gs[0].mat[0].len();
    let mut out = linalg::zeros(rows, cols);
    for (f, g) in fs.iter().zip(gs) {
        let fv: Vec<&Scalar> = f.mat.iter().flatten().collect();
        let gv: Vec<&Scalar> = g.mat.iter().flatten().collect();
        for (a, x) in fv.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in gv.iter().enumerate() {
                if !y.is_zero() {
                    out[a][b] = out[a][b].add_ref(&x.mul_ref(y));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_constants() {
        let g = build_sl2();
        let mi_s2 = Nf::i().mul_ref(&Nf::sqrt2()).neg_ref();
        assert_eq!(g.c[0][1][2], mi_s2);
        assert!(g.c[0][0][1].is_zero());
    }

    #[test]
    fn casimirs() {
        let g = build_sl2();
        let c1 = casimir(&g, &Rep::irrep(1));
        assert_eq!(c1, vec![vec![Scalar::frac(3, 2), Scalar::zero()], vec![Scalar::zero(), Scalar::frac(3, 2)]]);
        let c2 = casimir(&g, &Rep::irrep(2));
        for (a, r) in c2.iter().enumerate() {
            for (b, x) in r.iter().enumerate() {
                assert_eq!(*x, if a == b { Scalar::int(4) } else { Scalar::zero() });
            }
        }
    }

    #[test]
    fn hom_dims() {
        let v = Rep::irrep;
        assert_eq!(hom_basis(&v(1).tensor(&v(1)), &v(0)).len(), 1);
        assert_eq!(hom_basis(&v(1).tensor(&v(1)), &v(1)).len(), 0);
        assert_eq!(hom_basis(&v(1).tensor(&v(1)), &v(2)).len(), 1);
        assert_eq!(hom_basis(&v(0).tensor(&v(3)), &v(3)).len(), 1);
    }

    #[test]
    fn fast_dual_basis_matches() {
        for (l, m, n) in [(1, 1, 0), (1, 1, 2), (2, 1, 3), (2, 2, 2), (2, 1, 1)] {
            let srcs = [Rep::irrep(l), Rep::irrep(m)];
            let (f1, g1) = dual_basis(&srcs, &Rep::irrep(n)).unwrap();
            let (f2, g2) = dual_basis_fast(&srcs, &Rep::irrep(n)).unwrap();
            assert_eq!(canonical_element(&f1, &g1), canonical_element(&f2, &g2));
            assert_eq!(dual_hom_pairing(&f2[0], &g2[0]).unwrap(), Scalar::one());
        }
    }

    #[test]
    fn conformal_weights() {
        let k = Scalar::k();
        let d = conformal_weight(1, &k).unwrap();
        assert_eq!(d.evaluate_level(&Nf::int(1)).unwrap(), Nf::rat(qf(1, 4)));
        let db = conformal_weight(1, &dual_level(&k)).unwrap();
        assert_eq!(db, d.neg_ref());
        assert!(conformal_weight(0, &k).unwrap().is_zero());
        assert!(conformal_weight(1, &Scalar::int(-2)).is_err());
    }
}
