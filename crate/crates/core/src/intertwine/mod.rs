//! Intertwining operators between Weyl modules, KZ series in z₂/z₁, and the
//! triple products on the top level of ⊕ V_{λ,k} ⊗ V_{λ*,k̄}.

mod kz;
mod table;
mod triple;

pub use kz::{kz_channels, pairing_constancy, pairing_series, KzChannel, KzSeries, Label};
pub use table::IntertwinerTable;
pub use triple::{triple_product, TripleEngine, TripleReport};

use crate::lie_core::{HomTensor, Rep};
use crate::linalg::{self, Matrix};
use crate::regfun::sl2;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Pair {
    P12,
    P13,
    P23,
}

pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (ra, ca) = (a.len(), a.first().map_or(0, |r| r.len()));
    let (rb, cb) = (b.len(), b.first().map_or(0, |r| r.len()));
    let mut out = linalg::zeros(ra * rb, ca * cb);
    for i in 0..ra {
        for j in 0..ca {
            if a[i][j].is_zero() {
                continue;
            }
            for k in 0..rb {
                for l in 0..cb {
                    if !b[k][l].is_zero() {
                        out[i * rb + k][j * cb + l] = a[i][j].mul_ref(&b[k][l]);
                    }
                }
            }
        }
    }
    out
}

/// Σ_i τ_i ⊗ τ_i on two of the three factors of V_1 ⊗ V_2 ⊗ V_3.
pub fn omega_matrix(reps: &[Rep; 3], which: Pair) -> Matrix {
    let g = sl2();
    let (s, t) = match which {
        Pair::P12 => (0, 1),
        Pair::P13 => (0, 2),
        Pair::P23 => (1, 2),
    };
    let n: usize = reps.iter().map(|r| r.dim).product();
    let mut out = linalg::zeros(n, n);
    for i in 0..g.dim {
        let ms: Vec<Matrix> =
            (0..3).map(|f| if f == s || f == t { reps[f].tau(g, i) } else { linalg::identity(reps[f].dim) }).collect();
        let k = kron(&kron(&ms[0], &ms[1]), &ms[2]);
        for (orow, krow) in out.iter_mut().zip(&k) {
            for (o, x) in orow.iter_mut().zip(krow) {
                if !x.is_zero() {
                    *o = o.add_ref(x);
                }
            }
        }
    }
    out
}

/// Ω_{which} applied to a tensor t ∈ V_1 ⊗ V_2 ⊗ V_3 (index (a·d₂ + b)·d₃ + c).
pub fn omega_action(reps: &[Rep; 3], which: Pair, t: &[Scalar]) -> Vec<Scalar> {
    mat_vec(&omega_matrix(reps, which), t)
}

/// f ∘ Ω for f ∈ Hom(V_1 ⊗ V_2 ⊗ V_3, V_γ).
pub fn hom_times_omega(f: &HomTensor, reps: &[Rep; 3], which: Pair) -> HomTensor {
    HomTensor { mat: linalg::matmul(&f.mat, &omega_matrix(reps, which)) }
}

/// Casimir eigenvalue Σ τ_i² on V_n, n(n+2)/2.
pub fn casimir_value(n: u32) -> Scalar {
    Scalar::frac((n * (n + 2)) as i64, 2)
}

/// (r ⊗ f)(u ⊗ v ⊗ w) = r(u ⊗ f(v ⊗ w)).
pub fn compose_hom(r: &HomTensor, f: &HomTensor, d1: usize) -> HomTensor {
    let dg = r.mat.len();
    let da = f.mat.len();
    let d23 = f.mat.first().map_or(0, |x| x.len());
    let mut mat = linalg::zeros(dg, d1 * d23);
    for g in 0..dg {
        for a in 0..d1 {
            for t in 0..da {
                let x = &r.mat[g][a * da + t];
                if x.is_zero() {
                    continue;
                }
                for (bc, y) in f.mat[t].iter().enumerate() {
                    if !y.is_zero() {
                        let cell = &mut mat[g][a * d23 + bc];
                        *cell = cell.add_ref(&x.mul_ref(y));
                    }
                }
            }
        }
    }
    HomTensor { mat }
}

pub(crate) fn mat_vec(m: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    m.iter()
        .map(|row| {
            row.iter().zip(v).fold(Scalar::zero(), |acc, (x, y)| {
                if x.is_zero() || y.is_zero() {
                    acc
                } else {
                    acc.add_ref(&x.mul_ref(y))
                }
            })
        })
        .collect()
}
