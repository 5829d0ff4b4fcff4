use std::cmp::Ordering;

use super::{Matrix, SymmetricMatrix};
use crate::error::{Error, Result};

/// Relative off-diagonal Frobenius threshold at which Jacobi stops.
pub const JACOBI_TOLERANCE: f64 = 1e-14;

/// Sweep budget for the cyclic Jacobi iteration.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalues above `-TOL_EIG` are treated as round-off and clamped to zero
/// by [`sqrt_psd`].
pub const TOL_EIG: f64 = 1e-10;

/// Eigendecomposition `A = Q diag(λ) Qᵀ` of a symmetric matrix.
///
/// Eigenvalues are ascending. Each eigenvector (column of `Q`) has its first
/// nonzero component positive; equal eigenvalues are ordered by comparing
/// their eigenvectors lexicographically.
#[derive(Clone, Debug)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    eigenvectors: Matrix,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Orthogonal matrix whose columns are the unit eigenvectors.
    pub fn eigenvectors(&self) -> &Matrix {
        &self.eigenvectors
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues[self.eigenvalues.len() - 1]
    }

    /// `Q diag(f(λ)) Qᵀ`.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> SymmetricMatrix {
        let q = &self.eigenvectors;
        let mapped: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        SymmetricMatrix::from_fn(q.rows(), |i, j| {
            (0..mapped.len()).map(|k| q[(i, k)] * mapped[k] * q[(j, k)]).sum()
        })
    }

    pub fn reconstruct(&self) -> SymmetricMatrix {
        self.map(|l| l)
    }
}

fn off_diagonal_norm(a: &Matrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)] * a[(i, j)];
            }
        }
    }
    s.sqrt()
}

fn frobenius_norm(a: &Matrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            s += a[(i, j)] * a[(i, j)];
        }
    }
    s.sqrt()
}

/// One Jacobi rotation annihilating `a[p][q]`, accumulated into `v`.
fn rotate(a: &mut Matrix, v: &mut Matrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = a.rows();

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = c * akp - s * akq;
        a[(k, q)] = s * akp + c * akq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = c * apk - s * aqk;
        a[(q, k)] = s * apk + c * aqk;
    }
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = c * vkp - s * vkq;
        v[(k, q)] = s * vkp + c * vkq;
    }
}

/// Symmetric eigendecomposition by cyclic Jacobi rotations.
///
/// Iterates row-cyclic sweeps until the off-diagonal Frobenius norm drops to
/// `JACOBI_TOLERANCE · ‖A‖_F`, failing after `JACOBI_MAX_SWEEPS` sweeps.
pub fn sym_eigen(matrix: &SymmetricMatrix) -> Result<Spectrum> {
    let n = matrix.dim();
    let mut a = matrix.to_matrix();
    let mut v = Matrix::identity(n);
    let scale = frobenius_norm(&a);
    let threshold = JACOBI_TOLERANCE * scale;

    let mut converged = off_diagonal_norm(&a) <= threshold;
    let mut sweep = 0;
    while !converged && sweep < JACOBI_MAX_SWEEPS {
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                // Past the first few sweeps, drop entries already below the
                // resolution of both diagonal entries.
                let g = 100.0 * apq.abs();
                if sweep > 3 && a[(p, p)].abs() + g == a[(p, p)].abs() && a[(q, q)].abs() + g == a[(q, q)].abs() {
                    a[(p, q)] = 0.0;
                    a[(q, p)] = 0.0;
                    continue;
                }
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweep += 1;
        converged = off_diagonal_norm(&a) <= threshold;
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: sweep });
    }

    let mut pairs: Vec<(f64, Vec<f64>)> = (0..n)
        .map(|k| {
            let mut col = v.column(k);
            if let Some(&first) = col.iter().find(|x| **x != 0.0) {
                if first < 0.0 {
                    col.iter_mut().for_each(|x| *x = -*x);
                }
            }
            (a[(k, k)], col)
        })
        .collect();
    pairs.sort_by(|(la, va), (lb, vb)| {
        la.total_cmp(lb).then_with(|| {
            va.iter()
                .zip(vb)
                .map(|(x, y)| y.total_cmp(x))
                .find(|o| *o != Ordering::Equal)
                .unwrap_or(Ordering::Equal)
        })
    });

    let eigenvalues = pairs.iter().map(|(l, _)| *l).collect();
    let eigenvectors = Matrix::from_fn(n, n, |i, k| pairs[k].1[i]);
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
    })
}

/// Principal square root of a positive semidefinite matrix.
///
/// Eigenvalues in `[-TOL_EIG, 0)` are clamped to zero; anything more negative
/// is rejected.
pub fn sqrt_psd(matrix: &SymmetricMatrix) -> Result<SymmetricMatrix> {
    let spectrum = sym_eigen(matrix)?;
    let min = spectrum.min_eigenvalue();
    if min < -TOL_EIG {
        return Err(Error::NotPositiveSemidefinite { min_eigenvalue: min });
    }
    Ok(spectrum.map(|l| l.max(0.0).sqrt()))
}

pub fn trace(matrix: &SymmetricMatrix) -> f64 {
    matrix.trace()
}

/// Determinant as the product of the Jacobi eigenvalues.
pub fn det(matrix: &SymmetricMatrix) -> Result<f64> {
    Ok(sym_eigen(matrix)?.eigenvalues().iter().product())
}
