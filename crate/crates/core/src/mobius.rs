//! Möbius matrices
//!
//! ```text
//! μ_{n,v} = 2γ²/((n−3) + 4γ²) · ⎡ 1 − 1/(2γ²)   vᵀ                ⎤
//!                               ⎣ v             I/(2γ²) + vvᵀ     ⎦
//! ```
//!
//! are trace-one positive definite `(n+1)×(n+1)` real matrices, i.e. real
//! mixed states, defined for `n ≥ 3`. They coincide with the trace-normalized
//! boost `B(v)² / tr B(v)² = B(2⊗v) / tr B(2⊗v)`, and share an explicit
//! eigenbasis with `B(v)`.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::boost::{boost, boost_eigenvalue};
use crate::error::{Error, Result};
use crate::gyrogroup::{double, BallVector};
use crate::linalg::{dot, Matrix, SymmetricMatrix};

/// Orthogonal `O_v` whose rows are the common eigenvectors of `B(v)` and
/// `μ_{n,v}`:
///
/// * row 0: `(1/√2, v̂/√2)`, eigenvalue `λ` of `B(v)`
/// * row 1: `(−1/√2, v̂/√2)`, eigenvalue `1/λ`
/// * rows 2..: `(0, u_j)` with `u_j ⟂ v`, eigenvalue 1
#[derive(Clone, Debug, PartialEq)]
pub struct OrthogonalFrame {
    matrix: Matrix,
    complement: Vec<Vec<f64>>,
}

impl OrthogonalFrame {
    pub fn for_vector(v: &BallVector) -> Result<Self> {
        let complement = orthonormal_complement(v)?;
        let n = v.dim();
        let r = v.norm();
        let mut matrix = Matrix::zeros(n + 1, n + 1);
        matrix[(0, 0)] = FRAC_1_SQRT_2;
        matrix[(1, 0)] = -FRAC_1_SQRT_2;
        for k in 0..n {
            let c = v[k] / r * FRAC_1_SQRT_2;
            matrix[(0, k + 1)] = c;
            matrix[(1, k + 1)] = c;
        }
        for (j, u) in complement.iter().enumerate() {
            for k in 0..n {
                matrix[(j + 2, k + 1)] = u[k];
            }
        }
        Ok(OrthogonalFrame { matrix, complement })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn complement(&self) -> &[Vec<f64>] {
        &self.complement
    }

    /// `Oᵀ diag(d) O`.
    pub fn reconstruct(&self, d: &[f64]) -> SymmetricMatrix {
        crate::boost::reconstruct_from_frame(&self.matrix, d)
    }
}

/// Orthonormal basis of `v⟂` by Gram–Schmidt.
///
/// Seeds are the standard basis vectors `e_i`, `i ≠ k`, where `k` indexes the
/// largest-magnitude component of `v` (lowest index on ties). Each seed is
/// orthogonalized in index order against `v̂` and the vectors already
/// accepted, then normalized.
pub fn orthonormal_complement(v: &BallVector) -> Result<Vec<Vec<f64>>> {
    if v.is_zero() {
        return Err(Error::DegenerateDirection);
    }
    let n = v.dim();
    let r = v.norm();
    let unit: Vec<f64> = v.iter().map(|x| x / r).collect();
    let mut pivot = 0;
    for i in 1..n {
        if v[i].abs() > v[pivot].abs() {
            pivot = i;
        }
    }

    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(n - 1);
    for seed in (0..n).filter(|&i| i != pivot) {
        let mut u = vec![0.0; n];
        u[seed] = 1.0;
        for prev in std::iter::once(&unit).chain(basis.iter()) {
            let c = dot(&u, prev);
            u.iter_mut().zip(prev).for_each(|(a, b)| *a -= c * b);
        }
        let len = dot(&u, &u).sqrt();
        u.iter_mut().for_each(|a| *a /= len);
        basis.push(u);
    }
    Ok(basis)
}

/// A Möbius matrix with its generating velocity.
#[derive(Clone, Debug, PartialEq)]
pub struct MobiusMatrix {
    n: usize,
    matrix: SymmetricMatrix,
    generator: BallVector,
}

impl MobiusMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &SymmetricMatrix {
        &self.matrix
    }

    pub fn generator(&self) -> &BallVector {
        &self.generator
    }
}

fn check_mobius_args(n: usize, v: &BallVector) -> Result<()> {
    if n < 3 {
        return Err(Error::MobiusDimension { n });
    }
    if v.dim() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: v.dim(),
        });
    }
    Ok(())
}

/// `(n − 3) + 4γ_v²`, which is both the normalizer of `μ_{n,v}` and
/// `tr B(v)²`.
pub fn squared_boost_trace(v: &BallVector) -> f64 {
    let g = v.gamma().value();
    (v.dim() as f64 - 3.0) + 4.0 * g * g
}

/// The Möbius matrix `μ_{n,v}` built entrywise.
pub fn mobius(n: usize, v: &BallVector) -> Result<MobiusMatrix> {
    check_mobius_args(n, v)?;
    let g = v.gamma().value();
    let g2 = g * g;
    let prefactor = 2.0 * g2 / ((n as f64 - 3.0) + 4.0 * g2);
    let h = 1.0 / (2.0 * g2);
    let matrix = SymmetricMatrix::from_fn(n + 1, |i, j| {
        let raw = match (i, j) {
            (0, 0) => 1.0 - h,
            (i, 0) => v[i - 1],
            (i, j) => {
                let outer = v[i - 1] * v[j - 1];
                if i == j {
                    h + outer
                } else {
                    outer
                }
            }
        };
        prefactor * raw
    });
    Ok(MobiusMatrix {
        n,
        matrix,
        generator: v.clone(),
    })
}

/// `μ_{n,v} = O_vᵀ D_v O_v` with
/// `D_v = diag(λ², 1/λ², 1, …, 1) / ((n−3) + 4γ²)`.
pub fn mobius_diag(n: usize, v: &BallVector) -> Result<(OrthogonalFrame, Vec<f64>)> {
    check_mobius_args(n, v)?;
    let frame = OrthogonalFrame::for_vector(v)?;
    let scale = 1.0 / squared_boost_trace(v);
    let l2 = boost_eigenvalue(v).powi(2);
    let mut d = vec![scale; n + 1];
    d[0] = l2 * scale;
    d[1] = scale / l2;
    Ok((frame, d))
}

/// `μ_{n,v}` as the normalized square `B(v)² / tr B(v)²`.
pub fn mobius_from_boost(n: usize, v: &BallVector) -> Result<MobiusMatrix> {
    check_mobius_args(n, v)?;
    let matrix = boost(v).matrix().square().normalized();
    Ok(MobiusMatrix {
        n,
        matrix,
        generator: v.clone(),
    })
}

/// `μ_{n,v}` as the normalized boost `B(2⊗v) / tr B(2⊗v)`.
pub fn mobius_from_double_boost(n: usize, v: &BallVector) -> Result<MobiusMatrix> {
    check_mobius_args(n, v)?;
    let matrix = boost(&double(v)?).matrix().normalized();
    Ok(MobiusMatrix {
        n,
        matrix,
        generator: v.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{det, sym_eigen};

    fn bv(c: &[f64]) -> BallVector {
        BallVector::new(c.to_vec()).unwrap()
    }

    #[test]
    fn mobius_at_zero_is_maximally_mixed() {
        let m = mobius(3, &BallVector::zero(3)).unwrap();
        assert_eq!(m.matrix(), &SymmetricMatrix::diagonal(&[0.25; 4]));
        assert!((det(m.matrix()).unwrap() - 1.0 / 256.0).abs() < 1e-18);
    }

    #[test]
    fn mobius_rejects_small_n() {
        assert_eq!(
            mobius(2, &bv(&[0.1, 0.2])).unwrap_err(),
            Error::MobiusDimension { n: 2 }
        );
        assert_eq!(
            mobius(4, &bv(&[0.1, 0.2, 0.0])).unwrap_err(),
            Error::DimensionMismatch { left: 4, right: 3 }
        );
    }

    #[test]
    fn mobius_trace_and_det() {
        for (n, c) in [(3, vec![0.3, -0.4, 0.5]), (5, vec![0.1, 0.2, 0.3, 0.4, -0.5])] {
            let v = bv(&c);
            let m = mobius(n, &v).unwrap();
            assert!((m.matrix().trace() - 1.0).abs() < 1e-12);
            let r2 = v.norm_sq();
            let nf = n as f64;
            let expected = ((1.0 - r2) / ((nf + 1.0) - (nf - 3.0) * r2)).powi(n as i32 + 1);
            let got = det(m.matrix()).unwrap();
            assert!((got - expected).abs() <= 1e-9 * expected);
        }
    }

    #[test]
    fn complement_of_axis_vector() {
        let u = orthonormal_complement(&bv(&[0.5, 0.0, 0.0])).unwrap();
        assert_eq!(u, vec![vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0]]);
    }

    #[test]
    fn complement_is_orthonormal() {
        let v = bv(&[0.1, -0.3, 0.05, 0.4, 0.2]);
        let u = orthonormal_complement(&v).unwrap();
        assert_eq!(u.len(), 4);
        for i in 0..u.len() {
            assert!(dot(&u[i], &v).abs() < 1e-12);
            for j in 0..u.len() {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((dot(&u[i], &u[j]) - expected).abs() < 1e-12);
            }
        }
        assert_eq!(u, orthonormal_complement(&v).unwrap());
        assert_eq!(
            orthonormal_complement(&BallVector::zero(3)).unwrap_err(),
            Error::DegenerateDirection
        );
    }

    #[test]
    fn pivot_ties_take_lowest_index() {
        // |v_0| = |v_1|: e_0 is dropped, seeds are e_1, e_2
        let u = orthonormal_complement(&bv(&[0.3, -0.3, 0.0])).unwrap();
        assert!((u[0][0] - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((u[0][1] - FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!(u[1], vec![0.0, 0.0, 1.0]);
    }

    #[test]
    fn diagonalization_reconstructs() {
        let v = bv(&[0.6, 0.0, 0.0]);
        let (frame, d) = mobius_diag(3, &v).unwrap();
        // λ = 2 ⇒ λ² = 4
        assert!((d[0] * squared_boost_trace(&v) - 4.0).abs() < 1e-14);
        assert!((d.iter().sum::<f64>() - 1.0).abs() < 1e-14);

        let v = bv(&[0.2, -0.5, 0.3, 0.1]);
        let (frame2, d2) = mobius_diag(4, &v).unwrap();
        let m = mobius(4, &v).unwrap();
        assert!(frame2.reconstruct(&d2).max_abs_diff(m.matrix()) < 1e-10);
        let row0 = frame2.matrix().row(0);
        assert!((row0[0] - FRAC_1_SQRT_2).abs() < 1e-15);
        let row1 = frame2.matrix().row(1);
        assert!((row1[0] + FRAC_1_SQRT_2).abs() < 1e-15);
        for k in 0..4 {
            let c = v[k] / (2f64.sqrt() * v.norm());
            assert!((row0[k + 1] - c).abs() < 1e-15);
            assert!((row1[k + 1] - c).abs() < 1e-15);
        }
        assert!(frame.matrix().orthogonality_defect() < 1e-12);
        assert_eq!(mobius_diag(3, &BallVector::zero(3)).unwrap_err(), Error::DegenerateDirection);
    }

    #[test]
    fn spectrum_matches_eigensolver() {
        let v = bv(&[0.35, 0.1, -0.6]);
        let (_, mut d) = mobius_diag(3, &v).unwrap();
        d.sort_by(f64::total_cmp);
        let s = sym_eigen(mobius(3, &v).unwrap().matrix()).unwrap();
        for (a, b) in s.eigenvalues().iter().zip(&d) {
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn boost_paths_agree() {
        let n = 3;
        let z = BallVector::zero(n);
        assert!(mobius_from_boost(n, &z)
            .unwrap()
            .matrix()
            .max_abs_diff(&SymmetricMatrix::diagonal(&[0.25; 4]))
            < 1e-16);

        let v = bv(&[0.4, 0.3, -0.2]);
        let direct = mobius(n, &v).unwrap();
        let squared = mobius_from_boost(n, &v).unwrap();
        let doubled = mobius_from_double_boost(n, &v).unwrap();
        assert!(direct.matrix().max_abs_diff(squared.matrix()) < 1e-10);
        assert!(squared.matrix().max_abs_diff(doubled.matrix()) < 1e-10);
    }

    #[test]
    fn squared_boost_trace_value() {
        // γ = 1.25, n = 3 ⇒ 4γ² = 6.25
        let v = bv(&[0.6, 0.0, 0.0]);
        assert!((squared_boost_trace(&v) - 6.25).abs() < 1e-14);
        let tr = boost(&v).matrix().square().trace();
        assert!((tr - 6.25).abs() <= 1e-11 * 6.25);
    }
}
