//! Rotation-free Lorentz transformations and the two gyrogroup products on
//! the set of boosts.
//!
//! `B(v)` is the symmetric positive definite `(n+1)×(n+1)` matrix
//!
//! ```text
//! ⎡ γ      γvᵀ              ⎤
//! ⎣ γv     I + γ²/(1+γ) vvᵀ ⎦
//! ```
//!
//! and `v ↦ B(v)` carries Einstein addition to `P ⋆ Q = (P Q² P)^{1/2}`.

use crate::error::{Error, Result};
use crate::gyrogroup::{BallVector, GammaFactor};
use crate::linalg::{sqrt_psd, Matrix, SymmetricMatrix};
use crate::mobius::OrthogonalFrame;

/// A Lorentz boost together with the velocity that generates it.
#[derive(Clone, Debug, PartialEq)]
pub struct LorentzBoost {
    matrix: SymmetricMatrix,
    generator: BallVector,
}

impl LorentzBoost {
    /// Wraps `matrix` as the boost of `generator` if it matches `B(generator)`
    /// entrywise to within `tol`.
    pub fn from_matrix(matrix: SymmetricMatrix, generator: BallVector, tol: f64) -> Result<Self> {
        let expected = boost(&generator);
        let deviation = matrix.max_abs_diff(&expected.matrix);
        if deviation > tol {
            return Err(Error::NotABoost { deviation });
        }
        Ok(LorentzBoost { matrix, generator })
    }

    pub fn matrix(&self) -> &SymmetricMatrix {
        &self.matrix
    }

    pub fn generator(&self) -> &BallVector {
        &self.generator
    }

    /// Spatial dimension `n`; the matrix is `(n+1)×(n+1)`.
    pub fn n(&self) -> usize {
        self.generator.dim()
    }

    /// `‖Bᵀ η B − η‖_max` with `η = diag(−1, 1, …, 1)`.
    pub fn lorentz_defect(&self) -> f64 {
        let b = self.matrix.to_matrix();
        let eta = minkowski_metric(self.matrix.dim()).to_matrix();
        let preserved = &(&b.transpose() * &eta) * &b;
        preserved.max_abs_diff(&eta)
    }
}

/// `η = diag(−1, 1, …, 1)`, the matrix of the Lorentz form.
pub fn minkowski_metric(dim: usize) -> SymmetricMatrix {
    SymmetricMatrix::from_fn(dim, |i, j| match (i, j) {
        (0, 0) => -1.0,
        (i, j) if i == j => 1.0,
        _ => 0.0,
    })
}

/// The boost matrix `B(v)`.
pub fn boost(v: &BallVector) -> LorentzBoost {
    let g = v.gamma().value();
    let k = g * g / (1.0 + g);
    let matrix = SymmetricMatrix::from_fn(v.dim() + 1, |i, j| match (i, j) {
        (0, 0) => g,
        (i, 0) => g * v[i - 1],
        (i, j) => {
            let outer = k * v[i - 1] * v[j - 1];
            if i == j {
                1.0 + outer
            } else {
                outer
            }
        }
    });
    LorentzBoost {
        matrix,
        generator: v.clone(),
    }
}

/// Applies `B(u)` to the four-velocity `(γ_v, γ_v v)` and reads off
/// `(γ_{u⊕v}, u⊕v)`.
pub fn boost_apply(u: &BallVector, v: &BallVector) -> Result<(GammaFactor, BallVector)> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    let gv = v.gamma().value();
    let four_velocity: Vec<f64> = std::iter::once(gv).chain(v.iter().map(|x| gv * x)).collect();
    let image = boost(u).matrix.mul_vec(&four_velocity)?;
    let g = image[0];
    let velocity = BallVector::new(image[1..].iter().map(|x| x / g).collect())?;
    Ok((GammaFactor::from_raw(g), velocity))
}

fn check_same_dim(p: &LorentzBoost, q: &LorentzBoost) -> Result<()> {
    if p.matrix.dim() != q.matrix.dim() {
        return Err(Error::DimensionMismatch {
            left: p.n(),
            right: q.n(),
        });
    }
    Ok(())
}

/// `P ⋆ Q = (P Q² P)^{1/2}`; `B(u) ⋆ B(v) = B(u ⊕ v)`.
pub fn star(p: &LorentzBoost, q: &LorentzBoost) -> Result<SymmetricMatrix> {
    check_same_dim(p, q)?;
    sqrt_psd(&p.matrix.sandwich(&q.matrix.square()))
}

/// `P ∗ Q = P^{1/2} Q P^{1/2}`; `B(u)² ∗ B(v)² = B(u ⊕ v)²`.
pub fn ast(p: &LorentzBoost, q: &LorentzBoost) -> Result<SymmetricMatrix> {
    check_same_dim(p, q)?;
    let root = sqrt_psd(&p.matrix)?;
    Ok(root.sandwich(&q.matrix))
}

/// `λ = √((1 + ‖v‖)/(1 − ‖v‖))`, the largest eigenvalue of `B(v)`.
pub fn boost_eigenvalue(v: &BallVector) -> f64 {
    let r = v.norm();
    ((1.0 + r) / (1.0 - r)).sqrt()
}

/// `B(v) = Oᵀ diag(λ, 1/λ, 1, …, 1) O`; the frame is undefined at `v = 0`.
pub fn boost_diag(v: &BallVector) -> Result<(OrthogonalFrame, Vec<f64>)> {
    let frame = OrthogonalFrame::for_vector(v)?;
    let lambda = boost_eigenvalue(v);
    let mut d = vec![1.0; v.dim() + 1];
    d[0] = lambda;
    d[1] = 1.0 / lambda;
    Ok((frame, d))
}

/// `L⟨(s, x), (t, y)⟩ = −st + Σ xᵢyᵢ`.
pub fn lorentz_form(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.is_empty() {
        return Err(Error::EmptyVector);
    }
    Ok(-x[0] * y[0] + x[1..].iter().zip(&y[1..]).map(|(a, b)| a * b).sum::<f64>())
}

/// `Oᵀ diag(d) O`.
pub fn reconstruct_from_frame(o: &Matrix, d: &[f64]) -> SymmetricMatrix {
    SymmetricMatrix::diagonal(d).congruence(&o.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gyrogroup::{double, einstein_add, gamma_add, half};
    use crate::linalg::det;

    fn bv(c: &[f64]) -> BallVector {
        BallVector::new(c.to_vec()).unwrap()
    }

    #[test]
    fn boost_at_zero_is_identity() {
        assert_eq!(boost(&BallVector::zero(3)).matrix(), &SymmetricMatrix::identity(4));
    }

    #[test]
    fn boost_entries() {
        let b = boost(&bv(&[0.6, 0.0, 0.0]));
        assert!((b.matrix()[(0, 0)] - 1.25).abs() < 1e-15);
        assert!((b.matrix()[(0, 1)] - 0.75).abs() < 1e-15);
        // 1 + γ²/(1+γ)·0.36 = 1 + (25/16)/(9/4)·0.36 = 1.25
        assert!((b.matrix()[(1, 1)] - 1.25).abs() < 1e-15);
        assert_eq!(b.matrix()[(2, 2)], 1.0);
    }

    #[test]
    fn boost_trace_formula() {
        let v = bv(&[0.2, -0.4, 0.3, 0.1]);
        let g = v.gamma().value();
        let tr = boost(&v).matrix().trace();
        assert!((tr - (2.0 * g + 3.0)).abs() < 1e-14);
    }

    #[test]
    fn boost_invariants() {
        let v = bv(&[0.2, -0.7, 0.3]);
        let b = boost(&v);
        assert!(b.lorentz_defect() < 1e-14);
        assert!((det(b.matrix()).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn boost_apply_examples() {
        let v = bv(&[0.1, 0.2, -0.3]);
        let z = BallVector::zero(3);
        let (g, w) = boost_apply(&z, &v).unwrap();
        assert!((g.value() - v.gamma().value()).abs() < 1e-15);
        assert!(w.max_abs_diff(&v) < 1e-15);
        let (g, w) = boost_apply(&v, &z).unwrap();
        assert!((g.value() - v.gamma().value()).abs() < 1e-15);
        assert!(w.max_abs_diff(&v) < 1e-15);

        let h = bv(&[0.5, 0.0, 0.0]);
        let (g, w) = boost_apply(&h, &h).unwrap();
        assert!((g.value() - 5.0 / 3.0).abs() < 1e-14);
        assert!((w[0] - 0.8).abs() < 1e-15);
    }

    #[test]
    fn boost_apply_agrees_with_addition() {
        let u = bv(&[0.4, -0.3, 0.5]);
        let v = bv(&[-0.2, 0.6, 0.1]);
        let (g, w) = boost_apply(&u, &v).unwrap();
        let expected = gamma_add(&u, &v).unwrap().value();
        assert!((g.value() - expected).abs() <= 1e-11 * expected);
        assert!(w.max_abs_diff(&einstein_add(&u, &v).unwrap()) < 1e-10);
    }

    #[test]
    fn star_examples() {
        let v = bv(&[0.3, 0.1, -0.6]);
        let bvv = boost(&v);
        let id = boost(&BallVector::zero(3));
        assert!(star(&id, &bvv).unwrap().max_abs_diff(bvv.matrix()) < 1e-12);
        let sq = star(&bvv, &bvv).unwrap();
        assert!(sq.max_abs_diff(&bvv.matrix().square()) < 1e-9);
        assert!(sq.max_abs_diff(boost(&double(&v).unwrap()).matrix()) < 1e-9);

        let u = bv(&[-0.5, 0.2, 0.4]);
        let prod = star(&boost(&u), &bvv).unwrap();
        let sum = einstein_add(&u, &v).unwrap();
        assert!(prod.max_abs_diff(boost(&sum).matrix()) < 1e-9);
        assert!(LorentzBoost::from_matrix(prod, sum, 1e-9).is_ok());
    }

    #[test]
    fn from_matrix_rejects_mismatch() {
        let v = bv(&[0.3, 0.0]);
        let err = LorentzBoost::from_matrix(SymmetricMatrix::identity(3), v, 1e-9);
        assert!(matches!(err, Err(Error::NotABoost { .. })));
    }

    #[test]
    fn ast_examples() {
        let v = bv(&[0.3, 0.1, -0.6]);
        let bvv = boost(&v);
        let id = boost(&BallVector::zero(3));
        assert!(ast(&id, &bvv).unwrap().max_abs_diff(bvv.matrix()) < 1e-12);
        assert!(ast(&bvv, &bvv).unwrap().max_abs_diff(&bvv.matrix().square()) < 1e-10);

        // B(u)² ∗ B(v)² = B(u⊕v)², with B(w)² = B(2⊗w)
        let u = bv(&[-0.5, 0.2, 0.4]);
        let lhs = ast(&boost(&double(&u).unwrap()), &boost(&double(&v).unwrap())).unwrap();
        let rhs = boost(&double(&einstein_add(&u, &v).unwrap()).unwrap());
        assert!(lhs.max_abs_diff(rhs.matrix()) < 1e-9);
    }

    #[test]
    fn half_boost_is_root() {
        let v = bv(&[0.7, -0.2, 0.1]);
        let root = sqrt_psd(boost(&v).matrix()).unwrap();
        assert!(root.max_abs_diff(boost(&half(&v)).matrix()) < 1e-9);
    }

    #[test]
    fn boost_diag_examples() {
        let v = bv(&[0.6, 0.0, 0.0]);
        let (frame, d) = boost_diag(&v).unwrap();
        assert!((d[0] - 2.0).abs() < 1e-15);
        assert!((d.iter().product::<f64>() - 1.0).abs() < 1e-15);
        let rebuilt = reconstruct_from_frame(frame.matrix(), &d);
        assert!(rebuilt.max_abs_diff(boost(&v).matrix()) < 1e-10);

        let w = bv(&[0.3, -0.4, 0.2, 0.5]);
        let (frame, d) = boost_diag(&w).unwrap();
        assert!(frame.matrix().orthogonality_defect() < 1e-12);
        let rebuilt = reconstruct_from_frame(frame.matrix(), &d);
        assert!(rebuilt.max_abs_diff(boost(&w).matrix()) < 1e-10);

        assert_eq!(
            boost_diag(&BallVector::zero(3)).unwrap_err(),
            Error::DegenerateDirection
        );
    }

    #[test]
    fn lorentz_form_examples() {
        assert_eq!(lorentz_form(&[1.0, 0.0, 0.0], &[1.0, 0.0, 0.0]).unwrap(), -1.0);
        assert_eq!(lorentz_form(&[0.0, 1.0, 0.0], &[0.0, 1.0, 0.0]).unwrap(), 1.0);
        let b = boost(&bv(&[0.5, -0.3]));
        let x = [0.3, -1.2, 2.0];
        let y = [1.5, 0.4, -0.7];
        let bx = b.matrix().mul_vec(&x).unwrap();
        let by = b.matrix().mul_vec(&y).unwrap();
        let before = lorentz_form(&x, &y).unwrap();
        let after = lorentz_form(&bx, &by).unwrap();
        assert!((before - after).abs() < 1e-13);
        assert!(lorentz_form(&[1.0], &[1.0, 2.0]).is_err());
    }
}
