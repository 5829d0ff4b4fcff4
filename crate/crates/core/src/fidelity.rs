//! Fidelity `F(ρ, σ) = tr √(ρ^{1/2} σ ρ^{1/2})` of real density matrices,
//! with closed forms for normalized boosts and Möbius matrices in terms of
//! Lorentz factors, and the qubit (`n = 3`) case.
//!
//! The closed forms follow from three facts: `F(αA, βB) = √(αβ) F(A, B)`,
//! `B(v)^{1/2} = B((1/2)⊗v)`, and `tr (B(u) B(v)² B(u))^{1/2} = 2γ_{u⊕v} + n − 1`.

use num_complex::Complex64;

use crate::boost::boost;
use crate::error::{Error, Result};
use crate::gyrogroup::{gamma_add, BallVector, GammaFactor};
use crate::linalg::{sqrt_psd, Hermitian2, SymmetricMatrix};

fn check_dims(u: &BallVector, v: &BallVector, n: usize) -> Result<()> {
    for x in [u, v] {
        if x.dim() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: x.dim(),
            });
        }
    }
    Ok(())
}

/// Spectral fidelity of two positive semidefinite matrices.
///
/// Trace one is not required; for general PSD inputs this is still
/// `tr √(ρ^{1/2} σ ρ^{1/2})`.
pub fn fidelity_spectral(rho: &SymmetricMatrix, sigma: &SymmetricMatrix) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: sigma.dim(),
        });
    }
    let root = sqrt_psd(rho)?;
    Ok(sqrt_psd(&root.sandwich(sigma))?.trace())
}

/// The boost `B(v)` scaled to unit trace.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalizedBoost {
    matrix: SymmetricMatrix,
    generator: BallVector,
}

impl NormalizedBoost {
    pub fn new(v: &BallVector) -> Self {
        NormalizedBoost {
            matrix: boost(v).matrix().normalized(),
            generator: v.clone(),
        }
    }

    pub fn matrix(&self) -> &SymmetricMatrix {
        &self.matrix
    }

    pub fn generator(&self) -> &BallVector {
        &self.generator
    }
}

/// Lorentz factor of `w = (1/2)⊗u ⊕ (1/2)⊗v`:
///
/// ```text
/// γ_w = ((1+γ_u)(1+γ_v) + γ_u γ_v uᵀv) / (2 √((1+γ_u)(1+γ_v)))
/// ```
///
/// using `γ_{(1/2)⊗v} = √((1+γ_v)/2)` and the gamma identity.
pub fn gamma_midpoint(u: &BallVector, v: &BallVector) -> Result<GammaFactor> {
    check_dims(u, v, u.dim())?;
    let gu = u.gamma().value();
    let gv = v.gamma().value();
    let p = (1.0 + gu) * (1.0 + gv);
    Ok(GammaFactor::from_raw((p + gu * gv * u.dot(v)) / (2.0 * p.sqrt())))
}

/// `F(B̂(u), B̂(v)) = (2γ_w + n − 1) / √((2γ_u + n − 1)(2γ_v + n − 1))` with
/// `w = (1/2)⊗u ⊕ (1/2)⊗v`.
pub fn fidelity_boost_closed(u: &BallVector, v: &BallVector, n: usize) -> Result<f64> {
    check_dims(u, v, n)?;
    let m = n as f64 - 1.0;
    let gw = gamma_midpoint(u, v)?.value();
    let gu = u.gamma().value();
    let gv = v.gamma().value();
    Ok((2.0 * gw + m) / ((2.0 * gu + m) * (2.0 * gv + m)).sqrt())
}

/// `tr (B(u) B(v)² B(u))^{1/2} = 2γ_{u⊕v} + n − 1`.
pub fn trace_sqrt_product(u: &BallVector, v: &BallVector) -> Result<f64> {
    let g = gamma_add(u, v)?.value();
    Ok(2.0 * g + u.dim() as f64 - 1.0)
}

/// `tr (B(u) B(v)² B(u))^{1/2}` evaluated through explicit matrices.
pub fn trace_sqrt_product_matrix(u: &BallVector, v: &BallVector) -> Result<f64> {
    check_dims(u, v, u.dim())?;
    let bu = boost(u);
    let bv2 = boost(v).matrix().square();
    Ok(sqrt_psd(&bu.matrix().sandwich(&bv2))?.trace())
}

/// `F(μ_{n,u}, μ_{n,v}) = (2γ_{u⊕v} + n − 1) / √((4γ_u² + n − 3)(4γ_v² + n − 3))`.
pub fn fidelity_mobius_closed(u: &BallVector, v: &BallVector, n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::MobiusDimension { n });
    }
    check_dims(u, v, n)?;
    let nf = n as f64;
    let g = gamma_add(u, v)?.value();
    let gu = u.gamma().value();
    let gv = v.gamma().value();
    let du = 4.0 * gu * gu + nf - 3.0;
    let dv = 4.0 * gv * gv + nf - 3.0;
    Ok((2.0 * g + nf - 1.0) / (du * dv).sqrt())
}

/// A qubit mixed state `ρ_v = (1/2)(I + v₁σ_x + v₂σ_y + v₃σ_z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct QubitDensity {
    entries: Hermitian2,
    bloch: BallVector,
}

impl QubitDensity {
    pub fn entries(&self) -> &Hermitian2 {
        &self.entries
    }

    pub fn bloch(&self) -> &BallVector {
        &self.bloch
    }
}

/// `ρ_v = (1/2) [[1 + v₃, v₁ − i v₂], [v₁ + i v₂, 1 − v₃]]`.
pub fn qubit_density(v: &BallVector) -> Result<QubitDensity> {
    if v.dim() != 3 {
        return Err(Error::DimensionMismatch {
            left: 3,
            right: v.dim(),
        });
    }
    let entries = Hermitian2::new(
        0.5 * (1.0 + v[2]),
        Complex64::new(0.5 * v[0], -0.5 * v[1]),
        0.5 * (1.0 - v[2]),
    );
    Ok(QubitDensity {
        entries,
        bloch: v.clone(),
    })
}

/// `F(ρ_u, ρ_v)² = tr(ρσ) + 2√(det ρ · det σ)`, from the explicit 2×2
/// matrices with determinants taken as eigenvalue products.
pub fn qubit_fidelity_sq(u: &BallVector, v: &BallVector) -> Result<f64> {
    let rho = qubit_density(u)?;
    let sigma = qubit_density(v)?;
    let det = |m: &Hermitian2| {
        let [a, b] = m.eigenvalues();
        a * b
    };
    let overlap = rho.entries.trace_product(&sigma.entries);
    Ok(overlap + 2.0 * (det(&rho.entries) * det(&sigma.entries)).max(0.0).sqrt())
}

/// `F(ρ_u, ρ_v)² = (1 + γ_{u⊕v}) / (2γ_u γ_v)`.
pub fn qubit_fidelity_sq_gamma(u: &BallVector, v: &BallVector) -> Result<f64> {
    check_dims(u, v, 3)?;
    let g = gamma_add(u, v)?.value();
    Ok((1.0 + g) / (2.0 * u.gamma().value() * v.gamma().value()))
}

/// `F(ρ_u, ρ_v)² = (1/2)(1 + uᵀv + √(1 − ‖u‖²) √(1 − ‖v‖²))`.
pub fn qubit_fidelity_sq_bloch(u: &BallVector, v: &BallVector) -> Result<f64> {
    check_dims(u, v, 3)?;
    Ok(0.5 * (1.0 + u.dot(v) + (1.0 - u.norm_sq()).sqrt() * (1.0 - v.norm_sq()).sqrt()))
}

/// `F(ρ_u, ρ_v)` by the spectral definition on the complex 2×2 matrices.
pub fn qubit_fidelity_spectral(u: &BallVector, v: &BallVector) -> Result<f64> {
    let rho = qubit_density(u)?;
    let sigma = qubit_density(v)?;
    let root = rho.entries.sqrt_psd()?;
    let inner = root.sandwich(&sigma.entries);
    let [a, b] = inner.eigenvalues();
    Ok(a.max(0.0).sqrt() + b.max(0.0).sqrt())
}
