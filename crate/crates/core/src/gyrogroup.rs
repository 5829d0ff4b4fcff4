//! Einstein velocity addition on the open unit ball `B_n`.
//!
//! Velocities are measured in units of the speed of light, so admissible
//! vectors satisfy `‖v‖ < 1`. The operation `⊕` is neither associative nor
//! commutative; its failure to be either is captured by the gyration
//! `gyr[u, v]`, an orthogonal map of the ball.

use std::fmt;
use std::ops::{Deref, Neg};

use crate::error::{Error, Result};
use crate::linalg::{dot, norm};

/// Ball membership margin: vectors with `‖v‖ > 1 − EPS_BALL` are rejected.
pub const EPS_BALL: f64 = 1e-12;

/// An admissible velocity, a point of the open unit ball.
#[derive(Clone, PartialEq)]
pub struct BallVector(Vec<f64>);

impl BallVector {
    pub fn new(components: Vec<f64>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyVector);
        }
        if let Some(index) = components.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        let r = norm(&components);
        if r > 1.0 - EPS_BALL {
            return Err(Error::BallViolation { norm: r, eps: EPS_BALL });
        }
        Ok(BallVector(components))
    }

    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "ball dimension must be at least 1");
        BallVector(vec![0.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    pub fn norm(&self) -> f64 {
        norm(&self.0)
    }

    pub fn norm_sq(&self) -> f64 {
        dot(&self.0, &self.0)
    }

    pub fn dot(&self, other: &BallVector) -> f64 {
        dot(&self.0, &other.0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0.0)
    }

    /// `c · v` as a ball vector; fails if the result leaves the ball.
    pub fn scaled(&self, c: f64) -> Result<BallVector> {
        BallVector::new(self.0.iter().map(|x| c * x).collect())
    }

    /// Largest componentwise difference.
    pub fn max_abs_diff(&self, other: &BallVector) -> f64 {
        if self.dim() != other.dim() {
            return f64::INFINITY;
        }
        self.0
            .iter()
            .zip(&other.0)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn gamma(&self) -> GammaFactor {
        GammaFactor(1.0 / (1.0 - self.norm_sq()).sqrt())
    }
}

impl Deref for BallVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl Neg for &BallVector {
    type Output = BallVector;

    /// `⊖v`, which for Einstein addition is componentwise negation.
    fn neg(self) -> BallVector {
        BallVector(self.0.iter().map(|x| -x).collect())
    }
}

impl Neg for BallVector {
    type Output = BallVector;

    fn neg(self) -> BallVector {
        -&self
    }
}

impl fmt::Debug for BallVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

/// A Lorentz factor `γ ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct GammaFactor(f64);

impl GammaFactor {
    pub(crate) fn from_raw(value: f64) -> Self {
        GammaFactor(value)
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<GammaFactor> for f64 {
    fn from(g: GammaFactor) -> f64 {
        g.0
    }
}

fn check_dims(u: &BallVector, v: &BallVector) -> Result<()> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    Ok(())
}

/// `γ_v = 1/√(1 − ‖v‖²)`.
pub fn gamma(v: &BallVector) -> GammaFactor {
    v.gamma()
}

/// Einstein addition
/// `u ⊕ v = (u + v/γ_u + (γ_u/(1+γ_u)) (uᵀv) u) / (1 + uᵀv)`.
pub fn einstein_add(u: &BallVector, v: &BallVector) -> Result<BallVector> {
    check_dims(u, v)?;
    let gu = u.gamma().0;
    let uv = u.dot(v);
    let coeff_u = 1.0 + gu / (1.0 + gu) * uv;
    let scale = 1.0 / (1.0 + uv);
    BallVector::new(
        u.iter()
            .zip(v.iter())
            .map(|(a, b)| scale * (coeff_u * a + b / gu))
            .collect(),
    )
}

/// `⊖x ⊕ y`.
pub fn left_subtract(x: &BallVector, y: &BallVector) -> Result<BallVector> {
    einstein_add(&-x, y)
}

/// Thomas gyration `gyr[u, v]w`, computed as `⊖(u⊕v) ⊕ (u ⊕ (v ⊕ w))`.
pub fn gyration(u: &BallVector, v: &BallVector, w: &BallVector) -> Result<BallVector> {
    check_dims(u, v)?;
    check_dims(u, w)?;
    let uv = einstein_add(u, v)?;
    let u_vw = einstein_add(u, &einstein_add(v, w)?)?;
    left_subtract(&uv, &u_vw)
}

/// The unique `w` with `w ⊕ w = v`, namely `(γ_v / (1 + γ_v)) v`.
pub fn half(v: &BallVector) -> BallVector {
    let g = v.gamma().0;
    let c = g / (1.0 + g);
    BallVector(v.iter().map(|x| c * x).collect())
}

/// `2 ⊗ v = v ⊕ v`, which is `(2γ_v² / (2γ_v² − 1)) v`.
pub fn double(v: &BallVector) -> Result<BallVector> {
    einstein_add(v, v)
}

/// Gamma identity `γ_{u⊕v} = γ_u γ_v (1 + uᵀv)`.
pub fn gamma_add(u: &BallVector, v: &BallVector) -> Result<GammaFactor> {
    check_dims(u, v)?;
    Ok(GammaFactor(u.gamma().0 * v.gamma().0 * (1.0 + u.dot(v))))
}
