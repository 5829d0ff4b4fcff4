use num_complex::Complex64;

use crate::error::{Error, Result};

/// A 2×2 complex Hermitian matrix `[[a, b], [b̄, d]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Hermitian2 {
    pub a: f64,
    pub b: Complex64,
    pub d: f64,
}

type Full2 = [[Complex64; 2]; 2];

fn mul2(x: &Full2, y: &Full2) -> Full2 {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    out
}

impl Hermitian2 {
    pub fn new(a: f64, b: Complex64, d: f64) -> Self {
        Hermitian2 { a, b, d }
    }

    pub fn identity() -> Self {
        Hermitian2::new(1.0, Complex64::new(0.0, 0.0), 1.0)
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        match (i, j) {
            (0, 0) => Complex64::new(self.a, 0.0),
            (0, 1) => self.b,
            (1, 0) => self.b.conj(),
            (1, 1) => Complex64::new(self.d, 0.0),
            _ => panic!("index ({i}, {j}) out of bounds for a 2×2 matrix"),
        }
    }

    fn full(&self) -> Full2 {
        [[self.entry(0, 0), self.entry(0, 1)], [self.entry(1, 0), self.entry(1, 1)]]
    }

    fn from_full(m: &Full2) -> Self {
        Hermitian2 {
            a: m[0][0].re,
            b: 0.5 * (m[0][1] + m[1][0].conj()),
            d: m[1][1].re,
        }
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b.norm_sqr()
    }

    /// Eigenvalues by the quadratic formula, ascending.
    pub fn eigenvalues(&self) -> [f64; 2] {
        let mean = 0.5 * (self.a + self.d);
        let half_gap = 0.5 * (self.a - self.d);
        let r = half_gap.hypot(self.b.norm());
        [mean - r, mean + r]
    }

    /// `tr(XY)`, real for Hermitian `X` and `Y`.
    pub fn trace_product(&self, other: &Hermitian2) -> f64 {
        self.a * other.a + self.d * other.d + 2.0 * (self.b * other.b.conj()).re
    }

    /// `X · M · X`, Hermitian whenever `X` and `M` are.
    pub fn sandwich(&self, middle: &Hermitian2) -> Hermitian2 {
        let x = self.full();
        Hermitian2::from_full(&mul2(&mul2(&x, &middle.full()), &x))
    }

    /// Principal square root of a positive semidefinite 2×2 matrix,
    /// `(A + √det A · I) / √(tr A + 2√det A)`.
    pub fn sqrt_psd(&self) -> Result<Hermitian2> {
        let [low, _] = self.eigenvalues();
        if low < -super::TOL_EIG {
            return Err(Error::NotPositiveSemidefinite { min_eigenvalue: low });
        }
        let s = self.det().max(0.0).sqrt();
        let t = (self.trace() + 2.0 * s).sqrt();
        if t == 0.0 {
            return Ok(*self);
        }
        Ok(Hermitian2 {
            a: (self.a + s) / t,
            b: self.b / t,
            d: (self.d + s) / t,
        })
    }

    pub fn max_abs_diff(&self, other: &Hermitian2) -> f64 {
        (self.a - other.a)
            .abs()
            .max((self.d - other.d).abs())
            .max((self.b - other.b).norm())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_x_eigenvalues() {
        let x = Hermitian2::new(0.0, Complex64::new(1.0, 0.0), 0.0);
        assert_eq!(x.eigenvalues(), [-1.0, 1.0]);
        let y = Hermitian2::new(0.0, Complex64::new(0.0, -1.0), 0.0);
        assert_eq!(y.eigenvalues(), [-1.0, 1.0]);
    }

    #[test]
    fn eigenvalues_match_trace_and_det() {
        let m = Hermitian2::new(0.7, Complex64::new(0.1, -0.2), 0.3);
        let [l0, l1] = m.eigenvalues();
        assert!((l0 + l1 - m.trace()).abs() < 1e-15);
        assert!((l0 * l1 - m.det()).abs() < 1e-15);
    }

    #[test]
    fn sqrt_squares_back() {
        let m = Hermitian2::new(0.7, Complex64::new(0.1, -0.2), 0.3);
        let r = m.sqrt_psd().unwrap();
        let back = r.sandwich(&Hermitian2::identity());
        assert!(back.max_abs_diff(&m) < 1e-15);
    }

    #[test]
    fn trace_product_matches_full_product() {
        let x = Hermitian2::new(0.6, Complex64::new(0.2, 0.1), 0.4);
        let y = Hermitian2::new(0.3, Complex64::new(-0.1, 0.25), 0.7);
        let p = mul2(&x.full(), &y.full());
        let tr = p[0][0] + p[1][1];
        assert!(tr.im.abs() < 1e-16);
        assert!((tr.re - x.trace_product(&y)).abs() < 1e-16);
    }
}
