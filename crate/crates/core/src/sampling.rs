//! Deterministic random inputs for the verification suites.
//!
//! Every trial gets its own `ChaCha8Rng` seeded from `(seed, stream, trial)`,
//! so results never depend on the order in which trials run.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::gyrogroup::BallVector;
use crate::linalg::{sym_eigen, Matrix, SymmetricMatrix};

/// Radius cap for sampled velocities; keeps `γ ≤ 1/√(1 − 0.95²) ≈ 3.2`.
pub const R_MAX: f64 = 0.95;

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Per-trial generator derived from the run seed, a stream tag and the trial
/// index.
pub fn trial_rng(seed: u64, stream: u64, trial: u64) -> ChaCha8Rng {
    let mixed = splitmix64(seed ^ splitmix64(stream ^ splitmix64(trial)));
    ChaCha8Rng::seed_from_u64(mixed)
}

/// Uniform direction times radius `s^{1/n} · R_MAX`, `s ~ U[0, 1)`.
pub fn random_ball<R: Rng + ?Sized>(rng: &mut R, n: usize) -> BallVector {
    loop {
        let dir: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
        let len = dir.iter().map(|x| x * x).sum::<f64>().sqrt();
        if len == 0.0 {
            continue;
        }
        let s: f64 = rng.random();
        let r = s.powf(1.0 / n as f64) * R_MAX;
        let v = dir.into_iter().map(|x| x / len * r).collect();
        return BallVector::new(v).expect("sampled radius is below R_MAX");
    }
}

/// Vector with entries uniform in `[-1, 1)`.
pub fn random_vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.random_range(-1.0..1.0)).collect()
}

/// Symmetric matrix with lower-triangle entries uniform in `[-1, 1)`.
pub fn random_symmetric<R: Rng + ?Sized>(rng: &mut R, n: usize) -> SymmetricMatrix {
    SymmetricMatrix::from_fn(n, |_, _| rng.random_range(-1.0..1.0))
}

/// Orthogonal matrix taken from the eigenvectors of a random symmetric one.
pub fn random_orthogonal<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix {
    let a = random_symmetric(rng, n);
    sym_eigen(&a)
        .expect("Jacobi converges on bounded random matrices")
        .eigenvectors()
        .clone()
}

/// Scalar uniform in `(0, hi]`.
pub fn random_positive<R: Rng + ?Sized>(rng: &mut R, hi: f64) -> f64 {
    let u: f64 = rng.random();
    hi * (1.0 - u)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trial_rng_is_reproducible() {
        let a = random_ball(&mut trial_rng(42, 3, 7), 5);
        let b = random_ball(&mut trial_rng(42, 3, 7), 5);
        assert_eq!(a, b);
        let c = random_ball(&mut trial_rng(42, 3, 8), 5);
        assert_ne!(a, c);
    }

    #[test]
    fn sampled_vectors_stay_inside_cap() {
        let mut rng = trial_rng(1, 0, 0);
        for n in [1, 2, 3, 8] {
            for _ in 0..200 {
                assert!(random_ball(&mut rng, n).norm() <= R_MAX + 1e-15);
            }
        }
    }

    #[test]
    fn orthogonal_sample_is_orthogonal() {
        let o = random_orthogonal(&mut trial_rng(9, 9, 9), 6);
        assert!(o.orthogonality_defect() < 1e-12);
    }

    #[test]
    fn positive_scalars_in_range() {
        let mut rng = trial_rng(5, 0, 0);
        for _ in 0..1000 {
            let x = random_positive(&mut rng, 10.0);
            assert!(x > 0.0 && x <= 10.0);
        }
    }
}
