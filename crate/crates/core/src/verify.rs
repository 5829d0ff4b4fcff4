//! Randomized verification suites.
//!
//! Each suite draws seeded random velocities, evaluates every identity of its
//! module both in closed form and through an independent route (usually the
//! Jacobi spectral path), and reports the worst deviation seen per identity.

use serde::Serialize;

use crate::boost::{ast, boost, boost_apply, boost_diag, lorentz_form, star};
use crate::error::Result;
use crate::fidelity::{
    fidelity_boost_closed, fidelity_mobius_closed, fidelity_spectral, gamma_midpoint, qubit_fidelity_spectral,
    qubit_fidelity_sq, qubit_fidelity_sq_bloch, qubit_fidelity_sq_gamma, trace_sqrt_product,
    trace_sqrt_product_matrix, NormalizedBoost,
};
use crate::gyrogroup::{double, einstein_add, gamma, gamma_add, gyration, half, BallVector};
use crate::linalg::{det, dot, sqrt_psd, sym_eigen, SymmetricMatrix};
use crate::mobius::{mobius, mobius_diag, mobius_from_boost, mobius_from_double_boost, squared_boost_trace};
use crate::sampling::{random_ball, random_orthogonal, random_positive, random_vector, trial_rng};

pub const GYRO_DIMS: [usize; 4] = [2, 3, 5, 8];
pub const BOOST_DIMS: [usize; 3] = [2, 3, 5];
pub const MOBIUS_DIMS: [usize; 4] = [3, 4, 5, 8];
pub const FIDELITY_DIMS: [usize; 4] = [3, 4, 5, 8];

/// Componentwise tolerance for gyrogroup identities.
pub const TOL_GYRO: f64 = 1e-10;
/// Entrywise tolerance for identities that pass through a matrix square root.
pub const TOL_SQRT: f64 = 1e-9;
/// Entrywise tolerance for explicit reconstructions.
pub const TOL_RECON: f64 = 1e-10;
/// Orthogonality of computed frames.
pub const TOL_ORTHO: f64 = 1e-12;
/// Unit trace of Möbius matrices.
pub const TOL_TRACE: f64 = 1e-12;
/// Relative tolerance for the gamma identity and the midpoint formula.
pub const TOL_GAMMA_REL: f64 = 1e-11;
/// Fidelity closed forms against the spectral oracle.
pub const TOL_FIDELITY: f64 = 1e-9;
/// Threshold a documented deviation or a non-associativity witness must exceed.
pub const DEVIATION_THRESHOLD: f64 = 1e-3;
/// Max-norm separation above which two states count as distinct.
pub const DISTINCT_STATES: f64 = 1e-3;
/// Fidelity margin below one required of distinct states.
pub const DISTINCT_FIDELITY_GAP: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Gyro,
    Boost,
    Mobius,
    Fidelity,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Gyro => "gyro",
            Suite::Boost => "boost",
            Suite::Mobius => "mobius",
            Suite::Fidelity => "fidelity",
            Suite::All => "all",
        }
    }
}

/// How the worst observed value is judged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// Passes when the worst error is at most the tolerance.
    Bound,
    /// Passes when some trial exceeds the threshold.
    Witness,
    /// An uncorrected formula; passes when it misses the oracle by more than
    /// the threshold.
    DocumentedDeviation,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReportRecord {
    pub suite: &'static str,
    pub name: &'static str,
    pub trials: usize,
    pub max_error: f64,
    pub tolerance: f64,
    pub kind: CheckKind,
}

impl ReportRecord {
    pub fn pass(&self) -> bool {
        match self.kind {
            CheckKind::Bound => self.max_error <= self.tolerance,
            CheckKind::Witness | CheckKind::DocumentedDeviation => self.max_error > self.tolerance,
        }
    }

    pub fn status(&self) -> &'static str {
        match (self.pass(), self.kind) {
            (false, _) => "fail",
            (true, CheckKind::DocumentedDeviation) => "deviates as documented",
            (true, _) => "pass",
        }
    }
}

struct Check {
    name: &'static str,
    kind: CheckKind,
    tolerance: f64,
    trials: usize,
    worst: f64,
}

impl Check {
    fn new(name: &'static str, kind: CheckKind, tolerance: f64) -> Self {
        Check {
            name,
            kind,
            tolerance,
            trials: 0,
            worst: 0.0,
        }
    }

    fn bound(name: &'static str, tolerance: f64) -> Self {
        Check::new(name, CheckKind::Bound, tolerance)
    }

    fn observe(&mut self, x: f64) {
        self.trials += 1;
        if x.is_nan() || self.worst.is_nan() {
            self.worst = f64::NAN;
        } else if x > self.worst {
            self.worst = x;
        }
    }

    /// Errors count as NaN, which fails every kind of check.
    fn attempt(&mut self, f: impl FnOnce() -> Result<f64>) {
        self.observe(f().unwrap_or(f64::NAN));
    }

    fn finish(self, suite: &'static str) -> ReportRecord {
        ReportRecord {
            suite,
            name: self.name,
            trials: self.trials,
            max_error: self.worst,
            tolerance: self.tolerance,
            kind: self.kind,
        }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn stream(suite: u64, n: usize) -> u64 {
    suite * 1000 + n as u64
}

/// Runs one suite (or all of them) and returns one record per identity.
pub fn run(suite: Suite, trials: usize, seed: u64) -> Vec<ReportRecord> {
    match suite {
        Suite::Gyro => gyro_suite(trials, seed),
        Suite::Boost => boost_suite(trials, seed),
        Suite::Mobius => mobius_suite(trials, seed),
        Suite::Fidelity => fidelity_suite(trials, seed),
        Suite::All => [Suite::Gyro, Suite::Boost, Suite::Mobius, Suite::Fidelity]
            .into_iter()
            .flat_map(|s| run(s, trials, seed))
            .collect(),
    }
}

pub fn gyro_suite(trials: usize, seed: u64) -> Vec<ReportRecord> {
    let mut g1 = Check::bound("G1 identity element", TOL_GYRO);
    let mut g2 = Check::bound("G2 inverses", TOL_GYRO);
    let mut g3 = Check::bound("G3 gyroassociativity", TOL_GYRO);
    let mut g4 = Check::bound("G4 gyr[0,a] is the identity", TOL_GYRO);
    let mut g5 = Check::bound("G5 loop property", TOL_GYRO);
    let mut comm = Check::bound("gyrocommutativity", TOL_GYRO);
    let mut ortho = Check::bound("gyration preserves inner products", TOL_GYRO);
    let mut divisible = Check::bound("unique 2-divisibility", TOL_GYRO);
    let mut gamma_id = Check::bound("gamma identity", TOL_GAMMA_REL);
    let mut gamma_double = Check::bound("gamma of double", 1e-12);
    let mut witness = Check::new("non-associativity witness", CheckKind::Witness, DEVIATION_THRESHOLD);

    for n in GYRO_DIMS {
        let zero = BallVector::zero(n);
        for t in 0..trials {
            let mut rng = trial_rng(seed, stream(1, n), t as u64);
            let u = random_ball(&mut rng, n);
            let v = random_ball(&mut rng, n);
            let w = random_ball(&mut rng, n);
            let x = random_ball(&mut rng, n);
            let y = random_ball(&mut rng, n);

            g1.attempt(|| {
                Ok(einstein_add(&zero, &u)?
                    .max_abs_diff(&u)
                    .max(einstein_add(&u, &zero)?.max_abs_diff(&u)))
            });
            g2.attempt(|| {
                let neg = -&u;
                Ok(einstein_add(&u, &neg)?
                    .max_abs_diff(&zero)
                    .max(einstein_add(&neg, &u)?.max_abs_diff(&zero)))
            });
            g3.attempt(|| {
                let lhs = einstein_add(&u, &einstein_add(&v, &w)?)?;
                let rhs = einstein_add(&einstein_add(&u, &v)?, &gyration(&u, &v, &w)?)?;
                Ok(lhs.max_abs_diff(&rhs))
            });
            g4.attempt(|| Ok(gyration(&zero, &u, &w)?.max_abs_diff(&w)));
            g5.attempt(|| {
                let uv = einstein_add(&u, &v)?;
                Ok(gyration(&uv, &v, &w)?.max_abs_diff(&gyration(&u, &v, &w)?))
            });
            comm.attempt(|| {
                let uv = einstein_add(&u, &v)?;
                let vu = einstein_add(&v, &u)?;
                Ok(uv.max_abs_diff(&gyration(&u, &v, &vu)?))
            });
            ortho.attempt(|| {
                let gx = gyration(&u, &v, &x)?;
                let gy = gyration(&u, &v, &y)?;
                Ok((dot(&gx, &gy) - dot(&x, &y)).abs())
            });
            divisible.attempt(|| {
                let a = double(&half(&v))?.max_abs_diff(&v);
                let b = half(&double(&v)?).max_abs_diff(&v);
                Ok(a.max(b))
            });
            gamma_id.attempt(|| {
                let direct = gamma(&einstein_add(&u, &v)?).value();
                Ok(rel(gamma_add(&u, &v)?.value(), direct))
            });
            gamma_double.attempt(|| {
                let g = gamma(&v).value();
                Ok(rel(gamma(&double(&v)?).value(), 2.0 * g * g - 1.0))
            });
            witness.attempt(|| {
                let lhs = einstein_add(&u, &einstein_add(&v, &w)?)?;
                let rhs = einstein_add(&einstein_add(&u, &v)?, &w)?;
                Ok(crate::linalg::norm(
                    &lhs.iter().zip(rhs.iter()).map(|(a, b)| a - b).collect::<Vec<_>>(),
                ))
            });
        }
    }

    [g1, g2, g3, g4, g5, comm, ortho, divisible, gamma_id, gamma_double, witness]
        .into_iter()
        .map(|c| c.finish("gyro"))
        .collect()
}

pub fn boost_suite(trials: usize, seed: u64) -> Vec<ReportRecord> {
    let mut form = Check::bound("Lorentz form preserved: BᵀηB = η", TOL_RECON);
    let mut unit_det = Check::bound("det B = 1", TOL_RECON);
    let mut orthochronous = Check::bound("orthochronous: B₀₀ ≥ 1", 0.0);
    let mut vectors = Check::bound("L(Bx, By) = L(x, y)", TOL_RECON);
    let mut apply_gamma = Check::bound("boost of four-velocity: gamma", TOL_GAMMA_REL);
    let mut apply_sum = Check::bound("boost of four-velocity: velocity", TOL_GYRO);
    let mut einstein = Check::bound("B(u⊕v) = (B(u)B(v)²B(u))^1/2", TOL_SQRT);
    let mut squares = Check::bound("B(u)² ∗ B(v)² = B(u⊕v)²", TOL_SQRT);
    let mut double_sq = Check::bound("B(2⊗v) = B(v)²", TOL_SQRT);
    let mut half_root = Check::bound("B((1/2)⊗v) = B(v)^1/2", TOL_SQRT);
    let mut diag_recon = Check::bound("boost diagonalization reconstruction", TOL_RECON);
    let mut diag_ortho = Check::bound("boost frame orthogonality", TOL_ORTHO);
    let mut diag_spectrum = Check::bound("boost eigenvalues (λ, 1/λ, 1, …)", TOL_RECON);

    for n in BOOST_DIMS {
        for t in 0..trials {
            let mut rng = trial_rng(seed, stream(2, n), t as u64);
            let u = random_ball(&mut rng, n);
            let v = random_ball(&mut rng, n);
            let x = random_vector(&mut rng, n + 1);
            let y = random_vector(&mut rng, n + 1);
            let bu = boost(&u);
            let bv = boost(&v);

            form.observe(bv.lorentz_defect());
            unit_det.attempt(|| Ok((det(bv.matrix())? - 1.0).abs()));
            orthochronous.observe((1.0 - bv.matrix()[(0, 0)]).max(0.0));
            vectors.attempt(|| {
                let bx = bv.matrix().mul_vec(&x)?;
                let by = bv.matrix().mul_vec(&y)?;
                Ok((lorentz_form(&bx, &by)? - lorentz_form(&x, &y)?).abs())
            });
            let (g, sum) = match boost_apply(&u, &v) {
                Ok(r) => r,
                Err(_) => {
                    apply_gamma.observe(f64::NAN);
                    apply_sum.observe(f64::NAN);
                    continue;
                }
            };
            apply_gamma.attempt(|| Ok(rel(g.value(), gamma_add(&u, &v)?.value())));
            apply_sum.attempt(|| Ok(sum.max_abs_diff(&einstein_add(&u, &v)?)));
            einstein.attempt(|| {
                let expected = boost(&einstein_add(&u, &v)?);
                Ok(star(&bu, &bv)?.max_abs_diff(expected.matrix()))
            });
            squares.attempt(|| {
                let lhs = ast(&boost(&double(&u)?), &boost(&double(&v)?))?;
                let expected = boost(&einstein_add(&u, &v)?).matrix().square();
                Ok(lhs.max_abs_diff(&expected))
            });
            double_sq.attempt(|| Ok(boost(&double(&v)?).matrix().max_abs_diff(&bv.matrix().square())));
            half_root.attempt(|| Ok(boost(&half(&v)).matrix().max_abs_diff(&sqrt_psd(bv.matrix())?)));
            let (frame, d) = match boost_diag(&v) {
                Ok(r) => r,
                Err(_) => {
                    diag_recon.observe(f64::NAN);
                    continue;
                }
            };
            diag_recon.observe(frame.reconstruct(&d).max_abs_diff(bv.matrix()));
            diag_ortho.observe(frame.matrix().orthogonality_defect());
            diag_spectrum.attempt(|| {
                let mut sorted = d.clone();
                sorted.sort_by(f64::total_cmp);
                let spectrum = sym_eigen(bv.matrix())?;
                Ok(spectrum
                    .eigenvalues()
                    .iter()
                    .zip(&sorted)
                    .fold(0.0, |m, (a, b)| m.max((a - b).abs())))
            });
        }
    }

    [
        form,
        unit_det,
        orthochronous,
        vectors,
        apply_gamma,
        apply_sum,
        einstein,
        squares,
        double_sq,
        half_root,
        diag_recon,
        diag_ortho,
        diag_spectrum,
    ]
    .into_iter()
    .map(|c| c.finish("boost"))
    .collect()
}

pub fn mobius_suite(trials: usize, seed: u64) -> Vec<ReportRecord> {
    let mut recon = Check::bound("Möbius diagonalization reconstruction", TOL_RECON);
    let mut frame_ortho = Check::bound("Möbius frame orthonormality", TOL_ORTHO);
    let mut unit_trace = Check::bound("Möbius trace = 1", TOL_TRACE);
    let mut det_formula = Check::bound("Möbius determinant formula (relative)", 1e-9);
    let mut positive = Check::bound("Möbius positive definite: −λ_min ≤ 0", 0.0);
    let mut spectrum = Check::bound("Möbius spectrum vs Jacobi", TOL_RECON);
    let mut via_square = Check::bound("μ = B(v)² / tr B(v)²", TOL_RECON);
    let mut via_double = Check::bound("μ = B(2⊗v) / tr B(2⊗v)", TOL_RECON);
    let mut square_trace = Check::bound("tr B(v)² = (n−3) + 4γ² (relative)", TOL_GAMMA_REL);

    for n in MOBIUS_DIMS {
        let nf = n as f64;
        for t in 0..trials {
            let mut rng = trial_rng(seed, stream(3, n), t as u64);
            let v = random_ball(&mut rng, n);
            let mu = match mobius(n, &v) {
                Ok(m) => m,
                Err(_) => {
                    recon.observe(f64::NAN);
                    continue;
                }
            };
            recon.attempt(|| {
                let (frame, d) = mobius_diag(n, &v)?;
                Ok(frame.reconstruct(&d).max_abs_diff(mu.matrix()))
            });
            frame_ortho.attempt(|| {
                let (frame, _) = mobius_diag(n, &v)?;
                let mut worst = frame.matrix().orthogonality_defect();
                for (i, ui) in frame.complement().iter().enumerate() {
                    worst = worst.max(dot(ui, &v).abs());
                    for (j, uj) in frame.complement().iter().enumerate() {
                        let expected = if i == j { 1.0 } else { 0.0 };
                        worst = worst.max((dot(ui, uj) - expected).abs());
                    }
                }
                Ok(worst)
            });
            unit_trace.observe((mu.matrix().trace() - 1.0).abs());
            det_formula.attempt(|| {
                let r2 = v.norm_sq();
                let expected = ((1.0 - r2) / ((nf + 1.0) - (nf - 3.0) * r2)).powi(n as i32 + 1);
                Ok(rel(det(mu.matrix())?, expected))
            });
            spectrum.attempt(|| {
                let s = sym_eigen(mu.matrix())?;
                positive.observe(-s.min_eigenvalue());
                let (_, mut d) = mobius_diag(n, &v)?;
                d.sort_by(f64::total_cmp);
                Ok(s.eigenvalues()
                    .iter()
                    .zip(&d)
                    .fold(0.0, |m, (a, b)| m.max((a - b).abs())))
            });
            via_square.attempt(|| Ok(mobius_from_boost(n, &v)?.matrix().max_abs_diff(mu.matrix())));
            via_double.attempt(|| Ok(mobius_from_double_boost(n, &v)?.matrix().max_abs_diff(mu.matrix())));
            square_trace.observe(rel(boost(&v).matrix().square().trace(), squared_boost_trace(&v)));
        }
    }

    [recon, frame_ortho, unit_trace, det_formula, positive, spectrum, via_square, via_double, square_trace]
        .into_iter()
        .map(|c| c.finish("mobius"))
        .collect()
}

/// Uncorrected variants of two closed forms. They are kept only so the suite
/// can show that they disagree with the oracles, which is what justifies the
/// corrected versions in [`crate::fidelity`].
mod uncorrected {
    use crate::gyrogroup::{gamma_add, BallVector};

    /// Midpoint Lorentz factor built on `γ_{(1/2)⊗v} = (1+γ_v)/√(1+2γ_v)`.
    pub fn gamma_midpoint(u: &BallVector, v: &BallVector) -> f64 {
        let gu = u.gamma().value();
        let gv = v.gamma().value();
        ((1.0 + gu) * (1.0 + gv) + gu * gv * u.dot(v)) / ((1.0 + 2.0 * gu).sqrt() * (1.0 + 2.0 * gv).sqrt())
    }

    /// Möbius fidelity with numerator `γ_{u⊕v} + n − 1`.
    pub fn mobius_fidelity(u: &BallVector, v: &BallVector, n: usize) -> f64 {
        let nf = n as f64;
        let g = gamma_add(u, v).expect("equal dimensions").value();
        let gu = u.gamma().value();
        let gv = v.gamma().value();
        (g + nf - 1.0) / ((4.0 * gu * gu + nf - 3.0) * (4.0 * gv * gv + nf - 3.0)).sqrt()
    }
}

fn fidelity_bounds(f: f64) -> f64 {
    (f - 1.0).max(-f)
}

pub fn fidelity_suite(trials: usize, seed: u64) -> Vec<ReportRecord> {
    let mut bounds = Check::bound("0 ≤ F ≤ 1 for density matrices", 1e-10);
    let mut identical = Check::bound("F(ρ, ρ) = 1", 1e-10);
    let mut distinct = Check::bound("distinct states: max F", 1.0 - DISTINCT_FIDELITY_GAP);
    let mut symmetric = Check::bound("F(ρ, σ) = F(σ, ρ)", 1e-10);
    let mut invariant = Check::bound("F(OρOᵀ, OσOᵀ) = F(ρ, σ)", TOL_FIDELITY);
    let mut scaling = Check::bound("F(αA, βB) = √(αβ) F(A, B) (relative)", 1e-10);
    let mut boost_closed = Check::bound("normalized boost fidelity closed form", TOL_FIDELITY);
    let mut trace_identity = Check::bound("tr (B(u)B(v)²B(u))^1/2 = 2γ_{u⊕v} + n − 1", TOL_FIDELITY);
    let mut midpoint = Check::bound("midpoint gamma formula (relative)", TOL_GAMMA_REL);
    let mut mobius_closed = Check::bound("Möbius fidelity closed form", TOL_FIDELITY);
    let mut mobius_doubled = Check::bound("Möbius fidelity = boost fidelity of doubles", 1e-10);
    let mut printed_mobius = Check::new(
        "uncorrected Möbius numerator vs oracle (n = 4)",
        CheckKind::DocumentedDeviation,
        DEVIATION_THRESHOLD,
    );

    for n in FIDELITY_DIMS {
        for t in 0..trials {
            let mut rng = trial_rng(seed, stream(4, n), t as u64);
            let u = random_ball(&mut rng, n);
            let v = random_ball(&mut rng, n);
            let o = random_orthogonal(&mut rng, n + 1);
            let alpha = random_positive(&mut rng, 10.0);
            let beta = random_positive(&mut rng, 10.0);

            let (mu_u, mu_v) = match (mobius(n, &u), mobius(n, &v)) {
                (Ok(a), Ok(b)) => (a.matrix().clone(), b.matrix().clone()),
                _ => {
                    mobius_closed.observe(f64::NAN);
                    continue;
                }
            };
            let nb_u = NormalizedBoost::new(&u).matrix().clone();
            let nb_v = NormalizedBoost::new(&v).matrix().clone();
            let pairs: [(&SymmetricMatrix, &SymmetricMatrix); 2] = [(&mu_u, &mu_v), (&nb_u, &nb_v)];

            let mut spectral = [f64::NAN; 2];
            for (k, (rho, sigma)) in pairs.iter().enumerate() {
                let f = fidelity_spectral(rho, sigma).unwrap_or(f64::NAN);
                spectral[k] = f;
                bounds.observe(fidelity_bounds(f));
                identical.attempt(|| Ok((fidelity_spectral(rho, rho)? - 1.0).abs()));
                if rho.max_abs_diff(sigma) > DISTINCT_STATES {
                    distinct.observe(f);
                }
                symmetric.attempt(|| Ok((fidelity_spectral(sigma, rho)? - f).abs()));
                invariant.attempt(|| Ok((fidelity_spectral(&rho.congruence(&o), &sigma.congruence(&o))? - f).abs()));
            }

            scaling.attempt(|| {
                let a = boost(&u).matrix().clone();
                let b = boost(&v).matrix().clone();
                let base = fidelity_spectral(&a, &b)?;
                let scaled = fidelity_spectral(&a.scale(alpha), &b.scale(beta))?;
                Ok(rel(scaled, (alpha * beta).sqrt() * base))
            });
            boost_closed.attempt(|| Ok((fidelity_boost_closed(&u, &v, n)? - spectral[1]).abs()));
            trace_identity.attempt(|| Ok((trace_sqrt_product(&u, &v)? - trace_sqrt_product_matrix(&u, &v)?).abs()));
            midpoint.attempt(|| {
                let composed = gamma(&einstein_add(&half(&u), &half(&v))?).value();
                Ok(rel(gamma_midpoint(&u, &v)?.value(), composed))
            });
            mobius_closed.attempt(|| Ok((fidelity_mobius_closed(&u, &v, n)? - spectral[0]).abs()));
            mobius_doubled.attempt(|| {
                let closed = fidelity_mobius_closed(&u, &v, n)?;
                Ok((closed - fidelity_boost_closed(&double(&u)?, &double(&v)?, n)?).abs())
            });
            if n == 4 {
                printed_mobius.observe((uncorrected::mobius_fidelity(&u, &v, n) - spectral[0]).abs());
            }
        }
    }

    let mut records: Vec<ReportRecord> = [
        bounds,
        identical,
        distinct,
        symmetric,
        invariant,
        scaling,
        boost_closed,
        trace_identity,
        midpoint,
        mobius_closed,
        mobius_doubled,
    ]
    .into_iter()
    .map(|c| c.finish("fidelity"))
    .collect();
    records.extend(qubit_checks(trials, seed));

    let mut printed_midpoint = Check::new(
        "uncorrected midpoint gamma at u = 0, v = (0.6, 0, 0)",
        CheckKind::DocumentedDeviation,
        DEVIATION_THRESHOLD,
    );
    printed_midpoint.attempt(|| {
        let u = BallVector::zero(3);
        let v = BallVector::new(vec![0.6, 0.0, 0.0])?;
        let oracle = gamma(&einstein_add(&half(&u), &half(&v))?).value();
        Ok((uncorrected::gamma_midpoint(&u, &v) - oracle).abs())
    });
    records.push(printed_midpoint.finish("fidelity"));
    records.push(printed_mobius.finish("fidelity"));
    records
}

/// Qubit cross-checks between the trace/determinant form, the two Lorentz
/// factor forms, the Möbius closed form at `n = 3` and the complex spectral
/// fidelity.
pub fn qubit_checks(trials: usize, seed: u64) -> Vec<ReportRecord> {
    let mut trace_gamma = Check::bound("qubit: trace-det form = gamma form", 1e-10);
    let mut gamma_bloch = Check::bound("qubit: gamma form = Bloch form", 1e-10);
    let mut vs_mobius = Check::bound("qubit: F² = Möbius fidelity (n = 3)", 1e-10);
    let mut vs_spectral = Check::bound("qubit: F² = complex spectral fidelity²", 1e-10);
    let mut reference = Check::bound("qubit: F² = 0.82 at u = (0.6,0,0), v = (0,0.6,0)", 1e-10);

    for t in 0..trials {
        let mut rng = trial_rng(seed, stream(5, 3), t as u64);
        let u = random_ball(&mut rng, 3);
        let v = random_ball(&mut rng, 3);
        trace_gamma.attempt(|| Ok((qubit_fidelity_sq(&u, &v)? - qubit_fidelity_sq_gamma(&u, &v)?).abs()));
        gamma_bloch.attempt(|| Ok((qubit_fidelity_sq_gamma(&u, &v)? - qubit_fidelity_sq_bloch(&u, &v)?).abs()));
        vs_mobius.attempt(|| Ok((qubit_fidelity_sq(&u, &v)? - fidelity_mobius_closed(&u, &v, 3)?).abs()));
        vs_spectral.attempt(|| Ok((qubit_fidelity_sq(&u, &v)? - qubit_fidelity_spectral(&u, &v)?.powi(2)).abs()));
    }
    reference.attempt(|| {
        let u = BallVector::new(vec![0.6, 0.0, 0.0])?;
        let v = BallVector::new(vec![0.0, 0.6, 0.0])?;
        let forms = [
            qubit_fidelity_sq(&u, &v)?,
            qubit_fidelity_sq_gamma(&u, &v)?,
            qubit_fidelity_sq_bloch(&u, &v)?,
            fidelity_mobius_closed(&u, &v, 3)?,
        ];
        Ok(forms.iter().fold(0.0, |m, f| m.max((f - 0.82).abs())))
    });

    [trace_gamma, gamma_bloch, vs_mobius, vs_spectral, reference]
        .into_iter()
        .map(|c| c.finish("fidelity"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_kinds() {
        let rec = |kind, max_error| ReportRecord {
            suite: "x",
            name: "y",
            trials: 1,
            max_error,
            tolerance: 1e-3,
            kind,
        };
        assert!(rec(CheckKind::Bound, 1e-4).pass());
        assert!(!rec(CheckKind::Bound, 1e-2).pass());
        assert!(!rec(CheckKind::Bound, f64::NAN).pass());
        assert!(rec(CheckKind::Witness, 1e-2).pass());
        assert_eq!(rec(CheckKind::DocumentedDeviation, 1e-2).status(), "deviates as documented");
        assert_eq!(rec(CheckKind::DocumentedDeviation, 1e-4).status(), "fail");
        assert!(!rec(CheckKind::Witness, f64::NAN).pass());
    }

    #[test]
    fn nan_is_sticky() {
        let mut c = Check::bound("z", 1.0);
        c.observe(0.5);
        c.observe(f64::NAN);
        c.observe(0.7);
        assert!(c.finish("s").max_error.is_nan());
    }

    #[test]
    fn uncorrected_midpoint_is_wrong_at_origin() {
        // at u = v = 0 the true midpoint is 0, with γ = 1
        let z = BallVector::zero(3);
        let g = uncorrected::gamma_midpoint(&z, &z);
        assert!((g - 4.0 / 3.0).abs() < 1e-15);
        assert_eq!(gamma_midpoint(&z, &z).unwrap().value(), 1.0);
    }

    #[test]
    fn small_run_passes() {
        for r in run(Suite::All, 5, 11) {
            assert!(r.pass(), "{r:?}");
        }
    }
}
