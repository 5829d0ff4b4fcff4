//! Einstein velocity addition on the unit ball, Lorentz boosts, Möbius
//! density matrices and their quantum fidelity, each closed form paired with
//! a spectral oracle.

pub mod boost;
pub mod cli;
pub mod error;
pub mod fidelity;
pub mod gyrogroup;
pub mod linalg;
pub mod mobius;
pub mod sampling;
pub mod verify;

pub use boost::{boost, LorentzBoost};
pub use error::{Error, Result};
pub use fidelity::{fidelity_mobius_closed, fidelity_spectral, NormalizedBoost};
pub use gyrogroup::{einstein_add, gamma, gyration, BallVector, GammaFactor};
pub use mobius::{mobius, MobiusMatrix, OrthogonalFrame};
