//! Exact sparse linear algebra over Z and Q.

mod echelon;
mod homology;
mod matrix;
mod rational;
mod snf;
mod solve;
mod sparse;

pub use echelon::{QEchelon, ZEchelon};
pub use homology::{homology_basis, homology_q, homology_z, rank_q, HomologyBasis};
pub use matrix::IntMatrix;
pub use rational::{rational_inertia, RatMatrix};
pub use snf::{invariant_factors, smith_normal_form, SnfResult};
pub use solve::{solve_integer_system, solve_modulo_image};
pub use sparse::SparseVec;

/// Arbitrary-precision integer used for every matrix entry.
pub type Int = dashu_int::IBig;
/// Arbitrary-precision rational.
pub type Rat = dashu_ratio::RBig;

/// Coefficient domain for homology and solving.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Coefficients {
    Z,
    Q,
}

impl std::fmt::Display for Coefficients {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Coefficients::Z => write!(f, "Z"),
            Coefficients::Q => write!(f, "Q"),
        }
    }
}
