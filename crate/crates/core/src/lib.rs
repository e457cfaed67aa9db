//! Intersection homology, IP/Witt verdicts and symmetric signatures of
//! triangulated pseudomanifolds, in exact arithmetic.

pub mod complex;
pub mod error;
pub mod intersection_homology;
pub mod ip_witt;
pub mod perversity;
pub mod pseudomanifold;
pub mod symmetric_signature;
pub mod zlinalg;
pub mod zoo;

pub use error::{Error, Result};
