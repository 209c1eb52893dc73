//! Block companion Singer cycles over finite fields.
//!
//! Exact arithmetic in field towers `F_q ⊂ F_{q^m} ⊂ F_{q^{mn}}`, matrices
//! over `F_q`, and exhaustive censuses of block companion matrices,
//! splitting subspaces, coprime polynomial tuples and Toeplitz matrices,
//! each compared against its closed-form count.

pub mod census;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod numtheory;
pub mod report;

pub use error::{Error, Result};
pub use gf::{Elem, Field, FieldTower, GfPoly};
pub use linalg::GfMatrix;
pub use report::{run, RunConfig, VerificationReport};
