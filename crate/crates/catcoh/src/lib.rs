//! Exact computational engine for cohomology of finite categories with
//! natural-system coefficients, linear extensions classified by H^2, and
//! linear track extensions classified by H^3, including a strengthening
//! pipeline for track structures over finite-product theories.
//!
//! All arithmetic is exact (arbitrary-precision integers throughout);
//! groups are compared by canonical invariant factors.

pub mod abelcore;
pub mod error;
pub mod fincat;

pub use error::{EngineError, Report, Result};
