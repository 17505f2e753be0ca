//! Exact computation of Wigner-Smith time-delay moments and inverse Wishart
//! moments: finite-N recursions and closed-form sums, full 1/N-expansion
//! coefficient tables, generating-function polynomial families, asymptotic
//! constants, integrality verification at scale, and an independent Monte
//! Carlo cross-check.
//!
//! All exact layers use arbitrary-precision rational arithmetic; floating
//! point appears only in the Monte Carlo sampler and in the high-precision
//! fixed-point evaluation of asymptotic constants.

pub mod asympt;
pub mod coeffs;
pub mod error;
pub mod exact;
pub mod genfun;
pub mod integrality;
pub mod mc;
pub mod moments;
pub mod store;

pub use error::{Error, Result};
