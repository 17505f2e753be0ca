//! Finite-N moments: delay-time moments as exact rational functions of N,
//! the two closed-form sums, and general-alpha Wishart moments.

pub mod sums;
pub mod symbolic;
pub mod wishart;

use crate::error::{Error, Result};

/// Symmetry class (Dyson index). Only the orthogonal (1) and unitary (2)
/// classes have recursions; everything else is rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Beta {
    One,
    Two,
}

impl Beta {
    pub fn try_from_u32(v: u32) -> Result<Beta> {
        match v {
            1 => Ok(Beta::One),
            2 => Ok(Beta::Two),
            other => Err(Error::UnsupportedBeta { beta: other }),
        }
    }

    pub fn value(self) -> u32 {
        match self {
            Beta::One => 1,
            Beta::Two => 2,
        }
    }
}

pub use sums::{tau_exact_sum_nterm, tau_exact_sum_alternating};
pub use symbolic::{tau_beta1_symbolic, tau_beta2_symbolic, MomentRatFunc};
pub use wishart::{
    wishart_d_symbolic, wishart_mgf_series, wishart_moment, WishartMomentQuery,
};
