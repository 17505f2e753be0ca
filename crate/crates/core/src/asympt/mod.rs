//! Asymptotic behavior of the expansion coefficients: the exact rational
//! constants B_k and high-precision constants A_g governing the two index
//! directions, plus ratio diagnostics of exact table values against their
//! leading-order predictions.

mod constants;
mod fixed;
mod ratios;

pub use constants::{
    a_constant, asymp_constant, b_constant, gamma_half_rational, AsympConstant, ConstantKind,
};
pub use fixed::FixedDecimal;
pub use ratios::{ratio_diagnostics, Direction, RatioPoint};
