//! Convergence diagnostics: exact table coefficients divided by their
//! leading-order predictions. Ratios are reported, never asserted, so the
//! approach to 1 can be inspected in both index directions.

use num::BigInt;

use crate::asympt::constants::{a_constant, b_constant};
use crate::asympt::fixed::FixedDecimal;
use crate::coeffs::coeff_table_beta2;
use crate::error::{Error, Result};
use crate::exact::quadratic::SpectralCurve;
use crate::exact::rat::{rat_big, rat_i64, rat_to_f64, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// k -> inf at fixed g >= 1: tau_{k,2g} vs A_g k^((6g-3)/2) (3 + sqrt 8)^k.
    KToInf,
    /// g -> inf at fixed k >= 2: tau_{k,2g} vs B_k (k-1)^(2g).
    GToInf,
}

/// One diagnostic point; the ratio is exact where the prediction is rational
/// (g direction) and always carries a float rendering.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioPoint {
    pub index: usize,
    pub exact: Option<Rat>,
    pub ratio: f64,
}

/// Table value over asymptotic prediction along one direction; `indices` are
/// g values for `GToInf` and k values for `KToInf`, `digits` is the working
/// precision of the irrational predictions.
pub fn ratio_diagnostics(
    direction: Direction,
    fixed_index: usize,
    indices: &[usize],
    digits: usize,
) -> Result<Vec<RatioPoint>> {
    match direction {
        Direction::GToInf => g_direction(fixed_index, indices),
        Direction::KToInf => k_direction(fixed_index, indices, digits),
    }
}

fn g_direction(k: usize, gs: &[usize]) -> Result<Vec<RatioPoint>> {
    let bk = b_constant(k)?;
    let g_top = gs.iter().copied().max().unwrap_or(0);
    let table = coeff_table_beta2(k, 2 * g_top);
    let base = BigInt::from((k - 1) as u64);
    gs.iter()
        .map(|&g| {
            let pred = &bk * rat_big(base.pow(2 * g as u32));
            let exact = table.entry(k, 2 * g) / &pred;
            Ok(RatioPoint { index: g, ratio: rat_to_f64(&exact), exact: Some(exact) })
        })
        .collect()
}

fn k_direction(g: usize, ks: &[usize], digits: usize) -> Result<Vec<RatioPoint>> {
    if g == 0 {
        return Err(Error::InvalidArgument {
            what: "k-direction diagnostics need a fixed g >= 1".into(),
        });
    }
    if ks.iter().any(|&k| k == 0) {
        return Err(Error::InvalidArgument {
            what: "k-direction diagnostic indices must be positive".into(),
        });
    }
    let scale = digits.max(20) + 10;
    let a_g = a_constant(g, scale)?;
    let k_top = ks.iter().copied().max().unwrap_or(1);
    let table = coeff_table_beta2(k_top, 2 * g);
    // (3 - sqrt 8)(3 + sqrt 8) = 1, so the reciprocal of the decay base is
    // exactly the upper edge and its k-th power stays in Z[sqrt 2].
    let growth = SpectralCurve::edge_plus();
    ks.iter()
        .map(|&k| {
            let pow_part = FixedDecimal::from_quad(&growth.powi(k as u32), scale);
            // k^((6g-3)/2) = k^(3g-2) * sqrt(k)
            let k_int = rat_big(BigInt::from(k as u64).pow((3 * g - 2) as u32));
            let k_pow = FixedDecimal::from_rat(&k_int, scale);
            let k_sqrt = FixedDecimal::from_rat(&rat_i64(k as i64), scale).sqrt();
            let pred = a_g.mul(&k_pow).mul(&k_sqrt).mul(&pow_part);
            let tau = FixedDecimal::from_rat(table.entry(k, 2 * g), scale);
            Ok(RatioPoint { index: k, exact: None, ratio: tau.div(&pred).to_f64() })
        })
        .collect()
}
