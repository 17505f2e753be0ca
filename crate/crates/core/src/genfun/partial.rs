//! Partial generating functions F_g (and f_g for beta = 1) as truncated
//! series at the spectral curve: the beta = 2 members are R_g * y^(-3g/2) *
//! sqrt(y), the beta = 1 pair is marched through the coupled integral
//! recursions over the function field extension by sqrt(y).

use num::Zero;

use crate::error::Result;
use crate::exact::algebraic::AlgebraicSeries;
use crate::exact::poly::{Poly, Var};
use crate::exact::quadratic::SpectralCurve;
use crate::exact::rat::{rat_frac, rat_i64};
use crate::exact::series::TruncSeries;
use crate::genfun::families::{r_polynomial, DEFAULT_CHECK_DEPTH};

/// F_0 = f_0 = (3 - z - sqrt(y))/2.
fn seed_f0(order: usize) -> AlgebraicSeries {
    let a = TruncSeries::from_poly(&Poly::from_i64(&[3, -1], Var::Z), order)
        .scale(&rat_frac(1, 2));
    let b = TruncSeries::from_poly(&Poly::constant(rat_frac(-1, 2), Var::Z), order);
    AlgebraicSeries::new(a, b)
}

/// F_1 = (1 - 3z - sqrt(y)) / (2y).
fn seed_cap_f1(order: usize) -> Result<AlgebraicSeries> {
    let y_inv = SpectralCurve::series(order, Var::Z).invert()?;
    let a = y_inv
        .mul_poly(&Poly::from_i64(&[1, -3], Var::Z))
        .scale(&rat_frac(1, 2));
    let b = y_inv.scale(&rat_frac(-1, 2));
    Ok(AlgebraicSeries::new(a, b))
}

/// f_1 = -(z + 1 + sqrt(y)) / (2 sqrt(y)) = -1/2 - (z + 1)/(2y) * sqrt(y).
fn seed_low_f1(order: usize) -> Result<AlgebraicSeries> {
    let y_inv = SpectralCurve::series(order, Var::Z).invert()?;
    let a = TruncSeries::from_poly(&Poly::constant(rat_frac(-1, 2), Var::Z), order);
    let b = y_inv
        .mul_poly(&Poly::from_i64(&[1, 1], Var::Z))
        .scale(&rat_frac(-1, 2));
    Ok(AlgebraicSeries::new(a, b))
}

/// f_{g+1} = sqrt(y) * int_0^z y^(-3/2) {f_g - 2(x+1) f_g' + x^2 f_{g-1}'''
///           + x f_{g-1}'' - f_{g-1}'} dx.
fn low_step(low_prev: &AlgebraicSeries, low_cur: &AlgebraicSeries) -> Result<AlgebraicSeries> {
    let var = low_cur.var();
    let d1_cur = low_cur.derivative()?;
    let d1_prev = low_prev.derivative()?;
    let d2_prev = d1_prev.derivative()?;
    let d3_prev = d2_prev.derivative()?;
    let integrand = low_cur
        .sub(&d1_cur.mul_poly(&Poly::from_i64(&[2, 2], var)))
        .add(&d3_prev.mul_poly(&Poly::from_i64(&[0, 0, 1], var)))
        .add(&d2_prev.mul_poly(&Poly::x(var)))
        .sub(&d1_prev);
    Ok(integrand.div_y()?.div_sqrt_y()?.integrate().mul_sqrt_y())
}

/// F_{g+1} = (1/y) * int_0^z {4x^2 F_{g-1}''' + 8x F_{g-1}'' - 2 F_g'
///           + 3(x - 3) f_{g+1} - 3x f_g'} dx.
fn cap_step(
    cap_prev: &AlgebraicSeries,
    cap_cur: &AlgebraicSeries,
    low_cur: &AlgebraicSeries,
    low_next: &AlgebraicSeries,
) -> Result<AlgebraicSeries> {
    let var = cap_cur.var();
    let d1_cur = cap_cur.derivative()?;
    let d1_prev = cap_prev.derivative()?;
    let d2_prev = d1_prev.derivative()?;
    let d3_prev = d2_prev.derivative()?;
    let low_d1 = low_cur.derivative()?;
    let integrand = d3_prev
        .mul_poly(&Poly::from_i64(&[0, 0, 4], var))
        .add(&d2_prev.mul_poly(&Poly::from_i64(&[0, 8], var)))
        .sub(&d1_cur.scale(&rat_i64(2)))
        .add(&low_next.mul_poly(&Poly::from_i64(&[-9, 3], var)))
        .sub(&low_d1.mul_poly(&Poly::from_i64(&[0, 3], var)));
    Ok(integrand.integrate().div_y()?)
}

/// The beta = 1 pair (F_g, f_g), each as a + b*sqrt(y). Seeds g = 0, 1 are
/// closed forms; higher levels march through `low_step` and `cap_step`.
/// Every step costs at most two orders of validity (a third derivative
/// followed by one integration), so the march is padded and the result
/// truncated back to the requested order.
pub fn f_beta1_pair(g: usize, order: usize) -> Result<(AlgebraicSeries, AlgebraicSeries)> {
    let pad = order + 2 * g + 4;
    if g == 0 {
        let f0 = seed_f0(pad);
        return Ok((f0.truncate(order), f0.truncate(order)));
    }
    let mut cap_prev = seed_f0(pad);
    let mut low_prev = seed_f0(pad);
    let mut cap_cur = seed_cap_f1(pad)?;
    let mut low_cur = seed_low_f1(pad)?;
    for _ in 1..g {
        let low_next = low_step(&low_prev, &low_cur)?;
        let cap_next = cap_step(&cap_prev, &cap_cur, &low_cur, &low_next)?;
        cap_prev = cap_cur;
        low_prev = low_cur;
        cap_cur = cap_next;
        low_cur = low_next;
    }
    let cap = cap_cur.truncate(order);
    let low = low_cur.truncate(order);
    assert!(cap.expand().coeff(0).is_zero(), "constant term of F_g must vanish for g >= 1");
    Ok((cap, low))
}

/// The beta = 2 partial generating function F_g as a plain truncated series:
/// the Schroeder root for g = 0, identically zero for odd g, and
/// R_g * sqrt(y) / y^(3g/2) for even g >= 2.
pub fn f_beta2_series(g: usize, order: usize) -> Result<TruncSeries> {
    let var = Var::Z;
    if g == 0 {
        let linear = TruncSeries::from_poly(&Poly::from_i64(&[3, -1], var), order);
        return Ok(linear.sub(&SpectralCurve::sqrt_series(order, var)).scale(&rat_frac(1, 2)));
    }
    if g % 2 == 1 {
        return Ok(TruncSeries::zero(order, var));
    }
    let r = r_polynomial(g, DEFAULT_CHECK_DEPTH)?;
    let y_inv = SpectralCurve::series(order, var).invert()?;
    let mut series =
        TruncSeries::from_poly(&r.poly, order).mul(&SpectralCurve::sqrt_series(order, var));
    for _ in 0..3 * g / 2 {
        series = series.mul(&y_inv);
    }
    Ok(series)
}
