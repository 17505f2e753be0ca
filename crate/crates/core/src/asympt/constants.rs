//! The two Darboux constants: B_k, exactly rational through P_k, and A_g,
//! numeric because its prefactor is a nested radical.

use num::BigInt;

use crate::asympt::fixed::FixedDecimal;
use crate::error::{Error, Result};
use crate::exact::quadratic::{Quad, SpectralCurve};
use crate::exact::rat::{factorial, rat_big, rat_frac, rat_i64, Rat};
use crate::genfun::{p_polynomial, r_polynomial, DEFAULT_CHECK_DEPTH};

/// Guard digits carried by every high-precision computation.
const GUARD: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstantKind {
    A,
    B,
}

/// One asymptotic constant: the exact value when it is rational (B only)
/// and a numeric value correct to `digits` significant digits.
#[derive(Debug, Clone)]
pub struct AsympConstant {
    pub kind: ConstantKind,
    pub index: usize,
    pub exact: Option<Rat>,
    pub numeric: FixedDecimal,
    pub digits: usize,
}

/// B_k = P_k((k-1)^(-2)) / prod_{j=0}^{k-2} (1 - j^2 (k-1)^(-2)), exact.
/// No factor vanishes: j stays strictly below k-1.
pub fn b_constant(k: usize) -> Result<Rat> {
    if k <= 1 {
        return Err(Error::DegenerateIndex { k: k as u32 });
    }
    let km1 = (k - 1) as i64;
    let zeta0 = rat_frac(1, km1 * km1);
    let mut den = rat_i64(1);
    for j in 0..k - 1 {
        den *= rat_i64(1) - rat_i64((j * j) as i64) * &zeta0;
    }
    Ok(p_polynomial(k).eval(&zeta0) / den)
}

/// Gamma(n + 1/2) / sqrt(pi) = (2n)! / (4^n n!), exact.
pub fn gamma_half_rational(n: u64) -> Rat {
    rat_big(factorial(2 * n)) / (rat_big(factorial(n)) * rat_big(BigInt::from(4u32).pow(n as u32)))
}

/// A_g at a fixed working scale. The prefactor (sqrt(32)(3 - sqrt 8))^((1-6g)/2)
/// is sqrt(((4 + 3 sqrt 2)/8)^(6g-1)): the reciprocal base stays in Q(sqrt 2),
/// so only one outer square root is taken numerically.
fn a_constant_at_scale(g: usize, scale: usize) -> Result<FixedDecimal> {
    let inv_base = Quad::new(rat_frac(1, 2), rat_frac(3, 8));
    let pref_quad = inv_base.powi((6 * g - 1) as u32);
    let pref = FixedDecimal::from_quad(&pref_quad, scale).sqrt();

    let r = r_polynomial(2 * g, DEFAULT_CHECK_DEPTH)?;
    let edge = SpectralCurve::edge_minus();
    let mut at_edge = Quad::zero();
    for c in r.poly.coeffs().iter().rev() {
        at_edge = at_edge.mul(&edge).add(&Quad::new(c.clone(), rat_i64(0)));
    }
    let r_val = FixedDecimal::from_quad(&at_edge, scale);

    let gamma = FixedDecimal::from_rat(&gamma_half_rational((3 * g - 1) as u64), scale)
        .mul(&FixedDecimal::pi(scale).sqrt());
    Ok(pref.mul(&r_val).div(&gamma))
}

/// A_g = (sqrt(32)(3 - sqrt 8))^((1-6g)/2) * R_2g(3 - sqrt 8) / Gamma((6g-1)/2),
/// correct to `digits` significant digits.
pub fn a_constant(g: usize, digits: usize) -> Result<FixedDecimal> {
    if g == 0 || digits == 0 {
        return Err(Error::InvalidArgument {
            what: format!("A_g needs g >= 1 and a positive digit count, got g = {g}, digits = {digits}"),
        });
    }
    // A_g decays superexponentially in g; grow the probe scale until a few
    // significant digits survive, then aim the final scale at the magnitude.
    let mut probe_scale = 6 * g + 20;
    let exponent = loop {
        let probe = a_constant_at_scale(g, probe_scale)?;
        if !probe.is_zero() && probe.leading_exponent() + probe_scale as i64 >= 3 {
            break probe.leading_exponent();
        }
        probe_scale *= 2;
    };
    let scale = (digits as i64 - exponent - 1).max(1) as usize;
    Ok(a_constant_at_scale(g, scale + GUARD)?.rescale(scale))
}

/// Assemble the full record: exact and numeric forms for B, numeric for A.
pub fn asymp_constant(kind: ConstantKind, index: usize, digits: usize) -> Result<AsympConstant> {
    match kind {
        ConstantKind::B => {
            let exact = b_constant(index)?;
            let exponent = FixedDecimal::from_rat(&exact, digits + GUARD).leading_exponent();
            let scale = (digits as i64 - exponent - 1).max(1) as usize;
            let numeric = FixedDecimal::from_rat(&exact, scale);
            Ok(AsympConstant { kind, index, exact: Some(exact), numeric, digits })
        }
        ConstantKind::A => Ok(AsympConstant {
            kind,
            index,
            exact: None,
            numeric: a_constant(index, digits)?,
            digits,
        }),
    }
}
