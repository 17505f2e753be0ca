//! Reduced rational functions in one indeterminate.
//!
//! Canonical form: gcd(num, den) = 1 and den monic. Equality of canonical
//! forms is therefore structural equality.

use std::fmt;

use num::Zero;

use crate::error::{Error, Result};
use crate::exact::poly::{Poly, Var};
use crate::exact::rat::{rat_i64, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Canonical reduced form of num/den.
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc { num: Poly::zero(den.var()), den: Poly::one(den.var()) });
        }
        let g = num.gcd(&den);
        let (num, r1) = num.divrem(&g);
        debug_assert!(r1.is_zero());
        let (den, r2) = den.divrem(&g);
        debug_assert!(r2.is_zero());
        let lead = den.leading();
        let inv = rat_i64(1) / lead;
        Ok(RatFunc { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        let var = p.var();
        RatFunc { num: p, den: Poly::one(var) }
    }

    pub fn constant(c: Rat, var: Var) -> RatFunc {
        RatFunc::from_poly(Poly::constant(c, var))
    }

    pub fn zero(var: Var) -> RatFunc {
        RatFunc::from_poly(Poly::zero(var))
    }

    pub fn one(var: Var) -> RatFunc {
        RatFunc::from_poly(Poly::one(var))
    }

    /// The indeterminate itself, e.g. N as a rational function of N.
    pub fn x(var: Var) -> RatFunc {
        RatFunc::from_poly(Poly::x(var))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn var(&self) -> Var {
        self.num.var()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RatFunc::new(num, den).expect("nonzero denominators")
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den)).expect("nonzero denominators")
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        if other.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RatFunc::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn scale(&self, c: &Rat) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero(self.var());
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Exact evaluation; a vanishing denominator is a pole error.
    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole { at: x.to_string() });
        }
        Ok(self.num.eval(x) / d)
    }

    /// Coefficients c_0..c_{g_max} of the expansion r(N) = sum_g c_g N^{-g},
    /// computed exactly by reversed-polynomial series division. Requires
    /// deg num <= deg den (no positive powers of N).
    pub fn expand_in_inv_n(&self, g_max: usize) -> Result<Vec<Rat>> {
        if self.is_zero() {
            return Ok(vec![rat_i64(0); g_max + 1]);
        }
        let p = self.num.degree();
        let q = self.den.degree();
        if p > q {
            return Err(Error::PositiveLeadingPower { num_deg: p, den_deg: q });
        }
        // r(N) = N^{p-q} * ntilde(1/N)/dtilde(1/N) with reversed coefficients;
        // dtilde(0) = lead(den) != 0, so the quotient is a valid power series.
        let shift = q - p;
        let nrev: Vec<Rat> = (0..=p).map(|i| self.num.coeff(p - i)).collect();
        let drev: Vec<Rat> = (0..=q).map(|i| self.den.coeff(q - i)).collect();
        let order = g_max;
        let mut series = vec![rat_i64(0); order + 1];
        let d0 = drev[0].clone();
        for n in 0..=order {
            let mut acc = if n <= p { nrev[n].clone() } else { rat_i64(0) };
            for i in 1..=n.min(q) {
                acc -= &drev[i] * &series[n - i];
            }
            series[n] = acc / d0.clone();
        }
        // c_g = series[g - shift]; coefficients below the leading power vanish.
        let coeffs = (0..=g_max)
            .map(|g| {
                if g >= shift {
                    series[g - shift].clone()
                } else {
                    rat_i64(0)
                }
            })
            .collect();
        Ok(coeffs)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one(self.var()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Free-function alias for [`RatFunc::new`]: build and fully reduce.
pub fn ratfunc_reduce(num: Poly, den: Poly) -> Result<RatFunc> {
    RatFunc::new(num, den)
}
