//! Fixed-point decimal arithmetic on arbitrary-precision integers: a value
//! is mantissa * 10^(-scale). Division and rescaling round to nearest and
//! square roots truncate, so every operation is accurate to one unit in the
//! last place; callers carry guard digits and round away the slack before
//! quoting results.

use num::{BigInt, Signed, Zero};

use crate::exact::quadratic::Quad;
use crate::exact::rat::{rat_to_f64, Rat};

fn pow10(e: usize) -> BigInt {
    BigInt::from(10u32).pow(e as u32)
}

/// Nearest-integer division, half away from zero; the divisor must be positive.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    debug_assert!(b.is_positive());
    let doubled = a * 2;
    if a.is_negative() {
        (doubled - b) / (b * 2)
    } else {
        (doubled + b) / (b * 2)
    }
}

/// Mantissa of atan(1/x) at the given scale via the alternating series.
fn atan_inv_mantissa(x: i64, scale: usize) -> BigInt {
    let x = BigInt::from(x);
    let x_sq = &x * &x;
    let mut power = pow10(scale) / &x;
    let mut acc = BigInt::zero();
    let mut i = 0u32;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * i + 1);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        power /= &x_sq;
        i += 1;
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedDecimal {
    mantissa: BigInt,
    scale: usize,
}

impl FixedDecimal {
    pub fn from_rat(r: &Rat, scale: usize) -> Self {
        FixedDecimal { mantissa: div_round(&(r.numer() * pow10(scale)), r.denom()), scale }
    }

    /// Exact value of a + b*sqrt(2).
    pub fn from_quad(q: &Quad, scale: usize) -> Self {
        let work = scale + 5;
        let a = FixedDecimal::from_rat(&q.a, work);
        let b = FixedDecimal::from_rat(&q.b, work);
        a.add(&b.mul(&FixedDecimal::sqrt2(work))).rescale(scale)
    }

    /// sqrt(2) to the given scale.
    pub fn sqrt2(scale: usize) -> Self {
        FixedDecimal { mantissa: (BigInt::from(2) * pow10(2 * scale)).sqrt(), scale }
    }

    /// pi to the given scale, via pi = 16 atan(1/5) - 4 atan(1/239).
    pub fn pi(scale: usize) -> Self {
        let work = scale + 5;
        let mantissa = atan_inv_mantissa(5, work) * 16 - atan_inv_mantissa(239, work) * 4;
        FixedDecimal { mantissa, scale: work }.rescale(scale)
    }

    pub fn scale(&self) -> usize {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn to_rat(&self) -> Rat {
        Rat::new(self.mantissa.clone(), pow10(self.scale))
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.to_rat())
    }

    /// floor(log10 |value|); 0 for a zero mantissa.
    pub fn leading_exponent(&self) -> i64 {
        if self.mantissa.is_zero() {
            return 0;
        }
        let digits = self.mantissa.magnitude().to_str_radix(10).len() as i64;
        digits - 1 - self.scale as i64
    }

    /// Exact when raising the scale, rounded to nearest when lowering it.
    pub fn rescale(&self, scale: usize) -> Self {
        if scale >= self.scale {
            FixedDecimal { mantissa: &self.mantissa * pow10(scale - self.scale), scale }
        } else {
            FixedDecimal {
                mantissa: div_round(&self.mantissa, &pow10(self.scale - scale)),
                scale,
            }
        }
    }

    fn common(&self, other: &Self) -> (BigInt, BigInt, usize) {
        let scale = self.scale.max(other.scale);
        (self.rescale(scale).mantissa, other.rescale(scale).mantissa, scale)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b, scale) = self.common(other);
        FixedDecimal { mantissa: a + b, scale }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (a, b, scale) = self.common(other);
        FixedDecimal { mantissa: a - b, scale }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b, scale) = self.common(other);
        FixedDecimal { mantissa: div_round(&(a * b), &pow10(scale)), scale }
    }

    pub fn div(&self, other: &Self) -> Self {
        let (mut a, mut b, scale) = self.common(other);
        assert!(!b.is_zero(), "fixed-point division by zero");
        if b.is_negative() {
            a = -a;
            b = -b;
        }
        FixedDecimal { mantissa: div_round(&(a * pow10(scale)), &b), scale }
    }

    /// Truncated square root of a nonnegative value.
    pub fn sqrt(&self) -> Self {
        assert!(!self.mantissa.is_negative(), "fixed-point sqrt of a negative value");
        FixedDecimal { mantissa: (&self.mantissa * pow10(self.scale)).sqrt(), scale: self.scale }
    }

    /// Decimal form with exactly `scale` fractional digits.
    pub fn decimal_string(&self) -> String {
        let digits = self.mantissa.magnitude().to_str_radix(10);
        let (int_part, frac_part) = if digits.len() > self.scale {
            let split = digits.len() - self.scale;
            (digits[..split].to_string(), digits[split..].to_string())
        } else {
            ("0".to_string(), format!("{digits:0>width$}", width = self.scale))
        };
        let sign = if self.mantissa.is_negative() { "-" } else { "" };
        if self.scale == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    }
}
