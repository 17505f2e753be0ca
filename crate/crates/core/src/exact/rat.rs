//! Exact scalar arithmetic: arbitrary-precision rationals in canonical form.
//!
//! `Rat` is `num`'s `BigRational`, which already maintains the canonical-form
//! invariant (reduced, positive denominator). The helpers here cover the
//! conversions the rest of the crate needs.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat_i64(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Fraction `num/den` in canonical form.
pub fn rat_frac(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_big(n: BigInt) -> Rat {
    Rat::from_integer(n)
}

/// True when the canonical denominator is 1.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Conversion to f64; exact values in this crate stay well inside the
/// exponent range only after the caller has normalized, so saturate on
/// overflow instead of panicking.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Exact factorial.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Gamma(a)/Gamma(b) for integers a >= b >= 1 as the exact product b(b+1)...(a-1).
pub fn gamma_ratio(a: u64, b: u64) -> BigInt {
    assert!(b >= 1 && a >= b, "gamma_ratio needs a >= b >= 1");
    let mut acc = BigInt::one();
    for i in b..a {
        acc *= BigInt::from(i);
    }
    acc
}

/// Decimal-string form of a big integer (sign included).
pub fn bigint_to_string(n: &BigInt) -> String {
    n.to_str_radix(10)
}

pub fn bigint_from_string(s: &str) -> Option<BigInt> {
    BigInt::parse_bytes(s.as_bytes(), 10)
}

/// Sign as -1/0/+1.
pub fn sign_of(n: &BigInt) -> i32 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
