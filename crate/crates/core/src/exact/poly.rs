//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored ascending by degree; the top coefficient is
//! nonzero unless the polynomial is zero. Every polynomial carries its
//! indeterminate label and mixed-variable arithmetic is a programming error.

use std::fmt;

use num::{BigInt, One, Signed, Zero};

use crate::exact::rat::{rat_big, rat_i64, Rat};

/// Indeterminate label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    N,
    Z,
    Zeta,
    S,
    X,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::N => "N",
            Var::Z => "z",
            Var::Zeta => "zeta",
            Var::S => "s",
            Var::X => "x",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
    var: Var,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>, var: Var) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs, var }
    }

    pub fn zero(var: Var) -> Self {
        Poly { coeffs: Vec::new(), var }
    }

    pub fn one(var: Var) -> Self {
        Poly::constant(rat_i64(1), var)
    }

    pub fn constant(c: Rat, var: Var) -> Self {
        Poly::new(vec![c], var)
    }

    /// The monomial x.
    pub fn x(var: Var) -> Self {
        Poly::new(vec![rat_i64(0), rat_i64(1)], var)
    }

    pub fn from_i64(coeffs: &[i64], var: Var) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat_i64(c)).collect(), var)
    }

    pub fn from_bigint(coeffs: &[BigInt], var: Var) -> Self {
        Poly::new(coeffs.iter().map(|c| rat_big(c.clone())).collect(), var)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; 0 for the zero polynomial (callers check `is_zero` first
    /// where the distinction matters).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(|| rat_i64(0))
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(|| rat_i64(0))
    }

    fn check_var(&self, other: &Poly) {
        assert_eq!(self.var, other.var, "mixed polynomial indeterminates");
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check_var(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Poly::new(coeffs, self.var)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.check_var(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Poly::new(coeffs, self.var)
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect(), self.var)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check_var(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.var);
        }
        let mut coeffs = vec![rat_i64(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs, self.var)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect(), self.var)
    }

    /// Multiply by x^m.
    pub fn shift_up(&self, m: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![rat_i64(0); m];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly::new(coeffs, self.var)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = rat_i64(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat_i64(i as i64))
            .collect();
        Poly::new(coeffs, self.var)
    }

    /// Euclidean division: self = q*div + r with deg r < deg div.
    pub fn divrem(&self, div: &Poly) -> (Poly, Poly) {
        self.check_var(div);
        assert!(!div.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut q = vec![rat_i64(0); self.coeffs.len().saturating_sub(div.coeffs.len()) + 1];
        let dlead = div.leading();
        while !rem.is_zero() && rem.coeffs.len() >= div.coeffs.len() {
            let shift = rem.degree() - div.degree();
            let factor = rem.leading() / dlead.clone();
            q[shift] = factor.clone();
            let sub = div.shift_up(shift).scale(&factor);
            rem = rem.sub(&sub);
            if rem.coeffs.len() > shift + div.coeffs.len() {
                // exact cancellation of the top term is guaranteed
                unreachable!("leading term did not cancel");
            }
        }
        (Poly::new(q, self.var), rem)
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.check_var(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scale so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading();
        self.scale(&(rat_i64(1) / lead))
    }

    /// True when every coefficient is an integer.
    pub fn is_integer_poly(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Substitute: coefficients of self(x) read off with x := other's variable
    /// is not supported; only relabeling of the indeterminate.
    pub fn relabel(&self, var: Var) -> Poly {
        Poly { coeffs: self.coeffs.clone(), var }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sym = self.var.symbol();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "{sym}")?;
                } else {
                    write!(f, "{sym}^{i}")?;
                }
            }
        }
        Ok(())
    }
}
