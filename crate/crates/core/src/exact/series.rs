//! Truncated power series with explicit order bookkeeping.
//!
//! A series of order n stores coefficients 0..=n; coefficients beyond the
//! order are unknown, not zero. Binary operations truncate to the minimum
//! order of the operands so validity is never overstated.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::poly::{Poly, Var};
use crate::exact::rat::{rat_i64, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Rat>,
    var: Var,
}

impl TruncSeries {
    /// Series from explicit coefficients; the order is coeffs.len() - 1.
    pub fn new(coeffs: Vec<Rat>, var: Var) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        TruncSeries { coeffs, var }
    }

    pub fn zero(order: usize, var: Var) -> Self {
        TruncSeries { coeffs: vec![rat_i64(0); order + 1], var }
    }

    pub fn one(order: usize, var: Var) -> Self {
        let mut s = Self::zero(order, var);
        s.coeffs[0] = rat_i64(1);
        s
    }

    /// Truncation of an exact polynomial (coefficients beyond its degree are
    /// genuinely zero, so any order is valid).
    pub fn from_poly(p: &Poly, order: usize) -> Self {
        let coeffs = (0..=order).map(|i| p.coeff(i)).collect();
        TruncSeries { coeffs, var: p.var() }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        assert!(i <= self.order(), "coefficient {i} beyond truncation order {}", self.order());
        self.coeffs[i].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_var(&self, other: &TruncSeries) {
        assert_eq!(self.var, other.var, "mixed series indeterminates");
    }

    pub fn truncate(&self, order: usize) -> TruncSeries {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncSeries { coeffs: self.coeffs[..=order].to_vec(), var: self.var }
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        self.check_var(other);
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect();
        TruncSeries { coeffs, var: self.var }
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        self.check_var(other);
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect();
        TruncSeries { coeffs, var: self.var }
    }

    pub fn neg(&self) -> TruncSeries {
        TruncSeries { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(), var: self.var }
    }

    pub fn scale(&self, c: &Rat) -> TruncSeries {
        TruncSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect(), var: self.var }
    }

    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        self.check_var(other);
        let order = self.order().min(other.order());
        let mut coeffs = vec![rat_i64(0); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        TruncSeries { coeffs, var: self.var }
    }

    /// Multiplication by an exact polynomial keeps the order: every product
    /// coefficient up to the order depends only on known series coefficients.
    pub fn mul_poly(&self, p: &Poly) -> TruncSeries {
        assert_eq!(self.var, p.var(), "mixed series indeterminates");
        let order = self.order();
        let mut coeffs = vec![rat_i64(0); order + 1];
        for (j, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() || j > order {
                continue;
            }
            for i in 0..=(order - j) {
                coeffs[i + j] += &self.coeffs[i] * c;
            }
        }
        TruncSeries { coeffs, var: self.var }
    }

    /// Multiply by x^m; known range shifts up with the coefficients.
    pub fn mul_xpow(&self, m: usize) -> TruncSeries {
        let mut coeffs = vec![rat_i64(0); m];
        coeffs.extend(self.coeffs.iter().cloned());
        TruncSeries { coeffs, var: self.var }
    }

    /// Termwise derivative; order drops by 1.
    pub fn derivative(&self) -> TruncSeries {
        assert!(self.order() >= 1, "cannot differentiate an order-0 series");
        let coeffs = (1..=self.order())
            .map(|i| &self.coeffs[i] * rat_i64(i as i64))
            .collect();
        TruncSeries { coeffs, var: self.var }
    }

    /// Formal antiderivative with zero constant term; order rises by 1.
    pub fn integrate(&self) -> TruncSeries {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(rat_i64(0));
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / rat_i64(i as i64 + 1));
        }
        TruncSeries { coeffs, var: self.var }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn invert(&self) -> Result<TruncSeries> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let order = self.order();
        let mut inv = vec![rat_i64(0); order + 1];
        inv[0] = rat_i64(1) / self.coeffs[0].clone();
        for n in 1..=order {
            let mut acc = rat_i64(0);
            for i in 1..=n {
                acc += &self.coeffs[i] * &inv[n - i];
            }
            inv[n] = -acc / self.coeffs[0].clone();
        }
        Ok(TruncSeries { coeffs: inv, var: self.var })
    }

    /// Square root with branch fixed by g(0) = +1; requires constant term 1.
    pub fn sqrt(&self) -> Result<TruncSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BranchUndefined { got: self.coeffs[0].to_string() });
        }
        let order = self.order();
        let mut g = vec![rat_i64(0); order + 1];
        g[0] = rat_i64(1);
        for n in 1..=order {
            // f_n = 2 g_n + sum_{i=1}^{n-1} g_i g_{n-i}
            let mut acc = self.coeffs[n].clone();
            for i in 1..n {
                acc -= &g[i] * &g[n - i];
            }
            g[n] = acc / rat_i64(2);
        }
        Ok(TruncSeries { coeffs: g, var: self.var })
    }

    /// Integer power by repeated multiplication (order preserved).
    pub fn powi(&self, mut e: usize) -> TruncSeries {
        let mut base = self.clone();
        let mut acc = TruncSeries::one(self.order(), self.var);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}
