//! The quadratic extension Q(sqrt 2) and the spectral curve y(z) = z^2 - 6z + 1.
//!
//! The only irrationality in the exact layer is sqrt 2, through the support
//! edges 3 +- 2*sqrt(2) of the limiting eigenvalue density. General algebraic
//! numbers are out of scope.

use num::Zero;

use crate::exact::poly::{Poly, Var};
use crate::exact::rat::{rat_i64, Rat};
use crate::exact::series::TruncSeries;

/// a + b*sqrt(2) with exact rational a, b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quad {
    pub a: Rat,
    pub b: Rat,
}

impl Quad {
    pub fn new(a: Rat, b: Rat) -> Self {
        Quad { a, b }
    }

    pub fn from_i64(a: i64, b: i64) -> Self {
        Quad { a: rat_i64(a), b: rat_i64(b) }
    }

    pub fn zero() -> Self {
        Quad::from_i64(0, 0)
    }

    pub fn one() -> Self {
        Quad::from_i64(1, 0)
    }

    pub fn add(&self, o: &Quad) -> Quad {
        Quad { a: &self.a + &o.a, b: &self.b + &o.b }
    }

    pub fn sub(&self, o: &Quad) -> Quad {
        Quad { a: &self.a - &o.a, b: &self.b - &o.b }
    }

    pub fn mul(&self, o: &Quad) -> Quad {
        // (a + b s)(c + d s) = ac + 2bd + (ad + bc) s, s^2 = 2
        Quad {
            a: &self.a * &o.a + rat_i64(2) * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }

    pub fn scale(&self, c: &Rat) -> Quad {
        Quad { a: &self.a * c, b: &self.b * c }
    }

    /// Conjugate a - b*sqrt(2).
    pub fn conj(&self) -> Quad {
        Quad { a: self.a.clone(), b: -self.b.clone() }
    }

    /// Field norm a^2 - 2b^2.
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - rat_i64(2) * &self.b * &self.b
    }

    pub fn inv(&self) -> Quad {
        let n = self.norm();
        assert!(!n.is_zero(), "inverting zero in Q(sqrt 2)");
        self.conj().scale(&(rat_i64(1) / n))
    }

    pub fn powi(&self, mut e: u32) -> Quad {
        let mut base = self.clone();
        let mut acc = Quad::one();
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

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

/// The spectral curve of the ensemble: y(z) = z^2 - 6z + 1, vanishing at the
/// support edges 3 +- 2*sqrt(2).
pub struct SpectralCurve;

impl SpectralCurve {
    /// y as an exact polynomial in the given indeterminate (z by default,
    /// x inside integral recursions).
    pub fn poly(var: Var) -> Poly {
        Poly::from_i64(&[1, -6, 1], var)
    }

    /// y'(z) = 2z - 6.
    pub fn derivative(var: Var) -> Poly {
        Poly::from_i64(&[-6, 2], var)
    }

    /// Lower edge 3 - 2*sqrt(2).
    pub fn edge_minus() -> Quad {
        Quad::from_i64(3, -2)
    }

    /// Upper edge 3 + 2*sqrt(2).
    pub fn edge_plus() -> Quad {
        Quad::from_i64(3, 2)
    }

    /// Exact evaluation of y at a point of Q(sqrt 2).
    pub fn eval_quad(q: &Quad) -> Quad {
        let six = Quad::from_i64(6, 0);
        let one = Quad::one();
        q.mul(q).sub(&six.mul(q)).add(&one)
    }

    /// Truncated series of y (exact; y is a polynomial).
    pub fn series(order: usize, var: Var) -> TruncSeries {
        TruncSeries::from_poly(&Self::poly(var), order)
    }

    /// Truncated series of sqrt(y), branch +1 at z = 0.
    pub fn sqrt_series(order: usize, var: Var) -> TruncSeries {
        Self::series(order, var).sqrt().expect("y(0) = 1")
    }
}
