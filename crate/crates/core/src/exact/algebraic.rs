//! Truncated series in the quadratic function-field extension by sqrt(y(z)).
//!
//! An element is a(z) + b(z)*sqrt(y) with truncated-series parts a, b and the
//! branch fixed by sqrt(y)(0) = +1. The split is not canonical (the plain
//! expansion is); all exported checks compare plain expansions.

use crate::error::Result;
use crate::exact::poly::Var;
use crate::exact::quadratic::SpectralCurve;
use crate::exact::series::TruncSeries;

#[derive(Debug, Clone)]
pub struct AlgebraicSeries {
    pub a: TruncSeries,
    pub b: TruncSeries,
}

impl AlgebraicSeries {
    pub fn new(a: TruncSeries, b: TruncSeries) -> Self {
        assert_eq!(a.var(), b.var(), "mixed indeterminates");
        AlgebraicSeries { a, b }
    }

    pub fn from_plain(a: TruncSeries) -> Self {
        let b = TruncSeries::zero(a.order(), a.var());
        AlgebraicSeries { a, b }
    }

    pub fn zero(order: usize, var: Var) -> Self {
        AlgebraicSeries {
            a: TruncSeries::zero(order, var),
            b: TruncSeries::zero(order, var),
        }
    }

    pub fn var(&self) -> Var {
        self.a.var()
    }

    pub fn order(&self) -> usize {
        self.a.order().min(self.b.order())
    }

    pub fn truncate(&self, order: usize) -> Self {
        AlgebraicSeries { a: self.a.truncate(order), b: self.b.truncate(order) }
    }

    /// Plain truncated-series expansion a + b*sqrt_series(y).
    pub fn expand(&self) -> TruncSeries {
        let order = self.order();
        let sqrt_y = SpectralCurve::sqrt_series(order, self.var());
        self.a.truncate(order).add(&self.b.truncate(order).mul(&sqrt_y))
    }

    pub fn add(&self, o: &AlgebraicSeries) -> AlgebraicSeries {
        AlgebraicSeries { a: self.a.add(&o.a), b: self.b.add(&o.b) }
    }

    pub fn sub(&self, o: &AlgebraicSeries) -> AlgebraicSeries {
        AlgebraicSeries { a: self.a.sub(&o.a), b: self.b.sub(&o.b) }
    }

    pub fn neg(&self) -> AlgebraicSeries {
        AlgebraicSeries { a: self.a.neg(), b: self.b.neg() }
    }

    pub fn scale(&self, c: &crate::exact::rat::Rat) -> AlgebraicSeries {
        AlgebraicSeries { a: self.a.scale(c), b: self.b.scale(c) }
    }

    pub fn mul(&self, o: &AlgebraicSeries) -> AlgebraicSeries {
        // (a1 + b1 s)(a2 + b2 s) = a1 a2 + y b1 b2 + (a1 b2 + b1 a2) s
        let y = SpectralCurve::poly(self.var());
        let a = self.a.mul(&o.a).add(&self.b.mul(&o.b).mul_poly(&y));
        let b = self.a.mul(&o.b).add(&self.b.mul(&o.a));
        AlgebraicSeries { a, b }
    }

    pub fn mul_poly(&self, p: &crate::exact::poly::Poly) -> AlgebraicSeries {
        AlgebraicSeries { a: self.a.mul_poly(p), b: self.b.mul_poly(p) }
    }

    /// Multiply by sqrt(y): (a + b s) s = b y + a s.
    pub fn mul_sqrt_y(&self) -> AlgebraicSeries {
        let y = SpectralCurve::poly(self.var());
        AlgebraicSeries { a: self.b.mul_poly(&y), b: self.a.clone() }
    }

    /// Divide by sqrt(y): (a + b s)/s = b + (a/y) s. y(0) = 1 keeps this exact.
    pub fn div_sqrt_y(&self) -> Result<AlgebraicSeries> {
        let order = self.order();
        let y_inv = SpectralCurve::series(order, self.var()).invert()?;
        Ok(AlgebraicSeries { a: self.b.truncate(order), b: self.a.truncate(order).mul(&y_inv) })
    }

    /// Divide by y.
    pub fn div_y(&self) -> Result<AlgebraicSeries> {
        let order = self.order();
        let y_inv = SpectralCurve::series(order, self.var()).invert()?;
        Ok(AlgebraicSeries {
            a: self.a.truncate(order).mul(&y_inv),
            b: self.b.truncate(order).mul(&y_inv),
        })
    }

    /// d/dz (a + b sqrt y) = a' + (b' + b y'/(2y)) sqrt y. Order drops by 1.
    pub fn derivative(&self) -> Result<AlgebraicSeries> {
        let order = self.order();
        let var = self.var();
        let a = self.a.truncate(order).derivative();
        let y_inv = SpectralCurve::series(order, var).invert()?;
        let half_yprime = SpectralCurve::derivative(var).scale(&crate::exact::rat::rat_frac(1, 2));
        let correction = self.b.truncate(order).mul_poly(&half_yprime).mul(&y_inv);
        let b = self.b.truncate(order).derivative().add(&correction.truncate(order - 1));
        Ok(AlgebraicSeries { a, b })
    }

    /// Formal antiderivative vanishing at 0, computed on the plain expansion;
    /// the result lives in the plain part (the split is not canonical).
    pub fn integrate(&self) -> AlgebraicSeries {
        AlgebraicSeries::from_plain(self.expand().integrate())
    }
}
