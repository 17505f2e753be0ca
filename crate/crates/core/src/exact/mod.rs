//! Foundational exact arithmetic: rationals, polynomials, rational functions,
//! truncated power series, and the quadratic extensions by sqrt(2) and sqrt(y).

pub mod algebraic;
pub mod poly;
pub mod quadratic;
pub mod rat;
pub mod ratfunc;
pub mod series;

pub use algebraic::AlgebraicSeries;
pub use poly::{Poly, Var};
pub use quadratic::{Quad, SpectralCurve};
pub use rat::Rat;
pub use ratfunc::{ratfunc_reduce, RatFunc};
pub use series::TruncSeries;
