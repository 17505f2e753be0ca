//! Polynomial families: P_k in zeta by its three-term recursion, R_g in z
//! extracted from the beta = 2 series product with tail verification, and
//! the rational evaluator J_k(zeta) = P_k(zeta^2) / prod_j (1 - j^2 zeta^2).

use num::Zero;

use crate::coeffs::{coeff_table_beta2, CoeffTable};
use crate::error::{Error, Result};
use crate::moments::Beta;
use crate::exact::poly::{Poly, Var};
use crate::exact::quadratic::SpectralCurve;
use crate::exact::rat::{rat_frac, rat_i64, Rat};
use crate::exact::series::TruncSeries;

/// Tail-verification depth used when a caller does not choose one.
pub const DEFAULT_CHECK_DEPTH: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    P,
    R,
}

/// A member of one of the two polynomial families, with its coefficient
/// sequence padded to the stated length (2g-1 entries for R_g).
#[derive(Debug, Clone)]
pub struct PolyFamily {
    pub kind: FamilyKind,
    pub index: usize,
    pub poly: Poly,
}

impl PolyFamily {
    /// Coefficients ascending in the indeterminate; for R_g the sequence
    /// a_{g,0}..a_{g,2g-2} is padded with trailing zeros to full length.
    pub fn coefficient_sequence(&self) -> Vec<Rat> {
        let len = match self.kind {
            FamilyKind::P => self.poly.degree() + 1,
            FamilyKind::R => 2 * self.index - 1,
        };
        (0..len).map(|j| self.poly.coeff(j)).collect()
    }
}

/// P_k via k P_k = 3(2k-3) P_{k-1} - (k-3)(1 - (k-2)^2 zeta) P_{k-2},
/// seeded P_0 = P_1 = 1.
pub fn p_polynomial(k: usize) -> Poly {
    let one = Poly::one(Var::Zeta);
    if k <= 1 {
        return one;
    }
    let (mut prev, mut cur) = (one.clone(), one);
    for j in 2..=k {
        let ji = j as i64;
        let c = Poly::from_i64(&[ji - 3, -(ji - 3) * (ji - 2) * (ji - 2)], Var::Zeta);
        let next = cur
            .scale(&rat_i64(3 * (2 * ji - 3)))
            .sub(&prev.mul(&c))
            .scale(&rat_frac(1, ji));
        prev = cur;
        cur = next;
    }
    cur
}

/// J_k(zeta0) = P_k(zeta0^2) / prod_{j=0}^{k-1} (1 - j^2 zeta0^2); a finite-N
/// moment evaluator: J_k(1/N) = tau_k^(2)(N).
pub fn j_eval(k: usize, zeta0: &Rat) -> Result<Rat> {
    let z2 = zeta0 * zeta0;
    let mut den = rat_i64(1);
    for j in 0..k {
        let factor = rat_i64(1) - rat_i64((j * j) as i64) * &z2;
        if factor.is_zero() {
            return Err(Error::JPole { j: j as u32 });
        }
        den *= factor;
    }
    Ok(p_polynomial(k).eval(&z2) / den)
}

fn validate_r_index(g: usize) -> Result<()> {
    if g == 0 || g % 2 != 0 {
        return Err(Error::InvalidArgument {
            what: format!("R_g requires even g >= 2, got {g}"),
        });
    }
    Ok(())
}

/// R_g for even g >= 2: the order-(2g-2) truncation of
/// (sum_k tau_{k,g}^(2) z^k) * y^((3g-1)/2). The product is verified to
/// start at z^2 and to have vanishing coefficients 2g-1..2g-2+check_depth;
/// a nonzero coefficient there would falsify the stated functional form.
pub fn r_polynomial(g: usize, check_depth: usize) -> Result<PolyFamily> {
    validate_r_index(g)?;
    let order = 2 * g - 2 + check_depth;
    r_polynomial_from_table(&coeff_table_beta2(order, g), g, check_depth)
}

/// R_g extracted from an existing beta = 2 table, which must cover
/// k <= 2g-2+check_depth and layer g. Lets the integrality verifier extract
/// many R_g from one shared table instead of rebuilding it per g.
pub fn r_polynomial_from_table(
    table: &CoeffTable,
    g: usize,
    check_depth: usize,
) -> Result<PolyFamily> {
    validate_r_index(g)?;
    let order = 2 * g - 2 + check_depth;
    if table.beta != Beta::Two || table.k_max < order || table.g_max < g {
        return Err(Error::InvalidArgument {
            what: format!(
                "R_{g} extraction needs a beta = 2 table covering k <= {order} and layer {g}"
            ),
        });
    }
    let f_series = TruncSeries::new(table.layer(g)[..=order].to_vec(), Var::Z);
    let y = SpectralCurve::poly(Var::Z);
    let mut product = f_series.mul(&SpectralCurve::sqrt_series(order, Var::Z));
    for _ in 0..(3 * g - 2) / 2 {
        product = product.mul_poly(&y);
    }
    for index in (0..=1).chain(2 * g - 1..=order) {
        if !product.coeff(index).is_zero() {
            return Err(Error::FunctionalFormViolated { g: g as u32, index });
        }
    }
    let poly = Poly::new(product.coeffs()[..=2 * g - 2].to_vec(), Var::Z);
    Ok(PolyFamily { kind: FamilyKind::R, index: g, poly })
}
