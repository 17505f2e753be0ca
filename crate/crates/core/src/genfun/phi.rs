//! Residual of the third-order differential equation satisfied by the
//! bivariate generating function phi(z, zeta) of the complex-class expansion
//! coefficients, checked layer by layer in the expansion parameter.

use crate::coeffs::{coeff_table_beta2, CoeffTable};
use crate::exact::poly::{Poly, Var};
use crate::exact::quadratic::SpectralCurve;
use crate::exact::rat::rat_i64;
use crate::exact::series::TruncSeries;

/// Residual series, one per layer g = 0..=order_zeta, of
///   z^2 F_{g-2}''' + z F_{g-2}'' - y F_g' + (z - 3) F_g + 4 delta_{g,0},
/// each truncated at z^order_z. All residuals vanish identically when the
/// layers satisfy the equation.
pub fn phi_ode_residual(order_z: usize, order_zeta: usize) -> Vec<TruncSeries> {
    let table = coeff_table_beta2(order_z + 1, order_zeta);
    phi_ode_residual_from_table(&table, order_z, order_zeta)
}

/// Same residuals from a caller-supplied table; a corrupted entry shows up
/// as a nonzero residual coefficient in its own and neighboring layers.
pub fn phi_ode_residual_from_table(
    table: &CoeffTable,
    order_z: usize,
    order_zeta: usize,
) -> Vec<TruncSeries> {
    assert!(order_z >= 2, "residual needs order_z >= 2 for the third derivative");
    assert!(
        table.k_max >= order_z + 1 && table.g_max >= order_zeta,
        "table too small for the requested residual orders"
    );
    let var = Var::Z;
    let y = SpectralCurve::poly(var);
    let zm3 = Poly::from_i64(&[-3, 1], var);
    (0..=order_zeta)
        .map(|g| {
            let f_g = TruncSeries::new(table.layer(g)[..=order_z + 1].to_vec(), var);
            let mut residual = f_g
                .derivative()
                .mul_poly(&y)
                .neg()
                .add(&f_g.mul_poly(&zm3).truncate(order_z));
            if g >= 2 {
                let f_prev =
                    TruncSeries::new(table.layer(g - 2)[..=order_z + 1].to_vec(), var);
                let d2 = f_prev.derivative().derivative();
                let d3 = d2.derivative();
                residual = residual
                    .add(&d3.mul_xpow(2))
                    .add(&d2.mul_xpow(1).truncate(order_z));
            }
            if g == 0 {
                residual =
                    residual.add(&TruncSeries::from_poly(&Poly::constant(rat_i64(4), var), order_z));
            }
            residual
        })
        .collect()
}
