//! Generating functions of the expansion coefficients: the polynomial
//! families P_k and R_g, the rational moment evaluator J_k, the partial
//! generating functions F_g and f_g for both symmetry classes, and the
//! residual check of the third-order equation satisfied by the bivariate
//! series phi(z, zeta).

mod families;
mod partial;
mod phi;

pub use families::{
    j_eval, p_polynomial, r_polynomial, r_polynomial_from_table, FamilyKind, PolyFamily,
    DEFAULT_CHECK_DEPTH,
};
pub use partial::{f_beta1_pair, f_beta2_series};
pub use phi::{phi_ode_residual, phi_ode_residual_from_table};
