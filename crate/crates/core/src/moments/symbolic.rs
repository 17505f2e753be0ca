//! Delay-time moments as exact rational functions of N via the finite-N
//! three-term recursions.

use super::Beta;
use crate::exact::poly::{Poly, Var};
use crate::exact::rat::rat_i64;
use crate::exact::ratfunc::RatFunc;

/// A moment tau_k (or auxiliary b_k) as an exact element of Q(N).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentRatFunc {
    pub beta: Beta,
    pub k: usize,
    pub value: RatFunc,
}

fn n_poly(coeffs: &[i64]) -> RatFunc {
    RatFunc::from_poly(Poly::from_i64(coeffs, Var::N))
}

/// tau_0..tau_{k_max} for beta = 2. The recursion
/// (N^2 - k^2)(k+1) tau_{k+1} = 3N^2(2k-1) tau_k - N^2(k-2) tau_{k-1}
/// is solved for tau_{k+1}; division is exact in Q(N).
pub fn tau_beta2_symbolic(k_max: usize) -> Vec<MomentRatFunc> {
    let one = RatFunc::one(Var::N);
    let n_sq = n_poly(&[0, 0, 1]);
    let mut taus: Vec<RatFunc> = vec![one.clone(), one];
    for k in 1..k_max.max(1) {
        let ki = k as i64;
        let lhs_coeff = n_poly(&[-(ki * ki), 0, 1]).scale(&rat_i64(ki + 1));
        let rhs = n_sq
            .scale(&rat_i64(3 * (2 * ki - 1)))
            .mul(&taus[k])
            .sub(&n_sq.scale(&rat_i64(ki - 2)).mul(&taus[k - 1]));
        taus.push(rhs.div(&lhs_coeff).expect("nonzero polynomial divisor"));
    }
    taus.truncate(k_max + 1);
    taus.into_iter()
        .enumerate()
        .map(|(k, value)| MomentRatFunc { beta: Beta::Two, k, value })
        .collect()
}

/// (tau_0..tau_{k_max}, b_0..b_{k_max}) for beta = 1. The auxiliary sequence
/// comes first:
///   ((N+1)^2 - k^2)(k+1) b_{k+1} = (3N-1)(2k-1)N b_k - (k-2)N^2 b_{k-1},
/// then the inhomogeneous relation is solved for tau_{k+1}:
///   (4k(k+1)+1-(N+1)^2) tau_{k+1} + 6N^2 tau_k - N^2 tau_{k-1}
///     = 3/(k+1) ((k+3N)N b_k - N^2 b_{k-1}).
pub fn tau_beta1_symbolic(k_max: usize) -> (Vec<MomentRatFunc>, Vec<MomentRatFunc>) {
    let one = RatFunc::one(Var::N);
    let n = n_poly(&[0, 1]);
    let n_sq = n_poly(&[0, 0, 1]);

    let b0 = n_poly(&[-1, 1]).div(&n).expect("N != 0");
    let b1 = n_poly(&[-1, 1]).div(&n_poly(&[1, 1])).expect("N+1 != 0");
    let mut bs: Vec<RatFunc> = vec![b0, b1];
    for k in 1..k_max.max(1) {
        let ki = k as i64;
        // (N+1)^2 - k^2 as a polynomial in N
        let lhs_coeff = n_poly(&[1 - ki * ki, 2, 1]).scale(&rat_i64(ki + 1));
        let rhs = n_poly(&[0, -1, 3])
            .scale(&rat_i64(2 * ki - 1))
            .mul(&bs[k])
            .sub(&n_sq.scale(&rat_i64(ki - 2)).mul(&bs[k - 1]));
        bs.push(rhs.div(&lhs_coeff).expect("nonzero polynomial divisor"));
    }
    bs.truncate(k_max + 1);

    let mut taus: Vec<RatFunc> = vec![one.clone(), one];
    for k in 1..k_max.max(1) {
        let ki = k as i64;
        let rhs = n_poly(&[0, ki, 3])
            .mul(&bs[k])
            .sub(&n_sq.mul(&bs[k - 1]))
            .scale(&crate::exact::rat::rat_frac(3, ki + 1));
        // 4k(k+1) + 1 - (N+1)^2
        let lhs_coeff = n_poly(&[4 * ki * (ki + 1), -2, -1]);
        let num = rhs
            .sub(&n_sq.scale(&rat_i64(6)).mul(&taus[k]))
            .add(&n_sq.mul(&taus[k - 1]));
        taus.push(num.div(&lhs_coeff).expect("nonzero polynomial divisor"));
    }
    taus.truncate(k_max + 1);

    let wrap = |beta: Beta, v: Vec<RatFunc>| {
        v.into_iter()
            .enumerate()
            .map(|(k, value)| MomentRatFunc { beta, k, value })
            .collect::<Vec<_>>()
    };
    (wrap(Beta::One, taus), wrap(Beta::One, bs))
}
