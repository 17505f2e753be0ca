//! 1/N-expansion coefficient tables tau_{k,g} (and the auxiliary b_{k,g} for
//! beta = 1) via the double recursions, marched layer by layer: within a
//! layer k increases and the k+1 term is solved for, so every division is by
//! k+1 with k >= 1.

use num::{BigInt, One, Zero};

use crate::exact::rat::{rat_big, rat_frac, rat_i64, Rat};
use crate::genfun::f_beta1_pair;
use crate::moments::Beta;

/// Large Schroeder numbers tau_{k,0} = 2F1(1-k, k; 2; -1), evaluated as the
/// terminating hypergeometric sum sum_i C(k-1,i) C(k+i-1,i)/(i+1). Each term
/// is an integer and consecutive terms differ by the exact integer ratio
/// (k-1-i)(k+i)/((i+1)(i+2)).
pub fn schroeder(k: usize) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    let k = k as i64;
    let mut term = BigInt::one();
    let mut sum = BigInt::zero();
    for i in 0..k {
        sum += &term;
        term *= BigInt::from((k - 1 - i) * (k + i));
        let den = BigInt::from((i + 1) * (i + 2));
        debug_assert!((&term % &den).is_zero(), "term ratio must stay integral");
        term /= den;
    }
    sum
}

/// Expansion coefficients tau_{k,g} for one symmetry class, with the
/// auxiliary b_{k,g} alongside for beta = 1. Values are exact rationals; the
/// conjecture that they are nonnegative integers is *checked* downstream
/// (module `integrality`), never assumed here.
#[derive(Debug, Clone)]
pub struct CoeffTable {
    pub beta: Beta,
    pub k_max: usize,
    pub g_max: usize,
    /// entries[g][k] = tau_{k,g}
    entries: Vec<Vec<Rat>>,
    /// aux[g][k] = b_{k,g} (beta = 1 only)
    aux: Option<Vec<Vec<Rat>>>,
}

impl CoeffTable {
    pub fn entry(&self, k: usize, g: usize) -> &Rat {
        &self.entries[g][k]
    }

    pub fn aux_entry(&self, k: usize, g: usize) -> Option<&Rat> {
        self.aux.as_ref().map(|a| &a[g][k])
    }

    /// All tau_{k,g} of one layer, k ascending: the coefficients of the
    /// partial generating function F_g.
    pub fn layer(&self, g: usize) -> &[Rat] {
        &self.entries[g]
    }

    pub fn aux_layer(&self, g: usize) -> Option<&[Rat]> {
        self.aux.as_ref().map(|a| a[g].as_slice())
    }

    /// Overwrite one entry. Exists for perturbation tests (e.g. checking
    /// that the residual of the generating-function equation detects a
    /// corrupted coefficient); not used by the computations themselves.
    pub fn replace_entry(&mut self, k: usize, g: usize, value: Rat) {
        self.entries[g][k] = value;
    }
}

fn schroeder_row(k_max: usize) -> Vec<Rat> {
    (0..=k_max).map(|k| rat_big(schroeder(k))).collect()
}

/// tau_{k,g}^(2) for 0 <= k <= k_max, 0 <= g <= g_max via
///   (k+1) tau_{k+1,g+2} = 3(2k-1) tau_{k,g+2} - (k-2) tau_{k-1,g+2}
///                         + k^2(k+1) tau_{k+1,g},
/// seeded by the Schroeder row g = 0, the zero row g = 1, and the columns
/// tau_{0,g} = tau_{1,g} = delta_{0,g}. Odd layers come out identically zero;
/// that is asserted by tests, not imposed.
pub fn coeff_table_beta2(k_max: usize, g_max: usize) -> CoeffTable {
    let width = k_max + 1;
    let mut layers: Vec<Vec<Rat>> = Vec::with_capacity(g_max + 1);
    layers.push(schroeder_row(k_max));
    if g_max >= 1 {
        layers.push(vec![rat_i64(0); width]);
    }
    for g in 2..=g_max {
        let mut row = vec![rat_i64(0); width];
        for k in 1..k_max {
            let ki = k as i64;
            row[k + 1] = (rat_i64(3 * (2 * ki - 1)) * &row[k] - rat_i64(ki - 2) * &row[k - 1]
                + rat_i64(ki * ki * (ki + 1)) * &layers[g - 2][k + 1])
                / rat_i64(ki + 1);
        }
        layers.push(row);
    }
    CoeffTable { beta: Beta::Two, k_max, g_max, entries: layers, aux: None }
}

/// tau_{k,g}^(1) and b_{k,g} for 0 <= k <= k_max, 0 <= g <= g_max. Each new
/// layer g is filled auxiliary-first:
///   b_{k+1,g} = 3(2k-1)/(k+1) b_{k,g} - (k-2)/(k+1) b_{k-1,g} - 2 b_{k+1,g-1}
///               - (2k-1)/(k+1) b_{k,g-1} - (1-k^2) b_{k+1,g-2},
///   tau_{k+1,g} = 6 tau_{k,g} - tau_{k-1,g} - 2 tau_{k+1,g-1}
///                 + 4k(k+1) tau_{k+1,g-2}
///                 + 3/(k+1) (b_{k-1,g} - 3 b_{k,g} - k b_{k,g-1}).
/// Rows g = 0 are Schroeder for both sequences; rows g = 1 are the series
/// coefficients of F_1 and f_1; columns are tau_{0,g} = tau_{1,g} = delta_{0,g},
/// b_{0,g} = delta_{0,g} - delta_{1,g}, b_{1,g} = (-1)^g (2 - delta_{0,g}).
pub fn coeff_table_beta1(k_max: usize, g_max: usize) -> CoeffTable {
    let width = k_max + 1;
    let mut taus: Vec<Vec<Rat>> = Vec::with_capacity(g_max + 1);
    let mut bs: Vec<Vec<Rat>> = Vec::with_capacity(g_max + 1);
    taus.push(schroeder_row(k_max));
    bs.push(schroeder_row(k_max));
    if g_max >= 1 {
        let (cap_f1, low_f1) =
            f_beta1_pair(1, k_max).expect("seed series are exact at any order");
        taus.push(cap_f1.expand().coeffs().to_vec());
        bs.push(low_f1.expand().coeffs().to_vec());
    }
    for g in 2..=g_max {
        let mut brow = vec![rat_i64(0); width];
        if k_max >= 1 {
            brow[1] = rat_i64(if g % 2 == 0 { 2 } else { -2 });
        }
        for k in 1..k_max {
            let ki = k as i64;
            brow[k + 1] = rat_frac(3 * (2 * ki - 1), ki + 1) * &brow[k]
                - rat_frac(ki - 2, ki + 1) * &brow[k - 1]
                - rat_i64(2) * &bs[g - 1][k + 1]
                - rat_frac(2 * ki - 1, ki + 1) * &bs[g - 1][k]
                - rat_i64(1 - ki * ki) * &bs[g - 2][k + 1];
        }
        bs.push(brow);
        let mut trow = vec![rat_i64(0); width];
        for k in 1..k_max {
            let ki = k as i64;
            let bterm = &bs[g][k - 1] - rat_i64(3) * &bs[g][k] - rat_i64(ki) * &bs[g - 1][k];
            trow[k + 1] = rat_i64(6) * &trow[k] - &trow[k - 1] - rat_i64(2) * &taus[g - 1][k + 1]
                + rat_i64(4 * ki * (ki + 1)) * &taus[g - 2][k + 1]
                + rat_frac(3, ki + 1) * bterm;
        }
        taus.push(trow);
    }
    CoeffTable { beta: Beta::One, k_max, g_max, entries: taus, aux: Some(bs) }
}
