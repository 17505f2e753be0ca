//! Embedded golden values: the closed-form moments tau_2..tau_6 for both
//! symmetry classes, the two 9 x 7 expansion-coefficient blocks, and the
//! published polynomial families (R ascending in z, P ascending in zeta,
//! layer series F to order 12). Everything here is a literal transcription;
//! nothing is recomputed at load time.

use crate::exact::{Poly, RatFunc, Var};
use crate::moments::Beta;

/// One golden moment: numerator coefficients ascending in N over a product
/// of denominator factors, each an ascending coefficient array.
struct TauLiteral {
    k: usize,
    num: &'static [i64],
    den_factors: &'static [&'static [i64]],
}

/// beta = 2: all denominator factors are N^2 - j^2.
const TAU_BETA2: [TauLiteral; 5] = [
    TauLiteral { k: 2, num: &[0, 0, 2], den_factors: &[&[-1, 0, 1]] },
    TauLiteral { k: 3, num: &[0, 0, 0, 0, 6], den_factors: &[&[-4, 0, 1], &[-1, 0, 1]] },
    TauLiteral {
        k: 4,
        num: &[0, 0, 0, 0, 2, 0, 22],
        den_factors: &[&[-9, 0, 1], &[-4, 0, 1], &[-1, 0, 1]],
    },
    TauLiteral {
        k: 5,
        num: &[0, 0, 0, 0, 0, 0, 30, 0, 90],
        den_factors: &[&[-16, 0, 1], &[-9, 0, 1], &[-4, 0, 1], &[-1, 0, 1]],
    },
    TauLiteral {
        k: 6,
        num: &[0, 0, 0, 0, 0, 0, 16, 0, 310, 0, 394],
        den_factors: &[&[-25, 0, 1], &[-16, 0, 1], &[-9, 0, 1], &[-4, 0, 1], &[-1, 0, 1]],
    },
];

/// beta = 1: linear denominator factors, even offsets below, mixed above.
const TAU_BETA1: [TauLiteral; 5] = [
    TauLiteral { k: 2, num: &[0, 0, 2], den_factors: &[&[-2, 1], &[1, 1]] },
    TauLiteral {
        k: 3,
        num: &[0, 0, 0, 0, 6],
        den_factors: &[&[-4, 1], &[-2, 1], &[1, 1], &[2, 1]],
    },
    TauLiteral {
        k: 4,
        num: &[0, 0, 0, 0, 0, -4, 22],
        den_factors: &[&[-6, 1], &[-4, 1], &[-2, 1], &[1, 1], &[2, 1], &[3, 1]],
    },
    TauLiteral {
        k: 5,
        num: &[0, 0, 0, 0, 0, 0, 0, -60, 90],
        den_factors: &[&[-8, 1], &[-6, 1], &[-4, 1], &[-2, 1], &[1, 1], &[2, 1], &[3, 1], &[4, 1]],
    },
    TauLiteral {
        k: 6,
        num: &[0, 0, 0, 0, 0, 0, -64, -184, -48, -998, 394],
        den_factors: &[
            &[-10, 1],
            &[-8, 1],
            &[-6, 1],
            &[-4, 1],
            &[-3, 1],
            &[1, 1],
            &[2, 1],
            &[3, 1],
            &[4, 1],
            &[5, 1],
        ],
    },
];

/// tau_{k,g} blocks, rows k = 0..8, columns g = 0..6.
const TABLE_BETA2: [[i64; 7]; 9] = [
    [1, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0],
    [2, 0, 2, 0, 2, 0, 2],
    [6, 0, 30, 0, 126, 0, 510],
    [22, 0, 310, 0, 3262, 0, 31270],
    [90, 0, 2730, 0, 57330, 0, 1048410],
    [394, 0, 21980, 0, 805854, 0, 24848560],
    [1806, 0, 167076, 0, 9781002, 0, 468660192],
    [8558, 0, 1220100, 0, 106963626, 0, 7510405760],
];

const TABLE_BETA1: [[i64; 7]; 9] = [
    [1, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0],
    [2, 2, 6, 10, 22, 42, 86],
    [6, 18, 102, 378, 1638, 6426, 26214],
    [22, 128, 1142, 7048, 47454, 291696, 1821094],
    [90, 840, 10650, 96000, 904530, 7786680, 66945450],
    [394, 5306, 89576, 1092460, 13529862, 152881422, 1704027412],
    [1806, 32802, 705012, 11060700, 172576362, 2451889734, 34038711504],
    [8558, 200064, 5297924, 103150528, 1966038698, 34052988736, 572050771840],
];

/// R_g for even g, ascending coefficients a_{g,0}..a_{g,2g-2}.
const R_POLYS: [(usize, &[i64]); 5] = [
    (2, &[0, 0, 2]),
    (4, &[0, 0, 2, 60, 6, -24, 16]),
    (6, &[0, 0, 2, 408, 7572, 12600, -14110, 4464, -304, -96, 360]),
    (
        8,
        &[
            0, 0, 2, 1908, 152298, 2426400, 7652766, -3243996, -5754378, 5724216, -2210472,
            413136, -64776, 46656, 16128,
        ],
    ),
    (
        10,
        &[
            0,
            0,
            2,
            8016,
            1927176,
            98620176,
            1479326572,
            6426673488,
            2587036584,
            -11252766096,
            5092739154,
            2088897408,
            -2988047424,
            1396450368,
            -351879792,
            34986528,
            936576,
            9106560,
            1209600,
        ],
    ),
];

/// P_k, ascending coefficients in zeta; degree floor((k - 2) / 2).
const P_POLYS: [(usize, &[i64]); 8] = [
    (2, &[2]),
    (3, &[6]),
    (4, &[22, 2]),
    (5, &[90, 30]),
    (6, &[394, 310, 16]),
    (7, &[1806, 2730, 504]),
    (8, &[8558, 21980, 9422, 360]),
    (9, &[41586, 167076, 135954, 18264]),
];

/// beta = 1 layer generating functions F_0..F_6 as series coefficients of
/// z^0..z^12: the order-12 expansions of the published algebraic forms.
const F_SERIES: [[i64; 13]; 7] = [
    [1, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718, 5293446],
    [0, 0, 2, 18, 128, 840, 5306, 32802, 200064, 1209168, 7261042, 43394802, 258401216],
    [0, 0, 6, 102, 1142, 10650, 89576, 705012, 5297924, 38478492, 272262050, 1887071274,
        12862479402],
    [0, 0, 10, 378, 7048, 96000, 1092460, 11060700, 103150528, 905077728, 7576640950,
        61098854454, 477942694136],
    [0, 0, 22, 1638, 47454, 904530, 13529862, 172576362, 1966038698, 20583987894,
        201838423616, 1878183167916, 16744919877108],
    [0, 0, 42, 6426, 291696, 7786680, 152881422, 2451889734, 34052988736, 424606263984,
        4868397305884, 52193110266396, 529596113392928],
    [0, 0, 86, 26214, 1821094, 66945450, 1704027412, 34038711504, 572050771840,
        8443921227936, 112644843054780, 1385543912313132, 15943946323796556],
];

/// One golden moment as an exact rational function of N.
#[derive(Debug, Clone, PartialEq)]
pub struct GoldenTau {
    pub beta: Beta,
    pub k: usize,
    pub value: RatFunc,
}

/// Owned copy of every embedded golden table, mutable so that diff engines
/// can be exercised against perturbed copies.
#[derive(Debug, Clone, PartialEq)]
pub struct GoldenStore {
    pub taus: Vec<GoldenTau>,
    pub table_beta2: [[i64; 7]; 9],
    pub table_beta1: [[i64; 7]; 9],
    pub r_polys: Vec<(usize, Vec<i64>)>,
    pub p_polys: Vec<(usize, Vec<i64>)>,
    pub f_series: [[i64; 13]; 7],
}

fn tau_value(lit: &TauLiteral) -> RatFunc {
    let num = Poly::from_i64(lit.num, Var::N);
    let mut den = Poly::one(Var::N);
    for factor in lit.den_factors {
        den = den.mul(&Poly::from_i64(factor, Var::N));
    }
    RatFunc::new(num, den).expect("golden denominator is nonzero")
}

pub fn golden_store() -> GoldenStore {
    let taus = TAU_BETA2
        .iter()
        .map(|lit| (Beta::Two, lit))
        .chain(TAU_BETA1.iter().map(|lit| (Beta::One, lit)))
        .map(|(beta, lit)| GoldenTau { beta, k: lit.k, value: tau_value(lit) })
        .collect();
    GoldenStore {
        taus,
        table_beta2: TABLE_BETA2,
        table_beta1: TABLE_BETA1,
        r_polys: R_POLYS.iter().map(|&(g, c)| (g, c.to_vec())).collect(),
        p_polys: P_POLYS.iter().map(|&(k, c)| (k, c.to_vec())).collect(),
        f_series: F_SERIES,
    }
}
