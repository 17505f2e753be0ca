//! Asymptotic constants against frozen high-precision values and ratio
//! diagnostics against exact table arithmetic.

use delay_moments::asympt::{
    a_constant, asymp_constant, b_constant, gamma_half_rational, ratio_diagnostics, ConstantKind,
    Direction,
};
use delay_moments::error::Error;
use delay_moments::exact::rat::{rat_frac, rat_i64, Rat};
use num::{BigInt, Signed};

/// value = digits / 10^places.
fn rat_decimal(digits: &str, places: u32) -> Rat {
    Rat::new(digits.parse::<BigInt>().unwrap(), BigInt::from(10u32).pow(places))
}

/// A_1..A_5 to 40 significant digits, stored as (mantissa digits, 10-power).
const A_FROZEN: [(&str, u32); 5] = [
    ("4772346938725867756599504018420347258141", 41),
    ("8195154385456459086085451892604599549685", 42),
    ("9381904579831590405638899326182214040052", 43),
    ("8055382126290690473625166449266561455532", 44),
    ("5533135038704758760292452968368371075216", 45),
];

#[test]
fn b_constants_match_frozen_values() {
    assert_eq!(b_constant(2).unwrap(), rat_i64(2));
    assert_eq!(b_constant(3).unwrap(), rat_i64(8));
    assert_eq!(b_constant(4).unwrap(), rat_i64(45));
    assert_eq!(b_constant(5).unwrap(), rat_frac(896, 3));
    assert_eq!(b_constant(6).unwrap(), rat_frac(4375, 2));
    assert_eq!(b_constant(7).unwrap(), rat_frac(85536, 5));
    assert_eq!(b_constant(0), Err(Error::DegenerateIndex { k: 0 }));
    assert_eq!(b_constant(1), Err(Error::DegenerateIndex { k: 1 }));
}

#[test]
fn gamma_half_integers_reduce_to_rationals() {
    assert_eq!(gamma_half_rational(0), rat_i64(1));
    assert_eq!(gamma_half_rational(1), rat_frac(1, 2));
    // Gamma(5/2) = (3/4) sqrt(pi)
    assert_eq!(gamma_half_rational(2), rat_frac(3, 4));
}

#[test]
fn a_constants_match_frozen_forty_digit_values() {
    for (i, (digits, places)) in A_FROZEN.iter().enumerate() {
        let g = i + 1;
        let value = a_constant(g, 40).unwrap().to_rat();
        let frozen = rat_decimal(digits, *places);
        let tol = rat_decimal("2", *places);
        assert!((value - frozen).abs() < tol, "A_{g} drifted from the frozen value");
    }
}

#[test]
fn a_constant_precision_is_self_consistent() {
    let bound = rat_decimal("1", 28);
    for g in 1..=3usize {
        let coarse = a_constant(g, 30).unwrap().to_rat();
        let fine = a_constant(g, 60).unwrap().to_rat();
        let rel = ((coarse - fine.clone()) / fine).abs();
        assert!(rel < bound, "g = {g}: relative drift {rel}");
    }
}

#[test]
fn g_direction_ratios_match_table_values() {
    let pts = ratio_diagnostics(Direction::GToInf, 3, &[1, 2, 3, 9], 50).unwrap();
    let expect =
        [rat_frac(30, 32), rat_frac(126, 128), rat_frac(510, 512), rat_frac(1048575, 1048576)];
    for (p, e) in pts.iter().zip(expect) {
        assert_eq!(p.exact.as_ref(), Some(&e), "k = 3 ratio at g = {}", p.index);
    }
    for p in ratio_diagnostics(Direction::GToInf, 2, &[1, 2, 3, 4, 5, 6], 50).unwrap() {
        assert_eq!(p.exact, Some(rat_i64(1)), "k = 2 ratio at g = {}", p.index);
    }
    assert_eq!(
        ratio_diagnostics(Direction::GToInf, 1, &[1], 50),
        Err(Error::DegenerateIndex { k: 1 })
    );
}

/// |ratio - 1| along the g direction decreases for k = 3, 4, 5 and is below
/// 1e-3 by g = 10 for k = 3 and 4. For k = 5 that bound narrowly fails: the
/// exact error at g = 10 is 2.5800383050835762e-3, pinned here.
#[test]
fn g_direction_convergence_rates() {
    let gs: Vec<usize> = (1..=10).collect();
    for k in [3usize, 4, 5] {
        let pts = ratio_diagnostics(Direction::GToInf, k, &gs, 50).unwrap();
        let errs: Vec<Rat> =
            pts.iter().map(|p| (p.exact.clone().unwrap() - rat_i64(1)).abs()).collect();
        for pair in errs.windows(2) {
            assert!(pair[1] < pair[0], "k = {k}: |ratio - 1| not strictly decreasing");
        }
        let bound = rat_frac(1, 1000);
        if k <= 4 {
            assert!(errs[9] < bound, "k = {k}: error at g = 10 above 1e-3");
        } else {
            assert!(errs[9] > bound, "k = 5 unexpectedly beat the 1e-3 bound");
            let frozen = rat_decimal("25800383050835762", 19);
            let tol = rat_decimal("2", 19);
            assert!(
                (errs[9].clone() - frozen).abs() < tol,
                "k = 5 error at g = 10 drifted from its pinned value"
            );
        }
    }
}

#[test]
fn k_direction_ratios_approach_one_from_below() {
    let pts = ratio_diagnostics(Direction::KToInf, 1, &[50, 100, 200], 50).unwrap();
    let ratios: Vec<f64> = pts.iter().map(|p| p.ratio).collect();
    assert!(ratios.windows(2).all(|w| w[0] < w[1]), "ratios not increasing: {ratios:?}");
    for r in &ratios {
        assert!(*r > 0.95 && *r < 1.0, "ratio out of band: {r}");
    }
    assert!((ratios[2] - 0.993811486349874).abs() < 1e-9);
    assert!(pts.iter().all(|p| p.exact.is_none()));
    assert_eq!(
        ratio_diagnostics(Direction::KToInf, 0, &[10], 50),
        Err(Error::InvalidArgument { what: "k-direction diagnostics need a fixed g >= 1".into() })
    );
}

#[test]
fn constant_records_carry_exact_and_numeric_forms() {
    let b = asymp_constant(ConstantKind::B, 5, 20).unwrap();
    assert_eq!(b.exact, Some(rat_frac(896, 3)));
    assert_eq!(b.numeric.decimal_string(), "298.66666666666666667");
    assert_eq!(b.digits, 20);

    let a = asymp_constant(ConstantKind::A, 1, 20).unwrap();
    assert!(a.exact.is_none());
    assert_eq!(a.numeric.decimal_string(), "0.047723469387258677566");
    assert_eq!(a.digits, 20);
}
