//! Integrality verification: Legendre values, half-power series, the bound
//! chain that settles whole expansion layers at once, and the three
//! verifiers with their mutation-sensitivity checks.

use num::{BigInt, Signed, Zero};

use delay_moments::coeffs::coeff_table_beta2;
use delay_moments::exact::rat::{rat_big, rat_frac, rat_i64, Rat};
use delay_moments::genfun::{r_polynomial, DEFAULT_CHECK_DEPTH};
use delay_moments::integrality::{
    c_sequence, legendre_at_3, verify_pk, verify_pk_with_negated, verify_rg, verify_table,
    verify_table_entries, Verdict, VerifyTarget,
};
use delay_moments::moments::Beta;
use delay_moments::Error;

/// Central Delannoy numbers: the Legendre values p_l(3).
const LEGENDRE_AT_3: [i64; 8] = [1, 3, 13, 63, 321, 1683, 8989, 48639];

fn conv_prefix(a: &[BigInt], b: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    for i in 0..=order.min(a.len() - 1) {
        for j in 0..=(order - i).min(b.len() - 1) {
            out[i + j] += &a[i] * &b[j];
        }
    }
    out
}

#[test]
fn legendre_values_match_the_binomial_sum() {
    for (ell, expected) in LEGENDRE_AT_3.iter().enumerate() {
        assert_eq!(legendre_at_3(ell), BigInt::from(*expected));
    }
}

#[test]
fn legendre_values_are_the_half_power_series_coefficients() {
    // Two independent routes: the binomial sum versus the series recurrence
    // for (1 - 6z + z^2)^(-1/2).
    let c = c_sequence(1, 50).unwrap();
    for (ell, value) in c.iter().enumerate() {
        assert_eq!(value, &legendre_at_3(ell));
    }
}

#[test]
fn squared_half_power_gives_the_inverse_curve_series() {
    // (sum_l p_l(3) z^l)^2 = 1/y, whose coefficients obey
    // a_0 = 1, a_1 = 6, a_n = 6 a_{n-1} - a_{n-2}.
    let c = c_sequence(1, 30).unwrap();
    let square = conv_prefix(&c, &c, 30);
    let mut inv_y = vec![BigInt::from(1), BigInt::from(6)];
    for n in 2..=30 {
        let next = BigInt::from(6) * &inv_y[n - 1] - &inv_y[n - 2];
        inv_y.push(next);
    }
    assert_eq!(square, inv_y);
}

#[test]
fn higher_half_powers_are_convolution_powers() {
    assert_eq!(c_sequence(5, 0).unwrap(), vec![BigInt::from(1)]);
    let c1 = c_sequence(1, 25).unwrap();
    let mut five_fold = c1.clone();
    for _ in 0..4 {
        five_fold = conv_prefix(&five_fold, &c1, 25);
    }
    assert_eq!(c_sequence(5, 25).unwrap(), five_fold);
}

#[test]
fn half_power_exponent_must_be_odd_and_positive() {
    for bad in [0, 2, 6] {
        assert!(matches!(c_sequence(bad, 5), Err(Error::InvalidArgument { .. })));
    }
}

#[test]
fn bound_chain_dominates_every_layer_entry() {
    // tau_{k,g} = sum_j a_{g,j} C_{k-j} exactly, and the nondecreasing C
    // give tau_{k,g} >= C_{k-(2g-2)} sum_j a_{g,j}, for even g <= 10 and
    // k <= 60. These two facts are what let the R-family verifier settle
    // infinitely many k per layer.
    let k_top = 60usize;
    let table = coeff_table_beta2(k_top, 10);
    for g in (2..=10).step_by(2) {
        let coeffs = r_polynomial(g, DEFAULT_CHECK_DEPTH).unwrap().coefficient_sequence();
        let c = c_sequence(3 * g - 1, k_top).unwrap();
        let sum = coeffs.iter().fold(Rat::zero(), |acc, a| acc + a);
        for k in 0..=k_top {
            let mut recon = Rat::zero();
            for (j, a) in coeffs.iter().enumerate() {
                if k >= j {
                    recon += a * rat_big(c[k - j].clone());
                }
            }
            assert_eq!(&recon, table.entry(k, g), "reconstruction at k = {k}, g = {g}");
            if k >= 2 * g - 2 {
                let bound = &sum * rat_big(c[k - (2 * g - 2)].clone());
                assert!(bound <= recon, "bound fails at k = {k}, g = {g}");
            }
        }
    }
}

#[test]
fn p_family_verifier_passes_at_small_scale() {
    for k_star in [0, 9, 150] {
        let report = verify_pk(k_star);
        assert_eq!(report.target, VerifyTarget::Pk);
        assert_eq!(report.range.k_max, Some(k_star));
        assert_eq!(report.verdict, Verdict::Pass);
        assert!(report.witness.is_none());
        assert!(report.zero_sums.is_empty());
    }
}

#[test]
fn p_family_verifier_is_deterministic() {
    let a = verify_pk(150);
    let b = verify_pk(150);
    assert_eq!((a.verdict, a.witness, a.range), (b.verdict, b.witness, b.range));
}

#[test]
fn p_family_mutation_is_caught_with_witness() {
    assert!(delay_moments::genfun::p_polynomial(5).coeff(1).is_positive());
    let report = verify_pk_with_negated(9, (5, 1));
    assert_eq!(report.verdict, Verdict::Fail);
    let witness = report.witness.expect("fail verdict must carry a witness");
    assert_eq!((witness.index, witness.coefficient), (5, 1));
    assert!(witness.condition.contains("negative"));
}

#[test]
fn r_family_verifier_passes_and_sums_match_known_values() {
    let report = verify_rg(10).unwrap();
    assert_eq!(report.target, VerifyTarget::Rg);
    assert_eq!(report.range.g_max, Some(10));
    assert_eq!(report.verdict, Verdict::Pass);
    assert!(report.witness.is_none());
    assert!(report.zero_sums.is_empty());
    for (g, expected) in
        [(2, 2i64), (4, 60), (6, 10896), (8, 5159888), (10, 4625224896), (12, 6680902903168)]
    {
        let coeffs = r_polynomial(g, DEFAULT_CHECK_DEPTH).unwrap().coefficient_sequence();
        let sum = coeffs.iter().fold(Rat::zero(), |acc, a| acc + a);
        assert_eq!(sum, rat_i64(expected), "coefficient sum of R_{g}");
    }
}

#[test]
fn r_family_star_must_be_even_and_positive() {
    assert!(matches!(verify_rg(0), Err(Error::InvalidArgument { .. })));
    assert!(matches!(verify_rg(7), Err(Error::InvalidArgument { .. })));
}

#[test]
fn table_verifier_passes_on_printed_ranges() {
    for (beta, k_max, g_max) in
        [(Beta::One, 8, 6), (Beta::Two, 8, 6), (Beta::One, 20, 20)]
    {
        let report = verify_table(beta, k_max, g_max);
        assert_eq!(report.target, VerifyTarget::Table);
        assert_eq!(report.range.beta, Some(beta.value()));
        assert_eq!(report.range.k_max, Some(k_max));
        assert_eq!(report.range.g_max, Some(g_max));
        assert_eq!(report.verdict, Verdict::Pass, "beta = {}", beta.value());
    }
}

#[test]
fn table_mutation_is_caught_in_reading_order() {
    let mut table = coeff_table_beta2(8, 6);
    table.replace_entry(4, 4, rat_i64(-3));
    table.replace_entry(5, 2, rat_frac(1, 2));
    let report = verify_table_entries(&table);
    assert_eq!(report.verdict, Verdict::Fail);
    let witness = report.witness.expect("fail verdict must carry a witness");
    // Layer-first order: (g = 2, k = 5) precedes (g = 4, k = 4).
    assert_eq!((witness.index, witness.coefficient), (2, 5));
    assert!(witness.condition.contains("not an integer"));

    let mut table = coeff_table_beta2(8, 6);
    table.replace_entry(4, 4, rat_i64(-3));
    let witness = verify_table_entries(&table).witness.unwrap();
    assert_eq!((witness.index, witness.coefficient), (4, 4));
    assert!(witness.condition.contains("negative"));
}

#[test]
#[ignore = "several minutes; run with --ignored for the full published ranges"]
fn families_pass_at_full_published_scale() {
    let report = verify_pk(10000);
    assert_eq!(report.verdict, Verdict::Pass, "witness: {:?}", report.witness);
    let report = verify_rg(80).unwrap();
    assert_eq!(report.verdict, Verdict::Pass, "witness: {:?}", report.witness);
    assert!(report.zero_sums.is_empty());
}

#[test]
fn reports_round_trip_through_json() {
    for report in [
        verify_pk(5),
        verify_rg(4).unwrap(),
        verify_table(Beta::Two, 6, 4),
        verify_pk_with_negated(9, (5, 1)),
    ] {
        let text = serde_json::to_string(&report).unwrap();
        let back: delay_moments::integrality::VerificationReport =
            serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
    }
}
