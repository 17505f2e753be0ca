//! Golden store and document layer: exact JSON encodings, round-trip
//! identity on randomized payloads, literal golden anchors, and the
//! reproduction diffs in both the passing and the perturbed direction.

use num::bigint::Sign;
use num::BigInt;
use proptest::prelude::*;
use serde_json::{json, Value};

use delay_moments::exact::poly::{Poly, Var};
use delay_moments::exact::rat::{rat_frac, rat_i64, Rat};
use delay_moments::exact::ratfunc::RatFunc;
use delay_moments::store::{
    golden_store, json_bigint, json_poly, json_rat, json_rat_slice, json_ratfunc, parse_bigint,
    parse_rat, parse_ratfunc, report_against, reproduce_report, ReproduceTarget, TableDocument,
    SCHEMA_VERSION,
};
use delay_moments::Error;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (any::<i64>(), 1i64..=i64::MAX)
        .prop_map(|(num, den)| Rat::new(BigInt::from(num), BigInt::from(den)))
}

fn arb_bigint() -> impl Strategy<Value = BigInt> {
    (any::<bool>(), prop::collection::vec(any::<u32>(), 0..5)).prop_map(|(negative, digits)| {
        BigInt::new(if negative { Sign::Minus } else { Sign::Plus }, digits)
    })
}

fn arb_payload() -> impl Strategy<Value = Value> {
    prop_oneof![
        arb_rat().prop_map(|r| json_rat(&r)),
        arb_bigint().prop_map(|n| json_bigint(&n)),
        prop::collection::vec(arb_rat(), 0..8)
            .prop_map(|rs| json!({ "coefficients": json_rat_slice(&rs) })),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn document_round_trip_is_identity(payload in arb_payload(), seed in any::<u64>()) {
        let doc = TableDocument::new("store-test 0.0.0", format!("cmd --seed {seed}"), payload)
            .with_metadata("seed", json!(seed));
        let parsed = TableDocument::from_json(&doc.to_json()).unwrap();
        prop_assert_eq!(parsed, doc);
    }

    #[test]
    fn rational_encoding_round_trips(r in arb_rat()) {
        prop_assert_eq!(parse_rat(&json_rat(&r)).unwrap(), r);
    }

    #[test]
    fn bigint_encoding_round_trips(n in arb_bigint()) {
        prop_assert_eq!(parse_bigint(&json_bigint(&n)).unwrap(), n);
    }

    #[test]
    fn ratfunc_encoding_round_trips(num in prop::collection::vec(-9i64..=9, 1..5),
                                    den in prop::collection::vec(-9i64..=9, 0..4)) {
        let mut den_coeffs = den;
        den_coeffs.push(1);
        let f = RatFunc::new(Poly::from_i64(&num, Var::N), Poly::from_i64(&den_coeffs, Var::N))
            .unwrap();
        prop_assert_eq!(parse_ratfunc(&json_ratfunc(&f), Var::N).unwrap(), f);
    }
}

#[test]
fn exact_values_are_strings_never_numbers() {
    // Integers render as decimal strings, non-integers as {num, den} pairs.
    assert_eq!(json_rat(&rat_i64(5)), json!("5"));
    assert_eq!(json_rat(&rat_i64(-7)), json!("-7"));
    assert_eq!(json_rat(&rat_frac(8, 3)), json!({ "num": "8", "den": "3" }));
    assert_eq!(json_rat(&rat_frac(8, -3)), json!({ "num": "-8", "den": "3" }));
    let poly = json_poly(&Poly::from_i64(&[1, 0, -22], Var::Z));
    assert_eq!(poly, json!(["1", "0", "-22"]));
}

#[test]
fn malformed_documents_and_values_are_rejected() {
    assert!(matches!(
        TableDocument::from_json("not a document"),
        Err(Error::InvalidArgument { .. })
    ));
    assert!(matches!(parse_bigint(&json!(42)), Err(Error::InvalidArgument { .. })));
    assert!(matches!(parse_rat(&json!(["5"])), Err(Error::InvalidArgument { .. })));
    assert_eq!(
        parse_rat(&json!({ "num": "1", "den": "0" })).unwrap_err(),
        Error::ZeroDenominator
    );
}

#[test]
fn schema_version_is_stamped() {
    let doc = TableDocument::new("g", "c", json!(null));
    assert_eq!(doc.schema_version, SCHEMA_VERSION);
    assert_eq!(SCHEMA_VERSION, 1);
    // Metadata is omitted from the wire form when empty.
    assert!(!doc.to_json().contains("metadata"));
}

#[test]
fn golden_store_has_the_published_shapes() {
    let store = golden_store();
    assert_eq!(store.taus.len(), 10);
    assert_eq!(store.r_polys.len(), 5);
    assert_eq!(store.p_polys.len(), 8);
    assert_eq!(store.f_series.len(), 7);
    // Spot anchors, independently reconstructed.
    let two_nsq = Poly::from_i64(&[0, 0, 2], Var::N);
    let nsq_minus_1 = Poly::from_i64(&[-1, 0, 1], Var::N);
    assert_eq!(store.taus[0].value, RatFunc::new(two_nsq, nsq_minus_1).unwrap());
    assert_eq!(store.table_beta2[8][6], 7510405760);
    assert_eq!(store.table_beta1[8][6], 572050771840);
    assert_eq!(store.f_series[0][..5], [1, 1, 2, 6, 22]);
    assert_eq!(store.p_polys[7], (9, vec![41586, 167076, 135954, 18264]));
}

#[test]
fn reproduction_passes_on_every_target() {
    let cases =
        [(ReproduceTarget::AppendixA, 10), (ReproduceTarget::TableI, 126), (ReproduceTarget::AppendixB, 20)];
    for (target, checked) in cases {
        let report = reproduce_report(target).unwrap();
        assert!(report.passed(), "{:?}: {:?}", target, report.diffs);
        assert_eq!(report.checked, checked);
        assert!(report.diffs.is_empty());
    }
}

#[test]
fn perturbed_goldens_fail_with_located_diffs() {
    let mut store = golden_store();
    store.table_beta1[3][2] += 1;
    let report = report_against(ReproduceTarget::TableI, &store).unwrap();
    assert!(!report.passed());
    assert_eq!(report.diffs.len(), 1);
    assert_eq!(report.diffs[0].location, "beta=1 k=3 g=2");
    assert_eq!(report.diffs[0].expected, "103");
    assert_eq!(report.diffs[0].got, "102");

    let mut store = golden_store();
    store.taus[2].value = RatFunc::one(Var::N);
    let report = report_against(ReproduceTarget::AppendixA, &store).unwrap();
    assert_eq!(report.diffs.len(), 1);
    assert_eq!(report.diffs[0].location, "beta=2 tau_4");

    let mut store = golden_store();
    store.r_polys[1].1[3] -= 1;
    store.p_polys[7].1.pop();
    store.f_series[6][12] -= 1920;
    let report = report_against(ReproduceTarget::AppendixB, &store).unwrap();
    let locations: Vec<&str> = report.diffs.iter().map(|d| d.location.as_str()).collect();
    assert_eq!(locations, ["R_4 z^3", "P_9 zeta^3", "F_6 z^12"]);
    assert_eq!(report.diffs[1].expected, "absent");
    assert_eq!(report.diffs[1].got, "18264");
}

#[test]
fn target_names_match_the_cli_tokens() {
    for (name, target) in [
        ("appendixA", ReproduceTarget::AppendixA),
        ("tableI", ReproduceTarget::TableI),
        ("appendixB", ReproduceTarget::AppendixB),
    ] {
        assert_eq!(name.parse::<ReproduceTarget>().unwrap(), target);
        assert_eq!(target.name(), name);
        assert_eq!(serde_json::to_value(target).unwrap(), json!(name));
    }
    assert!(matches!(
        "appendixa".parse::<ReproduceTarget>(),
        Err(Error::InvalidArgument { .. })
    ));
}

#[test]
fn reports_serialize_without_empty_diffs() {
    let report = reproduce_report(ReproduceTarget::TableI).unwrap();
    let value = serde_json::to_value(&report).unwrap();
    assert_eq!(value["verdict"], json!("pass"));
    assert_eq!(value["target"], json!("tableI"));
    assert_eq!(value["checked"], json!(126));
    assert!(value.get("diffs").is_none());
}
