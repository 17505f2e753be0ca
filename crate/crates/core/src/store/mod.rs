//! Golden-table store and serialization: schema-versioned JSON documents
//! with exact string-encoded payloads, embedded copies of the published
//! values, and reproduction reports that diff recomputations against them.

pub mod document;
pub mod golden;
pub mod reproduce;

pub use document::{
    json_bigint, json_poly, json_rat, json_rat_slice, json_ratfunc, parse_bigint, parse_poly,
    parse_rat, parse_rat_slice, parse_ratfunc, TableDocument, SCHEMA_VERSION,
};
pub use golden::{golden_store, GoldenStore, GoldenTau};
pub use reproduce::{
    report_against, reproduce_report, DiffEntry, ReproduceReport, ReproduceTarget,
};
