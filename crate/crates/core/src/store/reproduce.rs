//! Reproduction reports: recompute each golden target through the recursions
//! and diff exactly against the embedded literals. A mismatch is a report
//! outcome, never an error; exact equality is required for a pass.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::coeffs::{coeff_table_beta1, coeff_table_beta2, CoeffTable};
use crate::error::{Error, Result};
use crate::exact::rat::{rat_i64, Rat};
use crate::genfun::{f_beta1_pair, p_polynomial, r_polynomial, DEFAULT_CHECK_DEPTH};
use crate::integrality::Verdict;
use crate::moments::{tau_beta1_symbolic, tau_beta2_symbolic, Beta};
use crate::store::golden::{golden_store, GoldenStore};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReproduceTarget {
    #[serde(rename = "appendixA")]
    AppendixA,
    #[serde(rename = "tableI")]
    TableI,
    #[serde(rename = "appendixB")]
    AppendixB,
}

impl ReproduceTarget {
    pub fn name(self) -> &'static str {
        match self {
            ReproduceTarget::AppendixA => "appendixA",
            ReproduceTarget::TableI => "tableI",
            ReproduceTarget::AppendixB => "appendixB",
        }
    }
}

impl std::str::FromStr for ReproduceTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "appendixA" => Ok(ReproduceTarget::AppendixA),
            "tableI" => Ok(ReproduceTarget::TableI),
            "appendixB" => Ok(ReproduceTarget::AppendixB),
            other => Err(Error::InvalidArgument {
                what: format!("unknown target {other:?}; expected appendixA, tableI or appendixB"),
            }),
        }
    }
}

/// One mismatch, pinned to a location with both sides rendered exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffEntry {
    pub location: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReproduceReport {
    pub target: ReproduceTarget,
    pub verdict: Verdict,
    /// Number of golden objects compared (rational functions, table entries,
    /// or family members).
    pub checked: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diffs: Vec<DiffEntry>,
    pub wall_ms: u64,
}

impl ReproduceReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Recompute `target` from first principles and diff it against the
/// embedded golden store.
pub fn reproduce_report(target: ReproduceTarget) -> Result<ReproduceReport> {
    report_against(target, &golden_store())
}

/// Same diff against a caller-supplied golden store, so that perturbed
/// copies demonstrably fail.
pub fn report_against(target: ReproduceTarget, golden: &GoldenStore) -> Result<ReproduceReport> {
    let start = Instant::now();
    let (checked, diffs) = match target {
        ReproduceTarget::AppendixA => diff_moments(golden),
        ReproduceTarget::TableI => diff_tables(golden),
        ReproduceTarget::AppendixB => diff_families(golden)?,
    };
    let verdict = if diffs.is_empty() { Verdict::Pass } else { Verdict::Fail };
    Ok(ReproduceReport {
        target,
        verdict,
        checked,
        diffs,
        wall_ms: start.elapsed().as_millis() as u64,
    })
}

fn diff_moments(golden: &GoldenStore) -> (usize, Vec<DiffEntry>) {
    let k_top = golden.taus.iter().map(|t| t.k).max().unwrap_or(0);
    let beta2 = tau_beta2_symbolic(k_top);
    let (beta1, _) = tau_beta1_symbolic(k_top);
    let mut diffs = Vec::new();
    for tau in &golden.taus {
        let recomputed = match tau.beta {
            Beta::Two => &beta2[tau.k].value,
            Beta::One => &beta1[tau.k].value,
        };
        if *recomputed != tau.value {
            diffs.push(DiffEntry {
                location: format!("beta={} tau_{}", tau.beta.value(), tau.k),
                expected: tau.value.to_string(),
                got: recomputed.to_string(),
            });
        }
    }
    (golden.taus.len(), diffs)
}

fn diff_one_table(beta: Beta, expected: &[[i64; 7]; 9], table: &CoeffTable) -> Vec<DiffEntry> {
    let mut diffs = Vec::new();
    for (k, row) in expected.iter().enumerate() {
        for (g, &want) in row.iter().enumerate() {
            let want = rat_i64(want);
            let got = table.entry(k, g);
            if *got != want {
                diffs.push(DiffEntry {
                    location: format!("beta={} k={} g={}", beta.value(), k, g),
                    expected: want.to_string(),
                    got: got.to_string(),
                });
            }
        }
    }
    diffs
}

fn diff_tables(golden: &GoldenStore) -> (usize, Vec<DiffEntry>) {
    let mut diffs = diff_one_table(Beta::Two, &golden.table_beta2, &coeff_table_beta2(8, 6));
    diffs.extend(diff_one_table(Beta::One, &golden.table_beta1, &coeff_table_beta1(8, 6)));
    (golden.table_beta2.len() * 7 + golden.table_beta1.len() * 7, diffs)
}

fn diff_sequence(
    prefix: &str,
    symbol: &str,
    expected: &[i64],
    got: &[Rat],
    diffs: &mut Vec<DiffEntry>,
) {
    for i in 0..expected.len().max(got.len()) {
        let want = expected.get(i).copied().map(rat_i64);
        let have = got.get(i).cloned();
        if want != have {
            diffs.push(DiffEntry {
                location: format!("{prefix} {symbol}^{i}"),
                expected: want.map_or_else(|| "absent".into(), |r| r.to_string()),
                got: have.map_or_else(|| "absent".into(), |r| r.to_string()),
            });
        }
    }
}

fn diff_families(golden: &GoldenStore) -> Result<(usize, Vec<DiffEntry>)> {
    let mut diffs = Vec::new();
    for (g, coeffs) in &golden.r_polys {
        let family = r_polynomial(*g, DEFAULT_CHECK_DEPTH)?;
        diff_sequence(&format!("R_{g}"), "z", coeffs, &family.coefficient_sequence(), &mut diffs);
    }
    for (k, coeffs) in &golden.p_polys {
        diff_sequence(&format!("P_{k}"), "zeta", coeffs, p_polynomial(*k).coeffs(), &mut diffs);
    }
    for (g, coeffs) in golden.f_series.iter().enumerate() {
        let (cap, _) = f_beta1_pair(g, coeffs.len() - 1)?;
        diff_sequence(&format!("F_{g}"), "z", coeffs, cap.expand().coeffs(), &mut diffs);
    }
    Ok((golden.r_polys.len() + golden.p_polys.len() + golden.f_series.len(), diffs))
}
