//! Argument grammar and command dispatch: every subcommand runs one library
//! computation and emits a schema-versioned JSON document (or a plain
//! numeric CSV table for evaluated moments).

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigInt;
use serde_json::{json, Value};

use delay_moments::asympt::{asymp_constant, ratio_diagnostics, ConstantKind, Direction};
use delay_moments::coeffs::{coeff_table_beta1, coeff_table_beta2, CoeffTable};
use delay_moments::exact::rat::{bigint_from_string, is_integer, Rat};
use delay_moments::genfun::{
    f_beta1_pair, f_beta2_series, j_eval, p_polynomial, r_polynomial, DEFAULT_CHECK_DEPTH,
};
use delay_moments::integrality::{verify_pk, verify_rg, verify_table, VerificationReport};
use delay_moments::mc::{sample_delay_moment, RNG_SPEC};
use delay_moments::moments::{
    tau_beta1_symbolic, tau_beta2_symbolic, wishart_moment, Beta, MomentRatFunc,
    WishartMomentQuery,
};
use delay_moments::store::{
    json_rat, json_rat_slice, json_ratfunc, reproduce_report, ReproduceTarget, TableDocument,
};
use delay_moments::Error;

const GENERATOR: &str = concat!("delay-moments ", env!("CARGO_PKG_VERSION"));

#[derive(Parser)]
#[command(name = "delay-moments", version, about = "Exact moments of the Wigner-Smith \
time-delay matrix and inverse Wishart matrices: recursions, expansion tables, generating \
functions, integrality verification, Monte Carlo cross-checks")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Moments tau_0..tau_K as exact rational functions of N, or their
    /// values at a point.
    Moments {
        /// Symmetry class, 1 or 2.
        #[arg(long)]
        beta: u32,
        #[arg(long, value_name = "K")]
        k_max: usize,
        /// Emit the rational functions themselves (the default mode).
        #[arg(long, conflicts_with = "n_value")]
        symbolic: bool,
        /// Evaluate every moment at N = R (rational, e.g. 12 or 25/2).
        #[arg(long, value_name = "R")]
        n_value: Option<String>,
        /// Output format; csv is available only for evaluated tables.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write to PATH instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// One inverse or positive Wishart moment D_N(k, alpha), exact.
    Wishart {
        #[arg(long)]
        beta: u32,
        /// Moment order; may be negative.
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        /// Weight exponent alpha (rational).
        #[arg(long, value_name = "A")]
        alpha: String,
        /// Matrix size.
        #[arg(long)]
        n: u32,
    },
    /// The expansion-coefficient table tau_{k,g} for k <= K, g <= G.
    Coeffs {
        #[arg(long)]
        beta: u32,
        #[arg(long, value_name = "K")]
        k_max: usize,
        #[arg(long, value_name = "G")]
        g_max: usize,
    },
    /// One member of a generating-function family: polynomial coefficients,
    /// series coefficients, or a rational value.
    Genfun {
        /// P (column polynomial, zeta), R (layer polynomial, z), F (layer
        /// series), f (beta=1 companion series), or J (column evaluator).
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        beta: u32,
        /// Family index: k for P and J, g for R, F and f.
        #[arg(long, value_name = "I")]
        index: usize,
        /// Series truncation order for F and f (default 12).
        #[arg(long, value_name = "O")]
        order: Option<usize>,
        /// Evaluation point for J (rational, e.g. 1/10).
        #[arg(long, value_name = "Q")]
        zeta: Option<String>,
    },
    /// Asymptotic constants: A_g (numeric) or B_k (exact rational), with
    /// optional ratio diagnostics along the matching index direction.
    Asympt {
        /// Index g of the constant A_g governing k -> infinity.
        #[arg(long, value_name = "G")]
        a: Option<usize>,
        /// Index k of the constant B_k governing g -> infinity.
        #[arg(long, value_name = "K")]
        b: Option<usize>,
        /// Significant digits of numeric output.
        #[arg(long, default_value_t = 30, value_name = "D")]
        digits: usize,
        /// Inclusive index range LO..HI of table-over-prediction ratios.
        #[arg(long, value_name = "LO..HI")]
        check_range: Option<String>,
    },
    /// Verify nonnegative integrality: P_k coefficients, R_g conditions, or
    /// the coefficient table itself. FAIL exits with code 3.
    VerifyIntegrality {
        #[arg(long, value_enum)]
        target: VerifyWhat,
        /// Upper limit in k (default 2000 for Pk, 20 for table).
        #[arg(long, value_name = "K")]
        k_star: Option<usize>,
        /// Upper limit in g, even (default 40 for Rg, 20 for table).
        #[arg(long, value_name = "G")]
        g_star: Option<usize>,
        /// Symmetry class for the table target; both classes when omitted.
        #[arg(long, value_name = "B")]
        beta: Option<u32>,
    },
    /// Monte Carlo estimate of tau_k from sampled Wishart spectra.
    Mc {
        #[arg(long)]
        beta: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        #[arg(long, value_name = "S")]
        samples: u64,
        #[arg(long)]
        seed: u64,
        /// Worker count; the estimate is bit-identical for any value.
        #[arg(long, default_value_t = 1, value_name = "J")]
        shards: usize,
    },
    /// Recompute one golden block and diff it against the embedded copy.
    /// Any mismatch exits with code 3.
    Reproduce {
        #[arg(long, value_enum)]
        target: ReproduceWhat,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    #[value(name = "P")]
    P,
    #[value(name = "R")]
    R,
    #[value(name = "F")]
    CapF,
    #[value(name = "f")]
    LowF,
    #[value(name = "J")]
    J,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyWhat {
    #[value(name = "Pk")]
    Pk,
    #[value(name = "Rg")]
    Rg,
    #[value(name = "table")]
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReproduceWhat {
    #[value(name = "appendixA")]
    AppendixA,
    #[value(name = "tableI")]
    TableI,
    #[value(name = "appendixB")]
    AppendixB,
}

impl From<ReproduceWhat> for ReproduceTarget {
    fn from(w: ReproduceWhat) -> ReproduceTarget {
        match w {
            ReproduceWhat::AppendixA => ReproduceTarget::AppendixA,
            ReproduceWhat::TableI => ReproduceTarget::TableI,
            ReproduceWhat::AppendixB => ReproduceTarget::AppendixB,
        }
    }
}

enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Compute(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

pub fn run(cli: Cli) -> i32 {
    match execute(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            1
        }
        Err(Failure::Compute(err)) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn execute(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Moments { beta, k_max, symbolic: _, n_value, format, out } => {
            run_moments(beta, k_max, n_value, format, out)
        }
        Command::Wishart { beta, k, alpha, n } => run_wishart(beta, k, &alpha, n),
        Command::Coeffs { beta, k_max, g_max } => run_coeffs(beta, k_max, g_max),
        Command::Genfun { which, beta, index, order, zeta } => {
            run_genfun(which, beta, index, order, zeta.as_deref())
        }
        Command::Asympt { a, b, digits, check_range } => {
            run_asympt(a, b, digits, check_range.as_deref())
        }
        Command::VerifyIntegrality { target, k_star, g_star, beta } => {
            run_verify(target, k_star, g_star, beta)
        }
        Command::Mc { beta, n, k, samples, seed, shards } => {
            run_mc(beta, n, k, samples, seed, shards)
        }
        Command::Reproduce { target } => run_reproduce(target.into()),
    }
}

fn beta_of(v: u32) -> Result<Beta, Failure> {
    Beta::try_from_u32(v).map_err(|e| usage(e.to_string()))
}

/// Rational CLI argument: a decimal integer or a num/den pair.
fn parse_rat_arg(flag: &str, text: &str) -> Result<Rat, Failure> {
    let bad = || usage(format!("{flag} expects a rational like 12 or 25/2, got {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num = bigint_from_string(num).ok_or_else(bad)?;
    let den = bigint_from_string(den).ok_or_else(bad)?;
    if den == BigInt::from(0) {
        return Err(usage(format!("{flag} has a zero denominator")));
    }
    Ok(Rat::new(num, den))
}

/// Inclusive index range written LO..HI.
fn parse_range(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || usage(format!("--check-range expects LO..HI (inclusive), got {text:?}"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: usize = lo.parse().map_err(|_| bad())?;
    let hi: usize = hi.parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn document(payload: Value) -> TableDocument {
    let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    TableDocument::new(GENERATOR, command, payload)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            Failure::Compute(Error::CheckFailed {
                what: format!("cannot write {}: {e}", path.display()),
            })
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_document(doc: TableDocument, out: Option<&PathBuf>) -> Result<(), Failure> {
    emit(&doc.to_json(), out)
}

/// Exact rational in a CSV cell: decimal integer or num/den.
fn csv_rat(r: &Rat) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn moment_functions(beta: Beta, k_max: usize) -> (Vec<MomentRatFunc>, Option<Vec<MomentRatFunc>>) {
    match beta {
        Beta::Two => (tau_beta2_symbolic(k_max), None),
        Beta::One => {
            let (taus, bs) = tau_beta1_symbolic(k_max);
            (taus, Some(bs))
        }
    }
}

fn run_moments(
    beta_v: u32,
    k_max: usize,
    n_value: Option<String>,
    format: Format,
    out: Option<PathBuf>,
) -> Result<i32, Failure> {
    let beta = beta_of(beta_v)?;
    if format == Format::Csv && n_value.is_none() {
        return Err(usage("--format csv needs --n-value; symbolic tables are json only"));
    }
    let (taus, bs) = moment_functions(beta, k_max);

    let mut payload = match &n_value {
        None => {
            let render = |ms: &[MomentRatFunc]| {
                Value::Array(
                    ms.iter().map(|m| json!({ "k": m.k, "value": json_ratfunc(&m.value) })).collect(),
                )
            };
            let mut payload = json!({ "taus": render(&taus) });
            if let Some(bs) = &bs {
                payload["bs"] = render(bs);
            }
            payload
        }
        Some(text) => {
            let at = parse_rat_arg("--n-value", text)?;
            let eval = |ms: &[MomentRatFunc]| -> Result<Vec<Rat>, Failure> {
                ms.iter().map(|m| m.value.eval(&at).map_err(Failure::from)).collect()
            };
            let tau_values = eval(&taus)?;
            let b_values = bs.as_deref().map(eval).transpose()?;

            if format == Format::Csv {
                let mut text = String::from(if b_values.is_some() { "k,tau,b\n" } else { "k,tau\n" });
                for (k, tau) in tau_values.iter().enumerate() {
                    match &b_values {
                        Some(b) => {
                            text += &format!("{k},{},{}\n", csv_rat(tau), csv_rat(&b[k]));
                        }
                        None => text += &format!("{k},{}\n", csv_rat(tau)),
                    }
                }
                emit(&text, out.as_ref())?;
                return Ok(0);
            }

            let mut payload =
                json!({ "at": json_rat(&at), "taus": json_rat_slice(&tau_values) });
            if let Some(b) = &b_values {
                payload["bs"] = json_rat_slice(b);
            }
            payload
        }
    };
    payload["beta"] = json!(beta.value());
    payload["k_max"] = json!(k_max);

    let doc = document(payload)
        .with_metadata("beta", json!(beta.value()))
        .with_metadata("k_max", json!(k_max))
        .with_metadata("mode", json!(if n_value.is_some() { "evaluated" } else { "symbolic" }));
    emit_document(doc, out.as_ref())?;
    Ok(0)
}

fn run_wishart(beta_v: u32, k: i64, alpha: &str, n: u32) -> Result<i32, Failure> {
    let beta = beta_of(beta_v)?;
    let alpha = parse_rat_arg("--alpha", alpha)?;
    let query = WishartMomentQuery { beta, k, alpha: alpha.clone(), n };
    let value = wishart_moment(&query)?;
    let doc = document(json!({
        "beta": beta.value(),
        "k": k,
        "alpha": json_rat(&alpha),
        "n": n,
        "value": json_rat(&value),
    }));
    emit_document(doc, None)?;
    Ok(0)
}

fn table_rows(table: &CoeffTable, aux: bool) -> Value {
    let row = |k: usize| -> Value {
        Value::Array(
            (0..=table.g_max)
                .map(|g| {
                    if aux {
                        json_rat(table.aux_entry(k, g).expect("aux table present"))
                    } else {
                        json_rat(table.entry(k, g))
                    }
                })
                .collect(),
        )
    };
    Value::Array((0..=table.k_max).map(row).collect())
}

fn run_coeffs(beta_v: u32, k_max: usize, g_max: usize) -> Result<i32, Failure> {
    let beta = beta_of(beta_v)?;
    let table = match beta {
        Beta::Two => coeff_table_beta2(k_max, g_max),
        Beta::One => coeff_table_beta1(k_max, g_max),
    };
    let mut payload = json!({
        "beta": beta.value(),
        "k_max": k_max,
        "g_max": g_max,
        "entries": table_rows(&table, false),
    });
    if table.aux_entry(0, 0).is_some() {
        payload["aux_entries"] = table_rows(&table, true);
    }
    let doc = document(payload)
        .with_metadata("beta", json!(beta.value()))
        .with_metadata("k_max", json!(k_max))
        .with_metadata("g_max", json!(g_max));
    emit_document(doc, None)?;
    Ok(0)
}

fn run_genfun(
    which: Which,
    beta_v: u32,
    index: usize,
    order: Option<usize>,
    zeta: Option<&str>,
) -> Result<i32, Failure> {
    let beta = beta_of(beta_v)?;
    match which {
        Which::P | Which::R | Which::J if beta != Beta::Two => {
            return Err(usage("--which P, R and J are beta=2 families; pass --beta 2"));
        }
        Which::LowF if beta != Beta::One => {
            return Err(usage("--which f exists only for beta=1"));
        }
        _ => {}
    }
    if zeta.is_some() && which != Which::J {
        return Err(usage("--zeta applies only to --which J"));
    }
    if order.is_some() && !matches!(which, Which::CapF | Which::LowF) {
        return Err(usage("--order applies only to the series families F and f"));
    }

    let payload = match which {
        Which::P => json!({
            "which": "P",
            "index": index,
            "coefficients": json_rat_slice(p_polynomial(index).coeffs()),
        }),
        Which::R => {
            if index == 0 || index % 2 != 0 {
                return Err(usage("R_g exists for even g >= 2"));
            }
            let family = r_polynomial(index, DEFAULT_CHECK_DEPTH)?;
            json!({
                "which": "R",
                "index": index,
                "coefficients": json_rat_slice(&family.coefficient_sequence()),
            })
        }
        Which::CapF | Which::LowF => {
            let order = order.unwrap_or(12);
            let series = match (which, beta) {
                (Which::CapF, Beta::Two) => f_beta2_series(index, order)?,
                (Which::CapF, Beta::One) => f_beta1_pair(index, order)?.0.expand(),
                _ => f_beta1_pair(index, order)?.1.expand(),
            };
            json!({
                "which": if which == Which::CapF { "F" } else { "f" },
                "beta": beta.value(),
                "index": index,
                "order": order,
                "coefficients": json_rat_slice(series.coeffs()),
            })
        }
        Which::J => {
            let zeta = parse_rat_arg(
                "--zeta",
                zeta.ok_or_else(|| usage("--which J needs an evaluation point --zeta Q"))?,
            )?;
            let value = j_eval(index, &zeta)?;
            json!({
                "which": "J",
                "index": index,
                "zeta": json_rat(&zeta),
                "value": json_rat(&value),
            })
        }
    };
    emit_document(document(payload), None)?;
    Ok(0)
}

fn run_asympt(
    a: Option<usize>,
    b: Option<usize>,
    digits: usize,
    check_range: Option<&str>,
) -> Result<i32, Failure> {
    let (kind, index) = match (a, b) {
        (Some(g), None) => (ConstantKind::A, g),
        (None, Some(k)) => (ConstantKind::B, k),
        _ => return Err(usage("pass exactly one of --a G or --b K")),
    };
    let constant = asymp_constant(kind, index, digits)?;
    let mut payload = json!({
        "kind": if kind == ConstantKind::A { "A" } else { "B" },
        "index": index,
        "digits": digits,
        "numeric": constant.numeric.decimal_string(),
    });
    if let Some(exact) = &constant.exact {
        payload["exact"] = json_rat(exact);
    }
    if let Some(text) = check_range {
        let (lo, hi) = parse_range(text)?;
        let indices: Vec<usize> = (lo..=hi).collect();
        let direction = match kind {
            ConstantKind::A => Direction::KToInf,
            ConstantKind::B => Direction::GToInf,
        };
        let points = ratio_diagnostics(direction, index, &indices, digits)?;
        payload["ratios"] = Value::Array(
            points
                .iter()
                .map(|p| {
                    let mut entry = json!({ "index": p.index, "ratio": p.ratio });
                    if let Some(exact) = &p.exact {
                        entry["exact"] = json_rat(exact);
                    }
                    entry
                })
                .collect(),
        );
    }
    emit_document(document(payload), None)?;
    Ok(0)
}

fn verdict_exit(reports: &[&VerificationReport]) -> i32 {
    if reports.iter().all(|r| r.passed()) {
        0
    } else {
        3
    }
}

fn run_verify(
    target: VerifyWhat,
    k_star: Option<usize>,
    g_star: Option<usize>,
    beta: Option<u32>,
) -> Result<i32, Failure> {
    let (payload, code) = match target {
        VerifyWhat::Pk => {
            if g_star.is_some() || beta.is_some() {
                return Err(usage("--target Pk takes only --k-star"));
            }
            let report = verify_pk(k_star.unwrap_or(2000));
            (serde_json::to_value(&report).expect("report serializes"), verdict_exit(&[&report]))
        }
        VerifyWhat::Rg => {
            if k_star.is_some() || beta.is_some() {
                return Err(usage("--target Rg takes only --g-star"));
            }
            let g_star = g_star.unwrap_or(40);
            if g_star == 0 || g_star % 2 != 0 {
                return Err(usage("--g-star must be a positive even integer"));
            }
            let report = verify_rg(g_star)?;
            (serde_json::to_value(&report).expect("report serializes"), verdict_exit(&[&report]))
        }
        VerifyWhat::Table => {
            let k_max = k_star.unwrap_or(20);
            let g_max = g_star.unwrap_or(20);
            match beta {
                Some(v) => {
                    let report = verify_table(beta_of(v)?, k_max, g_max);
                    (
                        serde_json::to_value(&report).expect("report serializes"),
                        verdict_exit(&[&report]),
                    )
                }
                None => {
                    let reports = [
                        verify_table(Beta::Two, k_max, g_max),
                        verify_table(Beta::One, k_max, g_max),
                    ];
                    let code = verdict_exit(&[&reports[0], &reports[1]]);
                    (
                        json!({ "reports": [
                            serde_json::to_value(&reports[0]).expect("report serializes"),
                            serde_json::to_value(&reports[1]).expect("report serializes"),
                        ] }),
                        code,
                    )
                }
            }
        }
    };
    emit_document(document(payload), None)?;
    Ok(code)
}

fn run_mc(
    beta_v: u32,
    n: usize,
    k: u32,
    samples: u64,
    seed: u64,
    shards: usize,
) -> Result<i32, Failure> {
    let beta = beta_of(beta_v)?;
    let estimate = sample_delay_moment(beta, n, k, samples, seed, shards)?;
    let doc = document(serde_json::to_value(&estimate).expect("estimate serializes"))
        .with_metadata("rng", json!(RNG_SPEC));
    emit_document(doc, None)?;
    Ok(0)
}

fn run_reproduce(target: ReproduceTarget) -> Result<i32, Failure> {
    let report = reproduce_report(target)?;
    let code = if report.passed() { 0 } else { 3 };
    let doc = document(serde_json::to_value(&report).expect("report serializes"))
        .with_metadata("target", json!(target.name()));
    emit_document(doc, None)?;
    Ok(code)
}
