//! Argument parsing and output rendering for the `bernstir` binary.
//!
//! Rationals print as `p/q` in lowest terms with `q > 0`, integers as `p`.
//! Polynomial coefficients are listed low degree first. In JSON every number
//! is a string so that arbitrarily large values survive intact.

use std::fmt::Write as _;

use bernstir::sequences::{bernoulli_first, bernoulli_polynomial, bernoulli_second};
use bernstir::{stirling1, stirling1_unsigned, stirling2, IdentityId, IdentityReport, SuiteConfig};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value as Json};

#[derive(Debug, Parser)]
#[command(name = "bernstir", version, about = "Exact Stirling and Bernoulli tables and identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print rows 0..=max-n of a sequence or triangle.
    ///
    /// Triangles print one row per n with k = 0..=n. `bernpoly` prints the
    /// monomial coefficients of B_n(X), low degree first.
    Table(TableArgs),
    /// Check identities exactly over the given ranges.
    ///
    /// Exit status is 0 when every identity holds, 1 when a counterexample
    /// was found, 2 on usage errors.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Sequence to print.
    #[arg(value_enum, required_unless_present = "family_flag", conflicts_with = "family_flag")]
    pub family: Option<Family>,
    /// Same as the positional argument.
    #[arg(long = "family", value_enum, value_name = "NAME")]
    pub family_flag: Option<Family>,
    #[arg(long, default_value_t = 10)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl TableArgs {
    pub fn family(&self) -> Family {
        self.family
            .or(self.family_flag)
            .expect("clap requires one of the family arguments")
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity id (e.g. T4, EQ5_ORTHO, C5_REMARK_SERIES) or `all`.
    #[arg(long, default_value = "all", value_parser = parse_selection)]
    pub identity: Selection,
    #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_n: u32,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_r: u32,
    /// Random round trips for the inversion check.
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
    pub trials: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl VerifyArgs {
    pub fn config(&self) -> SuiteConfig {
        SuiteConfig {
            max_n: self.max_n as usize,
            max_r: self.max_r as usize,
            trials: self.trials as usize,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    All,
    One(IdentityId),
}

impl Selection {
    pub fn label(self) -> &'static str {
        match self {
            Selection::All => "all",
            Selection::One(id) => id.as_str(),
        }
    }
}

fn parse_selection(s: &str) -> Result<Selection, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(Selection::All);
    }
    s.parse().map(Selection::One).map_err(|e: bernstir::Error| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Signed Stirling numbers of the first kind s(n,k).
    Stirling1,
    /// Unsigned Stirling numbers of the first kind |s(n,k)|.
    Stirling1u,
    /// Stirling numbers of the second kind S(n,k).
    Stirling2,
    /// Bernoulli numbers B_n (B_1 = -1/2).
    Bernoulli1,
    /// Bernoulli numbers of the second kind B*_n.
    Bernoulli2,
    /// Bernoulli polynomials B_n(X), monomial coefficients.
    Bernpoly,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Stirling1 => "stirling1",
            Family::Stirling1u => "stirling1u",
            Family::Stirling2 => "stirling2",
            Family::Bernoulli1 => "bernoulli1",
            Family::Bernoulli2 => "bernoulli2",
            Family::Bernpoly => "bernpoly",
        }
    }

    /// Whether a row holds one value (a sequence) or several (a triangle or
    /// polynomial).
    pub fn is_scalar(self) -> bool {
        matches!(self, Family::Bernoulli1 | Family::Bernoulli2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

/// Row `n` of the family, for `n = 0..=max_n`.
pub fn table_rows(family: Family, max_n: usize) -> Vec<Vec<BigRational>> {
    let int = |v| BigRational::from_integer(v);
    (0..=max_n)
        .map(|n| match family {
            Family::Stirling1 => (0..=n).map(|k| int(stirling1(n, k))).collect(),
            Family::Stirling1u => (0..=n).map(|k| int(stirling1_unsigned(n, k))).collect(),
            Family::Stirling2 => (0..=n).map(|k| int(stirling2(n, k))).collect(),
            Family::Bernoulli1 => vec![bernoulli_first(n)],
            Family::Bernoulli2 => vec![bernoulli_second(n)],
            Family::Bernpoly => bernoulli_polynomial(n).into_coeffs(),
        })
        .collect()
}

fn join(values: &[BigRational]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn render_table(family: Family, max_n: usize, format: Format) -> String {
    let rows = table_rows(family, max_n);
    match format {
        Format::Text => rows.iter().map(|r| join(r) + "\n").collect(),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let scalar = family.is_scalar();
            if scalar {
                w.write_record(["n", "value"]).expect("in-memory write");
            } else {
                w.write_record(["n", "k", "value"]).expect("in-memory write");
            }
            for (n, row) in rows.iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    let (n, k, v) = (n.to_string(), k.to_string(), v.to_string());
                    if scalar {
                        w.write_record([&n, &v]).expect("in-memory write");
                    } else {
                        w.write_record([&n, &k, &v]).expect("in-memory write");
                    }
                }
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Format::Json => {
            let rows: Vec<Json> = rows
                .iter()
                .enumerate()
                .map(|(n, row)| {
                    json!({
                        "n": n.to_string(),
                        "values": row.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc = json!({
                "family": family.name(),
                "params": { "max_n": max_n.to_string() },
                "rows": rows,
            });
            serde_json::to_string_pretty(&doc).expect("json") + "\n"
        }
    }
}

fn params_string(report: &IdentityReport) -> String {
    report
        .counterexample
        .as_ref()
        .map(|ce| {
            ce.params
                .iter()
                .map(|(name, v)| format!("{name}={v}"))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .unwrap_or_default()
}

fn report_json(report: &IdentityReport) -> Json {
    let counterexample = report.counterexample.as_ref().map(|ce| {
        let params: serde_json::Map<String, Json> = ce
            .params
            .iter()
            .map(|(name, v)| (name.to_string(), Json::String(v.to_string())))
            .collect();
        json!({ "params": params, "lhs": ce.lhs.to_string(), "rhs": ce.rhs.to_string() })
    });
    json!({
        "id": report.id.as_str(),
        "formula": report.id.formula(),
        "range": report.range,
        "status": report.status.as_str(),
        "checks_performed": report.checks_performed.to_string(),
        "counterexample": counterexample,
        "notes": report.notes,
    })
}

pub fn render_reports(
    selection: Selection,
    config: &SuiteConfig,
    reports: &[IdentityReport],
    format: Format,
) -> String {
    let passed = reports.iter().filter(|r| r.passed()).count();
    let overall = if passed == reports.len() { "pass" } else { "fail" };
    match format {
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                let _ = writeln!(
                    out,
                    "{:<24} {:<4} checks={:<6} {}",
                    r.id.as_str(),
                    r.status.as_str(),
                    r.checks_performed,
                    r.range
                );
                let _ = writeln!(out, "    {}", r.id.formula());
                for note in &r.notes {
                    let _ = writeln!(out, "    note: {note}");
                }
                if let Some(ce) = &r.counterexample {
                    let _ = writeln!(out, "    counterexample: {}", params_string(r));
                    let _ = writeln!(out, "      lhs = {}", ce.lhs);
                    let _ = writeln!(out, "      rhs = {}", ce.rhs);
                }
            }
            let _ = writeln!(out, "{overall}: {passed}/{} identities hold", reports.len());
            out
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "identity",
                "status",
                "checks_performed",
                "range",
                "counterexample",
                "lhs",
                "rhs",
                "notes",
            ])
            .expect("in-memory write");
            for r in reports {
                let (lhs, rhs) = r
                    .counterexample
                    .as_ref()
                    .map(|ce| (ce.lhs.to_string(), ce.rhs.to_string()))
                    .unwrap_or_default();
                w.write_record([
                    r.id.as_str(),
                    r.status.as_str(),
                    &r.checks_performed.to_string(),
                    &r.range,
                    &params_string(r),
                    &lhs,
                    &rhs,
                    &r.notes.join("; "),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Format::Json => {
            let doc = json!({
                "identity": selection.label(),
                "params": {
                    "max_n": config.max_n.to_string(),
                    "max_r": config.max_r.to_string(),
                    "trials": config.trials.to_string(),
                    "seed": config.seed.to_string(),
                },
                "status": overall,
                "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&doc).expect("json") + "\n"
        }
    }
}

/// Runs the selected checks. Errors only on invalid bounds, which the
/// argument parser already rules out.
pub fn verify(args: &VerifyArgs) -> bernstir::Result<Vec<IdentityReport>> {
    let config = args.config();
    match args.identity {
        Selection::All => bernstir::run_all(&config),
        Selection::One(id) => bernstir::identities::check(id, &config).map(|r| vec![r]),
    }
}
