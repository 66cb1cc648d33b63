use std::io::Write;
use std::path::PathBuf;

use clap::Args;
use topoidx::closed_forms::{summarize, VerifyOptions};
use topoidx::{verify, Baseline, DominationConfig, FamilyKind, OracleResult};

use crate::{CmdResult, Format};

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long)]
    family: Option<String>,
    /// Size range `A..B` (inclusive) or a single size.
    #[arg(long, default_value = "3..10")]
    range: String,
    #[arg(long)]
    oracle: Option<String>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Expected verdicts; defaults to the shipped baseline.
    #[arg(long)]
    baseline: Option<PathBuf>,
    /// Print the results as a baseline file instead of a report.
    #[arg(long)]
    emit_baseline: bool,
}

pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let bad = || format!("bad range `{s}`, expected A..B");
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim().trim_start_matches('=')),
        None => (s.trim(), s.trim()),
    };
    let lo: usize = a.parse().map_err(|_| bad())?;
    let hi: usize = b.parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn cell(v: &Option<topoidx::OracleValue>) -> String {
    v.as_ref().map(|v| v.to_string()).unwrap_or_default()
}

fn direct_cell(r: &OracleResult) -> String {
    match (&r.direct, &r.error) {
        (Some(d), _) => d.to_string(),
        (None, Some(e)) => format!("error: {e}"),
        (None, None) => String::new(),
    }
}

pub fn run(args: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let family = match &args.family {
        Some(f) => Some(FamilyKind::from_name(f).ok_or_else(|| format!("unknown family `{f}`"))?),
        None => None,
    };
    let opts = VerifyOptions {
        family,
        range: parse_range(&args.range)?,
        oracle: args.oracle.clone(),
        domination: DominationConfig::from_env(),
    };
    let results = verify(&opts)?;
    if args.emit_baseline {
        write!(out, "{}", Baseline::from_results(&results).render())?;
        return Ok(0);
    }
    let baseline = match &args.baseline {
        Some(p) => Baseline::parse(&std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?)?,
        None => Baseline::shipped(),
    };
    let report = baseline.compare(&results);

    match args.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["oracle_id", "family_params", "oracle_value", "direct_value", "verdict"])?;
            for r in &results {
                w.write_record([
                    r.id.clone(),
                    r.point.params_label(),
                    cell(&r.oracle),
                    direct_cell(r),
                    r.verdict.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = results
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "oracle_id": r.id,
                        "family_params": r.point.params_label(),
                        "oracle_value": r.oracle.as_ref().map(|v| v.to_string()),
                        "direct_value": r.direct.as_ref().map(|v| v.to_string()),
                        "difference": r.difference.as_ref().map(|v| v.to_string()),
                        "verdict": r.verdict.name(),
                        "error": r.error,
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
        }
        Format::Table => {
            for (id, (verdict, points)) in summarize(&results) {
                writeln!(out, "{id:24} {verdict:10} {points:>3} point(s)")?;
                for r in results.iter().filter(|r| r.id == id && r.verdict != topoidx::Verdict::Confirmed) {
                    writeln!(out, "    {:14} oracle {}  direct {}", r.point.params_label(), cell(&r.oracle), direct_cell(r))?;
                }
            }
        }
    }

    let count = |v| results.iter().filter(|r| r.verdict == v).count();
    eprintln!(
        "{} result(s): {} confirmed, {} discrepant, {} error; baseline: {} matched, {} deviation(s), {} unlisted",
        results.len(),
        count(topoidx::Verdict::Confirmed),
        count(topoidx::Verdict::Discrepant),
        count(topoidx::Verdict::Error),
        report.matched,
        report.deviations.len(),
        report.unlisted.len(),
    );
    for d in &report.deviations {
        eprintln!("deviation: {} {} expected {} got {}", d.id, d.params, d.expected, d.actual);
    }
    Ok(if report.ok() { 0 } else { 1 })
}
