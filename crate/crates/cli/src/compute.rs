use std::io::Write;
use std::path::PathBuf;

use clap::Args;
use topoidx::{format_significant, lookup, registry, DegreeSource, Engine, IndexSpec, Rat, SpecialIndex};

use crate::{read_graph, CmdResult, Format};

#[derive(Args)]
pub struct ComputeArgs {
    file: PathBuf,
    /// Comma-separated index names.
    #[arg(long, value_delimiter = ',', required_unless_present = "all", conflicts_with = "all")]
    index: Vec<String>,
    /// Every registry entry and special index.
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Add a 12-significant-digit approximation.
    #[arg(long)]
    float: bool,
    /// Override the degree source of every descriptor.
    #[arg(long)]
    degree: Option<String>,
    /// Exponent for general-power names given without `a=`.
    #[arg(long, default_value = "3")]
    power: String,
}

/// One `(graph, index)` output row.
pub struct Record {
    pub graph: String,
    pub index: String,
    pub value: Result<String, String>,
    pub approx: Option<String>,
}

fn targets(args: &ComputeArgs, power: &Rat) -> Vec<(String, Result<IndexSpec, String>)> {
    if args.all {
        let mut names: Vec<String> = registry()
            .iter()
            .map(|e| e.name.clone())
            .chain(SpecialIndex::ALL.iter().map(|s| s.name().to_string()))
            .collect();
        names.sort();
        names
            .into_iter()
            .map(|n| {
                let spec = lookup(&n, Some(power)).map_err(|e| e.to_string());
                (n, spec)
            })
            .collect()
    } else {
        args.index
            .iter()
            .map(|n| (n.trim().to_string(), lookup(n, Some(power)).map_err(|e| e.to_string())))
            .collect()
    }
}

pub fn records(args: &ComputeArgs) -> Result<Vec<Record>, Box<dyn std::error::Error>> {
    let g = read_graph(&args.file)?;
    let power: Rat = args.power.parse()?;
    let source = match &args.degree {
        Some(s) => Some(DegreeSource::from_name(s).ok_or_else(|| format!("unknown degree source `{s}`"))?),
        None => None,
    };
    let graph = args.file.display().to_string();
    let engine = Engine::new(&g);
    let mut out = Vec::new();
    for (name, spec) in targets(args, &power) {
        let spec = spec.map(|s| match source {
            Some(src) => s.with_source(src),
            None => s,
        });
        let result = spec.and_then(|s| engine.evaluate_spec(&s).map_err(|e| e.to_string()));
        let approx = match (&result, args.float) {
            (Ok(r), true) => r.approx().map(|x| format_significant(x, 12)),
            _ => None,
        };
        out.push(Record { graph: graph.clone(), index: name, value: result.map(|r| r.render()), approx });
    }
    Ok(out)
}

pub fn run(args: &ComputeArgs, out: &mut dyn Write) -> CmdResult {
    let recs = records(args)?;
    let failed = recs.iter().any(|r| r.value.is_err());
    match args.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["graph", "index", "value", "approx"])?;
            for r in &recs {
                let value = match &r.value {
                    Ok(v) => v.clone(),
                    Err(e) => format!("error: {e}"),
                };
                w.write_record([r.graph.as_str(), &r.index, &value, r.approx.as_deref().unwrap_or("")])?;
            }
            w.flush()?;
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = recs
                .iter()
                .map(|r| {
                    let mut o = serde_json::json!({ "graph": r.graph, "index": r.index });
                    match &r.value {
                        Ok(v) => o["value"] = v.clone().into(),
                        Err(e) => o["error"] = e.clone().into(),
                    }
                    if let Some(a) = &r.approx {
                        o["approx"] = a.clone().into();
                    }
                    o
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
        }
        Format::Table => {
            let width = recs.iter().map(|r| r.index.len()).max().unwrap_or(0);
            for r in &recs {
                let value = match &r.value {
                    Ok(v) => v.clone(),
                    Err(e) => format!("error: {e}"),
                };
                match &r.approx {
                    Some(a) => writeln!(out, "{:width$}  {value}  ({a})", r.index)?,
                    None => writeln!(out, "{:width$}  {value}", r.index)?,
                }
            }
        }
    }
    Ok(if failed && !args.all { 1 } else { 0 })
}
