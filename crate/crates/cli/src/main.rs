use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod compute;
mod verify;

#[derive(Parser)]
#[command(name = "topoidx", version, about = "Exact Rehan-Lanel topological indices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family member as an edge list.
    Gen {
        family: String,
        params: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate indices on an edge-list file.
    Compute(compute::ComputeArgs),
    /// Check the closed forms against direct evaluation.
    Verify(verify::VerifyArgs),
    /// Print the index registry.
    ListIndices,
    /// Print the registered closed forms.
    ListOracles,
    /// Print a degree functional per vertex.
    Table {
        file: PathBuf,
        #[arg(long, default_value = "plain")]
        source: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = dispatch(cli.command, &mut out);
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Gen { family, params, output } => cmd_gen(&family, &params, output, out),
        Command::Compute(args) => compute::run(&args, out),
        Command::Verify(args) => verify::run(&args, out),
        Command::ListIndices => cmd_list_indices(out),
        Command::ListOracles => cmd_list_oracles(out),
        Command::Table { file, source } => cmd_table(&file, &source, out),
    }
}

pub(crate) type CmdResult = Result<u8, Box<dyn std::error::Error>>;

fn write_out(output: Option<&PathBuf>, text: &str, out: &mut dyn Write) -> std::io::Result<()> {
    match output {
        Some(path) => std::fs::write(path, text),
        None => write!(out, "{text}"),
    }
}

fn cmd_gen(family: &str, params: &[usize], output: Option<PathBuf>, out: &mut dyn Write) -> CmdResult {
    let spec = topoidx::FamilySpec::parse(family, params)?;
    let g = topoidx::generate(&spec)?;
    write_out(output.as_ref(), &topoidx::write_edge_list(&g, Some(&spec.to_string())), out)?;
    Ok(0)
}

pub(crate) fn read_graph(path: &PathBuf) -> Result<topoidx::Graph, Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(topoidx::parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))?)
}

fn cmd_list_indices(out: &mut dyn Write) -> CmdResult {
    let mut w = csv::Writer::from_writer(&mut *out);
    w.write_record(["name", "source", "variant", "transform", "aggregation", "form"])?;
    for e in topoidx::registry() {
        w.write_record([
            e.name.as_str(),
            e.source.name(),
            &format!("V{}", e.variant.number()),
            e.transform.name(),
            e.aggregation.name(),
            e.form.name(),
        ])?;
    }
    for s in topoidx::SpecialIndex::ALL {
        w.write_record([s.name(), s.basis(), "special", s.formula(), "sum", "value"])?;
    }
    w.flush()?;
    Ok(0)
}

fn cmd_list_oracles(out: &mut dyn Write) -> CmdResult {
    let mut w = csv::Writer::from_writer(&mut *out);
    w.write_record(["oracle_id", "family", "index", "range", "statement"])?;
    for o in topoidx::oracles() {
        w.write_record([o.id, o.family.name(), o.index, o.range, o.statement])?;
    }
    w.flush()?;
    Ok(0)
}

fn cmd_table(file: &PathBuf, source: &str, out: &mut dyn Write) -> CmdResult {
    let g = read_graph(file)?;
    let source = topoidx::DegreeSource::from_name(source).ok_or_else(|| format!("unknown degree source `{source}`"))?;
    let table = topoidx::functionals::table(&g, source, &topoidx::DominationConfig::from_env())?;
    let mut w = csv::Writer::from_writer(&mut *out);
    w.write_record(["vertex", "value_num", "value_den"])?;
    for (label, v) in table.rows(&g) {
        w.write_record([label, v.numer().to_string(), v.denom().to_string()])?;
    }
    w.flush()?;
    Ok(0)
}

#[cfg(test)]
mod tests;
