use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use sixmotif::fit::parse_edges_millions;
use sixmotif::{fit_runtime_model, load_five_counts, read_timing_table, FiveInput, RunConfig};

#[derive(Parser)]
#[command(
    name = "sixmotif",
    version,
    about = "Exact counts of low-connectivity six-vertex motifs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count the 17 six-vertex motifs of an edge-list graph.
    Count(CountArgs),
    /// Fit seconds = intercept + slope * (edges in millions) to a timing table.
    Predict(PredictArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FiveEngine {
    Scalable,
    Reference,
}

#[derive(clap::Args)]
struct CountArgs {
    /// Whitespace-separated edge list, one edge per line.
    #[arg(long)]
    input: PathBuf,
    /// Precomputed five-vertex counts as `index count` lines.
    #[arg(long)]
    five_counts: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Print per-stage timings to stderr as well.
    #[arg(long)]
    timing: bool,
    /// Omit timings so reports are byte-identical across runs.
    #[arg(long, conflicts_with = "timing")]
    no_timing: bool,
    /// Cross-check every count by brute force; fails above --max-oracle-n.
    #[arg(long)]
    oracle_check: bool,
    #[arg(long, default_value_t = 12)]
    max_oracle_n: usize,
    /// Engine for five-vertex counts when no counts file is given.
    #[arg(
        long,
        value_enum,
        default_value = "scalable",
        conflicts_with = "five_counts"
    )]
    five_engine: FiveEngine,
}

#[derive(clap::Args)]
struct PredictArgs {
    /// CSV with a `name,edges,seconds` header; edges may use K/M/B suffixes.
    #[arg(long)]
    table: PathBuf,
    /// Also predict the runtime for this edge count.
    #[arg(long)]
    edges: Option<String>,
}

fn count(a: CountArgs) -> Result<bool> {
    let five = match &a.five_counts {
        Some(p) => {
            let text = fs::read_to_string(p)
                .with_context(|| format!("reading five-vertex counts {}", p.display()))?;
            FiveInput::Given(Box::new(
                load_five_counts(&text).with_context(|| p.display().to_string())?,
            ))
        }
        None => match a.five_engine {
            FiveEngine::Scalable => FiveInput::Scalable,
            FiveEngine::Reference => FiveInput::Reference,
        },
    };
    let cfg = RunConfig {
        five,
        oracle_check: a.oracle_check,
        max_oracle_n: a.max_oracle_n,
        five_counts_path: a.five_counts.as_ref().map(|p| p.display().to_string()),
    };
    let report = sixmotif::run_path(&a.input, &cfg)
        .with_context(|| format!("counting {}", a.input.display()))?;
    let timing = !a.no_timing;
    match a.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report.to_json(timing))?),
        Format::Csv => print!("{}", report.to_csv(timing)),
    }
    if a.timing {
        let t = &report.times;
        eprintln!(
            "ingest {:.3}s  primitives {:.3}s  five {:.3}s  six {:.3}s",
            t.ingest.as_secs_f64(),
            t.primitives.as_secs_f64(),
            t.five.as_secs_f64(),
            t.six.as_secs_f64()
        );
    }
    if let Some(r) = &report.oracle {
        eprint!("{}", r.to_text());
    }
    Ok(report.oracle_ok())
}

fn predict(a: PredictArgs) -> Result<()> {
    let file = fs::File::open(&a.table).with_context(|| a.table.display().to_string())?;
    let rows = read_timing_table(file).with_context(|| a.table.display().to_string())?;
    let points: Vec<_> = rows.iter().map(|r| (r.edges_millions, r.seconds)).collect();
    let fit = fit_runtime_model(&points)?;
    println!("slope {:.4}", fit.slope);
    println!("intercept {:.4}", fit.intercept);
    println!("name,edges_millions,seconds,predicted");
    for r in &rows {
        println!(
            "{},{},{},{:.3}",
            r.name,
            r.edges_millions,
            r.seconds,
            fit.predict(r.edges_millions)
        );
    }
    if let Some(e) = &a.edges {
        let Some(m) = parse_edges_millions(e) else {
            bail!("bad edge count {e:?}");
        };
        println!("prediction {:.3}", fit.predict(m));
    }
    Ok(())
}

fn main() -> ExitCode {
    let result = match Cli::parse().cmd {
        Cmd::Count(a) => count(a),
        Cmd::Predict(a) => predict(a).map(|()| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("error: oracle check found mismatches");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
