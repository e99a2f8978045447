mod cache;

use std::process::ExitCode;

use anyhow::{bail, Context};
use bernoulli_stirling::formulas::{bernoulli_oracle_table, genocchi_theorem};
use bernoulli_stirling::harness::{bench, bench_indices, verify_range_with, BENCH_CSV_HEADER};
use bernoulli_stirling::{FormulaId, StirlingTriangle};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_DISSENT: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "bstir", version, about = "Exact Bernoulli, Genocchi and Stirling-number formulas")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain, global = true)]
    format: OutputFormat,

    /// Zero all timing fields so output is byte-stable.
    #[arg(long, global = true)]
    deterministic: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Bernoulli,
    Genocchi,
    Stirling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CacheAction {
    Build,
    Path,
    Clear,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one formula at one index (G_n for the Genocchi formula, B_n otherwise).
    Compute {
        /// Formula identifier, case-insensitive.
        formula: String,
        n: usize,
    },
    /// Compare every formula with the series oracle for n = 0..=max-n.
    Verify {
        #[arg(long, default_value_t = 20)]
        max_n: usize,
        /// Treat dissent from untrusted formulas as failure too.
        #[arg(long)]
        strict: bool,
        /// Evaluate indices one at a time.
        #[arg(long)]
        sequential: bool,
    },
    /// Print a table of values.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(value_name = "MAX_N")]
        max_n_pos: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Time every trusted formula at n = 8, 16, 32, ... up to max-n.
    Bench {
        #[arg(long, default_value_t = 64)]
        max_n: usize,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        reps: u64,
    },
    /// Manage the on-disk Stirling triangle cache.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
        #[arg(value_name = "MAX_N")]
        max_n_pos: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    match &cli.command {
        Command::Compute { formula, n } => compute(cli, formula, *n),
        Command::Verify { max_n, strict, sequential } => verify(cli, *max_n, *strict, !*sequential),
        Command::Table { kind, max_n_pos, max_n } => table(cli, *kind, max_n.or(*max_n_pos).unwrap_or(10)),
        Command::Bench { max_n, reps } => run_bench(cli, *max_n, *reps as usize),
        Command::Cache { action, max_n_pos, max_n } => run_cache(*action, max_n.or(*max_n_pos).unwrap_or(128)),
    }
}

fn compute(cli: &Cli, name: &str, n: usize) -> anyhow::Result<u8> {
    let formula: FormulaId = name.parse()?;
    if !formula.applicable(n) {
        bail!("{formula} is not applicable at n={n}");
    }
    let ctx = cache::context_for_index(n);
    let value = formula.evaluate_native(&ctx, n)?;
    match cli.format {
        OutputFormat::Plain => println!("{value}"),
        OutputFormat::Csv => println!("formula,n,value\n{formula},{n},{value}"),
        OutputFormat::Json => {
            println!("{}", json!({ "formula": formula.name(), "n": n, "value": value.to_string() }))
        }
    }
    Ok(EXIT_OK)
}

fn verify(cli: &Cli, max_n: usize, strict: bool, parallel: bool) -> anyhow::Result<u8> {
    let ctx = cache::context_for_index(max_n);
    let mut report = verify_range_with(&ctx, max_n, parallel)?;
    if cli.deterministic {
        report.zero_timings();
    }
    match cli.format {
        OutputFormat::Plain => print!("{}", report.to_plain()),
        OutputFormat::Csv => print!("{}", report.to_csv()),
        OutputFormat::Json => println!("{}", report.to_json()),
    }
    Ok(if report.has_dissent(strict) { EXIT_DISSENT } else { EXIT_OK })
}

fn table(cli: &Cli, kind: TableKind, max_n: usize) -> anyhow::Result<u8> {
    let kind_name = match kind {
        TableKind::Bernoulli => "bernoulli",
        TableKind::Genocchi => "genocchi",
        TableKind::Stirling => "stirling",
    };
    if kind == TableKind::Stirling {
        let t = cache::triangle_with_rows(max_n);
        let t = if t.max_n() == max_n { t.as_ref().clone() } else { t.resized(max_n) };
        print_stirling(cli.format, &t);
        return Ok(EXIT_OK);
    }
    let rows: Vec<(usize, String)> = match kind {
        TableKind::Bernoulli => {
            bernoulli_oracle_table(max_n).into_iter().enumerate().map(|(n, b)| (n, b.to_string())).collect()
        }
        _ => {
            let ctx = cache::context_for_index(max_n);
            (1..=max_n).map(|n| Ok((n, genocchi_theorem(&ctx, n)?.to_string()))).collect::<anyhow::Result<_>>()?
        }
    };
    match cli.format {
        OutputFormat::Plain => rows.iter().for_each(|(n, v)| println!("{n} {v}")),
        OutputFormat::Csv => {
            println!("n,value");
            rows.iter().for_each(|(n, v)| println!("{n},{v}"));
        }
        OutputFormat::Json => {
            let rows: Vec<_> = rows.iter().map(|(n, v)| json!({ "n": n, "value": v })).collect();
            println!("{}", serde_json::to_string_pretty(&json!({ "kind": kind_name, "max_n": max_n, "rows": rows }))?);
        }
    }
    Ok(EXIT_OK)
}

fn print_stirling(format: OutputFormat, t: &StirlingTriangle) {
    match format {
        OutputFormat::Plain => {
            for row in t.rows() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                println!("{}", cells.join(","));
            }
        }
        OutputFormat::Csv => {
            println!("n,k,value");
            for (n, row) in t.rows().iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    println!("{n},{k},{v}");
                }
            }
        }
        OutputFormat::Json => {
            let rows: Vec<Vec<String>> = t.rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
            let doc = json!({ "kind": "stirling", "max_n": t.max_n(), "rows": rows });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
    }
}

fn run_bench(cli: &Cli, max_n: usize, reps: usize) -> anyhow::Result<u8> {
    let ctx = cache::context_for_index(max_n);
    let formulas: Vec<FormulaId> = FormulaId::trusted_ids().collect();
    let mut records = bench(&ctx, &formulas, &bench_indices(max_n), reps)?;
    if cli.deterministic {
        records.iter_mut().for_each(|r| r.median_ns = 0);
    }
    if cli.format == OutputFormat::Json {
        println!("{}", serde_json::to_string_pretty(&records)?);
    } else {
        println!("{BENCH_CSV_HEADER}");
        records.iter().for_each(|r| println!("{}", r.csv_row()));
    }
    Ok(EXIT_OK)
}

fn run_cache(action: CacheAction, max_n: usize) -> anyhow::Result<u8> {
    match action {
        CacheAction::Build => {
            let path = cache::build(max_n)?;
            println!("{}", path.display());
        }
        CacheAction::Path => {
            let path = cache::cache_file();
            if !path.exists() {
                eprintln!("note: no cache built yet");
            }
            println!("{}", path.display());
        }
        CacheAction::Clear => cache::clear().context("clearing cache")?,
    }
    Ok(EXIT_OK)
}
