//! Benchmark CLI: SAX vs TSAX classification error across datasets.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 when every dataset failed.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, ValueEnum};

use tsax::{
    run_comparison, scatter_path_for, write_report_csv, write_scatter_csv, ExperimentConfig,
    ExperimentReport, Protocol,
};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ProtocolArg {
    /// Classify each series against the rest of the same file.
    Loo,
    /// Classify each series of the given TEST file against its TRAIN sibling.
    TrainTest,
}

#[derive(Parser, Debug)]
#[command(
    name = "tsax-bench",
    version,
    about = "Compare SAX and TSAX 1NN classification error on UCR-format datasets"
)]
struct Cli {
    /// Alphabet size.
    #[arg(long, default_value_t = 4)]
    alpha: usize,

    /// Points per segment (n/m).
    #[arg(long, default_value_t = 4)]
    ratio: usize,

    /// Reward per matching trend pair (normally negative).
    #[arg(long, default_value_t = -1.0, allow_negative_numbers = true)]
    rew: f64,

    /// Penalty per opposite trend pair.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pen: f64,

    /// Neighbor-set protocol.
    #[arg(long, value_enum, default_value_t = ProtocolArg::Loo)]
    protocol: ProtocolArg,

    /// UCR-format dataset files, one dataset per file.
    #[arg(long = "data", value_name = "PATH", num_args = 1..)]
    data: Vec<PathBuf>,

    /// Report CSV path; the scatter CSV lands next to it.
    #[arg(long, default_value = "tsax_report.csv")]
    out: PathBuf,

    /// Seed for the synthetic fixture.
    #[arg(long, default_value_t = 7)]
    seed: u64,

    /// Run the built-in trend-pair fixture instead of files.
    #[arg(long, conflicts_with = "data")]
    synthetic: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(1);
        }
    };
    ExitCode::from(run(cli))
}

fn run(cli: Cli) -> u8 {
    if !cli.synthetic && cli.data.is_empty() {
        eprintln!("error: no datasets; pass --data <PATH>... or --synthetic");
        return 1;
    }

    let config = ExperimentConfig {
        alpha: cli.alpha,
        segment_ratio: cli.ratio,
        rew: cli.rew,
        pen: cli.pen,
        protocol: match cli.protocol {
            ProtocolArg::Loo => Protocol::Loo,
            ProtocolArg::TrainTest => Protocol::TrainTest,
        },
        data_paths: cli.data,
        synthetic: cli.synthetic,
        seed: cli.seed,
        use_cache: true,
    };

    let report = match run_comparison(&config) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };

    for failure in &report.failures {
        eprintln!("error: dataset {}: {}", failure.dataset, failure.message);
    }
    if report.rows.is_empty() {
        eprintln!("error: all {} datasets failed", report.failures.len());
        return 2;
    }

    print_table(&report);

    let scatter = scatter_path_for(&cli.out);
    if let Err(e) = write_report_csv(&report, &cli.out) {
        eprintln!("error: writing {}: {e}", cli.out.display());
        return 1;
    }
    if let Err(e) = write_scatter_csv(&report, &scatter) {
        eprintln!("error: writing {}: {e}", scatter.display());
        return 1;
    }
    println!("report:  {}", cli.out.display());
    println!("scatter: {}", scatter.display());
    0
}

fn print_table(report: &ExperimentReport) {
    let name_width = report
        .rows
        .iter()
        .map(|r| r.dataset.len())
        .max()
        .unwrap_or(7)
        .max("dataset".len());
    println!(
        "{:<name_width$}  {:>8}  {:>7}  {:>6}  {:>9}  {:>10}  winner",
        "dataset", "series", "classes", "length", "sax_error", "tsax_error"
    );
    for row in &report.rows {
        println!(
            "{:<name_width$}  {:>8}  {:>7}  {:>6}  {:>9.3}  {:>10.3}  {}",
            row.dataset,
            row.n_series,
            row.class_count,
            row.length,
            row.sax_error,
            row.tsax_error,
            row.winner()
        );
    }
    println!(
        "tsax wins: {}, sax wins: {}, ties: {}",
        report.tsax_wins(),
        report.sax_wins(),
        report.ties()
    );
}
