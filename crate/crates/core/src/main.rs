use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use entcont::experiments::{
    emit_csv, run_figure1, run_property_suite, tightness_table, Ensemble, ExperimentConfig, Suite,
    TightnessRow, TIGHTNESS_DIMS, TIGHTNESS_EPSILONS,
};
use entcont::{Error, Execution};

/// Entropy-difference bounds: bound comparison, randomized property suites and
/// saturation table. All entropies are in nats.
#[derive(Parser)]
#[command(name = "entcont", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare the relative-entropy bounds on random triples and write the CSV.
    Figure1(Common),
    /// Run a randomized property suite.
    Verify {
        #[command(flatten)]
        common: Common,
        /// lidskii, theorem1, conditional, relent, dmax, proof-lemmas or all.
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
    },
    /// Print the saturation table of the entropy-difference bounds.
    Tightness(Common),
}

#[derive(Args)]
struct Common {
    /// Hilbert-space dimension (default 15; `verify` sweeps 2,3,5,8,15 when omitted).
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    /// Output file: CSV for figure1 and tightness, JSON report for verify.
    #[arg(long)]
    out: Option<PathBuf>,
    /// hilbert-schmidt, pure or equal-marginal.
    #[arg(long, default_value = "hilbert-schmidt", value_parser = parse_ensemble)]
    ensemble: Ensemble,
    /// Run trials on the calling thread only.
    #[arg(long)]
    sequential: bool,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_ensemble(s: &str) -> Result<Ensemble, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

impl Common {
    fn config(&self) -> ExperimentConfig {
        ExperimentConfig {
            dim: self.dim,
            trials: self.trials,
            seed: self.seed,
            tolerance: self.tolerance,
            ensemble: self.ensemble,
            output_path: self.out.clone(),
        }
    }

    fn execution(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        }
    }
}

fn figure1(args: &Common) -> Result<bool, Error> {
    let cfg = args.config();
    let started = Instant::now();
    let run = run_figure1(&cfg, args.execution())?;
    if let Some(path) = &cfg.output_path {
        emit_csv(&run.records, path)?;
    }
    let s = &run.summary;
    println!(
        "figure1: d={} trials={} seed={} ensemble={}",
        cfg.single_dim(),
        cfg.trials,
        cfg.seed,
        cfg.ensemble
    );
    println!("records          {}", run.records.len());
    println!("faults           {}", s.faults);
    for fault in &run.faults {
        println!("  trial {}: {}", fault.trial_index, fault.message);
    }
    println!("new <= bluhm     {:.3}", s.fraction_new_le_bluhm);
    println!("gour applicable  {}", s.gour_applicable);
    match s.fraction_new_le_gour {
        Some(f) => println!("new <= gour      {f:.3}"),
        None => println!("new <= gour      n/a"),
    }
    println!("min slack        {:.6e}", s.min_slack);
    println!("violations       {}", s.violations);
    println!("elapsed          {:.2}s", started.elapsed().as_secs_f64());
    let pass = s.all_pass();
    println!("{}", if pass { "PASS" } else { "FAIL" });
    Ok(pass)
}

fn verify(args: &Common, suite: Suite) -> Result<bool, Error> {
    let started = Instant::now();
    let report = run_property_suite(&args.config(), suite, args.execution())?;
    println!("{report}");
    println!("elapsed {:.2}s", started.elapsed().as_secs_f64());
    Ok(report.passed())
}

fn write_tightness(rows: &[TightnessRow], path: &Path) -> Result<(), Error> {
    let io = |e: csv::Error| Error::Io {
        path: path.to_path_buf(),
        source: e.into(),
    };
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_path(path)
        .map_err(io)?;
    w.write_record(["dim", "epsilon", "entropy_gap", "bound", "af", "slack", "af_slack"])
        .map_err(io)?;
    for r in rows {
        w.write_record([
            r.dim.to_string(),
            r.epsilon.to_string(),
            format!("{:.11e}", r.entropy_gap),
            format!("{:.11e}", r.bound),
            format!("{:.11e}", r.af),
            format!("{:.11e}", r.slack),
            format!("{:.11e}", r.af_slack),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn tightness(args: &Common) -> Result<bool, Error> {
    let cfg = args.config();
    cfg.validate()?;
    let dims = cfg.dim.map_or_else(|| TIGHTNESS_DIMS.to_vec(), |d| vec![d]);
    let rows = tightness_table(&dims, &TIGHTNESS_EPSILONS)?;
    println!(
        "{:>3} {:>5} {:>14} {:>14} {:>14} {:>11} {:>11}",
        "d", "eps", "S1-S2", "bound", "af", "slack", "af slack"
    );
    for r in &rows {
        println!(
            "{:>3} {:>5} {:>14.9} {:>14.9} {:>14.9} {:>11.2e} {:>11.2e}",
            r.dim, r.epsilon, r.entropy_gap, r.bound, r.af, r.slack, r.af_slack
        );
    }
    if let Some(path) = &cfg.output_path {
        write_tightness(&rows, path)?;
    }
    let pass = rows.iter().all(|r| r.saturated(cfg.tolerance));
    println!("{}", if pass { "PASS" } else { "FAIL" });
    Ok(pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Figure1(args) => figure1(args),
        Command::Verify { common, suite } => verify(common, *suite),
        Command::Tightness(args) => tightness(args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e @ Error::Usage(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
