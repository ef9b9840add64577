use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use waveop::scenario::{
    check_invariants, compare_models, dump_superop, run_scenario, shipped_scenarios, IntegratorKind, RunOptions,
    RunReport, OUT_DIR_ENV,
};

#[derive(Parser)]
#[command(name = "waveop", version, about = "Wave-operator dynamics runs and invariant checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate the scenario and write time-series tables.
    Run(FileArgs),
    /// Run every invariant check; exits nonzero if any fails.
    Check(FileArgs),
    /// Run both models and write the comparison table.
    Compare(FileArgs),
    /// Write the extended-space generator as a table.
    DumpSuperop(FileArgs),
    /// List the scenarios bundled with the binary.
    ListScenarios,
}

#[derive(Clone, Copy, ValueEnum)]
enum Integrator {
    Exact,
    Stepping,
}

#[derive(Args)]
struct FileArgs {
    /// Scenario files (TOML) or names of bundled scenarios.
    #[arg(required = true)]
    files: Vec<PathBuf>,
    /// Output directory [env: WAVEOP_OUT_DIR, default: ./waveop-out]
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Multiplies every tolerance in the scenario.
    #[arg(long, default_value_t = 1.0)]
    tolerance_scale: f64,
    #[arg(long, value_enum)]
    integrator: Option<Integrator>,
    /// Largest step of the stepping integrators.
    #[arg(long)]
    dt: Option<f64>,
    /// Random specs checked for inner-product conservation (check only).
    #[arg(long, default_value_t = 0)]
    fuzz: usize,
}

impl FileArgs {
    fn options(&self) -> RunOptions {
        RunOptions {
            out_dir: self.out.clone(),
            seed: self.seed,
            tolerance_scale: self.tolerance_scale,
            integrator: self.integrator.map(|i| match i {
                Integrator::Exact => IntegratorKind::Exact,
                Integrator::Stepping => IntegratorKind::Stepping,
            }),
            dt: self.dt,
            fuzz: self.fuzz,
        }
    }
}

type Action = fn(&PathBuf, &RunOptions) -> waveop::Result<RunReport>;

fn sweep(args: &FileArgs, action: Action) -> ExitCode {
    let opts = args.options();
    let results: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = args
            .files
            .iter()
            .map(|f| {
                let opts = &opts;
                s.spawn(move || action(f, opts))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });

    let mut ok = true;
    for (file, result) in args.files.iter().zip(results) {
        match result {
            Ok(report) => {
                print!("{}", report.summary());
                ok &= report.all_passed();
            }
            Err(e) => {
                eprintln!("{}: {e}", file.display());
                ok = false;
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run(a) => sweep(&a, |f, o| run_scenario(f, o)),
        Command::Check(a) => sweep(&a, |f, o| check_invariants(f, o)),
        Command::Compare(a) => sweep(&a, |f, o| compare_models(f, o)),
        Command::DumpSuperop(a) => sweep(&a, |f, o| dump_superop(f, o)),
        Command::ListScenarios => {
            for s in shipped_scenarios() {
                println!("{:<20} {}", s.name, s.summary);
            }
            println!("\noutput directory: --out, else ${OUT_DIR_ENV}, else ./waveop-out");
            ExitCode::SUCCESS
        }
    }
}
