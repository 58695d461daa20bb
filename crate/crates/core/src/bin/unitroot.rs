use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use unitroot::config::{emit_config, parse_config};
use unitroot::hassewitt::Normalization;
use unitroot::pipeline::{exit, random_instance, run_command, Command, RunOptions};

#[derive(Parser)]
#[command(name = "unitroot", version, about = "Unit roots of zeta functions of projective hypersurfaces")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum NormArg {
    Multinomial,
    Literal,
}

#[derive(clap::Args)]
struct CommonArgs {
    /// Instance document (JSON, schema 1).
    #[arg(long)]
    config: PathBuf,
    /// p-adic precision m (overrides the config).
    #[arg(long)]
    precision: Option<u32>,
    /// Truncation order W for F(lambda) (top factorial W!); F(lambda^p) uses floor(W/p).
    #[arg(long)]
    truncation: Option<u64>,
    /// Hasse-Witt coefficient convention (hasse-witt only; verify always uses multinomial).
    #[arg(long, value_enum, default_value = "multinomial")]
    normalization: NormArg,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    /// Also write the report here.
    #[arg(long)]
    json_out: Option<PathBuf>,
    /// Include per-stage timing in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Canonical monomial ordering.
    Basis(CommonArgs),
    /// Hasse-Witt matrix, determinant and mod-p Frobenius polynomial.
    HasseWitt(CommonArgs),
    /// Point counts, zeta numerator and its unit factor.
    Zeta(CommonArgs),
    /// Unit-root polynomial from the hypergeometric Frobenius matrix.
    UnitRoots(CommonArgs),
    /// Oracle and theorem side, compared at every precision up to m.
    Verify(CommonArgs),
    /// Print a seeded random instance document.
    RandomConfig {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        a: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 2)]
        m: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, args) = match cli.command {
        Cmd::Basis(a) => (Command::Basis, a),
        Cmd::HasseWitt(a) => (Command::HasseWitt, a),
        Cmd::Zeta(a) => (Command::Zeta, a),
        Cmd::UnitRoots(a) => (Command::UnitRoots, a),
        Cmd::Verify(a) => (Command::Verify, a),
        Cmd::RandomConfig { seed, p, a, n, d, m } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            return match random_instance(&mut rng, p, a, n, d, m) {
                Ok(inst) => {
                    println!("{}", emit_config(&inst));
                    ExitCode::SUCCESS
                }
                Err(e) => fail(exit::VALIDATION, &e.to_string()),
            };
        }
    };
    if let Some(jobs) = args.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            return fail(exit::OTHER, &format!("thread pool: {e}"));
        }
    }
    let document = match std::fs::read_to_string(&args.config) {
        Ok(s) => s,
        Err(e) => return fail(exit::VALIDATION, &format!("cannot read {}: {e}", args.config.display())),
    };
    let instance = match parse_config(&document) {
        Ok(i) => i,
        Err(e) => return fail(exit::VALIDATION, &e.to_string()),
    };
    let opts = RunOptions {
        precision: args.precision,
        truncation: args.truncation,
        normalization: match args.normalization {
            NormArg::Multinomial => Normalization::Multinomial,
            NormArg::Literal => Normalization::Literal,
        },
        timing: args.timing,
    };
    let report = run_command(command, &instance, &opts);
    let json = report.to_json();
    println!("{json}");
    if let Some(path) = &args.json_out {
        if let Err(e) = std::fs::write(path, format!("{json}\n")) {
            return fail(exit::OTHER, &format!("cannot write {}: {e}", path.display()));
        }
    }
    for err in &report.errors {
        eprintln!("unitroot: {} stage: {}", err.stage, err.message);
    }
    ExitCode::from(report.exit_code as u8)
}

fn fail(code: i32, message: &str) -> ExitCode {
    eprintln!("unitroot: {message}");
    ExitCode::from(code as u8)
}
