use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cmpreproj::config::{DEFAULT_BOUND, DEFAULT_SEED};
use cmpreproj::{Config, Rational, F101};

mod commands;

/// Preprojective algebras of Dynkin type, their contractions, and
/// Cohen-Macaulay certificates.
#[derive(Parser, Debug)]
#[command(name = "cmpreproj", version)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Field characteristic: 101, or 0 for the rationals.
    #[arg(long = "char", global = true, default_value_t = 101)]
    pub characteristic: u64,
    /// Resolution length after which a dimension is reported as undetermined.
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND)]
    pub bound: usize,
    #[arg(long, global = true, env = "CMPREPROJ_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Tsv,
    Json,
}

/// A Dynkin type (`A6`, or a range `A3..A6` / list `A3,D4` with `--sweep`)
/// and a vertex subset.
#[derive(Args, Debug, Clone)]
pub struct Target {
    pub spec: String,
    /// Comma separated vertices, 1-based.
    #[arg(long = "J")]
    pub j: Option<String>,
    /// Run over every nonempty subset up to symmetry instead of `--J`.
    #[arg(long)]
    pub sweep: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension, Cartan matrix, frozen vertices and the triple (idim, fidim, domdim).
    Report(Target),
    /// All subsets of a Dynkin type grouped by their triple.
    Table { family: String, n: Option<usize> },
    /// Build and certify the dualizing module of a contraction.
    Certify(Target),
    /// Certify a given module over an algebra read from a presentation file.
    CertifyModule {
        algebra: PathBuf,
        /// Summands: P<i>, I<i>, S<i>, A, DA or a module file, comma separated.
        #[arg(long = "W")]
        w: Option<String>,
    },
    /// Axioms (c) and (d) in the stable category.
    Axioms(Target),
    /// Build an algebra and print its structure.
    Build {
        /// A Dynkin type or a presentation file.
        target: String,
        #[arg(long = "J")]
        j: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = Config::default().with_seed(cli.opts.seed).with_bound(cli.opts.bound);
    let run = match cli.opts.characteristic {
        101 => commands::run::<F101>(&cli.cmd, &cli.opts, &cfg),
        0 => commands::run::<Rational>(&cli.cmd, &cli.opts, &cfg),
        p => Err(commands::Failure::invalid(format!("unsupported characteristic {p}; use 101 or 0"))),
    };
    match run {
        Ok(out) => {
            print!("{}", out.stdout);
            if let Some(msg) = &out.message {
                eprintln!("{msg}");
            }
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
