use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use kin_gap::fol;
use kin_gap::groups::classify;
use kin_gap::harness::{self, Format, SuiteConfig};
use kin_gap::{AffineMap, Error};

#[derive(Parser)]
#[command(
    name = "kin-gap",
    version,
    about = "Exact spacetime transformation checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite, or all of them.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Overridden by KIN_GAP_SEED when set.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        /// Exhaustive grid mode where the suite supports it.
        #[arg(long)]
        grid: bool,
        /// Word length for subgroup saturation.
        #[arg(long, default_value_t = 4)]
        word_length: usize,
        /// Replace lightlike relatedness by a falsified variant.
        #[arg(long, hide = true)]
        flip_lambda_sign: bool,
    },
    /// Print the classification flags of an affine map.
    Classify {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Evaluate a formula under an assignment.
    Eval {
        #[arg(long)]
        formula: PathBuf,
        #[arg(long, default_value = "")]
        assign: String,
    },
    /// List the registered suites.
    ListSuites,
}

enum Failure {
    Checks,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn seed_from_env(default: u64) -> Result<u64, Failure> {
    match std::env::var("KIN_GAP_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("KIN_GAP_SEED is not a u64: {s:?}"))),
        Err(_) => Ok(default),
    }
}

fn execute(command: Command) -> Result<(), Failure> {
    match command {
        Command::Verify {
            suite,
            samples,
            seed,
            format,
            grid,
            word_length,
            flip_lambda_sign,
        } => {
            let mut config = SuiteConfig::new(suite)
                .samples(samples)
                .seed(seed_from_env(seed)?)
                .grid(grid);
            config.word_length = word_length;
            if flip_lambda_sign {
                config.lambda = harness::flipped_lambda();
            }
            config.format = match format {
                FormatArg::Json => Format::Json,
                FormatArg::Text => Format::Text,
            };
            let reports = harness::run(&config)?;
            for r in &reports {
                match config.format {
                    Format::Json => println!("{}", r.to_json()),
                    Format::Text => print!("{}", r.to_text()),
                }
            }
            if reports.iter().all(|r| r.passed) {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
        Command::Classify { matrix } => {
            let map: AffineMap = read(&matrix)?.parse()?;
            println!("{}", classify(&map)?);
            Ok(())
        }
        Command::Eval { formula, assign } => {
            let phi = fol::parse(&read(&formula)?)?;
            let val = fol::parse_assignment(&assign)?;
            println!("{}", fol::evaluate(&phi, &val)?);
            Ok(())
        }
        Command::ListSuites => {
            for s in &harness::SUITES {
                println!("{:<18}{}", s.name, s.claim);
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
