//! `anthyph`: anthyphairetic expansion, side-and-diameter numbers, ratio
//! comparison and the seeded property suites from the command line.

mod commands;
mod literal;

use std::process::ExitCode;

use anthyph_core::verify::Suite;
use anthyph_core::{Error, Int, DEFAULT_MAX_STEPS};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::literal::{parse_int, parse_literal, Literal};

const LITERAL_HELP: &str =
    "Magnitude literals are `u,v,w,D` for (u + v·√D)/w, or `p/q` (or `n`) for a rational.";

#[derive(Debug, Parser)]
#[command(
    name = "anthyph",
    version,
    about = "Exact anthyphairesis of quadratic ratios"
)]
pub struct Cli {
    /// Emit a single JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[allow(clippy::large_enum_variant)]
#[derive(Debug, Subcommand)]
enum Command {
    /// Expand a quadratic relation, a square root, a rational or a surd.
    Anth(AnthArgs),
    /// Side and diameter numbers with their remainders.
    Convergents(ConvergentsArgs),
    /// Expansion of √N for every N from 2 up to --max.
    Theodorus {
        #[arg(long, default_value_t = 17)]
        max: u32,
    },
    /// Compare ratios of magnitudes.
    #[command(after_help = LITERAL_HELP)]
    Ratio {
        #[command(subcommand)]
        mode: RatioMode,
    },
    /// Run the seeded randomized property suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct AnthArgs {
    #[command(subcommand)]
    source: AnthSource,

    /// Give up after this many quotients (exit 3).
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_STEPS)]
    max_steps: usize,

    /// Include the sequence of relations visited.
    #[arg(long, global = true)]
    trace: bool,
}

#[derive(Debug, Subcommand)]
enum AnthSource {
    /// The relation with coefficients A, B, C.
    Form {
        #[arg(value_parser = parse_int)]
        a: Int,
        #[arg(value_parser = parse_int)]
        b: Int,
        #[arg(value_parser = parse_int)]
        c: Int,
        #[arg(long, value_enum, default_value_t = KindArg::Excess)]
        kind: KindArg,
    },
    /// √N, through the excess relation (1, 0, N).
    Sqrt {
        #[arg(value_parser = parse_int)]
        n: Int,
    },
    /// m/n by Euclid's algorithm.
    Rational {
        #[arg(value_parser = parse_int)]
        m: Int,
        #[arg(value_parser = parse_int)]
        n: Int,
    },
    /// (u + v·√D)/w.
    #[command(allow_negative_numbers = true)]
    Surd {
        #[arg(value_parser = parse_int)]
        u: Int,
        #[arg(value_parser = parse_int)]
        v: Int,
        #[arg(value_parser = parse_int)]
        w: Int,
        #[arg(value_parser = parse_int)]
        d: Int,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Excess,
    Defect,
}

#[derive(Debug, Args)]
struct ConvergentsArgs {
    #[command(subcommand)]
    source: Option<ConvergentsSource>,

    /// Explicit quotients k0,k1,...
    #[arg(long, global = true, value_delimiter = ',', value_parser = parse_int)]
    quotients: Vec<Int>,

    /// Last index n of the table.
    #[arg(long, global = true, default_value_t = 10)]
    count: usize,
}

#[derive(Debug, Subcommand)]
enum ConvergentsSource {
    /// Quotients of √N; remainders are shown for a = √N, b = 1.
    Sqrt {
        #[arg(value_parser = parse_int)]
        n: Int,
    },
}

#[allow(clippy::large_enum_variant)]
#[derive(Debug, Subcommand)]
enum RatioMode {
    /// a/b = c/d by equal anthyphairesis.
    #[command(allow_negative_numbers = true, after_help = LITERAL_HELP)]
    Eq {
        #[arg(value_parser = parse_literal, num_args = 4, required = true)]
        magnitudes: Vec<Literal>,
    },
    /// a·d = b·c; all four magnitudes must share one field.
    #[command(allow_negative_numbers = true, after_help = LITERAL_HELP)]
    Cross {
        #[arg(value_parser = parse_literal, num_args = 4, required = true)]
        magnitudes: Vec<Literal>,
    },
    /// a/b = m/n for two magnitudes and two numbers.
    #[command(allow_negative_numbers = true, after_help = LITERAL_HELP)]
    Mixed {
        #[arg(value_parser = parse_literal)]
        a: Literal,
        #[arg(value_parser = parse_literal)]
        b: Literal,
        #[arg(value_parser = parse_int)]
        m: Int,
        #[arg(value_parser = parse_int)]
        n: Int,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Engine,
    Ratio,
    Areas,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Engine => Suite::Engine,
            SuiteArg::Ratio => Suite::Ratio,
            SuiteArg::Areas => Suite::Areas,
            SuiteArg::All => Suite::All,
        }
    }
}

/// Output of a successful command.
pub struct Report {
    command: &'static str,
    input: Value,
    result: Value,
    text: String,
    code: u8,
}

impl Report {
    fn envelope(&self) -> Value {
        json!({
            "command": self.command,
            "input": self.input,
            "result": self.result,
            "version": env!("CARGO_PKG_VERSION"),
        })
    }
}

/// A failed command: message for stderr and exit code.
#[derive(Debug)]
pub struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Indeterminate { .. } => 3,
            Error::Invariant(_) => 2,
            _ => 1,
        };
        Failure {
            message: e.to_string(),
            code,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let outcome = match cli.command {
        Command::Anth(args) => commands::anth(args.source, args.max_steps, args.trace),
        Command::Convergents(args) => {
            commands::convergents(args.source, &args.quotients, args.count)
        }
        Command::Theodorus { max } => commands::theodorus(max),
        Command::Ratio { mode } => commands::ratio(mode),
        Command::Verify {
            suite,
            trials,
            seed,
        } => Ok(commands::verify(suite.into(), trials, seed)),
    };
    match outcome {
        Ok(report) => {
            if cli.json {
                let out = serde_json::to_string_pretty(&report.envelope()).expect("serializable");
                println!("{out}");
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(report.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
