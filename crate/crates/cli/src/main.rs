use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, ValueEnum};

use toric_chow::algebra::Rational;
use toric_chow::Execution;
use toric_chow_cli::{
    parse_direction, parse_rationals, render, run, Command, Format, Input, RunConfig, DEFAULT_SEED,
    SEED_ENV,
};

#[derive(Clone, Copy, ValueEnum)]
enum Cmd {
    /// Check that the polytope is smooth and reflexive
    Validate,
    /// Dual polytope vertices, cones and neighbours
    Dual,
    /// Maximal cones of the fan
    Fan,
    /// k_p F_Td^p for p = 1..m by localization
    Obstructions,
    /// The Futaki invariant (p = 1)
    Futaki,
    /// Derivative of the Hilbert series at x = 1 along each --n
    HilbertDerivative,
    /// Laurent coefficients of the Hilbert series at xi = (b, m+1)
    Laurent,
    /// Everything: validate, fan, dual, obstructions, hilbert-derivative
    Report,
}

#[derive(Clone)]
struct Point(Vec<Rational>);

fn parse_point(text: &str) -> Result<Point, String> {
    parse_rationals(text).map(Point)
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Human,
    Structured,
}

/// Chow-stability obstructions of smooth toric Fano manifolds.
#[derive(Parser)]
#[command(name = "toric-chow", version)]
#[command(group(ArgGroup::new("source").required(true).args(["builtin", "input"])))]
struct Args {
    #[arg(value_enum)]
    command: Cmd,
    /// Bundled polytope: nill-paffenholz, p1, p2, p1xp1, p1cubed
    #[arg(long)]
    builtin: Option<String>,
    /// JSON polytope document with fields `dim` and `vertices`
    #[arg(long)]
    input: Option<PathBuf>,
    /// Direction n, comma separated; repeat for several directions
    #[arg(long = "n", value_parser = parse_direction, allow_hyphen_values = true)]
    directions: Vec<Vec<i64>>,
    /// Point b for `laurent`, comma separated rationals
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    xi: Option<Point>,
    /// Number of Laurent coefficients (default m + 2)
    #[arg(long)]
    window: Option<usize>,
    #[arg(long, env = SEED_ENV, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Write the report here instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "human")]
    format: OutputFormat,
    /// Include stage timings (makes output non-reproducible)
    #[arg(long)]
    timing: bool,
    /// Run every stage on one thread
    #[arg(long)]
    sequential: bool,
}

fn config(args: Args) -> (RunConfig, Option<PathBuf>) {
    let input = match (args.builtin, args.input) {
        (Some(name), _) => Input::Builtin(name),
        (None, Some(path)) => Input::File(path),
        (None, None) => unreachable!("clap enforces one source"),
    };
    let command = match args.command {
        Cmd::Validate => Command::Validate,
        Cmd::Dual => Command::Dual,
        Cmd::Fan => Command::Fan,
        Cmd::Obstructions => Command::Obstructions,
        Cmd::Futaki => Command::Futaki,
        Cmd::HilbertDerivative => Command::HilbertDerivative,
        Cmd::Laurent => Command::Laurent,
        Cmd::Report => Command::Report,
    };
    let mut cfg = RunConfig::new(input, command);
    cfg.directions = args.directions;
    cfg.xi = args.xi.map(|p| p.0);
    cfg.window = args.window;
    cfg.seed = args.seed;
    cfg.format = match args.format {
        OutputFormat::Human => Format::Human,
        OutputFormat::Structured => Format::Structured,
    };
    cfg.timing = args.timing;
    if args.sequential {
        cfg.execution = Execution::Sequential;
    }
    (cfg, args.output)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let (cfg, output) = config(args);
    let outcome = match run(&cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.kind.exit_code());
        }
    };
    let text = render(&outcome.report, cfg.format);
    let written = match &output {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: output: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(outcome.status)
}
