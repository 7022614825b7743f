use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use knotslopes::{BracketError, Engine, JonesError, JonesOptions, DEFAULT_ORACLE_BOUND};
use knotslopes_cli::report::{self, Format, Report};
use knotslopes_cli::resolve_input;

/// Batch reports on knot diagrams: adequacy, state-surface boundary slopes,
/// Kauffman brackets, and colored Jones polynomial degree sequences.
#[derive(Parser)]
#[command(name = "knotslopes", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, default_value = "json")]
    format: Format,
    /// Worker thread cap (defaults to available parallelism); results are
    /// identical for every thread count
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Args)]
struct InputArgs {
    /// Braid word "[strands:] i j k ..." closed into a diagram
    #[arg(long, allow_hyphen_values = true)]
    braid: Option<String>,
    /// PD code JSON file
    #[arg(long)]
    pd: Option<PathBuf>,
    /// Pretzel parameters "q1,q2,..."
    #[arg(long, allow_hyphen_values = true)]
    pretzel: Option<String>,
    /// The 0-crossing unknot
    #[arg(long)]
    unknot: bool,
    /// A built-in catalog diagram by name
    #[arg(long)]
    knot: Option<String>,
}

#[derive(Args)]
struct EngineArgs {
    /// Bracket evaluation engine
    #[arg(long, default_value = "dp")]
    engine: Engine,
    /// Crossing bound for the naive engine
    #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
    oracle_bound: usize,
}

impl EngineArgs {
    fn options(&self) -> JonesOptions {
        JonesOptions {
            engine: self.engine,
            oracle_bound: self.oracle_bound,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Adequacy flags, state-circle counts, and loop witnesses
    Adequacy {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Boundary slopes of the all-A and all-B state surfaces
    Slopes {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Colored Jones polynomials and degree sequences
    Jones {
        #[command(flatten)]
        input: InputArgs,
        /// Largest color (defaults by diagram size)
        #[arg(long)]
        max_n: Option<u32>,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Check that degree growth detects the state-surface slopes
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Run the whole built-in catalog instead of one input
        #[arg(long)]
        catalog: bool,
        #[arg(long)]
        max_n: Option<u32>,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Kauffman bracket in both normalizations
    Bracket {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Blackboard-framed cable, round-tripped to a PD code
    Cable {
        #[command(flatten)]
        input: InputArgs,
        /// Number of parallel copies
        #[arg(long, short = 'm', default_value_t = 2)]
        copies: usize,
    },
}

fn input_diagram(input: &InputArgs) -> Result<(knotslopes::PDDiagram, String), String> {
    resolve_input(
        input.braid.as_deref(),
        input.pd.as_deref(),
        input.pretzel.as_deref(),
        input.unknot,
        input.knot.as_deref(),
    )
}

fn exit_code_for(err: &JonesError) -> u8 {
    match err {
        JonesError::Bracket(BracketError::OracleBound { .. }) => 3,
        _ => 2,
    }
}

fn run(cli: &Cli) -> Result<Report, (String, u8)> {
    let input_err = |e: String| (e, 2u8);
    let jones_err = |e: JonesError| (e.to_string(), exit_code_for(&e));
    match &cli.command {
        Command::Adequacy { input } => {
            let (d, label) = input_diagram(input).map_err(input_err)?;
            Ok(report::adequacy_report(&label, &d))
        }
        Command::Slopes { input } => {
            let (d, label) = input_diagram(input).map_err(input_err)?;
            report::slopes_report(&label, &d).map_err(jones_err)
        }
        Command::Jones {
            input,
            max_n,
            engine,
        } => {
            let (d, label) = input_diagram(input).map_err(input_err)?;
            report::jones_report(&label, &d, *max_n, &engine.options()).map_err(jones_err)
        }
        Command::Verify {
            input,
            catalog,
            max_n,
            engine,
        } => {
            if *catalog {
                return report::catalog_report(*max_n, &engine.options()).map_err(jones_err);
            }
            let (d, label) = input_diagram(input).map_err(input_err)?;
            report::verify_report(&label, &d, *max_n, &engine.options()).map_err(jones_err)
        }
        Command::Bracket { input, engine } => {
            let (d, label) = input_diagram(input).map_err(input_err)?;
            report::bracket_report(&label, &d, engine.engine, engine.oracle_bound)
                .map_err(jones_err)
        }
        Command::Cable { input, copies } => {
            let (d, label) = input_diagram(input).map_err(input_err)?;
            report::cable_report(&label, &d, *copies).map_err(jones_err)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        let _ = knotslopes::init_thread_pool(threads);
    }
    match run(&cli) {
        Ok(report) => {
            println!("{}", report.render(cli.format));
            ExitCode::from(report.exit as u8)
        }
        Err((message, code)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
