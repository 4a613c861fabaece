use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use partact_cli::{run, Format, Request};

/// Partial group actions on finite sets: validate the axioms, analyze
/// orbits and stabilizers, construct and verify the enveloping global
/// action, and count orbits.
#[derive(Parser)]
#[command(name = "partact", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the partial-action axioms and print the evidence.
    Validate {
        #[command(flatten)]
        common: Common,
    },
    /// Per-orbit analysis: partial orbits, stabilizers, upper sets,
    /// cosets and predicted global orbit sizes.
    Orbits {
        #[command(flatten)]
        common: Common,
    },
    /// Construct the enveloping global action and print its table.
    Globalize {
        #[command(flatten)]
        common: Common,
        /// Cap on |G|·|X| before quotienting (default 1000000).
        #[arg(long, value_name = "N")]
        max_size: Option<usize>,
    },
    /// Globalize (or load a global-action fixture) and check every
    /// enveloping-action law against the spec.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Global-action fixture to verify instead of constructing one.
        #[arg(long, value_name = "FILE")]
        global: Option<PathBuf>,
        #[arg(long, value_name = "N")]
        max_size: Option<usize>,
    },
    /// Orbit count of the enveloping action by the fixed-point average.
    Burnside {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "N")]
        max_size: Option<usize>,
    },
}

#[derive(clap::Args)]
struct Common {
    /// Input spec file (JSON).
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn main() {
    let cli = Cli::parse();
    let request = match cli.command {
        Command::Validate { common } => {
            Request::Validate { input: common.input, format: common.format }
        }
        Command::Orbits { common } => Request::Orbits { input: common.input, format: common.format },
        Command::Globalize { common, max_size } => {
            Request::Globalize { input: common.input, format: common.format, max_size }
        }
        Command::Verify { common, global, max_size } => {
            Request::Verify { input: common.input, format: common.format, global, max_size }
        }
        Command::Burnside { common, max_size } => {
            Request::Burnside { input: common.input, format: common.format, max_size }
        }
    };
    let outcome = run(&request);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(outcome.code);
}
