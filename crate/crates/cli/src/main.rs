use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sdh_cli::commands;
use sdh_cli::{CliError, Outcome};
use sdh_core::dimension::Parity;

#[derive(Parser)]
#[command(
    name = "sdh",
    version,
    about = "Signed dimension groups, homology, Lefschetz checks and zeta functions"
)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Signed zeta function of a graph, checked against periodic points.
    Zeta {
        input: String,
        #[arg(long, default_value_t = 8)]
        order: usize,
        /// Ignore edge signs.
        #[arg(long, conflicts_with = "signed")]
        unsigned: bool,
        /// Use edge signs (the default).
        #[arg(long)]
        signed: bool,
    },
    /// Rationalized signed dimension group at a block length.
    Dimgroup {
        input: String,
        #[arg(long, default_value_t = 0)]
        block: usize,
    },
    /// Homology of a pair file (a graph file stands for its diagonal pair).
    Homology { input: String },
    /// Lefschetz table for 1 <= n <= n-max.
    Lefschetz {
        input: String,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
    /// Check a shift equivalence certificate.
    VerifySe { input: String },
    /// Compare homology and manifold spectra.
    CompareSpectra {
        #[arg(num_args = 1..=2, required = true)]
        inputs: Vec<String>,
        #[arg(long)]
        q_parity: Option<Parity>,
    },
    /// Compare the homological zeta function with the one from signed homology.
    Corollary {
        #[arg(num_args = 1..=2, required = true)]
        inputs: Vec<String>,
        #[arg(long)]
        q_parity: Option<Parity>,
    },
    /// Bundled datasets.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
}

#[derive(Subcommand)]
enum ExamplesAction {
    List,
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Zeta {
            input,
            order,
            unsigned,
            ..
        } => commands::zeta(&input, order, unsigned),
        Command::Dimgroup { input, block } => commands::dimgroup(&input, block),
        Command::Homology { input } => commands::homology(&input),
        Command::Lefschetz { input, n_max } => commands::lefschetz(&input, n_max),
        Command::VerifySe { input } => commands::verify_se(&input),
        Command::CompareSpectra { inputs, q_parity } => {
            commands::compare_spectra(&inputs, q_parity)
        }
        Command::Corollary { inputs, q_parity } => commands::corollary(&inputs, q_parity),
        Command::Examples {
            action: ExamplesAction::List,
        } => Ok(commands::examples_list()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            if cli.json {
                println!("{}", outcome.report.to_json());
            } else {
                print!("{}", outcome.report);
            }
            ExitCode::from(outcome.exit_code())
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
