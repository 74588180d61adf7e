use std::process::ExitCode;

use clap::{Parser, Subcommand};
use crosscap::{
    all_shortest_expansions, conway_diagram, depth, lookup, parse_expansion, parse_fraction,
    reduce, verify_diagram, verify_table, Expansion, KnotId,
};

/// Crosscap numbers and shortest continued fractions of 2-bridge knots.
#[derive(Parser)]
#[command(name = "crosscap", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expansion such as `[3,2]` or `1+[-2,-2]`.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expansion: String,
    },
    /// Reduce an expansion to a shortest one.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        expansion: String,
        /// Print each rewrite step.
        #[arg(long)]
        trace: bool,
    },
    /// Depth of a fraction in the modular diagram.
    Depth {
        #[arg(allow_hyphen_values = true)]
        fraction: String,
    },
    /// A shortest expansion of a fraction.
    Shortest {
        #[arg(allow_hyphen_values = true)]
        fraction: String,
        /// List every shortest expansion.
        #[arg(long)]
        all: bool,
    },
    /// Crosscap number, genus and surface data for a fraction or table name.
    Invariants {
        #[arg(allow_hyphen_values = true)]
        query: String,
        #[arg(long)]
        json: bool,
    },
    /// Conway diagram realizing the crosscap number, with its verification.
    Conway {
        #[arg(allow_hyphen_values = true)]
        query: String,
    },
    /// The embedded knot table.
    Table {
        #[command(subcommand)]
        command: TableCommand,
    },
}

#[derive(Subcommand)]
enum TableCommand {
    /// Check every row; exits 1 if any check fails.
    Verify,
    /// Show the row and invariants for a name or fraction.
    Lookup {
        #[arg(allow_hyphen_values = true)]
        name: String,
    },
}

enum Failure {
    /// Bad input: exit 2.
    Usage(String),
    /// A verification did not pass: exit 1.
    Check,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Eval { expansion } => {
            println!("{}", parse_expansion(&expansion)?.eval());
        }
        Command::Reduce { expansion, trace } => {
            let (reduced, steps) = reduce(&parse_expansion(&expansion)?);
            println!("{reduced}");
            if trace {
                print!("{steps}");
            }
        }
        Command::Depth { fraction } => {
            println!("{}", depth(&parse_fraction(&fraction)?));
        }
        Command::Shortest { fraction, all } => {
            let x = parse_fraction(&fraction)?;
            let set = all_shortest_expansions(&x)?;
            if all {
                print!("{set}");
            } else {
                let e = Expansion::division(&x).expect("finite");
                println!("{}", reduce(&e).0);
            }
        }
        Command::Invariants { query, json } => {
            let report = lookup(&query)?.report;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{report}");
            }
        }
        Command::Conway { query } => {
            let knot: KnotId = lookup(&query)?.report.knot;
            let d = conway_diagram(&knot)?;
            let verdict = verify_diagram(&d, &knot);
            println!("{d}");
            print!("{verdict}");
            if !verdict.ok() {
                return Err(Failure::Check);
            }
        }
        Command::Table { command } => match command {
            TableCommand::Verify => {
                let report = verify_table()?;
                print!("{report}");
                if !report.all_passed() {
                    return Err(Failure::Check);
                }
            }
            TableCommand::Lookup { name } => print!("{}", lookup(&name)?),
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
