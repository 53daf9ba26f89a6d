use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qsem_cli::{cmd_hardy, cmd_run, Format};

/// Evaluate quantum propositions under bivalent, supervaluationist,
/// many-valued, and weak-valued semantics, exactly, over the Gaussian
/// rationals.
#[derive(Parser)]
#[command(name = "qsem", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse, check, and run a script; print its query results
    Run {
        /// Path to the script
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Print the built-in Hardy paradox report
    Hardy {
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run { file, format } => match cmd_run(&file, format.into()) {
            Ok(doc) => {
                print!("{doc}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("qsem: {}", e.message);
                ExitCode::from(e.exit_code as u8)
            }
        },
        Command::Hardy { format } => {
            print!("{}", cmd_hardy(format.into()));
            ExitCode::SUCCESS
        }
    }
}
