mod commands;
mod error;
mod text;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use error::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "acta",
    version,
    about = "Decide structural and flatness properties of finite monoids and acts"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Largest skeleton length searched by the bounded flatness decision.
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    pub m_max: u64,
    /// Largest monoid order for which CU^S is enumerated.
    #[arg(long, global = true, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..))]
    pub cu_cap: u64,
    /// Largest monoid order for which left congruences are enumerated.
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    pub cong_cap: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Full report for a monoid.
    Analyze { monoid: PathBuf },
    /// Place a left act in the hierarchy free ⊆ projective ⊆ strongly flat ⊆ flat ⊆ weakly flat.
    ClassifyAct { monoid: PathBuf, act: PathBuf },
    /// Tensor product of a right act and a left act.
    Tensor {
        monoid: PathBuf,
        right: PathBuf,
        left: PathBuf,
        /// Query `a,b/a',b'`: is `a⊗b = a'⊗b'`, and by which tossing.
        #[arg(long)]
        pair: Option<String>,
    },
    /// Right unitary, right collapsible submonoids and their idempotents.
    Cu { monoid: PathBuf },
    /// Finite sets witnessing condition (*) for each idempotent other than 1.
    Witness { monoid: PathBuf },
    /// Transition monoid of a DFA, or closure of transformation generators.
    FromDfa { input: PathBuf },
    /// Left congruences, marking the strongly flat ones.
    Congruences { monoid: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

fn write_output(cli: &Cli, content: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, content).map_err(|e| CliError::Output {
            path: path.display().to_string(),
            message: e.to_string(),
        }),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| CliError::Output {
                    path: "stdout".into(),
                    message: e.to_string(),
                })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = commands::run(&cli).and_then(|out| {
        let rendered = match cli.format {
            Format::Json => out.json,
            Format::Text => out.text,
        };
        write_output(&cli, &rendered)?;
        match out.inconsistency {
            Some(msg) => Err(CliError::Inconsistent(msg)),
            None => Ok(()),
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("acta: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
