//! `hopfkit`: verify and report on Hopf algebras given as JSON files.
//!
//! Exit codes: 0 success, 1 a mathematical check failed or the input was
//! rejected, 2 the input could not be read or parsed.

mod commands;
mod report;

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{Failure, Outcome};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "hopfkit",
    version,
    about = "Exact computations with finite-dimensional quasitriangular Hopf algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Write the report to this file instead of stdout. For `double`, the
    /// algebra file goes here.
    #[arg(long, global = true)]
    out: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Hopf axioms, and the R-matrix axioms when the file has one.
    Verify { path: String },
    /// Rank, distinguished subalgebras, flags, Drinfeld element and S-matrix.
    Analyze {
        path: String,
        /// Characters as a vectors file on the dual basis.
        #[arg(long)]
        characters: Option<String>,
    },
    /// Canonical quotient for a subcoalgebra C of H*.
    Quotient {
        path: String,
        /// `full`, `grouplikes` or a vectors file spanning C.
        #[arg(long, default_value = "full")]
        coalgebra: String,
        /// Write the quotient to PREFIX.hopf.json and the projection to
        /// PREFIX.morphism.json.
        #[arg(long, value_name = "PREFIX")]
        export: Option<String>,
    },
    /// R-matrices on kG from bicharacters. Takes a built-in name (Zn, S3,
    /// Z7xZ3) or a group file.
    EnumerateGroup { group: String },
    /// Drinfeld double of the algebra, as an algebra file with its R-matrix.
    Double { path: String },
    /// Classification checklist for odd square-free dimension.
    Report { path: String },
}

fn render(format: Format, node: &report::Node) -> String {
    match format {
        Format::Text => report::to_text(node),
        Format::Json => report::to_json(node),
    }
}

fn emit(out: Option<&str>, contents: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, contents).map_err(|e| Failure::Io(format!("{p}: {e}"))),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    let out = cli.out.as_deref();
    let outcome: Outcome = match &cli.command {
        Command::Verify { path } => commands::verify(path)?,
        Command::Analyze { path, characters } => commands::analyze(path, characters.as_deref())?,
        Command::Quotient { path, coalgebra, export } => commands::quotient(path, coalgebra, export.as_deref())?,
        Command::EnumerateGroup { group } => commands::enumerate_group(group)?,
        Command::Report { path } => commands::report(path)?,
        Command::Double { path } => {
            let (outcome, file) = commands::double(path, out)?;
            match out {
                Some(_) => {
                    emit(out, &file)?;
                    emit(None, &render(cli.format, &outcome.report))?;
                }
                None => emit(None, &file)?,
            }
            return Ok(outcome.ok);
        }
    };
    for (p, contents) in &outcome.files {
        emit(Some(p), contents)?;
    }
    emit(out, &render(cli.format, &outcome.report))?;
    Ok(outcome.ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("hopfkit: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
