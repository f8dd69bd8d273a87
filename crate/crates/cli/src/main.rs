use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fano4::report::{self, ExportFormat};
use fano4::{enumerate_families, FamilyParams};

mod render;

#[derive(Parser)]
#[command(name = "fano4", version, about = "Invariants of Fano 4-folds X^i_{a,d} of Picard number 3")]
struct Cli {
    /// Suppress everything except requested data and errors.
    #[arg(long, short, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the 28 families.
    List,
    /// Show the full record of one family.
    Info { i: i64, a: i64, d: i64 },
    /// Compare every computed invariant with the reference tables.
    Verify,
    /// Write all records.
    Export {
        #[arg(long, value_enum)]
        format: Format,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Show cone generators, nef rays and anticanonical pairings.
    Cones { i: i64, a: i64, d: i64 },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Markdown,
}

impl From<Format> for ExportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => ExportFormat::Json,
            Format::Csv => ExportFormat::Csv,
            Format::Markdown => ExportFormat::Markdown,
        }
    }
}

const EXIT_MISMATCH: u8 = 1;
const EXIT_ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        // A closed pipe (e.g. `fano4 list | head`) is not a failure.
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn params(i: i64, a: i64, d: i64) -> fano4::Result<FamilyParams> {
    FamilyParams::new(i, a, d)
}

fn run(cli: &Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let mut out = io::stdout().lock();
    match &cli.command {
        Command::List => {
            for p in enumerate_families() {
                writeln!(out, "{:<10} i={} a={} d={}", p.label(), p.z_id, p.a, p.d)?;
            }
        }
        Command::Info { i, a, d } => {
            let p = params(*i, *a, *d)?;
            let rec = fano4::build_record(&p)?;
            out.write_all(render::info(&rec).as_bytes())?;
            out.write_all(render::cones(&p)?.as_bytes())?;
        }
        Command::Cones { i, a, d } => {
            let p = params(*i, *a, *d)?;
            out.write_all(render::cones(&p)?.as_bytes())?;
        }
        Command::Verify => {
            let rep = report::verify_all();
            for m in &rep.mismatches {
                writeln!(out, "MISMATCH {m}")?;
            }
            for (label, e) in &rep.errors {
                writeln!(out, "ERROR {label}: {e}")?;
            }
            if !cli.quiet {
                writeln!(out, "{}/{} families pass, {} mismatches", rep.passed, rep.passed + rep.failed, rep.mismatches.len())?;
            }
            if !rep.errors.is_empty() {
                return Ok(ExitCode::from(EXIT_ERROR));
            }
            if !rep.mismatches.is_empty() {
                return Ok(ExitCode::from(EXIT_MISMATCH));
            }
        }
        Command::Export { format, out: path } => {
            let records = fano4::build_all()?;
            let bytes = report::export(&records, (*format).into())?;
            match path {
                Some(path) => {
                    fs::write(path, &bytes)?;
                    if !cli.quiet {
                        eprintln!("wrote {} records to {}", records.len(), path.display());
                    }
                }
                None => out.write_all(&bytes)?,
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
