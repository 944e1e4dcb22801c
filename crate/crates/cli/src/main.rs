mod fanfile;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use toric_orbits::catalog::{build, FamilySpec};
use toric_orbits::Analysis;

use fanfile::FanFile;
use report::{CheckOutcome, Options};

#[derive(Parser)]
#[command(name = "toric-orbits", version, about = "Orbits of maximal unipotent subgroups on complete toric varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a fan file or a named family.
    Analyze {
        /// Fan file.
        path: Option<PathBuf>,
        /// Family spec instead of a file: wps:1,1,2 | hirzebruch:d | p1xp1 | pn:n
        #[arg(long, conflicts_with = "path")]
        family: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include the orbit catalog.
        #[arg(long)]
        orbits: bool,
        /// Include the full root list.
        #[arg(long)]
        roots: bool,
        /// Cross-check against the classification and sample the strata.
        #[arg(long)]
        check: bool,
        /// Seed for sampling under --check.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write the fan of a named family.
    Build {
        spec: String,
        /// Output file; standard output if omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Bad user input; reported as a JSON object with exit code 2.
#[derive(Debug)]
struct InputError {
    kind: &'static str,
    message: String,
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.kind, self.message)
    }
}

impl std::error::Error for InputError {}

fn invalid(kind: &'static str, message: impl ToString) -> anyhow::Error {
    InputError {
        kind,
        message: message.to_string(),
    }
    .into()
}

fn family_fan(spec: &str) -> anyhow::Result<toric_orbits::Fan> {
    let spec: FamilySpec = spec.parse().map_err(|e| invalid("InvalidSpec", e))?;
    build(&spec).map_err(|e| invalid("InvalidSpec", e))
}

fn load(path: Option<PathBuf>, family: Option<String>) -> anyhow::Result<Analysis> {
    let analysis = match (path, family) {
        (_, Some(spec)) => Analysis::run(family_fan(&spec)?),
        (Some(path), None) => {
            let text = std::fs::read_to_string(&path).map_err(|e| invalid("Io", format!("{}: {e}", path.display())))?;
            let file = FanFile::parse(&text).map_err(|e| invalid("Parse", e))?;
            Analysis::from_parts(file.dim, file.rays, file.max_cones)
        }
        (None, None) => return Err(invalid("MissingInput", "give a fan file or --family")),
    };
    analysis.map_err(|e| invalid(e.kind(), e))
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Analyze {
            path,
            family,
            format,
            orbits,
            roots,
            check,
            seed,
        } => {
            let a = load(path, family)?;
            let opts = Options { orbits, roots, seed };
            let outcome = check.then(|| CheckOutcome::run(&a, seed));
            match format {
                Format::Json => {
                    let value = report::to_json(&a, &opts, outcome.as_ref());
                    println!("{}", serde_json::to_string_pretty(&value)?);
                }
                Format::Text => print!("{}", report::to_text(&a, &opts, outcome.as_ref())),
            }
        }
        Command::Build { spec, output } => {
            let text = FanFile::from_fan(&family_fan(&spec)?).to_json();
            match output {
                Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => match e.downcast_ref::<InputError>() {
            Some(bad) => {
                let obj = json!({ "error": { "kind": bad.kind, "message": bad.message } });
                println!("{obj}");
                ExitCode::from(2)
            }
            None => {
                eprintln!("error: {e:#}");
                ExitCode::FAILURE
            }
        },
    }
}
