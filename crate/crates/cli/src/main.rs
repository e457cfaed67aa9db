//! `ipsig`: JSON reports on triangulated pseudomanifolds.

mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "ipsig", version, about = "Intersection homology, IP/Witt verdicts and signatures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Args, Debug, Clone)]
pub struct Flags {
    /// zero, lower-middle, upper-middle, top, or file:<path>
    #[arg(long, global = true, default_value = "lower-middle")]
    pub perversity: String,
    #[arg(long, global = true, value_parser = ["Z", "Q"], default_value = "Z")]
    pub coefficients: String,
    /// Chains relative to the boundary.
    #[arg(long, global = true)]
    pub relative: bool,
    /// Test every interior simplex of each stratum and keep full link tables.
    #[arg(long, global = true)]
    pub audit: bool,
    /// Exit with status 1 when a verdict is false.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Stratification file: a list of skeleta, or an object with a
    /// `stratification` field.
    #[arg(long, global = true)]
    pub stratification: Option<PathBuf>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Pseudomanifold and boundary checks.
    Validate { input: PathBuf },
    /// Orientation by sign propagation.
    Orient { input: PathBuf },
    /// Stratification (skeletal, or the one supplied).
    Stratify { input: PathBuf },
    /// Intersection homology table.
    Ih { input: PathBuf },
    /// IP verdict with integral link evidence.
    CheckIp { input: PathBuf },
    /// Witt verdict with rational link evidence.
    CheckWitt { input: PathBuf },
    /// Signature of the intersection form.
    Signature { input: PathBuf },
    /// Symmetric-complex conditions and duality matrices.
    SymmetricComplex { input: PathBuf },
    /// Staircase product of two complexes.
    Product {
        left: PathBuf,
        right: PathBuf,
        /// Also write the resulting complex file here.
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Suspension.
    Suspend {
        input: PathBuf,
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Cone.
    Cone {
        input: PathBuf,
        #[arg(long)]
        save: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let (report, code) = commands::run(&cli);
    let text = report.to_json();
    match &cli.flags.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text + "\n") {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => println!("{text}"),
    }
    ExitCode::from(code)
}
