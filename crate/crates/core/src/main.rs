//! Command-line front end: run the verification suites, export figure
//! data as CSV, and run the braid-matrix derivation pipeline.
//!
//! Exit codes: 0 = all checks passed, 1 = at least one check failed (or an
//! I/O problem), 2 = usage error.

use braidnorm::brm_pipeline::{canonical_brm, BrmType};
use braidnorm::checks::{all_checks, ybe_family_scan};
use braidnorm::l1_extrema::l1_profile;
use braidnorm::report::Report;
use braidnorm::wigner::HalfInt;
use clap::{Parser, Subcommand};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

/// Default seed for the pseudo-random samples inside the check suites.
const DEFAULT_SEED: u64 = 20260337;

#[derive(Parser)]
#[command(
    name = "braidnorm",
    version,
    about = "Braid matrices, Yang-Baxter checks and l1-norm extrema"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every registered check and print a JSON report.
    Verify {
        /// Only run checks whose name contains this substring.
        #[arg(long)]
        filter: Option<String>,
        /// Seed for the pseudo-random samples (fixed default for reproducibility).
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Sample the row-wise l1-norm of d^J and write a theta,f CSV.
    ScanL1 {
        /// Twice the spin J (e.g. 1 for J = 1/2).
        #[arg(long = "two-j")]
        two_j: i32,
        /// Twice the row label M.
        #[arg(long)]
        row: i32,
        /// Number of grid samples (odd, at least 101).
        #[arg(long, default_value_t = 10_001)]
        samples: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Derive a canonical braid pair and write it as JSON.
    DeriveBrm {
        /// Twice the spin J; supported values are 1, 2, 3.
        #[arg(long = "two-j")]
        two_j: i32,
        /// Braid-matrix type: I or II.
        #[arg(long = "type")]
        brm_type: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Scan one Yang-Baxter family on a grid and report the max residual.
    YbeCheck {
        /// One of: r4-type1, r4-type2, 2d-type1, 2d-type2.
        #[arg(long)]
        family: String,
        /// Grid points per axis.
        #[arg(long)]
        grid: usize,
    },
    /// Emit the five l1-profile CSVs (figs. 1-5) into a directory.
    Figures {
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// Usage errors exit with code 2, like clap's own parse failures.
fn usage(msg: &str) -> Result<ExitCode, String> {
    eprintln!("usage error: {msg}");
    Ok(ExitCode::from(2))
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Verify { filter, seed } => {
            let start = Instant::now();
            let mut checks = all_checks(seed);
            if let Some(f) = &filter {
                checks.retain(|c| c.name.contains(f.as_str()));
            }
            let report = Report::from_checks(checks, start.elapsed().as_millis() as u64);
            print_report(&report)?;
            Ok(exit_for(&report))
        }
        Command::ScanL1 {
            two_j,
            row,
            samples,
            out,
        } => {
            let profile = match l1_profile(HalfInt::new(two_j), HalfInt::new(row), samples) {
                Ok(p) => p,
                Err(e) => return usage(&e.to_string()),
            };
            write_file(
                &out,
                profile_csv(&profile.thetas, &profile.values).as_bytes(),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::DeriveBrm {
            two_j,
            brm_type,
            out,
        } => {
            let brm_type = match brm_type.as_str() {
                "I" | "i" => BrmType::type_i(),
                "II" | "ii" => BrmType::type_ii(),
                other => return usage(&format!("unknown type {other:?}, expected I or II")),
            };
            let derived = match canonical_brm(HalfInt::new(two_j), brm_type) {
                Ok(d) => d,
                Err(e) => return usage(&e.to_string()),
            };
            let json = serde_json::to_string_pretty(&derived)
                .map_err(|e| format!("serializing derived pair: {e}"))?;
            write_file(&out, json.as_bytes())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::YbeCheck { family, grid } => {
            if grid < 2 {
                return usage("grid must be at least 2");
            }
            let start = Instant::now();
            let Some(check) = ybe_family_scan(&family, grid) else {
                return usage(&format!(
                    "unknown family {family:?}; expected r4-type1, r4-type2, 2d-type1 or 2d-type2"
                ));
            };
            let report = Report::from_checks(vec![check], start.elapsed().as_millis() as u64);
            print_report(&report)?;
            Ok(exit_for(&report))
        }
        Command::Figures { out } => {
            std::fs::create_dir_all(&out)
                .map_err(|e| format!("creating {}: {e}", out.display()))?;
            // (file, 2J, 2M) for figs. 1-5
            let figures: [(&str, i32, i32); 5] = [
                ("fig1_j1-2_m1-2.csv", 1, 1),
                ("fig2_j1_m1.csv", 2, 2),
                ("fig3_j1_m0.csv", 2, 0),
                ("fig4_j3-2_m3-2.csv", 3, 3),
                ("fig5_j3-2_m1-2.csv", 3, 1),
            ];
            for (name, two_j, two_m) in figures {
                let profile = l1_profile(HalfInt::new(two_j), HalfInt::new(two_m), 10_001)
                    .expect("valid figure row");
                write_file(
                    &out.join(name),
                    profile_csv(&profile.thetas, &profile.values).as_bytes(),
                )?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn profile_csv(thetas: &[f64], values: &[f64]) -> String {
    let mut csv = String::from("theta,f\n");
    for (t, v) in thetas.iter().zip(values) {
        csv.push_str(&format!("{t},{v}\n"));
    }
    csv
}

fn exit_for(report: &Report) -> ExitCode {
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print_report(report: &Report) -> Result<(), String> {
    let json =
        serde_json::to_string_pretty(report).map_err(|e| format!("serializing report: {e}"))?;
    let mut stdout = std::io::stdout().lock();
    writeln!(stdout, "{json}").map_err(|e| format!("writing report: {e}"))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), String> {
    std::fs::write(path, bytes).map_err(|e| format!("writing {}: {e}", path.display()))
}
