//! Regenerates the committed tuning tables and test fixtures from the
//! extended-precision oracle, and prints the calibration report.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use faddeyeva_cli::{calib, fixtures, points, Result};

#[derive(Parser)]
#[command(about = "Calibrate tuning tables and build oracle fixtures")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write the Dawson Taylor table.
    DawsonTable {
        #[arg(long, default_value = "crates/core/src/dawson_table.rs")]
        out: PathBuf,
    },
    /// Fit the Q and R schedules and write them.
    Schedules {
        #[arg(long, default_value = "crates/core/src/schedules.rs")]
        out: PathBuf,
        #[arg(long, default_value = "cal-1")]
        tag: String,
        #[arg(long, default_value_t = 6)]
        rho_steps: usize,
        #[arg(long, default_value_t = 41)]
        angles: usize,
    },
    /// Rebuild the oracle fixtures used by the acceptance suite.
    Fixtures {
        #[arg(long, default_value = "crates/cli/tests/fixtures")]
        dir: PathBuf,
    },
    /// Minimal upward expansion length over the strip fixture.
    Report {
        #[arg(long, default_value = "crates/cli/tests/fixtures")]
        dir: PathBuf,
    },
}

fn write(path: &PathBuf, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| faddeyeva_cli::CliError::Io { path: path.display().to_string(), source })
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::DawsonTable { out } => {
            let t = calib::dawson_table()?;
            write(&out, &calib::dawson_table_source(&t))?;
            println!("{} centres written to {}", t.len(), out.display());
        }
        Cmd::Schedules { out, tag, rho_steps, angles } => {
            let q = calib::fit_q(rho_steps, angles)?;
            println!("Q: {} samples, {} unmet", q.samples, q.unmet.len());
            for u in q.unmet.iter().take(20) {
                println!("  unmet Q ({}, {}): {:e} at nu = 16", u.0, u.1, u.2);
            }
            println!("  nu: {:?}", q.knots[0]);
            let r = calib::fit_r(rho_steps, angles)?;
            println!("R: {} samples, {} unmet", r.samples, r.unmet.len());
            for u in r.unmet.iter().take(20) {
                println!("  unmet R ({}, {})", u.0, u.1);
            }
            println!("  h: {:?}\n  kapn: {:?}\n  nu: {:?}", r.knots[0], r.knots[1], r.knots[2]);
            write(&out, &calib::schedules_source(&tag, &q, &r))?;
            println!("written to {}", out.display());
        }
        Cmd::Fixtures { dir } => {
            let strip = points::strip_grid().points();
            fixtures::write_w(&dir.join("strip_grid.csv"), &fixtures::compute_w(&strip)?)?;
            fixtures::write_w(&dir.join("global_points.csv"), &fixtures::compute_w(&points::global_points())?)?;
            fixtures::write_f(&dir.join("dawson_points.csv"), &fixtures::compute_f(&points::dawson_points())?)?;
            println!("fixtures written to {}", dir.display());
        }
        Cmd::Report { dir } => {
            let rows = fixtures::load_or_build_w(&dir.join("strip_grid.csv"), &points::strip_grid().points())?;
            println!("terms  max componentwise error  at (x, y)");
            for (n, e, x, y) in calib::upward_terms_report(&rows, 12)? {
                println!("{n:5}  {e:24.3e}  ({x}, {y})");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("calibrate: {e}");
            ExitCode::FAILURE
        }
    }
}
