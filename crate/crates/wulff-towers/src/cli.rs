use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use wulff_towers_core::oracle::Oracle;
use wulff_towers_core::{Domain, Norm, RoundedRegion, TowerSolver, DEFAULT_BISECTION_TOL};

use crate::input::{parse_domain, parse_masses, parse_norm};
use crate::report::Report;
use crate::{svg, sweep, CliError};

/// Environment variable overriding the bisection tolerance.
pub const TOL_ENV: &str = "WULFF_TOWERS_TOL";

#[derive(Debug, Parser)]
#[command(name = "wulff-towers", version, about = "Minimal stacked anisotropic perimeters on convex domains")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one mass and write a JSON report.
    Solve {
        #[command(flatten)]
        problem: Problem,
        /// Report path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve a range of masses and write CSV rows.
    Sweep {
        #[command(flatten)]
        problem: Problem,
        /// CSV path (stdout when omitted).
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Compare the solver against the grid oracle.
    Verify {
        #[command(flatten)]
        problem: Problem,
        /// Oracle grid points per family.
        #[arg(long, default_value_t = 100_000)]
        grid: usize,
        /// Largest accepted |oracle - solver| energy difference.
        #[arg(long, default_value_t = 1e-6, allow_hyphen_values = true)]
        max_discrepancy: f64,
        /// Summary path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw the tower for one mass as SVG.
    Render {
        #[command(flatten)]
        problem: Problem,
        /// SVG path (stdout when omitted).
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct Problem {
    /// `unit-square`, `rectangle:W:H`, `regular:k`, or a domain JSON file.
    #[arg(long)]
    pub domain: String,
    /// `euclidean`, `l1`, `linf`, or a Wulff polygon JSON file.
    #[arg(long, default_value = "euclidean")]
    pub norm: String,
    /// A mass, or an inclusive range `start:stop:step`.
    #[arg(long, allow_hyphen_values = true)]
    pub mass: String,
    /// Relative bisection tolerance (overrides the environment).
    #[arg(long)]
    pub tol: Option<f64>,
}

struct Loaded {
    region: RoundedRegion,
    norm: Norm,
    masses: Vec<f64>,
    domain: Domain,
}

fn tolerance(flag: Option<f64>) -> Result<f64, CliError> {
    if let Some(t) = flag {
        return Ok(t);
    }
    match std::env::var(TOL_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Invalid(format!("{TOL_ENV} is not a number: {s:?}"))),
        Err(_) => Ok(DEFAULT_BISECTION_TOL),
    }
}

impl Problem {
    fn load(&self) -> Result<Loaded, CliError> {
        let region = parse_domain(&self.domain)?;
        let norm = parse_norm(&self.norm)?;
        let masses = parse_masses(&self.mass)?;
        let domain = Domain::with_tolerance(region.clone(), norm.clone(), tolerance(self.tol)?)?;
        Ok(Loaded {
            region,
            norm,
            masses,
            domain,
        })
    }

    fn single_mass(loaded: &Loaded) -> Result<f64, CliError> {
        match loaded.masses.as_slice() {
            [m] => Ok(*m),
            _ => Err(CliError::Invalid("this command takes a single mass".into())),
        }
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyRow {
    m: f64,
    solver_energy: f64,
    oracle_energy: f64,
    discrepancy: f64,
}

#[derive(Serialize)]
struct VerifySummary {
    grid: usize,
    max_discrepancy: f64,
    rows: Vec<VerifyRow>,
}

/// Runs one subcommand.
pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve { problem, out } => {
            let loaded = problem.load()?;
            let m = Problem::single_mass(&loaded)?;
            let profile = TowerSolver::from_domain(loaded.domain).solve(m)?;
            let mut json = Report::from_profile(&profile).to_json();
            json.push('\n');
            emit(out.as_deref(), &json)
        }
        Command::Sweep { problem, csv } => {
            let loaded = problem.load()?;
            let points = sweep::sweep(&TowerSolver::from_domain(loaded.domain), &loaded.masses)?;
            match csv {
                Some(p) => sweep::write_csv(std::fs::File::create(p)?, &points),
                None => sweep::write_csv(std::io::stdout().lock(), &points),
            }
        }
        Command::Verify {
            problem,
            grid,
            max_discrepancy,
            out,
        } => {
            let loaded = problem.load()?;
            let oracle = Oracle::from_domain(loaded.domain, grid)?;
            let rows = loaded
                .masses
                .par_iter()
                .map(|&m| {
                    let (profile, report) = oracle.verify(m)?;
                    Ok(VerifyRow {
                        m,
                        solver_energy: profile.energy,
                        oracle_energy: report.best_energy,
                        discrepancy: report.discrepancy.unwrap_or(f64::NAN),
                    })
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            let worst = rows.iter().map(|r| r.discrepancy.abs()).fold(0.0, f64::max);
            let worst = if rows.iter().any(|r| r.discrepancy.is_nan()) { f64::NAN } else { worst };
            let summary = VerifySummary {
                grid,
                max_discrepancy: worst,
                rows,
            };
            let mut json = serde_json::to_string_pretty(&summary).expect("summary serializes");
            json.push('\n');
            emit(out.as_deref(), &json)?;
            if !(worst <= max_discrepancy) {
                return Err(CliError::Invariant(format!(
                    "oracle disagrees with solver by {worst:e} (limit {max_discrepancy:e})"
                )));
            }
            Ok(())
        }
        Command::Render { problem, svg } => {
            let loaded = problem.load()?;
            let m = Problem::single_mass(&loaded)?;
            let profile = TowerSolver::from_domain(loaded.domain).solve(m)?;
            emit(svg.as_deref(), &svg::render(&loaded.region, &loaded.norm, &profile))
        }
    }
}
