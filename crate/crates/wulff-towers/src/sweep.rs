//! Energy sweeps: parallel solves, CSV rows ordered by mass.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use wulff_towers_core::tower::check_monotone;
use wulff_towers_core::{CurvePoint, TowerSolver};

use crate::CliError;

/// One CSV row; `case` and `r_bar` are `-` for the empty profile.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub m: f64,
    pub energy: f64,
    pub j_max: usize,
    pub case: String,
    pub r_bar: String,
}

impl From<&CurvePoint> for Row {
    fn from(p: &CurvePoint) -> Self {
        Self {
            m: p.mass,
            energy: p.energy,
            j_max: p.j_max,
            case: p.case.map_or("-".into(), |c| c.label().into()),
            r_bar: p.r_bar.map_or("-".into(), |r| r.to_string()),
        }
    }
}

/// Solves every mass concurrently; the result is sorted by mass and checked
/// for monotone energy.
pub fn sweep(solver: &TowerSolver, masses: &[f64]) -> Result<Vec<CurvePoint>, CliError> {
    let mut sorted = masses.to_vec();
    sorted.sort_by(f64::total_cmp);
    let points = sorted
        .par_iter()
        .map(|&m| {
            solver.solve(m).map(|p| CurvePoint {
                mass: m,
                energy: p.energy,
                j_max: p.j_max,
                case: p.case,
                r_bar: p.r_bar,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    check_monotone(&points)?;
    Ok(points)
}

pub fn write_csv<W: std::io::Write>(out: W, points: &[CurvePoint]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for p in points {
        w.serialize(Row::from(p)).map_err(|e| CliError::Io(e.to_string()))?;
    }
    w.flush().map_err(|e| CliError::Io(e.to_string()))?;
    Ok(())
}
