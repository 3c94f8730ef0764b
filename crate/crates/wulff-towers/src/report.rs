//! JSON report of a solved tower, convertible back to a [`TowerProfile`].

use serde::{Deserialize, Serialize};
use wulff_towers_core::{
    Candidate, ConvexPolygon, Layer, LayerKind, RoundedRegion, TowerCase, TowerProfile, Vec2,
};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub case: Option<String>,
    pub j_max: usize,
    pub r_bar: Option<f64>,
    pub energy: f64,
    pub mass: f64,
    pub ties: Vec<TieRecord>,
    pub layers: Vec<LayerRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TieRecord {
    pub case: String,
    pub j_max: usize,
    pub r_bar: f64,
    pub energy: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LayerRecord {
    pub kind: String,
    pub core: Vec<[f64; 2]>,
    pub rho: f64,
    pub radius: f64,
    pub area: f64,
    pub perimeter: f64,
    pub unique: bool,
    pub center_freedom: Vec<[f64; 2]>,
}

fn coords(p: &ConvexPolygon) -> Vec<[f64; 2]> {
    p.vertices().iter().map(|&v| v.into()).collect()
}

/// Rebuilds a polygon from vertices that already passed validation once.
fn polygon(vs: &[[f64; 2]]) -> Result<ConvexPolygon, CliError> {
    let pts: Vec<Vec2> = vs.iter().map(|&p| Vec2::from(p)).collect();
    Ok(match pts.as_slice() {
        [] => ConvexPolygon::empty(),
        [p] => ConvexPolygon::point(*p),
        [a, b] => ConvexPolygon::segment(*a, *b),
        _ => ConvexPolygon::new(pts)?,
    })
}

fn case(label: &str) -> Result<TowerCase, CliError> {
    TowerCase::from_label(label).ok_or_else(|| CliError::Invalid(format!("unknown case {label:?}")))
}

impl Report {
    pub fn from_profile(p: &TowerProfile) -> Self {
        Self {
            case: p.case.map(|c| c.label().to_string()),
            j_max: p.j_max,
            r_bar: p.r_bar,
            energy: p.energy,
            mass: p.mass,
            ties: p
                .ties
                .iter()
                .map(|t| TieRecord {
                    case: t.case.label().to_string(),
                    j_max: t.j_max,
                    r_bar: t.r_bar,
                    energy: t.energy,
                })
                .collect(),
            layers: p
                .layers
                .iter()
                .map(|l| LayerRecord {
                    kind: l.kind.label().to_string(),
                    core: coords(&l.region.core),
                    rho: l.region.rho,
                    radius: l.radius,
                    area: l.area,
                    perimeter: l.perimeter,
                    unique: l.unique,
                    center_freedom: coords(&l.center_freedom),
                })
                .collect(),
        }
    }

    pub fn to_profile(&self) -> Result<TowerProfile, CliError> {
        let layers = self
            .layers
            .iter()
            .map(|l| {
                Ok(Layer {
                    kind: LayerKind::from_label(&l.kind)
                        .ok_or_else(|| CliError::Invalid(format!("unknown layer kind {:?}", l.kind)))?,
                    region: RoundedRegion::new(polygon(&l.core)?, l.rho)?,
                    radius: l.radius,
                    area: l.area,
                    perimeter: l.perimeter,
                    unique: l.unique,
                    center_freedom: polygon(&l.center_freedom)?,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let ties = self
            .ties
            .iter()
            .map(|t| {
                Ok(Candidate {
                    case: case(&t.case)?,
                    j_max: t.j_max,
                    r_bar: t.r_bar,
                    energy: t.energy,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(TowerProfile {
            layers,
            j_max: self.j_max,
            case: self.case.as_deref().map(case).transpose()?,
            r_bar: self.r_bar,
            energy: self.energy,
            mass: self.mass,
            ties,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("bad report: {e}")))
    }
}
