//! Domain and norm sources: built-in names or JSON files.

use std::path::Path;

use serde::{Deserialize, Serialize};
use wulff_towers_core::{ConvexPolygon, Norm, RoundedRegion, Vec2};

use crate::CliError;

/// Domain file contents.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum DomainFile {
    Polygon { vertices: Vec<[f64; 2]> },
    Rounded { core: Vec<[f64; 2]>, radius: f64 },
}

/// Wulff polygon file contents.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum NormFile {
    WulffPolygon { vertices: Vec<[f64; 2]> },
}

fn points(vs: &[[f64; 2]]) -> Vec<Vec2> {
    vs.iter().map(|&p| Vec2::from(p)).collect()
}

impl DomainFile {
    pub fn to_region(&self) -> Result<RoundedRegion, CliError> {
        let region = match self {
            DomainFile::Polygon { vertices } => RoundedRegion::polygon(ConvexPolygon::new(points(vertices))?),
            DomainFile::Rounded { core, radius } => RoundedRegion::new(ConvexPolygon::new(points(core))?, *radius)?,
        };
        if region.is_empty() {
            return Err(CliError::Invalid("domain is empty".into()));
        }
        Ok(region)
    }
}

/// Parses `unit-square`, `rectangle:W:H`, `regular:k`, or reads a JSON file.
pub fn parse_domain(source: &str) -> Result<RoundedRegion, CliError> {
    let parts: Vec<&str> = source.split(':').collect();
    match parts.as_slice() {
        ["unit-square"] => Ok(RoundedRegion::polygon(ConvexPolygon::unit_square())),
        ["rectangle", w, h] => {
            let (w, h) = (number(w)?, number(h)?);
            Ok(RoundedRegion::polygon(ConvexPolygon::rectangle(w, h)?))
        }
        ["regular", k] => {
            let k: usize = k
                .parse()
                .map_err(|_| CliError::Invalid(format!("bad vertex count {k:?}")))?;
            Ok(RoundedRegion::polygon(ConvexPolygon::regular(k)?))
        }
        _ => read_json::<DomainFile>(Path::new(source))?.to_region(),
    }
}

/// Parses `euclidean`, `l1`, `linf`, or reads a Wulff polygon JSON file.
pub fn parse_norm(source: &str) -> Result<Norm, CliError> {
    match source {
        "euclidean" => Ok(Norm::Euclidean),
        "l1" => Ok(Norm::l1()),
        "linf" => Ok(Norm::linf()),
        _ => {
            let NormFile::WulffPolygon { vertices } = read_json(Path::new(source))?;
            Ok(Norm::polygon(points(&vertices))?)
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

fn number(s: &str) -> Result<f64, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Invalid(format!("bad number {s:?}")))
}

/// A scalar mass or an inclusive `start:stop:step` range.
pub fn parse_masses(source: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = source.split(':').collect();
    let masses = match parts.as_slice() {
        [m] => vec![number(m)?],
        [start, stop, step] => {
            let (start, stop, step) = (number(start)?, number(stop)?, number(step)?);
            if !(step > 0.0 && step.is_finite()) {
                return Err(CliError::Invalid("mass step must be positive".into()));
            }
            if !(stop >= start) {
                return Err(CliError::Invalid("mass range stop is below start".into()));
            }
            let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
            (0..count).map(|i| start + step * i as f64).collect()
        }
        _ => return Err(CliError::Invalid(format!("bad mass {source:?}"))),
    };
    if let Some(m) = masses.iter().find(|m| !(**m >= 0.0 && m.is_finite())) {
        return Err(CliError::Invalid(format!("mass must be nonnegative, got {m}")));
    }
    Ok(masses)
}
