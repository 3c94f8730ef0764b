//! Minimizers of the stacked anisotropic perimeter problem on convex planar
//! domains.
//!
//! Given a convex domain `Ω`, a norm `φ` (Euclidean disc or centrally
//! symmetric Wulff polygon) and a mass `m`, the problem is to minimize
//! `∫ φ*(Du)` over integer-valued `u ≥ 0` supported in `Ω` with `∫ u = m`.
//! Minimizers are towers `u = Σ 1_{E_j}` of nested level sets, and every level
//! set is a Wulff plaquette, a Wulff ball or a stadium of radius `R_Ω`.
//!
//! All shapes are carried exactly as [`RoundedRegion`]s (a convex polygon core
//! dilated by a multiple of the Wulff shape), so areas and perimeters are
//! closed-form Steiner expressions and no boundary curve is ever discretized on
//! the solver path.
//!
//! Module map:
//! - [`geometry`]: gauges, support functions, erosion, plaquettes, radii.
//! - [`isoperimetric`]: single-layer constrained isoperimetric problem.
//! - [`tower`]: the stacked problem and its candidate families.
//! - [`closed_form`]: explicit unit-square solutions used as golden oracles.
//! - [`oracle`]: brute-force grid verification and boundary discretization.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod closed_form;
mod error;
pub(crate) mod fmath;
pub mod geometry;
pub mod isoperimetric;
pub mod oracle;
pub mod roots;
pub mod tower;

pub use error::{Error, Result};
pub use geometry::{ConvexPolygon, Norm, RoundedRegion, Vec2, WulffPolygon};
pub use isoperimetric::{Domain, IsoCase, IsoperimetricSolution};
pub use tower::{
    Candidate, CurvePoint, Layer, LayerKind, ProblemSpec, TowerCase, TowerProfile, TowerSolver,
};


/// Default relative tolerance for every bisection in the crate.
pub const DEFAULT_BISECTION_TOL: f64 = 1e-12;
