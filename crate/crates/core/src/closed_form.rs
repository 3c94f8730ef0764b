//! Explicit minimizers on the unit square `[0,1]²` for the Euclidean and ℓ¹
//! norms. These are written independently of [`crate::tower`] and serve as
//! reference values for it.
//!
//! For large masses the optimal layer count lies in a two-element window
//! `{⌊κm⌋, ⌊κm⌋ + 1}` and is chosen by comparing the all-plaquette energy
//! `F_A` at both points. Near the lower end of that branch one window point
//! can need a radius outside `[0, 1/2]`; such points are skipped.

use core::f64::consts::PI;

use crate::{fmath, Error, Result};

/// Branch of the explicit solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SquareCase {
    I,
    II,
    III,
    IV,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SquareSolution {
    pub j_max: usize,
    pub case: SquareCase,
    /// Plaquette radius, or ball radius when the top layer is a ball.
    pub r: f64,
    pub energy: f64,
    pub window: (usize, usize),
    /// Another layer count with the same energy, if any.
    pub alternate: Option<usize>,
}

const WINDOW_TIE_TOL: f64 = 1e-12;

fn check_mass(m: f64) -> Result<()> {
    if m > 0.0 && m.is_finite() {
        Ok(())
    } else {
        Err(Error::MassOutOfRange(m))
    }
}

/// Euclidean all-plaquette energy for `x` layers of total mass `m`.
pub fn euclidean_f_a(x: f64, m: f64) -> f64 {
    4.0 * x - 2.0 * fmath::sqrt(4.0 - PI) * fmath::sqrt(x * (x - m))
}

/// ℓ¹ all-plaquette energy for `x` layers of total mass `m`.
pub fn crystalline_f_a(x: f64, m: f64) -> f64 {
    4.0 * x - 4.0 * fmath::sqrt((x * x - m * x) / 2.0)
}

/// Picks the cheaper admissible point of the window `{k, k + 1}`.
fn pick_window(
    m: f64,
    k: usize,
    max_ratio: f64,
    f_a: impl Fn(f64, f64) -> f64,
    r_of: impl Fn(f64) -> f64,
) -> SquareSolution {
    let admissible = |j: usize| {
        let x = j as f64;
        j >= 1 && x >= m && x <= max_ratio * m
    };
    let mut options = [k, k + 1].into_iter().filter(|&j| admissible(j));
    let first = options.next().unwrap_or(k + 1);
    let second = options.next();
    let e1 = f_a(first as f64, m);
    let (j, energy, alternate) = match second {
        Some(j2) => {
            let e2 = f_a(j2 as f64, m);
            let tie = (e1 - e2).abs() <= WINDOW_TIE_TOL * e1.abs();
            if e2 < e1 && !tie {
                (j2, e2, None)
            } else {
                (first, e1, if tie { Some(j2) } else { None })
            }
        }
        None => (first, e1, None),
    };
    SquareSolution {
        j_max: j,
        case: SquareCase::IV,
        r: r_of(j as f64),
        energy,
        window: (k, k + 1),
        alternate,
    }
}

/// Unit square, Euclidean norm.
pub fn square_euclidean(m: f64) -> Result<SquareSolution> {
    check_mass(m)?;
    if m > 4.0 {
        let kappa = (2.0 + fmath::sqrt(PI)) / (2.0 * fmath::sqrt(PI));
        let k = fmath::floor(kappa * m) as usize;
        let mut s = pick_window(m, k, 4.0 / PI, euclidean_f_a, |x| {
            fmath::sqrt((1.0 - m / x) / (4.0 - PI))
        });
        s.case = SquareCase::III;
        return Ok(s);
    }
    let n = fmath::ceil(m).max(1.0);
    let j = n as usize;
    let plaquette_perimeter = |r: f64| 4.0 - (8.0 - 2.0 * PI) * r;
    if m < n * PI / 4.0 {
        // The denominator is negative for n = 1 and positive for n ≥ 2; the
        // numerator follows it on the branch's mass interval.
        let r = fmath::sqrt((n - m - 1.0) / (4.0 * (n - 1.0) - n * PI));
        Ok(SquareSolution {
            j_max: j,
            case: SquareCase::I,
            r,
            energy: (n - 1.0) * plaquette_perimeter(r) + 2.0 * PI * r,
            window: (j, j),
            alternate: None,
        })
    } else {
        let r = fmath::sqrt(((n - m) / ((4.0 - PI) * n)).max(0.0));
        Ok(SquareSolution {
            j_max: j,
            case: SquareCase::II,
            r,
            energy: n * plaquette_perimeter(r),
            window: (j, j),
            alternate: None,
        })
    }
}

/// Unit square, ℓ¹ norm (Wulff shape the unit diamond).
pub fn square_crystalline(m: f64) -> Result<SquareSolution> {
    check_mass(m)?;
    let single = |case, r: f64, energy| SquareSolution {
        j_max: 1,
        case,
        r,
        energy,
        window: (1, 1),
        alternate: None,
    };
    if m <= 0.5 {
        let r = fmath::sqrt(m / 2.0);
        Ok(single(SquareCase::I, r, 4.0 * r))
    } else if m < 1.0 {
        let r = fmath::sqrt((1.0 - m) / 2.0);
        Ok(single(SquareCase::II, r, 4.0 - 4.0 * r))
    } else if m == 1.0 {
        Ok(SquareSolution {
            alternate: Some(2),
            window: (1, 2),
            ..single(SquareCase::III, 0.0, 4.0)
        })
    } else {
        let kappa = (1.0 + fmath::sqrt(2.0)) / 2.0;
        let k = fmath::floor(kappa * m) as usize;
        Ok(pick_window(m, k, 2.0, crystalline_f_a, |x| {
            fmath::sqrt((1.0 - m / x) / 2.0)
        }))
    }
}
