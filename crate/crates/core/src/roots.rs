//! One-dimensional root finding and minimization.
//!
//! Everything here is plain bisection or golden-section search: the functions
//! we feed in (plaquette areas as a function of radius) are only piecewise
//! smooth, with kinks whenever an eroded edge disappears.

/// Upper bound on bisection steps; 100 halvings shrink any f64 interval to
/// far below its representable resolution.
pub const MAX_BISECTION_STEPS: usize = 100;

fn converged(lo: f64, hi: f64, rel_tol: f64) -> bool {
    let scale = lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE);
    (hi - lo).abs() <= rel_tol * scale
}

/// Finds a zero of `f` on `[lo, hi]`, given that `f(lo)` and `f(hi)` do not
/// share a strict sign.
///
/// Stops after [`MAX_BISECTION_STEPS`] halvings, once the bracket is within
/// `rel_tol` of its magnitude, or once the midpoint stops moving. The result
/// is clamped to the original bracket.
pub fn bisect<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, rel_tol: f64) -> f64 {
    let (a0, b0) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let (mut a, mut b) = (a0, b0);
    let fa = f(a);
    if fa == 0.0 {
        return a;
    }
    let fb = f(b);
    if fb == 0.0 {
        return b;
    }
    let neg_at_a = fa < 0.0;
    for _ in 0..MAX_BISECTION_STEPS {
        if converged(a, b, rel_tol) {
            break;
        }
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == neg_at_a {
            a = mid;
        } else {
            b = mid;
        }
    }
    (0.5 * (a + b)).clamp(a0, b0)
}

/// Largest `x` in `[lo, hi]` for which `holds(x)` is true, assuming the
/// predicate is true on an initial segment of the interval and `holds(lo)`.
///
/// Returns the last point known to satisfy the predicate, never a point that
/// failed it.
pub fn bisect_threshold<P: FnMut(f64) -> bool>(mut holds: P, lo: f64, hi: f64, rel_tol: f64) -> f64 {
    if holds(hi) {
        return hi;
    }
    let (mut a, mut b) = (lo, hi);
    for _ in 0..MAX_BISECTION_STEPS {
        if converged(a, b, rel_tol) {
            break;
        }
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        if holds(mid) {
            a = mid;
        } else {
            b = mid;
        }
    }
    a
}

/// Golden-section search for the minimizer of a unimodal `f` on `[lo, hi]`,
/// to absolute tolerance `abs_tol` in the argument.
pub fn golden_section_min<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, abs_tol: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (mut a, mut b) = (lo, hi);
    if b - a <= abs_tol {
        return 0.5 * (a + b);
    }
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..400 {
        if b - a <= abs_tol {
            break;
        }
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    let mid = 0.5 * (a + b);
    // Compare against the endpoints so monotone functions land on the boundary.
    let candidates = [lo, mid, hi];
    let mut best = mid;
    let mut best_val = f(mid);
    for &x in &candidates {
        let v = f(x);
        if v < best_val {
            best = x;
            best_val = v;
        }
    }
    best
}
