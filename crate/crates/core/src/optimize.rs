//! Bracketed one-dimensional minimization on an open interval.

use serde::Serialize;

pub const GRID_POINTS: usize = 1024;
const X_TOLERANCE: f64 = 1e-10;
const MAX_GOLDEN_STEPS: usize = 400;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct OptimizationResult {
    pub argmin: f64,
    pub value: f64,
    pub bracket: (f64, f64),
    pub evaluations: usize,
    pub tolerance_met: bool,
}

/// Minimizes `f` over the open interval `(lo, hi)`.
///
/// A uniform grid of [`GRID_POINTS`] interior points locates the best cell
/// (no unimodality is assumed); golden-section search then refines inside
/// the two neighbouring cells. Non-finite values count as `+∞`, so poles at
/// the endpoints are harmless.
pub fn minimize_open_interval(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> OptimizationResult {
    assert!(lo < hi, "empty interval ({lo}, {hi})");
    let eval = |x: f64| {
        let v = f(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };
    let step = (hi - lo) / (GRID_POINTS + 1) as f64;
    let mut best = (1, f64::INFINITY);
    for i in 1..=GRID_POINTS {
        let v = eval(lo + step * i as f64);
        if v < best.1 {
            best = (i, v);
        }
    }
    let mut evaluations = GRID_POINTS;
    let (i, grid_value) = best;
    let (mut a, mut b) = (lo + step * (i - 1) as f64, lo + step * (i + 1) as f64);
    let bracket = (a, b);

    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (eval(c), eval(d));
    evaluations += 2;
    let target = X_TOLERANCE * (hi - lo).max(f64::MIN_POSITIVE);
    let mut steps = 0;
    while b - a > target && steps < MAX_GOLDEN_STEPS {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = eval(d);
        }
        evaluations += 1;
        steps += 1;
    }
    let tolerance_met = b - a <= target;
    let mut argmin = 0.5 * (a + b);
    let mut value = eval(argmin);
    evaluations += 1;
    if grid_value < value {
        argmin = lo + step * i as f64;
        value = grid_value;
    }
    OptimizationResult {
        argmin,
        value,
        bracket,
        evaluations,
        tolerance_met,
    }
}
