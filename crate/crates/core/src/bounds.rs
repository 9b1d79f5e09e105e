//! Radii of zero-free disks for chromatic polynomials.
//!
//! Every bound is a one-dimensional minimization:
//!
//! * `C(Δ)`: minimize `e^a w^{1−1/Δ} / (w^{1/Δ} − 1)` with `w = 1 + a e^{−a}`;
//! * `C*(Δ)`: the same with `w = 2 − e^{−a}`, or equivalently minimize
//!   `(1+x)^{Δ−1} / (x [2 − (1+x)^Δ])` on `0 < x < 2^{1/Δ} − 1`;
//! * `C*_G`: minimize `Z̃_G(x) / ([2 − Z_G(x)] x)` on `0 < x < Z_G^{-1}(2)`,
//!   with `Z_G`, `Z̃_G` built from the neighborhood profile.
//!
//! `|q| ≥` any of these keeps every chromatic root out.

use rayon::prelude::*;
use num_traits::Zero;
use serde::Serialize;

use crate::chromatic::chromatic_polynomial;
use crate::error::{Error, Result};
use crate::graph::{neighborhood_profile, Graph, NeighborhoodProfile};
use crate::optimize::{minimize_open_interval, OptimizationResult};
use crate::roots::{polynomial_roots, DEFAULT_TOLERANCE};
use crate::series::{self, inverse_increasing, series_radius, TruncatedSeries};

/// Upper end of the `a` search interval.
const A_MAX: f64 = 8.0;
const Y_BISECTION_STEPS: usize = 200;
const ORDERING_RTOL: f64 = 1e-9;

fn require_delta(delta: usize) -> Result<()> {
    if delta < 2 {
        return Err(Error::InvalidParameter(format!("Δ must be ≥ 2, got {delta}")));
    }
    Ok(())
}

fn a_form(a: f64, w: f64, delta: usize) -> f64 {
    let d = delta as f64;
    a.exp() * w.powf(1.0 - 1.0 / d) / (w.powf(1.0 / d) - 1.0)
}

/// Sokal's `C(Δ)`.
pub fn sokal_bound(delta: usize) -> Result<OptimizationResult> {
    require_delta(delta)?;
    Ok(minimize_open_interval(
        |a| a_form(a, 1.0 + a * (-a).exp(), delta),
        0.0,
        A_MAX,
    ))
}

/// `C*(Δ)` from the `x` form.
pub fn cstar_delta(delta: usize) -> Result<OptimizationResult> {
    require_delta(delta)?;
    let d = delta as i32;
    let hi = 2f64.powf(1.0 / delta as f64) - 1.0;
    Ok(minimize_open_interval(
        |x| (1.0 + x).powi(d - 1) / (x * (2.0 - (1.0 + x).powi(d))),
        0.0,
        hi,
    ))
}

/// `C*(Δ)` from the `a` form; agrees with [`cstar_delta`] under
/// `2 − e^{−a} = (1+x)^Δ`.
pub fn cstar_delta_a_form(delta: usize) -> Result<OptimizationResult> {
    require_delta(delta)?;
    Ok(minimize_open_interval(
        |a| a_form(a, 2.0 - (-a).exp(), delta),
        0.0,
        A_MAX,
    ))
}

/// Closed form of `C*_G` for `G = K_{Δ+1}`.
pub fn complete_graph_bound(delta: usize) -> Result<f64> {
    require_delta(delta)?;
    let d = delta as f64;
    Ok((d - 1.0).powi(2) / (3.0 * d - 1.0 - 2.0 * (2.0 * d * d - d).sqrt()))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Constants {
    /// `lim C(Δ)/Δ`.
    pub k: f64,
    pub k_argmin_a: f64,
    /// `lim C*(Δ)/Δ`.
    pub k_star: f64,
    pub k_star_argmin_y: f64,
}

pub fn constants() -> Constants {
    let k = minimize_open_interval(
        |a| {
            let l = (1.0 + a * (-a).exp()).ln();
            (a + l).exp() / l
        },
        0.0,
        A_MAX,
    );
    let ks = minimize_open_interval(|y| y / ((2.0 - y) * y.ln()), 1.0, 2.0);
    Constants {
        k: k.value,
        k_argmin_a: k.argmin,
        k_star: ks.value,
        k_star_argmin_y: ks.argmin,
    }
}

/// `C*_G` from a neighborhood profile, closed form.
pub fn cstar_profile(profile: &NeighborhoodProfile) -> Result<OptimizationResult> {
    if profile.delta == 0 {
        return Err(Error::EdgelessProfile);
    }
    let z = profile.z();
    let zt = profile.z_tilde();
    let hi = inverse_increasing(&z, 2.0)?;
    Ok(minimize_open_interval(
        |x| zt.eval_f64(x) / ((2.0 - z.eval_f64(x)) * x),
        0.0,
        hi,
    ))
}

/// `C*_G` from the series form: for each `a`, the least `κ` with
/// `Σ t̄_n (e^a/κ)^{n−1} ≤ 2 − e^{−a}`, minimized over `a`.
///
/// The series is summed to `order` terms plus a geometric tail whose ratio is
/// the last coefficient ratio inflated by 10%. `y = e^a/κ` stays below `0.9 R`
/// and below the point where the inflated ratio reaches 1; if that leaves no
/// admissible `y` at all the result is [`Error::Inconclusive`].
pub fn cstar_profile_series(profile: &NeighborhoodProfile, order: usize) -> Result<f64> {
    if profile.delta == 0 {
        return Err(Error::EdgelessProfile);
    }
    if order < 2 {
        return Err(Error::InvalidParameter("series order must be ≥ 2".into()));
    }
    let tbar = series::profile_series(profile, order)?;
    let radius = series_radius(&profile.z_tilde())?.r;
    let summer = SeriesSum::new(&tbar);
    let y_cap = if radius.is_finite() { 0.9 * radius } else { f64::INFINITY };

    // Largest admissible y for a given b = 2 − e^{−a}.
    let largest_y = |b: f64| -> f64 {
        let mut hi = if y_cap.is_finite() { y_cap } else { 1.0 };
        if !y_cap.is_finite() {
            while summer.total(hi) <= b {
                hi *= 2.0;
            }
        } else if summer.total(hi) <= b {
            return hi;
        }
        let mut lo = 0.0;
        for _ in 0..Y_BISECTION_STEPS {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if summer.total(mid) <= b {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    };

    let best = minimize_open_interval(|a| a.exp() / largest_y(2.0 - (-a).exp()), 0.0, A_MAX);
    if !best.value.is_finite() {
        return Err(Error::Inconclusive(format!(
            "series tail ratio {:.4} admits no certified y",
            summer.tail_ratio.unwrap_or(f64::NAN)
        )));
    }
    Ok(best.value)
}

struct SeriesSum<'a> {
    series: &'a TruncatedSeries,
    /// Last coefficient ratio `t̄_N / t̄_{N−1}`, when both are nonzero.
    tail_ratio: Option<f64>,
}

impl<'a> SeriesSum<'a> {
    fn new(series: &'a TruncatedSeries) -> Self {
        let c = series.coeffs();
        let n = c.len();
        let tail_ratio = (n >= 2 && !c[n - 2].is_zero() && !c[n - 1].is_zero())
            .then(|| (series::ln_abs(&c[n - 1]) - series::ln_abs(&c[n - 2])).exp());
        SeriesSum { series, tail_ratio }
    }

    /// Partial sum of `T̄(y)/y` plus the tail allowance; `+∞` where the
    /// inflated ratio reaches 1 and no geometric tail bound exists.
    fn total(&self, y: f64) -> f64 {
        let n = self.series.order();
        let head = self.series.partial_sum_over_x(y, n);
        let Some(r) = self.tail_ratio else { return head };
        let rho = 1.1 * r * y;
        if rho >= 1.0 {
            return f64::INFINITY;
        }
        let last = series::scaled_term(&self.series.coeffs()[n - 1], y, n - 1);
        head + last * rho / (1.0 - rho)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub graph_id: String,
    #[serde(serialize_with = "crate::json::display")]
    pub vertices: usize,
    #[serde(serialize_with = "crate::json::display")]
    pub edges: usize,
    #[serde(serialize_with = "crate::json::display")]
    pub delta: usize,
    /// Δ used for the degree-only bounds (`max(Δ, 2)`).
    #[serde(serialize_with = "crate::json::display")]
    pub effective_delta: usize,
    pub profile: NeighborhoodProfile,
    pub c_sokal: f64,
    pub c_star_delta: f64,
    /// `None` when Δ = 1, where the degree-2 bound is used instead.
    pub c_star_graph: Option<f64>,
    pub c_star_graph_argmin: Option<f64>,
    pub c_star_graph_series: Option<f64>,
    pub max_root_modulus: Option<f64>,
    pub worst_root_residual: Option<f64>,
    pub zero_free_verified: bool,
}

impl BoundReport {
    /// The tightest applicable radius.
    pub fn reference_bound(&self) -> f64 {
        self.c_star_graph.unwrap_or(self.c_star_delta)
    }

    /// `C*_G ≤ C*(Δ) ≤ C(Δ)`, up to the minimizer's relative accuracy
    /// (the first two coincide on triangle-free graphs).
    pub fn ordering_holds(&self) -> bool {
        let slack = 1.0 + ORDERING_RTOL;
        self.reference_bound() <= self.c_star_delta * slack && self.c_star_delta <= self.c_sokal * slack
    }

    pub fn with_graph_id(mut self, id: impl Into<String>) -> Self {
        self.graph_id = id.into();
        self
    }
}

pub fn cstar_graph(g: &Graph) -> Result<BoundReport> {
    let profile = neighborhood_profile(g)?;
    let effective_delta = profile.delta.max(2);
    let (c_star_graph, c_star_graph_argmin) = if profile.delta >= 2 {
        let r = cstar_profile(&profile)?;
        (Some(r.value), Some(r.argmin))
    } else {
        (None, None)
    };
    Ok(BoundReport {
        graph_id: String::new(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        delta: profile.delta,
        effective_delta,
        c_sokal: sokal_bound(effective_delta)?.value,
        c_star_delta: cstar_delta(effective_delta)?.value,
        profile,
        c_star_graph,
        c_star_graph_argmin,
        c_star_graph_series: None,
        max_root_modulus: None,
        worst_root_residual: None,
        zero_free_verified: false,
    })
}

pub fn cstar_graph_series(g: &Graph, order: usize) -> Result<f64> {
    cstar_profile_series(&neighborhood_profile(g)?, order)
}

/// Computes every chromatic root and checks it lies strictly inside the
/// tightest applicable disk.
pub fn verify_zero_free(g: &Graph) -> Result<BoundReport> {
    verify_zero_free_with_tolerance(g, DEFAULT_TOLERANCE)
}

/// [`verify_zero_free`] with an explicit bound on the relative root residual.
pub fn verify_zero_free_with_tolerance(g: &Graph, tol: f64) -> Result<BoundReport> {
    let mut report = cstar_graph(g)?;
    let p = chromatic_polynomial(g)?;
    let roots = polynomial_roots(&p, tol)?;
    report.max_root_modulus = Some(roots.max_modulus);
    report.worst_root_residual = Some(roots.worst_residual());
    report.zero_free_verified = roots.max_modulus < report.reference_bound();
    Ok(report)
}

/// [`verify_zero_free`] across graphs in parallel, results in input order.
pub fn verify_corpus(graphs: &[Graph]) -> Vec<Result<BoundReport>> {
    graphs.par_iter().map(verify_zero_free).collect()
}

/// Half-up rounding to two decimals, for tables only.
pub fn round2(x: f64) -> f64 {
    (x * 100.0 + 0.5).floor() / 100.0
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    /// `None` for the large-Δ row, whose entries are multiples of Δ.
    #[serde(serialize_with = "crate::json::display_opt")]
    pub delta: Option<usize>,
    pub sokal: f64,
    pub cstar_delta: f64,
    pub cstar_complete: f64,
    pub exact: f64,
}

pub const TABLE_DELTAS: [usize; 4] = [2, 3, 4, 6];

/// Degree-only bounds, the complete-graph bound and the true root radius of
/// `K_{Δ+1}` for the tabulated Δ, then the large-Δ slopes. Full precision.
pub fn comparison_table() -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for d in TABLE_DELTAS {
        rows.push(TableRow {
            delta: Some(d),
            sokal: sokal_bound(d)?.value,
            cstar_delta: cstar_delta(d)?.value,
            cstar_complete: complete_graph_bound(d)?,
            exact: d as f64,
        });
    }
    let c = constants();
    rows.push(TableRow {
        delta: None,
        sokal: c.k,
        cstar_delta: c.k_star,
        cstar_complete: 1.0 / (3.0 - 2.0 * 2f64.sqrt()),
        exact: 1.0,
    });
    Ok(rows)
}
