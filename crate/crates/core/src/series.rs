//! Generating functions for constrained rooted-subtree counts.
//!
//! `U = x·Z̃(U)` counts subtrees hanging below a non-root vertex and
//! `T = x·Z(U)` counts subtrees at the root. With the binomial profile these
//! are the subtree counts `t_n(Δ)` of the Δ-regular infinite tree.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::NeighborhoodProfile;
use crate::poly::IntPolynomial;

pub const DEFAULT_ORDER: usize = 64;
const BISECTION_RTOL: f64 = 1e-12;

/// Coefficients `a_1..a_N` of a power series without constant term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct TruncatedSeries {
    #[serde(serialize_with = "crate::json::bigint_strings")]
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// `a_n`, 1-based; zero past the truncation order.
    pub fn coeff(&self, n: usize) -> BigInt {
        assert!(n >= 1, "series coefficients start at n = 1");
        self.coeffs.get(n - 1).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `Σ_{n ≤ upto} a_n x^{n−1}`, i.e. the truncation of `S(x)/x`, for `x ≥ 0`.
    pub fn partial_sum_over_x(&self, x: f64, upto: usize) -> f64 {
        self.coeffs
            .iter()
            .take(upto)
            .enumerate()
            .map(|(k, c)| scaled_term(c, x, k))
            .sum()
    }
}

/// Natural log of `|c|`, finite even when `c` exceeds the `f64` range.
pub(crate) fn ln_abs(c: &BigInt) -> f64 {
    let bits = c.bits();
    if bits <= 1000 {
        return c.abs().to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top = (c.abs() >> shift).to_f64().unwrap_or(f64::INFINITY);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `c · x^k` for `x ≥ 0` without intermediate overflow.
pub(crate) fn scaled_term(c: &BigInt, x: f64, k: usize) -> f64 {
    if c.is_zero() {
        return 0.0;
    }
    let xk = x.powi(k as i32);
    if c.bits() <= 1000 && xk.is_normal() {
        return c.to_f64().unwrap_or(f64::INFINITY) * xk;
    }
    if x == 0.0 {
        return 0.0;
    }
    let magnitude = (ln_abs(c) + k as f64 * x.ln()).exp();
    if c.is_negative() {
        -magnitude
    } else {
        magnitude
    }
}

fn check_generating_poly(p: &IntPolynomial, name: &str) -> Result<()> {
    if !p.coeff(0).is_one() {
        return Err(Error::InvalidParameter(format!("{name} must have constant term 1")));
    }
    if p.coeffs().iter().any(Signed::is_negative) {
        return Err(Error::InvalidParameter(format!("{name} must have non-negative coefficients")));
    }
    Ok(())
}

/// Solves `U = x·Z̃(U)` and `T = x·Z(U)` to order `order`.
///
/// `powers[k][j]` holds `[x^j] U^k`; the coefficient `u_m` only needs
/// `powers[·][m−1]`, after which column `m` of every power follows from
/// `U^k = U · U^{k−1}`.
pub fn solve_tree_series(
    z_tilde: &IntPolynomial,
    z: &IntPolynomial,
    order: usize,
) -> Result<(TruncatedSeries, TruncatedSeries)> {
    check_generating_poly(z_tilde, "Z̃")?;
    check_generating_poly(z, "Z")?;
    let max_power = z_tilde.degree().unwrap_or(0).max(z.degree().unwrap_or(0));

    let mut u = vec![BigInt::zero(); order + 1];
    let mut powers = vec![vec![BigInt::zero(); order + 1]; max_power + 1];
    powers[0][0] = BigInt::one();
    let mut t = Vec::with_capacity(order);

    let column = |poly: &IntPolynomial, powers: &[Vec<BigInt>], j: usize| -> BigInt {
        poly.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c * &powers[k][j])
            .sum()
    };

    for m in 1..=order {
        u[m] = column(z_tilde, &powers, m - 1);
        t.push(column(z, &powers, m - 1));
        for k in 1..=max_power {
            let (lower, upper) = powers.split_at_mut(k);
            let prev = &lower[k - 1];
            upper[0][m] = (1..=m).map(|i| &u[i] * &prev[m - i]).sum();
        }
    }
    u.remove(0);
    Ok((TruncatedSeries { coeffs: u }, TruncatedSeries { coeffs: t }))
}

/// `t_n(Δ)` for `n = 1..order`.
pub fn t_n_delta(delta: usize, order: usize) -> Result<TruncatedSeries> {
    if delta == 0 {
        return Err(Error::InvalidParameter("Δ must be ≥ 1".into()));
    }
    let p = NeighborhoodProfile::binomial(delta);
    Ok(solve_tree_series(&p.z_tilde(), &p.z(), order)?.1)
}

/// `t̄_n` for a neighborhood profile.
pub fn profile_series(profile: &NeighborhoodProfile, order: usize) -> Result<TruncatedSeries> {
    Ok(solve_tree_series(&profile.z_tilde(), &profile.z(), order)?.1)
}

/// Supremum of `u / Z̃(u)` over `u ≥ 0`, with the maximizer (`None` when the
/// supremum is only approached as `u → ∞`).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Radius {
    pub r: f64,
    pub u0: Option<f64>,
}

pub fn series_radius(z_tilde: &IntPolynomial) -> Result<Radius> {
    check_generating_poly(z_tilde, "Z̃")?;
    match z_tilde.degree() {
        Some(0) | None => Ok(Radius { r: f64::INFINITY, u0: None }),
        Some(1) => Ok(Radius {
            r: 1.0 / z_tilde.coeff(1).to_f64().unwrap_or(f64::INFINITY),
            u0: None,
        }),
        Some(_) => {
            // Z̃(u) − u·Z̃′(u) = 1 − Σ (k−1) c_k u^k falls strictly from 1.
            let c = z_tilde.to_f64();
            let g = |u: f64| {
                1.0 - c
                    .iter()
                    .enumerate()
                    .skip(2)
                    .map(|(k, &ck)| (k as f64 - 1.0) * ck * u.powi(k as i32))
                    .sum::<f64>()
            };
            let u0 = bisect_decreasing(g, 0.0)?;
            Ok(Radius {
                r: u0 / z_tilde.eval_f64(u0),
                u0: Some(u0),
            })
        }
    }
}

/// Root of a strictly decreasing function with `f(lo) > 0`; the upper end is
/// found by doubling.
fn bisect_decreasing(f: impl Fn(f64) -> f64, lo: f64) -> Result<f64> {
    let mut lo = lo;
    let mut hi = lo.max(1.0);
    let mut grow = 0;
    while f(hi) > 0.0 {
        lo = hi;
        hi *= 2.0;
        grow += 1;
        if grow > 1100 {
            return Err(Error::InvalidParameter("no sign change found".into()));
        }
    }
    while hi - lo > BISECTION_RTOL * hi.abs().max(f64::MIN_POSITIVE) {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `Z^{-1}(target)` on `[0, ∞)` for `Z` with non-negative coefficients and
/// `Z(0) = 1 < target`.
pub fn inverse_increasing(z: &IntPolynomial, target: f64) -> Result<f64> {
    if z.degree().unwrap_or(0) == 0 {
        return Err(Error::InvalidParameter(format!(
            "{target} lies outside the range of the constant polynomial {z}"
        )));
    }
    if target <= z.eval_f64(0.0) {
        return Err(Error::InvalidParameter(format!("target {target} ≤ Z(0)")));
    }
    bisect_decreasing(|u| target - z.eval_f64(u), 0.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Threshold {
    pub b: f64,
    /// `Z^{-1}(b)`.
    pub preimage: f64,
    /// `Z^{-1}(b) / Z̃(Z^{-1}(b))`.
    pub x_star: f64,
}

/// The largest `x` with `T̄(x)/x ≤ b`, in closed form.
pub fn sup_x_threshold(b: f64, z: &IntPolynomial, z_tilde: &IntPolynomial) -> Result<Threshold> {
    if b.is_nan() || b <= 1.0 {
        return Err(Error::InvalidParameter(format!("threshold b must exceed 1, got {b}")));
    }
    check_generating_poly(z, "Z")?;
    check_generating_poly(z_tilde, "Z̃")?;
    let preimage = inverse_increasing(z, b)?;
    Ok(Threshold {
        b,
        preimage,
        x_star: preimage / z_tilde.eval_f64(preimage),
    })
}
