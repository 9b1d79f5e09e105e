//! All complex roots of an integer polynomial.
//!
//! Small integer roots are split off exactly first (chromatic polynomials
//! carry repeated roots at 0, 1, 2, …). The remaining factor goes through
//! Aberth–Ehrlich simultaneous iteration in `f64`, then a few more Aberth
//! sweeps in double-double precision against the exact coefficients.

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use twofloat::TwoFloat;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

pub const DEFAULT_TOLERANCE: f64 = 1e-10;

const MAX_ITERATIONS: usize = 1000;
const POLISH_SWEEPS: usize = 8;
/// Largest magnitude tried during exact integer-root deflation.
const INTEGER_ROOT_SEARCH: i64 = 64;

type Dd = Complex<TwoFloat>;

#[derive(Clone, Debug, Serialize)]
pub struct RootSet {
    #[serde(serialize_with = "serialize_roots")]
    pub roots: Vec<Complex64>,
    /// `|P(r)| / max|coefficient|`, evaluated at the double-double iterate.
    pub residuals: Vec<f64>,
    pub max_modulus: f64,
}

fn serialize_roots<S: serde::Serializer>(roots: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(roots.len()))?;
    for r in roots {
        seq.serialize_element(&[r.re, r.im])?;
    }
    seq.end()
}

impl RootSet {
    pub fn worst_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

pub fn polynomial_roots(p: &IntPolynomial, tol: f64) -> Result<RootSet> {
    let degree = p.degree().unwrap_or(0);
    if degree == 0 {
        return Err(Error::InvalidParameter("root finding needs degree ≥ 1".into()));
    }
    let scale = p.max_abs_coeff().to_f64().unwrap_or(f64::INFINITY);

    let (exact, rest) = split_integer_roots(p);
    let mut roots: Vec<Dd> = exact.iter().map(|&r| dd(Complex64::new(r as f64, 0.0))).collect();
    let mut residuals = vec![0.0; exact.len()];

    if rest.degree().unwrap_or(0) > 0 {
        let (approx, converged) = aberth_f64(&rest);
        let coeffs: Vec<TwoFloat> = rest.coeffs().iter().map(bigint_to_dd).collect();
        let mut polished = polish(&coeffs, approx);
        pair_conjugates(&mut polished);
        let full: Vec<TwoFloat> = p.coeffs().iter().map(bigint_to_dd).collect();
        let res: Vec<f64> = polished
            .iter()
            .map(|z| modulus(&horner(&full, z)) / scale)
            .collect();
        let worst = res.iter().copied().fold(0.0, f64::max);
        if worst.is_nan() || worst >= tol {
            let mut best: Vec<Complex64> = roots.iter().map(to_f64).collect();
            best.extend(polished.iter().map(to_f64));
            return Err(Error::NonConvergence {
                iterations: if converged { POLISH_SWEEPS } else { MAX_ITERATIONS },
                worst_residual: worst,
                best,
            });
        }
        roots.extend(polished);
        residuals.extend(res);
    }

    let roots: Vec<Complex64> = roots.iter().map(to_f64).collect();
    let max_modulus = roots.iter().map(|z| z.norm()).fold(0.0, f64::max);
    Ok(RootSet {
        roots,
        residuals,
        max_modulus,
    })
}

/// Divides out every integer root with `|r| ≤ INTEGER_ROOT_SEARCH`, with
/// multiplicity.
fn split_integer_roots(p: &IntPolynomial) -> (Vec<i64>, IntPolynomial) {
    let mut rest = p.clone();
    let mut found = Vec::new();
    while rest.degree().unwrap_or(0) > 0 && rest.coeff(0).is_zero() {
        rest = rest.divide_root(&BigInt::zero()).expect("zero constant term");
        found.push(0);
    }
    for mag in 1..=INTEGER_ROOT_SEARCH {
        for r in [mag, -mag] {
            let br = BigInt::from(r);
            loop {
                if rest.degree().unwrap_or(0) == 0 || !(rest.coeff(0) % &br).is_zero() {
                    break;
                }
                match rest.divide_root(&br) {
                    Some(q) => {
                        rest = q;
                        found.push(r);
                    }
                    None => break,
                }
            }
        }
    }
    (found, rest)
}

fn cauchy_bound(c: &[f64]) -> f64 {
    let lead = c[c.len() - 1].abs();
    1.0 + c[..c.len() - 1].iter().map(|x| x.abs() / lead).fold(0.0, f64::max)
}

fn aberth_f64(p: &IntPolynomial) -> (Vec<Complex64>, bool) {
    let c = p.to_f64();
    let d = c.len() - 1;
    let dc: Vec<f64> = (1..=d).map(|k| c[k] * k as f64).collect();
    // Perturbed circle at the geometric-mean root modulus, capped by Cauchy.
    let radius = (c[0].abs() / c[d].abs())
        .powf(1.0 / d as f64)
        .clamp(1e-3, cauchy_bound(&c));
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / d as f64 + 0.4;
            Complex64::from_polar(radius * (1.0 + 0.01 * k as f64 / d as f64), theta)
        })
        .collect();
    for _ in 0..MAX_ITERATIONS {
        let mut biggest: f64 = 0.0;
        for k in 0..d {
            let pz = horner_f64(&c, z[k]);
            if pz.norm() == 0.0 {
                continue;
            }
            let ratio = pz / horner_f64(&dc, z[k]);
            let repulsion: Complex64 = (0..d).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                biggest = biggest.max(step.norm() / (1.0 + z[k].norm()));
            }
        }
        if biggest < 4.0 * f64::EPSILON {
            return (z, true);
        }
    }
    (z, false)
}

fn polish(c: &[TwoFloat], start: Vec<Complex64>) -> Vec<Dd> {
    let d = c.len() - 1;
    let dc: Vec<TwoFloat> = (1..=d).map(|k| c[k] * TwoFloat::from(k as f64)).collect();
    let mut z: Vec<Dd> = start.into_iter().map(dd).collect();
    let one = Dd::new(TwoFloat::from(1.0), TwoFloat::from(0.0));
    for _ in 0..POLISH_SWEEPS {
        for k in 0..d {
            let pz = horner(c, &z[k]);
            if modulus(&pz) == 0.0 {
                continue;
            }
            let ratio = pz / horner(&dc, &z[k]);
            let mut repulsion = Dd::new(TwoFloat::from(0.0), TwoFloat::from(0.0));
            for j in (0..d).filter(|&j| j != k) {
                repulsion += one / (z[k] - z[j]);
            }
            let step = ratio / (one - ratio * repulsion);
            if to_f64(&step).is_finite() {
                z[k] -= step;
            }
        }
    }
    z
}

/// Matches each upper-half-plane root with the nearest lower-half-plane one
/// and replaces the pair by its symmetrized average.
fn pair_conjugates(z: &mut [Dd]) {
    let n = z.len();
    let mut used = vec![false; n];
    for i in 0..n {
        if used[i] || z[i].im.hi() <= 0.0 {
            continue;
        }
        let zi = to_f64(&z[i]);
        let partner = (0..n)
            .filter(|&j| !used[j] && j != i && z[j].im.hi() < 0.0)
            .min_by(|&a, &b| {
                let da = (to_f64(&z[a]) - zi.conj()).norm();
                let db = (to_f64(&z[b]) - zi.conj()).norm();
                da.total_cmp(&db)
            });
        if let Some(j) = partner {
            if (to_f64(&z[j]) - zi.conj()).norm() <= 1e-6 * (1.0 + zi.norm()) {
                let half = TwoFloat::from(0.5);
                let re = (z[i].re + z[j].re) * half;
                let im = (z[i].im - z[j].im) * half;
                z[i] = Dd::new(re, im);
                z[j] = Dd::new(re, -im);
                used[i] = true;
                used[j] = true;
            }
        }
    }
}

fn horner_f64(c: &[f64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::zero(), |acc, &a| acc * z + a)
}

fn horner(c: &[TwoFloat], z: &Dd) -> Dd {
    c.iter().rev().fold(Dd::new(TwoFloat::from(0.0), TwoFloat::from(0.0)), |acc, a| {
        let t = acc * *z;
        Dd::new(t.re + *a, t.im)
    })
}

fn dd(z: Complex64) -> Dd {
    Dd::new(TwoFloat::from(z.re), TwoFloat::from(z.im))
}

fn to_f64(z: &Dd) -> Complex64 {
    Complex64::new(f64::from(z.re), f64::from(z.im))
}

fn modulus(z: &Dd) -> f64 {
    f64::from((z.re * z.re + z.im * z.im).sqrt())
}

fn bigint_to_dd(c: &BigInt) -> TwoFloat {
    let hi = c.to_f64().unwrap_or(f64::INFINITY);
    if !hi.is_finite() {
        return TwoFloat::from(hi);
    }
    let rest = c - BigInt::from(hi as i128);
    let lo = if rest.abs() < BigInt::from(1i128 << 100) {
        rest.to_f64().unwrap_or(0.0)
    } else {
        0.0
    };
    TwoFloat::from(hi) + lo
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_re(r: &RootSet) -> Vec<f64> {
        let mut v: Vec<f64> = r.roots.iter().map(|z| z.re).collect();
        v.sort_by(f64::total_cmp);
        v
    }

    #[test]
    fn triangle_polynomial() {
        let r = polynomial_roots(&IntPolynomial::from_i64(&[0, 2, -3, 1]), DEFAULT_TOLERANCE).unwrap();
        assert_eq!(sorted_re(&r), vec![0.0, 1.0, 2.0]);
        assert_eq!(r.max_modulus, 2.0);
    }

    #[test]
    fn quadratic() {
        let r = polynomial_roots(&IntPolynomial::from_i64(&[2, -3, 1]), DEFAULT_TOLERANCE).unwrap();
        assert_eq!(sorted_re(&r), vec![1.0, 2.0]);
    }

    #[test]
    fn five_cycle_roots_are_shifted_unity_roots() {
        // P_{C5} = (q−1)^5 − (q−1): roots 0 and 1 + ζ with ζ⁴ = 1 … plus ζ = 0
        let x = IntPolynomial::linear_root(1);
        let p = &x.pow(5) - &x;
        let r = polynomial_roots(&p, DEFAULT_TOLERANCE).unwrap();
        assert_eq!(r.roots.len(), 5);
        assert!((r.max_modulus - 2.0).abs() < 1e-12);
        for z in &r.roots {
            let w = z - 1.0;
            assert!((w.powu(5) - w).norm() < 1e-12, "{z}");
        }
    }

    #[test]
    fn irrational_and_complex_roots() {
        // q² + 1 and q² − 2
        let p = &IntPolynomial::from_i64(&[1, 0, 1]) * &IntPolynomial::from_i64(&[-2, 0, 1]);
        let r = polynomial_roots(&p, DEFAULT_TOLERANCE).unwrap();
        assert!(r.worst_residual() < 1e-20);
        assert!((r.max_modulus - 2f64.sqrt()).abs() < 1e-14);
        let imag: Vec<_> = r.roots.iter().filter(|z| z.im.abs() > 0.5).collect();
        assert_eq!(imag.len(), 2);
        assert_eq!(imag[0].conj(), *imag[1]);
    }

    #[test]
    fn constant_is_rejected() {
        assert!(polynomial_roots(&IntPolynomial::constant(3), 1e-10).is_err());
    }

    #[test]
    fn clustered_non_integer_roots() {
        // (2q − 1)^3 (q² − q + 1)
        let p = &IntPolynomial::from_i64(&[-1, 2]).pow(3) * &IntPolynomial::from_i64(&[1, -1, 1]);
        let r = polynomial_roots(&p, DEFAULT_TOLERANCE).unwrap();
        assert_eq!(r.roots.len(), 5);
        assert!(r.worst_residual() < DEFAULT_TOLERANCE);
        assert!((r.max_modulus - 1.0).abs() < 1e-9);
    }
}
