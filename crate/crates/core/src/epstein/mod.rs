//! Epstein zeta Z_r(Q, s) = Σ' Q[v]^{−s} on all of ℂ.
//!
//! For det Q = 1 the completed function Λ(s) = π^{−s}Γ(s)Z_r(Q, s) is the
//! Mellin transform of θ_Q − 1. Splitting the integral at t = δ and applying
//! Poisson summation to the lower piece gives
//!
//! Λ(s) = Σ' (πQ[v])^{−s} Γ(s, πQ[v]δ) + Σ' (πQ⁻¹[v])^{s−r/2} Γ(r/2−s, πQ⁻¹[v]/δ)
//!        + δ^{s−r/2}/(s − r/2) − δ^s/s,
//!
//! which is what [`epstein_zeta`] evaluates with δ = 1. Other splits give an
//! independent route used by [`check_functional_equation`].

#[cfg(not(feature = "std"))]
use num_traits::Float;

mod laurent;

use alloc::vec::Vec;
use core::f64::consts::PI;

pub use laurent::{laurent_expansion, LaurentExpansion, DEFAULT_NODES, DEFAULT_RADIUS};

use crate::lattice::{cholesky, for_each_vector, normalize_det, GramMatrix, DEFAULT_CAP};
use crate::specfun::{log_gamma, recip_gamma, upper_incomplete_gamma};
use crate::{Complex, Error, Result};

const LN_PI: f64 = 1.144_729_885_849_400_2;

/// A series or quadrature value with its truncation bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex,
    /// Truncation bound plus a floating-point roundoff estimate.
    pub error_bound: f64,
    pub terms_used: usize,
}

/// Split point of the theta integral used by the ordinary evaluation.
const PRIMARY_SPLIT: f64 = 1.0;
/// Split point of the alternative evaluation.
pub(crate) const ALTERNATE_SPLIT: f64 = 1.25;

/// Σ over nonzero v with πQ[v]·scale ≤ x_max of (πQ[v])^{−a} Γ(a, πQ[v]·scale),
/// together with Σ|terms|.
fn theta_tail_sum(q: &GramMatrix, a: Complex, scale: f64, x_max: f64) -> Result<(Complex, f64, usize)> {
    let mut values = Vec::new();
    for_each_vector(q, x_max / (PI * scale), DEFAULT_CAP, |v, qv| {
        // one vector from each ± pair
        if v.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0) {
            values.push(qv);
        }
    })?;
    values.sort_by(f64::total_cmp);
    let mut sum = Complex::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    let mut last: Option<(f64, Complex)> = None;
    for &qv in &values {
        let term = match last {
            Some((q0, t)) if q0 == qv => t,
            _ => {
                let pq = PI * qv;
                let t = (-a * pq.ln()).exp() * upper_incomplete_gamma(a, pq * scale)?;
                last = Some((qv, t));
                t
            }
        };
        sum += term;
        abs_sum += term.norm();
    }
    Ok((sum * 2.0, abs_sum * 2.0, 2 * values.len()))
}

/// Bound on Σ over πQ[v]·scale > x_max of |(πQ[v])^{−a} Γ(a, πQ[v]·scale)|.
///
/// Uses |Γ(a, y)| ≤ Γ(σ, y) ≤ y^{σ−1}e^{−y}/(1 − (σ−1)⁺/y) and the
/// Fincke–Pohst box count of lattice points in each unit shell.
fn tail_bound(q: &GramMatrix, sigma: f64, scale: f64, x_max: f64) -> Result<f64> {
    let l = cholesky(q)?;
    let r = q.dim();
    let excess = (sigma - 1.0).max(0.0);
    let mut total = 0.0;
    for k in 0..400 {
        let y = x_max + k as f64;
        if y <= excess + 1.0 {
            return Ok(f64::INFINITY);
        }
        // lattice points with πQ[v]·scale ≤ y + 1
        let radius = ((y + 1.0) / (PI * scale)).sqrt();
        let count: f64 = (0..r).map(|j| 2.0 * radius / l.get(j, j) + 1.0).product();
        // |(πQ)^{−a}| = (y/scale)^{−σ}; with the Γ bound this is scale^σ e^{−y}/(y − excess)
        let term = count * scale.powf(sigma) * (-y).exp() / (y - excess);
        total += term;
        if term < 1e-20 * total {
            break;
        }
    }
    Ok(total)
}

struct Bracket {
    value: Complex,
    truncation: f64,
    abs_sum: f64,
    terms: usize,
}

/// Λ(s) for a det-1 form with split point δ; `tol` is relative to |Λ|.
fn completed(qn: &GramMatrix, qinv: &GramMatrix, s: Complex, delta: f64, tol: f64) -> Result<Bracket> {
    let half_r = qn.dim() as f64 / 2.0;
    let dual = -s + half_r;
    let mut x_max = (3.0 * s.norm()).max(30.0);
    let bound_at =
        |x: f64| -> Result<f64> { Ok(tail_bound(qn, s.re, delta, x)? + tail_bound(qinv, dual.re, 1.0 / delta, x)?) };
    let rational = (s - half_r).inv() * ((s - half_r) * delta.ln()).exp() - (s * delta.ln()).exp() / s;
    for _ in 0..8 {
        let (a, abs_a, na) = theta_tail_sum(qn, s, delta, x_max)?;
        let (b, abs_b, nb) = theta_tail_sum(qinv, dual, 1.0 / delta, x_max)?;
        let value = a + b + rational;
        let truncation = bound_at(x_max)?;
        let target = tol * value.norm();
        if truncation <= target || !target.is_normal() {
            return Ok(Bracket {
                value,
                truncation,
                abs_sum: abs_a + abs_b + rational.norm(),
                terms: na + nb,
            });
        }
        // the bound decays like e^{−x}; jump straight to a sufficient radius
        let mut x = x_max;
        while bound_at(x)? > 0.5 * target && x < x_max + 200.0 {
            x += 2.0;
        }
        x_max = x;
    }
    Err(Error::NonConvergence {
        what: "Epstein truncation radius",
    })
}

fn check_not_pole(r: usize, s: Complex) -> Result<()> {
    if s == Complex::new(0.0, 0.0) || s == Complex::new(r as f64 / 2.0, 0.0) {
        return Err(Error::Pole {
            function: "epstein_zeta",
            at: s,
        });
    }
    if !crate::is_finite(s) {
        return Err(Error::NonFinite("epstein_zeta"));
    }
    Ok(())
}

/// Relative roundoff per summed term, covering the incomplete-gamma kernels.
const ROUNDOFF: f64 = 1e-14;

fn evaluate_with_split(q: &GramMatrix, s: Complex, tol: f64, delta: f64) -> Result<EvalResult> {
    check_not_pole(q.dim(), s)?;
    let (qn, c) = normalize_det(q);
    let qinv = qn.inverse();
    let b = completed(&qn, &qinv, s, delta, tol)?;
    // Z = Λ π^s / Γ(s), then Z(cQ', s) = c^{−s} Z(Q', s)
    let factor = (s * (LN_PI - c.ln())).exp() * recip_gamma(s);
    let value = b.value * factor;
    let error_bound = (b.truncation + ROUNDOFF * b.abs_sum) * factor.norm();
    if !crate::is_finite(value) {
        return Err(Error::NonFinite("epstein_zeta"));
    }
    Ok(EvalResult {
        value,
        error_bound,
        terms_used: b.terms,
    })
}

/// Z_r(Q, s) for any positive-definite Q and s ∉ {0, r/2}. `tol` bounds the
/// truncation error relative to the completed value.
pub fn epstein_zeta(q: &GramMatrix, s: Complex, tol: f64) -> Result<EvalResult> {
    evaluate_with_split(q, s, tol, PRIMARY_SPLIT)
}

/// Z_r(Q, s) through the alternate theta split; agrees with
/// [`epstein_zeta`] only because both are the same analytic function.
pub fn epstein_zeta_alternate(q: &GramMatrix, s: Complex, tol: f64) -> Result<EvalResult> {
    evaluate_with_split(q, s, tol, ALTERNATE_SPLIT)
}

/// Z_r(Q, s) straight from the Dirichlet series for Re s > r/2: the exact sum
/// over Q[v] ≤ `bound` (at most `cap` vectors) plus the continuum estimate of the rest,
/// π^{r/2} B^{r/2−s} / (Γ(r/2) √det Q (s − r/2)).
///
/// The reported bound is the size of that continuum correction, which
/// overstates the true error (the lattice-point discrepancy) by a wide margin.
pub fn epstein_direct(q: &GramMatrix, s: Complex, bound: f64, cap: usize) -> Result<EvalResult> {
    let r = q.dim();
    let half_r = r as f64 / 2.0;
    if !(s.re > half_r) {
        return Err(Error::domain("epstein_direct", "the series needs Re s > r/2"));
    }
    let mut sum = Complex::new(0.0, 0.0);
    let terms = for_each_vector(q, bound, cap, |_, qv| {
        sum += (-s * qv.ln()).exp();
    })?;
    let log_tail =
        half_r * LN_PI + (half_r - s) * bound.ln() - log_gamma(Complex::new(half_r, 0.0))? - 0.5 * q.determinant().ln();
    let tail = log_tail.exp() / (s - half_r);
    Ok(EvalResult {
        value: sum + tail,
        error_bound: tail.norm(),
        terms_used: terms,
    })
}

/// π^{−s}Γ(s)Z_r(Q, s) for the det-1 normalization of Q.
fn completed_value(q: &GramMatrix, s: Complex, delta: f64) -> Result<Complex> {
    check_not_pole(q.dim(), s)?;
    let (qn, _) = normalize_det(q);
    let qinv = qn.inverse();
    Ok(completed(&qn, &qinv, s, delta, 1e-14)?.value)
}

/// |Λ_Q(s) − Λ_{Q⁻¹}(r/2 − s)| with both completed functions taken for the
/// det-1 normalization; the two sides use different theta splits so the
/// residual measures the Poisson identity rather than algebra.
pub fn check_functional_equation(q: &GramMatrix, s: Complex) -> Result<f64> {
    let half_r = q.dim() as f64 / 2.0;
    let (qn, _) = normalize_det(q);
    let lhs = completed_value(&qn, s, PRIMARY_SPLIT)?;
    let rhs = completed_value(&qn.inverse(), -s + half_r, ALTERNATE_SPLIT)?;
    Ok((lhs - rhs).norm())
}

/// Laurent coefficients a_{−1}..a_{max_order} of Z_r(Q, ·) about `center`,
/// from a radius-0.1 contour.
pub fn epstein_laurent(q: &GramMatrix, center: Complex, max_order: i32) -> Result<LaurentExpansion> {
    let f = |s: Complex| epstein_zeta(q, s, 1e-14).map(|e| e.value);
    laurent_expansion(f, center, max_order, DEFAULT_RADIUS, DEFAULT_NODES, 1e-12)
}

/// Res_{s=r/2} Z_r(Q, s) for a det-1 form, extracted on a contour.
pub fn epstein_residue(q: &GramMatrix) -> Result<f64> {
    if (q.determinant() - 1.0).abs() > 1e-10 {
        return Err(Error::domain("epstein_residue", "form must have determinant 1"));
    }
    let c = Complex::new(q.dim() as f64 / 2.0, 0.0);
    Ok(epstein_laurent(q, c, 0)?.residue().re)
}

/// π^{r/2}/Γ(r/2): the residue of Z_r at s = r/2 for det Q = 1.
pub fn epstein_residue_closed_form(r: usize) -> f64 {
    let h = r as f64 / 2.0;
    (h * LN_PI - log_gamma(Complex::new(h, 0.0)).expect("r ≥ 1").re).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::riemann_zeta;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn sum_of_two_squares_at_two() {
        let exact = 6.026_812_039_691_94;
        let loose = epstein_zeta(&GramMatrix::identity(2), c(2.0, 0.0), 1e-10).unwrap();
        assert!((loose.value.re - exact).abs() <= loose.error_bound);
        let z = epstein_zeta(&GramMatrix::identity(2), c(2.0, 0.0), 1e-14).unwrap();
        assert!((z.value.re - exact).abs() < 1e-13, "{z:?}");
        assert!(z.value.im.abs() < 1e-15);
        assert!(z.error_bound < 1e-12);
    }

    #[test]
    fn value_at_zero_side_and_poles() {
        let q = GramMatrix::new(2, alloc::vec![2.0, 0.3, 0.3, 0.8]).unwrap();
        let z = epstein_zeta(&q, c(1e-7, 0.0), 1e-12).unwrap();
        assert!((z.value.re + 1.0).abs() < 1e-5);
        assert!(matches!(epstein_zeta(&q, c(1.0, 0.0), 1e-10), Err(Error::Pole { .. })));
        assert!(matches!(epstein_zeta(&q, c(0.0, 0.0), 1e-10), Err(Error::Pole { .. })));
        // trivial zeros at negative integers
        let z = epstein_zeta(&q, c(-2.0, 0.0), 1e-12).unwrap();
        assert_eq!(z.value, c(0.0, 0.0));
    }

    #[test]
    fn four_squares_closed_form() {
        // Z_4(I, s) = 8(1 − 4^{1−s}) ζ(s) ζ(s − 1)
        for s in [c(2.5, 0.0), c(3.0, 0.0), c(2.2, 1.5)] {
            let z = epstein_zeta(&GramMatrix::identity(4), s, 1e-13).unwrap().value;
            let closed =
                (-(c(4.0, 0.0).powc(-s + 1.0)) + 1.0) * 8.0 * riemann_zeta(s).unwrap() * riemann_zeta(s - 1.0).unwrap();
            assert!((z - closed).norm() < 1e-11 * closed.norm(), "s={s}");
        }
    }

    #[test]
    fn alternate_split_agrees() {
        let q = GramMatrix::new(3, alloc::vec![1.2, 0.3, -0.2, 0.3, 0.9, 0.1, -0.2, 0.1, 1.4]).unwrap();
        for s in [c(0.4, -2.0), c(2.7, 0.3), c(-1.3, 0.8)] {
            let a = epstein_zeta(&q, s, 1e-13).unwrap();
            let b = epstein_zeta_alternate(&q, s, 1e-13).unwrap();
            assert!((a.value - b.value).norm() < 1e-11 * a.value.norm().max(1.0), "s={s}");
        }
    }

    #[test]
    fn symmetric_center_is_exact() {
        let q = GramMatrix::new(2, alloc::vec![1.5, 0.2, 0.2, 0.9]).unwrap();
        // at s = r/4 both sides sum the same lattice terms in a different split
        let res = check_functional_equation(&q, c(0.5, 0.0)).unwrap();
        assert!(res < 1e-12);
    }

    #[test]
    fn residue_at_half_dimension() {
        let r2 = epstein_residue(&GramMatrix::identity(2)).unwrap();
        assert!((r2 - PI).abs() < 1e-10);
        assert!((epstein_residue_closed_form(3) - 2.0 * PI).abs() < 1e-13);
        assert!(epstein_residue(&GramMatrix::identity(2).scaled(2.0)).is_err());
    }

    #[test]
    fn continuation_matches_direct_series() {
        let q2 = GramMatrix::new(2, vec![1.4, 0.35, 0.35, 0.9]).unwrap();
        let q3 = GramMatrix::new(3, vec![1.3, 0.2, -0.1, 0.2, 0.9, 0.3, -0.1, 0.3, 1.1]).unwrap();
        for (q, s, b) in [(q2, c(2.5, 1.7), 1e5), (q3, c(3.0, -2.2), 1e4)] {
            let cont = epstein_zeta(&q, s, 1e-13).unwrap().value;
            let d = epstein_direct(&q, s, b, DEFAULT_CAP).unwrap();
            assert!((d.value - cont).norm() < 1e-9 * cont.norm());
            assert!((d.value - cont).norm() < d.error_bound);
        }
        assert!(epstein_direct(&GramMatrix::identity(2), c(0.9, 0.0), 100.0, DEFAULT_CAP).is_err());
    }
}
