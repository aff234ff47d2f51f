//! Exotic eigenvalues of the pseudo-Laplacian, their spacing, the Green's
//! function constant term and the J(w) repulsion experiment.
//!
//! On the critical line w = 1/2 + it the scattering coefficient is
//! c_w = e^{−2iψ(t)} with ψ(t) = arg ξ(1+2it), so the truncation condition
//! a^w + c_w a^{1−w} = 0 becomes cos(t log a + ψ(t)) = 0.

#[cfg(not(feature = "std"))]
use num_traits::Float;

mod greens;
mod repulsion;

use alloc::vec::Vec;
use core::f64::consts::PI;

pub use greens::{greens_constant_term_check, ContourConfig, GreensCheck, GreensContour};
pub use repulsion::{
    hardy_l, hardy_z, heegner_line_real, j_function, repulsion_experiment, JContour, RepulsionReport, RepulsionRow,
    ZeroComparison,
};

use crate::eisenstein::{c_scattering, c_scattering_gamma_form};
use crate::specfun::quad::GaussLegendre;
use crate::specfun::{psi_arg_xi, ArgTrack};
use crate::{Complex, Error, Result};

/// Grid step of the ψ track used by the root finders.
pub const TRACK_STEP: f64 = 0.05;

/// Bisection target width in t.
const ROOT_TOL: f64 = 1e-12;

/// A critical-line parameter w = 1/2 + it with a^w + c_w a^{1−w} = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralRoot {
    pub t: f64,
    pub w: Complex,
    /// λ_w = w(w−1) = −1/4 − t²
    pub lambda: f64,
    /// |a^w + c_w a^{1−w}| with c_w = ξ(2w−1)/ξ(2w)
    pub residual: f64,
    /// |y^w + c_w y^{1−w}| at y = a with c_w in its Γ-ζ form
    pub constant_term_residual: f64,
    pub a: f64,
}

/// Shrinks a sign-change bracket of `f` until it is narrower than `tol`.
pub(crate) fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut flo = f(lo)?;
    if flo == 0.0 {
        return Ok(lo);
    }
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

fn phase(track: &ArgTrack, a: f64, t: f64) -> Result<f64> {
    Ok(t * a.ln() + track.eval(t)?)
}

/// Number of cosine zeros in [t_min, t_max] predicted by the phase increment
/// ⌊(θ(t_max) + π/2)/π⌋ − ⌊(θ(t_min) + π/2)/π⌋ with θ = t log a + ψ.
pub fn phase_count_prediction(track: &ArgTrack, a: f64, t_min: f64, t_max: f64) -> Result<i64> {
    let k = |t: f64| -> Result<i64> { Ok(((phase(track, a, t)? + PI / 2.0) / PI).floor() as i64) };
    Ok(k(t_max)? - k(t_min)?)
}

fn validate_root(a: f64, t: f64) -> Result<SpectralRoot> {
    let w = Complex::new(0.5, t);
    let la = a.ln();
    let aw = (w * la).exp();
    let a1w = ((-w + 1.0) * la).exp();
    let residual = (aw + c_scattering(w)? * a1w).norm();
    let constant_term_residual = (aw + c_scattering_gamma_form(w)? * a1w).norm();
    Ok(SpectralRoot {
        t,
        w,
        lambda: -0.25 - t * t,
        residual,
        constant_term_residual,
        a,
    })
}

/// Roots of cos(t log a + ψ(t)) on [t_min, t_max] using an existing track.
pub fn exotic_roots_with_track(track: &ArgTrack, a: f64, t_min: f64, t_max: f64) -> Result<Vec<SpectralRoot>> {
    if !(a > 1.0) || !a.is_finite() {
        return Err(Error::domain("exotic_roots", "cut-off height a must exceed 1"));
    }
    if !(t_min >= 0.1) || !(t_max > t_min) {
        return Err(Error::domain("exotic_roots", "need 0.1 ≤ t_min < t_max"));
    }
    if t_max > track.t_max() {
        return Err(Error::domain("exotic_roots", "track does not reach t_max"));
    }
    let la = a.ln();
    // grid points of the track inside the window, with the window ends added
    let mut ts: Vec<f64> = alloc::vec![t_min];
    let mut th: Vec<f64> = alloc::vec![phase(track, a, t_min)?];
    for (t, p) in track.t_grid().iter().zip(track.psi_values()) {
        if *t > t_min && *t < t_max {
            ts.push(*t);
            th.push(t * la + p);
        }
    }
    ts.push(t_max);
    th.push(phase(track, a, t_max)?);

    let level = |theta: f64| ((theta + PI / 2.0) / PI).floor();
    let mut roots = Vec::new();
    for k in 1..ts.len() {
        let (k0, k1) = (level(th[k - 1]), level(th[k]));
        if k0 == k1 {
            continue;
        }
        // θ is continuous between grid points, so each crossed level is a root
        let (lo_level, hi_level) = if k1 > k0 { (k0 + 1.0, k1) } else { (k1 + 1.0, k0) };
        let mut j = lo_level;
        while j <= hi_level {
            let target = j * PI - PI / 2.0;
            let t = bisect(|t| Ok(phase(track, a, t)? - target), ts[k - 1], ts[k], ROOT_TOL)?;
            roots.push(validate_root(a, t)?);
            j += 1.0;
        }
    }
    roots.sort_by(|x, y| x.t.total_cmp(&y.t));
    let predicted = phase_count_prediction(track, a, t_min, t_max)?;
    if (roots.len() as i64 - predicted).abs() > 1 {
        return Err(Error::NonConvergence {
            what: "exotic root count disagrees with the phase increment",
        });
    }
    Ok(roots)
}

/// All exotic spectral parameters t ∈ [t_min, t_max] for cut-off height a.
pub fn exotic_roots(a: f64, t_min: f64, t_max: f64) -> Result<Vec<SpectralRoot>> {
    let track = psi_arg_xi(t_max, TRACK_STEP)?;
    exotic_roots_with_track(&track, a, t_min, t_max)
}

/// One consecutive-root gap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacingRow {
    /// midpoint of the two roots
    pub t: f64,
    pub gap: f64,
    /// π/(log a + ψ'(t)), the cosine-phase spacing predicted at the midpoint
    pub comparator: f64,
    /// π/log t, the coarser comparison
    pub pi_over_log: f64,
}

pub fn spacing_statistics(roots: &[SpectralRoot], track: &ArgTrack) -> Result<Vec<SpacingRow>> {
    if roots.len() < 3 {
        return Err(Error::domain("spacing_statistics", "need at least three roots"));
    }
    roots
        .windows(2)
        .map(|p| {
            let t = 0.5 * (p[0].t + p[1].t);
            let dpsi = track.derivative(t, 1e-3)?;
            Ok(SpacingRow {
                t,
                gap: p[1].t - p[0].t,
                comparator: PI / (p[0].a.ln() + dpsi),
                pi_over_log: PI / t.ln(),
            })
        })
        .collect()
}

/// Hyperbolic area of SL₂(ℤ)\𝔥, ∫_{−1/2}^{1/2} ∫_{√(1−x²)}^∞ dy dx / y².
pub fn fundamental_domain_volume() -> f64 {
    GaussLegendre::new(32).integrate(-0.5, 0.5, |x: f64| 1.0 / (1.0 - x * x).sqrt())
}
