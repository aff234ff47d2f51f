//! The automorphic Schrödinger operator S = −Δ + q on SL₂(ℤ)\𝔥 with
//! q = y²|∇E₁*|², its factorization S = R L + ΔE₁* and ground state e^{−E₁*}.
//!
//! Throughout Δ = y²(∂²_x + ∂²_y), so ΔE_s = s(s−1)E_s and ΔE₁* = 3/π.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::ops::{Add, Mul, Sub};

use crate::eisenstein::{e1_star, eisenstein_sl2};
use crate::lattice::UpperHalfPoint;
use crate::specfun::eta_log_derivative;
use crate::{Complex, Error, Result};

/// Bottom of the spectrum of S, equal to ΔE₁*.
pub const LOWEST_EIGENVALUE: f64 = 3.0 / PI;

/// Stencil step used when callers do not choose one.
pub const DEFAULT_STEP: f64 = 2e-3;

/// Analytic (∂_x E₁*, ∂_y E₁*) from η'/η.
pub fn grad_e1_star(z: UpperHalfPoint) -> (f64, f64) {
    // ∂_x log|η| = Re(η'/η), ∂_y log|η| = −Im(η'/η)
    let g = eta_log_derivative(z);
    let k = 6.0 / PI;
    (-2.0 * k * g.re, k * (2.0 * g.im - 0.5 / z.y()))
}

/// q(z) = −(𝔻E₁*)² = y²((∂_xE₁*)² + (∂_yE₁*)²).
pub fn potential_q(z: UpperHalfPoint) -> f64 {
    let (gx, gy) = grad_e1_star(z);
    z.y() * z.y() * (gx * gx + gy * gy)
}

fn check_step(z: UpperHalfPoint, h: f64) -> Result<()> {
    if !(h > 0.0) || h >= z.y() / 10.0 {
        return Err(Error::domain("fd_laplacian", "step must satisfy 0 < h < y/10"));
    }
    Ok(())
}

fn five_point<T, F>(f: &mut F, z: UpperHalfPoint, h: f64, center: T) -> Result<T>
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>,
    F: FnMut(UpperHalfPoint) -> Result<T>,
{
    let sum = f(z.shifted(h, 0.0)?)? + f(z.shifted(-h, 0.0)?)? + f(z.shifted(0.0, h)?)? + f(z.shifted(0.0, -h)?)?;
    Ok((sum - center * 4.0) * (z.y() * z.y() / (h * h)))
}

/// Hyperbolic Laplacian by the 5-point stencil at h and h/2 combined with one
/// Richardson step, which leaves an O(h⁴) error.
pub fn fd_laplacian<T, F>(mut f: F, z: UpperHalfPoint, h: f64) -> Result<T>
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>,
    F: FnMut(UpperHalfPoint) -> Result<T>,
{
    check_step(z, h)?;
    let center = f(z)?;
    let coarse = five_point(&mut f, z, h, center)?;
    let fine = five_point(&mut f, z, h / 2.0, center)?;
    Ok(fine * (4.0 / 3.0) - coarse * (1.0 / 3.0))
}

fn e1(z: UpperHalfPoint) -> Result<f64> {
    Ok(e1_star(z))
}

/// Finite-difference ΔE₁* at z and its deviation from 3/π.
pub fn check_laplace_e1star(z: UpperHalfPoint) -> Result<(f64, f64)> {
    let v = fd_laplacian(e1, z, DEFAULT_STEP)?;
    Ok((v, v - LOWEST_EIGENVALUE))
}

/// |ΔE_s − s(s−1)E_s| / |E_s| with Δ by finite differences.
pub fn eigenfunction_residual(z: UpperHalfPoint, s: Complex, h: f64) -> Result<f64> {
    let e = |w: UpperHalfPoint| eisenstein_sl2(w, s).map(|v| v.value);
    let lap = fd_laplacian(e, z, h)?;
    let val = eisenstein_sl2(z, s)?.value;
    Ok((lap - val * s * (s - 1.0)).norm() / val.norm())
}

fn ground_state(z: UpperHalfPoint) -> Result<f64> {
    Ok((-e1_star(z)).exp())
}

/// |(−Δ + q)f − (3/π)f| / |f| for f = e^{−E₁*}.
pub fn ground_state_residual(z: UpperHalfPoint, h: f64) -> Result<f64> {
    let f = ground_state(z)?;
    let lap = fd_laplacian(ground_state, z, h)?;
    Ok(((-lap + potential_q(z) * f) - LOWEST_EIGENVALUE * f).abs() / f)
}

/// Everything the potential checks need at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSample {
    pub z: UpperHalfPoint,
    pub q: f64,
    pub grad: (f64, f64),
    /// finite-difference ΔE₁*
    pub lap_e1: f64,
    pub h: f64,
}

pub fn potential_sample(z: UpperHalfPoint, h: f64) -> Result<PotentialSample> {
    let grad = grad_e1_star(z);
    Ok(PotentialSample {
        z,
        q: potential_q(z),
        grad,
        lap_e1: fd_laplacian(e1, z, h)?,
        h,
    })
}

/// Rows (y, q(iy), q(iy)/y²) for the given heights.
pub fn potential_profile(heights: &[f64]) -> Result<Vec<(f64, f64, f64)>> {
    heights
        .iter()
        .map(|&y| {
            let q = potential_q(UpperHalfPoint::new(0.0, y)?);
            Ok((y, q, q / (y * y)))
        })
        .collect()
}

/// min over x ∈ [−½, ½] (on `samples` + 1 equispaced points) of q(x+iy)/y².
pub fn min_growth_ratio(y: f64, samples: usize) -> Result<f64> {
    let n = samples.max(1);
    let mut m = f64::INFINITY;
    for k in 0..=n {
        let x = -0.5 + k as f64 / n as f64;
        m = m.min(potential_q(UpperHalfPoint::new(x, y)?) / (y * y));
    }
    Ok(m)
}

/// Test functions for the factorization check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Probe {
    /// e^{−E₁*}, annihilated by L
    GroundState,
    /// y^{0.7}
    Power,
    /// (1 − ρ²/0.09)³ in ρ = |z − (0.1+1.5i)|, C² with support radius 0.3
    Bump,
}

impl Probe {
    pub const ALL: [Probe; 3] = [Probe::GroundState, Probe::Power, Probe::Bump];

    const BUMP_CENTER: (f64, f64) = (0.1, 1.5);
    const BUMP_RADIUS: f64 = 0.3;

    pub fn eval(self, z: UpperHalfPoint) -> f64 {
        match self {
            Probe::GroundState => (-e1_star(z)).exp(),
            Probe::Power => z.y().powf(0.7),
            Probe::Bump => {
                let (dx, dy) = (z.x() - Self::BUMP_CENTER.0, z.y() - Self::BUMP_CENTER.1);
                let t = 1.0 - (dx * dx + dy * dy) / (Self::BUMP_RADIUS * Self::BUMP_RADIUS);
                if t > 0.0 {
                    t * t * t
                } else {
                    0.0
                }
            }
        }
    }

    /// Whether a stencil of half-width `reach` around z stays where the probe
    /// is smooth and bounded away from zero.
    fn usable(self, z: UpperHalfPoint, reach: f64) -> bool {
        match self {
            Probe::Bump => {
                let (dx, dy) = (z.x() - Self::BUMP_CENTER.0, z.y() - Self::BUMP_CENTER.1);
                (dx * dx + dy * dy).sqrt() + reach < 0.8 * Self::BUMP_RADIUS
            }
            _ => true,
        }
    }
}

/// L f = (y f_x + A f, y f_y + B f) with (A, B) = y∇E₁*, the scalar
/// components of (𝔻 + 𝔻E₁*) f along j and k. Central differences of step h.
pub fn lowering(f: impl Fn(UpperHalfPoint) -> f64, z: UpperHalfPoint, h: f64) -> Result<(f64, f64)> {
    let y = z.y();
    let fx = (f(z.shifted(h, 0.0)?) - f(z.shifted(-h, 0.0)?)) / (2.0 * h);
    let fy = (f(z.shifted(0.0, h)?) - f(z.shifted(0.0, -h)?)) / (2.0 * h);
    let (gx, gy) = grad_e1_star(z);
    let v = f(z);
    Ok((y * fx + y * gx * v, y * fy + y * gy * v))
}

/// R(P, Q) = −y(P_x + Q_y) + Q + A P + B Q, the formal adjoint of L for the
/// measure dx dy/y², applied to L f.
fn raise_lower_at_step(f: impl Fn(UpperHalfPoint) -> f64 + Copy, z: UpperHalfPoint, h: f64) -> Result<f64> {
    let y = z.y();
    let (px_plus, _) = lowering(f, z.shifted(h, 0.0)?, h)?;
    let (px_minus, _) = lowering(f, z.shifted(-h, 0.0)?, h)?;
    let (_, qy_plus) = lowering(f, z.shifted(0.0, h)?, h)?;
    let (_, qy_minus) = lowering(f, z.shifted(0.0, -h)?, h)?;
    let (p, q) = lowering(f, z, h)?;
    let (gx, gy) = grad_e1_star(z);
    let div = (px_plus - px_minus + qy_plus - qy_minus) / (2.0 * h);
    Ok(-y * div + q + y * gx * p + y * gy * q)
}

/// R L f with the O(h²) nested stencils Richardson-combined over h and h/2.
fn raise_lower(f: impl Fn(UpperHalfPoint) -> f64 + Copy, z: UpperHalfPoint, h: f64) -> Result<f64> {
    let coarse = raise_lower_at_step(f, z, h)?;
    let fine = raise_lower_at_step(f, z, h / 2.0)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

/// Per-probe values of (S f − R L f)/f, which the factorization predicts to be
/// ΔE₁* = 3/π for every f.
#[derive(Debug, Clone, PartialEq)]
pub struct CommutatorCheck {
    pub z: UpperHalfPoint,
    /// (probe, constant); probes whose support misses the stencil are omitted
    pub constants: Vec<(Probe, f64)>,
    /// max over probes of |constant − 3/π|
    pub residual: f64,
    /// max − min of the constants
    pub spread: f64,
}

pub fn commutator_check(z: UpperHalfPoint) -> Result<CommutatorCheck> {
    let h = 1e-3;
    check_step(z, 2.0 * h)?;
    let mut constants = Vec::new();
    for probe in Probe::ALL {
        if !probe.usable(z, 2.0 * h) {
            continue;
        }
        let f = move |w: UpperHalfPoint| probe.eval(w);
        let v = f(z);
        let s_f = -fd_laplacian(|w| Ok(f(w)), z, h)? + potential_q(z) * v;
        let rl = raise_lower(f, z, h)?;
        constants.push((probe, (s_f - rl) / v));
    }
    let residual = constants
        .iter()
        .map(|(_, c)| (c - LOWEST_EIGENVALUE).abs())
        .fold(0.0, f64::max);
    let hi = constants.iter().map(|c| c.1).fold(f64::NEG_INFINITY, f64::max);
    let lo = constants.iter().map(|c| c.1).fold(f64::INFINITY, f64::min);
    Ok(CommutatorCheck {
        z,
        constants,
        residual,
        spread: hi - lo,
    })
}
