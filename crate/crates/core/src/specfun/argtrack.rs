use alloc::vec::Vec;
use core::f64::consts::PI;

use super::gamma::log_gamma;
use super::zeta::riemann_zeta;
use crate::{Complex, Error, Result};

const LN_PI: f64 = 1.144_729_885_849_400_2;
/// First grid point; ξ(1+2it) ≈ residue/(2it) there, so arg ≈ −π/2.
pub const T_START: f64 = 1e-4;
/// Largest jump of arg ζ(1+2it) accepted between neighbouring grid points.
const MAX_JUMP: f64 = 1.0;
const MAX_DEPTH: u32 = 30;

fn wrap(a: f64) -> f64 {
    let mut x = a % (2.0 * PI);
    if x > PI {
        x -= 2.0 * PI;
    } else if x <= -PI {
        x += 2.0 * PI;
    }
    x
}

/// Smooth part of ψ: Im log Γ(1/2 + it) − t log π.
fn smooth_part(t: f64) -> Result<f64> {
    Ok(log_gamma(Complex::new(0.5, t))?.im - t * LN_PI)
}

fn zeta_arg(t: f64) -> Result<f64> {
    Ok(riemann_zeta(Complex::new(1.0, 2.0 * t))?.arg())
}

/// Continuous branch ψ(t) = arg ξ(1+2it) sampled on an adaptive grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ArgTrack {
    t_grid: Vec<f64>,
    psi_values: Vec<f64>,
    /// continuous arg ζ(1+2it) on the grid
    zeta_arg: Vec<f64>,
    max_step: f64,
}

/// Tracks ψ(t) from t ≈ 0 (anchored at −π/2) to `t_max`.
pub fn psi_arg_xi(t_max: f64, step: f64) -> Result<ArgTrack> {
    if !(t_max > T_START) || !(step > 0.0) || !t_max.is_finite() {
        return Err(Error::domain("psi_arg_xi", "need t_max > 1e-4 and step > 0"));
    }
    let mut track = ArgTrack {
        t_grid: Vec::new(),
        psi_values: Vec::new(),
        zeta_arg: Vec::new(),
        max_step: step,
    };
    let a0 = zeta_arg(T_START)?;
    track.push(T_START, a0)?;
    let mut t = T_START;
    while t < t_max {
        let next = (t + step).min(t_max);
        track.advance(next, 0)?;
        t = next;
    }
    Ok(track)
}

impl ArgTrack {
    fn push(&mut self, t: f64, a: f64) -> Result<()> {
        self.t_grid.push(t);
        self.zeta_arg.push(a);
        self.psi_values.push(smooth_part(t)? + a);
        Ok(())
    }

    fn advance(&mut self, t_next: f64, depth: u32) -> Result<()> {
        let t_prev = *self.t_grid.last().expect("track is seeded");
        let a_prev = *self.zeta_arg.last().expect("track is seeded");
        let d = wrap(zeta_arg(t_next)? - a_prev);
        let smooth_jump = (smooth_part(t_next)? - smooth_part(t_prev)?).abs();
        if d.abs() <= MAX_JUMP && smooth_jump + d.abs() < PI / 2.0 {
            return self.push(t_next, a_prev + d);
        }
        if depth >= MAX_DEPTH {
            return Err(Error::Unwrap { t: t_next });
        }
        let mid = 0.5 * (t_prev + t_next);
        self.advance(mid, depth + 1)?;
        self.advance(t_next, depth + 1)
    }

    pub fn t_grid(&self) -> &[f64] {
        &self.t_grid
    }

    pub fn psi_values(&self) -> &[f64] {
        &self.psi_values
    }

    pub fn max_step(&self) -> f64 {
        self.max_step
    }

    pub fn t_min(&self) -> f64 {
        self.t_grid[0]
    }

    pub fn t_max(&self) -> f64 {
        *self.t_grid.last().expect("track is non-empty")
    }

    /// ψ(t) for any t inside the tracked range, continued from the nearest
    /// grid point at or below t.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if !(t >= self.t_min() && t <= self.t_max()) {
            return Err(Error::domain("ArgTrack::eval", "t outside the tracked range"));
        }
        let k = match self.t_grid.binary_search_by(|x| x.total_cmp(&t)) {
            Ok(k) => return Ok(self.psi_values[k]),
            Err(k) => k - 1,
        };
        let a = self.zeta_arg[k] + wrap(zeta_arg(t)? - self.zeta_arg[k]);
        Ok(smooth_part(t)? + a)
    }

    /// ψ'(t) by a central difference with step `h`.
    pub fn derivative(&self, t: f64, h: f64) -> Result<f64> {
        let lo = (t - h).max(self.t_min());
        let hi = (t + h).min(self.t_max());
        Ok((self.eval(hi)? - self.eval(lo)?) / (hi - lo))
    }

    /// Largest |ψ_{k+1} − ψ_k| over the grid.
    pub fn max_jump(&self) -> f64 {
        self.psi_values
            .windows(2)
            .map(|w| (w[1] - w[0]).abs())
            .fold(0.0, f64::max)
    }
}
