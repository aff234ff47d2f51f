#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::{Complex, Error, Result};

/// Coefficients a_{−1}, a_0, …, a_k of a Laurent expansion about `center`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentExpansion {
    pub center: Complex,
    /// `coefficients[0]` is the order −1 coefficient.
    pub coefficients: Vec<Complex>,
    pub radius: f64,
    /// Contour nodes used by the accepted extraction.
    pub nodes: usize,
    /// Largest coefficient change at the last node doubling.
    pub error_estimate: f64,
}

impl LaurentExpansion {
    pub fn residue(&self) -> Complex {
        self.coefficients[0]
    }

    /// Order-0 coefficient.
    pub fn constant_term(&self) -> Complex {
        self.coefficients[1]
    }

    /// Coefficient of (s − center)^k, k ≥ −1.
    pub fn coefficient(&self, k: i32) -> Complex {
        self.coefficients[(k + 1) as usize]
    }

    pub fn max_order(&self) -> i32 {
        self.coefficients.len() as i32 - 2
    }

    /// Σ a_k (s − c)^k.
    pub fn evaluate(&self, s: Complex) -> Complex {
        let d = s - self.center;
        let mut acc = self.coefficients[0] / d;
        let mut p = Complex::new(1.0, 0.0);
        for a in &self.coefficients[1..] {
            acc += a * p;
            p *= d;
        }
        acc
    }
}

/// Default starting node count on the contour.
pub const DEFAULT_NODES: usize = 64;
/// Default contour radius.
pub const DEFAULT_RADIUS: f64 = 0.1;
const MAX_NODES: usize = 4096;

fn coefficients(samples: &[Complex], points: &[Complex], max_order: i32) -> Vec<Complex> {
    let m = samples.len() as f64;
    (-1..=max_order)
        .map(|k| samples.iter().zip(points).map(|(f, d)| f * d.powi(-k)).sum::<Complex>() / m)
        .collect()
}

/// Laurent coefficients of a function with at most a simple pole at
/// `center`, by the trapezoid rule on |s − center| = radius. The node count
/// doubles from `nodes` until every coefficient, scaled by radius^k, moves by
/// less than `tol` times the largest sample.
pub fn laurent_expansion<F>(
    mut f: F,
    center: Complex,
    max_order: i32,
    radius: f64,
    nodes: usize,
    tol: f64,
) -> Result<LaurentExpansion>
where
    F: FnMut(Complex) -> Result<Complex>,
{
    if max_order < -1 || !(radius > 0.0) || nodes < 4 {
        return Err(Error::domain("laurent_expansion", "invalid contour parameters"));
    }
    let offset = |j: usize, m: usize| Complex::from_polar(radius, 2.0 * PI * j as f64 / m as f64);
    let mut m = nodes;
    let mut points: Vec<Complex> = (0..m).map(|j| offset(j, m)).collect();
    let mut samples = points.iter().map(|d| f(center + d)).collect::<Result<Vec<_>>>()?;
    let mut current = coefficients(&samples, &points, max_order);
    while m < MAX_NODES {
        // interleave the new midpoints so the finer rule reuses every sample
        let mut p2 = Vec::with_capacity(2 * m);
        let mut s2 = Vec::with_capacity(2 * m);
        for j in 0..m {
            let mid = offset(2 * j + 1, 2 * m);
            p2.push(points[j]);
            s2.push(samples[j]);
            p2.push(mid);
            s2.push(f(center + mid)?);
        }
        let refined = coefficients(&s2, &p2, max_order);
        let scale = s2.iter().fold(0.0f64, |a, v| a.max(v.norm()));
        let change = current
            .iter()
            .zip(&refined)
            .enumerate()
            .map(|(i, (a, b))| (a - b).norm() * radius.powi(i as i32 - 1))
            .fold(0.0f64, f64::max);
        m *= 2;
        points = p2;
        samples = s2;
        if change <= tol * scale.max(1e-300) {
            return Ok(LaurentExpansion {
                center,
                coefficients: refined,
                radius,
                nodes: m,
                error_estimate: change,
            });
        }
        current = refined;
    }
    Err(Error::NonConvergence {
        what: "Laurent coefficient extraction",
    })
}
