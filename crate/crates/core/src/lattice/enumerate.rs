#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::vec::Vec;
use core::f64::consts::PI;

use super::gram::{cholesky, GramMatrix, LowerTriangular};
use crate::{Error, Result};

/// Default cap on the number of enumerated vectors.
pub const DEFAULT_CAP: usize = 10_000_000;

fn ball_volume(r: usize) -> f64 {
    // π^{r/2} / Γ(r/2 + 1) for r ≤ 6
    match r {
        1 => 2.0,
        2 => PI,
        3 => 4.0 * PI / 3.0,
        4 => PI * PI / 2.0,
        5 => 8.0 * PI * PI / 15.0,
        _ => PI * PI * PI / 6.0,
    }
}

struct Walker<'a, F> {
    q: &'a GramMatrix,
    l: LowerTriangular,
    bound: f64,
    slack: f64,
    v: Vec<i64>,
    visited: usize,
    cap: usize,
    f: F,
}

impl<F: FnMut(&[i64], f64)> Walker<'_, F> {
    fn descend(&mut self, j: usize, remaining: f64) -> Result<()> {
        let r = self.q.dim();
        let mut center = 0.0;
        for i in (j + 1)..r {
            center += self.l.get(i, j) * self.v[i] as f64;
        }
        let ljj = self.l.get(j, j);
        let rad = remaining.max(0.0).sqrt() + self.slack;
        let lo = ((-rad - center) / ljj).ceil() as i64;
        let hi = ((rad - center) / ljj).floor() as i64;
        for vj in lo..=hi {
            self.v[j] = vj;
            let t = ljj * vj as f64 + center;
            let rem = remaining - t * t;
            if rem < -self.slack * (1.0 + self.bound) {
                continue;
            }
            if j == 0 {
                if self.v.iter().all(|&x| x == 0) {
                    continue;
                }
                let qv = self.q.eval(&self.v);
                if qv <= self.bound {
                    self.visited += 1;
                    if self.visited > self.cap {
                        return Err(Error::EnumerationCap { cap: self.cap });
                    }
                    (self.f)(&self.v, qv);
                }
            } else {
                self.descend(j - 1, rem)?;
            }
        }
        self.v[j] = 0;
        Ok(())
    }
}

/// Calls `f(v, Q[v])` for every nonzero v ∈ ℤ^r with Q[v] ≤ bound, in a
/// fixed deterministic order. Returns the number of vectors visited.
pub fn for_each_vector<F: FnMut(&[i64], f64)>(q: &GramMatrix, bound: f64, cap: usize, f: F) -> Result<usize> {
    if !(bound > 0.0) || !bound.is_finite() {
        return Err(Error::domain("enumerate_vectors", "radius must be positive"));
    }
    let r = q.dim();
    let estimate = ball_volume(r) * bound.powf(r as f64 / 2.0) / q.determinant().sqrt();
    if estimate > 1.5 * cap as f64 + 1000.0 {
        return Err(Error::EnumerationCap { cap });
    }
    let l = cholesky(q)?;
    let mut w = Walker {
        q,
        l,
        bound,
        slack: 1e-9 * bound.sqrt().max(1.0),
        v: alloc::vec![0; r],
        visited: 0,
        cap,
        f,
    };
    w.descend(r - 1, bound)?;
    Ok(w.visited)
}

/// All nonzero v with Q[v] ≤ bound, sorted lexicographically.
pub fn enumerate_vectors(q: &GramMatrix, bound: f64) -> Result<Vec<Vec<i64>>> {
    enumerate_vectors_with_cap(q, bound, DEFAULT_CAP)
}

pub fn enumerate_vectors_with_cap(q: &GramMatrix, bound: f64, cap: usize) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    for_each_vector(q, bound, cap, |v, _| out.push(v.to_vec()))?;
    out.sort();
    Ok(out)
}
