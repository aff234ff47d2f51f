#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::format;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Symmetric positive-definite r×r matrix, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    r: usize,
    entries: Vec<f64>,
}

/// Lower-triangular Cholesky factor L with L Lᵀ = Q.
#[derive(Debug, Clone, PartialEq)]
pub struct LowerTriangular {
    r: usize,
    entries: Vec<f64>,
}

impl LowerTriangular {
    pub fn dim(&self) -> usize {
        self.r
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.r + j]
    }

    /// L Lᵀ as a plain row-major array.
    pub fn reconstruct(&self) -> Vec<f64> {
        let r = self.r;
        let mut out = alloc::vec![0.0; r * r];
        for i in 0..r {
            for j in 0..r {
                out[i * r + j] = (0..=i.min(j)).map(|k| self.get(i, k) * self.get(j, k)).sum();
            }
        }
        out
    }
}

impl GramMatrix {
    /// Largest supported dimension.
    pub const MAX_DIM: usize = 6;

    /// Validates shape, symmetry (to 1e−14 relative) and positive
    /// definiteness. Dimension 1 is accepted for internal block forms.
    pub fn new(r: usize, entries: Vec<f64>) -> Result<Self> {
        if r == 0 || r > Self::MAX_DIM {
            return Err(Error::domain("GramMatrix", format!("dimension {r} not in 1..=6")));
        }
        if entries.len() != r * r {
            return Err(Error::domain(
                "GramMatrix",
                format!("expected {} entries, got {}", r * r, entries.len()),
            ));
        }
        if entries.iter().any(|x| !x.is_finite()) {
            return Err(Error::domain("GramMatrix", "non-finite entry"));
        }
        let scale = entries.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        let mut sym = entries;
        for i in 0..r {
            for j in (i + 1)..r {
                let (a, b) = (sym[i * r + j], sym[j * r + i]);
                if (a - b).abs() > 1e-14 * scale.max(1.0) {
                    return Err(Error::domain("GramMatrix", "matrix is not symmetric"));
                }
                let m = 0.5 * (a + b);
                sym[i * r + j] = m;
                sym[j * r + i] = m;
            }
        }
        let q = Self { r, entries: sym };
        cholesky(&q)?;
        Ok(q)
    }

    pub fn identity(r: usize) -> Self {
        let mut e = alloc::vec![0.0; r * r];
        for i in 0..r {
            e[i * r + i] = 1.0;
        }
        Self { r, entries: e }
    }

    pub fn dim(&self) -> usize {
        self.r
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.r + j]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// Q[v] = v Q vᵀ for an integer vector.
    pub fn eval(&self, v: &[i64]) -> f64 {
        let r = self.r;
        let mut acc = 0.0;
        for i in 0..r {
            if v[i] == 0 {
                continue;
            }
            let row: f64 = (0..r).map(|j| self.entries[i * r + j] * v[j] as f64).sum();
            acc += v[i] as f64 * row;
        }
        acc
    }

    /// Q[v] for a real vector.
    pub fn eval_real(&self, v: &[f64]) -> f64 {
        let r = self.r;
        (0..r)
            .map(|i| v[i] * (0..r).map(|j| self.entries[i * r + j] * v[j]).sum::<f64>())
            .sum()
    }

    pub fn determinant(&self) -> f64 {
        let l = cholesky(self).expect("validated at construction");
        (0..self.r).map(|i| l.get(i, i) * l.get(i, i)).product()
    }

    /// Q⁻¹ through the Cholesky factor.
    pub fn inverse(&self) -> GramMatrix {
        let r = self.r;
        let l = cholesky(self).expect("validated at construction");
        // columns of L⁻¹ by forward substitution, then Q⁻¹ = L⁻ᵀ L⁻¹
        let mut linv = alloc::vec![0.0; r * r];
        for col in 0..r {
            for i in col..r {
                let mut s = if i == col { 1.0 } else { 0.0 };
                for k in col..i {
                    s -= l.get(i, k) * linv[k * r + col];
                }
                linv[i * r + col] = s / l.get(i, i);
            }
        }
        let mut out = alloc::vec![0.0; r * r];
        for i in 0..r {
            for j in 0..=i {
                let v: f64 = (i.max(j)..r).map(|k| linv[k * r + i] * linv[k * r + j]).sum();
                out[i * r + j] = v;
                out[j * r + i] = v;
            }
        }
        GramMatrix { r, entries: out }
    }

    pub fn scaled(&self, c: f64) -> GramMatrix {
        assert!(c > 0.0, "scale must be positive");
        GramMatrix {
            r: self.r,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    /// Uᵀ Q U for an integer matrix U (row-major), so that
    /// (UᵀQU)[v] = Q[U v] with v a column vector.
    pub fn transform(&self, u: &[i64]) -> GramMatrix {
        let r = self.r;
        assert_eq!(u.len(), r * r, "transform matrix has the wrong shape");
        let mut out = alloc::vec![0.0; r * r];
        for i in 0..r {
            for j in 0..r {
                let mut s = 0.0;
                for k in 0..r {
                    for l in 0..r {
                        s += u[k * r + i] as f64 * self.get(k, l) * u[l * r + j] as f64;
                    }
                }
                out[i * r + j] = s;
            }
        }
        for i in 0..r {
            for j in (i + 1)..r {
                let m = 0.5 * (out[i * r + j] + out[j * r + i]);
                out[i * r + j] = m;
                out[j * r + i] = m;
            }
        }
        GramMatrix { r, entries: out }
    }

    /// Principal sub-block on the given index list.
    pub(crate) fn sub_block(&self, idx: &[usize]) -> Result<GramMatrix> {
        let n = idx.len();
        let mut e = Vec::with_capacity(n * n);
        for &i in idx {
            for &j in idx {
                e.push(self.get(i, j));
            }
        }
        GramMatrix::new(n, e)
    }
}

/// Cholesky factorization; fails on a non-positive pivot.
pub fn cholesky(q: &GramMatrix) -> Result<LowerTriangular> {
    let r = q.r;
    let mut l = alloc::vec![0.0; r * r];
    for j in 0..r {
        let mut d = q.get(j, j);
        for k in 0..j {
            d -= l[j * r + k] * l[j * r + k];
        }
        if !(d > 0.0) {
            return Err(Error::NotPositiveDefinite);
        }
        let djj = d.sqrt();
        l[j * r + j] = djj;
        for i in (j + 1)..r {
            let mut s = q.get(i, j);
            for k in 0..j {
                s -= l[i * r + k] * l[j * r + k];
            }
            l[i * r + j] = s / djj;
        }
    }
    Ok(LowerTriangular { r, entries: l })
}

/// Q/(det Q)^{1/r} together with the scale (det Q)^{1/r}.
pub fn normalize_det(q: &GramMatrix) -> (GramMatrix, f64) {
    let det = q.determinant();
    let c = det.powf(1.0 / q.r as f64);
    if (c - 1.0).abs() < 1e-15 {
        return (q.clone(), 1.0);
    }
    (q.scaled(1.0 / c), c)
}
