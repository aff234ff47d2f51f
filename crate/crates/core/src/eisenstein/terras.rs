//! Limit of Z_r(Q, s) − residue/(s − r/2) at s = r/2 from the block
//! decomposition v = (u, w), u ∈ ℤ^ℓ, w ∈ ℤ^{r−ℓ}.
//!
//! With D the lower-right block, A = Q₁₁ − Q₁₂D⁻¹Q₂₁ and c_u = D⁻¹Q₂₁u,
//! Poisson summation over w gives
//!
//! a₀ = Z_{r−ℓ}(D, r/2) + G₀·C_A + π^{r/2}(ψ(ℓ/2) − ψ(r/2))/(Γ(r/2)√det Q) + H,
//!
//! where C_A is the constant Laurent term of Z_ℓ(A, ·) at ℓ/2,
//! G₀ = π^{(r−ℓ)/2}Γ(ℓ/2)/(Γ(r/2)√det D) and H is the double Bessel sum
//! (2π^{r/2}/(Γ(r/2)√det D)) Σ_{u≠0,m≠0} e^{2πi m·c_u}(D⁻¹[m]/A[u])^{ℓ/4} K_{ℓ/2}(2π√(A[u]D⁻¹[m])).

#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::vec::Vec;
use core::f64::consts::PI;

use super::kronecker_constant;
use crate::epstein::epstein_zeta;
use crate::lattice::{enumerate_vectors, GramMatrix, UpperHalfPoint};
use crate::specfun::{bessel_k, digamma, log_gamma, riemann_zeta};
use crate::{Complex, Error, Result, EULER_GAMMA};

/// Pairs with A[u]·D⁻¹[m] beyond this contribute below e^{−46}.
const BESSEL_PRODUCT_LIMIT: f64 = 53.6;

/// The four pieces of the block formula and their sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TerrasParts {
    /// Z_{r−ℓ}(D, r/2)
    pub epstein_block: f64,
    /// G₀·C_A
    pub schur_block: f64,
    /// H, whose imaginary part cancels in ± pairs
    pub bessel_sum: Complex,
    pub digamma_term: f64,
    /// Laurent constant term a₀ of Z_r(Q, s) at s = r/2
    pub total: f64,
}

fn gamma_real(x: f64) -> f64 {
    log_gamma(Complex::new(x, 0.0)).expect("positive argument").re.exp()
}

/// Constant Laurent term of Z_ℓ(A, s) at s = ℓ/2.
fn schur_constant(a: &GramMatrix) -> Result<f64> {
    match a.dim() {
        1 => {
            let v = a.get(0, 0);
            Ok(v.powf(-0.5) * (2.0 * EULER_GAMMA - v.ln()))
        }
        2 => {
            let c = a.determinant().sqrt();
            let (p, t) = (a.get(0, 1) / c, a.get(1, 1) / c);
            let z = UpperHalfPoint::new(p / t, 1.0 / t)?;
            Ok((kronecker_constant(z) - PI * c.ln()) / c)
        }
        _ => terras_limit(a, 1),
    }
}

/// Z_k(D, s) for real s > k/2.
fn block_epstein(d: &GramMatrix, s: f64) -> Result<f64> {
    if d.dim() == 1 {
        let z = riemann_zeta(Complex::new(2.0 * s, 0.0))?.re;
        return Ok(2.0 * d.get(0, 0).powf(-s) * z);
    }
    Ok(epstein_zeta(d, Complex::new(s, 0.0), 1e-14)?.value.re)
}

pub fn terras_parts(q: &GramMatrix, ell: usize) -> Result<TerrasParts> {
    let r = q.dim();
    if ell == 0 || ell >= r {
        return Err(Error::domain("terras_limit", "need 1 ≤ ell < r"));
    }
    let k = r - ell;
    let idx_w: Vec<usize> = (ell..r).collect();
    let d = q.sub_block(&idx_w)?;
    let dinv = d.inverse();
    // M = D⁻¹Q₂₁ (k×ℓ), so c_u = M u
    let mut m_mat = alloc::vec![0.0; k * ell];
    for a in 0..k {
        for j in 0..ell {
            m_mat[a * ell + j] = (0..k).map(|b| dinv.get(a, b) * q.get(ell + b, j)).sum();
        }
    }
    let mut a_entries = alloc::vec![0.0; ell * ell];
    for i in 0..ell {
        for j in 0..ell {
            let corr: f64 = (0..k).map(|b| q.get(i, ell + b) * m_mat[b * ell + j]).sum();
            a_entries[i * ell + j] = q.get(i, j) - corr;
        }
    }
    for i in 0..ell {
        for j in (i + 1)..ell {
            let m = 0.5 * (a_entries[i * ell + j] + a_entries[j * ell + i]);
            a_entries[i * ell + j] = m;
            a_entries[j * ell + i] = m;
        }
    }
    let a = GramMatrix::new(ell, a_entries)?;

    let (rf, lf, kf) = (r as f64, ell as f64, k as f64);
    let det_d = d.determinant();
    let det_q = q.determinant();
    let gamma_half_r = gamma_real(rf / 2.0);

    let epstein_block = block_epstein(&d, rf / 2.0)?;
    let g0 = PI.powf(kf / 2.0) * gamma_real(lf / 2.0) / (gamma_half_r * det_d.sqrt());
    let schur_block = g0 * schur_constant(&a)?;
    let digamma_term = PI.powf(rf / 2.0) * (digamma(lf / 2.0)? - digamma(rf / 2.0)?) / (gamma_half_r * det_q.sqrt());

    // shortest nonzero values bound the enumeration radii
    let shortest = |g: &GramMatrix| -> Result<f64> {
        let mut rad = 1.0;
        loop {
            let vs = enumerate_vectors(g, rad * g.get(0, 0).max(1e-300))?;
            if let Some(m) = vs.iter().map(|v| g.eval(v)).min_by(f64::total_cmp) {
                return Ok(m);
            }
            rad *= 2.0;
        }
    };
    let a_min = shortest(&a)?;
    let d_min = shortest(&dinv)?;
    let us = enumerate_vectors(&a, BESSEL_PRODUCT_LIMIT / d_min)?;
    let ms: Vec<(Vec<i64>, f64)> = enumerate_vectors(&dinv, BESSEL_PRODUCT_LIMIT / a_min)?
        .into_iter()
        .map(|m| {
            let v = dinv.eval(&m);
            (m, v)
        })
        .collect();
    let nu = Complex::new(lf / 2.0, 0.0);
    let mut h = Complex::new(0.0, 0.0);
    for u in &us {
        let au = a.eval(u);
        let cu: Vec<f64> = (0..k)
            .map(|row| (0..ell).map(|j| m_mat[row * ell + j] * u[j] as f64).sum())
            .collect();
        for (m, dm) in &ms {
            let prod = au * dm;
            if prod > BESSEL_PRODUCT_LIMIT {
                continue;
            }
            let phase: f64 = m.iter().zip(&cu).map(|(mi, ci)| *mi as f64 * ci).sum();
            let kv = bessel_k(nu, 2.0 * PI * prod.sqrt())?;
            h += Complex::from_polar(1.0, 2.0 * PI * phase) * (dm / au).powf(lf / 4.0) * kv;
        }
    }
    let bessel_sum = h * (2.0 * PI.powf(rf / 2.0) / (gamma_half_r * det_d.sqrt()));

    Ok(TerrasParts {
        epstein_block,
        schur_block,
        bessel_sum,
        digamma_term,
        total: epstein_block + schur_block + bessel_sum.re + digamma_term,
    })
}

/// Laurent constant term of Z_r(Q, s) at s = r/2, assembled from the
/// (ℓ, r−ℓ) block decomposition. Terras' Z* is half of this value.
pub fn terras_limit(q: &GramMatrix, ell: usize) -> Result<f64> {
    terras_parts(q, ell).map(|p| p.total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::epstein::epstein_laurent;

    #[test]
    fn two_dimensional_split_reproduces_kronecker() {
        // ℓ = 1, r = 2 on Q̃_z must equal the limit formula constant
        let z = UpperHalfPoint::new(0.23, 1.31).unwrap();
        let q = crate::lattice::gram_of_point(z);
        let t = terras_limit(&q, 1).unwrap();
        assert!((t - kronecker_constant(z)).abs() < 1e-11, "{t}");
    }

    #[test]
    fn bessel_sum_is_real() {
        let q = GramMatrix::new(3, alloc::vec![1.1, 0.3, 0.2, 0.3, 0.9, -0.25, 0.2, -0.25, 1.3]).unwrap();
        let p = terras_parts(&q, 1).unwrap();
        assert!(p.bessel_sum.im.abs() < 1e-12);
        let l = epstein_laurent(&q, Complex::new(1.5, 0.0), 0).unwrap();
        assert!((p.total - l.constant_term().re).abs() < 1e-8 * p.total.abs().max(1.0));
    }

    #[test]
    fn identity_forms_match_laurent_oracle() {
        for (r, ell) in [(3, 1), (3, 2), (4, 2), (4, 3)] {
            let q = GramMatrix::identity(r);
            let t = terras_limit(&q, ell).unwrap();
            let l = epstein_laurent(&q, Complex::new(r as f64 / 2.0, 0.0), 0).unwrap();
            let a0 = l.constant_term().re;
            assert!((t - a0).abs() < 1e-10 * a0.abs(), "r={r} ell={ell}: {t} vs {a0}");
        }
    }

    #[test]
    fn split_choice_is_irrelevant() {
        let q = GramMatrix::new(
            4,
            alloc::vec![1.2, 0.1, -0.2, 0.0, 0.1, 0.9, 0.15, 0.05, -0.2, 0.15, 1.1, 0.3, 0.0, 0.05, 0.3, 1.4,],
        )
        .unwrap();
        let a = terras_limit(&q, 1).unwrap();
        for ell in [2, 3] {
            assert!((terras_limit(&q, ell).unwrap() - a).abs() < 1e-9);
        }
    }

    #[test]
    fn rejects_bad_split() {
        let q = GramMatrix::identity(3);
        assert!(terras_limit(&q, 0).is_err());
        assert!(terras_limit(&q, 3).is_err());
    }
}
