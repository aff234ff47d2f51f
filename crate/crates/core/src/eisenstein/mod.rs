//! Real-analytic Eisenstein series through the Epstein dictionary
//! E^P_s(g) = Z_r(ggᵀ, rs/2)/(2ζ(rs)), with E_s(z) = Z₂(Q̃_z, s)/(2ζ(2s)) on
//! the upper half-plane.

#[cfg(not(feature = "std"))]
use num_traits::Float;

mod heegner;
mod terras;

use core::f64::consts::{LN_2, PI};

pub use heegner::{
    eisenstein_at_heegner, haas_ratio, heegner_field, heegner_zeta, HeegnerField, SUPPORTED_DISCRIMINANTS,
};
pub use terras::{terras_limit, terras_parts, TerrasParts};

use crate::epstein::{epstein_zeta, laurent_expansion, LaurentExpansion, DEFAULT_NODES, DEFAULT_RADIUS};
use crate::lattice::{gram_of_point, GramMatrix, UpperHalfPoint};
use crate::specfun::{log_dedekind_eta, log_gamma, riemann_zeta, xi_completed};
use crate::{Complex, Error, Result, EULER_GAMMA};

/// Where an Eisenstein series was evaluated.
#[derive(Debug, Clone, PartialEq)]
pub enum EvaluationPoint {
    UpperHalf(UpperHalfPoint),
    Gram(GramMatrix),
}

#[derive(Debug, Clone, PartialEq)]
pub struct EisensteinValue {
    pub point: EvaluationPoint,
    pub s: Complex,
    pub value: Complex,
    pub error_bound: f64,
}

/// Truncation tolerance handed to the Epstein evaluator.
const EPSTEIN_TOL: f64 = 1e-13;

fn divide_by_zeta(z: crate::epstein::EvalResult, zeta_arg: Complex) -> Result<(Complex, f64)> {
    let zt = riemann_zeta(zeta_arg)?;
    if zt.norm() < 1e-8 {
        return Err(Error::domain("eisenstein", "ζ(2s) vanishes to within 1e-8"));
    }
    let d = zt * 2.0;
    Ok((z.value / d, z.error_bound / d.norm()))
}

/// E_s(z) for SL₂(ℤ).
pub fn eisenstein_sl2(z: UpperHalfPoint, s: Complex) -> Result<EisensteinValue> {
    let point = EvaluationPoint::UpperHalf(z);
    let exact = |value: f64| {
        Ok(EisensteinValue {
            point: point.clone(),
            s,
            value: Complex::new(value, 0.0),
            error_bound: 0.0,
        })
    };
    // ζ(2s) has its pole at s = 1/2 while Z₂ is finite; E_0 ≡ 1
    if s == Complex::new(0.5, 0.0) {
        return exact(0.0);
    }
    if s == Complex::new(0.0, 0.0) {
        return exact(1.0);
    }
    let zq = epstein_zeta(&gram_of_point(z), s, EPSTEIN_TOL)?;
    let (value, error_bound) = divide_by_zeta(zq, s * 2.0)?;
    Ok(EisensteinValue {
        point,
        s,
        value,
        error_bound,
    })
}

/// Degenerate Eisenstein series for the (r−1, 1) parabolic at a det-1 Gram
/// matrix g gᵀ.
pub fn eisenstein_slr(g_gram: &GramMatrix, s: Complex) -> Result<EisensteinValue> {
    if (g_gram.determinant() - 1.0).abs() > 1e-10 {
        return Err(Error::domain("eisenstein_slr", "Gram matrix must have determinant 1"));
    }
    let r = g_gram.dim() as f64;
    let point = EvaluationPoint::Gram(g_gram.clone());
    if s * r == Complex::new(1.0, 0.0) {
        return Ok(EisensteinValue {
            point,
            s,
            value: Complex::new(0.0, 0.0),
            error_bound: 0.0,
        });
    }
    let zq = epstein_zeta(g_gram, s * (r / 2.0), EPSTEIN_TOL)?;
    let (value, error_bound) = divide_by_zeta(zq, s * r)?;
    Ok(EisensteinValue {
        point,
        s,
        value,
        error_bound,
    })
}

/// Laurent expansion of E^P_s(g) in s about s = 1.
pub fn eisenstein_slr_laurent(g_gram: &GramMatrix, max_order: i32) -> Result<LaurentExpansion> {
    let f = |s: Complex| eisenstein_slr(g_gram, s).map(|e| e.value);
    laurent_expansion(
        f,
        Complex::new(1.0, 0.0),
        max_order,
        DEFAULT_RADIUS,
        DEFAULT_NODES,
        1e-12,
    )
}

/// Res_{s=1} E^P_s = π^{r/2}/(r Γ(r/2) ζ(r)), the residue in the Eisenstein
/// variable s. In the Epstein variable u = rs/2 the residue of
/// Z_r(·, u)/(2ζ(r)) is π^{r/2}/(2Γ(r/2)ζ(r)); the two differ by du/ds = r/2.
pub fn eisenstein_slr_residue_closed_form(r: usize) -> Result<f64> {
    let h = r as f64 / 2.0;
    let zr = riemann_zeta(Complex::new(r as f64, 0.0))?.re;
    let lg = log_gamma(Complex::new(h, 0.0))?.re;
    Ok((h * PI.ln() - lg).exp() / (r as f64 * zr))
}

/// Scattering coefficient c_s = ξ(2s−1)/ξ(2s).
pub fn c_scattering(s: Complex) -> Result<Complex> {
    for bad in [0.0, 0.5, 1.0] {
        if s == Complex::new(bad, 0.0) {
            return Err(Error::Pole {
                function: "c_scattering",
                at: s,
            });
        }
    }
    Ok(xi_completed(s * 2.0 - 1.0)? / xi_completed(s * 2.0)?)
}

/// c_s = √π Γ(s − ½) ζ(2s − 1) / (Γ(s) ζ(2s)): the same coefficient written
/// as it arises from the Fourier constant term, evaluated without ξ.
pub fn c_scattering_gamma_form(s: Complex) -> Result<Complex> {
    let lg = log_gamma(s - 0.5)? - log_gamma(s)?;
    Ok(lg.exp() * PI.sqrt() * riemann_zeta(s * 2.0 - 1.0)? / riemann_zeta(s * 2.0)?)
}

/// log(√y |η(z)|²)
fn log_sqrt_y_eta2(z: UpperHalfPoint) -> f64 {
    0.5 * z.y().ln() + 2.0 * log_dedekind_eta(z).re
}

/// E₁*(z) = (6/π)(γ − log 2 − log(√y |η(z)|²)).
pub fn e1_star(z: UpperHalfPoint) -> f64 {
    6.0 / PI * (EULER_GAMMA - LN_2 - log_sqrt_y_eta2(z))
}

/// Outcome of comparing the contour Laurent data of Z₂(Q̃_z, s) at s = 1
/// with Kronecker's first limit formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KroneckerCheck {
    /// extracted a_{−1}; the formula predicts π
    pub residue: Complex,
    /// extracted order-0 coefficient
    pub a0: Complex,
    /// 2π(γ − log 2 − log(√y|η|²))
    pub closed_form: f64,
    /// |a0 − closed_form|
    pub residual: f64,
}

/// Order-0 constant of Z₂(Q̃_z, s) at s = 1 predicted by the limit formula.
pub fn kronecker_constant(z: UpperHalfPoint) -> f64 {
    2.0 * PI * (EULER_GAMMA - LN_2 - log_sqrt_y_eta2(z))
}

pub fn kronecker_limit_check(z: UpperHalfPoint) -> Result<KroneckerCheck> {
    let q = gram_of_point(z);
    let l = crate::epstein::epstein_laurent(&q, Complex::new(1.0, 0.0), 0)?;
    let closed_form = kronecker_constant(z);
    Ok(KroneckerCheck {
        residue: l.residue(),
        a0: l.constant_term(),
        closed_form,
        residual: (l.constant_term() - closed_form).norm(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Sl2;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn e1_star_at_i() {
        // γ − log 2 − 2 log η(i), times 6/π
        let v = e1_star(UpperHalfPoint::i());
        assert!((v - 0.785_740_234_723_268_8).abs() < 1e-14);
    }

    #[test]
    fn e1_star_large_y() {
        let z = UpperHalfPoint::new(0.0, 20.0).unwrap();
        let approx = 6.0 / PI * (PI * 20.0 / 6.0 - 0.5 * 20f64.ln() + EULER_GAMMA - LN_2);
        assert!((e1_star(z) - approx).abs() < 1e-13);
    }

    #[test]
    fn modular_invariance() {
        let z = UpperHalfPoint::new(0.3, 0.9).unwrap();
        let s = c(2.2, 0.0);
        let e = eisenstein_sl2(z, s).unwrap().value;
        for g in [Sl2::T, Sl2::S] {
            let w = eisenstein_sl2(g.apply(z), s).unwrap().value;
            assert!((e - w).norm() < 1e-11);
        }
    }

    #[test]
    fn scattering_unitarity() {
        let v = c_scattering(c(0.5, 7.3)).unwrap();
        assert!((v.norm() - 1.0).abs() < 1e-12);
        let s = c(0.8, 0.2);
        let p = c_scattering(s).unwrap() * c_scattering(-s + 1.0).unwrap();
        assert!((p - 1.0).norm() < 1e-12);
        let a = c_scattering(c(1.5, 0.0)).unwrap();
        let b = c_scattering_gamma_form(c(1.5, 0.0)).unwrap();
        assert!((a - b).norm() < 1e-13);
        assert!(c_scattering(c(0.5, 0.0)).is_err());
    }

    #[test]
    fn slr_r2_matches_sl2() {
        let z = UpperHalfPoint::new(0.2, 1.4).unwrap();
        let s = c(1.7, 0.5);
        let a = eisenstein_sl2(z, s).unwrap().value;
        let b = eisenstein_slr(&gram_of_point(z), s).unwrap().value;
        assert!((a - b).norm() < 1e-12);
    }

    #[test]
    fn kronecker_limit_at_sample_points() {
        for z in [
            UpperHalfPoint::i(),
            UpperHalfPoint::rho(),
            UpperHalfPoint::new(0.3, 1.7).unwrap(),
        ] {
            let k = kronecker_limit_check(z).unwrap();
            assert!(k.residual < 1e-10, "{k:?}");
            assert!((k.residue - PI).norm() < 1e-10);
            // a0/(2π) = (π/6)E₁*
            assert!((k.a0.re / (2.0 * PI) - PI / 6.0 * e1_star(z)).abs() < 1e-10);
        }
        let k = kronecker_limit_check(UpperHalfPoint::i()).unwrap();
        assert!((k.a0.re - 2.584_981_759_579_253).abs() < 1e-10);
    }

    #[test]
    fn e1_star_invariance() {
        let z = UpperHalfPoint::new(0.4, 1.2).unwrap();
        assert!((e1_star(Sl2::S.apply(z)) - e1_star(z)).abs() < 1e-12);
    }

    #[test]
    fn matches_direct_series_at_two_i() {
        // Σ' y^s/|mz+n|^{2s} over a box; the omitted tail is positive and O(N⁻²)
        let y = 2.0;
        let n = 400i64;
        let mut sum = 0.0;
        for m in -n..=n {
            for k in -n..=n {
                if m == 0 && k == 0 {
                    continue;
                }
                let q = (m * m) as f64 * y * y + (k * k) as f64;
                sum += (y / q).powi(2);
            }
        }
        let zeta4 = PI.powi(4) / 90.0;
        let direct = sum / (2.0 * zeta4);
        let e = eisenstein_sl2(UpperHalfPoint::new(0.0, y).unwrap(), c(2.0, 0.0))
            .unwrap()
            .value;
        assert!((e.re - direct).abs() < 1e-5 * direct && e.re > direct);
    }

    #[test]
    fn constant_term_at_height_five() {
        let s = c(1.3, 0.0);
        let y = 5.0;
        let mut avg = Complex::new(0.0, 0.0);
        for k in 0..64 {
            let z = UpperHalfPoint::new(k as f64 / 64.0 - 0.5, y).unwrap();
            avg += eisenstein_sl2(z, s).unwrap().value / 64.0;
        }
        let ct = (s * y.ln()).exp() + c_scattering(s).unwrap() * ((-s + 1.0) * y.ln()).exp();
        assert!((avg - ct).norm() < 1e-6);
    }

    #[test]
    fn functional_equation_transport() {
        let z = UpperHalfPoint::new(0.1, 1.3).unwrap();
        for s in [c(0.8, 2.0), c(1.4, -0.7)] {
            let a = eisenstein_sl2(z, s).unwrap().value;
            let b = c_scattering(s).unwrap() * eisenstein_sl2(z, -s + 1.0).unwrap().value;
            assert!((a - b).norm() < 1e-8 * a.norm());
        }
    }

    #[test]
    fn slr_residue_at_one() {
        let r3 = GramMatrix::identity(3);
        let l = eisenstein_slr_laurent(&r3, 0).unwrap();
        let closed = eisenstein_slr_residue_closed_form(3).unwrap();
        assert!((l.residue().re - closed).abs() < 1e-9 * closed);
        // r = 2: Res E_s = 3/π
        assert!((eisenstein_slr_residue_closed_form(2).unwrap() - 3.0 / PI).abs() < 1e-14);
    }
}
