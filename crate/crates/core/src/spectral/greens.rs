//! Constant term of the automorphic Green's function u_w at height a, from
//! its spectral expansion integrated along Re s = 1/2:
//!
//! c_P u_w(ia) = 1/(−λ_w⟨1,1⟩) + (1/4π)∫ (a^{1−s} + c_{1−s}a^s) E_s(z)/(λ_s − λ_w) dτ,
//!
//! compared with the closed form a^{1−w} E_w(z)/(1 − 2w).
//!
//! E_s on the line is taken from the CM factorization, which keeps full
//! precision at any height; the lattice route is used only for E_w.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::vec::Vec;
use core::f64::consts::PI;

use super::fundamental_domain_volume;
use crate::eisenstein::{eisenstein_sl2, heegner_field, SUPPORTED_DISCRIMINANTS};
use crate::lattice::UpperHalfPoint;
use crate::specfun::quad::GaussLegendre;
use crate::specfun::{dirichlet_l, log_gamma, riemann_zeta};
use crate::{Complex, Error, Result};

const LN_PI: f64 = 1.144_729_885_849_400_2;
const PANEL_WIDTH: f64 = 0.5;

/// Truncation and resolution of the critical-line integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourConfig {
    /// integrate over |τ| ≤ height
    pub height: f64,
    /// Gauss–Legendre nodes per unit length of τ on the base rule
    pub nodes_per_unit: usize,
}

impl Default for ContourConfig {
    fn default() -> Self {
        Self {
            height: 300.0,
            nodes_per_unit: 32,
        }
    }
}

impl ContourConfig {
    fn validate(&self) -> Result<()> {
        if !(self.height >= 10.0) || !self.height.is_finite() {
            return Err(Error::domain("ContourConfig", "height must be at least 10"));
        }
        if self.nodes_per_unit < 4 || self.nodes_per_unit % 2 != 0 {
            return Err(Error::domain("ContourConfig", "nodes_per_unit must be even and ≥ 4"));
        }
        Ok(())
    }

    pub(crate) fn panel_rule(&self) -> GaussLegendre {
        GaussLegendre::new((self.nodes_per_unit as f64 * PANEL_WIDTH) as usize)
    }

    /// Nodes and weights on [0, height] with panels of the given width.
    pub(crate) fn nodes(&self, rule: &GaussLegendre, width: f64) -> Vec<(f64, f64)> {
        let panels = (self.height / width).ceil() as usize;
        let h = self.height / panels as f64;
        (0..panels)
            .flat_map(|k| rule.mapped(h * k as f64, h * (k + 1) as f64).collect::<Vec<_>>())
            .collect()
    }
}

/// E_{1/2+iτ}(τ_D) together with arg ξ(1+2iτ).
pub(crate) struct LineSample {
    pub e: Complex,
    pub xi_phase: f64,
}

pub(crate) fn line_sample(d: i64, tau: f64) -> Result<LineSample> {
    let f = heegner_field(d)?;
    let s = Complex::new(0.5, tau);
    let z2 = riemann_zeta(s * 2.0)?;
    let link = (s * f.point.y().ln()).exp() * (f.units as f64 / 2.0);
    let e = link * riemann_zeta(s)? * dirichlet_l(s, d)? / z2;
    let xi_phase = log_gamma(s)?.im - tau * LN_PI + z2.arg();
    Ok(LineSample { e, xi_phase })
}

#[derive(Debug, Clone, Copy)]
struct Node {
    tau: f64,
    weight: f64,
    e: Complex,
    /// c_{1−s} = e^{2i arg ξ(1+2iτ)} at s = 1/2 + iτ
    c: Complex,
}

/// Samples of E_s(τ_D) and c_{1−s} on Re s = 1/2 for two nested rules.
#[derive(Debug, Clone)]
pub struct GreensContour {
    discriminant: i64,
    point: UpperHalfPoint,
    cfg: ContourConfig,
    coarse: Vec<Node>,
    fine: Vec<Node>,
    /// max |E_s(z)| over τ ∈ [height/2, height]
    envelope: f64,
}

fn sample_nodes(d: i64, nodes: Vec<(f64, f64)>) -> Result<Vec<Node>> {
    nodes
        .into_iter()
        .map(|(tau, weight)| {
            let ls = line_sample(d, tau)?;
            Ok(Node {
                tau,
                weight,
                e: ls.e,
                c: Complex::from_polar(1.0, 2.0 * ls.xi_phase),
            })
        })
        .collect()
}

/// The class-number-one discriminant whose principal CM point is z.
fn discriminant_of(z: UpperHalfPoint) -> Result<i64> {
    for d in SUPPORTED_DISCRIMINANTS {
        let p = heegner_field(d)?.point;
        if (p.to_complex() - z.to_complex()).norm() < 1e-12 {
            return Ok(d);
        }
    }
    Err(Error::domain(
        "greens_constant_term_check",
        "z must be the principal CM point of a class-number-one field",
    ))
}

/// Result of comparing both sides of the constant-term identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreensCheck {
    pub lhs: Complex,
    pub rhs: Complex,
    /// |lhs − rhs| / |rhs|
    pub rel_error: f64,
    pub height: f64,
    /// bound on the discarded |τ| > height part
    pub tail_bound: f64,
    /// |fine − coarse| between the nested rules
    pub quadrature_error: f64,
}

impl GreensCheck {
    /// Quadrature plus tail, the total error reported for the lhs.
    pub fn error_bound(&self) -> f64 {
        self.tail_bound + self.quadrature_error
    }
}

impl GreensContour {
    pub fn new(z: UpperHalfPoint, cfg: ContourConfig) -> Result<Self> {
        cfg.validate()?;
        let d = discriminant_of(z)?;
        let rule = cfg.panel_rule();
        let coarse = sample_nodes(d, cfg.nodes(&rule, PANEL_WIDTH))?;
        let fine = sample_nodes(d, cfg.nodes(&rule, PANEL_WIDTH / 2.0))?;
        let envelope = fine
            .iter()
            .filter(|n| n.tau >= cfg.height / 2.0)
            .map(|n| n.e.norm())
            .fold(0.0, f64::max);
        Ok(Self {
            discriminant: d,
            point: z,
            cfg,
            coarse,
            fine,
            envelope,
        })
    }

    pub fn discriminant(&self) -> i64 {
        self.discriminant
    }

    pub fn config(&self) -> ContourConfig {
        self.cfg
    }

    fn integral(nodes: &[Node], w: Complex, a: f64) -> Complex {
        let la = a.ln();
        let lw = w * (w - 1.0);
        let mut acc = Complex::new(0.0, 0.0);
        for n in nodes {
            let s = Complex::new(0.5, n.tau);
            let lambda_s = Complex::new(-0.25 - n.tau * n.tau, 0.0);
            let den = lambda_s - lw;
            let up = ((-s + 1.0) * la).exp() + n.c * (s * la).exp();
            // τ → −τ conjugates everything except λ_w
            let sb = s.conj();
            let down = ((-sb + 1.0) * la).exp() + n.c.conj() * (sb * la).exp();
            acc += (up * n.e + down * n.e.conj()) / den * n.weight;
        }
        acc / (4.0 * PI)
    }

    /// Both sides of the identity at (w, a).
    pub fn check(&self, w: Complex, a: f64) -> Result<GreensCheck> {
        if !(w.re > 0.5) || (w.im == 0.0 && w.re <= 1.0) {
            return Err(Error::domain(
                "greens_constant_term_check",
                "need Re w > 1/2 and w ∉ (1/2, 1]",
            ));
        }
        if !(a >= self.point.y()) {
            return Err(Error::domain("greens_constant_term_check", "need a ≥ Im z"));
        }
        let lw = w * (w - 1.0);
        if lw.im == 0.0 && lw.re <= 0.0 {
            return Err(Error::domain("greens_constant_term_check", "λ_w lies on the spectrum"));
        }
        let volume = fundamental_domain_volume();
        let constant = (-lw * volume).inv();
        let fine = Self::integral(&self.fine, w, a);
        let coarse = Self::integral(&self.coarse, w, a);
        let lhs = constant + fine;

        let e_w = eisenstein_sl2(self.point, w)?.value;
        let rhs = ((-w + 1.0) * a.ln()).exp() * e_w / (-w * 2.0 + 1.0);

        // |numerator| ≤ 2√a |E_s| and |E_s| grows at most like τ^{1/2}, so
        // the two tails are bounded by (1/4π)·2·∫_T^∞ 2√a M (τ/T)^{1/2}/(τ² − |λ_w+¼|) dτ
        let t = self.cfg.height;
        let shift = (lw + 0.25).norm();
        let tail_bound = 2.0 * a.sqrt() * self.envelope / (PI * t) / (1.0 - shift / (t * t));
        Ok(GreensCheck {
            lhs,
            rhs,
            rel_error: (lhs - rhs).norm() / rhs.norm(),
            height: t,
            tail_bound,
            quadrature_error: (fine - coarse).norm(),
        })
    }
}

/// One-shot constant-term check; builds the contour samples for z.
pub fn greens_constant_term_check(z: UpperHalfPoint, w: Complex, a: f64, cfg: ContourConfig) -> Result<GreensCheck> {
    GreensContour::new(z, cfg)?.check(w, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eisenstein::c_scattering;

    #[test]
    fn line_phase_reproduces_scattering_coefficient() {
        for tau in [0.7, 5.0, 23.0] {
            let ls = line_sample(-4, tau).unwrap();
            let c = Complex::from_polar(1.0, 2.0 * ls.xi_phase);
            let s = Complex::new(0.5, tau);
            assert!((c - c_scattering(-s + 1.0).unwrap()).norm() < 1e-11);
        }
    }

    #[test]
    fn constant_term_identity_at_i() {
        let cfg = ContourConfig::default();
        let g = GreensContour::new(UpperHalfPoint::i(), cfg).unwrap();
        let r = g.check(Complex::new(1.5, 0.0), 3.0).unwrap();
        assert!(r.rel_error < 1e-3, "{r:?}");
        assert!(r.quadrature_error < 1e-8);
        // the a-dependence is exactly a^{1−w}
        let w = Complex::new(1.5, 0.0);
        let scaled: Vec<Complex> = [2.0, 3.0, 5.0]
            .iter()
            .map(|&a| g.check(w, a).unwrap().lhs * ((w.re - 1.0) * a.ln()).exp())
            .collect();
        assert!((scaled[0] - scaled[1]).norm() < 1e-3 * scaled[0].norm());
        assert!((scaled[0] - scaled[2]).norm() < 1e-3 * scaled[0].norm());
    }

    #[test]
    fn requires_cm_point() {
        let z = UpperHalfPoint::new(0.1, 1.3).unwrap();
        assert!(greens_constant_term_check(z, Complex::new(1.5, 0.0), 2.0, ContourConfig::default()).is_err());
        let g = GreensContour::new(
            UpperHalfPoint::i(),
            ContourConfig {
                height: 20.0,
                nodes_per_unit: 8,
            },
        )
        .unwrap();
        assert!(g.check(Complex::new(0.8, 0.0), 2.0).is_err());
        assert!(g.check(Complex::new(1.5, 0.0), 0.5).is_err());
    }
}
