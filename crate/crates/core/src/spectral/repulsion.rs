//! The J(w) function of a CM point and the eigenvalue condition
//! cos(θ)·J(w) = sin(θ)·|E_w(τ_D)|²/(2τ), θ = τ log a + ψ(τ), for the
//! pseudo-Laplacian perturbed at τ_D.
//!
//! J(w) = 1/(−λ_w⟨1,1⟩) + (1/4π)∫ (F(σ) − F(τ))/(λ_s − λ_w) dσ with
//! F(σ) = |E_{1/2+iσ}(τ_D)|² and w = 1/2 + iτ. The integrand is even in σ and
//! its singularity at σ = τ is removable.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::vec::Vec;
use core::f64::consts::PI;

use super::greens::{line_sample, ContourConfig};
use super::{bisect, fundamental_domain_volume, TRACK_STEP};
use crate::specfun::{dirichlet_l, log_gamma, psi_arg_xi, riemann_zeta, ArgTrack};
use crate::{Complex, Error, Result};

const LN_PI: f64 = 1.144_729_885_849_400_2;

/// Hardy's Z(t) = e^{iθ(t)}ζ(1/2+it), real for real t.
pub fn hardy_z(t: f64) -> Result<f64> {
    let theta = log_gamma(Complex::new(0.25, t / 2.0))?.im - t / 2.0 * LN_PI;
    Ok((Complex::from_polar(1.0, theta) * riemann_zeta(Complex::new(0.5, t))?).re)
}

/// The analogue of Z(t) for L(s, χ_D): e^{iθ_D(t)}L(1/2+it, χ_D) with
/// θ_D = Im log Γ((1/2 + a + it)/2) + (t/2) log(|D|/π), a = 1 for odd χ_D.
pub fn hardy_l(t: f64, d: i64) -> Result<f64> {
    let parity = if d < 0 { 1.0 } else { 0.0 };
    let q = d.unsigned_abs() as f64;
    let theta = log_gamma(Complex::new((0.5 + parity) / 2.0, t / 2.0))?.im + t / 2.0 * (q.ln() - LN_PI);
    Ok((Complex::from_polar(1.0, theta) * dirichlet_l(Complex::new(0.5, t), d)?).re)
}

/// e^{iψ(τ)}E_{1/2+iτ}(τ_D), real because E_w = c_w·conj(E_w) on the line
/// and c_w = e^{−2iψ}. Its zeros are the on-line zeros of ζ_K.
pub fn heegner_line_real(tau: f64, d: i64) -> Result<f64> {
    let ls = line_sample(d, tau)?;
    Ok((Complex::from_polar(1.0, ls.xi_phase) * ls.e).re)
}

/// Samples of F(σ) = |E_{1/2+iσ}(τ_D)|² on [0, height].
#[derive(Debug, Clone)]
pub struct JContour {
    discriminant: i64,
    cfg: ContourConfig,
    nodes: Vec<(f64, f64, f64)>,
    /// mean and max of F over σ ∈ [height/2, height]
    tail_mean: f64,
    tail_max: f64,
}

fn cubic_through(xs: [f64; 4], ys: [f64; 4], x: f64) -> f64 {
    let mut v = 0.0;
    for i in 0..4 {
        let mut l = 1.0;
        for j in 0..4 {
            if i != j {
                l *= (x - xs[j]) / (xs[i] - xs[j]);
            }
        }
        v += ys[i] * l;
    }
    v
}

impl JContour {
    pub fn new(d: i64, cfg: ContourConfig) -> Result<Self> {
        if !(cfg.height >= 10.0) || cfg.nodes_per_unit < 4 {
            return Err(Error::domain("JContour", "height ≥ 10 and nodes_per_unit ≥ 4 required"));
        }
        let rule = cfg.panel_rule();
        let nodes: Vec<(f64, f64, f64)> = cfg
            .nodes(&rule, 0.5)
            .into_iter()
            .map(|(s, w)| Ok((s, w, line_sample(d, s)?.e.norm_sqr())))
            .collect::<Result<_>>()?;
        let (mut num, mut den, mut mx) = (0.0, 0.0, 0.0f64);
        for &(s, w, f) in &nodes {
            if s >= cfg.height / 2.0 {
                num += w * f;
                den += w;
                mx = mx.max(f);
            }
        }
        Ok(Self {
            discriminant: d,
            cfg,
            nodes,
            tail_mean: num / den,
            tail_max: mx,
        })
    }

    pub fn discriminant(&self) -> i64 {
        self.discriminant
    }

    fn tail_integral(&self, tau: f64) -> f64 {
        let t = self.cfg.height;
        ((t + tau) / (t - tau)).ln() / (2.0 * tau)
    }

    /// Bound on the discarded σ > height part of J at τ.
    pub fn tail_bound(&self, tau: f64) -> f64 {
        self.tail_max * self.tail_integral(tau) / (2.0 * PI)
    }

    /// The regularized integrand g(σ) = (F(σ) − F(τ))/(τ² − σ²) at every
    /// node, with the two nodes straddling τ replaced by the cubic through
    /// their outer neighbours.
    pub fn regularized_integrand(&self, tau: f64) -> Result<Vec<(f64, f64)>> {
        if !(tau > 0.5) || tau > self.cfg.height - 1.0 {
            return Err(Error::domain("j_function", "need 1/2 < τ < height − 1"));
        }
        let f_tau = line_sample(self.discriminant, tau)?.e.norm_sqr();
        let mut g: Vec<(f64, f64)> = self
            .nodes
            .iter()
            .map(|&(s, _, f)| (s, (f - f_tau) / (tau * tau - s * s)))
            .collect();
        let i = self.nodes.partition_point(|n| n.0 <= tau);
        if i < 3 || i + 2 >= g.len() {
            return Err(Error::domain("j_function", "τ too close to the contour ends"));
        }
        let xs = [g[i - 3].0, g[i - 2].0, g[i + 1].0, g[i + 2].0];
        let ys = [g[i - 3].1, g[i - 2].1, g[i + 1].1, g[i + 2].1];
        for k in [i - 1, i] {
            g[k].1 = cubic_through(xs, ys, g[k].0);
        }
        Ok(g)
    }

    /// J(1/2 + iτ).
    pub fn eval(&self, tau: f64) -> Result<f64> {
        let g = self.regularized_integrand(tau)?;
        let body: f64 = g.iter().zip(&self.nodes).map(|(gk, n)| gk.1 * n.1).sum();
        let f_tau = line_sample(self.discriminant, tau)?.e.norm_sqr();
        let tail = (f_tau - self.tail_mean) * self.tail_integral(tau);
        let constant = 1.0 / ((0.25 + tau * tau) * fundamental_domain_volume());
        // even integrand: (1/4π)∫_ℝ = (1/2π)∫_0^∞
        Ok(constant + (body + tail) / (2.0 * PI))
    }

    /// Sign changes of J on [lo, hi], scanned with `step` and bisected to `tol`.
    pub fn sign_changes(&self, lo: f64, hi: f64, step: f64, tol: f64) -> Result<Vec<f64>> {
        scan_roots(|t| self.eval(t), lo, hi, step, tol)
    }
}

/// J(w) for w on the critical line.
pub fn j_function(w: Complex, d: i64, cfg: ContourConfig) -> Result<f64> {
    if w.re != 0.5 {
        return Err(Error::domain("j_function", "w must lie on Re w = 1/2"));
    }
    JContour::new(d, cfg)?.eval(w.im)
}

/// Roots of f on [lo, hi] from sign changes on a uniform grid.
fn scan_roots<F>(mut f: F, lo: f64, hi: f64, step: f64, tol: f64) -> Result<Vec<f64>>
where
    F: FnMut(f64) -> Result<f64>,
{
    let n = ((hi - lo) / step).ceil().max(1.0) as usize;
    let h = (hi - lo) / n as f64;
    let mut roots = Vec::new();
    let mut t0 = lo;
    let mut f0 = f(t0)?;
    for k in 1..=n {
        let t1 = lo + h * k as f64;
        let f1 = f(t1)?;
        if (f0 > 0.0) != (f1 > 0.0) {
            roots.push(bisect(&mut f, t0, t1, tol)?);
        }
        t0 = t1;
        f0 = f1;
    }
    Ok(roots)
}

/// One τ-grid row of the eigenvalue condition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepulsionRow {
    pub tau: f64,
    /// θ = τ log a + ψ(τ)
    pub theta: f64,
    pub j: f64,
    /// cos θ · J
    pub lhs: f64,
    /// sin θ · |E_w(τ_D)|²/(2τ)
    pub rhs: f64,
}

/// Where an on-line zero of ζ_K sits relative to the eigenparameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroComparison {
    pub zero: f64,
    /// nearest solution of the eigenvalue condition
    pub nearest_solution: f64,
    pub distance: f64,
    /// (1/2)·π/log t at the zero
    pub corridor: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RepulsionReport {
    pub discriminant: i64,
    pub a: f64,
    pub rows: Vec<RepulsionRow>,
    /// zeros of cos θ inside the range
    pub cosine_zeros: Vec<f64>,
    /// solutions of lhs = rhs
    pub solutions: Vec<f64>,
    /// solutions between each pair of consecutive cosine zeros
    pub solutions_per_interval: Vec<usize>,
    /// sign changes of J
    pub j_zeros: Vec<f64>,
    /// on-line zeros of ζ_K from e^{iψ}E_w(τ_D)
    pub zk_zeros: Vec<f64>,
    /// zeros of Hardy's Z and of the L-function analogue, merged
    pub factor_zeros: Vec<f64>,
    pub comparisons: Vec<ZeroComparison>,
}

impl RepulsionReport {
    /// Largest distance between matched ζ_K and factor-wise zeros, or ∞ when
    /// the lists differ in length.
    pub fn zero_agreement(&self) -> f64 {
        if self.zk_zeros.len() != self.factor_zeros.len() {
            return f64::INFINITY;
        }
        self.zk_zeros
            .iter()
            .zip(&self.factor_zeros)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

struct Condition<'a> {
    track: &'a ArgTrack,
    jc: &'a JContour,
    a: f64,
}

impl Condition<'_> {
    fn row(&self, tau: f64) -> Result<RepulsionRow> {
        let theta = tau * self.a.ln() + self.track.eval(tau)?;
        let j = self.jc.eval(tau)?;
        let e2 = line_sample(self.jc.discriminant, tau)?.e.norm_sqr();
        Ok(RepulsionRow {
            tau,
            theta,
            j,
            lhs: theta.cos() * j,
            rhs: theta.sin() * e2 / (2.0 * tau),
        })
    }
}

/// Tabulates the eigenvalue condition on [lo, hi] with grid `step` and locates
/// its solutions, the cosine zeros, J's sign changes and the ζ_K zeros.
pub fn repulsion_experiment(
    d: i64,
    a: f64,
    tau_range: (f64, f64),
    step: f64,
    cfg: ContourConfig,
) -> Result<RepulsionReport> {
    let (lo, hi) = tau_range;
    if !(a > 1.0) || !(lo > 0.5) || !(hi > lo) || !(step > 0.0) {
        return Err(Error::domain(
            "repulsion_experiment",
            "need a > 1, 1/2 < lo < hi, step > 0",
        ));
    }
    let track = psi_arg_xi(hi + 1.0, TRACK_STEP)?;
    let jc = JContour::new(d, cfg)?;
    let cond = Condition {
        track: &track,
        jc: &jc,
        a,
    };
    let n = ((hi - lo) / step).ceil() as usize;
    let h = (hi - lo) / n as f64;
    let rows: Vec<RepulsionRow> = (0..=n).map(|k| cond.row(lo + h * k as f64)).collect::<Result<_>>()?;

    let between = |f: &dyn Fn(&RepulsionRow) -> f64, g: &mut dyn FnMut(f64) -> Result<f64>, tol: f64| {
        let mut out = Vec::new();
        for p in rows.windows(2) {
            if (f(&p[0]) > 0.0) != (f(&p[1]) > 0.0) {
                out.push(bisect(&mut *g, p[0].tau, p[1].tau, tol)?);
            }
        }
        Ok::<_, Error>(out)
    };
    let cosine_zeros = between(&|r| r.theta.cos(), &mut |t| Ok(cond.row(t)?.theta.cos()), 1e-10)?;
    let solutions = between(&|r| r.lhs - r.rhs, &mut |t| cond.row(t).map(|r| r.lhs - r.rhs), 1e-10)?;
    let j_zeros = between(&|r| r.j, &mut |t| jc.eval(t), 1e-8)?;
    let solutions_per_interval = cosine_zeros
        .windows(2)
        .map(|c| solutions.iter().filter(|&&s| s > c[0] && s < c[1]).count())
        .collect();

    let zk_zeros = scan_roots(|t| heegner_line_real(t, d), lo, hi, step, 1e-12)?;
    let mut factor_zeros = scan_roots(hardy_z, lo, hi, step, 1e-12)?;
    factor_zeros.extend(scan_roots(|t| hardy_l(t, d), lo, hi, step, 1e-12)?);
    factor_zeros.sort_by(f64::total_cmp);

    let comparisons = zk_zeros
        .iter()
        .filter_map(|&z| {
            let nearest = solutions
                .iter()
                .copied()
                .min_by(|x, y| (x - z).abs().total_cmp(&(y - z).abs()))?;
            Some(ZeroComparison {
                zero: z,
                nearest_solution: nearest,
                distance: (nearest - z).abs(),
                corridor: 0.5 * PI / z.ln(),
            })
        })
        .collect();

    Ok(RepulsionReport {
        discriminant: d,
        a,
        rows,
        cosine_zeros,
        solutions,
        solutions_per_interval,
        j_zeros,
        zk_zeros,
        factor_zeros,
        comparisons,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hardy_functions_vanish_at_known_zeros() {
        assert!(hardy_z(14.134_725_141_734_695).unwrap().abs() < 1e-9);
        // first zero of L(s, χ_{−4})
        let z = scan_roots(|t| hardy_l(t, -4), 5.5, 6.5, 0.05, 1e-12).unwrap();
        assert_eq!(z.len(), 1);
        assert!((z[0] - 6.020_948_904_697_6).abs() < 1e-8, "{z:?}");
    }

    #[test]
    fn cm_line_function_is_real() {
        for tau in [3.3, 11.7] {
            let ls = line_sample(-4, tau).unwrap();
            let v = Complex::from_polar(1.0, ls.xi_phase) * ls.e;
            assert!(v.im.abs() < 1e-11 * v.norm().max(1e-3));
        }
    }

    #[test]
    fn window_fill_tracks_the_limit() {
        let jc = JContour::new(
            -4,
            ContourConfig {
                height: 60.0,
                nodes_per_unit: 32,
            },
        )
        .unwrap();
        let tau = 8.0;
        let g = jc.regularized_integrand(tau).unwrap();
        let i = g.partition_point(|p| p.0 <= tau);
        // the limit g(τ) = −F'(τ)/(2τ) by a central difference of F
        let h = 1e-4;
        let f = |s: f64| line_sample(-4, s).unwrap().e.norm_sqr();
        let limit = -(f(tau + h) - f(tau - h)) / (2.0 * h) / (2.0 * tau);
        let interp = 0.5 * (g[i - 1].1 + g[i].1);
        assert!(
            (interp - limit).abs() < 0.05 * limit.abs().max(1e-3),
            "{interp} {limit}"
        );
    }
}
