#[cfg(not(feature = "std"))]
use num_traits::Float;

use core::f64::consts::{LN_2, PI};

use super::euler_maclaurin_corrections;
use super::gamma::log_gamma;
use crate::{Complex, Error, Result};

const LN_PI: f64 = 1.144_729_885_849_400_2;

/// Number of directly summed terms. Grows with |Im s| so the Bernoulli
/// corrections stay geometrically convergent at large height.
pub(crate) fn em_cutoff(s: Complex) -> usize {
    50 + (s.im.abs() / 2.0).ceil() as usize
}

/// ln sin(πw), stable for large |Im w|.
pub(crate) fn ln_sin_pi(w: Complex) -> Complex {
    if w.im.abs() < 20.0 {
        return (w * PI).sin().ln();
    }
    if w.im < 0.0 {
        return ln_sin_pi(w.conj()).conj();
    }
    let i = Complex::i();
    let e = (i * w * (2.0 * PI)).exp();
    -i * w * PI + (-e + 1.0).ln() + Complex::new(-LN_2, PI / 2.0)
}

fn zeta_em(s: Complex) -> Complex {
    let n = em_cutoff(s);
    let mut sum = Complex::new(0.0, 0.0);
    for k in 1..n {
        sum += (-s * (k as f64).ln()).exp();
    }
    let nf = n as f64;
    let n_pow = (-s * nf.ln()).exp();
    let (corr, _) = euler_maclaurin_corrections(s, n_pow, nf);
    sum + n_pow * nf / (s - 1.0) + n_pow * 0.5 + corr
}

/// Riemann ζ(s) on ℂ∖{1}.
pub fn riemann_zeta(s: Complex) -> Result<Complex> {
    if s == Complex::new(1.0, 0.0) {
        return Err(Error::Pole {
            function: "riemann_zeta",
            at: s,
        });
    }
    if !crate::is_finite(s) {
        return Err(Error::NonFinite("riemann_zeta"));
    }
    if s.re >= -0.5 {
        return Ok(zeta_em(s));
    }
    if s.im == 0.0 && s.re == s.re.round() && (s.re as i64) % 2 == 0 {
        return Ok(Complex::new(0.0, 0.0));
    }
    // ζ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s) ζ(1−s)
    let one_minus = -s + 1.0;
    let log_factor = s * LN_2 + (s - 1.0) * LN_PI + ln_sin_pi(s * 0.5) + log_gamma(one_minus)?;
    let v = log_factor.exp() * zeta_em(one_minus);
    if crate::is_finite(v) {
        Ok(v)
    } else {
        Err(Error::NonFinite("riemann_zeta"))
    }
}

/// Completed zeta ξ(s) = π^{−s/2} Γ(s/2) ζ(s), with poles at 0 and 1.
pub fn xi_completed(s: Complex) -> Result<Complex> {
    if s == Complex::new(0.0, 0.0) || s == Complex::new(1.0, 0.0) {
        return Err(Error::Pole {
            function: "xi_completed",
            at: s,
        });
    }
    if super::gamma::is_gamma_pole(s * 0.5) {
        // trivial zero of ζ cancels the Γ pole; use the functional equation
        return xi_completed(-s + 1.0);
    }
    let lg = log_gamma(s * 0.5)?;
    Ok((lg - s * (0.5 * LN_PI)).exp() * riemann_zeta(s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn special_values() {
        let z0 = riemann_zeta(Complex::new(0.0, 0.0)).unwrap();
        assert!((z0 - Complex::new(-0.5, 0.0)).norm() < 1e-14);
        let z2 = riemann_zeta(Complex::new(2.0, 0.0)).unwrap();
        assert_relative_eq!(z2.re, PI * PI / 6.0, max_relative = 1e-15);
        let zm1 = riemann_zeta(Complex::new(-1.0, 0.0)).unwrap();
        assert_relative_eq!(zm1.re, -1.0 / 12.0, max_relative = 1e-13);
        assert_eq!(riemann_zeta(Complex::new(-4.0, 0.0)).unwrap().norm(), 0.0);
        assert!(riemann_zeta(Complex::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn first_nontrivial_zero() {
        let z = riemann_zeta(Complex::new(0.5, 14.134_725_141_734_694)).unwrap();
        assert!(z.norm() < 1e-13);
    }

    #[test]
    fn high_on_the_line() {
        // mpmath zeta(0.5+250j)
        let z = riemann_zeta(Complex::new(0.5, 250.0)).unwrap();
        let r = Complex::new(0.420_737_392_203_992_5, 0.816_619_497_760_183);
        assert!((z - r).norm() < 1e-11, "{z}");
    }

    #[test]
    fn xi_values() {
        let x2 = xi_completed(Complex::new(2.0, 0.0)).unwrap();
        assert_relative_eq!(x2.re, PI / 6.0, max_relative = 1e-14);
        let s = Complex::new(2.7, 3.1);
        let a = xi_completed(s).unwrap();
        let b = xi_completed(-s + 1.0).unwrap();
        assert!((a - b).norm() < 1e-11 * a.norm().max(1.0));
        // even trivial zero position: ξ(−2) = ξ(3)
        let m2 = xi_completed(Complex::new(-2.0, 0.0)).unwrap();
        let p3 = xi_completed(Complex::new(3.0, 0.0)).unwrap();
        assert!((m2 - p3).norm() < 1e-15);
    }
}
