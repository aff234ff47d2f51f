#[cfg(not(feature = "std"))]
use num_traits::Float;

use core::f64::consts::PI;

use crate::{Complex, Error, Result};

/// Modified Bessel function K_ν(z) for complex order and real z > 0.
///
/// Uses K_ν(z) = ∫₀^∞ e^{−z cosh v} cosh(νv) dv (the integral ½∫₀^∞
/// exp(−z(u+1/u)/2) u^{ν−1} du after u = e^v). The integrand is even and
/// analytic in a strip, so the trapezoid rule converges geometrically.
pub fn bessel_k(nu: Complex, z: f64) -> Result<Complex> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::domain("bessel_k", "z must be positive and finite"));
    }
    let h = (PI * PI / (40.0 + PI * nu.im.abs())).min(0.05);
    let f = |v: f64| (nu * v).cosh() * (-z * (v.cosh() - 1.0)).exp();
    let mut sum = f(0.0) * 0.5;
    let mut k = 1usize;
    loop {
        let v = h * k as f64;
        let term = f(v);
        sum += term;
        // past the saddle the integrand decays super-exponentially
        if z * (v.cosh() - 1.0) - nu.re.abs() * v > 40.0 && term.norm() <= 1e-18 * sum.norm() {
            break;
        }
        k += 1;
        if k > 200_000 {
            return Err(Error::NonConvergence { what: "bessel_k" });
        }
    }
    let v = sum * h * (-z).exp();
    if crate::is_finite(v) {
        Ok(v)
    } else {
        Err(Error::NonFinite("bessel_k"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        let k = bessel_k(Complex::new(0.5, 0.0), 3.0).unwrap();
        let closed = (PI / 6.0).sqrt() * (-3f64).exp();
        assert!((k.re - closed).abs() < 1e-15 * closed.max(1.0) + 1e-17);
        assert!((k.re / 0.036_025_985_131_764_59 - 1.0).abs() < 1e-13);
        let k0 = bessel_k(Complex::new(0.0, 0.0), 10.0).unwrap();
        assert!((k0.re / 1.778_006_231_616_765e-5 - 1.0).abs() < 1e-13);
        let k1 = bessel_k(Complex::new(1.0, 0.0), 1.0).unwrap();
        assert!((k1.re / 0.601_907_230_197_234_6 - 1.0).abs() < 1e-13);
    }

    #[test]
    fn order_symmetry() {
        let a = bessel_k(Complex::new(0.3, 0.0), 2.0).unwrap();
        let b = bessel_k(Complex::new(-0.3, 0.0), 2.0).unwrap();
        assert!((a - b).norm() < 1e-15);
    }

    #[test]
    fn small_and_large_arguments() {
        assert!(bessel_k(Complex::new(0.0, 0.0), 0.0).is_err());
        // K_0(0.01) = 4.721244730161...
        let k = bessel_k(Complex::new(0.0, 0.0), 0.01).unwrap();
        assert!((k.re - 4.721_244_730_161_095).abs() < 1e-12);
        let k = bessel_k(Complex::new(1.5, 0.0), 800.0).unwrap();
        assert!(k.re >= 0.0 && k.re < 1e-300);
    }
}
