use core::f64::consts::PI;

use crate::lattice::{reduce_with, ReductionStep, UpperHalfPoint};
use crate::Complex;

/// log η(w) from the q-product; intended for reduced w where |q| < 0.005.
fn log_eta_product(w: Complex) -> Complex {
    let i = Complex::i();
    let q = (i * w * (2.0 * PI)).exp();
    let mut acc = i * w * (PI / 12.0);
    let mut qn = q;
    for _ in 0..200 {
        if qn.norm() < 1e-18 {
            break;
        }
        acc += (-qn + 1.0).ln();
        qn *= q;
    }
    acc
}

fn e2_series(w: Complex) -> Complex {
    let q = (Complex::i() * w * (2.0 * PI)).exp();
    let mut sum = Complex::new(0.0, 0.0);
    let mut qn = q;
    let mut n = 1.0;
    for _ in 0..200 {
        let t = qn * n / (-qn + 1.0);
        sum += t;
        if t.norm() < 1e-18 * sum.norm().max(1e-300) || qn.norm() < 1e-300 {
            break;
        }
        qn *= q;
        n += 1.0;
    }
    -sum * 24.0 + 1.0
}

/// A logarithm of η(z): exp of the result is η(z) with the exact
/// multiplier of every reduction move applied.
pub fn log_dedekind_eta(z: UpperHalfPoint) -> Complex {
    let i = Complex::i();
    let mut acc = Complex::new(0.0, 0.0);
    let (w, _) = reduce_with(z, |step| match step {
        // η(w) = e^{πin/12} η(w − n)
        ReductionStep::Translate(n) => acc += i * (PI * n as f64 / 12.0),
        // η(w) = η(−1/w)/√(−iw)
        ReductionStep::Invert(w) => acc -= (-i * w.to_complex()).ln() * 0.5,
    });
    acc + log_eta_product(w.to_complex())
}

/// Dedekind η(z) = q^{1/24} ∏(1 − qⁿ).
pub fn dedekind_eta(z: UpperHalfPoint) -> Complex {
    log_dedekind_eta(z).exp()
}

/// Quasimodular E₂(z) = 1 − 24 Σ σ₁(n) qⁿ, transported from the reduced
/// point by E₂(γz) = (cz+d)² E₂(z) + 6c(cz+d)/(πi).
pub fn eisenstein_e2(z: UpperHalfPoint) -> Complex {
    let (w, g) = reduce_with(z, |_| {});
    let j = g.automorphy(z);
    let shift = j * (6.0 * g.c as f64) / (Complex::i() * PI);
    (e2_series(w.to_complex()) - shift) / (j * j)
}

/// η'(z)/η(z) = (πi/12) E₂(z).
pub fn eta_log_derivative(z: UpperHalfPoint) -> Complex {
    eisenstein_e2(z) * Complex::new(0.0, PI / 12.0)
}
