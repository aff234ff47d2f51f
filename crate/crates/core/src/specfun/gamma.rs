#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::{Complex, Error, Result};

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_7;

/// B_{2k} / (2k(2k−1)) for the Stirling series.
const STIRLING: [f64; 12] = [
    8.333_333_333_333_333e-2,
    -2.777_777_777_777_778e-3,
    7.936_507_936_507_937e-4,
    -5.952_380_952_380_952e-4,
    8.417_508_417_508_417e-4,
    -1.917_526_917_526_917_5e-3,
    6.410_256_410_256_41e-3,
    -2.955_065_359_477_124e-2,
    1.796_443_723_688_305_8e-1,
    -1.392_432_216_905_901,
    1.340_286_404_416_839_2e1,
    -1.568_482_846_260_020_2e2,
];

/// Radius beyond which the Stirling series is used directly.
const STIRLING_RADIUS: f64 = 15.0;

pub(crate) fn is_gamma_pole(s: Complex) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round()
}

fn stirling(z: Complex) -> Complex {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut series = Complex::new(0.0, 0.0);
    let mut p = inv;
    for c in STIRLING {
        series += p * c;
        p *= inv2;
    }
    (z - 0.5) * z.ln() - z + LN_SQRT_2PI + series
}

/// log Γ(s) on the standard branch: analytic on ℂ minus the non-positive real
/// axis and real for real positive s.
pub fn log_gamma(s: Complex) -> Result<Complex> {
    if is_gamma_pole(s) {
        return Err(Error::Pole {
            function: "log_gamma",
            at: s,
        });
    }
    if !crate::is_finite(s) {
        return Err(Error::NonFinite("log_gamma"));
    }
    let target = if s.im.abs() >= STIRLING_RADIUS {
        0.0
    } else {
        STIRLING_RADIUS
    };
    let shift = (target - s.re).ceil().max(0.0) as usize;
    let mut acc = Complex::new(0.0, 0.0);
    let mut z = s;
    for _ in 0..shift {
        acc += z.ln();
        z += 1.0;
    }
    Ok(stirling(z) - acc)
}

/// Γ(s).
pub fn gamma(s: Complex) -> Result<Complex> {
    log_gamma(s).map(|l| l.exp())
}

/// 1/Γ(s), which is entire: zero at the poles of Γ.
pub fn recip_gamma(s: Complex) -> Complex {
    match log_gamma(s) {
        Ok(l) => (-l).exp(),
        Err(_) => Complex::new(0.0, 0.0),
    }
}

/// Digamma ψ(x) = Γ'(x)/Γ(x) for real x > 0.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("digamma", "argument must be positive"));
    }
    let mut acc = 0.0;
    let mut y = x;
    while y < 12.0 {
        acc -= 1.0 / y;
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    // B_{2k}/(2k) for k = 1..7
    const C: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 120.0,
        1.0 / 252.0,
        -1.0 / 240.0,
        1.0 / 132.0,
        -691.0 / 32760.0,
        1.0 / 12.0,
    ];
    let mut series = 0.0;
    let mut p = inv2;
    for c in C {
        series += c * p;
        p *= inv2;
    }
    Ok(acc + y.ln() - 0.5 / y - series)
}
