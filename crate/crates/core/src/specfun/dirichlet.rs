#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::format;

use super::zeta::em_cutoff;
use super::{euler_maclaurin_corrections, expm1_over};
use crate::{Complex, Error, Result};

fn jacobi(mut a: i64, mut n: i64) -> i32 {
    debug_assert!(n > 0 && n % 2 == 1);
    a = a.rem_euclid(n);
    let mut result = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        core::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Kronecker symbol (d/n) for n ≥ 0.
pub fn kronecker_symbol(d: i64, n: u64) -> i32 {
    if n == 0 {
        return i32::from(d.abs() == 1);
    }
    let v = n.trailing_zeros();
    let odd = (n >> v) as i64;
    let mut result = 1;
    if v > 0 {
        if d % 2 == 0 {
            return 0;
        }
        let r = d.rem_euclid(8);
        if v % 2 == 1 && (r == 3 || r == 5) {
            result = -1;
        }
    }
    result * jacobi(d, odd)
}

fn squarefree(mut m: i64) -> bool {
    m = m.abs();
    let mut p = 2;
    while p * p <= m {
        if m % (p * p) == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// Fundamental discriminant of a quadratic field (excluding 1).
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => squarefree(d),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && squarefree(m)
        }
        _ => false,
    }
}

fn l_with_cutoff(s: Complex, d: i64, j_cut: usize) -> Complex {
    let k = d.unsigned_abs();
    let chi: alloc::vec::Vec<f64> = (0..=k).map(|a| kronecker_symbol(d, a) as f64).collect();
    let n_direct = j_cut as u64 * k;
    let mut direct = Complex::new(0.0, 0.0);
    for n in 1..=n_direct {
        let c = chi[(n % k) as usize];
        if c != 0.0 {
            direct += (-s * (n as f64).ln()).exp() * c;
        }
    }
    // Tail: n = jk + a with j ≥ J, 1 ≤ a ≤ k, summed per residue class.
    let jf = j_cut as f64;
    let kf = k as f64;
    let j_pow_1ms = ((-s + 1.0) * jf.ln()).exp();
    let mut tail = Complex::new(0.0, 0.0);
    for a in 1..=k {
        let c = chi[a as usize];
        if c == 0.0 {
            continue;
        }
        let q = a as f64 / kf;
        let x = jf + q;
        let lr = (q / jf).ln_1p();
        // (X^{1−s} − J^{1−s})/(s−1); the J^{1−s} parts cancel since Σχ = 0
        let pole = -j_pow_1ms * lr * expm1_over((-s + 1.0) * lr);
        let x_pow = (-s * x.ln()).exp();
        let (corr, _) = euler_maclaurin_corrections(s, x_pow, x);
        tail += (pole + x_pow * 0.5 + corr) * c;
    }
    direct + (-s * kf.ln()).exp() * tail
}

/// L(s, χ_D) for the quadratic character attached to a fundamental
/// discriminant D, continued to all of ℂ.
pub fn dirichlet_l(s: Complex, d: i64) -> Result<Complex> {
    if !is_fundamental_discriminant(d) {
        return Err(Error::domain(
            "dirichlet_l",
            format!("{d} is not a fundamental discriminant"),
        ));
    }
    if !crate::is_finite(s) {
        return Err(Error::NonFinite("dirichlet_l"));
    }
    if s.re < -0.5 {
        return Err(Error::domain(
            "dirichlet_l",
            "Re s < -1/2 is outside the Euler-Maclaurin range",
        ));
    }
    Ok(l_with_cutoff(s, d, em_cutoff(s)))
}
