//! Complex special functions: Γ and its incomplete form, ζ, ξ, Dirichlet
//! L-functions of quadratic characters, K-Bessel, Dedekind η and the
//! continuous argument of ξ(1+2it).

mod argtrack;
mod bessel;
mod dirichlet;
mod eta;
mod gamma;
mod incgamma;
pub mod quad;
mod zeta;

pub use argtrack::{psi_arg_xi, ArgTrack};
pub use bessel::bessel_k;
pub use dirichlet::{dirichlet_l, is_fundamental_discriminant, kronecker_symbol};
pub use eta::{dedekind_eta, eisenstein_e2, eta_log_derivative, log_dedekind_eta};
pub use gamma::{digamma, gamma, log_gamma, recip_gamma};
pub use incgamma::upper_incomplete_gamma;
pub use zeta::{riemann_zeta, xi_completed};

/// B_{2k}/(2k)! for k = 1..=20, the Euler–Maclaurin weights.
pub(crate) const BERNOULLI_OVER_FACTORIAL: [f64; 20] = [
    8.333_333_333_333_333e-2,
    -1.388_888_888_888_889e-3,
    3.306_878_306_878_307e-5,
    -8.267_195_767_195_767e-7,
    2.087_675_698_786_81e-8,
    -5.284_190_138_687_493e-10,
    1.338_253_653_068_467_9e-11,
    -3.389_680_296_322_583e-13,
    8.586_062_056_277_845e-15,
    -2.174_868_698_558_062e-16,
    5.509_002_828_360_23e-18,
    -1.395_446_468_581_252_3e-19,
    3.534_707_039_629_467e-21,
    -8.953_517_427_037_547e-23,
    2.267_952_452_337_683e-24,
    -5.744_790_668_872_202e-26,
    1.455_172_475_614_865e-27,
    -3.685_994_940_665_310_2e-29,
    9.336_734_257_095_045e-31,
    -2.365_022_415_700_63e-32,
];

/// Sum of `terms` Euler–Maclaurin corrections for Σ_{n≥N} n^{-s}:
/// Σ_k B_{2k}/(2k)! · s(s+1)···(s+2k−2) · N^{-s-2k+1}, plus the bound on the
/// first omitted term.
pub(crate) fn euler_maclaurin_corrections(
    s: crate::Complex,
    n_pow_minus_s: crate::Complex,
    n: f64,
) -> (crate::Complex, f64) {
    let mut rising = s;
    let mut npow = n_pow_minus_s / n;
    let inv_n2 = 1.0 / (n * n);
    let mut acc = crate::Complex::new(0.0, 0.0);
    let mut last = 0.0;
    for (k, b) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        let term = rising * npow * *b;
        acc += term;
        last = term.norm();
        let j = 2.0 * k as f64 + 1.0;
        rising = rising * (s + j) * (s + j + 1.0);
        npow *= inv_n2;
    }
    (acc, last)
}

/// (e^w − 1)/w without cancellation near w = 0.
pub(crate) fn expm1_over(w: crate::Complex) -> crate::Complex {
    if w.norm() < 0.25 {
        let mut term = crate::Complex::new(1.0, 0.0);
        let mut sum = term;
        for k in 2..20 {
            term = term * w / k as f64;
            sum += term;
        }
        sum
    } else {
        (w.exp() - 1.0) / w
    }
}
