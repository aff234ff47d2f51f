mod common;

use std::f64::consts::PI;

use common::{c, point, sl2_word};
use proptest::prelude::*;
use zetalab_core::lattice::Sl2;
use zetalab_core::specfun::{
    bessel_k, gamma, log_dedekind_eta, log_gamma, psi_arg_xi, riemann_zeta, upper_incomplete_gamma, xi_completed,
};
use zetalab_core::Complex;

fn lower_gamma_series(s: Complex, x: f64) -> Complex {
    let mut term = s.inv();
    let mut sum = term;
    for n in 1..2000 {
        term *= x / (s + n as f64);
        sum += term;
        if term.norm() < 1e-17 * sum.norm() {
            break;
        }
    }
    sum * (s * x.ln() - x).exp()
}

fn away_from_poles(s: Complex) -> bool {
    !(s.re < 0.5 && (s.re - s.re.round()).abs() < 0.1 && s.im.abs() < 0.1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn gamma_recurrence(re in -20.0f64..20.0, im in -20.0f64..20.0) {
        let s = c(re, im);
        prop_assume!(s.norm() <= 20.0 && away_from_poles(s));
        let g1 = log_gamma(s + 1.0).unwrap().exp();
        let g0 = log_gamma(s).unwrap().exp();
        prop_assert!((g1 - s * g0).norm() / g1.norm() < 1e-11);
    }

    #[test]
    fn xi_reflection_and_conjugation(re in -3.0f64..4.0, im in -30.0f64..30.0) {
        let s = c(re, im);
        prop_assume!(s.norm() > 0.1 && (s - 1.0).norm() > 0.1);
        let v = xi_completed(s).unwrap();
        let scale = v.norm().max(1e-300);
        prop_assert!((v - xi_completed(-s + 1.0).unwrap()).norm() / scale < 1e-10);
        prop_assert!((xi_completed(s.conj()).unwrap() - v.conj()).norm() / scale < 1e-10);
    }

    #[test]
    fn incomplete_gamma_splices_with_the_lower_series(
        re in 0.05f64..5.0, im in -3.0f64..3.0, x in 0.05f64..10.0,
    ) {
        let s = c(re, im);
        let total = gamma(s).unwrap();
        let spliced = upper_incomplete_gamma(s, x).unwrap() + lower_gamma_series(s, x);
        prop_assert!((spliced - total).norm() / total.norm() < 1e-10);
    }

    #[test]
    fn bessel_k_is_even_in_the_order(re in -3.0f64..3.0, im in -3.0f64..3.0, z in 0.2f64..20.0) {
        let a = bessel_k(c(re, im), z).unwrap();
        let b = bessel_k(c(-re, -im), z).unwrap();
        prop_assert!((a - b).norm() <= 1e-12 * a.norm().max(1e-300));
    }

    #[test]
    fn bessel_k_half_order_closed_form(x in 0.05f64..40.0) {
        let exact = (PI / (2.0 * x)).sqrt() * (-x).exp();
        let v = bessel_k(c(0.5, 0.0), x).unwrap();
        prop_assert!((v.re - exact).abs() < 1e-12 * exact);
        prop_assert!(v.im.abs() < 1e-12 * exact);
    }

    #[test]
    fn eta_modulus_is_weight_half(z in point(), w in sl2_word()) {
        let g = Sl2::new(w.0, w.1, w.2, w.3).unwrap();
        let lhs = log_dedekind_eta(g.apply(z)).re;
        let rhs = 0.5 * g.automorphy(z).norm().ln() + log_dedekind_eta(z).re;
        prop_assert!((lhs - rhs).abs() < 1e-9);
    }

    #[test]
    fn zeta_conjugation(re in -0.4f64..3.0, im in 0.5f64..200.0) {
        let s = c(re, im);
        let a = riemann_zeta(s).unwrap();
        let b = riemann_zeta(s.conj()).unwrap();
        prop_assert!((a.conj() - b).norm() <= 1e-12 * a.norm().max(1.0));
    }
}

#[test]
fn psi_track_is_continuous_and_anchored() {
    let track = psi_arg_xi(80.0, 0.05).unwrap();
    assert!((track.psi_values()[0] + PI / 2.0).abs() < 1e-3);
    for p in track.psi_values().windows(2) {
        assert!((p[1] - p[0]).abs() < PI / 2.0);
    }
    // ψ(t) − t log(t/(πe)) stays bounded once t is moderate
    for t in [30.0, 50.0, 80.0] {
        let dev = track.eval(t).unwrap() - t * (t / (PI * std::f64::consts::E)).ln();
        assert!(dev.abs() < 2.5, "t = {t}: {dev}");
    }
    // a finer grid follows the same branch
    let fine = psi_arg_xi(80.0, 0.01).unwrap();
    for t in [7.3, 33.3, 79.9] {
        assert!((fine.eval(t).unwrap() - track.eval(t).unwrap()).abs() < 1e-12);
    }
}
