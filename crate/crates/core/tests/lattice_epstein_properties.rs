mod common;

use common::{c, form, point, sl2_word};
use proptest::prelude::*;
use zetalab_core::epstein::{
    check_functional_equation, epstein_direct, epstein_residue, epstein_residue_closed_form, epstein_zeta,
    epstein_zeta_alternate,
};
use zetalab_core::lattice::{
    cholesky, enumerate_vectors, gram_of_point, reduce_sl2, GramMatrix, Sl2, UpperHalfPoint, DEFAULT_CAP,
};

/// Unimodular 3×3 matrices from products of elementary shears.
fn unimodular3() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec((0usize..3, 0usize..3, -2i64..=2), 1..5).prop_map(|ops| {
        let mut u = vec![1, 0, 0, 0, 1, 0, 0, 0, 1];
        for (i, j, k) in ops {
            if i == j {
                continue;
            }
            // row_i += k·row_j
            for col in 0..3 {
                u[i * 3 + col] += k * u[j * 3 + col];
            }
        }
        u
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn enumeration_is_symmetric_and_complete(q in form(3), bound in 0.5f64..6.0) {
        let vs = enumerate_vectors(&q, bound).unwrap();
        for v in &vs {
            let neg: Vec<i64> = v.iter().map(|x| -x).collect();
            prop_assert!(vs.binary_search(&neg).is_ok());
            prop_assert!(q.eval(v) <= bound * (1.0 + 1e-9));
        }
        // nothing inside the radius is missed: check a box of small vectors
        let mut inside = 0;
        for a in -4i64..=4 {
            for b in -4i64..=4 {
                for d in -4i64..=4 {
                    let v = [a, b, d];
                    if v != [0, 0, 0] && q.eval(&v) <= bound * (1.0 - 1e-9) {
                        inside += 1;
                        prop_assert!(vs.binary_search(&v.to_vec()).is_ok());
                    }
                }
            }
        }
        prop_assert!(inside <= vs.len());
    }

    #[test]
    fn cholesky_reconstructs(q in form(4)) {
        let l = cholesky(&q).unwrap();
        let back = l.reconstruct();
        for (x, y) in back.iter().zip(q.entries()) {
            prop_assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn reduction_is_idempotent(x in -3.0f64..3.0, y in 0.01f64..3.0) {
        let z = UpperHalfPoint::new(x, y).unwrap();
        let (r, g) = reduce_sl2(z);
        prop_assert!(r.x().abs() <= 0.5 + 1e-12);
        prop_assert!(r.to_complex().norm() >= 1.0 - 1e-12);
        prop_assert!((g.apply(z).to_complex() - r.to_complex()).norm() < 1e-9);
        let (r2, _) = reduce_sl2(r);
        prop_assert!((r2.to_complex() - r.to_complex()).norm() < 1e-12);
    }

    #[test]
    fn unimodular_invariance(q in form(3), u in unimodular3(), re in 0.2f64..2.5, im in -3.0f64..3.0) {
        let s = c(re, im);
        prop_assume!((s - 1.5).norm() > 0.1);
        let a = epstein_zeta(&q, s, 1e-13).unwrap().value;
        let b = epstein_zeta(&q.transform(&u), s, 1e-13).unwrap().value;
        prop_assert!((a - b).norm() < 1e-10 * a.norm().max(1.0));
    }

    #[test]
    fn conjugation(q in form(2), re in -1.0f64..3.0, im in 0.1f64..5.0) {
        let s = c(re, im);
        let a = epstein_zeta(&q, s, 1e-13).unwrap().value;
        let b = epstein_zeta(&q, s.conj(), 1e-13).unwrap().value;
        prop_assert!((a.conj() - b).norm() < 1e-10 * a.norm().max(1.0));
    }

    #[test]
    fn both_theta_splits_agree(q in form(3), re in -1.0f64..3.0, im in -4.0f64..4.0) {
        let s = c(re, im);
        prop_assume!(s.norm() > 0.1 && (s - 1.5).norm() > 0.1);
        let a = epstein_zeta(&q, s, 1e-13).unwrap();
        let b = epstein_zeta_alternate(&q, s, 1e-13).unwrap();
        prop_assert!((a.value - b.value).norm() < 1e-10 * a.value.norm().max(1.0));
    }

    #[test]
    fn functional_equation(q in form(4), re in -1.0f64..3.0, im in -4.0f64..4.0) {
        let s = c(re, im);
        prop_assume!(s.norm() > 0.1 && (s - 2.0).norm() > 0.1);
        prop_assert!(check_functional_equation(&q, s).unwrap() < 1e-9);
    }

    #[test]
    fn gram_of_point_is_modular(z in point(), w in sl2_word()) {
        let g = Sl2::new(w.0, w.1, w.2, w.3).unwrap();
        let q = gram_of_point(z);
        prop_assert!((q.determinant() - 1.0).abs() < 1e-12);
        let s = c(1.7, 0.8);
        let a = epstein_zeta(&q, s, 1e-13).unwrap().value;
        let b = epstein_zeta(&gram_of_point(g.apply(z)), s, 1e-13).unwrap().value;
        prop_assert!((a - b).norm() < 1e-10 * a.norm());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn continuation_agrees_with_the_direct_series(q in form(2), im in -4.0f64..4.0) {
        let s = c(2.5, im);
        let a = epstein_zeta(&q, s, 1e-13).unwrap().value;
        let b = epstein_direct(&q, s, 1e5, DEFAULT_CAP).unwrap().value;
        prop_assert!((a - b).norm() < 1e-9 * a.norm());
    }

    #[test]
    fn residue_is_independent_of_the_form(q in form(3)) {
        prop_assert!((epstein_residue(&q).unwrap() - epstein_residue_closed_form(3)).abs() < 1e-8);
    }
}

#[test]
fn four_squares_closed_form() {
    // Z₄(I, s) = 8(1 − 4^{1−s})ζ(s)ζ(s−1)
    use zetalab_core::specfun::riemann_zeta;
    let s = c(2.5, 0.0);
    let z = epstein_zeta(&GramMatrix::identity(4), s, 1e-13).unwrap().value;
    let four_pow = ((-s + 1.0) * 4f64.ln()).exp();
    let exact = (c(1.0, 0.0) - four_pow) * 8.0 * riemann_zeta(s).unwrap() * riemann_zeta(s - 1.0).unwrap();
    assert!((z - exact).norm() < 1e-9 * exact.norm());
}
