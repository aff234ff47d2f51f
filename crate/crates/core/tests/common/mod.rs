#![allow(dead_code)]

use proptest::prelude::*;
use zetalab_core::lattice::{normalize_det, GramMatrix, UpperHalfPoint};
use zetalab_core::Complex;

pub fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

/// AAᵀ with A = I + noise, scaled to determinant 1.
pub fn form_from(r: usize, noise: &[f64]) -> GramMatrix {
    let a: Vec<f64> = (0..r * r)
        .map(|k| if k % (r + 1) == 0 { 1.0 + noise[k] } else { noise[k] })
        .collect();
    let mut q = vec![0.0; r * r];
    for i in 0..r {
        for j in 0..=i {
            let v: f64 = (0..r).map(|k| a[i * r + k] * a[j * r + k]).sum();
            q[i * r + j] = v;
            q[j * r + i] = v;
        }
    }
    normalize_det(&GramMatrix::new(r, q).unwrap()).0
}

pub fn form(r: usize) -> impl Strategy<Value = GramMatrix> {
    prop::collection::vec(-0.3f64..0.3, r * r).prop_map(move |n| form_from(r, &n))
}

pub fn point() -> impl Strategy<Value = UpperHalfPoint> {
    (-0.5f64..0.5, 0.9f64..2.5).prop_map(|(x, y)| UpperHalfPoint::new(x, y).unwrap())
}

/// An SL₂(ℤ) word in T^{±k} and S, as (a, b, c, d).
pub fn sl2_word() -> impl Strategy<Value = (i64, i64, i64, i64)> {
    prop::collection::vec(-3i64..=3, 1..4).prop_map(|ks| {
        let (mut a, mut b, mut c, mut d) = (1i64, 0i64, 0i64, 1i64);
        for k in ks {
            // multiply by T^k then S
            b += a * k;
            d += c * k;
            let (na, nb, nc, nd) = (b, -a, d, -c);
            a = na;
            b = nb;
            c = nc;
            d = nd;
        }
        (a, b, c, d)
    })
}
