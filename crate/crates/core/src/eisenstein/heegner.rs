//! Eisenstein series at CM points of class-number-one imaginary quadratic
//! fields, where E_s(τ) = (w_K/2)(√|D|/2)^s ζ_K(s)/ζ(2s) with ζ_K = ζ·L(·, χ_D).

#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::format;

use super::eisenstein_sl2;
use crate::lattice::UpperHalfPoint;
use crate::specfun::{dirichlet_l, riemann_zeta};
use crate::{Complex, Error, Result};

/// Discriminants of the imaginary quadratic fields of class number one.
pub const SUPPORTED_DISCRIMINANTS: [i64; 9] = [-3, -4, -7, -8, -11, -19, -43, -67, -163];

/// The principal-form CM point of a class-number-one field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeegnerField {
    pub discriminant: i64,
    /// number of roots of unity in the ring of integers
    pub units: u32,
    /// τ = (−b + √D)/2 with b ∈ {0, 1}, b ≡ D mod 2
    pub point: UpperHalfPoint,
}

pub fn heegner_field(d: i64) -> Result<HeegnerField> {
    if !SUPPORTED_DISCRIMINANTS.contains(&d) {
        return Err(Error::domain(
            "heegner_field",
            format!("discriminant {d} is not a supported class-number-one field"),
        ));
    }
    let units = match d {
        -3 => 6,
        -4 => 4,
        _ => 2,
    };
    let y = (d.unsigned_abs() as f64).sqrt() / 2.0;
    let x = if d % 2 == 0 { 0.0 } else { -0.5 };
    Ok(HeegnerField {
        discriminant: d,
        units,
        point: UpperHalfPoint::new(x, y)?,
    })
}

impl HeegnerField {
    /// (w_K/2)·y^s, the factor linking E_s(τ) with ζ_K(s)/ζ(2s).
    fn link(&self, s: Complex) -> Complex {
        (s * self.point.y().ln()).exp() * (self.units as f64 / 2.0)
    }
}

/// E_s(τ_D) from the factorization ζ_K = ζ·L; valid at any height on the
/// critical line where the lattice-sum route loses all precision.
pub fn eisenstein_at_heegner(s: Complex, d: i64) -> Result<Complex> {
    let f = heegner_field(d)?;
    let zk = riemann_zeta(s)? * dirichlet_l(s, d)?;
    Ok(f.link(s) * zk / riemann_zeta(s * 2.0)?)
}

/// ζ_K(s) recovered from the Eisenstein series at the CM point.
pub fn heegner_zeta(s: Complex, d: i64) -> Result<Complex> {
    let f = heegner_field(d)?;
    let e = eisenstein_sl2(f.point, s)?.value;
    Ok(e * riemann_zeta(s * 2.0)? / f.link(s))
}

/// E_s(ω)ζ(2s)/(ζ(s)L(s, χ₋₃)) at ω = e^{2πi/3}. The factorization predicts
/// 3(√3/2)^s.
pub fn haas_ratio(s: Complex) -> Result<Complex> {
    let f = heegner_field(-3)?;
    let e = eisenstein_sl2(f.point, s)?.value;
    Ok(e * riemann_zeta(s * 2.0)? / (riemann_zeta(s)? * dirichlet_l(s, -3)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_and_units() {
        let f = heegner_field(-4).unwrap();
        assert_eq!((f.units, f.point), (4, UpperHalfPoint::i()));
        let f = heegner_field(-3).unwrap();
        assert!((f.point.to_complex() - UpperHalfPoint::rho().to_complex()).norm() < 1e-15);
        assert!(heegner_field(-5).is_err());
    }

    #[test]
    fn lattice_route_matches_factorization() {
        let s = Complex::new(2.0, 0.0);
        for d in [-3, -4, -7, -8, -11] {
            let zk = riemann_zeta(s).unwrap() * dirichlet_l(s, d).unwrap();
            let via_e = heegner_zeta(s, d).unwrap();
            assert!((via_e - zk).norm() < 1e-10 * zk.norm(), "D={d}");
        }
        let s = Complex::new(0.7, 3.0);
        let a = eisenstein_at_heegner(s, -7).unwrap();
        let b = eisenstein_sl2(heegner_field(-7).unwrap().point, s).unwrap().value;
        assert!((a - b).norm() < 1e-10 * a.norm());
    }

    #[test]
    fn haas_constant_is_three_times_power_s() {
        // brute force settles the exponent: the ratio is 3(√3/2)^s, not (√3/2)^{s/2}
        for s in [1.5, 2.0, 3.0] {
            let h = haas_ratio(Complex::new(s, 0.0)).unwrap();
            let expect = 3.0 * (3f64.sqrt() / 2.0).powf(s);
            assert!((h.re - expect).abs() < 1e-10 * expect && h.im.abs() < 1e-12);
            assert!((h.re - (3f64.sqrt() / 2.0).powf(s / 2.0)).abs() > 1.0);
        }
    }
}
