#[cfg(not(feature = "std"))]
use num_traits::Float;

use super::gram::GramMatrix;
use crate::{Complex, Error, Result};

/// A point x + iy of the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpperHalfPoint {
    x: f64,
    y: f64,
}

impl UpperHalfPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !(y > 0.0) || !x.is_finite() || !y.is_finite() {
            return Err(Error::domain("UpperHalfPoint", "requires finite x and y > 0"));
        }
        Ok(Self { x, y })
    }

    pub fn from_complex(z: Complex) -> Result<Self> {
        Self::new(z.re, z.im)
    }

    /// The point i.
    pub fn i() -> Self {
        Self { x: 0.0, y: 1.0 }
    }

    /// ω = e^{2πi/3}, the order-3 elliptic point.
    pub fn rho() -> Self {
        Self {
            x: -0.5,
            y: 0.75f64.sqrt(),
        }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn to_complex(&self) -> Complex {
        Complex::new(self.x, self.y)
    }

    /// z + (dx, dy), used by finite-difference stencils.
    pub(crate) fn shifted(&self, dx: f64, dy: f64) -> Result<Self> {
        Self::new(self.x + dx, self.y + dy)
    }
}

/// An element of SL₂(ℤ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Sl2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Sl2 {
    pub const IDENTITY: Sl2 = Sl2 { a: 1, b: 0, c: 0, d: 1 };
    /// z ↦ z + 1
    pub const T: Sl2 = Sl2 { a: 1, b: 1, c: 0, d: 1 };
    /// z ↦ −1/z
    pub const S: Sl2 = Sl2 {
        a: 0,
        b: -1,
        c: 1,
        d: 0,
    };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if a * d - b * c != 1 {
            return Err(Error::domain("Sl2", "determinant must be 1"));
        }
        Ok(Self { a, b, c, d })
    }

    pub fn mul(&self, o: &Sl2) -> Sl2 {
        Sl2 {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    pub fn inverse(&self) -> Sl2 {
        Sl2 {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// cz + d
    pub fn automorphy(&self, z: UpperHalfPoint) -> Complex {
        z.to_complex() * self.c as f64 + self.d as f64
    }

    /// (az + b)/(cz + d)
    pub fn apply(&self, z: UpperHalfPoint) -> UpperHalfPoint {
        let j = self.automorphy(z);
        let w = (z.to_complex() * self.a as f64 + self.b as f64) / j;
        // Im(γz) = y/|cz+d|² exactly, avoiding cancellation in the quotient
        UpperHalfPoint {
            x: w.re,
            y: z.y / j.norm_sqr(),
        }
    }
}

/// One elementary move of the reduction algorithm.
#[derive(Debug, Clone, Copy)]
pub(crate) enum ReductionStep {
    /// w ↦ w − n
    Translate(i64),
    /// w ↦ −1/w, carrying the point before the move
    Invert(UpperHalfPoint),
}

/// Reduces z into the fundamental domain |x| ≤ 1/2, |z| ≥ 1, reporting each
/// move. Boundary ties resolve toward x ≤ 0.
pub(crate) fn reduce_with<F: FnMut(ReductionStep)>(z: UpperHalfPoint, mut f: F) -> (UpperHalfPoint, Sl2) {
    let mut w = z;
    let mut g = Sl2::IDENTITY;
    for _ in 0..10_000 {
        let n = (w.x + 0.5).floor() as i64;
        if n != 0 {
            w = UpperHalfPoint {
                x: w.x - n as f64,
                y: w.y,
            };
            g = Sl2 {
                a: 1,
                b: -n,
                c: 0,
                d: 1,
            }
            .mul(&g);
            f(ReductionStep::Translate(n));
        }
        let r2 = w.x * w.x + w.y * w.y;
        let on_circle = (r2 - 1.0).abs() <= 1e-15;
        if r2 < 1.0 - 1e-15 || (on_circle && w.x > 1e-15) {
            f(ReductionStep::Invert(w));
            w = Sl2::S.apply(w);
            g = Sl2::S.mul(&g);
        } else {
            break;
        }
    }
    (w, g)
}

/// Fundamental-domain representative z' = γz.
pub fn reduce_sl2(z: UpperHalfPoint) -> (UpperHalfPoint, Sl2) {
    reduce_with(z, |_| {})
}

/// The det-1 form Q̃ with Q̃[(m, n)] = |mz + n|²/y.
pub fn gram_of_point(z: UpperHalfPoint) -> GramMatrix {
    let (x, y) = (z.x, z.y);
    let e = alloc::vec![(x * x + y * y) / y, x / y, x / y, 1.0 / y];
    GramMatrix::new(2, e).expect("Gram matrix of a point is positive definite")
}
