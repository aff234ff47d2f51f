//! Numerics for Epstein zeta functions, real-analytic Eisenstein series and
//! the spectral objects built from them on the modular surface.
//!
//! The crate is `no_std` (with `alloc`) when built without the default `std`
//! feature. Every series evaluator either returns a value with an explicit
//! truncation bound or a typed [`Error`].

#![cfg_attr(not(feature = "std"), no_std)]
// `!(x > 0.0)` is used on purpose so that NaN inputs are rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod eisenstein;
pub mod epstein;
mod error;
pub mod hamiltonian;
pub mod lattice;
pub mod specfun;
pub mod spectral;

pub use error::{Error, Result};

/// Double precision complex number used for every complex parameter.
pub type Complex = num_complex::Complex64;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

pub(crate) fn is_finite(z: Complex) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
