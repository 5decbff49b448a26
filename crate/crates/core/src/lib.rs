// SPDX-License-Identifier: MIT OR Apache-2.0

//! Numerical toolkit for the starlike class generated by the cardioid
//! polynomial `phi_car(z) = 1 + z + z^2/2`.
//!
//! The crate is organised bottom-up:
//!
//! * [`series`]: truncated power series, log-derivative, Hadamard product and
//!   the coefficient membership criteria.
//! * [`cardioid`]: evaluation, membership and the circle/disk extrema of the
//!   cardioid domain `Omega_car = phi_car(D)`.
//! * [`generators`] and [`domains`]: every comparison region (disks,
//!   half-planes, sectors, conic regions and generator images) with an exact
//!   membership margin and a boundary parametrization.
//! * [`functions`]: closed-form `z f'(z)/f(z)` for the extremal functions.
//! * [`radii`]: closed-form and polynomial-root radius constants.
//! * [`verify`]: independent sampling/bisection oracles.
//! * [`registry`]: the table of every constant together with its oracle.
//! * [`figures`]: curve data for plotting, with CSV and SVG writers.

#![forbid(unsafe_code)]

pub mod cardioid;
pub mod domains;
mod error;
pub mod figures;
pub mod fmt;
pub mod functions;
pub mod generators;
pub mod geometry;
pub mod radii;
pub mod registry;
pub mod roots;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;

/// Convenience constructor for a complex number.
#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}
