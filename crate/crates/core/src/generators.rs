// SPDX-License-Identifier: MIT OR Apache-2.0

//! Ma–Minda generators `psi` with their exact inverses.
//!
//! Membership in `psi(D)` is decided by solving `psi(z) = w` in closed form
//! (or as a polynomial) and testing the preimage of least modulus. The margin
//! `1 - |z|` is positive inside, zero on the boundary curve `psi(e^{it})`.

use std::f64::consts::SQRT_2;

use crate::roots::complex_roots;
use crate::{cardioid, Error, Result, C64};

/// `k = sqrt 2 + 1` in the rational generator.
pub const RATIONAL_K: f64 = SQRT_2 + 1.0;
/// `2(sqrt 2 - 1)` in the right-lemniscate generator.
pub const RL_C: f64 = 2.0 * (SQRT_2 - 1.0);

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Generator {
    /// `1 + z + z^2/2`
    PhiCar,
    /// `1 + 4z/3 + 2z^2/3`
    CardioidC,
    /// `1 + sqrt2 z + z^2/2`
    Limacon,
    /// `1 + z - z^3/3`
    Nephroid,
    /// `1 + (z/k)(k + z)/(k - z)`, `k = sqrt2 + 1`
    Rational,
    /// `1 + sin z`
    Sine,
    /// `z + sqrt(1 + z^2)`
    Lune,
    /// `sqrt2 - (sqrt2 - 1) sqrt((1 - z)/(1 + 2(sqrt2 - 1)z))`
    RightLemniscate,
    /// `2/(1 + e^{-z})`
    Sigmoid,
    /// `cosh(sqrt z)`
    Cosh,
    /// `alpha + (1 - alpha) e^z`
    Exponential(f64),
    /// `alpha + (1 - alpha) sqrt(1 + z)`
    Lemniscate(f64),
    /// `sqrt(1 + c z)`
    Cassinian(f64),
    /// `1 + z/(1 - alpha z^2)`
    Booth(f64),
    /// `(1 + A z)/(1 + B z)`
    Janowski(f64, f64),
}

fn one() -> C64 {
    C64::new(1.0, 0.0)
}

impl Generator {
    pub fn exponential(alpha: f64) -> Result<Self> {
        check_unit(alpha, "alpha")?;
        Ok(Generator::Exponential(alpha))
    }

    pub fn lemniscate(alpha: f64) -> Result<Self> {
        check_unit(alpha, "alpha")?;
        Ok(Generator::Lemniscate(alpha))
    }

    pub fn cassinian(c: f64) -> Result<Self> {
        if !(c > 0.0 && c <= 1.0) {
            return Err(Error::param("c", c, "0 < c <= 1"));
        }
        Ok(Generator::Cassinian(c))
    }

    pub fn booth(alpha: f64) -> Result<Self> {
        check_unit(alpha, "alpha")?;
        Ok(Generator::Booth(alpha))
    }

    pub fn janowski(a: f64, b: f64) -> Result<Self> {
        check_janowski(a, b)?;
        Ok(Generator::Janowski(a, b))
    }

    /// Short identifier used by the CLI and the registries.
    pub fn tag(&self) -> String {
        match *self {
            Generator::PhiCar => "car".into(),
            Generator::CardioidC => "C".into(),
            Generator::Limacon => "lim".into(),
            Generator::Nephroid => "ne".into(),
            Generator::Rational => "R".into(),
            Generator::Sine => "sin".into(),
            Generator::Lune => "lune".into(),
            Generator::RightLemniscate => "RL".into(),
            Generator::Sigmoid => "SG".into(),
            Generator::Cosh => "cosh".into(),
            Generator::Exponential(a) => format!("exp({a})"),
            Generator::Lemniscate(a) => format!("lem({a})"),
            Generator::Cassinian(c) => format!("cass({c})"),
            Generator::Booth(a) => format!("BL({a})"),
            Generator::Janowski(a, b) => format!("janowski({a},{b})"),
        }
    }

    pub fn formula(&self) -> &'static str {
        match self {
            Generator::PhiCar => "1 + z + z^2/2",
            Generator::CardioidC => "1 + 4z/3 + 2z^2/3",
            Generator::Limacon => "1 + sqrt(2) z + z^2/2",
            Generator::Nephroid => "1 + z - z^3/3",
            Generator::Rational => "1 + (z/k)(k + z)/(k - z), k = sqrt(2) + 1",
            Generator::Sine => "1 + sin z",
            Generator::Lune => "z + sqrt(1 + z^2)",
            Generator::RightLemniscate => {
                "sqrt(2) - (sqrt(2) - 1) sqrt((1 - z)/(1 + 2(sqrt(2) - 1) z))"
            }
            Generator::Sigmoid => "2/(1 + e^-z)",
            Generator::Cosh => "cosh(sqrt z)",
            Generator::Exponential(_) => "alpha + (1 - alpha) e^z",
            Generator::Lemniscate(_) => "alpha + (1 - alpha) sqrt(1 + z)",
            Generator::Cassinian(_) => "sqrt(1 + c z)",
            Generator::Booth(_) => "1 + z/(1 - alpha z^2)",
            Generator::Janowski(..) => "(1 + A z)/(1 + B z)",
        }
    }

    pub fn eval(&self, z: C64) -> C64 {
        match *self {
            Generator::PhiCar => cardioid::eval_phi_car(z),
            Generator::CardioidC => (3.0 + z * 4.0 + z * z * 2.0) / 3.0,
            Generator::Limacon => 1.0 + z * SQRT_2 + z * z * 0.5,
            Generator::Nephroid => 1.0 + z - z * z * z / 3.0,
            Generator::Rational => {
                let k = RATIONAL_K;
                1.0 + (z / k) * (k + z) / (k - z)
            }
            Generator::Sine => 1.0 + z.sin(),
            Generator::Lune => z + (1.0 + z * z).sqrt(),
            Generator::RightLemniscate => {
                SQRT_2 - (SQRT_2 - 1.0) * ((1.0 - z) / (1.0 + RL_C * z)).sqrt()
            }
            Generator::Sigmoid => 2.0 / (1.0 + (-z).exp()),
            Generator::Cosh => z.sqrt().cosh(),
            Generator::Exponential(a) => a + (1.0 - a) * z.exp(),
            Generator::Lemniscate(a) => a + (1.0 - a) * (1.0 + z).sqrt(),
            Generator::Cassinian(c) => (1.0 + c * z).sqrt(),
            Generator::Booth(a) => 1.0 + z / (1.0 - a * z * z),
            Generator::Janowski(a, b) => (1.0 + a * z) / (1.0 + b * z),
        }
    }

    /// Boundary curve `psi(e^{it})`.
    pub fn boundary(&self, t: f64) -> C64 {
        self.eval(C64::from_polar(1.0, t))
    }

    /// Preimage of `w` with least modulus among the branches that `psi`
    /// actually attains; `None` when no branch applies.
    pub fn preimage(&self, w: C64) -> Option<C64> {
        let z = match *self {
            Generator::PhiCar => cardioid::minimal_preimage(w),
            Generator::CardioidC => {
                let s = ((3.0 * w - 1.0) / 2.0).sqrt();
                smaller(-1.0 + s, -1.0 - s)
            }
            Generator::Limacon => {
                let s = (2.0 * w).sqrt();
                smaller(-SQRT_2 + s, -SQRT_2 - s)
            }
            Generator::Nephroid => {
                let roots = complex_roots(&[1.0 - w, one(), C64::new(0.0, 0.0), C64::new(-1.0 / 3.0, 0.0)]);
                roots.into_iter().min_by(|a, b| a.norm().total_cmp(&b.norm()))?
            }
            Generator::Rational => {
                // z^2 + k w z + k^2 (1 - w) = 0
                let k = RATIONAL_K;
                quadratic_min(one(), k * w, k * k * (1.0 - w))?
            }
            Generator::Sine => (w - 1.0).asin(),
            Generator::Lune => {
                if w.norm() == 0.0 {
                    return None;
                }
                let z = (w * w - 1.0) / (2.0 * w);
                // the principal root sqrt(1 + z^2) = w - z needs Re(w - z) > 0
                if (w - z).re <= 0.0 {
                    return None;
                }
                z
            }
            Generator::RightLemniscate => {
                let s = (SQRT_2 - w) / (SQRT_2 - 1.0);
                if s.re <= 0.0 {
                    return None;
                }
                let s2 = s * s;
                (1.0 - s2) / (1.0 + RL_C * s2)
            }
            Generator::Sigmoid => {
                if (2.0 - w).norm() == 0.0 || w.norm() == 0.0 {
                    return None;
                }
                (w / (2.0 - w)).ln()
            }
            Generator::Cosh => {
                let u = w.acosh();
                u * u
            }
            Generator::Exponential(a) => {
                let u = (w - a) / (1.0 - a);
                if u.norm() == 0.0 {
                    return None;
                }
                u.ln()
            }
            Generator::Lemniscate(a) => {
                let u = (w - a) / (1.0 - a);
                if u.re <= 0.0 {
                    return None;
                }
                u * u - 1.0
            }
            Generator::Cassinian(c) => {
                if w.re <= 0.0 {
                    return None;
                }
                (w * w - 1.0) / c
            }
            Generator::Booth(a) => {
                // a (w - 1) z^2 + z - (w - 1) = 0
                let d = w - 1.0;
                if a == 0.0 || (a * d).norm() == 0.0 {
                    d
                } else {
                    quadratic_min(a * d, one(), -d)?
                }
            }
            Generator::Janowski(a, b) => {
                let den = a - b * w;
                if den.norm() == 0.0 {
                    return None;
                }
                (w - 1.0) / den
            }
        };
        z.is_finite().then_some(z)
    }

    /// `1 - |z|` for the least-modulus valid preimage, `-1` if none exists.
    pub fn margin(&self, w: C64) -> f64 {
        match self.preimage(w) {
            Some(z) => 1.0 - z.norm(),
            None => -1.0,
        }
    }

    pub fn contains(&self, w: C64) -> bool {
        self.margin(w) > crate::domains::EPS_CONTAINS
    }

    /// Registered generators with representative parameters, for listings
    /// and the registry invariants.
    pub fn catalogue() -> Vec<Generator> {
        vec![
            Generator::PhiCar,
            Generator::CardioidC,
            Generator::Limacon,
            Generator::Nephroid,
            Generator::Rational,
            Generator::Sine,
            Generator::Lune,
            Generator::RightLemniscate,
            Generator::Sigmoid,
            Generator::Cosh,
            Generator::Exponential(0.0),
            Generator::Exponential(0.5),
            Generator::Lemniscate(0.0),
            Generator::Lemniscate(0.5),
            Generator::Cassinian(0.75),
            Generator::Cassinian(1.0),
            Generator::Booth(0.0),
            Generator::Booth(0.5),
            Generator::Janowski(1.0, -1.0),
            Generator::Janowski(0.5, 0.0),
        ]
    }
}

fn smaller(a: C64, b: C64) -> C64 {
    if a.norm() <= b.norm() {
        a
    } else {
        b
    }
}

/// Root of `a z^2 + b z + c` with least modulus, cancellation-free.
fn quadratic_min(a: C64, b: C64, c: C64) -> Option<C64> {
    let disc = (b * b - 4.0 * a * c).sqrt();
    // pick the sign that avoids cancellation in -b -/+ disc
    let q = if (b.conj() * disc).re >= 0.0 {
        -0.5 * (b + disc)
    } else {
        -0.5 * (b - disc)
    };
    let r1 = if a.norm() == 0.0 { None } else { Some(q / a) };
    let r2 = if q.norm() == 0.0 { None } else { Some(c / q) };
    match (r1, r2) {
        (Some(x), Some(y)) => Some(smaller(x, y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => {
            // q = 0 means b = 0 and c = 0 (double root 0)
            Some(C64::new(0.0, 0.0))
        }
    }
}

fn check_unit(alpha: f64, name: &'static str) -> Result<()> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::param(name, alpha, "0 <= alpha < 1"));
    }
    Ok(())
}

pub(crate) fn check_janowski(a: f64, b: f64) -> Result<()> {
    if !(-1.0..=1.0).contains(&b) {
        return Err(Error::param("B", b, "-1 <= B < A <= 1"));
    }
    if !(a > b && a <= 1.0) {
        return Err(Error::param("A", a, "-1 <= B < A <= 1"));
    }
    Ok(())
}
