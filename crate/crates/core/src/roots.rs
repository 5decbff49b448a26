// SPDX-License-Identifier: MIT OR Apache-2.0

//! Real polynomials with a bracketed smallest-root solver, and a
//! simultaneous-iteration solver for all complex roots.

use crate::{Error, Result, C64};

/// Step of the sign scan on `(0, 1)`.
pub const SCAN_STEP: f64 = 1e-3;
/// Width at which bisection stops.
pub const BISECTION_TOL: f64 = 1e-14;

/// Real polynomial, coefficients in ascending order (`c[0] + c[1] x + ...`).
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(ascending: Vec<f64>) -> Self {
        Self { coeffs: ascending }
    }

    /// From the usual written order, leading coefficient first.
    pub fn from_descending(descending: &[f64]) -> Self {
        Self {
            coeffs: descending.iter().rev().copied().collect(),
        }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|&c| c != 0.0)
            .unwrap_or(0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        }
    }

    /// Human readable form such as `2r^3 - 6r + 3`.
    pub fn display(&self, var: &str) -> String {
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0.0 {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c < 0.0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0.0 { " - " } else { " + " });
            }
            let coeff = if mag == 1.0 && k > 0 {
                String::new()
            } else {
                fmt_coeff(mag)
            };
            out.push_str(&coeff);
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&k.to_string());
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn fmt_coeff(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}

/// Smallest root of `p` in the open interval `(0, 1)`.
///
/// A sign scan on the grid `i/1000` brackets the first sign change, which
/// bisection then narrows to [`BISECTION_TOL`]. Grid points where `p`
/// vanishes exactly are returned as is.
pub fn smallest_root_in_unit_interval(p: &Polynomial) -> Result<f64> {
    let steps = (1.0 / SCAN_STEP).round() as usize;
    let mut x0 = 0.0;
    let mut f0 = p.eval(0.0);
    for i in 1..=steps {
        let x1 = i as f64 / steps as f64;
        let f1 = p.eval(x1);
        if f1 == 0.0 && i < steps {
            return Ok(x1);
        }
        // p(0) = 0 is a root at the excluded endpoint; the scan moves past it
        if f0 != 0.0 && f1 != 0.0 && f0.signum() != f1.signum() {
            return Ok(bisect(|x| p.eval(x), x0, x1, f0));
        }
        x0 = x1;
        f0 = f1;
    }
    Err(Error::NoRootBracketed)
}

/// Bisection on `[lo, hi]` with `f(lo) = flo` of opposite sign to `f(hi)`.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, mut flo: f64) -> f64 {
    while hi - lo > BISECTION_TOL {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Certificate for a root found by [`smallest_root_in_unit_interval`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootCertificate {
    pub residual: f64,
    /// No sign change on the scan grid over `(0, root - 1e-9)`.
    pub smallest: bool,
}

impl RootCertificate {
    pub fn holds(&self) -> bool {
        self.residual < 1e-12 && self.smallest
    }
}

/// Residual and smallest-root check of `root` as a root of `p`.
pub fn certify_smallest_root(p: &Polynomial, root: f64) -> RootCertificate {
    let residual = p.eval(root).abs();
    let limit = root - 1e-9;
    let mut smallest = true;
    let mut prev = p.eval(0.0);
    let mut x = SCAN_STEP;
    while x < limit {
        let v = p.eval(x);
        if v == 0.0 || (prev != 0.0 && v.signum() != prev.signum()) {
            smallest = false;
            break;
        }
        prev = v;
        x += SCAN_STEP;
    }
    if smallest && limit > 0.0 {
        let v = p.eval(limit);
        if prev != 0.0 && v != 0.0 && v.signum() != prev.signum() {
            smallest = false;
        }
    }
    RootCertificate { residual, smallest }
}

/// All complex roots of a polynomial with complex coefficients (ascending
/// order) by the Aberth–Ehrlich iteration.
pub fn complex_roots(ascending: &[C64]) -> Vec<C64> {
    let deg = ascending
        .iter()
        .rposition(|c| c.norm() != 0.0)
        .unwrap_or(0);
    if deg == 0 {
        return Vec::new();
    }
    let coeffs = &ascending[..=deg];
    let lead = coeffs[deg];
    let monic: Vec<C64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |z: C64| -> (C64, C64) {
        let mut p = C64::new(0.0, 0.0);
        let mut dp = C64::new(0.0, 0.0);
        for &c in monic.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    };
    // Cauchy bound for the initial circle
    let bound = 1.0
        + monic[..deg]
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
    let mut z: Vec<C64> = (0..deg)
        .map(|k| C64::from_polar(bound, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / deg as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..deg {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut s = C64::new(0.0, 0.0);
            for j in 0..deg {
                if j != i {
                    s += (z[i] - z[j]).inv();
                }
            }
            let step = ratio / (C64::new(1.0, 0.0) - ratio * s);
            if step.is_finite() {
                z[i] -= step;
                moved = moved.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    // one Newton polish per root
    for zi in z.iter_mut() {
        let (p, dp) = eval(*zi);
        let step = p / dp;
        if step.is_finite() && step.norm() < 1e-6 {
            *zi -= step;
        }
    }
    z
}
