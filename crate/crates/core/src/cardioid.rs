// SPDX-License-Identifier: MIT OR Apache-2.0

//! The cardioid generator `phi_car(z) = 1 + z + z^2/2` and its image
//! `Omega_car = phi_car(D)`.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use crate::{Error, Result, C64};

/// Preimage-modulus tolerance separating inside, boundary and outside.
pub const EPS_BOUNDARY: f64 = 1e-12;
/// Queries closer than this to the cusp `w = 1/2` are flagged.
pub const CUSP_FLAG_DISTANCE: f64 = 1e-6;

pub fn eval_phi_car(z: C64) -> C64 {
    1.0 + z + z * z * 0.5
}

/// `phi_car'(z) = 1 + z`.
pub fn phi_car_derivative(z: C64) -> C64 {
    1.0 + z
}

/// Boundary point `phi_car(e^{it})`.
pub fn boundary_point(t: f64) -> C64 {
    eval_phi_car(C64::from_polar(1.0, t))
}

/// `min Re phi_car(z)` over `|z| = r`.
pub fn min_re_on_circle(r: f64) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::param("r", r, "0 < r < 1"));
    }
    Ok(if r <= 0.5 {
        1.0 - r + r * r / 2.0
    } else {
        (3.0 - 2.0 * r * r) / 4.0
    })
}

/// `max Re phi_car(z)` over `|z| = r`, attained at `z = r`.
pub fn max_re_on_circle(r: f64) -> Result<f64> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::param("r", r, "0 < r <= 1"));
    }
    Ok(1.0 + r + r * r / 2.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Inside,
    Boundary,
    Outside,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Inside => "inside",
            Verdict::Boundary => "boundary",
            Verdict::Outside => "outside",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Membership {
    pub verdict: Verdict,
    /// The root of `phi_car(z) = w` of least modulus.
    pub nearest_preimage: C64,
    /// Set only for [`Verdict::Inside`].
    pub preimage: Option<C64>,
    pub near_cusp: bool,
}

impl Membership {
    pub fn is_member(&self) -> bool {
        self.verdict == Verdict::Inside
    }
}

/// Root of `z^2/2 + z + 1 - w = 0` with the smaller modulus.
pub fn minimal_preimage(w: C64) -> C64 {
    let s = (2.0 * w - 1.0).sqrt();
    let z1 = -1.0 + s;
    let z2 = -1.0 - s;
    if z1.norm() <= z2.norm() {
        z1
    } else {
        z2
    }
}

/// Signed distance proxy `1 - |z|` of the minimal preimage; positive inside.
pub fn margin(w: C64) -> f64 {
    1.0 - minimal_preimage(w).norm()
}

/// Membership in the open domain `Omega_car` through the preimage.
pub fn cardioid_contains(w: C64) -> Membership {
    let z = minimal_preimage(w);
    let m = z.norm();
    let verdict = if (m - 1.0).abs() <= EPS_BOUNDARY {
        Verdict::Boundary
    } else if m < 1.0 {
        Verdict::Inside
    } else {
        Verdict::Outside
    };
    Membership {
        verdict,
        nearest_preimage: z,
        preimage: (verdict == Verdict::Inside).then_some(z),
        near_cusp: (w - 0.5).norm() < CUSP_FLAG_DISTANCE,
    }
}

/// The boundary quartic; negative inside `Omega_car`.
pub fn implicit_quartic(w: C64) -> f64 {
    let (x, y) = (w.re, w.im);
    let s = 4.0 * x * x + 4.0 * y * y;
    let a = s - 8.0 * x - 1.0;
    a * a + 4.0 * (s - 12.0 * x + 1.0)
}

/// Independent membership test by the sign of the boundary quartic.
pub fn cardioid_contains_implicit(w: C64) -> bool {
    implicit_quartic(w) < 0.0
}

/// `(r_a, R_a)`: the largest disk about `a` inside `Omega_car` and the
/// smallest disk about `a` containing it.
pub fn inner_outer_radii(a: f64) -> Result<(f64, f64)> {
    if !(a > 0.5 && a < 2.5) {
        return Err(Error::param("a", a, "1/2 < a < 5/2"));
    }
    Ok((inner_radius(a), outer_radius(a)))
}

fn inner_radius(a: f64) -> f64 {
    if a <= 1.5 {
        (2.0 * a - 1.0) / 2.0
    } else {
        (5.0 - 2.0 * a) / 2.0
    }
}

fn outer_radius(a: f64) -> f64 {
    if a <= 7.0 / 6.0 {
        (5.0 - 2.0 * a) / 2.0
    } else {
        ((2.0 * a - 1.0).powi(3) / (8.0 * (a - 1.0))).sqrt()
    }
}

/// Both branches of `r_a` and `R_a` at a point, for knot checks.
pub fn radii_branches(a: f64) -> ([f64; 2], [f64; 2]) {
    (
        [(2.0 * a - 1.0) / 2.0, (5.0 - 2.0 * a) / 2.0],
        [
            (5.0 - 2.0 * a) / 2.0,
            ((2.0 * a - 1.0).powi(3) / (8.0 * (a - 1.0))).sqrt(),
        ],
    )
}

/// The unique `a` with `R_a = a`, namely `(3 + sqrt 5)/4`.
pub fn self_centered_fixed_point() -> f64 {
    (3.0 + 5f64.sqrt()) / 4.0
}

/// Radius of convexity of `phi_car`: `1 + Re(z phi''/phi') = Re(1 + z/(1+z))`
/// is positive exactly for `|z| < 1/2`.
pub fn phi_car_convexity_radius() -> f64 {
    0.5
}

/// `1 + z phi_car''(z)/phi_car'(z)`.
pub fn convexity_functional(z: C64) -> C64 {
    1.0 + z / (1.0 + z)
}

/// CSV `t,x,y` of `n` boundary samples over `[0, 2 pi)`.
pub fn boundary_csv(n: usize) -> String {
    let mut s = String::from("t,x,y\n");
    for k in 0..n {
        let t = TAU * k as f64 / n as f64;
        let w = boundary_point(t);
        let _ = writeln!(s, "{},{},{}", crate::fmt::sig9(t), crate::fmt::sig9(w.re), crate::fmt::sig9(w.im));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use crate::geometry::{polyline_distance, sample_closed};

    #[test]
    fn phi_values() {
        assert_eq!(eval_phi_car(c64(0.0, 0.0)), c64(1.0, 0.0));
        assert_eq!(eval_phi_car(c64(-1.0, 0.0)), c64(0.5, 0.0));
        assert_eq!(eval_phi_car(c64(1.0, 0.0)), c64(2.5, 0.0));
    }

    fn brute_re(r: f64, n: usize) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for k in 0..n {
            let v = eval_phi_car(C64::from_polar(r, TAU * k as f64 / n as f64)).re;
            lo = lo.min(v);
            hi = hi.max(v);
        }
        (lo, hi)
    }

    #[test]
    fn circle_extrema_examples() {
        let b = 0.5f64;
        assert!((1.0 - b + b * b / 2.0 - (3.0 - 2.0 * b * b) / 4.0).abs() < 1e-15);
        assert_eq!(min_re_on_circle(0.5).unwrap(), 0.625);
        assert!((min_re_on_circle(1.0 - 1e-12).unwrap() - 0.25).abs() < 1e-11);
        assert!((min_re_on_circle(0.1).unwrap() - 0.905).abs() < 1e-15);
        assert!((brute_re(0.1, 1_000_000).0 - 0.905).abs() < 1e-9);
        assert_eq!(max_re_on_circle(1.0).unwrap(), 2.5);
        assert!((max_re_on_circle(0.3).unwrap() - 1.345).abs() < 1e-15);
        assert!((brute_re(0.3, 4096).1 - 1.345).abs() < 1e-12);
        assert!(min_re_on_circle(1.0).is_err());
        assert!(max_re_on_circle(0.0).is_err());
    }

    #[test]
    fn circle_extrema_match_sampling() {
        for i in 1..=50 {
            let r = i as f64 / 51.0;
            let (lo, hi) = brute_re(r, 4096);
            assert!((min_re_on_circle(r).unwrap() - lo).abs() < 1e-6, "r = {r}");
            assert!((max_re_on_circle(r).unwrap() - hi).abs() < 1e-6, "r = {r}");
        }
    }

    #[test]
    fn membership_examples() {
        let m = cardioid_contains(c64(1.0, 0.0));
        assert_eq!(m.verdict, Verdict::Inside);
        assert_eq!(m.preimage, Some(c64(0.0, 0.0)));

        let m = cardioid_contains(c64(0.5, 0.0));
        assert_eq!(m.verdict, Verdict::Boundary);
        assert!(m.near_cusp);
        assert!((m.nearest_preimage - c64(-1.0, 0.0)).norm() < 1e-15);

        let m = cardioid_contains(c64(3.0, 0.0));
        assert_eq!(m.verdict, Verdict::Outside);
        assert!(!cardioid_contains_implicit(c64(3.0, 0.0)));
        assert_eq!(cardioid_contains(c64(2.5, 0.2)).verdict, Verdict::Outside);
    }

    #[test]
    fn implicit_examples() {
        assert_eq!(implicit_quartic(c64(1.0, 0.0)), -3.0);
        assert!(cardioid_contains_implicit(c64(1.0, 0.0)));
        assert_eq!(implicit_quartic(c64(0.5, 0.0)), 0.0);
        assert!(!cardioid_contains_implicit(c64(0.5, 0.0)));
        assert!(implicit_quartic(c64(-1.0, 0.0)) >= 0.0);
    }

    #[test]
    fn dual_membership_on_grid() {
        let coarse = sample_closed(boundary_point, 4096);
        let fine = sample_closed(boundary_point, 1 << 17);
        let mut compared = 0;
        for i in 0..200 {
            for j in 0..200 {
                let w = c64(-0.5 + 3.5 * i as f64 / 199.0, -1.75 + 3.5 * j as f64 / 199.0);
                let a = cardioid_contains(w).is_member();
                let b = cardioid_contains_implicit(w);
                if a != b {
                    // only allowed on the boundary itself
                    if polyline_distance(&coarse, w) < 1e-3 {
                        assert!(polyline_distance(&fine, w) < 1e-6, "disagree at {w}");
                        continue;
                    }
                    panic!("disagree at {w}");
                }
                compared += 1;
            }
        }
        assert!(compared > 39_000);
    }

    #[test]
    fn boundary_on_quartic() {
        for k in 0..4096 {
            let w = boundary_point(TAU * k as f64 / 4096.0);
            assert!(implicit_quartic(w).abs() < 1e-9);
        }
    }

    #[test]
    fn radii_examples() {
        assert_eq!(inner_outer_radii(1.0).unwrap(), (0.5, 1.5));
        let (r, big) = inner_outer_radii(2.0).unwrap();
        assert_eq!(r, 0.5);
        assert!((big - (27.0f64 / 8.0).sqrt()).abs() < 1e-15);
        let (_, outer) = radii_branches(7.0 / 6.0);
        assert!((outer[0] - 4.0 / 3.0).abs() < 1e-12);
        assert!((outer[0] - outer[1]).abs() < 1e-12);
        let (inner, _) = radii_branches(1.5);
        assert!((inner[0] - inner[1]).abs() < 1e-12);
        assert!(inner_outer_radii(0.5).is_err());
        assert!(inner_outer_radii(2.5).is_err());
    }

    #[test]
    fn radii_match_sampling() {
        let pts = sample_closed(boundary_point, 4096);
        for i in 1..=50 {
            let a = 0.5 + 2.0 * i as f64 / 51.0;
            let (ra, big) = inner_outer_radii(a).unwrap();
            let d: Vec<f64> = pts.iter().map(|w| (w - a).norm()).collect();
            let lo = d.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = d.iter().copied().fold(0.0, f64::max);
            assert!((ra - lo).abs() < 1e-6, "a = {a}: {ra} vs {lo}");
            assert!((big - hi).abs() < 1e-6, "a = {a}: {big} vs {hi}");
            assert!(ra < big);
        }
    }

    #[test]
    fn fixed_point() {
        let m0 = self_centered_fixed_point();
        assert!((m0 - 1.309017).abs() < 1e-6);
        assert!((inner_outer_radii(m0).unwrap().1 - m0).abs() < 1e-12);
        assert!(inner_outer_radii(m0 - 1e-3).unwrap().1 > m0 - 1e-3);
        assert!(inner_outer_radii(m0 + 1e-3).unwrap().1 < m0 + 1e-3);
    }

    #[test]
    fn convexity_radius() {
        assert_eq!(phi_car_convexity_radius(), 0.5);
        let min_at = |r: f64| {
            (0..4096)
                .map(|k| convexity_functional(C64::from_polar(r, TAU * k as f64 / 4096.0)).re)
                .fold(f64::INFINITY, f64::min)
        };
        assert!(min_at(0.49) > 0.0);
        assert!(min_at(0.51) < 0.0);
    }

    #[test]
    fn injective_on_sampled_disk() {
        // distinct grid points in D map to distinct values
        let mut pts = Vec::new();
        for i in 0..40 {
            for j in 0..40 {
                let z = c64(-0.975 + 0.05 * i as f64, -0.975 + 0.05 * j as f64);
                if z.norm() < 0.99 {
                    pts.push(eval_phi_car(z));
                }
            }
        }
        for a in 0..pts.len() {
            for b in a + 1..pts.len() {
                assert!((pts[a] - pts[b]).norm() > 1e-6);
            }
        }
    }

    #[test]
    fn csv_header_and_rows() {
        let csv = boundary_csv(8);
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "t,x,y");
        assert_eq!(lines.len(), 9);
        assert_eq!(lines[1], "0,2.50000000,0");
    }
}
