// SPDX-License-Identifier: MIT OR Apache-2.0

//! Polygon utilities used as cross-check oracles: even–odd and winding
//! membership against a sampled closed curve, and distance to a polyline.

use std::f64::consts::TAU;

use crate::C64;

/// `n` equally spaced parameters `t_k = 2 pi k / n`.
pub fn circle_params(n: usize) -> impl Iterator<Item = f64> + Clone {
    (0..n).map(move |k| TAU * k as f64 / n as f64)
}

/// Samples the closed curve `curve(t)` at `n` equally spaced parameters.
pub fn sample_closed<F: Fn(f64) -> C64>(curve: F, n: usize) -> Vec<C64> {
    circle_params(n).map(curve).collect()
}

/// Even–odd rule for a closed polygon (last vertex joins the first).
pub fn even_odd_contains(poly: &[C64], w: C64) -> bool {
    let n = poly.len();
    let mut inside = false;
    let mut j = n - 1;
    for i in 0..n {
        let (a, b) = (poly[i], poly[j]);
        if (a.im > w.im) != (b.im > w.im) {
            let x = (b.re - a.re) * (w.im - a.im) / (b.im - a.im) + a.re;
            if w.re < x {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}

/// Winding number of a closed polygon around `w`.
pub fn winding_number(poly: &[C64], w: C64) -> i32 {
    let n = poly.len();
    let mut wn = 0;
    for i in 0..n {
        let a = poly[i] - w;
        let b = poly[(i + 1) % n] - w;
        let cross = a.re * b.im - a.im * b.re;
        if a.im <= 0.0 {
            if b.im > 0.0 && cross > 0.0 {
                wn += 1;
            }
        } else if b.im <= 0.0 && cross < 0.0 {
            wn -= 1;
        }
    }
    wn
}

/// Distance from `w` to the segment `[a, b]`.
pub fn segment_distance(a: C64, b: C64, w: C64) -> f64 {
    let d = b - a;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return (w - a).norm();
    }
    let t = (((w - a) * d.conj()).re / len2).clamp(0.0, 1.0);
    (w - (a + d * t)).norm()
}

/// Distance from `w` to a closed polyline.
pub fn polyline_distance(poly: &[C64], w: C64) -> f64 {
    let n = poly.len();
    (0..n)
        .map(|i| segment_distance(poly[i], poly[(i + 1) % n], w))
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    fn square() -> Vec<C64> {
        vec![c64(0., 0.), c64(1., 0.), c64(1., 1.), c64(0., 1.)]
    }

    #[test]
    fn square_membership() {
        let s = square();
        assert!(even_odd_contains(&s, c64(0.5, 0.5)));
        assert!(!even_odd_contains(&s, c64(1.5, 0.5)));
        assert_eq!(winding_number(&s, c64(0.5, 0.5)), 1);
        assert_eq!(winding_number(&s, c64(-0.5, 0.5)), 0);
        let rev: Vec<_> = s.iter().rev().copied().collect();
        assert_eq!(winding_number(&rev, c64(0.5, 0.5)), -1);
    }

    #[test]
    fn distances() {
        let s = square();
        assert!((polyline_distance(&s, c64(0.5, 0.5)) - 0.5).abs() < 1e-15);
        assert!((polyline_distance(&s, c64(2.0, 1.0)) - 1.0).abs() < 1e-15);
        assert!((segment_distance(c64(0., 0.), c64(0., 0.), c64(3., 4.)) - 5.0).abs() < 1e-15);
    }

    #[test]
    fn sampled_circle() {
        let c = sample_closed(|t| C64::from_polar(1.0, t), 512);
        assert_eq!(c.len(), 512);
        assert!(even_odd_contains(&c, c64(0.3, -0.2)));
        assert_eq!(winding_number(&c, c64(0.0, 0.0)), 1);
        assert!(!even_odd_contains(&c, c64(1.01, 0.0)));
    }
}
