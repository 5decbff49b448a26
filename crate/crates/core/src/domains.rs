// SPDX-License-Identifier: MIT OR Apache-2.0

//! Comparison regions in the `w`-plane with a signed membership margin and a
//! boundary parametrization.
//!
//! Every domain reports `margin(w)`: positive inside, zero on the boundary,
//! negative outside. Membership is `margin > EPS_CONTAINS`. The margin is a
//! Euclidean distance for disks and half-planes and `1 - |psi^{-1}(w)|` for
//! generator images.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt::Write as _;

use crate::generators::{check_janowski, Generator};
use crate::{cardioid, fmt, Error, Result, C64};

/// Points whose margin does not exceed this are not members.
pub const EPS_CONTAINS: f64 = 1e-12;
/// A containment check still passes when the worst margin is above `-TOUCH_TOL`
/// (tangential contact at a sharp radius).
pub const TOUCH_TOL: f64 = 1e-7;
/// Half-length of the segments drawn for unbounded boundaries.
pub const UNBOUNDED_EXTENT: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskSpec {
    pub center: C64,
    pub radius: f64,
}

impl DiskSpec {
    pub fn new(center: C64, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::param("radius", radius, "radius > 0"));
        }
        Ok(Self { center, radius })
    }

    /// Image disk of `|z| <= r` under `(1 + A z)/(1 + B z)`.
    pub fn janowski(a: f64, b: f64, r: f64) -> Result<Self> {
        check_janowski(a, b)?;
        if !(r > 0.0 && r <= 1.0) {
            return Err(Error::param("r", r, "0 < r <= 1"));
        }
        let den = 1.0 - b * b * r * r;
        if den <= 0.0 {
            return Err(Error::param("r", r, "1 - B^2 r^2 > 0"));
        }
        Self::new(
            C64::new((1.0 - a * b * r * r) / den, 0.0),
            (a - b) * r / den,
        )
    }

    pub fn point(&self, t: f64) -> C64 {
        self.center + C64::from_polar(self.radius, t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DomainSpec {
    Cardioid,
    Disk(DiskSpec),
    /// `Re w > alpha`
    RightHalfPlane(f64),
    /// `Re w < beta`
    LeftHalfPlane(f64),
    /// `|arg w| < beta pi / 2`
    Sector(f64),
    /// `Re w > k |w - 1|`
    KStarlike(f64),
    /// `psi(D)`
    Image(Generator),
}

/// Kind tags accepted by [`make_domain`].
pub const KINDS: &[&str] = &[
    "cardioid",
    "disk",
    "janowski_disk",
    "janowski",
    "order_alpha",
    "right_half_plane",
    "m_beta",
    "left_half_plane",
    "sector",
    "ellipse_k_starlike",
    "k_starlike",
    "ram_singh",
    "padmanabhan",
    "janowski_m",
    "psi_c",
    "limacon",
    "nephroid",
    "psi_r",
    "sine",
    "lune",
    "rl",
    "sg",
    "cosh",
    "exp",
    "lemniscate",
    "cassinian",
    "bl",
];

fn arity(kind: &'static str, params: &[f64], n: usize) -> Result<()> {
    if params.len() != n {
        return Err(Error::param(
            kind,
            params.len() as f64,
            "wrong number of parameters",
        ));
    }
    Ok(())
}

/// Builds a domain from a kind tag and its real parameters.
pub fn make_domain(kind: &str, params: &[f64]) -> Result<DomainSpec> {
    let k = KINDS
        .iter()
        .find(|k| k.eq_ignore_ascii_case(kind))
        .copied()
        .ok_or_else(|| Error::unknown("domain kind", kind, KINDS))?;
    let p = params;
    let d = match k {
        "cardioid" => {
            arity(k, p, 0)?;
            DomainSpec::Cardioid
        }
        "disk" => match p.len() {
            2 => DomainSpec::Disk(DiskSpec::new(C64::new(p[0], 0.0), p[1])?),
            3 => DomainSpec::Disk(DiskSpec::new(C64::new(p[0], p[1]), p[2])?),
            _ => return Err(Error::param(k, p.len() as f64, "disk takes (x, r) or (x, y, r)")),
        },
        "janowski_disk" => {
            arity(k, p, 3)?;
            DomainSpec::Disk(DiskSpec::janowski(p[0], p[1], p[2])?)
        }
        "janowski" => {
            arity(k, p, 2)?;
            janowski_image(p[0], p[1])?
        }
        "order_alpha" => {
            arity(k, p, 1)?;
            unit_interval(p[0], "alpha")?;
            DomainSpec::RightHalfPlane(p[0])
        }
        "right_half_plane" => {
            arity(k, p, 1)?;
            DomainSpec::RightHalfPlane(p[0])
        }
        "m_beta" => {
            arity(k, p, 1)?;
            if !(p[0] > 1.0) {
                return Err(Error::param("beta", p[0], "beta > 1"));
            }
            DomainSpec::LeftHalfPlane(p[0])
        }
        "left_half_plane" => {
            arity(k, p, 1)?;
            DomainSpec::LeftHalfPlane(p[0])
        }
        "sector" => {
            arity(k, p, 1)?;
            if !(p[0] > 0.0 && p[0] <= 1.0) {
                return Err(Error::param("beta", p[0], "0 < beta <= 1"));
            }
            DomainSpec::Sector(p[0])
        }
        "ellipse_k_starlike" | "k_starlike" => {
            arity(k, p, 1)?;
            if !(p[0] >= 0.0 && p[0].is_finite()) {
                return Err(Error::param("k", p[0], "k >= 0"));
            }
            DomainSpec::KStarlike(p[0])
        }
        "ram_singh" => {
            arity(k, p, 1)?;
            unit_interval(p[0], "alpha")?;
            janowski_image(1.0 - p[0], 0.0)?
        }
        "padmanabhan" => {
            arity(k, p, 1)?;
            if !(p[0] > 0.0 && p[0] <= 1.0) {
                return Err(Error::param("alpha", p[0], "0 < alpha <= 1"));
            }
            janowski_image(p[0], -p[0])?
        }
        "janowski_m" => {
            arity(k, p, 1)?;
            if !(p[0] > 0.5) {
                return Err(Error::param("M", p[0], "M > 1/2"));
            }
            janowski_image(1.0, -(p[0] - 1.0) / p[0])?
        }
        "psi_c" => image0(k, p, Generator::CardioidC)?,
        "limacon" => image0(k, p, Generator::Limacon)?,
        "nephroid" => image0(k, p, Generator::Nephroid)?,
        "psi_r" => image0(k, p, Generator::Rational)?,
        "sine" => image0(k, p, Generator::Sine)?,
        "lune" => image0(k, p, Generator::Lune)?,
        "rl" => image0(k, p, Generator::RightLemniscate)?,
        "sg" => image0(k, p, Generator::Sigmoid)?,
        "cosh" => image0(k, p, Generator::Cosh)?,
        "exp" => {
            arity(k, p, 1)?;
            DomainSpec::Image(Generator::exponential(p[0])?)
        }
        "lemniscate" => {
            arity(k, p, 1)?;
            DomainSpec::Image(Generator::lemniscate(p[0])?)
        }
        "cassinian" => {
            arity(k, p, 1)?;
            DomainSpec::Image(Generator::cassinian(p[0])?)
        }
        "bl" => {
            arity(k, p, 1)?;
            DomainSpec::Image(Generator::booth(p[0])?)
        }
        _ => unreachable!("kind list and match arms are in sync"),
    };
    Ok(d)
}

fn image0(kind: &'static str, p: &[f64], g: Generator) -> Result<DomainSpec> {
    arity(kind, p, 0)?;
    Ok(DomainSpec::Image(g))
}

fn unit_interval(x: f64, name: &'static str) -> Result<()> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::param(name, x, "0 <= alpha < 1"));
    }
    Ok(())
}

/// `(1 + A z)/(1 + B z)` maps `D` onto a disk, or onto a half-plane when `B = -1`.
pub fn janowski_image(a: f64, b: f64) -> Result<DomainSpec> {
    check_janowski(a, b)?;
    if b == -1.0 {
        Ok(DomainSpec::RightHalfPlane((1.0 - a) / 2.0))
    } else {
        Ok(DomainSpec::Disk(DiskSpec::janowski(a, b, 1.0)?))
    }
}

/// Center `lambda` and semi-axes `(a, b)` of the ellipse bounding the
/// k-starlike region for `k > 1`.
pub fn k_starlike_ellipse(k: f64) -> Result<(f64, f64, f64)> {
    if !(k > 1.0) {
        return Err(Error::param("k", k, "k > 1"));
    }
    let d = k * k - 1.0;
    Ok((k * k / d, k / d, 1.0 / d.sqrt()))
}

impl DomainSpec {
    pub fn label(&self) -> String {
        match self {
            DomainSpec::Cardioid => "Omega_car".into(),
            DomainSpec::Disk(d) => format!(
                "disk |w - {}| < {}",
                fmt_c(d.center),
                fmt::sig(d.radius, 6)
            ),
            DomainSpec::RightHalfPlane(a) => format!("Re w > {}", fmt::sig(*a, 6)),
            DomainSpec::LeftHalfPlane(b) => format!("Re w < {}", fmt::sig(*b, 6)),
            DomainSpec::Sector(b) => format!("|arg w| < {} pi/2", fmt::sig(*b, 6)),
            DomainSpec::KStarlike(k) => format!("Re w > {} |w - 1|", fmt::sig(*k, 6)),
            DomainSpec::Image(g) => format!("{}(D)", g.tag()),
        }
    }

    pub fn is_bounded(&self) -> bool {
        match self {
            DomainSpec::RightHalfPlane(_) | DomainSpec::LeftHalfPlane(_) | DomainSpec::Sector(_) => {
                false
            }
            DomainSpec::KStarlike(k) => *k > 1.0,
            _ => true,
        }
    }

    /// Signed margin: positive inside, zero on the boundary.
    pub fn margin(&self, w: C64) -> f64 {
        match *self {
            DomainSpec::Cardioid => cardioid::margin(w),
            DomainSpec::Disk(d) => d.radius - (w - d.center).norm(),
            DomainSpec::RightHalfPlane(a) => w.re - a,
            DomainSpec::LeftHalfPlane(b) => b - w.re,
            DomainSpec::Sector(beta) => {
                let m = w.norm();
                if m == 0.0 {
                    return 0.0;
                }
                m * (beta * FRAC_PI_2 - w.arg().abs()).sin()
            }
            DomainSpec::KStarlike(k) => w.re - k * (w - 1.0).norm(),
            DomainSpec::Image(g) => g.margin(w),
        }
    }

    pub fn contains(&self, w: C64) -> bool {
        self.margin(w) > EPS_CONTAINS
    }

    /// An interior point used for the boundary/interior consistency checks.
    pub fn reference_point(&self) -> C64 {
        match *self {
            DomainSpec::Disk(d) => d.center,
            DomainSpec::RightHalfPlane(a) => C64::new(a + 1.0, 0.0),
            DomainSpec::LeftHalfPlane(b) => C64::new(b - 1.0, 0.0),
            DomainSpec::KStarlike(k) if k > 1.0 => {
                C64::new(k_starlike_ellipse(k).expect("k > 1").0, 0.0)
            }
            _ => C64::new(1.0, 0.0),
        }
    }

    /// Boundary point for `t` in `[0, 2 pi)`. Unbounded boundaries are
    /// traced over a window of half-length [`UNBOUNDED_EXTENT`].
    pub fn boundary(&self, t: f64) -> C64 {
        let e = UNBOUNDED_EXTENT;
        // s runs over [-1, 1) as t runs over [0, 2 pi)
        let s = t / PI - 1.0;
        match *self {
            DomainSpec::Cardioid => cardioid::boundary_point(t),
            DomainSpec::Disk(d) => d.point(t),
            DomainSpec::RightHalfPlane(a) => C64::new(a, e * s),
            DomainSpec::LeftHalfPlane(b) => C64::new(b, -e * s),
            DomainSpec::Sector(beta) => {
                let ang = beta * FRAC_PI_2;
                if s < 0.0 {
                    C64::from_polar(-e * s, ang)
                } else {
                    C64::from_polar(e * s, -ang)
                }
            }
            DomainSpec::KStarlike(k) => {
                if k > 1.0 {
                    let (lam, a, b) = k_starlike_ellipse(k).expect("k > 1");
                    C64::new(lam + a * t.cos(), b * t.sin())
                } else {
                    let y = -e * s;
                    let x = if k == 1.0 {
                        (1.0 + y * y) / 2.0
                    } else {
                        let q = 1.0 - k * k;
                        (-k * k + k * (1.0 + q * y * y).sqrt()) / q
                    };
                    C64::new(x, y)
                }
            }
            DomainSpec::Image(g) => g.boundary(t),
        }
    }

    pub fn boundary_points(&self, n: usize) -> Vec<C64> {
        (0..n)
            .map(|k| self.boundary(TAU * k as f64 / n as f64))
            .collect()
    }

    /// CSV rows `t,x,y` for `n` equally spaced parameters.
    pub fn boundary_csv(&self, n: usize) -> String {
        let mut s = String::from("t,x,y\n");
        for k in 0..n {
            let t = TAU * k as f64 / n as f64;
            let w = self.boundary(t);
            let _ = writeln!(s, "{},{},{}", fmt::sig9(t), fmt::sig9(w.re), fmt::sig9(w.im));
        }
        s
    }

    /// SVG `<polyline>` of the boundary in plane coordinates.
    pub fn boundary_svg(&self, n: usize) -> String {
        svg_polyline(&self.boundary_points(n), self.is_bounded(), "black")
    }
}

fn fmt_c(c: C64) -> String {
    if c.im == 0.0 {
        fmt::sig(c.re, 6)
    } else {
        format!("({}, {})", fmt::sig(c.re, 6), fmt::sig(c.im, 6))
    }
}

/// `<polyline>` with 3-decimal coordinates. Closed curves repeat the first
/// vertex at the end.
pub fn svg_polyline(points: &[C64], closed: bool, stroke: &str) -> String {
    let mut s = String::from("<polyline fill=\"none\" stroke=\"");
    s.push_str(stroke);
    s.push_str("\" stroke-width=\"0.01\" points=\"");
    let mut first = true;
    let tail = if closed { points.first() } else { None };
    for p in points.iter().chain(tail) {
        if !first {
            s.push(' ');
        }
        first = false;
        let _ = write!(s, "{:.3},{:.3}", p.re, p.im);
    }
    s.push_str("\"/>");
    s
}

/// Outcome of a sampled containment check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Containment {
    pub ok: bool,
    pub samples: usize,
    pub worst_margin: f64,
    /// Sampled point with the worst margin.
    pub witness: C64,
    /// Closed-form verdict where one is available.
    pub closed_form: Option<bool>,
}

fn sampled_containment<I: Iterator<Item = C64>>(points: I, outer: &DomainSpec, samples: usize) -> Containment {
    let mut worst = f64::INFINITY;
    let mut witness = C64::new(f64::NAN, f64::NAN);
    for p in points {
        let m = outer.margin(p);
        if m < worst || witness.re.is_nan() {
            worst = m;
            witness = p;
        }
    }
    Containment {
        ok: worst >= -TOUCH_TOL,
        samples,
        worst_margin: worst,
        witness,
        closed_form: None,
    }
}

/// Samples the circle of `disk` at `n >= 64` points against `d`. For
/// `d = Omega_car` with a real center the verdict is cross-checked against
/// the inner radius `r_a`.
pub fn disk_in_domain(disk: &DiskSpec, d: &DomainSpec, n: usize) -> Result<Containment> {
    if n < 64 {
        return Err(Error::param("n", n as f64, "n >= 64"));
    }
    let mut c = sampled_containment(
        (0..n).map(|k| disk.point(TAU * k as f64 / n as f64)),
        d,
        n,
    );
    if *d == DomainSpec::Cardioid && disk.center.im == 0.0 {
        c.closed_form = Some(match cardioid::inner_outer_radii(disk.center.re) {
            Ok((ra, _)) => disk.radius <= ra + TOUCH_TOL,
            Err(_) => false,
        });
    }
    Ok(c)
}

/// Samples the boundary of a bounded `inner` at `n >= 256` points against `outer`.
pub fn domain_in_domain(inner: &DomainSpec, outer: &DomainSpec, n: usize) -> Result<Containment> {
    if n < 256 {
        return Err(Error::param("n", n as f64, "n >= 256"));
    }
    if !inner.is_bounded() {
        return Err(Error::param(
            "inner",
            f64::NAN,
            "inner domain must be bounded",
        ));
    }
    Ok(sampled_containment(
        (0..n).map(|k| inner.boundary(TAU * k as f64 / n as f64)),
        outer,
        n,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    fn all_kinds() -> Vec<DomainSpec> {
        let mut v = vec![
            DomainSpec::Cardioid,
            make_domain("disk", &[1.0, 0.5]).unwrap(),
            make_domain("janowski_disk", &[1.0, -0.5, 0.7]).unwrap(),
            make_domain("order_alpha", &[0.25]).unwrap(),
            make_domain("m_beta", &[2.5]).unwrap(),
            make_domain("sector", &[0.7]).unwrap(),
            make_domain("k_starlike", &[5.0 / 3.0]).unwrap(),
            make_domain("k_starlike", &[1.0]).unwrap(),
            make_domain("k_starlike", &[0.5]).unwrap(),
            make_domain("ram_singh", &[0.5]).unwrap(),
            make_domain("padmanabhan", &[0.3]).unwrap(),
            make_domain("janowski_m", &[1.2]).unwrap(),
        ];
        for kind in ["psi_c", "limacon", "nephroid", "psi_r", "sine", "lune", "rl", "sg", "cosh"] {
            v.push(make_domain(kind, &[]).unwrap());
        }
        v.push(make_domain("exp", &[0.2]).unwrap());
        v.push(make_domain("lemniscate", &[0.5]).unwrap());
        v.push(make_domain("cassinian", &[0.75]).unwrap());
        v.push(make_domain("cassinian", &[1.0]).unwrap());
        v.push(make_domain("bl", &[0.4]).unwrap());
        v
    }

    #[test]
    fn boundary_and_interior_consistency() {
        // midpoint parameters avoid the exact corner points of the lune
        for d in all_kinds() {
            let r = d.reference_point();
            assert!(d.contains(r), "{}", d.label());
            for k in 0..256 {
                let t = TAU * (k as f64 + 0.5) / 256.0;
                let b = d.boundary(t);
                assert!(!d.contains(b), "{} t={t} b={b} m={}", d.label(), d.margin(b));
                let step = (r - b) / (r - b).norm() * 1e-6;
                let inside = b + step;
                assert!(d.contains(inside), "{} t={t} m={}", d.label(), d.margin(inside));
            }
        }
    }

    #[test]
    fn ellipse_axes() {
        let (lam, a, b) = k_starlike_ellipse(5.0 / 3.0).unwrap();
        assert!((lam - 25.0 / 16.0).abs() < 1e-15);
        assert!((a - 15.0 / 16.0).abs() < 1e-15);
        assert!((b - 0.75).abs() < 1e-15);
        assert!(k_starlike_ellipse(1.0).is_err());
    }

    #[test]
    fn make_domain_examples() {
        assert!(matches!(
            make_domain("janowski_disk", &[1.0, -1.0, 1.0]),
            Err(Error::Parameter { name: "r", .. })
        ));
        let s = make_domain("sector", &[1.0]).unwrap();
        assert!(s.contains(c64(1e-3, 100.0)));
        assert!(!s.contains(c64(-1e-3, 1.0)));
        assert!(make_domain("exp", &[1.0]).is_err());
        assert!(make_domain("janowski_m", &[0.5]).is_err());
        assert!(make_domain("m_beta", &[1.0]).is_err());
        assert!(matches!(make_domain("hexagon", &[]), Err(Error::Unknown { .. })));
    }

    #[test]
    fn contains_examples() {
        assert!(make_domain("exp", &[0.0]).unwrap().contains(c64(1.0, 0.0)));
        let b0 = 0.7412918698;
        let sector = DomainSpec::Sector(b0);
        let w = c64(0.25, 0.25 * (b0 * FRAC_PI_2).tan());
        assert!(!sector.contains(w));
        assert!(sector.margin(w).abs() < 1e-15);
        assert!(!make_domain("m_beta", &[2.5]).unwrap().contains(c64(2.5, 0.0)));
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(DomainSpec::Cardioid.boundary(PI), c64(0.5, 0.0));
        assert_eq!(make_domain("psi_c", &[]).unwrap().boundary(0.0), c64(3.0, 0.0));
        assert_eq!(make_domain("disk", &[1.0, 0.5]).unwrap().boundary(0.0), c64(1.5, 0.0));
    }

    #[test]
    fn disk_examples() {
        let d = DiskSpec::new(c64(1.0, 0.0), 0.49).unwrap();
        let c = disk_in_domain(&d, &DomainSpec::Cardioid, 2048).unwrap();
        assert!(c.ok && c.closed_form == Some(true));
        let d = DiskSpec::new(c64(1.0, 0.0), 0.51).unwrap();
        let c = disk_in_domain(&d, &DomainSpec::Cardioid, 2048).unwrap();
        assert!(!c.ok && c.closed_form == Some(false));
        assert!((c.witness - c64(0.49, 0.0)).norm() < 1e-12);
        assert!(disk_in_domain(&d, &DomainSpec::Cardioid, 10).is_err());
    }

    #[test]
    fn domain_examples() {
        let car = DomainSpec::Cardioid;
        let g53 = DomainSpec::KStarlike(5.0 / 3.0);
        assert!(domain_in_domain(&g53, &car, 2048).unwrap().ok);
        assert!(!domain_in_domain(&DomainSpec::KStarlike(1.6), &car, 2048).unwrap().ok);
        let a0 = (std::f64::consts::E - 2.0) / (2.0 * (std::f64::consts::E - 1.0));
        assert!(domain_in_domain(&make_domain("exp", &[a0]).unwrap(), &car, 4096).unwrap().ok);
        assert!(!domain_in_domain(&make_domain("exp", &[0.19]).unwrap(), &car, 4096).unwrap().ok);
        for kind in ["sg", "cosh", "psi_r"] {
            let d = make_domain(kind, &[]).unwrap();
            assert!(domain_in_domain(&d, &car, 4096).unwrap().ok, "{kind}");
        }
        let m0 = cardioid::self_centered_fixed_point();
        let outer = make_domain("disk", &[m0, m0]).unwrap();
        assert!(domain_in_domain(&car, &outer, 4096).unwrap().ok);
        assert!(domain_in_domain(&DomainSpec::Sector(0.5), &car, 256).is_err());
    }

    #[test]
    fn monotone_families() {
        let pairs = [(0.9, 0.1), (0.7, 0.3), (0.5, 0.0), (0.6, 0.59), (0.99, 0.5)];
        for (a1, a2) in pairs {
            let e1 = make_domain("exp", &[a1]).unwrap();
            let e2 = make_domain("exp", &[a2]).unwrap();
            assert!(domain_in_domain(&e1, &e2, 1024).unwrap().ok);
            assert!(!domain_in_domain(&e2, &e1, 1024).unwrap().ok);
            let l1 = make_domain("lemniscate", &[a1]).unwrap();
            let l2 = make_domain("lemniscate", &[a2]).unwrap();
            assert!(domain_in_domain(&l1, &l2, 1024).unwrap().ok);
        }
        for (k1, k2) in [(3.0, 2.0), (2.0, 5.0 / 3.0), (5.0, 1.5), (1.7, 1.1), (10.0, 0.5)] {
            let g1 = DomainSpec::KStarlike(k1);
            let g2 = DomainSpec::KStarlike(k2);
            assert!(domain_in_domain(&g1, &g2, 1024).unwrap().ok);
        }
    }

    #[test]
    fn csv_and_svg() {
        let d = make_domain("disk", &[1.0, 0.5]).unwrap();
        let csv = d.boundary_csv(4);
        assert_eq!(csv.lines().next(), Some("t,x,y"));
        assert_eq!(csv.lines().count(), 5);
        let svg = d.boundary_svg(4);
        assert!(svg.starts_with("<polyline"));
        assert!(svg.contains("1.500,0.000 1.000,0.500"));
    }
}
