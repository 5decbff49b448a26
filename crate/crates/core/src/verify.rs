// SPDX-License-Identifier: MIT OR Apache-2.0

//! Independent numerical oracles.
//!
//! Containment of `w(D_r)` in a domain is decided on the circle `|z| = r`
//! (`t_k = 2 pi k / n`) with a 64-point interior spot check, using the signed
//! margins of [`crate::domains`]. Points within [`TOUCH_TOL`] of the boundary
//! pass, since sharp radii touch tangentially. Radii come from bisection on
//! that predicate; inclusion thresholds from bisection on the family
//! parameter with [`domain_in_domain`].

use std::f64::consts::{PI, SQRT_2, TAU};
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cardioid;
use crate::domains::{domain_in_domain, janowski_image, DiskSpec, DomainSpec, TOUCH_TOL};
use crate::fmt::{opt9, sig9};
use crate::functions::{monomial_image_disk, Chi, Extremal, FunctionSpec};
use crate::generators::Generator;
use crate::radii;
use crate::series::{monomial_member, PowerSeries};
use crate::{c64, Error, Result, C64};

/// Default sample count on `|z| = r`.
pub const DEFAULT_SAMPLES: usize = 4096;
/// Default bisection tolerance of [`subordination_radius`].
pub const DEFAULT_TOL: f64 = 1e-6;
/// Oracle and formula must agree to this at the default sampling.
pub const ORACLE_TOL: f64 = 2e-3;
/// Truncation residual bound `|a_N| r^N` for series-based checks.
pub const TRUNCATION_BOUND: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub claim: String,
    pub method: &'static str,
    pub samples: usize,
    pub passed: bool,
    /// Sample point behind the verdict; always present on failure.
    pub witness: Option<C64>,
    pub measured_value: Option<f64>,
    pub expected_value: Option<f64>,
    /// Known discrepancy or limitation; flagged failures do not count.
    pub flag: Option<String>,
}

impl VerificationReport {
    fn new(claim: impl Into<String>, method: &'static str, samples: usize) -> Self {
        VerificationReport {
            claim: claim.into(),
            method,
            samples,
            passed: true,
            witness: None,
            measured_value: None,
            expected_value: None,
            flag: None,
        }
    }

    fn verdict_at(mut self, passed: bool, witness: C64) -> Self {
        self.passed = passed;
        self.witness = Some(witness);
        self
    }

    fn measured(mut self, m: f64) -> Self {
        self.measured_value = Some(m);
        self
    }

    fn expected(mut self, e: f64) -> Self {
        self.expected_value = Some(e);
        self
    }

    fn flagged(mut self, flag: impl Into<String>) -> Self {
        self.flag = Some(flag.into());
        self
    }

    pub fn verdict(&self) -> &'static str {
        if self.passed {
            "pass"
        } else {
            "fail"
        }
    }

    /// A failure that is not explained by a recorded flag.
    pub fn is_blocking(&self) -> bool {
        !self.passed && self.flag.is_none()
    }

    pub fn to_line(&self) -> String {
        let mut s = format!("{:<4} {} [{}, n={}]", self.verdict().to_uppercase(), self.claim, self.method, self.samples);
        if let Some(m) = self.measured_value {
            let _ = write!(s, " measured={}", sig9(m));
        }
        if let Some(e) = self.expected_value {
            let _ = write!(s, " expected={}", sig9(e));
        }
        if let Some(w) = self.witness.filter(|_| !self.passed) {
            let _ = write!(s, " witness={}", fmt_c(w));
        }
        if let Some(f) = &self.flag {
            let _ = write!(s, " flag: {f}");
        }
        s
    }

    pub const CSV_HEADER: &'static str =
        "claim,method,samples,verdict,witness_re,witness_im,measured,expected,flag";

    pub fn to_csv(&self) -> String {
        let (wr, wi) = self
            .witness
            .map(|w| (sig9(w.re), sig9(w.im)))
            .unwrap_or_else(|| ("-".into(), "-".into()));
        format!(
            "{},{},{},{},{},{},{},{},{}",
            csv_field(&self.claim),
            self.method,
            self.samples,
            self.verdict(),
            wr,
            wi,
            opt9(self.measured_value),
            opt9(self.expected_value),
            csv_field(self.flag.as_deref().unwrap_or("")),
        )
    }
}

/// `a+bi` with nine significant digits in each part.
pub fn fmt_c(z: C64) -> String {
    let im = sig9(z.im.abs());
    if z.im < 0.0 {
        format!("{}-{}i", sig9(z.re), im)
    } else {
        format!("{}+{}i", sig9(z.re), im)
    }
}

pub(crate) fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

// ---------------------------------------------------------------------------
// Containment of w(D_r)

/// Worst sampled margin of `w(D_r)` in `d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleCheck {
    pub ok: bool,
    pub worst_margin: f64,
    /// `z` with the worst margin.
    pub witness: C64,
}

fn margin_at(spec: &FunctionSpec, d: &DomainSpec, z: C64) -> f64 {
    let w = spec.w(z);
    if w.is_finite() {
        let m = d.margin(w);
        if m.is_nan() {
            f64::NEG_INFINITY
        } else {
            m
        }
    } else {
        f64::NEG_INFINITY
    }
}

/// Circle samples plus the interior spot check, without precondition checks.
pub fn circle_check(spec: &FunctionSpec, r: f64, d: &DomainSpec, n: usize) -> CircleCheck {
    let mut worst = f64::INFINITY;
    let mut witness = c64(r, 0.0);
    let circle = (0..n).map(|k| C64::from_polar(r, TAU * k as f64 / n as f64));
    let interior = (0..64).map(|k| {
        let rho = r * ((k / 8) as f64 + 1.0) / 9.0;
        C64::from_polar(rho, TAU * (k % 8) as f64 / 8.0)
    });
    for z in circle.chain(interior) {
        let m = margin_at(spec, d, z);
        if m < worst {
            worst = m;
            witness = z;
        }
    }
    CircleCheck {
        ok: worst >= -TOUCH_TOL,
        worst_margin: worst,
        witness,
    }
}

/// Does `spec.w` map `D_r` into `d`?
pub fn image_in_domain(
    spec: &FunctionSpec,
    r: f64,
    d: &DomainSpec,
    n: usize,
) -> Result<VerificationReport> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::param("r", r, "0 < r <= 1"));
    }
    if n < 256 {
        return Err(Error::param("n", n as f64, "n >= 256"));
    }
    let c = circle_check(spec, r, d, n);
    Ok(VerificationReport::new(
        format!("{}(D_{}) in {}", spec.name, sig9(r), d.label()),
        "circle_sampling",
        n,
    )
    .verdict_at(c.ok, c.witness)
    .measured(c.worst_margin))
}

/// Result of a radius bisection: `lo` passes, `hi` fails.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleRadius {
    pub value: f64,
    pub lo: f64,
    pub hi: f64,
    /// Worst point just past the radius (at `hi`), or at 1 if the radius is 1.
    pub witness: C64,
}

/// Largest `r` with `spec.w(D_r)` in `d`, to within `tol`.
pub fn subordination_radius(
    spec: &FunctionSpec,
    d: &DomainSpec,
    tol: f64,
    n: usize,
) -> Result<OracleRadius> {
    let top = 1.0 - 1e-9;
    let at_top = circle_check(spec, top, d, n);
    if at_top.ok {
        return Ok(OracleRadius {
            value: 1.0,
            lo: top,
            hi: 1.0,
            witness: at_top.witness,
        });
    }
    let bottom = 1e-4;
    let at_bottom = circle_check(spec, bottom, d, n);
    if !at_bottom.ok {
        return Err(Error::NoPositiveRadius(bottom));
    }
    let (mut lo, mut hi, mut witness) = (bottom, top, at_top.witness);
    let (mut lo_ok, mut hi_ok) = (true, false);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let c = circle_check(spec, mid, d, n);
        if c.ok {
            lo = mid;
            lo_ok = true;
        } else {
            hi = mid;
            hi_ok = false;
            witness = c.witness;
        }
    }
    assert!(lo_ok && !hi_ok && hi - lo <= tol, "bisection bracket lost");
    Ok(OracleRadius {
        value: 0.5 * (lo + hi),
        lo,
        hi,
        witness,
    })
}

/// Bisection on a boolean predicate with `pred(lo) != pred(hi)`.
pub fn bisect_predicate<F: FnMut(f64) -> bool>(mut pred: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let at_lo = pred(lo);
    debug_assert_ne!(at_lo, pred(hi), "predicate does not change on [{lo}, {hi}]");
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if pred(mid) == at_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

// ---------------------------------------------------------------------------
// Sharpness

/// Touch check: `|z| = r_star`, `w(z)` equals `expected` to 1e-9 and
/// `expected` lies on the boundary of `d`.
pub fn sharpness_touch(
    spec: &FunctionSpec,
    r_star: f64,
    z: C64,
    expected: C64,
    d: &DomainSpec,
) -> VerificationReport {
    let w = spec.w(z);
    let dist = (w - expected).norm();
    let on_circle = (z.norm() - r_star).abs() < 1e-12;
    let on_boundary = d.margin(expected).abs() < TOUCH_TOL;
    VerificationReport::new(
        format!(
            "{} at z = {} equals {} on the boundary of {}",
            spec.name,
            fmt_c(z),
            fmt_c(expected),
            d.label()
        ),
        "sharpness_touch",
        1,
    )
    .verdict_at(on_circle && on_boundary && dist < 1e-9, z)
    .measured(dist)
}

/// One touch display: extremal, radius, touch point, value and domain.
pub struct Touch {
    pub spec: FunctionSpec,
    pub r: f64,
    pub z: C64,
    pub w: C64,
    pub domain: DomainSpec,
}

fn touch(spec: FunctionSpec, r: f64, z: C64, w: f64, domain: DomainSpec) -> Touch {
    Touch {
        spec,
        r,
        z,
        w: c64(w, 0.0),
        domain,
    }
}

/// `w = (1 + 4z)/(1 + 2z)`, which is `1 + z tau2''/tau2'` for `tau2 = z + z^2`
/// and also `z g'/g` for `g = z + 2z^2`. Built directly since `|a| = 2`.
pub fn tau2_convexity() -> FunctionSpec {
    FunctionSpec::new(
        "1+z*tau2''/tau2'",
        Extremal::Monomial { n: 2, a: c64(2.0, 0.0) },
        "second partial sum of the Koebe function",
    )
}

/// Every touch display used as a sharpness witness.
pub fn touch_catalogue() -> Result<Vec<Touch>> {
    let car = DomainSpec::Cardioid;
    let fcar = || FunctionSpec::new("f_car", Extremal::FCar, "f_car");
    let mut t = Vec::new();
    for class in [
        radii::TableClass::Cassinian(1.0),
        radii::TableClass::Lemniscate(0.25),
        radii::TableClass::Exponential(0.0),
        radii::TableClass::RightLemniscate,
        radii::TableClass::CardioidC,
        radii::TableClass::Limacon,
        radii::TableClass::Lune,
        radii::TableClass::Sine,
        radii::TableClass::Nephroid,
        radii::TableClass::Booth(0.5),
        radii::TableClass::MBeta(2.0),
        radii::TableClass::Starlike,
        radii::TableClass::Convex,
    ] {
        let r = radii::scar_radius_of_class(class)?.value;
        // the convex and M(beta) extremals exit on the right
        let (z, w) = match class {
            radii::TableClass::Convex => (r, 2.5),
            radii::TableClass::MBeta(_) => (r, 0.5),
            _ => (-r, 0.5),
        };
        t.push(touch(class.extremal()?, r, c64(z, 0.0), w, car));
    }
    let jr = radii::janowski_scar_radius(0.5, -0.5)?.value;
    t.push(touch(FunctionSpec::janowski(0.5, -0.5)?, jr, c64(-jr, 0.0), 0.5, car));
    // partial sums of f_car, the Koebe function and the half-plane map
    let tau2 = FunctionSpec::new("tau2", Extremal::Tau2, "second partial sum of f_car");
    t.push(touch(tau2.clone(), 0.5, c64(-0.5, 0.0), 0.0, DomainSpec::RightHalfPlane(0.0)));
    t.push(touch(tau2.clone(), 1.0 / 3.0, c64(-1.0 / 3.0, 0.0), 0.5, car));
    t.push(touch(tau2_convexity(), 0.25, c64(-0.25, 0.0), 0.0, DomainSpec::RightHalfPlane(0.0)));
    t.push(touch(tau2_convexity(), 1.0 / 6.0, c64(-1.0 / 6.0, 0.0), 0.5, car));
    t.push(touch(FunctionSpec::new("koebe", Extremal::Koebe, "Koebe"), 1.0 / 3.0, c64(-1.0 / 3.0, 0.0), 0.5, car));
    t.push(touch(FunctionSpec::new("half_plane", Extremal::HalfPlane, "l"), 0.6, c64(0.6, 0.0), 2.5, car));
    // f_car against the target regions
    for (target, w) in [
        (radii::Target::Lemniscate(0.0), SQRT_2),
        (radii::Target::Nephroid, 5.0 / 3.0),
        (radii::Target::RamSingh(0.5), 1.5),
        (radii::Target::MBeta(2.0), 2.0),
        (radii::Target::Sine, 1.0 + 1f64.sin()),
        (radii::Target::Cosh, 1f64.cosh()),
    ] {
        let r = radii::radius_within_scar(target)?.value;
        t.push(touch(fcar(), r, c64(r, 0.0), w, target.domain()?));
    }
    let s4 = radii::radius_within_scar(radii::Target::Rational)?.value;
    t.push(touch(fcar(), s4, c64(-s4, 0.0), 2.0 * (SQRT_2 - 1.0), radii::Target::Rational.domain()?));
    for chi in Chi::ALL {
        for i in 1..=3u8 {
            let r = radii::ratio_class_radius(i, chi)?.value;
            t.push(touch(FunctionSpec::ratio(i, chi)?, r, chi.touch_direction() * r, 0.5, car));
        }
    }
    Ok(t)
}

pub fn sharpness_suite() -> Result<Vec<VerificationReport>> {
    Ok(touch_catalogue()?
        .iter()
        .map(|t| sharpness_touch(&t.spec, t.r, t.z, t.w, &t.domain))
        .collect())
}

// ---------------------------------------------------------------------------
// Convolution

/// `h = (f * g)(rho z)/rho`, checked on `|z| = r_test` against `Omega_car`.
pub fn convolution_membership_check(
    f: &PowerSeries,
    g: &PowerSeries,
    rho: f64,
    n: usize,
    r_test: f64,
) -> Result<VerificationReport> {
    if !(r_test > 0.0 && r_test < 1.0) {
        return Err(Error::param("r_test", r_test, "0 < r_test < 1"));
    }
    if f.order() < 32 {
        return Err(Error::param("N", f.order() as f64, "N >= 32"));
    }
    let h = f.hadamard(g)?.dilate(rho)?;
    let big_n = h.order();
    let tail = h.coeff(big_n).norm() * r_test.powi(big_n as i32);
    let mut worst = f64::INFINITY;
    let mut witness = c64(r_test, 0.0);
    for k in 0..n {
        let z = C64::from_polar(r_test, TAU * k as f64 / n as f64);
        let w = h.w_at(z);
        let m = if w.is_finite() { cardioid::margin(w) } else { f64::NEG_INFINITY };
        if m < worst {
            worst = m;
            witness = z;
        }
    }
    let mut rep = VerificationReport::new(
        format!("convolution dilated by {} on |z| = {} in Omega_car (tail {})", sig9(rho), sig9(r_test), sig9(tail)),
        "series_sampling",
        n,
    )
    .verdict_at(worst >= -TOUCH_TOL, witness)
    .measured(worst);
    if tail >= TRUNCATION_BOUND {
        rep = rep.flagged("truncation-limited");
    }
    Ok(rep)
}

/// Largest `rho` for which the convolution check passes.
pub fn convolution_radius(f: &PowerSeries, g: &PowerSeries, n: usize, r_test: f64) -> Result<f64> {
    let ok = |rho: f64| {
        convolution_membership_check(f, g, rho, n, r_test)
            .map(|r| r.passed)
            .unwrap_or(false)
    };
    if ok(1.0) {
        return Ok(1.0);
    }
    if !ok(1e-4) {
        return Err(Error::NoPositiveRadius(1e-4));
    }
    Ok(bisect_predicate(ok, 1e-4, 1.0, DEFAULT_TOL))
}

pub fn convolution_suite(n: usize) -> Result<Vec<VerificationReport>> {
    let order = 64;
    let k = PowerSeries::koebe(order);
    let rho = radii::convolution_radii().starlike_pair;
    let mut out = vec![
        convolution_membership_check(&k, &k, rho, n, 0.999)?,
        invert(convolution_membership_check(&k, &k, rho + 0.02, n, 0.999)?),
        convolution_membership_check(&PowerSeries::f_car(order), &PowerSeries::half_plane(order), 0.5, n, 0.999)?,
        convolution_membership_check(&PowerSeries::identity(order), &k, 0.5, n, 0.999)?,
    ];
    out[1].claim = format!("not: {}", out[1].claim);
    Ok(out)
}

/// The claim that a check fails; used for the perturbed thresholds.
fn invert(mut r: VerificationReport) -> VerificationReport {
    r.passed = !r.passed;
    r.claim = format!("not: {}", r.claim);
    r
}

// ---------------------------------------------------------------------------
// Inclusion thresholds

/// A one-parameter family of inclusions with a threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Threshold {
    /// Largest `alpha` with `Omega_car` in `Re w > alpha`.
    OrderAlpha,
    /// Smallest `beta` with `Omega_car` in the sector of order `beta`.
    Sector,
    /// Smallest `k` with the k-starlike region in `Omega_car`.
    KStarlike,
    /// Smallest `alpha` with the exponential image in `Omega_car`.
    ExpAlpha,
    /// Smallest `alpha` with the lemniscate image in `Omega_car`.
    LemniscateAlpha,
    /// Largest `c` with the Cassinian image in `Omega_car`.
    Cassinian,
    /// Smallest `M` with `Omega_car` in `|w - M| < M`.
    SelfCenteredDisk,
    /// Smallest `alpha` with `Omega_car` in the image of `(1+az)/(1-az)`.
    Padmanabhan,
    /// Smallest `alpha` with `|w - 1| < 1 - alpha` in `Omega_car`.
    RamSingh,
    /// Largest `alpha` with the image of `(1+az)/(1-az)` in `Omega_car`.
    PadmanabhanInside,
}

impl Threshold {
    pub const ALL: [Threshold; 10] = [
        Threshold::OrderAlpha,
        Threshold::Sector,
        Threshold::KStarlike,
        Threshold::ExpAlpha,
        Threshold::LemniscateAlpha,
        Threshold::Cassinian,
        Threshold::SelfCenteredDisk,
        Threshold::Padmanabhan,
        Threshold::RamSingh,
        Threshold::PadmanabhanInside,
    ];

    /// Domains `(inner, outer)` of the inclusion at parameter `p`.
    pub fn pair(self, p: f64) -> Result<(DomainSpec, DomainSpec)> {
        let car = DomainSpec::Cardioid;
        Ok(match self {
            Threshold::OrderAlpha => (car, DomainSpec::RightHalfPlane(p)),
            Threshold::Sector => (car, DomainSpec::Sector(p)),
            Threshold::KStarlike => (DomainSpec::KStarlike(p), car),
            Threshold::ExpAlpha => (DomainSpec::Image(Generator::exponential(p)?), car),
            Threshold::LemniscateAlpha => (DomainSpec::Image(Generator::lemniscate(p)?), car),
            Threshold::Cassinian => (DomainSpec::Image(Generator::cassinian(p)?), car),
            Threshold::SelfCenteredDisk => (car, DomainSpec::Disk(DiskSpec::new(c64(p, 0.0), p)?)),
            Threshold::Padmanabhan => (car, janowski_image(p, -p)?),
            Threshold::RamSingh => (janowski_image(1.0 - p, 0.0)?, car),
            Threshold::PadmanabhanInside => (janowski_image(p, -p)?, car),
        })
    }

    /// Search bracket and whether the inclusion holds above the threshold.
    fn bracket(self) -> (f64, f64, bool) {
        match self {
            Threshold::OrderAlpha => (0.0, 0.9, false),
            Threshold::Sector => (0.3, 0.99, true),
            Threshold::KStarlike => (1.05, 5.0, true),
            Threshold::ExpAlpha => (0.0, 0.9, true),
            Threshold::LemniscateAlpha => (0.0, 0.95, true),
            Threshold::Cassinian => (0.05, 1.0, false),
            Threshold::SelfCenteredDisk => (1.0, 2.0, true),
            Threshold::Padmanabhan => (0.3, 1.0, true),
            Threshold::RamSingh => (0.05, 0.95, true),
            Threshold::PadmanabhanInside => (0.05, 0.95, false),
        }
    }

    pub fn holds_above(self) -> bool {
        self.bracket().2
    }

    pub fn label(self) -> &'static str {
        match self {
            Threshold::OrderAlpha => "Omega_car in Re w > alpha",
            Threshold::Sector => "Omega_car in |arg w| < beta pi/2",
            Threshold::KStarlike => "k-starlike region in Omega_car",
            Threshold::ExpAlpha => "alpha+(1-alpha)e^z image in Omega_car",
            Threshold::LemniscateAlpha => "alpha+(1-alpha)sqrt(1+z) image in Omega_car",
            Threshold::Cassinian => "sqrt(1+cz) image in Omega_car",
            Threshold::SelfCenteredDisk => "Omega_car in |w-M| < M",
            Threshold::Padmanabhan => "Omega_car in |(w-1)/(w+1)| < alpha",
            Threshold::RamSingh => "|w-1| < 1-alpha in Omega_car",
            Threshold::PadmanabhanInside => "|(w-1)/(w+1)| < alpha in Omega_car",
        }
    }

    /// Sampled inclusion at `p`.
    pub fn check(self, p: f64, n: usize) -> Result<crate::domains::Containment> {
        let (inner, outer) = self.pair(p)?;
        domain_in_domain(&inner, &outer, n)
    }

    /// Threshold by bisection on the sampled inclusion.
    pub fn oracle(self, n: usize) -> Result<f64> {
        let (lo, hi, _) = self.bracket();
        let mut err = None;
        let v = bisect_predicate(
            |p| match self.check(p, n) {
                Ok(c) => c.ok,
                Err(e) => {
                    err.get_or_insert(e);
                    false
                }
            },
            lo,
            hi,
            DEFAULT_TOL,
        );
        match err {
            Some(e) => Err(e),
            None => Ok(v),
        }
    }
}

/// Report for "holds at `p`" (or "fails at `p`" when `expect_pass` is false).
pub fn threshold_report(th: Threshold, p: f64, expect_pass: bool, n: usize) -> Result<VerificationReport> {
    let c = th.check(p, n)?;
    let claim = if expect_pass {
        format!("{} at {}", th.label(), sig9(p))
    } else {
        format!("not: {} at {}", th.label(), sig9(p))
    };
    Ok(VerificationReport::new(claim, "boundary_sampling", n)
        .verdict_at(c.ok == expect_pass, c.witness)
        .measured(c.worst_margin))
}

/// Inclusion relations at their thresholds, and failure when the threshold
/// is moved by 0.01 in the direction the sharpness claim excludes.
pub fn inclusion_suite(n: usize) -> Result<Vec<VerificationReport>> {
    let beta0 = radii::beta0_oracle();
    let cases: [(Threshold, f64); 10] = [
        (Threshold::OrderAlpha, 0.25),
        (Threshold::Sector, beta0),
        (Threshold::KStarlike, 5.0 / 3.0),
        (Threshold::ExpAlpha, radii::alpha0()),
        (Threshold::LemniscateAlpha, 0.5),
        (Threshold::Cassinian, 0.75),
        (Threshold::SelfCenteredDisk, radii::m0()),
        (Threshold::Padmanabhan, radii::alpha_star()),
        (Threshold::RamSingh, 0.5),
        (Threshold::PadmanabhanInside, 1.0 / 3.0),
    ];
    let mut out = Vec::new();
    for (th, p) in cases {
        out.push(threshold_report(th, p, true, n)?);
        let q = if th.holds_above() { p - 0.01 } else { p + 0.01 };
        out.push(threshold_report(th, q, false, n)?);
    }
    // the printed sector decimal is wider than the oracle angle, so it also holds
    out.push(
        threshold_report(Threshold::Sector, 0.743253, true, n)?
            .flagged("printed beta0 differs from the sampled angle"),
    );
    // Janowski disks under the two sufficient conditions, with their edges
    for (a, b, holds) in [
        (0.5, 0.0, true),
        (0.51, 0.0, false),
        (0.25, -0.5, true),
        (0.26, -0.5, false),
        (1.0 / 3.0, -1.0 / 3.0, true),
        (0.0, -0.6, true),
    ] {
        let d = janowski_image(a, b)?;
        let (inner, outer) = (d, DomainSpec::Cardioid);
        let c = domain_in_domain(&inner, &outer, n)?;
        let claim = format!(
            "{}Janowski disk S*[{}, {}] in Omega_car",
            if holds { "" } else { "not: " },
            sig9(a),
            sig9(b)
        );
        out.push(
            VerificationReport::new(claim, "boundary_sampling", n)
                .verdict_at(c.ok == holds, c.witness)
                .measured(c.worst_margin),
        );
        if holds {
            debug_assert!(janowski_condition(a, b));
        }
    }
    // unity radii and the inclusion in the psi_C class
    for g in [Generator::Sigmoid, Generator::Cosh, Generator::Rational] {
        let c = domain_in_domain(&DomainSpec::Image(g), &DomainSpec::Cardioid, n)?;
        out.push(
            VerificationReport::new(format!("{} image in Omega_car", g.tag()), "boundary_sampling", n)
                .verdict_at(c.ok, c.witness)
                .measured(c.worst_margin),
        );
    }
    let c = domain_in_domain(&DomainSpec::Cardioid, &DomainSpec::Image(Generator::CardioidC), n)?;
    out.push(
        VerificationReport::new("Omega_car in psi_C image", "boundary_sampling", n)
            .verdict_at(c.ok, c.witness)
            .measured(c.worst_margin),
    );
    Ok(out)
}

/// The two sufficient conditions on `(A, B)` for `S*[A,B]` in `S*_car`.
pub fn janowski_condition(a: f64, b: f64) -> bool {
    let (q, s) = (1.0 - b * b, 2.0 * (1.0 - a * b));
    let eps = 1e-12;
    let first = q < s && s <= 3.0 * q + eps && 2.0 * a <= 1.0 + b + eps;
    let second = 3.0 * q <= s + eps && s < 5.0 * q && 2.0 * a <= 3.0 + 5.0 * b + eps;
    b > -1.0 && b < a && a <= 1.0 && (first || second)
}

// ---------------------------------------------------------------------------
// Circle extrema and disk radii

/// Minimizer of `f` on `[lo, hi]`: `n` samples, then golden-section search
/// between the neighbours of the best sample.
pub fn sampled_argmin<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, n: usize) -> (f64, f64) {
    let h = (hi - lo) / n as f64;
    let k = (0..=n)
        .min_by(|&i, &j| f(lo + i as f64 * h).total_cmp(&f(lo + j as f64 * h)))
        .unwrap_or(0);
    let (mut a, mut b) = ((lo + (k as f64 - 1.0) * h).max(lo), (lo + (k as f64 + 1.0) * h).min(hi));
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    while b - a > 1e-12 {
        let x1 = b - phi * (b - a);
        let x2 = a + phi * (b - a);
        if f(x1) < f(x2) {
            b = x2;
        } else {
            a = x1;
        }
    }
    let t = 0.5 * (a + b);
    let tk = lo + k as f64 * h;
    if f(tk) < f(t) {
        (tk, f(tk))
    } else {
        (t, f(t))
    }
}

/// Minimum and maximum of `f` over one period.
pub fn extremize_on_circle<F: Fn(f64) -> f64>(f: F, n: usize) -> (f64, f64) {
    let (_, lo) = sampled_argmin(&f, 0.0, TAU, n);
    let (_, hi) = sampled_argmin(|t| -f(t), 0.0, TAU, n);
    (lo, -hi)
}

/// Closed-form circle extrema and disk radii against brute force, plus the
/// knot continuity of each piecewise formula.
pub fn lemma_suite() -> Result<Vec<VerificationReport>> {
    let n = 4096;
    let mut out = Vec::new();
    let mut worst = (0.0f64, c64(0.0, 0.0));
    for k in 0..50 {
        let r = (k as f64 + 0.5) / 50.0;
        let (lo, hi) = extremize_on_circle(|t| cardioid::eval_phi_car(C64::from_polar(r, t)).re, n);
        let d = (lo - cardioid::min_re_on_circle(r)?)
            .abs()
            .max((hi - cardioid::max_re_on_circle(r)?).abs());
        if d >= worst.0 {
            worst = (d, c64(r, 0.0));
        }
    }
    out.push(
        VerificationReport::new("min/max Re phi_car on |z| = r, 50 radii", "circle_extremization", n)
            .verdict_at(worst.0 < 1e-6, worst.1)
            .measured(worst.0),
    );
    let mut worst = (0.0f64, c64(0.0, 0.0));
    for k in 0..50 {
        let a = 0.5 + 2.0 * (k as f64 + 0.5) / 50.0;
        let (lo, hi) = extremize_on_circle(|t| (cardioid::boundary_point(t) - a).norm(), n);
        let (ra, big_ra) = cardioid::inner_outer_radii(a)?;
        let d = (lo - ra).abs().max((hi - big_ra).abs());
        if d >= worst.0 {
            worst = (d, c64(a, 0.0));
        }
    }
    out.push(
        VerificationReport::new("r_a and R_a about a, 50 centers", "circle_extremization", n)
            .verdict_at(worst.0 < 1e-6, worst.1)
            .measured(worst.0),
    );
    let r = 0.5;
    let knots = [
        ("min Re at r = 1/2", 1.0 - r + r * r / 2.0, (3.0 - 2.0 * r * r) / 4.0, r),
        ("R_a at a = 7/6", cardioid::radii_branches(7.0 / 6.0).1[0], cardioid::radii_branches(7.0 / 6.0).1[1], 7.0 / 6.0),
        ("r_a at a = 3/2", cardioid::radii_branches(1.5).0[0], cardioid::radii_branches(1.5).0[1], 1.5),
    ];
    for (name, l, rr, x) in knots {
        let d = (l - rr).abs();
        out.push(
            VerificationReport::new(format!("knot continuity of {name}"), "branch_evaluation", 2)
                .verdict_at(d < 1e-12, c64(x, 0.0))
                .measured(d),
        );
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Coefficient criteria

/// Monomial tangency for `n = 2..8` and the sufficient coefficient condition
/// on `count` random polynomials.
pub fn coefficient_suite(seed: u64, count: usize) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for n in 2..=8usize {
        let a = 1.0 / (2.0 * n as f64 - 1.0);
        let disk = monomial_image_disk(n, a)?;
        let gap = (disk.center.re - disk.radius - 0.5).abs();
        let member = monomial_member(n, c64(a, 0.0))? && !monomial_member(n, c64(a * 1.001, 0.0))?;
        out.push(
            VerificationReport::new(format!("z + z^{n}/{} touches Omega_car at 1/2", 2 * n - 1), "closed_form", 1)
                .verdict_at(gap < 1e-12 && member, disk.center - disk.radius)
                .measured(gap),
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples = 256;
    let mut worst = (0.0f64, c64(0.0, 0.0));
    let mut all_ok = true;
    for _ in 0..count {
        let deg = rng.gen_range(2..=8usize);
        let mut tail: Vec<C64> = (2..=deg)
            .map(|_| C64::from_polar(rng.gen::<f64>(), TAU * rng.gen::<f64>()))
            .collect();
        let sum: f64 = tail
            .iter()
            .enumerate()
            .map(|(k, a)| (2.0 * (k as f64 + 2.0) - 1.0) * a.norm())
            .sum();
        let target = rng.gen_range(0.05..=1.0);
        for a in &mut tail {
            *a *= target / sum;
        }
        let f = PowerSeries::from_tail(&tail);
        all_ok &= f.coefficient_condition();
        for r in [0.5, 0.9, 0.999] {
            for k in 0..samples {
                let z = C64::from_polar(r, TAU * k as f64 / samples as f64);
                let d = (f.w_at(z) - 1.0).norm();
                if d >= worst.0 {
                    worst = (d, z);
                }
            }
        }
    }
    out.push(
        VerificationReport::new(
            format!("sum (2n-1)|a_n| <= 1 implies |zf'/f - 1| < 1/2, {count} polynomials (seed {seed})"),
            "random_sampling",
            count * samples * 3,
        )
        .verdict_at(all_ok && worst.0 < 0.5, worst.1)
        .measured(worst.0),
    );
    Ok(out)
}

/// `f_2(rho z)/rho` membership via the monomial criterion for `|a_2| = 1, 2`.
pub fn partial_sum_suite() -> Result<Vec<VerificationReport>> {
    let p = radii::partial_sum_radii();
    let mut out = Vec::new();
    for (a2, rho, name) in [(1.0, p.from_k, "convex"), (2.0, p.from_s, "univalent"), (1.0, p.scar_dilation, "S*_car")] {
        for (r, holds) in [(rho, true), (rho + 0.01, false)] {
            let ok = monomial_member(2, c64(a2 * r, 0.0))?;
            out.push(
                VerificationReport::new(
                    format!("{}f_2(rho z)/rho in S*_car at rho = {} for {name} f", if holds { "" } else { "not: " }, sig9(r)),
                    "monomial_criterion",
                    1,
                )
                .verdict_at(ok == holds, c64(-r, 0.0))
                .expected(rho),
            );
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Auxiliary positivity in the Padmanabhan and M radii

fn phi_at(x: f64, r: f64) -> C64 {
    cardioid::eval_phi_car(C64::from_polar(r, x.clamp(-1.0, 1.0).acos()))
}

/// `g(x, r) = a^2 |phi+1|^2 - |phi-1|^2` at `z = r e^{it}`, `x = cos t`.
pub fn g_aux(alpha: f64, x: f64, r: f64) -> f64 {
    let phi = phi_at(x, r);
    alpha * alpha * (phi + 1.0).norm_sqr() - (phi - 1.0).norm_sqr()
}

/// `p(x, r) = M^2 - |phi - M|^2` at `z = r e^{it}`, `x = cos t`.
pub fn p_aux(m: f64, x: f64, r: f64) -> f64 {
    m * m - (phi_at(x, r) - m).norm_sqr()
}

/// Minimum of `f(x)` over a 512-point grid on `[-1, 1]`, with its argument.
pub fn grid_min<F: Fn(f64) -> f64>(f: F) -> (f64, f64) {
    (0..512)
        .map(|k| -1.0 + 2.0 * k as f64 / 511.0)
        .map(|x| (f(x), x))
        .fold((f64::INFINITY, 0.0), |a, b| if b.0 < a.0 { b } else { a })
}

/// `g >= 0` at `w_alpha` and `g < 0` just beyond, for 10 alphas; likewise
/// `p` at the `M` radius for several `M`.
pub fn auxiliary_suite() -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    let star = radii::alpha_star();
    for k in 1..=10 {
        let alpha = star * k as f64 / 10.5;
        let w = radii::w_alpha(alpha);
        let (at, x_at) = grid_min(|x| g_aux(alpha, x, w));
        let (past, _) = grid_min(|x| g_aux(alpha, x, w * 1.001));
        out.push(
            VerificationReport::new(format!("g(x, w_alpha) >= 0 and sharp at alpha = {}", sig9(alpha)), "grid_512", 512)
                .verdict_at(at > -1e-12 && past < 0.0, c64(x_at, w))
                .measured(at),
        );
    }
    for m in [0.6, 0.8, 1.0, 1.05, 1.1, 1.2, 1.25, 1.3] {
        let r = radii::radius_within_scar(radii::Target::JanowskiM(m))?.value;
        let (at, x_at) = grid_min(|x| p_aux(m, x, r));
        let (past, _) = grid_min(|x| p_aux(m, x, r * 1.001));
        out.push(
            VerificationReport::new(format!("p(x, s11) >= 0 and sharp at M = {}", sig9(m)), "grid_512", 512)
                .verdict_at(at > -1e-12 && past < 0.0, c64(x_at, r))
                .measured(at),
        );
    }
    Ok(out)
}

/// `M*` as the `M` where the binding point of `phi_car(D_r)` against
/// `|w - M| < M` leaves the real axis.
pub fn m_star_oracle(n: usize) -> Result<f64> {
    let fcar = FunctionSpec::new("f_car", Extremal::FCar, "f_car");
    let off_axis = |m: f64| -> bool {
        let d = DomainSpec::Disk(DiskSpec {
            center: c64(m, 0.0),
            radius: m,
        });
        let Ok(r) = subordination_radius(&fcar, &d, 1e-9, n) else {
            return false;
        };
        // worst point of the circle at the radius, refined in t
        let (t, _) = sampled_argmin(|t| d.margin(fcar.w(C64::from_polar(r.lo, t))), 0.0, PI, n / 2);
        t > 1e-3
    };
    Ok(bisect_predicate(off_axis, 1.02, 1.28, 1e-5))
}

// ---------------------------------------------------------------------------
// Drivers

/// One report per registry constant: oracle against formula value.
pub fn verify_all_constants(n: usize) -> Result<Vec<VerificationReport>> {
    verify_all_constants_with(n, DEFAULT_TOL)
}

/// Oracle agreement tolerance at `n` samples: [`ORACLE_TOL`] from the
/// default density up, 5e-3 below it.
pub fn agreement_tol(n: usize) -> f64 {
    if n >= DEFAULT_SAMPLES {
        ORACLE_TOL
    } else {
        5e-3
    }
}

/// As [`verify_all_constants`] with an explicit bisection tolerance, and the
/// agreement tolerance of [`agreement_tol`].
pub fn verify_all_constants_with(n: usize, tol: f64) -> Result<Vec<VerificationReport>> {
    let agree = agreement_tol(n);
    Ok(crate::registry::registry()?
        .iter()
        .map(|r| r.check_with(n, tol, agree))
        .collect())
}

/// Every suite by name, in a fixed order.
pub fn all_suites(n: usize, seed: u64) -> Result<Vec<(&'static str, Vec<VerificationReport>)>> {
    all_suites_with(n, seed, DEFAULT_TOL)
}

pub fn all_suites_with(n: usize, seed: u64, tol: f64) -> Result<Vec<(&'static str, Vec<VerificationReport>)>> {
    Ok(vec![
        ("constants", verify_all_constants_with(n, tol)?),
        ("lemma", lemma_suite()?),
        ("inclusion", inclusion_suite(n)?),
        ("coefficient", coefficient_suite(seed, 100)?),
        ("sharpness", sharpness_suite()?),
        ("auxiliary", auxiliary_suite()?),
        ("partial_sum", partial_sum_suite()?),
        ("convolution", convolution_suite(n)?),
    ])
}
