// SPDX-License-Identifier: MIT OR Apache-2.0

//! Radius constants of the cardioid class: the Janowski radius and its
//! special cases, the table of class radii, the radii of `S*_car` inside
//! other classes, the ratio-class table, and the partial-sum and
//! convolution constants.
//!
//! Every value lies in `(0, 1]`. Formulas of the `min{1, .}` shape are clamped
//! and carry `clamped = true` when the raw expression exceeds one. Values
//! defined as polynomial roots keep their polynomial so that the residual and
//! the smallest-root property can be certified.

use std::f64::consts::{E, FRAC_PI_2, PI, SQRT_2};
use std::fmt;
use std::sync::OnceLock;

use crate::domains::{janowski_image, DomainSpec};
use crate::functions::{Chi, FunctionSpec};
use crate::generators::{check_janowski, Generator};
use crate::roots::{
    bisect, certify_smallest_root, smallest_root_in_unit_interval, Polynomial, RootCertificate,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    RootOfPolynomial,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::RootOfPolynomial => "root_of_polynomial",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RadiusResult {
    pub value: f64,
    pub method: Method,
    pub polynomial: Option<Polynomial>,
    pub formula: String,
    pub anchor: &'static str,
    /// The raw formula exceeded 1 and was clamped.
    pub clamped: bool,
    pub verified: Option<bool>,
}

impl RadiusResult {
    fn closed(raw: f64, formula: impl Into<String>, anchor: &'static str) -> Self {
        debug_assert!(raw > 0.0, "radius formula gave {raw}");
        RadiusResult {
            value: raw.min(1.0),
            method: Method::ClosedForm,
            polynomial: None,
            formula: formula.into(),
            anchor,
            clamped: raw > 1.0,
            verified: None,
        }
    }

    fn root(p: Polynomial, anchor: &'static str) -> Result<Self> {
        let value = smallest_root_in_unit_interval(&p)?;
        Ok(RadiusResult {
            value,
            method: Method::RootOfPolynomial,
            formula: format!("smallest root of {} = 0 in (0,1)", p.display("r")),
            polynomial: Some(p),
            anchor,
            clamped: false,
            verified: None,
        })
    }

    /// Residual and smallest-root certificate, for root-defined values.
    pub fn certificate(&self) -> Option<RootCertificate> {
        self.polynomial
            .as_ref()
            .map(|p| certify_smallest_root(p, self.value))
    }
}

/// `1/x`, or `+inf` when `x <= 0` so that `min{1, 1/x}` reads as 1.
fn recip(x: f64) -> f64 {
    if x > 0.0 {
        1.0 / x
    } else {
        f64::INFINITY
    }
}

fn check_range(name: &'static str, x: f64, ok: bool, constraint: &'static str) -> Result<()> {
    if ok && x.is_finite() {
        Ok(())
    } else {
        Err(Error::param(name, x, constraint))
    }
}

fn check_unit(name: &'static str, x: f64) -> Result<()> {
    check_range(name, x, (0.0..1.0).contains(&x), "0 <= alpha < 1")
}

// ---------------------------------------------------------------------------
// Janowski radius and its corollary forms

/// Cardioid radius of the Janowski class `S*[A,B]`.
pub fn janowski_scar_radius(a: f64, b: f64) -> Result<RadiusResult> {
    check_janowski(a, b)?;
    let anchor = "Janowski radius: R2 = min{1, 1/(2A-B)}";
    let r2 = recip(2.0 * a - b);
    if b >= 0.0 {
        return Ok(RadiusResult::closed(r2, "min{1, 1/(2A-B)}", anchor));
    }
    let r1 = 1.0 / (b * (3.0 * b - 2.0 * a)).sqrt();
    if r2.min(1.0) <= r1 {
        Ok(RadiusResult::closed(r2, "min{1, 1/(2A-B)}", anchor))
    } else {
        let r3 = 3.0 * recip(2.0 * a - 5.0 * b);
        Ok(RadiusResult::closed(r3, "min{1, 3/(2A-5B)}", anchor))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorollaryClass {
    /// `S*(alpha)`.
    OrderAlpha,
    /// `S*[1-alpha, 0]`.
    RamSingh,
    /// `S*[alpha, -alpha]`.
    Padmanabhan,
    /// `S*[1, -(M-1)/M]`.
    JanowskiM,
}

impl CorollaryClass {
    pub const ALL: [CorollaryClass; 4] = [
        CorollaryClass::OrderAlpha,
        CorollaryClass::RamSingh,
        CorollaryClass::Padmanabhan,
        CorollaryClass::JanowskiM,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            CorollaryClass::OrderAlpha => "order_alpha",
            CorollaryClass::RamSingh => "ram_singh",
            CorollaryClass::Padmanabhan => "padmanabhan",
            CorollaryClass::JanowskiM => "janowski_m",
        }
    }

    /// The `(A, B)` pair of the class.
    pub fn janowski_pair(self, p: f64) -> (f64, f64) {
        match self {
            CorollaryClass::OrderAlpha => (1.0 - 2.0 * p, -1.0),
            CorollaryClass::RamSingh => (1.0 - p, 0.0),
            CorollaryClass::Padmanabhan => (p, -p),
            CorollaryClass::JanowskiM => (1.0, -(p - 1.0) / p),
        }
    }
}

/// Cardioid radius of the special Janowski classes, in their piecewise form.
pub fn corollary_radius(class: CorollaryClass, p: f64) -> Result<RadiusResult> {
    let anchor = "Janowski corollary";
    Ok(match class {
        CorollaryClass::OrderAlpha => {
            check_unit("alpha", p)?;
            if p <= 0.25 {
                RadiusResult::closed(1.0 / (3.0 - 4.0 * p), "1/(3-4a)", anchor)
            } else {
                RadiusResult::closed(3.0 / (7.0 - 4.0 * p), "3/(7-4a)", anchor)
            }
        }
        CorollaryClass::RamSingh => {
            check_unit("alpha", p)?;
            if p < 0.5 {
                RadiusResult::closed(1.0 / (2.0 * (1.0 - p)), "1/(2(1-a))", anchor)
            } else {
                RadiusResult::closed(1.0, "1", anchor)
            }
        }
        CorollaryClass::Padmanabhan => {
            check_range("alpha", p, p > 0.0 && p <= 1.0, "0 < alpha <= 1")?;
            if p <= 1.0 / 3.0 {
                RadiusResult::closed(1.0, "1", anchor)
            } else {
                RadiusResult::closed(1.0 / (3.0 * p), "1/(3a)", anchor)
            }
        }
        CorollaryClass::JanowskiM => {
            check_range("M", p, p > 0.5, "M > 1/2")?;
            RadiusResult::closed(p / (3.0 * p - 1.0), "M/(3M-1)", anchor)
        }
    })
}

// ---------------------------------------------------------------------------
// Table of class radii

/// Upper end of the exponential parameter range with radius below one,
/// `(e-2)/(2(e-1))`.
pub fn alpha0() -> f64 {
    (E - 2.0) / (2.0 * (E - 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TableClass {
    Cassinian(f64),
    Lemniscate(f64),
    Exponential(f64),
    RightLemniscate,
    CardioidC,
    Limacon,
    Lune,
    Sine,
    Nephroid,
    Booth(f64),
    MBeta(f64),
    /// `S*`, extremal Koebe.
    Starlike,
    /// `K`, via `K ⊂ S*(1/2)`.
    Convex,
    /// `S` and the close-to-convex class.
    Univalent,
}

impl TableClass {
    pub const TAGS: [&'static str; 14] = [
        "cassinian",
        "lemniscate",
        "exp",
        "rl",
        "psi_c",
        "limacon",
        "lune",
        "sine",
        "nephroid",
        "bl",
        "m_beta",
        "starlike",
        "convex",
        "univalent",
    ];

    pub fn parse(tag: &str, params: &[f64]) -> Result<Self> {
        let p = |name: &'static str| -> Result<f64> {
            one_param(tag, params, name)
        };
        let c = match tag {
            "cassinian" => TableClass::Cassinian(p("c")?),
            "lemniscate" => TableClass::Lemniscate(p("alpha")?),
            "exp" => TableClass::Exponential(p("alpha")?),
            "bl" => TableClass::Booth(p("alpha")?),
            "m_beta" => TableClass::MBeta(p("beta")?),
            other => {
                no_params(other, params)?;
                match other {
                    "rl" => TableClass::RightLemniscate,
                    "psi_c" => TableClass::CardioidC,
                    "limacon" => TableClass::Limacon,
                    "lune" => TableClass::Lune,
                    "sine" => TableClass::Sine,
                    "nephroid" => TableClass::Nephroid,
                    "starlike" => TableClass::Starlike,
                    "convex" => TableClass::Convex,
                    "univalent" => TableClass::Univalent,
                    _ => return Err(Error::unknown("class", tag, Self::TAGS)),
                }
            }
        };
        Ok(c)
    }

    /// `zf'/f` of the extremal function, the input of the radius oracle.
    pub fn extremal(&self) -> Result<FunctionSpec> {
        Ok(match *self {
            TableClass::Cassinian(c) => FunctionSpec::generator(Generator::cassinian(c)?),
            TableClass::Lemniscate(a) => FunctionSpec::generator(Generator::lemniscate(a)?),
            TableClass::Exponential(a) => FunctionSpec::generator(Generator::exponential(a)?),
            TableClass::RightLemniscate => FunctionSpec::generator(Generator::RightLemniscate),
            TableClass::CardioidC => FunctionSpec::generator(Generator::CardioidC),
            TableClass::Limacon => FunctionSpec::generator(Generator::Limacon),
            TableClass::Lune => FunctionSpec::generator(Generator::Lune),
            TableClass::Sine => FunctionSpec::generator(Generator::Sine),
            TableClass::Nephroid => FunctionSpec::generator(Generator::Nephroid),
            TableClass::Booth(a) => FunctionSpec::booth(a)?,
            TableClass::MBeta(b) => FunctionSpec::m_beta(b)?,
            TableClass::Starlike | TableClass::Univalent => FunctionSpec::janowski(1.0, -1.0)?,
            TableClass::Convex => FunctionSpec::janowski(0.0, -1.0)?,
        })
    }
}

fn one_param(tag: &str, params: &[f64], name: &'static str) -> Result<f64> {
    match params {
        [x] => Ok(*x),
        _ => Err(Error::Parse {
            line: 0,
            message: format!("`{tag}` takes exactly one parameter ({name})"),
        }),
    }
}

fn no_params(tag: &str, params: &[f64]) -> Result<()> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(Error::Parse {
            line: 0,
            message: format!("`{tag}` takes no parameter"),
        })
    }
}

/// Cardioid radius of a class from the table of subclasses.
pub fn scar_radius_of_class(class: TableClass) -> Result<RadiusResult> {
    let anchor = "table of class radii";
    Ok(match class {
        TableClass::Cassinian(c) => {
            check_range("c", c, c > 0.0 && c <= 1.0, "0 < c <= 1")?;
            if c > 0.75 {
                RadiusResult::closed(3.0 / (4.0 * c), "3/(4c)", anchor)
            } else {
                RadiusResult::closed(1.0, "1", anchor)
            }
        }
        TableClass::Lemniscate(a) => {
            check_unit("alpha", a)?;
            if a < 0.5 {
                let f = (3.0 - 4.0 * a) / (4.0 * (1.0 - a) * (1.0 - a));
                RadiusResult::closed(f, "(3-4a)/(4(1-a)^2)", anchor)
            } else {
                RadiusResult::closed(1.0, "1", anchor)
            }
        }
        TableClass::Exponential(a) => {
            check_unit("alpha", a)?;
            if a < alpha0() {
                let f = (2.0 * (1.0 - a) / (1.0 - 2.0 * a)).ln();
                RadiusResult::closed(f, "log(2(1-a)/(1-2a))", anchor)
            } else {
                RadiusResult::closed(1.0, "1", anchor)
            }
        }
        TableClass::RightLemniscate => {
            RadiusResult::closed((39.0 + 17.0 * SQRT_2) / 82.0, "(39+17 sqrt2)/82", anchor)
        }
        TableClass::CardioidC => RadiusResult::closed(0.5, "1/2", anchor),
        TableClass::Limacon => RadiusResult::closed(SQRT_2 - 1.0, "sqrt2-1", anchor),
        TableClass::Lune => RadiusResult::closed(0.75, "3/4", anchor),
        TableClass::Sine => RadiusResult::closed(0.5f64.asin(), "asin(1/2)", anchor),
        TableClass::Nephroid => {
            RadiusResult::root(Polynomial::from_descending(&[2.0, 0.0, -6.0, 3.0]), anchor)?
        }
        TableClass::Booth(a) => {
            check_unit("alpha", a)?;
            RadiusResult::closed(
                1.0 / (1.0 + (1.0 + a).sqrt()),
                "1/(1+sqrt(1+a))",
                "Booth lemniscate and M(beta) radii",
            )
        }
        TableClass::MBeta(b) => {
            check_range("beta", b, b > 1.0, "beta > 1")?;
            RadiusResult::closed(
                1.0 / (4.0 * b - 3.0),
                "1/(4b-3)",
                "Booth lemniscate and M(beta) radii",
            )
        }
        TableClass::Starlike | TableClass::Univalent => {
            RadiusResult::closed(1.0 / 3.0, "1/3", "starlike and univalent radius")
        }
        TableClass::Convex => RadiusResult::closed(0.6, "3/5", "convex radius"),
    })
}

// ---------------------------------------------------------------------------
// Radii of S*_car inside other classes

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Target {
    OrderAlpha(f64),
    Lemniscate(f64),
    RightLemniscate,
    Rational,
    Sine,
    Cosh,
    Nephroid,
    Sigmoid,
    RamSingh(f64),
    Padmanabhan(f64),
    JanowskiM(f64),
    CardioidC,
    MBeta(f64),
}

impl Target {
    pub const TAGS: [&'static str; 13] = [
        "order_alpha",
        "lemniscate",
        "rl",
        "psi_r",
        "sine",
        "cosh",
        "nephroid",
        "sg",
        "ram_singh",
        "padmanabhan",
        "janowski_m",
        "psi_c",
        "m_beta",
    ];

    pub fn parse(tag: &str, params: &[f64]) -> Result<Self> {
        let p = |name: &'static str| -> Result<f64> { one_param(tag, params, name) };
        let t = match tag {
            "order_alpha" => Target::OrderAlpha(p("alpha")?),
            "lemniscate" => Target::Lemniscate(p("alpha")?),
            "ram_singh" => Target::RamSingh(p("alpha")?),
            "padmanabhan" => Target::Padmanabhan(p("alpha")?),
            "janowski_m" => Target::JanowskiM(p("M")?),
            "m_beta" => Target::MBeta(p("beta")?),
            other => {
                no_params(other, params)?;
                match other {
                    "rl" => Target::RightLemniscate,
                    "psi_r" => Target::Rational,
                    "sine" => Target::Sine,
                    "cosh" => Target::Cosh,
                    "nephroid" => Target::Nephroid,
                    "sg" => Target::Sigmoid,
                    "psi_c" => Target::CardioidC,
                    _ => return Err(Error::unknown("target", tag, Self::TAGS)),
                }
            }
        };
        Ok(t)
    }

    /// The region `zf'/f` must stay in for membership of the target class.
    pub fn domain(&self) -> Result<DomainSpec> {
        Ok(match *self {
            Target::OrderAlpha(a) => {
                check_unit("alpha", a)?;
                DomainSpec::RightHalfPlane(a)
            }
            Target::Lemniscate(a) => DomainSpec::Image(Generator::lemniscate(a)?),
            Target::RightLemniscate => DomainSpec::Image(Generator::RightLemniscate),
            Target::Rational => DomainSpec::Image(Generator::Rational),
            Target::Sine => DomainSpec::Image(Generator::Sine),
            Target::Cosh => DomainSpec::Image(Generator::Cosh),
            Target::Nephroid => DomainSpec::Image(Generator::Nephroid),
            Target::Sigmoid => DomainSpec::Image(Generator::Sigmoid),
            Target::RamSingh(a) => {
                check_unit("alpha", a)?;
                janowski_image(1.0 - a, 0.0)?
            }
            Target::Padmanabhan(a) => {
                check_range("alpha", a, a > 0.0 && a <= 1.0, "0 < alpha <= 1")?;
                janowski_image(a, -a)?
            }
            Target::JanowskiM(m) => {
                check_range("M", m, m > 0.5, "M > 1/2")?;
                janowski_image(1.0, -(m - 1.0) / m)?
            }
            Target::CardioidC => DomainSpec::Image(Generator::CardioidC),
            Target::MBeta(b) => {
                check_range("beta", b, b > 1.0, "beta > 1")?;
                DomainSpec::LeftHalfPlane(b)
            }
        })
    }
}

/// Knot of the Padmanabhan branch, `sqrt((5+2 sqrt13)/27)`.
pub fn alpha_star() -> f64 {
    static CELL: OnceLock<f64> = OnceLock::new();
    *CELL.get_or_init(|| ((5.0 + 2.0 * 13f64.sqrt()) / 27.0).sqrt())
}

/// `w_alpha = 2a/sqrt(1-a^2) * sqrt(2/sqrt(1+3a^2) - 1)`.
pub fn w_alpha(a: f64) -> f64 {
    2.0 * a / (1.0 - a * a).sqrt() * (2.0 / (1.0 + 3.0 * a * a).sqrt() - 1.0).sqrt()
}

/// `(3 + sqrt5)/4`, beyond which the `M` radius is one.
pub fn m0() -> f64 {
    (3.0 + 5f64.sqrt()) / 4.0
}

/// `b_M = sqrt(2 sqrt2 M sqrt((M-1)/(2M-1)) - 2(M-1))`, defined for `M >= 1`.
pub fn b_m(m: f64) -> f64 {
    (2.0 * SQRT_2 * m * ((m - 1.0) / (2.0 * m - 1.0)).sqrt() - 2.0 * (m - 1.0)).sqrt()
}

/// `p(1, r)` for the `M` class: positive exactly while the disk image stays
/// clear of the real-axis endpoint.
pub fn p_endpoint_polynomial(m: f64) -> Polynomial {
    Polynomial::new(vec![
        2.0 * m - 1.0,
        -2.0 * (1.0 - m),
        -(2.0 - m),
        -1.0,
        -0.25,
    ])
}

/// `a_M`, the smallest root of `p(1, r)` in `(0, 1)`, or 1 if none.
pub fn a_m(m: f64) -> f64 {
    smallest_root_in_unit_interval(&p_endpoint_polynomial(m)).unwrap_or(1.0)
}

/// The printed first-branch expression `-1 + sqrt(M-1)`, where real.
pub fn printed_a_m(m: f64) -> Option<f64> {
    (m >= 1.0).then(|| -1.0 + (m - 1.0).sqrt())
}

/// Interior critical point `x0 = (r^2 - 2(M-1))/(4(M-1) r)` of `p(x, r)`.
pub fn p_critical_x(m: f64, r: f64) -> f64 {
    (r * r - 2.0 * (m - 1.0)) / (4.0 * (m - 1.0) * r)
}

/// Switch point `M*` between `a_M` and `b_M`.
///
/// `a_M - b_M` is non-negative and only touches zero, so it is not bisected
/// directly. At the touch the critical point `x0(b_M)` reaches `x = 1`.
pub fn m_star() -> f64 {
    static CELL: OnceLock<f64> = OnceLock::new();
    *CELL.get_or_init(|| {
        let h = |m: f64| p_critical_x(m, b_m(m)) - 1.0;
        let lo = 1.0 + 1e-9;
        bisect(h, lo, m0(), h(lo))
    })
}

/// Sector angle of `Omega_car` from sampling `arg phi_car(e^{it})`:
/// `10^6` samples, then golden-section refinement of the best bracket.
pub fn beta0_oracle() -> f64 {
    static CELL: OnceLock<f64> = OnceLock::new();
    *CELL.get_or_init(|| {
        let arg = |t: f64| crate::cardioid::boundary_point(t).arg();
        let n = 1_000_000;
        let h = PI / n as f64;
        let (k, _) = (1..n)
            .map(|k| (k, arg(k as f64 * h)))
            .fold((0, f64::MIN), |acc, x| if x.1 > acc.1 { x } else { acc });
        let (mut lo, mut hi) = ((k - 1) as f64 * h, (k + 1) as f64 * h);
        let g = (5f64.sqrt() - 1.0) / 2.0;
        while hi - lo > 1e-13 {
            let x1 = hi - g * (hi - lo);
            let x2 = lo + g * (hi - lo);
            if arg(x1) < arg(x2) {
                lo = x1;
            } else {
                hi = x2;
            }
        }
        arg(0.5 * (lo + hi)) / FRAC_PI_2
    })
}

/// `(2/pi) atan(3 sqrt(3/5))`, the tangent from the statement.
pub fn beta0_statement() -> f64 {
    (3.0 * 0.6f64.sqrt()).atan() / FRAC_PI_2
}

/// `(2/pi) atan(3 sqrt3/5)`, the tangent from the closing formula.
pub fn beta0_closing() -> f64 {
    (3.0 * 3f64.sqrt() / 5.0).atan() / FRAC_PI_2
}

/// Radius of `S*_car` inside the target class.
pub fn radius_within_scar(target: Target) -> Result<RadiusResult> {
    target.domain()?;
    let anchor = "radii of S*_car in subclasses";
    Ok(match target {
        Target::OrderAlpha(a) => {
            if a <= 0.25 {
                RadiusResult::closed(1.0, "1", anchor)
            } else if a <= 0.625 {
                RadiusResult::closed(((3.0 - 4.0 * a) / 2.0).sqrt(), "sqrt((3-4a)/2)", anchor)
            } else {
                RadiusResult::closed(1.0 - (2.0 * a - 1.0).sqrt(), "1-sqrt(2a-1)", anchor)
            }
        }
        Target::Lemniscate(a) => RadiusResult::closed(
            -1.0 + ((2.0 * SQRT_2 - 1.0) - 2.0 * (SQRT_2 - 1.0) * a).sqrt(),
            "-1+sqrt((2 sqrt2-1) - 2(sqrt2-1)a)",
            anchor,
        ),
        Target::RightLemniscate => {
            let gamma = 2.0 * SQRT_2 - 2.0;
            RadiusResult::closed(
                -1.0 + (1.0 + 2.0 * (-gamma + gamma.sqrt()).sqrt()).sqrt(),
                "-1+sqrt(1+2 sqrt(-g+sqrt g)), g = 2 sqrt2-2",
                anchor,
            )
        }
        Target::Rational => {
            RadiusResult::closed(1.0 - (4.0 * SQRT_2 - 5.0).sqrt(), "1-sqrt(4 sqrt2-5)", anchor)
        }
        Target::Sine => RadiusResult::closed(
            -1.0 + (1.0 + 2.0 * 1f64.sin()).sqrt(),
            "-1+sqrt(1+2 sin 1)",
            anchor,
        ),
        Target::Cosh => RadiusResult::closed(
            -1.0 + (-1.0 + 2.0 * 1f64.cosh()).sqrt(),
            "-1+sqrt(-1+2 cosh 1)",
            anchor,
        ),
        Target::Nephroid => RadiusResult::closed((21f64.sqrt() - 3.0) / 3.0, "(sqrt21-3)/3", anchor),
        Target::Sigmoid => RadiusResult::closed(
            -1.0 + (1.0 + 2.0 * (E - 1.0) / (E + 1.0)).sqrt(),
            "-1+sqrt(1+2(e-1)/(e+1))",
            anchor,
        ),
        Target::RamSingh(a) => {
            RadiusResult::closed(-1.0 + (3.0 - 2.0 * a).sqrt(), "-1+sqrt(3-2a)", anchor)
        }
        Target::Padmanabhan(a) => {
            if a <= alpha_star() {
                RadiusResult::closed(w_alpha(a), "w_a", anchor)
            } else {
                RadiusResult::closed(1.0, "1", anchor)
            }
        }
        Target::JanowskiM(m) => {
            if m <= m_star() {
                let mut r = RadiusResult::root(p_endpoint_polynomial(m), anchor)
                    .unwrap_or_else(|_| RadiusResult::closed(1.0, "1", anchor));
                r.formula = format!("a_M: {}", r.formula);
                r
            } else if m < m0() {
                RadiusResult::closed(b_m(m), "b_M", anchor)
            } else {
                RadiusResult::closed(1.0, "1", anchor)
            }
        }
        Target::CardioidC => RadiusResult::closed(1.0, "1", anchor),
        Target::MBeta(b) => {
            if b <= 2.5 {
                RadiusResult::closed((2.0 * b - 1.0).sqrt() - 1.0, "sqrt(2b-1)-1", anchor)
            } else {
                RadiusResult::closed(1.0, "1", anchor)
            }
        }
    })
}

// ---------------------------------------------------------------------------
// Ratio classes

/// Closed radical for the `(2, z/(1-z^2))` root.
pub fn ratio_c2_radical() -> f64 {
    let s17 = 17f64.sqrt();
    1.5 + s17 / 2.0 - ((11.0 + 3.0 * s17) / 2.0).sqrt()
}

/// Cardioid radius of the ratio class `F_i^chi`.
pub fn ratio_class_radius(i: u8, chi: Chi) -> Result<RadiusResult> {
    let anchor = match chi.row() {
        'a' => "ratio table (a)",
        'b' => "ratio table (b)",
        'c' => "ratio table (c)",
        'd' => "ratio table (d)",
        _ => "ratio table (e)",
    };
    let s = |x: f64| x.sqrt();
    let closed = |v: f64, f: &str| Ok(RadiusResult::closed(v, f, anchor));
    let root = |d: &[f64]| RadiusResult::root(Polynomial::from_descending(d), anchor);
    match (i, chi) {
        (1, Chi::Z) => closed(1.0 / (4.0 + s(17.0)), "1/(4+sqrt17)"),
        (2, Chi::Z) => closed(1.0 / (3.0 + 2.0 * s(3.0)), "1/(3+2 sqrt3)"),
        (3, Chi::Z) => closed(1.0 / (2.0 + s(5.0)), "1/(2+sqrt5)"),
        (1, Chi::ZOver1PlusZ) => closed(5.0 - 2.0 * s(6.0), "5-2 sqrt6"),
        (2, Chi::ZOver1PlusZ) => closed(s(17.0) - 4.0, "sqrt17-4"),
        (3, Chi::ZOver1PlusZ) => closed(3.0 - 2.0 * SQRT_2, "3-2 sqrt2"),
        (1, Chi::ZOver1MinusZ2) => root(&[3.0, -8.0, -4.0, -8.0, 1.0]),
        (2, Chi::ZOver1MinusZ2) => root(&[1.0, -6.0, -6.0, -6.0, 1.0]),
        (3, Chi::ZOver1MinusZ2) => root(&[3.0, -4.0, -4.0, -4.0, 1.0]),
        (1, Chi::Koebe) => closed((6.0 - s(33.0)) / 3.0, "(6-sqrt33)/3"),
        (2, Chi::Koebe) => closed(5.0 - 2.0 * s(6.0), "5-2 sqrt6"),
        (3, Chi::Koebe) => closed((4.0 - s(13.0)) / 3.0, "(4-sqrt13)/3"),
        (1, Chi::ZPlusHalfZ2) => root(&[3.0, 6.0, -19.0, 2.0]),
        (2, Chi::ZPlusHalfZ2) => root(&[5.0, 0.0, -15.0, 2.0]),
        (3, Chi::ZPlusHalfZ2) => root(&[3.0, 2.0, -11.0, 2.0]),
        _ => Err(Error::param("i", i as f64, "i in {1, 2, 3}")),
    }
}

// ---------------------------------------------------------------------------
// Partial sums and convolution

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialSumRadii {
    /// `f_2` starlike in `|z| < 1/2`.
    pub starlike: f64,
    /// `f_2` convex in `|z| < 1/4`.
    pub convex: f64,
    /// `f_2(rho z)/rho` in `S*_car` for `f` in `S*_car`.
    pub scar_dilation: f64,
    pub from_k: f64,
    pub from_s: f64,
}

pub fn partial_sum_radii() -> PartialSumRadii {
    PartialSumRadii {
        starlike: 0.5,
        convex: 0.25,
        scar_dilation: 1.0 / 3.0,
        from_k: 1.0 / 3.0,
        from_s: 1.0 / 6.0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvolutionRadii {
    /// `(f * g)(rho z)/rho` in `S*_car` for `f` in `S*_car`, `g` convex.
    pub convex_factor: f64,
    /// Same for two starlike factors.
    pub starlike_pair: f64,
}

pub fn convolution_radii() -> ConvolutionRadii {
    ConvolutionRadii {
        convex_factor: 0.5,
        starlike_pair: (4.0 - 13f64.sqrt()) / 3.0,
    }
}

// ---------------------------------------------------------------------------
// String queries

/// Families accepted by [`radius_query`]; `<family>:<name>` selects a row.
pub const QUERY_FAMILIES: [&str; 7] = [
    "janowski",
    "corollary:<order_alpha|ram_singh|padmanabhan|janowski_m>",
    "class:<tag>",
    "within:<tag>",
    "ratio:<1|2|3>:<chi>",
    "partial_sum:<starlike|convex|scar_dilation|from_k|from_s>",
    "convolution:<convex_factor|starlike_pair>",
];

/// Resolves a radius by tag, e.g. `janowski` with `[A, B]`, `class:rl`,
/// `within:order_alpha` with `[alpha]` or `ratio:2:koebe`.
pub fn radius_query(tag: &str, params: &[f64]) -> Result<RadiusResult> {
    let lower = tag.trim().to_ascii_lowercase();
    let parts: Vec<&str> = lower.split(':').collect();
    let unknown = || Error::unknown("radius", tag, QUERY_FAMILIES);
    match parts.as_slice() {
        ["janowski"] => match params {
            [a, b] => janowski_scar_radius(*a, *b),
            _ => Err(Error::Parse {
                line: 0,
                message: "`janowski` takes two parameters (A, B)".into(),
            }),
        },
        ["corollary", name] => {
            let class = CorollaryClass::ALL
                .into_iter()
                .find(|c| c.tag() == *name)
                .ok_or_else(|| {
                    Error::unknown("corollary class", name, CorollaryClass::ALL.map(|c| c.tag()))
                })?;
            corollary_radius(class, one_param(name, params, "parameter")?)
        }
        ["class", name] => scar_radius_of_class(TableClass::parse(name, params)?),
        ["within", name] => radius_within_scar(Target::parse(name, params)?),
        ["ratio", i, chi] => {
            no_params(tag, params)?;
            let i: u8 = i.parse().map_err(|_| unknown())?;
            ratio_class_radius(i, Chi::parse(chi)?)
        }
        ["partial_sum", name] => {
            no_params(tag, params)?;
            let p = partial_sum_radii();
            let (v, f) = match *name {
                "starlike" => (p.starlike, "1/2"),
                "convex" => (p.convex, "1/4"),
                "scar_dilation" => (p.scar_dilation, "1/3"),
                "from_k" => (p.from_k, "1/3"),
                "from_s" => (p.from_s, "1/6"),
                _ => return Err(unknown()),
            };
            Ok(RadiusResult::closed(v, f, "second partial sum"))
        }
        ["convolution", name] => {
            no_params(tag, params)?;
            let c = convolution_radii();
            let (v, f, anchor) = match *name {
                "convex_factor" => (c.convex_factor, "1/2", "convolution with a convex function"),
                "starlike_pair" => (c.starlike_pair, "(4-sqrt13)/3", "convolution of two starlike functions"),
                _ => return Err(unknown()),
            };
            Ok(RadiusResult::closed(v, f, anchor))
        }
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() < tol
    }

    #[test]
    fn janowski_examples() {
        assert!(close(janowski_scar_radius(1.0, -1.0).unwrap().value, 1.0 / 3.0, 1e-15));
        assert!(close(janowski_scar_radius(0.0, -1.0).unwrap().value, 0.6, 1e-15));
        let r = janowski_scar_radius(0.5, 0.0).unwrap();
        assert_eq!(r.value, 1.0);
        assert!(!r.clamped);
        assert!(janowski_scar_radius(0.2, 0.0).unwrap().clamped);
        assert!(janowski_scar_radius(-0.5, -0.5).is_err());
        assert!(janowski_scar_radius(1.0, -1.5).is_err());
    }

    #[test]
    fn janowski_monotone_on_grid() {
        let n = 20;
        let grid = |k: usize| -1.0 + 2.0 * k as f64 / (n - 1) as f64;
        let val = |a: f64, b: f64| janowski_scar_radius(a, b).ok().map(|r| r.value);
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (grid(i), grid(j));
                let Some(v) = val(a, b) else { continue };
                if let Some(w) = (i + 1 < n).then(|| val(grid(i + 1), b)).flatten() {
                    assert!(w <= v + 1e-15, "not nonincreasing in A at ({a}, {b})");
                }
                if let Some(w) = (j + 1 < n).then(|| val(a, grid(j + 1))).flatten() {
                    assert!(w >= v - 1e-15, "not nondecreasing in B at ({a}, {b})");
                }
            }
        }
    }

    #[test]
    fn corollary_matches_janowski() {
        for class in CorollaryClass::ALL {
            let params: &[f64] = match class {
                CorollaryClass::JanowskiM => &[0.6, 0.9, 1.0, 1.3, 2.0, 10.0],
                CorollaryClass::Padmanabhan => &[0.1, 1.0 / 3.0, 0.5, 0.9, 1.0],
                _ => &[0.0, 0.1, 0.25, 0.3, 0.5, 0.7, 0.95],
            };
            for &p in params {
                let c = corollary_radius(class, p).unwrap().value;
                let (a, b) = class.janowski_pair(p);
                let j = janowski_scar_radius(a, b).unwrap().value;
                assert!(close(c, j, 1e-14), "{} at {p}: {c} vs {j}", class.tag());
            }
        }
        assert!(close(corollary_radius(CorollaryClass::Padmanabhan, 1.0).unwrap().value, 1.0 / 3.0, 1e-15));
        assert_eq!(corollary_radius(CorollaryClass::JanowskiM, 1.0).unwrap().value, 0.5);
        assert!(corollary_radius(CorollaryClass::JanowskiM, 0.5).is_err());
    }

    #[test]
    fn knot_continuity() {
        let eps = 1e-12;
        let both = |f: &dyn Fn(f64) -> f64, x: f64| (f(x), f(x + eps));
        let checks: Vec<(&str, (f64, f64))> = vec![
            ("order_alpha corollary", both(&|a| corollary_radius(CorollaryClass::OrderAlpha, a).unwrap().value, 0.25)),
            ("s1 at 1/4", both(&|a| radius_within_scar(Target::OrderAlpha(a)).unwrap().value, 0.25)),
            ("s1 at 5/8", both(&|a| radius_within_scar(Target::OrderAlpha(a)).unwrap().value, 0.625)),
            ("s10 at alpha*", both(&|a| radius_within_scar(Target::Padmanabhan(a)).unwrap().value, alpha_star())),
            ("s11 at M*", both(&|m| radius_within_scar(Target::JanowskiM(m)).unwrap().value, m_star())),
            ("s11 at M0", (b_m(m0()), 1.0)),
            ("s13 at 5/2", both(&|b| radius_within_scar(Target::MBeta(b)).unwrap().value, 2.5)),
            ("cassinian at 3/4", both(&|c| scar_radius_of_class(TableClass::Cassinian(c)).unwrap().value, 0.75)),
            ("lemniscate at 1/2", (scar_radius_of_class(TableClass::Lemniscate(0.5 - eps)).unwrap().value, 1.0)),
            ("exp at alpha0", (scar_radius_of_class(TableClass::Exponential(alpha0() - eps)).unwrap().value, 1.0)),
        ];
        for (name, (l, r)) in checks {
            assert!(close(l, r, 1e-9), "{name}: {l} vs {r}");
        }
    }

    #[test]
    fn m_star_is_touch_point() {
        let m = m_star();
        assert!(close(m, 1.1423, 5e-4), "{m}");
        assert!(close(a_m(m), b_m(m), 1e-6), "{} vs {}", a_m(m), b_m(m));
        // a_M stays above b_M on both sides
        for dm in [-0.05, -0.01, 0.01, 0.05] {
            assert!(a_m(m + dm) > b_m(m + dm));
        }
        assert!(close(m0(), 1.309017, 5e-7));
        assert!(printed_a_m(1.05).unwrap() < 0.0);
        assert!(printed_a_m(0.8).is_none());
    }

    #[test]
    fn s11_branches() {
        let v = |m: f64| radius_within_scar(Target::JanowskiM(m)).unwrap();
        let r = v(1.05);
        assert_eq!(r.method, Method::RootOfPolynomial);
        assert!(close(r.value, 0.78885, 5e-5));
        assert!(close(v(0.8).value, 0.48324, 5e-5));
        assert!(close(v(1.0).value, 3f64.sqrt() - 1.0, 1e-12));
        assert!(close(v(1.2).value, 0.93960, 5e-5));
        assert_eq!(v(1.2).method, Method::ClosedForm);
        assert_eq!(v(1.5).value, 1.0);
    }

    #[test]
    fn within_examples() {
        let v = |t: Target| radius_within_scar(t).unwrap().value;
        assert!(close(v(Target::Rational), 0.189535, 5e-7));
        assert!(close(v(Target::Nephroid), 0.527525, 5e-7));
        assert!(close(v(Target::RightLemniscate), 0.253734, 5e-7));
        assert!(close(v(Target::Sine), 0.637969, 5e-7));
        assert!(close(v(Target::Cosh), 0.444355, 5e-7));
        assert!(close(v(Target::Sigmoid), 0.387168, 5e-7));
        assert!(close(v(Target::Lemniscate(0.0)), -1.0 + (2.0 * SQRT_2 - 1.0).sqrt(), 1e-15));
        assert!(close(alpha_star(), 0.672505, 5e-7));
        assert!(close(w_alpha(alpha_star()), 1.0, 1e-12));
        assert_eq!(v(Target::CardioidC), 1.0);
        assert!(close(v(Target::RamSingh(0.0)), 3f64.sqrt() - 1.0, 1e-15));
        assert!(radius_within_scar(Target::OrderAlpha(1.0)).is_err());
        assert!(radius_within_scar(Target::MBeta(1.0)).is_err());
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn table_examples() {
        let v = |c: TableClass| scar_radius_of_class(c).unwrap().value;
        assert!(close(v(TableClass::RightLemniscate), 0.7688, 5e-5));
        assert!(close(v(TableClass::Sine), 0.523598, 5e-6));
        assert!(close(v(TableClass::Nephroid), 0.557875, 5e-7));
        assert!(close(v(TableClass::MBeta(2.0)), 0.2, 1e-15));
        assert!(close(v(TableClass::Lemniscate(0.0)), 0.75, 1e-15));
        assert!(close(v(TableClass::Exponential(0.0)), 2f64.ln(), 1e-15));
        assert!(close(alpha0(), 0.209011, 5e-6));
        assert!(close(v(TableClass::Booth(0.0)), 0.5, 1e-15));
        assert!(scar_radius_of_class(TableClass::Cassinian(0.0)).is_err());
    }

    #[test]
    fn ratio_table() {
        let printed = [
            (1, Chi::Z, 0.1231),
            (2, Chi::Z, 0.154701),
            (3, Chi::Z, 0.23606),
            (1, Chi::ZOver1PlusZ, 0.10102),
            (2, Chi::ZOver1PlusZ, 0.12310),
            (3, Chi::ZOver1PlusZ, 0.17157),
            (1, Chi::ZOver1MinusZ2, 0.116675),
            (2, Chi::ZOver1MinusZ2, 0.14326),
            (3, Chi::ZOver1MinusZ2, 0.202135),
            (1, Chi::Koebe, 0.0851458),
            (2, Chi::Koebe, 0.101021),
            (3, Chi::Koebe, 0.13148),
            (1, Chi::ZPlusHalfZ2, 0.10924),
            (2, Chi::ZPlusHalfZ2, 0.134138),
            (3, Chi::ZPlusHalfZ2, 0.19028),
        ];
        for (i, chi, p) in printed {
            let r = ratio_class_radius(i, chi).unwrap();
            assert!(close(r.value, p, 5e-5), "({i}, {}) = {}", chi.tag(), r.value);
            if let Some(c) = r.certificate() {
                assert!(c.holds(), "({i}, {}) {c:?}", chi.tag());
            }
        }
        let r2 = ratio_class_radius(2, Chi::ZOver1MinusZ2).unwrap().value;
        assert!(close(r2, ratio_c2_radical(), 1e-12));
        assert!(ratio_class_radius(4, Chi::Z).is_err());
        assert_eq!(
            ratio_class_radius(3, Chi::Koebe).unwrap().value,
            convolution_radii().starlike_pair
        );
    }

    #[test]
    fn beta0_candidates() {
        let b = beta0_oracle();
        assert!(close(b, 0.7412918698, 1e-9), "{b}");
        assert!(close(beta0_statement(), b, 1e-9));
        assert!(close(beta0_closing(), 0.5122, 1e-4));
    }

    #[test]
    fn queries() {
        let q = |t: &str, p: &[f64]| radius_query(t, p).unwrap().value;
        assert!(close(q("janowski", &[1.0, -1.0]), 1.0 / 3.0, 1e-15));
        assert!(close(q("CLASS:rl", &[]), 0.7688, 5e-5));
        assert!(close(q("within:order_alpha", &[0.5]), 0.5f64.sqrt(), 1e-15));
        assert!(close(q("ratio:2:koebe", &[]), 0.101021, 5e-6));
        assert!(close(q("corollary:janowski_m", &[1.0]), 0.5, 1e-15));
        assert_eq!(q("partial_sum:from_s", &[]), 1.0 / 6.0);
        assert!(radius_query("within:bogus", &[]).is_err());
        assert!(radius_query("class:rl", &[1.0]).is_err());
        assert!(radius_query("nothing", &[]).is_err());
    }
}
