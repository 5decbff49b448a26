// SPDX-License-Identifier: MIT OR Apache-2.0

//! Named analytic functions with a closed form for `w(z) = z f'(z)/f(z)`,
//! their truncated Taylor series, and the partial-sum and growth utilities.
//!
//! Closed forms drive every sharpness check. The series path exists so the
//! closed forms can be cross-checked against
//! [`PowerSeries::log_derivative`].

use std::f64::consts::SQRT_2;
use std::fmt;

use crate::domains::{make_domain, DiskSpec, DomainSpec};
use crate::generators::{Generator, RATIONAL_K, RL_C};
use crate::series::{binomial_series, series_exp, series_multiply, LogDerivativeSeries, PowerSeries};
use crate::{Error, Result, C64};

const ONE: C64 = C64::new(1.0, 0.0);
const ZERO: C64 = C64::new(0.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

/// The comparison function `chi` of a ratio class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chi {
    /// `z`
    Z,
    /// `z/(1+z)`
    ZOver1PlusZ,
    /// `z/(1-z^2)`
    ZOver1MinusZ2,
    /// `z/(1-z)^2`
    Koebe,
    /// `z + z^2/2`
    ZPlusHalfZ2,
}

impl Chi {
    pub const ALL: [Chi; 5] = [
        Chi::Z,
        Chi::ZOver1PlusZ,
        Chi::ZOver1MinusZ2,
        Chi::Koebe,
        Chi::ZPlusHalfZ2,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Chi::Z => "z",
            Chi::ZOver1PlusZ => "z_over_1plusz",
            Chi::ZOver1MinusZ2 => "z_over_1minusz2",
            Chi::Koebe => "koebe",
            Chi::ZPlusHalfZ2 => "z_plus_half_z2",
        }
    }

    /// Row letter in the ratio-class table.
    pub fn row(self) -> char {
        match self {
            Chi::Z => 'a',
            Chi::ZOver1PlusZ => 'b',
            Chi::ZOver1MinusZ2 => 'c',
            Chi::Koebe => 'd',
            Chi::ZPlusHalfZ2 => 'e',
        }
    }

    pub fn parse(s: &str) -> Result<Chi> {
        Chi::ALL
            .into_iter()
            .find(|c| c.tag().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::unknown("chi", s, Chi::ALL.iter().map(|c| c.tag())))
    }

    /// Direction of the touch point `z = r u` of the ratio extremals in this row.
    pub fn touch_direction(self) -> C64 {
        match self {
            Chi::ZOver1PlusZ => ONE,
            Chi::ZOver1MinusZ2 => I,
            _ => -ONE,
        }
    }
}

/// Closed-form extremal or comparison function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Extremal {
    /// `z exp(z + z^2/4)`
    FCar,
    /// `z/(1-z)^2`
    Koebe,
    /// `z/(1-z)`
    HalfPlane,
    /// `z + z^2`
    Tau2,
    /// `z(1+Bz)^((A-B)/B)`, or `z exp(Az)` when `B = 0`
    Janowski { a: f64, b: f64 },
    /// `z(1-z)^(2(beta-1))`
    MBeta(f64),
    /// `z ((1 + sqrt(a) z)/(1 - sqrt(a) z))^(1/(2 sqrt a))`
    Booth(f64),
    /// `z + a z^n`
    Monomial { n: usize, a: C64 },
    /// Extremal of the ratio class `F_i^chi`.
    Ratio { class: u8, chi: Chi },
    /// `f` with `z f'/f = psi`.
    Generator(Generator),
}

/// A named function with closed-form `w = z f'/f`.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionSpec {
    pub name: String,
    pub kind: Extremal,
    pub anchor: &'static str,
}

impl fmt::Display for FunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

impl FunctionSpec {
    pub fn new(name: impl Into<String>, kind: Extremal, anchor: &'static str) -> Self {
        Self {
            name: name.into(),
            kind,
            anchor,
        }
    }

    /// The generator itself as the subordination quantity.
    pub fn generator(g: Generator) -> Self {
        Self::new(format!("psi:{}", g.tag()), Extremal::Generator(g), "generator of the class")
    }

    pub fn janowski(a: f64, b: f64) -> Result<Self> {
        crate::generators::check_janowski(a, b)?;
        Ok(Self::new(
            format!("janowski({a},{b})"),
            Extremal::Janowski { a, b },
            "Janowski extremal z(1+Bz)^((A-B)/B)",
        ))
    }

    pub fn m_beta(beta: f64) -> Result<Self> {
        if !(beta > 1.0) {
            return Err(Error::param("beta", beta, "beta > 1"));
        }
        Ok(Self::new(
            format!("m_beta({beta})"),
            Extremal::MBeta(beta),
            "M(beta) extremal z(1-z)^(2(beta-1))",
        ))
    }

    pub fn booth(alpha: f64) -> Result<Self> {
        Generator::booth(alpha)?;
        Ok(Self::new(format!("bl({alpha})"), Extremal::Booth(alpha), "BL(alpha) extremal"))
    }

    pub fn monomial(n: usize, a: C64) -> Result<Self> {
        if n < 2 {
            return Err(Error::param("n", n as f64, "n >= 2"));
        }
        if !(a.norm() < 1.0) {
            return Err(Error::param("a", a.norm(), "|a| < 1"));
        }
        Ok(Self::new(
            format!("monomial({n},{})", fmt_c(a)),
            Extremal::Monomial { n, a },
            "monomial z + a_n z^n",
        ))
    }

    pub fn ratio(class: u8, chi: Chi) -> Result<Self> {
        if !(1..=3).contains(&class) {
            return Err(Error::param("i", class as f64, "i in {1, 2, 3}"));
        }
        Ok(Self::new(
            format!("ratio({class},{})", chi.tag()),
            Extremal::Ratio { class, chi },
            ratio_anchor(class, chi),
        ))
    }

    /// `z f'(z)/f(z)`.
    pub fn w(&self, z: C64) -> C64 {
        w_of(&self.kind, z)
    }

    /// `w` at `z` with the pole and range checks applied.
    pub fn w_checked(&self, z: C64) -> Result<C64> {
        if !(z.norm() < 1.0) {
            return Err(Error::param("|z|", z.norm(), "|z| < 1"));
        }
        if let Extremal::Janowski { b, .. } = self.kind {
            // principal branch of (1 + Bz)^p needs 1 + Bz off the negative axis
            let base = ONE + z * b;
            if base.re <= 0.0 && base.im == 0.0 {
                return Err(Error::Pole { name: self.name.clone(), z });
            }
        }
        let w = self.w(z);
        if !w.is_finite() {
            return Err(Error::Pole { name: self.name.clone(), z });
        }
        Ok(w)
    }

    /// Human-readable closed form of `w`.
    pub fn formula(&self) -> String {
        match self.kind {
            Extremal::FCar => "1 + z + z^2/2".into(),
            Extremal::Koebe => "(1 + z)/(1 - z)".into(),
            Extremal::HalfPlane => "1/(1 - z)".into(),
            Extremal::Tau2 => "(1 + 2z)/(1 + z)".into(),
            Extremal::Janowski { .. } => "(1 + A z)/(1 + B z)".into(),
            Extremal::MBeta(_) => "(1 - (2 beta - 1) z)/(1 - z)".into(),
            Extremal::Booth(_) => "1 + z/(1 - alpha z^2)".into(),
            Extremal::Monomial { .. } => "(1 + n a z^(n-1))/(1 + a z^(n-1))".into(),
            Extremal::Ratio { class, chi } => ratio_formula(class, chi).into(),
            Extremal::Generator(g) => g.formula().into(),
        }
    }

    /// Taylor series of `f` to order `n` where a product form is known.
    pub fn series(&self, n: usize) -> Option<PowerSeries> {
        let n = n.max(1);
        let q = match self.kind {
            Extremal::FCar => return Some(PowerSeries::f_car(n)),
            Extremal::Koebe => return Some(PowerSeries::koebe(n)),
            Extremal::HalfPlane => return Some(PowerSeries::half_plane(n)),
            Extremal::Tau2 => product(n, &[(ONE, 1, 1.0)], &[]),
            Extremal::Janowski { a, b } => {
                if b == 0.0 {
                    product(n, &[], &[ZERO, C64::new(a, 0.0)])
                } else {
                    product(n, &[(C64::new(b, 0.0), 1, (a - b) / b)], &[])
                }
            }
            Extremal::MBeta(beta) => product(n, &[(-ONE, 1, 2.0 * (beta - 1.0))], &[]),
            Extremal::Booth(alpha) => {
                if alpha == 0.0 {
                    product(n, &[], &[ZERO, ONE])
                } else {
                    let s = alpha.sqrt();
                    let p = 1.0 / (2.0 * s);
                    product(n, &[(C64::new(s, 0.0), 1, p), (C64::new(-s, 0.0), 1, -p)], &[])
                }
            }
            Extremal::Monomial { n: m, a } => {
                let mut q = vec![ZERO; n];
                q[0] = ONE;
                if m - 1 < n {
                    q[m - 1] = a;
                }
                q
            }
            Extremal::Ratio { class, chi } => product(n, &ratio_factors(class, chi), &[]),
            Extremal::Generator(g) => {
                let psi = generator_taylor(g, n)?;
                return Some(LogDerivativeSeries::new(psi[1..].to_vec()).integrate());
            }
        };
        PowerSeries::from_quotient(q).ok()
    }
}

fn fmt_c(a: C64) -> String {
    if a.im == 0.0 {
        format!("{}", a.re)
    } else {
        format!("{}{:+}i", a.re, a.im)
    }
}

fn w_of(kind: &Extremal, z: C64) -> C64 {
    match *kind {
        Extremal::FCar => ONE + z + z * z * 0.5,
        Extremal::Koebe => (ONE + z) / (ONE - z),
        Extremal::HalfPlane => ONE / (ONE - z),
        Extremal::Tau2 => (ONE + z * 2.0) / (ONE + z),
        Extremal::Janowski { a, b } => (ONE + z * a) / (ONE + z * b),
        Extremal::MBeta(beta) => (ONE - z * (2.0 * beta - 1.0)) / (ONE - z),
        Extremal::Booth(alpha) => ONE + z / (ONE - z * z * alpha),
        Extremal::Monomial { n, a } => {
            let t = a * z.powi(n as i32 - 1);
            (ONE + t * n as f64) / (ONE + t)
        }
        Extremal::Ratio { class, chi } => ratio_w(class, chi, z),
        Extremal::Generator(g) => g.eval(z),
    }
}

/// `w` of the ratio-class extremals as displayed with their sharpness
/// arguments.
fn ratio_w(class: u8, chi: Chi, z: C64) -> C64 {
    let z2 = z * z;
    let z3 = z2 * z;
    let z4 = z2 * z2;
    let e_tail = (ONE + z) * 2.0 / (z + 2.0);
    match (chi, class) {
        (Chi::Z, 1) => ONE + z * 4.0 / (ONE - z2),
        (Chi::Z, 2) => (ONE + z * 3.0 - z2 * 2.0) / (ONE - z2),
        (Chi::Z, _) => ONE + z * 2.0 / (ONE - z2),
        (Chi::ZOver1PlusZ, 1) => ONE - z * 2.0 / (ONE - z) - z * 3.0 / (ONE + z),
        (Chi::ZOver1PlusZ, 2) => ONE - z * 4.0 / (ONE - z2),
        (Chi::ZOver1PlusZ, _) => ONE - z / (ONE - z) - z * 2.0 / (ONE + z),
        (Chi::ZOver1MinusZ2, 1) => {
            (z4 - I * z3 * 4.0 + z2 * 2.0 + I * z * 4.0 + 1.0) / (ONE - z4)
        }
        (Chi::ZOver1MinusZ2, 2) => (ONE + I * z * 3.0 + z2 * 3.0 - I * z3 * 3.0) / (ONE - z4),
        (Chi::ZOver1MinusZ2, _) => {
            (z4 - I * z3 * 2.0 + z2 * 2.0 + I * z * 2.0 + 1.0) / (ONE - z4)
        }
        (Chi::Koebe, 1) => (z2 + z * 6.0 + 1.0) / (ONE - z2),
        (Chi::Koebe, 2) => (ONE + z * 5.0) / (ONE - z2),
        (Chi::Koebe, _) => (ONE + z * 4.0 + z2) / (ONE - z2),
        (Chi::ZPlusHalfZ2, 1) => z * 4.0 / (ONE - z2) + e_tail,
        (Chi::ZPlusHalfZ2, 2) => z * 2.0 / (ONE + z) + z / (ONE - z) + e_tail,
        (Chi::ZPlusHalfZ2, _) => z * 2.0 / (ONE - z2) + e_tail,
    }
}

fn ratio_formula(class: u8, chi: Chi) -> &'static str {
    match (chi, class) {
        (Chi::Z, 1) => "1 + 4z/(1 - z^2)",
        (Chi::Z, 2) => "(1 + 3z - 2z^2)/(1 - z^2)",
        (Chi::Z, _) => "1 + 2z/(1 - z^2)",
        (Chi::ZOver1PlusZ, 1) => "1 - 2z/(1 - z) - 3z/(1 + z)",
        (Chi::ZOver1PlusZ, 2) => "1 - 4z/(1 - z^2)",
        (Chi::ZOver1PlusZ, _) => "1 - z/(1 - z) - 2z/(1 + z)",
        (Chi::ZOver1MinusZ2, 1) => "(z^4 - 4iz^3 + 2z^2 + 4iz + 1)/(1 - z^4)",
        (Chi::ZOver1MinusZ2, 2) => "(1 + 3iz + 3z^2 - 3iz^3)/(1 - z^4)",
        (Chi::ZOver1MinusZ2, _) => "(z^4 - 2iz^3 + 2z^2 + 2iz + 1)/(1 - z^4)",
        (Chi::Koebe, 1) => "(z^2 + 6z + 1)/(1 - z^2)",
        (Chi::Koebe, 2) => "(1 + 5z)/(1 - z^2)",
        (Chi::Koebe, _) => "(1 + 4z + z^2)/(1 - z^2)",
        (Chi::ZPlusHalfZ2, 1) => "4z/(1 - z^2) + 2(1 + z)/(2 + z)",
        (Chi::ZPlusHalfZ2, 2) => "2z/(1 + z) + z/(1 - z) + 2(1 + z)/(2 + z)",
        (Chi::ZPlusHalfZ2, _) => "2z/(1 - z^2) + 2(1 + z)/(2 + z)",
    }
}

fn ratio_anchor(class: u8, chi: Chi) -> &'static str {
    match (chi, class) {
        (Chi::Z, 1) => "ratio table (a): f0 = z(1+z)^2/(1-z)^2",
        (Chi::Z, 2) => "ratio table (a): f0 = z(1+z)^2/(1-z)",
        (Chi::Z, _) => "ratio table (a): f0 = z(1+z)/(1-z)",
        (Chi::ZOver1PlusZ, 1) => "ratio table (b): f0 = z(1-z)^2/(1+z)^3",
        (Chi::ZOver1PlusZ, 2) => "ratio table (b): f0 = z(1-z)^2/(1+z)^2",
        (Chi::ZOver1PlusZ, _) => "ratio table (b): f0 = z(1-z)/(1+z)^2",
        (Chi::ZOver1MinusZ2, 1) => "ratio table (c): f0 = z(1+iz)^2/((1-z^2)(1-iz)^2)",
        (Chi::ZOver1MinusZ2, 2) => "ratio table (c): f0 = z(1+iz)^2/((1-z^2)(1-iz))",
        (Chi::ZOver1MinusZ2, _) => "ratio table (c): f0 = z(1+iz)/((1-z^2)(1-iz))",
        (Chi::Koebe, 1) => "ratio table (d): f0 = z(1+z)^2/(1-z)^4",
        (Chi::Koebe, 2) => "ratio table (d): f0 = z(1+z)^2/(1-z)^3",
        (Chi::Koebe, _) => "ratio table (d): f0 = z(1+z)/(1-z)^3",
        (Chi::ZPlusHalfZ2, 1) => "ratio table (e): f0 = (1+z)^2(z+z^2/2)/(1-z)^2",
        (Chi::ZPlusHalfZ2, 2) => "ratio table (e): f0 = (1+z)^2(z+z^2/2)/(1-z)",
        (Chi::ZPlusHalfZ2, _) => "ratio table (e): f0 = (1+z)(z+z^2/2)/(1-z)",
    }
}

/// Factors `(1 + c z^m)^p` of `f0(z)/z` for the ratio extremals.
fn ratio_factors(class: u8, chi: Chi) -> Vec<(C64, usize, f64)> {
    let p = (ONE, 1, 1.0);
    let p2 = (ONE, 1, 2.0);
    let m = |e: f64| (-ONE, 1, e);
    let pl = |e: f64| (ONE, 1, e);
    let half = (C64::new(0.5, 0.0), 1, 1.0);
    let sq = (-ONE, 2, -1.0);
    match (chi, class) {
        (Chi::Z, 1) => vec![p2, m(-2.0)],
        (Chi::Z, 2) => vec![p2, m(-1.0)],
        (Chi::Z, _) => vec![p, m(-1.0)],
        (Chi::ZOver1PlusZ, 1) => vec![m(2.0), pl(-3.0)],
        (Chi::ZOver1PlusZ, 2) => vec![m(2.0), pl(-2.0)],
        (Chi::ZOver1PlusZ, _) => vec![m(1.0), pl(-2.0)],
        (Chi::ZOver1MinusZ2, 1) => vec![(I, 1, 2.0), sq, (-I, 1, -2.0)],
        (Chi::ZOver1MinusZ2, 2) => vec![(I, 1, 2.0), sq, (-I, 1, -1.0)],
        (Chi::ZOver1MinusZ2, _) => vec![(I, 1, 1.0), sq, (-I, 1, -1.0)],
        (Chi::Koebe, 1) => vec![p2, m(-4.0)],
        (Chi::Koebe, 2) => vec![p2, m(-3.0)],
        (Chi::Koebe, _) => vec![p, m(-3.0)],
        (Chi::ZPlusHalfZ2, 1) => vec![p2, half, m(-2.0)],
        (Chi::ZPlusHalfZ2, 2) => vec![p2, half, m(-1.0)],
        (Chi::ZPlusHalfZ2, _) => vec![p, half, m(-1.0)],
    }
}

/// `prod (1 + c z^m)^p * exp(E(z))` to `n` terms, constant term first.
fn product(n: usize, factors: &[(C64, usize, f64)], exponent: &[C64]) -> Vec<C64> {
    let mut acc = vec![ZERO; n];
    acc[0] = ONE;
    for &(c, m, p) in factors {
        let base = binomial_series(c, C64::new(p, 0.0), n.div_ceil(m));
        let mut spread = vec![ZERO; n];
        for (k, &b) in base.iter().enumerate() {
            if k * m < n {
                spread[k * m] = b;
            }
        }
        acc = series_multiply(&acc, &spread).expect("non-empty");
    }
    if !exponent.is_empty() {
        let mut e = vec![ZERO; n];
        for (k, &c) in exponent.iter().enumerate().take(n) {
            e[k] = c;
        }
        acc = series_multiply(&acc, &series_exp(&e).expect("zero constant")).expect("non-empty");
    }
    acc
}

/// Division of series with `b[0] != 0`.
fn series_divide(a: &[C64], b: &[C64]) -> Vec<C64> {
    let n = a.len().min(b.len());
    let mut q = vec![ZERO; n];
    for k in 0..n {
        let mut s = a[k];
        for j in 1..=k {
            s -= b[j] * q[k - j];
        }
        q[k] = s / b[0];
    }
    q
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|j| j as f64).product()
}

/// Taylor coefficients `psi_0..psi_{n-1}` of a generator.
pub fn generator_taylor(g: Generator, n: usize) -> Option<Vec<C64>> {
    let re = |x: f64| C64::new(x, 0.0);
    let mut c = vec![ZERO; n];
    c[0] = ONE;
    let set = |c: &mut Vec<C64>, k: usize, v: C64| {
        if k < c.len() {
            c[k] += v;
        }
    };
    match g {
        Generator::PhiCar => {
            set(&mut c, 1, ONE);
            set(&mut c, 2, re(0.5));
        }
        Generator::CardioidC => {
            set(&mut c, 1, re(4.0 / 3.0));
            set(&mut c, 2, re(2.0 / 3.0));
        }
        Generator::Limacon => {
            set(&mut c, 1, re(SQRT_2));
            set(&mut c, 2, re(0.5));
        }
        Generator::Nephroid => {
            set(&mut c, 1, ONE);
            set(&mut c, 3, re(-1.0 / 3.0));
        }
        Generator::Rational => {
            let k = RATIONAL_K;
            set(&mut c, 1, re(1.0 / k));
            for m in 2..n {
                c[m] = re(2.0 / k.powi(m as i32));
            }
        }
        Generator::Sine => {
            for m in (1..n).step_by(2) {
                let sign = if (m / 2) % 2 == 0 { 1.0 } else { -1.0 };
                c[m] = re(sign / factorial(m));
            }
        }
        Generator::Lune => {
            let b = binomial_series(ONE, re(0.5), n.div_ceil(2));
            for (j, &v) in b.iter().enumerate() {
                if 2 * j < n {
                    c[2 * j] = v;
                }
            }
            set(&mut c, 1, ONE);
        }
        Generator::RightLemniscate => {
            let a = binomial_series(-ONE, re(0.5), n);
            let b = binomial_series(re(RL_C), re(-0.5), n);
            let s = series_multiply(&a, &b).expect("non-empty");
            for (k, v) in s.into_iter().enumerate() {
                c[k] = -v * (SQRT_2 - 1.0);
            }
            c[0] += SQRT_2;
        }
        Generator::Sigmoid => {
            // 2/(1 + e^-z) = 2 e^z/(e^z + 1)
            let ez: Vec<C64> = (0..n).map(|k| re(1.0 / factorial(k))).collect();
            let mut den = ez.clone();
            den[0] += 1.0;
            let num: Vec<C64> = ez.iter().map(|v| v * 2.0).collect();
            c = series_divide(&num, &den);
        }
        Generator::Cosh => {
            for k in 1..n {
                c[k] = re(1.0 / factorial(2 * k));
            }
        }
        Generator::Exponential(a) => {
            for k in 1..n {
                c[k] = re((1.0 - a) / factorial(k));
            }
        }
        Generator::Lemniscate(a) => {
            let b = binomial_series(ONE, re(0.5), n);
            for k in 1..n {
                c[k] = b[k] * (1.0 - a);
            }
        }
        Generator::Cassinian(cc) => {
            c = binomial_series(re(cc), re(0.5), n);
        }
        Generator::Booth(a) => {
            let mut p = 1.0;
            for m in (1..n).step_by(2) {
                c[m] = re(p);
                p *= a;
            }
        }
        Generator::Janowski(a, b) => {
            let mut p = a - b;
            for k in 1..n {
                c[k] = re(p);
                p *= -b;
            }
        }
    }
    Some(c)
}

/// Entries of the extremal registry.
pub fn registry() -> Vec<FunctionSpec> {
    let mut v = vec![
        FunctionSpec::new("f_car", Extremal::FCar, "f_car(z) = z exp(z + z^2/4)"),
        FunctionSpec::new("koebe", Extremal::Koebe, "Koebe function k(z) = z/(1-z)^2"),
        FunctionSpec::new("half_plane", Extremal::HalfPlane, "half-plane mapping l(z) = z/(1-z)"),
        FunctionSpec::new("tau2", Extremal::Tau2, "second partial sum tau_2(z) = z + z^2"),
        FunctionSpec::new(
            "f5",
            Extremal::Generator(Generator::CardioidC),
            "f_5(z) = z exp((4z + z^2)/3)",
        ),
        FunctionSpec::new(
            "f6",
            Extremal::Generator(Generator::Limacon),
            "f_6(z) = z exp(sqrt2 z + z^2/4)",
        ),
        FunctionSpec::new(
            "f8",
            Extremal::Generator(Generator::Sine),
            "f_8(z) = z exp(int_0^z sin t/t dt)",
        ),
        FunctionSpec::janowski(1.0, -1.0).expect("valid"),
        FunctionSpec::janowski(0.5, 0.0).expect("valid"),
        FunctionSpec::m_beta(2.0).expect("valid"),
        FunctionSpec::booth(0.0).expect("valid"),
        FunctionSpec::booth(0.5).expect("valid"),
        FunctionSpec::monomial(2, C64::new(1.0 / 3.0, 0.0)).expect("valid"),
    ];
    for chi in Chi::ALL {
        for i in 1..=3 {
            v.push(FunctionSpec::ratio(i, chi).expect("valid"));
        }
    }
    v
}

/// Looks up a function by name. Accepted forms: the fixed registry names,
/// `janowski(A,B)`, `m_beta(b)`, `bl(a)`, `monomial(n,a)`, `ratio(i,chi)`,
/// and `psi:<domain kind>[(params)]` for a generator itself.
pub fn lookup(name: &str) -> Result<FunctionSpec> {
    let name = name.trim();
    if let Some(rest) = name.strip_prefix("psi:") {
        let (kind, args) = split_call(rest)?;
        let nums = parse_nums(&args)?;
        return match make_domain(&kind, &nums)? {
            DomainSpec::Image(g) => Ok(FunctionSpec::generator(g)),
            DomainSpec::Cardioid => Ok(FunctionSpec::generator(Generator::PhiCar)),
            _ => Err(Error::param("psi", f64::NAN, "kind must be a generator image")),
        };
    }
    let (head, args) = split_call(name)?;
    match head.as_str() {
        "janowski" => {
            let p = arity(parse_nums(&args)?, 2)?;
            FunctionSpec::janowski(p[0], p[1])
        }
        "m_beta" => FunctionSpec::m_beta(arity(parse_nums(&args)?, 1)?[0]),
        "bl" => FunctionSpec::booth(arity(parse_nums(&args)?, 1)?[0]),
        "monomial" => {
            let p = arity(parse_nums(&args)?, 2)?;
            if p[0].fract() != 0.0 || p[0] < 2.0 {
                return Err(Error::param("n", p[0], "integer n >= 2"));
            }
            FunctionSpec::monomial(p[0] as usize, C64::new(p[1], 0.0))
        }
        "ratio" => {
            if args.len() != 2 {
                return Err(Error::param("ratio", args.len() as f64, "ratio(i, chi)"));
            }
            let i: u8 = args[0]
                .trim()
                .parse()
                .map_err(|_| Error::param("i", f64::NAN, "i in {1, 2, 3}"))?;
            FunctionSpec::ratio(i, Chi::parse(&args[1])?)
        }
        _ if args.is_empty() => registry()
            .into_iter()
            .find(|f| f.name == head)
            .ok_or_else(|| Error::unknown("function", name, available_names())),
        _ => Err(Error::unknown("function", name, available_names())),
    }
}

fn available_names() -> Vec<String> {
    let mut v: Vec<String> = registry().into_iter().map(|f| f.name).collect();
    v.extend(
        ["janowski(A,B)", "m_beta(beta)", "bl(alpha)", "monomial(n,a)", "ratio(i,chi)", "psi:<kind>"]
            .map(String::from),
    );
    v
}

fn split_call(s: &str) -> Result<(String, Vec<String>)> {
    match s.find('(') {
        None => Ok((s.trim().to_string(), Vec::new())),
        Some(open) => {
            let inner = s[open + 1..]
                .strip_suffix(')')
                .ok_or_else(|| Error::param("name", f64::NAN, "missing closing parenthesis"))?;
            let args = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner.split(',').map(|a| a.trim().to_string()).collect()
            };
            Ok((s[..open].trim().to_string(), args))
        }
    }
}

fn parse_nums(args: &[String]) -> Result<Vec<f64>> {
    args.iter()
        .map(|a| {
            a.parse::<f64>()
                .map_err(|_| Error::param("argument", f64::NAN, "a real number"))
        })
        .collect()
}

fn arity(p: Vec<f64>, n: usize) -> Result<Vec<f64>> {
    if p.len() != n {
        return Err(Error::param("arguments", p.len() as f64, "wrong number of arguments"));
    }
    Ok(p)
}

/// `z f'(z)/f(z)` of a named function.
pub fn w_of_named(name: &str, z: C64) -> Result<C64> {
    lookup(name)?.w_checked(z)
}

/// Image of `D` under `w = (1 + n a z^(n-1))/(1 + a z^(n-1))`.
pub fn monomial_image_disk(n: usize, a_abs: f64) -> Result<DiskSpec> {
    if n < 2 {
        return Err(Error::param("n", n as f64, "n >= 2"));
    }
    if !(0.0..1.0).contains(&a_abs) {
        return Err(Error::param("a", a_abs, "0 <= |a_n| < 1"));
    }
    let d = 1.0 - a_abs * a_abs;
    Ok(DiskSpec {
        center: C64::new((1.0 - n as f64 * a_abs * a_abs) / d, 0.0),
        radius: (n as f64 - 1.0) * a_abs / d,
    })
}

/// `(-f_car(-r), f_car(r))`, the bounds on `|f(z)|` for `|z| = r`.
pub fn growth_envelope(r: f64) -> Result<(f64, f64)> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::param("r", r, "0 <= r <= 1"));
    }
    let q = r * r / 4.0;
    Ok((r * (q - r).exp(), r * (q + r).exp()))
}

/// The first `n` terms of `f`.
pub fn partial_sum(f: &PowerSeries, n: usize) -> Result<PowerSeries> {
    f.truncate(n)
}

/// The `z^4` coefficient of `f_8(z) = z exp(int_0^z sin t/t dt)`.
pub struct CoefficientCheck {
    pub shown: f64,
    pub computed: f64,
}

impl CoefficientCheck {
    pub fn agrees(&self) -> bool {
        (self.shown - self.computed).abs() < 1e-12
    }
}

pub fn f8_fourth_coefficient() -> CoefficientCheck {
    let s = FunctionSpec::new("f8", Extremal::Generator(Generator::Sine), "")
        .series(8)
        .expect("sine series");
    CoefficientCheck {
        shown: 1.0 / 9.0,
        computed: s.coeff(4).re,
    }
}

/// Registry listing: name, anchor, closed-form `w`.
pub fn listing() -> String {
    let mut out = String::new();
    for f in registry() {
        out.push_str(&format!("{}\t{}\tw = {}\n", f.name, f.anchor, f.formula()));
    }
    let c = f8_fourth_coefficient();
    out.push_str(&format!(
        "f8 z^4 coefficient\tdisplayed {}\tcomputed {}\n",
        crate::fmt::sig9(c.shown),
        crate::fmt::sig9(c.computed)
    ));
    out
}

/// A generator together with the domain kind of its image.
#[derive(Debug, Clone)]
pub struct GeneratorEntry {
    pub name: &'static str,
    pub generator: Generator,
    pub domain_kind: &'static str,
    pub params: Vec<f64>,
    pub anchor: &'static str,
}

impl GeneratorEntry {
    pub fn domain(&self) -> DomainSpec {
        make_domain(self.domain_kind, &self.params).expect("registered parameters are valid")
    }
}

pub fn generator_registry() -> Vec<GeneratorEntry> {
    let e = |name, generator, domain_kind, params: &[f64], anchor| GeneratorEntry {
        name,
        generator,
        domain_kind,
        params: params.to_vec(),
        anchor,
    };
    vec![
        e("phi_car", Generator::PhiCar, "cardioid", &[], "1 + z + z^2/2"),
        e("psi_C", Generator::CardioidC, "psi_c", &[], "cardioid 1 + 4z/3 + 2z^2/3"),
        e("psi_lim", Generator::Limacon, "limacon", &[], "limacon 1 + sqrt2 z + z^2/2"),
        e("psi_ne", Generator::Nephroid, "nephroid", &[], "nephroid 1 + z - z^3/3"),
        e("psi_R", Generator::Rational, "psi_r", &[], "rational 1 + (z/k)(k+z)/(k-z)"),
        e("psi_s", Generator::Sine, "sine", &[], "sine 1 + sin z"),
        e("psi_lune", Generator::Lune, "lune", &[], "lune z + sqrt(1 + z^2)"),
        e("psi_RL", Generator::RightLemniscate, "rl", &[], "left half of the shifted lemniscate"),
        e("psi_SG", Generator::Sigmoid, "sg", &[], "sigmoid 2/(1 + e^-z)"),
        e("psi_cosh", Generator::Cosh, "cosh", &[], "|log(w + sqrt(w^2 - 1))| < 1"),
        e("psi_e(0.2)", Generator::Exponential(0.2), "exp", &[0.2], "alpha + (1 - alpha) e^z"),
        e("psi_L(0.5)", Generator::Lemniscate(0.5), "lemniscate", &[0.5], "alpha + (1 - alpha) sqrt(1 + z)"),
        e("psi_cass(0.75)", Generator::Cassinian(0.75), "cassinian", &[0.75], "sqrt(1 + c z)"),
        e("psi_BL(0.4)", Generator::Booth(0.4), "bl", &[0.4], "1 + z/(1 - alpha z^2)"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use std::f64::consts::TAU;

    #[test]
    fn normalized_at_origin() {
        for f in registry() {
            assert!((f.w(ZERO) - ONE).norm() < 1e-14, "{}", f.name);
        }
        for g in generator_registry() {
            let psi = g.generator;
            assert!((psi.eval(ZERO) - ONE).norm() < 1e-14);
            let h = 1e-6;
            let d = (psi.eval(c64(h, 0.0)) - psi.eval(c64(-h, 0.0))) / (2.0 * h);
            assert!(d.re > 0.0 && d.im.abs() < 1e-9, "{}", g.name);
        }
    }

    #[test]
    fn series_matches_closed_form() {
        let mut specs = registry();
        for g in Generator::catalogue() {
            specs.push(FunctionSpec::generator(g));
        }
        specs.push(FunctionSpec::m_beta(1.7).unwrap());
        specs.push(FunctionSpec::janowski(-0.3, -0.8).unwrap());
        specs.push(FunctionSpec::monomial(5, c64(0.1, -0.2)).unwrap());
        for f in specs {
            let s = f.series(80).unwrap_or_else(|| panic!("{} has no series", f.name));
            let q = s.log_derivative().unwrap();
            for k in 0..64 {
                let z = C64::from_polar(0.5, TAU * k as f64 / 64.0);
                let d = (q.eval(z) - f.w(z)).norm();
                assert!(d < 1e-8, "{} at {z}: {d:e}", f.name);
            }
        }
    }

    #[test]
    fn generator_boundaries_match_domains() {
        for g in generator_registry() {
            let d = g.domain();
            for k in 0..64 {
                let t = TAU * k as f64 / 64.0;
                assert!((g.generator.boundary(t) - d.boundary(t)).norm() < 1e-9, "{}", g.name);
            }
        }
    }

    #[test]
    fn partial_sums() {
        let f = PowerSeries::f_car(8);
        assert_eq!(partial_sum(&f, 2).unwrap().coeffs(), &[ONE, ONE]);
        assert_eq!(partial_sum(&f, 1).unwrap().coeffs(), &[ONE]);
        let p3 = partial_sum(&f, 3).unwrap();
        assert!((p3.coeff(3) - 0.75).norm() < 1e-15);
        assert!(partial_sum(&f, 9).is_err());
        assert!(partial_sum(&f, 0).is_err());
    }

    #[test]
    fn named_examples() {
        let w = w_of_named("f_car", c64(-1.0 / 3.0, 0.0)).unwrap();
        assert!((w - 13.0 / 18.0).norm() < 1e-15);
        let w = w_of_named("m_beta(2)", c64(0.2, 0.0)).unwrap();
        assert!((w - 0.5).norm() < 1e-15);
        let w = w_of_named("monomial(2, 0.3333333333333333)", c64(-1.0, 0.0) * 0.999).unwrap();
        assert!(w.re > 0.5);
        let w = w_of_named("ratio(1, z_over_1minusz2)", c64(0.0, 0.1)).unwrap();
        assert!(w.is_finite());
        assert!(w_of_named("psi:exp(0.2)", c64(0.0, 0.0)).is_ok());
        assert!(matches!(w_of_named("nonesuch", ZERO), Err(Error::Unknown { .. })));
        assert!(w_of_named("koebe", c64(1.0, 0.0)).is_err());
        assert!(w_of_named("ratio(4, z)", ZERO).is_err());
        assert!(w_of_named("janowski(1, -1", ZERO).is_err());
    }

    #[test]
    fn monomial_disks() {
        let d = monomial_image_disk(2, 1.0 / 3.0).unwrap();
        assert!((d.center.re - 7.0 / 8.0).abs() < 1e-15);
        assert!((d.radius - 3.0 / 8.0).abs() < 1e-15);
        let d = monomial_image_disk(2, 0.0).unwrap();
        assert_eq!((d.center.re, d.radius), (1.0, 0.0));
        let d = monomial_image_disk(3, 0.2).unwrap();
        assert!((d.center.re - 11.0 / 12.0).abs() < 1e-15);
        assert!((d.radius - 5.0 / 12.0).abs() < 1e-15);
        assert!(monomial_image_disk(2, 1.0).is_err());
        for n in 2..=8 {
            let a = 1.0 / (2.0 * n as f64 - 1.0);
            let d = monomial_image_disk(n, a).unwrap();
            assert!((d.center.re - d.radius - 0.5).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn growth() {
        let (lo, _) = growth_envelope(1.0).unwrap();
        assert!((lo - (-0.75f64).exp()).abs() < 1e-15);
        assert!((lo - 0.47236).abs() < 5e-5);
        assert_eq!(growth_envelope(0.0).unwrap(), (0.0, 0.0));
        let (lo, hi) = growth_envelope(0.5).unwrap();
        assert!((lo - 0.5 * (-7.0f64 / 16.0).exp()).abs() < 1e-15);
        assert!(hi > lo);
        assert!(growth_envelope(1.5).is_err());
    }

    #[test]
    fn f8_coefficient() {
        let c = f8_fourth_coefficient();
        assert!(c.agrees(), "computed {}", c.computed);
        let s = FunctionSpec::new("f8", Extremal::Generator(Generator::Sine), "").series(5).unwrap();
        assert!((s.coeff(2) - 1.0).norm() < 1e-15);
        assert!((s.coeff(3) - 0.5).norm() < 1e-15);
    }

    #[test]
    fn listing_has_every_entry() {
        let l = listing();
        assert_eq!(l.lines().count(), registry().len() + 1);
        assert!(l.contains("ratio(1,z_over_1minusz2)"));
    }
}
