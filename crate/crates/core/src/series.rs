// SPDX-License-Identifier: MIT OR Apache-2.0

//! Truncated power series for normalized analytic functions
//! `f(z) = z + a_2 z^2 + ... + a_N z^N`.
//!
//! Two representations are used. A bare coefficient slice `&[C64]` holds a
//! series with its constant term first and is what [`series_multiply`] and
//! [`series_exp`] operate on. [`PowerSeries`] holds `a_1..a_N` of a function
//! vanishing at the origin.

use std::fmt::Write as _;
use std::io::BufRead;

use crate::{Error, Result, C64};

/// Truncation order used when a caller does not pick one.
pub const DEFAULT_ORDER: usize = 32;

const ONE: C64 = C64::new(1.0, 0.0);
const ZERO: C64 = C64::new(0.0, 0.0);

/// Cauchy product of two series (constant term first), truncated to the
/// shorter of the two lengths.
pub fn series_multiply(p: &[C64], q: &[C64]) -> Result<Vec<C64>> {
    if p.is_empty() || q.is_empty() {
        return Err(Error::EmptySeries);
    }
    let n = p.len().min(q.len());
    let mut out = vec![ZERO; n];
    for (i, &pi) in p.iter().take(n).enumerate() {
        for (j, &qj) in q.iter().take(n - i).enumerate() {
            out[i + j] += pi * qj;
        }
    }
    Ok(out)
}

/// `exp(p)` for a series with zero constant term, via `E' = p' E`.
pub fn series_exp(p: &[C64]) -> Result<Vec<C64>> {
    let Some(&c0) = p.first() else {
        return Err(Error::EmptySeries);
    };
    if c0 != ZERO {
        return Err(Error::NonZeroConstant(c0));
    }
    let n = p.len();
    let mut e = vec![ZERO; n];
    e[0] = ONE;
    for m in 1..n {
        let mut acc = ZERO;
        for k in 1..=m {
            acc += p[k] * e[m - k] * k as f64;
        }
        e[m] = acc / m as f64;
    }
    Ok(e)
}

/// Coefficients of `(1 + c z)^p` up to `z^(n-1)` by the binomial series.
pub fn binomial_series(c: C64, exponent: C64, n: usize) -> Vec<C64> {
    let mut out = Vec::with_capacity(n);
    let mut term = ONE;
    for k in 0..n {
        out.push(term);
        // next binomial coefficient (exponent choose k+1) c^(k+1)
        term = term * (exponent - k as f64) / (k as f64 + 1.0) * c;
    }
    out
}

/// Evaluates a constant-term-first series by Horner's rule.
pub fn horner(coeffs: &[C64], z: C64) -> C64 {
    coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
}

/// A function `f(z) = a_1 z + a_2 z^2 + ... + a_N z^N`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<C64>,
}

impl PowerSeries {
    /// Any non-empty coefficient list `a_1..a_N`.
    pub fn new(coeffs: Vec<C64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(Self { coeffs })
    }

    /// Like [`PowerSeries::new`] but requires `a_1 = 1` exactly.
    pub fn normalized(coeffs: Vec<C64>) -> Result<Self> {
        let s = Self::new(coeffs)?;
        s.ensure_normalized()?;
        Ok(s)
    }

    /// `z + a_2 z^2 + ...` from the tail `a_2, a_3, ...`.
    pub fn from_tail(tail: &[C64]) -> Self {
        let mut coeffs = Vec::with_capacity(tail.len() + 1);
        coeffs.push(ONE);
        coeffs.extend_from_slice(tail);
        Self { coeffs }
    }

    /// Builds `f = z * F` from the series of `F = f/z` (constant term first).
    pub fn from_quotient(quotient: Vec<C64>) -> Result<Self> {
        Self::new(quotient)
    }

    /// `f(z) = z`, padded with zeros to order `n`.
    pub fn identity(n: usize) -> Self {
        let mut coeffs = vec![ZERO; n.max(1)];
        coeffs[0] = ONE;
        Self { coeffs }
    }

    /// `z/(1-z)`: every coefficient is 1. Identity for the Hadamard product.
    pub fn half_plane(n: usize) -> Self {
        Self {
            coeffs: vec![ONE; n.max(1)],
        }
    }

    /// Koebe function `z/(1-z)^2`, `a_n = n`.
    pub fn koebe(n: usize) -> Self {
        Self {
            coeffs: (1..=n.max(1)).map(|k| C64::new(k as f64, 0.0)).collect(),
        }
    }

    /// `f_car(z) = z exp(z + z^2/4)`.
    pub fn f_car(n: usize) -> Self {
        let n = n.max(1);
        let mut p = vec![ZERO; n];
        if n > 1 {
            p[1] = ONE;
        }
        if n > 2 {
            p[2] = C64::new(0.25, 0.0);
        }
        let coeffs = series_exp(&p).expect("zero constant term");
        Self { coeffs }
    }

    /// Monomial `z + a z^n` stored to order `n`.
    pub fn monomial(n: usize, a: C64) -> Result<Self> {
        if n < 2 {
            return Err(Error::param("n", n as f64, "n >= 2"));
        }
        let mut coeffs = vec![ZERO; n];
        coeffs[0] = ONE;
        coeffs[n - 1] = a;
        Ok(Self { coeffs })
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// `a_1..a_N`.
    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    /// `a_n` (1-based); zero past the truncation order.
    pub fn coeff(&self, n: usize) -> C64 {
        if n == 0 {
            return ZERO;
        }
        self.coeffs.get(n - 1).copied().unwrap_or(ZERO)
    }

    pub fn is_normalized(&self) -> bool {
        self.coeffs[0] == ONE
    }

    fn ensure_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(Error::NotNormalized(self.coeffs[0]))
        }
    }

    /// Series of `f(z)/z` (constant term first).
    pub fn quotient(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn eval(&self, z: C64) -> C64 {
        horner(&self.coeffs, z) * z
    }

    pub fn eval_derivative(&self, z: C64) -> C64 {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .fold(ZERO, |acc, (k, &a)| acc * z + a * (k as f64 + 1.0))
    }

    /// `z f'(z) / f(z)` by direct polynomial evaluation. At `z = 0` the limit
    /// `1` is returned for a normalized series.
    pub fn w_at(&self, z: C64) -> C64 {
        let q = horner(&self.coeffs, z);
        if z == ZERO {
            return ONE;
        }
        self.eval_derivative(z) / q
    }

    /// First `n` coefficients (`n` in `1..=N`).
    pub fn truncate(&self, n: usize) -> Result<Self> {
        if n == 0 || n > self.order() {
            return Err(Error::param(
                "n",
                n as f64,
                "1 <= n <= truncation order",
            ));
        }
        Ok(Self {
            coeffs: self.coeffs[..n].to_vec(),
        })
    }

    /// Series of `z f'(z)/f(z)` through the recurrence `F q = (z F)'`
    /// with `F = f/z`.
    pub fn log_derivative(&self) -> Result<LogDerivativeSeries> {
        self.ensure_normalized()?;
        let b = &self.coeffs;
        let n = b.len();
        let mut q = vec![ZERO; n];
        q[0] = ONE;
        for k in 1..n {
            let mut acc = b[k] * (k as f64 + 1.0);
            for j in 1..=k {
                acc -= b[j] * q[k - j];
            }
            q[k] = acc;
        }
        Ok(LogDerivativeSeries {
            coeffs: q[1..].to_vec(),
        })
    }

    /// Coefficientwise product `sum a_n b_n z^n`.
    pub fn hadamard(&self, other: &PowerSeries) -> Result<PowerSeries> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        self.ensure_normalized()?;
        other.ensure_normalized()?;
        Ok(PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    /// `f(rho z)/rho`, i.e. `a_n rho^(n-1)`.
    pub fn dilate(&self, rho: f64) -> Result<PowerSeries> {
        if !(rho > 0.0 && rho <= 1.0) {
            return Err(Error::param("rho", rho, "0 < rho <= 1"));
        }
        let mut scale = 1.0;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| {
                let c = a * scale;
                scale *= rho;
                c
            })
            .collect();
        Ok(PowerSeries { coeffs })
    }

    /// `sum_{n>=2} (2n-1)|a_n|` over the stored coefficients.
    pub fn coefficient_sum(&self) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| (2.0 * (k as f64 + 1.0) - 1.0) * a.norm())
            .sum()
    }

    /// Sufficient membership condition `sum (2n-1)|a_n| <= 1`. The bound is
    /// compared with a 1e-12 slack so exact boundary inputs such as
    /// `z + z^2/3` are accepted despite rounding.
    pub fn coefficient_condition(&self) -> bool {
        self.coefficient_sum() <= 1.0 + COEFF_SLACK
    }

    /// Writes one `re im` pair per line, `a_1` first.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for a in &self.coeffs {
            let _ = writeln!(s, "{:e} {:e}", a.re, a.im);
        }
        s
    }

    /// Reads the format produced by [`PowerSeries::to_text`]. Blank lines and
    /// lines starting with `#` are skipped; a single number means `im = 0`.
    pub fn from_reader<R: BufRead>(reader: R) -> Result<Self> {
        let mut coeffs = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let mut parts = t.split(|c: char| c.is_whitespace() || c == ',').filter(|p| !p.is_empty());
            let parse = |s: Option<&str>, line: usize| -> Result<f64> {
                let s = s.ok_or(Error::Parse {
                    line,
                    message: "missing value".into(),
                })?;
                s.parse::<f64>().map_err(|e| Error::Parse {
                    line,
                    message: format!("`{s}`: {e}"),
                })
            };
            let re = parse(parts.next(), idx + 1)?;
            let im = match parts.next() {
                Some(p) => parse(Some(p), idx + 1)?,
                None => 0.0,
            };
            if parts.next().is_some() {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: "expected `re im`".into(),
                });
            }
            coeffs.push(C64::new(re, im));
        }
        Self::new(coeffs)
    }

    pub fn from_text(text: &str) -> Result<Self> {
        Self::from_reader(text.as_bytes())
    }
}

const COEFF_SLACK: f64 = 1e-12;

/// Exact criterion for `z + a z^n`: member iff `|a| <= 1/(2n-1)`.
pub fn monomial_member(n: usize, a: C64) -> Result<bool> {
    if n < 2 {
        return Err(Error::param("n", n as f64, "n >= 2"));
    }
    Ok(a.norm() <= 1.0 / (2.0 * n as f64 - 1.0))
}

/// Coefficients `w_1..w_{N-1}` of `z f'(z)/f(z) - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct LogDerivativeSeries {
    coeffs: Vec<C64>,
}

impl LogDerivativeSeries {
    pub fn new(coeffs: Vec<C64>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    /// Truncation order of the series of `z f'/f` (constant term included).
    pub fn order(&self) -> usize {
        self.coeffs.len() + 1
    }

    /// Truncated series of `z f'(z)/f(z)` evaluated at `z`.
    pub fn eval(&self, z: C64) -> C64 {
        ONE + horner(&self.coeffs, z) * z
    }

    /// Series of `z f'/f` with its constant term `1` first.
    pub fn full(&self) -> Vec<C64> {
        let mut v = Vec::with_capacity(self.coeffs.len() + 1);
        v.push(ONE);
        v.extend_from_slice(&self.coeffs);
        v
    }

    /// Rebuilds `f(z) = z exp( int_0^z (q(t) - 1)/t dt )`.
    pub fn integrate(&self) -> PowerSeries {
        let mut p = vec![ZERO; self.coeffs.len() + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            p[k + 1] = c / (k as f64 + 1.0);
        }
        let coeffs = series_exp(&p).expect("zero constant term");
        PowerSeries { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use proptest::prelude::*;

    fn re(v: &[f64]) -> Vec<C64> {
        v.iter().map(|&x| c64(x, 0.0)).collect()
    }

    fn close(a: &[C64], b: &[C64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() <= tol)
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(series_multiply(&re(&[1., 1.]), &re(&[1., 1.])).unwrap(), re(&[1., 2.]));
        let p = re(&[0.3, -1.0, 2.5, 4.0]);
        assert_eq!(series_multiply(&p, &re(&[1., 0., 0., 0.])).unwrap(), p);
        assert!(matches!(series_multiply(&[], &p), Err(Error::EmptySeries)));
    }

    #[test]
    fn f_car_coefficients_from_product_and_exp() {
        let expected = re(&[1.0, 1.0, 0.75, 5.0 / 12.0, 19.0 / 96.0]);
        // exp(z) * exp(z^2/4)
        let e1 = series_exp(&re(&[0., 1., 0., 0., 0.])).unwrap();
        let e2 = series_exp(&re(&[0., 0., 0.25, 0., 0.])).unwrap();
        assert!(close(&series_multiply(&e1, &e2).unwrap(), &expected, 1e-14));
        // exp(z + z^2/4) directly
        let e = series_exp(&re(&[0., 1., 0.25, 0., 0.])).unwrap();
        assert!(close(&e, &expected, 1e-14));
        assert!(close(&PowerSeries::f_car(5).coeffs, &expected, 1e-14));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(series_exp(&re(&[0., 0., 0.])).unwrap(), re(&[1., 0., 0.]));
        let e = series_exp(&re(&[0., 1., 0., 0.])).unwrap();
        assert!(close(&e, &re(&[1., 1., 0.5, 1. / 6.]), 1e-15));
        assert!(matches!(series_exp(&re(&[1., 1.])), Err(Error::NonZeroConstant(_))));
    }

    #[test]
    fn log_derivative_examples() {
        let id = PowerSeries::identity(6).log_derivative().unwrap();
        assert!(id.coeffs().iter().all(|c| c.norm() == 0.0));

        // z f_car'/f_car = 1 + z + z^2/2 exactly
        let w = PowerSeries::f_car(16).log_derivative().unwrap();
        let mut want = vec![C64::new(0.0, 0.0); 15];
        want[0] = c64(1.0, 0.0);
        want[1] = c64(0.5, 0.0);
        assert!(close(w.coeffs(), &want, 1e-13));
        assert!((w.eval(c64(-1.0, 0.0)) - c64(0.5, 0.0)).norm() < 1e-12);

        // tau_2 = z + z^2 at z = -1/3 gives 1/2
        let tau = PowerSeries::from_tail(&[c64(1.0, 0.0)]);
        assert!((tau.w_at(c64(-1.0 / 3.0, 0.0)) - c64(0.5, 0.0)).norm() < 1e-15);

        let bad = PowerSeries::new(re(&[2.0, 1.0])).unwrap();
        assert!(matches!(bad.log_derivative(), Err(Error::NotNormalized(_))));
    }

    #[test]
    fn hadamard_examples() {
        let f = PowerSeries::from_tail(&[c64(0.2, -0.1), c64(0.3, 0.0), c64(-0.7, 0.4)]);
        assert_eq!(f.hadamard(&PowerSeries::half_plane(4)).unwrap(), f);

        // Koebe * Koebe: brute-force a_n = n*n
        let k = PowerSeries::koebe(10);
        let kk = k.hadamard(&k).unwrap();
        for n in 1..=10 {
            assert_eq!(kk.coeff(n), c64((n * n) as f64, 0.0));
        }

        let a = PowerSeries::from_tail(&[c64(1.0, 0.0)]);
        let b = PowerSeries::from_tail(&[c64(3.0, 0.0)]);
        assert_eq!(a.hadamard(&b).unwrap(), PowerSeries::from_tail(&[c64(3.0, 0.0)]));
        assert!(matches!(
            a.hadamard(&PowerSeries::koebe(3)),
            Err(Error::OrderMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn dilate_examples() {
        let f = PowerSeries::from_tail(&[c64(1.0, 0.0)]);
        assert_eq!(f.dilate(1.0).unwrap(), f);
        let g = f.dilate(1.0 / 3.0).unwrap();
        assert!((g.coeff(2) - c64(1.0 / 3.0, 0.0)).norm() < 1e-16);
        assert!(monomial_member(2, g.coeff(2)).unwrap());

        let k = PowerSeries::koebe(2).dilate(1.0 / 6.0).unwrap();
        assert!((k.coeff(2).re - 1.0 / 3.0).abs() < 1e-16);
        assert!(k.coefficient_condition());

        assert!(f.dilate(0.0).is_err());
        assert!(f.dilate(1.5).is_err());
    }

    #[test]
    fn coefficient_condition_examples() {
        assert!(PowerSeries::identity(4).coefficient_condition());
        let boundary = PowerSeries::from_tail(&[c64(1.0 / 3.0, 0.0)]);
        assert!((boundary.coefficient_sum() - 1.0).abs() < 1e-15);
        assert!(boundary.coefficient_condition());
        let over = PowerSeries::from_tail(&[c64(0.5, 0.0)]);
        assert_eq!(over.coefficient_sum(), 1.5);
        assert!(!over.coefficient_condition());
    }

    #[test]
    fn monomial_member_examples() {
        assert!(monomial_member(2, c64(1.0 / 3.0, 0.0)).unwrap());
        assert!(!monomial_member(3, c64(0.21, 0.0)).unwrap());
        assert!(monomial_member(5, c64(0.0, 0.0)).unwrap());
        assert!(monomial_member(1, c64(0.0, 0.0)).is_err());
    }

    #[test]
    fn text_format() {
        let f = PowerSeries::from_tail(&[c64(0.25, -0.5), c64(1e-3, 0.0)]);
        let back = PowerSeries::from_text(&f.to_text()).unwrap();
        assert_eq!(back, f);
        let parsed = PowerSeries::from_text("# comment\n1 0\n\n0.5\n").unwrap();
        assert_eq!(parsed.coeffs(), &[c64(1.0, 0.0), c64(0.5, 0.0)]);
        assert!(matches!(
            PowerSeries::from_text("1 0\nx 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(PowerSeries::from_text(""), Err(Error::EmptySeries)));
    }

    #[test]
    fn binomial_matches_products() {
        // (1 - z)^-2 is the Koebe quotient
        let b = binomial_series(c64(-1.0, 0.0), c64(-2.0, 0.0), 6);
        for (k, c) in b.iter().enumerate() {
            assert!((c - c64(k as f64 + 1.0, 0.0)).norm() < 1e-14);
        }
    }

    fn coeff_strategy(n: usize) -> impl Strategy<Value = Vec<C64>> {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n)
            .prop_map(|v| v.into_iter().map(|(a, b)| c64(a, b)).collect())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        // Order 6 keeps the recurrence well conditioned for arbitrary
        // coefficients in the unit square.
        #[test]
        fn log_derivative_round_trip(tail in coeff_strategy(5)) {
            let f = PowerSeries::from_tail(&tail);
            let back = f.log_derivative().unwrap().integrate();
            prop_assert_eq!(back.order(), f.order());
            for (a, b) in back.coeffs().iter().zip(f.coeffs()) {
                prop_assert!((a - b).norm() < 1e-12, "{} vs {}", a, b);
            }
        }

        #[test]
        fn hadamard_commutes_with_identity(a in coeff_strategy(7), b in coeff_strategy(7)) {
            let f = PowerSeries::from_tail(&a);
            let g = PowerSeries::from_tail(&b);
            prop_assert_eq!(f.hadamard(&g).unwrap(), g.hadamard(&f).unwrap());
            prop_assert_eq!(f.hadamard(&PowerSeries::half_plane(8)).unwrap(), f);
        }

        #[test]
        fn dilate_composes(a in coeff_strategy(12), r1 in 0.01f64..1.0, r2 in 0.01f64..1.0) {
            let f = PowerSeries::from_tail(&a);
            let twice = f.dilate(r1).unwrap().dilate(r2).unwrap();
            let once = f.dilate(r1 * r2).unwrap();
            for (x, y) in twice.coeffs().iter().zip(once.coeffs()) {
                prop_assert!((x - y).norm() < 1e-14);
            }
        }
    }
}
