// SPDX-License-Identifier: MIT OR Apache-2.0

//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any FAIL.

use std::process::ExitCode;
use std::time::Instant;

use scar_core::figures;
use scar_core::functions::Chi;
use scar_core::radii;
use scar_core::registry::{registry, ConstantRow};
use scar_core::roots::{certify_smallest_root, Polynomial};
use scar_core::verify::{self, VerificationReport};

const N: usize = 4096;

struct Outcome {
    ok: bool,
    summary: String,
    details: Vec<String>,
}

fn from_reports(reports: &[VerificationReport], what: &str) -> Outcome {
    let blocking: Vec<String> = reports.iter().filter(|r| r.is_blocking()).map(|r| r.to_line()).collect();
    let flagged = reports.iter().filter(|r| r.flag.is_some()).count();
    Outcome {
        ok: blocking.is_empty() && !reports.is_empty(),
        summary: format!(
            "{what}: {} checks, {} failing, {flagged} flagged",
            reports.len(),
            blocking.len()
        ),
        details: blocking,
    }
}

fn row<'a>(rows: &'a [ConstantRow], name: &str, param: Option<f64>) -> Option<&'a ConstantRow> {
    rows.iter().find(|r| r.name == name && r.param == param)
}

fn constants() -> Outcome {
    let start = Instant::now();
    let rows = registry().expect("registry");
    let elapsed = start.elapsed().as_secs_f64();
    let mut details = Vec::new();
    let mut checked = 0;
    for r in rows.iter().filter(|r| !r.printed.is_empty()) {
        if r.flag.is_some() {
            continue;
        }
        checked += 1;
        if !r.printed_ok() {
            details.push(format!("{}: value {} vs printed {:?}", r.label(), r.value, r.printed));
        }
    }
    let required = [
        "r4", "r8", "r9", "s3", "s4", "s5", "s6", "s7", "s8", "alpha0", "alpha_star", "M_star", "M0",
        "convolution:starlike_pair", "beta0",
    ];
    for name in required {
        if !rows.iter().any(|r| r.name == name) {
            details.push(format!("missing row {name}"));
        }
    }
    let s2 = row(&rows, "s2", Some(0.0)).map(|r| r.value);
    let s2_expected = -1.0 + (2.0 * 2f64.sqrt() - 1.0).sqrt();
    if s2.is_none_or(|v| (v - s2_expected).abs() > 1e-12) {
        details.push(format!("s2(0) = {s2:?}, expected {s2_expected}"));
    }
    let ratios = rows.iter().filter(|r| r.name.starts_with("ratio(") && !r.printed.is_empty()).count();
    if ratios != 15 {
        details.push(format!("{ratios} ratio rows with printed decimals, expected 15"));
    }
    if elapsed >= 1.0 {
        details.push(format!("registry took {elapsed:.2} s"));
    }
    Outcome {
        ok: details.is_empty(),
        summary: format!("{checked} printed decimals within tolerance, registry built in {elapsed:.3} s"),
        details,
    }
}

fn oracle_agreement() -> Outcome {
    let start = Instant::now();
    let mut reports = verify::verify_all_constants(N).expect("constants");
    reports.extend(verify::auxiliary_suite().expect("auxiliary"));
    reports.extend(verify::partial_sum_suite().expect("partial sums"));
    reports.extend(verify::convolution_suite(N).expect("convolution"));
    let elapsed = start.elapsed().as_secs_f64();
    let mut o = from_reports(&reports, "oracle agreement");
    o.summary.push_str(&format!(", {elapsed:.1} s"));
    if elapsed >= 60.0 {
        o.ok = false;
        o.details.push(format!("oracle suite took {elapsed:.1} s"));
    }
    o
}

fn root_residuals() -> Outcome {
    let mut details = Vec::new();
    let mut polys: Vec<(String, Polynomial, f64)> = Vec::new();
    for chi in [Chi::ZOver1MinusZ2, Chi::ZPlusHalfZ2] {
        for i in 1..=3 {
            let r = radii::ratio_class_radius(i, chi).expect("ratio");
            let p = r.polynomial.clone().expect("root-defined");
            polys.push((format!("ratio({i},{})", chi.tag()), p, r.value));
        }
    }
    let ne = radii::scar_radius_of_class(radii::TableClass::Nephroid).expect("r9");
    polys.push(("2r^3-6r+3".into(), Polynomial::from_descending(&[2.0, 0.0, -6.0, 3.0]), ne.value));
    let mut worst: f64 = 0.0;
    for (name, p, v) in &polys {
        let c = certify_smallest_root(p, *v);
        worst = worst.max(c.residual.abs());
        if !(c.holds() && c.residual.abs() < 1e-12) {
            details.push(format!("{name}: residual {:e}, smallest {}", c.residual, c.smallest));
        }
    }
    Outcome {
        ok: details.is_empty(),
        summary: format!("{} polynomials, worst residual {worst:.2e}", polys.len()),
        details,
    }
}

fn flagged() -> Outcome {
    let rows = registry().expect("registry");
    let mut details = Vec::new();
    let want: [(&str, Option<f64>); 4] = [
        ("beta0", None),
        ("s11", Some(1.05)),
        ("ratio(2,z_over_1minusz2)", None),
        ("f8_a4", None),
    ];
    let mut shown = Vec::new();
    for (name, param) in want {
        match row(&rows, name, param) {
            Some(r) if r.flag.is_some() => {
                let report = r.check(N);
                if r.name != "s11" && r.printed.is_empty() {
                    details.push(format!("{name} lacks its printed value"));
                }
                if report.measured_value.is_none() {
                    details.push(format!("{name} lacks a computed value"));
                }
                if report.is_blocking() {
                    details.push(format!("{name} blocks: {}", report.to_line()));
                }
                shown.push(format!(
                    "{name}: computed {} printed {:?}",
                    scar_core::fmt::opt9(report.measured_value),
                    r.printed
                ));
            }
            Some(_) => details.push(format!("{name} is not flagged")),
            None => details.push(format!("{name} missing")),
        }
    }
    Outcome {
        ok: details.is_empty(),
        summary: shown.join("; "),
        details,
    }
}

fn figures_hold() -> Outcome {
    let mut reports = Vec::new();
    for tag in figures::TAGS {
        let f = figures::figure(tag, N).expect("figure");
        reports.extend(f.check());
    }
    from_reports(&reports, "figure inclusions")
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("1 constants reproduction", constants),
        ("2 oracle agreement", oracle_agreement),
        ("3 root residuals", root_residuals),
        ("4 lemma suites", || from_reports(&verify::lemma_suite().expect("lemma"), "lemma")),
        ("5 inclusion suite", || from_reports(&verify::inclusion_suite(N).expect("inclusion"), "inclusion")),
        ("6 sharpness suite", || {
            let r = verify::sharpness_suite().expect("sharpness");
            let mut o = from_reports(&r, "touch displays");
            if r.len() < 15 {
                o.ok = false;
                o.details.push(format!("only {} touch displays", r.len()));
            }
            o
        }),
        ("7 coefficient suite", || {
            from_reports(&verify::coefficient_suite(20240611, 100).expect("coefficient"), "coefficient")
        }),
        ("8 flagged discrepancies", flagged),
        ("9 figure data", figures_hold),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let o = run();
        println!("{} criterion {name}: {}", if o.ok { "PASS" } else { "FAIL" }, o.summary);
        for d in &o.details {
            println!("    {d}");
        }
        if !o.ok {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
