// SPDX-License-Identifier: MIT OR Apache-2.0

//! `scar`: constants table, verification driver, membership and radius
//! queries, coefficient checks and figure data for the cardioid class.

use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use scar_core::cardioid::cardioid_contains;
use scar_core::fmt::{opt9, sig9};
use scar_core::registry::{self, TableLine};
use scar_core::series::PowerSeries;
use scar_core::verify::{self, fmt_c, VerificationReport};
use scar_core::{c64, figures, functions, radii, Error};

#[derive(Parser, Debug)]
#[command(name = "scar", version, about = "Radius constants and containment oracles for the cardioid starlike class")]
struct Cli {
    /// Samples per circle or boundary (at least 256).
    #[arg(long, global = true, env = "CARDIOID_SAMPLES", default_value_t = 4096, value_parser = parse_samples)]
    samples: usize,

    /// Bisection tolerance, in [1e-12, 1e-2].
    #[arg(long, global = true, default_value_t = 1e-6, value_parser = parse_tolerance)]
    tolerance: f64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed of the randomized coefficient suite.
    #[arg(long, global = true, default_value_t = 20240611)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Svg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Every registry constant with its oracle value.
    Constants,
    /// Run the oracle suites; exits 1 if a non-flagged check fails.
    Verify {
        /// Case-insensitive substring of the suite, name or claim.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Membership of w = re + i im in Omega_car.
    Member {
        #[arg(allow_hyphen_values = true)]
        re: f64,
        #[arg(allow_hyphen_values = true)]
        im: f64,
    },
    /// Radius by tag, e.g. `class:rl`, `within:order_alpha --param 0.3`,
    /// `janowski --param 1 --param -1`, `ratio:2:koebe`.
    Radius {
        class: String,
        #[arg(long = "param", allow_hyphen_values = true)]
        params: Vec<f64>,
    },
    /// Coefficient condition for a series file (`re im` per line, a_1 first).
    CoeffCheck { file: PathBuf },
    /// Curve data of a figure as CSV or SVG.
    Plot { figure: String },
    /// Registered functions with their closed-form zf'/f.
    Functions,
}

fn parse_samples(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    if n < 256 {
        return Err(format!("samples must be at least 256, got {n}"));
    }
    Ok(n)
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if !(1e-12..=1e-2).contains(&t) {
        return Err(format!("tolerance must lie in [1e-12, 1e-2], got {t}"));
    }
    Ok(t)
}

enum Outcome {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(&cli, &mut out) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(Error::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Constants => constants(cli, out),
        Command::Verify { filter } => verify_cmd(cli, filter.as_deref(), out),
        Command::Member { re, im } => member(cli, *re, *im, out),
        Command::Radius { class, params } => radius(cli, class, params, out),
        Command::CoeffCheck { file } => coeff_check(cli, file, out),
        Command::Plot { figure } => plot(cli, figure, out),
        Command::Functions => {
            out.write_all(functions::listing().as_bytes())?;
            Ok(Outcome::Ok)
        }
    }
}

fn constants(cli: &Cli, out: &mut impl Write) -> Result<Outcome, Error> {
    let lines: Vec<TableLine> = registry::registry()?
        .into_iter()
        .map(|row| {
            let oracle = row
                .oracle
                .evaluate_with_witness(cli.samples, cli.tolerance)
                .ok()
                .map(|(v, _)| v);
            TableLine { row, oracle }
        })
        .collect();
    let s = match cli.format {
        Format::Csv => registry::table_csv(&lines),
        _ => registry::table_text(&lines),
    };
    out.write_all(s.as_bytes())?;
    Ok(Outcome::Ok)
}

fn verify_cmd(cli: &Cli, filter: Option<&str>, out: &mut impl Write) -> Result<Outcome, Error> {
    let needle = filter.map(str::to_lowercase);
    let hit = |s: &str| needle.as_ref().is_none_or(|f| s.to_lowercase().contains(f));
    let n = cli.samples;
    let agree = verify::agreement_tol(n);
    let mut suites: Vec<(&str, Vec<VerificationReport>)> = Vec::new();
    // constants rows are filtered before their oracles run
    let rows: Vec<VerificationReport> = registry::registry()?
        .iter()
        .filter(|r| hit("constants") || hit(&r.name) || hit(&r.class) || hit(r.anchor))
        .map(|r| r.check_with(n, cli.tolerance, agree))
        .collect();
    suites.push(("constants", rows));
    type Suite = fn(usize, u64) -> scar_core::Result<Vec<VerificationReport>>;
    let rest: [(&str, Suite); 7] = [
        ("lemma", |_, _| verify::lemma_suite()),
        ("inclusion", |n, _| verify::inclusion_suite(n)),
        ("coefficient", |_, seed| verify::coefficient_suite(seed, 100)),
        ("sharpness", |_, _| verify::sharpness_suite()),
        ("auxiliary", |_, _| verify::auxiliary_suite()),
        ("partial_sum", |_, _| verify::partial_sum_suite()),
        ("convolution", |n, _| verify::convolution_suite(n)),
    ];
    for (name, run) in rest {
        let reports = run(n, cli.seed)?;
        let keep: Vec<_> = if hit(name) {
            reports
        } else {
            reports.into_iter().filter(|r| hit(&r.claim)).collect()
        };
        suites.push((name, keep));
    }
    let total: usize = suites.iter().map(|s| s.1.len()).sum();
    if total == 0 {
        return Err(Error::Unknown {
            what: "check filter",
            name: filter.unwrap_or("").to_string(),
            available: suites.iter().map(|s| s.0).collect::<Vec<_>>().join(", "),
        });
    }
    let (mut failed, mut blocking, mut flagged) = (0, 0, 0);
    if cli.format == Format::Csv {
        writeln!(out, "suite,{}", VerificationReport::CSV_HEADER)?;
    }
    for (name, reports) in &suites {
        if reports.is_empty() {
            continue;
        }
        if cli.format != Format::Csv {
            writeln!(out, "== {name} ==")?;
        }
        for r in reports {
            failed += usize::from(!r.passed);
            blocking += usize::from(r.is_blocking());
            flagged += usize::from(r.flag.is_some());
            match cli.format {
                Format::Csv => writeln!(out, "{name},{}", r.to_csv())?,
                _ => writeln!(out, "{}", r.to_line())?,
            }
        }
    }
    if cli.format != Format::Csv {
        writeln!(
            out,
            "{total} checks, {} passed, {failed} failed ({blocking} blocking), {flagged} flagged",
            total - failed
        )?;
    }
    Ok(if blocking == 0 { Outcome::Ok } else { Outcome::Failed })
}

fn member(cli: &Cli, re: f64, im: f64, out: &mut impl Write) -> Result<Outcome, Error> {
    let w = c64(re, im);
    if !w.is_finite() {
        return Err(Error::Parameter {
            name: "w",
            value: if re.is_finite() { im } else { re },
            constraint: "finite",
        });
    }
    let m = cardioid_contains(w);
    let preimage = m.preimage.map(fmt_c).unwrap_or_else(|| "-".into());
    match cli.format {
        Format::Csv => {
            writeln!(out, "re,im,verdict,preimage,margin,near_cusp")?;
            writeln!(
                out,
                "{},{},{},{},{},{}",
                sig9(re),
                sig9(im),
                m.verdict.as_str(),
                preimage,
                sig9(scar_core::cardioid::margin(w)),
                m.near_cusp
            )?;
        }
        _ => {
            write!(out, "{}: {}", fmt_c(w), m.verdict.as_str())?;
            if let Some(z) = m.preimage {
                write!(out, ", preimage {}", fmt_c(z))?;
            }
            if m.near_cusp {
                write!(out, " (near the cusp 1/2)")?;
            }
            writeln!(out)?;
        }
    }
    Ok(Outcome::Ok)
}

fn radius(cli: &Cli, class: &str, params: &[f64], out: &mut impl Write) -> Result<Outcome, Error> {
    let r = radii::radius_query(class, params)?;
    let cert = r.certificate();
    match cli.format {
        Format::Csv => {
            writeln!(out, "query,value,method,formula,anchor,clamped,residual")?;
            writeln!(
                out,
                "{},{},{},\"{}\",\"{}\",{},{}",
                class,
                sig9(r.value),
                r.method,
                r.formula,
                r.anchor,
                r.clamped,
                opt9(cert.map(|c| c.residual.abs()))
            )?;
        }
        _ => {
            writeln!(out, "{class}: {}", sig9(r.value))?;
            writeln!(out, "  method   {}", r.method)?;
            writeln!(out, "  formula  {}", r.formula)?;
            writeln!(out, "  anchor   {}", r.anchor)?;
            if r.clamped {
                writeln!(out, "  clamped to 1")?;
            }
            if let Some(c) = cert {
                writeln!(
                    out,
                    "  residual {:.2e}, smallest root in (0,1): {}",
                    c.residual.abs(),
                    if c.smallest { "yes" } else { "no" }
                )?;
            }
        }
    }
    Ok(Outcome::Ok)
}

fn coeff_check(cli: &Cli, file: &PathBuf, out: &mut impl Write) -> Result<Outcome, Error> {
    let f = PowerSeries::from_reader(BufReader::new(File::open(file)?))?;
    let sum = f.coefficient_sum();
    let holds = f.coefficient_condition();
    let nonzero: Vec<usize> = (2..=f.order()).filter(|&k| f.coeff(k).norm() > 0.0).collect();
    let exact = match nonzero.as_slice() {
        [k] => Some(scar_core::series::monomial_member(*k, f.coeff(*k))?),
        [] => Some(true),
        _ => None,
    };
    match cli.format {
        Format::Csv => {
            writeln!(out, "order,coefficient_sum,condition,monomial_member")?;
            writeln!(
                out,
                "{},{},{},{}",
                f.order(),
                sig9(sum),
                holds,
                exact.map_or("-".to_string(), |b| b.to_string())
            )?;
        }
        _ => {
            writeln!(out, "order {}", f.order())?;
            writeln!(out, "sum (2n-1)|a_n| = {}", sig9(sum))?;
            if holds {
                writeln!(out, "condition holds: f is in S*_car")?;
            } else {
                writeln!(out, "condition fails: the sufficient test is inconclusive")?;
            }
            if let Some(m) = exact {
                writeln!(out, "monomial criterion: {}", if m { "member" } else { "not a member" })?;
            }
        }
    }
    Ok(if holds || exact == Some(true) { Outcome::Ok } else { Outcome::Failed })
}

fn plot(cli: &Cli, tag: &str, out: &mut impl Write) -> Result<Outcome, Error> {
    let fig = figures::figure(tag, cli.samples)?;
    let s = match cli.format {
        Format::Svg => fig.to_svg(),
        _ => fig.to_csv(),
    };
    out.write_all(s.as_bytes())?;
    let bad: Vec<_> = fig.check().into_iter().filter(|r| !r.passed).collect();
    for r in &bad {
        eprintln!("{}", r.to_line());
    }
    Ok(if bad.is_empty() { Outcome::Ok } else { Outcome::Failed })
}
