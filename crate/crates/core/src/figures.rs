// SPDX-License-Identifier: MIT OR Apache-2.0

//! Curve data for the illustrations: the cardioid together with the disks,
//! boundaries and image curves each figure compares it with. Every figure
//! carries the inclusions it depicts, checked pointwise on its own samples.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use crate::domains::{svg_polyline, DiskSpec, DomainSpec, TOUCH_TOL};
use crate::fmt::sig9;
use crate::generators::Generator;
use crate::radii::{self, TableClass, Target};
use crate::verify::VerificationReport;
use crate::{c64, cardioid, Error, Result, C64};

pub const TAGS: [&str; 19] = [
    "lemma_disks_a1",
    "lemma_disks_a2",
    "inclusion_g1",
    "inclusion_g2",
    "inclusion_g3",
    "inclusion_g4",
    "inclusion_g5",
    "inclusion_g6",
    "inclusion_g7",
    "radius_r5",
    "radius_r6",
    "radius_r7",
    "radius_r8",
    "radius_r9",
    "univalent_p_disk",
    "sharpness_s2_s3_s7_s8",
    "scar_in_psiC",
    "unity_sg_cosh_r",
    "cardioid",
];

#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub name: String,
    /// `(t, w)` samples.
    pub points: Vec<(f64, C64)>,
    pub closed: bool,
}

/// `inner` curve (by index) must lie in `outer`.
#[derive(Debug, Clone, PartialEq)]
pub struct Inclusion {
    pub inner: usize,
    pub outer: DomainSpec,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Figure {
    pub tag: &'static str,
    pub title: String,
    pub curves: Vec<Curve>,
    pub inclusions: Vec<Inclusion>,
}

fn sample<F: Fn(f64) -> C64>(name: impl Into<String>, n: usize, closed: bool, f: F) -> Curve {
    Curve {
        name: name.into(),
        points: (0..n)
            .map(|k| {
                let t = TAU * k as f64 / n as f64;
                (t, f(t))
            })
            .collect(),
        closed,
    }
}

fn boundary(name: impl Into<String>, d: DomainSpec, n: usize) -> Curve {
    sample(name, n, d.is_bounded(), |t| d.boundary(t))
}

fn image_circle(name: impl Into<String>, g: Generator, r: f64, n: usize) -> Curve {
    sample(name, n, true, move |t| g.eval(C64::from_polar(r, t)))
}

fn disk(center: f64, radius: f64) -> Result<DomainSpec> {
    Ok(DomainSpec::Disk(DiskSpec::new(c64(center, 0.0), radius)?))
}

impl Figure {
    fn new(tag: &'static str, title: impl Into<String>, n: usize) -> Self {
        Figure {
            tag,
            title: title.into(),
            curves: vec![boundary("cardioid", DomainSpec::Cardioid, n)],
            inclusions: Vec::new(),
        }
    }

    fn curve(mut self, c: Curve) -> Self {
        self.curves.push(c);
        self
    }

    fn inside(mut self, inner: usize, outer: DomainSpec) -> Self {
        self.inclusions.push(Inclusion { inner, outer });
        self
    }

    /// One report per inclusion: every sample of the inner curve in the
    /// outer domain, up to the touch tolerance.
    pub fn check(&self) -> Vec<VerificationReport> {
        self.inclusions
            .iter()
            .map(|inc| {
                let c = &self.curves[inc.inner];
                let (worst, w) = c
                    .points
                    .iter()
                    .map(|&(_, w)| (inc.outer.margin(w), w))
                    .fold((f64::INFINITY, c64(0.0, 0.0)), |a, b| if b.0 < a.0 { b } else { a });
                VerificationReport {
                    claim: format!("{}: {} in {}", self.tag, c.name, inc.outer.label()),
                    method: "figure_samples",
                    samples: c.points.len(),
                    passed: worst >= -TOUCH_TOL,
                    witness: Some(w),
                    measured_value: Some(worst),
                    expected_value: None,
                    flag: None,
                }
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("curve,t,x,y\n");
        for c in &self.curves {
            for &(t, w) in &c.points {
                let _ = writeln!(s, "{},{},{},{}", c.name, sig9(t), sig9(w.re), sig9(w.im));
            }
        }
        s
    }

    pub fn to_svg(&self) -> String {
        let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for &(_, w) in self.curves.iter().flat_map(|c| c.points.iter()) {
            x0 = x0.min(w.re);
            x1 = x1.max(w.re);
            y0 = y0.min(w.im);
            y1 = y1.max(w.im);
        }
        let pad = 0.1;
        let colors = ["black", "red", "blue", "green", "purple", "orange"];
        let mut s = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.3} {:.3} {:.3} {:.3}\">\n<title>{}</title>\n<g transform=\"scale(1,-1)\">\n",
            x0 - pad,
            -y1 - pad,
            x1 - x0 + 2.0 * pad,
            y1 - y0 + 2.0 * pad,
            self.title
        );
        for (i, c) in self.curves.iter().enumerate() {
            let pts: Vec<C64> = c.points.iter().map(|p| p.1).collect();
            s.push_str(&svg_polyline(&pts, c.closed, colors[i % colors.len()]));
            s.push('\n');
        }
        s.push_str("</g>\n");
        for (i, c) in self.curves.iter().enumerate() {
            let _ = writeln!(
                s,
                "<text x=\"{:.3}\" y=\"{:.3}\" font-size=\"0.08\" fill=\"{}\">{}</text>",
                x0,
                -y1 + 0.1 * (i as f64 + 1.0),
                colors[i % colors.len()],
                c.name
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

/// Builds a figure with `n` samples per curve.
pub fn figure(tag: &str, n: usize) -> Result<Figure> {
    if n < 16 {
        return Err(Error::param("n", n as f64, "n >= 16"));
    }
    let car = DomainSpec::Cardioid;
    let class_r = |c: TableClass| radii::scar_radius_of_class(c).map(|r| r.value);
    let within_r = |t: Target| radii::radius_within_scar(t).map(|r| r.value);
    let fig = match tag {
        "cardioid" => Figure::new("cardioid", "Omega_car", n),
        "lemma_disks_a1" | "lemma_disks_a2" => {
            let a = if tag == "lemma_disks_a1" { 1.0 } else { 2.0 };
            let (ra, big_ra) = cardioid::inner_outer_radii(a)?;
            let (tag, title) = if a == 1.0 {
                ("lemma_disks_a1", "disks about a = 1")
            } else {
                ("lemma_disks_a2", "disks about a = 2")
            };
            Figure::new(tag, title, n)
                .curve(boundary(format!("|w-{a}|={}", sig9(ra)), disk(a, ra)?, n))
                .curve(boundary(format!("|w-{a}|={}", sig9(big_ra)), disk(a, big_ra)?, n))
                .inside(1, car)
                .inside(0, disk(a, big_ra)?)
        }
        "inclusion_g1" => Figure::new("inclusion_g1", "Re w = 1/4", n)
            .curve(boundary("Re w=1/4", DomainSpec::RightHalfPlane(0.25), n))
            .inside(0, DomainSpec::RightHalfPlane(0.25)),
        "inclusion_g2" => {
            let b = radii::beta0_oracle();
            Figure::new("inclusion_g2", "sector of order beta0", n)
                .curve(boundary(format!("|arg w|={} pi/2", sig9(b)), DomainSpec::Sector(b), n))
                .inside(0, DomainSpec::Sector(b))
        }
        "inclusion_g3" => Figure::new("inclusion_g3", "k-starlike ellipse, k = 5/3", n)
            .curve(boundary("Gamma_5/3", DomainSpec::KStarlike(5.0 / 3.0), n))
            .inside(1, car),
        "inclusion_g4" => Figure::new("inclusion_g4", "exponential image at alpha0", n)
            .curve(boundary("D_alpha0", DomainSpec::Image(Generator::exponential(radii::alpha0())?), n))
            .inside(1, car),
        "inclusion_g5" => Figure::new("inclusion_g5", "lemniscate image at 1/2", n)
            .curve(boundary("G_1/2", DomainSpec::Image(Generator::lemniscate(0.5)?), n))
            .inside(1, car),
        "inclusion_g6" => Figure::new("inclusion_g6", "Cassinian image at 3/4", n)
            .curve(boundary("H_3/4", DomainSpec::Image(Generator::cassinian(0.75)?), n))
            .inside(1, car),
        "inclusion_g7" => {
            let m0 = radii::m0();
            Figure::new("inclusion_g7", "|w - M0| = M0", n)
                .curve(boundary("|w-M0|=M0", disk(m0, m0)?, n))
                .inside(0, disk(m0, m0)?)
        }
        "radius_r5" | "radius_r6" | "radius_r7" | "radius_r8" | "radius_r9" => {
            let (tag, g, c): (&'static str, Generator, TableClass) = match tag {
                "radius_r5" => ("radius_r5", Generator::CardioidC, TableClass::CardioidC),
                "radius_r6" => ("radius_r6", Generator::Limacon, TableClass::Limacon),
                "radius_r7" => ("radius_r7", Generator::Lune, TableClass::Lune),
                "radius_r8" => ("radius_r8", Generator::Sine, TableClass::Sine),
                _ => ("radius_r9", Generator::Nephroid, TableClass::Nephroid),
            };
            let r = class_r(c)?;
            Figure::new(tag, format!("{} image of |z| = {}", g.tag(), sig9(r)), n)
                .curve(image_circle(format!("psi_{}(|z|={})", g.tag(), sig9(r)), g, r, n))
                .inside(1, car)
        }
        "univalent_p_disk" => {
            let p = Generator::Janowski(1.0, -1.0);
            Figure::new("univalent_p_disk", "(1+z)/(1-z) on |z| = 1/3", n)
                .curve(image_circle("p(|z|=1/3)", p, 1.0 / 3.0, n))
                .inside(1, car)
        }
        "sharpness_s2_s3_s7_s8" => {
            let mut f = Figure::new("sharpness_s2_s3_s7_s8", "phi_car images inside target regions", n);
            for (name, t) in [
                ("s2", Target::Lemniscate(0.0)),
                ("s3", Target::RightLemniscate),
                ("s7", Target::Nephroid),
                ("s8", Target::Sigmoid),
            ] {
                let r = within_r(t)?;
                let d = t.domain()?;
                let k = f.curves.len();
                f = f
                    .curve(boundary(format!("boundary for {name}"), d, n))
                    .curve(image_circle(format!("phi_car(|z|={})", sig9(r)), Generator::PhiCar, r, n))
                    .inside(k + 1, d);
            }
            f
        }
        "scar_in_psiC" => {
            let d = DomainSpec::Image(Generator::CardioidC);
            Figure::new("scar_in_psiC", "Omega_car inside psi_C(D)", n)
                .curve(boundary("psi_C(D)", d, n))
                .inside(0, d)
        }
        "unity_sg_cosh_r" => {
            let mut f = Figure::new("unity_sg_cosh_r", "SG, cosh and psi_R images inside Omega_car", n);
            for g in [Generator::Sigmoid, Generator::Cosh, Generator::Rational] {
                let k = f.curves.len();
                f = f.curve(boundary(format!("{}(D)", g.tag()), DomainSpec::Image(g), n)).inside(k, car);
            }
            f
        }
        _ => return Err(Error::unknown("figure", tag, TAGS)),
    };
    Ok(fig)
}
