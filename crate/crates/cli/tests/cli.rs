// SPDX-License-Identifier: MIT OR Apache-2.0

use std::io::Write;
use std::process::{Command, Output};

fn scar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scar"))
        .args(args)
        .env_remove("CARDIOID_SAMPLES")
        .output()
        .expect("spawn scar")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn member_verdicts() {
    for (re, im, verdict) in [("1", "0", "inside"), ("0.5", "0", "boundary"), ("2.5", "0.2", "outside")] {
        let o = scar(&["member", re, im]);
        assert!(o.status.success());
        assert!(stdout(&o).contains(verdict), "{re}+{im}i: {}", stdout(&o));
    }
    let o = scar(&["member", "1", "0"]);
    assert!(stdout(&o).contains("preimage 0+0i"));
}

#[test]
fn member_accepts_negative_parts() {
    let o = scar(&["member", "0.9", "-0.1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("inside"));
}

#[test]
fn radius_of_rl() {
    let o = scar(&["radius", "class:rl"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("class:rl: 0.7688003"), "{}", stdout(&o));
}

#[test]
fn radius_with_params() {
    let o = scar(&["--format", "csv", "radius", "janowski", "--param", "1", "--param", "-1"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).lines().next().unwrap().starts_with("query,value"));
}

#[test]
fn unknown_radius_is_usage_error() {
    let o = scar(&["radius", "class:nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("available"));
}

#[test]
fn verify_filter() {
    let o = scar(&["verify", "--filter", "JANOWSKI"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 blocking"));
    assert_eq!(scar(&["verify", "--filter", "no such check"]).status.code(), Some(2));
}

#[test]
fn verify_csv_has_header() {
    let o = scar(&["--format", "csv", "verify", "--filter", "lemma"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("suite,"));
    let body: Vec<String> = stdout(&o).lines().skip(1).map(String::from).collect();
    assert!(body.iter().any(|l| l.starts_with("lemma,")));
    assert!(body.iter().all(|l| l.to_lowercase().contains("lemma")));
}

#[test]
fn plot_csv_is_deterministic() {
    let a = scar(&["plot", "lemma_disks_a1"]);
    let b = scar(&["plot", "lemma_disks_a1"]);
    assert!(a.status.success());
    assert!(stdout(&a).starts_with("curve,t,x,y\n"));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn plot_svg() {
    let o = scar(&["--format", "svg", "--samples", "256", "plot", "cardioid"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("<svg"));
    assert_eq!(scar(&["plot", "no_such_figure"]).status.code(), Some(2));
}

#[test]
fn samples_floor() {
    let o = scar(&["--samples", "100", "member", "1", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_scar"))
        .args(["member", "1", "0"])
        .env("CARDIOID_SAMPLES", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tolerance_range() {
    assert_eq!(scar(&["--tolerance", "0.5", "functions"]).status.code(), Some(2));
    assert!(scar(&["--tolerance", "1e-9", "functions"]).status.success());
}

#[test]
fn coeff_check_files() {
    let mut ok = tempfile::NamedTempFile::new().unwrap();
    writeln!(ok, "# f(z) = z + z^2/10\n1 0\n0.1 0").unwrap();
    let o = scar(&["coeff-check", ok.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0.300000000"));

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "1 0\n0.2 0\n0.2 0").unwrap();
    let o = scar(&["coeff-check", bad.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));

    assert_eq!(scar(&["coeff-check", "/nonexistent/series.txt"]).status.code(), Some(2));
}

#[test]
fn functions_listing() {
    let o = scar(&["functions"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("f_car"));
}
