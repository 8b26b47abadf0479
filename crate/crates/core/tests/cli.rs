use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use abelian_spectra::cli::{DecomposeReport, GnsReport, RigReport};
use abelian_spectra::io::{FunctionFile, RepresentationFile};
use abelian_spectra::prelude::*;
use abelian_spectra::random::{random_representation, rng};
use abelian_spectra::selftest::SelftestReport;
use tempfile::TempDir;

const BIN: &str = env!("CARGO_BIN_EXE_abelian-spectra");

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("ABELIAN_SPECTRA_TOL")
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn write_json<T: serde::Serialize>(dir: &TempDir, name: &str, value: &T) -> String {
    write(dir, name, &serde_json::to_string(value).unwrap())
}

fn stdout_json<T: serde::de::DeserializeOwned>(out: &Output) -> T {
    serde_json::from_slice(&out.stdout).expect("valid report")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn phi_file(orders: &[usize], values: &[f64]) -> FunctionFile {
    let g = Group::new(orders).unwrap();
    let f = GroupFunction::new(g, values.iter().map(|&v| Complex64::from(v)).collect()).unwrap();
    FunctionFile::from_group_function(&f)
}

#[test]
fn fourier_of_delta_is_all_ones() {
    let dir = TempDir::new().unwrap();
    let input = write_json(&dir, "delta.json", &phi_file(&[4], &[1.0, 0.0, 0.0, 0.0]));
    let out = run(&["fourier", "--input", &input]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let file: FunctionFile = stdout_json(&out);
    let dual = file.to_dual_function().unwrap();
    assert!(dual.max_abs_diff(&DualFunction::ones(dual.group())) == 0.0);
}

#[test]
fn fourier_round_trip_through_files() {
    let dir = TempDir::new().unwrap();
    let original = phi_file(&[2, 3], &[0.5, -1.0, 2.0, 3.5, 0.0, 1.25]);
    let input = write_json(&dir, "f.json", &original);
    let hat = dir.path().join("hat.json");
    let back = dir.path().join("back.json");
    let hat_s = hat.to_str().unwrap();
    let back_s = back.to_str().unwrap();
    assert_eq!(run(&["fourier", "--input", &input, "--output", hat_s]).status.code(), Some(0));
    let out = run(&["fourier", "--direction", "inverse", "--input", hat_s, "--output", back_s]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let restored: FunctionFile = serde_json::from_str(&fs::read_to_string(back).unwrap()).unwrap();
    let diff = restored
        .to_group_function()
        .unwrap()
        .max_abs_diff(&original.to_group_function().unwrap());
    assert!(diff < 1e-12, "{diff}");
}

#[test]
fn fourier_domain_mismatch_is_input_error() {
    let dir = TempDir::new().unwrap();
    let input = write_json(&dir, "f.json", &phi_file(&[3], &[1.0, 0.0, 0.0]));
    let out = run(&["fourier", "--direction", "inverse", "--input", &input]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("domain mismatch"));
}

#[test]
fn malformed_json_names_the_field() {
    let dir = TempDir::new().unwrap();
    let cases = [
        (r#"{"group":{"orders":[2]},"domain":"group","values":[[1,0],"x"]}"#, "values"),
        (r#"{"group":{"orders":"two"},"domain":"group","values":[]}"#, "group.orders"),
        (r#"{"group":{"orders":[2]},"values":[[1,0],[0,0]]}"#, "domain"),
        (r#"{"group":{"orders":[2]},"domain":"group","values":[[1,0],[0,0]],"extra":1}"#, "extra"),
    ];
    for (i, (text, field)) in cases.iter().enumerate() {
        let input = write(&dir, &format!("bad{i}.json"), text);
        let out = run(&["fourier", "--input", &input]);
        assert_eq!(out.status.code(), Some(2), "case {i}");
        assert!(stderr(&out).contains(field), "case {i}: {}", stderr(&out));
    }
}

#[test]
fn missing_file_is_input_error() {
    let out = run(&["gns", "--input", "/nonexistent/phi.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn decompose_z2_regular() {
    let dir = TempDir::new().unwrap();
    let g = Group::cyclic(2).unwrap();
    let input = write_json(&dir, "rep.json", &RepresentationFile::from_rep(&UnitaryRep::regular(&g)));
    let out = run(&["decompose", "--input", &input]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report: DecomposeReport = stdout_json(&out);
    assert_eq!(report.stages.pvm.multiplicities, vec![1, 1]);
    let support: Vec<_> = report.stages.pvm.support.iter().map(|c| c.0.clone()).collect();
    assert_eq!(support, vec![vec![0], vec![1]]);
    assert_eq!(report.stages.kets.kets.len(), 2);
}

#[test]
fn decompose_trivial_dim3() {
    let dir = TempDir::new().unwrap();
    let g = Group::cyclic(4).unwrap();
    let input = write_json(&dir, "rep.json", &RepresentationFile::from_rep(&UnitaryRep::trivial(&g, 3)));
    let out = run(&["decompose", "--input", &input]);
    assert_eq!(out.status.code(), Some(0));
    let report: DecomposeReport = stdout_json(&out);
    assert_eq!(report.stages.pvm.multiplicities, vec![3, 0, 0, 0]);
    assert_eq!(report.stages.components.len(), 3);
}

#[test]
fn decompose_shear_is_validation_error() {
    let dir = TempDir::new().unwrap();
    let input = write(
        &dir,
        "shear.json",
        r#"{"group":{"orders":[2]},"dim":2,"generators":[[[1,0],[1,0],[0,0],[1,0]]]}"#,
    );
    let out = run(&["decompose", "--input", &input]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("generator 0 not unitary"), "{}", stderr(&out));
}

#[test]
fn decompose_order_violation_is_validation_error() {
    // diag(i, 1) is unitary but has order 4, not 2
    let dir = TempDir::new().unwrap();
    let input = write(
        &dir,
        "order.json",
        r#"{"group":{"orders":[2]},"dim":2,"generators":[[[[0,1],[0,0]],[[0,0],[1,0]]]]}"#,
    );
    let out = run(&["decompose", "--input", &input]);
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
}

#[test]
fn gns_examples() {
    let dir = TempDir::new().unwrap();
    let delta = write_json(&dir, "delta.json", &phi_file(&[4], &[1.0, 0.0, 0.0, 0.0]));
    let out = run(&["gns", "--input", &delta]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report: GnsReport = stdout_json(&out);
    assert_eq!(report.stages.rank, Some(4));

    let flat = write_json(&dir, "flat.json", &phi_file(&[2], &[1.0, 1.0]));
    let out = run(&["gns", "--input", &flat]);
    assert_eq!(out.status.code(), Some(0));
    let report: GnsReport = stdout_json(&out);
    assert_eq!(report.stages.rank, Some(1));

    let bad = write_json(&dir, "bad.json", &phi_file(&[2], &[1.0, 2.0]));
    let out = run(&["gns", "--input", &bad]);
    assert_eq!(out.status.code(), Some(5));
    let msg = stderr(&out);
    assert!(msg.contains("min Gram eigenvalue") && msg.contains("min Fourier value"), "{msg}");
    let report: GnsReport = stdout_json(&out);
    assert!((report.stages.positivity.min_fourier + 1.0).abs() < 1e-12);
    assert!(!report.passed);
}

#[test]
fn rig_z6_regular() {
    let dir = TempDir::new().unwrap();
    let g = Group::cyclic(6).unwrap();
    let input = write_json(&dir, "rep.json", &RepresentationFile::from_rep(&UnitaryRep::regular(&g)));
    let out = run(&["rig", "--input", &input]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report: RigReport = stdout_json(&out);
    assert_eq!(report.stages.len(), 1);
    let stage = &report.stages[0];
    assert_eq!(stage.eigenvectors.len(), 6);
    for row in &stage.eigenvalue_table {
        for z in &row.eigenvalues {
            let sixth = z.powu(6);
            assert!((sixth - Complex64::from(1.0)).norm() < 1e-12);
        }
    }
}

#[test]
fn rig_trivial_dim1() {
    let dir = TempDir::new().unwrap();
    let g = Group::new(&[2, 3]).unwrap();
    let input = write_json(&dir, "rep.json", &RepresentationFile::from_rep(&UnitaryRep::trivial(&g, 1)));
    let out = run(&["rig", "--input", &input]);
    assert_eq!(out.status.code(), Some(0));
    let report: RigReport = stdout_json(&out);
    assert_eq!(report.stages[0].eigenvectors.len(), 1);
    for row in &report.stages[0].eigenvalue_table {
        assert!((row.eigenvalues[0] - Complex64::from(1.0)).norm() < 1e-15);
    }
}

#[test]
fn rig_vanishing_xi_is_precondition_failure() {
    let dir = TempDir::new().unwrap();
    let g = Group::cyclic(3).unwrap();
    let input = write_json(&dir, "rep.json", &RepresentationFile::from_rep(&UnitaryRep::regular(&g)));
    let xi = DualFunction::new(g, vec![Complex64::from(1.0), Complex64::from(0.0), Complex64::from(1.0)]).unwrap();
    let xi_path = write_json(&dir, "xi.json", &FunctionFile::from_dual_function(&xi));
    let out = run(&["rig", "--input", &input, "--xi", &xi_path]);
    assert_eq!(out.status.code(), Some(5), "{}", stderr(&out));
}

fn rig_report_bytes(input: &str, out: &Path) -> Vec<u8> {
    let status = run(&["rig", "--input", input, "--seed", "11", "--output", out.to_str().unwrap()]);
    assert_eq!(status.status.code(), Some(0), "{}", stderr(&status));
    fs::read(out).unwrap()
}

#[test]
fn rig_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let g = Group::new(&[2, 4]).unwrap();
    let mut r = rng(2024);
    let rep = random_representation(&mut r, &g, 8, false);
    let input = write_json(&dir, "rep.json", &RepresentationFile::from_rep(&rep));
    let a = rig_report_bytes(&input, &dir.path().join("a.json"));
    let b = rig_report_bytes(&input, &dir.path().join("b.json"));
    assert_eq!(a, b);
}

#[test]
fn tolerance_from_environment() {
    let dir = TempDir::new().unwrap();
    let g = Group::cyclic(5).unwrap();
    let input = write_json(&dir, "rep.json", &RepresentationFile::from_rep(&UnitaryRep::regular(&g)));
    let out = Command::new(BIN)
        .args(["decompose", "--input", &input])
        .env("ABELIAN_SPECTRA_TOL", "1e-30")
        .output()
        .unwrap();
    // round-off residuals cannot meet an absurd threshold
    assert_eq!(out.status.code(), Some(4));
    let report: DecomposeReport = stdout_json(&out);
    assert!(report.residuals.iter().all(|r| r.threshold == 1e-30));
}

#[test]
fn selftest_trivial_group_only() {
    let out = run(&["selftest", "--max-group-size", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report: SelftestReport = stdout_json(&out);
    assert!(report.passed);
    assert!(stderr(&out).lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn selftest_catches_flipped_kernel() {
    let out = run(&["selftest", "--mutate-functional-kernel"]);
    assert_eq!(out.status.code(), Some(4));
    let report: SelftestReport = stdout_json(&out);
    let eq = report.property("rigging.inner_product_identity").unwrap();
    assert!(!eq.passed);
    let failure = report
        .failures
        .iter()
        .find(|f| f.property == "rigging.inner_product_identity")
        .unwrap();
    // the failing instance can be replayed through the file formats
    let rep: RepresentationFile = serde_json::from_value(failure.instance["rep"].clone()).unwrap();
    assert!(rep.to_rep().is_ok());
}

#[test]
fn bad_arguments_exit_2() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["selftest", "--seed", "minus-one"]).status.code(), Some(2));
    assert_eq!(run(&["selftest", "--max-dim", "0"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
