//! End-to-end checks of the binary: exit codes and byte-stable output.

use std::process::{Command, Output};

fn mcmtop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mcmtop"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn closure_output_is_byte_stable() {
    let args = ["closure", "--ring", "cusp", "--d", "4", "--generator", "R^2", "--nmax", "2"];
    let first = mcmtop(&args);
    let second = mcmtop(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let text = String::from_utf8(first.stdout).unwrap();
    assert!(text.contains("\"m^2\""));
}

#[test]
fn verify_passes_for_shipped_rings() {
    for ring in ["Ainf-1", "cusp", "cone"] {
        let out = mcmtop(&["verify", "--ring", ring, "--Nmax", "2"]);
        assert!(out.status.success(), "verify {ring} failed");
    }
}

#[test]
fn usage_errors_exit_with_2() {
    let out = mcmtop(&["enumerate", "--ring", "nosuch", "--d", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = mcmtop(&["closure", "--ring", "cusp", "--d", "4", "--generator", "R"]);
    assert_eq!(out.status.code(), Some(2), "multiplicity mismatch is a usage error");
}

#[test]
fn dot_export_renders() {
    let out = mcmtop(&["graph", "--ring", "cusp", "--d", "4", "--format", "dot"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("\"R^2\" -> \"m^2\""));
}
