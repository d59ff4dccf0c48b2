//! End-to-end tests of the `tightsr` binary: output formats, exit codes, and
//! the JSON round-trips of the documented interchange formats.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn tightsr(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tightsr"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

const C5: &str = "m=5; facets=(1,2),(2,3),(3,4),(4,5),(1,5)\n";

#[test]
fn betti_on_the_five_cycle() {
    let out = tightsr(&["betti"], C5);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(json["total"], 12);
    assert_eq!(json["row_sums"][3], 1);
    assert_eq!(json["field"], "Q");
    // round-trip through the library parser
    let table = tightsr_core::BettiTable::from_json(stdout(&out).trim()).unwrap();
    assert_eq!(table.total(), 12);
}

#[test]
fn check_on_the_irrelevant_complex() {
    let out = tightsr(&["check"], "m=0; facets=()\n");
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(json["is_tight"], true);
    assert_eq!(json["is_weakly_tight"], true);
    assert_eq!(json["d_value"], 1);
}

#[test]
fn predicates_agree_across_fields() {
    for input in [C5, "m=4; facets=(1,2),(1,3),(2,4),(3,4)\n"] {
        let a = stdout(&tightsr(&["--field", "Q", "check"], input));
        let b = stdout(&tightsr(&["--field", "Fp:2", "check"], input));
        let ja: serde_json::Value = serde_json::from_str(a.trim()).unwrap();
        let jb: serde_json::Value = serde_json::from_str(b.trim()).unwrap();
        assert_eq!(ja["is_weakly_tight"], jb["is_weakly_tight"]);
        assert_eq!(ja["is_tight"], jb["is_tight"]);
        assert_eq!(ja["d_value"], jb["d_value"]);
    }
}

#[test]
fn table1_matches_and_exits_zero() {
    let out = tightsr(&["table1"], "");
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("census matches the golden table"));
}

#[test]
fn enumerate_emits_census_lines_and_sidecar() {
    let dir = std::env::temp_dir().join(format!("tightsr-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let side = dir.join("census.jsonl");
    let out = tightsr(
        &["enumerate", "--m", "4", "--sidecar", side.to_str().unwrap()],
        "",
    );
    assert!(out.status.success());
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 1 + 2 + 4 + 9);
    for line in &lines {
        line.parse::<tightsr_core::SimplicialComplex>().unwrap();
    }
    let side_text = std::fs::read_to_string(&side).unwrap();
    let mut records = 0;
    for line in side_text.lines() {
        let json: serde_json::Value = serde_json::from_str(line).unwrap();
        let k: tightsr_core::SimplicialComplex = json["facets"].as_str().unwrap().parse().unwrap();
        assert_eq!(k.mdim(), json["mdim"].as_i64().unwrap());
        records += 1;
    }
    assert_eq!(records, 16);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn classify_output_shapes() {
    let out = tightsr(&["classify"], "m=4; facets=(1,2,3),(1,2,4)\n");
    assert_eq!(stdout(&out).trim(), "tight: Δ^[2] * ∂Δ^[2]");
    let out = tightsr(&["classify"], C5);
    assert_eq!(stdout(&out).trim(), "not tight (D̃=12, bound=8)");
}

#[test]
fn dmin_reports_the_sigma_5_1_claim() {
    let out = tightsr(&["dmin", "--m", "5", "--d", "1"], "");
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("33 classes"));
    assert!(text.contains("min D̃ = 12"));
    assert_eq!(text.matches("minimizer:").count(), 2);
}

#[test]
fn germ_and_wedge_and_join() {
    let out = tightsr(&["germ"], "m=3; facets=(1,2),(1,3)\n");
    let text = stdout(&out);
    assert!(text.contains("length = 2; replay isomorphic = true"));
    assert!(text.contains("all filtration lengths = {2}"));

    let out = tightsr(&["wedge", "--v", "1"], "m=2; facets=(1),(2)\n");
    let wedged: tightsr_core::SimplicialComplex = stdout(&out).trim().parse().unwrap();
    assert!(wedged
        .are_isomorphic(&tightsr_core::SimplicialComplex::boundary_simplex(3))
        .unwrap());

    let out = tightsr(&["join"], "m=2; facets=(1),(2)\nm=2; facets=(1),(2)\n");
    let joined: tightsr_core::SimplicialComplex = stdout(&out).trim().parse().unwrap();
    assert_eq!(joined.m(), 4);
    assert_eq!(joined.facets().len(), 4);
}

#[test]
fn verify_oracle_reports_agreement() {
    let inputs = format!("{C5}m=4; facets=(1,2,3),(4)\nm=0; facets=()\n");
    let out = tightsr(&["verify", "--oracle"], &inputs);
    assert!(out.status.success());
    assert_eq!(stdout(&out).matches("ok:").count(), 3);
}

#[test]
fn exit_codes() {
    // usage error: unknown subcommand
    let out = tightsr(&["no-such-command"], "");
    assert_eq!(out.status.code(), Some(2));

    // usage error: join needs exactly two complexes
    let out = tightsr(&["join"], C5);
    assert_eq!(out.status.code(), Some(2));

    // mathematical precondition: ghost vertex
    let out = tightsr(&["betti"], "m=3; facets=(1,2)\n");
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ghost"));

    // mathematical precondition: germ filtration of a non-weakly-tight complex
    let out = tightsr(&["germ"], C5);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not weakly tight"));

    // bad field
    let out = tightsr(&["--field", "Fp:9", "total"], C5);
    assert_eq!(out.status.code(), Some(3));
}
