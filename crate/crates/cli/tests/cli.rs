use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use strathom::catalog;

fn strathom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strathom"))
        .args(args)
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn emit(dir: &Path, name: &str) -> PathBuf {
    let o = strathom(&["catalog", "emit", name, "--out", dir.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    dir.join(format!(
        "{}.v1",
        catalog::EntryName::parse(name).unwrap().slug()
    ))
}

fn cocycle_path(complex: &Path, cocycle: &str) -> PathBuf {
    let stem = complex
        .file_name()
        .unwrap()
        .to_str()
        .unwrap()
        .trim_end_matches(".v1");
    complex.with_file_name(format!("{stem}.{cocycle}.cocycle.v1"))
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn ranks(report: &Value) -> Vec<u64> {
    let map = report.as_object().unwrap();
    (0..map.len())
        .map(|i| map[&i.to_string()]["rank"].as_u64().unwrap())
        .collect()
}

#[test]
fn pinched_torus_ih_json() {
    let dir = tempfile::tempdir().unwrap();
    let x = emit(dir.path(), "pinched_torus");
    let o = strathom(&["ih", "--in", x.to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["schema"], "strathom-report v1");
    assert_eq!(ranks(&v["report"]), vec![1, 0, 1]);
    assert_eq!(v["input"]["complex_sha256"].as_str().unwrap().len(), 64);

    let o = strathom(&["homology", "--in", x.to_str().unwrap(), "--json"]);
    assert_eq!(ranks(&json(&o)["report"]), vec![1, 1, 1]);
}

#[test]
fn broken_complex_fails_validation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.v1");
    std::fs::write(
        &path,
        "strathom-complex v1\nn=1\nvertices=4\nmaximal=(0,1,2);(0,2,3)\nstrata=(0,1)\nassign=\n",
    )
    .unwrap();
    let o = strathom(&["validate", "--in", path.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let err = String::from_utf8_lossy(&o.stderr).to_string();
    assert!(err.contains("pseudomanifold"), "{err}");
    assert!(stdout(&o).contains("FAIL"));

    let o = strathom(&["ih", "--in", path.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
}

#[test]
fn valid_complex_passes_validation() {
    let dir = tempfile::tempdir().unwrap();
    let x = emit(dir.path(), "torus");
    let o = strathom(&["validate", "--in", x.to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["report"]["valid"], true);
}

#[test]
fn genus_two_witness() {
    let dir = tempfile::tempdir().unwrap();
    let x = emit(dir.path(), "genus_g(2)");
    let w = cocycle_path(&x, "meridian_1");
    let o = strathom(&[
        "witness",
        "--in",
        x.to_str().unwrap(),
        "--cocycle",
        w.to_str().unwrap(),
        "--n",
        "1",
        "--json",
    ]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["report"]["ih"]["kind"], "witness");
    assert_eq!(v["report"]["ih"]["euler"], -2);
    assert_eq!(
        v["report"]["twisted_ih_ranks"],
        serde_json::json!([0, 2, 0])
    );
    assert!(v["input"]["cocycle_sha256"].is_string());
}

#[test]
fn inapplicable_witness_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let x = emit(dir.path(), "nodal_genus1");
    let w = cocycle_path(&x, "node_loop");
    let o = strathom(&[
        "witness",
        "--in",
        x.to_str().unwrap(),
        "--cocycle",
        w.to_str().unwrap(),
        "--n",
        "1",
    ]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("inapplicable"));
}

#[test]
fn non_surjective_cocycle_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let x = emit(dir.path(), "circle(3)");
    let w = cocycle_path(&x, "double");
    let o = strathom(&[
        "witness",
        "--in",
        x.to_str().unwrap(),
        "--cocycle",
        w.to_str().unwrap(),
        "--n",
        "0",
    ]);
    assert_eq!(code(&o), 1);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let x = emit(dir.path(), "torus");
    let w = cocycle_path(&x, "meridian");
    assert_eq!(
        code(&strathom(&["ih", "--in", x.to_str().unwrap(), "--bogus"])),
        2
    );
    assert_eq!(
        code(&strathom(&[
            "witness",
            "--in",
            x.to_str().unwrap(),
            "--cocycle",
            w.to_str().unwrap()
        ])),
        2
    );
    assert_eq!(
        code(&strathom(&[
            "ih",
            "--in",
            dir.path().join("missing.v1").to_str().unwrap()
        ])),
        2
    );
    let garbage = dir.path().join("garbage.v1");
    std::fs::write(&garbage, "not a complex\n").unwrap();
    assert_eq!(
        code(&strathom(&["ih", "--in", garbage.to_str().unwrap()])),
        2
    );
    assert_eq!(code(&strathom(&["catalog", "emit", "klein_bottle"])), 2);
    assert_eq!(code(&strathom(&[])), 2);
}

#[test]
fn json_is_byte_identical_across_runs_and_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let x = emit(dir.path(), "nodal_genus1");
    let w = cocycle_path(&x, "meridian");
    let args = [
        "twisted",
        "--in",
        x.to_str().unwrap(),
        "--cocycle",
        w.to_str().unwrap(),
        "--json",
    ];
    let a = strathom(&args);
    let b = strathom(&args);
    let c = Command::new(env!("CARGO_BIN_EXE_strathom"))
        .args(args)
        .env("STRATHOM_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn bad_thread_count_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let x = emit(dir.path(), "torus");
    let o = Command::new(env!("CARGO_BIN_EXE_strathom"))
        .args(["ih", "--in", x.to_str().unwrap()])
        .env("STRATHOM_THREADS", "lots")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn subdivision_flag_preserves_reports() {
    let dir = tempfile::tempdir().unwrap();
    let x = emit(dir.path(), "pinched_torus");
    let w = cocycle_path(&x, "node_loop");
    let o = strathom(&[
        "ih",
        "--in",
        x.to_str().unwrap(),
        "--subdivide",
        "1",
        "--json",
    ]);
    let v = json(&o);
    assert_eq!(v["subdivisions"], 1);
    assert_eq!(ranks(&v["report"]), vec![1, 0, 1]);
    let plain = strathom(&[
        "twisted",
        "--in",
        x.to_str().unwrap(),
        "--cocycle",
        w.to_str().unwrap(),
        "--json",
    ]);
    let sd = strathom(&[
        "twisted",
        "--in",
        x.to_str().unwrap(),
        "--cocycle",
        w.to_str().unwrap(),
        "--subdivide",
        "1",
        "--json",
    ]);
    assert_eq!(json(&plain)["report"], json(&sd)["report"]);
}

#[test]
fn crosscheck_agrees_on_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let x = emit(dir.path(), "torus");
    let w = cocycle_path(&x, "longitude");
    let o = strathom(&[
        "crosscheck",
        "--in",
        x.to_str().unwrap(),
        "--cocycle",
        w.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(code(&o), 0);
    assert!(json(&o)["report"]["mismatch"].is_null());
}

/// Emitting an entry and running the compute verbs on the files gives back
/// the entry's expected reports.
#[test]
fn emit_round_trip_reproduces_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    for name in catalog::STANDARD {
        let entry = catalog::build(name).unwrap();
        let fixture = entry.fixture();
        let x = emit(dir.path(), name);
        let xs = x.to_str().unwrap();
        let ih = json(&strathom(&["ih", "--in", xs, "--json"]));
        let expected = serde_json::to_value(&fixture.ih.unwrap().value).unwrap();
        assert_eq!(ih["report"], expected, "{name}");
        let h = json(&strathom(&["homology", "--in", xs, "--json"]));
        assert_eq!(
            h["report"],
            serde_json::to_value(&fixture.homology.unwrap().value).unwrap(),
            "{name}"
        );
        for (cocycle, tf) in &fixture.twisted {
            let Some(report) = tf.value.report() else {
                continue;
            };
            let w = cocycle_path(&x, cocycle);
            let o = strathom(&[
                "twisted",
                "--in",
                xs,
                "--cocycle",
                w.to_str().unwrap(),
                "--json",
            ]);
            assert_eq!(
                json(&o)["report"],
                serde_json::to_value(&report).unwrap(),
                "{name} {cocycle}"
            );
        }
    }
}

#[test]
fn catalog_list_names_standard_entries() {
    let o = strathom(&["catalog", "list", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let names: Vec<&str> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, catalog::STANDARD.to_vec());
}
