use std::process::{Command, Output};

use serde_json::Value;

fn bench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matroid-bench"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn check_classical_on_minimal() {
    let v = json(&bench(&[
        "check",
        r#"{"family":"minimal","n":4,"r":2}"#,
        "--alg",
        "classical",
    ]));
    assert_eq!(v["connected"], true);
    assert_eq!(v["classical_queries"], 8);
    assert_eq!(v["witness"], Value::Null);
}

#[test]
fn check_brute_reports_witness_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mb.json");
    std::fs::write(
        &path,
        r#"{"family":"removed_base","n":4,"r":2,"removed":[1,2]}"#,
    )
    .unwrap();
    let v = json(&bench(&["check", path.to_str().unwrap(), "--alg", "brute"]));
    assert_eq!(v["connected"], false);
    assert_eq!(v["witness"], serde_json::json!([[1, 2], [3, 4]]));
}

#[test]
fn caps_and_bad_input_exit_2() {
    let big = r#"{"family":"minimal","n":30,"r":15}"#;
    assert_eq!(
        bench(&["check", big, "--alg", "brute"]).status.code(),
        Some(2)
    );
    assert!(bench(&["check", big, "--alg", "quantum"]).status.success());

    let out = bench(&[
        "check",
        r#"{"family":"explicit_bases","n":3,"bases":[[1],[2,3]]}"#,
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exchange"));

    let out = bench(&["check", "{\"family\": \"minimal\",\n \"n\": }"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    assert_eq!(
        bench(&["check", "/no/such/file.json"]).status.code(),
        Some(1)
    );
    assert_eq!(
        bench(&["distinguish", "--n", "12", "--r", "6", "--t", "38"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn disagreeing_deciders_exit_3() {
    let out = bench(&[
        "check",
        r#"{"family":"removed_base","n":4,"r":2,"removed":[2,3]}"#,
        "--alg",
        "all",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let v = json(&bench(&[
        "check",
        r#"{"family":"uniform","n":5,"r":2}"#,
        "--alg",
        "all",
    ]));
    assert_eq!(v.as_array().unwrap().len(), 4);
}

#[test]
fn gen_output_feeds_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let out = bench(&[
        "gen",
        "--family",
        "graphic",
        "--n",
        "6",
        "--vertices",
        "4",
        "--seed",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v = json(&bench(&["check", path.to_str().unwrap(), "--alg", "all"]));
    assert_eq!(v[0]["family"], "graphic");
}

#[test]
fn bench_csv_is_reproducible_without_timing() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let out = bench(&[
            "bench",
            "--n",
            "8,16,32",
            "--alg",
            "classical,quantum",
            "--seeds",
            "3",
            "--seed",
            "5",
            "--no-timing",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        std::fs::read(path).unwrap()
    };
    let a = run("a.csv");
    assert_eq!(a, run("b.csv"));
    let text = String::from_utf8(a).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# matroid-bench csv v"));
    assert_eq!(
        lines.next().unwrap(),
        "family,n,r,algorithm,connected,classical_queries,quantum_charged,seed,elapsed_ms"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 3 * 2 * 3);
    assert_eq!(rows[0], "minimal,8,4,classical,true,24,0,5,0.0");
}

#[test]
fn bench_empty_grid_and_svg() {
    let out = bench(&["bench"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 2);

    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("plot.svg");
    let out = bench(&[
        "bench",
        "--n",
        "16,32,64",
        "--format",
        "json",
        "--svg",
        svg.to_str().unwrap(),
    ]);
    let records: Value = json(&out);
    assert_eq!(records.as_array().unwrap().len(), 6);
    assert!(std::fs::read_to_string(svg).unwrap().contains("<polyline"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("classical: slope"));
}

#[test]
fn distinguish_and_adversary() {
    let v = json(&bench(&[
        "distinguish",
        "--n",
        "12",
        "--r",
        "6",
        "--t",
        "37",
        "--trials",
        "1000",
    ]));
    assert_eq!(v["empirical_success"], 1.0);
    let v = json(&bench(&["adversary", "--n", "6", "--r", "3"]));
    assert_eq!(v["m"], 10);
    assert!((v["bound"].as_f64().unwrap() - 10f64.sqrt()).abs() < 1e-12);
}
