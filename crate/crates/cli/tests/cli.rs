use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sixmotif"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn k6_json_counts() {
    let k6 = data("k6.txt");
    let o = run(&["count", "--input", k6.to_str().unwrap(), "--no-timing"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 6);
    assert_eq!(v["m"], 15);
    assert_eq!(v["six_motifs"]["N1"], "6");
    assert_eq!(v["six_motifs"]["N16"], "90");
    assert_eq!(v["five_source"], "scalable-engine");
    assert!(v.get("timings").is_none());
}

#[test]
fn timings_present_by_default() {
    let k6 = data("k6.txt");
    let o = run(&["count", "--input", k6.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for stage in ["ingest", "primitives", "five", "six"] {
        assert!(v["timings"][stage].as_f64().unwrap() >= 0.0);
    }
}

#[test]
fn p6_csv_row() {
    let p6 = data("p6.txt");
    let o = run(&[
        "count",
        "--input",
        p6.to_str().unwrap(),
        "--format",
        "csv",
        "--no-timing",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    let head: Vec<&str> = lines[0].split(',').collect();
    let row: Vec<&str> = lines[1].split(',').collect();
    for (h, v) in head.iter().zip(&row).filter(|(h, _)| h.starts_with('N')) {
        let want = if *h == "N6" { "1" } else { "0" };
        assert_eq!(*v, want, "{h}");
    }
}

#[test]
fn json_and_csv_agree() {
    let k6 = data("k6.txt");
    let k6 = k6.to_str().unwrap();
    let j: serde_json::Value =
        serde_json::from_slice(&run(&["count", "--input", k6, "--no-timing"]).stdout).unwrap();
    let csv = stdout(&run(&[
        "count",
        "--input",
        k6,
        "--format",
        "csv",
        "--no-timing",
    ]));
    let lines: Vec<&str> = csv.lines().collect();
    for (h, v) in lines[0].split(',').zip(lines[1].split(',')) {
        if h.starts_with('N') {
            assert_eq!(j["six_motifs"][h], v);
        }
    }
}

#[test]
fn no_timing_is_deterministic() {
    let k6 = data("k6.txt");
    let a = run(&["count", "--input", k6.to_str().unwrap(), "--no-timing"]);
    let b = run(&["count", "--input", k6.to_str().unwrap(), "--no-timing"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn five_counts_file_and_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("dk4.txt");
    // two 4-cliques sharing the edge 0-1
    std::fs::write(
        &g,
        "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n0 4\n0 5\n1 4\n1 5\n4 5\n",
    )
    .unwrap();
    let engine = run(&[
        "count",
        "--input",
        g.to_str().unwrap(),
        "--no-timing",
        "--five-engine",
        "reference",
    ]);
    assert!(engine.status.success());

    // write the reference five counts to a file and feed them back
    let sm = sixmotif::Graph::parse_edge_list(&std::fs::read_to_string(&g).unwrap()).unwrap();
    let f5 = sixmotif::count_five_reference(&sm).unwrap();
    let f5_path = dir.path().join("dk4.f5");
    std::fs::write(&f5_path, f5.to_text()).unwrap();
    let o = run(&[
        "count",
        "--input",
        g.to_str().unwrap(),
        "--five-counts",
        f5_path.to_str().unwrap(),
        "--oracle-check",
        "--no-timing",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["five_source"], "external-file");
    assert_eq!(v["six_motifs"]["N15"], "1");
    assert_eq!(v["oracle"]["status"], "match");
    let e: serde_json::Value = serde_json::from_slice(&engine.stdout).unwrap();
    assert_eq!(e["six_motifs"], v["six_motifs"]);
}

#[test]
fn missing_five_index_fails() {
    let dir = tempfile::tempdir().unwrap();
    let f5 = dir.path().join("partial.f5");
    std::fs::write(&f5, "1 0\n2 0\n").unwrap();
    let k6 = data("k6.txt");
    let o = run(&[
        "count",
        "--input",
        k6.to_str().unwrap(),
        "--five-counts",
        f5.to_str().unwrap(),
    ]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("index"));
}

#[test]
fn errors_exit_nonzero() {
    let o = run(&["count", "--input", "/nonexistent/graph.txt"]);
    assert_eq!(o.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "0 1\n1 x\n").unwrap();
    let o = run(&["count", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let k6 = data("k6.txt");
    let o = run(&[
        "count",
        "--input",
        k6.to_str().unwrap(),
        "--oracle-check",
        "--max-oracle-n",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn predict_reproduces_fit() {
    let o = run(&[
        "predict",
        "--table",
        data("reference_timings.csv").to_str().unwrap(),
        "--edges",
        "2.9M",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let field = |key: &str| -> f64 {
        text.lines()
            .find_map(|l| l.strip_prefix(key))
            .unwrap()
            .trim()
            .parse()
            .unwrap()
    };
    assert!((field("slope ") - 1.6204).abs() / 1.6204 < 0.005);
    assert!((field("intercept ") + 0.1476).abs() < 0.02);
    assert!(field("prediction ") > 4.0);
}

#[test]
fn predict_degenerate_table() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.csv");
    std::fs::write(&t, "name,edges,seconds\na,1M,1.0\n").unwrap();
    let o = run(&["predict", "--table", t.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}
