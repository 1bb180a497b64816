use reedcheck_core::graph::{graph_to_graph6, Graph};
use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reedcheck"))
        .args(args)
        .env_remove("REED_WORKERS")
        .output()
        .expect("binary runs")
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("NDJSON line"))
        .collect()
}

fn g6(g: &Graph) -> String {
    graph_to_graph6(g).unwrap()
}

#[test]
fn invariants_examples() {
    let out = run(&[
        "invariants",
        &g6(&Graph::cycle(5)),
        &g6(&Graph::complete(5)),
        &g6(&Graph::path(4)),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = lines(&out);
    assert_eq!(v.len(), 3);
    assert_eq!(v[0]["slack"], 0);
    assert_eq!(v[0]["chi"], 3);
    assert_eq!(v[1]["slack"], 0);
    assert_eq!(v[2]["slack"], 1);
    let first = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .next()
        .unwrap()
        .to_string();
    assert_eq!(
        first,
        r#"{"graph6":"Dhc","n":5,"m":5,"delta":2,"omega":2,"chi":3,"alpha":2,"reed_bound":3,"slack":0}"#
    );
}

#[test]
fn classify_examples() {
    let c6 = g6(&Graph::cycle(6));
    let out = run(&["classify", "--family", "p5-flagc", &c6, &g6(&Graph::cycle(5))]);
    assert_eq!(out.status.code(), Some(0));
    let v = lines(&out);
    assert_eq!(v[0]["member"], false);
    assert_eq!(v[0]["witness"]["pattern"], "P5");
    assert_eq!(v[0]["witness"]["vertices"], serde_json::json!([0, 1, 2, 3, 4]));
    assert_eq!(v[1]["member"], true);
    assert!(v[1].get("witness").is_none());

    let out = run(&["classify", "--family", "3k1", &g6(&Graph::complete(4))]);
    assert_eq!(lines(&out)[0]["member"], true);
}

#[test]
fn classify_with_forbid_list() {
    // Forbidding C4 rejects C4 itself but not C5.
    let c4 = g6(&Graph::cycle(4));
    let out = run(&["classify", "--forbid", &c4, &c4, &g6(&Graph::cycle(5))]);
    let v = lines(&out);
    assert_eq!(v[0]["member"], false);
    assert_eq!(v[0]["witness"]["pattern"], c4.as_str());
    assert_eq!(v[1]["member"], true);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["sweep", "--n-max", "99"]).status.code(), Some(2));
    assert_eq!(run(&["sweep"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--family", "nope", "A_"]).status.code(), Some(2));
    assert_eq!(
        run(&["classify", "--family", "3k1", "--forbid", "A_", "A_"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["invariants", "A_x"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn sweep_theorem_family_is_clean() {
    let out = run(&["sweep", "--family", "p5-flagc", "--n-max", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = lines(&out);
    assert_eq!(v.len(), 1);
    assert_eq!(v[0]["examined"], 1253);
    assert_eq!(v[0]["reed_violations"], serde_json::json!([]));
}

#[test]
fn corollary_family_has_fewer_members() {
    let a = lines(&run(&["sweep", "--family", "p5-c4", "--n-max", "6"]));
    let b = lines(&run(&["sweep", "--family", "p5-flagc", "--n-max", "6"]));
    assert!(a[0]["members"].as_u64().unwrap() <= b[0]["members"].as_u64().unwrap());
}

#[test]
fn sweep_output_independent_of_workers() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("wall_time_ms");
        v
    };
    let one = strip(lines(&run(&["sweep", "--n-max", "6", "--audit", "--workers", "1"])).remove(0));
    let many = strip(lines(&run(&["sweep", "--n-max", "6", "--audit", "--workers", "4"])).remove(0));
    assert_eq!(one, many);
    let env = Command::new(env!("CARGO_BIN_EXE_reedcheck"))
        .args(["sweep", "--n-max", "6", "--audit"])
        .env("REED_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(strip(lines(&env).remove(0)), one);
}

#[test]
fn sweep_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.g6");
    // Forbidding K1 leaves no nonempty members.
    std::fs::write(&path, ">>graph6<<\nA_\n\nDhc\n").unwrap();
    let out = run(&["sweep", "--source", path.to_str().unwrap(), "--forbid", "@"]);
    assert_eq!(out.status.code(), Some(0));
    let v = &lines(&out)[0];
    assert_eq!(v["examined"], 2);
    assert_eq!(v["members"], 0);
    assert_eq!(v["forbidden"], serde_json::json!(["@"]));
}

#[test]
fn strict_and_lenient_streams() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.g6");
    std::fs::write(&path, "A_\nA_x\nDhc\n").unwrap();
    let p = path.to_str().unwrap();
    let strict = run(&["invariants", "--source", p]);
    assert_eq!(strict.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&strict.stderr).contains("line 2"));
    let lenient = run(&["invariants", "--source", p, "--lenient"]);
    assert_eq!(lenient.status.code(), Some(0));
    assert_eq!(lines(&lenient).len(), 2);
    assert!(String::from_utf8_lossy(&lenient.stderr).contains("skipped line 2"));
    let sweep = run(&["sweep", "--source", p, "--lenient"]);
    assert_eq!(lines(&sweep)[0]["skipped_lines"], 1);
}

#[test]
fn audit_examples_and_replay() {
    let dir = tempfile::tempdir().unwrap();
    let certs = dir.path().join("certs.ndjson");
    let c5 = g6(&Graph::cycle(5));
    let k4 = g6(&Graph::complete(4));
    let out = run(&["audit", &c5, &k4, "--certificates", certs.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = lines(&out);
    assert_eq!(v[0]["member"], true);
    assert!(v[0]["violations"].as_array().unwrap().is_empty());
    let s2 = v[0]["counters"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["statement"] == "S2")
        .unwrap();
    assert!(s2["holds"].as_u64().unwrap() >= 1);
    for c in v[1]["counters"].as_array().unwrap() {
        assert_eq!(c["holds"], 0);
        assert_eq!(c["violated"], 0);
    }

    let replayed = run(&["replay", certs.to_str().unwrap()]);
    assert_eq!(replayed.status.code(), Some(0));
    let r = lines(&replayed);
    assert!(!r.is_empty());
    assert!(r.iter().all(|l| l["matches"] == true));
}

#[test]
fn audit_exit_status_counts_members_only() {
    // S2 fails on this graph. It is outside the theorem family, so exit
    // status is 0 there, and 1 for a family (K6-free) that contains it.
    let out = run(&["audit", "E@V_"]);
    assert_eq!(out.status.code(), Some(0));
    let v = lines(&out);
    assert_eq!(v[0]["member"], false);
    assert!(!v[0]["violations"].as_array().unwrap().is_empty());
    let out = run(&["audit", "E@V_", "--forbid", &g6(&Graph::complete(6))]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn replay_reports_tampered_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let certs = dir.path().join("certs.ndjson");
    run(&[
        "audit",
        &g6(&Graph::cycle(5)),
        "--certificates",
        certs.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&certs).unwrap();
    let first = text.lines().find(|l| l.contains("\"holds\"")).unwrap();
    let tampered = first.replace("\"holds\"", "\"violated\"");
    std::fs::write(&certs, format!("{tampered}\n")).unwrap();
    let out = run(&["replay", certs.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(lines(&out)[0]["matches"], false);
}

#[test]
fn patterns_listing() {
    let out = run(&["patterns"]);
    assert_eq!(out.status.code(), Some(0));
    let v = lines(&out);
    let find = |name: &str| v.iter().find(|p| p["name"] == name).unwrap().clone();
    let flagc = find("FlagC");
    assert_eq!((flagc["n"].as_u64(), flagc["m"].as_u64()), (Some(5), Some(5)));
    let p5 = find("P5");
    assert_eq!((p5["n"].as_u64(), p5["m"].as_u64()), (Some(5), Some(4)));
    let flag = reedcheck_core::graph::graph_from_graph6(find("Flag")["graph6"].as_str().unwrap()).unwrap();
    assert_eq!(flagc["graph6"], g6(&flag.complement()).as_str());
}

#[test]
fn out_flag_and_pretty() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("o.ndjson");
    let out = run(&["invariants", "Dhc", "--out", path.to_str().unwrap()]);
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 1);
    let pretty = run(&["invariants", "Dhc", "--pretty"]);
    let s = String::from_utf8(pretty.stdout).unwrap();
    assert!(s.starts_with("graph6"));
    assert!(s.lines().nth(1).unwrap().starts_with("Dhc"));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["audit", "Dhc", "C~", "E@V_"]);
    let b = run(&["audit", "Dhc", "C~", "E@V_"]);
    assert_eq!(a.stdout, b.stdout);
}
