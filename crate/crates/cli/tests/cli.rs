use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn flowcolor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flowcolor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const IDENTITY: &str = r#"{"kind":"hospital","departments":["d1","d2","d3"],
  "patients":[{"id":"p1","compatible":["d1"]},{"id":"p2","compatible":["d2"]},{"id":"p3","compatible":["d3"]}],
  "beds":[{"id":"b1","department":"d1"},{"id":"b2","department":"d2"},{"id":"b3","department":"d3"}]}"#;

const K4: &str = r#"{"kind":"courses","num_courses":4,"conflicts":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#;

#[test]
fn gen_empty_courses() {
    let o = flowcolor(&["gen", "courses", "--n", "0"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "{\"kind\":\"courses\",\"num_courses\":0,\"conflicts\":[]}\n");
}

#[test]
fn gen_is_deterministic_and_accepts_kind_flag() {
    let a = flowcolor(&["gen", "hospital", "--n", "20", "--seed", "7"]);
    let b = flowcolor(&["gen", "--kind", "hospital", "--n", "20", "--seed", "7"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let c = flowcolor(&["gen", "hospital", "--n", "20", "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn gen_writes_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("g.json");
    let o = flowcolor(&["gen", "courses", "--n", "12", "--density", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["conflicts"].as_array().unwrap().len(), 66);
}

#[test]
fn gen_rejects_bad_flags() {
    assert_eq!(code(&flowcolor(&["gen", "courses", "--n", "5", "--density", "1.5"])), 2);
    assert_eq!(code(&flowcolor(&["gen", "--n", "5"])), 2);
    assert_eq!(code(&flowcolor(&["gen", "courses", "--kind", "hospital", "--n", "5"])), 2);
    assert_eq!(code(&flowcolor(&["gen", "hospital", "--n", "5", "--compat-max", "9"])), 2);
    assert_eq!(code(&flowcolor(&["gen", "hospital", "--n", "x"])), 2);
}

#[test]
fn solve_identity_hospital() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "h.json", IDENTITY);
    let o = flowcolor(&["solve", &inst]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "{\"kind\":\"hospital_solution\",\"admitted\":3,\"assignment\":{\"p1\":\"b1\",\"p2\":\"b2\",\"p3\":\"b3\"}}\n"
    );
    assert_eq!(code(&flowcolor(&["solve", &inst, "--algorithm", "dsatur"])), 2);
}

#[test]
fn solve_courses_with_each_algorithm() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "k4.json", K4);
    for alg in ["wp", "dsatur", "exact"] {
        let o = flowcolor(&["solve", &inst, "--algorithm", alg]);
        assert_eq!(code(&o), 0, "{alg}");
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["kind"], "schedule");
        assert_eq!(v["num_colors"], 4);
    }
    assert_eq!(code(&flowcolor(&["solve", &inst, "--algorithm", "flow"])), 2);
}

#[test]
fn exact_refuses_large_instances() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "c.json", r#"{"kind":"courses","num_courses":13,"conflicts":[]}"#);
    let o = flowcolor(&["solve", &inst, "--algorithm", "exact"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("limit is 12"));
}

#[test]
fn malformed_input_exits_1() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", "{\"kind\":\"courses\",");
    let o = flowcolor(&["solve", &bad]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("malformed instance"));
    assert_eq!(code(&flowcolor(&["solve", "/nonexistent/file.json"])), 1);
    let reversed = write(&dir, "r.json", r#"{"kind":"courses","num_courses":2,"conflicts":[[1,0]]}"#);
    assert_eq!(code(&flowcolor(&["solve", &reversed])), 1);
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let courses = write(&dir, "c.json", r#"{"kind":"courses","num_courses":3,"conflicts":[[0,1],[1,2]]}"#);
    let good = write(&dir, "good.json", r#"{"kind":"schedule","num_colors":2,"slots":{"0":0,"1":1,"2":0}}"#);
    let o = flowcolor(&["verify", &courses, &good]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "ok\n");

    let bad = write(&dir, "bad.json", r#"{"kind":"schedule","num_colors":1,"slots":{"0":0,"1":0,"2":0}}"#);
    let o = flowcolor(&["verify", &courses, &bad]);
    assert_eq!(code(&o), 4);
    let text = stdout(&o);
    assert!(text.contains("conflict (0, 1) both in slot 1"), "{text}");
    assert!(text.contains("conflict (1, 2) both in slot 1"), "{text}");

    let partial = write(&dir, "p.json", r#"{"kind":"schedule","num_colors":2,"slots":{"0":0,"1":1,"7":0}}"#);
    let o = flowcolor(&["verify", &courses, &partial]);
    assert_eq!(code(&o), 4);
    assert!(stdout(&o).contains("course 2 has no slot"));
    assert!(stdout(&o).contains("unknown course 7"));

    let overflow = write(&dir, "o.json", r#"{"kind":"schedule","num_colors":1,"slots":{"0":0,"1":1,"2":0}}"#);
    assert_eq!(code(&flowcolor(&["verify", &courses, &overflow])), 4);

    let hosp = write(&dir, "hs.json", r#"{"kind":"hospital_solution","admitted":0,"assignment":{}}"#);
    assert_eq!(code(&flowcolor(&["verify", &courses, &hosp])), 2);
}

#[test]
fn verify_hospital_solutions() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "h.json", IDENTITY);
    let double = write(
        &dir,
        "d.json",
        r#"{"kind":"hospital_solution","admitted":2,"assignment":{"p1":"b1","p2":"b1"}}"#,
    );
    let o = flowcolor(&["verify", &inst, &double]);
    assert_eq!(code(&o), 4);
    let text = stdout(&o);
    assert!(text.contains("bed multiply assigned"));
    assert!(text.contains("compatibility"));

    let miscount = write(&dir, "m.json", r#"{"kind":"hospital_solution","admitted":2,"assignment":{"p1":"b1"}}"#);
    assert_eq!(code(&flowcolor(&["verify", &inst, &miscount])), 4);
}

fn solve_then_verify(dir: &Path, instance: &str, algorithm: Option<&str>) {
    let sol = dir.join("sol.json");
    let mut args = vec!["solve", instance, "--out", sol.to_str().unwrap()];
    if let Some(a) = algorithm {
        args.extend(["--algorithm", a]);
    }
    assert_eq!(code(&flowcolor(&args)), 0);
    let o = flowcolor(&["verify", instance, sol.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn solutions_always_verify() {
    let dir = TempDir::new().unwrap();
    for seed in ["1", "2", "3"] {
        let h = dir.path().join("h.json");
        let c = dir.path().join("c.json");
        let small = dir.path().join("s.json");
        flowcolor(&["gen", "hospital", "--n", "60", "--seed", seed, "--out", h.to_str().unwrap()]);
        flowcolor(&["gen", "courses", "--n", "80", "--seed", seed, "--out", c.to_str().unwrap()]);
        flowcolor(&["gen", "courses", "--n", "10", "--density", "0.5", "--seed", seed, "--out", small.to_str().unwrap()]);
        solve_then_verify(dir.path(), h.to_str().unwrap(), None);
        solve_then_verify(dir.path(), c.to_str().unwrap(), Some("wp"));
        solve_then_verify(dir.path(), c.to_str().unwrap(), Some("dsatur"));
        solve_then_verify(dir.path(), small.to_str().unwrap(), Some("exact"));
    }
}

#[test]
fn bench_flow_writes_csv() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("flow.csv");
    let o = flowcolor(&["bench", "--suite", "flow", "--sizes", "20,40,60", "--trials", "2", "--out", csv.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[0], "algorithm,n,trial,seconds,quality,delta");
    assert!(lines[1].starts_with("flow,20,0,"));
    assert!(!text.contains('\r'));
    assert!(stdout(&o).contains("flow: slope"));
}

#[test]
fn bench_coloring_reports_two_slopes() {
    let o = flowcolor(&["bench", "--suite", "coloring", "--sizes", "30,60,90", "--trials", "1"]);
    assert_eq!(code(&o), 0);
    // CSV on stdout, summary on stderr when no --out is given
    assert_eq!(stdout(&o).lines().count(), 1 + 3 * 2);
    let summary = String::from_utf8_lossy(&o.stderr);
    assert!(summary.contains("greedy: slope"));
    assert!(summary.contains("dsatur: slope"));
    assert!(summary.contains("colors / (delta + 1)"));
}

#[test]
fn bench_failures() {
    let o = flowcolor(&["bench", "--suite", "flow", "--sizes", "20", "--trials", "1"]);
    assert_eq!(code(&o), 5);
    assert!(String::from_utf8_lossy(&o.stderr).contains("at least 3 distinct sizes"));
    assert_eq!(code(&flowcolor(&["bench", "--suite", "flow", "--sizes", "20,40,60", "--trials", "0"])), 2);
    assert_eq!(code(&flowcolor(&["bench", "--suite", "flow", "--sizes", "20,x"])), 2);
    assert_eq!(code(&flowcolor(&["bench", "--suite", "paint"])), 2);
}
