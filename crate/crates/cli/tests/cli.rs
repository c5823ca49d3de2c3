use std::path::PathBuf;
use std::process::{Command, Output};

fn cyclepack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclepack"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn lambda_k_on_k4() {
    let out = cyclepack(&["lambda-k", "--family", "complete:4", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("lambda 2\n"), "{text}");
    assert!(text.contains("status optimal\n"));
}

#[test]
fn lambda_table_is_tab_separated() {
    let out = cyclepack(&["family", "lambda-table", "bipartite:2,3"]);
    assert_eq!(stdout(&out), "2\t2\n3\t0\n4\t0\n5\t0\n");
    let out = cyclepack(&["formula", "complete:4", "--k", "3"]);
    assert_eq!(stdout(&out), "3\t2\n");
}

#[test]
fn dag_has_no_cycles() {
    let dag = scratch("dag.txt", "n 3\na 0 1\na 1 2\na 0 2\n");
    let out = cyclepack(&["solve", &dag, "--S", "2,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "S: 0,2\nlambda 0\nstatus optimal\nnodes 0\n");
}

#[test]
fn verify_accepts_emitted_witnesses() {
    let k6 = scratch("k6.txt", &stdout(&cyclepack(&["family", "make", "complete:6"])));
    let solved = stdout(&cyclepack(&["solve", &k6, "--S", "0,1,2,3,4,5"]));
    assert!(solved.contains("lambda 4\n"));
    let w = scratch("k6_witness.txt", &solved);
    assert_eq!(cyclepack(&["verify", &k6, &w]).status.code(), Some(0));

    let cycles = "lambda 4\n\
        cycle: 0 1 2 3 4 5 0\n\
        cycle: 0 5 4 3 2 1 0\n\
        cycle: 0 2 5 3 1 4 0\n\
        cycle: 0 4 1 3 5 2 0\n";
    let w = scratch("k6_family.txt", cycles);
    assert_eq!(
        cyclepack(&["verify", &k6, &w, "--S", "0,1,2,3,4,5"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn verify_rejects_bad_witnesses() {
    let k3 = scratch("k3.txt", &stdout(&cyclepack(&["family", "make", "complete:3"])));
    let reused = scratch("k3_reused.txt", "lambda 2\ncycle: 0 1 2 0\ncycle: 0 1 2 0\n");
    assert_eq!(
        cyclepack(&["verify", &k3, &reused, "--S", "0,1"]).status.code(),
        Some(1)
    );
    let miscount = scratch("k3_miscount.txt", "lambda 3\ncycle: 0 1 2 0\n");
    assert_eq!(
        cyclepack(&["verify", &k3, &miscount, "--S", "0,1"]).status.code(),
        Some(1)
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        cyclepack(&["solve", "--family", "complete:3", "--S", "1,1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        cyclepack(&["solve", "--family", "complete:3"]).status.code(),
        Some(2)
    );
    let bad = scratch("bad.txt", "n 2\na 0 0\n");
    let out = cyclepack(&["solve", &bad, "--S", "0,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(cyclepack(&["formula", "torus:3"]).status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_3() {
    let out = cyclepack(&[
        "solve",
        "--family",
        "complete:7",
        "--S",
        "0,1,2,3,4,5",
        "--budget",
        "50",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("status budget-exhausted\n"));
}

#[test]
fn decompose_reports_both_outcomes() {
    let out = cyclepack(&["decompose", "--family", "complete:5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("decomposition 4\n"));
    assert_eq!(
        stdout(&cyclepack(&["decompose", "--family", "complete:4"])),
        "failure exhausted\n"
    );
}

#[test]
fn gadget_document_feeds_solve() {
    let c4 = scratch("c4.txt", "n 4\na 0 1\na 1 2\na 2 3\na 3 0\n");
    let doc = stdout(&cyclepack(&["gadget", "replacement", &c4, "--ell", "2"]));
    assert!(doc.ends_with("S: 0,1,2,3\nL: 2\n"));
    let path = scratch("c4_gadget.txt", &doc);
    // both orientations of both subdivision layers
    assert!(stdout(&cyclepack(&["solve", &path])).contains("lambda 4\n"));
    let out = cyclepack(&["solve", &path, "--target", "2"]);
    let text = stdout(&out);
    assert!(
        text.contains("lambda 2\n") && text.contains("status target-reached\n"),
        "{text}"
    );
}

#[test]
fn eulerian_and_planar_gadgets() {
    let g = scratch("linkage.txt", "n 4\na 0 1\na 2 3\n");
    let out = cyclepack(&[
        "gadget", "eulerian", &g, "--s1", "0", "--t1", "1", "--s2", "2", "--t2", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("role 4 x_1\n"));
    let out = cyclepack(&[
        "gadget", "planar", &g, "--s1", "0", "--t1", "1", "--s2", "2", "--t2", "3", "--d1", "2",
    ]);
    assert!(stdout(&out).ends_with("L: 3\n"));
    let out = cyclepack(&[
        "gadget", "eulerian", &g, "--s1", "0", "--t1", "0", "--s2", "2", "--t2", "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn flow_decompose_prints_terms() {
    let f = scratch(
        "flow.txt",
        "n 4\na 0 1\na 1 3\na 0 2\na 2 3\nsources: 0\nsinks: 3\nflow 0 2\nflow 1 2\nflow 2 1\nflow 3 1\n",
    );
    let out = cyclepack(&["flow-decompose", &f]);
    assert_eq!(stdout(&out), "paths 2\ncycles 0\npath 2: 0 1 3\npath 1: 0 2 3\n");
}

#[test]
fn harness_is_deterministic() {
    let a = cyclepack(&[
        "harness",
        "--corpus",
        "replacement",
        "--count",
        "10",
        "--seed",
        "5",
    ]);
    let b = cyclepack(&[
        "harness",
        "--corpus",
        "replacement",
        "--count",
        "10",
        "--seed",
        "5",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.ends_with("# replacement: 10/10 agree\n"));
    assert!(text.lines().next().unwrap().split('\t').count() == 4);
}
