use std::io::Write;
use std::process::{Command, Output, Stdio};

fn levi() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_levi"));
    c.env_remove("LEVI_THREADS");
    c
}

fn run(args: &[&str]) -> Output {
    levi().args(args).output().unwrap()
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = levi()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    stdout(&run(&full)).trim().to_string()
}

#[test]
fn heawood_pipes_into_classify() {
    let g6 = gen(&["--family", "heawood"]);
    let out = stdout(&run_with_stdin(&["classify", "-", "--json"], &format!("{g6}\n")));
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["flags"]["two_factor_hamiltonian"], true);
    assert_eq!(v["total_two_factors"], 24);
}

#[test]
fn d9_is_irreducible() {
    let g6 = gen(&["--family", "d", "--n", "9"]);
    let out = stdout(&run_with_stdin(&["martinetti", "irreducible", "-"], &g6));
    assert_eq!(out.trim(), "true");
}

#[test]
fn d_family_matches_cyclic_013() {
    let d = gen(&["--family", "d", "--n", "11"]);
    let c = gen(&["--family", "cyclic", "--n", "11", "--base", "0,1,3"]);
    assert_eq!(stdout(&run(&["iso", &d, &c])).trim(), "true");
}

#[test]
fn pappus_extension_reduces_back() {
    let p = gen(&["--family", "pappus"]);
    let ext = stdout(&run(&["martinetti", "extend", &p, "--site", "0"]));
    let ext = ext.trim();
    let sites = stdout(&run(&["martinetti", "sites", ext, "--json"]));
    assert!(sites.contains("reduction") || sites.contains("edge"));
    let c = stdout(&run(&["classify", ext, "--mode", "parity", "--json"]));
    let v: serde_json::Value = serde_json::from_str(c.trim()).unwrap();
    assert_eq!(v["flags"]["pseudo_two_factor_isomorphic"], false);
}

#[test]
fn edge_lists_round_trip() {
    let canonical = |o: Output| {
        let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
        v["canonical"].as_str().unwrap().to_string()
    };
    let el = stdout(&run(&["gen", "--family", "pappus", "--format", "edgelist"]));
    let g6 = gen(&["--family", "pappus"]);
    let from_el = canonical(run_with_stdin(&["props", "-", "--format", "edgelist", "--json"], &el));
    assert_eq!(from_el, canonical(run(&["props", &g6, "--json"])));
}

#[test]
fn bad_input_exit_codes() {
    let g6 = gen(&["--family", "heawood"]);
    let truncated = &g6[..g6.len() - 3];
    let o = run(&["classify", truncated]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());

    let o = run(&["classify", &g6, "--mode", "sideways"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["gen", "--family", "d", "--n", "3"]);
    assert_ne!(o.status.code(), Some(0));
}

#[test]
fn thread_count_from_environment_does_not_change_output() {
    let g6 = gen(&["--family", "t", "--n", "1", "--variant", "3"]);
    let reference = run(&["classify", &g6, "--json"]).stdout;
    for t in ["2", "4"] {
        let o = levi().args(["classify", &g6, "--json"]).env("LEVI_THREADS", t).output().unwrap();
        assert_eq!(o.stdout, reference);
    }
}

#[test]
fn verify_paper_passes_small_prefix() {
    let o = run(&["verify-paper", "--nmax", "10", "--t-max", "1"]);
    let text = stdout(&o);
    assert!(text.lines().all(|l| !l.starts_with("FAIL")));
}
