//! End-to-end checks of the `sperner` binary: output bytes and exit codes.

use std::fs;
use std::process::{Command, Output};

fn sperner(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sperner"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn bounds_csv_bytes() {
    let out = sperner(&["bounds", "--k", "4", "--q", "5"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "q,lower_bound,first_choice\n1,1,1\n2,3,7\n3,6,19\n4,10,37\n5,15,61\n"
    );
}

#[test]
fn bounds_table_format() {
    let out = sperner(&["bounds", "--k", "3", "--q", "2", "--format", "table"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("first_choice"));
    assert!(text.lines().count() >= 3);
}

#[test]
fn bounds_exact_column() {
    let out = sperner(&["bounds", "--k", "3", "--q", "3", "--exact"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("q,lower_bound,first_choice,exact\n"));
    assert!(text.contains("\n2,2,3,3\n"));
}

#[test]
fn usage_errors_exit_2() {
    let out = sperner(&["enumerate", "--k", "1", "--q", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = sperner(&["enumerate", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = sperner(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_emits_triangulation_json() {
    let out = sperner(&["enumerate", "--k", "3", "--q", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("{\"k\":3,\"q\":2,\"vertex_count\":6,\"cell_count\":4,"));
}

#[test]
fn verify_passes_and_prints_checks() {
    let out = sperner(&["verify", "--k", "4", "--q", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for name in [
        "cell-count",
        "unimodular",
        "facet-incidence",
        "boundary-support",
        "construction-equivalence",
    ] {
        assert!(text.contains(&format!("{name}: pass")), "missing {name} in {text}");
    }
}

#[test]
fn label_reports_counts() {
    let out = sperner(&["label", "--k", "3", "--q", "2", "--j", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"nonmonochromatic\":3"));
    assert!(text.contains("\"cells_with_at_least_j\":1"));
}

#[test]
fn label_from_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("labeling.json");
    fs::write(&path, "{\"k\":3,\"q\":2,\"colors\":[3,2,2,1,1,1]}").unwrap();
    let out = sperner(&["label", "--k", "3", "--q", "2", "--labeling", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"nonmonochromatic\":3"));
    assert!(String::from_utf8(out.stderr.clone()).unwrap().contains("file labeling"));

    // non-Sperner labeling file: check failure
    fs::write(&path, "{\"k\":3,\"q\":2,\"colors\":[1,1,1,1,1,1]}").unwrap();
    let out = sperner(&["label", "--k", "3", "--q", "2", "--labeling", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn hypergraph_embeds() {
    let out = sperner(&["hypergraph", "--k", "3", "--q", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"hyperedge_count\":3"));
}

#[test]
fn minimize_then_check_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let out = sperner(&[
        "minimize", "--k", "3", "--q", "2", "--method", "brute", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let cert = fs::read_to_string(&path).unwrap();
    assert!(cert.contains("\"m\":3"));

    let out = sperner(&["check-cert", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("certificate valid"));

    // tamper with the claim: the checker must reject it
    let lying = cert.replace("\"m\":3", "\"m\":2");
    fs::write(&path, lying).unwrap();
    let out = sperner(&["check-cert", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    // unreadable path is a usage/input error
    let out = sperner(&["check-cert", "/nonexistent/cert.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn minimize_methods_agree() {
    let brute = sperner(&["minimize", "--k", "4", "--q", "2", "--method", "brute"]);
    let bb = sperner(&["minimize", "--k", "4", "--q", "2", "--method", "bb"]);
    assert!(brute.status.success() && bb.status.success());
    let get_m = |s: &str| {
        let i = s.find("\"m\":").unwrap() + 4;
        s[i..].chars().take_while(|c| c.is_ascii_digit()).collect::<String>()
    };
    assert_eq!(get_m(&stdout(&brute)), "7");
    assert_eq!(get_m(&stdout(&bb)), "7");
}

#[test]
fn minimize_respects_budget() {
    let out = sperner(&["minimize", "--k", "3", "--q", "2", "--method", "brute", "--budget", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("budget"));
}

#[test]
fn minimize_parallel_matches_serial() {
    let serial = sperner(&["minimize", "--k", "3", "--q", "4", "--method", "bb", "--threads", "1"]);
    let parallel = sperner(&["minimize", "--k", "3", "--q", "4", "--method", "bb", "--threads", "4"]);
    assert!(serial.status.success() && parallel.status.success());
    let strip_nodes = |s: &str| s.split("\"nodes_explored\"").next().unwrap().to_string();
    assert_eq!(strip_nodes(&stdout(&serial)), strip_nodes(&stdout(&parallel)));
}
