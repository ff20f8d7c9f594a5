use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qelectric"))
        .args(args)
        .env_remove("QELECTRIC_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn tableaux_count_example() {
    let o = run(&[
        "tableaux", "count", "--level", "1", "--length", "3", "--shape", "1",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "3");
}

#[test]
fn tableaux_dims_csv() {
    let o = run(&["--format", "csv", "tableaux", "dims", "--length", "4"]);
    assert_eq!(stdout(&o), "length,dimension\n0,1\n1,1\n2,3\n3,15\n4,105\n");
}

#[test]
fn tableaux_list_matches_count() {
    let o = run(&[
        "tableaux", "list", "--level", "2", "--length", "2", "--shape", "1|1",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[0][0]["sign"], 1);
}

#[test]
fn fock_act_example() {
    let o = run(&[
        "fock",
        "act",
        "--charge",
        "0",
        "--epsilon",
        "1",
        "--i",
        "0",
        "--partition",
        "",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["partition"], serde_json::json!([1]));
    assert_eq!(
        terms[0]["coeff"]["num"],
        serde_json::json!([{"exp": 0, "c": "1/1"}])
    );
}

#[test]
fn fock_bar_text() {
    let o = run(&["--format", "csv", "fock", "bar", "--partition", "1,1"]);
    assert_eq!(stdout(&o), "partition,coeff\n∅,q^-1\n\"(1,1)\",1\n");
}

#[test]
fn fock_pair_adjoint() {
    // (v^(1), v_∅ · E_0) = 1
    let o = run(&[
        "--format", "text", "fock", "pair", "--left", "1", "--right", "", "--word", "0",
    ]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn klr_commands() {
    let o = run(&[
        "--format",
        "text",
        "klr",
        "act",
        "--partition",
        "1",
        "--i",
        "1",
        "--epsilon",
        "-1",
    ]);
    assert_eq!(stdout(&o), "∅\tq^-1\n(2)\tq^0\n");
    let o = run(&[
        "--format", "text", "klr", "gdim", "--src", "d1,d1-1", "--tgt", "d1,d1-1",
    ]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = run(&["--format", "csv", "klr", "verify-relations", "--bound", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("suite,checked,failed,status\nk0,"));
}

#[test]
fn verify_hecke_passes() {
    let o = run(&["verify", "hecke", "--window", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["failed"], 0);
    assert!(v["statement"].as_str().unwrap().contains("H1 H2 H1"));
}

#[test]
fn verify_one_flavor_pattern() {
    let o = run(&[
        "--format",
        "text",
        "verify",
        "coideal",
        "--window",
        "2",
        "--flavors",
        "2,1",
        "--epsilon",
        "-1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("# coideal: "));
}

#[test]
fn output_is_deterministic() {
    let args = ["--seed", "9", "verify", "adjoint", "--cases", "40"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(
        run(&["fock", "act", "--i", "0", "--epsilon", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["klr", "gdim", "--level", "2", "--charges", "0,1"])
            .status
            .code(),
        Some(2)
    );
    let o = run(&["fock", "act", "--i", "0", "--partition", "1,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn worker_env_is_honoured() {
    let o = Command::new(env!("CARGO_BIN_EXE_qelectric"))
        .args(["--format", "csv", "verify", "beta_b"])
        .env("QELECTRIC_WORKERS", "2")
        .output()
        .unwrap();
    assert!(o.status.success());
}
