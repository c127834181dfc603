use std::process::{Command, Output};

fn schurcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurcalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn pieri_coefficient() {
    let o = schurcalc(&["lr", "--outer", "2,1", "--mu", "1", "--nu", "1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
    let o = schurcalc(&["lr", "--outer", "2,1", "--mu", "1", "--nu", "1,1", "--characters"]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn size_mismatch_is_zero_for_lr() {
    let o = schurcalc(&["lr", "--outer", "3", "--mu", "1", "--nu", "1"]);
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn schur_functor_of_a_killed_object_is_empty() {
    let o = schurcalc(&["schur", "--lambda", "2,2", "--object", "0:1,1:1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "\n");
    let o = schurcalc(&["--json", "schur", "--lambda", "2,2", "--object", "0:1,1:1"]);
    assert_eq!(stdout(&o), "{}\n");
}

#[test]
fn negative_degrees_parse() {
    let o = schurcalc(&["schur", "--lambda", "1", "--object", "-1:1,0:2"]);
    assert_eq!(stdout(&o), "-1:1,0:2\n");
}

#[test]
fn usage_errors_exit_one_with_one_line() {
    for args in [
        vec!["transpose", "--lambda", "2,3"],
        vec!["transpose", "--lambda", ""],
        vec!["frobnicate"],
        vec!["lr", "--mu", "1", "--nu", "1", "--bogus"],
        vec!["kron", "--lambda", "3", "--mu", "2", "--nu", "1"],
        vec!["schur", "--lambda", "2", "--object", "0:1,0:2"],
        vec!["verify", "--suite", "nope"],
        vec!["classify", "--members", "1;2", "--max-size", "2"],
    ] {
        let o = schurcalc(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        let err = stderr(&o);
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn every_verb_emits_valid_json() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("ideal.json");
    std::fs::write(&file, r#"{"max_size": 4, "members": [[2,1],[3,1],[2,2],[2,1,1]]}"#).unwrap();
    let file = file.to_str().unwrap();
    let invocations: Vec<Vec<&str>> = vec![
        vec!["transpose", "--lambda", "0"],
        vec!["dim", "--lambda", "3,2"],
        vec!["dim", "--object", "0:1,1:1"],
        vec!["char", "--n", "4"],
        vec!["char", "--lambda", "2,1", "--rho", "3"],
        vec!["lr", "--mu", "2,1", "--nu", "2,1"],
        vec!["lr", "--outer", "3,2,1", "--mu", "2,1", "--nu", "2,1"],
        vec!["kron", "--lambda", "3", "--mu", "2,1", "--nu", "2,1"],
        vec!["schur", "--lambda", "3", "--object", "1:2"],
        vec!["hook", "--lambda", "2,2", "--p", "1", "--q", "1"],
        vec!["hook", "--object", "0:3"],
        vec!["rect-lr", "--p", "2", "--q", "2", "--r", "1", "--s", "1"],
        vec!["primes", "--n", "2"],
        vec!["classify", "--file", file],
        vec!["classify", "--members", "", "--max-size", "3"],
        vec!["verify", "--suite", "okada"],
    ];
    for args in invocations {
        let mut full = vec!["--json"];
        full.extend(&args);
        let o = schurcalc(&full);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        let parsed: Result<serde_json::Value, _> = serde_json::from_str(&stdout(&o));
        assert!(parsed.is_ok(), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn documented_json_shapes() {
    let o = schurcalc(&["--json", "char", "--n", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let row = v["rows"].as_array().unwrap().iter().find(|r| r["lambda"] == serde_json::json!([2, 1])).unwrap();
    assert_eq!(row["values"].to_string(), r#"{"1,1,1":2,"2,1":0,"3":-1}"#);

    let o = schurcalc(&["--json", "classify", "--generators", "2,1", "--max-size", "4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"], "not_prime");
    assert_eq!(v["witness"], serde_json::json!({"mu": [2], "nu": [1, 1]}));

    let o = schurcalc(&["--json", "classify", "--generators", "1,1", "--max-size", "4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["result"].as_str(), v["p"].as_u64(), v["q"].as_u64()), (Some("prime"), Some(1), Some(2)));

    let o = schurcalc(&["verify", "--suite", "hook"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let report = &v[0];
    assert_eq!(report["suite"], "hook");
    assert_eq!(report["passed"], true);
    assert!(report["checked"].as_u64().unwrap() > 0);
    assert_eq!(report["counterexamples"], serde_json::json!([]));
}

#[test]
fn verify_output_is_deterministic_across_thread_counts() {
    let run = |threads: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_schurcalc"))
            .args(["verify", "--suite", "all", "--max-n", "5"])
            .env("SCHURCALC_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        o.stdout
    };
    let single = run("1");
    assert_eq!(single, run("4"));
    assert_eq!(single, run("4"));
}

#[test]
fn bad_thread_count_is_a_usage_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_schurcalc"))
        .args(["verify", "--suite", "hook"])
        .env("SCHURCALC_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_writes_reports_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let o = schurcalc(&["verify", "--suite", "balmer", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS balmer"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v[0]["suite"], "balmer");
}
