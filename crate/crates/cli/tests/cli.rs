use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plancherel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn avg_examples() {
    assert_eq!(
        stdout(&["avg", "--obs", "fmu:1", "--theta", "1", "--n", "0..6", "--format", "csv"]),
        "n,average\n0,0\n1,1\n2,2\n3,3\n4,4\n5,5\n6,6\n"
    );
    assert_eq!(
        stdout(&[
            "avg",
            "--obs",
            "content:p(2)",
            "--theta",
            "1",
            "--n",
            "2",
            "--format",
            "csv"
        ]),
        "n,average\n2,1\n"
    );
    assert_eq!(
        stdout(&["avg", "--obs", "pstar:1", "--theta", "1", "--n", "5"]),
        "{\"observable\":\"pstar:1\",\"theta\":\"1/1\",\"source\":\"growth\",\"averages\":[{\"n\":5,\"value\":\"5/1\"}]}\n"
    );
}

#[test]
fn avg_sources_agree() {
    let args = |src: &'static str| {
        vec![
            "avg",
            "--obs",
            "fmujack:2,1",
            "--theta",
            "3/5",
            "--n",
            "0..5",
            "--format",
            "csv",
            "--source",
            src,
        ]
    };
    let growth = stdout(&args("growth"));
    assert_eq!(growth, stdout(&args("jack-direct")));
    // θ^3 C(n, 3) dim′_θ(2,1) with dim′ = 250/33 at θ = 3/5.
    assert_eq!(
        growth,
        "n,average\n0,0\n1,0\n2,0\n3,18/11\n4,72/11\n5,180/11\n"
    );
}

#[test]
fn verify_examples() {
    let out = stdout(&["verify", "stanley"]);
    assert!(out.lines().all(|l| l.starts_with("PASS")));
    assert!(out.ends_with("PASS stanley: 108/108 cases passed\n"));
    assert!(
        stdout(&["verify", "growth-vs-jack", "--theta", "2", "--n-max", "6"])
            .contains("7/7 cases passed")
    );
    assert!(
        stdout(&["verify", "del-identity", "--theta", "1", "--n-max", "5"])
            .contains("PASS del-identity")
    );
}

#[test]
fn verify_json_and_emit_table() {
    let dir = std::env::temp_dir().join(format!("plancherel-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let table = dir.join("table.csv");
    let out = stdout(&[
        "verify",
        "polynomiality",
        "--obs",
        "fmu:2",
        "--theta",
        "1",
        "--format",
        "json",
        "--emit-table",
        table.to_str().unwrap(),
    ]);
    assert!(out.starts_with("{\"suite\":\"polynomiality\",\"passed\":true"));
    let csv = std::fs::read_to_string(&table).unwrap();
    assert!(csv.starts_with("observable,theta,n,average\n\"fmu:2\",1,0,0\n"));
    assert!(csv.contains("\"fmu:2\",1,6,15\n"));
    assert_eq!(
        code(&["verify", "stanley", "--emit-table", table.to_str().unwrap()]),
        2
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn sample_examples() {
    let out = stdout(&[
        "sample",
        "--n",
        "1",
        "--trajectories",
        "5",
        "--seed",
        "7",
        "--format",
        "csv",
    ]);
    assert_eq!(
        out,
        "trajectory,final\n0,\"1\"\n1,\"1\"\n2,\"1\"\n3,\"1\"\n4,\"1\"\n\npartition,count,frequency,exact\n\"1\",5,1,1\n"
    );
    let out = stdout(&["sample", "--n", "0"]);
    assert!(out.contains("\"finals\":[\"\"]"));
    let a = stdout(&[
        "sample",
        "--n",
        "6",
        "--trajectories",
        "50",
        "--seed",
        "3",
        "--theta",
        "2",
        "--paths",
    ]);
    let b = stdout(&[
        "sample",
        "--n",
        "6",
        "--trajectories",
        "50",
        "--seed",
        "3",
        "--theta",
        "2",
        "--paths",
    ]);
    assert_eq!(a, b);
    assert!(a.contains("\"paths\":[[\"\",\"1\","));
    assert_eq!(code(&["sample", "--n", "2", "--trajectories", "0"]), 2);
}

#[test]
fn show_examples() {
    assert_eq!(
        stdout(&["show", "coords", "--lambda", "3,3,1", "--theta", "1/2"]),
        "{\"lambda\":\"3,3,1\",\"theta\":\"1/2\",\"x\":[\"3/1\",\"0/1\",\"-3/2\"],\"y\":[\"2/1\",\"-1/2\"]}\n"
    );
    assert_eq!(
        stdout(&["show", "kernel", "--lambda", "", "--theta", "1", "--format", "csv"]),
        "partition,probability\n\"1\",1\n"
    );
    assert_eq!(
        stdout(&["show", "measure", "--n", "2", "--theta", "3"]),
        "{\"n\":2,\"theta\":\"3/1\",\"weights\":[[\"2\",\"3/4\"],[\"1,1\",\"1/4\"]]}\n"
    );
    assert_eq!(
        stdout(&[
            "show",
            "measure",
            "--n",
            "3",
            "--source",
            "plancherel",
            "--format",
            "csv"
        ]),
        "partition,weight\n\"3\",1/6\n\"2,1\",2/3\n\"1,1,1\",1/6\n"
    );
    let jack = stdout(&[
        "show", "jack", "--lambda", "2", "--theta", "2", "--format", "csv",
    ]);
    assert_eq!(jack, "monomial,p,q\n\"2\",1,3\n\"1,1\",4/3,4\n");
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("plancherel-out-{}.json", std::process::id()));
    let out = stdout(&[
        "show",
        "measure",
        "--n",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        written,
        "{\"n\":1,\"theta\":\"1/1\",\"weights\":[[\"1\",\"1/1\"]]}\n"
    );
    std::fs::remove_file(path).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["avg", "--obs", "foo:3", "--n", "2"]), 2);
    assert_eq!(
        code(&["avg", "--obs", "pstar:1", "--n", "2", "--theta", "0.5"]),
        2
    );
    assert_eq!(
        code(&["avg", "--obs", "pstar:1", "--n", "2", "--theta", "-1"]),
        2
    );
    assert_eq!(code(&["avg", "--obs", "pstar:1", "--n", "3..1"]), 2);
    assert_eq!(code(&["verify", "bogus"]), 2);
    assert_eq!(code(&["show", "coords", "--lambda", "1,3"]), 2);
    assert_eq!(code(&["show", "measure", "--n", "40"]), 3);
    assert_eq!(code(&["avg", "--obs", "pstar:1", "--n", "30"]), 3);
    assert_eq!(
        code(&[
            "show",
            "measure",
            "--n",
            "3",
            "--theta",
            "2",
            "--source",
            "plancherel"
        ]),
        2
    );
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn byte_identical_reruns() {
    let args = [
        "sample",
        "--n",
        "5",
        "--trajectories",
        "200",
        "--seed",
        "11",
        "--theta",
        "1/3",
    ];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["verify", "kerov-identities", "--n-max", "4", "--seed", "5"];
    assert_eq!(stdout(&args), stdout(&args));
}
