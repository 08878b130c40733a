use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhyper"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = run(&a);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn normal_form() {
    let o = run(&["nf", "v*u"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "q^2*u*v");
    assert_eq!(json(&["nf", "v*u"])["result"], "q^2*u*v");
}

#[test]
fn relation_class_vanishes() {
    let o = run(&["nf", "(q+1/q)*w*U + v*V + (q^3+q)*u*W"]);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn actions() {
    assert_eq!(
        json(&["act", "X", "v"])["result"],
        json(&["nf", "-(q+1/q)*u"])["result"]
    );
    assert_eq!(json(&["act", "y", "w"])["result"], "0");
    assert_eq!(json(&["act", "DU", "1"])["result"], "0");
    assert_eq!(json(&["act", "DU", "u*v", "--q", "1"])["result"], "-2*u^2");
}

#[test]
fn decomposition() {
    let v = json(&["decompose", "u*v"]);
    let comps = v["components"].as_object().unwrap();
    assert_eq!(comps.keys().collect::<Vec<_>>(), vec!["2"]);
}

#[test]
fn pairing_and_connection() {
    assert_eq!(json(&["pair", "U", "U'"])["result"], "u^2");
    let o = run(&["connect", "U", "U"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("U"));
    assert_eq!(run(&["connect", "U", "u*U"]).status.code(), Some(2));
}

#[test]
fn verify_reports() {
    let v = json(&["verify", "bracket", "--q", "2"]);
    assert_eq!(v["suite"], "bracket");
    assert_eq!(v["params"]["q"], "2");
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] != "FAIL"));
    let o = run(&["verify", "field"]);
    assert!(stdout(&o).contains("summary:"));
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn tables_summary() {
    let o = run(&["tables"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("agree: metric 8/9, connection 7/13, projections 2/3"));
    let v = json(&["tables"]);
    assert_eq!(v["metric"].as_array().unwrap().len(), 9);
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("qhyper-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("nf.txt");
    let o = run(&["nf", "v*u", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap().trim(), "q^2*u*v");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["nf", "u*V*W"],
        vec!["nf", "u +"],
        vec!["verify", "metric", "--c", "0"],
        vec!["verify", "nope"],
        vec!["nf", "u", "--q", "abc"],
        vec!["act", "Z", "u"],
        vec!["pair", "U", "U"],
        vec!["nf", "1/(q-q)"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}
