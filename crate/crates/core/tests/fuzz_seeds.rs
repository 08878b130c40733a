use std::fs;
use std::path::PathBuf;

use qhyper::expr::{parse_expression, parse_poly, parse_ratfunc};
use qhyper::{Error, Params};

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<String> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| fs::read_to_string(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out
}

#[test]
fn expression_seeds() {
    let p = Params::default();
    let mut ok = 0;
    for s in seeds("parse_expression") {
        if let Ok(parsed) = parse_expression(&s) {
            match parse_poly(&s, &p) {
                Ok((_, kind)) => {
                    assert_eq!(kind, parsed.kind, "{s}");
                    ok += 1;
                }
                Err(e) => assert_eq!(e, Error::DivisionByZero, "{s}"),
            }
        }
    }
    assert!(ok >= 5);
}

#[test]
fn ratfunc_seeds() {
    let mut ok = 0;
    for s in seeds("parse_ratfunc") {
        if let Ok(f) = parse_ratfunc(&s) {
            assert_eq!(parse_ratfunc(&f.to_string()).unwrap(), f, "{s}");
            ok += 1;
        }
    }
    assert!(ok >= 5);
}
