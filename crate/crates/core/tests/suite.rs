use num_bigint::BigInt;
use num_rational::BigRational;
use qhyper::report::Status;
use qhyper::suite::*;
use qhyper::Error;
use qhyper::{Params, RatFunc};

#[test]
fn unknown_suite() {
    let e = run_suite(&["nope".into()], &Params::default(), &Bounds::default()).unwrap_err();
    assert!(e.is_usage());
}

#[test]
fn cone_rejected() {
    let p = Params {
        c: RatFunc::zero(),
        ..Params::default()
    };
    let e = run_suite(&["metric".into()], &p, &Bounds::default()).unwrap_err();
    assert!(matches!(e, Error::Param(_)));
}

#[test]
fn field_suite_passes() {
    let r = run_suite(&["field".into()], &Params::default(), &Bounds::default()).unwrap();
    assert!(r.passed(), "{}", r.to_text());
}

fn names(ns: &[&str]) -> Vec<String> {
    ns.iter().map(|s| s.to_string()).collect()
}

#[test]
fn all_suites_pass() {
    let r = run_suite(&names(&["all"]), &Params::default(), &Bounds::default()).unwrap();
    assert!(r.checks.len() >= 40);
    assert!(r.passed(), "{}", r.to_text());
    assert_eq!(r.count(Status::Fail), 0);
    // the suspected misprints are reported, not hidden
    assert!(r.count(Status::TypoSuspect) > 0);
    assert_eq!(r.suite, "all");
    assert_eq!(SUITES.len(), 10);
}

#[test]
fn duplicates_are_collapsed() {
    let p = Params::default();
    let once = run_suite(&names(&["field"]), &p, &Bounds::default()).unwrap();
    let twice = run_suite(&names(&["field", "field"]), &p, &Bounds::default()).unwrap();
    assert_eq!(once.checks.len(), twice.checks.len());
}

#[test]
fn bracket_at_a_rational_point() {
    let p = Params::default().specialized(&rat(2, 1)).unwrap();
    let r = run_suite(&names(&["bracket"]), &p, &Bounds::default()).unwrap();
    assert!(r.passed(), "{}", r.to_text());
    assert_eq!(r.params.q, "2");
}

#[test]
fn reports_are_deterministic() {
    let p = Params::default();
    let ns = names(&["field", "bracket", "metric"]);
    let a = run_suite(&ns, &p, &Bounds::default()).unwrap();
    let b = run_suite(&ns, &p, &Bounds::default()).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.to_text(), b.to_text());
}

#[test]
fn text_and_json_agree() {
    let r = run_suite(&names(&["metric"]), &Params::default(), &Bounds::default()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), r.checks.len());
    for st in [Status::Pass, Status::Fail, Status::TypoSuspect] {
        let n = checks.iter().filter(|c| c["status"] == st.as_str()).count();
        assert_eq!(n, r.count(st));
    }
    for c in checks {
        for key in ["name", "ref", "status", "detail"] {
            assert!(c.get(key).is_some(), "{key}");
        }
    }
    let text = r.to_text();
    for c in &r.checks {
        assert!(text.contains(&c.name));
    }
}

#[test]
fn degree_bound_is_echoed() {
    let r = run_suite(
        &names(&["field"]),
        &Params::default(),
        &Bounds { degree: Some(2) },
    )
    .unwrap();
    assert_eq!(r.params.degree, 2);
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
