use qhyper::report::*;
use qhyper::Params;

#[test]
fn json_shape() {
    let r = Report {
        suite: "field".into(),
        params: ParamsEcho::new(&Params::default(), 4),
        checks: vec![Check::new("a", "tangent relation", Status::Pass, "ok")],
    };
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["checks"].as_array().unwrap().len(), 1);
    assert_eq!(v["checks"][0]["ref"], "tangent relation");
    assert_eq!(v["params"]["q"], "symbolic");
    assert_eq!(v["params"]["degree"], 4);
    assert!(r.to_text().contains("1 checks"));
}
