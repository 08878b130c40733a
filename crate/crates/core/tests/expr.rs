use qhyper::expr::*;
use qhyper::tangent::Side;
use qhyper::Error;
use qhyper::{Params, RatFunc};

#[test]
fn algebra_expression() {
    let p = Params::default();
    let (e, k) = parse_poly("q^2*u*v - v*u", &p).unwrap();
    assert_eq!(k, Kind::Algebra);
    assert_eq!(e.len(), 2);
}

#[test]
fn tangent_relation() {
    let parsed = parse_expression("(q^3+q)*u*W + v*V + (q+1/q)*w*U").unwrap();
    assert_eq!(parsed.kind, Kind::Tangent(Side::Left));
    let r = parse_expression("U'*u + V'*v").unwrap();
    assert_eq!(r.kind, Kind::Tangent(Side::Right));
}

#[test]
fn symbol_rules() {
    let e = parse_expression("u*V*W").unwrap_err();
    assert!(e.to_string().contains("two field symbols"), "{e}");
    assert!(parse_expression("U*u").is_err());
    assert!(parse_expression("u*U'").is_err());
    assert!(parse_expression("U + U'").is_err());
    assert!(parse_expression("u + U").is_err());
    assert!(parse_expression("U^2").is_err());
    assert!(parse_expression("u/v").is_err());
    assert!(parse_expression("2 u").is_err());
}

#[test]
fn error_positions() {
    match parse_expression("u + * v").unwrap_err() {
        Error::Parse { pos, .. } => assert_eq!(pos, 4),
        e => panic!("{e}"),
    }
    match parse_expression("(u").unwrap_err() {
        Error::Parse { pos, .. } => assert_eq!(pos, 2),
        e => panic!("{e}"),
    }
}

#[test]
fn ratfunc_text() {
    assert_eq!(
        parse_ratfunc("(q^2+1)/(q^3+q)").unwrap(),
        RatFunc::q_pow(-1)
    );
    assert_eq!(parse_ratfunc("q^-2").unwrap(), RatFunc::q_pow(-2));
    assert!(parse_ratfunc("c").is_err());
    assert!(parse_ratfunc("1/(q-q)").is_err());
}

#[test]
fn deep_nesting_is_an_error() {
    let s = "(".repeat(10_000) + "u" + &")".repeat(10_000);
    assert!(parse_expression(&s).is_err());
    let s = "-".repeat(10_000) + "u";
    assert!(parse_expression(&s).is_err());
}
