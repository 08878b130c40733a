use qhyper::algebra::{NCPoly, Word};
use qhyper::geometry::*;
use qhyper::tangent::function_algebra;
use qhyper::Params;

#[test]
fn metric_normalized() {
    let t = metric_solve(function_algebra(&Params::default())).unwrap();
    assert_eq!(t.entries[0][0], NCPoly::word(Word::monomial(2, 0, 0)));
    assert!(t.check_gamma().is_ok());
}

#[test]
fn connection_alpha() {
    let t = connection_derive(function_algebra(&Params::default())).unwrap();
    assert!(t.check_alpha().is_ok(), "{}", t.alpha);
}
