use qhyper::algebra::{Gen, NCPoly, Word};
use qhyper::tangent::*;
use qhyper::Params;

fn ctx(n: usize) -> ExtensionContext {
    ExtensionContext::new(function_algebra(&Params::default()), n).unwrap()
}

#[test]
fn degree_one_table() {
    let p = Params::default();
    let m = p.m();
    assert_eq!(
        ad_degree_one(&p, Gen::SymU, Gen::W),
        NCPoly::term(&p.q2().inv().unwrap() * &m, Word(vec![Gen::V]))
    );
    assert_eq!(
        ad_degree_one(&p, Gen::SymV, Gen::U),
        NCPoly::term(m, Word(vec![Gen::U]))
    );
    assert!(ad_degree_one(&p, Gen::SymW, Gen::W).is_zero());
}

#[test]
fn extension_basics() {
    let e = ctx(2);
    let p = e.params().clone();
    let v = NCPoly::gen(Gen::V);
    assert_eq!(
        e.extend_apply(Gen::SymU, &v).unwrap(),
        NCPoly::term(-(p.qp(2) * p.m()), Word(vec![Gen::U]))
    );
    assert!(e.extend_apply(Gen::SymU, &NCPoly::one()).unwrap().is_zero());
    assert!(e
        .extend_apply(Gen::SymU, &NCPoly::word(Word::monomial(3, 0, 0)))
        .is_err());
}

#[test]
fn k_triple_reduces_to_zero() {
    let alg = function_algebra(&Params::default());
    let m = TangentModule::new(alg, Side::Left).unwrap();
    assert!(m
        .p_proj(&k_triple(m.algebra().params(), Side::Left))
        .is_zero());
}

#[test]
fn printing() {
    let alg = function_algebra(&Params::default());
    let t = NCPoly::letters(&[Gen::U, Gen::SymU]);
    assert_eq!(format_tangent(&t, Side::Left), "(u)*U");
    let r = NCPoly::letters(&[Gen::SymV]);
    assert_eq!(format_tangent(&r, Side::Right), "V'");
    drop(alg);
}
