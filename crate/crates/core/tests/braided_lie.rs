use qhyper::algebra::{Gen, NCPoly, Word};
use qhyper::braided_lie::*;
use qhyper::{Params, RatFunc};

#[test]
fn table_examples() {
    let p = Params::default();
    let m = p.m();
    assert_eq!(
        bracket_gens(&p, Gen::U, Gen::V),
        NCPoly::term(-(p.qp(2) * &m), Word(vec![Gen::U]))
    );
    assert!(bracket_gens(&p, Gen::U, Gen::U).is_zero());
    assert_eq!(
        bracket_gens(&p, Gen::V, Gen::V),
        NCPoly::term((RatFunc::one() - p.qp(2)) * &m, Word(vec![Gen::V]))
    );
}

#[test]
fn jacobi_first_relation_at_u() {
    let p = Params::default();
    let (l, r) = &jacobi_sides(&p, Gen::U)[0];
    assert!(l.is_zero());
    assert!(r.is_zero());
}
