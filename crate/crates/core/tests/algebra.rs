use qhyper::algebra::*;
use qhyper::{Params, RatFunc};

fn fun() -> Algebra {
    Algebra::new(Params::default(), Tag::Function)
}

#[test]
fn word_printing() {
    assert_eq!(Word::monomial(2, 1, 0).to_string(), "u^2*v");
    assert_eq!(Word::empty().to_string(), "1");
    assert_eq!(Word(vec![Gen::V, Gen::U, Gen::SymW]).to_string(), "v*u*W");
}

#[test]
fn vu_reorders() {
    let a = Algebra::new(Params::default(), Tag::Enveloping);
    let r = a.normal_form(&NCPoly::letters(&[Gen::V, Gen::U]));
    assert_eq!(r, NCPoly::term(RatFunc::q_pow(2), Word::monomial(1, 1, 0)));
}

#[test]
fn redexes_found() {
    let a = fun();
    let w = Word(vec![Gen::U, Gen::V, Gen::V, Gen::W, Gen::U]);
    let rs = a.redexes(&w);
    assert!(rs.contains(&Redex { start: 0, len: 4 }));
    assert!(rs.contains(&Redex { start: 3, len: 2 }));
}

#[test]
fn symbol_blocks_rewriting() {
    let a = fun();
    let w = Word(vec![Gen::V, Gen::SymU, Gen::U]);
    assert!(a.is_normal(&w));
}

#[test]
fn mixed_weight() {
    let p = &NCPoly::gen(Gen::U) + &NCPoly::gen(Gen::W);
    assert_eq!(p.weight(), None);
    assert_eq!(NCPoly::word(Word::monomial(0, 3, 0)).weight(), Some(0));
}

#[test]
fn counts() {
    assert_eq!(basis_enumerate(1, Tag::Function).len(), 4);
    assert_eq!(basis_enumerate(2, Tag::Function).len(), 9);
    assert_eq!(basis_enumerate(2, Tag::Enveloping).len(), 10);
    assert_eq!(all_words(3).len(), 27);
}
