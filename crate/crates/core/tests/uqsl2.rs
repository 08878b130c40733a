use qhyper::algebra::{Algebra, Gen, NCPoly, Tag, Word};
use qhyper::uqsl2::*;
use qhyper::{Params, RatFunc};

#[test]
fn table_values() {
    let p = Params::default();
    assert_eq!(
        act_letter(&p, HopfGen::X, Gen::V),
        NCPoly::term(-p.q2(), Word(vec![Gen::U]))
    );
    assert!(act_letter(&p, HopfGen::Y, Gen::W).is_zero());
    assert_eq!(
        act_letter(&p, HopfGen::Y, Gen::SymU),
        NCPoly::term(RatFunc::from_int(-1), Word(vec![Gen::SymV]))
    );
}

#[test]
fn x_on_uv() {
    let p = Params::default();
    let a = Algebra::new(p.clone(), Tag::Function);
    let r = a.act(HopfGen::X, &NCPoly::letters(&[Gen::U, Gen::V]));
    let expect = NCPoly::term(-(p.qp(-1) + p.qp(-3)), Word::monomial(2, 0, 0));
    assert_eq!(r, expect);
}

#[test]
fn casimir_on_generators() {
    let p = Params::default();
    let t = TensorSpace::new(p.clone());
    let u = NCPoly::gen(Gen::U);
    assert_eq!(casimir_apply(&t, &u), u.scale(&p.spin_eigenvalue(1)));
    let one = NCPoly::one();
    assert_eq!(casimir_apply(&t, &one), one.scale(&p.spin_eigenvalue(0)));
}

#[test]
fn decompose_small() {
    let p = Params::default();
    let a = Algebra::new(p.clone(), Tag::Function);
    let u = NCPoly::gen(Gen::U);
    let d = spin_decompose(&a, &u);
    assert_eq!(d.len(), 1);
    assert_eq!(d[&1], u);
    let uv = NCPoly::letters(&[Gen::U, Gen::V]);
    let d = spin_decompose(&a, &uv);
    assert_eq!(d.keys().copied().collect::<Vec<_>>(), vec![2]);
    let t = TensorSpace::new(p.clone());
    let cq = qhyper::algebra::braided_casimir(&p);
    let d = spin_decompose(&t, &cq);
    assert_eq!(d.keys().copied().collect::<Vec<_>>(), vec![0]);
}

#[test]
fn antipode_axiom_operators() {
    let p = Params::default();
    let t = TensorSpace::new(p);
    let x = NCPoly::letters(&[Gen::V, Gen::W]);
    for g in [HopfGen::X, HopfGen::Y, HopfGen::H] {
        for left in [true, false] {
            let r = apply_op(&t, &antipode_convolution(g, left), &x);
            assert_eq!(r, x.scale(&counit(g)));
        }
    }
}
