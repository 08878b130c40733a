use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use qhyper::algebra::{Algebra, Gen, NCPoly, Tag, Word};
use qhyper::expr::{parse_poly, parse_ratfunc};
use qhyper::qrat::Poly;
use qhyper::{Params, RatFunc};

fn poly(cs: Vec<i64>) -> Poly {
    Poly::from_ints(&cs)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (
        prop::collection::vec(-6i64..=6, 0..5),
        prop::collection::vec(-4i64..=4, 1..4),
        -3i64..=3,
    )
        .prop_filter_map("zero denominator", |(n, d, k)| {
            let den = poly(d);
            if den.is_zero() {
                return None;
            }
            let f = RatFunc::normalize(poly(n), den).ok()?;
            Some(f * RatFunc::q_pow(k))
        })
}

fn word(max: usize) -> impl Strategy<Value = Vec<Gen>> {
    prop::collection::vec(prop::sample::select(Gen::ALGEBRA.to_vec()), 0..=max)
}

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-7i64..=7, 1i64..=5)
        .prop_filter("q = 0 excluded", |(n, _)| *n != 0)
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn canonical_form(a in ratfunc()) {
        let d = a.denom();
        prop_assert!(d.leading().map(|l| l > &BigRational::from_integer(0.into())).unwrap_or(false));
        prop_assert!(Poly::gcd(a.numer(), d).degree() == Some(0) || a.is_zero());
        if a.is_zero() {
            prop_assert!(d.is_one());
        }
    }

    #[test]
    fn evaluation_is_a_morphism(a in ratfunc(), b in ratfunc(), q0 in small_rational()) {
        if let (Ok(x), Ok(y)) = (a.evaluate_at(&q0), b.evaluate_at(&q0)) {
            prop_assert_eq!((&a + &b).evaluate_at(&q0).unwrap(), &x + &y);
            prop_assert_eq!((&a * &b).evaluate_at(&q0).unwrap(), &x * &y);
        }
    }

    #[test]
    fn ratfunc_text_round_trip(a in ratfunc()) {
        let back = parse_ratfunc(&a.to_string()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn confluence(w in word(6), seed in any::<u64>()) {
        let alg = Algebra::new(Params::default(), Tag::Function);
        let x = NCPoly::letters(&w);
        let mut s = seed;
        let random = alg.reduce_with(&x, |k| {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (s >> 33) as usize % k
        });
        prop_assert_eq!(&random, &alg.normal_form(&x));
        prop_assert_eq!(alg.reduce_with(&x, |_| 0), random);
    }

    #[test]
    fn reduction_preserves_weight(w in word(6)) {
        for tag in [Tag::Function, Tag::Enveloping] {
            let p = Params::default();
            let p = if tag == Tag::Enveloping { p.with_hbar(p.enveloping_hbar()) } else { p };
            let nf = Algebra::new(p, tag).normal_form(&NCPoly::letters(&w));
            let wt = Word(w.clone()).weight();
            prop_assert!(nf.is_zero() || nf.weight() == Some(wt));
        }
    }

    #[test]
    fn weight_is_additive(a in word(4), b in word(4)) {
        let alg = Algebra::new(Params::default(), Tag::Function);
        let x = alg.normal_form(&NCPoly::letters(&a));
        let y = alg.normal_form(&NCPoly::letters(&b));
        let xy = alg.mul(&x, &y);
        if !xy.is_zero() {
            prop_assert_eq!(xy.weight(), Some(Word(a).weight() + Word(b).weight()));
        }
    }

    #[test]
    fn product_is_associative(a in word(3), b in word(3), c in word(3)) {
        let alg = Algebra::new(Params::default(), Tag::Function);
        let (x, y, z) = (NCPoly::letters(&a), NCPoly::letters(&b), NCPoly::letters(&c));
        prop_assert_eq!(alg.mul(&alg.mul(&x, &y), &z), alg.mul(&x, &alg.mul(&y, &z)));
    }

    #[test]
    fn poly_text_round_trip(w in word(5), a in ratfunc()) {
        let p = Params::default();
        let alg = Algebra::new(p.clone(), Tag::Function);
        let x = alg.normal_form(&NCPoly::letters(&w)).scale(&a);
        let (back, _) = parse_poly(&x.to_string(), &p).unwrap();
        prop_assert_eq!(alg.normal_form(&back), x);
    }
}

#[test]
fn normal_words_are_fixed() {
    let alg = Algebra::new(Params::default(), Tag::Function);
    for w in alg.basis(4) {
        assert!(alg.is_normal(&w));
        assert_eq!(alg.normal_form(&NCPoly::word(w.clone())), NCPoly::word(w));
    }
    assert!(!alg.is_normal(&Word::from_slice(&[Gen::V, Gen::U])));
}
