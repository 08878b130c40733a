use num_rational::BigRational;
use qhyper::qrat::*;
use qhyper::{Params, RatFunc};

fn rf(s: &str) -> RatFunc {
    s.parse().unwrap()
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn normalize_cancels_common_factor() {
    let r = RatFunc::normalize(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[-1, 1])).unwrap();
    assert_eq!(r, RatFunc::from_poly(Poly::from_ints(&[1, 1])));
}

#[test]
fn normalize_zero_and_content() {
    let z = RatFunc::normalize(Poly::zero(), Poly::from_ints(&[0, 0, 0, 1])).unwrap();
    assert_eq!(z, RatFunc::zero());
    assert_eq!(z.denom(), &Poly::one());
    let r = RatFunc::normalize(Poly::from_ints(&[0, 2]), Poly::from_ints(&[2])).unwrap();
    assert_eq!(r, RatFunc::q());
}

#[test]
fn normalize_rejects_zero_denominator() {
    let e = RatFunc::normalize(Poly::one(), Poly::zero()).unwrap_err();
    assert_eq!(e.to_string(), "division by zero in Q(q)");
}

#[test]
fn evaluation_examples() {
    let p = Params::default();
    assert_eq!(p.m().evaluate_at(&rat(1, 1)).unwrap(), rat(2, 1));
    assert_eq!(p.kappa().evaluate_at(&rat(1, 1)).unwrap(), rat(1, 2));
    let pole = (RatFunc::q() - RatFunc::one()).inv().unwrap();
    let err = pole.evaluate_at(&rat(1, 1)).unwrap_err();
    assert!(err.to_string().contains("(q-1)"), "{err}");
    assert!(RatFunc::q().evaluate_at(&rat(0, 1)).is_err());
}

#[test]
fn q_integers() {
    let p = Params::default();
    assert_eq!(p.q_integer(1).unwrap(), RatFunc::one());
    assert_eq!(p.q_integer(2).unwrap(), rf("q+1/q"));
    assert_eq!(
        p.q_integer(3).unwrap().evaluate_at(&rat(1, 1)).unwrap(),
        rat(3, 1)
    );
    // against the defining quotient
    let q = RatFunc::q();
    for i in 1..6 {
        let direct = (q.pow(i) - q.pow(-i)) / (q.pow(1) - q.pow(-1));
        assert_eq!(p.q_integer(i).unwrap(), direct);
    }
    assert!(p.q_integer(0).is_err());
}

#[test]
fn casimir_scalar_matches_squared_form() {
    let p = Params::default();
    let q = RatFunc::q();
    let d = q.pow(1) - q.pow(-1);
    for m in [-5i64, -3, -1, 1, 3, 7] {
        let direct = (q.pow(m) - RatFunc::from_int(2) + q.pow(-m)) / (&d * &d);
        assert_eq!(p.casimir_scalar(m), direct, "m = {m}");
    }
    for k in 0..5usize {
        let n = (2 * k + 1) as i64;
        assert_eq!(
            p.spin_eigenvalue(k).evaluate_at(&rat(1, 1)).unwrap(),
            rat(n * n, 4)
        );
    }
}

#[test]
fn alpha_examples() {
    let p = Params::default();
    assert_eq!(p.alpha_coefficient(1).unwrap(), RatFunc::one());
    let q = RatFunc::q();
    let a2 = (q.pow(-1) + q.pow(3)) * (RatFunc::one() + q.pow(2)) / (q.pow(-1) + q.pow(5));
    assert_eq!(p.alpha_coefficient(2).unwrap(), a2);
    for k in 1..6 {
        assert_eq!(
            p.alpha_coefficient(k)
                .unwrap()
                .evaluate_at(&rat(1, 1))
                .unwrap(),
            rat(k, 1)
        );
    }
    assert!(p.alpha_coefficient(0).is_err());
}

#[test]
fn printing_is_canonical() {
    assert_eq!(rf("(q^2+1)/(q^3+q)").to_string(), "1/q");
    assert_eq!(rf("q+1/q").to_string(), "(q^2+1)/q");
    assert_eq!(rf("1/(2*q)").to_string(), "1/2/q");
    assert_eq!(rf("1/(2*q)"), rf("1/2/q"));
    assert_eq!(rf("-3/2").to_string(), "-3/2");
}

#[test]
fn params_reject_cone() {
    assert!(Params::new(RatFunc::zero(), RatFunc::from_int(4), RatFunc::zero()).is_err());
    assert!(Params::new(RatFunc::one(), RatFunc::zero(), RatFunc::zero()).is_err());
    assert!(Params::default().specialized(&rat(-1, 1)).is_err());
    assert!(Params::default().specialized(&rat(3, 2)).is_ok());
}
