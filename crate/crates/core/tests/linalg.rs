use qhyper::linalg::*;
use qhyper::RatFunc;

fn r(n: i64) -> RatFunc {
    RatFunc::from_int(n)
}

#[test]
fn rank_and_nullspace() {
    let q = RatFunc::q();
    let m = vec![vec![r(1), q.clone(), r(0)], vec![q.clone(), &q * &q, r(0)]];
    assert_eq!(rank(&m), 1);
    let ns = nullspace(&m, 3);
    assert_eq!(ns.len(), 2);
    for v in &ns {
        for row in &m {
            let s = row
                .iter()
                .zip(v)
                .fold(RatFunc::zero(), |acc, (a, b)| acc + a * b);
            assert!(s.is_zero());
        }
    }
}

#[test]
fn solve_and_invert() {
    let q = RatFunc::q();
    let m = vec![vec![q.clone(), r(1)], vec![r(1), q.clone()]];
    let inv = invert(&m).unwrap();
    let x = solve(&m, &[r(1), r(0)]).unwrap();
    assert_eq!(x[0], inv[0][0]);
    assert_eq!(x[1], inv[1][0]);
    assert_eq!(&(&q * &x[0]) + &x[1], r(1));
    assert!(solve(&[vec![r(0)]], &[r(1)]).is_err());
    assert!(invert(&[vec![r(1), r(1)], vec![r(1), r(1)]]).is_err());
}
