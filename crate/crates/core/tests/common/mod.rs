//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use qhyper::algebra::{Gen, NCPoly};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Commutative polynomials in u, v, w over Q modulo `4uw + v^2 = c`, kept with
/// no monomial containing both u and w.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Classical {
    pub terms: BTreeMap<(u32, u32, u32), BigRational>,
}

impl Classical {
    pub fn monomial(i: u32, j: u32, k: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((i, j, k), BigRational::one());
        Classical { terms }
    }

    fn add(&mut self, e: (u32, u32, u32), c: BigRational) {
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Replace `uw` by `(c - v^2)/4` until no monomial holds both.
    pub fn reduce(&self, c: &BigRational) -> Classical {
        let mut todo: Vec<((u32, u32, u32), BigRational)> =
            self.terms.iter().map(|(e, x)| (*e, x.clone())).collect();
        let mut out = Classical::default();
        while let Some(((i, j, k), x)) = todo.pop() {
            if i > 0 && k > 0 {
                let quarter = &x / BigRational::from_integer(4.into());
                todo.push(((i - 1, j, k - 1), &quarter * c));
                todo.push(((i - 1, j + 2, k - 1), -quarter));
            } else {
                out.add((i, j, k), x);
            }
        }
        out
    }

    /// Library normal form at q = 1 to the oracle representation.
    pub fn from_ncpoly(p: &NCPoly) -> Classical {
        let mut out = Classical::default();
        for (w, c) in p.terms() {
            let mut e = (0u32, 0u32, 0u32);
            for g in w.letters() {
                match g {
                    Gen::U => e.0 += 1,
                    Gen::V => e.1 += 1,
                    Gen::W => e.2 += 1,
                    _ => panic!("symbol in an algebra element"),
                }
            }
            out.add(e, c.as_constant().expect("q specialized"));
        }
        out
    }
}

/// `[s, x]` in sl(2) with `[u,v] = -2u`, `[u,w] = v`, `[v,w] = -2w`.
fn classical_bracket(s: usize, x: usize) -> Vec<(BigRational, usize)> {
    match (s, x) {
        (0, 1) => vec![(rat(-2, 1), 0)],
        (0, 2) => vec![(rat(1, 1), 1)],
        (1, 0) => vec![(rat(2, 1), 0)],
        (1, 2) => vec![(rat(-2, 1), 2)],
        (2, 0) => vec![(rat(-1, 1), 1)],
        (2, 1) => vec![(rat(2, 1), 2)],
        _ => vec![],
    }
}

/// The Leibniz extension of `ad s` applied to `u^i v^j w^k`, reduced.
pub fn leibniz(s: usize, e: (u32, u32, u32), c: &BigRational) -> Classical {
    let mut out = Classical::default();
    let exps = [e.0, e.1, e.2];
    for x in 0..3 {
        if exps[x] == 0 {
            continue;
        }
        for (coef, y) in classical_bracket(s, x) {
            let mut ne = exps;
            ne[x] -= 1;
            ne[y] += 1;
            out.add(
                (ne[0], ne[1], ne[2]),
                coef * BigRational::from_integer(exps[x].into()),
            );
        }
    }
    out.reduce(c)
}

/// Words over u, v, w avoiding the patterns vu, wv, wu, uw and u v^j w.
pub fn irreducible_count(n: usize) -> usize {
    fn ok(w: &[u8]) -> bool {
        for i in 0..w.len().saturating_sub(1) {
            match (w[i], w[i + 1]) {
                (1, 0) | (2, 1) | (2, 0) | (0, 2) => return false,
                (0, 1) => {
                    let mut j = i + 1;
                    while j < w.len() && w[j] == 1 {
                        j += 1;
                    }
                    if j < w.len() && w[j] == 2 {
                        return false;
                    }
                }
                _ => {}
            }
        }
        true
    }
    let mut words: Vec<Vec<u8>> = vec![vec![]];
    let mut total = 1;
    for _ in 0..n {
        words = words
            .into_iter()
            .flat_map(|w| (0..3u8).map(move |g| [w.clone(), vec![g]].concat()))
            .filter(|w| ok(w))
            .collect();
        total += words.len();
    }
    total
}
