//! Dense Gaussian elimination over Q(q).

use std::collections::BTreeMap;

use crate::algebra::{NCPoly, Word};
use crate::error::{Error, Result};
use crate::qrat::RatFunc;

/// Cost estimate used to pick small pivots.
fn weight(x: &RatFunc) -> usize {
    x.numer().degree().unwrap_or(0) + x.denom().degree().unwrap_or(0)
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<RatFunc>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| weight(&m[i][c]))
        else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        if !inv.is_one() {
            for x in m[r][c..].iter_mut() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<RatFunc>]) -> usize {
    let mut a = m.to_vec();
    rref(&mut a).len()
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace(m: &[Vec<RatFunc>], cols: usize) -> Vec<Vec<RatFunc>> {
    let mut a: Vec<Vec<RatFunc>> = m
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![RatFunc::zero(); cols];
            v[f] = RatFunc::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&a[row][f];
            }
            v
        })
        .collect()
}

/// One solution of `m x = b`, or an error when the system is inconsistent.
pub fn solve(m: &[Vec<RatFunc>], b: &[RatFunc]) -> Result<Vec<RatFunc>> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<RatFunc>> = m
        .iter()
        .zip(b)
        .map(|(r, x)| {
            r.iter()
                .cloned()
                .chain(std::iter::once(x.clone()))
                .collect()
        })
        .collect();
    let pivots = rref(&mut a);
    if pivots.contains(&cols) {
        return Err(Error::Math("linear system is inconsistent".into()));
    }
    let mut x = vec![RatFunc::zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = a[row][cols].clone();
    }
    Ok(x)
}

/// Inverse of a square matrix.
pub fn invert(m: &[Vec<RatFunc>]) -> Result<Vec<Vec<RatFunc>>> {
    let n = m.len();
    let mut a: Vec<Vec<RatFunc>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| {
                if i == j {
                    RatFunc::one()
                } else {
                    RatFunc::zero()
                }
            }));
            row
        })
        .collect();
    let pivots = rref(&mut a);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Math("matrix is singular".into()));
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Coordinates of polynomials against the union of their words.
pub fn coordinate_matrix(vs: &[&NCPoly]) -> (Vec<Word>, Vec<Vec<RatFunc>>) {
    let mut index: BTreeMap<Word, usize> = BTreeMap::new();
    for v in vs {
        for (w, _) in v.terms() {
            let n = index.len();
            index.entry(w.clone()).or_insert(n);
        }
    }
    let words: Vec<Word> = {
        let mut ws: Vec<(Word, usize)> = index.iter().map(|(w, &i)| (w.clone(), i)).collect();
        ws.sort_by_key(|x| x.1);
        ws.into_iter().map(|x| x.0).collect()
    };
    let rows = vs
        .iter()
        .map(|v| {
            let mut row = vec![RatFunc::zero(); words.len()];
            for (w, c) in v.terms() {
                row[index[w]] = c.clone();
            }
            row
        })
        .collect();
    (words, rows)
}

/// Dimension of the span of a list of polynomials.
pub fn span_rank(vs: &[NCPoly]) -> usize {
    let refs: Vec<&NCPoly> = vs.iter().collect();
    rank(&coordinate_matrix(&refs).1)
}

/// Coefficients expressing `target` in the span of `vs`, if it lies there.
pub fn express_in_span(target: &NCPoly, vs: &[NCPoly]) -> Option<Vec<RatFunc>> {
    let mut refs: Vec<&NCPoly> = vs.iter().collect();
    refs.push(target);
    let (words, rows) = coordinate_matrix(&refs);
    // columns are the vectors; equations are indexed by words
    let m: Vec<Vec<RatFunc>> = (0..words.len())
        .map(|i| (0..vs.len()).map(|j| rows[j][i].clone()).collect())
        .collect();
    let b: Vec<RatFunc> = (0..words.len())
        .map(|i| rows[vs.len()][i].clone())
        .collect();
    if words.is_empty() {
        return Some(vec![RatFunc::zero(); vs.len()]);
    }
    solve(&m, &b).ok()
}

pub fn in_span(target: &NCPoly, vs: &[NCPoly]) -> bool {
    target.is_zero() || express_in_span(target, vs).is_some()
}
