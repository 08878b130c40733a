//! The braided Lie bracket on V, the invariant subspaces I_+ and I_-, and the
//! braided Jacobi identity.

use crate::algebra::{Gen, NCPoly, Word};
use crate::linalg;
use crate::qrat::{Params, RatFunc};
use crate::report::Outcome;
use crate::uqsl2::{free_act, HopfGen, TensorSpace, UqModule};

/// `[a, b]_q` for generators `a`, `b`, as an element of V.
pub fn bracket_gens(p: &Params, a: Gen, b: Gen) -> NCPoly {
    let m = p.m();
    let inv2 = p.q2().inv().unwrap();
    let (c, g) = match (a.flatten(), b.flatten()) {
        (Gen::U, Gen::U) | (Gen::W, Gen::W) => return NCPoly::zero(),
        (Gen::U, Gen::V) => (-(p.qp(2) * &m), Gen::U),
        (Gen::U, Gen::W) => (&inv2 * &m, Gen::V),
        (Gen::V, Gen::U) => (m, Gen::U),
        (Gen::V, Gen::V) => ((RatFunc::one() - p.qp(2)) * &m, Gen::V),
        (Gen::V, Gen::W) => (-(p.qp(2) * &m), Gen::W),
        (Gen::W, Gen::U) => (-(&inv2 * &m), Gen::V),
        (Gen::W, Gen::V) => (m, Gen::W),
        _ => unreachable!(),
    };
    NCPoly::term(c, Word(vec![g]))
}

/// Bilinear extension to rank-2 tensors; other words map to zero.
pub fn bracket(p: &Params, t: &NCPoly) -> NCPoly {
    t.map_words(|w| match w.letters() {
        [a, b] => bracket_gens(p, *a, *b),
        _ => NCPoly::zero(),
    })
}

/// `[x, y]` for elements of V.
pub fn bracket_elems(p: &Params, x: &NCPoly, y: &NCPoly) -> NCPoly {
    bracket(p, &x.concat(y))
}

fn w2(a: Gen, b: Gen) -> Word {
    Word(vec![a, b])
}

fn combo(terms: &[(RatFunc, Gen, Gen)]) -> NCPoly {
    let mut out = NCPoly::zero();
    for (c, a, b) in terms {
        out.add_term(c.clone(), w2(*a, *b));
    }
    out
}

/// The three spanning vectors of the spin-1 subspace I_- of V (x) V.
pub fn i_minus(p: &Params) -> Vec<NCPoly> {
    use Gen::*;
    let one = RatFunc::one();
    let q3q = p.q3q();
    vec![
        combo(&[(p.qp(2), U, V), (-&one, V, U)]),
        combo(&[(q3q.clone(), U, W), (-&q3q, W, U), (&one - &p.qp(2), V, V)]),
        combo(&[(-p.qp(2), V, W), (one, W, V)]),
    ]
}

/// The spin-0 vector and the five spin-2 vectors spanning I_+.
pub fn i_plus(p: &Params) -> Vec<NCPoly> {
    use Gen::*;
    let one = RatFunc::one();
    vec![
        crate::algebra::braided_casimir(p),
        combo(&[(one.clone(), U, U)]),
        combo(&[(one.clone(), U, V), (p.qp(2), V, U)]),
        combo(&[(one.clone(), U, W), (-p.qp(1), V, V), (p.qp(4), W, U)]),
        combo(&[(one.clone(), V, W), (p.qp(2), W, V)]),
        combo(&[(one, W, W)]),
    ]
}

/// Rank-2 basis words in word order.
pub fn rank2_words() -> Vec<Word> {
    crate::algebra::all_words(2)
}

/// Bracket kills I_+.
pub fn check_kills_i_plus(p: &Params) -> Outcome {
    for t in i_plus(p) {
        let b = bracket(p, &t);
        if !b.is_zero() {
            return Err(format!("[{t}] = {b}, expected 0"));
        }
    }
    Ok("bracket vanishes on all 6 spanning vectors of I_+".into())
}

/// I_- generators map to `-tau u`, `tau v`, `tau w`.
pub fn check_i_minus_images(p: &Params) -> Outcome {
    let expect = [
        (-&p.tau, Gen::U),
        (p.tau.clone(), Gen::V),
        (p.tau.clone(), Gen::W),
    ];
    for (t, (c, g)) in i_minus(p).iter().zip(expect) {
        let b = bracket(p, t);
        let e = NCPoly::term(c, Word(vec![g]));
        if b != e {
            return Err(format!("[{t}] = {b}, expected {e}"));
        }
    }
    Ok("I_- generators map to -tau*u, tau*v, tau*w".into())
}

/// `z [a, b] = [z_(1) a, z_(2) b]`, i.e. the bracket intertwines the action on V (x) V.
pub fn check_equivariance(p: &Params) -> Outcome {
    let t = TensorSpace::new(p.clone());
    for w in rank2_words() {
        let x = NCPoly::word(w.clone());
        for z in [HopfGen::X, HopfGen::Y, HopfGen::H] {
            let lhs = t.act(z, &bracket(p, &x));
            let rhs = bracket(p, &t.act(z, &x));
            if lhs != rhs {
                return Err(format!("{z:?} on {w}: {lhs} vs {rhs}"));
            }
        }
    }
    Ok("9 pairs x {X, Y, H}".into())
}

/// I_+ and I_- are stable under X, Y, H and have dimensions 6 and 3.
pub fn check_subspaces(p: &Params) -> Outcome {
    let t = TensorSpace::new(p.clone());
    for (name, span, dim) in [("I_+", i_plus(p), 6), ("I_-", i_minus(p), 3)] {
        let r = linalg::span_rank(&span);
        if r != dim {
            return Err(format!("dim {name} = {r}, expected {dim}"));
        }
        for v in &span {
            for z in [HopfGen::X, HopfGen::Y, HopfGen::H] {
                let img = t.act(z, v);
                if !linalg::in_span(&img, &span) {
                    return Err(format!("{z:?}({v}) leaves {name}"));
                }
            }
        }
    }
    let mut all = i_plus(p);
    all.extend(i_minus(p));
    if linalg::span_rank(&all) != 9 {
        return Err("I_+ + I_- is not all of V (x) V".into());
    }
    Ok("dims 6 + 3 = 9, both stable".into())
}

/// Solve the general equivariant map V (x) V -> V killing I_+; returns the
/// solution space as 27-vectors indexed by (pair, output letter).
pub fn equivariant_ansatz(p: &Params) -> Vec<Vec<RatFunc>> {
    let t = TensorSpace::new(p.clone());
    let words = rank2_words();
    let unknowns = 27;
    let apply = |phi: &[RatFunc], x: &NCPoly| -> NCPoly {
        x.map_words(|w| {
            let i = words.iter().position(|v| v == w).expect("rank-2 word");
            let mut out = NCPoly::zero();
            for (l, g) in Gen::ALGEBRA.iter().enumerate() {
                out.add_term(phi[3 * i + l].clone(), Word(vec![*g]));
            }
            out
        })
    };
    let basis: Vec<Vec<RatFunc>> = (0..unknowns)
        .map(|e| {
            (0..unknowns)
                .map(|i| {
                    if i == e {
                        RatFunc::one()
                    } else {
                        RatFunc::zero()
                    }
                })
                .collect()
        })
        .collect();
    // each constraint is an element of V; collect residuals per unknown
    let mut residuals: Vec<Vec<NCPoly>> = vec![Vec::new(); unknowns];
    for (e, phi) in basis.iter().enumerate() {
        for w in &words {
            let x = NCPoly::word(w.clone());
            for z in [HopfGen::X, HopfGen::Y, HopfGen::H] {
                let r = &free_act(p, z, &apply(phi, &x)) - &apply(phi, &t.act(z, &x));
                residuals[e].push(r);
            }
        }
        for v in i_plus(p) {
            residuals[e].push(apply(phi, &v));
        }
    }
    let n_constraints = residuals[0].len();
    let gens: Vec<Word> = Gen::ALGEBRA.iter().map(|g| Word(vec![*g])).collect();
    let mut rows = Vec::new();
    for k in 0..n_constraints {
        for g in &gens {
            rows.push(
                (0..unknowns)
                    .map(|e| residuals[e][k].coeff(g))
                    .collect::<Vec<_>>(),
            );
        }
    }
    linalg::nullspace(&rows, unknowns)
}

/// The equivariant ansatz has a one-dimensional solution space containing the table.
pub fn check_uniqueness(p: &Params) -> Outcome {
    let sols = equivariant_ansatz(p);
    if sols.len() != 1 {
        return Err(format!("solution space has dimension {}", sols.len()));
    }
    let words = rank2_words();
    let table: Vec<RatFunc> = words
        .iter()
        .flat_map(|w| {
            let b = bracket(p, &NCPoly::word(w.clone()));
            Gen::ALGEBRA
                .iter()
                .map(move |g| b.coeff(&Word(vec![*g])))
                .collect::<Vec<_>>()
        })
        .collect();
    let s = &sols[0];
    let pivot = s.iter().position(|x| !x.is_zero()).unwrap();
    let ratio = &table[pivot] / &s[pivot];
    if s.iter().zip(&table).any(|(a, b)| &(a * &ratio) != b) {
        return Err("table is not proportional to the ansatz solution".into());
    }
    Ok("solution space dimension 1, table proportional to it".into())
}

/// The table entries as listed, verified entry by entry at `tau`.
pub fn table_entries(p: &Params) -> Vec<(Gen, Gen, NCPoly)> {
    let mut out = Vec::new();
    for a in Gen::ALGEBRA {
        for b in Gen::ALGEBRA {
            out.push((a, b, bracket_gens(p, a, b)));
        }
    }
    out
}

/// The three braided Jacobi relations at `z`; returns `(lhs, rhs)` for each.
pub fn jacobi_sides(p: &Params, z: Gen) -> Vec<(NCPoly, NCPoly)> {
    use Gen::*;
    let g = NCPoly::gen;
    let br = |x: &NCPoly, y: &NCPoly| bracket_elems(p, x, y);
    let z = g(z);
    let kappa = p.kappa();
    let one = RatFunc::one();
    let q2 = p.qp(2);
    let q3q = p.q3q();
    let omq2 = &one - &q2;
    let in1 = |a: Gen, b: Gen| br(&g(a), &br(&g(b), &z));
    let bb = |a: Gen, b: Gen| br(&g(a), &g(b));

    let l1 = &in1(U, V).scale(&q2) - &in1(V, U);
    let r1 = br(&(&bb(U, V).scale(&q2) - &bb(V, U)), &z).scale(&kappa);

    let l2 = &(&in1(U, W) - &in1(W, U)).scale(&q3q) + &in1(V, V).scale(&omq2);
    let inner2 = &(&bb(U, W) - &bb(W, U)).scale(&q3q) + &bb(V, V).scale(&omq2);
    let r2 = br(&inner2, &z).scale(&kappa);

    let l3 = &in1(W, V) - &in1(V, W).scale(&q2);
    let r3 = br(&(&bb(W, V) - &bb(V, W).scale(&q2)), &z).scale(&kappa);
    vec![(l1, r1), (l2, r2), (l3, r3)]
}

pub fn check_jacobi(p: &Params) -> Outcome {
    let mut n = 0;
    for z in Gen::ALGEBRA {
        for (i, (l, r)) in jacobi_sides(p, z).into_iter().enumerate() {
            if l != r {
                return Err(format!(
                    "relation {} at z = {}: {l} vs {r}",
                    i + 1,
                    z.name()
                ));
            }
            n += 1;
        }
    }
    Ok(format!("{n} (relation, z) combinations hold"))
}
