//! The U_q(sl(2)) action on words, on the quotient algebras and on tensor
//! powers, the quantum Casimir, and the exact spin decomposition.

use std::collections::BTreeMap;

use crate::algebra::{Algebra, Gen, NCPoly, Word};
use crate::qrat::{Params, RatFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HopfGen {
    X,
    Y,
    H,
    /// The grouplike `q^{sH}`.
    QH(i64),
}

/// `X` or `Y` on a single letter; symbols transform like their generators.
pub fn act_letter(p: &Params, g: HopfGen, x: Gen) -> NCPoly {
    let sym = x.is_symbol();
    let lift = |y: Gen| if sym { y.symbol() } else { y };
    match (g, x.flatten()) {
        (HopfGen::X, Gen::U) | (HopfGen::Y, Gen::W) => NCPoly::zero(),
        (HopfGen::X, Gen::V) => NCPoly::term(-p.q2(), Word(vec![lift(Gen::U)])),
        (HopfGen::X, Gen::W) => NCPoly::gen(lift(Gen::V)),
        (HopfGen::Y, Gen::U) => NCPoly::term(RatFunc::from_int(-1), Word(vec![lift(Gen::V)])),
        (HopfGen::Y, Gen::V) => NCPoly::term(p.q2(), Word(vec![lift(Gen::W)])),
        (HopfGen::H, _) => NCPoly::term(RatFunc::from_int(x.weight()), Word(vec![x])),
        (HopfGen::QH(s), _) => NCPoly::term(p.qp(s * x.weight()), Word(vec![x])),
        _ => unreachable!(),
    }
}

/// Action on a single word through the coproduct, without any relations.
pub fn act_word(p: &Params, g: HopfGen, w: &Word) -> NCPoly {
    match g {
        HopfGen::H => NCPoly::term(RatFunc::from_int(w.weight()), w.clone()),
        HopfGen::QH(s) => NCPoly::term(p.qp(s * w.weight()), w.clone()),
        HopfGen::X | HopfGen::Y => {
            let mut out = NCPoly::zero();
            let total = w.weight();
            let mut before = 0;
            for (i, &x) in w.0.iter().enumerate() {
                let wt = x.weight();
                // X: q^{-H} on the letters to the left; Y: q^{H} on the letters to the right
                let scale = match g {
                    HopfGen::X => p.qp(-before),
                    _ => p.qp(total - before - wt),
                };
                for (img, c) in act_letter(p, g, x).terms() {
                    let mut v = w.0[..i].to_vec();
                    v.extend_from_slice(&img.0);
                    v.extend_from_slice(&w.0[i + 1..]);
                    out.add_term(&scale * c, Word(v));
                }
                before += wt;
            }
            out
        }
    }
}

pub fn free_act(p: &Params, g: HopfGen, x: &NCPoly) -> NCPoly {
    x.map_words(|w| act_word(p, g, w))
}

/// A space of words carrying the U_q(sl(2)) action, with its own reduction.
pub trait UqModule {
    fn params(&self) -> &Params;

    /// Bring an element to canonical form; the action commutes with it.
    fn reduce(&self, x: &NCPoly) -> NCPoly;

    /// Largest spin that can occur in `x`.
    fn spin_bound(&self, x: &NCPoly) -> usize {
        x.terms().map(|(w, _)| w.len()).max().unwrap_or(0)
    }

    fn act(&self, g: HopfGen, x: &NCPoly) -> NCPoly {
        self.reduce(&free_act(self.params(), g, x))
    }

    /// Apply a product of generators, rightmost first.
    fn act_seq(&self, gs: &[HopfGen], x: &NCPoly) -> NCPoly {
        gs.iter().rev().fold(x.clone(), |acc, &g| self.act(g, &acc))
    }
}

impl UqModule for Algebra {
    fn params(&self) -> &Params {
        Algebra::params(self)
    }

    fn reduce(&self, x: &NCPoly) -> NCPoly {
        self.normal_form(x)
    }
}

/// Tensor powers of V (or of the symbol space): no relations at all.
#[derive(Clone, Debug)]
pub struct TensorSpace {
    params: Params,
}

impl TensorSpace {
    pub fn new(params: Params) -> Self {
        TensorSpace { params }
    }

    /// The highest-weight string `Y^j u^{(x)k}`, `j = 0..2k`.
    pub fn substructure(&self, k: usize) -> Vec<NCPoly> {
        tensor_substructure(self, k, Gen::U)
    }
}

impl UqModule for TensorSpace {
    fn params(&self) -> &Params {
        &self.params
    }

    fn reduce(&self, x: &NCPoly) -> NCPoly {
        x.clone()
    }
}

/// `Y^j g^{(x)k}` for `j = 0..2k`, with `g` a highest-weight letter (u or U).
pub fn tensor_substructure<M: UqModule + ?Sized>(m: &M, k: usize, g: Gen) -> Vec<NCPoly> {
    let mut cur = NCPoly::letters(&vec![g; k]);
    let mut out = vec![cur.clone()];
    for _ in 0..2 * k {
        cur = m.act(HopfGen::Y, &cur);
        out.push(cur.clone());
    }
    out
}

/// The quantum Casimir: the weight scalar plus `Y X`.
pub fn casimir_apply<M: UqModule + ?Sized>(m: &M, x: &NCPoly) -> NCPoly {
    let p = m.params();
    let yx = m.act(HopfGen::Y, &m.act(HopfGen::X, x));
    let diag = x.map_words(|w| NCPoly::term(p.casimir_scalar(w.weight() + 1), w.clone()));
    &m.reduce(&diag) + &yx
}

/// Isotypic components of `x` by spin, computed with Lagrange projectors in the
/// Casimir over the spin support `0..=spin_bound(x)`. Zero components are omitted.
pub fn spin_decompose<M: UqModule + ?Sized>(m: &M, x: &NCPoly) -> BTreeMap<usize, NCPoly> {
    let x = m.reduce(x);
    let n = m.spin_bound(&x);
    spin_decompose_bounded(m, &x, n)
}

pub fn spin_decompose_bounded<M: UqModule + ?Sized>(
    m: &M,
    x: &NCPoly,
    n: usize,
) -> BTreeMap<usize, NCPoly> {
    let p = m.params();
    let mut out = BTreeMap::new();
    let x = m.reduce(x);
    if x.is_zero() {
        return out;
    }
    if n == 0 {
        out.insert(0, x);
        return out;
    }
    let lambdas: Vec<RatFunc> = (0..=n).map(|k| p.spin_eigenvalue(k)).collect();
    // Krylov vectors C^i x
    let mut krylov = vec![x.clone()];
    for _ in 0..n {
        let next = casimir_apply(m, krylov.last().unwrap());
        krylov.push(next);
    }
    for k in 0..=n {
        // coefficients of prod_{j != k} (t - l_j)/(l_k - l_j)
        let mut poly = vec![RatFunc::one()];
        for (j, lj) in lambdas.iter().enumerate() {
            if j == k {
                continue;
            }
            let d = (&lambdas[k] - lj)
                .inv()
                .expect("spin eigenvalues collide at this q");
            let mut next = vec![RatFunc::zero(); poly.len() + 1];
            for (i, a) in poly.iter().enumerate() {
                next[i + 1] += &(a * &d);
                next[i] -= &(a * &(lj * &d));
            }
            poly = next;
        }
        let mut comp = NCPoly::zero();
        for (a, v) in poly.iter().zip(&krylov) {
            comp.add_scaled(a, v);
        }
        if !comp.is_zero() {
            out.insert(k, comp);
        }
    }
    out
}

/// The spin-`k` component only.
pub fn spin_component<M: UqModule + ?Sized>(m: &M, x: &NCPoly, k: usize) -> NCPoly {
    spin_decompose(m, x).remove(&k).unwrap_or_default()
}

/// A linear combination of products of Hopf generators, rightmost acting first.
pub type OpExpr = Vec<(RatFunc, Vec<HopfGen>)>;

pub fn apply_op<M: UqModule + ?Sized>(m: &M, op: &OpExpr, x: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (c, gs) in op {
        out.add_scaled(c, &m.act_seq(gs, x));
    }
    out
}

/// Antipode of a generator as an operator expression.
pub fn antipode(g: HopfGen) -> OpExpr {
    let m1 = RatFunc::from_int(-1);
    match g {
        HopfGen::X => vec![(m1, vec![HopfGen::QH(1), HopfGen::X])],
        HopfGen::Y => vec![(m1, vec![HopfGen::Y, HopfGen::QH(-1)])],
        HopfGen::H => vec![(m1, vec![HopfGen::H])],
        HopfGen::QH(s) => vec![(RatFunc::one(), vec![HopfGen::QH(-s)])],
    }
}

/// Coproduct of a generator as a list of `(coefficient, left factor, right factor)`.
pub fn coproduct(g: HopfGen) -> Vec<(RatFunc, Vec<HopfGen>, Vec<HopfGen>)> {
    let one = RatFunc::one();
    match g {
        HopfGen::X => vec![
            (one.clone(), vec![HopfGen::X], vec![]),
            (one, vec![HopfGen::QH(-1)], vec![HopfGen::X]),
        ],
        HopfGen::Y => vec![
            (one.clone(), vec![], vec![HopfGen::Y]),
            (one, vec![HopfGen::Y], vec![HopfGen::QH(1)]),
        ],
        HopfGen::H => vec![
            (one.clone(), vec![HopfGen::H], vec![]),
            (one, vec![], vec![HopfGen::H]),
        ],
        HopfGen::QH(s) => vec![(one, vec![HopfGen::QH(s)], vec![HopfGen::QH(s)])],
    }
}

/// Antipode of a product of generators: anti-multiplicative.
fn antipode_seq(gs: &[HopfGen]) -> OpExpr {
    let mut acc: OpExpr = vec![(RatFunc::one(), vec![])];
    for &g in gs {
        let s = antipode(g);
        let mut next = Vec::new();
        for (a, xs) in &acc {
            for (b, ys) in &s {
                // gamma(gs) = gamma(g_n) ... gamma(g_1): prepend each new factor
                let mut word = ys.clone();
                word.extend_from_slice(xs);
                next.push((a * b, word));
            }
        }
        acc = next;
    }
    acc
}

/// `m (gamma (x) id) Delta(g)` when `left` is set, else `m (id (x) gamma) Delta(g)`.
pub fn antipode_convolution(g: HopfGen, left: bool) -> OpExpr {
    let mut out = Vec::new();
    for (c, a, b) in coproduct(g) {
        let (first, second) = if left {
            (antipode_seq(&a), vec![(RatFunc::one(), b)])
        } else {
            (vec![(RatFunc::one(), a)], antipode_seq(&b))
        };
        for (x, xs) in &first {
            for (y, ys) in &second {
                let mut word = xs.clone();
                word.extend_from_slice(ys);
                out.push((&c * &(x * y), word));
            }
        }
    }
    out
}

/// Counit of a generator.
pub fn counit(g: HopfGen) -> RatFunc {
    match g {
        HopfGen::QH(_) => RatFunc::one(),
        _ => RatFunc::zero(),
    }
}

/// The braided product rule `z(ab) = sum z_(1)(a) z_(2)(b)`, evaluated in `alg`.
pub fn covariant_product(alg: &Algebra, g: HopfGen, a: &NCPoly, b: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (c, l, r) in coproduct(g) {
        let la = alg.act_seq(&l, a);
        let rb = alg.act_seq(&r, b);
        out.add_scaled(&c, &alg.mul(&la, &rb));
    }
    out
}
