//! Braided vector fields on the quantum hyperboloid: the degree-one adjoint
//! operators, their extension to the whole function algebra, the left and
//! right tangent modules with their projectors, the graded tangent basis and
//! the canonical left/right identification.
//!
//! Left tangent elements are polynomials whose words end in exactly one field
//! symbol (`a U + b V + c W`); right ones start with it (`U a + V b + W c`).

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{Algebra, Gen, NCPoly, Tag, Word};
use crate::braided_lie::bracket_gens;
use crate::error::{Error, Result};
use crate::linalg;
use crate::qrat::{Params, RatFunc};
use crate::report::Outcome;
use crate::uqsl2::{free_act, tensor_substructure, HopfGen, TensorSpace, UqModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// The function algebra with hbar = 0 used by all tangent computations.
pub fn function_algebra(p: &Params) -> Arc<Algebra> {
    Arc::new(Algebra::new(p.with_hbar(RatFunc::zero()), Tag::Function))
}

/// `U`, `V`, `W` applied to a generator: the bracket `[s, x]_q`.
pub fn ad_degree_one(p: &Params, s: Gen, x: Gen) -> NCPoly {
    bracket_gens(p, s.flatten(), x.flatten())
}

/// Per-level data of the extension: the spin-k string in V^(x)k, its image in
/// A, and the precomputed images of the three operators.
#[derive(Debug)]
struct Level {
    tensors: Vec<NCPoly>,
    images: Vec<NCPoly>,
    op_images: [Vec<NCPoly>; 3],
}

/// Which per-level constant scales the extended operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// `(q^-1 + q^3)(1 + ... + q^(2k-2)) / (q^-1 + q^(2k+1))`.
    Printed,
    /// The constant forced by the enveloping relations.
    Representation,
}

/// The extension of the degree-one operators to A_{<= n}.
#[derive(Debug)]
pub struct ExtensionContext {
    alg: Arc<Algebra>,
    max_degree: usize,
    normalization: Normalization,
    alphas: Vec<RatFunc>,
    levels: Vec<Level>,
    /// Spanning vectors of A_{<= n} grouped by weight, with their level.
    by_weight: BTreeMap<i64, Vec<(usize, usize)>>,
}

impl ExtensionContext {
    pub fn new(alg: Arc<Algebra>, n: usize) -> Result<Self> {
        Self::with_normalization(alg, n, Normalization::Printed)
    }

    pub fn with_normalization(
        alg: Arc<Algebra>,
        n: usize,
        normalization: Normalization,
    ) -> Result<Self> {
        if alg.tag() != Tag::Function || !alg.params().hbar.is_zero() {
            return Err(Error::Usage(
                "vector fields need the function algebra with hbar = 0".into(),
            ));
        }
        let p = alg.params().clone();
        let t = TensorSpace::new(p.clone());
        let mut levels = Vec::new();
        let mut alphas = vec![RatFunc::zero()];
        let mut by_weight: BTreeMap<i64, Vec<(usize, usize)>> = BTreeMap::new();
        for k in 0..=n {
            let tensors = tensor_substructure(&t, k, Gen::U);
            let images: Vec<NCPoly> = tensors.iter().map(|x| alg.normal_form(x)).collect();
            let op_images = if k == 0 {
                [
                    vec![NCPoly::zero()],
                    vec![NCPoly::zero()],
                    vec![NCPoly::zero()],
                ]
            } else {
                let alpha = match normalization {
                    Normalization::Printed => p.alpha_coefficient(k as i64)?,
                    Normalization::Representation => p.representation_alpha(k as i64)?,
                };
                alphas.push(alpha.clone());
                let mk = |s: Gen| -> Vec<NCPoly> {
                    tensors
                        .iter()
                        .map(|x| alg.normal_form(&first_slot(&p, s, x)).scale(&alpha))
                        .collect()
                };
                [mk(Gen::SymU), mk(Gen::SymV), mk(Gen::SymW)]
            };
            for j in 0..=2 * k {
                by_weight
                    .entry(2 * k as i64 - 2 * j as i64)
                    .or_default()
                    .push((k, j));
            }
            levels.push(Level {
                tensors,
                images,
                op_images,
            });
        }
        Ok(ExtensionContext {
            alg,
            max_degree: n,
            normalization,
            alphas,
            levels,
            by_weight,
        })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn params(&self) -> &Params {
        self.alg.params()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    /// The constant used at level `k >= 1`.
    pub fn alpha(&self, k: usize) -> &RatFunc {
        &self.alphas[k]
    }

    /// `Y^j u^(x)k` in V^(x)k.
    pub fn tensor(&self, k: usize, j: usize) -> &NCPoly {
        &self.levels[k].tensors[j]
    }

    /// The image of `Y^j u^(x)k` in A.
    pub fn image(&self, k: usize, j: usize) -> &NCPoly {
        &self.levels[k].images[j]
    }

    /// Coordinates of `g` against the spin strings: `g = sum t_{k,j} image(k, j)`.
    pub fn coordinates(&self, g: &NCPoly) -> Result<Vec<((usize, usize), RatFunc)>> {
        let g = self.alg.normal_form(g);
        if g.degree() > self.max_degree {
            return Err(Error::Usage(format!(
                "degree {} exceeds the extension context bound {}",
                g.degree(),
                self.max_degree
            )));
        }
        let mut weights: Vec<i64> = g.terms().map(|(w, _)| w.weight()).collect();
        weights.dedup();
        weights.sort();
        weights.dedup();
        let mut out = Vec::new();
        for wt in weights {
            let part = g.weight_part(wt);
            let idx = self.by_weight.get(&wt).cloned().unwrap_or_default();
            let vs: Vec<NCPoly> = idx
                .iter()
                .map(|&(k, j)| self.levels[k].images[j].clone())
                .collect();
            let coef = linalg::express_in_span(&part, &vs).ok_or_else(|| {
                Error::Math(format!("{part} is not in the span of the spin strings"))
            })?;
            out.extend(idx.into_iter().zip(coef).filter(|(_, c)| !c.is_zero()));
        }
        Ok(out)
    }

    /// The extended operator `s` (one of `U`, `V`, `W`) on `g`.
    pub fn extend_apply(&self, s: Gen, g: &NCPoly) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for ((k, j), c) in self.coordinates(g)? {
            out.add_scaled(&c, &self.levels[k].op_images[s.index()][j]);
        }
        Ok(out)
    }

    /// Apply a left tangent element `a U + b V + c W` to `f`.
    pub fn apply_tangent(&self, t: &NCPoly, f: &NCPoly) -> Result<NCPoly> {
        let tri = triple(t, Side::Left);
        let mut out = NCPoly::zero();
        for (i, a) in tri.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let d = self.extend_apply(Gen::SYMBOLS[i], f)?;
            out = &out + &self.alg.mul(a, &d);
        }
        Ok(out)
    }

    /// The operators send the spin-k subspace into itself.
    pub fn purity_check(&self, s: Gen, k: usize) -> Outcome {
        if k == 0 || k > self.max_degree {
            return Err(format!("level {k} outside 1..={}", self.max_degree));
        }
        for (j, img) in self.levels[k].op_images[s.index()].iter().enumerate() {
            let coords = self.coordinates(img).map_err(|e| e.to_string())?;
            if let Some(((l, _), _)) = coords.iter().find(|((l, _), _)| *l != k) {
                return Err(format!("{}(Y^{j} u^{k}) has a spin-{l} part", s.name()));
            }
        }
        Ok(format!("{} on V_{k}: pure", s.name()))
    }

    /// For each level, the ratio of the two sides of the weight-zero relation
    /// on `u^k`; it is 1 exactly when the level's constant is the forced one.
    pub fn relation_ratio(&self, k: usize) -> Result<RatFunc> {
        let p = self.params();
        let f = NCPoly::word(Word::monomial(k, 0, 0));
        let d = |s: Gen, f: &NCPoly| self.extend_apply(s, f);
        let (du, dv, dw) = (d(Gen::SymU, &f)?, d(Gen::SymV, &f)?, d(Gen::SymW, &f)?);
        let lhs = &(&d(Gen::SymU, &dw)? - &d(Gen::SymW, &du)?).scale(&p.q3q())
            + &d(Gen::SymV, &dv)?.scale(&(RatFunc::one() - p.qp(2)));
        let rhs = dv.scale(&(&p.kappa() * &p.tau));
        ratio(&lhs, &rhs)
            .ok_or_else(|| Error::Math(format!("relation sides on u^{k} are not proportional")))
    }

    /// `(q^3+q) u W(g) + v V(g) + (q+q^-1) w U(g) = 0` on every basis element.
    pub fn tangent_relation_check(&self, n: usize) -> Outcome {
        let p = self.params();
        let k = k_triple(p, Side::Left);
        let mut count = 0;
        for w in self.alg.basis(n.min(self.max_degree)) {
            let g = NCPoly::word(w.clone());
            let r = self.apply_tangent(&k, &g).map_err(|e| e.to_string())?;
            if !r.is_zero() {
                return Err(format!("relation fails on {w}: {r}"));
            }
            count += 1;
        }
        Ok(format!("{count} basis elements of degree <= {n}"))
    }

    /// The enveloping relations hold for the operators, with the bracket's right sides.
    pub fn representation_check(&self, n: usize) -> Outcome {
        let p = self.params();
        let kt = &p.kappa() * &p.tau;
        let d = |s: Gen, f: &NCPoly| self.extend_apply(s, f);
        let (su, sv, sw) = (Gen::SymU, Gen::SymV, Gen::SymW);
        let mut count = 0;
        for w in self.alg.basis(n.min(self.max_degree)) {
            let f = NCPoly::word(w.clone());
            let run = || -> Result<Vec<(NCPoly, NCPoly)>> {
                let (du, dv, dw) = (d(su, &f)?, d(sv, &f)?, d(sw, &f)?);
                let l1 = &d(su, &dv)?.scale(&p.qp(2)) - &d(sv, &du)?;
                let r1 = du.scale(&-&kt);
                let l2 = &(&d(su, &dw)? - &d(sw, &du)?).scale(&p.q3q())
                    + &d(sv, &dv)?.scale(&(RatFunc::one() - p.qp(2)));
                let r2 = dv.scale(&kt);
                let l3 = &d(sw, &dv)? - &d(sv, &dw)?.scale(&p.qp(2));
                let r3 = dw.scale(&kt);
                Ok(vec![(l1, r1), (l2, r2), (l3, r3)])
            };
            for (i, (l, r)) in run().map_err(|e| e.to_string())?.into_iter().enumerate() {
                if l != r {
                    return Err(format!("relation {} on {w}: {l} vs {r}", i + 1));
                }
            }
            count += 1;
        }
        Ok(format!(
            "3 relations on {count} basis elements of degree <= {n}"
        ))
    }

    /// `z (S f) = sum (z_(1) S)(z_(2) f)`: the action map V' (x) A -> A is equivariant.
    pub fn equivariance_check(&self, n: usize) -> Outcome {
        let p = self.params();
        let alg = &*self.alg;
        let mut count = 0;
        for w in alg.basis(n.min(self.max_degree)) {
            let f = NCPoly::word(w.clone());
            for s in Gen::SYMBOLS {
                let sp = NCPoly::gen(s);
                for (z, terms) in [
                    (
                        HopfGen::X,
                        vec![
                            (vec![HopfGen::X], vec![]),
                            (vec![HopfGen::QH(-1)], vec![HopfGen::X]),
                        ],
                    ),
                    (
                        HopfGen::Y,
                        vec![
                            (vec![], vec![HopfGen::Y]),
                            (vec![HopfGen::Y], vec![HopfGen::QH(1)]),
                        ],
                    ),
                    (
                        HopfGen::H,
                        vec![(vec![HopfGen::H], vec![]), (vec![], vec![HopfGen::H])],
                    ),
                ] {
                    let lhs = alg.act(z, &self.extend_apply(s, &f).map_err(|e| e.to_string())?);
                    let mut rhs = NCPoly::zero();
                    for (l, r) in terms {
                        let ls = l
                            .iter()
                            .rev()
                            .fold(sp.clone(), |acc, &g| free_act(p, g, &acc));
                        let rf = alg.act_seq(&r, &f);
                        for (sw, c) in ls.terms() {
                            let img = self
                                .extend_apply(sw.letters()[0], &rf)
                                .map_err(|e| e.to_string())?;
                            rhs.add_scaled(c, &img);
                        }
                    }
                    if lhs != rhs {
                        return Err(format!("{z:?} with {} on {w}: {lhs} vs {rhs}", s.name()));
                    }
                }
            }
            count += 1;
        }
        Ok(format!("X, Y, H on {count} basis elements"))
    }
}

/// `(s (x) id)` on the first tensor slot.
fn first_slot(p: &Params, s: Gen, t: &NCPoly) -> NCPoly {
    t.map_words(|w| match w.letters().split_first() {
        Some((a, rest)) => ad_degree_one(p, s, *a).concat(&NCPoly::letters(rest)),
        None => NCPoly::zero(),
    })
}

/// Coefficients `[a_U, a_V, a_W]` of a tangent element.
pub fn triple(t: &NCPoly, side: Side) -> [NCPoly; 3] {
    let mut out = [NCPoly::zero(), NCPoly::zero(), NCPoly::zero()];
    for (w, c) in t.terms() {
        let ls = w.letters();
        let (sym, rest) = match side {
            Side::Left => match ls.split_last() {
                Some((s, r)) if s.is_symbol() => (*s, r),
                _ => continue,
            },
            Side::Right => match ls.split_first() {
                Some((s, r)) if s.is_symbol() => (*s, r),
                _ => continue,
            },
        };
        out[sym.index()].add_term(c.clone(), Word::from_slice(rest));
    }
    out
}

/// `a_U U + a_V V + a_W W` (or the right-handed `U a_U + ...`).
pub fn from_triple(tri: &[NCPoly; 3], side: Side) -> NCPoly {
    let mut out = NCPoly::zero();
    for (i, a) in tri.iter().enumerate() {
        let s = NCPoly::gen(Gen::SYMBOLS[i]);
        let part = match side {
            Side::Left => a.concat(&s),
            Side::Right => s.concat(a),
        };
        out = &out + &part;
    }
    out
}

/// The relation element: `K = (q^3+q) u W + v V + (q+q^-1) w U` on the left,
/// `(q^3+q) U w + V v + (q+q^-1) W u` on the right.
pub fn k_triple(p: &Params, side: Side) -> NCPoly {
    let g = NCPoly::gen;
    let tri = match side {
        Side::Left => [
            g(Gen::W).scale(&p.q2()),
            g(Gen::V),
            g(Gen::U).scale(&p.q3q()),
        ],
        Side::Right => [
            g(Gen::W).scale(&p.q3q()),
            g(Gen::V),
            g(Gen::U).scale(&p.q2()),
        ],
    };
    from_triple(&tri, side)
}

/// The three spin-1 combinations spanning the complement generators.
pub fn complement_generators(p: &Params, side: Side) -> Vec<NCPoly> {
    let one = RatFunc::one();
    let mk = |terms: &[(RatFunc, Gen, Gen)]| {
        let mut out = NCPoly::zero();
        for (c, x, s) in terms {
            let w = match side {
                Side::Left => Word(vec![*x, *s]),
                Side::Right => Word(vec![x.symbol(), s.flatten()]),
            };
            out.add_term(c.clone(), w);
        }
        out
    };
    use Gen::*;
    let q3q = p.q3q();
    vec![
        mk(&[(p.qp(2), U, SymV), (-&one, V, SymU)]),
        mk(&[
            (q3q.clone(), U, SymW),
            (-&q3q, W, SymU),
            (&one - &p.qp(2), V, SymV),
        ]),
        mk(&[(-p.qp(2), V, SymW), (one, W, SymV)]),
    ]
}

/// A tangent module over the function algebra, reduced by its projector.
#[derive(Debug, Clone)]
pub struct TangentModule {
    alg: Arc<Algebra>,
    side: Side,
}

impl TangentModule {
    pub fn new(alg: Arc<Algebra>, side: Side) -> Result<Self> {
        if alg.params().c.is_zero() {
            return Err(Error::Param(
                "c = 0 describes the cone, not the hyperboloid".into(),
            ));
        }
        Ok(TangentModule { alg, side })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    /// The flattening `a S -> a s` (or `S a -> s a`).
    pub fn flatten(&self, t: &NCPoly) -> NCPoly {
        let tri = triple(t, self.side);
        let mut out = NCPoly::zero();
        for (i, a) in tri.iter().enumerate() {
            let g = NCPoly::gen(Gen::ALGEBRA[i]);
            let x = match self.side {
                Side::Left => self.alg.mul(a, &g),
                Side::Right => self.alg.mul(&g, a),
            };
            out = &out + &x;
        }
        out
    }

    /// Normal-form coefficients, no projection.
    pub fn normalize(&self, t: &NCPoly) -> NCPoly {
        self.alg.normal_form(t)
    }

    /// `Q(t) = c^-1 flatten(t) K` (left) or `c^-1 K flatten(t)` (right).
    pub fn q_proj(&self, t: &NCPoly) -> NCPoly {
        let t = self.normalize(t);
        let s = self.flatten(&t);
        if s.is_zero() {
            return NCPoly::zero();
        }
        let p = self.alg.params();
        let cinv = p.c.inv().unwrap();
        let k = triple(&k_triple(p, self.side), self.side);
        let tri = [0, 1, 2].map(|i| match self.side {
            Side::Left => self.alg.mul(&s, &k[i]).scale(&cinv),
            Side::Right => self.alg.mul(&k[i], &s).scale(&cinv),
        });
        from_triple(&tri, self.side)
    }

    /// `P = id - Q`, the canonical representative.
    pub fn p_proj(&self, t: &NCPoly) -> NCPoly {
        let t = self.normalize(t);
        &t - &self.q_proj(&t)
    }

    /// Multiply by an algebra element on the coefficient side.
    pub fn scalar_mul(&self, f: &NCPoly, t: &NCPoly) -> NCPoly {
        match self.side {
            Side::Left => self.alg.normal_form(&f.concat(t)),
            Side::Right => self.alg.normal_form(&t.concat(f)),
        }
    }

    /// Monomial triples `w S` with `deg w <= n`.
    pub fn level_vectors(&self, n: usize) -> Vec<NCPoly> {
        let mut out = Vec::new();
        for w in self.alg.basis(n) {
            for s in Gen::SYMBOLS {
                let x = NCPoly::word(w.clone());
                out.push(match self.side {
                    Side::Left => x.concat(&NCPoly::gen(s)),
                    Side::Right => NCPoly::gen(s).concat(&x),
                });
            }
        }
        out
    }
}

impl UqModule for TangentModule {
    fn params(&self) -> &Params {
        self.alg.params()
    }

    fn reduce(&self, x: &NCPoly) -> NCPoly {
        self.p_proj(x)
    }
}

/// Rank of a list of weight-homogeneous vectors, computed weight by weight.
pub fn graded_rank(vs: &[NCPoly]) -> usize {
    let mut groups: BTreeMap<i64, Vec<NCPoly>> = BTreeMap::new();
    for v in vs {
        if v.is_zero() {
            continue;
        }
        let Some(wt) = v.weight() else {
            // not homogeneous: split it
            for (w, c) in v.terms() {
                groups
                    .entry(w.weight())
                    .or_default()
                    .push(NCPoly::term(c.clone(), w.clone()));
            }
            continue;
        };
        groups.entry(wt).or_default().push(v.clone());
    }
    groups.values().map(|g| linalg::span_rank(g)).sum()
}

/// Membership of a vector in a span, weight by weight.
pub fn graded_in_span(x: &NCPoly, vs: &[NCPoly]) -> bool {
    let mut wts: Vec<i64> = x.terms().map(|(w, _)| w.weight()).collect();
    wts.sort();
    wts.dedup();
    wts.into_iter().all(|wt| {
        let part = x.weight_part(wt);
        let group: Vec<NCPoly> = vs
            .iter()
            .map(|v| v.weight_part(wt))
            .filter(|v| !v.is_zero())
            .collect();
        linalg::in_span(&part, &group)
    })
}

/// Projector battery on one side at coefficient level `n` (`n` for the idempotency
/// and kernel checks, `fk_degree` for the `Q(f K) = f K` check).
pub fn projectivity_checks(
    m: &TangentModule,
    n: usize,
    fk_degree: usize,
) -> Vec<(String, Outcome)> {
    let p = m.alg.params().clone();
    let side = m.side;
    let tag = match side {
        Side::Left => "left",
        Side::Right => "right",
    };
    let mut out = Vec::new();
    let vecs = m.level_vectors(n);

    let idem = (|| {
        for t in &vecs {
            let qt = m.q_proj(t);
            if m.q_proj(&qt) != qt {
                return Err(format!("Q(Q({t})) != Q({t})"));
            }
            let pt = m.p_proj(t);
            if m.p_proj(&pt) != pt {
                return Err(format!("P(P({t})) != P({t})"));
            }
            if !m.q_proj(&pt).is_zero() {
                return Err(format!("Q(P({t})) != 0"));
            }
        }
        Ok(format!(
            "Q^2 = Q, P^2 = P, QP = 0 on {} triples of degree <= {n}",
            vecs.len()
        ))
    })();
    out.push((format!("{tag} projector idempotent"), idem));

    let kills = (|| {
        for g in complement_generators(&p, side) {
            let r = m.q_proj(&g);
            if !r.is_zero() {
                return Err(format!("Q({g}) = {r}"));
            }
        }
        Ok("Q annihilates the three complement generators".into())
    })();
    out.push((format!("{tag} projector kernel"), kills));

    let fixes = (|| {
        let k = k_triple(&p, side);
        let mut count = 0;
        for w in m.alg.basis(fk_degree) {
            let fk = m.scalar_mul(&NCPoly::word(w.clone()), &k);
            if m.q_proj(&fk) != fk {
                return Err(format!("Q(f K) != f K for f = {w}"));
            }
            count += 1;
        }
        Ok(format!("Q(f K) = f K for {count} basis elements f"))
    })();
    out.push((format!("{tag} projector fixes fK"), fixes));
    out
}

/// Direct-sum rank identity at level `n`: the relation span and the complement
/// span meet only in zero, and the complement has the flat dimension.
pub fn rank_identity(m: &TangentModule, n: usize) -> Result<(usize, usize, usize)> {
    let p = m.alg.params().clone();
    let k = k_triple(&p, m.side);
    let rel: Vec<NCPoly> = m
        .alg
        .basis(n)
        .into_iter()
        .map(|w| m.scalar_mul(&NCPoly::word(w), &k))
        .collect();
    let comp: Vec<NCPoly> = m.level_vectors(n).iter().map(|t| m.p_proj(t)).collect();
    let r1 = graded_rank(&rel);
    let r2 = graded_rank(&comp);
    let mut both = rel;
    both.extend(comp);
    let r = graded_rank(&both);
    Ok((r1, r2, r))
}

/// Expected dimension of the reduced module at level `n`.
pub fn flat_dimension(n: usize) -> usize {
    2 * n * n + 6 * n + 3
}

/// How a component's scalar was fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlattenRule {
    /// The degree-zero component: `S -> S'` with sign +.
    Identity,
    /// Symbols replaced by generators and multiplied; images equal.
    Product,
    /// Product flattening vanished; the last (first) generator is bracketed
    /// with the symbol instead, and the images are opposite.
    BracketContraction,
}

/// One component `(V_k (x) V')_s` with its left and right Y-strings in the
/// tensor spaces and the scalar `lambda` of the identification `L_j -> lambda R_j`.
#[derive(Clone, Debug)]
pub struct Component {
    pub k: usize,
    pub s: usize,
    pub left: Vec<NCPoly>,
    pub right: Vec<NCPoly>,
    pub lambda: RatFunc,
    pub rule: FlattenRule,
    pub anomaly: Option<String>,
}

/// Highest-weight vector of the spin-`s` component of `V_k (x) V'` on one side.
fn highest_weight(
    t: &TensorSpace,
    tensors: &[NCPoly],
    k: usize,
    s: usize,
    side: Side,
) -> Option<NCPoly> {
    let attach = |x: &NCPoly, g: Gen| match side {
        Side::Left => x.concat(&NCPoly::gen(g)),
        Side::Right => NCPoly::gen(g).concat(x),
    };
    if s == k + 1 {
        return Some(attach(&tensors[0], Gen::SymU));
    }
    // the kernel of X on the weight-2s space is the spin-s highest-weight line
    let target = 2 * s as i64;
    let mut cands = Vec::new();
    for (j, x) in tensors.iter().enumerate() {
        for g in Gen::SYMBOLS {
            if 2 * k as i64 - 2 * j as i64 + g.weight() == target {
                cands.push(attach(x, g));
            }
        }
    }
    let images: Vec<NCPoly> = cands.iter().map(|c| t.act(HopfGen::X, c)).collect();
    let (_, rows) = linalg::coordinate_matrix(&images.iter().collect::<Vec<_>>());
    let cols = cands.len();
    let width = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let m: Vec<Vec<RatFunc>> = (0..width)
        .map(|w| {
            (0..cols)
                .map(|i| rows[i].get(w).cloned().unwrap_or_default())
                .collect()
        })
        .collect();
    let null = linalg::nullspace(&m, cols);
    let v = null.first()?;
    let mut out = NCPoly::zero();
    for (c, x) in v.iter().zip(&cands) {
        out.add_scaled(c, x);
    }
    Some(out)
}

fn y_string<M: UqModule>(m: &M, v: &NCPoly, s: usize) -> Vec<NCPoly> {
    let mut out = vec![m.reduce(v)];
    for _ in 0..2 * s {
        let next = m.act(HopfGen::Y, out.last().unwrap());
        out.push(next);
    }
    out
}

/// Ratio `a / b` when `a` is a scalar multiple of `b != 0`.
pub fn ratio(a: &NCPoly, b: &NCPoly) -> Option<RatFunc> {
    let (w, bc) = b.terms().next()?;
    let r = &a.coeff(w) / bc;
    (b.scale(&r) == *a).then_some(r)
}

fn product_flatten(alg: &Algebra, x: &NCPoly) -> NCPoly {
    alg.normal_form(&x.map_words(|w| {
        NCPoly::letters(&w.letters().iter().map(|g| g.flatten()).collect::<Vec<_>>())
    }))
}

fn bracket_flatten(alg: &Algebra, x: &NCPoly, side: Side) -> NCPoly {
    let p = alg.params();
    let raw = x.map_words(|w| {
        let ls = w.letters();
        match side {
            Side::Left => {
                let (s, rest) = ls.split_last().unwrap();
                let Some((xk, head)) = rest.split_last() else {
                    return NCPoly::zero();
                };
                NCPoly::letters(head).concat(&bracket_gens(p, *xk, s.flatten()))
            }
            Side::Right => {
                let (s, rest) = ls.split_first().unwrap();
                let Some((x1, tail)) = rest.split_first() else {
                    return NCPoly::zero();
                };
                bracket_gens(p, s.flatten(), *x1).concat(&NCPoly::letters(tail))
            }
        }
    });
    alg.normal_form(&raw)
}

/// The canonical identification up to level `n`.
#[derive(Clone, Debug)]
pub struct Identification {
    pub components: Vec<Component>,
    left_module: TangentModule,
    right_module: TangentModule,
}

impl Identification {
    pub fn build(alg: Arc<Algebra>, n: usize) -> Result<Self> {
        let p = alg.params().clone();
        let t = TensorSpace::new(p.clone());
        let mut components = Vec::new();
        components.push(Component {
            k: 0,
            s: 1,
            left: y_string(&t, &NCPoly::gen(Gen::SymU), 1),
            right: y_string(&t, &NCPoly::gen(Gen::SymU), 1),
            lambda: RatFunc::one(),
            rule: FlattenRule::Identity,
            anomaly: None,
        });
        for k in 1..=n {
            let tensors = tensor_substructure(&t, k, Gen::U);
            for s in [k, k + 1] {
                let l0 = highest_weight(&t, &tensors, k, s, Side::Left).ok_or_else(|| {
                    Error::Math(format!("no left highest-weight vector for ({k}, {s})"))
                })?;
                let r0 = highest_weight(&t, &tensors, k, s, Side::Right).ok_or_else(|| {
                    Error::Math(format!("no right highest-weight vector for ({k}, {s})"))
                })?;
                let fl = product_flatten(&alg, &l0);
                let fr = product_flatten(&alg, &r0);
                let (lambda, rule, anomaly) = if !fl.is_zero() && !fr.is_zero() {
                    let lam = ratio(&fl, &fr).ok_or_else(|| {
                        Error::Math(format!("flattenings of ({k}, {s}) are not proportional"))
                    })?;
                    (lam, FlattenRule::Product, None)
                } else {
                    let note = format!("product flattening of (V_{k} (x) V')_{s} vanishes; bracket contraction used");
                    let bl = bracket_flatten(&alg, &l0, Side::Left);
                    let br = bracket_flatten(&alg, &r0, Side::Right);
                    let lam = ratio(&bl, &br).filter(|r| !r.is_zero()).ok_or_else(|| {
                        Error::Math(format!("both flattenings of ({k}, {s}) vanish"))
                    })?;
                    (-lam, FlattenRule::BracketContraction, Some(note))
                };
                components.push(Component {
                    k,
                    s,
                    left: y_string(&t, &l0, s),
                    right: y_string(&t, &r0, s),
                    lambda,
                    rule,
                    anomaly,
                });
            }
        }
        Ok(Identification {
            components,
            left_module: TangentModule::new(alg.clone(), Side::Left)?,
            right_module: TangentModule::new(alg, Side::Right)?,
        })
    }

    /// Reduced left basis vectors with their reduced right images.
    pub fn reduced_pairs(&self) -> Vec<(NCPoly, NCPoly)> {
        let mut out = Vec::new();
        for c in &self.components {
            for (l, r) in c.left.iter().zip(&c.right) {
                out.push((
                    self.left_module.p_proj(l),
                    self.right_module.p_proj(&r.scale(&c.lambda)),
                ));
            }
        }
        out
    }

    /// Map a left tangent element to the right module.
    pub fn apply(&self, b: &NCPoly) -> Result<NCPoly> {
        let b = self.left_module.p_proj(b);
        let pairs = self.reduced_pairs();
        let mut out = NCPoly::zero();
        let mut wts: Vec<i64> = b.terms().map(|(w, _)| w.weight()).collect();
        wts.sort();
        wts.dedup();
        for wt in wts {
            let part = b.weight_part(wt);
            let group: Vec<&(NCPoly, NCPoly)> = pairs
                .iter()
                .filter(|(l, _)| l.weight() == Some(wt))
                .collect();
            let ls: Vec<NCPoly> = group.iter().map(|(l, _)| l.clone()).collect();
            let coef = linalg::express_in_span(&part, &ls).ok_or_else(|| {
                Error::Usage(format!("{part} is beyond the identification degree"))
            })?;
            for (c, (_, r)) in coef.iter().zip(group) {
                out.add_scaled(c, r);
            }
        }
        Ok(self.right_module.p_proj(&out))
    }
}

/// At q = 1 each right string, scaled by its lambda, is the left string
/// with the symbol moved to the front.
pub fn check_classical_identification(id: &Identification) -> Outcome {
    for c in &id.components {
        for (j, (l, r)) in c.left.iter().zip(&c.right).enumerate() {
            let moved = volte(l, Side::Left);
            if r.scale(&c.lambda) != moved {
                return Err(format!(
                    "component ({}, {}) vector {j}: {} vs {}",
                    c.k,
                    c.s,
                    r.scale(&c.lambda),
                    moved
                ));
            }
        }
    }
    Ok(format!(
        "{} components agree with symbol transposition",
        id.components.len()
    ))
}

/// The identification intertwines X, Y and H.
pub fn check_identification_equivariance(id: &Identification) -> Outcome {
    let mut n = 0;
    for (l, r) in id.reduced_pairs() {
        for z in [HopfGen::X, HopfGen::Y, HopfGen::H] {
            let lhs = id
                .apply(&id.left_module.act(z, &l))
                .map_err(|e| e.to_string())?;
            let rhs = id.right_module.act(z, &r);
            if lhs != rhs {
                return Err(format!(
                    "{z:?} on {}: {lhs} vs {rhs}",
                    format_tangent(&l, Side::Left)
                ));
            }
            n += 1;
        }
    }
    Ok(format!("{n} (vector, generator) pairs"))
}

/// Move the field symbol to the other end of each word.
pub fn volte(x: &NCPoly, from: Side) -> NCPoly {
    x.map_words(|w| {
        let mut ls = w.letters().to_vec();
        match from {
            Side::Left => ls.rotate_right(1),
            Side::Right => ls.rotate_left(1),
        }
        NCPoly::letters(&ls)
    })
}

/// The graded tangent basis up to level `n`: component spans after reduction.
pub struct TangentBasis {
    /// `(k, s, reduced vectors)`.
    pub components: Vec<(usize, usize, Vec<NCPoly>)>,
    pub side: Side,
}

/// Build the basis components `V'`, `(V_k (x) V')_{k, k+1}` and also return the
/// reduced spin-(k-1) parts for the drop-out check.
pub fn tangent_basis(
    alg: Arc<Algebra>,
    n: usize,
    side: Side,
) -> Result<(TangentBasis, Vec<(usize, Vec<NCPoly>)>)> {
    let p = alg.params().clone();
    let t = TensorSpace::new(p);
    let m = TangentModule::new(alg, side)?;
    let mut comps = vec![(0, 1, y_string(&m, &NCPoly::gen(Gen::SymU), 1))];
    let mut lower = Vec::new();
    for k in 1..=n {
        let tensors = tensor_substructure(&t, k, Gen::U);
        for s in [k + 1, k, k - 1] {
            let h = highest_weight(&t, &tensors, k, s, side)
                .ok_or_else(|| Error::Math(format!("no highest-weight vector for ({k}, {s})")))?;
            let string: Vec<NCPoly> = y_string(&t, &h, s).iter().map(|x| m.p_proj(x)).collect();
            if s + 1 == k {
                lower.push((k, string));
            } else {
                comps.push((k, s, string));
            }
        }
    }
    Ok((
        TangentBasis {
            components: comps,
            side,
        },
        lower,
    ))
}

/// The reduced spin-(k-1) strings lie in the span of the lower levels.
pub fn check_dropout(basis: &TangentBasis, lower: &[(usize, Vec<NCPoly>)]) -> Outcome {
    for (k, string) in lower {
        let span: Vec<NCPoly> = basis
            .components
            .iter()
            .filter(|c| c.0 < *k)
            .flat_map(|c| c.2.iter().cloned())
            .collect();
        for x in string {
            if !graded_in_span(x, &span) {
                return Err(format!(
                    "spin {} part of level {k} survives: {}",
                    k - 1,
                    format_tangent(x, basis.side)
                ));
            }
        }
    }
    Ok(format!(
        "spin-(k-1) parts reduce into lower levels for k in 1..={}",
        lower.len()
    ))
}

impl TangentBasis {
    pub fn vectors(&self, max_level: usize) -> Vec<NCPoly> {
        self.components
            .iter()
            .filter(|c| c.0 <= max_level)
            .flat_map(|c| c.2.iter().cloned())
            .collect()
    }
}

/// Text form `(a)*U+(b)*V` (left) or `U'*(a)+V'*(b)` (right).
pub fn format_tangent(t: &NCPoly, side: Side) -> String {
    let tri = triple(t, side);
    let mut parts = Vec::new();
    for (i, a) in tri.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let sym = Gen::SYMBOLS[i].name();
        let coef = a.to_string();
        let coef_s = if coef == "1" {
            None
        } else {
            Some(format!("({coef})"))
        };
        parts.push(match (side, coef_s) {
            (Side::Left, None) => sym.to_string(),
            (Side::Left, Some(c)) => format!("{c}*{sym}"),
            (Side::Right, None) => format!("{sym}'"),
            (Side::Right, Some(c)) => format!("{sym}'*{c}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}
