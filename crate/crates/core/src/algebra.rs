//! Words and noncommutative polynomials in u, v, w, and their normal forms in
//! the enveloping quotient U(sl(2)_q) and the function algebra A^c_{hbar,q}.
//!
//! Words may also carry the field symbols U, V, W of the tangent modules. The
//! rewriting rules only ever match runs of algebra letters, so a word such as
//! `w u U` reduces its coefficient part and keeps the symbol in place.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use crate::qrat::{Params, RatFunc};

/// A letter: one of the algebra generators or one of the field symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    U,
    V,
    W,
    SymU,
    SymV,
    SymW,
}

impl Gen {
    pub const ALGEBRA: [Gen; 3] = [Gen::U, Gen::V, Gen::W];
    pub const SYMBOLS: [Gen; 3] = [Gen::SymU, Gen::SymV, Gen::SymW];

    pub fn weight(self) -> i64 {
        match self {
            Gen::U | Gen::SymU => 2,
            Gen::V | Gen::SymV => 0,
            Gen::W | Gen::SymW => -2,
        }
    }

    pub fn is_symbol(self) -> bool {
        matches!(self, Gen::SymU | Gen::SymV | Gen::SymW)
    }

    /// Symbol to generator and back, preserving the u/v/w slot.
    pub fn flatten(self) -> Gen {
        match self {
            Gen::SymU => Gen::U,
            Gen::SymV => Gen::V,
            Gen::SymW => Gen::W,
            g => g,
        }
    }

    pub fn symbol(self) -> Gen {
        match self {
            Gen::U => Gen::SymU,
            Gen::V => Gen::SymV,
            Gen::W => Gen::SymW,
            g => g,
        }
    }

    /// Position 0, 1, 2 for u, v, w (and for U, V, W).
    pub fn index(self) -> usize {
        match self {
            Gen::U | Gen::SymU => 0,
            Gen::V | Gen::SymV => 1,
            Gen::W | Gen::SymW => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::U => "u",
            Gen::V => "v",
            Gen::W => "w",
            Gen::SymU => "U",
            Gen::SymV => "V",
            Gen::SymW => "W",
        }
    }
}

/// A finite sequence of letters, ordered by length and then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_slice(gs: &[Gen]) -> Self {
        Word(gs.to_vec())
    }

    /// `u^i v^j w^k`.
    pub fn monomial(i: usize, j: usize, k: usize) -> Self {
        let mut v = vec![Gen::U; i];
        v.extend(std::iter::repeat(Gen::V).take(j));
        v.extend(std::iter::repeat(Gen::W).take(k));
        Word(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().map(|g| g.weight()).sum()
    }

    /// Number of algebra letters (the filtration degree of the coefficient part).
    pub fn degree(&self) -> usize {
        self.0.iter().filter(|g| !g.is_symbol()).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn symbol_count(&self) -> usize {
        self.0.iter().filter(|g| g.is_symbol()).count()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let g = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == g {
                run += 1;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(g.name())?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// A finite linear combination of words with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, RatFunc>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        Self::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Self::term(RatFunc::one(), w)
    }

    pub fn gen(g: Gen) -> Self {
        Self::word(Word(vec![g]))
    }

    pub fn scalar(c: RatFunc) -> Self {
        Self::term(c, Word::empty())
    }

    pub fn term(c: RatFunc, w: Word) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(c, w);
        p
    }

    /// Product of letters with coefficient one.
    pub fn letters(gs: &[Gen]) -> Self {
        Self::word(Word::from_slice(gs))
    }

    pub fn add_term(&mut self, c: RatFunc, w: Word) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = &*e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, c: &RatFunc, p: &NCPoly) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &p.terms {
            self.add_term(c * x, w.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn into_terms(self) -> BTreeMap<Word, RatFunc> {
        self.terms
    }

    pub fn scale(&self, c: &RatFunc) -> NCPoly {
        let mut p = NCPoly::zero();
        p.add_scaled(c, self);
        p
    }

    /// Concatenation product, no reduction.
    pub fn concat(&self, other: &NCPoly) -> NCPoly {
        let mut p = NCPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                p.add_term(x * y, a.concat(b));
            }
        }
        p
    }

    /// Maximal number of algebra letters in a word.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.degree()).max().unwrap_or(0)
    }

    /// The common weight of all words, if there is one. Zero has weight 0.
    pub fn weight(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|w| w.weight());
        let first = it.next().unwrap_or(0);
        it.all(|x| x == first).then_some(first)
    }

    /// Apply a coefficient map.
    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> NCPoly {
        let mut p = NCPoly::zero();
        for (w, c) in &self.terms {
            p.add_term(f(c), w.clone());
        }
        p
    }

    /// Apply a word map linearly.
    pub fn map_words(&self, f: impl Fn(&Word) -> NCPoly) -> NCPoly {
        let mut p = NCPoly::zero();
        for (w, c) in &self.terms {
            p.add_scaled(c, &f(w));
        }
        p
    }

    /// Terms of a given weight.
    pub fn weight_part(&self, wt: i64) -> NCPoly {
        let mut p = NCPoly::zero();
        for (w, c) in &self.terms {
            if w.weight() == wt {
                p.add_term(c.clone(), w.clone());
            }
        }
        p
    }
}

impl std::ops::Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut p = self.clone();
        p.add_scaled(&RatFunc::one(), rhs);
        p
    }
}

impl std::ops::Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut p = self.clone();
        p.add_scaled(&RatFunc::from_int(-1), rhs);
        p
    }
}

impl std::ops::Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&RatFunc::from_int(-1))
    }
}

impl std::ops::Add for NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: NCPoly) -> NCPoly {
        &self + &rhs
    }
}

impl std::ops::Sub for NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: NCPoly) -> NCPoly {
        &self - &rhs
    }
}

/// Write a coefficient so that it can stand next to `*`.
pub(crate) fn coeff_factor(c: &RatFunc) -> String {
    let s = c.to_string();
    if s.contains(['+', '-', '/']) {
        format!("({s})")
    } else {
        s
    }
}

/// Split off a leading sign so terms can be joined with `+`/`-`.
pub(crate) fn sign_split(c: &RatFunc) -> (bool, RatFunc) {
    let neg = c.numer().is_monomial()
        && c.numer()
            .leading()
            .is_some_and(|l| l < &num_traits::Zero::zero());
    if neg {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = sign_split(c);
            if neg {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            if w.is_empty() {
                if i == 0 && !neg {
                    write!(f, "{mag}")?;
                } else {
                    f.write_str(&coeff_factor(&mag))?;
                }
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{}*{w}", coeff_factor(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly({self})")
    }
}

/// Which quotient of the tensor algebra an [`Algebra`] computes in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    /// Quotient by the three commutation relations.
    Enveloping,
    /// Additionally quotient by the braided Casimir being `c`.
    Function,
}

/// A matched left-hand side inside a word: start index and length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Redex {
    pub start: usize,
    pub len: usize,
}

/// A reduction context: parameters, quotient tag and a memo of word normal forms.
pub struct Algebra {
    params: Params,
    tag: Tag,
    r1: Vec<(RatFunc, Vec<Gen>)>,
    r2: Vec<(RatFunc, Vec<Gen>)>,
    r3: Vec<(RatFunc, Vec<Gen>)>,
    /// `uw` as a polynomial in `v` (coefficients of `v^0, v^1, v^2`).
    uw_in_v: Vec<RatFunc>,
    memo: Mutex<HashMap<Word, NCPoly>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("tag", &self.tag)
            .field("params", &self.params)
            .finish()
    }
}

impl Algebra {
    pub fn new(params: Params, tag: Tag) -> Self {
        let p = &params;
        let two_h = &RatFunc::from_int(2) * &p.hbar;
        let q3q = p.q3q();
        let r1 = vec![
            (p.qp(2), vec![Gen::U, Gen::V]),
            (two_h.clone(), vec![Gen::U]),
        ];
        let r2 = vec![
            (p.qp(2), vec![Gen::V, Gen::W]),
            (two_h.clone(), vec![Gen::W]),
        ];
        let r3 = vec![
            (RatFunc::one(), vec![Gen::U, Gen::W]),
            ((RatFunc::one() - p.qp(2)) / &q3q, vec![Gen::V, Gen::V]),
            (-(&two_h / &q3q), vec![Gen::V]),
        ];
        let s = RatFunc::one() + p.qp(2);
        let inv_sq = (&s * &s).inv().unwrap();
        let uw_in_v = vec![
            p.qp(1) * &inv_sq * &p.c,
            &two_h * &p.qp(-1) * &inv_sq,
            -(p.qp(-1) * &inv_sq),
        ];
        Algebra {
            params,
            tag,
            r1,
            r2,
            r3,
            uw_in_v,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn tag(&self) -> Tag {
        self.tag
    }

    /// Leftmost reducible pattern starting at `i`, if any.
    fn redex_at(&self, w: &[Gen], i: usize) -> Option<Redex> {
        let a = *w.get(i)?;
        let b = *w.get(i + 1)?;
        match (a, b) {
            (Gen::V, Gen::U) | (Gen::W, Gen::V) | (Gen::W, Gen::U) => {
                Some(Redex { start: i, len: 2 })
            }
            (Gen::U, Gen::W) if self.tag == Tag::Function => Some(Redex { start: i, len: 2 }),
            (Gen::U, Gen::V) if self.tag == Tag::Function => {
                let mut j = i + 1;
                while w.get(j) == Some(&Gen::V) {
                    j += 1;
                }
                (w.get(j) == Some(&Gen::W)).then_some(Redex {
                    start: i,
                    len: j - i + 1,
                })
            }
            _ => None,
        }
    }

    /// Every redex in a word.
    pub fn redexes(&self, w: &Word) -> Vec<Redex> {
        (0..w.len())
            .filter_map(|i| self.redex_at(&w.0, i))
            .collect()
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.redexes(w).is_empty()
    }

    /// Right-hand side of the rule matching `w[r.start..r.start + r.len]`.
    fn rhs(&self, seg: &[Gen]) -> Vec<(RatFunc, Vec<Gen>)> {
        match seg {
            [Gen::V, Gen::U] => self.r1.clone(),
            [Gen::W, Gen::V] => self.r2.clone(),
            [Gen::W, Gen::U] => self.r3.clone(),
            _ => {
                // u v^j w with j >= 0: uw * (q^-2 v - 2 hbar q^-2)^j, using v w = w (q^-2 v - 2 hbar q^-2)
                let j = seg.len() - 2;
                let qm2 = self.params.qp(-2);
                let step = [-(&RatFunc::from_int(2) * &self.params.hbar * &qm2), qm2];
                let mut poly = self.uw_in_v.clone();
                for _ in 0..j {
                    let mut next = vec![RatFunc::zero(); poly.len() + 1];
                    for (d, a) in poly.iter().enumerate() {
                        next[d] += &(a * &step[0]);
                        next[d + 1] += &(a * &step[1]);
                    }
                    poly = next;
                }
                poly.into_iter()
                    .enumerate()
                    .map(|(d, c)| (c, vec![Gen::V; d]))
                    .collect()
            }
        }
    }

    /// Apply one rewriting step at a redex.
    pub fn rewrite(&self, w: &Word, r: Redex) -> NCPoly {
        let mut out = NCPoly::zero();
        for (c, mid) in self.rhs(&w.0[r.start..r.start + r.len]) {
            let mut v = w.0[..r.start].to_vec();
            v.extend(mid);
            v.extend_from_slice(&w.0[r.start + r.len..]);
            out.add_term(c, Word(v));
        }
        out
    }

    fn lookup(&self, w: &Word) -> Option<NCPoly> {
        self.memo.lock().unwrap().get(w).cloned()
    }

    fn store(&self, w: Word, p: &NCPoly) {
        self.memo.lock().unwrap().insert(w, p.clone());
    }

    /// Normal form of a single word.
    pub fn normal_form_word(&self, w: &Word) -> NCPoly {
        if w.len() < 2 {
            return NCPoly::word(w.clone());
        }
        if let Some(p) = self.lookup(w) {
            return p;
        }
        let n = w.len();
        let last = w.0[n - 1];
        let head = self.normal_form_word(&Word(w.0[..n - 1].to_vec()));
        let mut out = NCPoly::zero();
        for (m, c) in head.terms() {
            let mut v = m.0.clone();
            v.push(last);
            let mw = Word(v);
            let red = self.normal_times_letter(&mw);
            out.add_scaled(c, &red);
        }
        self.store(w.clone(), &out);
        out
    }

    /// Normal form of `m x` where `m` is normal: any redex touches the end.
    fn normal_times_letter(&self, w: &Word) -> NCPoly {
        let Some(r) = (0..w.len()).rev().find_map(|i| self.redex_at(&w.0, i)) else {
            return NCPoly::word(w.clone());
        };
        if let Some(p) = self.lookup(w) {
            return p;
        }
        let mut out = NCPoly::zero();
        for (x, c) in self.rewrite(w, r).terms() {
            out.add_scaled(c, &self.normal_form_word(x));
        }
        self.store(w.clone(), &out);
        out
    }

    pub fn normal_form(&self, p: &NCPoly) -> NCPoly {
        p.map_words(|w| self.normal_form_word(w))
    }

    /// Reduce by always choosing the redex picked by `choose(count)`.
    pub fn reduce_with(&self, p: &NCPoly, mut choose: impl FnMut(usize) -> usize) -> NCPoly {
        let mut cur = p.clone();
        loop {
            let reducible: Vec<(Word, Vec<Redex>)> = cur
                .terms()
                .map(|(w, _)| (w.clone(), self.redexes(w)))
                .filter(|(_, r)| !r.is_empty())
                .collect();
            if reducible.is_empty() {
                return cur;
            }
            let (w, rs) = &reducible[choose(reducible.len())];
            let r = rs[choose(rs.len())];
            let c = cur.coeff(w);
            let mut next = cur.clone();
            next.add_term(-&c, w.clone());
            next.add_scaled(&c, &self.rewrite(w, r));
            cur = next;
        }
    }

    /// Reduced product.
    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.normal_form(&a.concat(b))
    }

    pub fn mul_all(&self, fs: &[NCPoly]) -> NCPoly {
        fs.iter().fold(NCPoly::one(), |acc, f| self.mul(&acc, f))
    }

    pub fn gen(&self, g: Gen) -> NCPoly {
        NCPoly::gen(g)
    }

    /// `(q^3+q) u w + v v + (q+q^-1) w u` as an unreduced polynomial.
    pub fn casimir_poly(&self) -> NCPoly {
        braided_casimir(&self.params)
    }

    /// Normal words of filtration degree at most `n`.
    pub fn basis(&self, n: usize) -> Vec<Word> {
        basis_enumerate(n, self.tag)
    }

    /// Normal words of filtration degree exactly `n`.
    pub fn basis_exact(&self, n: usize) -> Vec<Word> {
        basis_enumerate(n, self.tag)
            .into_iter()
            .filter(|w| w.len() == n)
            .collect()
    }
}

/// The braided Casimir `(q^3+q) u w + v v + (q+q^-1) w u`.
pub fn braided_casimir(p: &Params) -> NCPoly {
    let mut c = NCPoly::zero();
    c.add_term(p.q3q(), Word(vec![Gen::U, Gen::W]));
    c.add_term(RatFunc::one(), Word(vec![Gen::V, Gen::V]));
    c.add_term(p.q2(), Word(vec![Gen::W, Gen::U]));
    c
}

/// Normal words of filtration degree at most `n`, in word order.
pub fn basis_enumerate(n: usize, tag: Tag) -> Vec<Word> {
    let mut out = Vec::new();
    for total in 0..=n {
        match tag {
            Tag::Function => {
                for i in 0..=total {
                    out.push(Word::monomial(i, total - i, 0));
                }
                for k in 1..=total {
                    out.push(Word::monomial(0, total - k, k));
                }
            }
            Tag::Enveloping => {
                for i in 0..=total {
                    for j in 0..=total - i {
                        out.push(Word::monomial(i, j, total - i - j));
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// All words over u, v, w of length exactly `n`.
pub fn all_words(n: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| Gen::ALGEBRA.iter().map(move |&g| w.concat(&Word(vec![g]))))
            .collect();
    }
    out
}
