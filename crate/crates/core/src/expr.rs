//! The expression language: rational functions in `q`, algebra elements in
//! `u, v, w`, and tangent elements with one field symbol `U, V, W` per term
//! (primed `U'` for the right module).
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := unary (('*'|'/') unary)*
//! unary  := '-' unary | power
//! power  := atom ['^' ['-'] int]
//! atom   := int | 'q' | 'c' | 'u' | 'v' | 'w' | ('U'|'V'|'W') ["'"] | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{Gen, NCPoly, Word};
use crate::error::{Error, Result};
use crate::qrat::{Params, RatFunc};
use crate::tangent::Side;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(char),
    Sym(Gen, Side),
    Op(char),
    End,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, ch) = chars[i];
        match ch {
            c if c.is_whitespace() => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().map(|x| x.1).collect();
                out.push((pos, Tok::Int(digits.parse().unwrap())));
            }
            'q' | 'c' | 'u' | 'v' | 'w' => {
                out.push((pos, Tok::Ident(ch)));
                i += 1;
            }
            'U' | 'V' | 'W' => {
                let g = Gen::ALGEBRA["UVW".find(ch).unwrap()].symbol();
                i += 1;
                let side = if i < chars.len() && chars[i].1 == '\'' {
                    i += 1;
                    Side::Right
                } else {
                    Side::Left
                };
                out.push((pos, Tok::Sym(g, side)));
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push((pos, Tok::Op(ch)));
                i += 1;
            }
            _ => return Err(Error::parse(pos, format!("unexpected character {ch:?}"))),
        }
    }
    out.push((s.len(), Tok::End));
    Ok(out)
}

/// Abstract syntax with source positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Q,
    C,
    Gen(Gen),
    Symbol(Gen, Side),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, i64),
}

/// What an expression denotes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// No generators and no symbols.
    Scalar,
    Algebra,
    Tangent(Side),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Shape {
    letters: bool,
    sym: Option<Side>,
}

impl Shape {
    fn kind(self) -> Kind {
        match (self.sym, self.letters) {
            (Some(s), _) => Kind::Tangent(s),
            (None, true) => Kind::Algebra,
            (None, false) => Kind::Scalar,
        }
    }
}

const MAX_DEPTH: usize = 256;

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<(Expr, Shape)> {
        let lead = match self.peek() {
            Tok::Op('+') => Some('+'),
            Tok::Op('-') => Some('-'),
            _ => None,
        };
        if lead.is_some() {
            self.bump();
        }
        let (mut e, mut sh) = self.term()?;
        if lead == Some('-') {
            e = Expr::Neg(Box::new(e));
        }
        while let Tok::Op(op @ ('+' | '-')) = *self.peek() {
            let pos = self.pos();
            self.bump();
            let (r, rs) = self.term()?;
            sh = sum_shape(sh, rs, pos)?;
            e = if op == '+' {
                Expr::Add(Box::new(e), Box::new(r))
            } else {
                Expr::Sub(Box::new(e), Box::new(r))
            };
        }
        Ok((e, sh))
    }

    fn term(&mut self) -> Result<(Expr, Shape)> {
        let (mut e, mut sh) = self.unary()?;
        while let Tok::Op(op @ ('*' | '/')) = *self.peek() {
            let pos = self.pos();
            self.bump();
            let rpos = self.pos();
            let (r, rs) = self.unary()?;
            if op == '*' {
                sh = product_shape(sh, rs, pos, rpos)?;
                e = Expr::Mul(Box::new(e), Box::new(r));
            } else {
                if rs.letters || rs.sym.is_some() {
                    return Err(Error::parse(rpos, "divisor must be a scalar"));
                }
                e = Expr::Div(Box::new(e), Box::new(r), pos);
            }
        }
        Ok((e, sh))
    }

    fn unary(&mut self) -> Result<(Expr, Shape)> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(Error::parse(self.pos(), "expression nested too deeply"));
        }
        let r = if *self.peek() == Tok::Op('-') {
            self.bump();
            self.unary().map(|(e, sh)| (Expr::Neg(Box::new(e)), sh))
        } else {
            self.power()
        };
        self.depth -= 1;
        r
    }

    fn power(&mut self) -> Result<(Expr, Shape)> {
        let (base, sh) = self.atom()?;
        if *self.peek() != Tok::Op('^') {
            return Ok((base, sh));
        }
        let pos = self.pos();
        self.bump();
        let neg = if *self.peek() == Tok::Op('-') {
            self.bump();
            true
        } else {
            false
        };
        let epos = self.pos();
        let Tok::Int(n) = self.bump().1 else {
            return Err(Error::parse(epos, "expected an integer exponent"));
        };
        let n: i64 = n
            .try_into()
            .map_err(|_| Error::parse(epos, "exponent too large"))?;
        if n > 1000 {
            return Err(Error::parse(epos, "exponent too large"));
        }
        let n = if neg { -n } else { n };
        if sh.sym.is_some() && n != 1 {
            return Err(Error::parse(
                pos,
                "a field symbol cannot be raised to a power",
            ));
        }
        if n < 0 && sh.letters {
            return Err(Error::parse(epos, "negative exponents need a scalar base"));
        }
        Ok((Expr::Pow(Box::new(base), n), sh))
    }

    fn atom(&mut self) -> Result<(Expr, Shape)> {
        let pos = self.pos();
        let scalar = Shape {
            letters: false,
            sym: None,
        };
        match self.bump().1 {
            Tok::Int(n) => Ok((Expr::Int(n), scalar)),
            Tok::Ident('q') => Ok((Expr::Q, scalar)),
            Tok::Ident('c') => Ok((Expr::C, scalar)),
            Tok::Ident(ch) => {
                let g = Gen::ALGEBRA["uvw".find(ch).unwrap()];
                Ok((
                    Expr::Gen(g),
                    Shape {
                        letters: true,
                        sym: None,
                    },
                ))
            }
            Tok::Sym(g, side) => Ok((
                Expr::Symbol(g, side),
                Shape {
                    letters: false,
                    sym: Some(side),
                },
            )),
            Tok::Op('(') => {
                let inner = self.expr()?;
                let cpos = self.pos();
                match self.bump().1 {
                    Tok::Op(')') => Ok(inner),
                    _ => Err(Error::parse(cpos, "expected ')'")),
                }
            }
            Tok::End => Err(Error::parse(pos, "unexpected end of input")),
            Tok::Op(op) => Err(Error::parse(pos, format!("unexpected {op:?}"))),
        }
    }
}

fn sum_shape(a: Shape, b: Shape, pos: usize) -> Result<Shape> {
    match (a.sym, b.sym) {
        (Some(x), Some(y)) if x != y => {
            Err(Error::parse(pos, "left and right field symbols are mixed"))
        }
        (Some(_), None) | (None, Some(_)) => {
            Err(Error::parse(pos, "algebra and tangent terms are mixed"))
        }
        _ => Ok(Shape {
            letters: a.letters || b.letters,
            sym: a.sym.or(b.sym),
        }),
    }
}

fn product_shape(a: Shape, b: Shape, pos: usize, rpos: usize) -> Result<Shape> {
    match (a.sym, b.sym) {
        (Some(_), Some(_)) => return Err(Error::parse(pos, "two field symbols in one term")),
        (Some(Side::Left), None) if b.letters => {
            return Err(Error::parse(
                rpos,
                "a left field symbol must be the rightmost factor",
            ))
        }
        (None, Some(Side::Right)) if a.letters => {
            return Err(Error::parse(
                rpos,
                "a right field symbol must be the leftmost factor",
            ))
        }
        _ => {}
    }
    Ok(Shape {
        letters: a.letters || b.letters,
        sym: a.sym.or(b.sym),
    })
}

/// A checked parse: the syntax tree and what it denotes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parsed {
    pub expr: Expr,
    pub kind: Kind,
}

/// Parse and check the symbol rules.
pub fn parse_expression(text: &str) -> Result<Parsed> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        depth: 0,
    };
    let (expr, shape) = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(Error::parse(p.pos(), "unexpected trailing input"));
    }
    Ok(Parsed {
        expr,
        kind: shape.kind(),
    })
}

impl Expr {
    /// Evaluate to a polynomial over the letters (no reduction). `c` and `q`
    /// resolve through `params`.
    pub fn eval(&self, params: &Params) -> Result<NCPoly> {
        Ok(match self {
            Expr::Int(n) => {
                NCPoly::scalar(RatFunc::from_rational(BigRational::from_integer(n.clone())))
            }
            Expr::Q => NCPoly::scalar(params.q.clone()),
            Expr::C => NCPoly::scalar(params.c.clone()),
            Expr::Gen(g) | Expr::Symbol(g, _) => NCPoly::gen(*g),
            Expr::Neg(e) => -&e.eval(params)?,
            Expr::Add(a, b) => &a.eval(params)? + &b.eval(params)?,
            Expr::Sub(a, b) => &a.eval(params)? - &b.eval(params)?,
            Expr::Mul(a, b) => a.eval(params)?.concat(&b.eval(params)?),
            Expr::Div(a, b, pos) => {
                let d = b.eval(params)?;
                let d =
                    as_scalar(&d).ok_or_else(|| Error::parse(*pos, "divisor must be a scalar"))?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                a.eval(params)?.scale(&d.inv()?)
            }
            Expr::Pow(a, n) => {
                let base = a.eval(params)?;
                if *n < 0 {
                    let s = as_scalar(&base).expect("checked at parse time");
                    if s.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    NCPoly::scalar(s.pow(*n))
                } else if let Some(s) = as_scalar(&base) {
                    NCPoly::scalar(s.pow(*n))
                } else {
                    (0..*n).fold(NCPoly::one(), |acc, _| acc.concat(&base))
                }
            }
        })
    }
}

fn as_scalar(p: &NCPoly) -> Option<RatFunc> {
    if p.is_zero() {
        return Some(RatFunc::zero());
    }
    if p.len() == 1 {
        let (w, c) = p.terms().next().unwrap();
        if w.is_empty() {
            return Some(c.clone());
        }
    }
    if p.terms().all(|(w, _)| w.is_empty()) {
        return Some(p.coeff(&Word::empty()));
    }
    None
}

/// Parse and evaluate an expression.
pub fn parse_poly(text: &str, params: &Params) -> Result<(NCPoly, Kind)> {
    let parsed = parse_expression(text)?;
    Ok((parsed.expr.eval(params)?, parsed.kind))
}

/// Parse an element of Q(q); generators, symbols and `c` are rejected.
pub fn parse_ratfunc(text: &str) -> Result<RatFunc> {
    let parsed = parse_expression(text)?;
    if parsed.kind != Kind::Scalar {
        return Err(Error::parse(0, "expected a rational function in q"));
    }
    if mentions_c(&parsed.expr) {
        return Err(Error::parse(
            text.find('c').unwrap_or(0),
            "`c` is not allowed in a rational function",
        ));
    }
    let p = parsed.expr.eval(&Params::default())?;
    Ok(as_scalar(&p).unwrap_or_else(RatFunc::zero))
}

fn mentions_c(e: &Expr) -> bool {
    match e {
        Expr::C => true,
        Expr::Neg(a) | Expr::Pow(a, _) => mentions_c(a),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b, _) => {
            mentions_c(a) || mentions_c(b)
        }
        _ => false,
    }
}
