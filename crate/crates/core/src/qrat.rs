//! Exact arithmetic in the field Q(q) of rational functions in one variable.
//!
//! A [`RatFunc`] is kept in canonical form: numerator and denominator are
//! coprime and the denominator is monic, so derived `Eq`/`Hash` agree with
//! mathematical equality. Laurent monomials `q^-k` are just denominators.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Poly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// `c * q^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_ints(cs: &[i64]) -> Self {
        Self::from_coeffs(
            cs.iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// True for `c * q^k`.
    pub fn is_monomial(&self) -> bool {
        match self.valuation() {
            Some(v) => v + 1 == self.coeffs.len(),
            None => false,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) if !l.is_one() => self.scale(&l.recip()),
            _ => self.clone(),
        }
    }

    /// Shift by `q^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divide by `q^k`; caller guarantees exactness.
    fn unshift(&self, k: usize) -> Poly {
        Poly {
            coeffs: self.coeffs[k.min(self.coeffs.len())..].to_vec(),
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.degree() == Some(0) || b.degree() == Some(0) {
            return Poly::one();
        }
        // common power of q first; it is by far the most frequent factor
        let va = a.valuation().unwrap();
        let vb = b.valuation().unwrap();
        let v = va.min(vb);
        let (a1, b1) = (a.unshift(va), b.unshift(vb));
        let g = if a1.is_monomial() || b1.is_monomial() {
            Poly::one()
        } else {
            let (mut x, mut y) = if a1.degree() >= b1.degree() {
                (a1, b1)
            } else {
                (b1, a1)
            };
            while !y.is_zero() {
                let r = x.div_rem(&y).1.monic();
                x = y;
                y = r;
            }
            x.monic()
        };
        g.shift(v)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    /// Descending powers, e.g. `q^2-2*q+1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            if k == 0 {
                f.write_str(&fmt_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), var)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// An element of Q(q) in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    /// The indeterminate.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let m = Poly::monomial(BigRational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            RatFunc {
                num: m,
                den: Poly::one(),
            }
        } else {
            RatFunc {
                num: Poly::one(),
                den: m,
            }
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(n.into(), d.into()))
    }

    pub fn from_rational(c: BigRational) -> Self {
        RatFunc {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    /// Canonical representative of `num/den`.
    pub fn normalize(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = Poly::gcd(&num, &den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lead = d.leading().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        Ok(RatFunc { num: n, den: d })
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.degree().unwrap_or(0) == 0
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::normalize(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 {
            self.inv().expect("zero to a negative power")
        } else {
            self.clone()
        };
        let mut e = k.unsigned_abs();
        let mut acc = RatFunc::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        acc
    }

    /// Substitute `q = q0`.
    pub fn evaluate_at(&self, q0: &BigRational) -> Result<BigRational> {
        if q0.is_zero() {
            return Err(Error::Param(
                "q0 = 0 is not allowed (Laurent exponents)".into(),
            ));
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            let lin = Poly::from_coeffs(vec![-q0.clone(), BigRational::one()]);
            let mut mult = 0;
            let mut rest = self.den.clone();
            loop {
                let (quo, rem) = rest.div_rem(&lin);
                if !rem.is_zero() {
                    break;
                }
                mult += 1;
                rest = quo;
            }
            return Err(Error::Pole {
                at: fmt_rational(q0),
                factor: format!("({lin})"),
                multiplicity: mult,
            });
        }
        Ok(self.num.eval(q0) / d)
    }

    /// Substitute `q = q0` and stay in Q(q) (as a constant).
    pub fn specialize(&self, q0: &BigRational) -> Result<Self> {
        self.evaluate_at(q0).map(Self::from_rational)
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::from_int(n)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let n = &self.num + &rhs.num;
            return RatFunc::normalize(n, self.den.clone()).unwrap();
        }
        let g = Poly::gcd(&self.den, &rhs.den);
        let (b1, d1) = if g.is_one() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (self.den.div_rem(&g).0, rhs.den.div_rem(&g).0)
        };
        let n = &(&self.num * &d1) + &(&rhs.num * &b1);
        if n.is_zero() {
            return RatFunc::zero();
        }
        let den = &(&b1 * &d1) * &g;
        if g.is_one() {
            return RatFunc::normalize(n, den).unwrap();
        }
        let g2 = Poly::gcd(&n, &g);
        if g2.is_one() {
            RatFunc::normalize(n, den).unwrap()
        } else {
            RatFunc::normalize(n.div_rem(&g2).0, den.div_rem(&g2).0).unwrap()
        }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let g1 = Poly::gcd(&self.num, &rhs.den);
        let g2 = Poly::gcd(&rhs.num, &self.den);
        let cut = |p: &Poly, g: &Poly| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_rem(g).0
            }
        };
        let n = &cut(&self.num, &g1) * &cut(&rhs.num, &g2);
        let d = &cut(&self.den, &g2) * &cut(&rhs.den, &g1);
        RatFunc::normalize(n, d).unwrap()
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inv().expect("division by zero in Q(q)")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { (&self).$m(&rhs) }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc { (&self).$m(rhs) }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&RatFunc> for RatFunc {
    fn mul_assign(&mut self, rhs: &RatFunc) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let n = self.num.to_string();
        let nstr = if self.num.is_monomial() {
            n
        } else {
            format!("({n})")
        };
        if self.den.is_monomial() {
            write!(f, "{nstr}/{}", self.den)
        } else {
            write!(f, "{nstr}/({})", self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl std::str::FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::expr::parse_ratfunc(s)
    }
}

/// Parse a plain rational number such as `2`, `-3/2`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let parse_int = |x: &str| {
        x.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Usage(format!("not a rational number: {s:?}")))
    };
    match t.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(parse_int(n)?, d))
        }
        None => Ok(BigRational::from_integer(parse_int(t)?)),
    }
}

/// Sum `1 + x + ... + x^(n-1)` evaluated at `x`.
fn geometric(x: &RatFunc, n: u32) -> RatFunc {
    let mut acc = RatFunc::zero();
    let mut p = RatFunc::one();
    for _ in 0..n {
        acc += &p;
        p = &p * x;
    }
    acc
}

/// Global parameters: the point `q` (indeterminate or a rational constant),
/// the orbit constant `c`, the bracket scale `tau` and the deformation `hbar`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    pub q: RatFunc,
    pub c: RatFunc,
    pub tau: RatFunc,
    pub hbar: RatFunc,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            q: RatFunc::q(),
            c: RatFunc::one(),
            tau: RatFunc::from_int(4),
            hbar: RatFunc::zero(),
        }
    }
}

impl Params {
    pub fn new(c: RatFunc, tau: RatFunc, hbar: RatFunc) -> Result<Self> {
        Params {
            q: RatFunc::q(),
            c,
            tau,
            hbar,
        }
        .validated()
    }

    /// The same parameters with `q` fixed to a rational value.
    pub fn specialized(&self, q0: &BigRational) -> Result<Self> {
        if q0.is_zero() || *q0 == -BigRational::one() {
            return Err(Error::Param(format!(
                "q = {} is a degenerate specialization",
                fmt_rational(q0)
            )));
        }
        Params {
            q: RatFunc::from_rational(q0.clone()),
            c: self.c.specialize(q0)?,
            tau: self.tau.specialize(q0)?,
            hbar: self.hbar.specialize(q0)?,
        }
        .validated()
    }

    pub fn validated(self) -> Result<Self> {
        if self.c.is_zero() {
            return Err(Error::Param(
                "c = 0 describes the cone, not the hyperboloid".into(),
            ));
        }
        if self.tau.is_zero() {
            return Err(Error::Param("tau must be nonzero".into()));
        }
        Ok(self)
    }

    pub fn is_symbolic(&self) -> bool {
        !self.q.is_constant()
    }

    /// `q^k` at the configured point.
    pub fn qp(&self, k: i64) -> RatFunc {
        self.q.pow(k)
    }

    /// `q + q^-1`.
    pub fn q2(&self) -> RatFunc {
        self.qp(1) + self.qp(-1)
    }

    /// `q^3 + q`.
    pub fn q3q(&self) -> RatFunc {
        self.qp(3) + self.qp(1)
    }

    /// `M = tau / (1 + q^4)`.
    pub fn m(&self) -> RatFunc {
        &self.tau / &(RatFunc::one() + self.qp(4))
    }

    /// `kappa = 1 - (q^2 + q^-2)^-1`.
    pub fn kappa(&self) -> RatFunc {
        RatFunc::one()
            - (self.qp(2) + self.qp(-2))
                .inv()
                .expect("q^2 + q^-2 vanished")
    }

    /// The `hbar` paired with the bracket through `hbar = kappa * tau / 2`.
    pub fn enveloping_hbar(&self) -> RatFunc {
        &(self.kappa() * &self.tau) / &RatFunc::from_int(2)
    }

    pub fn with_hbar(&self, hbar: RatFunc) -> Self {
        Params {
            hbar,
            ..self.clone()
        }
    }

    pub fn with_c(&self, c: RatFunc) -> Self {
        Params { c, ..self.clone() }
    }

    pub fn with_tau(&self, tau: RatFunc) -> Self {
        Params {
            tau,
            ..self.clone()
        }
    }

    /// The q-integer `[i] = (q^i - q^-i)/(q - q^-1)`, written as
    /// `q^(1-i) (1 + q^2 + ... + q^(2i-2))` so it stays defined at `q = 1`.
    pub fn q_integer(&self, i: i64) -> Result<RatFunc> {
        if i <= 0 {
            return Err(Error::Usage(format!(
                "q-integer index must be positive, got {i}"
            )));
        }
        Ok(self.qp(1 - i) * geometric(&self.qp(2), i as u32))
    }

    /// Signed q-integer for any integer argument, `[-i] = -[i]`, `[0] = 0`.
    pub fn q_number(&self, i: i64) -> RatFunc {
        match i {
            0 => RatFunc::zero(),
            i if i > 0 => self.q_integer(i).unwrap(),
            i => -self.q_integer(-i).unwrap(),
        }
    }

    /// `(q^m - 2 + q^-m)/(q - q^-1)^2`, as the regular expression
    /// `q^(2-|m|) (1 + q + ... + q^(|m|-1))^2 / (1 + q)^2`.
    pub fn casimir_scalar(&self, m: i64) -> RatFunc {
        let n = m.unsigned_abs();
        if n == 0 {
            return RatFunc::zero();
        }
        let s = geometric(&self.q, n as u32);
        let qp1 = RatFunc::one() + &self.q;
        self.qp(2 - n as i64) * &(&s * &s) / &(&qp1 * &qp1)
    }

    /// The quantum Casimir eigenvalue on spin `k`.
    pub fn spin_eigenvalue(&self, k: usize) -> RatFunc {
        self.casimir_scalar(2 * k as i64 + 1)
    }

    /// The extension constant `(q^-1 + q^3)(1 + q^2 + ... + q^(2k-2)) / (q^-1 + q^(2k+1))`.
    pub fn alpha_coefficient(&self, k: i64) -> Result<RatFunc> {
        if k <= 0 {
            return Err(Error::Usage(format!("alpha_k needs k >= 1, got {k}")));
        }
        let top = (self.qp(-1) + self.qp(3)) * geometric(&self.qp(2), k as u32);
        Ok(top / (self.qp(-1) + self.qp(2 * k + 1)))
    }

    /// The constant that makes the level-k operators satisfy the enveloping
    /// relations: `(1 + q^4 + q^6 + ... + q^(4k-2) + q^(4k+2)) / (1 + q^(4k+2))`.
    pub fn representation_alpha(&self, k: i64) -> Result<RatFunc> {
        if k <= 0 {
            return Err(Error::Usage(format!("alpha_k needs k >= 1, got {k}")));
        }
        let top = geometric(&self.qp(2), 2 * k as u32 + 2) - self.qp(2) - self.qp(4 * k);
        Ok(top / (RatFunc::one() + self.qp(4 * k + 2)))
    }
}
