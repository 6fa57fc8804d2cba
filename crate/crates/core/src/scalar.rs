//! Exact arithmetic in Q(i,√2)(k).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Element a + b i + c √2 + d i√2 of Q(i,√2).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Nf {
    pub c: [Q; 4],
}

impl Nf {
    pub fn zero() -> Nf {
        Nf::default()
    }
    pub fn one() -> Nf {
        Nf::rat(Q::one())
    }
    pub fn rat(r: Q) -> Nf {
        Nf { c: [r, Q::zero(), Q::zero(), Q::zero()] }
    }
    pub fn int(n: i64) -> Nf {
        Nf::rat(q(n))
    }
    pub fn new(a: Q, b: Q, c: Q, d: Q) -> Nf {
        Nf { c: [a, b, c, d] }
    }
    pub fn i() -> Nf {
        Nf::new(Q::zero(), Q::one(), Q::zero(), Q::zero())
    }
    pub fn sqrt2() -> Nf {
        Nf::new(Q::zero(), Q::zero(), Q::one(), Q::zero())
    }
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|x| x.is_zero())
    }
    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(|x| x.is_zero())
    }
    pub fn as_rational(&self) -> Option<&Q> {
        if self.is_rational() {
            Some(&self.c[0])
        } else {
            None
        }
    }

    pub fn add_ref(&self, o: &Nf) -> Nf {
        Nf { c: [&self.c[0] + &o.c[0], &self.c[1] + &o.c[1], &self.c[2] + &o.c[2], &self.c[3] + &o.c[3]] }
    }
    pub fn sub_ref(&self, o: &Nf) -> Nf {
        Nf { c: [&self.c[0] - &o.c[0], &self.c[1] - &o.c[1], &self.c[2] - &o.c[2], &self.c[3] - &o.c[3]] }
    }
    pub fn neg_ref(&self) -> Nf {
        Nf { c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]] }
    }
    pub fn scale(&self, r: &Q) -> Nf {
        Nf { c: [&self.c[0] * r, &self.c[1] * r, &self.c[2] * r, &self.c[3] * r] }
    }

    pub fn mul_ref(&self, o: &Nf) -> Nf {
        if self.is_rational() {
            return o.scale(&self.c[0]);
        }
        if o.is_rational() {
            return self.scale(&o.c[0]);
        }
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &o.c;
        let two = q(2);
        Nf {
            c: [
                a0 * b0 - a1 * b1 + &two * (a2 * b2 - a3 * b3),
                a0 * b1 + a1 * b0 + &two * (a2 * b3 + a3 * b2),
                a0 * b2 + a2 * b0 - a1 * b3 - a3 * b1,
                a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
            ],
        }
    }

    pub fn inv(&self) -> Result<Nf> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Nf::rat(r.recip()));
        }
        // x = P + iQ with P, Q in Q(√2); x^{-1} = (P - iQ) / (P² + Q²)
        let [a0, a1, a2, a3] = &self.c;
        let two = q(2);
        // P² + Q² = n0 + n1 √2
        let n0 = a0 * a0 + &two * a2 * a2 + a1 * a1 + &two * a3 * a3;
        let n1 = &two * (a0 * a2 + a1 * a3);
        let m = &n0 * &n0 - &two * &n1 * &n1;
        let (r0, r1) = (&n0 / &m, -(&n1 / &m));
        // (a0 + a2√2 - i(a1 + a3√2)) (r0 + r1√2)
        let p0 = a0 * &r0 + &two * a2 * &r1;
        let p2 = a0 * &r1 + a2 * &r0;
        let q0 = -(a1 * &r0 + &two * a3 * &r1);
        let q2 = -(a1 * &r1 + a3 * &r0);
        Ok(Nf::new(p0, q0, p2, q2))
    }

    pub fn pow(&self, e: u32) -> Nf {
        let mut r = Nf::one();
        for _ in 0..e {
            r = r.mul_ref(self);
        }
        r
    }
}

macro_rules! nf_binop {
    ($tr:ident, $f:ident, $m:ident) => {
        impl $tr for Nf {
            type Output = Nf;
            fn $f(self, o: Nf) -> Nf {
                self.$m(&o)
            }
        }
        impl<'a> $tr<&'a Nf> for &'a Nf {
            type Output = Nf;
            fn $f(self, o: &Nf) -> Nf {
                self.$m(o)
            }
        }
    };
}
nf_binop!(Add, add, add_ref);
nf_binop!(Sub, sub, sub_ref);
nf_binop!(Mul, mul, mul_ref);

impl Neg for Nf {
    type Output = Nf;
    fn neg(self) -> Nf {
        self.neg_ref()
    }
}

/// Dense polynomial in k, coefficients low to high, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    pub c: Vec<Nf>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { c: vec![] }
    }
    pub fn constant(a: Nf) -> Poly {
        let mut p = Poly { c: vec![a] };
        p.trim();
        p
    }
    pub fn one() -> Poly {
        Poly::constant(Nf::one())
    }
    pub fn k() -> Poly {
        Poly { c: vec![Nf::zero(), Nf::one()] }
    }
    fn trim(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }
    pub fn from_coeffs(c: Vec<Nf>) -> Poly {
        let mut p = Poly { c };
        p.trim();
        p
    }
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }
    pub fn lead(&self) -> Option<&Nf> {
        self.c.last()
    }
    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a.add_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                _ => unreachable!(),
            });
        }
        Poly::from_coeffs(c)
    }
    pub fn neg(&self) -> Poly {
        Poly { c: self.c.iter().map(|x| x.neg_ref()).collect() }
    }
    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }
    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if self.c.len() == 1 {
            return o.scale(&self.c[0]);
        }
        if o.c.len() == 1 {
            return self.scale(&o.c[0]);
        }
        let mut c = vec![Nf::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = c[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Poly::from_coeffs(c)
    }
    pub fn scale(&self, a: &Nf) -> Poly {
        if a.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.c.iter().map(|x| x.mul_ref(a)).collect())
    }
    pub fn monic(&self) -> (Poly, Nf) {
        match self.lead() {
            None => (Poly::zero(), Nf::one()),
            Some(l) if l.is_one() => (self.clone(), Nf::one()),
            Some(l) => {
                let li = l.inv().expect("nonzero lead");
                (self.scale(&li), l.clone())
            }
        }
    }
    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dl = d.lead().ok_or(Error::DivisionByZero)?.inv()?;
        let dd = d.c.len() - 1;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut qv = vec![Nf::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let f = r[i].mul_ref(&dl);
            for (j, dc) in d.c.iter().enumerate() {
                if !dc.is_zero() {
                    r[i - dd + j] = r[i - dd + j].sub_ref(&f.mul_ref(dc));
                }
            }
            qv[i - dd] = f;
        }
        r.truncate(dd);
        Ok((Poly::from_coeffs(qv), Poly::from_coeffs(r)))
    }
    /// Monic gcd.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic().0
    }
    pub fn eval(&self, x: &Nf) -> Nf {
        let mut acc = Nf::zero();
        for c in self.c.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }
}

/// Rational function num/den in k over Q(i,√2), kept gcd-reduced with monic den.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }
    pub fn one() -> Scalar {
        Scalar::from_nf(Nf::one())
    }
    pub fn from_nf(a: Nf) -> Scalar {
        Scalar { num: Poly::constant(a), den: Poly::one() }
    }
    pub fn from_q(r: Q) -> Scalar {
        Scalar::from_nf(Nf::rat(r))
    }
    pub fn int(n: i64) -> Scalar {
        Scalar::from_nf(Nf::int(n))
    }
    pub fn frac(n: i64, d: i64) -> Scalar {
        Scalar::from_q(qf(n, d))
    }
    pub fn i() -> Scalar {
        Scalar::from_nf(Nf::i())
    }
    pub fn sqrt2() -> Scalar {
        Scalar::from_nf(Nf::sqrt2())
    }
    /// The formal level k.
    pub fn k() -> Scalar {
        Scalar { num: Poly::k(), den: Poly::one() }
    }
    pub fn from_polys(num: Poly, den: Poly) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::canon(num, den))
    }
    fn canon(num: Poly, den: Poly) -> Scalar {
        if num.is_zero() {
            return Scalar::zero();
        }
        if den.c.len() == 1 {
            let li = den.c[0].inv().expect("nonzero");
            return Scalar { num: num.scale(&li), den: Poly::one() };
        }
        let g = num.gcd(&den);
        let (num, den) =
            if g.c.len() > 1 { (num.divrem(&g).unwrap().0, den.divrem(&g).unwrap().0) } else { (num, den) };
        let (den, l) = den.monic();
        let li = l.inv().expect("nonzero");
        Scalar { num: num.scale(&li), den }
    }
    pub fn num(&self) -> &Poly {
        &self.num
    }
    pub fn den(&self) -> &Poly {
        &self.den
    }
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    pub fn as_nf(&self) -> Option<Nf> {
        if self.den.is_one() && self.num.c.len() <= 1 {
            Some(self.num.c.first().cloned().unwrap_or_default())
        } else {
            None
        }
    }
    /// True iff the value depends on k.
    pub fn is_generic(&self) -> bool {
        self.num.c.len() > 1 || self.den.c.len() > 1
    }
    pub fn add_ref(&self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar { num: self.num.add(&o.num), den: Poly::one() };
        }
        if self.den == o.den {
            return Scalar::canon(self.num.add(&o.num), self.den.clone());
        }
        Scalar::canon(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    pub fn neg_ref(&self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }
    pub fn sub_ref(&self, o: &Scalar) -> Scalar {
        self.add_ref(&o.neg_ref())
    }
    pub fn mul_ref(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar { num: self.num.mul(&o.num), den: Poly::one() };
        }
        Scalar::canon(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    pub fn mul_nf(&self, a: &Nf) -> Scalar {
        if a.is_zero() {
            return Scalar::zero();
        }
        Scalar { num: self.num.scale(a), den: self.den.clone() }
    }
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::canon(self.den.clone(), self.num.clone()))
    }
    pub fn div_ref(&self, o: &Scalar) -> Result<Scalar> {
        Ok(self.mul_ref(&o.inv()?))
    }
    pub fn pow(&self, e: u32) -> Scalar {
        let mut r = Scalar::one();
        for _ in 0..e {
            r = r.mul_ref(self);
        }
        r
    }
    pub fn evaluate_level(&self, k0: &Nf) -> Result<Nf> {
        let d = self.den.eval(k0);
        if d.is_zero() {
            return Err(Error::PoleAtLevel);
        }
        Ok(self.num.eval(k0).mul_ref(&d.inv()?))
    }
    /// Substitute k = k0, returning a constant scalar.
    pub fn at_level(&self, k0: &Nf) -> Result<Scalar> {
        Ok(Scalar::from_nf(self.evaluate_level(k0)?))
    }
}

macro_rules! sc_binop {
    ($tr:ident, $f:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $f(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $f(self, o: &Scalar) -> Scalar {
                self.$m(o)
            }
        }
    };
}
sc_binop!(Add, add, add_ref);
sc_binop!(Sub, sub, sub_ref);
sc_binop!(Mul, mul, mul_ref);

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, o: Scalar) -> Scalar {
        self.div_ref(&o).expect("division by zero")
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::int(n)
    }
}

impl From<Nf> for Scalar {
    fn from(a: Nf) -> Scalar {
        Scalar::from_nf(a)
    }
}

// ---------- rendering ----------

const UNITS: [&str; 4] = ["", "i", "√2", "i√2"];

fn fmt_rat(r: &Q) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Nf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (idx, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if idx == 0 || !a.is_one() {
                out.push_str(&fmt_rat(&a));
            }
            out.push_str(UNITS[idx]);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        for (e, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let kp = match e {
                0 => String::new(),
                1 => "k".to_string(),
                _ => format!("k^{e}"),
            };
            let simple = c.c.iter().filter(|x| !x.is_zero()).count() == 1;
            let cs = c.to_string();
            let term = if e == 0 {
                if simple {
                    cs
                } else {
                    format!("({cs})")
                }
            } else if c.is_one() {
                kp
            } else if c.neg_ref().is_one() {
                format!("-{kp}")
            } else if simple {
                format!("{cs}*{kp}")
            } else {
                format!("({cs})*{kp}")
            };
            parts.push(term);
        }
        let mut s = String::new();
        for (n, t) in parts.iter().enumerate() {
            if n > 0 && !t.starts_with('-') {
                s.push('+');
            }
            s.push_str(t);
        }
        f.write_str(&s)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

// ---------- parsing ----------

struct Parser<'a> {
    s: &'a [char],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.s.get(self.pos).copied()
    }
    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }
    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err())
        }
    }
    fn err(&self) -> Error {
        Error::Parse(format!("unexpected input at {}: {:?}", self.pos, self.s.iter().collect::<String>()))
    }
    fn uint(&mut self) -> Option<BigInt> {
        let st = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if st == self.pos {
            return None;
        }
        self.s[st..self.pos].iter().collect::<String>().parse().ok()
    }
    /// [rational][unit], without sign.
    fn nf_part(&mut self) -> Result<Nf> {
        let mut r = match self.uint() {
            Some(n) => {
                let mut r = Q::from_integer(n);
                if self.peek() == Some('/') && self.s.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                    let d = self.uint().ok_or_else(|| self.err())?;
                    if d.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    r /= Q::from_integer(d);
                }
                Some(r)
            }
            None => None,
        };
        let mut idx = 0;
        if self.eat('i') {
            idx += 1;
        }
        if self.eat('√') {
            self.expect('2')?;
            idx += 2;
        }
        if r.is_none() && idx == 0 {
            return Err(self.err());
        }
        let r = r.take().unwrap_or_else(Q::one);
        let mut c: [Q; 4] = Default::default();
        c[idx] = r;
        Ok(Nf { c })
    }
    fn nf(&mut self) -> Result<Nf> {
        let mut acc = Nf::zero();
        let mut first = true;
        loop {
            let neg = if self.eat('-') {
                true
            } else if first || self.eat('+') {
                false
            } else {
                break;
            };
            if !first && !neg && self.peek().is_none() {
                return Err(self.err());
            }
            let p = self.nf_part()?;
            acc = if neg { acc.sub_ref(&p) } else { acc.add_ref(&p) };
            first = false;
            if !matches!(self.peek(), Some('+') | Some('-')) {
                break;
            }
            // a following sign belongs to this nf only if next is not a k-term
            let save = self.pos;
            self.pos += 1;
            let ok = self.nf_part().is_ok() && !matches!(self.peek(), Some('*') | Some('k'));
            self.pos = save;
            if !ok {
                break;
            }
        }
        Ok(acc)
    }
    fn coef(&mut self) -> Result<Nf> {
        if self.eat('(') {
            let a = self.nf()?;
            self.expect(')')?;
            Ok(a)
        } else {
            self.nf_part()
        }
    }
    fn kpow(&mut self) -> Result<usize> {
        self.expect('k')?;
        if self.eat('^') {
            let n = self.uint().ok_or_else(|| self.err())?;
            n.try_into().map_err(|_| self.err())
        } else {
            Ok(1)
        }
    }
    fn poly(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero();
        let mut first = true;
        loop {
            let neg = if self.eat('-') {
                true
            } else if first || self.eat('+') {
                false
            } else {
                break;
            };
            let (c, e) = if self.peek() == Some('k') {
                (Nf::one(), self.kpow()?)
            } else {
                let c = self.coef()?;
                if self.eat('*') {
                    (c, self.kpow()?)
                } else {
                    (c, 0)
                }
            };
            let mut v = vec![Nf::zero(); e + 1];
            v[e] = if neg { c.neg_ref() } else { c };
            acc = acc.add(&Poly::from_coeffs(v));
            first = false;
        }
        Ok(acc)
    }
    fn scalar(&mut self) -> Result<Scalar> {
        let save = self.pos;
        if self.eat('(') {
            if let Ok(n) = self.poly() {
                if self.eat(')') && self.eat('/') && self.eat('(') {
                    let d = self.poly()?;
                    self.expect(')')?;
                    return Scalar::from_polys(n, d);
                }
            }
            self.pos = save;
        }
        Ok(Scalar::from_polys(self.poly()?, Poly::one())?)
    }
}

fn parse_all<T>(s: &str, f: impl FnOnce(&mut Parser) -> Result<T>) -> Result<T> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { s: &chars, pos: 0 };
    let v = f(&mut p)?;
    if p.pos != chars.len() {
        return Err(p.err());
    }
    Ok(v)
}

impl FromStr for Nf {
    type Err = Error;
    fn from_str(s: &str) -> Result<Nf> {
        parse_all(s, |p| p.nf())
    }
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Scalar> {
        parse_all(s, |p| p.scalar())
    }
}

/// Binomial coefficient C(n, j) for integer n (possibly negative), j >= 0.
pub fn binom(n: i64, j: i64) -> BigInt {
    if j < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..j {
        num *= BigInt::from(n - t);
        den *= BigInt::from(t + 1);
    }
    num / den
}

pub fn binom_s(n: i64, j: i64) -> Scalar {
    Scalar::from_q(Q::from_integer(binom(n, j)))
}

pub fn gcd_int(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_identities() {
        let k = Scalar::k();
        let kp2 = &k + &Scalar::int(2);
        assert!(kp2.div_ref(&kp2).unwrap().is_one());
        assert!((Scalar::one().div_ref(&k).unwrap() * k.clone()).is_one());
        let v = Scalar::int(3).div_ref(&(Scalar::int(4) * kp2.clone())).unwrap();
        assert_eq!(v.evaluate_level(&Nf::int(2)).unwrap(), Nf::rat(qf(3, 16)));
        assert_eq!(v.evaluate_level(&Nf::int(1)).unwrap(), Nf::rat(qf(1, 4)));
        let p = Scalar::one().div_ref(&kp2).unwrap();
        assert!(matches!(p.evaluate_level(&Nf::int(-2)), Err(Error::PoleAtLevel)));
        assert_eq!(k.evaluate_level(&Nf::int(1)).unwrap(), Nf::one());
        assert!(kp2.is_generic());
        assert!(!Scalar::int(5).is_generic());
        let r = (k.pow(2) - Scalar::one()).div_ref(&(k.clone() - Scalar::one())).unwrap();
        assert_eq!(r, k + Scalar::one());
        assert!(r.is_generic());
    }

    #[test]
    fn field_units() {
        let i = Nf::i();
        let s = Nf::sqrt2();
        assert_eq!(&i * &i, Nf::int(-1));
        assert_eq!(&s * &s, Nf::int(2));
        let is = &i * &s;
        assert_eq!(&is * &is, Nf::int(-2));
        let x = Nf::new(qf(1, 2), q(-3), q(2), qf(5, 7));
        assert!((&x * &x.inv().unwrap()).is_one());
    }

    #[test]
    fn render_examples() {
        let k = Scalar::k();
        let v = Scalar::int(3).div_ref(&(Scalar::int(4) * (k.clone() + Scalar::int(2)))).unwrap();
        assert_eq!(v.to_string(), "(3/4)/(k+2)");
        let w = Scalar::from_nf(Nf::new(q(1), q(-1), qf(1, 2), q(0))) * k.clone() - Scalar::i();
        assert_eq!(w.to_string(), "(1-i+1/2√2)*k-i");
        for s in [v, w, Scalar::zero(), Scalar::sqrt2().neg_ref()] {
            assert_eq!(s.to_string().parse::<Scalar>().unwrap(), s);
        }
    }
}
