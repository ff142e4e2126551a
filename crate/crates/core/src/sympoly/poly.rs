use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Var};
use crate::{Error, Result};

/// A polynomial with integer coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly::term(c, Monomial::one())
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn var(v: Var) -> Self {
        Poly::term(1, Monomial::var(v))
    }

    /// The coordinate `x[i,j]`.
    pub fn x(i: usize, j: usize) -> Self {
        Poly::var(Var::Coord(i, j))
    }

    /// The parameter `t`.
    pub fn t() -> Self {
        Poly::var(Var::Param)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Total degree ignoring `t`.
    pub fn coord_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.degree() - m.exponent(Var::Param))
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let degrees: BTreeSet<u32> = self.terms.keys().map(Monomial::degree).collect();
        degrees.len() <= 1
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(v, _)| v))
            .collect()
    }

    /// Every coordinate occurs with exponent at most one; `t` is exempt.
    pub fn is_multilinear(&self) -> bool {
        self.terms
            .keys()
            .all(|m| m.factors().iter().all(|&(v, e)| e <= 1 || v == Var::Param))
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, c: &BigInt, m: &Monomial) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| &acc * self)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Coefficient of `t^k`, a polynomial free of `t`.
    pub fn t_coefficient(&self, k: u32) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.without(Var::Param);
            if e == k {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// The lowest power of `t` present, with its coefficient.
    pub fn lowest_t(&self) -> Result<(u32, Poly)> {
        let k = self
            .terms
            .keys()
            .map(|m| m.exponent(Var::Param))
            .min()
            .ok_or(Error::ZeroPolynomial)?;
        Ok((k, self.t_coefficient(k)))
    }

    /// Replaces every variable `v` with `f(v)` when `f` returns a value.
    pub fn substitute(&self, f: impl Fn(Var) -> Option<Poly>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut acc = Poly::constant(c.clone());
            let mut kept = Vec::new();
            for &(v, e) in m.factors() {
                match f(v) {
                    Some(p) => {
                        acc = &acc * &p.pow(e);
                        if acc.is_zero() {
                            break;
                        }
                    }
                    None => kept.push((v, e)),
                }
            }
            if !acc.is_zero() {
                out += &acc.mul_monomial(&BigInt::one(), &Monomial::from_pairs(kept));
            }
        }
        out
    }

    /// Sets every variable satisfying `kill` to zero.
    pub fn kill_vars(&self, kill: impl Fn(Var) -> bool) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.factors().iter().any(|&(v, _)| kill(v)))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Renames variables.
    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.map_vars(&f), c.clone());
        }
        out
    }

    /// Point evaluation. Every coordinate must be assigned; `t` stays
    /// symbolic when `keep_t` is set and must be assigned otherwise.
    pub fn evaluate(&self, point: &BTreeMap<Var, BigInt>, keep_t: bool) -> Result<Poly> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            let mut t_power = 0;
            for &(v, e) in m.factors() {
                if v == Var::Param && keep_t {
                    t_power = e;
                    continue;
                }
                let a = point
                    .get(&v)
                    .ok_or_else(|| Error::MissingAssignment(v.to_string()))?;
                value *= num_traits::pow(a.clone(), e as usize);
            }
            let mono = if t_power > 0 {
                Monomial::from_pairs([(Var::Param, t_power)])
            } else {
                Monomial::one()
            };
            out.add_term(mono, value);
        }
        Ok(out)
    }

    /// Partial derivative.
    pub fn derivative(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if let Some((e, rest)) = m.derive(v) {
                out.add_term(rest, c * BigInt::from(e));
            }
        }
        out
    }

    /// `Some(r)` with `self = divisor · r` when the division is exact.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Option<Poly>> {
        let (lead_m, lead_c) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        let mut rest = self.clone();
        let mut quotient = Poly::zero();
        while let Some((m, c)) = rest.leading_term() {
            let Some(qm) = m.div(lead_m) else {
                return Ok(None);
            };
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Ok(None);
            }
            rest -= &divisor.mul_monomial(&qc, &qm);
            quotient.add_term(qm, qc);
        }
        Ok(Some(quotient))
    }

    /// Gcd of the integer coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Self {
        Poly::var(v)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

/// Terms are written `+x[3,1]·x[4,2]` or `-2·x[2,1]^2·t`, separated by single
/// spaces, largest monomial first. The zero polynomial prints as `0`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", if c.is_negative() { '-' } else { '+' })?;
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}·{m}")?;
            }
        }
        Ok(())
    }
}

/// Accepts the printed form, with `*` or `·` between factors and `-` or `−`
/// as the minus sign.
impl std::str::FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser {
            chars: s.chars().collect(),
            pos: 0,
        }
        .parse()
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err(&self, what: &str) -> Error {
        Error::PolyParse(format!("{what} at offset {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected {c:?}")))
        }
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| self.err("bad number"))
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.number()?;
            u32::try_from(e).map_err(|_| self.err("exponent too large"))
        } else {
            Ok(1)
        }
    }

    fn index(&mut self) -> Result<usize> {
        let v = self.number()?;
        usize::try_from(v).map_err(|_| self.err("index too large"))
    }

    fn factor(&mut self) -> Result<Poly> {
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                self.eat('[')?;
                let i = self.index()?;
                self.eat(',')?;
                let j = self.index()?;
                self.eat(']')?;
                let e = self.exponent()?;
                Ok(Poly::x(i, j).pow(e))
            }
            Some('t') => {
                self.pos += 1;
                let e = self.exponent()?;
                Ok(Poly::t().pow(e))
            }
            Some(c) if c.is_ascii_digit() => Ok(Poly::constant(self.number()?)),
            _ => Err(self.err("expected a factor")),
        }
    }

    fn parse(mut self) -> Result<Poly> {
        let mut out = Poly::zero();
        let mut first = true;
        while self.peek().is_some() {
            let negative = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-' | '−') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => return Err(self.err("expected a sign")),
            };
            first = false;
            let mut term = self.factor()?;
            while matches!(self.peek(), Some('·' | '*')) {
                self.pos += 1;
                term = &term * &self.factor()?;
            }
            if negative {
                out -= &term;
            } else {
                out += &term;
            }
        }
        if first {
            return Err(self.err("empty polynomial"));
        }
        Ok(out)
    }
}
