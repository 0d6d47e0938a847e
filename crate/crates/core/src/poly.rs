//! Exact polynomials in the three variables `x`, `y`, `z` over the rationals.
//!
//! A [`Poly`] is a sparse map from [`Monomial`] to nonzero [`Rational`]
//! coefficients. Gradings come from a [`WeightSystem`]: the monomial
//! `x^a y^b z^c` has weighted degree `a*w1 + b*w2 + c*w3`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n / d`; panics when `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub const VARIABLES: [char; 3] = ['x', 'y', 'z'];

/// `x^a y^b z^c`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial([u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn new(a: u32, b: u32, c: u32) -> Self {
        Monomial([a, b, c])
    }

    /// The coordinate function `x`, `y` or `z` for `j = 0, 1, 2`.
    pub fn var(j: usize) -> Self {
        let mut e = [0; 3];
        e[j] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> [u32; 3] {
        self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, w: &WeightSystem) -> i64 {
        (0..3).map(|j| self.0[j] as i64 * w.weight(j)).sum()
    }

    /// Formal partial derivative `d/dx_j`, as `(exponent, monomial)`; `None` when it vanishes.
    pub fn derivative(&self, j: usize) -> Option<(u32, Monomial)> {
        let e = self.0[j];
        if e == 0 {
            return None;
        }
        let mut out = self.0;
        out[j] -= 1;
        Some((e, Monomial(out)))
    }

    /// Whether `other` divides `self`.
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        (0..3).all(|j| self.0[j] >= other.0[j])
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1], self.0[2] + rhs.0[2]])
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::ONE {
            return write!(f, "1");
        }
        let mut first = true;
        for j in 0..3 {
            let e = self.0[j];
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", VARIABLES[j])?;
            } else {
                write!(f, "{}^{}", VARIABLES[j], e)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightError {
    #[error("weights must be positive, got ({0},{1},{2})")]
    NonPositive(i64, i64, i64),
    #[error("weights ({0},{1},{2}) share the common divisor {3}")]
    CommonDivisor(i64, i64, i64, i64),
    #[error("cannot parse weights {0:?}: expected three comma separated integers")]
    Syntax(String),
}

/// Positive coprime weights of `x`, `y`, `z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[i64; 3]", into = "[i64; 3]")]
pub struct WeightSystem {
    weights: [i64; 3],
}

impl WeightSystem {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self, WeightError> {
        if a < 1 || b < 1 || c < 1 {
            return Err(WeightError::NonPositive(a, b, c));
        }
        let g = a.gcd(&b).gcd(&c);
        if g != 1 {
            return Err(WeightError::CommonDivisor(a, b, c, g));
        }
        Ok(WeightSystem { weights: [a, b, c] })
    }

    /// The standard grading `(1,1,1)`.
    pub fn standard() -> Self {
        WeightSystem { weights: [1, 1, 1] }
    }

    pub fn weights(&self) -> [i64; 3] {
        self.weights
    }

    pub fn weight(&self, j: usize) -> i64 {
        self.weights[j]
    }

    /// `|w| = w1 + w2 + w3`.
    pub fn weight_sum(&self) -> i64 {
        self.weights.iter().sum()
    }

    pub fn max_weight(&self) -> i64 {
        *self.weights.iter().max().unwrap()
    }

    /// Fixed monomial order: weighted degree first, then lexicographic with `x > y > z`.
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.weighted_degree(self)
            .cmp(&b.weighted_degree(self))
            .then_with(|| a.cmp(b))
    }
}

impl TryFrom<[i64; 3]> for WeightSystem {
    type Error = WeightError;

    fn try_from(w: [i64; 3]) -> Result<Self, WeightError> {
        WeightSystem::new(w[0], w[1], w[2])
    }
}

impl From<WeightSystem> for [i64; 3] {
    fn from(w: WeightSystem) -> [i64; 3] {
        w.weights
    }
}

impl FromStr for WeightSystem {
    type Err = WeightError;

    fn from_str(s: &str) -> Result<Self, WeightError> {
        let parts: Vec<_> = s.split(',').map(|p| p.trim().parse::<i64>()).collect();
        match parts.as_slice() {
            [Ok(a), Ok(b), Ok(c)] => WeightSystem::new(*a, *b, *c),
            _ => Err(WeightError::Syntax(s.to_string())),
        }
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.weights;
        write!(f, "{a},{b},{c}")
    }
}

/// All monomials of weighted degree `i`, in descending monomial order.
pub fn monomials_of_degree(i: i64, w: &WeightSystem) -> Vec<Monomial> {
    let mut out = Vec::new();
    if i < 0 {
        return out;
    }
    let [w1, w2, w3] = w.weights;
    for a in (0..=i / w1).rev() {
        let rest = i - a * w1;
        for b in (0..=rest / w2).rev() {
            let r = rest - b * w2;
            if r % w3 == 0 {
                out.push(Monomial::new(a as u32, b as u32, (r / w3) as u32));
            }
        }
    }
    out
}

/// Weighted degree of a polynomial; the zero polynomial has degree minus infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    MinusInfinity,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("polynomial is not weight homogeneous: found degrees {degrees:?}")]
pub struct NotHomogeneous {
    pub degrees: BTreeSet<i64>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable {name:?} at position {pos}; only x, y, z are allowed")]
    UnknownVariable { pos: usize, name: String },
}

/// Polynomial in `F[x,y,z]` with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::term(c, Monomial::ONE)
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Poly::term(Rational::one(), m)
    }

    /// The coordinate `x`, `y` or `z`.
    pub fn var(j: usize) -> Self {
        Poly::monomial(Monomial::var(j))
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, c: Rational, m: Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(k, v)| (*k * m, v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Formal partial derivative with respect to `x_j`.
    pub fn derivative(&self, j: usize) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if let Some((e, dm)) = m.derivative(j) {
                out.add_term(c * rat(e as i64), dm);
            }
        }
        out
    }

    pub fn weighted_degree(&self, w: &WeightSystem) -> Result<Degree, NotHomogeneous> {
        let degrees: BTreeSet<i64> = self.terms.keys().map(|m| m.weighted_degree(w)).collect();
        match degrees.len() {
            0 => Ok(Degree::MinusInfinity),
            1 => Ok(Degree::Finite(*degrees.iter().next().unwrap())),
            _ => Err(NotHomogeneous { degrees }),
        }
    }

    pub fn is_homogeneous(&self, w: &WeightSystem) -> bool {
        self.weighted_degree(w).is_ok()
    }

    /// Decomposition into weight homogeneous components, keyed by degree.
    pub fn graded_components(&self, w: &WeightSystem) -> BTreeMap<i64, Poly> {
        let mut out: BTreeMap<i64, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.weighted_degree(w))
                .or_default()
                .terms
                .insert(*m, c.clone());
        }
        out
    }

    /// Terms in descending order for the fixed monomial order under `w`.
    pub fn sorted_terms(&self, w: &WeightSystem) -> Vec<(Monomial, Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|a, b| w.cmp_monomials(&b.0, &a.0));
        v
    }

    /// Printer honouring the monomial order of the given weights.
    pub fn display_with<'a>(&'a self, w: &'a WeightSystem) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, weights: *w }
    }

    pub fn parse(text: &str) -> Result<Poly, ParseError> {
        Parser::new(text).parse()
    }
}

/// Shorthand for [`Poly::parse`] that panics on malformed input; meant for tests and examples.
pub fn poly(text: &str) -> Poly {
    Poly::parse(text).unwrap_or_else(|e| panic!("bad polynomial {text:?}: {e}"))
}

impl FromStr for Poly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Poly::parse(s)
    }
}

struct PolyDisplay<'a> {
    poly: &'a Poly,
    weights: WeightSystem,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.poly.sorted_terms(&self.weights).iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&WeightSystem::standard()))
    }
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Poly::parse(&s).map_err(serde::de::Error::custom)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
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

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(c.clone(), *m);
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(-c.clone(), *m);
        }
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
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
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ca * cb, *ma * *mb);
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

struct Parser {
    // Non-whitespace characters paired with their byte offset in the input.
    chars: Vec<(usize, char)>,
    at: usize,
    len: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            chars: text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            at: 0,
            len: text.len(),
        }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map(|(p, _)| *p).unwrap_or(self.len)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|(_, c)| *c)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            message: message.into(),
        })
    }

    fn parse(mut self) -> Result<Poly, ParseError> {
        let mut out = Poly::zero();
        if self.peek().is_none() {
            return self.error("empty polynomial");
        }
        let mut sign = Rational::one();
        if self.peek() == Some('-') {
            self.at += 1;
            sign = -sign;
        } else if self.peek() == Some('+') {
            self.at += 1;
        }
        loop {
            let (c, m) = self.term()?;
            out.add_term(c * &sign, m);
            match self.peek() {
                None => break,
                Some('+') => sign = Rational::one(),
                Some('-') => sign = -Rational::one(),
                Some(ch) => return self.error(format!("unexpected character {ch:?}")),
            }
            self.at += 1;
        }
        Ok(out)
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.at;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.at += 1;
        }
        if start == self.at {
            return self.error("expected an integer");
        }
        let digits: String = self.chars[start..self.at].iter().map(|(_, c)| *c).collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn term(&mut self) -> Result<(Rational, Monomial), ParseError> {
        let mut coeff = Rational::one();
        let mut mono = Monomial::ONE;
        let mut have_coeff = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let num = self.integer()?;
            let mut den = BigInt::one();
            if self.peek() == Some('/') {
                self.at += 1;
                den = self.integer()?;
                if den.is_zero() {
                    return self.error("zero denominator");
                }
            }
            coeff = Rational::new(num, den);
            have_coeff = true;
            if self.peek() == Some('*') {
                self.at += 1;
                if !matches!(self.peek(), Some(c) if c.is_alphabetic()) {
                    return self.error("expected a variable after '*'");
                }
            }
        }
        if !matches!(self.peek(), Some(c) if c.is_alphabetic()) {
            if have_coeff {
                return Ok((coeff, mono));
            }
            return self.error("expected a coefficient or a variable");
        }
        loop {
            mono = mono * self.factor()?;
            if self.peek() == Some('*') {
                self.at += 1;
                continue;
            }
            if matches!(self.peek(), Some(c) if c.is_alphanumeric()) {
                return self.error("factors must be separated by '*'");
            }
            break;
        }
        Ok((coeff, mono))
    }

    fn factor(&mut self) -> Result<Monomial, ParseError> {
        let pos = self.pos();
        let start = self.at;
        while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
            self.at += 1;
        }
        if start == self.at {
            return self.error("expected a variable");
        }
        let name: String = self.chars[start..self.at].iter().map(|(_, c)| *c).collect();
        let j = match name.as_str() {
            "x" => 0,
            "y" => 1,
            "z" => 2,
            _ => return Err(ParseError::UnknownVariable { pos, name }),
        };
        let mut exp = 1u32;
        if self.peek() == Some('^') {
            self.at += 1;
            let e = self.integer()?;
            exp = match u32::try_from(e) {
                Ok(e) => e,
                Err(_) => return self.error("exponent too large"),
            };
        }
        let mut e = [0; 3];
        e[j] = exp;
        Ok(Monomial(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_simple() {
        let p = poly("x^3+y^3+z^3");
        assert_eq!(p.len(), 3);
        assert!(p.terms().all(|(_, c)| c.is_one()));
        assert!(poly("0").is_zero());
        assert_eq!(poly("2*x*y - x*y"), poly("x*y"));
    }

    #[test]
    fn parse_rationals_and_signs() {
        let p = poly(" -3/4*x^2*z + 2y - 5 ");
        assert_eq!(p.coeff(&Monomial::new(2, 0, 1)), ratio(-3, 4));
        assert_eq!(p.coeff(&Monomial::new(0, 1, 0)), rat(2));
        assert_eq!(p.coeff(&Monomial::ONE), rat(-5));
        assert_eq!(poly("x^1*y^0"), poly("x"));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Poly::parse("x + w"),
            Err(ParseError::UnknownVariable { pos: 4, .. })
        ));
        assert!(matches!(Poly::parse("xy"), Err(ParseError::UnknownVariable { .. })));
        assert!(matches!(Poly::parse("x +"), Err(ParseError::Syntax { pos: 3, .. })));
        assert!(matches!(Poly::parse("1/0*x"), Err(ParseError::Syntax { .. })));
        assert!(matches!(Poly::parse(""), Err(ParseError::Syntax { .. })));
        assert!(matches!(Poly::parse("x**y"), Err(ParseError::Syntax { .. })));
        assert!(matches!(Poly::parse("x y"), Err(ParseError::UnknownVariable { .. })));
    }

    #[test]
    fn printing_uses_descending_order() {
        let p = poly("z + x^2 - 1/2*x*y + 3");
        assert_eq!(p.to_string(), "x^2 - 1/2*x*y + z + 3");
        let w = WeightSystem::new(1, 1, 5).unwrap();
        assert_eq!(p.display_with(&w).to_string(), "z + x^2 - 1/2*x*y + 3");
        assert_eq!(poly("-x").to_string(), "-x");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn weighted_degrees() {
        let w = WeightSystem::new(15, 10, 6).unwrap();
        assert_eq!(poly("x^2+y^3+z^5").weighted_degree(&w), Ok(Degree::Finite(30)));
        let err = poly("x+y^2").weighted_degree(&WeightSystem::standard()).unwrap_err();
        assert_eq!(err.degrees, BTreeSet::from([1, 2]));
        assert_eq!(Poly::zero().weighted_degree(&w), Ok(Degree::MinusInfinity));
    }

    #[test]
    fn weights_validation() {
        assert!(WeightSystem::new(2, 4, 6).is_err());
        assert!(WeightSystem::new(0, 1, 1).is_err());
        assert_eq!("3, 2,1".parse::<WeightSystem>().unwrap().weights(), [3, 2, 1]);
        assert!("1,1".parse::<WeightSystem>().is_err());
    }

    #[test]
    fn monomial_enumeration() {
        let s = WeightSystem::standard();
        let got: Vec<String> = monomials_of_degree(2, &s).iter().map(|m| m.to_string()).collect();
        assert_eq!(got, ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]);
        assert!(monomials_of_degree(1, &WeightSystem::new(2, 3, 5).unwrap()).is_empty());
        assert!(monomials_of_degree(-1, &s).is_empty());
        assert_eq!(monomials_of_degree(0, &s), vec![Monomial::ONE]);
    }

    #[test]
    fn monomials_of_degree_six_weights_321() {
        // Oracle: every (a,b,c) with 3a + 2b + c = 6, found by exhaustive search.
        let mut expected = BTreeSet::new();
        for a in 0..=6u32 {
            for b in 0..=6u32 {
                for c in 0..=6u32 {
                    if 3 * a + 2 * b + c == 6 {
                        expected.insert(Monomial::new(a, b, c));
                    }
                }
            }
        }
        let w = WeightSystem::new(3, 2, 1).unwrap();
        let got = monomials_of_degree(6, &w);
        assert_eq!(got.len(), 7);
        assert_eq!(got.iter().copied().collect::<BTreeSet<_>>(), expected);
        let listed = ["x^2", "x*z^3", "x*y*z", "y^3", "y^2*z^2", "y*z^4", "z^6"];
        for m in listed {
            assert!(expected.contains(&poly(m).terms().next().unwrap().0.clone()));
        }
    }

    #[test]
    fn graded_components_split() {
        let s = WeightSystem::standard();
        let c = poly("x+y^2").graded_components(&s);
        assert_eq!(c, BTreeMap::from([(1, poly("x")), (2, poly("y^2"))]));
        let c = poly("x^2*y + z^3 + x").graded_components(&s);
        assert_eq!(c, BTreeMap::from([(1, poly("x")), (3, poly("x^2*y+z^3"))]));
        assert_eq!(poly("x*y+z^2").graded_components(&s).len(), 1);
    }

    #[test]
    fn derivative_and_pow() {
        assert_eq!(poly("x^3*y + 2*x").derivative(0), poly("3*x^2*y + 2"));
        assert_eq!(poly("x+y").pow(2), poly("x^2+2*x*y+y^2"));
        assert_eq!(poly("x").pow(0), Poly::one());
    }
}
