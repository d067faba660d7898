//! Exact Laurent polynomial arithmetic in one variable `q` over arbitrary
//! precision integers, plus the q-brackets, q-factorials and Gaussian
//! binomial coefficients built on top of it.
//!
//! A value is a finite map from integer exponents (possibly negative) to
//! nonzero `BigInt` coefficients. The canonical form stores no zero
//! coefficients, so structural equality is semantic equality and the zero
//! polynomial is the empty map.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;
use thiserror::Error;

/// Error from evaluating at a rational point.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("cannot evaluate at q = 0: the polynomial has a negative exponent")]
    ZeroWithNegativeExponent,
}

/// Parse error with the byte position of the offending input.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

/// A Laurent polynomial in `q` with `BigInt` coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    // Invariant: no stored coefficient is zero.
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    /// The zero polynomial (empty term map).
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The single term `c * q^e`; zero polynomial if `c == 0`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Coefficient of `q^e` (zero if absent).
    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Multiplies by the scalar `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiplies by `q^e` (shifts every exponent).
    pub fn shift(&self, e: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&x, c)| (x + e, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Sum of all coefficients, i.e. the value at q = 1.
    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact rational value at `q = x`.
    ///
    /// Fails when `x == 0` and a negative exponent is present.
    pub fn eval_at(&self, x: &BigRational) -> Result<BigRational, EvalError> {
        if x.is_zero() {
            if self.min_exponent().is_some_and(|e| e < 0) {
                return Err(EvalError::ZeroWithNegativeExponent);
            }
            return Ok(BigRational::from(self.coeff(0)));
        }
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            acc += BigRational::from(c.clone()) * rat_pow(x, e);
        }
        Ok(acc)
    }

    /// Renders in the canonical text form, e.g. `2*q^-1 + 3`.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }
}

fn rat_pow(x: &BigRational, e: i64) -> BigRational {
    let mag = e
        .unsigned_abs()
        .try_into()
        .expect("exponent magnitude fits u32");
    let p = BigRational::new_raw(x.numer().pow(mag), x.denom().pow(mag)).reduced();
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c.clone());
        }
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: Self) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(mut self, rhs: Self) -> LaurentPolynomial {
        self += &rhs;
        self
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: Self) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Sub for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: Self) -> LaurentPolynomial {
        &self - &rhs
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: Self) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        // monomial factors reduce to a shift and a scale
        if self.terms.len() == 1 {
            let (&e, c) = self.terms.iter().next().unwrap();
            return rhs.scale(c).shift(e);
        }
        if rhs.terms.len() == 1 {
            let (&e, c) = rhs.terms.iter().next().unwrap();
            return self.scale(c).shift(e);
        }
        let lo = self.min_exponent().unwrap() + rhs.min_exponent().unwrap();
        let hi = self.max_exponent().unwrap() + rhs.max_exponent().unwrap();
        let width = usize::try_from(hi - lo).expect("product exponent range") + 1;
        if width <= 1 << 16 {
            // dense accumulation over the product's exponent range
            let mut acc: Vec<BigInt> = vec![BigInt::zero(); width];
            for (e1, c1) in self.terms() {
                for (e2, c2) in rhs.terms() {
                    acc[(e1 + e2 - lo) as usize] += c1 * c2;
                }
            }
            let terms = acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i64, c))
                .collect();
            LaurentPolynomial { terms }
        } else {
            let mut out = LaurentPolynomial::zero();
            for (e1, c1) in self.terms() {
                for (e2, c2) in rhs.terms() {
                    out.add_term(e1 + e2, c1 * c2);
                }
            }
            out
        }
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: Self) -> LaurentPolynomial {
        &self * &rhs
    }
}

// JSON form: object mapping decimal exponent strings to decimal coefficient
// strings, e.g. {"-1":"2","0":"3"}, entries in increasing exponent order.
impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in self.terms() {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = LaurentPolynomial;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from exponent strings to coefficient strings")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
                let mut p = LaurentPolynomial::zero();
                while let Some((k, v)) = access.next_entry::<String, String>()? {
                    let e: i64 = k.parse().map_err(|_| de::Error::custom("bad exponent"))?;
                    let c =
                        BigInt::from_str(&v).map_err(|_| de::Error::custom("bad coefficient"))?;
                    p.add_term(e, c);
                }
                Ok(p)
            }
        }
        deserializer.deserialize_map(V)
    }
}

// Text grammar:
//   poly  := term (("+"|"-") term)*
//   term  := coeff? ("*"? "q" ("^" int)?)?
//   coeff := int (decimal, arbitrary size, optional sign on the first term)
struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            input: s.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn parse_uint(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a digit");
        }
        let digits = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        Ok(BigInt::from_str(digits).unwrap())
    }

    fn parse_exponent(&mut self) -> Result<i64, ParseError> {
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let start = self.pos;
        let mag = self.parse_uint()?;
        let mag: i64 = match mag.try_into() {
            Ok(v) => v,
            Err(_) => {
                self.pos = start;
                return self.err("exponent out of range");
            }
        };
        Ok(if neg { -mag } else { mag })
    }

    /// Parses one term (sign already consumed by the caller).
    fn parse_term(&mut self) -> Result<LaurentPolynomial, ParseError> {
        let coeff = if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let c = self.parse_uint()?;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                if self.peek() != Some(b'q') {
                    return self.err("expected 'q' after '*'");
                }
            }
            Some(c)
        } else {
            None
        };
        if self.peek() == Some(b'q') {
            self.pos += 1;
            let e = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.parse_exponent()?
            } else {
                1
            };
            Ok(LaurentPolynomial::monomial(
                coeff.unwrap_or_else(BigInt::one),
                e,
            ))
        } else if let Some(c) = coeff {
            Ok(LaurentPolynomial::constant(c))
        } else {
            self.err("expected a term")
        }
    }

    fn parse_poly(&mut self) -> Result<LaurentPolynomial, ParseError> {
        self.skip_ws();
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                negate = true;
            }
            Some(b'+') => {
                self.pos += 1;
            }
            _ => {}
        }
        self.skip_ws();
        let mut acc = self.parse_term()?;
        if negate {
            acc = -acc;
        }
        loop {
            self.skip_ws();
            match self.peek() {
                None => return Ok(acc),
                Some(b'+') => {
                    self.pos += 1;
                    self.skip_ws();
                    acc += &self.parse_term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    self.skip_ws();
                    let t = self.parse_term()?;
                    acc = acc - t;
                }
                Some(_) => return self.err("expected '+', '-' or end of input"),
            }
        }
    }
}

impl FromStr for LaurentPolynomial {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser::new(s);
        p.skip_ws();
        if p.peek().is_none() {
            return p.err("empty input");
        }
        p.parse_poly()
    }
}

/// The q-bracket `[t]_{q^e} = (q^{e t} - 1) / (q^e - 1)` as a Laurent
/// polynomial in `q`.
///
/// For `t >= 0` this is `sum_{i=0..t-1} q^{e i}`; negative arguments follow
/// `[-t] = -q^{-e t} [t]`, the unique extension consistent with the closed
/// form. At `e = 0` the value is the constant `t`.
pub fn bracket(t: i64, e: i64) -> LaurentPolynomial {
    if t >= 0 {
        let mut p = LaurentPolynomial::zero();
        for i in 0..t {
            p.add_term(e * i, BigInt::one());
        }
        p
    } else {
        -bracket(-t, e).shift(e * t)
    }
}

/// The q-factorial `[n]! = [n][n-1]...[1]` in base `q^e`; 1 when `n = 0`.
pub fn q_factorial(n: u32, e: i64) -> LaurentPolynomial {
    let mut p = LaurentPolynomial::one();
    for i in 1..=i64::from(n) {
        p = &p * &bracket(i, e);
    }
    p
}

/// The full row `G(n, 0..=n)` of Gaussian binomials in base `q^e`, computed
/// division free via the Pascal recurrence `G(n,k) = G(n-1,k-1) + q^{e k} G(n-1,k)`.
pub fn q_binomial_row(n: u32, e: i64) -> Vec<LaurentPolynomial> {
    let n = n as usize;
    let mut row = vec![LaurentPolynomial::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i + 1);
        next.push(LaurentPolynomial::one());
        for j in 1..i {
            let shifted = row[j].shift(e * j as i64);
            next.push(&row[j - 1] + &shifted);
        }
        next.push(LaurentPolynomial::one());
        row = next;
    }
    row
}

/// The Gaussian binomial coefficient in base `q^e`.
///
/// Returns 0 when `k < 0` or `k > n`. At `e = 0` this is the ordinary
/// binomial coefficient.
pub fn q_binomial(n: u32, k: i64, e: i64) -> LaurentPolynomial {
    if k < 0 || k > i64::from(n) {
        return LaurentPolynomial::zero();
    }
    q_binomial_row(n, e).swap_remove(k as usize)
}

/// Independent oracle for the Gaussian binomial: direct enumeration of all
/// weakly increasing sequences `t_1 <= ... <= t_{n-k}` in `{0..k}`, each
/// contributing `q^{t_1 + ... + t_{n-k}}`.
pub fn q_binomial_monotone_oracle(n: u32, k: u32) -> LaurentPolynomial {
    assert!(k <= n, "requires 0 <= k <= n");
    let len = (n - k) as usize;
    let mut p = LaurentPolynomial::zero();
    let mut seq = vec![0i64; len];
    loop {
        p.add_term(seq.iter().sum(), BigInt::one());
        // next weakly increasing sequence with entries in 0..=k
        let mut i = len;
        loop {
            if i == 0 {
                return p;
            }
            i -= 1;
            if seq[i] < i64::from(k) {
                let v = seq[i] + 1;
                for x in seq.iter_mut().skip(i) {
                    *x = v;
                }
                break;
            }
        }
    }
}

/// Second independent oracle: enumeration of compositions
/// `t_0 + ... + t_k = n - k`, each contributing `q^{0 t_0 + 1 t_1 + ... + k t_k}`.
pub fn q_binomial_composition_oracle(n: u32, k: u32) -> LaurentPolynomial {
    assert!(k <= n, "requires 0 <= k <= n");
    let parts = (k + 1) as usize;
    let total = i64::from(n - k);
    let mut p = LaurentPolynomial::zero();
    let mut comp = vec![0i64; parts];
    comp[0] = total;
    loop {
        let exp: i64 = comp.iter().enumerate().map(|(i, &t)| i as i64 * t).sum();
        p.add_term(exp, BigInt::one());
        // next composition in colex-style order
        let Some(i) = comp[..parts - 1].iter().rposition(|&t| t > 0) else {
            return p;
        };
        let tail: i64 = comp[i + 1..].iter().sum();
        comp[i] -= 1;
        for x in comp[i + 1..].iter_mut() {
            *x = 0;
        }
        comp[i + 1] = tail + 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPolynomial {
        s.parse().unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn add_cancels_and_keeps_canonical_form() {
        assert_eq!(&p("q + 1") + &p("-1"), p("q"));
        assert_eq!(&LaurentPolynomial::zero() + &p("q^2 - 1"), p("q^2 - 1"));
        assert_eq!(&p("q^-1") + &p("q^-1"), p("2*q^-1"));
        assert!((&p("q") - &p("q")).is_zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p("q - 1") * &p("q + 1"), p("q^2 - 1"));
        assert_eq!(&p("q^-2") * &p("q^5"), p("q^3"));
        assert_eq!(&p("3 + q") * &LaurentPolynomial::one(), p("3 + q"));
        assert!((&p("q^2") * &LaurentPolynomial::zero()).is_zero());
    }

    #[test]
    fn monomial_examples() {
        assert_eq!(LaurentPolynomial::monomial(1, 0), LaurentPolynomial::one());
        assert_eq!(LaurentPolynomial::monomial(1, -3), p("q^-3"));
        assert!(LaurentPolynomial::monomial(0, 7).is_zero());
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket(3, 1), p("1 + q + q^2"));
        assert!(bracket(0, 1).is_zero());
        assert_eq!(bracket(-1, 1), p("-q^-1"));
        assert_eq!(bracket(2, -1), p("1 + q^-1"));
        assert_eq!(bracket(4, 0), LaurentPolynomial::constant(4));
        assert_eq!(bracket(-3, 0), LaurentPolynomial::constant(-3));
    }

    #[test]
    fn bracket_closed_form_identity() {
        // [t] * (q - 1) + 1 == q^t for every t in [-10, 10]
        let q_minus_1 = p("q - 1");
        for t in -10..=10 {
            let lhs = &(&bracket(t, 1) * &q_minus_1) + &LaurentPolynomial::one();
            assert_eq!(lhs, LaurentPolynomial::monomial(1, t), "t = {t}");
        }
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(q_factorial(0, 1), LaurentPolynomial::one());
        assert_eq!(q_factorial(3, 1), p("1 + 2*q + 2*q^2 + q^3"));
        assert_eq!(q_factorial(3, 0), LaurentPolynomial::constant(6));
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(4, 2, 1), p("1 + q + 2*q^2 + q^3 + q^4"));
        assert_eq!(q_binomial(7, 0, 1), LaurentPolynomial::one());
        assert_eq!(q_binomial(5, 2, 0), LaurentPolynomial::constant(10));
        assert!(q_binomial(4, -1, 1).is_zero());
        assert!(q_binomial(4, 5, 1).is_zero());
    }

    #[test]
    fn q_binomial_oracle_examples() {
        assert_eq!(
            q_binomial_monotone_oracle(4, 2),
            p("1 + q + 2*q^2 + q^3 + q^4")
        );
        assert_eq!(q_binomial_monotone_oracle(5, 5), LaurentPolynomial::one());
        assert_eq!(q_binomial_monotone_oracle(2, 1), p("1 + q"));
        assert_eq!(
            q_binomial_composition_oracle(4, 2),
            p("1 + q + 2*q^2 + q^3 + q^4")
        );
        assert_eq!(
            q_binomial_composition_oracle(6, 0),
            LaurentPolynomial::one()
        );
        assert_eq!(q_binomial_composition_oracle(3, 2), p("1 + q + q^2"));
    }

    #[test]
    fn q_binomial_matches_both_oracles_and_symmetry() {
        for n in 0..=10u32 {
            for k in 0..=n {
                let g = q_binomial(n, i64::from(k), 1);
                assert_eq!(g, q_binomial_monotone_oracle(n, k), "monotone ({n},{k})");
                assert_eq!(
                    g,
                    q_binomial_composition_oracle(n, k),
                    "composition ({n},{k})"
                );
                assert_eq!(g, q_binomial(n, i64::from(n - k), 1), "symmetry ({n},{k})");
            }
        }
    }

    #[test]
    fn q_binomial_symmetry_other_bases() {
        for e in [-2i64, -1, 0, 2, 3] {
            for n in 0..=8u32 {
                for k in 0..=n {
                    assert_eq!(
                        q_binomial(n, i64::from(k), e),
                        q_binomial(n, i64::from(n - k), e),
                        "({n},{k}) base {e}"
                    );
                }
            }
        }
    }

    #[test]
    fn q_binomial_product_clearance() {
        for e in [-2i64, -1, 0, 1, 2] {
            for n in 0..=10u32 {
                for k in 0..=n {
                    let lhs = &(&q_binomial(n, i64::from(k), e) * &q_factorial(k, e))
                        * &q_factorial(n - k, e);
                    assert_eq!(lhs, q_factorial(n, e), "({n},{k}) base {e}");
                }
            }
        }
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p("1 + q + q^2").eval_at(&rat(1, 1)), Ok(rat(3, 1)));
        assert_eq!(p("q^-1").eval_at(&rat(2, 1)), Ok(rat(1, 2)));
        assert_eq!(p("q^2 - 1").eval_at(&rat(0, 1)), Ok(rat(-1, 1)));
        assert_eq!(
            p("q^-1").eval_at(&rat(0, 1)),
            Err(EvalError::ZeroWithNegativeExponent)
        );
        assert_eq!(p("1 - 2*q^-3").eval_at(&rat(-2, 3)), Ok(rat(31, 4)));
    }

    #[test]
    fn display_examples() {
        assert_eq!(p("2*q^-1 + 3").to_string(), "2*q^-1 + 3");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        assert_eq!(p("q^2 - 1").to_string(), "-1 + q^2");
        assert_eq!(p("-q").to_string(), "-q");
        assert_eq!(p("1 - q + q^2").to_string(), "1 - q + q^2");
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = "q^".parse::<LaurentPolynomial>().unwrap_err();
        assert_eq!(e.position, 2);
        let e = "1 + ?".parse::<LaurentPolynomial>().unwrap_err();
        assert_eq!(e.position, 4);
        assert!("".parse::<LaurentPolynomial>().is_err());
        assert!("2*".parse::<LaurentPolynomial>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let poly = p("2*q^-1 + 3 - 5*q^4");
        let json = serde_json::to_string(&poly).unwrap();
        assert_eq!(json, r#"{"-1":"2","0":"3","4":"-5"}"#);
        let back: LaurentPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, poly);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPolynomial> {
        prop::collection::vec((-8i64..=8, -1_000_000i64..=1_000_000), 0..6)
            .prop_map(LaurentPolynomial::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn text_round_trip(a in arb_poly()) {
            let s = a.to_string();
            let back: LaurentPolynomial = s.parse().unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn eval_at_one_is_coefficient_sum(a in arb_poly()) {
            let one = BigRational::from(BigInt::from(1));
            prop_assert_eq!(a.eval_at(&one).unwrap(), BigRational::from(a.coeff_sum()));
        }
    }
}
