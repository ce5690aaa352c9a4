//! Exact rationals, extended values, and quadratic-irrational breadths.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p`, `-p` or `p/q`, surrounding whitespace allowed.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = |msg: &str| Error::Parse { pos: 0, msg: format!("{msg}: {s:?}") };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad("bad rational numerator"))?;
    let d = BigInt::from_str(d).map_err(|_| bad("bad rational denominator"))?;
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    let n = q.numer().to_f64().unwrap_or(f64::NAN);
    let d = q.denom().to_f64().unwrap_or(f64::NAN);
    if n.is_finite() && d.is_finite() {
        n / d
    } else {
        // Large operands: scale down by a common power of two first.
        let shift = q.denom().bits().max(q.numer().bits()).saturating_sub(1000);
        let n = (q.numer() >> shift).to_f64().unwrap_or(0.0);
        let d = (q.denom() >> shift).to_f64().unwrap_or(1.0);
        n / d
    }
}

/// Largest integer strictly below `q`.
pub fn integer_below(q: &Rational) -> Rational {
    let f = q.floor();
    if &f == q {
        f - Rational::one()
    } else {
        f
    }
}

/// serde adapter writing rationals as `"p/q"` strings.
pub mod serde_rational {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// An element of Q ∪ {∞}, the codomain of the valuation on K.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Val {
    Finite(Rational),
    Infinity,
}

impl Val {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Val::Finite(q) => Some(q),
            Val::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Val::Infinity)
    }

    /// Compares against a breadth, which may be irrational.
    pub fn cmp_breadth(&self, b: &Breadth) -> Ordering {
        b.cmp_val(self).reverse()
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Finite(q) => write!(f, "{q}"),
            Val::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for Val {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl From<Rational> for Val {
    fn from(q: Rational) -> Self {
        Val::Finite(q)
    }
}

/// Sign of `x + y·√d` for a positive non-square `d`.
pub fn sign_surd(x: &Rational, y: &Rational, d: &BigInt) -> Ordering {
    let zero = Rational::zero();
    match (x.cmp(&zero), y.cmp(&zero)) {
        (sx, Ordering::Equal) => sx,
        (Ordering::Equal, sy) => sy,
        (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
        (Ordering::Less, Ordering::Less) => Ordering::Less,
        (sx, _) => {
            // Opposite signs: the larger square wins. Equality is impossible.
            let lhs = x * x;
            let rhs = y * y * Rational::from_integer(d.clone());
            if lhs > rhs {
                sx
            } else {
                sx.reverse()
            }
        }
    }
}

/// The real number `a + b·√d` with `b ≠ 0` and `d > 1` squarefree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadIrrational {
    a: Rational,
    b: Rational,
    d: BigInt,
}

fn squarefree_split(d: &BigInt) -> (BigInt, BigInt) {
    // d = f² · r with r squarefree; trial division is enough for desk-sized radicands.
    let mut r = d.clone();
    let mut f = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= r {
        let p2 = &p * &p;
        while (&r % &p2).is_zero() {
            r /= &p2;
            f *= &p;
        }
        p += 1;
    }
    (f, r)
}

impl QuadIrrational {
    pub fn new(a: Rational, b: Rational, d: BigInt) -> Result<Self> {
        if d <= BigInt::one() {
            return Err(Error::precondition("radicand", format!("need d > 1, got {d}")));
        }
        let (f, r) = squarefree_split(&d);
        if r.is_one() {
            return Err(Error::precondition("radicand", format!("{d} is a perfect square")));
        }
        if b.is_zero() {
            return Err(Error::precondition("radicand", "b must be nonzero"));
        }
        Ok(QuadIrrational { a, b: b * Rational::from_integer(f), d: r })
    }

    pub fn sqrt(d: i64) -> Result<Self> {
        Self::new(Rational::zero(), Rational::one(), BigInt::from(d))
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    /// Exact comparison `self` vs `q`.
    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        sign_surd(&(&self.a - q), &self.b, &self.d)
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * self.d.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    /// Partial quotients of the regular continued fraction.
    pub fn partial_quotients(&self) -> PartialQuotients {
        // Write a + b√d = (P + √D)/Q with integers P, D, Q and Q | D − P².
        let l = self.a.denom().lcm(self.b.denom());
        let p0 = self.a.numer() * (&l / self.a.denom());
        let bn = self.b.numer() * (&l / self.b.denom());
        let mut dd = &bn * &bn * &self.d;
        let (mut p, mut q) = if bn.is_negative() { (-p0, -l) } else { (p0, l) };
        if !((&dd - &p * &p) % &q).is_zero() {
            let aq = q.abs();
            p *= &aq;
            dd *= &q * &q;
            q *= &aq;
        }
        let r = dd.sqrt();
        PartialQuotients { p, q, d: dd, r }
    }

    /// Strictly increasing rational approximations from below.
    ///
    /// Index 0 is `⌊x⌋ − 1`; index `n ≥ 1` is the even-indexed convergent
    /// `p_{2(n−1)}/q_{2(n−1)}`, so for √2 the list reads 0, 1, 7/5, 41/29, …
    pub fn lower_approximant(&self, n: usize) -> Rational {
        let mut pq = self.partial_quotients();
        let a0 = pq.next().expect("continued fractions are infinite");
        if n == 0 {
            return Rational::from_integer(a0 - 1);
        }
        let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::zero());
        let (mut p, mut q) = (a0, BigInt::one());
        for _ in 0..2 * (n - 1) {
            let a = pq.next().expect("continued fractions are infinite");
            let p_next = &a * &p + &p_prev;
            let q_next = &a * &q + &q_prev;
            p_prev = std::mem::replace(&mut p, p_next);
            q_prev = std::mem::replace(&mut q, q_next);
        }
        Rational::new(p, q)
    }
}

/// Iterator over continued-fraction digits of `(P + √D)/Q`.
#[derive(Clone, Debug)]
pub struct PartialQuotients {
    p: BigInt,
    q: BigInt,
    d: BigInt,
    r: BigInt,
}

impl Iterator for PartialQuotients {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let a = if self.q.is_positive() {
            (&self.p + &self.r).div_floor(&self.q)
        } else {
            -(&self.p + &self.r).div_floor(&(-&self.q)) - 1
        };
        let p = &a * &self.q - &self.p;
        let q = (&self.d - &p * &p) / &self.q;
        self.p = p;
        self.q = q;
        Some(a)
    }
}

impl fmt::Display for QuadIrrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let root = format!("sqrt({})", self.d);
        let babs = self.b.abs();
        let bterm = if babs.is_one() { root } else { format!("{babs}*{root}") };
        match (self.a.is_zero(), self.b.is_negative()) {
            (true, false) => write!(f, "{bterm}"),
            (true, true) => write!(f, "-{bterm}"),
            (false, false) => write!(f, "{} + {bterm}", self.a),
            (false, true) => write!(f, "{} - {bterm}", self.a),
        }
    }
}

/// Breadth of a pseudo-convergent sequence: the limit of its gauge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Breadth {
    Rational(Rational),
    Quad(QuadIrrational),
    Infinity,
}

impl Breadth {
    pub fn is_finite(&self) -> bool {
        !matches!(self, Breadth::Infinity)
    }

    /// Torsion over Γ_v = Q means rational.
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Breadth::Rational(q) => Some(q),
            _ => None,
        }
    }

    /// Exact comparison `self` vs `q`.
    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        match self {
            Breadth::Rational(r) => r.cmp(q),
            Breadth::Quad(x) => x.cmp_rational(q),
            Breadth::Infinity => Ordering::Greater,
        }
    }

    /// Exact comparison `self` vs an extended value.
    pub fn cmp_val(&self, v: &Val) -> Ordering {
        match (self, v) {
            (Breadth::Infinity, Val::Infinity) => Ordering::Equal,
            (_, Val::Infinity) => Ordering::Less,
            (_, Val::Finite(q)) => self.cmp_rational(q),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Breadth::Rational(q) => rational_to_f64(q),
            Breadth::Quad(x) => x.to_f64(),
            Breadth::Infinity => f64::INFINITY,
        }
    }

    /// Multiplies a finite breadth by a nonzero integer.
    pub fn scale(&self, k: i64) -> Breadth {
        let k = int(k);
        match self {
            Breadth::Rational(q) => Breadth::Rational(q * &k),
            Breadth::Quad(x) => Breadth::Quad(QuadIrrational {
                a: &x.a * &k,
                b: &x.b * &k,
                d: x.d.clone(),
            }),
            Breadth::Infinity => Breadth::Infinity,
        }
    }
}

impl fmt::Display for Breadth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Breadth::Rational(q) => write!(f, "{q}"),
            Breadth::Quad(x) => write!(f, "{x}"),
            Breadth::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for Breadth {
    type Err = Error;

    /// Accepts `inf`, a rational, or `[a] (+|-) [b*]sqrt(d)`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "inf" || compact == "∞" {
            return Ok(Breadth::Infinity);
        }
        let Some(at) = compact.find("sqrt(") else {
            return parse_rational(&compact).map(Breadth::Rational);
        };
        let bad = || Error::Parse { pos: 0, msg: format!("bad breadth literal {s:?}") };
        let rest = &compact[at + 5..];
        let close = rest.find(')').ok_or_else(bad)?;
        if close + 1 != rest.len() {
            return Err(bad());
        }
        let d = BigInt::from_str(&rest[..close]).map_err(|_| bad())?;
        let prefix = compact[..at].strip_suffix('*').unwrap_or(&compact[..at]);
        let split = prefix
            .char_indices()
            .rev()
            .find(|&(i, c)| i > 0 && (c == '+' || c == '-') && !prefix[..i].ends_with('/'))
            .map(|(i, _)| i);
        let (a, coeff) = match split {
            Some(i) => (parse_rational(&prefix[..i])?, &prefix[i..]),
            None => (Rational::zero(), prefix),
        };
        let coeff = coeff.strip_prefix('+').unwrap_or(coeff);
        let b = match coeff {
            "" => Rational::one(),
            "-" => -Rational::one(),
            c => parse_rational(c)?,
        };
        if d.is_zero() || b.is_zero() {
            return Ok(Breadth::Rational(a));
        }
        let (f, r) = squarefree_split(&d);
        if r.is_one() {
            return Ok(Breadth::Rational(a + b * Rational::from_integer(f)));
        }
        QuadIrrational::new(a, b, d).map(Breadth::Quad)
    }
}

impl Serialize for Breadth {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Breadth {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_lower_approximants() {
        let r2 = QuadIrrational::sqrt(2).unwrap();
        let got: Vec<Rational> = (0..5).map(|n| r2.lower_approximant(n)).collect();
        assert_eq!(got, vec![int(0), int(1), rat(7, 5), rat(41, 29), rat(239, 169)]);
    }

    #[test]
    fn partial_quotients_of_general_surd() {
        // (1 + √5)/2 = [1; 1, 1, ...]
        let phi = QuadIrrational::new(rat(1, 2), rat(1, 2), BigInt::from(5)).unwrap();
        let digits: Vec<BigInt> = phi.partial_quotients().take(6).collect();
        assert!(digits.iter().all(|a| a.is_one()));
        // 1 − √2 = [-1; 1, 1, 2, 2, ...]
        let x = QuadIrrational::new(int(1), int(-1), BigInt::from(2)).unwrap();
        let digits: Vec<i64> = x.partial_quotients().take(5).map(|a| a.to_i64().unwrap()).collect();
        assert_eq!(digits, vec![-1, 1, 1, 2, 2]);
    }

    #[test]
    fn surd_comparisons() {
        let r2 = QuadIrrational::sqrt(2).unwrap();
        assert_eq!(r2.cmp_rational(&rat(141, 100)), Ordering::Greater);
        assert_eq!(r2.cmp_rational(&rat(142, 100)), Ordering::Less);
        let neg = QuadIrrational::new(int(3), int(-2), BigInt::from(2)).unwrap();
        // 3 − 2√2 ≈ 0.1716
        assert_eq!(neg.cmp_rational(&rat(17, 100)), Ordering::Greater);
        assert_eq!(neg.cmp_rational(&rat(18, 100)), Ordering::Less);
    }

    #[test]
    fn breadth_literals_round_trip() {
        for s in ["inf", "1", "-3/2", "sqrt(2)", "-sqrt(3)", "1/2 + 3*sqrt(5)", "2 - 1/3*sqrt(7)"] {
            let b: Breadth = s.parse().unwrap();
            assert_eq!(b.to_string().parse::<Breadth>().unwrap(), b, "{s}");
        }
        assert_eq!("sqrt(8)".parse::<Breadth>().unwrap().to_string(), "2*sqrt(2)");
        assert_eq!("sqrt(4)".parse::<Breadth>().unwrap(), Breadth::Rational(int(2)));
    }

    #[test]
    fn val_orders_infinity_last() {
        assert!(Val::Finite(int(100)) < Val::Infinity);
        let b = Breadth::Quad(QuadIrrational::sqrt(2).unwrap());
        assert_eq!(Val::Finite(int(1)).cmp_breadth(&b), Ordering::Less);
        assert_eq!(Val::Infinity.cmp_breadth(&b), Ordering::Greater);
        assert_eq!(Val::Infinity.cmp_breadth(&Breadth::Infinity), Ordering::Equal);
    }
}
