use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::num::Rational;

/// Coefficient backend for a session.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    Rational,
    Prime(u64),
}

impl Backend {
    pub fn prime(p: u64) -> Result<Self> {
        if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(Error::precondition("backend", format!("{p} is not prime")));
        }
        Ok(Backend::Prime(p))
    }

    pub fn coeff(&self, q: &Rational) -> Result<Coeff> {
        match *self {
            Backend::Rational => Ok(Coeff::Q(q.clone())),
            Backend::Prime(p) => Coeff::reduce(q, p),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            Backend::Rational => 0,
            Backend::Prime(p) => p,
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Rational => write!(f, "q"),
            Backend::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl std::str::FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "q" | "Q" => Ok(Backend::Rational),
            other => {
                let p = other
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::Parse { pos: 0, msg: format!("bad backend {s:?}") })?;
                Backend::prime(p)
            }
        }
    }
}

/// A coefficient in Q or in F_p.
///
/// Rational values meet F_p values by reduction mod p; arithmetic panics if a
/// rational with denominator divisible by p is mixed with an F_p value.
#[derive(Clone, Debug)]
pub enum Coeff {
    Q(Rational),
    Fp { v: u64, p: u64 },
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    s0.rem_euclid(p as i128) as u64
}

impl Coeff {
    pub fn one() -> Self {
        Coeff::Q(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Coeff::Q(Rational::from_integer(BigInt::from(n)))
    }

    pub fn reduce(q: &Rational, p: u64) -> Result<Self> {
        let pb = BigInt::from(p);
        let d = q.denom().mod_floor(&pb);
        if d.is_zero() {
            return Err(Error::NotReducible { value: q.to_string(), p });
        }
        let n = q.numer().mod_floor(&pb).to_u64().expect("residue fits");
        let d = d.to_u64().expect("residue fits");
        Ok(Coeff::Fp { v: ((n as u128 * mod_inverse(d, p) as u128) % p as u128) as u64, p })
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            Coeff::Q(_) => None,
            Coeff::Fp { p, .. } => Some(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_zero(),
            Coeff::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_one(),
            Coeff::Fp { v, .. } => *v == 1,
        }
    }

    /// Whether the display form carries a leading minus sign.
    pub fn is_negative(&self) -> bool {
        matches!(self, Coeff::Q(q) if q.is_negative())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Coeff::Q(q) => Some(q),
            Coeff::Fp { .. } => None,
        }
    }

    fn to_fp(&self, p: u64) -> u64 {
        match self {
            Coeff::Fp { v, p: p2 } => {
                assert_eq!(p, *p2, "mixed prime fields F_{p} and F_{p2}");
                *v
            }
            Coeff::Q(q) => match Coeff::reduce(q, p) {
                Ok(Coeff::Fp { v, .. }) => v,
                _ => panic!("rational {q} has no image in F_{p}"),
            },
        }
    }

    fn binop(
        &self,
        other: &Coeff,
        fq: impl Fn(&Rational, &Rational) -> Rational,
        fp: impl Fn(u64, u64, u64) -> u64,
    ) -> Coeff {
        match (self, other) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(fq(a, b)),
            (Coeff::Fp { p, .. }, _) | (_, Coeff::Fp { p, .. }) => {
                let p = *p;
                Coeff::Fp { v: fp(self.to_fp(p), other.to_fp(p), p), p }
            }
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        self.binop(other, |a, b| a + b, |a, b, p| ((a as u128 + b as u128) % p as u128) as u64)
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.binop(other, |a, b| a - b, |a, b, p| ((a as u128 + p as u128 - b as u128) % p as u128) as u64)
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        self.binop(other, |a, b| a * b, |a, b, p| ((a as u128 * b as u128) % p as u128) as u64)
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Q(q) => Coeff::Q(-q),
            Coeff::Fp { v, p } => Coeff::Fp { v: (p - v) % p, p: *p },
        }
    }

    pub fn inv(&self) -> Result<Coeff> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Coeff::Q(q) => Coeff::Q(q.recip()),
            Coeff::Fp { v, p } => Coeff::Fp { v: mod_inverse(*v, *p), p: *p },
        })
    }

    pub fn pow(&self, k: u32) -> Coeff {
        (0..k).fold(Coeff::one(), |acc, _| acc.mul(self))
    }

    pub fn to_backend(&self, b: Backend) -> Result<Coeff> {
        match (self, b) {
            (Coeff::Q(q), b) => b.coeff(q),
            (c @ Coeff::Fp { p, .. }, Backend::Prime(p2)) if *p == p2 => Ok(c.clone()),
            (Coeff::Fp { p, .. }, _) => Err(Error::precondition("backend", format!("cannot lift F_{p} values"))),
        }
    }
}

impl PartialEq for Coeff {
    fn eq(&self, other: &Coeff) -> bool {
        match (self, other) {
            (Coeff::Q(a), Coeff::Q(b)) => a == b,
            (Coeff::Fp { p, .. }, x) | (x, Coeff::Fp { p, .. }) => {
                let p = *p;
                match (self.clone().reduced(p), x.clone().reduced(p)) {
                    (Some(a), Some(b)) => a == b,
                    _ => false,
                }
            }
        }
    }
}

impl Eq for Coeff {}

impl Coeff {
    fn reduced(self, p: u64) -> Option<u64> {
        match self {
            Coeff::Fp { v, p: p2 } => (p == p2).then_some(v),
            Coeff::Q(q) => match Coeff::reduce(&q, p) {
                Ok(Coeff::Fp { v, .. }) => Some(v),
                _ => None,
            },
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Q(q) => write!(f, "{q}"),
            Coeff::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}
