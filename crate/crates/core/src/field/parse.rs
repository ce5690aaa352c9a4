//! Expression parser for elements of K and K(X).
//!
//! Accepts sums, products, quotients and powers of integers, `t` and `X`.
//! `t` takes rational exponents written `t^(p/q)`; anything else takes
//! integer exponents. Everything printed by the `Display` impls re-parses.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::elem::FieldElem;
use super::ratfun::RationalFunction;
use crate::error::{Error, Result};
use crate::num::Rational;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn signed_integer(&mut self) -> Result<BigInt> {
        let neg = self.eat(b'-');
        let n = self.integer()?;
        Ok(if neg { -n } else { n })
    }

    /// `int` or `( [-]int [/ int] )` or `-int`.
    fn exponent(&mut self) -> Result<Rational> {
        if self.eat(b'(') {
            let n = self.signed_integer()?;
            let d = if self.eat(b'/') { self.integer()? } else { BigInt::one() };
            if d.is_zero() {
                return self.err("zero denominator in exponent");
            }
            self.expect(b')')?;
            Ok(Rational::new(n, d))
        } else {
            Ok(Rational::from_integer(self.signed_integer()?))
        }
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = if self.eat(b'-') {
            self.term()?.neg()
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.factor()?);
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let rhs = self.factor()?;
                acc = acc.div(&rhs).map_err(|_| Error::Parse { pos: at, msg: "division by zero".into() })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<RationalFunction> {
        let at = self.pos;
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let e = self.exponent()?;
        if e.is_integer() {
            let k: i64 = e
                .to_integer()
                .try_into()
                .map_err(|_| Error::Parse { pos: at, msg: "exponent too large".into() })?;
            return base.pow(k).map_err(|_| Error::Parse { pos: at, msg: "zero to a negative power".into() });
        }
        // Rational powers only for pure t-powers.
        match base.as_constant() {
            Some(c) if c.num().is_monomial() && c.is_sum() && c.num().terms()[0].1.is_one() => {
                let exp = &c.num().terms()[0].0 * &e;
                Ok(RationalFunction::constant(FieldElem::t_pow(exp)))
            }
            _ => Err(Error::Parse { pos: at, msg: "rational exponents apply to powers of t only".into() }),
        }
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b't') => {
                self.pos += 1;
                Ok(RationalFunction::constant(FieldElem::t_pow(Rational::one())))
            }
            Some(b'X') => {
                self.pos += 1;
                Ok(RationalFunction::x())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RationalFunction::constant(FieldElem::from_rational(Rational::from_integer(n))))
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an element of K(X).
pub fn parse_rational_function(s: &str) -> Result<RationalFunction> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let f = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(f)
}

/// Parses an element of K; `X` is rejected.
pub fn parse_field_elem(s: &str) -> Result<FieldElem> {
    let f = parse_rational_function(s)?;
    f.as_constant()
        .ok_or_else(|| Error::Parse { pos: 0, msg: format!("expected an element of K, found a function of X: {s:?}") })
}

impl std::str::FromStr for FieldElem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_field_elem(s)
    }
}

impl std::str::FromStr for RationalFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_rational_function(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::poly::Poly;
    use crate::num::{int, rat, Val};

    #[test]
    fn parses_the_grammar() {
        let x: FieldElem = "1/2*t^(1/3) - 3 + t".parse().unwrap();
        assert_eq!(x.val(), Val::Finite(int(0)));
        let f: RationalFunction = "(X^2 - (1 + t))/(X - (t^(1/3)))".parse().unwrap();
        let num = Poly::x().pow(2).sub(&Poly::constant("1 + t".parse().unwrap()));
        let den = Poly::linear(&FieldElem::t_pow(rat(1, 3)));
        assert_eq!(f, RationalFunction::new(num, den).unwrap());
        assert_eq!("t^(-1/2)".parse::<FieldElem>().unwrap(), FieldElem::t_pow(rat(-1, 2)));
        assert_eq!("(t)/(t^3 + t)".parse::<FieldElem>().unwrap().val(), Val::Finite(int(0)));
    }

    #[test]
    fn parse_errors_carry_positions() {
        match "X + * 2".parse::<RationalFunction>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!("X^(1/2)".parse::<RationalFunction>().is_err());
        assert!("X".parse::<FieldElem>().is_err());
        assert!("1/(t - t)".parse::<FieldElem>().is_err());
    }
}
