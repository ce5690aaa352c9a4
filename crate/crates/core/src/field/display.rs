use std::fmt;

use num_traits::{One, Signed, Zero};

use super::coeff::Coeff;
use super::elem::FieldElem;
use super::poly::Poly;
use super::ratfun::RationalFunction;
use super::sparse::SparseSum;
use crate::num::Rational;

fn t_part(e: &Rational) -> String {
    if e.is_one() {
        "t".to_string()
    } else if e.is_integer() && e.is_positive() {
        format!("t^{e}")
    } else {
        format!("t^({e})")
    }
}

impl fmt::Display for SparseSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            let body = match (e.is_zero(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => t_part(e),
                (false, false) => format!("{mag}*{}", t_part(e)),
            };
            match (i, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_sum() {
            write!(f, "{}", self.num())
        } else {
            write!(f, "({})/({})", self.num(), self.den())
        }
    }
}

impl FieldElem {
    fn is_minus_one(&self) -> bool {
        self.neg().is_one()
    }

    /// Whether the printed form starts with a minus sign that negation removes.
    fn prints_negative(&self) -> bool {
        self.is_sum() && self.num().lowest().is_some_and(|(_, c): &(Rational, Coeff)| c.is_negative())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(deg) = self.degree() else {
            return write!(f, "0");
        };
        let mut first = true;
        for k in (0..=deg).rev() {
            let c = &self.coeffs()[k];
            if c.is_zero() {
                continue;
            }
            let x = match k {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{k}"),
            };
            let (neg, body) = if k > 0 && c.is_one() {
                (false, x)
            } else if k > 0 && c.is_minus_one() {
                (true, x)
            } else {
                let (neg, mag) = if c.prints_negative() { (true, c.neg()) } else { (false, c.clone()) };
                let star = if k > 0 { "*" } else { "" };
                (neg, format!("({mag}){star}{x}"))
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den().is_constant() && self.den().coeff(0).is_one() {
            write!(f, "{}", self.num())
        } else {
            write!(f, "({})/({})", self.num(), self.den())
        }
    }
}

/// Elements and functions serialize as their printed form, which re-parses.
macro_rules! serialize_as_string {
    ($($t:ty),*) => {$(
        impl serde::Serialize for $t {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.serialize_str(&self.to_string())
            }
        }
    )*};
}

serialize_as_string!(FieldElem, Poly, RationalFunction);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        let x: FieldElem = "t + 1 - 1/2*t^(1/3)".parse().unwrap();
        assert_eq!(x.to_string(), "1 - 1/2*t^(1/3) + t");
        let f: RationalFunction = "(X^2 - (1 + t))/(X - (t^(1/3)))".parse().unwrap();
        assert_eq!(f.to_string(), "(X^2 - (1 + t))/(X - (t^(1/3)))");
        let g: RationalFunction = "X/t".parse().unwrap();
        assert_eq!(g.to_string(), "(t^(-1))*X");
        let h: FieldElem = "t/(1 - t)".parse().unwrap();
        assert_eq!(h.to_string(), "(t)/(1 - t)");
        assert_eq!(FieldElem::zero().to_string(), "0");
    }
}
