use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::coeff::{Backend, Coeff};
use super::sparse::SparseSum;
use crate::error::{Error, Result};
use crate::num::{Rational, Val};

/// An element of K = Q(t^Q), kept as a fraction of sparse sums.
///
/// The denominator is either `1` or a non-monomial sum whose lowest term is
/// `1·t⁰`. Equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct FieldElem {
    num: SparseSum,
    den: SparseSum,
}

impl FieldElem {
    pub fn zero() -> Self {
        FieldElem { num: SparseSum::zero(), den: SparseSum::one() }
    }

    pub fn one() -> Self {
        FieldElem { num: SparseSum::one(), den: SparseSum::one() }
    }

    pub fn from_sum(num: SparseSum) -> Self {
        FieldElem { num, den: SparseSum::one() }
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::from_sum(SparseSum::constant(Coeff::Q(q)))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_sum(SparseSum::constant(Coeff::from_int(n)))
    }

    pub fn from_coeff(c: Coeff) -> Self {
        Self::from_sum(SparseSum::constant(c))
    }

    /// `t^e`.
    pub fn t_pow(e: Rational) -> Self {
        Self::from_sum(SparseSum::monomial(Coeff::one(), e))
    }

    /// `c·t^e`.
    pub fn monomial(c: Coeff, e: Rational) -> Self {
        Self::from_sum(SparseSum::monomial(c, e))
    }

    pub fn new(num: SparseSum, den: SparseSum) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: SparseSum, den: SparseSum) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return FieldElem { num, den };
        }
        let (e, c) = den.lowest().expect("nonzero denominator").clone();
        let c_inv = c.inv().expect("nonzero coefficient");
        let shift = -e;
        if den.is_monomial() {
            return FieldElem { num: num.mul_monomial(&c_inv, &shift), den: SparseSum::one() };
        }
        let num = num.mul_monomial(&c_inv, &shift);
        let den = den.mul_monomial(&c_inv, &shift);
        match num.try_div_exact(&den) {
            Some(q) => FieldElem { num: q, den: SparseSum::one() },
            None => FieldElem { num, den },
        }
    }

    pub fn num(&self) -> &SparseSum {
        &self.num
    }

    pub fn den(&self) -> &SparseSum {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Whether the element is a finite sum (denominator 1).
    pub fn is_sum(&self) -> bool {
        self.den.is_one()
    }

    /// `val(num) − val(den)`, ∞ for zero.
    pub fn val(&self) -> Val {
        match (self.num.val(), self.den.val()) {
            (Val::Finite(a), Val::Finite(b)) => Val::Finite(a - b),
            _ => Val::Infinity,
        }
    }

    /// Leading coefficient `c` with `x = c·t^{val x}·(1 + higher)`.
    pub fn leading_coeff(&self) -> Option<Coeff> {
        let (_, c) = self.num.lowest()?;
        let (_, d) = self.den.lowest()?;
        Some(c.mul(&d.inv().ok()?))
    }

    pub fn neg(&self) -> Self {
        FieldElem { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let op = |a: &SparseSum, b: &SparseSum| if negate { a.sub(b) } else { a.add(b) };
        if self.den == other.den {
            return Self::normalized(op(&self.num, &other.num), self.den.clone());
        }
        if other.den.is_one() {
            return Self::normalized(op(&self.num, &other.num.mul(&self.den)), self.den.clone());
        }
        if self.den.is_one() {
            return Self::normalized(op(&self.num.mul(&other.den), &other.num), other.den.clone());
        }
        if let Some(q) = other.den.try_div_exact(&self.den) {
            return Self::normalized(op(&self.num.mul(&q), &other.num), other.den.clone());
        }
        if let Some(q) = self.den.try_div_exact(&other.den) {
            return Self::normalized(op(&self.num, &other.num.mul(&q)), self.den.clone());
        }
        Self::normalized(
            op(&self.num.mul(&other.den), &other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return FieldElem { num: self.num.mul(&other.num), den: SparseSum::one() };
        }
        Self::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let k = k.unsigned_abs() as u32;
        Ok(Self::normalized(base.num.pow(k), base.den.pow(k)))
    }

    pub fn to_backend(&self, b: Backend) -> Result<Self> {
        let den = self.den.to_backend(b)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.num.to_backend(b)?, den))
    }

    /// Terms of the Hahn expansion of `self` with exponent at most `p`.
    pub fn expand(&self, p: &Rational) -> SparseSum {
        if self.den.is_one() {
            return self.num.truncate(p);
        }
        let Val::Finite(vn) = self.num.val() else {
            return SparseSum::zero();
        };
        let r = p - &vn;
        if r < Rational::zero() {
            return SparseSum::zero();
        }
        // den = 1 + h with val(h) > 0 by normalization.
        let minus_h = SparseSum::one().sub(&self.den);
        let eps = minus_h.lowest().map(|(e, _)| e.clone()).expect("non-monomial denominator");
        let steps = (&r / &eps).floor();
        let mut power = SparseSum::one();
        let mut inv = SparseSum::one();
        let mut k = Rational::zero();
        while k < steps {
            power = power.mul(&minus_h).truncate(&r);
            inv = inv.add(&power);
            k += Rational::one();
        }
        self.num.mul(&inv).truncate(p)
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for FieldElem {}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                FieldElem::$method(self, rhs)
            }
        }
        impl $trait<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                FieldElem::$method(&self, &rhs)
            }
        }
        impl $trait<&FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                FieldElem::$method(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::neg(self)
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{int, rat};

    fn t(e: Rational) -> FieldElem {
        FieldElem::t_pow(e)
    }

    #[test]
    fn valuation_of_fraction() {
        let x = (t(int(1)) + t(int(2))).div(&t(int(3))).unwrap();
        assert_eq!(x.val(), Val::Finite(int(-2)));
        assert_eq!(FieldElem::zero().val(), Val::Infinity);
        assert_eq!((t(rat(1, 2)) + t(int(2))).val(), Val::Finite(rat(1, 2)));
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(t(rat(1, 2)) * t(rat(1, 3)), t(rat(5, 6)));
        let u = (FieldElem::one() + t(int(1))).inv().unwrap();
        assert_eq!(u.val(), Val::Finite(int(0)));
        assert_eq!(t(int(1)) - t(int(1)), FieldElem::zero());
        assert_eq!(FieldElem::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn fractions_simplify_when_divisible() {
        let one_minus_t = FieldElem::one() - t(int(1));
        let x = (FieldElem::one() - t(int(2))).div(&one_minus_t).unwrap();
        assert!(x.is_sum());
        assert_eq!(x, FieldElem::one() + t(int(1)));
    }

    #[test]
    fn geometric_expansion() {
        let beta = t(int(1)).div(&(FieldElem::one() - t(int(1)))).unwrap();
        let e = beta.expand(&int(3));
        let exps: Vec<Rational> = e.terms().iter().map(|(e, _)| e.clone()).collect();
        assert_eq!(exps, vec![int(1), int(2), int(3)]);
        assert_eq!((beta - FieldElem::from_sum(e)).val(), Val::Finite(int(4)));
    }
}
