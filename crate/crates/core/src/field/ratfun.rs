use super::coeff::Backend;
use super::elem::FieldElem;
use super::poly::Poly;
use super::sparse::SparseSum;
use crate::error::{Error, Result};

/// An element of K(X).
///
/// Construction cancels common powers of X, folds constant denominators,
/// and clears coefficient denominators so that evaluation runs on sparse sums.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(Poly::zero()));
        }
        let k = num.lowest_index().unwrap().min(den.lowest_index().unwrap());
        let (mut num, mut den) = (num.shift_down(k), den.shift_down(k));
        if den.is_constant() {
            num = num.scale(&den.coeff(0).inv()?);
            den = Poly::one();
        } else {
            let (q, r) = num.div_rem(&den)?;
            if r.is_zero() {
                num = q;
                den = Poly::one();
            }
        }
        Ok(Self::cleared(num, den))
    }

    fn cleared(num: Poly, den: Poly) -> Self {
        let mut dens: Vec<&SparseSum> = Vec::new();
        for c in num.coeffs().iter().chain(den.coeffs()) {
            if !c.is_sum() && !dens.contains(&c.den()) {
                dens.push(c.den());
            }
        }
        if dens.is_empty() {
            return RationalFunction { num, den };
        }
        let d = FieldElem::from_sum(dens.into_iter().fold(SparseSum::one(), |acc, d| acc.mul(d)));
        RationalFunction { num: num.scale(&d), den: den.scale(&d) }
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::cleared(p, Poly::one())
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    /// `X − a`.
    pub fn linear(a: &FieldElem) -> Self {
        Self::from_poly(Poly::linear(a))
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

    pub fn as_constant(&self) -> Option<FieldElem> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.coeff(0).div(&self.den.coeff(0)).expect("nonzero denominator"))
        } else {
            None
        }
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone()).expect("nonzero denominator");
        }
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .expect("nonzero denominator")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den)).expect("nonzero denominator")
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let k = k.unsigned_abs() as u32;
        Self::new(base.num.pow(k), base.den.pow(k))
    }

    /// φ(s), or a pole error when the denominator vanishes at `s`.
    pub fn eval(&self, s: &FieldElem) -> Result<FieldElem> {
        let (n, d) = self.eval_parts(s);
        if d.is_zero() {
            return Err(Error::Pole { at: s.to_string() });
        }
        n.div(&d)
    }

    /// Numerator and denominator values at `s`, up to a common nonzero factor.
    pub fn eval_parts(&self, s: &FieldElem) -> (FieldElem, FieldElem) {
        let sums = self.num.coeffs().iter().chain(self.den.coeffs()).all(FieldElem::is_sum);
        if !sums || s.is_sum() {
            return (self.num.eval(s), self.den.eval(s));
        }
        // s = a/b: homogenize both polynomials to the same degree in (a, b).
        let (a, b) = (s.num(), s.den());
        let deg = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
        let hom = |p: &Poly| {
            let mut acc = SparseSum::zero();
            for i in (0..=deg).rev() {
                acc = acc.mul(a).add(&p.coeff(i).num().mul(&b.pow((deg - i) as u32)));
            }
            FieldElem::from_sum(acc)
        };
        (hom(&self.num), hom(&self.den))
    }

    pub fn to_backend(&self, b: Backend) -> Result<Self> {
        Self::new(self.num.to_backend(b)?, self.den.to_backend(b)?)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for RationalFunction {}

impl From<Poly> for RationalFunction {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl From<FieldElem> for RationalFunction {
    fn from(c: FieldElem) -> Self {
        Self::constant(c)
    }
}
