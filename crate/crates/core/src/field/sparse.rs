use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::coeff::{Backend, Coeff};
use crate::error::Result;
use crate::num::{Rational, Val};

/// A finite sum `Σ cᵢ t^{eᵢ}` with strictly increasing exponents and no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseSum {
    terms: Vec<(Rational, Coeff)>,
}

impl SparseSum {
    pub fn zero() -> Self {
        SparseSum { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Coeff::one(), Rational::zero())
    }

    pub fn constant(c: Coeff) -> Self {
        Self::monomial(c, Rational::zero())
    }

    pub fn monomial(c: Coeff, e: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            SparseSum { terms: vec![(e, c)] }
        }
    }

    /// Builds a sum from arbitrary terms, merging repeated exponents.
    pub fn from_terms(terms: impl IntoIterator<Item = (Rational, Coeff)>) -> Self {
        let mut acc: BTreeMap<Rational, Coeff> = BTreeMap::new();
        for (e, c) in terms {
            match acc.get_mut(&e) {
                Some(old) => *old = old.add(&c),
                None => {
                    acc.insert(e, c);
                }
            }
        }
        SparseSum { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(Rational, Coeff)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_zero() && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn lowest(&self) -> Option<&(Rational, Coeff)> {
        self.terms.first()
    }

    pub fn highest(&self) -> Option<&(Rational, Coeff)> {
        self.terms.last()
    }

    /// Least exponent, ∞ for the zero sum.
    pub fn val(&self) -> Val {
        match self.terms.first() {
            Some((e, _)) => Val::Finite(e.clone()),
            None => Val::Infinity,
        }
    }

    pub fn neg(&self) -> Self {
        SparseSum { terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect() }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let take_b = |c: &Coeff| if negate { c.neg() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0.clone(), take_b(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(e, c)| (e.clone(), take_b(c))));
        SparseSum { terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    /// Multiplies by `c·t^e`.
    pub fn mul_monomial(&self, c: &Coeff, e: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparseSum { terms: self.terms.iter().map(|(f, d)| (f + e, d.mul(c))).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.is_monomial() {
            let (e, c) = &other.terms[0];
            return self.mul_monomial(c, e);
        }
        if self.is_monomial() {
            let (e, c) = &self.terms[0];
            return other.mul_monomial(c, e);
        }
        let mut acc: BTreeMap<Rational, Coeff> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1 + e2;
                let c = c1.mul(c2);
                match acc.get_mut(&e) {
                    Some(old) => *old = old.add(&c),
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        SparseSum { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Keeps the terms with exponent at most `p`.
    pub fn truncate(&self, p: &Rational) -> Self {
        SparseSum { terms: self.terms.iter().take_while(|(e, _)| e <= p).cloned().collect() }
    }

    /// Exact quotient `self / d` when it is again a finite sum.
    pub fn try_div_exact(&self, d: &Self) -> Option<Self> {
        let (eb, cb) = d.lowest()?;
        let cb_inv = cb.inv().ok()?;
        if d.is_monomial() {
            return Some(self.mul_monomial(&cb_inv, &-eb));
        }
        let Some((amax, _)) = self.highest() else {
            return Some(Self::zero());
        };
        let bound = amax - &d.highest()?.0;
        let mut q = Vec::new();
        let mut r = self.clone();
        while let Some((er, cr)) = r.lowest() {
            let e = er - eb;
            if e > bound {
                return None;
            }
            let c = cr.mul(&cb_inv);
            r = r.sub(&d.mul_monomial(&c, &e));
            q.push((e, c));
        }
        Some(SparseSum { terms: q })
    }

    pub fn to_backend(&self, b: Backend) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| Ok((e.clone(), c.to_backend(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseSum { terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    /// Largest common denominator of the exponents.
    pub fn exponent_denominator(&self) -> num_bigint::BigInt {
        use num_integer::Integer;
        self.terms.iter().fold(num_bigint::BigInt::one(), |acc, (e, _)| acc.lcm(e.denom()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{int, rat};

    fn t(e: Rational) -> SparseSum {
        SparseSum::monomial(Coeff::one(), e)
    }

    #[test]
    fn add_cancels_and_sorts() {
        let a = t(rat(1, 2)).add(&t(int(2)));
        let b = t(int(2)).neg();
        assert_eq!(a.add(&b), t(rat(1, 2)));
        assert_eq!(a.sub(&a), SparseSum::zero());
        assert_eq!(a.val(), Val::Finite(rat(1, 2)));
    }

    #[test]
    fn exact_division() {
        let one_minus_t = SparseSum::one().sub(&t(int(1)));
        let prod = one_minus_t.mul(&t(rat(1, 3)).add(&SparseSum::one()));
        assert_eq!(prod.try_div_exact(&one_minus_t).unwrap(), t(rat(1, 3)).add(&SparseSum::one()));
        assert!(SparseSum::one().try_div_exact(&one_minus_t).is_none());
    }

    #[test]
    fn powers() {
        let s = SparseSum::one().add(&t(int(1)));
        let cube = s.pow(3);
        let coeffs: Vec<String> = cube.terms().iter().map(|(_, c)| c.to_string()).collect();
        assert_eq!(coeffs, vec!["1", "3", "3", "1"]);
    }
}
