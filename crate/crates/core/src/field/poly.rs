use super::coeff::{Backend, Coeff};
use super::elem::FieldElem;
use super::sparse::SparseSum;
use crate::error::{Error, Result};

/// A polynomial in X over K with coefficients in ascending degree order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<FieldElem>,
}

fn binomial_row(n: usize) -> Vec<Coeff> {
    let mut row = vec![Coeff::one()];
    for _ in 0..n {
        let mut next = vec![Coeff::one()];
        for w in row.windows(2) {
            next.push(w[0].add(&w[1]));
        }
        next.push(Coeff::one());
        row = next;
    }
    row
}

impl Poly {
    pub fn new(mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(FieldElem::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(FieldElem::one())
    }

    pub fn x() -> Self {
        Self::new(vec![FieldElem::zero(), FieldElem::one()])
    }

    /// `X − a`.
    pub fn linear(a: &FieldElem) -> Self {
        Self::new(vec![a.neg(), FieldElem::one()])
    }

    /// `Π (X − rᵢ)`.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a FieldElem>) -> Self {
        roots.into_iter().fold(Self::one(), |acc, r| acc.mul(&Self::linear(r)))
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).cloned().unwrap_or_else(FieldElem::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient (the order of vanishing at 0).
    pub fn lowest_index(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(FieldElem::neg).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect())
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![FieldElem::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Multiplies by `X^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![FieldElem::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divides by `X^k`, which must divide `self`.
    pub fn shift_down(&self, k: usize) -> Self {
        Poly { coeffs: self.coeffs.iter().skip(k).cloned().collect() }
    }

    /// Euclidean division over K.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = d.coeffs[dd].inv()?;
        let mut r = self.coeffs.clone();
        let mut q = vec![FieldElem::zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd {
            let top = r.len() - 1;
            let c = r[top].mul(&lead_inv);
            if !c.is_zero() {
                for (j, b) in d.coeffs.iter().enumerate() {
                    let idx = top - dd + j;
                    r[idx] = r[idx].sub(&c.mul(b));
                }
                q[top - dd] = c;
            }
            r.pop();
        }
        Ok((Self::new(q), Self::new(r)))
    }

    /// Largest `k` with `q^k | self`.
    pub fn order_at(&self, q: &Self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::Zero { what: "polynomial", needed: "finite order" });
        }
        if q.degree().unwrap_or(0) == 0 {
            return Err(Error::precondition("order", "divisor must have positive degree"));
        }
        let mut k = 0;
        let mut cur = self.clone();
        loop {
            let (quot, rem) = cur.div_rem(q)?;
            if !rem.is_zero() {
                return Ok(k);
            }
            cur = quot;
            k += 1;
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, s: &FieldElem) -> FieldElem {
        if s.is_sum() && self.coeffs.iter().all(FieldElem::is_sum) {
            return FieldElem::from_sum(self.eval_sum(s.num()));
        }
        self.coeffs.iter().rev().fold(FieldElem::zero(), |acc, c| acc.mul(s).add(c))
    }

    fn eval_sum(&self, s: &SparseSum) -> SparseSum {
        self.coeffs.iter().rev().fold(SparseSum::zero(), |acc, c| acc.mul(s).add(c.num()))
    }

    /// Coefficients of `f(X + a)`.
    pub fn taylor_shift(&self, a: &FieldElem) -> Self {
        let Some(n) = self.degree() else {
            return Self::zero();
        };
        if a.is_zero() {
            return self.clone();
        }
        let powers: Vec<FieldElem> = std::iter::successors(Some(FieldElem::one()), |p| Some(p.mul(a)))
            .take(n + 1)
            .collect();
        let rows: Vec<Vec<Coeff>> = (0..=n).map(binomial_row).collect();
        let out = (0..=n)
            .map(|j| {
                (j..=n).fold(FieldElem::zero(), |acc, i| {
                    let ci = &self.coeffs[i];
                    if ci.is_zero() {
                        return acc;
                    }
                    let b = FieldElem::from_coeff(rows[i][j].clone());
                    acc.add(&ci.mul(&powers[i - j]).mul(&b))
                })
            })
            .collect();
        Self::new(out)
    }

    pub fn to_backend(&self, b: Backend) -> Result<Self> {
        Ok(Self::new(self.coeffs.iter().map(|c| c.to_backend(b)).collect::<Result<_>>()?))
    }
}
