//! Newton polygons: root valuations and root distances without computing roots.
//!
//! For `f = Σ aᵢXⁱ` the points `(i, v(aᵢ))` are hulled from below; a segment
//! of slope σ and horizontal length ℓ stands for ℓ roots of valuation −σ.
//! Roots at the origin (X | f) are reported at distance ∞.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldElem, Poly, RationalFunction};
use crate::num::{Breadth, Rational, Val};
use crate::pcv::PCSeq;

/// One edge of the lower hull.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Segment {
    #[serde(with = "crate::num::serde_rational")]
    pub slope: Rational,
    pub length: usize,
}

/// Lower convex hull of `{(i, v(aᵢ))}` from the lowest nonzero index to the degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonPolygon {
    pub segments: Vec<Segment>,
    /// Multiplicity of 0 as a root.
    pub zero_roots: usize,
}

fn cross(o: &(Rational, Rational), a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

impl NewtonPolygon {
    pub fn of(f: &Poly) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::Zero { what: "polynomial", needed: "Newton polygon" });
        }
        let points: Vec<(Rational, Rational)> = f
            .coeffs()
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.val().finite().map(|v| (Rational::from_integer(i.into()), v.clone())))
            .collect();
        let mut hull: Vec<(Rational, Rational)> = Vec::with_capacity(points.len());
        for p in points {
            while hull.len() >= 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], &p) <= Rational::zero() {
                hull.pop();
            }
            hull.push(p);
        }
        let segments = hull
            .windows(2)
            .map(|w| {
                let dx = &w[1].0 - &w[0].0;
                Segment {
                    slope: (&w[1].1 - &w[0].1) / &dx,
                    length: dx.to_integer().try_into().expect("degree fits in usize"),
                }
            })
            .collect();
        Ok(NewtonPolygon { segments, zero_roots: f.lowest_index().unwrap_or(0) })
    }

    /// Root valuations with multiplicity, ascending, ∞ last.
    pub fn root_valuations(&self) -> Vec<(Val, usize)> {
        let mut out: Vec<(Val, usize)> =
            self.segments.iter().rev().map(|s| (Val::Finite(-&s.slope), s.length)).collect();
        if self.zero_roots > 0 {
            out.push((Val::Infinity, self.zero_roots));
        }
        out
    }
}

impl fmt::Display for NewtonPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.segments.iter().map(|s| format!("({}, {})", s.slope, s.length)).collect();
        write!(f, "[{}]", parts.join(", "))?;
        if self.zero_roots > 0 {
            write!(f, " + {} root(s) at 0", self.zero_roots)?;
        }
        Ok(())
    }
}

/// `{u(α) : f(α) = 0}` with multiplicity.
pub fn root_valuations(f: &Poly) -> Result<Vec<(Val, usize)>> {
    Ok(NewtonPolygon::of(f)?.root_valuations())
}

/// Distances `u(α − s)` of the roots of `f` from `s`.
pub fn poly_root_distances(f: &Poly, s: &FieldElem) -> Result<Vec<(Val, usize)>> {
    root_valuations(&f.taylor_shift(s))
}

/// Signed multiset of critical distances: zeros count `+`, poles count `−`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DistanceMultiset {
    entries: BTreeMap<Val, i64>,
}

impl DistanceMultiset {
    fn insert(&mut self, d: Val, m: i64) {
        let e = self.entries.entry(d.clone()).or_insert(0);
        *e += m;
        if *e == 0 {
            self.entries.remove(&d);
        }
    }

    /// Ascending `(distance, signed multiplicity)` pairs, zero entries dropped.
    pub fn entries(&self) -> impl Iterator<Item = (&Val, i64)> {
        self.entries.iter().map(|(d, m)| (d, *m))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.entries.values().sum()
    }

    /// Signed count of distances `≥ b`.
    pub fn count_at_least(&self, b: &Breadth) -> i64 {
        self.entries.iter().filter(|(d, _)| d.cmp_breadth(b).is_ge()).map(|(_, m)| m).sum()
    }

    /// Signed count of distances `≥ q` (∞ included).
    pub fn count_at_least_rational(&self, q: &Rational) -> i64 {
        let q = Val::Finite(q.clone());
        self.entries.range(q..).map(|(_, m)| m).sum()
    }

    /// Largest finite distance strictly below `b`.
    pub fn max_below(&self, b: &Breadth) -> Option<Rational> {
        self.entries
            .keys()
            .filter(|d| d.cmp_breadth(b).is_lt())
            .filter_map(|d| d.finite().cloned())
            .next_back()
    }

    /// Smallest distance at or above `b`.
    pub fn min_at_least(&self, b: &Breadth) -> Option<Val> {
        self.entries.keys().find(|d| d.cmp_breadth(b).is_ge()).cloned()
    }

    /// Distances lying in the open interval `(lo, hi)`.
    pub fn inside(&self, lo: &Rational, hi: &Val) -> Vec<Val> {
        self.entries
            .keys()
            .filter(|d| d > &&Val::Finite(lo.clone()) && *d < hi)
            .cloned()
            .collect()
    }

    /// All finite distances, ascending.
    pub fn finite_distances(&self) -> Vec<Rational> {
        self.entries.keys().filter_map(|d| d.finite().cloned()).collect()
    }
}

impl fmt::Display for DistanceMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|(d, m)| format!("({d}, {m:+})")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Signed distances `u(s − α)` over the zeros and poles of φ.
pub fn root_distances(phi: &RationalFunction, s: &FieldElem) -> Result<DistanceMultiset> {
    if phi.is_zero() {
        return Err(Error::Zero { what: "function", needed: "root distances" });
    }
    let mut out = DistanceMultiset::default();
    for (d, m) in poly_root_distances(phi.num(), s)? {
        out.insert(d, m as i64);
    }
    for (d, m) in poly_root_distances(phi.den(), s)? {
        out.insert(d, -(m as i64));
    }
    Ok(out)
}

/// Outcome of [`stabilized_distance_count`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stabilization {
    /// Roots counted at the last index examined.
    pub count: usize,
    /// First index at which the count and the sub-gauge distances stopped moving.
    pub certified_at: Option<usize>,
}

/// Roots of `f` at distance `≥ δₙ` from `sₙ`, and the sorted distances below it.
pub fn split_at_gauge(f: &Poly, s: &FieldElem, delta_n: &Rational) -> Result<(usize, Vec<(Rational, usize)>)> {
    let mut count = 0;
    let mut below = Vec::new();
    for (d, m) in poly_root_distances(f, s)? {
        match d {
            Val::Finite(q) if &q < delta_n => below.push((q, m)),
            _ => count += m,
        }
    }
    Ok((count, below))
}

/// Counts the roots of `f` that are pseudo-limits of `E` using only the terms
/// of `E`: the number of roots at distance `≥ δₙ` from `sₙ` once it and the
/// distances below `δₙ` agree at two consecutive indices.
pub fn stabilized_distance_count(f: &Poly, e: &PCSeq) -> Result<Stabilization> {
    if f.is_zero() {
        return Err(Error::Zero { what: "polynomial", needed: "distance count" });
    }
    let mut prev: Option<(usize, Vec<(Rational, usize)>)> = None;
    let mut last = 0;
    for n in 0..=e.max_index() {
        let (s, d) = e.materialize(n)?;
        let cur = split_at_gauge(f, &s, &d)?;
        last = cur.0;
        if let Some(p) = &prev {
            if *p == cur {
                return Ok(Stabilization { count: cur.0, certified_at: Some(n - 1) });
            }
        }
        prev = Some(cur);
    }
    Ok(Stabilization { count: last, certified_at: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{int, rat};

    fn t(e: Rational) -> FieldElem {
        FieldElem::t_pow(e)
    }

    #[test]
    fn root_valuation_examples() {
        let f = Poly::x().pow(2).sub(&Poly::constant(t(int(1))));
        assert_eq!(root_valuations(&f).unwrap(), vec![(Val::Finite(rat(1, 2)), 2)]);
        let g = Poly::x().mul(&Poly::linear(&t(int(1))));
        assert_eq!(root_valuations(&g).unwrap(), vec![(Val::Finite(int(1)), 1), (Val::Infinity, 1)]);
        let q = Poly::x().pow(2).sub(&Poly::constant(FieldElem::one() + t(int(1))));
        assert_eq!(root_valuations(&q).unwrap(), vec![(Val::Finite(int(0)), 2)]);
        assert!(root_valuations(&Poly::zero()).is_err());
    }

    #[test]
    fn root_distance_examples() {
        let phi: RationalFunction = "X/t".parse().unwrap();
        let d = root_distances(&phi, &FieldElem::zero()).unwrap();
        assert_eq!(d.entries().collect::<Vec<_>>(), vec![(&Val::Infinity, 1)]);

        let phi: RationalFunction = "(X - t)/(X - t^2)".parse().unwrap();
        let d = root_distances(&phi, &FieldElem::zero()).unwrap();
        assert_eq!(d.entries().collect::<Vec<_>>(), vec![(&Val::Finite(int(1)), 1), (&Val::Finite(int(2)), -1)]);

        let q: RationalFunction = "X^2 - (1 + t)".parse().unwrap();
        let d = root_distances(&q, &FieldElem::one()).unwrap();
        assert_eq!(d.entries().collect::<Vec<_>>(), vec![(&Val::Finite(int(0)), 1), (&Val::Finite(int(1)), 1)]);
    }

    #[test]
    fn collinear_points_merge() {
        // X² + tX + t²: points (0,2), (1,1), (2,0) on one line of slope −1.
        let f: RationalFunction = "X^2 + t*X + t^2".parse().unwrap();
        let poly = NewtonPolygon::of(f.num()).unwrap();
        assert_eq!(poly.segments, vec![Segment { slope: int(-1), length: 2 }]);
    }
}
