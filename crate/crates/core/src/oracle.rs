//! Brute-force counterparts of the symbolic algorithms.
//!
//! Nothing here reads a Newton polygon at the pseudo-limit or a closed-form
//! limit: answers come from evaluating functions at the terms of a sequence.

use std::fmt;

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::RationalFunction;
use crate::newton::stabilized_distance_count;
use crate::num::{Rational, Val};
use crate::pcv::{PCSeq, Verdict};

/// Default settling window when the distance counts do not stabilize.
pub const DEFAULT_SETTLING: usize = 8;

/// `v(φ(sₙ))` at one index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum ScanValue {
    Finite(#[serde(with = "crate::num::serde_rational")] Rational),
    /// φ vanishes at `sₙ`.
    Zero,
    /// `sₙ` is a pole of φ.
    Pole,
}

impl ScanValue {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ScanValue::Finite(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for ScanValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScanValue::Finite(v) => write!(f, "{v}"),
            ScanValue::Zero => write!(f, "inf"),
            ScanValue::Pole => write!(f, "pole"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub n: usize,
    #[serde(with = "crate::num::serde_rational")]
    pub delta: Rational,
    pub value: ScanValue,
}

/// `v(φ(sₙ))` for `n` in `n0..=n1`.
pub fn profile_scan(phi: &RationalFunction, e: &PCSeq, n0: usize, n1: usize) -> Result<Vec<ScanRow>> {
    let phi = match e.backend() {
        crate::field::Backend::Rational => phi.clone(),
        b => phi.to_backend(b)?,
    };
    (n0..=n1)
        .map(|n| {
            let (s, delta) = e.materialize(n)?;
            let value = match phi.eval(&s) {
                Ok(x) => match x.val() {
                    Val::Finite(v) => ScanValue::Finite(v),
                    Val::Infinity => ScanValue::Zero,
                },
                Err(Error::Pole { .. }) => ScanValue::Pole,
                Err(other) => return Err(other),
            };
            Ok(ScanRow { n, delta, value })
        })
        .collect()
}

/// First index past which both numerator and denominator distance counts have settled.
pub fn settling_index(phi: &RationalFunction, e: &PCSeq) -> Result<usize> {
    let a = stabilized_distance_count(phi.num(), e)?.certified_at;
    let b = stabilized_distance_count(phi.den(), e)?.certified_at;
    Ok(match (a, b) {
        (Some(i), Some(j)) => i.max(j).max(DEFAULT_SETTLING),
        _ => DEFAULT_SETTLING,
    })
}

/// `φ(sₙ) ∈ V` for every `n` from the settling index through `depth`.
pub fn member_definitional(phi: &RationalFunction, e: &PCSeq, depth: usize) -> Result<Verdict> {
    let depth = depth.min(e.max_index());
    let start = settling_index(phi, e)?.min(depth);
    for row in profile_scan(phi, e, start, depth)? {
        let inside = match row.value {
            ScanValue::Finite(v) => !v.is_negative(),
            ScanValue::Zero => true,
            ScanValue::Pole => false,
        };
        if !inside {
            return Ok(Verdict::bounded(false, depth));
        }
    }
    Ok(Verdict::bounded(true, depth))
}

/// Breadths equal, and for each `k ≤ k_max` a tail `i, j ≥ m` of the sampled
/// grid on which `v(sᵢ − tⱼ) > v(t_{k+1} − t_k)`, with `m ≤ depth/2`.
pub fn equivalent_definitional(e: &PCSeq, f: &PCSeq, k_max: usize, depth: usize) -> Result<Verdict> {
    let depth = depth.min(e.max_index()).min(f.max_index());
    if e.breadth() != f.breadth() {
        return Ok(Verdict::bounded(false, depth));
    }
    let s: Vec<_> = (0..=depth).map(|i| e.term(i)).collect::<Result<_>>()?;
    let t: Vec<_> = (0..=depth).map(|j| f.term(j)).collect::<Result<_>>()?;
    let cross: Vec<Vec<Val>> = s.iter().map(|si| t.iter().map(|tj| (si - tj).val()).collect()).collect();
    for k in 0..=k_max.min(depth - 1) {
        let target = (&t[k + 1] - &t[k]).val();
        // The smallest cross distance over the square tail starting at m.
        let mut tail_min = Val::Infinity;
        let mut found = false;
        for m in (0..=depth).rev() {
            for j in m..=depth {
                tail_min = tail_min.min(cross[m][j].clone());
            }
            for i in m + 1..=depth {
                tail_min = tail_min.min(cross[i][m].clone());
            }
            if tail_min <= target {
                break;
            }
            if m <= depth / 2 {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(Verdict::bounded(false, depth));
        }
    }
    Ok(Verdict::bounded(true, depth))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldElem;
    use crate::num::{int, rat};
    use crate::pcv::{fixture, squared_e1, GaugeSpec};

    fn rf(s: &str) -> RationalFunction {
        s.parse().unwrap()
    }

    #[test]
    fn scan_examples() {
        let e1 = fixture("E1").unwrap();
        let rows = profile_scan(&rf("X/t"), &e1, 1, 5).unwrap();
        let got: Vec<Rational> = rows.iter().map(|r| r.value.finite().unwrap().clone()).collect();
        assert_eq!(got, vec![rat(-1, 2), rat(-1, 4), rat(-1, 8), rat(-1, 16), rat(-1, 32)]);
        let e4 = fixture("E4").unwrap();
        let rows = profile_scan(&rf("X^2 - (1 + t)"), &e4, 0, 3).unwrap();
        let vals: Vec<Rational> = rows.iter().map(|r| r.value.finite().unwrap().clone()).collect();
        assert!(vals.windows(2).all(|w| w[0] < w[1]), "{vals:?}");
        let rows = profile_scan(&rf("X/(X - t^(1/2))"), &e1, 0, 2).unwrap();
        assert_eq!(rows[1].value, ScanValue::Pole);
    }

    #[test]
    fn member_examples() {
        let e1 = fixture("E1").unwrap();
        assert!(!member_definitional(&rf("X/t"), &e1, 40).unwrap().value);
        assert!(member_definitional(&rf("t/X"), &e1, 40).unwrap().value);
        assert!(member_definitional(&rf("1"), &e1, 40).unwrap().value);
    }

    #[test]
    fn equivalence_examples() {
        let e1 = fixture("E1").unwrap();
        let shifted = PCSeq::single_term(FieldElem::t_pow(int(1)), GaugeSpec::dyadic(int(1), int(1)).unwrap()).unwrap();
        assert!(equivalent_definitional(&e1, &shifted, 10, 40).unwrap().value);
        assert!(!equivalent_definitional(&e1, &squared_e1(), 10, 40).unwrap().value);
        assert!(!equivalent_definitional(&e1, &fixture("E2").unwrap(), 10, 40).unwrap().value);
        let off = PCSeq::single_term(FieldElem::t_pow(rat(1, 2)), GaugeSpec::dyadic(int(1), int(1)).unwrap()).unwrap();
        assert!(!equivalent_definitional(&e1, &off, 10, 40).unwrap().value);
    }
}
