//! Values in `Q ⊕ Zδ` and the orders built from them.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::num::{sign_surd, Breadth, Rational};

/// `q + m·δ`. When δ is rational (or ∞) the `m·δ` part is folded into `q`
/// (respectively kept at `m = 0`), so equal values have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupValue {
    q: Rational,
    m: i64,
    delta: Breadth,
}

impl GroupValue {
    pub fn new(q: Rational, m: i64, delta: Breadth) -> Self {
        match &delta {
            Breadth::Rational(d) => GroupValue { q: q + d * Rational::from_integer(m.into()), m: 0, delta },
            Breadth::Infinity => {
                assert!(m == 0, "no multiples of an infinite breadth");
                GroupValue { q, m, delta }
            }
            Breadth::Quad(_) => GroupValue { q, m, delta },
        }
    }

    pub fn rational(q: Rational, delta: Breadth) -> Self {
        GroupValue::new(q, 0, delta)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.q
    }

    pub fn delta_coeff(&self) -> i64 {
        self.m
    }

    pub fn delta(&self) -> &Breadth {
        &self.delta
    }

    /// The value as a rational, when `m = 0`.
    pub fn as_rational(&self) -> Option<&Rational> {
        (self.m == 0).then_some(&self.q)
    }

    /// Sign of `q + m·δ`.
    pub fn signum(&self) -> Ordering {
        match &self.delta {
            Breadth::Quad(x) if self.m != 0 => {
                let m = Rational::from_integer(self.m.into());
                sign_surd(&(&self.q + x.a() * &m), &(x.b() * &m), x.d())
            }
            _ => self.q.cmp(&Rational::zero()),
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.signum().is_ge()
    }

    pub fn is_zero(&self) -> bool {
        self.signum().is_eq()
    }

    pub fn scale(&self, k: i64) -> GroupValue {
        GroupValue { q: &self.q * Rational::from_integer(k.into()), m: self.m * k, delta: self.delta.clone() }
    }

    pub fn to_f64(&self) -> f64 {
        crate::num::rational_to_f64(&self.q) + self.m as f64 * self.delta.to_f64()
    }
}

impl Add for &GroupValue {
    type Output = GroupValue;
    fn add(self, o: &GroupValue) -> GroupValue {
        debug_assert!(self.m == 0 || o.m == 0 || self.delta == o.delta);
        let delta = if self.m != 0 { self.delta.clone() } else { o.delta.clone() };
        GroupValue { q: &self.q + &o.q, m: self.m + o.m, delta }
    }
}

impl Neg for &GroupValue {
    type Output = GroupValue;
    fn neg(self) -> GroupValue {
        self.scale(-1)
    }
}

impl Sub for &GroupValue {
    type Output = GroupValue;
    fn sub(self, o: &GroupValue) -> GroupValue {
        self + &(-o)
    }
}

impl PartialOrd for GroupValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Values over the same δ compare exactly; mixing two irrational breadths is a caller error.
impl Ord for GroupValue {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl fmt::Display for GroupValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 0 {
            return write!(f, "{}", self.q);
        }
        let d = match &self.delta {
            Breadth::Quad(x) if x.a().is_zero() && x.b() == &Rational::from_integer(1.into()) => x.to_string(),
            other => format!("({other})"),
        };
        match self.m {
            1 => write!(f, "{d}")?,
            -1 => write!(f, "-{d}")?,
            m => write!(f, "{m}*{d}")?,
        }
        if self.q.is_positive() {
            write!(f, " + {}", self.q)?;
        } else if self.q.is_negative() {
            write!(f, " - {}", -&self.q)?;
        }
        Ok(())
    }
}

impl Serialize for GroupValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GroupValue", 3)?;
        st.serialize_field("q", &self.q.to_string())?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("delta", &self.delta)?;
        st.end()
    }
}

/// `(w_E(φ), −degdom_E(φ))`, ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankTwoValue {
    pub first: GroupValue,
    pub second: i64,
}

impl RankTwoValue {
    pub fn is_nonnegative(&self) -> bool {
        match self.first.signum() {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => self.second >= 0,
        }
    }
}

impl Add for &RankTwoValue {
    type Output = RankTwoValue;
    fn add(self, o: &RankTwoValue) -> RankTwoValue {
        RankTwoValue { first: &self.first + &o.first, second: self.second + o.second }
    }
}

impl fmt::Display for RankTwoValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

impl Serialize for RankTwoValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (&self.first, self.second).serialize(s)
    }
}

/// Value at a Cauchy limit: `v(φ(sₙ)) = order·δₙ + value` with `δₙ → ∞`.
/// A larger order is a larger value; ties fall to `value`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CauchyValue {
    pub order: i64,
    #[serde(with = "crate::num::serde_rational")]
    pub value: Rational,
}

impl CauchyValue {
    pub fn is_nonnegative(&self) -> bool {
        self.order > 0 || (self.order == 0 && !self.value.is_negative())
    }
}

impl Add for &CauchyValue {
    type Output = CauchyValue;
    fn add(self, o: &CauchyValue) -> CauchyValue {
        CauchyValue { order: self.order + o.order, value: &self.value + &o.value }
    }
}

impl fmt::Display for CauchyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order == 0 {
            write!(f, "{}", self.value)
        } else {
            write!(f, "(order {}, {})", self.order, self.value)
        }
    }
}

/// Value of `v_E`, shaped by the regime of E.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "regime", content = "value", rename_all = "snake_case")]
pub enum VeValue {
    RankTwo(RankTwoValue),
    RankOne(GroupValue),
    Cauchy(CauchyValue),
}

impl VeValue {
    pub fn is_nonnegative(&self) -> bool {
        match self {
            VeValue::RankTwo(v) => v.is_nonnegative(),
            VeValue::RankOne(v) => v.is_nonnegative(),
            VeValue::Cauchy(v) => v.is_nonnegative(),
        }
    }
}

impl PartialOrd for VeValue {
    /// Comparable only within one regime.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (VeValue::RankTwo(a), VeValue::RankTwo(b)) => Some(a.cmp(b)),
            (VeValue::RankOne(a), VeValue::RankOne(b)) => Some(a.cmp(b)),
            (VeValue::Cauchy(a), VeValue::Cauchy(b)) => Some(a.cmp(b)),
            _ => None,
        }
    }
}

impl Add for &VeValue {
    type Output = VeValue;
    fn add(self, o: &VeValue) -> VeValue {
        match (self, o) {
            (VeValue::RankTwo(a), VeValue::RankTwo(b)) => VeValue::RankTwo(a + b),
            (VeValue::RankOne(a), VeValue::RankOne(b)) => VeValue::RankOne(a + b),
            (VeValue::Cauchy(a), VeValue::Cauchy(b)) => VeValue::Cauchy(a + b),
            _ => panic!("adding values from different regimes"),
        }
    }
}

impl fmt::Display for VeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VeValue::RankTwo(v) => write!(f, "{v}"),
            VeValue::RankOne(v) => write!(f, "{v}"),
            VeValue::Cauchy(v) => write!(f, "{v}"),
        }
    }
}

/// Value of `w_E`, which is only a pseudo-valuation for Cauchy sequences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum WValue {
    Value(GroupValue),
    /// The numerator vanishes at the limit more often than the denominator.
    Socle { order: i64 },
    /// The denominator vanishes at the limit more often than the numerator.
    OutsideDomain { order: i64 },
}

impl WValue {
    pub fn value(&self) -> Option<&GroupValue> {
        match self {
            WValue::Value(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for WValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WValue::Value(v) => write!(f, "{v}"),
            WValue::Socle { order } => write!(f, "inf (socle: vanishes to order {order} at the limit)"),
            WValue::OutsideDomain { order } => {
                write!(f, "undefined (pole of order {} at the limit)", -order)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{int, QuadIrrational};

    fn sqrt2() -> Breadth {
        Breadth::Quad(QuadIrrational::sqrt(2).unwrap())
    }

    #[test]
    fn rational_delta_folds() {
        let g = GroupValue::new(int(-1), 1, Breadth::Rational(int(1)));
        assert_eq!(g, GroupValue::rational(int(0), Breadth::Rational(int(1))));
        assert_eq!(g.to_string(), "0");
    }

    #[test]
    fn surd_comparison() {
        let a = GroupValue::new(int(-1), 1, sqrt2());
        assert_eq!(a.to_string(), "sqrt(2) - 1");
        assert!(a.is_nonnegative());
        let b = GroupValue::new(int(-2), 2, sqrt2());
        assert_eq!(b.to_string(), "2*sqrt(2) - 2");
        assert!(b > a);
        assert!(GroupValue::new(int(2), -2, sqrt2()).signum().is_lt());
        assert_eq!(&a + &a, b);
    }

    #[test]
    fn lexicographic_pairs() {
        let z = GroupValue::rational(int(0), Breadth::Rational(int(1)));
        let neg = RankTwoValue { first: z.clone(), second: -1 };
        let pos = RankTwoValue { first: z, second: 1 };
        assert!(!neg.is_nonnegative());
        assert!(pos.is_nonnegative());
        assert!(neg < pos);
        assert_eq!(neg.to_string(), "(0, -1)");
    }
}
