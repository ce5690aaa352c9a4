//! The value law on annuli free of critical points.

use std::cmp::Ordering;

use num_traits::Zero;
use serde::Serialize;

use super::{finite_center, value_at, GroupValue};
use crate::error::{Error, Result};
use crate::field::{FieldElem, RationalFunction};
use crate::newton::root_distances;
use crate::num::{integer_below, Breadth, Rational, Val};
use crate::pcv::PCSeq;

/// `v(φ(x)) = λ·v(x − s) + γ` on the annulus, with the probes that confirmed it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnnulusLaw {
    pub lambda: i64,
    #[serde(with = "crate::num::serde_rational")]
    pub gamma: Rational,
    /// `(radius, observed value)` pairs.
    #[serde(serialize_with = "serialize_pairs")]
    pub probes: Vec<(Rational, Rational)>,
}

fn serialize_pairs<S: serde::Serializer>(v: &[(Rational, Rational)], s: S) -> std::result::Result<S::Ok, S::Error> {
    let strs: Vec<(String, String)> = v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    strs.serialize(s)
}

/// `k` ascending rationals strictly between `lo` and `hi`.
pub fn rationals_between(lo: &Rational, hi: &Breadth, k: usize) -> Vec<Rational> {
    match hi {
        Breadth::Infinity => (1..=k).map(|i| lo + Rational::from_integer(i.into())).collect(),
        Breadth::Rational(h) => {
            let step = (h - lo) / Rational::from_integer((k + 1).into());
            (1..=k).map(|i| lo + &step * Rational::from_integer(i.into())).collect()
        }
        Breadth::Quad(x) => (0..).map(|n| x.lower_approximant(n)).filter(|a| a > lo).take(k).collect(),
    }
}

fn maximal_annuli(distances: &[Rational]) -> String {
    let mut edges: Vec<String> = vec!["-inf".into()];
    edges.extend(distances.iter().map(|d| d.to_string()));
    edges.push("inf".into());
    edges.windows(2).map(|w| format!("({}, {})", w[0], w[1])).collect::<Vec<_>>().join(", ")
}

/// The annulus law on `θ₁ < v(x − s) < θ₂`.
pub fn annulus_law_to(phi: &RationalFunction, s: &FieldElem, theta1: &Rational, theta2: &Breadth) -> Result<AnnulusLaw> {
    if theta2.cmp_rational(theta1).is_le() {
        return Err(Error::precondition("annulus", format!("need theta1 < theta2, got ({theta1}, {theta2})")));
    }
    let dist = root_distances(phi, s)?;
    let inside: Vec<String> = dist
        .entries()
        .filter(|(d, _)| d > &&Val::Finite(theta1.clone()) && d.cmp_breadth(theta2).is_lt())
        .map(|(d, _)| d.to_string())
        .collect();
    if !inside.is_empty() {
        return Err(Error::precondition(
            "annulus",
            format!(
                "critical distances {} lie inside ({theta1}, {theta2}); maximal annuli: {}",
                inside.join(", "),
                maximal_annuli(&dist.finite_distances())
            ),
        ));
    }
    let lambda = dist.count_at_least(theta2);
    let mut law: Option<AnnulusLaw> = None;
    for m in rationals_between(theta1, theta2, 3) {
        let probe = s + &FieldElem::t_pow(m.clone());
        let v = match value_at(phi, &probe)? {
            Val::Finite(v) => v,
            Val::Infinity => return Err(Error::Verification(format!("probe at radius {m} hit a zero"))),
        };
        let l = Rational::from_integer(lambda.into());
        match &mut law {
            None => law = Some(AnnulusLaw { lambda, gamma: &v - &l * &m, probes: vec![(m, v)] }),
            Some(law) => {
                if v != &l * &m + &law.gamma {
                    return Err(Error::Verification(format!("annulus law fails at radius {m}: observed {v}")));
                }
                law.probes.push((m, v));
            }
        }
    }
    Ok(law.expect("three probes"))
}

/// [`annulus_law_to`] with a rational or infinite outer radius.
pub fn annulus_law(phi: &RationalFunction, s: &FieldElem, theta1: &Rational, theta2: &Val) -> Result<AnnulusLaw> {
    let hi = match theta2 {
        Val::Finite(q) => Breadth::Rational(q.clone()),
        Val::Infinity => Breadth::Infinity,
    };
    annulus_law_to(phi, s, theta1, &hi)
}

/// An annulus `(δ′, δ_E)` about the pseudo-limit on which `v(φ)` follows one law of constant sign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StableAnnulus {
    #[serde(with = "crate::num::serde_rational")]
    pub delta_prime: Rational,
    pub lambda: i64,
    #[serde(with = "crate::num::serde_rational")]
    pub gamma: Rational,
    /// Sign of `λm + γ` for `m` in the annulus.
    pub sign: i8,
}

fn sign_of(o: Ordering) -> i8 {
    match o {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

pub fn stable_annulus(phi: &RationalFunction, e: &PCSeq) -> Result<StableAnnulus> {
    let (beta, delta) = finite_center(e)?;
    let dist = root_distances(phi, &beta)?;
    let mut lo = match dist.max_below(&delta) {
        Some(d) => d,
        None => match &delta {
            Breadth::Rational(d) => integer_below(d),
            Breadth::Quad(x) => x.lower_approximant(1),
            Breadth::Infinity => unreachable!("finite breadth"),
        },
    };
    let law = annulus_law_to(phi, &beta, &lo, &delta)?;
    let at_delta = GroupValue::new(law.gamma.clone(), law.lambda, delta.clone()).signum();
    let sign = if law.lambda == 0 {
        sign_of(law.gamma.cmp(&Rational::zero()))
    } else {
        let root = -&law.gamma / Rational::from_integer(law.lambda.into());
        if root > lo && delta.cmp_rational(&root).is_gt() {
            lo = root;
        }
        match at_delta {
            Ordering::Equal => -law.lambda.signum() as i8,
            o => sign_of(o),
        }
    };
    Ok(StableAnnulus { delta_prime: lo, lambda: law.lambda, gamma: law.gamma, sign })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{int, rat};
    use crate::pcv::fixture;

    fn rf(s: &str) -> RationalFunction {
        s.parse().unwrap()
    }

    #[test]
    fn annulus_examples() {
        let law = annulus_law(&rf("X/t"), &FieldElem::zero(), &rat(1, 2), &Val::Infinity).unwrap();
        assert_eq!((law.lambda, law.gamma), (1, int(-1)));
        let law = annulus_law(&rf("(X - t)/(X - t^2)"), &FieldElem::zero(), &int(1), &Val::Finite(int(2))).unwrap();
        assert_eq!((law.lambda, law.gamma), (-1, int(1)));
        let law = annulus_law(&rf("t^5"), &FieldElem::one(), &int(-3), &Val::Finite(int(7))).unwrap();
        assert_eq!((law.lambda, law.gamma), (0, int(5)));
        let err = annulus_law(&rf("X - t"), &FieldElem::zero(), &int(0), &Val::Finite(int(2))).unwrap_err();
        assert!(err.to_string().contains("maximal annuli: (-inf, 1), (1, inf)"), "{err}");
    }

    #[test]
    fn stable_annulus_examples() {
        let e1 = fixture("E1").unwrap();
        assert_eq!(stable_annulus(&rf("X - t^(1/2)"), &e1).unwrap().delta_prime, rat(1, 2));
        let a = stable_annulus(&rf("X/t"), &e1).unwrap();
        assert_eq!((a.delta_prime, a.sign), (int(0), -1));
        let a = stable_annulus(&rf("t^2"), &e1).unwrap();
        assert_eq!((a.delta_prime, a.sign), (int(0), 1));
    }
}
