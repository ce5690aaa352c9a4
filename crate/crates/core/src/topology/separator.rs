//! Clopen sets separating `V_E` from a sampled closed set `𝒱 ∖ B(Φ)`.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::{enumerate_increasing, w_linear, Candidate};
use crate::error::{Error, Result};
use crate::field::{FieldElem, RationalFunction};
use crate::newton::{root_distances, split_at_gauge};
use crate::num::{Breadth, Rational};
use crate::pcv::{LimitData, PCSeq};
use crate::valuations::{self, annulus_law_to, stable_annulus, GroupValue, Ring, WValue};

/// A set built from Ω-sets and B-sets, each open and closed in the constructible topology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessSet {
    Whole,
    /// `Ω(s, γ) = {V_F : w_F(X − s) ≤ γ}`.
    Omega {
        center: FieldElem,
        #[serde(with = "crate::num::serde_rational")]
        radius: Rational,
    },
    NotOmega {
        center: FieldElem,
        #[serde(with = "crate::num::serde_rational")]
        radius: Rational,
    },
    /// `B(φ) = {V : φ ∈ V}`.
    B { function: RationalFunction },
    NotB { function: RationalFunction },
    All { parts: Vec<WitnessSet> },
}

impl WitnessSet {
    /// Whether `V_F` lies in the set.
    pub fn contains(&self, f: &PCSeq) -> Result<bool> {
        Ok(match self {
            WitnessSet::Whole => true,
            WitnessSet::Omega { center, radius } => super::omega_membership(f, center, radius)?,
            WitnessSet::NotOmega { center, radius } => !super::omega_membership(f, center, radius)?,
            WitnessSet::B { function } => valuations::member(function, f, Ring::V)?,
            WitnessSet::NotB { function } => !valuations::member(function, f, Ring::V)?,
            WitnessSet::All { parts } => {
                for p in parts {
                    if !p.contains(f)? {
                        return Ok(false);
                    }
                }
                true
            }
        })
    }

    fn and(self, other: WitnessSet) -> WitnessSet {
        match self {
            WitnessSet::Whole => other,
            WitnessSet::All { mut parts } => {
                parts.push(other);
                WitnessSet::All { parts }
            }
            first => WitnessSet::All { parts: vec![first, other] },
        }
    }
}

impl fmt::Display for WitnessSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessSet::Whole => write!(f, "whole space"),
            WitnessSet::Omega { center, radius } => write!(f, "Omega({center}, {radius})"),
            WitnessSet::NotOmega { center, radius } => write!(f, "complement of Omega({center}, {radius})"),
            WitnessSet::B { function } => write!(f, "B({function})"),
            WitnessSet::NotB { function } => write!(f, "complement of B({function})"),
            WitnessSet::All { parts } => {
                let ps: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", ps.join(" and "))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeparatorCase {
    /// Empty sample.
    Trivial,
    Transcendental,
    /// Cauchy with a limit outside K.
    CauchyOutsideK,
    /// Pseudo-limit in K, finite breadth or Cauchy.
    PseudoLimitInK,
}

/// Where one sample ring landed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleCheck {
    pub ring: String,
    /// The base set alone already excluded the ring.
    pub excluded_by_base: bool,
    /// Extra set added for this ring, if any.
    pub patch: Option<String>,
    pub separated: bool,
}

/// A set containing `V_E` and none of the sample rings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationWitness {
    pub case: SeparatorCase,
    pub point: String,
    pub set: WitnessSet,
    pub checks: Vec<SampleCheck>,
    /// Breadths whose sequences could reach the boundary of some `B(φ)`.
    pub candidates: Vec<Candidate>,
}

impl fmt::Display for SeparationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "V_E({}) lies in: {}", self.point, self.set)?;
        for c in &self.checks {
            write!(f, "  {}: outside", c.ring)?;
            if let Some(p) = &c.patch {
                write!(f, " via {p}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn half(a: &Rational, b: &Rational) -> Rational {
    (a + b) / Rational::from_integer(2.into())
}

/// Some rational `q` with `lo ≤ q < hi`.
fn rational_at_or_above(lo: &GroupValue, hi: &Rational) -> Rational {
    if let Some(q) = lo.as_rational() {
        return q.clone();
    }
    let mut step = Rational::one();
    loop {
        let q = hi - &step;
        if GroupValue::rational(q.clone(), lo.delta().clone()) >= *lo {
            return q;
        }
        step /= Rational::from_integer(2.into());
    }
}

/// Some rational strictly between `lo` and `hi`.
fn rational_strictly_between(lo: &GroupValue, hi: &Rational) -> Rational {
    let mut step = Rational::one();
    loop {
        let q = hi - &step;
        if GroupValue::rational(q.clone(), lo.delta().clone()) > *lo {
            return q;
        }
        step /= Rational::from_integer(2.into());
    }
}

/// A rational strictly above an irrational breadth and strictly below `upper`.
fn rational_above(delta: &Breadth, upper: Option<&Rational>) -> Rational {
    let Breadth::Quad(x) = delta else { unreachable!("irrational breadth") };
    let Some(u) = upper else {
        return x.lower_approximant(1) + Rational::one();
    };
    (1..).map(|n| half(&x.lower_approximant(n), u)).find(|q| delta.cmp_rational(q).is_lt()).expect("u > delta")
}

fn base_transcendental(e: &PCSeq, phis: &[RationalFunction]) -> Result<WitnessSet> {
    for n in 0..=e.max_index() {
        let (s, d) = e.materialize(n)?;
        let mut clear = true;
        let mut crit: Option<Rational> = None;
        for phi in phis {
            for p in [phi.num(), phi.den()] {
                let (count, below) = split_at_gauge(p, &s, &d)?;
                clear &= count == 0;
                for (r, _) in below {
                    crit = Some(crit.map_or(r.clone(), |c: Rational| c.max(r)));
                }
            }
        }
        if clear {
            let radius = crit.map_or_else(|| &d - Rational::one(), |c| half(&c, &d));
            return Ok(WitnessSet::NotOmega { center: s, radius });
        }
    }
    Err(Error::Uncertified(format!("critical points never fell below the gauge by index {}", e.max_index())))
}

fn base_cauchy_outside(e: &PCSeq, phis: &[RationalFunction]) -> Result<WitnessSet> {
    let profiles: Vec<_> = phis.iter().map(|p| valuations::value_profile(p, e)).collect::<Result<_>>()?;
    let start = profiles.iter().map(|p| p.from_index).max().unwrap_or(0);
    for m in start..=e.max_index() {
        let (s, d) = e.materialize(m)?;
        let mut thr: Option<Rational> = None;
        let mut bump = |q: Rational| thr = Some(thr.take().map_or(q.clone(), |t: Rational| t.max(q)));
        for (phi, prof) in phis.iter().zip(&profiles) {
            for r in root_distances(phi, &s)?.finite_distances() {
                if r < d {
                    bump(r);
                }
            }
            if prof.lambda > 0 {
                bump(-&prof.gamma / Rational::from_integer(prof.lambda.into()));
            }
        }
        match thr {
            Some(t) if t >= d => continue,
            Some(t) => return Ok(WitnessSet::NotOmega { center: s, radius: half(&t, &d) }),
            None => return Ok(WitnessSet::NotOmega { center: s, radius: &d - Rational::one() }),
        }
    }
    Err(Error::Uncertified(format!("no separating radius by index {}", e.max_index())))
}

fn base_pseudo_limit(e: &PCSeq, beta: &FieldElem, phis: &[RationalFunction]) -> Result<WitnessSet> {
    let delta = e.breadth();
    if !delta.is_finite() {
        let mut theta = Rational::zero();
        for phi in phis {
            let finite = root_distances(phi, beta)?.finite_distances();
            let lo = finite.last().cloned().unwrap_or_else(|| Rational::from_integer((-1).into()));
            theta = theta.max(lo.clone());
            let law = annulus_law_to(phi, beta, &lo, &Breadth::Infinity)?;
            if law.lambda > 0 {
                theta = theta.max(-&law.gamma / Rational::from_integer(law.lambda.into()));
            }
        }
        return Ok(WitnessSet::NotOmega { center: beta.clone(), radius: theta });
    }
    let mut theta1: Option<Rational> = None;
    let mut upper: Option<Rational> = None;
    for phi in phis {
        let a = stable_annulus(phi, e)?;
        theta1 = Some(theta1.map_or(a.delta_prime.clone(), |t| t.max(a.delta_prime.clone())));
        if let Breadth::Quad(_) = delta {
            let dist = root_distances(phi, beta)?;
            let mut caps: Vec<Rational> = dist.min_at_least(&delta).and_then(|v| v.finite().cloned()).into_iter().collect();
            if a.lambda < 0 {
                caps.push(-&a.gamma / Rational::from_integer(a.lambda.into()));
            }
            for c in caps.into_iter().filter(|c| delta.cmp_rational(c).is_lt()) {
                upper = Some(upper.map_or(c.clone(), |u: Rational| u.min(c)));
            }
        }
    }
    let theta2 = match &delta {
        Breadth::Rational(d) => d.clone(),
        _ => rational_above(&delta, upper.as_ref()),
    };
    let theta1 = theta1.expect("nonempty Phi");
    Ok(WitnessSet::All {
        parts: vec![
            WitnessSet::NotOmega { center: beta.clone(), radius: theta1 },
            WitnessSet::Omega { center: beta.clone(), radius: theta2 },
        ],
    })
}

/// A set excluding `f` while keeping `e`: first `∁B(t^κ/φ)` for some φ with
/// `w_F(φ) < κ < 0`, else `Ω(tₙ, γ)` with `w_E(X − tₙ) ≤ γ < δᶠₙ`.
fn patch(e: &PCSeq, f: &PCSeq, phis: &[RationalFunction]) -> Result<Option<WitnessSet>> {
    for phi in phis {
        if let WValue::Value(w) = valuations::w_e(phi, f)? {
            if !w.is_nonnegative() {
                let kappa = rational_strictly_between(&w, &Rational::zero());
                let d = FieldElem::t_pow(kappa);
                let function = RationalFunction::constant(d).div(phi)?;
                return Ok(Some(WitnessSet::NotB { function }));
            }
        }
    }
    for n in 0..=f.max_index().min(40) {
        let (tn, dn) = f.materialize(n)?;
        let Some(we) = w_linear(e, &tn)? else { continue };
        if we < GroupValue::rational(dn.clone(), we.delta().clone()) {
            let radius = rational_at_or_above(&we, &dn);
            return Ok(Some(WitnessSet::Omega { center: tn, radius }));
        }
    }
    Ok(None)
}

/// Builds and verifies a set around `V_E` that avoids every sample ring.
pub fn separator(e: &PCSeq, phis: &[RationalFunction], sample: &[PCSeq]) -> Result<SeparationWitness> {
    for phi in phis {
        if !valuations::member(phi, e, Ring::V)? {
            return Err(Error::precondition("separator", format!("{phi} is not in V_E")));
        }
    }
    for f in sample {
        let mut outside = false;
        for phi in phis {
            if !valuations::member(phi, f, Ring::V)? {
                outside = true;
                break;
            }
        }
        if !outside {
            return Err(Error::precondition("separator", format!("sample ring V_E({}) lies in B(Phi)", f.label())));
        }
    }
    let mut witness = SeparationWitness {
        case: SeparatorCase::Trivial,
        point: e.label(),
        set: WitnessSet::Whole,
        checks: Vec::new(),
        candidates: Vec::new(),
    };
    if sample.is_empty() {
        return Ok(witness);
    }
    let (case, base) = match e.limit() {
        LimitData::Transcendental => (SeparatorCase::Transcendental, base_transcendental(e, phis)?),
        LimitData::Algebraic { .. } => (SeparatorCase::CauchyOutsideK, base_cauchy_outside(e, phis)?),
        LimitData::InK(beta) => {
            for phi in phis {
                witness.candidates.extend(enumerate_increasing(phi, &Rational::zero(), std::slice::from_ref(beta))?);
            }
            (SeparatorCase::PseudoLimitInK, base_pseudo_limit(e, beta, phis)?)
        }
    };
    witness.case = case;
    let mut set = base.clone();
    for f in sample {
        let excluded_by_base = !base.contains(f)?;
        let mut check = SampleCheck { ring: format!("V_E({})", f.label()), excluded_by_base, patch: None, separated: true };
        if !excluded_by_base {
            let p = patch(e, f, phis)?
                .ok_or_else(|| Error::Verification(format!("no witness excludes V_E({})", f.label())))?;
            check.patch = Some(p.to_string());
            set = set.and(p);
        }
        witness.checks.push(check);
    }
    if !set.contains(e)? {
        return Err(Error::Verification(format!("witness {set} lost the point V_E({})", e.label())));
    }
    for (f, check) in sample.iter().zip(witness.checks.iter_mut()) {
        if set.contains(f)? {
            check.separated = false;
            return Err(Error::Verification(format!("sample ring V_E({}) lands inside {set}", f.label())));
        }
    }
    witness.set = set;
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::int;
    use crate::pcv::{fixture, GaugeSpec};

    fn rf(s: &str) -> RationalFunction {
        s.parse().unwrap()
    }

    #[test]
    fn far_ball_is_excluded_by_radius() {
        let e1 = fixture("E1").unwrap();
        let f = PCSeq::single_term("t^3".parse().unwrap(), GaugeSpec::dyadic(int(4), int(1)).unwrap()).unwrap();
        let w = separator(&e1, &[rf("t/X")], &[f]).unwrap();
        assert_eq!(w.case, SeparatorCase::PseudoLimitInK);
        assert!(w.checks[0].excluded_by_base);
    }

    #[test]
    fn transcendental_point() {
        let e5 = fixture("E5").unwrap();
        let w = separator(&e5, &[rf("1/X")], &[fixture("E1").unwrap()]).unwrap();
        assert_eq!(w.case, SeparatorCase::Transcendental);
        assert!(matches!(w.set, WitnessSet::NotOmega { .. }));
    }

    #[test]
    fn pole_inside_the_ball_needs_a_patch() {
        let e1 = fixture("E1").unwrap();
        let f = PCSeq::single_term("t".parse().unwrap(), GaugeSpec::dyadic(int(2), int(1)).unwrap()).unwrap();
        let w = separator(&e1, &[rf("X/(X - t)")], std::slice::from_ref(&f)).unwrap();
        assert!(!w.checks[0].excluded_by_base);
        assert!(w.checks[0].patch.as_deref().is_some_and(|p| p.starts_with("complement of B(")));
        assert!(!w.set.contains(&f).unwrap());
    }

    #[test]
    fn empty_sample_is_trivial() {
        let w = separator(&fixture("E2").unwrap(), &[rf("1")], &[]).unwrap();
        assert_eq!(w.set, WitnessSet::Whole);
    }

    #[test]
    fn sample_inside_b_phi_is_rejected() {
        let err = separator(&fixture("E5").unwrap(), &[rf("1")], &[fixture("E1").unwrap()]).unwrap_err();
        assert!(matches!(err, Error::Precondition { .. }));
    }
}
