//! Finite-sample experiments on the Zariski and constructible topologies.

mod residue;
mod separator;

use std::fmt;

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldElem, RationalFunction};
use crate::newton::root_distances;
use crate::num::{Breadth, Rational, Val};
use crate::pcv::{GaugeSpec, LimitData, PCSeq};
use crate::valuations::{self, annulus_law_to, Ring, WValue};

pub use residue::{residue_separator, ResidueProbe, ResidueSeparator};
pub use separator::{separator, SampleCheck, SeparationWitness, SeparatorCase, WitnessSet};

/// A point of the space of valuation rings, described finitely.
#[derive(Clone, Debug)]
pub enum RingDescriptor {
    VE(PCSeq),
    WE(PCSeq),
    /// `{φ : φ(s) ∈ V}`.
    WPoint(FieldElem),
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::VE(e) => write!(f, "V_E({})", e.label()),
            RingDescriptor::WE(e) => write!(f, "W_E({})", e.label()),
            RingDescriptor::WPoint(s) => write!(f, "W_({s})"),
        }
    }
}

/// Whether φ lies in the ring.
pub fn in_b(phi: &RationalFunction, ring: &RingDescriptor) -> Result<bool> {
    match ring {
        RingDescriptor::VE(e) => valuations::member(phi, e, Ring::V),
        RingDescriptor::WE(e) => valuations::member(phi, e, Ring::W),
        RingDescriptor::WPoint(s) => Ok(phi.eval(s)?.val() >= Val::Finite(Rational::from_integer(0.into()))),
    }
}

/// `w_E(X − s)`, with ∞ when s is a Cauchy limit.
pub fn w_linear(e: &PCSeq, s: &FieldElem) -> Result<Option<valuations::GroupValue>> {
    let x_minus_s = RationalFunction::linear(s);
    Ok(match valuations::w_e(&x_minus_s, e)? {
        WValue::Value(g) => Some(g),
        WValue::Socle { .. } => None,
        WValue::OutsideDomain { .. } => unreachable!("X - s has no poles"),
    })
}

/// `V_E ∈ Ω(s, γ)`, i.e. `w_E(X − s) ≤ γ`.
pub fn omega_membership(e: &PCSeq, s: &FieldElem, gamma: &Rational) -> Result<bool> {
    Ok(match w_linear(e, s)? {
        Some(w) => w.cmp(&valuations::GroupValue::rational(gamma.clone(), w.delta().clone())).is_le(),
        None => false,
    })
}

/// `(c, k)` with `Ω(s, γ) = B(c/(X − s)^k)`; here `c = t^γ` and `k = 1`.
pub fn omega_identity_witness(_s: &FieldElem, gamma: &Rational) -> (FieldElem, u32) {
    (FieldElem::t_pow(gamma.clone()), 1)
}

/// The function `c/(X − s)^k` of [`omega_identity_witness`].
pub fn omega_witness_function(s: &FieldElem, gamma: &Rational) -> RationalFunction {
    let (c, k) = omega_identity_witness(s, gamma);
    RationalFunction::new(crate::field::Poly::constant(c), crate::field::Poly::linear(s).pow(k))
        .expect("nonzero denominator")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConvergenceVerdict {
    Agrees,
    Disagrees,
    UndecidedAtDepth,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvergenceItem {
    pub function: String,
    /// `φ ∈ W_{sₙ}` for `n = 0..=depth`; a pole counts as outside.
    pub memberships: Vec<bool>,
    /// Start of the final constant run.
    pub stable_from: usize,
    pub stable_value: bool,
    pub expected: bool,
    pub verdict: ConvergenceVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvergenceReport {
    pub depth: usize,
    pub items: Vec<ConvergenceItem>,
}

impl ConvergenceReport {
    pub fn all_agree(&self) -> bool {
        self.items.iter().all(|i| i.verdict == ConvergenceVerdict::Agrees)
    }
}

/// Tracks `φ ∈ W_{sₙ}` against `φ ∈ V_E`. A run counts as stable once it covers
/// the second half of the window.
pub fn convergence_scan(e: &PCSeq, phis: &[RationalFunction], depth: usize) -> Result<ConvergenceReport> {
    if matches!(e.limit(), LimitData::Transcendental) {
        return Err(Error::precondition("converge", "needs a pseudo-limit in K or a Cauchy sequence"));
    }
    let depth = depth.min(e.max_index());
    let terms: Vec<FieldElem> = (0..=depth).map(|n| e.term(n)).collect::<Result<_>>()?;
    let mut items = Vec::with_capacity(phis.len());
    for phi in phis {
        let memberships: Vec<bool> = terms
            .iter()
            .map(|s| match in_b(phi, &RingDescriptor::WPoint(s.clone())) {
                Err(Error::Pole { .. }) => Ok(false),
                other => other,
            })
            .collect::<Result<_>>()?;
        let last = *memberships.last().expect("depth + 1 terms");
        let stable_from = memberships.iter().rposition(|&b| b != last).map_or(0, |i| i + 1);
        let expected = in_b(phi, &RingDescriptor::VE(e.clone()))?;
        let verdict = if stable_from > depth / 2 {
            ConvergenceVerdict::UndecidedAtDepth
        } else if last == expected {
            ConvergenceVerdict::Agrees
        } else {
            ConvergenceVerdict::Disagrees
        };
        items.push(ConvergenceItem {
            function: phi.to_string(),
            memberships,
            stable_from,
            stable_value: last,
            expected,
            verdict,
        });
    }
    Ok(ConvergenceReport { depth, items })
}

/// A breadth at which a sequence centered near `center` makes `w(φ)` hit the target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub center: FieldElem,
    #[serde(with = "crate::num::serde_rational")]
    pub delta_f: Rational,
    pub lambda: i64,
    #[serde(with = "crate::num::serde_rational")]
    pub gamma: Rational,
    /// The critical-radius interval `(lo, hi]` holding `delta_f`.
    pub interval: String,
}

impl Candidate {
    /// `sₙ = center + t^{δ_F − 1/2ⁿ}`, a sequence realizing the candidate.
    pub fn sequence(&self) -> Result<PCSeq> {
        PCSeq::single_term(self.center.clone(), GaugeSpec::dyadic(self.delta_f.clone(), Rational::from_integer(1.into()))?)
    }
}

/// Candidates `δ_F` solving `λδ_F + γ = target` with `λ > 0`, one linear law per
/// interval between consecutive critical radii about each center.
pub fn enumerate_increasing(phi: &RationalFunction, target: &Rational, centers: &[FieldElem]) -> Result<Vec<Candidate>> {
    if phi.is_zero() {
        return Err(Error::Zero { what: "function", needed: "enumeration" });
    }
    let mut out = Vec::new();
    for c in centers {
        let radii = root_distances(phi, c)?.finite_distances();
        let mut edges: Vec<Option<Rational>> = vec![None];
        edges.extend(radii.iter().cloned().map(Some));
        for (i, lo) in edges.iter().enumerate() {
            let hi = radii.get(i).cloned();
            let (lo_q, hi_b) = match (lo, &hi) {
                (None, Some(h)) => (h - Rational::from_integer(2.into()), Breadth::Rational(h.clone())),
                (None, None) => (Rational::from_integer(0.into()), Breadth::Infinity),
                (Some(l), Some(h)) => (l.clone(), Breadth::Rational(h.clone())),
                (Some(l), None) => (l.clone(), Breadth::Infinity),
            };
            let law = annulus_law_to(phi, c, &lo_q, &hi_b)?;
            if law.lambda <= 0 {
                continue;
            }
            let d = (target - &law.gamma) / Rational::from_integer(law.lambda.into());
            let above_lo = lo.as_ref().is_none_or(|l| &d > l);
            let below_hi = hi.as_ref().is_none_or(|h| &d <= h);
            if above_lo && below_hi {
                out.push(Candidate {
                    center: c.clone(),
                    delta_f: d,
                    lambda: law.lambda,
                    gamma: law.gamma,
                    interval: format!(
                        "({}, {}]",
                        lo.as_ref().map_or("-inf".to_string(), |l| l.to_string()),
                        hi.as_ref().map_or("inf".to_string(), |h| h.to_string())
                    ),
                });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntRProbe {
    pub x: FieldElem,
    /// `v(φ(x))`, `None` at a pole.
    pub value: Option<Val>,
    pub integral: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub point: FieldElem,
    pub sequence: String,
    pub w: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntRReport {
    pub probes: Vec<IntRProbe>,
    pub grid_integral: bool,
    /// `(sequence, w_E(φ) ≥ 0)` per sample.
    pub sample_checks: Vec<(String, bool)>,
    pub counterexample: Option<Counterexample>,
    pub consistent: bool,
}

const LADDER: [(i64, i64); 10] = [(-2, 1), (-1, 1), (-1, 2), (0, 1), (1, 4), (1, 2), (1, 1), (3, 2), (2, 1), (3, 1)];

fn w_nonnegative(phi: &RationalFunction, e: &PCSeq) -> Result<bool> {
    Ok(match valuations::w_e(phi, e)? {
        WValue::Value(g) => g.is_nonnegative(),
        WValue::Socle { .. } => true,
        WValue::OutsideDomain { .. } => false,
    })
}

/// Compares integrality of φ on a probe grid with `w_E(φ) ≥ 0` on the sample.
pub fn intr_consistency(phi: &RationalFunction, sample: &[PCSeq], backend: crate::field::Backend) -> Result<IntRReport> {
    let phi = match backend {
        crate::field::Backend::Rational => phi.clone(),
        b => phi.to_backend(b)?,
    };
    let coeffs: Vec<i64> = match backend {
        crate::field::Backend::Rational => vec![1, 2, 3],
        crate::field::Backend::Prime(p) => (1..p as i64).collect(),
    };
    let mut points = vec![FieldElem::zero()];
    for (a, b) in LADDER {
        for &c in &coeffs {
            let x = FieldElem::from_int(c).mul(&FieldElem::t_pow(crate::num::rat(a, b)));
            points.push(match backend {
                crate::field::Backend::Rational => x,
                b => x.to_backend(b)?,
            });
        }
    }
    let zero = Val::Finite(Rational::from_integer(0.into()));
    let probes: Vec<IntRProbe> = points
        .into_iter()
        .map(|x| {
            let value = phi.eval(&x).ok().map(|y| y.val());
            let integral = value.as_ref().is_some_and(|v| v >= &zero);
            IntRProbe { x, value, integral }
        })
        .collect();
    let grid_integral = probes.iter().all(|p| p.integral);
    let mut report = IntRReport { probes, grid_integral, sample_checks: Vec::new(), counterexample: None, consistent: true };
    if grid_integral {
        for e in sample {
            let ok = w_nonnegative(&phi, e)?;
            report.consistent &= ok;
            report.sample_checks.push((e.label(), ok));
        }
        return Ok(report);
    }
    let bad = report.probes.iter().find(|p| !p.integral).expect("some probe fails").x.clone();
    report.counterexample = Some(counterexample_at(&phi, &bad)?);
    Ok(report)
}

/// A Cauchy sequence converging to a non-critical point near `x` where φ is not integral.
fn counterexample_at(phi: &RationalFunction, x: &FieldElem) -> Result<Counterexample> {
    let dist = root_distances(phi, x)?;
    let mut point = x.clone();
    if dist.entries().any(|(d, _)| d.is_infinite()) {
        let far = dist.finite_distances().last().cloned().unwrap_or_else(|| Rational::from_integer(0.into()));
        let mut k = far.floor() + Rational::from_integer(1.into());
        loop {
            point = x + &FieldElem::t_pow(k.clone());
            if matches!(phi.eval(&point).map(|y| y.val()), Ok(Val::Finite(v)) if v.is_negative()) {
                break;
            }
            k += Rational::from_integer(1.into());
            if k > far.clone() + Rational::from_integer(64.into()) {
                return Err(Error::Verification(format!("no non-critical point near {x} with phi outside V")));
            }
        }
    }
    let offset = match point.val() {
        Val::Finite(v) => v.floor() + Rational::from_integer(1.into()),
        Val::Infinity => Rational::from_integer(1.into()),
    };
    let seq = PCSeq::new(crate::pcv::SeqKind::CauchyToK {
        limit: point.clone(),
        gauge: GaugeSpec::linear(Rational::from_integer(1.into()), offset)?,
    })?
    .with_backend(point_backend(&point));
    let w = valuations::w_e(phi, &seq)?;
    match &w {
        WValue::Value(g) if !g.is_nonnegative() => {}
        other => return Err(Error::Verification(format!("expected w_E(phi) < 0 at {point}, got {other}"))),
    }
    Ok(Counterexample { point, sequence: seq.to_string(), w: w.to_string() })
}

fn point_backend(x: &FieldElem) -> crate::field::Backend {
    x.num()
        .terms()
        .first()
        .and_then(|(_, c)| c.modulus())
        .map_or(crate::field::Backend::Rational, crate::field::Backend::Prime)
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
    fn in_b_examples() {
        assert!(in_b(&rf("X/t"), &RingDescriptor::WPoint("t".parse().unwrap())).unwrap());
        assert!(!in_b(&rf("X/t"), &RingDescriptor::VE(fixture("E1").unwrap())).unwrap());
        assert!(!in_b(&rf("t/X"), &RingDescriptor::WPoint("t^2".parse().unwrap())).unwrap());
    }

    #[test]
    fn omega_examples() {
        let e1 = fixture("E1").unwrap();
        assert!(!omega_membership(&e1, &FieldElem::zero(), &rat(1, 2)).unwrap());
        assert!(omega_membership(&e1, &"t^(1/4)".parse().unwrap(), &rat(1, 2)).unwrap());
        assert_eq!(omega_identity_witness(&FieldElem::zero(), &rat(1, 2)), (FieldElem::t_pow(rat(1, 2)), 1));
    }

    #[test]
    fn convergence_examples() {
        let e1 = fixture("E1").unwrap();
        let r = convergence_scan(&e1, &[rf("X/t"), rf("t/X")], 40).unwrap();
        assert!(r.all_agree());
        assert_eq!((r.items[0].stable_value, r.items[1].stable_value), (false, true));
        let e3 = fixture("E3").unwrap();
        let r = convergence_scan(&e3, &[rf("1/(X - t/(1 - t))")], 40).unwrap();
        assert!(r.all_agree());
        assert!(!r.items[0].stable_value);
    }

    #[test]
    fn enumerate_examples() {
        let zero = [FieldElem::zero()];
        let c = enumerate_increasing(&rf("X/t"), &int(0), &zero).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].delta_f, int(1));
        let c = enumerate_increasing(&rf("X^2/t^3"), &int(0), &zero).unwrap();
        assert_eq!(c.iter().map(|c| c.delta_f.clone()).collect::<Vec<_>>(), vec![rat(3, 2)]);
        assert!(enumerate_increasing(&rf("t"), &int(0), &zero).unwrap().is_empty());
    }

    #[test]
    fn intr_examples() {
        let b = crate::field::Backend::Rational;
        let r = intr_consistency(&rf("X/t"), &[fixture("E1").unwrap()], b).unwrap();
        assert!(!r.grid_integral);
        assert!(r.counterexample.is_some());
        let r = intr_consistency(&rf("t^2"), &[fixture("E1").unwrap(), fixture("E2").unwrap()], b).unwrap();
        assert!(r.grid_integral && r.consistent);
    }
}
