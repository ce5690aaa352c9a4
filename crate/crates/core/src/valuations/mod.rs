//! Monomial valuations, value profiles, `w_E`, `v_E` and the rank dichotomy.

mod annulus;
mod group;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Backend, FieldElem, Poly, RationalFunction};
use crate::newton::{poly_root_distances, split_at_gauge, stabilized_distance_count};
use crate::num::{Breadth, Rational, Val};
use crate::pcv::{LimitData, PCSeq};

pub use annulus::{annulus_law, annulus_law_to, rationals_between, stable_annulus, AnnulusLaw, StableAnnulus};
pub use group::{CauchyValue, GroupValue, RankTwoValue, VeValue, WValue};

/// `v_{α,δ}(φ)` with the minimizing indices of numerator and denominator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialValue {
    pub value: GroupValue,
    pub num_argmin: Vec<usize>,
    pub den_argmin: Vec<usize>,
}

fn poly_monomial_val(f: &Poly, alpha: &FieldElem, delta: &Breadth) -> (GroupValue, Vec<usize>) {
    let shifted = f.taylor_shift(alpha);
    let mut best: Option<GroupValue> = None;
    let mut argmin = Vec::new();
    for (i, a) in shifted.coeffs().iter().enumerate() {
        let Val::Finite(v) = a.val() else { continue };
        let g = GroupValue::new(v, i as i64, delta.clone());
        match best.as_ref().map(|b| g.cmp(b)) {
            None | Some(std::cmp::Ordering::Less) => {
                best = Some(g);
                argmin = vec![i];
            }
            Some(std::cmp::Ordering::Equal) => argmin.push(i),
            Some(std::cmp::Ordering::Greater) => {}
        }
    }
    (best.expect("nonzero polynomial"), argmin)
}

/// Monomial valuation centered at α with radius δ.
pub fn monomial_val(phi: &RationalFunction, alpha: &FieldElem, delta: &Breadth) -> Result<MonomialValue> {
    if phi.is_zero() {
        return Err(Error::Zero { what: "function", needed: "monomial valuation" });
    }
    if !delta.is_finite() {
        return Err(Error::precondition("monomial_val", "radius must be finite"));
    }
    let (n, num_argmin) = poly_monomial_val(phi.num(), alpha, delta);
    let (d, den_argmin) = poly_monomial_val(phi.den(), alpha, delta);
    Ok(MonomialValue { value: &n - &d, num_argmin, den_argmin })
}

/// Largest minimizing index at the pseudo-limit: the dominating degree read off the monomial valuation.
pub fn newton_index(phi: &RationalFunction, e: &PCSeq) -> Result<Option<i64>> {
    let (Some(beta), true) = (e.pseudo_limit(), e.breadth().is_finite()) else {
        return Ok(None);
    };
    let mv = monomial_val(&in_backend(phi, e)?, &beta_in_backend(beta, e)?, &e.breadth())?;
    let top = |v: &[usize]| *v.iter().max().expect("nonempty argmin") as i64;
    Ok(Some(top(&mv.num_argmin) - top(&mv.den_argmin)))
}

/// `v(φ(sₙ)) = λδₙ + γ` for all `n ≥ from_index`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValueProfile {
    pub lambda: i64,
    #[serde(with = "crate::num::serde_rational")]
    pub gamma: Rational,
    pub from_index: usize,
    /// False when λ rests on the stabilization heuristic alone.
    pub certified: bool,
}

impl ValueProfile {
    pub fn predict(&self, delta_n: &Rational) -> Rational {
        Rational::from_integer(self.lambda.into()) * delta_n + &self.gamma
    }
}

impl fmt::Display for ValueProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lambda = {}, gamma = {}, from n = {}", self.lambda, self.gamma, self.from_index)?;
        if !self.certified {
            write!(f, " (heuristic)")?;
        }
        Ok(())
    }
}

fn in_backend(phi: &RationalFunction, e: &PCSeq) -> Result<RationalFunction> {
    match e.backend() {
        Backend::Rational => Ok(phi.clone()),
        b => phi.to_backend(b),
    }
}

fn beta_in_backend(beta: &FieldElem, e: &PCSeq) -> Result<FieldElem> {
    match e.backend() {
        Backend::Rational => Ok(beta.clone()),
        b => beta.to_backend(b),
    }
}

/// Number of roots of `f` that are pseudo-limits of E, when it is known exactly.
pub fn pseudo_limit_root_count(f: &Poly, e: &PCSeq) -> Result<Option<usize>> {
    match e.limit() {
        LimitData::InK(beta) => {
            let beta = beta_in_backend(beta, e)?;
            let delta = e.breadth();
            let count = poly_root_distances(f, &beta)?
                .into_iter()
                .filter(|(d, _)| d.cmp_breadth(&delta).is_ge())
                .map(|(_, m)| m)
                .sum();
            Ok(Some(count))
        }
        LimitData::Algebraic { minimal_polynomial } if e.backend() == Backend::Rational => {
            Ok(Some(f.order_at(minimal_polynomial)?))
        }
        LimitData::Transcendental if e.backend() == Backend::Rational => Ok(Some(0)),
        _ => Ok(None),
    }
}

/// `v(φ(s))`, ∞ at a zero, error at a pole.
pub fn value_at(phi: &RationalFunction, s: &FieldElem) -> Result<Val> {
    let (n, d) = phi.eval_parts(s);
    match (n.val(), d.val()) {
        (_, Val::Infinity) => Err(Error::Pole { at: s.to_string() }),
        (Val::Infinity, _) => Ok(Val::Infinity),
        (Val::Finite(a), Val::Finite(b)) => Ok(Val::Finite(a - b)),
    }
}

/// The value profile of φ along E.
///
/// λ is the number of pseudo-limit zeros minus pseudo-limit poles. The profile
/// starts at the first index where the roots within `δₙ` of `sₙ` are exactly
/// those pseudo-limits; past that index every other root sits at a fixed distance.
pub fn value_profile(phi: &RationalFunction, e: &PCSeq) -> Result<ValueProfile> {
    if phi.is_zero() {
        return Err(Error::Zero { what: "function", needed: "value profile" });
    }
    let phi = in_backend(phi, e)?;
    let exact = (pseudo_limit_root_count(phi.num(), e)?, pseudo_limit_root_count(phi.den(), e)?);
    let (lambda, start, certified) = match exact {
        (Some(zn), Some(zd)) => {
            let mut found = None;
            for n in 0..=e.max_index() {
                let (s, d) = e.materialize(n)?;
                if split_at_gauge(phi.num(), &s, &d)?.0 == zn && split_at_gauge(phi.den(), &s, &d)?.0 == zd {
                    found = Some(n);
                    break;
                }
            }
            let n = found.ok_or_else(|| {
                Error::Uncertified(format!("root distances did not separate by index {}", e.max_index()))
            })?;
            (zn as i64 - zd as i64, n, true)
        }
        _ => {
            let a = stabilized_distance_count(phi.num(), e)?;
            let b = stabilized_distance_count(phi.den(), e)?;
            match (a.certified_at, b.certified_at) {
                (Some(i), Some(j)) => (a.count as i64 - b.count as i64, i.max(j), false),
                _ => {
                    return Err(Error::Uncertified(format!(
                        "distance counts did not stabilize by index {}",
                        e.max_index()
                    )))
                }
            }
        }
    };
    let observe = |n: usize| -> Result<(Rational, Rational)> {
        let (s, d) = e.materialize(n)?;
        match value_at(&phi, &s)? {
            Val::Finite(v) => Ok((v, d)),
            Val::Infinity => Err(Error::Verification(format!("phi vanishes at s_{n}"))),
        }
    };
    let (v, d) = observe(start)?;
    let profile = ValueProfile { lambda, gamma: v - Rational::from_integer(lambda.into()) * &d, from_index: start, certified };
    for n in start + 1..=(start + 3).min(e.max_index()) {
        let (v, d) = observe(n)?;
        if v != profile.predict(&d) {
            return Err(Error::Verification(format!("profile {profile} fails at n = {n}: observed {v}")));
        }
    }
    Ok(profile)
}

/// Dominating degree: pseudo-limit zeros minus pseudo-limit poles.
pub fn degdom(phi: &RationalFunction, e: &PCSeq) -> Result<i64> {
    Ok(value_profile(phi, e)?.lambda)
}

/// `w_E(φ) = λδ + γ`; Cauchy sequences report the socle instead of a value when λ ≠ 0.
pub fn w_e(phi: &RationalFunction, e: &PCSeq) -> Result<WValue> {
    let p = value_profile(phi, e)?;
    let delta = e.breadth();
    if !delta.is_finite() {
        return Ok(match p.lambda {
            0 => WValue::Value(GroupValue::rational(p.gamma, delta)),
            l if l > 0 => WValue::Socle { order: l },
            l => WValue::OutsideDomain { order: l },
        });
    }
    let w = GroupValue::new(p.gamma.clone(), p.lambda, delta.clone());
    if let Some(beta) = e.pseudo_limit() {
        let mv = monomial_val(&in_backend(phi, e)?, &beta_in_backend(beta, e)?, &delta)?;
        if mv.value != w {
            return Err(Error::Verification(format!(
                "w_E = {w} disagrees with the monomial valuation {} at the pseudo-limit",
                mv.value
            )));
        }
    }
    Ok(WValue::Value(w))
}

/// The valuation `v_E` in the regime dictated by E.
pub fn v_e(phi: &RationalFunction, e: &PCSeq) -> Result<VeValue> {
    let delta = e.breadth();
    if !delta.is_finite() {
        let p = value_profile(phi, e)?;
        return Ok(VeValue::Cauchy(CauchyValue { order: p.lambda, value: p.gamma }));
    }
    let w = match w_e(phi, e)? {
        WValue::Value(w) => w,
        other => unreachable!("finite breadth gives a value, got {other}"),
    };
    if delta.as_rational().is_some() && e.generator_type() == crate::pcv::SeqType::Algebraic {
        let lambda = degdom(phi, e)?;
        Ok(VeValue::RankTwo(RankTwoValue { first: w, second: -lambda }))
    } else {
        Ok(VeValue::RankOne(w))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Ring {
    V,
    W,
}

impl std::str::FromStr for Ring {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "V" | "v" => Ok(Ring::V),
            "W" | "w" => Ok(Ring::W),
            _ => Err(Error::Parse { pos: 0, msg: format!("ring must be V or W, got {s:?}") }),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::V => write!(f, "V"),
            Ring::W => write!(f, "W"),
        }
    }
}

/// Membership of φ in `V_E` or `W_E`.
pub fn member(phi: &RationalFunction, e: &PCSeq, ring: Ring) -> Result<bool> {
    match ring {
        Ring::V => Ok(v_e(phi, e)?.is_nonnegative()),
        Ring::W => {
            if e.is_cauchy() {
                return Err(Error::precondition("member", "w_E is only a pseudo-valuation for Cauchy sequences"));
            }
            match w_e(phi, e)? {
                WValue::Value(w) => Ok(w.is_nonnegative()),
                other => unreachable!("finite breadth gives a value, got {other}"),
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankReason {
    Transcendental,
    InfiniteBreadth,
    Torsion,
    NonTorsion,
}

impl fmt::Display for RankReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RankReason::Transcendental => "transcendental",
            RankReason::InfiniteBreadth => "infinite-breadth",
            RankReason::Torsion => "torsion",
            RankReason::NonTorsion => "non-torsion",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub rank: u8,
    pub reason: RankReason,
    pub delta: Breadth,
    pub minimal_polynomial: Option<Poly>,
    pub overring: Option<String>,
    pub notes: Vec<String>,
}

impl fmt::Display for RankReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.reason {
            RankReason::Transcendental => write!(f, "rank 1 (transcendental)")?,
            RankReason::InfiniteBreadth => write!(f, "rank 2 (infinite-breadth: delta = inf)")?,
            r => write!(f, "rank {} ({r}: delta = {})", self.rank, self.delta)?,
        }
        if let Some(q) = &self.minimal_polynomial {
            write!(f, "\nminimal polynomial: {q}")?;
        }
        if let Some(o) = &self.overring {
            write!(f, "\noverring: {o}")?;
        }
        Ok(())
    }
}

/// Rank of `V_E` and why.
pub fn rank_report(e: &PCSeq) -> RankReport {
    let delta = e.breadth();
    let mut report = RankReport {
        rank: 1,
        reason: RankReason::Transcendental,
        delta: delta.clone(),
        minimal_polynomial: None,
        overring: None,
        notes: Vec::new(),
    };
    if let LimitData::Transcendental = e.limit() {
        report.notes.push("V_E is an immediate extension of V; not computed".into());
        return report;
    }
    match (&delta, e.limit()) {
        (Breadth::Infinity, limit) => {
            let q = match limit {
                LimitData::InK(beta) => Poly::linear(beta),
                LimitData::Algebraic { minimal_polynomial } => minimal_polynomial.clone(),
                LimitData::Transcendental => unreachable!(),
            };
            report.rank = 2;
            report.reason = RankReason::InfiniteBreadth;
            report.overring = Some(format!("K[X] localized at ({q})"));
            report.minimal_polynomial = Some(q);
        }
        (Breadth::Rational(_), _) => {
            report.rank = 2;
            report.reason = RankReason::Torsion;
            report.overring = Some("W_E".into());
        }
        (Breadth::Quad(_), _) => {
            report.reason = RankReason::NonTorsion;
            report.notes.push("V_E = W_E".into());
        }
    }
    report.notes.push("residue field of V_E equals that of V; not computed".into());
    report
}

/// `(X − β)^k / t^{kδ}` with `kδ` integral: in `W_E` but not in `V_E` when δ is rational.
pub fn torsion_witness(e: &PCSeq) -> Option<RationalFunction> {
    let beta = e.pseudo_limit()?;
    let delta = e.breadth();
    let d = delta.as_rational()?;
    let k = d.denom().clone();
    let c = FieldElem::t_pow(d * Rational::from_integer(k.clone()));
    let k: u32 = k.try_into().ok()?;
    let num = Poly::linear(beta).pow(k);
    RationalFunction::new(num, Poly::constant(c)).ok()
}

/// The pseudo-limit β ∈ K of a sequence of finite breadth, if any.
pub(crate) fn finite_center(e: &PCSeq) -> Result<(FieldElem, Breadth)> {
    match (e.pseudo_limit(), e.breadth()) {
        (Some(b), d) if d.is_finite() => Ok((beta_in_backend(b, e)?, d)),
        _ => Err(Error::precondition("pseudo-limit", "need a pseudo-limit in K and finite breadth")),
    }
}
