//! Pseudo-convergent sequences with closed-form generators.

mod fixtures;
mod spec_file;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Backend, Coeff, FieldElem, Poly};
use crate::num::{Breadth, QuadIrrational, Rational, Val};

pub use fixtures::{fixture, fixture_names, fixtures, squared_e1};
pub use spec_file::{GaugeFile, SeqSpecFile, SeriesFile};

/// Default bound on sequence indices.
pub const DEFAULT_MAX_INDEX: usize = 64;

/// Closed-form gauge `n ↦ δₙ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GaugeSpec {
    /// `δₙ = limit − scale/2ⁿ`.
    Dyadic { limit: Rational, scale: Rational },
    /// Lower continued-fraction approximants of a quadratic irrational.
    QuadIrr { target: QuadIrrational },
    /// `δₙ = offset + slope·n`, breadth ∞.
    Linear { slope: Rational, offset: Rational },
}

impl GaugeSpec {
    pub fn dyadic(limit: Rational, scale: Rational) -> Result<Self> {
        if !scale.is_positive() {
            return Err(Error::precondition("gauge", "dyadic scale must be positive"));
        }
        Ok(GaugeSpec::Dyadic { limit, scale })
    }

    pub fn linear(slope: Rational, offset: Rational) -> Result<Self> {
        if !slope.is_positive() {
            return Err(Error::precondition("gauge", "linear slope must be positive"));
        }
        Ok(GaugeSpec::Linear { slope, offset })
    }

    pub fn value(&self, n: usize) -> Rational {
        match self {
            GaugeSpec::Dyadic { limit, scale } => {
                limit - scale / Rational::from_integer(BigInt::one() << n)
            }
            GaugeSpec::QuadIrr { target } => target.lower_approximant(n),
            GaugeSpec::Linear { slope, offset } => offset + slope * Rational::from_integer(n.into()),
        }
    }

    pub fn breadth(&self) -> Breadth {
        match self {
            GaugeSpec::Dyadic { limit, .. } => Breadth::Rational(limit.clone()),
            GaugeSpec::QuadIrr { target } => Breadth::Quad(target.clone()),
            GaugeSpec::Linear { .. } => Breadth::Infinity,
        }
    }

    /// Whether the exponent denominators grow without bound.
    pub fn unbounded_denominators(&self) -> bool {
        !matches!(self, GaugeSpec::Linear { .. })
    }
}

impl fmt::Display for GaugeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GaugeSpec::Dyadic { limit, scale } => write!(f, "dyadic({limit} - {scale}/2^n)"),
            GaugeSpec::QuadIrr { target } => write!(f, "lower approximants of {target}"),
            GaugeSpec::Linear { slope, offset } => write!(f, "linear({offset} + {slope}*n)"),
        }
    }
}

/// The series `(1 + c·t^e)^r` for a non-integral rational `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialSeries {
    pub power: Rational,
    pub coefficient: Rational,
    pub exponent: Rational,
}

impl BinomialSeries {
    pub fn new(power: Rational, coefficient: Rational, exponent: Rational) -> Result<Self> {
        if power.is_integer() {
            return Err(Error::precondition("series", "power must not be an integer"));
        }
        if coefficient.is_zero() || !exponent.is_positive() {
            return Err(Error::precondition("series", "need nonzero coefficient and positive exponent"));
        }
        Ok(BinomialSeries { power, coefficient, exponent })
    }

    /// Generalized binomial coefficient `C(r, i)·cⁱ`.
    fn term_coefficient(&self, i: usize) -> Rational {
        (0..i).fold(Rational::one(), |acc, j| {
            let j = Rational::from_integer(j.into());
            acc * (&self.power - &j) / (&j + Rational::one()) * &self.coefficient
        })
    }

    /// `q(X) = X^b − (1 + c t^e)^a` for `r = a/b`, cleared of negative powers.
    pub fn minimal_polynomial(&self) -> Poly {
        let a: i64 = self.power.numer().try_into().expect("small power");
        let b: usize = self.power.denom().try_into().expect("small root");
        let base = FieldElem::one()
            + FieldElem::monomial(Coeff::Q(self.coefficient.clone()), self.exponent.clone());
        let xb = Poly::x().pow(b as u32);
        if a >= 0 {
            xb.sub(&Poly::constant(base.pow(a).expect("nonzero base")))
        } else {
            xb.scale(&base.pow(-a).expect("nonzero base")).sub(&Poly::one())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeqKind {
    /// `sₙ = center + t^{δₙ}`.
    SingleTerm { center: FieldElem, gauge: GaugeSpec },
    /// `sₙ = base + Σ_{i≤n} c·t^{gᵢ}`, gauge `δₙ = g_{n+1}`.
    PartialSum { base: FieldElem, coefficient: Rational, exponents: GaugeSpec },
    /// `sₙ` = expansion of `limit` through `t^{δₙ}`, with that last coefficient lowered by one.
    CauchyToK { limit: FieldElem, gauge: GaugeSpec },
    /// Partial sums of a binomial series.
    CauchySeries { series: BinomialSeries },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeqType {
    Algebraic,
    Transcendental,
}

impl fmt::Display for SeqType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeqType::Algebraic => write!(f, "algebraic"),
            SeqType::Transcendental => write!(f, "transcendental"),
        }
    }
}

impl std::str::FromStr for SeqType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "algebraic" => Ok(SeqType::Algebraic),
            "transcendental" => Ok(SeqType::Transcendental),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown sequence type {s:?}") }),
        }
    }
}

/// What is known about the pseudo-limits of a sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LimitData {
    /// A pseudo-limit in K (the limit itself when the breadth is ∞).
    InK(FieldElem),
    /// Cauchy with an algebraic limit outside K.
    Algebraic { minimal_polynomial: Poly },
    /// No algebraic pseudo-limit.
    Transcendental,
}

/// A pseudo-convergent sequence over K.
#[derive(Clone, Debug)]
pub struct PCSeq {
    name: Option<String>,
    kind: SeqKind,
    declared_type: SeqType,
    limit: LimitData,
    backend: Backend,
    max_index: usize,
}

impl PCSeq {
    pub fn new(kind: SeqKind) -> Result<Self> {
        let limit = match &kind {
            SeqKind::SingleTerm { center, .. } => LimitData::InK(center.clone()),
            SeqKind::CauchyToK { limit, gauge } => {
                if gauge.breadth().is_finite() {
                    return Err(Error::precondition("cauchy_to_k", "gauge must be linear (breadth inf)"));
                }
                LimitData::InK(limit.clone())
            }
            SeqKind::PartialSum { base, coefficient, exponents } => {
                if coefficient.is_zero() {
                    return Err(Error::precondition("partial_sum", "coefficient must be nonzero"));
                }
                match exponents {
                    GaugeSpec::Linear { slope, offset } => {
                        let c = FieldElem::monomial(Coeff::Q(coefficient.clone()), offset.clone());
                        let geom = (FieldElem::one() - FieldElem::t_pow(slope.clone())).inv()?;
                        LimitData::InK(base + &c.mul(&geom))
                    }
                    _ => LimitData::Transcendental,
                }
            }
            SeqKind::CauchySeries { series } => {
                LimitData::Algebraic { minimal_polynomial: series.minimal_polynomial() }
            }
        };
        let declared_type = match limit {
            LimitData::Transcendental => SeqType::Transcendental,
            _ => SeqType::Algebraic,
        };
        Ok(PCSeq { name: None, kind, declared_type, limit, backend: Backend::Rational, max_index: DEFAULT_MAX_INDEX })
    }

    pub fn single_term(center: FieldElem, gauge: GaugeSpec) -> Result<Self> {
        Self::new(SeqKind::SingleTerm { center, gauge })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_max_index(mut self, n: usize) -> Self {
        self.max_index = n;
        self
    }

    pub fn with_backend(mut self, b: Backend) -> Self {
        self.backend = b;
        self
    }

    /// Overrides the declared type; a mismatch with the generator shows up in [`PCSeq::classify_type`].
    pub fn with_declared_type(mut self, t: SeqType) -> Self {
        self.declared_type = t;
        self
    }

    /// Replaces the minimal polynomial of an algebraic limit outside K.
    pub fn with_minimal_polynomial(mut self, q: Poly) -> Result<Self> {
        match self.limit {
            LimitData::Algebraic { .. } => {
                self.limit = LimitData::Algebraic { minimal_polynomial: q };
                Ok(self)
            }
            _ => Err(Error::precondition("minimal_polynomial", "only meaningful for limits outside K")),
        }
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| self.to_string())
    }

    pub fn kind(&self) -> &SeqKind {
        &self.kind
    }

    pub fn declared_type(&self) -> SeqType {
        self.declared_type
    }

    pub fn limit(&self) -> &LimitData {
        &self.limit
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn max_index(&self) -> usize {
        self.max_index
    }

    pub fn breadth(&self) -> Breadth {
        match &self.kind {
            SeqKind::SingleTerm { gauge, .. } | SeqKind::CauchyToK { gauge, .. } => gauge.breadth(),
            SeqKind::PartialSum { exponents, .. } => exponents.breadth(),
            SeqKind::CauchySeries { .. } => Breadth::Infinity,
        }
    }

    pub fn is_cauchy(&self) -> bool {
        !self.breadth().is_finite()
    }

    /// The pseudo-limit in K, when one is known.
    pub fn pseudo_limit(&self) -> Option<&FieldElem> {
        match &self.limit {
            LimitData::InK(b) => Some(b),
            _ => None,
        }
    }

    /// Type derived from the generator (not the declaration).
    pub fn generator_type(&self) -> SeqType {
        match self.limit {
            LimitData::Transcendental => SeqType::Transcendental,
            _ => SeqType::Algebraic,
        }
    }

    /// `δₙ = v(s_{n+1} − sₙ)` from the closed form.
    pub fn gauge(&self, n: usize) -> Rational {
        match &self.kind {
            SeqKind::SingleTerm { gauge, .. } | SeqKind::CauchyToK { gauge, .. } => gauge.value(n),
            SeqKind::PartialSum { exponents, .. } => exponents.value(n + 1),
            SeqKind::CauchySeries { series } => &series.exponent * Rational::from_integer((n + 1).into()),
        }
    }

    fn check_index(&self, n: usize) -> Result<()> {
        if n > self.max_index {
            return Err(Error::IndexOverflow { index: n, bound: self.max_index });
        }
        Ok(())
    }

    /// The term `sₙ` alone.
    pub fn term(&self, n: usize) -> Result<FieldElem> {
        self.check_index(n)?;
        let s = match &self.kind {
            SeqKind::SingleTerm { center, gauge } => center + &FieldElem::t_pow(gauge.value(n)),
            SeqKind::PartialSum { base, coefficient, exponents } => {
                let c = Coeff::Q(coefficient.clone());
                let sum = crate::field::SparseSum::from_terms((0..=n).map(|i| (exponents.value(i), c.clone())));
                base + &FieldElem::from_sum(sum)
            }
            SeqKind::CauchyToK { limit, gauge } => {
                let d = gauge.value(n);
                FieldElem::from_sum(limit.expand(&d)) - FieldElem::t_pow(d)
            }
            SeqKind::CauchySeries { series } => {
                let sum = crate::field::SparseSum::from_terms((0..=n).map(|i| {
                    let e = &series.exponent * Rational::from_integer(i.into());
                    (e, Coeff::Q(series.term_coefficient(i)))
                }));
                FieldElem::from_sum(sum)
            }
        };
        match self.backend {
            Backend::Rational => Ok(s),
            b => s.to_backend(b),
        }
    }

    /// `(sₙ, δₙ)`.
    pub fn materialize(&self, n: usize) -> Result<(FieldElem, Rational)> {
        Ok((self.term(n)?, self.gauge(n)))
    }

    /// Whether α is a pseudo-limit. Exact except for transcendental type,
    /// where the answer is a definitional check up to `depth`.
    pub fn is_pseudo_limit(&self, alpha: &FieldElem) -> Result<Verdict> {
        let delta = self.breadth();
        match &self.limit {
            LimitData::InK(beta) if delta.is_finite() => {
                Ok(Verdict::exact((alpha - beta).val().cmp_breadth(&delta).is_ge()))
            }
            LimitData::InK(beta) => Ok(Verdict::exact(alpha == beta)),
            LimitData::Algebraic { .. } => Ok(Verdict::exact(false)),
            LimitData::Transcendental => {
                let depth = self.max_index.min(40);
                for n in 0..=depth {
                    let (s, d) = self.materialize(n)?;
                    if (alpha - &s).val() != Val::Finite(d) {
                        return Ok(Verdict::bounded(false, depth));
                    }
                }
                Ok(Verdict::bounded(true, depth))
            }
        }
    }

    /// `v(b) > δₙ` for all n, decided against the breadth.
    pub fn in_breadth_ideal(&self, b: &FieldElem) -> bool {
        b.val().cmp_breadth(&self.breadth()).is_ge()
    }

    /// Declared type plus the evidence for it.
    pub fn classify_type(&self) -> Result<Classification> {
        let certificate = if self.declared_type != self.generator_type() {
            TypeCertificate::Unverified(format!(
                "declared {} but the generator is {}",
                self.declared_type,
                self.generator_type()
            ))
        } else {
            match &self.limit {
                LimitData::InK(b) if self.is_cauchy() => TypeCertificate::Limit(b.clone()),
                LimitData::InK(b) => TypeCertificate::PseudoLimit(b.clone()),
                LimitData::Algebraic { minimal_polynomial } => self.check_minimal_polynomial(minimal_polynomial)?,
                LimitData::Transcendental => self.transcendence_evidence()?,
            }
        };
        Ok(Classification { declared: self.declared_type, certificate })
    }

    fn check_minimal_polynomial(&self, q: &Poly) -> Result<TypeCertificate> {
        let mut prev = Val::Finite(Rational::from_integer((-1_000_000).into()));
        for n in 0..=self.max_index.min(8) {
            let v = q.eval(&self.term(n)?).val();
            if v <= prev {
                return Ok(TypeCertificate::Unverified(format!("v(q(s_{n})) = {v} does not increase")));
            }
            prev = v;
        }
        Ok(TypeCertificate::MinimalPolynomial(q.clone()))
    }

    fn transcendence_evidence(&self) -> Result<TypeCertificate> {
        if self.backend != Backend::Rational {
            return Ok(TypeCertificate::Unverified(
                "the bounded-ramification argument needs characteristic 0".into(),
            ));
        }
        let SeqKind::PartialSum { exponents, .. } = &self.kind else {
            return Ok(TypeCertificate::Unverified("no transcendence argument for this kind".into()));
        };
        let denominators: Vec<BigInt> = (0..=8).map(|i| exponents.value(i).denom().clone()).collect();
        for f in ["X", "X - 1", "X^2 - t", "X^3 - t^2"] {
            let f = crate::field::parse_rational_function(f)?;
            let st = crate::newton::stabilized_distance_count(f.num(), self)?;
            if st.count != 0 || st.certified_at.is_none() {
                return Ok(TypeCertificate::Unverified(format!("battery polynomial {} did not settle at 0", f)));
            }
        }
        Ok(TypeCertificate::UnboundedDenominators { denominators })
    }

    /// Equivalence in the sense of sharing breadth and pseudo-limits.
    pub fn equivalent(&self, other: &PCSeq) -> Result<Equivalence> {
        let (d1, d2) = (self.breadth(), other.breadth());
        if d1 != d2 {
            return Ok(Equivalence::new(false, EquivCertificate::BreadthMismatch { left: d1, right: d2 }));
        }
        if self.generator_type() != other.generator_type() {
            return Ok(Equivalence::new(false, EquivCertificate::TypeMismatch));
        }
        let cert = match (&self.limit, &other.limit) {
            (LimitData::InK(a), LimitData::InK(b)) if d1.is_finite() => {
                let distance = (a - b).val();
                if distance.cmp_breadth(&d1).is_ge() {
                    EquivCertificate::SameBall { distance }
                } else {
                    EquivCertificate::DifferentBall { distance }
                }
            }
            (LimitData::InK(a), LimitData::InK(b)) => {
                if a == b {
                    EquivCertificate::SameLimit
                } else {
                    EquivCertificate::DifferentLimit
                }
            }
            (LimitData::InK(_), LimitData::Algebraic { .. }) | (LimitData::Algebraic { .. }, LimitData::InK(_)) => {
                EquivCertificate::DifferentLimit
            }
            (LimitData::Algebraic { minimal_polynomial: p }, LimitData::Algebraic { minimal_polynomial: q }) => {
                if self.kind == other.kind {
                    EquivCertificate::SameLimit
                } else if !same_up_to_unit(p, q) {
                    EquivCertificate::DifferentLimit
                } else {
                    self.definitional(other)?
                }
            }
            _ => self.definitional(other)?,
        };
        Ok(Equivalence::from_certificate(cert))
    }

    fn definitional(&self, other: &PCSeq) -> Result<EquivCertificate> {
        let depth = self.max_index.min(other.max_index).min(40);
        let k_max = 10.min(depth / 2);
        let r = crate::oracle::equivalent_definitional(self, other, k_max, depth)?;
        Ok(EquivCertificate::Definitional { equivalent: r.value, k_max, depth })
    }
}

fn same_up_to_unit(p: &Poly, q: &Poly) -> bool {
    match (p.leading(), q.leading()) {
        (Some(a), Some(b)) => {
            let pa = p.scale(&a.inv().expect("nonzero leading"));
            let qb = q.scale(&b.inv().expect("nonzero leading"));
            pa == qb
        }
        _ => false,
    }
}

impl fmt::Display for PCSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SeqKind::SingleTerm { center, gauge } => write!(f, "single_term(center {center}, {gauge})"),
            SeqKind::PartialSum { base, coefficient, exponents } => {
                write!(f, "partial_sum(base {base}, coefficient {coefficient}, exponents {exponents})")
            }
            SeqKind::CauchyToK { limit, gauge } => write!(f, "cauchy_to_k(limit {limit}, {gauge})"),
            SeqKind::CauchySeries { series } => write!(
                f,
                "cauchy_series((1 + {}*t^({}))^({}))",
                series.coefficient, series.exponent, series.power
            ),
        }
    }
}

/// A boolean answer that may only hold up to a finite depth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub value: bool,
    /// `Some(depth)` when the answer comes from a finite definitional check.
    pub checked_to: Option<usize>,
}

impl Verdict {
    pub fn exact(value: bool) -> Self {
        Verdict { value, checked_to: None }
    }

    pub fn bounded(value: bool, depth: usize) -> Self {
        Verdict { value, checked_to: Some(depth) }
    }

    pub fn is_exact(&self) -> bool {
        self.checked_to.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TypeCertificate {
    PseudoLimit(FieldElem),
    Limit(FieldElem),
    MinimalPolynomial(Poly),
    /// Exponent denominators of the first terms, growing without bound.
    UnboundedDenominators { denominators: Vec<BigInt> },
    Unverified(String),
}

impl fmt::Display for TypeCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeCertificate::PseudoLimit(b) => write!(f, "pseudo-limit {b}"),
            TypeCertificate::Limit(b) => write!(f, "limit {b}"),
            TypeCertificate::MinimalPolynomial(q) => write!(f, "minimal polynomial {q}"),
            TypeCertificate::UnboundedDenominators { denominators } => {
                let ds: Vec<String> = denominators.iter().map(|d| d.to_string()).collect();
                write!(f, "unbounded exponent denominators {}, ...", ds.join(", "))
            }
            TypeCertificate::Unverified(why) => write!(f, "unverified: {why}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub declared: SeqType,
    pub certificate: TypeCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquivCertificate {
    BreadthMismatch { left: Breadth, right: Breadth },
    TypeMismatch,
    SameBall { distance: Val },
    DifferentBall { distance: Val },
    SameLimit,
    DifferentLimit,
    Definitional { equivalent: bool, k_max: usize, depth: usize },
}

impl fmt::Display for EquivCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquivCertificate::BreadthMismatch { left, right } => write!(f, "breadths {left} vs {right}"),
            EquivCertificate::TypeMismatch => write!(f, "one algebraic, one transcendental"),
            EquivCertificate::SameBall { distance } => write!(f, "same pseudo-limit ball, v(beta_E - beta_F) = {distance}"),
            EquivCertificate::DifferentBall { distance } => {
                write!(f, "different pseudo-limit balls, v(beta_E - beta_F) = {distance}")
            }
            EquivCertificate::SameLimit => write!(f, "same limit"),
            EquivCertificate::DifferentLimit => write!(f, "different limits"),
            EquivCertificate::Definitional { k_max, depth, .. } => {
                write!(f, "definitional check, k <= {k_max}, depth {depth}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivalence {
    pub equivalent: bool,
    pub certificate: EquivCertificate,
}

impl Equivalence {
    fn new(equivalent: bool, certificate: EquivCertificate) -> Self {
        Equivalence { equivalent, certificate }
    }

    fn from_certificate(c: EquivCertificate) -> Self {
        let eq = match &c {
            EquivCertificate::SameBall { .. } | EquivCertificate::SameLimit => true,
            EquivCertificate::Definitional { equivalent, .. } => *equivalent,
            _ => false,
        };
        Equivalence::new(eq, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{int, rat};

    #[test]
    fn materialize_examples() {
        let e1 = fixture("E1").unwrap();
        assert_eq!(e1.materialize(3).unwrap(), (FieldElem::t_pow(rat(7, 8)), rat(7, 8)));
        let e3 = fixture("E3").unwrap();
        let (s, d) = e3.materialize(2).unwrap();
        assert_eq!(s, "t + t^2".parse().unwrap());
        assert_eq!(d, int(3));
        assert_eq!((e3.pseudo_limit().unwrap() - &s).val(), Val::Finite(int(3)));
        let e2 = fixture("E2").unwrap();
        assert_eq!(e2.materialize(1).unwrap(), (FieldElem::one() * FieldElem::t_pow(int(1)), int(1)));
        assert!(matches!(e1.materialize(65), Err(Error::IndexOverflow { .. })));
    }

    #[test]
    fn pseudo_limits_and_breadth_ideal() {
        let e1 = fixture("E1").unwrap();
        assert!(e1.is_pseudo_limit(&FieldElem::t_pow(int(1))).unwrap().value);
        assert!(!e1.is_pseudo_limit(&FieldElem::t_pow(rat(1, 2))).unwrap().value);
        assert!(e1.is_pseudo_limit(&FieldElem::zero()).unwrap().value);
        assert!(e1.in_breadth_ideal(&FieldElem::t_pow(int(1))));
        assert!(!e1.in_breadth_ideal(&FieldElem::t_pow(rat(1, 2))));
        let e3 = fixture("E3").unwrap();
        assert!(!e3.in_breadth_ideal(&FieldElem::t_pow(int(100))));
        assert!(e3.in_breadth_ideal(&FieldElem::zero()));
    }

    #[test]
    fn classification_examples() {
        let c = fixture("E1").unwrap().classify_type().unwrap();
        assert_eq!(c.certificate, TypeCertificate::PseudoLimit(FieldElem::zero()));
        let c = fixture("E4").unwrap().classify_type().unwrap();
        assert_eq!(c.certificate, TypeCertificate::MinimalPolynomial("X^2 - (1 + t)".parse::<crate::field::RationalFunction>().unwrap().num().clone()));
        let c = fixture("E5").unwrap().classify_type().unwrap();
        assert_eq!(c.declared, SeqType::Transcendental);
        assert!(matches!(c.certificate, TypeCertificate::UnboundedDenominators { .. }), "{}", c.certificate);
    }

    #[test]
    fn equivalence_examples() {
        let e1 = fixture("E1").unwrap();
        let f = PCSeq::single_term(FieldElem::t_pow(int(1)), GaugeSpec::dyadic(int(1), int(1)).unwrap()).unwrap();
        assert!(e1.equivalent(&f).unwrap().equivalent);
        assert!(e1.equivalent(&e1).unwrap().equivalent);
        let sq = squared_e1();
        let r = e1.equivalent(&sq).unwrap();
        assert!(!r.equivalent);
        assert_eq!(r.certificate.to_string(), "breadths 1 vs 2");
    }
}
