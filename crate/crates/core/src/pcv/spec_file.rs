//! JSON-compatible description of a sequence, read by `--seq @file`.
//!
//! ```json
//! {"kind": "single_term", "beta": "0",
//!  "gauge": {"kind": "dyadic", "params": {"limit": "1", "scale": "1"}}}
//! ```

use serde::{Deserialize, Serialize};

use super::{BinomialSeries, GaugeSpec, LimitData, PCSeq, SeqKind};
use crate::error::{Error, Result};
use crate::field::{parse_field_elem, parse_rational_function};
use crate::num::{serde_rational, QuadIrrational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "snake_case")]
pub enum GaugeFile {
    Dyadic {
        #[serde(with = "serde_rational")]
        limit: Rational,
        #[serde(with = "serde_rational")]
        scale: Rational,
    },
    QuadIrr {
        #[serde(with = "serde_rational")]
        a: Rational,
        #[serde(with = "serde_rational")]
        b: Rational,
        d: i64,
    },
    Linear {
        #[serde(with = "serde_rational")]
        slope: Rational,
        #[serde(with = "serde_rational", default = "zero")]
        offset: Rational,
    },
}

fn zero() -> Rational {
    Rational::from_integer(0.into())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesFile {
    #[serde(with = "serde_rational")]
    pub power: Rational,
    #[serde(with = "serde_rational")]
    pub coefficient: Rational,
    #[serde(with = "serde_rational")]
    pub exponent: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqSpecFile {
    /// `single_term`, `partial_sum`, `cauchy_to_k` or `cauchy_series`.
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Center, base or limit, depending on the kind.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gauge: Option<GaugeFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficient: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series: Option<SeriesFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub declared_type: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minimal_polynomial: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_index: Option<usize>,
}

fn missing(field: &str, kind: &str) -> Error {
    Error::Parse { pos: 0, msg: format!("field {field:?} is required for kind {kind:?}") }
}

impl GaugeFile {
    pub fn to_gauge(&self) -> Result<GaugeSpec> {
        match self {
            GaugeFile::Dyadic { limit, scale } => GaugeSpec::dyadic(limit.clone(), scale.clone()),
            GaugeFile::QuadIrr { a, b, d } => {
                Ok(GaugeSpec::QuadIrr { target: QuadIrrational::new(a.clone(), b.clone(), (*d).into())? })
            }
            GaugeFile::Linear { slope, offset } => GaugeSpec::linear(slope.clone(), offset.clone()),
        }
    }

    pub fn from_gauge(g: &GaugeSpec) -> Self {
        match g {
            GaugeSpec::Dyadic { limit, scale } => GaugeFile::Dyadic { limit: limit.clone(), scale: scale.clone() },
            GaugeSpec::QuadIrr { target } => GaugeFile::QuadIrr {
                a: target.a().clone(),
                b: target.b().clone(),
                d: target.d().try_into().expect("small radicand"),
            },
            GaugeSpec::Linear { slope, offset } => GaugeFile::Linear { slope: slope.clone(), offset: offset.clone() },
        }
    }
}

impl SeqSpecFile {
    pub fn to_seq(&self) -> Result<PCSeq> {
        let k = self.kind.as_str();
        let beta = || -> Result<_> {
            match &self.beta {
                Some(b) => parse_field_elem(b),
                None if k == "cauchy_to_k" => Err(missing("beta", k)),
                None => Ok(crate::field::FieldElem::zero()),
            }
        };
        let gauge = || self.gauge.as_ref().ok_or_else(|| missing("gauge", k))?.to_gauge();
        let kind = match k {
            "single_term" => SeqKind::SingleTerm { center: beta()?, gauge: gauge()? },
            "partial_sum" => SeqKind::PartialSum {
                base: beta()?,
                coefficient: match &self.coefficient {
                    Some(c) => crate::num::parse_rational(c)?,
                    None => Rational::from_integer(1.into()),
                },
                exponents: gauge()?,
            },
            "cauchy_to_k" => SeqKind::CauchyToK { limit: beta()?, gauge: gauge()? },
            "cauchy_series" => {
                let s = self.series.as_ref().ok_or_else(|| missing("series", k))?;
                SeqKind::CauchySeries {
                    series: BinomialSeries::new(s.power.clone(), s.coefficient.clone(), s.exponent.clone())?,
                }
            }
            other => return Err(Error::Parse { pos: 0, msg: format!("unknown sequence kind {other:?}") }),
        };
        let mut seq = PCSeq::new(kind)?;
        if let Some(n) = &self.name {
            seq = seq.with_name(n.clone());
        }
        if let Some(t) = &self.declared_type {
            seq = seq.with_declared_type(t.parse()?);
        }
        if let Some(q) = &self.minimal_polynomial {
            let q = parse_rational_function(q)?;
            if !q.den().is_constant() {
                return Err(Error::Parse { pos: 0, msg: "minimal polynomial must be a polynomial".into() });
            }
            seq = seq.with_minimal_polynomial(q.num().clone())?;
        }
        if let Some(n) = self.max_index {
            seq = seq.with_max_index(n);
        }
        Ok(seq)
    }

    pub fn from_seq(seq: &PCSeq) -> Self {
        let mut out = SeqSpecFile {
            kind: String::new(),
            name: seq.name().map(str::to_string),
            beta: None,
            gauge: None,
            coefficient: None,
            series: None,
            declared_type: Some(seq.declared_type().to_string()),
            minimal_polynomial: None,
            max_index: Some(seq.max_index()),
        };
        match seq.kind() {
            SeqKind::SingleTerm { center, gauge } => {
                out.kind = "single_term".into();
                out.beta = Some(center.to_string());
                out.gauge = Some(GaugeFile::from_gauge(gauge));
            }
            SeqKind::PartialSum { base, coefficient, exponents } => {
                out.kind = "partial_sum".into();
                out.beta = Some(base.to_string());
                out.coefficient = Some(coefficient.to_string());
                out.gauge = Some(GaugeFile::from_gauge(exponents));
            }
            SeqKind::CauchyToK { limit, gauge } => {
                out.kind = "cauchy_to_k".into();
                out.beta = Some(limit.to_string());
                out.gauge = Some(GaugeFile::from_gauge(gauge));
            }
            SeqKind::CauchySeries { series } => {
                out.kind = "cauchy_series".into();
                out.series = Some(SeriesFile {
                    power: series.power.clone(),
                    coefficient: series.coefficient.clone(),
                    exponent: series.exponent.clone(),
                });
            }
        }
        if let LimitData::Algebraic { minimal_polynomial } = seq.limit() {
            out.minimal_polynomial = Some(minimal_polynomial.to_string());
        }
        out
    }
}
