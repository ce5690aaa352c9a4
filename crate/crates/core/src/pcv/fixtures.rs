//! The named example sequences E1 through E5.

use super::{BinomialSeries, GaugeSpec, PCSeq, SeqKind};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::num::{int, rat, QuadIrrational};

const NAMES: [&str; 5] = ["E1", "E2", "E3", "E4", "E5"];

pub fn fixture_names() -> &'static [&'static str] {
    &NAMES
}

/// Looks up a fixture by name (case-insensitive).
pub fn fixture(name: &str) -> Result<PCSeq> {
    let seq = match name.to_ascii_uppercase().as_str() {
        // sₙ = t^{1 − 1/2ⁿ}, breadth 1, pseudo-limit 0.
        "E1" => PCSeq::single_term(FieldElem::zero(), GaugeSpec::dyadic(int(1), int(1))?)?,
        // Gauge climbs to √2 along continued-fraction approximants.
        "E2" => PCSeq::single_term(FieldElem::zero(), GaugeSpec::QuadIrr { target: QuadIrrational::sqrt(2)? })?,
        // Cauchy with limit t/(1 − t), δₙ = n + 1.
        "E3" => PCSeq::new(SeqKind::CauchyToK {
            limit: "t/(1 - t)".parse()?,
            gauge: GaugeSpec::linear(int(1), int(1))?,
        })?,
        // Partial sums of √(1 + t).
        "E4" => PCSeq::new(SeqKind::CauchySeries { series: BinomialSeries::new(rat(1, 2), int(1), int(1))? })?,
        // Σ_{i≤n} t^{1 − 1/2ⁱ}, breadth 1, transcendental.
        "E5" => PCSeq::new(SeqKind::PartialSum {
            base: FieldElem::zero(),
            coefficient: int(1),
            exponents: GaugeSpec::dyadic(int(1), int(1))?,
        })?,
        "E1SQ" | "E1^2" => return Ok(squared_e1()),
        _ => return Err(Error::precondition("fixture", format!("unknown fixture {name:?}"))),
    };
    Ok(seq.with_name(name.to_ascii_uppercase()))
}

/// `sₙ = t^{2 − 2/2ⁿ}`, the termwise square of E1.
pub fn squared_e1() -> PCSeq {
    PCSeq::single_term(FieldElem::zero(), GaugeSpec::dyadic(int(2), int(2)).expect("positive scale"))
        .expect("valid generator")
        .with_name("E1^2")
}

pub fn fixtures() -> Vec<PCSeq> {
    NAMES.iter().map(|n| fixture(n).expect("fixture")).collect()
}
