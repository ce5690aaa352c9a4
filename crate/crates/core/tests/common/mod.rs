//! Shared test pool: rational functions of degree at most 3 whose critical
//! points sit at the centers, limits and distances the fixtures care about.

#![allow(dead_code)]

use pcval::field::{FieldElem, RationalFunction};
use pcval::pcv::{GaugeSpec, PCSeq};
use pcval::Rational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const FACTORS: [&str; 14] = [
    "X",
    "X - 1",
    "X - t",
    "X - t^(1/2)",
    "X - t^(1/3)",
    "X + t^(2/3)",
    "X - 1 - t",
    "X^2 - t",
    "X^2 - (1 + t)",
    "X - t^(3/4)",
    "X - t/(1 - t)",
    "X - t^2",
    "X + 2*t^(1/2)",
    "X - 1 - t^(1/2)",
];

const EXTRA: [&str; 21] = [
    "1",
    "t",
    "t^(-1)",
    "t^(1/2)",
    "2*t^3",
    "X/t",
    "t/X",
    "X^2/t^2",
    "X^2/t^3",
    "X*(X - 1)",
    "(X - t)*(X - t^(1/2))/t",
    "(X - t)/(X - t^2)",
    "(X^2 - (1 + t))/(X - 1)",
    "(X - t/(1 - t))/t^2",
    "1/(X - t/(1 - t))",
    "(X^3 - t^2)/(t*X)",
    "X^2/t^(3/2)",
    "(X - 1)/t",
    "t^2/(X*(X - t))",
    "(X - t^(1/2))/t^(1/2)",
    "(X^2 - (1 + t))/t^3",
];

pub fn rf(s: &str) -> RationalFunction {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

/// 63 functions: the extras, every factor, every factor over t, and t over every factor.
pub fn pool() -> Vec<RationalFunction> {
    let mut out: Vec<RationalFunction> = EXTRA.iter().map(|s| rf(s)).collect();
    for f in FACTORS {
        out.push(rf(f));
        out.push(rf(&format!("({f})/t")));
        out.push(rf(&format!("t/({f})")));
    }
    out
}

/// The first `n` pool functions after a fixed shuffle.
pub fn small_pool(n: usize) -> Vec<RationalFunction> {
    let mut p = pool();
    let mut rng = ChaCha8Rng::seed_from_u64(30);
    for i in (1..p.len()).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p.truncate(n);
    p
}

pub fn single_term(center: &str, limit: Rational, scale: Rational) -> PCSeq {
    let c: FieldElem = center.parse().unwrap();
    PCSeq::single_term(c, GaugeSpec::dyadic(limit, scale).unwrap()).unwrap()
}
