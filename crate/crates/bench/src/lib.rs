//! Inputs shared by the benchmarks under `benches/`.

use pcval::field::RationalFunction;

const FUNCTIONS: [&str; 12] = [
    "X/t",
    "t/X",
    "X - t",
    "(X - t)/(X - t^2)",
    "X^2 - t",
    "X^2 - (1 + t)",
    "(X^3 - t^2)/(t*X)",
    "1/(X - t/(1 - t))",
    "X^2/t^(3/2)",
    "(X - 1 - t^(1/2))/t",
    "t^2/(X*(X - t))",
    "(X + t^(2/3))*(X - t^(1/3))",
];

/// A small fixed pool of rational functions of degree at most 3.
pub fn pool() -> Vec<RationalFunction> {
    FUNCTIONS.iter().map(|s| s.parse().expect("pool function parses")).collect()
}
