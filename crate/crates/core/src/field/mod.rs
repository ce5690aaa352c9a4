//! Exact arithmetic in K = Q(t^Q) (or F_p(t^Q)) and in K(X).

mod coeff;
mod display;
mod elem;
mod parse;
mod poly;
mod ratfun;
mod sparse;

pub use coeff::{Backend, Coeff};
pub use elem::FieldElem;
pub use parse::{parse_field_elem, parse_rational_function};
pub use poly::Poly;
pub use ratfun::RationalFunction;
pub use sparse::SparseSum;
