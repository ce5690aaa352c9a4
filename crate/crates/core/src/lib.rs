//! Valuations on K(X) induced by pseudo-convergent sequences over K = Q(t^Q).
//!
//! Everything is exact: elements of K are fractions of finite sums of rational
//! powers of `t`, root data comes from Newton polygons, and quadratic-irrational
//! breadths are compared by sign analysis. Every symbolic answer has a
//! brute-force counterpart in [`oracle`].

pub mod error;
pub mod field;
pub mod newton;
pub mod num;
pub mod oracle;
pub mod pcv;
pub mod topology;
pub mod valuations;

pub use error::{Error, ErrorKind, Result};
pub use field::{Backend, Coeff, FieldElem, Poly, RationalFunction, SparseSum};
pub use num::{Breadth, QuadIrrational, Rational, Val};
