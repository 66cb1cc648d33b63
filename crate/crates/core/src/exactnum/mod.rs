//! Exact integers, rationals, sparse exponent polynomials and surd sums.

mod poly;
mod rat;
mod surd;

pub use num_bigint::BigInt;
pub use poly::ExpPoly;
pub use rat::{format_significant, rat_arith, rat_pow, ArithOp, Rat};
pub use surd::SurdSum;
