//! Exact arbitrary-precision polynomial and truncated-series arithmetic.

pub mod mpoly;
pub mod qfun;
pub mod series;
pub mod var;

pub use mpoly::{poly, MPoly, Monomial};
pub use qfun::{binom, q_binomial, q_int, q_pochhammer};
pub use series::TruncSeries;
pub use var::Var;
