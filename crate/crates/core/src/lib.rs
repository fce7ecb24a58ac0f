//! Exact computation of the moment generating polynomials of q-Hermite,
//! q-Charlier and q-Laguerre orthogonal polynomials, by three independent
//! routes:
//!
//! 1. brute-force enumeration of matchings, set partitions and
//!    permutations with their crossing statistics;
//! 2. weighted Motzkin-path models (histoires) with bijective
//!    decompositions of the paths into prefixes and reduced cores;
//! 3. closed formulas and continued-fraction / hypergeometric series.
//!
//! All arithmetic is exact over `Z[q, y, t, a, b, c, d]`; the three routes
//! are checked against each other by the `verify` suites.

pub mod algebra;
pub mod decomp;
pub mod error;
pub mod family;
pub mod formulas;
pub mod inverse;
pub mod kseries;
pub mod objects;
pub mod ortho;
pub mod paths;
pub mod verify;

pub use algebra::{poly, MPoly, Monomial, TruncSeries, Var};
pub use error::{Error, Result};
pub use family::Family;
pub use objects::{brute_gf, CombObject, Matching, Permutation, SetPartition};
pub use paths::{
    check_specialization, enumerate_paths, gf_paths, histoire_of, object_of, EndHeight, MParams,
    Step, StepDir, WeightSystem, WeightedPath,
};
