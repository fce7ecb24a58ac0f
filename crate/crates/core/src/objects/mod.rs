//! Matchings, set partitions and permutations with their crossing
//! statistics, plus the brute-force generating polynomials that serve as
//! the ground truth for every other route in the crate.

pub mod gf;
pub mod matching;
pub mod partition;
pub mod permutation;

pub use gf::brute_gf;
pub use matching::{for_each_matching, matchings, Matching};
pub use partition::{for_each_set_partition, set_partitions, SetPartition};
pub use permutation::{for_each_permutation, permutations, Permutation};

use crate::error::Result;

/// One of the three object kinds, for APIs that are generic over them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CombObject {
    Matching(Matching),
    SetPartition(SetPartition),
    Permutation(Permutation),
}

impl CombObject {
    pub fn parse_matching(s: &str) -> Result<CombObject> {
        Ok(CombObject::Matching(Matching::parse(s)?))
    }

    pub fn parse_set_partition(s: &str) -> Result<CombObject> {
        Ok(CombObject::SetPartition(SetPartition::parse(s)?))
    }

    pub fn parse_permutation(s: &str) -> Result<CombObject> {
        Ok(CombObject::Permutation(Permutation::parse(s)?))
    }
}

impl std::fmt::Display for CombObject {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CombObject::Matching(m) => m.fmt(f),
            CombObject::SetPartition(p) => p.fmt(f),
            CombObject::Permutation(p) => p.fmt(f),
        }
    }
}
