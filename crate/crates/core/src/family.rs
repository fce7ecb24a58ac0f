use crate::error::{Error, Result};
use std::fmt;

/// The four orthogonal-polynomial families whose moments this crate models.
///
/// Each family pairs a class of combinatorial objects with a statistic
/// monomial: matchings weighted `q^cro`, set partitions weighted
/// `y^blocks q^cro` (plain or starred crossings), and permutations weighted
/// `y^wex q^cro`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Hermite,
    Charlier,
    CharlierStar,
    Laguerre,
}

impl Family {
    pub const ALL: [Family; 4] =
        [Family::Hermite, Family::Charlier, Family::CharlierStar, Family::Laguerre];

    pub fn name(self) -> &'static str {
        match self {
            Family::Hermite => "hermite",
            Family::Charlier => "charlier",
            Family::CharlierStar => "charlier-star",
            Family::Laguerre => "laguerre",
        }
    }

    pub fn from_name(s: &str) -> Result<Family> {
        match s {
            "hermite" => Ok(Family::Hermite),
            "charlier" => Ok(Family::Charlier),
            "charlier-star" | "charlier*" => Ok(Family::CharlierStar),
            "laguerre" => Ok(Family::Laguerre),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
