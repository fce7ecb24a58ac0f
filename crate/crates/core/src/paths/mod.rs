//! Weighted Motzkin paths: step types, admissibility, weight systems,
//! generating functions and the histoire bijections.

pub mod gf;
pub mod histoire;
pub mod systems;

pub use gf::{enumerate_paths, gf_paths, EndHeight};
pub use histoire::{check_specialization, histoire_of, object_of};
pub use systems::{MParams, MenuEntry, WeightSystem};

use crate::algebra::mpoly::MPoly;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Step direction.  `DLevel` is a level step spanning two length units; it
/// only occurs in the four-step path model behind the continued fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepDir {
    Up,
    Down,
    Level,
    DLevel,
}

impl StepDir {
    pub fn rise(self) -> i64 {
        match self {
            StepDir::Up => 1,
            StepDir::Down => -1,
            StepDir::Level | StepDir::DLevel => 0,
        }
    }

    pub fn length(self) -> usize {
        match self {
            StepDir::DLevel => 2,
            _ => 1,
        }
    }
}

/// A single weighted step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub dir: StepDir,
    pub weight: MPoly,
}

impl Step {
    pub fn new(dir: StepDir, weight: MPoly) -> Step {
        Step { dir, weight }
    }

    pub fn up(weight: MPoly) -> Step {
        Step::new(StepDir::Up, weight)
    }

    pub fn down(weight: MPoly) -> Step {
        Step::new(StepDir::Down, weight)
    }

    pub fn level(weight: MPoly) -> Step {
        Step::new(StepDir::Level, weight)
    }

    pub fn dlevel(weight: MPoly) -> Step {
        Step::new(StepDir::DLevel, weight)
    }
}

/// A sequence of weighted steps whose running height never goes negative.
///
/// A Motzkin path additionally ends at height 0; a Motzkin prefix may end
/// at any height.  Length counts a `DLevel` step as two units.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightedPath {
    steps: Vec<Step>,
}

impl<'de> Deserialize<'de> for WeightedPath {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            steps: Vec<Step>,
        }
        let repr = Repr::deserialize(de)?;
        WeightedPath::new(repr.steps).map_err(serde::de::Error::custom)
    }
}

impl WeightedPath {
    pub fn new(steps: Vec<Step>) -> Result<WeightedPath> {
        let mut h: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            h += s.dir.rise();
            if h < 0 {
                return Err(Error::InvalidPath(format!("height drops below 0 after step {}", i + 1)));
            }
        }
        Ok(WeightedPath { steps })
    }

    pub fn empty() -> WeightedPath {
        WeightedPath { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn num_steps(&self) -> usize {
        self.steps.len()
    }

    /// Length in units (a `DLevel` counts twice).
    pub fn len_units(&self) -> usize {
        self.steps.iter().map(|s| s.dir.length()).sum()
    }

    pub fn final_height(&self) -> usize {
        let h: i64 = self.steps.iter().map(|s| s.dir.rise()).sum();
        h as usize
    }

    /// Starting heights of each step.
    pub fn start_heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.steps.len());
        let mut h: i64 = 0;
        for s in &self.steps {
            out.push(h as usize);
            h += s.dir.rise();
        }
        out
    }

    /// Product of the step weights; the empty product is 1.
    pub fn weight(&self) -> MPoly {
        let mut w = MPoly::one();
        for s in &self.steps {
            w = w.mul(&s.weight);
        }
        w
    }

    /// Render in the compact form `U(y) L(q^2) D(1) LL(-c)`.
    pub fn to_compact(&self) -> String {
        let parts: Vec<String> = self
            .steps
            .iter()
            .map(|s| {
                let tag = match s.dir {
                    StepDir::Up => "U",
                    StepDir::Down => "D",
                    StepDir::Level => "L",
                    StepDir::DLevel => "LL",
                };
                format!("{tag}({})", compact_poly(&s.weight))
            })
            .collect();
        parts.join(" ")
    }
}

fn compact_poly(p: &MPoly) -> String {
    p.to_string().replace(' ', "")
}

impl fmt::Display for WeightedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact())
    }
}

impl FromStr for WeightedPath {
    type Err = Error;

    /// Parse the compact form, e.g. `"U(y) U(yq) L(yq^2) D(q)"`.
    fn from_str(s: &str) -> Result<WeightedPath> {
        let mut steps = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {rest:?}")))?;
            let tag = rest[..open].trim();
            let dir = match tag {
                "U" => StepDir::Up,
                "D" => StepDir::Down,
                "L" => StepDir::Level,
                "LL" => StepDir::DLevel,
                _ => return Err(Error::Parse(format!("unknown step tag {tag:?}"))),
            };
            let close = rest[open..]
                .find(')')
                .map(|i| open + i)
                .ok_or_else(|| Error::Parse("unbalanced parentheses".into()))?;
            let weight: MPoly = rest[open + 1..close].parse()?;
            steps.push(Step::new(dir, weight));
            rest = rest[close + 1..].trim_start();
        }
        WeightedPath::new(steps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::poly;

    #[test]
    fn weight_is_product_of_steps() {
        let p: WeightedPath = "U(y) U(y) U(y) D(1) L(q) D(q) L(y) D(1)".parse().unwrap();
        assert_eq!(p.weight(), poly("y^4 q^2"));
        assert_eq!(p.final_height(), 0);
        assert_eq!(WeightedPath::empty().weight(), MPoly::one());
    }

    #[test]
    fn heights_must_stay_nonnegative() {
        assert!("D(1)".parse::<WeightedPath>().is_err());
        assert!("U(1) D(1) D(1)".parse::<WeightedPath>().is_err());
    }

    #[test]
    fn dlevel_counts_two_units() {
        let p: WeightedPath = "LL(-c) U(1) D(c)".parse().unwrap();
        assert_eq!(p.num_steps(), 3);
        assert_eq!(p.len_units(), 4);
    }

    #[test]
    fn compact_roundtrip() {
        let s = "U(y) U(yq) L(yq^2) D(q) L(y) L(1) L(yq) D(1)";
        let p: WeightedPath = s.parse().unwrap();
        let back: WeightedPath = p.to_compact().parse().unwrap();
        assert_eq!(p, back);
    }

    #[test]
    fn json_roundtrip() {
        let p: WeightedPath = "U(1) D(q)".parse().unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.contains("\"dir\":\"up\""));
        let back: WeightedPath = serde_json::from_str(&json).unwrap();
        assert_eq!(p, back);
    }
}
