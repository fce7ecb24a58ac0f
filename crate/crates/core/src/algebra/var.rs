use crate::error::{Error, Result};
use std::fmt;

/// A variable of the fixed, closed universe `{q, y, t, a, b, c, d}`.
///
/// All polynomials in this crate live in `Z[q, y, t, a, b, c, d]`:
/// `q` marks crossings, `y` marks blocks or weak exceedances, `t` is the
/// formal series variable, and `a`, `b`, `c`, `d` parametrise the path
/// weight systems.  Fixing the universe keeps exponent vectors compact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q,
    Y,
    T,
    A,
    B,
    C,
    D,
}

impl Var {
    /// Number of variables in the universe.
    pub const COUNT: usize = 7;

    /// All variables, in canonical order.
    pub const ALL: [Var; Var::COUNT] = [Var::Q, Var::Y, Var::T, Var::A, Var::B, Var::C, Var::D];

    /// Index of this variable into an exponent vector.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::Y => "y",
            Var::T => "t",
            Var::A => "a",
            Var::B => "b",
            Var::C => "c",
            Var::D => "d",
        }
    }

    pub fn from_name(s: &str) -> Result<Var> {
        match s {
            "q" => Ok(Var::Q),
            "y" => Ok(Var::Y),
            "t" => Ok(Var::T),
            "a" => Ok(Var::A),
            "b" => Ok(Var::B),
            "c" => Ok(Var::C),
            "d" => Ok(Var::D),
            _ => Err(Error::Parse(format!("unknown variable {s:?}"))),
        }
    }

    pub fn from_char(ch: char) -> Option<Var> {
        match ch {
            'q' => Some(Var::Q),
            'y' => Some(Var::Y),
            't' => Some(Var::T),
            'a' => Some(Var::A),
            'b' => Some(Var::B),
            'c' => Some(Var::C),
            'd' => Some(Var::D),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
