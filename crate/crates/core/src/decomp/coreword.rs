//! Core words and the weight-sign-reversing involution on them.
//!
//! A core word is a Motzkin path written over the alphabet `x` (up, weight
//! 1), `z` (level at height `h`, weight `-q^h`), `y` (down, weight 1) and
//! `Y` = `ybar` (down from height `h`, weight `-q^h`), with no `x`
//! immediately followed by `y`.  The set `C_{j,k}` collects the words with
//! `j` ups (hence `j` downs) and `k-j` levels, i.e. length `j+k`.
//!
//! The involution `theta` pairs words of opposite weight; its fixed points
//! are the words that start with all `j` ups and contain no down of weight
//! 1, and their weights sum to `(-1)^k q^(j+1 choose 2) [k choose j]_q`.

use crate::algebra::mpoly::MPoly;
use crate::algebra::qfun::q_binomial;
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Letters of the word alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    X,
    Z,
    Y,
    Ybar,
}

impl Letter {
    fn rise(self) -> i64 {
        match self {
            Letter::X => 1,
            Letter::Z => 0,
            Letter::Y | Letter::Ybar => -1,
        }
    }

    fn symbol(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Z => 'z',
            Letter::Y => 'y',
            Letter::Ybar => 'Y',
        }
    }
}

/// A word over `{x, z, y, Y}`; heights are implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreWord {
    letters: Vec<Letter>,
}

impl CoreWord {
    pub fn new(letters: Vec<Letter>) -> CoreWord {
        CoreWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of ups; the `j` of `C_{j,k}`.
    pub fn j(&self) -> usize {
        self.letters.iter().filter(|&&l| l == Letter::X).count()
    }

    /// The `k` of `C_{j,k}`: levels plus ups.
    pub fn k(&self) -> usize {
        self.letters.iter().filter(|&&l| matches!(l, Letter::Z | Letter::X)).count()
    }

    /// Starting height of each letter, or an error if some prefix dips
    /// below zero.
    pub fn start_heights(&self) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(self.letters.len());
        let mut h: i64 = 0;
        for (i, l) in self.letters.iter().enumerate() {
            out.push(h as usize);
            h += l.rise();
            if h < 0 {
                return Err(Error::NotInC(format!("height drops below 0 at letter {}", i + 1)));
            }
        }
        Ok(out)
    }

    /// Membership check for `C_{j,k}`: heights stay nonnegative, the word
    /// ends at height 0, and no `x` is immediately followed by a `y`.
    pub fn check_membership(&self) -> Result<()> {
        let heights = self.start_heights()?;
        let end: i64 = self.letters.iter().map(|l| l.rise()).sum();
        if end != 0 {
            return Err(Error::NotInC("word does not end at height 0".into()));
        }
        for w in self.letters.windows(2) {
            if w[0] == Letter::X && w[1] == Letter::Y {
                return Err(Error::NotInC("peak with both weights 1".into()));
            }
        }
        let _ = heights;
        Ok(())
    }

    /// Weight: `x` and `y` contribute 1, `z` and `Y` at starting height `h`
    /// contribute `-q^h`.
    pub fn weight(&self) -> MPoly {
        let heights = self.start_heights().expect("weight of a height-valid word");
        let mut w = MPoly::one();
        for (l, &h) in self.letters.iter().zip(&heights) {
            match l {
                Letter::X | Letter::Y => {}
                Letter::Z | Letter::Ybar => w = w.mul(&MPoly::q_pow(h as u16).neg()),
            }
        }
        w
    }

    /// `u`: length of the last maximal run of `x` letters (0 if none).
    /// `v`: starting height of the last `y` when the word has a `y` with no
    /// `x` after it, and `j` otherwise.
    pub fn uv_stats(&self) -> (usize, usize) {
        let u = self.last_x_run().map_or(0, |r| r.len());
        let v = match self.last_y_without_x_after() {
            Some(pos) => self.start_heights().expect("height-valid word")[pos],
            None => self.j(),
        };
        (u, v)
    }

    fn last_x_run(&self) -> Option<std::ops::Range<usize>> {
        let end = self.letters.iter().rposition(|&l| l == Letter::X)? + 1;
        let mut start = end - 1;
        while start > 0 && self.letters[start - 1] == Letter::X {
            start -= 1;
        }
        Some(start..end)
    }

    /// Position of the last `y`, provided no `x` follows it.
    fn last_y_without_x_after(&self) -> Option<usize> {
        let pos = self.letters.iter().rposition(|&l| l == Letter::Y)?;
        if self.letters[pos + 1..].contains(&Letter::X) {
            None
        } else {
            Some(pos)
        }
    }

    /// Is this a fixed point of `theta`: all ups at the front and no `y`?
    pub fn is_theta_fixed(&self) -> bool {
        let j = self.j();
        self.letters[..j].iter().all(|&l| l == Letter::X)
            && !self.letters.contains(&Letter::Y)
    }

    /// The sign-reversing involution.
    ///
    /// Forward branch (the last `y` has no `x` after it and `v <= u`):
    /// turn that `y` into a `Y`, then move `v` of the `u` trailing ups past
    /// the following `a y^l` block, where `a` is the level or weighted down
    /// right after the run.  Inverse branch: locate the last `Y` starting
    /// at height `u` after the run, turn it back into a `y`, and move the
    /// run back over the `a y^l` block to its left.
    pub fn theta(&self) -> Result<CoreWord> {
        self.check_membership()?;
        if self.is_theta_fixed() {
            return Ok(self.clone());
        }
        let (u, v) = self.uv_stats();
        let forward = self.last_y_without_x_after().is_some() && v <= u;
        if forward {
            self.theta_forward(u, v)
        } else {
            self.theta_inverse(u)
        }
    }

    fn theta_forward(&self, u: usize, v: usize) -> Result<CoreWord> {
        let mut letters = self.letters.clone();
        let pos_y = self.last_y_without_x_after().expect("forward branch has a free y");
        letters[pos_y] = Letter::Ybar;
        let run = self.last_x_run().expect("v < j forces at least one x");
        debug_assert_eq!(run.len(), u);
        // run, then a single z/Y, then a maximal block of y's, then the rest
        let a_pos = run.end;
        if a_pos >= letters.len() || matches!(letters[a_pos], Letter::X | Letter::Y) {
            return Err(Error::InvolutionDefect(format!("no separator letter after the x-run in {self}")));
        }
        let mut ell_end = a_pos + 1;
        while ell_end < letters.len() && letters[ell_end] == Letter::Y {
            ell_end += 1;
        }
        // f1 x^(u-v) a y^l x^v f2
        let mut out = Vec::with_capacity(letters.len());
        out.extend_from_slice(&letters[..run.start]);
        out.extend(std::iter::repeat(Letter::X).take(u - v));
        out.extend_from_slice(&letters[a_pos..ell_end]);
        out.extend(std::iter::repeat(Letter::X).take(v));
        out.extend_from_slice(&letters[ell_end..]);
        let word = CoreWord::new(out);
        word.check_membership().map_err(|e| {
            Error::InvolutionDefect(format!("forward image of {self} is invalid: {e}"))
        })?;
        Ok(word)
    }

    fn theta_inverse(&self, u: usize) -> Result<CoreWord> {
        let run = self
            .last_x_run()
            .ok_or_else(|| Error::InvolutionDefect(format!("no x-run in non-fixed word {self}")))?;
        debug_assert_eq!(run.len(), u);
        let heights = self.start_heights()?;
        // last Y after the run starting exactly at height u
        let target = (run.end..self.letters.len())
            .rev()
            .find(|&i| self.letters[i] == Letter::Ybar && heights[i] == u)
            .ok_or_else(|| {
                Error::InvolutionDefect(format!("no Y at height {u} after the x-run in {self}"))
            })?;
        let mut letters = self.letters.clone();
        letters[target] = Letter::Y;
        // before the run: a maximal block of y's, preceded by a single z/Y
        let mut ell_start = run.start;
        while ell_start > 0 && letters[ell_start - 1] == Letter::Y {
            ell_start -= 1;
        }
        if ell_start == 0 || matches!(letters[ell_start - 1], Letter::X | Letter::Y) {
            return Err(Error::InvolutionDefect(format!("no separator letter before the x-run in {self}")));
        }
        let a_pos = ell_start - 1;
        // f1 x^u a y^l f2
        let mut out = Vec::with_capacity(letters.len());
        out.extend_from_slice(&letters[..a_pos]);
        out.extend(std::iter::repeat(Letter::X).take(u));
        out.extend_from_slice(&letters[a_pos..ell_start]);
        out.extend_from_slice(&letters[ell_start..run.start]);
        out.extend_from_slice(&letters[run.end..]);
        let word = CoreWord::new(out);
        word.check_membership().map_err(|e| {
            Error::InvolutionDefect(format!("inverse image of {self} is invalid: {e}"))
        })?;
        Ok(word)
    }
}

impl fmt::Display for CoreWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for CoreWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<CoreWord> {
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.chars() {
            letters.push(match ch {
                'x' => Letter::X,
                'z' => Letter::Z,
                'y' => Letter::Y,
                'Y' => Letter::Ybar,
                ch if ch.is_whitespace() => continue,
                _ => return Err(Error::Parse(format!("unknown core-word letter {ch:?}"))),
            });
        }
        Ok(CoreWord::new(letters))
    }
}

/// All members of `C_{j,k}`, by exhaustive recursion.
pub fn enumerate_core_words(j: usize, k: usize) -> Vec<CoreWord> {
    if k < j {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut letters = Vec::with_capacity(j + k);
    build(j, j, k - j, 0, false, &mut letters, &mut out);
    out
}

fn build(
    ups: usize,
    downs: usize,
    levels: usize,
    h: usize,
    last_x: bool,
    letters: &mut Vec<Letter>,
    out: &mut Vec<CoreWord>,
) {
    if ups == 0 && downs == 0 && levels == 0 {
        out.push(CoreWord::new(letters.clone()));
        return;
    }
    if ups > 0 {
        letters.push(Letter::X);
        build(ups - 1, downs, levels, h + 1, true, letters, out);
        letters.pop();
    }
    if levels > 0 {
        letters.push(Letter::Z);
        build(ups, downs, levels - 1, h, false, letters, out);
        letters.pop();
    }
    if downs > 0 && h > 0 {
        if !last_x {
            letters.push(Letter::Y);
            build(ups, downs - 1, levels, h - 1, false, letters, out);
            letters.pop();
        }
        letters.push(Letter::Ybar);
        build(ups, downs - 1, levels, h - 1, false, letters, out);
        letters.pop();
    }
}

/// Expected fixed-point weight sum over `C_{j,k}`:
/// `(-1)^k q^(j+1 choose 2) [k choose j]_q`.
pub fn fixed_point_sum(j: usize, k: usize) -> MPoly {
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let pow = MPoly::q_pow((j * (j + 1) / 2) as u16);
    q_binomial(k as i64, j as i64).mul(&pow).mul_int(sign)
}
