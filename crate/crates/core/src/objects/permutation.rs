//! Permutations in one-line form, weak exceedances and crossings.

use crate::error::{Error, Result};
use std::fmt;

/// A permutation of `{1..n}` in one-line form (`image[i] = sigma(i+1)`,
/// values 1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Permutation> {
        let n = image.len();
        let mut seen = vec![false; n + 1];
        for &v in &image {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Parse("not a bijection on {1..n}".into()));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation { image: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// `sigma(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { image: inv }
    }

    /// Number of weak exceedances: positions `i` with `sigma(i) >= i`.
    pub fn wex(&self) -> u64 {
        self.image.iter().enumerate().filter(|&(i, &v)| v >= i + 1).count() as u64
    }

    /// Number of crossings: pairs `(i,k)` with `i<k<=sigma(i)<sigma(k)`
    /// or `sigma(i)<sigma(k)<i<k`.
    pub fn crossings(&self) -> u64 {
        crossings_of_one_line(&self.image)
    }

    /// Both statistics at once.
    pub fn stats(&self) -> (u64, u64) {
        (self.wex(), self.crossings())
    }

    /// Parse the text encoding `"3 4 7 1 5 2 8 6"`.
    pub fn parse(s: &str) -> Result<Permutation> {
        let image = s
            .split_whitespace()
            .map(|tok| tok.parse().map_err(|_| Error::Parse(format!("bad number {tok:?}"))))
            .collect::<Result<Vec<usize>>>()?;
        Permutation::new(image)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.image.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Crossings straight off a one-line table (hot path for sweeps).
pub fn crossings_of_one_line(image: &[usize]) -> u64 {
    let n = image.len();
    let mut count = 0;
    for i in 1..=n {
        let si = image[i - 1];
        for k in i + 1..=n {
            let sk = image[k - 1];
            if k <= si && si < sk {
                count += 1;
            } else if si < sk && sk < i {
                count += 1;
            }
        }
    }
    count
}

/// Visit all permutations of `{1..n}` in lexicographic one-line order.
pub fn for_each_permutation(n: usize, f: &mut impl FnMut(&[usize])) {
    let mut image: Vec<usize> = (1..=n).collect();
    loop {
        f(&image);
        // standard next-permutation step
        if n < 2 {
            return;
        }
        let mut i = n - 1;
        while i > 0 && image[i - 1] >= image[i] {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        let mut j = n - 1;
        while image[j] <= image[i - 1] {
            j -= 1;
        }
        image.swap(i - 1, j);
        image[i..].reverse();
    }
}

/// Collect all permutations of `{1..n}`.
pub fn permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_permutation(n, &mut |img| out.push(Permutation { image: img.to_vec() }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stats_of_examples() {
        let p = Permutation::parse("3 4 7 1 5 2 8 6").unwrap();
        assert_eq!(p.stats(), (5, 5));
        assert_eq!(Permutation::identity(6).stats(), (6, 0));
        // exhaustive pair check, done by hand: wex {1,2}, crossing (1,2)
        assert_eq!(Permutation::parse("2 3 1").unwrap().stats(), (2, 1));
    }

    #[test]
    fn enumeration_counts_factorial() {
        let fact = [1u64, 1, 2, 6, 24, 120];
        for n in 0..fact.len() {
            let mut count = 0;
            for_each_permutation(n, &mut |_| count += 1);
            assert_eq!(count, fact[n], "n={n}");
        }
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all = permutations(3);
        let lines: Vec<String> = all.iter().map(|p| p.to_string()).collect();
        assert_eq!(lines, vec!["1 2 3", "1 3 2", "2 1 3", "2 3 1", "3 1 2", "3 2 1"]);
    }

    #[test]
    fn fixed_points_count_as_weak_exceedances() {
        // a loop contributes to wex and to no crossing
        let p = Permutation::parse("1 3 2").unwrap();
        assert_eq!(p.wex(), 2);
        assert_eq!(p.crossings(), 0);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::parse("1 1 2").is_err());
        assert!(Permutation::parse("0 1").is_err());
        assert!(Permutation::parse("4").is_err());
    }
}
