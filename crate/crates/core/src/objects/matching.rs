//! Perfect matchings of `{1..2n}` and their crossing number.

use crate::error::{Error, Result};
use std::fmt;

/// A perfect matching (fixed-point free involution) of `{1..2n}`.
///
/// Stored as a partner table: `partner[i] = j` iff `{i+1, j+1}` is a pair
/// (indices are 0-based internally, 1-based in all textual forms).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    partner: Vec<usize>,
}

impl Matching {
    pub fn new(partner: Vec<usize>) -> Result<Matching> {
        let n = partner.len();
        if n % 2 != 0 {
            return Err(Error::Parse("a matching needs an even ground set".into()));
        }
        for i in 0..n {
            let j = partner[i];
            if j >= n || j == i || partner[j] != i {
                return Err(Error::Parse(format!("invalid partner table at position {}", i + 1)));
            }
        }
        Ok(Matching { partner })
    }

    /// Build from 1-based pairs, e.g. `[(1,5),(2,4),(3,9),(6,7),(8,10)]`.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Matching> {
        let n = pairs.len() * 2;
        let mut partner = vec![usize::MAX; n];
        for &(i, j) in pairs {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::Parse(format!("pair ({i},{j}) out of range")));
            }
            if partner[i - 1] != usize::MAX || partner[j - 1] != usize::MAX {
                return Err(Error::Parse(format!("element repeated in pair ({i},{j})")));
            }
            partner[i - 1] = j - 1;
            partner[j - 1] = i - 1;
        }
        Matching::new(partner)
    }

    pub fn n_points(&self) -> usize {
        self.partner.len()
    }

    pub fn partner_table(&self) -> &[usize] {
        &self.partner
    }

    /// Arcs as 1-based pairs `(i, j)` with `i < j`, sorted by opener.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.partner.len() / 2);
        for i in 0..self.partner.len() {
            let j = self.partner[i];
            if i < j {
                out.push((i + 1, j + 1));
            }
        }
        out
    }

    /// Number of crossings: pairs of arcs `(i,j)`, `(k,l)` with `i<k<j<l`.
    pub fn crossings(&self) -> u64 {
        crossings_of_partner_table(&self.partner)
    }

    /// Parse the text encoding `"1-5,2-4,3-9,6-7,8-10"`.
    pub fn parse(s: &str) -> Result<Matching> {
        let mut pairs = Vec::new();
        for chunk in s.split(',') {
            let chunk = chunk.trim();
            let (a, b) = chunk
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("expected i-j, got {chunk:?}")))?;
            let a: usize =
                a.trim().parse().map_err(|_| Error::Parse(format!("bad number {a:?}")))?;
            let b: usize =
                b.trim().parse().map_err(|_| Error::Parse(format!("bad number {b:?}")))?;
            pairs.push((a, b));
        }
        Matching::from_pairs(&pairs)
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.pairs().iter().map(|&(i, j)| format!("{i}-{j}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// Crossing count straight off a partner table (hot path for sweeps).
pub fn crossings_of_partner_table(partner: &[usize]) -> u64 {
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(partner.len() / 2);
    for i in 0..partner.len() {
        if i < partner[i] {
            arcs.push((i, partner[i]));
        }
    }
    let mut count = 0;
    for x in 0..arcs.len() {
        for y in x + 1..arcs.len() {
            let (_i, j) = arcs[x];
            let (k, l) = arcs[y];
            // arcs are sorted by opener, so i < k
            if k < j && j < l {
                count += 1;
            }
        }
    }
    count
}

/// Visit every perfect matching of `{1..n_points}` exactly once, in
/// smallest-unmatched-first order.  The callback borrows a scratch partner
/// table; copy it if you need to keep the matching.
pub fn for_each_matching(n_points: usize, f: &mut impl FnMut(&[usize])) {
    if n_points % 2 != 0 {
        return;
    }
    let mut partner = vec![usize::MAX; n_points];
    recurse(&mut partner, f);
}

fn recurse(partner: &mut [usize], f: &mut impl FnMut(&[usize])) {
    let i = match partner.iter().position(|&p| p == usize::MAX) {
        None => {
            f(partner);
            return;
        }
        Some(i) => i,
    };
    for j in i + 1..partner.len() {
        if partner[j] == usize::MAX {
            partner[i] = j;
            partner[j] = i;
            recurse(partner, f);
            partner[i] = usize::MAX;
            partner[j] = usize::MAX;
        }
    }
}

/// Collect all matchings; convenient for small ground sets.
pub fn matchings(n_points: usize) -> Vec<Matching> {
    let mut out = Vec::new();
    for_each_matching(n_points, &mut |p| out.push(Matching { partner: p.to_vec() }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_counts() {
        let m = Matching::parse("1-5,2-4,3-9,6-7,8-10").unwrap();
        assert_eq!(m.crossings(), 3);
        assert_eq!(Matching::parse("1-2,3-4").unwrap().crossings(), 0);
        assert_eq!(Matching::parse("1-3,2-4").unwrap().crossings(), 1);
    }

    #[test]
    fn enumeration_counts_double_factorial() {
        // (2n-1)!! matchings of {1..2n}
        let expected = [1u64, 1, 3, 15, 105, 945];
        for n in 0..expected.len() {
            let mut count = 0;
            for_each_matching(2 * n, &mut |_| count += 1);
            assert_eq!(count, expected[n], "2n={}", 2 * n);
        }
    }

    #[test]
    fn enumeration_is_deterministic_and_distinct() {
        let all = matchings(8);
        assert_eq!(all.len(), 105);
        let mut seen: Vec<String> = all.iter().map(|m| m.to_string()).collect();
        let ordered = seen.clone();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 105);
        assert_eq!(matchings(8).iter().map(|m| m.to_string()).collect::<Vec<_>>(), ordered);
    }

    #[test]
    fn crossings_invariant_under_reflection() {
        // i -> 2n+1-i maps crossing pairs to crossing pairs
        for m in matchings(10) {
            let n = m.n_points();
            let reflected: Vec<(usize, usize)> =
                m.pairs().iter().map(|&(i, j)| (n + 1 - j, n + 1 - i)).collect();
            let r = Matching::from_pairs(&reflected).unwrap();
            assert_eq!(m.crossings(), r.crossings());
        }
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(Matching::new(vec![0, 1]).is_err());
        assert!(Matching::parse("1-1").is_err());
        assert!(Matching::parse("1-2,2-3").is_err());
    }
}
