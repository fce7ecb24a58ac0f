//! Set partitions of `{1..n}`, their arc drawings and crossing statistics.

use crate::error::{Error, Result};
use std::fmt;

/// A set partition of `{1..n}` in canonical form: each block strictly
/// increasing, blocks ordered by their minima.
///
/// The linear drawing joins consecutive elements of each block by arcs
/// `(b_1,b_2), (b_2,b_3), ...`; all statistics are defined on that arc set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
    n: usize,
}

impl SetPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<SetPartition> {
        for b in &mut blocks {
            b.sort_unstable();
            if b.is_empty() {
                return Err(Error::Parse("empty block".into()));
            }
        }
        blocks.sort_by_key(|b| b[0]);
        let mut seen = Vec::new();
        for b in &blocks {
            seen.extend_from_slice(b);
        }
        let n = seen.len();
        let mut sorted = seen.clone();
        sorted.sort_unstable();
        if sorted != (1..=n).collect::<Vec<_>>() {
            return Err(Error::Parse("blocks must partition {1..n}".into()));
        }
        Ok(SetPartition { blocks, n })
    }

    /// Build from a restricted-growth string (`rgs[i]` = 0-based block label
    /// of element `i+1`, labels first appearing in increasing order).
    pub fn from_rgs(rgs: &[usize]) -> SetPartition {
        let k = rgs.iter().max().map_or(0, |&m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        SetPartition { blocks, n: rgs.len() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Consecutive-pair arcs of the drawing, 1-based.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::new();
        for b in &self.blocks {
            for w in b.windows(2) {
                arcs.push((w[0], w[1]));
            }
        }
        arcs.sort_unstable();
        arcs
    }

    /// Crossings between finite arcs: `(i,j)` and `(k,l)` with `i<k<j<l`.
    pub fn crossings(&self) -> u64 {
        let arcs = self.arcs();
        count_finite_crossings(&arcs)
    }

    /// Crossings of the augmented drawing with an infinite rightward arc at
    /// every block maximum (singletons included).  An infinite arc starting
    /// at `i` crosses a finite arc `(k,l)` iff `k < i < l`; infinite arcs
    /// never cross each other.
    pub fn crossings_star(&self) -> u64 {
        let arcs = self.arcs();
        let mut count = count_finite_crossings(&arcs);
        for b in &self.blocks {
            let i = *b.last().unwrap();
            for &(k, l) in &arcs {
                if k < i && i < l {
                    count += 1;
                }
            }
        }
        count
    }

    /// Parse the text encoding `"1 5 8|2 6|3 4|7"`.
    pub fn parse(s: &str) -> Result<SetPartition> {
        let mut blocks = Vec::new();
        for chunk in s.split('|') {
            let mut block = Vec::new();
            for tok in chunk.split_whitespace() {
                block.push(tok.parse().map_err(|_| Error::Parse(format!("bad number {tok:?}")))?);
            }
            blocks.push(block);
        }
        SetPartition::new(blocks)
    }
}

fn count_finite_crossings(arcs: &[(usize, usize)]) -> u64 {
    let mut count = 0;
    for x in 0..arcs.len() {
        for y in 0..arcs.len() {
            let (i, j) = arcs[x];
            let (k, l) = arcs[y];
            if i < k && k < j && j < l {
                count += 1;
            }
        }
    }
    count
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&parts.join("|"))
    }
}

/// Visit every set partition of `{1..n}` once, as restricted-growth strings
/// in lexicographic order.
pub fn for_each_set_partition(n: usize, f: &mut impl FnMut(&[usize])) {
    if n == 0 {
        f(&[]);
        return;
    }
    let mut rgs = vec![0usize; n];
    // prefix_max[i] = max(rgs[0..=i])
    let mut prefix_max = vec![0usize; n];
    loop {
        f(&rgs);
        // rightmost position that can be incremented: rgs[i] <= prefix_max[i-1]
        let mut i = n - 1;
        loop {
            if i == 0 {
                return;
            }
            if rgs[i] <= prefix_max[i - 1] {
                break;
            }
            i -= 1;
        }
        rgs[i] += 1;
        prefix_max[i] = prefix_max[i - 1].max(rgs[i]);
        for j in i + 1..n {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[j - 1];
        }
    }
}

/// Collect all partitions of `{1..n}`.
pub fn set_partitions(n: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    for_each_set_partition(n, &mut |rgs| out.push(SetPartition::from_rgs(rgs)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_counts() {
        let p = SetPartition::parse("1 5 8|2 6|3 4|7").unwrap();
        assert_eq!(p.num_blocks(), 4);
        assert_eq!(p.crossings(), 2);
        assert_eq!(p.crossings_star(), 6);

        let p = SetPartition::parse("1|2|3").unwrap();
        assert_eq!(p.crossings(), 0);
        assert_eq!(p.crossings_star(), 0);

        let p = SetPartition::parse("1 3|2 4").unwrap();
        assert_eq!(p.crossings(), 1);

        // the infinite arc from 2 crosses (1,3)
        let p = SetPartition::parse("1 3|2").unwrap();
        assert_eq!(p.crossings(), 0);
        assert_eq!(p.crossings_star(), 1);
    }

    #[test]
    fn enumeration_counts_bell() {
        let bell = [1u64, 1, 2, 5, 15, 52, 203, 877];
        for n in 0..bell.len() {
            let mut count = 0;
            for_each_set_partition(n, &mut |_| count += 1);
            assert_eq!(count, bell[n], "n={n}");
        }
    }

    #[test]
    fn rgs_is_lexicographic() {
        let mut seen = Vec::new();
        for_each_set_partition(3, &mut |rgs| seen.push(rgs.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![0, 1, 2]
            ]
        );
    }

    #[test]
    fn star_dominates_plain() {
        for p in set_partitions(7) {
            assert!(p.crossings_star() >= p.crossings(), "{p}");
        }
    }

    #[test]
    fn canonical_form_and_roundtrip() {
        let p = SetPartition::new(vec![vec![2, 6], vec![8, 5, 1], vec![3, 4], vec![7]]).unwrap();
        assert_eq!(p.to_string(), "1 5 8|2 6|3 4|7");
        assert_eq!(SetPartition::parse(&p.to_string()).unwrap(), p);
        assert!(SetPartition::parse("1 2|2 3").is_err());
    }
}
