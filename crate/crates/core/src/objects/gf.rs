//! Brute-force generating polynomials: the ground-truth oracle for every
//! closed form and path model in the crate.

use crate::algebra::mpoly::MPoly;
use crate::algebra::var::Var;
use crate::family::Family;
use crate::objects::matching::crossings_of_partner_table;
use crate::objects::partition::SetPartition;
use crate::objects::permutation::{crossings_of_one_line, for_each_permutation};
use num_bigint::BigInt;
use rayon::prelude::*;
use std::collections::HashMap;

/// Table of object counts indexed by `(y exponent, q exponent)`.
type StatTable = HashMap<(u32, u32), u64>;

fn merge(mut left: StatTable, right: StatTable) -> StatTable {
    for (key, count) in right {
        *left.entry(key).or_insert(0) += count;
    }
    left
}

fn table_to_poly(table: StatTable) -> MPoly {
    let mut out = MPoly::zero();
    for ((ye, qe), count) in table {
        let term = MPoly::mono(BigInt::from(count), &[(Var::Y, ye as u16), (Var::Q, qe as u16)]);
        out += &term;
    }
    out
}

/// Exact sum of the statistic monomial over all objects of the family:
///
/// * Hermite: matchings of `{1..2n}`, weight `q^cro`
/// * Charlier: set partitions of `{1..n}`, weight `y^blocks q^cro`
/// * Charlier-star: same with the augmented crossing count `cro*`
/// * Laguerre: permutations of `{1..n}`, weight `y^wex q^cro`
///
/// Enumeration is split over a first decision level and reduced by
/// polynomial addition, so the result is independent of worker count.
pub fn brute_gf(family: Family, n: usize) -> MPoly {
    let table = match family {
        Family::Hermite => matchings_table(2 * n),
        Family::Charlier => partitions_table(n, false),
        Family::CharlierStar => partitions_table(n, true),
        Family::Laguerre => permutations_table(n),
    };
    table_to_poly(table)
}

fn matchings_table(n_points: usize) -> StatTable {
    if n_points == 0 {
        return StatTable::from([((0, 0), 1)]);
    }
    // fix the partner of point 1 and enumerate the rest in parallel
    (1..n_points)
        .into_par_iter()
        .map(|j| {
            let mut partner = vec![usize::MAX; n_points];
            partner[0] = j;
            partner[j] = 0;
            let mut table = StatTable::new();
            complete_matchings(&mut partner, &mut table);
            table
        })
        .reduce(StatTable::new, merge)
}

fn complete_matchings(partner: &mut [usize], table: &mut StatTable) {
    let i = match partner.iter().position(|&p| p == usize::MAX) {
        None => {
            let cro = crossings_of_partner_table(partner) as u32;
            *table.entry((0, cro)).or_insert(0) += 1;
            return;
        }
        Some(i) => i,
    };
    for j in i + 1..partner.len() {
        if partner[j] == usize::MAX {
            partner[i] = j;
            partner[j] = i;
            complete_matchings(partner, table);
            partner[i] = usize::MAX;
            partner[j] = usize::MAX;
        }
    }
}

fn partitions_table(n: usize, starred: bool) -> StatTable {
    // split on the restricted-growth prefix of length min(3, n)
    if n == 0 {
        return StatTable::from([((0, 0), 1)]);
    }
    let depth = n.min(3);
    let mut prefixes: Vec<Vec<usize>> = vec![vec![0]];
    for _ in 1..depth {
        let mut next = Vec::new();
        for p in &prefixes {
            let bound = p.iter().copied().max().unwrap() + 1;
            for v in 0..=bound {
                let mut q = p.clone();
                q.push(v);
                next.push(q);
            }
        }
        prefixes = next;
    }
    prefixes
        .into_par_iter()
        .map(|prefix| {
            let mut rgs = prefix.clone();
            rgs.resize(n, 0);
            let mut table = StatTable::new();
            complete_rgs(&mut rgs, prefix.len(), &mut |rgs| {
                let p = SetPartition::from_rgs(rgs);
                let cro = if starred { p.crossings_star() } else { p.crossings() };
                *table.entry((p.num_blocks() as u32, cro as u32)).or_insert(0) += 1;
            });
            table
        })
        .reduce(StatTable::new, merge)
}

fn complete_rgs(rgs: &mut Vec<usize>, from: usize, f: &mut impl FnMut(&[usize])) {
    if from == rgs.len() {
        f(rgs);
        return;
    }
    let bound = rgs[..from].iter().copied().max().unwrap() + 1;
    for v in 0..=bound {
        rgs[from] = v;
        complete_rgs(rgs, from + 1, f);
    }
    rgs[from] = 0;
}

fn permutations_table(n: usize) -> StatTable {
    if n == 0 {
        return StatTable::from([((0, 0), 1)]);
    }
    // fix sigma(1) and enumerate the remaining values in parallel
    (1..=n)
        .into_par_iter()
        .map(|first| {
            let rest: Vec<usize> = (1..=n).filter(|&v| v != first).collect();
            let mut table = StatTable::new();
            let mut image = vec![first];
            image.extend_from_slice(&rest);
            // lexicographic enumeration of the tail
            for_each_permutation(n - 1, &mut |tail| {
                for (i, &idx) in tail.iter().enumerate() {
                    image[i + 1] = rest[idx - 1];
                }
                let wex = image.iter().enumerate().filter(|&(i, &v)| v >= i + 1).count() as u32;
                let cro = crossings_of_one_line(&image) as u32;
                *table.entry((wex, cro)).or_insert(0) += 1;
            });
            table
        })
        .reduce(StatTable::new, merge)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::poly;
    use crate::algebra::qfun::binom;
    use crate::objects::matching::for_each_matching;
    use crate::objects::partition::for_each_set_partition;
    use num_traits::Zero;

    #[test]
    fn small_generating_polynomials() {
        assert_eq!(brute_gf(Family::Hermite, 2), poly("2 + q"));
        assert_eq!(brute_gf(Family::Laguerre, 2), poly("y + y^2"));
        assert_eq!(brute_gf(Family::Charlier, 3), poly("y + 3*y^2 + y^3"));
        assert_eq!(brute_gf(Family::Hermite, 0), MPoly::one());
        assert_eq!(brute_gf(Family::Laguerre, 3), poly("y + 3*y^2 + q*y^2 + y^3"));
    }

    #[test]
    fn parallel_split_matches_plain_enumeration() {
        // same tables computed without the first-level split
        for n in 0..=5 {
            let mut plain = StatTable::new();
            for_each_matching(2 * n, &mut |p| {
                *plain.entry((0, crossings_of_partner_table(p) as u32)).or_insert(0) += 1;
            });
            assert_eq!(table_to_poly(plain), brute_gf(Family::Hermite, n), "n={n}");
        }
        for n in 0..=6 {
            let mut plain = StatTable::new();
            for_each_set_partition(n, &mut |rgs| {
                let p = SetPartition::from_rgs(rgs);
                *plain.entry((p.num_blocks() as u32, p.crossings_star() as u32)).or_insert(0) += 1;
            });
            assert_eq!(table_to_poly(plain), brute_gf(Family::CharlierStar, n), "n={n}");
        }
        for n in 0..=5 {
            let mut plain = StatTable::new();
            for_each_permutation(n, &mut |img| {
                let wex = img.iter().enumerate().filter(|&(i, &v)| v >= i + 1).count() as u32;
                *plain.entry((wex, crossings_of_one_line(img) as u32)).or_insert(0) += 1;
            });
            assert_eq!(table_to_poly(plain), brute_gf(Family::Laguerre, n), "n={n}");
        }
    }

    #[test]
    fn partition_counts_match_stirling_numbers() {
        // coefficients of y^k at q := 1 are Stirling numbers; totals are Bell
        let stirling = |n: i64, k: i64| -> BigInt {
            // S(n,k) by recurrence
            let mut row = vec![BigInt::from(1)];
            for m in 1..=n {
                let mut next = vec![BigInt::zero(); (m + 1) as usize];
                for j in 1..=m {
                    let prev_j = if (j as usize) < row.len() { row[j as usize].clone() } else { BigInt::zero() };
                    next[j as usize] = row[(j - 1) as usize].clone() + BigInt::from(j) * prev_j;
                }
                row = next;
            }
            row.get(k as usize).cloned().unwrap_or_else(BigInt::zero)
        };
        for n in 0..=8i64 {
            let gf = brute_gf(Family::Charlier, n as usize).eval_var(Var::Q, 1);
            for k in 0..=n {
                assert_eq!(gf.coeff_of(Var::Y, k as u16).as_int().unwrap(), stirling(n, k));
            }
        }
    }

    #[test]
    fn permutation_row_sums_are_factorials() {
        for n in 0..=7usize {
            let gf = brute_gf(Family::Laguerre, n).eval_var(Var::Q, 1).eval_var(Var::Y, 1);
            let expected: u64 = (1..=n as u64).product();
            assert_eq!(gf.as_int().unwrap(), BigInt::from(expected.max(1)), "n={n}");
        }
    }

    #[test]
    fn matching_totals_are_double_factorials() {
        for n in 1..=6usize {
            let total = brute_gf(Family::Hermite, n).eval_var(Var::Q, 1);
            let expected: BigInt = (1..=2 * n as i64).filter(|v| v % 2 == 1).map(BigInt::from).product();
            assert_eq!(total.as_int().unwrap(), expected);
            let _ = binom(2, 1);
        }
    }
}
