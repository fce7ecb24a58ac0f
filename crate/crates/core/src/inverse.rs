//! Inverse relations: the two lower-triangular transform pairs that map
//! moment sequences to reduced path sums and back.

use crate::algebra::mpoly::MPoly;
use crate::algebra::qfun::binom;
use crate::algebra::var::Var;
use crate::formulas::prefix_gf_motzkin;
use num_traits::Zero;

/// Dense lower-triangular matrix of polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    size: usize,
    rows: Vec<Vec<MPoly>>,
}

impl Triangle {
    /// Build from an entry function over `0 <= k <= n < size`.
    pub fn build(size: usize, entry: impl Fn(usize, usize) -> MPoly) -> Triangle {
        let rows = (0..size).map(|n| (0..=n).map(|k| entry(n, k)).collect()).collect();
        Triangle { size, rows }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, n: usize, k: usize) -> MPoly {
        if k <= n && n < self.size {
            self.rows[n][k].clone()
        } else {
            MPoly::zero()
        }
    }

    /// Lower-triangular product.
    pub fn mul(&self, other: &Triangle) -> Triangle {
        assert_eq!(self.size, other.size);
        Triangle::build(self.size, |n, k| {
            let mut acc = MPoly::zero();
            for m in k..=n {
                acc += &self.rows[n][m].mul(&other.rows[m][k]);
            }
            acc
        })
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(n, row)| {
            row.iter().enumerate().all(|(k, e)| if n == k { e.is_one() } else { e.is_zero() })
        })
    }

    /// Apply to a sequence: `out[n] = sum_k T[n][k] seq[k]`.
    pub fn apply(&self, seq: &[MPoly]) -> Vec<MPoly> {
        assert!(seq.len() <= self.size);
        (0..seq.len())
            .map(|n| {
                let mut acc = MPoly::zero();
                for k in 0..=n {
                    acc += &self.rows[n][k].mul(&seq[k]);
                }
                acc
            })
            .collect()
    }
}

/// The two transform pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InversePair {
    /// `a_n = sum_k (C(n,k) - C(n,k-1)) b_(n-2k)` with inverse
    /// `b_n = sum_k (-1)^k C(n-k,k) a_(n-2k)`; connects Dyck-path moment
    /// sums with Schroeder-path sums.
    Touchard,
    /// Forward coefficients are the Motzkin-prefix polynomials (in `y`);
    /// the inverse inserts level and double-level steps:
    /// `b_n = sum_k (sum_j C(n-j, n-k-j) C(n-k-j, j) (-y)^j (-1-y)^(n-k-2j)) a_k`.
    Laguerre,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// The forward triangle of a pair.
pub fn forward_triangle(pair: InversePair, size: usize) -> Triangle {
    match pair {
        InversePair::Touchard => Triangle::build(size, |n, m| {
            // coefficient of b_m in a_n: n - m = 2k
            if (n - m) % 2 != 0 {
                return MPoly::zero();
            }
            let k = ((n - m) / 2) as i64;
            MPoly::from_bigint(binom(n as i64, k) - binom(n as i64, k - 1))
        }),
        InversePair::Laguerre => Triangle::build(size, |n, k| prefix_gf_motzkin(n, k)),
    }
}

/// The inverse triangle of a pair.
pub fn inverse_triangle(pair: InversePair, size: usize) -> Triangle {
    match pair {
        InversePair::Touchard => Triangle::build(size, |n, m| {
            if (n - m) % 2 != 0 {
                return MPoly::zero();
            }
            let k = ((n - m) / 2) as i64;
            let sign = if k % 2 == 0 { 1 } else { -1 };
            MPoly::from_bigint(binom(n as i64 - k, k)).mul_int(sign)
        }),
        InversePair::Laguerre => Triangle::build(size, |n, k| {
            let minus_y = MPoly::var(Var::Y).neg();
            let minus_one_minus_y = MPoly::from_int(-1).sub(&MPoly::var(Var::Y));
            let mut acc = MPoly::zero();
            let (n, k) = (n as i64, k as i64);
            for j in 0..=((n - k) / 2) {
                let coeff = binom(n - j, n - k - j) * binom(n - k - j, j);
                if coeff.is_zero() {
                    continue;
                }
                let term = minus_y
                    .pow(j as u32)
                    .mul(&minus_one_minus_y.pow((n - k - 2 * j) as u32))
                    .mul_int(coeff);
                acc += &term;
            }
            acc
        }),
    }
}

/// Apply one direction of a pair to a sequence of polynomials.
pub fn inverse_pair_apply(pair: InversePair, direction: Direction, seq: &[MPoly]) -> Vec<MPoly> {
    let triangle = match direction {
        Direction::Forward => forward_triangle(pair, seq.len()),
        Direction::Inverse => inverse_triangle(pair, seq.len()),
    };
    triangle.apply(seq)
}
