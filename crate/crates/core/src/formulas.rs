//! Closed forms for the moment polynomials and the prefix counts, Carlitz
//! q-Stirling numbers, and Schroeder path sums.
//!
//! Each moment formula is an alternating binomial sum divided by a power
//! of `(1-q)`; the division is exact, and a nonzero remainder aborts with
//! [`Error::NotDivisible`] since it can only mean a defect.

use crate::algebra::mpoly::MPoly;
use crate::algebra::qfun::{binom, q_binomial};
use crate::algebra::var::Var;
use crate::error::{Error, Result};
use crate::paths::gf::{gf_paths, EndHeight};
use crate::paths::systems::WeightSystem;
use num_bigint::BigInt;
use num_traits::Zero;

fn one_minus_q_power(n: usize) -> MPoly {
    MPoly::one().sub(&MPoly::q_pow(1)).pow(n as u32)
}

fn q_pow_binom2(k: i64) -> MPoly {
    // q^(k+1 choose 2)
    MPoly::q_pow((k * (k + 1) / 2) as u16)
}

/// Crossing generating polynomial of matchings of `{1..2n}`, by the
/// Touchard-Riordan formula:
///
/// `1/(1-q)^n sum_k (-1)^k (C(2n,n-k) - C(2n,n-k-1)) q^(k+1 choose 2)`.
pub fn touchard_riordan(n: usize) -> Result<MPoly> {
    let n = n as i64;
    let mut acc = MPoly::zero();
    for k in 0..=n {
        let ballot = binom(2 * n, n - k) - binom(2 * n, n - k - 1);
        let term = q_pow_binom2(k).mul_int(ballot);
        if k % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc.exact_div(&one_minus_q_power(n as usize))
}

/// Crossing generating polynomial of set partitions of `{1..n}` with
/// exactly `k` blocks:
///
/// `1/(1-q)^(n-k) sum_{j=0..k} sum_{i=j..n-k} (-1)^i
///  (C(n,k+i) C(n,k-j) - C(n,k+i+1) C(n,k-j-1)) [i choose j]_q q^(j+1 choose 2)`.
///
/// Empty inner ranges (j > n-k) contribute nothing.
pub fn charlier_crossings(n: usize, k: usize) -> Result<MPoly> {
    if k > n {
        return Ok(MPoly::zero());
    }
    let (n, k) = (n as i64, k as i64);
    let mut acc = MPoly::zero();
    for j in 0..=k {
        for i in j..=(n - k) {
            let coeff = binom(n, k + i) * binom(n, k - j) - binom(n, k + i + 1) * binom(n, k - j - 1);
            if coeff.is_zero() {
                continue;
            }
            let mut term = q_binomial(i, j).mul(&q_pow_binom2(j)).mul_int(coeff);
            if i % 2 == 1 {
                term = term.neg();
            }
            acc += &term;
        }
    }
    acc.exact_div(&one_minus_q_power((n - k) as usize))
}

/// Starred-crossing generating polynomial of set partitions of `{1..n}`
/// with exactly `k` blocks (Gould's formula, equal to the Carlitz
/// q-Stirling number `S[n,k]`):
///
/// `1/(1-q)^(n-k) sum_{j=0..n-k} (-1)^j C(n,k+j) [k+j choose j]_q`.
pub fn charlier_star(n: usize, k: usize) -> Result<MPoly> {
    if k > n {
        return Ok(MPoly::zero());
    }
    let (n, k) = (n as i64, k as i64);
    let mut acc = MPoly::zero();
    for j in 0..=(n - k) {
        let mut term = q_binomial(k + j, j).mul_int(binom(n, k + j));
        if j % 2 == 1 {
            term = term.neg();
        }
        acc += &term;
    }
    acc.exact_div(&one_minus_q_power((n - k) as usize))
}

/// Weak-exceedance/crossing generating polynomial of permutations of
/// `{1..n}`:
///
/// `1/(1-q)^n sum_{k=0..n} (-1)^k
///  (sum_{j} y^j (C(n,j)C(n,j+k) - C(n,j-1)C(n,j+k+1)))
///  (sum_{i=0..k} y^i q^(i(k+1-i)))`.
pub fn laguerre_moment(n: usize) -> Result<MPoly> {
    let n_i = n as i64;
    let mut acc = MPoly::zero();
    for k in 0..=n_i {
        let prefixes = prefix_gf_motzkin(n, k as usize);
        let mut inner = MPoly::zero();
        for i in 0..=k {
            inner += &MPoly::mono(1, &[(Var::Y, i as u16), (Var::Q, (i * (k + 1 - i)) as u16)]);
        }
        let term = prefixes.mul(&inner);
        if k % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc.exact_div(&one_minus_q_power(n))
}

/// Number of `(c,d)`-weighted Motzkin prefixes of length `n` and final
/// height `k`, symbolic in `c` and `d` (Lagrange-inversion form):
///
/// `(k+1)/(n+1) sum_l C(n+1,l) C(l, 2l-n+k) d^(2l-n+k) c^(n-k-l)`.
pub fn prefix_count_trinomial(n: usize, k: usize) -> Result<MPoly> {
    if k > n {
        return Ok(MPoly::zero());
    }
    let (n_i, k_i) = (n as i64, k as i64);
    let mut acc = MPoly::zero();
    for l in 0..=(n_i - k_i) {
        let d_exp = 2 * l - n_i + k_i;
        if d_exp < 0 {
            continue;
        }
        let coeff = binom(n_i + 1, l) * binom(l, d_exp);
        if coeff.is_zero() {
            continue;
        }
        let mono = MPoly::mono(coeff, &[(Var::D, d_exp as u16), (Var::C, (n_i - k_i - l) as u16)]);
        acc += &mono;
    }
    acc.mul_int(k_i + 1).exact_div(&MPoly::from_bigint(BigInt::from(n_i + 1)))
}

/// Number of left factors of Dyck paths of length `n` and final height `k`:
/// the ballot number `C(n, (n-k)/2) - C(n, (n-k)/2 - 1)`.
pub fn prefix_count_ballot(n: usize, k: usize) -> Result<BigInt> {
    if (n + k) % 2 != 0 {
        return Err(Error::ParityMismatch { n, k });
    }
    if k > n {
        return Ok(BigInt::zero());
    }
    let m = ((n - k) / 2) as i64;
    Ok(binom(n as i64, m) - binom(n as i64, m - 1))
}

/// Generating function (in `y`) for Motzkin prefixes of length `n` and
/// final height `k` with level weight `1 + y` and down weight `y`, counted
/// by a two-path determinant:
///
/// `sum_j (C(n,j) C(n,j+k) - C(n,j-1) C(n,j+k+1)) y^j`.
pub fn prefix_gf_motzkin(n: usize, k: usize) -> MPoly {
    let (n, k) = (n as i64, k as i64);
    let mut acc = MPoly::zero();
    for j in 0..=(n - k).max(0) {
        let coeff = binom(n, j) * binom(n, j + k) - binom(n, j - 1) * binom(n, j + k + 1);
        if !coeff.is_zero() {
            acc += &MPoly::mono(coeff, &[(Var::Y, j as u16)]);
        }
    }
    acc
}

/// Carlitz q-Stirling numbers: `S[n,k] = S[n-1,k-1] + [k]_q S[n-1,k]`,
/// with `S[0,0] = 1`.
pub fn q_stirling(n: usize, k: usize) -> MPoly {
    if k > n {
        return MPoly::zero();
    }
    let mut row: Vec<MPoly> = vec![MPoly::one()];
    for _m in 1..=n {
        let mut next = vec![MPoly::zero(); row.len() + 1];
        for (j, entry) in next.iter_mut().enumerate() {
            let mut val = MPoly::zero();
            if j >= 1 && j - 1 < row.len() {
                val += &row[j - 1];
            }
            if j < row.len() {
                val += &crate::algebra::qfun::q_int(j).mul(&row[j]);
            }
            *entry = val;
        }
        row = next;
    }
    row.swap_remove(k)
}

/// Weighted Schroeder-path sum of length `2n`: level steps (length 2)
/// weigh `-1`, ups at height `h` weigh `1 - q^(h+1)` (split over two menu
/// entries), downs weigh 1.  Equals `(-1)^n q^(n+1 choose 2)`.
pub fn schroeder_b(n: usize) -> MPoly {
    gf_paths(&WeightSystem::Schroeder, 2 * n, EndHeight::At(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::poly;
    use crate::family::Family;
    use crate::objects::brute_gf;

    #[test]
    fn touchard_riordan_small() {
        assert_eq!(touchard_riordan(0).unwrap(), MPoly::one());
        assert_eq!(touchard_riordan(2).unwrap(), poly("2 + q"));
        assert_eq!(touchard_riordan(3).unwrap(), poly("5 + 6q + 3q^2 + q^3"));
    }

    #[test]
    fn charlier_crossings_small() {
        assert_eq!(charlier_crossings(7, 7).unwrap(), MPoly::one());
        assert_eq!(charlier_crossings(3, 2).unwrap(), poly("3"));
        // coefficient of y^2 in the brute-force polynomial at n=5
        let brute = brute_gf(Family::Charlier, 5).coeff_of(Var::Y, 2);
        assert_eq!(charlier_crossings(5, 2).unwrap(), brute);
        // no partitions of a nonempty set into 0 blocks
        assert_eq!(charlier_crossings(4, 0).unwrap(), MPoly::zero());
        assert_eq!(charlier_crossings(0, 0).unwrap(), MPoly::one());
    }

    #[test]
    fn charlier_star_small() {
        assert_eq!(charlier_star(3, 2).unwrap(), poly("2 + q"));
        assert_eq!(charlier_star(6, 6).unwrap(), MPoly::one());
        assert_eq!(charlier_star(4, 2).unwrap(), q_stirling(4, 2));
    }

    #[test]
    fn laguerre_moment_small() {
        assert_eq!(laguerre_moment(1).unwrap(), poly("y"));
        assert_eq!(laguerre_moment(2).unwrap(), poly("y + y^2"));
        assert_eq!(laguerre_moment(3).unwrap(), poly("y + 3y^2 + qy^2 + y^3"));
    }

    #[test]
    fn trinomial_small() {
        assert_eq!(prefix_count_trinomial(2, 0).unwrap(), poly("d^2 + c"));
        assert_eq!(prefix_count_trinomial(5, 5).unwrap(), MPoly::one());
        // against the path DP, symbolic in c and d
        let sys = WeightSystem::Prefix { c: MPoly::var(Var::C), d: MPoly::var(Var::D) };
        assert_eq!(prefix_count_trinomial(3, 1).unwrap(), gf_paths(&sys, 3, EndHeight::At(1)));
    }

    #[test]
    fn ballot_small() {
        assert_eq!(prefix_count_ballot(4, 2).unwrap(), BigInt::from(3));
        assert_eq!(prefix_count_ballot(6, 6).unwrap(), BigInt::from(1));
        // Catalan numbers at height 0
        assert_eq!(prefix_count_ballot(6, 0).unwrap(), BigInt::from(5));
        assert!(matches!(prefix_count_ballot(3, 0), Err(Error::ParityMismatch { .. })));
    }

    #[test]
    fn motzkin_prefix_small() {
        assert_eq!(prefix_gf_motzkin(2, 0), poly("1 + 3y + y^2"));
        assert_eq!(prefix_gf_motzkin(4, 4), MPoly::one());
        // Vandermonde simplification at y = 1
        let at_one = prefix_gf_motzkin(3, 1).eval_var(Var::Y, 1);
        assert_eq!(at_one.as_int().unwrap(), BigInt::from(14));
        // y = 0 leaves the binomial coefficient
        for n in 0..=8usize {
            for k in 0..=n {
                let at_zero = prefix_gf_motzkin(n, k).coeff_of(Var::Y, 0);
                assert_eq!(at_zero.as_int().unwrap(), binom(n as i64, k as i64));
            }
        }
    }

    #[test]
    fn q_stirling_small() {
        assert_eq!(q_stirling(5, 5), MPoly::one());
        assert_eq!(q_stirling(3, 2), poly("2 + q"));
        // row generating polynomial equals the starred brute force
        for n in 0..=6usize {
            let mut row = MPoly::zero();
            for k in 0..=n {
                row += &q_stirling(n, k).mul(&MPoly::mono(1, &[(Var::Y, k as u16)]));
            }
            assert_eq!(row, brute_gf(Family::CharlierStar, n), "n={n}");
        }
    }

    #[test]
    fn schroeder_values() {
        assert_eq!(schroeder_b(0), MPoly::one());
        assert_eq!(schroeder_b(1), poly("-q"));
        assert_eq!(schroeder_b(2), poly("q^3"));
        for n in 0..=6usize {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let expected = MPoly::q_pow((n * (n + 1) / 2) as u16).mul_int(sign);
            assert_eq!(schroeder_b(n), expected, "n={n}");
        }
    }

    #[test]
    fn trinomial_specializations() {
        for n in 0..=8usize {
            for k in 0..=n {
                let tri = prefix_count_trinomial(n, k).unwrap();
                // (c,d) = (1,0): ballot numbers where parity permits, else 0
                let dyck = tri.eval_var(Var::C, 1).eval_var(Var::D, 0);
                let expected = prefix_count_ballot(n, k).unwrap_or_else(|_| BigInt::zero());
                assert_eq!(dyck.as_int().unwrap(), expected, "n={n} k={k}");
                // (c,d) = (y, 1+y): the two-path determinant formula
                let motz = tri
                    .substitute(Var::C, &MPoly::var(Var::Y))
                    .substitute(Var::D, &poly("1 + y"));
                assert_eq!(motz, prefix_gf_motzkin(n, k), "n={n} k={k}");
                // (c,d) = (0,1): binomial coefficient
                let bin = tri.eval_var(Var::C, 0).eval_var(Var::D, 1);
                assert_eq!(bin.as_int().unwrap(), binom(n as i64, k as i64), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn route_equality_small() {
        for n in 0..=5usize {
            assert_eq!(touchard_riordan(n).unwrap(), brute_gf(Family::Hermite, n), "n={n}");
            assert_eq!(laguerre_moment(n).unwrap(), brute_gf(Family::Laguerre, n), "n={n}");
            let charlier = brute_gf(Family::Charlier, n);
            let starred = brute_gf(Family::CharlierStar, n);
            for k in 0..=n {
                assert_eq!(
                    charlier_crossings(n, k).unwrap(),
                    charlier.coeff_of(Var::Y, k as u16),
                    "n={n} k={k}"
                );
                assert_eq!(
                    charlier_star(n, k).unwrap(),
                    starred.coeff_of(Var::Y, k as u16),
                    "n={n} k={k}"
                );
            }
        }
    }
}
