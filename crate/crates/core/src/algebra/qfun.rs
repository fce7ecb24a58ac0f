//! q-integers, Gaussian binomials, Pochhammer products and plain binomials.

use crate::algebra::mpoly::MPoly;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient as an exact integer; zero outside `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The q-integer `[n]_q = 1 + q + ... + q^{n-1}`, with `[0]_q = 0`.
pub fn q_int(n: usize) -> MPoly {
    let mut p = MPoly::zero();
    for i in 0..n {
        p += &MPoly::q_pow(i as u16);
    }
    p
}

/// Gaussian binomial coefficient; zero outside `0 <= k <= n`.
///
/// Small arguments go through the Pascal recurrence
/// `qbin(n,k) = qbin(n-1,k-1) + q^k qbin(n-1,k)`; large ones through the
/// product formula `prod [n-k+i]_q / [i]_q`, whose divisions are exact.
pub fn q_binomial(n: i64, k: i64) -> MPoly {
    if k < 0 || n < 0 || k > n {
        return MPoly::zero();
    }
    if n <= 64 {
        q_binomial_pascal(n as usize, k as usize)
    } else {
        q_binomial_product(n as usize, k as usize)
    }
}

/// Pascal-recurrence evaluation (also the test oracle for the product form).
pub fn q_binomial_pascal(n: usize, k: usize) -> MPoly {
    if k > n {
        return MPoly::zero();
    }
    // Row-by-row over a single vector indexed by k.
    let mut row = vec![MPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let mut entry = MPoly::zero();
            if j >= 1 {
                entry += &row[j - 1];
            }
            if j < m {
                entry += &MPoly::q_pow(j as u16).mul(&row[j]);
            }
            next.push(entry);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// Product-formula evaluation via exact division.
pub fn q_binomial_product(n: usize, k: usize) -> MPoly {
    if k > n {
        return MPoly::zero();
    }
    let k = k.min(n - k);
    let mut acc = MPoly::one();
    for i in 1..=k {
        acc = acc.mul(&q_int(n - k + i));
        acc = acc.exact_div(&q_int(i)).expect("q-binomial product must divide exactly");
    }
    acc
}

/// q-Pochhammer symbol `(x; q)_n = prod_{i=0}^{n-1} (1 - x q^i)`, expanded.
pub fn q_pochhammer(x: &MPoly, n: usize) -> MPoly {
    let mut acc = MPoly::one();
    for i in 0..n {
        let factor = MPoly::one().sub(&x.mul(&MPoly::q_pow(i as u16)));
        acc = acc.mul(&factor);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::poly;
    use crate::algebra::var::Var;

    #[test]
    fn q_int_values() {
        assert_eq!(q_int(0), MPoly::zero());
        assert_eq!(q_int(1), MPoly::one());
        assert_eq!(q_int(3), poly("1 + q + q^2"));
    }

    #[test]
    fn q_binomial_values() {
        assert_eq!(q_binomial(2, 1), poly("1 + q"));
        assert_eq!(q_binomial(7, 0), MPoly::one());
        // (4 choose 2)_q from the Pascal recurrence, unrolled by hand
        assert_eq!(q_binomial(4, 2), poly("1 + q + 2*q^2 + q^3 + q^4"));
        assert_eq!(q_binomial(3, 5), MPoly::zero());
        assert_eq!(q_binomial(-1, 0), MPoly::zero());
    }

    #[test]
    fn pascal_agrees_with_product() {
        for n in 0..=10usize {
            for k in 0..=n {
                assert_eq!(q_binomial_pascal(n, k), q_binomial_product(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn q_binomial_at_one_is_binomial() {
        for n in 0..=12i64 {
            for k in 0..=n {
                let qb = q_binomial(n, k).eval_var(Var::Q, 1);
                assert_eq!(qb.as_int().unwrap(), binom(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn q_binomial_symmetry() {
        for n in 0..=9i64 {
            for k in 0..=n {
                assert_eq!(q_binomial(n, k), q_binomial(n, n - k));
            }
        }
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(q_pochhammer(&MPoly::var(Var::T), 0), MPoly::one());
        assert_eq!(q_pochhammer(&MPoly::var(Var::T), 2), poly("1 - t - q*t + q*t^2"));
        // (-cqt; q)_2 = 1 + (q + q^2) c t + q^3 c^2 t^2
        let x = poly("-cqt");
        assert_eq!(q_pochhammer(&x, 2), poly("q*c*t + q^2*c*t + q^3*c^2*t^2 + 1"));
    }

    #[test]
    fn pochhammer_matches_qbinomial_expansion() {
        // (-cqt; q)_m = sum_j q^(j+1 choose 2) qbin(m, j) c^j t^j
        for m in 0..=6i64 {
            let lhs = q_pochhammer(&poly("-cqt"), m as usize);
            let mut rhs = MPoly::zero();
            for j in 0..=m {
                let pow = MPoly::q_pow((j * (j + 1) / 2) as u16);
                let cj = MPoly::mono(1, &[(Var::C, j as u16), (Var::T, j as u16)]);
                rhs += &pow.mul(&q_binomial(m, j)).mul(&cj);
            }
            assert_eq!(lhs, rhs, "m={m}");
        }
    }

    #[test]
    fn binom_values() {
        assert_eq!(binom(10, 5), BigInt::from(252));
        assert_eq!(binom(4, -1), BigInt::zero());
        assert_eq!(binom(4, 5), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
    }
}
