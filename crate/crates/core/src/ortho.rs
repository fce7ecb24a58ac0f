//! Orthogonality of the four polynomial families against their moment
//! functionals.
//!
//! Each family is defined by its three-term recurrence
//! `x P_n = P_(n+1) + b_n P_n + lambda_n P_(n-1)`; the moment functional
//! `L(x^m)` is the histoire path sum of length `m`.  Orthogonality demands
//! `L(P_i P_j) = 0` for `i != j` and `L(P_i^2) = prod_(m<=i) lambda_m`.

use crate::algebra::mpoly::MPoly;
use crate::algebra::qfun::q_int;
use crate::algebra::var::Var;
use crate::family::Family;
use crate::paths::gf::{gf_paths, EndHeight};
use crate::paths::systems::WeightSystem;

/// Recurrence coefficients of a family.
#[derive(Debug, Clone, Copy)]
pub struct OrthoFamily {
    pub family: Family,
}

impl OrthoFamily {
    pub fn new(family: Family) -> OrthoFamily {
        OrthoFamily { family }
    }

    /// Level coefficient `b_n`.
    pub fn coeff_b(&self, n: usize) -> MPoly {
        let y = MPoly::var(Var::Y);
        match self.family {
            Family::Hermite => MPoly::zero(),
            Family::Charlier => y.add(&q_int(n)),
            Family::CharlierStar => {
                MPoly::mono(1, &[(Var::Y, 1), (Var::Q, n as u16)]).add(&q_int(n))
            }
            Family::Laguerre => q_int(n).add(&y.mul(&q_int(n + 1))),
        }
    }

    /// Down coefficient `lambda_n` (unused at `n = 0`).
    pub fn coeff_lambda(&self, n: usize) -> MPoly {
        let y = MPoly::var(Var::Y);
        match self.family {
            Family::Hermite => q_int(n),
            Family::Charlier => y.mul(&q_int(n)),
            Family::CharlierStar => {
                if n == 0 {
                    MPoly::zero()
                } else {
                    MPoly::mono(1, &[(Var::Y, 1), (Var::Q, n as u16 - 1)]).mul(&q_int(n))
                }
            }
            Family::Laguerre => y.mul(&q_int(n)).mul(&q_int(n)),
        }
    }

    /// Moments `L(x^0), ..., L(x^upto)` from the histoire path model.
    pub fn moments(&self, upto: usize) -> Vec<MPoly> {
        let sys = WeightSystem::Histoire(self.family);
        (0..=upto).map(|m| gf_paths(&sys, m, EndHeight::At(0))).collect()
    }
}

/// Polynomials in an auxiliary power basis: `coeffs[m]` multiplies `x^m`.
fn recurrence_polys(fam: &OrthoFamily, upto: usize) -> Vec<Vec<MPoly>> {
    let mut polys: Vec<Vec<MPoly>> = Vec::with_capacity(upto + 1);
    polys.push(vec![MPoly::one()]);
    if upto == 0 {
        return polys;
    }
    for n in 0..upto {
        // P_(n+1) = x P_n - b_n P_n - lambda_n P_(n-1)
        let mut next = vec![MPoly::zero(); n + 2];
        let b = fam.coeff_b(n);
        for (m, c) in polys[n].iter().enumerate() {
            next[m + 1] += c;
            next[m] -= &b.mul(c);
        }
        if n >= 1 {
            let lambda = fam.coeff_lambda(n);
            for (m, c) in polys[n - 1].iter().enumerate() {
                next[m] -= &lambda.mul(c);
            }
        }
        polys.push(next);
    }
    polys
}

/// Verify orthogonality up to degree `n_max`: `L(P_i P_j) = 0` for all
/// `i != j` and `L(P_i^2) = prod lambda`.  Returns false on any failure.
pub fn ortho_check(family: Family, n_max: usize) -> bool {
    let fam = OrthoFamily::new(family);
    let polys = recurrence_polys(&fam, n_max);
    let moments = fam.moments(2 * n_max);
    let pair = |i: usize, j: usize| -> MPoly {
        // L applied to the coefficient convolution of P_i P_j
        let mut acc = MPoly::zero();
        for (m1, c1) in polys[i].iter().enumerate() {
            for (m2, c2) in polys[j].iter().enumerate() {
                acc += &c1.mul(c2).mul(&moments[m1 + m2]);
            }
        }
        acc
    };
    for i in 0..=n_max {
        for j in 0..i {
            if !pair(i, j).is_zero() {
                return false;
            }
        }
        let mut norm = MPoly::one();
        for m in 1..=i {
            norm = norm.mul(&fam.coeff_lambda(m));
        }
        if pair(i, i) != norm {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::poly;

    #[test]
    fn hermite_moments_start_correctly() {
        let fam = OrthoFamily::new(Family::Hermite);
        let mu = fam.moments(5);
        assert_eq!(mu[0], MPoly::one());
        assert_eq!(mu[1], MPoly::zero());
        assert_eq!(mu[2], MPoly::one());
        assert_eq!(mu[3], MPoly::zero());
        assert_eq!(mu[4], poly("2 + q"));
    }

    #[test]
    fn squared_norms() {
        // L(P_0^2) = 1 for every family
        for family in Family::ALL {
            assert!(ortho_check(family, 0), "{family}");
        }
        // Laguerre: L(P_2^2) = lambda_1 lambda_2 = y^2 (1+q)^2
        let fam = OrthoFamily::new(Family::Laguerre);
        let product = fam.coeff_lambda(1).mul(&fam.coeff_lambda(2));
        assert_eq!(product, poly("y").pow(2).mul(&poly("1 + q").pow(2)));
    }

    #[test]
    fn orthogonality_small() {
        for family in Family::ALL {
            assert!(ortho_check(family, 3), "{family}");
        }
    }
}
