//! Four independent expansions of the continued fraction
//!
//! ```text
//! K(at, bt, ct^2; q) = 1 / (1 + ct^2 - (a+b)t - t^2(c-ab)(1-q) / (1 + ct^2 - (a+b)qt - ...))
//! ```
//!
//! whose coefficient of `t^k` is the path sum of `M*_k(a,b,c;q)`:
//! bottom-up convergents, per-family closed forms, the basic
//! hypergeometric form, and a fixed-point solver for the functional
//! equation behind the fraction.  All four must agree term by term.

use crate::algebra::mpoly::MPoly;
use crate::algebra::qfun::q_binomial;
use crate::algebra::series::TruncSeries;
use crate::algebra::var::Var;
use crate::error::{Error, Result};
use crate::family::Family;

/// Denominator of level `l`: `1 + c t^2 - (a+b) q^l t`.
fn level_denom(a: &MPoly, b: &MPoly, c: &MPoly, l: usize, order: usize) -> TruncSeries {
    let mut coeffs = vec![MPoly::zero(); order + 1];
    coeffs[0] = MPoly::one();
    if order >= 1 {
        coeffs[1] = a.add(b).mul(&MPoly::q_pow(l as u16)).neg();
    }
    if order >= 2 {
        coeffs[2] = c.clone();
    }
    TruncSeries::from_coeffs(coeffs)
}

/// Numerator hanging below level `l`: `t^2 (c - ab q^l)(1 - q^(l+1))`.
fn level_numer(a: &MPoly, b: &MPoly, c: &MPoly, l: usize, order: usize) -> TruncSeries {
    let mut coeffs = vec![MPoly::zero(); order + 1];
    if order >= 2 {
        let factor = c.sub(&a.mul(b).mul(&MPoly::q_pow(l as u16)));
        let one_minus = MPoly::one().sub(&MPoly::q_pow(l as u16 + 1));
        coeffs[2] = factor.mul(&one_minus);
    }
    TruncSeries::from_coeffs(coeffs)
}

/// The parameters `(a, b, c)` used throughout for each family; `c` stays
/// symbolic for the plain Charlier case and `b` for the starred one.
pub fn family_params(family: Family) -> (MPoly, MPoly, MPoly) {
    match family {
        Family::Hermite => (MPoly::zero(), MPoly::zero(), MPoly::one()),
        Family::Charlier => (MPoly::zero(), MPoly::from_int(-1), MPoly::var(Var::C)),
        Family::CharlierStar => (MPoly::from_int(-1), MPoly::var(Var::B), MPoly::zero()),
        Family::Laguerre => (
            MPoly::from_int(-1),
            MPoly::mono(-1, &[(Var::Y, 1), (Var::Q, 1)]),
            MPoly::var(Var::Y),
        ),
    }
}

/// Expansion by bottom-up convergents: levels deeper than `order/2` only
/// contribute past the truncation order, so the tail is cut there.
pub fn k_series_cf(a: &MPoly, b: &MPoly, c: &MPoly, order: usize) -> TruncSeries {
    let depth = order / 2 + 1;
    let mut tail = level_denom(a, b, c, depth, order).invert().expect("unit constant term");
    for l in (0..depth).rev() {
        let denom = level_denom(a, b, c, l, order)
            .sub(&level_numer(a, b, c, l, order).mul(&tail));
        tail = denom.invert().expect("unit constant term");
    }
    tail
}

/// Per-family closed-form series.
///
/// * Hermite: `sum_k (-1)^k q^(k+1 choose 2) t^(2k)`
/// * Charlier: `sum_{i,j<=i} t^(i+j) c^j (-1)^i q^(j+1 choose 2) [i choose j]_q`
/// * Charlier-star: `sum_{i,j<=i} t^i b^j (-1)^(i-j) [i choose j]_q`
/// * Laguerre: `sum_k (-t)^k sum_{i<=k} y^i q^(i(k+1-i))`
pub fn k_series_closed(family: Family, order: usize) -> TruncSeries {
    let mut coeffs = vec![MPoly::zero(); order + 1];
    match family {
        Family::Hermite => {
            let mut k = 0usize;
            while 2 * k <= order {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                coeffs[2 * k] = MPoly::q_pow((k * (k + 1) / 2) as u16).mul_int(sign);
                k += 1;
            }
        }
        Family::Charlier => {
            for i in 0..=order {
                for j in 0..=i.min(order.saturating_sub(i)) {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    let term = q_binomial(i as i64, j as i64)
                        .mul(&MPoly::q_pow((j * (j + 1) / 2) as u16))
                        .mul(&MPoly::mono(sign, &[(Var::C, j as u16)]));
                    coeffs[i + j] += &term;
                }
            }
        }
        Family::CharlierStar => {
            for i in 0..=order {
                for j in 0..=i {
                    let sign = if (i - j) % 2 == 0 { 1 } else { -1 };
                    let term =
                        q_binomial(i as i64, j as i64).mul(&MPoly::mono(sign, &[(Var::B, j as u16)]));
                    coeffs[i] += &term;
                }
            }
        }
        Family::Laguerre => {
            for k in 0..=order {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let mut inner = MPoly::zero();
                for i in 0..=k {
                    inner += &MPoly::mono(1, &[(Var::Y, i as u16), (Var::Q, (i * (k + 1 - i)) as u16)]);
                }
                coeffs[k] = inner.mul_int(sign);
            }
        }
    }
    TruncSeries::from_coeffs(coeffs)
}

/// Expansion through the basic hypergeometric form
///
/// `K(at, bt, ct^2; q) = 1/(1-at) sum_i t^i prod_{j=1..i} (b - c q^j t) / (aqt; q)_i`.
///
/// The product form keeps everything polynomial: the `b^(-1)` of the raw
/// two-parameter series is absorbed into `(bt)^i`, and `b = 0` specialises
/// to the one-parameter branch with no extra code.
pub fn k_series_hypergeometric(a: &MPoly, b: &MPoly, c: &MPoly, order: usize) -> TruncSeries {
    let mut acc = TruncSeries::zero(order);
    // running numerator prod_{j=1..i} (b - c q^j t) and inverse Pochhammer
    let mut numer = TruncSeries::one(order);
    let mut inv_poch = TruncSeries::one(order);
    for i in 0..=order {
        if i > 0 {
            let mut factor = vec![MPoly::zero(); order + 1];
            factor[0] = b.clone();
            if order >= 1 {
                factor[1] = c.mul(&MPoly::q_pow(i as u16)).neg();
            }
            numer = numer.mul(&TruncSeries::from_coeffs(factor));

            let mut poch = vec![MPoly::zero(); order + 1];
            poch[0] = MPoly::one();
            if order >= 1 {
                poch[1] = a.mul(&MPoly::q_pow(i as u16)).neg();
            }
            inv_poch = inv_poch.mul(&TruncSeries::from_coeffs(poch).invert().expect("unit"));
        }
        acc = acc.add(&numer.mul(&inv_poch).shift(i));
    }
    let mut front = vec![MPoly::zero(); order + 1];
    front[0] = MPoly::one();
    if order >= 1 {
        front[1] = a.neg();
    }
    let front_inv = TruncSeries::from_coeffs(front).invert().expect("unit");
    acc.mul(&front_inv)
}

/// Solve the functional equation of the continued fraction by fixed-point
/// iteration.
///
/// Writing `M_l` for the tail of the fraction starting at level `l`, the
/// recursion reads
///
/// `M_l = 1 / (1 + ct^2 - (a+b) q^l t - t^2 (c - ab q^l)(1 - q^(l+1)) M_(l+1))`
///
/// and the map is a `t`-adic contraction (the subtracted product carries
/// `t^2`), so iterating from the constant solution 1 pins two more orders
/// per sweep.  The result is the level-0 series.
pub fn functional_equation_solve(
    a: &MPoly,
    b: &MPoly,
    c: &MPoly,
    order: usize,
) -> Result<TruncSeries> {
    let levels = order / 2 + 2;
    let sweeps = order + 1;
    let mut state = vec![TruncSeries::one(order); levels + 1];
    let sweep = |state: &[TruncSeries]| -> Result<Vec<TruncSeries>> {
        let mut next = state.to_vec();
        for l in 0..levels {
            let denom = level_denom(a, b, c, l, order)
                .sub(&level_numer(a, b, c, l, order).mul(&state[l + 1]));
            next[l] = denom.invert().map_err(|_| Error::NonConvergence)?;
        }
        next[levels] = TruncSeries::one(order);
        Ok(next)
    };
    for _ in 0..sweeps {
        let next = sweep(&state)?;
        let stable = next == state;
        state = next;
        if stable {
            return Ok(state.swap_remove(0));
        }
    }
    // the iterate must be a fixed point of the sweep at this truncation
    if sweep(&state)? == state {
        Ok(state.swap_remove(0))
    } else {
        Err(Error::NonConvergence)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::poly;
    use crate::paths::gf::{gf_paths, EndHeight};
    use crate::paths::systems::WeightSystem;

    #[test]
    fn hermite_series() {
        let (a, b, c) = family_params(Family::Hermite);
        let s = k_series_cf(&a, &b, &c, 6);
        assert_eq!(s.to_poly(), poly("1 - q*t^2 + q^3*t^4 - q^6*t^6"));
        assert_eq!(s, k_series_closed(Family::Hermite, 6));
    }

    #[test]
    fn charlier_series_coefficients() {
        let (a, b, c) = family_params(Family::Charlier);
        let s = k_series_cf(&a, &b, &c, 3);
        assert_eq!(*s.coeff(2), poly("1 - cq"));
        assert_eq!(*s.coeff(3), poly("-1 + cq + cq^2"));
        assert_eq!(s, k_series_closed(Family::Charlier, 3));
    }

    #[test]
    fn charlier_star_series_coefficients() {
        let (a, b, c) = family_params(Family::CharlierStar);
        let s = k_series_closed(Family::CharlierStar, 2);
        assert_eq!(*s.coeff(1), poly("b - 1"));
        assert_eq!(s, k_series_cf(&a, &b, &c, 2));
    }

    #[test]
    fn laguerre_series_coefficients() {
        let (a, b, c) = family_params(Family::Laguerre);
        let s = k_series_cf(&a, &b, &c, 2);
        assert_eq!(*s.coeff(2), poly("1 + yq^2 + y^2q^2"));
        assert_eq!(s, k_series_closed(Family::Laguerre, 2));
    }

    #[test]
    fn order_zero_is_one() {
        for family in Family::ALL {
            let (a, b, c) = family_params(family);
            assert_eq!(k_series_cf(&a, &b, &c, 0), TruncSeries::one(0));
            assert_eq!(k_series_hypergeometric(&a, &b, &c, 0), TruncSeries::one(0));
            assert_eq!(functional_equation_solve(&a, &b, &c, 0).unwrap(), TruncSeries::one(0));
            assert_eq!(k_series_closed(family, 0), TruncSeries::one(0));
        }
    }

    #[test]
    fn four_routes_agree_to_order_ten() {
        for family in Family::ALL {
            let (a, b, c) = family_params(family);
            let cf = k_series_cf(&a, &b, &c, 10);
            assert_eq!(cf, k_series_closed(family, 10), "{family} closed");
            assert_eq!(cf, k_series_hypergeometric(&a, &b, &c, 10), "{family} hypergeometric");
            assert_eq!(cf, functional_equation_solve(&a, &b, &c, 10).unwrap(), "{family} funceq");
        }
    }

    #[test]
    fn coefficients_are_mstar_sums() {
        for family in Family::ALL {
            let (a, b, c) = family_params(family);
            let s = k_series_cf(&a, &b, &c, 6);
            let sys = WeightSystem::mstar(a.clone(), b.clone(), c.clone());
            for k in 0..=6 {
                assert_eq!(
                    *s.coeff(k),
                    gf_paths(&sys, k, EndHeight::At(0)),
                    "{family} k={k}"
                );
            }
        }
    }

    #[test]
    fn symbolic_parameters_agree_across_routes() {
        // fully symbolic a, b, c
        let (a, b, c) = (MPoly::var(Var::A), MPoly::var(Var::B), MPoly::var(Var::C));
        let cf = k_series_cf(&a, &b, &c, 6);
        assert_eq!(cf, functional_equation_solve(&a, &b, &c, 6).unwrap());
        let sys = WeightSystem::mstar(a.clone(), b.clone(), c.clone());
        for k in 0..=6 {
            assert_eq!(*cf.coeff(k), gf_paths(&sys, k, EndHeight::At(0)), "k={k}");
        }
    }
}
