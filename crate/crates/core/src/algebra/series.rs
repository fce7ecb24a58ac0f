//! Formal power series in `t`, truncated at a stated order.

use crate::algebra::mpoly::MPoly;
use crate::algebra::var::Var;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;
use std::fmt;

/// Truncated power series in `t` with polynomial coefficients.
///
/// `coeffs[i]` is the coefficient of `t^i`; none of them may mention `t`
/// itself.  All arithmetic silently truncates at the smaller order of the
/// operands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<MPoly>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> TruncSeries {
        TruncSeries { coeffs: vec![MPoly::zero(); order + 1] }
    }

    pub fn one(order: usize) -> TruncSeries {
        let mut s = TruncSeries::zero(order);
        s.coeffs[0] = MPoly::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<MPoly>) -> TruncSeries {
        assert!(!coeffs.is_empty(), "a series stores at least the constant term");
        for c in &coeffs {
            assert!(!c.contains_var(Var::T), "series coefficients must not mention t");
        }
        TruncSeries { coeffs }
    }

    /// Split a polynomial (which may mention `t`) into a truncated series.
    pub fn from_poly(p: &MPoly, order: usize) -> TruncSeries {
        let mut s = TruncSeries::zero(order);
        for (e, part) in p.split_by(Var::T) {
            if (e as usize) <= order {
                s.coeffs[e as usize] = part;
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &MPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    /// Re-truncate to a (smaller or larger) order; new coefficients are zero.
    pub fn truncate(&self, order: usize) -> TruncSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, MPoly::zero());
        coeffs.truncate(order + 1);
        TruncSeries { coeffs }
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        let order = self.order().min(other.order());
        let mut out = TruncSeries::zero(order);
        for i in 0..=order {
            out.coeffs[i] = self.coeffs[i].add(&other.coeffs[i]);
        }
        out
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        let order = self.order().min(other.order());
        let mut out = TruncSeries::zero(order);
        for i in 0..=order {
            out.coeffs[i] = self.coeffs[i].sub(&other.coeffs[i]);
        }
        out
    }

    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let order = self.order().min(other.order());
        let mut out = TruncSeries::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let prod = self.coeffs[i].mul(&other.coeffs[j]);
                out.coeffs[i + j] += &prod;
            }
        }
        out
    }

    /// Multiply by the scalar polynomial `p` (no `t` allowed in `p`).
    pub fn scale(&self, p: &MPoly) -> TruncSeries {
        assert!(!p.contains_var(Var::T));
        TruncSeries { coeffs: self.coeffs.iter().map(|c| c.mul(p)).collect() }
    }

    /// Multiply by `t^k`, dropping coefficients past the order.
    pub fn shift(&self, k: usize) -> TruncSeries {
        let mut out = TruncSeries::zero(self.order());
        for i in 0..=self.order() {
            if i + k > self.order() {
                break;
            }
            out.coeffs[i + k] = self.coeffs[i].clone();
        }
        out
    }

    /// Multiplicative inverse; requires the constant term to be exactly
    /// `1` or `-1`, so the inverse stays in the polynomial ring.
    pub fn invert(&self) -> Result<TruncSeries> {
        let c0 = &self.coeffs[0];
        let unit: BigInt = match c0.as_int() {
            Some(n) if n == BigInt::one() || n == -BigInt::one() => n,
            _ => return Err(Error::NotInvertible),
        };
        let order = self.order();
        let mut inv = TruncSeries::zero(order);
        inv.coeffs[0] = MPoly::from_bigint(unit.clone());
        for k in 1..=order {
            // unit * v_k = -(sum_{i=1..k} u_i v_{k-i})
            let mut acc = MPoly::zero();
            for i in 1..=k {
                acc += &self.coeffs[i].mul(&inv.coeffs[k - i]);
            }
            inv.coeffs[k] = acc.neg().mul(&MPoly::from_bigint(unit.clone()));
        }
        Ok(inv)
    }

    /// Substitute `t := q^m t`.
    pub fn compose_scale(&self, m: u16) -> TruncSeries {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let e = (m as u32 * i as u32).try_into().expect("exponent overflow");
                c.mul(&MPoly::q_pow(e))
            })
            .collect();
        TruncSeries { coeffs }
    }

    /// Reassemble into a single polynomial `sum_k coeff_k t^k`.
    pub fn to_poly(&self) -> MPoly {
        let mut out = MPoly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            out += &c.mul(&MPoly::mono(1, &[(Var::T, i as u16)]));
        }
        out
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(t^{})", self.to_poly(), self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::poly;

    #[test]
    fn invert_geometric() {
        // 1/(1 - a t) = 1 + a t + a^2 t^2 + ...
        let s = TruncSeries::from_poly(&poly("1 - a*t"), 2);
        assert_eq!(s.invert().unwrap().to_poly(), poly("1 + a*t + a^2*t^2"));
    }

    #[test]
    fn mul_truncates() {
        let u = TruncSeries::from_poly(&poly("1 + t"), 2);
        let v = TruncSeries::from_poly(&poly("1 - t"), 2);
        assert_eq!(u.mul(&v).to_poly(), poly("1 - t^2"));
    }

    #[test]
    fn compose_scale_substitutes() {
        let s = TruncSeries::from_poly(&poly("1 + t + t^2"), 2);
        assert_eq!(s.compose_scale(1).to_poly(), poly("1 + q*t + q^2*t^2"));
    }

    #[test]
    fn invert_requires_unit_constant() {
        let s = TruncSeries::from_poly(&poly("2 + t"), 3);
        assert!(matches!(s.invert(), Err(Error::NotInvertible)));
        let s = TruncSeries::from_poly(&poly("-1 + t"), 3);
        let inv = s.invert().unwrap();
        assert_eq!(s.mul(&inv), TruncSeries::one(3));
    }

    #[test]
    fn invert_is_two_sided() {
        let s = TruncSeries::from_poly(&poly("1 + y*t + c*t^2 - t^3"), 6);
        let inv = s.invert().unwrap();
        assert_eq!(s.mul(&inv), TruncSeries::one(6));
        assert_eq!(inv.mul(&s), TruncSeries::one(6));
    }
}
