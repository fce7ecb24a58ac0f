//! Sparse exact multivariate polynomials over the fixed variable universe.
//!
//! [`MPoly`] is the universal value type of the crate: coefficients are
//! arbitrary-precision integers, exponent vectors are keys of a `BTreeMap`
//! ordered graded-lexicographically, so equality, rendering and JSON
//! serialisation are all canonical.

use crate::algebra::var::Var;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Exponent vector over the fixed variable universe.
///
/// Ordered by total degree first, ties broken so that earlier variables of
/// [`Var::ALL`] come first; ascending iteration therefore starts at the
/// constant term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; Var::COUNT],
}

impl Monomial {
    /// The empty monomial (all exponents zero).
    pub const ONE: Monomial = Monomial { exps: [0; Var::COUNT] };

    pub fn from_exps(exps: [u16; Var::COUNT]) -> Monomial {
        Monomial { exps }
    }

    pub fn var(v: Var) -> Monomial {
        Monomial::ONE.with_exp(v, 1)
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.exps[v.index()]
    }

    pub fn with_exp(mut self, v: Var, e: u16) -> Monomial {
        self.exps[v.index()] = e;
        self
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Componentwise sum; panics on (absurd) exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; Var::COUNT];
        for i in 0..Var::COUNT {
            exps[i] = self.exps[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        Monomial { exps }
    }

    /// Componentwise difference, or `None` if some exponent would go negative.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = [0u16; Var::COUNT];
        for i in 0..Var::COUNT {
            exps[i] = self.exps[i].checked_sub(other.exps[i])?;
        }
        Some(Monomial { exps })
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, u16)> + '_ {
        Var::ALL.iter().map(move |&v| (v, self.exps[v.index()])).filter(|&(_, e)| e > 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| {
            // At equal degree, a monomial is smaller when it puts more weight
            // on earlier variables: compare exponent vectors from the last
            // variable backwards.
            for i in (0..Var::COUNT).rev() {
                match self.exps[i].cmp(&other.exps[i]) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with `BigInt` coefficients.
///
/// Invariants: no stored coefficient is zero and keys are unique, so two
/// equal polynomials always compare equal structurally.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> MPoly {
        MPoly::from_int(1)
    }

    pub fn from_int(n: i64) -> MPoly {
        MPoly::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> MPoly {
        let mut p = MPoly::zero();
        p.add_term(Monomial::ONE, n);
        p
    }

    pub fn var(v: Var) -> MPoly {
        MPoly::mono(1, &[(v, 1)])
    }

    /// Single term `coeff * prod v^e`.
    pub fn mono(coeff: impl Into<BigInt>, vars: &[(Var, u16)]) -> MPoly {
        let mut m = Monomial::ONE;
        for &(v, e) in vars {
            m = m.with_exp(v, m.exp(v).checked_add(e).expect("exponent overflow"));
        }
        let mut p = MPoly::zero();
        p.add_term(m, coeff.into());
        p
    }

    /// `q^k`, the most common monomial in this crate.
    pub fn q_pow(k: u16) -> MPoly {
        MPoly::mono(1, &[(Var::Q, k)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().map_or(false, |(m, c)| m.is_one() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// The single (monomial, coefficient) pair if this is a nonzero monomial.
    pub fn as_monomial(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> BigInt {
        self.terms.get(&Monomial::ONE).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Value as a plain integer, if the polynomial is constant.
    pub fn as_int(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_int(&self, k: impl Into<BigInt>) -> MPoly {
        let k = k.into();
        if k.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, c)| (*m, c * &k)).collect() }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut out = MPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Replace `v` by the polynomial `value`.
    pub fn substitute(&self, v: Var, value: &MPoly) -> MPoly {
        // Cache powers of the replacement; exponents are small in practice.
        let mut powers: Vec<MPoly> = vec![MPoly::one()];
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul(value);
                powers.push(next);
            }
            let rest = MPoly { terms: BTreeMap::from([(m.with_exp(v, 0), c.clone())]) };
            out = out.add(&rest.mul(&powers[e]));
        }
        out
    }

    /// Substitute an integer for `v`; convenience for `q := 1` style checks.
    pub fn eval_var(&self, v: Var, value: i64) -> MPoly {
        self.substitute(v, &MPoly::from_int(value))
    }

    /// Leading term under the graded-lex order.
    fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Exact division: returns `s` with `self = divisor * s`, or
    /// [`Error::NotDivisible`] if any remainder survives.  A failed exact
    /// division signals a formula or implementation bug, never a fallback.
    pub fn exact_div(&self, divisor: &MPoly) -> Result<MPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (dm, dc) = divisor.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().unwrap();
            let qm = rm.try_div(dm).ok_or(Error::NotDivisible)?;
            if (rc % dc) != BigInt::zero() {
                return Err(Error::NotDivisible);
            }
            let qc = rc / dc;
            let term = MPoly { terms: BTreeMap::from([(qm, qc)]) };
            rem = rem.sub(&term.mul(divisor));
            quot = quot.add(&term);
        }
        Ok(quot)
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, k: u16) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            if m.exp(v) == k {
                out.add_term(m.with_exp(v, 0), c.clone());
            }
        }
        out
    }

    /// Decompose along powers of `v`: the map `e -> coefficient of v^e`.
    pub fn split_by(&self, v: Var) -> BTreeMap<u16, MPoly> {
        let mut out: BTreeMap<u16, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exp(v)).or_insert_with(MPoly::zero).add_term(m.with_exp(v, 0), c.clone());
        }
        out
    }
}

impl From<i64> for MPoly {
    fn from(n: i64) -> MPoly {
        MPoly::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                MPoly::$method(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly::neg(self)
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

// ---------------------------------------------------------------------------
// Rendering and parsing
// ---------------------------------------------------------------------------

fn render_var_part(m: &Monomial, out: &mut String) {
    let mut first = true;
    for (v, e) in m.iter() {
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(v.name());
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

impl fmt::Display for MPoly {
    /// Canonical rendering: terms ascending in the graded-lex order,
    /// e.g. `2 - 3*q + q^3`.  This exact string is the golden-file contract.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    s.push_str(&abs.to_string());
                    s.push('*');
                }
                render_var_part(m, &mut s);
            }
        }
        f.write_str(&s)
    }
}

struct Scanner<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner { chars: s.chars().peekable() }
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(ch) if ch.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.next()
    }

    fn number(&mut self) -> Result<BigInt> {
        let mut digits = String::new();
        while matches!(self.chars.peek(), Some(ch) if ch.is_ascii_digit()) {
            digits.push(self.chars.next().unwrap());
        }
        digits.parse::<BigInt>().map_err(|_| Error::Parse("expected integer".into()))
    }
}

impl FromStr for MPoly {
    type Err = Error;

    /// Parse a linear combination of monomials, e.g. `2 - 3*q + q^3`,
    /// `1 + y - y*q`, or the juxtaposed form `yq^2`.  No parentheses.
    fn from_str(s: &str) -> Result<MPoly> {
        let mut sc = Scanner::new(s);
        let mut out = MPoly::zero();
        let mut first = true;
        loop {
            let sign = match sc.peek() {
                None if first => return Err(Error::Parse("empty polynomial".into())),
                None => break,
                Some('+') => {
                    sc.bump();
                    1
                }
                Some('-') => {
                    sc.bump();
                    -1
                }
                Some(_) if first => 1,
                Some(ch) => return Err(Error::Parse(format!("unexpected {ch:?}"))),
            };
            first = false;
            // term: [integer] [*] (var [^exp])*
            let mut coeff = BigInt::from(sign);
            let mut m = Monomial::ONE;
            let mut saw_anything = false;
            if matches!(sc.peek(), Some(ch) if ch.is_ascii_digit()) {
                coeff *= sc.number()?;
                saw_anything = true;
            }
            loop {
                match sc.peek() {
                    Some('*') => {
                        sc.bump();
                    }
                    _ => {}
                }
                match sc.peek() {
                    Some(ch) if Var::from_char(ch).is_some() => {
                        sc.bump();
                        let v = Var::from_char(ch).unwrap();
                        let e = if sc.peek() == Some('^') {
                            sc.bump();
                            let n = sc.number()?;
                            u16::try_from(n).map_err(|_| Error::Parse("exponent too large".into()))?
                        } else {
                            1
                        };
                        m = m.with_exp(v, m.exp(v).checked_add(e).ok_or_else(|| Error::Parse("exponent overflow".into()))?);
                        saw_anything = true;
                    }
                    _ => break,
                }
            }
            if !saw_anything {
                return Err(Error::Parse("expected a term".into()));
            }
            out.add_term(m, coeff);
        }
        Ok(out)
    }
}

/// Shorthand used pervasively in tests: parse or panic.
pub fn poly(s: &str) -> MPoly {
    s.parse().unwrap_or_else(|e| panic!("bad polynomial literal {s:?}: {e}"))
}

// ---------------------------------------------------------------------------
// JSON representation
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    exps: BTreeMap<String, u16>,
}

#[derive(Serialize, Deserialize)]
struct MPolyRepr {
    terms: Vec<TermRepr>,
}

impl Serialize for MPoly {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| TermRepr {
                coeff: c.to_string(),
                exps: m.iter().map(|(v, e)| (v.name().to_string(), e)).collect(),
            })
            .collect();
        MPolyRepr { terms }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<MPoly, D::Error> {
        use serde::de::Error as _;
        let repr = MPolyRepr::deserialize(de)?;
        let mut out = MPoly::zero();
        for term in repr.terms {
            let coeff: BigInt =
                term.coeff.parse().map_err(|_| D::Error::custom("bad coefficient"))?;
            let mut m = Monomial::ONE;
            for (name, e) in term.exps {
                let v = Var::from_name(&name).map_err(|e| D::Error::custom(e.to_string()))?;
                m = m.with_exp(v, e);
            }
            out.add_term(m, coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let p = poly("1 - q").mul(&poly("1 + q"));
        assert_eq!(p, poly("1 - q^2"));
    }

    #[test]
    fn expand_product() {
        // (2 + q)(1 - q)^2 = 2 - 3q + q^3, expanded by hand
        let p = poly("2 + q").mul(&poly("1 - q").pow(2));
        assert_eq!(p, poly("2 - 3*q + q^3"));
        assert_eq!(p.to_string(), "2 - 3*q + q^3");
    }

    #[test]
    fn substitute_evaluates() {
        let p = poly("1 + 3*y + y^2");
        assert_eq!(p.eval_var(Var::Y, 1), MPoly::from_int(5));
    }

    #[test]
    fn exact_div_examples() {
        let p = poly("2 - 3*q + q^3");
        assert_eq!(p.exact_div(&poly("1 - q").pow(2)).unwrap(), poly("2 + q"));
        assert_eq!(p.exact_div(&MPoly::one()).unwrap(), p);
        assert_eq!(poly("1 - q^2").exact_div(&poly("1 + q")).unwrap(), poly("1 - q"));
    }

    #[test]
    fn exact_div_detects_remainders() {
        assert!(matches!(poly("1 + q").exact_div(&poly("1 - q")), Err(Error::NotDivisible)));
        assert!(matches!(poly("q").exact_div(&poly("2")), Err(Error::NotDivisible)));
        assert!(matches!(poly("q").exact_div(&MPoly::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(MPoly::zero().to_string(), "0");
        assert_eq!(poly("-q + 1").to_string(), "1 - q");
        assert_eq!(poly("y*q^2 + q*y^2").to_string(), "q^2*y + q*y^2");
        assert_eq!(poly("-2*y").to_string(), "-2*y");
    }

    #[test]
    fn parse_juxtaposed_monomials() {
        assert_eq!(poly("yq^2"), MPoly::mono(1, &[(Var::Y, 1), (Var::Q, 2)]));
        assert_eq!(poly("2yq"), MPoly::mono(2, &[(Var::Y, 1), (Var::Q, 1)]));
        assert!("q+".parse::<MPoly>().is_err());
    }

    #[test]
    fn json_roundtrip() {
        let p = poly("2 - 3*q + q^3*y");
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.contains("\"coeff\":\"-3\""));
        let back: MPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
