//! Named verification suites: every identity in the crate, run as
//! pass/fail cases with counterexample reporting.
//!
//! Suites are built as ordered lists of independent cases and executed in
//! parallel; results keep construction order, so reports are byte-stable
//! regardless of worker count.

use crate::algebra::mpoly::MPoly;
use crate::algebra::var::Var;
use crate::decomp::cfrac2::{cfrac2_involution, is_mstar_member};
use crate::decomp::coreword::{enumerate_core_words, fixed_point_sum};
use crate::decomp::penaud::{penaud_merge, penaud_split};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::formulas;
use crate::inverse::{forward_triangle, inverse_triangle, InversePair};
use crate::kseries;
use crate::objects::{brute_gf, matchings, permutations, set_partitions, CombObject};
use crate::ortho::ortho_check;
use crate::paths::gf::{enumerate_paths, gf_paths, EndHeight};
use crate::paths::histoire::{histoire_of, object_of, statistic_monomial};
use crate::paths::systems::{MParams, WeightSystem};
use rayon::prelude::*;
use serde::Serialize;

/// A verification suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Closed forms equal brute-force enumeration.
    Theorems,
    /// Histoire roundtrips, weight preservation, moment identities.
    Bijections,
    /// Prefix/core split, its generating-function factorisation, and the
    /// four-step cancellation.
    Decomposition,
    /// The four series routes agree and match exhaustive path sums.
    Series,
    /// Triangle transform pairs, Schroeder values, sequence mapping.
    Inverse,
    /// Orthogonality against the moment functionals.
    Orthogonality,
    /// The two three-term recurrences satisfied by the prefix counts.
    PrefixRecurrences,
    /// Everything above.
    All,
}

impl Suite {
    pub const ALL_NAMED: [Suite; 7] = [
        Suite::Theorems,
        Suite::Bijections,
        Suite::Decomposition,
        Suite::Series,
        Suite::Inverse,
        Suite::Orthogonality,
        Suite::PrefixRecurrences,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorems => "theorems",
            Suite::Bijections => "bijections",
            Suite::Decomposition => "decomposition",
            Suite::Series => "series",
            Suite::Inverse => "inverse",
            Suite::Orthogonality => "orthogonality",
            Suite::PrefixRecurrences => "appendixC",
            Suite::All => "all",
        }
    }

    pub fn from_name(s: &str) -> Result<Suite> {
        match s {
            "theorems" => Ok(Suite::Theorems),
            "bijections" => Ok(Suite::Bijections),
            "decomposition" => Ok(Suite::Decomposition),
            "series" => Ok(Suite::Series),
            "inverse" => Ok(Suite::Inverse),
            "orthogonality" => Ok(Suite::Orthogonality),
            "appendixC" | "prefix-recurrences" => Ok(Suite::PrefixRecurrences),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite {s:?}"))),
        }
    }
}

/// Outcome of one case.
#[derive(Debug, Clone, Serialize)]
pub struct CaseResult {
    pub id: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Outcome of a suite run.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub max_n: usize,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<CaseResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

type Case = (String, Box<dyn Fn() -> std::result::Result<(), String> + Send + Sync>);

fn case(
    id: impl Into<String>,
    f: impl Fn() -> std::result::Result<(), String> + Send + Sync + 'static,
) -> Case {
    (id.into(), Box::new(f))
}

fn expect_eq(lhs: &MPoly, rhs: &MPoly, what: impl Into<String>) -> std::result::Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{}: {} != {}", what.into(), lhs, rhs))
    }
}

/// Run a suite; `max_n` scales every sweep, clamped to each route's guard.
pub fn run_suite(suite: Suite, max_n: usize, timings: bool) -> Report {
    let start = std::time::Instant::now();
    let cases = collect_cases(suite, max_n);
    let results: Vec<CaseResult> = cases
        .into_par_iter()
        .map(|(id, f)| match f() {
            Ok(()) => CaseResult { id, pass: true, detail: None },
            Err(detail) => CaseResult { id, pass: false, detail: Some(detail) },
        })
        .collect();
    let passed = results.iter().filter(|r| r.pass).count();
    let failed = results.len() - passed;
    Report {
        suite: suite.name().to_string(),
        max_n,
        passed,
        failed,
        cases: results,
        elapsed_ms: timings.then(|| start.elapsed().as_millis()),
    }
}

fn collect_cases(suite: Suite, max_n: usize) -> Vec<Case> {
    match suite {
        Suite::Theorems => theorems_cases(max_n),
        Suite::Bijections => bijections_cases(max_n),
        Suite::Decomposition => decomposition_cases(max_n),
        Suite::Series => series_cases(max_n),
        Suite::Inverse => inverse_cases(max_n),
        Suite::Orthogonality => orthogonality_cases(max_n),
        Suite::PrefixRecurrences => prefix_recurrence_cases(max_n),
        Suite::All => {
            let mut out = Vec::new();
            for s in Suite::ALL_NAMED {
                out.extend(collect_cases(s, max_n));
            }
            out
        }
    }
}

/// Brute-force guards per family (ground-set sizes beyond which exhaustive
/// enumeration is refused without an explicit override).
pub fn brute_guard(family: Family) -> usize {
    match family {
        Family::Hermite => 8,
        Family::Charlier | Family::CharlierStar => 11,
        Family::Laguerre => 9,
    }
}

fn theorems_cases(max_n: usize) -> Vec<Case> {
    let mut cases = Vec::new();
    for family in Family::ALL {
        for n in 1..=max_n.min(brute_guard(family)) {
            match family {
                Family::Hermite => cases.push(case(format!("theorems/touchard/n={n}"), move || {
                    let formula = formulas::touchard_riordan(n).map_err(|e| e.to_string())?;
                    expect_eq(&formula, &brute_gf(Family::Hermite, n), format!("n={n}"))
                })),
                Family::Charlier => {
                    cases.push(case(format!("theorems/charlier/n={n}"), move || {
                        let brute = brute_gf(Family::Charlier, n);
                        for k in 0..=n {
                            let formula =
                                formulas::charlier_crossings(n, k).map_err(|e| e.to_string())?;
                            expect_eq(&formula, &brute.coeff_of(Var::Y, k as u16), format!("n={n} k={k}"))?;
                        }
                        Ok(())
                    }))
                }
                Family::CharlierStar => {
                    cases.push(case(format!("theorems/charlier-star/n={n}"), move || {
                        let brute = brute_gf(Family::CharlierStar, n);
                        for k in 0..=n {
                            let formula = formulas::charlier_star(n, k).map_err(|e| e.to_string())?;
                            let coeff = brute.coeff_of(Var::Y, k as u16);
                            expect_eq(&formula, &coeff, format!("n={n} k={k}"))?;
                            expect_eq(&formula, &formulas::q_stirling(n, k), format!("q-Stirling n={n} k={k}"))?;
                        }
                        Ok(())
                    }))
                }
                Family::Laguerre => cases.push(case(format!("theorems/laguerre/n={n}"), move || {
                    let formula = formulas::laguerre_moment(n).map_err(|e| e.to_string())?;
                    expect_eq(&formula, &brute_gf(Family::Laguerre, n), format!("n={n}"))
                })),
            }
        }
    }
    // moment reconstruction through the decomposition:
    // sum_k gf(P_{len,k}) [t^k] K = (1-q)^n * moment
    for family in Family::ALL {
        for n in 1..=max_n.min(brute_guard(family)).min(8) {
            cases.push(case(format!("theorems/reconstruction/{family}/n={n}"), move || {
                let params = MParams::specialization(family);
                let len = if family == Family::Hermite { 2 * n } else { n };
                let series = kseries::k_series_closed(family, len);
                let mut total = MPoly::zero();
                for k in 0..=len {
                    let pref = gf_paths(
                        &WeightSystem::Prefix { c: params.c.clone(), d: params.d.clone() },
                        len,
                        EndHeight::At(k),
                    );
                    // substitute the family's parameter values for the
                    // symbolic c / b of the closed series
                    let coeff = series
                        .coeff(k)
                        .substitute(Var::C, &params.c)
                        .substitute(Var::B, &params.b);
                    total += &pref.mul(&coeff);
                }
                let prefactor = MPoly::one().sub(&MPoly::q_pow(1)).pow(n as u32);
                let rhs = prefactor.mul(&brute_gf(family, n));
                expect_eq(&total, &rhs, format!("{family} n={n}"))
            }));
        }
    }
    cases
}

fn bijections_cases(max_n: usize) -> Vec<Case> {
    let mut cases = Vec::new();
    let objects_for = |family: Family, n: usize| -> Vec<CombObject> {
        match family {
            Family::Hermite => matchings(2 * n).into_iter().map(CombObject::Matching).collect(),
            Family::Charlier | Family::CharlierStar => {
                set_partitions(n).into_iter().map(CombObject::SetPartition).collect()
            }
            Family::Laguerre => permutations(n).into_iter().map(CombObject::Permutation).collect(),
        }
    };
    for family in Family::ALL {
        let roundtrip_max = max_n.min(if family == Family::Hermite { 6 } else { 7 });
        for n in 0..=roundtrip_max {
            cases.push(case(format!("bijections/roundtrip/{family}/n={n}"), move || {
                for obj in objects_for(family, n) {
                    let h = histoire_of(family, &obj).map_err(|e| e.to_string())?;
                    let weight = h.weight();
                    let statistic = statistic_monomial(family, &obj).map_err(|e| e.to_string())?;
                    expect_eq(&weight, &statistic, format!("weight of {obj}"))?;
                    let back = object_of(family, &h).map_err(|e| e.to_string())?;
                    if back != obj {
                        return Err(format!("roundtrip of {obj} returned {back}"));
                    }
                }
                Ok(())
            }));
        }
        let moment_max = max_n.min(if family == Family::Laguerre { 6 } else { 8 }).min(brute_guard(family));
        for n in 0..=moment_max {
            cases.push(case(format!("bijections/moments/{family}/n={n}"), move || {
                let len = if family == Family::Hermite { 2 * n } else { n };
                let paths = gf_paths(&WeightSystem::Histoire(family), len, EndHeight::At(0));
                expect_eq(&paths, &brute_gf(family, n), format!("{family} n={n}"))
            }));
        }
        for n in 0..=max_n.min(7) {
            cases.push(case(format!("bijections/specialization/{family}/n={n}"), move || {
                if crate::paths::histoire::check_specialization(family, n) {
                    Ok(())
                } else {
                    Err(format!("specialised path sum differs from (1-q)^n * moment at n={n}"))
                }
            }));
        }
    }
    cases
}

fn decomposition_cases(max_n: usize) -> Vec<Case> {
    let mut cases = Vec::new();
    // split/merge roundtrip on exhaustive path sets, each specialisation
    for family in Family::ALL {
        for n in 0..=max_n.min(7) {
            cases.push(case(format!("decomposition/split-merge/{family}/n={n}"), move || {
                let params = MParams::specialization(family);
                let sys = WeightSystem::M(params.clone());
                for p in enumerate_paths(&sys, n, EndHeight::At(0)).map_err(|e| e.to_string())? {
                    let (prefix, core) = penaud_split(&p, &params).map_err(|e| e.to_string())?;
                    expect_eq(
                        &prefix.weight().mul(&core.weight()),
                        &p.weight(),
                        format!("weight multiplicativity of {p}"),
                    )?;
                    let merged = penaud_merge(&prefix, &core, &params).map_err(|e| e.to_string())?;
                    if merged != p {
                        return Err(format!("merge(split({p})) = {merged}"));
                    }
                }
                Ok(())
            }));
        }
    }
    // symbolic roundtrip
    for n in 0..=max_n.min(5) {
        cases.push(case(format!("decomposition/split-merge/symbolic/n={n}"), move || {
            let params = MParams::symbolic();
            let sys = WeightSystem::M(params.clone());
            for p in enumerate_paths(&sys, n, EndHeight::At(0)).map_err(|e| e.to_string())? {
                let (prefix, core) = penaud_split(&p, &params).map_err(|e| e.to_string())?;
                let merged = penaud_merge(&prefix, &core, &params).map_err(|e| e.to_string())?;
                if merged != p {
                    return Err(format!("merge(split({p})) = {merged}"));
                }
            }
            Ok(())
        }));
    }
    // gf factorisation, symbolic
    for n in 0..=max_n.min(8) {
        cases.push(case(format!("decomposition/gf-factorization/n={n}"), move || {
            let params = MParams::symbolic();
            let lhs = gf_paths(&WeightSystem::M(params.clone()), n, EndHeight::At(0));
            let mut rhs = MPoly::zero();
            for k in 0..=n {
                let pref = gf_paths(
                    &WeightSystem::Prefix { c: params.c.clone(), d: params.d.clone() },
                    n,
                    EndHeight::At(k),
                );
                rhs += &pref.mul(&gf_paths(&WeightSystem::MStar(params.clone()), k, EndHeight::At(0)));
            }
            expect_eq(&lhs, &rhs, format!("n={n}"))
        }));
    }
    // four-step involution: pairing, cancellation, aggregate
    for k in 0..=max_n.min(8) {
        cases.push(case(format!("decomposition/four-step/k={k}"), move || {
            let params = MParams::symbolic();
            let sys = WeightSystem::FourStep(params.clone());
            let mut total = MPoly::zero();
            for p in enumerate_paths(&sys, k, EndHeight::At(0)).map_err(|e| e.to_string())? {
                let image = cfrac2_involution(&p, &params);
                if cfrac2_involution(&image, &params) != p {
                    return Err(format!("involution not self-inverse at {p}"));
                }
                if image == p {
                    if !is_mstar_member(&p, &params) {
                        return Err(format!("fixed point {p} is not peak- and dlevel-free"));
                    }
                } else if !p.weight().add(&image.weight()).is_zero() {
                    return Err(format!("weights of {p} and {image} do not cancel"));
                }
                total += &p.weight();
            }
            let mstar = gf_paths(&WeightSystem::MStar(params.clone()), k, EndHeight::At(0));
            expect_eq(&total, &mstar, format!("aggregate k={k}"))
        }));
    }
    // core-word involution
    let jk_max = max_n.min(10);
    for j in 0..=jk_max {
        for k in j..=jk_max.saturating_sub(j).max(j) {
            if j + k > jk_max {
                continue;
            }
            cases.push(case(format!("decomposition/core-word/j={j},k={k}"), move || {
                let mut fixed = MPoly::zero();
                for c in enumerate_core_words(j, k) {
                    let image = c.theta().map_err(|e| e.to_string())?;
                    let back = image.theta().map_err(|e| e.to_string())?;
                    if back != c {
                        return Err(format!("theta^2 != id at {c}"));
                    }
                    if image == c {
                        fixed += &c.weight();
                    } else if !c.weight().add(&image.weight()).is_zero() {
                        return Err(format!("weights of {c} and {image} do not cancel"));
                    }
                }
                expect_eq(&fixed, &fixed_point_sum(j, k), format!("fixed-point sum j={j} k={k}"))
            }));
        }
    }
    cases
}

fn series_cases(max_n: usize) -> Vec<Case> {
    let mut cases = Vec::new();
    let order = max_n;
    for family in Family::ALL {
        cases.push(case(format!("series/routes/{family}/order={order}"), move || {
            let (a, b, c) = kseries::family_params(family);
            let cf = kseries::k_series_cf(&a, &b, &c, order);
            let closed = kseries::k_series_closed(family, order);
            let hyper = kseries::k_series_hypergeometric(&a, &b, &c, order);
            let func = kseries::functional_equation_solve(&a, &b, &c, order)
                .map_err(|e| e.to_string())?;
            for k in 0..=order {
                expect_eq(cf.coeff(k), closed.coeff(k), format!("cf vs closed at t^{k}"))?;
                expect_eq(cf.coeff(k), hyper.coeff(k), format!("cf vs hypergeometric at t^{k}"))?;
                expect_eq(cf.coeff(k), func.coeff(k), format!("cf vs functional equation at t^{k}"))?;
            }
            Ok(())
        }));
        for k in 0..=order.min(8) {
            cases.push(case(format!("series/coefficients/{family}/k={k}"), move || {
                let (a, b, c) = kseries::family_params(family);
                let cf = kseries::k_series_cf(&a, &b, &c, k);
                let mut total = MPoly::zero();
                let sys = WeightSystem::mstar(a.clone(), b.clone(), c.clone());
                for p in enumerate_paths(&sys, k, EndHeight::At(0)).map_err(|e| e.to_string())? {
                    total += &p.weight();
                }
                expect_eq(cf.coeff(k), &total, format!("{family} [t^{k}]"))
            }));
        }
    }
    cases
}

fn inverse_cases(max_n: usize) -> Vec<Case> {
    let mut cases = Vec::new();
    let size = max_n.max(2).min(12);
    for pair in [InversePair::Touchard, InversePair::Laguerre] {
        cases.push(case(format!("inverse/triangle/{pair:?}/size={size}"), move || {
            let f = forward_triangle(pair, size);
            let i = inverse_triangle(pair, size);
            if !f.mul(&i).is_identity() {
                return Err(format!("{pair:?}: forward * inverse != identity"));
            }
            if !i.mul(&f).is_identity() {
                return Err(format!("{pair:?}: inverse * forward != identity"));
            }
            Ok(())
        }));
    }
    for n in 0..=max_n.min(8) {
        cases.push(case(format!("inverse/schroeder/n={n}"), move || {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let expected = MPoly::q_pow((n * (n + 1) / 2) as u16).mul_int(sign);
            expect_eq(&formulas::schroeder_b(n), &expected, format!("n={n}"))
        }));
    }
    // the Laguerre pair maps the specialised moment path sums to the
    // reduced core sums
    let n_max = max_n.min(6);
    cases.push(case(format!("inverse/laguerre-map/n<={n_max}"), move || {
        let params = MParams::specialization(Family::Laguerre);
        let seq: Vec<MPoly> = (0..=n_max)
            .map(|k| gf_paths(&WeightSystem::M(params.clone()), k, EndHeight::At(0)))
            .collect();
        let b = crate::inverse::inverse_pair_apply(
            InversePair::Laguerre,
            crate::inverse::Direction::Inverse,
            &seq,
        );
        for (n, value) in b.iter().enumerate() {
            let expected = gf_paths(&WeightSystem::MStar(params.clone()), n, EndHeight::At(0));
            expect_eq(value, &expected, format!("b_{n}"))?;
        }
        Ok(())
    }));
    // same structure for the matchings pair, on the even subsequence
    let t_max = max_n.min(8);
    cases.push(case(format!("inverse/touchard-map/n<={t_max}"), move || {
        let params = MParams::specialization(Family::Hermite);
        let seq: Vec<MPoly> = (0..=t_max)
            .map(|k| gf_paths(&WeightSystem::M(params.clone()), k, EndHeight::At(0)))
            .collect();
        let b = crate::inverse::inverse_pair_apply(
            InversePair::Touchard,
            crate::inverse::Direction::Inverse,
            &seq,
        );
        for (n, value) in b.iter().enumerate() {
            let expected = if n % 2 == 0 {
                let m = n / 2;
                let sign = if m % 2 == 0 { 1 } else { -1 };
                MPoly::q_pow((m * (m + 1) / 2) as u16).mul_int(sign)
            } else {
                MPoly::zero()
            };
            expect_eq(value, &expected, format!("b_{n}"))?;
        }
        Ok(())
    }));
    cases
}

fn orthogonality_cases(max_n: usize) -> Vec<Case> {
    let n_max = max_n.min(6);
    Family::ALL
        .iter()
        .map(|&family| {
            case(format!("orthogonality/{family}/N={n_max}"), move || {
                if ortho_check(family, n_max) {
                    Ok(())
                } else {
                    Err(format!("{family}: L(P_i P_j) mismatch for some i, j <= {n_max}"))
                }
            })
        })
        .collect()
}

fn prefix_recurrence_cases(max_n: usize) -> Vec<Case> {
    let mut cases = Vec::new();
    // recurrence in n, k fixed:
    // (4c - d^2)(n+1)(n+2) p_n + d(n+2)(2n+5) p_(n+1) - (n+2-k)(n+4+k) p_(n+2) = 0
    for k in 0..=max_n {
        cases.push(case(format!("appendixC/p-recurrence/k={k}"), move || {
            let c = MPoly::var(Var::C);
            let d = MPoly::var(Var::D);
            let lead = c.mul_int(4).sub(&d.mul(&d));
            for n in 0..=max_n {
                let p0 = formulas::prefix_count_trinomial(n, k).map_err(|e| e.to_string())?;
                let p1 = formulas::prefix_count_trinomial(n + 1, k).map_err(|e| e.to_string())?;
                let p2 = formulas::prefix_count_trinomial(n + 2, k).map_err(|e| e.to_string())?;
                let (n_i, k_i) = (n as i64, k as i64);
                let total = lead
                    .mul(&p0)
                    .mul_int((n_i + 1) * (n_i + 2))
                    .add(&d.mul(&p1).mul_int((n_i + 2) * (2 * n_i + 5)))
                    .sub(&p2.mul_int((n_i + 2 - k_i) * (n_i + 4 + k_i)));
                if !total.is_zero() {
                    return Err(format!("n={n} k={k}: residue {total}"));
                }
            }
            Ok(())
        }));
    }
    // recurrence in k, n fixed:
    // (k+3)(k-n) q_k + d(k+1)(k+3) q_(k+1) + c(k+1)(k+n+4) q_(k+2) = 0
    for n in 0..=max_n {
        cases.push(case(format!("appendixC/q-recurrence/n={n}"), move || {
            let c = MPoly::var(Var::C);
            let d = MPoly::var(Var::D);
            for k in 0..=max_n {
                let q0 = formulas::prefix_count_trinomial(n, k).map_err(|e| e.to_string())?;
                let q1 = formulas::prefix_count_trinomial(n, k + 1).map_err(|e| e.to_string())?;
                let q2 = formulas::prefix_count_trinomial(n, k + 2).map_err(|e| e.to_string())?;
                let (n_i, k_i) = (n as i64, k as i64);
                let total = q0
                    .mul_int((k_i + 3) * (k_i - n_i))
                    .add(&d.mul(&q1).mul_int((k_i + 1) * (k_i + 3)))
                    .add(&c.mul(&q2).mul_int((k_i + 1) * (k_i + n_i + 4)));
                if !total.is_zero() {
                    return Err(format!("n={n} k={k}: residue {total}"));
                }
            }
            Ok(())
        }));
    }
    // boundary: p_n = 1 when k = n
    cases.push(case("appendixC/boundary/k=n", move || {
        for n in 0..=max_n {
            let p = formulas::prefix_count_trinomial(n, n).map_err(|e| e.to_string())?;
            expect_eq(&p, &MPoly::one(), format!("n={n}"))?;
        }
        Ok(())
    }));
    cases
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL_NAMED {
            assert_eq!(Suite::from_name(s.name()).unwrap(), s);
        }
        assert_eq!(Suite::from_name("all").unwrap(), Suite::All);
        assert!(Suite::from_name("bogus").is_err());
    }

    #[test]
    fn small_suites_pass() {
        for s in [Suite::Theorems, Suite::Series, Suite::Inverse, Suite::PrefixRecurrences] {
            let report = run_suite(s, 3, false);
            assert!(report.all_passed(), "{:?}: {:?}", s, report.cases.iter().find(|c| !c.pass));
            assert!(report.elapsed_ms.is_none());
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite(Suite::Theorems, 4, false);
        let b = run_suite(Suite::Theorems, 4, false);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
