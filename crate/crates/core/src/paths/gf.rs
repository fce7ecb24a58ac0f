//! Weighted path sums by dynamic programming over heights, and exhaustive
//! path enumeration for the oracle side of every identity.

use crate::algebra::mpoly::MPoly;
use crate::error::{Error, Result};
use crate::paths::systems::WeightSystem;
use crate::paths::{Step, StepDir, WeightedPath};

/// Where a path must end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndHeight {
    Any,
    At(usize),
}

impl EndHeight {
    fn matches(self, h: usize) -> bool {
        match self {
            EndHeight::Any => true,
            EndHeight::At(k) => h == k,
        }
    }
}

/// Sum of `weight(p)` over all admissible paths of the system with the
/// given length (in units) and end height.
///
/// The DP state is `(position, height, up-flag)`, where the flag records
/// whether the previous step was an up of weight 1; it implements the peak
/// prohibition of the `M*` family with one step of look-back.
pub fn gf_paths(system: &WeightSystem, len: usize, end: EndHeight) -> MPoly {
    let forbids = system.forbids_plain_peak();
    let hmax = len;
    // dp[h][flag]
    let zero = || vec![[MPoly::zero(), MPoly::zero()]; hmax + 1];
    let mut layers: Vec<Vec<[MPoly; 2]>> = vec![zero(); len + 1];
    layers[0][0][0] = MPoly::one();

    for pos in 0..len {
        for h in 0..=pos.min(hmax) {
            for flag in 0..2 {
                if layers[pos][h][flag].is_zero() {
                    continue;
                }
                let cur = layers[pos][h][flag].clone();
                for e in system.entries(StepDir::Up, h) {
                    let nf = usize::from(forbids && e.plain);
                    let add = cur.mul(&e.weight);
                    layers[pos + 1][h + 1][nf] += &add;
                }
                for e in system.entries(StepDir::Level, h) {
                    let add = cur.mul(&e.weight);
                    layers[pos + 1][h][0] += &add;
                }
                if h > 0 {
                    for e in system.entries(StepDir::Down, h) {
                        if forbids && flag == 1 && e.plain {
                            continue;
                        }
                        let add = cur.mul(&e.weight);
                        layers[pos + 1][h - 1][0] += &add;
                    }
                }
                if system.has_dlevel() && pos + 2 <= len {
                    for e in system.entries(StepDir::DLevel, h) {
                        let add = cur.mul(&e.weight);
                        layers[pos + 2][h][0] += &add;
                    }
                }
            }
        }
    }

    let mut out = MPoly::zero();
    for h in 0..=hmax {
        if end.matches(h) {
            out += &layers[len][h][0];
            out += &layers[len][h][1];
        }
    }
    out
}

/// Threshold past which exhaustive path enumeration is refused.
pub const ENUMERATION_GUARD: usize = 14;

/// Every admissible weighted path of the system, each menu choice giving a
/// distinct path.  Guarded, since menu products grow exponentially.
pub fn enumerate_paths(
    system: &WeightSystem,
    len: usize,
    end: EndHeight,
) -> Result<Vec<WeightedPath>> {
    if len > ENUMERATION_GUARD {
        return Err(Error::TooLarge { what: "path enumeration", requested: len, limit: ENUMERATION_GUARD });
    }
    let mut out = Vec::new();
    let mut steps: Vec<Step> = Vec::new();
    walk(system, len, end, 0, false, &mut steps, &mut out);
    Ok(out)
}

fn walk(
    system: &WeightSystem,
    remaining: usize,
    end: EndHeight,
    h: usize,
    last_plain_up: bool,
    steps: &mut Vec<Step>,
    out: &mut Vec<WeightedPath>,
) {
    if remaining == 0 {
        if end.matches(h) {
            out.push(WeightedPath::new(steps.clone()).expect("walker keeps heights valid"));
        }
        return;
    }
    let forbids = system.forbids_plain_peak();
    for e in system.entries(StepDir::Up, h) {
        steps.push(Step::up(e.weight.clone()));
        walk(system, remaining - 1, end, h + 1, forbids && e.plain, steps, out);
        steps.pop();
    }
    for e in system.entries(StepDir::Level, h) {
        steps.push(Step::level(e.weight.clone()));
        walk(system, remaining - 1, end, h, false, steps, out);
        steps.pop();
    }
    if h > 0 {
        for e in system.entries(StepDir::Down, h) {
            if forbids && last_plain_up && e.plain {
                continue;
            }
            steps.push(Step::down(e.weight.clone()));
            walk(system, remaining - 1, end, h - 1, false, steps, out);
            steps.pop();
        }
    }
    if system.has_dlevel() && remaining >= 2 {
        for e in system.entries(StepDir::DLevel, h) {
            steps.push(Step::dlevel(e.weight.clone()));
            walk(system, remaining - 2, end, h, false, steps, out);
            steps.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::poly;
    use crate::family::Family;
    use crate::paths::systems::MParams;
    use crate::algebra::var::Var;

    #[test]
    fn hermite_histoires_of_length_four() {
        let sys = WeightSystem::Histoire(Family::Hermite);
        assert_eq!(gf_paths(&sys, 4, EndHeight::At(0)), poly("2 + q"));
    }

    #[test]
    fn prefix_paths_of_length_two() {
        let sys = WeightSystem::Prefix { c: MPoly::var(Var::C), d: MPoly::var(Var::D) };
        assert_eq!(gf_paths(&sys, 2, EndHeight::At(0)), poly("d^2 + c"));
        // the single all-up prefix
        let all_up = enumerate_paths(&sys, 2, EndHeight::At(2)).unwrap();
        assert_eq!(all_up.len(), 1);
    }

    #[test]
    fn mstar_peak_prohibition() {
        // M*_2(0, -1, c): level(-1)level(-1) and up(-q)down(c); the peak
        // up(1)down(c) is excluded
        let sys = WeightSystem::mstar(MPoly::zero(), MPoly::from_int(-1), MPoly::var(Var::C));
        assert_eq!(gf_paths(&sys, 2, EndHeight::At(0)), poly("1 - cq"));
        let paths = enumerate_paths(&sys, 2, EndHeight::At(0)).unwrap();
        assert_eq!(paths.len(), 2);
    }

    #[test]
    fn m_system_menu_choices_are_distinct_paths() {
        let sys = WeightSystem::M(MParams::specialization(Family::Hermite));
        let paths = enumerate_paths(&sys, 2, EndHeight::At(0)).unwrap();
        assert_eq!(paths.len(), 2);
    }

    #[test]
    fn hermite_single_path_of_length_two() {
        let sys = WeightSystem::Histoire(Family::Hermite);
        let paths = enumerate_paths(&sys, 2, EndHeight::At(0)).unwrap();
        assert_eq!(paths.len(), 1);
    }

    #[test]
    fn dp_matches_enumeration() {
        let systems = [
            WeightSystem::Histoire(Family::Charlier),
            WeightSystem::Histoire(Family::Laguerre),
            WeightSystem::Histoire(Family::CharlierStar),
            WeightSystem::M(MParams::symbolic()),
            WeightSystem::MStar(MParams::symbolic()),
            WeightSystem::FourStep(MParams::symbolic()),
            WeightSystem::Schroeder,
            WeightSystem::Prefix { c: MPoly::var(Var::C), d: MPoly::var(Var::D) },
        ];
        for sys in &systems {
            for len in 0..=6 {
                for end in [EndHeight::At(0), EndHeight::Any, EndHeight::At(1)] {
                    let mut total = MPoly::zero();
                    for p in enumerate_paths(sys, len, end).unwrap() {
                        total += &p.weight();
                    }
                    assert_eq!(gf_paths(sys, len, end), total, "{sys:?} len={len} end={end:?}");
                }
            }
        }
    }

    #[test]
    fn enumeration_guard() {
        let sys = WeightSystem::Histoire(Family::Hermite);
        assert!(matches!(
            enumerate_paths(&sys, 15, EndHeight::Any),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn mstar_paths_have_no_d_levels_or_plain_peaks() {
        let sys = WeightSystem::MStar(MParams::symbolic());
        for len in 0..=6 {
            for p in enumerate_paths(&sys, len, EndHeight::At(0)).unwrap() {
                let steps = p.steps();
                for (i, s) in steps.iter().enumerate() {
                    assert!(s.weight != MPoly::var(Var::D));
                    if s.dir == StepDir::Up && s.weight.is_one() && i + 1 < steps.len() {
                        let next = &steps[i + 1];
                        assert!(!(next.dir == StepDir::Down && next.weight == MPoly::var(Var::C)));
                    }
                }
            }
        }
    }
}
