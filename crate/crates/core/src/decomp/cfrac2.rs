//! The sign-reversing involution on four-step paths that identifies the
//! continued-fraction coefficients with the `M*` path sums.
//!
//! Four-step paths extend the `M*` menus by a double-level step of weight
//! `-c`.  The involution exchanges the first forbidden pattern — a double
//! level, or a peak `U(1) D(c)` — for the other one; both patterns span two
//! length units, so the rest of the path is untouched and the two weights
//! cancel.  Fixed points are exactly the `M*` paths.

use crate::algebra::mpoly::MPoly;
use crate::paths::systems::MParams;
use crate::paths::{Step, StepDir, WeightedPath};

fn is_plain_peak(steps: &[Step], i: usize, c: &MPoly) -> bool {
    i + 1 < steps.len()
        && steps[i].dir == StepDir::Up
        && steps[i].weight.is_one()
        && steps[i + 1].dir == StepDir::Down
        && steps[i + 1].weight == *c
}

/// Apply the involution once.  Paths without forbidden patterns (that is,
/// members of `M*`) are returned unchanged.
pub fn cfrac2_involution(path: &WeightedPath, params: &MParams) -> WeightedPath {
    let c = &params.c;
    let steps = path.steps();
    for i in 0..steps.len() {
        if steps[i].dir == StepDir::DLevel {
            let mut out = steps[..i].to_vec();
            out.push(Step::up(MPoly::one()));
            out.push(Step::down(c.clone()));
            out.extend_from_slice(&steps[i + 1..]);
            return WeightedPath::new(out).expect("swap preserves heights");
        }
        if is_plain_peak(steps, i, c) {
            let mut out = steps[..i].to_vec();
            out.push(Step::dlevel(c.neg()));
            out.extend_from_slice(&steps[i + 2..]);
            return WeightedPath::new(out).expect("swap preserves heights");
        }
    }
    path.clone()
}

/// Is the path free of both forbidden patterns?
pub fn is_mstar_member(path: &WeightedPath, params: &MParams) -> bool {
    let steps = path.steps();
    !(0..steps.len())
        .any(|i| steps[i].dir == StepDir::DLevel || is_plain_peak(steps, i, &params.c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::MPoly;
    use crate::family::Family;
    use crate::paths::gf::{enumerate_paths, gf_paths, EndHeight};
    use crate::paths::systems::WeightSystem;

    #[test]
    fn minimal_swap() {
        let params = MParams::symbolic();
        let p: WeightedPath = "LL(-c)".parse().unwrap();
        let image = cfrac2_involution(&p, &params);
        assert_eq!(image, "U(1) D(c)".parse().unwrap());
        assert_eq!(p.weight().add(&image.weight()), MPoly::zero());
        assert_eq!(cfrac2_involution(&image, &params), p);
    }

    #[test]
    fn fixed_points_are_mstar_members() {
        let params = MParams::symbolic();
        let p: WeightedPath = "U(-q) D(c)".parse().unwrap();
        assert!(is_mstar_member(&p, &params));
        assert_eq!(cfrac2_involution(&p, &params), p);
    }

    #[test]
    fn involution_and_cancellation_exhaustive() {
        let params = MParams::symbolic();
        let sys = WeightSystem::FourStep(params.clone());
        for len in 0..=6 {
            for p in enumerate_paths(&sys, len, EndHeight::At(0)).unwrap() {
                let image = cfrac2_involution(&p, &params);
                assert_eq!(cfrac2_involution(&image, &params), p, "{p}");
                if image == p {
                    assert!(is_mstar_member(&p, &params));
                } else {
                    assert_eq!(p.weight().add(&image.weight()), MPoly::zero(), "{p}");
                    assert_eq!(p.len_units(), image.len_units());
                }
            }
        }
    }

    #[test]
    fn aggregate_equals_mstar_sum() {
        // total weight of all four-step paths of length k = gf(M*_k)
        let symbolic = MParams::symbolic();
        let mut param_sets = vec![symbolic];
        for f in Family::ALL {
            param_sets.push(MParams::specialization(f));
        }
        for params in &param_sets {
            for k in 0..=6 {
                let four = gf_paths(&WeightSystem::FourStep(params.clone()), k, EndHeight::At(0));
                let core = gf_paths(&WeightSystem::MStar(params.clone()), k, EndHeight::At(0));
                assert_eq!(four, core, "k={k} params={params:?}");
            }
        }
    }
}
