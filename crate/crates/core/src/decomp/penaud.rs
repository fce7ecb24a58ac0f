//! The prefix/core decomposition of `M_n(a,b,c,d;q)` paths.
//!
//! Call a step *plain* when it takes the prefix-compatible branch of the
//! menu: an up of weight 1, a level of weight `d`, or a down of weight `c`.
//! The maximal factors of a path that are Motzkin paths made of plain steps
//! are uniquely determined; replacing every step outside them by a plain up
//! yields a Motzkin prefix, and the steps outside them, concatenated, form
//! a path with no `d`-levels and no plain peaks.  Splitting is weight
//! multiplicative and merging inverts it exactly.

use crate::algebra::mpoly::MPoly;
use crate::error::{Error, Result};
use crate::paths::systems::MParams;
use crate::paths::{Step, StepDir, WeightedPath};

/// Which plain branch a step takes, if any.
fn is_plain(step: &Step, params: &MParams) -> bool {
    match step.dir {
        StepDir::Up => step.weight.is_one(),
        StepDir::Level => !params.d.is_zero() && step.weight == params.d,
        StepDir::Down => !params.c.is_zero() && step.weight == params.c,
        StepDir::DLevel => false,
    }
}

/// Mark the steps belonging to maximal plain Motzkin factors.
///
/// Within each maximal run of plain steps, match ups to downs like
/// parentheses; the factors are then the maximal contiguous blocks of
/// matched and level steps.  Unmatched steps (and all non-plain steps)
/// stay outside every factor.
fn factor_mask(steps: &[Step], params: &MParams) -> Vec<bool> {
    let n = steps.len();
    let mut in_factor = vec![false; n];
    let mut run_start = 0;
    let mut i = 0;
    while i <= n {
        let plain = i < n && is_plain(&steps[i], params);
        if !plain {
            mark_run(steps, run_start..i, &mut in_factor);
            run_start = i + 1;
        }
        i += 1;
    }
    in_factor
}

fn mark_run(steps: &[Step], run: std::ops::Range<usize>, in_factor: &mut [bool]) {
    // parenthesis-match ups and downs inside the run
    let mut matched = vec![false; run.len()];
    let mut stack: Vec<usize> = Vec::new();
    for (off, idx) in run.clone().enumerate() {
        match steps[idx].dir {
            StepDir::Up => stack.push(off),
            StepDir::Down => {
                if let Some(open) = stack.pop() {
                    matched[open] = true;
                    matched[off] = true;
                }
            }
            StepDir::Level => matched[off] = true,
            StepDir::DLevel => {}
        }
    }
    // blocks of matched steps are the maximal factors
    for (off, idx) in run.enumerate() {
        in_factor[idx] = matched[off];
    }
}

/// Validate that a path is admissible for `M(params)` and return its start
/// heights.  Every weight must occur in the menu at its height.
fn validate_m_path(path: &WeightedPath, params: &MParams) -> Result<Vec<usize>> {
    use crate::paths::systems::WeightSystem;
    let sys = WeightSystem::M(params.clone());
    let heights = path.start_heights();
    for (i, (step, &h)) in path.steps().iter().zip(&heights).enumerate() {
        let ok = sys.entries(step.dir, h).iter().any(|e| e.weight == step.weight);
        if !ok {
            return Err(Error::InvalidPath(format!(
                "step {} weight {} is not admissible at height {}",
                i + 1,
                step.weight,
                h
            )));
        }
    }
    if path.final_height() != 0 {
        return Err(Error::InvalidPath("path must end at height 0".into()));
    }
    Ok(heights)
}

/// Split an `M_n(a,b,c,d;q)` path into a `(c,d)`-weighted Motzkin prefix
/// and a core free of `d`-levels and plain peaks.  The prefix ends at the
/// length of the core and `weight(path) = weight(prefix) * weight(core)`.
pub fn penaud_split(
    path: &WeightedPath,
    params: &MParams,
) -> Result<(WeightedPath, WeightedPath)> {
    validate_m_path(path, params)?;
    let mask = factor_mask(path.steps(), params);
    let mut prefix = Vec::new();
    let mut core = Vec::new();
    for (step, &in_factor) in path.steps().iter().zip(&mask) {
        if in_factor {
            prefix.push(step.clone());
        } else {
            prefix.push(Step::up(MPoly::one()));
            core.push(step.clone());
        }
    }
    let prefix = WeightedPath::new(prefix)
        .map_err(|e| Error::InvalidPath(format!("prefix construction failed: {e}")))?;
    let core = WeightedPath::new(core)
        .map_err(|e| Error::InvalidPath(format!("core construction failed: {e}")))?;
    Ok((prefix, core))
}

/// Inverse of [`penaud_split`]: re-expand the prefix's runs of unmatched
/// ups with the corresponding pieces of the core.
pub fn penaud_merge(
    prefix: &WeightedPath,
    core: &WeightedPath,
    params: &MParams,
) -> Result<WeightedPath> {
    if prefix.final_height() != core.num_steps() {
        return Err(Error::HeightMismatch {
            prefix_height: prefix.final_height(),
            core_len: core.num_steps(),
        });
    }
    // all prefix steps are plain by definition of the prefix family
    for step in prefix.steps() {
        let ok = match step.dir {
            StepDir::Up => step.weight.is_one(),
            StepDir::Level => step.weight == params.d,
            StepDir::Down => step.weight == params.c,
            StepDir::DLevel => false,
        };
        if !ok {
            return Err(Error::InvalidPath(format!(
                "prefix step {} is not an admissible (1,d,c) step",
                step.weight
            )));
        }
    }
    let mask = factor_mask(prefix.steps(), params);
    let mut core_iter = core.steps().iter();
    let mut merged = Vec::with_capacity(prefix.num_steps());
    for (step, &in_factor) in prefix.steps().iter().zip(&mask) {
        if in_factor {
            merged.push(step.clone());
        } else {
            // an unmatched up of the prefix stands for one core step
            debug_assert_eq!(step.dir, StepDir::Up);
            let replacement =
                core_iter.next().expect("final height equals core length").clone();
            merged.push(replacement);
        }
    }
    WeightedPath::new(merged).map_err(|e| Error::InvalidPath(format!("merge failed: {e}")))
}
