//! The weight-preserving bijections between combinatorial objects and
//! weighted Motzkin paths (histoires).
//!
//! Forward direction: traverse the object left to right, translating each
//! element into a step whose weight records how many active openers the
//! element's arc crosses.  Inverse direction: replay the path, selecting
//! the matching opener from the active list by the recorded count.
//!
//! * matchings: openers become `U(1)`, a closer at height `h` becomes
//!   `D(q^k)` where `k` counts the active openers between it and its
//!   partner.
//! * set partitions: non-transient openers `U(y)`, singletons `L(y)`,
//!   transients `L(q^k)`, closers `D(q^k)`.
//! * starred partitions: the infinite arc of each block maximum crosses
//!   every arc open above it, so singleton levels pick up `q^h` and closer
//!   downs pick up `q^(h-1)`.
//! * permutations: arcs above the line form one partition (scanned left to
//!   right, weights on down steps and upper-transient levels), arcs below
//!   form another (scanned right to left, weights on up steps and
//!   lower-transient levels), fixed points are `L(y)`; the `y` of each
//!   down step is carried on its up step instead.

use crate::algebra::mpoly::{MPoly, Monomial};
use crate::algebra::var::Var;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::objects::{brute_gf, CombObject, Matching, Permutation, SetPartition};
use crate::paths::gf::{gf_paths, EndHeight};
use crate::paths::systems::{MParams, WeightSystem};
use crate::paths::{Step, StepDir, WeightedPath};

/// Map an object to its histoire.  The object kind must match the family
/// (matchings for Hermite, partitions for the Charlier pair, permutations
/// for Laguerre).
pub fn histoire_of(family: Family, obj: &CombObject) -> Result<WeightedPath> {
    match (family, obj) {
        (Family::Hermite, CombObject::Matching(m)) => Ok(matching_histoire(m)),
        (Family::Charlier, CombObject::SetPartition(p)) => Ok(partition_histoire(p, false)),
        (Family::CharlierStar, CombObject::SetPartition(p)) => Ok(partition_histoire(p, true)),
        (Family::Laguerre, CombObject::Permutation(s)) => Ok(permutation_histoire(s)),
        _ => Err(Error::InvalidHistoire(format!("object kind does not match family {family}"))),
    }
}

/// Inverse of [`histoire_of`].
pub fn object_of(family: Family, path: &WeightedPath) -> Result<CombObject> {
    match family {
        Family::Hermite => Ok(CombObject::Matching(matching_of(path)?)),
        Family::Charlier => Ok(CombObject::SetPartition(partition_of(path, false)?)),
        Family::CharlierStar => Ok(CombObject::SetPartition(partition_of(path, true)?)),
        Family::Laguerre => Ok(CombObject::Permutation(permutation_of(path)?)),
    }
}

/// The statistic monomial the histoire weight must reproduce.
pub fn statistic_monomial(family: Family, obj: &CombObject) -> Result<MPoly> {
    let (y, q): (u64, u64) = match (family, obj) {
        (Family::Hermite, CombObject::Matching(m)) => (0, m.crossings()),
        (Family::Charlier, CombObject::SetPartition(p)) => (p.num_blocks() as u64, p.crossings()),
        (Family::CharlierStar, CombObject::SetPartition(p)) => {
            (p.num_blocks() as u64, p.crossings_star())
        }
        (Family::Laguerre, CombObject::Permutation(s)) => s.stats(),
        _ => return Err(Error::InvalidHistoire("object kind does not match family".into())),
    };
    Ok(MPoly::mono(1, &[(Var::Y, y as u16), (Var::Q, q as u16)]))
}

// ---------------------------------------------------------------------------
// Active-opener bookkeeping shared by all scans
// ---------------------------------------------------------------------------

/// Ordered list of currently open positions.  `crossings_to(p)` is the
/// number of active openers strictly after `p` in scan order, i.e. the
/// number of arcs the arc closing at the current element crosses.
struct Active {
    positions: Vec<usize>,
}

impl Active {
    fn new() -> Active {
        Active { positions: Vec::new() }
    }

    fn len(&self) -> usize {
        self.positions.len()
    }

    /// Open `p`; positions arrive in scan order, so pushing keeps order.
    fn open(&mut self, p: usize) {
        self.positions.push(p);
    }

    /// Close the arc to `p`, returning how many active openers sit between
    /// `p` and the current element.
    fn close(&mut self, p: usize) -> Result<usize> {
        let idx = self
            .positions
            .iter()
            .position(|&x| x == p)
            .ok_or_else(|| Error::InvalidHistoire(format!("position {p} is not an active opener")))?;
        self.positions.remove(idx);
        Ok(self.positions.len() - idx)
    }

    /// Close the arc `k` crossings deep, returning its opener.
    fn close_by_count(&mut self, k: usize) -> Result<usize> {
        let m = self.positions.len();
        if k >= m {
            return Err(Error::InvalidHistoire(format!(
                "crossing count {k} out of range for {m} active openers"
            )));
        }
        Ok(self.positions.remove(m - 1 - k))
    }

    fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

/// Weight of the form `q^k`, returning `k`.
fn as_q_power(w: &MPoly) -> Option<u16> {
    let (m, c) = w.as_monomial()?;
    if !num_traits::One::is_one(c) {
        return None;
    }
    let mut ok = Monomial::ONE;
    ok = ok.with_exp(Var::Q, m.exp(Var::Q));
    (*m == ok).then(|| m.exp(Var::Q))
}

/// Weight of the form `y q^k`, returning `k`.
fn as_y_q_power(w: &MPoly) -> Option<u16> {
    let (m, c) = w.as_monomial()?;
    if !num_traits::One::is_one(c) {
        return None;
    }
    let mut ok = Monomial::ONE.with_exp(Var::Y, 1);
    ok = ok.with_exp(Var::Q, m.exp(Var::Q));
    (*m == ok).then(|| m.exp(Var::Q))
}

fn y_q(k: u16) -> MPoly {
    MPoly::mono(1, &[(Var::Y, 1), (Var::Q, k)])
}

// ---------------------------------------------------------------------------
// Matchings
// ---------------------------------------------------------------------------

fn matching_histoire(m: &Matching) -> WeightedPath {
    let table = m.partner_table();
    let mut active = Active::new();
    let mut steps = Vec::with_capacity(table.len());
    for i in 0..table.len() {
        if i < table[i] {
            active.open(i);
            steps.push(Step::up(MPoly::one()));
        } else {
            let k = active.close(table[i]).expect("valid matching");
            steps.push(Step::down(MPoly::q_pow(k as u16)));
        }
    }
    WeightedPath::new(steps).expect("openers precede closers")
}

fn matching_of(path: &WeightedPath) -> Result<Matching> {
    if path.final_height() != 0 {
        return Err(Error::InvalidHistoire("path must end at height 0".into()));
    }
    let n = path.num_steps();
    let mut partner = vec![usize::MAX; n];
    let mut active = Active::new();
    for (i, step) in path.steps().iter().enumerate() {
        match step.dir {
            StepDir::Up if step.weight.is_one() => active.open(i),
            StepDir::Down => {
                let k = as_q_power(&step.weight).ok_or_else(|| {
                    Error::InvalidHistoire(format!("down weight {} is not q^k", step.weight))
                })? as usize;
                let o = active.close_by_count(k)?;
                partner[o] = i;
                partner[i] = o;
            }
            _ => {
                return Err(Error::InvalidHistoire(format!(
                    "step {} is not part of a matching histoire",
                    i + 1
                )))
            }
        }
    }
    Matching::new(partner)
}

// ---------------------------------------------------------------------------
// Set partitions (plain and starred)
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq)]
enum PartRole {
    Opener,
    Closer,
    Transient,
    Singleton,
}

fn partition_roles(p: &SetPartition) -> (Vec<PartRole>, Vec<usize>) {
    let n = p.n();
    let mut roles = vec![PartRole::Singleton; n + 1];
    let mut prev = vec![0usize; n + 1];
    for block in p.blocks() {
        if block.len() == 1 {
            roles[block[0]] = PartRole::Singleton;
            continue;
        }
        for (i, &e) in block.iter().enumerate() {
            roles[e] = if i == 0 {
                PartRole::Opener
            } else if i == block.len() - 1 {
                PartRole::Closer
            } else {
                PartRole::Transient
            };
            if i > 0 {
                prev[e] = block[i - 1];
            }
        }
    }
    (roles, prev)
}

fn partition_histoire(p: &SetPartition, starred: bool) -> WeightedPath {
    let (roles, prev) = partition_roles(p);
    let mut active = Active::new();
    let mut steps = Vec::with_capacity(p.n());
    for i in 1..=p.n() {
        let h = active.len();
        match roles[i] {
            PartRole::Opener => {
                active.open(i);
                steps.push(Step::up(MPoly::var(Var::Y)));
            }
            PartRole::Singleton => {
                // the infinite arc crosses all h arcs open above it
                let w = if starred { y_q(h as u16) } else { MPoly::var(Var::Y) };
                steps.push(Step::level(w));
            }
            PartRole::Transient => {
                let k = active.close(prev[i]).expect("valid partition");
                active.open(i);
                steps.push(Step::level(MPoly::q_pow(k as u16)));
            }
            PartRole::Closer => {
                let k = active.close(prev[i]).expect("valid partition");
                // the infinite arc crosses the h-1 arcs still open past i
                let e = if starred { k + h - 1 } else { k };
                steps.push(Step::down(MPoly::q_pow(e as u16)));
            }
        }
    }
    WeightedPath::new(steps).expect("openers precede closers")
}

fn partition_of(path: &WeightedPath, starred: bool) -> Result<SetPartition> {
    if path.final_height() != 0 {
        return Err(Error::InvalidHistoire("path must end at height 0".into()));
    }
    let n = path.num_steps();
    let mut active = Active::new();
    // successor along each block
    let mut succ: Vec<Option<usize>> = vec![None; n + 1];
    let mut is_head = vec![false; n + 1];
    let bad = |i: usize, w: &MPoly| {
        Error::InvalidHistoire(format!("step {} weight {} outside the menu", i + 1, w))
    };
    for (idx, step) in path.steps().iter().enumerate() {
        let i = idx + 1;
        let h = active.len();
        match step.dir {
            StepDir::Up => {
                if as_y_q_power(&step.weight) != Some(0) {
                    return Err(bad(i, &step.weight));
                }
                active.open(i);
                is_head[i] = true;
            }
            StepDir::Level => {
                if let Some(e) = as_y_q_power(&step.weight) {
                    // singleton; starred carries exactly q^h
                    let want = if starred { h as u16 } else { 0 };
                    if e != want {
                        return Err(bad(i, &step.weight));
                    }
                    is_head[i] = true;
                } else if let Some(k) = as_q_power(&step.weight) {
                    // transient: close then reopen
                    if (k as usize) >= h {
                        return Err(bad(i, &step.weight));
                    }
                    let o = active.close_by_count(k as usize)?;
                    succ[o] = Some(i);
                    active.open(i);
                } else {
                    return Err(bad(i, &step.weight));
                }
            }
            StepDir::Down => {
                let e = as_q_power(&step.weight).ok_or_else(|| bad(i, &step.weight))? as usize;
                let k = if starred {
                    // weight q^(k + h - 1)
                    e.checked_sub(h - 1).ok_or_else(|| bad(i, &step.weight))?
                } else {
                    e
                };
                if k >= h {
                    return Err(bad(i, &step.weight));
                }
                let o = active.close_by_count(k)?;
                succ[o] = Some(i);
            }
            StepDir::DLevel => return Err(bad(i, &step.weight)),
        }
    }
    // assemble blocks by following successors from heads
    let mut blocks = Vec::new();
    for head in 1..=n {
        if is_head[head] {
            let mut block = vec![head];
            let mut cur = head;
            while let Some(next) = succ[cur] {
                block.push(next);
                cur = next;
            }
            blocks.push(block);
        }
    }
    SetPartition::new(blocks)
}

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Debug)]
enum PermRole {
    Up,
    Down,
    UpperTransient,
    LowerTransient,
    Fixed,
}

fn perm_roles(sigma: &Permutation) -> Vec<PermRole> {
    let n = sigma.n();
    let inv = sigma.inverse();
    let mut roles = vec![PermRole::Fixed; n + 1];
    for i in 1..=n {
        let s = sigma.apply(i);
        let p = inv.apply(i);
        roles[i] = if s == i {
            PermRole::Fixed
        } else if s > i && p > i {
            PermRole::Up
        } else if s < i && p < i {
            PermRole::Down
        } else if s > i {
            PermRole::UpperTransient
        } else {
            PermRole::LowerTransient
        };
    }
    roles
}

fn permutation_histoire(sigma: &Permutation) -> WeightedPath {
    let n = sigma.n();
    let inv = sigma.inverse();
    let roles = perm_roles(sigma);

    // Pass 1: arcs above the line, scanned left to right.  Openers are Up
    // and UpperTransient positions; each closer records its crossing count.
    let mut upper_k = vec![0usize; n + 1];
    let mut active = Active::new();
    for i in 1..=n {
        match roles[i] {
            PermRole::Down | PermRole::UpperTransient => {
                upper_k[i] = active.close(inv.apply(i)).expect("valid permutation");
                if roles[i] == PermRole::UpperTransient {
                    active.open(i);
                }
            }
            PermRole::Up => active.open(i),
            _ => {}
        }
    }

    // Pass 2: arcs below the line, scanned right to left.  Openers are Down
    // and LowerTransient positions (right ends of the below-arcs).
    let mut lower_k = vec![0usize; n + 1];
    let mut active = Active::new();
    for i in (1..=n).rev() {
        match roles[i] {
            PermRole::Up | PermRole::LowerTransient => {
                lower_k[i] = active.close(inv.apply(i)).expect("valid permutation");
                if roles[i] == PermRole::LowerTransient {
                    active.open(i);
                }
            }
            PermRole::Down => active.open(i),
            _ => {}
        }
    }

    let steps = (1..=n)
        .map(|i| match roles[i] {
            PermRole::Up => Step::up(y_q(lower_k[i] as u16)),
            PermRole::Down => Step::down(MPoly::q_pow(upper_k[i] as u16)),
            PermRole::UpperTransient => Step::level(y_q(upper_k[i] as u16 + 1)),
            PermRole::LowerTransient => Step::level(MPoly::q_pow(lower_k[i] as u16)),
            PermRole::Fixed => Step::level(MPoly::var(Var::Y)),
        })
        .collect();
    WeightedPath::new(steps).expect("upper openers precede closers")
}

fn permutation_of(path: &WeightedPath) -> Result<Permutation> {
    if path.final_height() != 0 {
        return Err(Error::InvalidHistoire("path must end at height 0".into()));
    }
    let n = path.num_steps();
    let heights = path.start_heights();
    let bad = |i: usize, w: &MPoly| {
        Error::InvalidHistoire(format!("step {} weight {} outside the menu", i + 1, w))
    };

    // classify each step and recover the recorded crossing counts
    let mut roles = vec![PermRole::Fixed; n + 1];
    let mut upper_k = vec![0usize; n + 1];
    let mut lower_k = vec![0usize; n + 1];
    for (idx, step) in path.steps().iter().enumerate() {
        let i = idx + 1;
        let h = heights[idx];
        match step.dir {
            StepDir::Up => {
                let k = as_y_q_power(&step.weight).ok_or_else(|| bad(i, &step.weight))? as usize;
                if k > h {
                    return Err(bad(i, &step.weight));
                }
                roles[i] = PermRole::Up;
                lower_k[i] = k;
            }
            StepDir::Down => {
                let k = as_q_power(&step.weight).ok_or_else(|| bad(i, &step.weight))? as usize;
                if k + 1 > h {
                    return Err(bad(i, &step.weight));
                }
                roles[i] = PermRole::Down;
                upper_k[i] = k;
            }
            StepDir::Level => {
                if let Some(e) = as_y_q_power(&step.weight) {
                    if e == 0 {
                        roles[i] = PermRole::Fixed;
                    } else if (e as usize) <= h {
                        roles[i] = PermRole::UpperTransient;
                        upper_k[i] = e as usize - 1;
                    } else {
                        return Err(bad(i, &step.weight));
                    }
                } else if let Some(e) = as_q_power(&step.weight) {
                    if (e as usize) + 1 > h {
                        return Err(bad(i, &step.weight));
                    }
                    roles[i] = PermRole::LowerTransient;
                    lower_k[i] = e as usize;
                } else {
                    return Err(bad(i, &step.weight));
                }
            }
            StepDir::DLevel => return Err(bad(i, &step.weight)),
        }
    }

    let mut sigma = vec![0usize; n + 1];

    // Pass 1: rebuild the arcs above the line.
    let mut active = Active::new();
    for i in 1..=n {
        match roles[i] {
            PermRole::Down | PermRole::UpperTransient => {
                let o = active.close_by_count(upper_k[i])?;
                sigma[o] = i;
                if roles[i] == PermRole::UpperTransient {
                    active.open(i);
                }
            }
            PermRole::Up => active.open(i),
            _ => {}
        }
    }
    if !active.is_empty() {
        return Err(Error::InvalidHistoire("unclosed upper arcs".into()));
    }

    // Pass 2: rebuild the arcs below the line, right to left.
    let mut active = Active::new();
    for i in (1..=n).rev() {
        match roles[i] {
            PermRole::Up | PermRole::LowerTransient => {
                let p = active.close_by_count(lower_k[i])?;
                sigma[p] = i;
                if roles[i] == PermRole::LowerTransient {
                    active.open(i);
                }
            }
            PermRole::Down => active.open(i),
            _ => {}
        }
    }
    if !active.is_empty() {
        return Err(Error::InvalidHistoire("unclosed lower arcs".into()));
    }

    for i in 1..=n {
        if roles[i] == PermRole::Fixed {
            sigma[i] = i;
        }
    }
    Permutation::new(sigma[1..].to_vec())
}

// ---------------------------------------------------------------------------
// Parameter specialisations
// ---------------------------------------------------------------------------

/// Check that the specialised path family reproduces `(1-q)^n` times the
/// brute-force moment: `gf(M_len(params)) == (1-q)^n * brute_gf(family, n)`
/// with `len = 2n` for matchings and `n` otherwise.
pub fn check_specialization(family: Family, n: usize) -> bool {
    let params = MParams::specialization(family);
    let len = match family {
        Family::Hermite => 2 * n,
        _ => n,
    };
    let lhs = gf_paths(&WeightSystem::M(params), len, EndHeight::At(0));
    let one_minus_q = MPoly::one().sub(&MPoly::q_pow(1));
    let rhs = one_minus_q.pow(n as u32).mul(&brute_gf(family, n));
    lhs == rhs
}
