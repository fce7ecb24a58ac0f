//! Weight systems: the rule assigning to each (step kind, start height) a
//! menu of admissible weights.
//!
//! Two groups of systems live here.  The histoire systems realise the
//! recurrence coefficients of the four orthogonal-polynomial families as
//! height-indexed menus of monomials; their path sums are the moments.  The
//! `M` / `M*` / prefix / four-step / Schroeder systems are the machinery of
//! the path decomposition: `M` paths carry the `(1-q)^n`-cleared weights,
//! `M*` is the peak- and `d`-free core family, and prefixes carry plain
//! `(1, d, c)` weights.

use crate::algebra::mpoly::MPoly;
use crate::algebra::var::Var;
use crate::family::Family;
use crate::paths::StepDir;

/// Parameters `(a, b, c, d)` of the decomposition path families.  Any of
/// them may be a full polynomial; menu entries that vanish are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MParams {
    pub a: MPoly,
    pub b: MPoly,
    pub c: MPoly,
    pub d: MPoly,
}

impl MParams {
    /// Fully symbolic parameters: the variables `a`, `b`, `c`, `d` themselves.
    pub fn symbolic() -> MParams {
        MParams {
            a: MPoly::var(Var::A),
            b: MPoly::var(Var::B),
            c: MPoly::var(Var::C),
            d: MPoly::var(Var::D),
        }
    }

    pub fn new(a: MPoly, b: MPoly, c: MPoly, d: MPoly) -> MParams {
        MParams { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> MParams {
        MParams::new(MPoly::from_int(a), MPoly::from_int(b), MPoly::from_int(c), MPoly::from_int(d))
    }

    /// The parameter specialisation that clears the `(1-q)^n` prefactor of
    /// each family's moments:
    ///
    /// * matchings          `(0, 0, 1, 0)` on paths of length `2n`
    /// * set partitions     `(0, -1, y(1-q), 1 + y(1-q))`
    /// * starred partitions `(-1, y(1-q), 0, 1)`
    /// * permutations       `(-1, -yq, y, 1 + y)`
    pub fn specialization(family: Family) -> MParams {
        let y = MPoly::var(Var::Y);
        let y1q = y.mul(&MPoly::one().sub(&MPoly::q_pow(1))); // y(1-q)
        match family {
            Family::Hermite => MParams::from_ints(0, 0, 1, 0),
            Family::Charlier => MParams::new(
                MPoly::zero(),
                MPoly::from_int(-1),
                y1q.clone(),
                MPoly::one().add(&y1q),
            ),
            Family::CharlierStar => {
                MParams::new(MPoly::from_int(-1), y1q, MPoly::zero(), MPoly::one())
            }
            Family::Laguerre => MParams::new(
                MPoly::from_int(-1),
                MPoly::mono(-1, &[(Var::Y, 1), (Var::Q, 1)]),
                y.clone(),
                MPoly::one().add(&y),
            ),
        }
    }

    /// Substitute concrete values into a polynomial over `a, b, c, d`.
    pub fn substitute_into(&self, p: &MPoly) -> MPoly {
        p.substitute(Var::A, &self.a)
            .substitute(Var::B, &self.b)
            .substitute(Var::C, &self.c)
            .substitute(Var::D, &self.d)
    }
}

/// One admissible weight at a given (direction, height).  `plain` marks the
/// prefix-compatible branch of the `M` menus: up weight 1, level weight `d`,
/// down weight `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MenuEntry {
    pub weight: MPoly,
    pub plain: bool,
}

impl MenuEntry {
    fn new(weight: MPoly) -> MenuEntry {
        MenuEntry { weight, plain: false }
    }

    fn plain(weight: MPoly) -> MenuEntry {
        MenuEntry { weight, plain: true }
    }
}

/// A family of weighted Motzkin paths, given by weight menus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightSystem {
    /// Histoires of one of the four families; path sums are moments.
    Histoire(Family),
    /// `M_n(a,b,c,d;q)`: up `1 | -q^(h+1)`, level `d | (a+b)q^h`,
    /// down `c | -ab q^(h-1)`.
    M(MParams),
    /// The sub-family of `M` with no `d`-levels and no peak made of an up
    /// of weight 1 followed by a down of weight `c`.
    MStar(MParams),
    /// Motzkin prefixes with up 1, level `d`, down `c`.
    Prefix { c: MPoly, d: MPoly },
    /// The four-step model expanding the continued fraction: `MStar` menus
    /// plus a double-level step of weight `-c`, with peaks allowed.
    FourStep(MParams),
    /// Schroeder paths: up `1 | -q^(h+1)`, down 1, double-level `-1`.
    Schroeder,
}

impl WeightSystem {
    pub fn mstar(a: MPoly, b: MPoly, c: MPoly) -> WeightSystem {
        WeightSystem::MStar(MParams::new(a, b, c, MPoly::zero()))
    }

    pub fn four_step(a: MPoly, b: MPoly, c: MPoly) -> WeightSystem {
        WeightSystem::FourStep(MParams::new(a, b, c, MPoly::zero()))
    }

    /// Does this system exclude peaks `U(1) D(c)`?
    pub fn forbids_plain_peak(&self) -> bool {
        matches!(self, WeightSystem::MStar(_))
    }

    /// Admissible weights for a step of direction `dir` starting at height
    /// `h`.  Zero entries are dropped; down menus at height 0 are empty.
    pub fn entries(&self, dir: StepDir, h: usize) -> Vec<MenuEntry> {
        let mut out = Vec::new();
        match self {
            WeightSystem::Histoire(family) => histoire_entries(*family, dir, h, &mut out),
            WeightSystem::M(p) => m_entries(p, dir, h, true, false, &mut out),
            WeightSystem::MStar(p) => m_entries(p, dir, h, false, false, &mut out),
            WeightSystem::FourStep(p) => m_entries(p, dir, h, false, true, &mut out),
            WeightSystem::Prefix { c, d } => match dir {
                StepDir::Up => out.push(MenuEntry::plain(MPoly::one())),
                StepDir::Level => out.push(MenuEntry::plain(d.clone())),
                StepDir::Down if h > 0 => out.push(MenuEntry::plain(c.clone())),
                _ => {}
            },
            WeightSystem::Schroeder => match dir {
                StepDir::Up => {
                    out.push(MenuEntry::new(MPoly::one()));
                    out.push(MenuEntry::new(MPoly::q_pow(h as u16 + 1).neg()));
                }
                StepDir::Down if h > 0 => out.push(MenuEntry::new(MPoly::one())),
                StepDir::DLevel => out.push(MenuEntry::new(MPoly::from_int(-1))),
                _ => {}
            },
        }
        out.retain(|e| !e.weight.is_zero());
        out
    }

    /// Sum of the menu at (dir, h); the recurrence coefficient in histoire
    /// systems.
    pub fn menu_sum(&self, dir: StepDir, h: usize) -> MPoly {
        let mut s = MPoly::zero();
        for e in self.entries(dir, h) {
            s += &e.weight;
        }
        s
    }

    /// Does the system use double-level steps at all?
    pub fn has_dlevel(&self) -> bool {
        matches!(self, WeightSystem::FourStep(_) | WeightSystem::Schroeder)
    }
}

fn m_entries(
    p: &MParams,
    dir: StepDir,
    h: usize,
    allow_d_level: bool,
    with_dlevel: bool,
    out: &mut Vec<MenuEntry>,
) {
    match dir {
        StepDir::Up => {
            out.push(MenuEntry::plain(MPoly::one()));
            out.push(MenuEntry::new(MPoly::q_pow(h as u16 + 1).neg()));
        }
        StepDir::Level => {
            if allow_d_level {
                out.push(MenuEntry::plain(p.d.clone()));
            }
            let ab = p.a.add(&p.b).mul(&MPoly::q_pow(h as u16));
            out.push(MenuEntry::new(ab));
        }
        StepDir::Down => {
            if h > 0 {
                out.push(MenuEntry::plain(p.c.clone()));
                let ab = p.a.mul(&p.b).mul(&MPoly::q_pow(h as u16 - 1)).neg();
                out.push(MenuEntry::new(ab));
            }
        }
        StepDir::DLevel => {
            if with_dlevel {
                out.push(MenuEntry::new(p.c.neg()));
            }
        }
    }
}

/// Histoire weight menus.  `q_run(from, count)` pushes `q^from ... q^(from+count-1)`.
fn histoire_entries(family: Family, dir: StepDir, h: usize, out: &mut Vec<MenuEntry>) {
    let y = MPoly::var(Var::Y);
    let push_q_run = |out: &mut Vec<MenuEntry>, from: usize, count: usize, scale: &MPoly| {
        for i in 0..count {
            out.push(MenuEntry::new(scale.mul(&MPoly::q_pow((from + i) as u16))));
        }
    };
    match family {
        // up 1; down [h]_q
        Family::Hermite => match dir {
            StepDir::Up => out.push(MenuEntry::new(MPoly::one())),
            StepDir::Down if h > 0 => push_q_run(out, 0, h, &MPoly::one()),
            _ => {}
        },
        // up y (openers); level y (singletons) + [h]_q (transients);
        // down [h]_q (closers)
        Family::Charlier => match dir {
            StepDir::Up => out.push(MenuEntry::new(y.clone())),
            StepDir::Level => {
                out.push(MenuEntry::new(y.clone()));
                push_q_run(out, 0, h, &MPoly::one());
            }
            StepDir::Down if h > 0 => push_q_run(out, 0, h, &MPoly::one()),
            _ => {}
        },
        // Starred crossings: every block maximum also starts an infinite
        // arc, which crosses all arcs open above it.  Singleton levels gain
        // q^h, closer downs gain q^(h-1); transients are unchanged.
        Family::CharlierStar => match dir {
            StepDir::Up => out.push(MenuEntry::new(y.clone())),
            StepDir::Level => {
                out.push(MenuEntry::new(y.mul(&MPoly::q_pow(h as u16))));
                push_q_run(out, 0, h, &MPoly::one());
            }
            StepDir::Down if h > 0 => push_q_run(out, h - 1, h, &MPoly::one()),
            _ => {}
        },
        // up y[h+1]_q; level [h]_q (lower transients) + y (fixed points)
        // + yq[h]_q (upper transients); down [h]_q
        Family::Laguerre => match dir {
            StepDir::Up => push_q_run(out, 0, h + 1, &y),
            StepDir::Level => {
                push_q_run(out, 0, h, &MPoly::one());
                out.push(MenuEntry::new(y.clone()));
                push_q_run(out, 1, h, &y);
            }
            StepDir::Down if h > 0 => push_q_run(out, 0, h, &MPoly::one()),
            _ => {}
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::poly;
    use crate::algebra::qfun::q_int;

    #[test]
    fn histoire_menu_sums_are_recurrence_coefficients() {
        // b_h = level sum, a_h = up sum, c_h = down sum; lambda_h = a_(h-1) c_h
        for h in 0..6usize {
            let hs = WeightSystem::Histoire(Family::Hermite);
            assert_eq!(hs.menu_sum(StepDir::Up, h), MPoly::one());
            assert_eq!(hs.menu_sum(StepDir::Level, h), MPoly::zero());
            assert_eq!(hs.menu_sum(StepDir::Down, h), q_int(h));

            let ch = WeightSystem::Histoire(Family::Charlier);
            assert_eq!(ch.menu_sum(StepDir::Level, h), poly("y").add(&q_int(h)));
            assert_eq!(ch.menu_sum(StepDir::Down, h), q_int(h));

            let cs = WeightSystem::Histoire(Family::CharlierStar);
            assert_eq!(
                cs.menu_sum(StepDir::Level, h),
                MPoly::mono(1, &[(Var::Y, 1), (Var::Q, h as u16)]).add(&q_int(h))
            );
            // a_(h-1) c_h = y * q^(h-1) [h]_q, the recurrence lambda_h
            if h > 0 {
                let lambda = cs.menu_sum(StepDir::Up, h - 1).mul(&cs.menu_sum(StepDir::Down, h));
                let expected =
                    MPoly::mono(1, &[(Var::Y, 1), (Var::Q, h as u16 - 1)]).mul(&q_int(h));
                assert_eq!(lambda, expected, "h={h}");
            }

            let lg = WeightSystem::Histoire(Family::Laguerre);
            let expected_b = q_int(h).add(&poly("y").mul(&q_int(h + 1)));
            assert_eq!(lg.menu_sum(StepDir::Level, h), expected_b);
            assert_eq!(lg.menu_sum(StepDir::Up, h), poly("y").mul(&q_int(h + 1)));
            if h > 0 {
                let lambda = lg.menu_sum(StepDir::Up, h - 1).mul(&lg.menu_sum(StepDir::Down, h));
                assert_eq!(lambda, poly("y").mul(&q_int(h)).mul(&q_int(h)), "h={h}");
            }
        }
    }

    #[test]
    fn m_menus_drop_vanishing_entries() {
        let sys = WeightSystem::M(MParams::specialization(Family::Hermite));
        assert_eq!(sys.entries(StepDir::Up, 0).len(), 2);
        assert!(sys.entries(StepDir::Level, 0).is_empty());
        assert_eq!(sys.entries(StepDir::Down, 1).len(), 1);
        assert!(sys.entries(StepDir::Down, 0).is_empty());

        let sym = WeightSystem::M(MParams::symbolic());
        assert_eq!(sym.entries(StepDir::Level, 2).len(), 2);
        assert_eq!(sym.entries(StepDir::Down, 2).len(), 2);
    }

    #[test]
    fn mstar_has_no_d_levels() {
        let sys = WeightSystem::MStar(MParams::symbolic());
        for e in sys.entries(StepDir::Level, 3) {
            assert!(!e.plain);
        }
        assert!(sys.forbids_plain_peak());
    }
}
