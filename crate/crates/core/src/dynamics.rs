//! Orbits and exhaustive analysis of the state space.
//!
//! Exhaustive operations compile the system into a [`Kernel`] of `u64`
//! masks and split the `2^|S|` states into contiguous ranges that share
//! their high-order bits. Ranges are processed in parallel and merged in
//! range order, so every report is independent of the partition count.

use std::collections::HashMap;
use std::ops::Range;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::state::State;
use crate::system::{add_evaluations, ReactionSystem};

/// Largest background set enumerated by default.
pub const DEFAULT_CAP: usize = 22;
/// Hard ceiling for any cap override.
pub const MAX_CAP: usize = 40;

/// The result function compiled to word masks. Requires `|S| <= 64`.
#[derive(Debug, Clone)]
pub struct Kernel {
    width: usize,
    reactants: Vec<u64>,
    inhibitors: Vec<u64>,
    products: Vec<u64>,
}

impl Kernel {
    pub fn new(sys: &ReactionSystem) -> Result<Kernel> {
        let width = sys.width();
        if width > 64 {
            return Err(Error::Capability {
                what: "background set",
                size: width,
                cap: 64,
                hint: "use the SAT/QBF encodings instead",
            });
        }
        let bits = |s: &State| s.to_bits().expect("width checked");
        let rs = sys.reactions();
        Ok(Kernel {
            width,
            reactants: rs.iter().map(|r| bits(&r.reactants)).collect(),
            inhibitors: rs.iter().map(|r| bits(&r.inhibitors)).collect(),
            products: rs.iter().map(|r| bits(&r.products)).collect(),
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn res(&self, t: u64) -> u64 {
        let mut out = 0;
        for k in 0..self.products.len() {
            if t & self.reactants[k] == self.reactants[k] && t & self.inhibitors[k] == 0 {
                out |= self.products[k];
            }
        }
        out
    }
}

/// Finite prefix of an orbit, cut at the first repeated state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub sequence: Vec<State>,
    pub tail_length: usize,
    /// `None` when `max_steps` ran out before a state repeated.
    pub cycle_length: Option<usize>,
}

/// Iterates the result function from `init` for at most `max_steps`
/// applications, stopping as soon as a state recurs.
pub fn orbit(sys: &ReactionSystem, init: &State, max_steps: usize) -> Result<OrbitReport> {
    sys.check_state(init)?;
    if max_steps == 0 {
        return Err(Error::Precondition("max_steps must be at least 1".into()));
    }
    let mut seen: HashMap<State, usize> = HashMap::new();
    let mut sequence = vec![init.clone()];
    seen.insert(init.clone(), 0);
    let mut current = init.clone();
    for _ in 0..max_steps {
        let next = sys.result_unchecked(&current);
        if let Some(&first) = seen.get(&next) {
            return Ok(OrbitReport {
                tail_length: first,
                cycle_length: Some(sequence.len() - first),
                sequence,
            });
        }
        seen.insert(next.clone(), sequence.len());
        sequence.push(next.clone());
        current = next;
    }
    Ok(OrbitReport {
        sequence,
        tail_length: 0,
        cycle_length: None,
    })
}

pub fn is_fixed_point(sys: &ReactionSystem, state: &State) -> Result<bool> {
    Ok(sys.result(state)? == *state)
}

/// Polynomial check that a fixed point of an inhibitorless system is reached
/// from a one-element-smaller or one-element-larger state.
///
/// A `true` answer implies the state is an attractor; `false` does not rule
/// out preimages further away.
pub fn local_attractor_check(sys: &ReactionSystem, state: &State) -> Result<bool> {
    if !sys.classify().is_inhibitorless {
        return Err(Error::WrongClass {
            expected: "inhibitorless",
        });
    }
    if !is_fixed_point(sys, state)? {
        return Err(Error::Precondition(format!(
            "{} is not a fixed point",
            sys.format_state(state)
        )));
    }
    for x in 0..sys.width() {
        let neighbour = if state.contains(x) {
            state.without(x)
        } else {
            state.with(x)
        };
        if sys.result_unchecked(&neighbour) == *state {
            return Ok(true);
        }
    }
    Ok(false)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPoint {
    pub state: State,
    /// Smallest state other than `state` that maps onto it, if any.
    pub preimage: Option<State>,
}

impl FixedPoint {
    pub fn is_attractor(&self) -> bool {
        self.preimage.is_some()
    }
}

/// All fixed points in ascending order, each classified as attractor or not.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FixedPointReport {
    pub fixed_points: Vec<FixedPoint>,
}

impl FixedPointReport {
    pub fn attractors(&self) -> impl Iterator<Item = &FixedPoint> {
        self.fixed_points.iter().filter(|f| f.is_attractor())
    }

    /// Fixed points that are not attractors.
    pub fn non_attractors(&self) -> impl Iterator<Item = &FixedPoint> {
        self.fixed_points.iter().filter(|f| !f.is_attractor())
    }
}

/// Answer to a decision problem. For existential problems `witness` is the
/// state that answers YES; for universal problems it is the counterexample
/// behind a NO. `preimages` holds states reaching the witness wherever
/// attraction is part of the claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub answer: bool,
    pub witness: Option<State>,
    pub preimages: Vec<State>,
}

impl Verdict {
    fn no() -> Verdict {
        Verdict {
            answer: false,
            witness: None,
            preimages: Vec::new(),
        }
    }

    fn yes() -> Verdict {
        Verdict {
            answer: true,
            witness: None,
            preimages: Vec::new(),
        }
    }
}

struct RawReport {
    fixed: Vec<u64>,
    preimage: Vec<Option<u64>>,
}

impl RawReport {
    fn attractors(&self) -> Vec<(u64, u64)> {
        self.fixed
            .iter()
            .zip(&self.preimage)
            .filter_map(|(&t, p)| p.map(|u| (t, u)))
            .collect()
    }

    fn fixge(&self) -> Vec<u64> {
        self.fixed
            .iter()
            .zip(&self.preimage)
            .filter(|(_, p)| p.is_none())
            .map(|(&t, _)| t)
            .collect()
    }
}

/// Exhaustive state-space analysis, guarded by a size cap.
#[derive(Debug, Clone, Copy)]
pub struct BruteForce {
    cap: usize,
    partitions: usize,
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce {
            cap: DEFAULT_CAP,
            partitions: 0,
        }
    }
}

impl BruteForce {
    pub fn new() -> Self {
        Self::default()
    }

    /// Overrides the largest enumerable `|S|`; values above [`MAX_CAP`] are clamped.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap.min(MAX_CAP);
        self
    }

    /// Number of ranges the state space is split into (0 = one per worker thread).
    pub fn with_partitions(mut self, partitions: usize) -> Self {
        self.partitions = partitions;
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn kernel(&self, sys: &ReactionSystem) -> Result<Kernel> {
        self.check_size(sys.width())?;
        Kernel::new(sys)
    }

    fn check_size(&self, size: usize) -> Result<()> {
        if size > self.cap {
            return Err(Error::Capability {
                what: "background set",
                size,
                cap: self.cap,
                hint: "raise it with --cap or switch to --mode sat/qbf",
            });
        }
        Ok(())
    }

    fn ranges(&self, width: usize) -> Vec<Range<u64>> {
        let wanted = match self.partitions {
            0 => rayon::current_num_threads(),
            p => p,
        };
        let high_bits = (wanted.next_power_of_two().trailing_zeros() as usize).min(width);
        let span = 1u64 << (width - high_bits);
        (0..1u64 << high_bits).map(|i| i * span..(i + 1) * span).collect()
    }

    fn raw_fixed_points(&self, k: &Kernel) -> RawReport {
        let ranges = self.ranges(k.width());
        let fixed: Vec<u64> = ranges
            .par_iter()
            .map(|r| r.clone().filter(|&t| k.res(t) == t).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .concat();
        let per_range: Vec<Vec<Option<u64>>> = ranges
            .par_iter()
            .map(|r| {
                let mut found = vec![None; fixed.len()];
                for u in r.clone() {
                    let t = k.res(u);
                    if t != u {
                        if let Ok(i) = fixed.binary_search(&t) {
                            found[i].get_or_insert(u);
                        }
                    }
                }
                found
            })
            .collect();
        let mut preimage = vec![None; fixed.len()];
        for found in per_range {
            for (slot, f) in preimage.iter_mut().zip(found) {
                if slot.is_none() {
                    *slot = f;
                }
            }
        }
        add_evaluations(2 << k.width());
        RawReport { fixed, preimage }
    }

    /// All states mapped onto `state`, ascending, `state` itself included if fixed.
    pub fn preimages(&self, sys: &ReactionSystem, state: &State) -> Result<Vec<State>> {
        sys.check_state(state)?;
        let k = self.kernel(sys)?;
        let t = state.to_bits().expect("width within cap");
        let found = self
            .ranges(k.width())
            .par_iter()
            .map(|r| r.clone().filter(|&u| k.res(u) == t).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .concat();
        add_evaluations(1 << k.width());
        Ok(found.into_iter().map(|u| State::from_bits(k.width(), u)).collect())
    }

    fn first_preimage_other_than(&self, k: &Kernel, t: u64) -> Option<u64> {
        add_evaluations(1 << k.width());
        self.ranges(k.width())
            .par_iter()
            .find_map_first(|r| r.clone().find(|&u| u != t && k.res(u) == t))
    }

    pub fn is_attractor(&self, sys: &ReactionSystem, state: &State) -> Result<bool> {
        sys.check_state(state)?;
        let k = self.kernel(sys)?;
        let t = state.to_bits().expect("width within cap");
        Ok(k.res(t) == t && self.first_preimage_other_than(&k, t).is_some())
    }

    pub fn enumerate_fixed_points(&self, sys: &ReactionSystem) -> Result<FixedPointReport> {
        let k = self.kernel(sys)?;
        let raw = self.raw_fixed_points(&k);
        let w = k.width();
        Ok(FixedPointReport {
            fixed_points: raw
                .fixed
                .iter()
                .zip(&raw.preimage)
                .map(|(&t, p)| FixedPoint {
                    state: State::from_bits(w, t),
                    preimage: p.map(|u| State::from_bits(w, u)),
                })
                .collect(),
        })
    }

    /// Smallest state on which the two result functions differ.
    pub fn res_eq_counterexample(&self, a: &ReactionSystem, b: &ReactionSystem) -> Result<Option<State>> {
        check_background(a, b)?;
        let ka = self.kernel(a)?;
        let kb = Kernel::new(b)?;
        add_evaluations(2 << ka.width());
        Ok(self
            .ranges(ka.width())
            .par_iter()
            .find_map_first(|r| r.clone().find(|&t| ka.res(t) != kb.res(t)))
            .map(|t| State::from_bits(ka.width(), t)))
    }

    /// Exhaustive injectivity (equivalently bijectivity) test.
    pub fn is_bijective(&self, sys: &ReactionSystem) -> Result<bool> {
        let k = self.kernel(sys)?;
        let w = k.width();
        let seen: Vec<AtomicU64> = (0..(1usize << w).div_ceil(64)).map(|_| AtomicU64::new(0)).collect();
        let collision = AtomicBool::new(false);
        self.ranges(w).par_iter().for_each(|r| {
            for t in r.clone() {
                if collision.load(Ordering::Relaxed) {
                    return;
                }
                let img = k.res(t) as usize;
                let bit = 1u64 << (img % 64);
                if seen[img / 64].fetch_or(bit, Ordering::Relaxed) & bit != 0 {
                    collision.store(true, Ordering::Relaxed);
                    return;
                }
            }
        });
        add_evaluations(1 << w);
        Ok(!collision.load(Ordering::Relaxed))
    }

    /// One edge `T -> res(T)` per state. With `restrict`, only subsets of it
    /// are visited and images are intersected with it.
    pub fn transition_graph(
        &self,
        sys: &ReactionSystem,
        restrict: Option<&State>,
    ) -> Result<Vec<(State, State)>> {
        let universe = match restrict {
            Some(r) => {
                sys.check_state(r)?;
                r.clone()
            }
            None => sys.full_state(),
        };
        let members: Vec<usize> = universe.iter().collect();
        self.check_size(members.len())?;
        let mut edges = Vec::with_capacity(1 << members.len());
        for k in 0u64..1 << members.len() {
            let mut t = sys.empty_state();
            for (bit, &i) in members.iter().enumerate() {
                if k >> bit & 1 == 1 {
                    t.insert(i);
                }
            }
            let image = sys.result_unchecked(&t).intersection(&universe);
            edges.push((t, image));
        }
        Ok(edges)
    }

    /// Pairwise problems; `mode` must be a two-system problem.
    pub fn shared_analysis(&self, a: &ReactionSystem, b: &ReactionSystem, mode: Problem) -> Result<Verdict> {
        if !mode.is_pair() {
            return Err(Error::Precondition(format!("{mode} is not a two-system problem")));
        }
        self.decide(mode, a, Some(b), None)
    }

    /// Decides any [`Problem`] by enumeration. Pair problems need `b`,
    /// given-state problems need `given`.
    pub fn decide(
        &self,
        problem: Problem,
        a: &ReactionSystem,
        b: Option<&ReactionSystem>,
        given: Option<&State>,
    ) -> Result<Verdict> {
        let w = a.width();
        let st = |bits: u64| State::from_bits(w, bits);
        let pair = || -> Result<&ReactionSystem> {
            let b = b.ok_or_else(|| Error::Precondition(format!("{problem} needs two systems")))?;
            check_background(a, b)?;
            Ok(b)
        };
        match problem {
            Problem::ExistsFixpoint => {
                let raw = self.raw_fixed_points(&self.kernel(a)?);
                Ok(match raw.fixed.first() {
                    Some(&t) => Verdict {
                        witness: Some(st(t)),
                        ..Verdict::yes()
                    },
                    None => Verdict::no(),
                })
            }
            Problem::ExistsAttractor => {
                let raw = self.raw_fixed_points(&self.kernel(a)?);
                Ok(match raw.attractors().first() {
                    Some(&(t, u)) => Verdict {
                        answer: true,
                        witness: Some(st(t)),
                        preimages: vec![st(u)],
                    },
                    None => Verdict::no(),
                })
            }
            Problem::ExistsFixge => {
                let raw = self.raw_fixed_points(&self.kernel(a)?);
                Ok(match raw.fixge().first() {
                    Some(&t) => Verdict {
                        witness: Some(st(t)),
                        ..Verdict::yes()
                    },
                    None => Verdict::no(),
                })
            }
            Problem::GivenStateAttractor => {
                let given = given.ok_or_else(|| Error::Precondition(format!("{problem} needs a state")))?;
                a.check_state(given)?;
                let k = self.kernel(a)?;
                let t = given.to_bits().expect("width within cap");
                if k.res(t) != t {
                    return Ok(Verdict::no());
                }
                Ok(match self.first_preimage_other_than(&k, t) {
                    Some(u) => Verdict {
                        answer: true,
                        witness: Some(given.clone()),
                        preimages: vec![st(u)],
                    },
                    None => Verdict::no(),
                })
            }
            Problem::ResEq => {
                let b = pair()?;
                Ok(match self.res_eq_counterexample(a, b)? {
                    Some(t) => Verdict {
                        witness: Some(t),
                        ..Verdict::no()
                    },
                    None => Verdict::yes(),
                })
            }
            Problem::CommonFixpoint
            | Problem::CommonAttractor
            | Problem::CommonFixge
            | Problem::ShareAllFixpoints
            | Problem::ShareAllAttractors
            | Problem::ShareAllFixge => {
                let b = pair()?;
                let ra = self.raw_fixed_points(&self.kernel(a)?);
                let rb = self.raw_fixed_points(&self.kernel(b)?);
                Ok(pair_verdict(problem, &ra, &rb, w))
            }
        }
    }
}

fn pair_verdict(problem: Problem, ra: &RawReport, rb: &RawReport, w: usize) -> Verdict {
    let st = |bits: u64| State::from_bits(w, bits);
    let common = |xs: &[u64], ys: &[u64]| xs.iter().find(|t| ys.binary_search(t).is_ok()).copied();
    let first_difference = |xs: &[u64], ys: &[u64]| {
        let only_x = xs.iter().find(|t| ys.binary_search(t).is_err()).copied();
        let only_y = ys.iter().find(|t| xs.binary_search(t).is_err()).copied();
        match (only_x, only_y) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        }
    };
    let existential = |t: Option<u64>| match t {
        Some(t) => Verdict {
            witness: Some(st(t)),
            ..Verdict::yes()
        },
        None => Verdict::no(),
    };
    let universal = |t: Option<u64>, preimages: Vec<State>| match t {
        Some(t) => Verdict {
            answer: false,
            witness: Some(st(t)),
            preimages,
        },
        None => Verdict::yes(),
    };
    match problem {
        Problem::CommonFixpoint => existential(common(&ra.fixed, &rb.fixed)),
        Problem::CommonFixge => existential(common(&ra.fixge(), &rb.fixge())),
        Problem::CommonAttractor => {
            let (aa, ab) = (ra.attractors(), rb.attractors());
            let found = aa
                .iter()
                .find_map(|&(t, ua)| ab.iter().find(|&&(s, _)| s == t).map(|&(_, ub)| (t, ua, ub)));
            match found {
                Some((t, ua, ub)) => Verdict {
                    answer: true,
                    witness: Some(st(t)),
                    preimages: vec![st(ua), st(ub)],
                },
                None => Verdict::no(),
            }
        }
        Problem::ShareAllFixpoints => universal(first_difference(&ra.fixed, &rb.fixed), Vec::new()),
        Problem::ShareAllFixge => universal(first_difference(&ra.fixge(), &rb.fixge()), Vec::new()),
        Problem::ShareAllAttractors => {
            let (aa, ab) = (ra.attractors(), rb.attractors());
            let ta: Vec<u64> = aa.iter().map(|p| p.0).collect();
            let tb: Vec<u64> = ab.iter().map(|p| p.0).collect();
            let diff = first_difference(&ta, &tb);
            let preimages = diff
                .and_then(|t| aa.iter().chain(&ab).find(|p| p.0 == t))
                .map(|&(_, u)| vec![st(u)])
                .unwrap_or_default();
            universal(diff, preimages)
        }
        _ => unreachable!("not a fixed-point pair problem"),
    }
}

pub(crate) fn check_background(a: &ReactionSystem, b: &ReactionSystem) -> Result<()> {
    if a.same_background(b) {
        Ok(())
    } else {
        Err(Error::BackgroundMismatch)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(entities: &[&str], reactions: &[(&[&str], &[&str], &[&str])]) -> ReactionSystem {
        let mut b = ReactionSystem::builder("t").entities(entities.iter().copied()).unwrap();
        for (r, i, p) in reactions {
            b = b.reaction(r, i, p).unwrap();
        }
        b.build().unwrap()
    }

    fn fig1() -> ReactionSystem {
        sys(
            &["club", "diamond", "spade"],
            &[
                (&[], &["diamond", "spade"], &["club"]),
                (&[], &["club", "spade"], &["club"]),
                (&[], &["club", "diamond"], &["club", "diamond", "spade"]),
            ],
        )
    }

    fn identity(names: &[&str]) -> ReactionSystem {
        let mut b = ReactionSystem::builder("id").entities(names.iter().copied()).unwrap();
        for n in names {
            b = b.reaction(&[n], &[], &[n]).unwrap();
        }
        b.build().unwrap()
    }

    fn constant() -> ReactionSystem {
        sys(&["p"], &[(&[], &[], &["p"])])
    }

    #[test]
    fn orbit_examples() {
        let c = constant();
        let o = orbit(&c, &c.empty_state(), 10).unwrap();
        assert_eq!((o.tail_length, o.cycle_length), (1, Some(1)));

        let f = fig1();
        let o = orbit(&f, &f.empty_state(), 10).unwrap();
        assert_eq!((o.tail_length, o.cycle_length), (0, Some(2)));
        assert_eq!(o.sequence, vec![f.empty_state(), f.full_state()]);

        let o = orbit(&f, &f.state(&["club"]).unwrap(), 10).unwrap();
        assert_eq!((o.tail_length, o.cycle_length), (0, Some(1)));
    }

    #[test]
    fn orbit_truncates() {
        let s = sys(&["a", "b"], &[(&[], &["a"], &["a"]), (&["a"], &["b"], &["b"])]);
        let o = orbit(&s, &s.empty_state(), 1).unwrap();
        assert_eq!(o.cycle_length, None);
        assert_eq!(o.sequence.len(), 2);
        assert!(orbit(&s, &s.empty_state(), 0).is_err());
    }

    #[test]
    fn fixed_point_examples() {
        let c = constant();
        assert!(is_fixed_point(&c, &c.full_state()).unwrap());
        assert!(!is_fixed_point(&c, &c.empty_state()).unwrap());
    }

    #[test]
    fn preimage_examples() {
        let bf = BruteForce::new();
        let c = constant();
        assert_eq!(
            bf.preimages(&c, &c.full_state()).unwrap(),
            vec![c.empty_state(), c.full_state()]
        );
        let id = identity(&["a", "b", "c"]);
        for t in 0..8 {
            let t = State::from_bits(3, t);
            assert_eq!(bf.preimages(&id, &t).unwrap(), vec![t]);
        }
    }

    #[test]
    fn fig1_preimages_of_club() {
        // {club,diamond} disables all three reactions and maps to the empty set.
        let f = fig1();
        let got = BruteForce::new().preimages(&f, &f.state(&["club"]).unwrap()).unwrap();
        let want = vec![f.state(&["club"]).unwrap(), f.state(&["diamond"]).unwrap()];
        assert_eq!(got, want);
        assert!(f.result(&f.state(&["club", "diamond"]).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn attractor_examples() {
        let bf = BruteForce::new();
        let c = constant();
        assert!(bf.is_attractor(&c, &c.full_state()).unwrap());
        let id = identity(&["a", "b"]);
        assert!(!bf.is_attractor(&id, &id.full_state()).unwrap());
        let f = fig1();
        assert!(bf.is_attractor(&f, &f.state(&["club"]).unwrap()).unwrap());
    }

    #[test]
    fn enumerate_identity() {
        let id = identity(&["a", "b"]);
        let r = BruteForce::new().enumerate_fixed_points(&id).unwrap();
        assert_eq!(r.fixed_points.len(), 4);
        assert_eq!(r.non_attractors().count(), 4);
    }

    #[test]
    fn cap_is_enforced() {
        let id = identity(&["a", "b", "c"]);
        let err = BruteForce::new().with_cap(2).enumerate_fixed_points(&id).unwrap_err();
        assert!(matches!(err, Error::Capability { size: 3, cap: 2, .. }));
    }

    #[test]
    fn partitioning_does_not_change_reports() {
        let s = sys(
            &["a", "b", "c", "d", "e"],
            &[
                (&["a"], &["b"], &["a", "c"]),
                (&[], &["d"], &["e"]),
                (&["e"], &[], &["d", "b"]),
                (&["c"], &["e"], &["c"]),
            ],
        );
        let base = BruteForce::new().with_partitions(1).enumerate_fixed_points(&s).unwrap();
        for p in [2, 3, 8, 64] {
            let other = BruteForce::new().with_partitions(p).enumerate_fixed_points(&s).unwrap();
            assert_eq!(base, other);
        }
    }

    #[test]
    fn local_check_examples() {
        let s = sys(&["a", "b"], &[(&["a"], &[], &["a", "b"]), (&["b"], &[], &["b"])]);
        assert!(local_attractor_check(&s, &s.full_state()).unwrap());
        let id = identity(&["a", "b"]);
        for t in 0..4 {
            assert!(!local_attractor_check(&id, &State::from_bits(2, t)).unwrap());
        }
        assert!(matches!(
            local_attractor_check(&s, &s.state(&["a"]).unwrap()),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            local_attractor_check(&fig1(), &fig1().empty_state()),
            Err(Error::WrongClass { .. })
        ));
    }

    #[test]
    fn graph_examples() {
        let bf = BruteForce::new();
        let f = fig1();
        let g = bf.transition_graph(&f, Some(&f.full_state())).unwrap();
        assert_eq!(g.len(), 8);
        assert!(g.contains(&(f.empty_state(), f.full_state())));
        assert!(g.contains(&(f.full_state(), f.empty_state())));
        let club = f.state(&["club"]).unwrap();
        assert!(g.contains(&(club.clone(), club)));

        let e = sys(&["a"], &[]);
        let g = bf.transition_graph(&e, None).unwrap();
        assert_eq!(g, vec![(e.empty_state(), e.empty_state()), (e.full_state(), e.empty_state())]);

        let id = identity(&["a"]);
        let g = bf.transition_graph(&id, None).unwrap();
        assert!(g.iter().all(|(s, t)| s == t));
    }

    #[test]
    fn shared_analysis_reflexive() {
        let bf = BruteForce::new();
        let f = fig1();
        for mode in [Problem::ShareAllFixpoints, Problem::ShareAllAttractors, Problem::ShareAllFixge, Problem::ResEq] {
            assert!(bf.shared_analysis(&f, &f, mode).unwrap().answer, "{mode}");
        }
        assert!(bf.shared_analysis(&f, &f, Problem::ExistsFixpoint).is_err());
        let other = sys(&["a", "b", "c"], &[]);
        assert_eq!(
            bf.shared_analysis(&f, &other, Problem::ResEq),
            Err(Error::BackgroundMismatch)
        );
    }

    #[test]
    fn bijective_examples() {
        let bf = BruteForce::new();
        assert!(bf.is_bijective(&identity(&["a", "b", "c"])).unwrap());
        assert!(!bf.is_bijective(&constant()).unwrap());
        assert!(!bf.is_bijective(&fig1()).unwrap());
    }
}
