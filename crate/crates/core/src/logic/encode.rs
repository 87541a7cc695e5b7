//! Propositional and ∀∃ encodings of the decision problems.
//!
//! Variable layout: state groups first (`t`, then `u`/`ua`/`ub`/`va`/`vb`
//! as the mode needs them), then one `e`/`r` block pair per result map,
//! then Tseitin auxiliaries.

use std::fmt;
use std::str::FromStr;

use super::cnf::{encode_result_map, CnfBuilder, ResultMap};
use crate::dynamics::{check_background, Verdict};
use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::state::State;
use crate::system::ReactionSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    ExistsFixpoint,
    GivenStateAttractor,
    ExistsAttractor,
    CommonFixpoint,
    CommonAttractor,
    ResEqCounterexample,
    SharedFixpointsCounterexample,
    ExistsFixge,
    SharedAttractors,
}

impl Mode {
    pub const ALL: [Mode; 9] = [
        Mode::ExistsFixpoint,
        Mode::GivenStateAttractor,
        Mode::ExistsAttractor,
        Mode::CommonFixpoint,
        Mode::CommonAttractor,
        Mode::ResEqCounterexample,
        Mode::SharedFixpointsCounterexample,
        Mode::ExistsFixge,
        Mode::SharedAttractors,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mode::ExistsFixpoint => "exists-fixpoint",
            Mode::GivenStateAttractor => "given-state-attractor",
            Mode::ExistsAttractor => "exists-attractor",
            Mode::CommonFixpoint => "common-fixpoint",
            Mode::CommonAttractor => "common-attractor",
            Mode::ResEqCounterexample => "res-eq-counterexample",
            Mode::SharedFixpointsCounterexample => "shared-fixpoints-counterexample",
            Mode::ExistsFixge => "exists-fixge",
            Mode::SharedAttractors => "shared-attractors",
        }
    }

    /// The decision problem this mode answers.
    pub fn problem(self) -> Problem {
        match self {
            Mode::ExistsFixpoint => Problem::ExistsFixpoint,
            Mode::GivenStateAttractor => Problem::GivenStateAttractor,
            Mode::ExistsAttractor => Problem::ExistsAttractor,
            Mode::CommonFixpoint => Problem::CommonFixpoint,
            Mode::CommonAttractor => Problem::CommonAttractor,
            Mode::ResEqCounterexample => Problem::ResEq,
            Mode::SharedFixpointsCounterexample => Problem::ShareAllFixpoints,
            Mode::ExistsFixge => Problem::ExistsFixge,
            Mode::SharedAttractors => Problem::ShareAllAttractors,
        }
    }

    /// `None` for the problems that only have a brute-force procedure.
    pub fn for_problem(problem: Problem) -> Option<Mode> {
        Mode::ALL.into_iter().find(|m| m.problem() == problem)
    }

    pub fn is_pair(self) -> bool {
        self.problem().is_pair()
    }

    pub fn is_qbf(self) -> bool {
        matches!(self, Mode::ExistsFixge | Mode::SharedAttractors)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        Mode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown logic mode `{s}`")))
    }
}

/// How `U ≠ T` is expressed in attraction constraints.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum AttractorEncoding {
    /// Disjunction of `u_i ⊕ t_i`.
    #[default]
    Direct,
    /// `¬res(T, U)`: disjunction of `r_i ⊕ u_i` over the result of `T`.
    /// Only equivalent to `U ≠ T` when `T` is a fixed point.
    Reach,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EncodingKind {
    Cnf,
    /// `∀ outer ∃ inner. clauses`.
    ForallExists,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupRole {
    State,
    Enabled,
    Result,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarGroup {
    pub name: String,
    pub role: GroupRole,
    pub vars: Vec<i32>,
}

#[derive(Debug, Clone)]
pub struct EncodedProblem {
    pub mode: Mode,
    pub kind: EncodingKind,
    pub width: usize,
    pub num_vars: usize,
    /// Tseitin definitions; every variable outside the state groups is a
    /// function of the state groups.
    pub defs: Vec<Vec<i32>>,
    pub constraints: Vec<Vec<i32>>,
    pub groups: Vec<VarGroup>,
    /// Universal block (empty for CNF).
    pub outer: Vec<i32>,
    /// Existential state variables of a ∀∃ encoding.
    pub inner_primary: Vec<i32>,
    /// The answer is the negation of the formula's truth value: a model of
    /// a CNF encoding is a counterexample, and a true ∀∃ encoding refutes
    /// an existential question.
    pub negated: bool,
}

/// Outcome of solving an encoding. For CNF, `model` is a satisfying
/// assignment; for ∀∃, it holds the falsifying outer assignment. Index
/// `v - 1` holds variable `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub truth: bool,
    pub model: Option<Vec<bool>>,
}

/// States read from the state groups of a model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub t: State,
    pub others: Vec<(String, State)>,
}

impl Decoded {
    pub fn get(&self, name: &str) -> Option<&State> {
        if name == "t" {
            return Some(&self.t);
        }
        self.others.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }
}

impl EncodedProblem {
    pub fn clauses(&self) -> impl Iterator<Item = &Vec<i32>> {
        self.defs.iter().chain(&self.constraints)
    }

    pub fn num_clauses(&self) -> usize {
        self.defs.len() + self.constraints.len()
    }

    pub fn group(&self, name: &str) -> Option<&VarGroup> {
        self.groups.iter().find(|g| g.name == name)
    }

    pub fn state_groups(&self) -> impl Iterator<Item = &VarGroup> {
        self.groups.iter().filter(|g| g.role == GroupRole::State)
    }

    /// Number of state-group variables: the decision variables of a CNF
    /// encoding.
    pub fn primary_vars(&self) -> usize {
        self.state_groups().map(|g| g.vars.len()).sum()
    }

    /// Reads every state group from `model`, which must cover them.
    pub fn decode(&self, model: &[bool]) -> Result<Decoded> {
        let read = |g: &VarGroup| -> Result<State> {
            let mut s = State::empty(self.width);
            for (i, &v) in g.vars.iter().enumerate() {
                let val = *model
                    .get(v as usize - 1)
                    .ok_or_else(|| Error::Precondition(format!("model does not cover variable {v}")))?;
                if val {
                    s.insert(i);
                }
            }
            Ok(s)
        };
        let mut t = None;
        let mut others = Vec::new();
        for g in self.state_groups() {
            let s = read(g)?;
            if g.name == "t" {
                t = Some(s);
            } else {
                others.push((g.name.clone(), s));
            }
        }
        Ok(Decoded {
            t: t.expect("every encoding has a t-group"),
            others,
        })
    }

    /// Maps a solution to a verdict, re-checking every reported state by
    /// direct evaluation on the original systems.
    pub fn verdict(&self, sol: &Solution, a: &ReactionSystem, b: Option<&ReactionSystem>) -> Result<Verdict> {
        let answer = sol.truth != self.negated;
        let bare = Verdict {
            answer,
            witness: None,
            preimages: Vec::new(),
        };
        let witness_carrier = match self.kind {
            EncodingKind::Cnf => sol.truth,
            EncodingKind::ForallExists => !sol.truth,
        };
        if !witness_carrier {
            return Ok(bare);
        }
        let model = sol
            .model
            .as_ref()
            .ok_or_else(|| Error::Recheck(format!("{}: solver reported no assignment", self.mode)))?;
        let d = self.decode(model)?;
        let get = |n: &str| d.get(n).cloned().expect("group present");
        let b_sys = || b.ok_or_else(|| Error::Precondition(format!("{} needs two systems", self.mode)));
        let t = d.t.clone();
        let preimages = match self.mode {
            Mode::ExistsFixpoint => {
                recheck_fixed(a, &t, "A")?;
                vec![]
            }
            Mode::GivenStateAttractor | Mode::ExistsAttractor => {
                let u = get("u");
                recheck_fixed(a, &t, "A")?;
                recheck_preimage(a, &u, &t, "A")?;
                vec![u]
            }
            Mode::CommonFixpoint => {
                recheck_fixed(a, &t, "A")?;
                recheck_fixed(b_sys()?, &t, "B")?;
                vec![]
            }
            Mode::CommonAttractor => {
                let (ua, ub) = (get("ua"), get("ub"));
                recheck_fixed(a, &t, "A")?;
                recheck_fixed(b_sys()?, &t, "B")?;
                recheck_preimage(a, &ua, &t, "A")?;
                recheck_preimage(b_sys()?, &ub, &t, "B")?;
                vec![ua, ub]
            }
            Mode::ResEqCounterexample => {
                if a.result(&t)? == b_sys()?.result(&t)? {
                    return Err(Error::Recheck(format!(
                        "results agree on {}",
                        a.format_state(&t)
                    )));
                }
                vec![]
            }
            Mode::SharedFixpointsCounterexample => {
                let fa = a.result(&t)? == t;
                let fb = b_sys()?.result(&t)? == t;
                if fa == fb {
                    return Err(Error::Recheck(format!(
                        "{} is fixed in both or neither",
                        a.format_state(&t)
                    )));
                }
                vec![]
            }
            Mode::ExistsFixge => {
                recheck_fixed(a, &t, "A")?;
                vec![]
            }
            Mode::SharedAttractors => {
                let b = b_sys()?;
                let (ua, ub) = (get("ua"), get("ub"));
                let holds = |s: &ReactionSystem, u: &State| -> Result<bool> {
                    Ok(s.result(&t)? == t && s.result(u)? == t && *u != t)
                };
                if holds(a, &ua)? {
                    vec![ua]
                } else if holds(b, &ub)? {
                    vec![ub]
                } else {
                    return Err(Error::Recheck(format!(
                        "{} is not attracted in either system by the reported preimages",
                        a.format_state(&t)
                    )));
                }
            }
        };
        Ok(Verdict {
            answer,
            witness: Some(t),
            preimages,
        })
    }
}

fn recheck_fixed(sys: &ReactionSystem, t: &State, label: &str) -> Result<()> {
    if sys.result(t)? != *t {
        return Err(Error::Recheck(format!(
            "{} is not a fixed point of {label}",
            sys.format_state(t)
        )));
    }
    Ok(())
}

fn recheck_preimage(sys: &ReactionSystem, u: &State, t: &State, label: &str) -> Result<()> {
    if u == t || sys.result(u)? != *t {
        return Err(Error::Recheck(format!(
            "{} is not a proper preimage of {} in {label}",
            sys.format_state(u),
            sys.format_state(t)
        )));
    }
    Ok(())
}

struct Enc {
    cnf: CnfBuilder,
    groups: Vec<VarGroup>,
    width: usize,
}

impl Enc {
    fn state(&mut self, name: &str) -> Vec<i32> {
        let vars = self.cnf.new_vars(self.width);
        self.groups.push(VarGroup {
            name: name.into(),
            role: GroupRole::State,
            vars: vars.clone(),
        });
        vars
    }

    fn map(&mut self, sys: &ReactionSystem, label: &str, of: &str, t: &[i32]) -> ResultMap {
        let m = encode_result_map(&mut self.cnf, sys, t);
        self.groups.push(VarGroup {
            name: format!("e[{label},{of}]"),
            role: GroupRole::Enabled,
            vars: m.e.clone(),
        });
        self.groups.push(VarGroup {
            name: format!("r[{label},{of}]"),
            role: GroupRole::Result,
            vars: m.r.clone(),
        });
        m
    }

    /// Gate for `U ≠ T` under the chosen encoding; `rt` is the result of `T`.
    fn differs(&mut self, enc: AttractorEncoding, u: &[i32], t: &[i32], rt: &[i32]) -> i32 {
        match enc {
            AttractorEncoding::Direct => self.cnf.vec_neq(u, t),
            AttractorEncoding::Reach => self.cnf.vec_neq(u, rt),
        }
    }

    /// Gate for "`T` is fixed and `U` is a proper preimage of `T`".
    fn attracted(&mut self, enc: AttractorEncoding, rt: &[i32], ru: &[i32], u: &[i32], t: &[i32]) -> i32 {
        let fix = self.cnf.vec_eq(rt, t);
        let reach = self.cnf.vec_eq(ru, t);
        let diff = self.differs(enc, u, t, rt);
        self.cnf.and(&[fix, reach, diff])
    }

    fn assert_attracted(&mut self, enc: AttractorEncoding, rt: &[i32], ru: &[i32], u: &[i32], t: &[i32]) {
        self.cnf.assert_vec_eq(rt, t);
        self.cnf.assert_vec_eq(ru, t);
        let diff = self.differs(enc, u, t, rt);
        self.cnf.assert_clause(vec![diff]);
    }
}

/// Encodes `mode` with the default attractor encoding.
pub fn encode_problem(
    mode: Mode,
    a: &ReactionSystem,
    b: Option<&ReactionSystem>,
    given: Option<&State>,
) -> Result<EncodedProblem> {
    encode_problem_with(mode, a, b, given, AttractorEncoding::Direct)
}

pub fn encode_problem_with(
    mode: Mode,
    a: &ReactionSystem,
    b: Option<&ReactionSystem>,
    given: Option<&State>,
    att: AttractorEncoding,
) -> Result<EncodedProblem> {
    let b = match (mode.is_pair(), b) {
        (true, Some(b)) => {
            check_background(a, b)?;
            Some(b)
        }
        (true, None) => return Err(Error::Precondition(format!("{mode} needs two systems"))),
        (false, Some(_)) => return Err(Error::Precondition(format!("{mode} takes a single system"))),
        (false, None) => None,
    };
    match (mode, given) {
        (Mode::GivenStateAttractor, None) => {
            return Err(Error::Precondition(format!("{mode} needs a state")));
        }
        (Mode::GivenStateAttractor, Some(g)) => a.check_state(g)?,
        (_, Some(_)) => return Err(Error::Precondition(format!("{mode} takes no state"))),
        _ => {}
    }
    let w = a.width();
    let mut enc = Enc {
        cnf: CnfBuilder::new(),
        groups: Vec::new(),
        width: w,
    };
    let mut outer = Vec::new();
    let mut inner_primary = Vec::new();
    let (kind, negated) = match mode {
        Mode::ExistsFixpoint => {
            let t = enc.state("t");
            let rt = enc.map(a, "A", "t", &t).r;
            enc.cnf.assert_vec_eq(&rt, &t);
            (EncodingKind::Cnf, false)
        }
        Mode::GivenStateAttractor | Mode::ExistsAttractor => {
            let t = enc.state("t");
            let u = enc.state("u");
            if let Some(g) = given {
                for (i, &v) in t.iter().enumerate() {
                    enc.cnf.assert_clause(vec![if g.contains(i) { v } else { -v }]);
                }
            }
            let rt = enc.map(a, "A", "t", &t).r;
            let ru = enc.map(a, "A", "u", &u).r;
            enc.assert_attracted(att, &rt, &ru, &u, &t);
            (EncodingKind::Cnf, false)
        }
        Mode::CommonFixpoint => {
            let b = b.expect("pair checked");
            let t = enc.state("t");
            let ra = enc.map(a, "A", "t", &t).r;
            let rb = enc.map(b, "B", "t", &t).r;
            enc.cnf.assert_vec_eq(&ra, &t);
            enc.cnf.assert_vec_eq(&rb, &t);
            (EncodingKind::Cnf, false)
        }
        Mode::CommonAttractor => {
            let b = b.expect("pair checked");
            let t = enc.state("t");
            let ua = enc.state("ua");
            let ub = enc.state("ub");
            let rat = enc.map(a, "A", "t", &t).r;
            let rbt = enc.map(b, "B", "t", &t).r;
            let rau = enc.map(a, "A", "ua", &ua).r;
            let rbu = enc.map(b, "B", "ub", &ub).r;
            enc.assert_attracted(att, &rat, &rau, &ua, &t);
            enc.assert_attracted(att, &rbt, &rbu, &ub, &t);
            (EncodingKind::Cnf, false)
        }
        Mode::ResEqCounterexample => {
            let b = b.expect("pair checked");
            let t = enc.state("t");
            let ra = enc.map(a, "A", "t", &t).r;
            let rb = enc.map(b, "B", "t", &t).r;
            enc.cnf.assert_vec_neq(&ra, &rb);
            (EncodingKind::Cnf, true)
        }
        Mode::SharedFixpointsCounterexample => {
            let b = b.expect("pair checked");
            let t = enc.state("t");
            let ra = enc.map(a, "A", "t", &t).r;
            let rb = enc.map(b, "B", "t", &t).r;
            let fa = enc.cnf.vec_eq(&ra, &t);
            let fb = enc.cnf.vec_eq(&rb, &t);
            let x = enc.cnf.xor(fa, fb);
            enc.cnf.assert_clause(vec![x]);
            (EncodingKind::Cnf, true)
        }
        Mode::ExistsFixge => {
            // ∀t ∃u. ¬fix(t) ∨ (res(u) = t ∧ u ≠ t): true iff no fixed
            // point is a non-attractor.
            let t = enc.state("t");
            let u = enc.state("u");
            let rt = enc.map(a, "A", "t", &t).r;
            let ru = enc.map(a, "A", "u", &u).r;
            let fix = enc.cnf.vec_eq(&rt, &t);
            let reach = enc.cnf.vec_eq(&ru, &t);
            let diff = enc.differs(att, &u, &t, &rt);
            enc.cnf.assert_clause(vec![-fix, reach]);
            enc.cnf.assert_clause(vec![-fix, diff]);
            outer = t;
            inner_primary = u;
            (EncodingKind::ForallExists, true)
        }
        Mode::SharedAttractors => {
            // ∀t,ua,ub ∃va,vb. (attA(t,ua) → attB(t,vb)) ∧ (attB(t,ub) → attA(t,va)).
            let b = b.expect("pair checked");
            let t = enc.state("t");
            let ua = enc.state("ua");
            let ub = enc.state("ub");
            let va = enc.state("va");
            let vb = enc.state("vb");
            let rat = enc.map(a, "A", "t", &t).r;
            let rbt = enc.map(b, "B", "t", &t).r;
            let rau = enc.map(a, "A", "ua", &ua).r;
            let rbu = enc.map(b, "B", "ub", &ub).r;
            let rav = enc.map(a, "A", "va", &va).r;
            let rbv = enc.map(b, "B", "vb", &vb).r;
            let pa = enc.attracted(att, &rat, &rau, &ua, &t);
            let pb = enc.attracted(att, &rbt, &rbu, &ub, &t);
            let qa = enc.attracted(att, &rat, &rav, &va, &t);
            let qb = enc.attracted(att, &rbt, &rbv, &vb, &t);
            enc.cnf.assert_clause(vec![-pa, qb]);
            enc.cnf.assert_clause(vec![-pb, qa]);
            outer = [t, ua, ub].concat();
            inner_primary = [va, vb].concat();
            (EncodingKind::ForallExists, false)
        }
    };
    let Enc { cnf, groups, .. } = enc;
    let (num_vars, defs, constraints) = cnf.into_parts();
    Ok(EncodedProblem {
        mode,
        kind,
        width: w,
        num_vars,
        defs,
        constraints,
        groups,
        outer,
        inner_primary,
        negated,
    })
}
