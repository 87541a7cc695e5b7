//! SAT and 2QBF back end for the decision problems.

pub mod cnf;
pub mod dimacs;
pub mod encode;
pub mod external;
pub mod qbf;
pub mod sat;

pub use encode::{
    encode_problem, encode_problem_with, AttractorEncoding, Decoded, EncodedProblem, EncodingKind, GroupRole,
    Mode, Solution, VarGroup,
};
pub use external::solve_external;

use crate::dynamics::Verdict;
use crate::error::{Error, Result};
use crate::formula::{Formula, FormulaKind};
use crate::state::State;
use crate::system::ReactionSystem;
use qbf::{solve_forall_exists, ForallExists, QbfResult};
use sat::{solve_clauses, SatResult};

pub const DEFAULT_CNF_CAP: usize = 40;
pub const DEFAULT_QBF_OUTER_CAP: usize = 24;

/// Size limits of the internal solver. The CNF cap counts decision
/// variables (state groups, or every variable of a plain formula); Tseitin
/// auxiliaries are determined by them and do not count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub cnf_cap: usize,
    pub qbf_outer_cap: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            cnf_cap: DEFAULT_CNF_CAP,
            qbf_outer_cap: DEFAULT_QBF_OUTER_CAP,
        }
    }
}

impl SolveOptions {
    fn check(&self, kind: EncodingKind, primary: usize, outer: usize) -> Result<()> {
        match kind {
            EncodingKind::Cnf if primary > self.cnf_cap => Err(Error::Capability {
                what: "propositional encoding",
                size: primary,
                cap: self.cnf_cap,
                hint: "raise the cap or use an external solver",
            }),
            EncodingKind::ForallExists if outer > self.qbf_outer_cap => Err(Error::Capability {
                what: "universal block",
                size: outer,
                cap: self.qbf_outer_cap,
                hint: "raise the cap or use an external QBF solver",
            }),
            _ => Ok(()),
        }
    }
}

/// Solves an encoding with the internal solvers.
pub fn solve_brute(p: &EncodedProblem) -> Result<Solution> {
    solve_brute_with(p, SolveOptions::default())
}

pub fn solve_brute_with(p: &EncodedProblem, opts: SolveOptions) -> Result<Solution> {
    opts.check(p.kind, p.primary_vars(), p.outer.len())?;
    match p.kind {
        EncodingKind::Cnf => {
            let clauses: Vec<Vec<i32>> = p.clauses().cloned().collect();
            let preferred: Vec<i32> = p.state_groups().flat_map(|g| g.vars.iter().copied()).collect();
            Ok(match solve_clauses(p.num_vars, &clauses, &preferred) {
                SatResult::Sat(m) => Solution {
                    truth: true,
                    model: Some(m),
                },
                SatResult::Unsat => Solution {
                    truth: false,
                    model: None,
                },
            })
        }
        EncodingKind::ForallExists => {
            let q = ForallExists {
                num_vars: p.num_vars,
                outer: &p.outer,
                inner_primary: &p.inner_primary,
                defs: &p.defs,
                constraints: &p.constraints,
            };
            Ok(from_qbf(p.num_vars, solve_forall_exists(&q).0))
        }
    }
}

fn from_qbf(num_vars: usize, r: QbfResult) -> Solution {
    match r {
        QbfResult::True => Solution {
            truth: true,
            model: None,
        },
        QbfResult::False(x) => {
            let mut m = vec![false; num_vars];
            for (v, b) in x {
                m[v as usize - 1] = b;
            }
            Solution {
                truth: false,
                model: Some(m),
            }
        }
    }
}

/// Encodes, solves internally and re-checks.
pub fn decide(mode: Mode, a: &ReactionSystem, b: Option<&ReactionSystem>, given: Option<&State>) -> Result<Verdict> {
    decide_with(mode, a, b, given, AttractorEncoding::Direct, SolveOptions::default())
}

pub fn decide_with(
    mode: Mode,
    a: &ReactionSystem,
    b: Option<&ReactionSystem>,
    given: Option<&State>,
    att: AttractorEncoding,
    opts: SolveOptions,
) -> Result<Verdict> {
    let p = encode_problem_with(mode, a, b, given, att)?;
    let sol = solve_brute_with(&p, opts)?;
    p.verdict(&sol, a, b)
}

/// Solves a CNF formula, or a `∀X ∃Y` CNF when it carries a prefix. For
/// the quantified case a false result carries the universal counterexample.
pub fn solve_formula(f: &Formula, opts: SolveOptions) -> Result<Solution> {
    f.require_kind(FormulaKind::Cnf)?;
    let clauses: Vec<Vec<i32>> = f
        .clauses()
        .iter()
        .map(|c| c.iter().map(|l| l.value()).collect())
        .collect();
    let n = f.num_vars();
    if !f.is_quantified() {
        opts.check(EncodingKind::Cnf, n, 0)?;
        return Ok(match solve_clauses(n, &clauses, &[]) {
            SatResult::Sat(m) => Solution {
                truth: true,
                model: Some(m),
            },
            SatResult::Unsat => Solution {
                truth: false,
                model: None,
            },
        });
    }
    let outer: Vec<i32> = f.universal_vars().iter().map(|&v| v as i32).collect();
    let inner: Vec<i32> = f.existential_vars().iter().map(|&v| v as i32).collect();
    opts.check(EncodingKind::ForallExists, 0, outer.len())?;
    let q = ForallExists {
        num_vars: n,
        outer: &outer,
        inner_primary: &inner,
        defs: &[],
        constraints: &clauses,
    };
    Ok(from_qbf(n, solve_forall_exists(&q).0))
}

#[cfg(test)]
mod tests;
