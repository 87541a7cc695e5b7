//! Counterexample-guided solving of `∀X ∃Y. defs ∧ constraints`.
//!
//! `defs` must define every inner variable outside `inner_primary` as a
//! function of `X` and `inner_primary` (Tseitin definitions). A refinement
//! for an inner solution `y*` adds a fresh copy of the definitions with the
//! primary inner variables fixed to `y*` and asserts that some constraint
//! fails. Without such definitions, pass everything as constraints and all
//! inner variables as primary.

use std::collections::HashMap;

use super::sat::{SatResult, Solver};

#[derive(Debug, Clone)]
pub struct ForallExists<'a> {
    pub num_vars: usize,
    pub outer: &'a [i32],
    pub inner_primary: &'a [i32],
    pub defs: &'a [Vec<i32>],
    pub constraints: &'a [Vec<i32>],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QbfResult {
    True,
    /// An assignment to the outer block (`(var, value)`, in block order)
    /// with no inner extension.
    False(Vec<(i32, bool)>),
}

impl QbfResult {
    pub fn is_true(&self) -> bool {
        matches!(self, QbfResult::True)
    }
}

/// Statistics of one CEGAR run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CegarStats {
    pub refinements: usize,
}

pub fn solve_forall_exists(q: &ForallExists<'_>) -> (QbfResult, CegarStats) {
    let mut inner = Solver::new(q.num_vars);
    inner.prefer(q.inner_primary.iter().copied());
    for c in q.defs.iter().chain(q.constraints) {
        inner.add_clause(c);
    }
    let mut cand = Solver::new(q.num_vars);
    cand.prefer(q.outer.iter().copied());
    let mut next_var = q.num_vars as i32;
    let mut stats = CegarStats::default();
    let primary: HashMap<i32, usize> = q.inner_primary.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let outer: std::collections::HashSet<i32> = q.outer.iter().copied().collect();
    loop {
        let x = match cand.solve() {
            SatResult::Unsat => return (QbfResult::True, stats),
            SatResult::Sat(m) => q
                .outer
                .iter()
                .map(|&v| (v, m[v as usize - 1]))
                .collect::<Vec<_>>(),
        };
        let assumptions: Vec<i32> = x.iter().map(|&(v, b)| if b { v } else { -v }).collect();
        let y = match inner.solve_with(&assumptions) {
            SatResult::Unsat => return (QbfResult::False(x), stats),
            SatResult::Sat(m) => m,
        };
        stats.refinements += 1;
        // Substitution for the refinement copy: outer vars stay, primary
        // inner vars become constants, other inner vars get fresh copies.
        let mut fresh: HashMap<i32, i32> = HashMap::new();
        let mut subst = |lit: i32| -> Result<i32, bool> {
            let v = lit.abs();
            let sign = lit > 0;
            if outer.contains(&v) {
                return Ok(lit);
            }
            if primary.contains_key(&v) {
                return Err(y[v as usize - 1] == sign);
            }
            let c = *fresh.entry(v).or_insert_with(|| {
                next_var += 1;
                next_var
            });
            Ok(if sign { c } else { -c })
        };
        let mut copy_clause = |clause: &[i32]| -> Option<Vec<i32>> {
            let mut out = Vec::with_capacity(clause.len());
            for &l in clause {
                match subst(l) {
                    Ok(m) => out.push(m),
                    Err(true) => return None,
                    Err(false) => {}
                }
            }
            Some(out)
        };
        let mut new_clauses: Vec<Vec<i32>> = q.defs.iter().filter_map(|c| copy_clause(c)).collect();
        let mut falsified: Vec<Vec<i32>> = Vec::new();
        for c in q.constraints {
            if let Some(lits) = copy_clause(c) {
                falsified.push(lits);
            }
        }
        let mut selectors = Vec::with_capacity(falsified.len());
        for lits in falsified {
            next_var += 1;
            let s = next_var;
            selectors.push(s);
            for l in lits {
                new_clauses.push(vec![-s, -l]);
            }
        }
        new_clauses.push(selectors);
        cand.reserve(next_var as usize);
        for c in &new_clauses {
            cand.add_clause(c);
        }
    }
}

/// Decides `∀X ∃Y` by enumerating `X` and solving for `Y`. Reference
/// implementation for tests; exponential in `|X|`.
pub fn solve_forall_exists_by_enumeration(q: &ForallExists<'_>) -> QbfResult {
    let mut inner = Solver::new(q.num_vars);
    for c in q.defs.iter().chain(q.constraints) {
        inner.add_clause(c);
    }
    for bits in 0u64..1 << q.outer.len() {
        let x: Vec<(i32, bool)> = q
            .outer
            .iter()
            .enumerate()
            .map(|(k, &v)| (v, bits >> k & 1 == 1))
            .collect();
        let assumptions: Vec<i32> = x.iter().map(|&(v, b)| if b { v } else { -v }).collect();
        if inner.solve_with(&assumptions) == SatResult::Unsat {
            return QbfResult::False(x);
        }
    }
    QbfResult::True
}
