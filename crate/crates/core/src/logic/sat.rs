//! A small CDCL solver: two watched literals, first-UIP learning, activity
//! ordering with a preferred variable set, phase saving and geometric
//! restarts. Clauses may be added between calls; assumptions are decided
//! first.

/// Internal literal: `2 * var + negated`, var 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Lit(u32);

impl Lit {
    fn from_dimacs(l: i32) -> Lit {
        debug_assert!(l != 0);
        Lit(((l.unsigned_abs() - 1) << 1) | (l < 0) as u32)
    }

    fn var(self) -> usize {
        (self.0 >> 1) as usize
    }

    fn neg(self) -> Lit {
        Lit(self.0 ^ 1)
    }

    fn is_neg(self) -> bool {
        self.0 & 1 == 1
    }

    fn idx(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatResult {
    /// `model[v-1]` is the value of DIMACS variable `v`.
    Sat(Vec<bool>),
    Unsat,
}

impl SatResult {
    pub fn is_sat(&self) -> bool {
        matches!(self, SatResult::Sat(_))
    }
}

#[derive(Debug, Clone)]
pub struct Solver {
    clauses: Vec<Vec<Lit>>,
    watches: Vec<Vec<usize>>,
    value: Vec<Option<bool>>,
    level: Vec<usize>,
    reason: Vec<Option<usize>>,
    trail: Vec<Lit>,
    trail_lim: Vec<usize>,
    qhead: usize,
    activity: Vec<f64>,
    var_inc: f64,
    preferred: Vec<bool>,
    phase: Vec<bool>,
    seen: Vec<bool>,
    ok: bool,
}

impl Solver {
    pub fn new(num_vars: usize) -> Solver {
        let mut s = Solver {
            clauses: Vec::new(),
            watches: Vec::new(),
            value: Vec::new(),
            level: Vec::new(),
            reason: Vec::new(),
            trail: Vec::new(),
            trail_lim: Vec::new(),
            qhead: 0,
            activity: Vec::new(),
            var_inc: 1.0,
            preferred: Vec::new(),
            phase: Vec::new(),
            seen: Vec::new(),
            ok: true,
        };
        s.reserve(num_vars);
        s
    }

    pub fn num_vars(&self) -> usize {
        self.value.len()
    }

    /// Grows the variable range to at least `num_vars`.
    pub fn reserve(&mut self, num_vars: usize) {
        while self.value.len() < num_vars {
            self.value.push(None);
            self.level.push(0);
            self.reason.push(None);
            self.activity.push(0.0);
            self.preferred.push(false);
            self.phase.push(false);
            self.seen.push(false);
            self.watches.push(Vec::new());
            self.watches.push(Vec::new());
        }
    }

    /// Decisions pick unassigned preferred variables before any other.
    pub fn prefer(&mut self, vars: impl IntoIterator<Item = i32>) {
        for v in vars {
            let v = v.unsigned_abs() as usize;
            self.reserve(v);
            self.preferred[v - 1] = true;
        }
    }

    pub fn add_clause(&mut self, clause: &[i32]) {
        if !self.ok {
            return;
        }
        self.backtrack(0);
        let mut lits: Vec<Lit> = Vec::with_capacity(clause.len());
        for &l in clause {
            self.reserve(l.unsigned_abs() as usize);
            let lit = Lit::from_dimacs(l);
            match self.lit_value(lit) {
                Some(true) => return,
                Some(false) => continue,
                None => {}
            }
            if lits.contains(&lit.neg()) {
                return;
            }
            if !lits.contains(&lit) {
                lits.push(lit);
            }
        }
        match lits.len() {
            0 => self.ok = false,
            1 => {
                self.enqueue(lits[0], None);
                if self.propagate().is_some() {
                    self.ok = false;
                }
            }
            _ => {
                self.attach(lits);
            }
        }
    }

    pub fn solve(&mut self) -> SatResult {
        self.solve_with(&[])
    }

    /// Solves under `assumptions` (DIMACS literals). An UNSAT answer may be
    /// due to the assumptions alone.
    pub fn solve_with(&mut self, assumptions: &[i32]) -> SatResult {
        if !self.ok {
            return SatResult::Unsat;
        }
        for &a in assumptions {
            self.reserve(a.unsigned_abs() as usize);
        }
        let assumptions: Vec<Lit> = assumptions.iter().map(|&a| Lit::from_dimacs(a)).collect();
        self.backtrack(0);
        if self.propagate().is_some() {
            self.ok = false;
            return SatResult::Unsat;
        }
        let mut conflicts = 0u64;
        let mut restart_at = 100u64;
        loop {
            if let Some(confl) = self.propagate() {
                conflicts += 1;
                if self.trail_lim.is_empty() {
                    self.ok = false;
                    return SatResult::Unsat;
                }
                let (learnt, bt) = self.analyze(confl);
                self.backtrack(bt);
                if learnt.len() == 1 {
                    self.enqueue(learnt[0], None);
                } else {
                    let first = learnt[0];
                    let ci = self.attach(learnt);
                    self.enqueue(first, Some(ci));
                }
                self.var_inc *= 1.05;
                if self.var_inc > 1e100 {
                    self.activity.iter_mut().for_each(|a| *a *= 1e-100);
                    self.var_inc *= 1e-100;
                }
                continue;
            }
            if conflicts >= restart_at {
                restart_at = restart_at + restart_at / 2;
                self.backtrack(0);
                continue;
            }
            let level = self.trail_lim.len();
            if level < assumptions.len() {
                let a = assumptions[level];
                match self.lit_value(a) {
                    Some(true) => self.trail_lim.push(self.trail.len()),
                    Some(false) => {
                        self.backtrack(0);
                        return SatResult::Unsat;
                    }
                    None => {
                        self.trail_lim.push(self.trail.len());
                        self.enqueue(a, None);
                    }
                }
                continue;
            }
            match self.pick_branch() {
                Some(v) => {
                    self.trail_lim.push(self.trail.len());
                    let lit = Lit(((v as u32) << 1) | (!self.phase[v]) as u32);
                    self.enqueue(lit, None);
                }
                None => {
                    let model = self.value.iter().map(|v| v.unwrap_or(false)).collect();
                    self.backtrack(0);
                    return SatResult::Sat(model);
                }
            }
        }
    }

    fn lit_value(&self, l: Lit) -> Option<bool> {
        self.value[l.var()].map(|v| v != l.is_neg())
    }

    fn attach(&mut self, lits: Vec<Lit>) -> usize {
        let ci = self.clauses.len();
        self.watches[lits[0].idx()].push(ci);
        self.watches[lits[1].idx()].push(ci);
        self.clauses.push(lits);
        ci
    }

    fn enqueue(&mut self, l: Lit, reason: Option<usize>) {
        let v = l.var();
        self.value[v] = Some(!l.is_neg());
        self.level[v] = self.trail_lim.len();
        self.reason[v] = reason;
        self.trail.push(l);
    }

    fn backtrack(&mut self, level: usize) {
        if self.trail_lim.len() <= level {
            return;
        }
        let keep = self.trail_lim[level];
        for l in self.trail.drain(keep..) {
            let v = l.var();
            self.phase[v] = !l.is_neg();
            self.value[v] = None;
            self.reason[v] = None;
        }
        self.trail_lim.truncate(level);
        self.qhead = self.qhead.min(keep);
    }

    fn propagate(&mut self) -> Option<usize> {
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            let false_lit = p.neg();
            let watching = std::mem::take(&mut self.watches[false_lit.idx()]);
            let mut kept = Vec::with_capacity(watching.len());
            let mut conflict = None;
            let mut it = watching.into_iter();
            for ci in it.by_ref() {
                let clause = &mut self.clauses[ci];
                if clause[0] == false_lit {
                    clause.swap(0, 1);
                }
                let first = clause[0];
                if self.value[first.var()].map(|v| v != first.is_neg()) == Some(true) {
                    kept.push(ci);
                    continue;
                }
                let mut moved = false;
                for k in 2..clause.len() {
                    let l = clause[k];
                    if self.value[l.var()].map(|v| v != l.is_neg()) != Some(false) {
                        clause.swap(1, k);
                        self.watches[clause[1].idx()].push(ci);
                        moved = true;
                        break;
                    }
                }
                if moved {
                    continue;
                }
                kept.push(ci);
                match self.value[first.var()].map(|v| v != first.is_neg()) {
                    Some(false) => {
                        conflict = Some(ci);
                        break;
                    }
                    _ => self.enqueue(first, Some(ci)),
                }
            }
            kept.extend(it);
            self.watches[false_lit.idx()] = kept;
            if conflict.is_some() {
                self.qhead = self.trail.len();
                return conflict;
            }
        }
        None
    }

    fn analyze(&mut self, conflict: usize) -> (Vec<Lit>, usize) {
        let current = self.trail_lim.len();
        let mut learnt = vec![Lit(0)];
        let mut counter = 0usize;
        let mut p: Option<Lit> = None;
        let mut idx = self.trail.len();
        let mut clause = conflict;
        loop {
            for k in 0..self.clauses[clause].len() {
                let q = self.clauses[clause][k];
                if Some(q) == p {
                    continue;
                }
                let v = q.var();
                if !self.seen[v] && self.level[v] > 0 {
                    self.seen[v] = true;
                    self.activity[v] += self.var_inc;
                    if self.level[v] == current {
                        counter += 1;
                    } else {
                        learnt.push(q);
                    }
                }
            }
            loop {
                idx -= 1;
                if self.seen[self.trail[idx].var()] {
                    break;
                }
            }
            let lit = self.trail[idx];
            self.seen[lit.var()] = false;
            counter -= 1;
            p = Some(lit);
            if counter == 0 {
                break;
            }
            clause = self.reason[lit.var()].expect("implied literal has a reason");
        }
        learnt[0] = p.expect("conflict at a decision level").neg();
        for l in &learnt[1..] {
            self.seen[l.var()] = false;
        }
        let mut bt = 0;
        if learnt.len() > 1 {
            let mut max_i = 1;
            for i in 2..learnt.len() {
                if self.level[learnt[i].var()] > self.level[learnt[max_i].var()] {
                    max_i = i;
                }
            }
            learnt.swap(1, max_i);
            bt = self.level[learnt[1].var()];
        }
        (learnt, bt)
    }

    fn pick_branch(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.value.len() {
            if self.value[v].is_some() {
                continue;
            }
            best = match best {
                None => Some(v),
                Some(b) => {
                    let key = |x: usize| (self.preferred[x], self.activity[x]);
                    if key(v) > key(b) {
                        Some(v)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        best
    }
}

/// Convenience: solves a clause list from scratch.
pub fn solve_clauses(num_vars: usize, clauses: &[Vec<i32>], preferred: &[i32]) -> SatResult {
    let mut s = Solver::new(num_vars);
    s.prefer(preferred.iter().copied());
    for c in clauses {
        s.add_clause(c);
    }
    s.solve()
}
