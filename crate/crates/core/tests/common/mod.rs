//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's evaluators; states are plain `u64` bit patterns.
#![allow(dead_code)]

use rand::Rng;
use rsfix::reductions::FormulaQuestion;
use rsfix::{Formula, ReactionSystem, State};

pub fn bits(s: &State) -> u64 {
    s.iter().fold(0, |acc, i| acc | 1 << i)
}

pub fn state(w: usize, b: u64) -> State {
    State::from_indices(w, (0..w).filter(|i| b >> i & 1 == 1)).unwrap()
}

/// Reactions as `(reactants, inhibitors, products)` bit patterns.
pub fn masks(sys: &ReactionSystem) -> Vec<(u64, u64, u64)> {
    sys.reactions()
        .iter()
        .map(|r| (bits(&r.reactants), bits(&r.inhibitors), bits(&r.products)))
        .collect()
}

pub struct Naive {
    pub w: usize,
    rs: Vec<(u64, u64, u64)>,
}

impl Naive {
    pub fn new(sys: &ReactionSystem) -> Naive {
        Naive {
            w: sys.width(),
            rs: masks(sys),
        }
    }

    pub fn res(&self, t: u64) -> u64 {
        let mut out = 0;
        for &(r, i, p) in &self.rs {
            if t & r == r && t & i == 0 {
                out |= p;
            }
        }
        out
    }

    pub fn states(&self) -> std::ops::Range<u64> {
        0..1u64 << self.w
    }

    pub fn is_fixed(&self, t: u64) -> bool {
        self.res(t) == t
    }

    pub fn fixed_points(&self) -> Vec<u64> {
        self.states().filter(|&t| self.is_fixed(t)).collect()
    }

    pub fn is_attractor(&self, t: u64) -> bool {
        self.is_fixed(t) && self.states().any(|u| u != t && self.res(u) == t)
    }

    pub fn attractors(&self) -> Vec<u64> {
        self.fixed_points().into_iter().filter(|&t| self.is_attractor(t)).collect()
    }

    pub fn fixge(&self) -> Vec<u64> {
        self.fixed_points().into_iter().filter(|&t| !self.is_attractor(t)).collect()
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; 1 << self.w];
        self.states().all(|t| !std::mem::replace(&mut seen[self.res(t) as usize], true))
    }
}

/// Literal truth under `a`, where bit `v-1` holds `x_v`.
fn lit(a: u64, l: i32) -> bool {
    (a >> (l.unsigned_abs() - 1) & 1 == 1) == (l > 0)
}

pub fn raw_clauses(f: &Formula) -> Vec<Vec<i32>> {
    f.clauses().iter().map(|c| c.iter().map(|l| l.value()).collect()).collect()
}

pub fn cnf_true(clauses: &[Vec<i32>], a: u64) -> bool {
    clauses.iter().all(|c| c.iter().any(|&l| lit(a, l)))
}

pub fn dnf_true(terms: &[Vec<i32>], a: u64) -> bool {
    terms.iter().any(|c| c.iter().all(|&l| lit(a, l)))
}

pub fn assignment_bits(values: &[bool]) -> u64 {
    values.iter().enumerate().fold(0, |acc, (i, &b)| acc | (b as u64) << i)
}

pub fn satisfiable(f: &Formula) -> bool {
    let c = raw_clauses(f);
    (0..1u64 << f.num_vars()).any(|a| cnf_true(&c, a))
}

pub fn valid(f: &Formula) -> bool {
    let c = raw_clauses(f);
    (0..1u64 << f.num_vars()).all(|a| dnf_true(&c, a))
}

/// `∀V1 ∃V2` by enumerating both blocks.
pub fn forall_exists(f: &Formula) -> bool {
    let c = raw_clauses(f);
    let outer_mask: u64 = f.universal_vars().iter().fold(0, |acc, &v| acc | 1 << (v - 1));
    let n = f.num_vars();
    (0..1u64 << n)
        .filter(|a| a & !outer_mask == 0)
        .all(|x| (0..1u64 << n).filter(|a| a & outer_mask == 0).any(|y| cnf_true(&c, x | y)))
}

pub fn formula_truth(q: FormulaQuestion, f: &Formula) -> bool {
    match q {
        FormulaQuestion::Satisfiable => satisfiable(f),
        FormulaQuestion::Valid => valid(f),
        FormulaQuestion::ForallExistsValid => forall_exists(f),
    }
}

/// Every nonempty clause over `n` variables: each variable is absent,
/// positive, negative, or both.
pub fn all_clauses(n: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for code in 1..4usize.pow(n as u32) {
        let mut c = Vec::new();
        let mut k = code;
        for v in 1..=n as i32 {
            match k % 4 {
                1 => c.push(v),
                2 => c.push(-v),
                3 => c.extend([v, -v]),
                _ => {}
            }
            k /= 4;
        }
        out.push(c);
    }
    out
}

/// Every sequence of `m` clauses over `n` variables.
pub fn all_clause_lists(n: usize, m: usize) -> Vec<Vec<Vec<i32>>> {
    let base = all_clauses(n);
    let mut lists = vec![Vec::new()];
    for _ in 0..m {
        lists = lists
            .into_iter()
            .flat_map(|l: Vec<Vec<i32>>| {
                base.iter().map(move |c| {
                    let mut l = l.clone();
                    l.push(c.clone());
                    l
                })
            })
            .collect();
    }
    lists
}

pub fn random_clause_list<R: Rng>(rng: &mut R, n: usize, m: usize) -> Vec<Vec<i32>> {
    (0..m)
        .map(|_| {
            let k = rng.gen_range(1..=n.min(3));
            rand::seq::index::sample(rng, n, k)
                .into_iter()
                .map(|v| if rng.gen_bool(0.5) { v as i32 + 1 } else { -(v as i32 + 1) })
                .collect()
        })
        .collect()
}

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..1u64 << n).map(move |s| (1..=n).filter(|&v| s >> (v - 1) & 1 == 1).collect())
}

pub fn formula(kind: rsfix::FormulaKind, n: usize, clauses: &[Vec<i32>]) -> Formula {
    let lits = clauses
        .iter()
        .map(|c| c.iter().map(|&l| rsfix::Literal::new(l).unwrap()).collect())
        .collect();
    Formula::new(kind, n, lits).unwrap()
}

/// The three-suit subsystem used as a regression fixture.
pub fn suits() -> ReactionSystem {
    ReactionSystem::builder("suits")
        .entities(["club", "diamond", "spade"])
        .unwrap()
        .reaction(&[], &["diamond", "spade"], &["club"])
        .unwrap()
        .reaction(&[], &["club", "spade"], &["club"])
        .unwrap()
        .reaction(&[], &["club", "diamond"], &["club", "diamond", "spade"])
        .unwrap()
        .build()
        .unwrap()
}
