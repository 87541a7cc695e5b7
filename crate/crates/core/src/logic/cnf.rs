//! Clause builder with Tseitin gates and the result-map encoding.
//!
//! Clauses are kept in two lists: `defs` define every auxiliary variable as
//! a function of earlier variables, `constraints` hold the asserted
//! property. The split lets the QBF solver copy definitions while
//! negating only the property.

use crate::system::ReactionSystem;

#[derive(Debug, Clone, Default)]
pub struct CnfBuilder {
    num_vars: usize,
    pub defs: Vec<Vec<i32>>,
    pub constraints: Vec<Vec<i32>>,
}

/// Variables of one result-map encoding: `e[j]` is reaction `j` enabled,
/// `r[i]` is entity `i` produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultMap {
    pub e: Vec<i32>,
    pub r: Vec<i32>,
}

impl CnfBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn new_var(&mut self) -> i32 {
        self.num_vars += 1;
        self.num_vars as i32
    }

    pub fn new_vars(&mut self, n: usize) -> Vec<i32> {
        (0..n).map(|_| self.new_var()).collect()
    }

    pub fn assert_clause(&mut self, clause: Vec<i32>) {
        self.constraints.push(clause);
    }

    /// `out ↔ ⋀ inputs`; the empty conjunction is true.
    pub fn and(&mut self, inputs: &[i32]) -> i32 {
        let out = self.new_var();
        self.define_and(out, inputs);
        out
    }

    fn define_and(&mut self, out: i32, inputs: &[i32]) {
        for &x in inputs {
            self.defs.push(vec![-out, x]);
        }
        let mut long: Vec<i32> = inputs.iter().map(|&x| -x).collect();
        long.push(out);
        self.defs.push(long);
    }

    /// `out ↔ ⋁ inputs`; the empty disjunction is false.
    pub fn or(&mut self, inputs: &[i32]) -> i32 {
        let neg: Vec<i32> = inputs.iter().map(|&x| -x).collect();
        -self.and(&neg)
    }

    /// `out ↔ a ⊕ b`.
    pub fn xor(&mut self, a: i32, b: i32) -> i32 {
        let out = self.new_var();
        self.defs.push(vec![-out, a, b]);
        self.defs.push(vec![-out, -a, -b]);
        self.defs.push(vec![out, -a, b]);
        self.defs.push(vec![out, a, -b]);
        out
    }

    /// `out ↔ (a ↔ b)`.
    pub fn eq(&mut self, a: i32, b: i32) -> i32 {
        -self.xor(a, b)
    }

    /// True iff the two vectors agree everywhere.
    pub fn vec_eq(&mut self, a: &[i32], b: &[i32]) -> i32 {
        assert_eq!(a.len(), b.len());
        let bits: Vec<i32> = a.iter().zip(b).map(|(&x, &y)| self.eq(x, y)).collect();
        self.and(&bits)
    }

    /// True iff the two vectors differ somewhere.
    pub fn vec_neq(&mut self, a: &[i32], b: &[i32]) -> i32 {
        -self.vec_eq(a, b)
    }

    pub fn assert_vec_eq(&mut self, a: &[i32], b: &[i32]) {
        assert_eq!(a.len(), b.len());
        for (&x, &y) in a.iter().zip(b) {
            self.constraints.push(vec![-x, y]);
            self.constraints.push(vec![x, -y]);
        }
    }

    pub fn assert_vec_neq(&mut self, a: &[i32], b: &[i32]) {
        assert_eq!(a.len(), b.len());
        let diff: Vec<i32> = a.iter().zip(b).map(|(&x, &y)| self.xor(x, y)).collect();
        self.constraints.push(diff);
    }

    pub fn into_parts(self) -> (usize, Vec<Vec<i32>>, Vec<Vec<i32>>) {
        (self.num_vars, self.defs, self.constraints)
    }
}

/// Encodes `r = res(t)`: `e_j ↔ ⋀_{i∈R_j} t_i ∧ ⋀_{i∈I_j} ¬t_i` and
/// `r_i ↔ ⋁_{j : i∈P_j} e_j`. Allocates the `e` block, then the `r` block.
pub fn encode_result_map(cnf: &mut CnfBuilder, sys: &ReactionSystem, t: &[i32]) -> ResultMap {
    assert_eq!(t.len(), sys.width(), "t-group must cover the background set");
    let e = cnf.new_vars(sys.reactions().len());
    let r = cnf.new_vars(sys.width());
    for (j, reaction) in sys.reactions().iter().enumerate() {
        let lits: Vec<i32> = reaction
            .reactants
            .iter()
            .map(|i| t[i])
            .chain(reaction.inhibitors.iter().map(|i| -t[i]))
            .collect();
        cnf.define_and(e[j], &lits);
    }
    for (i, &ri) in r.iter().enumerate() {
        let producers: Vec<i32> = sys
            .reactions()
            .iter()
            .enumerate()
            .filter(|(_, reaction)| reaction.products.contains(i))
            .map(|(j, _)| e[j])
            .collect();
        let neg: Vec<i32> = producers.iter().map(|&x| -x).collect();
        cnf.define_and(-ri, &neg);
    }
    ResultMap { e, r }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::sat::{solve_clauses, SatResult};
    use crate::sample::{random_system, SampleConfig, SystemClass};
    use crate::state::State;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// All models of `defs` restricted to `t`, by enumeration of `t` and
    /// solving the rest.
    fn forced(cnf: &CnfBuilder, t: &[i32], bits: u64, out: &[i32]) -> Vec<bool> {
        let mut clauses = cnf.defs.clone();
        for (k, &v) in t.iter().enumerate() {
            clauses.push(vec![if bits >> k & 1 == 1 { v } else { -v }]);
        }
        let model = match solve_clauses(cnf.num_vars(), &clauses, &[]) {
            SatResult::Sat(m) => m,
            SatResult::Unsat => panic!("definitions must be total"),
        };
        // Uniqueness: flipping any output is inconsistent.
        for &o in out {
            let mut c = clauses.clone();
            let val = model[o as usize - 1];
            c.push(vec![if val { -o } else { o }]);
            assert_eq!(solve_clauses(cnf.num_vars(), &c, &[]), SatResult::Unsat);
        }
        out.iter().map(|&o| model[o as usize - 1]).collect()
    }

    #[test]
    fn gates_match_truth_tables() {
        let mut cnf = CnfBuilder::new();
        let ins = cnf.new_vars(2);
        let g = [
            cnf.and(&ins),
            cnf.or(&ins),
            cnf.xor(ins[0], ins[1]),
            cnf.eq(ins[0], ins[1]),
            cnf.and(&[]),
            cnf.or(&[]),
        ];
        for bits in 0..4u64 {
            let (a, b) = (bits & 1 == 1, bits & 2 == 2);
            let vals: Vec<bool> = forced(&cnf, &ins, bits, &g.map(i32::abs))
                .iter()
                .zip(g)
                .map(|(&v, l)| v == (l > 0))
                .collect();
            assert_eq!(vals, vec![a && b, a || b, a ^ b, a == b, true, false]);
        }
    }

    #[test]
    fn constant_reaction_forces_product() {
        let sys = ReactionSystem::builder("c")
            .entity("p")
            .unwrap()
            .reaction(&[], &[], &["p"])
            .unwrap()
            .build()
            .unwrap();
        let mut cnf = CnfBuilder::new();
        let t = cnf.new_vars(1);
        let map = encode_result_map(&mut cnf, &sys, &t);
        for bits in 0..2 {
            assert_eq!(forced(&cnf, &t, bits, &map.r), vec![true]);
        }
    }

    #[test]
    fn single_reaction_truth_table() {
        let sys = ReactionSystem::builder("s")
            .entities(["a", "b", "c"])
            .unwrap()
            .reaction(&["a"], &["b"], &["c"])
            .unwrap()
            .build()
            .unwrap();
        let mut cnf = CnfBuilder::new();
        let t = cnf.new_vars(3);
        let map = encode_result_map(&mut cnf, &sys, &t);
        assert_eq!(forced(&cnf, &t, 0b001, &map.r), vec![false, false, true]);
        assert_eq!(forced(&cnf, &t, 0b011, &map.r), vec![false, false, false]);
        assert_eq!(forced(&cnf, &t, 0b000, &map.r), vec![false, false, false]);
        assert_eq!(forced(&cnf, &t, 0b010, &map.r), vec![false, false, false]);
    }

    #[test]
    fn result_map_matches_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for class in [SystemClass::General, SystemClass::Reactantless, SystemClass::Inhibitorless] {
            for w in 1..=4 {
                let sys = random_system(&mut rng, &SampleConfig::new(class, w));
                let mut cnf = CnfBuilder::new();
                let t = cnf.new_vars(w);
                let map = encode_result_map(&mut cnf, &sys, &t);
                for bits in 0..1u64 << w {
                    let expect = sys.result(&State::from_bits(w, bits)).unwrap();
                    let got = forced(&cnf, &t, bits, &map.r);
                    let got = State::from_indices(w, (0..w).filter(|&i| got[i])).unwrap();
                    assert_eq!(got, expect);
                }
            }
        }
    }
}
