//! DIMACS and QDIMACS emission.

use std::fmt::Write as _;

use super::encode::{EncodedProblem, EncodingKind};

/// `p cnf n m` followed by one 0-terminated line per clause.
pub fn write_dimacs<'a>(num_vars: usize, clauses: impl ExactSizeIterator<Item = &'a Vec<i32>>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p cnf {num_vars} {}", clauses.len());
    push_clauses(&mut out, clauses);
    out
}

/// QDIMACS for `∀ outer ∃ rest`: every variable not in `outer` goes to the
/// existential block. Empty blocks are omitted.
pub fn write_qdimacs<'a>(
    num_vars: usize,
    outer: &[i32],
    clauses: impl ExactSizeIterator<Item = &'a Vec<i32>>,
) -> String {
    let mut is_outer = vec![false; num_vars + 1];
    for &v in outer {
        is_outer[v as usize] = true;
    }
    let inner: Vec<i32> = (1..=num_vars as i32).filter(|&v| !is_outer[v as usize]).collect();
    let mut out = String::new();
    let _ = writeln!(out, "p cnf {num_vars} {}", clauses.len());
    for (q, block) in [("a", outer), ("e", &inner[..])] {
        if block.is_empty() {
            continue;
        }
        out.push_str(q);
        for v in block {
            let _ = write!(out, " {v}");
        }
        out.push_str(" 0\n");
    }
    push_clauses(&mut out, clauses);
    out
}

fn push_clauses<'a>(out: &mut String, clauses: impl Iterator<Item = &'a Vec<i32>>) {
    for c in clauses {
        for l in c {
            let _ = write!(out, "{l} ");
        }
        out.push_str("0\n");
    }
}

impl EncodedProblem {
    /// DIMACS for CNF encodings, QDIMACS for ∀∃ encodings.
    pub fn to_text(&self) -> String {
        let clauses: Vec<&Vec<i32>> = self.clauses().collect();
        match self.kind {
            EncodingKind::Cnf => write_dimacs(self.num_vars, clauses.into_iter()),
            EncodingKind::ForallExists => write_qdimacs(self.num_vars, &self.outer, clauses.into_iter()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_layout() {
        let cl = vec![vec![1, -2], vec![2]];
        assert_eq!(write_dimacs(2, cl.iter()), "p cnf 2 2\n1 -2 0\n2 0\n");
        assert_eq!(write_dimacs(0, [].iter()), "p cnf 0 0\n");
    }

    #[test]
    fn qdimacs_layout() {
        let cl = vec![vec![1, 3], vec![-2]];
        assert_eq!(write_qdimacs(3, &[1], cl.iter()), "p cnf 3 2\na 1 0\ne 2 3 0\n1 3 0\n-2 0\n");
        assert_eq!(write_qdimacs(1, &[1], [].iter()), "p cnf 1 0\na 1 0\n");
    }
}
