//! Propositional formulas in clause form, optionally under a `∀V1 ∃V2`
//! prefix, and their DIMACS-style text format.

use std::fmt;

use crate::error::{Error, Result};

/// A signed variable index: `+i` is `x_i`, `-i` is `¬x_i` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal(i32);

impl Literal {
    pub fn new(value: i32) -> Option<Literal> {
        (value != 0).then_some(Literal(value))
    }

    pub fn pos(var: usize) -> Literal {
        Literal(var as i32)
    }

    pub fn neg(var: usize) -> Literal {
        Literal(-(var as i32))
    }

    pub fn var(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_negated(self) -> bool {
        self.0 < 0
    }

    pub fn value(self) -> i32 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaKind {
    /// Conjunction of disjunctive clauses.
    Cnf,
    /// Disjunction of conjunctive terms.
    Dnf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formula {
    kind: FormulaKind,
    num_vars: usize,
    clauses: Vec<Vec<Literal>>,
    /// The universal block `V1` of a `∀V1 ∃V2` prefix, ascending.
    universal: Option<Vec<usize>>,
}

impl Formula {
    pub fn new(kind: FormulaKind, num_vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Formula> {
        for c in &clauses {
            for l in c {
                if l.var() == 0 || l.var() > num_vars {
                    return Err(Error::Formula(format!(
                        "variable {} out of range 1..={num_vars}",
                        l.var()
                    )));
                }
            }
        }
        Ok(Formula {
            kind,
            num_vars,
            clauses,
            universal: None,
        })
    }

    pub fn cnf(num_vars: usize, clauses: &[&[i32]]) -> Result<Formula> {
        Self::from_ints(FormulaKind::Cnf, num_vars, clauses)
    }

    pub fn dnf(num_vars: usize, clauses: &[&[i32]]) -> Result<Formula> {
        Self::from_ints(FormulaKind::Dnf, num_vars, clauses)
    }

    fn from_ints(kind: FormulaKind, num_vars: usize, clauses: &[&[i32]]) -> Result<Formula> {
        let clauses = clauses
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&v| Literal::new(v).ok_or_else(|| Error::Formula("literal 0".into())))
                    .collect()
            })
            .collect::<Result<Vec<_>>>()?;
        Formula::new(kind, num_vars, clauses)
    }

    /// Adds a `∀V1 ∃V2` prefix; `V2` is every variable not in `V1`.
    pub fn with_universal(mut self, vars: impl IntoIterator<Item = usize>) -> Result<Formula> {
        let mut v: Vec<usize> = vars.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if let Some(&bad) = v.iter().find(|&&x| x == 0 || x > self.num_vars) {
            return Err(Error::Formula(format!("quantified variable {bad} out of range")));
        }
        self.universal = Some(v);
        Ok(self)
    }

    pub fn kind(&self) -> FormulaKind {
        self.kind
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    pub fn is_quantified(&self) -> bool {
        self.universal.is_some()
    }

    /// `V1`, empty when unquantified.
    pub fn universal_vars(&self) -> &[usize] {
        self.universal.as_deref().unwrap_or(&[])
    }

    pub fn is_universal(&self, var: usize) -> bool {
        self.universal_vars().binary_search(&var).is_ok()
    }

    /// `V2 = V \ V1`.
    pub fn existential_vars(&self) -> Vec<usize> {
        (1..=self.num_vars).filter(|&v| !self.is_universal(v)).collect()
    }

    /// Variables occurring non-negated in clause `j`, ascending and distinct.
    pub fn pos(&self, j: usize) -> Vec<usize> {
        self.occurring(j, false)
    }

    /// Variables occurring negated in clause `j`, ascending and distinct.
    pub fn neg(&self, j: usize) -> Vec<usize> {
        self.occurring(j, true)
    }

    fn occurring(&self, j: usize, negated: bool) -> Vec<usize> {
        let mut v: Vec<usize> = self.clauses[j]
            .iter()
            .filter(|l| l.is_negated() == negated)
            .map(|l| l.var())
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Truth value under `assignment`, where bit `i-1` is the value of `x_i`.
    pub fn eval_bits(&self, assignment: u64) -> bool {
        let lit = |l: &Literal| (assignment >> (l.var() - 1) & 1 == 1) != l.is_negated();
        match self.kind {
            FormulaKind::Cnf => self.clauses.iter().all(|c| c.iter().any(lit)),
            FormulaKind::Dnf => self.clauses.iter().any(|c| c.iter().all(lit)),
        }
    }

    /// Truth value under `values[i-1]` for `x_i`.
    pub fn eval(&self, values: &[bool]) -> bool {
        let bits = values
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &b)| acc | (b as u64) << i);
        self.eval_bits(bits)
    }

    /// Rejects formulas with no clauses or an empty clause.
    pub(crate) fn require_nonempty_clauses(&self) -> Result<()> {
        if self.clauses.is_empty() {
            return Err(Error::Formula("formula has no clauses".into()));
        }
        if let Some(j) = self.clauses.iter().position(|c| c.is_empty()) {
            return Err(Error::Formula(format!("clause {} is empty", j + 1)));
        }
        if self.num_vars == 0 {
            return Err(Error::Formula("formula has no variables".into()));
        }
        Ok(())
    }

    pub(crate) fn require_kind(&self, kind: FormulaKind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::Formula(format!("expected a {kind} formula, found {}", self.kind)));
        }
        Ok(())
    }

    /// Parses DIMACS-style text: `c` comments, a `p cnf n m` or `p dnf n m`
    /// header, optional `a ... 0` then `e ... 0` prefix lines, and clauses
    /// terminated by `0` (possibly spanning lines).
    pub fn parse(text: &str) -> Result<Formula> {
        let mut header: Option<(FormulaKind, usize, usize)> = None;
        let mut universal: Option<Vec<usize>> = None;
        let mut seen_exists = false;
        let mut clauses: Vec<Vec<Literal>> = Vec::new();
        let mut current: Vec<Literal> = Vec::new();
        let mut last_line = 0;
        for (ln, raw) in text.lines().enumerate() {
            let line_no = ln + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let first = tokens.next().expect("non-empty line");
            let column = |tok: &str| raw.find(tok).map_or(1, |i| i + 1);
            match first {
                "p" => {
                    if header.is_some() {
                        return Err(Error::parse(line_no, 1, "duplicate header"));
                    }
                    let kind = match tokens.next() {
                        Some("cnf") => FormulaKind::Cnf,
                        Some("dnf") => FormulaKind::Dnf,
                        Some(other) => {
                            return Err(Error::parse(line_no, column(other), format!("unknown header `{other}`")))
                        }
                        None => return Err(Error::parse(line_no, 1, "truncated header")),
                    };
                    let mut num = || -> Result<usize> {
                        let t = tokens
                            .next()
                            .ok_or_else(|| Error::parse(line_no, raw.len() + 1, "truncated header"))?;
                        t.parse()
                            .map_err(|_| Error::parse(line_no, column(t), format!("bad count `{t}`")))
                    };
                    let n = num()?;
                    let m = num()?;
                    header = Some((kind, n, m));
                }
                "a" | "e" => {
                    let (_, n, _) = header.ok_or_else(|| Error::parse(line_no, 1, "prefix before header"))?;
                    if !clauses.is_empty() || !current.is_empty() {
                        return Err(Error::parse(line_no, 1, "quantifier prefix after clauses"));
                    }
                    if first == "a" && (universal.is_some() || seen_exists) {
                        return Err(Error::parse(
                            line_no,
                            1,
                            "only a single `a` block followed by one `e` block is supported",
                        ));
                    }
                    if first == "e" && seen_exists {
                        return Err(Error::parse(line_no, 1, "more than one quantifier alternation"));
                    }
                    let mut vars = Vec::new();
                    let mut closed = false;
                    for tok in tokens {
                        let v: i64 = tok
                            .parse()
                            .map_err(|_| Error::parse(line_no, column(tok), format!("bad variable `{tok}`")))?;
                        if v == 0 {
                            closed = true;
                            break;
                        }
                        if v < 0 || v as usize > n {
                            return Err(Error::parse(line_no, column(tok), format!("variable {v} out of range")));
                        }
                        vars.push(v as usize);
                    }
                    if !closed {
                        return Err(Error::parse(line_no, raw.len() + 1, "prefix line not terminated by 0"));
                    }
                    if first == "a" {
                        universal = Some(vars);
                    } else {
                        seen_exists = true;
                        if let Some(u) = &universal {
                            if let Some(v) = vars.iter().find(|v| u.contains(v)) {
                                return Err(Error::parse(line_no, 1, format!("variable {v} quantified twice")));
                            }
                        }
                        universal.get_or_insert_with(Vec::new);
                    }
                }
                _ => {
                    let (_, n, _) = header.ok_or_else(|| Error::parse(line_no, 1, "clause before header"))?;
                    for tok in std::iter::once(first).chain(tokens) {
                        let v: i64 = tok
                            .parse()
                            .map_err(|_| Error::parse(line_no, column(tok), format!("bad literal `{tok}`")))?;
                        if v == 0 {
                            clauses.push(std::mem::take(&mut current));
                        } else if v.unsigned_abs() as usize > n {
                            return Err(Error::parse(line_no, column(tok), format!("variable {} out of range", v.abs())));
                        } else {
                            current.push(Literal(v as i32));
                        }
                    }
                }
            }
        }
        let (kind, n, m) = header.ok_or_else(|| Error::parse(last_line.max(1), 1, "missing `p` header"))?;
        if !current.is_empty() {
            return Err(Error::parse(last_line, 1, "last clause not terminated by 0"));
        }
        if clauses.len() != m {
            return Err(Error::parse(
                last_line.max(1),
                1,
                format!("header declares {m} clauses, found {}", clauses.len()),
            ));
        }
        let f = Formula::new(kind, n, clauses)?;
        match universal {
            Some(u) => f.with_universal(u),
            None => Ok(f),
        }
    }
}

impl fmt::Display for FormulaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormulaKind::Cnf => "cnf",
            FormulaKind::Dnf => "dnf",
        })
    }
}

/// Emits the same text format accepted by [`Formula::parse`].
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p {} {} {}", self.kind, self.num_vars, self.clauses.len())?;
        if let Some(u) = &self.universal {
            let block = |vs: &[usize]| vs.iter().map(|v| format!("{v} ")).collect::<String>();
            writeln!(f, "a {}0", block(u))?;
            writeln!(f, "e {}0", block(&self.existential_vars()))?;
        }
        for c in &self.clauses {
            for l in c {
                write!(f, "{} ", l.0)?;
            }
            writeln!(f, "0")?;
        }
        Ok(())
    }
}
