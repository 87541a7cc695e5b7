//! Compilers from propositional formulas to the gadget systems used in the
//! hardness proofs. Each gadget comes with the decision problems whose
//! answer tracks the formula and a decoder back to assignments.
//!
//! Entity names: `x<i>`, `nx<i>` (false literal), `xp<i>` (primed copy of a
//! universal variable), `c<j>` (clause), `h<i>` (per-variable heart), and
//! `club`, `diamond`, `spade`, `heart`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::formula::{Formula, FormulaKind};
use crate::problem::Problem;
use crate::state::{EntitySet, State};
use crate::system::{EntityTable, Reaction, ReactionSystem};

/// What the formula side of a claim asserts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaQuestion {
    /// A CNF formula is satisfiable.
    Satisfiable,
    /// A DNF formula is a tautology.
    Valid,
    /// `∀V1 ∃V2 φ` holds for a CNF `φ`.
    ForallExistsValid,
}

/// Which systems a claim is evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    A,
    AB,
}

/// Which state of a brute-force verdict carries the encoded assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecodeFrom {
    Witness,
    Preimage,
}

/// `problem` on `target` answers YES iff the formula question is true
/// (`negated == false`) or false (`negated == true`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claim {
    pub problem: Problem,
    pub target: Target,
    pub negated: bool,
    pub decode: DecodeFrom,
}

impl Claim {
    fn new(problem: Problem, target: Target) -> Claim {
        Claim {
            problem,
            target,
            negated: false,
            decode: DecodeFrom::Witness,
        }
    }

    fn negated(mut self) -> Claim {
        self.negated = true;
        self
    }

    fn from_preimage(mut self) -> Claim {
        self.decode = DecodeFrom::Preimage;
        self
    }

    /// The gadget answer predicted from the formula-side truth value.
    pub fn expected_answer(&self, formula_truth: bool) -> bool {
        formula_truth != self.negated
    }
}

/// Maps gadget states back to variable assignments.
///
/// The decoded assignment certifies the formula side: a satisfying
/// assignment for satisfiability, a falsifying one for validity, and an
/// assignment of `V1` with no satisfying extension for `∀∃` formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoder {
    num_vars: usize,
    /// `(variable, entity index)`, variable ascending.
    table: Vec<(usize, usize)>,
}

impl Decoder {
    /// Variables read by [`Decoder::decode`]; the rest decode to false.
    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.table.iter().map(|&(v, _)| v)
    }

    pub fn table(&self) -> &[(usize, usize)] {
        &self.table
    }

    /// `values[i-1]` is the value of `x_i`: true iff its entity is present.
    pub fn decode(&self, state: &State) -> Vec<bool> {
        let mut values = vec![false; self.num_vars];
        for &(v, e) in &self.table {
            values[v - 1] = state.contains(e);
        }
        values
    }
}

#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub construction: Construction,
    pub system_a: ReactionSystem,
    pub system_b: Option<ReactionSystem>,
    pub distinguished_state: Option<State>,
    pub question: FormulaQuestion,
    /// The first claim is the construction's main equivalence.
    pub claims: Vec<Claim>,
    pub decoder: Decoder,
}

impl ReductionOutput {
    pub fn target_problem(&self) -> Problem {
        self.claims[0].problem
    }

    pub fn systems(&self) -> impl Iterator<Item = &ReactionSystem> {
        std::iter::once(&self.system_a).chain(self.system_b.as_ref())
    }
}

/// Every construction, named as on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    SatToInhibitorlessGivenAttractor,
    SatToReactantlessGivenAttractor,
    SatToReactantlessFixpoint,
    SatToReactantlessAttractor,
    QbfToReactantlessFixge,
    QbfToReactantlessSharedAttractors,
    ValidityToReactantlessSharedFixpoints,
    SatToInhibitorlessCommonFixpoint,
    SatToInhibitorlessCommonAttractor,
    ValidityToInhibitorlessSharedFixpoints,
    QbfToInhibitorlessSharedAttractors,
    ValidityToResEq,
}

impl Construction {
    pub const ALL: [Construction; 12] = [
        Construction::SatToInhibitorlessGivenAttractor,
        Construction::SatToReactantlessGivenAttractor,
        Construction::SatToReactantlessFixpoint,
        Construction::SatToReactantlessAttractor,
        Construction::QbfToReactantlessFixge,
        Construction::QbfToReactantlessSharedAttractors,
        Construction::ValidityToReactantlessSharedFixpoints,
        Construction::SatToInhibitorlessCommonFixpoint,
        Construction::SatToInhibitorlessCommonAttractor,
        Construction::ValidityToInhibitorlessSharedFixpoints,
        Construction::QbfToInhibitorlessSharedAttractors,
        Construction::ValidityToResEq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Construction::SatToInhibitorlessGivenAttractor => "sat-to-inhibitorless-given-attractor",
            Construction::SatToReactantlessGivenAttractor => "sat-to-reactantless-given-attractor",
            Construction::SatToReactantlessFixpoint => "sat-to-reactantless-fixpoint",
            Construction::SatToReactantlessAttractor => "sat-to-reactantless-attractor",
            Construction::QbfToReactantlessFixge => "qbf-to-reactantless-fixge",
            Construction::QbfToReactantlessSharedAttractors => "qbf-to-reactantless-shared-attractors",
            Construction::ValidityToReactantlessSharedFixpoints => "validity-to-reactantless-shared-fixpoints",
            Construction::SatToInhibitorlessCommonFixpoint => "sat-to-inhibitorless-common-fixpoint",
            Construction::SatToInhibitorlessCommonAttractor => "sat-to-inhibitorless-common-attractor",
            Construction::ValidityToInhibitorlessSharedFixpoints => "validity-to-inhibitorless-shared-fixpoints",
            Construction::QbfToInhibitorlessSharedAttractors => "qbf-to-inhibitorless-shared-attractors",
            Construction::ValidityToResEq => "validity-to-res-eq",
        }
    }

    pub fn question(self) -> FormulaQuestion {
        match self {
            Construction::QbfToReactantlessFixge
            | Construction::QbfToReactantlessSharedAttractors
            | Construction::QbfToInhibitorlessSharedAttractors => FormulaQuestion::ForallExistsValid,
            Construction::ValidityToReactantlessSharedFixpoints
            | Construction::ValidityToInhibitorlessSharedFixpoints
            | Construction::ValidityToResEq => FormulaQuestion::Valid,
            _ => FormulaQuestion::Satisfiable,
        }
    }

    pub fn formula_kind(self) -> FormulaKind {
        match self.question() {
            FormulaQuestion::Valid => FormulaKind::Dnf,
            _ => FormulaKind::Cnf,
        }
    }

    pub fn apply(self, formula: &Formula) -> Result<ReductionOutput> {
        match self {
            Construction::SatToInhibitorlessGivenAttractor => reduce_sat_to_inhibitorless_given_attractor(formula),
            Construction::SatToReactantlessGivenAttractor => reduce_sat_to_reactantless_given_attractor(formula),
            Construction::SatToReactantlessFixpoint => {
                reduce_sat_to_reactantless_fixpoint(formula, FixpointVariant::Exists)
            }
            Construction::SatToReactantlessAttractor => {
                reduce_sat_to_reactantless_fixpoint(formula, FixpointVariant::ExistsAttractor)
            }
            Construction::QbfToReactantlessFixge => reduce_qbf_to_reactantless(formula, QbfVariant::Fixge),
            Construction::QbfToReactantlessSharedAttractors => {
                reduce_qbf_to_reactantless(formula, QbfVariant::SharedAttractors)
            }
            Construction::ValidityToReactantlessSharedFixpoints => {
                reduce_validity_to_reactantless_shared_fixpoints(formula)
            }
            Construction::SatToInhibitorlessCommonFixpoint => {
                reduce_sat_to_inhibitorless_common_fixpoint(formula, CommonVariant::Fixpoint)
            }
            Construction::SatToInhibitorlessCommonAttractor => {
                reduce_sat_to_inhibitorless_common_fixpoint(formula, CommonVariant::Attractor)
            }
            Construction::ValidityToInhibitorlessSharedFixpoints => {
                reduce_validity_to_inhibitorless_shared_fixpoints(formula)
            }
            Construction::QbfToInhibitorlessSharedAttractors => reduce_qbf_to_inhibitorless_shared_attractors(formula),
            Construction::ValidityToResEq => reduce_validity_to_res_eq(formula),
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Construction::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown construction `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixpointVariant {
    Exists,
    ExistsAttractor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QbfVariant {
    Fixge,
    SharedAttractors,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommonVariant {
    Fixpoint,
    Attractor,
}

#[derive(Debug, Clone, Copy)]
enum Family {
    Vars,
    NegVars,
    Primed,
    Clauses,
    Hearts,
    Club,
    Diamond,
    Spade,
    Heart,
}

/// Entity indices of one gadget background set.
struct Layout {
    n: usize,
    m: usize,
    /// Universal variables, ascending.
    v1: Vec<usize>,
    names: Vec<String>,
    vars: usize,
    neg_vars: usize,
    primed: usize,
    clauses: usize,
    hearts: usize,
    club: usize,
    diamond: usize,
    spade: usize,
    heart: usize,
}

impl Layout {
    fn new(f: &Formula, families: &[Family]) -> Layout {
        let mut l = Layout {
            n: f.num_vars(),
            m: f.clauses().len(),
            v1: f.universal_vars().to_vec(),
            names: Vec::new(),
            vars: usize::MAX,
            neg_vars: usize::MAX,
            primed: usize::MAX,
            clauses: usize::MAX,
            hearts: usize::MAX,
            club: usize::MAX,
            diamond: usize::MAX,
            spade: usize::MAX,
            heart: usize::MAX,
        };
        for fam in families {
            let at = l.names.len();
            match fam {
                Family::Vars => {
                    l.vars = at;
                    l.names.extend((1..=l.n).map(|i| format!("x{i}")));
                }
                Family::NegVars => {
                    l.neg_vars = at;
                    l.names.extend((1..=l.n).map(|i| format!("nx{i}")));
                }
                Family::Primed => {
                    l.primed = at;
                    let primed: Vec<String> = l.v1.iter().map(|i| format!("xp{i}")).collect();
                    l.names.extend(primed);
                }
                Family::Clauses => {
                    l.clauses = at;
                    l.names.extend((1..=l.m).map(|j| format!("c{j}")));
                }
                Family::Hearts => {
                    l.hearts = at;
                    l.names.extend((1..=l.n).map(|i| format!("h{i}")));
                }
                Family::Club => {
                    l.club = at;
                    l.names.push("club".into());
                }
                Family::Diamond => {
                    l.diamond = at;
                    l.names.push("diamond".into());
                }
                Family::Spade => {
                    l.spade = at;
                    l.names.push("spade".into());
                }
                Family::Heart => {
                    l.heart = at;
                    l.names.push("heart".into());
                }
            }
        }
        l
    }

    fn width(&self) -> usize {
        self.names.len()
    }

    fn x(&self, i: usize) -> usize {
        self.vars + i - 1
    }

    fn nx(&self, i: usize) -> usize {
        self.neg_vars + i - 1
    }

    fn xp(&self, i: usize) -> usize {
        let k = self.v1.binary_search(&i).expect("primed copy of a universal variable");
        self.primed + k
    }

    /// Clause entity for the 0-based clause index `j`.
    fn c(&self, j: usize) -> usize {
        self.clauses + j
    }

    fn h(&self, i: usize) -> usize {
        self.hearts + i - 1
    }

    fn all_vars(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    fn all_clauses(&self) -> Vec<usize> {
        (0..self.m).map(|j| self.c(j)).collect()
    }

    fn all_hearts(&self) -> Vec<usize> {
        self.all_vars().map(|i| self.h(i)).collect()
    }

    fn set<I: IntoIterator<Item = usize>>(&self, items: I) -> EntitySet {
        EntitySet::from_indices(self.width(), items).expect("layout index in range")
    }

    fn table(&self) -> EntityTable {
        EntityTable::new(self.names.iter().cloned()).expect("generated names are valid and distinct")
    }

    fn decoder(&self, entity: impl Fn(usize) -> usize, vars: &[usize]) -> Decoder {
        Decoder {
            num_vars: self.n,
            table: vars.iter().map(|&v| (v, entity(v))).collect(),
        }
    }

    fn decode_all_vars(&self) -> Decoder {
        let vars: Vec<usize> = self.all_vars().collect();
        self.decoder(|i| self.x(i), &vars)
    }
}

/// Reactions accumulated in emission order.
struct Reactions<'a> {
    layout: &'a Layout,
    list: Vec<Reaction>,
}

impl<'a> Reactions<'a> {
    fn new(layout: &'a Layout) -> Self {
        Reactions {
            layout,
            list: Vec::new(),
        }
    }

    fn add<R, I, P>(&mut self, reactants: R, inhibitors: I, products: P)
    where
        R: IntoIterator<Item = usize>,
        I: IntoIterator<Item = usize>,
        P: IntoIterator<Item = usize>,
    {
        let l = self.layout;
        self.list
            .push(Reaction::new(l.set(reactants), l.set(inhibitors), l.set(products)));
    }

    fn build(self, name: &str) -> ReactionSystem {
        ReactionSystem::new(name, self.layout.table(), self.list).expect("gadget reactions are well formed")
    }
}

fn check(f: &Formula, c: Construction) -> Result<()> {
    f.require_kind(c.formula_kind())?;
    f.require_nonempty_clauses()?;
    if f.is_quantified() && c.question() != FormulaQuestion::ForallExistsValid {
        return Err(Error::Formula(format!("{c} takes an unquantified formula")));
    }
    Ok(())
}

fn output(
    construction: Construction,
    system_a: ReactionSystem,
    system_b: Option<ReactionSystem>,
    claims: Vec<Claim>,
    decoder: Decoder,
) -> ReductionOutput {
    ReductionOutput {
        construction,
        system_a,
        system_b,
        distinguished_state: None,
        question: construction.question(),
        claims,
        decoder,
    }
}

/// Inhibitorless gadget where `T = C` is a fixed point, and an attractor
/// iff the CNF formula is satisfiable. All reactions have at most two
/// reactants.
pub fn reduce_sat_to_inhibitorless_given_attractor(f: &Formula) -> Result<ReductionOutput> {
    let c = Construction::SatToInhibitorlessGivenAttractor;
    check(f, c)?;
    use Family::*;
    let l = Layout::new(f, &[Vars, NegVars, Clauses, Spade]);
    let mut a = Reactions::new(&l);
    let none = std::iter::empty;
    for j in 0..l.m {
        for x in f.pos(j) {
            a.add([l.x(x)], none(), [l.c(j)]);
        }
    }
    for j in 0..l.m {
        for x in f.neg(j) {
            a.add([l.nx(x)], none(), [l.c(j)]);
        }
    }
    for i in l.all_vars() {
        a.add([l.x(i), l.nx(i)], none(), [l.spade]);
    }
    for i in l.all_vars() {
        for j in 0..l.m {
            a.add([l.x(i), l.c(j)], none(), [l.spade]);
        }
    }
    for i in l.all_vars() {
        for j in 0..l.m {
            a.add([l.nx(i), l.c(j)], none(), [l.spade]);
        }
    }
    for j in 0..l.m {
        a.add([l.c(j)], none(), [l.c(j)]);
    }
    a.add([l.spade], none(), [l.spade]);
    let mut out = output(
        c,
        a.build("sat_inhibitorless_given_attractor"),
        None,
        vec![Claim::new(Problem::GivenStateAttractor, Target::A).from_preimage()],
        l.decode_all_vars(),
    );
    out.distinguished_state = Some(l.set(l.all_clauses()));
    Ok(out)
}

/// Reactantless gadget where `T = C ∪ {club}` is a fixed point, and an
/// attractor iff the CNF formula is satisfiable.
pub fn reduce_sat_to_reactantless_given_attractor(f: &Formula) -> Result<ReductionOutput> {
    let c = Construction::SatToReactantlessGivenAttractor;
    check(f, c)?;
    use Family::*;
    let l = Layout::new(f, &[Vars, NegVars, Clauses, Club, Diamond, Spade]);
    let mut a = Reactions::new(&l);
    let none = std::iter::empty;
    for j in 0..l.m {
        for x in f.pos(j) {
            a.add(none(), [l.nx(x), l.club, l.spade], [l.c(j)]);
        }
    }
    for j in 0..l.m {
        for x in f.neg(j) {
            a.add(none(), [l.x(x), l.club, l.spade], [l.c(j)]);
        }
    }
    for i in l.all_vars() {
        a.add(none(), [l.x(i), l.nx(i), l.club, l.spade], [l.spade]);
    }
    for j in 0..l.m {
        a.add(none(), [l.c(j)], [l.spade]);
    }
    let kept = l.set(l.all_clauses().into_iter().chain([l.club]));
    a.add(none(), kept.complement().iter(), l.all_clauses());
    a.add(none(), [l.diamond, l.spade], [l.club]);
    a.add(none(), [l.club, l.spade], [l.club]);
    a.add(none(), [l.club, l.diamond], [l.club, l.diamond, l.spade]);
    let mut out = output(
        c,
        a.build("sat_reactantless_given_attractor"),
        None,
        vec![Claim::new(Problem::GivenStateAttractor, Target::A).from_preimage()],
        l.decode_all_vars(),
    );
    out.distinguished_state = Some(kept);
    Ok(out)
}

/// Reactantless gadget whose fixed points are `Y ∪ {club}` for the
/// well-formed `Y` satisfying the CNF formula. The attractor variant makes
/// every such fixed point reachable from `Y`.
pub fn reduce_sat_to_reactantless_fixpoint(f: &Formula, variant: FixpointVariant) -> Result<ReductionOutput> {
    let c = match variant {
        FixpointVariant::Exists => Construction::SatToReactantlessFixpoint,
        FixpointVariant::ExistsAttractor => Construction::SatToReactantlessAttractor,
    };
    check(f, c)?;
    use Family::*;
    let l = Layout::new(f, &[Vars, NegVars, Spade, Club]);
    let mut a = Reactions::new(&l);
    let none = std::iter::empty;
    for j in 0..l.m {
        let inh = f.neg(j).into_iter().map(|x| l.nx(x)).chain(f.pos(j).into_iter().map(|x| l.x(x)));
        a.add(none(), inh, [l.spade]);
    }
    for i in l.all_vars() {
        a.add(none(), [l.x(i)], [l.nx(i)]);
    }
    for i in l.all_vars() {
        a.add(none(), [l.nx(i)], [l.x(i)]);
    }
    let (problem, name) = match variant {
        FixpointVariant::Exists => {
            a.add(none(), [l.club], [l.club, l.spade]);
            (Problem::ExistsFixpoint, "sat_reactantless_fixpoint")
        }
        FixpointVariant::ExistsAttractor => {
            a.add(none(), [l.club], [l.club]);
            (Problem::ExistsAttractor, "sat_reactantless_attractor")
        }
    };
    a.add(none(), [l.spade], [l.club]);
    Ok(output(
        c,
        a.build(name),
        None,
        vec![Claim::new(problem, Target::A)],
        l.decode_all_vars(),
    ))
}

/// Reactantless gadget for `∀V1 ∃V2 φ` whose fixed points are the states
/// `T_U = C ∪ ♥_S ∪ U ∪ nx(V1 \ U) ∪ {club}`. `T_U` is an attractor iff
/// some satisfying assignment sets exactly `U` true within `V1`.
///
/// The shared-attractors variant pairs it with a system whose fixed points
/// are the same `T_U`, all of them attractors.
pub fn reduce_qbf_to_reactantless(f: &Formula, variant: QbfVariant) -> Result<ReductionOutput> {
    let c = match variant {
        QbfVariant::Fixge => Construction::QbfToReactantlessFixge,
        QbfVariant::SharedAttractors => Construction::QbfToReactantlessSharedAttractors,
    };
    check(f, c)?;
    use Family::*;
    let l = Layout::new(f, &[Vars, NegVars, Clauses, Hearts, Club, Diamond, Spade]);
    let none = std::iter::empty;
    let clause_groups = |r: &mut Reactions| {
        for j in 0..l.m {
            for x in f.pos(j) {
                r.add(none(), [l.nx(x), l.club, l.spade], [l.c(j)]);
            }
        }
        for j in 0..l.m {
            for x in f.neg(j) {
                r.add(none(), [l.x(x), l.club, l.spade], [l.c(j)]);
            }
        }
        for j in 0..l.m {
            let inh = f
                .neg(j)
                .into_iter()
                .map(|x| l.nx(x))
                .chain(f.pos(j).into_iter().map(|x| l.x(x)))
                .chain([l.club, l.spade]);
            r.add(none(), inh, [l.spade]);
        }
    };
    let shared_groups = |r: &mut Reactions| {
        for i in l.all_vars() {
            r.add(none(), [l.x(i), l.club, l.spade], [l.h(i)]);
        }
        for i in l.all_vars() {
            r.add(none(), [l.nx(i), l.club, l.spade], [l.h(i)]);
        }
        for i in l.all_vars() {
            r.add(none(), [l.x(i), l.nx(i), l.club, l.spade], [l.spade]);
        }
        for j in 0..l.m {
            r.add(none(), [l.c(j)], [l.spade]);
        }
        for i in l.all_vars() {
            r.add(none(), [l.h(i)], [l.spade]);
        }
        for &x in &l.v1 {
            r.add(none(), [l.nx(x)], [l.x(x)]);
        }
        for &x in &l.v1 {
            r.add(none(), [l.x(x)], [l.nx(x)]);
        }
        let kept = l.set(
            l.all_clauses()
                .into_iter()
                .chain(l.all_hearts())
                .chain([l.club])
                .chain(l.v1.iter().flat_map(|&x| [l.x(x), l.nx(x)])),
        );
        r.add(none(), kept.complement().iter(), l.all_clauses().into_iter().chain(l.all_hearts()));
        r.add(none(), [l.diamond, l.spade], [l.club]);
        r.add(none(), [l.club, l.spade], [l.club]);
        r.add(none(), [l.club, l.diamond], [l.club, l.diamond, l.spade]);
    };
    let mut a = Reactions::new(&l);
    clause_groups(&mut a);
    shared_groups(&mut a);
    let decoder = l.decoder(|i| l.x(i), &l.v1);
    Ok(match variant {
        QbfVariant::Fixge => output(
            c,
            a.build("qbf_reactantless"),
            None,
            vec![Claim::new(Problem::ExistsFixge, Target::A).negated()],
            decoder,
        ),
        QbfVariant::SharedAttractors => {
            // Clause entities are produced unconditionally while club and
            // spade are absent, so every T_U is reached from a diamond state.
            let mut b = Reactions::new(&l);
            for j in 0..l.m {
                b.add(none(), [l.club, l.spade], [l.c(j)]);
            }
            shared_groups(&mut b);
            output(
                c,
                a.build("qbf_reactantless"),
                Some(b.build("qbf_reactantless_all_attractors")),
                vec![Claim::new(Problem::ShareAllAttractors, Target::AB)],
                decoder,
            )
        }
    })
}

/// Reactantless pair sharing all fixed points iff the DNF formula is a
/// tautology. No fixed point of either system is an attractor.
pub fn reduce_validity_to_reactantless_shared_fixpoints(f: &Formula) -> Result<ReductionOutput> {
    let c = Construction::ValidityToReactantlessSharedFixpoints;
    check(f, c)?;
    use Family::*;
    let l = Layout::new(f, &[Vars, NegVars, Heart, Club]);
    let none = std::iter::empty;
    let flips = |r: &mut Reactions| {
        for i in l.all_vars() {
            r.add(none(), [l.x(i)], [l.nx(i)]);
        }
        for i in l.all_vars() {
            r.add(none(), [l.nx(i)], [l.x(i)]);
        }
    };
    let mut a = Reactions::new(&l);
    for j in 0..l.m {
        let inh = f
            .neg(j)
            .into_iter()
            .map(|x| l.x(x))
            .chain(f.pos(j).into_iter().map(|x| l.nx(x)))
            .chain([l.club]);
        a.add(none(), inh, [l.heart]);
    }
    flips(&mut a);
    a.add(none(), [l.heart], [l.heart, l.club]);
    let mut b = Reactions::new(&l);
    flips(&mut b);
    b.add(none(), [l.club], [l.heart]);
    b.add(none(), [l.heart], [l.heart, l.club]);
    Ok(output(
        c,
        a.build("validity_reactantless"),
        Some(b.build("validity_reactantless_all")),
        vec![
            Claim::new(Problem::ShareAllFixpoints, Target::AB),
            Claim::new(Problem::ShareAllFixge, Target::AB),
        ],
        l.decode_all_vars(),
    ))
}

/// Inhibitorless pair with a common fixed point iff the CNF formula is
/// satisfiable. The attractor variant drops the spade self-loop so the
/// common fixed points become attractors.
pub fn reduce_sat_to_inhibitorless_common_fixpoint(f: &Formula, variant: CommonVariant) -> Result<ReductionOutput> {
    let c = match variant {
        CommonVariant::Fixpoint => Construction::SatToInhibitorlessCommonFixpoint,
        CommonVariant::Attractor => Construction::SatToInhibitorlessCommonAttractor,
    };
    check(f, c)?;
    use Family::*;
    let l = Layout::new(f, &[Vars, NegVars, Hearts, Spade]);
    let none = std::iter::empty;
    let hearts = l.all_hearts();
    let with_hearts = |base: Vec<usize>| base.into_iter().chain(hearts.iter().copied()).collect::<Vec<_>>();
    let mut a = Reactions::new(&l);
    for j in 0..l.m {
        let re = f
            .neg(j)
            .into_iter()
            .map(|x| l.x(x))
            .chain(f.pos(j).into_iter().map(|x| l.nx(x)))
            .collect();
        a.add(with_hearts(re), none(), [l.spade]);
    }
    for i in l.all_vars() {
        a.add(with_hearts(vec![l.x(i)]), none(), [l.h(i), l.x(i)]);
    }
    for i in l.all_vars() {
        a.add(with_hearts(vec![l.nx(i)]), none(), [l.h(i), l.nx(i)]);
    }
    for i in l.all_vars() {
        a.add(with_hearts(vec![l.x(i), l.nx(i)]), none(), [l.spade]);
    }
    let (problem, name) = match variant {
        CommonVariant::Fixpoint => {
            a.add(with_hearts(vec![l.spade]), none(), [l.spade]);
            (Problem::CommonFixpoint, "sat_inhibitorless_common_fixpoint")
        }
        CommonVariant::Attractor => (Problem::CommonAttractor, "sat_inhibitorless_common_attractor"),
    };
    let mut b = Reactions::new(&l);
    b.add(none(), none(), hearts.iter().copied());
    for i in l.all_vars() {
        b.add([l.x(i)], none(), [l.x(i)]);
    }
    for i in l.all_vars() {
        b.add([l.nx(i)], none(), [l.nx(i)]);
    }
    Ok(output(
        c,
        a.build(name),
        Some(b.build("sat_inhibitorless_assignments")),
        vec![Claim::new(problem, Target::AB)],
        l.decode_all_vars(),
    ))
}

/// Inhibitorless pair sharing all fixed points iff the DNF formula is a
/// tautology.
pub fn reduce_validity_to_inhibitorless_shared_fixpoints(f: &Formula) -> Result<ReductionOutput> {
    let c = Construction::ValidityToInhibitorlessSharedFixpoints;
    check(f, c)?;
    use Family::*;
    let l = Layout::new(f, &[Vars, NegVars, Hearts, Heart]);
    let none = std::iter::empty;
    let hearts = l.all_hearts();
    let with_hearts = |base: Vec<usize>| base.into_iter().chain(hearts.iter().copied()).collect::<Vec<_>>();
    let literal_groups = |r: &mut Reactions| {
        for i in l.all_vars() {
            r.add(with_hearts(vec![l.x(i)]), none(), [l.h(i), l.x(i)]);
        }
        for i in l.all_vars() {
            r.add(with_hearts(vec![l.nx(i)]), none(), [l.h(i), l.nx(i)]);
        }
        for i in l.all_vars() {
            r.add(with_hearts(vec![l.x(i), l.nx(i)]), none(), [l.heart]);
        }
    };
    let mut a = Reactions::new(&l);
    for j in 0..l.m {
        let re = f
            .neg(j)
            .into_iter()
            .map(|x| l.nx(x))
            .chain(f.pos(j).into_iter().map(|x| l.x(x)))
            .chain([l.heart])
            .collect();
        a.add(with_hearts(re), none(), [l.heart]);
    }
    literal_groups(&mut a);
    let mut b = Reactions::new(&l);
    b.add(with_hearts(vec![l.heart]), none(), [l.heart]);
    literal_groups(&mut b);
    Ok(output(
        c,
        a.build("validity_inhibitorless"),
        Some(b.build("validity_inhibitorless_all")),
        vec![
            Claim::new(Problem::ShareAllFixpoints, Target::AB),
            Claim::new(Problem::ShareAllFixge, Target::AB),
        ],
        l.decode_all_vars(),
    ))
}

/// Inhibitorless pair for `∀V1 ∃V2 φ`. The fixed points of both systems are
/// `∅`, `{club}` and `C ∪ ♥_S ∪ U'` with or without `club`, for primed
/// copies `U'` of subsets of `V1`. In the first system `C ∪ ♥_S ∪ U'` is an
/// attractor iff some satisfying assignment sets exactly `U` true in `V1`.
pub fn reduce_qbf_to_inhibitorless_shared_attractors(f: &Formula) -> Result<ReductionOutput> {
    let c = Construction::QbfToInhibitorlessSharedAttractors;
    check(f, c)?;
    use Family::*;
    let l = Layout::new(f, &[Vars, NegVars, Primed, Clauses, Hearts, Club, Spade]);
    let none = std::iter::empty;
    let core: Vec<usize> = l.all_clauses().into_iter().chain(l.all_hearts()).collect();
    let with_core = |extra: usize| core.iter().copied().chain([extra]).collect::<Vec<_>>();
    let sustaining = |r: &mut Reactions| {
        r.add(core.iter().copied(), none(), core.iter().copied());
        for &x in &l.v1 {
            r.add(with_core(l.xp(x)), none(), [l.xp(x)]);
        }
    };
    let mut a = Reactions::new(&l);
    for j in 0..l.m {
        for x in f.pos(j) {
            a.add([l.x(x)], none(), [l.c(j)]);
        }
    }
    for j in 0..l.m {
        for x in f.neg(j) {
            a.add([l.nx(x)], none(), [l.c(j)]);
        }
    }
    for j in 0..l.m {
        let re = f.neg(j).into_iter().map(|x| l.x(x)).chain(f.pos(j).into_iter().map(|x| l.nx(x)));
        a.add(re, none(), [l.spade]);
    }
    for i in l.all_vars() {
        a.add([l.x(i)], none(), [l.h(i)]);
    }
    for i in l.all_vars() {
        a.add([l.nx(i)], none(), [l.h(i)]);
    }
    for i in l.all_vars() {
        a.add([l.x(i), l.nx(i)], none(), [l.club]);
    }
    for &x in &l.v1 {
        a.add([l.x(x)], none(), [l.xp(x)]);
    }
    sustaining(&mut a);
    for i in l.all_vars() {
        a.add(with_core(l.x(i)), none(), [l.club]);
    }
    for i in l.all_vars() {
        a.add(with_core(l.nx(i)), none(), [l.club]);
    }
    a.add([l.club], none(), [l.club]);
    a.add([l.spade], none(), [l.club]);
    let mut b = Reactions::new(&l);
    sustaining(&mut b);
    b.add([l.club], none(), [l.club]);
    let decoder = l.decoder(|i| l.xp(i), &l.v1);
    Ok(output(
        c,
        a.build("qbf_inhibitorless"),
        Some(b.build("qbf_inhibitorless_all_attractors")),
        vec![
            Claim::new(Problem::ShareAllAttractors, Target::AB),
            Claim::new(Problem::ExistsFixge, Target::A).negated(),
        ],
        decoder,
    ))
}

/// A general pair with equal result functions iff the DNF formula is a
/// tautology: the first system produces `heart` exactly on satisfying
/// states, the second always.
pub fn reduce_validity_to_res_eq(f: &Formula) -> Result<ReductionOutput> {
    let c = Construction::ValidityToResEq;
    check(f, c)?;
    use Family::*;
    let l = Layout::new(f, &[Vars, Heart]);
    let none = std::iter::empty;
    let mut a = Reactions::new(&l);
    for j in 0..l.m {
        a.add(
            f.pos(j).into_iter().map(|x| l.x(x)),
            f.neg(j).into_iter().map(|x| l.x(x)),
            [l.heart],
        );
    }
    let mut b = Reactions::new(&l);
    b.add(none(), none(), [l.heart]);
    Ok(output(
        c,
        a.build("validity_res_eq"),
        Some(b.build("constant_heart")),
        vec![Claim::new(Problem::ResEq, Target::AB)],
        l.decode_all_vars(),
    ))
}
