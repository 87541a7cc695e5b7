//! The reaction-system model: background entities, reactions, the result
//! function, singleton-product normalization and resource classes.

use std::cell::Cell;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::state::{EntitySet, State};

thread_local! {
    static RESULT_EVALUATIONS: Cell<u64> = const { Cell::new(0) };
}

/// Number of [`ReactionSystem::result`] calls made so far on this thread.
///
/// Used to compare the work done by the polynomial procedures against
/// exhaustive enumeration.
pub fn result_evaluations() -> u64 {
    RESULT_EVALUATIONS.with(|c| c.get())
}

/// Credits `n` result evaluations performed outside [`ReactionSystem::result`]
/// (the compiled kernels used by exhaustive enumeration).
pub(crate) fn add_evaluations(n: u64) {
    RESULT_EVALUATIONS.with(|c| c.set(c.get() + n));
}

/// Ordered, duplicate-free entity names; position is the entity index.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EntityTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

/// Names must be usable as tokens in the system and state text formats.
pub fn is_valid_entity_name(name: &str) -> bool {
    !name.is_empty()
        && name != "-"
        && !name.starts_with('#')
        && !name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '|' | ',' | '{' | '}'))
}

impl EntityTable {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Result<Self> {
        let mut table = EntityTable::default();
        for n in names {
            table.push(n.into())?;
        }
        Ok(table)
    }

    pub fn push(&mut self, name: String) -> Result<usize> {
        if !is_valid_entity_name(&name) {
            return Err(Error::InvalidEntityName(name));
        }
        if self.index.contains_key(&name) {
            return Err(Error::DuplicateEntity(name));
        }
        let i = self.names.len();
        self.index.insert(name.clone(), i);
        self.names.push(name);
        Ok(i)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Resolves names to a set; unknown names are an error.
    pub fn set_of<'a, I: IntoIterator<Item = &'a str>>(&self, names: I) -> Result<EntitySet> {
        let mut s = EntitySet::empty(self.len());
        for n in names {
            let i = self
                .index_of(n)
                .ok_or_else(|| Error::UnknownEntity(n.to_string()))?;
            s.insert(i);
        }
        Ok(s)
    }

    /// Entity names of `set`, in declaration order.
    pub fn names_of<'a>(&'a self, set: &'a EntitySet) -> impl Iterator<Item = &'a str> + 'a {
        set.iter().map(move |i| self.names[i].as_str())
    }

    /// `{a,b}` notation, entities in declaration order.
    pub fn format_set(&self, set: &EntitySet) -> String {
        let names: Vec<&str> = self.names_of(set).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Parses `{a,b}`, `a,b`, `a b` or `{}`.
    pub fn parse_set(&self, text: &str) -> Result<EntitySet> {
        let inner = text.trim();
        let inner = inner
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .unwrap_or(inner);
        self.set_of(
            inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty()),
        )
    }
}

/// A reaction `(R, I, P)`. Reactants and inhibitors may overlap, in which
/// case the reaction is never enabled.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Reaction {
    pub reactants: EntitySet,
    pub inhibitors: EntitySet,
    pub products: EntitySet,
}

impl Reaction {
    pub fn new(reactants: EntitySet, inhibitors: EntitySet, products: EntitySet) -> Self {
        Reaction {
            reactants,
            inhibitors,
            products,
        }
    }

    pub fn is_enabled(&self, state: &State) -> bool {
        self.reactants.is_subset(state) && self.inhibitors.is_disjoint(state)
    }
}

/// Resource parameters `(r, i)`: the largest reactant and inhibitor set sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResourceClass {
    pub max_reactants: usize,
    pub max_inhibitors: usize,
    pub is_reactantless: bool,
    pub is_inhibitorless: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReactionSystem {
    name: String,
    entities: EntityTable,
    reactions: Vec<Reaction>,
}

impl ReactionSystem {
    /// Validates widths and non-empty products. Reaction order is kept as
    /// given, duplicates included.
    pub fn new(name: impl Into<String>, entities: EntityTable, reactions: Vec<Reaction>) -> Result<Self> {
        let width = entities.len();
        for (index, r) in reactions.iter().enumerate() {
            for set in [&r.reactants, &r.inhibitors, &r.products] {
                if set.width() != width {
                    return Err(Error::WidthMismatch {
                        expected: width,
                        found: set.width(),
                    });
                }
            }
            if r.products.is_empty() {
                return Err(Error::EmptyProducts { index });
            }
        }
        Ok(ReactionSystem {
            name: name.into(),
            entities,
            reactions,
        })
    }

    pub fn builder(name: impl Into<String>) -> SystemBuilder {
        SystemBuilder {
            name: name.into(),
            entities: EntityTable::default(),
            reactions: Vec::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn entities(&self) -> &EntityTable {
        &self.entities
    }

    pub fn reactions(&self) -> &[Reaction] {
        &self.reactions
    }

    /// Number of entities `|S|`.
    pub fn width(&self) -> usize {
        self.entities.len()
    }

    pub fn empty_state(&self) -> State {
        State::empty(self.width())
    }

    pub fn full_state(&self) -> State {
        State::full(self.width())
    }

    pub fn state(&self, names: &[&str]) -> Result<State> {
        self.entities.set_of(names.iter().copied())
    }

    pub fn format_state(&self, state: &State) -> String {
        self.entities.format_set(state)
    }

    pub fn same_background(&self, other: &ReactionSystem) -> bool {
        self.entities.names() == other.entities.names()
    }

    pub(crate) fn check_state(&self, state: &State) -> Result<()> {
        if state.width() != self.width() {
            return Err(Error::WidthMismatch {
                expected: self.width(),
                found: state.width(),
            });
        }
        Ok(())
    }

    fn check_index(&self, j: usize) -> Result<()> {
        if j >= self.reactions.len() {
            return Err(Error::ReactionIndex {
                index: j,
                len: self.reactions.len(),
            });
        }
        Ok(())
    }

    pub fn enabled(&self, j: usize, state: &State) -> Result<bool> {
        self.check_index(j)?;
        self.check_state(state)?;
        Ok(self.reactions[j].is_enabled(state))
    }

    /// `P_j` if reaction `j` is enabled in `state`, otherwise the empty set.
    pub fn result_single(&self, j: usize, state: &State) -> Result<State> {
        if self.enabled(j, state)? {
            Ok(self.reactions[j].products.clone())
        } else {
            Ok(self.empty_state())
        }
    }

    /// The result function: union of the products of all enabled reactions.
    pub fn result(&self, state: &State) -> Result<State> {
        self.check_state(state)?;
        Ok(self.result_unchecked(state))
    }

    pub(crate) fn result_unchecked(&self, state: &State) -> State {
        RESULT_EVALUATIONS.with(|c| c.set(c.get() + 1));
        let mut out = self.empty_state();
        for r in &self.reactions {
            if r.is_enabled(state) {
                out.union_with(&r.products);
            }
        }
        out
    }

    /// Splits every reaction into one reaction per product, preserving order.
    pub fn normalize_singleton_products(&self) -> ReactionSystem {
        let width = self.width();
        let reactions = self
            .reactions
            .iter()
            .flat_map(|r| {
                r.products.iter().map(move |p| {
                    Reaction::new(
                        r.reactants.clone(),
                        r.inhibitors.clone(),
                        EntitySet::empty(width).with(p),
                    )
                })
            })
            .collect();
        ReactionSystem {
            name: self.name.clone(),
            entities: self.entities.clone(),
            reactions,
        }
    }

    pub fn classify(&self) -> ResourceClass {
        let max_reactants = self.reactions.iter().map(|r| r.reactants.len()).max().unwrap_or(0);
        let max_inhibitors = self.reactions.iter().map(|r| r.inhibitors.len()).max().unwrap_or(0);
        ResourceClass {
            max_reactants,
            max_inhibitors,
            is_reactantless: max_reactants == 0,
            is_inhibitorless: max_inhibitors == 0,
        }
    }

    /// Maps a reactantless system `(∅, I, P)` to the inhibitorless system
    /// `(I, ∅, P)`, so that `conj.result(T) == self.result(S \ T)`.
    pub fn complement_conjugate(&self) -> Result<ReactionSystem> {
        if !self.classify().is_reactantless {
            return Err(Error::WrongClass {
                expected: "reactantless",
            });
        }
        let reactions = self
            .reactions
            .iter()
            .map(|r| Reaction::new(r.inhibitors.clone(), self.empty_state(), r.products.clone()))
            .collect();
        Ok(ReactionSystem {
            name: self.name.clone(),
            entities: self.entities.clone(),
            reactions,
        })
    }

    /// A copy keeping only the reactions for which `keep` returns true.
    pub fn filter_reactions(&self, keep: impl Fn(&Reaction) -> bool) -> ReactionSystem {
        ReactionSystem {
            name: self.name.clone(),
            entities: self.entities.clone(),
            reactions: self.reactions.iter().filter(|r| keep(r)).cloned().collect(),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> ReactionSystem {
        self.name = name.into();
        self
    }
}

/// Incremental construction by entity name.
#[derive(Debug, Clone)]
pub struct SystemBuilder {
    name: String,
    entities: EntityTable,
    reactions: Vec<(Vec<usize>, Vec<usize>, Vec<usize>)>,
}

impl SystemBuilder {
    pub fn entity(mut self, name: &str) -> Result<Self> {
        self.entities.push(name.to_string())?;
        Ok(self)
    }

    pub fn entities<'a, I: IntoIterator<Item = &'a str>>(mut self, names: I) -> Result<Self> {
        for n in names {
            self.entities.push(n.to_string())?;
        }
        Ok(self)
    }

    pub fn add_entity(&mut self, name: impl Into<String>) -> Result<usize> {
        self.entities.push(name.into())
    }

    pub fn entity_table(&self) -> &EntityTable {
        &self.entities
    }

    pub fn reaction(mut self, reactants: &[&str], inhibitors: &[&str], products: &[&str]) -> Result<Self> {
        let resolve = |names: &[&str]| -> Result<Vec<usize>> {
            names
                .iter()
                .map(|n| {
                    self.entities
                        .index_of(n)
                        .ok_or_else(|| Error::UnknownEntity(n.to_string()))
                })
                .collect()
        };
        let r = (resolve(reactants)?, resolve(inhibitors)?, resolve(products)?);
        self.reactions.push(r);
        Ok(self)
    }

    /// Adds a reaction by entity indices.
    pub fn push_reaction<R, I, P>(&mut self, reactants: R, inhibitors: I, products: P)
    where
        R: IntoIterator<Item = usize>,
        I: IntoIterator<Item = usize>,
        P: IntoIterator<Item = usize>,
    {
        self.reactions.push((
            reactants.into_iter().collect(),
            inhibitors.into_iter().collect(),
            products.into_iter().collect(),
        ));
    }

    pub fn build(self) -> Result<ReactionSystem> {
        let width = self.entities.len();
        let reactions = self
            .reactions
            .into_iter()
            .map(|(r, i, p)| {
                Ok(Reaction::new(
                    EntitySet::from_indices(width, r)?,
                    EntitySet::from_indices(width, i)?,
                    EntitySet::from_indices(width, p)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        ReactionSystem::new(self.name, self.entities, reactions)
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

    fn all_states(width: usize) -> impl Iterator<Item = State> {
        (0u64..1 << width).map(move |b| State::from_bits(width, b))
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

    #[test]
    fn enabled_examples() {
        let s = sys(&["a", "b"], &[(&["a"], &[], &["b"])]);
        assert!(s.enabled(0, &s.state(&["a"]).unwrap()).unwrap());
        let s = sys(&["a", "b"], &[(&[], &["a"], &["b"])]);
        assert!(!s.enabled(0, &s.state(&["a"]).unwrap()).unwrap());
        let s = sys(&["b"], &[(&[], &[], &["b"])]);
        assert!(s.enabled(0, &s.empty_state()).unwrap());
    }

    #[test]
    fn enabled_usage_errors() {
        let s = sys(&["a", "b"], &[(&["a"], &[], &["b"])]);
        assert_eq!(
            s.enabled(1, &s.empty_state()),
            Err(Error::ReactionIndex { index: 1, len: 1 })
        );
        assert_eq!(
            s.enabled(0, &State::empty(3)),
            Err(Error::WidthMismatch { expected: 2, found: 3 })
        );
        assert!(s.result(&State::empty(1)).is_err());
    }

    #[test]
    fn result_examples() {
        let s = sys(&["p", "q"], &[(&[], &[], &["p"])]);
        for t in all_states(2) {
            assert_eq!(s.result(&t).unwrap(), s.state(&["p"]).unwrap());
        }
        let swap = sys(&["a", "b"], &[(&["a"], &[], &["b"]), (&["b"], &[], &["a"])]);
        assert_eq!(
            swap.result(&swap.state(&["a"]).unwrap()).unwrap(),
            swap.state(&["b"]).unwrap()
        );
        let f = fig1();
        assert_eq!(f.result(&f.empty_state()).unwrap(), f.full_state());
    }

    #[test]
    fn result_single_examples() {
        let s = sys(&["a", "b", "c"], &[(&["a"], &[], &["b", "c"]), (&[], &["a"], &["c"])]);
        assert_eq!(
            s.result_single(0, &s.state(&["a"]).unwrap()).unwrap(),
            s.state(&["b", "c"]).unwrap()
        );
        assert_eq!(s.result_single(0, &s.empty_state()).unwrap(), s.empty_state());
        assert_eq!(
            s.result_single(1, &s.state(&["b"]).unwrap()).unwrap(),
            s.state(&["c"]).unwrap()
        );
    }

    #[test]
    fn overlapping_reactants_and_inhibitors_never_fire() {
        let s = sys(&["a", "b"], &[(&["a"], &["a"], &["b"])]);
        for t in all_states(2) {
            assert!(s.result(&t).unwrap().is_empty());
        }
    }

    #[test]
    fn empty_products_rejected() {
        let t = EntityTable::new(["a"]).unwrap();
        let r = Reaction::new(State::empty(1), State::empty(1), State::empty(1));
        assert_eq!(
            ReactionSystem::new("x", t, vec![r]),
            Err(Error::EmptyProducts { index: 0 })
        );
    }

    #[test]
    fn entity_table_rejects_bad_names() {
        assert!(matches!(EntityTable::new(["a", "a"]), Err(Error::DuplicateEntity(_))));
        assert!(matches!(EntityTable::new(["-"]), Err(Error::InvalidEntityName(_))));
        assert!(matches!(EntityTable::new(["a b"]), Err(Error::InvalidEntityName(_))));
        assert!(matches!(EntityTable::new([""]), Err(Error::InvalidEntityName(_))));
    }

    #[test]
    fn set_notation_round_trip() {
        let t = EntityTable::new(["a", "b", "c"]).unwrap();
        let s = t.parse_set("{c,a}").unwrap();
        assert_eq!(t.format_set(&s), "{a,c}");
        assert_eq!(t.parse_set("{}").unwrap(), EntitySet::empty(3));
        assert_eq!(t.parse_set("b c").unwrap(), t.parse_set("{b,c}").unwrap());
        assert!(matches!(t.parse_set("{z}"), Err(Error::UnknownEntity(_))));
    }

    #[test]
    fn normalize_splits_products() {
        let s = sys(&["a", "b", "c"], &[(&["a"], &[], &["b", "c"])]);
        let n = s.normalize_singleton_products();
        let expected = sys(&["a", "b", "c"], &[(&["a"], &[], &["b"]), (&["a"], &[], &["c"])]);
        assert_eq!(n, expected);
        assert_eq!(n.normalize_singleton_products(), n);
    }

    #[test]
    fn normalize_preserves_result_exhaustively() {
        let s = sys(
            &["a", "b", "c", "d", "e", "f"],
            &[
                (&["a"], &["b"], &["c", "d"]),
                (&[], &["e"], &["a", "f"]),
                (&["c", "d"], &[], &["b", "e"]),
            ],
        );
        let n = s.normalize_singleton_products();
        assert_eq!(n.reactions().len(), 6);
        for t in all_states(6) {
            assert_eq!(s.result(&t).unwrap(), n.result(&t).unwrap());
        }
    }

    #[test]
    fn classify_examples() {
        let c = sys(&["a", "b"], &[(&[], &["a"], &["b"])]).classify();
        assert_eq!((c.max_reactants, c.max_inhibitors), (0, 1));
        assert!(c.is_reactantless && !c.is_inhibitorless);
        let c = sys(&["a", "b", "c"], &[(&["a", "b"], &[], &["c"])]).classify();
        assert_eq!((c.max_reactants, c.max_inhibitors), (2, 0));
        assert!(c.is_inhibitorless && !c.is_reactantless);
        let c = sys(&["a", "b", "c"], &[(&["a"], &["b"], &["c"])]).classify();
        assert_eq!((c.max_reactants, c.max_inhibitors), (1, 1));
        assert!(!c.is_inhibitorless && !c.is_reactantless);
        let c = sys(&["a"], &[]).classify();
        assert!(c.is_inhibitorless && c.is_reactantless);
    }

    #[test]
    fn conjugate_of_complement_map_is_identity() {
        let s = sys(&["x", "y"], &[(&[], &["x"], &["x"]), (&[], &["y"], &["y"])]);
        let c = s.complement_conjugate().unwrap();
        assert_eq!(c, sys(&["x", "y"], &[(&["x"], &[], &["x"]), (&["y"], &[], &["y"])]));
        for t in all_states(2) {
            assert_eq!(c.result(&t).unwrap(), t);
            assert_eq!(c.result(&t).unwrap(), s.result(&t.complement()).unwrap());
        }
    }

    #[test]
    fn conjugate_identity_exhaustive() {
        let s = sys(&["a", "b", "c"], &[(&[], &["a", "b"], &["c"])]);
        let c = s.complement_conjugate().unwrap();
        assert_eq!(c, sys(&["a", "b", "c"], &[(&["a", "b"], &[], &["c"])]));
        for t in all_states(3) {
            assert_eq!(c.result(&t).unwrap(), s.result(&t.complement()).unwrap());
        }
        let empty = sys(&["a"], &[]);
        assert_eq!(empty.complement_conjugate().unwrap().reactions().len(), 0);
        let bad = sys(&["a", "b"], &[(&["a"], &[], &["b"])]);
        assert!(matches!(bad.complement_conjugate(), Err(Error::WrongClass { .. })));
    }
}
