//! Random systems for property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::state::EntitySet;
use crate::system::{EntityTable, Reaction, ReactionSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SystemClass {
    General,
    Reactantless,
    Inhibitorless,
}

#[derive(Debug, Clone, Copy)]
pub struct SampleConfig {
    pub class: SystemClass,
    pub width: usize,
    /// Reaction count is drawn from `1..=max_reactions`.
    pub max_reactions: usize,
    pub max_reactants: usize,
    pub max_inhibitors: usize,
    pub max_products: usize,
}

impl SampleConfig {
    pub fn new(class: SystemClass, width: usize) -> Self {
        SampleConfig {
            class,
            width,
            max_reactions: 2 * width.max(1),
            max_reactants: 3,
            max_inhibitors: 3,
            max_products: 2,
        }
    }

    pub fn with_max_reactions(mut self, n: usize) -> Self {
        self.max_reactions = n.max(1);
        self
    }
}

/// Entity names `e0`, `e1`, ...
pub fn entity_table(width: usize) -> EntityTable {
    EntityTable::new((0..width).map(|i| format!("e{i}"))).expect("generated names are valid")
}

fn random_subset<R: Rng + ?Sized>(rng: &mut R, width: usize, min: usize, max: usize) -> EntitySet {
    let max = max.min(width);
    let k = rng.gen_range(min.min(max)..=max);
    EntitySet::from_indices(width, rand::seq::index::sample(rng, width, k).into_iter()).expect("index below width")
}

/// A random system of the configured class. Requires `width >= 1`.
pub fn random_system<R: Rng + ?Sized>(rng: &mut R, config: &SampleConfig) -> ReactionSystem {
    assert!(config.width >= 1, "random systems need at least one entity");
    let w = config.width;
    let count = rng.gen_range(1..=config.max_reactions.max(1));
    let reactions = (0..count)
        .map(|_| random_reaction(rng, config))
        .collect();
    ReactionSystem::new(format!("random{w}"), entity_table(w), reactions).expect("sampled reactions are well formed")
}

fn random_reaction<R: Rng + ?Sized>(rng: &mut R, config: &SampleConfig) -> Reaction {
    let w = config.width;
    let none = EntitySet::empty(w);
    let reactants = match config.class {
        SystemClass::Reactantless => none.clone(),
        _ => random_subset(rng, w, 0, config.max_reactants),
    };
    let inhibitors = match config.class {
        SystemClass::Inhibitorless => none,
        // Keep general reactions mostly satisfiable.
        SystemClass::General => random_subset(rng, w, 0, config.max_inhibitors).difference(&reactants),
        SystemClass::Reactantless => random_subset(rng, w, 0, config.max_inhibitors),
    };
    let products = random_subset(rng, w, 1, config.max_products.max(1));
    Reaction::new(reactants, inhibitors, products)
}

/// A syntactically different system with the same result function: the
/// reactions are shuffled, some are split into singleton products,
/// duplicated, or shadowed by a weaker copy that can only fire when the
/// original does.
pub fn equivalent_variant<R: Rng + ?Sized>(rng: &mut R, sys: &ReactionSystem) -> ReactionSystem {
    let w = sys.width();
    let class = sys.classify();
    let mut out: Vec<Reaction> = Vec::new();
    for r in sys.reactions() {
        match rng.gen_range(0..4) {
            0 => out.extend(r.products.iter().map(|p| {
                Reaction::new(r.reactants.clone(), r.inhibitors.clone(), EntitySet::empty(w).with(p))
            })),
            1 => {
                out.push(r.clone());
                out.push(r.clone());
            }
            2 if !(class.is_reactantless && class.is_inhibitorless) => {
                out.push(r.clone());
                let extra = random_subset(rng, w, 1, 2);
                let keep: Vec<usize> = r.products.iter().collect();
                let p = *keep.choose(rng).expect("products are nonempty");
                let (re, inh) = if class.is_reactantless {
                    // Extra inhibitors only narrow the enabling states.
                    (r.reactants.clone(), r.inhibitors.union(&extra))
                } else {
                    (r.reactants.union(&extra), r.inhibitors.clone())
                };
                out.push(Reaction::new(re, inh, EntitySet::empty(w).with(p)));
            }
            _ => out.push(r.clone()),
        }
    }
    out.shuffle(rng);
    ReactionSystem::new(format!("{}_variant", sys.name()), sys.entities().clone(), out)
        .expect("variant reactions are well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::State;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn classes_are_respected() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let r = random_system(&mut rng, &SampleConfig::new(SystemClass::Reactantless, 5));
            assert!(r.classify().is_reactantless);
            let i = random_system(&mut rng, &SampleConfig::new(SystemClass::Inhibitorless, 5));
            assert!(i.classify().is_inhibitorless);
        }
    }

    #[test]
    fn variants_have_equal_results() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for class in [SystemClass::General, SystemClass::Reactantless, SystemClass::Inhibitorless] {
            for _ in 0..30 {
                let a = random_system(&mut rng, &SampleConfig::new(class, 5));
                let b = equivalent_variant(&mut rng, &a);
                assert!(!a.classify().is_reactantless || b.classify().is_reactantless);
                assert!(!a.classify().is_inhibitorless || b.classify().is_inhibitorless);
                for bits in 0..32 {
                    let t = State::from_bits(5, bits);
                    assert_eq!(a.result(&t).unwrap(), b.result(&t).unwrap());
                }
            }
        }
    }
}
