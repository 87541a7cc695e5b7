//! Polynomial-time procedures for constrained classes.
//!
//! Inhibitorless systems have monotone result functions and reactantless
//! systems antitone ones. Both facts let comparisons and bijectivity be
//! decided from a handful of critical states instead of all `2^|S|`.

use crate::dynamics::check_background;
use crate::error::{Error, Result};
use crate::state::State;
use crate::system::{Reaction, ReactionSystem};

fn require_inhibitorless(sys: &ReactionSystem) -> Result<()> {
    if sys.classify().is_inhibitorless {
        Ok(())
    } else {
        Err(Error::WrongClass {
            expected: "inhibitorless",
        })
    }
}

fn require_reactantless(sys: &ReactionSystem) -> Result<()> {
    if sys.classify().is_reactantless {
        Ok(())
    } else {
        Err(Error::WrongClass {
            expected: "reactantless",
        })
    }
}

/// Knaster–Tarski iteration from `start`; the chain ends with the first
/// fixed point. Each element costs one result evaluation.
fn chain_from(sys: &ReactionSystem, start: State) -> Vec<State> {
    let mut chain = vec![start];
    loop {
        let last = chain.last().expect("non-empty");
        let next = sys.result_unchecked(last);
        if next == *last {
            return chain;
        }
        chain.push(next);
    }
}

/// The chain `∅, res(∅), res²(∅), ...` up to the least fixed point.
/// It is ⊆-increasing, so it has at most `|S| + 1` elements.
pub fn lfp_chain(sys: &ReactionSystem) -> Result<Vec<State>> {
    require_inhibitorless(sys)?;
    Ok(chain_from(sys, sys.empty_state()))
}

/// The chain `S, res(S), ...` down to the greatest fixed point.
pub fn gfp_chain(sys: &ReactionSystem) -> Result<Vec<State>> {
    require_inhibitorless(sys)?;
    Ok(chain_from(sys, sys.full_state()))
}

/// Least fixed point of a monotone result function.
pub fn lfp_monotone(sys: &ReactionSystem) -> Result<State> {
    Ok(lfp_chain(sys)?.pop().expect("non-empty"))
}

/// Greatest fixed point of a monotone result function.
pub fn gfp_monotone(sys: &ReactionSystem) -> Result<State> {
    Ok(gfp_chain(sys)?.pop().expect("non-empty"))
}

/// `res_A(T) ⊆ res_B(T)` for every `T`, decided on the reactant sets of `A`.
pub fn pointwise_leq_monotone(a: &ReactionSystem, b: &ReactionSystem) -> Result<bool> {
    require_inhibitorless(a)?;
    require_inhibitorless(b)?;
    check_background(a, b)?;
    Ok(a.reactions().iter().all(|r| {
        let t = &r.reactants;
        a.result_unchecked(t).is_subset(&b.result_unchecked(t))
    }))
}

pub fn res_eq_inhibitorless(a: &ReactionSystem, b: &ReactionSystem) -> Result<bool> {
    Ok(pointwise_leq_monotone(a, b)? && pointwise_leq_monotone(b, a)?)
}

/// `res_A(T) ⊆ res_B(T)` for every `T`, decided on the states `S \ I_a`.
pub fn pointwise_leq_antitone(a: &ReactionSystem, b: &ReactionSystem) -> Result<bool> {
    require_reactantless(a)?;
    require_reactantless(b)?;
    check_background(a, b)?;
    Ok(a.reactions().iter().all(|r| {
        let t = r.inhibitors.complement();
        a.result_unchecked(&t).is_subset(&b.result_unchecked(&t))
    }))
}

pub fn res_eq_reactantless(a: &ReactionSystem, b: &ReactionSystem) -> Result<bool> {
    Ok(pointwise_leq_antitone(a, b)? && pointwise_leq_antitone(b, a)?)
}

/// True iff no state enables any reaction, i.e. every reaction has
/// overlapping reactants and inhibitors.
pub fn is_empty_function(sys: &ReactionSystem) -> bool {
    sys.reactions()
        .iter()
        .all(|r| !r.reactants.is_disjoint(&r.inhibitors))
}

/// First condition of the monotone bijectivity criterion that fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BijectivityFailure {
    /// `res(∅) ≠ ∅`.
    EmptyNotFixed,
    /// `|res({x})| ≠ 1`.
    SingletonImage { entity: usize, size: usize },
    /// `res({x}) = res({y})` for `x ≠ y`.
    SingletonCollision { first: usize, second: usize },
    /// `res(R) ≠ ⋃_{x∈R} res({x})` for the reactants `R` of this reaction.
    NotAdditive { reaction: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bijectivity {
    Bijective,
    Fails(BijectivityFailure),
}

impl Bijectivity {
    pub fn is_bijective(&self) -> bool {
        matches!(self, Bijectivity::Bijective)
    }
}

/// The three-condition criterion for monotone result functions. On the
/// finite lattice `2^S` injective and bijective coincide.
pub fn bijective_inhibitorless(sys: &ReactionSystem) -> Result<Bijectivity> {
    require_inhibitorless(sys)?;
    if !sys.result_unchecked(&sys.empty_state()).is_empty() {
        return Ok(Bijectivity::Fails(BijectivityFailure::EmptyNotFixed));
    }
    let mut images: Vec<usize> = Vec::with_capacity(sys.width());
    let mut owner = vec![None; sys.width()];
    for x in 0..sys.width() {
        let img = sys.result_unchecked(&sys.empty_state().with(x));
        if img.len() != 1 {
            return Ok(Bijectivity::Fails(BijectivityFailure::SingletonImage {
                entity: x,
                size: img.len(),
            }));
        }
        let y = img.iter().next().expect("one element");
        if let Some(first) = owner[y] {
            return Ok(Bijectivity::Fails(BijectivityFailure::SingletonCollision {
                first,
                second: x,
            }));
        }
        owner[y] = Some(x);
        images.push(y);
    }
    for (j, r) in sys.reactions().iter().enumerate() {
        let mut union = sys.empty_state();
        for x in r.reactants.iter() {
            union.insert(images[x]);
        }
        if sys.result_unchecked(&r.reactants) != union {
            return Ok(Bijectivity::Fails(BijectivityFailure::NotAdditive { reaction: j }));
        }
    }
    Ok(Bijectivity::Bijective)
}

/// Bijectivity of an antitone result function. `res` is injective iff
/// `T ↦ res(S \ T)` is, and that map is the monotone result function of the
/// complement conjugate, so the three-condition criterion applies to it.
pub fn bijective_reactantless(sys: &ReactionSystem) -> Result<Bijectivity> {
    require_reactantless(sys)?;
    bijective_inhibitorless(&sys.complement_conjugate()?)
}

/// Drops every reaction with two or more reactants from a bijective
/// inhibitorless system. A bijective monotone result function is additive,
/// so the remaining `RS(1,0)` system has the same result function; this is
/// re-verified before returning.
pub fn additive_reduction(sys: &ReactionSystem) -> Result<ReactionSystem> {
    if let Bijectivity::Fails(why) = bijective_inhibitorless(sys)? {
        return Err(Error::Precondition(format!("result function is not bijective: {why:?}")));
    }
    let reduced = sys.filter_reactions(|r: &Reaction| r.reactants.len() <= 1);
    if !res_eq_inhibitorless(sys, &reduced)? {
        return Err(Error::Recheck(
            "reduced system does not reproduce the result function".into(),
        ));
    }
    Ok(reduced)
}
