//! The neutrality function n(S) = A − S⁺, the defence function
//! d(S) = {a | a⁻ ⊆ S⁺}, and fixed-point iteration over them.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::framework::{ArgSet, ArgumentId, Framework};

/// n(S): the arguments `set` does not attack.
pub fn neutrality(af: &Framework, set: &ArgSet) -> Result<ArgSet> {
    af.check(set)?;
    Ok(af.set_from_bits(neutrality_bits(af, set.bits())))
}

/// d(S): the arguments all of whose attackers are attacked by `set`.
pub fn defence(af: &Framework, set: &ArgSet) -> Result<ArgSet> {
    af.check(set)?;
    Ok(af.set_from_bits(defence_bits(af, set.bits())))
}

/// Whether `a` is acceptable with respect to `set`, i.e. `a ∈ d(set)`.
pub fn defends(af: &Framework, set: &ArgSet, a: ArgumentId) -> Result<bool> {
    af.check(set)?;
    af.check_argument(a)?;
    let plus = af.forward_bits(set.bits());
    Ok(af.predecessor_bits(a.index()).is_subset(&plus))
}

pub(crate) fn neutrality_bits(af: &Framework, bits: &FixedBitSet) -> FixedBitSet {
    let mut out = af.forward_bits(bits);
    out.toggle_range(..);
    out
}

pub(crate) fn defence_bits(af: &Framework, bits: &FixedBitSet) -> FixedBitSet {
    let plus = af.forward_bits(bits);
    let mut out = FixedBitSet::with_capacity(af.len());
    for a in 0..af.len() {
        if af.predecessor_bits(a).is_subset(&plus) {
            out.insert(a);
        }
    }
    out
}

/// A set-valued function of a framework that can be handed to
/// [`iterate_to_fixpoint`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetOperator {
    /// n. Antitone, so it is refused by the iterator.
    Neutrality,
    /// n ∘ n, which coincides with d.
    NeutralitySquared,
    Defence,
}

impl SetOperator {
    pub fn is_monotone(self) -> bool {
        !matches!(self, SetOperator::Neutrality)
    }

    pub fn name(self) -> &'static str {
        match self {
            SetOperator::Neutrality => "neutrality",
            SetOperator::NeutralitySquared => "neutrality squared",
            SetOperator::Defence => "defence",
        }
    }

    fn apply(self, af: &Framework, bits: &FixedBitSet) -> FixedBitSet {
        match self {
            SetOperator::Neutrality => neutrality_bits(af, bits),
            SetOperator::NeutralitySquared => neutrality_bits(af, &neutrality_bits(af, bits)),
            SetOperator::Defence => defence_bits(af, bits),
        }
    }
}

/// The sequence S₀, S₁ = f(S₀), … produced by iterating a set operator.
///
/// `steps` never repeats its last element: when `converged` is set, the
/// final step is a fixed point and applying the operator to it returns it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationTrace {
    pub steps: Vec<ArgSet>,
    pub converged: bool,
}

impl IterationTrace {
    /// The fixed point reached, if the iteration converged.
    pub fn fixpoint(&self) -> Option<&ArgSet> {
        if self.converged {
            self.steps.last()
        } else {
            None
        }
    }

    pub fn last(&self) -> &ArgSet {
        self.steps.last().expect("a trace always holds its start")
    }
}

/// Iterates `op` from `start` until two consecutive values agree, giving up
/// after |A| + 1 steps.
///
/// From a post-fixed start (in particular ∅) a monotone operator yields a
/// ⊆-ascending chain, which always stabilises within the bound. Other
/// starts may cycle, e.g. d on an even directed cycle started from one
/// argument; those traces come back with `converged == false`.
pub fn iterate_to_fixpoint(
    af: &Framework,
    start: &ArgSet,
    op: SetOperator,
) -> Result<IterationTrace> {
    af.check(start)?;
    if !op.is_monotone() {
        return Err(Error::NotMonotone(op.name()));
    }
    let cap = af.len() + 1;
    let mut current = start.bits().clone();
    let post_fixed = current.is_subset(&op.apply(af, &current));
    let mut steps = vec![start.clone()];
    let converged = loop {
        let next = op.apply(af, &current);
        if next == current {
            break true;
        }
        if steps.len() == cap {
            break false;
        }
        steps.push(af.set_from_bits(next.clone()));
        current = next;
    };
    assert!(
        converged || !post_fixed,
        "monotone iteration from a post-fixed point exceeded |A| + 1 steps"
    );
    Ok(IterationTrace { steps, converged })
}

/// Kleene iteration of d from ∅; the fixed point is the grounded extension.
pub fn kleene_least_fixpoint(af: &Framework) -> IterationTrace {
    iterate_to_fixpoint(af, &af.empty_set(), SetOperator::Defence)
        .expect("the empty set belongs to its own framework")
}
