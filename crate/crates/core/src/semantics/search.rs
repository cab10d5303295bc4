//! Depth-first search over argument indices.
//!
//! Each level decides whether one argument joins the candidate set. A node
//! is abandoned as soon as the decisions taken so far rule out every
//! completion; at the leaves the same feasibility test becomes the exact
//! membership test, so no separate leaf check is needed.

use std::ops::ControlFlow;

use fixedbitset::FixedBitSet;

use crate::framework::Framework;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Goal {
    ConflictFree,
    Naive,
    SelfDefending,
    Admissible,
    Complete,
    Stable,
}

impl Goal {
    fn needs_conflict_free(self) -> bool {
        !matches!(self, Goal::SelfDefending)
    }

    fn needs_self_defence(self) -> bool {
        matches!(
            self,
            Goal::SelfDefending | Goal::Admissible | Goal::Complete
        )
    }
}

pub(crate) struct Search<'a> {
    af: &'a Framework,
    goal: Goal,
    inside: FixedBitSet,
    outside: FixedBitSet,
    // number of members attacking each argument; S⁺ = {a | count > 0}
    hits: Vec<u32>,
}

impl<'a> Search<'a> {
    pub(crate) fn new(af: &'a Framework, goal: Goal) -> Self {
        let n = af.len();
        Search {
            af,
            goal,
            inside: FixedBitSet::with_capacity(n),
            outside: FixedBitSet::with_capacity(n),
            hits: vec![0; n],
        }
    }

    /// Calls `visit` once per set satisfying the goal, in no particular
    /// order, until it breaks.
    pub(crate) fn run<F>(mut self, mut visit: F)
    where
        F: FnMut(&FixedBitSet) -> ControlFlow<()>,
    {
        let _ = self.descend(0, &mut visit);
    }

    fn descend<F>(&mut self, depth: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&FixedBitSet) -> ControlFlow<()>,
    {
        if !self.feasible(depth) {
            return ControlFlow::Continue(());
        }
        if depth == self.af.len() {
            return visit(&self.inside);
        }
        if self.may_include(depth) {
            self.include(depth);
            let flow = self.descend(depth + 1, visit);
            self.exclude_member(depth);
            flow?;
        }
        self.outside.insert(depth);
        let flow = self.descend(depth + 1, visit);
        self.outside.set(depth, false);
        flow
    }

    fn may_include(&self, a: usize) -> bool {
        if !self.goal.needs_conflict_free() {
            return true;
        }
        self.hits[a] == 0
            && self.af.successor_bits(a).is_disjoint(&self.inside)
            && !self.af.successor_bits(a).contains(a)
    }

    fn include(&mut self, a: usize) {
        self.inside.insert(a);
        for t in self.af.successor_bits(a).ones() {
            self.hits[t] += 1;
        }
    }

    fn exclude_member(&mut self, a: usize) {
        self.inside.set(a, false);
        for t in self.af.successor_bits(a).ones() {
            self.hits[t] -= 1;
        }
    }

    fn attacked(&self, a: usize) -> bool {
        self.hits[a] > 0
    }

    /// Some argument not yet decided (index ≥ depth) attacks `a`.
    fn open_attacker(&self, a: usize, depth: usize) -> bool {
        self.af.predecessor_bits(a).ones().any(|x| x >= depth)
    }

    fn feasible(&self, depth: usize) -> bool {
        let af = self.af;
        if self.goal.needs_self_defence() {
            for m in self.inside.ones() {
                for x in af.predecessor_bits(m).ones() {
                    if !self.attacked(x) && !self.open_attacker(x, depth) {
                        return false;
                    }
                }
            }
        }
        match self.goal {
            Goal::Complete => {
                // d is monotone and S only grows, so an excluded argument
                // that is already defended stays defended.
                for e in self.outside.ones() {
                    if af.predecessor_bits(e).ones().all(|x| self.attacked(x)) {
                        return false;
                    }
                }
            }
            Goal::Stable => {
                for e in self.outside.ones() {
                    if !self.attacked(e) && !self.open_attacker(e, depth) {
                        return false;
                    }
                }
            }
            Goal::Naive => {
                for e in self.outside.ones() {
                    let blocked = af.successor_bits(e).contains(e)
                        || self.attacked(e)
                        || !af.successor_bits(e).is_disjoint(&self.inside);
                    let open_neighbour = af
                        .successor_bits(e)
                        .ones()
                        .chain(af.predecessor_bits(e).ones())
                        .any(|y| y >= depth);
                    if !blocked && !open_neighbour {
                        return false;
                    }
                }
            }
            Goal::ConflictFree | Goal::SelfDefending | Goal::Admissible => {}
        }
        true
    }
}
