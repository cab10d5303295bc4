//! Extension-based semantics: membership tests, enumeration and
//! justification status of single arguments.

mod search;

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::framework::{ArgSet, ArgumentId, Framework};
use crate::operators::{defence_bits, kleene_least_fixpoint};

use self::search::{Goal, Search};

/// Default largest framework [`enumerate`] accepts.
pub const DEFAULT_MAX_ARGS: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SemanticsKind {
    ConflictFree,
    Naive,
    SelfDefending,
    Admissible,
    Complete,
    Preferred,
    Stable,
    Grounded,
}

impl SemanticsKind {
    pub const ALL: [SemanticsKind; 8] = [
        SemanticsKind::ConflictFree,
        SemanticsKind::Naive,
        SemanticsKind::SelfDefending,
        SemanticsKind::Admissible,
        SemanticsKind::Complete,
        SemanticsKind::Preferred,
        SemanticsKind::Stable,
        SemanticsKind::Grounded,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SemanticsKind::ConflictFree => "conflict-free",
            SemanticsKind::Naive => "naive",
            SemanticsKind::SelfDefending => "self-defending",
            SemanticsKind::Admissible => "admissible",
            SemanticsKind::Complete => "complete",
            SemanticsKind::Preferred => "preferred",
            SemanticsKind::Stable => "stable",
            SemanticsKind::Grounded => "grounded",
        }
    }
}

impl fmt::Display for SemanticsKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownSemantics(pub String);

impl fmt::Display for UnknownSemantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown semantics `{}`", self.0)
    }
}

impl std::error::Error for UnknownSemantics {}

impl FromStr for SemanticsKind {
    type Err = UnknownSemantics;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SemanticsKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| UnknownSemantics(s.to_string()))
    }
}

/// A set of arguments certified under one semantics.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Extension {
    pub members: ArgSet,
    pub kind: SemanticsKind,
}

impl Extension {
    /// Re-checks the certificate against `af`.
    pub fn verify(&self, af: &Framework) -> Result<bool> {
        satisfies(af, self.kind, &self.members, &EnumerationOptions::default())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Frameworks with more arguments are refused with [`Error::TooLarge`].
    pub max_args: usize,
    /// Keep only the first `limit` extensions in canonical order.
    pub limit: Option<usize>,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            max_args: DEFAULT_MAX_ARGS,
            limit: None,
        }
    }
}

impl EnumerationOptions {
    pub fn with_max_args(max_args: usize) -> Self {
        EnumerationOptions {
            max_args,
            ..Default::default()
        }
    }

    fn check_size(&self, af: &Framework) -> Result<()> {
        if af.len() > self.max_args {
            Err(Error::TooLarge {
                size: af.len(),
                bound: self.max_args,
            })
        } else {
            Ok(())
        }
    }
}

/// Result of [`enumerate`]. The extensions are sorted by [`ArgSet`]'s
/// order and hold no duplicates. `truncated` is set when a limit cut the
/// list short, in which case it is no longer exhaustive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub extensions: Vec<Extension>,
    pub truncated: bool,
}

impl Enumeration {
    pub fn sets(&self) -> Vec<ArgSet> {
        self.extensions.iter().map(|e| e.members.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }
}

/// S ∩ S⁺ = ∅.
pub fn is_conflict_free(af: &Framework, set: &ArgSet) -> Result<bool> {
    af.check(set)?;
    Ok(af.forward_bits(set.bits()).is_disjoint(set.bits()))
}

/// S⁻ ⊆ S⁺, equivalently S ⊆ d(S).
pub fn is_self_defending(af: &Framework, set: &ArgSet) -> Result<bool> {
    af.check(set)?;
    Ok(self_defending_bits(af, set.bits()))
}

fn self_defending_bits(af: &Framework, bits: &FixedBitSet) -> bool {
    let plus = af.forward_bits(bits);
    bits.ones().all(|m| af.predecessor_bits(m).is_subset(&plus))
}

pub fn is_admissible(af: &Framework, set: &ArgSet) -> Result<bool> {
    Ok(is_conflict_free(af, set)? && is_self_defending(af, set)?)
}

/// Conflict-free fixed point of d.
pub fn is_complete(af: &Framework, set: &ArgSet) -> Result<bool> {
    Ok(is_conflict_free(af, set)? && defence_bits(af, set.bits()) == *set.bits())
}

/// Fixed point of n: S attacks exactly the arguments outside it.
pub fn is_stable(af: &Framework, set: &ArgSet) -> Result<bool> {
    af.check(set)?;
    let mut outside = set.bits().clone();
    outside.toggle_range(..);
    Ok(af.forward_bits(set.bits()) == outside)
}

/// ⊆-maximal conflict-free set.
pub fn is_naive(af: &Framework, set: &ArgSet) -> Result<bool> {
    if !is_conflict_free(af, set)? {
        return Ok(false);
    }
    let plus = af.forward_bits(set.bits());
    Ok(af.arguments().filter(|a| !set.contains(*a)).all(|a| {
        let i = a.index();
        plus.contains(i) || af.attacks_on(a, a) || !af.successor_bits(i).is_disjoint(set.bits())
    }))
}

/// Whether `set` is an extension of `af` under `kind`. Preferred
/// membership needs an enumeration and is bound by `options.max_args`.
pub fn satisfies(
    af: &Framework,
    kind: SemanticsKind,
    set: &ArgSet,
    options: &EnumerationOptions,
) -> Result<bool> {
    af.check(set)?;
    match kind {
        SemanticsKind::ConflictFree => is_conflict_free(af, set),
        SemanticsKind::Naive => is_naive(af, set),
        SemanticsKind::SelfDefending => is_self_defending(af, set),
        SemanticsKind::Admissible => is_admissible(af, set),
        SemanticsKind::Complete => is_complete(af, set),
        SemanticsKind::Stable => is_stable(af, set),
        SemanticsKind::Grounded => Ok(grounded(af).members == *set),
        SemanticsKind::Preferred => {
            if !is_admissible(af, set)? {
                return Ok(false);
            }
            let prefs = enumerate(af, SemanticsKind::Preferred, options)?;
            Ok(prefs.extensions.iter().any(|e| e.members == *set))
        }
    }
}

/// The grounded extension, the ⊆-least fixed point of d.
pub fn grounded(af: &Framework) -> Extension {
    let trace = kleene_least_fixpoint(af);
    Extension {
        members: trace.last().clone(),
        kind: SemanticsKind::Grounded,
    }
}

fn goal_of(kind: SemanticsKind) -> Option<Goal> {
    match kind {
        SemanticsKind::ConflictFree => Some(Goal::ConflictFree),
        SemanticsKind::Naive => Some(Goal::Naive),
        SemanticsKind::SelfDefending => Some(Goal::SelfDefending),
        SemanticsKind::Admissible => Some(Goal::Admissible),
        SemanticsKind::Complete => Some(Goal::Complete),
        SemanticsKind::Stable => Some(Goal::Stable),
        SemanticsKind::Preferred | SemanticsKind::Grounded => None,
    }
}

fn collect(af: &Framework, goal: Goal, cap: Option<usize>) -> Vec<ArgSet> {
    let mut found = Vec::new();
    Search::new(af, goal).run(|bits| {
        found.push(af.set_from_bits(bits.clone()));
        match cap {
            Some(cap) if found.len() >= cap => ControlFlow::Break(()),
            _ => ControlFlow::Continue(()),
        }
    });
    found
}

/// Keeps the ⊆-maximal members of `sets`.
pub(crate) fn maximal(mut sets: Vec<ArgSet>) -> Vec<ArgSet> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut kept: Vec<ArgSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept
}

/// All extensions of `af` under `kind`.
///
/// Preferred extensions are the ⊆-maximal complete extensions. Every kind
/// except grounded is refused above `options.max_args` arguments.
pub fn enumerate(
    af: &Framework,
    kind: SemanticsKind,
    options: &EnumerationOptions,
) -> Result<Enumeration> {
    let mut sets = match kind {
        SemanticsKind::Grounded => vec![grounded(af).members],
        SemanticsKind::Preferred => {
            options.check_size(af)?;
            maximal(collect(af, Goal::Complete, None))
        }
        _ => {
            options.check_size(af)?;
            let goal = goal_of(kind).expect("search goal exists for this kind");
            // one extra hit tells us whether the limit really cut anything
            collect(af, goal, options.limit.map(|l| l + 1))
        }
    };
    sets.sort();
    let truncated = match options.limit {
        Some(limit) if sets.len() > limit => {
            sets.truncate(limit);
            true
        }
        _ => false,
    };
    Ok(Enumeration {
        extensions: sets
            .into_iter()
            .map(|members| Extension { members, kind })
            .collect(),
        truncated,
    })
}

/// Counts extensions without materialising them.
pub fn count(af: &Framework, kind: SemanticsKind, options: &EnumerationOptions) -> Result<usize> {
    match goal_of(kind) {
        Some(goal) => {
            options.check_size(af)?;
            let mut n = 0usize;
            Search::new(af, goal).run(|_| {
                n += 1;
                ControlFlow::Continue(())
            });
            Ok(n)
        }
        None => Ok(enumerate(af, kind, options)?.len()),
    }
}

/// Credulous and sceptical acceptance of one argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JustificationStatus {
    pub argument: ArgumentId,
    pub semantics: SemanticsKind,
    /// In at least one extension.
    pub credulous: bool,
    /// In every extension, and at least one extension exists.
    pub sceptical: bool,
    /// Not credulously justified.
    pub overruled: bool,
}

/// Justification status of `a` under complete, preferred, stable or
/// grounded semantics. Sceptical acceptance under complete semantics is
/// membership of the grounded extension, which is the intersection of all
/// complete extensions.
pub fn justification(
    af: &Framework,
    a: ArgumentId,
    semantics: SemanticsKind,
    options: &EnumerationOptions,
) -> Result<JustificationStatus> {
    af.check_argument(a)?;
    let (credulous, sceptical) = match semantics {
        SemanticsKind::Grounded => {
            let inside = grounded(af).members.contains(a);
            (inside, inside)
        }
        SemanticsKind::Complete => {
            let comps = enumerate(af, SemanticsKind::Complete, options)?;
            let credulous = comps.extensions.iter().any(|e| e.members.contains(a));
            (credulous, grounded(af).members.contains(a))
        }
        SemanticsKind::Preferred | SemanticsKind::Stable => {
            let exts = enumerate(af, semantics, options)?;
            let credulous = exts.extensions.iter().any(|e| e.members.contains(a));
            let sceptical =
                !exts.is_empty() && exts.extensions.iter().all(|e| e.members.contains(a));
            (credulous, sceptical)
        }
        other => return Err(Error::UnsupportedSemantics(other.name())),
    };
    Ok(JustificationStatus {
        argument: a,
        semantics,
        credulous,
        sceptical,
        overruled: !credulous,
    })
}

/// ⋃ of a family of sets of `af`; ∅ for the empty family.
pub fn union_all<'s, I: IntoIterator<Item = &'s ArgSet>>(af: &Framework, sets: I) -> ArgSet {
    sets.into_iter().fold(af.empty_set(), |acc, s| acc.union(s))
}

/// ⋂ of a family of sets of `af`; `None` for the empty family.
pub fn intersection_all<'s, I: IntoIterator<Item = &'s ArgSet>>(sets: I) -> Option<ArgSet> {
    sets.into_iter().fold(None, |acc: Option<ArgSet>, s| {
        Some(match acc {
            None => s.clone(),
            Some(acc) => acc.intersection(s),
        })
    })
}
