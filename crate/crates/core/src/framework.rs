//! Finite argumentation frameworks and sets of their arguments.
//!
//! A [`Framework`] is an immutable digraph whose nodes are arguments and
//! whose edges are attacks. Arguments are named at the boundary and
//! addressed by dense [`ArgumentId`]s internally; declaration order fixes
//! the index order. An [`ArgSet`] is a bitset over one framework's
//! arguments and carries that framework's identity tag, so sets from
//! different frameworks are never mixed silently.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

static NEXT_FRAMEWORK_TAG: AtomicU64 = AtomicU64::new(1);

fn fresh_tag() -> u64 {
    NEXT_FRAMEWORK_TAG.fetch_add(1, AtomicOrdering::Relaxed)
}

/// Dense handle of an argument: its 0-based position in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgumentId(usize);

impl ArgumentId {
    pub const fn from_index(index: usize) -> Self {
        ArgumentId(index)
    }

    pub const fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A finite argumentation framework ⟨A, R⟩.
///
/// Cloning keeps the identity tag, so sets built against the original are
/// valid for the clone. Equality is structural (names and attacks) and
/// ignores the tag.
#[derive(Clone)]
pub struct Framework {
    tag: u64,
    names: Vec<String>,
    by_name: HashMap<String, ArgumentId>,
    attacks: Vec<(ArgumentId, ArgumentId)>,
    successors: Vec<FixedBitSet>,
    predecessors: Vec<FixedBitSet>,
}

impl Framework {
    /// Builds a framework from argument names and attacks given by name.
    ///
    /// Duplicate attacks collapse; duplicate names, empty names and attacks
    /// on undeclared arguments are rejected.
    pub fn new<N, S, P, X, Y>(names: N, attacks: P) -> Result<Self>
    where
        N: IntoIterator<Item = S>,
        S: Into<String>,
        P: IntoIterator<Item = (X, Y)>,
        X: AsRef<str>,
        Y: AsRef<str>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let by_name = index_names(&names)?;
        let mut pairs = Vec::new();
        for (src, dst) in attacks {
            let lookup = |name: &str| {
                by_name
                    .get(name)
                    .map(|id| id.index())
                    .ok_or_else(|| Error::UnknownEndpoint(name.to_string()))
            };
            pairs.push((lookup(src.as_ref())?, lookup(dst.as_ref())?));
        }
        Ok(Self::assemble(names, by_name, pairs))
    }

    /// Builds a framework from names and attacks given as argument indices.
    pub fn from_indices<I>(names: Vec<String>, attacks: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let by_name = index_names(&names)?;
        let n = names.len();
        let mut pairs = Vec::new();
        for (src, dst) in attacks {
            for endpoint in [src, dst] {
                if endpoint >= n {
                    return Err(Error::UnknownEndpoint(endpoint.to_string()));
                }
            }
            pairs.push((src, dst));
        }
        Ok(Self::assemble(names, by_name, pairs))
    }

    fn assemble(
        names: Vec<String>,
        by_name: HashMap<String, ArgumentId>,
        mut pairs: Vec<(usize, usize)>,
    ) -> Self {
        let n = names.len();
        pairs.sort_unstable();
        pairs.dedup();
        let mut successors = vec![FixedBitSet::with_capacity(n); n];
        let mut predecessors = vec![FixedBitSet::with_capacity(n); n];
        for &(src, dst) in &pairs {
            successors[src].insert(dst);
            predecessors[dst].insert(src);
        }
        Framework {
            tag: fresh_tag(),
            names,
            by_name,
            attacks: pairs
                .into_iter()
                .map(|(s, d)| (ArgumentId(s), ArgumentId(d)))
                .collect(),
            successors,
            predecessors,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn arguments(&self) -> impl ExactSizeIterator<Item = ArgumentId> + '_ {
        (0..self.names.len()).map(ArgumentId)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Name of `id`. Panics if `id` is not an argument of this framework.
    pub fn name(&self, id: ArgumentId) -> &str {
        &self.names[id.0]
    }

    pub fn id(&self, name: &str) -> Option<ArgumentId> {
        self.by_name.get(name).copied()
    }

    /// Like [`Framework::id`], but reports an unknown name as an error.
    pub fn argument(&self, name: &str) -> Result<ArgumentId> {
        self.id(name)
            .ok_or_else(|| Error::UnknownArgument(name.to_string()))
    }

    pub(crate) fn check_argument(&self, id: ArgumentId) -> Result<()> {
        if id.0 < self.len() {
            Ok(())
        } else {
            Err(Error::UnknownArgument(id.to_string()))
        }
    }

    /// All attacks, sorted by (attacker, target) index.
    pub fn attacks(&self) -> &[(ArgumentId, ArgumentId)] {
        &self.attacks
    }

    pub fn attacks_on(&self, attacker: ArgumentId, target: ArgumentId) -> bool {
        self.successors[attacker.0].contains(target.0)
    }

    /// The arguments `a` attacks (a⁺).
    pub fn attacked_by(&self, a: ArgumentId) -> impl Iterator<Item = ArgumentId> + '_ {
        self.successors[a.0].ones().map(ArgumentId)
    }

    /// The arguments attacking `a` (a⁻).
    pub fn attackers_of(&self, a: ArgumentId) -> impl Iterator<Item = ArgumentId> + '_ {
        self.predecessors[a.0].ones().map(ArgumentId)
    }

    pub(crate) fn successor_bits(&self, index: usize) -> &FixedBitSet {
        &self.successors[index]
    }

    pub(crate) fn predecessor_bits(&self, index: usize) -> &FixedBitSet {
        &self.predecessors[index]
    }

    pub fn empty_set(&self) -> ArgSet {
        ArgSet {
            tag: self.tag,
            bits: FixedBitSet::with_capacity(self.len()),
        }
    }

    pub fn full_set(&self) -> ArgSet {
        let mut set = self.empty_set();
        set.bits.insert_range(..);
        set
    }

    /// Set of the given ids. Panics on ids outside this framework.
    pub fn set_of<I: IntoIterator<Item = ArgumentId>>(&self, ids: I) -> ArgSet {
        let mut set = self.empty_set();
        for id in ids {
            set.insert(id);
        }
        set
    }

    pub fn set_from_names<I, S>(&self, names: I) -> Result<ArgSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut set = self.empty_set();
        for name in names {
            set.insert(self.argument(name.as_ref())?);
        }
        Ok(set)
    }

    pub(crate) fn set_from_bits(&self, bits: FixedBitSet) -> ArgSet {
        debug_assert_eq!(bits.len(), self.len());
        ArgSet {
            tag: self.tag,
            bits,
        }
    }

    pub(crate) fn check(&self, set: &ArgSet) -> Result<()> {
        if set.tag == self.tag {
            Ok(())
        } else {
            Err(Error::FrameworkMismatch)
        }
    }

    /// Whether `set` was built against this framework (or a clone of it).
    pub fn owns(&self, set: &ArgSet) -> bool {
        set.tag == self.tag
    }

    /// S⁺: every argument attacked by some member of `set`.
    pub fn forward_set(&self, set: &ArgSet) -> Result<ArgSet> {
        self.check(set)?;
        Ok(self.set_from_bits(self.forward_bits(&set.bits)))
    }

    /// S⁻: every argument attacking some member of `set`.
    pub fn backward_set(&self, set: &ArgSet) -> Result<ArgSet> {
        self.check(set)?;
        let mut out = FixedBitSet::with_capacity(self.len());
        for a in set.bits.ones() {
            out.union_with(&self.predecessors[a]);
        }
        Ok(self.set_from_bits(out))
    }

    pub(crate) fn forward_bits(&self, bits: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.len());
        for a in bits.ones() {
            out.union_with(&self.successors[a]);
        }
        out
    }

    /// U: the arguments nobody attacks.
    pub fn unattacked(&self) -> ArgSet {
        self.set_of(
            self.arguments()
                .filter(|a| self.predecessors[a.0].is_clear()),
        )
    }

    pub fn self_attackers(&self) -> ArgSet {
        self.set_of(self.arguments().filter(|&a| self.attacks_on(a, a)))
    }

    /// ⟨B, R ∩ B²⟩, with B's arguments keeping their relative order.
    pub fn induced_subframework(&self, keep: &ArgSet) -> Result<Framework> {
        self.check(keep)?;
        let mut remap = vec![usize::MAX; self.len()];
        let mut names = Vec::with_capacity(keep.len());
        for (new, old) in keep.bits.ones().enumerate() {
            remap[old] = new;
            names.push(self.names[old].clone());
        }
        let attacks = self
            .attacks
            .iter()
            .filter(|(s, d)| keep.bits.contains(s.0) && keep.bits.contains(d.0))
            .map(|(s, d)| (remap[s.0], remap[d.0]));
        Framework::from_indices(names, attacks)
    }
}

fn index_names(names: &[String]) -> Result<HashMap<String, ArgumentId>> {
    let mut by_name = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if name.is_empty() {
            return Err(Error::EmptyName);
        }
        if by_name.insert(name.clone(), ArgumentId(i)).is_some() {
            return Err(Error::DuplicateArgument(name.clone()));
        }
    }
    Ok(by_name)
}

impl PartialEq for Framework {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.attacks == other.attacks
    }
}

impl Eq for Framework {}

impl fmt::Debug for Framework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let attacks: Vec<_> = self
            .attacks
            .iter()
            .map(|&(s, d)| (self.name(s), self.name(d)))
            .collect();
        f.debug_struct("Framework")
            .field("arguments", &self.names)
            .field("attacks", &attacks)
            .finish()
    }
}

/// A subset of one framework's arguments.
///
/// Binary set operations panic when the operands belong to different
/// frameworks; framework-level operations report that case as
/// [`Error::FrameworkMismatch`] instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArgSet {
    tag: u64,
    bits: FixedBitSet,
}

impl ArgSet {
    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Size of the framework this set ranges over.
    pub fn universe_len(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, id: ArgumentId) -> bool {
        self.bits.contains(id.0)
    }

    /// Panics if `id` is outside the framework.
    pub fn insert(&mut self, id: ArgumentId) -> bool {
        assert!(id.0 < self.bits.len(), "argument {id} out of range");
        !self.bits.put(id.0)
    }

    pub fn remove(&mut self, id: ArgumentId) -> bool {
        let had = self.contains(id);
        if had {
            self.bits.set(id.0, false);
        }
        had
    }

    /// Members in index order.
    pub fn iter(&self) -> impl Iterator<Item = ArgumentId> + '_ {
        self.bits.ones().map(ArgumentId)
    }

    pub fn indices(&self) -> Vec<usize> {
        self.bits.ones().collect()
    }

    fn same_framework(&self, other: &ArgSet) {
        assert_eq!(
            self.tag, other.tag,
            "set operation between sets of different frameworks"
        );
    }

    pub fn union(&self, other: &ArgSet) -> ArgSet {
        self.same_framework(other);
        let mut out = self.clone();
        out.bits.union_with(&other.bits);
        out
    }

    pub fn intersection(&self, other: &ArgSet) -> ArgSet {
        self.same_framework(other);
        let mut out = self.clone();
        out.bits.intersect_with(&other.bits);
        out
    }

    pub fn difference(&self, other: &ArgSet) -> ArgSet {
        self.same_framework(other);
        let mut out = self.clone();
        out.bits.difference_with(&other.bits);
        out
    }

    /// A − S.
    pub fn complement(&self) -> ArgSet {
        let mut out = self.clone();
        out.bits.toggle_range(..);
        out
    }

    pub fn is_subset(&self, other: &ArgSet) -> bool {
        self.same_framework(other);
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &ArgSet) -> bool {
        self.same_framework(other);
        self.bits.is_disjoint(&other.bits)
    }

    pub(crate) fn bits(&self) -> &FixedBitSet {
        &self.bits
    }
}

/// Sets of one framework order by their member index sequences, compared
/// lexicographically; `∅` sorts first.
impl Ord for ArgSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.tag
            .cmp(&other.tag)
            .then_with(|| self.bits.ones().cmp(other.bits.ones()))
    }
}

impl PartialOrd for ArgSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.bits.ones()).finish()
    }
}
