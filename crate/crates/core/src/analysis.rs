//! Structural and meta-semantic classification of frameworks.
//!
//! Indirect attack and defence follow walks, not simple paths: a loop may be
//! traversed repeatedly, so a self-attacker both indirectly attacks and
//! indirectly defends itself. Reachability runs on the doubled graph of
//! (argument, walk parity) states.
//!
//! Well-foundedness and limited controversy are defined through infinite
//! sequences; for finite frameworks they reduce to acyclicity and to the
//! absence of odd directed cycles, which is what is computed here.

use fixedbitset::FixedBitSet;
use serde_json::{json, Map, Value};

use crate::error::Result;
use crate::framework::{ArgSet, ArgumentId, Framework};
use crate::semantics::{
    self, enumerate, grounded, intersection_all, union_all, EnumerationOptions, SemanticsKind,
};

/// Arguments reachable from `from` by walks of even and of odd length.
/// The length-0 walk puts `from` in the even set.
fn parity_reach(af: &Framework, from: usize) -> (FixedBitSet, FixedBitSet) {
    let n = af.len();
    let mut even = FixedBitSet::with_capacity(n);
    let mut odd = FixedBitSet::with_capacity(n);
    even.insert(from);
    let mut queue = vec![(from, false)];
    while let Some((a, odd_len)) = queue.pop() {
        for b in af.successor_bits(a).ones() {
            let next = if odd_len { &mut even } else { &mut odd };
            if !next.put(b) {
                queue.push((b, !odd_len));
            }
        }
    }
    (even, odd)
}

/// Whether the attack graph contains a directed cycle (self-loops count).
pub fn has_directed_cycle(af: &Framework) -> bool {
    let n = af.len();
    let mut indegree: Vec<usize> = (0..n)
        .map(|a| af.predecessor_bits(a).count_ones(..))
        .collect();
    let mut ready: Vec<usize> = (0..n).filter(|&a| indegree[a] == 0).collect();
    let mut removed = 0;
    while let Some(a) = ready.pop() {
        removed += 1;
        for b in af.successor_bits(a).ones() {
            indegree[b] -= 1;
            if indegree[b] == 0 {
                ready.push(b);
            }
        }
    }
    removed < n
}

/// Whether some simple directed cycle has odd length. A closed walk of odd
/// length decomposes into simple cycles, one of which must be odd, so it
/// suffices to find an argument that reaches itself by an odd walk.
pub fn odd_cycle_exists(af: &Framework) -> bool {
    (0..af.len()).any(|a| parity_reach(af, a).1.contains(a))
}

/// Whether some simple directed cycle has even length.
///
/// Even closed walks do not certify even cycles (an odd cycle walked twice
/// is one), so this backtracks over simple paths, rooting each cycle at its
/// smallest index. Worst-case exponential.
pub fn even_cycle_exists(af: &Framework) -> bool {
    if af
        .attacks()
        .iter()
        .any(|&(a, b)| a != b && af.attacks_on(b, a))
    {
        return true;
    }
    let n = af.len();
    let mut on_path = FixedBitSet::with_capacity(n);
    (0..n).any(|root| {
        on_path.insert(root);
        let found = extend_path(af, root, root, 1, &mut on_path);
        on_path.set(root, false);
        found
    })
}

fn extend_path(
    af: &Framework,
    root: usize,
    tip: usize,
    len: usize,
    on_path: &mut FixedBitSet,
) -> bool {
    for next in af.successor_bits(tip).ones() {
        if next == root {
            if len.is_multiple_of(2) {
                return true;
            }
            continue;
        }
        if next < root || on_path.contains(next) {
            continue;
        }
        on_path.insert(next);
        let found = extend_path(af, root, next, len + 1, on_path);
        on_path.set(next, false);
        if found {
            return true;
        }
    }
    false
}

/// Finite frameworks are well-founded exactly when they are acyclic.
pub fn is_well_founded(af: &Framework) -> bool {
    !has_directed_cycle(af)
}

/// `a` reaches `b` by a walk of odd length.
pub fn indirectly_attacks(af: &Framework, a: ArgumentId, b: ArgumentId) -> Result<bool> {
    af.check_argument(a)?;
    af.check_argument(b)?;
    Ok(parity_reach(af, a.index()).1.contains(b.index()))
}

/// `a` reaches `b` by a walk of even length, counting the empty walk from
/// an argument to itself.
pub fn indirectly_defends(af: &Framework, a: ArgumentId, b: ArgumentId) -> Result<bool> {
    af.check_argument(a)?;
    af.check_argument(b)?;
    Ok(parity_reach(af, a.index()).0.contains(b.index()))
}

/// `a` both indirectly attacks and indirectly defends `b`.
pub fn is_controversial_wrt(af: &Framework, a: ArgumentId, b: ArgumentId) -> Result<bool> {
    af.check_argument(a)?;
    af.check_argument(b)?;
    let (even, odd) = parity_reach(af, a.index());
    Ok(even.contains(b.index()) && odd.contains(b.index()))
}

/// Arguments controversial with respect to at least one argument.
pub fn controversial_arguments(af: &Framework) -> ArgSet {
    af.set_of(af.arguments().filter(|a| {
        let (even, odd) = parity_reach(af, a.index());
        !even.is_disjoint(&odd)
    }))
}

pub fn is_limited_controversial(af: &Framework) -> bool {
    !odd_cycle_exists(af)
}

/// R is nonempty and symmetric.
pub fn is_symmetric(af: &Framework) -> bool {
    !af.attacks().is_empty() && af.attacks().iter().all(|&(a, b)| af.attacks_on(b, a))
}

/// PREF = STAB.
pub fn is_coherent(af: &Framework, options: &EnumerationOptions) -> Result<bool> {
    let pref = enumerate(af, SemanticsKind::Preferred, options)?;
    let stab = enumerate(af, SemanticsKind::Stable, options)?;
    Ok(pref.sets() == stab.sets())
}

/// ⋂PREF = G.
pub fn is_relatively_grounded(af: &Framework, options: &EnumerationOptions) -> Result<bool> {
    let pref = enumerate(af, SemanticsKind::Preferred, options)?.sets();
    Ok(intersection_all(&pref) == Some(grounded(af).members))
}

/// ⋃PREF = A.
pub fn preferred_covers(af: &Framework, options: &EnumerationOptions) -> Result<bool> {
    let pref = enumerate(af, SemanticsKind::Preferred, options)?.sets();
    Ok(union_all(af, &pref) == af.full_set())
}

/// Number of extensions under each semantics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtensionCounts {
    pub conflict_free: usize,
    pub naive: usize,
    pub self_defending: usize,
    pub admissible: usize,
    pub complete: usize,
    pub preferred: usize,
    pub stable: usize,
    pub grounded: usize,
}

impl ExtensionCounts {
    pub fn get(&self, kind: SemanticsKind) -> usize {
        match kind {
            SemanticsKind::ConflictFree => self.conflict_free,
            SemanticsKind::Naive => self.naive,
            SemanticsKind::SelfDefending => self.self_defending,
            SemanticsKind::Admissible => self.admissible,
            SemanticsKind::Complete => self.complete,
            SemanticsKind::Preferred => self.preferred,
            SemanticsKind::Stable => self.stable,
            SemanticsKind::Grounded => self.grounded,
        }
    }
}

/// Structural and semantic predicates of one framework.
///
/// The `Option` fields need extension enumeration and are `None` when the
/// framework exceeds the enumeration bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub arguments: usize,
    pub attacks: usize,
    pub is_empty: bool,
    pub is_trivial: bool,
    pub is_finitary: bool,
    pub is_symmetric: bool,
    pub has_self_attack: bool,
    pub is_acyclic: bool,
    pub is_well_founded: bool,
    pub has_odd_cycle: bool,
    pub has_even_cycle: bool,
    pub is_controversial: bool,
    pub is_limited_controversial: bool,
    pub grounded_size: usize,
    pub is_coherent: Option<bool>,
    pub is_relatively_grounded: Option<bool>,
    pub pref_covers_arguments: Option<bool>,
    pub all_dung_semantics_coincide: Option<bool>,
    pub counts: Option<ExtensionCounts>,
}

impl ClassificationReport {
    /// Whether the enumeration-backed fields were left out.
    pub fn semantic_fields_absent(&self) -> bool {
        self.counts.is_none()
    }

    /// Fields in rendering order, shared by the text and JSON encodings.
    pub fn entries(&self) -> Vec<(String, Value)> {
        let mut out: Vec<(String, Value)> = vec![
            ("arguments".into(), json!(self.arguments)),
            ("attacks".into(), json!(self.attacks)),
            ("empty".into(), json!(self.is_empty)),
            ("trivial".into(), json!(self.is_trivial)),
            ("finitary".into(), json!(self.is_finitary)),
            ("symmetric".into(), json!(self.is_symmetric)),
            ("self_attack".into(), json!(self.has_self_attack)),
            ("acyclic".into(), json!(self.is_acyclic)),
            ("well_founded".into(), json!(self.is_well_founded)),
            ("odd_cycle".into(), json!(self.has_odd_cycle)),
            ("even_cycle".into(), json!(self.has_even_cycle)),
            ("controversial".into(), json!(self.is_controversial)),
            (
                "limited_controversial".into(),
                json!(self.is_limited_controversial),
            ),
            ("grounded_size".into(), json!(self.grounded_size)),
            ("coherent".into(), json!(self.is_coherent)),
            (
                "relatively_grounded".into(),
                json!(self.is_relatively_grounded),
            ),
            (
                "pref_covers_arguments".into(),
                json!(self.pref_covers_arguments),
            ),
            (
                "semantics_coincide".into(),
                json!(self.all_dung_semantics_coincide),
            ),
        ];
        for kind in SemanticsKind::ALL {
            out.push((
                format!("count.{}", kind.name()),
                json!(self.counts.map(|c| c.get(kind))),
            ));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Object(self.entries().into_iter().collect::<Map<_, _>>())
    }
}

/// Computes every predicate of the report. Structural fields are always
/// filled in; enumeration-backed ones only within `options.max_args`.
pub fn classify(af: &Framework, options: &EnumerationOptions) -> ClassificationReport {
    let acyclic = !has_directed_cycle(af);
    let odd = odd_cycle_exists(af);
    let g = grounded(af).members;
    let mut report = ClassificationReport {
        arguments: af.len(),
        attacks: af.attacks().len(),
        is_empty: af.is_empty(),
        is_trivial: af.attacks().is_empty(),
        is_finitary: true,
        is_symmetric: is_symmetric(af),
        has_self_attack: !af.self_attackers().is_empty(),
        is_acyclic: acyclic,
        is_well_founded: acyclic,
        has_odd_cycle: odd,
        has_even_cycle: even_cycle_exists(af),
        is_controversial: !controversial_arguments(af).is_empty(),
        is_limited_controversial: !odd,
        grounded_size: g.len(),
        is_coherent: None,
        is_relatively_grounded: None,
        pref_covers_arguments: None,
        all_dung_semantics_coincide: None,
        counts: None,
    };
    if af.len() > options.max_args {
        return report;
    }
    let unbounded = EnumerationOptions {
        limit: None,
        ..*options
    };
    let sets = |kind| {
        enumerate(af, kind, &unbounded)
            .expect("size already checked")
            .sets()
    };
    let count = |kind| semantics::count(af, kind, &unbounded).expect("size already checked");
    let comp = sets(SemanticsKind::Complete);
    let pref = sets(SemanticsKind::Preferred);
    let stab = sets(SemanticsKind::Stable);
    let only_g = vec![g.clone()];
    report.is_coherent = Some(pref == stab);
    report.is_relatively_grounded = Some(intersection_all(&pref) == Some(g.clone()));
    report.pref_covers_arguments = Some(union_all(af, &pref) == af.full_set());
    report.all_dung_semantics_coincide = Some(comp == only_g && pref == only_g && stab == only_g);
    report.counts = Some(ExtensionCounts {
        conflict_free: count(SemanticsKind::ConflictFree),
        naive: count(SemanticsKind::Naive),
        self_defending: count(SemanticsKind::SelfDefending),
        admissible: count(SemanticsKind::Admissible),
        complete: comp.len(),
        preferred: pref.len(),
        stable: stab.len(),
        grounded: 1,
    });
    report
}
