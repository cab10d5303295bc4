//! Brute-force reference semantics.
//!
//! Every subset of the arguments is tested against the textbook definition
//! of each family. Sets are plain boolean vectors and S⁺, n(S) and d(S)
//! are recomputed from the raw attack list each time. Nothing here shares
//! code with [`crate::semantics`] or [`crate::operators`], which is what
//! makes it useful for cross-checking them.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::framework::{ArgSet, ArgumentId, Framework};
use crate::semantics::SemanticsKind;

/// Largest framework the oracle will sweep.
pub const ORACLE_MAX_ARGS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub kind: SemanticsKind,
    /// Extensions sorted in [`ArgSet`] order.
    pub extensions: Vec<ArgSet>,
    /// Hash of the argument names and attacks.
    pub fingerprint: u64,
}

struct Raw {
    n: usize,
    attacks: Vec<(usize, usize)>,
}

type Members = Vec<bool>;

impl Raw {
    fn plus(&self, s: &Members) -> Members {
        let mut out = vec![false; self.n];
        for &(a, b) in &self.attacks {
            if s[a] {
                out[b] = true;
            }
        }
        out
    }

    fn neutral(&self, s: &Members) -> Members {
        self.plus(s).iter().map(|&hit| !hit).collect()
    }

    fn defended(&self, s: &Members) -> Members {
        let plus = self.plus(s);
        (0..self.n)
            .map(|x| {
                self.attacks
                    .iter()
                    .filter(|&&(_, b)| b == x)
                    .all(|&(a, _)| plus[a])
            })
            .collect()
    }

    fn conflict_free(&self, s: &Members) -> bool {
        !self.attacks.iter().any(|&(a, b)| s[a] && s[b])
    }

    fn self_defending(&self, s: &Members) -> bool {
        let plus = self.plus(s);
        self.attacks.iter().all(|&(a, b)| !s[b] || plus[a])
    }

    fn complete(&self, s: &Members) -> bool {
        self.conflict_free(s) && self.defended(s) == *s
    }

    fn stable(&self, s: &Members) -> bool {
        self.neutral(s) == *s
    }
}

fn subset(a: &Members, b: &Members) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !x || y)
}

fn maximal(family: &[Members]) -> Vec<Members> {
    family
        .iter()
        .filter(|s| !family.iter().any(|t| t != *s && subset(s, t)))
        .cloned()
        .collect()
}

pub fn fingerprint(af: &Framework) -> u64 {
    let mut h = DefaultHasher::new();
    af.names().hash(&mut h);
    for &(a, b) in af.attacks() {
        (a.index(), b.index()).hash(&mut h);
    }
    h.finish()
}

/// All extensions of `af` under `kind`, by exhaustive sweep over 2^|A|
/// subsets.
pub fn oracle_enumerate(af: &Framework, kind: SemanticsKind) -> Result<OracleResult> {
    let n = af.len();
    if n > ORACLE_MAX_ARGS {
        return Err(Error::TooLargeForOracle(n));
    }
    let raw = Raw {
        n,
        attacks: af
            .attacks()
            .iter()
            .map(|&(a, b)| (a.index(), b.index()))
            .collect(),
    };
    let all: Vec<Members> = (0u32..1 << n)
        .map(|code| (0..n).map(|i| code >> i & 1 == 1).collect())
        .collect();
    let keep = |pred: &dyn Fn(&Members) -> bool| -> Vec<Members> {
        all.iter().filter(|s| pred(s)).cloned().collect()
    };
    let family = match kind {
        SemanticsKind::ConflictFree => keep(&|s| raw.conflict_free(s)),
        SemanticsKind::Naive => maximal(&keep(&|s| raw.conflict_free(s))),
        SemanticsKind::SelfDefending => keep(&|s| raw.self_defending(s)),
        SemanticsKind::Admissible => keep(&|s| raw.conflict_free(s) && raw.self_defending(s)),
        SemanticsKind::Complete => keep(&|s| raw.complete(s)),
        SemanticsKind::Preferred => {
            maximal(&keep(&|s| raw.conflict_free(s) && raw.self_defending(s)))
        }
        SemanticsKind::Stable => keep(&|s| raw.stable(s)),
        SemanticsKind::Grounded => {
            // the ⊆-least complete extension
            let comps = keep(&|s| raw.complete(s));
            comps
                .iter()
                .filter(|s| comps.iter().all(|t| subset(s, t)))
                .cloned()
                .collect()
        }
    };
    let mut extensions: Vec<ArgSet> = family
        .iter()
        .map(|s| {
            af.set_of(
                s.iter()
                    .enumerate()
                    .filter(|(_, &m)| m)
                    .map(|(i, _)| ArgumentId::from_index(i)),
            )
        })
        .collect();
    extensions.sort();
    Ok(OracleResult {
        kind,
        extensions,
        fingerprint: fingerprint(af),
    })
}
