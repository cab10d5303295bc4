#![allow(dead_code)]

//! Random framework generators and the property checks shared by the
//! proptest suites and the acceptance harness.

use std::collections::HashSet;

use argsolve::analysis::{even_cycle_exists, has_directed_cycle, is_symmetric, odd_cycle_exists};
use argsolve::operators::{defence, kleene_least_fixpoint, neutrality};
use argsolve::oracle::oracle_enumerate;
use argsolve::semantics::{
    enumerate, grounded, intersection_all, is_admissible, is_conflict_free, is_self_defending,
    union_all, EnumerationOptions, SemanticsKind,
};
use argsolve::{ArgSet, ArgumentId, Framework};
use proptest::prelude::*;
use rand::Rng;

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

pub fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

pub fn from_matrix(n: usize, edges: &[bool]) -> Framework {
    let pairs = (0..n * n).filter(|&k| edges[k]).map(|k| (k / n, k % n));
    Framework::from_indices(names(n), pairs).unwrap()
}

/// |A| uniform in `0..=max_args`, each of the |A|² ordered pairs (loops
/// included) an attack with a density drawn uniformly from [0, 1].
pub fn random_framework<R: Rng>(rng: &mut R, max_args: usize) -> Framework {
    let n = rng.gen_range(0..=max_args);
    let density: f64 = rng.gen_range(0.0..=1.0);
    let edges: Vec<bool> = (0..n * n).map(|_| rng.gen_bool(density)).collect();
    from_matrix(n, &edges)
}

/// Nonempty symmetric attack relation without self-attacks.
pub fn random_symmetric<R: Rng>(rng: &mut R, max_args: usize) -> Framework {
    loop {
        let n = rng.gen_range(2..=max_args.max(2));
        let density: f64 = rng.gen_range(0.05..=1.0);
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(density) {
                    pairs.push((i, j));
                    pairs.push((j, i));
                }
            }
        }
        if !pairs.is_empty() {
            return Framework::from_indices(names(n), pairs).unwrap();
        }
    }
}

/// Attacks only run from higher to lower indices, so there is no cycle.
pub fn random_acyclic<R: Rng>(rng: &mut R, max_args: usize) -> Framework {
    let n = rng.gen_range(0..=max_args);
    let density: f64 = rng.gen_range(0.0..=1.0);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..i {
            if rng.gen_bool(density) {
                pairs.push((i, j));
            }
        }
    }
    Framework::from_indices(names(n), pairs).unwrap()
}

/// Frameworks without odd directed cycles: alternately bipartite ones
/// (every cycle alternates sides) and rejection-sampled general ones.
pub fn random_odd_cycle_free<R: Rng>(rng: &mut R, max_args: usize) -> Framework {
    if rng.gen_bool(0.5) {
        let n = rng.gen_range(0..=max_args);
        let density: f64 = rng.gen_range(0.0..=1.0);
        let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if side[i] != side[j] && rng.gen_bool(density) {
                    pairs.push((i, j));
                }
            }
        }
        return Framework::from_indices(names(n), pairs).unwrap();
    }
    loop {
        let n = rng.gen_range(0..=max_args);
        let density: f64 = rng.gen_range(0.0..=0.4);
        let edges: Vec<bool> = (0..n * n).map(|_| rng.gen_bool(density)).collect();
        let af = from_matrix(n, &edges);
        if !odd_cycle_exists(&af) {
            return af;
        }
    }
}

pub fn random_subset<R: Rng>(rng: &mut R, af: &Framework) -> ArgSet {
    let p: f64 = rng.gen_range(0.0..=1.0);
    af.set_of(af.arguments().filter(|_| rng.gen_bool(p)))
}

/// proptest counterpart of [`random_framework`].
pub fn arb_framework(max_args: usize) -> impl Strategy<Value = Framework> {
    (0..=max_args, 0.0f64..=1.0).prop_flat_map(|(n, density)| {
        proptest::collection::vec(proptest::bool::weighted(density), n * n)
            .prop_map(move |edges| from_matrix(n, &edges))
    })
}

/// A framework together with a few subsets of it, given as membership masks.
pub fn arb_framework_with_sets(
    max_args: usize,
    sets: usize,
) -> impl Strategy<Value = (Framework, Vec<ArgSet>)> {
    arb_framework(max_args).prop_flat_map(move |af| {
        let n = af.len();
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), n), sets).prop_map(
            move |masks| {
                let sets = masks
                    .iter()
                    .map(|m| af.set_of((0..n).filter(|&i| m[i]).map(ArgumentId::from_index)))
                    .collect();
                (af.clone(), sets)
            },
        )
    })
}

pub fn ext(af: &Framework, kind: SemanticsKind) -> Vec<ArgSet> {
    enumerate(af, kind, &EnumerationOptions::default())
        .unwrap()
        .sets()
}

fn subfamily(small: &[ArgSet], big: &[ArgSet]) -> bool {
    small.iter().all(|s| big.contains(s))
}

fn render(af: &Framework) -> String {
    format!("{af:?}")
}

pub fn check_oracle_equivalence(af: &Framework) -> Check {
    for kind in SemanticsKind::ALL {
        let fast = ext(af, kind);
        let slow = oracle_enumerate(af, kind).unwrap().extensions;
        ensure!(
            fast == slow,
            "{kind}: {fast:?} != oracle {slow:?} on {}",
            render(af)
        );
    }
    Ok(())
}

pub fn check_inclusion_chain(af: &Framework) -> Check {
    let chain = [
        SemanticsKind::Stable,
        SemanticsKind::Preferred,
        SemanticsKind::Complete,
        SemanticsKind::Admissible,
        SemanticsKind::ConflictFree,
    ];
    for pair in chain.windows(2) {
        let (small, big) = (ext(af, pair[0]), ext(af, pair[1]));
        ensure!(
            subfamily(&small, &big),
            "{} ⊄ {} on {}",
            pair[0],
            pair[1],
            render(af)
        );
    }
    Ok(())
}

pub fn check_d_is_n_squared(af: &Framework, sets: &[ArgSet]) -> Check {
    for s in sets {
        let d = defence(af, s).unwrap();
        let nn = neutrality(af, &neutrality(af, s).unwrap()).unwrap();
        ensure!(d == nn, "d({s:?}) = {d:?} but n²= {nn:?} on {}", render(af));
    }
    Ok(())
}

pub fn check_n_of_union(af: &Framework, sets: &[ArgSet]) -> Check {
    let lhs = neutrality(af, &union_all(af, sets)).unwrap();
    let images: Vec<ArgSet> = sets.iter().map(|s| neutrality(af, s).unwrap()).collect();
    let rhs = intersection_all(&images).unwrap_or_else(|| af.full_set());
    ensure!(lhs == rhs, "n(∪) {lhs:?} != ∩n {rhs:?} on {}", render(af));
    Ok(())
}

pub fn check_cf_intersection_closed(af: &Framework) -> Check {
    let cf = ext(af, SemanticsKind::ConflictFree);
    let members: HashSet<&ArgSet> = cf.iter().collect();
    for (i, a) in cf.iter().enumerate() {
        for b in &cf[i..] {
            let meet = a.intersection(b);
            ensure!(
                members.contains(&meet),
                "{a:?} ∩ {b:?} not cf on {}",
                render(af)
            );
        }
    }
    Ok(())
}

pub fn check_sd_union_closed(af: &Framework) -> Check {
    let sd = ext(af, SemanticsKind::SelfDefending);
    let members: HashSet<&ArgSet> = sd.iter().collect();
    for (i, a) in sd.iter().enumerate() {
        for b in &sd[i..] {
            let join = a.union(b);
            ensure!(
                members.contains(&join),
                "{a:?} ∪ {b:?} not self-defending on {}",
                render(af)
            );
        }
    }
    ensure!(
        is_self_defending(af, &union_all(af, &sd)).unwrap(),
        "⋃SD not self-defending on {}",
        render(af)
    );
    Ok(())
}

pub fn check_unattacked_in_complete(af: &Framework) -> Check {
    let u = af.unattacked();
    for c in ext(af, SemanticsKind::Complete) {
        ensure!(u.is_subset(&c), "U ⊄ {c:?} on {}", render(af));
    }
    Ok(())
}

pub fn check_grounded_is_meet_of_complete(af: &Framework) -> Check {
    let comp = ext(af, SemanticsKind::Complete);
    let g = grounded(af).members;
    ensure!(comp.contains(&g), "G ∉ COMP on {}", render(af));
    ensure!(
        intersection_all(&comp) == Some(g.clone()),
        "G != ⋂COMP on {}",
        render(af)
    );
    let kleene = kleene_least_fixpoint(af);
    ensure!(
        kleene.fixpoint() == Some(&g),
        "kleene fixpoint differs on {}",
        render(af)
    );
    Ok(())
}

/// For admissible S and a, b ∈ d(S): S ∪ {a} is admissible and b ∈ d(S ∪ {a}).
pub fn check_fundamental_lemma<R: Rng>(rng: &mut R, af: &Framework) -> Check {
    let adm = ext(af, SemanticsKind::Admissible);
    for _ in 0..4 {
        let s = &adm[rng.gen_range(0..adm.len())];
        let defended: Vec<ArgumentId> = defence(af, s).unwrap().iter().collect();
        if defended.is_empty() {
            continue;
        }
        let a = defended[rng.gen_range(0..defended.len())];
        let b = defended[rng.gen_range(0..defended.len())];
        let mut grown = s.clone();
        grown.insert(a);
        ensure!(
            is_admissible(af, &grown).unwrap(),
            "{s:?} ∪ {{{a}}} not admissible on {}",
            render(af)
        );
        ensure!(
            defence(af, &grown).unwrap().contains(b),
            "{b} ∉ d({grown:?}) on {}",
            render(af)
        );
    }
    Ok(())
}

/// Symmetric frameworks without self-attacks: CF = ADM and PREF = NAI.
pub fn check_symmetric(af: &Framework) -> Check {
    if !is_symmetric(af) || !af.self_attackers().is_empty() {
        return Ok(());
    }
    ensure!(
        ext(af, SemanticsKind::ConflictFree) == ext(af, SemanticsKind::Admissible),
        "CF != ADM on symmetric {}",
        render(af)
    );
    ensure!(
        ext(af, SemanticsKind::Preferred) == ext(af, SemanticsKind::Naive),
        "PREF != NAI on symmetric {}",
        render(af)
    );
    Ok(())
}

fn coincide_at_grounded(af: &Framework) -> bool {
    let g = vec![grounded(af).members];
    ext(af, SemanticsKind::Complete) == g
        && ext(af, SemanticsKind::Preferred) == g
        && ext(af, SemanticsKind::Stable) == g
}

pub fn check_acyclic_coincidence(af: &Framework) -> Check {
    if has_directed_cycle(af) {
        return Ok(());
    }
    ensure!(
        coincide_at_grounded(af),
        "acyclic but semantics differ on {}",
        render(af)
    );
    Ok(())
}

pub fn check_odd_cycle_free(af: &Framework) -> Check {
    if odd_cycle_exists(af) {
        return Ok(());
    }
    let stab = ext(af, SemanticsKind::Stable);
    ensure!(
        !stab.is_empty(),
        "no odd cycle but STAB = ∅ on {}",
        render(af)
    );
    ensure!(
        ext(af, SemanticsKind::Preferred) == stab,
        "no odd cycle but incoherent on {}",
        render(af)
    );
    Ok(())
}

pub fn check_grounded_stable(af: &Framework) -> Check {
    let g = grounded(af).members;
    if ext(af, SemanticsKind::Stable).contains(&g) {
        ensure!(
            coincide_at_grounded(af),
            "G ∈ STAB but semantics differ on {}",
            render(af)
        );
    }
    Ok(())
}

/// Closed-walk parity by brute force: walks up to length 2|A| + 1 cover
/// every (argument, parity) state reachable at all.
pub fn brute_walks(af: &Framework, from: ArgumentId) -> (Vec<bool>, Vec<bool>) {
    let n = af.len();
    let mut even = vec![false; n];
    let mut odd = vec![false; n];
    let mut frontier = vec![false; n];
    frontier[from.index()] = true;
    even[from.index()] = true;
    for len in 1..=2 * n + 1 {
        let mut next = vec![false; n];
        for &(a, b) in af.attacks() {
            if frontier[a.index()] {
                next[b.index()] = true;
            }
        }
        for (i, &hit) in next.iter().enumerate() {
            if hit {
                if len % 2 == 0 {
                    even[i] = true;
                } else {
                    odd[i] = true;
                }
            }
        }
        frontier = next;
    }
    (even, odd)
}

/// Lengths of all simple directed cycles, by exhaustive path search.
pub fn brute_cycle_lengths(af: &Framework) -> Vec<usize> {
    fn walk(af: &Framework, root: usize, tip: usize, path: &mut Vec<usize>, out: &mut Vec<usize>) {
        for &(a, b) in af.attacks() {
            if a.index() != tip {
                continue;
            }
            let b = b.index();
            if b == root {
                out.push(path.len());
            } else if b > root && !path.contains(&b) {
                path.push(b);
                walk(af, root, b, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for root in 0..af.len() {
        walk(af, root, root, &mut vec![root], &mut out);
    }
    out
}

pub fn check_cycle_parity(af: &Framework) -> Check {
    let lengths = brute_cycle_lengths(af);
    ensure!(
        has_directed_cycle(af) == !lengths.is_empty(),
        "cycle detection wrong on {}",
        render(af)
    );
    ensure!(
        odd_cycle_exists(af) == lengths.iter().any(|l| l % 2 == 1),
        "odd cycle detection wrong on {}",
        render(af)
    );
    ensure!(
        even_cycle_exists(af) == lengths.iter().any(|l| l % 2 == 0),
        "even cycle detection wrong on {}",
        render(af)
    );
    Ok(())
}

pub fn all_conflict_free(af: &Framework, sets: &[ArgSet]) -> bool {
    sets.iter().all(|s| is_conflict_free(af, s).unwrap())
}
