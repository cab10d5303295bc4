//! Small, well-known frameworks used throughout the tests and docs.

use crate::framework::Framework;

fn build(names: &[&str], attacks: &[(&str, &str)]) -> Framework {
    Framework::new(names.iter().copied(), attacks.iter().copied())
        .expect("fixture frameworks are well formed")
}

/// Nixon diamond: a ⇄ b.
pub fn nixon() -> Framework {
    build(&["a", "b"], &[("a", "b"), ("b", "a")])
}

/// c → b → a.
pub fn simple_reinstatement() -> Framework {
    build(&["a", "b", "c"], &[("b", "a"), ("c", "b")])
}

/// c → b, e → b, b → a.
pub fn double_reinstatement() -> Framework {
    build(&["a", "b", "c", "e"], &[("b", "a"), ("c", "b"), ("e", "b")])
}

/// a ⇄ b with c → b.
pub fn israel_arab() -> Framework {
    build(&["a", "b", "c"], &[("a", "b"), ("b", "a"), ("c", "b")])
}

/// e → c → b → a.
pub fn p4_chain() -> Framework {
    build(&["a", "b", "c", "e"], &[("e", "c"), ("c", "b"), ("b", "a")])
}

/// a ⇄ b, both attacking c, and c → e.
pub fn floating_reinstatement() -> Framework {
    build(
        &["a", "b", "c", "e"],
        &[("a", "b"), ("b", "a"), ("a", "c"), ("b", "c"), ("c", "e")],
    )
}

/// a attacks itself and b.
pub fn ab_self_attack() -> Framework {
    build(&["a", "b"], &[("a", "a"), ("a", "b")])
}

/// b → a with the 3-cycle b → e → c → b.
pub fn three_cycle() -> Framework {
    build(
        &["a", "b", "c", "e"],
        &[("b", "a"), ("c", "b"), ("e", "c"), ("b", "e")],
    )
}

/// a → b → c and a → c.
pub fn controversial_triangle() -> Framework {
    build(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")])
}

/// a attacks itself and is in a 2-cycle with b.
pub fn loop_defence() -> Framework {
    build(&["a", "b"], &[("a", "a"), ("a", "b"), ("b", "a")])
}

/// a → b, c → b, c ⇄ f, f → e, and e attacks itself.
pub fn mixed_five() -> Framework {
    build(
        &["a", "b", "c", "f", "e"],
        &[
            ("a", "b"),
            ("c", "b"),
            ("c", "f"),
            ("f", "c"),
            ("f", "e"),
            ("e", "e"),
        ],
    )
}

/// a → b, b ⇄ c, c → e.
pub fn reinstated_pair() -> Framework {
    build(
        &["a", "b", "c", "e"],
        &[("a", "b"), ("b", "c"), ("c", "b"), ("c", "e")],
    )
}

/// a ⇄ b, b → c, and the 3-cycle c → e → f → c.
pub fn mutual_pair_with_odd_loop() -> Framework {
    build(
        &["a", "b", "c", "e", "f"],
        &[
            ("a", "b"),
            ("b", "a"),
            ("b", "c"),
            ("c", "e"),
            ("e", "f"),
            ("f", "c"),
        ],
    )
}

/// a → b → c, c ⇄ e, e → f.
pub fn attacked_mutual_pair() -> Framework {
    build(
        &["a", "b", "c", "e", "f"],
        &[("a", "b"), ("b", "c"), ("c", "e"), ("e", "c"), ("e", "f")],
    )
}

/// a attacks itself and c; b → c; c → e.
pub fn self_attacker_feeder() -> Framework {
    build(
        &["a", "b", "c", "e"],
        &[("a", "a"), ("a", "c"), ("b", "c"), ("c", "e")],
    )
}

/// Incoherent framework on a0..a5 without self-attacks.
pub fn incoherent_six() -> Framework {
    build(
        &["a0", "a1", "a2", "a3", "a4", "a5"],
        &[
            ("a0", "a4"),
            ("a4", "a0"),
            ("a0", "a5"),
            ("a1", "a0"),
            ("a1", "a3"),
            ("a2", "a3"),
            ("a3", "a2"),
            ("a2", "a4"),
            ("a4", "a2"),
            ("a3", "a0"),
            ("a3", "a5"),
            ("a4", "a3"),
            ("a5", "a1"),
        ],
    )
}

/// Incoherent but relatively grounded framework on a0..a4.
pub fn incoherent_five() -> Framework {
    build(
        &["a0", "a1", "a2", "a3", "a4"],
        &[
            ("a0", "a1"),
            ("a1", "a0"),
            ("a0", "a2"),
            ("a0", "a4"),
            ("a4", "a0"),
            ("a2", "a4"),
            ("a3", "a2"),
            ("a4", "a3"),
        ],
    )
}

/// Symmetric triangle a0, a1, a3 plus the isolated argument a2.
pub fn triangle_plus_isolated() -> Framework {
    build(
        &["a0", "a1", "a2", "a3"],
        &[
            ("a0", "a1"),
            ("a1", "a0"),
            ("a0", "a3"),
            ("a3", "a0"),
            ("a1", "a3"),
            ("a3", "a1"),
        ],
    )
}

/// 3-cycle a → b → c → a with e → a.
pub fn attacked_three_cycle() -> Framework {
    build(
        &["a", "b", "c", "e"],
        &[("a", "b"), ("b", "c"), ("c", "a"), ("e", "a")],
    )
}

/// Directed cycle a1 → a2 → … → an → a1; `n = 1` is a single self-attacker.
pub fn directed_cycle(n: usize) -> Framework {
    let names: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    Framework::from_indices(names, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is well formed")
}
