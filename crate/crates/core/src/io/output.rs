//! Canonical text, JSON and DOT renderings.
//!
//! Members of a set are listed in declaration order; lists of sets are
//! sorted lexicographically by their rendered text. Internal search order
//! never leaks into output.

use std::fmt::Write;

use serde_json::Value;

use crate::framework::{ArgSet, Framework};
use crate::operators::IterationTrace;
use crate::semantics::Extension;

/// `[a,b,c]`, members in declaration order; `[]` for ∅.
pub fn render_set(af: &Framework, set: &ArgSet) -> String {
    let names: Vec<&str> = set.iter().map(|a| af.name(a)).collect();
    format!("[{}]", names.join(","))
}

/// Renders and sorts a family of sets.
pub fn render_sets<'s, I: IntoIterator<Item = &'s ArgSet>>(af: &Framework, sets: I) -> Vec<String> {
    let mut lines: Vec<String> = sets.into_iter().map(|s| render_set(af, s)).collect();
    lines.sort();
    lines
}

/// One extension per line, or `NO EXTENSIONS` for an empty list.
pub fn emit_extensions(af: &Framework, extensions: &[Extension]) -> String {
    if extensions.is_empty() {
        return "NO EXTENSIONS\n".to_string();
    }
    render_sets(af, extensions.iter().map(|e| &e.members))
        .into_iter()
        .map(|line| line + "\n")
        .collect()
}

/// The same list as [`emit_extensions`], as an array of name arrays.
pub fn extensions_json(af: &Framework, extensions: &[Extension]) -> Value {
    let mut sets: Vec<(String, Vec<Value>)> = extensions
        .iter()
        .map(|e| {
            (
                render_set(af, &e.members),
                e.members
                    .iter()
                    .map(|a| Value::String(af.name(a).to_string()))
                    .collect(),
            )
        })
        .collect();
    sets.sort_by(|a, b| a.0.cmp(&b.0));
    Value::Array(
        sets.into_iter()
            .map(|(_, names)| Value::Array(names))
            .collect(),
    )
}

/// Each application of the operator on its own line: S₁, S₂, …, and the
/// final application that returns the fixed point unchanged.
pub fn emit_trace(af: &Framework, trace: &IterationTrace) -> String {
    let mut out = String::new();
    for step in trace.steps.iter().skip(1) {
        out.push_str(&render_set(af, step));
        out.push('\n');
    }
    if let Some(fix) = trace.fixpoint() {
        out.push_str(&render_set(af, fix));
        out.push('\n');
    }
    out
}

fn quote(name: &str) -> String {
    let mut out = String::with_capacity(name.len() + 2);
    out.push('"');
    for c in name.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Graphviz digraph with one node per argument and one edge per attack.
pub fn emit_dot(af: &Framework) -> String {
    let mut out = String::from("digraph af {\n");
    for name in af.names() {
        let _ = writeln!(out, "    {};", quote(name));
    }
    for &(a, b) in af.attacks() {
        let _ = writeln!(out, "    {} -> {};", quote(af.name(a)), quote(af.name(b)));
    }
    out.push_str("}\n");
    out
}
