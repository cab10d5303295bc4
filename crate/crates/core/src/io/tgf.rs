//! Trivial Graph Format: one argument per line, a `#` line, then one
//! `attacker target` pair per line.

use log::warn;

use crate::error::{Error, Result};
use crate::framework::Framework;

pub fn parse_tgf(text: &str) -> Result<Framework> {
    let mut names = Vec::new();
    let mut attacks = Vec::new();
    let mut in_edges = false;
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if !in_edges && line == "#" {
            in_edges = true;
            continue;
        }
        let mut tokens = line.split_whitespace();
        if in_edges {
            let (Some(src), Some(dst)) = (tokens.next(), tokens.next()) else {
                return Err(Error::MalformedLine(lineno));
            };
            if tokens.next().is_some() {
                warn!("line {lineno}: ignoring edge label after `{src} {dst}`");
            }
            attacks.push((src.to_string(), dst.to_string()));
        } else {
            let name = tokens.next().expect("line is not blank");
            if tokens.next().is_some() {
                warn!("line {lineno}: ignoring node label after `{name}`");
            }
            names.push(name.to_string());
        }
    }
    if !in_edges {
        return Err(Error::MissingSeparator);
    }
    Framework::new(names, attacks)
}

/// Writes `af` as TGF. Names containing whitespace do not survive a
/// round trip.
pub fn emit_tgf(af: &Framework) -> String {
    let mut out = String::new();
    for name in af.names() {
        out.push_str(name);
        out.push('\n');
    }
    out.push_str("#\n");
    for &(a, b) in af.attacks() {
        out.push_str(af.name(a));
        out.push(' ');
        out.push_str(af.name(b));
        out.push('\n');
    }
    out
}
