//! Aspartix facts: `arg(NAME).` and `att(SRC,DST).`, with `%` comments.
//! Whitespace between tokens is insignificant and facts may share a line.

use crate::error::{Error, Result};
use crate::framework::Framework;

#[derive(Debug, PartialEq)]
enum Token<'a> {
    Word(&'a str),
    Open,
    Close,
    Comma,
    Dot,
}

fn is_word_char(c: char) -> bool {
    !c.is_whitespace() && !matches!(c, '(' | ')' | ',' | '.' | '%')
}

fn tokenize(text: &str) -> Vec<(usize, Token<'_>)> {
    let mut tokens = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('%').next().unwrap_or("");
        let mut rest = line;
        while let Some(c) = rest.chars().next() {
            let (token, len) = match c {
                '(' => (Some(Token::Open), 1),
                ')' => (Some(Token::Close), 1),
                ',' => (Some(Token::Comma), 1),
                '.' => (Some(Token::Dot), 1),
                c if c.is_whitespace() => (None, c.len_utf8()),
                _ => {
                    let len = rest.find(|c| !is_word_char(c)).unwrap_or(rest.len());
                    (Some(Token::Word(&rest[..len])), len)
                }
            };
            if let Some(token) = token {
                tokens.push((i + 1, token));
            }
            rest = &rest[len..];
        }
    }
    tokens
}

pub fn parse_apx(text: &str) -> Result<Framework> {
    let tokens = tokenize(text);
    let mut names = Vec::new();
    let mut attacks = Vec::new();
    let mut pos = 0;
    while pos < tokens.len() {
        let line = tokens[pos].0;
        let bad = || Error::MalformedFact(line);
        let Token::Word(head) = tokens[pos].1 else {
            return Err(bad());
        };
        pos += 1;
        if tokens.get(pos).map(|t| &t.1) != Some(&Token::Open) {
            return Err(bad());
        }
        pos += 1;
        let mut terms = Vec::new();
        loop {
            match tokens.get(pos).map(|t| &t.1) {
                Some(Token::Word(w)) => terms.push(*w),
                _ => return Err(bad()),
            }
            pos += 1;
            match tokens.get(pos).map(|t| &t.1) {
                Some(Token::Comma) => pos += 1,
                Some(Token::Close) => {
                    pos += 1;
                    break;
                }
                _ => return Err(bad()),
            }
        }
        if tokens.get(pos).map(|t| &t.1) != Some(&Token::Dot) {
            return Err(bad());
        }
        pos += 1;
        match (head, terms.as_slice()) {
            ("arg", [name]) => names.push(name.to_string()),
            ("att", [src, dst]) => attacks.push((src.to_string(), dst.to_string())),
            _ => return Err(bad()),
        }
    }
    Framework::new(names, attacks)
}

pub fn emit_apx(af: &Framework) -> String {
    let mut out = String::new();
    for name in af.names() {
        out.push_str(&format!("arg({name}).\n"));
    }
    for &(a, b) in af.attacks() {
        out.push_str(&format!("att({},{}).\n", af.name(a), af.name(b)));
    }
    out
}
