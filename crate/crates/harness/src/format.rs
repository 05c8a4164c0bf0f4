//! Line-oriented text formats.
//!
//! Profile:
//! ```text
//! # comment
//! alternatives: a b c d
//! order: a b c d      # one line per criterion, best first
//! ```
//! Relation (`x μ y` when row `x`, column `y` is 1):
//! ```text
//! alternatives: a b c
//! mu:
//! 0 1 0
//! 0 0 1
//! 1 0 0
//! ```

use choice_core::{LinearOrder, MajorityRelation, Profile};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}, column {col}: `{label}` appears twice in this order")]
    DuplicateInOrder { line: usize, col: usize, label: String },
    #[error("line {line}: order does not rank `{label}`")]
    MissingAlternative { line: usize, label: String },
    #[error("line {line}, column {col}: unknown alternative `{label}`")]
    UnknownLabel { line: usize, col: usize, label: String },
    #[error("no `order:` lines: at least one criterion is required")]
    NoOrders,
    #[error("{0}")]
    Invalid(String),
}

/// Non-comment lines as `(line number, column offset, content)`.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        (!body.trim().is_empty()).then_some((i + 1, body))
    })
}

/// Whitespace-separated tokens with 1-based columns.
fn tokens(s: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(b)) => {
                out.push((offset + b + 1, &s[b..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(b) = start {
        out.push((offset + b + 1, &s[b..]));
    }
    out
}

/// Splits `key: rest`; returns the key, the remainder and its column offset.
fn keyed(line: usize, body: &str) -> Result<(&str, &str, usize), ParseError> {
    let lead = body.len() - body.trim_start().len();
    let colon = body.find(':').ok_or_else(|| ParseError::Syntax {
        line,
        col: lead + 1,
        msg: "expected `alternatives:`, `order:` or `mu:`".into(),
    })?;
    Ok((body[..colon].trim(), &body[colon + 1..], colon + 1))
}

fn parse_alternatives(line: usize, rest: &str, offset: usize) -> Result<Vec<String>, ParseError> {
    let toks = tokens(rest, offset);
    if toks.is_empty() {
        return Err(ParseError::Syntax { line, col: offset + 1, msg: "no alternatives listed".into() });
    }
    let mut labels: Vec<String> = Vec::new();
    for (col, t) in toks {
        if labels.iter().any(|l| l == t) {
            return Err(ParseError::Syntax { line, col, msg: format!("alternative `{t}` declared twice") });
        }
        labels.push(t.to_string());
    }
    if labels.len() > choice_core::MAX_ALTS {
        return Err(ParseError::Invalid(format!("at most {} alternatives are supported", choice_core::MAX_ALTS)));
    }
    Ok(labels)
}

pub fn parse_profile(text: &str) -> Result<Profile, ParseError> {
    let mut labels: Option<Vec<String>> = None;
    let mut orders = Vec::new();
    for (line, body) in lines(text) {
        let (key, rest, off) = keyed(line, body)?;
        match (key, &labels) {
            ("alternatives", None) => labels = Some(parse_alternatives(line, rest, off)?),
            ("alternatives", Some(_)) => {
                return Err(ParseError::Syntax { line, col: 1, msg: "`alternatives:` given twice".into() })
            }
            (_, None) => {
                return Err(ParseError::Syntax {
                    line,
                    col: 1,
                    msg: "the first line must be `alternatives:`".into(),
                })
            }
            ("order", Some(ls)) => {
                let mut ids = Vec::with_capacity(ls.len());
                for (col, t) in tokens(rest, off) {
                    let id = ls.iter().position(|l| l == t).ok_or_else(|| ParseError::UnknownLabel {
                        line,
                        col,
                        label: t.to_string(),
                    })?;
                    if ids.contains(&id) {
                        return Err(ParseError::DuplicateInOrder { line, col, label: t.to_string() });
                    }
                    ids.push(id);
                }
                if let Some(missing) = (0..ls.len()).find(|x| !ids.contains(x)) {
                    return Err(ParseError::MissingAlternative { line, label: ls[missing].clone() });
                }
                orders.push(LinearOrder::new(&ids).expect("checked permutation"));
            }
            (other, Some(_)) => {
                return Err(ParseError::Syntax { line, col: 1, msg: format!("unknown key `{other}`") })
            }
        }
    }
    let labels = labels.ok_or(ParseError::NoOrders)?;
    if orders.is_empty() {
        return Err(ParseError::NoOrders);
    }
    Profile::new(labels, orders).map_err(|e| ParseError::Invalid(e.to_string()))
}

pub fn write_profile(p: &Profile) -> String {
    let mut out = format!("alternatives: {}\n", p.labels().join(" "));
    for o in p.orders() {
        let names: Vec<&str> = o.ranking().iter().map(|&x| p.label(x as usize)).collect();
        out.push_str(&format!("order: {}\n", names.join(" ")));
    }
    out
}

/// A parsed relation file.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationFile {
    pub labels: Vec<String>,
    pub relation: MajorityRelation,
}

pub fn parse_relation(text: &str) -> Result<RelationFile, ParseError> {
    let mut it = lines(text);
    let (line, body) = it.next().ok_or_else(|| ParseError::Invalid("empty relation file".into()))?;
    let (key, rest, off) = keyed(line, body)?;
    if key != "alternatives" {
        return Err(ParseError::Syntax { line, col: 1, msg: "the first line must be `alternatives:`".into() });
    }
    let labels = parse_alternatives(line, rest, off)?;
    let m = labels.len();
    let (line, body) = it.next().ok_or_else(|| ParseError::Invalid("missing `mu:` block".into()))?;
    let (key, rest, off) = keyed(line, body)?;
    if key != "mu" || !rest.trim().is_empty() {
        return Err(ParseError::Syntax { line, col: off.max(1), msg: "expected `mu:` on its own line".into() });
    }
    let mut rows = Vec::with_capacity(m);
    for (line, body) in it {
        let toks = tokens(body, 0);
        if toks.len() != m {
            return Err(ParseError::Syntax { line, col: 1, msg: format!("expected {m} entries, found {}", toks.len()) });
        }
        let mut row = Vec::with_capacity(m);
        for (col, t) in toks {
            row.push(match t {
                "0" => false,
                "1" => true,
                _ => return Err(ParseError::Syntax { line, col, msg: format!("expected 0 or 1, found `{t}`") }),
            });
        }
        rows.push(row);
    }
    if rows.len() != m {
        return Err(ParseError::Invalid(format!("expected {m} matrix rows, found {}", rows.len())));
    }
    let relation = MajorityRelation::from_matrix(&rows).map_err(|e| {
        ParseError::Invalid(match e {
            choice_core::RelationError::Reflexive(x) => format!("nonzero diagonal entry for `{}`", labels[x]),
            choice_core::RelationError::Symmetric(x, y) => {
                format!("`{}` and `{}` dominate each other; the relation must be asymmetric", labels[x], labels[y])
            }
            other => other.to_string(),
        })
    })?;
    Ok(RelationFile { labels, relation })
}

pub fn write_relation(labels: &[String], rel: &MajorityRelation) -> String {
    let mut out = format!("alternatives: {}\nmu:\n", labels.join(" "));
    for x in 0..rel.m() {
        let row: Vec<&str> = (0..rel.m()).map(|y| if rel.dominates(x, y) { "1" } else { "0" }).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_carry_positions() {
        let e = parse_profile("alternatives: a b c\norder: a a b\n").unwrap_err();
        assert_eq!(e, ParseError::DuplicateInOrder { line: 2, col: 10, label: "a".into() });
        let e = parse_profile("alternatives: a b\norder: a x\n").unwrap_err();
        assert_eq!(e, ParseError::UnknownLabel { line: 2, col: 10, label: "x".into() });
        let e = parse_profile("alternatives: a b c\norder: a b\n").unwrap_err();
        assert_eq!(e, ParseError::MissingAlternative { line: 2, label: "c".into() });
        assert_eq!(parse_profile("# nothing\nalternatives: a b\n"), Err(ParseError::NoOrders));
        assert!(matches!(parse_profile("order: a b\n"), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(parse_profile("alternatives a b\n"), Err(ParseError::Syntax { line: 1, col: 1, .. })));
    }

    #[test]
    fn relation_errors() {
        assert!(parse_relation("alternatives: a b\nmu:\n1 0\n0 0\n").unwrap_err().to_string().contains("diagonal"));
        assert!(parse_relation("alternatives: a b\nmu:\n0 1\n1 0\n").unwrap_err().to_string().contains("asymmetric"));
        assert!(parse_relation("alternatives: a b\nmu:\n0 1\n").is_err());
        let r = parse_relation("alternatives: a b\nmu:\n0 0\n0 0\n").unwrap();
        assert_eq!(r.relation.edge_count(), 0);
    }
}
