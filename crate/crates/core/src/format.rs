//! Text formats: the line-oriented system format and DOT transition graphs.
//!
//! ```text
//! # comment
//! system toggle
//! entities a b
//! reaction a | - | b
//! reaction - | a | a
//! ```
//!
//! Each side of a reaction is a space-separated list of entity names or `-`
//! for the empty set. Formulas use DIMACS, see [`crate::Formula::parse`].

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::state::State;
use crate::system::{EntityTable, Reaction, ReactionSystem};

/// Name used when the input has no `system` line.
pub const DEFAULT_SYSTEM_NAME: &str = "rs";

pub fn parse_system(text: &str) -> Result<ReactionSystem> {
    let mut name: Option<String> = None;
    let mut entities: Option<EntityTable> = None;
    let mut reactions = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw.trim_end();
        let body = line.trim_start();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let col = |s: &str| s.as_ptr() as usize - raw.as_ptr() as usize + 1;
        let (keyword, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        match keyword {
            "system" => {
                if name.is_some() {
                    return Err(Error::parse(line_no, col(body), "duplicate `system` line"));
                }
                let mut toks = rest.split_whitespace();
                let n = toks
                    .next()
                    .ok_or_else(|| Error::parse(line_no, line.len() + 1, "missing system name"))?;
                if let Some(extra) = toks.next() {
                    return Err(Error::parse(line_no, col(extra), "system name must be a single token"));
                }
                name = Some(n.to_string());
            }
            "entities" => {
                if entities.is_some() {
                    return Err(Error::parse(line_no, col(body), "duplicate `entities` line"));
                }
                if !reactions.is_empty() {
                    return Err(Error::parse(line_no, col(body), "`entities` after reactions"));
                }
                let mut table = EntityTable::default();
                for tok in rest.split_whitespace() {
                    table
                        .push(tok.to_string())
                        .map_err(|e| Error::parse(line_no, col(tok), e.to_string()))?;
                }
                entities = Some(table);
            }
            "reaction" => {
                let table = entities
                    .as_ref()
                    .ok_or_else(|| Error::parse(line_no, col(body), "reaction before `entities` line"))?;
                let sides: Vec<&str> = rest.split('|').collect();
                if sides.len() != 3 {
                    return Err(Error::parse(
                        line_no,
                        col(body),
                        format!("expected `R | I | P`, found {} field(s)", sides.len()),
                    ));
                }
                let mut sets = Vec::with_capacity(3);
                for (k, side) in sides.iter().enumerate() {
                    let toks: Vec<&str> = side.split_whitespace().collect();
                    let at = toks.first().map_or_else(|| col(side), |t| col(t));
                    if toks.is_empty() {
                        return Err(Error::parse(line_no, at, "empty field; write `-` for the empty set"));
                    }
                    if toks == ["-"] {
                        if k == 2 {
                            return Err(Error::parse(line_no, at, "empty product set"));
                        }
                        sets.push(State::empty(table.len()));
                        continue;
                    }
                    let mut set = State::empty(table.len());
                    for tok in toks {
                        let i = table
                            .index_of(tok)
                            .ok_or_else(|| Error::parse(line_no, col(tok), format!("unknown entity `{tok}`")))?;
                        set.insert(i);
                    }
                    sets.push(set);
                }
                let p = sets.pop().expect("three sides");
                let i = sets.pop().expect("three sides");
                let r = sets.pop().expect("three sides");
                reactions.push(Reaction::new(r, i, p));
            }
            other => {
                return Err(Error::parse(line_no, col(body), format!("unknown directive `{other}`")));
            }
        }
    }
    let entities = entities.ok_or_else(|| Error::parse(text.lines().count().max(1), 1, "missing `entities` line"))?;
    ReactionSystem::new(name.unwrap_or_else(|| DEFAULT_SYSTEM_NAME.into()), entities, reactions)
}

/// Canonical text: `system`, `entities`, then one line per reaction.
pub fn emit_system(sys: &ReactionSystem) -> String {
    let ents = sys.entities();
    let side = |s: &State| {
        if s.is_empty() {
            "-".to_string()
        } else {
            ents.names_of(s).collect::<Vec<_>>().join(" ")
        }
    };
    let mut out = String::new();
    let _ = writeln!(out, "system {}", system_token(sys.name()));
    let _ = writeln!(out, "entities {}", ents.names().join(" ").trim_end());
    for r in sys.reactions() {
        let _ = writeln!(
            out,
            "reaction {} | {} | {}",
            side(&r.reactants),
            side(&r.inhibitors),
            side(&r.products)
        );
    }
    out
}

fn system_token(name: &str) -> String {
    let t: String = name
        .chars()
        .map(|c| if c.is_whitespace() { '_' } else { c })
        .collect();
    if t.is_empty() {
        DEFAULT_SYSTEM_NAME.to_string()
    } else {
        t
    }
}

/// DOT digraph with one node per state and one edge per state. Nodes are
/// numbered by position in `edges`, labelled `{a,b}`.
pub fn emit_dot(sys: &ReactionSystem, edges: &[(State, State)]) -> String {
    let ids: BTreeMap<&State, usize> = edges.iter().enumerate().map(|(k, (t, _))| (t, k)).collect();
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", dot_id(sys.name()));
    for (k, (t, _)) in edges.iter().enumerate() {
        let _ = writeln!(out, "  n{k} [label=\"{}\"];", dot_escape(&sys.format_state(t)));
    }
    for (k, (_, image)) in edges.iter().enumerate() {
        match ids.get(image) {
            Some(j) => {
                let _ = writeln!(out, "  n{k} -> n{j};");
            }
            None => {
                let _ = writeln!(out, "  n{k} -> \"{}\";", dot_escape(&sys.format_state(image)));
            }
        }
    }
    out.push_str("}\n");
    out
}

fn dot_id(name: &str) -> String {
    if !name.is_empty()
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !name.starts_with(|c: char| c.is_ascii_digit())
    {
        name.to_string()
    } else {
        format!("\"{}\"", dot_escape(name))
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
