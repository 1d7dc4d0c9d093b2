//! The `.mpg` text format.
//!
//! ```text
//! mpg <n> <m>
//! v <id> <owner:0|1> [name]     (n lines)
//! e <src> <dst> <weight>        (m lines)
//! ```
//!
//! `#` starts a comment that runs to the end of the line; blank lines are
//! ignored. Serialization writes vertices by ascending id and arcs in arena
//! order, so load and serialize are mutually inverse.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::{Arc, Arena, ArenaError, Owner};

/// Parser switches.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadOptions {
    /// Reject parallel arcs (same source and target) instead of keeping them.
    pub strict: bool,
}

/// Parses an arena with default options (parallel arcs kept).
pub fn load_arena(text: &str) -> Result<Arena, ArenaError> {
    load_arena_with(text, LoadOptions::default())
}

/// Parses an arena.
pub fn load_arena_with(text: &str, options: LoadOptions) -> Result<Arena, ArenaError> {
    let mut records = text.lines().enumerate().filter_map(|(k, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then(|| (k + 1, body.split_whitespace().collect::<Vec<_>>()))
    });

    let (line, header) = records
        .next()
        .ok_or_else(|| parse_error(1, "missing `mpg` header"))?;
    if header.len() != 3 || header[0] != "mpg" {
        return Err(parse_error(line, "expected `mpg <n> <m>`"));
    }
    let n: usize = number(line, header[1], "vertex count")?;
    let m: usize = number(line, header[2], "arc count")?;

    let mut last = line;
    let mut owners: Vec<Option<Owner>> = vec![None; n];
    let mut names: Vec<Option<String>> = vec![None; n];
    for _ in 0..n {
        let (line, tokens) = records
            .next()
            .ok_or_else(|| parse_error(last, "fewer vertex records than declared"))?;
        last = line;
        if tokens[0] != "v" || !(3..=4).contains(&tokens.len()) {
            return Err(parse_error(line, "expected `v <id> <owner> [name]`"));
        }
        let id: usize = number(line, tokens[1], "vertex id")?;
        if id >= n {
            return Err(parse_error(line, "vertex id out of range"));
        }
        if owners[id].is_some() {
            return Err(parse_error(line, "vertex declared twice"));
        }
        let owner = match tokens[2] {
            "0" => Owner::Player0,
            "1" => Owner::Player1,
            _ => return Err(parse_error(line, "owner must be 0 or 1")),
        };
        owners[id] = Some(owner);
        names[id] = tokens.get(3).map(|s| (*s).to_owned());
    }

    let mut arcs = Vec::with_capacity(m);
    let mut seen = HashSet::new();
    for _ in 0..m {
        let (line, tokens) = records
            .next()
            .ok_or_else(|| parse_error(last, "fewer arc records than declared"))?;
        last = line;
        if tokens[0] != "e" || tokens.len() != 4 {
            return Err(parse_error(line, "expected `e <src> <dst> <weight>`"));
        }
        let src: usize = number(line, tokens[1], "arc source")?;
        let dst: usize = number(line, tokens[2], "arc target")?;
        let weight: i64 = number(line, tokens[3], "arc weight")?;
        if src >= n || dst >= n {
            return Err(parse_error(line, "arc endpoint out of range"));
        }
        if options.strict && !seen.insert((src, dst)) {
            return Err(ArenaError::DuplicateArc { line, src, dst });
        }
        arcs.push(Arc { src, dst, weight });
    }
    if let Some((line, _)) = records.next() {
        return Err(parse_error(
            line,
            "unexpected record after the declared arcs",
        ));
    }
    let owners = owners
        .into_iter()
        .map(|o| o.expect("all ids declared"))
        .collect();
    Arena::with_names(owners, names, arcs)
}

/// Writes `arena` in `.mpg` format.
pub fn serialize_arena(arena: &Arena) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "mpg {} {}", arena.n(), arena.m());
    for v in 0..arena.n() {
        let _ = write!(out, "v {} {}", v, arena.owner(v).index());
        if let Some(name) = arena.name(v) {
            let _ = write!(out, " {name}");
        }
        out.push('\n');
    }
    for a in arena.arcs() {
        let _ = writeln!(out, "e {} {} {}", a.src, a.dst, a.weight);
    }
    out
}

fn parse_error(line: usize, message: &str) -> ArenaError {
    ArenaError::Parse {
        line,
        message: message.to_owned(),
    }
}

fn number<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T, ArenaError> {
    token
        .parse()
        .map_err(|_| parse_error(line, &format!("invalid {what} `{token}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str =
        "# two vertices\nmpg 2 3\nv 1 1 b\nv 0 0 a\ne 0 1 -2 # arc\n\ne 1 0 5\ne 1 1 0\n";

    #[test]
    fn parses_comments_names_and_unordered_vertices() {
        let a = load_arena(SMALL).unwrap();
        assert_eq!(a.n(), 2);
        assert_eq!(a.owner(1), Owner::Player1);
        assert_eq!(a.name(0), Some("a"));
        assert_eq!(
            a.arcs()[0],
            Arc {
                src: 0,
                dst: 1,
                weight: -2
            }
        );
    }

    #[test]
    fn serialization_is_canonical() {
        let a = load_arena(SMALL).unwrap();
        let text = serialize_arena(&a);
        assert_eq!(
            text,
            "mpg 2 3\nv 0 0 a\nv 1 1 b\ne 0 1 -2\ne 1 0 5\ne 1 1 0\n"
        );
        assert_eq!(load_arena(&text).unwrap(), a);
    }

    #[test]
    fn reports_line_numbers() {
        let err = load_arena("mpg 1 1\nv 0 2\ne 0 0 1\n").unwrap_err();
        assert!(matches!(err, ArenaError::Parse { line: 2, .. }));
        let err = load_arena("mpg 1 2\nv 0 0\ne 0 0 1\n").unwrap_err();
        assert!(matches!(err, ArenaError::Parse { line: 3, .. }));
        let err = load_arena("mpg 1 1\nv 0 0\ne 0 0 x\n").unwrap_err();
        assert!(matches!(err, ArenaError::Parse { line: 3, .. }));
    }

    #[test]
    fn sinks_are_rejected_at_load() {
        let err = load_arena("mpg 2 1\nv 0 0\nv 1 1\ne 0 1 0\n").unwrap_err();
        assert_eq!(err, ArenaError::SinkVertex(1));
    }

    #[test]
    fn strict_mode_rejects_parallel_arcs() {
        let text = "mpg 1 2\nv 0 0\ne 0 0 1\ne 0 0 2\n";
        assert_eq!(load_arena(text).unwrap().m(), 2);
        let err = load_arena_with(text, LoadOptions { strict: true }).unwrap_err();
        assert_eq!(
            err,
            ArenaError::DuplicateArc {
                line: 4,
                src: 0,
                dst: 0
            }
        );
    }
}
