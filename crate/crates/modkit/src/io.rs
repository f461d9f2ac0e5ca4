//! Text and JSON graph formats: the edge-list format ("n m" header, then
//! one "u v" line per edge, 0-based) and the sorted JSON emission.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::Parse { offset: 0, message: "empty edge list".into() })?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse { offset: lineno, message: "bad vertex count".into() })?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse { offset: lineno, message: "bad edge count".into() })?;
    let mut g = Graph::edgeless(n);
    let mut seen = 0usize;
    for (lineno, line) in lines {
        let mut it = line.split_whitespace();
        let parse = |t: Option<&str>| {
            t.and_then(|t| t.parse::<usize>().ok()).ok_or_else(|| Error::Parse {
                offset: lineno,
                message: format!("bad edge line {line:?}"),
            })
        };
        let u = parse(it.next())?;
        let v = parse(it.next())?;
        g.add_edge(u, v)
            .map_err(|e| Error::Parse { offset: lineno, message: e.to_string() })?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::Parse {
            offset: 0,
            message: format!("header names {m} edges but {seen} were given"),
        });
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// `{"n": int, "edges": [[u, v], ...]}` with edges sorted lexicographically.
pub fn graph_to_json(g: &Graph) -> serde_json::Value {
    serde_json::json!({
        "n": g.n(),
        "edges": g.edges().iter().map(|&(u, v)| vec![u, v]).collect::<Vec<_>>(),
    })
}
