//! Text and JSON graph files.
//!
//! Edge-list text: one `u v` pair per line with 0-based ids, `#` starts a
//! comment, and a line holding a single id declares that vertex (needed for
//! the one-vertex graph). The vertex count is one more than the largest id.
//!
//! JSON: `{"n": 5, "edges": [[0, 1], [1, 2]]}`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Json,
}

impl GraphFormat {
    /// Guesses the format from a file extension: `.json` is JSON, anything
    /// else is an edge list.
    pub fn from_path(path: &std::path::Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => GraphFormat::Json,
            _ => GraphFormat::EdgeList,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    n: usize,
    edges: Vec<[Vertex; 2]>,
}

pub fn parse(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Json => parse_json(text),
    }
}

pub fn serialize(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => to_edge_list(g),
        GraphFormat::Json => to_json(g),
    }
}

fn parse_id(tok: &str, line: usize) -> Result<Vertex> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        message: format!("'{tok}' is not a vertex id"),
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut seen: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    let mut max_id: Option<Vertex> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks.as_slice() {
            [] => {}
            [v] => {
                let v = parse_id(v, line)?;
                max_id = max_id.max(Some(v));
            }
            [u, v] => {
                let (u, v) = (parse_id(u, line)?, parse_id(v, line)?);
                if u == v {
                    return Err(Error::Parse {
                        line,
                        message: format!("self-loop at vertex {u}"),
                    });
                }
                if let Some(first) = seen.insert((u.min(v), u.max(v)), line) {
                    return Err(Error::Parse {
                        line,
                        message: format!("edge {u}-{v} already given on line {first}"),
                    });
                }
                max_id = max_id.max(Some(u.max(v)));
                edges.push((u, v));
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected 'u v', found {} fields", toks.len()),
                });
            }
        }
    }
    let n = max_id.map_or(0, |m| m + 1);
    Graph::from_edges(n, &edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("# {} vertices, {} edges\n", g.n(), g.edge_count());
    if g.n() == 1 {
        out.push_str("0\n");
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let jg: JsonGraph = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: format!("column {}: {e}", e.column()),
    })?;
    let edges: Vec<_> = jg.edges.iter().map(|&[u, v]| (u, v)).collect();
    Graph::from_edges(jg.n, &edges)
}

pub fn to_json(g: &Graph) -> String {
    let jg = JsonGraph {
        n: g.n(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
    };
    serde_json::to_string(&jg).expect("graph serializes")
}
