//! Per-graph reports and Graphviz export of witnesses.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::error::Result;
use crate::games;
use crate::graph::{Graph, Vertex};
use crate::orderings::{self, TieBreak};
use crate::recognition::{self, Characterization, Classification, Witness};

/// Machine-readable record of one graph: recognition verdicts with
/// witnesses, a LexBFS dismantling check and timing.
#[derive(Debug, Clone, Serialize)]
pub struct GraphReport {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
    pub classification: Classification,
    pub verdicts: BTreeMap<Characterization, bool>,
    pub witnesses: BTreeMap<Characterization, Witness>,
    pub isometric_c5: Option<Vec<Vertex>>,
    /// LexBFS from vertex 0 (lowest-id ties), reversed, folds the graph.
    pub lexbfs_dismantles: bool,
    pub cop_win: bool,
    pub elapsed_ms: f64,
}

impl GraphReport {
    pub fn build(g: &Graph) -> Result<Self> {
        let start = Instant::now();
        let rec = recognition::classify(g)?;
        let lex = orderings::lexbfs(g, 0, &TieBreak::LowestId)?;
        let lexbfs_dismantles = orderings::verify_dismantling(g, &lex.elimination_order())?.holds();
        let cop_win = games::solve_copwin(g).is_cop_win();
        Ok(Self {
            n: g.n(),
            edges: g.edges().collect(),
            classification: rec.classification,
            verdicts: rec.verdicts,
            witnesses: rec.witnesses,
            isometric_c5: rec.isometric_c5,
            lexbfs_dismantles,
            cop_win,
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        })
    }

    /// Rebuilds the stored graph and re-checks every witness against it.
    pub fn replay(&self) -> Result<bool> {
        let g = Graph::from_edges(self.n, &self.edges)?;
        Ok(self.witnesses.values().all(|w| w.replay(&g)))
    }

    pub fn to_dot(&self, g: &Graph) -> String {
        let mut hl: Vec<Vertex> = self
            .witnesses
            .values()
            .flat_map(Witness::vertices)
            .collect();
        if let Some(c) = &self.isometric_c5 {
            hl.extend(c);
        }
        let cycles: Vec<&[Vertex]> = self
            .witnesses
            .values()
            .filter_map(|w| match w {
                Witness::InducedC4 { cycle } | Witness::UnwheeledC5 { cycle } => {
                    Some(cycle.as_slice())
                }
                _ => None,
            })
            .chain(self.isometric_c5.as_deref())
            .collect();
        to_dot(g, &hl, &cycle_edges(&cycles))
    }
}

fn cycle_edges(cycles: &[&[Vertex]]) -> Vec<(Vertex, Vertex)> {
    cycles
        .iter()
        .flat_map(|c| (0..c.len()).map(move |i| (c[i], c[(i + 1) % c.len()])))
        .collect()
}

/// Graphviz source for `g` with the given vertices filled red and the given
/// edges drawn bold red. Edges between two highlighted vertices are drawn red
/// too.
pub fn to_dot(g: &Graph, vertices: &[Vertex], edges: &[(Vertex, Vertex)]) -> String {
    let marked = |v: Vertex| vertices.contains(&v);
    let bold = |u: Vertex, v: Vertex| {
        edges
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    };
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in g.vertices() {
        if marked(v) {
            writeln!(out, "  {v} [style=filled, fillcolor=red];").unwrap();
        } else {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for (u, v) in g.edges() {
        if bold(u, v) {
            writeln!(out, "  {u} -- {v} [color=red, penwidth=3];").unwrap();
        } else if marked(u) && marked(v) {
            writeln!(out, "  {u} -- {v} [color=red];").unwrap();
        } else {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn reports_replay() {
        let c6 = generate::cycle(6).unwrap();
        let r = GraphReport::build(&c6).unwrap();
        assert_eq!(r.classification, Classification::NotWeaklyBridged);
        assert!(!r.witnesses.is_empty());
        assert!(r.replay().unwrap());
        assert!(!r.cop_win && !r.lexbfs_dismantles);
        let dot = r.to_dot(&c6);
        assert!(dot.contains("fillcolor=red"));

        let w5 = generate::wheel(5).unwrap();
        let r = GraphReport::build(&w5).unwrap();
        assert_eq!(r.classification, Classification::WeaklyBridgedNotBridged);
        assert!(r.cop_win && r.lexbfs_dismantles);
        assert!(r.to_dot(&w5).contains("penwidth=3"));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["classification"], "weakly_bridged_not_bridged");
        assert_eq!(json["verdicts"]["TC"], true);
    }
}
