//! Exhaustive enumeration of connected graphs up to isomorphism, via
//! canonical forms computed by individualization and refinement.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order whose upper-triangular adjacency fits a `u64` code.
pub const MAX_CANONICAL_N: usize = 11;

/// Largest order [`connected_graphs`] accepts (11,117 graphs on 8 vertices,
/// 261,080 on 9).
pub const MAX_ENUMERATION_N: usize = 9;

type Masks = Vec<u16>;

fn masks_of(g: &Graph) -> Masks {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | (1 << w)))
        .collect()
}

fn graph_of(masks: &[u16]) -> Result<Graph> {
    let n = masks.len();
    Graph::from_adjacency(
        masks
            .iter()
            .map(|&m| VertexSet::from_iter(n, (0..n).filter(|&w| m >> w & 1 == 1)))
            .collect(),
    )
}

/// Code of the graph relabelled so that `order[i]` becomes vertex `i`: the
/// upper triangle read row by row, first pair in the most significant bit.
fn code(masks: &[u16], order: &[usize]) -> u64 {
    let n = order.len();
    let mut c = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            c = (c << 1) | u64::from(masks[order[i]] >> order[j] & 1);
        }
    }
    c
}

/// Splits cells until every vertex in a cell has the same number of
/// neighbors in every cell. Splitting is label independent, so the result is
/// an isomorphism-invariant ordered partition.
fn refine(masks: &[u16], cells: &mut Vec<Vec<usize>>) {
    loop {
        let cell_masks: Vec<u16> = cells
            .iter()
            .map(|c| c.iter().fold(0u16, |m, &v| m | (1 << v)))
            .collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    (
                        cell_masks
                            .iter()
                            .map(|&cm| (masks[v] & cm).count_ones())
                            .collect(),
                        v,
                    )
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return;
        }
        *cells = next;
    }
}

fn search(masks: &[u16], mut cells: Vec<Vec<usize>>, best: &mut Option<(u64, Vec<usize>)>) {
    refine(masks, &mut cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().flatten().collect();
        let c = code(masks, &order);
        if best.as_ref().is_none_or(|(b, _)| c > *b) {
            *best = Some((c, order));
        }
        return;
    };
    for &v in &cells[target] {
        let mut branch = cells.clone();
        let rest: Vec<usize> = branch[target].iter().copied().filter(|&w| w != v).collect();
        branch[target] = vec![v];
        branch.insert(target + 1, rest);
        search(masks, branch, best);
    }
}

fn canonical_masks(masks: &[u16]) -> (u64, Vec<usize>) {
    let mut best = None;
    search(masks, vec![(0..masks.len()).collect()], &mut best);
    best.expect("search reaches at least one leaf")
}

/// Canonical code of `g`: two graphs of the same order get equal codes iff
/// they are isomorphic. Also returns the canonical order (`order[i]` is the
/// vertex of `g` placed at position `i`).
pub fn canonical_form(g: &Graph) -> Result<(u64, Vec<usize>)> {
    if g.n() > MAX_CANONICAL_N {
        return Err(Error::TooLarge(format!(
            "canonical form supports at most {MAX_CANONICAL_N} vertices"
        )));
    }
    Ok(canonical_masks(&masks_of(g)))
}

/// The graph on `n` vertices with canonical code `code`.
pub fn decode(n: usize, code: u64) -> Result<Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut masks = vec![0u16; n];
    let mut bit = pairs;
    for i in 0..n {
        for j in i + 1..n {
            bit -= 1;
            if code >> bit & 1 == 1 {
                masks[i] |= 1 << j;
                masks[j] |= 1 << i;
            }
        }
    }
    graph_of(&masks)
}

/// All connected graphs on `n` vertices up to isomorphism, as canonical
/// representatives sorted by canonical code.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    connected_codes(n)?
        .into_iter()
        .map(|c| decode(n, c))
        .collect()
}

/// All connected graphs with `1..=max_n` vertices, by increasing order.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    for n in 1..=max_n {
        all.extend(connected_graphs(n)?);
    }
    Ok(all)
}

/// Every connected graph has a vertex whose removal leaves it connected, so
/// extending each connected graph on `n-1` vertices by a new vertex with
/// every nonempty neighborhood reaches all connected graphs on `n`.
fn connected_codes(n: usize) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_ENUMERATION_N {
        return Err(Error::TooLarge(format!(
            "enumeration supports at most {MAX_ENUMERATION_N} vertices"
        )));
    }
    let mut codes: Vec<u64> = vec![0];
    for m in 2..=n {
        let smaller: Vec<Masks> = codes
            .iter()
            .map(|&c| masks_of(&decode(m - 1, c).expect("decodable")))
            .collect();
        let found: BTreeSet<u64> = smaller
            .par_iter()
            .flat_map_iter(|base| {
                (1u16..(1 << (m - 1))).map(move |nbrs| {
                    let mut masks = base.clone();
                    for (w, mask) in masks.iter_mut().enumerate() {
                        if nbrs >> w & 1 == 1 {
                            *mask |= 1 << (m - 1);
                        }
                    }
                    masks.push(nbrs);
                    canonical_masks(&masks).0
                })
            })
            .collect();
        codes = found.into_iter().collect();
    }
    Ok(codes)
}
