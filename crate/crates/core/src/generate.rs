//! Graph families: wheels, paths, cycles, cliques, powers, hexagonal
//! systolic disks and seeded random samples.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::recognition::{self, Classification};

/// Complete graph `K_n`.
///
/// # Panics
/// If `n == 0`.
pub fn complete(n: usize) -> Graph {
    assert!(n > 0, "complete graph needs at least one vertex");
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(n, &edges).expect("complete graph is valid")
}

/// Path on `n` vertices `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Precondition(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Wheel `W_k`: rim `0..k` in cyclic order and hub `k`.
pub fn wheel(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::Precondition(format!(
            "wheel needs a rim of at least 3 vertices, got {k}"
        )));
    }
    let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges.extend((0..k).map(|i| (i, k)));
    Graph::from_edges(k + 1, &edges)
}

/// Star `K_{1,k}` with center 0.
pub fn star(k: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    Graph::from_edges(k + 1, &edges)
}

/// The extended 5-wheel: `W_5` (rim `0..5`, hub 5) plus vertex 6 adjacent to
/// the rim edge `0 1` only.
pub fn extended_five_wheel() -> Graph {
    let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (i, 5)));
    edges.extend([(6, 0), (6, 1)]);
    Graph::from_edges(7, &edges).expect("extended 5-wheel is valid")
}

/// `G^k`.
pub fn power(g: &Graph, k: u32) -> Result<Graph> {
    g.power(k)
}

/// Lattice distance of an axial coordinate from the origin.
pub fn hex_ring((q, r): (i64, i64)) -> i64 {
    q.abs().max(r.abs()).max((q + r).abs())
}

const HEX_DIRS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// Triangulated hexagonal disk of the triangular lattice with `layers` rings
/// around the center; `3·L·(L+1)+1` vertices, inner vertices of degree 6.
/// Vertex 0 is the center and ids increase ring by ring.
pub fn systolic_disk(layers: usize) -> Result<Graph> {
    let coords = systolic_disk_coords(layers);
    let index: HashMap<(i64, i64), Vertex> =
        coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut edges = Vec::new();
    for (i, &(q, r)) in coords.iter().enumerate() {
        for (dq, dr) in HEX_DIRS {
            if let Some(&j) = index.get(&(q + dq, r + dr)) {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    Graph::from_edges(coords.len(), &edges)
}

/// Axial lattice coordinates of the vertices of [`systolic_disk`].
pub fn systolic_disk_coords(layers: usize) -> Vec<(i64, i64)> {
    let l = layers as i64;
    let mut coords: Vec<(i64, i64)> = (-l..=l)
        .flat_map(|q| (-l..=l).map(move |r| (q, r)))
        .filter(|&c| hex_ring(c) <= l)
        .collect();
    coords.sort_by_key(|&c| (hex_ring(c), c));
    coords
}

/// Erdős–Rényi `G(n, p)` conditioned on connectivity (rejection sampling).
pub fn random_connected<R: Rng + ?Sized>(
    n: usize,
    p: f64,
    rng: &mut R,
    max_attempts: usize,
) -> Result<Graph> {
    for _ in 0..max_attempts {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.random_bool(p))
            .collect::<Vec<_>>();
        match Graph::from_edges(n, &edges) {
            Ok(g) => return Ok(g),
            Err(Error::Disconnected { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Generator(format!(
        "no connected G({n}, {p}) sample in {max_attempts} attempts"
    )))
}

/// Connected `G(n, p)` samples rejected until their classification equals
/// `class`. Deterministic in `seed`.
pub fn random_filtered(
    n: usize,
    p: f64,
    class: Classification,
    seed: u64,
    max_attempts: usize,
) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Precondition(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_attempts {
        let g = random_connected(n, p, &mut rng, max_attempts)?;
        if recognition::classify(&g)?.classification == class {
            return Ok(g);
        }
    }
    Err(Error::Generator(format!(
        "no {} sample among {max_attempts} connected G({n}, {p}) draws",
        class.name()
    )))
}

/// Which family a grown sample must stay in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthTarget {
    WeaklyBridged,
    Bridged,
}

impl GrowthTarget {
    fn admits(self, g: &Graph) -> bool {
        match self {
            GrowthTarget::WeaklyBridged => recognition::is_weakly_bridged(g),
            GrowthTarget::Bridged => recognition::is_bridged(g),
        }
    }
}

/// Grows a random member of the target family one vertex at a time. Each new
/// vertex is attached to a random anchor `w` and a random subset of `N(w)`,
/// so it is dominated by `w`; a step is kept only if the graph stays in the
/// family. Every finite weakly bridged (resp. bridged) graph can be produced
/// this way, in reverse of a LexBFS elimination order.
pub fn grow(n: usize, target: GrowthTarget, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    const STEP_ATTEMPTS: usize = 200;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density: f64 = rng.random_range(0.25..0.85);
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new()];
    while adj.len() < n {
        let m = adj.len();
        let mut grown = None;
        for _ in 0..STEP_ATTEMPTS {
            let w = rng.random_range(0..m);
            let mut nbrs = vec![w];
            nbrs.extend(adj[w].iter().copied().filter(|_| rng.random_bool(density)));
            let g = graph_with_new_vertex(&adj, &nbrs)?;
            if target.admits(&g) {
                grown = Some(nbrs);
                break;
            }
        }
        let nbrs =
            grown.ok_or_else(|| Error::Generator(format!("growth stalled at {m} vertices")))?;
        for &x in &nbrs {
            adj[x].push(m);
        }
        adj.push(nbrs);
    }
    from_lists(&adj)
}

fn from_lists(adj: &[Vec<Vertex>]) -> Result<Graph> {
    let n = adj.len();
    Graph::from_adjacency(
        adj.iter()
            .map(|row| VertexSet::from_iter(n, row.iter().copied()))
            .collect(),
    )
}

fn graph_with_new_vertex(adj: &[Vec<Vertex>], nbrs: &[Vertex]) -> Result<Graph> {
    let m = adj.len();
    let mut rows: Vec<VertexSet> = adj
        .iter()
        .map(|row| VertexSet::from_iter(m + 1, row.iter().copied()))
        .collect();
    for &x in nbrs {
        rows[x].insert(m);
    }
    rows.push(VertexSet::from_iter(m + 1, nbrs.iter().copied()));
    Graph::from_adjacency(rows)
}
