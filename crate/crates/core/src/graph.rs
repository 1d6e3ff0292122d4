//! Finite connected simple graphs with a precomputed distance matrix, and the
//! metric primitives built on top of it: intervals, balls, spheres, convexity
//! and convex hulls, induced cycles, eccentricities.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Default upper bound for [`Graph::induced_cycles`].
pub const DEFAULT_CYCLE_CAP: usize = 8;

/// A set of vertices of a graph on `universe` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        Self { bits }
    }

    pub fn singleton(universe: usize, v: Vertex) -> Self {
        let mut s = Self::new(universe);
        s.insert(v);
        s
    }

    pub fn from_iter<I: IntoIterator<Item = Vertex>>(universe: usize, iter: I) -> Self {
        let mut s = Self::new(universe);
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.bits.contains(v)
    }

    /// Returns `true` if `v` was not already present.
    pub fn insert(&mut self, v: Vertex) -> bool {
        !self.bits.put(v)
    }

    pub fn remove(&mut self, v: Vertex) {
        self.bits.set(v, false);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.bits.minimum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn intersection_count(&self, other: &VertexSet) -> usize {
        self.bits.intersection_count(&other.bits)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Connected, loop-free, simple undirected graph on vertices `0..n` with its
/// hop-count distance matrix.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    nbrs: Vec<Vec<Vertex>>,
    dist: Vec<u32>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, repeated edges,
    /// out-of-range ids and disconnected input.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !adj[u].insert(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[v].insert(u);
        }
        Self::from_adjacency(adj)
    }

    /// Builds a graph from symmetric, loop-free adjacency rows.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        for (u, row) in adj.iter().enumerate() {
            if row.universe() != n {
                return Err(Error::Precondition(format!(
                    "adjacency row {u} has universe {} instead of {n}",
                    row.universe()
                )));
            }
            if row.contains(u) {
                return Err(Error::SelfLoop(u));
            }
            if let Some(v) = row.iter().find(|&v| !adj[v].contains(u)) {
                return Err(Error::Precondition(format!(
                    "adjacency is not symmetric at {u}-{v}"
                )));
            }
        }
        let nbrs: Vec<Vec<Vertex>> = adj.iter().map(|r| r.to_vec()).collect();
        let mut dist = vec![u32::MAX; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                let dx = row[x];
                for &y in &nbrs[x] {
                    if row[y] == u32::MAX {
                        row[y] = dx + 1;
                        queue.push_back(y);
                    }
                }
            }
            if s == 0 {
                if let Some(unreachable) = row.iter().position(|&d| d == u32::MAX) {
                    return Err(Error::Disconnected { unreachable });
                }
            }
        }
        Ok(Self { n, adj, nbrs, dist })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    /// Open neighborhood, sorted.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.nbrs[v]
    }

    pub fn neighbor_set(&self, v: Vertex) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighborhood, i.e. the unit ball `B_1(v)`.
    pub fn closed_neighborhood(&self, v: Vertex) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.nbrs[v].len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.nbrs[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn set_of<I: IntoIterator<Item = Vertex>>(&self, vs: I) -> Result<VertexSet> {
        let mut s = self.empty_set();
        for v in vs {
            self.check_vertex(v)?;
            s.insert(v);
        }
        Ok(s)
    }

    /// `I(u,v) = { x : d(u,x) + d(x,v) = d(u,v) }`.
    pub fn interval(&self, u: Vertex, v: Vertex) -> Result<VertexSet> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.interval_unchecked(u, v))
    }

    pub(crate) fn interval_unchecked(&self, u: Vertex, v: Vertex) -> VertexSet {
        let d = self.distance(u, v);
        VertexSet::from_iter(
            self.n,
            (0..self.n).filter(|&x| self.distance(u, x) + self.distance(x, v) == d),
        )
    }

    pub fn in_interval(&self, u: Vertex, x: Vertex, v: Vertex) -> bool {
        self.distance(u, x) + self.distance(x, v) == self.distance(u, v)
    }

    /// Distance from `v` to the nearest member of `set`; `None` for an empty set.
    pub fn distance_to_set(&self, v: Vertex, set: &VertexSet) -> Option<u32> {
        set.iter().map(|c| self.distance(c, v)).min()
    }

    pub fn ball(&self, center: &VertexSet, r: u32) -> Result<VertexSet> {
        if center.is_empty() {
            return Err(Error::EmptyCenter);
        }
        Ok(VertexSet::from_iter(
            self.n,
            (0..self.n).filter(|&x| center.iter().any(|c| self.distance(c, x) <= r)),
        ))
    }

    pub fn sphere(&self, center: &VertexSet, r: u32) -> Result<VertexSet> {
        if center.is_empty() {
            return Err(Error::EmptyCenter);
        }
        Ok(VertexSet::from_iter(
            self.n,
            (0..self.n).filter(|&x| self.distance_to_set(x, center) == Some(r)),
        ))
    }

    pub fn vertex_ball(&self, v: Vertex, r: u32) -> VertexSet {
        VertexSet::from_iter(self.n, (0..self.n).filter(|&x| self.distance(v, x) <= r))
    }

    /// First violation `(u, v, x)` with `u, v` in `s` and `x` in `I(u,v)` outside `s`.
    pub fn convexity_violation(&self, s: &VertexSet) -> Option<(Vertex, Vertex, Vertex)> {
        let members = s.to_vec();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if self.distance(u, v) < 2 {
                    continue;
                }
                if let Some(x) = (0..self.n).find(|&x| !s.contains(x) && self.in_interval(u, x, v))
                {
                    return Some((u, v, x));
                }
            }
        }
        None
    }

    pub fn is_convex(&self, s: &VertexSet) -> bool {
        self.convexity_violation(s).is_none()
    }

    /// Least convex superset of `w`.
    pub fn convex_hull(&self, w: &VertexSet) -> Result<VertexSet> {
        if w.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut hull = w.clone();
        loop {
            let members = hull.to_vec();
            let mut next = hull.clone();
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    if self.distance(u, v) >= 2 {
                        next.union_with(&self.interval_unchecked(u, v));
                    }
                }
            }
            if next == hull {
                return Ok(hull);
            }
            hull = next;
        }
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let members = s.to_vec();
        members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| self.adjacent(u, v)))
    }

    /// All induced (chordless) cycles of length `k`, each reported once as
    /// the vertex sequence starting at its smallest vertex and continuing
    /// towards the smaller of that vertex's two cycle neighbors. The output is
    /// sorted lexicographically.
    pub fn induced_cycles(&self, k: usize) -> Result<Vec<Vec<Vertex>>> {
        self.induced_cycles_with_cap(k, DEFAULT_CYCLE_CAP)
    }

    pub fn induced_cycles_with_cap(&self, k: usize, cap: usize) -> Result<Vec<Vec<Vertex>>> {
        if k < 3 || k > cap {
            return Err(Error::CycleLength { k, cap });
        }
        let mut out = Vec::new();
        let mut path = Vec::with_capacity(k);
        for s in 0..self.n {
            path.clear();
            path.push(s);
            self.extend_cycle(s, k, &mut path, &mut out);
        }
        Ok(out)
    }

    fn extend_cycle(
        &self,
        s: Vertex,
        k: usize,
        path: &mut Vec<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let last = *path.last().unwrap();
        for &x in &self.nbrs[last] {
            if x <= s || path.contains(&x) {
                continue;
            }
            let len = path.len();
            // x may touch only `last` among the interior, and touches `s`
            // exactly when it closes the cycle.
            let chord = path
                .iter()
                .skip(1)
                .take(len.saturating_sub(2))
                .any(|&p| self.adjacent(p, x));
            if chord {
                continue;
            }
            let closes = self.adjacent(s, x);
            if len + 1 == k {
                if closes && path[1] < x {
                    let mut cycle = path.clone();
                    cycle.push(x);
                    out.push(cycle);
                }
                continue;
            }
            if closes && len >= 2 {
                continue;
            }
            path.push(x);
            self.extend_cycle(s, k, path, out);
            path.pop();
        }
    }

    pub fn eccentricity(&self, v: Vertex) -> u32 {
        (0..self.n).map(|x| self.distance(v, x)).max().unwrap_or(0)
    }

    pub fn diameter(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    pub fn radius(&self) -> u32 {
        (0..self.n).map(|v| self.eccentricity(v)).min().unwrap_or(0)
    }

    /// Induced subgraph on `set`, relabelled densely in increasing vertex
    /// order; returns the graph and the map from new ids to old ids.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<Vertex>)> {
        let keep = set.to_vec();
        if keep.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(&v) = keep.iter().find(|&&v| v >= self.n) {
            return Err(Error::InvalidVertex {
                vertex: v,
                n: self.n,
            });
        }
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let m = keep.len();
        let adj = keep
            .iter()
            .map(|&v| {
                VertexSet::from_iter(
                    m,
                    self.nbrs[v]
                        .iter()
                        .filter(|&&w| set.contains(w))
                        .map(|&w| new_id[w]),
                )
            })
            .collect();
        Ok((Graph::from_adjacency(adj)?, keep))
    }

    /// Whether the induced subgraph on `set` is connected and preserves all
    /// pairwise distances.
    pub fn is_isometric_subset(&self, set: &VertexSet) -> bool {
        match self.induced_subgraph(set) {
            Ok((sub, map)) => (0..sub.n()).all(|i| {
                (i + 1..sub.n()).all(|j| sub.distance(i, j) == self.distance(map[i], map[j]))
            }),
            Err(_) => false,
        }
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::NotAPermutation);
        }
        let mut seen = self.empty_set();
        for &p in perm {
            if p >= self.n || !seen.insert(p) {
                return Err(Error::NotAPermutation);
            }
        }
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.n, &edges)
    }

    /// `G^k`: same vertices, adjacency iff distance at most `k`.
    pub fn power(&self, k: u32) -> Result<Graph> {
        if k == 0 {
            return Err(Error::Precondition("graph power needs k >= 1".into()));
        }
        let adj = (0..self.n)
            .map(|u| {
                VertexSet::from_iter(
                    self.n,
                    (0..self.n).filter(|&v| v != u && self.distance(u, v) <= k),
                )
            })
            .collect();
        Graph::from_adjacency(adj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn wheel(k: usize) -> Graph {
        let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        edges.extend((0..k).map(|i| (i, k)));
        Graph::from_edges(k + 1, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Vertices lying on some shortest u-v path, found by enumerating every
    /// walk of length d(u,v) from u that ends at v.
    fn interval_by_paths(g: &Graph, u: Vertex, v: Vertex) -> Vec<Vertex> {
        fn walk(g: &Graph, path: &mut Vec<Vertex>, left: u32, target: Vertex, hit: &mut Vec<bool>) {
            let last = *path.last().unwrap();
            if left == 0 {
                if last == target {
                    for &p in path.iter() {
                        hit[p] = true;
                    }
                }
                return;
            }
            for &x in g.neighbors(last) {
                path.push(x);
                walk(g, path, left - 1, target, hit);
                path.pop();
            }
        }
        let mut hit = vec![false; g.n()];
        walk(g, &mut vec![u], g.distance(u, v), v, &mut hit);
        (0..g.n()).filter(|&x| hit[x]).collect()
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert_eq!(Graph::from_edges(0, &[]), Err(Error::EmptyGraph));
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::InvalidVertex { vertex: 2, n: 2 })
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 1)]),
            Err(Error::Disconnected { unreachable: 2 })
        );
        assert!(Graph::from_edges(1, &[]).is_ok());
    }

    #[test]
    fn distance_matrix_matches_adjacency() {
        let g = wheel(5);
        for u in g.vertices() {
            for v in g.vertices() {
                assert_eq!(g.distance(u, v) == 1, g.adjacent(u, v));
                assert_eq!(g.distance(u, v), g.distance(v, u));
            }
        }
    }

    #[test]
    fn intervals() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.interval(0, 2).unwrap().to_vec(), vec![0, 1, 2]);
        let c5 = cycle(5);
        for v in c5.vertices() {
            assert_eq!(c5.interval(v, v).unwrap().to_vec(), vec![v]);
        }
        assert_eq!(interval_by_paths(&c5, 0, 2), vec![0, 1, 2]);
        assert_eq!(c5.interval(0, 2).unwrap().to_vec(), vec![0, 1, 2]);
        assert!(c5.interval(0, 5).is_err());
        let c6 = cycle(6);
        for u in c6.vertices() {
            for v in c6.vertices() {
                assert_eq!(
                    c6.interval(u, v).unwrap().to_vec(),
                    interval_by_paths(&c6, u, v)
                );
            }
        }
    }

    #[test]
    fn balls_and_spheres() {
        let c5 = cycle(5);
        let zero = c5.set_of([0]).unwrap();
        assert_eq!(c5.ball(&zero, 0).unwrap().to_vec(), vec![0]);
        assert_eq!(c5.sphere(&zero, 2).unwrap().to_vec(), vec![2, 3]);
        assert_eq!(c5.ball(&c5.empty_set(), 1), Err(Error::EmptyCenter));
        let w5 = wheel(5);
        let hub = w5.set_of([5]).unwrap();
        assert_eq!(w5.ball(&hub, 1).unwrap().len(), 6);
    }

    #[test]
    fn convexity() {
        let c5 = cycle(5);
        assert!(c5.is_convex(&c5.set_of([3]).unwrap()));
        let b = c5.ball(&c5.set_of([0]).unwrap(), 1).unwrap();
        assert_eq!(b.to_vec(), vec![0, 1, 4]);
        assert!(c5.is_convex(&b));
        // C6: d(5,1) = 2 and the only geodesic is 5-0-1, so the unit ball
        // around 0 is convex.
        let c6 = cycle(6);
        let b6 = c6.ball(&c6.set_of([0]).unwrap(), 1).unwrap();
        assert_eq!(interval_by_paths(&c6, 5, 1), vec![0, 1, 5]);
        assert!(c6.is_convex(&b6));
        // The radius-2 ball {4,5,0,1,2} is not: 3 lies between 1 and 4.
        let b6_2 = c6.ball(&c6.set_of([0]).unwrap(), 2).unwrap();
        assert_eq!(c6.convexity_violation(&b6_2), Some((1, 4, 3)));
    }

    #[test]
    fn convex_hulls() {
        let c5 = cycle(5);
        assert_eq!(
            c5.convex_hull(&c5.set_of([0, 2]).unwrap())
                .unwrap()
                .to_vec(),
            vec![0, 1, 2]
        );
        assert_eq!(
            c5.convex_hull(&c5.set_of([0, 1]).unwrap())
                .unwrap()
                .to_vec(),
            vec![0, 1]
        );
        let ball = c5.ball(&c5.set_of([0]).unwrap(), 1).unwrap();
        assert_eq!(c5.convex_hull(&ball).unwrap(), ball);
        assert_eq!(c5.convex_hull(&c5.empty_set()), Err(Error::EmptySet));
        let c6 = cycle(6);
        assert_eq!(
            c6.convex_hull(&c6.set_of([0, 3]).unwrap()).unwrap().len(),
            6
        );
    }

    #[test]
    fn induced_cycles() {
        assert!(complete(4).induced_cycles(4).unwrap().is_empty());
        assert_eq!(
            cycle(5).induced_cycles(5).unwrap(),
            vec![vec![0, 1, 2, 3, 4]]
        );
        assert_eq!(
            wheel(5).induced_cycles(5).unwrap(),
            vec![vec![0, 1, 2, 3, 4]]
        );
        assert_eq!(complete(4).induced_cycles(3).unwrap().len(), 4);
        assert_eq!(wheel(6).induced_cycles(4).unwrap().len(), 0);
        assert_eq!(cycle(4).induced_cycles(4).unwrap(), vec![vec![0, 1, 2, 3]]);
        assert!(matches!(
            cycle(4).induced_cycles(2),
            Err(Error::CycleLength { .. })
        ));
        assert!(matches!(
            cycle(9).induced_cycles(9),
            Err(Error::CycleLength { .. })
        ));
        assert_eq!(cycle(9).induced_cycles_with_cap(9, 9).unwrap().len(), 1);
    }

    #[test]
    fn diameter_and_radius() {
        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert_eq!((k1.diameter(), k1.radius()), (0, 0));
        assert_eq!((cycle(5).diameter(), cycle(5).radius()), (2, 2));
        assert_eq!((wheel(5).diameter(), wheel(5).radius()), (2, 1));
    }

    #[test]
    fn induced_subgraphs_and_isometry() {
        let c6 = cycle(6);
        let path = c6.set_of([0, 1, 2, 3, 4]).unwrap();
        let (sub, map) = c6.induced_subgraph(&path).unwrap();
        assert_eq!(map, vec![0, 1, 2, 3, 4]);
        assert_eq!(sub.distance(0, 4), 4);
        assert!(!c6.is_isometric_subset(&path));
        assert!(c6.is_isometric_subset(&c6.set_of([0, 1, 2, 3]).unwrap()));
        assert!(c6.is_isometric_subset(&c6.set_of([0, 1, 2]).unwrap()));
        assert!(matches!(
            c6.induced_subgraph(&c6.set_of([0, 2]).unwrap()),
            Err(Error::Disconnected { .. })
        ));
    }

    #[test]
    fn powers() {
        let c5 = cycle(5);
        assert_eq!(c5.power(1).unwrap(), c5);
        assert_eq!(c5.power(2).unwrap(), complete(5));
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.power(3).unwrap(), complete(4));
    }
}
