//! BFS and LexBFS traversals with their certificates, and verifiers for
//! dismantling orders, the fellow traveler property and geodesic combings.
//!
//! Numbering follows the decreasing convention: the root receives number `n`
//! and the last visited vertex receives `1`. A dismantling (elimination)
//! order lists the vertex to fold away first, so it is the reverse of the
//! visit order.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// How to choose among equally good candidates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TieBreak {
    /// Smallest vertex id.
    LowestId,
    /// Uniformly random choice driven by a ChaCha8 stream with this seed.
    Seeded(u64),
    /// Earliest position in the given sequence; unlisted vertices come last,
    /// by id.
    Priority(Vec<Vertex>),
}

struct Chooser {
    rng: Option<ChaCha8Rng>,
    rank: Vec<usize>,
}

impl Chooser {
    fn new(n: usize, tie: &TieBreak) -> Self {
        let mut rank: Vec<usize> = (0..n).map(|v| n + v).collect();
        let mut rng = None;
        match tie {
            TieBreak::LowestId => {}
            TieBreak::Seeded(seed) => rng = Some(ChaCha8Rng::seed_from_u64(*seed)),
            TieBreak::Priority(seq) => {
                for (i, &v) in seq.iter().enumerate() {
                    if v < n {
                        rank[v] = rank[v].min(i);
                    }
                }
            }
        }
        Self { rng, rank }
    }

    fn pick(&mut self, candidates: &[Vertex]) -> Vertex {
        match &mut self.rng {
            Some(rng) => candidates[rng.random_range(0..candidates.len())],
            None => *candidates
                .iter()
                .min_by_key(|&&v| self.rank[v])
                .expect("nonempty candidates"),
        }
    }

    fn arrange(&mut self, vs: &mut [Vertex]) {
        match &mut self.rng {
            Some(rng) => vs.shuffle(rng),
            None => vs.sort_by_key(|&v| self.rank[v]),
        }
    }
}

/// Certificate of a BFS-type traversal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LexBfsRecord {
    pub root: Vertex,
    /// Visit order, root first.
    pub order: Vec<Vertex>,
    /// `number[v]`: the root has `n`, the last visited vertex has `1`.
    pub number: Vec<usize>,
    /// `father[v]`: earliest-numbered neighbor of `v`; `None` for the root.
    pub father: Vec<Option<Vertex>>,
    /// `labels[v]`: numbers of the neighbors of `v` numbered before it, in
    /// decreasing order, as seen when `v` was numbered.
    pub labels: Vec<Vec<usize>>,
}

impl LexBfsRecord {
    pub fn n(&self) -> usize {
        self.order.len()
    }

    /// Vertex carrying number `alpha`.
    pub fn vertex_numbered(&self, alpha: usize) -> Vertex {
        self.order[self.n() - alpha]
    }

    /// Reverse of the visit order: the order in which vertices are folded.
    pub fn elimination_order(&self) -> Vec<Vertex> {
        self.order.iter().rev().copied().collect()
    }

    /// Father with the root mapped to itself.
    pub fn father_or_self(&self, v: Vertex) -> Vertex {
        self.father[v].unwrap_or(v)
    }

    /// Earlier-numbered neighbors of `v` one layer closer to the root.
    pub fn label_lower(&self, g: &Graph, v: Vertex) -> Vec<usize> {
        let d = g.distance(self.root, v);
        self.labels[v]
            .iter()
            .copied()
            .filter(|&a| g.distance(self.root, self.vertex_numbered(a)) + 1 == d)
            .collect()
    }

    /// Earlier-numbered neighbors of `v` in the same layer.
    pub fn label_same(&self, g: &Graph, v: Vertex) -> Vec<usize> {
        let d = g.distance(self.root, v);
        self.labels[v]
            .iter()
            .copied()
            .filter(|&a| g.distance(self.root, self.vertex_numbered(a)) == d)
            .collect()
    }

    /// Vertices numbered at least `alpha`, i.e. the first `n - alpha + 1` visited.
    pub fn suffix_set(&self, alpha: usize) -> VertexSet {
        VertexSet::from_iter(self.n(), self.order[..=self.n() - alpha].iter().copied())
    }

    /// Internal consistency against `g`: permutation, root first, fathers
    /// adjacent and earlier, BFS layering, labels as recorded.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        if self.order.len() != n
            || self.number.len() != n
            || self.father.len() != n
            || self.labels.len() != n
        {
            return Err(Error::Precondition(
                "record size does not match graph".into(),
            ));
        }
        let mut seen = g.empty_set();
        for &v in &self.order {
            if v >= n || !seen.insert(v) {
                return Err(Error::NotAPermutation);
            }
        }
        if self.order[0] != self.root || self.father[self.root].is_some() {
            return Err(Error::Precondition(
                "root is not first or has a father".into(),
            ));
        }
        for (i, &v) in self.order.iter().enumerate() {
            if self.number[v] != n - i {
                return Err(Error::Precondition(format!(
                    "number of {v} is inconsistent"
                )));
            }
            let mut label: Vec<usize> = g
                .neighbors(v)
                .iter()
                .map(|&w| self.number[w])
                .filter(|&a| a > n - i)
                .collect();
            label.sort_unstable_by(|a, b| b.cmp(a));
            if label != self.labels[v] {
                return Err(Error::Precondition(format!("label of {v} is inconsistent")));
            }
            if v == self.root {
                continue;
            }
            let f =
                self.father[v].ok_or_else(|| Error::Precondition(format!("{v} has no father")))?;
            if !g.adjacent(v, f) || self.number[f] <= self.number[v] {
                return Err(Error::Precondition(format!(
                    "father of {v} is not an earlier neighbor"
                )));
            }
            if label.first() != Some(&self.number[f]) {
                return Err(Error::Precondition(format!(
                    "father of {v} is not its earliest neighbor"
                )));
            }
            if g.distance(self.root, v) != g.distance(self.root, f) + 1 {
                return Err(Error::Precondition(format!(
                    "father of {v} breaks BFS layering"
                )));
            }
        }
        Ok(())
    }
}

/// Lexicographic breadth-first search from `root`: the next vertex numbered
/// is one whose label (numbers of numbered neighbors, decreasing) is
/// lexicographically largest.
pub fn lexbfs(g: &Graph, root: Vertex, tie: &TieBreak) -> Result<LexBfsRecord> {
    g.check_vertex(root)?;
    let n = g.n();
    let mut chooser = Chooser::new(n, tie);
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut numbered = vec![false; n];
    let mut number = vec![0; n];
    let mut order = Vec::with_capacity(n);
    let mut father = vec![None; n];
    let mut next = root;
    for step in 0..n {
        let v = next;
        let alpha = n - step;
        numbered[v] = true;
        number[v] = alpha;
        order.push(v);
        father[v] = labels[v].first().map(|&a| order[n - a]);
        for &w in g.neighbors(v) {
            if !numbered[w] {
                labels[w].push(alpha);
            }
        }
        if step + 1 == n {
            break;
        }
        let best = (0..n)
            .filter(|&w| !numbered[w])
            .map(|w| &labels[w])
            .max()
            .expect("unnumbered vertex left");
        let candidates: Vec<Vertex> = (0..n)
            .filter(|&w| !numbered[w] && labels[w] == *best)
            .collect();
        next = chooser.pick(&candidates);
    }
    Ok(LexBfsRecord {
        root,
        order,
        number,
        father,
        labels,
    })
}

/// Plain breadth-first search: the head of the queue numbers all its still
/// unnumbered neighbors, in the order given by `tie`.
pub fn bfs(g: &Graph, root: Vertex, tie: &TieBreak) -> Result<LexBfsRecord> {
    g.check_vertex(root)?;
    let n = g.n();
    let mut chooser = Chooser::new(n, tie);
    let mut number = vec![0; n];
    let mut order = Vec::with_capacity(n);
    let mut father = vec![None; n];
    let mut labels = vec![Vec::new(); n];
    let mut head = 0;
    number[root] = n;
    order.push(root);
    while head < order.len() {
        let v = order[head];
        head += 1;
        let mut fresh: Vec<Vertex> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| number[w] == 0)
            .collect();
        chooser.arrange(&mut fresh);
        for w in fresh {
            number[w] = n - order.len();
            father[w] = Some(v);
            order.push(w);
        }
    }
    for &v in &order {
        let mut label: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| number[w])
            .filter(|&a| a > number[v])
            .collect();
        label.sort_unstable_by(|a, b| b.cmp(a));
        labels[v] = label;
    }
    Ok(LexBfsRecord {
        root,
        order,
        number,
        father,
        labels,
    })
}

/// Outcome of checking an elimination order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DismantlingCheck {
    /// For each position before the first failure, the smallest later vertex
    /// dominating it in the remaining subgraph.
    pub dominators: Vec<Vertex>,
    /// Position of the first vertex with no later dominator.
    pub first_failure: Option<usize>,
}

impl DismantlingCheck {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

fn check_permutation(g: &Graph, order: &[Vertex]) -> Result<()> {
    if order.len() != g.n() {
        return Err(Error::NotAPermutation);
    }
    let mut seen = g.empty_set();
    for &v in order {
        if v >= g.n() || !seen.insert(v) {
            return Err(Error::NotAPermutation);
        }
    }
    Ok(())
}

/// `v` is dominated by `w` inside `within`: `N[v] ∩ within ⊆ N[w]`.
pub fn dominates(g: &Graph, w: Vertex, v: Vertex, within: &VertexSet) -> bool {
    if w == v || !g.adjacent(v, w) {
        return false;
    }
    g.neighbors(v)
        .iter()
        .all(|&x| x == w || !within.contains(x) || g.adjacent(w, x))
}

/// Checks that each vertex of `order` (except the last) is dominated by a
/// later vertex in the subgraph induced by itself and the later vertices.
pub fn verify_dismantling(g: &Graph, order: &[Vertex]) -> Result<DismantlingCheck> {
    check_permutation(g, order)?;
    let mut remaining = g.full_set();
    let mut dominators = Vec::with_capacity(order.len());
    for (i, &v) in order.iter().enumerate().take(order.len().saturating_sub(1)) {
        let dom = g
            .neighbors(v)
            .iter()
            .copied()
            .find(|&w| remaining.contains(w) && dominates(g, w, v, &remaining));
        match dom {
            Some(w) => dominators.push(w),
            None => {
                return Ok(DismantlingCheck {
                    dominators,
                    first_failure: Some(i),
                })
            }
        }
        remaining.remove(v);
    }
    Ok(DismantlingCheck {
        dominators,
        first_failure: None,
    })
}

/// First vertex (in visit order) not dominated by its father in the subgraph
/// induced by the vertices visited up to and including it.
pub fn father_domination_violation(g: &Graph, rec: &LexBfsRecord) -> Option<Vertex> {
    let mut prefix = g.empty_set();
    for &v in &rec.order {
        prefix.insert(v);
        if let Some(f) = rec.father[v] {
            if !dominates(g, f, v, &prefix) {
                return Some(v);
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FellowTravelerViolation {
    /// Adjacent `v, w` whose fathers are distinct and nonadjacent.
    FathersApart { v: Vertex, w: Vertex },
    /// `w` numbered after `v`, fathers adjacent, but `f(w)` is neither `v`
    /// nor adjacent to it, or `f(v)` is adjacent to `w`.
    Refined { v: Vertex, w: Vertex },
}

/// The fellow traveler property split into its parts, plus the domination
/// consequence (each vertex dominated by its father in its prefix).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FellowTravelerReport {
    pub violation: Option<FellowTravelerViolation>,
    pub undominated_by_father: Option<Vertex>,
}

impl FellowTravelerReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none() && self.undominated_by_father.is_none()
    }
}

pub fn verify_fellow_traveler(g: &Graph, rec: &LexBfsRecord) -> Result<FellowTravelerReport> {
    rec.validate(g)?;
    let mut violation = None;
    'edges: for (a, b) in g.edges() {
        // v numbered before w
        let (v, w) = if rec.number[a] > rec.number[b] {
            (a, b)
        } else {
            (b, a)
        };
        let (fv, fw) = (rec.father_or_self(v), rec.father_or_self(w));
        if fv == fw {
            continue;
        }
        if !g.adjacent(fv, fw) {
            violation = Some(FellowTravelerViolation::FathersApart { v, w });
            break 'edges;
        }
        if !(fw == v || g.adjacent(fw, v)) || g.adjacent(fv, w) {
            violation = Some(FellowTravelerViolation::Refined { v, w });
            break 'edges;
        }
    }
    Ok(FellowTravelerReport {
        violation,
        undominated_by_father: father_domination_violation(g, rec),
    })
}

/// Root-to-vertex paths read off a traversal tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Combing {
    pub root: Vertex,
    /// `paths[v]` runs from the root to `v`.
    pub paths: Vec<Vec<Vertex>>,
}

pub fn build_combing(rec: &LexBfsRecord) -> Combing {
    let n = rec.n();
    let mut paths: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for &v in &rec.order {
        paths[v] = match rec.father[v] {
            Some(f) => {
                let mut p = paths[f].clone();
                p.push(v);
                p
            }
            None => vec![v],
        };
    }
    Combing {
        root: rec.root,
        paths,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CombingViolation {
    /// The path to `v` is not a shortest root-`v` path.
    NotGeodesic { v: Vertex },
    /// Paths to adjacent `v, w` are more than one apart at step `t`.
    Diverge { v: Vertex, w: Vertex, t: usize },
}

/// Vertex at step `t`, frozen at the endpoint past the end.
fn at(path: &[Vertex], t: usize) -> Vertex {
    path[t.min(path.len() - 1)]
}

/// Checks that every combing path is a geodesic and that paths to adjacent
/// vertices are 1-fellow travelers.
pub fn verify_combing(g: &Graph, c: &Combing) -> Option<CombingViolation> {
    for v in g.vertices() {
        let p = &c.paths[v];
        let geodesic = !p.is_empty()
            && p[0] == c.root
            && *p.last().unwrap() == v
            && p.len() as u32 == g.distance(c.root, v) + 1
            && p.windows(2).all(|e| g.adjacent(e[0], e[1]));
        if !geodesic {
            return Some(CombingViolation::NotGeodesic { v });
        }
    }
    for (v, w) in g.edges() {
        let (p, q) = (&c.paths[v], &c.paths[w]);
        for t in 0..p.len().max(q.len()) {
            if g.distance(at(p, t), at(q, t)) > 1 {
                return Some(CombingViolation::Diverge { v, w, t });
            }
        }
    }
    None
}

/// Induced subgraph on the first `k` visited vertices, with the map from its
/// ids to ids of `g`.
pub fn prefix_subgraph(g: &Graph, rec: &LexBfsRecord, k: usize) -> Result<(Graph, Vec<Vertex>)> {
    if k == 0 || k > g.n() {
        return Err(Error::Precondition(format!(
            "prefix length {k} outside 1..={}",
            g.n()
        )));
    }
    let set = VertexSet::from_iter(g.n(), rec.order[..k].iter().copied());
    g.induced_subgraph(&set)
}

/// `G^k`, the 1-skeleton of the Rips complex of the clique complex.
pub fn graph_power(g: &Graph, k: u32) -> Result<Graph> {
    g.power(k)
}
