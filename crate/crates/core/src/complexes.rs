//! Flag (clique) complexes over a graph: simplices, links and cones, simple
//! descent on balls, K-sets, projections on convex sets and LC-reductions.
//!
//! Metric checks use the distance of the carrier graph and therefore require
//! the complex to be the full flag complex of its carrier.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Nonempty clique of a carrier graph, stored sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    pub fn new<I: IntoIterator<Item = Vertex>>(g: &Graph, vertices: I) -> Result<Self> {
        let mut vs: Vec<Vertex> = vertices.into_iter().collect();
        vs.sort_unstable();
        vs.dedup();
        if vs.is_empty() {
            return Err(Error::EmptySet);
        }
        for &v in &vs {
            g.check_vertex(v)?;
        }
        if !vs
            .iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.adjacent(u, v)))
        {
            return Err(Error::NotASimplex(vs));
        }
        Ok(Self(vs))
    }

    fn from_sorted(vs: Vec<Vertex>) -> Self {
        debug_assert!(vs.windows(2).all(|w| w[0] < w[1]));
        Self(vs)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn to_set(&self, n: usize) -> VertexSet {
        VertexSet::from_iter(n, self.0.iter().copied())
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

/// Calls `visit` on every clique inside `within` with at most `max_size`
/// vertices, each once, in lexicographic order.
fn for_each_clique(
    g: &Graph,
    within: &VertexSet,
    max_size: usize,
    visit: &mut dyn FnMut(&[Vertex]),
) {
    fn extend(
        g: &Graph,
        current: &mut Vec<Vertex>,
        candidates: &VertexSet,
        max_size: usize,
        visit: &mut dyn FnMut(&[Vertex]),
    ) {
        visit(current);
        if current.len() == max_size {
            return;
        }
        let last = *current.last().unwrap();
        for x in candidates.iter().filter(|&x| x > last) {
            let mut next = candidates.intersection(g.neighbor_set(x));
            next.remove(x);
            current.push(x);
            extend(g, current, &next, max_size, visit);
            current.pop();
        }
    }
    if max_size == 0 {
        return;
    }
    let mut current = Vec::new();
    for v in within.iter() {
        current.push(v);
        extend(
            g,
            &mut current,
            &within.intersection(g.neighbor_set(v)),
            max_size,
            visit,
        );
        current.pop();
    }
}

/// Which simplices of a sphere the descent check visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SdnMode {
    /// Vertices of the sphere; the descent set must be a nonempty simplex.
    VertexCondition,
    /// Edges of the sphere; the descent set must be nonempty.
    EdgeCondition,
    /// Every simplex of the sphere (up to the dimension cap); the descent set
    /// must be a nonempty simplex.
    AllSimplices,
}

/// A simplex `sigma` in `S_{i+1}(base)` whose descent set into `B_i(base)`
/// is empty or not a simplex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SdnWitness {
    pub i: u32,
    pub sigma: Vec<Vertex>,
    pub descent: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeDescentWitness {
    pub i: u32,
    pub z: Vertex,
    pub z2: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KSetWitness {
    /// `K_i` is not convex: `between` lies on a geodesic from `x` to `y`.
    NotConvex {
        i: u32,
        x: Vertex,
        y: Vertex,
        between: Vertex,
    },
    /// `v ∈ K_{i+1}` is at distance more than one from `K_i`.
    NoDescent { i: u32, v: Vertex },
}

/// One step of an LC-reduction: `removed` had a cone link with apex `apex`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LcStep {
    pub removed: Vertex,
    pub apex: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LcReduction {
    pub steps: Vec<LcStep>,
    pub remaining: Vec<Vertex>,
}

impl LcReduction {
    pub fn succeeded(&self) -> bool {
        self.remaining.len() == 1
    }
}

/// Chain of simplices violating the chain-intersection property for `y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainWitness {
    pub y: Vec<Vertex>,
    pub chain: Vec<Vec<Vertex>>,
}

/// Radius with a triple `(x, y, between)` showing the ball is not convex.
pub type BallViolation = (u32, (Vertex, Vertex, Vertex));

/// Full subcomplex of the flag complex of `carrier` spanned by `support`.
#[derive(Clone)]
pub struct FlagComplex<'g> {
    carrier: &'g Graph,
    support: VertexSet,
    dim_cap: Option<usize>,
    simplices: OnceLock<Vec<Simplex>>,
}

impl fmt::Debug for FlagComplex<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FlagComplex")
            .field("support", &self.support)
            .field("dim_cap", &self.dim_cap)
            .finish()
    }
}

impl<'g> FlagComplex<'g> {
    /// The whole flag complex of `g`, all dimensions.
    pub fn new(g: &'g Graph) -> Self {
        Self::spanned_by(g, g.full_set())
    }

    pub fn spanned_by(g: &'g Graph, support: VertexSet) -> Self {
        Self {
            carrier: g,
            support,
            dim_cap: None,
            simplices: OnceLock::new(),
        }
    }

    /// Limits [`simplices`](Self::simplices) and sphere enumerations to
    /// dimension at most `cap`.
    pub fn with_dim_cap(mut self, cap: usize) -> Self {
        self.dim_cap = Some(cap);
        self.simplices = OnceLock::new();
        self
    }

    pub fn carrier(&self) -> &'g Graph {
        self.carrier
    }

    pub fn support(&self) -> &VertexSet {
        &self.support
    }

    pub fn is_full(&self) -> bool {
        self.support.len() == self.carrier.n()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    fn max_size(&self) -> usize {
        self.dim_cap.map_or(usize::MAX, |d| d + 1)
    }

    fn require_full(&self) -> Result<()> {
        if self.is_full() {
            Ok(())
        } else {
            Err(Error::Precondition(
                "metric checks need the full flag complex of the carrier".into(),
            ))
        }
    }

    fn require_simplex(&self, s: &Simplex) -> Result<()> {
        for &v in s.vertices() {
            self.carrier.check_vertex(v)?;
        }
        let inside = s.vertices().iter().all(|&v| self.support.contains(v));
        if !inside || !self.carrier.is_clique(&s.to_set(self.carrier.n())) {
            return Err(Error::NotASimplex(s.vertices().to_vec()));
        }
        Ok(())
    }

    /// All simplices up to the dimension cap, sorted by vertex sequence.
    pub fn simplices(&self) -> &[Simplex] {
        self.simplices.get_or_init(|| {
            let mut out = Vec::new();
            for_each_clique(self.carrier, &self.support, self.max_size(), &mut |c| {
                out.push(Simplex::from_sorted(c.to_vec()))
            });
            out.sort();
            out
        })
    }

    /// Inclusion-maximal simplices (ignores the dimension cap).
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        fn bron_kerbosch(
            g: &Graph,
            r: &mut Vec<Vertex>,
            mut p: VertexSet,
            mut x: VertexSet,
            out: &mut Vec<Simplex>,
        ) {
            if p.is_empty() {
                if x.is_empty() {
                    let mut c = r.clone();
                    c.sort_unstable();
                    out.push(Simplex::from_sorted(c));
                }
                return;
            }
            let pivot = p
                .union(&x)
                .iter()
                .max_by_key(|&u| p.intersection_count(g.neighbor_set(u)))
                .unwrap();
            for v in p.difference(g.neighbor_set(pivot)).to_vec() {
                r.push(v);
                bron_kerbosch(
                    g,
                    r,
                    p.intersection(g.neighbor_set(v)),
                    x.intersection(g.neighbor_set(v)),
                    out,
                );
                r.pop();
                p.remove(v);
                x.insert(v);
            }
        }
        let mut out = Vec::new();
        if !self.support.is_empty() {
            bron_kerbosch(
                self.carrier,
                &mut Vec::new(),
                self.support.clone(),
                self.carrier.empty_set(),
                &mut out,
            );
        }
        out.sort();
        out
    }

    /// Size of the largest simplex, i.e. the clique number of the support.
    pub fn clique_number(&self) -> usize {
        self.maximal_simplices()
            .iter()
            .map(Simplex::len)
            .max()
            .unwrap_or(0)
    }

    /// Full subcomplex on the common neighbors (within the support) of all
    /// vertices of `s`.
    pub fn link(&self, s: &Simplex) -> Result<FlagComplex<'g>> {
        self.require_simplex(s)?;
        let mut common = self.support.clone();
        for &v in s.vertices() {
            common.intersect_with(self.carrier.neighbor_set(v));
        }
        let mut link = FlagComplex::spanned_by(self.carrier, common);
        link.dim_cap = self.dim_cap;
        Ok(link)
    }

    /// Lowest-id vertex adjacent to every other vertex of the support; a flag
    /// complex is a cone exactly when one exists.
    pub fn cone_apex(&self) -> Option<Vertex> {
        self.support.iter().find(|&v| {
            let mut rest = self.support.clone();
            rest.remove(v);
            rest.is_subset(self.carrier.neighbor_set(v))
        })
    }

    pub fn is_cone(&self) -> bool {
        self.cone_apex().is_some()
    }

    /// Simplices of the complex contained in `set`, up to the dimension cap.
    fn simplices_in(&self, set: &VertexSet, max_size: usize, visit: &mut dyn FnMut(&[Vertex])) {
        let within = set.intersection(&self.support);
        for_each_clique(self.carrier, &within, max_size, visit);
    }

    /// Simple descent on balls around `base`, for every radius.
    pub fn check_sdn(&self, base: &Simplex, mode: SdnMode) -> Result<Option<SdnWitness>> {
        self.require_full()?;
        self.require_simplex(base)?;
        let g = self.carrier;
        let center = base.to_set(g.n());
        let ecc = g
            .vertices()
            .filter_map(|v| g.distance_to_set(v, &center))
            .max()
            .unwrap_or(0);
        let max_size = match mode {
            SdnMode::VertexCondition => 1,
            SdnMode::EdgeCondition => 2,
            SdnMode::AllSimplices => self.max_size(),
        };
        for i in 0..ecc {
            let inner = g.ball(&center, i)?;
            let sphere = g.sphere(&center, i + 1)?;
            let mut witness = None;
            self.simplices_in(&sphere, max_size, &mut |sigma| {
                if witness.is_some() || (mode == SdnMode::EdgeCondition && sigma.len() != 2) {
                    return;
                }
                let mut descent = inner.clone();
                for &v in sigma {
                    descent.intersect_with(g.neighbor_set(v));
                }
                let ok = match mode {
                    SdnMode::EdgeCondition => !descent.is_empty(),
                    _ => !descent.is_empty() && g.is_clique(&descent),
                };
                if !ok {
                    witness = Some(SdnWitness {
                        i,
                        sigma: sigma.to_vec(),
                        descent: descent.to_vec(),
                    });
                }
            });
            if witness.is_some() {
                return Ok(witness);
            }
        }
        Ok(None)
    }

    /// [`check_sdn`](Self::check_sdn) over all simplices with every maximal
    /// simplex as base; returns the first failing base.
    pub fn check_sdn_maximal(&self) -> Result<Option<(Simplex, SdnWitness)>> {
        for base in self.maximal_simplices() {
            if let Some(w) = self.check_sdn(&base, SdnMode::AllSimplices)? {
                return Ok(Some((base, w)));
            }
        }
        Ok(None)
    }

    /// Every edge `z z2` of a sphere `S_i(s)` has a common neighbor `v` in
    /// `B_{i-1}(s)` with `d(v, w) = i - 1` for some `w ∈ s`.
    pub fn check_edge_descent(&self, s: &Simplex) -> Result<Option<EdgeDescentWitness>> {
        self.require_full()?;
        self.require_simplex(s)?;
        let g = self.carrier;
        let center = s.to_set(g.n());
        for (z, z2) in g.edges() {
            let i = g.distance_to_set(z, &center).expect("connected");
            if i == 0 || g.distance_to_set(z2, &center) != Some(i) {
                continue;
            }
            let found = g
                .neighbor_set(z)
                .intersection(g.neighbor_set(z2))
                .iter()
                .any(|v| {
                    g.distance_to_set(v, &center).is_some_and(|d| d < i)
                        && s.vertices().iter().any(|&w| g.distance(v, w) == i - 1)
                });
            if !found {
                return Ok(Some(EdgeDescentWitness { i, z, z2 }));
            }
        }
        Ok(None)
    }

    /// Radii `i >= from` (up to the eccentricity of `s`) at which `B_i(s)` is
    /// not convex, with a violating triple for each.
    pub fn nonconvex_balls(&self, s: &Simplex, from: u32) -> Result<Vec<BallViolation>> {
        self.require_full()?;
        self.require_simplex(s)?;
        let g = self.carrier;
        let center = s.to_set(g.n());
        let ecc = g
            .vertices()
            .filter_map(|v| g.distance_to_set(v, &center))
            .max()
            .unwrap_or(0);
        let mut out = Vec::new();
        for i in from..=ecc {
            if let Some(t) = g.convexity_violation(&g.ball(&center, i)?) {
                out.push((i, t));
            }
        }
        Ok(out)
    }

    /// First radius `i >= 2` at which `B_i(s)` fails to be convex.
    pub fn check_big_ball_convex(&self, s: &Simplex) -> Result<Option<BallViolation>> {
        Ok(self.nonconvex_balls(s, 2)?.into_iter().next())
    }

    /// `K_i(s)`: intersection of the radius-`i` balls around the vertices of
    /// `s`; `K_0(s) = s`.
    pub fn k_set(&self, s: &Simplex, i: u32) -> Result<VertexSet> {
        self.require_simplex(s)?;
        let g = self.carrier;
        if i == 0 {
            return Ok(s.to_set(g.n()));
        }
        let mut k = g.full_set();
        for &v in s.vertices() {
            k.intersect_with(&g.vertex_ball(v, i));
        }
        Ok(k)
    }

    /// Convexity of every `K_i(s)` and `K_{i+1}(s) ⊆ B_1(K_i(s))`, for all
    /// `i` up to the diameter.
    pub fn check_k_descent(&self, s: &Simplex) -> Result<Option<KSetWitness>> {
        self.require_full()?;
        let g = self.carrier;
        let diam = g.diameter();
        let mut current = self.k_set(s, 0)?;
        for i in 0..=diam {
            if let Some((x, y, between)) = g.convexity_violation(&current) {
                return Ok(Some(KSetWitness::NotConvex { i, x, y, between }));
            }
            let next = self.k_set(s, i + 1)?;
            let reach = g.ball(&current, 1)?;
            if let Some(v) = next.difference(&reach).first() {
                return Ok(Some(KSetWitness::NoDescent { i, v }));
            }
            current = next;
        }
        Ok(None)
    }

    fn require_convex_and_near(&self, s: &Simplex, y: &VertexSet) -> Result<()> {
        self.require_full()?;
        self.require_simplex(s)?;
        let g = self.carrier;
        if y.universe() != g.n() {
            return Err(Error::Precondition(
                "set lives over a different vertex range".into(),
            ));
        }
        if y.is_empty() {
            return Err(Error::EmptySet);
        }
        if !g.is_convex(y) {
            return Err(Error::NotConvex);
        }
        let near = g.ball(y, 1)?;
        if let Some(&v) = s.vertices().iter().find(|&&v| !near.contains(v)) {
            return Err(Error::Precondition(format!(
                "vertex {v} is farther than 1 from the convex set"
            )));
        }
        Ok(())
    }

    /// Projection of `s ⊆ S_1(y)` on the convex set `y`: the vertices of `y`
    /// adjacent to all of `s`, which must form a nonempty simplex.
    pub fn project_on_convex(&self, s: &Simplex, y: &VertexSet) -> Result<Simplex> {
        self.require_convex_and_near(s, y)?;
        if s.vertices().iter().any(|&v| y.contains(v)) {
            return Err(Error::Precondition("simplex meets the convex set".into()));
        }
        let g = self.carrier;
        let mut tau = y.clone();
        for &v in s.vertices() {
            tau.intersect_with(g.neighbor_set(v));
        }
        if tau.is_empty() {
            return Err(Error::EmptyProjection(s.vertices().to_vec()));
        }
        Simplex::new(g, tau.iter())
    }

    /// `e_Y(s)`: `s` itself when `s ⊆ y`, otherwise the join of `s ∩ S_1(y)`
    /// with its projection on `y`.
    pub fn expand_by_projection(&self, s: &Simplex, y: &VertexSet) -> Result<Simplex> {
        self.require_convex_and_near(s, y)?;
        let outside: Vec<Vertex> = s
            .vertices()
            .iter()
            .copied()
            .filter(|&v| !y.contains(v))
            .collect();
        if outside.is_empty() {
            return Ok(s.clone());
        }
        let rim = Simplex::from_sorted(outside);
        let tau = self.project_on_convex(&rim, y)?;
        Simplex::new(
            self.carrier,
            rim.vertices().iter().chain(tau.vertices()).copied(),
        )
    }

    /// For every chain `s_1 ⊊ … ⊊ s_k` (`k <= max_len`) of simplices inside
    /// `B_1(y)`, the expansions `e_Y(s_j)` share a vertex of `y`.
    pub fn check_chain_intersection(
        &self,
        y: &VertexSet,
        max_len: usize,
    ) -> Result<Option<ChainWitness>> {
        self.require_full()?;
        let g = self.carrier;
        if y.is_empty() {
            return Err(Error::EmptySet);
        }
        if !g.is_convex(y) {
            return Err(Error::NotConvex);
        }
        let near = g.ball(y, 1)?;
        let mut simplices = Vec::new();
        self.simplices_in(&near, self.max_size(), &mut |c| {
            simplices.push(Simplex::from_sorted(c.to_vec()))
        });
        let expansions: Vec<VertexSet> = simplices
            .iter()
            .map(|s| {
                self.expand_by_projection(s, y)
                    .map(|e| e.to_set(g.n()).intersection(y))
            })
            .collect::<Result<_>>()?;
        // chains grow by strict faces-to-cofaces; simplices are sorted so a
        // strict superset never precedes its face in length order
        let mut order: Vec<usize> = (0..simplices.len()).collect();
        order.sort_by_key(|&i| simplices[i].len());
        fn grow(
            chain: &mut Vec<usize>,
            common: &VertexSet,
            order: &[usize],
            simplices: &[Simplex],
            expansions: &[VertexSet],
            max_len: usize,
        ) -> Option<Vec<usize>> {
            if common.is_empty() {
                return Some(chain.clone());
            }
            if chain.len() == max_len {
                return None;
            }
            let top = &simplices[*chain.last().unwrap()];
            for &j in order {
                let s = &simplices[j];
                if s.len() > top.len() && top.is_face_of(s) {
                    chain.push(j);
                    let found = grow(
                        chain,
                        &common.intersection(&expansions[j]),
                        order,
                        simplices,
                        expansions,
                        max_len,
                    );
                    chain.pop();
                    if found.is_some() {
                        return found;
                    }
                }
            }
            None
        }
        for &i in &order {
            let mut chain = vec![i];
            if let Some(bad) = grow(
                &mut chain,
                &expansions[i],
                &order,
                &simplices,
                &expansions,
                max_len,
            ) {
                return Ok(Some(ChainWitness {
                    y: y.to_vec(),
                    chain: bad
                        .iter()
                        .map(|&j| simplices[j].vertices().to_vec())
                        .collect(),
                }));
            }
        }
        Ok(None)
    }

    /// Repeatedly removes the lowest-id vertex whose link in the current
    /// full subcomplex is a cone.
    pub fn lc_reduce(&self) -> LcReduction {
        let mut current = self.clone();
        let mut steps = Vec::new();
        while current.support.len() > 1 {
            let step = current.support.iter().find_map(|v| {
                let link = current
                    .link(&Simplex::from_sorted(vec![v]))
                    .expect("vertex of the support");
                link.cone_apex().map(|apex| LcStep { removed: v, apex })
            });
            let Some(step) = step else { break };
            let mut support = current.support.clone();
            support.remove(step.removed);
            current = FlagComplex::spanned_by(self.carrier, support);
            steps.push(step);
        }
        LcReduction {
            steps,
            remaining: current.support.to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn simplex(g: &Graph, vs: &[Vertex]) -> Simplex {
        Simplex::new(g, vs.iter().copied()).unwrap()
    }

    fn octahedron() -> Graph {
        // K_{2,2,2}: antipodal pairs {0,1}, {2,3}, {4,5}.
        let edges: Vec<_> = (0..6)
            .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
            .filter(|&(u, v)| u / 2 != v / 2)
            .collect();
        Graph::from_edges(6, &edges).unwrap()
    }

    #[test]
    fn simplex_construction() {
        let w5 = generate::wheel(5).unwrap();
        assert_eq!(simplex(&w5, &[5, 0, 1, 0]).vertices(), &[0, 1, 5]);
        assert_eq!(
            Simplex::new(&w5, [0, 2]),
            Err(Error::NotASimplex(vec![0, 2]))
        );
        assert_eq!(Simplex::new(&w5, []), Err(Error::EmptySet));
        assert!(Simplex::new(&w5, [9]).is_err());
    }

    #[test]
    fn simplices_and_maximal_simplices() {
        let w5 = generate::wheel(5).unwrap();
        let x = FlagComplex::new(&w5);
        // 6 vertices, 10 edges, 5 triangles
        assert_eq!(x.simplices().len(), 21);
        assert_eq!(x.maximal_simplices().len(), 5);
        assert_eq!(x.clique_number(), 3);
        assert_eq!(FlagComplex::new(&w5).with_dim_cap(1).simplices().len(), 16);
        let k4 = generate::complete(4);
        assert_eq!(FlagComplex::new(&k4).simplices().len(), 15);
        assert_eq!(
            FlagComplex::new(&k4).maximal_simplices(),
            vec![simplex(&k4, &[0, 1, 2, 3])]
        );
    }

    #[test]
    fn links_and_cones() {
        let w5 = generate::wheel(5).unwrap();
        let x = FlagComplex::new(&w5);
        let hub_link = x.link(&simplex(&w5, &[5])).unwrap();
        assert_eq!(hub_link.support().to_vec(), vec![0, 1, 2, 3, 4]);
        let (c, _) = w5.induced_subgraph(hub_link.support()).unwrap();
        assert_eq!(c, generate::cycle(5).unwrap());
        assert!(x.link(&simplex(&w5, &[0, 1, 5])).unwrap().is_empty());
        assert_eq!(x.cone_apex(), Some(5));
        assert!(!hub_link.is_cone());
        let oct = octahedron();
        let link = FlagComplex::new(&oct).link(&simplex(&oct, &[0])).unwrap();
        let (c4, _) = oct.induced_subgraph(link.support()).unwrap();
        assert_eq!(c4.n(), 4);
        assert!(c4.vertices().all(|v| c4.degree(v) == 2));
        let k3 = generate::complete(3);
        assert!(FlagComplex::new(&k3).is_cone());
        assert!(!FlagComplex::new(&generate::cycle(5).unwrap()).is_cone());
        assert!(x.link(&Simplex::from_sorted(vec![0, 2])).is_err());
    }

    /// Descent-set oracle straight from the definition, over all subsets.
    fn sdn_oracle(g: &Graph, base: &[Vertex], all_simplices: bool) -> bool {
        let n = g.n();
        let d = |v: Vertex| base.iter().map(|&b| g.distance(v, b)).min().unwrap();
        for mask in 1u32..(1 << n) {
            let sigma: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if !all_simplices && sigma.len() > 1 {
                continue;
            }
            let clique = sigma
                .iter()
                .all(|&a| sigma.iter().all(|&b| a == b || g.adjacent(a, b)));
            let r = d(sigma[0]);
            if !clique || r == 0 || sigma.iter().any(|&v| d(v) != r) {
                continue;
            }
            let descent: Vec<Vertex> = (0..n)
                .filter(|&w| d(w) < r && sigma.iter().all(|&v| g.adjacent(v, w)))
                .collect();
            let ok = !descent.is_empty()
                && descent
                    .iter()
                    .all(|&a| descent.iter().all(|&b| a == b || g.adjacent(a, b)));
            if !ok {
                return false;
            }
        }
        true
    }

    #[test]
    fn five_wheel_descends_from_vertices_and_triangles_but_not_edges() {
        let w5 = generate::wheel(5).unwrap();
        let x = FlagComplex::new(&w5);
        for s in x.simplices() {
            let holds = x.check_sdn(s, SdnMode::AllSimplices).unwrap().is_none();
            assert_eq!(holds, sdn_oracle(&w5, s.vertices(), true), "base {s:?}");
            match s.len() {
                1 | 3 => assert!(holds, "base {s:?}"),
                _ => {}
            }
        }
        // Base: rim edge x1 x2. The opposite rim vertex x4 sees x3, x5 and the
        // hub one step closer, and x3, x5 are not adjacent.
        let w = x
            .check_sdn(&simplex(&w5, &[0, 1]), SdnMode::AllSimplices)
            .unwrap()
            .unwrap();
        assert_eq!(
            w,
            SdnWitness {
                i: 1,
                sigma: vec![3],
                descent: vec![2, 4, 5]
            }
        );
        assert_eq!(
            x.check_sdn(&simplex(&w5, &[0, 1]), SdnMode::VertexCondition)
                .unwrap(),
            Some(w)
        );
        assert!(x
            .check_sdn(&simplex(&w5, &[0, 1]), SdnMode::EdgeCondition)
            .unwrap()
            .is_none());
        // Spokes are fine.
        assert!(x
            .check_sdn(&simplex(&w5, &[0, 5]), SdnMode::AllSimplices)
            .unwrap()
            .is_none());
        assert!(x.check_sdn_maximal().unwrap().is_none());
    }

    #[test]
    fn systolic_samples_descend_from_every_simplex() {
        for g in [
            generate::wheel(6).unwrap(),
            generate::systolic_disk(1).unwrap(),
            generate::complete(4),
        ] {
            let x = FlagComplex::new(&g);
            for s in x.simplices() {
                assert!(x.check_sdn(s, SdnMode::AllSimplices).unwrap().is_none());
                assert!(sdn_oracle(&g, s.vertices(), true));
                assert!(x.check_edge_descent(s).unwrap().is_none());
                assert!(x.check_big_ball_convex(s).unwrap().is_none());
            }
        }
    }

    #[test]
    fn failures_are_reported_not_raised() {
        let c4 = generate::cycle(4).unwrap();
        let x = FlagComplex::new(&c4);
        let (base, w) = x.check_sdn_maximal().unwrap().unwrap();
        assert_eq!(base.vertices(), &[0, 1]);
        assert_eq!(
            w,
            SdnWitness {
                i: 0,
                sigma: vec![2, 3],
                descent: vec![]
            }
        );
        let c6 = generate::cycle(6).unwrap();
        let x6 = FlagComplex::new(&c6);
        assert_eq!(x6.check_edge_descent(&simplex(&c6, &[0])).unwrap(), None);
        assert!(x6
            .check_big_ball_convex(&simplex(&c6, &[0]))
            .unwrap()
            .is_some());
    }

    #[test]
    fn unit_balls_around_edges_may_be_nonconvex() {
        // In W5 the unit ball around a rim edge misses the opposite rim
        // vertex, which lies between the two neighbors of the edge.
        let w5 = generate::wheel(5).unwrap();
        let x = FlagComplex::new(&w5);
        let bad = x.nonconvex_balls(&simplex(&w5, &[0, 1]), 1).unwrap();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].0, 1);
        for e in x.simplices().iter().filter(|s| s.len() == 2) {
            assert!(x.check_big_ball_convex(e).unwrap().is_none());
        }
    }

    #[test]
    fn k_sets() {
        let w5 = generate::wheel(5).unwrap();
        let x = FlagComplex::new(&w5);
        let e = simplex(&w5, &[0, 1]);
        assert_eq!(x.k_set(&e, 0).unwrap().to_vec(), vec![0, 1]);
        assert_eq!(x.k_set(&e, 1).unwrap().to_vec(), vec![0, 1, 5]);
        assert_eq!(x.k_set(&e, 2).unwrap(), w5.full_set());
        assert_eq!(
            x.k_set(&simplex(&w5, &[2]), 1).unwrap(),
            w5.vertex_ball(2, 1)
        );
        for s in x.simplices() {
            assert_eq!(x.check_k_descent(s).unwrap(), None);
        }
        let c6 = generate::cycle(6).unwrap();
        let x6 = FlagComplex::new(&c6);
        assert!(matches!(
            x6.check_k_descent(&simplex(&c6, &[0])).unwrap(),
            Some(KSetWitness::NotConvex { i: 2, .. })
        ));
    }

    #[test]
    fn projections() {
        let w5 = generate::wheel(5).unwrap();
        let x = FlagComplex::new(&w5);
        let hub = w5.set_of([5]).unwrap();
        let e = simplex(&w5, &[0, 1]);
        assert_eq!(x.project_on_convex(&e, &hub).unwrap().vertices(), &[5]);
        assert_eq!(
            x.expand_by_projection(&e, &hub).unwrap().vertices(),
            &[0, 1, 5]
        );
        assert_eq!(
            x.expand_by_projection(&simplex(&w5, &[5]), &hub)
                .unwrap()
                .vertices(),
            &[5]
        );
        let spoke = w5.set_of([0, 5]).unwrap();
        assert_eq!(
            x.project_on_convex(&simplex(&w5, &[1]), &spoke)
                .unwrap()
                .vertices(),
            &[0, 5]
        );
        assert_eq!(
            x.expand_by_projection(&simplex(&w5, &[1, 5]), &spoke)
                .unwrap()
                .vertices(),
            &[0, 1, 5]
        );
        assert_eq!(
            x.project_on_convex(&e, &w5.set_of([0, 2]).unwrap()),
            Err(Error::NotConvex)
        );
        assert!(x.project_on_convex(&simplex(&w5, &[0]), &spoke).is_err());
        assert!(x
            .project_on_convex(&simplex(&w5, &[3]), &w5.set_of([0]).unwrap())
            .is_err());
    }

    #[test]
    fn chain_intersection_on_small_systolic_complexes() {
        let g = generate::systolic_disk(1).unwrap();
        let x = FlagComplex::new(&g);
        for v in g.vertices() {
            for r in 0..=1 {
                let y = g.vertex_ball(v, r);
                assert_eq!(x.check_chain_intersection(&y, 4).unwrap(), None);
            }
        }
        for e in x.simplices() {
            assert_eq!(
                x.check_chain_intersection(&e.to_set(g.n()), 4).unwrap(),
                None
            );
        }
    }

    #[test]
    fn lc_reductions() {
        let w5 = generate::wheel(5).unwrap();
        let r = FlagComplex::new(&w5).lc_reduce();
        assert!(r.succeeded());
        assert_eq!(
            r.steps[0],
            LcStep {
                removed: 0,
                apex: 5
            }
        );
        let c5 = generate::cycle(5).unwrap();
        let r = FlagComplex::new(&c5).lc_reduce();
        assert!(r.steps.is_empty() && !r.succeeded());
        let k4 = generate::complete(4);
        assert!(FlagComplex::new(&k4).lc_reduce().succeeded());
    }
}
