//! Finite groups of graph automorphisms, invariant simplices for their
//! actions on weakly systolic complexes, and roundness audits of systolic
//! complexes.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::complexes::{FlagComplex, Simplex};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::recognition;

/// Default bound on the carrier size for automorphism search.
pub const AUTOMORPHISM_VERTEX_GUARD: usize = 64;

/// Largest group [`PermGroup`] will materialize.
pub const MAX_GROUP_ORDER: usize = 100_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<Vertex>);

impl Permutation {
    pub fn new(images: Vec<Vertex>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation);
            }
        }
        Ok(Self(images))
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.0[v]
    }

    pub fn images(&self) -> &[Vertex] {
        &self.0
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (v, &x) in self.0.iter().enumerate() {
            inv[x] = v;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(v, &x)| v == x)
    }

    pub fn is_automorphism(&self, g: &Graph) -> bool {
        self.0.len() == g.n() && g.edges().all(|(u, v)| g.adjacent(self.0[u], self.0[v]))
    }

    pub fn image_of(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_iter(set.universe(), set.iter().map(|v| self.0[v]))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

/// A group of automorphisms of a graph, with all elements materialized.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PermGroup {
    n: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PermGroup {
    /// Closure of `generators` under composition. Every generator must be an
    /// automorphism of `g`.
    pub fn generate(g: &Graph, generators: Vec<Permutation>) -> Result<Self> {
        for p in &generators {
            if p.len() != g.n() {
                return Err(Error::NotAPermutation);
            }
            if !p.is_automorphism(g) {
                return Err(Error::NotAnAutomorphism);
            }
        }
        let elements = closure(g.n(), &generators)?;
        Ok(Self {
            n: g.n(),
            generators,
            elements,
        })
    }

    pub fn trivial(n: usize) -> Self {
        Self {
            n,
            generators: Vec::new(),
            elements: vec![Permutation::identity(n)],
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements, sorted; the identity comes first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn orbit(&self, v: Vertex) -> VertexSet {
        VertexSet::from_iter(self.n, self.elements.iter().map(|p| p.apply(v)))
    }

    /// Orbits as sorted vertex lists, ordered by smallest member.
    pub fn orbits(&self) -> Vec<Vec<Vertex>> {
        let mut seen = VertexSet::new(self.n);
        let mut out = Vec::new();
        for v in 0..self.n {
            if !seen.contains(v) {
                let o = self.orbit(v);
                seen.union_with(&o);
                out.push(o.to_vec());
            }
        }
        out
    }

    /// Whether every element maps `set` onto itself.
    pub fn fixes_setwise(&self, set: &VertexSet) -> bool {
        self.generators
            .iter()
            .chain(self.elements.iter().take(1))
            .all(|p| p.image_of(set) == *set)
    }

    pub fn acts_on(&self, g: &Graph) -> bool {
        self.n == g.n() && self.generators.iter().all(|p| p.is_automorphism(g))
    }
}

fn closure(n: usize, generators: &[Permutation]) -> Result<Vec<Permutation>> {
    let mut found: BTreeSet<Permutation> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let id = Permutation::identity(n);
    found.insert(id.clone());
    queue.push_back(id);
    while let Some(p) = queue.pop_front() {
        for s in generators {
            let q = s.compose(&p);
            if found.insert(q.clone()) {
                if found.len() > MAX_GROUP_ORDER {
                    return Err(Error::TooLarge(format!(
                        "group has more than {MAX_GROUP_ORDER} elements"
                    )));
                }
                queue.push_back(q);
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// All automorphisms of `g` by backtracking, vertices assigned in BFS order
/// from vertex 0; a candidate image must have the same degree and distance
/// profile and preserve distances to everything already assigned.
pub fn automorphism_list(g: &Graph, vertex_guard: usize) -> Result<Vec<Permutation>> {
    let n = g.n();
    if n > vertex_guard {
        return Err(Error::TooLarge(format!(
            "automorphism search limited to {vertex_guard} vertices"
        )));
    }
    let profile: Vec<Vec<u32>> = g
        .vertices()
        .map(|v| {
            let mut p: Vec<u32> = g.vertices().map(|w| g.distance(v, w)).collect();
            p.sort_unstable();
            p.push(g.degree(v) as u32);
            p
        })
        .collect();
    let mut order: Vec<Vertex> = Vec::with_capacity(n);
    let mut seen = g.empty_set();
    seen.insert(0);
    order.push(0);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in g.neighbors(v) {
            if seen.insert(w) {
                order.push(w);
            }
        }
    }
    struct Search<'a> {
        g: &'a Graph,
        profile: &'a [Vec<u32>],
        order: &'a [Vertex],
        image: Vec<Option<Vertex>>,
        used: Vec<bool>,
        out: Vec<Permutation>,
    }
    impl Search<'_> {
        fn run(&mut self, k: usize) -> Result<()> {
            if k == self.order.len() {
                let p = Permutation(self.image.iter().map(|x| x.expect("assigned")).collect());
                self.out.push(p);
                if self.out.len() > MAX_GROUP_ORDER {
                    return Err(Error::TooLarge(format!(
                        "more than {MAX_GROUP_ORDER} automorphisms"
                    )));
                }
                return Ok(());
            }
            let v = self.order[k];
            for w in self.g.vertices() {
                if self.used[w] || self.profile[v] != self.profile[w] {
                    continue;
                }
                let consistent = self.order[..k]
                    .iter()
                    .all(|&u| self.g.distance(u, v) == self.g.distance(self.image[u].unwrap(), w));
                if !consistent {
                    continue;
                }
                self.image[v] = Some(w);
                self.used[w] = true;
                self.run(k + 1)?;
                self.used[w] = false;
                self.image[v] = None;
            }
            Ok(())
        }
    }
    let mut search = Search {
        g,
        profile: &profile,
        order: &order,
        image: vec![None; n],
        used: vec![false; n],
        out: Vec::new(),
    };
    search.run(0)?;
    let mut out = search.out;
    out.sort();
    Ok(out)
}

/// The full automorphism group of `g` (at most
/// [`AUTOMORPHISM_VERTEX_GUARD`] vertices).
pub fn automorphisms(g: &Graph) -> Result<PermGroup> {
    let elements = automorphism_list(g, AUTOMORPHISM_VERTEX_GUARD)?;
    // A small generating set: add elements until they generate everything.
    let mut generators: Vec<Permutation> = Vec::new();
    let mut span: BTreeSet<Permutation> = BTreeSet::from([Permutation::identity(g.n())]);
    for p in &elements {
        if span.len() == elements.len() {
            break;
        }
        if !span.contains(p) {
            generators.push(p.clone());
            span = closure(g.n(), &generators)?.into_iter().collect();
        }
    }
    Ok(PermGroup {
        n: g.n(),
        generators,
        elements,
    })
}

/// All ordered pairs `(v, w)` with `B_1(v) ⊊ B_1(w)`.
pub fn strictly_dominated(g: &Graph) -> Vec<(Vertex, Vertex)> {
    strictly_dominated_within(g, &g.full_set())
}

fn strictly_dominated_within(g: &Graph, within: &VertexSet) -> Vec<(Vertex, Vertex)> {
    let balls: Vec<VertexSet> = g
        .vertices()
        .map(|v| {
            let mut b = g.closed_neighborhood(v);
            b.intersect_with(within);
            b
        })
        .collect();
    let mut out = Vec::new();
    for v in within.iter() {
        for w in g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| within.contains(w))
        {
            if balls[v].is_subset(&balls[w]) && balls[v] != balls[w] {
                out.push((v, w));
            }
        }
    }
    out
}

/// Strictly dominated vertices of `G[within]` whose 1-ball is minimal under
/// strict inclusion.
fn minimal_strictly_dominated(g: &Graph, within: &VertexSet) -> VertexSet {
    let pairs = strictly_dominated_within(g, within);
    let mut dominated = g.empty_set();
    let mut has_smaller = g.empty_set();
    for &(v, w) in &pairs {
        dominated.insert(v);
        has_smaller.insert(w);
    }
    dominated.difference(&has_smaller)
}

/// Trace of the invariant-simplex construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantCertificate {
    pub seed: Vertex,
    pub orbit: Vec<Vertex>,
    pub hull: Vec<Vertex>,
    /// Vertices removed in each round.
    pub rounds: Vec<Vec<Vertex>>,
    pub simplex: Simplex,
}

fn check_group(g: &Graph, grp: &PermGroup) -> Result<()> {
    if grp.degree() != g.n() || !grp.elements().iter().all(|p| p.is_automorphism(g)) {
        return Err(Error::NotAnAutomorphism);
    }
    Ok(())
}

/// A simplex fixed setwise by `grp`: start from the convex hull of the
/// orbit of `seed` and repeatedly delete the minimal strictly dominated
/// vertices (a union of orbits) until a simplex remains. Every intermediate
/// vertex set is re-checked to induce a weakly bridged graph.
pub fn invariant_simplex(
    x: &FlagComplex<'_>,
    grp: &PermGroup,
    seed: Vertex,
) -> Result<InvariantCertificate> {
    if !x.is_full() {
        return Err(Error::Precondition(
            "invariant simplex needs the full flag complex".into(),
        ));
    }
    let g = x.carrier();
    g.check_vertex(seed)?;
    check_group(g, grp)?;
    if !recognition::is_weakly_bridged(g) {
        return Err(Error::NotWeaklyBridged);
    }
    let orbit = grp.orbit(seed);
    let hull = g.convex_hull(&orbit)?;
    let mut current = hull.clone();
    let mut rounds = Vec::new();
    while !g.is_clique(&current) {
        let s = minimal_strictly_dominated(g, &current);
        if s.is_empty() {
            return Err(Error::CrossCheck(
                "no strictly dominated vertex in a non-simplex".into(),
            ));
        }
        if !grp.fixes_setwise(&s) {
            return Err(Error::CrossCheck(
                "removed set is not a union of orbits".into(),
            ));
        }
        current.difference_with(&s);
        let (sub, _) = g.induced_subgraph(&current).map_err(|e| {
            Error::CrossCheck(format!("removal round left an invalid subgraph: {e}"))
        })?;
        if !recognition::is_weakly_bridged(&sub) {
            return Err(Error::CrossCheck(
                "removal round left a graph that is not weakly bridged".into(),
            ));
        }
        rounds.push(s.to_vec());
    }
    let simplex = Simplex::new(g, current.iter())?;
    if !grp.fixes_setwise(&current) {
        return Err(Error::CrossCheck("final simplex is not invariant".into()));
    }
    Ok(InvariantCertificate {
        seed,
        orbit: orbit.to_vec(),
        hull: hull.to_vec(),
        rounds,
        simplex,
    })
}

impl InvariantCertificate {
    /// Re-derives orbit, hull and every round from scratch and checks the
    /// final simplex is fixed by every group element.
    pub fn replay(&self, g: &Graph, grp: &PermGroup) -> Result<()> {
        check_group(g, grp)?;
        let orbit = grp.orbit(self.seed);
        if orbit.to_vec() != self.orbit {
            return Err(Error::CrossCheck("orbit differs".into()));
        }
        let mut current = g.convex_hull(&orbit)?;
        if current.to_vec() != self.hull {
            return Err(Error::CrossCheck("hull differs".into()));
        }
        for (i, round) in self.rounds.iter().enumerate() {
            if minimal_strictly_dominated(g, &current).to_vec() != *round {
                return Err(Error::CrossCheck(format!("round {i} differs")));
            }
            current.difference_with(&g.set_of(round.iter().copied())?);
        }
        if current.to_vec() != self.simplex.vertices() || !g.is_clique(&current) {
            return Err(Error::CrossCheck(
                "rounds do not end at the certified simplex".into(),
            ));
        }
        if !grp
            .elements()
            .iter()
            .all(|p| p.image_of(&current) == current)
        {
            return Err(Error::CrossCheck(
                "simplex is not fixed by every element".into(),
            ));
        }
        Ok(())
    }
}

/// Minimal `grp`-invariant vertex sets containing `required` that induce an
/// isometric subgraph of the given family, by brute force over unions of
/// orbits (at most 20 orbits).
pub fn minimal_invariant_isometric_supersets(
    g: &Graph,
    grp: &PermGroup,
    required: &VertexSet,
    admits: &dyn Fn(&Graph) -> bool,
) -> Result<Vec<Vec<Vertex>>> {
    check_group(g, grp)?;
    let orbits = grp.orbits();
    let forced: Vec<usize> = (0..orbits.len())
        .filter(|&i| orbits[i].iter().any(|&v| required.contains(v)))
        .collect();
    let free: Vec<usize> = (0..orbits.len()).filter(|i| !forced.contains(i)).collect();
    if free.len() > 20 {
        return Err(Error::TooLarge("more than 20 optional orbits".into()));
    }
    let mut good: Vec<VertexSet> = Vec::new();
    // subsets in order of size so that any smaller good set is seen first
    let mut masks: Vec<u32> = (0..1u32 << free.len()).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        let mut set = g.empty_set();
        for &i in forced.iter().chain(
            free.iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, i)| i),
        ) {
            set.union_with(&VertexSet::from_iter(g.n(), orbits[i].iter().copied()));
        }
        if good.iter().any(|s| s.is_subset(&set)) || !g.is_isometric_subset(&set) {
            continue;
        }
        let (sub, _) = g.induced_subgraph(&set)?;
        if admits(&sub) {
            good.push(set);
        }
    }
    Ok(good.into_iter().map(|s| s.to_vec()).collect())
}

/// Diameter, radius and roundness of a systolic complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundnessReport {
    pub diameter: u32,
    pub radius: u32,
    /// `⋂ B_{k-1}(v)` over all vertices, `k` the diameter.
    pub intersection: Vec<Vertex>,
    pub round: bool,
    /// `3·rad <= 2·diam + 2`.
    pub farber_holds: bool,
}

/// Roundness audit of the flag complex of a bridged graph; fails with
/// [`Error::CrossCheck`] if Farber's inequality fails or a round complex has
/// diameter above 2.
pub fn roundness_audit(x: &FlagComplex<'_>) -> Result<RoundnessReport> {
    if !x.is_full() {
        return Err(Error::Precondition(
            "roundness audit needs the full flag complex".into(),
        ));
    }
    let g = x.carrier();
    if !recognition::is_bridged(g) {
        return Err(Error::NotBridged);
    }
    let diameter = g.diameter();
    let radius = g.radius();
    let mut intersection = g.full_set();
    if diameter == 0 {
        intersection = g.empty_set();
    } else {
        for v in g.vertices() {
            intersection.intersect_with(&g.vertex_ball(v, diameter - 1));
        }
    }
    let round = intersection.is_empty();
    let report = RoundnessReport {
        diameter,
        radius,
        intersection: intersection.to_vec(),
        round,
        farber_holds: 3 * radius <= 2 * diameter + 2,
    };
    if !report.farber_holds {
        return Err(Error::CrossCheck(format!("3·{radius} > 2·{diameter} + 2")));
    }
    if round && diameter > 2 {
        return Err(Error::CrossCheck(format!(
            "round systolic complex of diameter {diameter}"
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn brute_automorphisms(g: &Graph) -> usize {
        fn go(g: &Graph, p: &mut Vec<Vertex>, k: usize, count: &mut usize) {
            if k == p.len() {
                if g.edges().all(|(u, v)| g.adjacent(p[u], p[v])) {
                    *count += 1;
                }
                return;
            }
            for i in k..p.len() {
                p.swap(k, i);
                go(g, p, k + 1, count);
                p.swap(k, i);
            }
        }
        let mut p: Vec<Vertex> = g.vertices().collect();
        let mut count = 0;
        go(g, &mut p, 0, &mut count);
        count
    }

    #[test]
    fn permutations() {
        let p = Permutation::new(vec![1, 2, 0]).unwrap();
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(3));
        assert_eq!(p.compose(&p).images(), &[2, 0, 1]);
        assert_eq!(Permutation::new(vec![0, 0, 1]), Err(Error::NotAPermutation));
        assert_eq!(Permutation::new(vec![0, 3, 1]), Err(Error::NotAPermutation));
    }

    #[test]
    fn automorphism_groups() {
        assert_eq!(automorphisms(&generate::complete(5)).unwrap().order(), 120);
        assert_eq!(
            automorphisms(&generate::cycle(5).unwrap()).unwrap().order(),
            10
        );
        let w5 = generate::wheel(5).unwrap();
        let aut = automorphisms(&w5).unwrap();
        assert_eq!(aut.order(), 10);
        assert!(aut.elements().iter().all(|p| p.apply(5) == 5));
        assert!(aut.elements()[0].is_identity());
        assert_eq!(
            PermGroup::generate(&w5, aut.generators().to_vec())
                .unwrap()
                .elements(),
            aut.elements()
        );
        for g in [
            w5,
            generate::systolic_disk(1).unwrap(),
            generate::path(5).unwrap(),
            generate::extended_five_wheel(),
        ] {
            assert_eq!(automorphisms(&g).unwrap().order(), brute_automorphisms(&g));
        }
        assert_eq!(
            automorphisms(&generate::systolic_disk(2).unwrap())
                .unwrap()
                .order(),
            12
        );
        assert!(automorphisms(&generate::path(65).unwrap()).is_err());
    }

    #[test]
    fn group_generation_guards() {
        let c5 = generate::cycle(5).unwrap();
        let rot = Permutation::new(vec![1, 2, 3, 4, 0]).unwrap();
        let grp = PermGroup::generate(&c5, vec![rot]).unwrap();
        assert_eq!(grp.order(), 5);
        assert_eq!(grp.orbits(), vec![vec![0, 1, 2, 3, 4]]);
        let bad = Permutation::new(vec![0, 2, 1, 3, 4]).unwrap();
        assert_eq!(
            PermGroup::generate(&c5, vec![bad]),
            Err(Error::NotAnAutomorphism)
        );
    }

    #[test]
    fn strict_domination() {
        assert!(strictly_dominated(&generate::complete(4)).is_empty());
        assert!(strictly_dominated(&generate::cycle(5).unwrap()).is_empty());
        let w5 = generate::wheel(5).unwrap();
        assert_eq!(
            strictly_dominated(&w5),
            (0..5).map(|v| (v, 5)).collect::<Vec<_>>()
        );
    }

    fn rotation_group(w: &Graph, k: usize) -> PermGroup {
        let mut images: Vec<Vertex> = (0..k).map(|i| (i + 1) % k).collect();
        images.push(k);
        PermGroup::generate(w, vec![Permutation::new(images).unwrap()]).unwrap()
    }

    #[test]
    fn five_wheel_rotations_fix_the_hub() {
        let w5 = generate::wheel(5).unwrap();
        let x = FlagComplex::new(&w5);
        let grp = rotation_group(&w5, 5);
        let cert = invariant_simplex(&x, &grp, 0).unwrap();
        assert_eq!(cert.simplex.vertices(), &[5]);
        assert_eq!(cert.rounds, vec![vec![0, 1, 2, 3, 4]]);
        cert.replay(&w5, &grp).unwrap();
        let mut forged = cert.clone();
        forged.simplex = Simplex::new(&w5, [0, 5]).unwrap();
        assert!(forged.replay(&w5, &grp).is_err());
    }

    #[test]
    fn trivial_cases() {
        let k4 = generate::complete(4);
        let x = FlagComplex::new(&k4);
        let cert = invariant_simplex(&x, &automorphisms(&k4).unwrap(), 2).unwrap();
        assert_eq!(cert.simplex.vertices(), &[0, 1, 2, 3]);
        assert!(cert.rounds.is_empty());
        let w6 = generate::wheel(6).unwrap();
        let cert = invariant_simplex(&FlagComplex::new(&w6), &PermGroup::trivial(7), 3).unwrap();
        assert_eq!(cert.simplex.vertices(), &[3]);
        assert!(cert.rounds.is_empty());
        let c5 = generate::cycle(5).unwrap();
        assert_eq!(
            invariant_simplex(&FlagComplex::new(&c5), &PermGroup::trivial(5), 0),
            Err(Error::NotWeaklyBridged)
        );
    }

    #[test]
    fn final_simplex_need_not_be_a_minimal_invariant_subcomplex() {
        // Reflection of W5 fixing rim vertex 0. Seeded at 1, the orbit {1,4}
        // has hull {0,1,4,5}; one round deletes 1 and 4 and leaves the edge
        // {0,5}, although {0} and {5} are invariant on their own.
        let w5 = generate::wheel(5).unwrap();
        let reflection = Permutation::new(vec![0, 4, 3, 2, 1, 5]).unwrap();
        let grp = PermGroup::generate(&w5, vec![reflection]).unwrap();
        let cert = invariant_simplex(&FlagComplex::new(&w5), &grp, 1).unwrap();
        assert_eq!(cert.hull, vec![0, 1, 4, 5]);
        assert_eq!(cert.simplex.vertices(), &[0, 5]);
        assert!(grp.fixes_setwise(&w5.set_of([0]).unwrap()));
        cert.replay(&w5, &grp).unwrap();
    }

    #[test]
    fn minimal_invariant_isometric_supersets_by_brute_force() {
        let w6 = generate::wheel(6).unwrap();
        let grp = rotation_group(&w6, 6);
        let rim = w6.set_of(0..6).unwrap();
        let found =
            minimal_invariant_isometric_supersets(&w6, &grp, &rim, &recognition::is_bridged)
                .unwrap();
        assert_eq!(found, vec![(0..7).collect::<Vec<_>>()]);
        let hub = w6.set_of([6]).unwrap();
        let found =
            minimal_invariant_isometric_supersets(&w6, &grp, &hub, &recognition::is_bridged)
                .unwrap();
        assert_eq!(found, vec![vec![6]]);
    }

    #[test]
    fn roundness() {
        let k4 = generate::complete(4);
        let r = roundness_audit(&FlagComplex::new(&k4)).unwrap();
        assert!(r.round);
        assert_eq!((r.diameter, r.radius), (1, 1));
        let w6 = generate::wheel(6).unwrap();
        let r = roundness_audit(&FlagComplex::new(&w6)).unwrap();
        assert!(!r.round);
        assert_eq!(r.intersection, vec![6]);
        assert_eq!((r.diameter, r.radius), (2, 1));
        assert!(
            roundness_audit(&FlagComplex::new(&generate::complete(1)))
                .unwrap()
                .round
        );
        let w5 = generate::wheel(5).unwrap();
        assert_eq!(
            roundness_audit(&FlagComplex::new(&w5)),
            Err(Error::NotBridged)
        );
        let disk = generate::systolic_disk(3).unwrap();
        let r = roundness_audit(&FlagComplex::new(&disk)).unwrap();
        assert_eq!((r.diameter, r.radius, r.round), (6, 3, false));
    }
}
