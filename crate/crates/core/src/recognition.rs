//! Recognition of bridged and weakly bridged graphs through several
//! independent characterizations, cross-checked against each other.
//!
//! Every check returns the lexicographically first violating tuple (in the
//! order the tuple is reported), or `None` when the condition holds.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, DEFAULT_CYCLE_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Characterization {
    #[serde(rename = "TC")]
    TriangleCondition,
    #[serde(rename = "QC")]
    QuadrangleCondition,
    #[serde(rename = "thin")]
    Thin,
    #[serde(rename = "noC4")]
    NoInducedC4,
    #[serde(rename = "convex_balls")]
    ConvexBalls,
    #[serde(rename = "C5_in_W5")]
    C5InW5,
    #[serde(rename = "W5hat")]
    W5HatCondition,
}

impl Characterization {
    pub const ALL: [Characterization; 7] = [
        Characterization::TriangleCondition,
        Characterization::QuadrangleCondition,
        Characterization::Thin,
        Characterization::NoInducedC4,
        Characterization::ConvexBalls,
        Characterization::C5InW5,
        Characterization::W5HatCondition,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Characterization::TriangleCondition => "TC",
            Characterization::QuadrangleCondition => "QC",
            Characterization::Thin => "thin",
            Characterization::NoInducedC4 => "noC4",
            Characterization::ConvexBalls => "convex_balls",
            Characterization::C5InW5 => "C5_in_W5",
            Characterization::W5HatCondition => "W5hat",
        }
    }

    pub fn check(self, g: &Graph) -> Option<Witness> {
        match self {
            Characterization::TriangleCondition => check_triangle_condition(g),
            Characterization::QuadrangleCondition => check_quadrangle_condition(g),
            Characterization::Thin => check_thin(g),
            Characterization::NoInducedC4 => check_no_induced_c4(g),
            Characterization::ConvexBalls => check_convex_balls(g),
            Characterization::C5InW5 => check_c5_in_w5(g),
            Characterization::W5HatCondition => check_w5hat_condition(g),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Bridged,
    WeaklyBridgedNotBridged,
    NotWeaklyBridged,
}

impl Classification {
    pub fn is_weakly_bridged(self) -> bool {
        self != Classification::NotWeaklyBridged
    }

    pub fn name(self) -> &'static str {
        match self {
            Classification::Bridged => "bridged",
            Classification::WeaklyBridgedNotBridged => "weakly_bridged_not_bridged",
            Classification::NotWeaklyBridged => "not_weakly_bridged",
        }
    }
}

/// A concrete vertex tuple violating one of the conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `1 = d(v,w) < d(u,v) = d(u,w)` but no common neighbor of `v, w` is closer to `u`.
    Triangle {
        u: Vertex,
        v: Vertex,
        w: Vertex,
    },
    /// `v, w` at distance 2 with common neighbor `z` one step further from `u`,
    /// but no common neighbor of `v, w` one step closer.
    Quadrangle {
        u: Vertex,
        v: Vertex,
        w: Vertex,
        z: Vertex,
    },
    /// `a, b` are nonadjacent neighbors of `v` inside `I(u,v)`.
    Thin {
        u: Vertex,
        v: Vertex,
        a: Vertex,
        b: Vertex,
    },
    InducedC4 {
        cycle: Vec<Vertex>,
    },
    /// `between` lies in `I(x,y)` outside `B_radius(center)` while `x, y` lie inside.
    NonConvexBall {
        center: Vertex,
        radius: u32,
        x: Vertex,
        y: Vertex,
        between: Vertex,
    },
    UnwheeledC5 {
        cycle: Vec<Vertex>,
    },
    /// An extended 5-wheel with no vertex adjacent to all seven of its vertices.
    UncoveredW5Hat {
        rim: Vec<Vertex>,
        hub: Vertex,
        apex: Vertex,
    },
}

impl Witness {
    /// Vertices mentioned by the witness, for highlighting.
    pub fn vertices(&self) -> Vec<Vertex> {
        match self {
            Witness::Triangle { u, v, w } => vec![*u, *v, *w],
            Witness::Quadrangle { u, v, w, z } => vec![*u, *v, *w, *z],
            Witness::Thin { u, v, a, b } => vec![*u, *v, *a, *b],
            Witness::InducedC4 { cycle } | Witness::UnwheeledC5 { cycle } => cycle.clone(),
            Witness::NonConvexBall {
                center,
                x,
                y,
                between,
                ..
            } => vec![*center, *x, *y, *between],
            Witness::UncoveredW5Hat { rim, hub, apex } => {
                let mut vs = rim.clone();
                vs.extend([*hub, *apex]);
                vs
            }
        }
    }

    pub fn characterization(&self) -> Characterization {
        match self {
            Witness::Triangle { .. } => Characterization::TriangleCondition,
            Witness::Quadrangle { .. } => Characterization::QuadrangleCondition,
            Witness::Thin { .. } => Characterization::Thin,
            Witness::InducedC4 { .. } => Characterization::NoInducedC4,
            Witness::NonConvexBall { .. } => Characterization::ConvexBalls,
            Witness::UnwheeledC5 { .. } => Characterization::C5InW5,
            Witness::UncoveredW5Hat { .. } => Characterization::W5HatCondition,
        }
    }

    /// Re-evaluates the witness against `g` from the raw definitions; `true`
    /// iff it still falsifies its condition.
    pub fn replay(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.vertices().iter().any(|&v| v >= n) {
            return false;
        }
        let d = |a, b| g.distance(a, b);
        let common =
            |a: Vertex, b: Vertex| (0..n).filter(move |&x| g.adjacent(a, x) && g.adjacent(b, x));
        match *self {
            Witness::Triangle { u, v, w } => {
                d(v, w) == 1
                    && d(u, v) == d(u, w)
                    && d(u, v) > 1
                    && common(v, w).all(|x| d(u, x) + 1 != d(u, v))
            }
            Witness::Quadrangle { u, v, w, z } => {
                d(v, z) == 1
                    && d(w, z) == 1
                    && d(v, w) == 2
                    && d(u, v) >= 2
                    && d(u, v) == d(u, w)
                    && d(u, z) == d(u, v) + 1
                    && common(v, w).all(|x| d(u, x) + 1 != d(u, v))
            }
            Witness::Thin { u, v, a, b } => {
                d(u, v) >= 2
                    && a != b
                    && g.adjacent(v, a)
                    && g.adjacent(v, b)
                    && !g.adjacent(a, b)
                    && d(u, a) + d(a, v) == d(u, v)
                    && d(u, b) + d(b, v) == d(u, v)
            }
            Witness::InducedC4 { ref cycle } => is_induced_cycle(g, cycle, 4),
            Witness::NonConvexBall {
                center,
                radius,
                x,
                y,
                between,
            } => {
                d(center, x) <= radius
                    && d(center, y) <= radius
                    && d(center, between) > radius
                    && d(x, between) + d(between, y) == d(x, y)
            }
            Witness::UnwheeledC5 { ref cycle } => {
                is_induced_cycle(g, cycle, 5)
                    && !(0..n).any(|h| cycle.iter().all(|&c| g.adjacent(h, c)))
            }
            Witness::UncoveredW5Hat { ref rim, hub, apex } => {
                if !is_induced_cycle(g, rim, 5) || !rim.iter().all(|&r| g.adjacent(hub, r)) {
                    return false;
                }
                if apex == hub || g.adjacent(apex, hub) || rim.contains(&apex) {
                    return false;
                }
                let touched: Vec<usize> = (0..5).filter(|&i| g.adjacent(apex, rim[i])).collect();
                let pendant = touched.len() == 2
                    && (touched[1] - touched[0] == 1 || touched[1] - touched[0] == 4);
                let mut all = rim.clone();
                all.extend([hub, apex]);
                pendant && !(0..n).any(|y| all.iter().all(|&a| g.adjacent(y, a)))
            }
        }
    }
}

fn is_induced_cycle(g: &Graph, cycle: &[Vertex], k: usize) -> bool {
    if cycle.len() != k {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            if cycle[i] == cycle[j] {
                return false;
            }
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.adjacent(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

fn has_common_neighbor_closer(g: &Graph, u: Vertex, v: Vertex, w: Vertex) -> bool {
    let target = g.distance(u, v) - 1;
    g.neighbor_set(v)
        .intersection(g.neighbor_set(w))
        .iter()
        .any(|x| g.distance(u, x) == target)
}

/// Triangle condition (T).
pub fn check_triangle_condition(g: &Graph) -> Option<Witness> {
    for u in g.vertices() {
        for v in g.vertices() {
            let duv = g.distance(u, v);
            if duv < 2 {
                continue;
            }
            for &w in g.neighbors(v) {
                if g.distance(u, w) == duv && !has_common_neighbor_closer(g, u, v, w) {
                    return Some(Witness::Triangle { u, v, w });
                }
            }
        }
    }
    None
}

/// Quadrangle condition (Q).
pub fn check_quadrangle_condition(g: &Graph) -> Option<Witness> {
    for u in g.vertices() {
        for v in g.vertices() {
            let duv = g.distance(u, v);
            if duv < 2 {
                continue;
            }
            for w in g.vertices() {
                if g.distance(v, w) != 2 || g.distance(u, w) != duv {
                    continue;
                }
                let common = g.neighbor_set(v).intersection(g.neighbor_set(w));
                if common.iter().any(|x| g.distance(u, x) + 1 == duv) {
                    continue;
                }
                let z = common.iter().find(|&z| g.distance(u, z) == duv + 1);
                if let Some(z) = z {
                    return Some(Witness::Quadrangle { u, v, w, z });
                }
            }
        }
    }
    None
}

/// Thinness: for nonadjacent `u, v`, the neighbors of `v` in `I(u,v)` are
/// pairwise adjacent.
pub fn check_thin(g: &Graph) -> Option<Witness> {
    for u in g.vertices() {
        for v in g.vertices() {
            if g.distance(u, v) < 2 {
                continue;
            }
            let inside: Vec<Vertex> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&a| g.in_interval(u, a, v))
                .collect();
            for (i, &a) in inside.iter().enumerate() {
                if let Some(&b) = inside[i + 1..].iter().find(|&&b| !g.adjacent(a, b)) {
                    return Some(Witness::Thin { u, v, a, b });
                }
            }
        }
    }
    None
}

pub fn check_no_induced_c4(g: &Graph) -> Option<Witness> {
    let cycles = g
        .induced_cycles(4)
        .expect("length 4 is within the default cap");
    cycles
        .into_iter()
        .next()
        .map(|cycle| Witness::InducedC4 { cycle })
}

/// Convexity of every ball `B_r(v)`, `1 <= r <= diameter`.
pub fn check_convex_balls(g: &Graph) -> Option<Witness> {
    for v in g.vertices() {
        let ecc = g.eccentricity(v);
        for r in 1..ecc {
            let ball = g.vertex_ball(v, r);
            if let Some((x, y, between)) = g.convexity_violation(&ball) {
                return Some(Witness::NonConvexBall {
                    center: v,
                    radius: r,
                    x,
                    y,
                    between,
                });
            }
        }
    }
    None
}

fn wheel_hubs(g: &Graph, rim: &[Vertex]) -> Vec<Vertex> {
    let mut hubs = g.neighbor_set(rim[0]).clone();
    for &r in &rim[1..] {
        hubs.intersect_with(g.neighbor_set(r));
    }
    hubs.to_vec()
}

/// Every induced 5-cycle extends to a 5-wheel.
pub fn check_c5_in_w5(g: &Graph) -> Option<Witness> {
    g.induced_cycles(5)
        .expect("length 5 is within the default cap")
        .into_iter()
        .find(|c| wheel_hubs(g, c).is_empty())
        .map(|cycle| Witness::UnwheeledC5 { cycle })
}

/// Every induced extended 5-wheel has a vertex adjacent to all of its seven
/// vertices.
pub fn check_w5hat_condition(g: &Graph) -> Option<Witness> {
    for rim in g
        .induced_cycles(5)
        .expect("length 5 is within the default cap")
    {
        for hub in wheel_hubs(g, &rim) {
            let mut apexes: Vec<Vertex> = Vec::new();
            for i in 0..5 {
                let (a, b) = (rim[i], rim[(i + 1) % 5]);
                for &apex in g.neighbors(a) {
                    if apex == hub || !g.adjacent(apex, b) || g.adjacent(apex, hub) {
                        continue;
                    }
                    let others = (0..5).filter(|&j| j != i && j != (i + 1) % 5);
                    if others
                        .clone()
                        .any(|j| g.adjacent(apex, rim[j]) || rim[j] == apex)
                    {
                        continue;
                    }
                    apexes.push(apex);
                }
            }
            apexes.sort_unstable();
            for apex in apexes {
                let mut all = rim.clone();
                all.extend([hub, apex]);
                let mut covering = g.neighbor_set(all[0]).clone();
                for &a in &all[1..] {
                    covering.intersect_with(g.neighbor_set(a));
                }
                if covering.is_empty() {
                    return Some(Witness::UncoveredW5Hat {
                        rim: rim.clone(),
                        hub,
                        apex,
                    });
                }
            }
        }
    }
    None
}

/// Fast test for weak bridgedness: weakly modular without induced 4-cycles.
pub fn is_weakly_bridged(g: &Graph) -> bool {
    check_no_induced_c4(g).is_none()
        && check_triangle_condition(g).is_none()
        && check_quadrangle_condition(g).is_none()
}

/// Bridged: weakly bridged and free of induced 5-cycles (which are always
/// isometric).
pub fn is_bridged(g: &Graph) -> bool {
    is_weakly_bridged(g)
        && g.induced_cycles(5)
            .expect("length 5 is within the default cap")
            .is_empty()
}

/// The first isometric cycle of length `4..=min(2·diameter+1, cap)`, if any,
/// and whether the scan covered every possible length.
pub fn long_isometric_cycle(g: &Graph, cap: usize) -> (Option<Vec<Vertex>>, bool) {
    let limit = 2 * g.diameter() as usize + 1;
    let top = limit.min(cap);
    for k in 4..=top {
        for cycle in g
            .induced_cycles_with_cap(k, cap.max(k))
            .expect("k within cap")
        {
            let isometric = (0..k).all(|i| {
                (i + 1..k).all(|j| {
                    let along = (j - i).min(k - (j - i)) as u32;
                    g.distance(cycle[i], cycle[j]) == along
                })
            });
            if isometric {
                return (Some(cycle), true);
            }
        }
    }
    (None, limit <= cap)
}

#[derive(Debug, Clone, Serialize)]
pub struct RecognitionReport {
    pub verdicts: BTreeMap<Characterization, bool>,
    pub classification: Classification,
    pub witnesses: BTreeMap<Characterization, Witness>,
    /// An induced 5-cycle of a weakly bridged graph, certifying non-bridgedness.
    pub isometric_c5: Option<Vec<Vertex>>,
}

impl RecognitionReport {
    pub fn verdict(&self, c: Characterization) -> bool {
        self.verdicts[&c]
    }

    pub fn weakly_modular(&self) -> bool {
        self.verdict(Characterization::TriangleCondition)
            && self.verdict(Characterization::QuadrangleCondition)
    }

    /// Weakly modular and thin.
    pub fn route_thin(&self) -> bool {
        self.weakly_modular() && self.verdict(Characterization::Thin)
    }

    /// Weakly modular without induced 4-cycles.
    pub fn route_no_c4(&self) -> bool {
        self.weakly_modular() && self.verdict(Characterization::NoInducedC4)
    }

    /// Weakly modular with convex balls.
    pub fn route_convex_balls(&self) -> bool {
        self.weakly_modular() && self.verdict(Characterization::ConvexBalls)
    }

    /// Convex balls and every induced 5-cycle extends to a 5-wheel.
    pub fn route_wheels(&self) -> bool {
        self.verdict(Characterization::ConvexBalls) && self.verdict(Characterization::C5InW5)
    }
}

/// Classifies `g` as bridged, weakly bridged but not bridged, or neither.
///
/// Weak bridgedness is decided by "weakly modular without induced C4"; the
/// thin-graph, convex-ball and wheel characterizations are evaluated
/// independently and must agree, otherwise [`Error::CrossCheck`] is returned.
pub fn classify(g: &Graph) -> Result<RecognitionReport> {
    let mut verdicts = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    for c in Characterization::ALL {
        let w = c.check(g);
        verdicts.insert(c, w.is_none());
        if let Some(w) = w {
            witnesses.insert(c, w);
        }
    }
    let mut report = RecognitionReport {
        verdicts,
        classification: Classification::NotWeaklyBridged,
        witnesses,
        isometric_c5: None,
    };
    let weakly_bridged = report.route_no_c4();
    let routes = [
        ("weakly modular + thin", report.route_thin()),
        ("weakly modular + convex balls", report.route_convex_balls()),
        ("convex balls + C5 in W5", report.route_wheels()),
    ];
    for (name, verdict) in routes {
        if verdict != weakly_bridged {
            return Err(Error::CrossCheck(format!(
                "characterization '{name}' says {verdict}, 'weakly modular + no induced C4' says {weakly_bridged}"
            )));
        }
    }
    if weakly_bridged {
        if !report.verdict(Characterization::W5HatCondition) {
            return Err(Error::CrossCheck(
                "weakly bridged graph violates the W5hat condition".into(),
            ));
        }
        let c5 = g
            .induced_cycles(5)
            .expect("length 5 is within the default cap")
            .into_iter()
            .next();
        report.classification = if c5.is_some() {
            Classification::WeaklyBridgedNotBridged
        } else {
            Classification::Bridged
        };
        report.isometric_c5 = c5;
    }
    let (long_cycle, complete) = long_isometric_cycle(g, DEFAULT_CYCLE_CAP);
    let bridged = report.classification == Classification::Bridged;
    if bridged && long_cycle.is_some() {
        return Err(Error::CrossCheck(format!(
            "bridged graph has isometric cycle {long_cycle:?}"
        )));
    }
    if !bridged && complete && long_cycle.is_none() {
        return Err(Error::CrossCheck(
            "graph has no isometric cycle longer than 3 but was not classified bridged".into(),
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn g(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    /// 5-wheel (rim 0..4, hub 5) plus apex 6 on rim edge 0-1.
    fn w5hat() -> Graph {
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, 5)));
        edges.extend([(6, 0), (6, 1)]);
        g(7, &edges)
    }

    /// Triangle-condition oracle straight from the definition over all triples.
    fn tc_oracle(g: &Graph) -> bool {
        let n = g.n();
        (0..n).all(|u| {
            (0..n).all(|v| {
                (0..n).all(|w| {
                    let d = |a, b| g.distance(a, b);
                    !(d(v, w) == 1 && d(u, v) == d(u, w) && d(u, v) > 1)
                        || (0..n).any(|x| d(v, x) == 1 && d(w, x) == 1 && d(u, x) + 1 == d(u, v))
                })
            })
        })
    }

    #[test]
    fn triangle_condition() {
        assert!(check_triangle_condition(&generate::complete(5)).is_none());
        // In a hubless C5 the edge 2-3 sits at distance 2 from 0 with no
        // common neighbor one step closer.
        let c5 = generate::cycle(5).unwrap();
        assert!(!tc_oracle(&c5));
        let w = check_triangle_condition(&c5).unwrap();
        assert_eq!(w, Witness::Triangle { u: 0, v: 2, w: 3 });
        assert!(w.replay(&c5));
        let w5 = generate::wheel(5).unwrap();
        assert!(tc_oracle(&w5));
        assert!(check_triangle_condition(&w5).is_none());
        // C6 is bipartite: adjacent vertices never sit at equal distance from
        // a third, so (T) holds vacuously. The antipodal failure is a (Q) one.
        let c6 = generate::cycle(6).unwrap();
        assert!(tc_oracle(&c6));
        assert!(check_triangle_condition(&c6).is_none());
        let w = check_quadrangle_condition(&c6).unwrap();
        assert_eq!(
            w,
            Witness::Quadrangle {
                u: 0,
                v: 2,
                w: 4,
                z: 3
            }
        );
        assert!(w.replay(&c6));
        let fan = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]);
        assert!(tc_oracle(&fan));
        let k13 = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(tc_oracle(&k13), check_triangle_condition(&k13).is_none());
    }

    #[test]
    fn quadrangle_condition() {
        let tree = g(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]);
        assert!(check_quadrangle_condition(&tree).is_none());
        // K2,3 has diameter 2, so no z lies one step beyond v and w: (Q)
        // holds and the graph is rejected by thinness instead.
        let k23 = g(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert!(check_quadrangle_condition(&k23).is_none());
        assert!(check_thin(&k23).is_some());
        let w = check_quadrangle_condition(&generate::cycle(6).unwrap()).unwrap();
        assert!(w.replay(&generate::cycle(6).unwrap()));
        assert!(check_quadrangle_condition(&generate::complete(4)).is_none());
    }

    #[test]
    fn thinness() {
        let c4 = generate::cycle(4).unwrap();
        assert_eq!(
            check_thin(&c4),
            Some(Witness::Thin {
                u: 0,
                v: 2,
                a: 1,
                b: 3
            })
        );
        assert!(check_thin(&generate::cycle(5).unwrap()).is_none());
        assert!(check_thin(&generate::complete(6)).is_none());
    }

    #[test]
    fn convex_balls() {
        assert!(check_convex_balls(&generate::cycle(5).unwrap()).is_none());
        let c6 = generate::cycle(6).unwrap();
        let w = check_convex_balls(&c6).unwrap();
        assert_eq!(
            w,
            Witness::NonConvexBall {
                center: 0,
                radius: 2,
                x: 1,
                y: 4,
                between: 3
            }
        );
        assert!(w.replay(&c6));
        assert!(check_convex_balls(&generate::complete(4)).is_none());
    }

    #[test]
    fn c5_in_w5() {
        assert!(check_c5_in_w5(&generate::wheel(5).unwrap()).is_none());
        assert_eq!(
            check_c5_in_w5(&generate::cycle(5).unwrap()),
            Some(Witness::UnwheeledC5 {
                cycle: vec![0, 1, 2, 3, 4]
            })
        );
        assert!(check_c5_in_w5(&generate::wheel(6).unwrap()).is_none());
    }

    #[test]
    fn w5hat_condition() {
        assert!(check_w5hat_condition(&generate::wheel(6).unwrap()).is_none());
        let hat = w5hat();
        let w = check_w5hat_condition(&hat).unwrap();
        assert_eq!(
            w,
            Witness::UncoveredW5Hat {
                rim: vec![0, 1, 2, 3, 4],
                hub: 5,
                apex: 6
            }
        );
        assert!(w.replay(&hat));
        let mut edges: Vec<_> = hat.edges().collect();
        edges.extend((0..7).map(|v| (v, 7)));
        assert!(check_w5hat_condition(&g(8, &edges)).is_none());
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify(&generate::wheel(6).unwrap())
                .unwrap()
                .classification,
            Classification::Bridged
        );
        let w5 = classify(&generate::wheel(5).unwrap()).unwrap();
        assert_eq!(w5.classification, Classification::WeaklyBridgedNotBridged);
        assert_eq!(w5.isometric_c5, Some(vec![0, 1, 2, 3, 4]));
        let c4 = classify(&generate::cycle(4).unwrap()).unwrap();
        assert_eq!(c4.classification, Classification::NotWeaklyBridged);
        assert!(!c4.verdict(Characterization::Thin));
        for w in c4.witnesses.values() {
            assert!(w.replay(&generate::cycle(4).unwrap()));
        }
        assert_eq!(
            classify(&generate::complete(1)).unwrap().classification,
            Classification::Bridged
        );
    }

    #[test]
    fn replay_rejects_non_witnesses() {
        let w5 = generate::wheel(5).unwrap();
        assert!(!Witness::Thin {
            u: 0,
            v: 2,
            a: 1,
            b: 5
        }
        .replay(&w5));
        assert!(!Witness::InducedC4 {
            cycle: vec![0, 1, 2, 3]
        }
        .replay(&w5));
        assert!(!Witness::UnwheeledC5 {
            cycle: vec![0, 1, 2, 3, 4]
        }
        .replay(&w5));
        assert!(!Witness::Triangle { u: 0, v: 9, w: 1 }.replay(&w5));
    }
}
