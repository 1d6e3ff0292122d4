//! One-cop pursuit game: exact solver, strategy replay, greedy dismantling
//! and fixed cliques of endomorphisms.
//!
//! Convention: the cop chooses a start vertex, then the robber does; the cop
//! moves first; each move slides along an edge or stays; the cop wins when
//! both occupy the same vertex.

use serde::Serialize;

use crate::complexes::Simplex;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::orderings::dominates;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Turn {
    Cop,
    Robber,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GameState {
    pub cop: Vertex,
    pub robber: Vertex,
    pub turn: Turn,
}

/// Positional cop strategy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CopStrategy {
    pub start: Vertex,
    /// `moves[cop * n + robber]`: where the cop goes when it is to move;
    /// `None` on positions the strategy never needs.
    pub moves: Vec<Option<Vertex>>,
    /// Largest number of cop moves needed from `start` against any robber.
    pub capture_bound: usize,
    n: usize,
}

impl CopStrategy {
    pub fn next(&self, state: GameState) -> Option<Vertex> {
        debug_assert_eq!(state.turn, Turn::Cop);
        self.moves[state.cop * self.n + state.robber]
    }
}

/// Cop-to-move positions from which the robber can evade forever: for every
/// cop move there is a robber reply that stays inside the set, and every cop
/// start admits a robber start inside it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EscapeWitness {
    pub safe: Vec<(Vertex, Vertex)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum CopWinOutcome {
    CopWin(CopStrategy),
    RobberWin(EscapeWitness),
}

impl CopWinOutcome {
    pub fn is_cop_win(&self) -> bool {
        matches!(self, CopWinOutcome::CopWin(_))
    }
}

/// Solves the game by backward induction. `rank_cop[c][r]` is the number of
/// cop moves needed from a cop-to-move position; ranks are assigned in
/// increasing order so each is optimal.
pub fn solve_copwin(g: &Graph) -> CopWinOutcome {
    let n = g.n();
    let idx = |c: Vertex, r: Vertex| c * n + r;
    let mut rank_cop: Vec<Option<usize>> = vec![None; n * n];
    let mut rank_robber: Vec<Option<usize>> = vec![None; n * n];
    let mut moves: Vec<Option<Vertex>> = vec![None; n * n];
    for v in 0..n {
        rank_cop[idx(v, v)] = Some(0);
        rank_robber[idx(v, v)] = Some(0);
    }
    let closed: Vec<Vec<Vertex>> = g
        .vertices()
        .map(|v| g.closed_neighborhood(v).to_vec())
        .collect();
    let mut k = 1;
    loop {
        let mut fresh = Vec::new();
        for c in 0..n {
            for r in 0..n {
                if rank_cop[idx(c, r)].is_some() {
                    continue;
                }
                let winning = closed[c]
                    .iter()
                    .copied()
                    .find(|&c2| c2 == r || rank_robber[idx(c2, r)].is_some_and(|x| x < k));
                if let Some(c2) = winning {
                    fresh.push((c, r, c2));
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        for (c, r, c2) in fresh {
            rank_cop[idx(c, r)] = Some(k);
            moves[idx(c, r)] = Some(c2);
        }
        for c in 0..n {
            for r in 0..n {
                if rank_robber[idx(c, r)].is_some() {
                    continue;
                }
                let worst = closed[r]
                    .iter()
                    .filter(|&&r2| r2 != c)
                    .try_fold(0, |acc, &r2| rank_cop[idx(c, r2)].map(|x| acc.max(x)));
                rank_robber[idx(c, r)] = worst;
            }
        }
        k += 1;
    }
    let best_start = (0..n)
        .filter_map(|c| {
            (0..n)
                .try_fold(0, |acc, r| rank_cop[idx(c, r)].map(|x| acc.max(x)))
                .map(|b| (b, c))
        })
        .min();
    match best_start {
        Some((capture_bound, start)) => CopWinOutcome::CopWin(CopStrategy {
            start,
            moves,
            capture_bound,
            n,
        }),
        None => {
            let safe = (0..n)
                .flat_map(|c| (0..n).map(move |r| (c, r)))
                .filter(|&(c, r)| rank_cop[idx(c, r)].is_none())
                .collect();
            CopWinOutcome::RobberWin(EscapeWitness { safe })
        }
    }
}

/// Plays the strategy against every robber start and every robber reply,
/// returning the longest game (in cop moves). Fails if some line of play
/// leaves the strategy undefined, makes an illegal move, or loops.
pub fn replay_strategy(g: &Graph, s: &CopStrategy) -> Result<usize> {
    let n = g.n();
    if s.n != n || s.moves.len() != n * n {
        return Err(Error::Precondition(
            "strategy size does not match graph".into(),
        ));
    }
    g.check_vertex(s.start)?;
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut mark = vec![0u8; n * n];
    let mut value = vec![0usize; n * n];
    fn longest(
        g: &Graph,
        s: &CopStrategy,
        c: Vertex,
        r: Vertex,
        mark: &mut [u8],
        value: &mut [usize],
    ) -> Result<usize> {
        let n = g.n();
        let i = c * n + r;
        if c == r {
            return Ok(0);
        }
        match mark[i] {
            1 => {
                return Err(Error::CrossCheck(format!(
                    "robber evades forever from cop {c}, robber {r}"
                )))
            }
            2 => return Ok(value[i]),
            _ => {}
        }
        mark[i] = 1;
        let c2 = s.moves[i].ok_or_else(|| {
            Error::CrossCheck(format!("strategy undefined at cop {c}, robber {r}"))
        })?;
        if c2 >= n || (c2 != c && !g.adjacent(c, c2)) {
            return Err(Error::CrossCheck(format!("illegal cop move {c} -> {c2}")));
        }
        let mut worst = 1;
        if c2 != r {
            for r2 in std::iter::once(r).chain(g.neighbors(r).iter().copied()) {
                if r2 != c2 {
                    worst = worst.max(1 + longest(g, s, c2, r2, mark, value)?);
                }
            }
        }
        mark[i] = 2;
        value[i] = worst;
        Ok(worst)
    }
    let mut bound = 0;
    for r in 0..n {
        bound = bound.max(longest(g, s, s.start, r, &mut mark, &mut value)?);
    }
    if bound > s.capture_bound {
        return Err(Error::CrossCheck(format!(
            "replay needs {bound} moves, bound claims {}",
            s.capture_bound
        )));
    }
    Ok(bound)
}

/// Checks the closure property of an escape witness directly.
pub fn verify_escape(g: &Graph, w: &EscapeWitness) -> bool {
    let n = g.n();
    let mut safe = vec![false; n * n];
    for &(c, r) in &w.safe {
        if c >= n || r >= n || c == r {
            return false;
        }
        safe[c * n + r] = true;
    }
    let every_start_escapes = (0..n).all(|c| (0..n).any(|r| safe[c * n + r]));
    let closed = w.safe.iter().all(|&(c, r)| {
        g.closed_neighborhood(c).iter().all(|c2| {
            c2 != r
                && g.closed_neighborhood(r)
                    .iter()
                    .any(|r2| r2 != c2 && safe[c2 * n + r2])
        })
    });
    !w.safe.is_empty() && every_start_escapes && closed
}

/// Result of deleting dominated vertices greedily.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedyDismantling {
    /// Deleted vertices, in order.
    pub order: Vec<Vertex>,
    /// `dominators[i]` dominated `order[i]` when it was deleted.
    pub dominators: Vec<Vertex>,
    /// Vertices left when no dominated vertex remained.
    pub remaining: Vec<Vertex>,
}

impl GreedyDismantling {
    pub fn complete(&self) -> bool {
        self.remaining.len() == 1
    }

    /// Deleted vertices followed by the last survivor.
    pub fn elimination_order(&self) -> Vec<Vertex> {
        self.order.iter().chain(&self.remaining).copied().collect()
    }
}

/// Repeatedly deletes the lowest-id vertex dominated by another remaining
/// vertex.
pub fn greedy_dismantling(g: &Graph) -> GreedyDismantling {
    let mut remaining = g.full_set();
    let mut order = Vec::new();
    let mut dominators = Vec::new();
    while remaining.len() > 1 {
        let step = remaining.iter().find_map(|v| {
            g.neighbors(v)
                .iter()
                .copied()
                .find(|&w| remaining.contains(w) && dominates(g, w, v, &remaining))
                .map(|w| (v, w))
        });
        let Some((v, w)) = step else { break };
        remaining.remove(v);
        order.push(v);
        dominators.push(w);
    }
    GreedyDismantling {
        order,
        dominators,
        remaining: remaining.to_vec(),
    }
}

/// Whether greedy dismantling and the game solver agree.
pub fn crosscheck_dismantlable_copwin(g: &Graph) -> bool {
    greedy_dismantling(g).complete() == solve_copwin(g).is_cop_win()
}

/// Checks `h` maps every edge to an edge or collapses it to a vertex.
pub fn check_homomorphism(g: &Graph, h: &[Vertex]) -> Result<()> {
    if h.len() != g.n() {
        return Err(Error::Precondition(format!(
            "map has {} entries for {} vertices",
            h.len(),
            g.n()
        )));
    }
    for &x in h {
        g.check_vertex(x)?;
    }
    match g
        .edges()
        .find(|&(u, v)| h[u] != h[v] && !g.adjacent(h[u], h[v]))
    {
        Some((u, v)) => Err(Error::NotAHomomorphism(u, v)),
        None => Ok(()),
    }
}

/// A clique `C` with `h(C) = C` for an endomorphism `h` of a dismantlable
/// graph.
///
/// The images `h(V) ⊇ h²(V) ⊇ …` stabilize on a set `H` on which `h` acts
/// bijectively, and a power of `h` retracts `G` onto `G[H]`, so `G[H]` is
/// dismantlable and `h|H` is an automorphism of it. Deleting all strictly
/// dominated vertices is again a retraction commuting with `h|H`; repeating
/// until nothing is strictly dominated leaves a dismantlable graph whose only
/// dominations are between twins, i.e. a clique.
pub fn fixed_clique_of_homomorphism(g: &Graph, h: &[Vertex]) -> Result<Simplex> {
    check_homomorphism(g, h)?;
    if !greedy_dismantling(g).complete() {
        return Err(Error::NotDismantlable);
    }
    let mut current = g.full_set();
    loop {
        let image = VertexSet::from_iter(g.n(), current.iter().map(|v| h[v]));
        if image == current {
            break;
        }
        current = image;
    }
    loop {
        if g.is_clique(&current) {
            break;
        }
        let dominated: Vec<Vertex> = current
            .iter()
            .filter(|&v| {
                current
                    .iter()
                    .any(|w| strictly_dominates_within(g, w, v, &current))
            })
            .collect();
        if dominated.is_empty() {
            return Err(Error::CrossCheck(
                "retract without strict domination is not a clique".into(),
            ));
        }
        for v in dominated {
            current.remove(v);
        }
    }
    let clique = Simplex::new(g, current.iter())?;
    let image = VertexSet::from_iter(g.n(), clique.vertices().iter().map(|&v| h[v]));
    if image != current {
        return Err(Error::CrossCheck("clique is not mapped onto itself".into()));
    }
    Ok(clique)
}

/// `N[v] ∩ within ⊊ N[w] ∩ within`.
pub(crate) fn strictly_dominates_within(
    g: &Graph,
    w: Vertex,
    v: Vertex,
    within: &VertexSet,
) -> bool {
    if v == w || !g.adjacent(v, w) {
        return false;
    }
    let mut nv = g.closed_neighborhood(v);
    nv.intersect_with(within);
    let mut nw = g.closed_neighborhood(w);
    nw.intersect_with(within);
    nv.is_subset(&nw) && nv != nw
}
