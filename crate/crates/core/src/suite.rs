//! Named verification sweeps over exhaustive enumerations, curated families
//! and seeded random samples. Every sweep fans out over a rayon pool and
//! merges results in input order, so reports are deterministic for a fixed
//! budget.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::complexes::{FlagComplex, SdnMode, SdnWitness, Simplex};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::games::{self, CopWinOutcome};
use crate::generate::{self, GrowthTarget};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::orderings::{self, TieBreak};
use crate::recognition::{self, Characterization, Classification};
use crate::symmetry::{self, PermGroup, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteName {
    Equivalences,
    LexbfsDismantle,
    BfsCounterexample,
    CopwinCrosscheck,
    RipsPower,
    IsometricPrefixes,
    Combing,
    Sdn,
    KLadder,
    Fixpoint,
    Roundness,
    /// Reports how often plain BFS orders dismantle; never fails.
    BfsSweep,
}

impl SuiteName {
    pub const ALL: [SuiteName; 12] = [
        SuiteName::Equivalences,
        SuiteName::LexbfsDismantle,
        SuiteName::BfsCounterexample,
        SuiteName::CopwinCrosscheck,
        SuiteName::RipsPower,
        SuiteName::IsometricPrefixes,
        SuiteName::Combing,
        SuiteName::Sdn,
        SuiteName::KLadder,
        SuiteName::Fixpoint,
        SuiteName::Roundness,
        SuiteName::BfsSweep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteName::Equivalences => "equivalences",
            SuiteName::LexbfsDismantle => "lexbfs_dismantle",
            SuiteName::BfsCounterexample => "bfs_counterexample",
            SuiteName::CopwinCrosscheck => "copwin_crosscheck",
            SuiteName::RipsPower => "rips_power",
            SuiteName::IsometricPrefixes => "isometric_prefixes",
            SuiteName::Combing => "combing",
            SuiteName::Sdn => "sdn",
            SuiteName::KLadder => "k_ladder",
            SuiteName::Fixpoint => "fixpoint",
            SuiteName::Roundness => "roundness",
            SuiteName::BfsSweep => "bfs_sweep",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteName::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite '{s}'")))
    }
}

/// Sizes of the sweeps. The defaults are the full acceptance budget.
#[derive(Debug, Clone, Serialize)]
pub struct Budget {
    /// Exhaustive enumeration bound for the recognition and cop-win sweeps.
    pub exhaustive_n: usize,
    /// Exhaustive enumeration bound for the roundness sweep.
    pub roundness_n: usize,
    /// Random connected graphs for the recognition sweep.
    pub random_graphs: usize,
    pub random_min_n: usize,
    pub random_max_n: usize,
    /// Grown weakly bridged samples for the LexBFS, cop-win and combing sweeps.
    pub samples: usize,
    pub sample_max_n: usize,
    /// Samples for the power and prefix sweeps.
    pub small_samples: usize,
    /// Samples for the K-set sweep.
    pub k_samples: usize,
    /// Largest complex on which chains of simplices are enumerated.
    pub chain_max_n: usize,
    pub chain_max_len: usize,
    /// Random graphs with nontrivial symmetry for the fixed-point sweep.
    pub symmetric_samples: usize,
    pub seed: u64,
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
    /// Dimension cap for simplex enumeration in the complex sweeps.
    pub dim_cap: Option<usize>,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            exhaustive_n: 7,
            roundness_n: 8,
            random_graphs: 10_000,
            random_min_n: 8,
            random_max_n: 12,
            samples: 1000,
            sample_max_n: 30,
            small_samples: 200,
            k_samples: 100,
            chain_max_n: 12,
            chain_max_len: 4,
            symmetric_samples: 20,
            seed: 0x5eed,
            jobs: None,
            dim_cap: None,
        }
    }
}

impl Budget {
    /// A budget small enough for smoke tests.
    pub fn quick() -> Self {
        Self {
            exhaustive_n: 5,
            roundness_n: 6,
            random_graphs: 100,
            samples: 40,
            sample_max_n: 14,
            small_samples: 20,
            k_samples: 10,
            chain_max_n: 8,
            chain_max_len: 3,
            symmetric_samples: 4,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteName,
    /// Number of graphs (or fixtures) examined.
    pub cases: usize,
    /// Number of individual property checks performed.
    pub checks: usize,
    pub failures: Vec<Failure>,
    /// Informational observations that do not affect the verdict.
    pub notes: Vec<String>,
    pub elapsed_ms: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A labelled graph.
pub type Case = (String, Graph);

/// Outcome of checking one case: number of checks and the first failure.
type Outcome = (usize, Option<String>);

pub fn run_suite(suite: SuiteName, budget: &Budget) -> Result<SuiteReport> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = budget.jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    let start = Instant::now();
    let (cases, mut notes) = pool.install(|| run_inner(suite, budget))?;
    let mut checks = 0;
    let mut failures = Vec::new();
    let n_cases = cases.len();
    for (case, (c, fail)) in cases {
        checks += c;
        if let Some(detail) = fail {
            failures.push(Failure { case, detail });
        }
    }
    if !failures.is_empty() {
        notes.push(format!("{} of {n_cases} cases failed", failures.len()));
    }
    Ok(SuiteReport {
        suite,
        cases: n_cases,
        checks,
        failures,
        notes,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

type Collected = (Vec<(String, Outcome)>, Vec<String>);

fn sweep(cases: &[Case], check: impl Fn(&Graph) -> Outcome + Sync) -> Vec<(String, Outcome)> {
    cases
        .par_iter()
        .map(|(label, g)| (label.clone(), check(g)))
        .collect()
}

fn run_inner(suite: SuiteName, b: &Budget) -> Result<Collected> {
    Ok(match suite {
        SuiteName::Equivalences => {
            let mut cases = exhaustive(b.exhaustive_n)?;
            cases.extend(random_connected_cases(
                b.random_graphs,
                b.random_min_n,
                b.random_max_n,
                b.seed,
            )?);
            (sweep(&cases, check_equivalence), vec![])
        }
        SuiteName::LexbfsDismantle => {
            let cases = dismantle_cases(b)?;
            let seed = b.seed;
            (sweep(&cases, |g| check_lexbfs_dismantle(g, seed)), vec![])
        }
        SuiteName::BfsCounterexample => (
            vec![("W5 queue fixture".into(), check_bfs_counterexample())],
            vec![],
        ),
        SuiteName::CopwinCrosscheck => {
            let mut out = sweep(&exhaustive(b.exhaustive_n)?, check_copwin_equivalence);
            out.extend(sweep(&dismantle_cases(b)?, check_copwin_sample));
            (out, vec![])
        }
        SuiteName::RipsPower => {
            let cases = weakly_bridged_samples(b.small_samples, b.sample_max_n, b.seed ^ 0x7195)?;
            let seed = b.seed;
            (sweep(&cases, |g| check_rips(g, seed)), vec![])
        }
        SuiteName::IsometricPrefixes => {
            let cases = weakly_bridged_samples(b.small_samples, b.sample_max_n, b.seed ^ 0x9e1f)?;
            let seed = b.seed;
            (sweep(&cases, |g| check_prefixes(g, seed)), vec![])
        }
        SuiteName::Combing => {
            let cases = dismantle_cases(b)?;
            let seed = b.seed;
            (sweep(&cases, |g| check_combing(g, seed)), vec![])
        }
        SuiteName::Sdn => {
            let mut out = vec![("W5 fixtures".to_string(), check_sdn_w5())];
            let mut all_simplex_cases: Vec<Case> = vec![("W6".into(), generate::wheel(6)?)];
            for layers in 1..=2 {
                all_simplex_cases
                    .push((format!("disk({layers})"), generate::systolic_disk(layers)?));
            }
            let cap = b.dim_cap;
            out.extend(sweep(&all_simplex_cases, |g| check_sdn_all_bases(g, cap)));
            let samples =
                weakly_bridged_samples(b.k_samples, b.sample_max_n.min(20), b.seed ^ 0x5d)?;
            out.extend(sweep(&samples, |g| check_sdn_sample(g, cap)));
            (out, vec![])
        }
        SuiteName::KLadder => {
            let cap = b.dim_cap;
            let samples =
                weakly_bridged_samples(b.k_samples, b.sample_max_n.min(20), b.seed ^ 0x4b)?;
            let mut out = sweep(&samples, |g| check_k_ladder(g, cap));
            let small = weakly_bridged_samples(b.k_samples, b.chain_max_n, b.seed ^ 0xc4)?;
            let len = b.chain_max_len;
            out.extend(sweep(&small, |g| check_chains(g, len)));
            (out, vec![])
        }
        SuiteName::Fixpoint => {
            let mut out = vec![
                ("W5 rotation".to_string(), check_fixpoint_w5()),
                ("disk(2) dihedral".to_string(), check_fixpoint_disk()),
            ];
            let cases = symmetric_samples(b.symmetric_samples, b.seed)?;
            out.extend(sweep(&cases, check_fixpoint_sample));
            (out, vec![])
        }
        SuiteName::Roundness => {
            let mut cases = Vec::new();
            for n in 1..=b.roundness_n {
                cases.extend(
                    enumerate::connected_graphs(n)?
                        .into_iter()
                        .enumerate()
                        .map(|(i, g)| (format!("n{n}#{i}"), g)),
                );
            }
            let results = sweep(&cases, check_roundness);
            let bridged = results.iter().filter(|(_, (c, _))| *c > 0).count();
            (results, vec![format!("{bridged} bridged graphs audited")])
        }
        SuiteName::BfsSweep => {
            let cases = dismantle_cases(b)?;
            let seed = b.seed;
            let tallies: Vec<(usize, usize)> =
                cases.par_iter().map(|(_, g)| bfs_tally(g, seed)).collect();
            let (runs, ok) = tallies
                .iter()
                .fold((0, 0), |(r, o), &(a, c)| (r + a, o + c));
            let notes = vec![format!(
                "{ok} of {runs} BFS runs produced a dismantling order"
            )];
            (
                cases
                    .iter()
                    .zip(tallies)
                    .map(|((l, _), (r, _))| (l.clone(), (r, None)))
                    .collect(),
                notes,
            )
        }
    })
}

// ---------------------------------------------------------------- inputs

/// All connected graphs on `1..=max_n` vertices.
pub fn exhaustive(max_n: usize) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(
            enumerate::connected_graphs(n)?
                .into_iter()
                .enumerate()
                .map(|(i, g)| (format!("n{n}#{i}"), g)),
        );
    }
    Ok(out)
}

fn sub_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_mul(0x9e37_79b9_7f4a_7c15)
        .wrapping_add(i as u64)
}

/// Connected `G(n, p)` samples with `n` and `p` drawn per sample.
pub fn random_connected_cases(
    count: usize,
    min_n: usize,
    max_n: usize,
    seed: u64,
) -> Result<Vec<Case>> {
    (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(sub_seed(seed, i));
            let n = rng.random_range(min_n..=max_n);
            let p = rng.random_range(0.15..0.85);
            let g = generate::random_connected(n, p, &mut rng, 10_000)?;
            Ok((format!("gnp{i}(n={n})"), g))
        })
        .collect()
}

/// Grown weakly bridged graphs on 4 to `max_n` vertices; every fourth one is
/// grown inside the bridged family.
pub fn weakly_bridged_samples(count: usize, max_n: usize, seed: u64) -> Result<Vec<Case>> {
    let max_n = max_n.max(4);
    (0..count)
        .into_par_iter()
        .map(|i| {
            let n = 4 + i % (max_n - 3);
            let target = if i % 4 == 0 {
                GrowthTarget::Bridged
            } else {
                GrowthTarget::WeaklyBridged
            };
            let mut last = None;
            for attempt in 0..16 {
                match generate::grow(n, target, sub_seed(seed, i * 16 + attempt)) {
                    Ok(g) => return Ok((format!("grown{i}(n={n})"), g)),
                    Err(e) => last = Some(e),
                }
            }
            Err(last.expect("at least one attempt"))
        })
        .collect()
}

/// Wheels, cliques and hexagonal disks.
pub fn curated() -> Result<Vec<Case>> {
    let mut out: Vec<Case> = Vec::new();
    for k in [3, 5, 6, 7, 8, 9, 10, 12] {
        out.push((format!("W{k}"), generate::wheel(k)?));
    }
    for n in 1..=5 {
        out.push((format!("K{n}"), generate::complete(n)));
    }
    for layers in 1..=3 {
        out.push((format!("disk({layers})"), generate::systolic_disk(layers)?));
    }
    Ok(out)
}

fn dismantle_cases(b: &Budget) -> Result<Vec<Case>> {
    let mut cases = curated()?;
    cases.extend(weakly_bridged_samples(b.samples, b.sample_max_n, b.seed)?);
    Ok(cases)
}

/// Small weakly bridged graphs with a nontrivial automorphism group.
pub fn symmetric_samples(count: usize, seed: u64) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    let mut i = 0;
    while out.len() < count {
        if i > 100 * count + 1000 {
            return Err(Error::Generator("too few symmetric samples".into()));
        }
        let n = 5 + i % 8;
        let target = if i % 3 == 0 {
            GrowthTarget::Bridged
        } else {
            GrowthTarget::WeaklyBridged
        };
        if let Ok(g) = generate::grow(n, target, sub_seed(seed ^ 0xf1, i)) {
            if symmetry::automorphisms(&g)?.order() > 1 {
                out.push((format!("sym{i}(n={n})"), g));
            }
        }
        i += 1;
    }
    Ok(out)
}

fn tie_breaks(seed: u64, root: Vertex) -> [TieBreak; 2] {
    [TieBreak::LowestId, TieBreak::Seeded(sub_seed(seed, root))]
}

fn fail(checks: usize, msg: String) -> Outcome {
    (checks, Some(msg))
}

fn err_outcome(checks: usize, e: Error) -> Outcome {
    fail(checks, format!("error: {e}"))
}

macro_rules! tri {
    ($checks:expr, $e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return err_outcome($checks, e),
        }
    };
}

// ---------------------------------------------------------------- checks

/// The three weak-modularity routes agree; weakly bridged graphs also pass
/// the wheel conditions; every witness replays.
pub fn check_equivalence(g: &Graph) -> Outcome {
    let verdicts: Vec<(Characterization, Option<recognition::Witness>)> = Characterization::ALL
        .iter()
        .map(|&c| (c, c.check(g)))
        .collect();
    let ok = |c: Characterization| {
        verdicts
            .iter()
            .find(|(x, _)| *x == c)
            .is_some_and(|(_, w)| w.is_none())
    };
    let mut checks = 0;
    for (c, w) in &verdicts {
        checks += 1;
        if let Some(w) = w {
            if !w.replay(g) {
                return fail(checks, format!("{} witness {w:?} does not replay", c.id()));
            }
        }
    }
    let wm = ok(Characterization::TriangleCondition) && ok(Characterization::QuadrangleCondition);
    let iii = wm && ok(Characterization::Thin);
    let iv = wm && ok(Characterization::NoInducedC4);
    let v = wm && ok(Characterization::ConvexBalls);
    checks += 2;
    if iii != iv || iv != v {
        return fail(
            checks,
            format!("routes disagree: thin {iii}, noC4 {iv}, convex balls {v}"),
        );
    }
    if iv {
        checks += 3;
        for c in [
            Characterization::C5InW5,
            Characterization::W5HatCondition,
            Characterization::NoInducedC4,
        ] {
            if !ok(c) {
                return fail(checks, format!("weakly bridged graph fails {}", c.id()));
            }
        }
    }
    checks += 1;
    match recognition::classify(g) {
        Ok(r) if r.classification.is_weakly_bridged() == iv => (checks, None),
        Ok(r) => fail(
            checks,
            format!(
                "classify says {} but routes say {iv}",
                r.classification.name()
            ),
        ),
        Err(e) => err_outcome(checks, e),
    }
}

/// LexBFS from every root under both tie-breaks yields a dismantling order,
/// father domination and the fellow traveler property.
pub fn check_lexbfs_dismantle(g: &Graph, seed: u64) -> Outcome {
    let mut checks = 0;
    if !recognition::is_weakly_bridged(g) {
        return fail(0, "sample is not weakly bridged".into());
    }
    for root in g.vertices() {
        for tie in tie_breaks(seed, root) {
            let rec = tri!(checks, orderings::lexbfs(g, root, &tie));
            checks += 3;
            let dis = tri!(
                checks,
                orderings::verify_dismantling(g, &rec.elimination_order())
            );
            if let Some(i) = dis.first_failure {
                return fail(
                    checks,
                    format!("root {root} {tie:?}: order not dismantling at position {i}"),
                );
            }
            let ftp = tri!(checks, orderings::verify_fellow_traveler(g, &rec));
            if let Some(v) = ftp.undominated_by_father {
                return fail(
                    checks,
                    format!("root {root} {tie:?}: {v} not dominated by its father"),
                );
            }
            if let Some(viol) = ftp.violation {
                return fail(
                    checks,
                    format!("root {root} {tie:?}: fellow traveler {viol:?}"),
                );
            }
        }
    }
    (checks, None)
}

/// Vertices of the 5-wheel: rim `x1..x5` = `0..4`, hub `c` = 5.
const W5_X1: Vertex = 0;
const W5_X2: Vertex = 1;
const W5_X3: Vertex = 2;
const W5_X4: Vertex = 3;
const W5_X5: Vertex = 4;
const W5_C: Vertex = 5;

/// BFS on the 5-wheel from `x1` with queue `x2, x5, c, x3, x4`: `x4` gets
/// father `x5`, which does not dominate it, yet the order dismantles.
pub fn check_bfs_counterexample() -> Outcome {
    let w5 = generate::wheel(5).expect("W5");
    let queue = TieBreak::Priority(vec![W5_X1, W5_X2, W5_X5, W5_C, W5_X3, W5_X4]);
    let rec = tri!(0, orderings::bfs(&w5, W5_X1, &queue));
    if rec.order != [W5_X1, W5_X2, W5_X5, W5_C, W5_X3, W5_X4] {
        return fail(1, format!("unexpected visit order {:?}", rec.order));
    }
    if rec.father[W5_X4] != Some(W5_X5) {
        return fail(2, format!("father of x4 is {:?}", rec.father[W5_X4]));
    }
    if orderings::dominates(&w5, W5_X5, W5_X4, &w5.full_set()) {
        return fail(3, "x5 dominates x4".into());
    }
    let dis = tri!(
        3,
        orderings::verify_dismantling(&w5, &rec.elimination_order())
    );
    if !dis.holds() {
        return fail(4, "BFS order does not dismantle W5".into());
    }
    (4, None)
}

/// Dismantlable iff cop-win, with strategy replay and escape verification.
pub fn check_copwin_equivalence(g: &Graph) -> Outcome {
    let greedy = games::greedy_dismantling(g);
    let mut checks = 1;
    if greedy.complete() {
        let dis = tri!(
            checks,
            orderings::verify_dismantling(g, &greedy.elimination_order())
        );
        checks += 1;
        if !dis.holds() {
            return fail(checks, "greedy order fails verification".into());
        }
    }
    match games::solve_copwin(g) {
        CopWinOutcome::CopWin(s) => {
            checks += 2;
            if !greedy.complete() {
                return fail(checks, "cop-win but greedy dismantling stalls".into());
            }
            let len = tri!(checks, games::replay_strategy(g, &s));
            if len > s.capture_bound {
                return fail(
                    checks,
                    format!("replay took {len} moves, bound {}", s.capture_bound),
                );
            }
        }
        CopWinOutcome::RobberWin(w) => {
            checks += 2;
            if greedy.complete() {
                return fail(checks, "dismantlable but robber wins".into());
            }
            if !games::verify_escape(g, &w) {
                return fail(checks, "escape witness does not verify".into());
            }
        }
    }
    (checks, None)
}

/// Weakly bridged samples are cop-win and the strategy replays.
pub fn check_copwin_sample(g: &Graph) -> Outcome {
    match games::solve_copwin(g) {
        CopWinOutcome::CopWin(s) => {
            let len = tri!(1, games::replay_strategy(g, &s));
            if len > s.capture_bound {
                return fail(
                    2,
                    format!("replay took {len} moves, bound {}", s.capture_bound),
                );
            }
            (2, None)
        }
        CopWinOutcome::RobberWin(_) => fail(1, "weakly bridged sample is robber-win".into()),
    }
}

/// The LexBFS order of `G` dismantles `G^2` and `G^3`.
pub fn check_rips(g: &Graph, seed: u64) -> Outcome {
    let mut checks = 0;
    let mut runs = vec![(0, TieBreak::LowestId)];
    let root = (sub_seed(seed, g.n()) % g.n() as u64) as Vertex;
    runs.push((root, TieBreak::Seeded(seed)));
    for (root, tie) in runs {
        let rec = tri!(checks, orderings::lexbfs(g, root, &tie));
        for k in [2, 3] {
            let p = tri!(checks, orderings::graph_power(g, k));
            checks += 1;
            let dis = tri!(
                checks,
                orderings::verify_dismantling(&p, &rec.elimination_order())
            );
            if let Some(i) = dis.first_failure {
                return fail(
                    checks,
                    format!("root {root}: G^{k} not dismantled at position {i}"),
                );
            }
        }
    }
    (checks, None)
}

/// Every LexBFS prefix induces an isometric weakly bridged subgraph.
pub fn check_prefixes(g: &Graph, seed: u64) -> Outcome {
    let mut checks = 0;
    let root = (sub_seed(seed, g.n() + 1) % g.n() as u64) as Vertex;
    for (root, tie) in [(0, TieBreak::LowestId), (root, TieBreak::Seeded(seed))] {
        let rec = tri!(checks, orderings::lexbfs(g, root, &tie));
        for k in 1..=g.n() {
            checks += 2;
            let set = VertexSet::from_iter(g.n(), rec.order[..k].iter().copied());
            if !g.is_isometric_subset(&set) {
                return fail(checks, format!("root {root}: prefix {k} is not isometric"));
            }
            let (sub, _) = tri!(checks, orderings::prefix_subgraph(g, &rec, k));
            if !recognition::is_weakly_bridged(&sub) {
                return fail(
                    checks,
                    format!("root {root}: prefix {k} is not weakly bridged"),
                );
            }
        }
    }
    (checks, None)
}

/// Every LexBFS tree gives a geodesic 1-combing.
pub fn check_combing(g: &Graph, seed: u64) -> Outcome {
    let mut checks = 0;
    for root in g.vertices() {
        for tie in tie_breaks(seed, root) {
            let rec = tri!(checks, orderings::lexbfs(g, root, &tie));
            checks += 1;
            if let Some(v) = orderings::verify_combing(g, &orderings::build_combing(&rec)) {
                return fail(checks, format!("root {root} {tie:?}: {v:?}"));
            }
        }
    }
    (checks, None)
}

fn complex(g: &Graph, cap: Option<usize>) -> FlagComplex<'_> {
    let x = FlagComplex::new(g);
    match cap {
        Some(c) => x.with_dim_cap(c),
        None => x,
    }
}

/// The sphere vertex and its descent set for the edge `x1 x2` of `W5`.
pub const W5_EDGE_WITNESS: (u32, [Vertex; 1], [Vertex; 3]) = (1, [W5_X4], [W5_X3, W5_X5, W5_C]);

/// On `W5`, descent holds around every vertex in all modes, and fails around
/// the rim edge `x1 x2` at `x4` (pinned witness).
pub fn check_sdn_w5() -> Outcome {
    let w5 = generate::wheel(5).expect("W5");
    let x = FlagComplex::new(&w5);
    let mut checks = 0;
    for v in w5.vertices() {
        let base = tri!(checks, Simplex::new(&w5, [v]));
        for mode in [
            SdnMode::VertexCondition,
            SdnMode::EdgeCondition,
            SdnMode::AllSimplices,
        ] {
            checks += 1;
            if let Some(w) = tri!(checks, x.check_sdn(&base, mode)) {
                return fail(checks, format!("vertex base {v} {mode:?}: {w:?}"));
            }
        }
    }
    let edge = tri!(checks, Simplex::new(&w5, [W5_X1, W5_X2]));
    let (i, sigma, descent) = W5_EDGE_WITNESS;
    let expected = SdnWitness {
        i,
        sigma: sigma.to_vec(),
        descent: descent.to_vec(),
    };
    for mode in [SdnMode::VertexCondition, SdnMode::AllSimplices] {
        checks += 1;
        match tri!(checks, x.check_sdn(&edge, mode)) {
            Some(w) if w == expected => {}
            other => {
                return fail(
                    checks,
                    format!("edge base {mode:?}: expected {expected:?}, got {other:?}"),
                )
            }
        }
    }
    (checks, None)
}

/// Descent in all modes around every simplex.
pub fn check_sdn_all_bases(g: &Graph, cap: Option<usize>) -> Outcome {
    let x = complex(g, cap);
    let mut checks = 0;
    for base in x.simplices() {
        checks += 1;
        if let Some(w) = tri!(checks, x.check_sdn(base, SdnMode::AllSimplices)) {
            return fail(checks, format!("base {base:?}: {w:?}"));
        }
    }
    (checks, None)
}

/// Descent around maximal simplices; edge descent and convexity of balls of
/// radius at least 2 around every simplex.
pub fn check_sdn_sample(g: &Graph, cap: Option<usize>) -> Outcome {
    let x = complex(g, cap);
    let mut checks = 1;
    if let Some((base, w)) = tri!(checks, x.check_sdn_maximal()) {
        return fail(checks, format!("maximal base {base:?}: {w:?}"));
    }
    for s in x.simplices() {
        checks += 2;
        if let Some(w) = tri!(checks, x.check_edge_descent(s)) {
            return fail(checks, format!("edge descent around {s:?}: {w:?}"));
        }
        if let Some((i, t)) = tri!(checks, x.check_big_ball_convex(s)) {
            return fail(checks, format!("B_{i}({s:?}) not convex: {t:?}"));
        }
    }
    (checks, None)
}

/// `K_i` ladder for every simplex, and projections onto vertex balls against
/// the common-neighbor definition.
pub fn check_k_ladder(g: &Graph, cap: Option<usize>) -> Outcome {
    let x = complex(g, cap);
    let mut checks = 0;
    for s in x.simplices() {
        checks += 1;
        if let Some(w) = tri!(checks, x.check_k_descent(s)) {
            return fail(checks, format!("K-sets of {s:?}: {w:?}"));
        }
    }
    for (y, _) in vertex_balls(g) {
        let rim = tri!(checks, g.sphere(&y, 1));
        for s in x
            .simplices()
            .iter()
            .filter(|s| s.vertices().iter().all(|&v| rim.contains(v)))
        {
            checks += 1;
            let expected: Vec<Vertex> = y
                .iter()
                .filter(|&u| s.vertices().iter().all(|&v| g.distance(u, v) == 1))
                .collect();
            match x.project_on_convex(s, &y) {
                Ok(t) if t.vertices() == expected => {}
                other => {
                    return fail(
                        checks,
                        format!(
                            "projection of {s:?} on {:?}: {other:?} vs {expected:?}",
                            y.to_vec()
                        ),
                    )
                }
            }
        }
    }
    (checks, None)
}

/// Balls `B_r(v)` with `r` below the eccentricity of `v`.
fn vertex_balls(g: &Graph) -> Vec<(VertexSet, (Vertex, u32))> {
    let mut out = Vec::new();
    for v in g.vertices() {
        for r in 0..g.eccentricity(v) {
            out.push((g.vertex_ball(v, r), (v, r)));
        }
    }
    out
}

/// Chain intersection for every vertex ball as the convex set.
pub fn check_chains(g: &Graph, max_len: usize) -> Outcome {
    let x = FlagComplex::new(g);
    let mut checks = 0;
    for (y, (v, r)) in vertex_balls(g) {
        checks += 1;
        if let Some(w) = tri!(checks, x.check_chain_intersection(&y, max_len)) {
            return fail(checks, format!("Y = B_{r}({v}): {w:?}"));
        }
    }
    (checks, None)
}

fn certify(g: &Graph, grp: &PermGroup, seed: Vertex) -> std::result::Result<Simplex, String> {
    let x = FlagComplex::new(g);
    let cert =
        symmetry::invariant_simplex(&x, grp, seed).map_err(|e| format!("seed {seed}: {e}"))?;
    cert.replay(g, grp)
        .map_err(|e| format!("seed {seed}: replay: {e}"))?;
    if !grp.fixes_setwise(&cert.simplex.to_set(g.n())) {
        return Err(format!(
            "seed {seed}: simplex {:?} is not invariant",
            cert.simplex
        ));
    }
    Ok(cert.simplex)
}

/// Rotation of `W5` fixes exactly the hub.
pub fn check_fixpoint_w5() -> Outcome {
    let w5 = generate::wheel(5).expect("W5");
    let rot = tri!(0, Permutation::new(vec![1, 2, 3, 4, 0, 5]));
    let grp = tri!(0, PermGroup::generate(&w5, vec![rot]));
    for seed in w5.vertices() {
        match certify(&w5, &grp, seed) {
            Ok(s) if s.vertices() == [W5_C] => {}
            Ok(s) => return fail(seed + 1, format!("seed {seed}: got {s:?}")),
            Err(e) => return fail(seed + 1, e),
        }
    }
    (w5.n(), None)
}

/// The dihedral group of the hexagonal disk fixes exactly the center.
pub fn check_fixpoint_disk() -> Outcome {
    let disk = tri!(0, generate::systolic_disk(2));
    let grp = tri!(0, symmetry::automorphisms(&disk));
    if grp.order() != 12 {
        return fail(1, format!("disk group has order {}", grp.order()));
    }
    for seed in disk.vertices() {
        match certify(&disk, &grp, seed) {
            Ok(s) if s.vertices() == [0] => {}
            Ok(s) => return fail(seed + 2, format!("seed {seed}: got {s:?}")),
            Err(e) => return fail(seed + 2, e),
        }
    }
    (disk.n() + 1, None)
}

/// Invariant simplices for the full automorphism group from every seed, and
/// fixed cliques of every automorphism.
pub fn check_fixpoint_sample(g: &Graph) -> Outcome {
    let grp = tri!(0, symmetry::automorphisms(g));
    let mut checks = 0;
    for seed in g.vertices() {
        checks += 1;
        if let Err(e) = certify(g, &grp, seed) {
            return fail(checks, e);
        }
    }
    for p in grp.elements() {
        checks += 1;
        let c = tri!(checks, games::fixed_clique_of_homomorphism(g, p.images()));
        let image: Vec<Vertex> = {
            let mut v: Vec<Vertex> = c.vertices().iter().map(|&x| p.apply(x)).collect();
            v.sort_unstable();
            v
        };
        if image != c.vertices() {
            return fail(checks, format!("{p:?} moves its fixed clique {c:?}"));
        }
    }
    (checks, None)
}

/// Farber's inequality, and diameter at most 2 for round complexes, on
/// bridged inputs; other inputs count zero checks.
pub fn check_roundness(g: &Graph) -> Outcome {
    if recognition::classify(g).map(|r| r.classification) != Ok(Classification::Bridged) {
        return (0, None);
    }
    match symmetry::roundness_audit(&FlagComplex::new(g)) {
        Ok(r) if r.farber_holds && (!r.round || r.diameter <= 2) => (1, None),
        Ok(r) => fail(1, format!("{r:?}")),
        Err(e) => err_outcome(1, e),
    }
}

/// BFS runs (every root, both tie-breaks) and how many dismantle.
fn bfs_tally(g: &Graph, seed: u64) -> (usize, usize) {
    let mut runs = 0;
    let mut ok = 0;
    for root in g.vertices() {
        for tie in tie_breaks(seed, root) {
            if let Ok(rec) = orderings::bfs(g, root, &tie) {
                runs += 1;
                if orderings::verify_dismantling(g, &rec.elimination_order())
                    .is_ok_and(|d| d.holds())
                {
                    ok += 1;
                }
            }
        }
    }
    (runs, ok)
}
