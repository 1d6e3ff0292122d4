use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use weakly_systolic::complexes::{FlagComplex, SdnMode, Simplex};
use weakly_systolic::games::{self, CopWinOutcome};
use weakly_systolic::generate::{self, GrowthTarget};
use weakly_systolic::io::{self, GraphFormat};
use weakly_systolic::orderings::{self, TieBreak};
use weakly_systolic::recognition::Classification;
use weakly_systolic::report::GraphReport;
use weakly_systolic::suite::{self, Budget, SuiteName};
use weakly_systolic::symmetry::{self, PermGroup, Permutation};
use weakly_systolic::{Graph, Vertex};

#[derive(Parser)]
#[command(
    name = "wsys",
    version,
    about = "Weakly bridged graphs and weakly systolic complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for every random choice (suites default to the acceptance seed,
    /// everything else to 0).
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Tie::Lowest)]
    tie_break: Tie,
    /// Graph file format; guessed from the extension when omitted.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads for sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Largest simplex dimension enumerated.
    #[arg(long, global = true)]
    dim_cap: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Tie {
    Lowest,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edge,
    Json,
}

impl From<Format> for GraphFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Edge => GraphFormat::EdgeList,
            Format::Json => GraphFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Vertex,
    Edge,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Bridged,
    WeaklyBridgedNotBridged,
    NotWeaklyBridged,
}

#[derive(Subcommand)]
enum Command {
    /// Recognition report with witnesses.
    Classify {
        /// Graph file, or `-` for stdin.
        file: PathBuf,
        /// Also write a Graphviz drawing highlighting the witnesses.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// LexBFS certificate with dismantling, fellow traveler and combing checks.
    Lexbfs {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        root: Vertex,
        /// Run plain BFS instead of LexBFS.
        #[arg(long)]
        plain: bool,
    },
    /// Greedy dismantling order and its verification.
    Dismantle { file: PathBuf },
    /// Solve the one-cop game and replay the result.
    Copwin { file: PathBuf },
    /// Simple descent on balls around a simplex, or around every vertex and
    /// every maximal simplex when no base is given.
    Sdn {
        file: PathBuf,
        /// Comma-separated vertices of the base simplex.
        #[arg(long, value_delimiter = ',')]
        base: Vec<Vertex>,
        #[arg(long, value_enum, default_value_t = Mode::All)]
        mode: Mode,
    },
    /// Invariant simplex for a group of automorphisms.
    Fixpoint {
        file: PathBuf,
        /// Generator as a comma-separated image list; repeatable. Defaults to
        /// the full automorphism group.
        #[arg(long = "generator")]
        generators: Vec<String>,
        #[arg(long, default_value_t = 0)]
        vertex: Vertex,
    },
    /// Diameter, radius, roundness and Farber's inequality of a bridged graph.
    RoundAudit { file: PathBuf },
    /// Write a graph from a named family.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Run a named sweep (or `all`); exits nonzero on any failure.
    Suite {
        name: String,
        /// Small budget for smoke runs.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Subcommand)]
enum Family {
    Wheel {
        k: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    Star {
        k: usize,
    },
    /// `G^k` of a graph file.
    Power {
        file: PathBuf,
        k: u32,
    },
    /// Connected `G(n, p)` rejected until it has the requested class.
    RandomFiltered {
        n: usize,
        p: f64,
        #[arg(value_enum)]
        class: Class,
        #[arg(long, default_value_t = 100_000)]
        attempts: usize,
    },
    /// Grown one dominated vertex at a time inside the class.
    Grow {
        n: usize,
        #[arg(long)]
        bridged: bool,
    },
    SystolicDisk {
        layers: usize,
    },
}

fn read_graph(path: &Path, format: Option<Format>) -> Result<Graph> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let fmt = format.map_or_else(|| GraphFormat::from_path(path), GraphFormat::from);
    io::parse(&text, fmt).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json(out: &Option<PathBuf>, value: &serde_json::Value) -> Result<()> {
    emit(out, &format!("{}\n", serde_json::to_string_pretty(value)?))
}

fn tie(cli: &Cli) -> TieBreak {
    match cli.tie_break {
        Tie::Lowest => TieBreak::LowestId,
        Tie::Random => TieBreak::Seeded(cli.seed.unwrap_or(0)),
    }
}

fn flag_complex<'g>(g: &'g Graph, cap: Option<usize>) -> FlagComplex<'g> {
    match cap {
        Some(c) => FlagComplex::new(g).with_dim_cap(c),
        None => FlagComplex::new(g),
    }
}

fn parse_perm(s: &str) -> Result<Permutation> {
    let images = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<Vertex>()
                .with_context(|| format!("bad image '{t}'"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Permutation::new(images)?)
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Classify { file, dot } => {
            let g = read_graph(file, cli.format)?;
            let report = GraphReport::build(&g)?;
            if let Some(p) = dot {
                fs::write(p, report.to_dot(&g))
                    .with_context(|| format!("writing {}", p.display()))?;
            }
            emit_json(&cli.out, &serde_json::to_value(&report)?)?;
        }
        Command::Lexbfs { file, root, plain } => {
            let g = read_graph(file, cli.format)?;
            let rec = if *plain {
                orderings::bfs(&g, *root, &tie(cli))?
            } else {
                orderings::lexbfs(&g, *root, &tie(cli))?
            };
            let dismantling = orderings::verify_dismantling(&g, &rec.elimination_order())?;
            let ftp = orderings::verify_fellow_traveler(&g, &rec)?;
            let combing = orderings::verify_combing(&g, &orderings::build_combing(&rec));
            emit_json(
                &cli.out,
                &json!({
                    "record": rec,
                    "elimination_order": rec.elimination_order(),
                    "dismantling": dismantling,
                    "fellow_traveler": ftp,
                    "combing_violation": combing,
                }),
            )?;
        }
        Command::Dismantle { file } => {
            let g = read_graph(file, cli.format)?;
            let greedy = games::greedy_dismantling(&g);
            let check = if greedy.complete() {
                Some(orderings::verify_dismantling(
                    &g,
                    &greedy.elimination_order(),
                )?)
            } else {
                None
            };
            emit_json(
                &cli.out,
                &json!({ "dismantlable": greedy.complete(), "greedy": greedy, "verification": check }),
            )?;
        }
        Command::Copwin { file } => {
            let g = read_graph(file, cli.format)?;
            let outcome = games::solve_copwin(&g);
            let check = match &outcome {
                CopWinOutcome::CopWin(s) => {
                    json!({ "longest_replay": games::replay_strategy(&g, s)? })
                }
                CopWinOutcome::RobberWin(w) => {
                    json!({ "escape_verified": games::verify_escape(&g, w) })
                }
            };
            let dismantlable = games::greedy_dismantling(&g).complete();
            emit_json(
                &cli.out,
                &json!({ "cop_win": outcome.is_cop_win(), "dismantlable": dismantlable, "outcome": outcome, "check": check }),
            )?;
        }
        Command::Sdn { file, base, mode } => {
            let g = read_graph(file, cli.format)?;
            let x = flag_complex(&g, cli.dim_cap);
            let mode = match mode {
                Mode::Vertex => SdnMode::VertexCondition,
                Mode::Edge => SdnMode::EdgeCondition,
                Mode::All => SdnMode::AllSimplices,
            };
            if base.is_empty() {
                let mut around_vertices = Vec::new();
                for v in g.vertices() {
                    let w = x.check_sdn(&Simplex::new(&g, [v])?, mode)?;
                    around_vertices.push(json!({ "base": [v], "witness": w }));
                }
                let maximal = x.check_sdn_maximal()?;
                emit_json(
                    &cli.out,
                    &json!({ "vertex_bases": around_vertices, "maximal_failure": maximal }),
                )?;
            } else {
                let s = Simplex::new(&g, base.iter().copied())?;
                let w = x.check_sdn(&s, mode)?;
                emit_json(
                    &cli.out,
                    &json!({ "base": s, "mode": mode, "holds": w.is_none(), "witness": w }),
                )?;
            }
        }
        Command::Fixpoint {
            file,
            generators,
            vertex,
        } => {
            let g = read_graph(file, cli.format)?;
            let grp = if generators.is_empty() {
                symmetry::automorphisms(&g)?
            } else {
                let gens = generators
                    .iter()
                    .map(|s| parse_perm(s))
                    .collect::<Result<Vec<_>>>()?;
                PermGroup::generate(&g, gens)?
            };
            let cert = symmetry::invariant_simplex(&flag_complex(&g, None), &grp, *vertex)?;
            cert.replay(&g, &grp)?;
            emit_json(
                &cli.out,
                &json!({ "group_order": grp.order(), "certificate": cert, "replayed": true }),
            )?;
        }
        Command::RoundAudit { file } => {
            let g = read_graph(file, cli.format)?;
            let report = symmetry::roundness_audit(&flag_complex(&g, None))?;
            emit_json(&cli.out, &serde_json::to_value(report)?)?;
        }
        Command::Generate { family } => {
            let g = generate_family(cli, family)?;
            let fmt = cli.format.map_or(GraphFormat::EdgeList, GraphFormat::from);
            emit(&cli.out, &io::serialize(&g, fmt))?;
        }
        Command::Suite { name, quick } => {
            let mut budget = if *quick {
                Budget::quick()
            } else {
                Budget::default()
            };
            if let Some(seed) = cli.seed {
                budget.seed = seed;
            }
            budget.jobs = cli.jobs;
            budget.dim_cap = cli.dim_cap;
            let names: Vec<SuiteName> = if name == "all" {
                SuiteName::ALL.to_vec()
            } else {
                vec![name.parse::<SuiteName>()?]
            };
            let mut reports = Vec::new();
            for s in names {
                let r = suite::run_suite(s, &budget)?;
                eprintln!(
                    "{} {s}: {} cases, {} checks",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.cases,
                    r.checks
                );
                reports.push(r);
            }
            let passed = reports.iter().all(|r| r.passed());
            emit_json(
                &cli.out,
                &json!({ "budget": budget, "passed": passed, "reports": reports }),
            )?;
            return Ok(passed);
        }
    }
    Ok(true)
}

fn generate_family(cli: &Cli, family: &Family) -> Result<Graph> {
    Ok(match family {
        Family::Wheel { k } => generate::wheel(*k)?,
        Family::Path { n } => generate::path(*n)?,
        Family::Cycle { n } => generate::cycle(*n)?,
        Family::Complete { n } => {
            if *n == 0 {
                bail!("complete graph needs at least one vertex");
            }
            generate::complete(*n)
        }
        Family::Star { k } => generate::star(*k)?,
        Family::Power { file, k } => generate::power(&read_graph(file, cli.format)?, *k)?,
        Family::RandomFiltered {
            n,
            p,
            class,
            attempts,
        } => {
            let class = match class {
                Class::Bridged => Classification::Bridged,
                Class::WeaklyBridgedNotBridged => Classification::WeaklyBridgedNotBridged,
                Class::NotWeaklyBridged => Classification::NotWeaklyBridged,
            };
            generate::random_filtered(*n, *p, class, cli.seed.unwrap_or(0), *attempts)?
        }
        Family::Grow { n, bridged } => {
            let target = if *bridged {
                GrowthTarget::Bridged
            } else {
                GrowthTarget::WeaklyBridged
            };
            generate::grow(*n, target, cli.seed.unwrap_or(0))?
        }
        Family::SystolicDisk { layers } => generate::systolic_disk(*layers)?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
