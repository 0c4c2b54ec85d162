use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, ValueEnum};

use arborist::bounds::{
    evaluate, is_hadamard_tournament, is_locally_transitive, lb_eulerian_tournament, lb_knm,
    ub_hadamard, BoundReport,
};
use arborist::construct;
use arborist::counting::{count as count_quantity, spanning_trees};
use arborist::format::{write_digraph, GraphFile};
use arborist::report::{approx, RationalJson, Report, ResultEntry};
use arborist::search::{extremal_orientation, verify_theorem, DEFAULT_BUDGET};
use arborist::{
    BigRational, BoundId, DirectedMultigraph, Method, Objective, Quantity, Scope, SearchConfig,
    TheoremId, TheoremReport,
};

use crate::input::{graph_spec, numbers, read_digraph, read_undirected};
use crate::{Failure, OutputFormat};

type Outcome = Result<bool, Failure>;

fn emit(mut report: Report, started: Instant) -> Result<(), Failure> {
    report.runtime_ms = started.elapsed().as_millis() as u64;
    let json = serde_json::to_string_pretty(&report)
        .map_err(|e| Failure::Input(format!("cannot serialise report: {e}")))?;
    write_stdout(&format!("{json}\n"))
}

/// A closed pipe (e.g. `| head`) ends output quietly rather than panicking.
fn write_stdout(text: &str) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            Err(Failure::Input(format!("cannot write stdout: {e}")))
        }
        _ => Ok(()),
    }
}

fn describe(d: &DirectedMultigraph) -> String {
    format!("digraph n={} m={}", d.n(), d.edge_count())
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum QuantityArg {
    /// Arborescences at `--root`, or the common count of a balanced digraph.
    Arb,
    /// Arborescences summed over all roots.
    Allarb,
    /// Spanning trees of the underlying graph.
    Sp,
    /// Eulerian tours with parallel edges distinguishable.
    Tours,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Determinant,
    Charpoly,
    BruteForce,
}

#[derive(Args)]
pub struct CountArgs {
    #[arg(long, value_enum, default_value = "arb")]
    quantity: QuantityArg,
    #[arg(long)]
    root: Option<usize>,
    #[arg(long, value_enum, default_value = "determinant")]
    method: MethodArg,
    /// Edge-list file; stdin when absent or `-`.
    input: Option<PathBuf>,
}

pub fn count(a: CountArgs) -> Outcome {
    let started = Instant::now();
    let method = match a.method {
        MethodArg::Determinant => Method::Determinant,
        MethodArg::Charpoly => Method::Charpoly,
        MethodArg::BruteForce => Method::BruteForce,
    };
    let (instance, value, name) = match a.quantity {
        QuantityArg::Sp => {
            if !matches!(method, Method::Determinant) {
                return Err(Failure::Input("sp is counted by determinant only".into()));
            }
            let g = read_undirected(a.input.as_deref())?;
            (format!("graph n={}", g.n()), spanning_trees(&g), "sp")
        }
        q => {
            let d = read_digraph(a.input.as_deref())?;
            let quantity = match (q, a.root) {
                (QuantityArg::Arb, Some(_)) => Quantity::ArbRooted,
                (QuantityArg::Arb, None) => Quantity::Arb,
                (QuantityArg::Allarb, _) => Quantity::Allarb,
                _ => Quantity::EulerTours,
            };
            let r = count_quantity(&d, quantity, a.root, method)?;
            (describe(&d), r.value, quantity.name())
        }
    };
    let mut report = Report::new("count", instance);
    let mut entry = ResultEntry::value(name, &value);
    entry.detail = Some(format!("method: {}", method.name()));
    report.results.push(entry);
    emit(report, started)?;
    Ok(true)
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Swirl,
    Transitive,
    Paley,
    KnmBlowup,
    /// Symmetric orientation of the graph read from the input.
    Symmetric,
    /// Doubles every multiplicity of the graph read from the input.
    Double,
    Complete,
    CompleteBipartite,
    Cycle,
    Path,
    RandomTournament,
    /// Random Eulerian orientation of the graph read from the input.
    RandomEulerian,
}

#[derive(Args)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    family: Family,
    /// Numeric parameters, e.g. `7` or `4 6`. Families that transform a
    /// graph take no parameters except `random-eulerian`, which takes a seed.
    params: Vec<String>,
    /// Input graph for `symmetric`, `double` and `random-eulerian`.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edge-list")]
    format: OutputFormat,
}

pub fn construct(a: ConstructArgs) -> Outcome {
    let nums = numbers_of(&a.params)?;
    let want = |k: usize| -> Result<(), Failure> {
        if nums.len() == k {
            Ok(())
        } else {
            Err(Failure::Input(format!("{:?} takes {k} parameter(s)", a.family)))
        }
    };
    let input = a.input.as_deref();
    let graph = match a.family {
        Family::Swirl => {
            want(1)?;
            GraphFile::Directed(construct::swirl(nums[0])?)
        }
        Family::Transitive => {
            want(1)?;
            GraphFile::Directed(construct::transitive(nums[0])?)
        }
        Family::Paley => {
            want(1)?;
            GraphFile::Directed(construct::paley(nums[0] as u64)?)
        }
        Family::KnmBlowup => {
            want(2)?;
            GraphFile::Directed(construct::bipartite_blowup_minimizer(nums[0], nums[1])?)
        }
        Family::Symmetric => {
            want(0)?;
            GraphFile::Directed(construct::symmetric_orientation(&read_undirected(input)?)?)
        }
        Family::Double => {
            want(0)?;
            GraphFile::Undirected(construct::double(&read_undirected(input)?))
        }
        Family::Complete => {
            want(1)?;
            GraphFile::Undirected(construct::complete_graph(nums[0])?)
        }
        Family::CompleteBipartite => {
            want(2)?;
            GraphFile::Undirected(construct::complete_bipartite(nums[0], nums[1])?)
        }
        Family::Cycle => {
            want(1)?;
            GraphFile::Undirected(construct::cycle_graph(nums[0])?)
        }
        Family::Path => {
            want(1)?;
            GraphFile::Undirected(construct::path_graph(nums[0])?)
        }
        Family::RandomTournament => {
            want(2)?;
            GraphFile::Directed(construct::random_tournament(nums[0], nums[1] as u64)?)
        }
        Family::RandomEulerian => {
            want(1)?;
            let g = read_undirected(input)?;
            GraphFile::Directed(construct::random_eulerian_orientation(&g, nums[0] as u64)?)
        }
    };
    let text = match a.format {
        OutputFormat::EdgeList => graph.to_text(),
        OutputFormat::Dot => graph.to_dot(),
    };
    match a.out {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?,
        None => write_stdout(&text)?,
    }
    Ok(true)
}

fn numbers_of(params: &[String]) -> Result<Vec<usize>, Failure> {
    if params.is_empty() {
        return Ok(Vec::new());
    }
    numbers(&params.join(","))
}

#[derive(Args)]
pub struct BoundArgs {
    /// Bound id, e.g. `LB-TOURN`, `UB-HADAMARD`, `LB-KNM`.
    id: String,
    /// Evaluate from parameters instead of a graph: `n` for LB-EULER-KN and
    /// UB-HADAMARD, `n m` for LB-KNM.
    #[arg(long, num_args = 1..=2)]
    params: Option<Vec<usize>>,
    /// Add an approximate decimal rendering of rational values.
    #[arg(long)]
    float: bool,
    input: Option<PathBuf>,
}

fn rational_entry(quantity: &str, r: &BigRational, float: bool) -> ResultEntry {
    let mut e = ResultEntry::value(quantity, r);
    e.bound = Some(RationalJson::from(r));
    if float {
        e.approx = Some(approx(r));
    }
    e
}

fn bound_entry(r: &BoundReport, float: bool) -> ResultEntry {
    let mut e = ResultEntry::value(r.id.name(), &r.quantity);
    e.bound = Some(RationalJson::from(&r.bound));
    e.squared = r.squared.then_some(true);
    e.satisfied = Some(r.satisfied);
    e.tight = Some(r.tight);
    if float {
        e.approx = Some(approx(&r.bound));
    }
    e
}

pub fn bound(a: BoundArgs) -> Outcome {
    let started = Instant::now();
    let id: BoundId = a.id.parse()?;
    if let Some(p) = &a.params {
        let value = match (id, p.as_slice()) {
            (BoundId::LbEulerKn, [n]) => lb_eulerian_tournament(*n)?,
            (BoundId::UbHadamard, [n]) => ub_hadamard(*n)?,
            (BoundId::LbKnm, [n, m]) => BigRational::from(lb_knm(*n, *m)?),
            _ => {
                return Err(Failure::Input(format!(
                    "{id} cannot be evaluated from parameters {p:?}"
                )))
            }
        };
        let instance = p.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        let mut report = Report::new("bound", format!("{id}({instance})"));
        report.results.push(rational_entry(id.name(), &value, a.float));
        emit(report, started)?;
        return Ok(true);
    }
    let d = read_digraph(a.input.as_deref())?;
    let r = evaluate(id, &d, &describe(&d))?;
    let mut report = Report::new("bound", r.instance.clone());
    report.results.push(bound_entry(&r, a.float));
    let ok = report.all_satisfied();
    emit(report, started)?;
    Ok(ok)
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Predicate {
    LocallyTransitive,
    Hadamard,
    Balanced,
    /// Balanced and strongly connected.
    Eulerian,
    StronglyConnected,
    Tournament,
}

#[derive(Args)]
pub struct CheckArgs {
    #[arg(value_enum)]
    predicate: Predicate,
    input: Option<PathBuf>,
}

pub fn check(a: CheckArgs) -> Outcome {
    let started = Instant::now();
    let d = read_digraph(a.input.as_deref())?;
    let (name, holds) = match a.predicate {
        Predicate::LocallyTransitive => ("locally-transitive", is_locally_transitive(&d)?),
        Predicate::Hadamard => ("hadamard", is_hadamard_tournament(&d)?),
        Predicate::Balanced => ("balanced", d.is_balanced()),
        Predicate::Eulerian => ("eulerian", d.is_balanced() && d.is_strongly_connected()),
        Predicate::StronglyConnected => ("strongly-connected", d.is_strongly_connected()),
        Predicate::Tournament => ("tournament", d.is_tournament()),
    };
    let mut report = Report::new("check", describe(&d));
    report.results.push(ResultEntry::predicate(name, holds));
    emit(report, started)?;
    Ok(true)
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScopeArg {
    Eulerian,
    All,
}

#[derive(Args)]
pub struct SearchArgs {
    /// min-arb, max-arb, min-allarb or max-allarb.
    objective: String,
    /// Graph file, or `complete:N`, `complete-bipartite:N,M`, `cycle:N`,
    /// `path:N`, `double-complete:N`.
    #[arg(long)]
    graph: String,
    /// Orientations searched; defaults to eulerian for arb objectives and
    /// all for allarb objectives.
    #[arg(long, value_enum)]
    scope: Option<ScopeArg>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    iso_dedup: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Relabel the input graph by a permutation drawn from this seed.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 4)]
    shard_depth: usize,
}

pub fn search(a: SearchArgs) -> Outcome {
    let started = Instant::now();
    let objective: Objective = a.objective.parse()?;
    let (mut instance, mut g) = graph_spec(&a.graph)?;
    if let Some(seed) = a.seed {
        g = g.relabel(&construct::random_permutation(g.n(), seed))?;
        instance = format!("{instance} relabelled by seed {seed}");
    }
    let scope = match a.scope {
        Some(ScopeArg::Eulerian) => Scope::Eulerian,
        Some(ScopeArg::All) => Scope::All,
        None if objective.needs_balance() => Scope::Eulerian,
        None => Scope::All,
    };
    let cfg = SearchConfig {
        jobs: a.jobs.max(1),
        iso_dedup: a.iso_dedup,
        budget: a.budget,
        shard_depth: a.shard_depth,
    };
    let r = extremal_orientation(&g, objective, scope, &cfg)?;
    let mut entry = ResultEntry::value(objective.name(), &r.optimum);
    entry.witnesses = Some(r.witnesses.iter().map(write_digraph).collect());
    let mut detail = format!(
        "scope: {}; orientations searched: {}; witnesses: {}",
        match scope {
            Scope::Eulerian => "eulerian",
            Scope::All => "all",
        },
        r.search_space,
        r.witnesses.len()
    );
    if r.dedup_skipped {
        detail.push_str("; isomorphism dedup skipped above the vertex cap, witnesses are labelled");
    }
    entry.detail = Some(detail);
    let mut report = Report::new("search", instance);
    report.results.push(entry);
    emit(report, started)?;
    Ok(true)
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Theorem id or `all`.
    theorem: String,
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long)]
    float: bool,
}

fn theorem_entries(r: &TheoremReport, float: bool) -> Vec<ResultEntry> {
    r.checks
        .iter()
        .map(|c| {
            let mut e = ResultEntry::value(format!("{}: {}", r.theorem, c.quantity), &c.value);
            e.bound = c.bound.as_ref().map(RationalJson::from);
            e.squared = c.squared.then_some(true);
            e.satisfied = Some(c.satisfied);
            e.tight = c.tight;
            if !c.witnesses.is_empty() {
                e.witnesses = Some(c.witnesses.iter().map(write_digraph).collect());
            }
            if float {
                e.approx = c.bound.as_ref().map(approx);
            }
            e.detail = Some(if c.detail.is_empty() {
                c.instance.clone()
            } else {
                format!("{}: {}", c.instance, c.detail)
            });
            e
        })
        .collect()
}

pub fn verify(a: VerifyArgs) -> Outcome {
    let started = Instant::now();
    let ids: Vec<TheoremId> = if a.theorem.eq_ignore_ascii_case("all") {
        TheoremId::ALL.to_vec()
    } else {
        vec![a.theorem.parse()?]
    };
    let cfg = SearchConfig {
        jobs: a.jobs.max(1),
        budget: a.budget,
        ..SearchConfig::default()
    };
    let mut report = Report::new("verify", format!("{} (max n = {})", a.theorem, a.max_n));
    for id in ids {
        let r = verify_theorem(id, a.max_n, &cfg)?;
        report.results.extend(theorem_entries(&r, a.float));
    }
    let ok = report.all_satisfied();
    emit(report, started)?;
    Ok(ok)
}

