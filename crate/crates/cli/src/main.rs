mod args;
mod output;

use std::io::Read;
use std::process::ExitCode;

use clap::Parser;
use fanfree_core::constructions::{
    chvatal_hanson_extremal_graph, ex_fan, extremal_g1, extremal_g2, f_chvatal_hanson, turan_bipartite,
};
use fanfree_core::fan::contains_fan;
use fanfree_core::formats::{graph6_decode, graph6_encode, parse_adjacency_list, to_dot};
use fanfree_core::lemmas::{check_lemma, check_proof_trace_with, LemmaReport, TraceParams};
use fanfree_core::maxcut::max_cut;
use fanfree_core::quotient::{charpoly, charpoly_root, parse_partition, quotient_matrix};
use fanfree_core::search::{exhaustive_extremal, hill_climb_with, ClimbConfig, Objective, SearchReport};
use fanfree_core::spectral::spectral_radius;
use fanfree_core::{Error, Graph};
use rayon::prelude::*;
use serde_json::{json, Value};

use args::{Cli, Command, ConstructArgs, ConstructKind, Format, InputArgs, ObjectiveArg, TableArgs, TableKind};
use output::Emitter;

const EXIT_FAILURES: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Everything that ends a run early. Usage problems exit with 2.
enum Abort {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Abort {
    fn from(e: std::io::Error) -> Self {
        Abort::Io(e)
    }
}

fn usage(msg: impl Into<String>) -> Abort {
    Abort::Usage(msg.into())
}

struct Config {
    tol: f64,
    seed: u64,
    format: Option<Format>,
    adjlist: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(failed) => ExitCode::from(if failed { EXIT_FAILURES } else { 0 }),
        Err(Abort::Usage(msg)) => {
            eprintln!("fanfree: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Abort::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Abort::Io(e)) => {
            eprintln!("fanfree: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<bool, Abort> {
    if !(cli.tol > 0.0) {
        return Err(usage(format!("--tol must be positive, got {}", cli.tol)));
    }
    if cli.workers == 0 {
        return Err(usage("--workers must be at least 1"));
    }
    let seed = match std::env::var("FANFREE_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| usage(format!("FANFREE_SEED is not a 64-bit integer: '{s}'")))?,
        Err(_) => cli.seed,
    };
    let cfg = Config { tol: cli.tol, seed, format: cli.format, adjlist: cli.adjlist };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.workers)
        .build()
        .map_err(|e| usage(format!("cannot start {} workers: {e}", cli.workers)))?;
    pool.install(|| dispatch(cli.command, &cfg))
}

fn dispatch(command: Command, cfg: &Config) -> Result<bool, Abort> {
    match command {
        Command::Construct(a) => construct(a, cfg),
        Command::Table(a) => table(a, cfg),
        Command::CheckFan { k, input } => {
            if k == 0 {
                return Err(usage("--k must be at least 1"));
            }
            pipeline(&input, cfg, Format::Json, |g| {
                let (found, w) = contains_fan(g, k)?;
                Ok((
                    vec![json!({
                        "n": g.n(),
                        "k": k,
                        "contains": found,
                        "center": w.as_ref().map(|w| w.center),
                        "pairs": w.map(|w| w.pairs),
                    })],
                    false,
                ))
            })
        }
        Command::Spectral { input } => pipeline(&input, cfg, Format::Json, |g| {
            let r = spectral_radius(g, cfg.tol)?;
            Ok((
                vec![json!({
                    "n": g.n(),
                    "lambda1": r.lambda1,
                    "residual": r.residual,
                    "iterations": r.iterations,
                    "perron_positive": r.perron_positive,
                    "tied_components": r.tied_components,
                    "vector": r.vector,
                })],
                false,
            ))
        }),
        Command::Quotient { partition, input } => pipeline(&input, cfg, Format::Json, |g| {
            let parts = parse_partition(&partition, g.n())?;
            let q = quotient_matrix(g, &parts)?;
            let poly: Vec<String> = charpoly(&q)?.iter().map(|c| c.to_string()).collect();
            let root = charpoly_root(&q)?;
            Ok((
                vec![json!({
                    "classes": q.classes,
                    "matrix": q.b,
                    "charpoly": poly,
                    "root": root,
                })],
                false,
            ))
        }),
        Command::Maxcut { input } => pipeline(&input, cfg, Format::Json, |g| {
            let c = max_cut(g);
            Ok((vec![json!({"n": g.n(), "size": c.size, "exact": c.exact, "s": c.s, "t": c.t})], false))
        }),
        Command::Verify(a) => {
            if a.k == 0 {
                return Err(usage("--k must be at least 1"));
            }
            let mut params = TraceParams::defaults(a.k);
            if let Some(d) = a.delta {
                params.delta = d;
            }
            if let Some(e) = a.epsilon {
                params.epsilon = e;
            }
            if !(params.delta > 0.0 && params.epsilon > 0.0) {
                return Err(usage("--delta and --epsilon must be positive"));
            }
            let k = a.k;
            let lemma = a.lemma.clone();
            pipeline(&a.input, cfg, Format::Json, move |g| {
                let reports: Vec<LemmaReport> = match &lemma {
                    Some(id) => vec![check_lemma(g, k, id, &params)?],
                    None => check_proof_trace_with(g, k, &params)?,
                };
                let failed = reports.iter().any(|r| !r.passes());
                let rows = reports.iter().map(|r| serde_json::to_value(r).expect("report serializes")).collect();
                Ok((rows, failed))
            })
        }
        Command::Search(a) => search(a, cfg),
    }
}

fn graph_record(g: &Graph) -> Value {
    json!({"n": g.n(), "edge_count": g.edge_count(), "graph6": graph6_encode(g), "edges": g.edges().collect::<Vec<_>>()})
}

fn require(v: Option<usize>, name: &str, kind: &str) -> Result<usize, Abort> {
    v.ok_or_else(|| usage(format!("construct {kind} needs --{name}")))
}

fn construct(a: ConstructArgs, cfg: &Config) -> Result<bool, Abort> {
    let built = match a.kind {
        ConstructKind::Turan => turan_bipartite(require(a.n, "n", "turan")?),
        ConstructKind::G1 => extremal_g1(require(a.n, "n", "g1")?, require(a.k, "k", "g1")?),
        ConstructKind::G2 => extremal_g2(require(a.n, "n", "g2")?, require(a.k, "k", "g2")?),
        ConstructKind::ChvatalHanson => chvatal_hanson_extremal_graph(
            require(a.beta, "beta", "chvatal-hanson")?,
            require(a.delta, "delta", "chvatal-hanson")?,
        ),
    };
    let g = built.map_err(|e| usage(e.to_string()))?;
    let mut out = Emitter::new(cfg.format.unwrap_or(Format::Graph6));
    match cfg.format.unwrap_or(Format::Graph6) {
        Format::Graph6 => out.line(&graph6_encode(&g))?,
        Format::Dot => out.line(to_dot(&g).trim_end())?,
        Format::Csv => {
            out.line("u,v")?;
            for (u, v) in g.edges() {
                out.line(&format!("{u},{v}"))?;
            }
        }
        _ => out.record(&graph_record(&g))?,
    }
    out.flush()?;
    Ok(false)
}

/// `a..b` (inclusive), `a,b,c`, or a single value.
fn parse_values(text: &str, name: &str) -> Result<Vec<u64>, Abort> {
    let bad = || usage(format!("--{name}: cannot parse '{text}'"));
    let mut out = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if let Some((a, b)) = part.split_once("..") {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b): (u64, u64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
            if a > b {
                return Err(usage(format!("--{name}: empty range '{part}'")));
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| bad())?);
        }
    }
    Ok(out)
}

fn values(v: &Option<String>, name: &str) -> Result<Vec<u64>, Abort> {
    parse_values(v.as_deref().ok_or_else(|| usage(format!("table needs --{name}")))?, name)
}

fn table(a: TableArgs, cfg: &Config) -> Result<bool, Abort> {
    let mut out = Emitter::new(cfg.format.unwrap_or(Format::Csv));
    match a.what {
        TableKind::Ex => {
            let (ns, ks) = (values(&a.n, "n")?, values(&a.k, "k")?);
            for &n in &ns {
                for &k in &ks {
                    let v = ex_fan(n, k).map_err(|e| usage(e.to_string()))?;
                    out.record(&json!({"n": n, "k": k, "value": v.value, "in_proven_range": v.in_proven_range}))?;
                }
            }
        }
        TableKind::F => {
            let (bs, ds) = (values(&a.beta, "beta")?, values(&a.delta, "delta")?);
            for &b in &bs {
                for &d in &ds {
                    let v = f_chvatal_hanson(b, d).map_err(|e| usage(e.to_string()))?;
                    out.record(&json!({"beta": b, "delta": d, "value": v}))?;
                }
            }
        }
    }
    out.flush()?;
    Ok(false)
}

fn search(a: args::SearchArgs, cfg: &Config) -> Result<bool, Abort> {
    let objective = match a.objective {
        ObjectiveArg::Edges => Objective::Edges,
        ObjectiveArg::Lambda1 => Objective::Lambda1,
    };
    let report: SearchReport = if a.exhaustive {
        exhaustive_extremal(a.n, a.k, objective)
    } else {
        let mut climb = ClimbConfig::new(a.restarts, cfg.seed, a.n);
        if let Some(s) = a.steps {
            climb.steps = s;
        }
        hill_climb_with(a.n, a.k, objective, &climb)
    }
    .map_err(|e| match e {
        Error::Input(_) | Error::Capability(_) => usage(e.to_string()),
        other => usage(format!("search failed: {other}")),
    })?;
    let mut out = Emitter::new(cfg.format.unwrap_or(Format::Json));
    if cfg.format == Some(Format::Dot) {
        return Err(usage("dot output is only available for construct"));
    }
    if cfg.format == Some(Format::Graph6) {
        for w in &report.witnesses {
            out.line(w)?;
        }
    } else {
        out.record(&serde_json::to_value(&report).expect("report serializes"))?;
    }
    out.flush()?;
    Ok(false)
}

/// Input graphs with their 1-based line numbers; decode failures are kept
/// as errors so they can be reported in place.
fn read_inputs(input: &InputArgs, cfg: &Config) -> Result<Vec<(usize, Result<Graph, Error>)>, Abort> {
    let text = if !input.graphs.is_empty() {
        input.graphs.join("\n")
    } else if let Some(path) = &input.input {
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?
    } else {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    };
    if cfg.adjlist {
        return Ok(vec![(1, parse_adjacency_list(&text, None))]);
    }
    Ok(text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, graph6_decode(l.trim())))
        .collect())
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Input(_) => "input",
        Error::Capability(_) => "capability",
        Error::Parse { .. } => "parse",
        Error::Convergence { .. } => "convergence",
        Error::NotEquitable { .. } => "not-equitable",
        Error::Construction(_) => "construction",
        Error::Internal(_) => "internal",
    }
}

type Outcome = Result<(Vec<Value>, bool), Error>;

/// Applies `f` to every input graph on the worker pool and prints the
/// records in input order. Returns whether anything failed.
fn pipeline<F>(input: &InputArgs, cfg: &Config, default: Format, f: F) -> Result<bool, Abort>
where
    F: Fn(&Graph) -> Outcome + Sync,
{
    let format = cfg.format.unwrap_or(default);
    if matches!(format, Format::Graph6 | Format::Dot) {
        return Err(usage("graph6 and dot output are only available for construct (and graph6 for search)"));
    }
    let items = read_inputs(input, cfg)?;
    let results: Vec<(usize, Outcome)> = items
        .into_par_iter()
        .map(|(line, g)| (line, g.and_then(|g| f(&g))))
        .collect();
    let mut out = Emitter::new(format);
    let mut failed = false;
    for (line, r) in results {
        match r {
            Ok((rows, bad)) => {
                failed |= bad;
                for row in rows {
                    let mut m = serde_json::Map::new();
                    m.insert("line".into(), line.into());
                    if let Value::Object(fields) = row {
                        m.extend(fields);
                    }
                    out.record(&Value::Object(m))?;
                }
            }
            Err(e) => {
                failed = true;
                out.record(&json!({"line": line, "error": e.to_string(), "kind": error_kind(&e)}))?;
            }
        }
    }
    out.flush()?;
    Ok(failed)
}
