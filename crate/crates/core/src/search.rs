//! Extremal search: exhaustive over isomorphism classes for small orders,
//! seeded hill climbing beyond.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CANONICAL_CAP};
use crate::constructions::ExtremalSpec;
use crate::enumerate::{enumerate_graphs, ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::fan::{contains_fan, fan_at_any, is_fan_free};
use crate::formats::graph6_encode;
use crate::graph::{Graph, LARGE_VERTEX_CAP};
use crate::spectral::{spectral_radius, DEFAULT_TOLERANCE};

/// Two spectral radii closer than this count as equal.
pub const LAMBDA_TIE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Edges,
    Lambda1,
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::Edges => "edges",
            Objective::Lambda1 => "lambda1",
        })
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edges" => Ok(Objective::Edges),
            "lambda1" => Ok(Objective::Lambda1),
            other => Err(Error::input(format!("unknown objective '{other}' (edges or lambda1)"))),
        }
    }
}

/// How the search optimum relates to `G¹`/`G²` at the same `(n, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructionComparison {
    Equal,
    ConstructionSuboptimal,
    /// The construction beats everything the search found (possible only
    /// for hill climbing, which is not exhaustive).
    SearchSuboptimal,
    ConstructionInfeasible,
    /// `n` is below the order at which the construction is defined.
    Undefined,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: usize,
    pub k: usize,
    pub objective: Objective,
    pub best_value: f64,
    /// graph6 strings, canonical when `n <= 10`, sorted.
    pub witnesses: Vec<String>,
    pub graphs_examined: u64,
    pub exhaustive: bool,
    pub construction_comparison: ConstructionComparison,
}

fn evaluate(g: &Graph, objective: Objective) -> f64 {
    match objective {
        Objective::Edges => g.edge_count() as f64,
        Objective::Lambda1 => lambda1(g),
    }
}

fn lambda1(g: &Graph) -> f64 {
    match spectral_radius(g, DEFAULT_TOLERANCE) {
        Ok(r) => r.lambda1,
        Err(Error::Convergence { best }) => best.lambda1,
        Err(_) => 0.0,
    }
}

fn same_value(a: f64, b: f64, objective: Objective) -> bool {
    match objective {
        Objective::Edges => a == b,
        Objective::Lambda1 => (a - b).abs() <= LAMBDA_TIE,
    }
}

fn witness_string(g: &Graph) -> String {
    if g.n() <= CANONICAL_CAP {
        String::from_utf8(canonical_form(g).expect("order within cap")).expect("graph6 is ASCII")
    } else {
        graph6_encode(g)
    }
}

fn compare_construction(n: usize, k: usize, objective: Objective, best: f64) -> ConstructionComparison {
    let spec = ExtremalSpec { n, k };
    if !spec.construction_valid() {
        return ConstructionComparison::Undefined;
    }
    let Ok(g) = spec.build() else {
        return ConstructionComparison::Undefined;
    };
    if !is_fan_free(&g, k).unwrap_or(false) {
        return ConstructionComparison::ConstructionInfeasible;
    }
    let value = evaluate(&g, objective);
    if same_value(value, best, objective) {
        ConstructionComparison::Equal
    } else if value < best {
        ConstructionComparison::ConstructionSuboptimal
    } else {
        ConstructionComparison::SearchSuboptimal
    }
}

fn check_params(n: usize, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    if n == 0 {
        return Err(Error::input("n must be at least 1"));
    }
    Ok(())
}

/// Best `F_k`-free graphs on `n <= 9` vertices over all isomorphism classes.
///
/// For the spectral objective only classes to which no edge can be added
/// are evaluated: adding an edge never lowers `λ₁`, so the maximum is
/// attained among them.
pub fn exhaustive_extremal(n: usize, k: usize, objective: Objective) -> Result<SearchReport> {
    check_params(n, k)?;
    if n > ENUMERATION_CAP {
        return Err(Error::capability(format!(
            "exhaustive search supports n <= {ENUMERATION_CAP}, got {n}"
        )));
    }
    let keep = move |g: &Graph| is_fan_free(g, k).unwrap_or(false);
    let classes = enumerate_graphs(n, &keep)?;

    let (best_value, mut witnesses) = match objective {
        Objective::Edges => {
            let top = classes.max_edges();
            let w: Vec<String> = classes.levels[top]
                .iter()
                .map(|&key| witness_string(&crate::canon::graph_from_key(n, key)))
                .collect();
            (top as f64, w)
        }
        Objective::Lambda1 => {
            let scored: Vec<(f64, Graph)> = classes
                .maximal_graphs()
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|g| (lambda1(&g), g))
                .collect();
            let best = scored.iter().map(|s| s.0).fold(f64::MIN, f64::max);
            let w = scored
                .iter()
                .filter(|s| best - s.0 <= LAMBDA_TIE)
                .map(|s| witness_string(&s.1))
                .collect();
            (best, w)
        }
    };
    witnesses.sort();
    witnesses.dedup();
    Ok(SearchReport {
        n,
        k,
        objective,
        best_value,
        witnesses,
        graphs_examined: classes.count() as u64,
        exhaustive: true,
        construction_comparison: compare_construction(n, k, objective, best_value),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClimbConfig {
    pub restarts: usize,
    pub seed: u64,
    /// Moves attempted per restart.
    pub steps: usize,
}

impl ClimbConfig {
    pub fn new(restarts: usize, seed: u64, n: usize) -> Self {
        ClimbConfig { restarts, seed, steps: default_steps(n) }
    }
}

pub fn default_steps(n: usize) -> usize {
    (50 * n).clamp(2_000, 100_000)
}

/// Full fan re-check interval during a climb.
const RECERTIFY_EVERY: usize = 1024;

/// Hill climbing with the default step budget.
pub fn hill_climb_extremal(
    n: usize,
    k: usize,
    objective: Objective,
    restarts: usize,
    seed: u64,
) -> Result<SearchReport> {
    hill_climb_with(n, k, objective, &ClimbConfig::new(restarts, seed, n))
}

/// Independent climbs from each restart; restart 0 starts at `G¹`/`G²` when
/// defined, the others at the empty graph. Restart `r` draws from ChaCha8
/// stream `r` of `seed`, so results do not depend on the thread count.
pub fn hill_climb_with(n: usize, k: usize, objective: Objective, cfg: &ClimbConfig) -> Result<SearchReport> {
    check_params(n, k)?;
    if n > LARGE_VERTEX_CAP {
        return Err(Error::capability(format!("hill climb supports n <= {LARGE_VERTEX_CAP}, got {n}")));
    }
    if cfg.restarts == 0 {
        return Err(Error::input("at least one restart is required"));
    }
    let spec = ExtremalSpec { n, k };
    let seeded = if spec.construction_valid() { Some(spec.build()?) } else { None };

    let runs: Vec<(f64, Graph, u64)> = (0..cfg.restarts)
        .into_par_iter()
        .map(|r| {
            let start = match (&seeded, r) {
                (Some(g), 0) => g.clone(),
                _ => Graph::empty_unchecked(n),
            };
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(r as u64);
            climb(start, k, objective, cfg.steps, &mut rng)
        })
        .collect::<Result<_>>()?;

    let best = runs.iter().map(|r| r.0).fold(f64::MIN, f64::max);
    let mut witnesses: Vec<String> = runs
        .iter()
        .filter(|r| same_value(r.0, best, objective))
        .map(|r| witness_string(&r.1))
        .collect();
    witnesses.sort();
    witnesses.dedup();
    Ok(SearchReport {
        n,
        k,
        objective,
        best_value: best,
        witnesses,
        graphs_examined: runs.iter().map(|r| r.2).sum(),
        exhaustive: false,
        construction_comparison: compare_construction(n, k, objective, best),
    })
}

enum Move {
    Add(usize, usize),
    Delete(usize, usize),
    /// Replace edge `(u, v)` by `(u, w)`.
    Rotate(usize, usize, usize),
}

fn random_edge(g: &Graph, rng: &mut ChaCha8Rng) -> Option<(usize, usize)> {
    let n = g.n();
    for _ in 0..4 * n {
        let u = rng.random_range(0..n);
        let d = g.degree_unchecked(u);
        if d > 0 {
            let v = g.neighbors(u).nth(rng.random_range(0..d)).expect("degree counted");
            return Some((u, v));
        }
    }
    None
}

fn propose(g: &Graph, objective: Objective, rng: &mut ChaCha8Rng) -> Option<Move> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    // deleting an edge can only lower the edge count, so it is skipped there
    let kinds = if objective == Objective::Edges { 2 } else { 3 };
    match rng.random_range(0..kinds) {
        0 => {
            let u = rng.random_range(0..n);
            let v = rng.random_range(0..n);
            (u != v && !g.has_edge(u, v)).then_some(Move::Add(u, v))
        }
        1 => {
            let (u, v) = random_edge(g, rng)?;
            let w = rng.random_range(0..n);
            (w != u && w != v && !g.has_edge(u, w)).then_some(Move::Rotate(u, v, w))
        }
        _ => {
            let (u, v) = random_edge(g, rng)?;
            Some(Move::Delete(u, v))
        }
    }
}

/// Whether inserting `(u, v)` into the fan-free `g` (already applied in
/// `h`) creates an `F_k`. A new fan must use the new edge, either as a spoke
/// (centre `u` or `v`) or as a rim edge (centre a common neighbour).
fn creates_fan(h: &Graph, u: usize, v: usize, k: usize) -> bool {
    let common: Vec<usize> = h.neighbors(u).filter(|&w| h.has_edge(v, w)).collect();
    fan_at_any(h, [u, v].into_iter().chain(common), k)
}

fn climb(
    mut g: Graph,
    k: usize,
    objective: Objective,
    steps: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(f64, Graph, u64)> {
    let mut value = evaluate(&g, objective);
    let mut examined = 0u64;
    for step in 0..steps {
        let Some(mv) = propose(&g, objective, rng) else { continue };
        let mut h = g.clone();
        let feasible = match mv {
            Move::Add(u, v) => {
                h.insert_edge(u, v);
                !creates_fan(&h, u, v, k)
            }
            Move::Delete(u, v) => {
                h.remove_edge(u, v);
                true
            }
            Move::Rotate(u, v, w) => {
                h.remove_edge(u, v);
                h.insert_edge(u, w);
                !creates_fan(&h, u, w, k)
            }
        };
        examined += 1;
        if feasible {
            let candidate = evaluate(&h, objective);
            if candidate >= value {
                g = h;
                value = candidate;
            }
        }
        if step % RECERTIFY_EVERY == RECERTIFY_EVERY - 1 && contains_fan(&g, k)?.0 {
            return Err(Error::Internal(format!("hill climb left the F_{k}-free region")));
        }
    }
    if contains_fan(&g, k)?.0 {
        return Err(Error::Internal(format!("hill climb left the F_{k}-free region")));
    }
    Ok((value, g, examined))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::constructions::turan_bipartite;

    #[test]
    fn mantel_small() {
        let r = exhaustive_extremal(5, 1, Objective::Edges).unwrap();
        assert_eq!(r.best_value, 6.0);
        assert_eq!(r.witnesses.len(), 1);
        let k23 = String::from_utf8(canonical_form(&turan_bipartite(5).unwrap()).unwrap()).unwrap();
        assert_eq!(r.witnesses[0], k23);
        assert!(r.exhaustive);
        assert_eq!(r.construction_comparison, ConstructionComparison::Equal);

        let r = exhaustive_extremal(2, 1, Objective::Edges).unwrap();
        assert_eq!(r.best_value, 1.0);
    }

    #[test]
    fn spectral_k33() {
        let r = exhaustive_extremal(6, 1, Objective::Lambda1).unwrap();
        assert!((r.best_value - 3.0).abs() < 1e-9);
        let k33 = String::from_utf8(canonical_form(&turan_bipartite(6).unwrap()).unwrap()).unwrap();
        assert_eq!(r.witnesses, vec![k33]);
    }

    #[test]
    fn exhaustive_errors() {
        assert!(matches!(exhaustive_extremal(10, 1, Objective::Edges), Err(Error::Capability(_))));
        assert!(matches!(exhaustive_extremal(5, 0, Objective::Edges), Err(Error::Input(_))));
    }

    #[test]
    fn climb_from_construction_keeps_value() {
        let cfg = ClimbConfig { restarts: 2, seed: 7, steps: 500 };
        let r = hill_climb_with(14, 3, Objective::Edges, &cfg).unwrap();
        assert!(r.best_value >= 55.0);
        assert!(!r.exhaustive);
        let again = hill_climb_with(14, 3, Objective::Edges, &cfg).unwrap();
        assert_eq!(r, again);
    }

    #[test]
    fn climb_from_empty_stays_fan_free() {
        let cfg = ClimbConfig { restarts: 3, seed: 1, steps: 3000 };
        let r = hill_climb_with(9, 2, Objective::Edges, &cfg).unwrap();
        assert!(r.best_value >= 1.0);
        assert_eq!(r.construction_comparison, ConstructionComparison::Equal);
    }

    #[test]
    fn objective_parsing() {
        assert_eq!("edges".parse::<Objective>().unwrap(), Objective::Edges);
        assert_eq!("lambda1".parse::<Objective>().unwrap(), Objective::Lambda1);
        assert!("x".parse::<Objective>().is_err());
        assert_eq!(serde_json::to_string(&Objective::Lambda1).unwrap(), "\"lambda1\"");
    }
}
