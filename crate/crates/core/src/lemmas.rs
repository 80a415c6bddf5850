//! Lemma predicates evaluated on concrete graphs.
//!
//! Each check returns a [`LemmaReport`] recording whether the lemma's
//! hypotheses hold for the input and whether its conclusion does. Several
//! lemmas are stated only for a graph of maximum spectral radius among
//! `F_k`-free graphs of large order; for those, `extremal_conditional` is set
//! and the hypotheses are approximated by a necessary condition: `g` is
//! `F_k`-free and `λ₁(g) >= 2·ex(n, F_k)/n`, the Rayleigh quotient of an
//! edge-extremal graph at the all-ones vector. Reports never claim that `g`
//! is extremal.
//!
//! Integer inequalities are compared exactly; any inequality involving `λ₁`
//! or the eigenvector gets an absolute slack of [`SLACK`].

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::constructions::{ex_fan, f_special, h_star, ExtremalSpec};
use crate::error::{Error, Result};
use crate::fan::contains_fan;
use crate::graph::{Graph, VertexSet};
use crate::matching::matching_number;
use crate::maxcut::{max_cut, Cut};
use crate::spectral::{spectral_radius, SpectralResult, DEFAULT_TOLERANCE};

pub const SLACK: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Quantity {
    Int(i64),
    Real(f64),
}

impl Quantity {
    pub fn as_f64(self) -> f64 {
        match self {
            Quantity::Int(v) => v as f64,
            Quantity::Real(v) => v,
        }
    }
}

impl From<i64> for Quantity {
    fn from(v: i64) -> Self {
        Quantity::Int(v)
    }
}

impl From<usize> for Quantity {
    fn from(v: usize) -> Self {
        Quantity::Int(v as i64)
    }
}

impl From<u64> for Quantity {
    fn from(v: u64) -> Self {
        Quantity::Int(v as i64)
    }
}

impl From<f64> for Quantity {
    fn from(v: f64) -> Self {
        Quantity::Real(v)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub id: String,
    pub hypotheses_hold: bool,
    /// Only meaningful when `hypotheses_hold`.
    pub conclusion_holds: bool,
    pub quantities: BTreeMap<String, Quantity>,
    pub notes: String,
    /// The lemma is proved only for spectral-extremal graphs of large order.
    pub extremal_conditional: bool,
}

impl LemmaReport {
    fn new(id: &str) -> Self {
        LemmaReport {
            id: id.to_string(),
            hypotheses_hold: true,
            conclusion_holds: true,
            quantities: BTreeMap::new(),
            notes: String::new(),
            extremal_conditional: false,
        }
    }

    fn q(mut self, name: &str, v: impl Into<Quantity>) -> Self {
        self.quantities.insert(name.to_string(), v.into());
        self
    }

    fn hyp(mut self, holds: bool) -> Self {
        self.hypotheses_hold &= holds;
        self
    }

    fn concl(mut self, holds: bool) -> Self {
        self.conclusion_holds &= holds;
        self
    }

    fn note(mut self, text: impl AsRef<str>) -> Self {
        if !self.notes.is_empty() {
            self.notes.push_str("; ");
        }
        self.notes.push_str(text.as_ref());
        self
    }

    fn conditional(mut self) -> Self {
        self.extremal_conditional = true;
        self
    }

    /// Hypotheses fail or the conclusion holds.
    pub fn passes(&self) -> bool {
        !self.hypotheses_hold || self.conclusion_holds
    }
}

fn spectrum(g: &Graph) -> Result<SpectralResult> {
    match spectral_radius(g, DEFAULT_TOLERANCE) {
        Ok(r) => Ok(r),
        Err(Error::Convergence { best }) => Ok(*best),
        Err(e) => Err(e),
    }
}

/// `e(g) >= λ₁² − 3t/λ₁`.
pub fn check_triangle_edge_bound(g: &Graph) -> Result<LemmaReport> {
    let e = g.edge_count();
    let t = g.triangle_count();
    let mut r = LemmaReport::new("triangle-edge-bound")
        .q("e", e)
        .q("t", t)
        .hyp(g.is_connected() && e > 0);
    if e == 0 {
        return Ok(r.note("no edges, so lambda1 = 0 and the bound is vacuous"));
    }
    let lam = spectrum(g)?.lambda1;
    let bound = lam * lam - 3.0 * t as f64 / lam;
    r = r.q("lambda1", lam).q("bound", bound).concl(e as f64 >= bound - SLACK);
    if !g.is_connected() {
        r = r.note("graph is disconnected");
    }
    Ok(r)
}

/// `e(g) >= λ₁² − 6t/n` for graphs with `λ₁ >= n/2`.
pub fn check_triangle_corollary(g: &Graph) -> Result<LemmaReport> {
    let n = g.n();
    let e = g.edge_count();
    let t = g.triangle_count();
    if n == 0 {
        return Err(Error::input("graph has no vertices"));
    }
    let lam = spectrum(g)?.lambda1;
    let bound = lam * lam - 6.0 * t as f64 / n as f64;
    Ok(LemmaReport::new("triangle-corollary")
        .q("e", e)
        .q("t", t)
        .q("lambda1", lam)
        .q("bound", bound)
        .hyp(lam >= n as f64 / 2.0)
        .concl(e as f64 >= bound - SLACK))
}

/// `ν(g) <= k−1` implies `e(g) <= k·n`.
pub fn check_matching_edge_bound(g: &Graph, k: usize) -> Result<LemmaReport> {
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    let nu = matching_number(g);
    let e = g.edge_count();
    let cap = k * g.n();
    Ok(LemmaReport::new("matching-edge-bound")
        .q("nu", nu)
        .q("e", e)
        .q("kn", cap)
        .hyp(nu < k)
        .concl(e <= cap))
}

/// `|A₁ ∩ … ∩ A_p| >= Σ|Aᵢ| − (p−1)|A₁ ∪ … ∪ A_p|`.
pub fn check_set_intersection(sets: &[VertexSet]) -> Result<LemmaReport> {
    let Some(first) = sets.first() else {
        return Err(Error::input("need at least one set"));
    };
    if sets.iter().any(|s| s.universe() != first.universe()) {
        return Err(Error::input("sets live over different universes"));
    }
    let inter = sets[1..].iter().fold(first.clone(), |acc, s| acc.intersection(s)).len() as i64;
    let union = sets[1..].iter().fold(first.clone(), |acc, s| acc.union(s)).len() as i64;
    let sum: i64 = sets.iter().map(|s| s.len() as i64).sum();
    let p = sets.len() as i64;
    let rhs = sum - (p - 1) * union;
    Ok(LemmaReport::new("set-intersection")
        .q("p", p)
        .q("intersection", inter)
        .q("union", union)
        .q("sum", sum)
        .q("rhs", rhs)
        .concl(inter >= rhs))
}

/// For `F_k`-free `g`: every neighbourhood has matching number below `k`,
/// so `e(G[N(v)]) <= k·n` and `3t = Σ e(G[N(v)]) <= k·n²`.
pub fn check_fanfree_triangle_budget(g: &Graph, k: usize) -> Result<LemmaReport> {
    let (has_fan, _) = contains_fan(g, k)?;
    let n = g.n() as u64;
    let t = g.triangle_count();
    let mut max_local = 0usize;
    let mut sum_local = 0u64;
    for v in 0..g.n() {
        let local = g.edges_within(&g.neighborhood(v)?);
        max_local = max_local.max(local);
        sum_local += local as u64;
    }
    let k64 = k as u64;
    Ok(LemmaReport::new("fanfree-triangle-budget")
        .q("t", t)
        .q("three_t", 3 * t)
        .q("kn2", k64 * n * n)
        .q("max_neighborhood_edges", max_local)
        .q("kn", k64 * n)
        .hyp(!has_fan)
        .concl(sum_local == 3 * t && 3 * t <= k64 * n * n && max_local as u64 <= k64 * n))
}

/// The constants of the max-cut lemma: `δ < 1/(4k)`, `ε < δ²/3`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceParams {
    pub delta: f64,
    pub epsilon: f64,
}

impl TraceParams {
    /// `δ = 1/(8k)`, `ε = δ²/6`.
    pub fn defaults(k: usize) -> Self {
        let delta = 1.0 / (8.0 * k as f64);
        TraceParams { delta, epsilon: delta * delta / 6.0 }
    }

    pub fn within_lemma_range(&self, k: usize) -> bool {
        self.delta < 1.0 / (4.0 * k as f64) && self.epsilon < self.delta * self.delta / 3.0
    }
}

/// Everything the trace needs, computed once.
struct TraceContext<'a> {
    g: &'a Graph,
    k: usize,
    n: usize,
    e: usize,
    fan_free: bool,
    connected: bool,
    spec: SpectralResult,
    cut: Cut,
    /// `g` could be spectral-extremal as far as cheap necessary conditions go.
    gate: bool,
    ex: u64,
    f: u64,
}

impl<'a> TraceContext<'a> {
    fn new(g: &'a Graph, k: usize) -> Result<Self> {
        let n = g.n();
        if n == 0 {
            return Err(Error::input("graph has no vertices"));
        }
        let fan_free = !contains_fan(g, k)?.0;
        let spec = spectrum(g)?;
        let ex = ex_fan(n as u64, k as u64)?.value;
        let gate = fan_free && spec.lambda1 >= 2.0 * ex as f64 / n as f64 - SLACK;
        Ok(TraceContext {
            g,
            k,
            n,
            e: g.edge_count(),
            fan_free,
            connected: g.is_connected(),
            cut: max_cut(g),
            spec,
            gate,
            ex,
            f: f_special(k as u64),
        })
    }

    fn lambda(&self) -> f64 {
        self.spec.lambda1
    }

    fn base(&self, id: &str) -> LemmaReport {
        let mut r = LemmaReport::new(id).hyp(self.fan_free && self.connected);
        if !self.fan_free {
            r = r.note(format!("graph contains F_{}", self.k));
        }
        if !self.connected {
            r = r.note("graph is disconnected");
        }
        r
    }

    fn conditional(&self, id: &str) -> LemmaReport {
        let mut r = self.base(id).conditional().hyp(self.gate);
        if self.fan_free && !self.gate {
            r = r.note("lambda1 below 2 ex(n,F_k)/n, so g is not spectral-extremal");
        }
        r
    }

    /// `L = {v : d(v) <= (1/2 − 1/(4(k+1)))n}`, compared exactly as
    /// `4(k+1)d(v) <= (2k+1)n`.
    fn low_degree(&self) -> VertexSet {
        let k = self.k;
        VertexSet::from_vertices(
            self.n,
            (0..self.n).filter(|&v| 4 * (k + 1) * self.g.degree_unchecked(v) <= (2 * k + 1) * self.n),
        )
    }

    fn side_sizes(&self) -> (usize, usize) {
        (self.cut.s.len(), self.cut.t.len())
    }
}

fn rayleigh_bound(c: &TraceContext) -> LemmaReport {
    let n = c.n as f64;
    let rhs = 2.0 * ((c.n / 2) * c.n.div_ceil(2)) as f64 / n + 2.0 * c.f as f64 / n;
    let mut r = c
        .conditional("rayleigh-bound")
        .q("lambda1", c.lambda())
        .q("rhs", rhs)
        .q("half_n", n / 2.0)
        .hyp(c.k >= 2)
        .concl(c.lambda() >= rhs - SLACK && rhs > n / 2.0);
    if c.k < 2 {
        r = r.note("for k = 1, f(0,0) = 0 and the strict bound above n/2 fails for even n");
    }
    r
}

fn maxcut_lemma(c: &TraceContext, p: &TraceParams) -> LemmaReport {
    let n = c.n as f64;
    let (s, t) = c.side_sizes();
    let eps = p.epsilon;
    let lo = (0.5 - eps.sqrt()) * n;
    let hi = (0.5 + eps.sqrt()) * n;
    let mut r = c
        .conditional("maxcut")
        .q("delta", p.delta)
        .q("epsilon", eps)
        .q("e_st", c.cut.size)
        .q("cut_bound", (0.25 - eps) * n * n)
        .q("s", s)
        .q("t", t)
        .hyp(p.within_lemma_range(c.k))
        .concl(c.cut.size as f64 >= (0.25 - eps) * n * n)
        .concl([s, t].iter().all(|&x| lo <= x as f64 && x as f64 <= hi));
    if !p.within_lemma_range(c.k) {
        r = r.note("delta, epsilon outside delta < 1/(4k), epsilon < delta^2/3");
    }
    if !c.cut.exact {
        r = r.note("cut is locally optimal, not certified maximum");
    }
    r
}

fn l_upper(c: &TraceContext, low: &VertexSet) -> LemmaReport {
    c.conditional("l-upper")
        .q("l_size", low.len())
        .q("bound", 16 * c.k * c.k)
        .hyp(c.k >= 2)
        .concl(low.len() <= 16 * c.k * c.k)
}

fn w_minus_l(c: &TraceContext, low: &VertexSet, p: &TraceParams) -> LemmaReport {
    let n = c.n as f64;
    let threshold = p.delta * n;
    let g = c.g;
    let w = VertexSet::from_vertices(
        c.n,
        (0..c.n).filter(|&v| {
            let own = if c.cut.s.contains(v) { &c.cut.s } else { &c.cut.t };
            g.degree_into_unchecked(v, own) as f64 >= threshold
        }),
    );
    let k = c.k as f64;
    let bound = 2.0 * p.epsilon * n / p.delta + 2.0 * k * k / (p.delta * n);
    let outside = w.difference(low).len();
    c.conditional("w-minus-l-empty")
        .q("w_size", w.len())
        .q("w_bound", bound)
        .q("w_minus_l", outside)
        .q("threshold", threshold)
        .hyp(p.within_lemma_range(c.k))
        .concl((w.len() as f64) < bound && outside == 0)
}

fn l_empty(c: &TraceContext, low: &VertexSet) -> LemmaReport {
    c.conditional("l-empty").q("l_size", low.len()).concl(low.is_empty())
}

fn refine(c: &TraceContext) -> LemmaReport {
    let g = c.g;
    let (s, t) = c.side_sizes();
    let (n, k) = (c.n as i64, c.k as i64);
    let inner = g.edges_within(&c.cut.s) + g.edges_within(&c.cut.t);
    let min_deg = g.min_degree() as i64;
    let max_deg = g.max_degree() as i64;
    let lam = c.lambda();
    let e = c.e as i64;
    let sides_ok = [s as i64, t as i64].iter().all(|&x| n - 8 * k <= 2 * x && 2 * x <= n + 8 * k);
    c.conditional("refine")
        .q("inner_edges", inner)
        .q("inner_bound", 2 * c.f)
        .q("s", s)
        .q("t", t)
        .q("e", c.e)
        .q("e_bound", n * n / 4 - 12 * k * k)
        .q("min_degree", min_deg)
        .q("max_degree", max_deg)
        .q("lambda1", lam)
        .concl(inner as u64 <= 2 * c.f)
        .concl(sides_ok)
        .concl(4 * e >= n * n - 48 * k * k)
        .concl(2 * min_deg >= n - 28 * k * k)
        .concl(min_deg as f64 <= lam + SLACK && lam <= max_deg as f64 + SLACK)
        .concl(2 * max_deg <= n + 10 * k)
}

fn eigenvector_entries(c: &TraceContext) -> LemmaReport {
    let min_x = c.spec.vector.iter().copied().fold(f64::INFINITY, f64::min);
    let k = c.k as f64;
    let bound = 1.0 - 116.0 * k * k / c.n as f64;
    c.conditional("eigenvector-entries")
        .q("min_x", min_x)
        .q("bound", bound)
        .concl(min_x >= bound - SLACK)
}

fn balance(c: &TraceContext) -> LemmaReport {
    let (s, t) = c.side_sizes();
    c.conditional("balance")
        .q("s", s)
        .q("t", t)
        .q("difference", s.abs_diff(t))
        .concl(s.abs_diff(t) <= 1)
}

/// Runs every lemma of the spectral proof on `g`, sorted by id.
pub fn check_proof_trace(g: &Graph, k: usize) -> Result<Vec<LemmaReport>> {
    check_proof_trace_with(g, k, &TraceParams::defaults(k))
}

pub fn check_proof_trace_with(g: &Graph, k: usize, params: &TraceParams) -> Result<Vec<LemmaReport>> {
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    if !(params.delta > 0.0 && params.epsilon > 0.0) {
        return Err(Error::input("delta and epsilon must be positive"));
    }
    let c = TraceContext::new(g, k)?;
    let low = c.low_degree();
    let mut out = vec![
        rayleigh_bound(&c),
        maxcut_lemma(&c, params),
        l_upper(&c, &low),
        w_minus_l(&c, &low, params),
        l_empty(&c, &low),
        refine(&c),
        eigenvector_entries(&c),
        balance(&c),
        check_triangle_edge_bound(g)?,
        check_triangle_corollary(g)?,
        check_fanfree_triangle_budget(g, k)?,
    ];
    for r in &mut out {
        r.quantities.insert("ex".into(), c.ex.into());
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(out)
}

/// Ids produced by [`check_proof_trace`], sorted.
pub const TRACE_IDS: [&str; 11] = [
    "balance",
    "eigenvector-entries",
    "fanfree-triangle-budget",
    "l-empty",
    "l-upper",
    "maxcut",
    "rayleigh-bound",
    "refine",
    "triangle-corollary",
    "triangle-edge-bound",
    "w-minus-l-empty",
];

/// Runs a single lemma by id. `set-intersection` needs explicit sets and is
/// not available here.
pub fn check_lemma(g: &Graph, k: usize, id: &str, params: &TraceParams) -> Result<LemmaReport> {
    match id {
        "matching-edge-bound" => check_matching_edge_bound(g, k),
        "perturbation-step" => check_perturbation_step(g, k),
        _ if TRACE_IDS.contains(&id) => Ok(check_proof_trace_with(g, k, params)?
            .into_iter()
            .find(|r| r.id == id)
            .expect("id listed")),
        other => Err(Error::input(format!("unknown lemma id '{other}'"))),
    }
}

/// The inner graph placed inside one side: two `K_k` for odd `k`, `H*` for
/// even `k`.
fn inner_template(k: usize) -> Result<Graph> {
    if k % 2 == 1 {
        let mut edges = Vec::new();
        for base in [0, k] {
            for u in base..base + k {
                for v in u + 1..base + k {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(2 * k, &edges)
    } else {
        h_star(k)
    }
}

/// `H = K(S,T)` plus the template on `side`, with template vertices mapped to
/// the side's vertices that carry inner edges first (grouped by component of
/// `G[side]`, ascending), then the remaining side vertices ascending.
fn template_on_side(g: &Graph, side: &VertexSet, other: &VertexSet, template: &Graph) -> Option<Graph> {
    if side.len() < template.n() {
        return None;
    }
    let sub = g.induced_subgraph(side);
    let labels = side.to_vec();
    let mut order = Vec::with_capacity(side.len());
    for comp in sub.components() {
        if comp.len() > 1 {
            order.extend(comp.iter().map(|&i| labels[i]));
        }
    }
    for &v in &labels {
        if !order.contains(&v) {
            order.push(v);
        }
    }
    let mut h = Graph::empty_unchecked(g.n());
    for u in side.iter() {
        for v in other.iter() {
            h.insert_edge(u, v);
        }
    }
    for (a, b) in template.edges() {
        h.insert_edge(order[a], order[b]);
    }
    Some(h)
}

/// The final comparison in the spectral proof: move `g` to an edge-extremal
/// graph `H` on its own max-cut sides and compare spectral radii.
pub fn check_perturbation_step(g: &Graph, k: usize) -> Result<LemmaReport> {
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    let n = g.n();
    if n == 0 {
        return Err(Error::input("graph has no vertices"));
    }
    let ex = ex_fan(n as u64, k as u64)?.value;
    let e = g.edge_count() as u64;
    let fan_free = !contains_fan(g, k)?.0;
    let spec = ExtremalSpec { n, k };
    let cut = max_cut(g);
    let balanced = cut.s.len().abs_diff(cut.t.len()) <= 1;

    let mut r = LemmaReport::new("perturbation-step")
        .q("e", e)
        .q("ex", ex)
        .hyp(fan_free)
        .hyp(e < ex)
        .hyp(spec.construction_valid())
        .hyp(balanced)
        .hyp(g.is_connected());
    if !fan_free {
        r = r.note(format!("graph contains F_{k}"));
    }
    if e >= ex {
        r = r.note("e(g) is not below the extremal number");
    }
    if !spec.construction_valid() {
        r = r.note(format!("no extremal construction for n = {n}, k = {k}"));
    }
    if !balanced {
        r = r.note("max-cut sides differ by more than one");
    }
    if !r.hypotheses_hold {
        return Ok(r.concl(false));
    }

    let template = inner_template(k)?;
    let mut best: Option<(usize, Graph)> = None;
    for (side, other) in [(&cut.s, &cut.t), (&cut.t, &cut.s)] {
        if let Some(h) = template_on_side(g, side, other, &template) {
            let diff = g.edges().filter(|&(u, v)| !h.has_edge(u, v)).count()
                + h.edges().filter(|&(u, v)| !g.has_edge(u, v)).count();
            if best.as_ref().is_none_or(|b| diff < b.0) {
                best = Some((diff, h));
            }
        }
    }
    let Some((_, h)) = best else {
        return Ok(r.hyp(false).note("template does not fit in either side"));
    };

    let sg = spectrum(g)?;
    let sh = spectrum(&h)?;
    let x = &sg.vector;
    let xx: f64 = x.iter().map(|a| a * a).sum();
    let plus: Vec<(usize, usize)> = h.edges().filter(|&(u, v)| !g.has_edge(u, v)).collect();
    let minus: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| !h.has_edge(u, v)).collect();
    let sum = |es: &[(usize, usize)]| es.iter().map(|&(u, v)| x[u] * x[v]).sum::<f64>();
    let delta = 2.0 / xx * (sum(&plus) - sum(&minus));
    let h_free = !contains_fan(&h, k)?.0;

    Ok(r.q("e_plus", plus.len())
        .q("e_minus", minus.len())
        .q("e_h", h.edge_count())
        .q("rayleigh_delta", delta)
        .q("lambda1_g", sg.lambda1)
        .q("lambda1_h", sh.lambda1)
        .concl(h_free && h.edge_count() as u64 == ex)
        .concl(plus.len() > minus.len())
        .concl(sh.lambda1 > sg.lambda1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{extremal_g1, extremal_g2, turan_bipartite};
    use crate::families;

    #[test]
    fn triangle_bound_examples() {
        let r = check_triangle_edge_bound(&families::complete(5)).unwrap();
        assert!(r.hypotheses_hold && r.conclusion_holds);
        assert_eq!(r.quantities["t"], Quantity::Int(10));
        match r.quantities["bound"] {
            Quantity::Real(b) => assert!((b - 8.5).abs() < 1e-8),
            _ => panic!(),
        }
        assert!(check_triangle_edge_bound(&families::complete_bipartite(4, 4)).unwrap().conclusion_holds);
        assert!(check_triangle_edge_bound(&families::cycle(5)).unwrap().conclusion_holds);
    }

    #[test]
    fn matching_bound_examples() {
        let two_k3 = families::disjoint_union(&families::complete(3), &families::complete(3));
        let r = check_matching_edge_bound(&two_k3, 3).unwrap();
        assert!(r.hypotheses_hold && r.conclusion_holds);
        assert!(!check_matching_edge_bound(&families::star(50), 1).unwrap().hypotheses_hold);
        let edge = families::complete(2);
        assert!(!check_matching_edge_bound(&edge, 1).unwrap().hypotheses_hold);
        let r = check_matching_edge_bound(&edge, 2).unwrap();
        assert!(r.hypotheses_hold && r.conclusion_holds);
    }

    #[test]
    fn set_examples() {
        let a = VertexSet::from_vertices(10, [1, 2, 3]);
        let r = check_set_intersection(&[a.clone(), a.clone(), a.clone()]).unwrap();
        assert!(r.conclusion_holds);
        assert_eq!(r.quantities["rhs"], Quantity::Int(3));
        let b = VertexSet::from_vertices(10, [5, 6]);
        let r = check_set_intersection(&[a, b]).unwrap();
        assert_eq!(r.quantities["rhs"], Quantity::Int(0));
        assert!(r.conclusion_holds);
        assert!(check_set_intersection(&[]).is_err());
    }

    #[test]
    fn budget_examples() {
        let r = check_fanfree_triangle_budget(&extremal_g1(14, 3).unwrap(), 3).unwrap();
        assert!(r.hypotheses_hold && r.conclusion_holds);
        let r = check_fanfree_triangle_budget(&turan_bipartite(20).unwrap(), 2).unwrap();
        assert_eq!(r.quantities["t"], Quantity::Int(0));
        assert!(!check_fanfree_triangle_budget(&families::complete(7), 3).unwrap().hypotheses_hold);
    }

    #[test]
    fn trace_on_constructions() {
        for (g, k) in [(extremal_g1(200, 3).unwrap(), 3), (extremal_g2(200, 4).unwrap(), 4)] {
            let trace = check_proof_trace(&g, k).unwrap();
            let ids: Vec<&str> = trace.iter().map(|r| r.id.as_str()).collect();
            assert_eq!(ids, TRACE_IDS);
            for r in &trace {
                assert!(r.hypotheses_hold, "{} {}", r.id, r.notes);
                assert!(r.conclusion_holds, "{r:?}");
            }
        }
    }

    #[test]
    fn sparse_graph_fails_gate() {
        let g = families::cycle(200);
        let trace = check_proof_trace(&g, 2).unwrap();
        let rb = trace.iter().find(|r| r.id == "rayleigh-bound").unwrap();
        assert!(!rb.hypotheses_hold && !rb.conclusion_holds);
    }

    #[test]
    fn perturbation_examples() {
        let g1 = extremal_g1(100, 3).unwrap();
        let g = g1.without_edge(0, 60).unwrap();
        let r = check_perturbation_step(&g, 3).unwrap();
        assert!(r.hypotheses_hold && r.conclusion_holds, "{r:?}");
        assert_eq!(r.quantities["e_plus"], Quantity::Int(1));
        assert_eq!(r.quantities["e_minus"], Quantity::Int(0));

        assert!(!check_perturbation_step(&g1, 3).unwrap().hypotheses_hold);

        let r = check_perturbation_step(&turan_bipartite(100).unwrap(), 2).unwrap();
        assert!(r.hypotheses_hold && r.conclusion_holds);
        assert_eq!(r.quantities["e_plus"], Quantity::Int(1));
        assert_eq!(r.quantities["e_minus"], Quantity::Int(0));
    }
}
