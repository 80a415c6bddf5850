//! Spectral radius and Perron vector of the adjacency matrix.
//!
//! Power iteration runs on `A + cI` with `c` half of a lower bound for `λ₁`.
//! The shift keeps `λ₁ + c` strictly dominant even when `−λ₁` is also an
//! eigenvalue (bipartite graphs), which would otherwise make the plain
//! iteration oscillate. The eigenvalue estimate is the Rayleigh quotient and
//! convergence is judged by the eigen-residual `‖Ax − λx‖∞`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_MAX_ITERATIONS: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub lambda1: f64,
    /// Eigenvector with maximum entry exactly 1.
    pub vector: Vec<f64>,
    pub iterations: usize,
    /// `‖A·x − λ₁·x‖∞` for the returned pair.
    pub residual: f64,
    /// False for disconnected graphs: the vector is supported on one
    /// component only and need not be positive.
    pub perron_positive: bool,
    /// Several components attain `λ₁` (within the tolerance).
    pub tied_components: bool,
}

/// `λ₁(g)` with the default iteration cap.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult> {
    spectral_radius_with_cap(g, tol, DEFAULT_MAX_ITERATIONS)
}

pub fn spectral_radius_with_cap(g: &Graph, tol: f64, max_iterations: usize) -> Result<SpectralResult> {
    if g.n() == 0 {
        return Err(Error::input("spectral radius of the empty graph"));
    }
    if !(tol > 0.0) {
        return Err(Error::input(format!("tolerance must be positive, got {tol}")));
    }
    let comps = g.components();
    if comps.len() == 1 {
        let mut r = power_iteration(g, tol, max_iterations)?;
        r.perron_positive = true;
        return Ok(r);
    }

    let mut best: Option<(usize, SpectralResult)> = None;
    let mut total_iterations = 0;
    let mut tied = false;
    for (i, comp) in comps.iter().enumerate() {
        let sub = g.induced_subgraph(&VertexSet::from_vertices(g.n(), comp.iter().copied()));
        let r = match power_iteration(&sub, tol, max_iterations) {
            Ok(r) => r,
            Err(Error::Convergence { best }) => {
                return Err(Error::Convergence { best: Box::new(lift(g, comp, &best, false)) })
            }
            Err(e) => return Err(e),
        };
        total_iterations += r.iterations;
        match &best {
            Some((_, b)) if (r.lambda1 - b.lambda1).abs() <= tol => tied = true,
            Some((_, b)) if r.lambda1 < b.lambda1 => {}
            _ => {
                tied = false;
                best = Some((i, r));
            }
        }
    }
    let (i, r) = best.expect("at least one component");
    let mut out = lift(g, &comps[i], &r, tied);
    out.iterations = total_iterations;
    Ok(out)
}

/// Embeds a component result into the full vertex set (zeros elsewhere).
fn lift(g: &Graph, comp: &[usize], r: &SpectralResult, tied: bool) -> SpectralResult {
    let mut vector = vec![0.0; g.n()];
    for (local, &v) in comp.iter().enumerate() {
        vector[v] = r.vector[local];
    }
    SpectralResult {
        lambda1: r.lambda1,
        vector,
        iterations: r.iterations,
        residual: r.residual,
        perron_positive: false,
        tied_components: tied,
    }
}

fn matvec(g: &Graph, x: &[f64], y: &mut [f64]) {
    for (v, yv) in y.iter_mut().enumerate() {
        *yv = g.neighbors(v).map(|u| x[u]).sum();
    }
}

fn power_iteration(g: &Graph, tol: f64, max_iterations: usize) -> Result<SpectralResult> {
    let n = g.n();
    let e = g.edge_count() as f64;
    let lower = (2.0 * e / n as f64).max((g.max_degree() as f64).sqrt());
    let shift = lower / 2.0;

    let mut x = vec![1.0; n];
    let mut y = vec![0.0; n];
    let mut best: Option<SpectralResult> = None;
    for it in 0..=max_iterations {
        matvec(g, &x, &mut y);
        let num: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let den: f64 = x.iter().map(|a| a * a).sum();
        let lambda = num / den;
        let residual = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (b - lambda * a).abs())
            .fold(0.0, f64::max);
        if best.as_ref().is_none_or(|b| residual < b.residual) {
            best = Some(SpectralResult {
                lambda1: lambda,
                vector: x.clone(),
                iterations: it,
                residual,
                perron_positive: false,
                tied_components: false,
            });
        }
        if residual <= tol {
            return Ok(best.expect("just stored"));
        }
        let mut top = 0.0f64;
        for (xv, yv) in x.iter_mut().zip(&y) {
            *xv = yv + shift * *xv;
            top = top.max(xv.abs());
        }
        for xv in &mut x {
            *xv /= top;
        }
    }
    Err(Error::Convergence { best: Box::new(best.expect("at least one iteration")) })
}

/// `1ᵀA1 / 1ᵀ1 = 2e(g)/n`, a lower bound for `λ₁`.
pub fn rayleigh_lower_bound(g: &Graph) -> Result<f64> {
    if g.n() == 0 {
        return Err(Error::input("Rayleigh bound needs at least one vertex"));
    }
    Ok(2.0 * g.edge_count() as f64 / g.n() as f64)
}

/// `x·A·x / x·x` for an arbitrary vector.
pub fn rayleigh_quotient(g: &Graph, x: &[f64]) -> f64 {
    let mut num = 0.0;
    for (u, v) in g.edges() {
        num += 2.0 * x[u] * x[v];
    }
    num / x.iter().map(|a| a * a).sum::<f64>()
}

/// `n/2 − √(⌈n/2⌉⌊n/2⌋)`, which lies in `[0, 1/n)`.
pub fn floor_ceiling_gap(n: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::input(format!("floor_ceiling_gap needs n >= 2, got {n}")));
    }
    if n % 2 == 0 {
        return Ok(0.0);
    }
    // n/2 - sqrt(m(m+1)) with n = 2m+1, rewritten to avoid cancellation:
    // (n²/4 - m(m+1)) / (n/2 + sqrt(m(m+1))) = (1/4) / (n/2 + sqrt(m(m+1)))
    let m = (n / 2) as f64;
    Ok(0.25 / (n as f64 / 2.0 + (m * (m + 1.0)).sqrt()))
}
