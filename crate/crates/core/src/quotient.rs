//! Quotient matrices of equitable partitions and their characteristic
//! polynomials.
//!
//! The quotient of an equitable partition shares its largest eigenvalue with
//! the graph. Entries are neighbour counts, so the characteristic polynomial
//! is computed exactly over the integers (Faddeev–LeVerrier: every division
//! in the recurrence is exact) and only the root is found in floating point.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest quotient dimension accepted by [`charpoly`] and [`charpoly_root`].
pub const QUOTIENT_DIM_CAP: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientMatrix {
    pub classes: Vec<usize>,
    /// `b[i][j]`: neighbours in class `j` of any vertex of class `i`.
    pub b: Vec<Vec<i64>>,
}

impl QuotientMatrix {
    pub fn dim(&self) -> usize {
        self.b.len()
    }

    pub fn max_row_sum(&self) -> i64 {
        self.b.iter().map(|r| r.iter().sum::<i64>()).max().unwrap_or(0)
    }
}

/// Quotient matrix of `partition`, verified vertex by vertex.
pub fn quotient_matrix(g: &Graph, partition: &[VertexSet]) -> Result<QuotientMatrix> {
    let n = g.n();
    let mut seen = VertexSet::new(n);
    for (i, class) in partition.iter().enumerate() {
        if class.universe() != n {
            return Err(Error::input(format!("class {i} is over {} vertices, graph has {n}", class.universe())));
        }
        if class.is_empty() {
            return Err(Error::input(format!("class {i} is empty")));
        }
        if !seen.is_disjoint(class) {
            return Err(Error::input(format!("class {i} overlaps an earlier class")));
        }
        seen = seen.union(class);
    }
    if seen.len() != n {
        return Err(Error::input(format!("partition covers {} of {n} vertices", seen.len())));
    }

    let mut b = Vec::with_capacity(partition.len());
    for class in partition {
        let rep = class.iter().next().expect("non-empty");
        b.push(
            partition
                .iter()
                .map(|c| g.degree_into_unchecked(rep, c) as i64)
                .collect::<Vec<_>>(),
        );
    }
    for (i, class) in partition.iter().enumerate() {
        for v in class.iter() {
            for (j, other) in partition.iter().enumerate() {
                let found = g.degree_into_unchecked(v, other);
                if found as i64 != b[i][j] {
                    return Err(Error::NotEquitable { vertex: v, class: j, found, expected: b[i][j] as usize });
                }
            }
        }
    }
    Ok(QuotientMatrix { classes: partition.iter().map(|c| c.len()).collect(), b })
}

/// Parses `"0,1,2|3,4|5"` into classes over `n` vertices.
pub fn parse_partition(text: &str, n: usize) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split('|') {
        let mut class = VertexSet::new(n);
        for item in part.split(',') {
            let t = item.trim();
            let v: usize = t
                .parse()
                .map_err(|e| Error::parse(offset, format!("bad vertex '{t}': {e}")))?;
            if v >= n {
                return Err(Error::parse(offset, format!("vertex {v} out of range for n = {n}")));
            }
            class.insert(v);
            offset += item.len() + 1;
        }
        out.push(class);
    }
    Ok(out)
}

/// Coefficients of `det(λI − b)`, leading coefficient first (monic).
pub fn charpoly(q: &QuotientMatrix) -> Result<Vec<i128>> {
    let d = q.dim();
    if d == 0 || d > QUOTIENT_DIM_CAP {
        return Err(Error::capability(format!(
            "characteristic polynomial supports dimension 1..={QUOTIENT_DIM_CAP}, got {d}"
        )));
    }
    if q.b.iter().any(|r| r.len() != d) {
        return Err(Error::input("quotient matrix is not square"));
    }
    let a: Vec<Vec<i128>> = q.b.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mul = |x: &Vec<Vec<i128>>, y: &Vec<Vec<i128>>| -> Vec<Vec<i128>> {
        (0..d)
            .map(|i| (0..d).map(|j| (0..d).map(|t| x[i][t] * y[t][j]).sum()).collect())
            .collect()
    };
    // M_1 = I, c_{k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_k I
    let mut coeffs = vec![1i128];
    let mut m: Vec<Vec<i128>> = (0..d).map(|i| (0..d).map(|j| (i == j) as i128).collect()).collect();
    for k in 1..=d {
        let am = mul(&a, &m);
        let tr: i128 = (0..d).map(|i| am[i][i]).sum();
        if tr % k as i128 != 0 {
            return Err(Error::Internal("inexact division in characteristic polynomial".into()));
        }
        let c = -tr / k as i128;
        coeffs.push(c);
        m = am;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += c;
        }
    }
    Ok(coeffs)
}

fn horner(coeffs: &[i128], x: f64) -> (f64, f64) {
    let mut p = 0.0;
    let mut dp = 0.0;
    for &c in coeffs {
        dp = dp * x + p;
        p = p * x + c as f64;
    }
    (p, dp)
}

/// Largest real root of the characteristic polynomial, located in
/// `[0, max row sum]`.
pub fn charpoly_root(q: &QuotientMatrix) -> Result<f64> {
    let coeffs = charpoly(q)?;
    let hi0 = q.max_row_sum() as f64;
    if q.b.iter().flatten().any(|&x| x < 0) {
        return Err(Error::input("quotient matrix has negative entries"));
    }
    // Newton from the right approaches the largest root monotonically when
    // all roots are real, which holds for quotients of equitable partitions.
    let mut x = hi0 + 1.0;
    for _ in 0..500 {
        let (p, dp) = horner(&coeffs, x);
        if p == 0.0 || dp <= 0.0 {
            break;
        }
        let next = x - p / dp;
        if next >= x {
            break;
        }
        x = next;
    }
    // bracket and polish by bisection
    let scale = hi0.max(1.0);
    let mut step = 1e-12 * scale;
    let mut lo = x - step;
    while horner(&coeffs, lo).0 > 0.0 {
        step *= 2.0;
        lo = x - step;
        if lo < -1e-9 * scale {
            return Err(Error::Internal("no real root of the quotient in [0, max row sum]".into()));
        }
    }
    let mut hi = x.max(lo);
    if horner(&coeffs, hi).0 <= 0.0 {
        hi = hi0 + 1.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if horner(&coeffs, mid).0 > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
