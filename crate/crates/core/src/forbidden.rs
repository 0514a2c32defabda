//! Books `B_{k+1}` and bicliques `K_{2,l+1}` as forbidden subgraphs, and the
//! local counting argument behind the book/biclique spectral bound.
//!
//! Both containments reduce to common-neighbour counts: `B_{k+1} ⊆ G` iff
//! some edge lies in more than `k` triangles, and `K_{2,l+1} ⊆ G` iff some
//! vertex pair (adjacent or not) has more than `l` common neighbours.

use serde::Serialize;

use crate::error::CheckError;
use crate::graph::{degree_profile, Graph};
use crate::spectra::spectral_radius;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CommonNeighborStats {
    /// Largest common-neighbour count over adjacent pairs (the book number).
    pub max_adjacent: usize,
    /// Largest common-neighbour count over all pairs.
    pub max_any: usize,
}

pub fn common_neighbors(g: &Graph, u: usize, v: usize) -> Result<usize, CheckError> {
    let n = g.order();
    if u >= n || v >= n {
        return Err(CheckError::invalid(format!("vertex out of range for order {n}")));
    }
    if u == v {
        return Err(CheckError::invalid("common neighbours need two distinct vertices"));
    }
    Ok(g.common_neighbor_count(u, v))
}

pub fn common_neighbor_stats(g: &Graph) -> CommonNeighborStats {
    let mut stats = CommonNeighborStats { max_adjacent: 0, max_any: 0 };
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            let c = g.common_neighbor_count(u, v);
            stats.max_any = stats.max_any.max(c);
            if g.has_edge(u, v) {
                stats.max_adjacent = stats.max_adjacent.max(c);
            }
        }
    }
    stats
}

/// No `B_{k+1}`: every edge lies in at most `k` triangles.
pub fn book_free(g: &Graph, k: usize) -> bool {
    (0..g.order()).all(|u| g.neighbor_iter(u).filter(|&v| v > u).all(|v| g.common_neighbor_count(u, v) <= k))
}

/// No `K_{2,l+1}` subgraph: every pair of vertices has at most `l` common
/// neighbours.
pub fn biclique_free(g: &Graph, l: usize) -> bool {
    (0..g.order()).all(|u| (u + 1..g.order()).all(|v| g.common_neighbor_count(u, v) <= l))
}

fn require_free(g: &Graph, k: usize, l: usize) -> Result<(), CheckError> {
    if !book_free(g, k) {
        return Err(CheckError::precondition(format!("graph contains B_{}", k + 1)));
    }
    if !biclique_free(g, l) {
        return Err(CheckError::precondition(format!("graph contains K_2,{}", l + 1)));
    }
    Ok(())
}

/// Both sides of `Σ_{v∈Γ(u)} (d(v) - k - 1) ≤ (n - d(u) - 1) l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountingCheck {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

pub fn counting_inequality_check(g: &Graph, u: usize, k: usize, l: usize) -> Result<CountingCheck, CheckError> {
    if u >= g.order() {
        return Err(CheckError::invalid(format!("vertex {u} out of range")));
    }
    require_free(g, k, l)?;
    Ok(counting_terms(g, u, k, l))
}

pub(crate) fn counting_terms(g: &Graph, u: usize, k: usize, l: usize) -> CountingCheck {
    let n = g.order() as i64;
    let du = g.degree(u) as i64;
    let lhs: i64 = g.neighbor_iter(u).map(|v| g.degree(v) as i64 - k as i64 - 1).sum();
    let rhs = (n - du - 1) * l as i64;
    CountingCheck { lhs, rhs, holds: lhs <= rhs }
}

/// Row sums of `C = A² - (k+1-l) A - (n-1) l I` and the eigenvalue of `C`
/// carried by the principal eigenvector of `A`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CMatrixReport {
    pub k: usize,
    pub l: usize,
    pub row_sums: Vec<i64>,
    /// `μ² - (k+1-l) μ - (n-1) l`.
    pub lambda: f64,
    pub all_nonpositive: bool,
}

/// Row sum `u` of `C`, from `Σ_{v∈Γ(u)} d(v) - (k+1-l) d(u) - (n-1) l`.
pub fn c_row_sum(g: &Graph, u: usize, k: usize, l: usize) -> i64 {
    let n = g.order() as i64;
    let (k, l) = (k as i64, l as i64);
    let du = g.degree(u) as i64;
    let second_neighborhood: i64 = g.neighbor_iter(u).map(|v| g.degree(v) as i64).sum();
    second_neighborhood - (k + 1 - l) * du - (n - 1) * l
}

pub fn c_matrix_report(g: &Graph, k: usize, l: usize) -> CMatrixReport {
    c_matrix_report_with(g, k, l, spectral_radius(g))
}

pub fn c_matrix_report_with(g: &Graph, k: usize, l: usize, mu: f64) -> CMatrixReport {
    let row_sums: Vec<i64> = (0..g.order()).map(|u| c_row_sum(g, u, k, l)).collect();
    let all_nonpositive = row_sums.iter().all(|&s| s <= 0);
    CMatrixReport { k, l, row_sums, lambda: c_lambda(g.order(), k, l, mu), all_nonpositive }
}

pub fn c_lambda(n: usize, k: usize, l: usize, mu: f64) -> f64 {
    let a = k as f64 + 1.0 - l as f64;
    mu * mu - a * mu - ((n - 1) * l) as f64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EqualityCase {
    /// `Δ² - Δ(k-l+1) ≤ l(n-1)` and the graph is `Δ`-regular.
    CaseI,
    /// `Δ² - Δ(k-l+1) > l(n-1)`, adjacent pairs share exactly `k` and
    /// nonadjacent pairs exactly `l` neighbours.
    CaseII,
    NotTight,
}

pub fn equality_case(g: &Graph, k: usize, l: usize) -> Result<EqualityCase, CheckError> {
    if k > l {
        return Err(CheckError::invalid(format!("need k <= l, got k={k}, l={l}")));
    }
    if !g.is_connected() {
        return Err(CheckError::precondition("graph is disconnected"));
    }
    require_free(g, k, l)?;
    Ok(classify_equality(g, k, l))
}

/// Classification without re-checking the preconditions.
pub(crate) fn classify_equality(g: &Graph, k: usize, l: usize) -> EqualityCase {
    let profile = degree_profile(g);
    let n = g.order() as i64;
    let delta = profile.max_degree as i64;
    let (k_i, l_i) = (k as i64, l as i64);
    let lhs = delta * delta - delta * (k_i - l_i + 1);
    let rhs = l_i * (n - 1);
    if lhs <= rhs {
        if profile.is_regular() {
            EqualityCase::CaseI
        } else {
            EqualityCase::NotTight
        }
    } else {
        let exact = (0..g.order()).all(|u| {
            (u + 1..g.order()).all(|v| {
                let want = if g.has_edge(u, v) { k } else { l };
                g.common_neighbor_count(u, v) == want
            })
        });
        if exact {
            EqualityCase::CaseII
        } else {
            EqualityCase::NotTight
        }
    }
}
