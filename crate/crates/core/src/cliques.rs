//! Exact clique counts and the clique-count side of the Turán comparison.

use serde::Serialize;

use crate::error::CheckError;
use crate::graph::{bits, turan_part_sizes, Graph};
use crate::spectra::spectral_radius;

/// Number of `s`-cliques for every `s`, plus the clique number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueCounts {
    /// `counts[s - 1] = k_s` for `s = 1..=n`.
    pub counts: Vec<u64>,
    pub omega: usize,
}

impl CliqueCounts {
    /// `k_s`; zero for `s` beyond the order.
    pub fn k(&self, s: usize) -> u64 {
        if s == 0 {
            1
        } else {
            self.counts.get(s - 1).copied().unwrap_or(0)
        }
    }
}

/// Number of `s`-vertex complete subgraphs, by ordered candidate-set
/// intersection.
pub fn count_cliques(g: &Graph, s: usize) -> Result<u64, CheckError> {
    if s < 1 || s > g.order() {
        return Err(CheckError::invalid(format!("clique size {s} outside 1..={}", g.order())));
    }
    count_from(g, bits::full(g.order()), s)
}

fn count_from(g: &Graph, mut cand: Vec<u64>, remaining: usize) -> Result<u64, CheckError> {
    if remaining == 1 {
        return Ok(bits::count(&cand) as u64);
    }
    let mut total: u64 = 0;
    while let Some(v) = bits::first(&cand) {
        if bits::count(&cand) < remaining {
            break;
        }
        bits::remove(&mut cand, v);
        let next: Vec<u64> = cand.iter().zip(g.neighbors(v)).map(|(a, b)| a & b).collect();
        if bits::count(&next) + 1 >= remaining {
            total = total.checked_add(count_from(g, next, remaining - 1)?).ok_or(CheckError::Overflow)?;
        }
    }
    Ok(total)
}

/// True iff `g` contains a clique on `s` vertices.
pub fn has_clique(g: &Graph, s: usize) -> bool {
    if s == 0 {
        return true;
    }
    if s > g.order() {
        return false;
    }
    if s == 1 {
        return true;
    }
    if s == 2 {
        return g.size() > 0;
    }
    exists_from(g, bits::full(g.order()), s)
}

fn exists_from(g: &Graph, mut cand: Vec<u64>, remaining: usize) -> bool {
    if remaining == 0 {
        return true;
    }
    if bits::count(&cand) < remaining {
        return false;
    }
    if remaining == 1 {
        return true;
    }
    while let Some(v) = bits::first(&cand) {
        if bits::count(&cand) < remaining {
            return false;
        }
        bits::remove(&mut cand, v);
        let next: Vec<u64> = cand.iter().zip(g.neighbors(v)).map(|(a, b)| a & b).collect();
        if exists_from(g, next, remaining - 1) {
            return true;
        }
    }
    false
}

/// All clique counts at once via a pivoted recursion tree: every leaf holds a
/// set `H` of forced vertices and a set `P` of pivots and stands for the
/// cliques `H ∪ Q`, `Q ⊆ P`, so it contributes `C(|P|, s - |H|)` to `k_s`.
pub fn clique_counts(g: &Graph) -> Result<CliqueCounts, CheckError> {
    let n = g.order();
    let binom = binomials(n);
    // Index 0 collects the empty clique.
    let mut totals = vec![0u64; n + 1];
    pivot_tree(g, bits::full(n), 0, 0, &binom, &mut totals)?;
    let counts = totals[1..].to_vec();
    let omega = counts.iter().rposition(|&c| c > 0).map_or(0, |i| i + 1);
    Ok(CliqueCounts { counts, omega })
}

/// Pascal's triangle up to row `n`; entries beyond `u64` are `None` and only
/// become an error if a leaf actually needs them.
fn binomials(n: usize) -> Vec<Vec<Option<u64>>> {
    let mut table = vec![vec![Some(0u64); n + 1]; n + 1];
    for i in 0..=n {
        table[i][0] = Some(1);
        for j in 1..=i {
            table[i][j] = table[i - 1][j - 1].zip(table[i - 1][j]).and_then(|(a, b)| a.checked_add(b));
        }
    }
    table
}

fn pivot_tree(
    g: &Graph,
    cand: Vec<u64>,
    held: usize,
    pivots: usize,
    binom: &[Vec<Option<u64>>],
    totals: &mut [u64],
) -> Result<(), CheckError> {
    if bits::is_empty(&cand) {
        for j in 0..=pivots {
            let slot = &mut totals[held + j];
            *slot = binom[pivots][j].and_then(|b| slot.checked_add(b)).ok_or(CheckError::Overflow)?;
        }
        return Ok(());
    }
    let pivot = bits::iter(&cand)
        .max_by_key(|&p| (bits::and_count(&cand, g.neighbors(p)), std::cmp::Reverse(p)))
        .expect("candidate set is nonempty");
    let inside: Vec<u64> = cand.iter().zip(g.neighbors(pivot)).map(|(a, b)| a & b).collect();
    pivot_tree(g, inside, held, pivots + 1, binom, totals)?;

    let mut rest = cand.clone();
    let outside: Vec<usize> = bits::iter(&cand).filter(|&v| v != pivot && !g.has_edge(pivot, v)).collect();
    for v in outside {
        let next: Vec<u64> = rest.iter().zip(g.neighbors(v)).map(|(a, b)| a & b).collect();
        pivot_tree(g, next, held + 1, pivots, binom, totals)?;
        bits::remove(&mut rest, v);
    }
    Ok(())
}

pub fn clique_number(g: &Graph) -> usize {
    let mut omega = 1;
    while has_clique(g, omega + 1) {
        omega += 1;
    }
    omega
}

/// True iff `g` has no clique on `r + 1` vertices.
pub fn is_kr1_free(g: &Graph, r: usize) -> bool {
    !has_clique(g, r + 1)
}

/// `k_s(T_r(n))`: the elementary symmetric polynomial `e_s` of the Turán
/// part sizes. Zero for `s > r`. Exact for `n <= 127`.
pub fn turan_clique_count(r: usize, n: usize, s: usize) -> u128 {
    if s > r {
        return 0;
    }
    let mut e = vec![0u128; s + 1];
    e[0] = 1;
    for part in turan_part_sizes(r, n) {
        for j in (1..=s).rev() {
            e[j] += e[j - 1] * part as u128;
        }
    }
    e[s]
}

fn require_free(g: &Graph, r: usize) -> Result<(), CheckError> {
    if is_kr1_free(g, r) {
        Ok(())
    } else {
        Err(CheckError::precondition(format!("graph contains K_{}", r + 1)))
    }
}

/// `Σ_{s=2}^{r} (s-1) k_s μ^{r-s} - μ^r`, nonnegative for every
/// `K_{r+1}`-free graph.
pub fn polyn_residual(g: &Graph, r: usize) -> Result<f64, CheckError> {
    if r < 1 {
        return Err(CheckError::invalid("r must be at least 1"));
    }
    require_free(g, r)?;
    let counts = clique_counts(g)?;
    Ok(polyn_residual_from(&counts, spectral_radius(g), r))
}

/// Residual from precomputed clique counts and spectral radius.
pub fn polyn_residual_from(counts: &CliqueCounts, mu: f64, r: usize) -> f64 {
    let rhs: f64 = (2..=r).map(|s| (s - 1) as f64 * counts.k(s) as f64 * mu.powi((r - s) as i32)).sum();
    rhs - mu.powi(r as i32)
}

/// Acceptance threshold for [`polyn_residual`]: `-1e-7 · max(1, μ^r)`.
pub fn polyn_tolerance(mu: f64, r: usize) -> f64 {
    1e-7 * mu.powi(r as i32).max(1.0)
}

/// Outcome of comparing `k_s(G)` with `k_s(T_r(n))` for `2 <= s <= r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum ZykovVerdict {
    /// Every count is strictly below the Turán count.
    Strict,
    /// `G` is the Turán graph itself.
    Exception,
    /// Some `k_s(G) >= k_s(T_r(n))` although `G` is not Turán.
    Violation { s: usize },
}

pub fn zykov_check(g: &Graph, r: usize) -> Result<ZykovVerdict, CheckError> {
    if r < 1 {
        return Err(CheckError::invalid("r must be at least 1"));
    }
    if g.order() < r {
        return Err(CheckError::precondition(format!("order {} is below r = {r}", g.order())));
    }
    require_free(g, r)?;
    let counts = clique_counts(g)?;
    Ok(zykov_from(g, &counts, r))
}

pub fn zykov_from(g: &Graph, counts: &CliqueCounts, r: usize) -> ZykovVerdict {
    if g.is_turan(r) {
        return ZykovVerdict::Exception;
    }
    let n = g.order();
    for s in 2..=r {
        if counts.k(s) as u128 >= turan_clique_count(r, n, s) {
            return ZykovVerdict::Violation { s };
        }
    }
    ZykovVerdict::Strict
}
