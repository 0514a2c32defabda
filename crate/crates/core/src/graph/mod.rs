//! Simple undirected graphs stored as bit-packed adjacency rows.
//!
//! Each vertex owns `words = ceil(n / 64)` machine words. For the orders used by
//! the exhaustive enumeration a row is a single `u64`, so neighbourhood
//! intersections reduce to one `AND` plus `popcount`.

mod degree;
mod generators;
pub mod graph6;
mod io;

pub use degree::{degree_profile, DegreeClass, DegreeProfile};
pub use generators::*;
pub use io::{parse_edge_list, read_edge_list_file, write_edge_list};

use std::fmt;

use thiserror::Error;

/// Errors raised while constructing or decoding a [`Graph`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
    #[error("graph6: {0}")]
    Graph6(#[from] graph6::Graph6Error),
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
}

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Bit-slice helpers shared by the combinatorial modules.
pub(crate) mod bits {
    #[inline]
    pub fn count(a: &[u64]) -> usize {
        a.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn and_count(a: &[u64], b: &[u64]) -> usize {
        a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
    }

    #[inline]
    pub fn contains(a: &[u64], v: usize) -> bool {
        a[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(a: &mut [u64], v: usize) {
        a[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(a: &mut [u64], v: usize) {
        a[v / 64] &= !(1 << (v % 64));
    }

    #[inline]
    pub fn is_empty(a: &[u64]) -> bool {
        a.iter().all(|&w| w == 0)
    }

    pub fn full(n: usize) -> Vec<u64> {
        let mut set = vec![u64::MAX; super::words_for(n)];
        if !n.is_multiple_of(64) {
            let last = set.len() - 1;
            set[last] = (1u64 << (n % 64)) - 1;
        }
        set
    }

    /// Iterates the members of a bitset in increasing order.
    pub fn first(a: &[u64]) -> Option<usize> {
        a.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(a: &[u64]) -> impl Iterator<Item = usize> + '_ {
        a.iter().enumerate().flat_map(|(i, &w)| {
            let mut word = w;
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let bit = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(i * 64 + bit)
                }
            })
        })
    }
}

/// A simple undirected graph on the vertex set `0..n`.
///
/// Immutable once built; all invariants (symmetry, no loops) are enforced at
/// construction time.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let words = words_for(n);
        Ok(Self { n, words, rows: vec![0; n * words], m: 0 })
    }

    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to a single edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Decodes a graph from the bits of `mask`, where bit `i` is the `i`-th
    /// vertex pair in lexicographic order `(0,1), (0,2), .., (0,n-1), (1,2), ..`.
    ///
    /// Only the first `n(n-1)/2` bits are read, so `n` must be at most 11.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self, GraphError> {
        if n * n.saturating_sub(1) / 2 > 64 {
            return Err(GraphError::InvalidParameter(format!("edge mask cannot describe a graph of order {n}")));
        }
        let mut g = Self::empty(n)?;
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> bit & 1 == 1 {
                    g.set_edge(u, v);
                }
                bit += 1;
            }
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if !self.has_edge(u, v) {
            bits::insert(&mut self.rows[u * self.words..(u + 1) * self.words], v);
            bits::insert(&mut self.rows[v * self.words..(v + 1) * self.words], u);
            self.m += 1;
        }
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::contains(self.neighbors(u), v)
    }

    /// Neighbourhood of `u` as a bitset slice.
    #[inline]
    pub fn neighbors(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn neighbor_iter(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter(self.neighbors(u))
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        bits::count(self.neighbors(u))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    /// `|Γ(u) ∩ Γ(v)|`.
    #[inline]
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        bits::and_count(self.neighbors(u), self.neighbors(v))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            out.extend(self.neighbor_iter(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("order is positive");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// Returns a copy with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::EndpointOutOfRange { u, v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let mut g = self.clone();
        g.set_edge(u, v);
        Ok(g)
    }

    /// Dense 0/1 adjacency matrix in row-major order.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let mut a = vec![0.0; self.n * self.n];
        for u in 0..self.n {
            for v in self.neighbor_iter(u) {
                a[u * self.n + v] = 1.0;
            }
        }
        a
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in self.neighbor_iter(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![0u64; self.words];
        bits::insert(&mut seen, 0);
        let mut stack = vec![0];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbor_iter(u) {
                if !bits::contains(&seen, v) {
                    bits::insert(&mut seen, v);
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.n
    }

    /// Induced subgraph on `vertices`, relabelled `0..vertices.len()` in the
    /// given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// True iff this graph is isomorphic to the Turán graph `T_r(n)`.
    ///
    /// Decided from the complement: it must be a disjoint union of exactly
    /// `min(r, n)` cliques with `n mod r` of them of size `ceil(n/r)` and the
    /// rest of size `floor(n/r)`.
    pub fn is_turan(&self, r: usize) -> bool {
        if r == 0 {
            return false;
        }
        let n = self.n;
        let comps = self.complement().components();
        if comps.len() != r.min(n) {
            return false;
        }
        let (small, large) = (n / r, n.div_ceil(r));
        let mut n_large = 0;
        for comp in &comps {
            let s = comp.len();
            // A complement component is a clique iff each member misses
            // exactly the other s - 1 members in the original graph.
            for &u in comp {
                if n - 1 - self.degree(u) != s - 1 {
                    return false;
                }
            }
            if s == large && large != small {
                n_large += 1;
            } else if s != small {
                return false;
            }
        }
        large == small || n_large == n % r
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&graph6::to_graph6(self))
    }
}
