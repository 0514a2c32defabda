//! Adjacency spectra, quotient-matrix interlacing bounds, and the closed-form
//! and characteristic-equation values of the spectral radius for the
//! extremal families.

mod jacobi;
mod quotient;
mod turan;

pub use jacobi::{eigen_decomposition, eigenvalues_symmetric, EigenDecomposition, SymmetricMatrix};
pub use quotient::{quotient_bound, QuotientBound};
pub use turan::{prop1_mu, prop2_mu, turan_char_poly, turan_spectral_radius};

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectraError {
    #[error("matrix has no rows")]
    EmptyMatrix,
    #[error("matrix data of length {len} does not match order {n}")]
    ShapeMismatch { n: usize, len: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    Asymmetric { row: usize, col: usize },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_diagonal:e})")]
    NoConvergence { sweeps: usize, off_diagonal: f64 },
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Adjacency spectrum of a graph.
#[derive(Debug, Clone, Serialize)]
pub struct Spectrum {
    /// All eigenvalues, descending.
    pub eigenvalues: Vec<f64>,
    /// Largest eigenvalue.
    pub mu: f64,
    /// Nonnegative unit eigenvector to `mu`, when requested. For a
    /// disconnected graph it is supported on a single component of maximal
    /// spectral radius.
    pub principal_vector: Option<Vec<f64>>,
}

impl Spectrum {
    pub fn of(g: &Graph) -> Self {
        let eigenvalues = adjacency_eigenvalues(g);
        let mu = eigenvalues[0].max(0.0);
        Spectrum { eigenvalues, mu, principal_vector: None }
    }

    pub fn with_principal_vector(g: &Graph) -> Self {
        let mut s = Self::of(g);
        s.principal_vector = Some(principal_vector(g));
        s
    }
}

pub fn adjacency_matrix(g: &Graph) -> SymmetricMatrix {
    SymmetricMatrix::new(g.order(), g.adjacency_matrix()).expect("adjacency matrices are symmetric")
}

fn adjacency_eigenvalues(g: &Graph) -> Vec<f64> {
    if g.size() == 0 {
        return vec![0.0; g.order()];
    }
    eigenvalues_symmetric(&adjacency_matrix(g)).expect("Jacobi converges on adjacency matrices")
}

/// Largest adjacency eigenvalue `μ(G)`.
pub fn spectral_radius(g: &Graph) -> f64 {
    if g.size() == 0 {
        return 0.0;
    }
    adjacency_eigenvalues(g)[0].max(0.0)
}

/// Principal eigenvector: the Jacobi eigenvector of the component with the
/// largest spectral radius (first such component on ties), refined by a few
/// steps of shifted inverse iteration and sign-normalized to be nonnegative.
pub fn principal_vector(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let comps = g.components();
    let mut best: Option<(f64, &[usize], Vec<f64>)> = None;
    for comp in &comps {
        let sub = g.induced(comp).expect("components are nonempty");
        let (mu, vector) = if sub.size() == 0 {
            (0.0, vec![1.0])
        } else {
            let d = eigen_decomposition(&adjacency_matrix(&sub)).expect("Jacobi converges");
            let vectors = d.vectors.expect("vectors requested");
            let mu = d.values[0];
            (mu, refine(&sub, mu, vectors[0].clone()))
        };
        if best.as_ref().is_none_or(|(b, _, _)| mu > *b + 1e-12) {
            best = Some((mu, comp, vector));
        }
    }
    let (_, comp, vector) = best.expect("graph has at least one component");
    let mut out = vec![0.0; n];
    for (&u, x) in comp.iter().zip(vector) {
        out[u] = x;
    }
    out
}

fn refine(g: &Graph, mu: f64, mut x: Vec<f64>) -> Vec<f64> {
    let n = g.order();
    let shift = mu + 1e-7 * mu.max(1.0);
    for _ in 0..3 {
        let mut m = g.adjacency_matrix();
        for i in 0..n {
            m[i * n + i] -= shift;
        }
        match solve(m, x.clone(), n) {
            Some(y) => x = y,
            None => break,
        }
        normalize(&mut x);
    }
    let sign = if x.iter().sum::<f64>() < 0.0 { -1.0 } else { 1.0 };
    for xi in &mut x {
        *xi = (*xi * sign).max(0.0);
    }
    normalize(&mut x);
    x
}

fn normalize(x: &mut [f64]) {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        x.iter_mut().for_each(|v| *v /= norm);
    }
}

/// Gaussian elimination with partial pivoting on a row-major `n × n` system.
fn solve(mut a: Vec<f64>, mut b: Vec<f64>, n: usize) -> Option<Vec<f64>> {
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| a[i * n + col].abs().total_cmp(&a[j * n + col].abs()))?;
        if a[pivot * n + col] == 0.0 {
            return None;
        }
        if pivot != col {
            for k in 0..n {
                a.swap(pivot * n + k, col * n + k);
            }
            b.swap(pivot, col);
        }
        for row in col + 1..n {
            let f = a[row * n + col] / a[col * n + col];
            if f != 0.0 {
                for k in col..n {
                    a[row * n + k] -= f * a[col * n + k];
                }
                b[row] -= f * b[col];
            }
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let tail: f64 = (row + 1..n).map(|k| a[row * n + k] * x[k]).sum();
        x[row] = (b[row] - tail) / a[row * n + row];
    }
    x.iter().all(|v| v.is_finite()).then_some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_minus_edge, cycle, disjoint_union, path, star, Graph};

    #[test]
    fn spectral_radius_examples() {
        assert!((spectral_radius(&cycle(5).unwrap()) - 2.0).abs() < 1e-12);
        let want = (1.0 + 17f64.sqrt()) / 2.0;
        assert!((spectral_radius(&complete_minus_edge(4).unwrap()) - want).abs() < 1e-12);
        assert!((spectral_radius(&star(6).unwrap()) - 5f64.sqrt()).abs() < 1e-12);
        assert_eq!(spectral_radius(&Graph::empty(4).unwrap()), 0.0);
    }

    #[test]
    fn trace_identities() {
        let g = path(6).unwrap();
        let s = Spectrum::of(&g);
        let sum: f64 = s.eigenvalues.iter().sum();
        let sq: f64 = s.eigenvalues.iter().map(|x| x * x).sum();
        assert!(sum.abs() < 1e-12);
        assert!((sq - 2.0 * g.size() as f64).abs() < 1e-12);
    }

    #[test]
    fn principal_vector_of_star() {
        let v = principal_vector(&star(5).unwrap());
        // Hub entry is sqrt(1/2), leaves share the rest equally.
        assert!((v[0] - 0.5f64.sqrt()).abs() < 1e-10);
        for &leaf in &v[1..] {
            assert!((leaf - (0.5f64 / 4.0).sqrt()).abs() < 1e-10);
        }
    }

    #[test]
    fn principal_vector_is_eigenvector() {
        let g = complete_minus_edge(6).unwrap();
        let s = Spectrum::with_principal_vector(&g);
        let x = s.principal_vector.unwrap();
        for u in 0..g.order() {
            let ax: f64 = g.neighbor_iter(u).map(|v| x[v]).sum();
            assert!((ax - s.mu * x[u]).abs() < 1e-10);
            assert!(x[u] > 0.0);
        }
    }

    #[test]
    fn principal_vector_of_disconnected_graph_uses_one_component() {
        // K_3 ∪ K_3: a tie, the first component wins.
        let g = disjoint_union(&complete(3).unwrap(), &complete(3).unwrap());
        let x = principal_vector(&g);
        assert!(x[..3].iter().all(|&v| (v - 1.0 / 3f64.sqrt()).abs() < 1e-10));
        assert!(x[3..].iter().all(|&v| v == 0.0));
        // K_2 ∪ K_4: supported on the K_4.
        let g = disjoint_union(&complete(2).unwrap(), &complete(4).unwrap());
        let x = principal_vector(&g);
        assert_eq!(&x[..2], &[0.0, 0.0]);
        assert!(x[2..].iter().all(|&v| (v - 0.5).abs() < 1e-10));
    }

    #[test]
    fn principal_vector_edgeless() {
        let x = principal_vector(&Graph::empty(3).unwrap());
        assert_eq!(x, vec![1.0, 0.0, 0.0]);
    }
}
