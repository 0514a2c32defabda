use serde::Serialize;

use super::SpectraError;
use crate::graph::Graph;

/// Quotient matrix of the partition `{u} ∪ (V \ {u})` and its largest
/// eigenvalue, which interlacing places below `μ(G)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuotientBound {
    pub pivot: usize,
    /// `matrix[i][j]` is the average number of block-`j` neighbours of a
    /// block-`i` vertex; block 0 is `{u}`.
    pub matrix: [[f64; 2]; 2],
    pub lambda_max: f64,
}

impl QuotientBound {
    /// `det(x I - B)`.
    pub fn char_poly(&self, x: f64) -> f64 {
        let b = &self.matrix;
        (x - b[0][0]) * (x - b[1][1]) - b[0][1] * b[1][0]
    }
}

pub fn quotient_bound(g: &Graph, u: usize) -> Result<QuotientBound, SpectraError> {
    let n = g.order();
    if n < 2 {
        return Err(SpectraError::InvalidParameter(format!("quotient bound needs at least two vertices, got {n}")));
    }
    if u >= n {
        return Err(SpectraError::VertexOutOfRange { vertex: u, n });
    }
    let d = g.degree(u) as f64;
    let rest = (n - 1) as f64;
    let two_m = 2.0 * g.size() as f64;
    let matrix = [[0.0, d / rest], [d, (two_m - 2.0 * d) / rest]];
    let trace = matrix[0][0] + matrix[1][1];
    let det = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
    let disc = (trace * trace - 4.0 * det).max(0.0);
    let lambda_max = 0.5 * (trace + disc.sqrt());
    Ok(QuotientBound { pivot: u, matrix, lambda_max })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, star, wheel};
    use crate::spectra::spectral_radius;

    #[test]
    fn wheel_hub_partition_is_equitable() {
        let w = wheel(4).unwrap();
        let q = quotient_bound(&w, 0).unwrap();
        assert_eq!(q.matrix, [[0.0, 1.0], [4.0, 2.0]]);
        let want = 1.0 + 5f64.sqrt();
        assert!((q.lambda_max - want).abs() < 1e-12);
        assert!((spectral_radius(&w) - want).abs() < 1e-9);
        assert!(q.char_poly(q.lambda_max).abs() < 1e-12);
    }

    #[test]
    fn k2_either_vertex() {
        let q = quotient_bound(&complete(2).unwrap(), 1).unwrap();
        assert_eq!(q.matrix, [[0.0, 1.0], [1.0, 0.0]]);
        assert!((q.lambda_max - 1.0).abs() < 1e-12);
    }

    #[test]
    fn star_leaf_is_below_mu() {
        let s = star(4).unwrap();
        let q = quotient_bound(&s, 1).unwrap();
        assert!((q.matrix[0][1] - 1.0 / 3.0).abs() < 1e-15);
        assert!((q.matrix[1][1] - 4.0 / 3.0).abs() < 1e-15);
        // Larger root of x^2 - 4x/3 - 1/3 = 0.
        let want = (4.0 / 3.0 + (16.0 / 9.0 + 4.0 / 3.0f64).sqrt()) / 2.0;
        assert!((q.lambda_max - want).abs() < 1e-12);
        assert!(q.lambda_max <= 3f64.sqrt());
        // Interlacing: P(μ) >= 0.
        assert!(q.char_poly(spectral_radius(&s)) >= 0.0);
    }

    #[test]
    fn errors() {
        assert!(quotient_bound(&complete(1).unwrap(), 0).is_err());
        assert_eq!(quotient_bound(&complete(3).unwrap(), 3), Err(SpectraError::VertexOutOfRange { vertex: 3, n: 3 }));
    }
}
