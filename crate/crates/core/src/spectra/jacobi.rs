//! Cyclic Jacobi eigensolver for dense real symmetric matrices.

use super::SpectraError;

const SYMMETRY_TOL: f64 = 1e-12;
/// Sweeps stop once the off-diagonal Frobenius norm falls to this fraction
/// of the full Frobenius norm.
const OFF_DIAGONAL_TOL: f64 = 1e-13;
const MAX_SWEEPS: usize = 64;

/// Row-major dense symmetric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self, SpectraError> {
        if n == 0 {
            return Err(SpectraError::EmptyMatrix);
        }
        if data.len() != n * n {
            return Err(SpectraError::ShapeMismatch { n, len: data.len() });
        }
        for i in 0..n {
            for j in i + 1..n {
                if (data[i * n + j] - data[j * n + i]).abs() > SYMMETRY_TOL {
                    return Err(SpectraError::Asymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self { n, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, SpectraError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(SpectraError::ShapeMismatch { n, len: row.len() * n });
            }
            data.extend_from_slice(row);
        }
        Self::new(n, data)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }
}

/// Eigenvalues in descending order with, optionally, the matching
/// orthonormal eigenvectors (`vectors[k]` belongs to `values[k]`).
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: Option<Vec<Vec<f64>>>,
}

pub fn eigenvalues_symmetric(matrix: &SymmetricMatrix) -> Result<Vec<f64>, SpectraError> {
    jacobi(matrix, false).map(|d| d.values)
}

pub fn eigen_decomposition(matrix: &SymmetricMatrix) -> Result<EigenDecomposition, SpectraError> {
    jacobi(matrix, true)
}

fn jacobi(matrix: &SymmetricMatrix, want_vectors: bool) -> Result<EigenDecomposition, SpectraError> {
    let n = matrix.n;
    let mut a = matrix.data.clone();
    // Symmetrize exactly so the rotations see a truly symmetric matrix.
    for i in 0..n {
        for j in i + 1..n {
            let avg = 0.5 * (a[i * n + j] + a[j * n + i]);
            a[i * n + j] = avg;
            a[j * n + i] = avg;
        }
    }
    let mut v = if want_vectors {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        Some(id)
    } else {
        None
    };

    let total: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = OFF_DIAGONAL_TOL * total;
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off = off_diagonal_norm(&a, n);
        if off <= threshold || off == 0.0 {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, v.as_deref_mut(), n, p, q);
            }
        }
    }
    if !converged {
        let off = off_diagonal_norm(&a, n);
        if off > threshold && off != 0.0 {
            return Err(SpectraError::NoConvergence { sweeps: MAX_SWEEPS, off_diagonal: off });
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]).then(i.cmp(&j)));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = v.map(|v| order.iter().map(|&col| (0..n).map(|row| v[row * n + col]).collect()).collect());
    Ok(EigenDecomposition { values, vectors })
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            sum += a[i * n + j] * a[i * n + j];
        }
    }
    (2.0 * sum).sqrt()
}

/// Applies the rotation in the `(p, q)` plane that annihilates `a[p][q]`.
#[inline]
fn rotate(a: &mut [f64], v: Option<&mut [f64]>, n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let (app, aqq) = (a[p * n + p], a[q * n + q]);
    let theta = (aqq - app) / (2.0 * apq);
    let t =
        if theta.abs() > 1e150 { 0.5 / theta } else { theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt()) };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;

    if let Some(v) = v {
        for k in 0..n {
            let vkp = v[k * n + p];
            let vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
        }
    }
}
