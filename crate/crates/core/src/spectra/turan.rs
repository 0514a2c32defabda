use super::SpectraError;
use crate::cliques::turan_clique_count;
use crate::graph::turan_part_sizes;

/// Guaranteed bracket width. Bisection continues past it until the bracket
/// stops shrinking in floating point, so printed roots are correctly rounded.
const ROOT_TOL: f64 = 1e-11;
const MAX_BISECTIONS: usize = 200;

/// `f(x) = x^r - Σ_{s=2}^{r} (s-1) k_s(T_r(n)) x^{r-s}`, whose largest root
/// is the spectral radius of `T_r(n)`.
pub fn turan_char_poly(r: usize, n: usize, x: f64) -> f64 {
    // Horner over the coefficients of x^r, x^{r-1}, .., x^0.
    let mut acc = 1.0;
    for s in 1..=r {
        let coeff = if s == 1 { 0.0 } else { -((s - 1) as f64) * turan_clique_count(r, n, s) as f64 };
        acc = acc * x + coeff;
    }
    acc
}

/// Largest root of the Turán characteristic equation, found by bisection on
/// `[2m/n, n-1]`.
pub fn turan_spectral_radius(r: usize, n: usize) -> Result<f64, SpectraError> {
    if r < 2 {
        return Err(SpectraError::InvalidParameter(format!("Turán equation needs r >= 2, got {r}")));
    }
    if n < 2 {
        return Err(SpectraError::InvalidParameter(format!("Turán equation needs n >= 2, got {n}")));
    }
    let parts = turan_part_sizes(r, n);
    let square_sum: usize = parts.iter().map(|p| p * p).sum();
    let two_m = n * n - square_sum;
    let (mut lo, mut hi) = (two_m as f64 / n as f64, (n - 1) as f64);
    let f = |x: f64| turan_char_poly(r, n, x);
    debug_assert!(f(hi) >= -1e-9 * hi.powi(r as i32));
    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let value = f(mid);
        if value == 0.0 {
            return Ok(mid);
        }
        if value > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    debug_assert!(hi - lo <= ROOT_TOL);
    Ok(0.5 * (lo + hi))
}

/// Spectral radius of `K_n` minus an edge.
pub fn prop1_mu(n: usize) -> Result<f64, SpectraError> {
    if n < 3 {
        return Err(SpectraError::InvalidParameter(format!("needs n >= 3, got {n}")));
    }
    let n = n as f64;
    Ok((n - 3.0 + (n * n + 2.0 * n - 7.0).sqrt()) / 2.0)
}

/// Spectral radius of the complement of an `(n/2 - 1)`-matching.
pub fn prop2_mu(n: usize) -> Result<f64, SpectraError> {
    if n < 4 || n % 2 == 1 {
        return Err(SpectraError::InvalidParameter(format!("needs an even n >= 4, got {n}")));
    }
    let n = n as f64;
    Ok((n - 3.0 + (n * n - 2.0 * n + 9.0).sqrt()) / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_minus_edge, matching_complement, path, turan_graph};
    use crate::spectra::spectral_radius;

    #[test]
    fn bipartite_roots() {
        assert!((turan_spectral_radius(2, 4).unwrap() - 2.0).abs() < 1e-11);
        let r25 = turan_spectral_radius(2, 5).unwrap();
        assert!((r25 - 6f64.sqrt()).abs() < 1e-11);
        assert!((r25 - spectral_radius(&turan_graph(2, 5).unwrap())).abs() < 1e-9);
    }

    #[test]
    fn tripartite_root() {
        // x^3 = 12x + 16
        assert_eq!(turan_char_poly(3, 6, 4.0), 0.0);
        assert!((turan_spectral_radius(3, 6).unwrap() - 4.0).abs() < 1e-11);
    }

    #[test]
    fn more_parts_than_vertices() {
        // T_5(4) = K_4
        assert!((turan_spectral_radius(5, 4).unwrap() - 3.0).abs() < 1e-11);
    }

    #[test]
    fn rejects_small_parameters() {
        assert!(turan_spectral_radius(1, 5).is_err());
        assert!(turan_spectral_radius(2, 1).is_err());
    }

    #[test]
    fn closed_forms() {
        let p1 = prop1_mu(4).unwrap();
        assert!((p1 - (1.0 + 17f64.sqrt()) / 2.0).abs() < 1e-15);
        assert!((p1 - 2.561552813).abs() < 1e-9);
        assert!((prop2_mu(6).unwrap() - (3.0 + 33f64.sqrt()) / 2.0).abs() < 1e-15);
        assert!((prop2_mu(6).unwrap() - 4.372281323).abs() < 1e-9);
        // K_3 minus an edge is P_3.
        assert!((prop1_mu(3).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        assert!((spectral_radius(&path(3).unwrap()) - 2f64.sqrt()).abs() < 1e-12);
        assert!((prop2_mu(4).unwrap() - prop1_mu(4).unwrap()).abs() < 1e-15);
        assert!(prop1_mu(2).is_err());
        assert!(prop2_mu(5).is_err());
        assert!(prop2_mu(2).is_err());
    }

    #[test]
    fn closed_forms_match_eigensolver() {
        for n in [4, 5, 9, 16] {
            let mu = spectral_radius(&complete_minus_edge(n).unwrap());
            assert!((mu - prop1_mu(n).unwrap()).abs() < 1e-9);
        }
        for n in [4, 6, 10, 16] {
            let mu = spectral_radius(&matching_complement(n).unwrap());
            assert!((mu - prop2_mu(n).unwrap()).abs() < 1e-9);
        }
    }
}
