//! Per-graph checks run by the campaigns.

use serde::Serialize;

use super::HarnessError;
use crate::bounds::{cs_lower, th1_check_against, th2_check_with, th3_check_with, Th2Branch, Verdict};
use crate::cliques::{clique_counts, is_kr1_free, polyn_residual_from, polyn_tolerance, zykov_from, ZykovVerdict};
use crate::forbidden::{biclique_free, book_free, c_lambda, c_row_sum, counting_terms};
use crate::graph::{degree_profile, Graph};
use crate::spectra::{quotient_bound, spectral_radius, turan_spectral_radius};

/// The claim a campaign verifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    /// `μ(G) < μ(T_r(n))` for `K_{r+1}`-free `G` unless `G = T_r(n)`.
    Turan { r: usize },
    /// The irregularity gap `μ - 2m/n` exceeds `1/(2m+2n)`, or `1/(nΔ+2n)`
    /// for subregular graphs.
    Irregularity,
    /// The book/biclique bound and its equality characterization.
    BookBiclique { k: usize, l: usize },
    /// The clique-count polynomial inequality and the Turán clique-count
    /// comparison.
    CliquePolynomial { r: usize },
    /// `μ ≥ √(Σd²/n) ≥ 2m/n`, the second with equality iff regular.
    Classical,
    /// The local counting inequality, nonpositive row sums of `C`, and
    /// `λ ≤ 0`.
    RowSums { k: usize, l: usize },
    /// Every single-vertex quotient bound lies below `μ`.
    Interlacing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
}

impl Check {
    pub fn name(&self) -> &'static str {
        match self {
            Check::Turan { .. } => "theorem1",
            Check::Irregularity => "theorem2",
            Check::BookBiclique { .. } => "theorem3",
            Check::CliquePolynomial { .. } => "polyn",
            Check::Classical => "classical",
            Check::RowSums { .. } => "counting",
            Check::Interlacing => "interlacing",
        }
    }

    pub fn params(&self) -> Params {
        let none = Params { r: None, k: None, l: None };
        match *self {
            Check::Turan { r } | Check::CliquePolynomial { r } => Params { r: Some(r), ..none },
            Check::BookBiclique { k, l } | Check::RowSums { k, l } => Params { k: Some(k), l: Some(l), ..none },
            _ => none,
        }
    }

    pub(crate) fn validate(&self) -> Result<(), HarnessError> {
        match *self {
            Check::Turan { r } if r < 2 => Err(HarnessError::InvalidConfig(format!("Turán campaign needs r >= 2, got {r}"))),
            Check::CliquePolynomial { r } if r < 1 => {
                Err(HarnessError::InvalidConfig("clique polynomial check needs r >= 1".into()))
            }
            Check::BookBiclique { k, l } | Check::RowSums { k, l } if k > l => {
                Err(HarnessError::InvalidConfig(format!("need k <= l, got k={k}, l={l}")))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Outcome {
    NotApplicable,
    Applicable { violation: Option<String>, near_tie: Option<f64>, exception: bool },
}

fn applicable(violation: Option<String>, near_tie: Option<f64>, exception: bool) -> Outcome {
    Outcome::Applicable { violation, near_tie, exception }
}

/// A check with per-order constants precomputed.
pub(crate) struct Prepared {
    check: Check,
    /// `μ(T_r(n))` indexed by `n`, for the Turán campaign.
    turan_mu: Vec<Option<f64>>,
}

const NEAR_TIE_WINDOW: f64 = 1e-6;

impl Prepared {
    pub(crate) fn new(check: &Check, n_min: usize, n_max: usize) -> Result<Self, HarnessError> {
        let mut turan_mu = vec![None; n_max + 1];
        if let Check::Turan { r } = *check {
            for (n, slot) in turan_mu.iter_mut().enumerate().skip(n_min.max(2)) {
                *slot = Some(turan_spectral_radius(r, n).map_err(|e| HarnessError::InvalidConfig(e.to_string()))?);
            }
        }
        Ok(Self { check: *check, turan_mu })
    }

    fn turan_mu(&self, r: usize, n: usize) -> f64 {
        self.turan_mu
            .get(n)
            .copied()
            .flatten()
            .unwrap_or_else(|| turan_spectral_radius(r, n).expect("r >= 2 and n >= 2"))
    }

    pub(crate) fn examine(&self, g: &Graph, tol: f64) -> Outcome {
        let n = g.order();
        match self.check {
            Check::Turan { r } => {
                if n < 2 || !is_kr1_free(g, r) {
                    return Outcome::NotApplicable;
                }
                let out = th1_check_against(g, r, spectral_radius(g), self.turan_mu(r, n), tol);
                match out.verdict {
                    Verdict::Strict { .. } => applicable(None, None, false),
                    Verdict::Exception => applicable(None, None, true),
                    Verdict::NearTie { gap } => applicable(None, Some(gap), false),
                    Verdict::Violation { gap } => applicable(
                        Some(format!("mu = {:.12}, mu(T_{r}({n})) = {:.12}, gap = {gap:e}", out.mu, out.turan_mu)),
                        None,
                        false,
                    ),
                }
            }
            Check::Irregularity => {
                let profile = degree_profile(g);
                if n < 4 || profile.is_regular() {
                    return Outcome::NotApplicable;
                }
                let out = th2_check_with(g, &profile, spectral_radius(g), tol).expect("preconditions checked");
                let subregular = out.branch == Th2Branch::Subregular;
                let violation = if !out.holds {
                    Some(format!("{:?} branch: gap = {:.12} <= threshold = {:.12}", out.branch, out.gap, out.threshold))
                } else if subregular && n.is_multiple_of(2) {
                    Some(format!("subregular graph of even order {n}"))
                } else {
                    None
                };
                let near_tie = match out.verdict {
                    Verdict::NearTie { gap } => Some(gap),
                    _ => None,
                };
                applicable(violation, near_tie, subregular)
            }
            Check::BookBiclique { k, l } => {
                if !book_free(g, k) || !biclique_free(g, l) {
                    return Outcome::NotApplicable;
                }
                let out = th3_check_with(g, k, l, spectral_radius(g), tol).expect("preconditions checked");
                let violation = if !out.holds {
                    Some(format!("mu = {:.12} exceeds bound {:.12}", out.mu, out.bound))
                } else if !out.consistent {
                    Some(format!(
                        "tight = {} but equality case is {:?} (slack {:e})",
                        out.tight, out.equality, out.slack
                    ))
                } else {
                    None
                };
                let near_tie = (!out.tight && out.slack.abs() <= NEAR_TIE_WINDOW).then_some(out.slack);
                applicable(violation, near_tie, out.tight)
            }
            Check::CliquePolynomial { r } => {
                if !is_kr1_free(g, r) {
                    return Outcome::NotApplicable;
                }
                let counts = match clique_counts(g) {
                    Ok(c) => c,
                    Err(e) => return applicable(Some(e.to_string()), None, false),
                };
                let mu = spectral_radius(g);
                let residual = polyn_residual_from(&counts, mu, r);
                let mut violation = (residual < -polyn_tolerance(mu, r))
                    .then(|| format!("clique polynomial residual {residual:e} at mu = {mu:.12}"));
                let mut exception = false;
                if n >= r {
                    match zykov_from(g, &counts, r) {
                        ZykovVerdict::Strict => {}
                        ZykovVerdict::Exception => exception = true,
                        ZykovVerdict::Violation { s } => {
                            violation.get_or_insert_with(|| format!("k_{s}(G) is not below k_{s}(T_{r}({n}))"));
                        }
                    }
                }
                applicable(violation, None, exception)
            }
            Check::Classical => {
                let profile = degree_profile(g);
                let mu = spectral_radius(g);
                let hof = (profile.sum_of_squares() as f64 / n as f64).sqrt();
                let cs = cs_lower(g);
                // n Σd² = (2m)² exactly iff the degree variance vanishes.
                let variance_free = n as u64 * profile.sum_of_squares() == (4 * profile.m * profile.m) as u64;
                let violation = if mu < hof - tol {
                    Some(format!("mu = {mu:.12} below Hofmeister bound {hof:.12}"))
                } else if hof < cs - tol {
                    Some(format!("Hofmeister bound {hof:.12} below 2m/n = {cs:.12}"))
                } else if variance_free != profile.is_regular() {
                    Some("Hofmeister and Collatz–Sinogowitz bounds coincide on an irregular graph".into())
                } else {
                    None
                };
                applicable(violation, None, profile.is_regular())
            }
            Check::RowSums { k, l } => {
                if !book_free(g, k) || !biclique_free(g, l) {
                    return Outcome::NotApplicable;
                }
                let mut violation = None;
                let mut all_zero = true;
                for u in 0..n {
                    let c = counting_terms(g, u, k, l);
                    let row = c_row_sum(g, u, k, l);
                    all_zero &= row == 0;
                    if !c.holds {
                        violation = Some(format!("counting inequality fails at {u}: {} > {}", c.lhs, c.rhs));
                    } else if row != c.lhs - c.rhs {
                        violation = Some(format!("row sum {row} at {u} differs from lhs - rhs"));
                    } else if row > 0 {
                        violation = Some(format!("row sum {row} at {u} is positive"));
                    }
                    if violation.is_some() {
                        break;
                    }
                }
                if violation.is_none() {
                    let lambda = c_lambda(n, k, l, spectral_radius(g));
                    if lambda > tol {
                        violation = Some(format!("lambda = {lambda:e} is positive"));
                    }
                }
                applicable(violation, None, all_zero)
            }
            Check::Interlacing => {
                if n < 2 {
                    return Outcome::NotApplicable;
                }
                let mu = spectral_radius(g);
                let mut violation = None;
                let mut equitable = false;
                for u in 0..n {
                    let q = quotient_bound(g, u).expect("vertex in range");
                    if q.lambda_max > mu + tol {
                        violation = Some(format!("quotient at {u}: {:.12} > mu = {mu:.12}", q.lambda_max));
                        break;
                    }
                    equitable |= (q.lambda_max - mu).abs() <= tol;
                }
                applicable(violation, None, equitable)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, turan_graph, wheel};

    #[test]
    fn turan_exception_flagged() {
        let p = Prepared::new(&Check::Turan { r: 2 }, 2, 6).unwrap();
        assert_eq!(p.examine(&turan_graph(2, 6).unwrap(), 1e-9), applicable(None, None, true));
        assert_eq!(p.examine(&cycle(5).unwrap(), 1e-9), applicable(None, None, false));
        assert_eq!(p.examine(&crate::graph::complete(3).unwrap(), 1e-9), Outcome::NotApplicable);
    }

    #[test]
    fn wheel_uses_subregular_branch() {
        let p = Prepared::new(&Check::Irregularity, 4, 6).unwrap();
        assert_eq!(p.examine(&wheel(4).unwrap(), 1e-9), applicable(None, None, true));
    }

    #[test]
    fn c5_is_tight_for_book_biclique() {
        let p = Prepared::new(&Check::BookBiclique { k: 0, l: 1 }, 5, 5).unwrap();
        assert_eq!(p.examine(&cycle(5).unwrap(), 1e-9), applicable(None, None, true));
        let rows = Prepared::new(&Check::RowSums { k: 0, l: 1 }, 5, 5).unwrap();
        assert_eq!(rows.examine(&cycle(5).unwrap(), 1e-9), applicable(None, None, true));
    }

    #[test]
    fn params_serialize_sparsely() {
        let json = serde_json::to_string(&Check::BookBiclique { k: 0, l: 1 }.params()).unwrap();
        assert_eq!(json, r#"{"k":0,"l":1}"#);
        assert_eq!(serde_json::to_string(&Check::Classical.params()).unwrap(), "{}");
    }
}
