//! Evaluation of the spectral-radius bounds for a single graph.
//!
//! Strict inequalities can't be certified in floating point, so every strict
//! comparison is classified with a margin: a gap above the tolerance is
//! `strict`, a gap within it is a `near-tie` (reported, not failed), and a gap
//! below minus the tolerance is a `violation`. Exact exceptions (the Turán
//! graph itself) are decided combinatorially.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cliques::is_kr1_free;
use crate::error::CheckError;
use crate::forbidden::{biclique_free, book_free, classify_equality, EqualityCase};
use crate::graph::{degree_profile, graph6, DegreeClass, DegreeProfile, Graph};
use crate::spectra::{spectral_radius, turan_spectral_radius};

/// Default margin for strictness and tightness decisions.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Strict {
        gap: f64,
    },
    NearTie {
        gap: f64,
    },
    /// The graph is the extremal graph; equality is expected.
    Exception,
    Violation {
        gap: f64,
    },
}

impl Verdict {
    pub fn from_gap(gap: f64, tol: f64) -> Self {
        if gap > tol {
            Verdict::Strict { gap }
        } else if gap >= -tol {
            Verdict::NearTie { gap }
        } else {
            Verdict::Violation { gap }
        }
    }

    pub fn is_violation(&self) -> bool {
        matches!(self, Verdict::Violation { .. })
    }
}

pub fn cs_lower(g: &Graph) -> f64 {
    2.0 * g.size() as f64 / g.order() as f64
}

pub fn hofmeister_lower(g: &Graph) -> f64 {
    hofmeister_from(&degree_profile(g))
}

fn hofmeister_from(p: &DegreeProfile) -> f64 {
    (p.sum_of_squares() as f64 / p.n as f64).sqrt()
}

pub fn wilf_upper(r: usize, n: usize) -> f64 {
    (1.0 - 1.0 / r as f64) * n as f64
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Th1Outcome {
    pub mu: f64,
    pub turan_mu: f64,
    /// `μ(T_r(n)) - μ(G)`.
    pub gap: f64,
    pub verdict: Verdict,
}

pub fn th1_check(g: &Graph, r: usize) -> Result<Th1Outcome, CheckError> {
    th1_check_with(g, r, spectral_radius(g), DEFAULT_TOL)
}

pub fn th1_check_with(g: &Graph, r: usize, mu: f64, tol: f64) -> Result<Th1Outcome, CheckError> {
    if r < 2 {
        return Err(CheckError::invalid(format!("r must be at least 2, got {r}")));
    }
    if g.order() < 2 {
        return Err(CheckError::precondition("order must be at least 2"));
    }
    if !is_kr1_free(g, r) {
        return Err(CheckError::precondition(format!("graph contains K_{}", r + 1)));
    }
    let turan_mu = turan_spectral_radius(r, g.order()).map_err(|e| CheckError::invalid(e.to_string()))?;
    Ok(th1_check_against(g, r, mu, turan_mu, tol))
}

/// Theorem-1 comparison against a precomputed `μ(T_r(n))`. The caller has
/// established that `g` is `K_{r+1}`-free.
pub fn th1_check_against(g: &Graph, r: usize, mu: f64, turan_mu: f64, tol: f64) -> Th1Outcome {
    let gap = turan_mu - mu;
    let verdict = if g.is_turan(r) {
        if gap.abs() <= tol {
            Verdict::Exception
        } else {
            Verdict::Violation { gap }
        }
    } else {
        Verdict::from_gap(gap, tol)
    };
    Th1Outcome { mu, turan_mu, gap, verdict }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Th2Branch {
    /// Threshold `1/(2m + 2n)`.
    General,
    /// Threshold `1/(nΔ + 2n)`.
    Subregular,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Th2Outcome {
    /// `μ - 2m/n`.
    pub gap: f64,
    pub threshold: f64,
    pub branch: Th2Branch,
    pub holds: bool,
    /// Classification of `gap - threshold`.
    pub verdict: Verdict,
}

pub fn th2_check(g: &Graph) -> Result<Th2Outcome, CheckError> {
    th2_check_with(g, &degree_profile(g), spectral_radius(g), DEFAULT_TOL)
}

pub fn th2_check_with(g: &Graph, profile: &DegreeProfile, mu: f64, tol: f64) -> Result<Th2Outcome, CheckError> {
    let n = g.order();
    if n < 4 {
        return Err(CheckError::precondition(format!("order must be at least 4, got {n}")));
    }
    if profile.is_regular() {
        return Err(CheckError::precondition("graph is regular"));
    }
    let (n_f, m_f) = (n as f64, g.size() as f64);
    let (branch, threshold) = match profile.class {
        DegreeClass::SubregularSingleMax | DegreeClass::SubregularSingleMin => {
            (Th2Branch::Subregular, 1.0 / (n_f * profile.max_degree as f64 + 2.0 * n_f))
        }
        _ => (Th2Branch::General, 1.0 / (2.0 * m_f + 2.0 * n_f)),
    };
    let gap = mu - 2.0 * m_f / n_f;
    Ok(Th2Outcome { gap, threshold, branch, holds: gap > threshold, verdict: Verdict::from_gap(gap - threshold, tol) })
}

fn th3_value(n: usize, k: usize, l: usize, max_degree: usize) -> f64 {
    let a = k as f64 - l as f64 + 1.0;
    let root = (a + (a * a + 4.0 * (l * (n - 1)) as f64).sqrt()) / 2.0;
    root.min(max_degree as f64)
}

fn check_bound_params(n: usize, k: usize, l: usize, max_degree: usize) -> Result<(), CheckError> {
    if k > l {
        return Err(CheckError::invalid(format!("need k <= l, got k={k}, l={l}")));
    }
    if max_degree < 1 || max_degree + 1 > n {
        return Err(CheckError::invalid(format!("Δ = {max_degree} outside 1..={}", n.saturating_sub(1))));
    }
    Ok(())
}

/// `min{Δ, (k-l+1 + √((k-l+1)² + 4l(n-1)))/2}`.
pub fn th3_bound(n: usize, k: usize, l: usize, max_degree: usize) -> Result<f64, CheckError> {
    check_bound_params(n, k, l, max_degree)?;
    Ok(th3_value(n, k, l, max_degree))
}

/// `(k-l + √((k-l)² + 4Δ + 4l(n-1)))/2`.
pub fn shi_song_bound(n: usize, k: usize, l: usize, max_degree: usize) -> Result<f64, CheckError> {
    check_bound_params(n, k, l, max_degree)?;
    let a = k as f64 - l as f64;
    Ok((a + (a * a + 4.0 * max_degree as f64 + 4.0 * (l * (n - 1)) as f64).sqrt()) / 2.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Th3Outcome {
    pub mu: f64,
    pub bound: f64,
    /// `bound - μ`.
    pub slack: f64,
    pub holds: bool,
    pub tight: bool,
    /// Equality classification; present for connected graphs.
    pub equality: Option<EqualityCase>,
    /// For connected graphs: tightness agrees with the equality
    /// classification. Always true for disconnected graphs.
    pub consistent: bool,
}

pub fn th3_check(g: &Graph, k: usize, l: usize) -> Result<Th3Outcome, CheckError> {
    th3_check_with(g, k, l, spectral_radius(g), DEFAULT_TOL)
}

pub fn th3_check_with(g: &Graph, k: usize, l: usize, mu: f64, tol: f64) -> Result<Th3Outcome, CheckError> {
    if k > l {
        return Err(CheckError::invalid(format!("need k <= l, got k={k}, l={l}")));
    }
    if !book_free(g, k) {
        return Err(CheckError::precondition(format!("graph contains B_{}", k + 1)));
    }
    if !biclique_free(g, l) {
        return Err(CheckError::precondition(format!("graph contains K_2,{}", l + 1)));
    }
    let max_degree = (0..g.order()).map(|u| g.degree(u)).max().unwrap_or(0);
    let bound = th3_value(g.order(), k, l, max_degree);
    let slack = bound - mu;
    let tight = slack.abs() <= tol;
    let equality = g.is_connected().then(|| classify_equality(g, k, l));
    let consistent = equality.is_none_or(|case| (case != EqualityCase::NotTight) == tight);
    Ok(Th3Outcome { mu, bound, slack, holds: slack >= -tol, tight, equality, consistent })
}

/// One row of a [`BoundReport`].
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum BoundEntry {
    Applicable {
        value: f64,
        /// Signed distance from `μ` in the direction of the bound.
        slack: f64,
        holds: bool,
        tight: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        tag: Option<String>,
    },
    NotApplicable {
        reason: String,
    },
}

impl BoundEntry {
    fn applicable(value: f64, slack: f64, holds: bool, tol: f64, tag: Option<String>) -> Self {
        BoundEntry::Applicable { value, slack, holds, tight: slack.abs() <= tol, tag }
    }

    fn not_applicable(reason: impl Into<String>) -> Self {
        BoundEntry::NotApplicable { reason: reason.into() }
    }

    pub fn is_applicable(&self) -> bool {
        matches!(self, BoundEntry::Applicable { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub schema: u32,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub mu: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    pub bounds: BTreeMap<String, BoundEntry>,
}

impl BoundReport {
    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.bounds.get(name)
    }

    /// True iff every applicable bound holds.
    pub fn all_hold(&self) -> bool {
        self.bounds.values().all(|e| match e {
            BoundEntry::Applicable { holds, .. } => *holds,
            BoundEntry::NotApplicable { .. } => true,
        })
    }
}

pub const BOUND_NAMES: [&str; 7] =
    ["turan_upper", "wilf_upper", "cs_lower", "hofmeister_lower", "th2_gap_threshold", "th3_upper", "shi_song_upper"];

/// Evaluates every bound whose parameters are supplied; bounds whose
/// preconditions fail are recorded as not applicable with the reason.
pub fn full_report(g: &Graph, r: Option<usize>, k: Option<usize>, l: Option<usize>) -> BoundReport {
    let tol = DEFAULT_TOL;
    let profile = degree_profile(g);
    let mu = spectral_radius(g);
    let mut bounds = BTreeMap::new();

    let cs = cs_lower(g);
    bounds.insert("cs_lower".into(), BoundEntry::applicable(cs, mu - cs, mu - cs >= -tol, tol, None));
    let hof = hofmeister_from(&profile);
    bounds.insert("hofmeister_lower".into(), BoundEntry::applicable(hof, mu - hof, mu - hof >= -tol, tol, None));

    let (turan, wilf) = match r {
        None => (BoundEntry::not_applicable("requires r"), BoundEntry::not_applicable("requires r")),
        Some(r) => match th1_check_with(g, r, mu, tol) {
            Err(e) => (BoundEntry::not_applicable(e.to_string()), BoundEntry::not_applicable(e.to_string())),
            Ok(out) => {
                let tag = match out.verdict {
                    Verdict::Exception => Some("turan-exception".to_string()),
                    Verdict::NearTie { .. } => Some("near-tie".to_string()),
                    Verdict::Violation { .. } => Some("violation".to_string()),
                    Verdict::Strict { .. } => None,
                };
                let turan = BoundEntry::applicable(out.turan_mu, out.gap, !out.verdict.is_violation(), tol, tag);
                let w = wilf_upper(r, g.order());
                let wilf = BoundEntry::applicable(w, w - mu, w - mu >= -tol, tol, None);
                (turan, wilf)
            }
        },
    };
    bounds.insert("turan_upper".into(), turan);
    bounds.insert("wilf_upper".into(), wilf);

    let th2 = match th2_check_with(g, &profile, mu, tol) {
        Err(e) => BoundEntry::not_applicable(e.to_string()),
        Ok(out) => {
            let tag = match out.branch {
                Th2Branch::General => "general",
                Th2Branch::Subregular => "subregular",
            };
            BoundEntry::applicable(out.threshold, out.gap - out.threshold, out.holds, tol, Some(tag.into()))
        }
    };
    bounds.insert("th2_gap_threshold".into(), th2);

    let (th3, shi_song) = match (k, l) {
        (Some(k), Some(l)) => match th3_check_with(g, k, l, mu, tol) {
            Err(e) => (BoundEntry::not_applicable(e.to_string()), BoundEntry::not_applicable(e.to_string())),
            Ok(out) => {
                let tag = out.equality.filter(|_| out.tight).map(|c| format!("{c:?}"));
                let th3 = BoundEntry::applicable(out.bound, out.slack, out.holds, tol, tag);
                let ss = if !g.is_connected() {
                    BoundEntry::not_applicable("graph is disconnected")
                } else if l > profile.max_degree {
                    BoundEntry::not_applicable(format!("requires l <= Δ = {}", profile.max_degree))
                } else {
                    let v = shi_song_bound(g.order(), k, l, profile.max_degree).expect("parameters checked");
                    BoundEntry::applicable(v, v - mu, v - mu >= -tol, tol, None)
                };
                (th3, ss)
            }
        },
        _ => (BoundEntry::not_applicable("requires k and l"), BoundEntry::not_applicable("requires k and l")),
    };
    bounds.insert("th3_upper".into(), th3);
    bounds.insert("shi_song_upper".into(), shi_song);

    BoundReport { schema: 1, graph6: graph6::to_graph6(g), n: g.order(), m: g.size(), mu, r, k, l, bounds }
}
