//! Verification campaigns: stream graphs from the built-in labeled
//! enumeration or a graph6 file, apply one theorem check to every graph that
//! meets its preconditions, and aggregate the outcome into a
//! [`VerificationRecord`].

mod checks;
mod source;

pub use checks::Check;
pub use source::{
    enumerate_labeled, ingest_graph6, labeled_count, read_graph6_file, Graph6Reader, MAX_ENUMERATION_ORDER,
};

use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{graph6::Graph6Error, Graph};
use checks::{Outcome, Prepared};

/// Environment variable overriding the worker count.
pub const THREADS_ENV: &str = "SPECTRAL_BOUNDS_THREADS";
/// At most this many violations and near-ties are stored per record; the
/// counts are always exact.
pub const MAX_STORED_FINDINGS: usize = 1000;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("I/O error: {0}")]
    Io(String),
    #[error("graph6 parse error on line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
    #[error("built-in enumeration supports n <= {max}, got {0}; use a graph6 file for larger orders", max = MAX_ENUMERATION_ORDER)]
    OrderTooLarge(usize),
    #[error("invalid campaign configuration: {0}")]
    InvalidConfig(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSource {
    /// Every labeled graph for each order in the configured range.
    Builtin,
    /// Graphs read from a graph6 file, filtered to the configured order range.
    Graph6File(PathBuf),
}

#[derive(Debug, Clone)]
pub struct CampaignConfig {
    pub check: Check,
    pub n_min: usize,
    pub n_max: usize,
    pub source: GraphSource,
    pub tolerance: f64,
    /// Worker count; `None` uses the available parallelism. The
    /// [`THREADS_ENV`] environment variable takes precedence.
    pub threads: Option<usize>,
}

impl CampaignConfig {
    pub fn builtin(check: Check, n_min: usize, n_max: usize) -> Self {
        Self { check, n_min, n_max, source: GraphSource::Builtin, tolerance: crate::bounds::DEFAULT_TOL, threads: None }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads);
        self
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if !(1e-12..=1e-6).contains(&self.tolerance) {
            return Err(HarnessError::InvalidConfig(format!("tolerance {:e} outside [1e-12, 1e-6]", self.tolerance)));
        }
        if self.n_min > self.n_max {
            return Err(HarnessError::InvalidConfig(format!("empty order range {}..={}", self.n_min, self.n_max)));
        }
        if self.threads == Some(0) {
            return Err(HarnessError::InvalidConfig("thread count must be positive".into()));
        }
        if self.source == GraphSource::Builtin {
            source::check_order(self.n_min)?;
            source::check_order(self.n_max)?;
        }
        self.check.validate()
    }

    fn resolved_threads(&self) -> usize {
        std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&t| t > 0)
            .or(self.threads)
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Finding {
    pub graph6: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NearTie {
    pub graph6: String,
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationRecord {
    pub schema: u32,
    pub campaign: String,
    pub params: checks::Params,
    pub source: String,
    pub n_min: usize,
    pub n_max: usize,
    pub tolerance: f64,
    /// Graphs streamed from the source within the order range.
    pub graphs_checked: u64,
    /// Graphs that met the check's preconditions.
    pub graphs_applicable: u64,
    pub violation_count: u64,
    pub violations: Vec<Finding>,
    pub near_tie_count: u64,
    pub near_ties: Vec<NearTie>,
    /// Extremal or equality cases seen (meaning depends on the campaign).
    pub exceptions_seen: u64,
    pub passed: bool,
    pub wall_time_secs: f64,
}

impl VerificationRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }
}

#[derive(Debug, Default)]
struct Tally {
    checked: u64,
    applicable: u64,
    violation_count: u64,
    violations: Vec<Finding>,
    near_tie_count: u64,
    near_ties: Vec<NearTie>,
    exceptions: u64,
}

impl Tally {
    fn record(&mut self, g: &Graph, outcome: Outcome) {
        self.checked += 1;
        let Outcome::Applicable { violation, near_tie, exception } = outcome else {
            return;
        };
        self.applicable += 1;
        if let Some(detail) = violation {
            self.violation_count += 1;
            if self.violations.len() < MAX_STORED_FINDINGS {
                self.violations.push(Finding { graph6: g.to_string(), detail });
            }
        }
        if let Some(gap) = near_tie {
            self.near_tie_count += 1;
            if self.near_ties.len() < MAX_STORED_FINDINGS {
                self.near_ties.push(NearTie { graph6: g.to_string(), gap });
            }
        }
        self.exceptions += exception as u64;
    }

    fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.applicable += other.applicable;
        self.violation_count += other.violation_count;
        self.near_tie_count += other.near_tie_count;
        self.exceptions += other.exceptions;
        let room = MAX_STORED_FINDINGS - self.violations.len();
        self.violations.extend(other.violations.into_iter().take(room));
        let room = MAX_STORED_FINDINGS - self.near_ties.len();
        self.near_ties.extend(other.near_ties.into_iter().take(room));
    }
}

/// A contiguous slice of the work: a mask range of one order, or a range of
/// indices into the ingested graphs.
#[derive(Debug, Clone, Copy)]
enum Chunk {
    Masks { n: usize, start: u64, end: u64 },
    Loaded { start: usize, end: usize },
}

const CHUNKS_PER_THREAD: usize = 16;

pub fn run_campaign(config: &CampaignConfig) -> Result<VerificationRecord, HarnessError> {
    config.validate()?;
    let started = Instant::now();
    let threads = config.resolved_threads();

    let loaded: Vec<Graph> = match &config.source {
        GraphSource::Builtin => Vec::new(),
        GraphSource::Graph6File(path) => {
            read_graph6_file(path)?.into_iter().filter(|g| (config.n_min..=config.n_max).contains(&g.order())).collect()
        }
    };

    let target = threads * CHUNKS_PER_THREAD;
    let mut chunks = Vec::new();
    match config.source {
        GraphSource::Builtin => {
            for n in config.n_min..=config.n_max {
                let total = labeled_count(n);
                let step = total.div_ceil(target as u64).max(1);
                let mut start = 0;
                while start < total {
                    let end = (start + step).min(total);
                    chunks.push(Chunk::Masks { n, start, end });
                    start = end;
                }
            }
        }
        GraphSource::Graph6File(_) => {
            let step = loaded.len().div_ceil(target).max(1);
            let mut start = 0;
            while start < loaded.len() {
                let end = (start + step).min(loaded.len());
                chunks.push(Chunk::Loaded { start, end });
                start = end;
            }
        }
    }

    let prepared = Prepared::new(&config.check, config.n_min, config.n_max.min(256))?;
    let tol = config.tolerance;
    let run_chunk = |chunk: Chunk| -> Tally {
        let mut tally = Tally::default();
        match chunk {
            Chunk::Masks { n, start, end } => {
                for mask in start..end {
                    let g = Graph::from_edge_mask(n, mask).expect("order validated");
                    tally.record(&g, prepared.examine(&g, tol));
                }
            }
            Chunk::Loaded { start, end } => {
                for g in &loaded[start..end] {
                    tally.record(g, prepared.examine(g, tol));
                }
            }
        }
        tally
    };

    let results: Mutex<Vec<Option<Tally>>> = Mutex::new((0..chunks.len()).map(|_| None).collect());
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..threads.min(chunks.len()).max(1) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&chunk) = chunks.get(i) else { break };
                let tally = run_chunk(chunk);
                results.lock().expect("no worker panicked")[i] = Some(tally);
            });
        }
    });

    let mut total = Tally::default();
    for tally in results.into_inner().expect("no worker panicked") {
        total.merge(tally.expect("every chunk ran"));
    }

    Ok(VerificationRecord {
        schema: 1,
        campaign: config.check.name().to_string(),
        params: config.check.params(),
        source: match &config.source {
            GraphSource::Builtin => "builtin".to_string(),
            GraphSource::Graph6File(p) => p.display().to_string(),
        },
        n_min: config.n_min,
        n_max: config.n_max,
        tolerance: tol,
        graphs_checked: total.checked,
        graphs_applicable: total.applicable,
        violation_count: total.violation_count,
        passed: total.violation_count == 0,
        violations: total.violations,
        near_tie_count: total.near_tie_count,
        near_ties: total.near_ties,
        exceptions_seen: total.exceptions,
        wall_time_secs: started.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        let ok = CampaignConfig::builtin(Check::Classical, 1, 4);
        assert!(ok.validate().is_ok());
        let too_big = CampaignConfig::builtin(Check::Classical, 1, 8);
        assert!(matches!(too_big.validate(), Err(HarnessError::OrderTooLarge(8))));
        let mut bad_tol = ok.clone();
        bad_tol.tolerance = 1e-3;
        assert!(bad_tol.validate().is_err());
        let reversed = CampaignConfig::builtin(Check::Classical, 5, 4);
        assert!(reversed.validate().is_err());
        let bad_kl = CampaignConfig::builtin(Check::BookBiclique { k: 2, l: 1 }, 1, 4);
        assert!(bad_kl.validate().is_err());
        let bad_r = CampaignConfig::builtin(Check::Turan { r: 1 }, 1, 4);
        assert!(bad_r.validate().is_err());
    }

    #[test]
    fn counts_match_enumeration() {
        let rec = run_campaign(&CampaignConfig::builtin(Check::Classical, 1, 5).with_threads(3)).unwrap();
        assert_eq!(rec.graphs_checked, (1..=5).map(labeled_count).sum::<u64>());
        assert!(rec.passed);
    }

    #[test]
    fn parallelism_does_not_change_results() {
        let base = CampaignConfig::builtin(Check::Turan { r: 2 }, 2, 6);
        let mut a = run_campaign(&base.clone().with_threads(1)).unwrap();
        let mut b = run_campaign(&base.with_threads(5)).unwrap();
        a.wall_time_secs = 0.0;
        b.wall_time_secs = 0.0;
        assert_eq!(a, b);
        assert_eq!(a.to_json(), b.to_json());
    }
}
