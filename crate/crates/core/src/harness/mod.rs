//! Experiment campaigns. Every campaign produces a [`SweepReport`] whose rows
//! follow one fixed CSV schema, are ordered by `row_id`, and depend only on the
//! campaign parameters and seed (never on the number of worker threads).

mod lemmas;
mod monotonicity;
pub mod random;
mod soundness;
mod tightness;

use std::io::Write;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::even_factor::SearchCaps;
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_graph6};
use crate::thresholds::ThresholdError;

pub use lemmas::{lemma_merge_sweep, partitions};
pub use monotonicity::subgraph_monotonicity_sweep;
pub use soundness::soundness_sweep;
pub use tightness::{tightness_report, AddedEdgeCheck, ConditionFinding, TightnessReport};

pub const CSV_HEADER: [&str; 16] = [
    "campaign",
    "seed",
    "row_id",
    "graph6",
    "n",
    "delta",
    "e",
    "rho",
    "e_thr",
    "rho_thr",
    "meets_e",
    "meets_rho",
    "is_extremal",
    "oracle",
    "cost_candidates",
    "elapsed_ms",
];

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("neither theorem applies at n={n}, delta={delta}")]
    NotApplicable { n: usize, delta: usize },
    #[error(transparent)]
    Threshold(#[from] ThresholdError),
    #[error("thread pool: {0}")]
    Pool(String),
}

/// Knobs shared by all campaigns.
#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    pub jobs: usize,
    /// Fill `elapsed_ms`; off by default so reruns are byte-identical.
    pub timings: bool,
    pub caps: SearchCaps,
    /// Draws attempted per accepted sample before giving up on it.
    pub retry_budget: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            jobs: 1,
            timings: false,
            caps: SearchCaps::default(),
            retry_budget: 10_000,
        }
    }
}

/// One CSV row. Column meaning varies slightly per campaign; see the README.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub campaign: String,
    pub seed: u64,
    pub row_id: usize,
    pub graph6: String,
    pub n: usize,
    pub delta: Option<usize>,
    pub e: usize,
    pub rho: f64,
    pub e_thr: Option<usize>,
    pub rho_thr: Option<f64>,
    pub meets_e: bool,
    pub meets_rho: bool,
    pub is_extremal: bool,
    pub oracle: String,
    pub cost_candidates: u64,
    pub elapsed_ms: Option<f64>,
}

impl SweepRow {
    fn new(campaign: &str, seed: u64, row_id: usize, g: &Graph) -> Self {
        SweepRow {
            campaign: campaign.to_string(),
            seed,
            row_id,
            graph6: write_graph6(g),
            n: g.n(),
            delta: g.min_degree(),
            e: g.edge_count(),
            rho: 0.0,
            e_thr: None,
            rho_thr: None,
            meets_e: false,
            meets_rho: false,
            is_extremal: false,
            oracle: "not_run".into(),
            cost_candidates: 0,
            elapsed_ms: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub row_id: usize,
    pub graph6: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub campaign: String,
    pub seed: u64,
    pub rows: Vec<SweepRow>,
    pub counterexamples: Vec<Counterexample>,
    /// Oracle runs that hit a cap where a definite answer was needed.
    pub unknown: usize,
    pub notes: Vec<String>,
}

impl SweepReport {
    fn new(campaign: &str, seed: u64) -> Self {
        SweepReport {
            campaign: campaign.into(),
            seed,
            rows: Vec::new(),
            counterexamples: Vec::new(),
            unknown: 0,
            notes: Vec::new(),
        }
    }

    pub fn pass(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::WriterBuilder::new()
            .has_headers(false)
            .from_writer(out);
        w.write_record(CSV_HEADER)?;
        for row in &self.rows {
            w.serialize(row)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }

    fn flag(&mut self, row: &SweepRow, reason: impl Into<String>) {
        self.counterexamples.push(Counterexample {
            row_id: row.row_id,
            graph6: row.graph6.clone(),
            reason: reason.into(),
        });
    }

    /// Re-reads every row's graph6 and checks the recorded order and size.
    fn cross_validate(&mut self) {
        let mut bad = Vec::new();
        for row in &self.rows {
            if row.graph6.is_empty() {
                continue;
            }
            match parse_graph6(&row.graph6) {
                Ok(g) if g.n() == row.n && g.edge_count() == row.e => {}
                Ok(g) => bad.push((
                    row.clone(),
                    format!("graph6 gives n={}, e={}", g.n(), g.edge_count()),
                )),
                Err(e) => bad.push((row.clone(), format!("graph6 does not parse: {e}"))),
            }
        }
        for (row, reason) in bad {
            self.flag(&row, reason);
        }
    }
}

fn in_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T, HarnessError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| HarnessError::Pool(e.to_string()))?;
    Ok(pool.install(f))
}

fn elapsed_ms(start: Instant, timings: bool) -> Option<f64> {
    timings.then(|| (start.elapsed().as_secs_f64() * 1e3 * 1e3).round() / 1e3)
}
