use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::classify::Analysis;
use crate::generators::{CorpusDescriptor, CorpusItem, GeneratorError};

use super::{check_with, CheckError, Status, TheoremCheckResult, TheoremId};

const CHUNK: usize = 4096;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    pub time_budget: Option<Duration>,
    /// Violations kept in the report. Counting continues past the limit.
    pub max_witnesses: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            jobs: 0,
            time_budget: None,
            max_witnesses: 16,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub theorem: TheoremId,
    pub holds: u64,
    pub violated: u64,
    pub not_applicable: u64,
}

impl Tally {
    fn new(theorem: TheoremId) -> Self {
        Tally {
            theorem,
            holds: 0,
            violated: 0,
            not_applicable: 0,
        }
    }

    fn record(&mut self, status: Status) {
        match status {
            Status::Holds => self.holds += 1,
            Status::Violated => self.violated += 1,
            Status::NotApplicable => self.not_applicable += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph_id: String,
    pub result: TheoremCheckResult,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusReport {
    pub descriptor: CorpusDescriptor,
    pub graphs: u64,
    pub tallies: Vec<Tally>,
    pub violations: Vec<Violation>,
    #[serde(skip)]
    pub duration: Duration,
}

impl CorpusReport {
    pub fn total_violations(&self) -> u64 {
        self.tallies.iter().map(|t| t.violated).sum()
    }

    pub fn tally(&self, id: TheoremId) -> Option<&Tally> {
        self.tallies.iter().find(|t| t.theorem == id)
    }
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error("graph {graph_id}: {source}")]
    Check {
        graph_id: String,
        source: CheckError,
    },
    #[error("time budget of {budget:?} exhausted after {graphs} graphs")]
    Timeout { budget: Duration, graphs: u64 },
    #[error("thread pool: {0}")]
    Pool(String),
}

fn check_item(
    item: &CorpusItem,
    ids: &[TheoremId],
) -> Result<Vec<TheoremCheckResult>, CorpusError> {
    let wrap = |source: CheckError| CorpusError::Check {
        graph_id: item.id.clone(),
        source,
    };
    let a = Analysis::compute(&item.graph).map_err(|e| wrap(e.into()))?;
    ids.iter()
        .map(|&id| check_with(id, &item.graph, &a).map_err(wrap))
        .collect()
}

/// Checks every theorem in `ids` on every graph of the corpus.
///
/// Results are merged in corpus order, so the report does not depend on
/// `jobs`.
pub fn verify_corpus(
    descriptor: &CorpusDescriptor,
    ids: &[TheoremId],
    options: &VerifyOptions,
) -> Result<CorpusReport, CorpusError> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(|e| CorpusError::Pool(e.to_string()))?;
    let mut items = descriptor.items()?;
    let mut tallies: Vec<Tally> = ids.iter().map(|&id| Tally::new(id)).collect();
    let mut violations = Vec::new();
    let mut graphs = 0u64;
    loop {
        let chunk: Vec<CorpusItem> = items.by_ref().take(CHUNK).collect::<Result<_, _>>()?;
        if chunk.is_empty() {
            break;
        }
        let results: Vec<_> = pool.install(|| {
            chunk
                .par_iter()
                .map(|item| check_item(item, ids))
                .collect::<Result<Vec<_>, _>>()
        })?;
        for (item, rs) in chunk.iter().zip(results) {
            for (tally, r) in tallies.iter_mut().zip(rs) {
                tally.record(r.status);
                if r.status == Status::Violated && violations.len() < options.max_witnesses {
                    violations.push(Violation {
                        graph_id: item.id.clone(),
                        result: r,
                    });
                }
            }
        }
        graphs += chunk.len() as u64;
        if let Some(budget) = options.time_budget {
            if start.elapsed() > budget {
                return Err(CorpusError::Timeout { budget, graphs });
            }
        }
    }
    Ok(CorpusReport {
        descriptor: descriptor.clone(),
        graphs,
        tallies,
        violations,
        duration: start.elapsed(),
    })
}
