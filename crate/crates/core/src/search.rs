//! Corpus scans for tight, extremal or separating instances.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::classify::Analysis;
use crate::generators::{CorpusDescriptor, CorpusItem, GeneratorError};
use crate::graph::Graph;
use crate::independence::CapacityError;
use crate::report::{InvariantReport, ReportError};

const CHUNK: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Objective {
    /// 1-KE graphs with `rho_v = n + d - xi - beta`.
    Cor18Tight,
    /// 1-KE graphs maximizing `n + d - xi - beta - rho_v`.
    Cor18GapMax,
    /// Graphs with edges maximizing `rho_e - m`.
    RhoEExtremal,
    /// `N(diadem)` strictly inside the μ-critical non-α-critical vertices,
    /// scored by the size of the gap.
    MuCritNotInNDiadem,
}

impl Objective {
    pub const ALL: [Objective; 4] = [
        Objective::Cor18Tight,
        Objective::Cor18GapMax,
        Objective::RhoEExtremal,
        Objective::MuCritNotInNDiadem,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Objective::Cor18Tight => "cor18-tight",
            Objective::Cor18GapMax => "cor18-gap-max",
            Objective::RhoEExtremal => "rho-e-extremal",
            Objective::MuCritNotInNDiadem => "mu-crit-not-in-N-diadem",
        }
    }

    /// Score of `g`, or `None` if it is not a candidate.
    fn score(self, g: &Graph, a: &Analysis) -> Option<i64> {
        let del = &a.deletions;
        match self {
            Objective::Cor18Tight | Objective::Cor18GapMax => {
                if !del.is_1ke() {
                    return None;
                }
                let gap =
                    g.n() as i64 + a.d() - a.xi() as i64 - a.beta() as i64 - del.rho_v() as i64;
                match self {
                    Objective::Cor18Tight => (gap == 0).then_some(0),
                    _ => Some(gap),
                }
            }
            Objective::RhoEExtremal => (g.m() > 0).then(|| del.rho_e() as i64 - g.m() as i64),
            Objective::MuCritNotInNDiadem => {
                let quiet = del
                    .mu_critical_vertices()
                    .difference(del.alpha_critical_vertices());
                let nd = g.neighborhood(a.critical.profile.diadem);
                (nd.is_subset(quiet) && nd != quiet).then(|| quiet.difference(nd).len() as i64)
            }
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Objective {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl FromStr for Objective {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, SearchError> {
        Objective::ALL
            .into_iter()
            .find(|o| o.as_str() == s)
            .ok_or_else(|| SearchError::UnknownObjective(s.to_string()))
    }
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("unknown objective `{0}`")]
    UnknownObjective(String),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error("graph {graph_id}: {source}")]
    Capacity {
        graph_id: String,
        source: CapacityError,
    },
    #[error(transparent)]
    Report(#[from] ReportError),
    #[error("thread pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    /// Findings kept, in corpus order, among the best-scoring graphs.
    pub limit: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { jobs: 0, limit: 10 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Finding {
    pub graph_id: String,
    pub score: i64,
    pub report: InvariantReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub objective: Objective,
    pub descriptor: CorpusDescriptor,
    pub graphs: u64,
    pub candidates: u64,
    pub best_score: Option<i64>,
    /// Graphs reaching `best_score`; may exceed `findings.len()`.
    pub attained: u64,
    pub findings: Vec<Finding>,
}

pub fn search(
    descriptor: &CorpusDescriptor,
    objective: Objective,
    options: &SearchOptions,
) -> Result<SearchReport, SearchError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(|e| SearchError::Pool(e.to_string()))?;
    let mut items = descriptor.items()?;
    let (mut graphs, mut candidates, mut attained) = (0u64, 0u64, 0u64);
    let mut best: Option<i64> = None;
    let mut kept: Vec<(CorpusItem, Analysis)> = Vec::new();
    loop {
        let chunk: Vec<CorpusItem> = items.by_ref().take(CHUNK).collect::<Result<_, _>>()?;
        if chunk.is_empty() {
            break;
        }
        let scored: Vec<Option<(i64, Analysis)>> = pool.install(|| {
            chunk
                .par_iter()
                .map(|item| {
                    let a =
                        Analysis::compute(&item.graph).map_err(|source| SearchError::Capacity {
                            graph_id: item.id.clone(),
                            source,
                        })?;
                    Ok(objective.score(&item.graph, &a).map(|s| (s, a)))
                })
                .collect::<Result<_, SearchError>>()
        })?;
        graphs += chunk.len() as u64;
        for (item, s) in chunk.into_iter().zip(scored) {
            let Some((score, a)) = s else { continue };
            candidates += 1;
            if best.is_none_or(|b| score > b) {
                best = Some(score);
                attained = 0;
                kept.clear();
            }
            if best == Some(score) {
                attained += 1;
                if kept.len() < options.limit {
                    kept.push((item, a));
                }
            }
        }
    }
    let findings = kept
        .into_iter()
        .map(|(item, a)| {
            Ok(Finding {
                score: best.unwrap_or_default(),
                report: InvariantReport::from_analysis(&item.graph, &a)?,
                graph_id: item.id,
            })
        })
        .collect::<Result<_, SearchError>>()?;
    Ok(SearchReport {
        objective,
        descriptor: descriptor.clone(),
        graphs,
        candidates,
        best_score: best,
        attained,
        findings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::Parity;

    fn family(name: &str, min: usize, max: usize, parity: Parity) -> CorpusDescriptor {
        CorpusDescriptor::Family {
            name: name.into(),
            min,
            max,
            parity,
        }
    }

    #[test]
    fn objective_names_round_trip() {
        for o in Objective::ALL {
            assert_eq!(o.as_str().parse::<Objective>().unwrap(), o);
        }
        assert!("nope".parse::<Objective>().is_err());
    }

    #[test]
    fn cor18_tight_over_small_graphs_finds_c5() {
        let r = search(
            &CorpusDescriptor::exhaustive(5),
            Objective::Cor18Tight,
            &SearchOptions {
                jobs: 2,
                limit: usize::MAX,
            },
        )
        .unwrap();
        assert!(r.attained > 0);
        let c5 = crate::io::to_graph6(&crate::generators::cycle(5));
        assert!(r.findings.iter().any(|f| f.report.graph6 == c5));
    }

    #[test]
    fn odd_cycles_are_rho_e_extremal() {
        let r = search(
            &family("cycle", 3, 19, Parity::Odd),
            Objective::RhoEExtremal,
            &SearchOptions::default(),
        )
        .unwrap();
        assert_eq!((r.graphs, r.attained, r.best_score), (9, 9, Some(0)));
    }

    #[test]
    fn even_complete_graphs_separate_n_diadem() {
        let r = search(
            &family("complete", 4, 10, Parity::Even),
            Objective::MuCritNotInNDiadem,
            &SearchOptions::default(),
        )
        .unwrap();
        assert_eq!(r.candidates, 4);
        assert_eq!(r.best_score, Some(10));
        assert_eq!(r.findings[0].graph_id, "complete-10");
    }
}
