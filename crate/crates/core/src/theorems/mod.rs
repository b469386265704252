//! Executable catalog of the structural statements about KE and 1-KE graphs.
//!
//! Each entry has a hypothesis and a conclusion. When the hypothesis fails
//! the result is `not-applicable` with a note, so a vacuous pass is never
//! counted as `holds`. Biconditionals apply to every graph in their stated
//! class and are checked in both directions.

mod checkers;
mod corpus;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::classify::Analysis;
use crate::graph::{Edge, Graph, VertexSet};
use crate::independence::CapacityError;
use crate::io::{from_graph6, to_graph6, ParseError};

pub use corpus::{verify_corpus, CorpusError, CorpusReport, Tally, VerifyOptions, Violation};

macro_rules! catalog {
    ($($variant:ident => $id:literal, $summary:literal;)*) => {
        /// Identifier of a catalog entry.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum TheoremId {
            $($variant),*
        }

        impl TheoremId {
            /// All entries in catalog order.
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $id),*
                }
            }

            /// One-line statement of what the checker asserts.
            pub fn summary(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $summary),*
                }
            }
        }

        impl FromStr for TheoremId {
            type Err = CheckError;

            fn from_str(s: &str) -> Result<Self, CheckError> {
                match s {
                    $($id => Ok(TheoremId::$variant),)*
                    _ => Err(CheckError::UnknownTheorem(s.to_string())),
                }
            }
        }
    };
}

catalog! {
    BoundsChain => "bounds-chain", "floor(n/2)+1 <= alpha+mu <= n <= alpha+2mu for n >= 1";
    Th715 => "th715", "KE <=> G = S*A with a matching of A into S <=> every maximum matching matches V-S into S for all S in Omega <=> every S in Omega is critical";
    Th1 => "Th1", "non-KE: 1-KE <=> some maximum independent set is supportive <=> every one is";
    Cor1 => "cor1", "non-KE: 1-KE <=> some G-v is KE or some G-x-y (xy an edge) is KE";
    Th911 => "th911", "non-KE: 1-KE <=> every S in Omega admits a vertex or an edge of G-S completing a matching of the rest into S";
    Th12 => "th12", "1-KE: mu <= alpha+1; mu = alpha+1 <=> perfect matching; no perfect matching and n even => mu < alpha";
    Th3 => "th3", "vertex or edge almost KE => 1-KE";
    Th2 => "th2", "non-KE: vertex almost <=> 1-KE with a vertex neither alpha- nor mu-critical (witness keeps alpha and mu); edge almost <=> 1-KE with an alpha-critical non-mu-critical edge";
    Lem1 => "lem1", "alpha <= alpha(G-e) <= alpha+1; alpha-1 <= alpha(G-v) <= alpha; mu-1 <= mu(G-a) <= mu";
    Cor25 => "cor25", "alpha(G-e)+mu(G-e) = alpha+mu <=> e is alpha- and mu-critical or neither";
    Prop1_1 => "prop1_1", "KE: alpha-critical edges are mu-critical; bipartite: the two edge sets coincide";
    Lem84 => "lem84", "almost bipartite: n-1 <= alpha+mu <= n";
    Cor3 => "cor3", "almost bipartite: 1-KE <=> vertex almost <=> edge almost";
    Th8 => "th8", "some G-v KE => kappa <= 1";
    Th10 => "th10", "some G-e KE => kappa <= 1";
    Th17 => "th17", "1-KE: G-v KE <=> v is neither alpha- nor mu-critical";
    Th11 => "th11", "independent A with a matching M1 from N(A) into A: M1 extends to a maximum matching and N(A) is mu-critical";
    Prop11 => "prop11", "A critical: core meets no N(A); hence core and N(diadem) are disjoint and N(diadem) lies in the mu-critical non-alpha-critical vertices";
    Th333 => "th333", "every critical set lies in some S in Omega and in some maximum critical set, and N(S) matches into S";
    Th100 => "th100", "X = N[A] is the same for every maximum critical A, alpha splits over X, G[X] is KE, G[V-X] has only the empty critical set";
    Th444 => "th444", "union and intersection of critical sets are critical";
    Cor18 => "cor18", "1-KE: rho_v <= n + d - xi - beta";
    Cor2 => "cor2", "1-KE: rho_v <= n + d - xi - alpha'";
    Th9 => "th9", "KE: rho_v = n - xi + epsilon and rho_e <= m - xi + epsilon";
    Lem10 => "lem10", "critical vertex almost KE <=> 1-KE, no perfect matching, xi = 0, beta = 0 (then alpha = mu); rho_v = n <=> KE with core = ker or the former";
    OddOrderRemark => "odd-order-remark", "critical vertex almost KE => n odd";
    CriticalEdgeLemma => "critical-edge-lemma", "critical edge almost KE => every edge is alpha-critical";
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Parses a comma-separated id list.
pub fn parse_ids(list: &str) -> Result<Vec<TheoremId>, CheckError> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(TheoremId::from_str)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error(transparent)]
    Capacity(#[from] CapacityError),
    #[error("witness does not decode: {0}")]
    Witness(#[from] ParseError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Violated,
    NotApplicable,
}

/// The offending part of a violating graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Element {
    Vertex(usize),
    Edge(Edge),
    Set(VertexSet),
    Pair(VertexSet, VertexSet),
}

/// Self-contained counterexample: the graph in graph6 and what failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<Element>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremCheckResult {
    pub theorem: TheoremId,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis_note: Option<String>,
}

impl TheoremCheckResult {
    pub(crate) fn holds(theorem: TheoremId) -> Self {
        TheoremCheckResult {
            theorem,
            status: Status::Holds,
            witness: None,
            hypothesis_note: None,
        }
    }

    pub(crate) fn not_applicable(theorem: TheoremId, note: impl Into<String>) -> Self {
        TheoremCheckResult {
            theorem,
            status: Status::NotApplicable,
            witness: None,
            hypothesis_note: Some(note.into()),
        }
    }

    pub(crate) fn violated(
        theorem: TheoremId,
        g: &Graph,
        element: Option<Element>,
        detail: String,
    ) -> Self {
        TheoremCheckResult {
            theorem,
            status: Status::Violated,
            witness: Some(Witness {
                graph6: to_graph6(g),
                element,
                detail,
            }),
            hypothesis_note: None,
        }
    }
}

/// Runs one checker against precomputed invariants of `g`.
pub fn check_with(
    id: TheoremId,
    g: &Graph,
    a: &Analysis,
) -> Result<TheoremCheckResult, CheckError> {
    checkers::run(id, g, a)
}

pub fn check(id: TheoremId, g: &Graph) -> Result<TheoremCheckResult, CheckError> {
    check_with(id, g, &Analysis::compute(g)?)
}

/// Looks the id up in the catalog first.
pub fn check_by_name(id: &str, g: &Graph) -> Result<TheoremCheckResult, CheckError> {
    check(id.parse()?, g)
}

/// One result per catalog entry, in catalog order.
pub fn check_all(g: &Graph) -> Result<Vec<TheoremCheckResult>, CheckError> {
    let a = Analysis::compute(g)?;
    TheoremId::ALL
        .iter()
        .map(|&id| check_with(id, g, &a))
        .collect()
}

/// Decodes the witness graph of a violation and runs the same checker on it.
/// Returns whether the violation reproduces.
pub fn recheck(result: &TheoremCheckResult) -> Result<bool, CheckError> {
    let Some(witness) = &result.witness else {
        return Ok(false);
    };
    let g = from_graph6(&witness.graph6)?;
    Ok(check(result.theorem, &g)?.status == Status::Violated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, friendship, path};

    const EXPECTED_IDS: [&str; 27] = [
        "bounds-chain",
        "th715",
        "Th1",
        "cor1",
        "th911",
        "th12",
        "th3",
        "th2",
        "lem1",
        "cor25",
        "prop1_1",
        "lem84",
        "cor3",
        "th8",
        "th10",
        "th17",
        "th11",
        "prop11",
        "th333",
        "th100",
        "th444",
        "cor18",
        "cor2",
        "th9",
        "lem10",
        "odd-order-remark",
        "critical-edge-lemma",
    ];

    #[test]
    fn catalog_is_complete() {
        let ids: Vec<&str> = TheoremId::ALL.iter().map(|id| id.as_str()).collect();
        assert_eq!(ids, EXPECTED_IDS);
        for name in EXPECTED_IDS {
            let id: TheoremId = name.parse().unwrap();
            assert_eq!(id.as_str(), name);
            // every id dispatches to a checker
            check(id, &cycle(5)).unwrap();
        }
        assert!(matches!(
            "th99".parse::<TheoremId>(),
            Err(CheckError::UnknownTheorem(_))
        ));
        assert_eq!(
            parse_ids("cor18, th9").unwrap(),
            vec![TheoremId::Cor18, TheoremId::Th9]
        );
    }

    #[test]
    fn documented_examples() {
        assert_eq!(
            check(TheoremId::Cor18, &cycle(5)).unwrap().status,
            Status::Holds
        );
        assert_eq!(
            check(TheoremId::Th9, &cycle(4)).unwrap().status,
            Status::Holds
        );
        assert_eq!(
            check(TheoremId::Lem10, &complete(4)).unwrap().status,
            Status::Holds
        );
        assert_eq!(
            check(TheoremId::Th9, &cycle(5)).unwrap().status,
            Status::NotApplicable
        );
        assert!(check(TheoremId::Cor18, &cycle(4))
            .unwrap()
            .hypothesis_note
            .is_some());
    }

    #[test]
    fn no_violations_on_small_families() {
        let graphs = [
            cycle(5),
            complete(5),
            Graph::empty(0).unwrap(),
            Graph::empty(3).unwrap(),
            friendship(3),
            path(4),
            complete(4),
        ];
        for g in &graphs {
            for r in check_all(g).unwrap() {
                assert_ne!(r.status, Status::Violated, "{r:?}");
                assert!(r.witness.is_none());
            }
        }
        let results = check_all(&Graph::empty(0).unwrap()).unwrap();
        assert_eq!(results.len(), 27);
    }

    #[test]
    fn recheck_requires_a_real_violation() {
        let fake = TheoremCheckResult::violated(TheoremId::Cor18, &cycle(5), None, "forged".into());
        assert_eq!(recheck(&fake), Ok(false));
        assert_eq!(
            recheck(&TheoremCheckResult::holds(TheoremId::Cor18)),
            Ok(false)
        );
    }
}
