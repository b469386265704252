//! Flat, serializable summary of every invariant of one graph.
//!
//! Field meanings are documented in `docs/report-schema.md`.

use serde::Serialize;
use thiserror::Error;

use crate::classify::{Analysis, ClassificationVerdict};
use crate::critical::{larson_decomposition_from, DecompositionError};
use crate::graph::{Graph, VertexSet};
use crate::independence::CapacityError;
use crate::io::to_graph6;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Capacity(#[from] CapacityError),
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub schema_version: u32,
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub mu: usize,
    pub kappa: usize,
    pub d: i64,
    pub xi: usize,
    pub epsilon: usize,
    pub beta: usize,
    pub alpha_prime: usize,
    pub rho_v: usize,
    pub rho_e: usize,
    pub core: VertexSet,
    pub ker: VertexSet,
    pub diadem: VertexSet,
    pub neighborhood_of_diadem: VertexSet,
    pub alpha_critical_vertices: VertexSet,
    pub mu_critical_vertices: VertexSet,
    pub maximum_critical_sets: Vec<VertexSet>,
    pub larson_x: VertexSet,
    pub larson_degenerate: bool,
    pub has_perfect_matching: bool,
    pub bipartite: bool,
    pub almost_bipartite: bool,
    pub classification: ClassificationVerdict,
    pub graph6: String,
    pub edges: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl InvariantReport {
    pub fn compute(g: &Graph) -> Result<Self, ReportError> {
        let a = Analysis::compute(g)?;
        Self::from_analysis(g, &a)
    }

    pub fn from_analysis(g: &Graph, a: &Analysis) -> Result<Self, ReportError> {
        let larson = larson_decomposition_from(g, &a.critical)?;
        let profile = &a.critical.profile;
        let del = &a.deletions;
        let classification = del.verdict();
        Ok(InvariantReport {
            schema_version: SCHEMA_VERSION,
            n: g.n(),
            m: g.m(),
            alpha: a.alpha(),
            mu: a.mu(),
            kappa: classification.kappa,
            d: a.d(),
            xi: a.xi(),
            epsilon: a.epsilon(),
            beta: a.beta(),
            alpha_prime: a.alpha_prime(),
            rho_v: classification.rho_v,
            rho_e: classification.rho_e,
            core: a.core,
            ker: profile.ker,
            diadem: profile.diadem,
            neighborhood_of_diadem: g.neighborhood(profile.diadem),
            alpha_critical_vertices: del.alpha_critical_vertices(),
            mu_critical_vertices: del.mu_critical_vertices(),
            maximum_critical_sets: a.critical.maximum_sets().collect(),
            larson_x: larson.x,
            larson_degenerate: larson.degenerate,
            has_perfect_matching: a.has_perfect_matching(),
            bipartite: g.is_bipartite(),
            almost_bipartite: g.is_almost_bipartite(),
            classification,
            graph6: to_graph6(g),
            edges: g.edges().map(|e| [e.u, e.v]).collect(),
            labels: g.labels().map(<[String]>::to_vec),
        })
    }

    /// μ-critical vertices that are not α-critical.
    pub fn mu_critical_not_alpha_critical(&self) -> VertexSet {
        self.mu_critical_vertices
            .difference(self.alpha_critical_vertices)
    }
}
