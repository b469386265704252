//! König deficiency and the almost-KE taxonomy.
//!
//! Everything here is driven by single-element deletions, so [`Deletions`]
//! computes α and μ for every `G - v` and `G - e` once and the predicates
//! read from it. [`Analysis`] adds Ω(G), the critical family and a maximum
//! matching for callers that need the full invariant set.

use serde::Serialize;

use crate::critical::{critical_family_within, CriticalFamily};
use crate::graph::{Edge, Graph, VertexSet};
use crate::independence::{
    alpha, alpha_within, intersect_all, maximum_independent_sets_within, CapacityError,
    DEFAULT_ENUMERATION_CAP,
};
use crate::matching::{
    bipartite_saturating, matching_number, matching_number_within, maximum_matching, Matching,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Probe {
    pub alpha: usize,
    pub mu: usize,
}

/// α and μ of `G`, of every `G - v` and of every `G - e` (edges in
/// lexicographic order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deletions {
    pub n: usize,
    pub alpha: usize,
    pub mu: usize,
    pub edges: Vec<Edge>,
    pub vertex: Vec<Probe>,
    pub edge: Vec<Probe>,
}

impl Deletions {
    pub fn compute(g: &Graph) -> Self {
        let all = g.vertices();
        let vertex = (0..g.n())
            .map(|v| {
                let rest = all.without(v);
                Probe {
                    alpha: alpha_within(g, rest),
                    mu: matching_number_within(g, rest),
                }
            })
            .collect();
        let edges = g.edge_vec();
        let edge = edges
            .iter()
            .map(|&e| {
                let h = g.delete_edge(e).expect("edge taken from the graph");
                Probe {
                    alpha: alpha(&h),
                    mu: matching_number(&h),
                }
            })
            .collect();
        Deletions {
            n: g.n(),
            alpha: alpha_within(g, all),
            mu: matching_number_within(g, all),
            edges,
            vertex,
            edge,
        }
    }

    pub fn kappa(&self) -> usize {
        self.n - self.alpha - self.mu
    }

    pub fn is_ke(&self) -> bool {
        self.kappa() == 0
    }

    pub fn is_1ke(&self) -> bool {
        self.kappa() == 1
    }

    pub fn vertex_deletion_is_ke(&self, v: usize) -> bool {
        let p = self.vertex[v];
        p.alpha + p.mu == self.n - 1
    }

    pub fn edge_deletion_is_ke(&self, i: usize) -> bool {
        let p = self.edge[i];
        p.alpha + p.mu == self.n
    }

    pub fn alpha_critical_vertex(&self, v: usize) -> bool {
        self.vertex[v].alpha < self.alpha
    }

    pub fn mu_critical_vertex(&self, v: usize) -> bool {
        self.vertex[v].mu < self.mu
    }

    pub fn alpha_critical_edge(&self, i: usize) -> bool {
        self.edge[i].alpha > self.alpha
    }

    pub fn mu_critical_edge(&self, i: usize) -> bool {
        self.edge[i].mu < self.mu
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn alpha_critical_vertices(&self) -> VertexSet {
        (0..self.n)
            .filter(|&v| self.alpha_critical_vertex(v))
            .collect()
    }

    pub fn mu_critical_vertices(&self) -> VertexSet {
        (0..self.n)
            .filter(|&v| self.mu_critical_vertex(v))
            .collect()
    }

    pub fn rho_v(&self) -> usize {
        (0..self.n)
            .filter(|&v| self.vertex_deletion_is_ke(v))
            .count()
    }

    pub fn rho_e(&self) -> usize {
        (0..self.edges.len())
            .filter(|&i| self.edge_deletion_is_ke(i))
            .count()
    }

    pub fn vertex_almost_witness(&self) -> Option<usize> {
        if self.is_ke() {
            return None;
        }
        (0..self.n).find(|&v| self.vertex_deletion_is_ke(v))
    }

    pub fn edge_almost_witness(&self) -> Option<Edge> {
        if self.is_ke() {
            return None;
        }
        (0..self.edges.len())
            .find(|&i| self.edge_deletion_is_ke(i))
            .map(|i| self.edges[i])
    }

    pub fn critical_vertex_almost(&self) -> bool {
        !self.is_ke() && self.rho_v() == self.n
    }

    pub fn critical_edge_almost(&self) -> bool {
        !self.is_ke() && self.rho_e() == self.edges.len()
    }

    pub fn verdict(&self) -> ClassificationVerdict {
        let vertex_almost_witness = self.vertex_almost_witness();
        let edge_almost_witness = self.edge_almost_witness();
        ClassificationVerdict {
            kappa: self.kappa(),
            is_ke: self.is_ke(),
            is_1ke: self.is_1ke(),
            vertex_almost: vertex_almost_witness.is_some(),
            vertex_almost_witness,
            edge_almost: edge_almost_witness.is_some(),
            edge_almost_witness,
            critical_vertex_almost: self.critical_vertex_almost(),
            critical_edge_almost: self.critical_edge_almost(),
            rho_v: self.rho_v(),
            rho_e: self.rho_e(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationVerdict {
    pub kappa: usize,
    pub is_ke: bool,
    pub is_1ke: bool,
    pub vertex_almost: bool,
    pub vertex_almost_witness: Option<usize>,
    pub edge_almost: bool,
    pub edge_almost_witness: Option<Edge>,
    pub critical_vertex_almost: bool,
    pub critical_edge_almost: bool,
    pub rho_v: usize,
    pub rho_e: usize,
}

/// Every invariant of one graph, computed once.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub deletions: Deletions,
    /// Ω(G), lexicographic order.
    pub omega: Vec<VertexSet>,
    pub core: VertexSet,
    pub critical: CriticalFamily,
    pub matching: Matching,
}

impl Analysis {
    pub fn compute(g: &Graph) -> Result<Self, CapacityError> {
        Self::compute_capped(g, DEFAULT_ENUMERATION_CAP)
    }

    pub fn compute_capped(g: &Graph, cap: usize) -> Result<Self, CapacityError> {
        let omega = maximum_independent_sets_within(g, g.vertices(), cap)?;
        let critical = critical_family_within(g, g.vertices(), cap)?;
        Ok(Analysis {
            deletions: Deletions::compute(g),
            core: intersect_all(&omega),
            omega,
            critical,
            matching: maximum_matching(g),
        })
    }

    pub fn n(&self) -> usize {
        self.deletions.n
    }

    pub fn alpha(&self) -> usize {
        self.deletions.alpha
    }

    pub fn mu(&self) -> usize {
        self.deletions.mu
    }

    pub fn xi(&self) -> usize {
        self.core.len()
    }

    pub fn d(&self) -> i64 {
        self.critical.profile.d
    }

    pub fn beta(&self) -> usize {
        self.critical.profile.beta
    }

    pub fn epsilon(&self) -> usize {
        self.critical.profile.epsilon
    }

    pub fn alpha_prime(&self) -> usize {
        self.critical.profile.alpha_prime
    }

    pub fn has_perfect_matching(&self) -> bool {
        2 * self.mu() == self.n()
    }
}

/// |V| − (α + μ).
pub fn koenig_deficiency(g: &Graph) -> usize {
    g.n() - alpha(g) - matching_number(g)
}

pub fn is_ke(g: &Graph) -> bool {
    koenig_deficiency(g) == 0
}

pub fn is_1ke(g: &Graph) -> bool {
    koenig_deficiency(g) == 1
}

/// Which clause of the supportive-set definition was met.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SupportWitness {
    /// A vertex outside `A` and a matching from the rest of `V - A` into `A`.
    Vertex { vertex: usize, matching: Matching },
    /// An edge of `G - A` and a matching from the rest of `V - A` into `A`.
    Edge { edge: Edge, matching: Matching },
}

/// Searches vertices in ascending order, then edges of `G - A` in
/// lexicographic order.
pub fn is_supportive(g: &Graph, a: VertexSet) -> Option<SupportWitness> {
    let outside = g.vertices().difference(a);
    for v in outside {
        if let Some(matching) = bipartite_saturating(g, outside.without(v), a) {
            return Some(SupportWitness::Vertex {
                vertex: v,
                matching,
            });
        }
    }
    for edge in g.edges() {
        if !edge.endpoints().is_subset(outside) {
            continue;
        }
        if let Some(matching) = bipartite_saturating(g, outside.difference(edge.endpoints()), a) {
            return Some(SupportWitness::Edge { edge, matching });
        }
    }
    None
}

/// Least vertex whose deletion leaves a KE graph, when `G` itself is not KE.
pub fn vertex_almost_ke(g: &Graph) -> Option<usize> {
    Deletions::compute(g).vertex_almost_witness()
}

/// Least edge whose deletion leaves a KE graph, when `G` itself is not KE.
pub fn edge_almost_ke(g: &Graph) -> Option<Edge> {
    Deletions::compute(g).edge_almost_witness()
}

pub fn critical_vertex_almost_ke(g: &Graph) -> bool {
    Deletions::compute(g).critical_vertex_almost()
}

pub fn critical_edge_almost_ke(g: &Graph) -> bool {
    Deletions::compute(g).critical_edge_almost()
}

pub fn rho_v(g: &Graph) -> usize {
    Deletions::compute(g).rho_v()
}

pub fn rho_e(g: &Graph) -> usize {
    Deletions::compute(g).rho_e()
}

pub fn classify(g: &Graph) -> ClassificationVerdict {
    Deletions::compute(g).verdict()
}
