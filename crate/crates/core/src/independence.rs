//! Independence number, the family Ω(G) of maximum independent sets,
//! core(G), and α-criticality.
//!
//! The search branches on a maximum-degree candidate (include it, or drop
//! it) and prunes with a greedy clique cover of the remaining candidates:
//! an independent set meets each clique at most once.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, VertexSet};

/// Default ceiling on the number of sets any enumeration may produce.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("enumeration exceeded the cap of {cap} sets")]
pub struct CapacityError {
    pub cap: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependenceProfile {
    pub alpha: usize,
    pub omega_count: usize,
    pub core: VertexSet,
    pub xi: usize,
}

/// Upper bound on α(G[cand]): the number of classes in a greedy clique
/// partition, scanning vertices in ascending order.
pub(crate) fn clique_cover_bound(g: &Graph, cand: VertexSet) -> usize {
    let mut rest = cand;
    let mut cliques = 0;
    while let Some(v) = rest.first() {
        rest.remove(v);
        let mut common = g.neighbors(v).intersection(rest);
        while let Some(w) = common.first() {
            rest.remove(w);
            common = common.intersection(g.neighbors(w)).without(w);
        }
        cliques += 1;
    }
    cliques
}

/// Candidate of maximum degree inside `cand`, lowest index on ties.
fn branch_vertex(g: &Graph, cand: VertexSet) -> (usize, usize) {
    let mut best = (usize::MAX, 0);
    for v in cand {
        let d = g.neighbors(v).intersection(cand).len();
        if best.0 == usize::MAX || d > best.1 {
            best = (v, d);
        }
    }
    best
}

fn alpha_search(g: &Graph, cand: VertexSet, size: usize, best: &mut usize) {
    if size + cand.len() <= *best {
        return;
    }
    let (v, deg) = branch_vertex(g, cand);
    if deg == 0 {
        // no edges left among the candidates
        *best = size + cand.len();
        return;
    }
    if size + clique_cover_bound(g, cand) <= *best {
        return;
    }
    alpha_search(
        g,
        cand.difference(g.neighbors(v)).without(v),
        size + 1,
        best,
    );
    alpha_search(g, cand.without(v), size, best);
}

/// α(G[active]).
pub(crate) fn alpha_within(g: &Graph, active: VertexSet) -> usize {
    let mut best = 0;
    alpha_search(g, active, 0, &mut best);
    best
}

/// α(G).
pub fn alpha(g: &Graph) -> usize {
    alpha_within(g, g.vertices())
}

struct Collector {
    target: usize,
    cap: usize,
    found: Vec<VertexSet>,
}

impl Collector {
    fn search(
        &mut self,
        g: &Graph,
        chosen: VertexSet,
        cand: VertexSet,
    ) -> Result<(), CapacityError> {
        let size = chosen.len();
        if size + cand.len() < self.target {
            return Ok(());
        }
        if cand.is_empty() {
            if self.found.len() == self.cap {
                return Err(CapacityError { cap: self.cap });
            }
            self.found.push(chosen);
            return Ok(());
        }
        if size + clique_cover_bound(g, cand) < self.target {
            return Ok(());
        }
        let (v, _) = branch_vertex(g, cand);
        self.search(
            g,
            chosen.with(v),
            cand.difference(g.neighbors(v)).without(v),
        )?;
        self.search(g, chosen, cand.without(v))
    }
}

/// Every maximum independent set of `G[active]`, in ascending lexicographic
/// order of their sorted vertex lists.
pub(crate) fn maximum_independent_sets_within(
    g: &Graph,
    active: VertexSet,
    cap: usize,
) -> Result<Vec<VertexSet>, CapacityError> {
    let mut collector = Collector {
        target: alpha_within(g, active),
        cap,
        found: Vec::new(),
    };
    collector.search(g, VertexSet::EMPTY, active)?;
    let mut sets = collector.found;
    sets.sort_by(VertexSet::lex_cmp);
    sets.dedup();
    Ok(sets)
}

/// Ω(G) with the default cap.
pub fn enumerate_maximum_independent_sets(g: &Graph) -> Result<Vec<VertexSet>, CapacityError> {
    maximum_independent_sets_within(g, g.vertices(), DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_maximum_independent_sets_capped(
    g: &Graph,
    cap: usize,
) -> Result<Vec<VertexSet>, CapacityError> {
    maximum_independent_sets_within(g, g.vertices(), cap)
}

/// Intersection of a family of sets; the intersection of no sets is empty
/// here, which never arises for Ω(G) since ∅ is independent.
pub(crate) fn intersect_all(sets: &[VertexSet]) -> VertexSet {
    sets.iter()
        .copied()
        .reduce(VertexSet::intersection)
        .unwrap_or(VertexSet::EMPTY)
}

/// core(G) and ξ(G).
pub fn core_and_xi(g: &Graph) -> Result<(VertexSet, usize), CapacityError> {
    let core = intersect_all(&enumerate_maximum_independent_sets(g)?);
    Ok((core, core.len()))
}

pub fn independence_profile(g: &Graph) -> Result<IndependenceProfile, CapacityError> {
    let omega = enumerate_maximum_independent_sets(g)?;
    let core = intersect_all(&omega);
    Ok(IndependenceProfile {
        alpha: omega[0].len(),
        omega_count: omega.len(),
        core,
        xi: core.len(),
    })
}

/// α(G - v) < α(G).
pub fn is_alpha_critical_vertex(g: &Graph, v: usize) -> Result<bool, GraphError> {
    if v >= g.n() {
        return Err(GraphError::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    Ok(alpha_within(g, g.vertices().without(v)) < alpha(g))
}

/// α(G) < α(G - e).
pub fn is_alpha_critical_edge(g: &Graph, e: Edge) -> Result<bool, GraphError> {
    let reduced = g.delete_edge(e)?;
    Ok(alpha(&reduced) > alpha(g))
}

/// Calls `visit` on every independent set of `G[active]` whose size is at
/// least `min_size`, stopping early when `visit` returns `false`. Returns
/// whether the sweep ran to completion.
pub(crate) fn for_each_independent_set(
    g: &Graph,
    active: VertexSet,
    min_size: usize,
    visit: &mut dyn FnMut(VertexSet) -> bool,
) -> bool {
    fn walk(
        g: &Graph,
        chosen: VertexSet,
        cand: VertexSet,
        min_size: usize,
        visit: &mut dyn FnMut(VertexSet) -> bool,
    ) -> bool {
        if chosen.len() + cand.len() < min_size {
            return true;
        }
        match cand.first() {
            None => visit(chosen),
            Some(v) => {
                walk(
                    g,
                    chosen.with(v),
                    cand.difference(g.neighbors(v)).without(v),
                    min_size,
                    visit,
                ) && walk(g, chosen, cand.without(v), min_size, visit)
            }
        }
    }
    walk(g, VertexSet::EMPTY, active, min_size, visit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn bowtie() -> Graph {
        Graph::from_edge_list(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    fn set(items: &[usize]) -> VertexSet {
        items.iter().copied().collect()
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&cycle(5)), 2);
        assert_eq!(alpha(&complete(4)), 1);
        // brute force over the 32 subsets: {1,3}, {1,4}, {2,3}, {2,4}
        assert_eq!(alpha(&bowtie()), 2);
        assert_eq!(alpha(&Graph::empty(0).unwrap()), 0);
        assert_eq!(alpha(&Graph::empty(7).unwrap()), 7);
    }

    #[test]
    fn omega_examples() {
        let c5 = enumerate_maximum_independent_sets(&cycle(5)).unwrap();
        assert_eq!(
            c5,
            vec![
                set(&[0, 2]),
                set(&[0, 3]),
                set(&[1, 3]),
                set(&[1, 4]),
                set(&[2, 4])
            ]
        );
        let k4 = enumerate_maximum_independent_sets(&complete(4)).unwrap();
        assert_eq!(k4, (0..4).map(VertexSet::singleton).collect::<Vec<_>>());
        assert_eq!(
            enumerate_maximum_independent_sets(&path(3)).unwrap(),
            vec![set(&[0, 2])]
        );
        assert_eq!(
            enumerate_maximum_independent_sets(&Graph::empty(0).unwrap()).unwrap(),
            vec![VertexSet::EMPTY]
        );
    }

    #[test]
    fn capacity_guard() {
        // 2^4 maximum independent sets in a perfect matching on 8 vertices
        let g = Graph::from_edge_list(8, [(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap();
        assert_eq!(
            enumerate_maximum_independent_sets_capped(&g, 16)
                .unwrap()
                .len(),
            16
        );
        assert_eq!(
            enumerate_maximum_independent_sets_capped(&g, 15),
            Err(CapacityError { cap: 15 })
        );
    }

    #[test]
    fn core_examples() {
        assert_eq!(core_and_xi(&path(3)).unwrap(), (set(&[0, 2]), 2));
        assert_eq!(core_and_xi(&cycle(5)).unwrap(), (VertexSet::EMPTY, 0));
        let profile = independence_profile(&cycle(5)).unwrap();
        assert_eq!((profile.alpha, profile.omega_count, profile.xi), (2, 5, 0));
    }

    #[test]
    fn alpha_critical_vertices() {
        assert!((0..5).all(|v| !is_alpha_critical_vertex(&cycle(5), v).unwrap()));
        assert!(is_alpha_critical_vertex(&path(3), 0).unwrap());
        assert!(!is_alpha_critical_vertex(&path(3), 1).unwrap());
        assert!((0..4).all(|v| !is_alpha_critical_vertex(&complete(4), v).unwrap()));
        assert!(is_alpha_critical_vertex(&path(3), 3).is_err());
    }

    #[test]
    fn alpha_critical_edges() {
        let c5 = cycle(5);
        assert!(c5.edges().all(|e| is_alpha_critical_edge(&c5, e).unwrap()));
        let c4 = cycle(4);
        assert!(c4.edges().all(|e| !is_alpha_critical_edge(&c4, e).unwrap()));
        let k4 = complete(4);
        // removing one edge of K4 leaves a pair of non-adjacent vertices
        assert!(k4.edges().all(|e| is_alpha_critical_edge(&k4, e).unwrap()));
        assert!(is_alpha_critical_edge(&c4, Edge::new(0, 2)).is_err());
    }

    #[test]
    fn independent_set_sweep() {
        let mut count = 0;
        assert!(for_each_independent_set(
            &cycle(5),
            VertexSet::full(5),
            0,
            &mut |s| {
                assert!(cycle(5).is_independent(s));
                count += 1;
                true
            }
        ));
        // ∅, 5 singletons, 5 pairs
        assert_eq!(count, 11);
        let mut big = 0;
        for_each_independent_set(&cycle(5), VertexSet::full(5), 2, &mut |_| {
            big += 1;
            true
        });
        assert_eq!(big, 5);
    }
}
