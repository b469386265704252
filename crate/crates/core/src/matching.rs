//! Maximum matchings in general graphs and saturating matchings between two
//! disjoint vertex sets.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("`from` and `into` must be disjoint, both contain {0}")]
    Overlap(VertexSet),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A set of pairwise vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    edges: Vec<Edge>,
    #[serde(skip)]
    saturated: VertexSet,
}

impl Matching {
    pub fn empty() -> Self {
        Matching {
            edges: Vec::new(),
            saturated: VertexSet::EMPTY,
        }
    }

    /// Builds a matching from edges, returning `None` if two edges share a
    /// vertex.
    pub fn from_edges(edges: impl IntoIterator<Item = Edge>) -> Option<Self> {
        let mut m = Matching::empty();
        for e in edges {
            if !m.saturated.is_disjoint(e.endpoints()) {
                return None;
            }
            m.saturated = m.saturated.union(e.endpoints());
            m.edges.push(e);
        }
        m.edges.sort();
        Some(m)
    }

    fn from_mates(mate: &[Option<usize>]) -> Self {
        let edges = mate
            .iter()
            .enumerate()
            .filter_map(|(v, &w)| w.filter(|&w| v < w).map(|w| Edge::new(v, w)));
        Matching::from_edges(edges).expect("mate array is symmetric")
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn saturated(&self) -> VertexSet {
        self.saturated
    }

    pub fn is_saturated(&self, v: usize) -> bool {
        self.saturated.contains(v)
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.edges
            .iter()
            .find(|e| e.u == v || e.v == v)
            .map(|e| e.other(v))
    }

    /// True if every edge is an edge of `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.edges.iter().all(|e| g.has_edge(e.u, e.v))
    }

    /// True if every vertex of `from` is matched to a vertex of `into`.
    pub fn matches_into(&self, from: VertexSet, into: VertexSet) -> bool {
        from.iter()
            .all(|v| self.mate(v).is_some_and(|w| into.contains(w)))
    }

    /// Union of two matchings on disjoint vertex sets.
    pub fn union(&self, other: &Matching) -> Option<Matching> {
        Matching::from_edges(self.edges.iter().chain(other.edges.iter()).copied())
    }
}

/// Maximum matching with Edmonds' blossom contraction. Roots are grown in
/// ascending vertex order and adjacency is scanned ascending, so the result is
/// a function of the graph alone.
pub fn maximum_matching(g: &Graph) -> Matching {
    maximum_matching_within(g, g.vertices())
}

/// Maximum matching of the induced subgraph `G[active]`, without reindexing.
pub(crate) fn maximum_matching_within(g: &Graph, active: VertexSet) -> Matching {
    let mut search = Blossom::new(g, active);
    for root in active {
        if search.mate[root].is_none() {
            if let Some(end) = search.find_augmenting_path(root) {
                search.augment(end);
            }
        }
    }
    Matching::from_mates(&search.mate)
}

/// Size of a maximum matching of `G[active]`.
pub(crate) fn matching_number_within(g: &Graph, active: VertexSet) -> usize {
    maximum_matching_within(g, active).len()
}

/// μ(G).
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

struct Blossom<'a> {
    g: &'a Graph,
    active: VertexSet,
    mate: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph, active: VertexSet) -> Self {
        let n = g.n();
        Blossom {
            g,
            active,
            mate: vec![None; n],
            parent: vec![None; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lowest_common_ancestor(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            match self.mate[a] {
                Some(m) => a = self.parent[m].expect("matched tree vertex has a parent"),
                None => break,
            }
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            let m = self.mate[b].expect("path to root passes matched vertices");
            b = self.parent[m].expect("matched tree vertex has a parent");
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v].expect("blossom path vertex is matched");
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("blossom path continues");
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.in_tree.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|p| *p = None);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.in_tree[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for w in self.g.neighbors(v).intersection(self.active) {
                if self.base[v] == self.base[w] || self.mate[v] == Some(w) {
                    continue;
                }
                let w_is_outer =
                    w == root || self.mate[w].is_some_and(|m| self.parent[m].is_some());
                if w_is_outer {
                    let b = self.lowest_common_ancestor(v, w);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, b, w);
                    self.mark_path(w, b, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = b;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[w].is_none() {
                    self.parent[w] = Some(v);
                    match self.mate[w] {
                        None => return Some(w),
                        Some(m) => {
                            self.in_tree[m] = true;
                            self.queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }

    fn augment(&mut self, end: usize) {
        let mut v = Some(end);
        while let Some(x) = v {
            let p = self.parent[x].expect("augmenting path vertex has a parent");
            let next = self.mate[p];
            self.mate[x] = Some(p);
            self.mate[p] = Some(x);
            v = next;
        }
    }
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    2 * matching_number(g) == g.n()
}

/// A matching that uses only edges between `from` and `into` and saturates
/// every vertex of `from`; `None` when Hall's condition fails. Edges inside
/// either set are ignored.
pub fn matching_from_into(
    g: &Graph,
    from: VertexSet,
    into: VertexSet,
) -> Result<Option<Matching>, MatchingError> {
    let common = from.intersection(into);
    if !common.is_empty() {
        return Err(MatchingError::Overlap(common));
    }
    let all = g.vertices();
    if let Some(v) = from.union(into).difference(all).first() {
        return Err(GraphError::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        }
        .into());
    }
    Ok(bipartite_saturating(g, from, into))
}

/// Kuhn's augmenting-path matching from `from` into `into`; the sets must be
/// disjoint.
pub(crate) fn bipartite_saturating(
    g: &Graph,
    from: VertexSet,
    into: VertexSet,
) -> Option<Matching> {
    if from.len() > into.len() {
        return None;
    }
    let n = g.n();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for v in from {
        let mut visited = VertexSet::EMPTY;
        if !kuhn_try(g, v, into, &mut owner, &mut visited) {
            return None;
        }
    }
    let edges = owner
        .iter()
        .enumerate()
        .filter_map(|(w, o)| o.map(|v| Edge::new(v, w)));
    Some(Matching::from_edges(edges).expect("kuhn produces a matching"))
}

fn kuhn_try(
    g: &Graph,
    v: usize,
    into: VertexSet,
    owner: &mut [Option<usize>],
    visited: &mut VertexSet,
) -> bool {
    for w in g.neighbors(v).intersection(into) {
        if visited.contains(w) {
            continue;
        }
        visited.insert(w);
        let free = match owner[w] {
            None => true,
            Some(u) => kuhn_try(g, u, into, owner, visited),
        };
        if free {
            owner[w] = Some(v);
            return true;
        }
    }
    false
}

/// A vertex is μ-critical when every maximum matching saturates it.
pub fn is_mu_critical_vertex(g: &Graph, v: usize) -> Result<bool, GraphError> {
    if v >= g.n() {
        return Err(GraphError::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    Ok(matching_number_within(g, g.vertices().without(v)) < matching_number(g))
}

pub fn is_mu_critical_edge(g: &Graph, e: Edge) -> Result<bool, GraphError> {
    let reduced = g.delete_edge(e)?;
    Ok(matching_number(&reduced) < matching_number(g))
}
