//! Simple undirected graphs on at most 64 vertices, stored as adjacency bitsets.
//!
//! Vertices are dense indices `0..n`. Every operation that removes vertices
//! returns a [`Subgraph`] carrying the map from new indices back to the
//! original ones, so vertex sets computed on the smaller graph can be lifted.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {0} is not present in the graph")]
    MissingEdge(Edge),
    #[error("graphs are limited to {MAX_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
}

/// A subset of `0..64`. Iteration is always in ascending order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement relative to `0..n`.
    pub fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & Self::full(n).0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest element plus one (0 for the empty set).
    pub fn upper_bound(self) -> usize {
        MAX_VERTICES - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the ascending element sequences.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

/// Complement over all 64 slots; use [`VertexSet::complement`] for a
/// graph-relative complement.
impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = items.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(items.into_iter().collect())
    }
}

#[derive(Debug, Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An undirected edge, normalized so that `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds a normalized edge. Panics on `a == b`; use
    /// [`Graph::from_edge_list`] for fallible construction.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn endpoints(self) -> VertexSet {
        VertexSet::singleton(self.u).with(self.v)
    }

    pub fn other(self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Immutable simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    m: usize,
    labels: Option<Vec<String>>,
}

/// A graph obtained by removing vertices, together with the original index of
/// each surviving vertex (`original[new] = old`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub original: Vec<usize>,
}

impl Subgraph {
    /// Maps a vertex set of the subgraph back to original indices.
    pub fn lift(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|v| self.original[v]).collect()
    }
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
            m: 0,
            labels: None,
        })
    }

    /// Builds a graph from endpoint pairs. Duplicate and reversed pairs
    /// collapse; self-loops and out-of-range endpoints are rejected.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            if !g.adj[a].contains(b) {
                g.adj[a].insert(b);
                g.adj[b].insert(a);
                g.m += 1;
            }
        }
        Ok(g)
    }

    /// Builds a graph from symmetric adjacency bitmasks. Used by the
    /// enumerators; the caller guarantees symmetry and no loops.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        let m = adj.iter().map(|a| a.len()).sum::<usize>() / 2;
        Graph {
            adj,
            m,
            labels: None,
        }
    }

    /// Attaches display labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Open neighborhood of a single vertex.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adj[a].contains(b)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| Edge { u, v })
        })
    }

    pub fn edge_vec(&self) -> Vec<Edge> {
        self.edges().collect()
    }

    /// `N(A)`: vertices with at least one neighbor in `a`. May intersect `a`.
    pub fn neighborhood(&self, a: VertexSet) -> VertexSet {
        a.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    /// `N[A] = A ∪ N(A)`.
    pub fn closed_neighborhood(&self, a: VertexSet) -> VertexSet {
        a.union(self.neighborhood(a))
    }

    pub fn is_independent(&self, a: VertexSet) -> bool {
        a.iter().all(|v| self.adj[v].is_disjoint(a))
    }

    /// `|A| - |N(A)|`.
    pub fn difference(&self, a: VertexSet) -> i64 {
        a.len() as i64 - self.neighborhood(a).len() as i64
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    fn check_set(&self, set: VertexSet) -> Result<(), GraphError> {
        match set.difference(self.vertices()).first() {
            Some(v) => Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            }),
            None => Ok(()),
        }
    }

    /// `G[X]`, reindexed in ascending order of the kept vertices.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<Subgraph, GraphError> {
        self.check_set(keep)?;
        let original = keep.to_vec();
        let mut new_index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in original.iter().enumerate() {
            new_index[v] = i;
        }
        let adj = original
            .iter()
            .map(|&v| {
                self.adj[v]
                    .intersection(keep)
                    .iter()
                    .map(|w| new_index[w])
                    .collect()
            })
            .collect();
        let mut graph = Graph::from_adjacency(adj);
        if let Some(labels) = &self.labels {
            graph.labels = Some(original.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok(Subgraph { graph, original })
    }

    /// `G - v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Subgraph, GraphError> {
        self.check_vertex(v)?;
        self.induced_subgraph(self.vertices().without(v))
    }

    /// `G - S` for a set of vertices.
    pub fn delete_vertices(&self, remove: VertexSet) -> Result<Subgraph, GraphError> {
        self.check_set(remove)?;
        self.induced_subgraph(self.vertices().difference(remove))
    }

    /// `G - e`: same vertex set, one edge fewer.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::MissingEdge(e));
        }
        let mut g = self.clone();
        g.adj[e.u].remove(e.v);
        g.adj[e.v].remove(e.u);
        g.m -= 1;
        Ok(g)
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut side = vec![u8::MAX; n];
        for start in 0..n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.adj[v] {
                    if side[w] == u8::MAX {
                        side[w] = side[v] ^ 1;
                        stack.push(w);
                    } else if side[w] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True iff the graph has exactly one simple odd cycle.
    ///
    /// Cycles are enumerated from their smallest vertex with the search
    /// stopping as soon as a second odd cycle is seen. Exponential in the
    /// worst case.
    pub fn is_almost_bipartite(&self) -> bool {
        if self.is_bipartite() {
            return false;
        }
        let mut odd = 0usize;
        for start in 0..self.n() {
            // Only vertices above `start` may appear, so each cycle is found
            // from its minimum vertex, once per direction.
            let allowed = self.vertices().difference(VertexSet::full(start + 1));
            if self.count_odd_cycles_from(
                start,
                start,
                allowed,
                VertexSet::singleton(start),
                1,
                &mut odd,
            ) {
                return false;
            }
        }
        // each cycle was counted in both directions
        odd == 2
    }

    /// Returns true once more than one odd cycle (two traversals) is found.
    fn count_odd_cycles_from(
        &self,
        start: usize,
        current: usize,
        allowed: VertexSet,
        on_path: VertexSet,
        path_len: usize,
        odd: &mut usize,
    ) -> bool {
        for w in self.adj[current] {
            if w == start && path_len >= 3 && path_len % 2 == 1 {
                *odd += 1;
                if *odd > 2 {
                    return true;
                }
            } else if allowed.contains(w)
                && !on_path.contains(w)
                && self.count_odd_cycles_from(start, w, allowed, on_path.with(w), path_len + 1, odd)
            {
                return true;
            }
        }
        false
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
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

    fn set(items: &[usize]) -> VertexSet {
        items.iter().copied().collect()
    }

    #[test]
    fn edge_list_construction() {
        let p3 = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.m(), 2);
        let dup = Graph::from_edge_list(3, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(dup.m(), 1);
        assert_eq!(
            Graph::from_edge_list(1, [(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            Graph::from_edge_list(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn vertex_deletion() {
        let c5 = cycle(5);
        for v in 0..5 {
            let sub = c5.delete_vertex(v).unwrap();
            assert_eq!((sub.graph.n(), sub.graph.m()), (4, 3));
            assert!(sub.graph.is_bipartite());
            assert!(!sub.original.contains(&v));
        }
        let k3 = complete(4).delete_vertex(2).unwrap();
        assert_eq!(k3.graph, complete(3));
        assert_eq!(k3.original, vec![0, 1, 3]);
        let k0 = complete(1).delete_vertex(0).unwrap();
        assert_eq!(k0.graph.n(), 0);
        assert!(c5.delete_vertex(5).is_err());
    }

    #[test]
    fn edge_deletion() {
        let c5 = cycle(5);
        let p5 = c5.delete_edge(Edge::new(4, 0)).unwrap();
        assert_eq!(
            p5,
            Graph::from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap()
        );
        let p3 = complete(3).delete_edge(Edge::new(0, 2)).unwrap();
        assert_eq!(p3.m(), 2);
        let two_k1 = Graph::from_edge_list(2, [(0, 1)])
            .unwrap()
            .delete_edge(Edge::new(0, 1))
            .unwrap();
        assert_eq!(two_k1, Graph::empty(2).unwrap());
        assert_eq!(
            c5.delete_edge(Edge::new(0, 2)),
            Err(GraphError::MissingEdge(Edge::new(0, 2)))
        );
    }

    #[test]
    fn neighborhoods() {
        let c5 = cycle(5);
        assert_eq!(c5.neighborhood(set(&[0])), set(&[1, 4]));
        assert_eq!(c5.neighborhood(VertexSet::EMPTY), VertexSet::EMPTY);
        assert_eq!(complete(4).neighborhood(set(&[0, 1])), set(&[0, 1, 2, 3]));
        assert_eq!(c5.closed_neighborhood(set(&[0])), set(&[0, 1, 4]));
        assert_eq!(c5.closed_neighborhood(VertexSet::EMPTY), VertexSet::EMPTY);
        assert_eq!(
            complete(4).closed_neighborhood(set(&[0])),
            VertexSet::full(4)
        );
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = cycle(5);
        let p3 = c5.induced_subgraph(set(&[0, 1, 2])).unwrap();
        assert_eq!(
            p3.graph,
            Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap()
        );
        assert_eq!(c5.induced_subgraph(c5.vertices()).unwrap().graph, c5);
        assert_eq!(c5.induced_subgraph(VertexSet::EMPTY).unwrap().graph.n(), 0);
        let sub = c5.induced_subgraph(set(&[1, 3, 4])).unwrap();
        assert_eq!(sub.lift(set(&[0, 2])), set(&[1, 4]));
        assert!(c5.induced_subgraph(set(&[7])).is_err());
    }

    #[test]
    fn independence_predicate() {
        let c5 = cycle(5);
        assert!(c5.is_independent(set(&[0, 2])));
        assert!(!c5.is_independent(set(&[0, 1])));
        assert!(c5.is_independent(VertexSet::EMPTY));
    }

    #[test]
    fn almost_bipartite() {
        assert!(cycle(5).is_almost_bipartite());
        assert!(cycle(3).is_almost_bipartite());
        assert!(!cycle(4).is_almost_bipartite());
        assert!(!complete(4).is_almost_bipartite());
        // C5 with a pendant path attached is still almost bipartite
        let g = Graph::from_edge_list(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6)])
            .unwrap();
        assert!(g.is_almost_bipartite());
        // two triangles sharing a vertex
        let bowtie =
            Graph::from_edge_list(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        assert!(!bowtie.is_almost_bipartite());
        // triangle with a chord-free square attached on an edge: cycles 0-1-2 (odd), 1-2-3-4 would need...
        let theta = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 2)]).unwrap();
        // triangles 012 and 123 plus the 4-cycle 0-1-3-2
        assert!(!theta.is_almost_bipartite());
    }

    #[test]
    fn vertex_set_basics() {
        let a = set(&[0, 3, 5]);
        assert_eq!(a.to_vec(), vec![0, 3, 5]);
        assert_eq!(a.complement(6), set(&[1, 2, 4]));
        assert_eq!(a.first(), Some(0));
        assert_eq!(a.upper_bound(), 6);
        assert_eq!(format!("{a}"), "{0,3,5}");
        assert_eq!(set(&[0, 2]).lex_cmp(&set(&[0, 3])), Ordering::Less);
        assert_eq!(set(&[1]).lex_cmp(&set(&[0, 3])), Ordering::Greater);
        assert_eq!(set(&[0]).lex_cmp(&set(&[0, 3])), Ordering::Less);
        assert_eq!(VertexSet::full(64).len(), 64);
    }
}
