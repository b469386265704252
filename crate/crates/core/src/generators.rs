//! Graph sources: named families, the committed fixtures, exhaustive
//! labeled enumeration and seeded G(n, p) graphs.
//!
//! Random graphs use ChaCha8 (`rand_chacha`) seeded with the 32-byte key
//! `seed.to_le_bytes() ++ [0; 24]`. Candidate pairs are visited in
//! lexicographic order `(0,1), (0,2), ..., (n-2,n-1)`; a pair becomes an edge
//! when `(next_u64() >> 11) * 2^-53 < p`. A corpus of `count` graphs draws
//! every graph from one stream, one after another.

use std::collections::BTreeMap;
use std::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::Serialize;
use thiserror::Error;

use crate::classify::{is_supportive, Analysis};
use crate::graph::{Edge, Graph, GraphError, VertexSet, MAX_VERTICES};
use crate::independence::CapacityError;
use crate::io::{parse_edge_list, ParseError};
use crate::matching::bipartite_saturating;

/// Largest order accepted by [`all_labeled_graphs`].
pub const MAX_EXHAUSTIVE_ORDER: usize = 7;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family `{name}` does not accept parameters {params:?}")]
    InvalidParameter { name: String, params: Vec<usize> },
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("fixture reconstruction failed for {name}: {fact} ({detail})")]
    Reconstruction {
        name: String,
        fact: String,
        detail: String,
    },
    #[error("fixture {name}: {source}")]
    FixtureParse { name: String, source: ParseError },
    #[error("exhaustive enumeration is limited to n <= {MAX_EXHAUSTIVE_ORDER}, got {0}")]
    OrderOverBudget(usize),
    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Capacity(#[from] CapacityError),
}

// ---------------------------------------------------------------- families

pub const FAMILY_NAMES: [&str; 8] = [
    "cycle",
    "path",
    "complete",
    "complete_bipartite",
    "star",
    "friendship",
    "disjoint_union_pk1_complete",
    "join_pk1_complete",
];

fn complete_pairs(vertices: std::ops::Range<usize>) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in vertices.clone() {
        for j in i + 1..vertices.end {
            pairs.push((i, j));
        }
    }
    pairs
}

pub fn cycle(k: usize) -> Graph {
    assert!(k >= 3, "cycles need at least 3 vertices");
    Graph::from_edge_list(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap()
}

pub fn path(k: usize) -> Graph {
    Graph::from_edge_list(k, (1..k).map(|i| (i - 1, i))).unwrap()
}

pub fn complete(k: usize) -> Graph {
    Graph::from_edge_list(k, complete_pairs(0..k)).unwrap()
}

/// `K_{p,q}` with sides `0..p` and `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    Graph::from_edge_list(p + q, (0..p).flat_map(|i| (p..p + q).map(move |j| (i, j)))).unwrap()
}

/// `K_{1,k}` centred at 0.
pub fn star(k: usize) -> Graph {
    complete_bipartite(1, k)
}

/// `k` triangles sharing vertex 0; triangle `i` uses `2i+1, 2i+2`.
pub fn friendship(k: usize) -> Graph {
    let pairs = (0..k).flat_map(|i| [(0, 2 * i + 1), (0, 2 * i + 2), (2 * i + 1, 2 * i + 2)]);
    Graph::from_edge_list(2 * k + 1, pairs).unwrap()
}

/// `p` isolated vertices `0..p` next to a clique on `p..p+q`.
pub fn disjoint_union_pk1_complete(p: usize, q: usize) -> Graph {
    Graph::from_edge_list(p + q, complete_pairs(p..p + q)).unwrap()
}

/// `p` independent vertices `0..p`, each adjacent to every vertex of a
/// clique on `p..p+q`.
pub fn join_pk1_complete(p: usize, q: usize) -> Graph {
    let mut pairs = complete_pairs(p..p + q);
    pairs.extend((0..p).flat_map(|i| (p..p + q).map(move |j| (i, j))));
    Graph::from_edge_list(p + q, pairs).unwrap()
}

/// Family member by name. One parameter selects the natural member
/// (`complete_bipartite` k gives `K_{k,k}`; the `pk1` families with `p` use
/// a clique of order `p+1`); two parameters set both sides explicitly.
pub fn family_with(name: &str, params: &[usize]) -> Result<Graph, GeneratorError> {
    let invalid = || GeneratorError::InvalidParameter {
        name: name.to_string(),
        params: params.to_vec(),
    };
    let fits = |n: usize| n <= MAX_VERTICES;
    let g = match (name, params) {
        ("cycle", &[k]) if (3..=MAX_VERTICES).contains(&k) => cycle(k),
        ("path", &[k]) if fits(k) => path(k),
        ("complete", &[k]) if fits(k) => complete(k),
        ("complete_bipartite", &[k]) if fits(2 * k) => complete_bipartite(k, k),
        ("complete_bipartite", &[p, q]) if fits(p + q) => complete_bipartite(p, q),
        ("star", &[k]) if fits(k + 1) => star(k),
        ("friendship", &[k]) if k >= 1 && fits(2 * k + 1) => friendship(k),
        ("disjoint_union_pk1_complete", &[p]) if p >= 1 && fits(2 * p + 1) => {
            disjoint_union_pk1_complete(p, p + 1)
        }
        ("disjoint_union_pk1_complete", &[p, q]) if fits(p + q) => {
            disjoint_union_pk1_complete(p, q)
        }
        ("join_pk1_complete", &[p]) if p >= 1 && fits(2 * p + 1) => join_pk1_complete(p, p + 1),
        ("join_pk1_complete", &[p, q]) if fits(p + q) => join_pk1_complete(p, q),
        _ if FAMILY_NAMES.contains(&name) => return Err(invalid()),
        _ => return Err(GeneratorError::UnknownFamily(name.to_string())),
    };
    Ok(g)
}

pub fn family(name: &str, k: usize) -> Result<Graph, GeneratorError> {
    family_with(name, &[k])
}

/// Smallest single parameter the family accepts.
pub fn family_min_parameter(name: &str) -> Result<usize, GeneratorError> {
    match name {
        "cycle" => Ok(3),
        "path" | "complete" | "complete_bipartite" | "star" => Ok(0),
        "friendship" | "disjoint_union_pk1_complete" | "join_pk1_complete" => Ok(1),
        _ => Err(GeneratorError::UnknownFamily(name.to_string())),
    }
}

// ---------------------------------------------------------- exhaustive

/// Every labeled graph on `n` vertices, ordered by edge mask: bit `i` of the
/// mask stands for the `i`-th pair in lexicographic order.
pub fn all_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, GeneratorError> {
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(GeneratorError::OrderOverBudget(n));
    }
    let pairs = complete_pairs(0..n);
    let total = 1u64 << pairs.len();
    Ok((0..total).map(move |mask| labeled_graph(n, &pairs, mask)))
}

fn labeled_graph(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut adj = vec![VertexSet::EMPTY; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    Graph::from_adjacency(adj)
}

/// Number of labeled graphs on `0..=max_n` vertices.
pub fn labeled_graph_count(max_n: usize) -> u64 {
    (0..=max_n)
        .map(|n| 1u64 << (n * n.saturating_sub(1) / 2))
        .sum()
}

// --------------------------------------------------------------- random

/// Seeded G(n, p) stream.
pub struct RandomGraphs {
    rng: ChaCha8Rng,
    n: usize,
    p: f64,
}

impl RandomGraphs {
    pub fn new(n: usize, p: f64, seed: u64) -> Result<Self, GeneratorError> {
        if !(0.0..=1.0).contains(&p) {
            return Err(GeneratorError::InvalidProbability(p));
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n).into());
        }
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        Ok(RandomGraphs {
            rng: ChaCha8Rng::from_seed(key),
            n,
            p,
        })
    }

    fn unit(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

impl Iterator for RandomGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.unit() < self.p {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
        }
        Some(Graph::from_adjacency(adj))
    }
}

/// First graph of the `(n, p, seed)` stream.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph, GeneratorError> {
    Ok(RandomGraphs::new(n, p, seed)?
        .next()
        .expect("stream is infinite"))
}

// ------------------------------------------------------------- fixtures

/// A committed fixture graph with its named vertices and edges.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: Graph,
    pub vertex_labels: BTreeMap<String, usize>,
    pub edge_labels: BTreeMap<String, Edge>,
}

impl Fixture {
    pub fn vertex(&self, label: &str) -> usize {
        self.vertex_labels[label]
    }

    /// A named edge, or `"u-v"` for the edge between two named vertices.
    pub fn edge(&self, label: &str) -> Edge {
        if let Some(&e) = self.edge_labels.get(label) {
            return e;
        }
        let (a, b) = label.split_once('-').expect("edge label");
        Edge::new(self.vertex(a), self.vertex(b))
    }

    pub fn set(&self, labels: &[&str]) -> VertexSet {
        labels.iter().map(|l| self.vertex(l)).collect()
    }
}

macro_rules! fixture_sources {
    ($($name:literal),* $(,)?) => {
        const FIXTURE_SOURCES: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../../../fixtures/", $name, ".edges")))),*
        ];
    };
}

fixture_sources!(
    "fig1-G1", "fig1-G2", "fig2-G1", "fig2-G2", "fig2-G3", "fig3-G1", "fig3-G2", "fig4-G1",
    "fig4-G2", "fig5-G1", "fig5-G2", "fig6-G1", "fig6-G2", "fig7-G1", "fig7-G2", "fig8-G1",
    "fig8-G2", "fig8-G3", "fig9-G1", "fig10-G1", "fig10-G2",
);

pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    FIXTURE_SOURCES.iter().map(|(name, _)| *name)
}

/// Raw edge-list text of a committed fixture.
pub fn fixture_source(name: &str) -> Option<&'static str> {
    FIXTURE_SOURCES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
}

/// Parses a fixture without checking its recorded facts.
pub fn fixture_unchecked(name: &str) -> Result<Fixture, GeneratorError> {
    let (name, text) = FIXTURE_SOURCES
        .iter()
        .find(|(n, _)| *n == name)
        .copied()
        .ok_or_else(|| GeneratorError::UnknownFixture(name.to_string()))?;
    let graph = parse_edge_list(text).map_err(|source| GeneratorError::FixtureParse {
        name: name.to_string(),
        source,
    })?;
    let mut vertex_labels = BTreeMap::new();
    let mut edge_labels = BTreeMap::new();
    for line in text.lines().filter_map(|l| l.strip_prefix('#')) {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["vertex", label, v] => {
                vertex_labels.insert(label.to_string(), v.parse().expect("vertex index"));
            }
            ["edge", label, u, v] => {
                let e = Edge::new(u.parse().expect("endpoint"), v.parse().expect("endpoint"));
                edge_labels.insert(label.to_string(), e);
            }
            _ => {}
        }
    }
    let mut names: Vec<String> = (0..graph.n()).map(|v| v.to_string()).collect();
    for (label, &v) in &vertex_labels {
        names[v] = label.clone();
    }
    Ok(Fixture {
        name,
        graph: graph.with_labels(names),
        vertex_labels,
        edge_labels,
    })
}

/// Loads a fixture and checks every fact recorded for it; any mismatch is a
/// [`GeneratorError::Reconstruction`].
pub fn fixture(name: &str) -> Result<Fixture, GeneratorError> {
    let fx = fixture_unchecked(name)?;
    let analysis = Analysis::compute(&fx.graph)?;
    for fact in fixture_facts(fx.name) {
        if let Err(detail) = fact.check(&fx, &analysis) {
            return Err(GeneratorError::Reconstruction {
                name: fx.name.to_string(),
                fact: fact.to_string(),
                detail,
            });
        }
    }
    Ok(fx)
}

/// A fact recorded for a fixture and checked on load.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Fact {
    Order(usize),
    Alpha(usize),
    Mu(usize),
    AlphaPlusMu(usize),
    Kappa(usize),
    MuMinusAlpha(i64),
    D(i64),
    Xi(usize),
    AlphaPrime(usize),
    RhoV(usize),
    Diadem(&'static [&'static str]),
    /// The complete list of maximum critical independent sets.
    MaxCriticalSets(&'static [&'static [&'static str]]),
    IsMaxCritical(&'static [&'static str]),
    VertexDeletionKe(&'static str, bool),
    EdgeDeletionKe(&'static str, bool),
    PairDeletionKe(&'static str, &'static str, bool),
    EdgeDeletionSum(&'static str, usize),
    AlphaCriticalVertex(&'static str, bool),
    MuCriticalVertex(&'static str, bool),
    AlphaCriticalEdge(&'static str, bool),
    MuCriticalEdge(&'static str, bool),
    Independent(&'static [&'static str]),
    MaximumIndependent(&'static [&'static str]),
    Supportive(&'static [&'static str]),
    /// Whether a matching from `N(A)` into `A` exists.
    NeighborhoodMatching(&'static [&'static str], bool),
    AlmostBipartite(bool),
    VertexAlmost(bool),
    EdgeAlmost(bool),
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

fn expect<T: PartialEq + fmt::Debug>(actual: T, expected: T) -> Result<(), String> {
    if actual == expected {
        Ok(())
    } else {
        Err(format!("computed {actual:?}, expected {expected:?}"))
    }
}

impl Fact {
    pub fn check(&self, fx: &Fixture, a: &Analysis) -> Result<(), String> {
        let g = &fx.graph;
        let del = &a.deletions;
        let edge_index = |label: &str| {
            let e = fx.edge(label);
            del.edge_index(e)
                .ok_or_else(|| format!("{e} is not an edge"))
        };
        match *self {
            Fact::Order(n) => expect(g.n(), n),
            Fact::Alpha(x) => expect(a.alpha(), x),
            Fact::Mu(x) => expect(a.mu(), x),
            Fact::AlphaPlusMu(x) => expect(a.alpha() + a.mu(), x),
            Fact::Kappa(x) => expect(del.kappa(), x),
            Fact::MuMinusAlpha(x) => expect(a.mu() as i64 - a.alpha() as i64, x),
            Fact::D(x) => expect(a.d(), x),
            Fact::Xi(x) => expect(a.xi(), x),
            Fact::AlphaPrime(x) => expect(a.alpha_prime(), x),
            Fact::RhoV(x) => expect(del.rho_v(), x),
            Fact::Diadem(s) => expect(a.critical.profile.diadem, fx.set(s)),
            Fact::MaxCriticalSets(list) => {
                let mut want: Vec<VertexSet> = list.iter().map(|s| fx.set(s)).collect();
                want.sort_by(VertexSet::lex_cmp);
                expect(a.critical.maximum_sets().collect::<Vec<_>>(), want)
            }
            Fact::IsMaxCritical(s) => {
                let s = fx.set(s);
                expect(a.critical.maximum_sets().any(|m| m == s), true)
            }
            Fact::VertexDeletionKe(v, ke) => expect(del.vertex_deletion_is_ke(fx.vertex(v)), ke),
            Fact::EdgeDeletionKe(e, ke) => expect(del.edge_deletion_is_ke(edge_index(e)?), ke),
            Fact::PairDeletionKe(x, y, ke) => {
                let rest = g.vertices().without(fx.vertex(x)).without(fx.vertex(y));
                let sub = g.induced_subgraph(rest).map_err(|e| e.to_string())?;
                expect(crate::classify::is_ke(&sub.graph), ke)
            }
            Fact::EdgeDeletionSum(e, x) => {
                let p = del.edge[edge_index(e)?];
                expect(p.alpha + p.mu, x)
            }
            Fact::AlphaCriticalVertex(v, c) => expect(del.alpha_critical_vertex(fx.vertex(v)), c),
            Fact::MuCriticalVertex(v, c) => expect(del.mu_critical_vertex(fx.vertex(v)), c),
            Fact::AlphaCriticalEdge(e, c) => expect(del.alpha_critical_edge(edge_index(e)?), c),
            Fact::MuCriticalEdge(e, c) => expect(del.mu_critical_edge(edge_index(e)?), c),
            Fact::Independent(s) => expect(g.is_independent(fx.set(s)), true),
            Fact::MaximumIndependent(s) => expect(a.omega.contains(&fx.set(s)), true),
            Fact::Supportive(s) => expect(is_supportive(g, fx.set(s)).is_some(), true),
            Fact::NeighborhoodMatching(s, exists) => {
                let s = fx.set(s);
                let nbh = g.neighborhood(s);
                if !nbh.is_disjoint(s) {
                    return Err(format!("N({s}) = {nbh} meets {s}"));
                }
                expect(bipartite_saturating(g, nbh, s).is_some(), exists)
            }
            Fact::AlmostBipartite(b) => expect(g.is_almost_bipartite(), b),
            Fact::VertexAlmost(b) => expect(del.vertex_almost_witness().is_some(), b),
            Fact::EdgeAlmost(b) => expect(del.edge_almost_witness().is_some(), b),
        }
    }
}

/// Facts recorded for each fixture.
pub fn fixture_facts(name: &str) -> &'static [Fact] {
    use Fact::*;
    match name {
        "fig1-G1" => &[VertexDeletionKe("v1", true), VertexDeletionKe("v2", false)],
        "fig1-G2" => &[EdgeDeletionKe("e2", true), EdgeDeletionKe("e1", false)],
        "fig2-G1" => &[
            Kappa(0),
            AlphaPlusMu(6),
            EdgeDeletionSum("a", 6),
            AlphaCriticalEdge("a", true),
            MuCriticalEdge("a", true),
        ],
        "fig2-G2" => &[
            Kappa(1),
            AlphaPlusMu(6),
            EdgeDeletionSum("u1", 7),
            AlphaCriticalEdge("u1", true),
            MuCriticalEdge("u1", false),
            EdgeDeletionSum("u2", 6),
            AlphaCriticalEdge("u2", false),
            MuCriticalEdge("u2", false),
        ],
        "fig2-G3" => &[
            Kappa(1),
            AlphaPlusMu(5),
            EdgeDeletionSum("b", 4),
            AlphaCriticalEdge("b", false),
            MuCriticalEdge("b", true),
        ],
        "fig3-G1" => &[
            Mu(3),
            Independent(&["a1", "a4"]),
            NeighborhoodMatching(&["a1", "a4"], true),
        ],
        "fig3-G2" => &[
            Mu(2),
            Independent(&["v"]),
            NeighborhoodMatching(&["v"], false),
        ],
        "fig4-G1" => &[MaximumIndependent(&["a1", "a2"]), Supportive(&["a1", "a2"])],
        "fig4-G2" => &[Supportive(&["b1", "b2"])],
        "fig5-G1" => &[
            Kappa(1),
            Order(8),
            D(1),
            Xi(2),
            AlphaPrime(3),
            RhoV(4),
            MaxCriticalSets(&[&["a", "b", "c"]]),
        ],
        "fig5-G2" => &[
            Kappa(1),
            Order(8),
            D(1),
            Xi(2),
            AlphaPrime(3),
            RhoV(3),
            IsMaxCritical(&["u", "v", "y"]),
            IsMaxCritical(&["u", "v", "x"]),
        ],
        "fig6-G1" => &[Kappa(1), PairDeletionKe("x", "y", true)],
        "fig6-G2" => &[Kappa(1), VertexDeletionKe("v", true)],
        "fig7-G1" => &[
            Kappa(1),
            Order(9),
            Alpha(4),
            Mu(4),
            D(0),
            Xi(0),
            Diadem(&["u", "v", "w"]),
            RhoV(6),
        ],
        "fig7-G2" => &[
            Kappa(1),
            Order(9),
            Alpha(4),
            Mu(4),
            D(0),
            Xi(1),
            Diadem(&["a", "b"]),
            RhoV(5),
        ],
        "fig8-G1" => &[Kappa(1), MuMinusAlpha(1)],
        "fig8-G2" => &[Kappa(1), MuMinusAlpha(0)],
        "fig8-G3" => &[Kappa(1), MuMinusAlpha(-1)],
        "fig9-G1" => &[
            Kappa(1),
            AlmostBipartite(false),
            AlphaCriticalVertex("v", false),
            MuCriticalVertex("v", false),
            AlphaCriticalEdge("u-v", true),
            MuCriticalEdge("u-v", false),
            VertexAlmost(true),
            EdgeAlmost(true),
        ],
        "fig10-G1" => &[
            Kappa(1),
            VertexDeletionKe("a", true),
            AlphaCriticalVertex("a", false),
            MuCriticalVertex("a", false),
            VertexDeletionKe("b", false),
            AlphaCriticalVertex("b", true),
        ],
        "fig10-G2" => &[
            Kappa(1),
            AlphaCriticalVertex("x", true),
            MuCriticalVertex("x", true),
            VertexDeletionKe("x", false),
        ],
        _ => &[],
    }
}

// -------------------------------------------------------------- corpora

/// Parity filter on a family parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Any,
    Odd,
    Even,
}

impl Parity {
    pub fn admits(self, k: usize) -> bool {
        match self {
            Parity::Any => true,
            Parity::Odd => k % 2 == 1,
            Parity::Even => k.is_multiple_of(2),
        }
    }
}

/// Fully determines a sequence of graphs.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CorpusDescriptor {
    /// All labeled graphs with `min_n <= n <= max_n`.
    Exhaustive {
        min_n: usize,
        max_n: usize,
    },
    Random {
        n: usize,
        p: f64,
        count: usize,
        seed: u64,
    },
    /// Family members for parameters `min..=max` passing `parity`.
    Family {
        name: String,
        min: usize,
        max: usize,
        parity: Parity,
    },
    Fixture {
        names: Vec<String>,
    },
}

/// One corpus member with a stable identifier.
#[derive(Debug, Clone)]
pub struct CorpusItem {
    pub id: String,
    pub graph: Graph,
}

impl CorpusDescriptor {
    pub fn exhaustive(max_n: usize) -> Self {
        CorpusDescriptor::Exhaustive { min_n: 0, max_n }
    }

    pub fn validate(&self) -> Result<(), GeneratorError> {
        match self {
            CorpusDescriptor::Exhaustive { max_n, .. } if *max_n > MAX_EXHAUSTIVE_ORDER => {
                Err(GeneratorError::OrderOverBudget(*max_n))
            }
            CorpusDescriptor::Random { n, p, seed, .. } => {
                RandomGraphs::new(*n, *p, *seed).map(|_| ())
            }
            CorpusDescriptor::Family { name, min, max, .. } => {
                let lo = family_min_parameter(name)?.max(*min);
                (lo..=*max).try_for_each(|k| family(name, k).map(|_| ()))
            }
            CorpusDescriptor::Fixture { names } => names.iter().try_for_each(|name| {
                fixture_source(name)
                    .map(|_| ())
                    .ok_or_else(|| GeneratorError::UnknownFixture(name.clone()))
            }),
            _ => Ok(()),
        }
    }

    /// Number of graphs the descriptor produces.
    pub fn len(&self) -> u64 {
        match self {
            CorpusDescriptor::Exhaustive { min_n, max_n } => (*min_n..=*max_n)
                .map(|n| 1u64 << (n * n.saturating_sub(1) / 2))
                .sum(),
            CorpusDescriptor::Random { count, .. } => *count as u64,
            CorpusDescriptor::Family {
                name,
                min,
                max,
                parity,
            } => {
                let lo = family_min_parameter(name).unwrap_or(0).max(*min);
                (lo..=*max).filter(|&k| parity.admits(k)).count() as u64
            }
            CorpusDescriptor::Fixture { names } => names.len() as u64,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The graph stream. Fixtures are loaded with their facts checked.
    pub fn items(
        &self,
    ) -> Result<Box<dyn Iterator<Item = Result<CorpusItem, GeneratorError>> + Send>, GeneratorError>
    {
        self.validate()?;
        Ok(match self.clone() {
            CorpusDescriptor::Exhaustive { min_n, max_n } => {
                Box::new((min_n..=max_n).flat_map(|n| {
                    let pairs = complete_pairs(0..n);
                    (0..1u64 << pairs.len()).map(move |mask| {
                        Ok(CorpusItem {
                            id: format!("n{n}-mask{mask}"),
                            graph: labeled_graph(n, &pairs, mask),
                        })
                    })
                }))
            }
            CorpusDescriptor::Random { n, p, count, seed } => {
                let stream = RandomGraphs::new(n, p, seed)?;
                Box::new(stream.take(count).enumerate().map(move |(i, graph)| {
                    Ok(CorpusItem {
                        id: format!("gnp-n{n}-p{p}-s{seed}-{i}"),
                        graph,
                    })
                }))
            }
            CorpusDescriptor::Family {
                name,
                min,
                max,
                parity,
            } => {
                let lo = family_min_parameter(&name)?.max(min);
                Box::new((lo..=max).filter(move |&k| parity.admits(k)).map(move |k| {
                    Ok(CorpusItem {
                        id: format!("{name}-{k}"),
                        graph: family(&name, k)?,
                    })
                }))
            }
            CorpusDescriptor::Fixture { names } => Box::new(names.into_iter().map(|name| {
                let fx = fixture(&name)?;
                Ok(CorpusItem {
                    id: name,
                    graph: fx.graph,
                })
            })),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::write_edge_list;

    #[test]
    fn family_members() {
        assert_eq!(family("cycle", 5).unwrap(), cycle(5));
        let f2 = family("friendship", 2).unwrap();
        assert_eq!((f2.n(), f2.m()), (5, 6));
        let k4 = family("complete", 4).unwrap();
        assert_eq!((k4.n(), k4.m()), (4, 6));
        assert_eq!(family("star", 3).unwrap().degree(0), 3);
        assert_eq!(family_with("complete_bipartite", &[2, 3]).unwrap().m(), 6);
        assert!(matches!(
            family("wheel", 5),
            Err(GeneratorError::UnknownFamily(_))
        ));
        assert!(matches!(
            family("cycle", 2),
            Err(GeneratorError::InvalidParameter { .. })
        ));
        assert!(matches!(
            family("friendship", 0),
            Err(GeneratorError::InvalidParameter { .. })
        ));
    }

    #[test]
    fn family_closed_forms() {
        for k in 3..20 {
            let c = cycle(k);
            assert_eq!((c.n(), c.m()), (k, k));
        }
        for k in 1..10 {
            let f = friendship(k);
            assert_eq!((f.n(), f.m()), (2 * k + 1, 3 * k));
        }
        for k in 0..12 {
            assert_eq!(complete(k).m(), k * k.saturating_sub(1) / 2);
        }
        let j = join_pk1_complete(2, 3);
        assert_eq!(j.m(), 3 + 6);
        assert!(j.is_independent(VertexSet::full(2)));
        assert_eq!(disjoint_union_pk1_complete(2, 3).m(), 3);
    }

    #[test]
    fn labeled_enumeration() {
        assert_eq!(all_labeled_graphs(2).unwrap().count(), 2);
        assert_eq!(all_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(all_labeled_graphs(4).unwrap().count(), 64);
        assert!(matches!(
            all_labeled_graphs(8),
            Err(GeneratorError::OrderOverBudget(8))
        ));
        let graphs: Vec<Graph> = all_labeled_graphs(3).unwrap().collect();
        assert_eq!(graphs[0].m(), 0);
        assert_eq!(graphs[1].edge_vec(), vec![Edge::new(0, 1)]);
        assert_eq!(graphs[2].edge_vec(), vec![Edge::new(0, 2)]);
        assert_eq!(graphs[7].m(), 3);
        assert_eq!(labeled_graph_count(6), 33_868);
        assert_eq!(CorpusDescriptor::exhaustive(6).len(), 33_868);
    }

    #[test]
    fn random_graphs() {
        assert_eq!(erdos_renyi(5, 0.0, 9).unwrap().m(), 0);
        assert_eq!(erdos_renyi(5, 1.0, 9).unwrap(), complete(5));
        assert_eq!(
            erdos_renyi(12, 0.3, 42).unwrap(),
            erdos_renyi(12, 0.3, 42).unwrap()
        );
        let a: Vec<Graph> = RandomGraphs::new(8, 0.5, 1).unwrap().take(5).collect();
        let b: Vec<Graph> = RandomGraphs::new(8, 0.5, 1).unwrap().take(5).collect();
        assert_eq!(a, b);
        assert_ne!(a[0], a[1]);
        assert!(RandomGraphs::new(5, 1.5, 0).is_err());
    }

    #[test]
    fn golden_random_graph() {
        let golden = include_str!("../../../fixtures/golden/gnp-n10-p0.3-s42.edges");
        assert_eq!(write_edge_list(&erdos_renyi(10, 0.3, 42).unwrap()), golden);
    }

    #[test]
    fn fixture_lookup() {
        assert!(matches!(
            fixture("fig99-G1"),
            Err(GeneratorError::UnknownFixture(_))
        ));
        let fx = fixture("fig5-G1").unwrap();
        assert_eq!(fx.graph.n(), 8);
        assert_eq!(fx.graph.label(fx.vertex("a")), "a");
        assert_eq!(fixture_names().count(), 21);
    }

    #[test]
    fn corpus_streams() {
        let odd = CorpusDescriptor::Family {
            name: "cycle".into(),
            min: 0,
            max: 9,
            parity: Parity::Odd,
        };
        let ids: Vec<String> = odd.items().unwrap().map(|i| i.unwrap().id).collect();
        assert_eq!(ids, ["cycle-3", "cycle-5", "cycle-7", "cycle-9"]);
        assert_eq!(odd.len(), 4);
        let exhaustive = CorpusDescriptor::exhaustive(3);
        assert_eq!(exhaustive.items().unwrap().count() as u64, exhaustive.len());
        assert!(CorpusDescriptor::exhaustive(8).items().is_err());
    }
}
