//! Critical independent sets: sets `I` maximizing `|I| - |N(I)|` over Ind(G).
//!
//! The empty set is independent with difference 0, so d(G) ≥ 0 and ∅ is
//! critical exactly when d(G) = 0. The search enumerates independent sets by
//! include/exclude branching and prunes with `d(I) + cover(candidates)`,
//! since each added vertex raises the difference by at most one and the
//! added vertices form an independent subset of the candidates.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::independence::{
    alpha_within, clique_cover_bound, intersect_all, CapacityError, DEFAULT_ENUMERATION_CAP,
};
use crate::matching::matching_number_within;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error(transparent)]
    Capacity(#[from] CapacityError),
    #[error("decomposition postcondition failed: {0}")]
    Defect(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalProfile {
    /// Critical difference d(G).
    pub d: i64,
    /// α′(G), size of a maximum critical independent set.
    pub alpha_prime: usize,
    pub ker: VertexSet,
    pub epsilon: usize,
    pub diadem: VertexSet,
    pub beta: usize,
    /// Lexicographically least maximum critical independent set.
    pub witness_max_critical: VertexSet,
}

/// All critical independent sets together with their summary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalFamily {
    pub profile: CriticalProfile,
    /// Every critical independent set, ascending lexicographic order.
    pub sets: Vec<VertexSet>,
}

impl CriticalFamily {
    /// MaxCritIndep(G) in lexicographic order.
    pub fn maximum_sets(&self) -> impl Iterator<Item = VertexSet> + '_ {
        let size = self.profile.alpha_prime;
        self.sets.iter().copied().filter(move |s| s.len() == size)
    }
}

struct Search<'a> {
    g: &'a Graph,
    active: VertexSet,
}

impl Search<'_> {
    fn nbh(&self, v: usize) -> VertexSet {
        self.g.neighbors(v).intersection(self.active)
    }

    fn pick(&self, cand: VertexSet) -> usize {
        let mut best = (usize::MAX, 0);
        for v in cand {
            let d = self.nbh(v).intersection(cand).len();
            if best.0 == usize::MAX || d > best.1 {
                best = (v, d);
            }
        }
        best.0
    }

    fn bound(&self, chosen: VertexSet, nbh: VertexSet, cand: VertexSet) -> i64 {
        let gain = cand.len().min(clique_cover_bound(self.g, cand));
        chosen.len() as i64 - nbh.len() as i64 + gain as i64
    }

    fn maximize(&self, chosen: VertexSet, nbh: VertexSet, cand: VertexSet, best: &mut i64) {
        if cand.is_empty() {
            *best = (*best).max(chosen.len() as i64 - nbh.len() as i64);
            return;
        }
        if self.bound(chosen, nbh, cand) <= *best {
            return;
        }
        let v = self.pick(cand);
        let nv = self.nbh(v);
        self.maximize(
            chosen.with(v),
            nbh.union(nv),
            cand.difference(nv).without(v),
            best,
        );
        self.maximize(chosen, nbh, cand.without(v), best);
    }

    fn collect(
        &self,
        chosen: VertexSet,
        nbh: VertexSet,
        cand: VertexSet,
        target: i64,
        cap: usize,
        out: &mut Vec<VertexSet>,
    ) -> Result<(), CapacityError> {
        if cand.is_empty() {
            if chosen.len() as i64 - nbh.len() as i64 == target {
                if out.len() == cap {
                    return Err(CapacityError { cap });
                }
                out.push(chosen);
            }
            return Ok(());
        }
        if self.bound(chosen, nbh, cand) < target {
            return Ok(());
        }
        let v = self.pick(cand);
        let nv = self.nbh(v);
        self.collect(
            chosen.with(v),
            nbh.union(nv),
            cand.difference(nv).without(v),
            target,
            cap,
            out,
        )?;
        self.collect(chosen, nbh, cand.without(v), target, cap, out)
    }
}

/// d(G[active]).
pub(crate) fn critical_difference_within(g: &Graph, active: VertexSet) -> i64 {
    let search = Search { g, active };
    let mut best = 0;
    search.maximize(VertexSet::EMPTY, VertexSet::EMPTY, active, &mut best);
    best
}

pub(crate) fn critical_family_within(
    g: &Graph,
    active: VertexSet,
    cap: usize,
) -> Result<CriticalFamily, CapacityError> {
    let search = Search { g, active };
    let d = critical_difference_within(g, active);
    let mut sets = Vec::new();
    search.collect(
        VertexSet::EMPTY,
        VertexSet::EMPTY,
        active,
        d,
        cap,
        &mut sets,
    )?;
    sets.sort_by(VertexSet::lex_cmp);
    let alpha_prime = sets.iter().map(|s| s.len()).max().unwrap_or(0);
    let witness_max_critical = sets
        .iter()
        .copied()
        .find(|s| s.len() == alpha_prime)
        .unwrap_or(VertexSet::EMPTY);
    let ker = intersect_all(&sets);
    let diadem = sets.iter().fold(VertexSet::EMPTY, |acc, &s| acc.union(s));
    Ok(CriticalFamily {
        profile: CriticalProfile {
            d,
            alpha_prime,
            ker,
            epsilon: ker.len(),
            diadem,
            beta: diadem.len(),
            witness_max_critical,
        },
        sets,
    })
}

/// `|X| - |N(X)|`.
pub fn difference(g: &Graph, x: VertexSet) -> i64 {
    g.difference(x)
}

/// d(G).
pub fn critical_difference(g: &Graph) -> i64 {
    critical_difference_within(g, g.vertices())
}

/// Enumerates every critical independent set (default cap) and summarizes
/// ker, diadem and α′.
pub fn critical_family(g: &Graph) -> Result<CriticalFamily, CapacityError> {
    critical_family_within(g, g.vertices(), DEFAULT_ENUMERATION_CAP)
}

pub fn critical_profile(g: &Graph) -> Result<CriticalProfile, CapacityError> {
    critical_family(g).map(|f| f.profile)
}

pub fn is_critical_set(g: &Graph, a: VertexSet) -> bool {
    a.is_subset(g.vertices()) && g.is_independent(a) && g.difference(a) == critical_difference(g)
}

/// The split `V = X ∪ (V - X)` with `X = N[A]` for a maximum critical
/// independent set `A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LarsonDecomposition {
    pub x: VertexSet,
    pub complement: VertexSet,
    /// The maximum critical independent set used to build `x`.
    pub a: VertexSet,
    /// Set when the only maximum critical independent set is ∅, so `x` is empty.
    pub degenerate: bool,
}

/// Builds the decomposition from the lexicographically least maximum
/// critical set and verifies it: α splits additively, `G[X]` is
/// König-Egerváry, `G[V - X]` has ∅ as its only critical set, and every other
/// maximum critical set yields the same `X`.
pub fn larson_decomposition(g: &Graph) -> Result<LarsonDecomposition, DecompositionError> {
    let family = critical_family(g)?;
    larson_decomposition_from(g, &family)
}

pub(crate) fn larson_decomposition_from(
    g: &Graph,
    family: &CriticalFamily,
) -> Result<LarsonDecomposition, DecompositionError> {
    let a = family.profile.witness_max_critical;
    let x = g.closed_neighborhood(a);
    let complement = x.complement(g.n());
    let defect = |msg: String| Err(DecompositionError::Defect(msg));

    for other in family.maximum_sets() {
        let other_x = g.closed_neighborhood(other);
        if other_x != x {
            return defect(format!("N[{other}] = {other_x} differs from N[{a}] = {x}"));
        }
    }
    let whole = alpha_within(g, g.vertices());
    let inner = alpha_within(g, x);
    let outer = alpha_within(g, complement);
    if whole != inner + outer {
        return defect(format!("alpha {whole} != {inner} + {outer}"));
    }
    if inner + matching_number_within(g, x) != x.len() {
        return defect(format!("G[{x}] is not König-Egerváry"));
    }
    let rest = critical_family_within(g, complement, DEFAULT_ENUMERATION_CAP)?;
    if rest.sets != [VertexSet::EMPTY] {
        return defect(format!("G[{complement}] has critical sets {:?}", rest.sets));
    }
    Ok(LarsonDecomposition {
        x,
        complement,
        a,
        degenerate: x.is_empty(),
    })
}
