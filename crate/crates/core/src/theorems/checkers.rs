use crate::classify::{is_supportive, Analysis, Deletions};
use crate::critical::larson_decomposition_from;
use crate::graph::{Graph, VertexSet};
use crate::independence::{alpha_within, for_each_independent_set, CapacityError};
use crate::matching::{bipartite_saturating, matching_number_within, maximum_matching_within};

use super::{CheckError, Element, TheoremCheckResult, TheoremId};

/// Ceiling on independent sets visited by the sweeping checkers.
const SWEEP_CAP: usize = 1 << 20;

/// Ceiling on critical sets compared pairwise.
const PAIR_CAP: usize = 1 << 12;

type Outcome = Result<TheoremCheckResult, CheckError>;

struct Ctx<'a> {
    id: TheoremId,
    g: &'a Graph,
    a: &'a Analysis,
}

impl Ctx<'_> {
    fn del(&self) -> &Deletions {
        &self.a.deletions
    }

    fn holds(&self) -> Outcome {
        Ok(TheoremCheckResult::holds(self.id))
    }

    fn na(&self, note: impl Into<String>) -> Outcome {
        Ok(TheoremCheckResult::not_applicable(self.id, note))
    }

    fn fail(&self, element: Option<Element>, detail: impl Into<String>) -> Outcome {
        Ok(TheoremCheckResult::violated(
            self.id,
            self.g,
            element,
            detail.into(),
        ))
    }

    /// Holds when `lhs == rhs`, else a violation describing both sides.
    fn iff(&self, lhs: bool, rhs: bool, what: &str) -> Outcome {
        if lhs == rhs {
            self.holds()
        } else {
            self.fail(None, format!("{what}: left side {lhs}, right side {rhs}"))
        }
    }

    fn require_non_ke(&self) -> Option<Outcome> {
        self.del()
            .is_ke()
            .then(|| self.na("graph is KE, statement requires a non-KE graph"))
    }

    fn require_1ke(&self) -> Option<Outcome> {
        (!self.del().is_1ke()).then(|| {
            self.na(format!(
                "kappa = {}, statement requires a 1-KE graph",
                self.del().kappa()
            ))
        })
    }

    fn require_ke(&self) -> Option<Outcome> {
        (!self.del().is_ke()).then(|| {
            self.na(format!(
                "kappa = {}, statement requires a KE graph",
                self.del().kappa()
            ))
        })
    }

    fn has_nonempty_critical(&self) -> bool {
        self.a.critical.sets.iter().any(|s| !s.is_empty())
    }
}

pub(super) fn run(id: TheoremId, g: &Graph, a: &Analysis) -> Outcome {
    let cx = Ctx { id, g, a };
    match id {
        TheoremId::BoundsChain => bounds_chain(&cx),
        TheoremId::Th715 => th715(&cx),
        TheoremId::Th1 => th1(&cx),
        TheoremId::Cor1 => cor1(&cx),
        TheoremId::Th911 => th911(&cx),
        TheoremId::Th12 => th12(&cx),
        TheoremId::Th3 => th3(&cx),
        TheoremId::Th2 => th2(&cx),
        TheoremId::Lem1 => lem1(&cx),
        TheoremId::Cor25 => cor25(&cx),
        TheoremId::Prop1_1 => prop1_1(&cx),
        TheoremId::Lem84 => lem84(&cx),
        TheoremId::Cor3 => cor3(&cx),
        TheoremId::Th8 => th8(&cx),
        TheoremId::Th10 => th10(&cx),
        TheoremId::Th17 => th17(&cx),
        TheoremId::Th11 => th11(&cx),
        TheoremId::Prop11 => prop11(&cx),
        TheoremId::Th333 => th333(&cx),
        TheoremId::Th100 => th100(&cx),
        TheoremId::Th444 => th444(&cx),
        TheoremId::Cor18 => cor18(&cx),
        TheoremId::Cor2 => cor2(&cx),
        TheoremId::Th9 => th9(&cx),
        TheoremId::Lem10 => lem10(&cx),
        TheoremId::OddOrderRemark => odd_order_remark(&cx),
        TheoremId::CriticalEdgeLemma => critical_edge_lemma(&cx),
    }
}

fn bounds_chain(cx: &Ctx) -> Outcome {
    let n = cx.g.n();
    if n == 0 {
        return cx.na("empty graph");
    }
    let (alpha, mu) = (cx.a.alpha(), cx.a.mu());
    if n / 2 < alpha + mu && alpha + mu <= n && n <= alpha + 2 * mu {
        cx.holds()
    } else {
        cx.fail(None, format!("n = {n}, alpha = {alpha}, mu = {mu}"))
    }
}

/// Some independent `S` with `|S| >= |V - S|` and a matching of `V - S` into `S`.
fn star_decomposition(g: &Graph) -> Result<Option<VertexSet>, CheckError> {
    let all = g.vertices();
    let mut found = None;
    let mut visited = 0usize;
    let done = for_each_independent_set(g, all, g.n().div_ceil(2), &mut |s| {
        visited += 1;
        if bipartite_saturating(g, all.difference(s), s).is_some() {
            found = Some(s);
            return false;
        }
        visited < SWEEP_CAP
    });
    if !done && found.is_none() {
        return Err(CapacityError { cap: SWEEP_CAP }.into());
    }
    Ok(found)
}

fn th715(cx: &Ctx) -> Outcome {
    let g = cx.g;
    let all = g.vertices();
    let ke = cx.del().is_ke();
    let decomposable = star_decomposition(g)?.is_some();
    // when mu = |V - S| every maximum matching has exactly one end in V - S
    // per edge, so the computed matching decides the "each maximum matching"
    // clause
    let m = &cx.a.matching;
    let matches_all = cx.a.omega.iter().all(|&s| {
        let rest = all.difference(s);
        rest.is_subset(m.saturated()) && m.matches_into(rest, s)
    });
    let d = cx.a.d();
    let all_critical = cx.a.omega.iter().all(|&s| g.difference(s) == d);
    if ke == decomposable && ke == matches_all && ke == all_critical {
        cx.holds()
    } else {
        cx.fail(
            None,
            format!("KE {ke}, S*A form {decomposable}, maximum matching covers V-S {matches_all}, Omega critical {all_critical}"),
        )
    }
}

fn th1(cx: &Ctx) -> Outcome {
    if let Some(r) = cx.require_non_ke() {
        return r;
    }
    let supportive: Vec<bool> =
        cx.a.omega
            .iter()
            .map(|&s| is_supportive(cx.g, s).is_some())
            .collect();
    let some = supportive.iter().any(|&b| b);
    let every = supportive.iter().all(|&b| b);
    let one_ke = cx.del().is_1ke();
    if one_ke == some && some == every {
        cx.holds()
    } else {
        let bad =
            cx.a.omega
                .iter()
                .zip(&supportive)
                .find(|(_, &b)| b != one_ke)
                .map(|(&s, _)| s);
        cx.fail(
            bad.map(Element::Set),
            format!("1-KE {one_ke}, some supportive {some}, every supportive {every}"),
        )
    }
}

/// Whether `G - x - y` is KE.
fn pair_deletion_is_ke(g: &Graph, x: usize, y: usize) -> bool {
    let rest = g.vertices().without(x).without(y);
    alpha_within(g, rest) + matching_number_within(g, rest) == g.n() - 2
}

fn cor1(cx: &Ctx) -> Outcome {
    if let Some(r) = cx.require_non_ke() {
        return r;
    }
    let del = cx.del();
    let by_vertex = (0..cx.g.n()).any(|v| del.vertex_deletion_is_ke(v));
    let by_edge = del
        .edges
        .iter()
        .any(|e| pair_deletion_is_ke(cx.g, e.u, e.v));
    cx.iff(
        del.is_1ke(),
        by_vertex || by_edge,
        "1-KE vs vertex or edge-pair deletion",
    )
}

/// Clause-by-clause evaluation for one `S`, independent of [`is_supportive`].
fn completes_into(g: &Graph, s: VertexSet) -> bool {
    let rest = g.vertices().difference(s);
    rest.iter()
        .any(|v| bipartite_saturating(g, rest.without(v), s).is_some())
        || g.edges()
            .filter(|e| e.endpoints().is_subset(rest))
            .any(|e| bipartite_saturating(g, rest.difference(e.endpoints()), s).is_some())
}

fn th911(cx: &Ctx) -> Outcome {
    if let Some(r) = cx.require_non_ke() {
        return r;
    }
    let failing =
        cx.a.omega
            .iter()
            .copied()
            .find(|&s| !completes_into(cx.g, s));
    let one_ke = cx.del().is_1ke();
    if one_ke == failing.is_none() {
        cx.holds()
    } else {
        cx.fail(
            failing.map(Element::Set),
            format!(
                "1-KE {one_ke}, every S in Omega completes {}",
                failing.is_none()
            ),
        )
    }
}

fn th12(cx: &Ctx) -> Outcome {
    if let Some(r) = cx.require_1ke() {
        return r;
    }
    let (alpha, mu, n) = (cx.a.alpha(), cx.a.mu(), cx.g.n());
    let pm = cx.a.has_perfect_matching();
    if mu > alpha + 1 {
        return cx.fail(None, format!("mu = {mu} > alpha + 1 = {}", alpha + 1));
    }
    if (mu == alpha + 1) != pm {
        return cx.fail(
            None,
            format!("mu = {mu}, alpha = {alpha}, perfect matching {pm}"),
        );
    }
    if !pm && n % 2 == 0 && mu >= alpha {
        return cx.fail(
            None,
            format!("n = {n} even without perfect matching but mu = {mu} >= alpha = {alpha}"),
        );
    }
    cx.holds()
}

fn th3(cx: &Ctx) -> Outcome {
    let del = cx.del();
    let vertex = del.vertex_almost_witness();
    let edge = del.edge_almost_witness();
    if vertex.is_none() && edge.is_none() {
        return cx.na("graph is neither vertex nor edge almost KE");
    }
    if del.is_1ke() {
        cx.holds()
    } else {
        let element = vertex.map(Element::Vertex).or(edge.map(Element::Edge));
        cx.fail(element, format!("almost KE but kappa = {}", del.kappa()))
    }
}

fn th2(cx: &Ctx) -> Outcome {
    if let Some(r) = cx.require_non_ke() {
        return r;
    }
    let del = cx.del();
    let n = cx.g.n();
    let one_ke = del.is_1ke();
    let vertex_almost = del.vertex_almost_witness().is_some();
    let quiet_vertex = (0..n).any(|v| !del.alpha_critical_vertex(v) && !del.mu_critical_vertex(v));
    if vertex_almost != (one_ke && quiet_vertex) {
        return cx.fail(
            None,
            format!("vertex almost {vertex_almost}, 1-KE {one_ke}, quiet vertex {quiet_vertex}"),
        );
    }
    // deletion witness preserving both alpha and mu
    let preserving = (0..n).any(|v| {
        del.vertex_deletion_is_ke(v)
            && del.vertex[v].alpha == del.alpha
            && del.vertex[v].mu == del.mu
    });
    if vertex_almost != preserving {
        return cx.fail(
            None,
            format!("vertex almost {vertex_almost}, preserving KE deletion {preserving}"),
        );
    }
    let edge_almost = del.edge_almost_witness().is_some();
    let good_edge =
        (0..del.edges.len()).any(|i| del.alpha_critical_edge(i) && !del.mu_critical_edge(i));
    cx.iff(
        edge_almost,
        one_ke && good_edge,
        "edge almost vs 1-KE with an alpha-critical non-mu-critical edge",
    )
}

fn lem1(cx: &Ctx) -> Outcome {
    let del = cx.del();
    if cx.g.n() == 0 {
        return cx.na("empty graph");
    }
    for (i, p) in del.edge.iter().enumerate() {
        let e = del.edges[i];
        if p.alpha < del.alpha || p.alpha > del.alpha + 1 || p.mu > del.mu || p.mu + 1 < del.mu {
            return cx.fail(
                Some(Element::Edge(e)),
                format!("G-e has alpha {}, mu {}", p.alpha, p.mu),
            );
        }
    }
    for (v, p) in del.vertex.iter().enumerate() {
        if p.alpha > del.alpha || p.alpha + 1 < del.alpha || p.mu > del.mu || p.mu + 1 < del.mu {
            return cx.fail(
                Some(Element::Vertex(v)),
                format!("G-v has alpha {}, mu {}", p.alpha, p.mu),
            );
        }
    }
    cx.holds()
}

fn cor25(cx: &Ctx) -> Outcome {
    let del = cx.del();
    if del.edges.is_empty() {
        return cx.na("graph has no edges");
    }
    for (i, p) in del.edge.iter().enumerate() {
        let same = p.alpha + p.mu == del.alpha + del.mu;
        let a = del.alpha_critical_edge(i);
        let m = del.mu_critical_edge(i);
        if same != (a == m) {
            return cx.fail(
                Some(Element::Edge(del.edges[i])),
                format!("sum preserved {same}, alpha-critical {a}, mu-critical {m}"),
            );
        }
    }
    cx.holds()
}

fn prop1_1(cx: &Ctx) -> Outcome {
    if let Some(r) = cx.require_ke() {
        return r;
    }
    let del = cx.del();
    let bipartite = cx.g.is_bipartite();
    for i in 0..del.edges.len() {
        let a = del.alpha_critical_edge(i);
        let m = del.mu_critical_edge(i);
        if (a && !m) || (bipartite && a != m) {
            return cx.fail(
                Some(Element::Edge(del.edges[i])),
                format!("alpha-critical {a}, mu-critical {m}, bipartite {bipartite}"),
            );
        }
    }
    cx.holds()
}

fn lem84(cx: &Ctx) -> Outcome {
    if !cx.g.is_almost_bipartite() {
        return cx.na("graph is not almost bipartite");
    }
    let k = cx.del().kappa();
    if k <= 1 {
        cx.holds()
    } else {
        cx.fail(None, format!("almost bipartite with kappa = {k}"))
    }
}

fn cor3(cx: &Ctx) -> Outcome {
    if !cx.g.is_almost_bipartite() {
        return cx.na("graph is not almost bipartite");
    }
    let del = cx.del();
    let (one, v, e) = (
        del.is_1ke(),
        del.vertex_almost_witness().is_some(),
        del.edge_almost_witness().is_some(),
    );
    if one == v && v == e {
        cx.holds()
    } else {
        cx.fail(
            None,
            format!("1-KE {one}, vertex almost {v}, edge almost {e}"),
        )
    }
}

fn th8(cx: &Ctx) -> Outcome {
    let del = cx.del();
    let Some(v) = (0..cx.g.n()).find(|&v| del.vertex_deletion_is_ke(v)) else {
        return cx.na("no vertex deletion is KE");
    };
    if del.kappa() <= 1 {
        cx.holds()
    } else {
        cx.fail(
            Some(Element::Vertex(v)),
            format!("G-v is KE but kappa = {}", del.kappa()),
        )
    }
}

fn th10(cx: &Ctx) -> Outcome {
    let del = cx.del();
    let Some(i) = (0..del.edges.len()).find(|&i| del.edge_deletion_is_ke(i)) else {
        return cx.na("no edge deletion is KE");
    };
    if del.kappa() <= 1 {
        cx.holds()
    } else {
        cx.fail(
            Some(Element::Edge(del.edges[i])),
            format!("G-e is KE but kappa = {}", del.kappa()),
        )
    }
}

fn th17(cx: &Ctx) -> Outcome {
    if let Some(r) = cx.require_1ke() {
        return r;
    }
    let del = cx.del();
    for v in 0..cx.g.n() {
        let ke = del.vertex_deletion_is_ke(v);
        let quiet = !del.alpha_critical_vertex(v) && !del.mu_critical_vertex(v);
        if ke != quiet {
            return cx.fail(
                Some(Element::Vertex(v)),
                format!("G-v KE {ke}, neither critical {quiet}"),
            );
        }
    }
    cx.holds()
}

fn th11(cx: &Ctx) -> Outcome {
    let g = cx.g;
    let del = cx.del();
    let all = g.vertices();
    let mu = cx.a.mu();
    let mut applicable = false;
    let mut failure: Option<(VertexSet, String)> = None;
    let mut visited = 0usize;
    let done = for_each_independent_set(g, all, 1, &mut |a| {
        visited += 1;
        let nbh = g.neighborhood(a);
        if let Some(m1) = bipartite_saturating(g, nbh, a) {
            applicable = true;
            let rest = all.difference(nbh.union(a));
            let m2 = maximum_matching_within(g, rest);
            match m1.union(&m2) {
                Some(m) if m.is_valid_in(g) && m.len() == mu => {}
                other => {
                    let size = other.map_or(0, |m| m.len());
                    failure = Some((a, format!("extension has size {size}, mu = {mu}")));
                    return false;
                }
            }
            if let Some(v) = nbh.iter().find(|&v| !del.mu_critical_vertex(v)) {
                failure = Some((a, format!("vertex {v} of N(A) is not mu-critical")));
                return false;
            }
        }
        visited < SWEEP_CAP
    });
    if let Some((a, detail)) = failure {
        return cx.fail(Some(Element::Set(a)), detail);
    }
    if !done {
        return Err(CapacityError { cap: SWEEP_CAP }.into());
    }
    if applicable {
        cx.holds()
    } else {
        cx.na("no nonempty independent set has a matching from its neighborhood into it")
    }
}

fn prop11(cx: &Ctx) -> Outcome {
    if !cx.has_nonempty_critical() {
        return cx.na("the empty set is the only critical independent set");
    }
    let g = cx.g;
    let core = cx.a.core;
    for &a in &cx.a.critical.sets {
        let hit = core.intersection(g.neighborhood(a));
        if !hit.is_empty() {
            return cx.fail(Some(Element::Set(a)), format!("core meets N(A) in {hit}"));
        }
    }
    let nd = g.neighborhood(cx.a.critical.profile.diadem);
    if !core.is_disjoint(nd) {
        return cx.fail(None, format!("core {core} meets N(diadem) {nd}"));
    }
    let del = cx.del();
    let quiet = del
        .mu_critical_vertices()
        .difference(del.alpha_critical_vertices());
    if !nd.is_subset(quiet) {
        return cx.fail(
            None,
            format!("N(diadem) {nd} is not inside the mu-critical non-alpha-critical set {quiet}"),
        );
    }
    cx.holds()
}

fn th333(cx: &Ctx) -> Outcome {
    if !cx.has_nonempty_critical() {
        return cx.na("the empty set is the only critical independent set");
    }
    let g = cx.g;
    let maxcrit: Vec<VertexSet> = cx.a.critical.maximum_sets().collect();
    for &s in &cx.a.critical.sets {
        if !cx.a.omega.iter().any(|&m| s.is_subset(m)) {
            return cx.fail(
                Some(Element::Set(s)),
                "critical set in no maximum independent set",
            );
        }
        if !maxcrit.iter().any(|&m| s.is_subset(m)) {
            return cx.fail(
                Some(Element::Set(s)),
                "critical set in no maximum critical set",
            );
        }
        if bipartite_saturating(g, g.neighborhood(s), s).is_none() {
            return cx.fail(Some(Element::Set(s)), "no matching from N(S) into S");
        }
    }
    cx.holds()
}

fn th100(cx: &Ctx) -> Outcome {
    match larson_decomposition_from(cx.g, &cx.a.critical) {
        Ok(_) => cx.holds(),
        Err(crate::critical::DecompositionError::Defect(msg)) => cx.fail(None, msg),
        Err(crate::critical::DecompositionError::Capacity(e)) => Err(e.into()),
    }
}

fn th444(cx: &Ctx) -> Outcome {
    let sets = &cx.a.critical.sets;
    if sets.len() < 2 {
        return cx.na("fewer than two critical independent sets");
    }
    if sets.len() > PAIR_CAP {
        return Err(CapacityError { cap: PAIR_CAP }.into());
    }
    let d = cx.a.d();
    for (i, &a) in sets.iter().enumerate() {
        for &b in &sets[i + 1..] {
            for (what, x) in [("union", a.union(b)), ("intersection", a.intersection(b))] {
                if cx.g.difference(x) != d {
                    return cx.fail(
                        Some(Element::Pair(a, b)),
                        format!("{what} {x} has difference {}, d = {d}", cx.g.difference(x)),
                    );
                }
            }
        }
    }
    cx.holds()
}

fn rho_bound(cx: &Ctx, subtract: usize, what: &str) -> Outcome {
    if let Some(r) = cx.require_1ke() {
        return r;
    }
    let rho = cx.del().rho_v() as i64;
    let bound = cx.g.n() as i64 + cx.a.d() - cx.a.xi() as i64 - subtract as i64;
    if rho <= bound {
        cx.holds()
    } else {
        cx.fail(
            None,
            format!("rho_v = {rho} > n + d - xi - {what} = {bound}"),
        )
    }
}

fn cor18(cx: &Ctx) -> Outcome {
    rho_bound(cx, cx.a.beta(), "beta")
}

fn cor2(cx: &Ctx) -> Outcome {
    rho_bound(cx, cx.a.alpha_prime(), "alpha'")
}

fn th9(cx: &Ctx) -> Outcome {
    if let Some(r) = cx.require_ke() {
        return r;
    }
    let del = cx.del();
    let (n, m) = (cx.g.n() as i64, cx.g.m() as i64);
    let shift = cx.a.epsilon() as i64 - cx.a.xi() as i64;
    let (rv, re) = (del.rho_v() as i64, del.rho_e() as i64);
    if rv != n + shift {
        return cx.fail(
            None,
            format!("rho_v = {rv}, n - xi + epsilon = {}", n + shift),
        );
    }
    if re > m + shift {
        return cx.fail(
            None,
            format!("rho_e = {re} > m - xi + epsilon = {}", m + shift),
        );
    }
    cx.holds()
}

fn lem10(cx: &Ctx) -> Outcome {
    if cx.g.n() == 0 {
        return cx.na("empty graph");
    }
    let del = cx.del();
    let a = cx.a;
    let cva = del.critical_vertex_almost();
    let second = del.is_1ke() && !a.has_perfect_matching() && a.xi() == 0 && a.beta() == 0;
    if cva != second {
        return cx.fail(
            None,
            format!("critical vertex almost {cva}, characterization {second}"),
        );
    }
    if cva && a.alpha() != a.mu() {
        return cx.fail(
            None,
            format!(
                "critical vertex almost with alpha {} != mu {}",
                a.alpha(),
                a.mu()
            ),
        );
    }
    let first = del.is_ke() && a.core == a.critical.profile.ker;
    let full = del.rho_v() == cx.g.n();
    cx.iff(
        full,
        first || second,
        "rho_v = n vs (KE with core = ker) or characterization",
    )
}

fn odd_order_remark(cx: &Ctx) -> Outcome {
    if !cx.del().critical_vertex_almost() {
        return cx.na("graph is not critical vertex almost KE");
    }
    if cx.g.n() % 2 == 1 {
        cx.holds()
    } else {
        cx.fail(
            None,
            format!("critical vertex almost KE of even order {}", cx.g.n()),
        )
    }
}

fn critical_edge_lemma(cx: &Ctx) -> Outcome {
    let del = cx.del();
    if !del.critical_edge_almost() {
        return cx.na("graph is not critical edge almost KE");
    }
    match (0..del.edges.len()).find(|&i| !del.alpha_critical_edge(i)) {
        None => cx.holds(),
        Some(i) => cx.fail(
            Some(Element::Edge(del.edges[i])),
            "edge is not alpha-critical",
        ),
    }
}
