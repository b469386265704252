//! Brute-force reference implementations over all 2^n vertex subsets.
//! Nothing here calls the optimized routines; only adjacency is read from
//! the graph under test.
#![allow(dead_code)]

use kegraph::{Graph, VertexSet};

pub struct Oracle {
    pub n: usize,
    /// Vertices still present.
    pub universe: u64,
    pub adj: Vec<u64>,
}

pub struct CriticalOracle {
    pub d: i64,
    pub sets: Vec<u64>,
    pub ker: u64,
    pub diadem: u64,
    pub alpha_prime: usize,
}

fn ones(bits: u64) -> usize {
    bits.count_ones() as usize
}

fn members(mut bits: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (bits != 0).then(|| {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            v
        })
    })
}

impl Oracle {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut adj = vec![0u64; n];
        for e in g.edges() {
            adj[e.u] |= 1 << e.v;
            adj[e.v] |= 1 << e.u;
        }
        let universe = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Oracle { n, universe, adj }
    }

    pub fn without_vertex(&self, v: usize) -> Self {
        Oracle {
            n: self.n,
            universe: self.universe & !(1 << v),
            adj: self.adj.clone(),
        }
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Oracle {
            n: self.n,
            universe: self.universe,
            adj,
        }
    }

    pub fn order(&self) -> usize {
        ones(self.universe)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in members(self.universe) {
            for v in members(self.adj[u] & self.universe) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighborhood(&self, x: u64) -> u64 {
        members(x).fold(0, |acc, v| acc | self.adj[v]) & self.universe
    }

    pub fn is_independent(&self, x: u64) -> bool {
        members(x).all(|v| self.adj[v] & x == 0)
    }

    /// Every subset of the universe, ascending as integers.
    fn subsets(&self) -> impl Iterator<Item = u64> + '_ {
        let u = self.universe;
        // standard submask walk, reversed into ascending order
        let mut all = Vec::with_capacity(1 << ones(u));
        let mut s = u;
        loop {
            all.push(s);
            if s == 0 {
                break;
            }
            s = (s - 1) & u;
        }
        all.into_iter().rev()
    }

    pub fn independent_sets(&self) -> Vec<u64> {
        self.subsets().filter(|&x| self.is_independent(x)).collect()
    }

    pub fn alpha(&self) -> usize {
        self.independent_sets()
            .into_iter()
            .map(ones)
            .max()
            .unwrap_or(0)
    }

    pub fn omega(&self) -> Vec<u64> {
        let sets = self.independent_sets();
        let a = sets.iter().copied().map(ones).max().unwrap_or(0);
        sets.into_iter().filter(|&x| ones(x) == a).collect()
    }

    pub fn core(&self) -> u64 {
        self.omega()
            .into_iter()
            .fold(self.universe, |acc, s| acc & s)
    }

    pub fn difference(&self, x: u64) -> i64 {
        ones(x) as i64 - ones(self.neighborhood(x)) as i64
    }

    pub fn critical(&self) -> CriticalOracle {
        let ind = self.independent_sets();
        let d = ind.iter().map(|&x| self.difference(x)).max().unwrap_or(0);
        let sets: Vec<u64> = ind
            .into_iter()
            .filter(|&x| self.difference(x) == d)
            .collect();
        CriticalOracle {
            d,
            ker: sets.iter().fold(self.universe, |acc, &s| acc & s),
            diadem: sets.iter().fold(0, |acc, &s| acc | s),
            alpha_prime: sets.iter().copied().map(ones).max().unwrap_or(0),
            sets,
        }
    }

    /// Maximum matching size by memoized recursion on vertex subsets.
    pub fn mu(&self) -> usize {
        let mut memo = std::collections::HashMap::new();
        self.mu_of(self.universe, &mut memo)
    }

    fn mu_of(&self, mask: u64, memo: &mut std::collections::HashMap<u64, usize>) -> usize {
        if mask.count_ones() < 2 {
            return 0;
        }
        if let Some(&m) = memo.get(&mask) {
            return m;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = self.mu_of(rest, memo);
        for u in members(self.adj[v] & rest) {
            best = best.max(1 + self.mu_of(rest & !(1 << u), memo));
        }
        memo.insert(mask, best);
        best
    }

    pub fn is_ke(&self) -> bool {
        self.alpha() + self.mu() == self.order()
    }

    pub fn kappa(&self) -> usize {
        self.order() - self.alpha() - self.mu()
    }

    pub fn rho_v(&self) -> usize {
        members(self.universe)
            .filter(|&v| self.without_vertex(v).is_ke())
            .count()
    }

    pub fn rho_e(&self) -> usize {
        self.edges()
            .into_iter()
            .filter(|&(u, v)| self.without_edge(u, v).is_ke())
            .count()
    }

    /// Hall's condition for a matching of `from` into the disjoint set `into`.
    pub fn hall(&self, from: u64, into: u64) -> bool {
        let mut t = from;
        loop {
            if ones(self.neighborhood(t) & into) < ones(t) {
                return false;
            }
            if t == 0 {
                return true;
            }
            t = (t - 1) & from;
        }
    }
}

pub fn set(bits: u64) -> VertexSet {
    VertexSet::from_bits(bits)
}

/// Compares the optimized α, μ, d, core, ker, diadem and α′ with the oracle.
pub fn compare(g: &Graph) -> Result<(), String> {
    use kegraph::{critical, independence, matching};
    let o = Oracle::new(g);
    let mut diffs = Vec::new();
    let mut check = |name: &str, got: String, want: String| {
        if got != want {
            diffs.push(format!("{name}: optimized {got}, oracle {want}"));
        }
    };
    check(
        "alpha",
        independence::alpha(g).to_string(),
        o.alpha().to_string(),
    );
    let m = matching::maximum_matching(g);
    check(
        "mu",
        matching::matching_number(g).to_string(),
        o.mu().to_string(),
    );
    check(
        "matching",
        m.is_valid_in(g)
            .then_some(m.len())
            .map_or("invalid".into(), |l| l.to_string()),
        o.mu().to_string(),
    );
    let (core, _) = independence::core_and_xi(g).map_err(|e| e.to_string())?;
    check("core", core.to_string(), set(o.core()).to_string());
    let c = o.critical();
    let p = critical::critical_profile(g).map_err(|e| e.to_string())?;
    check("d", p.d.to_string(), c.d.to_string());
    check("ker", p.ker.to_string(), set(c.ker).to_string());
    check("diadem", p.diadem.to_string(), set(c.diadem).to_string());
    check(
        "alpha_prime",
        p.alpha_prime.to_string(),
        c.alpha_prime.to_string(),
    );
    if diffs.is_empty() {
        Ok(())
    } else {
        Err(diffs.join("; "))
    }
}
