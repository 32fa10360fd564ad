//! Exact Turán numbers `ex(n, F)` for small `n` by branch and bound.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::hypergraph::{binom3, triple_index, NamedGraph, ThreeGraph, Triple};

/// Largest supported vertex count (35 triples, one `u64` mask).
pub const TURAN_MAX_VERTICES: usize = 7;

/// Largest vertex count for which the exhaustive sweep is offered.
pub const SWEEP_MAX_VERTICES: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TuranError {
    #[error("turan search supports n <= {limit}, got {n}")]
    OutOfSupportedRange { n: usize, limit: usize },
    #[error("family member {0} has no edges, so every graph contains it")]
    EdgelessMember(String),
    #[error("search exceeded its time budget of {0:?}")]
    BudgetExceeded(Duration),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TuranResult {
    pub n: usize,
    pub family: Vec<String>,
    /// Maximum number of edges of a family-free `n`-vertex 3-graph.
    pub value: usize,
    /// Canonical extremal graphs, sorted; empty unless requested.
    pub witnesses: Vec<ThreeGraph>,
}

/// Complete 3-partite 3-graph with parts of sizes ⌊n/3⌋, ⌊(n+1)/3⌋, ⌊(n+2)/3⌋.
pub fn balanced_3partite(n: usize) -> ThreeGraph {
    let sizes = [n / 3, (n + 1) / 3, (n + 2) / 3];
    let part = |v: usize| {
        if v < sizes[0] {
            0
        } else if v < sizes[0] + sizes[1] {
            1
        } else {
            2
        }
    };
    let mut g = ThreeGraph::empty(n);
    for (a, b, c) in (0..n).tuple_combinations() {
        if part(a) != part(b) && part(b) != part(c) && part(a) != part(c) {
            g.add_edge([a, b, c]);
        }
    }
    g
}

fn family_names(family: &[ThreeGraph]) -> Vec<String> {
    family
        .iter()
        .map(|f| {
            NamedGraph::ALL
                .iter()
                .find(|g| g.graph() == *f)
                .map(|g| g.name().to_string())
                .unwrap_or_else(|| f.to_string())
        })
        .collect()
}

/// Configuration for [`turan_number`]-style searches.
#[derive(Clone, Debug)]
pub struct TuranSearch {
    n: usize,
    family: Vec<ThreeGraph>,
    witnesses: bool,
    budget: Option<Duration>,
}

impl TuranSearch {
    pub fn new(n: usize, family: &[ThreeGraph]) -> Self {
        TuranSearch {
            n,
            family: family.to_vec(),
            witnesses: true,
            budget: None,
        }
    }

    pub fn witnesses(mut self, on: bool) -> Self {
        self.witnesses = on;
        self
    }

    pub fn budget(mut self, budget: Duration) -> Self {
        self.budget = Some(budget);
        self
    }

    fn active_family(&self) -> Result<Vec<ThreeGraph>, TuranError> {
        let mut active = Vec::new();
        for f in &self.family {
            if f.n() > self.n {
                continue;
            }
            if f.edge_count() == 0 {
                return Err(TuranError::EdgelessMember(f.to_string()));
            }
            active.push(f.clone());
        }
        Ok(active)
    }

    /// Depth-first include/exclude search over triples in lexicographic order.
    pub fn run(&self) -> Result<TuranResult, TuranError> {
        if self.n > TURAN_MAX_VERTICES {
            return Err(TuranError::OutOfSupportedRange {
                n: self.n,
                limit: TURAN_MAX_VERTICES,
            });
        }
        let family = self.active_family()?;
        let triples: Vec<Triple> = (0..self.n).tuple_combinations().map(|(a, b, c)| [a, b, c]).collect();
        let mut dfs = Dfs {
            n: self.n,
            bit: triples.iter().map(|&t| 1u64 << triple_index(t)).collect(),
            triples,
            patterns: family.iter().map(Pattern::new).collect(),
            best: 0,
            found: vec![0],
            keep_ties: self.witnesses,
            deadline: self.budget.map(|b| (Instant::now() + b, b)),
            nodes: 0,
            expired: false,
        };
        // Every nonempty graph has an isomorphic copy containing {0,1,2}.
        if !dfs.triples.is_empty() && !dfs.creates_copy(0, 0) {
            dfs.search(1, dfs.bit[0], 1);
        }
        if dfs.expired {
            return Err(TuranError::BudgetExceeded(self.budget.unwrap_or_default()));
        }
        Ok(self.finish(dfs.best, &dfs.found))
    }

    /// Exhaustive sweep over all `2^C(n,3)` graphs (n ≤ 5); used to
    /// cross-check [`TuranSearch::run`].
    pub fn sweep(&self) -> Result<TuranResult, TuranError> {
        if self.n > SWEEP_MAX_VERTICES {
            return Err(TuranError::OutOfSupportedRange {
                n: self.n,
                limit: SWEEP_MAX_VERTICES,
            });
        }
        let family = self.active_family()?;
        let mut best = 0;
        let mut found = Vec::new();
        for mask in 0..(1u64 << binom3(self.n)) {
            let edges = mask.count_ones() as usize;
            if edges < best {
                continue;
            }
            let g = ThreeGraph::from_mask(self.n, mask);
            if !g.is_family_free(&family) {
                continue;
            }
            if edges > best {
                best = edges;
                found.clear();
            }
            found.push(mask);
        }
        Ok(self.finish(best, &found))
    }

    fn finish(&self, value: usize, masks: &[u64]) -> TuranResult {
        let witnesses = if self.witnesses {
            masks
                .iter()
                .map(|&m| ThreeGraph::from_mask(self.n, m).canonical_form().expect("n <= 7"))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect()
        } else {
            Vec::new()
        };
        TuranResult {
            n: self.n,
            family: family_names(&self.family),
            value,
            witnesses,
        }
    }
}

/// `ex(n, family)` with extremal witnesses, for `n ≤ 7`.
pub fn turan_number(n: usize, family: &[ThreeGraph]) -> Result<TuranResult, TuranError> {
    TuranSearch::new(n, family).run()
}

/// A forbidden graph prepared for incremental detection: for each of its
/// edges, the remaining vertices in an order that closes edges early.
struct Pattern {
    n: usize,
    edges: Vec<Triple>,
    rest: Vec<Vec<usize>>,
}

impl Pattern {
    fn new(f: &ThreeGraph) -> Self {
        let edges = f.edges();
        let rest = edges
            .iter()
            .map(|e| {
                let mut placed: Vec<usize> = e.to_vec();
                let mut order = Vec::new();
                while placed.len() < f.n() {
                    let next = (0..f.n())
                        .filter(|v| !placed.contains(v))
                        .max_by_key(|&v| {
                            let closing = edges
                                .iter()
                                .filter(|t| t.contains(&v) && t.iter().all(|u| *u == v || placed.contains(u)))
                                .count();
                            (closing, std::cmp::Reverse(v))
                        })
                        .unwrap();
                    placed.push(next);
                    order.push(next);
                }
                order
            })
            .collect();
        Pattern { n: f.n(), edges, rest }
    }
}

struct Dfs {
    n: usize,
    triples: Vec<Triple>,
    bit: Vec<u64>,
    patterns: Vec<Pattern>,
    best: usize,
    found: Vec<u64>,
    keep_ties: bool,
    deadline: Option<(Instant, Duration)>,
    nodes: u64,
    expired: bool,
}

impl Dfs {
    fn search(&mut self, pos: usize, mask: u64, count: usize) {
        if self.expired {
            return;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(65_536) {
            if let Some((deadline, _)) = self.deadline {
                if Instant::now() > deadline {
                    self.expired = true;
                    return;
                }
            }
        }
        let remaining = self.triples.len() - pos;
        let reach = count + remaining;
        if reach < self.best || (!self.keep_ties && reach == self.best) {
            return;
        }
        if pos == self.triples.len() {
            if count > self.best {
                self.best = count;
                self.found.clear();
            }
            self.found.push(mask);
            return;
        }
        if !self.creates_copy(mask, pos) {
            self.search(pos + 1, mask | self.bit[pos], count + 1);
        }
        self.search(pos + 1, mask, count);
    }

    /// Whether `mask + triples[pos]` contains a family member through the new
    /// triple.
    fn creates_copy(&self, mask: u64, pos: usize) -> bool {
        let host = mask | self.bit[pos];
        let t = self.triples[pos];
        self.patterns.iter().any(|p| {
            p.edges.iter().zip(&p.rest).any(|(e, rest)| {
                [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
                    .iter()
                    .any(|o| {
                        let mut map = [usize::MAX; 8];
                        for i in 0..3 {
                            map[e[i]] = t[o[i]];
                        }
                        self.extend(p, rest, 0, &mut map, host)
                    })
            })
        })
    }

    fn extend(&self, p: &Pattern, rest: &[usize], depth: usize, map: &mut [usize; 8], host: u64) -> bool {
        let has = |a: usize, b: usize, c: usize| host >> triple_index([a, b, c]) & 1 == 1;
        if depth == rest.len() {
            return p.edges.iter().all(|e| has(map[e[0]], map[e[1]], map[e[2]]));
        }
        let v = rest[depth];
        'candidates: for u in 0..self.n {
            if map[..p.n].contains(&u) {
                continue;
            }
            map[v] = u;
            for e in &p.edges {
                if e.contains(&v) && e.iter().all(|&w| map[w] != usize::MAX) && !has(map[e[0]], map[e[1]], map[e[2]]) {
                    map[v] = usize::MAX;
                    continue 'candidates;
                }
            }
            if self.extend(p, rest, depth + 1, map, host) {
                return true;
            }
            map[v] = usize::MAX;
        }
        false
    }
}

/// ⌊n/3⌋·⌊(n+1)/3⌋·⌊(n+2)/3⌋.
pub fn s_of_n(n: u64) -> u64 {
    (n / 3) * ((n + 1) / 3) * ((n + 2) / 3)
}
