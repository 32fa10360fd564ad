//! 3-uniform hypergraphs on at most 24 labeled vertices.
//!
//! Edges are stored as a bitset over the `C(n,3)` vertex triples, indexed in
//! colex order (`C(k,3) + C(j,2) + i` for `i < j < k`) so that the index of a
//! triple does not depend on `n`. Vertices are 0-indexed in memory; the JSON
//! form and the `Display` impl use 1-indexed labels.

mod enumerate;
mod named;

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use enumerate::{canonical_mask, enumerate_classes, ENUMERATION_MAX_VERTICES};
pub use named::{NamedGraph, UnknownGraphName};

pub const MAX_VERTICES: usize = 24;

/// Largest vertex count for which [`ThreeGraph::canonical_form`] is offered.
pub const CANONICAL_MAX_VERTICES: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("3-graphs are limited to {MAX_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("edge {0:?} is not three distinct vertices below {1}")]
    InvalidEdge([usize; 3], usize),
    #[error("operation supports at most {limit} vertices, got {n}")]
    TooLarge { n: usize, limit: usize },
}

pub type Triple = [usize; 3];

#[inline]
pub(crate) fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[inline]
pub(crate) fn binom3(n: usize) -> usize {
    n * n.saturating_sub(1) * n.saturating_sub(2) / 6
}

/// Colex rank of a triple; the entries may come in any order.
#[inline]
pub fn triple_index(t: Triple) -> usize {
    let mut s = t;
    s.sort_unstable();
    binom3(s[2]) + binom2(s[1]) + s[0]
}

/// Inverse of [`triple_index`].
pub fn triple_at(mut idx: usize) -> Triple {
    let mut k = 2;
    while binom3(k + 1) <= idx {
        k += 1;
    }
    idx -= binom3(k);
    let mut j = 1;
    while binom2(j + 1) <= idx {
        j += 1;
    }
    idx -= binom2(j);
    [idx, j, k]
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThreeGraph {
    n: usize,
    bits: Vec<u64>,
}

impl ThreeGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "3-graphs are limited to {MAX_VERTICES} vertices");
        ThreeGraph {
            n,
            bits: vec![0; binom3(n).div_ceil(64)],
        }
    }

    /// Builds a graph from 0-indexed triples.
    pub fn from_edges(n: usize, edges: &[Triple]) -> Result<Self, HypergraphError> {
        if n > MAX_VERTICES {
            return Err(HypergraphError::TooManyVertices(n));
        }
        let mut g = ThreeGraph::empty(n);
        for &e in edges {
            let [a, b, c] = e;
            if a == b || b == c || a == c || a >= n || b >= n || c >= n {
                return Err(HypergraphError::InvalidEdge(e, n));
            }
            g.add_edge(e);
        }
        Ok(g)
    }

    /// Builds a graph from 1-indexed triples, as written in the literature.
    ///
    /// Panics on malformed input; intended for literal tables.
    pub fn from_one_indexed(n: usize, edges: &[Triple]) -> Self {
        let zero: Vec<Triple> = edges.iter().map(|e| e.map(|v| v - 1)).collect();
        ThreeGraph::from_edges(n, &zero).expect("valid literal 3-graph")
    }

    /// Builds a graph on at most 8 vertices from its colex bitmask.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= CANONICAL_MAX_VERTICES);
        let mut g = ThreeGraph::empty(n);
        if !g.bits.is_empty() {
            g.bits[0] = mask & low_bits(binom3(n));
        }
        g
    }

    /// Colex bitmask for graphs on at most 8 vertices.
    pub fn mask(&self) -> Option<u64> {
        match self.bits.len() {
            0 => Some(0),
            1 => Some(self.bits[0]),
            _ => None,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, e: Triple) {
        let i = triple_index(e);
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn remove_edge(&mut self, e: Triple) {
        let i = triple_index(e);
        self.bits[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn has_edge(&self, e: Triple) -> bool {
        let [a, b, c] = e;
        if a == b || b == c || a == c || a >= self.n || b >= self.n || c >= self.n {
            return false;
        }
        let i = triple_index(e);
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Edges as sorted triples in lexicographic order.
    pub fn edges(&self) -> Vec<Triple> {
        (0..self.n)
            .tuple_combinations()
            .map(|(a, b, c)| [a, b, c])
            .filter(|&e| self.has_edge(e))
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n)
            .filter(|&a| a != v)
            .tuple_combinations()
            .filter(|&(a, b)| self.has_edge([a, b, v]))
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for [a, b, c] in self.edges() {
            deg[a] += 1;
            deg[b] += 1;
            deg[c] += 1;
        }
        deg
    }

    /// Image of the graph under `v ↦ perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> ThreeGraph {
        assert_eq!(perm.len(), self.n);
        let mut g = ThreeGraph::empty(self.n);
        for [a, b, c] in self.edges() {
            g.add_edge([perm[a], perm[b], perm[c]]);
        }
        g
    }

    /// The same edges on a larger vertex set.
    pub fn with_vertices(&self, n: usize) -> ThreeGraph {
        assert!(n >= self.n);
        let mut g = ThreeGraph::empty(n);
        for e in self.edges() {
            g.add_edge(e);
        }
        g
    }

    /// Induced subgraph on `vertices`, relabeled `0..vertices.len()` in order.
    pub fn induced(&self, vertices: &[usize]) -> ThreeGraph {
        let mut g = ThreeGraph::empty(vertices.len());
        for (i, j, k) in (0..vertices.len()).tuple_combinations() {
            if self.has_edge([vertices[i], vertices[j], vertices[k]]) {
                g.add_edge([i, j, k]);
            }
        }
        g
    }

    /// Pairs covered by at least one edge.
    pub fn shadow_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for [a, b, c] in self.edges() {
            g.add_edge(a, b);
            g.add_edge(a, c);
            g.add_edge(b, c);
        }
        g
    }

    pub fn has_complete_shadow(&self) -> bool {
        self.shadow_graph().is_complete()
    }

    /// Pairs `ab` with `abv` an edge. The graph keeps all `n` labels; `v`
    /// itself is isolated.
    pub fn link_graph(&self, v: usize) -> Graph {
        let mut g = Graph::empty(self.n);
        for [a, b, c] in self.edges() {
            if a == v {
                g.add_edge(b, c);
            } else if b == v {
                g.add_edge(a, c);
            } else if c == v {
                g.add_edge(a, b);
            }
        }
        g
    }

    /// Lexicographically least ordering `v1, …, vn` in which every `vi`
    /// (`i ≥ 3`) lies in an edge inside `{v1, …, vi}`, if one exists.
    ///
    /// Extension is monotone (a vertex that can be appended stays appendable),
    /// so only the starting pair needs backtracking; after that the smallest
    /// appendable vertex is always taken.
    pub fn dense_ordering(&self) -> Option<Vec<usize>> {
        let n = self.n;
        if n <= 2 {
            return Some((0..n).collect());
        }
        for (v1, v2) in (0..n).tuple_combinations() {
            if let Some(order) = self.extend_greedily(vec![v1, v2]) {
                return Some(order);
            }
        }
        None
    }

    fn extend_greedily(&self, mut order: Vec<usize>) -> Option<Vec<usize>> {
        let mut placed = vec![false; self.n];
        for &v in &order {
            placed[v] = true;
        }
        while order.len() < self.n {
            let next = (0..self.n).find(|&w| {
                !placed[w]
                    && order
                        .iter()
                        .tuple_combinations()
                        .any(|(&x, &y)| self.has_edge([x, y, w]))
            })?;
            placed[next] = true;
            order.push(next);
        }
        Some(order)
    }

    pub fn is_dense(&self) -> bool {
        self.dense_ordering().is_some()
    }

    /// A vertex bijection `perm` with `self.permute(perm) == other`.
    pub fn isomorphism_to(&self, other: &ThreeGraph) -> Option<Vec<usize>> {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return None;
        }
        let d1 = self.degrees();
        let d2 = other.degrees();
        if d1.iter().copied().sorted().ne(d2.iter().copied().sorted()) {
            return None;
        }
        let order: Vec<usize> = (0..self.n).sorted_by_key(|&v| std::cmp::Reverse(d1[v])).collect();
        let mut map = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        let mut search = Search {
            pattern: self,
            host: other,
            order: &order,
            pattern_deg: &d1,
            host_deg: &d2,
            map: &mut map,
            used: &mut used,
            induced: true,
        };
        search.run(0).then_some(map)
    }

    pub fn is_isomorphic(&self, other: &ThreeGraph) -> bool {
        self.isomorphism_to(other).is_some()
    }

    /// An injection `φ: V(f) → V(self)` sending every edge of `f` to an edge
    /// of `self` (not necessarily induced).
    pub fn embedding_of(&self, f: &ThreeGraph) -> Option<Vec<usize>> {
        if f.n > self.n || f.edge_count() > self.edge_count() {
            return None;
        }
        let fd = f.degrees();
        let hd = self.degrees();
        let order = connectivity_order(f);
        let mut map = vec![usize::MAX; f.n];
        let mut used = vec![false; self.n];
        let mut search = Search {
            pattern: f,
            host: self,
            order: &order,
            pattern_deg: &fd,
            host_deg: &hd,
            map: &mut map,
            used: &mut used,
            induced: false,
        };
        search.run(0).then_some(map)
    }

    pub fn contains_subgraph(&self, f: &ThreeGraph) -> bool {
        self.embedding_of(f).is_some()
    }

    pub fn is_family_free(&self, family: &[ThreeGraph]) -> bool {
        family.iter().all(|f| !self.contains_subgraph(f))
    }

    /// No symmetric difference of two edges lies inside a third edge.
    pub fn is_cancellative(&self) -> bool {
        let masks: Vec<u32> = self
            .edges()
            .iter()
            .map(|e| e.iter().fold(0u32, |m, &v| m | 1 << v))
            .collect();
        for (i, &e) in masks.iter().enumerate() {
            for (j, &f) in masks.iter().enumerate() {
                if i == j {
                    continue;
                }
                let diff = e ^ f;
                if masks
                    .iter()
                    .enumerate()
                    .any(|(k, &g)| k != i && k != j && diff & g == diff)
                {
                    return false;
                }
            }
        }
        true
    }

    /// The isomorphic copy with minimal colex bitmask (full permutation
    /// minimization; at most 8 vertices).
    pub fn canonical_form(&self) -> Result<ThreeGraph, HypergraphError> {
        if self.n > CANONICAL_MAX_VERTICES {
            return Err(HypergraphError::TooLarge {
                n: self.n,
                limit: CANONICAL_MAX_VERTICES,
            });
        }
        Ok(ThreeGraph::from_mask(self.n, canonical_mask(self)))
    }

    pub fn edges_one_indexed(&self) -> Vec<Triple> {
        self.edges().into_iter().map(|e| e.map(|v| v + 1)).collect()
    }
}

fn low_bits(m: usize) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

/// Vertex order that keeps each new vertex attached to as many placed
/// vertices as possible, so edge constraints fire early.
fn connectivity_order(f: &ThreeGraph) -> Vec<usize> {
    let deg = f.degrees();
    let edges = f.edges();
    let mut placed = vec![false; f.n];
    let mut order = Vec::with_capacity(f.n);
    while order.len() < f.n {
        let score = |v: usize| {
            let closing = edges
                .iter()
                .filter(|e| e.contains(&v) && e.iter().all(|&u| u == v || placed[u]))
                .count();
            let touching = edges
                .iter()
                .filter(|e| e.contains(&v) && e.iter().any(|&u| u != v && placed[u]))
                .count();
            (closing, touching, deg[v], std::cmp::Reverse(v))
        };
        let next = (0..f.n).filter(|&v| !placed[v]).max_by_key(|&v| score(v)).unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

struct Search<'a> {
    pattern: &'a ThreeGraph,
    host: &'a ThreeGraph,
    order: &'a [usize],
    pattern_deg: &'a [usize],
    host_deg: &'a [usize],
    map: &'a mut [usize],
    used: &'a mut [bool],
    /// Isomorphism mode: degrees must match and non-edges map to non-edges.
    induced: bool,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for u in 0..self.host.n {
            if self.used[u] {
                continue;
            }
            let ok_deg = if self.induced {
                self.host_deg[u] == self.pattern_deg[v]
            } else {
                self.host_deg[u] >= self.pattern_deg[v]
            };
            if !ok_deg || !self.consistent(depth, v, u) {
                continue;
            }
            self.map[v] = u;
            self.used[u] = true;
            if self.run(depth + 1) {
                return true;
            }
            self.used[u] = false;
            self.map[v] = usize::MAX;
        }
        false
    }

    fn consistent(&self, depth: usize, v: usize, u: usize) -> bool {
        let placed = &self.order[..depth];
        for (&a, &b) in placed.iter().tuple_combinations() {
            let in_pattern = self.pattern.has_edge([a, b, v]);
            let in_host = self.host.has_edge([self.map[a], self.map[b], u]);
            if in_pattern && !in_host {
                return false;
            }
            if self.induced && in_host && !in_pattern {
                return false;
            }
        }
        true
    }
}

impl fmt::Debug for ThreeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ThreeGraph({self})")
    }
}

impl fmt::Display for ThreeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges = self
            .edges_one_indexed()
            .iter()
            .map(|e| e.iter().map(|v| v.to_string()).join(if self.n > 9 { "," } else { "" }))
            .join(" ");
        write!(f, "n={} {{{edges}}}", self.n)
    }
}

#[derive(Serialize, Deserialize)]
struct ThreeGraphRepr {
    n: usize,
    edges: Vec<Triple>,
}

impl Serialize for ThreeGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ThreeGraphRepr {
            n: self.n,
            edges: self.edges_one_indexed(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ThreeGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = ThreeGraphRepr::deserialize(d)?;
        let zero = repr
            .edges
            .iter()
            .map(|e| {
                if e.contains(&0) {
                    Err(serde::de::Error::custom("edge labels are 1-indexed"))
                } else {
                    Ok(e.map(|v| v - 1))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        ThreeGraph::from_edges(repr.n, &zero).map_err(serde::de::Error::custom)
    }
}

/// A simple undirected graph; used for shadows and links.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b && a < self.n && b < self.n);
        self.edges.insert((a.min(b), a.max(b)));
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// All `C(n,2)` pairs present.
    pub fn is_complete(&self) -> bool {
        self.edges.len() == binom2(self.n)
    }

    /// Pairs not present.
    pub fn missing_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .tuple_combinations()
            .filter(|&(a, b)| !self.has_edge(a, b))
            .collect()
    }
}

#[derive(Serialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
    complete: bool,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n,
            edges: self.edges.iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
            complete: self.is_complete(),
        }
        .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::turan::balanced_3partite;
    use NamedGraph::*;

    #[test]
    fn triple_index_roundtrip_is_colex() {
        assert_eq!(triple_index([0, 1, 2]), 0);
        assert_eq!(triple_index([2, 0, 1]), 0);
        assert_eq!(triple_index([0, 1, 3]), 1);
        for idx in 0..binom3(MAX_VERTICES) {
            assert_eq!(triple_index(triple_at(idx)), idx);
        }
    }

    #[test]
    fn shadow_examples() {
        assert!(K4_3minus.graph().shadow_graph().is_complete());
        let single = ThreeGraph::from_one_indexed(5, &[[1, 2, 3]]);
        let sh = single.shadow_graph();
        assert_eq!(sh.edge_count(), 3);
        assert!(!sh.is_complete());
        // Oracle: brute-force pair cover over the literal edge list.
        let c5m = C5minus.graph();
        let cover: Vec<(usize, usize)> = (0..5)
            .tuple_combinations()
            .filter(|&(a, b)| !c5m.edges().iter().any(|e| e.contains(&a) && e.contains(&b)))
            .collect();
        assert_eq!(cover, vec![(1, 4)]);
        assert_eq!(c5m.shadow_graph().missing_pairs(), vec![(1, 4)]);
    }

    #[test]
    fn link_examples() {
        let link = H4.graph().link_graph(4);
        assert_eq!(link.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 2)]);
        let j4 = J4.graph().link_graph(0);
        assert_eq!(j4.edge_count(), 6);
        assert!((1..5).tuple_combinations().all(|(a, b)| j4.has_edge(a, b)));
        let lonely = ThreeGraph::from_one_indexed(4, &[[1, 2, 3]]);
        assert_eq!(lonely.link_graph(3).edge_count(), 0);
    }

    #[test]
    fn dense_orderings() {
        let f32 = F32.graph();
        let order = f32.dense_ordering().unwrap();
        assert_eq!(order, vec![0, 3, 4, 1, 2]);
        assert_eq!(K4_3.graph().dense_ordering(), Some(vec![0, 1, 2, 3]));
        // The ordering 4,5,1,2,3 is also valid for F3,2.
        assert!(f32.permute(&[2, 3, 4, 0, 1]).dense_ordering().is_some());
        assert_eq!(ThreeGraph::from_one_indexed(5, &[[1, 2, 3]]).dense_ordering(), None);
        for g in NamedGraph::ALL {
            assert!(g.graph().is_dense(), "{}", g.name());
        }
    }

    #[test]
    fn isomorphism_examples() {
        let c5 = C5.graph();
        let rotated = c5.permute(&[1, 2, 3, 4, 0]);
        let perm = c5.isomorphism_to(&rotated).unwrap();
        assert_eq!(c5.permute(&perm), rotated);

        let h2 = H2.graph();
        let other = ThreeGraph::from_one_indexed(5, &[[1, 2, 3], [1, 2, 4], [1, 4, 5]]);
        let perm = h2.isomorphism_to(&other).unwrap();
        assert_eq!(h2.permute(&perm), other);

        assert!(F5.graph().isomorphism_to(&K4_3minus.graph()).is_none());
        // The two F3,2 edge lists in circulation are isomorphic.
        let alt = ThreeGraph::from_one_indexed(5, &[[1, 2, 3], [1, 2, 4], [1, 2, 5], [3, 4, 5]]);
        assert!(F32.graph().is_isomorphic(&alt));
    }

    #[test]
    fn containment_examples() {
        assert!(H5.graph().contains_subgraph(&H4.graph()));
        assert!(K4_3.graph().contains_subgraph(&K4_3minus.graph()));
        assert!(!C5.graph().contains_subgraph(&F32.graph()));
        assert!(!K4_3minus.graph().contains_subgraph(&F5.graph()));
    }

    #[test]
    fn containment_agrees_with_brute_force_injections() {
        // Oracle: all injections by itertools permutations.
        fn brute(h: &ThreeGraph, f: &ThreeGraph) -> bool {
            (0..h.n()).permutations(f.n()).any(|phi| {
                f.edges()
                    .iter()
                    .all(|e| h.has_edge([phi[e[0]], phi[e[1]], phi[e[2]]]))
            })
        }
        let graphs: Vec<ThreeGraph> = NamedGraph::ALL.iter().map(|g| g.graph()).collect();
        for h in &graphs {
            for f in &graphs {
                assert_eq!(h.contains_subgraph(f), brute(h, f), "{h} ⊇ {f}");
            }
        }
    }

    #[test]
    fn family_freeness_examples() {
        let fam = [F5.graph(), K4_3minus.graph()];
        assert!(balanced_3partite(6).is_family_free(&fam));
        assert!(!K4_3.graph().is_family_free(&[K4_3minus.graph()]));
        assert!(C5.graph().is_family_free(&[K4_3minus.graph(), F32.graph()]));
    }

    #[test]
    fn cancellative_examples() {
        assert!(balanced_3partite(6).is_cancellative());
        assert!(!K4_3minus.graph().is_cancellative());
        assert!(ThreeGraph::from_one_indexed(3, &[[1, 2, 3]]).is_cancellative());
    }

    #[test]
    fn cancellative_iff_f5_k4minus_free_up_to_five_vertices() {
        let fam = [F5.graph(), K4_3minus.graph()];
        for n in 3..=5 {
            for mask in 0..(1u64 << binom3(n)) {
                let g = ThreeGraph::from_mask(n, mask);
                assert_eq!(g.is_cancellative(), g.is_family_free(&fam), "{g}");
            }
        }
    }

    #[test]
    fn canonical_form_rejects_large_graphs() {
        assert!(matches!(
            ThreeGraph::empty(9).canonical_form(),
            Err(HypergraphError::TooLarge { n: 9, .. })
        ));
    }

    #[test]
    fn json_is_one_indexed() {
        let g = K4_3minus.graph();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":4,"edges":[[1,2,3],[1,2,4],[1,3,4]]}"#);
        let back: ThreeGraph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<ThreeGraph>(r#"{"n":3,"edges":[[0,1,2]]}"#).is_err());
        assert!(serde_json::from_str::<ThreeGraph>(r#"{"n":3,"edges":[[1,2,4]]}"#).is_err());
    }

    #[test]
    fn invalid_edges_rejected() {
        assert!(ThreeGraph::from_edges(3, &[[0, 0, 1]]).is_err());
        assert!(ThreeGraph::from_edges(3, &[[0, 1, 3]]).is_err());
        assert!(ThreeGraph::from_edges(25, &[]).is_err());
    }
}
