//! Exhaustive enumeration of small 3-graphs up to isomorphism.

use itertools::Itertools;

use super::{binom3, triple_at, triple_index, HypergraphError, ThreeGraph, CANONICAL_MAX_VERTICES};

/// Largest vertex count accepted by [`enumerate_classes`].
pub const ENUMERATION_MAX_VERTICES: usize = 6;

/// For each vertex permutation, the induced permutation of triple indices.
fn permutation_tables(n: usize) -> Vec<Vec<u8>> {
    let m = binom3(n);
    (0..n)
        .permutations(n)
        .map(|perm| {
            (0..m)
                .map(|idx| {
                    let [a, b, c] = triple_at(idx);
                    triple_index([perm[a], perm[b], perm[c]]) as u8
                })
                .collect()
        })
        .collect()
}

#[inline]
fn apply(table: &[u8], mut mask: u64) -> u64 {
    let mut out = 0u64;
    while mask != 0 {
        let i = mask.trailing_zeros() as usize;
        out |= 1 << table[i];
        mask &= mask - 1;
    }
    out
}

/// Minimal colex bitmask over all relabelings of `g` (at most 8 vertices).
pub fn canonical_mask(g: &ThreeGraph) -> u64 {
    assert!(g.n() <= CANONICAL_MAX_VERTICES);
    let mask = g.mask().expect("at most 8 vertices");
    if g.n() < 3 {
        return mask;
    }
    (0..g.n())
        .permutations(g.n())
        .map(|perm| {
            g.edges()
                .iter()
                .fold(0u64, |m, e| m | 1 << triple_index([perm[e[0]], perm[e[1]], perm[e[2]]]))
        })
        .min()
        .unwrap_or(mask)
}

/// One canonical representative (minimal colex bitmask) per isomorphism class
/// of 3-graphs on `n` vertices satisfying `predicate`, in increasing mask
/// order.
///
/// Every edge subset is visited; each orbit is generated once from its
/// smallest member, so `predicate` is evaluated once per class and must be
/// isomorphism invariant.
pub fn enumerate_classes(
    n: usize,
    predicate: impl Fn(&ThreeGraph) -> bool,
) -> Result<Vec<ThreeGraph>, HypergraphError> {
    if n > ENUMERATION_MAX_VERTICES {
        return Err(HypergraphError::TooLarge {
            n,
            limit: ENUMERATION_MAX_VERTICES,
        });
    }
    let m = binom3(n);
    let total = 1u64 << m;
    let tables = permutation_tables(n);
    let mut seen = vec![0u64; (total as usize).div_ceil(64)];
    let mut out = Vec::new();
    for mask in 0..total {
        let (w, b) = ((mask / 64) as usize, mask % 64);
        if seen[w] >> b & 1 == 1 {
            continue;
        }
        for t in &tables {
            let img = apply(t, mask);
            seen[(img / 64) as usize] |= 1 << (img % 64);
        }
        // With n < 3 there are no triples and a single (empty) class.
        seen[w] |= 1 << b;
        let g = ThreeGraph::from_mask(n, mask);
        if predicate(&g) {
            out.push(g);
        }
    }
    Ok(out)
}
