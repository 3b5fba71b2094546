//! Minimal separator enumeration.
//!
//! Generation starts from close separators (neighborhoods of components of
//! G - N[v]) and saturates: for a known separator S and x in S, the
//! component neighborhoods of G - (S ∪ N(x)) are added. Every candidate is
//! confirmed against the definition (two full components) before being
//! kept, so the output is sound by construction; completeness is
//! cross-checked against the brute-force enumeration in tests.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use std::collections::HashSet;

/// Definition check: S is a minimal separator iff G - S has at least two
/// components seeing all of S.
pub fn is_minimal_separator(g: &Graph, s: &VertexSet) -> bool {
    let rest = g.vertex_set().difference(s);
    let mut full = 0;
    for c in g.components_within(&rest) {
        if g.neighborhood_of_set(&c) == *s {
            full += 1;
            if full >= 2 {
                return true;
            }
        }
    }
    false
}

/// All minimal separators, sorted lexicographically. Intended for
/// connected graphs; on a disconnected graph the empty separator is
/// excluded by construction.
pub fn minimal_separators(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let full = g.vertex_set();
    let mut found: HashSet<VertexSet> = HashSet::new();
    let mut queue: Vec<VertexSet> = Vec::new();

    let offer = |cand: VertexSet, found: &mut HashSet<VertexSet>, queue: &mut Vec<VertexSet>| {
        if !cand.is_empty() && !found.contains(&cand) && is_minimal_separator(g, &cand) {
            found.insert(cand.clone());
            queue.push(cand);
        }
    };

    for v in 0..n {
        let mut closed = g.neighbors(v).clone();
        closed.insert(v);
        for c in g.components_within(&full.difference(&closed)) {
            offer(g.neighborhood_of_set(&c), &mut found, &mut queue);
        }
    }
    while let Some(s) = queue.pop() {
        for x in s.iter() {
            let removed = s.union(g.neighbors(x));
            for c in g.components_within(&full.difference(&removed)) {
                offer(g.neighborhood_of_set(&c), &mut found, &mut queue);
            }
        }
    }

    let mut out: Vec<VertexSet> = found.into_iter().collect();
    out.sort();
    out
}

/// Brute-force enumeration by subset scan, for cross-validation.
pub fn brute_minimal_separators(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    assert!(n <= 22, "brute-force separator scan limited to n <= 22");
    let mut out = Vec::new();
    for mask in 0u32..1u32 << n {
        let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if !s.is_empty() && is_minimal_separator(g, &s) {
            out.push(s);
        }
    }
    out.sort();
    out
}
