//! Treewidth by dynamic programming over elimination orders (subsets of
//! eliminated vertices). Independent of the separator/PMC route; used to
//! cross-check it.

use super::{Limits, SolverError};
use crate::graph::Graph;

/// Exact treewidth via the elimination-order subset DP.
pub fn elimination_treewidth(g: &Graph, limits: &Limits) -> Result<u32, SolverError> {
    let n = g.n();
    if n > limits.elim_max_n {
        return Err(SolverError::Budget { op: "elimination_treewidth", n, max: limits.elim_max_n });
    }
    if n <= 1 {
        return Ok(0);
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, u| m | 1 << u))
        .collect();
    let size = 1usize << n;
    let mut f = vec![u8::MAX; size];
    f[0] = 0;
    for mask in 1..size as u64 {
        let mut best = u8::MAX;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let prev = mask & !(1 << v);
            let deg = fill_degree(&adj, v, prev);
            let width = f[prev as usize].max(deg);
            best = best.min(width);
        }
        f[mask as usize] = best;
    }
    Ok(f[size - 1] as u32)
}

/// Degree of `v` at elimination time, given the already-eliminated set:
/// neighbors of the through-eliminated region around v, outside it.
fn fill_degree(adj: &[u64], v: usize, eliminated: u64) -> u8 {
    let mut region = 1u64 << v;
    let mut frontier = region;
    let mut seen_nbrs = 0u64;
    while frontier != 0 {
        let mut next = 0u64;
        let mut bits = frontier;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            seen_nbrs |= adj[u];
            next |= adj[u] & eliminated;
        }
        next &= !region;
        region |= next;
        frontier = next;
    }
    (seen_nbrs & !eliminated & !(1 << v)).count_ones() as u8
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_treewidths() {
        let limits = Limits::default();
        assert_eq!(elimination_treewidth(&Graph::path(6).unwrap(), &limits).unwrap(), 1);
        assert_eq!(elimination_treewidth(&Graph::complete(5).unwrap(), &limits).unwrap(), 4);
        assert_eq!(elimination_treewidth(&Graph::cycle(7).unwrap(), &limits).unwrap(), 2);
        assert_eq!(elimination_treewidth(&Graph::complete(1).unwrap(), &limits).unwrap(), 0);
        // K_{3,3} has treewidth 3
        let k33 = Graph::from_edges(
            (1..=6).map(|i| format!("v{}", i)).collect(),
            (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(elimination_treewidth(&k33, &limits).unwrap(), 3);
    }

    #[test]
    fn guard_is_enforced() {
        let mut limits = Limits::default();
        limits.elim_max_n = 4;
        let g = Graph::cycle(5).unwrap();
        assert!(matches!(
            elimination_treewidth(&g, &limits),
            Err(SolverError::Budget { .. })
        ));
    }
}
