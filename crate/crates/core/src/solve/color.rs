//! Exact graph coloring: branch and bound between a clique lower bound and
//! a greedy (DSATUR) upper bound, one connected component at a time.

use crate::bitset::VertexSet;
use crate::graph::Graph;

const MAX_COLORS: usize = 128;

/// Exact chromatic number with a proper coloring witness (colors `0..chi`).
pub fn chromatic_number(g: &Graph) -> (u32, Vec<u32>) {
    let mut coloring = vec![0u32; g.n()];
    let mut chi = 0;
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp).expect("component in range");
        let verts = comp.to_vec();
        let (k, local) = chromatic_connected(&sub);
        for (i, &v) in verts.iter().enumerate() {
            coloring[v] = local[i];
        }
        chi = chi.max(k);
    }
    debug_assert!(is_proper(g, &coloring));
    (chi, coloring)
}

pub fn is_proper(g: &Graph, coloring: &[u32]) -> bool {
    coloring.len() == g.n() && g.edges().all(|(u, v)| coloring[u] != coloring[v])
}

fn greedy_clique(g: &Graph) -> VertexSet {
    let mut best = VertexSet::new();
    for start in 0..g.n() {
        let mut clique = VertexSet::singleton(start);
        let mut cands = g.neighbors(start).clone();
        while let Some(v) = cands
            .iter()
            .max_by_key(|&v| (g.neighbors(v).intersection(&cands).len(), std::cmp::Reverse(v)))
        {
            clique.insert(v);
            cands.intersect_with(g.neighbors(v));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// Clique lower bound: exact (via complement stable set) at small sizes,
/// greedy beyond.
fn clique_bound(g: &Graph) -> VertexSet {
    if g.n() <= 40 {
        let (_, s) = super::mis::max_stable_set(&g.complement());
        s
    } else {
        greedy_clique(g)
    }
}

fn dsatur_upper_bound(g: &Graph) -> (u32, Vec<u32>) {
    let n = g.n();
    let mut colors: Vec<Option<u32>> = vec![None; n];
    let mut used = 0u32;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v].is_none())
            .max_by_key(|&v| {
                let sat = g
                    .neighbors(v)
                    .iter()
                    .filter_map(|u| colors[u])
                    .collect::<std::collections::HashSet<_>>()
                    .len();
                (sat, g.degree(v), std::cmp::Reverse(v))
            })
            .expect("uncolored vertex exists");
        let blocked: std::collections::HashSet<u32> =
            g.neighbors(v).iter().filter_map(|u| colors[u]).collect();
        let c = (0..).find(|c| !blocked.contains(c)).expect("some color free");
        colors[v] = Some(c);
        used = used.max(c + 1);
    }
    (used, colors.into_iter().map(|c| c.expect("all colored")).collect())
}

fn chromatic_connected(g: &Graph) -> (u32, Vec<u32>) {
    let n = g.n();
    if n == 0 {
        return (0, Vec::new());
    }
    if g.edge_count() == 0 {
        return (1, vec![0; n]);
    }
    let clique = clique_bound(g);
    let lb = clique.len() as u32;
    let (ub, greedy) = dsatur_upper_bound(g);
    if lb == ub {
        return (ub, greedy);
    }
    for k in lb..ub {
        if let Some(coloring) = k_coloring(g, k, &clique) {
            return (k, coloring);
        }
    }
    (ub, greedy)
}

/// Backtracking k-colorability with the clique precolored and new colors
/// introduced in order.
fn k_coloring(g: &Graph, k: u32, clique: &VertexSet) -> Option<Vec<u32>> {
    assert!((k as usize) < MAX_COLORS, "color budget exceeds solver width");
    let n = g.n();
    let mut colors: Vec<Option<u32>> = vec![None; n];
    let mut masks: Vec<u128> = vec![0; n];
    let mut max_used = 0u32;
    for (i, v) in clique.iter().enumerate() {
        let c = i as u32;
        if c >= k {
            return None;
        }
        colors[v] = Some(c);
        max_used = max_used.max(c);
        for u in g.neighbors(v).iter() {
            masks[u] |= 1 << c;
        }
    }
    if extend(g, k, &mut colors, &mut masks, max_used) {
        Some(colors.into_iter().map(|c| c.expect("complete coloring")).collect())
    } else {
        None
    }
}

fn extend(
    g: &Graph,
    k: u32,
    colors: &mut Vec<Option<u32>>,
    masks: &mut Vec<u128>,
    max_used: u32,
) -> bool {
    let n = g.n();
    let pick = (0..n)
        .filter(|&v| colors[v].is_none())
        .max_by_key(|&v| (masks[v].count_ones(), g.degree(v), std::cmp::Reverse(v)));
    let Some(v) = pick else { return true };
    let limit = k.min(max_used + 2);
    for c in 0..limit {
        if masks[v] & (1 << c) != 0 {
            continue;
        }
        colors[v] = Some(c);
        let mut touched = Vec::new();
        for u in g.neighbors(v).iter() {
            if colors[u].is_none() && masks[u] & (1 << c) == 0 {
                masks[u] |= 1 << c;
                touched.push(u);
            }
        }
        if extend(g, k, colors, masks, max_used.max(c)) {
            return true;
        }
        colors[v] = None;
        for u in touched {
            masks[u] &= !(1 << c);
        }
    }
    false
}
