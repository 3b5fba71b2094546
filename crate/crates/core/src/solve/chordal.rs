//! Chordality testing and maximal-clique enumeration over raw adjacency
//! rows, so the brute-force oracles can work on filled graphs without
//! materializing `Graph` values per edge subset.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Maximum cardinality search order (first-picked first).
pub fn mcs_order(n: usize, adj: &[VertexSet]) -> Vec<usize> {
    let mut weight = vec![0usize; n];
    let mut picked = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !picked[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unpicked vertex exists");
        picked[v] = true;
        order.push(v);
        for u in adj[v].iter() {
            if !picked[u] {
                weight[u] += 1;
            }
        }
    }
    order
}

/// Checks one elimination order: every vertex must be simplicial among the
/// vertices eliminated after it.
fn is_peo(n: usize, adj: &[VertexSet], elimination: &[usize]) -> bool {
    let mut pos = vec![0usize; n];
    for (i, &v) in elimination.iter().enumerate() {
        pos[v] = i;
    }
    for &v in elimination {
        let later: Vec<usize> = adj[v].iter().filter(|&u| pos[u] > pos[v]).collect();
        if let Some(&parent) = later.iter().min_by_key(|&&u| pos[u]) {
            for &u in &later {
                if u != parent && !adj[parent].contains(u) {
                    return false;
                }
            }
        }
    }
    true
}

/// Chordality via MCS: the reverse of an MCS order is a perfect
/// elimination order exactly on chordal graphs.
pub fn is_chordal_adj(n: usize, adj: &[VertexSet]) -> bool {
    let mut order = mcs_order(n, adj);
    order.reverse();
    is_peo(n, adj, &order)
}

pub fn is_chordal(g: &Graph) -> bool {
    let adj: Vec<VertexSet> = (0..g.n()).map(|v| g.neighbors(v).clone()).collect();
    is_chordal_adj(g.n(), &adj)
}

/// All maximal cliques (Bron–Kerbosch with pivoting), sorted for
/// deterministic output.
pub fn maximal_cliques_adj(n: usize, adj: &[VertexSet]) -> Vec<VertexSet> {
    let mut out = Vec::new();
    bron_kerbosch(adj, VertexSet::new(), VertexSet::full(n), VertexSet::new(), &mut out);
    out.sort();
    out
}

fn bron_kerbosch(
    adj: &[VertexSet],
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| (adj[u].intersection(&p).len(), std::cmp::Reverse(u)))
        .expect("p or x non-empty");
    let branch: Vec<usize> = p.difference(&adj[pivot]).to_vec();
    for v in branch {
        let mut r2 = r.clone();
        r2.insert(v);
        bron_kerbosch(adj, r2, p.intersection(&adj[v]), x.intersection(&adj[v]), out);
        p.remove(v);
        x.insert(v);
    }
}
