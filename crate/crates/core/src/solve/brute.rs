//! Independent oracle for tree-parameters: enumerate every chordal
//! supergraph (all subsets of added non-edges whose result is chordal),
//! take its maximal cliques as bags, and minimize the maximum bag measure.
//! Only used to cross-check `tree_parameter`.

use super::chordal::{is_chordal_adj, maximal_cliques_adj};
use super::{bag_measure_value, Limits, SolverError};
use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::td::BagMeasure;
use std::collections::HashMap;

pub fn brute_force_tree_parameter(
    g: &Graph,
    p: BagMeasure,
    limits: &Limits,
) -> Result<u32, SolverError> {
    let n = g.n();
    if n > limits.brute_max_n {
        return Err(SolverError::Budget { op: "brute_force_tree_parameter", n, max: limits.brute_max_n });
    }
    if n == 0 {
        return Ok(0);
    }
    let non_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    let base: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut memo: HashMap<VertexSet, u32> = HashMap::new();
    let mut best = u32::MAX;
    for mask in 0u64..1u64 << non_edges.len() {
        let mut adj = base.clone();
        for (i, &(u, v)) in non_edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        if !is_chordal_adj(n, &adj) {
            continue;
        }
        let mut value = 0u32;
        for clique in maximal_cliques_adj(n, &adj) {
            value = value.max(bag_measure_value(g, &clique, p, &mut memo));
            if value >= best {
                break;
            }
        }
        best = best.min(value);
    }
    Ok(best)
}
