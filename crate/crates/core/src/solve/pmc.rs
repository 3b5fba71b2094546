//! Potential maximal cliques.
//!
//! A vertex set Ω is a potential maximal clique (a maximal clique of some
//! minimal triangulation) iff no component of G - Ω sees all of Ω and
//! every non-adjacent pair inside Ω is covered by the neighborhood of a
//! common component. Candidates are generated from minimal separators
//! (S ∪ {v}, and S ∪ (T ∩ C) for separators S, T and components C of
//! G - S) and filtered through that exact test, so the catalog is sound;
//! completeness is cross-checked against brute-force enumeration in tests
//! and guarded at solve time by the block-coverage tripwire in the DP.

use super::minsep;
use crate::bitset::VertexSet;
use crate::graph::Graph;
use std::collections::HashSet;

/// Exact membership test for potential maximal cliques.
pub fn is_pmc(g: &Graph, omega: &VertexSet) -> bool {
    if omega.is_empty() {
        return false;
    }
    let rest = g.vertex_set().difference(omega);
    let nbrs: Vec<VertexSet> = g
        .components_within(&rest)
        .iter()
        .map(|c| g.neighborhood_of_set(c))
        .collect();
    if nbrs.iter().any(|nb| nb == omega) {
        return false; // full component
    }
    for u in omega.iter() {
        let mut cover = g.neighbors(u).clone();
        for nb in &nbrs {
            if nb.contains(u) {
                cover.union_with(nb);
            }
        }
        cover.insert(u);
        if !omega.is_subset(&cover) {
            return false; // uncovered non-adjacent pair at u
        }
    }
    true
}

/// Enumerates all potential maximal cliques given the minimal separators
/// of `g`, sorted lexicographically.
///
/// Incremental one-vertex-at-a-time scheme over the prefix graphs
/// G_i = G[{0..i}]: a pmc of G_i either survives from G_{i-1} (with the
/// new vertex added or not), or is a minimal separator of G_i plus the
/// new vertex, or has the form S ∪ (X ∩ C) for a minimal separator S of
/// G_i, a component C of G_i - S, and X a pmc of G_{i-1}. Every candidate
/// is confirmed by the exact membership test, so the catalog is sound by
/// construction; completeness of the rule set is validated exhaustively
/// against brute-force enumeration in tests (all graphs up to n = 7) and
/// guarded at solve time by the block-coverage tripwire in the DP.
pub fn enumerate_pmcs(g: &Graph, separators: &[VertexSet]) -> Vec<VertexSet> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut pmcs: Vec<VertexSet> = vec![VertexSet::singleton(0)];
    for a in 1..n {
        let prefix: VertexSet = (0..=a).collect();
        let gi = g.induced_subgraph(&prefix).expect("prefix in range");
        let seps_i: Vec<VertexSet> =
            if a + 1 == n { separators.to_vec() } else { super::minsep::minimal_separators(&gi) };
        pmcs = extend_by_vertex(&gi, a, &pmcs, &seps_i);
    }
    pmcs
}

/// One step: pmcs of `gi` (on vertices 0..=a) from the pmcs of gi - a.
fn extend_by_vertex(
    gi: &Graph,
    a: usize,
    prev_pmcs: &[VertexSet],
    seps: &[VertexSet],
) -> Vec<VertexSet> {
    let full = gi.vertex_set();
    let mut cands: HashSet<VertexSet> = HashSet::new();
    cands.insert(VertexSet::singleton(a));
    for omega in prev_pmcs {
        cands.insert(omega.clone());
        let mut plus = omega.clone();
        plus.insert(a);
        cands.insert(plus);
    }
    for s in seps {
        for v in full.difference(s).iter() {
            let mut sv = s.clone();
            sv.insert(v);
            cands.insert(sv);
        }
        let comps = gi.components_within(&full.difference(s));
        for x in prev_pmcs {
            for c in &comps {
                let inter = x.intersection(c);
                if !inter.is_empty() {
                    cands.insert(s.union(&inter));
                }
            }
        }
    }
    let mut out: Vec<VertexSet> = cands.into_iter().filter(|c| is_pmc(gi, c)).collect();
    out.sort();
    out
}

/// Brute-force enumeration by subset scan, for cross-validation.
pub fn brute_pmcs(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    assert!(n <= 22, "brute-force pmc scan limited to n <= 22");
    let mut out = Vec::new();
    for mask in 1u32..1u32 << n {
        let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if is_pmc(g, &s) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Minimal separators and potential maximal cliques of a connected graph.
#[derive(Clone, Debug)]
pub struct PmcCatalog {
    pub separators: Vec<VertexSet>,
    pub pmcs: Vec<VertexSet>,
}

impl PmcCatalog {
    pub fn assemble(g: &Graph) -> PmcCatalog {
        let separators = minsep::minimal_separators(g);
        let pmcs = enumerate_pmcs(g, &separators);
        PmcCatalog { separators, pmcs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_single_pmc_is_everything() {
        let k4 = Graph::complete(4).unwrap();
        let catalog = PmcCatalog::assemble(&k4);
        assert!(catalog.separators.is_empty());
        assert_eq!(catalog.pmcs, vec![k4.vertex_set()]);
    }

    #[test]
    fn c4_has_the_four_triangulation_cliques() {
        let c4 = Graph::cycle(4).unwrap();
        let catalog = PmcCatalog::assemble(&c4);
        // two triangulations, two triangles each
        assert_eq!(catalog.pmcs.len(), 4);
        assert!(catalog.pmcs.iter().all(|p| p.len() == 3));
        assert_eq!(catalog.pmcs, brute_pmcs(&c4));
    }

    #[test]
    fn chordal_pmcs_are_the_maximal_cliques() {
        // 3-sun: triangle 0,1,2 plus a simplicial vertex on each edge
        let g = Graph::from_edges(
            (1..=6).map(|i| format!("v{}", i)).collect(),
            vec![(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)],
        )
        .unwrap();
        let catalog = PmcCatalog::assemble(&g);
        let adj: Vec<VertexSet> = (0..6).map(|v| g.neighbors(v).clone()).collect();
        let cliques = super::super::chordal::maximal_cliques_adj(6, &adj);
        assert_eq!(catalog.pmcs, cliques);
        assert_eq!(catalog.pmcs, brute_pmcs(&g));
    }

    #[test]
    fn enumeration_matches_brute_force_exhaustively_n5() {
        // all labeled graphs on 5 vertices
        for mask in 0u32..1 << 10 {
            let edges: Vec<(usize, usize)> = (0..5)
                .flat_map(|u| ((u + 1)..5).map(move |v| (u, v)))
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| e)
                .collect();
            let g =
                Graph::from_edges((1..=5).map(|i| format!("v{}", i)).collect(), edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            let catalog = PmcCatalog::assemble(&g);
            assert_eq!(catalog.pmcs, brute_pmcs(&g), "graph mask {}", mask);
            assert_eq!(
                catalog.separators,
                minsep::brute_minimal_separators(&g),
                "graph mask {}",
                mask
            );
        }
    }

    #[test]
    fn enumeration_matches_brute_force_on_random_graphs() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let mut tested = 0;
        while tested < 100 {
            let n = 4 + tested % 6; // up to 9
            let p = [0.2, 0.35, 0.5, 0.8][tested % 4];
            let g = Graph::erdos_renyi(n, p, &mut rng);
            if !g.is_connected() {
                continue;
            }
            let catalog = PmcCatalog::assemble(&g);
            assert_eq!(catalog.pmcs, brute_pmcs(&g), "graph {:?}", g);
            tested += 1;
        }
    }

    /// Minimal triangulations by definition: chordal supergraphs where
    /// removing any fill edge breaks chordality. Their maximal cliques
    /// are the potential maximal cliques; the local test must agree.
    fn pmcs_by_definition(g: &Graph) -> Vec<VertexSet> {
        use super::super::chordal::{is_chordal_adj, maximal_cliques_adj};
        let n = g.n();
        let non_edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        let base: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
        let mut out: HashSet<VertexSet> = HashSet::new();
        for mask in 0u64..1 << non_edges.len() {
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
            let minimal = (0..non_edges.len()).filter(|i| mask >> i & 1 == 1).all(|i| {
                let (u, v) = non_edges[i];
                let mut reduced = adj.clone();
                reduced[u].remove(v);
                reduced[v].remove(u);
                !is_chordal_adj(n, &reduced)
            });
            if minimal {
                out.extend(maximal_cliques_adj(n, &adj));
            }
        }
        let mut out: Vec<VertexSet> = out.into_iter().collect();
        out.sort();
        out
    }

    #[test]
    fn local_test_matches_triangulation_definition() {
        // exhaustively on all connected 4-vertex graphs, then random 5-6
        for mask in 0u32..1 << 6 {
            let edges: Vec<(usize, usize)> = (0..4)
                .flat_map(|u| ((u + 1)..4).map(move |v| (u, v)))
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| e)
                .collect();
            let g =
                Graph::from_edges((1..=4).map(|i| format!("v{}", i)).collect(), edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            assert_eq!(brute_pmcs(&g), pmcs_by_definition(&g), "mask {}", mask);
        }
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let mut tested = 0;
        while tested < 30 {
            let n = 5 + tested % 2;
            let g = Graph::erdos_renyi(n, [0.3, 0.5, 0.7][tested % 3], &mut rng);
            if !g.is_connected() {
                continue;
            }
            assert_eq!(brute_pmcs(&g), pmcs_by_definition(&g), "graph {:?}", g);
            tested += 1;
        }
    }
}
