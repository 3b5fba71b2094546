//! 1-completions and their explicit tree-decompositions.
//!
//! The 1-completion C(H) adds, for each non-adjacent pair {u, v} of H, one
//! new vertex of degree 2 adjacent to exactly u and v. Three
//! decompositions of C(H) are built here: the star decomposition (central
//! bag V(H), one leaf per pair), the lifted decomposition extending a
//! given decomposition of H without raising its chi measure past 2, and
//! the crown decomposition of C(K̄_n) with alpha measure n-1.

use super::ConstructError;
use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::td::TreeDecomposition;

/// C(H) together with the pair -> new-vertex map, pairs in ascending
/// (u, v) order with u < v.
#[derive(Clone, Debug)]
pub struct CompletionResult {
    pub graph: Graph,
    pub added: Vec<((usize, usize), usize)>,
}

impl CompletionResult {
    /// The completion vertex for a non-adjacent pair, if any.
    pub fn added_vertex(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.added.iter().find(|(p, _)| *p == key).map(|&(_, a)| a)
    }
}

pub fn one_completion(h: &Graph) -> CompletionResult {
    let n = h.n();
    let mut labels: Vec<String> = h.labels().to_vec();
    let mut taken: std::collections::HashSet<String> = labels.iter().cloned().collect();
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    let mut added = Vec::new();
    let mut next = n;
    for u in 0..n {
        for v in u + 1..n {
            if !h.has_edge(u, v) {
                // iterated completions meet the same non-adjacent pair
                // again; prime the label until fresh
                let mut label = format!("a({},{})", h.label(u), h.label(v));
                while taken.contains(&label) {
                    label.push('\'');
                }
                taken.insert(label.clone());
                labels.push(label);
                edges.push((u, next));
                edges.push((v, next));
                added.push(((u, v), next));
                next += 1;
            }
        }
    }
    let graph = Graph::from_edges(labels, edges).expect("completion construction is simple");
    CompletionResult { graph, added }
}

/// Star decomposition of C(H): central bag V(H), one leaf {u, v, a_uv}
/// per non-adjacent pair. Width |V(H)|-1, alpha measure max(alpha(H), 2)
/// when pairs exist.
pub fn completion_star_decomposition(h: &Graph) -> Result<(CompletionResult, TreeDecomposition), ConstructError> {
    if h.n() < 3 {
        return Err(ConstructError::Domain(format!(
            "star decomposition needs |V(H)| >= 3, got {}",
            h.n()
        )));
    }
    let completion = one_completion(h);
    let mut bags = vec![VertexSet::full(h.n())];
    let mut edges = Vec::new();
    for &((u, v), a) in &completion.added {
        let node = bags.len();
        bags.push([u, v, a].into_iter().collect());
        edges.push((0, node));
    }
    Ok((completion, TreeDecomposition::new(bags, edges)))
}

/// Lifts a decomposition of H to one of C(H): a pair whose endpoints
/// share a bag gets a new leaf {u, v, a_uv} at the first such node in id
/// order; otherwise a_uv joins every original bag (where it then has at
/// most one neighbor).
pub fn completion_lift_decomposition(
    h: &Graph,
    td_h: &TreeDecomposition,
) -> Result<(CompletionResult, TreeDecomposition), ConstructError> {
    if h.edge_count() == 0 {
        return Err(ConstructError::Domain("lift needs E(H) non-empty".into()));
    }
    let report = td_h.validate(h);
    if !report.is_valid() {
        return Err(ConstructError::Precondition(format!(
            "input decomposition invalid: {}",
            report.violations[0]
        )));
    }
    let completion = one_completion(h);
    let original_nodes = td_h.node_count();
    let mut bags: Vec<VertexSet> = td_h.bags().to_vec();
    let mut edges: Vec<(usize, usize)> = td_h.edges().to_vec();
    for &((u, v), a) in &completion.added {
        let host = (0..original_nodes).find(|&t| bags[t].contains(u) && bags[t].contains(v));
        match host {
            Some(t) => {
                let node = bags.len();
                bags.push([u, v, a].into_iter().collect());
                edges.push((t, node));
            }
            None => {
                for bag in bags.iter_mut().take(original_nodes) {
                    bag.insert(a);
                }
            }
        }
    }
    Ok((completion, TreeDecomposition::new(bags, edges)))
}

/// Crown decomposition of C(K̄_n): a star tree whose center bag pairs the
/// originals a_1..a_{n-1} with the common neighbors of a_0, one leaf for
/// {a_0} ∪ N(a_0), and one 3-vertex leaf per remaining pair.
pub fn crown_decomposition(n: usize) -> Result<(CompletionResult, TreeDecomposition), ConstructError> {
    if n < 3 {
        return Err(ConstructError::Domain(format!(
            "crown decomposition needs n >= 3, got {} (n = 2 is the trivial P_3 case)",
            n
        )));
    }
    let kbar = Graph::empty_graph(n).expect("n >= 3");
    let completion = one_completion(&kbar);
    let b = |i: usize, j: usize| {
        completion
            .added_vertex(i, j)
            .expect("all pairs are non-adjacent in the empty graph")
    };
    // center: (A - {a_0}) ∪ N(a_0)
    let mut center: VertexSet = (1..n).collect();
    for j in 1..n {
        center.insert(b(0, j));
    }
    let mut bags = vec![center];
    let mut edges = Vec::new();
    // leaf s_0: {a_0} ∪ N(a_0)
    let mut s0: VertexSet = VertexSet::singleton(0);
    for j in 1..n {
        s0.insert(b(0, j));
    }
    bags.push(s0);
    edges.push((0, 1));
    // leaves s_{i,j}: {a_i, a_j, b_ij} for 1 <= i < j <= n-1
    for i in 1..n {
        for j in i + 1..n {
            let node = bags.len();
            bags.push([i, j, b(i, j)].into_iter().collect());
            edges.push((0, node));
        }
    }
    Ok((completion, TreeDecomposition::new(bags, edges)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve;
    use crate::td::BagMeasure;

    #[test]
    fn completion_of_complete_graph_adds_nothing() {
        let k4 = Graph::complete(4).unwrap();
        let c = one_completion(&k4);
        assert_eq!(c.graph, k4);
        assert!(c.added.is_empty());
    }

    #[test]
    fn completion_of_empty_triple_is_hexagon() {
        // hand construction: 3 + 3 vertices forming a 6-cycle
        let c = one_completion(&Graph::empty_graph(3).unwrap());
        assert_eq!((c.graph.n(), c.graph.edge_count()), (6, 6));
        assert!((0..6).all(|v| c.graph.degree(v) == 2));
        assert!(c.graph.is_connected());
    }

    #[test]
    fn completion_of_pentagon_counts() {
        // 5 + |E(complement)| = 10 vertices; 5 + 2*5 = 15 edges
        let c = one_completion(&Graph::cycle(5).unwrap());
        assert_eq!((c.graph.n(), c.graph.edge_count()), (10, 15));
        for (_, a) in c.added {
            assert_eq!(c.graph.degree(a), 2);
        }
    }

    #[test]
    fn added_vertices_have_degree_two_and_right_count() {
        let h = Graph::path(4).unwrap();
        let c = one_completion(&h);
        assert_eq!(c.added.len(), h.complement().edge_count());
        for &((u, v), a) in &c.added {
            assert_eq!(c.graph.degree(a), 2);
            assert!(c.graph.has_edge(a, u) && c.graph.has_edge(a, v));
            assert!(!h.has_edge(u, v));
        }
    }

    #[test]
    fn star_decomposition_of_pentagon_completion() {
        let h = Graph::cycle(5).unwrap();
        let (c, td) = completion_star_decomposition(&h).unwrap();
        assert!(td.validate(&c.graph).is_valid());
        // width 4, alpha measure 2
        assert_eq!(td.max_bag_size(), 5);
        let (alpha, _) = td.bag_parameter(&c.graph, BagMeasure::Alpha).unwrap();
        assert_eq!(alpha, 2);
    }

    #[test]
    fn star_decomposition_of_complete_graph_is_single_bag() {
        let (c, td) = completion_star_decomposition(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(td.node_count(), 1);
        assert_eq!(td.bag(0), &c.graph.vertex_set());
    }

    #[test]
    fn star_decomposition_of_empty_triple_has_alpha_three() {
        let (c, td) = completion_star_decomposition(&Graph::empty_graph(3).unwrap()).unwrap();
        assert!(td.validate(&c.graph).is_valid());
        assert_eq!(td.node_count(), 4);
        let (alpha, _) = td.bag_parameter(&c.graph, BagMeasure::Alpha).unwrap();
        assert_eq!(alpha, 3);
        assert!(completion_star_decomposition(&Graph::complete(2).unwrap()).is_err());
    }

    #[test]
    fn lift_of_triangle_changes_nothing() {
        let k3 = Graph::complete(3).unwrap();
        let td = TreeDecomposition::single_bag(k3.vertex_set());
        let (c, lifted) = completion_lift_decomposition(&k3, &td).unwrap();
        assert_eq!(lifted.node_count(), 1);
        assert!(lifted.validate(&c.graph).is_valid());
    }

    #[test]
    fn lift_path_case_two_fires() {
        // H = P_3 with bags {0,1},{1,2}: the pair {0,2} shares no bag,
        // so a_{02} joins both bags; chi measure 2
        let p3 = Graph::path(3).unwrap();
        let td = TreeDecomposition::new(
            vec![[0, 1].into_iter().collect(), [1, 2].into_iter().collect()],
            vec![(0, 1)],
        );
        let (c, lifted) = completion_lift_decomposition(&p3, &td).unwrap();
        assert!(lifted.validate(&c.graph).is_valid());
        assert_eq!(lifted.node_count(), 2);
        let a = c.added_vertex(0, 2).unwrap();
        assert!(lifted.bag(0).contains(a) && lifted.bag(1).contains(a));
        let (chi, _) = lifted.bag_parameter(&c.graph, BagMeasure::Chi).unwrap();
        assert_eq!(chi, 2);
    }

    #[test]
    fn lift_pentagon_both_cases() {
        let c5 = Graph::cycle(5).unwrap();
        let td = TreeDecomposition::new(
            vec![
                [0, 1, 2].into_iter().collect(),
                [0, 2, 3].into_iter().collect(),
                [0, 3, 4].into_iter().collect(),
            ],
            vec![(0, 1), (1, 2)],
        );
        let (c, lifted) = completion_lift_decomposition(&c5, &td).unwrap();
        assert!(lifted.validate(&c.graph).is_valid());
        // pair {0,2} shares bag 0 (case 1); pair {1,4} shares none (case 2)
        assert!(lifted.node_count() > 3);
        let a14 = c.added_vertex(1, 4).unwrap();
        assert!((0..3).all(|t| lifted.bag(t).contains(a14)));
        let (chi, _) = lifted.bag_parameter(&c.graph, BagMeasure::Chi).unwrap();
        let (chi_h, _) = td.bag_parameter(&c5, BagMeasure::Chi).unwrap();
        assert_eq!(chi, chi_h.max(2));
        // every bag of the width-2 pentagon decomposition induces a path
        assert_eq!(chi, 2);
    }

    #[test]
    fn lift_rejects_empty_edge_set_and_invalid_input() {
        let kbar = Graph::empty_graph(3).unwrap();
        let td = TreeDecomposition::single_bag(kbar.vertex_set());
        assert!(matches!(
            completion_lift_decomposition(&kbar, &td),
            Err(ConstructError::Domain(_))
        ));
        let p2 = Graph::path(2).unwrap();
        let bad = TreeDecomposition::single_bag(VertexSet::singleton(0));
        assert!(matches!(
            completion_lift_decomposition(&p2, &bad),
            Err(ConstructError::Precondition(_))
        ));
    }

    #[test]
    fn crown_cases() {
        // n = 3: hexagon decomposition with alpha measure 2
        let (c, td) = crown_decomposition(3).unwrap();
        assert!(td.validate(&c.graph).is_valid());
        let (alpha, _) = td.bag_parameter(&c.graph, BagMeasure::Alpha).unwrap();
        assert_eq!(alpha, 2);

        // n = 4: C(3,2)+1 = 4 leaves, center bag size 6, alpha measure 3
        let (c, td) = crown_decomposition(4).unwrap();
        assert!(td.validate(&c.graph).is_valid());
        assert_eq!(td.node_count(), 5);
        assert_eq!(td.bag(0).len(), 6);
        let (alpha, _) = td.bag_parameter(&c.graph, BagMeasure::Alpha).unwrap();
        assert_eq!(alpha, 3);

        // n = 5: alpha measure 4
        let (c, td) = crown_decomposition(5).unwrap();
        assert!(td.validate(&c.graph).is_valid());
        let (alpha, _) = td.bag_parameter(&c.graph, BagMeasure::Alpha).unwrap();
        assert_eq!(alpha, 4);

        assert!(crown_decomposition(2).is_err());
    }

    #[test]
    fn crown_achieves_exact_tree_alpha_small() {
        // solver agreement at n = 3: tree-alpha(C(K̄_3)) = 2
        let (c, _) = crown_decomposition(3).unwrap();
        let r = solve::tree_parameter(&c.graph, BagMeasure::Alpha, &solve::Limits::default()).unwrap();
        assert_eq!(r.value, 2);
    }
}
