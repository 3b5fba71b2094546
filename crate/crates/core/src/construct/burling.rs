//! The Burling sequence (G_n, S_n) and its star-forest decomposition.
//!
//! G_1 is a single vertex with S_1 = {V(G_1)}. Level n takes a base copy
//! of G_{n-1} plus one fresh copy G_S per member S of S_{n-1}; for every
//! member Q of the copy's family a new apex vertex v_{S,Q} is added,
//! adjacent to exactly the copy of Q. The family S_n collects S ∪ Q and
//! S ∪ {v_{S,Q}} over all such pairs.
//!
//! The decomposition mirrors the inductive construction: bags of the base
//! decomposition stay as they are, each copy's bags are widened by its S,
//! and each apex gets a leaf bag S ∪ Q ∪ {v_{S,Q}} below the node of the
//! copy covering Q. Leaf bags keep S so that S ∪ {v_{S,Q}} is contained
//! in a bag; the extra vertices are isolated there, so every bag still
//! induces a star forest. Each level's subtree hangs off the node of the
//! base decomposition covering its S, attached at the copy's root.

use super::ConstructError;
use crate::bitset::VertexSet;
use crate::family::StableSetFamily;
use crate::graph::Graph;
use crate::td::TreeDecomposition;

/// Levels above this are out of desk scale (G_5 has 39,733 vertices).
pub const MAX_LEVEL: usize = 4;

/// Recursion address of a vertex of G_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// The single vertex of G_1.
    Root,
    /// Vertex `inner` of the base copy of G_{n-1}.
    Base(usize),
    /// Vertex `inner` of the copy attached to member `s_index`.
    Copy { s_index: usize, inner: usize },
    /// The apex v_{S,Q} for member `s_index` and copy-member `q_index`.
    Apex { s_index: usize, q_index: usize },
}

#[derive(Clone, Debug)]
pub struct BurlingLevel {
    pub graph: Graph,
    pub family: StableSetFamily,
    pub provenance: Vec<Provenance>,
}

/// The star-forest decomposition with the covering node per family member.
#[derive(Clone, Debug)]
pub struct BurlingDecomposition {
    pub td: TreeDecomposition,
    /// member_node[i] is a node whose bag contains family member i.
    pub member_node: Vec<usize>,
    /// Root node (the base copy's recursive root); link target for parents.
    pub root: usize,
}

struct Level {
    graph: Graph,
    family: Vec<VertexSet>,
    provenance: Vec<Provenance>,
    bags: Vec<VertexSet>,
    tree_edges: Vec<(usize, usize)>,
    member_node: Vec<usize>,
    root: usize,
}

fn check_level(n: usize) -> Result<(), ConstructError> {
    if n < 1 || n > MAX_LEVEL {
        return Err(ConstructError::Domain(format!(
            "burling level must be in 1..={} (got {})",
            MAX_LEVEL, n
        )));
    }
    Ok(())
}

pub fn burling(n: usize) -> Result<BurlingLevel, ConstructError> {
    check_level(n)?;
    let l = build(n);
    Ok(BurlingLevel {
        graph: l.graph,
        family: StableSetFamily::new(l.family),
        provenance: l.provenance,
    })
}

pub fn burling_star_forest_decomposition(
    n: usize,
) -> Result<(BurlingLevel, BurlingDecomposition), ConstructError> {
    check_level(n)?;
    let l = build(n);
    Ok((
        BurlingLevel {
            graph: l.graph,
            family: StableSetFamily::new(l.family),
            provenance: l.provenance,
        },
        BurlingDecomposition {
            td: TreeDecomposition::new(l.bags, l.tree_edges),
            member_node: l.member_node,
            root: l.root,
        },
    ))
}

fn build(n: usize) -> Level {
    if n == 1 {
        return Level {
            graph: Graph::from_edges(vec!["r".to_string()], std::iter::empty()).unwrap(),
            family: vec![VertexSet::singleton(0)],
            provenance: vec![Provenance::Root],
            bags: vec![VertexSet::singleton(0)],
            tree_edges: Vec::new(),
            member_node: vec![0],
            root: 0,
        };
    }
    let prev = build(n - 1);
    let v_prev = prev.graph.n();
    let s_prev = prev.family.len();

    // vertex layout: base 0..v, copy i at v + i*v, apexes after all copies
    let copy_offset = |i: usize| v_prev + i * v_prev;
    let apex_base = v_prev * (1 + s_prev);
    let apex = |i: usize, j: usize| apex_base + i * s_prev + j;

    let mut labels: Vec<String> = Vec::new();
    let mut provenance: Vec<Provenance> = Vec::new();
    for v in 0..v_prev {
        labels.push(format!("b/{}", prev.graph.label(v)));
        provenance.push(Provenance::Base(v));
    }
    for i in 0..s_prev {
        for v in 0..v_prev {
            labels.push(format!("s{}/{}", i, prev.graph.label(v)));
            provenance.push(Provenance::Copy { s_index: i, inner: v });
        }
    }
    for i in 0..s_prev {
        for j in 0..s_prev {
            labels.push(format!("v{},{}", i, j));
            provenance.push(Provenance::Apex { s_index: i, q_index: j });
        }
    }

    let shift = |s: &VertexSet, off: usize| -> VertexSet { s.iter().map(|v| v + off).collect() };

    let mut edges: Vec<(usize, usize)> = prev.graph.edges().collect();
    for i in 0..s_prev {
        let off = copy_offset(i);
        edges.extend(prev.graph.edges().map(|(u, v)| (u + off, v + off)));
        for j in 0..s_prev {
            for q in prev.family[j].iter() {
                edges.push((apex(i, j), q + off));
            }
        }
    }
    let graph = Graph::from_edges(labels, edges).expect("burling construction is simple");

    // family: for each (S_i, Q_j) emit S ∪ Q then S ∪ {v_{S,Q}}
    let mut family = Vec::with_capacity(2 * s_prev * s_prev);
    for i in 0..s_prev {
        let s_base = &prev.family[i]; // base indices are unshifted
        for j in 0..s_prev {
            let q_copy = shift(&prev.family[j], copy_offset(i));
            family.push(s_base.union(&q_copy));
            let mut with_apex = s_base.clone();
            with_apex.insert(apex(i, j));
            family.push(with_apex);
        }
    }

    // decomposition: base bags unchanged; per copy, shifted bags ∪ S_i,
    // then one leaf bag per Q_j
    let mut bags: Vec<VertexSet> = prev.bags.clone();
    let mut tree_edges: Vec<(usize, usize)> = prev.tree_edges.clone();
    let mut member_node = vec![usize::MAX; family.len()];
    for i in 0..s_prev {
        let off = copy_offset(i);
        let block = bags.len();
        for bag in &prev.bags {
            bags.push(shift(bag, off).union(&prev.family[i]));
        }
        for &(a, b) in &prev.tree_edges {
            tree_edges.push((a + block, b + block));
        }
        // link the base node covering S_i to the copy's root
        tree_edges.push((prev.member_node[i], block + prev.root));
        for j in 0..s_prev {
            let leaf = bags.len();
            let mut bag = shift(&prev.family[j], off); // Q_j in copy i
            bag.insert(apex(i, j));
            bag.union_with(&prev.family[i]); // keep S so S ∪ {v_{S,Q}} is covered
            bags.push(bag);
            tree_edges.push((leaf, block + prev.member_node[j]));
            member_node[2 * (i * s_prev + j)] = block + prev.member_node[j];
            member_node[2 * (i * s_prev + j) + 1] = leaf;
        }
    }

    Level {
        graph,
        family,
        provenance,
        bags,
        tree_edges,
        member_node,
        root: prev.root,
    }
}

/// Star forest: every component has at most one vertex of degree >= 2
/// (K_1 and K_2 count as stars).
pub fn is_star_forest(g: &Graph) -> bool {
    g.components().iter().all(|comp| {
        comp.iter()
            .filter(|&v| g.neighbors(v).intersection(comp).len() >= 2)
            .count()
            <= 1
    })
}

/// Expected vertex count: v_1 = 1, v_n = v_{n-1}(1 + s_{n-1}) + s_{n-1}^2.
pub fn expected_vertices(n: usize) -> u64 {
    let mut v = 1u64;
    let mut s = 1u64;
    for _ in 1..n {
        v = v * (1 + s) + s * s;
        s = 2 * s * s;
    }
    v
}

/// Expected family size: s_1 = 1, s_n = 2 s_{n-1}^2 = 2^(2^(n-1)-1).
pub fn expected_family_size(n: usize) -> u64 {
    let mut s = 1u64;
    for _ in 1..n {
        s = 2 * s * s;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_one_is_a_point() {
        let l = burling(1).unwrap();
        assert_eq!(l.graph.n(), 1);
        assert_eq!(l.family.len(), 1);
        assert_eq!(l.family.get(0), &VertexSet::singleton(0));
    }

    #[test]
    fn level_two_shape() {
        // one unrolling: 3 vertices, 1 edge, two members of size 2
        let l = burling(2).unwrap();
        assert_eq!((l.graph.n(), l.graph.edge_count()), (3, 1));
        assert_eq!(l.family.len(), 2);
        assert!(l.family.iter().all(|m| m.len() == 2));
        assert!(l.family.all_stable(&l.graph));
        assert!(l.provenance.contains(&Provenance::Apex { s_index: 0, q_index: 0 }));
    }

    #[test]
    fn level_counts_match_recurrences() {
        for n in 1..=4 {
            let l = burling(n).unwrap();
            assert_eq!(l.graph.n() as u64, expected_vertices(n), "level {}", n);
            assert_eq!(l.family.len() as u64, expected_family_size(n), "level {}", n);
            assert!(l.family.all_stable(&l.graph), "level {}", n);
        }
        assert_eq!(expected_vertices(3), 13);
        assert_eq!(expected_vertices(4), 181);
        assert_eq!(expected_family_size(3), 8);
        assert_eq!(expected_family_size(4), 128);
        assert!(burling(0).is_err());
        assert!(burling(5).is_err());
    }

    #[test]
    fn apex_degrees_match_member_sizes() {
        let l = burling(3).unwrap();
        for (v, p) in l.provenance.iter().enumerate() {
            if let Provenance::Apex { .. } = p {
                assert_eq!(l.graph.degree(v), 2, "apex over a size-2 member of S_2");
            }
        }
    }

    #[test]
    fn decomposition_is_valid_star_forest_and_covers_family() {
        for n in 1..=3 {
            let (level, dec) = burling_star_forest_decomposition(n).unwrap();
            assert!(dec.td.validate(&level.graph).is_valid(), "level {}", n);
            for bag in dec.td.bags() {
                let sub = level.graph.induced_subgraph(bag).unwrap();
                assert!(is_star_forest(&sub), "level {} bag {:?}", n, bag);
            }
            assert_eq!(dec.member_node.len(), level.family.len());
            for (i, member) in level.family.iter().enumerate() {
                assert!(
                    member.is_subset(dec.td.bag(dec.member_node[i])),
                    "level {} member {}",
                    n,
                    i
                );
            }
        }
    }

    #[test]
    fn star_forest_predicate() {
        assert!(is_star_forest(&Graph::empty_graph(3).unwrap()));
        assert!(is_star_forest(&Graph::path(2).unwrap()));
        assert!(is_star_forest(&Graph::path(3).unwrap()));
        assert!(!is_star_forest(&Graph::path(4).unwrap()));
        assert!(!is_star_forest(&Graph::cycle(3).unwrap()));
        // star K_{1,3} plus an isolated vertex
        let g = Graph::from_edges(
            (1..=5).map(|i| format!("v{}", i)).collect(),
            vec![(0, 1), (0, 2), (0, 3)],
        )
        .unwrap();
        assert!(is_star_forest(&g));
    }
}
