//! Finite simple undirected graphs with stable vertex labels.
//!
//! Adjacency is stored as one bitset row per vertex, giving O(1) edge
//! queries and word-parallel neighborhood intersections. Graphs are
//! immutable once built; every operation returns a new value.

use crate::bitset::VertexSet;
use crate::weights::WeightFunction;
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex index {0} out of range (n = {1})")]
    IndexOutOfRange(usize, usize),
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n(), self.edge_count())
    }
}

impl Graph {
    /// Builds a graph from labels and an edge list over vertex indices.
    pub fn from_edges<I>(labels: Vec<String>, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        {
            let mut seen = std::collections::HashSet::new();
            for l in &labels {
                if !seen.insert(l) {
                    return Err(GraphError::DuplicateLabel(l.clone()));
                }
            }
        }
        let mut adj = vec![VertexSet::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::IndexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::IndexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::InvalidParameter(format!("self-loop at {}", u)));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { labels, adj })
    }

    fn numbered_labels(prefix: &str, n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("{}{}", prefix, i)).collect()
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidParameter("complete requires n >= 1".into()));
        }
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(Self::numbered_labels("v", n), edges)
    }

    pub fn empty_graph(n: usize) -> Result<Graph, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidParameter("empty requires n >= 1".into()));
        }
        Graph::from_edges(Self::numbered_labels("v", n), std::iter::empty())
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidParameter("cycle requires n >= 3".into()));
        }
        Graph::from_edges(Self::numbered_labels("v", n), (0..n).map(|u| (u, (u + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Graph, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidParameter("path requires n >= 1".into()));
        }
        Graph::from_edges(Self::numbered_labels("v", n), (1..n).map(|u| (u - 1, u)))
    }

    /// Disjoint union; labels of the i-th part (1-based) get prefix `"i:"`.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph, GraphError> {
        if parts.is_empty() {
            return Err(GraphError::InvalidParameter("union of zero graphs".into()));
        }
        let mut labels = Vec::new();
        let mut edges = Vec::new();
        let mut offset = 0;
        for (i, g) in parts.iter().enumerate() {
            labels.extend(g.labels.iter().map(|l| format!("{}:{}", i + 1, l)));
            edges.extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
            offset += g.n();
        }
        Graph::from_edges(labels, edges)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as index pairs with u < v, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Neighbors of `s` outside `s`.
    pub fn neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(s);
        out
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let full = VertexSet::full(n);
        let adj = (0..n)
            .map(|v| {
                let mut row = full.difference(&self.adj[v]);
                row.remove(v);
                row
            })
            .collect();
        Graph { labels: self.labels.clone(), adj }
    }

    fn check_subset(&self, s: &VertexSet) -> Result<(), GraphError> {
        if let Some(v) = s.iter().find(|&v| v >= self.n()) {
            return Err(GraphError::IndexOutOfRange(v, self.n()));
        }
        Ok(())
    }

    /// Induced subgraph on `s`; vertex i of the result is the i-th smallest
    /// element of `s`, labels preserved.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        self.check_subset(s)?;
        let verts = s.to_vec();
        let labels = verts.iter().map(|&v| self.labels[v].clone()).collect();
        let mut adj = vec![VertexSet::new(); verts.len()];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Ok(Graph { labels, adj })
    }

    pub fn is_stable_set(&self, s: &VertexSet) -> Result<bool, GraphError> {
        self.check_subset(s)?;
        Ok(s.iter().all(|v| self.adj[v].is_disjoint(s)))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let k = s.len();
        s.iter().all(|v| self.adj[v].intersection(s).len() == k - 1)
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertex_set())
    }

    /// Connected components of the subgraph induced by `within`.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = within.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = VertexSet::singleton(start);
            while !frontier.is_empty() {
                let mut next = VertexSet::new();
                for v in frontier.iter() {
                    next.union_with(&self.adj[v]);
                }
                next.intersect_with(within);
                next.difference_with(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            remaining.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Replaces each vertex v by a stable class of w(v) vertices (dropping
    /// vertices of weight zero), joining classes completely along original
    /// edges. The returned homomorphism projects each class back onto its
    /// origin.
    pub fn blowup(&self, w: &WeightFunction) -> Result<(Graph, crate::hom::Homomorphism), GraphError> {
        if w.len() != self.n() {
            return Err(GraphError::InvalidParameter(format!(
                "weight function covers {} vertices, graph has {}",
                w.len(),
                self.n()
            )));
        }
        let mut labels = Vec::new();
        let mut map = Vec::new();
        let mut class_start = vec![0usize; self.n()];
        for v in 0..self.n() {
            class_start[v] = labels.len();
            for i in 1..=w.get(v) {
                labels.push(format!("{}#{}", self.labels[v], i));
                map.push(v);
            }
        }
        let mut edges = Vec::new();
        for (a, b) in self.edges() {
            for i in 0..w.get(a) {
                for j in 0..w.get(b) {
                    edges.push((class_start[a] + i as usize, class_start[b] + j as usize));
                }
            }
        }
        let blown = Graph::from_edges(labels, edges)?;
        let hom = crate::hom::Homomorphism::new(blown.clone(), self.clone(), map)
            .expect("blowup projection is edge-preserving by construction");
        Ok((blown, hom))
    }

    /// Erdős–Rényi G(n, p) with edges drawn in fixed (u, v) order.
    pub fn erdos_renyi<R: rand::Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(Self::numbered_labels("v", n), edges).expect("generated edges are valid")
    }

    /// Hex digest of the canonical text form (labels then sorted edges).
    pub fn hash_hex(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(format!("n {}\n", self.n()));
        for l in &self.labels {
            hasher.update(l.as_bytes());
            hasher.update(b"\n");
        }
        for (u, v) in self.edges() {
            hasher.update(format!("e {} {}\n", u, v));
        }
        let digest = hasher.finalize();
        digest.iter().take(8).map(|b| format!("{:02x}", b)).collect()
    }
}
