//! Tree-decompositions: the data type, axiom validation, bag-parameter
//! evaluation, nested-bag simplification, and homomorphism pullback.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::hom::Homomorphism;
use thiserror::Error;

/// The parameter applied to each bag-induced subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BagMeasure {
    /// Bag size; subtract one for width.
    Size,
    /// Independence number of the bag-induced subgraph.
    Alpha,
    /// Chromatic number of the bag-induced subgraph.
    Chi,
    /// Treewidth of the bag-induced subgraph.
    Tw,
}

impl BagMeasure {
    pub fn name(self) -> &'static str {
        match self {
            BagMeasure::Size => "size",
            BagMeasure::Alpha => "alpha",
            BagMeasure::Chi => "chi",
            BagMeasure::Tw => "tw",
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TdError {
    #[error("decomposition is not valid: {0}")]
    Invalid(String),
    #[error("homomorphism check failed: {0}")]
    BadHomomorphism(String),
}

/// One axiom violation with a concrete witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// The node/edge structure is not a non-empty tree.
    NotATree { detail: String },
    /// A bag mentions a vertex outside the host graph.
    BagOutOfRange { node: usize, vertex: usize },
    /// A host vertex appears in no bag.
    VertexUncovered { vertex: usize },
    /// A host edge is contained in no bag.
    EdgeUncovered { u: usize, v: usize },
    /// The trace of a vertex induces a disconnected subtree; the two nodes
    /// lie in different pieces.
    DisconnectedTrace { vertex: usize, node_a: usize, node_b: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NotATree { detail } => write!(f, "not a tree: {}", detail),
            Violation::BagOutOfRange { node, vertex } => {
                write!(f, "bag {} mentions vertex {} outside the host", node, vertex)
            }
            Violation::VertexUncovered { vertex } => write!(f, "vertex {} in no bag", vertex),
            Violation::EdgeUncovered { u, v } => write!(f, "edge ({}, {}) in no bag", u, v),
            Violation::DisconnectedTrace { vertex, node_a, node_b } => write!(
                f,
                "trace of vertex {} is disconnected (nodes {} and {})",
                vertex, node_a, node_b
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A tree of bags over a host graph. Nodes are dense indices `0..k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Builds a decomposition; tree edges are normalized to `(min, max)`
    /// and sorted. Structural tree-ness is checked by [`Self::validate`].
    pub fn new(bags: Vec<VertexSet>, edges: Vec<(usize, usize)>) -> Self {
        let mut edges: Vec<(usize, usize)> =
            edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        edges.sort_unstable();
        edges.dedup();
        TreeDecomposition { bags, edges }
    }

    pub fn single_bag(bag: VertexSet) -> Self {
        TreeDecomposition { bags: vec![bag], edges: Vec::new() }
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    pub fn bag(&self, node: usize) -> &VertexSet {
        &self.bags[node]
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0)
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            if a < self.bags.len() && b < self.bags.len() {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        adj
    }

    fn tree_violation(&self) -> Option<Violation> {
        let k = self.bags.len();
        if k == 0 {
            return Some(Violation::NotATree { detail: "no nodes".into() });
        }
        for &(a, b) in &self.edges {
            if a == b {
                return Some(Violation::NotATree { detail: format!("self-loop at node {}", a) });
            }
            if a >= k || b >= k {
                return Some(Violation::NotATree {
                    detail: format!("edge ({}, {}) references a missing node", a, b),
                });
            }
        }
        if self.edges.len() != k - 1 {
            return Some(Violation::NotATree {
                detail: format!("{} nodes need {} edges, found {}", k, k - 1, self.edges.len()),
            });
        }
        // k-1 edges and connected => acyclic
        let adj = self.adjacency();
        let mut seen = vec![false; k];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(t) = stack.pop() {
            for &s in &adj[t] {
                if !seen[s] {
                    seen[s] = true;
                    count += 1;
                    stack.push(s);
                }
            }
        }
        if count != k {
            return Some(Violation::NotATree { detail: format!("only {} of {} nodes reachable", count, k) });
        }
        None
    }

    /// Checks the tree-decomposition axioms against `g`, reporting every
    /// violation with a witness. Violations are data, not errors.
    pub fn validate(&self, g: &Graph) -> ValidationReport {
        let mut report = ValidationReport::default();
        if let Some(v) = self.tree_violation() {
            report.violations.push(v);
            return report;
        }
        for (node, bag) in self.bags.iter().enumerate() {
            if let Some(vertex) = bag.iter().find(|&v| v >= g.n()) {
                report.violations.push(Violation::BagOutOfRange { node, vertex });
            }
        }
        if !report.violations.is_empty() {
            return report;
        }

        let mut covered = VertexSet::new();
        for bag in &self.bags {
            covered.union_with(bag);
        }
        for vertex in 0..g.n() {
            if !covered.contains(vertex) {
                report.violations.push(Violation::VertexUncovered { vertex });
            }
        }

        for (u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
                report.violations.push(Violation::EdgeUncovered { u, v });
            }
        }

        let adj = self.adjacency();
        for vertex in 0..g.n() {
            let trace: Vec<usize> =
                (0..self.bags.len()).filter(|&t| self.bags[t].contains(vertex)).collect();
            if trace.is_empty() {
                continue; // already reported as uncovered
            }
            let inside: std::collections::HashSet<usize> = trace.iter().copied().collect();
            let mut seen = std::collections::HashSet::new();
            let mut stack = vec![trace[0]];
            seen.insert(trace[0]);
            while let Some(t) = stack.pop() {
                for &s in &adj[t] {
                    if inside.contains(&s) && seen.insert(s) {
                        stack.push(s);
                    }
                }
            }
            if let Some(&stranded) = trace.iter().find(|t| !seen.contains(t)) {
                report.violations.push(Violation::DisconnectedTrace {
                    vertex,
                    node_a: trace[0],
                    node_b: stranded,
                });
            }
        }
        report
    }

    /// Maximum of the measure over bag-induced subgraphs, with the argmax
    /// node (smallest node id on ties). For `Size` this returns the maximum
    /// bag size; callers subtract one for width.
    pub fn bag_parameter(&self, g: &Graph, p: BagMeasure) -> Result<(u32, usize), TdError> {
        let report = self.validate(g);
        if !report.is_valid() {
            return Err(TdError::Invalid(report.violations[0].to_string()));
        }
        let mut memo = std::collections::HashMap::new();
        let mut best: Option<(u32, usize)> = None;
        for (node, bag) in self.bags.iter().enumerate() {
            let value = crate::solve::bag_measure_value(g, bag, p, &mut memo);
            if best.map_or(true, |(bv, _)| value > bv) {
                best = Some((value, node));
            }
        }
        Ok(best.expect("validated decompositions have at least one node"))
    }

    /// Contracts tree edges whose bag is contained in the neighboring bag
    /// until no bag is contained in an adjacent one.
    pub fn simplify(&self) -> TreeDecomposition {
        let mut bags = self.bags.clone();
        let mut edges = self.edges.clone();
        loop {
            let mut contracted = None;
            for (i, &(a, b)) in edges.iter().enumerate() {
                if bags[a].is_subset(&bags[b]) {
                    contracted = Some((i, a, b));
                    break;
                }
                if bags[b].is_subset(&bags[a]) {
                    contracted = Some((i, b, a));
                    break;
                }
            }
            let Some((edge_idx, gone, kept)) = contracted else { break };
            edges.remove(edge_idx);
            for e in edges.iter_mut() {
                if e.0 == gone {
                    e.0 = kept;
                }
                if e.1 == gone {
                    e.1 = kept;
                }
                *e = (e.0.min(e.1), e.0.max(e.1));
            }
            bags.remove(gone);
            for e in edges.iter_mut() {
                if e.0 > gone {
                    e.0 -= 1;
                }
                if e.1 > gone {
                    e.1 -= 1;
                }
            }
            edges.sort_unstable();
            edges.dedup();
        }
        TreeDecomposition { bags, edges }
    }

    /// Pulls the decomposition back along a homomorphism into its target:
    /// same tree, bag at `t` replaced by the preimage of the bag at `t`.
    /// The result is validated against the homomorphism source.
    pub fn pullback(&self, hom: &Homomorphism) -> Result<TreeDecomposition, TdError> {
        hom.verify().map_err(|e| TdError::BadHomomorphism(e.to_string()))?;
        let report = self.validate(hom.target());
        if !report.is_valid() {
            return Err(TdError::Invalid(format!(
                "input decomposition: {}",
                report.violations[0]
            )));
        }
        let bags = self.bags.iter().map(|b| hom.preimage(b)).collect();
        let pulled = TreeDecomposition { bags, edges: self.edges.clone() };
        let report = pulled.validate(hom.source());
        if !report.is_valid() {
            return Err(TdError::Invalid(format!(
                "pullback result: {}",
                report.violations[0]
            )));
        }
        Ok(pulled)
    }
}
