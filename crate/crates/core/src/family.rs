//! Ordered collections of stable sets attached to a graph.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// A list of vertex sets over a fixed graph, in deterministic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableSetFamily {
    sets: Vec<VertexSet>,
}

impl StableSetFamily {
    pub fn new(sets: Vec<VertexSet>) -> Self {
        StableSetFamily { sets }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn get(&self, i: usize) -> &VertexSet {
        &self.sets[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexSet> {
        self.sets.iter()
    }

    /// True iff every member is a stable set of `g`.
    pub fn all_stable(&self, g: &Graph) -> bool {
        self.sets.iter().all(|s| g.is_stable_set(s).unwrap_or(false))
    }
}
