//! Non-negative integer vertex weights.

use crate::bitset::VertexSet;

/// A weight per vertex of a fixed graph, indexed by vertex position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFunction {
    weights: Vec<u64>,
}

impl WeightFunction {
    pub fn from_vec(weights: Vec<u64>) -> Self {
        WeightFunction { weights }
    }

    pub fn uniform(n: usize, w: u64) -> Self {
        WeightFunction { weights: vec![w; n] }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, v: usize) -> u64 {
        self.weights[v]
    }

    pub fn set(&mut self, v: usize, w: u64) {
        self.weights[v] = w;
    }

    pub fn total(&self) -> u64 {
        self.weights.iter().sum()
    }

    /// Weight of a vertex set: the sum over its members.
    pub fn eval(&self, s: &VertexSet) -> u64 {
        s.iter().map(|v| self.weights[v]).sum()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.weights
    }
}
