//! Graph homomorphisms: edge-preserving vertex maps.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomError {
    #[error("map covers {0} vertices, source has {1}")]
    NotTotal(usize, usize),
    #[error("image {0} out of range for target with {1} vertices")]
    ImageOutOfRange(usize, usize),
    #[error("edge ({0}, {1}) maps to non-edge ({2}, {3})")]
    EdgeNotPreserved(usize, usize, usize, usize),
}

/// A total vertex map from `source` to `target` sending edges to edges.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    source: Graph,
    target: Graph,
    map: Vec<usize>,
}

impl Homomorphism {
    /// Builds and checks the homomorphism by exhaustive edge scan.
    pub fn new(source: Graph, target: Graph, map: Vec<usize>) -> Result<Self, HomError> {
        let h = Homomorphism { source, target, map };
        h.verify()?;
        Ok(h)
    }

    pub fn verify(&self) -> Result<(), HomError> {
        if self.map.len() != self.source.n() {
            return Err(HomError::NotTotal(self.map.len(), self.source.n()));
        }
        if let Some(&img) = self.map.iter().find(|&&img| img >= self.target.n()) {
            return Err(HomError::ImageOutOfRange(img, self.target.n()));
        }
        for (u, v) in self.source.edges() {
            let (fu, fv) = (self.map[u], self.map[v]);
            if fu == fv || !self.target.has_edge(fu, fv) {
                return Err(HomError::EdgeNotPreserved(u, v, fu, fv));
            }
        }
        Ok(())
    }

    pub fn identity(g: &Graph) -> Self {
        Homomorphism {
            source: g.clone(),
            target: g.clone(),
            map: (0..g.n()).collect(),
        }
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Preimage of a target vertex set.
    pub fn preimage(&self, s: &crate::bitset::VertexSet) -> crate::bitset::VertexSet {
        self.map
            .iter()
            .enumerate()
            .filter(|(_, &img)| s.contains(img))
            .map(|(v, _)| v)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_verifies() {
        let g = Graph::cycle(5).unwrap();
        assert!(Homomorphism::identity(&g).verify().is_ok());
    }

    #[test]
    fn constant_map_valid_only_without_edges() {
        let empty = Graph::empty_graph(4).unwrap();
        let k1 = Graph::complete(1).unwrap();
        let hom = Homomorphism::new(empty, k1.clone(), vec![0; 4]);
        assert!(hom.is_ok());

        let p2 = Graph::path(2).unwrap();
        let bad = Homomorphism::new(p2, k1, vec![0, 0]);
        assert!(matches!(bad, Err(HomError::EdgeNotPreserved(..))));
    }

    #[test]
    fn preimage_collects_classes() {
        let g = Graph::path(2).unwrap();
        let h = Graph::path(3).unwrap();
        let hom = Homomorphism::new(g, h, vec![0, 1]).unwrap();
        let pre = hom.preimage(&[0, 2].into_iter().collect());
        assert_eq!(pre.to_vec(), vec![0]);
    }
}
