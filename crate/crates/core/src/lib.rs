//! Exact computation of tree-decomposition parameters (treewidth,
//! tree-independence number, tree-chromatic number, tree-treewidth) at
//! desk scale, together with the graph constructions that separate
//! treewidth from the product of tree-independence and tree-chromatic
//! numbers, and a machine-checkable verification suite over them.

pub mod bitset;
pub mod construct;
pub mod family;
pub mod fmt;
pub mod graph;
pub mod hom;
pub mod solve;
pub mod td;
pub mod verify;
pub mod weights;

pub use bitset::VertexSet;
pub use family::StableSetFamily;
pub use graph::{Graph, GraphError};
pub use hom::Homomorphism;
pub use td::{BagMeasure, TreeDecomposition, ValidationReport, Violation};
pub use weights::WeightFunction;
