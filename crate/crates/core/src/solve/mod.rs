//! Exact solvers for graph parameters and their tree-decomposition analogs.
//!
//! Everything here is exact; size guards turn oversized inputs into
//! explicit budget errors, never silent approximations.

pub mod brute;
pub mod chordal;
pub mod color;
pub mod elim;
pub mod minsep;
pub mod mis;
pub mod pmc;
pub mod treeparam;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::td::{BagMeasure, TreeDecomposition};
use std::collections::HashMap;
use thiserror::Error;

pub use pmc::PmcCatalog;
pub use treeparam::{tree_parameter, treewidth};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamName {
    Alpha,
    Chi,
    Tw,
    TreeAlpha,
    TreeChi,
    TreeTw,
}

impl ParamName {
    pub fn as_str(self) -> &'static str {
        match self {
            ParamName::Alpha => "alpha",
            ParamName::Chi => "chi",
            ParamName::Tw => "tw",
            ParamName::TreeAlpha => "tree-alpha",
            ParamName::TreeChi => "tree-chi",
            ParamName::TreeTw => "tree-tw",
        }
    }

    pub fn parse(s: &str) -> Option<ParamName> {
        Some(match s {
            "alpha" => ParamName::Alpha,
            "chi" => ParamName::Chi,
            "tw" => ParamName::Tw,
            "tree-alpha" => ParamName::TreeAlpha,
            "tree-chi" => ParamName::TreeChi,
            "tree-tw" => ParamName::TreeTw,
            _ => return None,
        })
    }

    /// The bag measure whose tree-parameter this is, if any.
    pub fn bag_measure(self) -> Option<BagMeasure> {
        Some(match self {
            ParamName::TreeAlpha => BagMeasure::Alpha,
            ParamName::TreeChi => BagMeasure::Chi,
            ParamName::TreeTw => BagMeasure::Tw,
            ParamName::Tw => BagMeasure::Size,
            _ => return None,
        })
    }
}

/// A certificate for a computed value.
#[derive(Clone, Debug)]
pub enum Witness {
    None,
    /// A stable set of the stated (weighted) size.
    StableSet(VertexSet),
    /// A proper coloring with colors `0..value`.
    Coloring(Vec<u32>),
    /// A valid decomposition achieving the stated bag measure.
    Decomposition(TreeDecomposition),
}

#[derive(Clone, Debug)]
pub struct ParameterValue {
    pub name: ParamName,
    pub value: u64,
    pub witness: Witness,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("{op}: size guard exceeded (n = {n}, limit = {max})")]
    Budget { op: &'static str, n: usize, max: usize },
    #[error("{op}: search budget exceeded ({detail})")]
    SearchBudget { op: &'static str, detail: String },
    /// The pmc catalog failed to realize a block; this indicates an
    /// enumeration gap and never a property of the input.
    #[error("tree_parameter: pmc catalog incomplete ({0})")]
    CatalogIncomplete(String),
}

/// Size guards for the exact solvers. Exceeding a guard is a
/// [`SolverError::Budget`], never a silent approximation.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Maximum vertices for `tree_parameter` with the size measure
    /// (and hence `treewidth`).
    pub tree_size_max_n: usize,
    /// Maximum vertices for `tree_parameter` with the alpha/chi/tw measures.
    pub tree_measure_max_n: usize,
    /// Maximum vertices for the chordal-supergraph brute-force oracle.
    pub brute_max_n: usize,
    /// Maximum vertices for the elimination-ordering treewidth oracle.
    pub elim_max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            tree_size_max_n: 64,
            tree_measure_max_n: 30,
            brute_max_n: 8,
            elim_max_n: 20,
        }
    }
}

/// Value of a bag measure on the subgraph induced by `bag`, memoized by
/// bag. A memo is only reusable for a fixed `(graph, measure)` pair.
pub fn bag_measure_value(
    g: &Graph,
    bag: &VertexSet,
    p: BagMeasure,
    memo: &mut HashMap<VertexSet, u32>,
) -> u32 {
    if p == BagMeasure::Size {
        return bag.len() as u32;
    }
    if let Some(&v) = memo.get(bag) {
        return v;
    }
    let sub = g.induced_subgraph(bag).expect("bag within host range");
    let value = match p {
        BagMeasure::Size => unreachable!(),
        BagMeasure::Alpha => mis::max_stable_set(&sub).0 as u32,
        BagMeasure::Chi => color::chromatic_number(&sub).0,
        BagMeasure::Tw => {
            treeparam::treewidth(&sub, &Limits::default())
                .expect("bag-sized treewidth within default guard")
                .value as u32
        }
    };
    memo.insert(bag.clone(), value);
    value
}

/// Exact maximum (optionally weighted) stable set with witness.
pub fn max_stable_set(g: &Graph, w: Option<&crate::weights::WeightFunction>) -> ParameterValue {
    let (value, set) = match w {
        None => mis::max_stable_set(g),
        Some(w) => mis::max_weighted_stable_set(g, w),
    };
    ParameterValue { name: ParamName::Alpha, value, witness: Witness::StableSet(set) }
}

/// Exact chromatic number with a proper coloring witness.
pub fn chromatic_number(g: &Graph) -> ParameterValue {
    let (value, coloring) = color::chromatic_number(g);
    ParameterValue {
        name: ParamName::Chi,
        value: value as u64,
        witness: Witness::Coloring(coloring),
    }
}
