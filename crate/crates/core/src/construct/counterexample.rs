//! Counterexample generators: graphs whose treewidth exceeds the product
//! of tree-independence and tree-chromatic numbers.

use super::blowup::blowup_burling;
use super::completion::{one_completion, CompletionResult};
use super::ConstructError;
use crate::graph::Graph;
use crate::weights::WeightFunction;

/// C(k * C_5): the 1-completion of k disjoint pentagons.
/// tw = 5k - 1 while tree-chi = 2 and tree-alpha <= 2k.
pub fn pentagon_counterexample(k: usize) -> Result<CompletionResult, ConstructError> {
    if k < 1 {
        return Err(ConstructError::Domain("pentagon counterexample needs k >= 1".into()));
    }
    let c5 = Graph::cycle(5).expect("pentagon");
    let parts = vec![c5; k];
    let h = Graph::disjoint_union(&parts)?;
    Ok(one_completion(&h))
}

/// C(H_k): the 1-completion of the Burling blowup under a verified
/// weighting for G_k.
pub fn burling_completion_counterexample(
    k: usize,
    weights: &WeightFunction,
) -> Result<CompletionResult, ConstructError> {
    let (h, _) = blowup_burling(k, weights)?;
    Ok(one_completion(&h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagon_counts() {
        let c = pentagon_counterexample(1).unwrap();
        assert_eq!(c.graph.n(), 10);
        // 10 + (C(10,2) - 10) = 45 vertices at k = 2
        let c = pentagon_counterexample(2).unwrap();
        assert_eq!(c.graph.n(), 45);
        assert!(pentagon_counterexample(0).is_err());
    }

    #[test]
    fn burling_completion_composes() {
        let w = WeightFunction::from_vec(vec![1, 1, 1]);
        let c = burling_completion_counterexample(2, &w).unwrap();
        // H_2 on 3 vertices with 1 edge: completion adds 2 vertices
        assert_eq!(c.graph.n(), 5);
    }
}
