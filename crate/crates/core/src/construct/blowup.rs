//! Blowups of Burling levels: vertex v becomes a stable class of w(v)
//! vertices, classes joined completely along edges of G_k, projected back
//! by the class homomorphism.

use super::burling::burling;
use super::ConstructError;
use crate::graph::Graph;
use crate::hom::Homomorphism;
use crate::weights::WeightFunction;

/// H_k: the blowup of G_k under a verified weighting, with the projection
/// homomorphism H_k -> G_k.
pub fn blowup_burling(
    k: usize,
    weights: &WeightFunction,
) -> Result<(Graph, Homomorphism), ConstructError> {
    let level = burling(k)?;
    if weights.len() != level.graph.n() {
        return Err(ConstructError::Dependency(format!(
            "weighting covers {} vertices, G_{} has {}",
            weights.len(),
            k,
            level.graph.n()
        )));
    }
    Ok(level.graph.blowup(weights)?)
}

/// |V(H_k)| as guaranteed by the weighting total: (k+1)/2 * 2^(2^(k-1)-1).
pub fn expected_blowup_size(k: usize) -> u64 {
    let b = super::burling::expected_family_size(k); // 2^(2^(k-1)-1)
    (k as u64 + 1) * b / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_sizes_match_closed_form() {
        assert_eq!(expected_blowup_size(1), 1);
        assert_eq!(expected_blowup_size(2), 3);
        assert_eq!(expected_blowup_size(3), 16);
        assert_eq!(expected_blowup_size(4), 320);
    }

    #[test]
    fn blowup_classes_are_stable_and_projection_verifies() {
        let level = burling(2).unwrap();
        let w = WeightFunction::from_vec(vec![1, 1, 1]);
        let (h, hom) = blowup_burling(2, &w).unwrap();
        assert_eq!(h.n() as u64, w.total());
        assert!(hom.verify().is_ok());
        assert_eq!(hom.target().n(), level.graph.n());
    }

    #[test]
    fn wrong_weight_length_is_a_dependency_error() {
        let w = WeightFunction::uniform(2, 1);
        assert!(matches!(
            blowup_burling(2, &w),
            Err(ConstructError::Dependency(_))
        ));
    }
}
