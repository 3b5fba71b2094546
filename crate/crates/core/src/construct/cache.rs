//! Cached weightings for the Burling levels.
//!
//! The k = 4 search takes minutes, so verified witnesses for k <= 4 ship
//! as data files; each records (bound, target, graph hash) and is checked
//! against the freshly built G_k before use. Regenerate with
//! `tdp weights` on the corresponding `tdp gen burling` output.

use super::burling::{burling, MAX_LEVEL};
use super::ConstructError;
use crate::fmt;
use crate::weights::WeightFunction;

const CACHED: [&str; MAX_LEVEL] = [
    include_str!("../../data/burling_weights_k1.txt"),
    include_str!("../../data/burling_weights_k2.txt"),
    include_str!("../../data/burling_weights_k3.txt"),
    include_str!("../../data/burling_weights_k4.txt"),
];

/// The stable-set weight bound that level k supports: 2^(2^(k-1)-1).
pub fn weighting_bound(k: usize) -> u64 {
    super::burling::expected_family_size(k)
}

/// The weighting total that level k supports: (k+1)/2 * 2^(2^(k-1)-1).
pub fn weighting_target(k: usize) -> u64 {
    super::blowup::expected_blowup_size(k)
}

/// Loads the cached weighting for G_k, checking the recorded graph hash,
/// bound, target, and total against the freshly built level. The
/// stable-set bound itself is re-verified by callers that need it.
pub fn cached_weighting(k: usize) -> Result<WeightFunction, ConstructError> {
    if k < 1 || k > MAX_LEVEL {
        return Err(ConstructError::Domain(format!(
            "cached weightings cover levels 1..={} (got {})",
            MAX_LEVEL, k
        )));
    }
    let level = burling(k)?;
    let n = level.graph.n();
    let (w, header) = fmt::parse_weights(CACHED[k - 1], n)
        .map_err(|e| ConstructError::Dependency(format!("cached weighting for k = {}: {}", k, e)))?;
    let header = header.ok_or_else(|| {
        ConstructError::Dependency(format!("cached weighting for k = {} lacks its header", k))
    })?;
    let hash = level.graph.hash_hex();
    if header.graph_hash != hash {
        return Err(ConstructError::Dependency(format!(
            "cached weighting for k = {} was computed for graph {}, current graph is {}",
            k, header.graph_hash, hash
        )));
    }
    if header.bound != weighting_bound(k) || header.target != weighting_target(k) {
        return Err(ConstructError::Dependency(format!(
            "cached weighting for k = {} records bound {} target {}, expected {} and {}",
            k,
            header.bound,
            header.target,
            weighting_bound(k),
            weighting_target(k)
        )));
    }
    if w.total() != header.target {
        return Err(ConstructError::Dependency(format!(
            "cached weighting for k = {} sums to {}, header says {}",
            k,
            w.total(),
            header.target
        )));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::weighting::verify_weighting;

    #[test]
    fn cached_weightings_load_and_verify_small() {
        for k in 1..=3 {
            let w = cached_weighting(k).unwrap();
            let g = burling(k).unwrap().graph;
            assert!(
                verify_weighting(&g, &w, weighting_bound(k), weighting_target(k)).is_ok(),
                "cached weighting k = {}",
                k
            );
        }
    }

    #[test]
    fn out_of_range_level_rejected() {
        assert!(cached_weighting(0).is_err());
        assert!(cached_weighting(5).is_err());
    }
}
