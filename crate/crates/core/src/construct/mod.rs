//! Explicit constructions: 1-completions and their decompositions, the
//! Burling sequence, weightings, blowups, and counterexample generators.

pub mod blowup;
pub mod burling;
pub mod cache;
pub mod completion;
pub mod counterexample;
pub mod weighting;

use thiserror::Error;

pub use blowup::{blowup_burling, expected_blowup_size};
pub use burling::{burling, burling_star_forest_decomposition, is_star_forest, BurlingLevel};
pub use cache::{cached_weighting, weighting_bound, weighting_target};
pub use completion::{
    completion_lift_decomposition, completion_star_decomposition, crown_decomposition,
    one_completion, CompletionResult,
};
pub use counterexample::{burling_completion_counterexample, pentagon_counterexample};
pub use weighting::{find_weighting, verify_weighting, SearchBudget, WeightingOutcome};

#[derive(Debug, Error)]
pub enum ConstructError {
    /// Input outside a construction's stated hypothesis.
    #[error("domain error: {0}")]
    Domain(String),
    /// A supplied argument fails its precondition (e.g. invalid input
    /// decomposition).
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A required artifact (weighting) is missing or inconsistent.
    #[error("dependency error: {0}")]
    Dependency(String),
    /// Search budget exceeded; distinct from infeasibility.
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
}
