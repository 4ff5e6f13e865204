//! Boundedness certificates: the data model, reductions driven by clique
//! covers, the three certifiers for diamond-free classes, an independent
//! verifier, and the classification of `(sP1+P2, tP1+P2)`-type pairs.

mod claims;
mod class_2p1p3;
mod class_3p1p2;
mod class_p2p3;
mod cover;
mod model;
mod pairs;
mod verify;

use thiserror::Error;

use crate::graph::{contains_induced, parse_spec, Embedding, Graph, Vertex};

pub use claims::{clique_independent_separator, independence_branch, IndependenceBranch};
pub use class_2p1p3::certify_diamond_2p1p3;
pub use class_3p1p2::certify_diamond_3p1p2;
pub use class_p2p3::certify_diamond_p2p3;
pub use cover::{reduce_by_clique_cover, FreenessWitness, Reduction};
pub use model::{BaseLeaf, Certificate, Fingerprint, Justification, Node, Op, SCHEMA};
pub use pairs::{classify_pair, normalize_pair, PairStatus, Status};
pub use verify::{replay_leaves, verify_certificate, Failure, VerifyReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error("graph is not {forbidden}-free: induced copy on {witness:?}")]
    NotInClass { forbidden: String, witness: Vec<Vertex> },
    #[error("invalid clique cover: {0}")]
    InvalidCover(String),
    #[error("perfectness check needs {n} vertices; the desk limit is {limit}")]
    DeskLimit { n: usize, limit: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal contradiction: {0}")]
    Internal(String),
    #[error("certificate JSON: {0}")]
    Json(String),
}

/// Realizes a named graph from its grammar string.
pub(crate) fn named(spec: &str) -> Graph {
    parse_spec(spec)
        .and_then(|s| s.realize())
        .unwrap_or_else(|e| panic!("built-in graph {spec:?}: {e}"))
}

/// Least induced copy of the named graph, if any.
pub(crate) fn find(g: &Graph, spec: &str) -> Option<Embedding> {
    contains_induced(g, &named(spec))
}

/// Fails with the least witness of the first listed graph that occurs.
pub(crate) fn require_free(g: &Graph, specs: &[&str]) -> Result<(), CertifyError> {
    for spec in specs {
        if let Some(e) = find(g, spec) {
            return Err(CertifyError::NotInClass {
                forbidden: spec.to_string(),
                witness: e.map,
            });
        }
    }
    Ok(())
}

/// Vertices of `g` outside `remove`, in increasing order.
pub(crate) fn rest(g: &Graph, remove: &[Vertex]) -> Vec<Vertex> {
    g.vertices().filter(|v| !remove.contains(v)).collect()
}

/// Sorted, deduplicated copy.
pub(crate) fn sorted(mut v: Vec<Vertex>) -> Vec<Vertex> {
    v.sort_unstable();
    v.dedup();
    v
}
