//! Exact small-scale invariants, chordality, perfectness at desk scale,
//! bipartite base-class membership and filtered random generation.

mod chordal;
mod dense;
mod generate;
mod invariants;
mod perfect;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub use chordal::{is_chordal, ChordalResult};
pub use generate::{extend_free, generate_free, GENERATE_LIMIT};
pub use invariants::{alpha, clique_cover_exact, max_clique, max_independent_set, omega, EXACT_LIMIT};
pub(crate) use invariants::{clique_cover_unbounded, max_clique_unbounded};
pub use perfect::{bipartite_bounded_pattern, is_perfect_desk, OddWitness, PerfectResult, DESK_LIMIT};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognitionError {
    #[error("graph has {n} vertices; the limit for this operation is {limit}")]
    SizeLimit { n: usize, limit: usize },
    #[error("sampling budget exhausted after {attempts} attempts: produced {produced} of {wanted}")]
    BudgetExhausted {
        attempts: usize,
        produced: usize,
        wanted: usize,
    },
    #[error("base graph already contains a forbidden induced subgraph")]
    BaseNotFree,
}

/// Exact invariants of a small graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassProfile {
    pub alpha: usize,
    pub omega: usize,
    pub clique_cover: Vec<Vec<Vertex>>,
    pub chordal: bool,
    pub perfect: PerfectResult,
}

impl ClassProfile {
    /// Computes every field. Limited by the desk limit for perfectness.
    pub fn of(g: &Graph) -> Result<ClassProfile, RecognitionError> {
        let profile = ClassProfile {
            alpha: alpha(g)?,
            omega: omega(g)?,
            clique_cover: clique_cover_exact(g)?,
            chordal: is_chordal(g).is_chordal(),
            perfect: is_perfect_desk(g)?,
        };
        if profile.perfect.is_perfect() {
            assert_eq!(
                profile.clique_cover.len(),
                profile.alpha,
                "perfect graph with cover size != alpha"
            );
        }
        Ok(profile)
    }
}

fn check_size(g: &Graph, limit: usize) -> Result<(), RecognitionError> {
    if g.n() > limit {
        Err(RecognitionError::SizeLimit { n: g.n(), limit })
    } else {
        Ok(())
    }
}
