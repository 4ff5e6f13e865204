//! Perfectness by odd hole and odd antihole enumeration, and membership in
//! the bounded family of forbidden graphs for bipartite classes.

use super::{check_size, RecognitionError};
use crate::graph::{contains_induced, parse_spec, Graph, Vertex};

/// Default vertex limit for the perfectness check.
pub const DESK_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OddWitness {
    /// Induced odd cycle of length at least five, in cycle order.
    Hole(Vec<Vertex>),
    /// Vertices whose complement is an induced odd cycle, in that cycle's order.
    Antihole(Vec<Vertex>),
}

impl OddWitness {
    pub fn vertices(&self) -> &[Vertex] {
        match self {
            OddWitness::Hole(v) | OddWitness::Antihole(v) => v,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PerfectResult {
    Perfect,
    Imperfect(OddWitness),
}

impl PerfectResult {
    pub fn is_perfect(&self) -> bool {
        matches!(self, PerfectResult::Perfect)
    }
}

/// Decides perfectness by searching for odd holes and odd antiholes of every
/// length from five up to `n`.
pub fn is_perfect_desk(g: &Graph) -> Result<PerfectResult, RecognitionError> {
    check_size(g, DESK_LIMIT)?;
    let co = g.complement();
    let mut r = 5;
    while r <= g.n() {
        let cycle = Graph::cycle(r);
        if let Some(e) = contains_induced(g, &cycle) {
            return Ok(PerfectResult::Imperfect(OddWitness::Hole(e.map)));
        }
        if let Some(e) = contains_induced(&co, &cycle) {
            return Ok(PerfectResult::Imperfect(OddWitness::Antihole(e.map)));
        }
        r += 2;
    }
    Ok(PerfectResult::Perfect)
}

const CONTAINERS: [&str; 4] = ["K1,3+3P1", "K1,3+P2", "P1+S(1,1,3)", "S(1,2,3)"];

/// True when the bipartite `H`-free graphs form a class of bounded
/// clique-width: `H` is edgeless or an induced subgraph of one of
/// `K1,3+3P1`, `K1,3+P2`, `P1+S(1,1,3)` or `S(1,2,3)`.
pub fn bipartite_bounded_pattern(h: &Graph) -> bool {
    if h.m() == 0 {
        return true;
    }
    CONTAINERS.iter().any(|c| {
        let container = parse_spec(c)
            .and_then(|s| s.realize())
            .expect("container spec is valid");
        contains_induced(&container, h).is_some()
    })
}
