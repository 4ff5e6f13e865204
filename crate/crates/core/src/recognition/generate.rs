//! Seeded rejection sampling of graphs avoiding given induced subgraphs.
//!
//! Graphs are grown one vertex at a time. Each new vertex receives a random
//! neighbourhood and is redrawn while the grown graph contains a forbidden
//! graph. Edge probabilities cycle through 0.1, 0.2, ..., 0.9 across samples
//! so that both sparse and dense members are produced.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::RecognitionError;
use crate::graph::{is_free, Graph};

/// Largest `n` accepted by [`generate_free`].
pub const GENERATE_LIMIT: usize = 16;

const TRIES_PER_VERTEX: usize = 200;

/// Draws `count` graphs on vertices `0..n` that are free of every graph in
/// `forbidden`. Output is a pure function of the arguments.
pub fn generate_free(n: usize, forbidden: &[Graph], count: usize, seed: u64) -> Result<Vec<Graph>, RecognitionError> {
    if n > GENERATE_LIMIT {
        return Err(RecognitionError::SizeLimit {
            n,
            limit: GENERATE_LIMIT,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = 50 * count.max(1);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        if attempts == budget {
            return Err(RecognitionError::BudgetExhausted {
                attempts,
                produced: out.len(),
                wanted: count,
            });
        }
        let p = 0.1 * (1 + attempts % 9) as f64;
        attempts += 1;
        if let Some(g) = grow(&Graph::edgeless(0), n, forbidden, p, &mut rng) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Adds `extra` vertices to `base`, keeping it free of `forbidden`. New
/// vertices get ids after the existing ones and may attach to any vertex.
pub fn extend_free(
    base: &Graph,
    extra: usize,
    forbidden: &[Graph],
    p: f64,
    seed: u64,
) -> Result<Graph, RecognitionError> {
    if !is_free(base, forbidden) {
        return Err(RecognitionError::BaseNotFree);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = 20;
    for _ in 0..budget {
        if let Some(g) = grow(base, base.n() + extra, forbidden, p, &mut rng) {
            return Ok(g);
        }
    }
    Err(RecognitionError::BudgetExhausted {
        attempts: budget,
        produced: 0,
        wanted: 1,
    })
}

fn grow(base: &Graph, n: usize, forbidden: &[Graph], p: f64, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let mut g = base.clone();
    while g.n() < n {
        let existing = g.vertex_list();
        let next = (0..TRIES_PER_VERTEX).find_map(|_| {
            let nbrs: Vec<_> = existing.iter().copied().filter(|_| rng.gen_bool(p)).collect();
            let (h, _) = g.with_vertex(&nbrs);
            is_free(&h, forbidden).then_some(h)
        })?;
        g = next;
    }
    Some(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_spec;

    fn g(s: &str) -> Graph {
        parse_spec(s).unwrap().realize().unwrap()
    }

    #[test]
    fn samples_are_free_and_reproducible() {
        let forbidden = [g("diamond"), g("P2+P3")];
        let a = generate_free(8, &forbidden, 20, 7).unwrap();
        let b = generate_free(8, &forbidden, 20, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 20);
        for h in &a {
            assert_eq!(h.n(), 8);
            assert!(is_free(h, &forbidden));
        }
        let densities: Vec<usize> = a.iter().map(Graph::m).collect();
        assert!(densities.iter().min() < densities.iter().max());
    }

    #[test]
    fn impossible_requests_fail_loudly() {
        let err = generate_free(4, &[g("P1")], 3, 1).unwrap_err();
        assert!(matches!(err, RecognitionError::BudgetExhausted { produced: 0, .. }));
        assert!(generate_free(17, &[], 1, 1).is_err());
    }

    #[test]
    fn extension_keeps_base() {
        let base = Graph::cycle(5);
        let forbidden = [g("diamond"), g("P2+P3")];
        let h = extend_free(&base, 3, &forbidden, 0.3, 2).unwrap();
        assert_eq!(h.n(), 8);
        assert_eq!(h.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap(), base);
        assert!(extend_free(&g("diamond"), 1, &forbidden, 0.3, 2).is_err());
    }
}
