//! Independence number, clique number and minimum clique cover.

use super::dense::{bits, Dense, Mask};
use super::{check_size, RecognitionError};
use crate::graph::{Graph, Vertex};

/// Default vertex limit for the exact invariants.
pub const EXACT_LIMIT: usize = 24;

pub fn alpha(g: &Graph) -> Result<usize, RecognitionError> {
    Ok(max_independent_set(g)?.len())
}

pub fn omega(g: &Graph) -> Result<usize, RecognitionError> {
    Ok(max_clique(g)?.len())
}

/// A maximum clique, sorted. Among equal sizes the search order decides.
pub fn max_clique(g: &Graph) -> Result<Vec<Vertex>, RecognitionError> {
    check_size(g, EXACT_LIMIT)?;
    Ok(max_clique_unbounded(g))
}

pub fn max_independent_set(g: &Graph) -> Result<Vec<Vertex>, RecognitionError> {
    check_size(g, EXACT_LIMIT)?;
    let d = Dense::new(g).complement();
    Ok(d.ids_of(best_clique(&d.adj, d.all())))
}

pub(crate) fn max_clique_unbounded(g: &Graph) -> Vec<Vertex> {
    let d = Dense::new(g);
    d.ids_of(best_clique(&d.adj, d.all()))
}

fn best_clique(adj: &[Mask], cand: Mask) -> Mask {
    let mut best = 0;
    expand(adj, 0, cand, &mut best);
    best
}

fn expand(adj: &[Mask], r: Mask, p: Mask, best: &mut Mask) {
    if p == 0 {
        if r.count_ones() > best.count_ones() {
            *best = r;
        }
        return;
    }
    if r.count_ones() + p.count_ones() <= best.count_ones() {
        return;
    }
    let pivot = bits(p)
        .max_by_key(|&u| (p & adj[u]).count_ones())
        .expect("p is nonempty");
    let mut p = p;
    for v in bits(p & !adj[pivot]) {
        expand(adj, r | 1 << v, p & adj[v], best);
        p &= !(1 << v);
        if r.count_ones() + p.count_ones() <= best.count_ones() {
            return;
        }
    }
}

/// A minimum partition of the vertices into cliques. Cliques are sorted and
/// listed by least vertex.
pub fn clique_cover_exact(g: &Graph) -> Result<Vec<Vec<Vertex>>, RecognitionError> {
    check_size(g, EXACT_LIMIT)?;
    Ok(clique_cover_unbounded(g))
}

pub(crate) fn clique_cover_unbounded(g: &Graph) -> Vec<Vec<Vertex>> {
    let d = Dense::new(g);
    let n = d.n();
    let lower = best_clique(&d.complement().adj, d.all()).count_ones() as usize;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (d.adj[v].count_ones(), v));
    let mut best = greedy(&d.adj, &order);
    if best.len() > lower {
        let mut cur = Vec::new();
        assign(&d.adj, &order, 0, &mut cur, &mut best, lower);
    }
    let mut out: Vec<Vec<Vertex>> = best.into_iter().map(|c| d.ids_of(c)).collect();
    out.sort();
    out
}

fn greedy(adj: &[Mask], order: &[usize]) -> Vec<Mask> {
    let mut cliques: Vec<Mask> = Vec::new();
    for &v in order {
        match cliques.iter_mut().find(|c| **c & !adj[v] == 0) {
            Some(c) => *c |= 1 << v,
            None => cliques.push(1 << v),
        }
    }
    cliques
}

fn assign(adj: &[Mask], order: &[usize], i: usize, cur: &mut Vec<Mask>, best: &mut Vec<Mask>, lower: usize) {
    if best.len() == lower || cur.len() >= best.len() {
        return;
    }
    if i == order.len() {
        *best = cur.clone();
        return;
    }
    let v = order[i];
    for c in 0..cur.len() {
        if cur[c] & !adj[v] == 0 {
            cur[c] |= 1 << v;
            assign(adj, order, i + 1, cur, best, lower);
            cur[c] &= !(1 << v);
        }
    }
    if cur.len() + 1 < best.len() {
        cur.push(1 << v);
        assign(adj, order, i + 1, cur, best, lower);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_spec;

    fn g(s: &str) -> Graph {
        parse_spec(s).unwrap().realize().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!((alpha(&g("C5")).unwrap(), omega(&g("C5")).unwrap()), (2, 2));
        assert_eq!((alpha(&g("K5")).unwrap(), omega(&g("K5")).unwrap()), (1, 5));
        assert_eq!((alpha(&g("diamond")).unwrap(), omega(&g("diamond")).unwrap()), (2, 3));
        assert_eq!(alpha(&Graph::edgeless(0)).unwrap(), 0);
    }

    #[test]
    fn covers() {
        assert_eq!(clique_cover_exact(&g("C4")).unwrap().len(), 2);
        assert_eq!(clique_cover_exact(&g("K5")).unwrap(), vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(clique_cover_exact(&g("C5")).unwrap().len(), 3);
        assert_eq!(clique_cover_exact(&g("C7")).unwrap().len(), 4);
    }

    #[test]
    fn size_limit() {
        let big = Graph::edgeless(EXACT_LIMIT + 1);
        assert_eq!(alpha(&big), Err(RecognitionError::SizeLimit { n: 25, limit: 24 }));
    }
}
