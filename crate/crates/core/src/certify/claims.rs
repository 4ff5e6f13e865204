//! Separators between a clique and an independent set, and the branching
//! for `(co(sP1+P2), tP1+P2)`-free graphs.

use super::{named, sorted, CertifyError};
use crate::graph::{contains_induced, Graph, Vertex};
use crate::recognition::max_clique_unbounded;

/// The witness error for an induced `spec` inside `g[vertices]`.
pub(crate) fn witness_in(g: &Graph, spec: &str, vertices: &[Vertex]) -> CertifyError {
    let sub = g
        .induced_subgraph(&sorted(vertices.to_vec()))
        .expect("witness vertices exist");
    match contains_induced(&sub, &named(spec)) {
        Some(e) => CertifyError::NotInClass {
            forbidden: spec.to_string(),
            witness: e.map,
        },
        None => CertifyError::Internal(format!("expected an induced {spec} on {vertices:?}")),
    }
}

/// A set of at most four vertices meeting every edge between the clique `c`
/// and the independent set `i` of a `(diamond, 2P1+P3)`-free graph.
pub fn clique_independent_separator(g: &Graph, c: &[Vertex], i: &[Vertex]) -> Result<Vec<Vertex>, CertifyError> {
    for &v in c.iter().chain(i) {
        if !g.contains(v) {
            return Err(CertifyError::Precondition(format!("vertex {v} does not exist")));
        }
    }
    if c.iter().any(|v| i.contains(v)) {
        return Err(CertifyError::Precondition("clique and independent set overlap".into()));
    }
    if !g.is_clique(c) {
        return Err(CertifyError::Precondition(format!("{c:?} is not a clique")));
    }
    if !g.is_independent(i) {
        return Err(CertifyError::Precondition(format!("{i:?} is not independent")));
    }
    let cross = |x: Vertex| -> Vec<Vertex> { c.iter().copied().filter(|&y| g.has_edge(x, y)).collect() };
    if i.iter().all(|&x| cross(x).is_empty()) {
        return Ok(Vec::new());
    }
    if c.len() < 5 {
        return Ok(sorted(c.to_vec()));
    }
    if i.len() < 5 {
        return Ok(sorted(i.to_vec()));
    }

    let mut complete = Vec::new();
    for &x in i {
        let nb = cross(x);
        if nb.len() == c.len() {
            complete.push(x);
        } else if nb.len() >= 2 {
            let y3 = *c.iter().find(|y| !nb.contains(y)).expect("some non-neighbour");
            return Err(witness_in(g, "diamond", &[nb[0], nb[1], y3, x]));
        }
    }
    if complete.len() >= 2 {
        return Err(witness_in(g, "diamond", &[complete[0], complete[1], c[0], c[1]]));
    }
    let mut s: Vec<Vertex> = complete.clone();
    let ip: Vec<Vertex> = i.iter().copied().filter(|x| !complete.contains(x)).collect();

    let mut dominant = None;
    for &x in c {
        let (nb, non): (Vec<Vertex>, Vec<Vertex>) = ip.iter().partition(|&&u| g.has_edge(x, u));
        if nb.len() >= 2 && non.len() >= 2 {
            return Err(witness_in(g, "2P1+P3", &[nb[0], nb[1], non[0], non[1], x]));
        }
        if non.len() <= 1 && dominant.is_none() {
            dominant = Some((x, non));
        }
    }
    if let Some((x, non)) = dominant {
        s.push(x);
        if let Some(&u) = non.first() {
            s.extend(cross(u));
        }
    } else if let Some((x, y)) = ip.iter().find_map(|&x| cross(x).first().map(|&y| (x, y))) {
        let y2 = *c
            .iter()
            .find(|&&w| !g.has_edge(x, w))
            .expect("x has one neighbour in C");
        let others: Vec<Vertex> = ip
            .iter()
            .copied()
            .filter(|&u| u != x && !g.has_edge(u, y) && !g.has_edge(u, y2))
            .take(2)
            .collect();
        return Err(witness_in(g, "2P1+P3", &[others, vec![x, y, y2]].concat()));
    }
    let s = sorted(s);
    debug_assert!(s.len() <= 4);
    for &x in i {
        for y in cross(x) {
            if !s.contains(&x) && !s.contains(&y) {
                return Err(CertifyError::Internal(format!("separator {s:?} misses edge {x}-{y}")));
            }
        }
    }
    Ok(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndependenceBranch {
    /// The graph is `K_{s+1}`-free.
    KFree,
    /// The graph contains `K_{s+1}` and has no independent set of size
    /// `bound`.
    IndepBound { bound: usize },
}

fn co_sp1_p2(s: usize) -> Graph {
    Graph::edgeless(s).disjoint_union(&Graph::complete(2)).0.complement()
}

fn tp1_p2(t: usize) -> Graph {
    Graph::edgeless(t).disjoint_union(&Graph::complete(2)).0
}

/// Decides which branch applies to a `(co(sP1+P2), tP1+P2)`-free graph.
pub fn independence_branch(g: &Graph, s: usize, t: usize) -> Result<IndependenceBranch, CertifyError> {
    if s == 0 || t == 0 {
        return Err(CertifyError::Precondition("s and t must be positive".into()));
    }
    for (name, h) in [
        (format!("co({s}P1+P2)"), co_sp1_p2(s)),
        (format!("{t}P1+P2"), tp1_p2(t)),
    ] {
        if let Some(e) = contains_induced(g, &h) {
            return Err(CertifyError::NotInClass {
                forbidden: name,
                witness: e.map,
            });
        }
    }
    if max_clique_unbounded(g).len() <= s {
        return Ok(IndependenceBranch::KFree);
    }
    let bound = s * s * (t - 1) + 2;
    let alpha = max_clique_unbounded(&g.complement()).len();
    if alpha < bound {
        Ok(IndependenceBranch::IndepBound { bound })
    } else {
        Err(CertifyError::Internal(format!(
            "graph contains K{} and an independent set of size {alpha}",
            s + 1
        )))
    }
}
