//! Chordality via maximum cardinality search.

use std::collections::VecDeque;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordalResult {
    /// A perfect elimination order.
    Chordal(Vec<Vertex>),
    /// An induced cycle of length at least four, in cycle order.
    Hole(Vec<Vertex>),
}

impl ChordalResult {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalResult::Chordal(_))
    }

    pub fn hole(&self) -> Option<&[Vertex]> {
        match self {
            ChordalResult::Hole(h) => Some(h),
            ChordalResult::Chordal(_) => None,
        }
    }
}

pub fn is_chordal(g: &Graph) -> ChordalResult {
    let peo = mcs_order(g);
    if is_perfect_elimination(g, &peo) {
        ChordalResult::Chordal(peo)
    } else {
        ChordalResult::Hole(find_hole(g).expect("non-chordal graph has a hole"))
    }
}

/// Reverse of a maximum cardinality search visit order.
fn mcs_order(g: &Graph) -> Vec<Vertex> {
    let mut weight = vec![0usize; g.universe()];
    let mut done = g.empty_set();
    let mut visit = Vec::with_capacity(g.n());
    for _ in 0..g.n() {
        let v = g
            .vertices()
            .filter(|&v| !done.contains(v))
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        done.insert(v);
        visit.push(v);
        for w in g.neighbors(v).ones() {
            weight[w] += 1;
        }
    }
    visit.reverse();
    visit
}

fn is_perfect_elimination(g: &Graph, order: &[Vertex]) -> bool {
    let mut pos = vec![0; g.universe()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<Vertex> = g.neighbors(v).ones().filter(|&w| pos[w] > pos[v]).collect();
        let Some(&u) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if later.iter().any(|&w| w != u && !g.has_edge(u, w)) {
            return false;
        }
    }
    true
}

/// Finds a vertex `c` with non-adjacent neighbours `a`, `b` joined by a path
/// avoiding the rest of `N[c]`. A shortest such path closes an induced cycle.
fn find_hole(g: &Graph) -> Option<Vec<Vertex>> {
    for c in g.vertices() {
        let nc = g.neighbor_list(c);
        for (i, &a) in nc.iter().enumerate() {
            for &b in &nc[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let mut blocked = g.neighbors(c).clone();
                blocked.insert(c);
                blocked.set(a, false);
                blocked.set(b, false);
                if let Some(path) = shortest_path(g, a, b, &blocked) {
                    let mut cycle = vec![c];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, a: Vertex, b: Vertex, blocked: &fixedbitset::FixedBitSet) -> Option<Vec<Vertex>> {
    let mut prev = vec![usize::MAX; g.universe()];
    prev[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        if v == b {
            let mut path = vec![b];
            let mut x = b;
            while x != a {
                x = prev[x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(v).ones() {
            if prev[w] == usize::MAX && !blocked.contains(w) {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}
