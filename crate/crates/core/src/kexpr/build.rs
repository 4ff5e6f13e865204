//! Explicit expressions for disjoint cliques, forests and graphs of maximum
//! degree two.

use super::{KExpr, KexprError};
use crate::graph::{Graph, Vertex};

/// Each clique is grown one vertex at a time: the new vertex enters with
/// label 2, is joined to label 1 and renamed to 1. Width 1 when edgeless.
pub fn expr_disjoint_cliques(g: &Graph) -> Result<KExpr, KexprError> {
    let mut parts = Vec::new();
    for comp in g.components() {
        if !g.is_clique(&comp) {
            return Err(KexprError::NotDisjointCliques(induced_p3(g, &comp)));
        }
        let mut e = KExpr::create(1);
        for _ in 1..comp.len() {
            e = KExpr::rename(2, 1, KExpr::join(1, 2, KExpr::union(e, KExpr::create(2))));
        }
        parts.push(e);
    }
    KExpr::union_all(parts).ok_or(KexprError::EmptyGraph)
}

/// An induced path `a-b-c` inside a connected non-clique component.
fn induced_p3(g: &Graph, comp: &[Vertex]) -> Vec<Vertex> {
    for &b in comp {
        let nb = g.neighbor_list(b);
        for (i, &a) in nb.iter().enumerate() {
            if let Some(&c) = nb[i + 1..].iter().find(|&&c| !g.has_edge(a, c)) {
                return vec![a, b, c];
            }
        }
    }
    unreachable!("connected non-clique has an induced P3")
}

/// Trees are rooted at their least vertex and built bottom-up. While a
/// subtree is assembled its root carries label 1 and every finished vertex
/// label 3; a child subtree is attached by renaming its root to 2, joining
/// 1 with 2 and retiring 2 into 3. At most three labels are used.
pub fn expr_forest(g: &Graph) -> Result<KExpr, KexprError> {
    if let Some(cycle) = find_cycle(g) {
        return Err(KexprError::HasCycle(cycle));
    }
    let parts = g
        .components()
        .into_iter()
        .map(|comp| subtree(g, comp[0], usize::MAX))
        .collect();
    KExpr::union_all(parts).ok_or(KexprError::EmptyGraph)
}

fn subtree(g: &Graph, v: Vertex, parent: Vertex) -> KExpr {
    let mut e = KExpr::create(1);
    for c in g.neighbors(v).ones().filter(|&c| c != parent) {
        let child = KExpr::rename(1, 2, subtree(g, c, v));
        e = KExpr::rename(2, 3, KExpr::join(1, 2, KExpr::union(e, child)));
    }
    e
}

/// Some cycle of `g` in cycle order, found by depth-first search.
fn find_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let mut parent = vec![usize::MAX; g.universe()];
    let mut seen = g.empty_set();
    for root in g.vertices() {
        if seen.contains(root) {
            continue;
        }
        seen.insert(root);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v).ones() {
                if w == parent[v] {
                    continue;
                }
                if seen.contains(w) {
                    // Either an ancestor of v or already finished; both close a cycle.
                    return Some(cycle_through(&parent, v, w));
                }
                seen.insert(w);
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    None
}

fn cycle_through(parent: &[usize], a: Vertex, b: Vertex) -> Vec<Vertex> {
    let ancestors = |mut x: Vertex| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let pa = ancestors(a);
    let pb = ancestors(b);
    let meet = *pa.iter().find(|x| pb.contains(x)).expect("same tree");
    let mut cycle: Vec<Vertex> = pa.iter().copied().take_while(|&x| x != meet).collect();
    cycle.push(meet);
    let back: Vec<Vertex> = pb.iter().copied().take_while(|&x| x != meet).collect();
    cycle.extend(back.into_iter().rev());
    cycle
}

/// Paths use labels 1 (current end), 2 (new vertex) and 3 (finished).
/// Cycles also keep their first vertex on label 4 until the last vertex
/// closes the cycle.
pub fn expr_max_degree_2(g: &Graph) -> Result<KExpr, KexprError> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) > 2) {
        return Err(KexprError::DegreeAboveTwo(v));
    }
    let mut parts = Vec::new();
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp).expect("component vertices exist");
        let is_cycle = sub.m() == comp.len();
        let order = walk(g, &comp, is_cycle);
        parts.push(if is_cycle {
            cycle_expr(order.len())
        } else {
            path_expr(order.len())
        });
    }
    KExpr::union_all(parts).ok_or(KexprError::EmptyGraph)
}

/// Vertices of a path or cycle component in traversal order.
fn walk(g: &Graph, comp: &[Vertex], is_cycle: bool) -> Vec<Vertex> {
    let start = if is_cycle {
        comp[0]
    } else {
        *comp.iter().find(|&&v| g.degree(v) <= 1).expect("paths have an end")
    };
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = g.neighbors(cur).ones().find(|&w| w != prev && w != start) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

fn extend_path(e: KExpr) -> KExpr {
    KExpr::rename(
        2,
        1,
        KExpr::rename(1, 3, KExpr::join(1, 2, KExpr::union(e, KExpr::create(2)))),
    )
}

fn path_expr(len: usize) -> KExpr {
    let mut e = KExpr::create(1);
    for _ in 1..len {
        e = extend_path(e);
    }
    e
}

fn cycle_expr(len: usize) -> KExpr {
    debug_assert!(len >= 3);
    let mut e = KExpr::rename(
        2,
        1,
        KExpr::join(4, 2, KExpr::union(KExpr::create(4), KExpr::create(2))),
    );
    for _ in 2..len - 1 {
        e = extend_path(e);
    }
    KExpr::join(2, 4, KExpr::join(1, 2, KExpr::union(e, KExpr::create(2))))
}
