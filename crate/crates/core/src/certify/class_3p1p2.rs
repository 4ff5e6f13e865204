//! Certificates for `(diamond, 3P1+P2)`-free graphs.

use super::claims::{independence_branch, IndependenceBranch};
use super::cover::reduce_tree;
use super::model::{BaseLeaf, Certificate, Justification, Node, Op};
use super::{find, rest, CertifyError};
use crate::graph::{Graph, Vertex};
use crate::recognition::{clique_cover_unbounded, is_perfect_desk, RecognitionError};

pub fn certify_diamond_3p1p2(g: &Graph) -> Result<Certificate, CertifyError> {
    let tree = match independence_branch(g, 2, 3)? {
        IndependenceBranch::KFree => Node::Leaf(BaseLeaf::K3K13P2Free),
        IndependenceBranch::IndepBound { .. } => independence_bounded(g)?,
    };
    Ok(Certificate::new(g, tree))
}

/// Chains a clique-cover reduction below `ops`; the reduced graph is an
/// induced subgraph of a class member, so a freeness witness is a bug.
pub(crate) fn chain_cover(ops: Vec<Op>, h: &Graph, cover: &[Vec<Vertex>]) -> Result<Node, CertifyError> {
    match reduce_tree(h, cover) {
        Ok(Ok(tail)) => Ok(Node::chain(ops, tail)),
        Ok(Err(w)) => Err(CertifyError::Internal(format!(
            "reduced graph contains an induced {} on {:?}",
            w.forbidden, w.embedding.map
        ))),
        Err(CertifyError::InvalidCover(msg)) => Err(CertifyError::Internal(format!("derived cover: {msg}"))),
        Err(e) => Err(e),
    }
}

/// Positions on the cycle adjacent to `v`.
pub(crate) fn cycle_hits(g: &Graph, cycle: &[Vertex], v: Vertex) -> Vec<usize> {
    (0..cycle.len()).filter(|&i| g.has_edge(v, cycle[i])).collect()
}

pub(crate) fn consecutive(i: usize, j: usize, r: usize) -> bool {
    (i + 1) % r == j || (j + 1) % r == i
}

fn independence_bounded(g: &Graph) -> Result<Node, CertifyError> {
    let hole = find(g, "C5").or_else(|| find(g, "C7"));
    let Some(hole) = hole else {
        match is_perfect_desk(g) {
            Err(RecognitionError::SizeLimit { n, limit }) => return Err(CertifyError::DeskLimit { n, limit }),
            Err(e) => return Err(CertifyError::Internal(e.to_string())),
            Ok(p) if !p.is_perfect() => {
                return Err(CertifyError::Internal(format!(
                    "graph without C5 or C7 is imperfect: {p:?}"
                )))
            }
            Ok(_) => {}
        }
        let cover = clique_cover_unbounded(g);
        return chain_cover(Vec::new(), g, &cover);
    };
    let cycle = hole.map;
    let r = cycle.len();
    let outside = rest(g, &cycle);
    let chord: Vec<Vertex> = outside
        .iter()
        .copied()
        .filter(|&v| {
            let hits = cycle_hits(g, &cycle, v);
            hits.iter()
                .any(|&i| hits.iter().any(|&j| i != j && !consecutive(i, j, r)))
        })
        .collect();
    let mut ops = Vec::new();
    if !chord.is_empty() {
        ops.push(Op::delete(chord.clone(), Justification::CycleChordNeighbours { r }));
    }
    let mut pair_sets = vec![Vec::new(); r];
    let mut single = vec![Vec::new(); r];
    let mut none = Vec::new();
    for &v in outside.iter().filter(|v| !chord.contains(v)) {
        match cycle_hits(g, &cycle, v)[..] {
            [] => none.push(v),
            [i] => single[i].push(v),
            [i, j] if j == i + 1 => pair_sets[i].push(v),
            [0, j] if j == r - 1 => pair_sets[j].push(v),
            _ => return Err(CertifyError::Internal(format!("vertex {v} survived chord deletion"))),
        }
    }
    ops.push(Op::delete(cycle.clone(), Justification::CycleVertices { r }));
    let h = g
        .delete_vertices(&[chord, cycle].concat())
        .expect("deleted vertices exist");
    let cover: Vec<Vec<Vertex>> = pair_sets.into_iter().chain(single).chain([none]).collect();
    chain_cover(ops, &h, &cover)
}
