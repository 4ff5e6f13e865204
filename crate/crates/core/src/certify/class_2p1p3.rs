//! Certificates for `(diamond, 2P1+P3)`-free graphs.

use super::claims::clique_independent_separator;
use super::class_3p1p2::{chain_cover, consecutive, cycle_hits};
use super::model::{BaseLeaf, Certificate, Justification, Node, Op};
use super::{find, require_free, rest, sorted, CertifyError};
use crate::graph::{parse_spec, Graph, Vertex};

pub fn certify_diamond_2p1p3(g: &Graph) -> Result<Certificate, CertifyError> {
    require_free(g, &["diamond", "2P1+P3"])?;
    let tree = if let Some(c4) = find(g, "C4") {
        four_cycle(g, &c4.map)?
    } else if let Some(hole) = find(g, "C5").or_else(|| find(g, "C6")).or_else(|| find(g, "C7")) {
        long_cycle(g, &hole.map)?
    } else {
        Node::Leaf(BaseLeaf::ChordalDiamondFree)
    };
    Ok(Certificate::new(g, tree))
}

fn four_cycle(g: &Graph, cycle: &[Vertex]) -> Result<Node, CertifyError> {
    let mut x = Vec::new();
    let mut w = vec![Vec::new(); 4];
    let mut y = vec![Vec::new(); 4];
    let mut v = vec![Vec::new(); 2];
    for u in rest(g, cycle) {
        match cycle_hits(g, cycle, u)[..] {
            [] => x.push(u),
            [i] => w[i].push(u),
            [i, j] if j == i + 1 => y[i].push(u),
            [0, 3] => y[3].push(u),
            [1, 3] => v[0].push(u),
            [0, 2] => v[1].push(u),
            _ => {
                return Err(CertifyError::Internal(format!(
                    "vertex {u} sees three vertices of a C4"
                )))
            }
        }
    }
    let mut cliques = vec![sorted([x, w[0].clone()].concat())];
    cliques.extend(w.into_iter().skip(1));
    cliques.extend(y);
    let mut separators = Vec::new();
    for c in &cliques {
        for i in &v {
            separators.extend(clique_independent_separator(g, c, i)?);
        }
    }
    let separators = sorted(separators);
    let mut ops = vec![Op::delete(cycle.to_vec(), Justification::CycleVertices { r: 4 })];
    if !separators.is_empty() {
        ops.push(Op::delete(
            separators.clone(),
            Justification::Separators {
                cliques: cliques.len(),
                independent_sets: v.len(),
            },
        ));
    }
    let keep = |set: &[Vertex]| -> Vec<Vertex> { set.iter().copied().filter(|u| !separators.contains(u)).collect() };
    let cliques: Vec<Vec<Vertex>> = cliques.iter().map(|c| keep(c)).collect();
    let clique_side = sorted(cliques.concat());
    let bipartite_side = sorted(keep(&v.concat()));
    let clique_node = if clique_side.is_empty() {
        Node::Leaf(BaseLeaf::DisjointCliques)
    } else {
        let h = g.induced_subgraph(&clique_side).expect("vertices exist");
        chain_cover(Vec::new(), &h, &cliques)?
    };
    let h_free = parse_spec("2P1+P3").expect("valid spec");
    let tail = Node::split(vec![
        (clique_side, clique_node),
        (bipartite_side, Node::Leaf(BaseLeaf::BipartiteHFree(h_free))),
    ]);
    Ok(Node::chain(ops, tail))
}

fn long_cycle(g: &Graph, cycle: &[Vertex]) -> Result<Node, CertifyError> {
    let k = cycle.len();
    let mut x = Vec::new();
    let mut w = vec![Vec::new(); k];
    let mut pairs: Vec<Vec<Vertex>> = cycle.iter().map(|&c| vec![c]).collect();
    let mut chords = Vec::new();
    for u in rest(g, cycle) {
        let hits = cycle_hits(g, cycle, u);
        if hits
            .iter()
            .any(|&i| hits.iter().any(|&j| i != j && !consecutive(i, j, k)))
        {
            chords.push(u);
            continue;
        }
        match hits[..] {
            [] => x.push(u),
            [i] => w[i].push(u),
            [i, j] if j == i + 1 => pairs[i].push(u),
            [0, j] if j == k - 1 => pairs[j].push(u),
            _ => {
                return Err(CertifyError::Internal(format!(
                    "vertex {u} sees three vertices of a C{k}"
                )))
            }
        }
    }
    let mut ops = Vec::new();
    if !chords.is_empty() {
        ops.push(Op::delete(chords.clone(), Justification::NonConsecutivePairs { r: k }));
    }
    let h = g.delete_vertices(&chords).expect("vertices exist");
    let mut cover = vec![sorted([x, w[0].clone()].concat())];
    cover.extend(w.into_iter().skip(1));
    cover.extend(pairs.into_iter().map(sorted));
    chain_cover(ops, &h, &cover)
}
