//! Certificates for `(diamond, P2+P3)`-free graphs, dispatched on the first
//! of `K5`, `C5`, `C4`, `C6` present.

use super::class_3p1p2::{consecutive, cycle_hits};
use super::model::{BaseLeaf, Certificate, Justification, Node, Op};
use super::{find, require_free, rest, sorted, CertifyError};
use crate::graph::{parse_spec, Graph, Vertex};

pub fn certify_diamond_p2p3(g: &Graph) -> Result<Certificate, CertifyError> {
    require_free(g, &["diamond", "P2+P3"])?;
    let tree = if let Some(k5) = find(g, "K5") {
        big_clique(g, &k5.map)?
    } else if let Some(c5) = find(g, "C5") {
        five_cycle(g, &c5.map)?
    } else if let Some(c4) = find(g, "C4") {
        four_cycle(g, &c4.map)?
    } else if let Some(c6) = find(g, "C6") {
        six_cycle(g, &c6.map)?
    } else {
        Node::Leaf(BaseLeaf::ChordalDiamondFree)
    };
    Ok(Certificate::new(g, tree))
}

fn bipartite_free(spec: &str) -> Node {
    Node::Leaf(BaseLeaf::BipartiteHFree(parse_spec(spec).expect("valid spec")))
}

fn internal(msg: String) -> CertifyError {
    CertifyError::Internal(msg)
}

/// Vertices outside `cycle` adjacent to two consecutive cycle vertices.
fn consecutive_pair_neighbours(g: &Graph, cycle: &[Vertex]) -> Vec<Vertex> {
    let r = cycle.len();
    rest(g, cycle)
        .into_iter()
        .filter(|&u| {
            let hits = cycle_hits(g, cycle, u);
            hits.iter().any(|&i| hits.contains(&((i + 1) % r)))
        })
        .collect()
}

fn delete_if_any(ops: &mut Vec<Op>, set: Vec<Vertex>, j: Justification) {
    if !set.is_empty() {
        ops.push(Op::delete(set, j));
    }
}

fn big_clique(g: &Graph, k5: &[Vertex]) -> Result<Node, CertifyError> {
    let mut x = k5.to_vec();
    for v in g.vertices() {
        if !x.contains(&v) && x.iter().all(|&u| g.has_edge(u, v)) {
            x.push(v);
        }
    }
    let x = sorted(x);
    let mut ops = Vec::new();
    let h = g.prune_degree_one();
    if h != *g {
        ops.push(Op::PruneDegreeOne);
    }
    if x.iter().any(|&v| !h.contains(v)) {
        return Err(internal("pruning removed a vertex of the clique".into()));
    }
    let (isolated, main): (Vec<Vertex>, Vec<Vertex>) = h.vertices().partition(|&v| h.degree(v) == 0);
    let outside = rest(&h.induced_subgraph(&main).expect("vertices exist"), &x);
    let cliques = h.induced_subgraph(&outside).expect("vertices exist").components();
    if let Some(c) = cliques.iter().find(|c| !h.is_clique(c)) {
        return Err(internal(format!("component {c:?} outside the clique is not a clique")));
    }
    let main_node = if cliques.len() <= 1 {
        Node::step(Op::SubgraphComplement { set: main.clone() }, bipartite_free("2P1+P2"))
    } else {
        let attached: Vec<Vertex> = x
            .iter()
            .copied()
            .filter(|&v| outside.iter().any(|&u| h.has_edge(u, v)))
            .collect();
        let mut tail_ops = Vec::new();
        delete_if_any(&mut tail_ops, attached, Justification::CliqueAttachments);
        Node::chain(tail_ops, Node::Leaf(BaseLeaf::DisjointCliques))
    };
    let tail = Node::split(vec![
        (isolated, Node::Leaf(BaseLeaf::DisjointCliques)),
        (main, main_node),
    ]);
    Ok(Node::chain(ops, tail))
}

fn five_cycle(g: &Graph, cycle: &[Vertex]) -> Result<Node, CertifyError> {
    let mut ops = Vec::new();
    let y = consecutive_pair_neighbours(g, cycle);
    delete_if_any(&mut ops, y.clone(), Justification::ConsecutivePairCliques { r: 5 });
    let g1 = g.delete_vertices(&y).expect("vertices exist");
    let single: Vec<Vertex> = rest(&g1, cycle)
        .into_iter()
        .filter(|&u| cycle_hits(&g1, cycle, u).len() == 1)
        .collect();
    delete_if_any(
        &mut ops,
        single.clone(),
        Justification::SingleNeighbourVertices { r: 5 },
    );
    let g2 = g1.delete_vertices(&single).expect("vertices exist");
    // sets[0] is X; sets[i + 1] holds the vertices seeing v(i-1) and v(i+1).
    let mut sets = vec![Vec::new(); 6];
    for u in rest(&g2, cycle) {
        match cycle_hits(&g2, cycle, u)[..] {
            [] => sets[0].push(u),
            [i, j] if !consecutive(i, j, 5) => {
                let mid = if j == i + 2 { i + 1 } else { (j + 1) % 5 };
                sets[mid + 1].push(u);
            }
            _ => return Err(internal(format!("vertex {u} has an unexpected trace on the C5"))),
        }
    }
    ops.push(Op::delete(cycle.to_vec(), Justification::CycleVertices { r: 5 }));
    let small: Vec<Vertex> = sorted(sets.iter().filter(|s| s.len() < 3).flatten().copied().collect());
    delete_if_any(&mut ops, small, Justification::SmallSets { sets: 6 });
    let large = |i: usize| sets[i + 1].len() >= 3;
    for i in 0..5 {
        let j = (i + 1) % 5;
        if large(i) && large(j) {
            ops.push(Op::BipartiteComplement {
                x: sets[i + 1].clone(),
                y: sets[j + 1].clone(),
            });
        }
    }
    Ok(Node::chain(ops, Node::Leaf(BaseLeaf::MaxDegree2)))
}

fn six_cycle(g: &Graph, cycle: &[Vertex]) -> Result<Node, CertifyError> {
    let mut ops = Vec::new();
    let y = consecutive_pair_neighbours(g, cycle);
    delete_if_any(&mut ops, y.clone(), Justification::ConsecutivePairCliques { r: 6 });
    let g1 = g.delete_vertices(&y).expect("vertices exist");
    let far: Vec<Vertex> = rest(&g1, cycle)
        .into_iter()
        .filter(|&u| cycle_hits(&g1, cycle, u).len() >= 2)
        .collect();
    delete_if_any(&mut ops, far, Justification::NonConsecutivePairs { r: 6 });
    Ok(Node::chain(ops, Node::Leaf(BaseLeaf::MaxDegree2)))
}

/// Neighbourhood classes around an induced `C4` whose vertices have no two
/// consecutive neighbours on the cycle. `v[0]` sees the second and fourth
/// cycle vertices, `v[1]` the first and third.
struct Around {
    x: Vec<Vertex>,
    w: Vec<Vec<Vertex>>,
    v: [Vec<Vertex>; 2],
}

impl Around {
    fn of(g: &Graph, cycle: &[Vertex]) -> Result<Around, CertifyError> {
        let mut a = Around {
            x: Vec::new(),
            w: vec![Vec::new(); 4],
            v: [Vec::new(), Vec::new()],
        };
        for u in rest(g, cycle) {
            match cycle_hits(g, cycle, u)[..] {
                [] => a.x.push(u),
                [i] => a.w[i].push(u),
                [1, 3] => a.v[0].push(u),
                [0, 2] => a.v[1].push(u),
                _ => return Err(internal(format!("vertex {u} sees two consecutive vertices of the C4"))),
            }
        }
        Ok(a)
    }

    fn v_all(&self) -> Vec<Vertex> {
        sorted(self.v.concat())
    }

    /// Vertices of `X` with neighbours in both `V` sets.
    fn x0(&self, g: &Graph) -> Vec<Vertex> {
        self.x
            .iter()
            .copied()
            .filter(|&u| self.v.iter().all(|vi| vi.iter().any(|&y| g.has_edge(u, y))))
            .collect()
    }
}

fn neighbours_in(g: &Graph, u: Vertex, set: &[Vertex]) -> Vec<Vertex> {
    set.iter().copied().filter(|&y| g.has_edge(u, y)).collect()
}

fn four_cycle(g: &Graph, cycle: &[Vertex]) -> Result<Node, CertifyError> {
    let mut ops = Vec::new();
    let y = consecutive_pair_neighbours(g, cycle);
    delete_if_any(&mut ops, y.clone(), Justification::ConsecutivePairCliques { r: 4 });
    let mut h = g.delete_vertices(&y).expect("vertices exist");
    let a = Around::of(&h, cycle)?;
    for (p, q) in [(0, 2), (1, 3)] {
        if !a.w[p].is_empty() && !a.w[q].is_empty() {
            if a.w[p].len() > 1 || a.w[q].len() > 1 {
                return Err(internal(format!("opposite attachments {:?} and {:?}", a.w[p], a.w[q])));
            }
            let set = sorted([a.w[p].clone(), a.w[q].clone()].concat());
            h = h.delete_vertices(&set).expect("vertices exist");
            ops.push(Op::delete(set, Justification::OppositeAttachments));
        }
    }
    let a = Around::of(&h, cycle)?;
    let filled: Vec<usize> = (0..4).filter(|&i| !a.w[i].is_empty()).collect();
    let start = match filled[..] {
        [] => 0,
        [i] => i,
        [i, j] if j == i + 1 => i,
        [0, 3] => 3,
        _ => return Err(internal(format!("attachments at {filled:?} after deletions"))),
    };
    let cycle: Vec<Vertex> = (0..4).map(|i| cycle[(start + i) % 4]).collect();
    let a = Around::of(&h, &cycle)?;

    let w1s: Vec<Vertex> = a.w[0]
        .iter()
        .copied()
        .filter(|&u| !neighbours_in(&h, u, &a.w[1]).is_empty())
        .collect();
    let w2s: Vec<Vertex> = a.w[1]
        .iter()
        .copied()
        .filter(|&u| !neighbours_in(&h, u, &a.w[0]).is_empty())
        .collect();
    if w1s.is_empty() && w2s.is_empty() {
        return Ok(Node::chain(ops, anti_complete_core(&h, &cycle)?));
    }
    for (ws, vi, c) in [(&w1s, &a.v[0], cycle[0]), (&w2s, &a.v[1], cycle[1])] {
        if !ws.is_empty() {
            ops.push(Op::BipartiteComplement {
                x: ws.clone(),
                y: sorted([vi.clone(), vec![c]].concat()),
            });
        }
    }
    let star = sorted([w1s, w2s].concat());
    let rest_vertices = rest(&h, &star);
    let core = anti_complete_core(&h.induced_subgraph(&rest_vertices).expect("vertices exist"), &cycle)?;
    let tail = Node::split(vec![(star, bipartite_free("P2+P3")), (rest_vertices, core)]);
    Ok(Node::chain(ops, tail))
}

/// The remaining reduction once only the first two attachment sets are
/// nonempty and they are anti-complete to each other.
fn anti_complete_core(g: &Graph, cycle: &[Vertex]) -> Result<Node, CertifyError> {
    let delete_cycle = Op::delete(cycle.to_vec(), Justification::CycleVertices { r: 4 });
    let a = Around::of(g, cycle)?;
    let x0 = a.x0(g);
    if x0.is_empty() {
        return Ok(Node::step(delete_cycle, bipartite_free("P2+P3")));
    }
    if let Some(y) = a.v_all().into_iter().find(|&y| neighbours_in(g, y, &x0).len() >= 2) {
        let h = g.delete_vertices(&[y]).expect("vertex exists");
        let b = Around::of(&h, cycle)?;
        if !b.x0(&h).is_empty() {
            return Err(internal(format!("deleting {y} left vertices seeing both sides")));
        }
        return Ok(Node::chain(
            vec![Op::delete(vec![y], Justification::SharedNeighbour), delete_cycle],
            bipartite_free("P2+P3"),
        ));
    }
    let mut ops = Vec::new();
    let mut cross = Vec::new();
    for (wi, vj) in [(&a.w[1], &a.v[0]), (&a.w[0], &a.v[1])] {
        let bad: Vec<Vertex> = wi
            .iter()
            .copied()
            .filter(|&u| !neighbours_in(g, u, vj).is_empty())
            .collect();
        if bad.len() > 1 {
            return Err(internal(format!("several cross attachments {bad:?}")));
        }
        cross.extend(bad);
    }
    let cross = sorted(cross);
    delete_if_any(&mut ops, cross.clone(), Justification::CrossAttachments);
    ops.push(delete_cycle);
    let h = g
        .delete_vertices(&[cross.clone(), cycle.to_vec()].concat())
        .expect("vertices exist");
    let keep = |s: &[Vertex]| -> Vec<Vertex> { s.iter().copied().filter(|u| !cross.contains(u)).collect() };

    let vp: Vec<Vec<Vertex>> =
        a.v.iter()
            .map(|vi| {
                vi.iter()
                    .copied()
                    .filter(|&y| !neighbours_in(&h, y, &x0).is_empty())
                    .collect()
            })
            .collect();
    let mut d = Vec::new();
    let mut p = Vec::new();
    for i in 0..2 {
        let other = &a.v[1 - i];
        let xi: Vec<Vertex> =
            a.x.iter()
                .copied()
                .filter(|&u| !neighbours_in(&h, u, &a.v[i]).is_empty() && neighbours_in(&h, u, other).is_empty())
                .collect();
        let mut di = Vec::new();
        let mut pi = Vec::new();
        for u in keep(&a.w[i]).into_iter().chain(xi) {
            match neighbours_in(&h, u, &a.v[i])[..] {
                [] => {}
                [y] => {
                    if vp[i].contains(&y) {
                        pi.push(u);
                    }
                }
                _ => di.push(u),
            }
        }
        d.push(sorted(di));
        p.push(pi);
    }
    let mut complement = |x: &[Vertex], y: Vec<Vertex>| {
        if !x.is_empty() && !y.is_empty() {
            ops.push(Op::BipartiteComplement { x: x.to_vec(), y });
        }
    };
    complement(&vp[0], d[0].clone());
    complement(&vp[1], d[1].clone());
    complement(&vp[0], a.v[1].iter().copied().filter(|y| !vp[1].contains(y)).collect());
    complement(&vp[1], a.v[0].iter().copied().filter(|y| !vp[0].contains(y)).collect());

    let part1 = sorted([p.concat(), vp.concat(), x0].concat());
    let part2 = rest(&h, &part1);
    let mut forest_ops = Vec::new();
    if !vp[0].is_empty() && !vp[1].is_empty() {
        forest_ops.push(Op::BipartiteComplement {
            x: vp[0].clone(),
            y: vp[1].clone(),
        });
    }
    let tail = Node::split(vec![
        (part1, Node::chain(forest_ops, Node::Leaf(BaseLeaf::Forest))),
        (part2, bipartite_free("P2+P3")),
    ]);
    Ok(Node::chain(ops, tail))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::{named, verify_certificate};

    fn certified(g: &Graph) -> Certificate {
        let c = certify_diamond_p2p3(g).unwrap();
        let report = verify_certificate(g, &c);
        assert!(report.ok(), "{:?}", report.failures);
        c
    }

    #[test]
    fn chordal_member_is_a_leaf() {
        let c = certified(&named("co(P1+P3)"));
        assert_eq!(c.tree, Node::Leaf(BaseLeaf::ChordalDiamondFree));
    }

    #[test]
    fn complete_graph_takes_the_clique_path() {
        let c = certified(&named("K6"));
        assert!(matches!(
            c.tree.leaves()[..],
            [BaseLeaf::BipartiteHFree(_)] | [BaseLeaf::DisjointCliques]
        ));
    }

    #[test]
    fn clique_with_two_outside_cliques() {
        // K5 on 0..5 and edges 5-6, 7-8; vertex 0 sees 5 and 7, vertex 1
        // sees 6 and 8.
        let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                edges.push((a, b));
            }
        }
        edges.extend([(5, 6), (7, 8), (0, 5), (0, 7), (1, 6), (1, 8)]);
        let g = Graph::new(10, &edges).unwrap();
        let c = certified(&g);
        assert_eq!(c.tree.deletions()[0].0, &[0, 1]);
    }

    #[test]
    fn five_cycle_terminates() {
        let c = certified(&named("C5"));
        assert_eq!(c.tree.leaves(), vec![&BaseLeaf::MaxDegree2]);
    }

    #[test]
    fn four_and_six_cycles() {
        certified(&named("C4"));
        certified(&named("C6+P1"));
        let k23 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 1), (4, 3)]).unwrap();
        certified(&k23);
    }
}
