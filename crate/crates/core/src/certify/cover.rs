//! Reduction of a `(diamond, 2P2+P4)`-free graph with a small clique cover.

use fixedbitset::FixedBitSet;

use super::model::{BaseLeaf, Certificate, Justification, Node, Op};
use super::{find, named, require_free, sorted, CertifyError};
use crate::graph::{Embedding, Graph, Vertex};

/// An induced copy of a forbidden graph found while reducing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreenessWitness {
    pub forbidden: String,
    pub embedding: Embedding,
}

impl FreenessWitness {
    pub fn is_valid(&self, g: &Graph) -> bool {
        self.embedding.is_valid(g, &named(&self.forbidden))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduction {
    Certified(Certificate),
    Witness(FreenessWitness),
}

/// Reduces `g` along the clique partition `cover` to at most three cliques
/// with sparse connections, or to disjoint cliques. If a cross edge survives
/// among four or more large cliques, the induced `2P2+P4` through it is
/// returned instead.
pub fn reduce_by_clique_cover(g: &Graph, cover: &[Vec<Vertex>]) -> Result<Reduction, CertifyError> {
    Ok(match reduce_tree(g, cover)? {
        Ok(tree) => Reduction::Certified(Certificate::new(g, tree)),
        Err(w) => Reduction::Witness(w),
    })
}

/// Subtree form, for chaining below other steps.
pub(crate) fn reduce_tree(g: &Graph, cover: &[Vec<Vertex>]) -> Result<Result<Node, FreenessWitness>, CertifyError> {
    let cliques = validate_cover(g, cover)?;
    require_free(g, &["diamond"])?;
    let k = cliques.len();
    let mut ops = Vec::new();

    let (small, mut big): (Vec<_>, Vec<_>) = cliques.into_iter().partition(|c| c.len() < k + 7);
    let small: Vec<Vertex> = sorted(small.concat());
    if !small.is_empty() {
        ops.push(Op::delete(small, Justification::SmallCliques { k }));
    }
    merge_complete_pairs(g, &mut big);

    let kp = big.len();
    let sets: Vec<FixedBitSet> = big.iter().map(|c| g.set_of(c).expect("cover vertices exist")).collect();
    let mut exceptional = Vec::new();
    for (i, yi) in big.iter().enumerate() {
        for (j, sj) in sets.iter().enumerate() {
            if i == j {
                continue;
            }
            let heavy: Vec<Vertex> = yi.iter().copied().filter(|&x| g.degree_into(x, sj) >= 2).collect();
            if heavy.len() > 1 {
                return Err(CertifyError::Internal(format!(
                    "vertices {heavy:?} each have two neighbours in a clique that is not complete to theirs"
                )));
            }
            exceptional.extend(heavy);
        }
    }
    let exceptional = sorted(exceptional);
    if !exceptional.is_empty() {
        ops.push(Op::delete(
            exceptional.clone(),
            Justification::ExceptionalVertices { k: kp },
        ));
    }
    let z: Vec<Vec<Vertex>> = big
        .into_iter()
        .map(|c| {
            c.into_iter()
                .filter(|v| exceptional.binary_search(v).is_err())
                .collect()
        })
        .collect();

    let tail = if kp == 0 {
        Node::Leaf(BaseLeaf::DisjointCliques)
    } else if kp <= 3 {
        for c in &z {
            ops.push(Op::SubgraphComplement { set: c.clone() });
        }
        Node::Leaf(BaseLeaf::MaxDegree2)
    } else {
        if let Some(w) = cross_witness(g, &z) {
            return Ok(Err(w));
        }
        Node::Leaf(BaseLeaf::DisjointCliques)
    };
    if let Some(e) = find(g, "2P2+P4") {
        return Ok(Err(FreenessWitness {
            forbidden: "2P2+P4".into(),
            embedding: e,
        }));
    }
    Ok(Ok(Node::chain(ops, tail)))
}

/// Nonempty cliques of a partition of `V(g)`, each sorted.
fn validate_cover(g: &Graph, cover: &[Vec<Vertex>]) -> Result<Vec<Vec<Vertex>>, CertifyError> {
    let mut seen = g.empty_set();
    let mut out = Vec::new();
    for c in cover.iter().filter(|c| !c.is_empty()) {
        for &v in c {
            if !g.contains(v) {
                return Err(CertifyError::InvalidCover(format!("vertex {v} does not exist")));
            }
            if seen.put(v) {
                return Err(CertifyError::InvalidCover(format!("vertex {v} is covered twice")));
            }
        }
        if !g.is_clique(c) {
            return Err(CertifyError::InvalidCover(format!("{c:?} is not a clique")));
        }
        out.push(sorted(c.clone()));
    }
    if seen.count_ones(..) != g.n() {
        let missing = g.vertices().find(|&v| !seen.contains(v)).expect("some vertex missed");
        return Err(CertifyError::InvalidCover(format!("vertex {missing} is not covered")));
    }
    Ok(out)
}

fn complete_to(g: &Graph, a: &[Vertex], b: &[Vertex]) -> bool {
    a.iter().all(|&x| b.iter().all(|&y| g.has_edge(x, y)))
}

/// Replaces complete pairs by their union until none is left.
fn merge_complete_pairs(g: &Graph, cliques: &mut Vec<Vec<Vertex>>) {
    'outer: loop {
        for i in 0..cliques.len() {
            for j in i + 1..cliques.len() {
                if complete_to(g, &cliques[i], &cliques[j]) {
                    let b = cliques.remove(j);
                    cliques[i] = sorted([cliques[i].clone(), b].concat());
                    continue 'outer;
                }
            }
        }
        return;
    }
}

/// The induced `2P2+P4` built around the least cross edge, where every
/// clique has at least eight vertices and each vertex has at most one
/// neighbour in every other clique.
fn cross_witness(g: &Graph, z: &[Vec<Vertex>]) -> Option<FreenessWitness> {
    let mut clique_of = vec![usize::MAX; g.universe()];
    for (i, c) in z.iter().enumerate() {
        for &v in c {
            clique_of[v] = i;
        }
    }
    let (x6, x7) = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| clique_of[u] != clique_of[v])
        .min()?;
    let (a, b) = (clique_of[x6], clique_of[x7]);
    let pick = |clique: usize, avoid: &[Vertex], count: usize| -> Vec<Vertex> {
        z[clique]
            .iter()
            .copied()
            .filter(|&v| !avoid.contains(&v) && avoid.iter().all(|&u| !g.has_edge(u, v)))
            .take(count)
            .collect()
    };
    let x5 = *pick(a, &[x7], 1).first()?;
    let x8 = *pick(b, &[x5, x6], 1).first()?;
    let mut others = (0..z.len()).filter(|&i| i != a && i != b);
    let (c, d) = (others.next()?, others.next()?);
    let p4 = [x5, x6, x7, x8];
    let x34 = pick(c, &p4, 2);
    let x12 = pick(d, &[x34.clone(), p4.to_vec()].concat(), 2);
    if x34.len() < 2 || x12.len() < 2 {
        return None;
    }
    let map = [x12, x34, p4.to_vec()].concat();
    let w = FreenessWitness {
        forbidden: "2P2+P4".into(),
        embedding: Embedding {
            pattern_vertices: (0..8).collect(),
            map,
        },
    };
    w.is_valid(g).then_some(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::replay_leaves;
    use crate::certify::verify_certificate;

    fn components_cover(g: &Graph) -> Vec<Vec<Vertex>> {
        g.components()
    }

    #[test]
    fn disjoint_cliques() {
        for (spec, deleted) in [("4K8", 32), ("4K11", 0)] {
            let g = named(spec);
            match reduce_by_clique_cover(&g, &components_cover(&g)).unwrap() {
                Reduction::Certified(c) => {
                    assert_eq!(c.tree.leaves(), vec![&BaseLeaf::DisjointCliques]);
                    let total: usize = c.tree.deletions().iter().map(|d| d.0.len()).sum();
                    assert_eq!(total, deleted);
                    assert!(verify_certificate(&g, &c).ok());
                }
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn cross_edge_gives_the_constructed_witness() {
        let base = named("4K11");
        let g = base.with_toggled(&[(0, 11)]).unwrap();
        match reduce_by_clique_cover(&g, &components_cover(&base)).unwrap() {
            Reduction::Witness(w) => {
                assert!(w.is_valid(&g));
                assert_eq!(w.embedding.map[5..7], [0, 11]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn cross_edge_between_small_cliques_still_yields_a_witness() {
        let base = named("4K8");
        let g = base.with_toggled(&[(0, 8)]).unwrap();
        match reduce_by_clique_cover(&g, &components_cover(&base)).unwrap() {
            Reduction::Witness(w) => assert!(w.is_valid(&g)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn three_cliques_with_a_matching() {
        let base = named("3K10");
        let matching: Vec<(Vertex, Vertex)> = (0..10).map(|i| (i, 10 + i)).collect();
        let g = base.with_toggled(&matching).unwrap();
        let cover = components_cover(&base);
        let c = match reduce_by_clique_cover(&g, &cover).unwrap() {
            Reduction::Certified(c) => c,
            other => panic!("unexpected {other:?}"),
        };
        assert!(verify_certificate(&g, &c).ok());
        let leaves = replay_leaves(&g, &c.tree);
        assert_eq!(leaves[0].0, BaseLeaf::MaxDegree2);
        assert!(leaves[0].1.max_degree() <= 2);
    }

    #[test]
    fn small_cliques_are_deleted() {
        let g = named("K3+P2+K11");
        let c = match reduce_by_clique_cover(&g, &components_cover(&g)).unwrap() {
            Reduction::Certified(c) => c,
            other => panic!("unexpected {other:?}"),
        };
        let dels = c.tree.deletions();
        assert_eq!(dels[0].0, &[0, 1, 2, 3, 4]);
        assert_eq!(dels[0].2, 27);
        assert!(verify_certificate(&g, &c).ok());
    }

    #[test]
    fn complete_pairs_merge_and_heavy_vertices_go() {
        // Two cliques complete to each other, plus one vertex of a third
        // clique complete to both.
        let base = named("3K12");
        let mut toggles: Vec<(Vertex, Vertex)> = Vec::new();
        for a in 0..12 {
            for b in 12..24 {
                toggles.push((a, b));
            }
        }
        toggles.extend((0..24).map(|a| (a, 24)));
        let g = base.with_toggled(&toggles).unwrap();
        let c = match reduce_by_clique_cover(&g, &components_cover(&base)).unwrap() {
            Reduction::Certified(c) => c,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(c.tree.deletions()[0].0, &[24]);
        assert!(verify_certificate(&g, &c).ok());
    }

    #[test]
    fn bad_covers_are_rejected() {
        let g = named("P3");
        assert!(matches!(
            reduce_by_clique_cover(&g, &[vec![0, 1, 2]]),
            Err(CertifyError::InvalidCover(_))
        ));
        assert!(matches!(
            reduce_by_clique_cover(&g, &[vec![0, 1]]),
            Err(CertifyError::InvalidCover(_))
        ));
        let d = named("diamond");
        assert!(matches!(
            reduce_by_clique_cover(&d, &[vec![0, 1, 2], vec![3]]),
            Err(CertifyError::NotInClass { .. }) | Err(CertifyError::InvalidCover(_))
        ));
    }
}
