//! k-expressions: construction, evaluation, text format, an exact
//! clique-width solver for small graphs and explicit expressions for
//! disjoint cliques, forests and graphs of maximum degree two.

mod build;
mod solver;
mod text;

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::graph::{are_isomorphic, Graph, Vertex};

pub use build::{expr_disjoint_cliques, expr_forest, expr_max_degree_2};
pub use solver::{clique_width_exact, clique_width_exact_within, K_LIMIT, SOLVER_LIMIT};
pub use text::{parse_kexpr, print_kexpr};

pub type Label = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KexprError {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("join needs two different labels, got {0} twice")]
    JoinSameLabel(Label),
    #[error("labels must be positive")]
    ZeroLabel,
    #[error("graph has {n} vertices; the solver limit is {limit}")]
    SizeLimit { n: usize, limit: usize },
    #[error("kmax {k} exceeds the solver limit {limit}")]
    KLimit { k: usize, limit: usize },
    #[error("the empty graph has no k-expression")]
    EmptyGraph,
    #[error("component is not a clique: induced path {0:?}")]
    NotDisjointCliques(Vec<Vertex>),
    #[error("graph has a cycle {0:?}")]
    HasCycle(Vec<Vertex>),
    #[error("vertex {0} has degree above two")]
    DegreeAboveTwo(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KExpr {
    Create(Label),
    Union(Box<KExpr>, Box<KExpr>),
    Join(Label, Label, Box<KExpr>),
    Rename(Label, Label, Box<KExpr>),
}

/// A graph whose vertex `v` carries `labels[v]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledGraph {
    pub graph: Graph,
    pub labels: Vec<Label>,
}

impl KExpr {
    pub fn create(l: Label) -> KExpr {
        KExpr::Create(l)
    }

    pub fn union(a: KExpr, b: KExpr) -> KExpr {
        KExpr::Union(Box::new(a), Box::new(b))
    }

    pub fn join(i: Label, j: Label, e: KExpr) -> KExpr {
        KExpr::Join(i, j, Box::new(e))
    }

    pub fn rename(i: Label, j: Label, e: KExpr) -> KExpr {
        KExpr::Rename(i, j, Box::new(e))
    }

    /// Left-nested union of a nonempty list.
    pub fn union_all(parts: Vec<KExpr>) -> Option<KExpr> {
        parts.into_iter().reduce(KExpr::union)
    }

    /// Number of distinct labels occurring anywhere in the expression.
    pub fn width(&self) -> usize {
        let mut labels = BTreeSet::new();
        self.collect_labels(&mut labels);
        labels.len()
    }

    fn collect_labels(&self, out: &mut BTreeSet<Label>) {
        match self {
            KExpr::Create(l) => {
                out.insert(*l);
            }
            KExpr::Union(a, b) => {
                a.collect_labels(out);
                b.collect_labels(out);
            }
            KExpr::Join(i, j, e) | KExpr::Rename(i, j, e) => {
                out.insert(*i);
                out.insert(*j);
                e.collect_labels(out);
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            KExpr::Create(_) => 1,
            KExpr::Union(a, b) => a.vertex_count() + b.vertex_count(),
            KExpr::Join(_, _, e) | KExpr::Rename(_, _, e) => e.vertex_count(),
        }
    }

    /// Evaluates the expression. Vertices are numbered `0..n` in the
    /// left-to-right order of their `Create` leaves.
    pub fn eval(&self) -> Result<LabelledGraph, KexprError> {
        let n = self.vertex_count();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        let mut labels = Vec::with_capacity(n);
        self.eval_into(&mut adj, &mut labels)?;
        let mut edges = Vec::new();
        for (u, row) in adj.iter().enumerate() {
            edges.extend(row.ones().filter(|&v| u < v).map(|v| (u, v)));
        }
        Ok(LabelledGraph {
            graph: Graph::new(n, &edges).expect("evaluated edges are valid"),
            labels,
        })
    }

    fn eval_into(&self, adj: &mut [FixedBitSet], labels: &mut Vec<Label>) -> Result<(), KexprError> {
        let lo = labels.len();
        match self {
            KExpr::Create(l) => {
                if *l == 0 {
                    return Err(KexprError::ZeroLabel);
                }
                labels.push(*l);
            }
            KExpr::Union(a, b) => {
                a.eval_into(adj, labels)?;
                b.eval_into(adj, labels)?;
            }
            KExpr::Join(i, j, e) => {
                check_labels(*i, *j)?;
                if i == j {
                    return Err(KexprError::JoinSameLabel(*i));
                }
                e.eval_into(adj, labels)?;
                let hi = labels.len();
                let is: Vec<usize> = (lo..hi).filter(|&v| labels[v] == *i).collect();
                let js: Vec<usize> = (lo..hi).filter(|&v| labels[v] == *j).collect();
                for &u in &is {
                    for &v in &js {
                        adj[u].insert(v);
                        adj[v].insert(u);
                    }
                }
            }
            KExpr::Rename(i, j, e) => {
                check_labels(*i, *j)?;
                e.eval_into(adj, labels)?;
                for l in &mut labels[lo..] {
                    if *l == *i {
                        *l = *j;
                    }
                }
            }
        }
        Ok(())
    }
}

fn check_labels(i: Label, j: Label) -> Result<(), KexprError> {
    if i == 0 || j == 0 {
        Err(KexprError::ZeroLabel)
    } else {
        Ok(())
    }
}

impl fmt::Display for KExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::print_kexpr(self))
    }
}

/// True when `e` evaluates to a graph isomorphic to `g`.
pub fn verify_expression(e: &KExpr, g: &Graph) -> bool {
    match e.eval() {
        Ok(lg) => are_isomorphic(&lg.graph, g),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_two_labels() -> KExpr {
        let mut e = KExpr::create(1);
        for _ in 0..3 {
            e = KExpr::rename(2, 1, KExpr::join(1, 2, KExpr::union(e, KExpr::create(2))));
        }
        e
    }

    #[test]
    fn evaluates_basic_operations() {
        let k2 = KExpr::join(1, 2, KExpr::union(KExpr::create(1), KExpr::create(2)));
        assert_eq!(k2.eval().unwrap().graph, Graph::complete(2));
        let k1 = KExpr::create(1).eval().unwrap();
        assert_eq!(k1.graph, Graph::edgeless(1));
        assert_eq!(k1.labels, vec![1]);
        let k4 = k4_two_labels();
        assert_eq!(k4.width(), 2);
        assert_eq!(k4.eval().unwrap().graph, Graph::complete(4));
        assert_eq!(k4.eval().unwrap().labels, vec![1; 4]);
    }

    #[test]
    fn join_same_label_is_an_eval_error() {
        let e = KExpr::join(1, 1, KExpr::create(1));
        assert_eq!(e.eval(), Err(KexprError::JoinSameLabel(1)));
        assert!(!verify_expression(&e, &Graph::edgeless(1)));
    }

    #[test]
    fn verification() {
        assert!(verify_expression(&k4_two_labels(), &Graph::complete(4)));
        assert!(verify_expression(&KExpr::create(1), &Graph::edgeless(1)));
        assert!(!verify_expression(&k4_two_labels(), &Graph::cycle(4)));
    }

    #[test]
    fn join_only_touches_its_subtree() {
        let left = KExpr::union(KExpr::create(1), KExpr::create(2));
        let e = KExpr::union(KExpr::join(1, 2, left), KExpr::create(2));
        let g = e.eval().unwrap().graph;
        assert_eq!(g.edges(), vec![(0, 1)]);
    }
}
