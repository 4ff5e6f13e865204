//! Independent certificate replay.

use std::fmt;

use super::model::{BaseLeaf, Certificate, Fingerprint, Node, Op};
use crate::graph::{contains_induced, Graph, Vertex};
use crate::kexpr::verify_expression;
use crate::recognition::is_chordal;

/// One failed check, located by its path from the root (`step`, then child
/// indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub path: String,
    pub reason: String,
    /// Induced subgraph showing a leaf is outside its class, when available.
    pub witness: Option<Vec<Vertex>>,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.reason)?;
        if let Some(w) = &self.witness {
            write!(f, " (witness {w:?})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub failures: Vec<Failure>,
    pub leaves_checked: usize,
    pub steps_checked: usize,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, path: &str, reason: impl Into<String>, witness: Option<Vec<Vertex>>) {
        self.failures.push(Failure {
            path: path.to_string(),
            reason: reason.into(),
            witness,
        });
    }
}

/// Replays `cert` on `g` and checks every step and leaf.
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> VerifyReport {
    let mut report = VerifyReport::default();
    let fp = Fingerprint::of(g);
    if fp != cert.root {
        report.fail(
            "root",
            format!("fingerprint mismatch: graph has n={} m={} hash={}", fp.n, fp.m, fp.hash),
            None,
        );
    }
    walk(g.clone(), &cert.tree, "step", &mut report, &mut |_, _| {});
    report
}

/// The graph reaching each leaf, in left-to-right order. Replay stops
/// descending below any step that cannot be applied.
pub fn replay_leaves(g: &Graph, tree: &Node) -> Vec<(BaseLeaf, Graph)> {
    let mut out = Vec::new();
    let mut report = VerifyReport::default();
    walk(g.clone(), tree, "step", &mut report, &mut |leaf, h| {
        out.push((leaf.clone(), h.clone()))
    });
    out
}

fn walk(g: Graph, node: &Node, path: &str, report: &mut VerifyReport, on_leaf: &mut dyn FnMut(&BaseLeaf, &Graph)) {
    match node {
        Node::Leaf(leaf) => {
            report.leaves_checked += 1;
            if let Err((reason, witness)) = check_leaf(&g, leaf) {
                report.fail(path, reason, witness);
            }
            on_leaf(leaf, &g);
        }
        Node::Step { op, child } => {
            report.steps_checked += 1;
            match apply(&g, op) {
                Ok(h) => walk(h, child, &format!("{path}/0"), report, on_leaf),
                Err(reason) => report.fail(path, reason, None),
            }
        }
        Node::Split { parts, children } => {
            report.steps_checked += 1;
            match check_split(&g, parts, children.len()) {
                Ok(()) => {
                    for (i, (part, child)) in parts.iter().zip(children).enumerate() {
                        let h = g.induced_subgraph(part).expect("parts checked");
                        walk(h, child, &format!("{path}/{i}"), report, on_leaf);
                    }
                }
                Err(reason) => report.fail(path, reason, None),
            }
        }
    }
}

fn check_vertices(g: &Graph, set: &[Vertex]) -> Result<(), String> {
    let mut seen = g.empty_set();
    for &v in set {
        if !g.contains(v) {
            return Err(format!("vertex {v} does not exist"));
        }
        if seen.put(v) {
            return Err(format!("vertex {v} listed twice"));
        }
    }
    Ok(())
}

fn apply(g: &Graph, op: &Op) -> Result<Graph, String> {
    match op {
        Op::DeleteVertices {
            set,
            justification,
            bound,
        } => {
            check_vertices(g, set)?;
            if *bound != justification.bound() {
                return Err(format!(
                    "stated bound {bound} differs from {} for {justification:?}",
                    justification.bound()
                ));
            }
            if set.len() > *bound {
                return Err(format!("deletes {} vertices, bound is {bound}", set.len()));
            }
            g.delete_vertices(set).map_err(|e| e.to_string())
        }
        Op::SubgraphComplement { set } => {
            check_vertices(g, set)?;
            g.subgraph_complement(set).map_err(|e| e.to_string())
        }
        Op::BipartiteComplement { x, y } => {
            check_vertices(g, x)?;
            check_vertices(g, y)?;
            g.bipartite_complement(x, y).map_err(|e| e.to_string())
        }
        Op::PruneDegreeOne => Ok(g.prune_degree_one()),
    }
}

fn check_split(g: &Graph, parts: &[Vec<Vertex>], children: usize) -> Result<(), String> {
    if parts.len() != children {
        return Err(format!("{} parts but {children} children", parts.len()));
    }
    let all: Vec<Vertex> = parts.iter().flatten().copied().collect();
    check_vertices(g, &all)?;
    if all.len() != g.n() {
        return Err(format!("parts cover {} of {} vertices", all.len(), g.n()));
    }
    let mut part_of = vec![usize::MAX; g.universe()];
    for (i, p) in parts.iter().enumerate() {
        for &v in p {
            part_of[v] = i;
        }
    }
    if let Some((u, v)) = g.edges().into_iter().find(|&(u, v)| part_of[u] != part_of[v]) {
        return Err(format!("edge {u}-{v} joins two parts"));
    }
    Ok(())
}

type LeafResult = Result<(), (String, Option<Vec<Vertex>>)>;

fn forbid(g: &Graph, spec: &str) -> LeafResult {
    match contains_induced(g, &super::named(spec)) {
        Some(e) => Err((format!("contains an induced {spec}"), Some(e.map))),
        None => Ok(()),
    }
}

/// Checks membership of the leaf graph in the claimed base class.
pub(crate) fn check_leaf(g: &Graph, leaf: &BaseLeaf) -> LeafResult {
    match leaf {
        BaseLeaf::DisjointCliques => forbid(g, "P3"),
        BaseLeaf::MaxDegree2 => match g.vertices().find(|&v| g.degree(v) > 2) {
            Some(v) => Err((format!("vertex {v} has degree {}", g.degree(v)), None)),
            None => Ok(()),
        },
        BaseLeaf::Forest => {
            if g.is_forest() {
                Ok(())
            } else {
                Err(("graph has a cycle".into(), None))
            }
        }
        BaseLeaf::BipartiteHFree(h) => {
            if !g.is_bipartite() {
                return Err(("graph is not bipartite".into(), None));
            }
            let hg = h.realize().map_err(|e| (e.to_string(), None))?;
            match contains_induced(g, &hg) {
                Some(e) => Err((format!("contains an induced {h}"), Some(e.map))),
                None => Ok(()),
            }
        }
        BaseLeaf::ChordalDiamondFree => {
            if let Some(hole) = is_chordal(g).hole() {
                return Err(("graph has a hole".into(), Some(hole.to_vec())));
            }
            forbid(g, "diamond")
        }
        BaseLeaf::K3K13P2Free => {
            forbid(g, "K3")?;
            forbid(g, "K1,3+P2")
        }
        BaseLeaf::ExplicitExpression(e) => {
            if g.is_empty() || verify_expression(e, g) {
                Ok(())
            } else {
                Err(("expression does not evaluate to the leaf graph".into(), None))
            }
        }
    }
}
