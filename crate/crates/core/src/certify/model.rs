//! Certificate data model and its JSON form.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use super::CertifyError;
use crate::graph::{parse_spec, write_edge_list, Graph, NamedGraphSpec, Vertex};
use crate::kexpr::{parse_kexpr, KExpr};

pub const SCHEMA: &str = "v1";

/// Identifies the graph a certificate was issued for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub n: usize,
    pub m: usize,
    /// SHA-256 of the canonical text of the graph, hex encoded.
    pub hash: String,
}

impl Fingerprint {
    pub fn of(g: &Graph) -> Fingerprint {
        let text = match write_edge_list(g) {
            Ok(t) => t,
            Err(_) => {
                let ids: Vec<String> = g.vertices().map(|v| v.to_string()).collect();
                let mut t = format!("{} {}\nV {}\n", g.n(), g.m(), ids.join(" "));
                for (u, v) in g.edges() {
                    t.push_str(&format!("{u} {v}\n"));
                }
                t
            }
        };
        Fingerprint {
            n: g.n(),
            m: g.m(),
            hash: hex::encode(Sha256::digest(text.as_bytes())),
        }
    }
}

/// Why a set of vertices may be deleted, with the size bound that applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Justification {
    /// Cliques of a `k`-clique cover with fewer than `k + 7` vertices.
    SmallCliques { k: usize },
    /// Vertices with two neighbours in another clique, one per ordered pair
    /// of the `k` merged cliques.
    ExceptionalVertices { k: usize },
    /// Vertices adjacent to two non-consecutive vertices of an induced odd
    /// `C_r`; at most nine for each such pair.
    CycleChordNeighbours { r: usize },
    /// The vertices of an induced `C_r`.
    CycleVertices { r: usize },
    /// Separators between each of `cliques` cliques and each of
    /// `independent_sets` independent sets, four vertices each.
    Separators { cliques: usize, independent_sets: usize },
    /// At most one vertex per non-consecutive pair of an induced `C_r`.
    NonConsecutivePairs { r: usize },
    /// Vertices of a maximal clique with neighbours outside it.
    CliqueAttachments,
    /// Vertices adjacent to two consecutive vertices of an induced `C_r`;
    /// at most four per pair.
    ConsecutivePairCliques { r: usize },
    /// At most one vertex per cycle vertex of an induced `C_r` whose only
    /// cycle neighbour it is.
    SingleNeighbourVertices { r: usize },
    /// Sets with fewer than three vertices among `sets` sets.
    SmallSets { sets: usize },
    /// Single-neighbour vertices at two opposite vertices of a `C_4`.
    OppositeAttachments,
    /// A vertex with two neighbours among the common neighbours of both sides.
    SharedNeighbour,
    /// Single-neighbour vertices adjacent to the wrong side of a `C_4`.
    CrossAttachments,
}

impl Justification {
    pub fn bound(&self) -> usize {
        match *self {
            Justification::SmallCliques { k } => k * (k + 6),
            Justification::ExceptionalVertices { k } => k * k.saturating_sub(1),
            Justification::CycleChordNeighbours { r } => 9 * r * r.saturating_sub(3) / 2,
            Justification::CycleVertices { r } => r,
            Justification::Separators {
                cliques,
                independent_sets,
            } => 4 * cliques * independent_sets,
            Justification::NonConsecutivePairs { r } => r * r.saturating_sub(3) / 2,
            Justification::CliqueAttachments => 2,
            Justification::ConsecutivePairCliques { r } => 4 * r,
            Justification::SingleNeighbourVertices { r } => r,
            Justification::SmallSets { sets } => 2 * sets,
            Justification::OppositeAttachments => 2,
            Justification::SharedNeighbour => 1,
            Justification::CrossAttachments => 2,
        }
    }

    fn to_json(self) -> Value {
        let (kind, params): (&str, Vec<(&str, usize)>) = match self {
            Justification::SmallCliques { k } => ("small_cliques", vec![("k", k)]),
            Justification::ExceptionalVertices { k } => ("exceptional_vertices", vec![("k", k)]),
            Justification::CycleChordNeighbours { r } => ("cycle_chord_neighbours", vec![("r", r)]),
            Justification::CycleVertices { r } => ("cycle_vertices", vec![("r", r)]),
            Justification::Separators {
                cliques,
                independent_sets,
            } => (
                "separators",
                vec![("cliques", cliques), ("independent_sets", independent_sets)],
            ),
            Justification::NonConsecutivePairs { r } => ("non_consecutive_pairs", vec![("r", r)]),
            Justification::CliqueAttachments => ("clique_attachments", vec![]),
            Justification::ConsecutivePairCliques { r } => ("consecutive_pair_cliques", vec![("r", r)]),
            Justification::SingleNeighbourVertices { r } => ("single_neighbour_vertices", vec![("r", r)]),
            Justification::SmallSets { sets } => ("small_sets", vec![("sets", sets)]),
            Justification::OppositeAttachments => ("opposite_attachments", vec![]),
            Justification::SharedNeighbour => ("shared_neighbour", vec![]),
            Justification::CrossAttachments => ("cross_attachments", vec![]),
        };
        let mut m = Map::new();
        m.insert("kind".into(), kind.into());
        for (k, v) in params {
            m.insert(k.into(), v.into());
        }
        Value::Object(m)
    }

    fn from_json(v: &Value) -> Result<Justification, CertifyError> {
        let p = |name: &str| uint(v, name);
        Ok(match str_field(v, "kind")? {
            "small_cliques" => Justification::SmallCliques { k: p("k")? },
            "exceptional_vertices" => Justification::ExceptionalVertices { k: p("k")? },
            "cycle_chord_neighbours" => Justification::CycleChordNeighbours { r: p("r")? },
            "cycle_vertices" => Justification::CycleVertices { r: p("r")? },
            "separators" => Justification::Separators {
                cliques: p("cliques")?,
                independent_sets: p("independent_sets")?,
            },
            "non_consecutive_pairs" => Justification::NonConsecutivePairs { r: p("r")? },
            "clique_attachments" => Justification::CliqueAttachments,
            "consecutive_pair_cliques" => Justification::ConsecutivePairCliques { r: p("r")? },
            "single_neighbour_vertices" => Justification::SingleNeighbourVertices { r: p("r")? },
            "small_sets" => Justification::SmallSets { sets: p("sets")? },
            "opposite_attachments" => Justification::OppositeAttachments,
            "shared_neighbour" => Justification::SharedNeighbour,
            "cross_attachments" => Justification::CrossAttachments,
            other => return Err(json_err(format!("unknown justification {other:?}"))),
        })
    }
}

/// A reduction applied to the current graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Op {
    DeleteVertices {
        set: Vec<Vertex>,
        justification: Justification,
        bound: usize,
    },
    SubgraphComplement {
        set: Vec<Vertex>,
    },
    BipartiteComplement {
        x: Vec<Vertex>,
        y: Vec<Vertex>,
    },
    PruneDegreeOne,
}

impl Op {
    pub fn delete(set: Vec<Vertex>, justification: Justification) -> Op {
        Op::DeleteVertices {
            set,
            bound: justification.bound(),
            justification,
        }
    }
}

/// Base classes a leaf graph can be checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseLeaf {
    DisjointCliques,
    MaxDegree2,
    Forest,
    BipartiteHFree(NamedGraphSpec),
    ChordalDiamondFree,
    K3K13P2Free,
    ExplicitExpression(KExpr),
}

impl BaseLeaf {
    pub fn name(&self) -> &'static str {
        match self {
            BaseLeaf::DisjointCliques => "disjoint_cliques",
            BaseLeaf::MaxDegree2 => "max_degree_2",
            BaseLeaf::Forest => "forest",
            BaseLeaf::BipartiteHFree(_) => "bipartite_h_free",
            BaseLeaf::ChordalDiamondFree => "chordal_diamond_free",
            BaseLeaf::K3K13P2Free => "k3_k13p2_free",
            BaseLeaf::ExplicitExpression(_) => "explicit_expression",
        }
    }

    /// Clique-width bound known for the class, where one exists.
    pub fn width_bound(&self) -> Option<usize> {
        match self {
            BaseLeaf::DisjointCliques => Some(2),
            BaseLeaf::Forest | BaseLeaf::ChordalDiamondFree => Some(3),
            BaseLeaf::MaxDegree2 => Some(4),
            BaseLeaf::ExplicitExpression(e) => Some(e.width()),
            BaseLeaf::BipartiteHFree(_) | BaseLeaf::K3K13P2Free => None,
        }
    }
}

/// A node of the certificate tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    Step {
        op: Op,
        child: Box<Node>,
    },
    /// Vertex sets that are unions of components, each with its own subtree.
    Split {
        parts: Vec<Vec<Vertex>>,
        children: Vec<Node>,
    },
    Leaf(BaseLeaf),
}

impl Node {
    pub fn step(op: Op, child: Node) -> Node {
        Node::Step {
            op,
            child: Box::new(child),
        }
    }

    /// Applies `ops` in order above `tail`.
    pub fn chain(ops: Vec<Op>, tail: Node) -> Node {
        ops.into_iter().rev().fold(tail, |acc, op| Node::step(op, acc))
    }

    /// Splits into the nonempty parts; a single part needs no split node.
    pub fn split(parts: Vec<(Vec<Vertex>, Node)>) -> Node {
        let mut parts: Vec<_> = parts.into_iter().filter(|(p, _)| !p.is_empty()).collect();
        match parts.len() {
            0 => Node::Leaf(BaseLeaf::DisjointCliques),
            1 => parts.pop().expect("one part").1,
            _ => {
                let (parts, children) = parts.into_iter().unzip();
                Node::Split { parts, children }
            }
        }
    }

    /// Every `DeleteVertices` operation in the tree.
    pub fn deletions(&self) -> Vec<(&[Vertex], Justification, usize)> {
        let mut out = Vec::new();
        self.collect_deletions(&mut out);
        out
    }

    fn collect_deletions<'a>(&'a self, out: &mut Vec<(&'a [Vertex], Justification, usize)>) {
        match self {
            Node::Step { op, child } => {
                if let Op::DeleteVertices {
                    set,
                    justification,
                    bound,
                } = op
                {
                    out.push((set, *justification, *bound));
                }
                child.collect_deletions(out);
            }
            Node::Split { children, .. } => children.iter().for_each(|c| c.collect_deletions(out)),
            Node::Leaf(_) => {}
        }
    }

    /// Every leaf in the tree, left to right.
    pub fn leaves(&self) -> Vec<&BaseLeaf> {
        match self {
            Node::Step { child, .. } => child.leaves(),
            Node::Split { children, .. } => children.iter().flat_map(Node::leaves).collect(),
            Node::Leaf(l) => vec![l],
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Node::Leaf(leaf) => {
                let mut m = Map::new();
                m.insert("base".into(), leaf.name().into());
                match leaf {
                    BaseLeaf::BipartiteHFree(h) => {
                        m.insert("h".into(), h.to_string().into());
                    }
                    BaseLeaf::ExplicitExpression(e) => {
                        m.insert("expr".into(), e.to_string().into());
                    }
                    _ => {}
                }
                Value::Object(m)
            }
            Node::Split { parts, children } => json!({
                "op": "split_components",
                "parts": parts,
                "children": children.iter().map(Node::to_json).collect::<Vec<_>>(),
            }),
            Node::Step { op, child } => {
                let mut m = Map::new();
                match op {
                    Op::DeleteVertices {
                        set,
                        justification,
                        bound,
                    } => {
                        m.insert("op".into(), "delete_vertices".into());
                        m.insert("set".into(), json!(set));
                        m.insert("justification".into(), justification.to_json());
                        m.insert("bound".into(), json!(bound));
                    }
                    Op::SubgraphComplement { set } => {
                        m.insert("op".into(), "subgraph_complement".into());
                        m.insert("set".into(), json!(set));
                    }
                    Op::BipartiteComplement { x, y } => {
                        m.insert("op".into(), "bipartite_complement".into());
                        m.insert("x".into(), json!(x));
                        m.insert("y".into(), json!(y));
                    }
                    Op::PruneDegreeOne => {
                        m.insert("op".into(), "prune_degree_one".into());
                    }
                }
                m.insert("children".into(), json!([child.to_json()]));
                Value::Object(m)
            }
        }
    }

    fn from_json(v: &Value) -> Result<Node, CertifyError> {
        if let Some(base) = v.get("base") {
            let base = base.as_str().ok_or_else(|| json_err("base must be a string"))?;
            let leaf = match base {
                "disjoint_cliques" => BaseLeaf::DisjointCliques,
                "max_degree_2" => BaseLeaf::MaxDegree2,
                "forest" => BaseLeaf::Forest,
                "bipartite_h_free" => BaseLeaf::BipartiteHFree(
                    parse_spec(str_field(v, "h")?).map_err(|e| json_err(format!("bad h: {e}")))?,
                ),
                "chordal_diamond_free" => BaseLeaf::ChordalDiamondFree,
                "k3_k13p2_free" => BaseLeaf::K3K13P2Free,
                "explicit_expression" => BaseLeaf::ExplicitExpression(
                    parse_kexpr(str_field(v, "expr")?).map_err(|e| json_err(format!("bad expr: {e}")))?,
                ),
                other => return Err(json_err(format!("unknown base {other:?}"))),
            };
            return Ok(Node::Leaf(leaf));
        }
        let children: Vec<Node> = v
            .get("children")
            .and_then(Value::as_array)
            .ok_or_else(|| json_err("missing children"))?
            .iter()
            .map(Node::from_json)
            .collect::<Result<_, _>>()?;
        let op = str_field(v, "op")?;
        if op == "split_components" {
            let parts = v
                .get("parts")
                .and_then(Value::as_array)
                .ok_or_else(|| json_err("missing parts"))?
                .iter()
                .map(vertex_list)
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(Node::Split { parts, children });
        }
        let [child]: [Node; 1] = children
            .try_into()
            .map_err(|_| json_err(format!("{op} needs exactly one child")))?;
        let op = match op {
            "delete_vertices" => Op::DeleteVertices {
                set: vertex_list(field(v, "set")?)?,
                justification: Justification::from_json(field(v, "justification")?)?,
                bound: uint(v, "bound")?,
            },
            "subgraph_complement" => Op::SubgraphComplement {
                set: vertex_list(field(v, "set")?)?,
            },
            "bipartite_complement" => Op::BipartiteComplement {
                x: vertex_list(field(v, "x")?)?,
                y: vertex_list(field(v, "y")?)?,
            },
            "prune_degree_one" => Op::PruneDegreeOne,
            other => return Err(json_err(format!("unknown op {other:?}"))),
        };
        Ok(Node::step(op, child))
    }
}

/// A replayable reduction tree for one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub root: Fingerprint,
    pub tree: Node,
}

impl Certificate {
    pub fn new(g: &Graph, tree: Node) -> Certificate {
        Certificate {
            root: Fingerprint::of(g),
            tree,
        }
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "root": {"n": self.root.n, "m": self.root.m, "hash": self.root.hash},
            "step": self.tree.to_json(),
        })
    }

    /// Pretty-printed JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value()).expect("values serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Certificate, CertifyError> {
        let v: Value = serde_json::from_str(text).map_err(|e| json_err(e.to_string()))?;
        let schema = str_field(&v, "schema")?;
        if schema != SCHEMA {
            return Err(json_err(format!("unsupported schema {schema:?}")));
        }
        let root = field(&v, "root")?;
        Ok(Certificate {
            root: Fingerprint {
                n: uint(root, "n")?,
                m: uint(root, "m")?,
                hash: str_field(root, "hash")?.to_string(),
            },
            tree: Node::from_json(field(&v, "step")?)?,
        })
    }
}

fn json_err(msg: impl Into<String>) -> CertifyError {
    CertifyError::Json(msg.into())
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value, CertifyError> {
    v.get(name).ok_or_else(|| json_err(format!("missing field {name:?}")))
}

fn str_field<'a>(v: &'a Value, name: &str) -> Result<&'a str, CertifyError> {
    field(v, name)?
        .as_str()
        .ok_or_else(|| json_err(format!("field {name:?} must be a string")))
}

fn uint(v: &Value, name: &str) -> Result<usize, CertifyError> {
    field(v, name)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| json_err(format!("field {name:?} must be a non-negative integer")))
}

fn vertex_list(v: &Value) -> Result<Vec<Vertex>, CertifyError> {
    v.as_array()
        .ok_or_else(|| json_err("expected an array of vertex ids"))?
        .iter()
        .map(|x| x.as_u64().map(|x| x as Vertex).ok_or_else(|| json_err("bad vertex id")))
        .collect()
}
