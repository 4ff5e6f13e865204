//! Walls, edge subdivisions, the unbounded `(diamond, P2+P4)`-free family
//! and the isomorphism-preserving reduction into that class.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{read_edge_list, write_edge_list, Graph, GraphError, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("wall height must be at least 2, got {0}")]
    HeightTooSmall(usize),
    #[error("invalid parts: {0}")]
    Parts(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub const PART_NAMES: [&str; 3] = ["A", "B", "C"];

/// A graph with named disjoint vertex sets covering its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionedGraph {
    pub graph: Graph,
    pub parts: BTreeMap<String, Vec<Vertex>>,
}

impl PartitionedGraph {
    pub fn new(graph: Graph, parts: BTreeMap<String, Vec<Vertex>>) -> Result<PartitionedGraph, ConstructionError> {
        let mut seen = BTreeSet::new();
        for (name, set) in &parts {
            if !PART_NAMES.contains(&name.as_str()) {
                return Err(ConstructionError::Parts(format!("unknown part name {name:?}")));
            }
            for &v in set {
                if !graph.contains(v) {
                    return Err(ConstructionError::Parts(format!(
                        "part {name} lists unknown vertex {v}"
                    )));
                }
                if !seen.insert(v) {
                    return Err(ConstructionError::Parts(format!("vertex {v} is in two parts")));
                }
            }
        }
        if seen.len() != graph.n() {
            return Err(ConstructionError::Parts("parts do not cover the vertex set".into()));
        }
        let parts = parts
            .into_iter()
            .map(|(k, mut v)| {
                v.sort_unstable();
                (k, v)
            })
            .collect();
        Ok(PartitionedGraph { graph, parts })
    }

    /// The named part, empty if absent.
    pub fn part(&self, name: &str) -> &[Vertex] {
        self.parts.get(name).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Edge-list text followed by one `PART X: ids` line per part.
    pub fn to_text(&self) -> Result<String, ConstructionError> {
        let mut out = write_edge_list(&self.graph)?;
        for (name, set) in &self.parts {
            write!(out, "PART {name}:").expect("writing to a String");
            for v in set {
                write!(out, " {v}").expect("writing to a String");
            }
            out.push('\n');
        }
        Ok(out)
    }

    pub fn from_text(text: &str) -> Result<PartitionedGraph, ConstructionError> {
        let mut body = String::new();
        let mut parts = BTreeMap::new();
        for line in text.lines() {
            let Some(rest) = line.trim().strip_prefix("PART ") else {
                body.push_str(line);
                body.push('\n');
                continue;
            };
            let (name, ids) = rest
                .split_once(':')
                .ok_or_else(|| ConstructionError::Parts(format!("malformed part line {line:?}")))?;
            let ids = ids
                .split_whitespace()
                .map(|t| t.parse::<Vertex>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| ConstructionError::Parts(format!("bad vertex id in {line:?}")))?;
            if parts.insert(name.trim().to_string(), ids).is_some() {
                return Err(ConstructionError::Parts(format!("part {} listed twice", name.trim())));
            }
        }
        PartitionedGraph::new(read_edge_list(&body)?, parts)
    }
}

/// Results of a named list of structural checks.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub checks: Vec<(String, bool)>,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|(_, pass)| *pass)
    }

    pub fn passed(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|(n, _)| n == name).map(|(_, p)| *p)
    }

    fn record(&mut self, name: &str, failures: Vec<String>) {
        self.checks.push((name.to_string(), failures.is_empty()));
        self.failures
            .extend(failures.into_iter().map(|f| format!("{name}: {f}")));
    }
}

/// The wall of height `h`.
///
/// Rows `y = 0..=h` carry columns `x = 0..=2h+1`; the corner `(0, 0)` is
/// absent, and so is the far end of the top row (`x = 2h+1` for even `h`,
/// `x = 0` for odd `h`). Consecutive row vertices are adjacent, and a rung
/// joins `(x, y)` to `(x, y+1)` when `x + y` is odd. Vertices are numbered
/// row by row. Row lengths are `2h+1, 2h+2, ..., 2h+2, 2h+1`.
pub fn wall(h: usize) -> Result<Graph, ConstructionError> {
    if h < 2 {
        return Err(ConstructionError::HeightTooSmall(h));
    }
    let width = 2 * h + 2;
    let present =
        |x: usize, y: usize| !((x == 0 && y == 0) || (y == h && x == if h.is_multiple_of(2) { width - 1 } else { 0 }));
    let mut id = vec![vec![usize::MAX; width]; h + 1];
    let mut n = 0;
    for (y, row) in id.iter_mut().enumerate() {
        for (x, slot) in row.iter_mut().enumerate() {
            if present(x, y) {
                *slot = n;
                n += 1;
            }
        }
    }
    let mut edges = Vec::new();
    for y in 0..=h {
        for x in 0..width {
            if !present(x, y) {
                continue;
            }
            if x + 1 < width && present(x + 1, y) {
                edges.push((id[y][x], id[y][x + 1]));
            }
            if y < h && (x + y) % 2 == 1 && present(x, y + 1) {
                edges.push((id[y][x], id[y + 1][x]));
            }
        }
    }
    Ok(Graph::new(n, &edges)?)
}

/// Replaces every edge by a path with `k` internal vertices. New ids start
/// past the current maximum and follow the sorted edge order.
pub fn subdivide(g: &Graph, k: usize) -> Graph {
    subdivide_tracked(g, k).0
}

fn subdivide_tracked(g: &Graph, k: usize) -> (Graph, Vec<Vertex>) {
    if k == 0 {
        return (g.clone(), Vec::new());
    }
    let mut vertices = g.vertex_list();
    let mut fresh = Vec::new();
    let mut edges = Vec::new();
    let mut next = g.universe();
    for (u, v) in g.edges() {
        let mut prev = u;
        for _ in 0..k {
            fresh.push(next);
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    vertices.extend(&fresh);
    (
        Graph::from_parts(&vertices, &edges).expect("subdivision edges are valid"),
        fresh,
    )
}

fn three_parts(graph: Graph, a: Vec<Vertex>, b: Vec<Vertex>, c: Vec<Vertex>) -> PartitionedGraph {
    let parts = BTreeMap::from([("A".to_string(), a), ("B".to_string(), b), ("C".to_string(), c)]);
    PartitionedGraph::new(graph, parts).expect("construction parts are a partition")
}

/// The wall of height `n`, subdivided once, with `A` and `C` (its colour
/// classes) made complete to each other. `B` holds the subdivision vertices.
pub fn unbounded_family(n: usize) -> Result<PartitionedGraph, ConstructionError> {
    let w = wall(n)?;
    let (a, c) = w.bipartition().expect("walls are bipartite");
    let (s, b) = subdivide_tracked(&w, 1);
    let g = s.bipartite_complement(&a, &c)?;
    Ok(three_parts(g, a, b, c))
}

fn neighbours_in(g: &Graph, v: Vertex, set: &BTreeSet<Vertex>) -> Vec<Vertex> {
    g.neighbor_list(v).into_iter().filter(|u| set.contains(u)).collect()
}

fn independent_failures(g: &Graph, name: &str, set: &[Vertex]) -> Vec<String> {
    let mut out = Vec::new();
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if g.has_edge(u, v) {
                out.push(format!("{name} contains the edge {u}-{v}"));
            }
        }
    }
    out
}

fn require_abc(pg: &PartitionedGraph, report: &mut CheckReport) -> bool {
    let names: Vec<&str> = pg.parts.keys().map(String::as_str).collect();
    let ok = names == PART_NAMES;
    report.record(
        "parts",
        if ok {
            Vec::new()
        } else {
            vec![format!("expected parts A, B, C, found {names:?}")]
        },
    );
    ok
}

/// Checks the three structural observations on `A`, `B` and `C`:
/// (i) `A` and `C` are independent and complete to each other, (ii) `B` is
/// independent and each of its vertices has one neighbour in `A` and one in
/// `C`, (iii) no two vertices of `B` have the same neighbourhood.
pub fn verify_family_observations(pg: &PartitionedGraph) -> CheckReport {
    let mut report = CheckReport::default();
    if !require_abc(pg, &mut report) {
        return report;
    }
    let g = &pg.graph;
    let (a, b, c) = (pg.part("A"), pg.part("B"), pg.part("C"));
    let a_set: BTreeSet<Vertex> = a.iter().copied().collect();
    let c_set: BTreeSet<Vertex> = c.iter().copied().collect();

    let mut first = independent_failures(g, "A", a);
    first.extend(independent_failures(g, "C", c));
    for &u in a {
        for &v in c {
            if !g.has_edge(u, v) {
                first.push(format!("A-C pair {u}-{v} is not an edge"));
            }
        }
    }
    report.record("i", first);

    let mut second = independent_failures(g, "B", b);
    for &v in b {
        let (na, nc) = (neighbours_in(g, v, &a_set), neighbours_in(g, v, &c_set));
        if na.len() != 1 || nc.len() != 1 {
            second.push(format!(
                "B vertex {v} has {} A-neighbours and {} C-neighbours",
                na.len(),
                nc.len()
            ));
        }
    }
    report.record("ii", second);

    let mut third = Vec::new();
    let mut owner: BTreeMap<Vec<Vertex>, Vertex> = BTreeMap::new();
    for &v in b {
        if let Some(u) = owner.insert(g.neighbor_list(v), v) {
            third.push(format!("B vertices {u} and {v} have the same neighbourhood"));
        }
    }
    report.record("iii", third);
    report
}

/// Adds four pairwise adjacent dominating vertices (part `A` together with
/// the original vertices), subdivides every edge (new vertices form `C`),
/// subdivides every edge again (new vertices form `B`) and makes `A`
/// complete to `C`. The input is compacted to ids `0..n` first.
pub fn gi_reduce(g: &Graph) -> PartitionedGraph {
    let (g, _) = g.compact();
    let n = g.n();
    let mut edges = g.edges();
    for d in n..n + 4 {
        edges.extend((0..d).map(|u| (u, d)));
    }
    let stage_a = Graph::new(n + 4, &edges).expect("dominating vertices are valid");
    let a: Vec<Vertex> = (0..n + 4).collect();
    let (stage_c, c) = subdivide_tracked(&stage_a, 1);
    let (stage_b, b) = subdivide_tracked(&stage_c, 1);
    let graph = stage_b.bipartite_complement(&a, &c).expect("A and C are disjoint");
    three_parts(graph, a, b, c)
}

/// Checks the degree profile of a reduced graph: `A` and `C` vertices have
/// degree at least 3, `B` vertices degree exactly 2 with adjacent
/// neighbours, `B` is exactly the set of degree-2 vertices, and `A` is
/// exactly the set of vertices with at least three degree-2 neighbours.
pub fn verify_gi_profile(pg: &PartitionedGraph) -> CheckReport {
    let mut report = CheckReport::default();
    if !require_abc(pg, &mut report) {
        return report;
    }
    let g = &pg.graph;
    let (a, b, c) = (pg.part("A"), pg.part("B"), pg.part("C"));
    let at_least_three = |name: &str, set: &[Vertex]| -> Vec<String> {
        set.iter()
            .filter(|&&v| g.degree(v) < 3)
            .map(|&v| format!("{name} vertex {v} has degree {}", g.degree(v)))
            .collect()
    };
    report.record("a_degree", at_least_three("A", a));
    report.record(
        "b_degree",
        b.iter()
            .filter(|&&v| g.degree(v) != 2)
            .map(|&v| format!("B vertex {v} has degree {}", g.degree(v)))
            .collect(),
    );
    report.record("c_degree", at_least_three("C", c));
    report.record(
        "b_neighbours_adjacent",
        b.iter()
            .filter_map(|&v| match g.neighbor_list(v)[..] {
                [x, y] if g.has_edge(x, y) => None,
                _ => Some(format!("B vertex {v} does not have two adjacent neighbours")),
            })
            .collect(),
    );

    let degree_two: BTreeSet<Vertex> = g.vertices().filter(|&v| g.degree(v) == 2).collect();
    let mut recovery = Vec::new();
    if degree_two.iter().copied().collect::<Vec<_>>() != b {
        recovery.push("degree-2 vertices differ from B".to_string());
    }
    let recovered_a: Vec<Vertex> = g
        .vertices()
        .filter(|&v| neighbours_in(g, v, &degree_two).len() >= 3)
        .collect();
    if recovered_a != a {
        recovery.push("vertices with three degree-2 neighbours differ from A".to_string());
    }
    report.record("recovery", recovery);
    report
}
