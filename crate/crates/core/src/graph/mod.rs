//! Immutable simple undirected graphs with stable vertex ids.
//!
//! Vertex ids are dense `usize` values at construction time. Operations that
//! delete vertices keep the ids of the survivors, so a graph may have gaps in
//! its id range. Operations that add vertices allocate ids past the current
//! maximum.

mod io;
mod iso;
mod named;
mod ops;
mod search;

use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

pub use io::{from_graph6, read_edge_list, to_graph6, write_edge_list};
pub use iso::{are_isomorphic, find_isomorphism};
pub use named::{parse_spec, Base, NamedGraphSpec, Term};
pub use search::{contains_induced, is_free, Embedding};

pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {v} out of range for {n} vertices")]
    OutOfRange { v: Vertex, n: usize },
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("vertex {0} occurs in both sides of a bipartite complementation")]
    Overlap(Vertex),
    #[error("vertex ids are not 0..n-1; compact the graph first")]
    NonDenseIds,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// A simple undirected graph. Values are never mutated after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    present: FixedBitSet,
    adj: Vec<FixedBitSet>,
}

impl Graph {
    /// Builds a graph on vertices `0..n` with the given edges.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let mut g = Graph::edgeless(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::OutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::OutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.adj[u].contains(v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    pub fn edgeless(n: usize) -> Graph {
        let mut present = FixedBitSet::with_capacity(n);
        present.insert_range(..);
        Graph {
            present,
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::edgeless(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v, true);
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Graph::new(n, &edges).expect("cycle edges are valid")
    }

    /// Builds a graph on an arbitrary id set. Edges must join listed vertices.
    pub fn from_parts(vertices: &[Vertex], edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let universe = vertices.iter().map(|&v| v + 1).max().unwrap_or(0);
        let mut g = Graph {
            present: FixedBitSet::with_capacity(universe),
            adj: vec![FixedBitSet::with_capacity(universe); universe],
        };
        for &v in vertices {
            g.present.insert(v);
        }
        for &(u, v) in edges {
            for w in [u, v] {
                if !g.contains(w) {
                    return Err(GraphError::UnknownVertex(w));
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.adj[u].contains(v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// One past the largest id that may occur.
    pub fn universe(&self) -> usize {
        self.present.len()
    }

    pub fn n(&self) -> usize {
        self.present.count_ones(..)
    }

    pub fn m(&self) -> usize {
        self.present.ones().map(|v| self.adj[v].count_ones(..)).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.present.is_clear()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.universe() && self.present.contains(v)
    }

    /// Vertex ids in increasing order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.present.ones()
    }

    pub fn vertex_list(&self) -> Vec<Vertex> {
        self.vertices().collect()
    }

    pub fn vertex_set(&self) -> &FixedBitSet {
        &self.present
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.universe() && v < self.universe() && self.adj[u].contains(v)
    }

    /// Neighbourhood as a bitset over `0..universe()`.
    pub fn neighbors(&self, v: Vertex) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighbor_list(&self, v: Vertex) -> Vec<Vertex> {
        self.adj[v].ones().collect()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for v in self.adj[u].ones() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of neighbours of `v` inside `set`.
    pub fn degree_into(&self, v: Vertex, set: &FixedBitSet) -> usize {
        self.adj[v].intersection(set).count()
    }

    /// True when the ids are exactly `0..n`.
    pub fn is_dense(&self) -> bool {
        self.n() == self.universe()
    }

    /// Empty bitset sized for this graph's id range.
    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.universe())
    }

    /// Bitset holding `vs`; ids outside the universe are rejected.
    pub fn set_of(&self, vs: &[Vertex]) -> Result<FixedBitSet, GraphError> {
        let mut s = self.empty_set();
        for &v in vs {
            if !self.contains(v) {
                return Err(GraphError::UnknownVertex(v));
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub(crate) fn set_edge(&mut self, u: Vertex, v: Vertex, on: bool) {
        self.adj[u].set(v, on);
        self.adj[v].set(u, on);
    }

    /// Shrinks the id range to one past the largest present id.
    pub(crate) fn trimmed(mut self) -> Graph {
        let universe = self.present.ones().next_back().map_or(0, |v| v + 1);
        if universe == self.universe() {
            return self;
        }
        self.adj.truncate(universe);
        self.present = resize(&self.present, universe);
        for row in &mut self.adj {
            *row = resize(row, universe);
        }
        self
    }

    pub(crate) fn grown(mut self, universe: usize) -> Graph {
        if universe <= self.universe() {
            return self;
        }
        self.present.grow(universe);
        for row in &mut self.adj {
            row.grow(universe);
        }
        self.adj.resize(universe, FixedBitSet::with_capacity(universe));
        self
    }
}

fn resize(set: &FixedBitSet, len: usize) -> FixedBitSet {
    let mut out = FixedBitSet::with_capacity(len);
    out.extend(set.ones().filter(|&v| v < len));
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(V={:?}, E={:?})", self.vertex_list(), self.edges())
    }
}
