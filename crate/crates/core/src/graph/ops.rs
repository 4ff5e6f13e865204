use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use super::{Graph, GraphError, Vertex};

impl Graph {
    /// Same vertex ids; two distinct vertices are adjacent iff they were not.
    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        for u in self.vertices() {
            let mut row = self.present.clone();
            row.difference_with(&self.adj[u]);
            row.set(u, false);
            g.adj[u] = row;
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted past this graph's
    /// id range. Returns the shift applied to `other`'s ids.
    pub fn disjoint_union(&self, other: &Graph) -> (Graph, usize) {
        let shift = self.universe();
        let mut g = self.clone().grown(shift + other.universe());
        for v in other.vertices() {
            g.present.insert(v + shift);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + shift, v + shift, true);
        }
        (g.trimmed(), shift)
    }

    /// `G[S]`, keeping ids.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Result<Graph, GraphError> {
        let set = self.set_of(keep)?;
        Ok(self.induced_by_set(&set))
    }

    pub(crate) fn induced_by_set(&self, keep: &FixedBitSet) -> Graph {
        let mut g = self.clone();
        g.present.intersect_with(keep);
        for v in 0..g.universe() {
            if g.present.contains(v) {
                g.adj[v].intersect_with(keep);
            } else {
                g.adj[v].clear();
            }
        }
        g.trimmed()
    }

    /// `G \ S`, keeping ids of the survivors.
    pub fn delete_vertices(&self, remove: &[Vertex]) -> Result<Graph, GraphError> {
        let set = self.set_of(remove)?;
        let mut keep = self.present.clone();
        keep.difference_with(&set);
        Ok(self.induced_by_set(&keep))
    }

    /// Flips every adjacency inside `set`.
    pub fn subgraph_complement(&self, set: &[Vertex]) -> Result<Graph, GraphError> {
        let s = self.set_of(set)?;
        let mut g = self.clone();
        for u in s.ones() {
            for v in s.ones() {
                if u < v {
                    let on = !g.adj[u].contains(v);
                    g.set_edge(u, v, on);
                }
            }
        }
        Ok(g)
    }

    /// Flips every adjacency with one end in `x` and the other in `y`.
    pub fn bipartite_complement(&self, x: &[Vertex], y: &[Vertex]) -> Result<Graph, GraphError> {
        let xs = self.set_of(x)?;
        let ys = self.set_of(y)?;
        if let Some(v) = xs.intersection(&ys).next() {
            return Err(GraphError::Overlap(v));
        }
        let mut g = self.clone();
        for u in xs.ones() {
            for v in ys.ones() {
                let on = !g.adj[u].contains(v);
                g.set_edge(u, v, on);
            }
        }
        Ok(g)
    }

    /// Removes degree-1 vertices in rounds until none is left. Each round
    /// deletes every current degree-1 vertex at once, so a `K2` component
    /// disappears entirely and the result does not depend on id order.
    pub fn prune_degree_one(&self) -> Graph {
        let mut keep = self.present.clone();
        loop {
            let leaves: Vec<Vertex> = keep
                .ones()
                .filter(|&v| self.adj[v].intersection(&keep).count() == 1)
                .collect();
            if leaves.is_empty() {
                break;
            }
            for v in leaves {
                keep.set(v, false);
            }
        }
        self.induced_by_set(&keep)
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = self.empty_set();
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen.contains(s) {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([s]);
            seen.insert(s);
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for w in self.adj[u].ones() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A proper 2-colouring `(side0, side1)` if one exists. Within each
    /// component the least vertex goes to `side0`.
    pub fn bipartition(&self) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        let mut colour = vec![u8::MAX; self.universe()];
        for s in self.vertices() {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].ones() {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[u];
                        queue.push_back(w);
                    } else if colour[w] == colour[u] {
                        return None;
                    }
                }
            }
        }
        let side = |c| self.vertices().filter(|&v| colour[v] == c).collect();
        Some((side(0), side(1)))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// True when every connected component is a clique.
    pub fn is_disjoint_cliques(&self) -> bool {
        self.components().iter().all(|c| self.is_clique(c))
    }

    /// True when the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n()
    }

    /// Relabels vertices to `0..n` in increasing id order. Returns the new
    /// graph and the old id of each new vertex.
    pub fn compact(&self) -> (Graph, Vec<Vertex>) {
        let old: Vec<Vertex> = self.vertex_list();
        let mut index = vec![usize::MAX; self.universe()];
        for (i, &v) in old.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (index[u], index[v])).collect();
        (Graph::new(old.len(), &edges).expect("relabelled edges are valid"), old)
    }

    /// Renames vertex `v` to `perm[v]`. `perm` must be injective on the
    /// vertex set.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        let vertices: Vec<_> = self.vertices().map(|v| perm[v]).collect();
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_parts(&vertices, &edges).expect("relabelling must be injective")
    }

    /// Adds a fresh vertex adjacent to `nbrs`; returns the graph and new id.
    pub fn with_vertex(&self, nbrs: &[Vertex]) -> (Graph, Vertex) {
        let id = self.universe();
        let mut g = self.clone().grown(id + 1);
        g.present.insert(id);
        for &u in nbrs {
            assert!(self.contains(u), "unknown neighbour {u}");
            g.set_edge(u, id, true);
        }
        (g, id)
    }

    /// Same vertices with the listed edges toggled.
    pub fn with_toggled(&self, pairs: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &(u, v) in pairs {
            for w in [u, v] {
                if !self.contains(w) {
                    return Err(GraphError::UnknownVertex(w));
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let on = !g.adj[u].contains(v);
            g.set_edge(u, v, on);
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::path(4)
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(Graph::new(0, &[]).unwrap().is_empty());
        assert_eq!(Graph::new(4, &[(0, 1), (0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(Graph::new(3, &[(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(3, &[(0, 3)]), Err(GraphError::OutOfRange { v: 3, n: 3 }));
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g, p4());
    }

    #[test]
    fn complement_cases() {
        assert_eq!(Graph::complete(4).complement(), Graph::edgeless(4));
        assert_eq!(p4().complement().complement(), p4());
        // P4 is self-complementary up to isomorphism
        assert_eq!(p4().complement().m(), 3);
    }

    #[test]
    fn disjoint_union_counts() {
        let (g, shift) = Graph::path(2).disjoint_union(&Graph::path(3));
        assert_eq!((g.n(), g.m(), shift), (5, 3, 2));
        let (g, _) = Graph::edgeless(0).disjoint_union(&p4());
        assert_eq!(g, p4());
        let (g, _) = Graph::edgeless(1).disjoint_union(&Graph::edgeless(1));
        assert_eq!((g.n(), g.m()), (2, 0));
    }

    #[test]
    fn induced_subgraph_cases() {
        let c5 = Graph::cycle(5);
        let h = c5.induced_subgraph(&[1, 2, 3, 4]).unwrap();
        assert_eq!(h.edges(), vec![(1, 2), (2, 3), (3, 4)]);
        assert_eq!(c5.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap(), c5);
        assert!(c5.induced_subgraph(&[7]).is_err());
        // diamond: K4 minus edge 2-3; degree-3 vertices are 0 and 1
        let diamond = Graph::complete(4).with_toggled(&[(2, 3)]).unwrap();
        let k3 = diamond.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(k3.m(), 3);
    }

    #[test]
    fn subgraph_complement_cases() {
        let k5 = Graph::complete(5);
        assert_eq!(k5.subgraph_complement(&[0, 1, 2, 3, 4]).unwrap(), Graph::edgeless(5));
        let p3 = Graph::path(3);
        let k3 = p3.subgraph_complement(&[0, 2]).unwrap();
        assert_eq!(k3, Graph::complete(3));
        let twice = k3.subgraph_complement(&[0, 2]).unwrap();
        assert_eq!(twice, p3);
    }

    #[test]
    fn bipartite_complement_cases() {
        let kb = Graph::new(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let flipped = kb.bipartite_complement(&[0, 1], &[2, 3]).unwrap();
        assert_eq!(flipped.m(), 0);
        assert_eq!(flipped.bipartite_complement(&[0, 1], &[2, 3]).unwrap(), kb);
        assert_eq!(kb.bipartite_complement(&[0, 1], &[1, 2]), Err(GraphError::Overlap(1)));
    }

    #[test]
    fn prune_cases() {
        assert!(p4().prune_degree_one().is_empty());
        assert_eq!(Graph::cycle(5).prune_degree_one(), Graph::cycle(5));
        assert_eq!(Graph::edgeless(1).prune_degree_one(), Graph::edgeless(1));
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.prune_degree_one().vertex_list(), vec![0]);
    }

    #[test]
    fn deletion_keeps_ids() {
        let g = Graph::cycle(6).delete_vertices(&[0, 3]).unwrap();
        assert_eq!(g.vertex_list(), vec![1, 2, 4, 5]);
        assert_eq!(g.edges(), vec![(1, 2), (4, 5)]);
        assert_eq!(g.components(), vec![vec![1, 2], vec![4, 5]]);
        let (c, old) = g.compact();
        assert_eq!(old, vec![1, 2, 4, 5]);
        assert_eq!(c.edges(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn bipartition_and_forest() {
        assert!(Graph::cycle(6).is_bipartite());
        assert!(!Graph::cycle(5).is_bipartite());
        assert!(p4().is_forest());
        assert!(!Graph::cycle(4).is_forest());
        assert!(Graph::complete(3).is_disjoint_cliques());
        assert!(!Graph::path(3).is_disjoint_cliques());
    }
}
