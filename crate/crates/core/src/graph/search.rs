//! Induced-subgraph search.

use fixedbitset::FixedBitSet;

use super::{Graph, Vertex};

/// An induced copy of a pattern inside a host graph. `map[i]` is the host
/// vertex that the `i`-th pattern vertex (in increasing id order) lands on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Embedding {
    pub pattern_vertices: Vec<Vertex>,
    pub map: Vec<Vertex>,
}

impl Embedding {
    pub fn image(&self) -> Vec<Vertex> {
        self.map.clone()
    }

    /// Host vertex of pattern vertex `p`.
    pub fn get(&self, p: Vertex) -> Option<Vertex> {
        self.pattern_vertices.iter().position(|&q| q == p).map(|i| self.map[i])
    }

    /// Checks that the map is injective and preserves adjacency both ways.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != self.pattern_vertices.len() || self.pattern_vertices != pattern.vertex_list() {
            return false;
        }
        for (i, &a) in self.map.iter().enumerate() {
            if !host.contains(a) {
                return false;
            }
            for (j, &b) in self.map.iter().enumerate().skip(i + 1) {
                if a == b {
                    return false;
                }
                let pe = pattern.has_edge(self.pattern_vertices[i], self.pattern_vertices[j]);
                if pe != host.has_edge(a, b) {
                    return false;
                }
            }
        }
        true
    }
}

/// Finds an induced copy of `pattern` in `host`. Among all copies the one
/// whose image sequence is lexicographically least is returned.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let s = Search::new(host, pattern)?;
    if !s.exists(&[]) {
        return None;
    }
    // Fix images one pattern vertex at a time, each as small as possible.
    let mut pins: Vec<(usize, Vertex)> = Vec::with_capacity(s.k);
    for i in 0..s.k {
        let c = s
            .candidates(i, &pins)
            .ones()
            .find(|&c| {
                pins.push((i, c));
                let ok = s.exists(&pins);
                pins.pop();
                ok
            })
            .expect("an extension exists");
        pins.push((i, c));
    }
    Some(Embedding {
        pattern_vertices: s.pv,
        map: pins.into_iter().map(|(_, c)| c).collect(),
    })
}

struct Search<'a> {
    host: &'a Graph,
    pv: Vec<Vertex>,
    k: usize,
    adj: Vec<Vec<bool>>,
    eligible: Vec<FixedBitSet>,
    /// Unpinned search order: each vertex has as many earlier neighbours as
    /// possible, so adjacency constraints prune early.
    order: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(host: &'a Graph, pattern: &Graph) -> Option<Search<'a>> {
        let pv = pattern.vertex_list();
        let k = pv.len();
        if k > host.n() {
            return None;
        }
        let adj: Vec<Vec<bool>> = pv
            .iter()
            .map(|&a| pv.iter().map(|&b| pattern.has_edge(a, b)).collect())
            .collect();
        let deg: Vec<usize> = adj.iter().map(|r| r.iter().filter(|&&e| e).count()).collect();
        let eligible = deg
            .iter()
            .map(|&d| {
                let mut s = host.empty_set();
                s.extend(host.vertices().filter(|&h| host.degree(h) >= d));
                s
            })
            .collect();
        let mut order = Vec::with_capacity(k);
        let mut placed = vec![false; k];
        for _ in 0..k {
            let next = (0..k)
                .filter(|&i| !placed[i])
                .max_by_key(|&i| {
                    let links = order.iter().filter(|&&j| adj[i][j]).count();
                    (links, deg[i], std::cmp::Reverse(i))
                })
                .expect("unplaced vertex remains");
            placed[next] = true;
            order.push(next);
        }
        Some(Search {
            host,
            pv,
            k,
            adj,
            eligible,
            order,
        })
    }

    /// Host vertices that pattern vertex `i` may map to, given `pins`.
    fn candidates(&self, i: usize, pins: &[(usize, Vertex)]) -> FixedBitSet {
        let mut cand = self.eligible[i].clone();
        for &(j, h) in pins {
            cand.set(h, false);
            if self.adj[i][j] {
                cand.intersect_with(self.host.neighbors(h));
            } else {
                cand.difference_with(self.host.neighbors(h));
            }
        }
        cand
    }

    fn exists(&self, pins: &[(usize, Vertex)]) -> bool {
        let pinned: Vec<bool> = (0..self.k).map(|i| pins.iter().any(|&(j, _)| j == i)).collect();
        let rest: Vec<usize> = self.order.iter().copied().filter(|&i| !pinned[i]).collect();
        let mut assigned = pins.to_vec();
        self.extend(&rest, &mut assigned)
    }

    fn extend(&self, rest: &[usize], assigned: &mut Vec<(usize, Vertex)>) -> bool {
        let Some((&i, tail)) = rest.split_first() else {
            return true;
        };
        for c in self.candidates(i, assigned).ones() {
            assigned.push((i, c));
            if self.extend(tail, assigned) {
                return true;
            }
            assigned.pop();
        }
        false
    }
}

/// True when `host` has no induced copy of any graph in `forbidden`.
pub fn is_free(host: &Graph, forbidden: &[Graph]) -> bool {
    forbidden.iter().all(|h| contains_induced(host, h).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_spec;

    fn g(s: &str) -> Graph {
        parse_spec(s).unwrap().realize().unwrap()
    }

    #[test]
    fn finds_lex_least_copy() {
        let host = Graph::path(5);
        let e = contains_induced(&host, &Graph::path(3)).unwrap();
        assert_eq!(e.map, vec![0, 1, 2]);
        assert!(e.is_valid(&host, &Graph::path(3)));
        let e = contains_induced(&host, &g("2P1")).unwrap();
        assert_eq!(e.map, vec![0, 2]);
    }

    #[test]
    fn freeness() {
        assert!(is_free(&Graph::cycle(5), &[g("K3"), g("P2+P3")]));
        assert!(!is_free(&Graph::cycle(6), &[g("P4")]));
        assert!(contains_induced(&Graph::cycle(4), &g("P3")).is_some());
        assert!(contains_induced(&Graph::complete(4), &g("2P1")).is_none());
        assert!(contains_induced(&Graph::path(2), &g("P3")).is_none());
    }

    #[test]
    fn respects_gaps_in_ids() {
        let host = Graph::path(6).delete_vertices(&[0]).unwrap();
        let e = contains_induced(&host, &g("P2+P1")).unwrap();
        assert_eq!(e.map, vec![1, 2, 4]);
    }
}
