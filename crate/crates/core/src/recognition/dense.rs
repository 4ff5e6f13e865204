//! Compact bitmask view of a graph with at most 128 vertices.

use crate::graph::{Graph, Vertex};

pub(crate) type Mask = u128;

pub(crate) const MAX_DENSE: usize = 128;

pub(crate) struct Dense {
    pub ids: Vec<Vertex>,
    pub adj: Vec<Mask>,
}

impl Dense {
    pub fn new(g: &Graph) -> Dense {
        assert!(g.n() <= MAX_DENSE, "dense view supports at most {MAX_DENSE} vertices");
        let ids = g.vertex_list();
        let mut index = vec![usize::MAX; g.universe()];
        for (i, &v) in ids.iter().enumerate() {
            index[v] = i;
        }
        let adj = ids
            .iter()
            .map(|&v| g.neighbors(v).ones().fold(0, |m, w| m | 1 << index[w]))
            .collect();
        Dense { ids, adj }
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn all(&self) -> Mask {
        full(self.n())
    }

    pub fn complement(&self) -> Dense {
        let all = self.all();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(i, &a)| !a & all & !(1 << i))
            .collect();
        Dense {
            ids: self.ids.clone(),
            adj,
        }
    }

    /// Original ids of the members of `m`, increasing.
    pub fn ids_of(&self, m: Mask) -> Vec<Vertex> {
        bits(m).map(|i| self.ids[i]).collect()
    }
}

pub(crate) fn full(n: usize) -> Mask {
    if n == 128 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

pub(crate) fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}
