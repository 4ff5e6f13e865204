//! Isomorphism testing by joint colour refinement with individualization.

use std::collections::BTreeMap;

use super::{Graph, Vertex};

/// True when `g` and `h` are isomorphic. Vertex ids are ignored.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// An isomorphism as `(g_vertex, h_vertex)` pairs sorted by `g_vertex`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<(Vertex, Vertex)>> {
    if g.n() != h.n() || g.m() != h.m() {
        return None;
    }
    let (cg, gids) = g.compact();
    let (ch, hids) = h.compact();
    let n = cg.n();
    let nbrs: Vec<Vec<usize>> = (0..n)
        .map(|v| cg.neighbor_list(v))
        .chain((0..n).map(|v| ch.neighbor_list(v).into_iter().map(|w| w + n).collect()))
        .collect();
    let colors = vec![0usize; 2 * n];
    let perm = search(&nbrs, n, colors)?;
    let mut out: Vec<_> = (0..n).map(|v| (gids[v], hids[perm[v]])).collect();
    out.sort_unstable();
    Some(out)
}

/// Refines jointly until stable. Returns `None` when the two halves have
/// different colour histograms.
fn refine(nbrs: &[Vec<usize>], n: usize, mut colors: Vec<usize>) -> Option<Vec<usize>> {
    let mut classes = count_classes(&colors);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..2 * n)
            .map(|v| {
                let mut s: Vec<usize> = nbrs[v].iter().map(|&w| colors[w]).collect();
                s.sort_unstable();
                (colors[v], s)
            })
            .collect();
        let mut ids: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in &sigs {
            let next = ids.len();
            ids.entry(s).or_insert(next);
        }
        // Rank in sorted order so both halves agree on ids.
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> = ids.keys().enumerate().map(|(i, &k)| (k, i)).collect();
        colors = sigs.iter().map(|s| ranks[s]).collect();
        let mut hist = vec![0isize; ranks.len()];
        for v in 0..n {
            hist[colors[v]] += 1;
            hist[colors[v + n]] -= 1;
        }
        if hist.iter().any(|&c| c != 0) {
            return None;
        }
        let now = ranks.len();
        if now == classes {
            return Some(colors);
        }
        classes = now;
    }
}

fn count_classes(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn search(nbrs: &[Vec<usize>], n: usize, colors: Vec<usize>) -> Option<Vec<usize>> {
    let colors = refine(nbrs, n, colors)?;
    let mut size: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &colors[..n] {
        *size.entry(c).or_default() += 1;
    }
    let target = size
        .iter()
        .filter(|&(_, &s)| s > 1)
        .min_by_key(|&(&c, &s)| (s, c))
        .map(|(&c, _)| c);
    let Some(cell) = target else {
        let mut perm = vec![0; n];
        let mut by_color = vec![0; 2 * n];
        for v in n..2 * n {
            by_color[colors[v]] = v - n;
        }
        for v in 0..n {
            perm[v] = by_color[colors[v]];
        }
        let ok = (0..n).all(|v| {
            let mut a: Vec<usize> = nbrs[v].iter().map(|&w| perm[w]).collect();
            let mut b: Vec<usize> = nbrs[perm[v] + n].iter().map(|&w| w - n).collect();
            a.sort_unstable();
            b.sort_unstable();
            a == b
        });
        return ok.then_some(perm);
    };
    let fresh = 2 * n + 1;
    let u = (0..n).find(|&v| colors[v] == cell).expect("cell is nonempty");
    for w in (n..2 * n).filter(|&v| colors[v] == cell) {
        let mut next = colors.clone();
        next[u] = fresh;
        next[w] = fresh;
        if let Some(p) = search(nbrs, n, next) {
            return Some(p);
        }
    }
    None
}
