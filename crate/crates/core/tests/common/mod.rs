//! Independent oracles shared by the integration and acceptance tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use cwcert::graph::{Graph, Vertex};
use rand::Rng;

/// Adjacency rows of a graph on `0..n` with `n <= 8`.
pub fn rows(g: &Graph) -> Vec<u8> {
    let (d, _) = g.compact();
    (0..d.n())
        .map(|v| d.neighbor_list(v).iter().fold(0u8, |m, &w| m | 1 << w))
        .collect()
}

fn from_rows(adj: &[u8]) -> Graph {
    let n = adj.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adj[u] >> v & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Least upper-triangle code over vertex orders that sort by degree.
fn canonical(adj: &[u8]) -> u64 {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| deg[v]);
    for v in order {
        match groups.last_mut() {
            Some(g) if deg[g[0]] == deg[v] => g.push(v),
            _ => groups.push(vec![v]),
        }
    }
    let per_group: Vec<Vec<Vec<usize>>> = groups.iter().map(|g| permutations(g)).collect();
    let mut best = u64::MAX;
    let mut idx = vec![0; groups.len()];
    loop {
        let seq: Vec<usize> = idx
            .iter()
            .enumerate()
            .flat_map(|(i, &j)| per_group[i][j].clone())
            .collect();
        let mut code = 0u64;
        for a in 0..n {
            for b in a + 1..n {
                code = code << 1 | (adj[seq[a]] >> seq[b] & 1) as u64;
            }
        }
        best = best.min(code);
        let mut i = 0;
        loop {
            if i == idx.len() {
                return best;
            }
            idx[i] += 1;
            if idx[i] < per_group[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// All graphs on `0..n` up to isomorphism, for each `n <= max_n` (at most 7).
pub fn catalog(max_n: usize) -> Vec<Vec<Graph>> {
    assert!(max_n <= 7);
    let mut levels: Vec<Vec<Vec<u8>>> = vec![vec![Vec::new()]];
    for n in 1..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for base in &levels[n - 1] {
            for nb in 0..1u16 << (n - 1) {
                let mut adj: Vec<u8> = base.clone();
                for (u, row) in adj.iter_mut().enumerate() {
                    if nb >> u & 1 == 1 {
                        *row |= 1 << (n - 1);
                    }
                }
                adj.push(nb as u8);
                if seen.insert(canonical(&adj)) {
                    next.push(adj);
                }
            }
        }
        levels.push(next);
    }
    levels
        .iter()
        .map(|l| l.iter().map(|a| from_rows(a)).collect())
        .collect()
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    let (a, b) = (rows(g), rows(h));
    if a.len() != b.len() || g.m() != h.m() {
        return false;
    }
    let n = a.len();
    permutations(&(0..n).collect::<Vec<_>>())
        .iter()
        .any(|p| (0..n).all(|u| (0..n).all(|v| (a[u] >> v & 1) == (b[p[u]] >> p[v] & 1))))
}

/// Induced containment by trying every injective map.
pub fn brute_contains(g: &Graph, h: &Graph) -> bool {
    let gv = g.vertex_list();
    let (hd, _) = h.compact();
    let k = hd.n();
    fn extend(g: &Graph, h: &Graph, gv: &[Vertex], map: &mut Vec<Vertex>) -> bool {
        let i = map.len();
        if i == h.n() {
            return true;
        }
        for &x in gv {
            if map.contains(&x) {
                continue;
            }
            if (0..i).all(|j| h.has_edge(i, j) == g.has_edge(x, map[j])) {
                map.push(x);
                if extend(g, h, gv, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    k <= gv.len() && extend(g, &hd, &gv, &mut Vec::new())
}

/// Least `k <= kmax` for which a `k`-expression of `g` exists, by forward
/// closure over labelled induced subgraphs: singletons, unions of disjoint
/// pieces with any identification of labels followed by the joins the target
/// demands, and merges of two labels. A labelling is kept only if vertices
/// sharing a label have the same neighbours outside the piece.
pub fn naive_clique_width(g: &Graph, kmax: usize) -> Option<usize> {
    let adj = rows(g);
    let n = adj.len();
    if n == 0 {
        return Some(0);
    }
    (1..=kmax).find(|&k| naive_buildable(&adj, k))
}

type Labelling = Vec<u8>;

fn normalise(lab: &mut [u8]) {
    let mut map = [u8::MAX; 8];
    let mut next = 0;
    for l in lab.iter_mut() {
        if *l == u8::MAX {
            continue;
        }
        if map[*l as usize] == u8::MAX {
            map[*l as usize] = next;
            next += 1;
        }
        *l = map[*l as usize];
    }
}

fn label_count(lab: &[u8]) -> usize {
    lab.iter()
        .filter(|&&l| l != u8::MAX)
        .map(|&l| l as usize + 1)
        .max()
        .unwrap_or(0)
}

fn twins_ok(adj: &[u8], s: u8, lab: &[u8]) -> bool {
    let out = !s;
    let mut rep: [Option<u8>; 8] = [None; 8];
    for (v, &l) in lab.iter().enumerate() {
        if l == u8::MAX {
            continue;
        }
        let nb = adj[v] & out;
        match rep[l as usize] {
            None => rep[l as usize] = Some(nb),
            Some(r) if r != nb => return false,
            _ => {}
        }
    }
    true
}

fn naive_buildable(adj: &[u8], k: usize) -> bool {
    let n = adj.len();
    let full: u8 = ((1u16 << n) - 1) as u8;
    let mut table: HashMap<u8, BTreeSet<Labelling>> = HashMap::new();
    let mut by_size: Vec<Vec<u8>> = vec![Vec::new(); n + 1];
    for s in 1..=full {
        by_size[s.count_ones() as usize].push(s);
    }
    for &s in &by_size[1] {
        let mut lab = vec![u8::MAX; n];
        lab[s.trailing_zeros() as usize] = 0;
        table.insert(s, BTreeSet::from([lab]));
    }
    if n == 1 {
        return true;
    }
    for size in 2..=n {
        for &s in &by_size[size] {
            let low = s & s.wrapping_neg();
            let mut found: BTreeSet<Labelling> = BTreeSet::new();
            let mut s1 = (s - 1) & s;
            while s1 > 0 {
                let s2 = s & !s1;
                if s1 & low != 0 && s2 != 0 {
                    if let (Some(t1), Some(t2)) = (table.get(&s1), table.get(&s2)) {
                        for l1 in t1 {
                            for l2 in t2 {
                                unions(adj, s, l1, l2, k, &mut found);
                            }
                        }
                    }
                }
                s1 = (s1 - 1) & s;
            }
            let mut queue: Vec<Labelling> = found.iter().cloned().collect();
            while let Some(lab) = queue.pop() {
                let c = label_count(&lab);
                for a in 0..c as u8 {
                    for b in a + 1..c as u8 {
                        let mut m: Labelling = lab.iter().map(|&l| if l == b { a } else { l }).collect();
                        normalise(&mut m);
                        if twins_ok(adj, s, &m) && found.insert(m.clone()) {
                            queue.push(m);
                        }
                    }
                }
            }
            if s == full && !found.is_empty() {
                return true;
            }
            if !found.is_empty() {
                table.insert(s, found);
            }
        }
    }
    false
}

/// Every union of `l1` and `l2` whose label identification and forced
/// joins produce exactly `G[s]`.
fn unions(adj: &[u8], s: u8, l1: &[u8], l2: &[u8], k: usize, out: &mut BTreeSet<Labelling>) {
    let (a, b) = (label_count(l1), label_count(l2));
    let mut assign = vec![0u8; b];
    fn rec(
        adj: &[u8],
        s: u8,
        l1: &[u8],
        l2: &[u8],
        k: usize,
        a: usize,
        i: usize,
        used_new: usize,
        assign: &mut Vec<u8>,
        out: &mut BTreeSet<Labelling>,
    ) {
        if i == assign.len() {
            let mut lab: Labelling = l1.to_vec();
            for (v, &l) in l2.iter().enumerate() {
                if l != u8::MAX {
                    lab[v] = assign[l as usize];
                }
            }
            if let Some(lab) = joined(adj, s, l1, l2, lab) {
                out.insert(lab);
            }
            return;
        }
        for target in 0..a {
            if !assign[..i].contains(&(target as u8)) {
                assign[i] = target as u8;
                rec(adj, s, l1, l2, k, a, i + 1, used_new, assign, out);
            }
        }
        if a + used_new < k {
            assign[i] = (a + used_new) as u8;
            rec(adj, s, l1, l2, k, a, i + 1, used_new + 1, assign, out);
        }
    }
    rec(adj, s, l1, l2, k, a, 0, 0, &mut assign, out);
}

/// Applies the joins needed for the cross edges; `None` when a join would
/// add a non-edge or a cross edge cannot be produced.
fn joined(adj: &[u8], s: u8, l1: &[u8], l2: &[u8], mut lab: Labelling) -> Option<Labelling> {
    let n = adj.len();
    let side1: Vec<usize> = (0..n).filter(|&v| l1[v] != u8::MAX).collect();
    let side2: Vec<usize> = (0..n).filter(|&v| l2[v] != u8::MAX).collect();
    let mut joins = [[false; 8]; 8];
    for &u in &side1 {
        for &v in &side2 {
            if adj[u] >> v & 1 == 1 {
                let (x, y) = (lab[u] as usize, lab[v] as usize);
                if x == y {
                    return None;
                }
                joins[x][y] = true;
                joins[y][x] = true;
            }
        }
    }
    let members: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if joins[lab[u] as usize][lab[v] as usize] && adj[u] >> v & 1 == 0 {
                return None;
            }
        }
    }
    normalise(&mut lab);
    twins_ok(adj, s, &lab).then_some(lab)
}

pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// A random forest on `0..n`: each vertex after the first joins an earlier
/// vertex with probability `p`.
pub fn random_forest(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        if rng.gen_bool(p) {
            edges.push((rng.gen_range(0..v), v));
        }
    }
    let perm = shuffled(n, rng);
    Graph::new(n, &edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect::<Vec<_>>()).unwrap()
}

/// A random graph of maximum degree two: disjoint paths and cycles.
pub fn random_max_degree_2(n: usize, rng: &mut impl Rng) -> Graph {
    let perm = shuffled(n, rng);
    let mut edges = Vec::new();
    let mut start = 0;
    while start < n {
        let len = rng.gen_range(1..=(n - start));
        for i in start..start + len - 1 {
            edges.push((perm[i], perm[i + 1]));
        }
        if len >= 3 && rng.gen_bool(0.5) {
            edges.push((perm[start], perm[start + len - 1]));
        }
        start += len;
    }
    Graph::new(n, &edges).unwrap()
}

fn shuffled(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    perm
}
