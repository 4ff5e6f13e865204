//! Exact clique-width for small graphs.
//!
//! A state is a vertex subset `S` with a partition of `S` into at most `k`
//! label classes. The state's graph is always `G[S]`: in any expression the
//! edges between the two sides of a union can be added immediately after the
//! union, so joins are applied eagerly. Two vertices can share a label only
//! if they have the same neighbours outside `S`. A finer partition can be
//! renamed into any coarser valid one, so for each `S` only the finest
//! reachable partitions are stored. States are built by unions of states on
//! complementary subsets, in order of increasing `|S|`.

use std::collections::HashMap;

use super::{KExpr, KexprError, Label};
use crate::graph::Graph;

/// Default vertex limit.
pub const SOLVER_LIMIT: usize = 10;
/// Largest supported `kmax`.
pub const K_LIMIT: usize = 6;
/// Hard cap imposed by the subset encoding.
const HARD_LIMIT: usize = 20;

type Mask = u32;

/// Least `k <= kmax` such that `g` has a `k`-expression, with a witnessing
/// expression, or `None` when the clique-width exceeds `kmax`.
pub fn clique_width_exact(g: &Graph, kmax: usize) -> Result<Option<(usize, KExpr)>, KexprError> {
    clique_width_exact_within(g, kmax, SOLVER_LIMIT)
}

/// As [`clique_width_exact`] with an explicit vertex limit (capped at 20).
pub fn clique_width_exact_within(g: &Graph, kmax: usize, limit: usize) -> Result<Option<(usize, KExpr)>, KexprError> {
    let limit = limit.min(HARD_LIMIT);
    if g.n() > limit {
        return Err(KexprError::SizeLimit { n: g.n(), limit });
    }
    if kmax > K_LIMIT {
        return Err(KexprError::KLimit {
            k: kmax,
            limit: K_LIMIT,
        });
    }
    if g.is_empty() {
        return Err(KexprError::EmptyGraph);
    }
    let (dense, _) = g.compact();
    let n = dense.n();
    let adj: Vec<Mask> = (0..n)
        .map(|v| dense.neighbors(v).ones().fold(0, |m, w| m | 1 << w))
        .collect();
    for k in 1..=kmax {
        let solver = Solver::run(&adj, k);
        let full: Mask = if n == 32 { Mask::MAX } else { (1 << n) - 1 };
        if let Some(entries) = solver.table.get(&full) {
            let root = &entries[0];
            let labels: Vec<Label> = (1..=root.blocks.len() as Label).collect();
            let e = solver.build(full, 0, &labels);
            return Ok(Some((k, e)));
        }
    }
    Ok(None)
}

#[derive(Clone)]
enum Origin {
    Single,
    /// Child states and, for each block of the left then right child, the
    /// index of the block it becomes.
    Union {
        left: (Mask, usize),
        right: (Mask, usize),
        group_of: Vec<usize>,
    },
}

#[derive(Clone)]
struct Entry {
    /// Sorted block masks.
    blocks: Vec<Mask>,
    origin: Origin,
}

struct Solver<'a> {
    adj: &'a [Mask],
    all: Mask,
    k: usize,
    table: HashMap<Mask, Vec<Entry>>,
}

impl<'a> Solver<'a> {
    fn run(adj: &'a [Mask], k: usize) -> Solver<'a> {
        let n = adj.len();
        let all: Mask = if n == 32 { Mask::MAX } else { (1 << n) - 1 };
        let mut s = Solver {
            adj,
            all,
            k,
            table: HashMap::new(),
        };
        for v in 0..n {
            s.table.insert(
                1 << v,
                vec![Entry {
                    blocks: vec![1 << v],
                    origin: Origin::Single,
                }],
            );
        }
        let mut by_size: Vec<Vec<Mask>> = vec![Vec::new(); n + 1];
        for m in 1..=all {
            by_size[m.count_ones() as usize].push(m);
            if m == all {
                break;
            }
        }
        for size in 2..=n {
            for &set in &by_size[size] {
                s.solve_set(set);
            }
        }
        s
    }

    fn outside_nbrs(&self, v: usize, set: Mask) -> Mask {
        self.adj[v] & !set & self.all
    }

    fn solve_set(&mut self, set: Mask) {
        let low = set & set.wrapping_neg();
        let rest = set & !low;
        let mut found: Vec<Entry> = Vec::new();
        // Enumerate left parts containing the lowest vertex.
        let mut sub = rest;
        loop {
            let left = low | sub;
            let right = set & !left;
            if right != 0 {
                if let (Some(le), Some(re)) = (self.table.get(&left), self.table.get(&right)) {
                    for (li, l) in le.iter().enumerate() {
                        for (ri, r) in re.iter().enumerate() {
                            self.unions(set, (left, li, l), (right, ri, r), &mut found);
                        }
                    }
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        if !found.is_empty() {
            self.table.insert(set, found);
        }
    }

    fn unions(&self, set: Mask, l: (Mask, usize, &Entry), r: (Mask, usize, &Entry), found: &mut Vec<Entry>) {
        let (lset, li, le) = l;
        let (rset, ri, re) = r;
        let blocks: Vec<(bool, Mask)> = le
            .blocks
            .iter()
            .map(|&b| (false, b))
            .chain(re.blocks.iter().map(|&b| (true, b)))
            .collect();
        // Each left-right block pair must be complete or anticomplete.
        for &(_, a) in blocks.iter().filter(|b| !b.0) {
            for &(_, b) in blocks.iter().filter(|b| b.0) {
                let ea = self.edges_between(a, b);
                if ea != 0 && ea != a.count_ones() * b.count_ones() {
                    return;
                }
            }
        }
        let groups = blocks.len().min(self.k);
        let mut group_of = vec![0usize; blocks.len()];
        let mut members: Vec<Vec<usize>> = Vec::new();
        let ctx = UnionCtx {
            solver: self,
            set,
            lset,
            rset,
            blocks: &blocks,
            groups,
        };
        ctx.assign(0, &mut group_of, &mut members, &mut |group_of, members| {
            let mut out: Vec<(Mask, usize)> = members
                .iter()
                .enumerate()
                .map(|(g, m)| (m.iter().fold(0, |acc, &b| acc | blocks[b].1), g))
                .collect();
            out.sort_unstable();
            let mut remap = vec![0; out.len()];
            for (pos, &(_, g)) in out.iter().enumerate() {
                remap[g] = pos;
            }
            let entry = Entry {
                blocks: out.iter().map(|&(m, _)| m).collect(),
                origin: Origin::Union {
                    left: (lset, li),
                    right: (rset, ri),
                    group_of: group_of.iter().map(|&g| remap[g]).collect(),
                },
            };
            insert_finest(found, entry);
        });
    }

    fn edges_between(&self, a: Mask, b: Mask) -> u32 {
        bits(a).map(|v| (self.adj[v] & b).count_ones()).sum()
    }

    fn complete(&self, a: Mask, b: Mask) -> bool {
        bits(a).all(|v| self.adj[v] & b == b)
    }

    /// Expression for entry `idx` of `set` with block `i` labelled `labels[i]`.
    fn build(&self, set: Mask, idx: usize, labels: &[Label]) -> KExpr {
        let entry = &self.table[&set][idx];
        match &entry.origin {
            Origin::Single => KExpr::create(labels[0]),
            Origin::Union { left, right, group_of } => {
                let le = &self.table[&left.0][left.1];
                let re = &self.table[&right.0][right.1];
                let (lg, rg) = group_of.split_at(le.blocks.len());
                let a = self.build_side(left, lg, labels);
                let b = self.build_side(right, rg, labels);
                let mut e = KExpr::union(a, b);
                let gl: Vec<Mask> = le.blocks.clone();
                let gr: Vec<Mask> = re.blocks.clone();
                let groups = entry.blocks.len();
                for x in 0..groups {
                    for y in x + 1..groups {
                        let side = |g: usize, grp: &[usize], bl: &[Mask]| {
                            grp.iter().zip(bl).filter(|(&h, _)| h == g).fold(0, |m, (_, &b)| m | b)
                        };
                        let (xl, xr) = (side(x, lg, &gl), side(x, rg, &gr));
                        let (yl, yr) = (side(y, lg, &gl), side(y, rg, &gr));
                        if self.edges_between(xl, yr) + self.edges_between(xr, yl) > 0 {
                            e = KExpr::join(labels[x], labels[y], e);
                        }
                    }
                }
                e
            }
        }
    }

    /// Builds a child so that its blocks end with the labels of their groups.
    /// One block per group takes the group label; the others take spare
    /// labels and are renamed afterwards.
    fn build_side(&self, child: &(Mask, usize), group_of: &[usize], labels: &[Label]) -> KExpr {
        let used: Vec<Label> = {
            let mut u: Vec<Label> = group_of.iter().map(|&g| labels[g]).collect();
            u.sort_unstable();
            u.dedup();
            u
        };
        let mut spare = (1..=self.k as Label).filter(|l| !used.contains(l));
        let mut taken = vec![false; labels.len()];
        let mut child_labels = Vec::with_capacity(group_of.len());
        let mut renames = Vec::new();
        for &g in group_of {
            if taken[g] {
                let t = spare.next().expect("enough spare labels");
                child_labels.push(t);
                renames.push((t, labels[g]));
            } else {
                taken[g] = true;
                child_labels.push(labels[g]);
            }
        }
        let mut e = self.build(child.0, child.1, &child_labels);
        for (from, to) in renames {
            e = KExpr::rename(from, to, e);
        }
        e
    }
}

struct UnionCtx<'s, 'a> {
    solver: &'s Solver<'a>,
    set: Mask,
    lset: Mask,
    rset: Mask,
    blocks: &'s [(bool, Mask)],
    groups: usize,
}

impl UnionCtx<'_, '_> {
    fn compatible(&self, a: (bool, Mask), b: (bool, Mask)) -> bool {
        let s = self.solver;
        let rep = |m: Mask| m.trailing_zeros() as usize;
        let (ra, rb) = (rep(a.1), rep(b.1));
        if s.outside_nbrs(ra, self.set) != s.outside_nbrs(rb, self.set) {
            return false;
        }
        if a.0 == b.0 {
            let side = if a.0 { self.rset } else { self.lset };
            s.outside_nbrs(ra, side) == s.outside_nbrs(rb, side)
        } else {
            s.edges_between(a.1, b.1) == 0
        }
    }

    /// Restricted-growth assignment of blocks to exactly `groups` groups.
    fn assign(
        &self,
        i: usize,
        group_of: &mut Vec<usize>,
        members: &mut Vec<Vec<usize>>,
        emit: &mut dyn FnMut(&[usize], &[Vec<usize>]),
    ) {
        let n = self.blocks.len();
        if n - i < self.groups - members.len() {
            return;
        }
        if i == n {
            if self.joins_ok(members) {
                emit(group_of, members);
            }
            return;
        }
        for g in 0..members.len() {
            if members[g]
                .iter()
                .all(|&b| self.compatible(self.blocks[b], self.blocks[i]))
            {
                group_of[i] = g;
                members[g].push(i);
                self.assign(i + 1, group_of, members, emit);
                members[g].pop();
            }
        }
        if members.len() < self.groups {
            group_of[i] = members.len();
            members.push(vec![i]);
            self.assign(i + 1, group_of, members, emit);
            members.pop();
        }
    }

    fn joins_ok(&self, members: &[Vec<usize>]) -> bool {
        let s = self.solver;
        let part = |g: usize, right: bool| {
            members[g]
                .iter()
                .filter(|&&b| self.blocks[b].0 == right)
                .fold(0, |m, &b| m | self.blocks[b].1)
        };
        for x in 0..members.len() {
            for y in x + 1..members.len() {
                let (xl, xr, yl, yr) = (part(x, false), part(x, true), part(y, false), part(y, true));
                if s.edges_between(xl, yr) + s.edges_between(xr, yl) > 0 && !s.complete(xl | xr, yl | yr) {
                    return false;
                }
            }
        }
        true
    }
}

/// `a` refines `b` when every block of `a` lies inside a block of `b`.
fn refines(a: &[Mask], b: &[Mask]) -> bool {
    a.iter().all(|&x| b.iter().any(|&y| x & !y == 0))
}

fn insert_finest(found: &mut Vec<Entry>, e: Entry) {
    if found.iter().any(|f| refines(&f.blocks, &e.blocks)) {
        return;
    }
    found.retain(|f| !refines(&e.blocks, &f.blocks));
    found.push(e);
}

fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
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
