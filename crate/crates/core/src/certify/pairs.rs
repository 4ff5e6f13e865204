//! Boundedness of `(co(sP1+P2), tP1+P2)`-free graphs and the equivalence of
//! forbidden pairs under complementation and the `K3`/`co(P1+P3)` swap.

use std::collections::{BTreeSet, VecDeque};

use crate::graph::{are_isomorphic, parse_spec, Base, Graph, NamedGraphSpec, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Bounded,
    Unbounded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairStatus {
    pub s: usize,
    pub t: usize,
    pub status: Status,
}

/// Clique-width of `(co(sP1+P2), tP1+P2)`-free graphs is bounded exactly
/// when `s <= 1`, `t <= 1` or `s + t <= 5`.
pub fn classify_pair(s: usize, t: usize) -> PairStatus {
    let status = if s <= 1 || t <= 1 || s + t <= 5 {
        Status::Bounded
    } else {
        Status::Unbounded
    };
    PairStatus { s, t, status }
}

fn spec(text: &str) -> NamedGraphSpec {
    parse_spec(text).expect("valid spec")
}

/// Rewrites every `diamond` as `co(2P1+P2)`.
fn expand_diamonds(h: &NamedGraphSpec) -> NamedGraphSpec {
    NamedGraphSpec {
        terms: h
            .terms
            .iter()
            .map(|t| Term {
                multiplicity: t.multiplicity,
                base: match &t.base {
                    Base::Diamond => Base::Complement(Box::new(spec("2P1+P2"))),
                    Base::Complement(inner) => Base::Complement(Box::new(expand_diamonds(inner))),
                    other => other.clone(),
                },
            })
            .collect(),
    }
}

/// `co(h)`, cancelling a double complement.
fn complement(h: &NamedGraphSpec) -> NamedGraphSpec {
    match &h.terms[..] {
        [Term {
            multiplicity: 1,
            base: Base::Complement(inner),
        }] => (**inner).clone(),
        _ => NamedGraphSpec::single(Base::Complement(Box::new(h.clone()))),
    }
}

fn realizes_as(h: &NamedGraphSpec, g: &Graph) -> bool {
    h.realize().map(|r| are_isomorphic(&r, g)).unwrap_or(false)
}

/// The other side of the `K3`/`co(P1+P3)` swap, if `h` is either graph.
fn swapped(h: &NamedGraphSpec) -> Option<NamedGraphSpec> {
    let k3 = spec("K3");
    let paw = spec("co(P1+P3)");
    if realizes_as(h, &k3.realize().expect("valid")) {
        Some(paw)
    } else if realizes_as(h, &paw.realize().expect("valid")) {
        Some(k3)
    } else {
        None
    }
}

fn key(a: &NamedGraphSpec, b: &NamedGraphSpec) -> (String, String) {
    let (x, y) = (a.to_string(), b.to_string());
    if x <= y {
        (x, y)
    } else {
        (y, x)
    }
}

/// The lexicographically least printed pair over the orbit of `{h1, h2}`,
/// with the smaller graph first.
pub fn normalize_pair(h1: &NamedGraphSpec, h2: &NamedGraphSpec) -> (NamedGraphSpec, NamedGraphSpec) {
    let start = (expand_diamonds(h1), expand_diamonds(h2));
    let mut seen = BTreeSet::new();
    seen.insert(key(&start.0, &start.1));
    let mut best = (key(&start.0, &start.1), start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some((a, b)) = queue.pop_front() {
        let mut next = vec![(complement(&a), complement(&b))];
        if let Some(s) = swapped(&a) {
            next.push((s, b.clone()));
        }
        if let Some(s) = swapped(&b) {
            next.push((a.clone(), s));
        }
        for (x, y) in next {
            let k = key(&x, &y);
            if seen.insert(k.clone()) {
                if k < best.0 {
                    best = (k, (x.clone(), y.clone()));
                }
                queue.push_back((x, y));
            }
        }
    }
    let (x, y) = best.1;
    if x.to_string() <= y.to_string() {
        (x, y)
    } else {
        (y, x)
    }
}
