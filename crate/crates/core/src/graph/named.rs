//! Named small graphs: `2P1+P2`, `co(P1+P3)`, `K1,3`, `S(1,2,3)`, `diamond`.
//!
//! ```text
//! expr := term { "+" term }
//! term := [int] base
//! base := "P" int | "C" int | "K" int | "K1," int | "S(" int "," int "," int ")"
//!       | "co(" expr ")" | "diamond"
//! ```
//! Whitespace is ignored. Printing produces the canonical spacing-free form.

use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NamedGraphSpec {
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub multiplicity: usize,
    pub base: Base,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Base {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,s}`
    Star(usize),
    /// Subdivided claw with legs of `h`, `i` and `j` edges.
    Spider(usize, usize, usize),
    Complement(Box<NamedGraphSpec>),
    Diamond,
}

impl NamedGraphSpec {
    pub fn single(base: Base) -> NamedGraphSpec {
        NamedGraphSpec {
            terms: vec![Term { multiplicity: 1, base }],
        }
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::Parse { pos: 0, msg });
        if self.terms.is_empty() {
            return bad("empty expression".into());
        }
        for t in &self.terms {
            if t.multiplicity == 0 {
                return bad("multiplicity must be positive".into());
            }
            match &t.base {
                Base::Path(r) | Base::Complete(r) if *r == 0 => return bad(format!("{} needs r >= 1", t.base)),
                Base::Cycle(r) if *r < 3 => return bad(format!("C{r} needs r >= 3")),
                Base::Star(0) => return bad("K1,s needs s >= 1".into()),
                Base::Spider(h, i, j) if !(1 <= *h && h <= i && i <= j) => {
                    return bad(format!("S({h},{i},{j}) needs 1 <= h <= i <= j"))
                }
                Base::Complement(inner) => inner.validate()?,
                _ => {}
            }
        }
        Ok(())
    }

    /// The denoted graph on fresh ids `0..n`, components in term order.
    pub fn realize(&self) -> Result<Graph, GraphError> {
        self.validate()?;
        let mut g = Graph::edgeless(0);
        for t in &self.terms {
            let part = t.base.realize()?;
            for _ in 0..t.multiplicity {
                g = g.disjoint_union(&part).0;
            }
        }
        Ok(g)
    }
}

impl Base {
    fn realize(&self) -> Result<Graph, GraphError> {
        Ok(match *self {
            Base::Path(r) => Graph::path(r),
            Base::Cycle(r) => Graph::cycle(r),
            Base::Complete(r) => Graph::complete(r),
            Base::Star(s) => {
                let edges: Vec<_> = (1..=s).map(|v| (0, v)).collect();
                Graph::new(s + 1, &edges)?
            }
            Base::Spider(h, i, j) => {
                let mut edges = Vec::new();
                let mut next = 1;
                for len in [h, i, j] {
                    let mut prev = 0;
                    for _ in 0..len {
                        edges.push((prev, next));
                        prev = next;
                        next += 1;
                    }
                }
                Graph::new(next, &edges)?
            }
            Base::Complement(ref inner) => inner.realize()?.complement(),
            Base::Diamond => diamond_spec().realize()?.complement(),
        })
    }
}

/// `2P1+P2`, whose complement is the diamond.
fn diamond_spec() -> NamedGraphSpec {
    NamedGraphSpec {
        terms: vec![
            Term {
                multiplicity: 2,
                base: Base::Path(1),
            },
            Term {
                multiplicity: 1,
                base: Base::Path(2),
            },
        ],
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::Path(r) => write!(f, "P{r}"),
            Base::Cycle(r) => write!(f, "C{r}"),
            Base::Complete(r) => write!(f, "K{r}"),
            Base::Star(s) => write!(f, "K1,{s}"),
            Base::Spider(h, i, j) => write!(f, "S({h},{i},{j})"),
            Base::Complement(inner) => write!(f, "co({inner})"),
            Base::Diamond => write!(f, "diamond"),
        }
    }
}

impl fmt::Display for NamedGraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if t.multiplicity != 1 {
                write!(f, "{}", t.multiplicity)?;
            }
            write!(f, "{}", t.base)?;
        }
        Ok(())
    }
}

impl FromStr for NamedGraphSpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_spec(s)
    }
}

/// Parses and validates a grammar string.
pub fn parse_spec(text: &str) -> Result<NamedGraphSpec, GraphError> {
    let mut p = Parser {
        chars: text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
        at: 0,
        len: text.len(),
    };
    let spec = p.expr()?;
    if p.at < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    spec.validate()?;
    Ok(spec)
}

struct Parser {
    chars: Vec<(usize, char)>,
    at: usize,
    len: usize,
}

impl Parser {
    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.len, |&(i, _)| i)
    }

    fn error(&self, msg: &str) -> GraphError {
        GraphError::Parse {
            pos: self.pos(),
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), GraphError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        let n = word.chars().count();
        let matches = self.chars[self.at..].iter().map(|&(_, c)| c).take(n).eq(word.chars());
        if matches {
            self.at += n;
        }
        matches
    }

    fn int(&mut self) -> Result<usize, GraphError> {
        let start = self.at;
        let mut value: usize = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as usize))
                .ok_or_else(|| self.error("integer overflow"))?;
            self.at += 1;
        }
        if self.at == start {
            return Err(self.error("expected integer"));
        }
        Ok(value)
    }

    fn expr(&mut self) -> Result<NamedGraphSpec, GraphError> {
        let mut terms = vec![self.term()?];
        while self.eat('+') {
            terms.push(self.term()?);
        }
        Ok(NamedGraphSpec { terms })
    }

    fn term(&mut self) -> Result<Term, GraphError> {
        let multiplicity = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.int()?
        } else {
            1
        };
        Ok(Term {
            multiplicity,
            base: self.base()?,
        })
    }

    fn base(&mut self) -> Result<Base, GraphError> {
        if self.keyword("diamond") {
            return Ok(Base::Diamond);
        }
        if self.keyword("co(") {
            let inner = self.expr()?;
            self.expect(')')?;
            return Ok(Base::Complement(Box::new(inner)));
        }
        match self.peek() {
            Some('P') => {
                self.at += 1;
                Ok(Base::Path(self.int()?))
            }
            Some('C') => {
                self.at += 1;
                Ok(Base::Cycle(self.int()?))
            }
            Some('K') => {
                self.at += 1;
                let r = self.int()?;
                if r == 1 && self.eat(',') {
                    Ok(Base::Star(self.int()?))
                } else {
                    Ok(Base::Complete(r))
                }
            }
            Some('S') => {
                self.at += 1;
                self.expect('(')?;
                let h = self.int()?;
                self.expect(',')?;
                let i = self.int()?;
                self.expect(',')?;
                let j = self.int()?;
                self.expect(')')?;
                Ok(Base::Spider(h, i, j))
            }
            _ => Err(self.error("expected P, C, K, S, co( or diamond")),
        }
    }
}
