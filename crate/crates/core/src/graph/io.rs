//! Edge-list and graph6 text formats.
//!
//! The edge-list format is a header line `n m` followed by `m` lines `u v`
//! with 0-based ids. The writer emits edges sorted with `u < v`, so output
//! read back and written again is byte-identical.

use std::fmt::Write as _;

use super::{Graph, GraphError};

/// Largest vertex count handled by the graph6 codec.
pub const GRAPH6_MAX_N: usize = 62;

fn parse_err(line: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Parse {
        pos: line,
        msg: msg.into(),
    }
}

/// Parses edge-list text. Error positions are 1-based line numbers.
pub fn read_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let (n, m) = two_ints(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (ln, line) in lines {
        if edges.len() == m {
            return Err(parse_err(ln, format!("more than {m} edges")));
        }
        edges.push(two_ints(ln, line)?);
    }
    if edges.len() != m {
        return Err(parse_err(0, format!("expected {m} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges)
}

fn two_ints(ln: usize, line: &str) -> Result<(usize, usize), GraphError> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(parse_err(ln, "expected two integers"));
    }
    let a = parts[0]
        .parse()
        .map_err(|_| parse_err(ln, format!("bad integer {:?}", parts[0])))?;
    let b = parts[1]
        .parse()
        .map_err(|_| parse_err(ln, format!("bad integer {:?}", parts[1])))?;
    Ok((a, b))
}

/// Writes edge-list text. Ids must be exactly `0..n`.
pub fn write_edge_list(g: &Graph) -> Result<String, GraphError> {
    if !g.is_dense() {
        return Err(GraphError::NonDenseIds);
    }
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    Ok(out)
}

/// Encodes a graph on ids `0..n` with `n <= 62`.
pub fn to_graph6(g: &Graph) -> Result<String, GraphError> {
    if !g.is_dense() {
        return Err(GraphError::NonDenseIds);
    }
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(GraphError::OutOfRange { v: n, n: GRAPH6_MAX_N });
    }
    let mut out = String::new();
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut bits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            bits += 1;
            if bits == 6 {
                out.push((63 + acc) as char);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((63 + (acc << (6 - bits))) as char);
    }
    Ok(out)
}

/// Decodes one graph6 string. Surrounding whitespace is ignored.
pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim().as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let (&first, body) = bytes.split_first().ok_or_else(|| parse_err(0, "empty graph6 string"))?;
    if !(63..=126).contains(&first) {
        return Err(parse_err(0, "bad size byte"));
    }
    let n = (first - 63) as usize;
    if n > GRAPH6_MAX_N {
        return Err(parse_err(0, format!("graph6 supports n <= {GRAPH6_MAX_N}")));
    }
    let total = n * n.saturating_sub(1) / 2;
    if body.len() != total.div_ceil(6) {
        return Err(parse_err(
            1,
            format!("expected {} data bytes, found {}", total.div_ceil(6), body.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(parse_err(1 + k / 6, "bad data byte"));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if !total.is_multiple_of(6) {
        let last = body[body.len() - 1] - 63;
        if last & ((1 << (6 - total % 6)) - 1) != 0 {
            return Err(parse_err(body.len(), "nonzero padding bits"));
        }
    }
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let text = "4 3\n0 1\n1 2\n2 3\n";
        let g = read_edge_list(text).unwrap();
        assert_eq!(g, Graph::path(4));
        assert_eq!(write_edge_list(&g).unwrap(), text);
        assert_eq!(read_edge_list("3 0\n").unwrap(), Graph::edgeless(3));
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(read_edge_list("3 1\n0 0\n"), Err(GraphError::SelfLoop(0))));
        assert!(matches!(
            read_edge_list("3 1\n0 5\n"),
            Err(GraphError::OutOfRange { .. })
        ));
        assert!(read_edge_list("3 2\n0 1\n").is_err());
        assert!(read_edge_list("3 x\n").is_err());
        let gap = Graph::path(3).delete_vertices(&[0]).unwrap();
        assert_eq!(write_edge_list(&gap), Err(GraphError::NonDenseIds));
    }

    #[test]
    fn graph6_known_strings() {
        assert_eq!(to_graph6(&Graph::complete(4)).unwrap(), "C~");
        assert_eq!(to_graph6(&Graph::path(4)).unwrap(), "Ch");
        assert_eq!(to_graph6(&Graph::edgeless(0)).unwrap(), "?");
        assert_eq!(from_graph6("C~").unwrap(), Graph::complete(4));
        let petersen = from_graph6("IheA@GUAo").unwrap();
        assert_eq!((petersen.n(), petersen.m()), (10, 15));
        assert_eq!(to_graph6(&petersen).unwrap(), "IheA@GUAo");
        assert!(from_graph6("C").is_err());
    }
}
