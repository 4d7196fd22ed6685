//! graph6 / sparse6 and a plain edge-list text format.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

impl FormatError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        FormatError {
            line,
            message: message.into(),
        }
    }
}

/// Stream formats. `Graph6` lines starting with `:` are read as sparse6.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Graph6,
    EdgeList,
}

impl FromStr for InputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" | "g6" | "sparse6" | "s6" => Ok(InputFormat::Graph6),
            "edgelist" | "el" => Ok(InputFormat::EdgeList),
            other => Err(format!("unknown format `{other}` (expected graph6, sparse6 or edgelist)")),
        }
    }
}

impl fmt::Display for InputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InputFormat::Graph6 => "graph6",
            InputFormat::EdgeList => "edgelist",
        })
    }
}

/// One decoded graph and the (1-based) line it started on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphRecord {
    pub line: usize,
    pub graph: Graph,
}

/// Graphs read so far plus any records skipped in lenient mode.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReadOutcome {
    pub graphs: Vec<GraphRecord>,
    pub skipped: Vec<FormatError>,
}

/// Decodes a whole stream. A malformed record is an error unless
/// `lenient`, in which case it is recorded and skipped.
pub fn read_graphs(input: &str, format: InputFormat, lenient: bool) -> Result<ReadOutcome, FormatError> {
    let mut out = ReadOutcome::default();
    let push = |res: Result<GraphRecord, FormatError>, out: &mut ReadOutcome| match res {
        Ok(g) => Ok(out.graphs.push(g)),
        Err(e) if lenient => Ok(out.skipped.push(e)),
        Err(e) => Err(e),
    };
    match format {
        InputFormat::Graph6 => {
            for (i, raw) in input.lines().enumerate() {
                let line = raw.trim();
                if line.is_empty() {
                    continue;
                }
                let res = decode_line(line)
                    .map(|graph| GraphRecord { line: i + 1, graph })
                    .map_err(|m| FormatError::new(i + 1, m));
                push(res, &mut out)?;
            }
        }
        InputFormat::EdgeList => {
            let mut block: Vec<(usize, &str)> = Vec::new();
            let lines = input.lines().enumerate().map(|(i, l)| (i + 1, l));
            for (no, raw) in lines.chain(std::iter::once((0, ""))) {
                let line = raw.split('#').next().unwrap().trim();
                if line.is_empty() {
                    // a comment-only line does not end a block
                    if raw.trim().is_empty() && !block.is_empty() {
                        push(parse_edge_block(&block), &mut out)?;
                        block.clear();
                    }
                    continue;
                }
                block.push((no, line));
            }
        }
    }
    Ok(out)
}

fn decode_line(line: &str) -> Result<Graph, String> {
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let line = line.strip_prefix(">>sparse6<<").unwrap_or(line);
    if line.starts_with(':') {
        from_sparse6(line)
    } else {
        from_graph6(line)
    }
}

fn parse_edge_block(block: &[(usize, &str)]) -> Result<GraphRecord, FormatError> {
    let first_line = block[0].0;
    let mut declared_n = None;
    let mut edges = Vec::new();
    for (idx, &(no, line)) in block.iter().enumerate() {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| FormatError::new(no, format!("`{s}` is not a vertex id")))
        };
        match fields.as_slice() {
            [n] if idx == 0 => declared_n = Some(parse(n)?),
            [u, v] => edges.push((parse(u)?, parse(v)?)),
            _ => return Err(FormatError::new(no, format!("expected `u v`, got `{line}`"))),
        }
    }
    let inferred = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = declared_n.unwrap_or(inferred);
    Graph::from_edge_list(n, &edges)
        .map(|graph| GraphRecord { line: first_line, graph })
        .map_err(|e| FormatError::new(first_line, e.to_string()))
}

/// Bytes of a printable 6-bit string, each minus 63.
fn six_bits(s: &str) -> Result<Vec<u8>, String> {
    s.bytes()
        .map(|b| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err(format!("byte {b:#04x} outside the printable range"))
            }
        })
        .collect()
}

/// Decodes `N(n)` and returns `(n, rest)`.
fn decode_n(data: &[u8]) -> Result<(usize, &[u8]), String> {
    let take = |d: &[u8], k: usize| -> Result<usize, String> {
        if d.len() < k {
            return Err("truncated vertex count".into());
        }
        Ok(d[..k].iter().fold(0usize, |acc, &x| (acc << 6) | x as usize))
    };
    match data {
        [] => Err("empty record".into()),
        [63, 63, rest @ ..] => Ok((take(rest, 6)?, &rest[6.min(rest.len())..])),
        [63, rest @ ..] => Ok((take(rest, 3)?, &rest[3.min(rest.len())..])),
        [x, rest @ ..] => Ok((*x as usize, rest)),
    }
}

fn encode_n(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8]
    } else if n <= 258_047 {
        vec![63, (n >> 12) as u8 & 63, (n >> 6) as u8 & 63, n as u8 & 63]
    } else {
        let mut v = vec![63, 63];
        v.extend((0..6).rev().map(|i| (n >> (6 * i)) as u8 & 63));
        v
    }
}

pub fn from_graph6(s: &str) -> Result<Graph, String> {
    let data = six_bits(s)?;
    let (n, rest) = decode_n(&data)?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if rest.len() != need {
        return Err(format!("expected {need} data bytes for {n} vertices, found {}", rest.len()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (rest[k / 6] >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges).map_err(|e| e.to_string())
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = encode_n(n);
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                data[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    out.extend(data);
    out.into_iter().map(|b| char::from(b + 63)).collect()
}

pub fn from_sparse6(s: &str) -> Result<Graph, String> {
    let body = s.strip_prefix(':').ok_or("sparse6 record must start with `:`")?;
    let data = six_bits(body)?;
    let (n, rest) = decode_n(&data)?;
    let mut k = 1;
    while (1usize << k) < n {
        k += 1;
    }
    let mut edges = Vec::new();
    let mut v = 0usize;
    let mut chunks = rest.iter().copied();
    let (mut d, mut d_len) = (0u8, 0usize);
    'outer: loop {
        if d_len < 1 {
            match chunks.next() {
                Some(c) => d = c,
                None => break,
            }
            d_len = 6;
        }
        d_len -= 1;
        let b = (d >> d_len) & 1;
        let mut x = (d as usize) & ((1 << d_len) - 1);
        let mut x_len = d_len;
        while x_len < k {
            match chunks.next() {
                Some(c) => d = c,
                None => break 'outer,
            }
            x = (x << 6) + d as usize;
            x_len += 6;
        }
        x >>= x_len - k;
        d_len = x_len - k;
        if b == 1 {
            v += 1;
        }
        if x >= n || v >= n {
            break;
        } else if x > v {
            v = x;
        } else {
            if x == v {
                return Err(format!("self-loop at vertex {v}"));
            }
            edges.push((x, v));
        }
    }
    Graph::from_edge_list(n, &edges).map_err(|e| e.to_string())
}

/// Edge-list text for one graph: a vertex-count line then `u v` lines.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::from_edge_list(n, &e).unwrap()
    }

    #[test]
    fn graph6_hand_decoded() {
        assert_eq!(from_graph6("C~").unwrap(), k(4));
        assert_eq!(from_graph6("A_").unwrap(), k(2));
        assert_eq!(from_graph6("A?").unwrap(), Graph::empty(2));
        assert_eq!(from_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(to_graph6(&k(4)), "C~");
        assert!(from_graph6("C~~").is_err());
        assert!(from_graph6("C\t").is_err());
    }

    #[test]
    fn graph6_long_header_round_trip() {
        let n = 70;
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let g = Graph::from_edge_list(n, &e).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn sparse6_examples() {
        // the example from the format description: 7 vertices
        let g = from_sparse6(":Fa@x^").unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2), (5, 6)]);
        assert_eq!(from_sparse6(":An").unwrap(), k(2));
    }

    #[test]
    fn edge_list_blocks() {
        let text = "# two graphs\n0 1\n1 2\n2 0\n\n4\n0 1  # pendant\n\n";
        let out = read_graphs(text, InputFormat::EdgeList, false).unwrap();
        assert_eq!(out.graphs.len(), 2);
        assert_eq!(out.graphs[0].graph, Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap());
        assert_eq!(out.graphs[1].graph.n(), 4);
        assert_eq!(out.graphs[1].line, 6);
    }

    #[test]
    fn errors_carry_lines() {
        let err = read_graphs("C~\nC~x\n", InputFormat::Graph6, false).unwrap_err();
        assert_eq!(err.line, 2);
        let out = read_graphs("C~\nC~x\nA_\n", InputFormat::Graph6, true).unwrap();
        assert_eq!(out.graphs.len(), 2);
        assert_eq!(out.skipped.len(), 1);
        let err = read_graphs("0 1\n1 x\n", InputFormat::EdgeList, false).unwrap_err();
        assert_eq!(err.line, 2);
        let err = read_graphs("0 0\n", InputFormat::EdgeList, false).unwrap_err();
        assert_eq!(err.line, 1);
    }
}
