//! Edge-list and graph6 readers and writers.

use std::collections::HashMap;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum InputFormat {
    #[default]
    EdgeList,
    Graph6,
}

impl FromStr for InputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" | "edgelist" => Ok(InputFormat::EdgeList),
            "graph6" | "g6" => Ok(InputFormat::Graph6),
            other => Err(Error::InvalidArgument(format!("unknown input format `{other}`"))),
        }
    }
}

pub fn parse_graph(text: &str, format: InputFormat) -> Result<Graph> {
    match format {
        InputFormat::EdgeList => parse_edge_list(text),
        InputFormat::Graph6 => {
            let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
            let (line, first) = lines.next().ok_or(Error::EmptyInput)?;
            if let Some((extra, _)) = lines.next() {
                return Err(Error::Malformed {
                    line: extra + 1,
                    msg: "expected a single graph6 record".into(),
                });
            }
            parse_graph6_line(first.trim(), line + 1)
        }
    }
}

/// One graph per non-blank line.
pub fn parse_graph6_corpus(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6_line(l.trim(), i + 1))
        .collect()
}

/// Whitespace-separated `u v` pairs, `#` comments. A line holding a single
/// label declares an isolated vertex. Labels get dense ids in order of first
/// appearance.
fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut labels: Vec<&str> = Vec::new();
    let mut edges = Vec::new();
    let mut intern = |label| {
        *ids.entry(label).or_insert_with(|| {
            labels.push(label);
            labels.len() - 1
        })
    };
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[..] {
            [a] => {
                intern(a);
            }
            [a, b] => {
                if a == b {
                    return Err(Error::SelfLoop(a.to_string()));
                }
                let (u, v) = (intern(a), intern(b));
                edges.push((u, v));
            }
            _ => {
                return Err(Error::Malformed {
                    line: i + 1,
                    msg: format!("expected `u v`, found {} tokens", tokens.len()),
                })
            }
        }
    }
    if labels.is_empty() {
        return Err(Error::EmptyInput);
    }
    Graph::from_edges(labels.len(), edges)?.with_labels(labels)
}

fn parse_graph6_line(line: &str, line_no: usize) -> Result<Graph> {
    let body = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line).as_bytes();
    let malformed = |msg: &str| Error::Malformed { line: line_no, msg: msg.to_string() };
    if body.is_empty() {
        return Err(malformed("empty graph6 record"));
    }
    if let Some(&b) = body.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(malformed(&format!("byte {b:#04x} outside the graph6 range")));
    }
    let (n, rest) = match body {
        [126, 126, rest @ ..] => (read_sextets(rest, 6).ok_or_else(|| malformed("truncated order"))?, &rest[6..]),
        [126, rest @ ..] => (read_sextets(rest, 3).ok_or_else(|| malformed("truncated order"))?, &rest[3..]),
        [b, rest @ ..] => ((*b - 63) as usize, rest),
        [] => unreachable!(),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err(malformed(&format!(
            "expected {} adjacency bytes for order {n}, found {}",
            bits.div_ceil(6),
            rest.len()
        )));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

fn read_sextets(bytes: &[u8], count: usize) -> Option<usize> {
    let bytes = bytes.get(..count)?;
    Some(bytes.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
}

/// graph6 encoding of `g` (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    let push_sextets = |out: &mut Vec<u8>, value: usize, count: usize| {
        for k in (0..count).rev() {
            out.push(((value >> (6 * k)) & 63) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push_sextets(&mut out, n, 3);
    } else {
        out.extend([126, 126]);
        push_sextets(&mut out, n, 6);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Edge-list text using the graph's labels. Isolated vertices are written
/// as single-label lines.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for v in g.vertices().filter(|&v| g.degree(v) == 0) {
        out.push_str(g.label(v));
        out.push('\n');
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", g.label(u), g.label(v)));
    }
    out
}
