//! Text formats: graph6 (canonical interchange), edgelist (human), DOT (output only).

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
    Dot,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edgelist" | "el" => Ok(GraphFormat::EdgeList),
            "dot" => Ok(GraphFormat::Dot),
            other => Err(Error::Validation(format!("unknown graph format: {other}"))),
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Graph6 => parse_graph6(text),
        GraphFormat::EdgeList => parse_edgelist(text),
        GraphFormat::Dot => Err(Error::Unsupported(
            "DOT is an output-only format".to_string(),
        )),
    }
}

pub fn serialize_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => to_graph6(g),
        GraphFormat::EdgeList => to_edgelist(g),
        GraphFormat::Dot => to_dot(g, None),
    }
}

// ---------------------------------------------------------------------------
// edgelist: optional first line "n=<k>", then "u v" per line, blank lines
// ignored. Without the header the vertex count is max index + 1.
// ---------------------------------------------------------------------------

fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)
    let mut max_index: Option<usize> = None;
    let mut saw_content = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if !saw_content {
            saw_content = true;
            if let Some(rest) = line.strip_prefix("n=") {
                n = Some(rest.trim().parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("invalid vertex count {rest:?}"),
                })?);
                continue;
            }
        }
        let mut parts = line.split_whitespace();
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(a), Some(b), None) => {
                let u = a.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("invalid vertex {a:?}"),
                })?;
                let v = b.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("invalid vertex {b:?}"),
                })?;
                (u, v)
            }
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected \"u v\", got {line:?}"),
                })
            }
        };
        if u == v {
            return Err(Error::Validation(format!(
                "self-loop at vertex {u} (line {line_no})"
            )));
        }
        max_index = Some(max_index.map_or(u.max(v), |m| m.max(u.max(v))));
        edges.push((u, v, line_no));
    }

    let n = n.unwrap_or(max_index.map_or(0, |m| m + 1));
    let mut g = Graph::empty(n);
    for (u, v, line_no) in edges {
        g.add_edge(u, v).map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("edge ({u}, {v}) out of range for n={n}"),
        })?;
    }
    Ok(g)
}

fn to_edgelist(g: &Graph) -> String {
    let mut out = format!("n={}", g.n());
    for (u, v) in g.edges() {
        out.push('\n');
        out.push_str(&format!("{u} {v}"));
    }
    out
}

// ---------------------------------------------------------------------------
// graph6: short form for n <= 62, long form for n <= 258047. Bits are the
// upper triangle of the adjacency matrix in column order (0,1), (0,2), (1,2),
// (0,3), ..., packed into 6-bit groups offset by 63.
// ---------------------------------------------------------------------------

const G6_HEADER: &str = ">>graph6<<";

fn parse_graph6(text: &str) -> Result<Graph> {
    let mut s = text.trim();
    if let Some(rest) = s.strip_prefix(G6_HEADER) {
        s = rest;
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse {
            line: 1,
            msg: "empty graph6 string".to_string(),
        });
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse {
                line: 1,
                msg: format!("invalid graph6 byte {b:#04x} at offset {i}"),
            });
        }
    }

    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::Unsupported(
                "graph6 strings with n > 258047 are not supported".to_string(),
            ));
        }
        if bytes.len() < 4 {
            return Err(Error::Parse {
                line: 1,
                msg: "truncated graph6 vertex count".to_string(),
            });
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b as usize - 63));
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Parse {
            line: 1,
            msg: format!(
                "graph6 body has {} groups, expected {expected} for n={n}",
                body.len()
            ),
        });
    }

    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let group = (body[bit / 6] - 63) as usize;
            if group & (1 << (5 - bit % 6)) != 0 {
                g.add_edge(u, v)?;
            }
            bit += 1;
        }
    }
    // padding bits must be zero
    for pad in bit..expected * 6 {
        let group = (body[pad / 6] - 63) as usize;
        if group & (1 << (5 - pad % 6)) != 0 {
            return Err(Error::Parse {
                line: 1,
                msg: "nonzero padding bits in graph6 string".to_string(),
            });
        }
    }
    Ok(g)
}

fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else if n <= 258_047 {
        bytes.push(126);
        bytes.push(((n >> 12) & 0x3f) as u8 + 63);
        bytes.push(((n >> 6) & 0x3f) as u8 + 63);
        bytes.push((n & 0x3f) as u8 + 63);
    } else {
        // short/long form covers every graph this toolkit produces
        panic!("graph6 serialization limited to n <= 258047 (got {n})");
    }

    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            group <<= 1;
            if g.has_edge(u, v) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        bytes.push(group + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

// ---------------------------------------------------------------------------
// DOT (output only)
// ---------------------------------------------------------------------------

pub(crate) fn to_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match labels {
            Some(ls) => out.push_str(&format!("  {v} [label=\"{}\"];\n", ls[v])),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
