//! graph6 codec for graphs with at most 62 vertices.
//!
//! Layout: one length byte `n + 63`, then the upper triangle read column by
//! column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed big-endian into
//! 6-bit groups, zero padded, each group offset by 63.

use super::Graph;
use thiserror::Error;

const HEADER: &str = ">>graph6<<";
const MAX_GRAPH6_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    Empty,
    /// The length byte announces more than 62 vertices.
    UnsupportedSize,
    /// A byte outside the printable range `63..=126`.
    InvalidByte(u8),
    Truncated {
        expected: usize,
        found: usize,
    },
    TrailingData,
    NonZeroPadding,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 parse error at byte {offset}: {kind:?}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

fn err(offset: usize, kind: Graph6ErrorKind) -> Graph6Error {
    Graph6Error { offset, kind }
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes a single graph6 line. A leading `>>graph6<<` header and a
/// trailing line break are accepted.
pub fn graph_from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let start = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let mut end = bytes.len();
    while end > start && matches!(bytes[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let data = &bytes[start..end];

    let Some(&len_byte) = data.first() else {
        return Err(err(start, Graph6ErrorKind::Empty));
    };
    if !(63..=126).contains(&len_byte) {
        return Err(err(start, Graph6ErrorKind::InvalidByte(len_byte)));
    }
    let n = (len_byte - 63) as usize;
    if n > MAX_GRAPH6_ORDER {
        return Err(err(start, Graph6ErrorKind::UnsupportedSize));
    }

    let expected = body_len(n);
    let body = &data[1..];
    for (i, &b) in body.iter().enumerate().take(expected) {
        if !(63..=126).contains(&b) {
            return Err(err(start + 1 + i, Graph6ErrorKind::InvalidByte(b)));
        }
    }
    if body.len() < expected {
        return Err(err(
            start + data.len(),
            Graph6ErrorKind::Truncated {
                expected,
                found: body.len(),
            },
        ));
    }
    if body.len() > expected {
        return Err(err(start + 1 + expected, Graph6ErrorKind::TrailingData));
    }

    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = (body[k / 6] - 63) as u32;
            if group >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1u64 << j;
                adj[j] |= 1u64 << i;
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let last = (body[k / 6] - 63) as u32;
        if last & ((1u32 << (6 - k % 6)) - 1) != 0 {
            return Err(err(start + 1 + k / 6, Graph6ErrorKind::NonZeroPadding));
        }
    }
    Ok(Graph::from_rows(adj).expect("decoded rows are symmetric"))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 supports at most {MAX_GRAPH6_ORDER} vertices, got {0}")]
pub struct UnsupportedOrder(pub usize);

/// Encodes without header or line break.
pub fn graph_to_graph6(g: &Graph) -> Result<String, UnsupportedOrder> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(UnsupportedOrder(n));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}
