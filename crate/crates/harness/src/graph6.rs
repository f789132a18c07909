//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix, six bits per printable byte.
//!
//! Pairs `(i, j)` with `i < j` are ordered by `j`, then `i`:
//! `(0,1), (0,2), (1,2), (0,3), ...`. Each byte carries six bits, most
//! significant first, offset by 63. Orders up to 62 use a one-byte header;
//! larger orders use `~` followed by 18 bits in three bytes.

use cid_core::{Graph, GraphError, VertexSet, MAX_VERTICES};
use thiserror::Error;

const BIAS: u8 = 63;
const LONG: u8 = b'~';
const OPTIONAL_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty line")]
    Empty,
    #[error("malformed header: {0}")]
    Header(&'static str),
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("order {n} exceeds the supported maximum {max}")]
    TooLarge { n: u64, max: usize },
    #[error("truncated bit block: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{extra} trailing byte(s) after the bit block")]
    TrailingGarbage { extra: usize },
    #[error("padding bits of the last byte are not zero")]
    NonzeroPadding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    let byte = bytes[offset];
    if !(BIAS..=BIAS + 63).contains(&byte) {
        return Err(Graph6Error::InvalidByte { offset, byte });
    }
    Ok(byte - BIAS)
}

/// Parses one graph6 line. A trailing newline (`\n` or `\r\n`) and the
/// optional `>>graph6<<` prefix are accepted; anything else after the bit
/// block is an error.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(OPTIONAL_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    let (n, body) = if bytes[0] != LONG {
        (u64::from(sextet(bytes, 0)?), 1)
    } else if bytes.get(1) == Some(&LONG) {
        if bytes.len() < 8 {
            return Err(Graph6Error::Header("eight-byte header is cut short"));
        }
        let mut n = 0u64;
        for offset in 2..8 {
            n = n << 6 | u64::from(sextet(bytes, offset)?);
        }
        (n, 8)
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::Header("four-byte header is cut short"));
        }
        let mut n = 0u64;
        for offset in 1..4 {
            n = n << 6 | u64::from(sextet(bytes, offset)?);
        }
        (n, 4)
    };
    if n > MAX_VERTICES as u64 {
        return Err(Graph6Error::TooLarge { n, max: MAX_VERTICES });
    }
    let n = n as usize;

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let found = bytes.len() - body;
    if found < expected {
        return Err(Graph6Error::Truncated { expected, found });
    }
    if found > expected {
        return Err(Graph6Error::TrailingGarbage {
            extra: found - expected,
        });
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = sextet(bytes, body + k / 6)?;
            if chunk >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if !bits.is_multiple_of(6) {
        let last = sextet(bytes, bytes.len() - 1)?;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::from_adjacency(adj)?)
}

/// Canonical graph6 encoding, without a trailing newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(LONG);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + BIAS);
        }
    }
    let mut chunk = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | u8::from(g.has_edge(i, j));
            used += 1;
            if used == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((chunk << (6 - used)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
