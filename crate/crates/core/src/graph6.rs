//! graph6 encoding, as produced by nauty's `geng` and friends.
//!
//! The string is a size header followed by the upper triangle of the
//! adjacency matrix in column-major order (`x(0,1), x(0,2), x(1,2), ...`),
//! six bits per printable byte offset by 63.

use thiserror::Error;

use crate::graph::Graph;

const BIAS: u8 = 63;
const LONG: u8 = 126;
const HEADER: &str = ">>graph6<<";
/// Largest order accepted from the 8-byte header; the bit matrix alone would
/// otherwise exceed addressable memory.
const MAX_DECODE_VERTICES: usize = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6: {0}")]
    Malformed(String),
    #[error("unsupported graph6 size: {0}")]
    UnsupportedLength(String),
}

fn malformed(msg: impl Into<String>) -> Graph6Error {
    Graph6Error::Malformed(msg.into())
}

pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(BIAS..=LONG).contains(&b)) {
        return Err(malformed(format!(
            "byte {b:#04x} outside the printable range"
        )));
    }
    let (n, body) = decode_size(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - BIAS;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::new(n, edges).map_err(|e| malformed(e.to_string()))
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8]), Graph6Error> {
    let word = |chunk: &[u8]| {
        chunk
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize)
    };
    match bytes {
        [LONG, LONG, rest @ ..] => {
            if rest.len() < 6 {
                return Err(malformed("truncated 8-byte size header"));
            }
            let n = word(&rest[..6]);
            if n > MAX_DECODE_VERTICES {
                return Err(Graph6Error::UnsupportedLength(format!("{n} vertices")));
            }
            Ok((n, &rest[6..]))
        }
        [LONG, rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed("truncated 4-byte size header"));
            }
            Ok((word(&rest[..3]), &rest[3..]))
        }
        [b, rest @ ..] => Ok(((b - BIAS) as usize, rest)),
        [] => unreachable!(),
    }
}

pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(LONG);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + BIAS));
    } else if n < 1 << 36 {
        out.extend([LONG, LONG]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + BIAS));
    } else {
        return Err(Graph6Error::UnsupportedLength(format!("{n} vertices")));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let column = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | u8::from(column.binary_search(&i).is_ok());
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
