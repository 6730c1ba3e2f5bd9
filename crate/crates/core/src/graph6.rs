//! graph6 text encoding (header-free).
//!
//! The order prefix is one byte for `n < 63`, `~` plus three bytes up to
//! 258047, and `~~` plus six bytes beyond. The body packs the upper triangle
//! column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) six bits per
//! byte, each byte offset by 63, zero-padded at the end.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid graph6 byte {byte:#04x} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("malformed size header")]
    BadHeader,
    #[error("edge field has {actual} bytes, expected {expected}")]
    BadLength { expected: usize, actual: usize },
}

const BIAS: u8 = 63;
const LONG: u8 = 126;

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(8 + n * n / 12);
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(LONG);
        push_bits(&mut out, n as u64, 18);
    } else {
        out.push(LONG);
        out.push(LONG);
        push_bits(&mut out, n as u64, 36);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn push_bits(out: &mut Vec<u8>, value: u64, width: u32) {
    for shift in (0..width / 6).rev() {
        out.push(((value >> (6 * shift)) & 0x3f) as u8 + BIAS);
    }
}

pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(offset) = bytes.iter().position(|b| !(BIAS..=LONG).contains(b)) {
        return Err(Graph6Error::InvalidByte {
            byte: bytes[offset],
            offset,
        });
    }
    let read = |range: std::ops::Range<usize>| -> Result<usize, Graph6Error> {
        let chunk = bytes.get(range).ok_or(Graph6Error::BadHeader)?;
        Ok(chunk
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize))
    };
    let (n, body) = if bytes[0] != LONG {
        ((bytes[0] - BIAS) as usize, 1)
    } else if bytes.get(1) != Some(&LONG) {
        (read(1..4)?, 4)
    } else {
        (read(2..8)?, 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let actual = bytes.len() - body;
    if actual != expected {
        return Err(Graph6Error::BadLength { expected, actual });
    }
    let mut adj = vec![BTreeSet::new(); n];
    let field = &bytes[body..];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = field[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(adj))
}
