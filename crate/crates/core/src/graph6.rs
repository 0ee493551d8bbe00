//! graph6 encoding (McKay's format): a size header `N(n)` followed by the upper
//! triangle of the adjacency matrix, column by column, packed six bits per
//! printable byte (`value + 63`).
//!
//! The reader is strict: non-minimal size headers, bytes outside `63..=126`,
//! non-zero padding bits and trailing data are all rejected, so every accepted
//! string is the canonical encoding of the graph it decodes to.

use thiserror::Error;

use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;
const LONG: u8 = 126;
/// Largest order the eight-byte header can represent.
pub const MAX_ORDER: u64 = (1 << 36) - 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("graph6 byte {offset}: empty input")]
    Empty { offset: usize },
    #[error("graph6 byte {offset}: byte 0x{byte:02x} outside the printable range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph6 byte {offset}: malformed size header ({reason})")]
    BadHeader { offset: usize, reason: &'static str },
    #[error("graph6 byte {offset}: truncated, expected {expected} data bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("graph6 byte {offset}: padding bits are not zero")]
    NonZeroPadding { offset: usize },
    #[error("graph6 byte {offset}: unexpected trailing data")]
    TrailingData { offset: usize },
}

impl Graph6Error {
    pub fn offset(&self) -> usize {
        match *self {
            Graph6Error::Empty { offset }
            | Graph6Error::InvalidByte { offset, .. }
            | Graph6Error::BadHeader { offset, .. }
            | Graph6Error::Truncated { offset, .. }
            | Graph6Error::NonZeroPadding { offset }
            | Graph6Error::TrailingData { offset } => offset,
        }
    }
}

fn encode_order(n: u64, out: &mut Vec<u8>) {
    assert!(n <= MAX_ORDER, "graph6 cannot encode order {n}");
    let (prefix, groups): (&[u8], u32) = match n {
        0..=62 => {
            out.push(n as u8 + BIAS);
            return;
        }
        63..=258_047 => (&[LONG], 3),
        _ => (&[LONG, LONG], 6),
    };
    out.extend_from_slice(prefix);
    for k in (0..groups).rev() {
        out.push(((n >> (6 * k)) & 0x3f) as u8 + BIAS);
    }
}

/// Canonical graph6 string of `g` (no header, no newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_order(n as u64, &mut out);
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    match bytes.get(offset) {
        None => Err(Graph6Error::BadHeader {
            offset,
            reason: "size header cut short",
        }),
        Some(&b) if (BIAS..=LONG).contains(&b) => Ok(u64::from(b - BIAS)),
        Some(&b) => Err(Graph6Error::InvalidByte { offset, byte: b }),
    }
}

/// Decodes the size header, returning `(n, header_len)`.
fn decode_order(bytes: &[u8]) -> Result<(u64, usize), Graph6Error> {
    let first = sextet(bytes, 0)?;
    if first != u64::from(LONG - BIAS) {
        return Ok((first, 1));
    }
    let (start, groups, min) = if bytes.get(1) == Some(&LONG) {
        (2, 6, 258_048)
    } else {
        (1, 3, 63)
    };
    let mut n = 0;
    for k in 0..groups {
        n = (n << 6) | sextet(bytes, start + k)?;
    }
    if n < min {
        return Err(Graph6Error::BadHeader {
            offset: 0,
            reason: "non-minimal size header",
        });
    }
    Ok((n, start + groups))
}

/// Parses one graph6 string. A leading `>>graph6<<` header and trailing line
/// terminator are tolerated; offsets in errors refer to the string as given.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let skip = if text.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let body = text[skip..].trim_end_matches(['\n', '\r']);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty { offset: skip });
    }
    let (n, header_len) = decode_order(bytes).map_err(|e| shift(e, skip))?;
    if n > usize::MAX as u64 || n > (1 << 32) {
        return Err(Graph6Error::BadHeader {
            offset: skip,
            reason: "order too large to materialise",
        });
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let data_len = bits.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() < data_len {
        return Err(Graph6Error::Truncated {
            offset: skip + bytes.len(),
            expected: data_len,
        });
    }
    if data.len() > data_len {
        return Err(Graph6Error::TrailingData {
            offset: skip + header_len + data_len,
        });
    }
    for (k, &b) in data.iter().enumerate() {
        if !(BIAS..=LONG).contains(&b) {
            return Err(Graph6Error::InvalidByte {
                offset: skip + header_len + k,
                byte: b,
            });
        }
    }
    if !bits.is_multiple_of(6) {
        let last = data[data_len - 1] - BIAS;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding {
                offset: skip + header_len + data_len - 1,
            });
        }
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

fn shift(e: Graph6Error, by: usize) -> Graph6Error {
    match e {
        Graph6Error::Empty { offset } => Graph6Error::Empty {
            offset: offset + by,
        },
        Graph6Error::InvalidByte { offset, byte } => Graph6Error::InvalidByte {
            offset: offset + by,
            byte,
        },
        Graph6Error::BadHeader { offset, reason } => Graph6Error::BadHeader {
            offset: offset + by,
            reason,
        },
        Graph6Error::Truncated { offset, expected } => Graph6Error::Truncated {
            offset: offset + by,
            expected,
        },
        Graph6Error::NonZeroPadding { offset } => Graph6Error::NonZeroPadding {
            offset: offset + by,
        },
        Graph6Error::TrailingData { offset } => Graph6Error::TrailingData {
            offset: offset + by,
        },
    }
}
