//! Short-form graph6 (at most 62 vertices).
//!
//! Byte 0 is `63 + n`. The upper triangle follows in column order
//! `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte, most significant
//! first, zero padded, each byte offset by 63.

use thiserror::Error;

use crate::graph::Graph;

pub const GRAPH6_HEADER: &str = ">>graph6<<";
pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    EmptyInput,
    #[error("malformed graph6 character {byte:#04x} at offset {offset}")]
    MalformedChar { offset: usize, byte: u8 },
    #[error("unsupported graph6 length: only short form with 1..={GRAPH6_MAX_ORDER} vertices is supported")]
    UnsupportedLength,
    #[error("graph6 for {n} vertices needs {expected} bytes, found {found}")]
    LengthMismatch { n: usize, expected: usize, found: usize },
    #[error("nonzero padding bits in the last graph6 byte")]
    NonzeroPadding,
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Encodes `g`; fails for graphs above the short-form cap.
pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::UnsupportedLength);
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(63 + n as u8);
    let (mut acc, mut filled) = (0u8, 0);
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            acc = acc << 1 | (row >> i & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ascii"))
}

/// Decodes one graph6 record. An optional `>>graph6<<` header and trailing
/// line terminator are accepted; offsets in errors count from after the header.
pub fn parse(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let body = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text).as_bytes();
    let (&first, rest) = body.split_first().ok_or(Graph6Error::EmptyInput)?;
    if first == b'~' {
        return Err(Graph6Error::UnsupportedLength);
    }
    if let Some(offset) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::MalformedChar { offset, byte: body[offset] });
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::UnsupportedLength);
    }
    let expected = body_len(n);
    if rest.len() != expected {
        return Err(Graph6Error::LengthMismatch { n, expected: expected + 1, found: body.len() });
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = rest[k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let pad = 6 - k % 6;
        if (rest[k / 6] - 63) & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::from_rows(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let p2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(encode(&p2).unwrap(), "A_");
        assert_eq!(parse("A_").unwrap(), p2);
        assert_eq!(parse(">>graph6<<A_\n").unwrap(), p2);
    }

    #[test]
    fn reference_strings() {
        // networkx.to_graph6_bytes(..., header=False)
        let five = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&five).unwrap(), "DQc");
        let corollary =
            Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 5), (5, 4), (4, 1), (5, 2), (2, 4)]).unwrap();
        assert_eq!(encode(&corollary).unwrap(), "EhWw");
        assert_eq!(encode(&Graph::edgeless(1).unwrap()).unwrap(), "@");
    }

    #[test]
    fn errors() {
        assert_eq!(parse(""), Err(Graph6Error::EmptyInput));
        assert_eq!(parse("~?@?"), Err(Graph6Error::UnsupportedLength));
        assert_eq!(parse("?"), Err(Graph6Error::UnsupportedLength));
        assert_eq!(parse("D Qc"), Err(Graph6Error::MalformedChar { offset: 1, byte: b' ' }));
        assert_eq!(parse("DQ"), Err(Graph6Error::LengthMismatch { n: 5, expected: 3, found: 2 }));
        // P2 has one data bit; the other five must be zero
        assert_eq!(parse("A`"), Err(Graph6Error::NonzeroPadding));
        assert_eq!(encode(&Graph::edgeless(63).unwrap()), Err(Graph6Error::UnsupportedLength));
    }

    #[test]
    fn largest_short_form() {
        let g = Graph::edgeless(62).unwrap().complement();
        let s = encode(&g).unwrap();
        assert_eq!(s.as_bytes()[0], 125);
        assert_eq!(parse(&s).unwrap(), g);
    }
}
