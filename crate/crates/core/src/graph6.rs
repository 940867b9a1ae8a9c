//! graph6 text encoding for graphs on at most 62 vertices.
//!
//! The format is the standard one: a size byte `63 + n`, then the upper
//! triangle bits x(0,1), x(0,2), x(1,2), x(0,3), … packed big-endian into
//! 6-bit groups, each group offset by 63, zero-padded at the end. Only the
//! single-byte size form is supported, which is exactly the `n <= 62`
//! range of [`Graph`].

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

/// Errors from [`decode`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Graph6Error {
    /// Empty input line.
    Empty,
    /// A byte outside the printable range 63..=126.
    InvalidChar { position: usize, byte: u8 },
    /// Size prefix for a graph on 63 or more vertices.
    UnsupportedOrder,
    /// Fewer payload characters than the order requires.
    Truncated { expected: usize, got: usize },
    /// More payload characters than the order requires.
    TrailingData { expected: usize, got: usize },
    /// Padding bits after the upper triangle are not zero.
    NonzeroPadding,
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Graph6Error::Empty => write!(f, "empty graph6 string"),
            Graph6Error::InvalidChar { position, byte } => {
                write!(f, "invalid graph6 byte {byte} at position {position}")
            }
            Graph6Error::UnsupportedOrder => {
                write!(f, "graph6 orders above 62 are not supported")
            }
            Graph6Error::Truncated { expected, got } => {
                write!(f, "truncated graph6 payload: expected {expected} characters, got {got}")
            }
            Graph6Error::TrailingData { expected, got } => {
                write!(f, "trailing data after graph6 payload: expected {expected} characters, got {got}")
            }
            Graph6Error::NonzeroPadding => write!(f, "nonzero padding bits"),
        }
    }
}

impl core::error::Error for Graph6Error {}

fn payload_chars(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Encodes a graph as a graph6 string (no header, no newline).
pub fn encode(g: &Graph) -> String {
    let n = g.vertex_count();
    debug_assert!(n <= 62);
    let mut out = Vec::with_capacity(1 + payload_chars(n));
    out.push(63 + n as u8);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    // All bytes are printable ASCII in 63..=126 by construction.
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes a graph6 string; strict about length and padding.
pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (position, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidChar { position, byte });
        }
    }
    if bytes[0] == 126 {
        return Err(Graph6Error::UnsupportedOrder);
    }
    let n = (bytes[0] - 63) as usize;
    let expected = payload_chars(n);
    let got = bytes.len() - 1;
    if got < expected {
        return Err(Graph6Error::Truncated { expected, got });
    }
    if got > expected {
        return Err(Graph6Error::TrailingData { expected, got });
    }
    let mut bit_index = 0usize;
    let total_bits = n * n.saturating_sub(1) / 2;
    let mut pairs = Vec::with_capacity(total_bits);
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut edges = Vec::new();
    for &byte in &bytes[1..] {
        let group = byte - 63;
        for k in (0..6).rev() {
            let bit = group >> k & 1;
            if bit_index < total_bits {
                if bit == 1 {
                    edges.push(pairs[bit_index]);
                }
            } else if bit == 1 {
                return Err(Graph6Error::NonzeroPadding);
            }
            bit_index += 1;
        }
    }
    Ok(Graph::new(n, &edges).expect("decoded edges are valid"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(encode(&p4), "Ch");
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(encode(&k1), "@");
        let k0 = Graph::empty(0).unwrap();
        assert_eq!(encode(&k0), "?");
        assert_eq!(decode("Ch").unwrap(), p4);
        assert_eq!(decode("@").unwrap(), k1);
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert!(matches!(
            decode("C h"),
            Err(Graph6Error::InvalidChar { position: 1, byte: b' ' })
        ));
        assert_eq!(
            decode("C"),
            Err(Graph6Error::Truncated {
                expected: 1,
                got: 0
            })
        );
        assert_eq!(
            decode("Chh"),
            Err(Graph6Error::TrailingData {
                expected: 1,
                got: 2
            })
        );
        assert_eq!(decode("~??"), Err(Graph6Error::UnsupportedOrder));
        // K2 is "A_"; "A" + nonzero padding in the low bits must fail.
        assert!(decode("A_").is_ok());
        assert_eq!(decode("A`"), Err(Graph6Error::NonzeroPadding));
    }
}
