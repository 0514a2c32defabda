//! graph6 encoding (McKay's `formats.txt`).
//!
//! The order is written as `N(n)`: one byte `n + 63` for `n <= 62`, `~`
//! followed by three 6-bit groups for `n <= 258047`, or `~~` followed by six
//! groups otherwise. The upper triangle is then emitted column by column
//! (`(0,1), (0,2), (1,2), (0,3), ..`), packed big-endian into 6-bit groups,
//! zero padded, each group offset by 63.

use thiserror::Error;

use super::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    EmptyInput,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    CharOutOfRange { byte: u8, offset: usize },
    #[error("malformed size header")]
    MalformedHeader,
    #[error("graph of order 0 is not supported")]
    ZeroOrder,
    #[error("expected {expected} payload bytes for n = {n}, found {found}")]
    LengthMismatch { n: usize, expected: usize, found: usize },
    #[error("nonzero padding bits in final byte")]
    NonzeroPadding,
}

const SMALL_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;

fn value(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    let byte = bytes[offset];
    if !(63..=126).contains(&byte) {
        return Err(Graph6Error::CharOutOfRange { byte, offset });
    }
    Ok((byte - 63) as u64)
}

fn read_groups(bytes: &[u8], start: usize, count: usize) -> Result<usize, Graph6Error> {
    if bytes.len() < start + count {
        return Err(Graph6Error::MalformedHeader);
    }
    let mut n = 0u64;
    for i in 0..count {
        n = n << 6 | value(bytes, start + i)?;
    }
    Ok(n as usize)
}

/// Decodes the size header, returning `(n, header_len)`.
fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    match bytes {
        [] => Err(Graph6Error::EmptyInput),
        [126, 126, ..] => {
            let n = read_groups(bytes, 2, 6)?;
            if n <= MEDIUM_MAX {
                return Err(Graph6Error::MalformedHeader);
            }
            Ok((n, 8))
        }
        [126, ..] => {
            let n = read_groups(bytes, 1, 3)?;
            if n <= SMALL_MAX {
                return Err(Graph6Error::MalformedHeader);
            }
            Ok((n, 4))
        }
        _ => Ok((value(bytes, 0)? as usize, 1)),
    }
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    let groups = |count: usize, out: &mut Vec<u8>| {
        for i in (0..count).rev() {
            out.push(((n >> (6 * i)) & 0x3f) as u8 + 63);
        }
    };
    if n <= SMALL_MAX {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        groups(3, out);
    } else {
        out.extend([126, 126]);
        groups(6, out);
    }
}

pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (n, header) = decode_order(bytes)?;
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    let payload = &bytes[header..];
    if payload.len() != expected {
        return Err(Graph6Error::LengthMismatch { n, expected, found: payload.len() });
    }
    let mut g = Graph::empty(n).map_err(|_| Graph6Error::ZeroOrder)?;
    let (mut u, mut v) = (0usize, 1usize);
    for (i, _) in payload.iter().enumerate() {
        let group = value(payload, i)?;
        for b in (0..6).rev() {
            let k = i * 6 + (5 - b);
            let set = group >> b & 1 == 1;
            if k >= nbits {
                if set {
                    return Err(Graph6Error::NonzeroPadding);
                }
                continue;
            }
            if set {
                g.set_edge(u, v);
            }
            u += 1;
            if u == v {
                u = 0;
                v += 1;
            }
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * n) / 12);
    encode_order(n, &mut out);
    let (mut group, mut filled) = (0u8, 0);
    for v in 1..n {
        for u in 0..v {
            group = group << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, star, Graph};

    #[test]
    fn single_vertex_and_edge() {
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(to_graph6(&complete(2).unwrap()), "A_");
        assert_eq!(from_graph6("A_").unwrap(), complete(2).unwrap());
    }

    #[test]
    fn decodes_star_with_last_hub() {
        // '?' is an all-zero group, '{' = 111100: the last column (0..3, 4).
        let g = from_graph6("D?{").unwrap();
        let expected = Graph::from_edge_list(5, &[(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert_eq!(g, expected);
        assert_eq!(to_graph6(&g), "D?{");
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(from_graph6(""), Err(Graph6Error::EmptyInput));
        assert_eq!(from_graph6("?"), Err(Graph6Error::ZeroOrder));
        assert!(matches!(from_graph6("D?"), Err(Graph6Error::LengthMismatch { .. })));
        assert!(matches!(from_graph6("D? {"), Err(Graph6Error::LengthMismatch { .. })));
        assert!(matches!(from_graph6("D? "), Err(Graph6Error::CharOutOfRange { .. })));
        // 'A' followed by '`' sets the padding bit after the single pair.
        assert_eq!(from_graph6("A`"), Err(Graph6Error::NonzeroPadding));
        assert_eq!(from_graph6("~??"), Err(Graph6Error::MalformedHeader));
        // A medium header must not encode an order that fits in one byte.
        assert_eq!(from_graph6("~???"), Err(Graph6Error::MalformedHeader));
    }

    #[test]
    fn medium_header_round_trip() {
        let g = star(70).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(&s[..4], "~?@E"); // 70 = 1*64 + 6 -> groups 0, 1, 6
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn trailing_newline_is_ignored() {
        assert_eq!(from_graph6("A_\n").unwrap(), complete(2).unwrap());
    }
}
