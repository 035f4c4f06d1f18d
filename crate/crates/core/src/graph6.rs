//! graph6 text encoding: upper-triangle adjacency bits read column by
//! column, packed into 6-bit groups offset by 63. Orders below 63 use the
//! one-byte header; larger orders use the standard `~`-prefixed extension.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const EXTENDED: u8 = 126; // '~'

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n < 63 {
        bytes.push(OFFSET + n as u8);
    } else {
        assert!(n <= 258_047, "graph6 supports at most 258047 vertices here");
        bytes.push(EXTENDED);
        bytes.push(OFFSET + ((n >> 12) & 63) as u8);
        bytes.push(OFFSET + ((n >> 6) & 63) as u8);
        bytes.push(OFFSET + (n & 63) as u8);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                bytes.push(OFFSET + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(OFFSET + (group << (6 - filled)));
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// One graph6 line per isomorphism class of the given order.
pub fn classes_graph6(n: usize) -> Result<String> {
    let mut out = String::new();
    for class in crate::small::enumerate_classes(n)? {
        out.push_str(&write_graph6(&Graph::from(&class)));
        out.push('\n');
    }
    Ok(out)
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6 {
            offset: 0,
            reason: "empty input".into(),
        });
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=OFFSET + 63).contains(&b) {
            return Err(Error::Graph6 {
                offset: i,
                reason: format!("byte {b} out of range"),
            });
        }
    }
    let (n, header_len) = if bytes[0] == EXTENDED {
        if bytes.len() >= 2 && bytes[1] == EXTENDED {
            return Err(Error::Graph6 {
                offset: 1,
                reason: "orders above 258047 unsupported".into(),
            });
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6 {
                offset: bytes.len(),
                reason: "truncated extended header".into(),
            });
        }
        let n = ((bytes[1] - OFFSET) as usize) << 12
            | ((bytes[2] - OFFSET) as usize) << 6
            | (bytes[3] - OFFSET) as usize;
        (n, 4)
    } else {
        ((bytes[0] - OFFSET) as usize, 1)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expect = header_len + nbits.div_ceil(6);
    if bytes.len() != expect {
        return Err(Error::Graph6 {
            offset: bytes.len().min(expect),
            reason: format!("expected {expect} bytes for order {n}, got {}", bytes.len()),
        });
    }
    let mut g = Graph::new(n);
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[header_len + pos / 6] - OFFSET;
            if byte >> (5 - pos % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            pos += 1;
        }
    }
    // Padding bits must be zero.
    if nbits % 6 != 0 {
        let last = bytes[bytes.len() - 1] - OFFSET;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6 {
                offset: bytes.len() - 1,
                reason: "nonzero padding bits".into(),
            });
        }
    }
    Ok(g)
}
