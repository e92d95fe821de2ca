//! graph6: header-less, printable ASCII 63..=126.
//!
//! Layout: `N(n)` followed by the upper triangle `x(i,j)`, `i < j`, listed
//! column by column (`j = 1..n`, `i = 0..j`), packed big-endian into 6-bit
//! groups, each offset by 63.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

fn malformed(offset: usize, reason: impl Into<String>) -> Error {
    Error::MalformedGraph6 { offset, reason: reason.into() }
}

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn graph6_decode(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(malformed(0, "empty input"));
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(malformed(pos, format!("byte 0x{:02x} outside 63..=126", bytes[pos])));
    }
    let (n, body_start) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(malformed(bytes.len(), "truncated order header"));
        }
        if bytes[1] == 126 {
            return Err(malformed(1, "orders above 258047 are unsupported"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_ORDER {
        return Err(malformed(0, format!("order {n} exceeds {MAX_ORDER}")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = body_start + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(malformed(
            bytes.len().min(expected),
            format!("expected {expected} bytes for order {n}, found {}", bytes.len()),
        ));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[body_start + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = bytes[expected - 1] - 63;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(malformed(expected - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}
