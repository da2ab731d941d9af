//! graph6 short form (n <= 62), bit-exact with the reference encoding.
//!
//! Byte 0 is `n + 63`; the upper triangle follows in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed big-endian into 6-bit groups,
//! each group offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 record. A single trailing `\n` or `\r\n` is accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line
        .strip_suffix('\n')
        .map(|s| s.strip_suffix('\r').unwrap_or(s))
        .unwrap_or(line)
        .as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::format(0, "empty record"));
    };
    if !(OFFSET..=126).contains(&first) {
        return Err(Error::format(0, format!("byte {first} outside 63..=126")));
    }
    if first == 126 {
        return Err(Error::UnsupportedSize(format!(
            "graphs with more than {MAX_VERTICES} vertices are not supported"
        )));
    }
    let n = (first - OFFSET) as usize;
    let expected = 1 + body_len(n);
    for (i, &b) in bytes.iter().enumerate().skip(1) {
        if i >= expected {
            return Err(Error::format(i, "trailing bytes after record"));
        }
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::format(i, format!("byte {b} outside 63..=126")));
        }
    }
    if bytes.len() < expected {
        return Err(Error::format(
            bytes.len(),
            format!(
                "record for {n} vertices needs {expected} bytes, got {}",
                bytes.len()
            ),
        ));
    }

    let mut g = Graph::new(n)?;
    let pairs = n * n.saturating_sub(1) / 2;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6] - OFFSET;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.insert(i, j);
            }
            k += 1;
        }
    }
    if !pairs.is_multiple_of(6) {
        let last = bytes[expected - 1] - OFFSET;
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::format(expected - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Encodes `g` in graph6 short form, without a trailing newline.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_VERTICES {
        return Err(Error::UnsupportedSize(format!("{n} vertices")));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + OFFSET);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + OFFSET);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
