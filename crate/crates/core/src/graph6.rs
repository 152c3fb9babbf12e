//! graph6 encoding (nauty format), restricted to `n <= 16`.
//!
//! Every byte is `63 + x` for a 6-bit chunk `x`. The first byte is `n + 63`,
//! followed by the upper-triangle adjacency bits in column order
//! `(0,1),(0,2),(1,2),(0,3),...`, most significant bit first, zero-padded to
//! a multiple of six.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

fn err(index: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        index,
        reason: reason.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    if let Some(i) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(i, format!("byte {} outside 63..=126", bytes[i])));
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 || n > MAX_VERTICES {
        return Err(err(
            0,
            format!("vertex count {n} outside 1..={MAX_VERTICES}"),
        ));
    }
    let bits = n * (n - 1) / 2;
    let body = bits.div_ceil(6);
    if bytes.len() != 1 + body {
        let index = bytes.len().min(1 + body);
        return Err(err(
            index,
            format!(
                "expected {} bytes for n={n}, found {}",
                1 + body,
                bytes.len()
            ),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let chunk = bytes[1 + k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    if !bits.is_multiple_of(6) {
        let last = bytes[body] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(err(body, "nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let bits = n * (n - 1) / 2;
    let mut chunks = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                chunks[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + chunks.len());
    out.push((n as u8 + 63) as char);
    out.extend(chunks.into_iter().map(|c| (c + 63) as char));
    out
}
