//! The graph6 format: 6-bit printable encoding of the upper triangle,
//! column by column. Sizes up to 62 use the one-byte header; sizes up to
//! 258047 use the `~` three-byte header.

use locbox_core::Graph;

use super::FormatError;

const HEADER: &str = ">>graph6<<";

/// Encodes a graph as a graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        let bits = n as u32;
        out.push((((bits >> 12) & 0x3F) as u8 + 63) as char);
        out.push((((bits >> 6) & 0x3F) as u8 + 63) as char);
        out.push(((bits & 0x3F) as u8 + 63) as char);
    } else {
        return Err(FormatError::new(
            "graph6",
            1,
            0,
            format!("n = {n} too large"),
        ));
    }
    let mut acc = 0u8;
    let mut used = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            used += 1;
            if used == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        acc <<= 6 - used;
        out.push((acc + 63) as char);
    }
    Ok(out)
}

/// Decodes a graph6 line (optionally prefixed by the `>>graph6<<` header).
pub fn from_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::new("graph6", 1, 0, "empty input"));
    }
    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(FormatError::new(
                "graph6",
                1,
                0,
                "graphs beyond 258047 vertices unsupported",
            ));
        }
        if bytes.len() < 4 {
            return Err(FormatError::new("graph6", 1, 0, "truncated size field"));
        }
        let mut n = 0usize;
        for (k, &b) in bytes[1..4].iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(FormatError::new(
                    "graph6",
                    1,
                    1 + k,
                    format!("byte {b} out of range"),
                ));
            }
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 4usize)
    } else {
        let b = bytes[0];
        if !(63..=126).contains(&b) {
            return Err(FormatError::new(
                "graph6",
                1,
                0,
                format!("byte {b} out of range"),
            ));
        }
        ((b - 63) as usize, 1usize)
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if bytes.len() - pos != needed {
        return Err(FormatError::new(
            "graph6",
            1,
            pos,
            format!(
                "expected {needed} data bytes for n = {n}, got {}",
                bytes.len() - pos
            ),
        ));
    }
    let mut g = Graph::empty(n);
    let mut bit_index = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit_index / 6];
            if !(63..=126).contains(&byte) {
                return Err(FormatError::new(
                    "graph6",
                    1,
                    pos + bit_index / 6,
                    format!("byte {byte} out of range"),
                ));
            }
            let value = byte - 63;
            if value & (1 << (5 - (bit_index % 6))) != 0 {
                g.add_edge(i, j).expect("indices in range");
            }
            bit_index += 1;
        }
    }
    // Padding bits must be zero.
    while !bit_index.is_multiple_of(6) {
        let byte = bytes[pos + bit_index / 6] - 63;
        if byte & (1 << (5 - (bit_index % 6))) != 0 {
            return Err(FormatError::new(
                "graph6",
                1,
                pos + bit_index / 6,
                "nonzero padding bits",
            ));
        }
        bit_index += 1;
    }
    pos += bit_index.div_ceil(6);
    let _ = pos;
    Ok(g)
}
