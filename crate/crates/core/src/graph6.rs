//! The graph6 text format, restricted to the single-byte header (`n ≤ 62`).

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_GRAPH6_ORDER: usize = 62;

/// Encode `g` as one graph6 line, without a trailing newline.
pub fn encode(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::UnsupportedSize { what: "graph6 encoding", order: n, max: MAX_GRAPH6_ORDER });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Decode one graph6 line. Trailing `\r`/`\n` are ignored; anything else
/// after the edge bytes is an error.
pub fn decode(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(Error::parse(0, "empty graph6 line"));
    };
    if head == b'~' {
        return Err(Error::parse(0, "multi-byte graph6 headers are not supported"));
    }
    if !(63..=126).contains(&head) {
        return Err(Error::parse(0, format!("invalid header byte 0x{head:02x}")));
    }
    let n = (head - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let body_len = bits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < body_len {
        return Err(Error::parse(bytes.len(), format!("expected {body_len} edge bytes, found {}", body.len())));
    }
    if body.len() > body_len {
        return Err(Error::parse(1 + body_len, "trailing bytes after graph"));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for (idx, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(1 + idx, format!("invalid byte 0x{b:02x}")));
        }
        let v = b - 63;
        for bit in (0..6).rev() {
            let set = v >> bit & 1 == 1;
            if k >= bits {
                if set {
                    return Err(Error::parse(1 + idx, "nonzero padding bits"));
                }
                continue;
            }
            if set {
                let (i, j) = pair_at(k);
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(rows))
}

/// Column-major index `k` to the pair `(i, j)`, `i < j`.
fn pair_at(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}

/// Decode a graph6 corpus. Blank lines and lines starting with `>` are
/// skipped; errors carry 1-based line numbers.
pub fn read_graphs<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader.lines().enumerate().filter_map(|(i, line)| match line {
        Err(e) => Some(Err(Error::Io(e))),
        Ok(l) => {
            let t = l.trim();
            if t.is_empty() || t.starts_with('>') {
                None
            } else {
                Some(decode(t).map_err(|e| e.at_line(i + 1)))
            }
        }
    })
}
