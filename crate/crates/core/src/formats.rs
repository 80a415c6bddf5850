//! Text formats: graph6, DOT export and plain adjacency lists.
//!
//! graph6 follows the format description shipped with nauty: a size header
//! `N(n)` followed by the upper triangle of the adjacency matrix read column
//! by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per byte
//! with 63 added to each byte.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, LARGE_VERTEX_CAP};

const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn sixbits(bytes: &[u8], at: usize) -> Result<u64> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
        Some(&b) => Err(Error::parse(at, format!("byte 0x{b:02x} outside graph6 range 63..=126"))),
        None => Err(Error::parse(at, "unexpected end of input")),
    }
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// line terminators are accepted; padding bits must be zero.
pub fn graph6_decode(text: &str) -> Result<Graph> {
    let mut start = 0;
    if text.starts_with(HEADER) {
        start = HEADER.len();
    }
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.len() <= start {
        return Err(Error::parse(start, "empty graph6 string"));
    }
    match bytes[start] {
        b':' => return Err(Error::parse(start, "sparse6 input is not supported")),
        b'&' => return Err(Error::parse(start, "digraph6 input is not supported")),
        _ => {}
    }

    let mut pos = start;
    let n = if bytes[pos] != 126 {
        let v = sixbits(bytes, pos)?;
        pos += 1;
        v
    } else if bytes.get(pos + 1) != Some(&126) {
        let mut v = 0;
        for i in 1..=3 {
            v = (v << 6) | sixbits(bytes, pos + i)?;
        }
        pos += 4;
        v
    } else {
        let mut v = 0;
        for i in 2..=7 {
            v = (v << 6) | sixbits(bytes, pos + i)?;
        }
        pos += 8;
        v
    } as usize;

    if n > LARGE_VERTEX_CAP {
        return Err(Error::capability(format!(
            "graph6 input has {n} vertices, above the cap of {LARGE_VERTEX_CAP}"
        )));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() != nbytes {
        return Err(Error::parse(
            pos + body.len().min(nbytes),
            format!("expected {nbytes} data bytes for n={n}, found {}", body.len()),
        ));
    }

    let mut g = Graph::empty_unchecked(n);
    let mut k = 0;
    for (idx, _) in body.iter().enumerate() {
        let chunk = sixbits(bytes, pos + idx)?;
        for b in (0..6).rev() {
            let bit = chunk >> b & 1;
            if k >= nbits {
                if bit != 0 {
                    return Err(Error::parse(pos + idx, "non-zero padding bit"));
                }
            } else if bit == 1 {
                // position k in column-major upper-triangle order
                let j = col_of(k);
                let i = k - j * (j - 1) / 2;
                g.insert_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Column `j` such that `j(j-1)/2 <= k < j(j+1)/2`.
fn col_of(k: usize) -> usize {
    let mut j = (((8 * k + 1) as f64).sqrt() as usize).div_ceil(2).max(1);
    while j * (j - 1) / 2 > k {
        j -= 1;
    }
    while (j + 1) * j / 2 <= k {
        j += 1;
    }
    j
}

/// Graphviz DOT (`graph G { ... }`), isolated vertices listed explicitly.
pub fn to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(s, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

/// One `u v` pair per line, 0-indexed.
pub fn to_adjacency_list(g: &Graph) -> String {
    let mut s = String::new();
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Parses `u v` lines. Blank lines and `#` comments are skipped. The vertex
/// count is `n` when given, otherwise one more than the largest label seen.
pub fn parse_adjacency_list(text: &str, n: Option<usize>) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut max_label = None;
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = line.split('#').next().unwrap_or("").trim();
        if !content.is_empty() {
            let mut parts = content.split_whitespace();
            let mut next = || -> Result<usize> {
                parts
                    .next()
                    .ok_or_else(|| Error::parse(offset, "expected two vertex labels"))?
                    .parse::<usize>()
                    .map_err(|e| Error::parse(offset, format!("bad vertex label: {e}")))
            };
            let (u, v) = (next()?, next()?);
            if parts.next().is_some() {
                return Err(Error::parse(offset, "more than two fields on a line"));
            }
            max_label = Some(max_label.unwrap_or(0).max(u).max(v));
            edges.push((u, v));
        }
        offset += line.len();
    }
    let n = n.unwrap_or_else(|| max_label.map_or(0, |m| m + 1));
    Graph::from_edges_with_cap(n, &edges, LARGE_VERTEX_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn known_encodings() {
        assert_eq!(graph6_encode(&families::complete(3)), "Bw");
        assert_eq!(graph6_encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(graph6_encode(&Graph::empty(0).unwrap()), "?");
        // reference strings from networkx.to_graph6_bytes
        assert_eq!(graph6_encode(&families::complete(4)), "C~");
        assert_eq!(graph6_encode(&families::petersen()), "IheA@GUAo");
        assert_eq!(graph6_encode(&families::path(4)), "Ch");
    }

    #[test]
    fn long_header() {
        let g = families::cycle(100);
        let s = graph6_encode(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 99][..]);
        assert_eq!(graph6_decode(&s).unwrap(), g);
    }

    #[test]
    fn decode_accepts_header_and_newline() {
        assert_eq!(graph6_decode(">>graph6<<Bw\n").unwrap(), families::complete(3));
    }

    #[test]
    fn decode_errors_carry_offsets() {
        match graph6_decode("B") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        match graph6_decode("B\u{1}") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        assert!(matches!(graph6_decode("Bww"), Err(Error::Parse { .. })));
        assert!(matches!(graph6_decode("Bx"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(graph6_decode(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(graph6_decode(":Fa@x^"), Err(Error::Parse { .. })));
    }

    #[test]
    fn column_lookup() {
        let mut k = 0;
        for j in 1..200 {
            for _ in 0..j {
                assert_eq!(col_of(k), j);
                k += 1;
            }
        }
    }

    #[test]
    fn adjacency_list_round_trip() {
        let g = families::petersen();
        let text = to_adjacency_list(&g);
        assert_eq!(parse_adjacency_list(&text, Some(10)).unwrap(), g);
        let parsed = parse_adjacency_list("# triangle\n0 1\n1 2\n\n2 0\n", None).unwrap();
        assert_eq!(parsed, families::complete(3));
        assert!(matches!(
            parse_adjacency_list("0 1\n1 x\n", None),
            Err(Error::Parse { offset: 4, .. })
        ));
    }

    #[test]
    fn dot_lists_edges() {
        let dot = to_dot(&families::path(3));
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("0 -- 1;") && dot.contains("1 -- 2;"));
    }
}
