//! graph6 encoding of simple graphs.
//!
//! Layout: optional `>>graph6<<` header, the size field `N(n)`, then the
//! upper triangle of the adjacency matrix column by column
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), padded with zero bits to a multiple
//! of six, each six-bit group stored as `value + 63`.

use alloc::vec::Vec;

use crate::graph::MultiGraph;

const HEADER: &[u8] = b">>graph6<<";
const MAX_N: u64 = (1 << 36) - 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("{n} vertices need {expected} adjacency bytes, found {found}")]
    Length { n: u64, expected: usize, found: usize },
    #[error("padding bits in the last byte are not zero")]
    Padding,
    #[error("graph has parallel edges; graph6 only carries simple graphs, use the multigraph JSON form")]
    NotSimple,
    #[error("{0} vertices exceed the graph6 size limit")]
    TooLarge(u64),
}

fn decode_size(body: &[u8]) -> Result<(u64, usize), Graph6Error> {
    let six = |i: usize| -> Result<u64, Graph6Error> {
        match body.get(i) {
            Some(&b) => Ok((b - 63) as u64),
            None => Err(Graph6Error::Empty),
        }
    };
    if body.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if body[0] != 126 {
        return Ok((six(0)?, 1));
    }
    if body.get(1) != Some(&126) {
        let n = (six(1)? << 12) | (six(2)? << 6) | six(3)?;
        return Ok((n, 4));
    }
    let mut n = 0;
    for i in 2..8 {
        n = (n << 6) | six(i)?;
    }
    Ok((n, 8))
}

fn encode_size(n: u64, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Parses one graph6 record (no trailing newline).
pub fn parse(text: &[u8]) -> Result<MultiGraph, Graph6Error> {
    let body = text.strip_prefix(HEADER).unwrap_or(text);
    if let Some((offset, &byte)) = body.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        let offset = offset + (text.len() - body.len());
        return Err(Graph6Error::BadByte { offset, byte });
    }
    let (n, used) = decode_size(body)?;
    if n > MAX_N {
        return Err(Graph6Error::TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6) as usize;
    let data = &body[used..];
    if data.len() != expected {
        return Err(Graph6Error::Length { n, expected, found: data.len() });
    }
    let n = n as usize;
    let mut g = MultiGraph::empty(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j).expect("indices in range");
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = data[k / 6] - 63;
        let pad = 6 - k % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::Padding);
        }
    }
    Ok(g)
}

/// Canonical graph6 (no header, minimal size field).
pub fn write(g: &MultiGraph) -> Result<Vec<u8>, Graph6Error> {
    if !g.is_simple() {
        return Err(Graph6Error::NotSimple);
    }
    let n = g.n();
    if n as u64 > MAX_N {
        return Err(Graph6Error::TooLarge(n as u64));
    }
    let mut out = Vec::new();
    encode_size(n as u64, &mut out);
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | (g.multiplicity(i, j) > 0) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        acc <<= 6 - k % 6;
        out.push(acc + 63);
    }
    Ok(out)
}

/// `write` as a `String`; graph6 output is always ASCII.
pub fn write_string(g: &MultiGraph) -> Result<alloc::string::String, Graph6Error> {
    write(g).map(|b| alloc::string::String::from_utf8(b).expect("graph6 is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MultiGraph;
    use proptest::prelude::*;

    #[test]
    fn single_vertex() {
        let g = parse(b"@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(write(&g).unwrap(), b"@");
    }

    #[test]
    fn k4_is_two_bytes() {
        let mut e = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                e.push((u, v));
            }
        }
        let k4 = MultiGraph::from_edges(4, &e, false).unwrap();
        let s = write(&k4).unwrap();
        assert_eq!(s, b"C~");
        assert_eq!(parse(b">>graph6<<C~").unwrap(), k4);
    }

    #[test]
    fn known_path_encoding() {
        let p = MultiGraph::from_edges(3, &[(0, 1), (1, 2)], false).unwrap();
        assert_eq!(write(&p).unwrap(), b"Bg");
        let q = MultiGraph::from_edges(3, &[(0, 2), (1, 2)], false).unwrap();
        assert_eq!(write(&q).unwrap(), b"BW");
    }

    #[test]
    fn errors() {
        assert_eq!(parse(b""), Err(Graph6Error::Empty));
        assert!(matches!(parse(b"C~\x7f"), Err(Graph6Error::BadByte { offset: 2, .. })));
        assert!(matches!(parse(b"C"), Err(Graph6Error::Length { n: 4, .. })));
        // K3 uses 3 bits; the low 3 bits of the data byte must be zero.
        assert_eq!(parse(b"Bw").unwrap().edge_count(), 3);
        assert_eq!(parse(b"Bx"), Err(Graph6Error::Padding));
        let d = MultiGraph::from_edges(2, &[(0, 1), (0, 1)], true).unwrap();
        assert_eq!(write(&d), Err(Graph6Error::NotSimple));
    }

    #[test]
    fn extended_size_field() {
        let g = MultiGraph::from_edges(70, &[(0, 69)], false).unwrap();
        let s = write(&g).unwrap();
        assert_eq!(&s[..4], &[126, 63, 64, 63 + 6]);
        assert_eq!(parse(&s).unwrap(), g);
    }

    fn arb_graph() -> impl Strategy<Value = MultiGraph> {
        (1usize..=30).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut e = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            e.push((i, j));
                        }
                        k += 1;
                    }
                }
                MultiGraph::from_edges(n, &e, false).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph()) {
            let s = write(&g).unwrap();
            let h = parse(&s).unwrap();
            prop_assert_eq!(h.edges(), g.edges());
            prop_assert_eq!(write(&h).unwrap(), s);
        }
    }
}
