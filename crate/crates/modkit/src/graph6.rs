//! graph6 encoding (McKay), short form only (`n <= 62`).
//!
//! The upper triangle is read column-by-column: bit `(i, j)` for `i < j`
//! comes before `(i', j')` iff `j < j'` or (`j = j'` and `i < i'`).
//! Six bits per byte, biased by 63, zero-padded at the end.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (body, base) = match line.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (line, 0),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse { offset: base, message: "empty graph6 string".into() });
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse {
                offset: base + i,
                message: format!("byte 0x{b:02x} outside graph6 range 63..=126"),
            });
        }
    }
    if bytes[0] == b'~' {
        return Err(Error::Parse {
            offset: base,
            message: "long-form size prefix unsupported (n > 62)".into(),
        });
    }
    let n = (bytes[0] - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expect = 1 + nbits.div_ceil(6);
    if bytes.len() != expect {
        return Err(Error::Parse {
            offset: base + bytes.len().min(expect),
            message: format!(
                "wrong length for n = {n}: expected {expect} bytes, got {}",
                bytes.len()
            ),
        });
    }
    let mut g = Graph::edgeless(n);
    let mut idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + idx / 6];
            let bit = (byte - 63) >> (5 - idx % 6) & 1;
            if bit == 1 {
                g.add_edge(i, j).unwrap();
            }
            idx += 1;
        }
    }
    // Padding bits of the last byte must be zero.
    while idx < (bytes.len() - 1) * 6 {
        let byte = bytes[1 + idx / 6];
        if (byte - 63) >> (5 - idx % 6) & 1 != 0 {
            return Err(Error::Parse {
                offset: base + 1 + idx / 6,
                message: "nonzero trailing padding bits".into(),
            });
        }
        idx += 1;
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::UnsupportedSize { n });
    }
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn named_small_codes() {
        // "@" is K_1, "A_" is K_2, "A?" is the 2-vertex edgeless graph.
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.n(), k2.edge_count()), (2, 1));
        assert_eq!(emit_graph6(&Graph::edgeless(2)).unwrap(), "A?");
        assert_eq!(emit_graph6(&generators::complete(1)).unwrap(), "@");
        assert_eq!(emit_graph6(&k2).unwrap(), "A_");
    }

    #[test]
    fn five_vertex_example() {
        // "D?{": n = 5, payload 000000 111100 -> exactly the edges
        // (0,4),(1,4),(2,4),(3,4), i.e. the star K_{1,4} centered at 4.
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
    }

    #[test]
    fn header_is_accepted() {
        let g = parse_graph6(">>graph6<<A_").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn malformed_inputs_name_offsets() {
        match parse_graph6("D?") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_graph6("A\u{7f}") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        // K_2 payload with a nonzero padding bit: 63 + 0b100001 = 'a'.
        match parse_graph6("Aa") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected padding error, got {other:?}"),
        }
        assert!(emit_graph6(&Graph::edgeless(63)).is_err());
    }
}
