//! graph6 encoding for graphs on at most 62 vertices.
//!
//! Format reference: <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>.
//! Only the one-byte size header is supported.

use super::{Graph, GraphError};

pub const MAX_GRAPH6_ORDER: usize = 62;
pub const GRAPH6_HEADER: &str = ">>graph6<<";

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn write_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(GraphError::Graph6TooLarge { n, max: MAX_GRAPH6_ORDER });
    }
    let mut bytes = vec![0u8; data_len(n)];
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                bytes[pos / 6] |= 1 << (5 - pos % 6);
            }
            pos += 1;
        }
    }
    let mut out = String::with_capacity(bytes.len() + 1);
    out.push((n as u8 + 63) as char);
    out.extend(bytes.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}

/// Parses a single graph6 record. Surrounding whitespace and the optional
/// `>>graph6<<` prefix are accepted. Nonzero padding bits are rejected so
/// that every accepted record re-encodes to itself.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let raw = text.as_bytes();
    let Some((&head, body)) = raw.split_first() else {
        return Err(GraphError::Graph6("empty record".into()));
    };
    if let Some(&bad) = raw.iter().find(|&&c| !(63..=126).contains(&c)) {
        return Err(GraphError::Graph6(format!("byte {bad} outside 63..=126")));
    }
    if head == 126 {
        return Err(GraphError::Graph6(format!(
            "extended size header (n > {MAX_GRAPH6_ORDER}) is not supported"
        )));
    }
    let n = (head - 63) as usize;
    if body.len() != data_len(n) {
        return Err(GraphError::Graph6(format!(
            "expected {} data bytes for n = {n}, got {}",
            data_len(n),
            body.len()
        )));
    }
    let bit = |pos: usize| (body[pos / 6] - 63) >> (5 - pos % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(pos) {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    if (pos..body.len() * 6).any(bit) {
        return Err(GraphError::Graph6("nonzero padding bits".into()));
    }
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;

    /// Straight from the bit layout: x(0,1), x(0,2), x(1,2), ...
    fn encode_by_hand(n: usize, edges: &[(usize, usize)]) -> String {
        let mut bits = Vec::new();
        for j in 1..n {
            for i in 0..j {
                bits.push(edges.contains(&(i, j)) || edges.contains(&(j, i)));
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(false);
        }
        let mut s = String::new();
        s.push((n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn triangle() {
        let record = encode_by_hand(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(record, "Bw");
        let g = parse_graph6(&record).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 3);
        assert_eq!(write_graph6(&Graph::complete(3)).unwrap(), record);
    }

    #[test]
    fn five_cycle() {
        let record = encode_by_hand(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let g = parse_graph6(&record).unwrap();
        assert!(are_isomorphic(&g, &Graph::cycle(5)));
        assert_eq!(write_graph6(&Graph::cycle(5)).unwrap(), record);
    }

    #[test]
    fn single_vertex_and_path() {
        assert_eq!(write_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        let p4 = write_graph6(&Graph::path(4)).unwrap();
        assert_eq!(parse_graph6(&p4).unwrap(), Graph::path(4));
    }

    #[test]
    fn header_and_whitespace() {
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_graph6(""), Err(GraphError::Graph6(_))));
        assert!(matches!(parse_graph6("Bww"), Err(GraphError::Graph6(_))));
        assert!(matches!(parse_graph6("B "), Err(GraphError::Graph6(_))));
        assert!(matches!(parse_graph6("~??"), Err(GraphError::Graph6(_))));
        // n = 3 uses 3 of 6 bits; set a padding bit
        assert!(matches!(parse_graph6("B@"), Err(GraphError::Graph6(_))));
    }

    #[test]
    fn too_large_to_write() {
        let g = Graph::empty(63);
        assert_eq!(
            write_graph6(&g),
            Err(GraphError::Graph6TooLarge { n: 63, max: MAX_GRAPH6_ORDER })
        );
        assert!(write_graph6(&Graph::path(62)).is_ok());
    }
}
