use std::collections::BTreeMap;

use super::{canonical_form, canonical_graph, Graph, GraphError};

/// Largest order the built-in enumerator supports. Larger corpora are
/// read from graph6 files.
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// One canonically labeled representative per isomorphism class of
/// connected graphs on `n` vertices, sorted by certificate.
///
/// Every connected graph on `n >= 2` vertices has a vertex whose removal
/// leaves it connected (a leaf of a spanning tree), so extending each class
/// on `n - 1` vertices by a new vertex with every nonempty neighbour set
/// reaches every class on `n` vertices.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(GraphError::UnsupportedOrder { n, max: MAX_ENUMERATION_ORDER });
    }
    let mut layer = vec![Graph::empty(1)];
    for order in 2..=n {
        let mut classes = BTreeMap::new();
        let new = order - 1;
        for base in &layer {
            for mask in 1u32..(1 << new) {
                let mut edges = base.edge_pairs().to_vec();
                edges.extend((0..new).filter(|&u| mask >> u & 1 == 1).map(|u| (u, new)));
                let g = Graph::new(order, &edges).expect("extension edges are valid");
                classes.entry(canonical_form(&g)).or_insert_with(|| canonical_graph(&g));
            }
        }
        layer = classes.into_values().collect();
    }
    Ok(layer)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts = (1..=6)
            .map(|n| enumerate_connected_graphs(n).unwrap().len())
            .collect::<Vec<_>>();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn rejects_unsupported_orders() {
        assert!(enumerate_connected_graphs(0).is_err());
        assert!(enumerate_connected_graphs(8).is_err());
    }

    #[test]
    fn output_is_sorted_and_connected() {
        let graphs = enumerate_connected_graphs(5).unwrap();
        let certs = graphs.iter().map(canonical_form).collect::<Vec<_>>();
        assert!(certs.windows(2).all(|w| w[0] < w[1]));
        assert!(graphs.iter().all(Graph::is_connected));
    }
}
