use eop_core::eop::{eop_number_exact, for_each_eop_set};
use eop_core::graph::{are_isomorphic, canonical_form, enumerate_connected_graphs, parse_graph6, write_graph6, Graph};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use std::ops::ControlFlow;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect::<Vec<_>>();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&p, _)| p).collect::<Vec<_>>();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn arb_relabeled(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        let text = write_graph6(&g).unwrap();
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(back.order(), g.order());
        let mut a = back.edge_pairs().to_vec();
        let mut b = g.edge_pairs().to_vec();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
        prop_assert_eq!(write_graph6(&back).unwrap(), text);
    }

    #[test]
    fn certificate_ignores_labels((g, perm) in arb_relabeled(9)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn induced_subgraph_contains_edge_induced(g in arb_graph(8), pick in any::<u64>()) {
        prop_assume!(g.size() > 0);
        let ds = (0..g.size()).filter(|i| pick >> (i % 64) & 1 == 1).collect::<Vec<_>>();
        prop_assume!(!ds.is_empty());
        let (edge_sub, verts, _) = g.edge_induced_subgraph(&ds).unwrap();
        let (vertex_sub, map) = g.induced_subgraph(&verts).unwrap();
        prop_assert_eq!(&map, &verts);
        prop_assert_eq!(edge_sub.order(), vertex_sub.order());
        prop_assert!(vertex_sub.size() >= edge_sub.size());
        for &(u, v) in edge_sub.edge_pairs() {
            prop_assert!(vertex_sub.has_edge(u, v));
        }
    }

    #[test]
    fn maximum_set_is_maximal(g in arb_graph(7)) {
        let (rho, witness) = eop_number_exact(&g);
        prop_assert!(witness.is_valid());
        prop_assert_eq!(witness.len(), rho);
        let bigger = for_each_eop_set(&g, rho + 1, |_| ControlFlow::Break(()));
        prop_assert!(bigger.is_continue());
    }
}

#[test]
fn rho_adds_over_disjoint_unions() {
    let corpus = (1..=5).flat_map(|n| enumerate_connected_graphs(n).unwrap()).collect::<Vec<_>>();
    let rho = corpus.iter().map(|g| eop_number_exact(g).0).collect::<Vec<_>>();
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let pairs = proptest::collection::vec((0..corpus.len(), 0..corpus.len()), 300);
    let sample = pairs.new_tree(&mut runner).unwrap().current();
    for (i, j) in sample {
        let union = corpus[i].disjoint_union(&corpus[j]);
        assert_eq!(eop_number_exact(&union).0, rho[i] + rho[j], "{:?} + {:?}", corpus[i], corpus[j]);
    }
}
