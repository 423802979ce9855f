use std::ops::ControlFlow;

use super::{ConflictGraph, EopSet};
use crate::graph::Graph;

/// Visits every EOP set of exactly `size` edges once, in lexicographic
/// order of sorted id lists. The visitor may stop the walk early.
pub fn for_each_eop_set<F>(g: &Graph, size: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let cg = ConflictGraph::new(g);
    let mut current = Vec::with_capacity(size);
    walk(g.size(), size, 0, &mut current, &|d, e| !cg.conflicts(d, e), &mut visit)
}

/// Visits every induced matching of exactly `size` edges once, in
/// lexicographic order: pairwise vertex-disjoint edges with no edge of the
/// graph joining two of them.
pub fn for_each_induced_matching<F>(g: &Graph, size: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let compatible = |d: usize, e: usize| {
        let a = g.edge(d);
        let b = g.edge(e);
        a.endpoints()
            .iter()
            .all(|&x| b.endpoints().iter().all(|&y| x != y && !g.has_edge(x, y)))
    };
    let mut current = Vec::with_capacity(size);
    walk(g.size(), size, 0, &mut current, &compatible, &mut visit)
}

fn walk<C, F>(
    m: usize,
    size: usize,
    from: usize,
    current: &mut Vec<usize>,
    compatible: &C,
    visit: &mut F,
) -> ControlFlow<()>
where
    C: Fn(usize, usize) -> bool,
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if current.len() == size {
        return visit(current);
    }
    let missing = size - current.len();
    for e in from..m {
        if m - e < missing {
            break;
        }
        if current.iter().all(|&d| compatible(d, e)) {
            current.push(e);
            walk(m, size, e + 1, current, compatible, visit)?;
            current.pop();
        }
    }
    ControlFlow::Continue(())
}

pub fn enumerate_eop_sets(g: &Graph, size: usize) -> Vec<EopSet> {
    let mut out = Vec::new();
    let _ = for_each_eop_set(g, size, |ids| {
        out.push(EopSet::new(g, ids).expect("enumerated ids come from the host"));
        ControlFlow::Continue(())
    });
    out
}

pub fn enumerate_induced_matchings(g: &Graph, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let _ = for_each_induced_matching(g, size, |ids| {
        out.push(ids.to_vec());
        ControlFlow::Continue(())
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eop_sets_of_small_graphs() {
        let c5 = Graph::cycle(5);
        let pairs = enumerate_eop_sets(&c5, 2);
        assert_eq!(pairs.len(), 5);
        for set in &pairs {
            let [a, b] = [c5.edge(set.members()[0]), c5.edge(set.members()[1])];
            assert!(a.endpoints().iter().any(|&x| b.has_endpoint(x)));
        }
        let claw = enumerate_eop_sets(&Graph::star(3), 3);
        assert_eq!(claw.len(), 1);
        assert_eq!(claw[0].members(), &[0, 1, 2]);
        assert!(enumerate_eop_sets(&Graph::complete(4), 2).is_empty());
    }

    #[test]
    fn induced_matchings_of_small_graphs() {
        // P6 edges e1..e5 are ids 0..4
        let got = enumerate_induced_matchings(&Graph::path(6), 2);
        assert_eq!(got, vec![vec![0, 3], vec![0, 4], vec![1, 4]]);
        assert!(enumerate_induced_matchings(&Graph::cycle(5), 2).is_empty());
        assert!(enumerate_induced_matchings(&Graph::star(4), 2).is_empty());
    }

    #[test]
    fn early_stop() {
        let mut seen = 0;
        let flow = for_each_eop_set(&Graph::star(4), 2, |_| {
            seen += 1;
            if seen == 2 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        assert_eq!(flow, ControlFlow::Break(()));
        assert_eq!(seen, 2);
    }
}
