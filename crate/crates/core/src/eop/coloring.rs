//! Injective edge colouring: proper vertex colouring of the conflict graph.

use super::{ConflictGraph, EopError};
use crate::graph::Graph;

/// An optimal injective edge colouring. `colors[id]` is in `0..count`, and
/// every colour class is an EOP set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectiveColoring {
    pub count: usize,
    pub colors: Vec<usize>,
}

impl InjectiveColoring {
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.count];
        for (id, &c) in self.colors.iter().enumerate() {
            classes[c].push(id);
        }
        classes
    }
}

pub fn injective_chromatic_index(g: &Graph, guard: usize) -> Result<usize, EopError> {
    injective_coloring(g, guard).map(|c| c.count)
}

/// Exact colouring by iterative deepening between a greedy clique lower
/// bound and a greedy colouring upper bound. Edgeless graphs get zero
/// colours.
pub fn injective_coloring(g: &Graph, guard: usize) -> Result<InjectiveColoring, EopError> {
    let m = g.size();
    if m > guard {
        return Err(EopError::GuardExceeded { m, guard });
    }
    if m == 0 {
        return Ok(InjectiveColoring { count: 0, colors: Vec::new() });
    }
    let cg = ConflictGraph::new(g);
    let mut order = (0..m).collect::<Vec<_>>();
    order.sort_by_key(|&v| (std::cmp::Reverse(cg.row(v).count_ones(..)), v));

    let upper = greedy(&cg, &order);
    let upper_count = upper.iter().max().unwrap() + 1;
    let lower = greedy_clique(&cg, &order);
    for k in lower..upper_count {
        let mut colors = vec![usize::MAX; m];
        if extend(&cg, &order, 0, k, 0, &mut colors) {
            return Ok(InjectiveColoring { count: k, colors });
        }
    }
    Ok(InjectiveColoring { count: upper_count, colors: upper })
}

fn greedy(cg: &ConflictGraph, order: &[usize]) -> Vec<usize> {
    let mut colors = vec![usize::MAX; order.len()];
    for &v in order {
        let c = (0..)
            .find(|&c| cg.row(v).ones().all(|w| colors[w] != c))
            .unwrap();
        colors[v] = c;
    }
    colors
}

fn greedy_clique(cg: &ConflictGraph, order: &[usize]) -> usize {
    let mut best = 1;
    for &start in order {
        let mut clique = vec![start];
        for &v in order {
            if clique.iter().all(|&u| cg.conflicts(u, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// Colours `order[at..]` with colours `< k`; `used` colours appear so far,
/// and a fresh colour is only ever the next unused one.
fn extend(
    cg: &ConflictGraph,
    order: &[usize],
    at: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    let Some(&v) = order.get(at) else {
        return true;
    };
    for c in 0..k.min(used + 1) {
        if cg.row(v).ones().all(|w| colors[w] != c) {
            colors[v] = c;
            if extend(cg, order, at + 1, k, used.max(c + 1), colors) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eop::is_eop_set;

    #[test]
    fn small_values() {
        assert_eq!(injective_chromatic_index(&Graph::star(5), 24), Ok(1));
        assert_eq!(injective_chromatic_index(&Graph::path(4), 24), Ok(2));
        assert_eq!(injective_chromatic_index(&Graph::complete(3), 24), Ok(3));
        assert_eq!(injective_chromatic_index(&Graph::empty(2), 24), Ok(0));
    }

    #[test]
    fn classes_are_packings() {
        let g = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (0, 3)]).unwrap();
        let coloring = injective_coloring(&g, 24).unwrap();
        for class in coloring.classes() {
            assert!(is_eop_set(&g, &class).unwrap().is_valid());
        }
    }

    #[test]
    fn guard() {
        assert_eq!(
            injective_chromatic_index(&Graph::complete(8), 24),
            Err(EopError::GuardExceeded { m: 28, guard: 24 })
        );
    }
}
