//! Brute-force `rho`, independent of the conflict-graph solver.

use super::{have_common_edge, EopError};
use crate::graph::Graph;

/// Largest EOP set size found by growing edge subsets in increasing id
/// order, keeping only pairwise-valid extensions. Exponential; refuses
/// graphs with more than `guard` edges.
pub fn eop_number_oracle(g: &Graph, guard: usize) -> Result<usize, EopError> {
    let m = g.size();
    if m > guard {
        return Err(EopError::GuardExceeded { m, guard });
    }
    let mut clash = vec![vec![false; m]; m];
    for a in 0..m {
        for b in a + 1..m {
            let c = have_common_edge(g, a, b)?;
            clash[a][b] = c;
            clash[b][a] = c;
        }
    }
    let mut current = Vec::with_capacity(m);
    Ok(grow(&clash, 0, &mut current))
}

fn grow(clash: &[Vec<bool>], from: usize, current: &mut Vec<usize>) -> usize {
    let mut best = current.len();
    for e in from..clash.len() {
        if current.iter().all(|&d| !clash[d][e]) {
            current.push(e);
            best = best.max(grow(clash, e + 1, current));
            current.pop();
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_known_values() {
        assert_eq!(eop_number_oracle(&Graph::complete(4), 24), Ok(1));
        assert_eq!(eop_number_oracle(&Graph::cycle(5), 24), Ok(2));
        assert_eq!(eop_number_oracle(&Graph::path(8), 24), Ok(4));
        assert_eq!(eop_number_oracle(&Graph::empty(2), 24), Ok(0));
    }

    #[test]
    fn guard_is_enforced() {
        assert_eq!(
            eop_number_oracle(&Graph::star(25), 24),
            Err(EopError::GuardExceeded { m: 25, guard: 24 })
        );
        assert_eq!(eop_number_oracle(&Graph::star(5), 4), Err(EopError::GuardExceeded { m: 5, guard: 4 }));
    }
}
