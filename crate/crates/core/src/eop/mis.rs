//! Maximum independent set of the conflict graph by branch and bound.
//!
//! Branching is on the candidate with the most conflicts among the
//! remaining candidates (include first, then exclude); the bound is the
//! number of cliques in a greedy clique cover of the candidates.

use fixedbitset::FixedBitSet;

use super::ConflictGraph;

struct Solver<'a> {
    cg: &'a ConflictGraph,
    best: usize,
    /// Stop as soon as `best` reaches this value.
    stop_at: usize,
}

impl Solver<'_> {
    fn clique_cover_bound(&self, cands: &FixedBitSet) -> usize {
        let mut commons: Vec<FixedBitSet> = Vec::new();
        for v in cands.ones() {
            match commons.iter_mut().find(|c| c.contains(v)) {
                Some(c) => c.intersect_with(self.cg.row(v)),
                None => commons.push(self.cg.row(v).clone()),
            }
        }
        commons.len()
    }

    fn search(&mut self, cands: FixedBitSet, size: usize) {
        if self.best >= self.stop_at {
            return;
        }
        let count = cands.count_ones(..);
        if size + count <= self.best {
            return;
        }
        let mut branch = None;
        let mut branch_degree = 0;
        for v in cands.ones() {
            let d = self.cg.row(v).intersection_count(&cands);
            if d > branch_degree {
                branch_degree = d;
                branch = Some(v);
            }
        }
        let Some(v) = branch else {
            // no conflicts left: take every candidate
            self.best = self.best.max(size + count);
            return;
        };
        if size + self.clique_cover_bound(&cands) <= self.best {
            return;
        }
        let mut with = cands.clone();
        with.difference_with(self.cg.row(v));
        with.set(v, false);
        self.search(with, size + 1);
        let mut without = cands;
        without.set(v, false);
        self.search(without, size);
    }
}

/// Independence number of the conflict graph restricted to `cands`, or any
/// value `>= stop_at` once one that large is certain.
fn independence_number(cg: &ConflictGraph, cands: &FixedBitSet, stop_at: usize) -> usize {
    let mut solver = Solver { cg, best: 0, stop_at };
    solver.search(cands.clone(), 0);
    solver.best
}

/// Size and lexicographically least member-list of a maximum independent
/// set.
pub(super) fn maximum_independent_set(cg: &ConflictGraph) -> (usize, Vec<usize>) {
    let m = cg.edge_count();
    let mut cands = FixedBitSet::with_capacity(m);
    cands.insert_range(..);
    let alpha = independence_number(cg, &cands, usize::MAX);

    // Fix members greedily in id order, keeping a vertex only if a maximum
    // set through the choices so far still exists.
    let mut chosen = Vec::with_capacity(alpha);
    for v in 0..m {
        if chosen.len() == alpha {
            break;
        }
        if !cands.contains(v) {
            continue;
        }
        cands.set(v, false);
        let mut rest = cands.clone();
        rest.difference_with(cg.row(v));
        let need = alpha - chosen.len() - 1;
        if need == 0 || independence_number(cg, &rest, need) >= need {
            chosen.push(v);
            cands = rest;
        }
    }
    (alpha, chosen)
}
