//! Canonical labeling by equitable-partition refinement and exhaustive
//! individualization.
//!
//! The certificate of a graph is the lexicographically least upper-triangle
//! adjacency bit string over all leaves of the search tree, prefixed by the
//! vertex count. The search tree is built from isomorphism-invariant rules
//! only, so two graphs get equal certificates exactly when they are
//! isomorphic. The only pruning is for twin vertices (equal neighbourhoods
//! up to each other): swapping two twins in the same cell is an automorphism
//! that fixes the partition, so their subtrees produce the same leaves.

use std::fmt;

use super::Graph;

/// Isomorphism certificate. Ordering is by vertex count, then by the
/// canonical adjacency bit string.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate(Vec<u8>);

impl Certificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Certificate(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

type Partition = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Search<'_> {
    fn neighbours_in(&self, v: usize, mark: &[bool]) -> usize {
        self.g.neighbours(v).iter().filter(|&&w| mark[w]).count()
    }

    /// Refines `cells` to the coarsest equitable partition below it. Each
    /// split replaces a cell by its fragments ordered by neighbour count
    /// into the splitter.
    fn refine(&self, mut cells: Partition) -> Partition {
        let n = self.g.order();
        let mut mark = vec![false; n];
        loop {
            let mut changed = false;
            let mut si = 0;
            while si < cells.len() {
                for &v in &cells[si] {
                    mark[v] = true;
                }
                let mut next = Vec::with_capacity(cells.len());
                for cell in cells.iter() {
                    if cell.len() == 1 {
                        next.push(cell.clone());
                        continue;
                    }
                    let mut keyed = cell
                        .iter()
                        .map(|&v| (self.neighbours_in(v, &mark), v))
                        .collect::<Vec<_>>();
                    keyed.sort_by_key(|&(k, _)| k);
                    let mut start = 0;
                    for i in 1..=keyed.len() {
                        if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                            next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                            start = i;
                        }
                    }
                    if keyed[0].0 != keyed[keyed.len() - 1].0 {
                        changed = true;
                    }
                }
                for &v in &cells[si] {
                    mark[v] = false;
                }
                cells = next;
                si += 1;
            }
            if !changed {
                return cells;
            }
        }
    }

    fn are_twins(&self, u: usize, w: usize) -> bool {
        let a = self.g.neighbours(u).iter().filter(|&&x| x != w);
        let b = self.g.neighbours(w).iter().filter(|&&x| x != u);
        a.eq(b)
    }

    fn leaf(&mut self, cells: &Partition) {
        let order = cells.iter().map(|c| c[0]).collect::<Vec<_>>();
        let n = order.len();
        let mut bytes = vec![0u8; (n * n.saturating_sub(1) / 2).div_ceil(8)];
        let mut pos = 0;
        for j in 1..n {
            for i in 0..j {
                if self.g.has_edge(order[i], order[j]) {
                    bytes[pos / 8] |= 1 << (7 - pos % 8);
                }
                pos += 1;
            }
        }
        if self.best.as_ref().is_none_or(|(b, _)| bytes < *b) {
            self.best = Some((bytes, order));
        }
    }

    fn explore(&mut self, cells: Partition) {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target].clone();
        let mut reps: Vec<usize> = Vec::new();
        for &v in &cell {
            if reps.iter().any(|&r| self.are_twins(r, v)) {
                continue;
            }
            reps.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cell.iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.explore(next);
        }
    }
}

fn search(g: &Graph) -> (Vec<u8>, Vec<usize>) {
    let n = g.order();
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    let mut s = Search { g, best: None };
    s.explore(vec![(0..n).collect()]);
    s.best.expect("search reaches at least one leaf")
}

/// `labeling[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let (_, order) = search(g);
    let mut labeling = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        labeling[v] = pos;
    }
    labeling
}

pub fn canonical_graph(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g))
}

pub fn canonical_form(g: &Graph) -> Certificate {
    let (bits, _) = search(g);
    let mut bytes = (g.order() as u32).to_be_bytes().to_vec();
    bytes.extend(bits);
    Certificate(bytes)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_form(a) == canonical_form(b)
}
