//! Constructions for every family. Vertex labels follow allocation order;
//! see `docs/families.md` for the labeling of each family.

use super::{FamilyId, Gadget, Reading};
use crate::graph::Graph;

#[derive(Default)]
pub(super) struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    pub(super) fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub(super) fn edge(&mut self, a: usize, b: usize) {
        self.edges.push((a, b));
    }

    /// Path on `k` new vertices.
    pub(super) fn path(&mut self, k: usize) -> Vec<usize> {
        let vs = (0..k).map(|_| self.vertex()).collect::<Vec<_>>();
        for w in vs.windows(2) {
            self.edge(w[0], w[1]);
        }
        vs
    }

    /// Cycle on `k` new vertices, in cyclic order.
    pub(super) fn cycle(&mut self, k: usize) -> Vec<usize> {
        let vs = self.path(k);
        self.edge(vs[k - 1], vs[0]);
        vs
    }

    /// Star with a new hub and `s` new leaves.
    pub(super) fn star(&mut self, s: usize) -> (usize, Vec<usize>) {
        let hub = self.vertex();
        let leaves = (0..s)
            .map(|_| {
                let l = self.vertex();
                self.edge(hub, l);
                l
            })
            .collect();
        (hub, leaves)
    }

    pub(super) fn pendants(&mut self, v: usize, count: usize) -> Vec<usize> {
        (0..count)
            .map(|_| {
                let l = self.vertex();
                self.edge(v, l);
                l
            })
            .collect()
    }

    /// Hangs a path of `len` new edges at `v`; returns its far end.
    pub(super) fn hang(&mut self, v: usize, len: usize) -> usize {
        let mut end = v;
        for _ in 0..len {
            let next = self.vertex();
            self.edge(end, next);
            end = next;
        }
        end
    }

    pub(super) fn gadget(&mut self, v: usize, gadget: Gadget) {
        match gadget {
            Gadget::Pendant => {
                self.hang(v, 1);
            }
            Gadget::Path2 => {
                self.hang(v, 2);
            }
        }
    }

    pub(super) fn finish(self) -> Graph {
        Graph::new(self.n, &self.edges).expect("family constructions are simple graphs")
    }
}

/// Sites of an ambiguous family's base graph, resolved to vertices. A site
/// that does not exist for these parameters maps to `None`.
fn site_vertex(site: &str, named: &[(&str, Option<usize>)]) -> Option<usize> {
    named.iter().find(|(name, _)| *name == site).and_then(|&(_, v)| v)
}

fn path_sites(path: &[usize]) -> Vec<(&'static str, Option<usize>)> {
    const NAMES: [&str; 8] = ["p1", "p2", "p3", "p4", "p5", "p6", "p7", "p8"];
    path.iter().zip(NAMES).map(|(&v, name)| (name, Some(v))).collect()
}

/// Builds `id` with already validated `params`. Ambiguous families use
/// `reading`; `None` is returned when the reading's site does not exist
/// for these parameters.
pub(super) fn construct(id: FamilyId, params: &[usize], reading: Option<Reading>) -> Option<Graph> {
    use FamilyId::*;
    let mut b = Builder::default();
    let p = |i: usize| params[i];
    match id {
        A1 | A2 | A3 => {
            let k = match id {
                A1 => 5,
                A2 => 6,
                _ => 7,
            };
            let path = b.path(k);
            b.pendants(path[1], p(0));
            b.pendants(path[k - 2], p(1));
        }
        A4 | A5 => {
            let c = b.cycle(if id == A4 { 3 } else { 4 });
            b.pendants(c[0], p(0));
        }
        A6 => {
            let (_, leaves) = b.star(p(0));
            b.pendants(leaves[0], 1);
            b.pendants(leaves[1], 1);
        }
        A7 => {
            let (_, leaves) = b.star(p(0));
            b.pendants(leaves[0], 2);
        }
        R1 => {
            let (_, leaves) = b.star(p(0));
            b.pendants(leaves[0], 3);
        }
        R2 => {
            let (_, leaves) = b.star(p(0));
            b.hang(leaves[0], 2);
            b.pendants(leaves[1], 1);
        }
        R3 => {
            let (_, leaves) = b.star(p(0));
            b.pendants(leaves[0], 2);
            b.pendants(leaves[1], 1);
        }
        R4 => {
            let (_, leaves) = b.star(p(0));
            b.hang(leaves[0], 2);
            b.pendants(leaves[0], 1);
        }
        R5 => {
            let (_, leaves) = b.star(p(0));
            let pair = b.pendants(leaves[0], 2);
            b.edge(pair[0], pair[1]);
        }
        R6 => {
            let (_, leaves) = b.star(p(0));
            for &l in &leaves[..3] {
                b.pendants(l, 1);
            }
        }
        R7 => {
            let c = b.cycle(3);
            b.pendants(c[0], p(0));
            b.pendants(c[1], 1);
        }
        R8 | R13 => {
            let c = b.cycle(4);
            b.pendants(c[0], p(0));
            b.pendants(c[if id == R8 { 2 } else { 1 }], 1);
        }
        R9 | R10 => {
            // K4 minus the edge {2, 3}; 0 and 1 have degree 3
            let vs = (0..4).map(|_| b.vertex()).collect::<Vec<_>>();
            for (x, y) in [(0, 2), (0, 3), (1, 2), (1, 3)] {
                b.edge(vs[x], vs[y]);
            }
            if id == R9 {
                b.edge(vs[0], vs[1]);
            } else {
                let mid = b.vertex();
                b.edge(vs[0], mid);
                b.edge(mid, vs[1]);
            }
            b.pendants(vs[0], p(0));
        }
        R11 | R12 => {
            let c = b.cycle(if id == R11 { 3 } else { 4 });
            let leaves = b.pendants(c[0], p(0));
            let leaf = leaves.first().copied();
            let named: Vec<(&str, Option<usize>)> = if id == R11 {
                vec![("apex", Some(c[0])), ("base", Some(c[1])), ("apex-leaf", leaf)]
            } else {
                vec![
                    ("apex", Some(c[0])),
                    ("side", Some(c[1])),
                    ("opposite", Some(c[2])),
                    ("apex-leaf", leaf),
                ]
            };
            let r = reading.expect("ambiguous family needs a reading");
            b.gadget(site_vertex(r.site, &named)?, r.gadget);
        }
        R14 => {
            let c = b.cycle(5);
            b.pendants(c[0], p(0));
        }
        S1 => {
            let path = b.path(5);
            b.pendants(path[1], p(0));
            b.pendants(path[3], p(1));
            b.pendants(path[2], 1);
        }
        S2 | S3 => {
            let k = if id == S2 { 6 } else { 7 };
            let path = b.path(k);
            b.pendants(path[1], p(0));
            b.pendants(path[k - 2], p(1));
            let r = reading.expect("ambiguous family needs a reading");
            b.gadget(site_vertex(r.site, &path_sites(&path))?, r.gadget);
        }
        S4 => {
            let path = b.path(7);
            b.pendants(path[1], p(0));
            b.pendants(path[5], p(1));
            b.pendants(path[3], 1);
        }
        S5 => {
            let path = b.path(8);
            b.pendants(path[1], p(0));
            b.pendants(path[6], p(1));
        }
        S6 | S7 | S8 => {
            let k = match id {
                S6 => 6,
                S7 => 7,
                _ => 8,
            };
            let path = b.path(k);
            b.pendants(path[1], p(0));
            let r = reading.expect("ambiguous family needs a reading");
            let site = site_vertex(r.site, &path_sites(&path))?;
            for _ in 0..p(1) {
                b.gadget(site, r.gadget);
            }
        }
        S9 => {
            let c = b.cycle(3);
            let end = b.hang(c[0], 2);
            b.pendants(end, p(0));
        }
        S10 => {
            let c = b.cycle(4);
            let end = b.hang(c[0], 2);
            b.pendants(end, p(0));
            b.pendants(c[2], p(1));
        }
        S11 => {
            let c = b.cycle(4);
            b.pendants(c[0], p(0));
            // K_{1,r} glued at one of its leaves onto the vertex opposite c[0]
            let centre = b.hang(c[2], 1);
            b.pendants(centre, p(1) - 1);
        }
        S12 | S13 | S14 | S15 => {
            let legs: [usize; 3] = match id {
                S12 => [2, 2, 2],
                S13 => [2, 2, 3],
                S14 => [2, 3, 3],
                _ => [3, 3, 3],
            };
            let hub = b.vertex();
            for (i, &len) in legs.iter().enumerate() {
                let mut prev = hub;
                let mut support = hub;
                for _ in 0..len {
                    support = prev;
                    prev = b.hang(prev, 1);
                }
                b.pendants(support, p(i));
            }
        }
    }
    Some(b.finish())
}
