//! Connected graph counts from a labeled orbit sweep that shares no code
//! with the canonical-form enumerator.

use eop_core::graph::enumerate_connected_graphs;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p = (0..n).collect::<Vec<_>>();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, p, out);
        if k.is_multiple_of(2) {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
    heap(k - 1, p, out);
}

fn connected(n: usize, pairs: &[(usize, usize)], mask: u32) -> bool {
    let mut seen = 1u32;
    loop {
        let mut grown = seen;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 && (seen >> u & 1 == 1 || seen >> v & 1 == 1) {
                grown |= 1 << u | 1 << v;
            }
        }
        if grown == seen {
            return seen.count_ones() as usize == n;
        }
        seen = grown;
    }
}

/// Isomorphism classes of connected labeled graphs on `n` vertices.
fn orbit_count(n: usize) -> usize {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect::<Vec<_>>();
    let index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
    let maps = permutations(n)
        .into_iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect::<Vec<_>>())
        .collect::<Vec<_>>();
    let total = 1usize << pairs.len();
    let mut visited = vec![false; total];
    let mut classes = 0;
    for mask in 0..total {
        if visited[mask] || !connected(n, &pairs, mask as u32) {
            continue;
        }
        classes += 1;
        for map in &maps {
            let mut image = 0usize;
            for (i, &j) in map.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    image |= 1 << j;
                }
            }
            visited[image] = true;
        }
    }
    classes
}

#[test]
fn enumerator_matches_orbit_counts() {
    for (n, expected) in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112), (7, 853)] {
        let oracle = orbit_count(n);
        assert_eq!(oracle, expected, "orbit sweep n={n}");
        assert_eq!(enumerate_connected_graphs(n).unwrap().len(), oracle, "enumerator n={n}");
    }
}
