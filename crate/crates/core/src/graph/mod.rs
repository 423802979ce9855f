//! Simple undirected graphs with dense vertex ids and stable edge ids.
//!
//! A [`Graph`] is immutable once built. Edges are stored in canonical
//! `(u, v)` order with `u < v`, and edge ids are the positions of the edges
//! in the sorted edge list, so `(u, v)` determines the id and vice versa.

mod canon;
mod enumerate;
mod graph6;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use canon::{are_isomorphic, canonical_form, canonical_graph, canonical_labeling, Certificate};
pub use enumerate::{enumerate_connected_graphs, MAX_ENUMERATION_ORDER};
pub use graph6::{parse_graph6, write_graph6, GRAPH6_HEADER, MAX_GRAPH6_ORDER};

const NO_EDGE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("endpoint {vertex} out of range for a graph on {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge id {edge} out of range for a graph with {m} edges")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("graph6 supports at most {max} vertices, got {n}")]
    Graph6TooLarge { n: usize, max: usize },
    #[error("malformed graph6 record: {0}")]
    Graph6(String),
    #[error("built-in enumeration supports 1..={max} vertices, got {n}")]
    UnsupportedOrder { n: usize, max: usize },
    #[error("malformed edge list: {0}")]
    EdgeList(String),
}

/// An edge of a host graph, endpoints in canonical order `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub id: usize,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn endpoints(&self) -> [usize; 2] {
        [self.u, self.v]
    }

    pub fn has_endpoint(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`. `x` must be an endpoint.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    /// `n * n` table of edge ids, `NO_EDGE` where absent.
    index: Vec<u32>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::EndpointOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_canonical_edges(n, edges))
    }

    /// `edges` must be sorted, deduplicated, in range and loop-free.
    fn from_canonical_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut index = vec![NO_EDGE; n * n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push(v);
            adj[v].push(u);
            index[u * n + v] = id as u32;
            index[v * n + u] = id as u32;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj, index }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_canonical_edges(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect::<Vec<_>>();
        Self::new(n, &edges).expect("complete graph edges are valid")
    }

    /// Path on `n` vertices `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect::<Vec<_>>();
        Self::new(n, &edges).expect("path edges are valid")
    }

    /// Cycle on `n >= 3` vertices in label order.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut edges = (1..n).map(|v| (v - 1, v)).collect::<Vec<_>>();
        edges.push((0, n - 1));
        Self::new(n, &edges).expect("cycle edges are valid")
    }

    /// Star `K_{1,s}` with hub `0` and leaves `1..=s`.
    pub fn star(s: usize) -> Self {
        let edges = (1..=s).map(|v| (0, v)).collect::<Vec<_>>();
        Self::new(s + 1, &edges).expect("star edges are valid")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, id: usize) -> Edge {
        let (u, v) = self.edges[id];
        Edge { id, u, v }
    }

    pub fn try_edge(&self, id: usize) -> Result<Edge, GraphError> {
        if id < self.edges.len() {
            Ok(self.edge(id))
        } else {
            Err(GraphError::EdgeOutOfRange { edge: id, m: self.edges.len() })
        }
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = Edge> + '_ {
        self.edges.iter().enumerate().map(|(id, &(u, v))| Edge { id, u, v })
    }

    pub fn edge_pairs(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.index[u * self.n + v] != NO_EDGE
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        match self.index[u * self.n + v] {
            NO_EDGE => None,
            id => Some(id as usize),
        }
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq = self.adj.iter().map(Vec::len).collect::<Vec<_>>();
        seq.sort_unstable();
        seq
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// `K_0` and `K_1` count as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Component index per vertex, numbered in order of smallest member.
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if label[y] == usize::MAX {
                        label[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    /// Connected components as induced subgraphs, each with the map from
    /// its vertices back to vertices of `self`.
    pub fn components(&self) -> Vec<(Graph, Vec<usize>)> {
        let (count, label) = self.component_labels();
        (0..count)
            .map(|c| {
                let vs = (0..self.n).filter(|&v| label[v] == c).collect::<Vec<_>>();
                self.induced_subgraph(&vs).expect("component vertices are in range")
            })
            .collect()
    }

    pub fn diameter(&self) -> Result<usize, GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        let mut best = 0;
        for v in 0..self.n {
            for d in self.distances_from(v) {
                best = best.max(d.ok_or(GraphError::Disconnected)?);
            }
        }
        Ok(best)
    }

    /// Vertex-induced subgraph on `vs` (order preserved, duplicates
    /// ignored). Returns the subgraph and the map from its vertex ids to
    /// vertex ids of `self`.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut map = Vec::with_capacity(vs.len());
        let mut local = vec![usize::MAX; self.n];
        for &v in vs {
            self.check_vertex(v)?;
            if local[v] == usize::MAX {
                local[v] = map.len();
                map.push(v);
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]))
            .collect::<Vec<_>>();
        let g = Graph::new(map.len(), &edges).expect("induced edges are valid");
        Ok((g, map))
    }

    /// Edge-induced subgraph: vertices are the endpoints of `ds`, edges are
    /// exactly `ds`. Returns the subgraph, its vertex map into `self`, and
    /// its edge map (sub edge id to host edge id).
    pub fn edge_induced_subgraph(
        &self,
        ds: &[usize],
    ) -> Result<(Graph, Vec<usize>, Vec<usize>), GraphError> {
        let mut ids = ds.to_vec();
        ids.sort_unstable();
        ids.dedup();
        let mut verts = Vec::new();
        for &id in &ids {
            let e = self.try_edge(id)?;
            verts.push(e.u);
            verts.push(e.v);
        }
        verts.sort_unstable();
        verts.dedup();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            local[v] = i;
        }
        let pairs = ids
            .iter()
            .map(|&id| {
                let (u, v) = self.edges[id];
                (local[u], local[v])
            })
            .collect::<Vec<_>>();
        let g = Graph::new(verts.len(), &pairs).expect("edge-induced edges are valid");
        // `verts` is increasing so local ids keep the host edge order.
        Ok((g, verts, ids))
    }

    /// Graph with edge `id` removed (vertex set unchanged).
    pub fn without_edge(&self, id: usize) -> Result<Graph, GraphError> {
        self.try_edge(id)?;
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != id)
            .map(|(_, &e)| e)
            .collect::<Vec<_>>();
        Ok(Self::from_canonical_edges(self.n, edges))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, &edges).expect("union edges are valid")
    }

    /// Graph with vertex `v` of `self` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect::<Vec<_>>();
        Graph::new(self.n, &edges).expect("relabeled edges are valid")
    }

    /// Some centre with `s` pairwise non-adjacent neighbours, together with
    /// those neighbours, i.e. an induced `K_{1,s}`.
    pub fn find_induced_star(&self, s: usize) -> Option<(usize, Vec<usize>)> {
        (0..self.n).find_map(|v| {
            let mut chosen = Vec::with_capacity(s);
            if self.independent_subset(self.neighbours(v), s, &mut chosen) {
                Some((v, chosen))
            } else {
                None
            }
        })
    }

    fn independent_subset(&self, pool: &[usize], want: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == want {
            return true;
        }
        if pool.len() < want - chosen.len() {
            return false;
        }
        for (i, &x) in pool.iter().enumerate() {
            if chosen.iter().all(|&y| !self.has_edge(x, y)) {
                chosen.push(x);
                if self.independent_subset(&pool[i + 1..], want, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    /// True iff the graph contains `K_{1,s}` as an induced subgraph.
    pub fn contains_induced_star(&self, s: usize) -> bool {
        self.find_induced_star(s).is_some()
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.size() == self.n - 1 && self.is_connected()
    }

    /// `K_{1,s}` for some `s >= 1` (so `K_2` is a star).
    pub fn is_star(&self) -> bool {
        self.n >= 2 && self.is_tree() && self.max_degree() == self.n - 1
    }

    /// `K_{1,m-1}` with exactly one edge subdivided once, `m >= 3`.
    pub fn is_once_subdivided_star(&self) -> bool {
        if !self.is_tree() || self.size() < 3 {
            return false;
        }
        let n = self.n;
        (0..n).any(|c| {
            if self.degree(c) != n - 2 {
                return false;
            }
            let far = (0..n).find(|&w| w != c && !self.has_edge(c, w)).unwrap();
            self.degree(far) == 1 && self.degree(self.neighbours(far)[0]) == 2
        })
    }

    pub fn classify_basic_shape(&self) -> Result<BasicShape, GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let shape = if self.is_complete() {
            BasicShape::Complete
        } else if self.is_star() {
            BasicShape::Star
        } else if self.is_once_subdivided_star() {
            BasicShape::OnceSubdividedStar
        } else if self.is_tree() && self.max_degree() <= 2 {
            BasicShape::Path
        } else if self.n >= 3 && self.adj.iter().all(|a| a.len() == 2) {
            BasicShape::Cycle
        } else {
            BasicShape::Other
        };
        Ok(shape)
    }

    /// Parses `"n; u v; u v; ..."`.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut parts = text.trim().split(';').map(str::trim);
        let head = parts.next().unwrap_or("");
        let n = head
            .parse::<usize>()
            .map_err(|_| GraphError::EdgeList(format!("bad vertex count {head:?}")))?;
        let mut edges = Vec::new();
        for part in parts.filter(|p| !p.is_empty()) {
            let nums = part
                .split_whitespace()
                .map(|x| x.parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| GraphError::EdgeList(format!("bad edge {part:?}")))?;
            match nums[..] {
                [u, v] => edges.push((u, v)),
                _ => return Err(GraphError::EdgeList(format!("edge {part:?} needs two endpoints"))),
            }
        }
        Graph::new(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = self.n.to_string();
        for &(u, v) in &self.edges {
            s.push_str(&format!("; {u} {v}"));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.to_edge_list())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicShape {
    Complete,
    Star,
    OnceSubdividedStar,
    Path,
    Cycle,
    Other,
}

impl fmt::Display for BasicShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasicShape::Complete => "complete",
            BasicShape::Star => "star",
            BasicShape::OnceSubdividedStar => "once_subdivided_star",
            BasicShape::Path => "path",
            BasicShape::Cycle => "cycle",
            BasicShape::Other => "other",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_canonicalizes_and_dedups() {
        let g = Graph::new(4, &[(2, 1), (0, 1), (1, 2), (3, 2)]).unwrap();
        assert_eq!(g.edge_pairs(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.size(), 3);
        assert_eq!(g.edge_id(2, 1), Some(1));
        assert_eq!(g.edge_id(0, 3), None);
        assert!(g.has_edge(3, 2) && g.has_edge(2, 3));
    }

    #[test]
    fn build_small_cases() {
        assert_eq!(Graph::new(1, &[]).unwrap().size(), 0);
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.size(), 3);
        assert!(k3.is_complete());
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::EndpointOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(4).is_connected());
        assert!(!Graph::new(4, &[(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn diameters() {
        assert_eq!(Graph::complete(4).diameter(), Ok(1));
        assert_eq!(Graph::cycle(5).diameter(), Ok(2));
        assert_eq!(Graph::path(8).diameter(), Ok(7));
        assert_eq!(Graph::empty(1).diameter(), Ok(0));
        assert_eq!(Graph::empty(2).diameter(), Err(GraphError::Disconnected));
    }

    #[test]
    fn induced_stars() {
        assert!(Graph::star(3).contains_induced_star(3));
        assert!(!Graph::complete(4).contains_induced_star(2));
        assert!(!Graph::cycle(5).contains_induced_star(3));
        let (centre, leaves) = Graph::star(4).find_induced_star(3).unwrap();
        assert_eq!(centre, 0);
        assert_eq!(leaves, vec![1, 2, 3]);
    }

    #[test]
    fn basic_shapes() {
        assert_eq!(Graph::complete(5).classify_basic_shape(), Ok(BasicShape::Complete));
        assert_eq!(Graph::path(4).classify_basic_shape(), Ok(BasicShape::OnceSubdividedStar));
        assert_eq!(Graph::cycle(6).classify_basic_shape(), Ok(BasicShape::Cycle));
        assert_eq!(Graph::star(4).classify_basic_shape(), Ok(BasicShape::Star));
        assert_eq!(Graph::path(5).classify_basic_shape(), Ok(BasicShape::Path));
        let spider = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (1, 5)]).unwrap();
        assert_eq!(spider.classify_basic_shape(), Ok(BasicShape::Other));
        let once = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        assert_eq!(once.classify_basic_shape(), Ok(BasicShape::OnceSubdividedStar));
        let split = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(split.classify_basic_shape(), Err(GraphError::Disconnected));
    }

    #[test]
    fn induced_subgraphs() {
        let (p3, map) = Graph::path(4).induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(p3, Graph::path(3));
        assert_eq!(map, vec![0, 1, 2]);
        let (k3, _) = Graph::complete(4).induced_subgraph(&[3, 1, 0]).unwrap();
        assert!(k3.is_complete() && k3.order() == 3);
        let (h, _) = Graph::cycle(5).induced_subgraph(&[0, 1, 3]).unwrap();
        assert_eq!(h.size(), 1);
        assert_eq!(h.order(), 3);
        assert!(Graph::path(3).induced_subgraph(&[5]).is_err());
    }

    #[test]
    fn edge_induced_subgraphs() {
        let c3 = Graph::complete(3);
        let (h, _, _) = c3.edge_induced_subgraph(&[0, 1]).unwrap();
        assert!(are_isomorphic(&h, &Graph::path(3)));
        let (h, verts, ids) = Graph::path(4).edge_induced_subgraph(&[2, 0]).unwrap();
        assert_eq!(h, Graph::new(4, &[(0, 1), (2, 3)]).unwrap());
        assert_eq!(verts, vec![0, 1, 2, 3]);
        assert_eq!(ids, vec![0, 2]);
        let host = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (1, 2)]).unwrap();
        let star_ids = [host.edge_id(0, 1).unwrap(), host.edge_id(0, 2).unwrap(), host.edge_id(0, 3).unwrap()];
        let (h, _, _) = host.edge_induced_subgraph(&star_ids).unwrap();
        assert!(are_isomorphic(&h, &Graph::star(3)));
        assert!(Graph::path(3).edge_induced_subgraph(&[7]).is_err());
    }

    #[test]
    fn edge_list_text() {
        let g = Graph::parse_edge_list("4; 0 1; 1 2 ; 2 3;").unwrap();
        assert_eq!(g, Graph::path(4));
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
        assert!(Graph::parse_edge_list("x; 0 1").is_err());
        assert!(Graph::parse_edge_list("3; 0 1 2").is_err());
    }
}
