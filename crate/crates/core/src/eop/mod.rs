//! The common-edge relation and everything built on it.
//!
//! Edge open packing is a pairwise condition, so the EOP sets of a graph are
//! exactly the independent sets of its [`ConflictGraph`], the graph on the
//! edge ids whose adjacency is "has a common edge". `rho` is the independence
//! number of that graph and the injective chromatic index is its chromatic
//! number.

mod coloring;
mod enumerate;
mod mis;
mod oracle;
mod stars;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub use coloring::{injective_chromatic_index, injective_coloring, InjectiveColoring};
pub use enumerate::{
    enumerate_eop_sets, enumerate_induced_matchings, for_each_eop_set, for_each_induced_matching,
};
pub use oracle::eop_number_oracle;
pub use stars::{star_decomposition, StarComponent, StarDecomposition};

/// Default cap on the edge count for the exponential oracle and the exact
/// colouring.
pub const DEFAULT_EDGE_GUARD: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EopError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("edge {0} was given twice")]
    SameEdge(usize),
    #[error("G[D] is not a disjoint union of stars: component containing vertex {vertex} is not a star")]
    NotDisjointStars { vertex: usize },
    #[error("empty edge set")]
    EmptySet,
    #[error("graph has {m} edges, above the guard of {guard}")]
    GuardExceeded { m: usize, guard: usize },
}

/// Returns an edge joining an endpoint of `e1` to an endpoint of `e2`,
/// other than `e1` and `e2` themselves, if one exists.
pub fn common_edge(g: &Graph, e1: usize, e2: usize) -> Result<Option<usize>, EopError> {
    if e1 == e2 {
        return Err(EopError::SameEdge(e1));
    }
    let a = g.try_edge(e1)?;
    let b = g.try_edge(e2)?;
    Ok(common_edge_unchecked(g, a.endpoints(), b.endpoints(), e1, e2))
}

fn common_edge_unchecked(
    g: &Graph,
    a: [usize; 2],
    b: [usize; 2],
    e1: usize,
    e2: usize,
) -> Option<usize> {
    for x in a {
        for y in b {
            if x == y {
                continue;
            }
            if let Some(e) = g.edge_id(x, y) {
                if e != e1 && e != e2 {
                    return Some(e);
                }
            }
        }
    }
    None
}

pub fn have_common_edge(g: &Graph, e1: usize, e2: usize) -> Result<bool, EopError> {
    common_edge(g, e1, e2).map(|w| w.is_some())
}

/// Outcome of an EOP validity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validity {
    Valid,
    /// The first conflicting pair in id order and one of their common edges.
    Conflict { first: usize, second: usize, common: usize },
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

/// Checks every pair of `ds` (after sorting) for a common edge.
pub fn is_eop_set(g: &Graph, ds: &[usize]) -> Result<Validity, EopError> {
    let ids = normalize(g, ds)?;
    for (i, &a) in ids.iter().enumerate() {
        for &b in &ids[i + 1..] {
            if let Some(common) = common_edge(g, a, b)? {
                return Ok(Validity::Conflict { first: a, second: b, common });
            }
        }
    }
    Ok(Validity::Valid)
}

fn normalize(g: &Graph, ds: &[usize]) -> Result<Vec<usize>, EopError> {
    let mut ids = ds.to_vec();
    ids.sort_unstable();
    for w in ids.windows(2) {
        if w[0] == w[1] {
            return Err(EopError::SameEdge(w[0]));
        }
    }
    for &id in &ids {
        g.try_edge(id)?;
    }
    Ok(ids)
}

/// A set of edge ids of a host graph together with its validity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EopSet {
    members: Vec<usize>,
    saturated: Vec<usize>,
    validity: Validity,
}

impl EopSet {
    pub fn new(g: &Graph, ds: &[usize]) -> Result<Self, EopError> {
        let members = normalize(g, ds)?;
        let validity = is_eop_set(g, &members)?;
        let mut saturated = members
            .iter()
            .flat_map(|&id| g.edge(id).endpoints())
            .collect::<Vec<_>>();
        saturated.sort_unstable();
        saturated.dedup();
        Ok(EopSet { members, saturated, validity })
    }

    /// Edge ids, increasing.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Vertices covered by the members, increasing.
    pub fn saturated(&self) -> &[usize] {
        &self.saturated
    }

    pub fn validity(&self) -> Validity {
        self.validity
    }

    pub fn is_valid(&self) -> bool {
        self.validity.is_valid()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// The common-edge relation on the edges of a host graph.
#[derive(Debug, Clone)]
pub struct ConflictGraph {
    graph: Graph,
    rows: Vec<FixedBitSet>,
}

impl ConflictGraph {
    pub fn new(host: &Graph) -> Self {
        let m = host.size();
        let edges = host.edges().collect::<Vec<_>>();
        let mut pairs = Vec::new();
        let mut rows = vec![FixedBitSet::with_capacity(m); m];
        for (i, a) in edges.iter().enumerate() {
            for b in &edges[i + 1..] {
                if common_edge_unchecked(host, a.endpoints(), b.endpoints(), a.id, b.id).is_some() {
                    pairs.push((a.id, b.id));
                    rows[a.id].insert(b.id);
                    rows[b.id].insert(a.id);
                }
            }
        }
        let graph = Graph::new(m, &pairs).expect("conflict pairs are valid");
        ConflictGraph { graph, rows }
    }

    /// The conflict relation as a graph on vertex set `0..m`.
    pub fn as_graph(&self) -> &Graph {
        &self.graph
    }

    pub fn edge_count(&self) -> usize {
        self.rows.len()
    }

    pub fn conflicts(&self, e1: usize, e2: usize) -> bool {
        self.rows[e1].contains(e2)
    }

    pub(crate) fn row(&self, e: usize) -> &FixedBitSet {
        &self.rows[e]
    }

    /// `rho` together with the lexicographically least maximum EOP set.
    pub fn maximum_packing(&self) -> (usize, Vec<usize>) {
        mis::maximum_independent_set(self)
    }
}

pub fn conflict_graph(g: &Graph) -> ConflictGraph {
    ConflictGraph::new(g)
}

/// Exact `rho` by branch and bound on the conflict graph, with the
/// lexicographically least maximum EOP set as witness. Edgeless graphs give
/// `(0, [])`.
pub fn eop_number_exact(g: &Graph) -> (usize, EopSet) {
    let (rho, ids) = ConflictGraph::new(g).maximum_packing();
    let witness = EopSet::new(g, &ids).expect("witness ids come from the host");
    debug_assert!(witness.is_valid());
    (rho, witness)
}

/// `rho` of a possibly disconnected graph as the sum over its components;
/// no common edge can join edges of different components.
pub fn eop_number_by_components(g: &Graph) -> (usize, Vec<usize>) {
    let mut total = 0;
    let mut witness = Vec::new();
    for (component, map) in g.components() {
        let (rho, set) = eop_number_exact(&component);
        total += rho;
        for &id in set.members() {
            let e = component.edge(id);
            witness.push(g.edge_id(map[e.u], map[e.v]).expect("component edge exists in host"));
        }
    }
    witness.sort_unstable();
    (total, witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;

    #[test]
    fn common_edge_on_p4() {
        let p4 = Graph::path(4);
        assert_eq!(common_edge(&p4, 0, 2), Ok(Some(1)));
        assert_eq!(have_common_edge(&p4, 0, 1), Ok(false));
    }

    #[test]
    fn shared_hub_is_not_a_common_edge() {
        assert_eq!(have_common_edge(&Graph::star(3), 0, 1), Ok(false));
    }

    #[test]
    fn triangle_sides_conflict() {
        let c3 = Graph::complete(3);
        let xy = c3.edge_id(0, 1).unwrap();
        let yz = c3.edge_id(1, 2).unwrap();
        assert_eq!(common_edge(&c3, xy, yz), Ok(c3.edge_id(0, 2)));
    }

    #[test]
    fn common_edge_errors() {
        let p4 = Graph::path(4);
        assert_eq!(common_edge(&p4, 1, 1), Err(EopError::SameEdge(1)));
        assert!(matches!(common_edge(&p4, 0, 9), Err(EopError::Graph(_))));
    }

    #[test]
    fn conflict_graph_shapes() {
        assert_eq!(conflict_graph(&Graph::star(5)).as_graph().size(), 0);
        let p4 = conflict_graph(&Graph::path(4));
        assert_eq!(p4.as_graph().edge_pairs(), &[(0, 2)]);
        let c5 = conflict_graph(&Graph::cycle(5));
        assert!(are_isomorphic(c5.as_graph(), &Graph::cycle(5)));
    }

    #[test]
    fn eop_validity() {
        let p4 = Graph::path(4);
        assert_eq!(is_eop_set(&p4, &[0, 1]), Ok(Validity::Valid));
        assert_eq!(
            is_eop_set(&p4, &[2, 0]),
            Ok(Validity::Conflict { first: 0, second: 2, common: 1 })
        );
        let star = Graph::star(6);
        assert_eq!(is_eop_set(&star, &(0..6).collect::<Vec<_>>()), Ok(Validity::Valid));
        assert_eq!(is_eop_set(&p4, &[0, 0]), Err(EopError::SameEdge(0)));
    }

    #[test]
    fn eop_set_records_saturation() {
        let set = EopSet::new(&Graph::path(6), &[4, 0, 1]).unwrap();
        assert_eq!(set.members(), &[0, 1, 4]);
        assert_eq!(set.saturated(), &[0, 1, 2, 4, 5]);
        assert!(set.is_valid());
    }

    #[test]
    fn exact_point_values() {
        let cases = [
            (Graph::complete(4), 1),
            (Graph::cycle(5), 2),
            (Graph::path(8), 4),
            (Graph::star(7), 7),
            (Graph::path(6), 3),
            (Graph::path(4), 2),
        ];
        for (g, rho) in cases {
            let (got, witness) = eop_number_exact(&g);
            assert_eq!(got, rho, "{g:?}");
            assert_eq!(witness.len(), rho);
            assert!(witness.is_valid());
        }
        let (rho, witness) = eop_number_exact(&Graph::empty(3));
        assert_eq!((rho, witness.len()), (0, 0));
    }

    #[test]
    fn witness_is_lexicographically_least() {
        // C5 edges (0,1),(0,4),(1,2),(2,3),(3,4); maximum sets are adjacent pairs
        let (_, witness) = eop_number_exact(&Graph::cycle(5));
        assert_eq!(witness.members(), &[0, 1]);
    }

    #[test]
    fn components_add_up() {
        let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(eop_number_by_components(&two_k2), (2, vec![0, 1]));
        let g = Graph::cycle(5).disjoint_union(&Graph::star(3));
        assert_eq!(eop_number_by_components(&g).0, 5);
    }
}
