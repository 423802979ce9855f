use super::{EopError, EopSet};
use crate::graph::Graph;

/// One component `K_{1,r}` of `G[D]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarComponent {
    /// The unique vertex of degree `>= 2`, or both endpoints (smaller first)
    /// for a `K_{1,1}` component.
    pub centre_choices: Vec<usize>,
    /// Leaves for the first centre choice, increasing.
    pub leaves: Vec<usize>,
    /// Host edge ids of the component, increasing.
    pub edges: Vec<usize>,
}

impl StarComponent {
    pub fn centre(&self) -> usize {
        self.centre_choices[0]
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(self.centre()).chain(self.leaves.iter().copied())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarDecomposition {
    /// Components ordered by smallest vertex.
    pub components: Vec<StarComponent>,
}

impl StarDecomposition {
    /// Leaf counts, non-decreasing; sums to `|D|`.
    pub fn shape(&self) -> Vec<usize> {
        let mut shape = self.components.iter().map(StarComponent::leaf_count).collect::<Vec<_>>();
        shape.sort_unstable();
        shape
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }
}

/// Components of the vertex-induced subgraph `G[V_D]`, each required to be
/// a star. Fails with `NotDisjointStars` exactly when `ds` is not an EOP
/// set.
pub fn star_decomposition(g: &Graph, ds: &[usize]) -> Result<StarDecomposition, EopError> {
    if ds.is_empty() {
        return Err(EopError::EmptySet);
    }
    let set = EopSet::new(g, ds)?;
    let (sub, map) = g.induced_subgraph(set.saturated())?;
    let mut components = Vec::new();
    for (comp, local) in sub.components() {
        let k = comp.order();
        let hub = (0..k).find(|&v| comp.degree(v) == k - 1);
        let to_host = |v: usize| map[local[v]];
        let Some(hub) = hub.filter(|_| comp.size() == k - 1) else {
            return Err(EopError::NotDisjointStars { vertex: to_host(0) });
        };
        let mut edges = comp
            .edges()
            .map(|e| g.edge_id(to_host(e.u), to_host(e.v)).expect("induced edge exists in host"))
            .collect::<Vec<_>>();
        edges.sort_unstable();
        let (centre_choices, leaves) = if k == 2 {
            let (a, b) = (to_host(0), to_host(1));
            (vec![a.min(b), a.max(b)], vec![a.max(b)])
        } else {
            let mut leaves = (0..k).filter(|&v| v != hub).map(to_host).collect::<Vec<_>>();
            leaves.sort_unstable();
            (vec![to_host(hub)], leaves)
        };
        components.push(StarComponent { centre_choices, leaves, edges });
    }
    Ok(StarDecomposition { components })
}
