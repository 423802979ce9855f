//! Structural test for `2 <= rho <= t` and the predictors derived from it.
//!
//! For a connected graph and `t >= 2` the four conditions are:
//!
//! 1. `2 <= diam <= 2t`;
//! 2. no induced `K_{1,t+1}`;
//! 3. for every induced matching `M` of size `t`, every vertex outside
//!    `V(M)` has at least two neighbours in `V(M)` (vacuous without such `M`);
//! 4. for every EOP set `D` of size `t` whose `G[D]` has `s` components with
//!    `2 <= s <= t - 1`, every outside vertex adjacent to a component centre
//!    `u` also has a neighbour in `V_D \ {u}`. Both endpoints of a `K_{1,1}`
//!    component count as centres. Vacuous for `t = 2`.

use std::fmt;
use std::ops::ControlFlow;

use thiserror::Error;

use crate::eop::{for_each_eop_set, for_each_induced_matching, is_eop_set, star_decomposition};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConditionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("t must be at least {min}, got {t}")]
    TargetTooSmall { t: usize, min: usize },
    #[error("K_1,{s} is excluded for t = {t}")]
    ExcludedStar { s: usize, t: usize },
}

/// A concrete violation of one condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Condition 1: the diameter is outside `[2, 2t]`.
    Diameter { diameter: usize },
    /// Condition 2: an induced star with at least `t + 1` leaves.
    InducedStar { centre: usize, leaves: Vec<usize> },
    /// Condition 3: `vertex` has `neighbours <= 1` neighbours in `V(M)`.
    LonelyVertex { matching: Vec<usize>, vertex: usize, neighbours: usize },
    /// Condition 4: `vertex` sees `centre` and nothing else of `V_D`.
    CentreEscape { eop_set: Vec<usize>, centre: usize, vertex: usize },
}

impl Violation {
    /// Re-checks the witness from the raw definitions.
    pub fn verify(&self, g: &Graph, t: usize) -> bool {
        match self {
            Violation::Diameter { diameter } => {
                g.diameter().ok() == Some(*diameter) && (*diameter < 2 || *diameter > 2 * t)
            }
            Violation::InducedStar { centre, leaves } => {
                leaves.len() > t
                    && leaves.iter().all(|&l| g.has_edge(*centre, l))
                    && leaves
                        .iter()
                        .enumerate()
                        .all(|(i, &a)| leaves[i + 1..].iter().all(|&b| a != b && !g.has_edge(a, b)))
            }
            Violation::LonelyVertex { matching, vertex, neighbours } => {
                let Ok(covered) = endpoints(g, matching) else { return false };
                let disjoint = covered.len() == 2 * matching.len();
                let induced = matching.iter().enumerate().all(|(i, &a)| {
                    matching[i + 1..].iter().all(|&b| {
                        let (x, y) = (g.edge(a), g.edge(b));
                        x.endpoints().iter().all(|&p| y.endpoints().iter().all(|&q| !g.has_edge(p, q)))
                    })
                });
                let seen = covered.iter().filter(|&&v| g.has_edge(*vertex, v)).count();
                matching.len() == t
                    && disjoint
                    && induced
                    && !covered.contains(vertex)
                    && seen == *neighbours
                    && seen <= 1
            }
            Violation::CentreEscape { eop_set, centre, vertex } => {
                if eop_set.len() != t || !matches!(is_eop_set(g, eop_set), Ok(v) if v.is_valid()) {
                    return false;
                }
                let Ok(dec) = star_decomposition(g, eop_set) else { return false };
                let s = dec.component_count();
                let Ok(covered) = endpoints(g, eop_set) else { return false };
                (2..t).contains(&s)
                    && dec.components.iter().any(|c| c.centre_choices.contains(centre))
                    && !covered.contains(vertex)
                    && g.has_edge(*vertex, *centre)
                    && covered.iter().all(|&v| v == *centre || !g.has_edge(*vertex, v))
            }
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Diameter { diameter } => write!(f, "diameter={diameter}"),
            Violation::InducedStar { centre, leaves } => {
                write!(f, "induced-star centre={centre} leaves={}", join(leaves))
            }
            Violation::LonelyVertex { matching, vertex, neighbours } => write!(
                f,
                "matching={} vertex={vertex} neighbours={neighbours}",
                join(matching)
            ),
            Violation::CentreEscape { eop_set, centre, vertex } => {
                write!(f, "eop-set={} centre={centre} vertex={vertex}", join(eop_set))
            }
        }
    }
}

pub(crate) fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn endpoints(g: &Graph, ids: &[usize]) -> Result<Vec<usize>, GraphError> {
    let mut vs = Vec::with_capacity(2 * ids.len());
    for &id in ids {
        vs.extend(g.try_edge(id)?.endpoints());
    }
    vs.sort_unstable();
    vs.dedup();
    Ok(vs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// Holds because the quantified objects do not exist.
    Vacuous,
    Violated(Violation),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        !matches!(self, Verdict::Violated(_))
    }

    pub fn is_vacuous(&self) -> bool {
        matches!(self, Verdict::Vacuous)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Verdict::Violated(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => f.write_str("holds"),
            Verdict::Vacuous => f.write_str("holds(vacuous)"),
            Verdict::Violated(v) => write!(f, "fails({v})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub t: usize,
    pub c1: Verdict,
    pub c2: Verdict,
    pub c3: Verdict,
    pub c4: Verdict,
}

impl ConditionReport {
    pub fn verdicts(&self) -> [&Verdict; 4] {
        [&self.c1, &self.c2, &self.c3, &self.c4]
    }

    /// Prediction for `2 <= rho <= t`.
    pub fn window(&self) -> bool {
        self.verdicts().iter().all(|v| v.holds())
    }
}

fn require(g: &Graph, t: usize, min_t: usize) -> Result<(), ConditionError> {
    if t < min_t {
        return Err(ConditionError::TargetTooSmall { t, min: min_t });
    }
    if g.order() == 0 {
        return Err(GraphError::Empty.into());
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    Ok(())
}

pub fn check_c1(g: &Graph, t: usize) -> Result<Verdict, ConditionError> {
    require(g, t, 2)?;
    let diameter = g.diameter()?;
    Ok(if (2..=2 * t).contains(&diameter) {
        Verdict::Holds
    } else {
        Verdict::Violated(Violation::Diameter { diameter })
    })
}

/// `K_{1,t+1}`-freeness implies `K_{1,s}`-freeness for every `s > t`.
pub fn check_c2(g: &Graph, t: usize) -> Result<Verdict, ConditionError> {
    if t < 2 {
        return Err(ConditionError::TargetTooSmall { t, min: 2 });
    }
    Ok(match g.find_induced_star(t + 1) {
        None => Verdict::Holds,
        Some((centre, leaves)) => Verdict::Violated(Violation::InducedStar { centre, leaves }),
    })
}

pub fn check_c3(g: &Graph, t: usize) -> Result<Verdict, ConditionError> {
    require(g, t, 2)?;
    let mut any = false;
    let mut found = None;
    let mut in_s = vec![false; g.order()];
    let _ = for_each_induced_matching(g, t, |matching| {
        any = true;
        for &id in matching {
            let e = g.edge(id);
            in_s[e.u] = true;
            in_s[e.v] = true;
        }
        let lonely = (0..g.order()).filter(|&z| !in_s[z]).find_map(|z| {
            let seen = g.neighbours(z).iter().filter(|&&w| in_s[w]).count();
            (seen <= 1).then_some((z, seen))
        });
        in_s.iter_mut().for_each(|b| *b = false);
        match lonely {
            Some((vertex, neighbours)) => {
                found = Some(Violation::LonelyVertex { matching: matching.to_vec(), vertex, neighbours });
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        }
    });
    Ok(match (found, any) {
        (Some(v), _) => Verdict::Violated(v),
        (None, true) => Verdict::Holds,
        (None, false) => Verdict::Vacuous,
    })
}

pub fn check_c4(g: &Graph, t: usize) -> Result<Verdict, ConditionError> {
    require(g, t, 2)?;
    if t == 2 {
        return Ok(Verdict::Vacuous);
    }
    let mut qualifying = false;
    let mut found = None;
    let mut in_d = vec![false; g.order()];
    let _ = for_each_eop_set(g, t, |ids| {
        let dec = star_decomposition(g, ids).expect("enumerated sets are EOP sets");
        let s = dec.component_count();
        if !(2..t).contains(&s) {
            return ControlFlow::Continue(());
        }
        qualifying = true;
        for c in &dec.components {
            for v in c.vertices() {
                in_d[v] = true;
            }
        }
        let escape = dec.components.iter().flat_map(|c| c.centre_choices.iter()).find_map(|&u| {
            g.neighbours(u)
                .iter()
                .copied()
                .filter(|&z| !in_d[z])
                .find(|&z| g.neighbours(z).iter().all(|&w| w == u || !in_d[w]))
                .map(|z| (u, z))
        });
        in_d.iter_mut().for_each(|b| *b = false);
        match escape {
            Some((centre, vertex)) => {
                found = Some(Violation::CentreEscape { eop_set: ids.to_vec(), centre, vertex });
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        }
    });
    Ok(match (found, qualifying) {
        (Some(v), _) => Verdict::Violated(v),
        (None, true) => Verdict::Holds,
        (None, false) => Verdict::Vacuous,
    })
}

pub fn condition_report(g: &Graph, t: usize) -> Result<ConditionReport, ConditionError> {
    Ok(ConditionReport {
        t,
        c1: check_c1(g, t)?,
        c2: check_c2(g, t)?,
        c3: check_c3(g, t)?,
        c4: check_c4(g, t)?,
    })
}

/// Predicts `2 <= rho <= t` (not `rho <= t`: complete graphs fail the
/// diameter condition).
pub fn predict_rho_window(g: &Graph, t: usize) -> Result<bool, ConditionError> {
    Ok(condition_report(g, t)?.window())
}

/// Predicts `rho = t` for `t >= 3` as "window `t` holds and window `t - 1`
/// fails". Stars `K_{1,s}` with `1 <= s <= t - 1` are outside the domain.
pub fn predict_rho_equals_t(g: &Graph, t: usize) -> Result<bool, ConditionError> {
    require(g, t, 3)?;
    if g.is_star() && g.size() < t {
        return Err(ConditionError::ExcludedStar { s: g.size(), t });
    }
    Ok(predict_rho_window(g, t)? && !predict_rho_window(g, t - 1)?)
}

/// Direct test for `rho = 2`: diameter in `[2, 4]`, claw-free, and for any
/// two vertex-disjoint edges `uv`, `xy` with no edge between them, every
/// other vertex has at least two neighbours in `{u, v, x, y}`.
pub fn check_rho2(g: &Graph) -> Result<bool, ConditionError> {
    require(g, 2, 2)?;
    let diameter = g.diameter()?;
    if !(2..=4).contains(&diameter) {
        return Ok(false);
    }
    for c in 0..g.order() {
        let nb = g.neighbours(c);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                if nb[j + 1..].iter().any(|&d| !g.has_edge(a, d) && !g.has_edge(b, d)) {
                    return Ok(false);
                }
            }
        }
    }
    let edges = g.edges().collect::<Vec<_>>();
    for (i, e1) in edges.iter().enumerate() {
        for e2 in &edges[i + 1..] {
            let quad = [e1.u, e1.v, e2.u, e2.v];
            let disjoint = !e1.has_endpoint(e2.u) && !e1.has_endpoint(e2.v);
            if !disjoint {
                continue;
            }
            let joined = [e1.u, e1.v].iter().any(|&p| [e2.u, e2.v].iter().any(|&q| g.has_edge(p, q)));
            if joined {
                continue;
            }
            let starved = (0..g.order())
                .filter(|z| !quad.contains(z))
                .any(|z| quad.iter().filter(|&&q| g.has_edge(z, q)).count() < 2);
            if starved {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Hub 0 with pendants 1 and 2 and a path 0-3-4-5-6.
    fn spider_114() -> Graph {
        Graph::new(7, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6)]).unwrap()
    }

    #[test]
    fn c1_examples() {
        assert_eq!(check_c1(&Graph::cycle(5), 2), Ok(Verdict::Holds));
        assert_eq!(
            check_c1(&Graph::complete(4), 3),
            Ok(Verdict::Violated(Violation::Diameter { diameter: 1 }))
        );
        assert_eq!(
            check_c1(&Graph::path(10), 2),
            Ok(Verdict::Violated(Violation::Diameter { diameter: 9 }))
        );
        let split = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(check_c1(&split, 2), Err(ConditionError::Graph(GraphError::Disconnected)));
        assert_eq!(
            check_c1(&Graph::cycle(5), 1),
            Err(ConditionError::TargetTooSmall { t: 1, min: 2 })
        );
    }

    #[test]
    fn c2_examples() {
        let v = check_c2(&Graph::star(4), 3).unwrap();
        assert!(!v.holds());
        assert!(v.violation().unwrap().verify(&Graph::star(4), 3));
        assert_eq!(check_c2(&Graph::cycle(5), 2), Ok(Verdict::Holds));
        assert_eq!(check_c2(&Graph::path(6), 2), Ok(Verdict::Holds));
    }

    #[test]
    fn c3_examples() {
        assert_eq!(check_c3(&Graph::cycle(5), 2), Ok(Verdict::Vacuous));
        assert_eq!(check_c3(&Graph::star(5), 2), Ok(Verdict::Vacuous));
        assert_eq!(check_c3(&Graph::star(5), 4), Ok(Verdict::Vacuous));
        let p10 = Graph::path(10);
        let v = check_c3(&p10, 3).unwrap();
        let violation = v.violation().expect("P10 fails condition 3 for t = 3").clone();
        // M = {v1v2, v4v5, v7v8}
        match &violation {
            Violation::LonelyVertex { matching, .. } => assert_eq!(matching, &vec![0, 3, 6]),
            other => panic!("unexpected witness {other:?}"),
        }
        assert!(violation.verify(&p10, 3));
    }

    #[test]
    fn c4_examples() {
        assert_eq!(check_c4(&spider_114(), 2), Ok(Verdict::Vacuous));
        assert_eq!(check_c4(&Graph::path(6), 3), Ok(Verdict::Holds));
        let g = spider_114();
        let v = check_c4(&g, 3).unwrap();
        let violation = v.violation().expect("spider fails condition 4").clone();
        assert!(violation.verify(&g, 3));
        // the hub-centred witness: both hub pendants plus the far path edge
        let spelled_out = Violation::CentreEscape {
            eop_set: vec![g.edge_id(0, 1).unwrap(), g.edge_id(0, 2).unwrap(), g.edge_id(5, 6).unwrap()],
            centre: 0,
            vertex: 3,
        };
        assert!(spelled_out.verify(&g, 3));
        let bogus = Violation::CentreEscape { eop_set: vec![0, 1, 5], centre: 0, vertex: 4 };
        assert!(!bogus.verify(&g, 3));
    }

    #[test]
    fn window_examples() {
        assert_eq!(predict_rho_window(&Graph::path(6), 3), Ok(true));
        assert_eq!(predict_rho_window(&Graph::complete(4), 3), Ok(false));
        assert_eq!(predict_rho_window(&Graph::path(10), 2), Ok(false));
    }

    #[test]
    fn exact_t_examples() {
        assert_eq!(predict_rho_equals_t(&Graph::path(6), 3), Ok(true));
        assert_eq!(predict_rho_equals_t(&Graph::star(3), 3), Ok(true));
        assert_eq!(predict_rho_equals_t(&Graph::cycle(5), 3), Ok(false));
        assert_eq!(
            predict_rho_equals_t(&Graph::star(2), 3),
            Err(ConditionError::ExcludedStar { s: 2, t: 3 })
        );
        assert_eq!(
            predict_rho_equals_t(&Graph::path(6), 2),
            Err(ConditionError::TargetTooSmall { t: 2, min: 3 })
        );
    }

    #[test]
    fn rho2_examples() {
        assert_eq!(check_rho2(&Graph::cycle(5)), Ok(true));
        assert_eq!(check_rho2(&Graph::complete(4)), Ok(false));
        assert_eq!(check_rho2(&Graph::path(8)), Ok(false));
        assert_eq!(check_rho2(&Graph::path(4)), Ok(true));
        assert_eq!(check_rho2(&Graph::star(3)), Ok(false));
    }
}
