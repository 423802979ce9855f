use std::fmt;
use std::ops::ControlFlow;

use super::{graph6_of, Catalogues, HarnessError, ScanOptions, ScanRecord, ScanVerdict, Subject, Theorem};
use crate::conditions::{check_rho2, condition_report, predict_rho_equals_t};
use crate::eop::{
    eop_number_exact, eop_number_oracle, for_each_eop_set, have_common_edge, star_decomposition,
};
use crate::families::{ExtremalClass, FamilyInstance};
use crate::graph::{canonical_form, Certificate, Graph};

/// A violated structural invariant with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantFailure {
    /// `rho < ceil(diameter / 2)`.
    DiameterBound { diameter: usize, rho: usize },
    /// `rho > floor(m / min_degree)`.
    DegreeBound { m: usize, min_degree: usize, rho: usize },
    /// `G[D]` has `components >= 2` but fewer edges lie outside `D`.
    ComponentDeficit { eop_set: Vec<usize>, components: usize },
    /// An EOP set whose `G[D]` is not a union of induced stars.
    NotStars { eop_set: Vec<usize> },
    /// A pair where the star decomposition and the EOP test disagree.
    PairDecomposition { first: usize, second: usize },
    /// The pairwise common-edge test and the three-edge shape test differ.
    CommonEdgeShape { first: usize, second: usize },
    /// A maximum EOP set at `rho = m - 3` whose complement has an
    /// unexpected shape.
    ComplementShape { eop_set: Vec<usize> },
}

impl fmt::Display for InvariantFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use InvariantFailure::*;
        match self {
            DiameterBound { diameter, rho } => write!(f, "diameter-bound(diam={diameter},rho={rho})"),
            DegreeBound { m, min_degree, rho } => {
                write!(f, "degree-bound(m={m},delta={min_degree},rho={rho})")
            }
            ComponentDeficit { eop_set, components } => {
                write!(f, "component-deficit(D={},k={components})", ids(eop_set))
            }
            NotStars { eop_set } => write!(f, "not-stars(D={})", ids(eop_set)),
            PairDecomposition { first, second } => write!(f, "pair-decomposition({first},{second})"),
            CommonEdgeShape { first, second } => write!(f, "common-edge-shape({first},{second})"),
            ComplementShape { eop_set } => write!(f, "complement-shape(D={})", ids(eop_set)),
        }
    }
}

fn ids(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn edges(g: &Graph, xs: &[usize]) -> String {
    xs.iter()
        .map(|&id| {
            let e = g.edge(id);
            format!("{}-{}", e.u, e.v)
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// The five possible edge-induced shapes of three edges left out of a
/// maximum EOP set when `rho = m - 3`: `K_{1,3}`, `P_3 + K_2`, `P_4`,
/// `C_3` and `3K_2`.
pub fn figure_shapes() -> Vec<Graph> {
    let k2 = Graph::path(2);
    vec![
        Graph::star(3),
        Graph::path(3).disjoint_union(&k2),
        Graph::path(4),
        Graph::complete(3),
        k2.disjoint_union(&k2).disjoint_union(&k2),
    ]
}

fn is_induced_star(g: &Graph, centre: usize, leaves: &[usize]) -> bool {
    leaves.iter().all(|&l| g.has_edge(centre, l))
        && leaves.iter().enumerate().all(|(i, &a)| leaves[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
}

/// Checks every structural invariant on a connected graph.
pub fn invariant_failures(g: &Graph) -> Vec<InvariantFailure> {
    let mut out = Vec::new();
    let m = g.size();
    let (rho, _) = eop_number_exact(g);

    if let Ok(diameter) = g.diameter() {
        if rho < diameter.div_ceil(2) {
            out.push(InvariantFailure::DiameterBound { diameter, rho });
        }
    }
    let min_degree = g.min_degree();
    if min_degree > 0 && rho > m / min_degree {
        out.push(InvariantFailure::DegreeBound { m, min_degree, rho });
    }

    for size in 1..=rho {
        let _ = for_each_eop_set(g, size, |d| {
            match star_decomposition(g, d) {
                Ok(dec) => {
                    let k = dec.component_count();
                    if k >= 2 && m - d.len() < k {
                        out.push(InvariantFailure::ComponentDeficit { eop_set: d.to_vec(), components: k });
                    }
                    let covered = dec.components.iter().map(|c| c.edges.len()).sum::<usize>();
                    let stars = dec.components.iter().all(|c| is_induced_star(g, c.centre(), &c.leaves));
                    if !stars || covered != d.len() {
                        out.push(InvariantFailure::NotStars { eop_set: d.to_vec() });
                    }
                }
                Err(_) => out.push(InvariantFailure::NotStars { eop_set: d.to_vec() }),
            }
            ControlFlow::Continue(())
        });
    }

    let shapes = [Graph::path(4), Graph::complete(3)].map(|s| canonical_form(&s));
    for a in 0..m {
        for b in a + 1..m {
            let pairwise = have_common_edge(g, a, b).expect("ids are in range");
            if star_decomposition(g, &[a, b]).is_ok() == pairwise {
                out.push(InvariantFailure::PairDecomposition { first: a, second: b });
            }
            // e must be the middle edge when the three edges form a P4
            let by_shape = (0..m).filter(|&e| e != a && e != b).any(|e| {
                let (sub, verts, _) = g.edge_induced_subgraph(&[a, e, b]).expect("ids are in range");
                let local = |v: usize| verts.binary_search(&v).expect("endpoint is in the subgraph");
                let middle = g.edge(e).endpoints().iter().all(|&v| sub.degree(local(v)) == 2);
                middle && shapes.contains(&canonical_form(&sub))
            });
            if by_shape != pairwise {
                out.push(InvariantFailure::CommonEdgeShape { first: a, second: b });
            }
        }
    }

    if m >= 3 && rho + 3 == m {
        let allowed: Vec<Certificate> = figure_shapes().iter().map(canonical_form).collect();
        let _ = for_each_eop_set(g, rho, |d| {
            let rest = (0..m).filter(|e| !d.contains(e)).collect::<Vec<_>>();
            let (sub, _, _) = g.edge_induced_subgraph(&rest).expect("ids are in range");
            if !allowed.contains(&canonical_form(&sub)) {
                out.push(InvariantFailure::ComplementShape { eop_set: d.to_vec() });
            }
            ControlFlow::Continue(())
        });
    }
    out
}

pub(crate) struct GraphOutcome {
    pub class: &'static str,
    pub records: Vec<ScanRecord>,
    pub vacuous: Vec<(usize, [usize; 4])>,
}

fn instances(list: &[FamilyInstance]) -> String {
    if list.is_empty() {
        return "-".into();
    }
    list.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
}

pub(crate) fn evaluate(
    g: &Graph,
    options: &ScanOptions,
    catalogues: Option<&Catalogues>,
) -> Result<GraphOutcome, HarnessError> {
    let (rho, witness) = eop_number_exact(g);
    let subject = Subject { graph: g.clone(), graph6: graph6_of(g), connected: g.is_connected(), rho, witness };
    let m = g.size();
    let class = if !subject.connected || m == 0 {
        "skipped"
    } else {
        match ExtremalClass::from_rho(m, rho) {
            ExtremalClass::None => "other",
            c => c.tag(),
        }
    };
    let mut records = Vec::with_capacity(options.theorems.len());
    let mut vacuous = Vec::new();
    for &theorem in &options.theorems {
        let record = evaluate_one(&subject, theorem, options, catalogues, &mut vacuous)?;
        records.push(record);
    }
    Ok(GraphOutcome { class, records, vacuous })
}

struct Outcome {
    predicted: String,
    actual: String,
    verdict: ScanVerdict,
    witness: Option<String>,
}

fn skipped(reason: &str) -> Outcome {
    Outcome {
        predicted: "-".into(),
        actual: "-".into(),
        verdict: ScanVerdict::Skipped(reason.into()),
        witness: None,
    }
}

fn compare(predicted: bool, actual: bool, witness: impl FnOnce() -> String) -> Outcome {
    let verdict = if predicted == actual { ScanVerdict::Match } else { ScanVerdict::Mismatch };
    let witness = (verdict == ScanVerdict::Mismatch).then(witness);
    Outcome { predicted: predicted.to_string(), actual: actual.to_string(), verdict, witness }
}

fn evaluate_one(
    s: &Subject,
    theorem: Theorem,
    options: &ScanOptions,
    catalogues: Option<&Catalogues>,
    vacuous: &mut Vec<(usize, [usize; 4])>,
) -> Result<ScanRecord, HarnessError> {
    let g = &s.graph;
    let m = g.size();
    let rho = s.rho;
    let max_set = || format!("max-eop={}", edges(g, s.witness.members()));
    let outcome = if theorem == Theorem::Oracle {
        match eop_number_oracle(g, options.guard) {
            Ok(value) => {
                let verdict = if value == rho { ScanVerdict::Match } else { ScanVerdict::Mismatch };
                let witness = (verdict == ScanVerdict::Mismatch).then(max_set);
                Outcome { predicted: value.to_string(), actual: rho.to_string(), verdict, witness }
            }
            Err(_) => skipped("guard"),
        }
    } else if !s.connected {
        skipped("disconnected")
    } else {
        match theorem {
            Theorem::Oracle => unreachable!(),
            Theorem::Rho2 => compare(check_rho2(g)?, rho == 2, max_set),
            Theorem::Window(t) => {
                let report = condition_report(g, t)?;
                let mut counts = [0; 4];
                for (slot, v) in counts.iter_mut().zip(report.verdicts()) {
                    *slot = usize::from(v.is_vacuous());
                }
                vacuous.push((t, counts));
                let detail = || {
                    let verdicts = report
                        .verdicts()
                        .iter()
                        .enumerate()
                        .map(|(i, v)| format!("C{}:{v}", i + 1))
                        .collect::<Vec<_>>()
                        .join(";");
                    format!("{verdicts};{}", max_set())
                };
                compare(report.window(), (2..=t).contains(&rho), detail)
            }
            Theorem::Exact(t) => {
                if g.is_star() && m < t {
                    skipped("excluded-star")
                } else {
                    compare(predict_rho_equals_t(g, t)?, rho == t, max_set)
                }
            }
            Theorem::M1 if m < 3 => skipped("m<3"),
            Theorem::M1 => compare(g.is_once_subdivided_star(), rho + 1 == m, max_set),
            Theorem::M2 | Theorem::M3 | Theorem::Classes if m == 0 => skipped("edgeless"),
            Theorem::M2 => {
                let found = catalogues.expect("families loaded").selected.lookup(g);
                let a = found.iter().filter(|f| f.family().class() == ExtremalClass::RhoM2).cloned().collect::<Vec<_>>();
                compare(!a.is_empty(), rho + 2 == m, || format!("families={};{}", instances(&a), max_set()))
            }
            Theorem::M3 => family_class_check(s, catalogues.expect("families loaded")),
            Theorem::Classes => class_check(s, catalogues.expect("families loaded")),
            Theorem::Invariants => {
                let failures = invariant_failures(g);
                let verdict = if failures.is_empty() { ScanVerdict::Match } else { ScanVerdict::Mismatch };
                let actual = if failures.is_empty() { "hold" } else { "violated" };
                let witness = (!failures.is_empty())
                    .then(|| failures.iter().map(ToString::to_string).collect::<Vec<_>>().join(";"));
                Outcome { predicted: "hold".into(), actual: actual.into(), verdict, witness }
            }
        }
    };
    Ok(ScanRecord {
        graph: s.graph6.clone(),
        n: g.order(),
        m,
        rho,
        theorem,
        predicted: outcome.predicted,
        actual: outcome.actual,
        verdict: outcome.verdict,
        witness: outcome.witness,
    })
}

/// Membership in the R and S families against `rho = m - 3`. A
/// disagreement explained by an ambiguous family (its selected reading
/// claims the graph, or another reading would) is deferred.
fn family_class_check(s: &Subject, cats: &Catalogues) -> Outcome {
    let g = &s.graph;
    let found = cats.selected.lookup(g);
    let rs = found.iter().filter(|f| f.family().class() == ExtremalClass::RhoM3).cloned().collect::<Vec<_>>();
    let predicted = !rs.is_empty();
    let actual = s.rho + 3 == g.size();
    let mut out = compare(predicted, actual, || format!("families={};max-eop={}", instances(&rs), edges(g, s.witness.members())));
    if out.verdict == ScanVerdict::Mismatch {
        let strict = rs.iter().any(|f| !f.family().is_ambiguous());
        let alternatives = cats.alternatives.lookup(g);
        if predicted && !strict {
            out.verdict = ScanVerdict::Deferred(format!("selected {}", instances(&rs)));
        } else if !predicted && !alternatives.is_empty() {
            out.verdict = ScanVerdict::Deferred(format!("alternatives {}", instances(&alternatives)));
        }
    }
    out
}

fn structural_classes(g: &Graph, families: &[FamilyInstance]) -> Vec<ExtremalClass> {
    let mut out = Vec::new();
    if g.is_star() {
        out.push(ExtremalClass::RhoM);
    }
    if g.size() >= 3 && g.is_once_subdivided_star() {
        out.push(ExtremalClass::RhoM1);
    }
    for class in [ExtremalClass::RhoM2, ExtremalClass::RhoM3] {
        if families.iter().any(|f| f.family().class() == class) {
            out.push(class);
        }
    }
    out
}

/// Predicted class against the class of the exact `rho`, with at most one
/// class allowed to match.
fn class_check(s: &Subject, cats: &Catalogues) -> Outcome {
    let g = &s.graph;
    let actual = ExtremalClass::from_rho(g.size(), s.rho);
    let found = cats.selected.lookup(g);
    let matched = structural_classes(g, &found);
    let class = matched.first().copied().unwrap_or(ExtremalClass::None);
    let predicted = if matched.is_empty() {
        "none".to_string()
    } else {
        matched.iter().map(|c| c.tag()).collect::<Vec<_>>().join("+")
    };
    let witness = || format!("families={};max-eop={}", instances(&found), edges(g, s.witness.members()));
    let mut out = Outcome {
        predicted,
        actual: actual.tag().to_string(),
        verdict: ScanVerdict::Match,
        witness: None,
    };
    if class == actual && matched.len() <= 1 {
        return out;
    }
    out.witness = Some(witness());

    // Evidence from unambiguous families alone must agree with `actual`;
    // ambiguous ones (selected or alternative readings) may only add to it.
    let strict = found.iter().filter(|f| !f.family().is_ambiguous()).cloned().collect::<Vec<_>>();
    let strict_classes = structural_classes(g, &strict);
    let ambiguous = found
        .iter()
        .filter(|f| f.family().is_ambiguous())
        .cloned()
        .chain(cats.alternatives.lookup(g))
        .collect::<Vec<_>>();
    let consistent = strict_classes.iter().all(|&c| c == actual);
    let covered = strict_classes.contains(&actual)
        || (actual == ExtremalClass::None && strict_classes.is_empty())
        || ambiguous.iter().any(|f| f.family().class() == actual);
    out.verdict = if consistent && covered && !ambiguous.is_empty() {
        ScanVerdict::Deferred(instances(&ambiguous))
    } else {
        ScanVerdict::Mismatch
    };
    out
}
