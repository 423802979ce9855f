//! Sweeps a family over a parameter box and compares the exact `rho` of
//! every member with `m - 2` or `m - 3`. Ambiguous families are swept once
//! per candidate reading.

use std::fmt;

use rayon::prelude::*;

use super::{build, FamilyError, FamilyId, FamilyInstance, Reading, Readings};
use crate::eop::eop_number_exact;
use crate::graph::{canonical_graph, write_graph6};

/// Largest per-parameter bound an audit accepts.
pub const MAX_AUDIT_BOUND: usize = 8;

/// Every parameter ranges over `min..=max`, `min` being its family bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamBox {
    pub max: usize,
}

impl Default for ParamBox {
    fn default() -> Self {
        ParamBox { max: 4 }
    }
}

impl ParamBox {
    pub fn new(max: usize) -> Result<Self, FamilyError> {
        if max > MAX_AUDIT_BOUND {
            return Err(FamilyError::BoxTooLarge { max, limit: MAX_AUDIT_BOUND });
        }
        Ok(ParamBox { max })
    }

    /// Parameter points of `family` in lexicographic order.
    pub fn points(&self, family: FamilyId) -> Result<Vec<Vec<usize>>, FamilyError> {
        let specs = family.params();
        if specs.iter().any(|s| s.min > self.max) {
            return Err(FamilyError::EmptyBox { family, max: self.max });
        }
        let mut points = vec![Vec::new()];
        for spec in specs {
            points = points
                .into_iter()
                .flat_map(|prefix| {
                    (spec.min..=self.max).map(move |v| {
                        let mut q = prefix.clone();
                        q.push(v);
                        q
                    })
                })
                .collect();
        }
        Ok(points)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditPoint {
    pub instance: FamilyInstance,
    /// `None` when the reading's site does not exist at this point.
    pub outcome: Option<PointOutcome>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointOutcome {
    /// Canonical graph6 of the member.
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub rho: usize,
    pub expected: usize,
}

impl PointOutcome {
    pub fn pass(&self) -> bool {
        self.rho == self.expected
    }
}

impl AuditPoint {
    pub fn pass(&self) -> Option<bool> {
        self.outcome.as_ref().map(PointOutcome::pass)
    }

    /// One line in the scan record layout, canonical graph6 first.
    pub fn record(&self) -> String {
        let f = self.instance.family();
        let reading = self.instance.reading().map_or(String::from("-"), |r| r.to_string());
        let params = self.instance.to_string();
        let params = params.split_once(' ').map_or("", |(_, rest)| rest).replace(' ', ",");
        match &self.outcome {
            Some(o) => format!(
                "{}\tn={}\tm={}\trho={}\ttheorem=audit:{f}\treading={reading}\tparams={params}\tpredicted=rho={}\tverdict={}",
                o.graph6,
                o.n,
                o.m,
                o.rho,
                o.expected,
                if o.pass() { "match" } else { "mismatch" }
            ),
            None => format!(
                "-\ttheorem=audit:{f}\treading={reading}\tparams={params}\tverdict=skipped(site-missing)"
            ),
        }
    }
}

/// One reading of an ambiguous family swept over the box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSummary {
    pub reading: Reading,
    pub selected: bool,
    pub points: Vec<AuditPoint>,
}

impl CandidateSummary {
    pub fn evaluated(&self) -> usize {
        self.points.iter().filter(|p| p.outcome.is_some()).count()
    }

    pub fn failures(&self) -> usize {
        self.points.iter().filter(|p| p.pass() == Some(false)).count()
    }

    /// Every point where the reading applies has the expected `rho`, and
    /// it applies somewhere.
    pub fn passes(&self) -> bool {
        self.evaluated() > 0 && self.failures() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub family: FamilyId,
    pub bounds: ParamBox,
    /// The construction selected by the readings passed to the audit.
    pub points: Vec<AuditPoint>,
    /// Every candidate reading; empty for unambiguous families.
    pub candidates: Vec<CandidateSummary>,
}

impl AuditReport {
    pub fn failures(&self) -> impl Iterator<Item = &AuditPoint> {
        self.points.iter().filter(|p| p.pass() == Some(false))
    }

    pub fn all_pass(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn passing_candidates(&self) -> impl Iterator<Item = &CandidateSummary> {
        self.candidates.iter().filter(|c| c.passes())
    }

    /// Record lines: the selected construction first, then each candidate.
    pub fn records(&self) -> Vec<String> {
        let mut out = self.points.iter().map(AuditPoint::record).collect::<Vec<_>>();
        for c in &self.candidates {
            out.extend(c.points.iter().map(|p| format!("{}\tcandidate", p.record())));
        }
        out
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let deficit = self.family.deficit();
        writeln!(
            f,
            "audit {} (every parameter <= {}), expected rho = m-{deficit}",
            self.family, self.bounds.max
        )?;
        for p in &self.points {
            match &p.outcome {
                Some(o) => writeln!(
                    f,
                    "  {:<28} n={:<2} m={:<2} rho={:<2} {}",
                    p.instance.to_string(),
                    o.n,
                    o.m,
                    o.rho,
                    if o.pass() { "pass" } else { "FAIL" }
                )?,
                None => writeln!(f, "  {:<28} site missing", p.instance.to_string())?,
            }
        }
        let failed = self.failures().count();
        writeln!(f, "  {} points, {failed} failed", self.points.len())?;
        if !self.candidates.is_empty() {
            writeln!(f, "candidate readings:")?;
            for c in &self.candidates {
                writeln!(
                    f,
                    "  {:<18}{} {}/{} pass{}",
                    c.reading.to_string(),
                    if c.selected { " (selected)" } else { "" },
                    c.evaluated() - c.failures(),
                    c.evaluated(),
                    if c.passes() { "  <- consistent" } else { "" }
                )?;
            }
        }
        Ok(())
    }
}

fn evaluate(family: FamilyId, params: &[usize], reading: Option<Reading>) -> AuditPoint {
    let instance = FamilyInstance { family, params: params.to_vec(), reading };
    let outcome = build::construct(family, params, reading).map(|g| {
        let rho = eop_number_exact(&g).0;
        PointOutcome {
            graph6: write_graph6(&canonical_graph(&g)).expect("audit graphs fit graph6"),
            n: g.order(),
            m: g.size(),
            rho,
            expected: g.size() - family.deficit(),
        }
    });
    AuditPoint { instance, outcome }
}

fn sweep(family: FamilyId, points: &[Vec<usize>], reading: Option<Reading>) -> Vec<AuditPoint> {
    points.par_iter().map(|p| evaluate(family, p, reading)).collect()
}

/// Sweeps `family` over `bounds`. The selected construction follows
/// `readings`; ambiguous families are additionally swept under every
/// candidate reading.
pub fn audit_family(family: FamilyId, bounds: ParamBox, readings: &Readings) -> Result<AuditReport, FamilyError> {
    let bounds = ParamBox::new(bounds.max)?;
    let points = bounds.points(family)?;
    let selected = readings.reading(family);
    let candidates = family
        .candidate_readings()
        .into_iter()
        .map(|reading| CandidateSummary {
            reading,
            selected: Some(reading) == selected,
            points: sweep(family, &points, Some(reading)),
        })
        .collect();
    Ok(AuditReport { family, bounds, points: sweep(family, &points, selected), candidates })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sound_families_pass() {
        let r1 = audit_family(FamilyId::R1, ParamBox::new(6).unwrap(), &Readings::default()).unwrap();
        assert_eq!(r1.points.len(), 3);
        assert!(r1.all_pass());
        let a4 = audit_family(FamilyId::A4, ParamBox::default(), &Readings::default()).unwrap();
        assert_eq!(a4.points.len(), 5);
        assert!(a4.all_pass());
        assert!(a4.candidates.is_empty());
    }

    #[test]
    fn literal_r11_fails_and_candidates_are_reported() {
        let report = audit_family(FamilyId::R11, ParamBox::default(), &Readings::default()).unwrap();
        assert_eq!(report.failures().count(), report.points.len());
        assert_eq!(report.candidates.len(), 6);
        assert!(report.records().iter().any(|r| r.contains("verdict=mismatch")));
    }

    #[test]
    fn box_limits() {
        assert!(ParamBox::new(MAX_AUDIT_BOUND + 1).is_err());
        assert!(matches!(
            audit_family(FamilyId::R1, ParamBox { max: 3 }, &Readings::default()),
            Err(FamilyError::EmptyBox { .. })
        ));
    }
}
