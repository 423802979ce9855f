//! Corpus scans: every graph of a corpus is solved exactly and each
//! requested theorem's prediction is compared with the exact value.
//!
//! Reports are line oriented, one record per (graph, theorem), with the
//! canonical graph6 string first and graphs in certificate order, so two
//! runs over the same corpus produce identical bytes.

mod checks;
mod theorem;

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::eop::{EopSet, DEFAULT_EDGE_GUARD};
use crate::families::{Catalogue, Readings};
use crate::graph::{
    canonical_form, canonical_graph, enumerate_connected_graphs, parse_graph6, write_graph6, Graph,
    GraphError, MAX_ENUMERATION_ORDER,
};

pub use checks::{figure_shapes, invariant_failures, InvariantFailure};
pub use theorem::{parse_theorems, Theorem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("corpus record {index}: {source}")]
    Corpus { index: usize, source: GraphError },
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("{0}")]
    BadTarget(String),
    #[error("built-in corpus supports 1 <= max_n <= {max}, got {n}")]
    MaxOrder { n: usize, max: usize },
    #[error("could not build thread pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Condition(#[from] crate::conditions::ConditionError),
}

/// Connected graphs on `1..=max_n` vertices, one per isomorphism class.
pub fn builtin_corpus(max_n: usize) -> Result<Vec<Graph>, HarnessError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&max_n) {
        return Err(HarnessError::MaxOrder { n: max_n, max: MAX_ENUMERATION_ORDER });
    }
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_connected_graphs(n)?);
    }
    Ok(out)
}

/// Parses one graph6 record per line. Blank lines and lines starting with
/// `#` are skipped; `index` in errors is the 1-based line number.
pub fn read_corpus(text: &str) -> Result<Vec<Graph>, HarnessError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| parse_graph6(l.trim()).map_err(|source| HarnessError::Corpus { index: i + 1, source }))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ScanVerdict {
    Match,
    Mismatch,
    Skipped(String),
    /// The discrepancy involves only families with more than one reading.
    Deferred(String),
}

impl fmt::Display for ScanVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScanVerdict::Match => f.write_str("match"),
            ScanVerdict::Mismatch => f.write_str("mismatch"),
            ScanVerdict::Skipped(why) => write!(f, "skipped({why})"),
            ScanVerdict::Deferred(why) => write!(f, "deferred({why})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRecord {
    /// Canonical graph6.
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub rho: usize,
    pub theorem: Theorem,
    pub predicted: String,
    pub actual: String,
    pub verdict: ScanVerdict,
    pub witness: Option<String>,
}

impl fmt::Display for ScanRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\tn={}\tm={}\trho={}\ttheorem={}\tpredicted={}\tactual={}\tverdict={}",
            self.graph, self.n, self.m, self.rho, self.theorem, self.predicted, self.actual, self.verdict
        )?;
        if let Some(w) = &self.witness {
            write!(f, "\twitness={w}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TheoremTally {
    pub matches: usize,
    pub mismatches: usize,
    pub deferred: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanSummary {
    pub corpus_size: usize,
    /// Keyed by class tag (`rho_m` .. `rho_m3`, `other`) plus `skipped` for
    /// disconnected or edgeless graphs; sums to `corpus_size`.
    pub classes: BTreeMap<String, usize>,
    pub theorems: Vec<(Theorem, TheoremTally)>,
    /// Vacuous verdicts of conditions 1..4 per window target.
    pub vacuous: BTreeMap<usize, [usize; 4]>,
    pub wall_clock: Duration,
}

impl ScanSummary {
    pub fn mismatches(&self) -> usize {
        self.theorems.iter().map(|(_, t)| t.mismatches).sum()
    }

    pub fn tally(&self, theorem: Theorem) -> Option<TheoremTally> {
        self.theorems.iter().find(|(t, _)| *t == theorem).map(|&(_, tally)| tally)
    }

    /// Summary lines; the wall clock is left out so reports stay
    /// reproducible.
    pub fn lines(&self) -> Vec<String> {
        let mut out = vec![format!("summary\tcorpus={}", self.corpus_size)];
        let classes = self.classes.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>();
        out.push(format!("summary\tclasses\t{}", classes.join("\t")));
        for (t, tally) in &self.theorems {
            out.push(format!(
                "summary\ttheorem={t}\tmatch={}\tmismatch={}\tdeferred={}\tskipped={}",
                tally.matches, tally.mismatches, tally.deferred, tally.skipped
            ));
        }
        for (t, v) in &self.vacuous {
            out.push(format!("summary\tvacuous\tt={t}\tC1={}\tC2={}\tC3={}\tC4={}", v[0], v[1], v[2], v[3]));
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub theorems: Vec<Theorem>,
    pub readings: Readings,
    /// Worker threads; 0 means one per core.
    pub jobs: usize,
    /// Edge cap for the brute-force oracle.
    pub guard: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            theorems: Theorem::defaults(),
            readings: Readings::default(),
            jobs: 0,
            guard: DEFAULT_EDGE_GUARD,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ScanReport {
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
}

impl ScanReport {
    /// Every record followed by the summary lines.
    pub fn to_records(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let _ = writeln!(out, "{r}");
        }
        for l in self.summary.lines() {
            let _ = writeln!(out, "{l}");
        }
        out
    }

    /// Summary plus every record that is not a plain match.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let s = &self.summary;
        let _ = writeln!(out, "corpus: {} graphs", s.corpus_size);
        let classes = s.classes.iter().map(|(k, v)| format!("{k} {v}")).collect::<Vec<_>>();
        let _ = writeln!(out, "classes: {}", classes.join(", "));
        for (t, tally) in &s.theorems {
            let _ = writeln!(
                out,
                "{:<14} match {:>5}  mismatch {:>3}  deferred {:>3}  skipped {:>4}",
                t.to_string(),
                tally.matches,
                tally.mismatches,
                tally.deferred,
                tally.skipped
            );
        }
        for (t, v) in &s.vacuous {
            let _ = writeln!(out, "vacuous at t={t}: C1 {} C2 {} C3 {} C4 {}", v[0], v[1], v[2], v[3]);
        }
        let notable = self.records.iter().filter(|r| !matches!(r.verdict, ScanVerdict::Match | ScanVerdict::Skipped(_)));
        for r in notable {
            let _ = writeln!(out, "{r}");
        }
        out
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &ScanRecord> {
        self.records.iter().filter(|r| r.verdict == ScanVerdict::Mismatch)
    }

    pub fn deferred(&self) -> impl Iterator<Item = &ScanRecord> {
        self.records.iter().filter(|r| matches!(r.verdict, ScanVerdict::Deferred(_)))
    }
}

/// Per-graph context shared by every theorem.
pub(crate) struct Subject {
    pub graph: Graph,
    pub graph6: String,
    pub connected: bool,
    pub rho: usize,
    pub witness: EopSet,
}

pub(crate) struct Catalogues {
    pub selected: Catalogue,
    pub alternatives: Catalogue,
}

/// Scans `corpus`. Graphs are canonically relabeled and sorted by
/// certificate; records follow that order whatever `jobs` is.
pub fn scan(corpus: &[Graph], options: &ScanOptions) -> Result<ScanReport, HarnessError> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(|e| HarnessError::Pool(e.to_string()))?;

    let mut graphs = pool.install(|| {
        corpus
            .par_iter()
            .map(|g| (canonical_form(g), canonical_graph(g)))
            .collect::<Vec<_>>()
    });
    graphs.sort_by(|a, b| a.0.cmp(&b.0));

    let needs_families = options.theorems.iter().any(|t| t.needs_families());
    let max_order = graphs.iter().map(|(_, g)| g.order()).max().unwrap_or(0);
    let catalogues = needs_families.then(|| Catalogues {
        selected: Catalogue::new(max_order, &options.readings),
        alternatives: Catalogue::alternatives(max_order, &options.readings),
    });

    let per_graph = pool.install(|| {
        graphs
            .par_iter()
            .map(|(_, g)| checks::evaluate(g, options, catalogues.as_ref()))
            .collect::<Result<Vec<_>, _>>()
    })?;

    let mut records = Vec::new();
    let mut classes: BTreeMap<String, usize> =
        ["rho_m", "rho_m1", "rho_m2", "rho_m3", "other", "skipped"].iter().map(|k| (k.to_string(), 0)).collect();
    let mut tallies: Vec<(Theorem, TheoremTally)> =
        options.theorems.iter().map(|&t| (t, TheoremTally::default())).collect();
    let mut vacuous: BTreeMap<usize, [usize; 4]> = BTreeMap::new();
    for outcome in per_graph {
        *classes.entry(outcome.class.to_string()).or_default() += 1;
        for (t, v) in outcome.vacuous {
            let slot = vacuous.entry(t).or_default();
            for i in 0..4 {
                slot[i] += v[i];
            }
        }
        for r in outcome.records {
            let tally = &mut tallies.iter_mut().find(|(t, _)| *t == r.theorem).expect("requested theorem").1;
            match r.verdict {
                ScanVerdict::Match => tally.matches += 1,
                ScanVerdict::Mismatch => tally.mismatches += 1,
                ScanVerdict::Deferred(_) => tally.deferred += 1,
                ScanVerdict::Skipped(_) => tally.skipped += 1,
            }
            records.push(r);
        }
    }
    let summary = ScanSummary {
        corpus_size: graphs.len(),
        classes,
        theorems: tallies,
        vacuous,
        wall_clock: start.elapsed(),
    };
    Ok(ScanReport { records, summary })
}

pub(crate) fn graph6_of(g: &Graph) -> String {
    write_graph6(g).expect("corpus graphs fit graph6")
}
