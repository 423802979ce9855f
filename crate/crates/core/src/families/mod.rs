//! The extremal families: generators, recognition by isomorphism, the
//! extremal-class predictor and the construction audit.
//!
//! Families `A1..A7` have `rho = m - 2`; `R1..R14` and `S1..S15` have
//! `rho = m - 3`. Seven definitions (`R11`, `R12`, `S2`, `S3`, `S6`, `S7`,
//! `S8`) admit more than one reading; those take a [`Reading`] naming the
//! attachment site and the gadget hung there. [`FamilyInstance::new`] uses
//! the shipped reading and [`Readings`] selects others explicitly.

mod audit;
mod build;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{canonical_form, Certificate, Graph, GraphError};

pub use audit::{
    audit_family, AuditPoint, AuditReport, CandidateSummary, ParamBox, PointOutcome, MAX_AUDIT_BOUND,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("{family} requires {param} ≥ {min}")]
    Bound { family: FamilyId, param: &'static str, min: usize },
    #[error("{family} is missing parameter {param}")]
    MissingParam { family: FamilyId, param: &'static str },
    #[error("{family} has no parameter `{param}`")]
    UnknownParam { family: FamilyId, param: String },
    #[error("malformed parameter `{0}`, expected name=value")]
    BadAssignment(String),
    #[error("{family} has a single reading")]
    NotAmbiguous { family: FamilyId },
    #[error("{family} has no site `{site}`")]
    UnknownSite { family: FamilyId, site: String },
    #[error("malformed reading `{0}`, expected FAMILY=site:pendant or FAMILY=site:path2")]
    BadReading(String),
    #[error("site {site} does not exist for {instance}")]
    MissingSite { instance: String, site: &'static str },
    #[error("graph has no edges")]
    NoEdges,
    #[error("parameter bound {max} is outside 0..={limit}")]
    BoxTooLarge { max: usize, limit: usize },
    #[error("{family} has no parameter point with every value ≤ {max}")]
    EmptyBox { family: FamilyId, max: usize },
}

macro_rules! families {
    ($($id:ident),* $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum FamilyId { $($id),* }

        impl FamilyId {
            pub const ALL: &'static [FamilyId] = &[$(FamilyId::$id),*];

            pub fn name(self) -> &'static str {
                match self { $(FamilyId::$id => stringify!($id)),* }
            }
        }
    };
}

families!(
    A1, A2, A3, A4, A5, A6, A7, R1, R2, R3, R4, R5, R6, R7, R8, R9, R10, R11, R12, R13, R14, S1,
    S2, S3, S4, S5, S6, S7, S8, S9, S10, S11, S12, S13, S14, S15,
);

/// A named parameter and its least admissible value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub min: usize,
}

macro_rules! p {
    ($name:literal, $min:literal) => {
        ParamSpec { name: $name, min: $min }
    };
}

const PATH_SITES_6: &[&str] = &["p1", "p2", "p3", "p4", "p5", "p6"];
const PATH_SITES_7: &[&str] = &["p1", "p2", "p3", "p4", "p5", "p6", "p7"];
const PATH_SITES_8: &[&str] = &["p1", "p2", "p3", "p4", "p5", "p6", "p7", "p8"];

impl FamilyId {
    pub fn params(self) -> &'static [ParamSpec] {
        use FamilyId::*;
        match self {
            A1 | A2 | A3 | S2 | S3 | S4 | S5 => &[p!("r1", 0), p!("r2", 0)],
            A4 | A5 | R9 | R10 | R11 | R12 | R14 => &[p!("t", 0)],
            A6 | A7 | R2 | R3 | R4 => &[p!("s", 3)],
            R1 | R6 => &[p!("s", 4)],
            R5 => &[p!("s", 2)],
            R7 | R8 | R13 => &[p!("t", 1)],
            S1 => &[p!("r1", 1), p!("r2", 1)],
            S6 | S7 | S8 => &[p!("r", 0), p!("t", 1)],
            S9 => &[p!("t1", 0)],
            S10 => &[p!("t1", 0), p!("t2", 0)],
            S11 => &[p!("t", 0), p!("r", 3)],
            S12 | S13 | S14 | S15 => &[p!("r1", 0), p!("r2", 0), p!("r3", 0)],
        }
    }

    pub fn class(self) -> ExtremalClass {
        if self.name().starts_with('A') {
            ExtremalClass::RhoM2
        } else {
            ExtremalClass::RhoM3
        }
    }

    /// `m - rho` for every member.
    pub fn deficit(self) -> usize {
        if self.class() == ExtremalClass::RhoM2 {
            2
        } else {
            3
        }
    }

    pub fn is_ambiguous(self) -> bool {
        !self.sites().is_empty()
    }

    /// Attachment sites a reading may name; empty for unambiguous families.
    pub fn sites(self) -> &'static [&'static str] {
        use FamilyId::*;
        match self {
            R11 => &["apex", "base", "apex-leaf"],
            R12 => &["apex", "side", "opposite", "apex-leaf"],
            S2 | S6 => PATH_SITES_6,
            S3 | S7 => PATH_SITES_7,
            S8 => PATH_SITES_8,
            _ => &[],
        }
    }

    /// The reading the generators use unless told otherwise.
    pub fn shipped_reading(self) -> Option<Reading> {
        use FamilyId::*;
        let site = match self {
            R11 | R12 => "apex",
            S2 | S3 => "p3",
            S6 => "p4",
            S7 => "p5",
            S8 => "p6",
            _ => return None,
        };
        Some(Reading { site, gadget: Gadget::Pendant })
    }

    /// Every reading the audit considers.
    pub fn candidate_readings(self) -> Vec<Reading> {
        self.sites()
            .iter()
            .flat_map(|&site| [Gadget::Pendant, Gadget::Path2].map(|gadget| Reading { site, gadget }))
            .collect()
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::ALL
            .iter()
            .copied()
            .find(|id| id.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

/// What an ambiguous family hangs at its site.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gadget {
    /// One new edge.
    Pendant,
    /// A new path of two edges.
    Path2,
}

impl fmt::Display for Gadget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gadget::Pendant => "pendant",
            Gadget::Path2 => "path2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Reading {
    pub site: &'static str,
    pub gadget: Gadget,
}

impl Reading {
    /// Parses `site:gadget` against the sites of `family`.
    pub fn parse(family: FamilyId, text: &str) -> Result<Self, FamilyError> {
        let bad = || FamilyError::BadReading(format!("{family}={text}"));
        let (site, gadget) = text.split_once(':').ok_or_else(bad)?;
        if !family.is_ambiguous() {
            return Err(FamilyError::NotAmbiguous { family });
        }
        let site = family
            .sites()
            .iter()
            .copied()
            .find(|s| *s == site.trim())
            .ok_or_else(|| FamilyError::UnknownSite { family, site: site.to_string() })?;
        let gadget = match gadget.trim() {
            "pendant" => Gadget::Pendant,
            "path2" => Gadget::Path2,
            _ => return Err(bad()),
        };
        Ok(Reading { site, gadget })
    }
}

impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.site, self.gadget)
    }
}

/// Reading overrides for ambiguous families. The default overrides nothing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Readings {
    overrides: BTreeMap<FamilyId, Reading>,
}

impl Readings {
    pub fn set(&mut self, family: FamilyId, reading: Reading) -> Result<(), FamilyError> {
        if !family.is_ambiguous() {
            return Err(FamilyError::NotAmbiguous { family });
        }
        if !family.sites().contains(&reading.site) {
            return Err(FamilyError::UnknownSite { family, site: reading.site.to_string() });
        }
        self.overrides.insert(family, reading);
        Ok(())
    }

    /// Applies one `FAMILY=site:gadget` override.
    pub fn apply(&mut self, text: &str) -> Result<(), FamilyError> {
        let (family, reading) =
            text.split_once('=').ok_or_else(|| FamilyError::BadReading(text.to_string()))?;
        let family = family.parse::<FamilyId>()?;
        let reading = Reading::parse(family, reading)?;
        self.set(family, reading)
    }

    pub fn reading(&self, family: FamilyId) -> Option<Reading> {
        self.overrides.get(&family).copied().or_else(|| family.shipped_reading())
    }

    pub fn overrides(&self) -> impl Iterator<Item = (FamilyId, Reading)> + '_ {
        self.overrides.iter().map(|(&f, &r)| (f, r))
    }
}

/// A family member: family, parameter values in declaration order and, for
/// ambiguous families, the reading it is built with.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyInstance {
    family: FamilyId,
    params: Vec<usize>,
    reading: Option<Reading>,
}

impl FamilyInstance {
    /// Checks arity and bounds; ambiguous families get their shipped reading.
    pub fn new(family: FamilyId, params: &[usize]) -> Result<Self, FamilyError> {
        let specs = family.params();
        if params.len() < specs.len() {
            return Err(FamilyError::MissingParam { family, param: specs[params.len()].name });
        }
        if params.len() > specs.len() {
            return Err(FamilyError::UnknownParam { family, param: format!("#{}", params.len()) });
        }
        for (spec, &value) in specs.iter().zip(params) {
            if value < spec.min {
                return Err(FamilyError::Bound { family, param: spec.name, min: spec.min });
            }
        }
        Ok(FamilyInstance { family, params: params.to_vec(), reading: family.shipped_reading() })
    }

    /// Builds from `name=value` assignments. A bare `r=k` (or `t=k`) sets
    /// every parameter `r1, r2, ...` (or `t1, t2`) the family has.
    pub fn from_assignments<S: AsRef<str>>(family: FamilyId, assignments: &[S]) -> Result<Self, FamilyError> {
        let specs = family.params();
        let mut values: Vec<Option<usize>> = vec![None; specs.len()];
        for a in assignments {
            let a = a.as_ref();
            let (name, value) = a.split_once('=').ok_or_else(|| FamilyError::BadAssignment(a.to_string()))?;
            let (name, value) = (name.trim(), value.trim());
            let value = value.parse::<usize>().map_err(|_| FamilyError::BadAssignment(a.to_string()))?;
            let exact = specs.iter().position(|s| s.name == name);
            let targets: Vec<usize> = match exact {
                Some(i) => vec![i],
                None => (0..specs.len())
                    .filter(|&i| {
                        let spec = specs[i].name;
                        spec.len() > name.len()
                            && spec.starts_with(name)
                            && spec[name.len()..].bytes().all(|b| b.is_ascii_digit())
                    })
                    .collect(),
            };
            if targets.is_empty() {
                return Err(FamilyError::UnknownParam { family, param: name.to_string() });
            }
            for i in targets {
                values[i] = Some(value);
            }
        }
        let mut params = Vec::with_capacity(specs.len());
        for (spec, value) in specs.iter().zip(values) {
            params.push(value.ok_or(FamilyError::MissingParam { family, param: spec.name })?);
        }
        FamilyInstance::new(family, &params)
    }

    pub fn with_reading(mut self, reading: Reading) -> Result<Self, FamilyError> {
        let mut r = Readings::default();
        r.set(self.family, reading)?;
        self.reading = Some(reading);
        Ok(self)
    }

    pub fn family(&self) -> FamilyId {
        self.family
    }

    pub fn params(&self) -> &[usize] {
        &self.params
    }

    pub fn param(&self, name: &str) -> Option<usize> {
        let i = self.family.params().iter().position(|s| s.name == name)?;
        Some(self.params[i])
    }

    pub fn reading(&self) -> Option<Reading> {
        self.reading
    }

    /// True unless an ambiguous family is built with a non-shipped reading.
    pub fn uses_shipped_reading(&self) -> bool {
        self.reading == self.family.shipped_reading()
    }

    pub fn generate(&self) -> Result<Graph, FamilyError> {
        build::construct(self.family, &self.params, self.reading).ok_or_else(|| {
            FamilyError::MissingSite {
                instance: self.to_string(),
                site: self.reading.map_or("", |r| r.site),
            }
        })
    }
}

impl fmt::Display for FamilyInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        if let (false, Some(r)) = (self.uses_shipped_reading(), self.reading) {
            write!(f, "[{r}]")?;
        }
        for (spec, v) in self.family.params().iter().zip(&self.params) {
            write!(f, " {}={v}", spec.name)?;
        }
        Ok(())
    }
}

/// Builds family `id` with positional `params` and the shipped reading.
pub fn generate_family(id: FamilyId, params: &[usize]) -> Result<Graph, FamilyError> {
    FamilyInstance::new(id, params)?.generate()
}

/// Calls `visit` for every instance of `family` (under `reading`, for
/// ambiguous families) whose order is at most `max_order`, in
/// lexicographic parameter order. Each parameter adds vertices, so the
/// walk stops along a coordinate once the order bound is exceeded.
pub fn for_each_instance(
    family: FamilyId,
    reading: Option<Reading>,
    max_order: usize,
    mut visit: impl FnMut(&FamilyInstance, &Graph),
) {
    let specs = family.params();
    let mut params = specs.iter().map(|s| s.min).collect::<Vec<_>>();
    walk(family, reading, max_order, 0, &mut params, &mut visit);
}

fn walk(
    family: FamilyId,
    reading: Option<Reading>,
    max_order: usize,
    depth: usize,
    params: &mut Vec<usize>,
    visit: &mut impl FnMut(&FamilyInstance, &Graph),
) {
    let specs = family.params();
    if depth == specs.len() {
        let inst = FamilyInstance { family, params: params.clone(), reading };
        if let Some(g) = build::construct(family, params, reading) {
            if g.order() <= max_order {
                visit(&inst, &g);
            }
        }
        return;
    }
    let min = specs[depth].min;
    params[depth] = min;
    loop {
        for (p, s) in params[depth + 1..].iter_mut().zip(&specs[depth + 1..]) {
            *p = s.min;
        }
        // order with the remaining coordinates at their minimum; a missing
        // site at the minimum may appear at larger values, so keep going
        let smallest = smallest_order(family, params, reading);
        if smallest > max_order {
            break;
        }
        walk(family, reading, max_order, depth + 1, params, visit);
        params[depth] += 1;
    }
}

/// Order of the instance at `params`, ignoring a missing site (the order
/// grows with every parameter whether or not the site exists).
fn smallest_order(family: FamilyId, params: &[usize], reading: Option<Reading>) -> usize {
    match build::construct(family, params, reading) {
        Some(g) => g.order(),
        None => build::construct(family, params, family.shipped_reading())
            .map_or(0, |g| g.order()),
    }
}

/// Every instance of every family, under `readings`, isomorphic to `g`.
pub fn recognize_families_with(g: &Graph, readings: &Readings) -> Vec<FamilyInstance> {
    let (n, m) = (g.order(), g.size());
    let degrees = g.degree_sequence();
    let mut cert: Option<Certificate> = None;
    let mut matches = Vec::new();
    for &family in FamilyId::ALL {
        for_each_instance(family, readings.reading(family), n, |inst, h| {
            if h.order() != n || h.size() != m || h.degree_sequence() != degrees {
                return;
            }
            let target = cert.get_or_insert_with(|| canonical_form(g));
            if canonical_form(h) == *target {
                matches.push(inst.clone());
            }
        });
    }
    matches
}

/// [`recognize_families_with`] under the shipped readings.
pub fn recognize_families(g: &Graph) -> Vec<FamilyInstance> {
    recognize_families_with(g, &Readings::default())
}

/// Extremal class tags, from `rho = m` down to `rho = m - 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtremalClass {
    RhoM,
    RhoM1,
    RhoM2,
    RhoM3,
    None,
}

impl ExtremalClass {
    /// The class a graph with `m` edges and EOP number `rho` belongs to.
    pub fn from_rho(m: usize, rho: usize) -> Self {
        match m.checked_sub(rho) {
            Some(0) => ExtremalClass::RhoM,
            Some(1) => ExtremalClass::RhoM1,
            Some(2) => ExtremalClass::RhoM2,
            Some(3) => ExtremalClass::RhoM3,
            _ => ExtremalClass::None,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            ExtremalClass::RhoM => "rho_m",
            ExtremalClass::RhoM1 => "rho_m1",
            ExtremalClass::RhoM2 => "rho_m2",
            ExtremalClass::RhoM3 => "rho_m3",
            ExtremalClass::None => "none",
        }
    }
}

impl fmt::Display for ExtremalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalPrediction {
    /// The first matching class in the order `rho_m, rho_m1, rho_m2, rho_m3`.
    pub class: ExtremalClass,
    /// Every class that matched; more than one is a disjointness failure.
    pub matched: Vec<ExtremalClass>,
    /// Family members isomorphic to the graph.
    pub families: Vec<FamilyInstance>,
}

fn check_predictable(g: &Graph) -> Result<(), FamilyError> {
    if g.size() == 0 {
        return Err(FamilyError::NoEdges);
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    Ok(())
}

fn prediction(g: &Graph, families: Vec<FamilyInstance>) -> ExtremalPrediction {
    let mut matched = Vec::new();
    if g.is_star() {
        matched.push(ExtremalClass::RhoM);
    }
    if g.size() >= 3 && g.is_once_subdivided_star() {
        matched.push(ExtremalClass::RhoM1);
    }
    for class in [ExtremalClass::RhoM2, ExtremalClass::RhoM3] {
        if families.iter().any(|f| f.family().class() == class) {
            matched.push(class);
        }
    }
    let class = matched.first().copied().unwrap_or(ExtremalClass::None);
    ExtremalPrediction { class, matched, families }
}

/// Predicts the extremal class of a connected graph with at least one edge
/// from its structure alone, under `readings`.
pub fn predict_extremal_class_with(g: &Graph, readings: &Readings) -> Result<ExtremalPrediction, FamilyError> {
    check_predictable(g)?;
    Ok(prediction(g, recognize_families_with(g, readings)))
}

pub fn predict_extremal_class(g: &Graph) -> Result<ExtremalPrediction, FamilyError> {
    predict_extremal_class_with(g, &Readings::default())
}

/// Every family instance up to a fixed order, indexed by canonical form.
/// Built once and reused when many graphs are classified.
#[derive(Debug, Clone)]
pub struct Catalogue {
    max_order: usize,
    by_form: HashMap<Certificate, Vec<FamilyInstance>>,
}

impl Catalogue {
    /// All instances of order at most `max_order` under `readings`.
    pub fn new(max_order: usize, readings: &Readings) -> Self {
        let mut cat = Catalogue { max_order, by_form: HashMap::new() };
        for &family in FamilyId::ALL {
            cat.add(family, readings.reading(family));
        }
        cat
    }

    /// Instances of ambiguous families under every candidate reading other
    /// than the one `readings` selects.
    pub fn alternatives(max_order: usize, readings: &Readings) -> Self {
        let mut cat = Catalogue { max_order, by_form: HashMap::new() };
        for &family in FamilyId::ALL {
            for reading in family.candidate_readings() {
                if Some(reading) != readings.reading(family) {
                    cat.add(family, Some(reading));
                }
            }
        }
        cat
    }

    fn add(&mut self, family: FamilyId, reading: Option<Reading>) {
        let by_form = &mut self.by_form;
        for_each_instance(family, reading, self.max_order, |inst, g| {
            by_form.entry(canonical_form(g)).or_default().push(inst.clone());
        });
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// Instances isomorphic to `g`; `g` must not exceed the catalogue order.
    pub fn lookup(&self, g: &Graph) -> Vec<FamilyInstance> {
        assert!(g.order() <= self.max_order, "graph order exceeds the catalogue");
        self.by_form.get(&canonical_form(g)).cloned().unwrap_or_default()
    }

    pub fn predict(&self, g: &Graph) -> Result<ExtremalPrediction, FamilyError> {
        check_predictable(g)?;
        Ok(prediction(g, self.lookup(g)))
    }

    pub fn len(&self) -> usize {
        self.by_form.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.by_form.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eop::eop_number_exact;
    use crate::graph::are_isomorphic;

    fn rho(g: &Graph) -> usize {
        eop_number_exact(g).0
    }

    #[test]
    fn names_round_trip() {
        assert_eq!(FamilyId::ALL.len(), 36);
        for &id in FamilyId::ALL {
            assert_eq!(id.name().parse::<FamilyId>(), Ok(id));
        }
        assert!("R15".parse::<FamilyId>().is_err());
    }

    #[test]
    fn spot_values() {
        let c5 = generate_family(FamilyId::R14, &[0]).unwrap();
        assert!(are_isomorphic(&c5, &Graph::cycle(5)));
        assert_eq!(rho(&c5), 2);

        let r1 = generate_family(FamilyId::R1, &[4]).unwrap();
        assert_eq!((r1.order(), r1.size()), (8, 7));
        assert!(r1.is_tree());
        assert_eq!(rho(&r1), 4);

        let s12 = generate_family(FamilyId::S12, &[0, 0, 0]).unwrap();
        assert_eq!(s12.size(), 6);
        assert_eq!(rho(&s12), 3);

        let a4 = generate_family(FamilyId::A4, &[0]).unwrap();
        assert!(a4.is_complete());
        assert_eq!(rho(&a4), 1);
    }

    #[test]
    fn bound_errors_name_the_bound() {
        let err = generate_family(FamilyId::R1, &[3]).unwrap_err();
        assert_eq!(err.to_string(), "R1 requires s ≥ 4");
        assert!(matches!(
            generate_family(FamilyId::S11, &[0, 2]),
            Err(FamilyError::Bound { param: "r", min: 3, .. })
        ));
        assert!(matches!(generate_family(FamilyId::S1, &[1]), Err(FamilyError::MissingParam { .. })));
    }

    #[test]
    fn assignments() {
        let inst = FamilyInstance::from_assignments(FamilyId::S5, &["r=2"]).unwrap();
        assert_eq!(inst.params(), &[2, 2]);
        let inst = FamilyInstance::from_assignments(FamilyId::S10, &["t1=1", "t2=3"]).unwrap();
        assert_eq!(inst.to_string(), "S10 t1=1 t2=3");
        assert!(FamilyInstance::from_assignments(FamilyId::R1, &["q=4"]).is_err());
        assert!(FamilyInstance::from_assignments(FamilyId::R1, &["s4"]).is_err());
    }

    #[test]
    fn recognition_examples() {
        let names = |g: &Graph| recognize_families(g).iter().map(|i| i.to_string()).collect::<Vec<_>>();
        assert_eq!(names(&Graph::cycle(5)), vec!["R14 t=0"]);
        assert_eq!(names(&Graph::path(8)), vec!["S5 r1=0 r2=0"]);
        assert!(names(&Graph::star(5)).is_empty());
    }

    #[test]
    fn predictor_examples() {
        let class = |g: &Graph| predict_extremal_class(g).unwrap().class;
        assert_eq!(class(&Graph::star(6)), ExtremalClass::RhoM);
        assert_eq!(class(&Graph::path(4)), ExtremalClass::RhoM1);
        assert_eq!(class(&Graph::cycle(4)), ExtremalClass::RhoM2);
        assert_eq!(class(&Graph::cycle(5)), ExtremalClass::RhoM3);
        assert_eq!(class(&Graph::complete(4)), ExtremalClass::None);
        assert_eq!(predict_extremal_class(&Graph::empty(2)), Err(FamilyError::NoEdges));
        let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(predict_extremal_class(&two_k2).is_err());
    }

    #[test]
    fn labelings() {
        // R10 is K_{2,3} when t = 0
        let r10 = generate_family(FamilyId::R10, &[0]).unwrap();
        assert_eq!(r10.degree_sequence(), vec![2, 2, 2, 3, 3]);
        assert!(!r10.has_edge(0, 1));
        // S11: hub of the glued star is vertex 4 + t
        let s11 = generate_family(FamilyId::S11, &[1, 3]).unwrap();
        assert_eq!((s11.order(), s11.size()), (8, 8));
        assert_eq!(s11.degree(5), 3);
        // S15 legs have three edges each
        let s15 = generate_family(FamilyId::S15, &[0, 0, 0]).unwrap();
        assert_eq!((s15.order(), s15.size(), s15.degree(0)), (10, 9, 3));
    }

    #[test]
    fn readings_and_overrides() {
        let mut readings = Readings::default();
        assert_eq!(readings.reading(FamilyId::R11).unwrap().to_string(), "apex:pendant");
        readings.apply("R11=apex:path2").unwrap();
        assert_eq!(readings.reading(FamilyId::R11).unwrap().gadget, Gadget::Path2);
        assert!(readings.apply("R1=apex:path2").is_err());
        assert!(readings.apply("R12=nowhere:pendant").is_err());

        // the shipped R11 reading rebuilds an A4 member
        let r11 = generate_family(FamilyId::R11, &[1]).unwrap();
        let a4 = generate_family(FamilyId::A4, &[2]).unwrap();
        assert!(are_isomorphic(&r11, &a4));

        let inst = FamilyInstance::new(FamilyId::R11, &[0])
            .unwrap()
            .with_reading(Reading::parse(FamilyId::R11, "apex-leaf:pendant").unwrap())
            .unwrap();
        assert!(matches!(inst.generate(), Err(FamilyError::MissingSite { .. })));
    }

    #[test]
    fn catalogue_matches_direct_recognition() {
        let cat = Catalogue::new(6, &Readings::default());
        for g in [Graph::cycle(5), Graph::cycle(4), Graph::path(6), generate_family(FamilyId::A7, &[3]).unwrap()] {
            let mut a = cat.lookup(&g);
            let mut b = recognize_families(&g);
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn unambiguous_generators_are_sound_on_small_box() {
        for &id in FamilyId::ALL.iter().filter(|id| !id.is_ambiguous()) {
            for_each_instance(id, None, 9, |inst, g| {
                assert!(g.is_connected(), "{inst}");
                assert_eq!(rho(g) + id.deficit(), g.size(), "{inst}");
            });
        }
    }
}
