//! Exhaustive campaigns: every corpus graph meeting a statement's hypotheses
//! is classified as conforming, an allowed exception, or a violation.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::cycles::{cycle_spectrum, cycles_on, extendability_report, nonextendable_sets};
use crate::enumeration::{all_classes, connected_classes, MAX_STREAM_ORDER};
use crate::error::{Error, Result};
use crate::families::ExceptionClass;
use crate::graph::Graph;
use crate::graph6;
use crate::iso::{canonical_form, Certificate};
use crate::local::is_locally_isometric;

use super::lemmas::{cycle_lemmas, degree2_deletion_check, neighbourhood_lemmas, LemmaConfig, LemmaId, LemmaOutcome, LemmaTally, LemmaViolation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CampaignId {
    /// Connected, Δ ≤ 4, n ≥ 3: fully cycle extendable unless `K_2 + K3bar`.
    MaxDegreeFour,
    /// Connected, Δ = 5, n ≥ 6: fully cycle extendable unless `S_n` or `D_n`.
    MaxDegreeFive,
    /// Connected, Δ = 6, no true twins of degree 6: fully cycle extendable
    /// unless `K_{2,4} + K_1`.
    TwinFreeDegreeSix,
    /// Connected, Δ = 6, n ≥ 8: not fully cycle extendable implies a degree-2 vertex.
    DegreeSixHasDegreeTwo,
    /// Δ ≤ 6, n ≥ Δ + 1: weakly pancyclic.
    PancyclicUpToSix,
    /// Δ ≤ 5, n > Δ: weakly pancyclic.
    PancyclicUpToFive,
    /// n = 7, Δ = 6: weakly pancyclic.
    PancyclicOrderSeven,
}

impl CampaignId {
    pub const ALL: [CampaignId; 7] = [
        CampaignId::MaxDegreeFour,
        CampaignId::MaxDegreeFive,
        CampaignId::TwinFreeDegreeSix,
        CampaignId::DegreeSixHasDegreeTwo,
        CampaignId::PancyclicUpToSix,
        CampaignId::PancyclicUpToFive,
        CampaignId::PancyclicOrderSeven,
    ];

    pub fn id(self) -> &'static str {
        match self {
            CampaignId::MaxDegreeFour => "delta4",
            CampaignId::MaxDegreeFive => "thm3_1",
            CampaignId::TwinFreeDegreeSix => "thm4_1",
            CampaignId::DegreeSixHasDegreeTwo => "cor4_2",
            CampaignId::PancyclicUpToSix => "thm4_5",
            CampaignId::PancyclicUpToFive => "cor3_2",
            CampaignId::PancyclicOrderSeven => "lem4_3",
        }
    }

    /// Alternative name accepted by [`FromStr`].
    pub fn alias(self) -> &'static str {
        match self {
            CampaignId::MaxDegreeFour => "max-degree-4",
            CampaignId::MaxDegreeFive => "max-degree-5",
            CampaignId::TwinFreeDegreeSix => "twin-free-degree-6",
            CampaignId::DegreeSixHasDegreeTwo => "degree-6-has-degree-2",
            CampaignId::PancyclicUpToSix => "pancyclic-degree-6",
            CampaignId::PancyclicUpToFive => "pancyclic-degree-5",
            CampaignId::PancyclicOrderSeven => "pancyclic-order-7",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            CampaignId::MaxDegreeFour => "connected, locally isometric, max degree <= 4, order >= 3: fully cycle extendable or K_2+K3bar",
            CampaignId::MaxDegreeFive => {
                "connected, locally isometric, max degree 5, order >= 6: fully cycle extendable or S_n or D_n"
            }
            CampaignId::TwinFreeDegreeSix => {
                "connected, locally isometric, max degree 6, no true twins of degree 6: fully cycle extendable or K_{2,4}+K_1"
            }
            CampaignId::DegreeSixHasDegreeTwo => {
                "connected, locally isometric, max degree 6, order >= 8, not fully cycle extendable: has a degree-2 vertex"
            }
            CampaignId::PancyclicUpToSix => "locally isometric, max degree <= 6, order >= max degree + 1: weakly pancyclic",
            CampaignId::PancyclicUpToFive => "locally isometric, max degree <= 5, order > max degree: weakly pancyclic",
            CampaignId::PancyclicOrderSeven => "locally isometric, order 7, max degree 6: weakly pancyclic",
        }
    }

    fn connected(self) -> bool {
        matches!(
            self,
            CampaignId::MaxDegreeFour
                | CampaignId::MaxDegreeFive
                | CampaignId::TwinFreeDegreeSix
                | CampaignId::DegreeSixHasDegreeTwo
        )
    }

    /// Degree and order hypotheses.
    fn size_ok(self, n: usize, delta: usize) -> bool {
        match self {
            CampaignId::MaxDegreeFour => delta <= 4 && n >= 3,
            CampaignId::MaxDegreeFive => delta == 5 && n >= 6,
            CampaignId::TwinFreeDegreeSix => delta == 6,
            CampaignId::DegreeSixHasDegreeTwo => delta == 6 && n >= 8,
            CampaignId::PancyclicUpToSix => delta <= 6 && n > delta,
            CampaignId::PancyclicUpToFive => delta <= 5 && n > delta,
            CampaignId::PancyclicOrderSeven => n == 7 && delta == 6,
        }
    }

    fn pancyclic(self) -> bool {
        matches!(self, CampaignId::PancyclicUpToSix | CampaignId::PancyclicUpToFive | CampaignId::PancyclicOrderSeven)
    }

    /// Named classes allowed to fail full cycle extendability at order `n`.
    fn allowed(self, n: usize) -> Vec<ExceptionClass> {
        match self {
            CampaignId::MaxDegreeFour if n == 5 => vec![ExceptionClass::K2JoinK3Bar],
            CampaignId::MaxDegreeFive => ExceptionClass::candidates(n)
                .into_iter()
                .filter(|c| matches!(c, ExceptionClass::SinglyShuttered(_) | ExceptionClass::DoublyShuttered(_)))
                .collect(),
            CampaignId::TwinFreeDegreeSix if n == 7 => vec![ExceptionClass::K24PlusK1],
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for CampaignId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for CampaignId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CampaignId::ALL
            .into_iter()
            .find(|c| c.id() == s || c.alias() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

impl Serialize for CampaignId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

/// Where campaign graphs come from.
#[derive(Clone, Debug)]
pub enum Corpus {
    /// The built-in generator, one graph per isomorphism class (`n ≤ 8`).
    BuiltIn,
    /// Caller-supplied graphs; those outside the order range are ignored.
    Graphs(Vec<Graph>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrderRange {
    pub min: usize,
    pub max: usize,
}

impl OrderRange {
    pub fn new(min: usize, max: usize) -> Result<Self> {
        if min > max {
            return Err(Error::InvalidParameters(format!("empty order range {min}..={max}")));
        }
        Ok(OrderRange { min, max })
    }

    pub fn contains(self, n: usize) -> bool {
        (self.min..=self.max).contains(&n)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CampaignOptions {
    /// Worker threads; `None` uses the available parallelism.
    pub threads: Option<usize>,
    /// Run the lemma suite on every non-extendable cycle and the
    /// neighbourhood checks on every graph meeting the hypotheses.
    pub lemmas: bool,
    /// Run the degree-2 deletion check on every graph meeting the hypotheses.
    pub degree2: bool,
    /// Passed to the lemma suite.
    pub lemma_config: LemmaConfig,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionRecord {
    pub class: String,
    pub order: usize,
    pub certificate: Certificate,
    pub graph6: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CampaignViolation {
    pub graph6: String,
    pub certificate: Certificate,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LemmaSummary {
    pub cycles_examined: u64,
    pub coverage: BTreeMap<LemmaId, LemmaTally>,
    pub violations: Vec<LemmaViolation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CampaignReport {
    pub theorem: CampaignId,
    pub range: OrderRange,
    pub scanned: usize,
    pub filtered: usize,
    pub filtered_out: usize,
    pub conforming: usize,
    pub exceptions: Vec<ExceptionRecord>,
    pub exception_tally: BTreeMap<String, usize>,
    pub violations: Vec<CampaignViolation>,
    pub lemmas: Option<LemmaSummary>,
    pub elapsed_ms: u64,
}

impl CampaignReport {
    /// No statement violations and no lemma violations.
    pub fn clean(&self) -> bool {
        self.violations.is_empty() && self.lemmas.as_ref().is_none_or(|l| l.violations.is_empty())
    }

    /// Exception classes found, in report order.
    pub fn exception_classes(&self) -> Vec<&str> {
        self.exceptions.iter().map(|e| e.class.as_str()).collect()
    }
}

enum Verdict {
    FilteredOut,
    Conforming,
    Exception(String),
    Violation(String),
}

struct Classified {
    key: Option<(Certificate, String)>,
    verdict: Verdict,
    lemmas: LemmaOutcome,
    cycles: u64,
}

/// Label used for non-extendable graphs that meet the degree-2 conclusion.
pub const DEGREE_TWO_LABEL: &str = "has_degree_2_vertex";

fn classify(id: CampaignId, g: &Graph, opts: &CampaignOptions) -> Result<Classified> {
    let mut out = Classified { key: None, verdict: Verdict::FilteredOut, lemmas: LemmaOutcome::default(), cycles: 0 };
    let n = g.order();
    if !id.size_ok(n, g.max_degree())
        || (id.connected() && !g.is_connected())
        || !is_locally_isometric(g)
        || (id == CampaignId::TwinFreeDegreeSix && g.twin_pairs().true_twins.iter().any(|p| p.degree == 6))
    {
        return Ok(out);
    }
    let (cert, _) = canonical_form(g);
    let g6 = graph6::encode(g)?;

    let need_extendability = !id.pancyclic() || opts.lemmas;
    let report = if need_extendability { Some(extendability_report(g)?) } else { None };

    out.verdict = if id.pancyclic() {
        let sp = cycle_spectrum(g);
        if sp.weakly_pancyclic {
            Verdict::Conforming
        } else {
            Verdict::Violation(format!(
                "not weakly pancyclic: girth {:?}, circumference {:?}, lengths {:?}",
                sp.girth, sp.circumference, sp.achieved_lengths
            ))
        }
    } else {
        let rep = report.as_ref().expect("computed above");
        if rep.fully_cycle_extendable {
            Verdict::Conforming
        } else if id == CampaignId::DegreeSixHasDegreeTwo {
            if g.vertices().any(|v| g.degree(v) == 2) {
                Verdict::Exception(DEGREE_TWO_LABEL.into())
            } else {
                Verdict::Violation("not fully cycle extendable and no vertex of degree 2".into())
            }
        } else {
            let hit = id.allowed(n).into_iter().find(|c| {
                c.reference().is_some_and(|r| canonical_form(&r).0 == cert)
            });
            match hit {
                Some(c) => Verdict::Exception(c.to_string()),
                None => Verdict::Violation(format!(
                    "not fully cycle extendable (cycle extendable: {}, every vertex on a triangle: {}) and not an allowed exception",
                    rep.cycle_extendable, rep.every_vertex_on_triangle
                )),
            }
        }
    };

    if opts.lemmas {
        out.lemmas.merge(neighbourhood_lemmas(g));
        for s in nonextendable_sets(g)? {
            for c in cycles_on(g, s)? {
                out.cycles += 1;
                out.lemmas.merge(cycle_lemmas(g, &c, &opts.lemma_config)?);
            }
        }
    }
    if opts.degree2 {
        out.lemmas.merge(degree2_deletion_check(g));
    }
    out.key = Some((cert, g6));
    Ok(out)
}

fn corpus_graphs(id: CampaignId, range: OrderRange, corpus: Corpus) -> Result<Vec<Graph>> {
    match corpus {
        Corpus::Graphs(gs) => Ok(gs.into_iter().filter(|g| range.contains(g.order())).collect()),
        Corpus::BuiltIn => {
            if range.max > MAX_STREAM_ORDER {
                return Err(Error::UnsupportedSize {
                    what: "built-in campaign corpus (supply a graph6 file for larger orders)",
                    order: range.max,
                    max: MAX_STREAM_ORDER,
                });
            }
            let mut out = Vec::new();
            for n in range.min.max(1)..=range.max {
                let classes = if id.connected() { connected_classes(n)? } else { all_classes(n)? };
                out.extend(classes.into_iter().map(|c| c.graph));
            }
            Ok(out)
        }
    }
}

/// Run one campaign. Results are merged in certificate order, so the report
/// does not depend on the thread count.
pub fn run_campaign(id: CampaignId, range: OrderRange, corpus: Corpus, opts: &CampaignOptions) -> Result<CampaignReport> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads.unwrap_or(0))
        .build()
        .map_err(|e| Error::ThreadPool(e.to_string()))?;
    let (scanned, mut results) = pool.install(|| -> Result<_> {
        let graphs = corpus_graphs(id, range, corpus)?;
        let results = graphs.par_iter().map(|g| classify(id, g, opts)).collect::<Result<Vec<_>>>()?;
        Ok((graphs.len(), results))
    })?;
    results.sort_by(|a, b| a.key.cmp(&b.key));

    let mut report = CampaignReport {
        theorem: id,
        range,
        scanned,
        filtered: 0,
        filtered_out: 0,
        conforming: 0,
        exceptions: Vec::new(),
        exception_tally: BTreeMap::new(),
        violations: Vec::new(),
        lemmas: (opts.lemmas || opts.degree2).then(LemmaSummary::default),
        elapsed_ms: 0,
    };
    for r in results {
        let Some((certificate, graph6)) = r.key else {
            report.filtered_out += 1;
            continue;
        };
        report.filtered += 1;
        match r.verdict {
            Verdict::FilteredOut => unreachable!("keyed results met the hypotheses"),
            Verdict::Conforming => report.conforming += 1,
            Verdict::Exception(class) => {
                *report.exception_tally.entry(class.clone()).or_default() += 1;
                let order = certificate.order();
                report.exceptions.push(ExceptionRecord { class, order, certificate, graph6 });
            }
            Verdict::Violation(reason) => report.violations.push(CampaignViolation { graph6, certificate, reason }),
        }
        if let Some(summary) = report.lemmas.as_mut() {
            summary.cycles_examined += r.cycles;
            for (lemma, t) in r.lemmas.coverage {
                let e = summary.coverage.entry(lemma).or_default();
                e.checked += t.checked;
                e.skipped += t.skipped;
            }
            summary.violations.extend(r.lemmas.violations);
        }
    }
    report.exceptions.sort_by(|a, b| (a.order, &a.class, &a.certificate).cmp(&(b.order, &b.class, &b.certificate)));
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{doubly_shuttered, named, singly_shuttered};

    fn run(id: CampaignId, lo: usize, hi: usize) -> CampaignReport {
        run_campaign(id, OrderRange::new(lo, hi).unwrap(), Corpus::BuiltIn, &CampaignOptions::default()).unwrap()
    }

    fn total(r: &CampaignReport) {
        assert_eq!(r.filtered, r.conforming + r.exceptions.len() + r.violations.len());
        assert_eq!(r.scanned, r.filtered + r.filtered_out);
    }

    #[test]
    fn ids_round_trip() {
        for id in CampaignId::ALL {
            assert_eq!(id.id().parse::<CampaignId>().unwrap(), id);
            assert_eq!(id.alias().parse::<CampaignId>().unwrap(), id);
        }
        assert!(matches!("thm9".parse::<CampaignId>(), Err(Error::UnknownName(_))));
    }

    #[test]
    fn degree_five_small_orders() {
        let r = run(CampaignId::MaxDegreeFive, 6, 7);
        total(&r);
        assert!(r.violations.is_empty());
        assert_eq!(r.exception_classes(), vec!["D_6", "S_6", "S_7"]);
    }

    #[test]
    fn degree_four_has_one_exception() {
        let r = run(CampaignId::MaxDegreeFour, 3, 7);
        total(&r);
        assert!(r.violations.is_empty());
        assert_eq!(r.exception_classes(), vec!["K_2+K3bar"]);
        assert_eq!(r.exceptions[0].order, 5);
    }

    #[test]
    fn twin_free_degree_six_at_seven() {
        let r = run(CampaignId::TwinFreeDegreeSix, 7, 7);
        total(&r);
        assert!(r.violations.is_empty());
        assert_eq!(r.exception_classes(), vec!["K_{2,4}+K_1"]);
    }

    #[test]
    fn pancyclic_campaigns_are_clean() {
        for id in [CampaignId::PancyclicUpToFive, CampaignId::PancyclicOrderSeven] {
            let r = run(id, 1, 7);
            total(&r);
            assert!(r.clean() && r.filtered > 0 && r.exceptions.is_empty());
        }
    }

    #[test]
    fn supplied_corpus_flags_violations() {
        let graphs = vec![singly_shuttered(6).unwrap(), named("k24_plus_k1").unwrap(), Graph::cycle(5)];
        let r = run_campaign(
            CampaignId::MaxDegreeFour,
            OrderRange::new(5, 7).unwrap(),
            Corpus::Graphs(graphs),
            &CampaignOptions::default(),
        )
        .unwrap();
        // S_6 has Δ = 5 and C_5 is not locally isometric.
        assert_eq!((r.scanned, r.filtered), (3, 0));

        let d = doubly_shuttered(8).unwrap();
        let r = run_campaign(
            CampaignId::TwinFreeDegreeSix,
            OrderRange::new(1, 20).unwrap(),
            Corpus::Graphs(vec![d]),
            &CampaignOptions::default(),
        )
        .unwrap();
        assert_eq!(r.filtered, 0);

        let r = run_campaign(
            CampaignId::MaxDegreeFive,
            OrderRange::new(6, 12).unwrap(),
            Corpus::Graphs(vec![singly_shuttered(12).unwrap(), doubly_shuttered(12).unwrap()]),
            &CampaignOptions::default(),
        )
        .unwrap();
        assert_eq!(r.exception_classes(), vec!["D_12", "S_12"]);
    }

    #[test]
    fn built_in_corpus_is_capped() {
        let e = run_campaign(
            CampaignId::MaxDegreeFive,
            OrderRange::new(6, 9).unwrap(),
            Corpus::BuiltIn,
            &CampaignOptions::default(),
        );
        assert!(matches!(e, Err(Error::UnsupportedSize { .. })));
    }

    #[test]
    fn thread_count_does_not_change_reports() {
        let range = OrderRange::new(5, 7).unwrap();
        let go = |threads| {
            let opts = CampaignOptions { threads: Some(threads), lemmas: true, degree2: true, ..Default::default() };
            let mut r = run_campaign(CampaignId::MaxDegreeFive, range, Corpus::BuiltIn, &opts).unwrap();
            r.elapsed_ms = 0;
            r
        };
        let one = go(1);
        assert_eq!(one, go(4));
        let lem = one.lemmas.as_ref().unwrap();
        assert!(lem.violations.is_empty() && lem.cycles_examined > 0);
    }
}
