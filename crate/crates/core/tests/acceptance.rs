//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lociso::cycles::{cycles_on, nonextendable_sets};
use lociso::enumeration::{all_classes, connected_classes};
use lociso::harness::{cycle_lemmas, lemma_suite_with, neighbourhood_lemmas, LemmaConfig, LemmaOutcome};
use lociso::reduction::{cubic_bipartite_graphs, parts_of};
use lociso::{
    are_isomorphic, canonical_certificate, connected_graph_stream, cycle_spectrum, degree2_deletion_check,
    doubly_shuttered, extendability_report, graph6, hamiltonian_cycle, named, run_campaign, singly_shuttered,
    verify_reduction_instance, CampaignId, CampaignOptions, CampaignReport, Corpus, Cycle, Diameter, Graph,
    OrderRange, Variant,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Corpora {
    connected: Vec<Graph>,
    all: Vec<Graph>,
}

impl Corpora {
    fn build() -> Self {
        let mut connected = Vec::new();
        let mut all = Vec::new();
        for n in 1..=8 {
            connected.extend(connected_classes(n).unwrap().into_iter().map(|c| c.graph));
            all.extend(all_classes(n).unwrap().into_iter().map(|c| c.graph));
        }
        Corpora { connected, all }
    }
}

fn campaign(corpora: &Corpora, id: CampaignId, lo: usize, hi: usize, lemmas: bool) -> Result<CampaignReport, String> {
    let graphs = match id {
        CampaignId::PancyclicUpToSix | CampaignId::PancyclicUpToFive | CampaignId::PancyclicOrderSeven => {
            corpora.all.clone()
        }
        _ => corpora.connected.clone(),
    };
    let opts = CampaignOptions { threads: None, lemmas, degree2: lemmas, ..Default::default() };
    let r = run_campaign(id, OrderRange::new(lo, hi).unwrap(), Corpus::Graphs(graphs), &opts)
        .map_err(|e| format!("{id}: {e}"))?;
    ensure(r.filtered == r.conforming + r.exceptions.len() + r.violations.len(), || {
        format!("{id}: classification is not total")
    })?;
    ensure(r.violations.is_empty(), || format!("{id}: violations {:?}", r.violations))?;
    Ok(r)
}

fn exception_summary(r: &CampaignReport) -> String {
    r.exceptions.iter().map(|e| e.class.as_str()).collect::<Vec<_>>().join(", ")
}

fn criterion1(c: &Corpora, lemma_reports: &mut Vec<CampaignReport>) -> Outcome {
    let r = campaign(c, CampaignId::MaxDegreeFour, 5, 8, true)?;
    ensure(r.exceptions.len() == 1 && r.exceptions[0].order == 5, || {
        format!("expected one exception at order 5, found [{}]", exception_summary(&r))
    })?;
    let k = Graph::complete(2).join(&Graph::empty(3)).unwrap();
    let cert = canonical_certificate(&k).unwrap();
    ensure(r.exceptions[0].certificate == cert, || "the exception is not K_2+K3bar".into())?;
    let line = format!("{} graphs meet the hypotheses, sole exception K_2+K3bar", r.filtered);
    lemma_reports.push(r);
    Ok(line)
}

fn criterion2(c: &Corpora, lemma_reports: &mut Vec<CampaignReport>) -> Outcome {
    let r = campaign(c, CampaignId::MaxDegreeFive, 6, 8, true)?;
    let mut expected: BTreeSet<(usize, String, lociso::Certificate)> = BTreeSet::new();
    for n in 6..=8 {
        expected.insert((n, format!("S_{n}"), canonical_certificate(&singly_shuttered(n).unwrap()).unwrap()));
        if let Ok(d) = doubly_shuttered(n) {
            expected.insert((n, format!("D_{n}"), canonical_certificate(&d).unwrap()));
        }
    }
    let found: BTreeSet<_> = r.exceptions.iter().map(|e| (e.order, e.class.clone(), e.certificate.clone())).collect();
    ensure(found == expected, || format!("exceptions [{}]", exception_summary(&r)))?;
    // D_6 = K_2 + K4bar is locally isometric with max degree 5 and is not
    // fully cycle extendable, so it belongs in the exception set.
    let d6 = doubly_shuttered(6).unwrap();
    ensure(!extendability_report(&d6).unwrap().fully_cycle_extendable, || "D_6 unexpectedly extendable".into())?;
    let line = format!(
        "{} graphs meet the hypotheses, exceptions [{}] (D_6 = K_2+K4bar included; it is not fully cycle extendable)",
        r.filtered,
        exception_summary(&r)
    );
    lemma_reports.push(r);
    Ok(line)
}

fn criterion3(c: &Corpora, lemma_reports: &mut Vec<CampaignReport>) -> Outcome {
    let r = campaign(c, CampaignId::TwinFreeDegreeSix, 7, 8, true)?;
    let k = canonical_certificate(&named("k24_plus_k1").unwrap()).unwrap();
    ensure(r.exceptions.len() == 1 && r.exceptions[0].order == 7 && r.exceptions[0].certificate == k, || {
        format!("exceptions [{}]", exception_summary(&r))
    })?;
    let line = format!("{} graphs meet the hypotheses, sole exception K_{{2,4}}+K_1 at order 7", r.filtered);
    lemma_reports.push(r);
    Ok(line)
}

fn criterion4(c: &Corpora, lemma_reports: &mut Vec<CampaignReport>) -> Outcome {
    let r = campaign(c, CampaignId::DegreeSixHasDegreeTwo, 8, 8, true)?;
    ensure(r.filtered > 0, || "no graph met the hypotheses".into())?;
    let line = format!(
        "{} graphs meet the hypotheses, {} not fully cycle extendable, all with a degree-2 vertex",
        r.filtered,
        r.exceptions.len()
    );
    lemma_reports.push(r);
    Ok(line)
}

fn criterion5(c: &Corpora) -> Outcome {
    let a = campaign(c, CampaignId::PancyclicUpToSix, 1, 8, false)?;
    let b = campaign(c, CampaignId::PancyclicUpToFive, 1, 8, false)?;
    let l = campaign(c, CampaignId::PancyclicOrderSeven, 7, 7, false)?;
    let mut families = 0;
    for n in 6..=12 {
        let mut gs = vec![singly_shuttered(n).unwrap()];
        gs.extend(doubly_shuttered(n).ok());
        for g in gs {
            let sp = cycle_spectrum(&g);
            let ext = extendability_report(&g).unwrap();
            ensure(sp.weakly_pancyclic && !ext.fully_cycle_extendable, || {
                format!("order {n}: weakly pancyclic {}, fully cycle extendable {}", sp.weakly_pancyclic, ext.fully_cycle_extendable)
            })?;
            families += 1;
        }
    }
    Ok(format!(
        "weakly pancyclic: {} graphs (max degree <= 6), {} (max degree <= 5), {} (order 7, max degree 6); {families} family members checked",
        a.filtered, b.filtered, l.filtered
    ))
}

fn random_connected(rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let n = rng.gen_range(4..=9);
        let p: f64 = rng.gen_range(0.25..0.8);
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                if rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

fn criterion6(lemma_reports: &[CampaignReport]) -> Outcome {
    let mut total = LemmaOutcome::default();
    let mut cycles = 0u64;
    for r in lemma_reports {
        let s = r.lemmas.as_ref().ok_or("campaign ran without lemmas")?;
        ensure(s.violations.is_empty(), || format!("{}: {:?}", r.theorem, s.violations))?;
        cycles += s.cycles_examined;
        for (id, t) in &s.coverage {
            let e = total.coverage.entry(*id).or_default();
            e.checked += t.checked;
            e.skipped += t.skipped;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let cfg = LemmaConfig::default();
    let mut sampled = 0;
    while sampled < 10_000 {
        let g = random_connected(&mut rng);
        let sets = nonextendable_sets(&g).unwrap();
        if sets.is_empty() {
            continue;
        }
        sampled += 1;
        for s in sets {
            for c in cycles_on(&g, s).unwrap() {
                cycles += 1;
                total.merge(cycle_lemmas(&g, &c, &cfg).unwrap());
            }
        }
        total.merge(neighbourhood_lemmas(&g));
        total.merge(degree2_deletion_check(&g));
    }
    ensure(total.violations.is_empty(), || format!("random corpus: {:?}", total.violations.first()))?;
    for id in lociso::LemmaId::ALL {
        ensure(total.checked(id) > 0, || format!("{} was never exercised", id.name()))?;
    }

    // Corrupted-assertion self-test on S_5 and its non-extendable 4-cycle.
    let s5 = singly_shuttered(5).unwrap();
    let hubs: Vec<usize> = s5.vertices().filter(|&v| s5.degree(v) == 4).collect();
    let low: Vec<usize> = s5.vertices().filter(|&v| s5.degree(v) == 2).collect();
    let c = Cycle::new(&s5, vec![hubs[0], low[0], hubs[1], low[1]]).unwrap();
    let corrupt = lemma_suite_with(&s5, &c, &LemmaConfig { invert_successor_check: true }).unwrap();
    ensure(corrupt.violations.len() == 1, || format!("self-test reported {} violations", corrupt.violations.len()))?;

    let checked: u64 = total.coverage.values().map(|t| t.checked).sum();
    Ok(format!("{cycles} non-extendable cycles, {checked} lemma instances, 0 violations; self-test reported exactly 1"))
}

fn criterion7() -> Outcome {
    // Connected cubic bipartite graphs on 6..=14 vertices number 1, 1, 2, 5, 13.
    let connected_counts = [1, 1, 2, 5, 13];
    let mut instances = 0;
    let mut slowest = Duration::ZERO;
    let mut hamiltonian = 0;
    let mut girth_six = 0;
    for (idx, n) in (6..=14).step_by(2).enumerate() {
        let corpus = cubic_bipartite_graphs(n).map_err(|e| e.to_string())?;
        let connected = corpus.iter().filter(|g| g.is_connected()).count();
        ensure(connected == connected_counts[idx], || format!("order {n}: {connected} connected graphs"))?;
        for g in &corpus {
            let t = Instant::now();
            let parts = parts_of(g).map_err(|e| e.to_string())?;
            let rep = verify_reduction_instance(g, parts).map_err(|e| e.to_string())?;
            slowest = slowest.max(t.elapsed());
            ensure(rep.hamiltonicity_checked && rep.all_ok(), || format!("order {n}: {rep:?}"))?;
            for v in &rep.variants {
                let (delta, bound_ok) = match v.variant {
                    Variant::DiameterThree => (7, v.min_k.at_most(3)),
                    Variant::Isometric => (8, v.min_k == Diameter::Finite(2)),
                };
                ensure(v.max_degree == delta && bound_ok && v.order == 3 * n, || format!("order {n}: {v:?}"))?;
                ensure(v.equivalence_ok == Some(true), || format!("order {n}: Hamiltonicity differs"))?;
                let source = v.ham_source == Some(true);
                ensure(v.lift_ok == source.then_some(true) && v.project_ok == source.then_some(true), || {
                    format!("order {n}: lift {:?}, project {:?}", v.lift_ok, v.project_ok)
                })?;
            }
            hamiltonian += usize::from(rep.variants[0].ham_source == Some(true));
            girth_six += usize::from(n == 14 && cycle_spectrum(g).girth == Some(6));
            instances += 1;
        }
    }
    ensure(girth_six == 1, || "the order-14 corpus should hold exactly one graph of girth 6".into())?;
    for name in ["k33", "cube_q3", "heawood"] {
        let g = named(name).unwrap();
        let rep = verify_reduction_instance(&g, parts_of(&g).unwrap()).unwrap();
        ensure(rep.all_ok(), || format!("{name}: {rep:?}"))?;
    }
    ensure(slowest <= Duration::from_secs(5), || format!("slowest instance took {slowest:?}"))?;
    Ok(format!(
        "{instances} cubic bipartite graphs ({hamiltonian} Hamiltonian), both variants verified, slowest {:.1} ms",
        slowest.as_secs_f64() * 1e3
    ))
}

fn criterion8() -> Outcome {
    let expected = [(4, 6), (5, 21), (6, 112), (7, 853)];
    for (n, count) in expected {
        let stream = connected_graph_stream(n).map_err(|e| e.to_string())?.len();
        let oracle = common::connected_classes_by_orbits(n).len();
        ensure(stream == count && oracle == count, || format!("order {n}: stream {stream}, oracle {oracle}, expected {count}"))?;
    }
    let mut lines = 0;
    for n in 1..=7 {
        for g in connected_graph_stream(n).unwrap() {
            let line = graph6::encode(&g).unwrap();
            let back = graph6::decode(&line).map_err(|e| e.to_string())?;
            ensure(back == g && graph6::encode(&back).unwrap() == line, || format!("round trip failed for {line}"))?;
            lines += 1;
        }
    }
    Ok(format!("counts 6, 21, 112, 853 match the orbit oracle; {lines} graph6 lines round-trip byte-identically"))
}

fn relabel_randomly(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = g.vertices().collect();
    for i in (1..perm.len()).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    g.relabel(&perm).unwrap()
}

fn criterion9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut graphs = 0;
    let mut pairs = 0;
    for n in 1..=6 {
        let gs: Vec<Graph> = connected_graph_stream(n).unwrap().collect();
        for g in &gs {
            let lengths = common::cycle_lengths_by_subsets(g);
            let sp = cycle_spectrum(g);
            ensure(sp.achieved_lengths == lengths, || format!("{g:?}: {:?} vs {lengths:?}", sp.achieved_lengths))?;
            ensure(hamiltonian_cycle(g).is_some() == common::hamiltonian_by_permutation(g), || format!("{g:?}: Hamiltonicity"))?;
            let h = relabel_randomly(g, &mut rng);
            ensure(are_isomorphic(g, &h).unwrap() && common::isomorphic_by_permutation(g, &h), || format!("{g:?}: relabel"))?;
            graphs += 1;
        }
        for (i, a) in gs.iter().enumerate() {
            for b in &gs[i + 1..] {
                let b = relabel_randomly(b, &mut rng);
                ensure(are_isomorphic(a, &b).unwrap() == common::isomorphic_by_permutation(a, &b), || {
                    format!("{a:?} vs {b:?}")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{graphs} graphs agree on spectrum and Hamiltonicity, {pairs} distinct-class pairs agree on isomorphism"))
}

fn main() {
    let start = Instant::now();
    let corpora = Corpora::build();
    let mut lemma_reports = Vec::new();
    let results: Vec<(&str, Outcome)> = vec![
        ("1 max degree <= 4 characterization", criterion1(&corpora, &mut lemma_reports)),
        ("2 max degree 5 exceptions", criterion2(&corpora, &mut lemma_reports)),
        ("3 twin-free max degree 6", criterion3(&corpora, &mut lemma_reports)),
        ("4 degree-2 vertex at order 8", criterion4(&corpora, &mut lemma_reports)),
        ("5 weak pancyclicity", criterion5(&corpora)),
        ("6 lemma suite", criterion6(&lemma_reports)),
        ("7 reduction correctness", criterion7()),
        ("8 enumeration and graph6", criterion8()),
        ("9 oracle equivalence", criterion9()),
    ];
    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(detail) => println!("criterion {name}: PASS ({detail})"),
            Err(why) => {
                failed += 1;
                println!("criterion {name}: FAIL ({why})");
            }
        }
    }
    println!("acceptance: {}/{} passed in {:.1} s", results.len() - failed, results.len(), start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
