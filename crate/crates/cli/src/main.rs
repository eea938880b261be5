//! `lociso`: batch front end. Graphs travel as graph6 lines; reports are JSON
//! lines on stdout and human summaries go to stderr.
//!
//! Exit codes: 0 success, 1 violations or failed checks, 2 usage, 3 input error.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lociso::cycles::{cycles_on, nonextendable_sets};
use lociso::enumeration::{all_classes, connected_classes};
use lociso::families::{shuttered_highrise_with_plan, Named};
use lociso::graph::{DegreeProfile, TwinReport};
use lociso::harness::{cycle_lemmas, neighbourhood_lemmas, LemmaConfig, LemmaOutcome};
use lociso::reduction::{check_instance, parts_of, VariantCheck, MAX_HAMILTONICITY_ORDER};
use lociso::{
    cycle_spectrum, degree2_deletion_check, doubly_shuttered, extendability_report, gadget_transform, graph6,
    hamiltonian_cycle, highrise, local_profile, named, recognize_exception, run_campaign, shuttered_highrise,
    singly_shuttered, CampaignId, CampaignOptions, Corpus, CycleSpectrum, Error, ExceptionClass, ExtendabilityReport,
    FamilyParams, Graph, LocalProfile, OrderRange, Variant,
};

#[derive(Parser)]
#[command(name = "lociso", version, about = "Cycle structure of locally isometric graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degree profile and neighbourhood properties of each input graph.
    Check(InputArgs),
    /// Girth, circumference and achieved cycle lengths.
    Spectrum(InputArgs),
    /// Cycle extendability, with a non-extendable witness when one exists.
    Extend(InputArgs),
    /// Match each graph against the exceptional classes.
    Classify(InputArgs),
    /// Print a member of a family or a catalog graph as graph6.
    Generate(GenerateArgs),
    /// Print connected graphs of one order, one per isomorphism class.
    Enumerate(EnumerateArgs),
    /// Apply the Hamiltonicity-preserving gadget transformation.
    Reduce(ReduceArgs),
    /// Run an exhaustive campaign, or the lemma checks on input graphs.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct InputArgs {
    /// graph6 file, one graph per line; `-` or absent reads stdin.
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Highrise,
    #[value(alias = "singly_shuttered")]
    SinglyShuttered,
    #[value(alias = "doubly_shuttered")]
    DoublyShuttered,
    #[value(alias = "shuttered_highrise")]
    ShutteredHighrise,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum, conflicts_with = "name", requires = "order", required_unless_present_any = ["name", "list"])]
    family: Option<Family>,
    /// Order of the family member.
    #[arg(long)]
    order: Option<usize>,
    /// Number of shutters (shuttered-highrise only).
    #[arg(long, default_value_t = 1)]
    shutters: usize,
    /// Maximum degree (shuttered-highrise only).
    #[arg(long, default_value_t = 5)]
    max_degree: usize,
    /// Explicit shutter placement as comma-separated twin-pair indices.
    #[arg(long, value_delimiter = ',')]
    plan: Option<Vec<usize>>,
    /// Catalog graph by name.
    #[arg(long)]
    name: Option<String>,
    /// List catalog names.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    order: usize,
    /// Include disconnected graphs.
    #[arg(long)]
    all: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    G1,
    G2,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::G1 => Variant::DiameterThree,
            VariantArg::G2 => Variant::Isometric,
        }
    }
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long, value_enum)]
    variant: VariantArg,
    /// Catalog graph by name instead of reading input.
    #[arg(long, conflicts_with = "input")]
    name: Option<String>,
    /// graph6 file of cubic bipartite graphs; `-` or absent reads stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Verify structure and Hamiltonicity equivalence; prints a JSON report.
    #[arg(long)]
    check: bool,
    /// Write reduced graphs here and the vertex label maps to `<PATH>.labels`.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Campaign id (delta4, thm3_1, thm4_1, cor4_2, thm4_5, cor3_2, lem4_3) or its alias.
    #[arg(long)]
    theorem: Option<String>,
    #[arg(long, default_value_t = 1)]
    min_order: usize,
    #[arg(long, default_value_t = 8)]
    max_order: usize,
    /// graph6 corpus; without it a campaign uses the built-in generator.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Worker threads; 0 uses the available parallelism.
    #[arg(long, env = "LOCISO_THREADS", default_value_t = 0)]
    threads: usize,
    /// Run the lemma suite on every non-extendable cycle.
    #[arg(long)]
    lemmas: bool,
    /// Run the degree-2 deletion check.
    #[arg(long)]
    degree2: bool,
    /// Invert the successor non-adjacency check so the lemma suite must
    /// report violations (self-test of the reporting path).
    #[arg(long, requires = "lemmas")]
    corrupt: bool,
}

/// Failure that decides the exit code.
enum Failure {
    Input(String),
    Internal(String),
    /// The reader of stdout went away; not an error for a pipeline stage.
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Input(e.to_string())
    }
}

type Run = Result<bool, Failure>;

fn open_input(path: Option<&Path>) -> Result<Box<dyn BufRead>, Failure> {
    match path {
        None => Ok(Box::new(BufReader::new(io::stdin()))),
        Some(p) if p == Path::new("-") => Ok(Box::new(BufReader::new(io::stdin()))),
        Some(p) => {
            let f = File::open(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
            Ok(Box::new(BufReader::new(f)))
        }
    }
}

fn read_all(path: Option<&Path>) -> Result<Vec<Graph>, Failure> {
    let reader = open_input(path)?;
    Ok(graph6::read_graphs(reader).collect::<lociso::Result<Vec<_>>>()?)
}

struct Out {
    w: BufWriter<io::StdoutLock<'static>>,
}

impl Out {
    fn new() -> Self {
        Out { w: BufWriter::new(io::stdout().lock()) }
    }

    fn json(&mut self, v: &impl Serialize) -> io::Result<()> {
        serde_json::to_writer(&mut self.w, v)?;
        self.w.write_all(b"\n")
    }

    fn line(&mut self, s: &str) -> io::Result<()> {
        self.w.write_all(s.as_bytes())?;
        self.w.write_all(b"\n")
    }
}

/// Apply `f` to each graph of the input as it is read, one JSON line each.
fn per_graph<T: Serialize>(args: &InputArgs, mut f: impl FnMut(&Graph, String) -> Result<T, Failure>) -> Run {
    let mut out = Out::new();
    for g in graph6::read_graphs(open_input(args.input.as_deref())?) {
        let g = g?;
        let line = graph6::encode(&g)?;
        out.json(&f(&g, line)?)?;
    }
    Ok(true)
}

#[derive(Serialize)]
struct CheckLine {
    graph6: String,
    order: usize,
    edge_count: usize,
    connected: bool,
    degrees: DegreeProfile,
    local: LocalProfile,
    twins: TwinReport,
}

#[derive(Serialize)]
struct SpectrumLine {
    graph6: String,
    #[serde(flatten)]
    spectrum: CycleSpectrum,
}

#[derive(Serialize)]
struct ExtendLine {
    graph6: String,
    #[serde(flatten)]
    report: ExtendabilityReport,
}

#[derive(Serialize)]
struct ClassifyLine {
    graph6: String,
    class: ExceptionClass,
    locally_isometric: bool,
    max_degree: usize,
}

fn generate(a: &GenerateArgs) -> Run {
    let mut out = Out::new();
    if a.list {
        for n in Named::ALL {
            out.line(n.id())?;
        }
        return Ok(true);
    }
    let g = match (a.family, &a.name) {
        (_, Some(name)) => named(name)?,
        (Some(family), None) => {
            let m = a.order.expect("clap requires --order with --family");
            match family {
                Family::Highrise => highrise(m)?,
                Family::SinglyShuttered => singly_shuttered(m)?,
                Family::DoublyShuttered => doubly_shuttered(m)?,
                Family::ShutteredHighrise => {
                    let p = FamilyParams::new(m, a.shutters, a.max_degree)?;
                    match &a.plan {
                        Some(plan) => shuttered_highrise_with_plan(p, plan)?,
                        None => shuttered_highrise(p)?,
                    }
                }
            }
        }
        (None, None) => unreachable!("clap requires --family or --name"),
    };
    out.line(&graph6::encode(&g)?)?;
    Ok(true)
}

fn enumerate(a: &EnumerateArgs) -> Run {
    let classes = if a.all { all_classes(a.order)? } else { connected_classes(a.order)? };
    let mut out = Out::new();
    for c in &classes {
        out.line(&graph6::encode(&c.graph)?)?;
    }
    eprintln!("order {}: {} graphs", a.order, classes.len());
    Ok(true)
}

#[derive(Serialize)]
struct ReduceLine {
    source: String,
    reduced: String,
    #[serde(flatten)]
    check: VariantCheck,
}

fn reduce(a: &ReduceArgs) -> Run {
    let sources = match &a.name {
        Some(name) => vec![named(name)?],
        None => read_all(a.input.as_deref())?,
    };
    let variant = Variant::from(a.variant);
    let mut files = match &a.output {
        Some(p) => {
            let mut labels = p.clone().into_os_string();
            labels.push(".labels");
            Some((BufWriter::new(File::create(p)?), BufWriter::new(File::create(labels)?)))
        }
        None => None,
    };
    let mut out = Out::new();
    let mut ok = true;
    for g in &sources {
        let inst = gadget_transform(g, parts_of(g)?, variant)?;
        let reduced = graph6::encode(&inst.graph)?;
        if let Some((graphs, labels)) = files.as_mut() {
            writeln!(graphs, "{reduced}")?;
            labels.write_all(inst.label_map_text().as_bytes())?;
            labels.write_all(b"\n")?;
        }
        if a.check {
            let budget = inst.graph.order() <= MAX_HAMILTONICITY_ORDER;
            let source_cycle = budget.then(|| hamiltonian_cycle(g));
            let check = check_instance(&inst, source_cycle.as_ref())?;
            eprintln!(
                "{variant}: order {}, max degree {}, local diameter {}, equivalence {}",
                check.order,
                check.max_degree,
                check.min_k,
                check.equivalence_ok.map_or("skipped (over budget)".to_string(), |b| b.to_string())
            );
            ok &= check.all_ok();
            out.json(&ReduceLine { source: graph6::encode(g)?, reduced, check })?;
        } else if files.is_none() {
            out.line(&reduced)?;
        }
    }
    if let Some((mut graphs, mut labels)) = files {
        graphs.flush()?;
        labels.flush()?;
    }
    Ok(ok)
}

#[derive(Serialize)]
struct LemmaLine {
    graph6: String,
    cycles_examined: u64,
    #[serde(flatten)]
    outcome: LemmaOutcome,
}

fn verify(a: &VerifyArgs) -> Run {
    let threads = (a.threads > 0).then_some(a.threads);
    let Some(theorem) = &a.theorem else {
        if !a.lemmas && !a.degree2 {
            return Err(Failure::Input("verify needs --theorem, --lemmas or --degree2".into()));
        }
        return verify_graphs(a);
    };
    let id: CampaignId = theorem.parse()?;
    let range = OrderRange::new(a.min_order, a.max_order)?;
    let corpus = match &a.input {
        Some(p) => Corpus::Graphs(read_all(Some(p))?),
        None => Corpus::BuiltIn,
    };
    let lemma_config = LemmaConfig { invert_successor_check: a.corrupt };
    let opts = CampaignOptions { threads, lemmas: a.lemmas, degree2: a.degree2, lemma_config };
    let report = run_campaign(id, range, corpus, &opts)?;
    eprintln!("{id}: {}", id.statement());
    eprintln!(
        "{id}: orders {}..={}, scanned {}, meeting hypotheses {}, conforming {}, exceptions {}, violations {} ({} ms)",
        range.min,
        range.max,
        report.scanned,
        report.filtered,
        report.conforming,
        report.exceptions.len(),
        report.violations.len(),
        report.elapsed_ms
    );
    if !report.exceptions.is_empty() {
        let names: Vec<&str> = report.exception_classes();
        eprintln!("{id}: exceptions [{}]", names.join(", "));
    }
    if let Some(l) = &report.lemmas {
        eprintln!("{id}: {} non-extendable cycles examined, {} lemma violations", l.cycles_examined, l.violations.len());
    }
    Out::new().json(&report)?;
    Ok(report.clean())
}

fn verify_graphs(a: &VerifyArgs) -> Run {
    let mut out = Out::new();
    let mut clean = true;
    let cfg = LemmaConfig { invert_successor_check: a.corrupt };
    for g in graph6::read_graphs(open_input(a.input.as_deref())?) {
        let g = g?;
        let mut outcome = LemmaOutcome::default();
        let mut cycles = 0;
        if a.lemmas {
            outcome.merge(neighbourhood_lemmas(&g));
            for s in nonextendable_sets(&g)? {
                for c in cycles_on(&g, s)? {
                    cycles += 1;
                    outcome.merge(cycle_lemmas(&g, &c, &cfg)?);
                }
            }
        }
        if a.degree2 {
            outcome.merge(degree2_deletion_check(&g));
        }
        clean &= outcome.violations.is_empty();
        out.json(&LemmaLine { graph6: graph6::encode(&g)?, cycles_examined: cycles, outcome })?;
    }
    Ok(clean)
}

fn run(cli: Cli) -> Run {
    match cli.command {
        Command::Check(a) => per_graph(&a, |g, graph6| {
            Ok(CheckLine {
                graph6,
                order: g.order(),
                edge_count: g.edge_count(),
                connected: g.is_connected(),
                degrees: g.degree_profile(),
                local: local_profile(g),
                twins: g.twin_pairs(),
            })
        }),
        Command::Spectrum(a) => per_graph(&a, |g, graph6| Ok(SpectrumLine { graph6, spectrum: cycle_spectrum(g) })),
        Command::Extend(a) => per_graph(&a, |g, graph6| Ok(ExtendLine { graph6, report: extendability_report(g)? })),
        Command::Classify(a) => per_graph(&a, |g, graph6| {
            Ok(ClassifyLine {
                graph6,
                class: recognize_exception(g)?,
                locally_isometric: lociso::is_locally_isometric(g),
                max_degree: g.max_degree(),
            })
        }),
        Command::Generate(a) => generate(&a),
        Command::Enumerate(a) => enumerate(&a),
        Command::Reduce(a) => reduce(&a),
        Command::Verify(a) => verify(&a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) | Err(Failure::Closed) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
