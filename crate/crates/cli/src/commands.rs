use std::path::{Path, PathBuf};
use std::time::Instant;

use affine_rigidity::families;
use affine_rigidity::hypergraph::{is_k_vertex_connected, vertex_connectivity};
use affine_rigidity::numkernel::DEFAULT_PRIME;
use affine_rigidity::registration::{affine_register, euclidean_register, Gauge, Scan, ScanSet, Trust};
use affine_rigidity::rigidity::rubber_band::{rubber_band_embedding, RubberBandOptions};
use affine_rigidity::rigidity::{
    affine_rigidity_test, generic_affine_rigidity_test, neighborhood_affine_rigidity_test,
    universal_rigidity_certificate, Configuration, Framework, GenericTestOptions, PrimeChoice, RigidityVerdict,
    UniversalOutcome, UniversalRoute, Verdict,
};
use affine_rigidity::{seeded_rng, Graph, Hypergraph};
use clap::{Args, Parser, Subcommand, ValueEnum};
use nalgebra::{DMatrix, DVector};
use serde_json::json;

use crate::docs::{Document, FrameworkDoc, GraphDoc, HypergraphDoc, Report, ScanSetDoc};
use crate::error::{exit, CliError};
use crate::io::{read_document, write_document, write_text};

#[derive(Debug, Parser)]
#[command(name = "affrig", version, about = "Affine rigidity of graph and hypergraph frameworks")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Relative tolerance for numerical kernels.
    #[arg(long, global = true, default_value_t = affine_rigidity::DEFAULT_REL_TOL)]
    pub tol: f64,
    /// Trials of the finite-field tester.
    #[arg(long, global = true, default_value_t = 3)]
    pub trials: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Modulus of the finite-field tester: a prime in [2^59, 2^63), or `random`.
    #[arg(long, global = true, value_parser = parse_prime)]
    pub prime: Option<PrimeChoice>,
    /// Suppress the human-readable summary.
    #[arg(long, short, global = true)]
    pub quiet: bool,
}

fn parse_prime(s: &str) -> Result<PrimeChoice, String> {
    if s == "random" {
        return Ok(PrimeChoice::RandomPerTrial);
    }
    s.parse::<u64>()
        .map(PrimeChoice::Fixed)
        .map_err(|e| format!("expected a prime or `random`: {e}"))
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Body graph, neighborhood hypergraph, squared graph or k-truncation.
    Transform {
        input: PathBuf,
        #[arg(value_enum)]
        op: TransformOp,
        /// Subset size for `truncate`.
        k: Option<usize>,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
    },
    /// Rigidity tests and universal rigidity certificates.
    Test {
        input: PathBuf,
        #[arg(long, short)]
        dim: usize,
        #[arg(long, value_enum, default_value_t = TestMode::Generic)]
        mode: TestMode,
        /// Coordinates; random generic ones (from --seed) when omitted.
        #[arg(long)]
        framework: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Is the graph k-vertex-connected?
    Connectivity {
        input: PathBuf,
        #[arg(short, long)]
        k: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Zha–Zhang overlap condition of a hypergraph in dimension d.
    Zz {
        input: PathBuf,
        #[arg(long, short)]
        dim: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Cut a framework into per-hyperedge scans (neighborhoods for a graph).
    Scans {
        input: PathBuf,
        #[arg(long)]
        framework: PathBuf,
        #[arg(long, value_enum, default_value_t = TrustArg::Euclidean)]
        trust: TrustArg,
        /// Apply an independent random map of the trust class to each scan.
        #[arg(long)]
        scramble: bool,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
    },
    /// Recover a configuration from a scan set.
    Register {
        input: PathBuf,
        /// Defaults to the scan set's trust level.
        #[arg(long, value_enum)]
        mode: Option<TrustArg>,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Rubber-band embedding of a graph with d + 1 pinned vertices.
    Embed {
        input: PathBuf,
        #[arg(long, short)]
        dim: usize,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Emit a named example: fig1, fig2, fig3 (pentagon), hextorus M N,
    /// star K, wheel K, trilateration D N.
    Examples {
        name: String,
        params: Vec<usize>,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
        /// Also write reproducible generic coordinates here.
        #[arg(long)]
        framework: Option<PathBuf>,
        /// Dimension of the generated coordinates (default 2, or D for trilateration).
        #[arg(long, short)]
        dim: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TransformOp {
    Body,
    Neighborhood,
    Square,
    Truncate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TestMode {
    /// Finite-field test of generic affine rigidity. Graphs are tested
    /// through their neighborhood hypergraph.
    Generic,
    /// Floating-point test of the given framework.
    Framework,
    /// Stress-based test of neighborhood affine rigidity of a graph framework.
    Neighborhood,
    /// Universal rigidity via affine rigidity and no conic at infinity.
    UniversalAffine,
    /// Universal rigidity of the squared graph via a PSD stress.
    UniversalPsd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TrustArg {
    Affine,
    Euclidean,
}

impl From<TrustArg> for Trust {
    fn from(t: TrustArg) -> Trust {
        match t {
            TrustArg::Affine => Trust::Affine,
            TrustArg::Euclidean => Trust::Euclidean,
        }
    }
}

enum Structure {
    Graph(Graph),
    Hypergraph(Hypergraph),
}

impl Structure {
    fn vertex_count(&self) -> usize {
        match self {
            Structure::Graph(g) => g.vertex_count(),
            Structure::Hypergraph(h) => h.vertex_count(),
        }
    }
}

fn read_structure(path: &Path) -> Result<Structure, CliError> {
    match read_document(path)? {
        Document::Graph(g) => Ok(Structure::Graph(g.to_graph()?)),
        Document::Hypergraph(h) => Ok(Structure::Hypergraph(h.to_hypergraph()?)),
        other => Err(CliError::Usage(format!(
            "{}: expected a graph or hypergraph, found a {}",
            path.display(),
            other.kind().name()
        ))),
    }
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    match read_structure(path)? {
        Structure::Graph(g) => Ok(g),
        Structure::Hypergraph(_) => Err(CliError::Usage(format!("{}: expected a graph", path.display()))),
    }
}

fn read_config(path: &Path) -> Result<Configuration, CliError> {
    match read_document(path)? {
        Document::Framework(f) => f.to_config(),
        other => Err(CliError::Usage(format!(
            "{}: expected a framework, found a {}",
            path.display(),
            other.kind().name()
        ))),
    }
}

/// What a command hands back to [`run`].
struct Outcome {
    report: Report,
    summary: String,
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let start = Instant::now();
    let (name, report_path, summary_to_stderr) = describe(&cli.command);
    let result = dispatch(&cli);
    let (mut report, summary) = match result {
        Ok(o) => (o.report, o.summary),
        Err(e) => {
            let mut r = Report::new(name);
            r.exit_code = e.exit_code();
            r.error = Some(e.to_string());
            if let CliError::Library(affine_rigidity::Error::NotAffinelyRigid { corank, expected }) = &e {
                r.verdict = Some("not-affinely-rigid".into());
                r.corank = Some(*corank);
                r.expected_corank = Some(*expected);
            }
            (r, format!("error: {e}"))
        }
    };
    report.timing.seconds = start.elapsed().as_secs_f64();
    if !cli.global.quiet || report.error.is_some() {
        if summary_to_stderr || report.error.is_some() {
            eprintln!("{summary}");
        } else {
            println!("{summary}");
        }
    }
    if let Some(path) = report_path {
        if let Err(e) = write_document(path, &Document::Report(report.clone())) {
            eprintln!("error: {e}");
            return exit::USAGE;
        }
    }
    report.exit_code
}

fn describe(c: &Command) -> (&'static str, Option<&PathBuf>, bool) {
    let stdout = |p: &PathBuf| p.as_os_str() == "-";
    match c {
        Command::Transform { output, .. } => ("transform", None, stdout(output)),
        Command::Test { report, .. } => ("test", report.as_ref(), false),
        Command::Connectivity { report, .. } => ("connectivity", report.as_ref(), false),
        Command::Zz { report, .. } => ("zz", report.as_ref(), false),
        Command::Scans { output, .. } => ("scans", None, stdout(output)),
        Command::Register { output, report, .. } => ("register", report.as_ref(), stdout(output)),
        Command::Embed { output, report, .. } => ("embed", report.as_ref(), stdout(output)),
        Command::Examples { output, framework, .. } => (
            "examples",
            None,
            stdout(output) || framework.as_ref().is_some_and(stdout),
        ),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let g = &cli.global;
    if !(g.tol > 0.0 && g.tol < 1.0) {
        return Err(CliError::Usage(format!("--tol must lie in (0, 1), got {}", g.tol)));
    }
    match &cli.command {
        Command::Transform { input, op, k, output } => transform(input, *op, *k, output),
        Command::Test {
            input,
            dim,
            mode,
            framework,
            ..
        } => test(g, input, *dim, *mode, framework.as_deref()),
        Command::Connectivity { input, k, .. } => connectivity(input, *k),
        Command::Zz { input, dim, .. } => zz(input, *dim),
        Command::Scans {
            input,
            framework,
            trust,
            scramble,
            output,
        } => scans(g, input, framework, (*trust).into(), *scramble, output),
        Command::Register {
            input, mode, output, ..
        } => register(g, input, mode.map(Trust::from), output),
        Command::Embed { input, dim, output, .. } => embed(g, input, *dim, output),
        Command::Examples {
            name,
            params,
            output,
            framework,
            dim,
        } => examples(g, name, params, output, framework.as_deref(), *dim),
    }
}

fn transform(input: &Path, op: TransformOp, k: Option<usize>, output: &Path) -> Result<Outcome, CliError> {
    let structure = read_structure(input)?;
    if op != TransformOp::Truncate && k.is_some() {
        return Err(CliError::Usage("only `truncate` takes a size".into()));
    }
    let doc = match (op, structure) {
        (TransformOp::Body, Structure::Hypergraph(h)) => Document::Graph(GraphDoc::from_graph(&h.body_graph())),
        (TransformOp::Body, Structure::Graph(g)) => Document::Graph(GraphDoc::from_graph(&g)),
        (TransformOp::Neighborhood, Structure::Graph(g)) => {
            Document::Hypergraph(HypergraphDoc::from_hypergraph(&g.neighborhood_hypergraph()))
        }
        (TransformOp::Square, Structure::Graph(g)) => Document::Graph(GraphDoc::from_graph(&g.squared())),
        (TransformOp::Truncate, s) => {
            let k = k.ok_or_else(|| CliError::Usage("`truncate` needs a size k".into()))?;
            let h = match s {
                Structure::Graph(g) => g.as_hypergraph(),
                Structure::Hypergraph(h) => h,
            };
            Document::Hypergraph(HypergraphDoc::from_hypergraph(&h.truncate(k)?))
        }
        (op, Structure::Hypergraph(_)) => {
            return Err(CliError::Usage(format!("`{op:?}` needs a graph input").to_lowercase()))
        }
    };
    write_document(output, &doc)?;
    let summary = match &doc {
        Document::Graph(g) => format!("graph: {} vertices, {} edges", g.vertex_count, g.edges.len()),
        Document::Hypergraph(h) => {
            format!("hypergraph: {} vertices, {} hyperedges", h.vertex_count, h.hyperedges.len())
        }
        _ => unreachable!(),
    };
    Ok(Outcome {
        report: Report::new("transform"),
        summary,
    })
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Rigid => exit::OK,
        Verdict::Flexible => exit::NEGATIVE,
        Verdict::Inconclusive => exit::INCONCLUSIVE,
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Rigid => "rigid",
        Verdict::Flexible => "flexible",
        Verdict::Inconclusive => "inconclusive",
    }
}

fn verdict_report(mode: &str, v: &RigidityVerdict, g: &GlobalOpts) -> Outcome {
    let mut report = Report::new("test");
    report.exit_code = verdict_code(v.verdict);
    report.verdict = Some(verdict_name(v.verdict).into());
    report.corank = Some(v.corank);
    report.expected_corank = Some(v.expected_corank);
    report.certificate = Some(serde_json::to_value(&v.certificate).expect("certificate serializes"));
    report.details = Some(json!({ "mode": mode, "one_sided": v.one_sided }));
    report.seed = Some(g.seed);
    report.tol = Some(g.tol);
    let summary = format!(
        "{mode}: {} (corank {}, expected {}){}",
        verdict_name(v.verdict),
        v.corank,
        v.expected_corank,
        if v.one_sided { ", one-sided" } else { "" }
    );
    Outcome { report, summary }
}

fn coordinates(g: &GlobalOpts, framework: Option<&Path>, v: usize, dim: usize) -> Result<Configuration, CliError> {
    let config = match framework {
        Some(path) => read_config(path)?,
        None => Configuration::random(v, dim, &mut seeded_rng(g.seed)),
    };
    if config.dim() != dim {
        return Err(CliError::Usage(format!(
            "framework is {}-dimensional but --dim is {dim}",
            config.dim()
        )));
    }
    if config.vertex_count() != v {
        return Err(CliError::Usage(format!(
            "framework has {} points for {v} vertices",
            config.vertex_count()
        )));
    }
    Ok(config)
}

fn test(g: &GlobalOpts, input: &Path, dim: usize, mode: TestMode, framework: Option<&Path>) -> Result<Outcome, CliError> {
    if dim == 0 {
        return Err(CliError::Usage("--dim must be positive".into()));
    }
    let structure = read_structure(input)?;
    let v = structure.vertex_count();
    match mode {
        TestMode::Generic => {
            if framework.is_some() {
                return Err(CliError::Usage("generic mode samples its own coordinates".into()));
            }
            let theta = match &structure {
                Structure::Graph(gr) => gr.neighborhood_hypergraph(),
                Structure::Hypergraph(h) => h.clone(),
            };
            let options = GenericTestOptions {
                trials: g.trials,
                seed: g.seed,
                prime: g.prime.unwrap_or(PrimeChoice::Fixed(DEFAULT_PRIME)),
            };
            let verdict = generic_affine_rigidity_test(&theta, dim, &options)?;
            Ok(verdict_report("generic", &verdict, g))
        }
        TestMode::Framework => {
            let path = framework.ok_or_else(|| CliError::Usage("framework mode needs --framework".into()))?;
            let config = coordinates(g, Some(path), v, dim)?;
            let theta = match &structure {
                Structure::Graph(gr) => gr.as_hypergraph(),
                Structure::Hypergraph(h) => h.clone(),
            };
            let verdict = affine_rigidity_test(&theta, &config, g.tol)?;
            Ok(verdict_report("framework", &verdict, g))
        }
        TestMode::Neighborhood => {
            let Structure::Graph(gr) = &structure else {
                return Err(CliError::Usage("neighborhood mode needs a graph".into()));
            };
            let config = coordinates(g, framework, v, dim)?;
            let verdict = neighborhood_affine_rigidity_test(gr, &config, g.tol, g.seed)?;
            Ok(verdict_report("neighborhood", &verdict, g))
        }
        TestMode::UniversalAffine | TestMode::UniversalPsd => {
            let config = coordinates(g, framework, v, dim)?;
            let f = match structure {
                Structure::Graph(gr) => Framework::of_graph(gr, config)?,
                Structure::Hypergraph(h) => Framework::of_hypergraph(h, config)?,
            };
            let route = if mode == TestMode::UniversalAffine {
                UniversalRoute::AffineRigidity
            } else {
                UniversalRoute::PsdStress
            };
            let out = universal_rigidity_certificate(&f, route, g.tol, g.seed)?;
            let mut report = Report::new("test");
            report.seed = Some(g.seed);
            report.tol = Some(g.tol);
            let summary = match out {
                UniversalOutcome::Certified(c) => {
                    report.verdict = Some("universally-rigid".into());
                    report.corank = Some(c.corank);
                    report.expected_corank = Some(dim + 1);
                    report.certificate = Some(json!({
                        "route": c.route,
                        "conic_shortcut": c.conic_shortcut,
                        "conic": c.conic,
                        "certified_edges": match &c.certified {
                            affine_rigidity::rigidity::Structure::Graph(sq) => Some(sq.edge_count()),
                            affine_rigidity::rigidity::Structure::Hypergraph(_) => None,
                        },
                    }));
                    let route = serde_json::to_value(c.route).expect("route serializes");
                    format!("universal rigidity certified ({} route)", route.as_str().unwrap_or("?"))
                }
                UniversalOutcome::Inconclusive { reason } => {
                    report.exit_code = exit::INCONCLUSIVE;
                    report.verdict = Some("inconclusive".into());
                    report.details = Some(json!({ "reason": reason }));
                    format!("inconclusive: {reason}")
                }
            };
            Ok(Outcome { report, summary })
        }
    }
}

fn boolean_outcome(command: &str, value: bool, details: serde_json::Value, summary: String) -> Outcome {
    let mut report = Report::new(command);
    report.exit_code = if value { exit::OK } else { exit::NEGATIVE };
    report.verdict = Some(value.to_string());
    report.details = Some(details);
    Outcome { report, summary }
}

fn connectivity(input: &Path, k: usize) -> Result<Outcome, CliError> {
    let graph = read_graph(input)?;
    let value = is_k_vertex_connected(&graph, k);
    let kappa = vertex_connectivity(&graph);
    Ok(boolean_outcome(
        "connectivity",
        value,
        json!({ "k": k, "vertex_connectivity": kappa }),
        format!("{k}-vertex-connected: {value} (connectivity {kappa})"),
    ))
}

fn zz(input: &Path, dim: usize) -> Result<Outcome, CliError> {
    let theta = match read_structure(input)? {
        Structure::Graph(g) => g.as_hypergraph(),
        Structure::Hypergraph(h) => h,
    };
    let value = theta.zha_zhang_condition(dim);
    Ok(boolean_outcome(
        "zz",
        value,
        json!({ "dim": dim }),
        format!("Zha–Zhang condition in dimension {dim}: {value}"),
    ))
}

fn random_map(d: usize, euclidean: bool, rng: &mut affine_rigidity::SeededRng) -> (DMatrix<f64>, DVector<f64>) {
    use rand::Rng;
    let t = DVector::from_fn(d, |_, _| rng.random_range(-10.0..10.0));
    loop {
        let m = DMatrix::from_fn(d, d, |_, _| rng.random_range(-1.0..1.0));
        if euclidean {
            return (m.qr().q(), t);
        }
        let s = m.singular_values();
        if s.min() > 0.1 * s.max() {
            return (m, t);
        }
    }
}

fn scans(g: &GlobalOpts, input: &Path, framework: &Path, trust: Trust, scramble: bool, output: &Path) -> Result<Outcome, CliError> {
    let theta = match read_structure(input)? {
        Structure::Graph(gr) => gr.neighborhood_hypergraph(),
        Structure::Hypergraph(h) => h,
    };
    let config = read_config(framework)?;
    let mut set = ScanSet::from_framework(&theta, &config, trust)?;
    if scramble {
        let mut rng = seeded_rng(g.seed);
        let moved = set
            .scans()
            .iter()
            .map(|s| {
                let (a, t) = random_map(set.dim(), trust == Trust::Euclidean, &mut rng);
                let c = Configuration::new(s.coords().clone())?.transformed(&a, &t);
                Scan::new(s.hyperedge().to_vec(), c.points().clone())
            })
            .collect::<Result<Vec<_>, _>>()?;
        set = ScanSet::new(set.vertex_count(), set.dim(), moved, trust)?;
    }
    write_document(output, &Document::ScanSet(ScanSetDoc::from_scanset(&set)))?;
    Ok(Outcome {
        report: Report::new("scans"),
        summary: format!("scan set: {} scans over {} vertices", set.scans().len(), set.vertex_count()),
    })
}

fn register(g: &GlobalOpts, input: &Path, mode: Option<Trust>, output: &Path) -> Result<Outcome, CliError> {
    let set = match read_document(input)? {
        Document::ScanSet(s) => s.to_scanset()?,
        other => {
            return Err(CliError::Usage(format!(
                "{}: expected a scan set, found a {}",
                input.display(),
                other.kind().name()
            )))
        }
    };
    let mode = mode.unwrap_or(set.trust());
    let reg = match mode {
        Trust::Affine => affine_register(&set, g.tol)?,
        Trust::Euclidean => euclidean_register(&set, g.tol)?,
    };
    write_document(output, &Document::Framework(FrameworkDoc::from_config(&reg.config)))?;
    let mut report = Report::new("register");
    report.corank = Some(reg.diagnostics.corank);
    report.expected_corank = Some(reg.diagnostics.expected_corank);
    report.residuals = Some(json!({
        "per_scan": reg.diagnostics.scan_residuals,
        "max": reg.diagnostics.max_scan_residual,
        "relative": reg.diagnostics.relative_scan_residual,
        "max_relative_length_error": reg.diagnostics.max_relative_length_error,
    }));
    report.details = Some(serde_json::to_value(&reg.diagnostics).expect("diagnostics serialize"));
    report.tol = Some(g.tol);
    let gauge = match reg.gauge {
        Gauge::Affine => "affine",
        Gauge::Euclidean => "Euclidean",
    };
    report.verdict = Some(gauge.to_lowercase());
    let summary = format!(
        "registered {} vertices up to {gauge} maps; max scan residual {:.3e} of the diameter",
        reg.config.vertex_count(),
        reg.diagnostics.relative_scan_residual
    );
    Ok(Outcome { report, summary })
}

fn embed(g: &GlobalOpts, input: &Path, dim: usize, output: &Path) -> Result<Outcome, CliError> {
    let graph = read_graph(input)?;
    let options = RubberBandOptions {
        seed: g.seed,
        ..RubberBandOptions::default()
    };
    let emb = rubber_band_embedding(&graph, dim, &options)?;
    write_document(output, &Document::Framework(FrameworkDoc::from_config(&emb.config)))?;
    let mut report = Report::new("embed");
    report.seed = Some(g.seed);
    report.details = Some(json!({
        "exceptional": emb.exceptional,
        "convex_containment": emb.convex_containment,
        "jitter_attempts": emb.jitter_attempts,
        "warnings": emb.warnings,
    }));
    Ok(Outcome {
        report,
        summary: format!(
            "rubber-band embedding in R^{dim}, pinned {:?}, convex containment {}",
            emb.exceptional, emb.convex_containment
        ),
    })
}

fn expect_params(name: &str, params: &[usize], n: usize) -> Result<(), CliError> {
    if params.len() == n {
        Ok(())
    } else {
        Err(CliError::Usage(format!("`{name}` takes {n} parameter(s), got {}", params.len())))
    }
}

fn examples(
    g: &GlobalOpts,
    name: &str,
    params: &[usize],
    output: &Path,
    framework: Option<&Path>,
    dim: Option<usize>,
) -> Result<Outcome, CliError> {
    let mut rng = seeded_rng(g.seed);
    let mut default_dim = 2;
    let one_based = |n: usize| Some((1..=n).map(|i| i.to_string()).collect::<Vec<_>>());
    let doc = match name {
        "fig1" => {
            expect_params(name, params, 0)?;
            let mut d = HypergraphDoc::from_hypergraph(&families::fig1());
            d.labels = one_based(d.vertex_count);
            Document::Hypergraph(d)
        }
        "fig2" => {
            expect_params(name, params, 0)?;
            Document::Graph(GraphDoc::from_graph(&families::fig2()))
        }
        "fig3" | "pentagon" => {
            expect_params(name, params, 0)?;
            let mut d = HypergraphDoc::from_hypergraph(&families::pentagon());
            d.labels = one_based(d.vertex_count);
            Document::Hypergraph(d)
        }
        "hextorus" => {
            expect_params(name, params, 2)?;
            Document::Graph(GraphDoc::from_graph(&families::hex_torus(params[0], params[1])?))
        }
        "star" => {
            expect_params(name, params, 1)?;
            Document::Graph(GraphDoc::from_graph(&families::star(params[0])?))
        }
        "wheel" => {
            expect_params(name, params, 1)?;
            Document::Graph(GraphDoc::from_graph(&families::wheel(params[0])?))
        }
        "trilateration" => {
            expect_params(name, params, 2)?;
            default_dim = params[0];
            Document::Graph(GraphDoc::from_graph(&families::trilateration(params[0], params[1], &mut rng)?))
        }
        other => return Err(CliError::Usage(format!("unknown example `{other}`"))),
    };
    let v = match &doc {
        Document::Graph(d) => d.vertex_count,
        Document::Hypergraph(d) => d.vertex_count,
        _ => unreachable!(),
    };
    write_document(output, &doc)?;
    let mut summary = format!("{name}: {} on {v} vertices", doc.kind().name());
    if let Some(path) = framework {
        let dim = dim.unwrap_or(default_dim);
        if dim == 0 {
            return Err(CliError::Usage("--dim must be positive".into()));
        }
        let config = Configuration::random(v, dim, &mut rng);
        write_text(path, &Document::Framework(FrameworkDoc::from_config(&config)).to_json())?;
        summary.push_str(&format!(", generic coordinates in R^{dim}"));
    }
    let mut report = Report::new("examples");
    report.seed = Some(g.seed);
    Ok(Outcome { report, summary })
}
