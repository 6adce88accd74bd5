//! `startrans`: build, certify and inspect star-transposition Cayley graphs
//! and their quotients.
//!
//! Exit codes: 0 success, 1 a mathematical check failed, 2 invalid
//! arguments or capacity, 3 I/O.

mod report;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use startrans_core::certify::{certify_spectrum_lower_bounds, CertificateStatus, CertifyOptions};
use startrans_core::combinatorics::factorial;
use startrans_core::exact::{exact_nullity, verify_eigenvector};
use startrans_core::export::{label_table, to_edge_list, to_matrix_market};
use startrans_core::graph::{
    build, covering_projection, iso_partial_to_cayley, schreier_projection, verify_cover, verify_equivariance,
    verify_isomorphism, MapCheck, VertexMap,
};
use startrans_core::limits::memory_estimate_bytes;
use startrans_core::numeric::{dense_symmetric_eigenvalues, integrality_check, DEFAULT_TOLERANCE};
use startrans_core::{Error, GraphKind, Limits, LoopyGraph};

use report::{render, GraphPayload, MapsPayload, SpectrumPayload};

#[derive(Debug, Parser)]
#[command(name = "startrans", version, about = "Star-transposition Cayley graphs: build, certify, inspect")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a graph and export it.
    Build(BuildArgs),
    /// Certify the eigenvalue multiplicity lower bounds of cayley(n).
    Certify(CertifyArgs),
    /// Numeric spectrum, exact nullity, or exact check of a user vector.
    Spectrum(SpectrumArgs),
    /// Emit and verify one of the structural vertex maps.
    Maps(MapsArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Cayley,
    Partial,
    Schreier,
    K2,
}

#[derive(Debug, Args)]
struct GraphArgs {
    #[arg(long, value_enum)]
    graph: Family,
    #[arg(long)]
    n: usize,
    /// Tuple length for `partial`.
    #[arg(long)]
    d: Option<usize>,
    /// Coset length for `schreier`.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Debug, Args)]
struct CapacityArgs {
    /// Override every size limit; prints a memory estimate first.
    #[arg(long)]
    max_vertices: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Mtx,
    Edges,
    Json,
}

#[derive(Debug, Args)]
struct BuildArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, value_enum, default_value = "mtx")]
    format: Format,
    /// Output file; stdout if absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    capacity: CapacityArgs,
}

#[derive(Debug, Args)]
struct CertifyArgs {
    #[arg(long)]
    n: usize,
    /// Report file; stdout if absent.
    #[arg(long, alias = "out")]
    emit: Option<PathBuf>,
    /// Skip the exact nullity cross-check.
    #[arg(long)]
    no_nullity: bool,
    #[command(flatten)]
    capacity: CapacityArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Numeric,
    Nullity,
    Verify,
}

#[derive(Debug, Args)]
struct SpectrumArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, value_enum, default_value = "numeric")]
    method: Method,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<i64>,
    /// JSON array of integers, one per vertex, for `--method verify`.
    #[arg(long)]
    vector: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    capacity: CapacityArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapFamily {
    Iso,
    Schreier,
    Cover,
}

#[derive(Debug, Args)]
struct MapsArgs {
    #[arg(long, value_enum)]
    kind: MapFamily,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: Option<usize>,
    /// Verify this vertex map instead of the built-in one: a `maps` report
    /// or its `payload.map` object.
    #[arg(long)]
    assignment: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    capacity: CapacityArgs,
}

#[derive(Debug)]
enum Failure {
    /// A mathematical check did not hold.
    Check(String),
    Usage(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Check(m) => write!(f, "verification failed: {m}"),
            Failure::Usage(m) => write!(f, "error: {m}"),
            Failure::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::Capacity { .. } | Error::DimensionMismatch { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Check(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build(a) => cmd_build(a),
        Command::Certify(a) => cmd_certify(a),
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Maps(a) => cmd_maps(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{f}");
            ExitCode::from(f.code())
        }
    }
}

impl GraphArgs {
    fn kind(&self) -> Result<GraphKind, Failure> {
        let unused = |flag: &str| Failure::Usage(format!("--{flag} does not apply to --graph {:?}", self.graph));
        let missing = |flag: &str| Failure::Usage(format!("--graph {:?} needs --{flag}", self.graph));
        let kind = match self.graph {
            Family::Cayley | Family::K2 => {
                if self.d.is_some() {
                    return Err(unused("d"));
                }
                if self.k.is_some() {
                    return Err(unused("k"));
                }
                if matches!(self.graph, Family::Cayley) {
                    GraphKind::Cayley { n: self.n }
                } else {
                    GraphKind::K2 { n: self.n }
                }
            }
            Family::Partial => {
                if self.k.is_some() {
                    return Err(unused("k"));
                }
                GraphKind::Partial {
                    d: self.d.ok_or_else(|| missing("d"))?,
                    n: self.n,
                }
            }
            Family::Schreier => {
                if self.d.is_some() {
                    return Err(unused("d"));
                }
                GraphKind::Schreier {
                    k: self.k.ok_or_else(|| missing("k"))?,
                    n: self.n,
                }
            }
        };
        kind.validate()?;
        Ok(kind)
    }
}

impl CapacityArgs {
    fn limits(&self) -> Limits {
        match self.max_vertices {
            None => Limits::default(),
            Some(v) => {
                let mib = memory_estimate_bytes(v) as f64 / (1024.0 * 1024.0);
                eprintln!("size limits set to {v} vertices; estimated peak memory {mib:.1} MiB");
                Limits::uniform(v)
            }
        }
    }
}

fn write_output(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn cmd_build(a: BuildArgs) -> Outcome {
    let started = Instant::now();
    let kind = a.graph.kind()?;
    let g = build(kind, &a.capacity.limits())?;
    let text = match a.format {
        Format::Mtx => to_matrix_market(&g),
        Format::Edges => to_edge_list(&g),
        Format::Json => render("graph", &graph_payload(&g), started),
    };
    write_output(a.out.as_deref(), &text)?;
    let loops: Vec<String> = (0..g.vertex_count()).map(|v| g.loops(v).to_string()).collect();
    eprintln!(
        "{kind}: {} vertices, {} edges, {} loops",
        g.vertex_count(),
        g.edge_count(),
        g.loop_count()
    );
    if g.has_loops() && g.vertex_count() <= 64 {
        eprintln!("loops per vertex: ({})", loops.join(","));
    }
    Ok(())
}

fn graph_payload(g: &LoopyGraph) -> GraphPayload<'_> {
    let mut edges = Vec::new();
    for u in 0..g.vertex_count() {
        if g.loops(u) > 0 {
            edges.push([u + 1, u + 1, g.loops(u) as usize]);
        }
        for &(v, m) in g.neighbors(u).iter().filter(|&&(v, _)| v > u) {
            edges.push([u + 1, v + 1, m as usize]);
        }
    }
    GraphPayload {
        graph: g.kind(),
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        loop_count: g.loop_count(),
        regular_degree: g.regularity(),
        vertices: label_table(g).vertices,
        edges,
    }
}

fn cmd_certify(a: CertifyArgs) -> Outcome {
    let started = Instant::now();
    let options = CertifyOptions {
        limits: a.capacity.limits(),
        exact_nullity: !a.no_nullity,
        ..CertifyOptions::default()
    };
    let report = certify_spectrum_lower_bounds(a.n, &options)?;
    write_output(a.emit.as_deref(), &render("certificate", &report, started))?;

    eprintln!("{:>6} {:>6} {:>6} {:>8} {:>8}  construction", "lambda", "bound", "rank", "nullity", "verified");
    for e in &report.per_eigenvalue {
        let nullity = e.exact_nullity.map_or("-".to_string(), |x| x.to_string());
        eprintln!(
            "{:>6} {:>6} {:>6} {:>8} {:>8}  {}",
            e.lambda, e.lower_bound, e.certified_rank, nullity, e.verified, e.construction
        );
    }
    if let Some(s) = &report.integrality {
        eprintln!("numeric spectrum integral within {:e}: {}", s.tolerance, s.integral);
    }
    eprintln!("status: {:?}", report.status);
    match report.status {
        CertificateStatus::Certified => Ok(()),
        CertificateStatus::Failed => {
            let f = report.failure.as_ref().expect("failed reports name a failure");
            Err(Failure::Check(format!("lambda {}: {}: {}", f.lambda, f.vector, f.detail)))
        }
        CertificateStatus::Partial => {
            let short: Vec<String> = report
                .per_eigenvalue
                .iter()
                .filter(|e| (e.certified_rank as u64) < e.lower_bound)
                .map(|e| format!("lambda {}: rank {} below bound {}", e.lambda, e.certified_rank, e.lower_bound))
                .collect();
            Err(Failure::Check(short.join("; ")))
        }
    }
}

fn cmd_spectrum(a: SpectrumArgs) -> Outcome {
    let started = Instant::now();
    let kind = a.graph.kind()?;
    let limits = a.capacity.limits();
    let need_lambda = || a.lambda.ok_or_else(|| Failure::Usage("this method needs --lambda".into()));
    let g = build(kind, &limits)?;
    let payload = match a.method {
        Method::Numeric => {
            let report = integrality_check(&dense_symmetric_eigenvalues(&g, &limits)?, DEFAULT_TOLERANCE);
            for c in &report.clusters {
                eprintln!("{:>4} x{:<5} max deviation {:.1e}", c.value, c.count, c.max_deviation);
            }
            eprintln!("integral: {}", report.integral);
            SpectrumPayload::Numeric { graph: kind, report }
        }
        Method::Nullity => {
            let lambda = need_lambda()?;
            let nullity = exact_nullity(&g, lambda, &limits)?;
            eprintln!("{kind}: dim ker(A - ({lambda})I) = {nullity}");
            SpectrumPayload::Nullity {
                graph: kind,
                lambda,
                nullity,
            }
        }
        Method::Verify => {
            let lambda = need_lambda()?;
            let path = a
                .vector
                .as_deref()
                .ok_or_else(|| Failure::Usage("--method verify needs --vector".into()))?;
            let values: Vec<i64> = read_json(path)?;
            let check = verify_eigenvector(&g, &values, lambda)?;
            SpectrumPayload::Verify {
                graph: kind,
                lambda,
                passed: check.passed,
                first_failure: check.first_failure,
            }
        }
    };
    write_output(a.out.as_deref(), &render("spectrum", &payload, started))?;
    if let SpectrumPayload::Verify {
        passed: false,
        first_failure: Some(m),
        lambda,
        ..
    } = &payload
    {
        return Err(Failure::Check(format!(
            "(A·v)[{}] = {} but {lambda}·v[{}] = {}",
            m.coordinate, m.product, m.coordinate, m.expected
        )));
    }
    Ok(())
}

fn cmd_maps(a: MapsArgs) -> Outcome {
    let started = Instant::now();
    let limits = a.capacity.limits();
    let n = a.n;
    if a.kind != MapFamily::Schreier && a.k.is_some() {
        return Err(Failure::Usage("--k only applies to --kind schreier".into()));
    }
    let (builtin, domain, codomain, expected_fiber) = match a.kind {
        MapFamily::Iso => {
            let map = iso_partial_to_cayley(n)?;
            (map, GraphKind::Partial { d: n - 1, n }, GraphKind::Cayley { n }, 1)
        }
        MapFamily::Schreier => {
            let k = a.k.ok_or_else(|| Failure::Usage("--kind schreier needs --k".into()))?;
            let map = schreier_projection(k, n)?;
            (map, GraphKind::Cayley { n }, GraphKind::Schreier { k, n }, fiber(n - k)?)
        }
        MapFamily::Cover => {
            let map = covering_projection(n)?;
            (map, GraphKind::Cayley { n }, GraphKind::K2 { n }, fiber(n - 2)?)
        }
    };
    let map: VertexMap = match &a.assignment {
        None => builtin,
        Some(path) => {
            let mut value: serde_json::Value = read_json(path)?;
            // a whole `maps` report is accepted as well as a bare map
            if let Some(inner) = value.pointer_mut("/payload/map") {
                value = inner.take();
            }
            let user: VertexMap =
                serde_json::from_value(value).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            if (user.kind, user.domain, user.codomain) != (builtin.kind, builtin.domain, builtin.codomain) {
                return Err(Failure::Usage(format!(
                    "{} is a {:?} map {} -> {}, expected {:?} {} -> {}",
                    path.display(),
                    user.kind,
                    user.domain,
                    user.codomain,
                    builtin.kind,
                    builtin.domain,
                    builtin.codomain
                )));
            }
            if (user.domain_size, user.codomain_size) != (builtin.domain_size, builtin.codomain_size)
                || user.assignment.len() != user.domain_size
                || user.assignment.iter().any(|&v| v >= user.codomain_size)
            {
                return Err(Failure::Usage(format!("{}: assignment has the wrong shape", path.display())));
            }
            user
        }
    };
    let top = build(domain, &limits)?;
    let base = build(codomain, &limits)?;
    let mut check = match a.kind {
        _ if a.kind == MapFamily::Iso && !map.is_bijective() => MapCheck {
            holds: false,
            failure: Some("map is not a bijection".into()),
        },
        MapFamily::Iso => verify_isomorphism(&map, &top, &base)?,
        MapFamily::Schreier => verify_equivariance(&map, &top, &base)?,
        MapFamily::Cover => verify_cover(&map, &top, &base)?,
    };
    let fiber_size = map.uniform_fiber_size();
    if check.holds && fiber_size != Some(expected_fiber) {
        check = MapCheck {
            holds: false,
            failure: Some(format!("fibers {fiber_size:?}, expected uniform size {expected_fiber}")),
        };
    }
    let payload = MapsPayload {
        map: &map,
        check: &check,
        fiber_size,
        expected_fiber_size: expected_fiber,
    };
    write_output(a.out.as_deref(), &render("map", &payload, started))?;
    eprintln!(
        "{:?} {domain} -> {codomain}: {} -> {} vertices, fiber size {}",
        map.kind,
        map.domain_size,
        map.codomain_size,
        fiber_size.map_or("non-uniform".to_string(), |s| s.to_string())
    );
    match check.failure {
        None => {
            eprintln!("pass");
            Ok(())
        }
        Some(f) => Err(Failure::Check(f)),
    }
}

fn fiber(m: usize) -> Result<usize, Failure> {
    factorial(m)
        .and_then(|f| usize::try_from(f).ok())
        .ok_or_else(|| Failure::Usage("fiber size overflows".into()))
}
