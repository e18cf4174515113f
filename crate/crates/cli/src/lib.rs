//! The `mapkit` command line. `run` is the whole program minus process exit,
//! so tests can drive it in-process.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use mapkit::crossing::crossing_profile;
use mapkit::decomposition::io::write_nice;
use mapkit::decomposition::EXACT_MAX_VERTICES;
use mapkit::graph_core::{parse_witness, validate_witness};
use mapkit::pipeline::Decomposer;
use mapkit::solvers::{verify_certificate, CapOverride, Certificate};
use mapkit::testbench::{brute_force_solve, generate, GenSpec};
use mapkit::{Instance, Problem, SolveOptions, SolveResult};

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "mapkit", version, about = "Few-cliques decompositions and solvers for map graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a witness file is a planar bipartite graph.
    Validate {
        file: PathBuf,
        /// Run a full planarity test instead of only the edge-count bound.
        #[arg(long)]
        strict: bool,
    },
    /// Build the decomposition pipeline and report its widths.
    Decompose {
        file: PathBuf,
        #[command(flatten)]
        build: BuildArgs,
        /// Write the nice decomposition of the witness in `.td` format.
        #[arg(long, value_name = "PATH")]
        emit_td: Option<PathBuf>,
        /// Write the few-cliques decomposition of the map graph.
        #[arg(long, value_name = "PATH")]
        emit_fcd: Option<PathBuf>,
    },
    /// Solve one problem on a witness file.
    Solve {
        #[arg(value_parser = parse_problem)]
        problem: Problem,
        file: PathBuf,
        /// Decision parameter; without it the optimum is reported.
        #[arg(short, long)]
        k: Option<usize>,
        #[command(flatten)]
        dp: DpArgs,
        #[command(flatten)]
        build: BuildArgs,
        /// Cross-check against the brute-force oracle when the instance is small enough.
        #[arg(long)]
        oracle: bool,
        /// Print the certificate after the answer.
        #[arg(long)]
        cert: bool,
        /// Write the crossing profile of the certificate as `node,crossing` CSV.
        #[arg(long, value_name = "PATH")]
        emit_profile: Option<PathBuf>,
    },
    /// Write a generated witness.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated family parameters: star `leaves`, grid `rows,cols`,
        /// incidence `n,p`, planar-bipartite `n,ratio`.
        #[arg(long)]
        params: String,
        #[arg(long, env = "MAPKIT_SEED", default_value_t = 0)]
        seed: u64,
        /// Output path; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve every `.tmap` file in a directory for k = 1..=kmax and write a CSV report.
    Bench {
        dir: PathBuf,
        #[arg(long, value_parser = parse_problem)]
        problem: Problem,
        #[arg(long)]
        kmax: usize,
        #[arg(short, long)]
        output: PathBuf,
        /// Per-node state counts as `instance,problem,k,node,states`.
        #[arg(long, value_name = "PATH")]
        nodes: Option<PathBuf>,
        /// Crossing profiles of the certificates as `instance,problem,k,node,crossing`.
        #[arg(long, value_name = "PATH")]
        profiles: Option<PathBuf>,
        #[command(flatten)]
        dp: DpArgs,
        #[command(flatten)]
        build: BuildArgs,
    },
}

#[derive(Debug, clap::Args)]
pub struct BuildArgs {
    /// Exact decomposition of the witness instead of the min-degree heuristic.
    #[arg(long)]
    exact: bool,
    #[arg(long, env = "MAPKIT_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, clap::Args)]
pub struct DpArgs {
    /// Per-node endpoint cap: a number, `none`, or `default`.
    #[arg(long, value_parser = parse_cap, default_value = "default")]
    cap: CapOverride,
    /// Skip early exits and greedy bounds so the DP runs in full.
    #[arg(long)]
    exhaustive: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Star,
    Grid,
    Incidence,
    PlanarBipartite,
}

fn parse_problem(s: &str) -> std::result::Result<Problem, String> {
    Problem::from_str(s)
}

fn parse_cap(s: &str) -> std::result::Result<CapOverride, String> {
    match s {
        "default" => Ok(CapOverride::Default),
        "none" => Ok(CapOverride::Unbounded),
        _ => s.parse().map(CapOverride::Uniform).map_err(|_| format!("bad cap `{s}`")),
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Invalid(String),
    Mismatch(String),
    Io(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Mismatch(_) => EXIT_MISMATCH,
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Invalid(m) | CliError::Mismatch(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn io_err(path: &Path, e: impl fmt::Display) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = if e.use_stderr() { e.render().to_string() } else { e.to_string() };
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

pub fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    match cmd {
        Command::Validate { file, strict } => validate(&file, strict, out, err),
        Command::Decompose { file, build, emit_td, emit_fcd } => {
            let inst = load(&file, &build)?;
            let w = &inst.witness;
            let line = format!(
                "nations={} specials={} map_edges={} width_B={} nodes={} width_D={} maxbag_Dprime={}",
                w.nation_count(),
                w.special_count(),
                inst.map.graph().edge_count(),
                inst.td.width(),
                inst.fcd.node_count(),
                inst.fcd.width_d(),
                inst.fcd.max_bag(),
            );
            emit(out, &line)?;
            if let Some(p) = emit_td {
                write_file(&p, &write_nice(&inst.nice, w.graph().n()))?;
            }
            if let Some(p) = emit_fcd {
                write_file(&p, &inst.fcd.to_text())?;
            }
            Ok(())
        }
        Command::Solve { problem, file, k, dp, build, oracle, cert, emit_profile } => {
            let inst = load(&file, &build)?;
            let r = inst.solve(problem, &options(k, &dp));
            emit(out, &r.headline())?;
            if cert {
                put(out, &r.certificate_text())?;
            }
            emit(out, &stats_line(&r))?;
            if let Some(p) = emit_profile {
                let edges = certificate_edges(&r.certificate);
                write_file(&p, &crossing_profile(&edges, &inst.fcd).to_csv())?;
            }
            if oracle {
                cross_check(&inst, &r, err)?;
            }
            Ok(())
        }
        Command::Gen { family, params, seed, output } => {
            let spec = gen_spec(family, &params, seed)?;
            let w = generate(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
            match output {
                Some(p) => write_file(&p, &w.to_text()),
                None => put(out, &w.to_text()),
            }
        }
        Command::Bench { dir, problem, kmax, output, nodes, profiles, dp, build } => {
            bench(&dir, problem, kmax, &output, nodes.as_deref(), profiles.as_deref(), &dp, &build, err)
        }
    }
}

fn emit(out: &mut dyn Write, line: &str) -> Result<()> {
    put(out, &format!("{line}\n"))
}

/// Writes to stdout; a closed pipe (as with `| head`) is not an error.
fn put(out: &mut dyn Write, text: &str) -> Result<()> {
    match out.write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Io(e.to_string())),
        _ => Ok(()),
    }
}

fn write_file(p: &Path, text: &str) -> Result<()> {
    fs::write(p, text).map_err(|e| io_err(p, e))
}

fn csv_err(p: &Path) -> impl Fn(csv::Error) -> CliError + '_ {
    move |e| io_err(p, e)
}

fn read_file(p: &Path) -> Result<String> {
    fs::read_to_string(p).map_err(|e| CliError::Invalid(format!("{}: {e}", p.display())))
}

fn validate(file: &Path, strict: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let text = read_file(file)?;
    let w = parse_witness(&text).map_err(|e| CliError::Invalid(format!("{}: {e}", file.display())))?;
    let report = validate_witness(&w, strict);
    if !report.violations.is_empty() {
        for v in &report.violations {
            let _ = writeln!(err, "{}: {v}", file.display());
        }
        return Err(CliError::Invalid(format!("{}: {} violation(s)", file.display(), report.violations.len())));
    }
    emit(
        out,
        &format!("OK nations={} specials={} edges={}", w.nation_count(), w.special_count(), w.graph().edge_count()),
    )
}

fn load(file: &Path, build: &BuildArgs) -> Result<Instance> {
    let text = read_file(file)?;
    let how = if build.exact {
        Decomposer::Exact { budget: EXACT_MAX_VERTICES }
    } else {
        Decomposer::Heuristic { seed: build.seed }
    };
    Instance::from_text(&text, how).map_err(|e| CliError::Invalid(format!("{}: {e}", file.display())))
}

fn options(k: Option<usize>, dp: &DpArgs) -> SolveOptions {
    SolveOptions { k, cap: dp.cap, skip_early_exit: dp.exhaustive, exhaustive: dp.exhaustive }
}

fn cap_text(r: &SolveResult) -> String {
    r.stats.cap.map_or("none".to_string(), |c| c.to_string())
}

/// Deterministic summary; timings are left out so output is reproducible.
pub fn stats_line(r: &SolveResult) -> String {
    format!(
        "c width_D={} maxbag_Dprime={} cap={} max_states={} early_exit={}",
        r.stats.width_d,
        r.stats.maxbag_dprime,
        cap_text(r),
        r.stats.max_states,
        r.stats.early_exit.unwrap_or("none"),
    )
}

fn certificate_edges(c: &Certificate) -> Vec<(usize, usize)> {
    let ring = |v: &[usize]| -> Vec<(usize, usize)> {
        (0..v.len()).map(|i| (v[i], v[(i + 1) % v.len()])).collect()
    };
    match c {
        Certificate::Cycle(v) => ring(v),
        Certificate::Cycles(cs) => cs.iter().flat_map(|v| ring(v)).collect(),
        Certificate::Path(v) => v.windows(2).map(|w| (w[0], w[1])).collect(),
        _ => Vec::new(),
    }
}

fn cross_check(inst: &Instance, r: &SolveResult, err: &mut dyn Write) -> Result<()> {
    let g = inst.map.graph();
    if let Err(m) = verify_certificate(g, r.problem, r.value, &r.certificate) {
        if r.stats.early_exit.is_none() || !matches!(r.certificate, Certificate::Clique(_)) {
            return Err(CliError::Mismatch(format!("certificate rejected: {m}")));
        }
    }
    let (best, _) = match brute_force_solve(&inst.map, r.problem) {
        Ok(x) => x,
        Err(e) => {
            let _ = writeln!(err, "oracle skipped: {} nations exceed the limit of {}", e.n, e.limit);
            return Ok(());
        }
    };
    let agrees = match r.k {
        Some(k) => r.decision == Some(r.problem.accepts(best, k)),
        None => r.value == Some(best),
    };
    if !agrees {
        return Err(CliError::Mismatch(format!("solver says {}, oracle optimum is {best}", r.headline())));
    }
    let _ = writeln!(err, "oracle agrees: optimum {best}");
    Ok(())
}

fn gen_spec(family: Family, params: &str, seed: u64) -> Result<GenSpec> {
    let parts: Vec<&str> = params.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let bad = || CliError::Usage(format!("bad --params `{params}` for {family:?}"));
    let int = |s: &str| s.parse::<usize>().map_err(|_| bad());
    let real = |s: &str| s.parse::<f64>().map_err(|_| bad());
    match (family, parts.as_slice()) {
        (Family::Star, [l]) => Ok(GenSpec::Star { leaves: int(l)? }),
        (Family::Grid, [r, c]) => Ok(GenSpec::Grid { rows: int(r)?, cols: int(c)? }),
        (Family::Incidence, [n, p]) => Ok(GenSpec::RandomIncidence { n: int(n)?, p: real(p)?, seed }),
        (Family::PlanarBipartite, [n, q]) => {
            Ok(GenSpec::RandomPlanarBipartite { n: int(n)?, special_ratio: real(q)?, seed })
        }
        _ => Err(bad()),
    }
}

#[allow(clippy::too_many_arguments)]
fn bench(
    dir: &Path,
    problem: Problem,
    kmax: usize,
    output: &Path,
    nodes: Option<&Path>,
    profiles: Option<&Path>,
    dp: &DpArgs,
    build: &BuildArgs,
    err: &mut dyn Write,
) -> Result<()> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| io_err(dir, e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "tmap"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(CliError::Invalid(format!("{}: no .tmap files", dir.display())));
    }
    let mut report = csv::Writer::from_path(output).map_err(csv_err(output))?;
    report
        .write_record(["instance", "problem", "k", "width_D", "maxbag_Dprime", "cap", "max_states", "answer", "millis"])
        .map_err(csv_err(output))?;
    let mut node_out = match nodes {
        Some(p) => {
            let mut w = csv::Writer::from_path(p).map_err(csv_err(p))?;
            w.write_record(["instance", "problem", "k", "node", "states"]).map_err(csv_err(p))?;
            Some((w, p))
        }
        None => None,
    };
    let mut prof_out = match profiles {
        Some(p) => {
            let mut w = csv::Writer::from_path(p).map_err(csv_err(p))?;
            w.write_record(["instance", "problem", "k", "node", "crossing"]).map_err(csv_err(p))?;
            Some((w, p))
        }
        None => None,
    };
    for file in &files {
        let inst = load(file, build)?;
        let name = file.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        for k in 1..=kmax {
            let r = inst.solve(problem, &options(Some(k), dp));
            let ks = k.to_string();
            report
                .write_record([
                    name.as_str(),
                    problem.name(),
                    &ks,
                    &r.stats.width_d.to_string(),
                    &r.stats.maxbag_dprime.to_string(),
                    &cap_text(&r),
                    &r.stats.max_states.to_string(),
                    &r.headline(),
                    &r.stats.millis.to_string(),
                ])
                .map_err(csv_err(output))?;
            if let Some((w, p)) = node_out.as_mut() {
                for (t, s) in r.stats.node_states.iter().enumerate() {
                    w.write_record([name.as_str(), problem.name(), &ks, &(t + 1).to_string(), &s.to_string()])
                        .map_err(csv_err(p))?;
                }
            }
            if let Some((w, p)) = prof_out.as_mut() {
                let edges = certificate_edges(&r.certificate);
                if !edges.is_empty() {
                    for (t, c) in crossing_profile(&edges, &inst.fcd).counts.iter().enumerate() {
                        w.write_record([name.as_str(), problem.name(), &ks, &(t + 1).to_string(), &c.to_string()])
                            .map_err(csv_err(p))?;
                    }
                }
            }
        }
        let _ = writeln!(err, "{name}: done");
    }
    report.flush().map_err(|e| io_err(output, e))?;
    if let Some((mut w, p)) = node_out {
        w.flush().map_err(|e| io_err(p, e))?;
    }
    if let Some((mut w, p)) = prof_out {
        w.flush().map_err(|e| io_err(p, e))?;
    }
    Ok(())
}
