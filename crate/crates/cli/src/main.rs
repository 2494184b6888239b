//! `unikirch`: exact Kirchhoff indices, family construction, enumeration and
//! verification of extremal claims for unicyclic graphs.
//!
//! Exit codes: 0 success, 1 a computed failure (disconnected input, failing
//! verification), 2 usage or input errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use unikirch::enumeration::{count_by_matching_number, enumerate_unicyclic, EnumerationError};
use unikirch::families::recognize;
use unikirch::graph::wiener_index;
use unikirch::resistance::{kirchhoff_vertex_sums, ResistanceError, ResistanceMatrix};
use unikirch::verification::{run_named, Suite, SuiteOptions, DEFAULT_SEED};
use unikirch::{extremal_search, FamilySpec, Graph, GraphError, Invariant, Rational};

#[derive(Parser)]
#[command(name = "unikirch", version, about = "Exact Kirchhoff indices of unicyclic graphs")]
struct Cli {
    /// Worker threads for enumeration and verification (default: all cores).
    #[arg(long, global = true, env = "UNIKIRCH_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kirchhoff index of a graph file.
    Compute(ComputeArgs),
    /// Writes the graph of a named family.
    Construct(ConstructArgs),
    /// Lists unicyclic graphs up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Minimizers of an invariant over unicyclic graphs with n vertices and matching number m.
    Extremal(ExtremalArgs),
    /// Runs a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long)]
    input: PathBuf,
    /// Prints the strict upper triangle of the resistance matrix.
    #[arg(long)]
    resistance_matrix: bool,
    /// Prints the resistance sum at every vertex.
    #[arg(long)]
    vertex_sums: bool,
    /// Prints the Wiener index too.
    #[arg(long)]
    wiener: bool,
    /// Appends a decimal approximation to each value.
    #[arg(long)]
    decimal: bool,
}

#[derive(Args)]
struct ConstructArgs {
    /// `C{n}`, `P{n}`, `U(k,t,i,j)` or `Unm(n,m)`.
    #[arg(long)]
    family: String,
    /// Output file (default: standard output).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Only graphs with this matching number.
    #[arg(long)]
    m: Option<usize>,
    /// Prints `n,m,count` rows and an `n,*,total` row.
    #[arg(long)]
    count_only: bool,
    /// Writes one graph file per class into this directory.
    #[arg(long)]
    emit: Option<PathBuf>,
}

#[derive(Args)]
struct ExtremalArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, default_value = "kirchhoff", value_parser = parse_invariant)]
    invariant: Invariant,
    #[arg(long)]
    decimal: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, value_parser = parse_suite)]
    suite: String,
    /// Largest vertex count for enumeration suites.
    #[arg(long)]
    max_n: Option<usize>,
    /// Wider enumeration windows.
    #[arg(long)]
    extended: bool,
    /// Writes the report as JSON.
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Random instances for the merge suite.
    #[arg(long, default_value_t = 200)]
    trials: usize,
}

fn parse_invariant(s: &str) -> Result<Invariant, String> {
    s.parse()
}

fn parse_suite(s: &str) -> Result<String, String> {
    if s == "all" || Suite::from_name(s).is_some() {
        Ok(s.to_string())
    } else {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        Err(format!("expected one of: all, {}", names.join(", ")))
    }
}

/// A one-line diagnostic and the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }

    fn failed(message: impl ToString) -> Self {
        Failure {
            code: 1,
            message: message.to_string(),
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Disconnected => Failure::failed(e),
            other => Failure::usage(other),
        }
    }
}

impl From<ResistanceError> for Failure {
    fn from(e: ResistanceError) -> Self {
        match e {
            ResistanceError::Graph(g) => g.into(),
            other => Failure::usage(other),
        }
    }
}

impl From<EnumerationError> for Failure {
    fn from(e: EnumerationError) -> Self {
        match e {
            EnumerationError::Graph(g) => g.into(),
            other => Failure::usage(other),
        }
    }
}

type Outcome = Result<(), Failure>;

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::usage(format!("{}: {e}", path.display()))
}

fn value_text(q: &Rational, decimal: bool) -> String {
    if decimal {
        format!("{q}  (decimal {})", q.to_decimal_string())
    } else {
        q.to_string()
    }
}

fn compute(args: &ComputeArgs, out: &mut impl Write) -> Outcome {
    let text = fs::read_to_string(&args.input).map_err(|e| io_failure(&args.input, e))?;
    let g = Graph::parse(&text)?;
    let matrix = ResistanceMatrix::compute(&g)?;
    let d = args.decimal;
    writeln!(out, "Kf = {}", value_text(&matrix.kirchhoff(), d)).ok();
    if args.wiener {
        writeln!(out, "W = {}", value_text(&wiener_index(&g)?, d)).ok();
    }
    if args.vertex_sums {
        writeln!(out, "vertex sums:").ok();
        for (u, s) in kirchhoff_vertex_sums(&g)?.iter().enumerate() {
            writeln!(out, "{u} {}", value_text(s, d)).ok();
        }
    }
    if args.resistance_matrix {
        writeln!(out, "resistance matrix:").ok();
        write!(out, "{}", matrix.to_text()).ok();
    }
    Ok(())
}

fn construct(args: &ConstructArgs, out: &mut impl Write) -> Outcome {
    let spec: FamilySpec = args.family.parse().map_err(Failure::usage)?;
    let g = spec.build().map_err(Failure::usage)?;
    match &args.out {
        Some(path) => fs::write(path, g.to_text()).map_err(|e| io_failure(path, e))?,
        None => write!(out, "{}", g.to_text()).unwrap_or(()),
    }
    Ok(())
}

fn enumerate(args: &EnumerateArgs, out: &mut impl Write) -> Outcome {
    let n = args.n;
    if args.count_only {
        let counts = count_by_matching_number(n)?;
        let mut total = 0;
        for (m, &c) in counts.iter().enumerate() {
            if c > 0 && args.m.is_none_or(|want| want == m) {
                writeln!(out, "{n},{m},{c}").ok();
                total += c;
            }
        }
        writeln!(out, "{n},*,{total}").ok();
        return Ok(());
    }
    if let Some(dir) = &args.emit {
        fs::create_dir_all(dir).map_err(|e| io_failure(dir, e))?;
    }
    for class in enumerate_unicyclic(n, args.m)? {
        let hash = class.code.stable_hash();
        writeln!(out, "{hash} m={} {}", class.matching_number, class.code).ok();
        if let Some(dir) = &args.emit {
            let path = dir.join(format!("{hash}.txt"));
            fs::write(&path, class.graph.to_text()).map_err(|e| io_failure(&path, e))?;
        }
    }
    Ok(())
}

fn extremal(args: &ExtremalArgs, out: &mut impl Write) -> Outcome {
    let result = extremal_search(args.n, args.m, args.invariant)?;
    for class in &result.minimizers {
        let name = recognize(&class.graph)
            .map(|s| s.to_string())
            .unwrap_or_else(|| class.code.to_string());
        writeln!(out, "{name}  {}", value_text(&result.value, args.decimal)).ok();
    }
    Ok(())
}

fn verify(args: &VerifyArgs, out: &mut impl Write) -> Outcome {
    let opts = SuiteOptions {
        max_n: args.max_n,
        extended: args.extended,
        seed: args.seed,
        trials: args.trials,
    };
    let report = run_named(&args.suite, &opts).map_err(Failure::usage)?;
    write!(out, "{}", report.to_table()).ok();
    if let Some(path) = &args.json {
        fs::write(path, report.to_json()).map_err(|e| io_failure(path, e))?;
    }
    if report.passed() {
        Ok(())
    } else {
        let failed: Vec<&str> = report.failures().map(|c| c.id.as_str()).collect();
        Err(Failure::failed(format!(
            "{} case(s) failed: {}",
            failed.len(),
            failed.join(", ")
        )))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("unikirch: error: {e}");
            return ExitCode::from(2);
        }
    }
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let outcome = match &cli.command {
        Command::Compute(a) => compute(a, &mut out),
        Command::Construct(a) => construct(a, &mut out),
        Command::Enumerate(a) => enumerate(a, &mut out),
        Command::Extremal(a) => extremal(a, &mut out),
        Command::Verify(a) => verify(a, &mut out),
    };
    out.flush().ok();
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("unikirch: error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
