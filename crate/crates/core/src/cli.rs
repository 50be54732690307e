//! Command-line frontend. Exit codes: 0 success, 1 validation or
//! certification failure, 2 malformed or unsupported input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::certify::{certify_all, CertifyConfig};
use crate::drawing::{self, validate_standard};
use crate::graph::Graph;
use crate::io::{model_from_json, model_to_json, reduction_to_json, ModelFile};
use crate::model::{
    planarity_verdict, precision_witness, straight_line_crossings, validate_model, ModelError,
    PlanarityVerdict,
};
use crate::reduction::{double_model, reduce, ReductionError};
use crate::render::render_svg;
use crate::solvers::{
    solve_max_bisection, solve_max_cut, Limits, Method, SolverError, DEFAULT_BRUTE_LIMIT,
    DEFAULT_WIDTH_CEILING,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Failure(_) => 1,
            Self::Input(_) => 2,
        }
    }
}

type CliResult = Result<(), CliError>;

#[derive(Debug, Parser)]
#[command(name = "udg-maxcut", version, about = "Max-Cut reduction to unit disk graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compile a graph of maximum degree 4 into a unit disk graph model.
    Reduce {
        #[command(flatten)]
        io: InOut,
        /// Also write an SVG picture of the model.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Solve Max-Cut or Max-Bisection on a graph file or model JSON.
    Solve {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, conflicts_with = "bisection")]
        cut: bool,
        #[arg(long)]
        bisection: bool,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Check the distance rule of a model and report its precision.
    Validate {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Decide whether the straight-line drawing of a model is plane.
    Planarity {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Draw a model as SVG.
    Render {
        #[command(flatten)]
        io: InOut,
    },
    /// Dump the standardized mesh drawing of a graph as JSON.
    Draw {
        #[command(flatten)]
        io: InOut,
    },
    /// Two far-apart copies of a model, for the bisection variant.
    Double {
        #[command(flatten)]
        io: InOut,
    },
    /// Run the randomized cut-identity suites.
    Certify {
        #[arg(long, default_value_t = CertifyConfig::default().seed)]
        seed: u64,
        /// Cases per suite (overrides the defaults 200 / 100 / 20).
        #[arg(long)]
        iterations: Option<usize>,
        /// Drop the gadget's cycle-edge precondition; expected to fail.
        #[arg(long)]
        relax: bool,
        /// Write the full report as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct InOut {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SolverArgs {
    #[arg(long, default_value = "auto")]
    pub method: Method,
    #[arg(long, default_value_t = DEFAULT_BRUTE_LIMIT, value_parser = positive)]
    pub brute_limit: usize,
    #[arg(long, default_value_t = DEFAULT_WIDTH_CEILING, value_parser = positive)]
    pub max_width: usize,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> CliResult {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Failure(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    read(path)?.parse().map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_model(path: &Path) -> Result<ModelFile, CliError> {
    model_from_json(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// A graph file, or the graph of a model JSON file.
fn read_any_graph(path: &Path) -> Result<Graph, CliError> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        let file = model_from_json(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        Ok(file.model.into_parts().0)
    } else {
        text.parse().map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }
}

fn model_error(e: ModelError) -> CliError {
    match e {
        ModelError::TheoremViolation(_) => CliError::Failure(e.to_string()),
        other => CliError::Input(other.to_string()),
    }
}

fn cmd_reduce(io: &InOut, svg: Option<&Path>) -> CliResult {
    let g = read_graph(&io.input)?;
    let r = reduce(&g).map_err(|e| match e {
        ReductionError::Unsupported { .. } => CliError::Input(e.to_string()),
        other => CliError::Failure(other.to_string()),
    })?;
    emit(io.out.as_deref(), &reduction_to_json(&r))?;
    if let Some(p) = svg {
        emit(Some(p), &render_svg(&r.model, Some(&r.provenance)))?;
    }
    let summary = format!(
        "k {}\nt {}\nvertices {}\nedges {}",
        r.k,
        r.t,
        r.result().n(),
        r.result().m()
    );
    if io.out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(())
}

fn cmd_solve(input: &Path, bisection: bool, args: &SolverArgs) -> CliResult {
    let g = read_any_graph(input)?;
    let limits = Limits {
        brute_limit: args.brute_limit,
        width_ceiling: args.max_width,
    };
    let sol = if bisection {
        solve_max_bisection(&g, args.method, limits)
    } else {
        solve_max_cut(&g, args.method, limits)
    }
    .map_err(|e| match e {
        SolverError::OddBisection(_) | SolverError::Unsupported(_) | SolverError::Graph(_) => {
            CliError::Input(e.to_string())
        }
        other => CliError::Failure(other.to_string()),
    })?;
    println!("{} {}", if bisection { "bisection" } else { "cut" }, sol.size);
    match sol.width {
        Some(w) => println!("method {} (width {w})", sol.method),
        None => println!("method {}", sol.method),
    }
    let sides: Vec<String> = sol.cut.side().iter().map(u8::to_string).collect();
    println!("side {}", sides.join(" "));
    Ok(())
}

fn cmd_validate(input: &Path) -> CliResult {
    let file = read_model(input)?;
    let m = &file.model;
    let report = validate_model(m).map_err(model_error)?;
    println!("vertices {}\nedges {}", m.graph().n(), m.graph().m());
    if m.graph().n() >= 2 {
        let w = precision_witness(m).map_err(model_error)?;
        println!("precision2 {} (vertices {} and {})", w.dist2, w.u, w.v);
    }
    if report.passes() {
        println!("valid");
        return Ok(());
    }
    for w in report.long_edges.iter().take(10) {
        println!("long edge {}-{} dist2 {}", w.u, w.v, w.dist2);
    }
    for w in report.close_non_edges.iter().take(10) {
        println!("close non-edge {}-{} dist2 {}", w.u, w.v, w.dist2);
    }
    Err(CliError::Failure(format!(
        "invalid model: {} long edges, {} close non-edges",
        report.long_edges.len(),
        report.close_non_edges.len()
    )))
}

fn cmd_planarity(input: &Path) -> CliResult {
    let file = read_model(input)?;
    if !validate_model(&file.model).map_err(model_error)?.passes() {
        return Err(CliError::Failure("model violates the distance rule".into()));
    }
    let verdict = planarity_verdict(&file.model).map_err(model_error)?;
    println!("verdict {}", verdict.as_str());
    if verdict == PlanarityVerdict::NotPlanarDrawing {
        let witnesses = straight_line_crossings(&file.model);
        println!("witnesses {}", witnesses.len());
        println!("{}", serde_json::to_string(&witnesses[0]).expect("witness serializes"));
    }
    Ok(())
}

fn cmd_render(io: &InOut) -> CliResult {
    let file = read_model(&io.input)?;
    emit(io.out.as_deref(), &render_svg(&file.model, file.provenance.as_deref()))
}

fn cmd_draw(io: &InOut) -> CliResult {
    let g = read_graph(&io.input)?;
    let d = drawing::mesh_draw(&g).map_err(|e| CliError::Input(e.to_string()))?;
    let d = drawing::standardize(&d);
    if !validate_standard(&d).all_pass() {
        return Err(CliError::Failure("standardized drawing is not standard".into()));
    }
    emit(io.out.as_deref(), &(d.to_json() + "\n"))
}

fn cmd_double(io: &InOut) -> CliResult {
    let file = read_model(&io.input)?;
    emit(io.out.as_deref(), &model_to_json(&double_model(&file.model)))
}

fn cmd_certify(seed: u64, iterations: Option<usize>, relax: bool, out: Option<&Path>) -> CliResult {
    let mut cfg = match iterations {
        Some(n) => CertifyConfig::with_iterations(seed, n),
        None => CertifyConfig {
            seed,
            ..CertifyConfig::default()
        },
    };
    cfg.relax = relax;
    let reports = certify_all(&cfg);
    for r in &reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        println!("{status} {} ({} cases)", r.name, r.checked);
        if let Some(c) = r.failures.first() {
            println!("{}", serde_json::to_string(c).expect("counterexample serializes"));
        }
    }
    if let Some(p) = out {
        let text = serde_json::to_string_pretty(&reports).expect("reports serialize");
        emit(Some(p), &(text + "\n"))?;
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err(CliError::Failure("certification failed".into()))
    }
}

pub fn run(cli: Cli) -> CliResult {
    match &cli.command {
        Command::Reduce { io, svg } => cmd_reduce(io, svg.as_deref()),
        Command::Solve {
            input,
            bisection,
            solver,
            ..
        } => cmd_solve(input, *bisection, solver),
        Command::Validate { input } => cmd_validate(input),
        Command::Planarity { input } => cmd_planarity(input),
        Command::Render { io } => cmd_render(io),
        Command::Draw { io } => cmd_draw(io),
        Command::Double { io } => cmd_double(io),
        Command::Certify {
            seed,
            iterations,
            relax,
            out,
        } => cmd_certify(*seed, *iterations, *relax, out.as_deref()),
    }
}

/// Parses the process arguments, runs, and maps errors to exit codes.
pub fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
