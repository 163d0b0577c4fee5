//! Command-line front end: measure computation, horizon sweeps, oracle
//! checks and DOT export for edge-list graphs.
//!
//! Exit codes: 0 success / checks pass, 1 oracle check failed, 2 input could
//! not be read or parsed, 3 disconnected graph, 4 usage error.

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nalgebra::DVector;
use ucentral::control::{
    constant_optimal_input, gramian_quadrature, gramian_spectral, simulate, solve_min_energy,
    ControlSetup,
};
use ucentral::generate;
use ucentral::graph::{laplacian, parse_edge_list, Graph};
use ucentral::report::{centrality_csv, dot_export, sweep_csv, CentralityReport};
use ucentral::spectral::decompose;
use ucentral::sweep::{run_sweep, SweepOptions};
use ucentral::ucentrality::terminal_deviation;
use ucentral::{compute_measure, Error, Measure};

#[derive(Parser)]
#[command(
    name = "ucentral",
    version,
    about = "Control-horizon centrality for Laplacian consensus dynamics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one centrality measure and report scores, ranking and the
    /// central node set
    Centrality(CentralityArgs),
    /// Score every node over a log-spaced horizon grid and correlate the
    /// rankings against the structural measures
    Sweep(SweepArgs),
    /// Check the closed-form control solution against quadrature and
    /// simulation for one controlled node
    Oracle(OracleArgs),
    /// Emit DOT text with nodes colored from warm (central) to cool
    ExportDot(ExportDotArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Edge-list file: one edge per line, two whitespace-separated labels,
    /// '#' comments
    #[arg(short, long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Built-in generator: tree:N:SEED, path:N, star:N, cycle:N, complete:N
    #[arg(long = "gen", value_name = "SPEC", conflicts_with = "input")]
    generator: Option<String>,
}

#[derive(Args)]
struct CentralityArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Measure: u, linv, degree, eigenvector, closeness, variance,
    /// cf-closeness, cf-variance
    #[arg(short, long)]
    measure: String,
    /// Control horizon (required for -m u, ignored otherwise)
    #[arg(long)]
    tf: Option<f64>,
    /// Aggregate-state threshold
    #[arg(long = "c", default_value_t = 1.0)]
    threshold: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of standard output
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Smallest horizon in the grid
    #[arg(long = "tf-min", default_value_t = 1e-3)]
    tf_min: f64,
    /// Largest horizon in the grid
    #[arg(long = "tf-max", default_value_t = 1e3)]
    tf_max: f64,
    /// Number of log-spaced grid points
    #[arg(long, default_value_t = 7)]
    points: usize,
    /// Aggregate-state threshold
    #[arg(long = "c", default_value_t = 1.0)]
    threshold: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of standard output
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Label of the controlled node
    #[arg(long)]
    node: String,
    /// Control horizon
    #[arg(long)]
    tf: f64,
    /// Aggregate-state threshold
    #[arg(long = "c", default_value_t = 1.0)]
    threshold: f64,
    /// Runge-Kutta steps
    #[arg(long, default_value_t = 1000)]
    steps: usize,
    /// Simpson quadrature panels (even, >= 2)
    #[arg(long, default_value_t = 256)]
    panels: usize,
    /// Write the report here instead of standard output
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ExportDotArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Measure that drives the node colors
    #[arg(short, long)]
    measure: String,
    /// Control horizon (required for -m u, ignored otherwise)
    #[arg(long)]
    tf: Option<f64>,
    /// Aggregate-state threshold
    #[arg(long = "c", default_value_t = 1.0)]
    threshold: f64,
    /// Write the DOT text here instead of standard output
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

enum AppError {
    Usage(String),
    Input(String),
    Lib(Error),
}

impl AppError {
    fn code(&self) -> u8 {
        match self {
            AppError::Usage(_) => 4,
            AppError::Input(_) => 2,
            AppError::Lib(Error::Parse { .. }) => 2,
            AppError::Lib(Error::Disconnected) => 3,
            AppError::Lib(Error::UnknownLabel(_)) => 4,
            AppError::Lib(_) => 1,
        }
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Usage(msg) | AppError::Input(msg) => f.write_str(msg),
            AppError::Lib(err) => err.fmt(f),
        }
    }
}

impl From<Error> for AppError {
    fn from(err: Error) -> Self {
        AppError::Lib(err)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            eprint!("{err}");
            return ExitCode::from(4);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("ucentral: {err}");
            ExitCode::from(err.code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, AppError> {
    match cli.command {
        Command::Centrality(args) => cmd_centrality(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::ExportDot(args) => cmd_export_dot(args),
    }
}

fn load_graph(input: &InputArgs) -> Result<Graph, AppError> {
    match (&input.input, &input.generator) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|err| AppError::Input(format!("cannot read {}: {err}", path.display())))?;
            Ok(parse_edge_list(&text)?)
        }
        (None, Some(spec)) => generate_graph(spec),
        (None, None) => Err(AppError::Usage(
            "either --input or --gen is required".into(),
        )),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    }
}

fn generate_graph(spec: &str) -> Result<Graph, AppError> {
    let usage = || {
        AppError::Usage(format!(
            "bad generator spec {spec:?}; expected tree:N:SEED, path:N, star:N, cycle:N or complete:N"
        ))
    };
    let parts: Vec<&str> = spec.split(':').collect();
    let size = |token: &str| token.parse::<usize>().map_err(|_| usage());
    match parts.as_slice() {
        ["tree", n, seed] => {
            let n = size(n)?;
            let seed = seed.parse::<u64>().map_err(|_| usage())?;
            require(n >= 1, "tree needs N >= 1")?;
            Ok(generate::random_tree(n, seed))
        }
        ["path", n] => {
            let n = size(n)?;
            require(n >= 1, "path needs N >= 1")?;
            Ok(generate::path(n))
        }
        ["star", n] => {
            let n = size(n)?;
            require(n >= 1, "star needs N >= 1")?;
            Ok(generate::star(n))
        }
        ["cycle", n] => {
            let n = size(n)?;
            require(n >= 3, "cycle needs N >= 3")?;
            Ok(generate::cycle(n))
        }
        ["complete", n] => {
            let n = size(n)?;
            require(n >= 1, "complete needs N >= 1")?;
            Ok(generate::complete(n))
        }
        _ => Err(usage()),
    }
}

fn require(ok: bool, msg: &str) -> Result<(), AppError> {
    if ok {
        Ok(())
    } else {
        Err(AppError::Usage(msg.into()))
    }
}

fn positive(value: f64, name: &str) -> Result<(), AppError> {
    require(
        value > 0.0 && value.is_finite(),
        &format!("{name} must be positive and finite"),
    )
}

fn parse_measure(id: &str) -> Result<Measure, AppError> {
    id.parse::<Measure>().map_err(AppError::Usage)
}

/// Horizon handling shared by `centrality` and `export-dot`: required for the
/// horizon-dependent measure, reported as absent for structural ones.
fn effective_horizon(measure: Measure, tf: Option<f64>) -> Result<Option<f64>, AppError> {
    if measure == Measure::U {
        let tf = tf.ok_or_else(|| AppError::Usage("--tf is required for -m u".into()))?;
        positive(tf, "--tf")?;
        Ok(Some(tf))
    } else {
        Ok(None)
    }
}

fn write_output(target: &Option<PathBuf>, text: &str) -> Result<(), AppError> {
    match target {
        Some(path) => std::fs::write(path, text)
            .map_err(|err| AppError::Input(format!("cannot write {}: {err}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_centrality(args: CentralityArgs) -> Result<u8, AppError> {
    let measure = parse_measure(&args.measure)?;
    let horizon = effective_horizon(measure, args.tf)?;
    positive(args.threshold, "--c")?;
    let g = load_graph(&args.input)?;
    let cv = compute_measure(&g, measure, horizon, args.threshold)?;
    let text = match args.format {
        Format::Json => {
            let mut json = CentralityReport::new(&g, &cv, horizon, args.threshold).to_json();
            json.push('\n');
            json
        }
        Format::Csv => centrality_csv(&g, &cv),
    };
    write_output(&args.output, &text)?;
    Ok(0)
}

fn cmd_sweep(args: SweepArgs) -> Result<u8, AppError> {
    positive(args.tf_min, "--tf-min")?;
    positive(args.tf_max, "--tf-max")?;
    require(
        args.tf_min < args.tf_max,
        "--tf-min must be smaller than --tf-max",
    )?;
    require(args.points >= 2, "--points must be at least 2")?;
    positive(args.threshold, "--c")?;
    let g = load_graph(&args.input)?;
    require(
        g.node_count() >= 2,
        "a sweep needs at least two nodes to rank",
    )?;
    let opts = SweepOptions {
        tf_min: args.tf_min,
        tf_max: args.tf_max,
        points: args.points,
        c: args.threshold,
    };
    let report = run_sweep(&g, &opts)?;
    let text = match args.format {
        Format::Json => {
            let mut json = serde_json::to_string_pretty(&report).expect("sweep serializes");
            json.push('\n');
            json
        }
        Format::Csv => sweep_csv(&report),
    };
    write_output(&args.output, &text)?;
    Ok(0)
}

fn cmd_export_dot(args: ExportDotArgs) -> Result<u8, AppError> {
    let measure = parse_measure(&args.measure)?;
    let horizon = effective_horizon(measure, args.tf)?;
    positive(args.threshold, "--c")?;
    let g = load_graph(&args.input)?;
    let cv = compute_measure(&g, measure, horizon, args.threshold)?;
    write_output(&args.output, &dot_export(&g, &cv))?;
    Ok(0)
}

const DEVIATION_TOL: f64 = 1e-6;
const GRAMIAN_RTOL: f64 = 1e-7;
const ENERGY_RTOL: f64 = 1e-9;

fn cmd_oracle(args: OracleArgs) -> Result<u8, AppError> {
    positive(args.tf, "--tf")?;
    positive(args.threshold, "--c")?;
    require(args.steps >= 1, "--steps must be at least 1")?;
    require(
        args.panels >= 2 && args.panels.is_multiple_of(2),
        "--panels must be even and >= 2",
    )?;
    let g = load_graph(&args.input)?;
    let node = g
        .node_index(&args.node)
        .ok_or_else(|| AppError::Lib(Error::UnknownLabel(args.node.clone())))?;

    let n = g.node_count();
    let c = args.threshold;
    let l = laplacian(&g);
    let dec = decompose(&l)?;
    let setup = ControlSetup::single_node(node, args.tf, c);

    let spectral = gramian_spectral(&dec, &setup);
    let quadrature = gramian_quadrature(&l, &setup, args.panels)?;
    let gramian_gap = (&spectral - quadrature).norm();
    let gramian_tol = GRAMIAN_RTOL * spectral.norm().max(1.0);

    let levels = constant_optimal_input(&setup, &spectral);
    let solution = solve_min_energy(spectral, c)?;
    let energy_expected = c * c / args.tf;
    let energy_gap = (solution.energy - energy_expected).abs() / energy_expected;

    let closed = terminal_deviation(&dec, node, args.tf, c);
    let trajectory = simulate(&l, &setup, &levels, args.steps);
    let simulated = trajectory.terminal() - DVector::from_element(n, c / n as f64);
    let deviation_gap = (&simulated - &closed).norm();
    let deviation_tol = DEVIATION_TOL * c;

    let checks = [
        (
            "deviation closed-form vs simulation",
            deviation_gap,
            deviation_tol,
        ),
        ("gramian spectral vs quadrature", gramian_gap, gramian_tol),
        ("energy vs c^2/tf", energy_gap, ENERGY_RTOL),
    ];

    let mut text = String::new();
    text.push_str(&format!(
        "node {:?} (index {node}) of {n}-node graph with {} edges\n",
        args.node,
        g.edge_count()
    ));
    text.push_str(&format!(
        "tf {:e}  c {:e}  steps {}  panels {}\n",
        args.tf, c, args.steps, args.panels
    ));
    text.push_str(&format!(
        "closed-form deviation norm  {:.12e}\n",
        closed.norm()
    ));
    text.push_str(&format!(
        "simulated deviation norm    {:.12e}\n",
        simulated.norm()
    ));
    text.push_str(&format!(
        "energy                      {:.12e} (expected {:.12e})\n",
        solution.energy, energy_expected
    ));
    let mut all_ok = true;
    for (name, gap, tol) in checks {
        let ok = gap <= tol;
        all_ok &= ok;
        text.push_str(&format!(
            "check {:<38} {:.3e} <= {:.3e}  {}\n",
            name,
            gap,
            tol,
            if ok { "PASS" } else { "FAIL" }
        ));
    }
    text.push_str(if all_ok {
        "overall PASS\n"
    } else {
        "overall FAIL\n"
    });
    write_output(&args.output, &text)?;
    Ok(if all_ok { 0 } else { 1 })
}
