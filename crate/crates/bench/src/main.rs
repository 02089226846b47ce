use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use marc_bench::{
    compute_profile, default_solvers, emit_profile_svg, read_records, run_grid, write_profile,
    write_records, BenchError, DimSet, Metric, SolverKind,
};
use marc_core::problems::{self, check_gradient, perturbed_point, GRADIENT_TOLERANCE};
use marc_core::{make_params, Objective, ParamOverrides, StoppingRule};

/// Benchmarks for adaptive cubic regularization with scalar curvature.
#[derive(Parser, Debug)]
#[command(name = "marc-bench", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one solver on one problem and print a summary line
    Run(RunArgs),
    /// Run a solver × problem grid and write the results as CSV
    Bench(BenchArgs),
    /// Build a performance profile from a results CSV
    Profile(ProfileArgs),
    /// Compare a problem's gradient against central differences
    CheckGrad(CheckGradArgs),
    /// List the problem catalog
    List,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Stop {
    /// ‖g‖∞ ≤ 1e-6·(1 + |f|)
    Rel,
    /// ‖g‖₂ ≤ max(1e-5, 1e-9·‖g₀‖₂)
    Abs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Default,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Dims {
    Paper,
    Small,
}

#[derive(clap::Args, Debug)]
struct RunArgs {
    /// MARC1-3, MARC1-3-MONO or TRMSM1-3
    #[arg(long, value_parser = parse_solver)]
    solver: SolverKind,
    #[arg(long)]
    problem: String,
    /// Problem size; defaults to the catalog's default
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long)]
    theta: Option<f64>,
    #[arg(long)]
    psi: Option<f64>,
    #[arg(long)]
    eta_nm: Option<f64>,
    #[arg(long)]
    sigma0: Option<f64>,
    #[arg(long)]
    gamma_min: Option<f64>,
    #[arg(long, value_enum)]
    stop: Option<Stop>,
    #[arg(long)]
    max_iter: Option<usize>,
    /// Write the per-iteration trace as a JSON array
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Start from the standard point plus a seeded uniform perturbation in [-0.5, 0.5]
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(clap::Args, Debug)]
struct BenchArgs {
    #[arg(long, value_enum, default_value_t = Suite::Default)]
    suite: Suite,
    #[arg(long)]
    out: PathBuf,
    /// Worker threads
    #[arg(long, default_value_t = 1)]
    parallel: usize,
    /// Comma-separated solver names (default: MARC1-3 and TRMSM1-3)
    #[arg(long, value_delimiter = ',', value_parser = parse_solver)]
    solvers: Option<Vec<SolverKind>>,
    #[arg(long, value_enum, default_value_t = Dims::Paper)]
    dims: Dims,
}

#[derive(clap::Args, Debug)]
struct ProfileArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value = "cpu", value_parser = |s: &str| s.parse::<Metric>())]
    metric: Metric,
    #[arg(long)]
    out_data: PathBuf,
    #[arg(long)]
    out_svg: Option<PathBuf>,
    /// Right end of the τ axis (default: just past the largest finite ratio)
    #[arg(long)]
    tau_max: Option<f64>,
    #[arg(long)]
    log_scale: bool,
}

#[derive(clap::Args, Debug)]
struct CheckGradArgs {
    #[arg(long)]
    problem: String,
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, default_value_t = 1e-6)]
    h: f64,
}

fn parse_solver(s: &str) -> Result<SolverKind, String> {
    s.parse().map_err(|e: BenchError| e.to_string())
}

/// Failure with its exit status: 2 for bad input, 1 for failed work.
struct Failure(u8, String);

impl Failure {
    fn usage(e: impl ToString) -> Self {
        Failure(2, e.to_string())
    }

    fn failed(e: impl ToString) -> Self {
        Failure(1, e.to_string())
    }
}

impl From<BenchError> for Failure {
    fn from(e: BenchError) -> Self {
        match e {
            BenchError::UnknownSolver(_)
            | BenchError::Problem(_)
            | BenchError::Params(_)
            | BenchError::EmptySelection(_)
            | BenchError::ZeroParallelism => Failure::usage(e),
            _ => Failure::failed(e),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(a) => cmd_run(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Profile(a) => cmd_profile(a),
        Command::CheckGrad(a) => cmd_check_grad(a),
        Command::List => {
            cmd_list();
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn construct(name: &str, dim: Option<usize>) -> Result<problems::TestProblem, Failure> {
    let spec = problems::lookup(name).map_err(Failure::usage)?;
    spec.construct(dim.unwrap_or(spec.default_dim))
        .map_err(Failure::usage)
}

fn cmd_run(a: RunArgs) -> Result<(), Failure> {
    let problem = construct(&a.problem, a.dim)?;
    let params = make_params(&ParamOverrides {
        theta: a.theta,
        psi: a.psi,
        eta_nm: a.eta_nm,
        sigma0: a.sigma0,
        gamma_min: a.gamma_min,
        max_iter: a.max_iter,
        stop_rule: a.stop.map(|s| match s {
            Stop::Rel => StoppingRule::RelativeInf,
            Stop::Abs => StoppingRule::AbsoluteMixed,
        }),
        ..ParamOverrides::default()
    })
    .map_err(Failure::usage)?;
    let x0 = match a.seed {
        Some(seed) => perturbed_point(&problem.standard_start(), seed, 0.5),
        None => problem.standard_start(),
    };
    let report = a
        .solver
        .run(&problem, &x0, &params)
        .map_err(Failure::usage)?;
    println!(
        "{} n={} {}: {} iters={} nf={} ng={} f_final={:.10e} g_inf={:.3e}",
        problem.name(),
        problem.dim(),
        a.solver,
        report.status,
        report.iters,
        report.counter.nf,
        report.counter.ng,
        report.f_final,
        report.g_norm_final
    );
    if let Some(path) = a.trace {
        let io = |source| BenchError::Io {
            path: path.clone(),
            source,
        };
        let file = File::create(&path).map_err(io)?;
        serde_json::to_writer(BufWriter::new(file), &report.trace).map_err(|source| {
            BenchError::Json {
                path: path.clone(),
                source,
            }
        })?;
    }
    Ok(())
}

fn cmd_bench(a: BenchArgs) -> Result<(), Failure> {
    let Suite::Default = a.suite;
    let specs: Vec<_> = problems::catalog().iter().collect();
    let solvers = a.solvers.unwrap_or_else(default_solvers);
    let dims = match a.dims {
        Dims::Paper => DimSet::Reference,
        Dims::Small => DimSet::Small,
    };
    let params = make_params(&ParamOverrides::default()).map_err(Failure::usage)?;
    let records = run_grid(&specs, &solvers, dims, &params, a.parallel)?;
    write_records(&a.out, &records)?;
    let converged = records
        .iter()
        .filter(|r| r.status == marc_core::RunStatus::Converged)
        .count();
    println!(
        "{} runs, {} converged; wrote {}",
        records.len(),
        converged,
        a.out.display()
    );
    Ok(())
}

fn cmd_profile(a: ProfileArgs) -> Result<(), Failure> {
    let records = read_records(&a.input)?;
    let table = compute_profile(&records, a.metric).map_err(Failure::usage)?;
    write_profile(&a.out_data, &table)?;
    if let Some(svg) = a.out_svg {
        let tau_max = a.tau_max.unwrap_or_else(|| {
            let widest = table
                .ratios
                .iter()
                .flatten()
                .copied()
                .filter(|r| r.is_finite())
                .fold(1.0, f64::max);
            (widest * 1.05).max(2.0)
        });
        emit_profile_svg(&table, &svg, tau_max, a.log_scale).map_err(|e| match e {
            BenchError::Profile(_) => Failure::usage(e),
            _ => Failure::failed(e),
        })?;
    }
    for (s, name) in table.solvers.iter().enumerate() {
        println!(
            "{name}: best on {:.3}, solved {:.3}",
            table.rho(s, 1.0),
            table.solved_fraction(s)
        );
    }
    Ok(())
}

fn cmd_check_grad(a: CheckGradArgs) -> Result<(), Failure> {
    if !(a.h > 0.0 && a.h.is_finite()) {
        return Err(Failure::usage(format!("--h must be positive, got {}", a.h)));
    }
    let problem = construct(&a.problem, a.dim)?;
    let x0 = problem.standard_start();
    let err = check_gradient(&problem, &x0, a.h);
    println!(
        "{} n={}: max relative error {err:.3e} (tolerance {GRADIENT_TOLERANCE:.0e})",
        problem.name(),
        problem.dim()
    );
    if err > GRADIENT_TOLERANCE {
        return Err(Failure::failed(format!(
            "{} gradient check failed",
            problem.name()
        )));
    }
    Ok(())
}

fn cmd_list() {
    println!(
        "{:<10} {:>8} {:>8}  constraint",
        "problem", "small", "paper"
    );
    for spec in problems::catalog() {
        println!(
            "{:<10} {:>8} {:>8}  {}",
            spec.name, spec.default_dim, spec.reference_dim, spec.constraint
        );
    }
}
