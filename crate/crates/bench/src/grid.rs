use std::time::Instant;

use marc_core::problems::{ProblemSpec, TestProblem};
use marc_core::{Objective, RunReport, RunStatus, SolverParams};
use rayon::prelude::*;

use crate::error::BenchError;
use crate::solver::SolverKind;

/// Dimension preset for a suite run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimSet {
    /// Each problem's reference size, 1000 to 10000.
    Reference,
    /// Each problem's default size, between 50 and 500.
    Small,
}

impl DimSet {
    pub fn dim_for(self, spec: &ProblemSpec) -> usize {
        match self {
            DimSet::Reference => spec.reference_dim,
            DimSet::Small => spec.default_dim,
        }
    }
}

/// One row of the results table.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub problem: String,
    pub dim: usize,
    pub solver: String,
    pub status: RunStatus,
    pub iters: usize,
    pub nf: u64,
    pub ng: u64,
    /// Wall-clock seconds for the run.
    pub cpu_seconds: f64,
    pub f_final: f64,
    /// Infinity norm of the final gradient.
    pub g_norm_final: f64,
}

impl BenchRecord {
    /// Same record with the timing zeroed, for comparisons across runs.
    pub fn without_timing(&self) -> BenchRecord {
        BenchRecord {
            cpu_seconds: 0.0,
            ..self.clone()
        }
    }
}

/// A grid cell: its record plus the full report when the solver ran.
#[derive(Debug, Clone)]
pub struct GridRun {
    pub record: BenchRecord,
    pub report: Option<RunReport>,
}

/// Runs one solver on one problem from its standard start.
pub fn run_case(problem: &TestProblem, solver: SolverKind, params: &SolverParams) -> GridRun {
    let x0 = problem.standard_start();
    let started = Instant::now();
    let result = solver.run(problem, &x0, params);
    let cpu_seconds = started.elapsed().as_secs_f64();
    let base = BenchRecord {
        problem: problem.name().to_string(),
        dim: problem.dim(),
        solver: solver.to_string(),
        status: RunStatus::NumericalFailure,
        iters: 0,
        nf: 0,
        ng: 0,
        cpu_seconds,
        f_final: f64::NAN,
        g_norm_final: f64::NAN,
    };
    match result {
        Ok(report) => GridRun {
            record: BenchRecord {
                status: report.status,
                iters: report.iters,
                nf: report.counter.nf,
                ng: report.counter.ng,
                f_final: report.f_final,
                g_norm_final: report.g_norm_final,
                ..base
            },
            report: Some(report),
        },
        // a setup error is a failed cell, not a failed grid
        Err(_) => GridRun {
            record: base,
            report: None,
        },
    }
}

/// Every (problem, solver) pair, problems outermost, on a pool of
/// `parallelism` threads. Output order does not depend on the pool size.
pub fn run_grid_reports(
    problems: &[&'static ProblemSpec],
    solvers: &[SolverKind],
    dims: DimSet,
    params: &SolverParams,
    parallelism: usize,
) -> Result<Vec<GridRun>, BenchError> {
    if problems.is_empty() {
        return Err(BenchError::EmptySelection("problems"));
    }
    if solvers.is_empty() {
        return Err(BenchError::EmptySelection("solvers"));
    }
    if parallelism == 0 {
        return Err(BenchError::ZeroParallelism);
    }
    params.validate()?;
    let mut cases = Vec::with_capacity(problems.len() * solvers.len());
    for spec in problems {
        let problem = spec.construct(dims.dim_for(spec))?;
        cases.extend(solvers.iter().map(|&s| (problem, s)));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build()?;
    Ok(pool.install(|| {
        cases
            .par_iter()
            .map(|(p, s)| run_case(p, *s, params))
            .collect()
    }))
}

/// [`run_grid_reports`] without the traces.
pub fn run_grid(
    problems: &[&'static ProblemSpec],
    solvers: &[SolverKind],
    dims: DimSet,
    params: &SolverParams,
    parallelism: usize,
) -> Result<Vec<BenchRecord>, BenchError> {
    Ok(
        run_grid_reports(problems, solvers, dims, params, parallelism)?
            .into_iter()
            .map(|r| r.record)
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::default_solvers;
    use marc_core::problems;

    #[test]
    fn unit_grid_has_one_record() {
        let p = [problems::lookup("DQDRTIC").unwrap()];
        let s = ["MARC3".parse().unwrap()];
        let out = run_grid(&p, &s, DimSet::Small, &SolverParams::default(), 1).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].solver, "MARC3");
        assert_eq!(out[0].status, RunStatus::Converged);
        assert!(out[0].cpu_seconds >= 0.0);
    }

    #[test]
    fn order_is_problem_major() {
        let p = [
            problems::lookup("COSINE").unwrap(),
            problems::lookup("POWER").unwrap(),
        ];
        let s = default_solvers();
        let out = run_grid(&p, &s, DimSet::Small, &SolverParams::default(), 3).unwrap();
        let keys: Vec<_> = out
            .iter()
            .map(|r| (r.problem.as_str(), r.solver.clone()))
            .collect();
        let expected: Vec<_> = p
            .iter()
            .flat_map(|spec| s.iter().map(move |x| (spec.name, x.to_string())))
            .collect();
        assert_eq!(keys, expected);
    }

    #[test]
    fn empty_selections_are_errors() {
        let p = [problems::lookup("COSINE").unwrap()];
        let params = SolverParams::default();
        assert!(run_grid(&[], &default_solvers(), DimSet::Small, &params, 1).is_err());
        assert!(run_grid(&p, &[], DimSet::Small, &params, 1).is_err());
        assert!(run_grid(&p, &default_solvers(), DimSet::Small, &params, 0).is_err());
    }
}
