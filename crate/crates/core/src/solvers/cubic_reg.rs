use crate::cubic::solve_step;
use crate::curvature::{CurvatureMemory, SecantInput};
use crate::error::SolverError;
use crate::linalg::{add, all_finite, norm2, norm_inf};
use crate::objective::{Counted, Objective};
use crate::params::SolverParams;
use crate::report::{IterationRecord, RunReport, RunStatus};

use super::{acceptance_ratio_marc, classify, update_nonmonotone, update_sigma, SIGMA_CAP};

/// Monotone adaptive cubic regularization with a scalar Hessian `γ_k·I`.
///
/// Each iteration minimizes the cubic model exactly, evaluates `f` at the
/// trial point, accepts when `ρ ≥ η₁` and updates σ by the three-way rule.
/// The gradient is evaluated only at accepted points, so
/// `nf = 1 + iters` and `ng = 1 + accepted`.
pub fn run_marc<O: Objective>(
    obj: &O,
    x0: &[f64],
    params: &SolverParams,
) -> Result<RunReport, SolverError> {
    drive(obj, x0, params, false)
}

/// Nonmonotone variant: the ratio compares the trial value against the
/// weighted average `C_k` of past accepted values instead of `f(x_k)`.
/// `C` and `Q` are refreshed only on accepted iterations. With `η_nm = 0`
/// the run reproduces [`run_marc`] exactly.
pub fn run_vmarc<O: Objective>(
    obj: &O,
    x0: &[f64],
    params: &SolverParams,
) -> Result<RunReport, SolverError> {
    drive(obj, x0, params, true)
}

pub(super) fn check_start<O: Objective>(
    obj: &O,
    x0: &[f64],
    params: &SolverParams,
) -> Result<(), SolverError> {
    params.validate()?;
    if x0.len() != obj.dim() {
        return Err(SolverError::DimensionMismatch {
            expected: obj.dim(),
            got: x0.len(),
        });
    }
    if !all_finite(x0) {
        return Err(SolverError::NonFiniteStart);
    }
    Ok(())
}

fn drive<O: Objective>(
    obj: &O,
    x0: &[f64],
    params: &SolverParams,
    nonmonotone: bool,
) -> Result<RunReport, SolverError> {
    check_start(obj, x0, params)?;
    let obj = Counted::new(obj);
    let n = x0.len();

    let mut x = x0.to_vec();
    let mut f = obj.value(&x);
    let mut g = obj.gradient_vec(&x);
    let mut c = f;
    let mut q = 1.0;
    let mut sigma = params.sigma0;
    let mut mem = CurvatureMemory::new(params);
    let mut trace = Vec::new();
    let g0_norm = norm2(&g);

    let status = if !f.is_finite() || !all_finite(&g) {
        RunStatus::NumericalFailure
    } else {
        loop {
            if params.stop_rule.satisfied(f, &g, g0_norm) {
                break RunStatus::Converged;
            }
            let k = trace.len();
            if k >= params.max_iter {
                break RunStatus::IterLimit;
            }
            let gamma = mem.gamma();
            let Ok(step) = solve_step(&g, gamma, sigma) else {
                break RunStatus::NumericalFailure;
            };
            let x_trial = add(&x, &step.s);
            let f_trial = obj.value(&x_trial);
            let reference = if nonmonotone { c } else { f };
            let rho = acceptance_ratio_marc(reference, f_trial, step.pred_red);
            let outcome = classify(rho, params);
            trace.push(IterationRecord {
                k,
                f,
                g_inf: norm_inf(&g),
                g_norm: step.g_norm,
                sigma,
                radius: None,
                gamma,
                rho,
                outcome,
                c: reference,
                step_norm: step.step_norm,
                pred_red: step.pred_red,
                f_trial,
            });
            sigma = update_sigma(sigma, rho, params);

            if outcome.accepted() {
                let mut g_trial = vec![0.0; n];
                obj.gradient(&x_trial, &mut g_trial);
                if !all_finite(&g_trial) {
                    x = x_trial;
                    f = f_trial;
                    g = g_trial;
                    break RunStatus::NumericalFailure;
                }
                mem.update(
                    true,
                    SecantInput {
                        x_k: &x,
                        x_next: &x_trial,
                        f_k: f,
                        f_next: f_trial,
                        g_k: &g,
                        g_next: &g_trial,
                    },
                    params,
                );
                if nonmonotone {
                    (c, q) = update_nonmonotone(c, q, f_trial, params.eta_nm);
                } else {
                    c = f_trial;
                }
                x = x_trial;
                f = f_trial;
                g = g_trial;
            }

            if sigma > SIGMA_CAP || sigma <= 0.0 {
                break RunStatus::NumericalFailure;
            }
        }
    };

    Ok(RunReport {
        status,
        iters: trace.len(),
        counter: obj.counts(),
        f_final: f,
        g_norm_final: norm_inf(&g),
        x_final: x,
        c_final: c,
        trace,
    })
}
