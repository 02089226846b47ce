use crate::curvature::{CurvatureMemory, SecantInput};
use crate::error::SolverError;
use crate::linalg::{add, all_finite, norm2, norm_inf};
use crate::objective::{Counted, Objective};
use crate::params::SolverParams;
use crate::report::{IterationRecord, Outcome, RunReport, RunStatus};

use super::cubic_reg::check_start;
use super::{acceptance_ratio_marc, classify, SIGMA_CAP};

pub const DEFAULT_RADIUS: f64 = 1.0;

/// Trust-region baseline on the scalar quadratic model
/// `q(s) = f + gᵀs + ½γ‖s‖²`.
///
/// The step is the Cauchy point `s = −min(1/γ, Δ/‖g‖)·g` (or `−(Δ/‖g‖)·g`
/// when γ = 0). The radius follows the σ rule through `σ ↔ 1/Δ`: very
/// successful → `Δ/c₂`, successful → `Δ`, unsuccessful → `Δ/c₁`. Curvature
/// estimates come from the same [`CurvatureMemory`] the cubic solvers use.
pub fn run_trmsm<O: Objective>(
    obj: &O,
    x0: &[f64],
    params: &SolverParams,
    delta0: f64,
) -> Result<RunReport, SolverError> {
    check_start(obj, x0, params)?;
    if !(delta0 > 0.0 && delta0.is_finite()) {
        return Err(SolverError::InvalidRadius(delta0));
    }
    let obj = Counted::new(obj);
    let n = x0.len();

    let mut x = x0.to_vec();
    let mut f = obj.value(&x);
    let mut g = obj.gradient_vec(&x);
    let mut delta = delta0;
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
            let g_norm = norm2(&g);
            let boundary = delta / g_norm;
            let tau = if gamma > 0.0 {
                (1.0 / gamma).min(boundary)
            } else {
                boundary
            };
            let s: Vec<f64> = g.iter().map(|gi| -tau * gi).collect();
            let pred_red = tau * g_norm * g_norm * (1.0 - 0.5 * gamma * tau);
            if !(pred_red > 0.0 && pred_red.is_finite()) {
                break RunStatus::NumericalFailure;
            }
            let x_trial = add(&x, &s);
            let f_trial = obj.value(&x_trial);
            let rho = acceptance_ratio_marc(f, f_trial, pred_red);
            let outcome = classify(rho, params);
            trace.push(IterationRecord {
                k,
                f,
                g_inf: norm_inf(&g),
                g_norm,
                sigma: 1.0 / delta,
                radius: Some(delta),
                gamma,
                rho,
                outcome,
                c: f,
                step_norm: tau * g_norm,
                pred_red,
                f_trial,
            });
            delta = match outcome {
                Outcome::VerySuccessful => delta / params.c2,
                Outcome::Successful => delta,
                Outcome::Unsuccessful => delta / params.c1,
            };

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
                x = x_trial;
                f = f_trial;
                g = g_trial;
            }

            if delta < 1.0 / SIGMA_CAP || !delta.is_finite() {
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
        c_final: f,
        trace,
    })
}
