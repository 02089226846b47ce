use serde::Serialize;

use crate::objective::EvalCounter;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RunStatus {
    Converged,
    IterLimit,
    NumericalFailure,
}

impl RunStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RunStatus::Converged => "Converged",
            RunStatus::IterLimit => "IterLimit",
            RunStatus::NumericalFailure => "NumericalFailure",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "Converged" => Some(RunStatus::Converged),
            "IterLimit" => Some(RunStatus::IterLimit),
            "NumericalFailure" => Some(RunStatus::NumericalFailure),
            _ => None,
        }
    }
}

impl std::fmt::Display for RunStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classification of an iteration by its ratio ρ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Outcome {
    VerySuccessful,
    Successful,
    Unsuccessful,
}

impl Outcome {
    pub fn accepted(self) -> bool {
        !matches!(self, Outcome::Unsuccessful)
    }
}

/// State at the start of iteration `k` and what the iteration did with it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IterationRecord {
    pub k: usize,
    pub f: f64,
    pub g_inf: f64,
    /// Euclidean gradient norm.
    pub g_norm: f64,
    /// σ_k for the cubic solvers; 1/Δ_k for the trust-region baseline.
    pub sigma: f64,
    /// Trust radius Δ_k (trust-region baseline only).
    pub radius: Option<f64>,
    pub gamma: f64,
    pub rho: f64,
    pub outcome: Outcome,
    /// Nonmonotone reference value C_k; equal to `f` for monotone runs.
    #[serde(rename = "C")]
    pub c: f64,
    pub step_norm: f64,
    pub pred_red: f64,
    pub f_trial: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub status: RunStatus,
    pub iters: usize,
    pub counter: EvalCounter,
    pub f_final: f64,
    /// Infinity norm of the final gradient.
    pub g_norm_final: f64,
    pub x_final: Vec<f64>,
    /// Reference value after the last iteration (equals `f_final` for
    /// monotone runs).
    pub c_final: f64,
    pub trace: Vec<IterationRecord>,
}
