//! Closed-form minimizer of the scalar cubic model
//! `m(s) = f + gᵀs + ½γ‖s‖² + ⅓σ‖s‖³`.
//!
//! The minimizer lies on the ray `s = −α·g`; setting the derivative of the
//! one-dimensional restriction to zero gives
//! `α = 2 / (γ + √(γ² + 4σ‖g‖))`, which is always evaluated in this
//! rationalized form.

use crate::error::StepError;
use crate::linalg::{all_finite, dot, norm2};

#[derive(Debug, Clone, PartialEq)]
pub struct StepResult {
    /// `s = −α·g`
    pub s: Vec<f64>,
    pub alpha: f64,
    /// `f − m(s)`, evaluated in factored form so it keeps full relative
    /// accuracy when `|f|` is large.
    pub pred_red: f64,
    /// Euclidean norm of `s`.
    pub step_norm: f64,
    /// Euclidean norm of the gradient the step was built from.
    pub g_norm: f64,
    pub gamma: f64,
    pub sigma: f64,
}

impl StepResult {
    /// Model value `m(s)` for a model anchored at `f_k`.
    pub fn model_value(&self, f_k: f64) -> f64 {
        f_k - self.pred_red
    }
}

/// Exact global minimizer of the scalar cubic model.
pub fn solve_step(g: &[f64], gamma: f64, sigma: f64) -> Result<StepResult, StepError> {
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(StepError::InvalidScale);
    }
    if !(gamma >= 0.0 && gamma.is_finite()) || !all_finite(g) {
        return Err(StepError::NonFinite);
    }
    let g_norm = norm2(g);
    if g_norm == 0.0 {
        return Err(StepError::ZeroGradient);
    }
    let sg = sigma * g_norm;
    let alpha = if gamma == 0.0 {
        // linear model plus cubic term
        1.0 / sg.sqrt()
    } else {
        2.0 / (gamma + (gamma * gamma + 4.0 * sg).sqrt())
    };
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(StepError::NonFinite);
    }
    let s: Vec<f64> = g.iter().map(|gi| -alpha * gi).collect();
    let h = 1.0 - 0.5 * gamma * alpha - sg * alpha * alpha / 3.0;
    let pred_red = alpha * g_norm * g_norm * h;
    Ok(StepResult {
        s,
        alpha,
        pred_red,
        step_norm: alpha * g_norm,
        g_norm,
        gamma,
        sigma,
    })
}

/// Direct evaluation `f + gᵀs + ½γ·sᵀs + (σ/3)·‖s‖³`.
pub fn model_value(f_k: f64, g: &[f64], gamma: f64, sigma: f64, s: &[f64]) -> f64 {
    let ss = dot(s, s);
    let ns = ss.sqrt();
    f_k + dot(g, s) + 0.5 * gamma * ss + (sigma / 3.0) * ns * ns * ns
}

/// `f_k − m(s_k)` for a step from [`solve_step`].
pub fn predicted_reduction(_f_k: f64, step: &StepResult) -> f64 {
    step.pred_red
}

/// Guaranteed model decrease `(‖g‖/12)·min{‖g‖/γ, ½√(‖g‖/σ)}` (the first
/// term is +∞ when γ = 0).
pub fn decrease_lower_bound(g_norm: f64, gamma: f64, sigma: f64) -> f64 {
    let curvature_term = if gamma > 0.0 {
        g_norm / gamma
    } else {
        f64::INFINITY
    };
    g_norm / 12.0 * curvature_term.min(0.5 * (g_norm / sigma).sqrt())
}

/// Upper bound `√(‖g‖/σ)` on the step length.
pub fn step_norm_bound(g_norm: f64, sigma: f64) -> f64 {
    (g_norm / sigma).sqrt()
}
