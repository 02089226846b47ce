//! Scalar curvature estimates γ for the model Hessian `γ·I`.
//!
//! Three secant-based formulas are provided: the classic Barzilai–Borwein
//! ratio, a Yabe-type modified secant that also uses function values, and a
//! Zheng-type formula that blends in the previous secant pair. Every raw
//! estimate is truncated to `[γ_min, γ_max]` before use.

use crate::error::CurvatureError;
use crate::linalg::{all_finite, dot, sub};
use crate::params::SolverParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GammaVariant {
    /// `sᵀy / sᵀs`
    Classic,
    /// Modified secant with function values, weighted by θ.
    Yabe,
    /// `rᵀw / rᵀr` with `r = s − ψ·s_prev`, `w = y − ψ·y_prev`.
    Zheng,
}

impl GammaVariant {
    /// 1, 2, 3 for Classic, Yabe, Zheng (the suffix of the MARCn/TRMSMn names).
    pub fn index(self) -> u8 {
        match self {
            GammaVariant::Classic => 1,
            GammaVariant::Yabe => 2,
            GammaVariant::Zheng => 3,
        }
    }

    pub fn from_index(i: u8) -> Option<Self> {
        match i {
            1 => Some(GammaVariant::Classic),
            2 => Some(GammaVariant::Yabe),
            3 => Some(GammaVariant::Zheng),
            _ => None,
        }
    }
}

/// Which terms θ scales in the Yabe-type numerator.
///
/// With `WholeBracket` the numerator is
/// `sᵀy + θ·[2(f_k − f_{k+1}) + (g_k + g_{k+1})ᵀs]`; the bracket vanishes on
/// quadratics, so the estimate is exact there for every θ. `AsTypeset` reads
/// `sᵀy + θ·2(f_k − f_{k+1}) + (g_k + g_{k+1})ᵀs`, which is exact on
/// quadratics only at θ = 1. At θ = 1 the two coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum YabeScope {
    WholeBracket,
    AsTypeset,
}

fn checked_ratio(num: f64, den: f64) -> Result<f64, CurvatureError> {
    if den > 0.0 && den.is_finite() && num.is_finite() {
        Ok(num / den)
    } else {
        Err(CurvatureError::DegenerateStep)
    }
}

/// Classic Barzilai–Borwein curvature `sᵀy / sᵀs` (unclamped).
pub fn gamma_classic(s: &[f64], y: &[f64]) -> Result<f64, CurvatureError> {
    if !all_finite(s) || !all_finite(y) {
        return Err(CurvatureError::DegenerateStep);
    }
    checked_ratio(dot(s, y), dot(s, s))
}

/// Yabe-type curvature (unclamped); see [`YabeScope`] for the grouping.
#[allow(clippy::too_many_arguments)]
pub fn gamma_yabe(
    s: &[f64],
    y: &[f64],
    f_k: f64,
    f_next: f64,
    g_k: &[f64],
    g_next: &[f64],
    theta: f64,
    scope: YabeScope,
) -> Result<f64, CurvatureError> {
    if !all_finite(s) || !all_finite(y) || !f_k.is_finite() || !f_next.is_finite() {
        return Err(CurvatureError::DegenerateStep);
    }
    let sy = dot(s, y);
    let df = 2.0 * (f_k - f_next);
    let gs: f64 = g_k
        .iter()
        .zip(g_next)
        .zip(s)
        .map(|((a, b), si)| (a + b) * si)
        .sum();
    let num = match scope {
        YabeScope::WholeBracket => sy + theta * (df + gs),
        YabeScope::AsTypeset => sy + theta * df + gs,
    };
    checked_ratio(num, dot(s, s))
}

/// Zheng-type curvature `rᵀw / rᵀr` (unclamped). With ψ = 0 this is
/// bitwise identical to [`gamma_classic`].
pub fn gamma_zheng(
    s: &[f64],
    y: &[f64],
    s_prev: &[f64],
    y_prev: &[f64],
    psi: f64,
) -> Result<f64, CurvatureError> {
    let r: Vec<f64> = s.iter().zip(s_prev).map(|(a, b)| a - psi * b).collect();
    let w: Vec<f64> = y.iter().zip(y_prev).map(|(a, b)| a - psi * b).collect();
    if !all_finite(&r) || !all_finite(&w) {
        return Err(CurvatureError::DegenerateStep);
    }
    checked_ratio(dot(&r, &w), dot(&r, &r))
}

/// Truncates `raw` to `[γ_min, γ_max]`; a non-finite `raw` yields `carried`.
pub fn clamp_gamma(raw: f64, carried: f64, params: &SolverParams) -> f64 {
    if raw.is_finite() {
        raw.min(params.gamma_max).max(params.gamma_min)
    } else {
        carried
    }
}

/// One accepted move `x_k → x_{k+1}` together with the data the curvature
/// formulas need.
#[derive(Debug, Clone, Copy)]
pub struct SecantInput<'a> {
    pub x_k: &'a [f64],
    pub x_next: &'a [f64],
    pub f_k: f64,
    pub f_next: f64,
    pub g_k: &'a [f64],
    pub g_next: &'a [f64],
}

/// Curvature state carried across iterations of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureMemory {
    s_prev: Option<Vec<f64>>,
    y_prev: Option<Vec<f64>>,
    gamma: f64,
}

impl CurvatureMemory {
    pub fn new(params: &SolverParams) -> Self {
        Self {
            s_prev: None,
            y_prev: None,
            gamma: params.gamma0,
        }
    }

    /// Current (clamped) γ.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Secant pair of the most recent accepted step, if any.
    pub fn last_pair(&self) -> Option<(&[f64], &[f64])> {
        match (&self.s_prev, &self.y_prev) {
            (Some(s), Some(y)) => Some((s, y)),
            _ => None,
        }
    }

    /// Advances the memory after an iteration. Rejected iterations leave it
    /// untouched; accepted ones produce a new clamped γ and shift the pair.
    pub fn update(&mut self, accepted: bool, step: SecantInput<'_>, params: &SolverParams) {
        if !accepted {
            return;
        }
        let s = sub(step.x_next, step.x_k);
        let y = sub(step.g_next, step.g_k);
        let raw = match params.gamma_variant {
            GammaVariant::Classic => gamma_classic(&s, &y),
            GammaVariant::Yabe => gamma_yabe(
                &s,
                &y,
                step.f_k,
                step.f_next,
                step.g_k,
                step.g_next,
                params.theta,
                params.yabe_scope,
            ),
            GammaVariant::Zheng => match self.last_pair() {
                Some((sp, yp)) => gamma_zheng(&s, &y, sp, yp, params.psi),
                None => gamma_classic(&s, &y),
            },
        };
        self.gamma = clamp_gamma(raw.unwrap_or(f64::NAN), self.gamma, params);
        self.s_prev = Some(s);
        self.y_prev = Some(y);
    }
}
