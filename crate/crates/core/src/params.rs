//! Solver configuration.
//!
//! Defaults: σ₀ = 1, η₁ = 0.1, η₂ = 0.75, c₁ = 5, c₂ = 0.2, γ_min = 10⁻⁶,
//! γ_max = 10⁶, γ₀ = 1, θ = 1, ψ = 0.2, η = 0.7.

use crate::curvature::{GammaVariant, YabeScope};
use crate::error::ParamError;
use crate::solvers::StoppingRule;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverParams {
    /// Acceptance threshold: a step is taken when ρ ≥ η₁.
    pub eta1: f64,
    /// Very-successful threshold: σ shrinks when ρ > η₂.
    pub eta2: f64,
    /// Growth factor for σ on rejection (c₁ ≥ 1).
    pub c1: f64,
    /// Shrink factor for σ on very successful steps (0 < c₂ ≤ 1).
    pub c2: f64,
    pub gamma_min: f64,
    pub gamma_max: f64,
    pub gamma0: f64,
    pub sigma0: f64,
    /// Weight of the function-value term in the Yabe-type curvature formula.
    pub theta: f64,
    /// Weight of the previous secant pair in the Zheng-type formula.
    pub psi: f64,
    /// Averaging weight of the nonmonotone reference value.
    pub eta_nm: f64,
    pub max_iter: usize,
    pub stop_rule: StoppingRule,
    pub gamma_variant: GammaVariant,
    pub yabe_scope: YabeScope,
}

impl Default for SolverParams {
    fn default() -> Self {
        Self {
            eta1: 0.1,
            eta2: 0.75,
            c1: 5.0,
            c2: 0.2,
            gamma_min: 1e-6,
            gamma_max: 1e6,
            gamma0: 1.0,
            sigma0: 1.0,
            theta: 1.0,
            psi: 0.2,
            eta_nm: 0.7,
            max_iter: 5000,
            stop_rule: StoppingRule::RelativeInf,
            gamma_variant: GammaVariant::Classic,
            yabe_scope: YabeScope::WholeBracket,
        }
    }
}

/// Partial parameter set; `None` keeps the default.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ParamOverrides {
    pub eta1: Option<f64>,
    pub eta2: Option<f64>,
    pub c1: Option<f64>,
    pub c2: Option<f64>,
    pub gamma_min: Option<f64>,
    pub gamma_max: Option<f64>,
    pub gamma0: Option<f64>,
    pub sigma0: Option<f64>,
    pub theta: Option<f64>,
    pub psi: Option<f64>,
    pub eta_nm: Option<f64>,
    pub max_iter: Option<usize>,
    pub stop_rule: Option<StoppingRule>,
    pub gamma_variant: Option<GammaVariant>,
    pub yabe_scope: Option<YabeScope>,
}

/// Defaults with `overrides` applied, validated.
pub fn make_params(overrides: &ParamOverrides) -> Result<SolverParams, ParamError> {
    let d = SolverParams::default();
    let p = SolverParams {
        eta1: overrides.eta1.unwrap_or(d.eta1),
        eta2: overrides.eta2.unwrap_or(d.eta2),
        c1: overrides.c1.unwrap_or(d.c1),
        c2: overrides.c2.unwrap_or(d.c2),
        gamma_min: overrides.gamma_min.unwrap_or(d.gamma_min),
        gamma_max: overrides.gamma_max.unwrap_or(d.gamma_max),
        gamma0: overrides.gamma0.unwrap_or(d.gamma0),
        sigma0: overrides.sigma0.unwrap_or(d.sigma0),
        theta: overrides.theta.unwrap_or(d.theta),
        psi: overrides.psi.unwrap_or(d.psi),
        eta_nm: overrides.eta_nm.unwrap_or(d.eta_nm),
        max_iter: overrides.max_iter.unwrap_or(d.max_iter),
        stop_rule: overrides.stop_rule.unwrap_or(d.stop_rule),
        gamma_variant: overrides.gamma_variant.unwrap_or(d.gamma_variant),
        yabe_scope: overrides.yabe_scope.unwrap_or(d.yabe_scope),
    };
    p.validate()?;
    Ok(p)
}

impl SolverParams {
    pub fn with_variant(mut self, variant: GammaVariant) -> Self {
        self.gamma_variant = variant;
        self
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        fn check(ok: bool, what: &str) -> Result<(), ParamError> {
            if ok {
                Ok(())
            } else {
                Err(ParamError::ConstraintViolation(what.to_owned()))
            }
        }
        let scalars = [
            self.eta1,
            self.eta2,
            self.c1,
            self.c2,
            self.gamma_min,
            self.gamma_max,
            self.gamma0,
            self.sigma0,
            self.theta,
            self.psi,
            self.eta_nm,
        ];
        check(
            scalars.iter().all(|v| v.is_finite()),
            "all parameters must be finite",
        )?;
        check(self.eta1 > 0.0, "eta1 > 0")?;
        check(self.eta2 >= self.eta1, "eta2 >= eta1")?;
        check(self.c1 >= 1.0, "c1 >= 1")?;
        check(self.c2 > 0.0 && self.c2 <= 1.0, "0 < c2 <= 1")?;
        check(self.gamma_min >= 0.0, "gamma_min >= 0")?;
        check(self.gamma_min < self.gamma0, "gamma0 > gamma_min")?;
        check(self.gamma0 < self.gamma_max, "gamma_max > gamma0")?;
        check(self.sigma0 > 0.0, "sigma0 > 0")?;
        check((0.0..=3.0).contains(&self.theta), "theta in [0, 3]")?;
        check(self.psi >= 0.0, "psi >= 0")?;
        check((0.0..1.0).contains(&self.eta_nm), "eta_nm in [0, 1)")?;
        check(self.max_iter > 0, "max_iter > 0")?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_constants() {
        let p = make_params(&ParamOverrides::default()).unwrap();
        assert_eq!((p.eta1, p.eta2, p.c1, p.c2), (0.1, 0.75, 5.0, 0.2));
        assert_eq!(
            (p.sigma0, p.gamma_max, p.psi, p.eta_nm),
            (1.0, 1e6, 0.2, 0.7)
        );
        assert_eq!((p.gamma_min, p.gamma0, p.theta), (1e-6, 1.0, 1.0));
        assert_eq!(p.max_iter, 5000);
    }

    #[test]
    fn rejects_inverted_thresholds() {
        let o = ParamOverrides {
            eta1: Some(0.9),
            eta2: Some(0.5),
            ..Default::default()
        };
        assert!(matches!(
            make_params(&o),
            Err(ParamError::ConstraintViolation(_))
        ));
    }

    #[test]
    fn accepts_zero_gamma_min() {
        let o = ParamOverrides {
            gamma_min: Some(0.0),
            ..Default::default()
        };
        assert_eq!(make_params(&o).unwrap().gamma_min, 0.0);
    }

    #[test]
    fn rejects_each_ordering_violation() {
        let bad = [
            ParamOverrides {
                eta1: Some(0.0),
                ..Default::default()
            },
            ParamOverrides {
                c1: Some(0.5),
                ..Default::default()
            },
            ParamOverrides {
                c2: Some(1.5),
                ..Default::default()
            },
            ParamOverrides {
                c2: Some(0.0),
                ..Default::default()
            },
            ParamOverrides {
                gamma_min: Some(-1.0),
                ..Default::default()
            },
            ParamOverrides {
                gamma0: Some(1e-6),
                ..Default::default()
            },
            ParamOverrides {
                gamma0: Some(1e6),
                ..Default::default()
            },
            ParamOverrides {
                sigma0: Some(0.0),
                ..Default::default()
            },
            ParamOverrides {
                theta: Some(3.5),
                ..Default::default()
            },
            ParamOverrides {
                psi: Some(-0.1),
                ..Default::default()
            },
            ParamOverrides {
                eta_nm: Some(1.0),
                ..Default::default()
            },
            ParamOverrides {
                max_iter: Some(0),
                ..Default::default()
            },
            ParamOverrides {
                sigma0: Some(f64::NAN),
                ..Default::default()
            },
        ];
        for o in &bad {
            assert!(make_params(o).is_err(), "{o:?} should be rejected");
        }
    }
}
