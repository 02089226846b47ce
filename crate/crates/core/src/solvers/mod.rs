//! Solver drivers: monotone cubic regularization (MARC), its nonmonotone
//! variant (VMARC), and a simple-model trust-region baseline (TRMSM).

mod cubic_reg;
mod trust_region;

pub use cubic_reg::{run_marc, run_vmarc};
pub use trust_region::{run_trmsm, DEFAULT_RADIUS};

use crate::linalg::{norm2, norm_inf};
use crate::params::SolverParams;
use crate::report::Outcome;

/// Abort threshold for σ; growth past it means no step is being accepted.
pub const SIGMA_CAP: f64 = 1e30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StoppingRule {
    /// `‖g‖_∞ ≤ 10⁻⁶·(1 + |f|)`
    RelativeInf,
    /// `‖g‖₂ ≤ max(10⁻⁵, 10⁻⁹·‖g₀‖₂)`
    AbsoluteMixed,
}

impl StoppingRule {
    pub fn satisfied(self, f: f64, g: &[f64], g0_norm: f64) -> bool {
        match self {
            StoppingRule::RelativeInf => norm_inf(g) <= 1e-6 * (1.0 + f.abs()),
            StoppingRule::AbsoluteMixed => norm2(g) <= f64::max(1e-5, 1e-9 * g0_norm),
        }
    }
}

/// `(f_k − f_trial) / pred_red`; a non-finite trial value gives −∞.
pub fn acceptance_ratio_marc(f_k: f64, f_trial: f64, pred_red: f64) -> f64 {
    if !f_trial.is_finite() {
        return f64::NEG_INFINITY;
    }
    (f_k - f_trial) / pred_red
}

/// `(C_k − f_trial) / pred_red`, the nonmonotone ratio. Requires `C_k ≥ f_k`.
pub fn acceptance_ratio_vmarc(c_k: f64, f_k: f64, f_trial: f64, pred_red: f64) -> f64 {
    debug_assert!(c_k >= f_k - 1e-12 * (1.0 + f_k.abs()));
    acceptance_ratio_marc(c_k, f_trial, pred_red)
}

/// Boundary ties (ρ = η₁ or ρ = η₂) count as successful.
pub fn classify(rho: f64, params: &SolverParams) -> Outcome {
    if rho > params.eta2 {
        Outcome::VerySuccessful
    } else if rho >= params.eta1 {
        Outcome::Successful
    } else {
        Outcome::Unsuccessful
    }
}

pub fn update_sigma(sigma: f64, rho: f64, params: &SolverParams) -> f64 {
    match classify(rho, params) {
        Outcome::VerySuccessful => params.c2 * sigma,
        Outcome::Successful => sigma,
        Outcome::Unsuccessful => params.c1 * sigma,
    }
}

/// One step of the weighted-average reference recurrence:
/// `Q' = η·Q + 1`, `C' = (η·Q·C + f_next) / Q'`.
pub fn update_nonmonotone(c: f64, q: f64, f_next: f64, eta: f64) -> (f64, f64) {
    let q_next = eta * q + 1.0;
    let c_next = (eta * q * c + f_next) / q_next;
    (c_next, q_next)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratios() {
        assert_eq!(acceptance_ratio_marc(10.0, 9.0, 2.0), 0.5);
        assert_eq!(acceptance_ratio_marc(10.0, 8.0, 2.0), 1.0);
        assert_eq!(
            acceptance_ratio_marc(10.0, f64::NAN, 2.0),
            f64::NEG_INFINITY
        );
        assert_eq!(
            acceptance_ratio_marc(10.0, f64::INFINITY, 2.0),
            f64::NEG_INFINITY
        );
        assert_eq!(acceptance_ratio_vmarc(11.0, 10.0, 9.0, 2.0), 1.0);
        assert_eq!(acceptance_ratio_vmarc(11.0, 10.0, 10.5, 2.0), 0.25);
        assert_eq!(
            acceptance_ratio_vmarc(10.0, 10.0, 9.3, 1.7),
            acceptance_ratio_marc(10.0, 9.3, 1.7)
        );
    }

    #[test]
    fn sigma_branches() {
        let p = SolverParams::default();
        assert_eq!(update_sigma(1.0, 0.8, &p), 0.2);
        assert_eq!(update_sigma(1.0, 0.5, &p), 1.0);
        assert_eq!(update_sigma(1.0, 0.05, &p), 5.0);
        assert_eq!(update_sigma(1.0, 0.75, &p), 1.0);
        assert_eq!(update_sigma(1.0, 0.1, &p), 1.0);
        assert_eq!(update_sigma(1.0, f64::NEG_INFINITY, &p), 5.0);
        assert_eq!(classify(0.25, &p), Outcome::Successful);
    }

    #[test]
    fn nonmonotone_recurrence() {
        let (c, q) = update_nonmonotone(10.0, 1.0, 4.0, 0.7);
        assert_eq!(q, 1.7);
        assert!((c - 6.470_588_235_294_118).abs() < 1e-14);
        assert_eq!(update_nonmonotone(10.0, 3.0, 4.0, 0.0), (4.0, 1.0));
        for eta in [0.0, 0.3, 0.7, 0.99] {
            let (c, _) = update_nonmonotone(2.5, 2.2, 2.5, eta);
            assert_eq!(c, 2.5);
        }
    }

    #[test]
    fn stopping_rules() {
        assert!(StoppingRule::RelativeInf.satisfied(0.0, &[1e-6, -1e-7], 1.0));
        assert!(!StoppingRule::RelativeInf.satisfied(0.0, &[2e-6], 1.0));
        assert!(StoppingRule::RelativeInf.satisfied(1e3, &[1e-3], 1.0));
        assert!(StoppingRule::AbsoluteMixed.satisfied(0.0, &[6e-6, 8e-6], 1.0));
        assert!(!StoppingRule::AbsoluteMixed.satisfied(0.0, &[6e-6, 8.1e-6], 1.0));
        assert!(StoppingRule::AbsoluteMixed.satisfied(0.0, &[1e-3], 1e7));
    }
}
