//! Adaptive cubic regularization with a scalar Barzilai–Borwein Hessian.
//!
//! The model at `x_k` is `m(s) = f + gᵀs + ½γ_k‖s‖² + ⅓σ_k‖s‖³`, whose
//! minimizer has a closed form along `−g`. [`run_marc`] is the monotone
//! method, [`run_vmarc`] replaces `f(x_k)` in the acceptance ratio with a
//! weighted average of past values, and [`run_trmsm`] is a trust-region
//! baseline on the same scalar model without the cubic term.
//!
//! ```
//! use marc_core::{problems, run_vmarc, GammaVariant, Objective, RunStatus, SolverParams};
//!
//! let p = problems::construct("SROSENBR", 10).unwrap();
//! let params = SolverParams::default().with_variant(GammaVariant::Zheng);
//! let report = run_vmarc(&p, &p.standard_start(), &params).unwrap();
//! assert_eq!(report.status, RunStatus::Converged);
//! ```

pub mod cubic;
pub mod curvature;
mod error;
mod linalg;
mod objective;
mod params;
pub mod problems;
mod report;
pub mod solvers;

pub use cubic::{solve_step, StepResult};
pub use curvature::{CurvatureMemory, GammaVariant, YabeScope};
pub use error::{CurvatureError, ParamError, ProblemError, SolverError, StepError};
pub use linalg::{dot, norm2, norm_inf};
pub use objective::{
    counted_objective, scaled_sphere, Counted, EvalCounter, FnObjective, Objective,
};
pub use params::{make_params, ParamOverrides, SolverParams};
pub use report::{IterationRecord, Outcome, RunReport, RunStatus};
pub use solvers::{run_marc, run_trmsm, run_vmarc, StoppingRule};
