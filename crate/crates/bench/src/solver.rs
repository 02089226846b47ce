use std::fmt;
use std::str::FromStr;

use marc_core::solvers::DEFAULT_RADIUS;
use marc_core::{
    run_marc, run_trmsm, run_vmarc, GammaVariant, Objective, RunReport, SolverError, SolverParams,
};

use crate::error::BenchError;

/// Which driver a benchmark column uses.
///
/// `MARCk` is the nonmonotone cubic method with curvature variant `k`,
/// `MARCk-MONO` the same method with the plain monotone ratio, and
/// `TRMSMk` the trust-region baseline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolverKind {
    Marc(GammaVariant),
    MarcMono(GammaVariant),
    Trmsm(GammaVariant),
}

const VARIANTS: [GammaVariant; 3] = [
    GammaVariant::Classic,
    GammaVariant::Yabe,
    GammaVariant::Zheng,
];

/// The six columns of the default comparison.
pub fn default_solvers() -> Vec<SolverKind> {
    let mut v: Vec<_> = VARIANTS.iter().map(|&g| SolverKind::Marc(g)).collect();
    v.extend(VARIANTS.iter().map(|&g| SolverKind::Trmsm(g)));
    v
}

pub fn all_solvers() -> Vec<SolverKind> {
    let mut v = default_solvers();
    v.extend(VARIANTS.iter().map(|&g| SolverKind::MarcMono(g)));
    v
}

impl SolverKind {
    pub fn variant(self) -> GammaVariant {
        match self {
            SolverKind::Marc(g) | SolverKind::MarcMono(g) | SolverKind::Trmsm(g) => g,
        }
    }

    /// Runs this solver; the curvature variant in `params` is overridden.
    pub fn run<O: Objective>(
        self,
        obj: &O,
        x0: &[f64],
        params: &SolverParams,
    ) -> Result<RunReport, SolverError> {
        let params = params.with_variant(self.variant());
        match self {
            SolverKind::Marc(_) => run_vmarc(obj, x0, &params),
            SolverKind::MarcMono(_) => run_marc(obj, x0, &params),
            SolverKind::Trmsm(_) => run_trmsm(obj, x0, &params, DEFAULT_RADIUS),
        }
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.variant().index();
        match self {
            SolverKind::Marc(_) => write!(f, "MARC{k}"),
            SolverKind::MarcMono(_) => write!(f, "MARC{k}-MONO"),
            SolverKind::Trmsm(_) => write!(f, "TRMSM{k}"),
        }
    }
}

impl FromStr for SolverKind {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let upper = s.trim().to_ascii_uppercase();
        let err = || BenchError::UnknownSolver(s.to_string());
        let (ctor, rest): (fn(GammaVariant) -> SolverKind, &str) =
            if let Some(r) = upper.strip_prefix("TRMSM") {
                (SolverKind::Trmsm, r)
            } else if let Some(r) = upper.strip_prefix("MARC") {
                match r.strip_suffix("-MONO") {
                    Some(r) => (SolverKind::MarcMono, r),
                    None => (SolverKind::Marc, r),
                }
            } else {
                return Err(err());
            };
        let k: u8 = rest.parse().map_err(|_| err())?;
        GammaVariant::from_index(k).map(ctor).ok_or_else(err)
    }
}
