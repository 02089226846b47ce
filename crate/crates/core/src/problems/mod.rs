//! Native implementations of a scalable unconstrained test set drawn from
//! the CUTEst collection, with analytic gradients and standard starting
//! points, plus a central-difference gradient checker.

mod functions;
mod gradcheck;

pub use gradcheck::{check_gradient, perturbed_point, GRADIENT_TOLERANCE};

use std::fmt;

use crate::error::ProblemError;
use crate::objective::Objective;

type ValueFn = fn(&[f64]) -> f64;
type GradFn = fn(&[f64], &mut [f64]);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimConstraint {
    AtLeast(usize),
    MultipleOf(usize),
}

impl DimConstraint {
    pub fn admits(self, n: usize) -> bool {
        match self {
            DimConstraint::AtLeast(m) => n >= m,
            DimConstraint::MultipleOf(m) => n > 0 && n.is_multiple_of(m),
        }
    }
}

impl fmt::Display for DimConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimConstraint::AtLeast(1) => write!(f, "any n >= 1"),
            DimConstraint::AtLeast(m) => write!(f, "n >= {m}"),
            DimConstraint::MultipleOf(2) => write!(f, "n even"),
            DimConstraint::MultipleOf(m) => write!(f, "n multiple of {m}"),
        }
    }
}

/// Catalog entry: formulas, starting point and dimension rules.
#[derive(Clone, Copy)]
pub struct ProblemSpec {
    pub name: &'static str,
    /// Dimension used for quick runs and the gradient admission gate.
    pub default_dim: usize,
    /// Large size used for the reference benchmark runs.
    pub reference_dim: usize,
    pub constraint: DimConstraint,
    value: ValueFn,
    grad: GradFn,
    start: fn(usize) -> Vec<f64>,
}

impl fmt::Debug for ProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProblemSpec")
            .field("name", &self.name)
            .field("default_dim", &self.default_dim)
            .field("reference_dim", &self.reference_dim)
            .field("constraint", &self.constraint)
            .finish()
    }
}

impl ProblemSpec {
    pub fn construct(&'static self, dim: usize) -> Result<TestProblem, ProblemError> {
        if !self.constraint.admits(dim) {
            return Err(ProblemError::DimensionRejected {
                name: self.name,
                dim,
                constraint: self.constraint.to_string(),
            });
        }
        Ok(TestProblem { spec: self, dim })
    }

    pub fn construct_default(&'static self) -> TestProblem {
        TestProblem {
            spec: self,
            dim: self.default_dim,
        }
    }
}

/// A cataloged problem at a fixed dimension.
#[derive(Debug, Clone, Copy)]
pub struct TestProblem {
    spec: &'static ProblemSpec,
    dim: usize,
}

impl TestProblem {
    pub fn spec(&self) -> &'static ProblemSpec {
        self.spec
    }
}

impl Objective for TestProblem {
    fn name(&self) -> &str {
        self.spec.name
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn value(&self, x: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), self.dim);
        (self.spec.value)(x)
    }

    fn gradient(&self, x: &[f64], g: &mut [f64]) {
        debug_assert_eq!(x.len(), self.dim);
        (self.spec.grad)(x, g)
    }

    fn standard_start(&self) -> Vec<f64> {
        (self.spec.start)(self.dim)
    }
}

fn constant(v: f64) -> impl Fn(usize) -> Vec<f64> {
    move |n| vec![v; n]
}

use functions as k;
use DimConstraint::{AtLeast, MultipleOf};

static CATALOG: [ProblemSpec; 14] = [
    ProblemSpec {
        name: "SROSENBR",
        default_dim: 100,
        reference_dim: 5000,
        constraint: MultipleOf(2),
        value: k::srosenbr,
        grad: k::srosenbr_grad,
        start: |n| {
            (0..n)
                .map(|i| if i % 2 == 0 { -1.2 } else { 1.0 })
                .collect()
        },
    },
    ProblemSpec {
        name: "ARWHEAD",
        default_dim: 100,
        reference_dim: 10000,
        constraint: AtLeast(2),
        value: k::arwhead,
        grad: k::arwhead_grad,
        start: |n| constant(1.0)(n),
    },
    ProblemSpec {
        name: "NONDIA",
        default_dim: 100,
        reference_dim: 5000,
        constraint: AtLeast(2),
        value: k::nondia,
        grad: k::nondia_grad,
        start: |n| constant(-1.0)(n),
    },
    ProblemSpec {
        name: "DQDRTIC",
        default_dim: 100,
        reference_dim: 10000,
        constraint: AtLeast(3),
        value: k::dqdrtic,
        grad: k::dqdrtic_grad,
        start: |n| constant(3.0)(n),
    },
    ProblemSpec {
        name: "DQRTIC",
        default_dim: 100,
        reference_dim: 2000,
        constraint: AtLeast(1),
        value: k::dqrtic,
        grad: k::dqrtic_grad,
        start: |n| constant(2.0)(n),
    },
    ProblemSpec {
        name: "ENGVAL1",
        default_dim: 100,
        reference_dim: 10000,
        constraint: AtLeast(2),
        value: k::engval1,
        grad: k::engval1_grad,
        start: |n| constant(2.0)(n),
    },
    ProblemSpec {
        name: "WOODS",
        default_dim: 100,
        reference_dim: 10000,
        constraint: MultipleOf(4),
        value: k::woods,
        grad: k::woods_grad,
        start: |n| {
            (0..n)
                .map(|i| if i % 2 == 0 { -3.0 } else { -1.0 })
                .collect()
        },
    },
    ProblemSpec {
        name: "PENALTY1",
        default_dim: 100,
        reference_dim: 1000,
        constraint: AtLeast(1),
        value: k::penalty1,
        grad: k::penalty1_grad,
        start: |n| (1..=n).map(|i| i as f64).collect(),
    },
    ProblemSpec {
        name: "EXTROSNB",
        default_dim: 100,
        reference_dim: 5000,
        constraint: AtLeast(2),
        value: k::extrosnb,
        grad: k::extrosnb_grad,
        start: |n| constant(-1.0)(n),
    },
    ProblemSpec {
        name: "COSINE",
        default_dim: 100,
        reference_dim: 1000,
        constraint: AtLeast(2),
        value: k::cosine,
        grad: k::cosine_grad,
        start: |n| constant(1.0)(n),
    },
    ProblemSpec {
        name: "EDENSCH",
        default_dim: 100,
        reference_dim: 5000,
        constraint: AtLeast(2),
        value: k::edensch,
        grad: k::edensch_grad,
        start: |n| constant(0.0)(n),
    },
    ProblemSpec {
        name: "LIARWHD",
        default_dim: 100,
        reference_dim: 1000,
        constraint: AtLeast(1),
        value: k::liarwhd,
        grad: k::liarwhd_grad,
        start: |n| constant(4.0)(n),
    },
    ProblemSpec {
        name: "VARDIM",
        default_dim: 100,
        reference_dim: 5000,
        constraint: AtLeast(1),
        value: k::vardim,
        grad: k::vardim_grad,
        start: |n| (1..=n).map(|i| 1.0 - i as f64 / n as f64).collect(),
    },
    ProblemSpec {
        name: "POWER",
        default_dim: 100,
        reference_dim: 5000,
        constraint: AtLeast(1),
        value: k::power,
        grad: k::power_grad,
        start: |n| constant(1.0)(n),
    },
];

pub fn catalog() -> &'static [ProblemSpec] {
    &CATALOG
}

/// Case-insensitive lookup by name.
pub fn lookup(name: &str) -> Result<&'static ProblemSpec, ProblemError> {
    CATALOG
        .iter()
        .find(|p| p.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| ProblemError::UnknownProblem(name.to_owned()))
}

/// Shorthand for `lookup(name)?.construct(dim)`.
pub fn construct(name: &str, dim: usize) -> Result<TestProblem, ProblemError> {
    lookup(name)?.construct(dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::norm_inf;

    #[test]
    fn rosenbrock_hand_value() {
        let p = construct("SROSENBR", 2).unwrap();
        let x0 = p.standard_start();
        assert_eq!(x0, vec![-1.2, 1.0]);
        assert!((p.value(&x0) - 24.2).abs() < 1e-12);
        let ones = vec![1.0; 10];
        let p = construct("srosenbr", 10).unwrap();
        assert_eq!(p.value(&ones), 0.0);
        assert_eq!(norm_inf(&p.gradient_vec(&ones)), 0.0);
    }

    #[test]
    fn dimension_rules() {
        assert!(matches!(
            construct("WOODS", 10),
            Err(ProblemError::DimensionRejected {
                name: "WOODS",
                dim: 10,
                ..
            })
        ));
        assert!(construct("WOODS", 12).is_ok());
        assert!(construct("SROSENBR", 3).is_err());
        assert!(matches!(
            construct("HS999", 3),
            Err(ProblemError::UnknownProblem(_))
        ));
        for spec in catalog() {
            assert!(spec.constraint.admits(spec.default_dim), "{}", spec.name);
            assert!(spec.constraint.admits(spec.reference_dim), "{}", spec.name);
        }
    }

    #[test]
    fn known_minimizers_are_stationary() {
        let cases: [(&str, Vec<f64>); 8] = [
            ("ARWHEAD", [vec![1.0; 9], vec![0.0]].concat()),
            ("NONDIA", vec![1.0; 10]),
            ("DQDRTIC", vec![0.0; 10]),
            ("DQRTIC", (1..=10).map(|i| i as f64).collect()),
            ("WOODS", vec![1.0; 12]),
            ("EXTROSNB", vec![1.0; 10]),
            ("LIARWHD", vec![1.0; 10]),
            ("VARDIM", vec![1.0; 10]),
        ];
        for (name, x) in cases {
            let p = construct(name, x.len()).unwrap();
            assert!(p.value(&x).abs() < 1e-12, "{name}");
            assert!(norm_inf(&p.gradient_vec(&x)) < 1e-12, "{name}");
        }
    }

    #[test]
    fn construction_is_deterministic() {
        for spec in catalog() {
            let a = spec.construct_default().standard_start();
            let b = spec.construct(spec.default_dim).unwrap().standard_start();
            assert_eq!(a, b);
            assert_eq!(a.len(), spec.default_dim);
        }
    }

    #[test]
    fn sizes_up_to_reference_scale() {
        for spec in catalog() {
            let p = spec.construct(spec.reference_dim).unwrap();
            let x = p.standard_start();
            assert!(p.value(&x).is_finite(), "{}", spec.name);
            assert!(p.gradient_vec(&x).iter().all(|v| v.is_finite()));
        }
    }
}
