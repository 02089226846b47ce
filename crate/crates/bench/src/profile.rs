//! Dolan–Moré performance profiles.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use marc_core::RunStatus;

use crate::error::ProfileError;
use crate::grid::BenchRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Cpu,
    Iters,
    Nf,
}

impl Metric {
    fn of(self, r: &BenchRecord) -> f64 {
        match self {
            Metric::Cpu => r.cpu_seconds,
            Metric::Iters => r.iters as f64,
            Metric::Nf => r.nf as f64,
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::Cpu => "cpu",
            Metric::Iters => "iters",
            Metric::Nf => "nf",
        })
    }
}

impl FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "cpu" => Ok(Metric::Cpu),
            "iters" => Ok(Metric::Iters),
            "nf" => Ok(Metric::Nf),
            _ => Err(format!("unknown metric `{s}` (expected cpu, iters or nf)")),
        }
    }
}

/// Step function `ρ_s(τ)` sampled at every breakpoint of the table.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileCurve {
    pub solver: String,
    /// `(τ, ρ)` pairs with τ increasing.
    pub points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProfileTable {
    pub metric: Metric,
    /// Problem instances as (name, dim), in first-seen order.
    pub problems: Vec<(String, usize)>,
    pub solvers: Vec<String>,
    /// `ratios[p][s]`; `+∞` where solver `s` did not converge on `p`.
    pub ratios: Vec<Vec<f64>>,
    pub curves: Vec<ProfileCurve>,
}

impl ProfileTable {
    /// Fraction of problems on which `solver` is within a factor `tau` of
    /// the best.
    pub fn rho(&self, solver: usize, tau: f64) -> f64 {
        let hits = self.ratios.iter().filter(|row| row[solver] <= tau).count();
        hits as f64 / self.problems.len() as f64
    }

    pub fn solved_fraction(&self, solver: usize) -> f64 {
        self.rho(solver, f64::MAX)
    }

    pub fn solver_index(&self, name: &str) -> Option<usize> {
        self.solvers.iter().position(|s| s == name)
    }
}

fn index_of<T: PartialEq + Clone>(list: &mut Vec<T>, item: &T) -> usize {
    match list.iter().position(|x| x == item) {
        Some(i) => i,
        None => {
            list.push(item.clone());
            list.len() - 1
        }
    }
}

/// Builds ratios `r_{p,s} = t_{p,s} / min_s t_{p,s}` over converged runs.
///
/// Non-converged and missing cells get `+∞`, as does every cell of a
/// problem nobody solved. Tied fastest solvers all get 1. When the best
/// measurement is exactly 0 only the zero-cost solvers get ratio 1.
pub fn compute_profile(
    records: &[BenchRecord],
    metric: Metric,
) -> Result<ProfileTable, ProfileError> {
    if records.is_empty() {
        return Err(ProfileError::EmptyInput);
    }
    let mut problems = Vec::new();
    let mut solvers = Vec::new();
    let mut cells: HashMap<(usize, usize), f64> = HashMap::new();
    for r in records {
        let p = index_of(&mut problems, &(r.problem.clone(), r.dim));
        let s = index_of(&mut solvers, &r.solver);
        let t = metric.of(r);
        let t = if r.status == RunStatus::Converged && t.is_finite() && t >= 0.0 {
            t
        } else {
            f64::INFINITY
        };
        if cells.insert((p, s), t).is_some() {
            return Err(ProfileError::DuplicatePair {
                problem: r.problem.clone(),
                dim: r.dim,
                solver: r.solver.clone(),
            });
        }
    }

    let ratios: Vec<Vec<f64>> = (0..problems.len())
        .map(|p| {
            let times: Vec<f64> = (0..solvers.len())
                .map(|s| cells.get(&(p, s)).copied().unwrap_or(f64::INFINITY))
                .collect();
            let best = times.iter().copied().fold(f64::INFINITY, f64::min);
            times
                .iter()
                .map(|&t| match () {
                    _ if !best.is_finite() || !t.is_finite() => f64::INFINITY,
                    _ if t == best => 1.0,
                    _ if best == 0.0 => f64::INFINITY,
                    _ => t / best,
                })
                .collect()
        })
        .collect();

    let mut taus: Vec<f64> = ratios
        .iter()
        .flatten()
        .copied()
        .filter(|r| r.is_finite())
        .collect();
    taus.push(1.0);
    taus.sort_by(f64::total_cmp);
    taus.dedup();

    let mut table = ProfileTable {
        metric,
        problems,
        solvers,
        ratios,
        curves: Vec::new(),
    };
    table.curves = (0..table.solvers.len())
        .map(|s| ProfileCurve {
            solver: table.solvers[s].clone(),
            points: taus.iter().map(|&tau| (tau, table.rho(s, tau))).collect(),
        })
        .collect();
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(problem: &str, solver: &str, t: f64, status: RunStatus) -> BenchRecord {
        BenchRecord {
            problem: problem.into(),
            dim: 10,
            solver: solver.into(),
            status,
            iters: 0,
            nf: 0,
            ng: 0,
            cpu_seconds: t,
            f_final: 0.0,
            g_norm_final: 0.0,
        }
    }

    fn ok(p: &str, s: &str, t: f64) -> BenchRecord {
        rec(p, s, t, RunStatus::Converged)
    }

    #[test]
    fn two_by_two_hand_example() {
        let rs = [
            ok("p1", "A", 1.0),
            ok("p1", "B", 2.0),
            ok("p2", "A", 4.0),
            ok("p2", "B", 2.0),
        ];
        let t = compute_profile(&rs, Metric::Cpu).unwrap();
        assert_eq!(t.ratios, vec![vec![1.0, 2.0], vec![2.0, 1.0]]);
        for s in 0..2 {
            assert_eq!(t.curves[s].points, vec![(1.0, 0.5), (2.0, 1.0)]);
        }
    }

    #[test]
    fn single_solver_scores_its_solved_fraction() {
        let rs = [
            ok("p1", "A", 3.0),
            ok("p2", "A", 5.0),
            rec("p3", "A", 1.0, RunStatus::IterLimit),
        ];
        let t = compute_profile(&rs, Metric::Cpu).unwrap();
        assert_eq!(t.curves[0].points, vec![(1.0, 2.0 / 3.0)]);
    }

    #[test]
    fn failing_solver_stays_at_zero() {
        let rs = [
            ok("p1", "A", 1.0),
            rec("p1", "B", 0.1, RunStatus::NumericalFailure),
            ok("p2", "A", 1.0),
            rec("p2", "B", 0.1, RunStatus::IterLimit),
        ];
        let t = compute_profile(&rs, Metric::Cpu).unwrap();
        assert!(t.curves[1].points.iter().all(|&(_, r)| r == 0.0));
        assert_eq!(t.solved_fraction(0), 1.0);
    }

    #[test]
    fn ties_share_ratio_one() {
        let rs = [ok("p", "A", 2.0), ok("p", "B", 2.0), ok("p", "C", 3.0)];
        let t = compute_profile(&rs, Metric::Cpu).unwrap();
        assert_eq!(t.ratios[0], vec![1.0, 1.0, 1.5]);
    }

    #[test]
    fn zero_cost_best() {
        let rs = [ok("p", "A", 0.0), ok("p", "B", 2.0)];
        let t = compute_profile(&rs, Metric::Cpu).unwrap();
        assert_eq!(t.ratios[0], vec![1.0, f64::INFINITY]);
    }

    #[test]
    fn unsolved_problem_is_all_infinite() {
        let rs = [
            rec("p", "A", 1.0, RunStatus::IterLimit),
            rec("p", "B", 1.0, RunStatus::IterLimit),
        ];
        let t = compute_profile(&rs, Metric::Cpu).unwrap();
        assert!(t.ratios[0].iter().all(|r| r.is_infinite()));
    }

    #[test]
    fn metric_selects_column() {
        let mut a = ok("p", "A", 9.0);
        a.iters = 10;
        let mut b = ok("p", "B", 1.0);
        b.iters = 40;
        let t = compute_profile(&[a, b], Metric::Iters).unwrap();
        assert_eq!(t.ratios[0], vec![1.0, 4.0]);
    }

    #[test]
    fn input_errors() {
        assert_eq!(
            compute_profile(&[], Metric::Cpu),
            Err(ProfileError::EmptyInput)
        );
        let rs = [ok("p", "A", 1.0), ok("p", "A", 2.0)];
        assert!(matches!(
            compute_profile(&rs, Metric::Cpu),
            Err(ProfileError::DuplicatePair { .. })
        ));
    }

    #[test]
    fn same_name_at_two_sizes_is_two_problems() {
        let mut b = ok("p", "A", 1.0);
        b.dim = 20;
        let t = compute_profile(&[ok("p", "A", 1.0), b], Metric::Cpu).unwrap();
        assert_eq!(t.problems.len(), 2);
    }
}
