//! Benchmark harness for the `marc-core` solvers: solver × problem grids,
//! CSV results, Dolan–Moré performance profiles and SVG plots.

mod error;
pub mod grid;
pub mod profile;
pub mod records;
pub mod solver;
pub mod svg;

pub use error::{BenchError, ProfileError};
pub use grid::{run_case, run_grid, run_grid_reports, BenchRecord, DimSet, GridRun};
pub use profile::{compute_profile, Metric, ProfileCurve, ProfileTable};
pub use records::{read_records, write_profile, write_records};
pub use solver::{all_solvers, default_solvers, SolverKind};
pub use svg::{emit_profile_svg, render_profile_svg};
