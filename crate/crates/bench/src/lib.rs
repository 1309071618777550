//! Convergence-study harness for the `ppinterp` methods: test functions,
//! uniform and LGL-element meshes, trapezoid-rule L2 errors, and CSV tables.

pub mod experiment;
pub mod functions;
pub mod meshes;
pub mod norm;

pub use experiment::{
    convergence_rate, csv_string, measure, run_experiment, write_csv, ConvergenceRow,
    ExperimentSpec, MeshFamily, CSV_HEADER, DEFAULT_LADDER, HIDDEN_EXTREMUM_LADDER,
};
pub use functions::TestFunction;
pub use meshes::{lgl_mesh, lgl_nodes, uniform_mesh};
pub use norm::{evaluation_grid, l2_error_1d, l2_error_2d};

use ppinterp::{InterpError, MeshError};

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error("a mesh needs at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("LGL meshes need N with (N - 1) divisible by 8 and N >= 9, got {0}")]
    LglDivisibility(usize),
    #[error("LGL node {node} of {points} did not converge")]
    LglNoConvergence { points: usize, node: usize },
    #[error("unknown mesh family `{0}` (expected uniform or lgl)")]
    UnknownMesh(String),
    #[error("the resolution list is empty")]
    EmptyLadder,
    #[error(transparent)]
    Interp(#[from] InterpError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<MeshError> for BenchError {
    fn from(e: MeshError) -> Self {
        Self::Interp(e.into())
    }
}
