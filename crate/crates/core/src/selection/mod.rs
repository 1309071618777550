//! Per-interval adaptive stencil growth under the data-bounded and
//! positivity-preserving sufficient conditions.

mod bounds;
mod build;
mod extremum;

pub use bounds::{
    admissible, advance_bounds, compute_m_bounds, curvature_initial_bounds, ppi_initial_bounds,
    BoundLedger, CurvatureScale, MBounds,
};
pub use build::{build_interval_interpolant, IntervalInterpolant};
pub use extremum::{detect_extremum, interval_window, neighbor_slopes, ExtremumFlag, Window};
