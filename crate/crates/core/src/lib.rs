//! High-order data-bounded (DBI) and constrained positivity-preserving (PPI)
//! interpolation on arbitrary nonuniform meshes.
//!
//! Each interval `[x_i, x_{i+1}]` gets its own Newton polynomial. The stencil
//! starts at `{x_i, x_{i+1}}` and grows one point at a time, left or right,
//! for as long as the running product of divided-difference ratios stays
//! inside recursively computed bounds. Those bounds are sufficient for the
//! polynomial to stay between `u_i` and `u_{i+1}` (DBI) or inside a relaxed
//! window `[u_min, u_max]` (PPI), so positive data give positive
//! interpolants. PCHIP and piecewise-linear baselines share the same API.
//!
//! Everything is generic over [`Scalar`] (`f32` or `f64`); the aliases at the
//! crate root fix the scalar to `f64`.

pub mod config;
pub mod divided;
pub mod error;
pub mod interp1d;
pub mod interp2d;
pub mod mesh;
pub mod pchip;
pub mod scalar;
pub mod selection;

pub use config::{InterpConfig, Method, SweepOrder};
pub use divided::{
    build_table, interval_geometry, newton_eval, newton_horner, DividedDifferenceTable, Side,
    StencilNodes, StepGeometry,
};
pub use error::{InterpError, MeshError};
pub use interp1d::{interpolate_1d, Interpolant1D};
pub use interp2d::{interpolate_2d, GridData2D};
pub use mesh::Mesh1D;
pub use pchip::{pchip_interpolate, pchip_slopes};
pub use scalar::Scalar;
pub use selection::{
    build_interval_interpolant, detect_extremum, interval_window, BoundLedger, ExtremumFlag,
    IntervalInterpolant, MBounds, Window,
};

pub type Mesh = Mesh1D<f64>;
pub type Table = DividedDifferenceTable<f64>;
pub type Config = InterpConfig<f64>;
pub type Interpolant = Interpolant1D<f64>;
pub type Interval = IntervalInterpolant<f64>;
pub type Grid = GridData2D<f64>;

pub type Mesh32 = Mesh1D<f32>;
pub type Config32 = InterpConfig<f32>;
pub type Interpolant32 = Interpolant1D<f32>;
