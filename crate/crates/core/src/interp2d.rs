//! Tensor-product interpolation by successive 1D sweeps.

use rayon::prelude::*;

use crate::config::{InterpConfig, SweepOrder};
use crate::error::InterpError;
use crate::interp1d::Interpolant1D;
use crate::mesh::Mesh1D;
use crate::scalar::Scalar;

/// Values on a tensor grid, stored row-major as `values[iy * nx + ix]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridData2D<T> {
    x: Vec<T>,
    y: Vec<T>,
    values: Vec<T>,
}

impl<T: Scalar> GridData2D<T> {
    pub fn new(x: Vec<T>, y: Vec<T>, values: Vec<T>) -> Result<Self, InterpError> {
        if values.len() != x.len() * y.len() {
            return Err(InterpError::ShapeMismatch {
                rows: y.len(),
                cols: x.len(),
                got: values.len(),
            });
        }
        // validate both axes as meshes
        Mesh1D::new(x.clone(), vec![T::zero(); x.len()])?;
        Mesh1D::new(y.clone(), vec![T::zero(); y.len()])?;
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(crate::error::MeshError::NonFinite { index }.into());
        }
        Ok(Self { x, y, values })
    }

    /// Samples `f(x, y)` on the tensor grid.
    pub fn from_fn(x: Vec<T>, y: Vec<T>, f: impl Fn(T, T) -> T) -> Result<Self, InterpError> {
        let values = y
            .iter()
            .flat_map(|&yv| x.iter().map(move |&xv| (xv, yv)))
            .map(|(xv, yv)| f(xv, yv))
            .collect();
        Self::new(x, y, values)
    }

    pub fn x(&self) -> &[T] {
        &self.x
    }

    pub fn y(&self) -> &[T] {
        &self.y
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn get(&self, iy: usize, ix: usize) -> T {
        self.values[iy * self.x.len() + ix]
    }

    fn row(&self, iy: usize) -> Vec<T> {
        let nx = self.x.len();
        self.values[iy * nx..(iy + 1) * nx].to_vec()
    }

    fn column(&self, ix: usize) -> Vec<T> {
        (0..self.y.len()).map(|iy| self.get(iy, ix)).collect()
    }
}

fn sweep<T: Scalar>(
    axis: &[T],
    lines: Vec<Vec<T>>,
    queries: &[T],
    config: &InterpConfig<T>,
) -> Result<Vec<Vec<T>>, InterpError> {
    lines
        .into_par_iter()
        .map(|values| {
            let mesh = Mesh1D::new(axis.to_vec(), values)?;
            Interpolant1D::new(mesh, *config)?.eval_many(queries)
        })
        .collect()
}

fn transpose<T: Copy>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|c| m.iter().map(|row| row[c]).collect())
        .collect()
}

fn check_domain<T: Scalar>(axis: &[T], queries: &[T]) -> Result<(), InterpError> {
    let (lo, hi) = (axis[0], axis[axis.len() - 1]);
    match queries.iter().find(|&&q| !(q >= lo && q <= hi)) {
        Some(&x) => Err(InterpError::OutOfDomain {
            x: x.as_f64(),
            lo: lo.as_f64(),
            hi: hi.as_f64(),
        }),
        None => Ok(()),
    }
}

/// Interpolates `grid` onto the tensor product of the queries; the result is
/// indexed `[qy][qx]`.
pub fn interpolate_2d<T: Scalar>(
    grid: &GridData2D<T>,
    x_queries: &[T],
    y_queries: &[T],
    config: &InterpConfig<T>,
) -> Result<Vec<Vec<T>>, InterpError> {
    config.validate()?;
    check_domain(&grid.x, x_queries)?;
    check_domain(&grid.y, y_queries)?;
    match config.sweep {
        SweepOrder::XThenY => {
            let rows = (0..grid.y.len()).map(|iy| grid.row(iy)).collect();
            // [iy][qx]
            let along_x = sweep(&grid.x, rows, x_queries, config)?;
            // [qx][qy]
            let along_y = sweep(&grid.y, transpose(&along_x), y_queries, config)?;
            Ok(transpose(&along_y))
        }
        SweepOrder::YThenX => {
            let columns = (0..grid.x.len()).map(|ix| grid.column(ix)).collect();
            // [ix][qy]
            let along_y = sweep(&grid.y, columns, y_queries, config)?;
            // [qy][qx]
            sweep(&grid.x, transpose(&along_y), x_queries, config)
        }
    }
}
