//! Piecewise interpolation over a full 1D mesh.

use std::sync::OnceLock;

use crate::config::{InterpConfig, Method};
use crate::divided::DividedDifferenceTable;
use crate::error::InterpError;
use crate::mesh::Mesh1D;
use crate::pchip::{hermite, pchip_slopes};
use crate::scalar::Scalar;
use crate::selection::{build_interval_interpolant, IntervalInterpolant};

#[derive(Debug)]
enum Pieces<T> {
    Linear,
    Pchip(Vec<T>),
    Adaptive {
        table: DividedDifferenceTable<T>,
        // built on first use, at most once per interval
        cells: Vec<OnceLock<IntervalInterpolant<T>>>,
    },
}

/// Piecewise interpolant of a mesh under one [`InterpConfig`].
#[derive(Debug)]
pub struct Interpolant1D<T> {
    mesh: Mesh1D<T>,
    config: InterpConfig<T>,
    pieces: Pieces<T>,
}

impl<T: Scalar> Interpolant1D<T> {
    pub fn new(mesh: Mesh1D<T>, config: InterpConfig<T>) -> Result<Self, InterpError> {
        config.validate()?;
        let pieces = match config.method {
            Method::Linear => Pieces::Linear,
            Method::Pchip => Pieces::Pchip(pchip_slopes(mesh.points(), mesh.values())),
            Method::Dbi | Method::Ppi => Pieces::Adaptive {
                table: DividedDifferenceTable::with_max_order(&mesh, config.degree),
                cells: (0..mesh.interval_count())
                    .map(|_| OnceLock::new())
                    .collect(),
            },
        };
        Ok(Self {
            mesh,
            config,
            pieces,
        })
    }

    pub fn mesh(&self) -> &Mesh1D<T> {
        &self.mesh
    }

    pub fn config(&self) -> &InterpConfig<T> {
        &self.config
    }

    /// Interval polynomial for DBI/PPI; `None` for the baseline methods.
    pub fn interval(&self, i: usize) -> Option<&IntervalInterpolant<T>> {
        match &self.pieces {
            Pieces::Adaptive { table, cells } => {
                Some(cells[i].get_or_init(|| build_interval_interpolant(table, i, &self.config)))
            }
            _ => None,
        }
    }

    pub fn eval(&self, x: T) -> Result<T, InterpError> {
        let i = self.mesh.locate(x)?;
        let (p, u) = (self.mesh.points(), self.mesh.values());
        if x == p[i + 1] {
            return Ok(u[i + 1]);
        }
        Ok(match &self.pieces {
            Pieces::Linear => u[i] + (u[i + 1] - u[i]) * ((x - p[i]) / (p[i + 1] - p[i])),
            Pieces::Pchip(d) => hermite(p[i], p[i + 1], u[i], u[i + 1], d[i], d[i + 1], x),
            Pieces::Adaptive { .. } => self.interval(i).expect("adaptive pieces").eval(x),
        })
    }

    pub fn eval_many(&self, queries: &[T]) -> Result<Vec<T>, InterpError> {
        queries.iter().map(|&x| self.eval(x)).collect()
    }
}

/// Interpolates `mesh` at every query with the configured method.
pub fn interpolate_1d<T: Scalar>(
    mesh: &Mesh1D<T>,
    queries: &[T],
    config: &InterpConfig<T>,
) -> Result<Vec<T>, InterpError> {
    Interpolant1D::new(mesh.clone(), *config)?.eval_many(queries)
}
