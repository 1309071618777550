//! One-dimensional source meshes.

use crate::error::{InterpError, MeshError};
use crate::scalar::Scalar;

/// Strictly increasing abscissae paired with data values.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh1D<T> {
    points: Vec<T>,
    values: Vec<T>,
}

impl<T: Scalar> Mesh1D<T> {
    pub fn new(points: Vec<T>, values: Vec<T>) -> Result<Self, MeshError> {
        if points.len() != values.len() {
            return Err(MeshError::LengthMismatch {
                points: points.len(),
                values: values.len(),
            });
        }
        if points.len() < 2 {
            return Err(MeshError::TooFewPoints(points.len()));
        }
        if let Some(index) = points
            .iter()
            .zip(&values)
            .position(|(x, u)| !x.is_finite() || !u.is_finite())
        {
            return Err(MeshError::NonFinite { index });
        }
        if let Some(k) = points.windows(2).position(|w| w[0] >= w[1]) {
            return Err(MeshError::NotIncreasing { index: k + 1 });
        }
        Ok(Self { points, values })
    }

    /// Samples `f` at the given abscissae.
    pub fn from_fn(points: Vec<T>, f: impl Fn(T) -> T) -> Result<Self, MeshError> {
        let values = points.iter().map(|&x| f(x)).collect();
        Self::new(points, values)
    }

    pub fn points(&self) -> &[T] {
        &self.points
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Number of intervals `[x_i, x_{i+1}]`.
    pub fn interval_count(&self) -> usize {
        self.points.len() - 1
    }

    pub fn domain(&self) -> (T, T) {
        (self.points[0], self.points[self.points.len() - 1])
    }

    pub fn max_spacing(&self) -> T {
        self.points
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(T::zero(), T::max)
    }

    /// Index of the interval containing `x`.
    ///
    /// Intervals are left-closed: a query on an interior node belongs to the
    /// interval on its right, and the last node belongs to the last interval.
    pub fn locate(&self, x: T) -> Result<usize, InterpError> {
        let (lo, hi) = self.domain();
        if !(x >= lo && x <= hi) {
            return Err(InterpError::OutOfDomain {
                x: x.as_f64(),
                lo: lo.as_f64(),
                hi: hi.as_f64(),
            });
        }
        let above = self.points.partition_point(|&p| p <= x);
        Ok(above.saturating_sub(1).min(self.points.len() - 2))
    }
}
