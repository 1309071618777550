//! Fritsch–Carlson monotone piecewise cubic Hermite interpolation, kept as
//! the comparison baseline.

use crate::error::InterpError;
use crate::mesh::Mesh1D;
use crate::scalar::Scalar;

/// Node derivatives for a monotone piecewise cubic Hermite interpolant.
///
/// Interior slopes are the weighted harmonic mean of the adjacent secants
/// (zero where the secants change sign or vanish); end slopes use the
/// one-sided three-point formula, limited to keep the shape.
pub fn pchip_slopes<T: Scalar>(points: &[T], values: &[T]) -> Vec<T> {
    let n = points.len();
    let h: Vec<T> = points.windows(2).map(|w| w[1] - w[0]).collect();
    let delta: Vec<T> = values
        .windows(2)
        .zip(&h)
        .map(|(u, &hk)| (u[1] - u[0]) / hk)
        .collect();
    if n == 2 {
        return vec![delta[0]; 2];
    }

    let zero = T::zero();
    let two = T::lit(2.0);
    let mut d = vec![zero; n];
    for k in 1..n - 1 {
        let (s1, s2) = (delta[k - 1], delta[k]);
        if s1 * s2 <= zero {
            continue;
        }
        let w1 = two * h[k] + h[k - 1];
        let w2 = h[k] + two * h[k - 1];
        d[k] = (w1 + w2) / (w1 / s1 + w2 / s2);
    }
    d[0] = end_slope(h[0], h[1], delta[0], delta[1]);
    d[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    d
}

fn end_slope<T: Scalar>(h0: T, h1: T, s0: T, s1: T) -> T {
    let two = T::lit(2.0);
    let three = T::lit(3.0);
    let d = ((two * h0 + h1) * s0 - h0 * s1) / (h0 + h1);
    if d.signum() != s0.signum() || s0 == T::zero() {
        T::zero()
    } else if s0.signum() != s1.signum() && d.abs() > three * s0.abs() {
        three * s0
    } else {
        d
    }
}

/// Cubic Hermite value on `[x0, x1]` with end values and slopes.
#[inline]
pub(crate) fn hermite<T: Scalar>(x0: T, x1: T, u0: T, u1: T, d0: T, d1: T, x: T) -> T {
    let h = x1 - x0;
    let t = (x - x0) / h;
    let one = T::one();
    let two = T::lit(2.0);
    let three = T::lit(3.0);
    let t2 = t * t;
    let t3 = t2 * t;
    let h00 = two * t3 - three * t2 + one;
    let h10 = t3 - two * t2 + t;
    let h01 = three * t2 - two * t3;
    let h11 = t3 - t2;
    h00 * u0 + h10 * h * d0 + h01 * u1 + h11 * h * d1
}

/// PCHIP values of `mesh` at each query.
pub fn pchip_interpolate<T: Scalar>(
    mesh: &Mesh1D<T>,
    queries: &[T],
) -> Result<Vec<T>, InterpError> {
    let slopes = pchip_slopes(mesh.points(), mesh.values());
    let (x, u) = (mesh.points(), mesh.values());
    queries
        .iter()
        .map(|&q| {
            let k = mesh.locate(q)?;
            Ok(hermite(
                x[k],
                x[k + 1],
                u[k],
                u[k + 1],
                slopes[k],
                slopes[k + 1],
                q,
            ))
        })
        .collect()
}
