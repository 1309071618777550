//! Trapezoid-rule L2 norms on uniform evaluation grids.

/// Evaluation points used for the 1D error integral.
pub const QUADRATURE_POINTS_1D: usize = 10_000;
/// Evaluation points per axis for the 2D error integral.
pub const QUADRATURE_POINTS_2D: usize = 1_000;

/// `n` uniformly spaced evaluation points on `[lo, hi]`.
pub fn evaluation_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2, "evaluation grid needs at least 2 points");
    let h = (hi - lo) / (n - 1) as f64;
    let mut x: Vec<f64> = (0..n).map(|k| lo + k as f64 * h).collect();
    x[n - 1] = hi;
    x
}

fn trapezoid_weights(n: usize, h: f64) -> impl Iterator<Item = f64> {
    (0..n).map(move |k| if k == 0 || k + 1 == n { 0.5 * h } else { h })
}

/// `‖approx − exact‖₂` over the uniform grid `x`.
pub fn l2_error_1d(x: &[f64], approx: &[f64], exact: impl Fn(f64) -> f64) -> f64 {
    assert_eq!(x.len(), approx.len());
    let h = (x[x.len() - 1] - x[0]) / (x.len() - 1) as f64;
    trapezoid_weights(x.len(), h)
        .zip(x.iter().zip(approx))
        .map(|(w, (&xk, &a))| {
            let e = a - exact(xk);
            w * e * e
        })
        .sum::<f64>()
        .sqrt()
}

/// Tensor trapezoid `‖approx − exact‖₂`; `approx` is indexed `[iy][ix]`.
pub fn l2_error_2d(
    x: &[f64],
    y: &[f64],
    approx: &[Vec<f64>],
    exact: impl Fn(f64, f64) -> f64,
) -> f64 {
    assert_eq!(y.len(), approx.len());
    let hx = (x[x.len() - 1] - x[0]) / (x.len() - 1) as f64;
    let hy = (y[y.len() - 1] - y[0]) / (y.len() - 1) as f64;
    let wx: Vec<f64> = trapezoid_weights(x.len(), hx).collect();
    trapezoid_weights(y.len(), hy)
        .zip(y.iter().zip(approx))
        .map(|(wy, (&yk, row))| {
            assert_eq!(row.len(), x.len());
            let inner: f64 = wx
                .iter()
                .zip(x.iter().zip(row))
                .map(|(w, (&xk, &a))| {
                    let e = a - exact(xk, yk);
                    w * e * e
                })
                .sum();
            wy * inner
        })
        .sum::<f64>()
        .sqrt()
}
