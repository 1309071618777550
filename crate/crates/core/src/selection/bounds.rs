use crate::divided::{DividedDifferenceTable, Side};
use crate::scalar::Scalar;

use super::extremum::Window;

/// Admissibility state after accepting step `j` of a stencil expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundLedger<T> {
    pub step: usize,
    /// Running product `λ̄_j`.
    pub lambda_bar: T,
    /// `B_j^-`
    pub lower: T,
    /// `B_j^+`
    pub upper: T,
    pub m_left: T,
    pub m_right: T,
}

impl<T: Scalar> BoundLedger<T> {
    pub fn is_admissible(&self) -> bool {
        admissible(self.lower, self.upper, self.lambda_bar)
    }
}

/// `B^- < 0 < B^+` and `B^- <= λ̄ <= B^+`, with exact comparisons.
#[inline]
pub fn admissible<T: Scalar>(lower: T, upper: T, lambda_bar: T) -> bool {
    lower < T::zero() && upper > T::zero() && lower <= lambda_bar && lambda_bar <= upper
}

/// Window factors for the first expansion step when `u_i == u_{i+1}`.
///
/// The polynomial is normalized by `w = U[V_1] (x_{i+1} - x_i) |V_1|`
/// instead of the (vanishing) jump, so the factors depend on which side
/// forms `V_1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureScale<T> {
    pub side: Side,
    pub w: T,
    pub m_left: T,
    pub m_right: T,
}

/// Normalization of the window `[u_min, u_max]` onto the reorganized
/// polynomial `S_n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MBounds<T> {
    /// `u_i != u_{i+1}`: `m_ℓ <= 0` and `m_r >= 1`.
    Slope { m_left: T, m_right: T },
    /// `u_i == u_{i+1}`: one scale per side whose second difference is
    /// non-zero.
    Curvature {
        left: Option<CurvatureScale<T>>,
        right: Option<CurvatureScale<T>>,
    },
    /// Both the slope and every available second difference vanish; the
    /// interval is interpolated linearly.
    LinearFallback,
}

/// Maps the window of interval `i` to `m_ℓ`/`m_r`.
pub fn compute_m_bounds<T: Scalar>(
    table: &DividedDifferenceTable<T>,
    i: usize,
    window: Window<T>,
) -> MBounds<T> {
    let u = table.values();
    let (ui, uj) = (u[i], u[i + 1]);
    let jump = uj - ui;
    if jump != T::zero() {
        let (m_left, m_right) = if jump > T::zero() {
            (
                T::zero().min((window.lower - ui) / jump),
                T::one().max((window.upper - ui) / jump),
            )
        } else {
            (
                T::zero().min((window.upper - ui) / jump),
                T::one().max((window.lower - ui) / jump),
            )
        };
        return MBounds::Slope { m_left, m_right };
    }

    if table.max_order() < 2 {
        return MBounds::LinearFallback;
    }
    let x = table.points();
    let h = x[i + 1] - x[i];
    let scale = |side: Side, lo: usize, hi: usize| -> Option<CurvatureScale<T>> {
        let curvature = table.over(lo, hi);
        if curvature == T::zero() {
            return None;
        }
        let w = curvature * h * (x[hi] - x[lo]);
        let (a, b) = if w > T::zero() {
            ((window.lower - ui) / w, (window.upper - ui) / w)
        } else {
            ((window.upper - ui) / w, (window.lower - ui) / w)
        };
        Some(CurvatureScale {
            side,
            w,
            m_left: T::zero().min(a),
            m_right: T::zero().max(b),
        })
    };
    let left = (i > 0).then(|| scale(Side::Left, i - 1, i + 1)).flatten();
    let right = (i + 2 < table.len())
        .then(|| scale(Side::Right, i, i + 2))
        .flatten();
    if left.is_none() && right.is_none() {
        MBounds::LinearFallback
    } else {
        MBounds::Curvature { left, right }
    }
}

/// `(B_1^-, B_1^+)` for a non-degenerate interval. With `m_ℓ = 0`,
/// `m_r = 1` this is the data-bounded pair `(-d_1, d_1)`.
pub fn ppi_initial_bounds<T: Scalar>(m_left: T, m_right: T, d1: T) -> (T, T) {
    let four = T::lit(4.0);
    (
        (-four * (m_right - T::one()) - T::one()) * d1,
        (-four * m_left + T::one()) * d1,
    )
}

/// `(B_1^-, B_1^+)` for a flat interval (`u_i == u_{i+1}`) under the
/// curvature normalization, where `λ̄_1 = 1`.
///
/// Here `S_n = s(s-1)/d_1 · λ̄_1 δ_2` has no linear term and
/// `s(s-1) ∈ [-1/4, 0]`, so `m_ℓ <= S_n <= m_r` holds whenever
/// `-4 m_r d_1 <= λ̄_1 δ_2 <= -4 m_ℓ d_1`.
pub fn curvature_initial_bounds<T: Scalar>(m_left: T, m_right: T, d1: T) -> (T, T) {
    let four = T::lit(4.0);
    (-four * m_right * d1, -four * m_left * d1)
}

/// `(B_{j+1}^-, B_{j+1}^+)` from the ledger at step `j`, the offset
/// `t_{j+1}` of the point appended at step `j`, and the candidate width
/// `d_{j+1}`. Offsets `t > 0` swap the pair; `t = 0` takes the `t <= 0`
/// branch. Admissibility of the result is not checked here.
pub fn advance_bounds<T: Scalar>(ledger: &BoundLedger<T>, t: T, d: T) -> (T, T) {
    let lower = ledger.lower - ledger.lambda_bar;
    let upper = ledger.upper - ledger.lambda_bar;
    if t <= T::zero() {
        let f = d / (T::one() - t);
        (lower * f, upper * f)
    } else {
        let f = d / -t;
        (upper * f, lower * f)
    }
}
