use crate::config::{InterpConfig, Method};
use crate::divided::{newton_horner, DividedDifferenceTable, Side, StencilNodes};
use crate::scalar::Scalar;

use super::bounds::{
    admissible, advance_bounds, compute_m_bounds, curvature_initial_bounds, ppi_initial_bounds,
    BoundLedger, MBounds,
};
use super::extremum::{detect_extremum, interval_window, ExtremumFlag, Window};

/// Final polynomial for one interval `[x_i, x_{i+1}]`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalInterpolant<T> {
    pub interval: usize,
    pub stencil: StencilNodes,
    /// Stencil abscissae in insertion order.
    pub nodes: Vec<T>,
    /// Newton coefficients in insertion order.
    pub coefficients: Vec<T>,
    pub flag: ExtremumFlag,
    /// Range the construction guarantees on the interval.
    pub window: Window<T>,
    /// Ledger of the last accepted expansion; `None` if the stencil never
    /// grew past `{x_i, x_{i+1}}`.
    pub ledger: Option<BoundLedger<T>>,
}

impl<T: Scalar> IntervalInterpolant<T> {
    pub fn degree(&self) -> usize {
        self.stencil.degree()
    }

    pub fn eval(&self, x: T) -> T {
        newton_horner(&self.nodes, &self.coefficients, x)
    }
}

#[derive(Debug, Clone, Copy)]
struct Candidate<T> {
    side: Side,
    lambda_bar: T,
    lower: T,
    upper: T,
    m_left: T,
    m_right: T,
}

impl<T: Scalar> Candidate<T> {
    fn admissible(self) -> Option<Self> {
        admissible(self.lower, self.upper, self.lambda_bar).then_some(self)
    }
}

/// Grows the stencil of interval `i` from `{x_i, x_{i+1}}` one point at a
/// time while the bound conditions hold, up to `config.degree + 1` points.
///
/// When both sides are admissible the side that balances the stencil about
/// `x_i` is taken; on a tie, the side with the smaller `|λ̄|`.
pub fn build_interval_interpolant<T: Scalar>(
    table: &DividedDifferenceTable<T>,
    i: usize,
    config: &InterpConfig<T>,
) -> IntervalInterpolant<T> {
    let u = table.values();
    let flag = detect_extremum(table, i);
    let window = match config.method {
        Method::Ppi => interval_window(i, u, flag, config.epsilon),
        _ => Window::data(u[i], u[i + 1]),
    };

    let mut stencil = StencilNodes::new(i);
    let max_points = (config.degree + 1)
        .min(table.len())
        .min(table.max_order() + 1);
    let mut ledger = None;
    if matches!(config.method, Method::Dbi | Method::Ppi) && max_points > 2 {
        let m = if config.method == Method::Dbi && u[i] != u[i + 1] {
            MBounds::Slope {
                m_left: T::zero(),
                m_right: T::one(),
            }
        } else {
            compute_m_bounds(table, i, window)
        };
        ledger = grow(table, &mut stencil, &m, max_points);
    }

    IntervalInterpolant {
        interval: i,
        nodes: stencil.abscissae(table.points()),
        coefficients: stencil.newton_coefficients(table),
        stencil,
        flag,
        window,
        ledger,
    }
}

fn grow<T: Scalar>(
    table: &DividedDifferenceTable<T>,
    stencil: &mut StencilNodes,
    m: &MBounds<T>,
    max_points: usize,
) -> Option<BoundLedger<T>> {
    let x = table.points();
    let n = table.len();
    let i = stencil.interval();
    let h = x[i + 1] - x[i];

    let first = |side: Side| -> Option<Candidate<T>> {
        stencil.neighbor(side, n)?;
        let (lo, hi) = stencil.extended_range(side);
        let width = x[hi] - x[lo];
        let d1 = width / h;
        match *m {
            MBounds::Slope { m_left, m_right } => {
                let (lower, upper) = ppi_initial_bounds(m_left, m_right, d1);
                Candidate {
                    side,
                    lambda_bar: table.over(lo, hi) / table.over(i, i + 1) * width,
                    lower,
                    upper,
                    m_left,
                    m_right,
                }
                .admissible()
            }
            MBounds::Curvature { left, right } => {
                let scale = match side {
                    Side::Left => left,
                    Side::Right => right,
                }?;
                let (lower, upper) = curvature_initial_bounds(scale.m_left, scale.m_right, d1);
                Candidate {
                    side,
                    lambda_bar: T::one(),
                    lower,
                    upper,
                    m_left: scale.m_left,
                    m_right: scale.m_right,
                }
                .admissible()
            }
            MBounds::LinearFallback => None,
        }
    };

    let mut ledger = select(stencil, first(Side::Left), first(Side::Right)).map(|c| {
        stencil.push(c.side);
        accept(1, c)
    })?;

    // λ̄ is a running product of λ_j = U[V_j]/U[V_{j-1}]·width(V_j). When a
    // divided difference vanishes exactly (symmetric data do this), the
    // product continues from the last nonzero one, carrying the widths
    // in between: λ̄_j = U[V_j]/U[V_k] · Π width · λ̄_k.
    let first_dd = table.over(stencil.left(), stencil.right());
    let (mut anchor, mut carried) = if first_dd != T::zero() {
        ((first_dd, ledger.lambda_bar), T::one())
    } else {
        // only the slope path can get here: U[V_1] = 0 means λ̄_1 = 0
        (
            (table.over(i, i + 1), T::one()),
            x[stencil.right()] - x[stencil.left()],
        )
    };

    while stencil.len() < max_points {
        // offset of the point appended at the previous step
        let t = (x[stencil.nodes()[ledger.step + 1]] - x[i]) / h;
        let next = |side: Side| -> Option<Candidate<T>> {
            stencil.neighbor(side, n)?;
            let (lo, hi) = stencil.extended_range(side);
            let width = x[hi] - x[lo];
            let lambda = table.over(lo, hi) / anchor.0 * (carried * width);
            let (lower, upper) = advance_bounds(&ledger, t, width / h);
            Candidate {
                side,
                lambda_bar: lambda * anchor.1,
                lower,
                upper,
                m_left: ledger.m_left,
                m_right: ledger.m_right,
            }
            .admissible()
        };
        let Some(choice) = select(stencil, next(Side::Left), next(Side::Right)) else {
            break;
        };
        stencil.push(choice.side);
        ledger = accept(ledger.step + 1, choice);
        let (lo, hi) = (stencil.left(), stencil.right());
        let dd = table.over(lo, hi);
        if dd != T::zero() {
            anchor = (dd, ledger.lambda_bar);
            carried = T::one();
        } else {
            carried = carried * (x[hi] - x[lo]);
        }
    }
    Some(ledger)
}

fn accept<T: Scalar>(step: usize, c: Candidate<T>) -> BoundLedger<T> {
    BoundLedger {
        step,
        lambda_bar: c.lambda_bar,
        lower: c.lower,
        upper: c.upper,
        m_left: c.m_left,
        m_right: c.m_right,
    }
}

fn select<T: Scalar>(
    stencil: &StencilNodes,
    left: Option<Candidate<T>>,
    right: Option<Candidate<T>>,
) -> Option<Candidate<T>> {
    match (left, right) {
        (Some(l), Some(r)) => Some(match preferred_side(stencil, l.lambda_bar, r.lambda_bar) {
            Side::Left => l,
            Side::Right => r,
        }),
        (l, r) => l.or(r),
    }
}

/// Preference between two admissible candidates: balance the points on
/// either side of `x_i` (`x_i` itself not counted, so `x_{i+1}` makes the
/// bare interval right-heavy), otherwise take the smaller `|λ̄|` (right on
/// ties).
pub(crate) fn preferred_side<T: Scalar>(
    stencil: &StencilNodes,
    left_lambda: T,
    right_lambda: T,
) -> Side {
    let i = stencil.interval();
    let points_left = i - stencil.left();
    let points_right = stencil.right() - i;
    match points_left.cmp(&points_right) {
        std::cmp::Ordering::Less => Side::Left,
        std::cmp::Ordering::Greater => Side::Right,
        std::cmp::Ordering::Equal => {
            if left_lambda.abs() >= right_lambda.abs() {
                Side::Right
            } else {
                Side::Left
            }
        }
    }
}
