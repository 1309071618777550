use crate::divided::DividedDifferenceTable;
use crate::scalar::Scalar;

/// Hidden-extremum classification of an interval from the signs of the
/// neighbouring slopes `σ_{i-1}`, `σ_i`, `σ_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremumFlag {
    None,
    /// `σ_{i-1} > 0 > σ_{i+1}`: the data rise then fall. Widens `u_max`.
    Maximum,
    /// `σ_{i-1} < 0 < σ_{i+1}`: the data fall then rise. Widens `u_min`.
    Minimum,
    /// `σ_{i-1} σ_{i+1} >= 0` but `σ_{i-1} σ_i < 0`. Widens both sides.
    Ambiguous,
}

impl ExtremumFlag {
    pub fn widens_lower(self) -> bool {
        matches!(self, Self::Minimum | Self::Ambiguous)
    }

    pub fn widens_upper(self) -> bool {
        matches!(self, Self::Maximum | Self::Ambiguous)
    }
}

/// `(σ_{i-1}, σ_i, σ_{i+1})` for interval `i`. A slope missing at the mesh
/// boundary takes the value of `σ_i`.
pub fn neighbor_slopes<T: Scalar>(table: &DividedDifferenceTable<T>, i: usize) -> (T, T, T) {
    let n = table.len();
    let centre = table.get(i, 1);
    let before = if i > 0 { table.get(i - 1, 1) } else { centre };
    let after = if i + 2 < n {
        table.get(i + 1, 1)
    } else {
        centre
    };
    (before, centre, after)
}

pub fn detect_extremum<T: Scalar>(table: &DividedDifferenceTable<T>, i: usize) -> ExtremumFlag {
    let (before, centre, after) = neighbor_slopes(table, i);
    let zero = T::zero();
    if before * after < zero {
        if before < zero {
            ExtremumFlag::Minimum
        } else {
            ExtremumFlag::Maximum
        }
    } else if before * centre < zero {
        ExtremumFlag::Ambiguous
    } else {
        ExtremumFlag::None
    }
}

/// Closed range an interval's interpolant must stay inside.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window<T> {
    pub lower: T,
    pub upper: T,
}

impl<T: Scalar> Window<T> {
    /// `[min(a, b), max(a, b)]`.
    pub fn data(a: T, b: T) -> Self {
        Self {
            lower: a.min(b),
            upper: a.max(b),
        }
    }

    pub fn contains(&self, v: T, tol: T) -> bool {
        v >= self.lower - tol && v <= self.upper + tol
    }
}

/// PPI window `[u_min, u_max]` for interval `i`.
///
/// Margins are `|min|`/`|max|` on the side a detected extremum points to
/// and `ε|min|`/`ε|max|` otherwise.
pub fn interval_window<T: Scalar>(
    i: usize,
    values: &[T],
    flag: ExtremumFlag,
    epsilon: T,
) -> Window<T> {
    let data = Window::data(values[i], values[i + 1]);
    let below = if flag.widens_lower() {
        data.lower.abs()
    } else {
        epsilon * data.lower.abs()
    };
    let above = if flag.widens_upper() {
        data.upper.abs()
    } else {
        epsilon * data.upper.abs()
    };
    Window {
        lower: data.lower - below,
        upper: data.upper + above,
    }
}
