//! Newton divided differences, insertion-ordered stencils and Newton-form
//! evaluation.

use crate::mesh::Mesh1D;
use crate::scalar::Scalar;

/// Triangular table of divided differences over a mesh.
///
/// `get(i, j)` is `U[x_i, ..., x_{i+j}]`. The table is immutable once built
/// and may be shared between threads; every interval reads from it.
#[derive(Debug, Clone)]
pub struct DividedDifferenceTable<T> {
    points: Vec<T>,
    // orders[j][i] = U[x_i, ..., x_{i+j}]
    orders: Vec<Vec<T>>,
}

impl<T: Scalar> DividedDifferenceTable<T> {
    /// Full table of all orders `0..n`.
    pub fn new(mesh: &Mesh1D<T>) -> Self {
        Self::with_max_order(mesh, mesh.len() - 1)
    }

    /// Table truncated at `max_order` (clamped to `n - 1`). Lower orders are
    /// identical to those of the full table.
    pub fn with_max_order(mesh: &Mesh1D<T>, max_order: usize) -> Self {
        let x = mesh.points();
        let n = x.len();
        let max_order = max_order.min(n - 1);
        let mut orders = Vec::with_capacity(max_order + 1);
        orders.push(mesh.values().to_vec());
        for j in 1..=max_order {
            let prev: &Vec<T> = &orders[j - 1];
            let next = (0..n - j)
                .map(|i| (prev[i + 1] - prev[i]) / (x[i + j] - x[i]))
                .collect();
            orders.push(next);
        }
        Self {
            points: x.to_vec(),
            orders,
        }
    }

    #[inline]
    pub fn get(&self, start: usize, order: usize) -> T {
        self.orders[order][start]
    }

    /// `U[x_left, ..., x_right]` over a contiguous index range.
    #[inline]
    pub fn over(&self, left: usize, right: usize) -> T {
        self.orders[right - left][left]
    }

    pub fn max_order(&self) -> usize {
        self.orders.len() - 1
    }

    pub fn points(&self) -> &[T] {
        &self.points
    }

    pub fn values(&self) -> &[T] {
        &self.orders[0]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Builds the full divided-difference table of `mesh`.
pub fn build_table<T: Scalar>(mesh: &Mesh1D<T>) -> DividedDifferenceTable<T> {
    DividedDifferenceTable::new(mesh)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Stencil nodes for interval `I_i` in insertion order.
///
/// The first two nodes are always `i` and `i + 1`; each later node is the
/// point that was appended at that step. The index set stays contiguous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StencilNodes {
    nodes: Vec<usize>,
    left: usize,
    right: usize,
}

impl StencilNodes {
    pub fn new(interval: usize) -> Self {
        Self {
            nodes: vec![interval, interval + 1],
            left: interval,
            right: interval + 1,
        }
    }

    pub fn interval(&self) -> usize {
        self.nodes[0]
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Polynomial degree of the interpolant over this stencil.
    pub fn degree(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Mesh index that would be appended on `side`, if the mesh has one.
    pub fn neighbor(&self, side: Side, mesh_len: usize) -> Option<usize> {
        match side {
            Side::Left => self.left.checked_sub(1),
            Side::Right => (self.right + 1 < mesh_len).then_some(self.right + 1),
        }
    }

    /// Index range a stencil would cover after appending on `side`.
    pub fn extended_range(&self, side: Side) -> (usize, usize) {
        match side {
            Side::Left => (self.left - 1, self.right),
            Side::Right => (self.left, self.right + 1),
        }
    }

    pub fn push(&mut self, side: Side) {
        match side {
            Side::Left => {
                self.left -= 1;
                self.nodes.push(self.left);
            }
            Side::Right => {
                self.right += 1;
                self.nodes.push(self.right);
            }
        }
    }

    /// Contiguous index range `(lo, hi)` covered by the first `k + 1` nodes.
    pub fn prefix_range(&self, k: usize) -> (usize, usize) {
        let prefix = &self.nodes[..=k];
        let lo = *prefix.iter().min().expect("non-empty prefix");
        let hi = *prefix.iter().max().expect("non-empty prefix");
        (lo, hi)
    }

    /// Newton coefficients in insertion order: entry `k` is the divided
    /// difference over the first `k + 1` nodes.
    pub fn newton_coefficients<T: Scalar>(&self, table: &DividedDifferenceTable<T>) -> Vec<T> {
        (0..self.nodes.len())
            .map(|k| {
                let (lo, hi) = self.prefix_range(k);
                table.over(lo, hi)
            })
            .collect()
    }

    pub fn abscissae<T: Scalar>(&self, points: &[T]) -> Vec<T> {
        self.nodes.iter().map(|&k| points[k]).collect()
    }
}

/// Evaluates `c_0 + (x - e_0)(c_1 + (x - e_1)(c_2 + ...))` by nested
/// multiplication.
pub fn newton_horner<T: Scalar>(nodes: &[T], coefficients: &[T], x: T) -> T {
    debug_assert_eq!(nodes.len(), coefficients.len());
    let k = coefficients.len();
    let mut acc = coefficients[k - 1];
    for m in (0..k - 1).rev() {
        acc = coefficients[m] + (x - nodes[m]) * acc;
    }
    acc
}

/// Value at `x` of the Newton interpolant over `stencil`.
pub fn newton_eval<T: Scalar>(
    stencil: &StencilNodes,
    table: &DividedDifferenceTable<T>,
    x: T,
) -> T {
    let coefficients = stencil.newton_coefficients(table);
    let nodes = stencil.abscissae(table.points());
    newton_horner(&nodes, &coefficients, x)
}

/// Normalized offset `t_j` and width `d_j` for step `j` of a stencil.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepGeometry<T> {
    /// `(x_j^e - x_i) / (x_{i+1} - x_i)`
    pub offset: T,
    /// width of `V_j` over the width of `I_i`
    pub width: T,
}

/// `t_j` and `d_j` for `j >= 1`; `None` when `V_j` has not been built yet.
pub fn interval_geometry<T: Scalar>(
    stencil: &StencilNodes,
    points: &[T],
    j: usize,
) -> Option<StepGeometry<T>> {
    if j == 0 || stencil.len() < j + 2 {
        return None;
    }
    let i = stencil.interval();
    let h = points[i + 1] - points[i];
    let (lo, hi) = stencil.prefix_range(j + 1);
    Some(StepGeometry {
        offset: (points[stencil.nodes()[j]] - points[i]) / h,
        width: (points[hi] - points[lo]) / h,
    })
}
