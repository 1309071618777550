use crate::BenchError;

/// Nodes per LGL element, endpoints included.
pub const LGL_ELEMENT_NODES: usize = 9;

const LGL_MAX_ITER: usize = 100;
const LGL_TOL: f64 = 1e-14;

/// `n` equispaced points on `[lo, hi]`, both endpoints included.
pub fn uniform_mesh(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>, BenchError> {
    if n < 2 {
        return Err(BenchError::TooFewPoints(n));
    }
    let h = (hi - lo) / (n - 1) as f64;
    let mut x: Vec<f64> = (0..n).map(|k| lo + k as f64 * h).collect();
    x[n - 1] = hi;
    Ok(x)
}

/// `P_n(x)` and `P_{n-1}(x)` by the three-term recurrence.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let (mut p_prev, mut p) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = next;
    }
    (p, p_prev)
}

/// Legendre-Gauss-Lobatto nodes: the `p` roots of `(1-x²) P'_{p-1}(x)` on
/// `[-1, 1]`, in increasing order.
///
/// Interior nodes come from a damped Newton iteration on `(1-x²) P'_{p-1}`,
/// started at the Chebyshev-Gauss-Lobatto points and stopped once the
/// residual, scaled by `1/((p-1)p)`, is below `1e-14`.
pub fn lgl_nodes(p: usize) -> Result<Vec<f64>, BenchError> {
    if p < 2 {
        return Err(BenchError::TooFewPoints(p));
    }
    let n = p - 1;
    let nf = n as f64;
    let mut nodes = vec![0.0; p];
    nodes[0] = -1.0;
    nodes[n] = 1.0;
    #[allow(clippy::needless_range_loop)]
    for k in 1..n {
        let mut x = -(std::f64::consts::PI * k as f64 / nf).cos();
        let mut converged = false;
        for _ in 0..LGL_MAX_ITER {
            let (pn, pn1) = legendre_pair(n, x);
            // (1-x²) P'_n = n (P_{n-1} - x P_n)
            let g = nf * (pn1 - x * pn);
            // residual relative to the derivative scale n(n+1), so the
            // tolerance does not tighten with the order
            if g.abs() <= LGL_TOL * nf * (nf + 1.0) {
                converged = true;
                break;
            }
            // d/dx [(1-x²) P'_n] = -n(n+1) P_n
            let mut step = g / (-nf * (nf + 1.0) * pn);
            // keep iterates strictly inside (-1, 1)
            while (x - step).abs() >= 1.0 {
                step *= 0.5;
            }
            x -= step;
        }
        if !converged {
            return Err(BenchError::LglNoConvergence { points: p, node: k });
        }
        nodes[k] = x;
    }
    // enforce exact symmetry
    for k in 0..p / 2 {
        let s = 0.5 * (nodes[n - k] - nodes[k]);
        nodes[k] = -s;
        nodes[n - k] = s;
    }
    if p % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    Ok(nodes)
}

/// `(n-1)/8` equal elements on `[lo, hi]`, each carrying the 9 LGL nodes
/// mapped affinely; shared element endpoints appear once, so the mesh has
/// exactly `n` points.
pub fn lgl_mesh(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>, BenchError> {
    let per = LGL_ELEMENT_NODES - 1;
    if n < LGL_ELEMENT_NODES || !(n - 1).is_multiple_of(per) {
        return Err(BenchError::LglDivisibility(n));
    }
    let elements = (n - 1) / per;
    let reference = lgl_nodes(LGL_ELEMENT_NODES)?;
    let width = (hi - lo) / elements as f64;
    let mut x = Vec::with_capacity(n);
    for e in 0..elements {
        let a = lo + e as f64 * width;
        let b = if e + 1 == elements { hi } else { a + width };
        let skip = usize::from(e > 0);
        x.extend(reference[skip..].iter().map(|&r| {
            if r == -1.0 {
                a
            } else if r == 1.0 {
                b
            } else {
                0.5 * (a + b) + 0.5 * (b - a) * r
            }
        }));
    }
    debug_assert_eq!(x.len(), n);
    Ok(x)
}
