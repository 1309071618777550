//! Independent reference implementations used as test oracles. Nothing here
//! calls into the library's divided-difference table or selection code.
#![allow(dead_code)]

use rand::Rng;

/// `U[x_0..x_k]` from the explicit sum `Σ u_j / Π_{m≠j} (x_j − x_m)`.
pub fn divided_difference(x: &[f64], u: &[f64]) -> f64 {
    (0..x.len())
        .map(|j| {
            let denom: f64 = (0..x.len())
                .filter(|&m| m != j)
                .map(|m| x[j] - x[m])
                .product();
            u[j] / denom
        })
        .sum()
}

/// Barycentric-free Lagrange evaluation.
pub fn lagrange(x: &[f64], u: &[f64], t: f64) -> f64 {
    (0..x.len())
        .map(|j| {
            let basis: f64 = (0..x.len())
                .filter(|&m| m != j)
                .map(|m| (t - x[m]) / (x[j] - x[m]))
                .product();
            u[j] * basis
        })
        .sum()
}

/// Strictly increasing abscissae with spacing ratios up to `spread`.
pub fn random_points(rng: &mut impl Rng, n: usize, spread: f64) -> Vec<f64> {
    let mut x = vec![rng.gen_range(-1.0..1.0)];
    for _ in 1..n {
        let gap = rng.gen_range(1.0..spread) * 0.1;
        x.push(x[x.len() - 1] + gap);
    }
    x
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Kind {
    Dbi,
    Ppi,
}

#[derive(Debug, Clone)]
struct Path {
    nodes: Vec<usize>,
    left: usize,
    right: usize,
    lambda_bar: f64,
    lower: f64,
    upper: f64,
}

/// Stencil the selection rule should produce for interval `i`, found by
/// enumerating every admissible left/right expansion sequence and then
/// walking the tree with the preference rule.
pub fn reference_stencil(
    x: &[f64],
    u: &[f64],
    i: usize,
    kind: Kind,
    degree: usize,
    epsilon: f64,
) -> Vec<usize> {
    let n = x.len();
    let h = x[i + 1] - x[i];
    let dd = |lo: usize, hi: usize| divided_difference(&x[lo..=hi], &u[lo..=hi]);
    let max_points = (degree + 1).min(n);
    let root = vec![i, i + 1];
    if max_points <= 2 {
        return root;
    }

    // window
    let slope = |k: usize| (u[k + 1] - u[k]) / (x[k + 1] - x[k]);
    let s = slope(i);
    let sp = if i > 0 { slope(i - 1) } else { s };
    let sn = if i + 2 < n { slope(i + 1) } else { s };
    let (mut widen_lo, mut widen_hi) = (false, false);
    if sp * sn < 0.0 {
        if sp > 0.0 {
            widen_hi = true;
        } else {
            widen_lo = true;
        }
    } else if sp * s < 0.0 {
        widen_lo = true;
        widen_hi = true;
    }
    let (lo, hi) = (u[i].min(u[i + 1]), u[i].max(u[i + 1]));
    let (wlo, whi) = match kind {
        Kind::Dbi => (lo, hi),
        Kind::Ppi => (
            lo - if widen_lo {
                lo.abs()
            } else {
                epsilon * lo.abs()
            },
            hi + if widen_hi {
                hi.abs()
            } else {
                epsilon * hi.abs()
            },
        ),
    };

    let flat = u[i] == u[i + 1];
    // first step candidates: (side, new index) → (λ̄_1, B_1)
    let first = |left_side: bool| -> Option<Path> {
        let (l, r) = if left_side {
            (i.checked_sub(1)?, i + 1)
        } else {
            if i + 2 >= n {
                return None;
            }
            (i, i + 2)
        };
        let width = x[r] - x[l];
        let d1 = width / h;
        let (lambda_bar, lower, upper) = if !flat {
            let jump = u[i + 1] - u[i];
            let (a, b) = if jump > 0.0 {
                ((wlo - u[i]) / jump, (whi - u[i]) / jump)
            } else {
                ((whi - u[i]) / jump, (wlo - u[i]) / jump)
            };
            let (ml, mr) = (a.min(0.0), b.max(1.0));
            let lb = dd(l, r) / dd(i, i + 1) * width;
            (lb, (-4.0 * (mr - 1.0) - 1.0) * d1, (-4.0 * ml + 1.0) * d1)
        } else {
            let c = dd(l, r);
            if c == 0.0 {
                return None;
            }
            let w = c * h * width;
            let (a, b) = if w > 0.0 {
                ((wlo - u[i]) / w, (whi - u[i]) / w)
            } else {
                ((whi - u[i]) / w, (wlo - u[i]) / w)
            };
            let (ml, mr) = (a.min(0.0), b.max(0.0));
            (1.0, -4.0 * mr * d1, -4.0 * ml * d1)
        };
        let new = if left_side { l } else { r };
        Some(Path {
            nodes: vec![i, i + 1, new],
            left: l,
            right: r,
            lambda_bar,
            lower,
            upper,
        })
    };
    let admissible = |p: &Path| {
        p.lower < 0.0 && 0.0 < p.upper && p.lower <= p.lambda_bar && p.lambda_bar <= p.upper
    };

    // closed-form λ̄_j = U[V_j]/U[V_base] · Π_{k>base} width(V_k), where the
    // base is V_0 (or V_1 on a flat interval, whose λ̄_1 is 1)
    let closed_lambda = |nodes: &[usize]| -> f64 {
        let j = nodes.len() - 2;
        let first = if flat { 2 } else { 1 };
        let prod: f64 = (first..=j)
            .map(|k| {
                let (a, b) = span(&nodes[..k + 2]);
                x[b] - x[a]
            })
            .product();
        let (l, r) = span(nodes);
        let (bl, br) = span(&nodes[..first + 1]);
        dd(l, r) / dd(bl, br) * prod
    };
    let extend = |p: &Path, left_side: bool| -> Option<Path> {
        let (l, r) = if left_side {
            (p.left.checked_sub(1)?, p.right)
        } else {
            if p.right + 1 >= n {
                return None;
            }
            (p.left, p.right + 1)
        };
        let new = if left_side { l } else { r };
        let mut nodes = p.nodes.clone();
        nodes.push(new);
        let t = (x[p.nodes[p.nodes.len() - 1]] - x[i]) / h;
        let d = (x[r] - x[l]) / h;
        let (bl, bu) = (p.lower - p.lambda_bar, p.upper - p.lambda_bar);
        let (lower, upper) = if t <= 0.0 {
            (bl * d / (1.0 - t), bu * d / (1.0 - t))
        } else {
            (bu * d / -t, bl * d / -t)
        };
        Some(Path {
            lambda_bar: closed_lambda(&nodes),
            nodes,
            left: l,
            right: r,
            lower,
            upper,
        })
    };

    // enumerate the full tree of admissible paths
    struct Node {
        path: Path,
        children: [Option<Box<Node>>; 2],
    }
    fn grow(
        path: Path,
        max_points: usize,
        extend: &dyn Fn(&Path, bool) -> Option<Path>,
        admissible: &dyn Fn(&Path) -> bool,
    ) -> Node {
        let mut children = [None, None];
        if path.nodes.len() < max_points {
            for (k, side) in [true, false].into_iter().enumerate() {
                if let Some(c) = extend(&path, side).filter(|c| admissible(c)) {
                    children[k] = Some(Box::new(grow(c, max_points, extend, admissible)));
                }
            }
        }
        Node { path, children }
    }
    let roots: Vec<Option<Node>> = [true, false]
        .into_iter()
        .map(|side| {
            first(side)
                .filter(|p| admissible(p))
                .map(|p| grow(p, max_points, &extend, &admissible))
        })
        .collect();

    let choose = |nodes: &[usize], l: Option<f64>, r: Option<f64>| -> Option<usize> {
        match (l, r) {
            (Some(a), Some(b)) => {
                let mu_l = nodes.iter().filter(|&&k| k < i).count();
                let mu_r = nodes.iter().filter(|&&k| k > i).count();
                // fewer points on a side pulls the stencil that way; a tie
                // goes right unless the left candidate is strictly larger
                Some(if mu_l < mu_r || (mu_l == mu_r && a.abs() < b.abs()) {
                    0
                } else {
                    1
                })
            }
            (Some(_), None) => Some(0),
            (None, Some(_)) => Some(1),
            (None, None) => None,
        }
    };

    let lam = |n: &Option<Node>| n.as_ref().map(|c| c.path.lambda_bar);
    let Some(k) = choose(&root, lam(&roots[0]), lam(&roots[1])) else {
        return root;
    };
    let mut node = roots.into_iter().nth(k).flatten().unwrap();
    loop {
        let lam = |c: &Option<Box<Node>>| c.as_ref().map(|c| c.path.lambda_bar);
        match choose(
            &node.path.nodes,
            lam(&node.children[0]),
            lam(&node.children[1]),
        ) {
            Some(k) => {
                let [a, b] = node.children;
                node = *[a, b].into_iter().nth(k).flatten().unwrap();
            }
            None => return node.path.nodes,
        }
    }
}

fn span(nodes: &[usize]) -> (usize, usize) {
    (*nodes.iter().min().unwrap(), *nodes.iter().max().unwrap())
}
