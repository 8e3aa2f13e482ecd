//! One-dimensional adaptive Gauss–Legendre quadrature.
//!
//! Each panel is integrated twice, once with a single 20-point rule and once
//! as the sum over its two halves. The difference is the panel's error
//! estimate; the panel with the largest estimate is halved until the summed
//! estimate falls below the requested relative tolerance.

use std::collections::BinaryHeap;
use std::sync::OnceLock;

use crate::error::{Error, Result};

const ORDER: usize = 20;
const DEFAULT_MAX_PANELS: usize = 20_000;

struct Rule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

/// Nodes and weights of the `n`-point Gauss–Legendre rule on [-1, 1], by
/// Newton iteration on the three-term recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let p = if n == 0 { 1.0 } else { p1 };
    let d = n as f64 * (x * p - p0) / (x * x - 1.0);
    (p, d)
}

fn rule() -> &'static Rule {
    static RULE: OnceLock<Rule> = OnceLock::new();
    RULE.get_or_init(|| {
        let (nodes, weights) = gauss_legendre(ORDER);
        Rule { nodes, weights }
    })
}

/// Fixed 20-point Gauss–Legendre estimate of the integral over `[a, b]`.
pub fn gl_panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let r = rule();
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    r.nodes.iter().zip(&r.weights).map(|(x, w)| w * f(mid + half * x)).sum::<f64>() * half
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    estimate: f64,
    error: f64,
}

impl Panel {
    fn new<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Self {
        let whole = gl_panel(f, a, b);
        let m = 0.5 * (a + b);
        let halves = gl_panel(f, a, m) + gl_panel(f, m, b);
        Panel { a, b, estimate: halves, error: (whole - halves).abs() }
    }
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Adaptive integral of `f` over the interval spanned by `breaks`, which
/// must be strictly increasing with at least two entries. Every initial
/// sub-interval becomes one panel.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, breaks: &[f64], rel_tol: f64) -> Result<f64> {
    integrate_with_budget(f, breaks, rel_tol, DEFAULT_MAX_PANELS)
}

pub fn integrate_with_budget<F: Fn(f64) -> f64>(f: &F, breaks: &[f64], rel_tol: f64, max_panels: usize) -> Result<f64> {
    if breaks.len() < 2 || breaks.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::InvalidParameter("quadrature breakpoints must be strictly increasing".into()));
    }
    let mut heap: BinaryHeap<Panel> = breaks.windows(2).map(|w| Panel::new(f, w[0], w[1])).collect();
    let mut previous = f64::NAN;
    loop {
        // Sum in a fixed order so the result does not depend on heap layout.
        let mut panels: Vec<&Panel> = heap.iter().collect();
        panels.sort_by(|p, q| p.a.total_cmp(&q.a));
        let total: f64 = panels.iter().map(|p| p.estimate).sum();
        let err: f64 = panels.iter().map(|p| p.error).sum();
        if !total.is_finite() {
            return Err(Error::QuadratureFailure { previous, last: total });
        }
        if err <= rel_tol * total.abs() || err <= f64::MIN_POSITIVE {
            return Ok(total);
        }
        if heap.len() >= max_panels {
            return Err(Error::QuadratureFailure { previous, last: total });
        }
        previous = total;
        let worst = heap.pop().expect("heap is never empty");
        let m = 0.5 * (worst.a + worst.b);
        if !(m > worst.a && m < worst.b) {
            // Panel can no longer be split in floating point.
            return Err(Error::QuadratureFailure { previous, last: total });
        }
        heap.push(Panel::new(f, worst.a, m));
        heap.push(Panel::new(f, m, worst.b));
    }
}

/// Integral of `f` over `[start, ∞)`.
///
/// `tail_bound(u)` must bound `∫_u^∞ |f|` from above for `u ≥ start + 1`.
/// Panels grow geometrically from `start` until the tail bound drops below
/// a small fraction of the running estimate.
pub fn integrate_to_infinity<F, T>(f: &F, start: f64, tail_bound: T, rel_tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
    T: Fn(f64) -> f64,
{
    let mut breaks = vec![start, start + 1.0];
    let mut width = 1.0;
    let mut running = gl_panel(f, start, start + 1.0).abs();
    loop {
        let end = *breaks.last().expect("non-empty");
        if end - start >= 2.0 && tail_bound(end) <= 1e-3 * rel_tol * running {
            break;
        }
        if end - start > 1e4 {
            return Err(Error::QuadratureFailure { previous: running, last: tail_bound(end) });
        }
        let next = end + width;
        running += gl_panel(f, end, next).abs();
        breaks.push(next);
        width *= 2.0;
    }
    integrate(f, &breaks, rel_tol)
}
