//! Adaptive quadrature on fixed-order Gauss-Legendre panels.
//!
//! A panel is accepted when the 10-point estimate of the whole interval and
//! the sum of the two half-interval estimates agree within the local
//! tolerance; otherwise the interval is bisected and the tolerance split.
//! The reduction tree is fixed by the recursion, so the result is bitwise
//! identical whether or not the halves run in parallel.

use crate::{exec, Error, Result};

// 10-point Gauss-Legendre nodes (positive half) and weights on [-1, 1].
#[allow(clippy::excessive_precision)] // published table digits
const GL_NODES: [f64; 5] = [
    0.148_874_338_981_631_21,
    0.433_395_394_129_247_2,
    0.679_409_568_299_024_4,
    0.865_063_366_688_984_5,
    0.973_906_528_517_171_7,
];
#[allow(clippy::excessive_precision)]
const GL_WEIGHTS: [f64; 5] = [
    0.295_524_224_714_752_87,
    0.269_266_719_309_996_35,
    0.219_086_362_515_982_04,
    0.149_451_349_150_580_59,
    0.066_671_344_308_688_14,
];

const MAX_DEPTH: u32 = 48;
// Spawn parallel subtasks only near the top of the recursion tree.
const PARALLEL_DEPTH: u32 = 6;

fn gauss10<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut sum = 0.0;
    for i in 0..5 {
        let dx = half * GL_NODES[i];
        sum += GL_WEIGHTS[i] * (f(mid + dx) + f(mid - dx));
    }
    sum * half
}

/// Integrate `f` over `[a, b]` to absolute accuracy `abs_tol`.
pub fn integrate<F>(f: F, a: f64, b: f64, abs_tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64 + Sync,
{
    if !(a < b) {
        return Err(Error::Domain(format!("integration interval must satisfy a < b, got [{a}, {b}]")));
    }
    if !(abs_tol > 0.0) {
        return Err(Error::Domain(format!("abs_tol must be positive, got {abs_tol}")));
    }
    let whole = gauss10(&f, a, b);
    adaptive(&f, a, b, abs_tol, whole, 0)
}

fn adaptive<F>(f: &F, a: f64, b: f64, tol: f64, whole: f64, depth: u32) -> Result<f64>
where
    F: Fn(f64) -> f64 + Sync,
{
    let mid = 0.5 * (a + b);
    let left = gauss10(f, a, mid);
    let right = gauss10(f, mid, b);
    let refined = left + right;
    if (refined - whole).abs() <= tol {
        return Ok(refined);
    }
    if depth >= MAX_DEPTH {
        return Err(Error::Convergence(format!(
            "quadrature did not converge on [{a}, {b}] after {MAX_DEPTH} bisection levels \
             (panel error {:.3e}, local tolerance {:.3e})",
            (refined - whole).abs(),
            tol
        )));
    }
    let half_tol = 0.5 * tol;
    let (l, r) = if depth < PARALLEL_DEPTH {
        exec::join(
            || adaptive(f, a, mid, half_tol, left, depth + 1),
            || adaptive(f, mid, b, half_tol, right, depth + 1),
        )
    } else {
        (
            adaptive(f, a, mid, half_tol, left, depth + 1),
            adaptive(f, mid, b, half_tol, right, depth + 1),
        )
    };
    Ok(l? + r?)
}
