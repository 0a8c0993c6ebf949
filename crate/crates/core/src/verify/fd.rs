//! Finite-difference Sturm-Liouville oracle: discretize
//! `-psi'' + U(tau) psi = lambda psi` on a uniform grid with Dirichlet ends
//! and extract the lowest eigenvalues of the symmetric tridiagonal operator
//! by bisection on Sturm sequences.
//!
//! Bisection is used instead of an iterative QL sweep: only the few lowest
//! eigenvalues are needed, the bracket is guaranteed by Gershgorin bounds,
//! and the iteration count is fixed, so results are bitwise deterministic.

use crate::{exec, Error, Result};

/// Treatment of the left endpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LeftBoundary {
    /// `psi(tau_min) = 0`.
    Dirichlet,
    /// Continue the solution below the first interior node as
    /// `psi ~ tau^exponent (1 + slope * tau)`, the Frobenius behavior of the
    /// regular solution at a `1/tau^2` (or `1/tau`) singular origin.
    ///
    /// With an attractive inverse-square term both indicial exponents give
    /// square-integrable solutions and a plain Dirichlet cutoff converges to
    /// the wrong self-adjoint extension; fixing the exponent selects the
    /// intended family.
    PowerLaw { exponent: f64, slope: f64 },
}

/// Uniform discretization of `[tau_min, tau_max]`, Dirichlet at `tau_max`,
/// configurable at `tau_min`. Eigenvector components live on the interior
/// nodes `tau_min + j h`, `j = 1 .. steps-1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdGrid {
    tau_min: f64,
    tau_max: f64,
    steps: usize,
    left: LeftBoundary,
}

impl FdGrid {
    pub fn with_steps(tau_min: f64, tau_max: f64, steps: usize) -> Result<Self> {
        if !(tau_min < tau_max) {
            return Err(Error::Domain(format!(
                "grid requires tau_min < tau_max, got [{tau_min}, {tau_max}]"
            )));
        }
        if !tau_min.is_finite() || !tau_max.is_finite() {
            return Err(Error::Domain("grid endpoints must be finite".into()));
        }
        if steps < 10 {
            return Err(Error::Domain(format!("grid needs at least 10 steps, got {steps}")));
        }
        Ok(Self { tau_min, tau_max, steps, left: LeftBoundary::Dirichlet })
    }

    /// Build from a target step size; `(tau_max - tau_min) / h` must be an
    /// integer within rounding.
    pub fn with_step(tau_min: f64, tau_max: f64, h: f64) -> Result<Self> {
        if !(h > 0.0) {
            return Err(Error::Domain(format!("step must be positive, got {h}")));
        }
        let ratio = (tau_max - tau_min) / h;
        let steps = ratio.round();
        if (ratio - steps).abs() > 1e-6 {
            return Err(Error::Domain(format!(
                "(tau_max - tau_min)/h = {ratio} is not an integer number of steps"
            )));
        }
        Self::with_steps(tau_min, tau_max, steps as usize)
    }

    pub fn left_boundary(mut self, left: LeftBoundary) -> Self {
        self.left = left;
        self
    }

    pub fn h(&self) -> f64 {
        (self.tau_max - self.tau_min) / self.steps as f64
    }

    pub fn tau_min(&self) -> f64 {
        self.tau_min
    }

    pub fn tau_max(&self) -> f64 {
        self.tau_max
    }

    /// Number of interior nodes (matrix dimension).
    pub fn interior_points(&self) -> usize {
        self.steps - 1
    }

    /// Coordinate of interior node `i` (0-based).
    pub fn node(&self, i: usize) -> f64 {
        self.tau_min + self.h() * (i + 1) as f64
    }
}

/// Count eigenvalues of a symmetric tridiagonal matrix strictly below
/// `lambda`, via the signs of the LDLT pivots (Sturm sequence).
pub fn sturm_count(diag: &[f64], off: &[f64], lambda: f64) -> usize {
    let n = diag.len();
    if n == 0 {
        return 0;
    }
    const PIVOT_GUARD: f64 = 1e-300;
    let mut count = 0;
    let mut q = diag[0] - lambda;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let q_safe = if q.abs() < PIVOT_GUARD {
            if q >= 0.0 {
                PIVOT_GUARD
            } else {
                -PIVOT_GUARD
            }
        } else {
            q
        };
        q = (diag[i] - lambda) - off[i - 1] * off[i - 1] / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `m` smallest eigenvalues of a symmetric tridiagonal matrix, ascending.
pub fn lowest_eigenvalues(diag: &[f64], off: &[f64], m: usize) -> Result<Vec<f64>> {
    let n = diag.len();
    if off.len() + 1 != n {
        return Err(Error::Domain(format!(
            "off-diagonal length {} does not match dimension {n}",
            off.len()
        )));
    }
    if m == 0 || m > n {
        return Err(Error::Domain(format!(
            "requested {m} eigenvalues of a dimension-{n} matrix"
        )));
    }

    // Gershgorin bounds bracket the whole spectrum.
    let mut lo = f64::MAX;
    let mut hi = f64::MIN;
    for i in 0..n {
        let e_left = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let e_right = if i < n - 1 { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - e_left - e_right);
        hi = hi.max(diag[i] + e_left + e_right);
    }
    lo -= 1.0;
    hi += 1.0;

    let eigenvalues = exec::map_range(m, |k| {
        let mut a = lo;
        let mut b = hi;
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if (b - a) < 2.0 * f64::EPSILON * mid.abs().max(1.0) {
                break;
            }
            if sturm_count(diag, off, mid) <= k {
                a = mid;
            } else {
                b = mid;
            }
        }
        0.5 * (a + b)
    });
    Ok(eigenvalues)
}

/// Count generalized eigenvalues of the pencil `A u = lambda B u` strictly
/// below `lambda`, for symmetric tridiagonal `A` and positive diagonal `B`:
/// by Sylvester's law this is the number of negative LDLT pivots of
/// `A - lambda B`.
pub fn sturm_count_generalized(diag: &[f64], off: &[f64], weight: &[f64], lambda: f64) -> usize {
    let n = diag.len();
    if n == 0 {
        return 0;
    }
    const PIVOT_GUARD: f64 = 1e-300;
    let mut count = 0;
    let mut q = diag[0] - lambda * weight[0];
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let q_safe = if q.abs() < PIVOT_GUARD {
            if q >= 0.0 {
                PIVOT_GUARD
            } else {
                -PIVOT_GUARD
            }
        } else {
            q
        };
        q = (diag[i] - lambda * weight[i]) - off[i - 1] * off[i - 1] / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `m` smallest eigenvalues of the symmetric-definite pencil
/// `A u = lambda B u` (`B` diagonal, strictly positive), ascending.
///
/// Working on the pencil directly keeps every pivot at the `1/h^2` scale
/// even when some weights are tiny, where the explicit reduction
/// `B^(-1/2) A B^(-1/2)` would lose the eigenvalue in rounding.
pub fn lowest_generalized_eigenvalues(
    diag: &[f64],
    off: &[f64],
    weight: &[f64],
    m: usize,
) -> Result<Vec<f64>> {
    let n = diag.len();
    if off.len() + 1 != n || weight.len() != n {
        return Err(Error::Domain("pencil dimensions are inconsistent".into()));
    }
    if m == 0 || m > n {
        return Err(Error::Domain(format!(
            "requested {m} eigenvalues of a dimension-{n} pencil"
        )));
    }
    let w_min = weight.iter().cloned().fold(f64::INFINITY, f64::min);
    if !(w_min > 0.0) {
        return Err(Error::Domain("pencil weight must be strictly positive".into()));
    }
    // |lambda| <= ||A||_inf / min(B)
    let mut a_norm = 0.0f64;
    for i in 0..n {
        let e_left = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let e_right = if i < n - 1 { off[i].abs() } else { 0.0 };
        a_norm = a_norm.max(diag[i].abs() + e_left + e_right);
    }
    let bound = a_norm / w_min + 1.0;

    let eigenvalues = exec::map_range(m, |k| {
        let mut a = -bound;
        let mut b = bound;
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if (b - a) < 2.0 * f64::EPSILON * mid.abs().max(1.0) {
                break;
            }
            if sturm_count_generalized(diag, off, weight, mid) <= k {
                a = mid;
            } else {
                b = mid;
            }
        }
        0.5 * (a + b)
    });
    Ok(eigenvalues)
}

/// Assemble the tridiagonal discretization of `-psi'' + U psi` on `grid`.
pub fn schrodinger_tridiagonal<U>(u: U, grid: &FdGrid) -> (Vec<f64>, Vec<f64>)
where
    U: Fn(f64) -> f64 + Sync,
{
    let n = grid.interior_points();
    let h = grid.h();
    let inv_h2 = 1.0 / (h * h);
    let mut diag = exec::map_range(n, |i| 2.0 * inv_h2 + u(grid.node(i)));
    if let LeftBoundary::PowerLaw { exponent, slope } = grid.left {
        // Ghost-node elimination: psi(tau_min) = rho * psi(tau_min + h) with
        // rho given by the Frobenius ratio of the selected solution.
        let reference = |tau: f64| tau.powf(exponent) * (1.0 + slope * tau);
        let rho = reference(grid.tau_min) / reference(grid.tau_min + h);
        diag[0] -= rho * inv_h2;
    }
    let off = vec![-inv_h2; n - 1];
    (diag, off)
}

/// The `m` lowest eigenvalues of `-psi'' + U psi = lambda psi` on `grid`.
///
/// When `m` exceeds the number of bound levels the surplus entries are
/// positive box-like approximations of the continuum, not an error.
pub fn fd_eigenvalues<U>(u: U, grid: &FdGrid, m: usize) -> Result<Vec<f64>>
where
    U: Fn(f64) -> f64 + Sync,
{
    let (diag, off) = schrodinger_tridiagonal(u, grid);
    lowest_eigenvalues(&diag, &off, m)
}
