//! Residual of the reduced equation `psi'' + (epsilon - U) psi = 0` on a
//! grid, with a 5-point central second difference (O(h^4) truncation).

use crate::{exec, Error, Result, UniformGrid};

/// Maximum over the grid interior of `|psi''_fd + (epsilon - U) psi|`,
/// normalized by `max |psi|`.
pub fn ode_residual<P, U>(psi: P, epsilon: f64, u: U, grid: &UniformGrid) -> Result<f64>
where
    P: Fn(f64) -> f64 + Sync,
    U: Fn(f64) -> f64 + Sync,
{
    if grid.points < 5 {
        return Err(Error::Domain(format!(
            "residual grid needs at least 5 points, got {}",
            grid.points
        )));
    }
    let coords = grid.coords_vec();
    let values = exec::map(&coords, |&t| psi(t));
    let max_amp = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if !(max_amp > 0.0) {
        return Err(Error::Domain(
            "wavefunction is identically zero on the residual grid".into(),
        ));
    }
    let h2_12 = 12.0 * grid.step * grid.step;
    let interior = grid.points - 4;
    let residuals = exec::map_range(interior, |j| {
        let i = j + 2;
        let second = (-values[i - 2] + 16.0 * values[i - 1] - 30.0 * values[i]
            + 16.0 * values[i + 1]
            - values[i + 2])
            / h2_12;
        (second + (epsilon - u(coords[i])) * values[i]).abs()
    });
    let max_res = residuals.into_iter().fold(0.0f64, f64::max);
    Ok(max_res / max_amp)
}
