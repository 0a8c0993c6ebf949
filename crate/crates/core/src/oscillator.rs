//! The singular oscillator on the hyperboloid: potential, Pöschl-Teller
//! reduction, discrete spectrum, normalized bound-state wavefunctions, and
//! the flat-space limit system recovered as the curvature radius grows.

use crate::special::{hyp1f1_terminating, hyp2f1_terminating, log_factorial, log_gamma};
use crate::{exec, Branch, Error, GridFunction, Parity, Result, UniformGrid};

/// Singular oscillator with frequency `omega`, curvature radius `radius` and
/// centrifugal strength `k`, all in units `hbar = mass = 1`.
///
/// The composite parameter `k0 = sqrt(omega^2 radius^4 + 1/4)` controls the
/// number of bound states. For `k > 1/2` the inverse-square term is repulsive
/// at the origin, the motion is confined to a half-line and only the `Plus`
/// branch exists; for `0 < k <= 1/2` both branches are admissible and form
/// the two families of solutions on the full line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorModel {
    omega: f64,
    radius: f64,
    k: f64,
    branch: Branch,
}

/// One bound level: quantum number, reduced eigenvalue `epsilon`, physical
/// energy, normalization constant and parity label.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundState {
    pub n: usize,
    pub epsilon: f64,
    pub energy: f64,
    pub norm_constant: f64,
    pub parity: Parity,
}

impl OscillatorModel {
    pub fn new(omega: f64, radius: f64, k: f64, branch: Branch) -> Result<Self> {
        if !(omega > 0.0) || !omega.is_finite() {
            return Err(Error::Model(format!("omega must be positive, got {omega}")));
        }
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::Model(format!("radius must be positive, got {radius}")));
        }
        if !(k > 0.0) || !k.is_finite() {
            return Err(Error::Model(format!("k must be positive, got {k}")));
        }
        if branch == Branch::Minus && k > 0.5 {
            return Err(Error::Model(format!(
                "branch `minus` requires k <= 1/2 (repulsive singularity at k = {k} confines \
                 the motion to a half-line, where only `plus` is normalizable)"
            )));
        }
        Ok(Self { omega, radius, k, branch })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    /// Signed singularity strength `+-k` selected by the branch.
    pub fn signed_k(&self) -> f64 {
        self.branch.signed(self.k)
    }

    /// Composite parameter `k0 = sqrt(omega^2 radius^4 + 1/4) > 1/2`.
    pub fn k0(&self) -> f64 {
        (self.omega * self.omega * self.radius.powi(4) + 0.25).sqrt()
    }

    /// `omega^2 radius^4`, i.e. `k0^2 - 1/4` without the round trip.
    fn omega2_r4(&self) -> f64 {
        self.omega * self.omega * self.radius.powi(4)
    }

    /// Potential in the pseudospherical coordinate,
    /// `V(tau) = [-(k0^2-1/4)/cosh^2 + (k^2-1/4)/sinh^2] / (2R^2) + omega^2 R^2 / 2`.
    ///
    /// Even in `tau`. Singular at `tau = 0` unless `k = 1/2` exactly, where
    /// the centrifugal coefficient vanishes.
    pub fn potential(&self, tau: f64) -> Result<f64> {
        let centrifugal = self.k * self.k - 0.25;
        let sinh = tau.sinh();
        let centrifugal_term = if centrifugal == 0.0 {
            0.0
        } else {
            if tau == 0.0 {
                return Err(Error::Domain(
                    "oscillator potential is singular at tau = 0 for k != 1/2".into(),
                ));
            }
            centrifugal / (sinh * sinh)
        };
        let cosh = tau.cosh();
        let r2 = self.radius * self.radius;
        Ok((-self.omega2_r4() / (cosh * cosh) + centrifugal_term) / (2.0 * r2)
            + self.omega * self.omega * r2 / 2.0)
    }

    /// Reduced potential `U(tau)` of the Pöschl-Teller form
    /// `-psi'' + U psi = epsilon psi`, i.e.
    /// `U = -(k0^2-1/4)/cosh^2 + (k^2-1/4)/sinh^2`.
    pub fn reduced_potential(&self, tau: f64) -> f64 {
        let centrifugal = self.k * self.k - 0.25;
        let cosh = tau.cosh();
        let centrifugal_term = if centrifugal == 0.0 {
            0.0
        } else {
            let sinh = tau.sinh();
            centrifugal / (sinh * sinh)
        };
        -self.omega2_r4() / (cosh * cosh) + centrifugal_term
    }

    /// Number of bound states: quantum numbers `n` with `2n + 1 < k0 -+ k`.
    ///
    /// A state exactly at the threshold (`epsilon = 0`) is excluded, so every
    /// counted level has strictly negative `epsilon`.
    pub fn bound_state_count(&self) -> usize {
        let a = self.k0() - self.signed_k();
        if a <= 1.0 {
            0
        } else {
            ((a - 1.0) / 2.0).ceil() as usize
        }
    }

    fn check_level(&self, n: usize) -> Result<()> {
        let count = self.bound_state_count();
        if n >= count {
            return Err(Error::IndexOutOfRange { n, count });
        }
        Ok(())
    }

    /// Reduced eigenvalue `epsilon_n = -(2n + 1 +- k - k0)^2 < 0`.
    pub fn epsilon(&self, n: usize) -> Result<f64> {
        self.check_level(n)?;
        let q = 2.0 * n as f64 + 1.0 + self.signed_k();
        Ok(-(q - self.k0()).powi(2))
    }

    /// Physical energy
    /// `E_n = -[(2n+1+-k)^2 - 2 k0 (2n+1+-k) + 1/4] / (2R^2)`.
    pub fn energy(&self, n: usize) -> Result<f64> {
        self.check_level(n)?;
        let q = 2.0 * n as f64 + 1.0 + self.signed_k();
        let r2 = self.radius * self.radius;
        Ok(-(q * q - 2.0 * self.k0() * q + 0.25) / (2.0 * r2))
    }

    /// Normalization constant of the level-`n` wavefunction, computed from
    /// log-gamma differences so that large `k0` never overflows.
    pub fn norm_constant(&self, n: usize) -> Result<f64> {
        self.check_level(n)?;
        let sk = self.signed_k();
        let k0 = self.k0();
        let lead = k0 - sk - 2.0 * n as f64 - 1.0;
        if !(lead > 0.0) {
            return Err(Error::Internal(format!(
                "non-positive normalization factor {lead} for a counted bound state"
            )));
        }
        let ln_n = -log_gamma(1.0 + sk)?
            + 0.5
                * (lead.ln() + log_gamma(k0 - n as f64)? + log_gamma(n as f64 + 1.0 + sk)?
                    - self.radius.ln()
                    - log_gamma(k0 - n as f64 - sk)?
                    - log_factorial(n)?);
        Ok(ln_n.exp())
    }

    pub fn bound_state(&self, n: usize) -> Result<BoundState> {
        Ok(BoundState {
            n,
            epsilon: self.epsilon(n)?,
            energy: self.energy(n)?,
            norm_constant: self.norm_constant(n)?,
            parity: Parity::HalfLine,
        })
    }

    pub fn bound_states(&self) -> Result<Vec<BoundState>> {
        (0..self.bound_state_count()).map(|n| self.bound_state(n)).collect()
    }

    /// Normalized bound-state wavefunction evaluator for level `n`,
    /// `psi = N (sinh tau)^(1/2 +- k) (cosh tau)^(2n - k0 + 1/2)
    ///        2F1(-n, k0 - n; 1 +- k; tanh^2 tau)`.
    pub fn wavefunction(&self, n: usize) -> Result<Wavefunction> {
        let norm = self.norm_constant(n)?;
        let sk = self.signed_k();
        let k0 = self.k0();
        Ok(Wavefunction {
            norm,
            sinh_exp: 0.5 + sk,
            cosh_exp: 2.0 * n as f64 - k0 + 0.5,
            n,
            hyp_b: k0 - n as f64,
            hyp_c: 1.0 + sk,
        })
    }

    /// Half-line truncation point beyond which the level-`n` density has
    /// decayed below any tolerance used here: the integrand falls off like
    /// `exp(-2 (k0 - 2n - 1 -+ k) tau)`.
    pub fn quadrature_tau_max(&self, n: usize) -> Result<f64> {
        self.check_level(n)?;
        let rate = self.k0() - 2.0 * n as f64 - 1.0 - self.signed_k();
        Ok(25.0_f64.max(40.0 / rate))
    }
}

/// Stable `ln sinh` and `ln cosh` for nonnegative arguments; the direct
/// forms overflow past `tau ~ 710` while the exponents here reach `O(k0)`.
fn ln_sinh(tau: f64) -> f64 {
    if tau < 350.0 {
        tau.sinh().ln()
    } else {
        tau - std::f64::consts::LN_2 + (-2.0 * tau).exp().ln_1p()
    }
}

fn ln_cosh(tau: f64) -> f64 {
    if tau < 350.0 {
        tau.cosh().ln()
    } else {
        tau - std::f64::consts::LN_2 + (-2.0 * tau).exp().ln_1p()
    }
}

/// Pointwise evaluator for one normalized oscillator bound state on the
/// half-line `tau >= 0`. Prefactors are combined in log space and
/// exponentiated once.
#[derive(Debug, Clone)]
pub struct Wavefunction {
    norm: f64,
    sinh_exp: f64,
    cosh_exp: f64,
    n: usize,
    hyp_b: f64,
    hyp_c: f64,
}

impl Wavefunction {
    /// Value at `tau >= 0`; NaN for negative arguments.
    pub fn eval(&self, tau: f64) -> f64 {
        if tau < 0.0 {
            return f64::NAN;
        }
        if tau == 0.0 {
            // (sinh 0)^e is 0 for e > 0 and 1 for e = 0 (the k = 1/2 minus case).
            return if self.sinh_exp > 0.0 { 0.0 } else { self.norm };
        }
        let t = tau.tanh();
        let hyp = hyp2f1_terminating(self.n, self.hyp_b, self.hyp_c, t * t)
            .expect("lower parameter 1 +- k is positive");
        let ln_pref = self.sinh_exp * ln_sinh(tau) + self.cosh_exp * ln_cosh(tau);
        self.norm * ln_pref.exp() * hyp
    }

    /// Sample the wavefunction on a half-line grid.
    pub fn eval_grid(&self, grid: &UniformGrid) -> Result<GridFunction> {
        if grid.start < 0.0 {
            return Err(Error::Domain(
                "oscillator wavefunctions are evaluated on tau >= 0; \
                 assemble full-line states by reflection"
                    .into(),
            ));
        }
        let coords = grid.coords_vec();
        let values = exec::map(&coords, |&tau| self.eval(tau));
        GridFunction::new(grid.clone(), values)
    }
}

/// Flat-space (infinite-radius) spectrum `E = omega (2n + 1 +- k)`.
pub fn flat_energy(omega: f64, k: f64, branch: Branch, n: usize) -> Result<f64> {
    if !(omega > 0.0) {
        return Err(Error::Model(format!("omega must be positive, got {omega}")));
    }
    if !(k > 0.0) {
        return Err(Error::Model(format!("k must be positive, got {k}")));
    }
    if branch == Branch::Minus && k > 0.5 {
        return Err(Error::Model("branch `minus` requires k <= 1/2".into()));
    }
    Ok(omega * (2.0 * n as f64 + 1.0 + branch.signed(k)))
}

/// Eigenfunction of the flat one-dimensional singular oscillator,
/// `psi = N (sqrt(omega) x)^(1/2 +- k) e^(-omega x^2 / 2) 1F1(-n; 1 +- k; omega x^2)`.
#[derive(Debug, Clone)]
pub struct FlatWavefunction {
    norm: f64,
    power: f64,
    omega: f64,
    n: usize,
    hyp_c: f64,
}

/// Build the flat singular-oscillator eigenfunction for level `n`.
pub fn flat_wavefunction(omega: f64, k: f64, branch: Branch, n: usize) -> Result<FlatWavefunction> {
    flat_energy(omega, k, branch, 0)?; // parameter validation
    let sk = branch.signed(k);
    let ln_norm = 0.5
        * (0.5 * omega.ln() + log_gamma(n as f64 + 1.0 + sk)?
            - log_factorial(n)?
            - 2.0 * log_gamma(1.0 + sk)?);
    Ok(FlatWavefunction {
        norm: ln_norm.exp(),
        power: 0.5 + sk,
        omega,
        n,
        hyp_c: 1.0 + sk,
    })
}

impl FlatWavefunction {
    /// Value at `x >= 0`; NaN for negative arguments.
    pub fn eval(&self, x: f64) -> f64 {
        if x < 0.0 {
            return f64::NAN;
        }
        let y = self.omega * x * x;
        if x == 0.0 {
            return if self.power > 0.0 { 0.0 } else { self.norm };
        }
        let hyp = hyp1f1_terminating(self.n, self.hyp_c, y)
            .expect("lower parameter 1 +- k is positive");
        let ln_pref = self.power * (self.omega.sqrt() * x).ln() - y / 2.0;
        self.norm * ln_pref.exp() * hyp
    }

    pub fn eval_grid(&self, grid: &UniformGrid) -> Result<GridFunction> {
        if grid.start < 0.0 {
            return Err(Error::Domain("flat oscillator states live on x >= 0".into()));
        }
        let coords = grid.coords_vec();
        let values = exec::map(&coords, |&x| self.eval(x));
        GridFunction::new(grid.clone(), values)
    }
}

/// The oscillator model used throughout the worked examples:
/// `omega = sqrt(30)`, `R = 1`, `k = 1`, plus branch, so `k0 = 5.5` and the
/// two bound levels sit at `epsilon = -12.25, -2.25`.
pub fn demo_model() -> OscillatorModel {
    OscillatorModel::new(30f64.sqrt(), 1.0, 1.0, Branch::Plus).expect("demo parameters are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::CoordinateLabel;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn model_validation() {
        assert!(OscillatorModel::new(1.0, 1.0, 1.0, Branch::Plus).is_ok());
        assert!(OscillatorModel::new(0.0, 1.0, 1.0, Branch::Plus).is_err());
        assert!(OscillatorModel::new(1.0, -2.0, 1.0, Branch::Plus).is_err());
        assert!(OscillatorModel::new(1.0, 1.0, 0.0, Branch::Plus).is_err());
        // minus branch only below the confinement threshold
        assert!(OscillatorModel::new(1.0, 1.0, 0.8, Branch::Minus).is_err());
        assert!(OscillatorModel::new(1.0, 1.0, 0.5, Branch::Minus).is_ok());
        assert!(OscillatorModel::new(1.0, 1.0, 0.3, Branch::Minus).is_ok());
    }

    #[test]
    fn k0_values() {
        let m = OscillatorModel::new(2f64.sqrt(), 1.0, 1.0, Branch::Plus).unwrap();
        assert_relative_eq!(m.k0(), 1.5, max_relative = 1e-14);
        assert_relative_eq!(demo_model().k0(), 5.5, max_relative = 1e-14);
        // k0 -> 1/2 as omega -> 0
        let m = OscillatorModel::new(1e-12, 1.0, 1.0, Branch::Plus).unwrap();
        assert_relative_eq!(m.k0(), 0.5, max_relative = 1e-12);
    }

    #[test]
    fn bound_state_count_demo() {
        // k0 = 5.5, k = 1, plus: 2n + 1 < 4.5 admits n = 0, 1
        assert_eq!(demo_model().bound_state_count(), 2);
    }

    #[test]
    fn bound_state_count_empty_below_threshold() {
        // k0 = 1.2, k = 0.5, plus: k0 - k = 0.7 <= 1
        let omega = (1.2f64 * 1.2 - 0.25).sqrt();
        let m = OscillatorModel::new(omega, 1.0, 0.5, Branch::Plus).unwrap();
        assert_eq!(m.bound_state_count(), 0);
        assert!(m.bound_states().unwrap().is_empty());
    }

    #[test]
    fn bound_state_count_just_above_threshold() {
        // k0 = 1.5 + 2e-9, k = 1/2, plus: exactly one state
        let k0: f64 = 1.5 + 2e-9;
        let omega = (k0 * k0 - 0.25).sqrt();
        let m = OscillatorModel::new(omega, 1.0, 0.5, Branch::Plus).unwrap();
        assert_eq!(m.bound_state_count(), 1);
    }

    #[test]
    fn bound_state_count_excludes_threshold_state() {
        // k0 - k = 3 exactly: n = 1 would have epsilon = 0, so only n = 0 counts.
        let k0: f64 = 3.5;
        let omega = (k0 * k0 - 0.25).sqrt();
        let m = OscillatorModel::new(omega, 1.0, 0.5, Branch::Plus).unwrap();
        assert_eq!(m.bound_state_count(), 1);
        assert!(m.epsilon(0).unwrap() < 0.0);
    }

    #[test]
    fn epsilon_demo_values() {
        let m = demo_model();
        assert_relative_eq!(m.epsilon(0).unwrap(), -12.25, max_relative = 1e-12);
        assert_relative_eq!(m.epsilon(1).unwrap(), -2.25, max_relative = 1e-12);
        assert!(matches!(m.epsilon(2), Err(Error::IndexOutOfRange { n: 2, count: 2 })));
    }

    #[test]
    fn energy_demo_values() {
        let m = demo_model();
        assert_relative_eq!(m.energy(0).unwrap(), 8.875, max_relative = 1e-12);
        assert_relative_eq!(m.energy(1).unwrap(), 13.875, max_relative = 1e-12);
    }

    #[test]
    fn spectrum_identity_demo() {
        // 2 R^2 E - omega^2 R^4 = epsilon
        let m = demo_model();
        for n in 0..m.bound_state_count() {
            let lhs = 2.0 * m.radius().powi(2) * m.energy(n).unwrap()
                - m.omega().powi(2) * m.radius().powi(4);
            assert_relative_eq!(lhs, m.epsilon(n).unwrap(), max_relative = 1e-12);
        }
    }

    #[test]
    fn potential_regular_for_half_k() {
        let m = OscillatorModel::new(1.0, 1.0, 0.5, Branch::Plus).unwrap();
        let v0 = m.potential(0.0).unwrap();
        assert!(v0.is_finite());
        // centrifugal coefficient vanishes: only the sech^2 well and the constant
        assert_relative_eq!(v0, -0.5 + 0.5, epsilon = 1e-15);
    }

    #[test]
    fn potential_demo_value() {
        let m = demo_model();
        let tau = 1.0f64;
        let expected =
            0.5 * (-30.0 / tau.cosh().powi(2) + 0.75 / tau.sinh().powi(2)) + 15.0;
        assert_relative_eq!(m.potential(tau).unwrap(), expected, max_relative = 1e-14);
        assert!(m.potential(0.0).is_err());
    }

    #[test]
    fn potential_plateau_at_large_tau() {
        let m = demo_model();
        let plateau = m.omega().powi(2) * m.radius().powi(2) / 2.0;
        assert!((m.potential(25.0).unwrap() - plateau).abs() < 1e-15 * plateau);
    }

    #[test]
    fn potential_is_even() {
        let m = demo_model();
        for &tau in &[0.3, 1.0, 2.7] {
            assert_eq!(m.potential(tau).unwrap(), m.potential(-tau).unwrap());
        }
    }

    #[test]
    fn norm_constant_scales_inverse_sqrt_radius() {
        // Doubling R at fixed (k0, k, n) rescales N by 1/sqrt(2): keep
        // omega^2 R^4 fixed by sending omega -> omega / 4.
        let m1 = demo_model();
        let m2 = OscillatorModel::new(m1.omega() / 4.0, 2.0, 1.0, Branch::Plus).unwrap();
        assert_relative_eq!(m1.k0(), m2.k0(), max_relative = 1e-14);
        for n in 0..2 {
            let ratio = m2.norm_constant(n).unwrap() / m1.norm_constant(n).unwrap();
            assert_relative_eq!(ratio, 0.5f64.sqrt(), max_relative = 1e-12);
        }
    }

    #[test]
    fn wavefunction_vanishes_at_origin_for_repulsive_k() {
        let wf = demo_model().wavefunction(0).unwrap();
        assert_eq!(wf.eval(0.0), 0.0);
    }

    #[test]
    fn wavefunction_ground_state_closed_form() {
        // n = 0: psi = N (sinh tau)^(3/2) (cosh tau)^(1/2 - k0), 2F1 == 1
        let m = demo_model();
        let wf = m.wavefunction(0).unwrap();
        let n0 = m.norm_constant(0).unwrap();
        for &tau in &[0.2f64, 0.7, 1.9, 4.0] {
            let expected = n0 * tau.sinh().powf(1.5) * tau.cosh().powf(0.5 - m.k0());
            assert_relative_eq!(wf.eval(tau), expected, max_relative = 1e-12);
        }
    }

    #[test]
    fn wavefunction_first_excited_cross_check() {
        // Independent assembly with direct powers and the explicit degree-1
        // polynomial 2F1(-1, k0-1; 2; t) = 1 - (k0-1)/2 t.
        let m = demo_model();
        let wf = m.wavefunction(1).unwrap();
        let tau = 0.7f64;
        let t = tau.tanh().powi(2);
        let poly = 1.0 - (m.k0() - 1.0) / 2.0 * t;
        let expected = m.norm_constant(1).unwrap()
            * tau.sinh().powf(1.5)
            * tau.cosh().powf(2.0 - m.k0() + 0.5)
            * poly;
        assert_relative_eq!(wf.eval(tau), expected, max_relative = 1e-13);
    }

    #[test]
    fn wavefunction_decays_at_infinity() {
        let wf = demo_model().wavefunction(1).unwrap();
        assert!(wf.eval(30.0).abs() < 1e-15);
        // log-space evaluation survives where cosh itself would overflow
        assert!(wf.eval(800.0).abs() < 1e-300 || wf.eval(800.0) == 0.0);
    }

    #[test]
    fn wavefunction_grid_rejects_negative_tau() {
        let wf = demo_model().wavefunction(0).unwrap();
        let grid = UniformGrid::from_range(-1.0, 1.0, 11, CoordinateLabel::Tau).unwrap();
        assert!(wf.eval_grid(&grid).is_err());
        let grid = UniformGrid::from_range(0.0, 5.0, 11, CoordinateLabel::Tau).unwrap();
        assert_eq!(wf.eval_grid(&grid).unwrap().len(), 11);
    }

    #[test]
    fn flat_energy_values() {
        assert_relative_eq!(
            flat_energy(1.0, 0.5, Branch::Plus, 0).unwrap(),
            1.5,
            max_relative = 1e-15
        );
        // linear spectrum: each step adds exactly 2 omega
        let omega = 1.7;
        for n in 0..5 {
            let step = flat_energy(omega, 0.3, Branch::Minus, n + 1).unwrap()
                - flat_energy(omega, 0.3, Branch::Minus, n).unwrap();
            assert_relative_eq!(step, 2.0 * omega, max_relative = 1e-14);
        }
        assert!(flat_energy(1.0, 2.0, Branch::Minus, 0).is_err());
    }

    #[test]
    fn flat_wavefunction_shape() {
        let omega = 2.0;
        let k = 1.0;
        let wf = flat_wavefunction(omega, k, Branch::Plus, 0).unwrap();
        assert_eq!(wf.eval(0.0), 0.0);
        // n = 0 is a pure power times Gaussian
        for &x in &[0.1f64, 0.5, 1.3] {
            let expected = wf.norm * (omega.sqrt() * x).powf(1.5) * (-omega * x * x / 2.0).exp();
            assert_relative_eq!(wf.eval(x), expected, max_relative = 1e-13);
        }
    }

    #[test]
    fn curved_energies_approach_flat_spectrum() {
        // E_n(R) -> omega (2n + 1 + k), gap bounded by (q^2/2 + 1/8) / R^2
        let omega = 1.0;
        let k = 1.0;
        for n in 0..3usize {
            let flat = flat_energy(omega, k, Branch::Plus, n).unwrap();
            let q = 2.0 * n as f64 + 1.0 + k;
            let bound = q * q / 2.0 + 0.125 + 0.01;
            let mut prev_gap = f64::INFINITY;
            for &radius in &[1e2, 1e3] {
                let m = OscillatorModel::new(omega, radius, k, Branch::Plus).unwrap();
                let gap = (m.energy(n).unwrap() - flat).abs();
                assert!(gap < prev_gap);
                assert!(gap * radius * radius < bound, "gap not O(1/R^2): {gap} at R={radius}");
                prev_gap = gap;
            }
        }
    }

    prop_compose! {
        fn arbitrary_model()(
            omega in 0.05f64..4.0,
            radius in 0.2f64..5.0,
            k in 0.05f64..3.0,
            minus in proptest::bool::ANY,
        ) -> OscillatorModel {
            let branch = if minus && k <= 0.5 { Branch::Minus } else { Branch::Plus };
            OscillatorModel::new(omega, radius, k, branch).unwrap()
        }
    }

    proptest! {
        #[test]
        fn spectrum_identity_random_models(m in arbitrary_model()) {
            // relative to the natural scale: near-threshold levels have
            // |epsilon| far below the omega^2 R^4 terms that cancel
            let w2r4 = m.omega().powi(2) * m.radius().powi(4);
            for n in 0..m.bound_state_count().min(20) {
                let lhs = 2.0 * m.radius().powi(2) * m.energy(n).unwrap() - w2r4;
                let eps = m.epsilon(n).unwrap();
                prop_assert!((lhs - eps).abs() <= 1e-12 * (eps.abs() + w2r4));
            }
        }

        #[test]
        fn spectrum_is_strictly_increasing(m in arbitrary_model()) {
            let count = m.bound_state_count().min(30);
            for n in 1..count {
                prop_assert!(m.epsilon(n).unwrap() > m.epsilon(n - 1).unwrap());
                prop_assert!(m.energy(n).unwrap() > m.energy(n - 1).unwrap());
                prop_assert!(m.epsilon(n).unwrap() < 0.0);
            }
        }

        #[test]
        fn count_matches_enumeration(m in arbitrary_model()) {
            let a = m.k0() - m.signed_k();
            let mut expected = 0usize;
            while 2.0 * expected as f64 + 1.0 < a {
                expected += 1;
            }
            prop_assert_eq!(m.bound_state_count(), expected);
        }
    }
}
