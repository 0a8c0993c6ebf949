//! The singular Coulomb system on the hyperboloid: Manning-Rosen reduced
//! form, the substitution `e^tau = cosh(alpha)` mapping it onto the
//! oscillator equation, general-`nu` bound states with parity assembly, the
//! ordinary `p = 1/2` case, the `nu = 1/4, 3/4` pair, and flat-space limits.

use crate::special::{hyp1f1_terminating, hyp2f1_terminating, log_factorial, log_gamma};
use crate::{exec, Branch, Error, GridFunction, Parity, Result, UniformGrid};

/// Singular Coulomb system with coupling `mu`, curvature radius `radius` and
/// centrifugal strength `p` (units `hbar = mass = 1`).
///
/// Derived quantities: `k = 2p` (the oscillator image strength),
/// `nu = (1 +- k)/2` (the effective index; `1/4` and `3/4` are the anyon
/// pair at `p = 1/4`), and per-level `sigma = mu R / (n + nu)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoulombModel {
    mu: f64,
    radius: f64,
    p: f64,
    branch: Branch,
}

/// One Coulomb bound level.
#[derive(Debug, Clone, PartialEq)]
pub struct CoulombBoundState {
    pub n: usize,
    pub nu: f64,
    pub sigma: f64,
    pub energy: f64,
    pub norm_constant: f64,
    pub parity: Parity,
}

/// Oscillator-equation parameters reached through `e^tau = cosh(alpha)`:
/// `epsilon = 2 R^2 E`, `k0^2 = -2 R^2 E + 4 mu R`, `k = 2p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualityImage {
    pub epsilon: f64,
    pub k0: f64,
    pub k: f64,
}

impl CoulombModel {
    pub fn new(mu: f64, radius: f64, p: f64, branch: Branch) -> Result<Self> {
        if !(mu > 0.0) || !mu.is_finite() {
            return Err(Error::Model(format!("mu must be positive, got {mu}")));
        }
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::Model(format!("radius must be positive, got {radius}")));
        }
        if !(p > 0.0) || !p.is_finite() {
            return Err(Error::Model(format!("p must be positive, got {p}")));
        }
        if branch == Branch::Minus && p > 0.25 {
            // k = 2p > 1/2 confines the motion exactly as for the oscillator.
            return Err(Error::Model(format!(
                "branch `minus` requires p <= 1/4, got p = {p}"
            )));
        }
        Ok(Self { mu, radius, p, branch })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    /// Oscillator-image singularity strength `k = 2p`.
    pub fn k(&self) -> f64 {
        2.0 * self.p
    }

    /// Effective index `nu = (1 +- 2p) / 2 > 0`.
    pub fn nu(&self) -> f64 {
        (1.0 + self.branch.signed(self.k())) / 2.0
    }

    /// Per-level composite `sigma = mu R / (n + nu)`.
    pub fn sigma(&self, n: usize) -> f64 {
        self.mu * self.radius / (n as f64 + self.nu())
    }

    /// Potential `V(tau) = -(mu/R)(coth|tau| - 1) + (p^2 - 1/4)/(2 R^2 sinh^2 tau)`.
    ///
    /// Even in `tau`, tends to 0 at infinity, singular at the origin.
    pub fn potential(&self, tau: f64) -> Result<f64> {
        if tau == 0.0 {
            return Err(Error::Domain("Coulomb potential is singular at tau = 0".into()));
        }
        let t = tau.abs();
        let coth = t.cosh() / t.sinh();
        let centrifugal = self.p * self.p - 0.25;
        let centrifugal_term = if centrifugal == 0.0 {
            0.0
        } else {
            let sinh = tau.sinh();
            centrifugal / (2.0 * self.radius * self.radius * sinh * sinh)
        };
        Ok(-(self.mu / self.radius) * (coth - 1.0) + centrifugal_term)
    }

    /// Reduced potential of the Manning-Rosen form `-psi'' + U psi = lambda psi`
    /// with `lambda = 2 R^2 E - 2 mu R`:
    /// `U(tau) = -2 mu R coth tau + (p^2 - 1/4)/sinh^2 tau`.
    pub fn reduced_potential(&self, tau: f64) -> f64 {
        let coth = tau.cosh() / tau.sinh();
        let centrifugal = self.p * self.p - 0.25;
        let centrifugal_term = if centrifugal == 0.0 {
            0.0
        } else {
            let sinh = tau.sinh();
            centrifugal / (sinh * sinh)
        };
        -2.0 * self.mu * self.radius * coth + centrifugal_term
    }

    /// Eigenvalue of the reduced Manning-Rosen equation, `2 R^2 E_n - 2 mu R`.
    pub fn reduced_eigenvalue(&self, n: usize) -> Result<f64> {
        Ok(2.0 * self.radius * self.radius * self.energy(n)? - 2.0 * self.mu * self.radius)
    }

    /// Map an energy onto the oscillator-equation parameter triple.
    pub fn map_to_oscillator(&self, energy: f64) -> Result<DualityImage> {
        let epsilon = 2.0 * self.radius * self.radius * energy;
        let k0_sq = -epsilon + 4.0 * self.mu * self.radius;
        if !(k0_sq > 0.0) {
            return Err(Error::Domain(format!(
                "no real oscillator image: k0^2 = {k0_sq} <= 0 at energy {energy}"
            )));
        }
        Ok(DualityImage { epsilon, k0: k0_sq.sqrt(), k: self.k() })
    }

    /// Number of levels with `mu R > (n + nu)^2`; a level exactly on the
    /// boundary has zero binding and is excluded.
    pub fn bound_state_count(&self) -> usize {
        let t = (self.mu * self.radius).sqrt() - self.nu();
        if t <= 0.0 {
            0
        } else {
            t.ceil() as usize
        }
    }

    fn check_level(&self, n: usize) -> Result<()> {
        let count = self.bound_state_count();
        if n >= count {
            return Err(Error::IndexOutOfRange { n, count });
        }
        Ok(())
    }

    /// Discrete spectrum
    /// `E_n = -(n+nu)^2 / 2R^2 - mu^2 / 2(n+nu)^2 + mu/R`.
    pub fn energy(&self, n: usize) -> Result<f64> {
        self.check_level(n)?;
        let s = n as f64 + self.nu();
        let r = self.radius;
        Ok(-s * s / (2.0 * r * r) - self.mu * self.mu / (2.0 * s * s) + self.mu / r)
    }

    /// Normalization constant of the tau-form wavefunction,
    /// `2^nu sqrt([sigma^2-(n+nu)^2] G(sigma+nu) G(n+2nu)
    ///            / (2R(n+nu) n! G(sigma+1-nu) G(2nu)^2))`.
    ///
    /// At `nu = 1` this reduces to `sqrt(2 sigma [sigma^2 - (n+1)^2] / R)`.
    pub fn norm_constant(&self, n: usize) -> Result<f64> {
        self.check_level(n)?;
        let nu = self.nu();
        let s = n as f64 + nu;
        let sigma = self.sigma(n);
        let binding = sigma * sigma - s * s;
        if !(binding > 0.0) {
            return Err(Error::Internal(format!(
                "non-positive binding factor {binding} for a counted bound state"
            )));
        }
        let ln_c = nu * std::f64::consts::LN_2
            + 0.5
                * (binding.ln() + log_gamma(sigma + nu)? + log_gamma(n as f64 + 2.0 * nu)?
                    - (2.0 * self.radius * s).ln()
                    - log_factorial(n)?
                    - log_gamma(sigma + 1.0 - nu)?
                    - 2.0 * log_gamma(2.0 * nu)?);
        Ok(ln_c.exp())
    }

    /// Normalization constant of the mapped `W(alpha)` solution, satisfying
    /// the weighted condition `R int_0^inf W^2 tanh^2(alpha) d(alpha) = 1/2`.
    pub fn w_norm_constant(&self, n: usize) -> Result<f64> {
        self.check_level(n)?;
        let sk = self.branch.signed(self.k());
        let image = self.map_to_oscillator(self.energy(n)?)?;
        let k0 = image.k0;
        let lead = k0 - 2.0 * n as f64 - sk - 1.0;
        if !(lead > 0.0) {
            return Err(Error::Internal(format!(
                "non-positive normalization factor {lead} for a counted bound state"
            )));
        }
        let ln_a = 0.5
            * (k0.ln() + lead.ln() + log_gamma(k0 - n as f64)?
                + log_gamma(n as f64 + 1.0 + sk)?
                - self.radius.ln()
                - (2.0 * n as f64 + 1.0 + sk).ln()
                - log_factorial(n)?
                - 2.0 * log_gamma(1.0 + sk)?
                - log_gamma(k0 - n as f64 - sk)?);
        Ok(ln_a.exp())
    }

    pub fn bound_state(&self, n: usize) -> Result<CoulombBoundState> {
        Ok(CoulombBoundState {
            n,
            nu: self.nu(),
            sigma: self.sigma(n),
            energy: self.energy(n)?,
            norm_constant: self.norm_constant(n)?,
            parity: Parity::HalfLine,
        })
    }

    pub fn bound_states(&self) -> Result<Vec<CoulombBoundState>> {
        (0..self.bound_state_count()).map(|n| self.bound_state(n)).collect()
    }

    /// Whether the potential admits full-line motion, so that even/odd
    /// assembled states exist: requires the centrifugal term to vanish
    /// (`p = 1/2`) or be attractive at the origin (`p < 1/2`).
    pub fn supports_full_line(&self) -> bool {
        self.p <= 0.5
    }

    /// Normalized bound-state wavefunction in the `tau` coordinate,
    /// `psi = C (sinh tau)^nu e^(tau (n - sigma)) 2F1(-n, nu+sigma; 2nu; 1 - e^(-2 tau))`.
    pub fn wavefunction(&self, n: usize) -> Result<CoulombWavefunction> {
        let norm = self.norm_constant(n)?;
        Ok(CoulombWavefunction {
            norm,
            nu: self.nu(),
            decay: n as f64 - self.sigma(n),
            n,
            hyp_b: self.nu() + self.sigma(n),
            hyp_c: 2.0 * self.nu(),
            full_line: self.supports_full_line(),
        })
    }

    /// The mapped solution in the duality coordinate,
    /// `W = A (sinh a)^(1/2 +- k) (cosh a)^(2n - k0 + 1/2) 2F1(-n, k0-n; 1 +- k; tanh^2 a)`,
    /// related to the tau-form by `psi(ln cosh a) = W(a) / sqrt(coth a)`.
    pub fn w_solution(&self, n: usize) -> Result<WSolution> {
        let norm = self.w_norm_constant(n)?;
        let sk = self.branch.signed(self.k());
        let k0 = self.map_to_oscillator(self.energy(n)?)?.k0;
        Ok(WSolution {
            norm,
            sinh_exp: 0.5 + sk,
            cosh_exp: 2.0 * n as f64 - k0 + 0.5,
            n,
            hyp_b: k0 - n as f64,
            hyp_c: 1.0 + sk,
        })
    }

    /// Half-line truncation point for quadrature over the level-`n` density:
    /// the integrand decays like `exp(-2 (sigma - n - nu) tau)`.
    pub fn quadrature_tau_max(&self, n: usize) -> Result<f64> {
        self.check_level(n)?;
        let rate = self.sigma(n) - n as f64 - self.nu();
        Ok(25.0_f64.max(40.0 / rate))
    }
}

/// Duality change of variable: `tau = ln cosh(alpha)`.
///
/// Monotone on `alpha >= 0` with `tau(0) = 0` and `tau ~ alpha - ln 2` at
/// infinity. Evaluated through `|a| + ln(1 + e^(-2|a|)) - ln 2`, which never
/// overflows.
pub fn tau_of_alpha(alpha: f64) -> f64 {
    let a = alpha.abs();
    a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
}

/// Pointwise evaluator for one normalized Coulomb bound state in `tau`.
#[derive(Debug, Clone)]
pub struct CoulombWavefunction {
    norm: f64,
    nu: f64,
    decay: f64,
    n: usize,
    hyp_b: f64,
    hyp_c: f64,
    full_line: bool,
}

impl CoulombWavefunction {
    /// Half-line value at `tau >= 0`; NaN for negative arguments.
    pub fn eval(&self, tau: f64) -> f64 {
        if tau < 0.0 {
            return f64::NAN;
        }
        if tau == 0.0 {
            return 0.0; // (sinh 0)^nu with nu > 0
        }
        let arg = -(-2.0 * tau).exp_m1(); // 1 - e^(-2 tau), stable near 0
        let hyp = hyp2f1_terminating(self.n, self.hyp_b, self.hyp_c, arg)
            .expect("lower parameter 2 nu is positive");
        let ln_pref = self.nu * ln_sinh_pos(tau) + tau * self.decay;
        self.norm * ln_pref.exp() * hyp
    }

    /// Parity-extended value on the full line.
    pub fn eval_parity(&self, tau: f64, parity: Parity) -> f64 {
        match parity {
            Parity::HalfLine => self.eval(tau),
            Parity::Even => self.eval(tau.abs()),
            Parity::Odd => {
                if tau < 0.0 {
                    -self.eval(-tau)
                } else {
                    self.eval(tau)
                }
            }
        }
    }

    /// Sample over a grid. `HalfLine` requires `tau >= 0`; the even/odd
    /// variants reflect through the origin and need a full-line potential.
    pub fn eval_grid(&self, grid: &UniformGrid, parity: Parity) -> Result<GridFunction> {
        match parity {
            Parity::HalfLine => {
                if grid.start < 0.0 {
                    return Err(Error::Domain(
                        "half-line evaluation requires tau >= 0; request even or odd parity \
                         for full-line grids"
                            .into(),
                    ));
                }
            }
            Parity::Even | Parity::Odd => {
                if !self.full_line {
                    return Err(Error::Domain(
                        "even/odd assembly requires a full-line potential (p <= 1/2)".into(),
                    ));
                }
            }
        }
        let coords = grid.coords_vec();
        let values = exec::map(&coords, |&tau| self.eval_parity(tau, parity));
        GridFunction::new(grid.clone(), values)
    }
}

fn ln_sinh_pos(tau: f64) -> f64 {
    if tau < 350.0 {
        tau.sinh().ln()
    } else {
        tau - std::f64::consts::LN_2 + (-2.0 * tau).exp().ln_1p()
    }
}

fn ln_cosh_pos(tau: f64) -> f64 {
    if tau < 350.0 {
        tau.cosh().ln()
    } else {
        tau - std::f64::consts::LN_2 + (-2.0 * tau).exp().ln_1p()
    }
}

/// Pointwise evaluator for the mapped solution `W(alpha)` on `alpha >= 0`.
#[derive(Debug, Clone)]
pub struct WSolution {
    norm: f64,
    sinh_exp: f64,
    cosh_exp: f64,
    n: usize,
    hyp_b: f64,
    hyp_c: f64,
}

impl WSolution {
    /// Value at `alpha >= 0`; NaN for negative arguments.
    pub fn eval(&self, alpha: f64) -> f64 {
        if alpha < 0.0 {
            return f64::NAN;
        }
        if alpha == 0.0 {
            // (sinh 0)^e: 0 for e > 0, 1 for e = 0 (the nu = 1/4 family).
            return if self.sinh_exp > 0.0 { 0.0 } else { self.norm };
        }
        let t = alpha.tanh();
        let hyp = hyp2f1_terminating(self.n, self.hyp_b, self.hyp_c, t * t)
            .expect("lower parameter 1 +- k is positive");
        let ln_pref = self.sinh_exp * ln_sinh_pos(alpha) + self.cosh_exp * ln_cosh_pos(alpha);
        self.norm * ln_pref.exp() * hyp
    }

    pub fn eval_grid(&self, grid: &UniformGrid) -> Result<GridFunction> {
        if grid.start < 0.0 {
            return Err(Error::Domain("W is defined on alpha >= 0".into()));
        }
        let coords = grid.coords_vec();
        let values = exec::map(&coords, |&alpha| self.eval(alpha));
        GridFunction::new(grid.clone(), values)
    }
}

/// Flat-space spectrum `E = -mu^2 / 2 (n + nu)^2` (Rydberg-like).
pub fn flat_energy(mu: f64, nu: f64, n: usize) -> Result<f64> {
    if !(mu > 0.0) {
        return Err(Error::Model(format!("mu must be positive, got {mu}")));
    }
    if !(nu > 0.0) {
        return Err(Error::Model(format!("nu must be positive, got {nu}")));
    }
    let s = n as f64 + nu;
    Ok(-mu * mu / (2.0 * s * s))
}

/// Flat-space limit wavefunction,
/// `psi = N y^nu e^(-y/2) 1F1(-n; 2nu; y)` with `y = 2 mu x / (n + nu)`.
#[derive(Debug, Clone)]
pub struct FlatCoulombWavefunction {
    norm: f64,
    nu: f64,
    y_scale: f64,
    n: usize,
}

/// Build the flat-limit Coulomb eigenfunction for level `n`.
pub fn flat_wavefunction(mu: f64, nu: f64, n: usize) -> Result<FlatCoulombWavefunction> {
    flat_energy(mu, nu, 0)?; // parameter validation
    let s = n as f64 + nu;
    let ln_norm = 0.5 * mu.ln() - log_gamma(2.0 * nu)? - s.ln()
        + 0.5 * (log_gamma(n as f64 + 2.0 * nu)? - std::f64::consts::LN_2 - log_factorial(n)?);
    Ok(FlatCoulombWavefunction { norm: ln_norm.exp(), nu, y_scale: 2.0 * mu / s, n })
}

impl FlatCoulombWavefunction {
    /// Half-line value at `x >= 0`; NaN for negative arguments.
    pub fn eval(&self, x: f64) -> f64 {
        if x < 0.0 {
            return f64::NAN;
        }
        if x == 0.0 {
            return 0.0;
        }
        let y = self.y_scale * x;
        let hyp = hyp1f1_terminating(self.n, 2.0 * self.nu, y)
            .expect("lower parameter 2 nu is positive");
        let ln_pref = self.nu * y.ln() - y / 2.0;
        self.norm * ln_pref.exp() * hyp
    }

    pub fn eval_parity(&self, x: f64, parity: Parity) -> f64 {
        match parity {
            Parity::HalfLine => self.eval(x),
            Parity::Even => self.eval(x.abs()),
            Parity::Odd => {
                if x < 0.0 {
                    -self.eval(-x)
                } else {
                    self.eval(x)
                }
            }
        }
    }

    pub fn eval_grid(&self, grid: &UniformGrid, parity: Parity) -> Result<GridFunction> {
        if parity == Parity::HalfLine && grid.start < 0.0 {
            return Err(Error::Domain("half-line evaluation requires x >= 0".into()));
        }
        let coords = grid.coords_vec();
        let values = exec::map(&coords, |&x| self.eval_parity(x, parity));
        GridFunction::new(grid.clone(), values)
    }
}

/// The Coulomb model used throughout the worked examples: `mu = 6`, `R = 1`,
/// `p = 1/2` (so `nu = 1`), with bound energies `-12.5` and `-0.5`.
pub fn demo_model() -> CoulombModel {
    CoulombModel::new(6.0, 1.0, 0.5, Branch::Plus).expect("demo parameters are valid")
}

/// The anyon pair at `p = 1/4`: `Branch::Minus` gives `nu = 1/4`,
/// `Branch::Plus` gives `nu = 3/4`.
pub fn demo_anyon(branch: Branch) -> CoulombModel {
    CoulombModel::new(6.0, 1.0, 0.25, branch).expect("demo parameters are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::CoordinateLabel;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    #[test]
    fn model_validation() {
        assert!(CoulombModel::new(6.0, 1.0, 0.5, Branch::Plus).is_ok());
        assert!(CoulombModel::new(0.0, 1.0, 0.5, Branch::Plus).is_err());
        assert!(CoulombModel::new(6.0, 0.0, 0.5, Branch::Plus).is_err());
        assert!(CoulombModel::new(6.0, 1.0, -0.5, Branch::Plus).is_err());
        assert!(CoulombModel::new(6.0, 1.0, 0.3, Branch::Minus).is_err());
        assert!(CoulombModel::new(6.0, 1.0, 0.25, Branch::Minus).is_ok());
    }

    #[test]
    fn derived_quantities() {
        let m = demo_model();
        assert_eq!(m.k(), 1.0);
        assert_eq!(m.nu(), 1.0);
        assert_relative_eq!(m.sigma(0), 6.0, max_relative = 1e-15);
        assert_relative_eq!(m.sigma(1), 3.0, max_relative = 1e-15);

        assert_eq!(demo_anyon(Branch::Minus).nu(), 0.25);
        assert_eq!(demo_anyon(Branch::Plus).nu(), 0.75);
    }

    #[test]
    fn potential_values() {
        let m = demo_model();
        // p = 1/2: the centrifugal term disappears
        let tau = 1.0f64;
        let coth = tau.cosh() / tau.sinh();
        assert_relative_eq!(
            m.potential(tau).unwrap(),
            -6.0 * (coth - 1.0),
            max_relative = 1e-14
        );
        assert_relative_eq!(
            m.potential(1.0).unwrap(),
            -1.878_211_712_995_987_2,
            max_relative = 1e-13
        );
        assert!(m.potential(0.0).is_err());
        // vanishes at infinity
        assert!(m.potential(25.0).unwrap().abs() < 1e-15 * 6.0);
        // even
        assert_eq!(m.potential(0.7).unwrap(), m.potential(-0.7).unwrap());
    }

    #[test]
    fn tau_of_alpha_values() {
        assert_eq!(tau_of_alpha(0.0), 0.0);
        assert_relative_eq!(
            tau_of_alpha(1.0),
            1.0f64.cosh().ln(),
            max_relative = 1e-15
        );
        assert_relative_eq!(
            tau_of_alpha(1.0),
            0.433_780_830_483_027_1,
            max_relative = 1e-13
        );
        // asymptote tau ~ alpha - ln 2
        let alpha = 50.0;
        assert_abs_diff_eq!(
            tau_of_alpha(alpha),
            alpha - std::f64::consts::LN_2,
            epsilon = 1e-12
        );
        // monotone
        assert!(tau_of_alpha(2.0) > tau_of_alpha(1.0));
    }

    #[test]
    fn map_to_oscillator_demo() {
        let m = demo_model();
        let image = m.map_to_oscillator(-12.5).unwrap();
        assert_eq!(image.epsilon, -25.0);
        assert_eq!(image.k0, 7.0);
        assert_eq!(image.k, 1.0);
        // k0 = n + 1 + sigma for the ground state
        assert_relative_eq!(image.k0, 1.0 + m.sigma(0), max_relative = 1e-14);

        // threshold bookkeeping: E = mu/R gives k0^2 = 2 mu R
        let image = m.map_to_oscillator(6.0).unwrap();
        assert_relative_eq!(image.k0 * image.k0, 12.0, max_relative = 1e-14);

        // no real image once -2 R^2 E + 4 mu R <= 0
        assert!(m.map_to_oscillator(12.0).is_err());
    }

    #[test]
    fn bound_state_counts() {
        assert_eq!(demo_model().bound_state_count(), 2);
        // nu = 1/4: (n + nu)^2 = 0.0625, 1.5625, 5.0625 < 6 but 10.5625 > 6
        assert_eq!(demo_anyon(Branch::Minus).bound_state_count(), 3);
        assert_eq!(demo_anyon(Branch::Plus).bound_state_count(), 2);
        // mu R <= nu^2: no states
        let m = CoulombModel::new(0.5, 1.0, 0.5, Branch::Plus).unwrap();
        assert_eq!(m.bound_state_count(), 0);
    }

    #[test]
    fn energy_demo_values() {
        let m = demo_model();
        assert_relative_eq!(m.energy(0).unwrap(), -12.5, max_relative = 1e-14);
        assert_relative_eq!(m.energy(1).unwrap(), -0.5, max_relative = 1e-14);
        assert!(m.energy(2).is_err());
    }

    #[test]
    fn energy_anyon_values() {
        let quarter = demo_anyon(Branch::Minus);
        assert_relative_eq!(quarter.energy(0).unwrap(), -282.031_25, max_relative = 1e-14);
        assert_relative_eq!(quarter.energy(1).unwrap(), -6.301_25, max_relative = 1e-14);
        let three_quarter = demo_anyon(Branch::Plus);
        assert_relative_eq!(three_quarter.energy(0).unwrap(), -26.281_25, max_relative = 1e-14);
        assert_relative_eq!(
            three_quarter.energy(1).unwrap(),
            -1.408_801_020_408_163_4,
            max_relative = 1e-13
        );
    }

    #[test]
    fn duality_round_trip_identity() {
        // epsilon from the map equals -(sigma - (n + nu))^2
        for m in [demo_model(), demo_anyon(Branch::Minus), demo_anyon(Branch::Plus)] {
            for n in 0..m.bound_state_count() {
                let image = m.map_to_oscillator(m.energy(n).unwrap()).unwrap();
                let s = n as f64 + m.nu();
                let expected = -(m.sigma(n) - s).powi(2);
                assert_relative_eq!(image.epsilon, expected, max_relative = 1e-12);
                // spectrum identity sqrt(-eps) = k0 - (2n + 1 +- k)
                let lhs = (-image.epsilon).sqrt();
                let rhs = image.k0 - (2.0 * n as f64 + 1.0 + m.branch().signed(m.k()));
                assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn norm_constant_nu1_closed_form() {
        let m = demo_model();
        // A_n = sqrt(2 sigma [sigma^2 - (n+1)^2] / R)
        assert_relative_eq!(
            m.norm_constant(0).unwrap(),
            420f64.sqrt(),
            max_relative = 1e-13
        );
        assert_relative_eq!(
            m.norm_constant(1).unwrap(),
            (2.0f64 * 3.0 * (9.0 - 4.0)).sqrt(),
            max_relative = 1e-13
        );
    }

    #[test]
    fn tau_and_w_constants_differ_by_two_to_nu() {
        for m in [demo_model(), demo_anyon(Branch::Minus), demo_anyon(Branch::Plus)] {
            for n in 0..m.bound_state_count() {
                let ratio = m.norm_constant(n).unwrap() / m.w_norm_constant(n).unwrap();
                assert_relative_eq!(ratio, 2f64.powf(m.nu()), max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn wavefunction_ground_state_closed_form() {
        // n = 0, nu = 1: psi = C sinh(tau) e^(-sigma tau)
        let m = demo_model();
        let wf = m.wavefunction(0).unwrap();
        let c = m.norm_constant(0).unwrap();
        for &tau in &[0.1f64, 0.5, 1.5, 3.0] {
            let expected = c * tau.sinh() * (-6.0 * tau).exp();
            assert_relative_eq!(wf.eval(tau), expected, max_relative = 1e-12);
        }
        assert_eq!(wf.eval(0.0), 0.0);
    }

    #[test]
    fn parity_symmetry_is_exact() {
        // |-tau| == tau bitwise, so the reflected values agree to the last ulp
        let m = demo_model();
        let wf = m.wavefunction(1).unwrap();
        for &tau in &[0.0f64, 0.17, 0.5, 1.3, 2.9] {
            assert_eq!(wf.eval_parity(-tau, Parity::Odd), -wf.eval_parity(tau, Parity::Odd));
            assert_eq!(wf.eval_parity(-tau, Parity::Even), wf.eval_parity(tau, Parity::Even));
        }
        let grid = UniformGrid::from_range(-3.0, 3.0, 61, CoordinateLabel::Tau).unwrap();
        assert_eq!(wf.eval_grid(&grid, Parity::Odd).unwrap().len(), 61);
    }

    #[test]
    fn parity_requires_full_line_potential() {
        let m = CoulombModel::new(6.0, 1.0, 0.8, Branch::Plus).unwrap();
        let wf = m.wavefunction(0).unwrap();
        let grid = UniformGrid::from_range(-1.0, 1.0, 11, CoordinateLabel::Tau).unwrap();
        assert!(wf.eval_grid(&grid, Parity::Even).is_err());
        assert!(wf.eval_grid(&grid, Parity::HalfLine).is_err());
        let half = UniformGrid::from_range(0.0, 1.0, 11, CoordinateLabel::Tau).unwrap();
        assert!(wf.eval_grid(&half, Parity::HalfLine).is_ok());
    }

    #[test]
    fn w_solution_boundary_values() {
        let m = demo_model();
        let w = m.w_solution(0).unwrap();
        // plus branch: sinh exponent 3/2 > 0
        assert_eq!(w.eval(0.0), 0.0);

        // nu = 1/4 family: sinh exponent is exactly 0, so W(0) = A
        let quarter = demo_anyon(Branch::Minus);
        let w = quarter.w_solution(0).unwrap();
        assert_relative_eq!(
            w.eval(0.0),
            quarter.w_norm_constant(0).unwrap(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn duality_pointwise_ratio_is_one() {
        // psi(ln cosh alpha) = W(alpha) / sqrt(coth alpha), same constant
        for m in [demo_model(), demo_anyon(Branch::Minus)] {
            for n in 0..m.bound_state_count() {
                let psi = m.wavefunction(n).unwrap();
                let w = m.w_solution(n).unwrap();
                for i in 0..=40 {
                    let alpha = 0.2 + 4.8 * i as f64 / 40.0;
                    let lhs = psi.eval(tau_of_alpha(alpha));
                    let coth = alpha.cosh() / alpha.sinh();
                    let rhs = w.eval(alpha) / coth.sqrt();
                    assert_relative_eq!(lhs, rhs, max_relative = 1e-10);
                }
            }
        }
    }

    #[test]
    fn flat_energy_values() {
        assert_relative_eq!(flat_energy(1.0, 1.0, 0).unwrap(), -0.5, max_relative = 1e-15);
        // the two anyon families are distinct
        assert!(flat_energy(1.0, 0.25, 1).unwrap() != flat_energy(1.0, 0.75, 1).unwrap());
        assert!(flat_energy(0.0, 1.0, 0).is_err());
        assert!(flat_energy(1.0, 0.0, 0).is_err());
    }

    #[test]
    fn curved_energy_decomposes_into_flat_plus_curvature_terms() {
        // E_n(R) - E_flat - mu/R + (n+nu)^2/2R^2 = 0 by construction
        let radius = 1e4;
        let m = CoulombModel::new(1.0, radius, 0.5, Branch::Plus).unwrap();
        for n in 0..3usize {
            let s = n as f64 + 1.0;
            let residual = m.energy(n).unwrap() - flat_energy(1.0, 1.0, n).unwrap()
                - 1.0 / radius
                + s * s / (2.0 * radius * radius);
            assert_abs_diff_eq!(residual, 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn flat_wavefunction_ground_state_form() {
        let mu = 1.3;
        let wf = flat_wavefunction(mu, 1.0, 0).unwrap();
        assert_eq!(wf.eval(0.0), 0.0);
        for &x in &[0.2f64, 1.0, 3.3] {
            let y = 2.0 * mu * x;
            let expected = wf.norm * y * (-y / 2.0).exp();
            assert_relative_eq!(wf.eval(x), expected, max_relative = 1e-13);
        }
    }

    prop_compose! {
        fn arbitrary_model()(
            mu in 0.1f64..50.0,
            radius in 0.1f64..20.0,
            p in 0.01f64..2.0,
            minus in proptest::bool::ANY,
        ) -> CoulombModel {
            let branch = if minus && p <= 0.25 { Branch::Minus } else { Branch::Plus };
            CoulombModel::new(mu, radius, p, branch).unwrap()
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn count_matches_enumeration(m in arbitrary_model()) {
            let mu_r = m.mu() * m.radius();
            let mut expected = 0usize;
            while mu_r > (expected as f64 + m.nu()).powi(2) {
                expected += 1;
            }
            prop_assert_eq!(m.bound_state_count(), expected);
        }

        #[test]
        fn energies_increase_and_stay_below_plateau(m in arbitrary_model()) {
            let count = m.bound_state_count().min(40);
            let plateau = m.mu() / m.radius();
            let mut prev = f64::NEG_INFINITY;
            for n in 0..count {
                let e = m.energy(n).unwrap();
                prop_assert!(e > prev);
                prop_assert!(e < plateau);
                prev = e;
            }
        }

        #[test]
        fn duality_spectrum_identity(m in arbitrary_model()) {
            for n in 0..m.bound_state_count().min(10) {
                let image = m.map_to_oscillator(m.energy(n).unwrap()).unwrap();
                let lhs = (-image.epsilon).sqrt();
                let rhs = image.k0 - (2.0 * n as f64 + 1.0 + m.branch().signed(m.k()));
                prop_assert!((lhs - rhs).abs() <= 1e-10 * lhs.abs().max(1.0));
            }
        }
    }
}
