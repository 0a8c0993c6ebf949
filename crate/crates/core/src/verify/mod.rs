//! Independent numerical oracles and the check harness.
//!
//! Every closed-form statement of the library is re-derived here by a route
//! that never reuses the analytic spectra: adaptive quadrature for
//! orthonormality, a finite-difference Sturm eigensolver for the reduced
//! equations, grid residuals for the eigenpairs, pointwise duality
//! cross-checks, and flat-limit sweeps. Each check produces a
//! [`VerificationReport`] with its measured discrepancy and the tolerance it
//! was held to.

pub mod fd;
pub mod quad;
pub mod residual;

pub use fd::{fd_eigenvalues, lowest_eigenvalues, schrodinger_tridiagonal, sturm_count, FdGrid, LeftBoundary};
pub use quad::integrate;
pub use residual::ode_residual;

use crate::coulomb::{self, CoulombModel};
use crate::oscillator::{self, OscillatorModel};
use crate::{exec, Branch, CoordinateLabel, Error, Parity, Result, UniformGrid};
use std::collections::BTreeMap;
use std::str::FromStr;

/// Check-specific tolerances. Constants, never mutable configuration; the
/// optional scale factor for slow hardware is applied by the caller.
pub mod tol {
    /// Relative mismatch allowed between closed-form eigenvalues and the
    /// finite-difference oracle.
    pub const FD_ORACLE_REL: f64 = 1e-3;
    /// Absolute deviation of `R int psi_n psi_n'` from `delta_nn' / 2`.
    pub const ORTHONORMALITY_ABS: f64 = 1e-8;
    /// Residual of the reduced equation relative to the peak amplitude.
    pub const RESIDUAL_REL: f64 = 1e-6;
    /// Absolute deviation in the duality spectrum identity
    /// `sqrt(-epsilon) = k0 - (2n + 1 +- k)`.
    pub const DUALITY_SPECTRUM_ABS: f64 = 1e-12;
    /// Spread (`max/min - 1`) of the pointwise duality ratio.
    pub const DUALITY_POINTWISE_REL: f64 = 1e-8;
    /// Relative deviation of the contraction gap ratio from the radius ratio.
    pub const CONTRACTION_RATIO_REL: f64 = 0.05;
    /// Normalized L2 distance between curved shapes and their flat limits.
    pub const CONTRACTION_SHAPE_L2: f64 = 0.02;
    /// Relative deviation in the exact oscillator contraction decomposition.
    pub const CONTRACTION_IDENTITY_REL: f64 = 1e-6;
    /// Largest allowed ratio of last-to-first shape distance over the radius
    /// sweep (must shrink, i.e. stay well below 1).
    pub const CONTRACTION_SHAPE_SHRINK: f64 = 0.5;
    /// Slack on the bound `|E(R) - E_flat| R^2 <= q^2/2 + 1/8`.
    pub const CONTRACTION_BOUND_SLACK: f64 = 0.01;
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub check_name: String,
    pub measured: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub oracle: String,
    pub parameters: BTreeMap<String, String>,
}

impl VerificationReport {
    pub fn evaluate(
        check_name: impl Into<String>,
        measured: f64,
        tolerance: f64,
        oracle: impl Into<String>,
        parameters: BTreeMap<String, String>,
    ) -> Self {
        Self {
            check_name: check_name.into(),
            measured,
            tolerance,
            passed: measured.is_finite() && measured.abs() <= tolerance,
            oracle: oracle.into(),
            parameters,
        }
    }
}

fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Deterministic report order: by name, then by the parameter map.
pub fn sort_reports(reports: &mut [VerificationReport]) {
    reports.sort_by(|a, b| {
        a.check_name
            .cmp(&b.check_name)
            .then_with(|| a.parameters.cmp(&b.parameters))
    });
}

/// A deliberate perturbation injected into the duality check, used as a
/// negative control that the harness actually detects defects.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InjectedDefect {
    pub target: DefectTarget,
    pub amount: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DefectTarget {
    Epsilon,
    K0,
}

impl FromStr for InjectedDefect {
    type Err = Error;

    /// Parse `target:amount`, e.g. `epsilon:1e-6` or `k0:1e-6`.
    fn from_str(s: &str) -> Result<Self> {
        let (target, amount) = s.split_once(':').ok_or_else(|| {
            Error::Domain(format!("defect spec `{s}` is not of the form target:amount"))
        })?;
        let target = match target {
            "epsilon" => DefectTarget::Epsilon,
            "k0" => DefectTarget::K0,
            other => {
                return Err(Error::Domain(format!(
                    "unknown defect target `{other}` (expected `epsilon` or `k0`)"
                )))
            }
        };
        let amount: f64 = amount
            .parse()
            .map_err(|_| Error::Domain(format!("defect amount `{amount}` is not a number")))?;
        Ok(InjectedDefect { target, amount })
    }
}

fn coulomb_params(m: &CoulombModel, n: usize) -> Vec<(&'static str, String)> {
    vec![
        ("system", "coulomb".to_string()),
        ("mu", format!("{}", m.mu())),
        ("radius", format!("{}", m.radius())),
        ("p", format!("{}", m.p())),
        ("branch", format!("{}", m.branch())),
        ("n", format!("{n}")),
    ]
}

fn oscillator_params(m: &OscillatorModel, n: usize) -> Vec<(&'static str, String)> {
    vec![
        ("system", "oscillator".to_string()),
        ("omega", format!("{}", m.omega())),
        ("radius", format!("{}", m.radius())),
        ("k", format!("{}", m.k())),
        ("branch", format!("{}", m.branch())),
        ("n", format!("{n}")),
    ]
}

/// Duality cross-check for one Coulomb level: (a) the spectrum identity
/// `sqrt(-epsilon) = k0 - (2n + 1 +- k)` and (b) pointwise proportionality
/// of `psi(ln cosh alpha)` and `W(alpha)/sqrt(coth alpha)`.
pub fn check_duality(
    model: &CoulombModel,
    n: usize,
    defect: Option<InjectedDefect>,
    tol_scale: f64,
) -> Result<Vec<VerificationReport>> {
    let energy = model.energy(n)?;
    let mut image = model.map_to_oscillator(energy)?;
    if let Some(d) = defect {
        match d.target {
            DefectTarget::Epsilon => image.epsilon += d.amount,
            DefectTarget::K0 => image.k0 += d.amount,
        }
    }

    let sk = model.branch().signed(model.k());
    let spectrum_measured = if image.epsilon < 0.0 {
        ((-image.epsilon).sqrt() - (image.k0 - (2.0 * n as f64 + 1.0 + sk))).abs()
    } else {
        f64::INFINITY
    };
    let mut reports = vec![VerificationReport::evaluate(
        format!("duality/spectrum/n{n}"),
        spectrum_measured,
        tol::DUALITY_SPECTRUM_ABS * tol_scale,
        "algebraic identity between the mapped eigenvalue triple and the \
         Poschl-Teller quantization",
        params(&coulomb_params(model, n)),
    )];

    // Pointwise ratio over alpha in [0.2, 5], skipping points near nodes of
    // the excited states where the ratio degenerates to 0/0.
    let psi = model.wavefunction(n)?;
    let w = model.w_solution(n)?;
    let grid = UniformGrid::from_range(0.2, 5.0, 97, CoordinateLabel::Alpha)?;
    let alphas = grid.coords_vec();
    let pairs = exec::map(&alphas, |&alpha| {
        let lhs = psi.eval(coulomb::tau_of_alpha(alpha));
        let coth = alpha.cosh() / alpha.sinh();
        let rhs = w.eval(alpha) / coth.sqrt();
        (lhs, rhs)
    });
    let lhs_max = pairs.iter().fold(0.0f64, |m, p| m.max(p.0.abs()));
    let rhs_max = pairs.iter().fold(0.0f64, |m, p| m.max(p.1.abs()));
    let mut ratio_min = f64::INFINITY;
    let mut ratio_max = f64::NEG_INFINITY;
    for (lhs, rhs) in &pairs {
        if lhs.abs() >= 1e-6 * lhs_max && rhs.abs() >= 1e-6 * rhs_max {
            let r = lhs / rhs;
            ratio_min = ratio_min.min(r);
            ratio_max = ratio_max.max(r);
        }
    }
    let pointwise_measured = if ratio_min > 0.0 || ratio_max < 0.0 {
        (ratio_max / ratio_min - 1.0).abs()
    } else {
        f64::INFINITY // sign flip between the two routes
    };
    reports.push(VerificationReport::evaluate(
        format!("duality/pointwise/n{n}"),
        pointwise_measured,
        tol::DUALITY_POINTWISE_REL * tol_scale,
        "grid-constant ratio of psi(ln cosh alpha) to W(alpha)/sqrt(coth alpha) \
         over alpha in [0.2, 5]",
        params(&coulomb_params(model, n)),
    ));
    Ok(reports)
}

/// Trapezoid-normalized L2 distance between two sampled shapes, after sign
/// alignment. Both inputs must share the (uniform) grid step `h`.
fn normalized_l2_distance(a: &[f64], b: &[f64], h: f64) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let weight = |i: usize, len: usize| if i == 0 || i + 1 == len { 0.5 } else { 1.0 };
    let norm = |v: &[f64]| {
        let s: f64 = v
            .iter()
            .enumerate()
            .map(|(i, &x)| weight(i, v.len()) * x * x)
            .sum();
        (s * h).sqrt()
    };
    let na = norm(a);
    let nb = norm(b);
    if na == 0.0 || nb == 0.0 {
        return f64::INFINITY;
    }
    let inner: f64 = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (&x, &y))| weight(i, a.len()) * x * y)
        .sum();
    let sign = if inner >= 0.0 { 1.0 } else { -1.0 };
    let dist2: f64 = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (&x, &y))| {
            let d = x / na - sign * y / nb;
            weight(i, a.len()) * d * d
        })
        .sum();
    (dist2 * h).sqrt()
}

/// Contraction checks for the Coulomb system: the energy gap to the flat
/// limit scales like `mu/R`, and the wavefunction shape converges in L2.
pub fn check_contraction_coulomb(
    mu: f64,
    p: f64,
    branch: Branch,
    n: usize,
    radii: &[f64],
    tol_scale: f64,
) -> Result<Vec<VerificationReport>> {
    if radii.len() < 2 || radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("radii must be at least two, strictly increasing".into()));
    }
    let mut gaps = Vec::with_capacity(radii.len());
    let mut nu = 0.0;
    for &radius in radii {
        let model = CoulombModel::new(mu, radius, p, branch)?;
        if n >= model.bound_state_count() {
            return Err(Error::Domain(format!(
                "radius {radius} supports only {} bound state(s), level {n} requested",
                model.bound_state_count()
            )));
        }
        nu = model.nu();
        let flat = coulomb::flat_energy(mu, nu, n)?;
        gaps.push((model.energy(n)? - flat).abs());
    }

    let mut reports = Vec::new();
    let base = |radius: f64| {
        params(&[
            ("system", "coulomb".to_string()),
            ("mu", format!("{mu}")),
            ("p", format!("{p}")),
            ("branch", format!("{branch}")),
            ("n", format!("{n}")),
            ("radius", format!("{radius}")),
        ])
    };
    for i in 0..radii.len() - 1 {
        let expected = radii[i + 1] / radii[i];
        let measured = (gaps[i] / gaps[i + 1] - expected).abs() / expected;
        reports.push(VerificationReport::evaluate(
            format!("contraction/coulomb/gap_ratio_r{i}"),
            measured,
            tol::CONTRACTION_RATIO_REL * tol_scale,
            "energy gap to the flat limit falls off like mu/R, so consecutive \
             gaps scale with the radius ratio",
            base(radii[i]),
        ));
    }

    // Shape convergence: the curved state evaluated at tau = x/R against the
    // flat-limit function, both L2-normalized, at every radius. The distance
    // at the largest radius must be small and must have shrunk on the way.
    let x_max = 35.0 * (n as f64 + nu) / mu;
    let grid = UniformGrid::from_range(0.0, x_max, 3001, CoordinateLabel::X)?;
    let flat_wf = coulomb::flat_wavefunction(mu, nu, n)?;
    let xs = grid.coords_vec();
    let flat = exec::map(&xs, |&x| flat_wf.eval(x));
    let mut distances = Vec::with_capacity(radii.len());
    for &radius in radii {
        let curved_wf = CoulombModel::new(mu, radius, p, branch)?.wavefunction(n)?;
        let curved = exec::map(&xs, |&x| curved_wf.eval(x / radius));
        distances.push(normalized_l2_distance(&curved, &flat, grid.step));
    }
    let radius = *radii.last().expect("radii nonempty");
    reports.push(VerificationReport::evaluate(
        "contraction/coulomb/shape_l2",
        *distances.last().expect("radii nonempty"),
        tol::CONTRACTION_SHAPE_L2 * tol_scale,
        "normalized L2 distance between the curved state at tau = x/R and the \
         flat-limit wavefunction",
        base(radius),
    ));
    reports.push(VerificationReport::evaluate(
        "contraction/coulomb/shape_l2_ratio",
        distances.last().unwrap() / distances.first().unwrap(),
        tol::CONTRACTION_SHAPE_SHRINK * tol_scale,
        "the L2 distance to the flat limit shrinks as the radius grows",
        base(radius),
    ));
    Ok(reports)
}

/// Contraction checks for the oscillator: the exact decomposition of
/// `E_n(R) - E_flat`, its `O(1/R^2)` bound, and L2 shape convergence.
pub fn check_contraction_oscillator(
    omega: f64,
    k: f64,
    branch: Branch,
    n: usize,
    radii: &[f64],
    tol_scale: f64,
) -> Result<Vec<VerificationReport>> {
    if radii.len() < 2 || radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("radii must be at least two, strictly increasing".into()));
    }
    let flat = oscillator::flat_energy(omega, k, branch, n)?;
    let q = 2.0 * n as f64 + 1.0 + branch.signed(k);
    let bound = q * q / 2.0 + 0.125;

    let mut identity_measured = 0.0f64;
    let mut bound_measured = 0.0f64;
    for &radius in radii {
        let model = OscillatorModel::new(omega, radius, k, branch)?;
        if n >= model.bound_state_count() {
            return Err(Error::Domain(format!(
                "radius {radius} supports only {} bound state(s), level {n} requested",
                model.bound_state_count()
            )));
        }
        let lhs = model.energy(n)? - flat;
        // k0 - omega R^2 written as 1/4 / (k0 + omega R^2) to dodge the
        // catastrophic cancellation at large R.
        let k0 = model.k0();
        let diff_k0 = 0.25 / (k0 + omega * radius * radius);
        let rhs = (q * diff_k0 - q * q / 2.0 - 0.125) / (radius * radius);
        identity_measured = identity_measured.max((lhs - rhs).abs() / rhs.abs());
        bound_measured = bound_measured.max((lhs.abs() * radius * radius - bound).max(0.0));
    }

    let base = |radius: f64| {
        params(&[
            ("system", "oscillator".to_string()),
            ("omega", format!("{omega}")),
            ("k", format!("{k}")),
            ("branch", format!("{branch}")),
            ("n", format!("{n}")),
            ("radius", format!("{radius}")),
        ])
    };
    let mut reports = vec![
        VerificationReport::evaluate(
            "contraction/oscillator/identity",
            identity_measured,
            tol::CONTRACTION_IDENTITY_REL * tol_scale,
            "exact algebraic rearrangement of E_n(R) - E_flat, with \
             k0 - omega R^2 evaluated in cancellation-free form",
            base(radii[0]),
        ),
        VerificationReport::evaluate(
            "contraction/oscillator/bounded",
            bound_measured,
            tol::CONTRACTION_BOUND_SLACK * tol_scale,
            "|E_n(R) - E_flat| R^2 stays below q^2/2 + 1/8 for all radii",
            base(radii[0]),
        ),
    ];

    let x_max = 8.0 / omega.sqrt() * (n as f64 + 1.0);
    let grid = UniformGrid::from_range(0.0, x_max, 3001, CoordinateLabel::X)?;
    let flat_wf = oscillator::flat_wavefunction(omega, k, branch, n)?;
    let xs = grid.coords_vec();
    let flat_values = exec::map(&xs, |&x| flat_wf.eval(x));
    let mut distances = Vec::with_capacity(radii.len());
    for &radius in radii {
        let curved_wf = OscillatorModel::new(omega, radius, k, branch)?.wavefunction(n)?;
        let curved = exec::map(&xs, |&x| curved_wf.eval(x / radius));
        distances.push(normalized_l2_distance(&curved, &flat_values, grid.step));
    }
    let radius = *radii.last().expect("radii nonempty");
    reports.push(VerificationReport::evaluate(
        "contraction/oscillator/shape_l2",
        *distances.last().expect("radii nonempty"),
        tol::CONTRACTION_SHAPE_L2 * tol_scale,
        "normalized L2 distance between the curved state at tau = x/R and the \
         flat singular-oscillator eigenfunction",
        base(radius),
    ));
    reports.push(VerificationReport::evaluate(
        "contraction/oscillator/shape_l2_ratio",
        distances.last().unwrap() / distances.first().unwrap(),
        tol::CONTRACTION_SHAPE_SHRINK * tol_scale,
        "the L2 distance to the flat limit shrinks as the radius grows",
        base(radius),
    ));
    Ok(reports)
}

/// Orthonormality suite over the demo models:
/// `R int_0^inf psi_n psi_n' = delta_nn'/2`, the weighted `W` condition, and
/// unit norm of the parity-assembled full-line states.
pub fn orthonormality_suite(tol_scale: f64) -> Result<Vec<VerificationReport>> {
    let tolerance = tol::ORTHONORMALITY_ABS * tol_scale;
    let quad_tol = tolerance / 10.0;
    let mut reports = Vec::new();

    let osc = oscillator::demo_model();
    let osc_count = osc.bound_state_count();
    for n in 0..osc_count {
        for np in n..osc_count {
            let wf_n = osc.wavefunction(n)?;
            let wf_np = osc.wavefunction(np)?;
            let tau_max = osc.quadrature_tau_max(n)?.max(osc.quadrature_tau_max(np)?);
            let integral = integrate(
                |t| osc.radius() * wf_n.eval(t) * wf_np.eval(t),
                0.0,
                tau_max,
                quad_tol,
            )?;
            let expected = if n == np { 0.5 } else { 0.0 };
            let mut p = params(&oscillator_params(&osc, n));
            p.insert("n_prime".into(), format!("{np}"));
            reports.push(VerificationReport::evaluate(
                format!("orthonormality/oscillator/n{n}_n{np}"),
                (integral - expected).abs(),
                tolerance,
                "adaptive Gauss-Legendre quadrature of R psi_n psi_n' over the half-line",
                p,
            ));
        }
    }

    let coul = coulomb::demo_model();
    let coul_count = coul.bound_state_count();
    for n in 0..coul_count {
        for np in n..coul_count {
            let wf_n = coul.wavefunction(n)?;
            let wf_np = coul.wavefunction(np)?;
            let tau_max = coul.quadrature_tau_max(n)?.max(coul.quadrature_tau_max(np)?);
            let integral = integrate(
                |t| coul.radius() * wf_n.eval(t) * wf_np.eval(t),
                0.0,
                tau_max,
                quad_tol,
            )?;
            let expected = if n == np { 0.5 } else { 0.0 };
            let mut p = params(&coulomb_params(&coul, n));
            p.insert("n_prime".into(), format!("{np}"));
            reports.push(VerificationReport::evaluate(
                format!("orthonormality/coulomb/n{n}_n{np}"),
                (integral - expected).abs(),
                tolerance,
                "adaptive Gauss-Legendre quadrature of R psi_n psi_n' over the half-line",
                p,
            ));
        }
    }

    // Weighted normalization of the mapped solution:
    // R int_0^inf W^2 tanh^2(alpha) = 1/2.
    for n in 0..coul_count {
        let w = coul.w_solution(n)?;
        let alpha_max = coul.quadrature_tau_max(n)? + 1.0;
        let integral = integrate(
            |a| {
                let t = a.tanh();
                coul.radius() * w.eval(a) * w.eval(a) * t * t
            },
            0.0,
            alpha_max,
            quad_tol,
        )?;
        reports.push(VerificationReport::evaluate(
            format!("orthonormality/coulomb/w_weighted_n{n}"),
            (integral - 0.5).abs(),
            tolerance,
            "adaptive quadrature of R W^2 tanh^2(alpha) over the duality half-line",
            params(&coulomb_params(&coul, n)),
        ));
    }

    // Parity-assembled full-line states carry unit norm.
    for n in 0..coul_count {
        for parity in [Parity::Even, Parity::Odd] {
            let wf = coul.wavefunction(n)?;
            let tau_max = coul.quadrature_tau_max(n)?;
            let integral = integrate(
                |t| {
                    let v = wf.eval_parity(t, parity);
                    coul.radius() * v * v
                },
                -tau_max,
                tau_max,
                quad_tol,
            )?;
            let mut p = params(&coulomb_params(&coul, n));
            p.insert("parity".into(), format!("{parity}"));
            reports.push(VerificationReport::evaluate(
                format!("orthonormality/coulomb/full_line_{parity}_n{n}"),
                (integral - 1.0).abs(),
                tolerance,
                "adaptive quadrature of the parity-extended density over the full line",
                p,
            ));
        }
    }

    sort_reports(&mut reports);
    Ok(reports)
}

fn residual_grid() -> Result<UniformGrid> {
    // h = 5e-4: the O(h^4) stencil truncation stays below the 1e-6 target
    // even for the nu = 1/4 anyon state, whose decay rate sigma reaches 24.
    UniformGrid::from_range(0.1, 10.0, 19801, CoordinateLabel::Tau)
}

/// ODE residual suite: every analytic bound state of the demo models
/// satisfies its reduced equation on `tau in [0.1, 10]`.
pub fn residual_suite(tol_scale: f64) -> Result<Vec<VerificationReport>> {
    let tolerance = tol::RESIDUAL_REL * tol_scale;
    let grid = residual_grid()?;
    let mut reports = Vec::new();

    let osc = oscillator::demo_model();
    for n in 0..osc.bound_state_count() {
        let wf = osc.wavefunction(n)?;
        let measured = ode_residual(
            |t| wf.eval(t),
            osc.epsilon(n)?,
            |t| osc.reduced_potential(t),
            &grid,
        )?;
        reports.push(VerificationReport::evaluate(
            format!("residual/oscillator/n{n}"),
            measured,
            tolerance,
            "5-point finite-difference residual of the Poschl-Teller form",
            params(&oscillator_params(&osc, n)),
        ));
    }

    let coulomb_cases = [
        ("coulomb", coulomb::demo_model()),
        ("coulomb_quarter", coulomb::demo_anyon(Branch::Minus)),
        ("coulomb_three_quarter", coulomb::demo_anyon(Branch::Plus)),
    ];
    for (label, model) in coulomb_cases {
        for n in 0..model.bound_state_count() {
            let wf = model.wavefunction(n)?;
            let measured = ode_residual(
                |t| wf.eval(t),
                model.reduced_eigenvalue(n)?,
                |t| model.reduced_potential(t),
                &grid,
            )?;
            reports.push(VerificationReport::evaluate(
                format!("residual/{label}/n{n}"),
                measured,
                tolerance,
                "5-point finite-difference residual of the Manning-Rosen form",
                params(&coulomb_params(&model, n)),
            ));
        }
    }

    sort_reports(&mut reports);
    Ok(reports)
}

/// Finite-difference oracle suite: the Sturm eigensolver reproduces the
/// closed-form spectra of the demo oscillator, the demo Coulomb system, and
/// both anyon families.
pub fn oracle_suite(tol_scale: f64) -> Result<Vec<VerificationReport>> {
    let tolerance = tol::FD_ORACLE_REL * tol_scale;
    let mut reports = Vec::new();

    // Oscillator: h = 1e-3 on [h, 25], Dirichlet. The wavefunction behaves
    // like tau^(3/2) at the origin, so the cutoff at h is benign.
    let osc = oscillator::demo_model();
    let grid = FdGrid::with_step(1e-3, 25.0, 1e-3)?;
    let evs = fd_eigenvalues(|t| osc.reduced_potential(t), &grid, osc.bound_state_count())?;
    for (n, &ev) in evs.iter().enumerate() {
        let exact = osc.epsilon(n)?;
        reports.push(VerificationReport::evaluate(
            format!("oracle/oscillator/n{n}"),
            (ev - exact).abs() / exact.abs(),
            tolerance,
            "Sturm-bisection FD eigensolver, h = 1e-3 on [1e-3, 25], Dirichlet",
            params(&oscillator_params(&osc, n)),
        ));
    }

    // Coulomb nu = 1: the regular solution vanishes linearly at tau = 0, so
    // the Dirichlet node is placed exactly there.
    let coul = coulomb::demo_model();
    let grid = FdGrid::with_step(0.0, 25.0, 5e-4)?;
    let evs = fd_eigenvalues(|t| coul.reduced_potential(t), &grid, coul.bound_state_count())?;
    for (n, &ev) in evs.iter().enumerate() {
        let e_fd = (ev + 2.0 * coul.mu() * coul.radius()) / (2.0 * coul.radius().powi(2));
        let exact = coul.energy(n)?;
        reports.push(VerificationReport::evaluate(
            format!("oracle/coulomb/n{n}"),
            (e_fd - exact).abs() / exact.abs(),
            tolerance,
            "Sturm-bisection FD eigensolver, h = 5e-4 on [0, 25], Dirichlet",
            params(&coulomb_params(&coul, n)),
        ));
    }

    // Anyon pair at p = 1/4: the centrifugal coefficient p^2 - 1/4 = -3/16
    // is attractive at the origin, so both indicial solutions are
    // square-integrable and a Dirichlet cutoff in tau cannot pin the family.
    // In the duality variable the centrifugal term vanishes and even/odd
    // reflection at alpha = 0 selects nu = 1/4 or 3/4 exactly.
    for (label, branch) in [("coulomb_quarter", Branch::Minus), ("coulomb_three_quarter", Branch::Plus)] {
        let model = coulomb::demo_anyon(branch);
        let evs = anyon_alpha_eigenvalues(&model, 2)?;
        for (n, &ev) in evs.iter().enumerate() {
            let e_fd = ev / (2.0 * model.radius().powi(2));
            let exact = model.energy(n)?;
            reports.push(VerificationReport::evaluate(
                format!("oracle/{label}/n{n}"),
                (e_fd - exact).abs() / exact.abs(),
                tolerance,
                "generalized Sturm FD eigensolver in the duality variable, \
                 h = 2e-4 on [0, 15], parity reflection at the origin",
                params(&coulomb_params(&model, n)),
            ));
        }
    }

    sort_reports(&mut reports);
    Ok(reports)
}

/// Lowest `m` reduced eigenvalues `epsilon = 2 R^2 E` of a `p = 1/4` anyon
/// model, computed in the duality variable `alpha`. There the equation reads
/// `-W'' - (4 mu R - 1/4) sech^2(alpha) W = epsilon tanh^2(alpha) W` with no
/// centrifugal term, analytic coefficients, and a clean parity boundary:
/// the `nu = 1/4` family is even at the origin, `nu = 3/4` odd.
fn anyon_alpha_eigenvalues(model: &CoulombModel, m: usize) -> Result<Vec<f64>> {
    if (model.p() - 0.25).abs() > 1e-12 {
        return Err(Error::Internal(
            "the duality-variable oracle is specific to p = 1/4".into(),
        ));
    }
    let h = 2e-4_f64;
    let alpha_max = 15.0_f64;
    let n = (alpha_max / h).round() as usize;
    let well = 4.0 * model.mu() * model.radius() - 0.25;
    let even = model.branch() == Branch::Minus;
    let inv_h2 = 1.0 / (h * h);
    // Staggered midpoint nodes alpha_j = (j + 1/2) h: the reflection ghost
    // W(-h/2) = +-W(h/2) imposes the parity without a degenerate-weight node.
    let diag = exec::map_range(n, |j| {
        let alpha = (j as f64 + 0.5) * h;
        let sech = 1.0 / alpha.cosh();
        let base = if j == 0 {
            if even {
                1.0
            } else {
                3.0
            }
        } else {
            2.0
        };
        base * inv_h2 - well * sech * sech
    });
    let weight = exec::map_range(n, |j| {
        let t = ((j as f64 + 0.5) * h).tanh();
        t * t
    });
    let off = vec![-inv_h2; n - 1];
    fd::lowest_generalized_eigenvalues(&diag, &off, &weight, m)
}

/// Duality suite over every bound state of the demo Coulomb model.
pub fn duality_suite(tol_scale: f64, defect: Option<InjectedDefect>) -> Result<Vec<VerificationReport>> {
    let model = coulomb::demo_model();
    let mut reports = Vec::new();
    for n in 0..model.bound_state_count() {
        reports.extend(check_duality(&model, n, defect, tol_scale)?);
    }
    sort_reports(&mut reports);
    Ok(reports)
}

/// Contraction suite: Coulomb gap scaling and shape convergence at
/// `mu = 1, nu = 1`, plus the oscillator decomposition at `omega = k = 1`.
pub fn contraction_suite(tol_scale: f64) -> Result<Vec<VerificationReport>> {
    let mut reports = check_contraction_coulomb(1.0, 0.5, Branch::Plus, 0, &[1e2, 1e3], tol_scale)?;
    reports.extend(check_contraction_oscillator(
        1.0,
        1.0,
        Branch::Plus,
        0,
        &[1e2, 1e3, 1e4],
        tol_scale,
    )?);
    sort_reports(&mut reports);
    Ok(reports)
}

/// Run every suite (fanned out when the `parallel` feature is on) and return
/// the reports in deterministic order.
pub fn all_suites(tol_scale: f64, defect: Option<InjectedDefect>) -> Result<Vec<VerificationReport>> {
    type Suite = Box<dyn Fn() -> Result<Vec<VerificationReport>> + Sync + Send>;
    let suites: Vec<Suite> = vec![
        Box::new(move || orthonormality_suite(tol_scale)),
        Box::new(move || residual_suite(tol_scale)),
        Box::new(move || oracle_suite(tol_scale)),
        Box::new(move || duality_suite(tol_scale, defect)),
        Box::new(move || contraction_suite(tol_scale)),
    ];
    let outcomes = exec::map(&suites, |suite| suite());
    let mut reports = Vec::new();
    for outcome in outcomes {
        reports.extend(outcome?);
    }
    sort_reports(&mut reports);
    Ok(reports)
}
