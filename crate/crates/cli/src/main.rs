//! Command-line front end: closed-form spectra, wavefunction sampling, and
//! the verification harness, with deterministic CSV/JSON output.
//!
//! Exit codes: 0 success, 1 model error or failed verification check,
//! 2 usage error.

mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

use h1solve_core::{coulomb, oscillator, verify, Branch, CoordinateLabel, Parity, UniformGrid};
use output::{fmt_f64, OutputRecord, Value};

#[derive(Debug, Parser)]
#[command(name = "h1solve", version, about = "Singular oscillator and Coulomb systems on the 1D hyperboloid: spectra, wavefunctions, verification oracles")]
struct Cli {
    /// Output format for stdout data.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form bound-state spectrum of a model.
    Spectrum {
        #[command(subcommand)]
        system: SpectrumSystem,
    },
    /// Sample a normalized bound-state wavefunction on a uniform grid.
    Wavefunction {
        #[command(subcommand)]
        system: WavefunctionSystem,
    },
    /// Run a verification suite and report one row per check.
    Verify {
        /// Which checks to run.
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Bundled demo parameters (the worked models used everywhere).
        #[arg(long, default_value = "paper-demo")]
        preset: String,
        /// Perturb the duality check as a negative control, e.g. `epsilon:1e-6`.
        #[arg(long = "inject-defect")]
        inject_defect: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
enum SpectrumSystem {
    /// Singular oscillator on the hyperboloid.
    Oscillator(OscillatorArgs),
    /// Singular Coulomb system on the hyperboloid.
    Coulomb(CoulombArgs),
}

#[derive(Debug, Subcommand)]
enum WavefunctionSystem {
    /// Singular oscillator on the hyperboloid (half-line evaluation).
    Oscillator {
        #[command(flatten)]
        model: OscillatorArgs,
        #[command(flatten)]
        grid: GridArgs,
        /// Only `half-line` is defined for the oscillator.
        #[arg(long, value_enum, default_value_t = ParityArg::HalfLine)]
        parity: ParityArg,
    },
    /// Singular Coulomb system; even/odd assemble full-line states.
    Coulomb {
        #[command(flatten)]
        model: CoulombArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value_t = ParityArg::HalfLine)]
        parity: ParityArg,
    },
}

#[derive(Debug, Args)]
struct OscillatorArgs {
    /// Oscillator frequency (> 0).
    #[arg(long, allow_negative_numbers = true)]
    omega: f64,
    /// Curvature radius R (> 0).
    #[arg(long, allow_negative_numbers = true)]
    radius: f64,
    /// Singularity strength k (> 0).
    #[arg(long, allow_negative_numbers = true)]
    k: f64,
    /// Sign branch of the +-k solution family.
    #[arg(long, value_enum)]
    branch: BranchArg,
}

#[derive(Debug, Args)]
struct CoulombArgs {
    /// Coulomb coupling strength (> 0).
    #[arg(long, allow_negative_numbers = true)]
    mu: f64,
    /// Curvature radius R (> 0).
    #[arg(long, allow_negative_numbers = true)]
    radius: f64,
    /// Singularity strength p (> 0).
    #[arg(long, allow_negative_numbers = true)]
    p: f64,
    /// Sign branch of the +-k solution family (k = 2p).
    #[arg(long, value_enum)]
    branch: BranchArg,
}

#[derive(Debug, Args)]
struct GridArgs {
    /// Quantum number of the bound state.
    #[arg(long)]
    n: usize,
    /// Left end of the coordinate grid.
    #[arg(long = "tau-min", allow_negative_numbers = true)]
    tau_min: f64,
    /// Right end of the coordinate grid.
    #[arg(long = "tau-max", allow_negative_numbers = true)]
    tau_max: f64,
    /// Number of samples (at least 2).
    #[arg(long)]
    points: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BranchArg {
    Plus,
    Minus,
}

impl From<BranchArg> for Branch {
    fn from(b: BranchArg) -> Branch {
        match b {
            BranchArg::Plus => Branch::Plus,
            BranchArg::Minus => Branch::Minus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
    HalfLine,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Parity {
        match p {
            ParityArg::Even => Parity::Even,
            ParityArg::Odd => Parity::Odd,
            ParityArg::HalfLine => Parity::HalfLine,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Orthonormality,
    Residual,
    Oracle,
    Duality,
    Contraction,
}

enum CliError {
    /// Invalid flag combination or malformed value: exit 2.
    Usage(String),
    /// Parameters violate a model invariant or a state index is out of
    /// range: exit 1.
    Model(String),
}

impl From<h1solve_core::Error> for CliError {
    fn from(e: h1solve_core::Error) -> Self {
        CliError::Model(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Model(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn emit(record: &OutputRecord, format: Format) {
    match format {
        Format::Csv => print!("{}", record.to_csv()),
        Format::Json => print!("{}", record.to_json()),
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Spectrum { system } => {
            let record = match system {
                SpectrumSystem::Oscillator(args) => oscillator_spectrum(&args)?,
                SpectrumSystem::Coulomb(args) => coulomb_spectrum(&args)?,
            };
            emit(&record, cli.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Wavefunction { system } => {
            let record = match system {
                WavefunctionSystem::Oscillator { model, grid, parity } => {
                    oscillator_wavefunction(&model, &grid, parity)?
                }
                WavefunctionSystem::Coulomb { model, grid, parity } => {
                    coulomb_wavefunction(&model, &grid, parity)?
                }
            };
            emit(&record, cli.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, preset, inject_defect } => {
            let (record, all_passed) = run_verify(suite, &preset, inject_defect.as_deref())?;
            emit(&record, cli.format);
            Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn oscillator_model(args: &OscillatorArgs) -> Result<oscillator::OscillatorModel, CliError> {
    Ok(oscillator::OscillatorModel::new(
        args.omega,
        args.radius,
        args.k,
        args.branch.into(),
    )?)
}

fn coulomb_model(args: &CoulombArgs) -> Result<coulomb::CoulombModel, CliError> {
    Ok(coulomb::CoulombModel::new(args.mu, args.radius, args.p, args.branch.into())?)
}

fn oscillator_spectrum(args: &OscillatorArgs) -> Result<OutputRecord, CliError> {
    let model = oscillator_model(args)?;
    let mut record = OutputRecord::new(
        "spectrum oscillator",
        vec!["n", "epsilon", "energy", "norm_constant"],
    );
    record.set_parameter("omega", fmt_f64(args.omega));
    record.set_parameter("radius", fmt_f64(args.radius));
    record.set_parameter("k", fmt_f64(args.k));
    record.set_parameter("branch", format!("{}", Branch::from(args.branch)));
    for state in model.bound_states()? {
        record.push_row(vec![
            Value::Int(state.n as i64),
            Value::Float(state.epsilon),
            Value::Float(state.energy),
            Value::Float(state.norm_constant),
        ]);
    }
    Ok(record)
}

fn coulomb_spectrum(args: &CoulombArgs) -> Result<OutputRecord, CliError> {
    let model = coulomb_model(args)?;
    let mut record = OutputRecord::new(
        "spectrum coulomb",
        vec!["n", "sigma", "energy", "norm_constant"],
    );
    record.set_parameter("mu", fmt_f64(args.mu));
    record.set_parameter("radius", fmt_f64(args.radius));
    record.set_parameter("p", fmt_f64(args.p));
    record.set_parameter("branch", format!("{}", Branch::from(args.branch)));
    for state in model.bound_states()? {
        record.push_row(vec![
            Value::Int(state.n as i64),
            Value::Float(state.sigma),
            Value::Float(state.energy),
            Value::Float(state.norm_constant),
        ]);
    }
    Ok(record)
}

fn grid_from_args(grid: &GridArgs) -> Result<UniformGrid, CliError> {
    Ok(UniformGrid::from_range(
        grid.tau_min,
        grid.tau_max,
        grid.points,
        CoordinateLabel::Tau,
    )?)
}

fn wavefunction_record(
    command: &str,
    grid: &GridArgs,
    parity: ParityArg,
    samples: h1solve_core::GridFunction,
) -> OutputRecord {
    let mut record = OutputRecord::new(command, vec!["tau", "psi"]);
    record.set_parameter("n", grid.n.to_string());
    record.set_parameter("tau_min", fmt_f64(grid.tau_min));
    record.set_parameter("tau_max", fmt_f64(grid.tau_max));
    record.set_parameter("points", grid.points.to_string());
    record.set_parameter("parity", format!("{}", Parity::from(parity)));
    for (tau, psi) in samples.samples() {
        record.push_row(vec![Value::Float(tau), Value::Float(psi)]);
    }
    record
}

fn oscillator_wavefunction(
    args: &OscillatorArgs,
    grid: &GridArgs,
    parity: ParityArg,
) -> Result<OutputRecord, CliError> {
    if parity != ParityArg::HalfLine {
        return Err(CliError::Model(
            "parity assembly is defined for the coulomb system only; the oscillator is \
             evaluated on the half-line"
                .into(),
        ));
    }
    let model = oscillator_model(args)?;
    let wf = model.wavefunction(grid.n)?;
    let samples = wf.eval_grid(&grid_from_args(grid)?)?;
    let mut record = wavefunction_record("wavefunction oscillator", grid, parity, samples);
    record.set_parameter("omega", fmt_f64(args.omega));
    record.set_parameter("radius", fmt_f64(args.radius));
    record.set_parameter("k", fmt_f64(args.k));
    record.set_parameter("branch", format!("{}", Branch::from(args.branch)));
    Ok(record)
}

fn coulomb_wavefunction(
    args: &CoulombArgs,
    grid: &GridArgs,
    parity: ParityArg,
) -> Result<OutputRecord, CliError> {
    let model = coulomb_model(args)?;
    let wf = model.wavefunction(grid.n)?;
    let samples = wf.eval_grid(&grid_from_args(grid)?, parity.into())?;
    let mut record = wavefunction_record("wavefunction coulomb", grid, parity, samples);
    record.set_parameter("mu", fmt_f64(args.mu));
    record.set_parameter("radius", fmt_f64(args.radius));
    record.set_parameter("p", fmt_f64(args.p));
    record.set_parameter("branch", format!("{}", Branch::from(args.branch)));
    Ok(record)
}

fn tolerance_scale() -> Result<f64, CliError> {
    match std::env::var("H1SOLVE_TOL_SCALE") {
        Err(_) => Ok(1.0),
        Ok(raw) => {
            let scale: f64 = raw.parse().map_err(|_| {
                CliError::Usage(format!("H1SOLVE_TOL_SCALE=`{raw}` is not a number"))
            })?;
            if !scale.is_finite() || scale <= 0.0 {
                return Err(CliError::Usage(format!(
                    "H1SOLVE_TOL_SCALE must be a positive real, got {raw}"
                )));
            }
            Ok(scale)
        }
    }
}

fn run_verify(
    suite: SuiteArg,
    preset: &str,
    inject_defect: Option<&str>,
) -> Result<(OutputRecord, bool), CliError> {
    if preset != "paper-demo" {
        return Err(CliError::Usage(format!(
            "unknown preset `{preset}` (available: paper-demo)"
        )));
    }
    let scale = tolerance_scale()?;
    let defect = match inject_defect {
        None => None,
        Some(spec) => {
            if !matches!(suite, SuiteArg::All | SuiteArg::Duality) {
                return Err(CliError::Usage(
                    "--inject-defect applies to the duality checks; use suite `duality` or `all`"
                        .into(),
                ));
            }
            Some(
                spec.parse::<verify::InjectedDefect>()
                    .map_err(|e| CliError::Usage(e.to_string()))?,
            )
        }
    };

    let suite_name = match suite {
        SuiteArg::All => "all",
        SuiteArg::Orthonormality => "orthonormality",
        SuiteArg::Residual => "residual",
        SuiteArg::Oracle => "oracle",
        SuiteArg::Duality => "duality",
        SuiteArg::Contraction => "contraction",
    };
    let reports = match suite {
        SuiteArg::All => verify::all_suites(scale, defect),
        SuiteArg::Orthonormality => verify::orthonormality_suite(scale),
        SuiteArg::Residual => verify::residual_suite(scale),
        SuiteArg::Oracle => verify::oracle_suite(scale),
        SuiteArg::Duality => verify::duality_suite(scale, defect),
        SuiteArg::Contraction => verify::contraction_suite(scale),
    }?;

    let mut record = OutputRecord::new(
        format!("verify {suite_name}"),
        vec!["check_name", "measured", "tolerance", "passed"],
    );
    record.set_parameter("preset", preset);
    record.set_parameter("suite", suite_name);
    record.set_parameter("tol_scale", fmt_f64(scale));
    if let Some(spec) = inject_defect {
        record.set_parameter("inject_defect", spec);
    }
    let mut all_passed = true;
    for report in &reports {
        all_passed &= report.passed;
        record.push_row(vec![
            Value::Text(report.check_name.clone()),
            Value::Float(report.measured),
            Value::Float(report.tolerance),
            Value::Bool(report.passed),
        ]);
    }
    Ok((record, all_passed))
}
