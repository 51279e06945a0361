//! Commands behind the `prabhakar` binary.
//!
//! Tables are CSV: comma separated, LF line endings, one header row, and
//! `#` comment lines that echo the parameters and method diagnostics.
//! Exit codes are 0 (success), 1 (usage), 2 (domain) and 3 (I/O).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::asym_coeffs::{c_coeffs, MAX_ORDER};
use crate::error::Error;
use crate::heat::{f_asymptotic, phi_coeffs, Eigenfunction, HeatConfig, HeatMethod, HeatParams};
use crate::operators::{
    apply, DerivativeScheme, OperatorKind, OperatorOptions, OperatorSpec, SampledFunction, StartingCorrection,
};
use crate::prabhakar::{
    eval_asymptotic_with, eval_auto_with, eval_negative_axis_with, eval_series, negative_axis_pairs, EvalConfig,
    EvaluationResult, PrabhakarParams, Regime, StokesRule,
};
use crate::Complex64;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// A failed command, carrying its exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(Error),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "I/O error: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn domain_err<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Domain(Error::Domain(msg.into())))
}

/// Shortest decimal text that reads back to the same f64: positional for
/// moderate magnitudes, scientific otherwise.
pub fn format_number(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let a = x.abs();
    if a == 0.0 {
        "0".into()
    } else if (1e-4..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// Numeric table with a header and comment lines.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CsvTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub comments: Vec<String>,
}

impl CsvTable {
    pub fn new(header: &[&str]) -> Self {
        Self { header: header.iter().map(|s| s.to_string()).collect(), ..Self::default() }
    }

    pub fn comment(&mut self, line: impl Into<String>) {
        self.comments.push(line.into());
    }

    pub fn push(&mut self, row: Vec<f64>) {
        assert_eq!(row.len(), self.header.len(), "row length must match the header");
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.header.iter().position(|h| h == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    pub fn write_to<W: Write + ?Sized>(&self, w: &mut W) -> io::Result<()> {
        for c in &self.comments {
            writeln!(w, "# {c}")?;
        }
        writeln!(w, "{}", self.header.join(","))?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&x| format_number(x)).collect();
            writeln!(w, "{}", cells.join(","))?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("CSV is ASCII")
    }

    /// Parses text produced by [`CsvTable::write_to`].
    pub fn parse(text: &str) -> Option<Self> {
        let mut t = CsvTable::default();
        let mut lines = text.lines();
        for line in lines.by_ref() {
            if let Some(c) = line.strip_prefix('#') {
                t.comments.push(c.trim_start().to_string());
            } else {
                t.header = line.split(',').map(str::to_string).collect();
                break;
            }
        }
        for line in lines {
            let row: Option<Vec<f64>> = line.split(',').map(|c| c.parse().ok()).collect();
            let row = row?;
            if row.len() != t.header.len() {
                return None;
            }
            t.rows.push(row);
        }
        (!t.header.is_empty()).then_some(t)
    }
}

#[derive(Debug, Parser)]
#[command(name = "prabhakar", version, about = "Prabhakar function, asymptotic coefficients, operators and heat eigenfunctions")]
pub struct Cli {
    /// Relative tolerance of the Taylor series.
    #[arg(long, global = true, default_value_t = 1e-14)]
    pub tol: f64,
    /// Term limit of series and divergent sums.
    #[arg(long, global = true, default_value_t = 2000)]
    pub max_terms: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate E^γ_{α,β}(z) at one point.
    Eval(EvalArgs),
    /// Coefficients c_k, R_k, Υ_k of the exponential expansion.
    Coeffs(CoeffsArgs),
    /// Series against negative-axis expansion on a log-spaced grid.
    Negaxis(NegaxisArgs),
    /// Eigenfunction f(t), f(t) − φ₀ and the two-term expansion.
    Heat(HeatArgs),
    /// Prabhakar integral or derivative of a test function.
    Operator(OperatorArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalMethod {
    Auto,
    Series,
    Asymptotic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StokesArg {
    Subdominant,
    Theorems,
}

impl From<StokesArg> for StokesRule {
    fn from(s: StokesArg) -> Self {
        match s {
            StokesArg::Subdominant => StokesRule::Subdominant,
            StokesArg::Theorems => StokesRule::Theorems,
        }
    }
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub beta: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub gamma: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub z_re: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub z_im: f64,
    #[arg(long, value_enum, default_value_t = EvalMethod::Auto)]
    pub method: EvalMethod,
    #[arg(long, value_enum, default_value_t = StokesArg::Subdominant)]
    pub stokes: StokesArg,
    /// Truncation order of the exponential expansion.
    #[arg(long, default_value_t = crate::asym_coeffs::DEFAULT_ORDER)]
    pub order: usize,
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub beta: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub gamma: f64,
    /// Highest k.
    #[arg(long, default_value_t = crate::asym_coeffs::DEFAULT_ORDER)]
    pub n: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct NegaxisArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub beta: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub gamma: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub t_min: f64,
    #[arg(long, default_value_t = 100.0, allow_hyphen_values = true)]
    pub t_max: f64,
    #[arg(long, default_value_t = 50)]
    pub points: usize,
    #[arg(long, value_enum, default_value_t = StokesArg::Subdominant)]
    pub stokes: StokesArg,
    #[arg(long, default_value_t = crate::asym_coeffs::DEFAULT_ORDER)]
    pub order: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct HeatArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub beta_loss: f64,
    #[arg(long, default_value_t = 10.0, allow_hyphen_values = true)]
    pub t_max: f64,
    #[arg(long, default_value_t = 101)]
    pub points: usize,
    /// Log-spaced grid from --t-min to --t-max, for slope fits of f − φ₀.
    #[arg(long)]
    pub log_tilde: bool,
    #[arg(long, default_value_t = 1e-2, allow_hyphen_values = true)]
    pub t_min: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Integral,
    Rl,
    Caputo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TestFn {
    One,
    T,
    Sin,
    Eigen,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CorrectionArg {
    None,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    Exact,
    FiniteDifference,
}

#[derive(Debug, Args)]
pub struct OperatorArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub lambda: f64,
    #[arg(long, default_value_t = 1e-2, allow_hyphen_values = true)]
    pub h: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub t_max: f64,
    #[arg(long, value_enum, default_value_t = TestFn::One)]
    pub test_fn: TestFn,
    /// Loss coefficient of the eigenfunction test function.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub beta_loss: f64,
    #[arg(long, value_enum, default_value_t = CorrectionArg::Auto)]
    pub correction: CorrectionArg,
    #[arg(long, value_enum, default_value_t = SchemeArg::Exact)]
    pub scheme: SchemeArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Results go to `out` (or the `--out` file), messages to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let target: &mut dyn Write = if code == EXIT_OK { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        // A closed stdout (`| head`) is not worth a message.
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Runs a parsed command.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    if !(cli.tol > 0.0) || cli.max_terms == 0 {
        return Err(CliError::Usage("--tol must be positive and --max-terms nonzero".into()));
    }
    let cfg = EvalConfig { tol: cli.tol, max_terms: cli.max_terms, algebraic_terms: cli.max_terms, ..EvalConfig::default() };
    match &cli.command {
        Command::Eval(a) => {
            let text = cmd_eval(a, &cfg)?;
            out.write_all(text.as_bytes())?;
            Ok(())
        }
        Command::Coeffs(a) => emit(&cmd_coeffs(a)?, a.out.as_ref(), out),
        Command::Negaxis(a) => emit(&cmd_negaxis(a, &cfg)?, a.out.as_ref(), out),
        Command::Heat(a) => emit(&cmd_heat(a, &cfg)?, a.out.as_ref(), out),
        Command::Operator(a) => emit(&cmd_operator(a, &cfg)?, a.out.as_ref(), out),
    }
}

fn emit(table: &CsvTable, path: Option<&PathBuf>, out: &mut dyn Write) -> CliResult<()> {
    match path {
        Some(p) => {
            let mut w = BufWriter::new(File::create(p)?);
            table.write_to(&mut w)?;
            w.flush()?;
        }
        None => table.write_to(out)?,
    }
    Ok(())
}

pub fn cmd_eval(a: &EvalArgs, cfg: &EvalConfig) -> CliResult<String> {
    let params = PrabhakarParams::new(a.alpha, a.beta, a.gamma)?;
    if a.order > MAX_ORDER {
        return domain_err(format!("order must not exceed {MAX_ORDER}"));
    }
    let cfg = EvalConfig { stokes: a.stokes.into(), order: a.order, ..cfg.clone() };
    let z = Complex64::new(a.z_re, a.z_im);
    let r: EvaluationResult = match a.method {
        EvalMethod::Auto => eval_auto_with(&params, z, &cfg)?,
        EvalMethod::Series => eval_series(&params, z, cfg.tol, cfg.max_terms),
        EvalMethod::Asymptotic => eval_asymptotic_with(&params, z, &cfg)?,
    };
    let mut s = String::new();
    let _ = writeln!(s, "{}", format_number(r.value.re));
    let _ = writeln!(s, "im = {}", format_number(r.value.im));
    let _ = writeln!(s, "method = {}", r.method);
    let _ = writeln!(s, "terms = {}", r.terms_used);
    let _ = writeln!(s, "last_term = {}", format_number(r.last_term_magnitude));
    let _ = writeln!(s, "converged = {}", r.converged);
    if r.method == crate::Method::Series {
        let _ = writeln!(s, "cancellation = {}", format_number(r.cancellation_estimate()));
    } else {
        let _ = writeln!(s, "exponential_terms = {}", r.exponential_terms);
        if r.discarded_imag > 0.0 {
            let _ = writeln!(s, "discarded_imag = {}", format_number(r.discarded_imag));
        }
        if r.below_threshold {
            let _ = writeln!(s, "warning = below series/asymptotic threshold {}", format_number(cfg.threshold(a.alpha)));
        }
    }
    Ok(s)
}

pub fn cmd_coeffs(a: &CoeffsArgs) -> CliResult<CsvTable> {
    let params = PrabhakarParams::new(a.alpha, a.beta, a.gamma)?;
    if a.n > MAX_ORDER {
        return domain_err(format!("n must not exceed {MAX_ORDER}"));
    }
    let table = c_coeffs(&params, a.n)?;
    let mut t = CsvTable::new(&["k", "c_k", "R_k", "Upsilon_k"]);
    t.comment(format!("alpha={} beta={} gamma={} psi={}", a.alpha, a.beta, a.gamma, format_number(table.psi)));
    for k in 0..=a.n {
        t.push(vec![k as f64, table.c[k], table.r[k], table.upsilon[k]]);
    }
    Ok(t)
}

/// log-spaced points from `lo` to `hi` inclusive.
fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (lo.log10(), hi.log10());
    (0..n)
        .map(|i| match i {
            0 => lo,
            _ if i == n - 1 => hi,
            _ => 10f64.powf(a + (b - a) * i as f64 / (n - 1) as f64),
        })
        .collect()
}

/// The number of cosine pairs C_r the negative-axis theorem prescribes.
fn theorem_pairs(params: &PrabhakarParams) -> usize {
    match params.regime() {
        Regime::Sub2 => 0,
        Regime::Eq2 => 1,
        Regime::Super2 => negative_axis_pairs(params.alpha),
    }
}

pub fn cmd_negaxis(a: &NegaxisArgs, cfg: &EvalConfig) -> CliResult<CsvTable> {
    let params = PrabhakarParams::new(a.alpha, a.beta, a.gamma)?;
    if !(a.t_min > 0.0 && a.t_max > a.t_min && a.t_max.is_finite()) {
        return domain_err("need 0 < t_min < t_max");
    }
    if a.points < 2 {
        return domain_err("points must be at least 2");
    }
    if a.order > MAX_ORDER {
        return domain_err(format!("order must not exceed {MAX_ORDER}"));
    }
    let cfg = EvalConfig { stokes: a.stokes.into(), order: a.order, ..cfg.clone() };
    let p = theorem_pairs(&params);
    let mut t = CsvTable::new(&["t", "E_series", "E_asymptotic", "rel_gap", "C_r_terms", "exp_terms_used"]);
    t.comment(format!("alpha={} beta={} gamma={} stokes={:?} order={}", a.alpha, a.beta, a.gamma, a.stokes, a.order));
    t.comment("E_series is NaN where the Taylor sum loses more than 1e-6 to cancellation");
    for x in log_grid(a.t_min, a.t_max, a.points) {
        let s = eval_series(&params, Complex64::new(-x, 0.0), cfg.tol, cfg.max_terms);
        let series = if s.converged && s.cancellation_estimate() <= 1e-6 { s.value.re } else { f64::NAN };
        let asym = eval_negative_axis_with(&params, x, &cfg)?;
        let e = asym.value.re;
        let gap = if series.is_nan() { f64::NAN } else { ((e - series) / series).abs() };
        t.push(vec![x, series, e, gap, p as f64, asym.exponential_terms as f64]);
    }
    Ok(t)
}

pub fn cmd_heat(a: &HeatArgs, cfg: &EvalConfig) -> CliResult<CsvTable> {
    let hp = HeatParams::new(a.alpha, a.gamma, a.lambda, a.beta_loss)?;
    if !(a.t_max > 0.0 && a.t_max.is_finite()) {
        return domain_err("t_max must be positive");
    }
    if a.points < 2 {
        return domain_err("points must be at least 2");
    }
    let grid: Vec<f64> = if a.log_tilde {
        if !(a.t_min > 0.0 && a.t_min < a.t_max) {
            return domain_err("need 0 < t_min < t_max");
        }
        log_grid(a.t_min, a.t_max, a.points)
    } else {
        (0..a.points).map(|i| a.t_max * i as f64 / (a.points - 1) as f64).collect()
    };
    let ev = Eigenfunction::new(hp, HeatConfig { inner: cfg.clone(), ..HeatConfig::default() });
    let phi0 = ev.phi0();
    // φ₁ for the two-term column; the closed form when the series is unavailable.
    let phi1 = match ev.phi() {
        Some(p) => p[1],
        None => phi_coeffs(&hp, 1, 1e-20).map_or_else(|_| hp.phi1_closed_form(), |p| p[1]),
    };
    let mut t = CsvTable::new(&["t", "f", "f_tilde", "f_asym2"]);
    t.comment(format!(
        "alpha={} gamma={} lambda={} beta_loss={} phi0={} phi1={}",
        a.alpha, a.gamma, a.lambda, a.beta_loss, format_number(phi0), format_number(phi1)
    ));
    let (mut n_series, mut n_asym, mut worst) = (0usize, 0usize, 0.0f64);
    for &x in &grid {
        let v = ev.eval(x)?;
        match v.method {
            HeatMethod::Series => n_series += 1,
            HeatMethod::Asymptotic => n_asym += 1,
        }
        worst = worst.max(v.estimate);
        let tilde = v.tilde.unwrap_or(v.value - phi0);
        let asym2 = if x > 0.0 { f_asymptotic(&hp, x, 2)? } else { f64::NAN };
        t.push(vec![x, v.value, tilde, asym2]);
    }
    t.comment(format!(
        "rows by outer series: {n_series}; by large-t expansion: {n_asym}; worst estimated relative error {}",
        format_number(worst)
    ));
    if worst > 1e-6 {
        t.comment("warning: some rows exceed an estimated relative error of 1e-6");
    }
    Ok(t)
}

/// Closed-form image of the test function, where one exists.
fn operator_reference(
    spec: &OperatorSpec,
    test_fn: TestFn,
    x: f64,
    f_value: f64,
    beta_loss: f64,
    cfg: &EvalConfig,
) -> crate::Result<f64> {
    let caputo = spec.kind == OperatorKind::CaputoDerivative;
    Ok(match test_fn {
        TestFn::One if caputo => 0.0,
        TestFn::One => spec.image_of_power(0.0, x, cfg)?,
        TestFn::T => spec.image_of_power(1.0, x, cfg)?,
        TestFn::Sin => {
            // Termwise on the Taylor series of sin; Caputo and RL agree since sin 0 = 0.
            let mut sum = 0.0;
            let mut coef = 1.0;
            for j in 0..60 {
                let sigma = (2 * j + 1) as f64;
                if j > 0 {
                    coef /= -(sigma - 1.0) * sigma;
                }
                let term = coef * spec.image_of_power(sigma, x, cfg)?;
                sum += term;
                if term.abs() <= 1e-17 * sum.abs() && sigma > x {
                    break;
                }
            }
            sum
        }
        // f solves C f = −β f with f(0) = 1, and the integral inverts C.
        TestFn::Eigen => match spec.kind {
            OperatorKind::CaputoDerivative => -beta_loss * f_value,
            OperatorKind::RlDerivative => -beta_loss * f_value + spec.image_of_power(0.0, x, cfg)?,
            OperatorKind::Integral => (1.0 - f_value) / beta_loss,
        },
    })
}

pub fn cmd_operator(a: &OperatorArgs, cfg: &EvalConfig) -> CliResult<CsvTable> {
    let kind = match a.kind {
        KindArg::Integral => OperatorKind::Integral,
        KindArg::Rl => OperatorKind::RlDerivative,
        KindArg::Caputo => OperatorKind::CaputoDerivative,
    };
    let spec = OperatorSpec::new(a.alpha, a.gamma, a.lambda, kind)?;
    if !(a.h > 0.0 && a.t_max >= a.h && a.t_max.is_finite()) {
        return domain_err("need 0 < h <= t_max");
    }
    let n = (a.t_max / a.h).round() as usize + 1;
    if n > 2_000_001 {
        return domain_err("grid too large (more than 2e6 points)");
    }
    let mut heat_note = None;
    let f = match a.test_fn {
        TestFn::One => SampledFunction::from_fn(a.h, n, |_| 1.0)?,
        TestFn::T => SampledFunction::from_fn(a.h, n, |t| t)?,
        TestFn::Sin => SampledFunction::from_fn(a.h, n, f64::sin)?,
        TestFn::Eigen => {
            let hp = HeatParams::new(a.alpha, a.gamma, a.lambda, a.beta_loss)?;
            let ev = Eigenfunction::new(hp, HeatConfig { inner: cfg.clone(), ..HeatConfig::default() });
            let mut values = Vec::with_capacity(n);
            let mut worst = 0.0f64;
            for i in 0..n {
                let v = ev.eval(i as f64 * a.h)?;
                worst = worst.max(v.estimate);
                values.push(v.value);
            }
            heat_note = Some(format!("eigenfunction samples: worst estimated relative error {}", format_number(worst)));
            SampledFunction::new(0.0, a.h, values)?
        }
    };
    let opts = OperatorOptions {
        derivative: match a.scheme {
            SchemeArg::Exact => DerivativeScheme::ExactInterpolant,
            SchemeArg::FiniteDifference => DerivativeScheme::FiniteDifference,
        },
        correction: match a.correction {
            CorrectionArg::None => StartingCorrection::None,
            CorrectionArg::Auto => StartingCorrection::Auto,
        },
        eval: cfg.clone(),
        ..OperatorOptions::default()
    };
    let g = apply(&f, &spec, &opts)?;
    let mut t = CsvTable::new(&["t", "numeric", "reference", "abs_err"]);
    t.comment(format!(
        "kind={:?} alpha={} gamma={} lambda={} h={} test_fn={:?} correction={:?} scheme={:?}",
        a.kind, a.alpha, a.gamma, a.lambda, a.h, a.test_fn, a.correction, a.scheme
    ));
    if kind != OperatorKind::Integral {
        t.comment("the t=0 row of a derivative repeats the first interior node");
    }
    if let Some(note) = heat_note {
        t.comment(note);
    }
    let mut worst = 0.0f64;
    for i in 0..n {
        let x = f.t(i);
        let reference = if x > 0.0 {
            operator_reference(&spec, a.test_fn, x, f.values[i], a.beta_loss, cfg)?
        } else if kind == OperatorKind::Integral || (a.test_fn == TestFn::One && kind == OperatorKind::CaputoDerivative) {
            0.0
        } else {
            // Derivative images are singular or undefined at the origin.
            f64::NAN
        };
        let err = (g.values[i] - reference).abs();
        if i > 0 && err.is_finite() {
            worst = worst.max(err);
        }
        t.push(vec![x, g.values[i], reference, err]);
    }
    t.comment(format!("max abs_err over t > 0: {}", format_number(worst)));
    Ok(t)
}
