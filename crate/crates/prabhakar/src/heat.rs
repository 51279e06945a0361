//! Separable solutions of the nonlinear fractional heat equations.
//!
//! The time factor is the eigenfunction of the Caputo-type Prabhakar
//! derivative, (ᶜD^α + λ)^γ f = −β f with f(0) = 1:
//!
//! f(t) = Σ_k (−β)^k t^{αγk} E^{γk}_{α,1+αγk}(−λt^α),
//!
//! and for large t
//!
//! f(t) ~ Σ_j φ_j (λt^α)^{−j} / Γ(1−αj),
//! φ_j = ((−1)^j/j!) Σ_k Γ(j+γk)/Γ(γk) (−β/λ^γ)^k.

use num_complex::Complex64;

use crate::dd::Dd;
use crate::error::{domain, Error, Result};
use crate::prabhakar::{eval_negative_axis_with, eval_series, EvalConfig, PrabhakarParams};
use crate::special::rgamma;

/// α, γ and λ of the operator plus the loss coefficient β of the equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeatParams {
    pub alpha: f64,
    pub gamma: f64,
    pub lambda: f64,
    pub beta_loss: f64,
}

impl HeatParams {
    /// Needs αγ ∈ (0, 1), λ > 0 and β ≥ 0 (β = 0 gives f ≡ 1).
    pub fn new(alpha: f64, gamma: f64, lambda: f64, beta_loss: f64) -> Result<Self> {
        let ag = alpha * gamma;
        if !(alpha > 0.0 && gamma > 0.0 && ag < 1.0) {
            return domain("heat parameters need alpha, gamma > 0 and alpha*gamma < 1");
        }
        if !(lambda > 0.0 && lambda.is_finite()) {
            return domain("lambda must be positive");
        }
        if !(beta_loss >= 0.0 && beta_loss.is_finite()) {
            return domain("beta_loss must be nonnegative");
        }
        Ok(Self { alpha, gamma, lambda, beta_loss })
    }

    /// β/λ^γ, the ratio of the series defining φ_j.
    pub fn phi_ratio(&self) -> f64 {
        self.beta_loss / self.lambda.powf(self.gamma)
    }

    /// φ₀ = λ^γ/(λ^γ+β), the limit of f at infinity.
    pub fn phi0_closed_form(&self) -> f64 {
        let lg = self.lambda.powf(self.gamma);
        lg / (lg + self.beta_loss)
    }

    /// φ₁ = βγλ^γ/(λ^γ+β)².
    pub fn phi1_closed_form(&self) -> f64 {
        let lg = self.lambda.powf(self.gamma);
        self.beta_loss * self.gamma * lg / (lg + self.beta_loss).powi(2)
    }
}

/// Tolerances of the eigenfunction evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct HeatConfig {
    /// Relative stopping tolerance of the outer series.
    pub tol: f64,
    /// Largest accepted estimated relative error.
    pub max_error: f64,
    pub max_outer_terms: usize,
    /// Number of φ_j available to the large-t expansion.
    pub asymptotic_terms: usize,
    /// Above this t the large-t expansion is used without trying the series.
    pub t_switch: Option<f64>,
    pub inner: EvalConfig,
}

impl Default for HeatConfig {
    fn default() -> Self {
        Self {
            tol: 1e-16,
            max_error: 1e-9,
            max_outer_terms: 5000,
            asymptotic_terms: 40,
            t_switch: None,
            inner: EvalConfig::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeatMethod {
    Series,
    Asymptotic,
}

/// An eigenfunction value with its provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeatValue {
    pub value: f64,
    /// f − φ₀, computed without cancellation on the asymptotic branch.
    pub tilde: Option<f64>,
    pub method: HeatMethod,
    /// Estimated relative error.
    pub estimate: f64,
    pub terms: usize,
}

/// E^{γk}_{α,1+αγk}(−x) with an absolute error estimate: the Taylor series,
/// or the algebraic expansion where the series cancels too much.
fn inner_value(p: &PrabhakarParams, x: f64, cfg: &EvalConfig) -> (f64, f64) {
    let s = eval_series(p, Complex64::new(-x, 0.0), cfg.tol, cfg.max_terms);
    let err_s = if s.converged { 4.0 * f64::EPSILON * s.magnitude_sum } else { f64::INFINITY };
    if err_s <= 1e-13 * s.value.re.abs() || x < 1.0 {
        return (s.value.re, err_s);
    }
    match eval_negative_axis_with(p, x, cfg) {
        // The last-term estimate can be far too optimistic when x is small
        // against the parameters, so the expansion must also agree with the series.
        Ok(a) if a.last_term_magnitude < err_s && (a.value.re - s.value.re).abs() <= err_s => {
            (a.value.re, a.last_term_magnitude.max(1e-16 * a.value.re.abs()))
        }
        _ => (s.value.re, err_s),
    }
}

/// The outer series with each inner function chosen by accuracy.
pub fn eigenfunction_series(hp: &HeatParams, t: f64, cfg: &HeatConfig) -> Result<HeatValue> {
    if !(t >= 0.0) {
        return domain("eigenfunction needs t >= 0");
    }
    if t == 0.0 || hp.beta_loss == 0.0 {
        return Ok(HeatValue { value: 1.0, tilde: None, method: HeatMethod::Series, estimate: 0.0, terms: 1 });
    }
    let HeatParams { alpha, gamma, lambda, beta_loss } = *hp;
    let ag = alpha * gamma;
    let x = lambda * t.powf(alpha);
    let ln_step = beta_loss.ln() + ag * t.ln();
    let mut sum = 1.0;
    let mut abs_err = 0.0;
    let mut small = 0;
    let mut terms = 1;
    for k in 1..=cfg.max_outer_terms {
        let kf = k as f64;
        let p = PrabhakarParams { alpha, beta: 1.0 + ag * kf, gamma: gamma * kf };
        let (e, err) = inner_value(&p, x, &cfg.inner);
        let scale = (kf * ln_step).exp();
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        if !scale.is_finite() {
            return Err(Error::SeriesBreakdown { t, estimate: f64::INFINITY });
        }
        let term = sign * scale * e;
        sum += term;
        if !sum.is_finite() {
            return Err(Error::SeriesBreakdown { t, estimate: f64::INFINITY });
        }
        abs_err += scale * err + f64::EPSILON * term.abs();
        terms = k + 1;
        if term.abs() < cfg.tol * sum.abs() {
            small += 1;
            if small >= 2 {
                break;
            }
        } else {
            small = 0;
        }
    }
    let estimate = if small >= 2 { abs_err / sum.abs() } else { f64::INFINITY };
    Ok(HeatValue { value: sum, tilde: None, method: HeatMethod::Series, estimate, terms })
}

/// f(t) by the double series; errors when its estimated relative error
/// exceeds 1e-9 (use [`f_asymptotic`] there).
pub fn eigenfunction_f(hp: &HeatParams, t: f64, tol: f64) -> Result<f64> {
    let cfg = HeatConfig { tol, ..HeatConfig::default() };
    let v = eigenfunction_series(hp, t, &cfg)?;
    if v.estimate > cfg.max_error {
        return Err(Error::SeriesBreakdown { t, estimate: v.estimate });
    }
    Ok(v.value)
}

/// φ_0..φ_J by direct summation in double-double arithmetic.
///
/// Terms are (γk)_j/j! (−β/λ^γ)^k, which need β/λ^γ < 1.
pub fn phi_coeffs(hp: &HeatParams, j_max: usize, tol: f64) -> Result<Vec<f64>> {
    let r = hp.phi_ratio();
    if hp.beta_loss == 0.0 {
        let mut out = vec![0.0; j_max + 1];
        out[0] = 1.0;
        return Ok(out);
    }
    if r >= 1.0 {
        return Err(Error::NotSummable { ratio: r });
    }
    let gamma = Dd::new(hp.gamma);
    let neg_r = Dd::new(-r);
    (0..=j_max)
        .map(|j| {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            // k = 0 contributes Γ(j)/Γ(0): 1 for j = 0, 0 otherwise
            let mut sum = if j == 0 { Dd::ONE } else { Dd::ZERO };
            let mut rk = Dd::ONE;
            let mut prev = f64::INFINITY;
            let mut peak: f64 = 0.0;
            let mut k = 1usize;
            loop {
                rk = rk * neg_r;
                let gk = gamma * Dd::new(k as f64);
                let mut binom = Dd::ONE;
                for i in 0..j {
                    binom = binom * (gk + Dd::new(i as f64)) / Dd::new((i + 1) as f64);
                }
                let term = binom * rk;
                sum = sum + term;
                let mag = term.to_f64().abs();
                peak = peak.max(mag);
                // past the peak, stop at the tolerance or at the double-double floor
                let floor = (tol * sum.to_f64().abs()).max(1e-33 * peak);
                if mag < prev && mag <= floor {
                    break;
                }
                if mag == 0.0 || k > 2_000_000 {
                    break;
                }
                prev = mag;
                k += 1;
            }
            Ok(sign * sum.to_f64())
        })
        .collect()
}

/// Σ_{j=0}^{J} φ_j (λt^α)^{−j}/Γ(1−αj).
pub fn f_asymptotic(hp: &HeatParams, t: f64, j_max: usize) -> Result<f64> {
    if !(t > 0.0) {
        return domain("large-t expansion needs t > 0");
    }
    let phi = phi_coeffs(hp, j_max, 1e-20)?;
    Ok(asymptotic_sum(hp, t, &phi, 0, false).0)
}

/// Partial sum from index `from`, optionally stopped at the smallest term;
/// returns (sum, magnitude of the first omitted term, terms used).
fn asymptotic_sum(hp: &HeatParams, t: f64, phi: &[f64], from: usize, optimal: bool) -> (f64, f64, usize) {
    let inv_x = 1.0 / (hp.lambda * t.powf(hp.alpha));
    let terms: Vec<f64> = phi
        .iter()
        .enumerate()
        .map(|(j, &p)| p * inv_x.powi(j as i32) * rgamma(1.0 - hp.alpha * j as f64))
        .collect();
    let mut end = terms.len();
    if optimal {
        // envelope ignores the zeros of 1/Γ(1−αj)
        let env: Vec<f64> = phi.iter().enumerate().map(|(j, &p)| p.abs() * inv_x.powi(j as i32) * envelope(hp.alpha * j as f64)).collect();
        for j in (from + 2)..env.len() {
            if env[j] > env[j - 1] {
                end = j;
                break;
            }
        }
    }
    let sum: f64 = terms[from..end].iter().sum();
    let rounding = f64::EPSILON * terms[from..end].iter().map(|v| v.abs()).sum::<f64>();
    let next = if end < terms.len() {
        phi[end].abs() * inv_x.powi(end as i32) * envelope(hp.alpha * end as f64)
    } else {
        let j = phi.len() - 1;
        phi[j].abs() * inv_x.powi(j as i32) * envelope(hp.alpha * j as f64)
    };
    (sum, next.max(rounding), end)
}

/// Size of 1/Γ(1−y) without its zeros: Γ(y)|sin πy|/π ≤ Γ(y)/π for y > 0.
fn envelope(y: f64) -> f64 {
    if y == 0.0 {
        1.0
    } else {
        crate::special::gamma(y) / std::f64::consts::PI
    }
}

/// Optimally truncated large-t expansion with an error estimate.
pub fn eigenfunction_asymptotic(hp: &HeatParams, t: f64, cfg: &HeatConfig) -> Result<HeatValue> {
    if !(t > 0.0) {
        return domain("large-t expansion needs t > 0");
    }
    let phi = phi_coeffs(hp, cfg.asymptotic_terms, 1e-20)?;
    Ok(asymptotic_value(hp, t, &phi))
}

fn asymptotic_value(hp: &HeatParams, t: f64, phi: &[f64]) -> HeatValue {
    let (value, next, used) = asymptotic_sum(hp, t, phi, 0, true);
    let (tilde, _, _) = asymptotic_sum(hp, t, phi, 1, true);
    let estimate = if value.is_finite() { next / value.abs() } else { f64::INFINITY };
    HeatValue { value, tilde: Some(tilde), method: HeatMethod::Asymptotic, estimate, terms: used }
}

/// Evaluates f at many t for one parameter set, computing φ_j once.
#[derive(Debug, Clone)]
pub struct Eigenfunction {
    pub params: HeatParams,
    pub config: HeatConfig,
    /// None when β = 0 or β/λ^γ ≥ 1.
    phi: Option<Vec<f64>>,
}

impl Eigenfunction {
    pub fn new(params: HeatParams, config: HeatConfig) -> Self {
        let phi = if params.beta_loss > 0.0 && params.phi_ratio() < 1.0 {
            phi_coeffs(&params, config.asymptotic_terms, 1e-20).ok()
        } else {
            None
        };
        Self { params, config, phi }
    }

    pub fn phi(&self) -> Option<&[f64]> {
        self.phi.as_deref()
    }

    /// φ₀, from the closed form when the coefficients are unavailable.
    pub fn phi0(&self) -> f64 {
        self.phi.as_ref().map_or_else(|| self.params.phi0_closed_form(), |p| p[0])
    }

    /// f(t) by whichever of the series and the large-t expansion has the
    /// smaller error estimate. Check `estimate` before trusting the value.
    pub fn eval(&self, t: f64) -> Result<HeatValue> {
        let hp = &self.params;
        let cfg = &self.config;
        if !(t >= 0.0) {
            return domain("eigenfunction needs t >= 0");
        }
        let asym = match &self.phi {
            Some(phi) if hp.lambda * t.powf(hp.alpha) > 1.0 => Some(asymptotic_value(hp, t, phi)),
            _ => None,
        };
        if let Some(a) = asym {
            if cfg.t_switch.is_some_and(|ts| t > ts) || a.estimate <= cfg.max_error * 1e-3 {
                return Ok(a);
            }
        }
        let series = match eigenfunction_series(hp, t, cfg) {
            Ok(s) => s,
            Err(e @ Error::SeriesBreakdown { .. }) => return asym.ok_or(e),
            Err(e) => return Err(e),
        };
        match asym {
            Some(a) if a.estimate < series.estimate => Ok(a),
            _ => Ok(HeatValue { tilde: Some(series.value - self.phi0()), ..series }),
        }
    }
}

/// f(t) for a single t; see [`Eigenfunction`] for repeated evaluation.
pub fn eigenfunction(hp: &HeatParams, t: f64, cfg: &HeatConfig) -> Result<HeatValue> {
    Eigenfunction::new(*hp, cfg.clone()).eval(t)
}

/// f(t) − φ₀.
pub fn f_tilde(hp: &HeatParams, t: f64) -> Result<f64> {
    let v = eigenfunction(hp, t, &HeatConfig::default())?;
    Ok(v.tilde.unwrap_or(v.value - hp.phi0_closed_form()))
}

fn checked_f(hp: &HeatParams, t: f64) -> Result<f64> {
    let v = eigenfunction(hp, t, &HeatConfig::default())?;
    if !(v.estimate <= 1e-6) {
        return Err(Error::SeriesBreakdown { t, estimate: v.estimate });
    }
    Ok(v.value)
}

/// T(x,t) = (x+C)^{1/(1+ξ)} f(t), a solution of the equation with power-law
/// conductivity k₀T^ξ. The flux vanishes identically on this profile, so k₀
/// does not enter.
pub fn heat_solution_power(x: f64, t: f64, c: f64, xi: f64, hp: &HeatParams) -> Result<f64> {
    if !(c > 0.0 && xi > 0.0) {
        return domain("need C > 0 and xi > 0");
    }
    if !(x + c > 0.0) {
        return domain("need x + C > 0");
    }
    Ok((x + c).powf(1.0 / (1.0 + xi)) * checked_f(hp, t)?)
}

/// T(x,t) = ln(x+C)/ν · f(t) for the exponential-conductivity equation,
/// under the hypothesis x > C.
pub fn heat_solution_exp(x: f64, t: f64, c: f64, nu: f64, hp: &HeatParams) -> Result<f64> {
    if !(c > 0.0 && nu > 0.0) {
        return domain("need C > 0 and nu > 0");
    }
    if !(x > c && x + c > 0.0) {
        return domain("need x > C");
    }
    Ok((x + c).ln() / nu * checked_f(hp, t)?)
}
