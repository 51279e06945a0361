//! Evaluation of the Prabhakar function
//!
//! E^γ_{α,β}(z) = (1/Γ(γ)) Σ_k Γ(γ+k) z^k / (k! Γ(αk+β))
//!
//! by its Taylor series near the origin and by the algebraic (H) and
//! exponential (F) expansions for large |z|, plus the closed-form identities
//! built on it.

mod asymptotic;
mod identities;
mod series;

use std::fmt;

use num_complex::Complex64;

use crate::error::{domain, Result};

pub use asymptotic::{
    eval_asymptotic, eval_asymptotic_with, eval_negative_axis, eval_negative_axis_with, exponential_rotations,
    f_series, h_series, negative_axis_pairs, theorem3_half_width,
};
pub use identities::{
    deriv_z, deriv_z_dzhrbashyan, is_cm_region, kernel, kernel_with, laplace_transform_rhs, reduce_gamma,
    Reduction,
};
pub use series::{eval_auto, eval_auto_with, eval_polynomial, eval_series};

/// The triple (α, β, γ) with α > 0 and real β, γ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrabhakarParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

/// Where α sits relative to 2; decides which large-|z| expansion applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Sub2,
    Eq2,
    Super2,
}

impl PrabhakarParams {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return domain("alpha must be positive");
        }
        if !beta.is_finite() {
            return domain("beta must be finite");
        }
        if !gamma.is_finite() {
            return domain("gamma must be finite");
        }
        Ok(Self { alpha, beta, gamma })
    }

    /// ψ = 1 − γ + β.
    pub fn psi(&self) -> f64 {
        1.0 - self.gamma + self.beta
    }

    /// γ ∈ {0, −1, −2, …}: the function is a polynomial of degree −γ.
    pub fn is_polynomial(&self) -> bool {
        crate::special::is_nonpositive_integer(self.gamma)
    }

    pub fn polynomial_degree(&self) -> Option<usize> {
        self.is_polynomial().then(|| (-self.gamma) as usize)
    }

    /// 0 < α ≤ 1 and 0 < αγ ≤ β ≤ 1.
    pub fn is_cm_region(&self) -> bool {
        let ag = self.alpha * self.gamma;
        self.alpha > 0.0 && self.alpha <= 1.0 && ag > 0.0 && ag <= self.beta && self.beta <= 1.0
    }

    pub fn regime(&self) -> Regime {
        if self.alpha < 2.0 {
            Regime::Sub2
        } else if self.alpha == 2.0 {
            Regime::Eq2
        } else {
            Regime::Super2
        }
    }

    /// Same α, shifted β and γ.
    pub fn shifted(&self, dbeta: f64, dgamma: f64) -> Self {
        Self { alpha: self.alpha, beta: self.beta + dbeta, gamma: self.gamma + dgamma }
    }
}

/// How an evaluation was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Series,
    AlgebraicH,
    ExponentialF,
    Mixed,
    Polynomial,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::Series => "series",
            Method::AlgebraicH => "algebraic_H",
            Method::ExponentialF => "exponential_F",
            Method::Mixed => "mixed",
            Method::Polynomial => "polynomial",
        };
        f.write_str(s)
    }
}

/// A value together with how it was computed.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationResult {
    pub value: Complex64,
    pub method: Method,
    pub terms_used: usize,
    /// Magnitude of the last included term.
    pub last_term_magnitude: f64,
    /// False when a series hit its term limit before meeting the tolerance.
    pub converged: bool,
    /// Σ|terms| of a Taylor sum; with `value` it bounds the cancellation loss.
    pub magnitude_sum: f64,
    /// Number of exponential (F or C_r) contributions in an asymptotic result.
    pub exponential_terms: usize,
    /// Imaginary part dropped from a result that must be real.
    pub discarded_imag: f64,
    /// Set when an asymptotic evaluation was requested below the threshold.
    pub below_threshold: bool,
}

impl EvaluationResult {
    pub(crate) fn new(value: Complex64, method: Method) -> Self {
        Self {
            value,
            method,
            terms_used: 0,
            last_term_magnitude: 0.0,
            converged: true,
            magnitude_sum: 0.0,
            exponential_terms: 0,
            discarded_imag: 0.0,
            below_threshold: false,
        }
    }

    /// Rough relative rounding error of a Taylor sum from its cancellation.
    pub fn cancellation_estimate(&self) -> f64 {
        if self.method != Method::Series {
            return 0.0;
        }
        let v = self.value.norm();
        if v == 0.0 {
            return if self.magnitude_sum == 0.0 { 0.0 } else { f64::INFINITY };
        }
        f64::EPSILON * self.magnitude_sum / v
    }
}

/// Which exponentially small contributions accompany the dominant ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StokesRule {
    /// Exactly the terms listed by the whole-plane and negative-axis theorems.
    Theorems,
    /// Every exponential contribution F(z e^{2πir}) with |arg z + 2πr| < απ
    /// (half weight on the boundary), plus the algebraic part everywhere.
    Subdominant,
}

/// ln 10⁸: series are used while the peak term stays below about e^this.
pub const DEFAULT_LOG_PEAK: f64 = 18.420680743952367;

/// Knobs shared by the evaluators.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalConfig {
    /// Relative stopping tolerance of the Taylor series.
    pub tol: f64,
    /// Term limit of the Taylor series.
    pub max_terms: usize,
    /// Truncation order K of the exponential expansion.
    pub order: usize,
    /// Term limit of the algebraic expansion.
    pub algebraic_terms: usize,
    /// Stop divergent sums at their smallest term.
    pub optimal_truncation: bool,
    pub stokes: StokesRule,
    /// Series/asymptotic switch radius; `None` means `log_peak^α`.
    pub threshold: Option<f64>,
    pub log_peak: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            tol: 1e-15,
            max_terms: 2000,
            order: crate::asym_coeffs::DEFAULT_ORDER,
            algebraic_terms: 1000,
            optimal_truncation: true,
            stokes: StokesRule::Subdominant,
            threshold: None,
            log_peak: DEFAULT_LOG_PEAK,
        }
    }
}

impl EvalConfig {
    /// Radius below which `eval_auto` uses the Taylor series. The peak term
    /// of the series sits near k ≈ |z|^{1/α} with size about e^{|z|^{1/α}}.
    pub fn threshold(&self, alpha: f64) -> f64 {
        self.threshold.unwrap_or_else(|| self.log_peak.powf(alpha))
    }

    /// Configuration following the theorems literally.
    pub fn theorems() -> Self {
        Self { stokes: StokesRule::Theorems, ..Self::default() }
    }
}

pub(crate) fn real_if_real_input(mut r: EvaluationResult, z: Complex64) -> EvaluationResult {
    if z.im == 0.0 {
        r.discarded_imag = r.value.im.abs();
        r.value.im = 0.0;
    }
    r
}
