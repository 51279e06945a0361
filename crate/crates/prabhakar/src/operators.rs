//! Prabhakar fractional integral and derivatives on uniform grids.
//!
//! All three operators are convolutions with a Prabhakar kernel
//! e^γ_{α,β}(t; −λ) = t^{β−1} E^γ_{α,β}(−λt^α):
//!
//! - integral (J^α + λ)^γ f = e^γ_{α,αγ} ⋆ f,
//! - RL-type derivative (D^α + λ)^γ f = d/dt [e^{−γ}_{α,1−αγ} ⋆ f],
//! - Caputo-type derivative e^{−γ}_{α,1−αγ} ⋆ f′.
//!
//! The kernel is weakly singular at the origin, so the convolutions use
//! product integration: f is interpolated piecewise linearly and the kernel
//! is integrated exactly over each cell through its antiderivatives
//! K₁(v) = v^β E^γ_{α,β+1}(−λv^α) and K₂(v) = v^{β+1} E^γ_{α,β+2}(−λv^α).

use crate::error::{domain, Error, Result};
use crate::prabhakar::{kernel_with, EvalConfig, PrabhakarParams};
use crate::special::gamma;

/// Samples f(t0 + nh), n = 0, 1, …
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    pub t0: f64,
    pub h: f64,
    pub values: Vec<f64>,
}

impl SampledFunction {
    pub fn new(t0: f64, h: f64, values: Vec<f64>) -> Result<Self> {
        if !(h > 0.0 && h.is_finite()) {
            return domain("grid step must be positive");
        }
        if values.len() < 2 {
            return domain("need at least two samples");
        }
        if values.iter().any(|v| !v.is_finite()) {
            return domain("samples must be finite");
        }
        Ok(Self { t0, h, values })
    }

    /// Samples `f` at t = nh, n = 0..len.
    pub fn from_fn(h: f64, len: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(0.0, h, (0..len).map(|n| f(n as f64 * h)).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn t(&self, n: usize) -> f64 {
        self.t0 + n as f64 * self.h
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(|n| self.t(n))
    }

    fn with_values(&self, values: Vec<f64>) -> Self {
        Self { t0: self.t0, h: self.h, values }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    Integral,
    RlDerivative,
    CaputoDerivative,
}

/// Parameters of (J^α + λ)^γ or (D^α + λ)^γ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorSpec {
    pub alpha: f64,
    pub gamma: f64,
    pub lambda: f64,
    pub kind: OperatorKind,
    /// ⌈αγ⌉; the derivatives are implemented for m = 1 only.
    pub m: usize,
}

impl OperatorSpec {
    pub fn new(alpha: f64, gamma: f64, lambda: f64, kind: OperatorKind) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 2.0) {
            return domain("operator alpha must lie in (0, 2)");
        }
        if !(gamma > 0.0 && gamma.is_finite()) || !lambda.is_finite() {
            return domain("operator needs gamma > 0 and finite lambda");
        }
        let ag = alpha * gamma;
        let m = ag.ceil() as usize;
        if kind != OperatorKind::Integral && !(ag > 0.0 && ag < 1.0) {
            return Err(Error::Unsupported(format!(
                "derivatives need alpha*gamma in (0, 1), got {ag}"
            )));
        }
        Ok(Self { alpha, gamma, lambda, kind, m })
    }

    /// Kernel parameters: e^γ_{α,αγ} for the integral, e^{−γ}_{α,1−αγ} otherwise.
    pub fn kernel_params(&self) -> PrabhakarParams {
        let ag = self.alpha * self.gamma;
        let (beta, gamma) = match self.kind {
            OperatorKind::Integral => (ag, self.gamma),
            _ => (1.0 - ag, -self.gamma),
        };
        PrabhakarParams { alpha: self.alpha, beta, gamma }
    }

    /// The operator applied to t^σ (σ > 0), in closed form.
    pub fn image_of_power(&self, sigma: f64, t: f64, cfg: &EvalConfig) -> Result<f64> {
        let kp = self.kernel_params();
        let shift = match self.kind {
            OperatorKind::Integral => sigma + 1.0,
            _ => sigma,
        };
        Ok(gamma(sigma + 1.0) * kernel_with(&kp.shifted(shift, 0.0), t, -self.lambda, cfg)?)
    }
}

/// How f is interpolated between grid nodes inside the convolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interpolation {
    /// Piecewise linear, second order for smooth f.
    Linear,
    /// Left-endpoint piecewise constant, first order.
    Constant,
}

/// How the derivatives are discretized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivativeScheme {
    /// Exact derivative of the product-integrated piecewise-linear
    /// interpolant: Caputo_n = Σ_j (f_{j+1} − f_j)/h ∫_{cell j} kernel.
    ExactInterpolant,
    /// Product integration followed by fourth-order finite differences
    /// (one-sided near the ends); Caputo differentiates f first.
    FiniteDifference,
}

/// Extra weights on the first few samples that make the scheme exact for
/// t^σ at selected nonsmooth exponents σ.
#[derive(Debug, Clone, PartialEq)]
pub enum StartingCorrection {
    None,
    /// Exponents α(γk + j) below 1 + αγ that are not integers, at most six.
    /// Solutions of Prabhakar relaxation equations carry exactly these.
    Auto,
    Exponents(Vec<f64>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct OperatorOptions {
    pub interpolation: Interpolation,
    pub derivative: DerivativeScheme,
    pub correction: StartingCorrection,
    pub eval: EvalConfig,
}

impl Default for OperatorOptions {
    fn default() -> Self {
        Self {
            interpolation: Interpolation::Linear,
            derivative: DerivativeScheme::ExactInterpolant,
            correction: StartingCorrection::Auto,
            eval: EvalConfig::default(),
        }
    }
}

/// ∫_a^b e^γ_{α,β}(u; λ) du = K₁(b) − K₁(a) with K₁(v) = v^β E^γ_{α,β+1}(λv^α).
pub fn kernel_cell_moment(params: &PrabhakarParams, lambda: f64, a: f64, b: f64) -> Result<f64> {
    if !(0.0 <= a && a <= b) {
        return domain("cell moment needs 0 <= a <= b");
    }
    if a == b {
        return Ok(0.0);
    }
    let cfg = EvalConfig::default();
    Ok(antiderivative(params, lambda, b, 1, &cfg)? - antiderivative(params, lambda, a, 1, &cfg)?)
}

/// ∫_a^b u e^γ_{α,β}(u; λ) du = [vK₁(v) − K₂(v)]_a^b.
pub fn kernel_cell_first_moment(params: &PrabhakarParams, lambda: f64, a: f64, b: f64) -> Result<f64> {
    if !(0.0 <= a && a <= b) {
        return domain("cell moment needs 0 <= a <= b");
    }
    if a == b {
        return Ok(0.0);
    }
    let cfg = EvalConfig::default();
    let g = |v: f64| -> Result<f64> {
        Ok(v * antiderivative(params, lambda, v, 1, &cfg)? - antiderivative(params, lambda, v, 2, &cfg)?)
    };
    Ok(g(b)? - g(a)?)
}

/// Order-`level` antiderivative of the kernel vanishing at 0 (needs β > 0).
fn antiderivative(params: &PrabhakarParams, lambda: f64, v: f64, level: u32, cfg: &EvalConfig) -> Result<f64> {
    if v == 0.0 {
        return Ok(0.0);
    }
    kernel_with(&params.shifted(level as f64, 0.0), v, lambda, cfg)
}

/// Per-cell weights on a uniform grid; cell m covers lags v ∈ [mh, (m+1)h].
struct CellWeights {
    /// ∫ kernel over the cell.
    m0: Vec<f64>,
    /// Weight of the sample at lag mh (linear interpolation).
    near: Vec<f64>,
    /// Weight of the sample at lag (m+1)h.
    far: Vec<f64>,
}

impl CellWeights {
    fn new(kp: &PrabhakarParams, lambda: f64, h: f64, cells: usize, cfg: &EvalConfig) -> Result<Self> {
        let mut k1 = Vec::with_capacity(cells + 1);
        let mut k2 = Vec::with_capacity(cells + 1);
        for m in 0..=cells {
            let v = m as f64 * h;
            k1.push(antiderivative(kp, lambda, v, 1, cfg)?);
            k2.push(antiderivative(kp, lambda, v, 2, cfg)?);
        }
        let mut w = Self { m0: Vec::with_capacity(cells), near: Vec::new(), far: Vec::new() };
        for m in 0..cells {
            let avg = (k2[m + 1] - k2[m]) / h;
            w.m0.push(k1[m + 1] - k1[m]);
            w.near.push(avg - k1[m]);
            w.far.push(k1[m + 1] - avg);
        }
        Ok(w)
    }

    /// ∫₀^{t_n} kernel(t_n − u) f̃(u) du for every node.
    fn convolve(&self, f: &[f64], interp: Interpolation) -> Vec<f64> {
        (0..f.len())
            .map(|n| match interp {
                Interpolation::Linear => (0..n).map(|m| self.near[m] * f[n - m] + self.far[m] * f[n - m - 1]).sum(),
                Interpolation::Constant => (0..n).map(|m| self.m0[m] * f[n - m - 1]).sum(),
            })
            .collect()
    }

    /// Σ_j (f_{j+1} − f_j)/h · ∫_{cell j} kernel, for every node.
    fn convolve_slopes(&self, f: &[f64], h: f64) -> Vec<f64> {
        (0..f.len())
            .map(|n| (0..n).map(|m| self.m0[m] * (f[n - m] - f[n - m - 1])).sum::<f64>() / h)
            .collect()
    }
}

/// Fourth-order first derivative on a uniform grid, one-sided near the ends.
fn differentiate4(f: &[f64], h: f64) -> Result<Vec<f64>> {
    let n = f.len();
    if n < 5 {
        return domain("finite differencing needs at least five samples");
    }
    let mut d = vec![0.0; n];
    let fwd0 = |i: usize, s: f64| {
        let g = |k: usize| f[(i as isize + s as isize * k as isize) as usize];
        s * (-25.0 * g(0) + 48.0 * g(1) - 36.0 * g(2) + 16.0 * g(3) - 3.0 * g(4)) / (12.0 * h)
    };
    let fwd1 = |i: usize, s: f64| {
        let g = |k: isize| f[(i as isize + s as isize * k) as usize];
        s * (-3.0 * g(-1) - 10.0 * g(0) + 18.0 * g(1) - 6.0 * g(2) + g(3)) / (12.0 * h)
    };
    d[0] = fwd0(0, 1.0);
    d[1] = fwd1(1, 1.0);
    d[n - 1] = fwd0(n - 1, -1.0);
    d[n - 2] = fwd1(n - 2, -1.0);
    for i in 2..n - 2 {
        d[i] = (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) / (12.0 * h);
    }
    Ok(d)
}

/// Exponents α(γk + j) in (0, 1 + αγ), non-integer, separated by at least
/// 0.02, smallest six.
pub fn auto_correction_exponents(alpha: f64, gamma: f64) -> Vec<f64> {
    let cap = 1.0 + alpha * gamma;
    let mut out: Vec<f64> = Vec::new();
    let mut k = 0;
    while alpha * gamma * (k as f64) < cap {
        let mut j = 0;
        loop {
            let s = alpha * (gamma * k as f64 + j as f64);
            if s >= cap {
                break;
            }
            if (k, j) != (0, 0) && (s - s.round()).abs() > 1e-9 {
                out.push(s);
            }
            j += 1;
        }
        k += 1;
    }
    out.sort_by(|a, b| a.total_cmp(b));
    let mut kept: Vec<f64> = Vec::new();
    for s in out {
        if kept.last().map_or(true, |&l| s - l >= 0.02) {
            kept.push(s);
        }
    }
    kept.truncate(6);
    kept
}

/// Dense solve with partial pivoting; `a` is row-major n×n.
fn lu_factor(mut a: Vec<Vec<f64>>) -> Result<(Vec<Vec<f64>>, Vec<usize>)> {
    let n = a.len();
    let mut piv: Vec<usize> = (0..n).collect();
    for c in 0..n {
        let p = (c..n)
            .max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs()))
            .unwrap_or(c);
        if a[p][c] == 0.0 {
            return domain("starting-correction exponents are degenerate");
        }
        a.swap(c, p);
        piv.swap(c, p);
        for r in c + 1..n {
            let f = a[r][c] / a[c][c];
            a[r][c] = f;
            for k in c + 1..n {
                a[r][k] -= f * a[c][k];
            }
        }
    }
    Ok((a, piv))
}

fn lu_solve(lu: &[Vec<f64>], piv: &[usize], b: &[f64]) -> Vec<f64> {
    let n = lu.len();
    let mut x: Vec<f64> = piv.iter().map(|&p| b[p]).collect();
    for r in 0..n {
        for k in 0..r {
            x[r] -= lu[r][k] * x[k];
        }
    }
    for r in (0..n).rev() {
        for k in r + 1..n {
            x[r] -= lu[r][k] * x[k];
        }
        x[r] /= lu[r][r];
    }
    x
}

/// Adds Σ_i w_{n,i}(f_i − f_0), i = 1..S, so that the scheme reproduces the
/// closed-form image of t^e for every exponent e in {1} ∪ `exponents`.
fn apply_correction(
    out: &mut [f64],
    f: &SampledFunction,
    spec: &OperatorSpec,
    exponents: &[f64],
    scheme: &dyn Fn(&[f64]) -> Vec<f64>,
    cfg: &EvalConfig,
) -> Result<()> {
    let mut exps = vec![1.0];
    exps.extend(exponents.iter().copied().filter(|e| *e > 0.0 && (e - 1.0).abs() > 1e-12));
    let s = exps.len();
    let n_pts = f.len();
    if n_pts <= s {
        return Ok(());
    }
    let h = f.h;
    // row l: node i^{e_l}, rows scaled by h^{−e_l}
    let mat: Vec<Vec<f64>> = exps.iter().map(|&e| (1..=s).map(|i| (i as f64).powf(e)).collect()).collect();
    let (lu, piv) = lu_factor(mat)?;
    let mut residuals = Vec::with_capacity(s);
    for &e in &exps {
        let samples: Vec<f64> = (0..n_pts).map(|n| (n as f64 * h).powf(e)).collect();
        let approx = scheme(&samples);
        let mut r = vec![0.0; n_pts];
        for n in 1..n_pts {
            r[n] = (spec.image_of_power(e, n as f64 * h, cfg)? - approx[n]) / h.powf(e);
        }
        residuals.push(r);
    }
    let f0 = f.values[0];
    for n in 1..n_pts {
        let rhs: Vec<f64> = residuals.iter().map(|r| r[n]).collect();
        let w = lu_solve(&lu, &piv, &rhs);
        out[n] += w.iter().enumerate().map(|(i, wi)| wi * (f.values[i + 1] - f0)).sum::<f64>();
    }
    Ok(())
}

fn correction_exponents(spec: &OperatorSpec, opts: &OperatorOptions) -> Vec<f64> {
    match &opts.correction {
        StartingCorrection::None => Vec::new(),
        StartingCorrection::Auto => auto_correction_exponents(spec.alpha, spec.gamma),
        StartingCorrection::Exponents(v) => v.clone(),
    }
}

fn check_kind(spec: &OperatorSpec, kind: OperatorKind) -> Result<()> {
    if spec.kind != kind {
        return domain(format!("operator spec is {:?}, expected {:?}", spec.kind, kind));
    }
    Ok(())
}

/// (J^α + λ)^γ f with the default options.
pub fn prabhakar_integral(f: &SampledFunction, spec: &OperatorSpec) -> Result<SampledFunction> {
    prabhakar_integral_with(f, spec, &OperatorOptions::default())
}

pub fn prabhakar_integral_with(f: &SampledFunction, spec: &OperatorSpec, opts: &OperatorOptions) -> Result<SampledFunction> {
    check_kind(spec, OperatorKind::Integral)?;
    if !(spec.alpha * spec.gamma > 0.0) {
        return domain("integral needs alpha*gamma > 0");
    }
    let kp = spec.kernel_params();
    let w = CellWeights::new(&kp, -spec.lambda, f.h, f.len() - 1, &opts.eval)?;
    let scheme = |v: &[f64]| w.convolve(v, opts.interpolation);
    let mut out = scheme(&f.values);
    let exps = correction_exponents(spec, opts);
    if !exps.is_empty() {
        apply_correction(&mut out, f, spec, &exps, &scheme, &opts.eval)?;
    }
    Ok(f.with_values(out))
}

/// (D^α + λ)^γ f, Riemann–Liouville type, with the default options.
///
/// The derivative is singular at t = 0 for f(0) ≠ 0; index 0 of the result
/// repeats index 1.
pub fn prabhakar_deriv_rl(f: &SampledFunction, spec: &OperatorSpec) -> Result<SampledFunction> {
    prabhakar_deriv_rl_with(f, spec, &OperatorOptions::default())
}

pub fn prabhakar_deriv_rl_with(f: &SampledFunction, spec: &OperatorSpec, opts: &OperatorOptions) -> Result<SampledFunction> {
    check_kind(spec, OperatorKind::RlDerivative)?;
    derivative(f, spec, opts, true)
}

/// Caputo-type Prabhakar derivative with the default options; index 0 of the
/// result repeats index 1.
pub fn prabhakar_deriv_caputo(f: &SampledFunction, spec: &OperatorSpec) -> Result<SampledFunction> {
    prabhakar_deriv_caputo_with(f, spec, &OperatorOptions::default())
}

pub fn prabhakar_deriv_caputo_with(
    f: &SampledFunction,
    spec: &OperatorSpec,
    opts: &OperatorOptions,
) -> Result<SampledFunction> {
    check_kind(spec, OperatorKind::CaputoDerivative)?;
    derivative(f, spec, opts, false)
}

/// Dispatches on `spec.kind`.
pub fn apply(f: &SampledFunction, spec: &OperatorSpec, opts: &OperatorOptions) -> Result<SampledFunction> {
    match spec.kind {
        OperatorKind::Integral => prabhakar_integral_with(f, spec, opts),
        OperatorKind::RlDerivative => prabhakar_deriv_rl_with(f, spec, opts),
        OperatorKind::CaputoDerivative => prabhakar_deriv_caputo_with(f, spec, opts),
    }
}

fn derivative(f: &SampledFunction, spec: &OperatorSpec, opts: &OperatorOptions, rl: bool) -> Result<SampledFunction> {
    let kp = spec.kernel_params();
    let mu = -spec.lambda;
    let h = f.h;
    let n_pts = f.len();
    let w = CellWeights::new(&kp, mu, h, n_pts - 1, &opts.eval)?;
    let f0 = f.values[0];

    let mut out = match opts.derivative {
        DerivativeScheme::ExactInterpolant => {
            let mut c = w.convolve_slopes(&f.values, h);
            if rl && f0 != 0.0 {
                for (n, v) in c.iter_mut().enumerate().skip(1) {
                    *v += f0 * kernel_with(&kp, n as f64 * h, mu, &opts.eval)?;
                }
            }
            c
        }
        DerivativeScheme::FiniteDifference => {
            if rl {
                differentiate4(&w.convolve(&f.values, Interpolation::Linear), h)?
            } else {
                w.convolve(&differentiate4(&f.values, h)?, Interpolation::Linear)
            }
        }
    };

    let exps = correction_exponents(spec, opts);
    if !exps.is_empty() && opts.derivative == DerivativeScheme::ExactInterpolant {
        let scheme = |v: &[f64]| w.convolve_slopes(v, h);
        apply_correction(&mut out, f, spec, &exps, &scheme, &opts.eval)?;
    }
    if n_pts > 1 {
        out[0] = out[1];
    }
    Ok(f.with_values(out))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RlKind {
    Integral,
    Derivative,
}

/// Riemann–Liouville integral or derivative of order ρ of the kernel
/// t^{β−1}E^γ_{α,β}(λt^α), which is again a kernel with β shifted by ±ρ.
pub fn rl_calculus_on_kernel(params: &PrabhakarParams, lambda: f64, rho: f64, t: f64, kind: RlKind) -> Result<f64> {
    if !(t > 0.0) {
        return domain("RL calculus on the kernel needs t > 0");
    }
    if !(rho > 0.0) {
        return domain("RL order rho must be positive");
    }
    let shift = match kind {
        RlKind::Integral => rho,
        RlKind::Derivative => -rho,
    };
    kernel_with(&params.shifted(shift, 0.0), t, lambda, &EvalConfig::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(a: f64, g: f64, l: f64, kind: OperatorKind) -> OperatorSpec {
        OperatorSpec::new(a, g, l, kind).unwrap()
    }

    #[test]
    fn cell_moments() {
        let p = PrabhakarParams::new(1.0, 1.0, 1.0).unwrap();
        let m = kernel_cell_moment(&p, -1.0, 0.0, 1.0).unwrap();
        assert!((m - (1.0 - (-1f64).exp())).abs() < 1e-15);
        let q = PrabhakarParams::new(0.7, 0.5, 0.9).unwrap();
        let m = kernel_cell_moment(&q, 0.0, 0.0, 1.0).unwrap();
        assert!((m - 2.0 / gamma(0.5)).abs() < 1e-15);
        assert_eq!(kernel_cell_moment(&q, -1.0, 0.3, 0.3).unwrap(), 0.0);
        // ∫₀¹ u e^{−u} du = 1 − 2/e
        let f = kernel_cell_first_moment(&p, -1.0, 0.0, 1.0).unwrap();
        assert!((f - (1.0 - 2.0 / std::f64::consts::E)).abs() < 1e-15);
    }

    #[test]
    fn plain_integration_of_one() {
        let s = spec(1.0, 1.0, 0.0, OperatorKind::Integral);
        let f = SampledFunction::from_fn(0.01, 101, |_| 1.0).unwrap();
        let out = prabhakar_integral(&f, &s).unwrap();
        for (n, v) in out.values.iter().enumerate() {
            assert!((v - n as f64 * 0.01).abs() < 1e-13);
        }
    }

    #[test]
    fn caputo_of_constant_vanishes() {
        let s = spec(0.7, 0.9, 1.5, OperatorKind::CaputoDerivative);
        let f = SampledFunction::from_fn(0.01, 200, |_| 3.0).unwrap();
        let out = prabhakar_deriv_caputo(&f, &s).unwrap();
        assert!(out.values.iter().all(|v| v.abs() < 1e-12));
    }

    #[test]
    fn rl_of_one_matches_closed_form() {
        let s = spec(0.7, 0.9, 1.5, OperatorKind::RlDerivative);
        let h = 1e-3;
        let f = SampledFunction::from_fn(h, 1001, |_| 1.0).unwrap();
        let out = prabhakar_deriv_rl(&f, &s).unwrap();
        let kp = s.kernel_params();
        for n in [1usize, 10, 500, 1000] {
            let want = kernel(&kp, n as f64 * h, -1.5);
            assert!((out.values[n] - want).abs() < 1e-10 * want.abs().max(1.0), "n={n}");
        }
    }

    fn kernel(p: &PrabhakarParams, t: f64, l: f64) -> f64 {
        kernel_with(p, t, l, &EvalConfig::default()).unwrap()
    }

    #[test]
    fn rl_integral_of_monomial() {
        let a = 0.6;
        let s = spec(a, 1.0, 0.0, OperatorKind::Integral);
        let f = SampledFunction::from_fn(1e-3, 1001, |t| t).unwrap();
        let out = prabhakar_integral(&f, &s).unwrap();
        let want = 1f64 / gamma(2.0 + a);
        assert!((out.values[1000] - want).abs() < 1e-10);
    }

    #[test]
    fn finite_difference_route() {
        let s = spec(0.7, 1.0, 0.0, OperatorKind::RlDerivative);
        let opts = OperatorOptions {
            derivative: DerivativeScheme::FiniteDifference,
            correction: StartingCorrection::None,
            ..OperatorOptions::default()
        };
        let h = 1e-3;
        let f = SampledFunction::from_fn(h, 1001, |t| t).unwrap();
        let out = prabhakar_deriv_rl_with(&f, &s, &opts).unwrap();
        let want = 1f64 / gamma(2.0 - 0.7);
        assert!((out.values[1000] - want).abs() < 1e-4);
    }

    #[test]
    fn auto_exponents() {
        let e = auto_correction_exponents(0.7, 0.9);
        let want = [0.63, 0.7, 1.26, 1.33, 1.4];
        assert_eq!(e.len(), want.len());
        for (a, b) in e.iter().zip(want) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!(auto_correction_exponents(1.0, 1.0).is_empty());
    }

    #[test]
    fn kernel_shift_roundtrip() {
        let p = PrabhakarParams::new(0.7, 1.0, 0.9).unwrap();
        let up = rl_calculus_on_kernel(&p, -1.5, 0.4, 2.0, RlKind::Integral).unwrap();
        let q = p.shifted(0.4, 0.0);
        let back = rl_calculus_on_kernel(&q, -1.5, 0.4, 2.0, RlKind::Derivative).unwrap();
        assert!((back - kernel(&p, 2.0, -1.5)).abs() < 1e-12 * up.abs().max(1.0));
        let one = PrabhakarParams::new(1.0, 1.0, 1.0).unwrap();
        let v = rl_calculus_on_kernel(&one, 0.0, 0.5, 1.0, RlKind::Integral).unwrap();
        assert!((v - 1.0 / gamma(1.5)).abs() < 1e-15);
    }

    #[test]
    fn spec_validation() {
        assert!(OperatorSpec::new(0.7, 2.0, 1.0, OperatorKind::CaputoDerivative).is_err());
        assert!(OperatorSpec::new(2.5, 0.2, 1.0, OperatorKind::Integral).is_err());
        assert_eq!(spec(0.7, 0.9, 1.0, OperatorKind::RlDerivative).m, 1);
    }
}
