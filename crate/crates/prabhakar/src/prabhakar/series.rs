use num_complex::Complex64;

use super::{
    asymptotic::{eval_asymptotic_with, eval_negative_axis_with},
    EvalConfig, EvaluationResult, Method, PrabhakarParams,
};
use crate::error::{domain, Result};
use crate::series_engine::{gen_binomial, Accumulator};
use crate::special::{rgamma, rgamma_ln};

/// 1/Γ(x) as mantissa·2^exponent, finite for any argument.
fn rgamma_scaled(x: f64) -> (f64, i32) {
    if x.abs() < 170.0 {
        return (rgamma(x), 0);
    }
    let (l, sign) = rgamma_ln(x);
    if sign == 0.0 {
        return (0.0, 0);
    }
    let e = (l / std::f64::consts::LN_2).floor();
    (sign * (l - e * std::f64::consts::LN_2).exp(), e as i32)
}

fn renormalize(w: &mut Complex64, e: &mut i32) {
    let m = w.re.abs().max(w.im.abs());
    if m == 0.0 || (1e-60..1e60).contains(&m) {
        return;
    }
    let shift = m.log2().floor() as i32;
    *w = w.scale(libm::scalbn(1.0, -shift));
    *e += shift;
}

/// Taylor sum of E^γ_{α,β}(z).
///
/// Terms are formed as w_k/Γ(αk+β) with w_{k+1} = w_k · z (γ+k)/(k+1), kept
/// in scaled form so neither factor overflows. The sum stops once three
/// consecutive terms fall below `tol`·|partial sum|.
pub fn eval_series(params: &PrabhakarParams, z: Complex64, tol: f64, max_terms: usize) -> EvaluationResult {
    let PrabhakarParams { alpha, beta, gamma } = *params;
    let mut re = Accumulator::new(true);
    let mut im = Accumulator::new(true);
    let mut w = Complex64::new(1.0, 0.0);
    let mut w_exp = 0i32;
    let mut small = 0;
    let mut abs_sum = 0.0;
    let mut last = 0.0;
    let mut used = 0;
    let mut converged = false;
    for k in 0..max_terms.max(1) {
        let x = alpha * k as f64 + beta;
        let (g, g_exp) = rgamma_scaled(x);
        let term = w.scale(libm::scalbn(g, w_exp + g_exp));
        let mag = term.norm();
        re.add(term.re);
        im.add(term.im);
        abs_sum += mag;
        used = k + 1;
        if mag != 0.0 {
            last = mag;
        }
        let sum = Complex64::new(re.value(), im.value()).norm();
        if x > 0.0 {
            if mag <= tol * sum {
                small += 1;
            } else {
                small = 0;
            }
        }
        let kf = k as f64;
        w *= z * ((gamma + kf) / (kf + 1.0));
        renormalize(&mut w, &mut w_exp);
        if w == Complex64::new(0.0, 0.0) {
            converged = true;
            break;
        }
        if small >= 3 {
            converged = true;
            break;
        }
    }
    let mut r = EvaluationResult::new(Complex64::new(re.value(), im.value()), Method::Series);
    r.terms_used = used;
    r.last_term_magnitude = last;
    r.converged = converged;
    r.magnitude_sum = abs_sum;
    r
}

/// E^{−j}_{α,β}(z) = Σ_{k=0}^{j} (−1)^k C(j,k) z^k / Γ(αk+β).
pub fn eval_polynomial(params: &PrabhakarParams, z: Complex64) -> Result<Complex64> {
    let Some(j) = params.polynomial_degree() else {
        return domain(format!("gamma = {} is not a nonpositive integer", params.gamma));
    };
    let mut sum = Complex64::new(0.0, 0.0);
    let mut zk = Complex64::new(1.0, 0.0);
    for k in 0..=j {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += zk * (sign * gen_binomial(j as i64, k as i64) * rgamma(params.alpha * k as f64 + params.beta));
        zk *= z;
    }
    Ok(sum)
}

/// Evaluates with the default configuration and the given series tolerance.
pub fn eval_auto(params: &PrabhakarParams, z: Complex64, tol: f64) -> Result<EvaluationResult> {
    eval_auto_with(params, z, &EvalConfig { tol, ..EvalConfig::default() })
}

/// Picks the polynomial form, the Taylor series or the large-|z| expansions.
pub fn eval_auto_with(params: &PrabhakarParams, z: Complex64, cfg: &EvalConfig) -> Result<EvaluationResult> {
    if !(cfg.tol > 0.0) {
        return domain("tol must be positive");
    }
    if let Some(j) = params.polynomial_degree() {
        let mut r = EvaluationResult::new(eval_polynomial(params, z)?, Method::Polynomial);
        r.terms_used = j + 1;
        return Ok(super::real_if_real_input(r, z));
    }
    if z.norm() <= cfg.threshold(params.alpha) {
        let r = eval_series(params, z, cfg.tol, cfg.max_terms);
        return Ok(super::real_if_real_input(r, z));
    }
    if z.im == 0.0 && z.re < 0.0 {
        return eval_negative_axis_with(params, -z.re, cfg);
    }
    eval_asymptotic_with(params, z, cfg)
}
