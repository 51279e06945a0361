//! Large-|z| expansions.
//!
//! H(w) = (w^{−γ}/Γ(γ)) Σ_k (−1)^k Γ(k+γ)/(k! Γ(β−α(k+γ))) w^{−k}
//! F(z) = (1/Γ(γ)) e^{z^{1/α}} z^{(γ−β)/α} α^{−γ} Σ_k c_k z^{−k/α}
//!
//! Rotated copies of F are selected by an integer offset added to the
//! principal argument; the argument is never re-wrapped.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::{real_if_real_input, EvalConfig, EvaluationResult, Method, PrabhakarParams, Regime, StokesRule};
use crate::asym_coeffs::{c_coeffs, AsymptoticTable};
use crate::error::{domain, Result};
use crate::special::{ln_gamma, rgamma};

const ANGLE_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, Default)]
struct Partial {
    value: Complex64,
    terms: usize,
    last: f64,
}

/// ln of the envelope of |1/Γ(x)|: 1/Γ(x) itself for x ≥ ½, Γ(1−x)/π below,
/// so that near-zeros of 1/Γ do not look like small terms.
fn ln_rgamma_envelope(x: f64) -> f64 {
    if x >= 0.5 {
        -ln_gamma(x).0
    } else {
        ln_gamma(1.0 - x).0 - PI.ln()
    }
}

/// Algebraic sum with `log_w` = ln|w| + i·arg w (arg possibly rotated).
fn h_sum(p: &PrabhakarParams, log_w: Complex64, k_max: usize, optimal: bool) -> Partial {
    let PrabhakarParams { alpha, beta, gamma } = *p;
    let inv_w = (-log_w).exp();
    let ln_abs_w = log_w.re;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut power = Complex64::new(1.0, 0.0);
    let mut poch = 1.0;
    let mut ln_poch = 0.0;
    let mut prev_env = f64::INFINITY;
    let mut out = Partial::default();
    for k in 0..=k_max {
        let kf = k as f64;
        let x = beta - alpha * (kf + gamma);
        let env = ln_poch - kf * ln_abs_w + ln_rgamma_envelope(x);
        if k > 0 {
            if optimal && env > prev_env {
                break;
            }
            if env < (1e-18 * sum.norm()).ln() {
                break;
            }
        }
        prev_env = env;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let term = power * (sign * poch * rgamma(x));
        sum += term;
        out.terms = k + 1;
        if term.norm() != 0.0 {
            out.last = term.norm();
        }
        poch *= (gamma + kf) / (kf + 1.0);
        if poch == 0.0 {
            break;
        }
        ln_poch += ((gamma + kf) / (kf + 1.0)).abs().ln();
        power *= inv_w;
    }
    let pre = (-gamma * log_w).exp();
    out.value = pre * sum;
    out.last *= pre.norm();
    out
}

/// Magnitudes of the terms of the exponential sum, before the prefactor.
fn truncation_index(mags: &[f64], optimal: bool) -> usize {
    let n = mags.len();
    let mut sum_scale = mags[0];
    for k in 1..n {
        if optimal && mags[k] > mags[k - 1] && (k + 1 >= n || mags[k + 1] > mags[k]) {
            return k;
        }
        if mags[k] < 1e-18 * sum_scale {
            return k;
        }
        sum_scale = sum_scale.max(mags[k]);
    }
    n
}

/// Exponential sum with `log_z` = ln|z| + i(Arg z + 2πr).
fn f_sum(t: &AsymptoticTable, log_z: Complex64, k_max: usize, optimal: bool) -> Partial {
    let PrabhakarParams { alpha, beta, gamma } = t.params;
    let k_max = k_max.min(t.order);
    let inv_root = (-log_z / alpha).exp();
    let decay = (-log_z.re / alpha).exp();
    let mags: Vec<f64> = (0..=k_max).map(|k| t.c[k].abs() * decay.powi(k as i32)).collect();
    let n = truncation_index(&mags, optimal);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut power = Complex64::new(1.0, 0.0);
    let mut last = 0.0;
    for (k, &mag) in mags.iter().enumerate().take(n) {
        sum += power * t.c[k];
        if mag != 0.0 {
            last = mag;
        }
        power *= inv_root;
    }
    let expo = (log_z / alpha).exp() + log_z * ((gamma - beta) / alpha);
    let pre = expo.exp() * (rgamma(gamma) * alpha.powf(-gamma));
    Partial { value: pre * sum, terms: n, last: last * pre.norm() }
}

/// C_r(t) = 2 Re F(t e^{iπ(2r+1)}) written in real cosine form.
fn c_pair(t_tab: &AsymptoticTable, t: f64, r: usize, k_max: usize, optimal: bool) -> Partial {
    let PrabhakarParams { alpha, beta, gamma } = t_tab.params;
    let k_max = k_max.min(t_tab.order);
    let lt = t.ln();
    let root = (lt / alpha).exp();
    let phi = (2 * r + 1) as f64 * PI / alpha;
    let decay = (-lt / alpha).exp();
    let mags: Vec<f64> = (0..=k_max).map(|k| t_tab.c[k].abs() * decay.powi(k as i32)).collect();
    let n = truncation_index(&mags, optimal);
    let shift = root * phi.sin();
    let mut sum = 0.0;
    let mut last = 0.0;
    for (k, &mag) in mags.iter().enumerate().take(n) {
        let e = gamma - beta - k as f64;
        sum += t_tab.c[k] * decay.powi(k as i32) * (phi * e + shift).cos();
        if mag != 0.0 {
            last = mag;
        }
    }
    let pre = 2.0 * rgamma(gamma) * alpha.powf(-gamma) * (root * phi.cos() + (gamma - beta) / alpha * lt).exp();
    Partial { value: Complex64::new(pre * sum, 0.0), terms: n, last: last * pre.abs() }
}

/// Truncated H(w) on the principal branch, with optimal truncation.
pub fn h_series(params: &PrabhakarParams, w: Complex64, k_max: usize) -> Complex64 {
    let log_w = Complex64::new(w.norm().ln(), w.arg());
    h_sum(params, log_w, k_max, true).value
}

/// Truncated F at z with its argument rotated by 2π·`arg_offset`.
pub fn f_series(params: &PrabhakarParams, z: Complex64, k_max: usize, arg_offset: i32) -> Result<Complex64> {
    if z.norm() == 0.0 {
        return domain("F is undefined at z = 0");
    }
    let table = c_coeffs(params, k_max)?;
    let log_z = Complex64::new(z.norm().ln(), z.arg() + 2.0 * PI * arg_offset as f64);
    Ok(f_sum(&table, log_z, k_max, true).value)
}

/// P with 2P+1 the smallest odd integer exceeding α/2.
pub fn theorem3_half_width(alpha: f64) -> usize {
    let mut p = 0usize;
    while (2 * p + 1) as f64 <= alpha / 2.0 {
        p += 1;
    }
    p
}

/// Number of cosine pairs C_r on the negative semi-axis: ⌊½(α/2+1)⌋.
pub fn negative_axis_pairs(alpha: f64) -> usize {
    (0.5 * (alpha / 2.0 + 1.0)).floor() as usize
}

/// Rotations r and weights of the exponential terms F(z e^{2πir}) that
/// accompany the algebraic part at argument `theta` ∈ (−π, π].
pub fn exponential_rotations(alpha: f64, theta: f64, rule: StokesRule) -> Vec<(i32, f64)> {
    let eps = ANGLE_EPS * PI;
    match rule {
        StokesRule::Theorems => {
            if alpha < 2.0 {
                let edge = alpha * PI / 2.0;
                if theta.abs() < edge - eps {
                    vec![(0, 1.0)]
                } else if (theta.abs() - edge).abs() <= eps {
                    vec![(0, 0.5)]
                } else {
                    vec![]
                }
            } else if alpha == 2.0 {
                if theta > 0.0 {
                    vec![(0, 1.0), (-1, 1.0)]
                } else if theta < 0.0 {
                    vec![(0, 1.0), (1, 1.0)]
                } else {
                    vec![(0, 1.0), (-1, 0.5), (1, 0.5)]
                }
            } else {
                let p = theorem3_half_width(alpha) as i32;
                (-p..=p).map(|r| (r, 1.0)).collect()
            }
        }
        StokesRule::Subdominant => {
            let reach = (alpha / 2.0).ceil() as i32 + 1;
            let limit = alpha * PI;
            (-reach..=reach)
                .filter_map(|r| {
                    let d = (theta + 2.0 * PI * r as f64).abs();
                    if d < limit - eps {
                        Some((r, 1.0))
                    } else if (d - limit).abs() <= eps {
                        Some((r, 0.5))
                    } else {
                        None
                    }
                })
                .collect()
        }
    }
}

/// Arguments (and weights) at which H(z e^{∓πi}) is evaluated; the sign
/// follows the half-plane of z and the positive real axis averages both.
fn algebraic_arguments(theta: f64) -> Vec<(f64, f64)> {
    if theta > 0.0 {
        vec![(theta - PI, 1.0)]
    } else if theta < 0.0 {
        vec![(theta + PI, 1.0)]
    } else {
        vec![(-PI, 0.5), (PI, 0.5)]
    }
}

/// Large-|z| evaluation with the default configuration and order `k_max`.
pub fn eval_asymptotic(params: &PrabhakarParams, z: Complex64, k_max: usize) -> Result<EvaluationResult> {
    eval_asymptotic_with(params, z, &EvalConfig { order: k_max, ..EvalConfig::default() })
}

/// Whole-plane expansion: exponential terms chosen by `cfg.stokes` plus the
/// algebraic part H.
pub fn eval_asymptotic_with(params: &PrabhakarParams, z: Complex64, cfg: &EvalConfig) -> Result<EvaluationResult> {
    if z.norm() == 0.0 {
        return domain("asymptotic expansion needs z != 0");
    }
    if params.is_polynomial() {
        let mut r = EvaluationResult::new(super::eval_polynomial(params, z)?, Method::Polynomial);
        r.terms_used = params.polynomial_degree().unwrap_or(0) + 1;
        return Ok(r);
    }
    let theta = z.arg();
    let ln_r = z.norm().ln();
    let rotations = exponential_rotations(params.alpha, theta, cfg.stokes);
    let with_h = cfg.stokes == StokesRule::Subdominant || params.regime() != Regime::Super2;

    let mut value = Complex64::new(0.0, 0.0);
    let mut terms = 0;
    let mut last: f64 = 0.0;
    if !rotations.is_empty() {
        let table = c_coeffs(params, cfg.order)?;
        for &(r, w) in &rotations {
            let log_z = Complex64::new(ln_r, theta + 2.0 * PI * r as f64);
            let part = f_sum(&table, log_z, cfg.order, cfg.optimal_truncation);
            value += part.value * w;
            terms += part.terms;
            last = last.max(part.last);
        }
    }
    if with_h {
        for (arg, w) in algebraic_arguments(theta) {
            let part = h_sum(params, Complex64::new(ln_r, arg), cfg.algebraic_terms, cfg.optimal_truncation);
            value += part.value * w;
            terms += part.terms;
            last = last.max(part.last);
        }
    }
    let method = match (rotations.is_empty(), with_h) {
        (true, _) => Method::AlgebraicH,
        (false, true) => Method::Mixed,
        (false, false) => Method::ExponentialF,
    };
    let mut res = EvaluationResult::new(value, method);
    res.terms_used = terms;
    res.last_term_magnitude = last;
    res.exponential_terms = rotations.len();
    res.below_threshold = z.norm() < cfg.threshold(params.alpha);
    Ok(real_if_real_input(res, z))
}

/// E^γ_{α,β}(−t) for large t > 0 with the default configuration.
pub fn eval_negative_axis(params: &PrabhakarParams, t: f64, k_max: usize) -> Result<EvaluationResult> {
    eval_negative_axis_with(params, t, &EvalConfig { order: k_max, ..EvalConfig::default() })
}

/// Negative semi-axis expansion: H(t) and the real cosine pairs C_r(t).
///
/// With the theorem rule: H for α < 2, C_0 + H for α = 2 and
/// Σ_{r<P} C_r with P = ⌊½(α/2+1)⌋ for α > 2. The subdominant rule keeps H
/// throughout and every pair with 2r+1 < α.
pub fn eval_negative_axis_with(params: &PrabhakarParams, t: f64, cfg: &EvalConfig) -> Result<EvaluationResult> {
    if !(t > 0.0) {
        return domain("negative-axis expansion needs t > 0");
    }
    if params.is_polynomial() {
        let v = super::eval_polynomial(params, Complex64::new(-t, 0.0))?;
        let mut r = EvaluationResult::new(Complex64::new(v.re, 0.0), Method::Polynomial);
        r.terms_used = params.polynomial_degree().unwrap_or(0) + 1;
        return Ok(r);
    }
    let alpha = params.alpha;
    let pairs: Vec<(usize, f64)> = match cfg.stokes {
        StokesRule::Theorems => match params.regime() {
            Regime::Sub2 => vec![],
            Regime::Eq2 => vec![(0, 1.0)],
            Regime::Super2 => (0..negative_axis_pairs(alpha)).map(|r| (r, 1.0)).collect(),
        },
        StokesRule::Subdominant => (0..)
            .map(|r: usize| (r, (2 * r + 1) as f64))
            .take_while(|&(_, m)| m <= alpha * (1.0 + ANGLE_EPS))
            .map(|(r, m)| (r, if (m - alpha).abs() <= ANGLE_EPS * alpha { 0.5 } else { 1.0 }))
            .collect(),
    };
    let with_h = cfg.stokes == StokesRule::Subdominant || params.regime() != Regime::Super2;

    let mut value = 0.0;
    let mut terms = 0;
    let mut last: f64 = 0.0;
    if !pairs.is_empty() {
        let table = c_coeffs(params, cfg.order)?;
        for &(r, w) in &pairs {
            let part = c_pair(&table, t, r, cfg.order, cfg.optimal_truncation);
            value += w * part.value.re;
            terms += part.terms;
            last = last.max(part.last);
        }
    }
    let mut discarded = 0.0;
    if with_h {
        let part = h_sum(params, Complex64::new(t.ln(), 0.0), cfg.algebraic_terms, cfg.optimal_truncation);
        value += part.value.re;
        discarded = part.value.im.abs();
        terms += part.terms;
        last = last.max(part.last);
    }
    let method = match (pairs.is_empty(), with_h) {
        (true, _) => Method::AlgebraicH,
        (false, true) => Method::Mixed,
        (false, false) => Method::ExponentialF,
    };
    let mut res = EvaluationResult::new(Complex64::new(value, 0.0), method);
    res.terms_used = terms;
    res.last_term_magnitude = last;
    res.exponential_terms = pairs.len();
    res.discarded_imag = discarded;
    res.below_threshold = t < cfg.threshold(alpha);
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: f64, b: f64, g: f64) -> PrabhakarParams {
        PrabhakarParams::new(a, b, g).unwrap()
    }

    #[test]
    fn pair_counts() {
        for (a, want) in [(2.5, 1), (4.0, 1), (6.0, 2), (9.0, 2), (10.01, 3)] {
            assert_eq!(negative_axis_pairs(a), want, "alpha={a}");
        }
        for (a, want) in [(3.0, 1), (5.0, 1), (7.0, 2)] {
            assert_eq!(theorem3_half_width(a), want, "alpha={a}");
        }
    }

    #[test]
    fn exponential_case_is_exact() {
        let q = p(1.0, 1.0, 1.0);
        let f = f_series(&q, Complex64::new(30.0, 0.0), 12, 0).unwrap();
        assert!((f.re / 30f64.exp() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn leading_algebraic_term_vanishes_when_beta_is_alpha_gamma() {
        let q = p(0.5, 0.45, 0.9);
        let one = h_sum(&q, Complex64::new(3f64.ln(), 0.0), 0, false);
        assert_eq!(one.value, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn classical_algebraic_expansion() {
        // γ = 1: H(w) = −Σ_{k≥1} w^{−k}/Γ(β−αk) up to sign conventions of w
        let q = p(0.5, 1.0, 1.0);
        let w = 40.0;
        let h = h_series(&q, Complex64::new(w, 0.0), 30);
        let mut want = 0.0;
        for k in 0..30 {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            want += sign * rgamma(1.0 - 0.5 * (k as f64 + 1.0)) * w.powi(-k - 1);
        }
        assert!((h.re - want).abs() < 1e-15);
    }

    #[test]
    fn dispatch_counts() {
        let z = Complex64::new(50.0, 0.0);
        let r = eval_asymptotic_with(&p(3.0, 1.0, 0.7), z, &EvalConfig::theorems()).unwrap();
        assert_eq!(r.exponential_terms, 3);
        assert_eq!(r.method, Method::ExponentialF);
        let n6 = eval_negative_axis_with(&p(6.0, 1.0, 0.7), 1e3, &EvalConfig::theorems()).unwrap();
        assert_eq!(n6.exponential_terms, 2);
        let n = eval_negative_axis(&p(0.8, 1.0, 0.7), 1e6, 12).unwrap();
        assert_eq!(n.method, Method::AlgebraicH);
    }

    #[test]
    fn cosine_pair_matches_rotated_f() {
        let q = p(2.6, 0.8, 0.7);
        let table = c_coeffs(&q, 12).unwrap();
        let t = 200.0;
        let c0 = c_pair(&table, t, 0, 12, true).value.re;
        let f = f_sum(&table, Complex64::new(t.ln(), PI), 12, true).value;
        assert!((c0 - 2.0 * f.re).abs() < 1e-12 * c0.abs());
    }

    #[test]
    fn unit_alpha_two_negative_axis_is_oscillatory() {
        // E_{2,1}(−t) = cos √t
        let q = p(2.0, 1.0, 1.0);
        for t in [400.0, 2500.0] {
            let v = eval_negative_axis_with(&q, t, &EvalConfig::theorems()).unwrap();
            assert!((v.value.re - t.sqrt().cos()).abs() < 1e-12);
        }
    }
}
