use num_complex::Complex64;

use super::{eval_auto_with, EvalConfig, PrabhakarParams};
use crate::error::{domain, Result};
use crate::special::pochhammer;

fn eval(p: &PrabhakarParams, z: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    Ok(eval_auto_with(p, z, cfg)?.value)
}

/// Which formula raises the third parameter by one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reduction {
    /// E^{γ+1}_{α,β} = (E^γ_{α,β−1} + (1−β+αγ) E^γ_{α,β}) / (αγ)
    ThirdParameter,
    /// E^{γ+1}_{α,β} = (E^γ_{α,β−α−1} + (1−β+α) E^γ_{α,β−α}) / (αγz)
    Corollary,
}

/// E^{γ+1}_{α,β}(z) from order-γ evaluations.
pub fn reduce_gamma(params: &PrabhakarParams, z: Complex64, formula: Reduction, cfg: &EvalConfig) -> Result<Complex64> {
    let PrabhakarParams { alpha, beta, gamma } = *params;
    if gamma == 0.0 {
        return domain("reduction formulas need gamma != 0");
    }
    match formula {
        Reduction::ThirdParameter => {
            let a = eval(&params.shifted(-1.0, 0.0), z, cfg)?;
            let b = eval(params, z, cfg)?;
            Ok((a + b * (1.0 - beta + alpha * gamma)) / (alpha * gamma))
        }
        Reduction::Corollary => {
            if z.norm() == 0.0 {
                return domain("corollary reduction needs z != 0");
            }
            let a = eval(&params.shifted(-alpha - 1.0, 0.0), z, cfg)?;
            let b = eval(&params.shifted(-alpha, 0.0), z, cfg)?;
            Ok((a + b * (1.0 - beta + alpha)) / (z * (alpha * gamma)))
        }
    }
}

/// m-th z-derivative: (γ)_m E^{γ+m}_{α,mα+β}(z).
pub fn deriv_z(params: &PrabhakarParams, z: Complex64, m: usize, cfg: &EvalConfig) -> Result<Complex64> {
    if m == 0 {
        return domain("derivative order must be at least 1");
    }
    let mf = m as f64;
    let shifted = params.shifted(mf * params.alpha, mf);
    Ok(eval(&shifted, z, cfg)? * pochhammer(params.gamma, m))
}

/// First z-derivative by (E^γ_{α,β−1}(z) + (1−β)E^γ_{α,β}(z))/(αz).
pub fn deriv_z_dzhrbashyan(params: &PrabhakarParams, z: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    if z.norm() == 0.0 {
        return domain("this derivative formula needs z != 0");
    }
    let a = eval(&params.shifted(-1.0, 0.0), z, cfg)?;
    let b = eval(params, z, cfg)?;
    Ok((a + b * (1.0 - params.beta)) / (z * params.alpha))
}

/// 0 < α ≤ 1 and 0 < αγ ≤ β ≤ 1, where t ↦ E^γ_{α,β}(−t) is completely monotone.
pub fn is_cm_region(params: &PrabhakarParams) -> bool {
    params.is_cm_region()
}

/// e^γ_{α,β}(t;λ) = t^{β−1} E^γ_{α,β}(t^α λ) with the default configuration.
pub fn kernel(params: &PrabhakarParams, t: f64, lambda: f64) -> Result<f64> {
    kernel_with(params, t, lambda, &EvalConfig::default())
}

pub fn kernel_with(params: &PrabhakarParams, t: f64, lambda: f64, cfg: &EvalConfig) -> Result<f64> {
    if !(t > 0.0) {
        return domain("kernel needs t > 0");
    }
    let z = Complex64::new(t.powf(params.alpha) * lambda, 0.0);
    Ok(t.powf(params.beta - 1.0) * eval(params, z, cfg)?.re)
}

/// s^{αγ−β}/(s^α − z)^γ on principal branches.
pub fn laplace_transform_rhs(params: &PrabhakarParams, s: Complex64, z: Complex64) -> Result<Complex64> {
    let PrabhakarParams { alpha, beta, gamma } = *params;
    if !(s.re > 0.0) {
        return domain("Laplace variable needs Re(s) > 0");
    }
    let sa = s.powf(alpha);
    if !(sa.norm() > z.norm()) {
        return domain("Laplace identity needs |s|^alpha > |z|");
    }
    Ok(s.powf(alpha * gamma - beta) / (sa - z).powf(gamma))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: f64, b: f64, g: f64) -> PrabhakarParams {
        PrabhakarParams::new(a, b, g).unwrap()
    }

    #[test]
    fn second_order_exponential() {
        let cfg = EvalConfig::default();
        let z = Complex64::new(0.5, 0.0);
        let want = 1.5 * 0.5f64.exp();
        for f in [Reduction::ThirdParameter, Reduction::Corollary] {
            let v = reduce_gamma(&p(1.0, 1.0, 1.0), z, f, &cfg).unwrap();
            assert!((v.re - want).abs() < 1e-14, "{f:?}");
        }
        assert!(reduce_gamma(&p(1.0, 1.0, 1.0), Complex64::new(0.0, 0.0), Reduction::Corollary, &cfg).is_err());
    }

    #[test]
    fn derivative_of_exponential() {
        let cfg = EvalConfig::default();
        let q = p(1.0, 1.0, 1.0);
        let d0 = deriv_z(&q, Complex64::new(0.0, 0.0), 1, &cfg).unwrap();
        assert!((d0.re - 1.0).abs() < 1e-15);
        let d1 = deriv_z_dzhrbashyan(&q, Complex64::new(1.0, 0.0), &cfg).unwrap();
        assert!((d1.re - std::f64::consts::E).abs() < 1e-14);
    }

    #[test]
    fn kernel_special_cases() {
        assert!((kernel(&p(0.7, 1.0, 0.9), 3.0, 0.0).unwrap() - 1.0).abs() < 1e-15);
        let e = kernel(&p(1.0, 1.0, 1.0), 2.0, -1.0).unwrap();
        assert!((e - (-2f64).exp()).abs() < 1e-15);
        assert!(kernel(&p(1.0, 1.0, 1.0), 0.0, -1.0).is_err());
    }

    #[test]
    fn laplace_rhs() {
        let s = Complex64::new(2.0, 0.0);
        let v = laplace_transform_rhs(&p(1.0, 1.0, 1.0), s, Complex64::new(-1.0, 0.0)).unwrap();
        assert!((v.re - 1.0 / 3.0).abs() < 1e-15);
        let q = p(0.6, 0.54, 0.9);
        let v0 = laplace_transform_rhs(&q, s, Complex64::new(0.0, 0.0)).unwrap();
        assert!((v0.re - 2f64.powf(-0.54)).abs() < 1e-15);
        assert!(laplace_transform_rhs(&q, s, Complex64::new(-5.0, 0.0)).is_err());
    }
}
