//! Coefficients c_k of the inverse-factorial expansion
//!
//! Γ(γ+s)Γ(αs+ψ)/(Γ(s+1)Γ(αs+β)) ~ α^{1−γ} Σ_k c_k/(αs+ψ)_k,   ψ = 1−γ+β,
//!
//! which drive the exponential part F(z) of the large-argument expansion.
//! The left side is split as α^{1−γ} R(s) Υ(s): R collects the elementary
//! factors e(a;b) = exp((a+b−½)log(1+b/a) − b), Υ the scaled gamma functions.
//! Matching R·Υ against Σ c_j Σ_k D_{j,k} s^{−k} gives a triangular system.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::prabhakar::PrabhakarParams;
use crate::series_engine::{
    cauchy_product, four_series_product, gen_binomial, miller_power, stirling_gamma_coeffs_in,
    use_compensated, Accumulator, CoefficientSeries, Scalar,
};

/// Default truncation order of the coefficient table.
pub const DEFAULT_ORDER: usize = 12;
/// Largest supported truncation order.
pub const MAX_ORDER: usize = 24;

/// Everything the coefficient recursion produces for one parameter triple.
///
/// The table is computed in double-double arithmetic and rounded: the
/// triangular solve for c_k amplifies rounding in R·Υ roughly like k!·α^k.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticTable {
    pub params: PrabhakarParams,
    pub psi: f64,
    pub order: usize,
    pub c: Vec<f64>,
    pub r: Vec<f64>,
    pub upsilon: Vec<f64>,
    /// `d[j][k]`, zero for k < j.
    pub d: Vec<Vec<f64>>,
}

impl AsymptoticTable {
    /// α^{1−γ}(1 + Σ_{j=1}^{k_max} c_j/(αs+ψ)_j).
    pub fn inverse_factorial_sum(&self, s: f64, k_max: usize) -> f64 {
        let a = self.params.alpha * s + self.psi;
        let mut poch = 1.0;
        let mut acc = Accumulator::new(true);
        acc.add(self.c[0]);
        for j in 1..=k_max.min(self.order) {
            poch *= a + (j - 1) as f64;
            acc.add(self.c[j] / poch);
        }
        self.params.alpha.powf(1.0 - self.params.gamma) * acc.value()
    }
}

fn t<T: Scalar>(x: f64) -> T {
    T::from_f64(x)
}

fn parity<T: Scalar>(m: usize) -> T {
    if m % 2 == 0 {
        T::one()
    } else {
        -T::one()
    }
}

/// Table of D_{j,k}, 0 ≤ j ≤ j_max, 0 ≤ k ≤ k_max, defined by
/// 1/(αs+ψ)_j = Σ_{k≥j} D_{j,k} s^{−k}.
///
/// D_{j,k} = F_{j,k−j}/α^k, with F_{j,0} = 1 and
/// F_{j,k} = (1/k) Σ_{ℓ<k} [C(−j−ℓ, k−ℓ+1) + (−1)^{k−ℓ} j (ψ+j)^{k−ℓ}] F_{j,ℓ}.
pub fn rising_factorial_reciprocal_coeffs(alpha: f64, psi: f64, j_max: usize, k_max: usize) -> Vec<Vec<f64>> {
    rising_factorial_reciprocal_in::<Dd>(Dd::new(alpha), Dd::new(psi), j_max, k_max)
        .into_iter()
        .map(|row| row.into_iter().map(|v| v.to_f64()).collect())
        .collect()
}

fn rising_factorial_reciprocal_in<T: Scalar>(alpha: T, psi: T, j_max: usize, k_max: usize) -> Vec<Vec<T>> {
    let comp = use_compensated(k_max);
    let mut table = vec![vec![T::zero(); k_max + 1]; j_max + 1];
    for (j, row) in table.iter_mut().enumerate() {
        if j > k_max {
            continue;
        }
        let jf: T = t(j as f64);
        let span = k_max - j;
        let mut f = vec![T::zero(); span + 1];
        f[0] = T::one();
        for k in 1..=span {
            let terms = f.iter().enumerate().take(k).map(|(l, &fl)| {
                let m = k - l;
                let w = t::<T>(gen_binomial(-(j as i64) - l as i64, (m + 1) as i64))
                    + parity::<T>(m) * jf * (psi + jf).powi(m as i32);
                w * fl
            });
            f[k] = T::sum_terms(terms, comp) / t(k as f64);
        }
        for k in j..=k_max {
            row[k] = f[k - j] / alpha.powi(k as i32);
        }
    }
    table
}

/// Width of the window around b = 1 where the d₁-normalized recursion is
/// replaced by plain powers. Each recursion step divides by d₁ ∝ 1 − b, so
/// rounding grows like |1 − b|^{−k}: at |1 − b| = 0.01 twelve coefficients
/// already lose half their digits.
const NEAR_UNIT_SHIFT: f64 = 0.25;

/// d_k, k = 1..=n, of log e(as;b) = Σ_k d_k s^{−k}.
fn log_e_coeffs<T: Scalar>(a: T, b: T, n: usize) -> Vec<T> {
    let x = b / a;
    (1..=n)
        .map(|k| {
            let kf: T = t(k as f64);
            parity::<T>(k) * x.powi(k as i32) * (t::<T>(0.5) / kf - b / (kf * (kf + T::one())))
        })
        .collect()
}

/// Coefficients of e(as;b)^{±1} = Σ_k e_k s^{−k}, k = 0..=k_max.
///
/// `sign` is +1 or −1. The generic case normalizes the powers of the exponent
/// by d₁; b = 1 (where d₁ = 0) normalizes by d₂; b = 0 gives the identity.
pub fn exp_e_coeffs<T: Scalar>(a: T, b: T, sign: i32, k_max: usize) -> Result<CoefficientSeries<T>> {
    if a == T::zero() {
        return Err(Error::Domain("exp_e_coeffs needs a nonzero scale a".into()));
    }
    let sg: T = if sign < 0 { -T::one() } else { T::one() };
    if b == T::zero() {
        return Ok(CoefficientSeries::identity(k_max + 1));
    }
    let d = log_e_coeffs(a, b, k_max + 2);
    let comp = use_compensated(k_max);
    let mut e = vec![T::zero(); k_max + 1];
    e[0] = T::one();

    if b == T::one() {
        let lead = d[1];
        let tail = CoefficientSeries::new(2, d[1..].to_vec())?;
        let mut fact = T::one();
        let mut pow = T::one();
        for j in 1..=k_max / 2 {
            fact = fact * t(j as f64);
            pow = pow * sg * lead;
            let f = miller_power(&tail, j, k_max - 2 * j)?;
            for k in 2 * j..=k_max {
                e[k] = e[k] + pow * f.coeffs[k - 2 * j] / fact;
            }
        }
        return Ok(CoefficientSeries { offset: 0, coeffs: e });
    }

    let series = CoefficientSeries::new(1, d.clone())?;
    let mut terms: Vec<Vec<T>> = vec![Vec::new(); k_max + 1];
    let mut fact = T::one();
    if (b - T::one()).to_f64().abs() < NEAR_UNIT_SHIFT {
        // e_k = Σ_j (±1)^j [s^{−k}] (Σ d_i s^{−i})^j / j!
        let mut power = CoefficientSeries::identity(k_max + 1);
        let mut scale = T::one();
        for j in 1..=k_max {
            fact = fact * t(j as f64);
            scale = scale * sg;
            power = cauchy_product(&power, &series, k_max);
            for (k, bucket) in terms.iter_mut().enumerate().skip(j) {
                bucket.push(scale * power.get(k - power.offset) / fact);
            }
        }
    } else {
        let lead = d[0];
        let mut pow = T::one();
        for j in 1..=k_max {
            fact = fact * t(j as f64);
            pow = pow * sg * lead;
            let f = miller_power(&series, j, k_max - j)?;
            for (k, bucket) in terms.iter_mut().enumerate().skip(j) {
                bucket.push(pow * f.coeffs[k - j] / fact);
            }
        }
    }
    for k in 1..=k_max {
        e[k] = T::sum_terms(terms[k].iter().copied(), comp);
    }
    Ok(CoefficientSeries { offset: 0, coeffs: e })
}

fn psi_in<T: Scalar>(params: &PrabhakarParams) -> T {
    T::one() - t(params.gamma) + t(params.beta)
}

fn r_coeffs_in<T: Scalar>(params: &PrabhakarParams, k_max: usize) -> Result<CoefficientSeries<T>> {
    let (alpha, beta, gamma) = (t::<T>(params.alpha), t::<T>(params.beta), t::<T>(params.gamma));
    let psi = psi_in::<T>(params);
    four_series_product(
        &exp_e_coeffs(T::one(), gamma, 1, k_max)?,
        &exp_e_coeffs(alpha, psi, 1, k_max)?,
        &exp_e_coeffs(T::one(), T::one(), -1, k_max)?,
        &exp_e_coeffs(alpha, beta, -1, k_max)?,
        k_max,
    )
}

/// R(s) = e(s;γ) e(αs;ψ) / (e(s;1) e(αs;β)) as a series in s⁻¹.
pub fn r_coeffs(params: &PrabhakarParams, k_max: usize) -> Result<CoefficientSeries> {
    Ok(r_coeffs_in::<Dd>(params, k_max)?.to_f64())
}

/// Coefficients of Γ*(as+b), or of 1/Γ*(as+b) when `reciprocal` is set:
///
/// d̂_j = a^{−j} Σ_{k=1}^{j} (−b)^{j−k} C(j−1, j−k) γ_k,
///
/// with γ_k replaced by (−1)^k γ_k for the reciprocal.
pub fn scaled_gamma_shift_coeffs<T: Scalar>(
    a: T,
    b: T,
    reciprocal: bool,
    k_max: usize,
) -> Result<CoefficientSeries<T>> {
    if a == T::zero() {
        return Err(Error::Domain("scaled_gamma_shift_coeffs needs a nonzero scale a".into()));
    }
    let mut g = stirling_gamma_coeffs_in::<T>(k_max.max(1));
    if reciprocal {
        for (k, v) in g.iter_mut().enumerate() {
            if k % 2 == 0 {
                *v = -*v;
            }
        }
    }
    let comp = use_compensated(k_max);
    let mut out = vec![T::zero(); k_max + 1];
    out[0] = T::one();
    for j in 1..=k_max {
        let terms = (1..=j).map(|k| {
            (-b).powi((j - k) as i32) * t::<T>(gen_binomial(j as i64 - 1, (j - k) as i64)) * g[k - 1]
        });
        out[j] = T::sum_terms(terms, comp) / a.powi(j as i32);
    }
    Ok(CoefficientSeries { offset: 0, coeffs: out })
}

fn upsilon_coeffs_in<T: Scalar>(params: &PrabhakarParams, k_max: usize) -> Result<CoefficientSeries<T>> {
    let (alpha, beta, gamma) = (t::<T>(params.alpha), t::<T>(params.beta), t::<T>(params.gamma));
    let psi = psi_in::<T>(params);
    four_series_product(
        &scaled_gamma_shift_coeffs(T::one(), gamma, false, k_max)?,
        &scaled_gamma_shift_coeffs(alpha, psi, false, k_max)?,
        &scaled_gamma_shift_coeffs(T::one(), T::one(), true, k_max)?,
        &scaled_gamma_shift_coeffs(alpha, beta, true, k_max)?,
        k_max,
    )
}

/// Υ(s) = Γ*(γ+s) Γ*(αs+ψ) / (Γ*(s+1) Γ*(αs+β)) as a series in s⁻¹.
pub fn upsilon_coeffs(params: &PrabhakarParams, k_max: usize) -> Result<CoefficientSeries> {
    Ok(upsilon_coeffs_in::<Dd>(params, k_max)?.to_f64())
}

/// Builds the full coefficient table without consulting the cache.
pub fn c_coeffs_uncached(params: &PrabhakarParams, k_max: usize) -> Result<AsymptoticTable> {
    if params.is_polynomial() {
        return Err(Error::PolynomialCase { gamma: params.gamma });
    }
    if k_max > MAX_ORDER {
        return Err(Error::Unsupported(format!("truncation order {k_max} exceeds {MAX_ORDER}")));
    }
    let psi = psi_in::<Dd>(params);
    let r = r_coeffs_in::<Dd>(params, k_max)?;
    let ups = upsilon_coeffs_in::<Dd>(params, k_max)?;
    let d = rising_factorial_reciprocal_in(Dd::new(params.alpha), psi, k_max, k_max);
    let prod = cauchy_product(&r, &ups, k_max);
    let mut c = vec![Dd::ZERO; k_max + 1];
    for k in 0..=k_max {
        let rhs = Dd::sum_terms(std::iter::once(prod.coeffs[k]).chain((0..k).map(|j| -(c[j] * d[j][k]))), true);
        c[k] = rhs / d[k][k];
    }
    let round = |v: &[Dd]| v.iter().map(|x| x.to_f64()).collect::<Vec<_>>();
    Ok(AsymptoticTable {
        params: *params,
        psi: psi.to_f64(),
        order: k_max,
        c: round(&c),
        r: round(&r.coeffs),
        upsilon: round(&ups.coeffs),
        d: d.iter().map(|row| round(row)).collect(),
    })
}

type TableKey = (u64, u64, u64, usize);

fn cache() -> &'static RwLock<HashMap<TableKey, Arc<AsymptoticTable>>> {
    static TABLES: OnceLock<RwLock<HashMap<TableKey, Arc<AsymptoticTable>>>> = OnceLock::new();
    TABLES.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficient table for `params` at order `k_max`, cached per parameter bits.
pub fn c_coeffs(params: &PrabhakarParams, k_max: usize) -> Result<Arc<AsymptoticTable>> {
    let key = (params.alpha.to_bits(), params.beta.to_bits(), params.gamma.to_bits(), k_max);
    if let Some(t) = cache().read().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(c_coeffs_uncached(params, k_max)?);
    let mut w = cache().write().unwrap_or_else(|e| e.into_inner());
    Ok(Arc::clone(w.entry(key).or_insert(table)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: f64, b: f64, g: f64) -> PrabhakarParams {
        PrabhakarParams::new(a, b, g).unwrap()
    }

    #[test]
    fn d_table_structure() {
        let (alpha, psi) = (1.3, 0.45);
        let d = rising_factorial_reciprocal_coeffs(alpha, psi, 4, 4);
        assert_eq!(d[0], vec![1.0, 0.0, 0.0, 0.0, 0.0]);
        for k in 0..=4 {
            assert!((d[k][k] - alpha.powi(-(k as i32))).abs() < 1e-15);
            for j in (k + 1)..=4 {
                assert_eq!(d[j][k], 0.0);
            }
        }
        // 1/(αs+ψ) = Σ (−ψ)^{k−1} α^{−k} s^{−k}
        for k in 1..=4 {
            let want = (-psi).powi(k as i32 - 1) / alpha.powi(k as i32);
            assert!((d[1][k] - want).abs() < 1e-15);
        }
        let a4 = alpha.powi(4);
        assert!((d[2][3] + (2.0 * psi + 1.0) / alpha.powi(3)).abs() < 1e-15);
        assert!((d[2][4] - (3.0 * psi * psi + 3.0 * psi + 1.0) / a4).abs() < 1e-15);
        assert!((d[3][4] + 3.0 * (psi + 1.0) / a4).abs() < 1e-15);
    }

    #[test]
    fn e_series_special_cases() {
        let id = exp_e_coeffs(1.7, 0.0, 1, 5).unwrap();
        assert_eq!(id.coeffs, vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let one = exp_e_coeffs(1.0, 1.0, 1, 6).unwrap();
        assert_eq!(one.coeffs[0], 1.0);
        assert_eq!(one.coeffs[1], 0.0);
        // e_2 = d_2 = 1/12 for a = b = 1
        assert!((one.coeffs[2] - 1.0 / 12.0).abs() < 1e-16);
    }

    #[test]
    fn series_times_reciprocal_is_identity() {
        for b in [1.0, 0.4, 2.3, 1.0 + 1e-9] {
            let e = exp_e_coeffs(0.8, b, 1, 10).unwrap();
            let inv = exp_e_coeffs(0.8, b, -1, 10).unwrap();
            let p = cauchy_product(&e, &inv, 10);
            assert_eq!(p.coeffs[0], 1.0);
            for k in 1..=10 {
                let scale = (b / 0.8f64).powi(k as i32).max(1.0);
                assert!(p.coeffs[k].abs() < 1e-14 * scale, "b={b} k={k}: {}", p.coeffs[k]);
            }
        }
    }

    #[test]
    fn closed_form_r1() {
        let q = p(0.7, 1.0, 0.9);
        let (a, b, g) = (0.7, 1.0, 0.9);
        let r = r_coeffs(&q, 3).unwrap();
        let r1 = 0.5 * (b * (1.0 - b) / a - (g - b) * (1.0 - g + b) / a - g * (1.0 - g));
        assert_eq!(r.coeffs[0], 1.0);
        assert!((r.coeffs[1] - r1).abs() < 1e-15);
        let unit = r_coeffs(&p(0.7, 1.0, 1.0), 8).unwrap();
        assert!(unit.coeffs[1..].iter().all(|v| v.abs() < 1e-15));
    }

    #[test]
    fn table2_entries() {
        let (a, b) = (1.7, 0.3);
        let h = scaled_gamma_shift_coeffs(a, b, false, 3).unwrap();
        let t = scaled_gamma_shift_coeffs(a, b, true, 3).unwrap();
        assert!((h.coeffs[1] - 1.0 / (12.0 * a)).abs() < 1e-16);
        assert!((t.coeffs[2] - (1.0 / 288.0 + b / 12.0) / (a * a)).abs() < 1e-16);
        let q = p(0.7, 1.0, 0.9);
        let u = upsilon_coeffs(&q, 3).unwrap();
        assert!(u.coeffs[1].abs() < 1e-16);
        assert!((u.coeffs[2] + 0.008673469387755102).abs() < 1e-15);
    }

    #[test]
    fn c1_value_and_unit_gamma() {
        let t = c_coeffs_uncached(&p(0.7, 1.0, 0.9), 12).unwrap();
        assert_eq!(t.c[0], 1.0);
        assert!((t.c[1] - 0.0235).abs() < 1e-15);
        let u = c_coeffs_uncached(&p(1.9, 0.4, 1.0), 10).unwrap();
        assert!(u.c[1..].iter().all(|v| v.abs() < 1e-13));
        assert!(matches!(
            c_coeffs_uncached(&p(1.0, 1.0, -2.0), 4),
            Err(Error::PolynomialCase { .. })
        ));
    }

    #[test]
    fn frozen_coefficients() {
        // independent symbolic expansion of the gamma ratio
        let want = [
            1.0,
            1.0685,
            -0.07410958928571429,
            -0.024338685179846938,
            -0.022491367524382723,
            -0.03639520328742299,
        ];
        let t = c_coeffs_uncached(&p(1.3, 3.0 / 7.0, 1.7), 5).unwrap();
        for k in 0..6 {
            assert!((t.c[k] - want[k]).abs() < 1e-13 * want[k].abs().max(1e-3), "k={k}");
        }
    }

    #[test]
    fn cache_returns_same_table() {
        let q = p(0.61, 0.9, 0.77);
        let a = c_coeffs(&q, 8).unwrap();
        let b = c_coeffs(&q, 8).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }
}
