//! Truncated power series in s⁻¹ and the combinatorial generators used by
//! the asymptotic-coefficient algorithm.
//!
//! Everything here is generic over [`Scalar`], so the same recursions run in
//! plain `f64` or in double-double ([`Dd`]) arithmetic.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::dd::Dd;
use crate::error::{Error, Result};

/// Truncation order above which `f64` recursions switch to compensated sums.
pub const COMPENSATED_ABOVE: usize = 16;

/// Field operations needed by the coefficient recursions.
pub trait Scalar:
    Copy
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_f64(x: f64) -> Self;
    fn to_f64(self) -> f64;
    fn powi(self, n: i32) -> Self;

    /// Sums `terms`; `f64` uses Neumaier compensation when `compensated` is set.
    fn sum_terms<I: Iterator<Item = Self>>(terms: I, compensated: bool) -> Self;

    fn zero() -> Self {
        Self::from_f64(0.0)
    }

    fn one() -> Self {
        Self::from_f64(1.0)
    }
}

impl Scalar for f64 {
    fn from_f64(x: f64) -> Self {
        x
    }

    fn to_f64(self) -> f64 {
        self
    }

    fn powi(self, n: i32) -> Self {
        f64::powi(self, n)
    }

    fn sum_terms<I: Iterator<Item = Self>>(terms: I, compensated: bool) -> Self {
        let mut acc = Accumulator::new(compensated);
        terms.for_each(|t| acc.add(t));
        acc.value()
    }
}

impl Scalar for Dd {
    fn from_f64(x: f64) -> Self {
        Dd::new(x)
    }

    fn to_f64(self) -> f64 {
        Dd::to_f64(self)
    }

    fn powi(self, n: i32) -> Self {
        Dd::powi(self, n)
    }

    fn sum_terms<I: Iterator<Item = Self>>(terms: I, _compensated: bool) -> Self {
        terms.fold(Dd::ZERO, |a, b| a + b)
    }
}

/// A truncated series Σ_k coeffs[k] s^{−offset−k}.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSeries<T = f64> {
    pub offset: usize,
    pub coeffs: Vec<T>,
}

impl<T: Scalar> CoefficientSeries<T> {
    pub fn new(offset: usize, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("series needs at least one coefficient".into()));
        }
        if coeffs.iter().any(|c| !c.to_f64().is_finite()) {
            return Err(Error::Domain("series coefficients must be finite".into()));
        }
        Ok(Self { offset, coeffs })
    }

    /// The series 1 + 0·s⁻¹ + … with `len` stored coefficients.
    pub fn identity(len: usize) -> Self {
        let mut coeffs = vec![T::zero(); len.max(1)];
        coeffs[0] = T::one();
        Self { offset: 0, coeffs }
    }

    /// Coefficient of s^{−offset−k}; zero beyond the stored length.
    pub fn get(&self, k: usize) -> T {
        self.coeffs.get(k).copied().unwrap_or_else(T::zero)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for offset 0 with leading coefficient exactly 1.
    pub fn is_normalized(&self) -> bool {
        self.offset == 0 && self.coeffs[0] == T::one()
    }

    /// Rounds every coefficient to `f64`.
    pub fn to_f64(&self) -> CoefficientSeries<f64> {
        CoefficientSeries { offset: self.offset, coeffs: self.coeffs.iter().map(|c| c.to_f64()).collect() }
    }

    /// Evaluates the truncated sum at a real `s` by Horner's rule in 1/s.
    pub fn eval(&self, s: f64) -> f64 {
        let x = 1.0 / s;
        let p = self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c.to_f64());
        p * x.powi(self.offset as i32)
    }
}

/// Neumaier's compensated sum; plain summation when `compensated` is false.
#[derive(Debug, Clone, Copy, Default)]
pub struct Accumulator {
    sum: f64,
    comp: f64,
    compensated: bool,
}

impl Accumulator {
    pub fn new(compensated: bool) -> Self {
        Self { sum: 0.0, comp: 0.0, compensated }
    }

    pub fn add(&mut self, x: f64) {
        if !self.compensated {
            self.sum += x;
            return;
        }
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

pub(crate) fn use_compensated(k: usize) -> bool {
    k > COMPENSATED_ABOVE
}

/// Product of two series truncated to `k_max + 1` coefficients; offsets add.
pub fn cauchy_product<T: Scalar>(
    a: &CoefficientSeries<T>,
    b: &CoefficientSeries<T>,
    k_max: usize,
) -> CoefficientSeries<T> {
    let comp = use_compensated(k_max);
    let coeffs = (0..=k_max)
        .map(|k| T::sum_terms((0..=k).map(|j| a.get(j) * b.get(k - j)), comp))
        .collect();
    CoefficientSeries { offset: a.offset + b.offset, coeffs }
}

/// Product of four normalized series, coefficient by coefficient:
///
/// P_k = Σ_{j1≤k} Σ_{j2≤j1} a_{j2} b_{j1−j2} Σ_{j3≤k−j1} c_{j3} d_{k−j1−j3}.
pub fn four_series_product<T: Scalar>(
    a: &CoefficientSeries<T>,
    b: &CoefficientSeries<T>,
    c: &CoefficientSeries<T>,
    d: &CoefficientSeries<T>,
    k_max: usize,
) -> Result<CoefficientSeries<T>> {
    if ![a, b, c, d].iter().all(|s| s.is_normalized()) {
        return Err(Error::Domain(
            "four_series_product expects offset 0 and leading coefficient 1".into(),
        ));
    }
    let comp = use_compensated(k_max);
    let coeffs = (0..=k_max)
        .map(|k| {
            T::sum_terms(
                (0..=k).map(|j1| {
                    let ab = T::sum_terms((0..=j1).map(|j2| a.get(j2) * b.get(j1 - j2)), comp);
                    let cd = T::sum_terms((0..=(k - j1)).map(|j3| c.get(j3) * d.get(k - j1 - j3)), comp);
                    ab * cd
                }),
                comp,
            )
        })
        .collect();
    Ok(CoefficientSeries { offset: 0, coeffs })
}

/// Coefficients f_k^{(n)}, k = 0..=k_max, of the n-th power of `d` divided by
/// its leading term: d^n = (d₀ s^{−offset})^n Σ_k f_k^{(n)} s^{−k}.
///
/// Uses f_k^{(n)} = Σ_{ℓ=1}^{k} ((n+1)ℓ/k − 1)(d_ℓ/d_0) f_{k−ℓ}^{(n)}; n = 0
/// returns the identity series.
pub fn miller_power<T: Scalar>(d: &CoefficientSeries<T>, n: usize, k_max: usize) -> Result<CoefficientSeries<T>> {
    let lead = d.get(0);
    if lead == T::zero() {
        return Err(Error::ZeroLeadingCoefficient);
    }
    let offset = n * d.offset;
    if n == 0 {
        return Ok(CoefficientSeries { offset, coeffs: CoefficientSeries::identity(k_max + 1).coeffs });
    }
    let u: Vec<T> = (0..=k_max).map(|l| d.get(l) / lead).collect();
    let comp = use_compensated(k_max);
    let mut f = vec![T::zero(); k_max + 1];
    f[0] = T::one();
    let np1 = T::from_f64((n + 1) as f64);
    for k in 1..=k_max {
        let kf = T::from_f64(k as f64);
        f[k] = T::sum_terms(
            (1..=k).map(|l| (np1 * T::from_f64(l as f64) / kf - T::one()) * u[l] * f[k - l]),
            comp,
        );
    }
    Ok(CoefficientSeries { offset, coeffs: f })
}

/// Classical binomial coefficient for 0 ≤ k ≤ n: exact integer products while
/// they fit in 128 bits, floating-point products of rationals beyond.
fn classical_binomial(n: u64, k: u64) -> f64 {
    let k = k.min(n - k);
    let mut exact: u128 = 1;
    for i in 1..=k {
        let num = (n - k + i) as u128;
        match exact.checked_mul(num) {
            Some(p) => exact = p / i as u128,
            None => {
                let mut approx = exact as f64;
                for j in i..=k {
                    approx *= (n - k + j) as f64 / j as f64;
                }
                return approx;
            }
        }
    }
    exact as f64
}

/// Generalized binomial coefficient valid for integers of either sign:
///
/// - n!/(k!(n−k)!) for 0 ≤ k ≤ n,
/// - (−1)^k C(−n+k−1, k) for n < 0 ≤ k,
/// - (−1)^{n−k} C(−k−1, n−k) for k ≤ n < 0,
/// - 0 otherwise.
pub fn gen_binomial(n: i64, k: i64) -> f64 {
    let parity = |e: i64| if e.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    if 0 <= k && k <= n {
        classical_binomial(n as u64, k as u64)
    } else if n < 0 && 0 <= k {
        parity(k) * classical_binomial((-n + k - 1) as u64, k as u64)
    } else if k <= n && n < 0 {
        parity(n - k) * classical_binomial((-k - 1) as u64, (n - k) as u64)
    } else {
        0.0
    }
}

/// Coefficients γ_1..γ_K of Γ*(z) ~ 1 + Σ γ_k z^{−k}, where
/// Γ*(z) = Γ(z)/(√(2π) z^{z−½} e^{−z}).
///
/// γ_k = (2k+1)!! b_{2k+1} with b_0 = b_1 = 1 and
/// b_k = (b_{k−1} − Σ_{j=2}^{k−1} j b_j b_{k−j+1})/(k+1).
pub fn stirling_gamma_coeffs(k_max: usize) -> Vec<f64> {
    stirling_gamma_coeffs_in::<f64>(k_max)
}

/// [`stirling_gamma_coeffs`] in any scalar type.
pub fn stirling_gamma_coeffs_in<T: Scalar>(k_max: usize) -> Vec<T> {
    let nb = 2 * k_max + 2;
    let mut b = vec![T::zero(); nb];
    b[0] = T::one();
    if nb > 1 {
        b[1] = T::one();
    }
    let comp = use_compensated(k_max);
    for k in 2..nb {
        let tail = (2..k).map(|j| -(T::from_f64(j as f64) * b[j] * b[k - j + 1]));
        b[k] = T::sum_terms(std::iter::once(b[k - 1]).chain(tail), comp) / T::from_f64((k + 1) as f64);
    }
    let mut out = Vec::with_capacity(k_max);
    let mut dfact = T::one();
    for k in 1..=k_max {
        dfact = dfact * T::from_f64((2 * k + 1) as f64);
        out.push(dfact * b[2 * k + 1]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[f64]) -> CoefficientSeries {
        CoefficientSeries::new(0, c.to_vec()).unwrap()
    }

    #[test]
    fn product_of_polynomials() {
        let p = cauchy_product(&s(&[1.0, 2.0]), &s(&[1.0, 3.0]), 2);
        assert_eq!(p.coeffs, vec![1.0, 5.0, 6.0]);
        let one = cauchy_product(&s(&[1.0]), &s(&[1.0]), 0);
        assert_eq!(one.coeffs, vec![1.0]);
    }

    #[test]
    fn offsets_add() {
        let a = CoefficientSeries::new(2, vec![1.0, 1.0]).unwrap();
        let b = CoefficientSeries::new(1, vec![2.0]).unwrap();
        assert_eq!(cauchy_product(&a, &b, 1).offset, 3);
    }

    #[test]
    fn four_factor_with_identities() {
        let id = CoefficientSeries::identity(1);
        let a = s(&[1.0, 1.0]);
        let p = four_series_product(&a, &id, &id, &id, 1).unwrap();
        assert_eq!(p.coeffs, vec![1.0, 1.0]);
        let q = four_series_product(&id, &id, &id, &id, 4).unwrap();
        assert_eq!(q.coeffs, vec![1.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(four_series_product(&s(&[2.0]), &id, &id, &id, 1).is_err());
    }

    #[test]
    fn miller_small_powers() {
        let d = CoefficientSeries::new(1, vec![2.0, 1.0, 4.0, -1.0, 0.5]).unwrap();
        let p0 = miller_power(&d, 0, 4).unwrap();
        assert_eq!(p0.coeffs, vec![1.0, 0.0, 0.0, 0.0, 0.0]);
        let p1 = miller_power(&d, 1, 4).unwrap();
        for k in 0..5 {
            assert!((p1.coeffs[k] - d.coeffs[k] / 2.0).abs() < 1e-15);
        }
        assert_eq!(p1.offset, 1);
        let zero = CoefficientSeries::new(1, vec![0.0, 1.0]).unwrap();
        assert_eq!(miller_power(&zero, 2, 3), Err(Error::ZeroLeadingCoefficient));
    }

    #[test]
    fn miller_cube_matches_brute_force() {
        let d = CoefficientSeries::new(0, vec![2.0, 1.0, 4.0, -1.0, 0.0]).unwrap();
        let sq = cauchy_product(&d, &d, 4);
        let cube = cauchy_product(&sq, &d, 4);
        let m = miller_power(&d, 3, 4).unwrap();
        for k in 0..5 {
            assert!((m.coeffs[k] * 8.0 - cube.coeffs[k]).abs() < 1e-12, "k={k}");
        }
    }

    #[test]
    fn binomial_cases() {
        assert_eq!(gen_binomial(5, 2), 10.0);
        assert_eq!(gen_binomial(-1, 3), -1.0);
        assert_eq!(gen_binomial(3, 5), 0.0);
        assert_eq!(gen_binomial(-2, 3), -4.0);
        assert_eq!(gen_binomial(-3, -5), 6.0);
        assert_eq!(gen_binomial(-5, -3), 0.0);
        assert_eq!(gen_binomial(60, 30), 118264581564861424.0);
        assert!((gen_binomial(200, 100) / 9.054851465610328e58 - 1.0).abs() < 1e-14);
    }

    #[test]
    fn stirling_first_coefficients() {
        let g = stirling_gamma_coeffs(4);
        assert!((g[0] - 1.0 / 12.0).abs() < 1e-17);
        assert!((g[1] - 1.0 / 288.0).abs() < 1e-17);
        assert!((g[2] + 139.0 / 51840.0).abs() < 1e-17);
        assert!((g[3] + 571.0 / 2488320.0).abs() < 1e-18);
    }

    #[test]
    fn compensated_sum_recovers_cancellation() {
        let mut plain = Accumulator::new(false);
        let mut comp = Accumulator::new(true);
        for x in [1e16, 1.0, -1e16, 1.0] {
            plain.add(x);
            comp.add(x);
        }
        assert_eq!(comp.value(), 2.0);
        assert_ne!(plain.value(), 2.0);
    }
}
