//! Independent references for the integration tests: an MPFR Taylor sum of
//! the Prabhakar function, tanh-sinh quadrature and Talbot inversion of
//! Laplace transforms in extended precision.
#![allow(dead_code)]

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

/// α given as the fraction p/q so that Γ(αk + β) follows exact recurrences.
#[derive(Debug, Clone, Copy)]
pub struct Rational {
    pub p: u32,
    pub q: u32,
}

impl Rational {
    pub fn new(p: u32, q: u32) -> Self {
        Self { p, q }
    }

    pub fn value(&self) -> f64 {
        self.p as f64 / self.q as f64
    }
}

fn is_nonpositive_integer(x: &Float) -> bool {
    *x <= 0 && x.is_integer()
}

/// 1/Γ(αk + β) for k = 0..n, by Γ(x + p) = (x)_p Γ(x) along each residue class mod q.
fn reciprocal_gammas(alpha: Rational, beta: &Float, n: usize, prec: u32) -> Vec<Float> {
    let (p, q) = (alpha.p as usize, alpha.q as usize);
    let mut out = vec![Float::new(prec); n + 1];
    for r in 0..q.min(n + 1) {
        // x_m = β + α(qm + r) = β + αr + pm.
        let mut x = Float::with_val(prec, alpha.p * r as u32) / alpha.q;
        x += beta;
        // Explicit gamma values until the argument is positive, then the recurrence.
        let mut k = r;
        let mut rg: Option<Float> = None;
        while k <= n {
            out[k] = if is_nonpositive_integer(&x) {
                Float::with_val(prec, 0)
            } else if let Some(g) = &rg {
                g.clone()
            } else {
                let v = Float::with_val(prec, x.gamma_ref()).recip();
                if x > 0 {
                    rg = Some(v.clone());
                }
                v
            };
            if let Some(g) = rg.as_mut() {
                let mut poch = Float::with_val(prec, 1);
                for j in 0..p {
                    poch *= Float::with_val(prec, &x + j as u32);
                }
                *g /= poch;
            }
            x += p as u32;
            k += q;
        }
    }
    out
}

/// E^γ_{α,β}(z) for real z by its Taylor series in MPFR, with working
/// precision chosen from the size of the peak term.
pub fn prabhakar_mp(alpha: Rational, beta: f64, gamma: f64, z: f64) -> f64 {
    let a = alpha.value();
    let peak = z.abs().powf(1.0 / a).max(1.0) * (1.0 + gamma.abs().max(1.0).ln());
    let prec = (1.3 * peak / std::f64::consts::LN_2) as u32 + 256;
    prabhakar_mp_prec(alpha, beta, gamma, z, prec)
}

pub fn prabhakar_mp_prec(alpha: Rational, beta: f64, gamma: f64, z: f64, prec: u32) -> f64 {
    let a = alpha.value();
    let zb = Float::with_val(prec, z);
    let gb = Float::with_val(prec, gamma);
    let bb = Float::with_val(prec, beta);
    // Generous term count: past the peak near |z|^{1/α}/α the terms fall geometrically.
    let n = ((z.abs().powf(1.0 / a) / a) * 3.0 + 200.0) as usize;
    let rg = reciprocal_gammas(alpha, &bb, n, prec);
    let mut coef = Float::with_val(prec, 1); // z^k (γ)_k / k!
    let mut sum = Float::with_val(prec, 0);
    let tiny = Float::with_val(prec, 2).pow(-(prec as i32) + 32);
    let mut quiet = 0;
    for (k, r) in rg.iter().enumerate() {
        let term = Float::with_val(prec, &coef * r);
        sum += &term;
        if k as f64 > z.abs().powf(1.0 / a) / a + 10.0 {
            let small = Float::with_val(prec, term.abs_ref()) <= Float::with_val(prec, sum.abs_ref()) * &tiny;
            quiet = if small { quiet + 1 } else { 0 };
            if quiet > 4 {
                break;
            }
        }
        coef *= &zb;
        coef *= Float::with_val(prec, &gb + k as u32);
        coef /= (k + 1) as u32;
    }
    sum.to_f64()
}

/// Tanh-sinh quadrature on [a, b], refined until successive levels agree to `tol`.
pub fn tanh_sinh(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let half = 0.5 * (b - a);
    let pi2 = std::f64::consts::FRAC_PI_2;
    // Nodes by their distance from each endpoint, to keep endpoint singularities resolvable.
    let node = |u: f64| -> (f64, f64, f64) {
        let s = pi2 * u.sinh();
        let w = pi2 * u.cosh() / s.cosh().powi(2);
        let from_a = 2.0 / (1.0 + (2.0 * s).exp()); // 1 − x
        let from_b = 2.0 / (1.0 + (-2.0 * s).exp()); // 1 + x
        (from_a, from_b, w)
    };
    let eval = |u: f64| -> f64 {
        let (da, db, w) = node(u);
        let mut acc = 0.0;
        if db > 0.0 {
            acc += w * f(a + half * db);
        }
        if u != 0.0 && da > 0.0 {
            acc += w * f(a + half * da);
        }
        acc
    };
    let u_max = 6.5;
    let mut h = 0.5;
    let mut sum = eval(0.0);
    let mut k = 1;
    while (k as f64) * h <= u_max {
        sum += eval(k as f64 * h);
        k += 1;
    }
    let mut prev = sum * h * half;
    for _ in 0..10 {
        h *= 0.5;
        let mut k = 1;
        while (k as f64) * h <= u_max {
            sum += eval(k as f64 * h);
            k += 2;
        }
        let cur = sum * h * half;
        if (cur - prev).abs() <= tol * cur.abs() {
            return cur;
        }
        prev = cur;
    }
    prev
}

/// Complex numbers over MPFR reals, enough for Laplace inversion.
#[derive(Debug, Clone)]
pub struct MpComplex {
    pub re: Float,
    pub im: Float,
}

impl MpComplex {
    pub fn new(re: Float, im: Float) -> Self {
        Self { re, im }
    }

    pub fn real(prec: u32, x: f64) -> Self {
        Self::new(Float::with_val(prec, x), Float::new(prec))
    }

    fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(Float::with_val(self.prec(), &self.re + &o.re), Float::with_val(self.prec(), &self.im + &o.im))
    }

    pub fn add_real(&self, x: f64) -> Self {
        Self::new(Float::with_val(self.prec(), &self.re + x), self.im.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.prec();
        let re = Float::with_val(p, &self.re * &o.re) - Float::with_val(p, &self.im * &o.im);
        let im = Float::with_val(p, &self.re * &o.im) + Float::with_val(p, &self.im * &o.re);
        Self::new(re, im)
    }

    pub fn div(&self, o: &Self) -> Self {
        let p = self.prec();
        let d = Float::with_val(p, o.re.square_ref()) + Float::with_val(p, o.im.square_ref());
        let re = (Float::with_val(p, &self.re * &o.re) + Float::with_val(p, &self.im * &o.im)) / &d;
        let im = (Float::with_val(p, &self.im * &o.re) - Float::with_val(p, &self.re * &o.im)) / &d;
        Self::new(re, im)
    }

    pub fn ln(&self) -> Self {
        let p = self.prec();
        let m = Float::with_val(p, self.re.hypot_ref(&self.im)).ln();
        let a = Float::with_val(p, self.im.atan2_ref(&self.re));
        Self::new(m, a)
    }

    pub fn exp(&self) -> Self {
        let p = self.prec();
        let m = Float::with_val(p, self.re.exp_ref());
        let (s, c) = self.im.clone().sin_cos(Float::new(p));
        Self::new(Float::with_val(p, &m * &c), m * s)
    }

    pub fn scale(&self, x: &Float) -> Self {
        Self::new(Float::with_val(self.prec(), &self.re * x), Float::with_val(self.prec(), &self.im * x))
    }

    /// Principal power with a real exponent.
    pub fn powf(&self, e: f64) -> Self {
        self.ln().scale(&Float::with_val(self.prec(), e)).exp()
    }
}

/// Fixed Talbot inversion of F at t > 0 with M nodes at `prec` bits.
pub fn talbot(big_f: impl Fn(&MpComplex) -> MpComplex, t: f64, m: usize, prec: u32) -> f64 {
    let pi = Float::with_val(prec, Constant::Pi);
    let tt = Float::with_val(prec, t);
    let r = Float::with_val(prec, 2 * m as u32) / Float::with_val(prec, 5.0 * t);
    let s0 = MpComplex::new(r.clone(), Float::new(prec));
    let f0 = big_f(&s0);
    let mut sum = Float::with_val(prec, &r * &tt).exp() * f0.re / 2u32;
    for k in 1..m {
        let theta = Float::with_val(prec, &pi * k as u32) / m as u32;
        let cot = Float::with_val(prec, theta.tan_ref()).recip();
        let s = MpComplex::new(Float::with_val(prec, &r * &theta) * &cot, Float::with_val(prec, &r * &theta));
        // σ(θ) = θ + (θ cot θ − 1) cot θ
        let mut sigma = Float::with_val(prec, &theta * &cot);
        sigma -= 1u32;
        sigma *= &cot;
        sigma += &theta;
        let est = s.scale(&tt).exp();
        let v = est.mul(&big_f(&s)).mul(&MpComplex::new(Float::with_val(prec, 1), sigma));
        sum += v.re;
    }
    (sum * r / m as u32).to_f64()
}

/// Laplace transform of the heat eigenfunction: s⁻¹ / (1 + β (s^α + λ)^{−γ}).
pub fn heat_transform(alpha: f64, gamma: f64, lambda: f64, beta: f64) -> impl Fn(&MpComplex) -> MpComplex {
    move |s: &MpComplex| {
        let prec = s.re.prec();
        let w = s.powf(alpha).add_real(lambda).powf(-gamma).scale(&Float::with_val(prec, beta)).add_real(1.0);
        MpComplex::real(prec, 1.0).div(&s.mul(&w))
    }
}

/// Reference value of the heat eigenfunction by Talbot inversion.
pub fn heat_reference(alpha: f64, gamma: f64, lambda: f64, beta: f64, t: f64) -> f64 {
    talbot(heat_transform(alpha, gamma, lambda, beta), t, 96, 384)
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}

/// Deterministic RNG for the tests.
pub fn rng(seed: u64) -> rand::rngs::StdRng {
    use rand::SeedableRng;
    rand::rngs::StdRng::seed_from_u64(seed)
}
