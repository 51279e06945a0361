//! Prabhakar integral and derivatives on a uniform grid, checked against
//! their closed forms on simple test functions.

use prabhakar::operators::{
    prabhakar_deriv_caputo, prabhakar_deriv_rl, prabhakar_integral, OperatorKind, OperatorSpec, SampledFunction,
};
use prabhakar::EvalConfig;

fn main() -> prabhakar::Result<()> {
    let cfg = EvalConfig::default();
    let (alpha, gamma, lambda) = (0.7, 0.9, 1.5);
    let h = 1e-3;
    let n = 2001;
    let t_end = h * (n - 1) as f64;

    let f = SampledFunction::from_fn(h, n, |t| t)?;
    for kind in [OperatorKind::Integral, OperatorKind::RlDerivative, OperatorKind::CaputoDerivative] {
        let spec = OperatorSpec::new(alpha, gamma, lambda, kind)?;
        let g = match kind {
            OperatorKind::Integral => prabhakar_integral(&f, &spec)?,
            OperatorKind::RlDerivative => prabhakar_deriv_rl(&f, &spec)?,
            OperatorKind::CaputoDerivative => prabhakar_deriv_caputo(&f, &spec)?,
        };
        let exact = spec.image_of_power(1.0, t_end, &cfg)?;
        println!("{kind:?} of t at t={t_end}: {:.12} (closed form {exact:.12})", g.values[n - 1]);
    }

    // Observed order of the integral on sin t.
    let spec = OperatorSpec::new(alpha, gamma, lambda, OperatorKind::Integral)?;
    let mut errors = Vec::new();
    for h in [4e-3, 2e-3, 1e-3] {
        let m = (1.0 / h) as usize + 1;
        let coarse = prabhakar_integral(&SampledFunction::from_fn(h, m, f64::sin)?, &spec)?;
        let fine = prabhakar_integral(&SampledFunction::from_fn(h / 8.0, 8 * (m - 1) + 1, f64::sin)?, &spec)?;
        errors.push((coarse.values[m - 1] - fine.values[8 * (m - 1)]).abs());
    }
    println!("observed order: {:.2}, {:.2}", (errors[0] / errors[1]).log2(), (errors[1] / errors[2]).log2());
    Ok(())
}
