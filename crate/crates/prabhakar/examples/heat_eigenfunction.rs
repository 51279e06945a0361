//! The eigenfunction f(t) of the Caputo-Prabhakar derivative, its large-t
//! expansion and the power-law decay of f(t) − φ₀.

use prabhakar::heat::{phi_coeffs, Eigenfunction, HeatConfig, HeatParams};
use prabhakar::operators::{prabhakar_deriv_caputo, OperatorKind, OperatorSpec, SampledFunction};

fn main() -> prabhakar::Result<()> {
    let hp = HeatParams::new(0.7, 0.9, 1.5, 1.0)?;
    let ev = Eigenfunction::new(hp, HeatConfig::default());
    let phi = phi_coeffs(&hp, 3, 1e-20)?;
    println!("phi_0..3 = {phi:?}  (closed forms {} and {})", hp.phi0_closed_form(), hp.phi1_closed_form());

    for t in [0.0, 0.5, 2.0, 10.0, 1e2, 1e3, 1e4] {
        let v = ev.eval(t)?;
        println!("f({t:>7}) = {:.15}  {:?}, est. rel. error {:.1e}", v.value, v.method, v.estimate);
    }

    let (a, b) = (1e3, 1e4);
    let ta = ev.eval(a)?.tilde.unwrap_or(f64::NAN);
    let tb = ev.eval(b)?.tilde.unwrap_or(f64::NAN);
    println!("slope of log(f - phi_0) over [1e3, 1e4]: {:.4} (alpha = {})", (tb / ta).ln() / (b / a).ln(), hp.alpha);

    // Caputo-Prabhakar derivative of f equals −β f.
    let f = SampledFunction::from_fn(1e-3, 2001, |t| ev.eval(t).map(|v| v.value).unwrap_or(f64::NAN))?;
    let spec = OperatorSpec::new(hp.alpha, hp.gamma, hp.lambda, OperatorKind::CaputoDerivative)?;
    let d = prabhakar_deriv_caputo(&f, &spec)?;
    let residual = (1..f.len()).map(|i| (d.values[i] + hp.beta_loss * f.values[i]).abs()).fold(0.0, f64::max);
    println!("sup |C f + beta f| on (0, 2]: {residual:.1e}");
    Ok(())
}
