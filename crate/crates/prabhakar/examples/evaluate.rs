//! E^γ_{α,β}(z) across the complex plane: the Taylor series near the origin,
//! the whole-plane expansions further out, and the automatic switch.

use prabhakar::prabhakar::{eval_asymptotic, eval_auto, eval_series};
use prabhakar::{Complex64, PrabhakarParams};

fn main() -> prabhakar::Result<()> {
    let p = PrabhakarParams::new(0.7, 1.0, 0.9)?;
    println!("E^0.9_(0.7,1)(z)");
    for z in [
        Complex64::new(-2.0, 0.0),
        Complex64::new(0.5, 1.0),
        Complex64::new(20.0, 0.0),
        Complex64::new(-40.0, 0.0),
        Complex64::from_polar(60.0, 2.0),
    ] {
        let r = eval_auto(&p, z, 1e-15)?;
        println!("  z = {z:>22.4}  ->  {:.15e} {:+.15e}i  ({}, {} terms)", r.value.re, r.value.im, r.method, r.terms_used);
    }

    // Near the switch both routes are available and agree.
    let z = Complex64::new(-8.0, 0.0);
    let s = eval_series(&p, z, 1e-16, 4000);
    let a = eval_asymptotic(&p, z, 12)?;
    println!("z = -8: series {:.15e} (cancellation {:.1e}), asymptotic {:.15e}", s.value.re, s.cancellation_estimate(), a.value.re);
    Ok(())
}
