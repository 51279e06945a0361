//! Classical identities: the z-derivative in two forms, the reduction of the
//! third parameter and the Laplace transform.

use prabhakar::prabhakar::{deriv_z, deriv_z_dzhrbashyan, eval_auto, laplace_transform_rhs, reduce_gamma, Reduction};
use prabhakar::{Complex64, EvalConfig, PrabhakarParams};

fn main() -> prabhakar::Result<()> {
    let cfg = EvalConfig::default();
    let p = PrabhakarParams::new(0.6, 1.3, 0.8)?;
    let z = Complex64::new(-1.2, 0.7);

    let d1 = deriv_z(&p, z, 1, &cfg)?;
    let d2 = deriv_z_dzhrbashyan(&p, z, &cfg)?;
    println!("dE/dz: {d1:.14}  vs  {d2:.14}");

    let direct = eval_auto(&PrabhakarParams::new(0.6, 1.3, 1.8)?, z, 1e-15)?.value;
    for f in [Reduction::ThirdParameter, Reduction::Corollary] {
        println!("E^(gamma+1) by {f:?}: {:.14}  (direct {direct:.14})", reduce_gamma(&p, z, f, &cfg)?);
    }

    let s = Complex64::new(2.0, 0.0);
    let w = Complex64::new(-1.5, 0.0);
    println!("Laplace transform of t^(beta-1) E(w t^alpha) at s=2: {:.14}", laplace_transform_rhs(&p, s, w)?);
    Ok(())
}
