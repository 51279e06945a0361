//! Coefficients c_k of the exponential expansion, with the intermediate
//! R_k and Υ_k, and the closed forms they must reproduce.

use prabhakar::asym_coeffs::c_coeffs;
use prabhakar::PrabhakarParams;

fn main() -> prabhakar::Result<()> {
    let (a, b, g) = (0.8, 1.3, 0.6);
    let p = PrabhakarParams::new(a, b, g)?;
    let t = c_coeffs(&p, 8)?;
    println!("{:>3} {:>24} {:>24} {:>24}", "k", "c_k", "R_k", "Upsilon_k");
    for k in 0..=8 {
        println!("{k:>3} {:>24.16e} {:>24.16e} {:>24.16e}", t.c[k], t.r[k], t.upsilon[k]);
    }
    let c1 = (g - 1.0) / 2.0 * (a * g + g - 2.0 * b);
    println!("c_1 closed form {c1:.16e}");

    // γ = 1 reduces to the two-parameter function: every c_k with k ≥ 1 vanishes.
    let t1 = c_coeffs(&PrabhakarParams::new(0.7, 1.4, 1.0)?, 10)?;
    let worst = t1.c[1..].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    println!("gamma = 1: max |c_k| for k = 1..10 is {worst:.1e}");
    Ok(())
}
