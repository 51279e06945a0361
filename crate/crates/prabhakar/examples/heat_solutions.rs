//! Separable solutions of the nonlinear heat equations: power-law and
//! logarithmic spatial profiles times the eigenfunction.

use prabhakar::heat::{heat_solution_exp, heat_solution_power, HeatParams};

fn main() -> prabhakar::Result<()> {
    let hp = HeatParams::new(0.7, 0.6, 1.5, 1.0)?;
    let (c, xi, nu) = (1.0, 2.0, 0.5);
    println!("{:>5} {:>8} {:>20} {:>20}", "x", "t", "T_power", "T_log");
    for x in [1.5, 3.0, 6.0] {
        for t in [0.0, 1.0, 5.0] {
            let tp = heat_solution_power(x, t, c, xi, &hp)?;
            let tl = heat_solution_exp(x, t, c, nu, &hp)?;
            println!("{x:>5} {t:>8} {tp:>20.14} {tl:>20.14}");
        }
    }
    Ok(())
}
