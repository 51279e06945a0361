//! The negative semi-axis: the algebraic expansion for α < 2 and the cosine
//! pairs C_r(t) that take over for α ≥ 2.

use prabhakar::prabhakar::{eval_negative_axis, eval_series, negative_axis_pairs};
use prabhakar::{Complex64, PrabhakarParams};

fn main() -> prabhakar::Result<()> {
    for (a, b, g) in [(0.5, 1.0, 0.8), (0.7, 1.0, 0.9), (1.4, 1.2, 0.6), (2.5, 1.0, 0.7)] {
        let p = PrabhakarParams::new(a, b, g)?;
        println!("alpha={a} beta={b} gamma={g}");
        for t in [10.0, 30.0, 80.0] {
            let asym = eval_negative_axis(&p, t, 12)?;
            let s = eval_series(&p, Complex64::new(-t, 0.0), 1e-16, 4000);
            if s.cancellation_estimate() < 1e-8 {
                let gap = (asym.value.re - s.value.re).abs() / s.value.re.abs();
                println!("  t={t:<5} expansion {:.12e}  series {:.12e}  rel gap {gap:.1e}", asym.value.re, s.value.re);
            } else {
                println!("  t={t:<5} expansion {:.12e}  (series lost to cancellation)", asym.value.re);
            }
        }
    }
    println!("cosine pairs P(alpha):");
    for a in [2.5, 4.0, 6.0, 9.0, 10.01] {
        println!("  alpha={a:<6} P={}", negative_axis_pairs(a));
    }
    Ok(())
}
