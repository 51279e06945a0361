//! Truncated power series in 1/s: products, Miller powers and the Stirling
//! coefficients of the scaled gamma function.

use prabhakar::series_engine::{
    cauchy_product, four_series_product, gen_binomial, miller_power, stirling_gamma_coeffs, CoefficientSeries,
};

fn main() -> prabhakar::Result<()> {
    let a = CoefficientSeries::new(0, vec![1.0, 2.0])?;
    let b = CoefficientSeries::new(0, vec![1.0, 3.0])?;
    println!("(1 + 2/s)(1 + 3/s) = {:?}", cauchy_product(&a, &b, 2).coeffs);

    let d = CoefficientSeries::new(0, vec![1.0, 0.5, -0.25, 0.125])?;
    let cube = miller_power(&d, 3, 5)?;
    let chained = four_series_product(&d, &d, &d, &CoefficientSeries::identity(1), 5)?;
    println!("Miller cube:  {:?}", cube.coeffs);
    println!("chained cube: {:?}", chained.coeffs);

    println!("Stirling gamma_k: {:?}", stirling_gamma_coeffs(5));
    println!("generalized binomial (-3 choose 2) = {}", gen_binomial(-3, 2));
    Ok(())
}
