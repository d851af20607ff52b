//! Empirical mean of |L(1/2 + alpha, chi_D)|^2 over H_{2g+1} against the Euler-product prediction.

use ffzeta::ffield::FieldSpec;
use ffzeta::moments::{second_moment_exhaustive, DEFAULT_TRUNCATION};
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = FieldSpec::prime(5)?;
    for alpha in [0.25, 0.5] {
        for g in 1..=3 {
            let r = second_moment_exhaustive(
                &f,
                g,
                Complex64::new(alpha, 0.0),
                DEFAULT_TRUNCATION,
                100_000_000,
            )?;
            println!(
                "alpha = {alpha}, g = {g}: {} curves, empirical {:.6}, predicted {:.6}, ratio {:.6}",
                r.curves, r.empirical, r.predicted, r.ratio
            );
        }
    }
    Ok(())
}
