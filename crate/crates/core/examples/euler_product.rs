//! Truncated C_alpha with its tail bound, and the two-shift main-term prediction.

use ffzeta::moments::{c_alpha_euler_product, predicted_shifted_moment};
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let alpha = Complex64::new(0.25, 0.3);
    for n in [2, 4, 8, 12] {
        let e = c_alpha_euler_product(5, alpha, n)?;
        println!(
            "N = {n:>2}: C = {:.12}, |log tail| <= {:.2e}, forms differ by {:.1e}",
            e.value, e.log_tail_bound, e.form_discrepancy
        );
    }
    for g in 1..=4 {
        let p =
            predicted_shifted_moment(5, g, Complex64::new(0.1, 0.0), Complex64::new(0.25, 0.0), 12)?;
        println!(
            "g = {g}: predicted mean of L(1/2+0.1) L(1/2+0.25) = {:.6}",
            p.re
        );
    }
    Ok(())
}
