//! Closed-form calculators: thresholds, genus caps, the Hasse bracket and count bounds.

use ffzeta::bounds::{
    couveignes_count_bound, genus_cap, hasse_envelope, misc_count_bounds, moment_threshold_b,
    right_threshold_b, size_bound_s,
};
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = right_threshold_b(5, 2.0)?;
    println!(
        "right threshold q=5, sigma=2: {} = {:.6}",
        r.exact.unwrap_or_default(),
        r.value.unwrap_or(f64::NAN)
    );

    for b in [2.0, 10.0, 100.0] {
        println!(
            "genus cap q=9, s=0, B={b}: {}",
            genus_cap(9, Complex64::new(0.0, 0.0), b)?
        );
    }

    let (lo, hi) = hasse_envelope(5, 2, Complex64::new(1.0, 0.0));
    println!("|L(1)| for genus 2 over F_5 lies in [{lo:.3}, {hi:.3}]");

    let s = size_bound_s(5, Complex64::new(-1.0, 0.0), 2.0, 1.0)?;
    println!(
        "log #S(5, -1, 2) <= {:.4} ({})",
        s.log_value,
        s.note.unwrap_or_default()
    );

    println!(
        "moment threshold q=5, s=2: {:.6}",
        moment_threshold_b(5, Complex64::new(2.0, 0.0), 12)?
    );

    let c = couveignes_count_bound(5, 3, Some(4), 1.0);
    println!("Couveignes bound, g=3: log_q = {:.6}", c.log_base_q);
    for rep in misc_count_bounds(7, 2, 1.0, 1.0)? {
        println!("{}: log = {:.4}", rep.name, rep.log_value);
    }
    Ok(())
}
