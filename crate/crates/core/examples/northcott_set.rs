//! Enumerates S_{q,s,B} inside a genus window and reports both dedupe counts.

use ffzeta::ffield::FieldSpec;
use ffzeta::northcott::{compute_S, ComputeOptions, Dedupe, EnumerationScope};
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = FieldSpec::prime(5)?;
    for (s, b) in [(-2.0, 100.0), (1.0, 1.0), (0.75, 1.2)] {
        let scope = EnumerationScope::new(&f, 0, 2).with_dedupe(Dedupe::AffineOrbit);
        let r = compute_S(Complex64::new(s, 0.0), b, &scope, ComputeOptions::default())?;
        println!(
            "s = {s}, B = {b}: {:?}, {} members ({} orbits, {} L-polynomials), scanned to genus {:?}, complete: {}",
            r.region,
            r.members.len(),
            r.member_affine_orbits,
            r.member_lpolynomials,
            r.genus_scanned,
            r.complete_within_scope
        );
        for m in r.members.iter().take(4) {
            println!("    {} (genus {}): {:.6}", m.d, m.genus, m.abs_leading);
        }
    }
    Ok(())
}
