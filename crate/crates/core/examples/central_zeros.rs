//! Exhaustive search for L_K(q^{-1/2}) = 0 with independent re-verification of each witness.

use ffzeta::ffield::FieldSpec;
use ffzeta::northcott::central_zero_search;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (q, max_deg) in [(5, 5), (9, 3)] {
        let f = FieldSpec::with_order(q)?;
        let r = central_zero_search(&f, max_deg, 100_000_000)?;
        println!(
            "q = {q}: {} curves up to degree {max_deg}, {} witnesses",
            r.curves_searched,
            r.witnesses.len()
        );
        for w in r.witnesses.iter().take(5) {
            println!("    {}  verified: {}", w.d, w.verify(10_000_000)?);
        }
    }
    Ok(())
}
