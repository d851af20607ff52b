//! Region verdicts over a small grid, plus a CSV grid suitable for external plotting.
//!
//! ```text
//! cargo run --example classify_region -- 9 > region.csv
//! ```

use ffzeta::bounds::{classify_point, northcott_line};
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(5);
    eprintln!("q = {q}: Northcott for Re(s) < {:.4}", northcott_line(q));

    let mut out = csv::Writer::from_writer(std::io::stdout());
    out.write_record(["sigma", "tau", "kind", "tag", "threshold_B"])?;
    for i in 0..=24 {
        let sigma = -1.0 + 0.125 * i as f64;
        for tau in [0.0, 0.5] {
            let v = classify_point(q, Complex64::new(sigma, tau))?;
            out.write_record([
                sigma.to_string(),
                tau.to_string(),
                format!("{:?}", v.kind),
                v.provenance.clone(),
                v.threshold_b.map(|b| b.to_string()).unwrap_or_default(),
            ])?;
        }
    }
    out.flush()?;
    Ok(())
}
