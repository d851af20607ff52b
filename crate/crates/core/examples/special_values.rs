//! Leading Laurent coefficients of zeta_K at the poles, the central point and beyond.

use ffzeta::ffield::FieldSpec;
use ffzeta::zetafn::{lpoly_from_charsum, zeta_special_value, CurveModel};
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (q, d) in [(5, "T^3+T"), (9, "T^3+[0,1]*T")] {
        let f = FieldSpec::with_order(q)?;
        let l = lpoly_from_charsum(&CurveModel::parse(&f, d)?, 1_000_000)?;
        println!("q = {q}, D = {d}, L = {:?}", l.coeffs());
        for s in [0.0, 0.5, 1.0, 2.0, -1.0] {
            let v = zeta_special_value(&l, Complex64::new(s, 0.0));
            println!(
                "  s = {s:>4}: order {:>2}, leading {:.12} ({:?})",
                v.order, v.leading.re, v.confidence
            );
        }
    }
    Ok(())
}
