//! L-polynomial of y^2 = D(T) by both routes, with the Weil checks and class number.
//!
//! ```text
//! cargo run --example lpolynomial -- 7 "T^5+T+3"
//! ```

use ffzeta::ffield::FieldSpec;
use ffzeta::polyring::irreducible_table;
use ffzeta::zetafn::{
    check_weil_package, class_number, lpoly_from_charsum, lpoly_via_splitting, CurveModel,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let q: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(5);
    let d = args.next().unwrap_or_else(|| "T^5+2*T^2+1".into());

    let f = FieldSpec::with_order(q)?;
    let curve = CurveModel::parse(&f, &d)?;
    let table = irreducible_table(&f, curve.genus(), 10_000_000)?;
    let split = lpoly_via_splitting(&curve, &table)?;
    let chars = lpoly_from_charsum(&curve, 100_000_000)?;
    assert_eq!(split, chars);

    let w = check_weil_package(&split);
    println!("q = {q}, D = {}, genus {}", curve.D(), curve.genus());
    println!("L(u) coefficients: {:?}", split.coeffs());
    println!("h = {}", class_number(&split)?);
    println!(
        "functional equation: {}, RH: {} (max deviation {:.1e})",
        w.funceq, w.rh, w.max_root_deviation
    );
    Ok(())
}
