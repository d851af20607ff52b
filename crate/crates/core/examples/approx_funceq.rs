//! Both sides of the approximate functional equation, and the character-sum lemmas.

use ffzeta::ffield::FieldSpec;
use ffzeta::moments::{approx_funceq_eval, charsum_bound_check, square_average_check};
use ffzeta::polyring::Poly;
use ffzeta::zetafn::CurveModel;
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = FieldSpec::prime(5)?;
    let curve = CurveModel::parse(&f, "T^5+T^2+2")?;
    for alpha in [Complex64::new(0.1, 0.0), Complex64::new(0.25, 0.3)] {
        let (lhs, rhs) = approx_funceq_eval(&curve, alpha, 1_000_000)?;
        println!("alpha = {alpha}: |L|^2 = {lhs:.12}, dual sums = {rhs:.12}");
    }

    let g = Poly::parse(&f, "T^3+2*T+1")?;
    for n in 0..3 {
        let (lhs, rhs, ok) = charsum_bound_check(&g, n)?;
        println!("character sum over degree {n} for f = {g}: {lhs:.3} <= {rhs:.3}: {ok}");
    }

    let t = Poly::t(&f);
    for genus in 1..=3 {
        let (emp, main) = square_average_check(&f, genus, &t, 100_000_000)?;
        println!("square average, g = {genus}: {emp:.6} vs main term {main:.6}");
    }
    Ok(())
}
