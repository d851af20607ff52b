//! Parses, factors and evaluates quadratic characters of polynomials over F_5.

use ffzeta::ffield::FieldSpec;
use ffzeta::polyring::{factor, is_squarefree, quadratic_character, Poly};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = FieldSpec::prime(5)?;
    let d = Poly::parse(&f, "T^3+T")?;
    let fac = factor(&d)?;
    let parts: Vec<String> = fac
        .factors
        .iter()
        .map(|(p, m)| format!("({p})^{m}"))
        .collect();
    println!("{d} = {}", parts.join(" "));
    println!("squarefree: {}", is_squarefree(&d)?);

    for g in ["T", "T+1", "T+4", "T^2+2", "T^2+T+1"] {
        let g = Poly::parse(&f, g)?;
        println!("chi_D({g}) = {:>2}", quadratic_character(&d, &g)?);
    }
    Ok(())
}
