//! Builds F_9 and F_27, shows the default modulus, and walks the square classes.

use ffzeta::ffield::{elements, FieldSpec, SquareClass};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for q in [9, 27] {
        let f = FieldSpec::with_order(q)?;
        println!(
            "F_{q}: p = {}, e = {}, modulus (constant first) = {:?}",
            f.p(),
            f.e(),
            f.modulus()
        );
        let squares: Vec<String> = elements(&f)
            .filter(|a| matches!(a.square_class(), Ok(SquareClass::Square)))
            .map(|a| f.display_elem(a.value()))
            .collect();
        println!("  nonzero squares: {}", squares.join(" "));
    }

    let f9 = FieldSpec::new(3, 2, Some(&[1, 0, 1]))?;
    let i = f9.from_coords(&[0, 1])?;
    println!(
        "in F_9 = F_3[T]/(T^2+1): T*T = {}",
        f9.display_elem(f9.mul(i, i))
    );
    Ok(())
}
