use super::factor::factor;
use super::raw;
use super::{Poly, PolyError};
use crate::ffield::{same_field, FieldSpec};

fn check_args(d: &Poly, f: &Poly) -> Result<(), PolyError> {
    if !same_field(d.field(), f.field()) {
        return Err(PolyError::FieldMismatch);
    }
    if !d.field().is_odd() {
        return Err(PolyError::EvenCharacteristic);
    }
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if !f.is_monic() {
        return Err(PolyError::NonMonic);
    }
    Ok(())
}

/// `chi_D(f) = (D/f)` by factoring `f` and applying the Euler criterion at each prime.
pub fn quadratic_character(d: &Poly, f: &Poly) -> Result<i32, PolyError> {
    check_args(d, f)?;
    let field = d.field();
    let mut acc = 1i32;
    for (p, m) in factor(f)?.factors {
        let l = legendre_prime_raw(field, d.coeffs(), p.coeffs());
        if l == 0 {
            return Ok(0);
        }
        if m % 2 == 1 {
            acc *= l;
        }
    }
    Ok(acc)
}

/// `(D/f)` by quadratic reciprocity, without factoring.
pub fn jacobi_symbol(d: &Poly, f: &Poly) -> Result<i32, PolyError> {
    check_args(d, f)?;
    Ok(jacobi_raw(d.field(), d.coeffs(), f.coeffs()))
}

/// `(D/P)` for monic irreducible `P`: `D^{(|P|-1)/2} mod P` equals the base-field
/// character of the norm of `D mod P`.
pub(crate) fn legendre_prime_raw(f: &FieldSpec, d: &[u32], p: &[u32]) -> i32 {
    let mut r = d.to_vec();
    raw::rem_in_place(f, &mut r, p);
    if r.is_empty() {
        return 0;
    }
    let deg = p.len() - 1;
    let q = f.q() as u64;
    let mut cur = r.clone();
    let mut acc = r;
    for _ in 1..deg {
        cur = raw::powmod(f, &cur, q, p);
        acc = raw::mulmod(f, &acc, &cur, p);
    }
    debug_assert!(acc.len() == 1, "norm lies in the base field");
    f.legendre(acc[0])
}

/// Jacobi symbol `(a/b)` for monic `b` in odd characteristic.
pub(crate) fn jacobi_raw(f: &FieldSpec, a: &[u32], b: &[u32]) -> i32 {
    let flip = ((f.q() - 1) / 2) % 2 == 1;
    let mut result = 1i32;
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    loop {
        if b.len() == 1 {
            return result;
        }
        raw::rem_in_place(f, &mut a, &b);
        if a.is_empty() {
            return 0;
        }
        let deg_b = b.len() - 1;
        let lc = *a.last().expect("nonzero");
        // (c/b) = legendre(c)^{deg b}
        if deg_b % 2 == 1 {
            result *= f.legendre(lc);
        }
        if a.len() == 1 {
            return result;
        }
        let a1 = raw::make_monic(f, &a).1;
        let deg_a = a1.len() - 1;
        if flip && deg_a % 2 == 1 && deg_b % 2 == 1 {
            result = -result;
        }
        a = b;
        b = a1;
    }
}
