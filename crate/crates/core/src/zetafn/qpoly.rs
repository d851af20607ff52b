//! Dense polynomials over Q, constant term first, used for exact root structure of
//! L-polynomials.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

pub(crate) type QPoly = Vec<BigRational>;

pub(crate) fn from_ints(c: &[i128]) -> QPoly {
    let mut v: QPoly = c
        .iter()
        .map(|&x| BigRational::from_integer(BigInt::from(x)))
        .collect();
    trim(&mut v);
    v
}

fn trim(v: &mut QPoly) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn monic(a: &QPoly) -> QPoly {
    let lc = a.last().expect("nonzero").clone();
    a.iter().map(|c| c / &lc).collect()
}

fn derivative(a: &QPoly) -> QPoly {
    let mut v: QPoly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    trim(&mut v);
    v
}

fn sub(a: &QPoly, b: &QPoly) -> QPoly {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    let mut v: QPoly = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
        .collect();
    trim(&mut v);
    v
}

pub(crate) fn divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let db = b.len() - 1;
    if a.len() <= db {
        return (Vec::new(), a.clone());
    }
    let mut r = a.clone();
    let mut q = vec![BigRational::zero(); a.len() - db];
    let lead = b[db].clone();
    while r.len() > db {
        let top = r.len() - 1;
        let c = &r[top] / &lead;
        let shift = top - db;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &c * bi;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_empty() {
        let r = divrem(&x, &y).1;
        x = y;
        y = r;
    }
    if x.is_empty() {
        x
    } else {
        monic(&x)
    }
}

/// Yun's algorithm: `a = lc(a) prod S_i^i` with monic, squarefree, coprime `S_i`.
pub(crate) fn squarefree_parts(a: &QPoly) -> Vec<(QPoly, u32)> {
    let mut out = Vec::new();
    if a.len() <= 1 {
        return out;
    }
    let a = monic(a);
    let da = derivative(&a);
    let c = gcd(&a, &da);
    let mut w = divrem(&a, &c).0;
    let mut y = divrem(&da, &c).0;
    let mut z = sub(&y, &derivative(&w));
    let mut i = 1;
    while w.len() > 1 {
        let g = gcd(&w, &z);
        w = divrem(&w, &g).0;
        y = divrem(&z, &g).0;
        z = sub(&y, &derivative(&w));
        if g.len() > 1 {
            out.push((g, i));
        }
        i += 1;
    }
    out
}

pub(crate) fn to_complex(a: &QPoly) -> Vec<Complex64> {
    a.iter()
        .map(|c| Complex64::new(c.to_f64().expect("finite"), 0.0))
        .collect()
}

pub(crate) fn eval_c(a: &[Complex64], u: Complex64) -> Complex64 {
    a.iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * u + c)
}

pub(crate) fn derivative_c(a: &[Complex64]) -> Vec<Complex64> {
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * i as f64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn yun_on_repeated_factors() {
        // (u - 1)^2 (u + 2) = u^3 - 3u + 2
        let a = from_ints(&[2, -3, 0, 1]);
        let parts = squarefree_parts(&a);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].0, from_ints(&[2, 1]));
        assert_eq!(parts[0].1, 1);
        assert_eq!(parts[1].0, from_ints(&[-1, 1]));
        assert_eq!(parts[1].1, 2);
    }
}
