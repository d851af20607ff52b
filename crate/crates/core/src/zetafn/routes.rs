use rayon::prelude::*;

use super::{CurveModel, LPolynomial, PrimeCounts, ZetaError};
use crate::ffield::FieldSpec;
use crate::polyring::raw;
use crate::polyring::{irreducible_table, jacobi_raw, legendre_prime_raw, IrreducibleTable};

fn pow_u128(q: u64, n: usize) -> u128 {
    (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX)
}

fn check_budget(needed: u128, budget: u64) -> Result<(), ZetaError> {
    if needed > budget as u128 {
        Err(ZetaError::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

/// Coefficients by `c_n = sum_{f in M_n} (D/f)`, for `n <= 2g`, with the
/// degree-`2g+1` sum checked to vanish.
pub fn lpoly_from_charsum(curve: &CurveModel, budget: u64) -> Result<LPolynomial, ZetaError> {
    let g = curve.genus();
    let q = curve.q();
    let needed: u128 = (0..=2 * g + 1).map(|n| pow_u128(q, n)).sum();
    check_budget(needed, budget)?;
    let field = curve.field();
    let d = curve.D().coeffs();
    let sums: Vec<i128> = (0..=2 * g + 1).map(|n| charsum(field, d, n)).collect();
    if sums[2 * g + 1] != 0 {
        return Err(ZetaError::CharsumNonvanishing {
            degree: 2 * g + 1,
            value: sums[2 * g + 1],
        });
    }
    LPolynomial::new(q, sums[..=2 * g].to_vec())
}

fn charsum(field: &FieldSpec, d: &[u32], n: usize) -> i128 {
    let q = field.q();
    let total = (q as u64).pow(n as u32);
    (0..total)
        .into_par_iter()
        .map(|k| {
            let f = crate::polyring::monic_raw_index(q, n, k);
            jacobi_raw(field, d, &f) as i128
        })
        .sum()
}

/// Prime counts `a_1..a_max_deg` from the splitting of primes of `F_q[T]`.
pub fn prime_counts_via_splitting(
    curve: &CurveModel,
    max_deg: usize,
    budget: u64,
) -> Result<PrimeCounts, ZetaError> {
    let table = irreducible_table(curve.field(), max_deg, budget)?;
    prime_counts_with_table(curve, &table, max_deg)
}

/// As [`prime_counts_via_splitting`] with a prebuilt table covering `max_deg`.
pub fn prime_counts_with_table(
    curve: &CurveModel,
    table: &IrreducibleTable,
    max_deg: usize,
) -> Result<PrimeCounts, ZetaError> {
    if table.max_degree() < max_deg {
        return Err(ZetaError::InsufficientCounts {
            needed: max_deg,
            got: table.max_degree(),
        });
    }
    let field = curve.field();
    let d = curve.D().coeffs();
    let mut counts = vec![0u64; max_deg];
    for deg in 1..=max_deg {
        for p in table.get(deg) {
            match legendre_prime_raw(field, d, p.coeffs()) {
                1 => counts[deg - 1] += 2,
                0 => counts[deg - 1] += 1,
                _ => {
                    if 2 * deg <= max_deg {
                        counts[2 * deg - 1] += 1;
                    }
                }
            }
        }
    }
    if max_deg >= 1 {
        // The place at infinity ramifies for odd deg D.
        counts[0] += 1;
    }
    Ok(PrimeCounts::new(counts))
}

/// Newton's identities on the power sums `q^l + 1 - sum_{d|l} d a_d` for `l <= g`,
/// completed by the functional equation.
pub fn lpoly_from_prime_counts(
    counts: &PrimeCounts,
    q: u64,
    g: usize,
) -> Result<LPolynomial, ZetaError> {
    if counts.max_degree() < g {
        return Err(ZetaError::InsufficientCounts {
            needed: g,
            got: counts.max_degree(),
        });
    }
    let qi = q as i128;
    let power_sums: Vec<i128> = (1..=g)
        .map(|l| qi.pow(l as u32) + 1 - counts.points(l).expect("in range") as i128)
        .collect();
    let mut c = vec![0i128; 2 * g + 1];
    c[0] = 1;
    for n in 1..=g {
        let s: i128 = (1..=n).map(|i| power_sums[i - 1] * c[n - i]).sum();
        if s % n as i128 != 0 {
            return Err(ZetaError::InconsistentCounts);
        }
        c[n] = -s / n as i128;
    }
    for n in 0..g {
        c[2 * g - n] = qi.pow((g - n) as u32) * c[n];
    }
    LPolynomial::new(q, c)
}

/// Splitting route end to end.
pub fn lpoly_via_splitting(
    curve: &CurveModel,
    table: &IrreducibleTable,
) -> Result<LPolynomial, ZetaError> {
    let g = curve.genus();
    let counts = prime_counts_with_table(curve, table, g)?;
    lpoly_from_prime_counts(&counts, curve.q(), g)
}

fn mobius(mut n: usize) -> i128 {
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Inverse direction: power sums of the reciprocal roots, then Moebius inversion.
pub fn prime_counts_from_lpoly(l: &LPolynomial, max_deg: usize) -> PrimeCounts {
    let c = l.coeffs();
    let coeff = |i: usize| c.get(i).copied().unwrap_or(0);
    let mut s = vec![0i128; max_deg + 1];
    for n in 1..=max_deg {
        let mut acc = -(n as i128) * coeff(n);
        for i in 1..n {
            acc -= coeff(i) * s[n - i];
        }
        s[n] = acc;
    }
    let q = l.q() as i128;
    let points: Vec<i128> = (0..=max_deg)
        .map(|n| {
            if n == 0 {
                0
            } else {
                q.pow(n as u32) + 1 - s[n]
            }
        })
        .collect();
    let counts = (1..=max_deg)
        .map(|n| {
            let t: i128 = (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| mobius(n / d) * points[d])
                .sum();
            (t / n as i128) as u64
        })
        .collect();
    PrimeCounts::new(counts)
}

/// `#{(t, y) in F_{q^n}^2 : y^2 = D(t)} + 1`, counted in `F_q[x]/(m)` for the first
/// monic irreducible `m` of degree `n`.
pub fn point_count_direct(curve: &CurveModel, n: usize, budget: u64) -> Result<u64, ZetaError> {
    let q = curve.q();
    let size = pow_u128(q, n);
    check_budget(2 * size, budget)?;
    let field = curve.field();
    let d = curve.D().coeffs();
    if n == 0 {
        return Ok(1);
    }
    if n == 1 {
        let affine: i64 = field
            .raw_elements()
            .into_par_iter()
            .map(|t| 1 + field.legendre(raw::eval(field, d, t)) as i64)
            .sum();
        return Ok(affine as u64 + 1);
    }
    let qn = size as u64;
    let m = (0..q.pow(n as u32))
        .map(|k| crate::polyring::monic_raw_index(q as u32, n, k))
        .find(|c| crate::polyring::raw_irreducible(field, c))
        .expect("irreducibles exist in every degree");
    let unpack = |k: u64| {
        let mut v = Vec::with_capacity(n);
        let mut r = k;
        for _ in 0..n {
            v.push((r % q) as u32);
            r /= q;
        }
        raw::trim(&mut v);
        v
    };
    let pack = |v: &[u32]| v.iter().rev().fold(0u64, |acc, &c| acc * q + c as u64);
    let mut is_square = vec![false; qn as usize];
    for k in 0..qn {
        let t = unpack(k);
        is_square[pack(&raw::mulmod(field, &t, &t, &m)) as usize] = true;
    }
    let affine: u64 = (0..qn)
        .into_par_iter()
        .map(|k| {
            let t = unpack(k);
            let mut acc: Vec<u32> = Vec::new();
            for &c in d.iter().rev() {
                acc = raw::mulmod(field, &acc, &t, &m);
                acc = raw::add(field, &acc, &[c]);
            }
            if acc.is_empty() {
                1
            } else if is_square[pack(&acc) as usize] {
                2
            } else {
                0
            }
        })
        .sum();
    Ok(affine + 1)
}
