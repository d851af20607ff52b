use rayon::prelude::*;

use super::factor::{raw_is_irreducible, raw_is_squarefree};
use super::{Poly, PolyError};
use crate::ffield::{Field, FieldSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonicFilter {
    All,
    Squarefree,
    Irreducible,
}

/// `q^n`, saturating.
pub fn count_monic(q: u64, n: u32) -> u128 {
    (q as u128).checked_pow(n).unwrap_or(u128::MAX)
}

/// `#H_n`: `q^n - q^{n-1}` for `n >= 2`, every monic otherwise.
pub fn squarefree_count(q: u64, n: u32) -> u128 {
    if n < 2 {
        count_monic(q, n)
    } else {
        count_monic(q, n) - count_monic(q, n - 1)
    }
}

fn mobius(mut n: u32) -> i32 {
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

/// Number of monic irreducibles of degree `d`: `(1/d) sum_{e|d} mu(e) q^{d/e}`.
pub fn irreducible_count(q: u64, d: u32) -> u128 {
    if d == 0 {
        return 0;
    }
    let mut total: i128 = 0;
    for e in (1..=d).filter(|e| d.is_multiple_of(*e)) {
        total += mobius(e) as i128 * (q as i128).pow(d / e);
    }
    (total / d as i128) as u128
}

/// Coefficients of the `k`-th monic polynomial of degree `n`: the base-q digits of
/// `k`, constant term least significant, with a leading 1 appended.
pub(crate) fn monic_raw(q: u32, n: usize, mut k: u64) -> Vec<u32> {
    let mut c = Vec::with_capacity(n + 1);
    for _ in 0..n {
        c.push((k % q as u64) as u32);
        k /= q as u64;
    }
    c.push(1);
    c
}

pub fn monic_from_index(field: &Field, n: usize, k: u64) -> Poly {
    Poly::from_raw(field, monic_raw(field.q(), n, k))
}

pub(crate) fn passes(f: &FieldSpec, c: &[u32], filter: MonicFilter) -> bool {
    match filter {
        MonicFilter::All => true,
        MonicFilter::Squarefree => raw_is_squarefree(f, c),
        MonicFilter::Irreducible => raw_is_irreducible(f, c),
    }
}

/// Monic polynomials of degree `n` in enumeration order.
pub fn enumerate_monic(
    field: &Field,
    n: usize,
    filter: MonicFilter,
) -> impl Iterator<Item = Poly> + '_ {
    let total = field.q() as u64;
    let total = total.checked_pow(n as u32).unwrap_or(u64::MAX);
    (0..total).filter_map(move |k| {
        let c = monic_raw(field.q(), n, k);
        passes(field, &c, filter).then(|| Poly::from_raw(field, c))
    })
}

/// `H_n`, the monic squarefree polynomials of degree `n`, in enumeration order.
/// Built in parallel; the ordered collect keeps the result independent of threads.
pub fn squarefree_monic_list(field: &Field, n: usize) -> Vec<Poly> {
    let total = (field.q() as u64).pow(n as u32);
    (0..total)
        .into_par_iter()
        .filter_map(|k| {
            let c = monic_raw(field.q(), n, k);
            raw_is_squarefree(field, &c).then(|| Poly::from_raw(field, c))
        })
        .collect()
}

/// Monic irreducibles by degree, each list in enumeration order.
#[derive(Debug, Clone)]
pub struct IrreducibleTable {
    field: Field,
    by_degree: Vec<Vec<Poly>>,
}

impl IrreducibleTable {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn max_degree(&self) -> usize {
        self.by_degree.len() - 1
    }

    /// Irreducibles of degree `d`; empty beyond `max_degree`.
    pub fn get(&self, d: usize) -> &[Poly] {
        self.by_degree.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn count(&self, d: usize) -> usize {
        self.get(d).len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Poly> {
        self.by_degree.iter().flatten()
    }
}

/// Builds the table up to `max_deg`, refusing when `sum_d q^d` exceeds `budget`.
pub fn irreducible_table(
    field: &Field,
    max_deg: usize,
    budget: u64,
) -> Result<IrreducibleTable, PolyError> {
    let q = field.q() as u64;
    let needed: u128 = (1..=max_deg as u32).map(|d| count_monic(q, d)).sum();
    if needed > budget as u128 {
        return Err(PolyError::BudgetExceeded { needed, budget });
    }
    let mut by_degree = vec![Vec::new()];
    for d in 1..=max_deg {
        let total = q.pow(d as u32);
        let list: Vec<Poly> = (0..total)
            .into_par_iter()
            .filter_map(|k| {
                let c = monic_raw(field.q(), d, k);
                raw_is_irreducible(field, &c).then(|| Poly::from_raw(field, c))
            })
            .collect();
        by_degree.push(list);
    }
    Ok(IrreducibleTable {
        field: field.clone(),
        by_degree,
    })
}
