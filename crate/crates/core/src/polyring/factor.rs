use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::raw;
use super::{Poly, PolyError};
use crate::ffield::{prime_factors, FieldElement, FieldSpec};

/// Seed for equal-degree splitting; fixed so factorizations are reproducible.
pub const DEFAULT_SEED: u64 = 0x2f6b_1c3d_9e04_a157;

/// `unit * prod P_i^{m_i}` with monic irreducible `P_i` in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElement,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn product(&self) -> Poly {
        let field = self.unit.field();
        let mut acc = vec![self.unit.value()];
        for (p, m) in &self.factors {
            for _ in 0..*m {
                acc = raw::mul(field, &acc, p.coeffs());
            }
        }
        Poly::from_raw(field, acc)
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Ordering key: degree, then coefficients from the top down.
pub(crate) fn canonical_cmp(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

pub fn factor(f: &Poly) -> Result<Factorization, PolyError> {
    factor_with_seed(f, DEFAULT_SEED)
}

pub fn factor_with_seed(f: &Poly, seed: u64) -> Result<Factorization, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let field = f.field();
    let (lc, monic) = raw::make_monic(field, f.coeffs());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let factors = factor_monic(field, &monic, &mut rng)
        .into_iter()
        .map(|(p, m)| (Poly::from_raw(field, p), m))
        .collect();
    Ok(Factorization {
        unit: FieldElement::new(field, lc)?,
        factors,
    })
}

pub(crate) fn factor_monic(
    f: &FieldSpec,
    monic: &[u32],
    rng: &mut ChaCha8Rng,
) -> Vec<(Vec<u32>, u32)> {
    let mut out = Vec::new();
    for (part, m) in squarefree_decomposition(f, monic) {
        for p in distinct_degree(f, &part, rng) {
            out.push((p, m));
        }
    }
    out.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
    out
}

fn pth_root_poly(f: &FieldSpec, a: &[u32]) -> Vec<u32> {
    let p = f.p() as usize;
    a.iter().step_by(p).map(|&c| f.pth_root(c)).collect()
}

/// Pairs `(S_i, i)` with `S_i` squarefree, pairwise coprime and `prod S_i^i = a`.
pub(crate) fn squarefree_decomposition(f: &FieldSpec, a: &[u32]) -> Vec<(Vec<u32>, u32)> {
    let mut out = Vec::new();
    if a.len() <= 1 {
        return out;
    }
    let p = f.p();
    let d = raw::derivative(f, a);
    if d.is_empty() {
        for (g, m) in squarefree_decomposition(f, &pth_root_poly(f, a)) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = raw::gcd(f, a, &d);
    let mut w = raw::div_exact(f, a, &c);
    let mut i = 1u32;
    while !raw::is_one(&w) {
        let y = raw::gcd(f, &w, &c);
        let z = raw::div_exact(f, &w, &y);
        if !raw::is_one(&z) {
            out.push((z, i));
        }
        i += 1;
        c = raw::div_exact(f, &c, &y);
        w = y;
    }
    if !raw::is_one(&c) {
        for (g, m) in squarefree_decomposition(f, &pth_root_poly(f, &c)) {
            out.push((g, m * p));
        }
    }
    out
}

fn distinct_degree(f: &FieldSpec, a: &[u32], rng: &mut ChaCha8Rng) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut rest = a.to_vec();
    let x = vec![0u32, 1];
    let mut h = x.clone();
    raw::rem_in_place(f, &mut h, &rest);
    let mut d = 1usize;
    while 2 * d < rest.len() {
        h = raw::powmod(f, &h, f.q() as u64, &rest);
        let g = raw::gcd(f, &rest, &raw::sub(f, &h, &x));
        if !raw::is_one(&g) {
            equal_degree(f, &g, d, rng, &mut out);
            rest = raw::div_exact(f, &rest, &g);
            raw::rem_in_place(f, &mut h, &rest);
        }
        d += 1;
    }
    if rest.len() > 1 {
        out.push(rest);
    }
    out
}

fn equal_degree(f: &FieldSpec, g: &[u32], d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Vec<u32>>) {
    let n = g.len() - 1;
    if n == d {
        out.push(g.to_vec());
        return;
    }
    let q = f.q();
    loop {
        let mut a: Vec<u32> = (0..n).map(|_| rng.gen_range(0..q)).collect();
        raw::trim(&mut a);
        if a.len() <= 1 {
            continue;
        }
        let h = if f.is_odd() {
            let mut t = a.clone();
            let mut acc = a;
            for _ in 1..d {
                t = raw::powmod(f, &t, q as u64, g);
                acc = raw::mulmod(f, &acc, &t, g);
            }
            let s = raw::powmod(f, &acc, (q as u64 - 1) / 2, g);
            raw::sub(f, &s, &[1])
        } else {
            // Absolute trace to F_2 over F_{q^d}.
            let k = f.e() as usize * d;
            let mut t = a.clone();
            let mut acc = a;
            for _ in 1..k {
                t = raw::mulmod(f, &t, &t, g);
                acc = raw::add(f, &acc, &t);
            }
            acc
        };
        let c = raw::gcd(f, g, &h);
        if c.len() > 1 && c.len() < g.len() {
            let other = raw::div_exact(f, g, &c);
            equal_degree(f, &c, d, rng, out);
            equal_degree(f, &other, d, rng, out);
            return;
        }
    }
}

pub fn is_squarefree(f: &Poly) -> Result<bool, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    Ok(raw_is_squarefree(f.field(), f.coeffs()))
}

pub(crate) fn raw_is_squarefree(f: &FieldSpec, a: &[u32]) -> bool {
    if a.len() <= 1 {
        return true;
    }
    let d = raw::derivative(f, a);
    // f' = 0 means f is a p-th power.
    !d.is_empty() && raw::gcd(f, a, &d).len() == 1
}

/// Rabin's test; constants are not irreducible.
pub fn is_irreducible(f: &Poly) -> Result<bool, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let (_, m) = raw::make_monic(f.field(), f.coeffs());
    Ok(raw_is_irreducible(f.field(), &m))
}

pub(crate) fn raw_is_irreducible(f: &FieldSpec, m: &[u32]) -> bool {
    let n = m.len().saturating_sub(1);
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let q = f.q() as u64;
    let x = vec![0u32, 1];
    // frob[k] = T^{q^k} mod m
    let mut frob = Vec::with_capacity(n + 1);
    frob.push(x.clone());
    for k in 1..=n {
        let next = raw::powmod(f, &frob[k - 1], q, m);
        frob.push(next);
    }
    if !raw::sub(f, &frob[n], &x).is_empty() {
        return false;
    }
    prime_factors(n as u64).into_iter().all(|r| {
        let k = n / r as usize;
        raw::gcd(f, m, &raw::sub(f, &frob[k], &x)).len() == 1
    })
}

fn require_monic(f: &Poly) -> Result<(), PolyError> {
    if f.is_zero() {
        Err(PolyError::ZeroPolynomial)
    } else if !f.is_monic() {
        Err(PolyError::NonMonic)
    } else {
        Ok(())
    }
}

/// Lambda(f) = deg P when f = P^j, else 0.
pub fn von_mangoldt(f: &Poly) -> Result<u32, PolyError> {
    require_monic(f)?;
    let fac = factor(f)?;
    Ok(match fac.factors.as_slice() {
        [(p, _)] => p.degree().unwrap_or(0) as u32,
        _ => 0,
    })
}

pub fn divisor_count(f: &Poly) -> Result<u64, PolyError> {
    require_monic(f)?;
    let fac = factor(f)?;
    Ok(fac.factors.iter().map(|(_, m)| *m as u64 + 1).product())
}
