//! Finite fields F_q with q = p^e.
//!
//! Elements are stored as a packed index `a_0 + a_1 p + ... + a_{e-1} p^{e-1}` where
//! `(a_0, ..., a_{e-1})` are the coordinates in the power basis of the defining
//! modulus. Index order is the canonical enumeration order: it is lexicographic on
//! the coordinate vector read from the highest coordinate down, so 0 comes first and
//! the constant coordinate varies fastest.
//!
//! Arithmetic goes through [`FieldSpec`] on raw indices for speed; [`FieldElement`]
//! is the checked public handle that refuses to mix elements of different fields.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 31;

/// Fields up to this order get Zech-logarithm tables for multiplication.
const TABLE_LIMIT: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("modulus is reducible over F_p")]
    ReducibleModulus,
    #[error("modulus has degree {got}, expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("modulus is not monic")]
    NonMonicModulus,
    #[error("field order p^e exceeds 2^31")]
    TooLarge,
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("operation requires odd characteristic")]
    EvenCharacteristic,
    #[error("coordinate {0} out of range")]
    CoordinateOutOfRange(u64),
}

/// Shared handle to a validated field.
pub type Field = Arc<FieldSpec>;

/// Result of the Euler criterion in F_q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SquareClass {
    Zero,
    Square,
    Nonsquare,
}

#[derive(Debug, Clone)]
struct ZechTables {
    log: Vec<u32>,
    exp: Vec<u32>,
}

/// A validated finite field F_{p^e} together with its defining modulus.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    p: u32,
    e: u32,
    q: u32,
    /// Monic modulus over F_p, constant term first, length e + 1.
    modulus: Vec<u32>,
    tables: Option<ZechTables>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^e`, or returns `None` when `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Dense polynomial helpers over F_p, used only to validate moduli and to run the
// slow-path extension arithmetic.
mod fp_poly {
    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let inv_lead = inv(m[dm], p);
        while r.len() > dm {
            let top = r.len() - 1;
            let c = r[top] * inv_lead % p;
            if c != 0 {
                for (i, &mi) in m.iter().enumerate() {
                    let idx = top - dm + i;
                    r[idx] = (r[idx] + p - c * mi % p) % p;
                }
            }
            r.pop();
            trim(&mut r);
        }
        r
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(&mut out);
        out
    }

    pub fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        rem(&mul(a, b, p), m, p)
    }

    pub fn powmod(base: &[u64], mut k: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = rem(base, m, p);
        while k > 0 {
            if k & 1 == 1 {
                acc = mulmod(&acc, &b, m, p);
            }
            b = mulmod(&b, &b, m, p);
            k >>= 1;
        }
        rem(&acc, m, p)
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut out: Vec<u64> = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(&mut out);
        out
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        x
    }

    pub fn pow_u64(mut b: u64, mut k: u64, p: u64) -> u64 {
        let mut acc = 1u64;
        b %= p;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            k >>= 1;
        }
        acc
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        pow_u64(a, p - 2, p)
    }

    /// Extended Euclid: returns s with s * a = gcd (mod m); the gcd is a unit here.
    pub fn inverse_mod(a: &[u64], m: &[u64], p: u64) -> Option<Vec<u64>> {
        let (mut r0, mut r1) = (m.to_vec(), rem(a, m, p));
        let (mut s0, mut s1): (Vec<u64>, Vec<u64>) = (Vec::new(), vec![1]);
        if r1.is_empty() {
            return None;
        }
        while !r1.is_empty() {
            // quotient of r0 by r1
            let mut quo = vec![0u64; r0.len().saturating_sub(r1.len()) + 1];
            let mut r = r0.clone();
            let d1 = r1.len() - 1;
            let il = inv(r1[d1], p);
            while r.len() > d1 && !r.is_empty() {
                let top = r.len() - 1;
                let c = r[top] * il % p;
                quo[top - d1] = c;
                for (i, &v) in r1.iter().enumerate() {
                    let idx = top - d1 + i;
                    r[idx] = (r[idx] + p - c * v % p) % p;
                }
                r.pop();
                trim(&mut r);
            }
            trim(&mut quo);
            let s2 = sub(&s0, &mul(&quo, &s1, p), p);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r0.len() != 1 {
            return None;
        }
        let c = inv(r0[0], p);
        Some(s0.iter().map(|&x| x * c % p).collect())
    }
}

/// Rabin irreducibility test for a monic polynomial over F_p.
fn is_irreducible_fp(m: &[u64], p: u64) -> bool {
    let n = (m.len() - 1) as u64;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    // x^{p^k} mod m for k = 0..=n
    let mut frob = vec![x.clone()];
    for _ in 0..n {
        let last = frob.last().unwrap();
        frob.push(fp_poly::powmod(last, p, m, p));
    }
    if fp_poly::sub(&frob[n as usize], &x, p) != Vec::<u64>::new() {
        return false;
    }
    for r in prime_factors(n) {
        let k = (n / r) as usize;
        let diff = fp_poly::sub(&frob[k], &x, p);
        let g = fp_poly::gcd(m, &diff, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

impl FieldSpec {
    /// Builds F_{p^e}. Without an explicit modulus and e > 1 the lowest monic
    /// irreducible of degree e in enumeration order is chosen.
    pub fn new(p: u64, e: u32, modulus: Option<&[u64]>) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrime(p));
        }
        if e == 0 {
            return Err(FieldError::DegreeMismatch {
                expected: 1,
                got: 0,
            });
        }
        let q = (p as u128).checked_pow(e).ok_or(FieldError::TooLarge)?;
        if q > MAX_ORDER as u128 {
            return Err(FieldError::TooLarge);
        }
        let modulus: Vec<u64> = match modulus {
            Some(m) => {
                let mut m: Vec<u64> = m.to_vec();
                fp_poly::trim(&mut m);
                if let Some(&c) = m.iter().find(|&&c| c >= p) {
                    return Err(FieldError::CoordinateOutOfRange(c));
                }
                if m.len() != e as usize + 1 {
                    return Err(FieldError::DegreeMismatch {
                        expected: e as usize,
                        got: m.len().saturating_sub(1),
                    });
                }
                if *m.last().unwrap() != 1 {
                    return Err(FieldError::NonMonicModulus);
                }
                if !is_irreducible_fp(&m, p) {
                    return Err(FieldError::ReducibleModulus);
                }
                m
            }
            None if e == 1 => vec![0, 1],
            None => default_modulus(p, e),
        };
        let mut spec = FieldSpec {
            p: p as u32,
            e,
            q: q as u32,
            modulus: modulus.iter().map(|&c| c as u32).collect(),
            tables: None,
        };
        if e > 1 && (q as u64) <= TABLE_LIMIT {
            spec.tables = Some(spec.build_tables());
        }
        Ok(Arc::new(spec))
    }

    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        Self::new(p, 1, None)
    }

    /// F_q from its order, with the default modulus.
    pub fn with_order(q: u64) -> Result<Field, FieldError> {
        let (p, e) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        Self::new(p, e, None)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_odd(&self) -> bool {
        self.p != 2
    }

    /// Defining modulus over F_p, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn zero(&self) -> u32 {
        0
    }

    #[inline]
    pub fn one(&self) -> u32 {
        1
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn coords(&self, a: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.e as usize);
        let mut a = a;
        for _ in 0..self.e {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<u32, FieldError> {
        if coords.len() > self.e as usize {
            return Err(FieldError::DegreeMismatch {
                expected: self.e as usize,
                got: coords.len(),
            });
        }
        let mut acc = 0u64;
        for &c in coords.iter().rev() {
            if c >= self.p {
                return Err(FieldError::CoordinateOutOfRange(c as u64));
            }
            acc = acc * self.p as u64 + c as u64;
        }
        Ok(acc as u32)
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            let s = a + b;
            if s >= self.p {
                s - self.p
            } else {
                s
            }
        } else {
            self.digitwise(a, b, |x, y, p| (x + y) % p)
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            if a >= b {
                a - b
            } else {
                a + self.p - b
            }
        } else {
            self.digitwise(a, b, |x, y, p| (x + p - y) % p)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.sub(0, a)
    }

    fn digitwise(&self, mut a: u32, mut b: u32, f: impl Fn(u32, u32, u32) -> u32) -> u32 {
        let p = self.p;
        let mut out = 0u32;
        let mut scale = 1u32;
        for _ in 0..self.e {
            out += f(a % p, b % p, p) * scale;
            a /= p;
            b /= p;
            scale = scale.wrapping_mul(p);
        }
        out
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.tables {
            Some(t) => {
                let n = self.q as u64 - 1;
                let k = (t.log[a as usize] as u64 + t.log[b as usize] as u64) % n;
                t.exp[k as usize]
            }
            None => self.mul_slow(a, b),
        }
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let m: Vec<u64> = self.modulus.iter().map(|&c| c as u64).collect();
        let x: Vec<u64> = self.coords(a).into_iter().map(u64::from).collect();
        let y: Vec<u64> = self.coords(b).into_iter().map(u64::from).collect();
        let r = fp_poly::mulmod(&x, &y, &m, p);
        self.pack(&r)
    }

    fn pack(&self, r: &[u64]) -> u32 {
        let mut acc = 0u64;
        for &c in r.iter().rev() {
            acc = acc * self.p as u64 + c;
        }
        acc as u32
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        if self.e == 1 {
            return Some(fp_poly::inv(a as u64, self.p as u64) as u32);
        }
        match &self.tables {
            Some(t) => {
                let n = self.q - 1;
                Some(t.exp[((n - t.log[a as usize]) % n) as usize])
            }
            None => Some(self.inv_euclid(a)),
        }
    }

    /// Inverse through the extended Euclidean algorithm on the modulus.
    pub(crate) fn inv_euclid(&self, a: u32) -> u32 {
        let p = self.p as u64;
        let m: Vec<u64> = self.modulus.iter().map(|&c| c as u64).collect();
        let x: Vec<u64> = self.coords(a).into_iter().map(u64::from).collect();
        let s = fp_poly::inverse_mod(&x, &m, p).expect("nonzero element is invertible");
        self.pack(&s)
    }

    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|ib| self.mul(a, ib))
    }

    pub fn pow(&self, a: u32, mut k: u64) -> u32 {
        let mut acc = 1u32;
        let mut b = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            k >>= 1;
        }
        acc
    }

    /// Euler criterion `a^{(q-1)/2}`.
    pub fn square_class(&self, a: u32) -> Result<SquareClass, FieldError> {
        if !self.is_odd() {
            return Err(FieldError::EvenCharacteristic);
        }
        if a == 0 {
            return Ok(SquareClass::Zero);
        }
        let t = self.pow(a, (self.q as u64 - 1) / 2);
        Ok(if t == 1 {
            SquareClass::Square
        } else {
            SquareClass::Nonsquare
        })
    }

    /// Quadratic character of F_q as +1/0/-1. Caller guarantees odd characteristic.
    #[inline]
    pub(crate) fn legendre(&self, a: u32) -> i32 {
        if a == 0 {
            return 0;
        }
        if self.pow(a, (self.q as u64 - 1) / 2) == 1 {
            1
        } else {
            -1
        }
    }

    /// `a^{1/p}`, the inverse of Frobenius.
    pub fn pth_root(&self, a: u32) -> u32 {
        self.pow(a, (self.q / self.p) as u64)
    }

    /// All raw element indices in enumeration order.
    pub fn raw_elements(&self) -> std::ops::Range<u32> {
        0..self.q
    }

    pub fn display_elem(&self, a: u32) -> String {
        if self.e == 1 {
            a.to_string()
        } else {
            let c: Vec<String> = self.coords(a).iter().map(|x| x.to_string()).collect();
            format!("[{}]", c.join(","))
        }
    }

    fn build_tables(&self) -> ZechTables {
        let q = self.q as u64;
        let n = q - 1;
        let factors = prime_factors(n);
        let slow_pow = |a: u32, mut k: u64| {
            let mut acc = 1u32;
            let mut b = a;
            while k > 0 {
                if k & 1 == 1 {
                    acc = self.mul_slow(acc, b);
                }
                b = self.mul_slow(b, b);
                k >>= 1;
            }
            acc
        };
        let gen = (2..self.q)
            .find(|&g| factors.iter().all(|&r| slow_pow(g, n / r) != 1))
            .expect("multiplicative group is cyclic");
        let mut exp = vec![0u32; n as usize];
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = cur;
            log[cur as usize] = i as u32;
            cur = self.mul_slow(cur, gen);
        }
        ZechTables { log, exp }
    }
}

fn default_modulus(p: u64, e: u32) -> Vec<u64> {
    // Monic degree-e candidates in enumeration order: the index k encodes the lower
    // coefficients with the constant term least significant.
    let count = p.pow(e);
    for k in 0..count {
        let mut m = Vec::with_capacity(e as usize + 1);
        let mut r = k;
        for _ in 0..e {
            m.push(r % p);
            r /= p;
        }
        m.push(1);
        if is_irreducible_fp(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// An element of a specific field.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    value: u32,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.display_elem(self.value))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.display_elem(self.value))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && same_field(&self.field, &other.field)
    }
}

impl Eq for FieldElement {}

pub(crate) fn same_field(a: &Field, b: &Field) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl FieldElement {
    pub fn new(field: &Field, value: u32) -> Result<Self, FieldError> {
        if value >= field.q {
            return Err(FieldError::CoordinateOutOfRange(value as u64));
        }
        Ok(Self {
            field: field.clone(),
            value,
        })
    }

    pub fn from_coords(field: &Field, coords: &[u32]) -> Result<Self, FieldError> {
        let value = field.from_coords(coords)?;
        Ok(Self {
            field: field.clone(),
            value,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Packed index of the element.
    pub fn value(&self) -> u32 {
        self.value
    }

    /// Coordinates in the power basis of the modulus.
    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coords(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if same_field(&self.field, &other.field) {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    fn with(&self, value: u32) -> Self {
        Self {
            field: self.field.clone(),
            value,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        let v = self
            .field
            .div(self.value, other.value)
            .ok_or(FieldError::DivisionByZero)?;
        Ok(self.with(v))
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        let v = self
            .field
            .inv(self.value)
            .ok_or(FieldError::DivisionByZero)?;
        Ok(self.with(v))
    }

    pub fn pow(&self, k: u64) -> Self {
        self.with(self.field.pow(self.value, k))
    }

    pub fn square_class(&self) -> Result<SquareClass, FieldError> {
        self.field.square_class(self.value)
    }
}

/// All elements of the field, 0 first.
pub fn elements(field: &Field) -> impl Iterator<Item = FieldElement> + '_ {
    field.raw_elements().map(move |v| FieldElement {
        field: field.clone(),
        value: v,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.q(), 5);
        assert_eq!(f5.mul(3, 4), 2);
        assert_eq!(f5.pow(2, 4), 1);
        assert_eq!(f5.modulus(), &[0, 1]);
    }

    #[test]
    fn composite_characteristic_rejected() {
        assert_eq!(FieldSpec::prime(4).unwrap_err(), FieldError::NonPrime(4));
        assert_eq!(
            FieldSpec::with_order(6).unwrap_err(),
            FieldError::NotPrimePower(6)
        );
    }

    #[test]
    fn f9_default_modulus_is_t2_plus_1() {
        // T^2 has root 0; T^2+1 has no root mod 3 (0,1,2 -> 1,2,2).
        for t in 0..3u64 {
            assert_ne!((t * t + 1) % 3, 0);
        }
        let f9 = FieldSpec::with_order(9).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        let t = f9.from_coords(&[0, 1]).unwrap();
        assert_eq!(f9.mul(t, t), f9.from_int(-1));
        assert_eq!(f9.mul(t, t), 2);
    }

    #[test]
    fn modulus_validation() {
        assert_eq!(
            FieldSpec::new(3, 2, Some(&[2, 0, 1])).unwrap_err(),
            FieldError::ReducibleModulus
        );
        assert_eq!(
            FieldSpec::new(3, 2, Some(&[1, 1])).unwrap_err(),
            FieldError::DegreeMismatch {
                expected: 2,
                got: 1
            }
        );
        assert_eq!(
            FieldSpec::new(3, 2, Some(&[1, 0, 2])).unwrap_err(),
            FieldError::NonMonicModulus
        );
    }

    #[test]
    fn euclid_inverse_matches_tables() {
        let f = FieldSpec::with_order(49).unwrap();
        for a in 1..49 {
            assert_eq!(f.inv(a), Some(f.inv_euclid(a)));
        }
    }

    #[test]
    fn large_extension_uses_slow_path() {
        // 3^11 = 177147 > table limit
        let f = FieldSpec::new(3, 11, None).unwrap();
        assert!(f.tables.is_none());
        let a = 12345;
        let ia = f.inv(a).unwrap();
        assert_eq!(f.mul(a, ia), 1);
        assert_eq!(f.pow(a, f.q() as u64 - 1), 1);
    }

    #[test]
    fn square_classes() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.square_class(4).unwrap(), SquareClass::Square);
        assert_eq!(f5.square_class(2).unwrap(), SquareClass::Nonsquare);
        assert_eq!(f5.square_class(0).unwrap(), SquareClass::Zero);
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(
            f2.square_class(1).unwrap_err(),
            FieldError::EvenCharacteristic
        );
    }

    #[test]
    fn mismatched_fields_refuse_arithmetic() {
        let f5 = FieldSpec::prime(5).unwrap();
        let f7 = FieldSpec::prime(7).unwrap();
        let a = FieldElement::new(&f5, 1).unwrap();
        let b = FieldElement::new(&f7, 1).unwrap();
        assert_eq!(a.add(&b).unwrap_err(), FieldError::FieldMismatch);
        let z = FieldElement::new(&f5, 0).unwrap();
        assert_eq!(a.div(&z).unwrap_err(), FieldError::DivisionByZero);
    }

    #[test]
    fn enumeration_order() {
        let f5 = FieldSpec::prime(5).unwrap();
        let v: Vec<u32> = elements(&f5).map(|x| x.value()).collect();
        assert_eq!(v, vec![0, 1, 2, 3, 4]);
        let f9 = FieldSpec::with_order(9).unwrap();
        let all: Vec<_> = elements(&f9).collect();
        assert_eq!(all.len(), 9);
        assert!(all[0].is_zero());
        assert_eq!(all[1].coeffs(), vec![1, 0]);
        assert_eq!(all[3].coeffs(), vec![0, 1]);
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(5), Some((5, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
