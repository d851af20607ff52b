//! Slice-level kernels over F_q. Polynomials are `&[u32]` of element indices,
//! constant term first and trimmed; the empty slice is zero.

use crate::ffield::FieldSpec;

#[inline]
pub(crate) fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn add(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, &s) in out.iter_mut().zip(short) {
        *o = f.add(*o, s);
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out: Vec<u32> = (0..n)
        .map(|i| {
            f.sub(
                a.get(i).copied().unwrap_or(0),
                b.get(i).copied().unwrap_or(0),
            )
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn scale(f: &FieldSpec, a: &[u32], c: u32) -> Vec<u32> {
    let mut out: Vec<u32> = a.iter().map(|&x| f.mul(x, c)).collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    if f.e() == 1 {
        let p = f.p() as u64;
        let mut acc = vec![0u64; out.len()];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                acc[i + j] = (acc[i + j] + x as u64 * y as u64) % p;
            }
        }
        for (o, v) in out.iter_mut().zip(acc) {
            *o = v as u32;
        }
    } else {
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
    }
    trim(&mut out);
    out
}

/// Reduces `a` modulo nonzero `m` in place.
pub(crate) fn rem_in_place(f: &FieldSpec, a: &mut Vec<u32>, m: &[u32]) {
    let dm = m.len() - 1;
    let lead = m[dm];
    let inv_lead = if lead == 1 {
        1
    } else {
        f.inv(lead).expect("nonzero leading coefficient")
    };
    trim(a);
    while a.len() > dm {
        let top = a.len() - 1;
        let c = f.mul(a[top], inv_lead);
        if c != 0 {
            let shift = top - dm;
            for (i, &mi) in m.iter().enumerate() {
                a[shift + i] = f.sub(a[shift + i], f.mul(c, mi));
            }
        }
        a.pop();
        trim(a);
    }
}

pub(crate) fn divrem(f: &FieldSpec, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let db = b.len() - 1;
    if a.len() <= db {
        return (Vec::new(), a.to_vec());
    }
    let inv_lead = f.inv(b[db]).expect("nonzero leading coefficient");
    let mut r = a.to_vec();
    let mut q = vec![0u32; a.len() - db];
    while r.len() > db {
        let top = r.len() - 1;
        let c = f.mul(r[top], inv_lead);
        let shift = top - db;
        q[shift] = c;
        if c != 0 {
            for (i, &bi) in b.iter().enumerate() {
                r[shift + i] = f.sub(r[shift + i], f.mul(c, bi));
            }
        }
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Exact division; the caller guarantees `b | a`.
pub(crate) fn div_exact(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
    let (q, r) = divrem(f, a, b);
    debug_assert!(r.is_empty());
    q
}

pub(crate) fn mulmod(f: &FieldSpec, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
    let mut out = mul(f, a, b);
    rem_in_place(f, &mut out, m);
    out
}

pub(crate) fn powmod(f: &FieldSpec, base: &[u32], mut k: u64, m: &[u32]) -> Vec<u32> {
    let mut acc = vec![1u32];
    rem_in_place(f, &mut acc, m);
    let mut b = base.to_vec();
    rem_in_place(f, &mut b, m);
    while k > 0 {
        if k & 1 == 1 {
            acc = mulmod(f, &acc, &b, m);
        }
        k >>= 1;
        if k > 0 {
            b = mulmod(f, &b, &b, m);
        }
    }
    acc
}

pub(crate) fn make_monic(f: &FieldSpec, a: &[u32]) -> (u32, Vec<u32>) {
    let lc = *a.last().expect("nonzero polynomial");
    if lc == 1 {
        return (1, a.to_vec());
    }
    let il = f.inv(lc).expect("nonzero");
    (lc, scale(f, a, il))
}

/// Monic gcd; returns the empty vector only when both inputs are zero.
pub(crate) fn gcd(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        rem_in_place(f, &mut x, &y);
        std::mem::swap(&mut x, &mut y);
    }
    if x.is_empty() {
        x
    } else {
        make_monic(f, &x).1
    }
}

pub(crate) fn derivative(f: &FieldSpec, a: &[u32]) -> Vec<u32> {
    let mut out: Vec<u32> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| f.mul(c, f.from_int(i as i64)))
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn eval(f: &FieldSpec, a: &[u32], x: u32) -> u32 {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// `a(s T + t)`.
pub(crate) fn compose_affine(f: &FieldSpec, a: &[u32], s: u32, t: u32) -> Vec<u32> {
    let lin = [t, s];
    let mut out: Vec<u32> = Vec::new();
    for &c in a.iter().rev() {
        out = mul(f, &out, &lin);
        out = add(f, &out, &[c]);
    }
    trim(&mut out);
    out
}

pub(crate) fn is_one(a: &[u32]) -> bool {
    a == [1]
}
