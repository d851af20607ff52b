use std::f64::consts::{PI, TAU};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::qpoly::{self, QPoly};
use super::roots::aberth;
use super::{LPolynomial, OrderConfidence, SpecialValue, ZetaError};

/// Relative tolerance for deciding that `L` vanishes at a generic point.
const ZERO_TOL: f64 = 1e-9;

/// Bound on `| |root| sqrt(q) - 1 |` for the RH check to pass.
const RH_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WeilReport {
    pub funceq: bool,
    pub rh: bool,
    pub max_root_deviation: f64,
}

/// Where `u0 = q^{-s}` sits relative to the exactly handled points.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Point {
    One,
    InvQ,
    /// `u0 = sign * q^{-1/2}`.
    Central(i32),
    Generic,
}

fn near_integer(x: f64) -> Option<i64> {
    let r = x.round();
    ((x - r).abs() <= 1e-12 * x.abs().max(1.0)).then_some(r as i64)
}

fn locate(q: u64, s: Complex64) -> Point {
    let lq = (q as f64).ln();
    if s.re == 0.0 && near_integer(s.im * lq / TAU).is_some() {
        Point::One
    } else if s.re == 1.0 && near_integer(s.im * lq / TAU).is_some() {
        Point::InvQ
    } else if s.re == 0.5 {
        match near_integer(s.im * lq / PI) {
            Some(k) if k % 2 == 0 => Point::Central(1),
            Some(_) => Point::Central(-1),
            None => Point::Generic,
        }
    } else {
        Point::Generic
    }
}

pub(crate) fn exact_sqrt(q: u64) -> Option<u64> {
    let r = (q as f64).sqrt().round() as u64;
    (r.checked_mul(r) == Some(q)).then_some(r)
}

fn u_of(q: u64, s: Complex64) -> Complex64 {
    (-s * (q as f64).ln()).exp()
}

fn denominator(q: u64, u: Complex64) -> Complex64 {
    (Complex64::new(1.0, 0.0) - u) * (Complex64::new(1.0, 0.0) - u * q as f64)
}

/// `zeta_K(s) = L(q^{-s}) / ((1 - q^{-s})(1 - q^{1-s}))`.
pub fn zeta_eval(l: &LPolynomial, s: Complex64) -> Result<Complex64, ZetaError> {
    match locate(l.q(), s) {
        Point::One | Point::InvQ => Err(ZetaError::PoleAt(s)),
        _ => {
            let u = u_of(l.q(), s);
            Ok(l.eval(u) / denominator(l.q(), u))
        }
    }
}

/// `xi_K(s) = q^{(g-1)s} zeta_K(s)`, symmetric under `s -> 1 - s`.
pub fn xi_eval(l: &LPolynomial, s: Complex64) -> Result<Complex64, ZetaError> {
    let z = zeta_eval(l, s)?;
    let w = (s * ((l.genus() as f64 - 1.0) * (l.q() as f64).ln())).exp();
    Ok(w * z)
}

fn qint(n: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Largest `k` with `f^k | a`, and the cofactor.
fn multiplicity(a: &QPoly, f: &QPoly) -> (i32, QPoly) {
    let mut k = 0;
    let mut cur = a.clone();
    loop {
        let (quo, rem) = qpoly::divrem(&cur, f);
        if !rem.is_empty() {
            return (k, cur);
        }
        cur = quo;
        k += 1;
    }
}

fn eval_q(a: &QPoly, u: &BigRational) -> BigRational {
    a.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * u + c)
}

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().expect("finite")
}

/// Order `m` and leading coefficient of `zeta_K` at `s`.
///
/// With `u0 = q^{-s}` and `zeta = F(u) = (u - u0)^m G(u)`, the leading coefficient
/// in the `s`-variable is `(-u0 log q)^m G(u0)`.
pub fn zeta_special_value(l: &LPolynomial, s: Complex64) -> SpecialValue {
    let q = l.q();
    let lq = (q as f64).ln();
    let lpoly = qpoly::from_ints(l.coeffs());
    let c1 = Complex64::new(1.0, 0.0);
    let (order, u0, g_at_u0, confidence) = match locate(q, s) {
        Point::One => {
            let (k, rest) = multiplicity(&lpoly, &qpoly::from_ints(&[-1, 1]));
            // F = (u-1)^{k-1} * (-rest(u) / (1 - q u))
            let g = -eval_q(&rest, &qint(1)) / qint(1 - q as i128);
            (
                k - 1,
                c1,
                Complex64::new(to_f64(&g), 0.0),
                OrderConfidence::Exact,
            )
        }
        Point::InvQ => {
            let (k, rest) = multiplicity(&lpoly, &qpoly::from_ints(&[-1, q as i128]));
            // (q u - 1)^k = q^k (u - 1/q)^k; F = (u-1/q)^{k-1} * (-q^{k-1} rest(u) / (1 - u))
            let u0 = BigRational::new(BigInt::from(1), BigInt::from(q));
            let scale = BigRational::from_integer(BigInt::from(q)).pow(k - 1);
            let g = -scale * eval_q(&rest, &u0) / (qint(1) - &u0);
            (
                k - 1,
                Complex64::new(1.0 / q as f64, 0.0),
                Complex64::new(to_f64(&g), 0.0),
                OrderConfidence::Exact,
            )
        }
        Point::Central(sign) => {
            let u0 = sign as f64 / (q as f64).sqrt();
            let (k, rest, lead) = match exact_sqrt(q) {
                Some(r) => {
                    let (k, rest) =
                        multiplicity(&lpoly, &qpoly::from_ints(&[-sign as i128, r as i128]));
                    (k, rest, (r as f64).powi(k))
                }
                None => {
                    let (k, rest) = multiplicity(&lpoly, &qpoly::from_ints(&[-1, 0, q as i128]));
                    (k, rest, (q as f64 * 2.0 * u0).powi(k))
                }
            };
            let u = Complex64::new(u0, 0.0);
            let rest_c = qpoly::eval_c(&qpoly::to_complex(&rest), u);
            let g = rest_c * lead / denominator(q, u);
            (k, u, g, OrderConfidence::Exact)
        }
        Point::Generic => {
            let u0 = u_of(q, s);
            let value = l.eval(u0);
            let scale: f64 = l
                .coeffs()
                .iter()
                .enumerate()
                .map(|(n, &c)| (c as f64).abs() * u0.norm().powi(n as i32))
                .sum();
            if value.norm() > ZERO_TOL * scale {
                (0, u0, value / denominator(q, u0), OrderConfidence::Exact)
            } else {
                let (m, g) = numeric_order(l, &lpoly, u0);
                (m, u0, g / denominator(q, u0), OrderConfidence::Numeric)
            }
        }
    };
    let leading = (-u0 * lq).powi(order) * g_at_u0;
    SpecialValue {
        at: s,
        order,
        leading,
        confidence,
    }
}

/// Multiplicity of the numeric zero `u0` and `L(u) / (u - u0)^m` at `u0`, read off the
/// exact squarefree decomposition of `L`.
fn numeric_order(l: &LPolynomial, lpoly: &QPoly, u0: Complex64) -> (i32, Complex64) {
    let parts = qpoly::squarefree_parts(lpoly);
    let lc = *l.coeffs().last().expect("nonempty") as f64;
    let rel = |p: &[Complex64]| {
        let v = qpoly::eval_c(p, u0).norm();
        let s: f64 = p
            .iter()
            .enumerate()
            .map(|(n, c)| c.norm() * u0.norm().powi(n as i32))
            .sum();
        v / s
    };
    let complex_parts: Vec<(Vec<Complex64>, u32)> = parts
        .iter()
        .map(|(p, i)| (qpoly::to_complex(p), *i))
        .collect();
    let (hit, _) = complex_parts
        .iter()
        .enumerate()
        .map(|(j, (p, _))| (j, rel(p)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("a zero implies a nonconstant factor");
    let mut g = Complex64::new(lc, 0.0);
    let mut m = 0;
    for (j, (p, i)) in complex_parts.iter().enumerate() {
        if j == hit {
            m = *i as i32;
            g *= qpoly::eval_c(&qpoly::derivative_c(p), u0).powi(*i as i32);
        } else {
            g *= qpoly::eval_c(p, u0).powi(*i as i32);
        }
    }
    (m, g)
}

/// `h_K = L(1)`, with `L(1/q) = h q^{-g}` confirmed in exact rationals.
pub fn class_number(l: &LPolynomial) -> Result<u128, ZetaError> {
    let h: i128 = l.coeffs().iter().sum();
    if h <= 0 {
        return Err(ZetaError::NonPositiveClassNumber(h));
    }
    let q = BigInt::from(l.q());
    let g = l.genus();
    // q^{2g} L(1/q) = sum c_n q^{2g-n} must equal h q^g.
    let lhs: BigInt = l
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, &c)| BigInt::from(c) * q.pow((2 * g - n) as u32))
        .sum();
    if lhs != BigInt::from(h) * q.pow(g as u32) {
        return Err(ZetaError::ClassNumberIdentity);
    }
    Ok(h as u128)
}

/// Roots of `L` with multiplicities.
pub fn roots_of(l: &LPolynomial) -> Vec<(Complex64, u32)> {
    let radius = (l.q() as f64).powf(-0.5);
    let mut out = Vec::new();
    for (part, mult) in qpoly::squarefree_parts(&qpoly::from_ints(l.coeffs())) {
        for r in aberth(&qpoly::to_complex(&part), radius) {
            out.push((r, mult));
        }
    }
    out.sort_by(|a, b| a.0.arg().total_cmp(&b.0.arg()));
    out
}

pub fn check_weil_package(l: &LPolynomial) -> WeilReport {
    let sq = (l.q() as f64).sqrt();
    let max_root_deviation = roots_of(l)
        .iter()
        .map(|(r, _)| (r.norm() * sq - 1.0).abs())
        .fold(0.0, f64::max);
    WeilReport {
        funceq: l.satisfies_funceq(),
        rh: max_root_deviation < RH_TOL,
        max_root_deviation,
    }
}

/// `b_0..b_n` from `L(u) / ((1 - u)(1 - q u)) = sum b_k u^k`.
pub fn effective_divisor_counts(l: &LPolynomial, n: usize) -> Vec<BigInt> {
    let q = BigInt::from(l.q());
    let q1 = &q + 1;
    let mut b: Vec<BigInt> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut v = BigInt::from(l.coeffs().get(k).copied().unwrap_or(0));
        if k >= 1 {
            v += &q1 * &b[k - 1];
        }
        if k >= 2 {
            v -= &q * &b[k - 2];
        }
        b.push(v);
    }
    b
}

/// Exact test for `L(q^{-1/2}) = 0`: divisibility by `q u^2 - 1`, or by `r u - 1`
/// when `q = r^2`.
pub fn central_value_is_zero(l: &LPolynomial) -> bool {
    let q = l.q();
    let divisor = match exact_sqrt(q) {
        Some(r) => qpoly::from_ints(&[-1, r as i128]),
        None => qpoly::from_ints(&[-1, 0, q as i128]),
    };
    qpoly::divrem(&qpoly::from_ints(l.coeffs()), &divisor)
        .1
        .is_empty()
}
