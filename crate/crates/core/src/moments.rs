//! Shifted second moments of quadratic L-functions over `H_{2g+1}`.
//!
//! For a shift pair `C = (g1, g2)` the shifted divisor function is
//! `tau_C(f) = sum_{f = f1 f2} |f1|^{-g1} |f2|^{-g2}` over monic factorizations.
//! The mean of `|L(1/2 + alpha, chi_D)|^2` over `H_{2g+1}` tends to the Euler product
//!
//! ```text
//! C_alpha = prod_P [ 1 + (1 + 1/|P|)^{-1} sum_{l >= 1} tau_{alpha, conj alpha}(P^{2l}) / |P|^l ]
//! ```
//!
//! which this module truncates at a prime degree `N` with an explicit tail bound.
//! Ensemble sums are collected in enumeration order and reduced pairwise, so every
//! reported mean is independent of the rayon thread count.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::ffield::Field;
use crate::polyring::{
    factor, irreducible_count, irreducible_table, jacobi_raw, monic_raw_index, quadratic_character,
    squarefree_monic_list, Poly, PolyError,
};
use crate::summation::{pairwise_sum, pairwise_sum_complex};
use crate::zetafn::{lpoly_via_splitting, CurveModel, LPolynomial, ZetaError};

/// Default truncation degree for Euler products.
pub const DEFAULT_TRUNCATION: usize = 12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MomentsError {
    #[error("parameter outside the convergence range: {0}")]
    DivergentParameter(String),
    #[error("zeta_q(1 + {0}) has a pole")]
    PoleInPrediction(Complex64),
    #[error("q = {0} is not 1 mod 4")]
    WrongCongruence(u64),
    #[error("q must be odd")]
    EvenCharacteristic,
    #[error("enumeration of {needed} items exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("f is a constant times a square, so chi_f is trivial")]
    TrivialCharacter,
    #[error("need n < deg f, got n = {n} with deg f = {deg}")]
    DegreeOutOfRange { n: usize, deg: usize },
    #[error("f must be monic")]
    NonMonic,
    #[error("truncation degree must be at least 1")]
    ZeroTruncation,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
}

/// Ordered pair of shifts `(g1, g2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShiftSet {
    pub gamma1: Complex64,
    pub gamma2: Complex64,
}

impl ShiftSet {
    pub fn new(gamma1: Complex64, gamma2: Complex64) -> Self {
        Self { gamma1, gamma2 }
    }

    /// `(alpha, conj alpha)`, the second-moment shifts.
    pub fn conjugate_pair(alpha: Complex64) -> Self {
        Self::new(alpha, alpha.conj())
    }

    pub fn negated(&self) -> Self {
        Self::new(-self.gamma1, -self.gamma2)
    }

    /// `tau_C(P^m)` for a prime of norm `x`.
    pub fn tau_prime_power(&self, x: f64, m: u32) -> Complex64 {
        let lx = x.ln();
        (0..=m)
            .map(|j| (-(self.gamma1 * j as f64 + self.gamma2 * (m - j) as f64) * lx).exp())
            .sum()
    }

    /// `sum_{l >= 1} tau_C(P^{2l}) x^{-l}`, summed until the terms are negligible.
    fn even_power_series(&self, x: f64) -> Complex64 {
        let lx = x.ln();
        let mut sum = Complex64::new(0.0, 0.0);
        for l in 1..=4096u32 {
            let m = 2 * l;
            let term: Complex64 = (0..=m)
                .map(|j| {
                    (-(self.gamma1 * j as f64 + self.gamma2 * (m - j) as f64 + l as f64) * lx).exp()
                })
                .sum();
            sum += term;
            if term.norm() <= 1e-18 * sum.norm().max(1e-300) {
                break;
            }
        }
        sum
    }
}

/// `tau_C(f)` for monic nonzero `f`, multiplicative over its prime-power factors.
pub fn tau(c: &ShiftSet, f: &Poly) -> Result<Complex64, MomentsError> {
    if !f.is_monic() {
        return Err(MomentsError::NonMonic);
    }
    let q = f.field().q() as f64;
    Ok(factor(f)?
        .factors
        .iter()
        .map(|(p, m)| c.tau_prime_power(q.powi(p.degree().expect("prime") as i32), *m))
        .product())
}

/// Truncated `C_alpha` with its certified log-tail bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EulerProduct {
    pub value: f64,
    pub log_value: f64,
    pub truncation_deg: usize,
    /// `sup_d |log F_closed(q^d) - log F_series(q^d)|` over the included degrees.
    pub form_discrepancy: f64,
    /// Upper bound on `|log C_alpha - log value|`.
    pub log_tail_bound: f64,
    pub tail_note: String,
}

fn bracket_closed(x: f64, alpha: Complex64) -> f64 {
    let z = (-(alpha + 0.5) * x.ln()).exp();
    let one = Complex64::new(1.0, 0.0);
    let minus = 1.0 / (one - z).norm_sqr();
    let plus = 1.0 / (one + z).norm_sqr();
    (0.5 * (minus + plus) + 1.0 / x) / (1.0 + 1.0 / x)
}

fn bracket_series(x: f64, alpha: Complex64) -> f64 {
    let s = ShiftSet::conjugate_pair(alpha).even_power_series(x);
    1.0 + s.re / (1.0 + 1.0 / x)
}

/// `C_alpha` over monic irreducibles of degree `<= n`.
pub fn c_alpha_euler_product(
    q: u64,
    alpha: Complex64,
    n: usize,
) -> Result<EulerProduct, MomentsError> {
    if alpha.re <= 0.0 || !alpha.re.is_finite() {
        return Err(MomentsError::DivergentParameter(format!(
            "Re(alpha) = {} must be positive",
            alpha.re
        )));
    }
    if n == 0 {
        return Err(MomentsError::ZeroTruncation);
    }
    let qf = q as f64;
    let mut log_value = 0.0;
    let mut discrepancy = 0.0f64;
    for d in 1..=n {
        let x = qf.powi(d as i32);
        let closed = bracket_closed(x, alpha).ln();
        let series = bracket_series(x, alpha).ln();
        discrepancy = discrepancy.max((closed - series).abs());
        log_value += irreducible_count(q, d as u32) as f64 * closed;
    }
    let a = alpha.re;
    let r0 = qf.powf(-((n + 1) as f64) * (1.0 + 2.0 * a));
    let k = 3.0 / (1.0 - r0).powi(2);
    let log_tail_bound = if k * r0 < 1.0 {
        let degree_sum =
            qf.powf(-2.0 * a * (n + 1) as f64) / ((n + 1) as f64 * (1.0 - qf.powf(-2.0 * a)));
        k * degree_sum / (1.0 - k * r0)
    } else {
        f64::INFINITY
    };
    Ok(EulerProduct {
        value: log_value.exp(),
        log_value,
        truncation_deg: n,
        form_discrepancy: discrepancy,
        log_tail_bound,
        tail_note: format!(
            "primes of degree >= {} omitted; |log tail| <= {:.3e}",
            n + 1,
            log_tail_bound
        ),
    })
}

fn zeta_q_shift(q: f64, x: Complex64) -> Result<Complex64, MomentsError> {
    let den = Complex64::new(1.0, 0.0) - (-x * q.ln()).exp();
    if den.norm() < 1e-12 {
        return Err(MomentsError::PoleInPrediction(x));
    }
    Ok(den.inv())
}

/// `S_C = A_C(1) prod_{i <= j} zeta_q(1 + g_i + g_j)` with `A_C` truncated at degree `n`.
fn s_term(q: u64, c: &ShiftSet, n: usize) -> Result<Complex64, MomentsError> {
    let qf = q as f64;
    let pairs = [
        c.gamma1 + c.gamma1,
        c.gamma1 + c.gamma2,
        c.gamma2 + c.gamma2,
    ];
    let mut zeta = Complex64::new(1.0, 0.0);
    for &x in &pairs {
        zeta *= zeta_q_shift(qf, x)?;
    }
    let one = Complex64::new(1.0, 0.0);
    let mut log_a = Complex64::new(0.0, 0.0);
    for d in 1..=n {
        let x = qf.powi(d as i32);
        let lx = x.ln();
        let mut local: Complex64 = pairs
            .iter()
            .map(|&s| one - (-(s + 1.0) * lx).exp())
            .product();
        local *= one + c.even_power_series(x) / (1.0 + 1.0 / x);
        log_a += local.ln() * irreducible_count(q, d as u32) as f64;
    }
    Ok(log_a.exp() * zeta)
}

/// Two-shift main term `sum_{A' subset A} q^{-2g sum A'} S_{(A - A') + (-A')}`.
pub fn predicted_shifted_moment(
    q: u64,
    g: usize,
    alpha1: Complex64,
    alpha2: Complex64,
    n: usize,
) -> Result<Complex64, MomentsError> {
    for a in [alpha1, alpha2] {
        if a.re == 0.0 || a.re.abs() >= 0.5 || !a.re.is_finite() {
            return Err(MomentsError::DivergentParameter(format!(
                "need 0 < |Re(alpha)| < 1/2, got {a}"
            )));
        }
    }
    if n == 0 {
        return Err(MomentsError::ZeroTruncation);
    }
    let lq = (q as f64).ln();
    let weight = |x: Complex64| (-(x * 2.0 * g as f64) * lq).exp();
    let zero = Complex64::new(0.0, 0.0);
    let terms = [
        (ShiftSet::new(alpha1, alpha2), zero),
        (ShiftSet::new(-alpha1, alpha2), alpha1),
        (ShiftSet::new(alpha1, -alpha2), alpha2),
        (ShiftSet::new(-alpha1, -alpha2), alpha1 + alpha2),
    ];
    // A_C(1) as a product over primes converges iff Re(g1 + g2) > -1/2.
    if let Some((c, _)) = terms.iter().find(|(c, _)| (c.gamma1 + c.gamma2).re <= -0.5) {
        return Err(MomentsError::DivergentParameter(format!(
            "Euler product for shifts ({}, {}) diverges: Re(g1 + g2) <= -1/2",
            c.gamma1, c.gamma2
        )));
    }
    let mut total = zero;
    for (c, shift) in terms {
        total += weight(shift) * s_term(q, &c, n)?;
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MomentReport {
    pub q: u64,
    pub g: usize,
    pub alpha: Complex64,
    pub curves: u64,
    pub empirical: f64,
    pub predicted: f64,
    pub truncation_deg: usize,
    pub tail_flag: String,
    pub ratio: f64,
}

fn check_budget(needed: u128, budget: u64) -> Result<(), MomentsError> {
    if needed > budget as u128 {
        Err(MomentsError::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

pub(crate) fn squarefree_monic(
    field: &Field,
    n: usize,
    budget: u64,
) -> Result<Vec<Poly>, MomentsError> {
    let total = (field.q() as u128)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX);
    check_budget(total, budget)?;
    Ok(squarefree_monic_list(field, n))
}

fn ensemble_lpolys(field: &Field, g: usize, budget: u64) -> Result<Vec<LPolynomial>, MomentsError> {
    let ds = squarefree_monic(field, 2 * g + 1, budget)?;
    let table = irreducible_table(field, g, budget)?;
    let ls: Result<Vec<_>, ZetaError> = ds
        .into_par_iter()
        .map(|d| lpoly_via_splitting(&CurveModel::new(d)?, &table))
        .collect();
    Ok(ls?)
}

/// Exhaustive mean of `|L(1/2 + alpha, chi_D)|^2` over `H_{2g+1}` against `C_alpha`.
pub fn second_moment_exhaustive(
    field: &Field,
    g: usize,
    alpha: Complex64,
    trunc: usize,
    budget: u64,
) -> Result<MomentReport, MomentsError> {
    let q = field.q() as u64;
    if q % 4 != 1 {
        return Err(MomentsError::WrongCongruence(q));
    }
    let predicted = c_alpha_euler_product(q, alpha, trunc)?;
    let ls = ensemble_lpolys(field, g, budget)?;
    let u = (-(alpha + 0.5) * (q as f64).ln()).exp();
    let values: Vec<f64> = ls.par_iter().map(|l| l.eval(u).norm_sqr()).collect();
    let empirical = pairwise_sum(&values) / values.len() as f64;
    let mut tail_flag = predicted.tail_note.clone();
    if alpha.re >= 0.5 && q <= 16 {
        tail_flag.push_str("; Re(alpha) >= 1/2 with q <= 16: the error term need not decay, convergence not asserted");
    }
    Ok(MomentReport {
        q,
        g,
        alpha,
        curves: values.len() as u64,
        empirical,
        predicted: predicted.value,
        truncation_deg: trunc,
        tail_flag,
        ratio: empirical / predicted.value,
    })
}

/// Both sides of the approximate functional equation for `|L(1/2 + alpha, chi_D)|^2`.
pub fn approx_funceq_eval(
    curve: &CurveModel,
    alpha: Complex64,
    budget: u64,
) -> Result<(f64, f64), MomentsError> {
    let field = curve.field();
    let q = curve.q();
    let g = curve.genus();
    let needed: u128 = (0..=2 * g).map(|n| (q as u128).pow(n as u32)).sum();
    check_budget(needed, budget)?;
    let table = irreducible_table(field, g, budget)?;
    let l = lpoly_via_splitting(curve, &table)?;
    let qf = q as f64;
    let u = (-(alpha + 0.5) * qf.ln()).exp();
    let lhs = l.eval(u).norm_sqr();

    let plus = ShiftSet::conjugate_pair(alpha);
    let minus = plus.negated();
    let d = curve.D();
    let terms: Vec<(usize, Complex64, Complex64)> = (0..=2 * g)
        .flat_map(|n| (0..q.pow(n as u32)).map(move |k| (n, k)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(n, k)| {
            let f = Poly::new(field, monic_raw_index(field.q(), n, k)).expect("valid");
            let chi = quadratic_character(d, &f).expect("monic f, odd q");
            if chi == 0 {
                return (n, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
            }
            let fac = factor(&f).expect("nonzero");
            let weight = chi as f64 * qf.powf(-(n as f64) / 2.0);
            let t = |c: &ShiftSet| -> Complex64 {
                fac.factors
                    .iter()
                    .map(|(p, m)| c.tau_prime_power(qf.powi(p.degree().expect("prime") as i32), *m))
                    .product()
            };
            (n, t(&plus) * weight, t(&minus) * weight)
        })
        .collect();
    let first: Vec<Complex64> = terms.iter().map(|t| t.1).collect();
    let second: Vec<Complex64> = terms.iter().filter(|t| t.0 < 2 * g).map(|t| t.2).collect();
    let scale = qf.powf(-4.0 * g as f64 * alpha.re);
    let rhs = pairwise_sum_complex(&first) + pairwise_sum_complex(&second) * scale;
    Ok((lhs, rhs.re))
}

fn binomial(n: u64, k: u64) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `|sum_{B in M_n} (B/f)|` against `binom(deg f - 1, n) q^{n/2}`.
pub fn charsum_bound_check(f: &Poly, n: usize) -> Result<(f64, f64, bool), MomentsError> {
    if !f.field().is_odd() {
        return Err(MomentsError::EvenCharacteristic);
    }
    if !f.is_monic() {
        return Err(MomentsError::NonMonic);
    }
    let deg = f.degree().expect("monic");
    if factor(f)?.factors.iter().all(|(_, m)| m % 2 == 0) {
        return Err(MomentsError::TrivialCharacter);
    }
    if n >= deg {
        return Err(MomentsError::DegreeOutOfRange { n, deg });
    }
    let field = f.field();
    let q = field.q() as u64;
    let sum: i64 = (0..q.pow(n as u32))
        .into_par_iter()
        .map(|k| jacobi_raw(field, &monic_raw_index(field.q(), n, k), f.coeffs()) as i64)
        .sum();
    let lhs = sum.unsigned_abs() as f64;
    let rhs = binomial(deg as u64 - 1, n as u64) * (q as f64).powf(n as f64 / 2.0);
    Ok((lhs, rhs, lhs <= rhs))
}

/// Mean of `chi_D(f^2)` over `H_{2g+1}` against `prod_{P | f} (1 + 1/|P|)^{-1}`.
pub fn square_average_check(
    field: &Field,
    g: usize,
    f: &Poly,
    budget: u64,
) -> Result<(f64, f64), MomentsError> {
    if !field.is_odd() {
        return Err(MomentsError::EvenCharacteristic);
    }
    if !f.is_monic() {
        return Err(MomentsError::NonMonic);
    }
    let q = field.q() as f64;
    let main_term: f64 = factor(f)?
        .factors
        .iter()
        .map(|(p, _)| 1.0 / (1.0 + q.powi(-(p.degree().expect("prime") as i32))))
        .product();
    let f2 = f.mul(f)?;
    let ds = squarefree_monic(field, 2 * g + 1, budget)?;
    let values: Vec<f64> = ds
        .par_iter()
        .map(|d| jacobi_raw(field, d.coeffs(), f2.coeffs()) as f64)
        .collect();
    Ok((pairwise_sum(&values) / values.len() as f64, main_term))
}
