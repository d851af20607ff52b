//! Zeta functions of imaginary quadratic function fields `K = F_q(T)(sqrt D)`.
//!
//! With `u = q^{-s}`,
//!
//! ```text
//! zeta_K(s) = L_K(u) / ((1 - u)(1 - q u)),    L_K(u) = sum_{n <= 2g} c_n u^n,
//! ```
//!
//! where `L_K` has integer coefficients, `c_0 = 1`, `c_{2g-n} = q^{g-n} c_n`, and all
//! roots on `|u| = q^{-1/2}`. The L-polynomial is built by three independent routes:
//! character sums over monic `f`, prime counts from the splitting of primes of
//! `F_q[T]`, and direct point counts over extension fields. Analytic quantities are
//! then evaluated from the exact coefficients.

mod analytic;
mod qpoly;
mod roots;
mod routes;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::ffield::Field;
use crate::polyring::{is_squarefree, Poly, PolyError};

pub use analytic::{
    central_value_is_zero, check_weil_package, class_number, effective_divisor_counts, roots_of,
    xi_eval, zeta_eval, zeta_special_value, WeilReport,
};
pub use routes::{
    lpoly_from_charsum, lpoly_from_prime_counts, lpoly_via_splitting, point_count_direct,
    prime_counts_from_lpoly, prime_counts_via_splitting, prime_counts_with_table,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZetaError {
    #[error("q must be odd")]
    EvenCharacteristic,
    #[error("D must be monic")]
    NonMonic,
    #[error("D must be squarefree")]
    NotSquarefree,
    #[error("D must have odd degree, got {0}")]
    EvenDegree(usize),
    #[error("enumeration of {needed} items exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("prime counts known to degree {got}, need {needed}")]
    InsufficientCounts { needed: usize, got: usize },
    #[error("prime counts are inconsistent with any L-polynomial")]
    InconsistentCounts,
    #[error("character sum of degree {degree} is {value}, expected 0")]
    CharsumNonvanishing { degree: usize, value: i128 },
    #[error("zeta has a pole at s = {0}")]
    PoleAt(Complex64),
    #[error("class number L(1) = {0} is not positive")]
    NonPositiveClassNumber(i128),
    #[error("L(1/q) differs from h q^(-g)")]
    ClassNumberIdentity,
    #[error("L-polynomial needs odd length and constant term 1")]
    MalformedLPolynomial,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `y^2 = D(T)` with `D` monic, squarefree, of odd degree `2g + 1`, over odd `F_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveModel {
    d: Poly,
    genus: usize,
}

impl CurveModel {
    pub fn new(d: Poly) -> Result<Self, ZetaError> {
        if !d.field().is_odd() {
            return Err(ZetaError::EvenCharacteristic);
        }
        if !d.is_monic() {
            return Err(ZetaError::NonMonic);
        }
        let deg = d.degree().expect("monic is nonzero");
        if deg.is_multiple_of(2) {
            return Err(ZetaError::EvenDegree(deg));
        }
        if !is_squarefree(&d)? {
            return Err(ZetaError::NotSquarefree);
        }
        Ok(Self {
            genus: (deg - 1) / 2,
            d,
        })
    }

    pub fn parse(field: &Field, text: &str) -> Result<Self, ZetaError> {
        Self::new(Poly::parse(field, text)?)
    }

    pub fn field(&self) -> &Field {
        self.d.field()
    }

    pub fn q(&self) -> u64 {
        self.d.field().q() as u64
    }

    #[allow(non_snake_case)]
    pub fn D(&self) -> &Poly {
        &self.d
    }

    pub fn genus(&self) -> usize {
        self.genus
    }
}

/// `L_K(u) = sum c_n u^n`, `c_0 = 1`, degree `2g`.
///
/// Construction only checks the shape; the functional equation and RH are verified
/// separately by [`check_weil_package`] so corrupted inputs can be examined.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LPolynomial {
    q: u64,
    genus: usize,
    coeffs: Vec<i128>,
}

impl LPolynomial {
    pub fn new(q: u64, coeffs: Vec<i128>) -> Result<Self, ZetaError> {
        if coeffs.len().is_multiple_of(2) || coeffs[0] != 1 {
            return Err(ZetaError::MalformedLPolynomial);
        }
        Ok(Self {
            q,
            genus: (coeffs.len() - 1) / 2,
            coeffs,
        })
    }

    /// The genus-0 numerator `L = 1`.
    pub fn trivial(q: u64) -> Self {
        Self {
            q,
            genus: 0,
            coeffs: vec![1],
        }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    /// `c_{2g-n} = q^{g-n} c_n` for all `n`, in exact integers.
    pub fn satisfies_funceq(&self) -> bool {
        let g = self.genus;
        let q = self.q as i128;
        (0..=g).all(|n| {
            q.checked_pow((g - n) as u32)
                .and_then(|w| w.checked_mul(self.coeffs[n]))
                .is_some_and(|v| v == self.coeffs[2 * g - n])
        })
    }

    pub fn eval(&self, u: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * u + c as f64)
    }

    pub fn eval_f64(&self, u: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * u + c as f64)
    }
}

/// `a_d(K)`, the number of primes of `K` of degree `d`, for `1 <= d <= max_degree`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeCounts {
    counts: Vec<u64>,
}

impl PrimeCounts {
    /// `counts[d - 1] = a_d`.
    pub fn new(counts: Vec<u64>) -> Self {
        Self { counts }
    }

    pub fn max_degree(&self) -> usize {
        self.counts.len()
    }

    pub fn a(&self, d: usize) -> Option<u64> {
        d.checked_sub(1).and_then(|i| self.counts.get(i).copied())
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.counts
    }

    /// `sum_{d | n} d a_d`, the number of degree-1 places over `F_{q^n}`.
    pub fn points(&self, n: usize) -> Option<u64> {
        if n == 0 || n > self.counts.len() {
            return None;
        }
        Some(
            (1..=n)
                .filter(|d| n.is_multiple_of(*d))
                .map(|d| d as u64 * self.counts[d - 1])
                .sum(),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderConfidence {
    /// Order fixed by exact integer arithmetic.
    Exact,
    /// A zero of `L` was detected within floating-point tolerance.
    Numeric,
}

/// Leading Laurent coefficient of `zeta_K` at `at`: `zeta_K(t) ~ leading (t - at)^order`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpecialValue {
    pub at: Complex64,
    pub order: i32,
    pub leading: Complex64,
    pub confidence: OrderConfidence,
}
