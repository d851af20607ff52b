//! Polynomials over F_q: arithmetic, factorization, enumeration and the quadratic
//! character `chi_D(f) = (D/f)`.

mod character;
mod enumerate;
mod factor;
mod literal;
pub(crate) mod raw;

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::ffield::{same_field, Field, FieldElement, FieldError};

pub(crate) use character::{jacobi_raw, legendre_prime_raw};
pub use character::{jacobi_symbol, quadratic_character};
pub(crate) use enumerate::monic_raw as monic_raw_index;
pub use enumerate::{
    count_monic, enumerate_monic, irreducible_count, irreducible_table, monic_from_index,
    squarefree_count, squarefree_monic_list, IrreducibleTable, MonicFilter,
};
pub(crate) use factor::raw_is_irreducible as raw_irreducible;
pub use factor::{
    divisor_count, factor, factor_with_seed, is_irreducible, is_squarefree, von_mangoldt,
    Factorization, DEFAULT_SEED,
};
pub use literal::LiteralError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomials belong to different fields")]
    FieldMismatch,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("operation requires odd characteristic")]
    EvenCharacteristic,
    #[error("polynomial must be monic")]
    NonMonic,
    #[error("enumeration of {needed} items exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Literal(#[from] LiteralError),
}

/// A polynomial in F_q[T], constant term first, never carrying trailing zeros.
#[derive(Clone)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u32>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_field(&self.field, &other.field)
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Poly {
    /// Builds a polynomial from raw element indices.
    pub fn new(field: &Field, mut coeffs: Vec<u32>) -> Result<Self, PolyError> {
        if let Some(&c) = coeffs.iter().find(|&&c| c >= field.q()) {
            return Err(FieldError::CoordinateOutOfRange(c as u64).into());
        }
        raw::trim(&mut coeffs);
        Ok(Self {
            field: field.clone(),
            coeffs,
        })
    }

    pub fn from_elements(field: &Field, elems: &[FieldElement]) -> Result<Self, PolyError> {
        if elems.iter().any(|e| !same_field(e.field(), field)) {
            return Err(PolyError::FieldMismatch);
        }
        Self::new(field, elems.iter().map(|e| e.value()).collect())
    }

    /// Coefficients given as integers reduced into the prime subfield.
    pub fn from_ints(field: &Field, ints: &[i64]) -> Self {
        let mut coeffs: Vec<u32> = ints.iter().map(|&n| field.from_int(n)).collect();
        raw::trim(&mut coeffs);
        Self {
            field: field.clone(),
            coeffs,
        }
    }

    pub(crate) fn from_raw(field: &Field, mut coeffs: Vec<u32>) -> Self {
        raw::trim(&mut coeffs);
        Self {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Field) -> Self {
        Self::from_raw(field, Vec::new())
    }

    pub fn one(field: &Field) -> Self {
        Self::from_raw(field, vec![1])
    }

    /// The indeterminate T.
    pub fn t(field: &Field) -> Self {
        Self::from_raw(field, vec![0, 1])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Raw coefficient indices, constant term first.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> FieldElement {
        FieldElement::new(&self.field, self.coeffs.get(i).copied().unwrap_or(0))
            .expect("stored coefficients are in range")
    }

    /// Degree, with `None` standing for deg 0 = -infinity.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs
            .last()
            .map(|&c| FieldElement::new(&self.field, c).expect("in range"))
    }

    /// |f| = q^deg f, with |0| = 0.
    pub fn norm(&self) -> f64 {
        match self.degree() {
            Some(d) => (self.field.q() as f64).powi(d as i32),
            None => 0.0,
        }
    }

    fn check(&self, other: &Self) -> Result<(), PolyError> {
        if same_field(&self.field, &other.field) {
            Ok(())
        } else {
            Err(PolyError::FieldMismatch)
        }
    }

    fn wrap(&self, coeffs: Vec<u32>) -> Self {
        Self::from_raw(&self.field, coeffs)
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(self.wrap(raw::add(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(self.wrap(raw::sub(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(self.wrap(raw::mul(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn divmod(&self, other: &Self) -> Result<(Self, Self), PolyError> {
        self.check(other)?;
        if other.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let (q, r) = raw::divrem(&self.field, &self.coeffs, &other.coeffs);
        Ok((self.wrap(q), self.wrap(r)))
    }

    pub fn rem(&self, other: &Self) -> Result<Self, PolyError> {
        Ok(self.divmod(other)?.1)
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(self.wrap(raw::gcd(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = vec![1u32];
        for _ in 0..k {
            acc = raw::mul(&self.field, &acc, &self.coeffs);
        }
        self.wrap(acc)
    }

    pub fn derivative(&self) -> Self {
        self.wrap(raw::derivative(&self.field, &self.coeffs))
    }

    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement, PolyError> {
        if !same_field(x.field(), &self.field) {
            return Err(PolyError::FieldMismatch);
        }
        Ok(FieldElement::new(
            &self.field,
            raw::eval(&self.field, &self.coeffs, x.value()),
        )?)
    }

    /// Leading coefficient and the monic associate.
    pub fn monic_part(&self) -> Result<(FieldElement, Self), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let (lc, m) = raw::make_monic(&self.field, &self.coeffs);
        Ok((FieldElement::new(&self.field, lc)?, self.wrap(m)))
    }
}
