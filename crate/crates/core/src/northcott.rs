//! Desk-scale materialization of `S_{q,s,B} = { K : |zeta*_K(s)| <= B }` over the
//! imaginary quadratic fields `F_q(T)(sqrt D)`, `D` in `H_{2g+1}`, and an exhaustive
//! search for vanishing at the central point.
//!
//! Enumeration is genus ascending, then `D` in enumeration order. Each genus is
//! processed in parallel and merged in that order, so reports do not depend on the
//! thread count.

use std::collections::HashSet;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{classify_point, genus_cap, BoundsError, RegionKind};
use crate::ffield::{Field, FieldSpec};
use crate::polyring::{irreducible_table, raw, squarefree_monic_list, Poly, PolyError};
use crate::zetafn::{
    central_value_is_zero, class_number, lpoly_from_charsum, lpoly_via_splitting, zeta_eval,
    zeta_special_value, CurveModel, LPolynomial, ZetaError,
};

/// Largest genus enumerated: `q^{2g+1}` grows too fast beyond it.
pub const MAX_GENUS: usize = 8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NorthcottError {
    #[error("enumeration of {needed} curves exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("genus {0} exceeds the enumeration cap {MAX_GENUS}")]
    GenusTooLarge(usize),
    #[error("genus range {0}..={1} is empty")]
    EmptyRange(usize, usize),
    #[error("q must be odd")]
    EvenCharacteristic,
    #[error("q = {0} is not 1 mod 4")]
    WrongCongruence(u64),
    #[error("B = {0} must be positive")]
    InvalidB(f64),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Dedupe {
    Raw,
    /// One `D` per orbit of `D(T) -> a^{-(2g+1)} D(aT + b)` with `a` a nonzero square.
    AffineOrbit,
    /// One `D` per distinct L-polynomial.
    ByLpolynomial,
}

#[derive(Debug, Clone)]
pub struct EnumerationScope {
    pub field: Field,
    pub genus_min: usize,
    pub genus_max: usize,
    pub dedupe: Dedupe,
    pub budget: u64,
}

impl EnumerationScope {
    pub fn new(field: &Field, genus_min: usize, genus_max: usize) -> Self {
        Self {
            field: field.clone(),
            genus_min,
            genus_max,
            dedupe: Dedupe::Raw,
            budget: crate::DEFAULT_BUDGET,
        }
    }

    pub fn with_dedupe(mut self, dedupe: Dedupe) -> Self {
        self.dedupe = dedupe;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FieldEntry {
    pub curve: CurveModel,
    pub lpoly: LPolynomial,
}

fn curves_in_genus(q: u64, g: usize) -> u128 {
    (q as u128)
        .checked_pow(2 * g as u32 + 1)
        .unwrap_or(u128::MAX)
}

fn index_of(q: u32, c: &[u32]) -> u64 {
    c[..c.len() - 1]
        .iter()
        .rev()
        .fold(0u64, |acc, &x| acc * q as u64 + x as u64)
}

fn nonzero_squares(f: &FieldSpec) -> Vec<u32> {
    let mut s: Vec<u32> = f
        .raw_elements()
        .filter(|&x| x != f.zero())
        .map(|x| f.mul(x, x))
        .collect();
    s.sort_unstable();
    s.dedup();
    s
}

/// Orbit of monic `D` under `D(T) -> a^{-deg D} D(aT + b)`, `a` a nonzero square.
pub fn affine_orbit(d: &Poly) -> Vec<Poly> {
    let f = d.field();
    let n = d.degree().expect("monic") as u64;
    let mut out: Vec<Poly> = Vec::new();
    for a in nonzero_squares(f) {
        let c = f.inv(f.pow(a, n)).expect("nonzero");
        for b in f.raw_elements() {
            let image = raw::scale(f, &raw::compose_affine(f, d.coeffs(), a, b), c);
            out.push(Poly::new(f, image).expect("valid"));
        }
    }
    out.sort_by_key(|p| index_of(f.q(), p.coeffs()));
    out.dedup();
    out
}

fn is_orbit_minimal(f: &FieldSpec, d: &[u32], squares: &[u32]) -> bool {
    let q = f.q();
    let n = (d.len() - 1) as u64;
    let own = index_of(q, d);
    squares.iter().all(|&a| {
        let c = f.inv(f.pow(a, n)).expect("nonzero");
        f.raw_elements().all(|b| {
            let image = raw::scale(f, &raw::compose_affine(f, d, a, b), c);
            index_of(q, &image) >= own
        })
    })
}

fn genus_entries(
    field: &Field,
    g: usize,
    dedupe: Dedupe,
) -> Result<Vec<FieldEntry>, NorthcottError> {
    let mut ds = squarefree_monic_list(field, 2 * g + 1);
    if dedupe == Dedupe::AffineOrbit {
        let squares = nonzero_squares(field);
        ds = ds
            .into_par_iter()
            .filter(|d| is_orbit_minimal(field, d.coeffs(), &squares))
            .collect();
    }
    let table = irreducible_table(field, g, u64::MAX)?;
    let entries: Result<Vec<FieldEntry>, ZetaError> = ds
        .into_par_iter()
        .map(|d| {
            let curve = CurveModel::new(d)?;
            let lpoly = lpoly_via_splitting(&curve, &table)?;
            Ok(FieldEntry { curve, lpoly })
        })
        .collect();
    let mut entries = entries?;
    if dedupe == Dedupe::ByLpolynomial {
        let mut seen = HashSet::new();
        entries.retain(|e| seen.insert(e.lpoly.coeffs().to_vec()));
    }
    Ok(entries)
}

fn check_scope(scope: &EnumerationScope) -> Result<(), NorthcottError> {
    if !scope.field.is_odd() {
        return Err(NorthcottError::EvenCharacteristic);
    }
    if scope.genus_min > scope.genus_max {
        return Err(NorthcottError::EmptyRange(scope.genus_min, scope.genus_max));
    }
    if scope.genus_max > MAX_GENUS {
        return Err(NorthcottError::GenusTooLarge(scope.genus_max));
    }
    Ok(())
}

/// All fields in scope with their L-polynomials, genus ascending then by `D`.
pub fn enumerate_fields(scope: &EnumerationScope) -> Result<Vec<FieldEntry>, NorthcottError> {
    check_scope(scope)?;
    let q = scope.field.q() as u64;
    let needed: u128 = (scope.genus_min..=scope.genus_max)
        .map(|g| curves_in_genus(q, g))
        .sum();
    if needed > scope.budget as u128 {
        return Err(NorthcottError::BudgetExceeded {
            needed,
            budget: scope.budget,
        });
    }
    let mut out = Vec::new();
    for g in scope.genus_min..=scope.genus_max {
        out.extend(genus_entries(&scope.field, g, scope.dedupe)?);
    }
    Ok(out)
}

/// One enumerated field with its special value at `s`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FieldRow {
    #[serde(rename = "D")]
    pub d: Poly,
    pub genus: usize,
    pub h: u128,
    pub order: i32,
    pub abs_leading: f64,
    #[serde(rename = "in_S")]
    pub in_s: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Member {
    #[serde(rename = "D")]
    pub d: Poly,
    pub genus: usize,
    pub abs_leading: f64,
    pub order: i32,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NorthcottReport {
    pub q: u64,
    pub s: Complex64,
    #[serde(rename = "B")]
    pub b: f64,
    pub region: RegionKind,
    pub dedupe: Dedupe,
    pub genus_min: usize,
    /// Largest genus actually enumerated.
    pub genus_scanned: Option<usize>,
    pub genus_cap_used: Option<u64>,
    pub complete_within_scope: bool,
    pub scope_caveat: String,
    pub members: Vec<Member>,
    /// Members counted up to the square-affine action; an upper bound on classes.
    pub member_affine_orbits: usize,
    /// Distinct L-polynomials among members; a lower bound on classes.
    pub member_lpolynomials: usize,
    pub rows: Vec<FieldRow>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ComputeOptions {
    /// At `s = 1/2`, filter on `|zeta_K(1/2)|` instead of the leading coefficient.
    pub plain_central_value: bool,
}

/// `|zeta*_K(s)|` and its order, or the plain value at the central point.
pub fn membership_value(
    l: &LPolynomial,
    s: Complex64,
    opts: ComputeOptions,
) -> Result<(f64, i32), NorthcottError> {
    if opts.plain_central_value && s == Complex64::new(0.5, 0.0) {
        return Ok((zeta_eval(l, s)?.norm(), 0));
    }
    let v = zeta_special_value(l, s);
    Ok((v.leading.norm(), v.order))
}

fn orbit_key(d: &Poly) -> u64 {
    let f = d.field();
    affine_orbit(d)
        .first()
        .map(|p| index_of(f.q(), p.coeffs()))
        .expect("orbit contains D")
}

const HYPERELLIPTIC_CAVEAT: &str =
    "only odd-degree models y^2 = D(T) and the rational function field are enumerated; fields of genus >= 3 without such a model are not covered";

/// Filters the scope by `|zeta*_K(s)| <= B`. In the Northcott region the scan is
/// extended to the certified genus cap when the budget allows.
#[allow(non_snake_case)]
pub fn compute_S(
    s: Complex64,
    b: f64,
    scope: &EnumerationScope,
    opts: ComputeOptions,
) -> Result<NorthcottReport, NorthcottError> {
    if !(b.is_finite() && b > 0.0) {
        return Err(NorthcottError::InvalidB(b));
    }
    check_scope(scope)?;
    let field = &scope.field;
    let q = field.q() as u64;
    let region = classify_point(q, s)?.kind;
    let cap = if region == RegionKind::Northcott {
        Some(genus_cap(q, s, b)?)
    } else {
        None
    };
    let target = match cap {
        Some(c) => scope.genus_max.max(c as usize),
        None => scope.genus_max,
    };

    let mut rows = Vec::new();
    let mut lpolys = Vec::new();
    let mut spent: u128 = 0;
    let mut scanned = None;
    let mut stop_reason = None;
    for g in scope.genus_min..=target {
        if g > MAX_GENUS {
            stop_reason = Some(format!("genus {g} exceeds the enumeration cap {MAX_GENUS}"));
            break;
        }
        let needed = curves_in_genus(q, g);
        if spent + needed > scope.budget as u128 {
            stop_reason = Some(format!(
                "budget {} exhausted before genus {g}",
                scope.budget
            ));
            break;
        }
        spent += needed;
        let entries = genus_entries(field, g, scope.dedupe)?;
        let evaluated: Result<Vec<(FieldRow, LPolynomial)>, NorthcottError> = entries
            .into_par_iter()
            .map(|e| {
                let (abs_leading, order) = membership_value(&e.lpoly, s, opts)?;
                let row = FieldRow {
                    h: class_number(&e.lpoly)?,
                    d: e.curve.D().clone(),
                    genus: g,
                    order,
                    abs_leading,
                    in_s: abs_leading <= b,
                };
                Ok((row, e.lpoly))
            })
            .collect();
        for (row, l) in evaluated? {
            rows.push(row);
            lpolys.push(l);
        }
        scanned = Some(g);
    }
    if scanned.is_none() {
        if let Some(reason) = &stop_reason {
            if reason.starts_with("budget") {
                return Err(NorthcottError::BudgetExceeded {
                    needed: curves_in_genus(q, scope.genus_min),
                    budget: scope.budget,
                });
            }
            return Err(NorthcottError::GenusTooLarge(scope.genus_min));
        }
    }

    let complete = cap.is_some_and(|c| {
        scope.genus_min == 0 && stop_reason.is_none() && scanned.is_some_and(|g| g as u64 >= c)
    });
    let mut caveat = String::from(HYPERELLIPTIC_CAVEAT);
    match (&cap, &stop_reason) {
        (_, Some(r)) => caveat.push_str(&format!("; partial: {r}")),
        (Some(c), None) if scope.genus_min > 0 => caveat.push_str(&format!(
            "; genera below {} skipped, cap {c} not certified",
            scope.genus_min
        )),
        (Some(c), None) => caveat.push_str(&format!("; genus cap {c} certified by the size bound")),
        (None, None) => {
            caveat.push_str("; no genus cap applies at this s, membership beyond the scope is open")
        }
    }

    let member_idx: Vec<usize> = (0..rows.len()).filter(|&i| rows[i].in_s).collect();
    let members: Vec<Member> = member_idx
        .iter()
        .map(|&i| Member {
            d: rows[i].d.clone(),
            genus: rows[i].genus,
            abs_leading: rows[i].abs_leading,
            order: rows[i].order,
        })
        .collect();
    let orbit_keys: HashSet<(usize, u64)> = member_idx
        .par_iter()
        .map(|&i| (rows[i].genus, orbit_key(&rows[i].d)))
        .collect();
    let l_keys: HashSet<&[i128]> = member_idx.iter().map(|&i| lpolys[i].coeffs()).collect();

    Ok(NorthcottReport {
        q,
        s,
        b,
        region,
        dedupe: scope.dedupe,
        genus_min: scope.genus_min,
        genus_scanned: scanned,
        genus_cap_used: cap,
        complete_within_scope: complete,
        scope_caveat: caveat,
        member_affine_orbits: orbit_keys.len(),
        member_lpolynomials: l_keys.len(),
        members,
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessValue {
    ExactZero,
    Value(Complex64),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessProperty {
    MemberOfS {
        s: Complex64,
        #[serde(rename = "B")]
        b: f64,
    },
    CentralZero,
}

/// A claim about the field `F_q(T)(sqrt D)` that [`Witness::verify`] re-derives from `D`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    #[serde(rename = "D")]
    pub d: Poly,
    pub value: WitnessValue,
    pub property: WitnessProperty,
}

impl Witness {
    /// Recomputes the L-polynomial by the character-sum route, independent of the
    /// splitting route used during the search.
    pub fn verify(&self, budget: u64) -> Result<bool, NorthcottError> {
        let curve = CurveModel::new(self.d.clone())?;
        let l = lpoly_from_charsum(&curve, budget)?;
        Ok(match &self.property {
            WitnessProperty::CentralZero => {
                let u = (l.q() as f64).powf(-0.5);
                central_value_is_zero(&l) && l.eval_f64(u).abs() < 1e-12
            }
            WitnessProperty::MemberOfS { s, b } => {
                membership_value(&l, *s, ComputeOptions::default())?.0 <= *b
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CentralZeroReport {
    pub q: u64,
    pub degrees_searched: Vec<usize>,
    pub curves_searched: u64,
    pub witnesses: Vec<Witness>,
    /// No witness in the searched range, established exhaustively.
    pub verified_empty: bool,
}

/// Indices of the L-polynomials vanishing at `u = q^{-1/2}`.
pub fn detect_central_zeros(ls: &[LPolynomial]) -> Vec<usize> {
    ls.iter()
        .enumerate()
        .filter(|(_, l)| central_value_is_zero(l))
        .map(|(i, _)| i)
        .collect()
}

/// Exhaustive search over `H_n`, `n` odd up to `max_deg`, for `L_K(q^{-1/2}) = 0`.
pub fn central_zero_search(
    field: &Field,
    max_deg: usize,
    budget: u64,
) -> Result<CentralZeroReport, NorthcottError> {
    let q = field.q() as u64;
    if q % 4 != 1 {
        return Err(NorthcottError::WrongCongruence(q));
    }
    let degrees: Vec<usize> = (1..=max_deg).step_by(2).collect();
    let needed: u128 = degrees
        .iter()
        .map(|&n| curves_in_genus(q, (n - 1) / 2))
        .sum();
    if needed > budget as u128 {
        return Err(NorthcottError::BudgetExceeded { needed, budget });
    }
    if degrees.iter().any(|&n| (n - 1) / 2 > MAX_GENUS) {
        return Err(NorthcottError::GenusTooLarge((max_deg - 1) / 2));
    }
    let mut witnesses = Vec::new();
    let mut searched = 0u64;
    for &n in &degrees {
        let entries = genus_entries(field, (n - 1) / 2, Dedupe::Raw)?;
        searched += entries.len() as u64;
        let ls: Vec<LPolynomial> = entries.iter().map(|e| e.lpoly.clone()).collect();
        for i in detect_central_zeros(&ls) {
            let u = (q as f64).powf(-0.5);
            if ls[i].eval_f64(u).abs() < 1e-12 {
                witnesses.push(Witness {
                    d: entries[i].curve.D().clone(),
                    value: WitnessValue::ExactZero,
                    property: WitnessProperty::CentralZero,
                });
            }
        }
    }
    Ok(CentralZeroReport {
        q,
        degrees_searched: degrees,
        curves_searched: searched,
        verified_empty: witnesses.is_empty(),
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Field {
        FieldSpec::prime(5).unwrap()
    }

    #[test]
    fn raw_counts_and_genus_zero() {
        let f = f5();
        let g1 = enumerate_fields(&EnumerationScope::new(&f, 1, 1)).unwrap();
        assert_eq!(g1.len(), 100);
        let g0 = enumerate_fields(&EnumerationScope::new(&f, 0, 0)).unwrap();
        assert_eq!(g0.len(), 5);
        assert!(g0.iter().all(|e| e.lpoly == LPolynomial::trivial(5)));
    }

    #[test]
    fn orbits_share_lpolynomials() {
        let f = f5();
        let table = irreducible_table(&f, 1, 100).unwrap();
        for d in squarefree_monic_list(&f, 3) {
            let l = lpoly_via_splitting(&CurveModel::new(d.clone()).unwrap(), &table).unwrap();
            for image in affine_orbit(&d) {
                let li = lpoly_via_splitting(&CurveModel::new(image).unwrap(), &table).unwrap();
                assert_eq!(l, li, "orbit of {d}");
            }
        }
        let scope = EnumerationScope::new(&f, 1, 1).with_dedupe(Dedupe::AffineOrbit);
        let reps = enumerate_fields(&scope).unwrap().len();
        let by_l = enumerate_fields(&scope.clone().with_dedupe(Dedupe::ByLpolynomial))
            .unwrap()
            .len();
        assert!(by_l <= reps && (10..=100).contains(&reps));
    }

    #[test]
    fn tiny_b_gives_empty_set() {
        let f = f5();
        let scope = EnumerationScope::new(&f, 1, 2);
        let r = compute_S(
            Complex64::new(2.0, 0.0),
            1e-6,
            &scope,
            ComputeOptions::default(),
        )
        .unwrap();
        assert!(r.members.is_empty());
        assert!(!r.complete_within_scope);
        assert_eq!(r.rows.len(), 100 + 2500);
    }

    #[test]
    fn northcott_region_is_certified() {
        let f = f5();
        let scope = EnumerationScope::new(&f, 0, 0);
        let r = compute_S(
            Complex64::new(-2.0, 0.0),
            100.0,
            &scope,
            ComputeOptions::default(),
        )
        .unwrap();
        assert_eq!(r.genus_cap_used, Some(1));
        assert_eq!(r.genus_scanned, Some(1));
        assert!(r.complete_within_scope);
    }

    #[test]
    fn injected_central_zero_is_detected() {
        // (1 - 5u^2)(1 + u + 5u^2)
        let l = LPolynomial::new(5, vec![1, 1, 0, -5, -25]).unwrap();
        let plain = LPolynomial::new(5, vec![1, -2, 5]).unwrap();
        assert_eq!(detect_central_zeros(&[plain, l]), vec![1]);
    }

    #[test]
    fn central_search_small() {
        let f = f5();
        let r = central_zero_search(&f, 3, 1_000).unwrap();
        assert_eq!(r.curves_searched, 105);
        for w in &r.witnesses {
            assert!(w.verify(10_000).unwrap());
        }
        assert_eq!(
            central_zero_search(&FieldSpec::prime(7).unwrap(), 3, 1_000).unwrap_err(),
            NorthcottError::WrongCongruence(7)
        );
    }
}
