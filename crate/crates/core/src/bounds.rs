//! Closed-form thresholds, envelopes and count bounds, and the region classifier
//! for the Northcott property of `(q, s)`.
//!
//! Bounds that can exceed binary64 are reported on a log scale: `log_value` is
//! natural, `log_base_q` is the same quantity divided by `ln q`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;
use thiserror::Error;

use crate::ffield::prime_power;
use crate::moments::{c_alpha_euler_product, MomentsError, DEFAULT_TRUNCATION};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("{0} is not a prime power")]
    InvalidPrimePower(u64),
    #[error("s = {s} is outside the Northcott region for q = {q}")]
    OutsideNorthcottRegion { q: u64, s: Complex64 },
    #[error("sigma = {0} must exceed 1")]
    SigmaNotGreaterThanOne(f64),
    #[error("B = {0} is out of range")]
    InvalidB(f64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Moments(#[from] MomentsError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RegionKind {
    Northcott,
    NonNorthcottLargeB,
    NonNorthcottAllB,
    CentralLineZetaVanishing,
    NoResult,
}

/// Outcome of [`classify_point`]. `provenance` is a result tag `a`..`g`, `gap` for
/// the strip left of the critical line not covered by any result, or `none`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegionVerdict {
    pub kind: RegionKind,
    #[serde(rename = "threshold_B")]
    pub threshold_b: Option<f64>,
    pub provenance: String,
    pub assumptions: Vec<String>,
}

impl RegionVerdict {
    fn new(kind: RegionKind, tag: &str, assumptions: &[&str]) -> Self {
        Self {
            kind,
            threshold_b: None,
            provenance: tag.to_string(),
            assumptions: assumptions.iter().map(|a| a.to_string()).collect(),
        }
    }
}

/// A possibly huge bound; `value` is `None` exactly when it overflows binary64.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub value: Option<f64>,
    pub log_value: f64,
    pub log_base_q: f64,
    pub log_scale: bool,
    pub exact: Option<String>,
    pub note: Option<String>,
}

impl BoundReport {
    fn from_log(name: &str, q: u64, log_value: f64, note: Option<&str>) -> Self {
        let v = log_value.exp();
        let finite = v.is_finite();
        Self {
            name: name.to_string(),
            value: finite.then_some(v),
            log_value,
            log_base_q: log_value / (q as f64).ln(),
            log_scale: !finite,
            exact: None,
            note: note.map(str::to_string),
        }
    }
}

const Q_NOTE: &str = "constant Q is user-supplied; no effective value is known";

fn check_q(q: u64) -> Result<(), BoundsError> {
    if prime_power(q).is_none() {
        Err(BoundsError::InvalidPrimePower(q))
    } else {
        Ok(())
    }
}

/// `1/2 - log 2 / log q`: left of this line the Northcott property holds for all `B`.
pub fn northcott_line(q: u64) -> f64 {
    0.5 - std::f64::consts::LN_2 / (q as f64).ln()
}

fn q_congruent_one_mod_four(q: u64) -> bool {
    q % 4 == 1
}

/// Region verdict for `(q, s)`. Total on prime powers `q`.
pub fn classify_point(q: u64, s: Complex64) -> Result<RegionVerdict, BoundsError> {
    check_q(q)?;
    let sigma = s.re;
    let tau = s.im;
    let mod4 = q_congruent_one_mod_four(q);
    const MOD4: &str = "q ≡ 1 mod 4";

    if s == Complex64::new(0.0, 0.0) {
        return Ok(if q > 4 {
            RegionVerdict::new(RegionKind::Northcott, "a", &["q > 4"])
        } else {
            RegionVerdict::new(
                RegionKind::NoResult,
                "none",
                &["Northcott at s = 0 needs q > 4"],
            )
        });
    }
    if sigma < northcott_line(q) {
        return Ok(RegionVerdict::new(
            RegionKind::Northcott,
            "b",
            &["Re(s) < 1/2 - log 2 / log q"],
        ));
    }
    if sigma == 0.5 && tau == 0.0 {
        return Ok(if mod4 {
            RegionVerdict::new(
                RegionKind::CentralLineZetaVanishing,
                "f",
                &[MOD4, "statement for ζ_K(1/2), not ζ_K^*"],
            )
        } else {
            RegionVerdict::new(
                RegionKind::NoResult,
                "none",
                &["result at s = 1/2 needs q ≡ 1 mod 4"],
            )
        });
    }
    if sigma == 1.0 && tau == 0.0 {
        return Ok(if mod4 {
            RegionVerdict::new(RegionKind::NonNorthcottAllB, "d", &[MOD4])
        } else {
            RegionVerdict::new(
                RegionKind::NoResult,
                "none",
                &["result at s = 1 needs q ≡ 1 mod 4"],
            )
        });
    }
    if sigma > 0.5 && sigma < 1.0 && tau == 0.0 {
        return Ok(if mod4 {
            RegionVerdict::new(RegionKind::NonNorthcottAllB, "e", &[MOD4, "s real"])
        } else {
            RegionVerdict::new(
                RegionKind::NoResult,
                "none",
                &["result for real 1/2 < s < 1 needs q ≡ 1 mod 4"],
            )
        });
    }
    if sigma > 0.5 {
        if mod4 {
            let mut v = RegionVerdict::new(
                RegionKind::NonNorthcottLargeB,
                "g",
                &[MOD4, "s ≠ 1", "Euler product truncated at degree 12"],
            );
            return Ok(match moment_threshold_b(q, s, DEFAULT_TRUNCATION) {
                Ok(b) => {
                    v.threshold_b = Some(b);
                    v
                }
                Err(BoundsError::InvalidParameter(_)) => RegionVerdict::new(
                    RegionKind::NoResult,
                    "none",
                    &["q^s = q: the threshold has a pole"],
                ),
                Err(e) => return Err(e),
            });
        }
        if sigma > 1.0 {
            let mut v = RegionVerdict::new(
                RegionKind::NonNorthcottLargeB,
                "c",
                &[
                    "Re(s) > 1",
                    "infinitely many quadratic fields below the threshold",
                ],
            );
            v.threshold_b = right_threshold_b(q, sigma)?.value;
            return Ok(v);
        }
        return Ok(RegionVerdict::new(
            RegionKind::NoResult,
            "none",
            &["results for 1/2 < Re(s) <= 1 need q ≡ 1 mod 4"],
        ));
    }
    if sigma < 0.5 {
        return Ok(RegionVerdict::new(
            RegionKind::NoResult,
            "gap",
            &["1/2 - log 2 / log q <= Re(s) < 1/2 is not covered"],
        ));
    }
    Ok(RegionVerdict::new(
        RegionKind::NoResult,
        "none",
        &["Re(s) = 1/2 off the real axis; Weil-integer values of q^s are not detected"],
    ))
}

/// `(max(0, sqrt(q)|u| - 1)^{2g}, (sqrt(q)|u| + 1)^{2g})`, bracketing `|L_K(u)|`.
pub fn hasse_envelope(q: u64, g: usize, u: Complex64) -> (f64, f64) {
    let r = (q as f64).sqrt() * u.norm();
    let e = 2 * g as i32;
    ((r - 1.0).max(0.0).powi(e), (r + 1.0).powi(e))
}

fn log_q_half_minus(q: u64, sigma: f64) -> f64 {
    ((q as f64).powf(0.5 - sigma) - 1.0).ln()
}

/// `a_sigma = 1 / (2 log(q^{1/2 - sigma} - 1))`.
pub fn a_sigma(q: u64, sigma: f64) -> f64 {
    1.0 / (2.0 * log_q_half_minus(q, sigma))
}

/// `b_sigma = log((1 + q^{-sigma})(1 + q^{1-sigma})) / (2 log(q^{1/2 - sigma} - 1))`.
pub fn b_sigma(q: u64, sigma: f64) -> f64 {
    let qf = q as f64;
    ((1.0 + qf.powf(-sigma)) * (1.0 + qf.powf(1.0 - sigma))).ln()
        / (2.0 * log_q_half_minus(q, sigma))
}

/// `c_sigma = 1 / (log q * log(q^{1/2 - sigma} - 1))`.
pub fn c_sigma(q: u64, sigma: f64) -> f64 {
    1.0 / ((q as f64).ln() * log_q_half_minus(q, sigma))
}

fn in_northcott_region(q: u64, s: Complex64) -> bool {
    (s == Complex64::new(0.0, 0.0) && q > 4) || s.re < northcott_line(q)
}

/// Largest genus a field with `|zeta*_K(s)| <= B` can have.
pub fn genus_cap(q: u64, s: Complex64, b: f64) -> Result<u64, BoundsError> {
    check_q(q)?;
    if !(b.is_finite() && b > 0.0) {
        return Err(BoundsError::InvalidB(b));
    }
    if !in_northcott_region(q, s) {
        return Err(BoundsError::OutsideNorthcottRegion { q, s });
    }
    let cap = if s.re == 0.0 && s.im == 0.0 {
        let qf = q as f64;
        ((qf - 1.0) * qf.ln() * b).ln() / (2.0 * (qf.sqrt() - 1.0).ln())
    } else {
        a_sigma(q, s.re) * b.ln() + b_sigma(q, s.re)
    };
    Ok(cap.floor().max(0.0) as u64)
}

/// Number of function fields of genus `g` over `F_q` of gonality at most `n`,
/// `q^{Q (log n)^2 (g + n (1 + log_q n))}`. `n` defaults to and is clamped to
/// `[2, 2g - 2]` for `g >= 2`.
pub fn couveignes_count_bound(q: u64, g: usize, n: Option<u64>, big_q: f64) -> BoundReport {
    let qf = q as f64;
    let lq = qf.ln();
    match g {
        0 => BoundReport::from_log("couveignes", q, 0.0, Some("genus 0: one field")),
        1 => {
            let l2 = std::f64::consts::LN_2;
            let e = big_q * l2 * l2 * (1.0 + 2.0 * (1.0 + l2 / lq));
            let log_value = e * lq + (-e * lq).exp().ln_1p();
            BoundReport::from_log("couveignes", q, log_value, Some(Q_NOTE))
        }
        _ => {
            let cap = 2 * g as u64 - 2;
            let chosen = n.unwrap_or(cap).clamp(2, cap);
            let nf = chosen as f64;
            let log_q = big_q * nf.ln().powi(2) * (g as f64 + nf * (1.0 + nf.ln() / lq));
            let mut r = BoundReport::from_log("couveignes", q, log_q * lq, None);
            let mut note = format!("gonality n = {chosen}; {Q_NOTE}");
            if n.is_some_and(|m| m != chosen) {
                note.push_str("; requested n clamped to [2, 2g-2]");
            }
            r.note = Some(note);
            r
        }
    }
}

/// `#S_{q,s,B} <= q^{Q c_sigma (log B)^3 B}`.
pub fn size_bound_s(q: u64, s: Complex64, b: f64, big_q: f64) -> Result<BoundReport, BoundsError> {
    check_q(q)?;
    if s.re >= northcott_line(q) {
        return Err(BoundsError::OutsideNorthcottRegion { q, s });
    }
    if !(b.is_finite() && b > 1.0) {
        return Err(BoundsError::InvalidB(b));
    }
    let exponent = big_q * c_sigma(q, s.re) * b.ln().powi(3) * b;
    Ok(BoundReport::from_log(
        "size_bound_S",
        q,
        exponent * (q as f64).ln(),
        Some(Q_NOTE),
    ))
}

/// `1 / ((1 - q^{-sigma})(1 - q^{1-sigma})^2)`, exact for integer `sigma`.
pub fn right_threshold_b(q: u64, sigma: f64) -> Result<BoundReport, BoundsError> {
    check_q(q)?;
    if sigma.is_nan() || sigma <= 1.0 {
        return Err(BoundsError::SigmaNotGreaterThanOne(sigma));
    }
    let qf = q as f64;
    let mut r = BoundReport::from_log(
        "right_threshold_B",
        q,
        -(-qf.powf(-sigma)).ln_1p() - 2.0 * (-qf.powf(1.0 - sigma)).ln_1p(),
        None,
    );
    if sigma.fract() == 0.0 && sigma <= 64.0 {
        let k = sigma as u32;
        let qb = BigInt::from(q);
        let one = BigRational::one();
        let inv = |e: u32| BigRational::new(BigInt::one(), qb.pow(e));
        let den = (&one - inv(k)) * (&one - inv(k - 1)) * (&one - inv(k - 1));
        let exact = one / den;
        r.value = exact.to_f64();
        r.exact = Some(exact.to_string());
    }
    Ok(r)
}

/// Lipnowski-Tsimerman and de Jong-Katz counts of curves of genus `g`.
pub fn misc_count_bounds(
    q: u64,
    g: usize,
    c1: f64,
    c2: f64,
) -> Result<Vec<BoundReport>, BoundsError> {
    let (p, _) = prime_power(q).ok_or(BoundsError::InvalidPrimePower(q))?;
    let gf = g as f64;
    let lq = (q as f64).ln();
    let xlogx = |x: f64| if x == 0.0 { 0.0 } else { x * x.ln() };
    let lt = gf * if g == 0 { 0.0 } else { (2.0 * gf).ln() }
        + gf * (gf + 1.0) / 4.0 * lq
        + 33.0 / 4.0 * gf * gf * (p as f64).ln();
    let djk = c1 * xlogx(gf) + c2 * gf * lq;
    Ok(vec![
        BoundReport::from_log(
            "lipnowski_tsimerman",
            q,
            lt,
            Some("(2g)^g q^{g(g+1)/4} p^{33g^2/4}; o(1) in the exponent taken as 0"),
        ),
        BoundReport::from_log(
            "de_jong_katz",
            q,
            djk,
            Some("g^{c1 g} q^{c2 g}; c1, c2 user-supplied, non-effective"),
        ),
    ])
}

/// `a_l(K) <= q^l / l + q^{l/3} + (2g / l)(q^{l/2} + q^{l/4})`.
pub fn a_ell_upper(q: u64, g: usize, l: u32) -> f64 {
    let qf = q as f64;
    let lf = l as f64;
    qf.powf(lf) / lf
        + qf.powf(lf / 3.0)
        + 2.0 * g as f64 / lf * (qf.powf(lf / 2.0) + qf.powf(lf / 4.0))
}

/// Upper bound for `zeta_K(sigma)`, `sigma > 1`, over fields of genus `g`.
pub fn zeta_sigma_upper(q: u64, g: usize, sigma: f64) -> Result<f64, BoundsError> {
    if sigma.is_nan() || sigma <= 1.0 {
        return Err(BoundsError::SigmaNotGreaterThanOne(sigma));
    }
    let qf = q as f64;
    let e = 2 * g as i32;
    let inner = (1.0 / (qf.powf(sigma - 1.0 / 3.0) - 1.0)).exp()
        / ((1.0 - qf.powf(1.0 - sigma))
            * (1.0 - qf.powf(0.5 - sigma)).powi(e)
            * (1.0 - qf.powf(0.25 - sigma)).powi(e));
    let qs = qf.powf(sigma);
    Ok(inner.powf(qs / (qs - 1.0)))
}

/// `|1 / ((1 - q^{-s})(1 - q^{1-s}))| * sqrt(C_alpha)` with `alpha = s - 1/2`, truncated
/// at prime degree `n`.
pub fn moment_threshold_b(q: u64, s: Complex64, n: usize) -> Result<f64, BoundsError> {
    check_q(q)?;
    if s.re.is_nan() || s.re <= 0.5 {
        return Err(BoundsError::InvalidParameter(format!(
            "need Re(s) > 1/2, got {s}"
        )));
    }
    let lq = (q as f64).ln();
    let one = Complex64::new(1.0, 0.0);
    let den = (one - (-s * lq).exp()) * (one - ((one - s) * lq).exp());
    if den.norm() < 1e-14 {
        return Err(BoundsError::InvalidParameter(format!(
            "zeta_q has a pole at s = {s}"
        )));
    }
    let c = c_alpha_euler_product(q, s - 0.5, n)?;
    Ok(c.value.sqrt() / den.norm())
}
