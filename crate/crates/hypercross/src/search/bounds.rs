//! Closed-form bound evaluators.
//!
//! Exponents are computed as exact rationals; evaluated bounds are exact
//! when the arithmetic permits and otherwise rendered as floor decimals at a
//! stated digit precision. Floating point appears only in the `approx`
//! field, for reporting.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::scalar::{Int, Rat};

/// Value of an evaluated bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundValue {
    /// Exactly representable.
    Exact(Rat),
    /// Floor of the true value at `precision` decimal digits; the absolute
    /// error is below 10^(-precision) times the leading integer factor.
    Decimal { rendered: String, precision: u32 },
}

impl BoundValue {
    pub fn approx(&self) -> f64 {
        match self {
            BoundValue::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            BoundValue::Decimal { rendered, .. } => rendered.parse().unwrap_or(f64::NAN),
        }
    }
}

/// A closed-form bound: an exact exponent, an optional evaluated value, and
/// a floating approximation for reporting only.
#[derive(Clone, Debug)]
pub struct BoundEstimate {
    /// Which closed form was evaluated.
    pub label: String,
    /// Exponent of n when the bound has the form n^e.
    pub exponent: Option<Rat>,
    /// Evaluated value when the bound is a number.
    pub value: Option<BoundValue>,
    /// Floating rendering for reports; carries no exactness claim.
    pub approx: f64,
    pub note: Option<String>,
}

fn rat_from_ints(num: Int, den: Int) -> Rat {
    Rat::new(num, den)
}

/// Exponent `d + 1 - 1/(2k-1)^d` for the strongly-crossing bound in
/// d-space, evaluated at n for reporting.
///
/// ```
/// use hypercross::frac;
/// use hypercross::search::bound_tverberg;
///
/// let est = bound_tverberg(2, 2, 1000);
/// assert_eq!(est.exponent.unwrap(), frac(26, 9)); // 3 - 1/9
/// ```
pub fn bound_tverberg(d: u32, k: u32, n: u64) -> BoundEstimate {
    assert!(d >= 1 && k >= 2);
    let base = Int::from(2 * k - 1).pow(d);
    let exponent = rat_from_ints(Int::from(d + 1), Int::from(1))
        - rat_from_ints(Int::one(), base);
    let approx = (n as f64).powf(exponent.to_f64().unwrap());
    BoundEstimate {
        label: format!("tverberg(d={d}, k={k})"),
        exponent: Some(exponent),
        value: None,
        approx,
        note: None,
    }
}

/// Exponent `d - (1/k)^(d-1)` for the pairwise-disjoint bound in d-space.
pub fn bound_akiyama_alon(d: u32, k: u32, n: u64) -> BoundEstimate {
    assert!(d >= 1 && k >= 2);
    let base = Int::from(k).pow(d - 1);
    let exponent = rat_from_ints(Int::from(d), Int::one()) - rat_from_ints(Int::one(), base);
    let approx = (n as f64).powf(exponent.to_f64().unwrap());
    BoundEstimate {
        label: format!("akiyama-alon(d={d}, k={k})"),
        exponent: Some(exponent),
        value: None,
        approx,
        note: None,
    }
}

/// The bipartite Zarankiewicz-type bound
/// `(s-1)^(1/r) * n * m^(1-1/r) + (r-1) * m`.
///
/// The left term equals `n * ((s-1) * m^(r-1))^(1/r)`; it is exact when the
/// radicand is a perfect r-th power and a floor decimal at `precision`
/// digits otherwise.
pub fn bound_kst(n: u64, m: u64, r: u32, s: u64, precision: u32) -> BoundEstimate {
    assert!(n >= 1 && m >= 1 && r >= 1 && s >= 1);
    let radicand = BigUint::from(s - 1) * BigUint::from(m).pow(r - 1);
    let linear = Int::from(r as u64 - 1) * Int::from(m);
    let label = format!("kst(n={n}, m={m}, r={r}, s={s})");

    let approx = (s.saturating_sub(1) as f64).powf(1.0 / r as f64)
        * n as f64
        * (m as f64).powf(1.0 - 1.0 / r as f64)
        + (r as f64 - 1.0) * m as f64;

    if radicand.is_zero() {
        let value = Rat::from_integer(linear);
        return BoundEstimate {
            label,
            exponent: None,
            approx,
            value: Some(BoundValue::Exact(value)),
            note: None,
        };
    }

    let root = radicand.nth_root(r);
    if root.clone().pow(r) == radicand {
        let value = Rat::from_integer(Int::from(n) * Int::from(root) + linear);
        return BoundEstimate {
            label,
            exponent: None,
            approx,
            value: Some(BoundValue::Exact(value)),
            note: None,
        };
    }

    // floor(radicand^(1/r) * 10^precision), then assemble the decimal.
    let scaled = radicand * BigUint::from(10u32).pow(r * precision);
    let scaled_root = scaled.nth_root(r) * BigUint::from(n);
    let shift = BigUint::from(10u32).pow(precision);
    let total = scaled_root
        + BigUint::try_from(linear).expect("nonnegative")
            * shift.clone();
    let int_part = &total / &shift;
    let frac_part = &total % &shift;
    let rendered = format!(
        "{}.{:0>width$}",
        int_part,
        frac_part.to_string(),
        width = precision as usize
    );
    BoundEstimate {
        label,
        exponent: None,
        approx,
        value: Some(BoundValue::Decimal {
            rendered,
            precision,
        }),
        note: None,
    }
}

/// The strongly-crossing upper-bound instantiation of [`bound_kst`]:
/// `m = n^2`, `r = k`, `s = c_k * n`.
///
/// The constant `c_k` (linear bound on geometric graphs whose edges all
/// meet a vertical line, with no k pairwise crossing edges) is a free
/// parameter here; no concrete value is fixed by this crate. The default
/// used by the CLI is 1, flagged in the note.
pub fn bound_kst_sc(n: u64, k: u32, c_k: u64, precision: u32) -> BoundEstimate {
    let mut est = bound_kst(n, n * n, k, c_k * n, precision);
    est.label = format!("kst-strongly-crossing(n={n}, k={k}, c_k={c_k})");
    est.note = Some(
        "c_k is a caller-supplied constant; the asymptotic form is n^(3 - 1/k) * c_k^(1/k)"
            .to_string(),
    );
    est
}
