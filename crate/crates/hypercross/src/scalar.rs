//! Scalar abstraction for the exact geometry kernel.
//!
//! Every predicate in [`crate::geom`] is a pure sign computation over an
//! ordered ring, and every construction (intersection points, envelope
//! breakpoints) additionally divides, so it needs an ordered field. The
//! kernel is therefore written against [`GeomScalar`] and instantiated with
//! arbitrary-precision rationals for all toolkit-level work: the crate never
//! rounds, which is what makes general-position validation meaningful.

use std::fmt::Debug;

use num_traits::Signed;

/// Scalar types the geometry kernel accepts.
///
/// Requires exact ring arithmetic and a total order. Predicates (orientation,
/// containment, crossing) are correct for any implementor, including plain
/// integers; operations that construct new coordinates divide and are only
/// exact over a field such as [`crate::Rat`].
pub trait GeomScalar: Clone + Ord + Signed + Debug {}

impl<T> GeomScalar for T where T: Clone + Ord + Signed + Debug {}

/// The concrete scalar used throughout the toolkit: arbitrary-precision
/// rationals in canonical reduced form (positive denominator, gcd 1), so
/// equality is structural and arithmetic never rounds.
pub type Rat = num_rational::BigRational;

/// Arbitrary-precision integer backing [`Rat`].
pub type Int = num_bigint::BigInt;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Shorthand for the exact fraction `n/d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}
