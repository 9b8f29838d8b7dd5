//! Exact computational geometry for crossing and disjointness patterns in
//! geometric hypergraphs.
//!
//! A geometric r-hypergraph is a point set in general position together with
//! closed (r-1)-simplices spanned by r-tuples of the points. This crate
//! provides:
//!
//! - an exact rational geometry kernel ([`geom`]), generic over the scalar,
//! - the hypergraph data model with general-position validation, base/side
//!   classification and generators ([`hypergraph`]),
//! - detectors for forbidden patterns: strongly crossing tuples, pairwise
//!   disjoint tuples, pairwise crossing segment families and the
//!   convex-position clockwise pattern ([`detect`]),
//! - upper envelopes of supporting lines and 1-D Helly machinery
//!   ([`arrangement`]),
//! - constructive witness extractors that mirror the combinatorial
//!   arguments: case analysis over four crossing bases, greedy selection
//!   with a Helly finish, red/blue extremal coloring with sphere links and
//!   disjoint-pair extraction ([`witness`]),
//! - extremal search (exact branch-and-bound and randomized greedy) plus
//!   closed-form bound evaluators ([`search`]).
//!
//! Everything is computed over arbitrary-precision rationals: all questions
//! the library answers are sign questions, and exactness is what makes
//! "general position" a checkable precondition instead of a hope. The
//! concrete aliases below fix the scalar for toolkit-level code; the kernel
//! itself accepts any ordered-field scalar.

pub mod arrangement;
pub mod detect;
pub mod geom;
pub mod hypergraph;
pub mod oracle;
pub mod scalar;
pub mod search;
pub mod svg;
pub mod witness;

pub use scalar::{frac, rat, GeomScalar, Int, Rat};

/// Planar point with rational coordinates.
pub type Pt2 = geom::Point2<Rat>;
/// Spatial point with rational coordinates.
pub type Pt3 = geom::Point3<Rat>;
/// Rational direction vector in 3-space.
pub type Vec3 = geom::Vector3<Rat>;
/// Closed planar segment with rational endpoints.
pub type Seg2 = geom::Segment2<Rat>;
/// Rational line in the plane.
pub type Line = geom::Line2<Rat>;
/// Rational plane in 3-space.
pub type Plane = geom::Plane3<Rat>;
