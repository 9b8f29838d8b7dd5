//! Exact geometric kernel: primitive types and sign predicates.
//!
//! All coordinates are exact scalars (see [`crate::scalar`]); there is no
//! epsilon anywhere in this module and re-evaluating any predicate on equal
//! inputs yields the identical answer.

mod point;
mod polygon;
mod predicates;
mod tri3;

pub use point::{Line2, Plane3, Point2, Point3, Segment2, Vector3};
pub use polygon::{
    clip_convex_by_triangle, clip_halfplane, convex_hull_indices, convex_polygon_contains,
    double_signed_area, intersect_triangles,
};
pub use predicates::{
    orient2, orient3, plane_side, segment_intersection_point, segments_cross,
    triangle_contains_2d, Orientation2, Orientation3, PlaneSide,
};
pub use tri3::triangles_disjoint_3d;

use thiserror::Error;

/// Failures of the primitive predicates and constructions.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GeomError {
    /// Two segments share an endpoint, so the crossing question is ill-posed
    /// for vertex-disjoint edges and the caller must decide.
    #[error("segments share an endpoint")]
    SharedEndpoint,
    /// The requested intersection point does not exist.
    #[error("segments do not intersect")]
    NoIntersection,
    /// Collinear overlapping segments have no single intersection point.
    #[error("segments overlap along a line")]
    ParallelOverlap,
    /// A triangle argument has collinear vertices.
    #[error("degenerate (collinear) triangle")]
    DegenerateTriangle,
}
