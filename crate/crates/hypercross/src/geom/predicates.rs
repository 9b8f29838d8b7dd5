//! Exact sign predicates and intersection constructions.
//!
//! Everything here is deterministic and allocation-pure: identical inputs
//! give identical outputs, and no tolerance parameter exists anywhere.

use super::point::{Line2, Point2, Point3, Segment2};
use super::GeomError;
use crate::scalar::GeomScalar;

/// Orientation of an ordered point triple in the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation2 {
    Ccw,
    Cw,
    Collinear,
}

/// Orientation of an ordered point quadruple in 3-space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation3 {
    Positive,
    Negative,
    Coplanar,
}

/// Side of an oriented plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PlaneSide {
    Above,
    On,
    Below,
}

/// Sign of the determinant of `(q - p, r - p)`.
pub fn orient2<S: GeomScalar>(p: &Point2<S>, q: &Point2<S>, r: &Point2<S>) -> Orientation2 {
    let det = (q.x.clone() - p.x.clone()) * (r.y.clone() - p.y.clone())
        - (q.y.clone() - p.y.clone()) * (r.x.clone() - p.x.clone());
    if det.is_positive() {
        Orientation2::Ccw
    } else if det.is_negative() {
        Orientation2::Cw
    } else {
        Orientation2::Collinear
    }
}

/// Sign of the determinant of `(q - p, r - p, s - p)`.
pub fn orient3<S: GeomScalar>(
    p: &Point3<S>,
    q: &Point3<S>,
    r: &Point3<S>,
    s: &Point3<S>,
) -> Orientation3 {
    let u = q.sub(p);
    let v = r.sub(p);
    let w = s.sub(p);
    let det = u.dot(&v.cross(&w));
    if det.is_positive() {
        Orientation3::Positive
    } else if det.is_negative() {
        Orientation3::Negative
    } else {
        Orientation3::Coplanar
    }
}

/// Exact sign of `Ax + By + Cz + D` at `p`.
pub fn plane_side<S: GeomScalar>(h: &super::point::Plane3<S>, p: &Point3<S>) -> PlaneSide {
    let v = h.eval(p);
    if v.is_positive() {
        PlaneSide::Above
    } else if v.is_negative() {
        PlaneSide::Below
    } else {
        PlaneSide::On
    }
}

/// True if `p` lies on the closed segment, assuming `p` is collinear with it.
fn collinear_on_segment<S: GeomScalar>(seg: &Segment2<S>, p: &Point2<S>) -> bool {
    let (lo, hi) = if seg.a() <= seg.b() {
        (seg.a(), seg.b())
    } else {
        (seg.b(), seg.a())
    };
    lo <= p && p <= hi
}

/// Whether two closed segments with four pairwise distinct endpoints have a
/// point in common.
///
/// A shared endpoint is an error rather than `false`: edges of a geometric
/// hypergraph only cross when vertex disjoint, and callers must enforce that
/// explicitly rather than have it silently folded into the answer.
pub fn segments_cross<S: GeomScalar>(
    s1: &Segment2<S>,
    s2: &Segment2<S>,
) -> Result<bool, GeomError> {
    if s1.shares_endpoint(s2) {
        return Err(GeomError::SharedEndpoint);
    }
    let d1 = orient2(s1.a(), s1.b(), s2.a());
    let d2 = orient2(s1.a(), s1.b(), s2.b());
    let d3 = orient2(s2.a(), s2.b(), s1.a());
    let d4 = orient2(s2.a(), s2.b(), s1.b());

    if d1 != d2
        && d1 != Orientation2::Collinear
        && d2 != Orientation2::Collinear
        && d3 != d4
        && d3 != Orientation2::Collinear
        && d4 != Orientation2::Collinear
    {
        return Ok(true);
    }
    // Degenerate contacts: an endpoint lying on the other closed segment.
    if d1 == Orientation2::Collinear && collinear_on_segment(s1, s2.a()) {
        return Ok(true);
    }
    if d2 == Orientation2::Collinear && collinear_on_segment(s1, s2.b()) {
        return Ok(true);
    }
    if d3 == Orientation2::Collinear && collinear_on_segment(s2, s1.a()) {
        return Ok(true);
    }
    if d4 == Orientation2::Collinear && collinear_on_segment(s2, s1.b()) {
        return Ok(true);
    }
    Ok(false)
}

/// Exact intersection point of two crossing, non-parallel segments.
pub fn segment_intersection_point<S: GeomScalar>(
    s1: &Segment2<S>,
    s2: &Segment2<S>,
) -> Result<Point2<S>, GeomError> {
    let l1 = Line2::supporting(s1);
    let l2 = Line2::supporting(s2);
    match l1.intersect(&l2) {
        None => {
            // Parallel supporting lines: either disjoint or overlapping.
            if l1.eval(s2.a()).is_zero() && segments_cross(s1, s2).unwrap_or(false) {
                Err(GeomError::ParallelOverlap)
            } else {
                Err(GeomError::NoIntersection)
            }
        }
        Some(p) => {
            let on_s1 = orient2(s1.a(), s1.b(), &p) == Orientation2::Collinear
                && collinear_on_segment(s1, &p);
            let on_s2 = orient2(s2.a(), s2.b(), &p) == Orientation2::Collinear
                && collinear_on_segment(s2, &p);
            if on_s1 && on_s2 {
                Ok(p)
            } else {
                Err(GeomError::NoIntersection)
            }
        }
    }
}

/// Whether `p` lies in the closed triangle `t`. Closed: boundary contact
/// counts, matching the convention that edges are closed simplices.
pub fn triangle_contains_2d<S: GeomScalar>(
    t: &[Point2<S>; 3],
    p: &Point2<S>,
) -> Result<bool, GeomError> {
    let base = orient2(&t[0], &t[1], &t[2]);
    let (a, b, c) = match base {
        Orientation2::Collinear => return Err(GeomError::DegenerateTriangle),
        Orientation2::Ccw => (&t[0], &t[1], &t[2]),
        Orientation2::Cw => (&t[0], &t[2], &t[1]),
    };
    Ok(orient2(a, b, p) != Orientation2::Cw
        && orient2(b, c, p) != Orientation2::Cw
        && orient2(c, a, p) != Orientation2::Cw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::{Pt2, Pt3};

    fn p2(x: i64, y: i64) -> Pt2 {
        Pt2::new(rat(x), rat(y))
    }

    fn p3(x: i64, y: i64, z: i64) -> Pt3 {
        Pt3::new(rat(x), rat(y), rat(z))
    }

    fn seg(ax: i64, ay: i64, bx: i64, by: i64) -> Segment2<crate::Rat> {
        Segment2::new(p2(ax, ay), p2(bx, by))
    }

    #[test]
    fn orient2_signs() {
        assert_eq!(orient2(&p2(0, 0), &p2(1, 0), &p2(0, 1)), Orientation2::Ccw);
        assert_eq!(
            orient2(&p2(0, 0), &p2(1, 1), &p2(2, 2)),
            Orientation2::Collinear
        );
        assert_eq!(orient2(&p2(0, 0), &p2(0, 1), &p2(1, 0)), Orientation2::Cw);
    }

    #[test]
    fn orient3_signs() {
        assert_eq!(
            orient3(&p3(0, 0, 0), &p3(1, 0, 0), &p3(0, 1, 0), &p3(0, 0, 1)),
            Orientation3::Positive
        );
        assert_eq!(
            orient3(&p3(0, 0, 0), &p3(1, 0, 0), &p3(0, 1, 0), &p3(2, 3, 0)),
            Orientation3::Coplanar
        );
        assert_eq!(
            orient3(&p3(0, 0, 0), &p3(1, 0, 0), &p3(0, 1, 0), &p3(0, 0, -1)),
            Orientation3::Negative
        );
    }

    #[test]
    fn crossing_segments() {
        assert_eq!(segments_cross(&seg(0, 0, 2, 2), &seg(0, 2, 2, 0)), Ok(true));
        assert_eq!(
            segments_cross(&seg(0, 0, 1, 0), &seg(2, 0, 3, 0)),
            Ok(false)
        );
        // Proper crossing through an interior point of a horizontal segment.
        assert_eq!(
            segments_cross(&seg(0, 0, 4, 0), &seg(1, -1, 1, 1)),
            Ok(true)
        );
        // T-contact: endpoint of one in the interior of the other still counts.
        assert_eq!(segments_cross(&seg(0, 0, 4, 0), &seg(2, 0, 2, 5)), Ok(true));
        assert_eq!(
            segments_cross(&seg(0, 0, 2, 2), &seg(0, 0, 5, -1)),
            Err(GeomError::SharedEndpoint)
        );
    }

    #[test]
    fn crossing_is_symmetric() {
        let pairs = [
            (seg(0, 0, 2, 2), seg(0, 2, 2, 0)),
            (seg(0, 0, 1, 0), seg(2, 0, 3, 0)),
            (seg(0, 0, 4, 0), seg(1, -1, 1, 1)),
            (seg(-3, 1, 5, 2), seg(0, 7, 1, -9)),
        ];
        for (s1, s2) in pairs {
            assert_eq!(segments_cross(&s1, &s2), segments_cross(&s2, &s1));
        }
    }

    #[test]
    fn intersection_points() {
        assert_eq!(
            segment_intersection_point(&seg(0, 0, 2, 2), &seg(0, 2, 2, 0)),
            Ok(p2(1, 1))
        );
        assert_eq!(
            segment_intersection_point(&seg(0, 0, 4, 0), &seg(1, -1, 1, 1)),
            Ok(p2(1, 0))
        );
        let p = segment_intersection_point(&seg(0, 0, 3, 3), &seg(0, 3, 3, 0)).unwrap();
        assert_eq!(p, Pt2::new(crate::scalar::frac(3, 2), crate::scalar::frac(3, 2)));
        assert_eq!(
            segment_intersection_point(&seg(0, 0, 1, 0), &seg(2, 1, 3, 1)),
            Err(GeomError::NoIntersection)
        );
        assert_eq!(
            segment_intersection_point(&seg(0, 0, 4, 0), &seg(1, 0, 5, 0)),
            Err(GeomError::ParallelOverlap)
        );
    }

    #[test]
    fn triangle_membership_is_closed() {
        let t = [p2(0, 0), p2(4, 0), p2(0, 4)];
        assert_eq!(triangle_contains_2d(&t, &p2(1, 1)), Ok(true));
        assert_eq!(triangle_contains_2d(&t, &p2(2, 2)), Ok(true)); // boundary
        assert_eq!(triangle_contains_2d(&t, &p2(5, 5)), Ok(false));
        let degenerate = [p2(0, 0), p2(1, 1), p2(2, 2)];
        assert_eq!(
            triangle_contains_2d(&degenerate, &p2(0, 0)),
            Err(GeomError::DegenerateTriangle)
        );
    }

    #[test]
    fn plane_sides() {
        let z0 = super::super::point::Plane3::new(rat(0), rat(0), rat(1), rat(0));
        assert_eq!(plane_side(&z0, &p3(0, 0, 1)), PlaneSide::Above);
        assert_eq!(plane_side(&z0, &p3(1, 2, 0)), PlaneSide::On);
        assert_eq!(plane_side(&z0, &p3(0, 0, -3)), PlaneSide::Below);
    }

    #[test]
    fn orient2_antisymmetry_on_integers() {
        // Predicates are ring-generic; spot-check with i64 coordinates.
        let a = Point2::new(3i64, -2);
        let b = Point2::new(-7, 5);
        let c = Point2::new(1, 9);
        let flip = |o: Orientation2| match o {
            Orientation2::Ccw => Orientation2::Cw,
            Orientation2::Cw => Orientation2::Ccw,
            Orientation2::Collinear => Orientation2::Collinear,
        };
        assert_eq!(orient2(&a, &b, &c), flip(orient2(&b, &a, &c)));
    }
}
