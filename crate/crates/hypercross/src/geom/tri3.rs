//! Exact disjointness test for closed triangles in 3-space.
//!
//! Non-coplanar triangles can only meet along the line where their two
//! supporting planes intersect, so the test reduces each triangle to its
//! exact parameter interval on that line and checks interval overlap.
//! Coplanar pairs fall back to planar polygon clipping. An independent
//! segment-versus-triangle route lives in [`crate::oracle`] for
//! cross-checking; keep the two implementations separate.

use super::point::{Plane3, Point2, Point3};
use super::polygon::clip_convex_by_triangle;
use super::predicates::{orient2, Orientation2};
use super::GeomError;
use crate::scalar::GeomScalar;

/// Project a point of a plane with normal `n` to 2-D by dropping one
/// coordinate along which `n` is nonzero. Injective on the plane.
pub(crate) fn drop_axis_of<S: GeomScalar>(n: &super::point::Vector3<S>) -> usize {
    // Any axis with a nonzero normal component keeps the projection
    // injective; prefer the one with the largest magnitude for no particular
    // numerical reason beyond determinism.
    let mags = [n.x.abs(), n.y.abs(), n.z.abs()];
    let mut best = 0;
    for i in 1..3 {
        if mags[i] > mags[best] {
            best = i;
        }
    }
    best
}

pub(crate) fn project_point<S: GeomScalar>(p: &Point3<S>, drop: usize) -> Point2<S> {
    match drop {
        0 => Point2::new(p.y.clone(), p.z.clone()),
        1 => Point2::new(p.x.clone(), p.z.clone()),
        _ => Point2::new(p.x.clone(), p.y.clone()),
    }
}

fn triangle_projected<S: GeomScalar>(t: &[Point3<S>; 3], drop: usize) -> [Point2<S>; 3] {
    [
        project_point(&t[0], drop),
        project_point(&t[1], drop),
        project_point(&t[2], drop),
    ]
}

/// Parameter interval of `t ∩ line(p0, dir)` where the triangle is known to
/// lie in a plane containing the line's ambient plane... concretely: collect
/// the parameters of every point where the triangle's boundary meets the
/// `other` plane. The triangle lies in its own plane, so these points are
/// exactly the endpoints of the (possibly empty or degenerate) chord cut by
/// the plane-intersection line.
fn chord_interval<S: GeomScalar>(
    t: &[Point3<S>; 3],
    other: &Plane3<S>,
    p0: &Point3<S>,
    dir: &super::point::Vector3<S>,
) -> Option<(S, S)> {
    let dd = dir.dot(dir);
    let param = |p: &Point3<S>| -> S { p.sub(p0).dot(dir) / dd.clone() };

    let vals: Vec<S> = t.iter().map(|p| other.eval(p)).collect();
    let mut params: Vec<S> = Vec::new();
    for i in 0..3 {
        if vals[i].is_zero() {
            params.push(param(&t[i]));
        }
        let j = (i + 1) % 3;
        if (vals[i].is_positive() && vals[j].is_negative())
            || (vals[i].is_negative() && vals[j].is_positive())
        {
            // Exact crossing point of edge (i, j) with the plane.
            let s = vals[i].clone() / (vals[i].clone() - vals[j].clone());
            let x = t[i].x.clone() + s.clone() * (t[j].x.clone() - t[i].x.clone());
            let y = t[i].y.clone() + s.clone() * (t[j].y.clone() - t[i].y.clone());
            let z = t[i].z.clone() + s * (t[j].z.clone() - t[i].z.clone());
            params.push(param(&Point3::new(x, y, z)));
        }
    }
    let lo = params.iter().min()?.clone();
    let hi = params.iter().max().unwrap().clone();
    Some((lo, hi))
}

fn coplanar_triangles_intersect<S: GeomScalar>(
    t1: &[Point3<S>; 3],
    t2: &[Point3<S>; 3],
    plane: &Plane3<S>,
) -> Result<bool, GeomError> {
    let drop = drop_axis_of(&plane.normal());
    let a = triangle_projected(t1, drop);
    let b = triangle_projected(t2, drop);
    let poly = if orient2(&a[0], &a[1], &a[2]) == Orientation2::Ccw {
        a.to_vec()
    } else {
        vec![a[0].clone(), a[2].clone(), a[1].clone()]
    };
    Ok(!clip_convex_by_triangle(&poly, &b)?.is_empty())
}

/// Whether two closed triangles in 3-space have empty intersection.
///
/// Requires both triangles non-degenerate and the six vertices pairwise
/// distinct.
pub fn triangles_disjoint_3d<S: GeomScalar>(
    t1: &[Point3<S>; 3],
    t2: &[Point3<S>; 3],
) -> Result<bool, GeomError> {
    let h1 = Plane3::through(&t1[0], &t1[1], &t1[2]).ok_or(GeomError::DegenerateTriangle)?;
    let h2 = Plane3::through(&t2[0], &t2[1], &t2[2]).ok_or(GeomError::DegenerateTriangle)?;

    let s2: Vec<S> = t2.iter().map(|p| h1.eval(p)).collect();
    if s2.iter().all(|v| v.is_positive()) || s2.iter().all(|v| v.is_negative()) {
        return Ok(true);
    }
    let s1: Vec<S> = t1.iter().map(|p| h2.eval(p)).collect();
    if s1.iter().all(|v| v.is_positive()) || s1.iter().all(|v| v.is_negative()) {
        return Ok(true);
    }

    let dir = h1.normal().cross(&h2.normal());
    if dir.is_zero() {
        // Parallel planes that did not separate: the triangles are coplanar.
        return Ok(!coplanar_triangles_intersect(t1, t2, &h1)?);
    }

    // A point on the intersection line: fix to zero the coordinate along
    // which the direction is nonzero and solve the remaining 2x2 system.
    let axis = drop_axis_of(&dir);
    let p0 = line_point(&h1, &h2, axis);

    let i1 = chord_interval(t1, &h2, &p0, &dir);
    let i2 = chord_interval(t2, &h1, &p0, &dir);
    match (i1, i2) {
        (Some((lo1, hi1)), Some((lo2, hi2))) => {
            let lo = lo1.max(lo2);
            let hi = hi1.min(hi2);
            Ok(lo > hi)
        }
        _ => Ok(true),
    }
}

/// Solve for a point on the intersection of two planes with the coordinate
/// `axis` pinned to zero. Caller guarantees the 2x2 minor is nonsingular
/// (the cross product of the normals is nonzero along `axis`).
fn line_point<S: GeomScalar>(h1: &Plane3<S>, h2: &Plane3<S>, axis: usize) -> Point3<S> {
    let (a1, b1) = minor_coeffs(h1, axis);
    let (a2, b2) = minor_coeffs(h2, axis);
    let det = a1.clone() * b2.clone() - a2.clone() * b1.clone();
    debug_assert!(!det.is_zero());
    let u = (b1.clone() * h2.d.clone() - b2.clone() * h1.d.clone()) / det.clone();
    let v = (a2.clone() * h1.d.clone() - a1.clone() * h2.d.clone()) / det;
    match axis {
        0 => Point3::new(S::zero(), u, v),
        1 => Point3::new(u, S::zero(), v),
        _ => Point3::new(u, v, S::zero()),
    }
}

fn minor_coeffs<S: GeomScalar>(h: &Plane3<S>, axis: usize) -> (S, S) {
    match axis {
        0 => (h.b.clone(), h.c.clone()),
        1 => (h.a.clone(), h.c.clone()),
        _ => (h.a.clone(), h.b.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::Pt3;

    fn p3(x: i64, y: i64, z: i64) -> Pt3 {
        Pt3::new(rat(x), rat(y), rat(z))
    }

    #[test]
    fn translated_copies_are_disjoint() {
        let t1 = [p3(0, 0, 0), p3(4, 0, 0), p3(0, 4, 0)];
        let t2 = [p3(0, 0, 1), p3(4, 0, 1), p3(0, 4, 1)];
        assert_eq!(triangles_disjoint_3d(&t1, &t2), Ok(true));
    }

    #[test]
    fn piercing_triangle_is_not_disjoint() {
        let t1 = [p3(-5, -5, 0), p3(5, -5, 0), p3(0, 5, 0)];
        let t2 = [p3(0, 0, -1), p3(1, 0, 1), p3(0, 1, 1)];
        assert_eq!(triangles_disjoint_3d(&t1, &t2), Ok(false));
    }

    #[test]
    fn coplanar_overlap_and_separation() {
        let t1 = [p3(0, 0, 0), p3(4, 0, 0), p3(0, 4, 0)];
        let overlapping = [p3(1, 1, 0), p3(5, 1, 0), p3(1, 5, 0)];
        assert_eq!(triangles_disjoint_3d(&t1, &overlapping), Ok(false));
        let far = [p3(10, 10, 0), p3(14, 10, 0), p3(10, 14, 0)];
        assert_eq!(triangles_disjoint_3d(&t1, &far), Ok(true));
    }

    #[test]
    fn vertex_touching_counts_as_intersection() {
        // t2 touches the plane of t1 exactly at a point inside t1.
        let t1 = [p3(-5, -5, 0), p3(5, -5, 0), p3(0, 5, 0)];
        let t2 = [p3(0, 0, 0), p3(6, 0, 3), p3(6, 1, 3)];
        assert_eq!(triangles_disjoint_3d(&t1, &t2), Ok(false));
    }

    #[test]
    fn degenerate_triangle_is_an_error() {
        let bad = [p3(0, 0, 0), p3(1, 1, 1), p3(2, 2, 2)];
        let t = [p3(0, 0, 1), p3(4, 0, 1), p3(0, 4, 1)];
        assert_eq!(
            triangles_disjoint_3d(&bad, &t),
            Err(GeomError::DegenerateTriangle)
        );
    }
}
