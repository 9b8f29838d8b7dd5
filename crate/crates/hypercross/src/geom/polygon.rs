//! Exact convex polygon clipping.
//!
//! The clipper is the engine behind every "do these closed simplices share a
//! point" question: intersecting k triangles is k-fold clipping, and the
//! certificate point of a strongly crossing tuple is read off the final
//! polygon. Polygons are CCW vertex lists; results may degenerate to a
//! segment (2 vertices), a point (1 vertex) or nothing, all of which are
//! legitimate closed intersections.

use super::point::Point2;
use super::predicates::{orient2, Orientation2};
use super::GeomError;
use crate::scalar::GeomScalar;

/// Signed doubled area of the triangle `(a, b, p)`: positive iff `p` lies
/// strictly left of the directed line `a -> b`.
fn left_value<S: GeomScalar>(a: &Point2<S>, b: &Point2<S>, p: &Point2<S>) -> S {
    (b.x.clone() - a.x.clone()) * (p.y.clone() - a.y.clone())
        - (b.y.clone() - a.y.clone()) * (p.x.clone() - a.x.clone())
}

/// Clip `poly` (convex, CCW) to the closed half-plane on the left of the
/// directed line `a -> b`.
pub fn clip_halfplane<S: GeomScalar>(
    poly: &[Point2<S>],
    a: &Point2<S>,
    b: &Point2<S>,
) -> Vec<Point2<S>> {
    let inside = |p: &Point2<S>| !left_value(a, b, p).is_negative();

    match poly.len() {
        0 => return Vec::new(),
        1 => {
            return if inside(&poly[0]) {
                vec![poly[0].clone()]
            } else {
                Vec::new()
            }
        }
        _ => {}
    }

    let mut out: Vec<Point2<S>> = Vec::with_capacity(poly.len() + 1);
    for i in 0..poly.len() {
        let s = &poly[i];
        let e = &poly[(i + 1) % poly.len()];
        let sv = left_value(a, b, s);
        let ev = left_value(a, b, e);
        let s_in = !sv.is_negative();
        let e_in = !ev.is_negative();
        match (s_in, e_in) {
            (true, true) => out.push(e.clone()),
            (true, false) | (false, true) => {
                // sv and ev differ in sign (one may be zero), so sv - ev != 0
                // and the crossing parameter is exact.
                let t = sv.clone() / (sv - ev.clone());
                let x = s.x.clone() + t.clone() * (e.x.clone() - s.x.clone());
                let y = s.y.clone() + t * (e.y.clone() - s.y.clone());
                out.push(Point2::new(x, y));
                if e_in {
                    out.push(e.clone());
                }
            }
            (false, false) => {}
        }
    }
    dedup_cyclic(out)
}

fn dedup_cyclic<S: GeomScalar>(mut poly: Vec<Point2<S>>) -> Vec<Point2<S>> {
    poly.dedup();
    while poly.len() > 1 && poly.first() == poly.last() {
        poly.pop();
    }
    poly
}

/// Exact intersection of a convex CCW polygon with a closed triangle.
///
/// The triangle may be given in either orientation; degenerate triangles are
/// rejected. The result is CCW with no duplicate vertices and may be empty.
pub fn clip_convex_by_triangle<S: GeomScalar>(
    poly: &[Point2<S>],
    t: &[Point2<S>; 3],
) -> Result<Vec<Point2<S>>, GeomError> {
    let (a, b, c) = match orient2(&t[0], &t[1], &t[2]) {
        Orientation2::Collinear => return Err(GeomError::DegenerateTriangle),
        Orientation2::Ccw => (&t[0], &t[1], &t[2]),
        Orientation2::Cw => (&t[0], &t[2], &t[1]),
    };
    let mut out = poly.to_vec();
    for (u, v) in [(a, b), (b, c), (c, a)] {
        if out.is_empty() {
            break;
        }
        out = clip_halfplane(&out, u, v);
    }
    Ok(out)
}

/// Intersection of a list of closed triangles, computed by iterated
/// clipping. `None` when the list is empty.
pub fn intersect_triangles<S: GeomScalar>(
    triangles: &[[Point2<S>; 3]],
) -> Result<Option<Vec<Point2<S>>>, GeomError> {
    let Some((first, rest)) = triangles.split_first() else {
        return Ok(None);
    };
    if orient2(&first[0], &first[1], &first[2]) == Orientation2::Collinear {
        return Err(GeomError::DegenerateTriangle);
    }
    let mut poly = if orient2(&first[0], &first[1], &first[2]) == Orientation2::Ccw {
        first.to_vec()
    } else {
        vec![first[0].clone(), first[2].clone(), first[1].clone()]
    };
    for t in rest {
        poly = clip_convex_by_triangle(&poly, t)?;
        if poly.is_empty() {
            break;
        }
    }
    Ok(Some(poly))
}

/// Whether `p` lies in the closed convex region spanned by a CCW polygon.
/// Degenerate polygons (point, segment) are handled as their closed hulls.
pub fn convex_polygon_contains<S: GeomScalar>(poly: &[Point2<S>], p: &Point2<S>) -> bool {
    match poly.len() {
        0 => false,
        1 => poly[0] == *p,
        2 => {
            orient2(&poly[0], &poly[1], p) == Orientation2::Collinear && {
                let (lo, hi) = if poly[0] <= poly[1] {
                    (&poly[0], &poly[1])
                } else {
                    (&poly[1], &poly[0])
                };
                lo <= p && p <= hi
            }
        }
        n => (0..n).all(|i| orient2(&poly[i], &poly[(i + 1) % n], p) != Orientation2::Cw),
    }
}

/// Twice the signed area of a polygon (shoelace); positive for CCW.
pub fn double_signed_area<S: GeomScalar>(poly: &[Point2<S>]) -> S {
    let mut acc = S::zero();
    let n = poly.len();
    for i in 0..n {
        let p = &poly[i];
        let q = &poly[(i + 1) % n];
        acc = acc + (p.x.clone() * q.y.clone() - q.x.clone() * p.y.clone());
    }
    acc
}

/// Indices of the convex hull in CCW order, lowest-then-leftmost vertex
/// first (Andrew's monotone chain with exact comparisons). Collinear hull
/// points are excluded: only extreme points are reported.
pub fn convex_hull_indices<S: GeomScalar>(points: &[Point2<S>]) -> Vec<usize> {
    let n = points.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| points[i].cmp(&points[j]));

    let build = |iter: &mut dyn Iterator<Item = usize>| -> Vec<usize> {
        let mut chain: Vec<usize> = Vec::new();
        for i in iter {
            while chain.len() >= 2 {
                let a = &points[chain[chain.len() - 2]];
                let b = &points[chain[chain.len() - 1]];
                if orient2(a, b, &points[i]) != Orientation2::Ccw {
                    chain.pop();
                } else {
                    break;
                }
            }
            chain.push(i);
        }
        chain
    };

    let mut lower = build(&mut order.iter().copied());
    let mut upper = build(&mut order.iter().rev().copied());
    lower.pop();
    upper.pop();
    lower.append(&mut upper);
    lower
}

#[cfg(test)]
mod tests {
    use num_traits::Signed;

    use super::*;
    use crate::scalar::rat;
    use crate::{Pt2, Rat};

    fn p2(x: i64, y: i64) -> Pt2 {
        Pt2::new(rat(x), rat(y))
    }

    fn unit_square() -> Vec<Pt2> {
        vec![p2(0, 0), p2(1, 0), p2(1, 1), p2(0, 1)]
    }

    #[test]
    fn clip_identity_and_empty() {
        let huge = [p2(-100, -100), p2(100, -100), p2(0, 100)];
        let clipped = clip_convex_by_triangle(&unit_square(), &huge).unwrap();
        assert_eq!(double_signed_area(&clipped), rat(2));
        assert_eq!(clipped.len(), 4);

        let far = [p2(50, 50), p2(60, 50), p2(50, 60)];
        assert!(clip_convex_by_triangle(&unit_square(), &far)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn clip_output_is_subset_of_both_inputs() {
        let square = vec![p2(0, 0), p2(2, 0), p2(2, 2), p2(0, 2)];
        let tri = [p2(1, -1), p2(3, 1), p2(1, 3)];
        let out = clip_convex_by_triangle(&square, &tri).unwrap();
        // The overlap is the rectangle [1,2] x [0,2].
        assert_eq!(out.len(), 4);
        assert_eq!(double_signed_area(&out), rat(4));
        for v in &out {
            assert!(convex_polygon_contains(&square, v));
            assert!(super::super::predicates::triangle_contains_2d(&tri, v).unwrap());
        }
        // CCW output.
        assert!(double_signed_area(&out).is_positive());
    }

    #[test]
    fn clip_handles_single_point_contact() {
        // Triangles sharing exactly the vertex (1, 1).
        let t1 = [p2(0, 0), p2(1, 1), p2(-1, 2)];
        let t2 = [p2(1, 1), p2(3, 0), p2(3, 3)];
        let out = intersect_triangles(&[t1, t2]).unwrap().unwrap();
        assert_eq!(out, vec![p2(1, 1)]);
    }

    #[test]
    fn clip_degenerate_triangle_rejected() {
        let bad = [p2(0, 0), p2(1, 1), p2(2, 2)];
        assert_eq!(
            clip_convex_by_triangle(&unit_square(), &bad),
            Err(GeomError::DegenerateTriangle)
        );
    }

    #[test]
    fn hull_of_square_with_interior_point() {
        let pts: Vec<Pt2> = vec![p2(0, 0), p2(5, 1), p2(4, 6), p2(1, 5), p2(2, 2)];
        let hull = convex_hull_indices(&pts);
        assert_eq!(hull.len(), 4);
        assert!(!hull.contains(&4));
        // CCW order check.
        for w in 0..hull.len() {
            let a = &pts[hull[w]];
            let b = &pts[hull[(w + 1) % hull.len()]];
            let c = &pts[hull[(w + 2) % hull.len()]];
            assert_eq!(orient2(a, b, c), Orientation2::Ccw);
        }
    }

    #[test]
    fn signed_area_orientation() {
        let sq: Vec<Point2<Rat>> = unit_square();
        assert_eq!(double_signed_area(&sq), rat(2));
        let cw: Vec<Pt2> = sq.into_iter().rev().collect();
        assert_eq!(double_signed_area(&cw), rat(-2));
    }
}
