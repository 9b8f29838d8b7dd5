//! Points, segments, lines and planes with exact coordinates.

use crate::scalar::GeomScalar;

/// A point in the plane. Ordering is lexicographic by `(x, y)`, which is the
/// tie-break order used wherever a canonical representative is needed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point2<S> {
    pub x: S,
    pub y: S,
}

impl<S: GeomScalar> Point2<S> {
    pub fn new(x: S, y: S) -> Self {
        Point2 { x, y }
    }
}

/// A point in 3-space. Ordering is lexicographic by `(x, y, z)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point3<S> {
    pub x: S,
    pub y: S,
    pub z: S,
}

impl<S: GeomScalar> Point3<S> {
    pub fn new(x: S, y: S, z: S) -> Self {
        Point3 { x, y, z }
    }

    /// Displacement vector `self - other`.
    pub fn sub(&self, other: &Point3<S>) -> Vector3<S> {
        Vector3 {
            x: self.x.clone() - other.x.clone(),
            y: self.y.clone() - other.y.clone(),
            z: self.z.clone() - other.z.clone(),
        }
    }
}

/// A direction in 3-space. Never normalized: all downstream predicates are
/// sign tests, so square roots never appear.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector3<S> {
    pub x: S,
    pub y: S,
    pub z: S,
}

impl<S: GeomScalar> Vector3<S> {
    pub fn new(x: S, y: S, z: S) -> Self {
        Vector3 { x, y, z }
    }

    pub fn cross(&self, other: &Vector3<S>) -> Vector3<S> {
        Vector3 {
            x: self.y.clone() * other.z.clone() - self.z.clone() * other.y.clone(),
            y: self.z.clone() * other.x.clone() - self.x.clone() * other.z.clone(),
            z: self.x.clone() * other.y.clone() - self.y.clone() * other.x.clone(),
        }
    }

    pub fn dot(&self, other: &Vector3<S>) -> S {
        self.x.clone() * other.x.clone()
            + self.y.clone() * other.y.clone()
            + self.z.clone() * other.z.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// True if `other` points in exactly the same direction (`other = t*self`
    /// for some `t > 0`).
    pub fn is_positive_multiple_of(&self, other: &Vector3<S>) -> bool {
        !self.is_zero()
            && !other.is_zero()
            && self.cross(other).is_zero()
            && self.dot(other).is_positive()
    }
}

/// A closed segment in the plane with distinct endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment2<S> {
    a: Point2<S>,
    b: Point2<S>,
}

impl<S: GeomScalar> Segment2<S> {
    /// Panics if the endpoints coincide.
    pub fn new(a: Point2<S>, b: Point2<S>) -> Self {
        assert!(a != b, "segment endpoints must be distinct");
        Segment2 { a, b }
    }

    pub fn a(&self) -> &Point2<S> {
        &self.a
    }

    pub fn b(&self) -> &Point2<S> {
        &self.b
    }

    /// Endpoint with the smaller x-coordinate (ties broken by y).
    pub fn left(&self) -> &Point2<S> {
        if self.a <= self.b {
            &self.a
        } else {
            &self.b
        }
    }

    /// Endpoint with the larger x-coordinate (ties broken by y).
    pub fn right(&self) -> &Point2<S> {
        if self.a <= self.b {
            &self.b
        } else {
            &self.a
        }
    }

    pub fn shares_endpoint(&self, other: &Segment2<S>) -> bool {
        self.a == other.a || self.a == other.b || self.b == other.a || self.b == other.b
    }
}

/// A line `{ (x, y) : Ax + By + C = 0 }` in the plane.
///
/// Stored with the leading nonzero coefficient scaled to one, so two equal
/// lines compare equal structurally regardless of how they were built. Only
/// meaningful over field scalars.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Line2<S> {
    pub a: S,
    pub b: S,
    pub c: S,
}

impl<S: GeomScalar> Line2<S> {
    /// Panics if `(a, b) == (0, 0)`.
    pub fn new(a: S, b: S, c: S) -> Self {
        assert!(
            !(a.is_zero() && b.is_zero()),
            "line coefficients (A, B) must not both vanish"
        );
        let lead = if a.is_zero() { b.clone() } else { a.clone() };
        Line2 {
            a: a / lead.clone(),
            b: b / lead.clone(),
            c: c / lead,
        }
    }

    /// Supporting line through two distinct points.
    pub fn through(p: &Point2<S>, q: &Point2<S>) -> Self {
        assert!(p != q, "cannot build a line through coincident points");
        let a = q.y.clone() - p.y.clone();
        let b = p.x.clone() - q.x.clone();
        let c = q.x.clone() * p.y.clone() - p.x.clone() * q.y.clone();
        Line2::new(a, b, c)
    }

    pub fn supporting(seg: &Segment2<S>) -> Self {
        Line2::through(seg.a(), seg.b())
    }

    /// Signed value of `Ax + By + C` at `p`.
    pub fn eval(&self, p: &Point2<S>) -> S {
        self.a.clone() * p.x.clone() + self.b.clone() * p.y.clone() + self.c.clone()
    }

    pub fn is_vertical(&self) -> bool {
        self.b.is_zero()
    }

    /// Slope `-A/B`; panics on vertical lines.
    pub fn slope(&self) -> S {
        assert!(!self.is_vertical(), "vertical line has no slope");
        -self.a.clone() / self.b.clone()
    }

    /// The y-value at `x`; panics on vertical lines.
    pub fn y_at(&self, x: &S) -> S {
        assert!(!self.is_vertical());
        -(self.a.clone() * x.clone() + self.c.clone()) / self.b.clone()
    }

    /// Intersection point of two non-parallel lines.
    pub fn intersect(&self, other: &Line2<S>) -> Option<Point2<S>> {
        let det = self.a.clone() * other.b.clone() - other.a.clone() * self.b.clone();
        if det.is_zero() {
            return None;
        }
        let x = (self.b.clone() * other.c.clone() - other.b.clone() * self.c.clone()) / det.clone();
        let y = (other.a.clone() * self.c.clone() - self.a.clone() * other.c.clone()) / det;
        Some(Point2::new(x, y))
    }
}

/// A plane `{ (x, y, z) : Ax + By + Cz + D = 0 }` in 3-space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Plane3<S> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
}

impl<S: GeomScalar> Plane3<S> {
    /// Panics if `(a, b, c) == (0, 0, 0)`.
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        assert!(
            !(a.is_zero() && b.is_zero() && c.is_zero()),
            "plane normal must not vanish"
        );
        Plane3 { a, b, c, d }
    }

    /// Plane through three affinely independent points. Returns `None` when
    /// the points are collinear.
    pub fn through(p: &Point3<S>, q: &Point3<S>, r: &Point3<S>) -> Option<Self> {
        let n = q.sub(p).cross(&r.sub(p));
        if n.is_zero() {
            return None;
        }
        let d = -(n.x.clone() * p.x.clone() + n.y.clone() * p.y.clone() + n.z.clone() * p.z.clone());
        Some(Plane3 {
            a: n.x,
            b: n.y,
            c: n.z,
            d,
        })
    }

    /// Signed value of `Ax + By + Cz + D` at `p`.
    pub fn eval(&self, p: &Point3<S>) -> S {
        self.a.clone() * p.x.clone()
            + self.b.clone() * p.y.clone()
            + self.c.clone() * p.z.clone()
            + self.d.clone()
    }

    pub fn normal(&self) -> Vector3<S> {
        Vector3::new(self.a.clone(), self.b.clone(), self.c.clone())
    }
}
