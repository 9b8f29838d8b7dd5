//! Independent reference implementations and scenario generators for the
//! test suites.
//!
//! Everything here deliberately takes a different computational route from
//! the main library so the two can cross-check each other; none of it is
//! used by the primary code paths. The generators build randomized valid
//! configurations for the witness extractors, seeded and reproducible.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{
    convex_hull_indices, orient2, segments_cross, triangle_contains_2d, Line2, Orientation2,
    Plane3, Point2, Point3,
};
use crate::hypergraph::{
    check_general_position_2d, point_extends_gp_2d, GeometricHypergraph, PointSet, Simplex,
};
use crate::scalar::{frac, rat, GeomScalar};
use crate::{Pt2, Pt3, Rat, Seg2, Vec3};

/// Whether a closed segment in 3-space meets a closed triangle, by direct
/// case analysis (plane signs, then planar containment via projection).
pub fn segment_meets_triangle_3d(a: &Pt3, b: &Pt3, t: &[Pt3; 3]) -> bool {
    let plane = Plane3::through(&t[0], &t[1], &t[2]).expect("non-degenerate triangle");
    let va = plane.eval(a);
    let vb = plane.eval(b);
    let drop = dominant_axis(&plane.normal());
    let tri2 = [
        project(&t[0], drop),
        project(&t[1], drop),
        project(&t[2], drop),
    ];
    if va.is_zero() && vb.is_zero() {
        // Segment lies in the plane: 2-D segment versus triangle.
        let a2 = project(a, drop);
        let b2 = project(b, drop);
        if triangle_contains_2d(&tri2, &a2).unwrap() || triangle_contains_2d(&tri2, &b2).unwrap() {
            return true;
        }
        if a2 == b2 {
            return false;
        }
        let seg = Seg2::new(a2, b2);
        for i in 0..3 {
            let side = Seg2::new(tri2[i].clone(), tri2[(i + 1) % 3].clone());
            if seg.shares_endpoint(&side) {
                continue;
            }
            if matches!(segments_cross(&seg, &side), Ok(true)) {
                return true;
            }
        }
        return false;
    }
    if va.is_zero() {
        return triangle_contains_2d(&tri2, &project(a, drop)).unwrap();
    }
    if vb.is_zero() {
        return triangle_contains_2d(&tri2, &project(b, drop)).unwrap();
    }
    if va.is_positive() == vb.is_positive() {
        return false;
    }
    // Proper crossing of the plane: interpolate the crossing point exactly.
    let s = va.clone() / (va - vb);
    let x = a.x.clone() + s.clone() * (b.x.clone() - a.x.clone());
    let y = a.y.clone() + s.clone() * (b.y.clone() - a.y.clone());
    let z = a.z.clone() + s * (b.z.clone() - a.z.clone());
    triangle_contains_2d(&tri2, &project(&Point3::new(x, y, z), drop)).unwrap()
}

fn dominant_axis(n: &Vec3) -> usize {
    use num_traits::Signed;
    let mags = [n.x.abs(), n.y.abs(), n.z.abs()];
    let mut best = 0;
    for i in 1..3 {
        if mags[i] > mags[best] {
            best = i;
        }
    }
    best
}

fn project(p: &Pt3, drop: usize) -> Pt2 {
    match drop {
        0 => Point2::new(p.y.clone(), p.z.clone()),
        1 => Point2::new(p.x.clone(), p.z.clone()),
        _ => Point2::new(p.x.clone(), p.y.clone()),
    }
}

/// Reference disjointness test for closed triangles in 3-space: six
/// segment-versus-triangle queries plus a coplanar containment fallback.
pub fn triangles_disjoint_3d_reference(t1: &[Pt3; 3], t2: &[Pt3; 3]) -> bool {
    for i in 0..3 {
        let j = (i + 1) % 3;
        if segment_meets_triangle_3d(&t1[i], &t1[j], t2)
            || segment_meets_triangle_3d(&t2[i], &t2[j], t1)
        {
            return false;
        }
    }
    // Edges miss each other; the only remaining contact would be one
    // triangle strictly inside the other within a common plane.
    let plane = Plane3::through(&t1[0], &t1[1], &t1[2]).expect("non-degenerate");
    if t2.iter().all(|p| plane.eval(p).is_zero()) {
        let drop = dominant_axis(&plane.normal());
        let a2 = [
            project(&t1[0], drop),
            project(&t1[1], drop),
            project(&t1[2], drop),
        ];
        let b2 = [
            project(&t2[0], drop),
            project(&t2[1], drop),
            project(&t2[2], drop),
        ];
        if triangle_contains_2d(&a2, &b2[0]).unwrap() || triangle_contains_2d(&b2, &a2[0]).unwrap()
        {
            return false;
        }
    }
    true
}

/// Reference common-point test for a family of closed planar triangles: the
/// intersection is nonempty iff some vertex of the arrangement of the 3k
/// supporting lines (triangle corners included) lies in all triangles.
pub fn triangles_common_point_reference<S: GeomScalar>(triangles: &[[Point2<S>; 3]]) -> bool {
    let mut lines: Vec<Line2<S>> = Vec::with_capacity(3 * triangles.len());
    for t in triangles {
        for i in 0..3 {
            lines.push(Line2::through(&t[i], &t[(i + 1) % 3]));
        }
    }
    let mut candidates: Vec<Point2<S>> = Vec::new();
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            if let Some(p) = lines[i].intersect(&lines[j]) {
                candidates.push(p);
            }
        }
    }
    candidates.into_iter().any(|p| {
        triangles
            .iter()
            .all(|t| triangle_contains_2d(t, &p) == Ok(true))
    })
}

/// Intersection of closed half-planes (each `(a, b)` keeps the closed side
/// left of the directed line a -> b), computed the slow way: collect all
/// pairwise line intersections that satisfy every constraint and take their
/// convex hull. Intended for bounded feasible regions.
pub fn halfplane_intersection_reference<S: GeomScalar>(
    halfplanes: &[(Point2<S>, Point2<S>)],
) -> Vec<Point2<S>> {
    let lines: Vec<Line2<S>> = halfplanes
        .iter()
        .map(|(a, b)| Line2::through(a, b))
        .collect();
    let feasible = |p: &Point2<S>| {
        halfplanes
            .iter()
            .all(|(a, b)| orient2(a, b, p) != Orientation2::Cw)
    };
    let mut vertices: Vec<Point2<S>> = Vec::new();
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            if let Some(p) = lines[i].intersect(&lines[j]) {
                if feasible(&p) && !vertices.contains(&p) {
                    vertices.push(p);
                }
            }
        }
    }
    if vertices.len() <= 2 {
        vertices.sort();
        return vertices;
    }
    let hull = convex_hull_indices(&vertices);
    hull.into_iter().map(|i| vertices[i].clone()).collect()
}

/// Reference predicate: does the great circle supporting arc 1 meet the
/// closed shorter arc 2? Computed from the intersection line of the two
/// great-circle planes: the circle meets the arc iff one of the two
/// intersection directions is a nonnegative combination of the arc's
/// endpoint directions.
pub fn circle_meets_arc_reference(a1: (&Vec3, &Vec3), a2: (&Vec3, &Vec3)) -> bool {
    let n1 = a1.0.cross(a1.1);
    let n2 = a2.0.cross(a2.1);
    let d = n1.cross(&n2);
    assert!(!d.is_zero(), "coincident great circles are out of scope");
    let in_cone = |dir: &Vec3| {
        // Solve dir = alpha * u + beta * w within the plane of arc 2; the
        // common positive factor n2.n2 is dropped since only signs matter.
        let alpha = dir.cross(a2.1).dot(&n2);
        let beta = a2.0.cross(dir).dot(&n2);
        let zero = rat(0);
        alpha >= zero && beta >= zero && (alpha.is_positive() || beta.is_positive())
    };
    let neg = Vec3::new(-d.x.clone(), -d.y.clone(), -d.z.clone());
    in_cone(&d) || in_cone(&neg)
}

/// Reference avoiding predicate built from [`circle_meets_arc_reference`].
pub fn arcs_avoiding_reference(a1: (&Vec3, &Vec3), a2: (&Vec3, &Vec3)) -> bool {
    !circle_meets_arc_reference(a1, a2) && !circle_meets_arc_reference(a2, a1)
}

/// Exact maximum independent set size of a simple graph, by branching on a
/// highest-degree vertex. Exponential; fine for a few dozen vertices.
pub fn max_independent_set_reference(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in edges {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    fn mis(adj: &[Vec<bool>], alive: &mut Vec<bool>) -> usize {
        let n = adj.len();
        let mut pick = None;
        let mut best_deg = 0;
        let mut alive_count = 0;
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            alive_count += 1;
            let deg = (0..n).filter(|&u| alive[u] && adj[v][u]).count();
            if pick.is_none() || deg > best_deg {
                pick = Some(v);
                best_deg = deg;
            }
        }
        let Some(v) = pick else { return 0 };
        if best_deg == 0 {
            return alive_count;
        }
        alive[v] = false;
        let without = mis(adj, alive);
        let dropped: Vec<usize> = (0..n).filter(|&u| alive[u] && adj[v][u]).collect();
        for &u in &dropped {
            alive[u] = false;
        }
        let with = 1 + mis(adj, alive);
        for &u in &dropped {
            alive[u] = true;
        }
        alive[v] = true;
        with.max(without)
    }
    let mut alive = vec![true; n];
    mis(&adj, &mut alive)
}

/// Every k-tuple of edges realizing the convex clockwise block pattern, as
/// sorted edge-index tuples; exhaustive enumeration for cross-checking the
/// detector.
pub fn all_convex_patterns(h: &GeometricHypergraph, k: usize) -> Vec<Vec<usize>> {
    fn rec(
        h: &GeometricHypergraph,
        k: usize,
        from: usize,
        chosen: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == k {
            if pattern_matches(h, chosen) {
                found.push(chosen.clone());
            }
            return;
        }
        for e in from..h.edge_count() {
            if chosen
                .iter()
                .all(|&c| h.edges()[c].is_vertex_disjoint(&h.edges()[e]))
            {
                chosen.push(e);
                rec(h, k, e + 1, chosen, found);
                chosen.pop();
            }
        }
    }
    fn pattern_matches(h: &GeometricHypergraph, chosen: &[usize]) -> bool {
        let k = chosen.len();
        let mut verts: Vec<(usize, usize)> = Vec::with_capacity(3 * k);
        for (label, &e) in chosen.iter().enumerate() {
            for &v in h.edges()[e].vertices() {
                verts.push((v, label));
            }
        }
        verts.sort_unstable();
        let labels: Vec<usize> = verts.iter().map(|&(_, l)| l).collect();
        (0..3 * k).all(|i| labels[i] == labels[(i + k) % (3 * k)])
    }
    let mut found = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    rec(h, k, 0, &mut chosen, &mut found);
    found
}

// ---------------------------------------------------------------------------
// Scenario generators for the witness extractors.
// ---------------------------------------------------------------------------

/// A randomized valid input for the four-crossing extraction: a hypergraph,
/// the apex vertex, and four pairwise crossing bases of its link graph, each
/// base group carrying extra donor apexes.
pub struct FourCrossingScenario {
    pub hypergraph: GeometricHypergraph,
    pub vertex: usize,
    pub bases: [(usize, usize); 4],
}

/// A randomized valid input for the greedy selection: k pairwise crossing
/// bases and k apexes lying above all of them, with all k^2 edges present.
pub struct HellyScenario {
    pub hypergraph: GeometricHypergraph,
    pub bases: Vec<(usize, usize)>,
    pub apexes: Vec<usize>,
}

/// Random pairwise crossing segments: distinct integer slopes, random
/// intercepts, each segment extended a little past its extreme intersection
/// points so every pair crosses properly.
pub fn random_crossing_segments(rng: &mut ChaCha8Rng, k: usize) -> Vec<(Pt2, Pt2)> {
    loop {
        let mut slopes: Vec<i64> = Vec::new();
        while slopes.len() < k {
            let m = rng.gen_range(-9..=9);
            if !slopes.contains(&m) {
                slopes.push(m);
            }
        }
        let lines: Vec<(Rat, Rat)> = slopes
            .iter()
            .map(|&m| (rat(m), rat(rng.gen_range(-60..=60))))
            .collect();
        let mut endpoints: Vec<(Pt2, Pt2)> = Vec::with_capacity(k);
        for i in 0..k {
            let mut xs: Vec<Rat> = Vec::new();
            for (j, line) in lines.iter().enumerate() {
                if i == j {
                    continue;
                }
                let dm = lines[i].0.clone() - line.0.clone();
                xs.push((line.1.clone() - lines[i].1.clone()) / dm);
            }
            // Integer extents past the extreme crossings keep every
            // endpoint coordinate an integer; general-position rejection
            // below handles the occasional x collision.
            let lo = (xs.iter().min().unwrap().floor() - rat(rng.gen_range(1..=7))).floor();
            let hi = (xs.iter().max().unwrap().ceil() + rat(rng.gen_range(1..=7))).ceil();
            let y_at = |x: &Rat| lines[i].0.clone() * x.clone() + lines[i].1.clone();
            endpoints.push((
                Point2::new(lo.clone(), y_at(&lo)),
                Point2::new(hi.clone(), y_at(&hi)),
            ));
        }
        let pts: Vec<Pt2> = endpoints
            .iter()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect();
        if check_general_position_2d(&pts).is_some() {
            continue;
        }
        let segs: Vec<Seg2> = endpoints
            .iter()
            .map(|(a, b)| Seg2::new(a.clone(), b.clone()))
            .collect();
        let crossing = (0..k)
            .all(|i| (i + 1..k).all(|j| matches!(segments_cross(&segs[i], &segs[j]), Ok(true))));
        if crossing {
            return endpoints;
        }
    }
}

/// Append `p` if the grown point list stays in general position.
fn try_push(points: &mut Vec<Pt2>, p: Pt2) -> bool {
    if point_extends_gp_2d(points, &p) {
        points.push(p);
        true
    } else {
        false
    }
}

/// Random rational strictly inside the open interval (lo, hi). Integers are
/// preferred when the interval contains one: they keep the coordinate
/// arithmetic cheap.
fn rat_between(rng: &mut ChaCha8Rng, lo: &Rat, hi: &Rat) -> Rat {
    use num_traits::ToPrimitive;
    let lo_int = lo.floor().to_integer().to_i64().unwrap_or(i64::MIN / 4) + 1;
    let hi_int = hi.ceil().to_integer().to_i64().unwrap_or(i64::MAX / 4) - 1;
    if lo_int <= hi_int && rng.gen_bool(0.9) {
        let x = rat(rng.gen_range(lo_int..=hi_int));
        if &x > lo && &x < hi {
            return x;
        }
    }
    let t = frac(rng.gen_range(1..=96), 97);
    lo.clone() + (hi.clone() - lo.clone()) * t
}

pub fn four_crossing_scenario(seed: u64, apexes_per_group: usize) -> FourCrossingScenario {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'outer: loop {
        let endpoints = random_crossing_segments(&mut rng, 4);
        let mut points: Vec<Pt2> = endpoints
            .iter()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect();
        let bases: [(usize, usize); 4] = [(0, 1), (2, 3), (4, 5), (6, 7)];
        let lines: Vec<Line2<Rat>> = endpoints
            .iter()
            .map(|(a, b)| Line2::through(a, b))
            .collect();

        // Common open x-range of all four segments.
        let lo = endpoints.iter().map(|(a, _)| a.x.clone()).max().unwrap();
        let hi = endpoints.iter().map(|(_, b)| b.x.clone()).min().unwrap();
        if lo >= hi {
            continue;
        }

        // The apex vertex: above every line, x inside the common range.
        let v = points.len();
        let mut placed = false;
        for _ in 0..50 {
            let x = rat_between(&mut rng, &lo, &hi);
            let ymax = lines.iter().map(|l| l.y_at(&x)).max().unwrap();
            let y = ymax + rat(rng.gen_range(1..=40));
            if try_push(&mut points, Point2::new(x, y)) {
                placed = true;
                break;
            }
        }
        if !placed {
            continue 'outer;
        }

        // Donor apexes per base: x strictly inside the base's span, y off the
        // line on a random side, so the triangle keeps this base.
        let mut edges: Vec<Simplex> = Vec::new();
        for (bi, (a, b)) in endpoints.iter().enumerate() {
            edges.push(Simplex::new(vec![bases[bi].0, bases[bi].1, v]).unwrap());
            for _ in 0..apexes_per_group {
                let mut placed = false;
                for _ in 0..50 {
                    let x = rat_between(&mut rng, &a.x, &b.x);
                    let off = rat(rng.gen_range(1..=30));
                    let y = if rng.gen_bool(0.5) {
                        lines[bi].y_at(&x) + off
                    } else {
                        lines[bi].y_at(&x) - off
                    };
                    let idx = points.len();
                    if try_push(&mut points, Point2::new(x, y)) {
                        edges.push(Simplex::new(vec![bases[bi].0, bases[bi].1, idx]).unwrap());
                        placed = true;
                        break;
                    }
                }
                if !placed {
                    continue 'outer;
                }
            }
        }

        let ps = PointSet::new_2d(points).expect("validated incrementally");
        let hypergraph = GeometricHypergraph::new(ps, 3, edges).expect("distinct simplices");
        return FourCrossingScenario {
            hypergraph,
            vertex: v,
            bases,
        };
    }
}

pub fn helly_scenario(seed: u64, k: usize) -> HellyScenario {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'outer: loop {
        let endpoints = random_crossing_segments(&mut rng, k);
        let mut points: Vec<Pt2> = endpoints
            .iter()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect();
        let bases: Vec<(usize, usize)> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
        let lines: Vec<Line2<Rat>> = endpoints
            .iter()
            .map(|(a, b)| Line2::through(a, b))
            .collect();
        let lo = endpoints.iter().map(|(a, _)| a.x.clone()).max().unwrap();
        let hi = endpoints.iter().map(|(_, b)| b.x.clone()).min().unwrap();
        if lo >= hi {
            continue;
        }
        let mut apexes: Vec<usize> = Vec::with_capacity(k);
        for _ in 0..k {
            let mut placed = false;
            for _ in 0..50 {
                let x = rat_between(&mut rng, &lo, &hi);
                let ymax = lines.iter().map(|l| l.y_at(&x)).max().unwrap();
                let y = ymax + rat(rng.gen_range(1..=50));
                let idx = points.len();
                if try_push(&mut points, Point2::new(x, y)) {
                    apexes.push(idx);
                    placed = true;
                    break;
                }
            }
            if !placed {
                continue 'outer;
            }
        }
        let mut edges: Vec<Simplex> = Vec::new();
        for &a in &apexes {
            for &(u, w) in &bases {
                edges.push(Simplex::new(vec![a, u, w]).unwrap());
            }
        }
        let ps = PointSet::new_2d(points).expect("validated incrementally");
        let hypergraph = GeometricHypergraph::new(ps, 3, edges).expect("distinct simplices");
        return HellyScenario {
            hypergraph,
            bases,
            apexes,
        };
    }
}

/// Random spatial hypergraph: `n` points in general position and a random
/// subset of the triples, each kept with probability `density_percent`.
pub fn random_hypergraph_3d(seed: u64, n: usize, density_percent: u32) -> GeometricHypergraph {
    let ps = crate::hypergraph::generate_random(3, n, seed).expect("generation succeeds");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if rng.gen_range(0..100) < density_percent {
                    edges.push(Simplex::new(vec![i, j, k]).unwrap());
                }
            }
        }
    }
    GeometricHypergraph::new(ps, 3, edges).expect("valid edges")
}

/// Random planar hypergraph with a random subset of the triples.
pub fn random_hypergraph_2d(seed: u64, n: usize, density_percent: u32) -> GeometricHypergraph {
    let ps = crate::hypergraph::generate_random(2, n, seed).expect("generation succeeds");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if rng.gen_range(0..100) < density_percent {
                    edges.push(Simplex::new(vec![i, j, k]).unwrap());
                }
            }
        }
    }
    GeometricHypergraph::new(ps, 3, edges).expect("valid edges")
}

/// Random arc pair on the sphere with the non-degeneracy the predicates
/// need: nonzero directions, no two parallel, arc planes distinct.
pub fn random_arc_pair(rng: &mut ChaCha8Rng) -> [(Vec3, Vec3); 2] {
    loop {
        let mut dirs: Vec<Vec3> = Vec::with_capacity(4);
        for _ in 0..4 {
            dirs.push(Vec3::new(
                rat(rng.gen_range(-20..=20)),
                rat(rng.gen_range(-20..=20)),
                rat(rng.gen_range(-20..=20)),
            ));
        }
        if dirs.iter().any(|d| d.is_zero()) {
            continue;
        }
        let mut degenerate = false;
        for i in 0..4 {
            for j in (i + 1)..4 {
                if dirs[i].cross(&dirs[j]).is_zero() {
                    degenerate = true;
                }
            }
        }
        if degenerate {
            continue;
        }
        let n1 = dirs[0].cross(&dirs[1]);
        let n2 = dirs[2].cross(&dirs[3]);
        if n1.cross(&n2).is_zero() {
            continue;
        }
        let d3 = dirs.pop().unwrap();
        let d2 = dirs.pop().unwrap();
        let d1 = dirs.pop().unwrap();
        let d0 = dirs.pop().unwrap();
        return [(d0, d1), (d2, d3)];
    }
}
