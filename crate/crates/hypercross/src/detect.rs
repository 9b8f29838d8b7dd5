//! Detectors for the forbidden patterns.
//!
//! All detectors enumerate candidate tuples in lexicographic order over
//! sorted edge indices and return the first witness, so outputs are
//! deterministic. Searches are exhaustive with monotone pruning (an empty
//! running intersection or a vertex collision can never recover), which
//! preserves the lexicographic-first guarantee.

use thiserror::Error;

use crate::geom::{
    clip_convex_by_triangle, convex_hull_indices, orient2, segments_cross, triangle_contains_2d,
    triangles_disjoint_3d, Orientation2,
};
use crate::hypergraph::GeometricHypergraph;
use crate::{Pt2, Seg2};

/// The forbidden configurations the toolkit can search for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternKind {
    /// k vertex-disjoint edges that all share a point (planar triangles).
    StronglyCrossing,
    /// k edges whose closed simplices are pairwise disjoint (3-space).
    PairwiseDisjoint,
    /// k segments that pairwise cross.
    PairwiseCrossing,
    /// k disjoint triples whose vertices read as three same-order blocks
    /// along the clockwise hull order.
    ConvexClockwise,
}

/// A pattern together with its multiplicity `k >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PatternSpec {
    pub kind: PatternKind,
    pub k: usize,
}

impl PatternKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            PatternKind::StronglyCrossing => "strongly-crossing",
            PatternKind::PairwiseDisjoint => "disjoint",
            PatternKind::PairwiseCrossing => "pairwise-crossing",
            PatternKind::ConvexClockwise => "convex-clockwise",
        }
    }

    /// Edge arity the pattern is defined over.
    pub fn uniformity(&self) -> usize {
        match self {
            PatternKind::PairwiseCrossing => 2,
            _ => 3,
        }
    }

    /// Ambient dimension the pattern is defined in.
    pub fn dimension(&self) -> u8 {
        match self {
            PatternKind::PairwiseDisjoint => 3,
            _ => 2,
        }
    }
}

impl std::str::FromStr for PatternKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strongly-crossing" | "sc" => Ok(PatternKind::StronglyCrossing),
            "disjoint" | "d" => Ok(PatternKind::PairwiseDisjoint),
            "pairwise-crossing" => Ok(PatternKind::PairwiseCrossing),
            "convex-clockwise" => Ok(PatternKind::ConvexClockwise),
            other => Err(format!("unknown pattern kind {other:?}")),
        }
    }
}

impl PatternSpec {
    pub fn new(kind: PatternKind, k: usize) -> Self {
        assert!(k >= 2, "pattern multiplicity must be at least 2");
        PatternSpec { kind, k }
    }
}

/// Edge indices realizing a pattern, plus an exact certificate point in the
/// common intersection when the pattern has one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub edges: Vec<usize>,
    pub certificate: Option<Pt2>,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum DetectError {
    #[error("detector requires dimension {expected_dim} and uniformity {expected_r}")]
    UniformityMismatch { expected_dim: u8, expected_r: usize },
    #[error("points are not in convex position in the stored order")]
    NotConvexPosition,
}

fn require(h: &GeometricHypergraph, dim: u8, r: usize) -> Result<(), DetectError> {
    if h.points().dimension() != dim || h.uniformity() != r {
        return Err(DetectError::UniformityMismatch {
            expected_dim: dim,
            expected_r: r,
        });
    }
    Ok(())
}

/// Find k vertex-disjoint planar triangle edges with a common point.
///
/// The common intersection is maintained by iterated clipping during the
/// search; the certificate is the lexicographically smallest vertex of the
/// final intersection polygon.
///
/// ```
/// use hypercross::detect::find_strongly_crossing;
/// use hypercross::hypergraph::{GeometricHypergraph, PointSet, Simplex};
/// use hypercross::{rat, Pt2};
///
/// // Two large triangles around the origin plus one far away.
/// let coords = [
///     (-31, -7), (29, -11), (1, 37),   // triangle A
///     (-28, 23), (23, 19), (3, -41),   // triangle B, crossing A
///     (90, 50), (111, 51), (100, 70),  // triangle C, disjoint from both
/// ];
/// let points = coords
///     .iter()
///     .map(|&(x, y)| Pt2::new(rat(x), rat(y)))
///     .collect();
/// let ps = PointSet::new_2d(points)?;
/// let edges = vec![
///     Simplex::new(vec![0, 1, 2])?,
///     Simplex::new(vec![3, 4, 5])?,
///     Simplex::new(vec![6, 7, 8])?,
/// ];
/// let h = GeometricHypergraph::new(ps, 3, edges)?;
///
/// let witness = find_strongly_crossing(&h, 2)?.expect("A and B cross");
/// assert_eq!(witness.edges, vec![0, 1]);
/// assert!(witness.certificate.is_some());
/// assert!(find_strongly_crossing(&h, 3)?.is_none());
/// # Ok::<(), Box<dyn std::error::Error>>(())
/// ```
pub fn find_strongly_crossing(
    h: &GeometricHypergraph,
    k: usize,
) -> Result<Option<Witness>, DetectError> {
    assert!(k >= 2);
    require(h, 2, 3)?;
    if h.vertex_count() < 3 * k || h.edge_count() < k {
        return Ok(None);
    }
    let triangles: Vec<[Pt2; 3]> = (0..h.edge_count()).map(|i| h.triangle_2d(i)).collect();
    let mut used = vec![false; h.vertex_count()];
    let mut chosen = Vec::with_capacity(k);
    let found = sc_search(h, k, 0, &triangles, &mut used, &mut chosen, None);
    Ok(found.map(|(edges, poly)| Witness {
        certificate: poly.iter().min().cloned(),
        edges,
    }))
}

fn sc_search(
    h: &GeometricHypergraph,
    k: usize,
    from: usize,
    triangles: &[[Pt2; 3]],
    used: &mut [bool],
    chosen: &mut Vec<usize>,
    poly: Option<Vec<Pt2>>,
) -> Option<(Vec<usize>, Vec<Pt2>)> {
    if chosen.len() == k {
        return Some((chosen.clone(), poly.expect("k >= 1 edges clipped")));
    }
    let remaining = k - chosen.len();
    for e in from..=triangles.len().saturating_sub(remaining) {
        let verts = h.edges()[e].vertices();
        if verts.iter().any(|&v| used[v]) {
            continue;
        }
        let next_poly = match &poly {
            None => {
                let t = &triangles[e];
                if orient2(&t[0], &t[1], &t[2]) == Orientation2::Ccw {
                    t.to_vec()
                } else {
                    vec![t[0].clone(), t[2].clone(), t[1].clone()]
                }
            }
            Some(p) => {
                let clipped = clip_convex_by_triangle(p, &triangles[e])
                    .expect("hypergraph edges are non-degenerate");
                if clipped.is_empty() {
                    continue;
                }
                clipped
            }
        };
        for &v in verts {
            used[v] = true;
        }
        chosen.push(e);
        if let Some(hit) = sc_search(h, k, e + 1, triangles, used, chosen, Some(next_poly)) {
            return Some(hit);
        }
        chosen.pop();
        for &v in verts {
            used[v] = false;
        }
    }
    None
}

/// Find k edges of a 3-space triangle hypergraph whose closed simplices are
/// pairwise disjoint.
pub fn find_pairwise_disjoint(
    h: &GeometricHypergraph,
    k: usize,
) -> Result<Option<Witness>, DetectError> {
    assert!(k >= 2);
    require(h, 3, 3)?;
    if h.vertex_count() < 3 * k || h.edge_count() < k {
        return Ok(None);
    }
    let triangles: Vec<[crate::Pt3; 3]> = (0..h.edge_count()).map(|i| h.triangle_3d(i)).collect();
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    fn rec(
        h: &GeometricHypergraph,
        k: usize,
        from: usize,
        triangles: &[[crate::Pt3; 3]],
        chosen: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        if chosen.len() == k {
            return Some(chosen.clone());
        }
        let remaining = k - chosen.len();
        for e in from..=triangles.len().saturating_sub(remaining) {
            let edge = &h.edges()[e];
            let compatible = chosen.iter().all(|&c| {
                h.edges()[c].is_vertex_disjoint(edge)
                    && triangles_disjoint_3d(&triangles[c], &triangles[e])
                        .expect("edges are non-degenerate with distinct vertices")
            });
            if !compatible {
                continue;
            }
            chosen.push(e);
            if let Some(hit) = rec(h, k, e + 1, triangles, chosen) {
                return Some(hit);
            }
            chosen.pop();
        }
        None
    }
    Ok(rec(h, k, 0, &triangles, &mut chosen).map(|edges| Witness {
        edges,
        certificate: None,
    }))
}

/// Find k pairwise crossing segments (vertex-disjoint by definition of
/// crossing; pairs sharing an endpoint never cross).
pub fn find_pairwise_crossing_segments(segments: &[Seg2], k: usize) -> Option<Vec<usize>> {
    assert!(k >= 1);
    let m = segments.len();
    if m < k {
        return None;
    }
    let mut crosses = vec![vec![false; m]; m];
    for i in 0..m {
        for j in (i + 1)..m {
            let c = matches!(segments_cross(&segments[i], &segments[j]), Ok(true));
            crosses[i][j] = c;
            crosses[j][i] = c;
        }
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    fn rec(
        m: usize,
        k: usize,
        from: usize,
        crosses: &[Vec<bool>],
        chosen: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        if chosen.len() == k {
            return Some(chosen.clone());
        }
        let remaining = k - chosen.len();
        for s in from..=m.saturating_sub(remaining) {
            if !chosen.iter().all(|&c| crosses[c][s]) {
                continue;
            }
            chosen.push(s);
            if let Some(hit) = rec(m, k, s + 1, crosses, chosen) {
                return Some(hit);
            }
            chosen.pop();
        }
        None
    }
    rec(m, k, 0, &crosses, &mut chosen)
}

/// Validate that the stored point order is the clockwise hull order of a
/// strictly convex point set.
pub fn check_convex_position(h: &GeometricHypergraph) -> Result<(), DetectError> {
    let pts = h
        .points()
        .points_2d()
        .ok_or(DetectError::UniformityMismatch {
            expected_dim: 2,
            expected_r: 3,
        })?;
    let n = pts.len();
    if n < 3 {
        return Err(DetectError::NotConvexPosition);
    }
    let hull = convex_hull_indices(pts);
    if hull.len() != n {
        return Err(DetectError::NotConvexPosition);
    }
    // The hull is CCW; reversed it is CW. The stored order 0..n must be a
    // rotation of that cycle.
    let cw: Vec<usize> = hull.into_iter().rev().collect();
    let Some(start) = cw.iter().position(|&v| v == 0) else {
        return Err(DetectError::NotConvexPosition);
    };
    for i in 0..n {
        if cw[(start + i) % n] != i {
            return Err(DetectError::NotConvexPosition);
        }
    }
    Ok(())
}

/// Find k vertex-disjoint triples whose 3k vertices, read along the
/// clockwise hull order, form three blocks repeating the same triple order:
/// one vertex of each triple per block, aligned across blocks.
///
/// The returned edges are ordered by their block position; the certificate
/// is the common point of the k triangles, which the block pattern
/// guarantees to exist.
pub fn find_convex_pattern(
    h: &GeometricHypergraph,
    k: usize,
) -> Result<Option<Witness>, DetectError> {
    assert!(k >= 2);
    require(h, 2, 3)?;
    check_convex_position(h)?;
    if h.vertex_count() < 3 * k || h.edge_count() < k {
        return Ok(None);
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    let mut used = vec![false; h.vertex_count()];
    fn rec(
        h: &GeometricHypergraph,
        k: usize,
        from: usize,
        used: &mut [bool],
        chosen: &mut Vec<usize>,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        if chosen.len() == k {
            return block_pattern_order(h, chosen).map(|order| (chosen.clone(), order));
        }
        let remaining = k - chosen.len();
        for e in from..=h.edge_count().saturating_sub(remaining) {
            let verts = h.edges()[e].vertices();
            if verts.iter().any(|&v| used[v]) {
                continue;
            }
            for &v in verts {
                used[v] = true;
            }
            chosen.push(e);
            if let Some(hit) = rec(h, k, e + 1, used, chosen) {
                return Some(hit);
            }
            chosen.pop();
            for &v in verts {
                used[v] = false;
            }
        }
        None
    }
    let Some((tuple, order)) = rec(h, k, 0, &mut used, &mut chosen) else {
        return Ok(None);
    };
    let edges: Vec<usize> = order.into_iter().map(|label| tuple[label]).collect();
    let triangles: Vec<[Pt2; 3]> = edges.iter().map(|&e| h.triangle_2d(e)).collect();
    let poly = crate::geom::intersect_triangles(&triangles)
        .expect("edges are non-degenerate")
        .expect("at least one triangle");
    assert!(
        !poly.is_empty(),
        "clockwise block pattern must have a common intersection point"
    );
    Ok(Some(Witness {
        certificate: poly.into_iter().min(),
        edges,
    }))
}

/// If the chosen vertex-disjoint triples realize the block pattern, return
/// the triple order along the first block; `None` otherwise.
///
/// Because points are stored clockwise, sorting the 3k vertex indices gives
/// their cyclic clockwise order; the pattern holds exactly when the triple
/// label sequence is periodic with period k (then each triple occupies the
/// same offset in all three blocks, for every rotation).
fn block_pattern_order(h: &GeometricHypergraph, chosen: &[usize]) -> Option<Vec<usize>> {
    let k = chosen.len();
    let mut verts: Vec<(usize, usize)> = Vec::with_capacity(3 * k);
    for (label, &e) in chosen.iter().enumerate() {
        for &v in h.edges()[e].vertices() {
            verts.push((v, label));
        }
    }
    verts.sort_unstable();
    let labels: Vec<usize> = verts.iter().map(|&(_, l)| l).collect();
    let n = 3 * k;
    for i in 0..n {
        if labels[i] != labels[(i + k) % n] {
            return None;
        }
    }
    Some(labels[..k].to_vec())
}

/// Re-verify a witness against the hypergraph it came from: vertex
/// disjointness, the pattern's geometric condition, and the certificate
/// point when present.
pub fn verify_witness(h: &GeometricHypergraph, spec: PatternSpec, w: &Witness) -> bool {
    if w.edges.len() != spec.k || w.edges.iter().any(|&e| e >= h.edge_count()) {
        return false;
    }
    let mut sorted = w.edges.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != spec.k {
        return false;
    }
    let disjoint = |edges: &[usize]| {
        edges.iter().enumerate().all(|(i, &a)| {
            edges[i + 1..]
                .iter()
                .all(|&b| h.edges()[a].is_vertex_disjoint(&h.edges()[b]))
        })
    };
    match spec.kind {
        PatternKind::StronglyCrossing | PatternKind::ConvexClockwise => {
            if h.points().dimension() != 2 || h.uniformity() != 3 || !disjoint(&w.edges) {
                return false;
            }
            let triangles: Vec<[Pt2; 3]> = w.edges.iter().map(|&e| h.triangle_2d(e)).collect();
            match &w.certificate {
                Some(p) => triangles
                    .iter()
                    .all(|t| triangle_contains_2d(t, p) == Ok(true)),
                None => matches!(
                    crate::geom::intersect_triangles(&triangles),
                    Ok(Some(poly)) if !poly.is_empty()
                ),
            }
        }
        PatternKind::PairwiseDisjoint => {
            if h.points().dimension() != 3 || h.uniformity() != 3 || !disjoint(&w.edges) {
                return false;
            }
            let triangles: Vec<[crate::Pt3; 3]> =
                w.edges.iter().map(|&e| h.triangle_3d(e)).collect();
            w.edges.iter().enumerate().all(|(i, _)| {
                (i + 1..w.edges.len())
                    .all(|j| triangles_disjoint_3d(&triangles[i], &triangles[j]) == Ok(true))
            })
        }
        PatternKind::PairwiseCrossing => {
            if h.uniformity() != 2 || h.points().dimension() != 2 {
                return false;
            }
            let segs: Vec<Seg2> = w
                .edges
                .iter()
                .map(|&e| {
                    let v = h.edges()[e].vertices();
                    h.segment_2d(v[0], v[1])
                })
                .collect();
            (0..segs.len()).all(|i| {
                (i + 1..segs.len()).all(|j| matches!(segments_cross(&segs[i], &segs[j]), Ok(true)))
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{
        generate_convex, generate_random, star_construction, GeometricHypergraph, PointSet,
        Simplex,
    };
    use crate::scalar::rat;

    fn p2(x: i64, y: i64) -> Pt2 {
        Pt2::new(rat(x), rat(y))
    }

    fn p3(x: i64, y: i64, z: i64) -> crate::Pt3 {
        crate::Pt3::new(rat(x), rat(y), rat(z))
    }

    fn tri_hypergraph(points: Vec<Pt2>, edges: &[[usize; 3]]) -> GeometricHypergraph {
        let ps = PointSet::new_2d(points).unwrap();
        let edges = edges
            .iter()
            .map(|e| Simplex::new(e.to_vec()).unwrap())
            .collect();
        GeometricHypergraph::new(ps, 3, edges).unwrap()
    }

    /// Three vertex-disjoint triangles all containing the origin.
    fn three_strongly_crossing() -> GeometricHypergraph {
        tri_hypergraph(
            vec![
                p2(-31, -7),
                p2(29, -11),
                p2(1, 37),
                p2(-28, 23),
                p2(23, 19),
                p2(3, -41),
                p2(-40, 3),
                p2(41, 5),
                p2(2, -53),
            ],
            &[[0, 1, 2], [3, 4, 5], [6, 7, 8]],
        )
    }

    /// Three thin triangles along the sides of a frame: pairwise crossing
    /// near the corners, with a hollow center (empty triple intersection).
    fn pairwise_but_not_strongly() -> GeometricHypergraph {
        tri_hypergraph(
            vec![
                p2(-26, -15),
                p2(5, 27),
                p2(-24, -17),
                p2(-1, 26),
                p2(27, -13),
                p2(2, 29),
                p2(25, -9),
                p2(-25, -10),
                p2(26, -12),
            ],
            &[[0, 1, 2], [3, 4, 5], [6, 7, 8]],
        )
    }

    #[test]
    fn strongly_crossing_triple_found_with_certificate() {
        let h = three_strongly_crossing();
        let w = find_strongly_crossing(&h, 3).unwrap().expect("present");
        assert_eq!(w.edges, vec![0, 1, 2]);
        let cert = w.certificate.clone().expect("certificate");
        for e in 0..3 {
            assert_eq!(
                triangle_contains_2d(&h.triangle_2d(e), &cert),
                Ok(true)
            );
        }
        assert!(verify_witness(
            &h,
            PatternSpec::new(PatternKind::StronglyCrossing, 3),
            &w
        ));
    }

    #[test]
    fn pairwise_crossing_with_empty_intersection() {
        let h = pairwise_but_not_strongly();
        // All pairs cross...
        for (a, b) in [(0usize, 1usize), (0, 2), (1, 2)] {
            let sub = Witness {
                edges: vec![a, b],
                certificate: None,
            };
            assert!(
                verify_witness(&h, PatternSpec::new(PatternKind::StronglyCrossing, 2), &sub),
                "pair ({a},{b}) should cross"
            );
        }
        // ...but no common point of all three.
        assert_eq!(find_strongly_crossing(&h, 3).unwrap(), None);
        assert!(find_strongly_crossing(&h, 2).unwrap().is_some());
    }

    #[test]
    fn too_few_vertices_is_always_absent() {
        let ps = generate_random(2, 8, 5).unwrap();
        let h = star_construction(&ps, 0, 3).unwrap();
        // 8 < 9 vertices: no three disjoint triples exist.
        assert_eq!(find_strongly_crossing(&h, 3).unwrap(), None);
    }

    #[test]
    fn star_never_triggers_detectors() {
        let ps = generate_random(2, 9, 6).unwrap();
        let star = star_construction(&ps, 2, 3).unwrap();
        assert_eq!(find_strongly_crossing(&star, 2).unwrap(), None);
        let ps3 = generate_random(3, 9, 6).unwrap();
        let star3 = star_construction(&ps3, 2, 3).unwrap();
        assert_eq!(find_pairwise_disjoint(&star3, 2).unwrap(), None);
    }

    #[test]
    fn disjoint_pair_in_3d() {
        let pts = vec![
            p3(0, 0, 0),
            p3(40, 1, 2),
            p3(3, 41, 1),
            p3(1, 2, 31),
            p3(39, 5, 33),
            p3(7, 38, 35),
        ];
        let ps = PointSet::new_3d(pts).unwrap();
        let edges = vec![
            Simplex::new(vec![0, 1, 2]).unwrap(),
            Simplex::new(vec![3, 4, 5]).unwrap(),
        ];
        let h = GeometricHypergraph::new(ps, 3, edges).unwrap();
        let w = find_pairwise_disjoint(&h, 2).unwrap().expect("disjoint");
        assert_eq!(w.edges, vec![0, 1]);
        assert!(verify_witness(
            &h,
            PatternSpec::new(PatternKind::PairwiseDisjoint, 2),
            &w
        ));
    }

    #[test]
    fn pairwise_crossing_segments_fan() {
        // A fan of segments through a common neighborhood, pairwise disjoint
        // endpoints: every pair crosses.
        let segs: Vec<Seg2> = vec![
            Seg2::new(p2(-10, -1), p2(10, 1)),
            Seg2::new(p2(-9, 5), p2(9, -6)),
            Seg2::new(p2(-1, -10), p2(2, 11)),
            Seg2::new(p2(-6, 9), p2(7, -8)),
        ];
        assert_eq!(
            find_pairwise_crossing_segments(&segs, 4),
            Some(vec![0, 1, 2, 3])
        );
        let parallel = vec![
            Seg2::new(p2(0, 0), p2(1, 0)),
            Seg2::new(p2(0, 1), p2(1, 1)),
        ];
        assert_eq!(find_pairwise_crossing_segments(&parallel, 2), None);
    }

    #[test]
    fn convex_pattern_interleaved_hexagon() {
        let ps = generate_convex(6, 3).unwrap();
        let edges = vec![
            Simplex::new(vec![0, 2, 4]).unwrap(),
            Simplex::new(vec![1, 3, 5]).unwrap(),
        ];
        let h = GeometricHypergraph::new(ps, 3, edges).unwrap();
        let w = find_convex_pattern(&h, 2).unwrap().expect("pattern");
        assert_eq!(w.edges.len(), 2);
        assert!(verify_witness(
            &h,
            PatternSpec::new(PatternKind::StronglyCrossing, 2),
            &w
        ));
    }

    #[test]
    fn convex_pattern_absent_when_sharing_vertices() {
        let ps = generate_convex(6, 4).unwrap();
        let edges = vec![
            Simplex::new(vec![0, 1, 2]).unwrap(),
            Simplex::new(vec![0, 3, 4]).unwrap(),
        ];
        let h = GeometricHypergraph::new(ps, 3, edges).unwrap();
        assert_eq!(find_convex_pattern(&h, 2).unwrap(), None);
    }

    #[test]
    fn convex_position_is_validated() {
        let ps = generate_random(2, 7, 9).unwrap();
        let h = star_construction(&ps, 0, 3).unwrap();
        // Random points are almost surely not in convex position in stored
        // order; expect the validation error (or, absurdly unlikely, Ok).
        match find_convex_pattern(&h, 2) {
            Err(DetectError::NotConvexPosition) => {}
            other => panic!("expected NotConvexPosition, got {other:?}"),
        }
    }

    #[test]
    fn witness_monotone_in_k() {
        let h = three_strongly_crossing();
        for k in 2..=3 {
            assert!(find_strongly_crossing(&h, k).unwrap().is_some());
        }
    }
}
