//! Sphere links, avoiding arcs, and disjoint-pair extraction.
//!
//! The link of a vertex v is a graph drawn on a small sphere centered at v:
//! each blue edge {v, x, y} contributes the shorter great-circle arc between
//! the directions x - v and y - v. Directions are kept as unnormalized
//! rational vectors; every predicate is a sign test on cross and dot
//! products, so no square root is ever taken. Two arcs are *avoiding* when
//! each one is disjoint from the great circle supporting the other; an
//! avoiding pair of blue arcs at v yields two disjoint hypergraph edges via
//! a far-side red edge of the second arc's pair group.

use super::coloring::{EdgeColor, EdgeColoring};
use super::WitnessError;
use crate::geom::{plane_side, triangles_disjoint_3d, Plane3, PlaneSide};
use crate::hypergraph::GeometricHypergraph;
use crate::{Rat, Vec3};

/// An arc of the sphere graph: indices into the direction table plus the
/// hypergraph edge it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereArc {
    pub endpoints: (usize, usize),
    pub edge: usize,
}

/// The link of a vertex as a graph on the unit sphere.
#[derive(Clone, Debug)]
pub struct SphereGraph {
    pub center: usize,
    /// Hypergraph vertex behind each direction.
    pub neighbor_vertices: Vec<usize>,
    /// Unnormalized direction w - center, one per neighbor.
    pub directions: Vec<Vec3>,
    pub arcs: Vec<SphereArc>,
}

/// Build the sphere link of `v` from the given edges (normally the blue
/// edges incident to v).
///
/// Validates the general-position requirements of the sphere drawing: no
/// zero direction, no two directions positively or negatively parallel, no
/// three linearly dependent (no three points on a great circle).
pub fn build_sphere_link(
    h: &GeometricHypergraph,
    v: usize,
    edges: &[usize],
) -> Result<SphereGraph, WitnessError> {
    let pts = h.points().points_3d().ok_or_else(|| {
        WitnessError::PreconditionUnmet("requires a 3-space 3-uniform hypergraph".into())
    })?;
    if h.uniformity() != 3 {
        return Err(WitnessError::PreconditionUnmet(
            "requires a 3-space 3-uniform hypergraph".into(),
        ));
    }

    let mut neighbor_vertices: Vec<usize> = Vec::new();
    let mut directions: Vec<Vec3> = Vec::new();
    let mut index_of = std::collections::BTreeMap::new();
    let mut arcs = Vec::with_capacity(edges.len());
    for &e in edges {
        if e >= h.edge_count() || !h.edges()[e].contains(v) {
            return Err(WitnessError::PreconditionUnmet(format!(
                "edge {e} does not contain vertex {v}"
            )));
        }
        let mut ends = [0usize; 2];
        let mut slot = 0;
        for &w in h.edges()[e].vertices() {
            if w == v {
                continue;
            }
            let idx = *index_of.entry(w).or_insert_with(|| {
                neighbor_vertices.push(w);
                directions.push(pts[w].sub(&pts[v]));
                directions.len() - 1
            });
            ends[slot] = idx;
            slot += 1;
        }
        arcs.push(SphereArc {
            endpoints: (ends[0], ends[1]),
            edge: e,
        });
    }

    for d in &directions {
        if d.is_zero() {
            return Err(WitnessError::GeneralPositionViolation(
                "zero direction vector".into(),
            ));
        }
    }
    for i in 0..directions.len() {
        for j in (i + 1)..directions.len() {
            if directions[i].cross(&directions[j]).is_zero() {
                return Err(WitnessError::GeneralPositionViolation(format!(
                    "directions of vertices {} and {} are parallel",
                    neighbor_vertices[i], neighbor_vertices[j]
                )));
            }
        }
    }
    for i in 0..directions.len() {
        for j in (i + 1)..directions.len() {
            for k in (j + 1)..directions.len() {
                let triple = directions[i]
                    .cross(&directions[j])
                    .dot(&directions[k]);
                if triple == Rat::from_integer(0.into()) {
                    return Err(WitnessError::GeneralPositionViolation(format!(
                        "directions of vertices {}, {}, {} lie on a great circle",
                        neighbor_vertices[i], neighbor_vertices[j], neighbor_vertices[k]
                    )));
                }
            }
        }
    }

    Ok(SphereGraph {
        center: v,
        neighbor_vertices,
        directions,
        arcs,
    })
}

/// Whether the great circle through the plane of arc 1 is disjoint from the
/// (shorter) arc 2 and vice versa: both endpoint directions of each arc lie
/// strictly on one side of the other arc's plane.
pub fn arcs_avoiding(a1: (&Vec3, &Vec3), a2: (&Vec3, &Vec3)) -> bool {
    let n1 = a1.0.cross(a1.1);
    let n2 = a2.0.cross(a2.1);
    let side = |n: &Vec3, d: &Vec3| -> i8 {
        let v = n.dot(d);
        if v > Rat::from_integer(0.into()) {
            1
        } else if v < Rat::from_integer(0.into()) {
            -1
        } else {
            0
        }
    };
    let s21 = side(&n1, a2.0);
    let s22 = side(&n1, a2.1);
    let s11 = side(&n2, a1.0);
    let s12 = side(&n2, a1.1);
    s21 != 0 && s21 == s22 && s11 != 0 && s11 == s12
}

/// First (lexicographic) avoiding pair of arcs, as arc indices.
pub fn find_avoiding_pair(g: &SphereGraph) -> Option<(usize, usize)> {
    for i in 0..g.arcs.len() {
        for j in (i + 1)..g.arcs.len() {
            if arc_pair_avoiding(g, i, j) {
                return Some((i, j));
            }
        }
    }
    None
}

fn arc_pair_avoiding(g: &SphereGraph, i: usize, j: usize) -> bool {
    let (a, b) = g.arcs[i].endpoints;
    let (c, d) = g.arcs[j].endpoints;
    arcs_avoiding(
        (&g.directions[a], &g.directions[b]),
        (&g.directions[c], &g.directions[d]),
    )
}

/// Two verified-disjoint hypergraph edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointPair {
    /// The blue edge conv(x, y, v) of the first avoiding arc.
    pub blue_edge: usize,
    /// The red edge conv(w, z, p) found strictly beyond the plane of the
    /// second arc's edge.
    pub red_edge: usize,
}

/// Extract a disjoint edge pair from an avoiding arc pair at `v`.
///
/// Let h be the plane of the second arc's edge conv(w, z, v). Avoidance puts
/// x and y strictly on one side of h; a red (extreme) member of the pair
/// group E_wz whose third vertex lies strictly on the other side is then
/// disjoint from conv(x, y, v), because the two triangles meet h in the
/// disjoint sets {v} and the segment wz.
pub fn extract_disjoint_pair(
    h: &GeometricHypergraph,
    coloring: &EdgeColoring,
    g: &SphereGraph,
    arc_pair: (usize, usize),
) -> Result<DisjointPair, WitnessError> {
    let pts = h.points().points_3d().ok_or_else(|| {
        WitnessError::PreconditionUnmet("requires a 3-space 3-uniform hypergraph".into())
    })?;
    let (i, j) = arc_pair;
    if i >= g.arcs.len() || j >= g.arcs.len() || i == j {
        return Err(WitnessError::PreconditionUnmet(format!(
            "invalid arc pair ({i}, {j})"
        )));
    }
    if !arc_pair_avoiding(g, i, j) {
        return Err(WitnessError::PreconditionUnmet(format!(
            "arcs {i} and {j} are not avoiding"
        )));
    }
    if coloring.colors[g.arcs[i].edge] != EdgeColor::Blue
        || coloring.colors[g.arcs[j].edge] != EdgeColor::Blue
    {
        return Err(WitnessError::PreconditionUnmet(
            "both arcs must come from blue edges".into(),
        ));
    }

    let v = g.center;
    let blue_edge = g.arcs[i].edge;
    let (xi, yi) = g.arcs[i].endpoints;
    let (x, y) = (g.neighbor_vertices[xi], g.neighbor_vertices[yi]);
    let (wi, zi) = g.arcs[j].endpoints;
    let (w, z) = (g.neighbor_vertices[wi], g.neighbor_vertices[zi]);

    let plane =
        Plane3::through(&pts[w], &pts[z], &pts[v]).expect("edges are non-degenerate");
    let sx = plane_side(&plane, &pts[x]);
    let sy = plane_side(&plane, &pts[y]);
    if sx != sy || sx == PlaneSide::On {
        // Cannot happen for genuinely avoiding arcs.
        return Err(WitnessError::PreconditionUnmet(
            "blue edge does not lie in one open half-space of the separating plane".into(),
        ));
    }
    let far = match sx {
        PlaneSide::Above => PlaneSide::Below,
        PlaneSide::Below => PlaneSide::Above,
        PlaneSide::On => unreachable!(),
    };

    // Red members of E_wz strictly on the far side, smallest third vertex
    // first for determinism.
    let key = (w.min(z), w.max(z));
    let extremes = coloring
        .group_extremes
        .get(&key)
        .cloned()
        .unwrap_or_default();
    let mut far_side: Vec<(usize, usize)> = Vec::new(); // (third vertex, edge)
    for &e in &extremes {
        let q = *h.edges()[e]
            .vertices()
            .iter()
            .find(|&&u| u != w && u != z)
            .expect("3-uniform");
        if plane_side(&plane, &pts[q]) == far {
            far_side.push((q, e));
        }
    }
    if far_side.is_empty() {
        return Err(WitnessError::NoSeparatingRed);
    }
    far_side.sort_unstable();
    let usable = far_side.iter().find(|&&(q, _)| q != x && q != y);
    let Some(&(_, red_edge)) = usable else {
        return Err(WitnessError::SharedVertex);
    };

    let disjoint = triangles_disjoint_3d(&h.triangle_3d(blue_edge), &h.triangle_3d(red_edge))
        .expect("non-degenerate edges");
    assert!(
        disjoint,
        "separated triangles must be disjoint; this indicates a predicate bug"
    );
    Ok(DisjointPair {
        blue_edge,
        red_edge,
    })
}

/// Outcome of the full disjoint-pair pipeline on one hypergraph.
#[derive(Clone, Debug)]
pub struct PipelineOutcome {
    pub coloring: EdgeColoring,
    /// The vertex whose sphere link produced the pair.
    pub vertex: usize,
    /// Arc endpoints of the avoiding pair, as hypergraph edge indices.
    pub avoiding_edges: (usize, usize),
    pub pair: DisjointPair,
}

/// Run the whole pipeline: color, scan vertices by blue degree (ties by
/// index), build sphere links, and try every avoiding arc pair until an
/// extraction succeeds. `Ok(None)` when no vertex yields a pair.
pub fn find_disjoint_pair_pipeline(
    h: &GeometricHypergraph,
) -> Result<Option<PipelineOutcome>, WitnessError> {
    let coloring = super::coloring::red_blue_color(h)?;
    let mut order: Vec<usize> = (0..h.vertex_count()).collect();
    order.sort_by_key(|&v| (usize::MAX - coloring.blue_degree[v], v));
    for v in order {
        let blue = coloring.blue_edges_at(h, v);
        if blue.len() < 2 {
            continue;
        }
        let g = build_sphere_link(h, v, &blue)?;
        for i in 0..g.arcs.len() {
            for j in (i + 1)..g.arcs.len() {
                if !arc_pair_avoiding(&g, i, j) {
                    continue;
                }
                match extract_disjoint_pair(h, &coloring, &g, (i, j)) {
                    Ok(pair) => {
                        return Ok(Some(PipelineOutcome {
                            avoiding_edges: (g.arcs[i].edge, g.arcs[j].edge),
                            vertex: v,
                            pair,
                            coloring,
                        }))
                    }
                    Err(WitnessError::NoSeparatingRed | WitnessError::SharedVertex) => continue,
                    Err(other) => return Err(other),
                }
            }
        }
    }
    Ok(None)
}
