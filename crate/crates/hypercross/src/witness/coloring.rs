//! Red/blue extremal coloring of 3-space triangle hypergraphs.
//!
//! For a vertex pair (u, v), the pair group E_uv is the set of edges
//! containing both. A member t of E_uv is *extreme in E_uv* when the whole
//! group lies in one closed half-space of the supporting plane of t; a group
//! never has more than two extreme members. An edge is colored red when it
//! is extreme in at least one of its three pair groups, blue otherwise, so
//! the total red count is at most twice the number of nonempty pair groups
//! and in particular at most n^2.

use std::collections::BTreeMap;

use super::WitnessError;
use crate::geom::{plane_side, Plane3, PlaneSide};
use crate::hypergraph::GeometricHypergraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeColor {
    Red,
    Blue,
}

/// The full coloring, with the per-group extreme members kept for
/// diagnostics and downstream extraction.
#[derive(Clone, Debug)]
pub struct EdgeColoring {
    pub colors: Vec<EdgeColor>,
    /// Number of blue edges incident to each vertex.
    pub blue_degree: Vec<usize>,
    /// For each nonempty pair group, its extreme member edges (at most two
    /// once the group has two or more members; a singleton is vacuously
    /// extreme).
    pub group_extremes: BTreeMap<(usize, usize), Vec<usize>>,
}

impl EdgeColoring {
    pub fn red_count(&self) -> usize {
        self.colors.iter().filter(|c| **c == EdgeColor::Red).count()
    }

    pub fn blue_count(&self) -> usize {
        self.colors.len() - self.red_count()
    }

    pub fn blue_edges_at(&self, h: &GeometricHypergraph, v: usize) -> Vec<usize> {
        (0..h.edge_count())
            .filter(|&e| self.colors[e] == EdgeColor::Blue && h.edges()[e].contains(v))
            .collect()
    }
}

/// Third vertex of a triangle edge relative to a pair it contains.
fn third_vertex(edge: &crate::hypergraph::Simplex, pair: (usize, usize)) -> usize {
    *edge
        .vertices()
        .iter()
        .find(|&&v| v != pair.0 && v != pair.1)
        .expect("3-uniform edge")
}

/// Color every edge of a 3-space triangle hypergraph red or blue.
pub fn red_blue_color(h: &GeometricHypergraph) -> Result<EdgeColoring, WitnessError> {
    let pts = h.points().points_3d().ok_or_else(|| {
        WitnessError::PreconditionUnmet("requires a 3-space 3-uniform hypergraph".into())
    })?;
    if h.uniformity() != 3 {
        return Err(WitnessError::PreconditionUnmet(
            "requires a 3-space 3-uniform hypergraph".into(),
        ));
    }

    let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, e) in h.edges().iter().enumerate() {
        let v = e.vertices();
        for (a, b) in [(v[0], v[1]), (v[0], v[2]), (v[1], v[2])] {
            groups.entry((a, b)).or_default().push(i);
        }
    }

    let mut colors = vec![EdgeColor::Blue; h.edge_count()];
    let mut group_extremes: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (&pair, members) in &groups {
        let mut extremes = Vec::new();
        for &t in members {
            let tv = h.edges()[t].vertices();
            let plane = Plane3::through(&pts[tv[0]], &pts[tv[1]], &pts[tv[2]])
                .expect("edges are non-degenerate");
            let mut above = false;
            let mut below = false;
            for &s in members {
                if s == t {
                    continue;
                }
                let w = third_vertex(&h.edges()[s], pair);
                match plane_side(&plane, &pts[w]) {
                    PlaneSide::Above => above = true,
                    PlaneSide::Below => below = true,
                    PlaneSide::On => {
                        return Err(WitnessError::GeneralPositionViolation(format!(
                            "vertex {w} lies on the plane of edge {t}"
                        )))
                    }
                }
            }
            if !(above && below) {
                extremes.push(t);
            }
        }
        debug_assert!(members.len() < 2 || extremes.len() <= 2);
        for &t in &extremes {
            colors[t] = EdgeColor::Red;
        }
        group_extremes.insert(pair, extremes);
    }

    let mut blue_degree = vec![0usize; h.vertex_count()];
    for (i, e) in h.edges().iter().enumerate() {
        if colors[i] == EdgeColor::Blue {
            for &v in e.vertices() {
                blue_degree[v] += 1;
            }
        }
    }

    Ok(EdgeColoring {
        colors,
        blue_degree,
        group_extremes,
    })
}
