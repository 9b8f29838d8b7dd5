//! Constructive witness extractors.
//!
//! These operations turn combinatorial existence arguments into executable
//! procedures that output concrete edge tuples, re-verified through the
//! detectors before being returned:
//!
//! - [`extract_sc3_from_four_crossing`]: given a vertex whose link contains
//!   four pairwise crossing bases, produce three strongly crossing edges by
//!   case analysis on the top level of the four bases.
//! - [`greedy_helly_selection`]: given k pairwise crossing bases and k
//!   interchangeable apexes, select k strongly crossing edges greedily by
//!   rightmost envelope intersection and certify their common point with a
//!   1-D Helly step.
//! - red/blue coloring, sphere links and disjoint-pair extraction for
//!   3-space hypergraphs (see [`coloring`] and [`sphere`]).

pub mod coloring;
pub mod sphere;

pub use coloring::{red_blue_color, EdgeColor, EdgeColoring};
pub use sphere::{
    build_sphere_link, extract_disjoint_pair, find_avoiding_pair, find_disjoint_pair_pipeline,
    DisjointPair, PipelineOutcome, SphereArc, SphereGraph,
};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::arrangement::{helly_1d, top_level, triangle_on_top_level, TopLevel, XBound, XInterval};
use crate::geom::{
    orient2, segment_intersection_point, segments_cross, triangle_contains_2d, Orientation2,
};
use crate::hypergraph::{classify_base, ApexPosition, GeometricHypergraph, Simplex};
use crate::{Line, Pt2, Rat, Seg2};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum WitnessError {
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("case analysis fell through; this indicates a predicate bug")]
    CaseFallthrough,
    #[error("edge {edge} meets the top level in more than one interval")]
    IntervalDisconnected { edge: usize },
    #[error("interval family has empty intersection; this indicates a bug")]
    HellyEmpty,
    #[error("general position violated: {0}")]
    GeneralPositionViolation(String),
    #[error("no red edge lies strictly on the far side of the separating plane")]
    NoSeparatingRed,
    #[error("every far-side red apex collides with the chosen blue edge")]
    SharedVertex,
}

fn unmet(msg: impl Into<String>) -> WitnessError {
    WitnessError::PreconditionUnmet(msg.into())
}

/// Configuration for [`extract_sc3_from_four_crossing`].
#[derive(Clone, Copy, Debug)]
pub struct Sc3Config {
    /// Minimum number of distinct apexes each of the four base groups must
    /// supply. Three is enough to dodge vertex collisions in most
    /// configurations; raise it for adversarial inputs.
    pub min_apexes_per_group: usize,
}

impl Default for Sc3Config {
    fn default() -> Self {
        Sc3Config {
            min_apexes_per_group: 3,
        }
    }
}

/// Which side of the middle envelope piece the missing base crosses in the
/// three-visited case.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case2Branch {
    Left,
    Right,
}

/// Full trace of one extraction.
#[derive(Clone, Debug)]
pub struct Sc3Extraction {
    /// 1, 2 or 3: the top level visits two, three or four of the bases.
    pub case: u8,
    pub branch: Option<Case2Branch>,
    /// Position (0..4) in the input array of the base b with p in
    /// conv(v, b).
    pub container_base: usize,
    /// Positions of the two bases whose groups donate the other edges.
    pub donor_bases: (usize, usize),
    /// The chosen donor apexes.
    pub donor_apexes: (usize, usize),
    /// Hypergraph edges: [conv(v, container), donor 1, donor 2].
    pub edges: [usize; 3],
    /// The certified common point of the three edges.
    pub common_point: Pt2,
}

struct BaseCtx {
    /// (left, right) endpoint indices by x.
    pair: (usize, usize),
    seg: Seg2,
    /// Edge index of conv(v, base).
    link_edge: usize,
    /// Distinct apexes of the base group, sorted, with their edge indices.
    apexes: Vec<(usize, usize)>,
}

/// Extract three strongly crossing edges from a vertex `v` and four
/// pairwise crossing bases of its link graph.
///
/// The top level of the four base segments determines the case: the number
/// of bases it visits picks the pair of bases whose segment intersection
/// point p serves as the common point, and p always lands inside
/// conv(v, b) for one of the remaining bases. The two bases through p then
/// donate apexes avoiding vertex collisions.
pub fn extract_sc3_from_four_crossing(
    h: &GeometricHypergraph,
    v: usize,
    bases: &[(usize, usize); 4],
    cfg: &Sc3Config,
) -> Result<Sc3Extraction, WitnessError> {
    let pts = h
        .points()
        .points_2d()
        .ok_or_else(|| unmet("requires a planar 3-uniform hypergraph"))?;
    if h.uniformity() != 3 {
        return Err(unmet("requires a planar 3-uniform hypergraph"));
    }
    if v >= pts.len() {
        return Err(unmet(format!("vertex {v} out of range")));
    }

    // Group the whole edge set by base once; each context records the
    // canonical segment, the conv(v, base) edge and the apex supply.
    let mut groups: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
    for (i, e) in h.edges().iter().enumerate() {
        let entry = classify_base(h.points(), e).map_err(|err| unmet(err.to_string()))?;
        groups
            .entry(entry.base_key())
            .or_default()
            .push((entry.apex, i));
    }

    let mut ctx: Vec<BaseCtx> = Vec::with_capacity(4);
    for &(a, b) in bases {
        if a == b || a >= pts.len() || b >= pts.len() {
            return Err(unmet(format!("invalid base pair ({a}, {b})")));
        }
        let (left, right) = if pts[a].x < pts[b].x { (a, b) } else { (b, a) };
        if orient2(&pts[left], &pts[right], &pts[v]) != Orientation2::Ccw {
            return Err(unmet(format!(
                "vertex {v} does not lie strictly above base ({a}, {b})"
            )));
        }
        let key = (a.min(b), a.max(b));
        let members = groups
            .get(&key)
            .ok_or_else(|| unmet(format!("no edge has base ({a}, {b})")))?;
        let link_edge = members
            .iter()
            .find(|&&(apex, _)| apex == v)
            .map(|&(_, e)| e)
            .ok_or_else(|| unmet(format!("base ({a}, {b}) is not in the link graph of {v}")))?;
        let mut apexes: Vec<(usize, usize)> = members.clone();
        apexes.sort_unstable();
        if apexes.len() < cfg.min_apexes_per_group {
            return Err(unmet(format!(
                "base group ({a}, {b}) has {} apexes, fewer than the required {}",
                apexes.len(),
                cfg.min_apexes_per_group
            )));
        }
        ctx.push(BaseCtx {
            pair: (left, right),
            seg: Seg2::new(pts[left].clone(), pts[right].clone()),
            link_edge,
            apexes,
        });
    }

    for i in 0..4 {
        for j in (i + 1)..4 {
            if !matches!(segments_cross(&ctx[i].seg, &ctx[j].seg), Ok(true)) {
                return Err(unmet(format!("bases {i} and {j} do not cross")));
            }
        }
    }

    let segs: Vec<Seg2> = ctx.iter().map(|c| c.seg.clone()).collect();
    let level = top_level(&segs).expect("pairwise crossing validated above");
    let mut visited: Vec<usize> = Vec::new();
    for &i in level.piece_lines() {
        if !visited.contains(&i) {
            visited.push(i);
        }
    }

    let (case, branch, p, donors, containers): (
        u8,
        Option<Case2Branch>,
        Pt2,
        (usize, usize),
        Vec<usize>,
    ) = match visited.len() {
        2 => {
            let (e1, e2) = (visited[0], visited[1]);
            let p = segment_intersection_point(&ctx[e1].seg, &ctx[e2].seg)
                .map_err(|_| WitnessError::CaseFallthrough)?;
            let others: Vec<usize> = (0..4).filter(|i| !visited.contains(i)).collect();
            (1, None, p, (e1, e2), others)
        }
        3 => {
            let (c1, c2, c3) = (visited[0], visited[1], visited[2]);
            let missing = (0..4).find(|i| !visited.contains(i)).expect("one missing");
            // The middle visited base owns the single bounded piece.
            let piece = level
                .piece_lines()
                .iter()
                .position(|&l| l == c2)
                .expect("visited");
            let range = level.piece_range(piece);
            let cross_pt = segment_intersection_point(&ctx[missing].seg, &ctx[c2].seg)
                .map_err(|_| WitnessError::CaseFallthrough)?;
            let hi = range.hi.finite().ok_or(WitnessError::CaseFallthrough)?;
            let lo = range.lo.finite().ok_or(WitnessError::CaseFallthrough)?;
            // A crossing point strictly inside the middle piece would put
            // the missing line on the envelope; it cannot happen. Equality
            // means three supporting lines are concurrent at a breakpoint,
            // in which case p lies on the missing base too and the adjacent
            // branch goes through unchanged.
            if cross_pt.x >= *hi {
                let p = segment_intersection_point(&ctx[c2].seg, &ctx[c3].seg)
                    .map_err(|_| WitnessError::CaseFallthrough)?;
                (2, Some(Case2Branch::Right), p, (c2, c3), vec![missing])
            } else if cross_pt.x <= *lo {
                let p = segment_intersection_point(&ctx[c1].seg, &ctx[c2].seg)
                    .map_err(|_| WitnessError::CaseFallthrough)?;
                (2, Some(Case2Branch::Left), p, (c1, c2), vec![missing])
            } else {
                return Err(WitnessError::CaseFallthrough);
            }
        }
        4 => {
            let (c2, c3) = (visited[1], visited[2]);
            let p = segment_intersection_point(&ctx[c2].seg, &ctx[c3].seg)
                .map_err(|_| WitnessError::CaseFallthrough)?;
            (3, None, p, (c2, c3), vec![visited[0], visited[3]])
        }
        _ => return Err(WitnessError::CaseFallthrough),
    };

    // The case analysis guarantees p ∈ conv(v, b) for at least one candidate
    // container; verify exactly and keep the verified ones.
    let verified: Vec<usize> = containers
        .into_iter()
        .filter(|&j| {
            let (l, r) = ctx[j].pair;
            let tri = [pts[v].clone(), pts[l].clone(), pts[r].clone()];
            triangle_contains_2d(&tri, &p) == Ok(true)
        })
        .collect();
    if verified.is_empty() {
        return Err(WitnessError::CaseFallthrough);
    }

    let (d1, d2) = donors;
    for &container in &verified {
        let forbidden_x = [
            v,
            ctx[container].pair.0,
            ctx[container].pair.1,
            ctx[d2].pair.0,
            ctx[d2].pair.1,
        ];
        let pick_x = ctx[d1]
            .apexes
            .iter()
            .find(|&&(a, _)| !forbidden_x.contains(&a));
        let Some(&(x, x_edge)) = pick_x else { continue };
        let forbidden_y = [
            v,
            ctx[container].pair.0,
            ctx[container].pair.1,
            ctx[d1].pair.0,
            ctx[d1].pair.1,
            x,
        ];
        let pick_y = ctx[d2]
            .apexes
            .iter()
            .find(|&&(a, _)| !forbidden_y.contains(&a));
        let Some(&(y, y_edge)) = pick_y else { continue };

        let edges = [ctx[container].link_edge, x_edge, y_edge];
        for &e in &edges {
            debug_assert_eq!(triangle_contains_2d(&h.triangle_2d(e), &p), Ok(true));
        }
        debug_assert!(h.edges()[edges[0]].is_vertex_disjoint(&h.edges()[edges[1]]));
        debug_assert!(h.edges()[edges[0]].is_vertex_disjoint(&h.edges()[edges[2]]));
        debug_assert!(h.edges()[edges[1]].is_vertex_disjoint(&h.edges()[edges[2]]));
        return Ok(Sc3Extraction {
            case,
            branch,
            container_base: container,
            donor_bases: donors,
            donor_apexes: (x, y),
            edges,
            common_point: p,
        });
    }
    Err(unmet(
        "donor groups cannot supply collision-free apexes".to_string(),
    ))
}

/// Result of [`greedy_helly_selection`].
#[derive(Clone, Debug)]
pub struct HellySelection {
    /// Selected hypergraph edges t_1..t_k in selection order.
    pub edges: Vec<usize>,
    /// The apex consumed at each step.
    pub apexes: Vec<usize>,
    /// Positions of the input bases in slope order (the processing order).
    pub base_order: Vec<usize>,
    /// x-projection of t_i ∩ L per step; always a single interval each.
    pub intervals: Vec<XInterval<Rat>>,
    /// A point common to all k closed edges, lying on the top level.
    pub common_point: Pt2,
}

/// Greedy selection of k strongly crossing edges from k pairwise crossing
/// bases and k shared apexes.
///
/// Requires that conv(a, b) is an edge with base b and apex strictly above
/// for every apex a and base b of the input. Bases are processed in slope
/// order; at each step the remaining apex whose triangle's right side meets
/// the top level furthest to the right is consumed (ties broken by smallest
/// vertex index). The intervals t_i ∩ L pairwise intersect and their 1-D
/// Helly point, lifted onto the envelope, lies in every selected edge.
pub fn greedy_helly_selection(
    h: &GeometricHypergraph,
    bases: &[(usize, usize)],
    apexes: &[usize],
) -> Result<HellySelection, WitnessError> {
    let pts = h
        .points()
        .points_2d()
        .ok_or_else(|| unmet("requires a planar 3-uniform hypergraph"))?;
    if h.uniformity() != 3 {
        return Err(unmet("requires a planar 3-uniform hypergraph"));
    }
    let k = bases.len();
    if k < 2 || apexes.len() != k {
        return Err(unmet(format!(
            "need k >= 2 bases and exactly k apexes (got {} and {})",
            k,
            apexes.len()
        )));
    }
    let mut uniq = apexes.to_vec();
    uniq.sort_unstable();
    uniq.dedup();
    if uniq.len() != k {
        return Err(unmet("apexes must be distinct"));
    }

    // Canonicalize bases and locate every conv(apex, base) edge.
    let mut pair: Vec<(usize, usize)> = Vec::with_capacity(k);
    let mut segs: Vec<Seg2> = Vec::with_capacity(k);
    for &(a, b) in bases {
        if a == b || a >= pts.len() || b >= pts.len() {
            return Err(unmet(format!("invalid base pair ({a}, {b})")));
        }
        let (l, r) = if pts[a].x < pts[b].x { (a, b) } else { (b, a) };
        pair.push((l, r));
        segs.push(Seg2::new(pts[l].clone(), pts[r].clone()));
    }
    for i in 0..k {
        for j in (i + 1)..k {
            if !matches!(segments_cross(&segs[i], &segs[j]), Ok(true)) {
                return Err(unmet(format!("bases {i} and {j} do not cross")));
            }
        }
    }
    let mut edge_at = vec![vec![0usize; k]; k];
    for (ai, &a) in apexes.iter().enumerate() {
        for (bi, &(l, r)) in pair.iter().enumerate() {
            if a == l || a == r {
                return Err(unmet(format!("apex {a} is an endpoint of base {bi}")));
            }
            let s = Simplex::new(vec![a, l, r]).expect("distinct");
            let e = h.find_edge(&s).ok_or_else(|| {
                unmet(format!(
                    "conv({a}, base {bi}) is not an edge of the hypergraph"
                ))
            })?;
            let entry = classify_base(h.points(), &s).map_err(|err| unmet(err.to_string()))?;
            if entry.base_key() != (l.min(r), l.max(r)) {
                return Err(unmet(format!(
                    "edge conv({a}, base {bi}) does not have that base"
                )));
            }
            if entry.apex_position != ApexPosition::Above {
                return Err(unmet(format!(
                    "apex {a} does not lie strictly above base {bi}"
                )));
            }
            edge_at[ai][bi] = e;
        }
    }

    let mut base_order: Vec<usize> = (0..k).collect();
    base_order.sort_by(|&i, &j| {
        Line::supporting(&segs[i])
            .slope()
            .cmp(&Line::supporting(&segs[j]).slope())
    });

    let level = top_level(&segs).expect("pairwise crossing validated above");

    let mut available: Vec<usize> = (0..apexes.len()).collect();
    let mut chosen_edges: Vec<usize> = Vec::with_capacity(k);
    let mut chosen_apexes: Vec<usize> = Vec::with_capacity(k);
    for &bi in &base_order {
        let right_endpoint = pts[pair[bi].1].clone();
        let mut best: Option<(Rat, usize, usize)> = None; // (x, apex vertex, slot)
        for (slot, &ai) in available.iter().enumerate() {
            let apex_pt = pts[apexes[ai]].clone();
            let side = Seg2::new(apex_pt, right_endpoint.clone());
            let x = rightmost_envelope_hit(&level, &side).ok_or_else(|| {
                unmet(format!(
                    "right side of conv({}, base {bi}) misses the top level",
                    apexes[ai]
                ))
            })?;
            let better = match &best {
                None => true,
                Some((bx, bv, _)) => x > *bx || (x == *bx && apexes[ai] < *bv),
            };
            if better {
                best = Some((x, apexes[ai], slot));
            }
        }
        let (_, apex_vertex, slot) = best.expect("at least one apex available");
        let ai = available.remove(slot);
        chosen_edges.push(edge_at[ai][bi]);
        chosen_apexes.push(apex_vertex);
    }

    let mut intervals: Vec<XInterval<Rat>> = Vec::with_capacity(k);
    for &e in &chosen_edges {
        let list = triangle_on_top_level(&level, &h.triangle_2d(e));
        match list.len() {
            0 => return Err(WitnessError::HellyEmpty),
            1 => intervals.push(list.into_iter().next().unwrap()),
            _ => return Err(WitnessError::IntervalDisconnected { edge: e }),
        }
    }

    let common_x = match helly_1d(&intervals) {
        Some(XBound::Finite(x)) => x,
        _ => return Err(WitnessError::HellyEmpty),
    };
    let common_point = Pt2::new(common_x.clone(), level.eval(&common_x));
    for &e in &chosen_edges {
        debug_assert_eq!(
            triangle_contains_2d(&h.triangle_2d(e), &common_point),
            Ok(true)
        );
    }

    Ok(HellySelection {
        edges: chosen_edges,
        apexes: chosen_apexes,
        base_order,
        intervals,
        common_point,
    })
}

/// Largest x at which a segment meets the envelope, if any.
fn rightmost_envelope_hit(level: &TopLevel<Rat>, seg: &Seg2) -> Option<Rat> {
    let seg_line = Line::supporting(seg);
    let lo_x = seg.left().x.clone();
    let hi_x = seg.right().x.clone();
    let mut best: Option<Rat> = None;
    for m in 0..level.piece_count() {
        let line = &level.lines()[level.piece_lines()[m]];
        let Some(q) = seg_line.intersect(line) else {
            continue;
        };
        if q.x < lo_x || q.x > hi_x {
            continue;
        }
        let range = level.piece_range(m);
        let above_lo = match &range.lo {
            XBound::NegInf => true,
            XBound::Finite(l) => *l <= q.x,
            XBound::PosInf => false,
        };
        let below_hi = match &range.hi {
            XBound::PosInf => true,
            XBound::Finite(r) => q.x <= *r,
            XBound::NegInf => false,
        };
        if above_lo && below_hi && best.as_ref().is_none_or(|b| q.x > *b) {
            best = Some(q.x);
        }
    }
    best
}
