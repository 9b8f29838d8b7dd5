//! Extremal machinery: conflict enumeration over the complete candidate
//! edge set, exact maximum pattern-free edge sets by branch and bound,
//! a randomized greedy lower-bound probe, and closed-form bound evaluators.
//!
//! The extremal quantities reported here are per-configuration maxima (or
//! greedy lower bounds); maxima over all n-point configurations are out of
//! reach and never claimed.

pub mod bounds;

pub use bounds::{
    bound_akiyama_alon, bound_kst, bound_kst_sc, bound_tverberg, BoundEstimate, BoundValue,
};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::detect::{check_convex_position, DetectError, PatternKind, PatternSpec};
use crate::geom::{
    clip_convex_by_triangle, orient2, segments_cross, triangles_disjoint_3d, Orientation2,
};
use crate::hypergraph::{GeometricHypergraph, HypergraphError, PointSet, Simplex};
use crate::{Pt2, Pt3, Seg2};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("search budget of {budget} tuple evaluations exceeded")]
    BudgetExceeded { budget: u64 },
    #[error(transparent)]
    Detect(#[from] DetectError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// All forbidden k-tuples among the complete set of candidate edges on a
/// point set.
#[derive(Clone, Debug)]
pub struct ConflictSet {
    pub pattern: PatternSpec,
    /// Every r-subset of the points, in lexicographic order.
    pub candidates: Vec<Simplex>,
    /// Sorted candidate-index tuples realizing the pattern.
    pub conflicts: Vec<Vec<usize>>,
}

/// Geometry shared by the conflict predicates.
enum Geometry {
    Planar(Vec<[Pt2; 3]>),
    Spatial(Vec<[Pt3; 3]>),
    Segments(Vec<Seg2>),
    Convex,
}

fn candidate_simplices(n: usize, r: usize) -> Vec<Simplex> {
    let items: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    let mut scratch = vec![0usize; r];
    crate::hypergraph::subsets(&items, r, 0, &mut scratch, &mut |chosen| {
        out.push(Simplex::new(chosen.to_vec()).expect("distinct"));
    });
    out
}

fn build_geometry(
    ps: &PointSet,
    pattern: PatternSpec,
    candidates: &[Simplex],
) -> Result<Geometry, SearchError> {
    let mismatch = || {
        SearchError::Detect(DetectError::UniformityMismatch {
            expected_dim: pattern.kind.dimension(),
            expected_r: pattern.kind.uniformity(),
        })
    };
    match pattern.kind {
        PatternKind::StronglyCrossing => {
            let pts = ps.points_2d().ok_or_else(mismatch)?;
            Ok(Geometry::Planar(
                candidates
                    .iter()
                    .map(|s| {
                        let v = s.vertices();
                        [pts[v[0]].clone(), pts[v[1]].clone(), pts[v[2]].clone()]
                    })
                    .collect(),
            ))
        }
        PatternKind::PairwiseDisjoint => {
            let pts = ps.points_3d().ok_or_else(mismatch)?;
            Ok(Geometry::Spatial(
                candidates
                    .iter()
                    .map(|s| {
                        let v = s.vertices();
                        [pts[v[0]].clone(), pts[v[1]].clone(), pts[v[2]].clone()]
                    })
                    .collect(),
            ))
        }
        PatternKind::PairwiseCrossing => {
            let pts = ps.points_2d().ok_or_else(mismatch)?;
            Ok(Geometry::Segments(
                candidates
                    .iter()
                    .map(|s| {
                        let v = s.vertices();
                        Seg2::new(pts[v[0]].clone(), pts[v[1]].clone())
                    })
                    .collect(),
            ))
        }
        PatternKind::ConvexClockwise => {
            // Convex position is validated through a throwaway hypergraph.
            let probe = GeometricHypergraph::new(ps.clone(), 3, Vec::new())?;
            check_convex_position(&probe)?;
            Ok(Geometry::Convex)
        }
    }
}

/// Running state for one partial tuple, enabling monotone pruning.
enum TupleState {
    Polygon(Option<Vec<Pt2>>),
    Nothing,
}

impl Geometry {
    /// Can `cand` extend the partial tuple `chosen`? Returns the updated
    /// state when yes. Pairwise conditions are checked against all chosen.
    fn extend(
        &self,
        candidates: &[Simplex],
        chosen: &[usize],
        state: &TupleState,
        cand: usize,
    ) -> Option<TupleState> {
        let disjoint = chosen
            .iter()
            .all(|&c| candidates[c].is_vertex_disjoint(&candidates[cand]));
        match self {
            Geometry::Planar(tris) => {
                if !disjoint {
                    return None;
                }
                let poly = match state {
                    TupleState::Polygon(Some(p)) => {
                        let clipped =
                            clip_convex_by_triangle(p, &tris[cand]).expect("non-degenerate");
                        if clipped.is_empty() {
                            return None;
                        }
                        clipped
                    }
                    _ => {
                        let t = &tris[cand];
                        if orient2(&t[0], &t[1], &t[2]) == Orientation2::Ccw {
                            t.to_vec()
                        } else {
                            vec![t[0].clone(), t[2].clone(), t[1].clone()]
                        }
                    }
                };
                Some(TupleState::Polygon(Some(poly)))
            }
            Geometry::Spatial(tris) => {
                if !disjoint {
                    return None;
                }
                for &c in chosen {
                    if triangles_disjoint_3d(&tris[c], &tris[cand]) != Ok(true) {
                        return None;
                    }
                }
                Some(TupleState::Nothing)
            }
            Geometry::Segments(segs) => {
                for &c in chosen {
                    if !matches!(segments_cross(&segs[c], &segs[cand]), Ok(true)) {
                        return None;
                    }
                }
                Some(TupleState::Nothing)
            }
            Geometry::Convex => {
                if !disjoint {
                    return None;
                }
                Some(TupleState::Nothing)
            }
        }
    }

    /// Final acceptance of a complete k-tuple (conditions not already
    /// enforced incrementally).
    fn accept(&self, candidates: &[Simplex], chosen: &[usize]) -> bool {
        match self {
            Geometry::Convex => convex_block_pattern(candidates, chosen),
            _ => true,
        }
    }
}

fn convex_block_pattern(candidates: &[Simplex], chosen: &[usize]) -> bool {
    let k = chosen.len();
    let mut verts: Vec<(usize, usize)> = Vec::with_capacity(3 * k);
    for (label, &c) in chosen.iter().enumerate() {
        for &v in candidates[c].vertices() {
            verts.push((v, label));
        }
    }
    verts.sort_unstable();
    let labels: Vec<usize> = verts.iter().map(|&(_, l)| l).collect();
    (0..3 * k).all(|i| labels[i] == labels[(i + k) % (3 * k)])
}

/// Enumerate every forbidden k-tuple among all candidate edges.
///
/// `budget` caps the number of enumeration steps (partial tuples visited);
/// exceeding it aborts with [`SearchError::BudgetExceeded`].
pub fn enumerate_conflicts(
    ps: &PointSet,
    pattern: PatternSpec,
    budget: u64,
) -> Result<ConflictSet, SearchError> {
    let candidates = candidate_simplices(ps.len(), pattern.kind.uniformity());
    let geometry = build_geometry(ps, pattern, &candidates)?;
    let mut walk = ConflictWalk {
        geometry: &geometry,
        candidates: &candidates,
        k: pattern.k,
        budget,
        steps: 0,
        chosen: Vec::new(),
        conflicts: Vec::new(),
    };
    walk.descend(0, &TupleState::Polygon(None))?;
    let conflicts = walk.conflicts;
    Ok(ConflictSet {
        pattern,
        candidates,
        conflicts,
    })
}

struct ConflictWalk<'a> {
    geometry: &'a Geometry,
    candidates: &'a [Simplex],
    k: usize,
    budget: u64,
    steps: u64,
    chosen: Vec<usize>,
    conflicts: Vec<Vec<usize>>,
}

impl ConflictWalk<'_> {
    fn descend(&mut self, from: usize, state: &TupleState) -> Result<(), SearchError> {
        if self.chosen.len() == self.k {
            if self.geometry.accept(self.candidates, &self.chosen) {
                self.conflicts.push(self.chosen.clone());
            }
            return Ok(());
        }
        let remaining = self.k - self.chosen.len();
        for cand in from..=self.candidates.len().saturating_sub(remaining) {
            self.steps += 1;
            if self.steps > self.budget {
                return Err(SearchError::BudgetExceeded {
                    budget: self.budget,
                });
            }
            if let Some(next) = self
                .geometry
                .extend(self.candidates, &self.chosen, state, cand)
            {
                self.chosen.push(cand);
                self.descend(cand + 1, &next)?;
                self.chosen.pop();
            }
        }
        Ok(())
    }
}

/// A maximum (or best-found) pattern-free edge set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalResult {
    pub pattern: PatternSpec,
    pub count: usize,
    pub edges: Vec<Simplex>,
    /// True when the search proved optimality.
    pub exact: bool,
}

/// Every candidate through one fixed vertex is pattern-free (all patterns
/// require vertex-disjoint tuples), so the star is a universal lower bound.
fn star_edge_indices(candidates: &[Simplex], center: usize) -> Vec<usize> {
    candidates
        .iter()
        .enumerate()
        .filter(|(_, s)| s.contains(center))
        .map(|(i, _)| i)
        .collect()
}

/// Exact maximum conflict-free edge count by branch and bound over the
/// conflict hypergraph, seeded with the star construction as the initial
/// incumbent. Candidates are ordered by conflict degree descending; the
/// bound is the plain remaining-candidate count.
pub fn extremal_exact(
    ps: &PointSet,
    pattern: PatternSpec,
    budget: u64,
) -> Result<ExtremalResult, SearchError> {
    let conflict_set = enumerate_conflicts(ps, pattern, budget)?;
    let m = conflict_set.candidates.len();
    if conflict_set.conflicts.is_empty() {
        return Ok(ExtremalResult {
            pattern,
            count: m,
            edges: conflict_set.candidates,
            exact: true,
        });
    }

    // Order by conflict degree descending (ties by index).
    let mut degree = vec![0usize; m];
    for t in &conflict_set.conflicts {
        for &c in t {
            degree[c] += 1;
        }
    }
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&c| (usize::MAX - degree[c], c));

    // Conflicts re-indexed into the processing order.
    let mut position = vec![0usize; m];
    for (pos, &c) in order.iter().enumerate() {
        position[c] = pos;
    }
    let conflicts: Vec<Vec<usize>> = conflict_set
        .conflicts
        .iter()
        .map(|t| {
            let mut u: Vec<usize> = t.iter().map(|&c| position[c]).collect();
            u.sort_unstable();
            u
        })
        .collect();
    let mut touching: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (ci, t) in conflicts.iter().enumerate() {
        // A conflict is checked when its greatest member is decided.
        touching[*t.last().unwrap()].push(ci);
    }

    let star = star_edge_indices(&conflict_set.candidates, 0);
    let mut best: Vec<bool> = vec![false; m];
    for &c in &star {
        best[position[c]] = true;
    }
    let best_count = star.len();

    let mut bb = BranchAndBound {
        m,
        conflicts,
        touching,
        chosen: vec![false; m],
        best,
        best_count,
    };
    bb.branch(0, 0);

    let edges: Vec<Simplex> = (0..m)
        .filter(|&pos| bb.best[pos])
        .map(|pos| conflict_set.candidates[order[pos]].clone())
        .collect();
    debug_assert_eq!(edges.len(), bb.best_count);
    Ok(ExtremalResult {
        pattern,
        count: bb.best_count,
        edges,
        exact: true,
    })
}

struct BranchAndBound {
    m: usize,
    /// Conflict tuples re-indexed into the processing order.
    conflicts: Vec<Vec<usize>>,
    /// Conflicts keyed by their greatest member, where they get checked.
    touching: Vec<Vec<usize>>,
    chosen: Vec<bool>,
    best: Vec<bool>,
    best_count: usize,
}

impl BranchAndBound {
    fn branch(&mut self, pos: usize, count: usize) {
        if count + (self.m - pos) <= self.best_count {
            return;
        }
        if pos == self.m {
            self.best_count = count;
            self.best.copy_from_slice(&self.chosen);
            return;
        }
        // Include, unless that completes a conflict.
        self.chosen[pos] = true;
        let ok = self.touching[pos]
            .iter()
            .all(|&ci| !self.conflicts[ci].iter().all(|&p| self.chosen[p]));
        if ok {
            self.branch(pos + 1, count + 1);
        }
        self.chosen[pos] = false;
        self.branch(pos + 1, count);
    }
}

/// Randomized greedy insertion with incremental conflict checks. Maximal,
/// not maximum; the reported set is the better of the greedy set and the
/// star, so it never undercuts the universal lower bound.
pub fn extremal_greedy(
    ps: &PointSet,
    pattern: PatternSpec,
    seed: u64,
) -> Result<ExtremalResult, SearchError> {
    let candidates = candidate_simplices(ps.len(), pattern.kind.uniformity());
    let geometry = build_geometry(ps, pattern, &candidates)?;
    let mut order: Vec<usize> = (0..candidates.len()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);

    let mut accepted: Vec<usize> = Vec::new();
    for cand in order {
        if !creates_conflict(&geometry, &candidates, &accepted, cand, pattern.k) {
            accepted.push(cand);
        }
    }
    accepted.sort_unstable();

    let star = star_edge_indices(&candidates, 0);
    let chosen = if accepted.len() >= star.len() {
        accepted
    } else {
        star
    };
    Ok(ExtremalResult {
        pattern,
        count: chosen.len(),
        edges: chosen
            .into_iter()
            .map(|c| candidates[c].clone())
            .collect(),
        exact: false,
    })
}

/// Would adding `cand` to `accepted` complete a forbidden k-tuple?
fn creates_conflict(
    geometry: &Geometry,
    candidates: &[Simplex],
    accepted: &[usize],
    cand: usize,
    k: usize,
) -> bool {
    // Start the tuple with the new candidate, then extend with accepted
    // edges (ascending) until k members are reached.
    let Some(state) = geometry.extend(candidates, &[], &TupleState::Polygon(None), cand) else {
        return false;
    };
    let mut chosen = vec![cand];
    fn rec(
        geometry: &Geometry,
        candidates: &[Simplex],
        accepted: &[usize],
        from: usize,
        k: usize,
        state: &TupleState,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == k {
            return geometry.accept(candidates, chosen);
        }
        for idx in from..accepted.len() {
            let cand = accepted[idx];
            if let Some(next) = geometry.extend(candidates, chosen, state, cand) {
                chosen.push(cand);
                if rec(geometry, candidates, accepted, idx + 1, k, &next, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(geometry, candidates, accepted, 0, k, &state, &mut chosen)
}

/// One CSV row of an experiment sweep.
#[derive(Clone, Debug)]
pub struct ExperimentRow {
    pub seed: u64,
    pub n: usize,
    pub pattern: PatternSpec,
    pub star_count: usize,
    pub greedy_count: usize,
    pub exact_count: Option<usize>,
    pub exact_flag: bool,
    pub runtime_ms: u128,
}

pub const EXPERIMENT_CSV_HEADER: &str =
    "seed,n,pattern,k,star_count,greedy_count,exact_count,exact_flag,runtime_ms";

impl ExperimentRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.seed,
            self.n,
            self.pattern.kind.as_str(),
            self.pattern.k,
            self.star_count,
            self.greedy_count,
            self.exact_count.map_or(String::new(), |c| c.to_string()),
            self.exact_flag,
            self.runtime_ms
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{generate_convex, generate_random};
    use crate::oracle;
    use num_integer::binomial;

    fn sc(k: usize) -> PatternSpec {
        PatternSpec::new(PatternKind::StronglyCrossing, k)
    }

    #[test]
    fn no_conflicts_on_five_points() {
        let ps = generate_random(2, 5, 1).unwrap();
        let cs = enumerate_conflicts(&ps, sc(2), 1_000_000).unwrap();
        assert_eq!(cs.candidates.len(), 10);
        assert!(cs.conflicts.is_empty());
        let res = extremal_exact(&ps, sc(2), 1_000_000).unwrap();
        assert_eq!(res.count, 10);
        assert!(res.exact);
    }

    #[test]
    fn conflicts_match_pairwise_recount_on_six_points() {
        let ps = generate_random(2, 6, 2).unwrap();
        let cs = enumerate_conflicts(&ps, sc(2), 1_000_000).unwrap();
        // Recount: vertex-disjoint candidate pairs whose triangles share a
        // point, via the independent arrangement-vertex oracle.
        let pts = ps.points_2d().unwrap();
        let tri = |s: &Simplex| {
            let v = s.vertices();
            [pts[v[0]].clone(), pts[v[1]].clone(), pts[v[2]].clone()]
        };
        let mut expected = 0;
        for i in 0..cs.candidates.len() {
            for j in (i + 1)..cs.candidates.len() {
                if cs.candidates[i].is_vertex_disjoint(&cs.candidates[j])
                    && oracle::triangles_common_point_reference(&[
                        tri(&cs.candidates[i]),
                        tri(&cs.candidates[j]),
                    ])
                {
                    expected += 1;
                }
            }
        }
        assert_eq!(cs.conflicts.len(), expected);
        assert!(expected > 0, "six random points usually have crossings");
    }

    #[test]
    fn zero_conflict_exact_values() {
        // Pigeonhole: SC_3 needs nine vertices.
        let ps = generate_random(2, 8, 3).unwrap();
        let res = extremal_exact(&ps, sc(3), 10_000_000).unwrap();
        assert_eq!(res.count, binomial(8usize, 3));
        assert!(res.exact);

        let ps3 = generate_random(3, 5, 3).unwrap();
        let res = extremal_exact(
            &ps3,
            PatternSpec::new(PatternKind::PairwiseDisjoint, 2),
            1_000_000,
        )
        .unwrap();
        assert_eq!(res.count, 10);
    }

    #[test]
    fn exact_matches_independent_set_oracle() {
        let ps = generate_random(2, 7, 1).unwrap();
        let cs = enumerate_conflicts(&ps, sc(2), 10_000_000).unwrap();
        let pairs: Vec<(usize, usize)> = cs
            .conflicts
            .iter()
            .map(|t| (t[0], t[1]))
            .collect();
        let oracle_value =
            oracle::max_independent_set_reference(cs.candidates.len(), &pairs);
        let res = extremal_exact(&ps, sc(2), 10_000_000).unwrap();
        assert_eq!(res.count, oracle_value);
        // The result set itself is conflict-free.
        let chosen: std::collections::BTreeSet<&Simplex> = res.edges.iter().collect();
        for t in &cs.conflicts {
            assert!(!t
                .iter()
                .all(|&c| chosen.contains(&cs.candidates[c])));
        }
    }

    #[test]
    fn greedy_at_least_star_and_deterministic() {
        let ps = generate_random(2, 9, 4).unwrap();
        let a = extremal_greedy(&ps, sc(3), 7).unwrap();
        let b = extremal_greedy(&ps, sc(3), 7).unwrap();
        assert_eq!(a.edges, b.edges);
        assert!(a.count >= binomial(8usize, 2));
        assert!(!a.exact);
    }

    #[test]
    fn sandwich_star_greedy_exact() {
        let ps = generate_random(2, 7, 5).unwrap();
        let star = binomial(6usize, 2);
        let greedy = extremal_greedy(&ps, sc(2), 3).unwrap();
        let exact = extremal_exact(&ps, sc(2), 10_000_000).unwrap();
        assert!(star <= greedy.count);
        assert!(greedy.count <= exact.count);
        assert!(exact.count <= binomial(7usize, 3));
    }

    #[test]
    fn exact_is_monotone_over_nested_point_sets() {
        // Any pattern-free edge set on a sub-point-set stays pattern-free
        // on the full set, so the maximum can only grow with n.
        for seed in 0..4u64 {
            let full = generate_random(2, 7, seed).unwrap();
            let sub_points = full.points_2d().unwrap()[..6].to_vec();
            let sub = crate::hypergraph::PointSet::new_2d(sub_points).unwrap();
            let a = extremal_exact(&sub, sc(2), 10_000_000).unwrap();
            let b = extremal_exact(&full, sc(2), 10_000_000).unwrap();
            assert!(a.count <= b.count);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let ps = generate_random(2, 9, 6).unwrap();
        assert!(matches!(
            enumerate_conflicts(&ps, sc(2), 10),
            Err(SearchError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn convex_clockwise_exact_values() {
        // On 6 convex points the only forbidden pair is the fully
        // alternating one ({0,2,4}, {1,3,5}): 10 disjoint triple pairs, one
        // with block-aligned labels. So the maximum is C(6,3) - 1 = 19.
        let spec = PatternSpec::new(PatternKind::ConvexClockwise, 2);
        let ps = generate_convex(6, 0).unwrap();
        let res = extremal_exact(&ps, spec, 1_000_000).unwrap();
        assert_eq!((res.count, res.exact), (19, true));
        // n = 7: frozen from the verified first run.
        let ps = generate_convex(7, 0).unwrap();
        let res = extremal_exact(&ps, spec, 10_000_000).unwrap();
        assert_eq!((res.count, res.exact), (31, true));
    }

    #[test]
    fn convex_clockwise_conflicts() {
        let ps = generate_convex(6, 8).unwrap();
        let cs = enumerate_conflicts(
            &ps,
            PatternSpec::new(PatternKind::ConvexClockwise, 2),
            1_000_000,
        )
        .unwrap();
        // On a convex hexagon the interleaved triple pairs form the pattern;
        // there are exactly C(6,3)/2 = 10 disjoint pairs, of which the fully
        // alternating ones match. Verify against the detector-free oracle.
        for t in &cs.conflicts {
            assert!(convex_block_pattern(&cs.candidates, t));
        }
        assert!(!cs.conflicts.is_empty());
    }

    #[test]
    fn csv_row_rendering() {
        let row = ExperimentRow {
            seed: 3,
            n: 10,
            pattern: sc(3),
            star_count: 36,
            greedy_count: 41,
            exact_count: None,
            exact_flag: false,
            runtime_ms: 12,
        };
        assert_eq!(row.to_csv(), "3,10,strongly-crossing,3,36,41,,false,12");
    }
}
