//! Upper envelopes of supporting lines, levels, and 1-D Helly selection.
//!
//! For a family of pairwise crossing segments, the top level is the set of
//! points of the supporting-line arrangement at level k-1 (its closure), and
//! it equals the upper envelope of the lines: a convex piecewise-linear
//! curve whose piece slopes strictly increase left to right. The envelope is
//! computed over the lines, never truncated to the segments.

use thiserror::Error;

use crate::geom::{
    clip_halfplane, orient2, segments_cross, Line2, Orientation2, Point2, Segment2,
};
use crate::scalar::GeomScalar;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("line {0} is vertical")]
    VerticalLine(usize),
    #[error("point does not lie on any line of the arrangement")]
    PointNotOnArrangement,
    #[error("segments {0} and {1} do not cross")]
    NotPairwiseCrossing(usize, usize),
    #[error("lines {0} and {1} are parallel")]
    ParallelLines(usize, usize),
    #[error("at least one segment is required")]
    Empty,
}

/// A closed x-interval with possibly infinite ends.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum XBound<S> {
    NegInf,
    Finite(S),
    PosInf,
}

impl<S: GeomScalar> XBound<S> {
    pub fn finite(&self) -> Option<&S> {
        match self {
            XBound::Finite(x) => Some(x),
            _ => None,
        }
    }
}

/// A closed interval on the x-axis; `lo <= hi` always.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XInterval<S> {
    pub lo: XBound<S>,
    pub hi: XBound<S>,
}

impl<S: GeomScalar> XInterval<S> {
    pub fn new(lo: XBound<S>, hi: XBound<S>) -> Self {
        assert!(lo <= hi, "interval bounds out of order");
        XInterval { lo, hi }
    }

    pub fn point(x: S) -> Self {
        XInterval {
            lo: XBound::Finite(x.clone()),
            hi: XBound::Finite(x),
        }
    }

    pub fn intersects(&self, other: &XInterval<S>) -> bool {
        let lo = if self.lo >= other.lo { &self.lo } else { &other.lo };
        let hi = if self.hi <= other.hi { &self.hi } else { &other.hi };
        lo <= hi
    }
}

/// Common point of a family of closed intervals, when it exists: the maximum
/// of the left ends (1-D Helly). Empty input reports no point.
pub fn helly_1d<S: GeomScalar>(intervals: &[XInterval<S>]) -> Option<XBound<S>> {
    let max_lo = intervals.iter().map(|i| &i.lo).max()?;
    let min_hi = intervals.iter().map(|i| &i.hi).min()?;
    if max_lo <= min_hi {
        Some(max_lo.clone())
    } else {
        None
    }
}

/// Level of a point on a line arrangement: the number of lines strictly
/// below it at its x-coordinate. The point must lie on at least one line.
pub fn level_of<S: GeomScalar>(
    lines: &[Line2<S>],
    p: &Point2<S>,
) -> Result<usize, ArrangementError> {
    for (i, l) in lines.iter().enumerate() {
        if l.is_vertical() {
            return Err(ArrangementError::VerticalLine(i));
        }
    }
    if !lines.iter().any(|l| l.eval(p).is_zero()) {
        return Err(ArrangementError::PointNotOnArrangement);
    }
    Ok(lines.iter().filter(|l| l.y_at(&p.x) < p.y).count())
}

/// The upper envelope of a family of supporting lines, stored as pieces
/// (line indices) separated by breakpoints. Piece `i` spans from breakpoint
/// `i-1` to breakpoint `i`; the first and last pieces are unbounded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopLevel<S> {
    breakpoints: Vec<Point2<S>>,
    piece_lines: Vec<usize>,
    lines: Vec<Line2<S>>,
}

impl<S: GeomScalar> TopLevel<S> {
    /// Indices of supporting lines, one per piece, left to right.
    pub fn piece_lines(&self) -> &[usize] {
        &self.piece_lines
    }

    /// Interior breakpoints, left to right (one fewer than pieces).
    pub fn breakpoints(&self) -> &[Point2<S>] {
        &self.breakpoints
    }

    pub fn lines(&self) -> &[Line2<S>] {
        &self.lines
    }

    pub fn piece_count(&self) -> usize {
        self.piece_lines.len()
    }

    /// Distinct line indices that contribute a positive-length piece.
    pub fn visited_lines(&self) -> Vec<usize> {
        let mut v = self.piece_lines.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Envelope value at `x` (the maximum over all lines).
    pub fn eval(&self, x: &S) -> S {
        self.lines
            .iter()
            .map(|l| l.y_at(x))
            .max()
            .expect("envelope of at least one line")
    }

    /// x-range of piece `i` as a closed interval.
    pub fn piece_range(&self, i: usize) -> XInterval<S> {
        let lo = if i == 0 {
            XBound::NegInf
        } else {
            XBound::Finite(self.breakpoints[i - 1].x.clone())
        };
        let hi = if i + 1 == self.piece_lines.len() {
            XBound::PosInf
        } else {
            XBound::Finite(self.breakpoints[i].x.clone())
        };
        XInterval::new(lo, hi)
    }
}

/// Upper envelope of the supporting lines of a pairwise crossing segment
/// family.
///
/// Validates that the segments pairwise cross, that no supporting line is
/// vertical and that no two are parallel. The leftmost piece belongs to the
/// line of minimum slope and the rightmost to the maximum slope.
///
/// ```
/// use hypercross::arrangement::top_level;
/// use hypercross::{rat, Pt2, Seg2};
///
/// let seg = |ax: i64, ay: i64, bx: i64, by: i64| {
///     Seg2::new(Pt2::new(rat(ax), rat(ay)), Pt2::new(rat(bx), rat(by)))
/// };
/// // The lines y = x and y = -x: the envelope is y = |x|.
/// let level = top_level(&[seg(-2, -2, 2, 2), seg(-2, 2, 2, -2)])?;
/// assert_eq!(level.breakpoints(), &[Pt2::new(rat(0), rat(0))]);
/// assert_eq!(level.eval(&rat(3)), rat(3));
/// assert_eq!(level.eval(&rat(-3)), rat(3));
/// # Ok::<(), hypercross::arrangement::ArrangementError>(())
/// ```
pub fn top_level<S: GeomScalar>(segments: &[Segment2<S>]) -> Result<TopLevel<S>, ArrangementError> {
    if segments.is_empty() {
        return Err(ArrangementError::Empty);
    }
    for i in 0..segments.len() {
        for j in (i + 1)..segments.len() {
            match segments_cross(&segments[i], &segments[j]) {
                Ok(true) => {}
                _ => return Err(ArrangementError::NotPairwiseCrossing(i, j)),
            }
        }
    }
    let lines: Vec<Line2<S>> = segments.iter().map(Line2::supporting).collect();
    top_level_of_lines(lines)
}

/// Upper envelope of lines directly; callers guarantee pairwise
/// non-parallel, non-vertical lines.
pub fn top_level_of_lines<S: GeomScalar>(
    lines: Vec<Line2<S>>,
) -> Result<TopLevel<S>, ArrangementError> {
    for (i, l) in lines.iter().enumerate() {
        if l.is_vertical() {
            return Err(ArrangementError::VerticalLine(i));
        }
    }
    let mut order: Vec<usize> = (0..lines.len()).collect();
    order.sort_by(|&i, &j| lines[i].slope().cmp(&lines[j].slope()));
    for w in order.windows(2) {
        if lines[w[0]].slope() == lines[w[1]].slope() {
            return Err(ArrangementError::ParallelLines(
                w[0].min(w[1]),
                w[0].max(w[1]),
            ));
        }
    }

    // Scan lines by increasing slope, maintaining the envelope as a stack of
    // (line index, left breakpoint of its piece). A freshly added line beats
    // every earlier one far to the right; it erases stack entries whose
    // pieces it would start at or before.
    let mut stack: Vec<(usize, Option<Point2<S>>)> = Vec::new();
    for &i in &order {
        let mut start: Option<Point2<S>> = None;
        while let Some((top, top_start)) = stack.last() {
            let p = lines[i]
                .intersect(&lines[*top])
                .expect("distinct slopes intersect");
            match top_start {
                Some(s) if p.x <= s.x => {
                    stack.pop();
                }
                _ => {
                    start = Some(p);
                    break;
                }
            }
        }
        stack.push((i, start));
    }

    let piece_lines: Vec<usize> = stack.iter().map(|(i, _)| *i).collect();
    let breakpoints: Vec<Point2<S>> = stack
        .into_iter()
        .filter_map(|(_, s)| s)
        .collect();
    Ok(TopLevel {
        breakpoints,
        piece_lines,
        lines,
    })
}

/// x-projection of the portion of the envelope inside a closed triangle, as
/// maximal disjoint closed intervals, sorted left to right.
pub fn triangle_on_top_level<S: GeomScalar>(
    level: &TopLevel<S>,
    t: &[Point2<S>; 3],
) -> Vec<XInterval<S>> {
    let tri_ccw: Vec<Point2<S>> = match orient2(&t[0], &t[1], &t[2]) {
        Orientation2::Ccw => t.to_vec(),
        Orientation2::Cw => vec![t[0].clone(), t[2].clone(), t[1].clone()],
        Orientation2::Collinear => panic!("degenerate triangle"),
    };
    // The triangle is bounded, so clip each envelope piece (a segment of its
    // line, truncated to the triangle's x-range when unbounded) against the
    // triangle and project to x.
    let min_x = t.iter().map(|p| &p.x).min().unwrap().clone();
    let max_x = t.iter().map(|p| &p.x).max().unwrap().clone();

    let mut found: Vec<(S, S)> = Vec::new();
    for i in 0..level.piece_count() {
        let range = level.piece_range(i);
        let lo = match &range.lo {
            XBound::Finite(x) => x.clone().max(min_x.clone()),
            _ => min_x.clone(),
        };
        let hi = match &range.hi {
            XBound::Finite(x) => x.clone().min(max_x.clone()),
            _ => max_x.clone(),
        };
        if lo > hi {
            continue;
        }
        let line = &level.lines[level.piece_lines[i]];
        let a = Point2::new(lo.clone(), line.y_at(&lo));
        let b = Point2::new(hi.clone(), line.y_at(&hi));
        let piece: Vec<Point2<S>> = if a == b { vec![a] } else { vec![a, b] };
        let mut clipped = piece;
        for k in 0..3 {
            if clipped.is_empty() {
                break;
            }
            clipped = clip_halfplane(&clipped, &tri_ccw[k], &tri_ccw[(k + 1) % 3]);
        }
        if clipped.is_empty() {
            continue;
        }
        let piece_lo = clipped.iter().map(|p| &p.x).min().unwrap().clone();
        let piece_hi = clipped.iter().map(|p| &p.x).max().unwrap().clone();
        found.push((piece_lo, piece_hi));
    }

    found.sort_by(|a, b| a.0.cmp(&b.0));
    let mut merged: Vec<(S, S)> = Vec::new();
    for (lo, hi) in found {
        match merged.last_mut() {
            Some(last) if lo <= last.1 => {
                if hi > last.1 {
                    last.1 = hi;
                }
            }
            _ => merged.push((lo, hi)),
        }
    }
    merged
        .into_iter()
        .map(|(lo, hi)| XInterval::new(XBound::Finite(lo), XBound::Finite(hi)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, rat};
    use crate::{Pt2, Rat, Seg2};

    fn p2(x: i64, y: i64) -> Pt2 {
        Pt2::new(rat(x), rat(y))
    }

    fn seg(ax: i64, ay: i64, bx: i64, by: i64) -> Seg2 {
        Seg2::new(p2(ax, ay), p2(bx, by))
    }

    #[test]
    fn single_segment_envelope_is_its_line() {
        let level = top_level(&[seg(0, 0, 4, 1)]).unwrap();
        assert_eq!(level.piece_count(), 1);
        assert!(level.breakpoints().is_empty());
    }

    #[test]
    fn two_crossing_lines() {
        // y = x and y = -x.
        let level = top_level(&[seg(-2, -2, 2, 2), seg(-2, 2, 2, -2)]).unwrap();
        assert_eq!(level.piece_count(), 2);
        assert_eq!(level.breakpoints(), &[p2(0, 0)]);
        // Leftmost piece has the smaller slope (the descending line).
        assert_eq!(level.piece_lines(), &[1, 0]);
        assert_eq!(level.eval(&rat(3)), rat(3));
        assert_eq!(level.eval(&rat(-3)), rat(3));
    }

    #[test]
    fn levels_on_two_crossing_lines() {
        let lines = vec![
            Line::supporting(&seg(-2, -2, 2, 2)),
            Line::supporting(&seg(-2, 2, 2, -2)),
        ];
        // On the upper-left piece of line 1 (descending): one line strictly below.
        assert_eq!(level_of(&lines, &p2(-2, 2)), Ok(1));
        // At the crossing point neither is strictly below.
        assert_eq!(level_of(&lines, &p2(0, 0)), Ok(0));
        assert_eq!(
            level_of(&lines, &p2(100, 0)),
            Err(ArrangementError::PointNotOnArrangement)
        );
    }

    type Line = crate::Line;

    #[test]
    fn concurrent_lines_level() {
        // k lines through the origin; far right on the steepest piece the
        // level is k - 1.
        let lines: Vec<Line> = (1..=4)
            .map(|m| Line::new(rat(-m), rat(1), rat(0)))
            .collect();
        let p = Pt2::new(rat(10), rat(40));
        assert_eq!(level_of(&lines, &p), Ok(3));
    }

    #[test]
    fn envelope_slopes_strictly_increase() {
        // Tangent segments of the parabola y = x^2 at t = -3, -1, 1, 3:
        // their upper envelope visits all four lines.
        let tangent = |t: i64| seg(-4, -8 * t - t * t, 4, 8 * t - t * t);
        let segs: Vec<Seg2> = [-3i64, -1, 1, 3]
            .iter()
            .map(|&t| tangent(t))
            .collect();
        let level = top_level(&segs).unwrap();
        let slopes: Vec<Rat> = level
            .piece_lines()
            .iter()
            .map(|&i| level.lines()[i].slope())
            .collect();
        for w in slopes.windows(2) {
            assert!(w[0] < w[1]);
        }
        // Four lines in "X" ladder position: all should be visited.
        assert_eq!(level.visited_lines().len(), 4);
        assert_eq!(level.breakpoints().len(), 3);
    }

    #[test]
    fn not_pairwise_crossing_is_rejected() {
        let segs = vec![seg(0, 0, 1, 1), seg(5, 5, 6, 7)];
        assert_eq!(
            top_level(&segs),
            Err(ArrangementError::NotPairwiseCrossing(0, 1))
        );
    }

    #[test]
    fn triangle_interval_basics() {
        let level = top_level(&[seg(-2, -2, 2, 2), seg(-2, 2, 2, -2)]).unwrap();
        // A triangle fully below the envelope.
        let below = [p2(-1, -10), p2(1, -10), p2(0, -5)];
        assert!(triangle_on_top_level(&level, &below).is_empty());
        // A triangle containing the breakpoint (0, 0): a single interval.
        let around = [p2(-1, -1), p2(1, -1), p2(0, 2)];
        let ivs = triangle_on_top_level(&level, &around);
        assert_eq!(ivs.len(), 1);
        let lo = ivs[0].lo.finite().unwrap();
        let hi = ivs[0].hi.finite().unwrap();
        assert_eq!((lo.clone(), hi.clone()), (frac(-1, 2), frac(1, 2)));
    }

    #[test]
    fn helly_1d_examples() {
        let iv = |a: i64, b: i64| {
            XInterval::new(XBound::Finite(rat(a)), XBound::Finite(rat(b)))
        };
        assert_eq!(
            helly_1d(&[iv(0, 2), iv(1, 3), iv(1, 5)]),
            Some(XBound::Finite(rat(1)))
        );
        assert_eq!(helly_1d(&[iv(0, 1), iv(2, 3)]), None);
        assert_eq!(helly_1d::<Rat>(&[]), None);
    }

    #[test]
    fn envelope_is_order_independent() {
        let segs = vec![
            seg(-10, 8, 10, -9),
            seg(-10, 3, 10, 2),
            seg(-10, -4, 10, 5),
            seg(-10, -9, 10, 10),
        ];
        let a = top_level(&segs).unwrap();
        let rev: Vec<Seg2> = segs.iter().rev().cloned().collect();
        let b = top_level(&rev).unwrap();
        assert_eq!(a.breakpoints(), b.breakpoints());
        let remap: Vec<usize> = b
            .piece_lines()
            .iter()
            .map(|&i| segs.len() - 1 - i)
            .collect();
        assert_eq!(a.piece_lines(), remap.as_slice());
    }
}
