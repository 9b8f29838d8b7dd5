//! Seeded point-set generators.
//!
//! Coordinates are drawn as integers from a bounded box and rejected until
//! the general-position invariants hold, so outputs are exactly
//! representable and reproducible: a fixed seed gives a bit-identical point
//! set.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{point_extends_gp_2d, point_extends_gp_3d, HypergraphError, PointSet};
use crate::scalar::{rat, Int};
use crate::{Pt2, Pt3, Rat};

const COORD_RANGE: i64 = 10_000;
const MAX_POINT_RETRIES: usize = 10_000;

/// Random points in general position; `dim` must be 2 or 3.
pub fn generate_random(dim: u8, n: usize, seed: u64) -> Result<PointSet, HypergraphError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match dim {
        2 => {
            let mut pts: Vec<Pt2> = Vec::with_capacity(n);
            let mut attempts = 0;
            while pts.len() < n {
                attempts += 1;
                if attempts > MAX_POINT_RETRIES {
                    return Err(HypergraphError::GenerationFailed { attempts });
                }
                let cand = Pt2::new(
                    rat(rng.gen_range(-COORD_RANGE..=COORD_RANGE)),
                    rat(rng.gen_range(-COORD_RANGE..=COORD_RANGE)),
                );
                if point_extends_gp_2d(&pts, &cand) {
                    pts.push(cand);
                }
            }
            Ok(PointSet::new_2d(pts)?.with_seed(seed))
        }
        3 => {
            let mut pts: Vec<Pt3> = Vec::with_capacity(n);
            let mut attempts = 0;
            while pts.len() < n {
                attempts += 1;
                if attempts > MAX_POINT_RETRIES {
                    return Err(HypergraphError::GenerationFailed { attempts });
                }
                let cand = Pt3::new(
                    rat(rng.gen_range(-COORD_RANGE..=COORD_RANGE)),
                    rat(rng.gen_range(-COORD_RANGE..=COORD_RANGE)),
                    rat(rng.gen_range(-COORD_RANGE..=COORD_RANGE)),
                );
                if point_extends_gp_3d(&pts, &cand) {
                    pts.push(cand);
                }
            }
            Ok(PointSet::new_3d(pts)?.with_seed(seed))
        }
        other => panic!("unsupported dimension {other}"),
    }
}

/// Random points in strictly convex position, stored in clockwise order
/// along their hull.
///
/// Points are taken on the rational unit circle via the parameterization
/// `t -> ((1 - t^2) / (1 + t^2), 2t / (1 + t^2))`, which is exact and
/// strictly convex; decreasing `t` walks the circle clockwise. Parameters
/// `t` and `-t` share an x-coordinate, so such pairs are rejected.
pub fn generate_convex(n: usize, seed: u64) -> Result<PointSet, HypergraphError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = (4 * n as i64).max(16);
    let mut params: Vec<i64> = Vec::with_capacity(n);
    let mut attempts = 0;
    while params.len() < n {
        attempts += 1;
        if attempts > MAX_POINT_RETRIES {
            return Err(HypergraphError::GenerationFailed { attempts });
        }
        let t = rng.gen_range(-span..=span);
        if params.iter().any(|&u| u == t || u == -t) {
            continue;
        }
        params.push(t);
    }
    // The circle parameter is monotone in the angle; sorting descending
    // stores the points clockwise.
    params.sort_unstable_by(|a, b| b.cmp(a));
    let pts: Vec<Pt2> = params.into_iter().map(circle_point).collect();
    Ok(PointSet::new_2d(pts)?.with_seed(seed))
}

fn circle_point(t: i64) -> Pt2 {
    let t = Int::from(t);
    let one = Int::from(1);
    let denom = &one + &t * &t;
    let x = Rat::new(&one - &t * &t, denom.clone());
    let y = Rat::new(Int::from(2) * t, denom);
    Pt2::new(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{convex_hull_indices, orient2, Orientation2};

    #[test]
    fn random_is_deterministic() {
        let a = generate_random(2, 50, 7).unwrap();
        let b = generate_random(2, 50, 7).unwrap();
        assert_eq!(a, b);
        let c = generate_random(2, 50, 8).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn random_3d_passes_validation() {
        let ps = generate_random(3, 20, 3).unwrap();
        assert_eq!(ps.validate(), None);
        assert_eq!(ps.len(), 20);
    }

    #[test]
    fn convex_points_are_hull_vertices_in_clockwise_order() {
        for seed in 0..5u64 {
            let ps = generate_convex(8, seed).unwrap();
            let pts = ps.points_2d().unwrap();
            assert_eq!(ps.validate(), None);
            assert_eq!(convex_hull_indices(pts).len(), pts.len());
            for i in 0..pts.len() {
                let a = &pts[i];
                let b = &pts[(i + 1) % pts.len()];
                let c = &pts[(i + 2) % pts.len()];
                assert_eq!(orient2(a, b, c), Orientation2::Cw);
            }
        }
    }

    #[test]
    fn convex_small() {
        let ps = generate_convex(4, 1).unwrap();
        assert_eq!(ps.len(), 4);
        assert_eq!(ps.seed(), Some(1));
    }
}
