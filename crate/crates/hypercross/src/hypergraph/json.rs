//! JSON interchange format for point sets and hypergraphs.
//!
//! Rationals are serialized as `"p/q"` strings so files round-trip exactly;
//! a bare point set is a hypergraph file with an empty edge list. Loading
//! always re-validates general position and edge well-formedness.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{GeometricHypergraph, HypergraphError, PointSet, Simplex};
use crate::scalar::Int;
use crate::{Pt2, Pt3, Rat};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HypergraphFile {
    pub dimension: u8,
    /// One coordinate vector per point, each entry an exact `"p/q"` string.
    pub points: Vec<Vec<String>>,
    pub uniformity: usize,
    pub edges: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rat_from_string(s: &str) -> Result<Rat, JsonError> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: Int = num
        .trim()
        .parse()
        .map_err(|_| JsonError::Parse(format!("bad numerator in {s:?}")))?;
    let den: Int = den
        .trim()
        .parse()
        .map_err(|_| JsonError::Parse(format!("bad denominator in {s:?}")))?;
    if den == Int::from(0) {
        return Err(JsonError::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(num, den))
}

pub fn hypergraph_to_file(h: &GeometricHypergraph) -> HypergraphFile {
    let mut file = point_set_to_file(h.points(), h.uniformity());
    file.edges = h
        .edges()
        .iter()
        .map(|e| e.vertices().to_vec())
        .collect();
    file
}

pub fn point_set_to_file(ps: &PointSet, uniformity: usize) -> HypergraphFile {
    let points = match ps.dimension() {
        2 => ps
            .points_2d()
            .unwrap()
            .iter()
            .map(|p| vec![rat_to_string(&p.x), rat_to_string(&p.y)])
            .collect(),
        _ => ps
            .points_3d()
            .unwrap()
            .iter()
            .map(|p| {
                vec![
                    rat_to_string(&p.x),
                    rat_to_string(&p.y),
                    rat_to_string(&p.z),
                ]
            })
            .collect(),
    };
    HypergraphFile {
        dimension: ps.dimension(),
        points,
        uniformity,
        edges: Vec::new(),
        seed: ps.seed(),
    }
}

pub fn point_set_from_file(file: &HypergraphFile) -> Result<PointSet, JsonError> {
    let ps = match file.dimension {
        2 => {
            let mut pts: Vec<Pt2> = Vec::with_capacity(file.points.len());
            for (i, coords) in file.points.iter().enumerate() {
                if coords.len() != 2 {
                    return Err(JsonError::Parse(format!("point {i} is not 2-dimensional")));
                }
                pts.push(Pt2::new(
                    rat_from_string(&coords[0])?,
                    rat_from_string(&coords[1])?,
                ));
            }
            PointSet::new_2d(pts)?
        }
        3 => {
            let mut pts: Vec<Pt3> = Vec::with_capacity(file.points.len());
            for (i, coords) in file.points.iter().enumerate() {
                if coords.len() != 3 {
                    return Err(JsonError::Parse(format!("point {i} is not 3-dimensional")));
                }
                pts.push(Pt3::new(
                    rat_from_string(&coords[0])?,
                    rat_from_string(&coords[1])?,
                    rat_from_string(&coords[2])?,
                ));
            }
            PointSet::new_3d(pts)?
        }
        d => return Err(JsonError::Parse(format!("unsupported dimension {d}"))),
    };
    Ok(match file.seed {
        Some(s) => ps.with_seed(s),
        None => ps,
    })
}

pub fn hypergraph_from_file(file: &HypergraphFile) -> Result<GeometricHypergraph, JsonError> {
    let ps = point_set_from_file(file)?;
    let mut edges = Vec::with_capacity(file.edges.len());
    for raw in &file.edges {
        edges.push(Simplex::new(raw.clone())?);
    }
    Ok(GeometricHypergraph::new(ps, file.uniformity, edges)?)
}

/// Render a file as deterministic, human-readable JSON (trailing newline
/// included). Identical data always yields identical bytes.
pub fn to_json_string(file: &HypergraphFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("serializable");
    s.push('\n');
    s
}

pub fn from_json_str(s: &str) -> Result<HypergraphFile, JsonError> {
    Ok(serde_json::from_str(s)?)
}
