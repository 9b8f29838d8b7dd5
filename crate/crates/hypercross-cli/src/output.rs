//! JSON payload shapes and deterministic writing.

use std::fs;
use std::io::Write;

use serde::Serialize;

use hypercross::hypergraph::json::rat_to_string;
use hypercross::Pt2;

use crate::CliError;

/// Exact certificate point as a `["p/q", "p/q"]` pair.
pub fn point_json(p: &Pt2) -> Vec<String> {
    vec![rat_to_string(&p.x), rat_to_string(&p.y)]
}

#[derive(Serialize)]
pub struct DetectPayload {
    pub pattern: String,
    pub k: usize,
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessPayload>,
}

#[derive(Serialize)]
pub struct WitnessPayload {
    pub edges: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<String>>,
}

#[derive(Serialize)]
pub struct Sc3TracePayload {
    pub procedure: &'static str,
    pub vertex: usize,
    pub bases: Vec<[usize; 2]>,
    pub case: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    pub container_base: usize,
    pub donor_bases: [usize; 2],
    pub donor_apexes: [usize; 2],
    pub edges: Vec<usize>,
    pub certificate: Vec<String>,
}

#[derive(Serialize)]
pub struct HellyTracePayload {
    pub procedure: &'static str,
    pub bases: Vec<[usize; 2]>,
    pub apexes: Vec<usize>,
    pub base_order: Vec<usize>,
    pub edges: Vec<usize>,
    pub intervals: Vec<[String; 2]>,
    pub certificate: Vec<String>,
}

#[derive(Serialize)]
pub struct DisjointTracePayload {
    pub procedure: &'static str,
    pub red_count: usize,
    pub blue_count: usize,
    pub vertex: usize,
    pub blue_degree_at_vertex: usize,
    pub avoiding_edges: [usize; 2],
    pub blue_edge: usize,
    pub red_edge: usize,
    pub verified_disjoint: bool,
}

#[derive(Serialize)]
pub struct ExtremalPayload {
    pub pattern: String,
    pub k: usize,
    pub count: usize,
    pub exact: bool,
    pub edges: Vec<Vec<usize>>,
}

/// Serialize to pretty JSON with a trailing newline; identical data gives
/// identical bytes.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable payload");
    s.push('\n');
    s
}

/// Write to the path or stdout.
pub fn emit(out: &Option<String>, payload: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, payload)
            .map_err(|e| CliError::Precondition(format!("cannot write {path}: {e}"))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(payload.as_bytes())
                .map_err(|e| CliError::Precondition(format!("cannot write stdout: {e}")))
        }
    }
}

pub fn read_input(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Precondition(format!("cannot read {path}: {e}")))
}
