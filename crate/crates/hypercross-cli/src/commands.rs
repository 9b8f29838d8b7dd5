//! Implementations of the subcommands.

use std::str::FromStr;
use std::time::Instant;

use hypercross::arrangement::{top_level, XBound};
use hypercross::detect::{
    find_convex_pattern, find_pairwise_crossing_segments, find_pairwise_disjoint,
    find_strongly_crossing, verify_witness, PatternKind, PatternSpec, Witness,
};
use hypercross::hypergraph::json::{
    from_json_str, hypergraph_from_file, hypergraph_to_file, point_set_from_file, rat_to_string,
    to_json_string,
};
use hypercross::hypergraph::{
    classify_base, generate_convex, generate_random, group_by_base, link_graph, star_construction,
    ApexPosition, GeometricHypergraph, PointSet, Simplex,
};
use hypercross::search::{
    extremal_exact, extremal_greedy, ExperimentRow, SearchError, EXPERIMENT_CSV_HEADER,
};
use hypercross::svg::{render_arrangement, render_counts, Series};
use hypercross::witness::{
    extract_sc3_from_four_crossing, find_disjoint_pair_pipeline, greedy_helly_selection,
    Case2Branch, Sc3Config, WitnessError,
};
use hypercross::Seg2;
use num_integer::binomial;

use crate::output::{
    emit, point_json, read_input, to_json, DetectPayload, DisjointTracePayload, ExtremalPayload,
    HellyTracePayload, Sc3TracePayload, WitnessPayload,
};
use crate::{
    CliError, DetectArgs, ExperimentArgs, ExtremalArgs, GenerateArgs, WitnessArgs,
};

fn precondition(msg: impl Into<String>) -> CliError {
    CliError::Precondition(msg.into())
}

fn pattern_spec(pattern: &str, k: usize) -> Result<PatternSpec, CliError> {
    if k < 2 {
        return Err(precondition("k must be at least 2"));
    }
    let kind = PatternKind::from_str(pattern).map_err(CliError::Precondition)?;
    Ok(PatternSpec::new(kind, k))
}

fn load_hypergraph(path: &str) -> Result<GeometricHypergraph, CliError> {
    let text = read_input(path)?;
    let file = from_json_str(&text).map_err(|e| precondition(e.to_string()))?;
    hypergraph_from_file(&file).map_err(|e| precondition(e.to_string()))
}

fn load_point_set(path: &str) -> Result<PointSet, CliError> {
    let text = read_input(path)?;
    let file = from_json_str(&text).map_err(|e| precondition(e.to_string()))?;
    point_set_from_file(&file).map_err(|e| precondition(e.to_string()))
}

pub fn generate(args: GenerateArgs) -> Result<(), CliError> {
    let ps = if args.convex {
        if args.dim != 2 {
            return Err(precondition("--convex requires --dim 2"));
        }
        generate_convex(args.n, args.seed).map_err(|e| precondition(e.to_string()))?
    } else {
        generate_random(args.dim, args.n, args.seed).map_err(|e| precondition(e.to_string()))?
    };

    let h = match args.edges.as_str() {
        "none" => GeometricHypergraph::new(ps, args.uniformity, Vec::new())
            .map_err(|e| precondition(e.to_string()))?,
        "star" => star_construction(&ps, args.center, args.uniformity)
            .map_err(|e| precondition(e.to_string()))?,
        "complete" => {
            let n = ps.len();
            let items: Vec<usize> = (0..n).collect();
            let mut edges = Vec::new();
            let mut scratch = vec![0usize; args.uniformity];
            hypercross::hypergraph::subsets(&items, args.uniformity, 0, &mut scratch, &mut |c| {
                edges.push(Simplex::new(c.to_vec()).expect("distinct"));
            });
            GeometricHypergraph::new(ps, args.uniformity, edges)
                .map_err(|e| precondition(e.to_string()))?
        }
        other => return Err(precondition(format!("unknown edge set {other:?}"))),
    };
    emit(&args.out, &to_json_string(&hypergraph_to_file(&h)))
}

pub fn detect(args: DetectArgs) -> Result<(), CliError> {
    let spec = pattern_spec(&args.pattern, args.k)?;
    let h = load_hypergraph(&args.input)?;
    let witness: Option<Witness> = match spec.kind {
        PatternKind::StronglyCrossing => {
            find_strongly_crossing(&h, spec.k).map_err(|e| precondition(e.to_string()))?
        }
        PatternKind::PairwiseDisjoint => {
            find_pairwise_disjoint(&h, spec.k).map_err(|e| precondition(e.to_string()))?
        }
        PatternKind::ConvexClockwise => {
            find_convex_pattern(&h, spec.k).map_err(|e| precondition(e.to_string()))?
        }
        PatternKind::PairwiseCrossing => {
            if h.uniformity() != 2 {
                return Err(precondition("pairwise-crossing expects a 2-uniform file"));
            }
            let segs: Vec<Seg2> = (0..h.edge_count())
                .map(|e| {
                    let v = h.edges()[e].vertices();
                    h.segment_2d(v[0], v[1])
                })
                .collect();
            find_pairwise_crossing_segments(&segs, spec.k).map(|edges| Witness {
                edges,
                certificate: None,
            })
        }
    };

    // Re-validate before emission; an unverifiable witness is a bug.
    if let Some(w) = &witness {
        let check_kind = match spec.kind {
            PatternKind::ConvexClockwise => PatternKind::StronglyCrossing,
            k => k,
        };
        if !verify_witness(&h, PatternSpec::new(check_kind, spec.k), w) {
            return Err(precondition(
                "internal error: witness failed re-verification",
            ));
        }
    }

    let payload = DetectPayload {
        pattern: spec.kind.as_str().to_string(),
        k: spec.k,
        found: witness.is_some(),
        witness: witness.map(|w| WitnessPayload {
            edges: w.edges,
            certificate: w.certificate.as_ref().map(point_json),
        }),
    };
    emit(&args.out, &to_json(&payload))
}

pub fn witness(args: WitnessArgs) -> Result<(), CliError> {
    let h = load_hypergraph(&args.input)?;
    match args.procedure.as_str() {
        "sc3-from-four-crossing" | "sc3" => witness_sc3(&h, args),
        "greedy-helly" => witness_helly(&h, args),
        "disjoint-pair" => witness_disjoint(&h, args),
        other => Err(precondition(format!("unknown procedure {other:?}"))),
    }
}

fn witness_sc3(h: &GeometricHypergraph, args: WitnessArgs) -> Result<(), CliError> {
    let cfg = Sc3Config {
        min_apexes_per_group: args.min_apexes,
    };
    let mut last_failure = String::from("no vertex has four pairwise crossing link bases");
    for v in 0..h.vertex_count() {
        let lg = link_graph(h, v).map_err(|e| precondition(e.to_string()))?;
        // Keep only bases the vertex lies strictly above.
        let mut bases: Vec<(usize, usize)> = Vec::new();
        let mut segs: Vec<Seg2> = Vec::new();
        for (i, &b) in lg.bases.iter().enumerate() {
            let entry = classify_base(h.points(), &h.edges()[lg.edges[i]])
                .map_err(|e| precondition(e.to_string()))?;
            if entry.apex_position == ApexPosition::Above {
                bases.push(b);
                segs.push(lg.base_segment(h, i));
            }
        }
        let Some(found) = find_pairwise_crossing_segments(&segs, 4) else {
            continue;
        };
        let four: [(usize, usize); 4] = [
            bases[found[0]],
            bases[found[1]],
            bases[found[2]],
            bases[found[3]],
        ];
        match extract_sc3_from_four_crossing(h, v, &four, &cfg) {
            Ok(out) => {
                let w = Witness {
                    edges: out.edges.to_vec(),
                    certificate: Some(out.common_point.clone()),
                };
                if !verify_witness(h, PatternSpec::new(PatternKind::StronglyCrossing, 3), &w) {
                    return Err(precondition(
                        "internal error: extraction failed re-verification",
                    ));
                }
                let payload = Sc3TracePayload {
                    procedure: "sc3-from-four-crossing",
                    vertex: v,
                    bases: four.iter().map(|&(a, b)| [a, b]).collect(),
                    case: out.case,
                    branch: out.branch.map(|b| {
                        match b {
                            Case2Branch::Left => "left",
                            Case2Branch::Right => "right",
                        }
                        .to_string()
                    }),
                    container_base: out.container_base,
                    donor_bases: [out.donor_bases.0, out.donor_bases.1],
                    donor_apexes: [out.donor_apexes.0, out.donor_apexes.1],
                    edges: out.edges.to_vec(),
                    certificate: point_json(&out.common_point),
                };
                return emit(&args.out, &to_json(&payload));
            }
            Err(e) => {
                last_failure = e.to_string();
                continue;
            }
        }
    }
    Err(precondition(last_failure))
}

fn witness_helly(h: &GeometricHypergraph, args: WitnessArgs) -> Result<(), CliError> {
    let k = args.k;
    if k < 2 {
        return Err(precondition("greedy-helly requires k >= 2"));
    }
    let groups = group_by_base(h).map_err(|e| precondition(e.to_string()))?;

    // Apexes strictly above, per base.
    let mut apexes_of: Vec<Vec<usize>> = Vec::with_capacity(groups.len());
    for g in &groups {
        let mut ap = Vec::new();
        for &e in &g.edges {
            let entry = classify_base(h.points(), &h.edges()[e])
                .map_err(|e| precondition(e.to_string()))?;
            if entry.apex_position == ApexPosition::Above {
                ap.push(entry.apex);
            }
        }
        ap.sort_unstable();
        apexes_of.push(ap);
    }

    // Scan k-subsets of base groups for pairwise crossing bases with at
    // least k common apexes.
    type Scenario = (Vec<(usize, usize)>, Vec<usize>);
    let mut stack: Vec<usize> = Vec::new();
    fn scan(
        h: &GeometricHypergraph,
        groups: &[hypercross::hypergraph::BaseGroup],
        apexes_of: &[Vec<usize>],
        k: usize,
        from: usize,
        stack: &mut Vec<usize>,
    ) -> Option<Scenario> {
        if stack.len() == k {
            let mut common: Vec<usize> = apexes_of[stack[0]].clone();
            for &g in &stack[1..] {
                common.retain(|a| apexes_of[g].binary_search(a).is_ok());
            }
            let bases: Vec<(usize, usize)> = stack.iter().map(|&g| groups[g].base).collect();
            common.retain(|&a| bases.iter().all(|&(u, w)| a != u && a != w));
            if common.len() >= k {
                return Some((bases, common[..k].to_vec()));
            }
            return None;
        }
        for g in from..groups.len() {
            let crosses_all = stack.iter().all(|&p| {
                let sa = h.segment_2d(groups[p].base.0, groups[p].base.1);
                let sb = h.segment_2d(groups[g].base.0, groups[g].base.1);
                matches!(hypercross::geom::segments_cross(&sa, &sb), Ok(true))
            });
            if !crosses_all {
                continue;
            }
            stack.push(g);
            if let Some(hit) = scan(h, groups, apexes_of, k, g + 1, stack) {
                return Some(hit);
            }
            stack.pop();
        }
        None
    }
    let Some((bases, apexes)) = scan(h, &groups, &apexes_of, k, 0, &mut stack) else {
        return Err(precondition(format!(
            "no {k} pairwise crossing bases share {k} usable apexes"
        )));
    };

    let sel = greedy_helly_selection(h, &bases, &apexes).map_err(|e| match e {
        WitnessError::PreconditionUnmet(m) => precondition(m),
        other => precondition(other.to_string()),
    })?;
    let w = Witness {
        edges: sel.edges.clone(),
        certificate: Some(sel.common_point.clone()),
    };
    if !verify_witness(h, PatternSpec::new(PatternKind::StronglyCrossing, k), &w) {
        return Err(precondition(
            "internal error: selection failed re-verification",
        ));
    }
    let payload = HellyTracePayload {
        procedure: "greedy-helly",
        bases: bases.iter().map(|&(a, b)| [a, b]).collect(),
        apexes: apexes.clone(),
        base_order: sel.base_order.clone(),
        edges: sel.edges.clone(),
        intervals: sel
            .intervals
            .iter()
            .map(|iv| {
                let XBound::Finite(lo) = &iv.lo else {
                    unreachable!("triangle intervals are bounded")
                };
                let XBound::Finite(hi) = &iv.hi else {
                    unreachable!("triangle intervals are bounded")
                };
                [rat_to_string(lo), rat_to_string(hi)]
            })
            .collect(),
        certificate: point_json(&sel.common_point),
    };
    emit(&args.out, &to_json(&payload))
}

fn witness_disjoint(h: &GeometricHypergraph, args: WitnessArgs) -> Result<(), CliError> {
    let outcome = find_disjoint_pair_pipeline(h).map_err(|e| precondition(e.to_string()))?;
    let Some(out) = outcome else {
        return Err(precondition(
            "pipeline found no avoiding pair with an extractable red edge",
        ));
    };
    let w = Witness {
        edges: vec![out.pair.blue_edge, out.pair.red_edge],
        certificate: None,
    };
    if !verify_witness(h, PatternSpec::new(PatternKind::PairwiseDisjoint, 2), &w) {
        return Err(precondition(
            "internal error: extracted pair failed re-verification",
        ));
    }
    let payload = DisjointTracePayload {
        procedure: "disjoint-pair",
        red_count: out.coloring.red_count(),
        blue_count: out.coloring.blue_count(),
        vertex: out.vertex,
        blue_degree_at_vertex: out.coloring.blue_degree[out.vertex],
        avoiding_edges: [out.avoiding_edges.0, out.avoiding_edges.1],
        blue_edge: out.pair.blue_edge,
        red_edge: out.pair.red_edge,
        verified_disjoint: true,
    };
    emit(&args.out, &to_json(&payload))
}

pub fn extremal(args: ExtremalArgs) -> Result<(), CliError> {
    let spec = pattern_spec(&args.pattern, args.k)?;
    let ps = load_point_set(&args.input)?;
    let result = if args.greedy {
        extremal_greedy(&ps, spec, args.seed)
    } else {
        extremal_exact(&ps, spec, args.budget)
    };
    let result = result.map_err(|e| match e {
        SearchError::BudgetExceeded { budget } => {
            CliError::Budget(format!("budget of {budget} exceeded"))
        }
        other => precondition(other.to_string()),
    })?;
    let payload = ExtremalPayload {
        pattern: spec.kind.as_str().to_string(),
        k: spec.k,
        count: result.count,
        exact: result.exact,
        edges: result
            .edges
            .iter()
            .map(|s| s.vertices().to_vec())
            .collect(),
    };
    emit(&args.out, &to_json(&payload))
}

pub fn experiment(args: ExperimentArgs) -> Result<(), CliError> {
    if let Some(kind) = &args.emit_svg {
        if kind == "arrangements" {
            return experiment_arrangement_svg(&args);
        }
        if kind != "counts" {
            return Err(precondition(format!("unknown --emit-svg mode {kind:?}")));
        }
    }

    let spec = pattern_spec(&args.pattern, args.k)?;
    if args.n_min > args.n_max || args.seeds == 0 {
        return Err(precondition("empty sweep"));
    }
    let dim = spec.kind.dimension().max(args.dim);
    let r = spec.kind.uniformity();

    let mut rows: Vec<ExperimentRow> = Vec::new();
    for n in args.n_min..=args.n_max {
        for seed in 0..args.seeds {
            let started = Instant::now();
            let ps = if spec.kind == PatternKind::ConvexClockwise {
                generate_convex(n, seed)
            } else {
                generate_random(dim, n, seed)
            }
            .map_err(|e| precondition(e.to_string()))?;
            let star_count = binomial(n - 1, r - 1);
            let greedy = extremal_greedy(&ps, spec, seed)
                .map_err(|e| precondition(e.to_string()))?;
            let (exact_count, exact_flag) = if args.exact {
                match extremal_exact(&ps, spec, args.budget) {
                    Ok(res) => (Some(res.count), res.exact),
                    Err(SearchError::BudgetExceeded { .. }) => (None, false),
                    Err(other) => return Err(precondition(other.to_string())),
                }
            } else {
                (None, false)
            };
            rows.push(ExperimentRow {
                seed,
                n,
                pattern: spec,
                star_count,
                greedy_count: greedy.count,
                exact_count,
                exact_flag,
                runtime_ms: started.elapsed().as_millis(),
            });
        }
    }
    rows.sort_by_key(|r| (r.n, r.seed));

    let mut csv = String::from(EXPERIMENT_CSV_HEADER);
    csv.push('\n');
    for row in &rows {
        csv.push_str(&row.to_csv());
        csv.push('\n');
    }
    emit(&args.out, &csv)?;

    if args.emit_svg.as_deref() == Some("counts") {
        let mean = |f: &dyn Fn(&ExperimentRow) -> Option<usize>| -> Vec<(usize, f64)> {
            (args.n_min..=args.n_max)
                .filter_map(|n| {
                    let vals: Vec<usize> = rows
                        .iter()
                        .filter(|r| r.n == n)
                        .filter_map(f)
                        .collect();
                    if vals.is_empty() {
                        None
                    } else {
                        Some((n, vals.iter().sum::<usize>() as f64 / vals.len() as f64))
                    }
                })
                .collect()
        };
        let mut series = vec![
            Series {
                label: "star",
                color: "gray",
                points: mean(&|r| Some(r.star_count)),
            },
            Series {
                label: "greedy",
                color: "steelblue",
                points: mean(&|r| Some(r.greedy_count)),
            },
        ];
        let exact_points = mean(&|r| r.exact_count);
        if !exact_points.is_empty() {
            series.push(Series {
                label: "exact",
                color: "firebrick",
                points: exact_points,
            });
        }
        let svg = render_counts(&series);
        emit(&args.svg_out, &svg)?;
    }
    Ok(())
}

fn experiment_arrangement_svg(args: &ExperimentArgs) -> Result<(), CliError> {
    let Some(input) = &args.input else {
        return Err(precondition("--emit-svg arrangements requires --input"));
    };
    let h = load_hypergraph(input)?;
    if h.uniformity() != 2 || h.points().dimension() != 2 {
        return Err(precondition(
            "arrangement rendering expects a planar 2-uniform (segment) file",
        ));
    }
    let segs: Vec<Seg2> = (0..h.edge_count())
        .map(|e| {
            let v = h.edges()[e].vertices();
            h.segment_2d(v[0], v[1])
        })
        .collect();
    let level = top_level(&segs).map_err(|e| precondition(e.to_string()))?;
    let svg = render_arrangement(&segs, Some(&level));
    emit(&args.svg_out, &svg)
}
