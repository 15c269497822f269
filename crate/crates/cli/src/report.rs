//! Report bodies (the `results` subtree) and their CSV renderings.
//!
//! Every builder produces a `serde_json::Value`; the default map keeps
//! keys sorted, so serializing the same results twice yields identical
//! bytes. CSV renderers read back from the `Value` rather than from the
//! in-memory report, which makes cached and fresh output byte-identical
//! by construction.

use serde_json::{json, Map, Value};

use sumset_core::{
    HistogramReport, IntSet, LayerDecomposition, PopularFamily, Problem1Row, RangeReport,
    SearchSpace, SpaceShape, VerificationReport,
};

pub fn int_set_value(set: &IntSet) -> Value {
    Value::Array(set.iter().map(Value::from).collect())
}

fn shape_name(shape: SpaceShape) -> &'static str {
    match shape {
        SpaceShape::CanonicalAll => "canonical-all",
        SpaceShape::UnitSecond => "unit-second",
        SpaceShape::Problem1 => "problem1",
    }
}

pub fn sumset_results(input: &IntSet, h: u32, sumset: &IntSet) -> Value {
    json!({
        "input": int_set_value(input),
        "h": h,
        "size": sumset.len(),
        "sumset": int_set_value(sumset),
    })
}

pub fn verify_results(report: &VerificationReport) -> Value {
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|row| {
            json!({
                "i0": row.i0,
                "set": int_set_value(&row.set),
                "computed_size": row.computed_size,
                "predicted_size": row.predicted_size,
                "pass": row.pass,
            })
        })
        .collect();
    json!({
        "h": report.h,
        "all_pass": report.all_pass(),
        "rows": rows,
    })
}

fn space_fields(space: &SearchSpace, out: &mut Map<String, Value>) {
    out.insert("k".into(), space.k.into());
    out.insert("max_element".into(), space.max_element.into());
    out.insert("shape".into(), shape_name(space.shape).into());
}

pub fn range_results(report: &RangeReport) -> Value {
    let sizes: Vec<Value> = report
        .achieved
        .iter()
        .map(|size| {
            json!({
                "size": size,
                "count": report.frequencies[size],
                "witness": int_set_value(&report.witnesses[size]),
            })
        })
        .collect();
    let mut out = Map::new();
    out.insert("h".into(), report.h.into());
    space_fields(&report.space, &mut out);
    out.insert("cardinality".into(), report.cardinality.into());
    out.insert(
        "bounds".into(),
        json!({"lower": report.bounds.lower, "upper": report.bounds.upper}),
    );
    out.insert("achieved".into(), report.achieved.clone().into());
    out.insert(
        "missing_in_interval".into(),
        report.missing_in_interval.clone().into(),
    );
    out.insert("sizes".into(), Value::Array(sizes));
    Value::Object(out)
}

pub fn histogram_results(report: &HistogramReport) -> Value {
    let entries: Vec<Value> = report
        .entries
        .iter()
        .enumerate()
        .map(|(idx, e)| json!({"rank": idx + 1, "size": e.size, "count": e.count}))
        .collect();
    let targets: Vec<Value> = report
        .target_ranks
        .iter()
        .map(|t| {
            json!({
                "i0": t.i0,
                "size": t.size,
                "rank": t.rank.map_or(Value::Null, Value::from),
            })
        })
        .collect();
    let mut out = Map::new();
    out.insert("h".into(), report.h.into());
    space_fields(&report.space, &mut out);
    out.insert("cardinality".into(), report.cardinality.into());
    out.insert("entries".into(), Value::Array(entries));
    out.insert("target_ranks".into(), Value::Array(targets));
    Value::Object(out)
}

pub fn scan1_results(h: u32, rows: &[Problem1Row]) -> Value {
    let rows: Vec<Value> = rows
        .iter()
        .map(|row| {
            json!({
                "p": row.p,
                "set": row.set.as_ref().map_or(Value::Null, int_set_value),
                "size": row.size.map_or(Value::Null, Value::from),
                "degenerate": row.degenerate,
            })
        })
        .collect();
    json!({"h": h, "rows": rows})
}

pub struct DecomposeData {
    pub family: PopularFamily,
    pub layers: Vec<LayerDecomposition>,
    pub t1_intersections: Vec<u64>,
    pub formula_sizes: Vec<u64>,
    pub threshold: u32,
    pub predicted_size: u64,
    pub sumset_size: u64,
    pub union_size: u64,
}

pub fn decompose_results(data: &DecomposeData) -> Value {
    let layers: Vec<Value> = data
        .layers
        .iter()
        .zip(&data.formula_sizes)
        .map(|(layer, &formula)| {
            let runs: Vec<Value> = layer
                .runs
                .iter()
                .map(|run| {
                    json!({
                        "q": run.q,
                        "j": run.j,
                        "start": run.start().expect("validated run"),
                        "end": run.end().expect("validated run"),
                    })
                })
                .collect();
            json!({
                "i": layer.i,
                "size": layer.size(),
                "formula_size": formula,
                "runs": runs,
            })
        })
        .collect();
    let intersections: Vec<Value> = data
        .t1_intersections
        .iter()
        .enumerate()
        .map(|(i, &size)| json!({"i": i, "size": size}))
        .collect();
    json!({
        "h": data.family.h,
        "i0": data.family.i0,
        "p": data.family.p,
        "c": data.family.c,
        "set": int_set_value(&data.family.set),
        "predicted_size": data.predicted_size,
        "sumset_size": data.sumset_size,
        "union_size": data.union_size,
        "disjointness_threshold": data.threshold,
        "layers": layers,
        "t1_intersections": intersections,
    })
}

/// Required top-level keys per command; a cache entry missing any of
/// them is treated as a miss and recomputed.
pub fn schema_ok(command: &str, results: &Value) -> bool {
    let keys: &[&str] = match command {
        "sumset" => &["input", "h", "size", "sumset"],
        "verify" => &["h", "all_pass", "rows"],
        "range" | "scan2" => &[
            "h",
            "k",
            "shape",
            "cardinality",
            "bounds",
            "achieved",
            "missing_in_interval",
            "sizes",
        ],
        "histogram" => &["h", "k", "shape", "cardinality", "entries", "target_ranks"],
        "scan1" => &["h", "rows"],
        "decompose" => &["h", "i0", "layers", "t1_intersections"],
        _ => return false,
    };
    keys.iter().all(|k| results.get(k).is_some())
}

// ---- CSV ----------------------------------------------------------------

fn ints_semicolon(v: &Value) -> String {
    let parts: Vec<String> = v
        .as_array()
        .expect("report schema: integer array")
        .iter()
        .map(|x| x.to_string())
        .collect();
    parts.join(";")
}

fn field<'a>(row: &'a Value, key: &str) -> &'a Value {
    row.get(key).expect("report schema: field")
}

/// Renders the fixed CSV schema for a command's results subtree.
pub fn render_csv(command: &str, results: &Value) -> String {
    let mut out = String::new();
    match command {
        "sumset" => {
            out.push_str("input,h,size,sumset\n");
            out.push_str(&format!(
                "{},{},{},{}\n",
                ints_semicolon(field(results, "input")),
                field(results, "h"),
                field(results, "size"),
                ints_semicolon(field(results, "sumset")),
            ));
        }
        "verify" => {
            out.push_str("i0,set,computed_size,predicted_size,pass\n");
            for row in field(results, "rows").as_array().expect("rows") {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    field(row, "i0"),
                    ints_semicolon(field(row, "set")),
                    field(row, "computed_size"),
                    field(row, "predicted_size"),
                    field(row, "pass"),
                ));
            }
        }
        "range" | "scan2" => {
            out.push_str("size,count,witness\n");
            for row in field(results, "sizes").as_array().expect("sizes") {
                out.push_str(&format!(
                    "{},{},{}\n",
                    field(row, "size"),
                    field(row, "count"),
                    ints_semicolon(field(row, "witness")),
                ));
            }
        }
        "histogram" => {
            out.push_str("rank,size,count\n");
            for row in field(results, "entries").as_array().expect("entries") {
                out.push_str(&format!(
                    "{},{},{}\n",
                    field(row, "rank"),
                    field(row, "size"),
                    field(row, "count"),
                ));
            }
        }
        "scan1" => {
            out.push_str("p,set,size,degenerate\n");
            for row in field(results, "rows").as_array().expect("rows") {
                let set = field(row, "set");
                let size = field(row, "size");
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    field(row, "p"),
                    if set.is_null() {
                        String::new()
                    } else {
                        ints_semicolon(set)
                    },
                    if size.is_null() {
                        String::new()
                    } else {
                        size.to_string()
                    },
                    field(row, "degenerate"),
                ));
            }
        }
        "decompose" => {
            out.push_str("i,layer_size,intersection_with_next,runs\n");
            let intersections = field(results, "t1_intersections")
                .as_array()
                .expect("intersections");
            for (idx, layer) in field(results, "layers")
                .as_array()
                .expect("layers")
                .iter()
                .enumerate()
            {
                let runs: Vec<String> = field(layer, "runs")
                    .as_array()
                    .expect("runs")
                    .iter()
                    .map(|run| format!("{}..{}", field(run, "start"), field(run, "end")))
                    .collect();
                let next = intersections
                    .get(idx)
                    .map(|v| field(v, "size").to_string())
                    .unwrap_or_default();
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    field(layer, "i"),
                    field(layer, "size"),
                    next,
                    runs.join(";"),
                ));
            }
        }
        other => unreachable!("no CSV schema for {other}"),
    }
    out
}
