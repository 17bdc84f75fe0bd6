//! Output documents: stable JSON (sorted keys) and CSV curves.
//!
//! Determinism contract: identical requests must produce identical bytes,
//! so nothing here consults the clock, the environment, or thread counts.

use flatmod_core::algebra::chars::HolonomySpec;
use flatmod_core::series::{SeriesResult, SurfaceTopology};
use serde_json::{json, Value};

/// A finished command result, ready to print in either format.
pub struct Document {
    pub json: Value,
    pub csv: String,
}

impl Document {
    pub fn render(&self, csv: bool) -> String {
        if csv {
            self.csv.clone()
        } else {
            // `Value` maps are sorted, so this is byte-stable.
            let mut s = serde_json::to_string_pretty(&self.json).expect("finite JSON");
            s.push('\n');
            s
        }
    }
}

pub fn holonomy_value(spec: &HolonomySpec) -> Value {
    if spec.is_central() {
        json!({ "center": spec.center })
    } else {
        json!({ "center": spec.center, "frame_coords": spec.coords })
    }
}

pub fn topology_value(topo: &SurfaceTopology) -> Value {
    match topo {
        SurfaceTopology::Closed { genus, center } => {
            json!({ "kind": "closed", "genus": genus, "center": center })
        }
        SurfaceTopology::Bounded { genus, boundaries } => {
            let bs: Vec<Value> = boundaries.iter().map(holonomy_value).collect();
            json!({ "kind": "bounded", "genus": genus, "boundaries": bs })
        }
        SurfaceTopology::NonOrientableOdd { k, center } => {
            json!({ "kind": "non-orientable-odd", "k": k, "center": center })
        }
        SurfaceTopology::NonOrientableEven { k, center } => {
            json!({ "kind": "non-orientable-even", "k": k, "center": center })
        }
    }
}

pub fn series_fields(res: &SeriesResult) -> Vec<(&'static str, Value)> {
    let schedule: Vec<Value> = res
        .schedule_values
        .iter()
        .map(|(t, v)| json!([t, v]))
        .collect();
    vec![
        ("value", json!(res.value)),
        ("tail_bound", json!(res.tail_bound)),
        ("schedule_values", Value::Array(schedule)),
        ("residual", json!(res.extrapolated.map_or(0.0, |e| e.residual))),
        ("extrapolated", json!(res.extrapolated.is_some())),
        ("weight_count", json!(res.weight_count)),
        ("converged", json!(res.converged)),
    ]
}

/// The `t,partial_sum,residual` curve: one row per schedule point, then the
/// reported value with its extrapolation residual.
pub fn series_csv(res: &SeriesResult) -> String {
    let mut out = String::from("t,partial_sum,residual\n");
    match res.extrapolated {
        Some(e) => {
            for (t, v) in &res.schedule_values {
                out.push_str(&format!("{t},{v},\n"));
            }
            out.push_str(&format!("0,{},{}\n", res.value, e.residual));
        }
        None => {
            let (t, v) = res.schedule_values[0];
            out.push_str(&format!("{t},{v},{}\n", 0.0));
        }
    }
    out
}

/// Assemble a JSON object from base request echoes plus per-command fields.
pub fn object(fields: Vec<(&'static str, Value)>) -> Value {
    let mut map = serde_json::Map::new();
    for (k, v) in fields {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}

/// The structured engine-error document: `{"error": {kind, message}}`.
pub fn error_value(err: &flatmod_core::Error) -> Value {
    use flatmod_core::Error as E;
    let kind = match err {
        E::UnsupportedGroup { .. } => "UnsupportedGroup",
        E::WeylGroupTooLarge { .. } => "WeylGroupTooLarge",
        E::NonDominantWeight { .. } => "NonDominantWeight",
        E::NearSingularElement { .. } => "NearSingularElement",
        E::InvalidCenterElement { .. } => "InvalidCenterElement",
        E::CutoffTooLarge { .. } => "CutoffTooLarge",
        E::DivergentAtZeroT { .. } => "DivergentAtZeroT",
        E::NonInvariantPolynomial { .. } => "NonInvariantPolynomial",
        E::ExtrapolationUnstable { .. } => "ExtrapolationUnstable",
        E::TruncationInsufficient { .. } => "TruncationInsufficient",
        E::ArityMismatch { .. } => "ArityMismatch",
    };
    json!({ "error": { "kind": kind, "message": err.to_string() } })
}
