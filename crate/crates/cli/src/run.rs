//! Command drivers: resolve a parsed request against the engines and build
//! the output document.

use std::fs;
use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};

use flatmod_core::algebra::chars::HolonomySpec;
use flatmod_core::mc::{
    complex_lattice_integral, mc_partition_estimate, required_cutoff, surface_of_complex,
    LatticeComplex, LatticeTwist,
};
use flatmod_core::rat::{rat_to_f64, Rat};
use flatmod_core::series::{
    assembled_invariant, moduli_series_with, regularized_limit, EvalOptions, InvariantPolynomial,
    SurfaceTopology,
};
use flatmod_core::{RootSystem, Weight};

use crate::output::{error_value, holonomy_value, object, series_csv, series_fields, topology_value, Document};
use crate::parse;

/// Anything that can stop a command: bad request text (exit 2) or an engine
/// refusal (exit 1, with a structured document).
pub enum Failure {
    Usage(String),
    Engine(flatmod_core::Error),
}

impl From<flatmod_core::Error> for Failure {
    fn from(e: flatmod_core::Error) -> Self {
        Failure::Engine(e)
    }
}

impl Failure {
    pub fn usage(msg: impl Into<String>) -> Self {
        Failure::Usage(msg.into())
    }

    /// (exit code, stdout document if any, stderr line)
    pub fn render(&self) -> (i32, Option<String>, String) {
        match self {
            Failure::Usage(msg) => (2, None, format!("usage error: {msg}")),
            Failure::Engine(e) => {
                let mut doc = serde_json::to_string_pretty(&error_value(e)).expect("error JSON");
                doc.push('\n');
                (1, Some(doc), format!("error: {e}"))
            }
        }
    }
}

fn map_usage(r: Result<RootSystem, String>) -> Result<RootSystem, Failure> {
    r.map_err(Failure::Usage)
}

/// Weight-enumeration budget: `FLATMOD_WEIGHT_BUDGET` overrides the default.
pub fn eval_options() -> Result<EvalOptions, Failure> {
    let mut opts = EvalOptions::default();
    if let Ok(text) = std::env::var("FLATMOD_WEIGHT_BUDGET") {
        opts.weight_budget = text
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("FLATMOD_WEIGHT_BUDGET: bad value `{text}`")))?;
    }
    Ok(opts)
}

fn group_name(rs: &RootSystem) -> String {
    format!("{}{}", rs.family().letter(), rs.rank())
}

/// Echo fields shared by every series-backed command.
fn base_fields(
    rs: &RootSystem,
    topo: &SurfaceTopology,
    p: &InvariantPolynomial,
    sched: &[f64],
    cutoff: Rat,
    opts: &EvalOptions,
) -> Vec<(&'static str, Value)> {
    vec![
        ("group", json!(group_name(rs))),
        ("topology", topology_value(topo)),
        ("polynomial", json!(p.to_text())),
        ("t_schedule", json!(sched)),
        ("cutoff", json!(rat_to_f64(cutoff))),
        ("weight_budget", json!(opts.weight_budget)),
    ]
}

pub struct SeriesRequest {
    pub rs: RootSystem,
    pub topo: SurfaceTopology,
    pub poly: InvariantPolynomial,
    pub t: Option<f64>,
    pub schedule: Vec<f64>,
    pub cutoff: Rat,
}

impl SeriesRequest {
    #[allow(clippy::too_many_arguments)]
    pub fn build(
        group: &str,
        genus: Option<u32>,
        case: Option<&str>,
        k: Option<u32>,
        center: &str,
        boundaries: &[String],
        poly: &str,
        t: Option<f64>,
        t_schedule: Option<&str>,
        cutoff: &str,
    ) -> Result<Self, Failure> {
        let rs = map_usage(parse::parse_group(group))?;
        let topo = parse::build_topology(&rs, genus, case, k, center, boundaries)
            .map_err(Failure::Usage)?;
        let poly = parse::parse_poly(rs.rank(), poly).map_err(Failure::Usage)?;
        if t.is_some() && t_schedule.is_some() {
            return Err(Failure::usage("--t and --t-schedule are mutually exclusive"));
        }
        if let Some(tv) = t {
            if !(tv >= 0.0) || !tv.is_finite() {
                return Err(Failure::usage("--t: must be a finite nonnegative number"));
            }
        }
        let schedule = match t_schedule {
            Some(text) => parse::parse_schedule(text).map_err(Failure::Usage)?,
            None => parse::default_schedule(),
        };
        let cutoff = parse::parse_rational(cutoff)
            .map_err(|e| Failure::usage(format!("--cutoff: {e}")))?;
        if cutoff <= Rat::from_integer(0) {
            return Err(Failure::usage("--cutoff: must be positive"));
        }
        Ok(SeriesRequest { rs, topo, poly, t, schedule, cutoff })
    }
}

pub fn run_series(req: &SeriesRequest) -> Result<Document, Failure> {
    let opts = eval_options()?;
    let res = match req.t {
        Some(t) => moduli_series_with(&req.rs, &req.topo, &req.poly, t, req.cutoff, &opts)?,
        None => regularized_limit(&req.rs, &req.topo, &req.poly, &req.schedule, req.cutoff, &opts)?,
    };
    let sched_echo: Vec<f64> = match req.t {
        Some(t) => vec![t],
        None => req.schedule.clone(),
    };
    let mut fields = base_fields(&req.rs, &req.topo, &req.poly, &sched_echo, req.cutoff, &opts);
    fields.extend(series_fields(&res));
    Ok(Document { json: object(fields), csv: series_csv(&res) })
}

pub fn run_assembled(req: &SeriesRequest, pi1_order: u64) -> Result<Document, Failure> {
    if pi1_order == 0 {
        return Err(Failure::usage("--pi1-order: must be at least 1"));
    }
    if req.t.is_some() {
        return Err(Failure::usage("assembled invariants extrapolate; use --t-schedule, not --t"));
    }
    let opts = eval_options()?;
    let inv = assembled_invariant(
        &req.rs,
        &req.topo,
        &req.poly,
        &req.schedule,
        req.cutoff,
        pi1_order,
        &opts,
    )?;
    let mut fields = base_fields(&req.rs, &req.topo, &req.poly, &req.schedule, req.cutoff, &opts);
    fields.push(("pi1_order", json!(pi1_order)));
    fields.push(("series_value", json!(inv.series.value)));
    fields.push(("tail_bound", json!(inv.series.tail_bound)));
    fields.push((
        "schedule_values",
        Value::Array(inv.series.schedule_values.iter().map(|(t, v)| json!([t, v])).collect()),
    ));
    fields.push(("residual", json!(inv.series.extrapolated.map_or(0.0, |e| e.residual))));
    fields.push(("prefactor", json!(inv.prefactor)));
    fields.push(("vol_g", json!(inv.vol_g)));
    fields.push(("vol_t", json!(inv.vol_t)));
    fields.push(("value", json!(inv.value)));
    let csv = series_csv(&inv.series);
    Ok(Document { json: object(fields), csv })
}

pub fn run_mc_check(
    group: &str,
    genus: Option<u32>,
    case: Option<&str>,
    k: Option<u32>,
    center: &str,
    boundaries: &[String],
    t: f64,
    samples: u64,
    seed: u64,
) -> Result<Document, Failure> {
    let rs = map_usage(parse::parse_group(group))?;
    let topo =
        parse::build_topology(&rs, genus, case, k, center, boundaries).map_err(Failure::Usage)?;
    if !(t > 0.0) || !t.is_finite() {
        return Err(Failure::usage("--t: Monte Carlo checks need t > 0"));
    }
    if samples == 0 {
        return Err(Failure::usage("--samples: must be at least 1"));
    }
    let est = mc_partition_estimate(&rs, &topo, t, samples, seed)?;
    // Reference truncated exactly like the sampler's kernel, so the
    // estimator is unbiased for it.
    let kernel_cutoff = required_cutoff(t);
    let opts = eval_options()?;
    let series = moduli_series_with(
        &rs,
        &topo,
        &InvariantPolynomial::one(rs.rank()),
        t,
        Rat::from_integer(kernel_cutoff as i128),
        &opts,
    )?;
    let z = est.z_score(series.value);
    let fields = vec![
        ("group", json!(group_name(&rs))),
        ("topology", topology_value(&topo)),
        ("t", json!(t)),
        ("kernel_cutoff", json!(kernel_cutoff)),
        ("samples", json!(est.samples)),
        ("seed", json!(est.seed)),
        ("mean", json!(est.mean)),
        ("stderr", json!(est.stderr)),
        ("series_value", json!(series.value)),
        ("z_score", json!(z)),
    ];
    let csv = format!(
        "mean,stderr,samples,seed,series_value,z_score\n{},{},{},{},{},{}\n",
        est.mean, est.stderr, est.samples, est.seed, series.value, z
    );
    Ok(Document { json: object(fields), csv })
}

/// On-disk form of a 2-complex: `{one_cells, two_cells, boundary?, twist?}`.
#[derive(Deserialize)]
struct ComplexFile {
    one_cells: usize,
    two_cells: Vec<Vec<i32>>,
    #[serde(default)]
    boundary: Option<HolonomyFile>,
    #[serde(default)]
    twist: Option<TwistFile>,
}

#[derive(Deserialize)]
struct HolonomyFile {
    #[serde(default)]
    center: usize,
    #[serde(default)]
    coords: Vec<f64>,
}

#[derive(Deserialize)]
struct TwistFile {
    weight: Vec<i64>,
    word: Vec<i32>,
}

pub fn run_lattice(
    group: &str,
    file: &Path,
    t: f64,
    samples: u64,
    seed: u64,
) -> Result<Document, Failure> {
    let rs = map_usage(parse::parse_group(group))?;
    if !(t > 0.0) || !t.is_finite() {
        return Err(Failure::usage("--t: lattice integrals need t > 0"));
    }
    if samples == 0 {
        return Err(Failure::usage("--samples: must be at least 1"));
    }
    let text = fs::read_to_string(file)
        .map_err(|e| Failure::usage(format!("--file: cannot read {}: {e}", file.display())))?;
    let parsed: ComplexFile = serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("--file: {}: {e}", file.display())))?;
    let lat = LatticeComplex {
        one_cells: parsed.one_cells,
        two_cells: parsed.two_cells,
        boundary: parsed.boundary.map(|b| HolonomySpec { center: b.center, coords: b.coords }),
        twist: parsed
            .twist
            .map(|tw| LatticeTwist { weight: Weight::new(tw.weight), word: tw.word }),
    };
    let est = complex_lattice_integral(&rs, &lat, t, samples, seed)?;
    let surface = match surface_of_complex(&lat) {
        Some(topo) => topology_value(&topo),
        None => Value::Null,
    };
    let fields = vec![
        ("group", json!(group_name(&rs))),
        ("one_cells", json!(lat.one_cells)),
        ("two_cells", json!(lat.two_cells)),
        ("boundary", lat.boundary.as_ref().map_or(Value::Null, holonomy_value)),
        ("surface", surface),
        ("t", json!(t)),
        ("samples", json!(est.samples)),
        ("seed", json!(est.seed)),
        ("mean", json!(est.mean)),
        ("stderr", json!(est.stderr)),
    ];
    let csv = format!(
        "mean,stderr,samples,seed\n{},{},{},{}\n",
        est.mean, est.stderr, est.samples, est.seed
    );
    Ok(Document { json: object(fields), csv })
}

pub fn run_fs(group: &str, max_casimir: &str) -> Result<Document, Failure> {
    let rs = map_usage(parse::parse_group(group))?;
    let cutoff = parse::parse_rational(max_casimir)
        .map_err(|e| Failure::usage(format!("--max-casimir: {e}")))?;
    let opts = eval_options()?;
    let weights = rs.enumerate_dominant_weights(cutoff, opts.weight_budget)?;
    let mut rows = Vec::with_capacity(weights.len());
    let mut csv = String::from("weight,casimir,indicator\n");
    for (w, p) in &weights {
        let f = rs.frobenius_schur(w)?;
        let coords: Vec<String> = w.coords.iter().map(|c| c.to_string()).collect();
        csv.push_str(&format!("{},{},{}\n", coords.join(" "), p, f));
        rows.push(json!({
            "weight": w.coords,
            "casimir": p.to_string(),
            "indicator": f,
        }));
    }
    let fields = vec![
        ("group", json!(group_name(&rs))),
        ("max_casimir", json!(cutoff.to_string())),
        ("rows", Value::Array(rows)),
    ];
    Ok(Document { json: object(fields), csv })
}

pub fn run_group_info(group: &str) -> Result<Document, Failure> {
    let rs = map_usage(parse::parse_group(group))?;
    let l = rs.rank();
    let mut fundamentals = Vec::with_capacity(l);
    for j in 0..l {
        let mut coords = vec![0i64; l];
        coords[j] = 1;
        let w = Weight::new(coords.clone());
        fundamentals.push(json!({
            "weight": coords,
            "dimension": rs.dimension(&w)?.to_string(),
            "casimir": rs.casimir(&w)?.to_string(),
        }));
    }
    let theta = Weight::new(rs.theta().to_vec());
    let fields = vec![
        ("group", json!(group_name(&rs))),
        ("family", json!(rs.family().letter().to_string())),
        ("rank", json!(l)),
        ("dim_group", json!(rs.dim_group())),
        ("positive_roots", json!(rs.positive_roots_fw().len())),
        ("weyl_order", json!(rs.weyl().order())),
        ("center_order", json!(rs.center_order())),
        ("dual_coxeter", json!(rs.dual_coxeter())),
        ("adjoint_weight", json!(rs.theta().to_vec())),
        ("adjoint_casimir", json!(rs.casimir(&theta)?.to_string())),
        ("fundamentals", Value::Array(fundamentals)),
    ];
    let csv = format!(
        "group,rank,dim_group,positive_roots,weyl_order,center_order,dual_coxeter\n{},{},{},{},{},{},{}\n",
        group_name(&rs),
        l,
        rs.dim_group(),
        rs.positive_roots_fw().len(),
        rs.weyl().order(),
        rs.center_order(),
        rs.dual_coxeter()
    );
    Ok(Document { json: object(fields), csv })
}
