//! `flatmod` — character-series evaluation and lattice cross-checks from the
//! command line.
//!
//! Every command prints one JSON document (or CSV with `--format csv`) on
//! stdout.  Exit codes: `0` success, `1` an engine refusal (the structured
//! error document still goes to stdout), `2` malformed request.

mod output;
mod parse;
mod run;

use clap::{Args, Parser, Subcommand};

use run::Failure;

#[derive(Parser)]
#[command(
    name = "flatmod",
    about = "Heat-kernel character series and moduli volumes for flat bundles over surfaces",
    version,
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GroupArg {
    /// Compact simply connected group, as family letter plus rank (e.g. A1, C3, G2).
    #[arg(long)]
    group: String,
}

#[derive(Args)]
struct TopoArgs {
    /// Genus of an orientable base surface.
    #[arg(long)]
    genus: Option<u32>,

    /// Non-orientable case: `i` (odd, 2k+1 crosscaps) or `ii` (even, 2k).
    #[arg(long)]
    case: Option<String>,

    /// Crosscap parameter k for `--case`.
    #[arg(long)]
    k: Option<u32>,

    /// Central twist: `e` for the identity, an index into the center, or `-I`
    /// when the center has order two.
    #[arg(long, default_value = "e")]
    center: String,

    /// Boundary component (repeatable, orientable surfaces only), as
    /// `COORDS[@CENTER]`: comma-separated pairing coordinates, optionally
    /// anchored at a central element, e.g. `1.5707963`, `@-I`, `0.9@e`.
    #[arg(long)]
    boundary: Vec<String>,
}

#[derive(Args)]
struct EvalArgs {
    /// Evaluate at this fixed temperature instead of extrapolating to t = 0.
    #[arg(long)]
    t: Option<f64>,

    /// Comma-separated decreasing temperatures for the t → 0 fit
    /// (default: 0.4,0.2,0.1,0.05,0.025,0.0125).
    #[arg(long)]
    t_schedule: Option<String>,

    /// Casimir cutoff for the weight sum (integer or a/b).
    #[arg(long, default_value = "1000")]
    cutoff: String,
}

#[derive(Args)]
struct OutArgs {
    /// Output format.
    #[arg(long, default_value = "json", value_parser = ["json", "csv"])]
    format: String,

    /// Cap on worker threads; never changes the computed values.
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Regularized volume of the moduli space, with its assembly factors.
    Volume {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        topo: TopoArgs,
        #[command(flatten)]
        eval: EvalArgs,
        /// Order of the fundamental-group quotient dividing the volume.
        #[arg(long, default_value_t = 1)]
        pi1_order: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Integrate a polynomial class over the moduli space (t → 0 limit).
    Intersect {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        topo: TopoArgs,
        /// Invariant polynomial in x1..xl, e.g. `1/16 * x1^2 + 2*x1`.
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        eval: EvalArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Raw character series: fixed-t value or regularized t → 0 limit.
    Series {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        topo: TopoArgs,
        /// Invariant polynomial weighting each term (default: the constant 1).
        #[arg(long, default_value = "1")]
        poly: String,
        #[command(flatten)]
        eval: EvalArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Monte Carlo partition estimate against the truncated series.
    McCheck {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        topo: TopoArgs,
        /// Temperature of the heat-kernel weight (must be positive).
        #[arg(long, default_value_t = 1.0)]
        t: f64,
        /// Number of Monte Carlo samples.
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        /// RNG seed; equal seeds reproduce bytes exactly.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Monte Carlo integral over a 2-complex described by a JSON file.
    Lattice {
        #[command(flatten)]
        group: GroupArg,
        /// JSON file with `one_cells`, `two_cells`, optional `boundary` and `twist`.
        #[arg(long)]
        file: std::path::PathBuf,
        /// Temperature of the heat-kernel weight (must be positive).
        #[arg(long, default_value_t = 1.0)]
        t: f64,
        /// Number of Monte Carlo samples.
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        /// RNG seed; equal seeds reproduce bytes exactly.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Frobenius–Schur indicators for all weights up to a Casimir cutoff.
    Fs {
        /// Compact simply connected group, as family letter plus rank.
        group: String,
        /// Largest Casimir eigenvalue to include (integer or a/b).
        #[arg(long, default_value = "2")]
        max_casimir: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Structural data for one group: dimensions, Casimirs, Weyl and center orders.
    GroupInfo {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        out: OutArgs,
    },
}

impl Command {
    fn out_args(&self) -> &OutArgs {
        match self {
            Command::Volume { out, .. }
            | Command::Intersect { out, .. }
            | Command::Series { out, .. }
            | Command::McCheck { out, .. }
            | Command::Lattice { out, .. }
            | Command::Fs { out, .. }
            | Command::GroupInfo { out, .. } => out,
        }
    }
}

fn dispatch(cmd: &Command) -> Result<output::Document, Failure> {
    match cmd {
        Command::Volume { group, topo, eval, pi1_order, .. } => {
            let req = series_request(group, topo, "1", eval)?;
            run::run_assembled(&req, *pi1_order)
        }
        Command::Intersect { group, topo, poly, eval, .. } => {
            let req = series_request(group, topo, poly, eval)?;
            if req.t.is_some() {
                return Err(Failure::usage(
                    "intersection numbers are t → 0 limits; use --t-schedule, not --t",
                ));
            }
            run::run_series(&req)
        }
        Command::Series { group, topo, poly, eval, .. } => {
            let req = series_request(group, topo, poly, eval)?;
            run::run_series(&req)
        }
        Command::McCheck { group, topo, t, samples, seed, .. } => run::run_mc_check(
            &group.group,
            topo.genus,
            topo.case.as_deref(),
            topo.k,
            &topo.center,
            &topo.boundary,
            *t,
            *samples,
            *seed,
        ),
        Command::Lattice { group, file, t, samples, seed, .. } => {
            run::run_lattice(&group.group, file, *t, *samples, *seed)
        }
        Command::Fs { group, max_casimir, .. } => run::run_fs(group, max_casimir),
        Command::GroupInfo { group, .. } => run::run_group_info(&group.group),
    }
}

fn series_request(
    group: &GroupArg,
    topo: &TopoArgs,
    poly: &str,
    eval: &EvalArgs,
) -> Result<run::SeriesRequest, Failure> {
    run::SeriesRequest::build(
        &group.group,
        topo.genus,
        topo.case.as_deref(),
        topo.k,
        &topo.center,
        &topo.boundary,
        poly,
        eval.t,
        eval.t_schedule.as_deref(),
        &eval.cutoff,
    )
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let out = cli.command.out_args();
    if let Some(w) = out.workers {
        // A second build_global in one process is already-initialized; the
        // pool is a throughput knob only, so that is not an error.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w.max(1)).build_global();
    }
    let csv = out.format == "csv";
    match dispatch(&cli.command) {
        Ok(doc) => {
            print!("{}", doc.render(csv));
            std::process::exit(0);
        }
        Err(failure) => {
            let (code, doc, line) = failure.render();
            if let Some(doc) = doc {
                print!("{doc}");
            }
            eprintln!("{line}");
            std::process::exit(code);
        }
    }
}
