//! Command-line front end: build Wulff shapes from support-function specs,
//! compute duals and spherical metrics, run the check suite, and render
//! primal/dual overlays. Exit codes: 0 success (all checks pass or are not
//! applicable), 1 check failure, 2 usage or input error.

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

use wulff::checks::{self, CheckConfig};
use wulff::error::GeomError;
use wulff::metrics::{is_constant_diameter, is_constant_width, thickness};
use wulff::planar::PlanarConvexBody;
use wulff::render::{render_csv, render_svg};
use wulff::report::{fmt_f64, reports_json, CheckStatus};
use wulff::shape_spec::{parse_shape_spec, ShapeSpec};
use wulff::sphere::SphericalPoint;
use wulff::wulff::{default_self_dual_tol, is_self_dual};

#[derive(Parser)]
#[command(
    name = "wulff",
    version,
    about = "Wulff shapes, spherical duality, and width metrics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the Wulff polygon for a shape spec and emit its vertices as JSON.
    Build {
        #[arg(long)]
        spec: PathBuf,
        /// Number of support directions (overrides the spec).
        #[arg(long)]
        k: Option<usize>,
        /// Output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the dual Wulff shape and the self-duality verdict.
    Dual {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        /// Hausdorff tolerance for the verdict (defaults by shape kind).
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Width, thickness, and diameter reports for the spherical body.
    Metrics {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the check suite (full preset suite when no spec is given).
    Check {
        /// Optional shape spec: runs the shape-level checks on it.
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Optional JSON run configuration.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long)]
        k: Option<usize>,
        /// Global tolerance override for every check.
        #[arg(long)]
        tol: Option<f64>,
        /// Substring filter on check names.
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render the primal and dual boundaries as SVG (and optionally CSV).
    Render {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn error_code(e: &GeomError) -> &'static str {
    match e {
        GeomError::EquatorialPoint => "equatorial_point",
        GeomError::PoleInput => "pole_input",
        GeomError::NotHemispherical => "not_hemispherical",
        GeomError::Degenerate(_) => "degenerate",
        GeomError::NotOnBoundary => "not_on_boundary",
        GeomError::NotSupporting => "not_supporting",
        GeomError::NotInterior => "not_interior",
        GeomError::Unbounded => "unbounded",
        GeomError::EmptyInterior => "empty_interior",
        GeomError::InvalidParameter { .. } => "invalid_parameter",
        GeomError::NotPositive { .. } => "not_positive",
    }
}

enum CliError {
    Input(String, String),
    Io(String),
}

impl From<GeomError> for CliError {
    fn from(e: GeomError) -> Self {
        CliError::Input(error_code(&e).to_string(), e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

fn write_out(path: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn load_spec(path: &PathBuf, k: Option<usize>) -> Result<ShapeSpec, CliError> {
    let text = std::fs::read_to_string(path)?;
    let mut spec = parse_shape_spec(&text)?;
    if let Some(k) = k {
        if k < 8 {
            return Err(CliError::Input(
                "invalid_parameter".into(),
                "k must be at least 8".into(),
            ));
        }
        spec.k = k;
    }
    Ok(spec)
}

fn polygon_json(body: &PlanarConvexBody) -> String {
    let vs: Vec<String> = body
        .vertices()
        .iter()
        .map(|p| format!("[{},{}]", fmt_f64(p.u), fmt_f64(p.v)))
        .collect();
    format!("{{\"vertices\":[{}]}}", vs.join(","))
}

fn point_json(p: SphericalPoint) -> String {
    format!(
        "{{\"x\":{},\"y\":{},\"z\":{}}}",
        fmt_f64(p.x),
        fmt_f64(p.y),
        fmt_f64(p.z)
    )
}

fn require_planar(spec: &ShapeSpec) -> Result<PlanarConvexBody, CliError> {
    spec.planar_body()?.ok_or_else(|| {
        CliError::Input(
            "unbounded".into(),
            "this preset has no bounded planar projection; use triangle_sqrt2 for the rotated copy"
                .into(),
        )
    })
}

fn cmd_build(spec: &ShapeSpec, out: &Option<PathBuf>) -> Result<(), CliError> {
    let body = require_planar(spec)?;
    write_out(out, &format!("{}\n", polygon_json(&body)))
}

fn cmd_dual(spec: &ShapeSpec, tol: Option<f64>, out: &Option<PathBuf>) -> Result<(), CliError> {
    let body = require_planar(spec)?;
    let tol = tol.unwrap_or_else(|| default_self_dual_tol(spec.k, spec.is_sampled()));
    let pair = is_self_dual(&body, tol)?;
    let json = format!(
        "{{\"primal\":{},\"dual\":{},\"hausdorff\":{},\"self_dual\":{}}}\n",
        polygon_json(&pair.primal),
        polygon_json(&pair.dual),
        fmt_f64(pair.hausdorff_distance),
        pair.self_dual
    );
    write_out(out, &json)
}

fn cmd_metrics(spec: &ShapeSpec, tol: Option<f64>, out: &Option<PathBuf>) -> Result<(), CliError> {
    let body = spec.spherical_body()?;
    let tol = tol.unwrap_or_else(|| {
        if spec.is_sampled() {
            default_self_dual_tol(spec.k, true)
        } else {
            1e-6
        }
    });
    let wr = is_constant_width(&body, tol)?;
    let t = thickness(&body)?;
    let dr = is_constant_diameter(&body, tol)?;
    let json = format!(
        concat!(
            "{{\"width\":{{\"min_width\":{},\"max_width\":{},\"argmin_center\":{},",
            "\"argmax_center\":{},\"constant\":{},\"delta\":{}}},",
            "\"thickness\":{},",
            "\"diameter\":{{\"diameter\":{},\"witness_p\":{},\"witness_q\":{},\"constant\":{}}}}}\n"
        ),
        fmt_f64(wr.min_width),
        fmt_f64(wr.max_width),
        point_json(wr.argmin_center),
        point_json(wr.argmax_center),
        wr.constant,
        fmt_f64(wr.delta),
        fmt_f64(t),
        fmt_f64(dr.diameter),
        point_json(dr.witness_p),
        point_json(dr.witness_q),
        dr.constant
    );
    write_out(out, &json)
}

fn parse_run_config(path: &PathBuf) -> Result<CheckConfig, CliError> {
    let text = std::fs::read_to_string(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Input("invalid_parameter".into(), format!("config: {e}")))?;
    let obj = value.as_object().ok_or_else(|| {
        CliError::Input(
            "invalid_parameter".into(),
            "config must be a JSON object".into(),
        )
    })?;
    let mut config = CheckConfig::default();
    for (key, v) in obj {
        match key.as_str() {
            "seed" => config.seed = v.as_u64().unwrap_or(0),
            "trials" => config.trials = v.as_u64().unwrap_or(config.trials),
            "k" => config.k = v.as_u64().unwrap_or(config.k as u64) as usize,
            "threads" => config.threads = v.as_u64().unwrap_or(1) as usize,
            "only" => config.only = v.as_str().map(String::from),
            "tol" => config.tol_override = v.as_f64(),
            "tolerances" => {
                let map = v.as_object().ok_or_else(|| {
                    CliError::Input(
                        "invalid_parameter".into(),
                        "config.tolerances must be an object".into(),
                    )
                })?;
                let mut entries: Vec<(String, f64)> = map
                    .iter()
                    .filter_map(|(name, tol)| tol.as_f64().map(|t| (name.clone(), t)))
                    .collect();
                entries.sort_by(|a, b| a.0.cmp(&b.0));
                for (_, t) in &entries {
                    if !t.is_finite() || *t < 0.0 {
                        return Err(CliError::Input(
                            "invalid_parameter".into(),
                            "config.tolerances values must be non-negative".into(),
                        ));
                    }
                }
                config.tol_map = entries;
            }
            other => {
                return Err(CliError::Input(
                    "invalid_parameter".into(),
                    format!("config: unknown key {other:?}"),
                ))
            }
        }
    }
    Ok(config)
}

/// Shape-level checks for a single spec: the self-duality equivalences plus
/// the width-duality, strict-convexity, arc-interior, and blow-up checks,
/// with the blow-up expectation taken from the measured self-duality.
fn check_single_shape(
    spec: &ShapeSpec,
    config: &CheckConfig,
) -> Result<Vec<wulff::report::CheckReport>, CliError> {
    let mut reports = Vec::new();
    let default_tol = if spec.is_sampled() {
        default_self_dual_tol(spec.k, true)
    } else {
        1e-6
    };
    let body = spec.spherical_body()?;
    let mut expect_self_dual = None;
    if let Some(w) = spec.planar_body()? {
        let tol = config.tol("selfdual_equivalences[spec]", default_tol);
        let r =
            checks::check_selfdual_equivalences(&w, tol)?.with_name("selfdual_equivalences[spec]");
        expect_self_dual = r.residuals.first().map(|(_, v)| *v == 1.0);
        reports.push(r);
    }
    let tol = config.tol("width_duality[spec]", default_tol);
    reports.push(checks::check_width_duality(&body, tol)?.with_name("width_duality[spec]"));
    let tol = config.tol("strict_convexity[spec]", default_tol);
    reports.push(checks::check_strict_convexity(&body, tol)?.with_name("strict_convexity[spec]"));
    let tol = config.tol("arc_interior[spec]", default_tol);
    reports.push(checks::check_arc_interior(&body, 1000, tol)?.with_name("arc_interior[spec]"));
    if let Some(expect) = expect_self_dual {
        let tol = config.tol("blowup_property[spec]", default_tol.max(1e-6));
        reports.push(
            checks::check_blowup_property(&body, 100, tol, config.seed, expect)?
                .with_name("blowup_property[spec]"),
        );
    }
    Ok(reports)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Build { spec, k, out } => {
            cmd_build(&load_spec(&spec, k)?, &out)?;
            Ok(true)
        }
        Command::Dual { spec, k, tol, out } => {
            cmd_dual(&load_spec(&spec, k)?, tol, &out)?;
            Ok(true)
        }
        Command::Metrics { spec, k, tol, out } => {
            cmd_metrics(&load_spec(&spec, k)?, tol, &out)?;
            Ok(true)
        }
        Command::Check {
            spec,
            config,
            seed,
            trials,
            k,
            tol,
            only,
            threads,
            out,
        } => {
            let mut cfg = match config {
                Some(path) => parse_run_config(&path)?,
                None => CheckConfig::default(),
            };
            if let Some(s) = seed {
                cfg.seed = s;
            }
            if let Some(t) = trials {
                cfg.trials = t;
            }
            if let Some(k) = k {
                cfg.k = k;
            }
            if let Some(t) = tol {
                cfg.tol_override = Some(t);
            }
            if only.is_some() {
                cfg.only = only;
            }
            if let Some(t) = threads {
                cfg.threads = t;
            }
            let reports = match spec {
                Some(path) => check_single_shape(&load_spec(&path, k)?, &cfg)?,
                None => checks::run_all(&cfg)?,
            };
            for r in &reports {
                eprintln!("{} {}", r.status.as_str().to_uppercase(), r.name);
            }
            write_out(&out, &reports_json(&reports))?;
            Ok(reports.iter().all(|r| r.status != CheckStatus::Fail))
        }
        Command::Render { spec, k, svg, csv } => {
            let spec = load_spec(&spec, k)?;
            let body = require_planar(&spec)?;
            let pair = is_self_dual(&body, default_self_dual_tol(spec.k, spec.is_sampled()))?;
            let svg_text = render_svg(&pair.primal, &pair.dual);
            match &svg {
                Some(p) => std::fs::write(p, &svg_text)?,
                None => print!("{svg_text}"),
            }
            if let Some(p) = &csv {
                std::fs::write(p, render_csv(&pair.primal, &pair.dual))?;
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Input(code, message)) => {
            eprintln!(
                "{{\"error\":{{\"code\":\"{}\",\"message\":\"{}\"}}}}",
                wulff::report::escape_json(&code),
                wulff::report::escape_json(&message)
            );
            ExitCode::from(2)
        }
        Err(CliError::Io(message)) => {
            eprintln!(
                "{{\"error\":{{\"code\":\"io\",\"message\":\"{}\"}}}}",
                wulff::report::escape_json(&message)
            );
            ExitCode::from(2)
        }
    }
}
