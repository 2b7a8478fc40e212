//! Command-line front end for the verification suites.
//!
//! Runs the named suite (or all of them), prints one line per check in text
//! mode or a single JSON document in JSON mode, and exits nonzero when any
//! gating check fails. All numeric work happens in the library; this file only
//! parses options, renders reports and writes optional field dumps.

use clap::Parser;
use diracsv::dirac2d;
use diracsv::dirac4d::{self, Frame4};
use diracsv::fields::Grid;
use diracsv::lorentz::mdot;
use diracsv::particle::{newtonian_rhs, rk4_step, EMField};
use diracsv::report::{format_sci, summary_counts, CheckReport};
use diracsv::suites::{run_suite, RunConfig, SUITE_NAMES};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "verify", version, about = "Numerical verification suites for the diracsv library")]
struct Cli {
    /// Suite to run: clifford, lorentz, dirac2d, dirac4d, particle, or all
    #[arg(long)]
    suite: Option<String>,

    /// Points per axis for two-dimensional grids (four-dimensional grids
    /// clamp this to 8..=16)
    #[arg(long)]
    grid: Option<usize>,

    /// Grid spacing; together with --grid it fixes the periodic box length
    #[arg(long)]
    spacing: Option<f64>,

    /// Seed for every pseudorandom draw
    #[arg(long)]
    seed: Option<u64>,

    /// Tolerance override `name=value` or `suite/name=value`; repeatable
    #[arg(long = "tol", value_name = "NAME=VALUE")]
    tol: Vec<String>,

    /// Output format: text or json
    #[arg(long)]
    format: Option<String>,

    /// Write sampled reference fields as JSON files into this directory
    #[arg(long, value_name = "DIR")]
    dump_fields: Option<PathBuf>,

    /// Configuration file with `key = value` lines; flags take precedence
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
}

/// Options read from a `--config` file. Every field mirrors a flag.
#[derive(Default)]
struct FileConfig {
    suite: Option<String>,
    grid: Option<usize>,
    spacing: Option<f64>,
    seed: Option<u64>,
    format: Option<String>,
    dump_fields: Option<PathBuf>,
    tols: BTreeMap<String, f64>,
}

fn parse_config_file(text: &str) -> Result<FileConfig, String> {
    let mut out = FileConfig::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = idx + 1;
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("config line {}: expected `key = value`", lineno))?;
        let (key, value) = (key.trim(), value.trim());
        let bad = |what: &str| format!("config line {}: {} `{}`", lineno, what, value);
        match key {
            "suite" => out.suite = Some(value.to_string()),
            "grid" => out.grid = Some(value.parse().map_err(|_| bad("bad grid"))?),
            "spacing" => out.spacing = Some(value.parse().map_err(|_| bad("bad spacing"))?),
            "seed" => out.seed = Some(value.parse().map_err(|_| bad("bad seed"))?),
            "format" => out.format = Some(value.to_string()),
            "dump_fields" => out.dump_fields = Some(PathBuf::from(value)),
            _ => match key.strip_prefix("tol.") {
                Some(name) if !name.is_empty() => {
                    let v: f64 = value.parse().map_err(|_| bad("bad tolerance"))?;
                    out.tols.insert(name.to_string(), v);
                }
                _ => return Err(format!("config line {}: unknown key `{}`", lineno, key)),
            },
        }
    }
    Ok(out)
}

fn parse_tol_flag(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("--tol expects NAME=VALUE, got `{}`", s))?;
    let v: f64 = value
        .trim()
        .parse()
        .map_err(|_| format!("--tol value `{}` is not a number", value.trim()))?;
    Ok((name.trim().to_string(), v))
}

/// Fully resolved invocation: run configuration plus presentation choices.
struct Resolved {
    rc: RunConfig,
    suites: Vec<&'static str>,
    format: String,
    dump_dir: Option<PathBuf>,
}

fn resolve(cli: &Cli) -> Result<Resolved, String> {
    let file = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read config file {}: {}", path.display(), e))?;
            parse_config_file(&text)?
        }
        None => FileConfig::default(),
    };

    let suite = cli.suite.clone().or(file.suite).unwrap_or_else(|| "all".to_string());
    let grid = cli.grid.or(file.grid).unwrap_or(16);
    let spacing = cli.spacing.or(file.spacing).unwrap_or(0.25);
    let seed = cli.seed.or(file.seed).unwrap_or(7);
    let format = cli.format.clone().or(file.format).unwrap_or_else(|| "text".to_string());
    let dump_dir = cli.dump_fields.clone().or(file.dump_fields);

    if !(4..=256).contains(&grid) {
        return Err(format!("--grid must be between 4 and 256, got {}", grid));
    }
    if !(spacing.is_finite() && spacing > 0.0) {
        return Err(format!("--spacing must be a positive number, got {}", spacing));
    }
    if format != "text" && format != "json" {
        return Err(format!("--format must be `text` or `json`, got `{}`", format));
    }
    let suites: Vec<&'static str> = if suite == "all" {
        SUITE_NAMES.to_vec()
    } else {
        match SUITE_NAMES.iter().find(|s| **s == suite) {
            Some(s) => vec![s],
            None => {
                return Err(format!(
                    "unknown suite `{}`; expected one of {} or all",
                    suite,
                    SUITE_NAMES.join(", ")
                ))
            }
        }
    };

    let mut tol_overrides = file.tols;
    for s in &cli.tol {
        let (name, value) = parse_tol_flag(s)?;
        tol_overrides.insert(name, value);
    }

    Ok(Resolved {
        rc: RunConfig { grid, spacing, seed, tol_overrides },
        suites,
        format,
        dump_dir,
    })
}

fn check_value(r: &CheckReport) -> Value {
    // Residual and tolerance are rendered as fixed-precision strings so the
    // JSON output is byte-stable; wall time is intentionally left out.
    json!({
        "anchor": r.anchor,
        "informational": r.informational,
        "name": r.name,
        "notes": r.notes,
        "passed": r.passed,
        "residual": format_sci(r.residual),
        "suite": r.suite,
        "tol": if r.informational { Value::Null } else { Value::from(format_sci(r.tol)) },
    })
}

fn render_json(resolved: &Resolved, reports: &[CheckReport]) -> String {
    let (total, passed, failed, informational) = summary_counts(reports);
    let doc = json!({
        "checks": reports.iter().map(check_value).collect::<Vec<_>>(),
        "run_config": {
            "format": resolved.format,
            "grid": resolved.rc.grid,
            "seed": resolved.rc.seed,
            "spacing": resolved.rc.spacing,
            "suites": resolved.suites,
            "tol_overrides": resolved.rc.tol_overrides,
        },
        "summary": {
            "failed": failed,
            "informational": informational,
            "passed": passed,
            "total": total,
        },
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("report serialization");
    text.push('\n');
    text
}

fn render_text(resolved: &Resolved, reports: &[CheckReport]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "run config: suites={} grid={} spacing={} seed={}\n",
        resolved.suites.join(","),
        resolved.rc.grid,
        resolved.rc.spacing,
        resolved.rc.seed
    ));
    for (name, value) in &resolved.rc.tol_overrides {
        out.push_str(&format!("tolerance override: {} = {}\n", name, value));
    }
    for r in reports {
        out.push_str(&r.text_line());
        out.push('\n');
    }
    let (total, passed, failed, informational) = summary_counts(reports);
    out.push_str(&format!(
        "summary: {} checks, {} passed, {} failed, {} informational\n",
        total, passed, failed, informational
    ));
    out
}

fn dump_fields(dir: &Path, rc: &RunConfig) -> Result<(), String> {
    std::fs::create_dir_all(dir)
        .map_err(|e| format!("cannot create dump directory {}: {}", dir.display(), e))?;
    let write = |name: &str, value: &Value| -> Result<(), String> {
        let path = dir.join(name);
        let mut text = serde_json::to_string_pretty(value).expect("dump serialization");
        text.push('\n');
        std::fs::write(&path, text).map_err(|e| format!("cannot write {}: {}", path.display(), e))
    };

    // Two-dimensional reference configuration sampled over one period.
    let cfg2 = dirac2d::reference_config2();
    let n2 = rc.grid.min(16);
    let grid2 = Grid::<2>::new(n2, 4.0 / n2 as f64);
    let mut points = Vec::new();
    for flat in 0..grid2.len() {
        let x = grid2.point(grid2.coords(flat));
        let psi = cfg2.psi_at(&x);
        let jet = cfg2.jet_at(&x);
        points.push(json!({
            "j": jet.j,
            "psi_im": [psi[0].im, psi[1].im],
            "psi_re": [psi[0].re, psi[1].re],
            "rho": jet.rho,
            "x": x,
        }));
    }
    write(
        "dirac2d_reference.json",
        &json!({"box_length": 4.0, "field": "dirac2d_reference", "grid": n2, "points": points}),
    )?;

    // Four-dimensional reference configuration on a coarse grid: current,
    // spin density and the split of the scalar density.
    let cfg4 = dirac4d::reference_config4();
    let frame = Frame4::rest(cfg4.z);
    let n4 = 4usize;
    let grid4 = Grid::<4>::new(n4, 4.0 / n4 as f64);
    let mut points = Vec::new();
    for flat in 0..grid4.len() {
        let x = grid4.point(grid4.coords(flat));
        let ev = cfg4.eval_at(&x);
        let (lcl, lq1, lq2) = dirac4d::sv_terms(cfg4.m, &ev.jet, &frame);
        let ld = dirac4d::lagrangian_spinor4(cfg4.m, &ev.psi, &ev.dpsi);
        points.push(json!({
            "density_spinor": ld,
            "density_split": [lcl, lq1, lq2],
            "j": ev.jet.j,
            "rho": mdot(&ev.jet.j, &ev.jet.j).max(0.0).sqrt(),
            "s": ev.jet.s,
            "x": x,
        }));
    }
    write(
        "dirac4d_reference.json",
        &json!({"box_length": 4.0, "field": "dirac4d_reference", "grid": n4, "points": points}),
    )?;

    // Reference charged-particle trajectory, sampled every ten steps.
    let field = EMField::uniform([0.3, 0.0, 0.0], [0.0, 0.0, 0.7]);
    let (charge, mass, h, steps) = (1.0, 1.3, 0.01, 200usize);
    let rhs = |y: &[f64; 7]| newtonian_rhs(&field, charge, mass, y);
    let mut y = [0.0, 0.0, 0.0, 0.0, 0.2, -0.1, 0.05];
    let mut samples = Vec::new();
    for step in 0..=steps {
        if step % 10 == 0 {
            samples.push(json!({
                "t": y[0],
                "v": [y[4], y[5], y[6]],
                "x": [y[1], y[2], y[3]],
            }));
        }
        if step < steps {
            y = rk4_step(&rhs, &y, h);
        }
    }
    write(
        "particle_trajectory.json",
        &json!({
            "b": [0.0, 0.0, 0.7],
            "charge": charge,
            "e": [0.3, 0.0, 0.0],
            "field": "particle_trajectory",
            "mass": mass,
            "samples": samples,
            "step": h,
        }),
    )
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let resolved = resolve(cli)?;
    let mut reports = Vec::new();
    for name in &resolved.suites {
        reports.extend(run_suite(name, &resolved.rc).expect("resolved names are known"));
    }

    if let Some(dir) = &resolved.dump_dir {
        dump_fields(dir, &resolved.rc)?;
        eprintln!("field dumps written to {}", dir.display());
    }

    let rendered = match resolved.format.as_str() {
        "json" => render_json(&resolved, &reports),
        _ => render_text(&resolved, &reports),
    };
    print!("{}", rendered);

    let all_passed = reports.iter().all(|r| r.passed || r.informational);
    Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
