//! Command-line front end for `softrough`.
//!
//! [`run`] parses arguments, dispatches the subcommand and returns the exit
//! code: 0 success, 1 usage error, 2 validation or parse error, 3 when a
//! verification suite reports violations.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use softrough::approx::soft_rough;
use softrough::entropy::{entropy_report, Beta, EntropyKind};
use softrough::fmt::{g6, ratio, ratio_to_f64};
use softrough::gridlab::{overlap_report, render_masks, GridScene};
use softrough::measures::{measure_report, table1_csv, table1_discrepancies, table1_report, TABLE1_COLUMNS};
use softrough::oracle::{
    verify_approx_theorems, verify_entropy_claims, verify_measure_claims, Status,
    VerificationReport,
};
use softrough::{ElementSet, Partition, Ratio, SoftSet, Undefined, Universe};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_VIOLATIONS: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "softrough", version, about = "Soft rough approximations, measures and entropies")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Inputs {
    /// Approximation space JSON (`universe` plus `blocks` or `pairs`).
    #[arg(long)]
    pub space: PathBuf,
    /// Soft set JSON (`attributes` list of `name`/`value`).
    #[arg(long)]
    pub soft: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeasureWhich {
    Pawlak,
    Yao,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lower and upper approximations and boundaries.
    Approx(Inputs),
    /// Accuracy and roughness measures.
    Measure {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_enum, default_value_t = MeasureWhich::All)]
        which: MeasureWhich,
    },
    /// Entropy measures.
    Entropy {
        #[command(flatten)]
        inputs: Inputs,
        /// Base, a number above 1 or `e`.
        #[arg(long, default_value = "e", value_parser = parse_real)]
        beta: f64,
        #[arg(long, default_value = "all",
              value_parser = ["1p", "2p", "exp", "3p", "4p", "exp2", "all"])]
        which: String,
    },
    /// Recomputed Table 1 as CSV with discrepancy lines.
    Table1,
    /// Runs every claim-checking suite.
    Verify {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "1.5,e,4", value_delimiter = ',', value_parser = parse_real)]
        betas: Vec<f64>,
    },
    /// Overlap report and mask images for a pixel-grid scene.
    Grid {
        #[arg(long)]
        scene: PathBuf,
        /// Output path prefix for the images and report.
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_real(s: &str) -> Result<f64, String> {
    match s.trim() {
        "e" => Ok(std::f64::consts::E),
        t => t.parse::<f64>().map_err(|_| format!("`{s}` is not a number")),
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse { path: String, message: String },
    Core(softrough::Error),
}

impl CliError {
    pub fn tag(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "E_USAGE",
            CliError::Parse { .. } => "E_PARSE",
            CliError::Core(e) => e.tag(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            _ => EXIT_INVALID,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Parse { path, message } => write!(f, "{path}: {message}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<softrough::Error> for CliError {
    fn from(e: softrough::Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceFile {
    universe: Vec<String>,
    blocks: Option<Vec<Vec<String>>>,
    pairs: Option<Vec<(String, String)>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SoftFile {
    attributes: Vec<SoftAttribute>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SoftAttribute {
    name: String,
    value: Vec<String>,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> CliResult<T> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| {
        CliError::Core(softrough::Error::Io {
            path: shown.clone(),
            source: e,
        })
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse {
        path: shown,
        message: e.to_string(),
    })
}

/// Reads `{"universe": [...], "blocks": [[...], ...]}` or the same with
/// `"pairs": [[x, y], ...]` describing an equivalence relation.
pub fn parse_space_file(path: &Path) -> CliResult<(Universe, Partition)> {
    let file: SpaceFile = read_json(path)?;
    let u = Universe::new(file.universe)?;
    let p = match (file.blocks, file.pairs) {
        (Some(blocks), None) => Partition::from_blocks(&u, &blocks)?,
        (None, Some(pairs)) => {
            let pairs: Vec<[String; 2]> = pairs.into_iter().map(|(a, b)| [a, b]).collect();
            Partition::from_pairs(&u, &pairs)?
        }
        _ => {
            return Err(CliError::Parse {
                path: path.display().to_string(),
                message: "exactly one of `blocks` or `pairs` is required".into(),
            })
        }
    };
    Ok((u, p))
}

/// Reads `{"attributes": [{"name": ..., "value": [...]}, ...]}`.
pub fn parse_softset_file(path: &Path, u: &Universe) -> CliResult<SoftSet> {
    let file: SoftFile = read_json(path)?;
    let mut attributes = Vec::with_capacity(file.attributes.len());
    for a in file.attributes {
        attributes.push((a.name, u.set_of(&a.value)?));
    }
    Ok(SoftSet::new(u, attributes)?)
}

pub fn parse_scene_file(path: &Path) -> CliResult<GridScene> {
    read_json(path)
}

fn load(inputs: &Inputs) -> CliResult<(Partition, SoftSet)> {
    let (u, p) = parse_space_file(&inputs.space)?;
    let s = parse_softset_file(&inputs.soft, &u)?;
    Ok((p, s))
}

fn labels(u: &Universe, s: &ElementSet) -> Value {
    Value::from(s.iter().map(|i| u.label(i).to_string()).collect::<Vec<_>>())
}

fn ratio_json(r: &Ratio) -> Value {
    json!({ "ratio": format!("{}/{}", r.numer(), r.denom()), "value": ratio_to_f64(r) })
}

fn opt_ratio_json(r: &Option<Ratio>) -> Value {
    r.as_ref().map_or(Value::Null, ratio_json)
}

fn opt_ratio_text(r: &Option<Ratio>) -> String {
    r.as_ref().map_or_else(|| "undefined".to_string(), ratio)
}

fn render(format: Format, text: String, value: Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("serializable");
            s.push('\n');
            s
        }
    }
}

fn cmd_approx(inputs: &Inputs, format: Format) -> CliResult<String> {
    let (p, s) = load(inputs)?;
    let u = p.universe();
    let rough = soft_rough(&p, &s)?;
    let bd = rough.boundary();
    let mut text = String::new();
    let mut attrs = Vec::new();
    for ((name, lower), (upper, (_, boundary))) in rough
        .lower
        .attributes()
        .iter()
        .zip(rough.upper.values().zip(&bd.per_attribute))
    {
        text.push_str(&format!(
            "{name}: lower {} upper {} boundary {}\n",
            u.show(lower),
            u.show(upper),
            u.show(boundary)
        ));
        attrs.push(json!({
            "name": name,
            "lower": labels(u, lower),
            "upper": labels(u, upper),
            "boundary": labels(u, boundary),
        }));
    }
    text.push_str(&format!("total boundary {}\n", u.show(&bd.total)));
    text.push_str(&format!("exact {}\n", rough.is_exact()));
    let value = json!({
        "attributes": attrs,
        "total_boundary": labels(u, &bd.total),
        "exact": rough.is_exact(),
    });
    Ok(render(format, text, value))
}

fn cmd_measure(inputs: &Inputs, which: MeasureWhich, format: Format) -> CliResult<String> {
    let (p, s) = load(inputs)?;
    let r = measure_report(&p, &s)?;
    let sums = r.sums;
    let mut text = format!(
        "sums lower={} member={} upper={} capacity={}\n",
        sums.lower, sums.member, sums.upper, sums.capacity
    );
    let mut value = json!({
        "sums": {
            "lower": sums.lower,
            "member": sums.member,
            "upper": sums.upper,
            "capacity": sums.capacity,
        }
    });
    if which != MeasureWhich::Yao {
        text.push_str(&format!("rho_P {}\n", opt_ratio_text(&r.rho_p)));
        text.push_str(&format!("theta_P {}\n", opt_ratio_text(&r.theta_p)));
        value["rho_p"] = opt_ratio_json(&r.rho_p);
        value["theta_p"] = opt_ratio_json(&r.theta_p);
    }
    if which != MeasureWhich::Pawlak {
        text.push_str(&format!("rho_Y {}\n", ratio(&r.rho_y)));
        text.push_str(&format!("theta_Y {}\n", ratio(&r.theta_y)));
        value["rho_y"] = ratio_json(&r.rho_y);
        value["theta_y"] = ratio_json(&r.theta_y);
    }
    Ok(render(format, text, value))
}

fn cmd_entropy(inputs: &Inputs, beta: f64, which: &str, format: Format) -> CliResult<String> {
    let beta = Beta::new(beta)?;
    let (p, s) = load(inputs)?;
    let r = entropy_report(&p, &s, beta)?;
    let kinds: Vec<EntropyKind> = match EntropyKind::from_name(which) {
        Some(k) => {
            if r.get(k).is_none() {
                return Err(softrough::Error::UndefinedMeasure(Undefined::WholeComplement).into());
            }
            vec![k]
        }
        None => EntropyKind::ALL.to_vec(),
    };
    let opt = |v: Option<f64>| v.map_or_else(|| "undefined".to_string(), g6);
    let mut text = format!("beta {}\n", g6(beta.value()));
    text.push_str(&format!("theta_P {}\n", g6(r.theta_p)));
    text.push_str(&format!("theta_P_complement {}\n", opt(r.theta_p_complement)));
    text.push_str(&format!("theta_Y {}\n", g6(r.theta_y)));
    let mut value = json!({
        "beta": beta.value(),
        "theta_p": r.theta_p,
        "theta_p_complement": r.theta_p_complement,
        "theta_y": r.theta_y,
    });
    for k in kinds {
        text.push_str(&format!("ent_{} {}\n", k.name(), opt(r.get(k))));
        value[format!("ent_{}", k.name())] = json!(r.get(k));
    }
    Ok(render(format, text, value))
}

fn cmd_table1(format: Format) -> String {
    let rows = table1_report();
    let value = json!({
        "columns": TABLE1_COLUMNS,
        "rows": rows.iter().map(|r| json!({
            "relation": r.relation,
            "cells": r.cells.iter().map(ratio_json).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "discrepancies": table1_discrepancies(&rows).iter().map(|d| json!({
            "relation": rows[d.row].relation,
            "column": TABLE1_COLUMNS[d.column],
            "computed": ratio_json(&d.computed),
            "published": d.reference,
        })).collect::<Vec<_>>(),
    });
    render(format, table1_csv(&rows), value)
}

fn report_json(suite: &str, r: &VerificationReport) -> Value {
    json!({
        "suite": suite,
        "claims": r.claims.iter().map(|c| json!({
            "id": c.id,
            "status": c.status().to_string(),
            "checked": c.checked,
            "skipped": c.skipped,
            "violations": c.violations,
            "examples": c.examples,
        })).collect::<Vec<_>>(),
    })
}

fn cmd_verify(
    n: usize,
    samples: usize,
    seed: u64,
    betas: &[f64],
    format: Format,
) -> CliResult<(String, bool)> {
    let suites = [
        ("approx", verify_approx_theorems(n, samples, seed)?),
        ("measures", verify_measure_claims(n, samples, seed)?),
        ("entropy", verify_entropy_claims(n, samples, betas, seed)?),
    ];
    let mut text = String::new();
    let mut failed = 0;
    for (name, r) in &suites {
        text.push_str(&format!("== {name}\n{r}"));
        failed += r.claims.iter().filter(|c| c.status() == Status::Fail).count();
    }
    text.push_str(&format!("failed claims {failed}\n"));
    let value = json!({
        "suites": suites.iter().map(|(n, r)| report_json(n, r)).collect::<Vec<_>>(),
        "failed_claims": failed,
    });
    Ok((render(format, text, value), failed > 0))
}

fn cmd_grid(scene: &Path, out: &Path, format: Format) -> CliResult<String> {
    let scene = parse_scene_file(scene)?;
    let r = overlap_report(&scene)?;
    let files = render_masks(&r, out)?;
    let mut text = r.summary();
    for f in &files {
        text.push_str(&format!("wrote {}\n", f.display()));
    }
    let value = json!({
        "regions": r.attributes.iter().chain(std::iter::once(&r.union)).map(|m| json!({
            "name": m.name,
            "pixels": m.region.len(),
            "lower": m.lower.len(),
            "upper": m.upper.len(),
            "boundary": m.boundary.len(),
        })).collect::<Vec<_>>(),
        "soft_boundary": r.soft_boundary.len(),
        "overlap_cells": r.overlap_cells.len(),
        "soft_detects_overlap": r.soft_detects_overlap,
        "boundary_mismatch": r.boundary_mismatch,
        "files": files.iter().map(|f| f.display().to_string()).collect::<Vec<_>>(),
    });
    Ok(render(format, text, value))
}

/// Runs a parsed command, returning its output and exit code.
pub fn execute(cli: &Cli) -> CliResult<(String, i32)> {
    let f = cli.format;
    let out = match &cli.command {
        Command::Approx(inputs) => cmd_approx(inputs, f)?,
        Command::Measure { inputs, which } => cmd_measure(inputs, *which, f)?,
        Command::Entropy {
            inputs,
            beta,
            which,
        } => cmd_entropy(inputs, *beta, which, f)?,
        Command::Table1 => cmd_table1(f),
        Command::Verify {
            n,
            samples,
            seed,
            betas,
        } => {
            let (out, failed) = cmd_verify(*n, *samples, *seed, betas, f)?;
            let code = if failed { EXIT_VIOLATIONS } else { EXIT_OK };
            return Ok((out, code));
        }
        Command::Grid { scene, out } => cmd_grid(scene, out, f)?,
    };
    Ok((out, EXIT_OK))
}

/// Full entry point over explicit streams.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return EXIT_OK;
            }
            let err = CliError::Usage(first_line(&e.to_string()));
            let _ = writeln!(stderr, "error[{}]: {}", err.tag(), err);
            return err.exit_code();
        }
    };
    match execute(&cli) {
        Ok((out, code)) => {
            let _ = stdout.write_all(out.as_bytes());
            code
        }
        Err(err) => {
            let msg = err.to_string().replace('\n', " ");
            let _ = writeln!(stderr, "error[{}]: {}", err.tag(), msg);
            err.exit_code()
        }
    }
}

fn first_line(s: &str) -> String {
    let line = s.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
    line.trim_start_matches("error: ").trim().to_string()
}
