//! Command layer behind the `hardy` binary: input parsing, the domain file
//! format, table computation and report rendering.
//!
//! Every command renders to a string so the same code serves the binary,
//! the integration tests and the examples. Floats are rounded to 12
//! significant digits before rendering, which makes output byte-stable and
//! lets JSON re-parse to an equal value.

use std::f64::consts::PI;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::angles::gamma_star;
use crate::certify::{certify, CertificateReport, DomainSpec, Verdict};
use crate::error::{HardyError, Result};
use crate::ode::rk::Tolerance;
use crate::ode::shooting::shoot_c_with;
use crate::rayleigh::{build_grid, estimate_with_vector, EigenOptions, GridProblem};
use crate::sector::{beta_critical, gamma_ratio_rhs, sector_constant, tans1_residual, Method};

pub const SIG_DIGITS: usize = 12;

/// Parses "1.5pi", "pi", "-0.25π", "2*pi" or plain radians.
pub fn parse_angle(s: &str) -> Result<f64> {
    let t = s.trim().to_ascii_lowercase().replace('π', "pi");
    let bad = || HardyError::Parse(format!("cannot read angle '{s}'"));
    let v = if let Some(head) = t.strip_suffix("pi") {
        let head = head.trim().trim_end_matches('*').trim();
        let k = match head {
            "" | "+" => 1.0,
            "-" => -1.0,
            _ => head.parse::<f64>().map_err(|_| bad())?,
        };
        k * PI
    } else {
        t.parse::<f64>().map_err(|_| bad())?
    };
    if !v.is_finite() {
        return Err(bad());
    }
    Ok(v)
}

/// Evenly spaced angles, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sweep {
    pub start: f64,
    pub end: f64,
    pub count: usize,
}

impl Sweep {
    pub fn single(x: f64) -> Self {
        Sweep { start: x, end: x, count: 1 }
    }

    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let step = (self.end - self.start) / (self.count - 1) as f64;
        (0..self.count).map(|k| if k + 1 == self.count { self.end } else { self.start + step * k as f64 }).collect()
    }
}

/// "start:end:count", e.g. "pi:2pi:101".
pub fn parse_sweep(s: &str) -> Result<Sweep> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(HardyError::Parse(format!("sweep '{s}' must look like start:end:count")));
    }
    let start = parse_angle(parts[0])?;
    let end = parse_angle(parts[1])?;
    let count: usize =
        parts[2].trim().parse().map_err(|_| HardyError::Parse(format!("bad sweep count '{}'", parts[2])))?;
    if count == 0 || (count == 1 && start != end) {
        return Err(HardyError::Parse(format!("sweep '{s}' needs at least 2 points")));
    }
    if end < start {
        return Err(HardyError::Parse(format!("sweep '{s}' runs backwards")));
    }
    Ok(Sweep { start, end, count })
}

/// On-disk domain description. Angles are in units of π; `r_samples` holds
/// [θ/π, r] pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum DomainDoc {
    Sector {
        beta: f64,
    },
    SectorCap {
        beta: f64,
        gamma_plus: f64,
        gamma_minus: f64,
        #[serde(default = "yes")]
        bounded: bool,
    },
    Polygon {
        vertices: Vec<[f64; 2]>,
    },
    Ebg {
        beta: f64,
        gamma: f64,
    },
    Dbeta {
        beta: f64,
        r_samples: Vec<[f64; 2]>,
    },
    /// [0, length] × [0, height] with distance to the bottom side; only
    /// meaningful for `validate`.
    Strip {
        length: f64,
        height: f64,
    },
}

fn yes() -> bool {
    true
}

impl DomainDoc {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| HardyError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn type_name(&self) -> &'static str {
        match self {
            DomainDoc::Sector { .. } => "sector",
            DomainDoc::SectorCap { .. } => "sector_cap",
            DomainDoc::Polygon { .. } => "polygon",
            DomainDoc::Ebg { .. } => "ebg",
            DomainDoc::Dbeta { .. } => "dbeta",
            DomainDoc::Strip { .. } => "strip",
        }
    }

    /// The radian-valued description used by the certifier and grid builder.
    pub fn to_spec(&self) -> Result<DomainSpec> {
        Ok(match self {
            DomainDoc::Sector { beta } => DomainSpec::Sector { beta: beta * PI },
            DomainDoc::SectorCap { beta, gamma_plus, gamma_minus, bounded } => DomainSpec::SectorCapConvex {
                beta: beta * PI,
                gamma_plus: gamma_plus * PI,
                gamma_minus: gamma_minus * PI,
                bounded: *bounded,
            },
            DomainDoc::Polygon { vertices } => DomainSpec::OneReflexPolygon { vertices: vertices.clone() },
            DomainDoc::Ebg { beta, gamma } => DomainSpec::Ebg { beta: beta * PI, gamma: gamma * PI },
            DomainDoc::Dbeta { beta, r_samples } => {
                DomainSpec::Dbeta { beta: beta * PI, r_samples: r_samples.iter().map(|s| (s[0] * PI, s[1])).collect() }
            }
            DomainDoc::Strip { .. } => {
                return Err(HardyError::Domain("a strip has no certificate; use it with validate".into()))
            }
        })
    }

    pub fn from_spec(spec: &DomainSpec) -> Self {
        match spec {
            DomainSpec::Sector { beta } => DomainDoc::Sector { beta: beta / PI },
            DomainSpec::SectorCapConvex { beta, gamma_plus, gamma_minus, bounded } => DomainDoc::SectorCap {
                beta: beta / PI,
                gamma_plus: gamma_plus / PI,
                gamma_minus: gamma_minus / PI,
                bounded: *bounded,
            },
            DomainSpec::OneReflexPolygon { vertices } => DomainDoc::Polygon { vertices: vertices.clone() },
            DomainSpec::Ebg { beta, gamma } => DomainDoc::Ebg { beta: beta / PI, gamma: gamma / PI },
            DomainSpec::Dbeta { beta, r_samples } => {
                DomainDoc::Dbeta { beta: beta / PI, r_samples: r_samples.iter().map(|&(t, r)| [t / PI, r]).collect() }
            }
        }
    }

    pub fn grid(&self, n: usize) -> Result<GridProblem> {
        match self {
            DomainDoc::Strip { length, height } => GridProblem::strip(*length, *height, n),
            _ => build_grid(&self.to_spec()?, n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Cbeta { betas: Sweep, shooting: bool },
    Betacr,
    GammaStar { betas: Sweep },
    Certify { input: PathBuf },
    Validate { input: PathBuf, n: usize },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Cbeta { .. } => "cbeta",
            Command::Betacr => "betacr",
            Command::GammaStar { .. } => "gamma-star",
            Command::Certify { .. } => "certify",
            Command::Validate { .. } => "validate",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Overrides {
    /// Relative tolerance of the shooting integrator.
    pub rtol: Option<f64>,
    pub cg_tol: Option<f64>,
    pub eigen_tol: Option<f64>,
    pub max_iterations: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub overrides: Overrides,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig { command, format: Format::Json, output: None, overrides: Overrides::default() }
    }

    fn shooting_tolerance(&self) -> Result<Tolerance> {
        let mut tol = Tolerance::default();
        if let Some(r) = self.overrides.rtol {
            if !(r > 0.0 && r < 1e-2) {
                return Err(HardyError::Domain(format!("rtol must lie in (0, 0.01), got {r}")));
            }
            tol.rtol = r;
        }
        Ok(tol)
    }

    fn eigen_options(&self) -> Result<EigenOptions> {
        let mut o = EigenOptions::default();
        let ov = &self.overrides;
        if let Some(t) = ov.cg_tol {
            o.cg_tol = t;
        }
        if let Some(t) = ov.eigen_tol {
            o.tol = t;
        }
        if let Some(m) = ov.max_iterations {
            o.max_iterations = m;
        }
        if !(o.cg_tol > 0.0 && o.tol > 0.0 && o.max_iterations > 0) {
            return Err(HardyError::Domain("tolerances and iteration caps must be positive".into()));
        }
        Ok(o)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CbetaRow {
    pub beta: f64,
    pub beta_pi: f64,
    pub c: f64,
    pub alpha: f64,
    pub residual: f64,
    pub method: Method,
    /// Independent shooting estimate; absent at and below β_cr.
    pub shooting_c: Option<f64>,
    pub shooting_diff: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CbetaTable {
    pub command: String,
    pub rows: Vec<CbetaRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BetaCrReport {
    pub command: String,
    pub beta_cr: f64,
    pub beta_cr_pi: f64,
    /// Residual of the c-equation at (β_cr, 1/4).
    pub residual_at_quarter: f64,
    /// 4(Γ(3/4)/Γ(1/4))², which equals tan((β_cr−π)/4).
    pub gamma_rhs: f64,
    pub tan_lhs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GammaStarRow {
    pub beta: f64,
    pub beta_pi: f64,
    pub gamma_star: f64,
    pub gamma_star_pi: f64,
    pub gamma_star_star: Option<f64>,
    pub gamma_star_star_pi: Option<f64>,
    pub argmax_theta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GammaStarTable {
    pub command: String,
    pub rows: Vec<GammaStarRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidateReport {
    pub command: String,
    pub domain: String,
    pub n: usize,
    pub lambda: f64,
    pub iterations: usize,
    pub h: f64,
    pub nodes: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertifyDocument {
    pub command: String,
    pub domain: DomainDoc,
    #[serde(flatten)]
    pub report: CertificateReport,
}

pub fn cmd_cbeta(betas: &Sweep, shooting: bool, tol: Tolerance) -> Result<CbetaTable> {
    let bcr = beta_critical();
    let rows: Vec<Result<CbetaRow>> = betas
        .values()
        .par_iter()
        .map(|&b| {
            let sol = sector_constant(b)?;
            let shot = if shooting && sol.beta > bcr { Some(shoot_c_with(sol.beta, tol)?.c_estimate) } else { None };
            Ok(CbetaRow {
                beta: sol.beta,
                beta_pi: sol.beta / PI,
                c: sol.c,
                alpha: sol.alpha,
                residual: sol.residual,
                method: sol.method,
                shooting_c: shot,
                shooting_diff: shot.map(|s| (s - sol.c).abs()),
            })
        })
        .collect();
    Ok(CbetaTable { command: "cbeta".into(), rows: rows.into_iter().collect::<Result<_>>()? })
}

pub fn cmd_betacr() -> Result<BetaCrReport> {
    let b = beta_critical();
    Ok(BetaCrReport {
        command: "betacr".into(),
        beta_cr: b,
        beta_cr_pi: b / PI,
        residual_at_quarter: tans1_residual(b, 0.25)?,
        gamma_rhs: 2.0 * gamma_ratio_rhs(0.0)?,
        tan_lhs: ((b - PI) / 4.0).tan(),
    })
}

pub fn cmd_gamma_star(betas: &Sweep) -> Result<GammaStarTable> {
    let rows: Vec<Result<GammaStarRow>> = betas
        .values()
        .par_iter()
        .map(|&b| {
            let ca = gamma_star(b)?;
            Ok(GammaStarRow {
                beta: ca.beta,
                beta_pi: ca.beta / PI,
                gamma_star: ca.gamma_star,
                gamma_star_pi: ca.gamma_star / PI,
                gamma_star_star: ca.gamma_star_star,
                gamma_star_star_pi: ca.gamma_star_star.map(|g| g / PI),
                argmax_theta: ca.argmax_theta,
            })
        })
        .collect();
    Ok(GammaStarTable { command: "gamma-star".into(), rows: rows.into_iter().collect::<Result<_>>()? })
}

pub fn cmd_certify(doc: &DomainDoc) -> Result<CertifyDocument> {
    let report = certify(&doc.to_spec()?)?;
    Ok(CertifyDocument { command: "certify".into(), domain: doc.clone(), report })
}

pub fn cmd_validate(doc: &DomainDoc, n: usize, opts: &EigenOptions) -> Result<ValidateReport> {
    let g = doc.grid(n)?;
    let (e, _) = estimate_with_vector(&g, opts)?;
    Ok(ValidateReport {
        command: "validate".into(),
        domain: doc.type_name().into(),
        n,
        lambda: e.lambda,
        iterations: e.iterations,
        h: e.h,
        nodes: e.nodes,
    })
}

/// Rounds to `SIG_DIGITS` significant digits.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", SIG_DIGITS - 1, x).parse().unwrap_or(x)
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) if !n.is_i64() && !n.is_u64() => {
            if let Some(x) = n.as_f64() {
                if let Some(r) = serde_json::Number::from_f64(round_sig(x)) {
                    *n = r;
                }
            }
        }
        Value::Array(a) => a.iter_mut().for_each(round_value),
        Value::Object(o) => o.values_mut().for_each(round_value),
        _ => {}
    }
}

/// Pretty JSON with every float rounded to 12 significant digits.
pub fn to_json<T: Serialize>(doc: &T) -> Result<String> {
    let mut v = serde_json::to_value(doc)?;
    round_value(&mut v);
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}

fn cell(x: f64) -> String {
    let r = round_sig(x);
    let mut s = format!("{r:?}");
    if s.ends_with(".0") {
        s.truncate(s.len() - 2);
    }
    s
}

fn opt_cell(x: Option<f64>) -> String {
    x.map(cell).unwrap_or_default()
}

fn csv_string(header: &[&str], rows: Vec<Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    let bytes = w.into_inner().map_err(|e| HardyError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| HardyError::Io(e.to_string()))
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::ClosedForm => "closed_form",
        Method::Shooting => "shooting",
    }
}

pub fn cbeta_csv(t: &CbetaTable) -> Result<String> {
    let header = ["beta", "beta_pi", "c", "alpha", "residual", "method", "shooting_c", "shooting_diff"];
    let rows = t
        .rows
        .iter()
        .map(|r| {
            vec![
                cell(r.beta),
                cell(r.beta_pi),
                cell(r.c),
                cell(r.alpha),
                cell(r.residual),
                method_name(r.method).to_string(),
                opt_cell(r.shooting_c),
                opt_cell(r.shooting_diff),
            ]
        })
        .collect();
    csv_string(&header, rows)
}

pub fn gamma_star_csv(t: &GammaStarTable) -> Result<String> {
    let header =
        ["beta", "beta_pi", "gamma_star", "gamma_star_pi", "gamma_star_star", "gamma_star_star_pi", "argmax_theta"];
    let rows = t
        .rows
        .iter()
        .map(|r| {
            vec![
                cell(r.beta),
                cell(r.beta_pi),
                cell(r.gamma_star),
                cell(r.gamma_star_pi),
                opt_cell(r.gamma_star_star),
                opt_cell(r.gamma_star_star_pi),
                cell(r.argmax_theta),
            ]
        })
        .collect();
    csv_string(&header, rows)
}

fn verdict_cells(v: &Verdict) -> (String, String) {
    match v {
        Verdict::Certified { c } => ("certified".into(), cell(*c)),
        Verdict::ConditionFailed { name, .. } => (format!("condition_failed:{name}"), String::new()),
        Verdict::Inconclusive => ("inconclusive".into(), String::new()),
    }
}

/// One row per check, with the verdict repeated on each.
pub fn certify_csv(d: &CertifyDocument) -> Result<String> {
    let (verdict, c) = verdict_cells(&d.report.verdict);
    let rows = d
        .report
        .checks
        .iter()
        .map(|k| vec![verdict.clone(), c.clone(), k.name.clone(), k.satisfied.to_string(), cell(k.margin)])
        .collect();
    csv_string(&["verdict", "c", "check", "satisfied", "margin"], rows)
}

pub fn validate_csv(r: &ValidateReport) -> Result<String> {
    let row = vec![
        r.domain.clone(),
        r.n.to_string(),
        cell(r.lambda),
        r.iterations.to_string(),
        cell(r.h),
        r.nodes.to_string(),
    ];
    csv_string(&["domain", "n", "lambda", "iterations", "h", "nodes"], vec![row])
}

pub fn betacr_csv(r: &BetaCrReport) -> Result<String> {
    let row =
        vec![cell(r.beta_cr), cell(r.beta_cr_pi), cell(r.residual_at_quarter), cell(r.gamma_rhs), cell(r.tan_lhs)];
    csv_string(&["beta_cr", "beta_cr_pi", "residual_at_quarter", "gamma_rhs", "tan_lhs"], vec![row])
}

fn check_sweep(s: &Sweep, lo: f64, what: &str) -> Result<()> {
    let hi = 2.0 * PI;
    let slack = 1e-12;
    if s.start < lo - slack || s.end > hi + slack {
        return Err(HardyError::Domain(format!(
            "{what} needs β within [{:.6}π, 2π], got [{:.6}π, {:.6}π]",
            lo / PI,
            s.start / PI,
            s.end / PI
        )));
    }
    Ok(())
}

/// Runs a command and returns the rendered document.
pub fn run(cfg: &RunConfig) -> Result<String> {
    let fmt = cfg.format;
    match &cfg.command {
        Command::Cbeta { betas, shooting } => {
            check_sweep(betas, PI, "cbeta")?;
            let t = cmd_cbeta(betas, *shooting, cfg.shooting_tolerance()?)?;
            if fmt == Format::Csv {
                cbeta_csv(&t)
            } else {
                to_json(&t)
            }
        }
        Command::Betacr => {
            let r = cmd_betacr()?;
            if fmt == Format::Csv {
                betacr_csv(&r)
            } else {
                to_json(&r)
            }
        }
        Command::GammaStar { betas } => {
            check_sweep(betas, PI, "gamma-star")?;
            let t = cmd_gamma_star(betas)?;
            if fmt == Format::Csv {
                gamma_star_csv(&t)
            } else {
                to_json(&t)
            }
        }
        Command::Certify { input } => {
            let d = cmd_certify(&DomainDoc::load(input)?)?;
            if fmt == Format::Csv {
                certify_csv(&d)
            } else {
                to_json(&d)
            }
        }
        Command::Validate { input, n } => {
            let r = cmd_validate(&DomainDoc::load(input)?, *n, &cfg.eigen_options()?)?;
            if fmt == Format::Csv {
                validate_csv(&r)
            } else {
                to_json(&r)
            }
        }
    }
}

/// Runs a command and writes the document to the configured path or stdout.
pub fn execute(cfg: &RunConfig) -> Result<()> {
    let text = run(cfg)?;
    match &cfg.output {
        Some(p) => fs::write(p, text).map_err(|e| HardyError::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
