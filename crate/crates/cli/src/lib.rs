//! Pipeline orchestration and report rendering behind the `toric-chow` binary.
//!
//! [`run`] executes the stages a command needs and returns a [`Report`];
//! [`render`] turns it into human-readable text or a single JSON document.
//! Exact values are always emitted as strings. Indices of polytope vertices,
//! dual vertices and cones are 1-based in every output.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use toric_chow::algebra::{parse_rational, Rational, RationalFunction};
use toric_chow::geometry::{
    build_fan_with, builtin, builtin_names, load_polytope, parameter_labels, polar_dual,
    smoothness_check, DualPolytope, Fan, FanoPolytope, GeometryError, PolytopeDocument,
};
use toric_chow::hilbert::{derivative_test, display_exponential, laurent_at_xi, HilbertError};
use toric_chow::localization::{verdict, Localizer, LocalizationError, ObstructionResult};
use toric_chow::Execution;

pub use toric_chow::localization::DEFAULT_SEED;

/// Environment variable that overrides [`DEFAULT_SEED`].
pub const SEED_ENV: &str = "TORIC_CHOW_SEED";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Builtin(String),
    File(PathBuf),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Validate,
    Dual,
    Fan,
    Obstructions,
    Futaki,
    HilbertDerivative,
    Laurent,
    Report,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Dual => "dual",
            Command::Fan => "fan",
            Command::Obstructions => "obstructions",
            Command::Futaki => "futaki",
            Command::HilbertDerivative => "hilbert-derivative",
            Command::Laurent => "laurent",
            Command::Report => "report",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Human,
    Structured,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub input: Input,
    pub command: Command,
    /// Directions for the Hilbert derivative; `(1, 2, .., m)` when empty.
    pub directions: Vec<Vec<i64>>,
    pub xi: Option<Vec<Rational>>,
    /// Number of Laurent coefficients; `m + 2` when absent.
    pub window: Option<usize>,
    pub seed: u64,
    pub format: Format,
    pub timing: bool,
    pub execution: Execution,
}

impl RunConfig {
    pub fn new(input: Input, command: Command) -> Self {
        RunConfig {
            input,
            command,
            directions: Vec::new(),
            xi: None,
            window: None,
            seed: DEFAULT_SEED,
            format: Format::Human,
            timing: false,
            execution: Execution::Parallel,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    InvalidInput,
    NotSmoothOrReflexive,
    Consistency,
    Other,
}

impl ErrorKind {
    pub fn exit_code(self) -> u8 {
        match self {
            ErrorKind::Other => 1,
            ErrorKind::InvalidInput => 2,
            ErrorKind::NotSmoothOrReflexive => 3,
            ErrorKind::Consistency => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    fn new(kind: ErrorKind, message: impl Into<String>) -> Self {
        CliError {
            kind,
            message: message.into(),
        }
    }

    pub fn invalid(message: impl Into<String>) -> Self {
        Self::new(ErrorKind::InvalidInput, message)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        let kind = match e {
            GeometryError::OriginNotInterior
            | GeometryError::NotSimplicial { .. }
            | GeometryError::NotReflexive { .. }
            | GeometryError::NotSmooth { .. } => ErrorKind::NotSmoothOrReflexive,
            GeometryError::Overflow => ErrorKind::Other,
            _ => ErrorKind::InvalidInput,
        };
        Self::new(kind, format!("toric-geometry: {e}"))
    }
}

impl From<LocalizationError> for CliError {
    fn from(e: LocalizationError) -> Self {
        let kind = match e {
            LocalizationError::NotSmooth { .. } => ErrorKind::NotSmoothOrReflexive,
            LocalizationError::SampleLength { .. } => ErrorKind::InvalidInput,
            LocalizationError::NotLinear(_) => ErrorKind::Consistency,
            _ => ErrorKind::Other,
        };
        Self::new(kind, format!("equivariant-localization: {e}"))
    }
}

impl From<HilbertError> for CliError {
    fn from(e: HilbertError) -> Self {
        let kind = match e {
            HilbertError::DirectionLength { .. } | HilbertError::XiOnWall | HilbertError::EmptyWindow => {
                ErrorKind::InvalidInput
            }
            HilbertError::BrionCancellation { .. } => ErrorKind::Consistency,
            _ => ErrorKind::Other,
        };
        Self::new(kind, format!("hilbert-series: {e}"))
    }
}

/// Reads a JSON polytope document (`{"dim": m, "vertices": [[..], ..]}`).
pub fn parse_polytope_file(path: &Path) -> Result<FanoPolytope, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::invalid(format!("input: cannot read {}: {e}", path.display())))?;
    let doc: PolytopeDocument = serde_json::from_str(&text)
        .map_err(|e| CliError::invalid(format!("input: {}: {e}", path.display())))?;
    load_polytope(&doc).map_err(|e| {
        let mut err = CliError::from(e);
        err.message = format!("{} (in {})", err.message, path.display());
        err
    })
}

/// Parses a comma-separated integer vector such as `1,2,-3`.
pub fn parse_direction(text: &str) -> Result<Vec<i64>, String> {
    text.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| format!("`{}` is not an integer", x.trim()))
        })
        .collect()
}

/// Parses a comma-separated rational vector such as `1/2,3,-1`.
pub fn parse_rationals(text: &str) -> Result<Vec<Rational>, String> {
    text.split(',')
        .map(|x| parse_rational(x).ok_or_else(|| format!("`{}` is not a rational", x.trim())))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub input: String,
    pub polytope: PolytopeSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fan: Option<FanSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual: Option<DualSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstructions: Option<Vec<ObstructionRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<HilbertSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub laurent: Option<LaurentSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Serialize)]
pub struct PolytopeSummary {
    pub name: Option<String>,
    pub dim: usize,
    pub vertex_count: usize,
    pub vertices: Vec<Vec<i64>>,
    pub smooth: bool,
    pub reflexive: bool,
    /// Cones whose generators do not form a lattice basis, with `|det|`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub singular_cones: Vec<(Vec<usize>, String)>,
    pub parameters: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FanSummary {
    pub cone_count: usize,
    pub cones: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DualSummary {
    pub vertex_count: usize,
    pub vertices: Vec<Vec<i64>>,
    pub cones: Vec<Vec<usize>>,
    pub neighbors: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ObstructionRow {
    pub p: usize,
    pub prefactor: String,
    /// Coefficients of `prefactor * F_Td^p` in the torus parameters.
    pub coefficients: Vec<String>,
    pub is_zero: bool,
    pub form: String,
    pub samples: Vec<Vec<String>>,
    pub verification: Vec<Verification>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub sample: Vec<String>,
    pub residual: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct HilbertSummary {
    pub directions: Vec<DirectionRow>,
    pub verdict: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct DirectionRow {
    pub requested: Vec<i64>,
    /// The perturbed direction, when the requested one was inadmissible.
    pub used: Option<Vec<i64>>,
    /// Integer coefficients in `s`, lowest degree first, with `s = e^{-(m+1)t}`.
    pub numerator: Vec<String>,
    pub denominator: Vec<String>,
    pub in_s: String,
    pub in_t: String,
    pub is_zero: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LaurentSummary {
    pub b: Vec<String>,
    pub lowest_order: i64,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub seed: u64,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<BTreeMap<String, f64>>,
}

/// Result of a successful run: the report and the exit status to use.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub status: u8,
    pub report: Report,
}

struct Stages {
    enabled: bool,
    start: Instant,
    times: BTreeMap<String, f64>,
}

impl Stages {
    fn time<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let t = Instant::now();
        let out = f();
        if self.enabled {
            self.times
                .insert(name.to_string(), t.elapsed().as_secs_f64() * 1e3);
        }
        out
    }

    fn finish(mut self) -> Option<BTreeMap<String, f64>> {
        self.enabled.then(|| {
            self.times
                .insert("total".to_string(), self.start.elapsed().as_secs_f64() * 1e3);
            self.times
        })
    }
}

fn load(input: &Input) -> Result<(FanoPolytope, String), CliError> {
    match input {
        Input::Builtin(name) => builtin(name)
            .map(|q| (q, format!("builtin:{name}")))
            .ok_or_else(|| {
                CliError::invalid(format!(
                    "input: unknown builtin `{name}` (available: {})",
                    builtin_names().join(", ")
                ))
            }),
        Input::File(path) => Ok((parse_polytope_file(path)?, path.display().to_string())),
    }
}

fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|i| i + 1).collect()
}

/// Numerator and denominator scaled by a common factor to coprime integers.
fn integer_coefficients(f: &RationalFunction) -> (Vec<String>, Vec<String>) {
    let polys = [f.numerator(), f.denominator()];
    let lcm = polys
        .iter()
        .flat_map(|p| p.coeffs())
        .fold(num_bigint::BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled: Vec<Vec<num_bigint::BigInt>> = polys
        .iter()
        .map(|p| {
            p.coeffs()
                .iter()
                .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
                .collect()
        })
        .collect();
    let gcd = scaled
        .iter()
        .flatten()
        .fold(num_bigint::BigInt::zero(), |acc, c| acc.gcd(c));
    let render = |cs: &Vec<num_bigint::BigInt>| -> Vec<String> {
        if cs.is_empty() {
            return vec!["0".to_string()];
        }
        cs.iter().map(|c| (c / &gcd).to_string()).collect()
    };
    (render(&scaled[0]), render(&scaled[1]))
}

fn obstruction_row(r: &ObstructionResult, labels: &[String], dim: usize) -> ObstructionRow {
    ObstructionRow {
        p: r.p,
        prefactor: r.prefactor.to_string(),
        coefficients: strings(&r.scaled_value.dense(dim)),
        is_zero: r.is_zero(),
        form: r.scaled_value.display_with(labels),
        samples: r.interpolation_points.iter().map(|s| strings(s)).collect(),
        verification: r
            .verification_points
            .iter()
            .map(|(s, res)| Verification {
                sample: strings(s),
                residual: res.to_string(),
            })
            .collect(),
    }
}

fn direction_row(requested: Vec<i64>, used: Option<Vec<i64>>, f: &RationalFunction, m: usize) -> DirectionRow {
    let (numerator, denominator) = integer_coefficients(f);
    DirectionRow {
        requested,
        used,
        numerator,
        denominator,
        in_s: f.display_in("s"),
        in_t: display_exponential(f, m),
        is_zero: f.is_zero(),
    }
}

/// Executes the stages `config.command` needs.
pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    let mut stages = Stages {
        enabled: config.timing,
        start: Instant::now(),
        times: BTreeMap::new(),
    };
    let exec = config.execution;
    let (q, input) = stages.time("load", || load(&config.input))?;
    let m = q.dim();
    let fan: Fan = stages.time("fan", || build_fan_with(&q, exec))?;
    let smoothness = smoothness_check(&fan);
    let dual: Result<DualPolytope, GeometryError> = stages.time("dual", || polar_dual(&fan));
    let reflexive = !matches!(dual, Err(GeometryError::NotReflexive { .. }));
    let labels = parameter_labels(m);
    let mut report = Report {
        command: config.command.name().to_string(),
        input,
        polytope: PolytopeSummary {
            name: q.name().map(str::to_string),
            dim: m,
            vertex_count: q.vertices().len(),
            vertices: q.vertices().to_vec(),
            smooth: smoothness.smooth,
            reflexive,
            singular_cones: smoothness
                .offending
                .iter()
                .map(|(i, det)| (one_based(fan.cones()[*i].generators()), det.abs().to_string()))
                .collect(),
            parameters: labels.clone(),
        },
        fan: None,
        dual: None,
        obstructions: None,
        hilbert: None,
        laurent: None,
        verdict: None,
        provenance: Provenance {
            seed: config.seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
            timing_ms: None,
        },
    };
    if config.command == Command::Validate {
        let status = if smoothness.smooth && reflexive {
            dual?;
            0
        } else {
            ErrorKind::NotSmoothOrReflexive.exit_code()
        };
        report.provenance.timing_ms = stages.finish();
        return Ok(Outcome { status, report });
    }
    if !smoothness.smooth {
        return Err(GeometryError::NotSmooth {
            count: smoothness.offending.len(),
        }
        .into());
    }
    let dual = dual?;
    let wants = |cs: &[Command]| cs.contains(&config.command) || config.command == Command::Report;

    if wants(&[Command::Fan]) {
        report.fan = Some(FanSummary {
            cone_count: fan.cones().len(),
            cones: fan.cones().iter().map(|c| one_based(c.generators())).collect(),
        });
    }
    if wants(&[Command::Dual]) {
        let count = dual.vertices().len();
        report.dual = Some(DualSummary {
            vertex_count: count,
            vertices: dual.vertices().to_vec(),
            cones: (0..count)
                .map(|j| one_based(dual.cone_of_vertex(j).generators()))
                .collect(),
            neighbors: (0..count).map(|j| one_based(dual.neighbors(j))).collect(),
        });
    }
    if wants(&[Command::Obstructions, Command::Futaki]) {
        let localizer = Localizer::new(&fan, exec)?;
        let results: Vec<ObstructionResult> = if config.command == Command::Futaki {
            vec![stages.time("obstructions", || localizer.f_td(1, config.seed))?]
        } else {
            stages
                .time("obstructions", || localizer.obstruction_report(config.seed))?
                .results
        };
        if config.command != Command::Futaki {
            report.verdict = Some(verdict(&results));
        }
        report.obstructions = Some(results.iter().map(|r| obstruction_row(r, &labels, m)).collect());
    }
    if wants(&[Command::HilbertDerivative]) {
        let directions = if config.directions.is_empty() {
            vec![(1..=m as i64).collect()]
        } else {
            config.directions.clone()
        };
        if let Some(bad) = directions.iter().find(|n| n.len() != m) {
            return Err(CliError::invalid(format!(
                "--n: direction {bad:?} has {} entries, expected {m}",
                bad.len()
            )));
        }
        let test = stages.time("hilbert", || derivative_test(&dual, &directions, exec))?;
        let rows = test
            .outcomes
            .into_iter()
            .map(|o| direction_row(o.requested, o.used, &o.result.value, m))
            .collect();
        if config.command == Command::HilbertDerivative {
            report.verdict = Some(test.verdict.clone());
        }
        report.hilbert = Some(HilbertSummary {
            directions: rows,
            verdict: test.verdict,
        });
    }
    if config.command == Command::Laurent {
        let b = config
            .xi
            .clone()
            .ok_or_else(|| CliError::invalid("--xi is required for laurent"))?;
        if b.len() != m {
            return Err(CliError::invalid(format!(
                "--xi has {} entries, expected {m}",
                b.len()
            )));
        }
        let window = config.window.unwrap_or(m + 2);
        let coeffs = stages.time("laurent", || laurent_at_xi(&dual, &b, window))?;
        report.laurent = Some(LaurentSummary {
            b: strings(&coeffs.xi),
            lowest_order: coeffs.lowest_order,
            values: strings(&coeffs.values),
        });
    }
    report.provenance.timing_ms = stages.finish();
    Ok(Outcome { status: 0, report })
}

/// The report as text in the requested format, ending with a newline.
pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Human => human(report),
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn human(r: &Report) -> String {
    let mut out = Vec::<String>::new();
    let p = &r.polytope;
    out.push(format!(
        "{}: dimension {}, {} vertices, smooth: {}, reflexive: {}",
        p.name.as_deref().unwrap_or(&r.input),
        p.dim,
        p.vertex_count,
        if p.smooth { "yes" } else { "no" },
        if p.reflexive { "yes" } else { "no" },
    ));
    for (cone, det) in &p.singular_cones {
        out.push(format!("  singular cone {{{}}}: |det| = {det}", join(cone, ",")));
    }
    if let Some(fan) = &r.fan {
        out.push(format!("fan: {} maximal cones", fan.cone_count));
        for (i, c) in fan.cones.iter().enumerate() {
            out.push(format!("  cone {:>3}: {{{}}}", i + 1, vlist(c)));
        }
    }
    if let Some(d) = &r.dual {
        out.push(format!("dual polytope: {} vertices", d.vertex_count));
        for j in 0..d.vertex_count {
            out.push(format!(
                "  w{:<3} ({})  cone {{{}}}  neighbours {}",
                j + 1,
                join(&d.vertices[j], ","),
                vlist(&d.cones[j]),
                d.neighbors[j]
                    .iter()
                    .map(|k| format!("w{k}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
        }
    }
    if let Some(rows) = &r.obstructions {
        if r.command == "futaki" {
            let row = &rows[0];
            out.push(format!("futaki invariant: {}·F_Td^1 = {}", row.prefactor, row.form));
        } else {
            out.push("obstructions (k_p·F_Td^p):".to_string());
            for row in rows {
                out.push(format!("  p = {}: {}·F_Td^{} = {}", row.p, row.prefactor, row.p, row.form));
            }
        }
    }
    if let Some(h) = &r.hilbert {
        out.push("hilbert derivative at x = 1 (s = e^{-(m+1)t}):".to_string());
        for d in &h.directions {
            let label = match &d.used {
                Some(used) => format!("n = ({}) perturbed to ({})", join(&d.requested, ","), join(used, ",")),
                None => format!("n = ({})", join(&d.requested, ",")),
            };
            out.push(format!("  {label}:"));
            out.push(format!("    {}", d.in_s));
            out.push(format!("    = {}", d.in_t));
        }
        out.push(format!("  {}", h.verdict));
    }
    if let Some(l) = &r.laurent {
        out.push(format!("laurent coefficients at b = ({}):", join(&l.b, ", ")));
        for (k, v) in l.values.iter().enumerate() {
            out.push(format!("  C_{} = {v}", l.lowest_order + k as i64));
        }
    }
    if let Some(v) = &r.verdict {
        out.push(format!("verdict: {v}"));
    }
    if let Some(t) = &r.provenance.timing_ms {
        let parts: Vec<String> = t.iter().map(|(k, v)| format!("{k} {v:.1} ms")).collect();
        out.push(format!("timing: {}", parts.join(", ")));
    }
    out.push(String::new());
    out.join("\n")
}

fn vlist(indices: &[usize]) -> String {
    indices
        .iter()
        .map(|i| format!("v{i}"))
        .collect::<Vec<_>>()
        .join(",")
}
