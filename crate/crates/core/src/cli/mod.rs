//! Job runner behind the `niep` binary.
//!
//! A [`JobSpec`] names a command, its inputs (file paths or inline JSON) and
//! parameters. [`run`] executes it, verifies every constructed matrix with
//! the eigenvalue engine and returns an [`Outcome`] carrying the exit status
//! and the rendered output.
//!
//! Exit statuses: 0 success, 1 I/O or parse error, 2 a named condition
//! failed, 3 verification failed.

mod emit;

use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

pub use emit::{emit, Format};

use crate::blockcomp::{
    compose_even, compose_odd, compose_odd_sym, extract_even, extract_odd, odd_sym_factors,
    realize_pair_suleimanova, Border, CompositionParams, OddTail, Pairing,
};
use crate::circulant::{
    circulant_from_spectrum, circulant_spectrum, guo_pair_compose, guo_perturb, CirculantRow,
    GuoParams, GuoVariant, ROW_NONNEG_TOL,
};
use crate::eig::{
    default_verification_tol, eigenvalues, structured_check_auto, verify, VerificationReport,
};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::permutative::realize_suleimanova;
use crate::scalar::{re, Sign};
use crate::spectra::{check_necessary, is_suleimanova, Spectrum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_GATE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

/// Environment variable overriding the default verification tolerance.
pub const TOL_ENV: &str = "NIEP_TOL";

const DEFAULT_K: u32 = 4;
const DEFAULT_M: u32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Check,
    RealizeSuleimanova,
    RealizePair,
    ComposeEven,
    ComposeOdd,
    ComposeOddSym,
    Circulant,
    Guo,
    GuoPair,
    Verify,
    Extract,
    Batch,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::RealizeSuleimanova => "realize-suleimanova",
            Command::RealizePair => "realize-pair",
            Command::ComposeEven => "compose-even",
            Command::ComposeOdd => "compose-odd",
            Command::ComposeOddSym => "compose-odd-sym",
            Command::Circulant => "circulant",
            Command::Guo => "guo",
            Command::GuoPair => "guo-pair",
            Command::Verify => "verify",
            Command::Extract => "extract",
            Command::Batch => "batch",
        }
    }

    /// Names of the inputs the command expects, in order.
    pub fn input_names(self) -> &'static [&'static str] {
        match self {
            Command::Check | Command::RealizeSuleimanova | Command::Guo => &["spectrum"],
            Command::RealizePair => &["sigma_s", "sigma_c"],
            Command::ComposeEven | Command::ComposeOdd => &["S", "C"],
            Command::ComposeOddSym => &["A", "B", "border"],
            Command::Circulant => &["row or spectrum"],
            Command::GuoPair => &["sigma1", "sigma2"],
            Command::Verify => &["matrix", "spectrum"],
            Command::Extract => &["matrix"],
            Command::Batch => &["jobs"],
        }
    }
}

impl std::str::FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(Value::String(s.to_string()))
            .map_err(|_| Error::Parse(format!("unknown command {s:?}")))
    }
}

/// A file path, JSON text, or an inline JSON value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Input {
    Text(String),
    Inline(Value),
}

impl Input {
    /// Strings starting with `{` or `[` are JSON text, other strings are paths.
    pub fn resolve(&self) -> Result<Value> {
        match self {
            Input::Inline(v) => Ok(v.clone()),
            Input::Text(s) => {
                let t = s.trim_start();
                if t.starts_with('{') || t.starts_with('[') {
                    Ok(serde_json::from_str(t)?)
                } else {
                    let text = std::fs::read_to_string(s)
                        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{s}: {e}"))))?;
                    Ok(serde_json::from_str(&text)?)
                }
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    pub gamma: Option<f64>,
    pub sign: Option<Sign>,
    pub t: Option<f64>,
    pub t1: Option<f64>,
    pub t2: Option<f64>,
    pub theta: Option<f64>,
    pub branch: Option<Sign>,
    pub variant: Option<GuoVariant>,
    pub phi1: Option<Vec<f64>>,
    pub phi2: Option<Vec<f64>>,
    pub tol: Option<f64>,
    pub pairing: Option<Pairing>,
    /// Largest power sum checked by `check`.
    pub k: Option<u32>,
    /// Largest JLL exponent checked by `check`.
    pub m: Option<u32>,
}

impl Params {
    fn composition(&self) -> Result<CompositionParams> {
        CompositionParams::new(self.gamma.unwrap_or(1.0), self.sign.unwrap_or_default())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct OutputSpec {
    #[serde(default)]
    pub path: Option<PathBuf>,
    #[serde(default)]
    pub format: Format,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JobSpec {
    pub command: Command,
    #[serde(default)]
    pub inputs: Vec<Input>,
    #[serde(default)]
    pub params: Params,
    #[serde(default)]
    pub output: OutputSpec,
}

impl JobSpec {
    pub fn new(command: Command, inputs: Vec<Input>) -> Self {
        JobSpec {
            command,
            inputs,
            params: Params::default(),
            output: OutputSpec::default(),
        }
    }

    /// Checks input count and command-specific required parameters.
    pub fn validate(&self) -> Result<()> {
        let names = self.command.input_names();
        if self.inputs.len() != names.len() {
            return Err(Error::Parse(format!(
                "{} expects {} input(s) ({}), got {}",
                self.command.name(),
                names.len(),
                names.join(", "),
                self.inputs.len()
            )));
        }
        let p = &self.params;
        let missing = |what: &str| Err(Error::Parse(format!("{} requires --{what}", self.command.name())));
        match self.command {
            Command::Guo if p.t.is_none() => missing("t"),
            Command::GuoPair if p.t1.is_none() => missing("t1"),
            Command::ComposeOdd if p.phi1.is_some() != p.phi2.is_some() => {
                Err(Error::Parse("--phi1 and --phi2 must be given together".into()))
            }
            _ => Ok(()),
        }
    }
}

/// Result of running a job.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub exit_code: i32,
    /// Machine-readable result, always JSON.
    pub document: Value,
    /// `document` rendered in the requested format.
    pub text: String,
}

/// Runs a job, taking the tolerance override from `NIEP_TOL` if set.
pub fn run(job: &JobSpec) -> Outcome {
    match std::env::var(TOL_ENV) {
        Err(_) => run_with_env_tol(job, None),
        Ok(raw) => match raw.trim().parse::<f64>() {
            Ok(t) if t >= 0.0 => run_with_env_tol(job, Some(t)),
            _ => failure(
                job,
                &Error::Parse(format!("{TOL_ENV} must be a nonnegative number, got {raw:?}")),
            ),
        },
    }
}

/// [`run`] with an explicit stand-in for `NIEP_TOL`. `params.tol` still wins.
pub fn run_with_env_tol(job: &JobSpec, env_tol: Option<f64>) -> Outcome {
    if job.command == Command::Batch {
        return run_batch(job, env_tol);
    }
    let tol_override = job.params.tol.or(env_tol);
    let mut outcome = match job.validate().and_then(|_| execute(job, tol_override)) {
        Ok(done) => finish(job, done),
        Err(e) => failure(job, &e),
    };
    if let Some(path) = &job.output.path {
        if let Err(e) = std::fs::write(path, &outcome.text) {
            outcome = failure(job, &Error::Io(e));
        }
    }
    outcome
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Gate { .. } => EXIT_GATE,
        Error::NonConvergence { .. } => EXIT_VERIFY,
        Error::Io(_) | Error::Parse(_) | Error::Dimension(_) | Error::InvalidInput(_) => EXIT_IO,
    }
}

fn failure(job: &JobSpec, e: &Error) -> Outcome {
    let code = exit_code_for(e);
    let mut doc = Map::new();
    doc.insert("command".into(), json!(job.command.name()));
    doc.insert("exit_code".into(), json!(code));
    let status = match code {
        EXIT_GATE => "gate-failed",
        EXIT_VERIFY => "verification-failed",
        _ => "error",
    };
    doc.insert("status".into(), json!(status));
    if let Error::Gate { condition, .. } = e {
        doc.insert("condition".into(), json!(condition));
    }
    doc.insert("message".into(), json!(e.to_string()));
    let document = Value::Object(doc);
    let text = match job.output.format {
        Format::Json => pretty_json(&document),
        Format::Csv | Format::Pretty => format!("{status}: {e}\n"),
    };
    Outcome {
        exit_code: code,
        document,
        text,
    }
}

fn pretty_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

/// What a command produced before rendering.
#[derive(Default)]
struct Done {
    /// Named matrices shown in csv/pretty output.
    shown: Vec<(&'static str, DenseMatrix)>,
    fields: Map<String, Value>,
    verification: Option<VerificationReport>,
    structured: Option<VerificationReport>,
    /// Exit status when verification is not the deciding check (`check`).
    gate: Option<(String, String)>,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("value serializes")
}

fn parse<T: serde::de::DeserializeOwned>(input: &Input, what: &str) -> Result<T> {
    serde_json::from_value(input.resolve()?).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

/// Verifies `matrix` against `expected`, plus the lifted-eigenvector check
/// when the factors are known.
fn verified(
    done: &mut Done,
    matrix: &DenseMatrix,
    expected: &Spectrum,
    factors: Option<(&DenseMatrix, &DenseMatrix, bool)>,
    tol: Option<f64>,
) -> Result<()> {
    let tol = tol.unwrap_or_else(|| default_verification_tol(matrix));
    done.verification = Some(verify(matrix, expected, Some(tol))?);
    if let Some((s, kc, odd)) = factors {
        done.structured = Some(structured_check_auto(matrix, s, kc, odd, tol)?);
    }
    Ok(())
}

fn union_of_factor_spectra(s: &DenseMatrix, c: &DenseMatrix, k: f64) -> Result<Spectrum> {
    let ss = eigenvalues(s)?;
    if c.rows() == 0 {
        return Ok(ss);
    }
    Ok(ss.union(&eigenvalues(c)?.scaled(k)))
}

fn execute(job: &JobSpec, tol: Option<f64>) -> Result<Done> {
    let p = &job.params;
    let inp = &job.inputs;
    let mut done = Done::default();
    match job.command {
        Command::Check => {
            let sigma: Spectrum = parse(&inp[0], "spectrum")?;
            let t = tol.unwrap_or_else(|| sigma.default_tol());
            let report = check_necessary(&sigma, p.k.unwrap_or(DEFAULT_K), p.m.unwrap_or(DEFAULT_M), t)?;
            done.fields.insert("necessary".into(), to_value(&report));
            done.fields.insert("suleimanova".into(), json!(is_suleimanova(&sigma, t)));
            if let Some(msg) = report.first_failure() {
                let cond = msg.split(':').next().unwrap_or("necessary").to_string();
                done.gate = Some((cond, msg));
            }
        }
        Command::RealizeSuleimanova => {
            let sigma: Spectrum = parse(&inp[0], "spectrum")?;
            let m = realize_suleimanova(&sigma)?;
            verified(&mut done, &m, &sigma, None, tol)?;
            done.fields.insert("matrix".into(), to_value(&m));
            done.shown.push(("matrix", m));
        }
        Command::RealizePair => {
            let sigma_s: Spectrum = parse(&inp[0], "sigma_s")?;
            let sigma_c: Spectrum = parse(&inp[1], "sigma_c")?;
            let cp = p.composition()?;
            let r = realize_pair_suleimanova(&sigma_s, &sigma_c, cp, p.pairing.unwrap_or_default())?;
            let expected = r.expected_spectrum(cp);
            let kc = r.c.scale(re(cp.factor()));
            verified(&mut done, &r.matrix, &expected, Some((&r.s, &kc, false)), tol)?;
            done.fields.insert("matrix".into(), to_value(&r.matrix));
            done.fields.insert("s".into(), to_value(&r.s));
            done.fields.insert("c".into(), to_value(&r.c));
            done.fields.insert("pairing".into(), json!({"sigma_s": r.sigma_s, "sigma_c": r.sigma_c}));
            done.shown.push(("matrix", r.matrix));
        }
        Command::ComposeEven => {
            let s: DenseMatrix = parse(&inp[0], "S")?;
            let c: DenseMatrix = parse(&inp[1], "C")?;
            let cp = p.composition()?;
            let m = compose_even(&s, &c, cp)?;
            let expected = union_of_factor_spectra(&s, &c, cp.factor())?;
            let kc = c.scale(re(cp.factor()));
            verified(&mut done, &m, &expected, Some((&s, &kc, false)), tol)?;
            done.fields.insert("matrix".into(), to_value(&m));
            done.shown.push(("matrix", m));
        }
        Command::ComposeOdd => {
            let s: DenseMatrix = parse(&inp[0], "S")?;
            let c: DenseMatrix = parse(&inp[1], "C")?;
            let cp = p.composition()?;
            let tail = match (&p.phi1, &p.phi2) {
                (Some(a), Some(b)) => Some(OddTail {
                    phi1: a.clone(),
                    phi2: b.clone(),
                }),
                _ => None,
            };
            let m = compose_odd(&s, &c, cp, tail.as_ref())?;
            let expected = union_of_factor_spectra(&s, &c, cp.factor())?;
            let equal_split = tail.as_ref().is_none_or(|t| t.phi1 == t.phi2);
            // C lifts are eigenvectors only under an equal split
            let kc = if equal_split {
                c.scale(re(cp.factor()))
            } else {
                DenseMatrix::zeros(0, 0)
            };
            verified(&mut done, &m, &expected, Some((&s, &kc, true)), tol)?;
            if !equal_split {
                if let Some(r) = done.structured.as_mut() {
                    r.skipped.push("C eigenpairs: unequal split of the last row".into());
                }
            }
            done.fields.insert("matrix".into(), to_value(&m));
            done.shown.push(("matrix", m));
        }
        Command::ComposeOddSym => {
            let a: DenseMatrix = parse(&inp[0], "A")?;
            let b: DenseMatrix = parse(&inp[1], "B")?;
            let border: Border = parse(&inp[2], "border")?;
            let m = compose_odd_sym(&a, &b, &border)?;
            let (s, c) = odd_sym_factors(&a, &b, &border)?;
            let expected = union_of_factor_spectra(&s, &c, 1.0)?;
            verified(&mut done, &m, &expected, Some((&s, &c, true)), tol)?;
            done.fields.insert("matrix".into(), to_value(&m));
            done.fields.insert("s".into(), to_value(&s));
            done.fields.insert("c".into(), to_value(&c));
            done.shown.push(("matrix", m));
        }
        Command::Circulant => {
            let v = inp[0].resolve()?;
            let (row, sigma) = if v.get("row").is_some() {
                let row: CirculantRow = serde_json::from_value(v)?;
                let sigma = circulant_spectrum(&row);
                (row, sigma)
            } else {
                let sigma: Spectrum = serde_json::from_value(v)?;
                (circulant_from_spectrum(&sigma), sigma)
            };
            let m = row.to_matrix();
            verified(&mut done, &m, &sigma, None, tol)?;
            let real_tol = tol.unwrap_or_else(|| sigma.default_tol());
            done.fields.insert("row_is_real".into(), json!(row.max_imag() <= real_tol));
            done.fields.insert("row".into(), to_value(&row));
            done.fields.insert("spectrum".into(), to_value(&sigma));
            done.fields.insert("matrix".into(), to_value(&m));
            done.shown.push(("matrix", m));
        }
        Command::Guo => {
            let sigma: Spectrum = parse(&inp[0], "spectrum")?;
            let gp = GuoParams {
                t: p.t.expect("validated"),
                theta: p.theta.unwrap_or(0.0),
                branch: p.branch.unwrap_or_default(),
                variant: p.variant.unwrap_or_default(),
            };
            let base_tol = tol.unwrap_or_else(|| sigma.default_tol());
            let base = circulant_from_spectrum(&sigma);
            if base.max_imag() > base_tol || base.real_parts().iter().any(|&x| x < -base_tol) {
                return Err(Error::gate(
                    "nonnegative-circulant",
                    "the list is not the DFT-ordered spectrum of a nonnegative circulant",
                ));
            }
            let out = guo_perturb(&sigma, gp)?;
            let mut row = circulant_from_spectrum(&out).real_parts();
            let mut clamped = 0;
            for (j, x) in row.iter_mut().enumerate() {
                if *x < -ROW_NONNEG_TOL {
                    return Err(Error::gate(
                        "perturbed-nonnegativity",
                        format!("perturbed row entry {j} is {x}"),
                    ));
                }
                if *x < 0.0 {
                    *x = 0.0;
                    clamped += 1;
                }
            }
            let row = CirculantRow::from_real(&row)?;
            let m = row.to_matrix();
            verified(&mut done, &m, &out, None, tol)?;
            done.fields.insert("spectrum".into(), to_value(&out));
            done.fields.insert("row".into(), to_value(&row));
            done.fields.insert("clamped".into(), json!(clamped));
            done.fields.insert("matrix".into(), to_value(&m));
            done.shown.push(("matrix", m));
        }
        Command::GuoPair => {
            let s1: Spectrum = parse(&inp[0], "sigma1")?;
            let s2: Spectrum = parse(&inp[1], "sigma2")?;
            let cp = p.composition()?;
            let g = guo_pair_compose(
                &s1,
                &s2,
                p.t1.expect("validated"),
                p.t2.unwrap_or(0.0),
                p.branch.unwrap_or_default(),
                cp,
            )?;
            let expected = g.expected_spectrum(cp);
            let s = CirculantRow::from_real(&g.row_s)?.to_matrix();
            let kc = CirculantRow::from_real(&g.row_c)?.to_matrix().scale(re(cp.factor()));
            verified(&mut done, &g.matrix, &expected, Some((&s, &kc, false)), tol)?;
            done.fields.insert("sigma_s".into(), to_value(&g.sigma_s));
            done.fields.insert("sigma_c".into(), to_value(&g.sigma_c));
            done.fields.insert("row_s".into(), json!(g.row_s));
            done.fields.insert("row_c".into(), json!(g.row_c));
            done.fields.insert("clamped".into(), json!(g.clamped));
            done.fields.insert("matrix".into(), to_value(&g.matrix));
            done.shown.push(("matrix", g.matrix));
        }
        Command::Verify => {
            let m: DenseMatrix = parse(&inp[0], "matrix")?;
            let sigma: Spectrum = parse(&inp[1], "spectrum")?;
            verified(&mut done, &m, &sigma, None, tol)?;
        }
        Command::Extract => {
            let m: DenseMatrix = parse(&inp[0], "matrix")?;
            let order = m.require_square("matrix")?;
            let pattern_tol = tol.unwrap_or_else(|| default_verification_tol(&m));
            let odd = order % 2 == 1;
            let (s, c) = if odd {
                extract_odd(&m, pattern_tol)?
            } else {
                extract_even(&m, pattern_tol)?
            };
            let expected = union_of_factor_spectra(&s, &c, 1.0)?;
            let factors = if odd && !odd_last_row_is_equal_split(&m) {
                None
            } else {
                Some((&s, &c, odd))
            };
            verified(&mut done, &m, &expected, factors, tol)?;
            done.fields.insert("s".into(), to_value(&s));
            done.fields.insert("c".into(), to_value(&c));
            done.shown.push(("S", s));
            done.shown.push(("C", c));
        }
        Command::Batch => unreachable!("handled by run_batch"),
    }
    Ok(done)
}

fn odd_last_row_is_equal_split(m: &DenseMatrix) -> bool {
    let last = m.rows() - 1;
    (0..last / 2).all(|j| m[(last, 2 * j)] == m[(last, 2 * j + 1)])
}

fn finish(job: &JobSpec, done: Done) -> Outcome {
    let Done {
        shown,
        fields,
        verification,
        structured,
        gate,
    } = done;
    let verified_ok = verification.as_ref().is_none_or(|r| r.passed)
        && structured.as_ref().is_none_or(|r| r.passed);
    let (code, status) = if gate.is_some() {
        (EXIT_GATE, "gate-failed")
    } else if !verified_ok {
        (EXIT_VERIFY, "verification-failed")
    } else {
        (EXIT_OK, "ok")
    };

    let mut doc = Map::new();
    doc.insert("command".into(), json!(job.command.name()));
    doc.insert("exit_code".into(), json!(code));
    doc.insert("status".into(), json!(status));
    if let Some((cond, msg)) = &gate {
        doc.insert("condition".into(), json!(cond));
        doc.insert("message".into(), json!(msg));
    }
    doc.extend(fields);
    if let Some(r) = &verification {
        doc.insert("verification".into(), to_value(r));
    }
    if let Some(r) = &structured {
        doc.insert("eigenvector_check".into(), to_value(r));
    }
    let document = Value::Object(doc);

    let text = match job.output.format {
        Format::Json => pretty_json(&document),
        Format::Csv | Format::Pretty if shown.is_empty() => pretty_json(&document),
        Format::Csv | Format::Pretty => {
            let mut out = String::new();
            let labelled = shown.len() > 1;
            for (name, m) in &shown {
                if labelled {
                    out.push_str(&format!("# {name}\n"));
                }
                out.push_str(&emit(m, job.output.format));
            }
            for (label, r) in [("verification", &verification), ("eigenvector check", &structured)] {
                if let Some(r) = r {
                    out.push_str(&format!(
                        "# {label}: {} (max distance {:.3e}, tol {:.3e}{})\n",
                        if r.passed { "passed" } else { "FAILED" },
                        r.max_distance,
                        r.tol,
                        if r.skipped.is_empty() {
                            String::new()
                        } else {
                            format!(", {} skipped", r.skipped.len())
                        }
                    ));
                }
            }
            out
        }
    };
    Outcome {
        exit_code: code,
        document,
        text,
    }
}

/// Runs a list of jobs; the text output has one JSON line per job in input
/// order, and the exit status is the largest of the individual statuses.
fn run_batch(job: &JobSpec, env_tol: Option<f64>) -> Outcome {
    let jobs: Vec<JobSpec> = match job
        .validate()
        .and_then(|_| parse::<Vec<JobSpec>>(&job.inputs[0], "jobs"))
    {
        Ok(j) => j,
        Err(e) => return failure(job, &e),
    };
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let mut results: Vec<Outcome> = Vec::with_capacity(jobs.len());
    for chunk in jobs.chunks(workers) {
        std::thread::scope(|scope| {
            let handles: Vec<_> = chunk
                .iter()
                .map(|j| {
                    scope.spawn(move || {
                        if j.command == Command::Batch {
                            failure(j, &Error::Parse("nested batch jobs are not supported".into()))
                        } else {
                            run_with_env_tol(j, env_tol)
                        }
                    })
                })
                .collect();
            results.extend(handles.into_iter().map(|h| h.join().expect("job thread")));
        });
    }
    let code = results.iter().map(|o| o.exit_code).max().unwrap_or(EXIT_OK);
    let mut text = String::new();
    for (i, o) in results.iter().enumerate() {
        let mut line = o.document.clone();
        line["index"] = json!(i);
        text.push_str(&serde_json::to_string(&line).expect("json value serializes"));
        text.push('\n');
    }
    let document = json!({
        "command": "batch",
        "exit_code": code,
        "results": results.iter().map(|o| o.document.clone()).collect::<Vec<_>>(),
    });
    let mut outcome = Outcome {
        exit_code: code,
        document,
        text,
    };
    if let Some(path) = &job.output.path {
        if let Err(e) = std::fs::write(path, &outcome.text) {
            outcome = failure(job, &Error::Io(e));
        }
    }
    outcome
}
