//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 success, 1 property failure (`check` only), 2 invalid input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::biquat::BiQuaternion;
use crate::check::{self, CheckReport, RunConfig, Suite};
use crate::error::Error;
use crate::lorentz::{
    boost_event, einstein_add, le_boost, m_vector, make_boost, n_vector, rotational_limit, Event,
    LimitKind,
};
use crate::pauli_matrix::{from_matrix, spin_term, to_matrix};
use crate::reflsum::{compose_velocities, mag_sq};
use crate::vector::{fmt_cplx, fmt_cplx_sci, unsign_zero, CVec3, Cplx, RVec3};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "pauliquat",
    version,
    about = "Pauli-quaternion kinematics: compositions, boosts, limits and property checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compose two velocities under the reflection-symmetric and/or Einstein law.
    Add(AddArgs),
    /// Boost an event with the quaternion rotor and/or the real Lorentz boost.
    Boost(BoostArgs),
    /// Run seeded property campaigns.
    Check(CheckArgs),
    /// Evaluate the c → 0 rotational limits for both products.
    Limit(LimitArgs),
    /// Print the 2×2 matrix representation of a quaternion or boost rotor.
    Matrix(MatrixArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Law {
    Refl,
    Einstein,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Quat,
    Le,
    Both,
}

#[derive(Args, Debug)]
struct AddArgs {
    /// First velocity, `x,y,z`.
    #[arg(long, allow_hyphen_values = true)]
    v: String,
    /// Second velocity, `x,y,z`.
    #[arg(long, allow_hyphen_values = true)]
    u: String,
    #[arg(long, default_value_t = 1.0)]
    c: f64,
    #[arg(long, value_enum, default_value_t = Law::Both)]
    law: Law,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args, Debug)]
struct BoostArgs {
    /// Boost velocity, `x,y,z`.
    #[arg(long, allow_hyphen_values = true)]
    v: String,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    t: f64,
    /// Event position, `x,y,z`.
    #[arg(long, allow_hyphen_values = true, default_value = "0,0,0")]
    x: String,
    #[arg(long, default_value_t = 1.0)]
    c: f64,
    #[arg(long, value_enum, default_value_t = Method::Both)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// biquat, reflsum, lorentz, matrix or all.
    #[arg(conflicts_with = "suite_flag")]
    suite: Option<String>,
    #[arg(long = "suite", id = "suite_flag")]
    suite_flag: Option<String>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 1.0)]
    c: f64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Per-property override, `suite.property=value`; repeatable.
    #[arg(long)]
    tolerance: Vec<String>,
}

#[derive(Args, Debug)]
struct LimitArgs {
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long, allow_hyphen_values = true)]
    v: String,
    #[arg(long, allow_hyphen_values = true, default_value_t = 1.0)]
    t: f64,
    /// Comma-separated list of speed constants, largest first.
    #[arg(long, default_value = "1e-1,1e-2,1e-3")]
    c: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct MatrixSource {
    /// Quaternion components `s,x,y,z`; each may be complex (`1`, `-0.5i`, `2+3i`).
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// Boost velocity `x,y,z`; prints the rotor's matrix.
    #[arg(long, allow_hyphen_values = true)]
    v: Option<String>,
}

#[derive(Args, Debug)]
struct MatrixArgs {
    #[command(flatten)]
    source: MatrixSource,
    #[arg(long, default_value_t = 1.0)]
    c: f64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

/// Input problems reported with exit code 2.
#[derive(Debug)]
struct Invalid(String);

impl From<Error> for Invalid {
    fn from(e: Error) -> Self {
        Invalid(format!("{}: {e}", error_kind(&e)))
    }
}

impl From<check::CheckError> for Invalid {
    fn from(e: check::CheckError) -> Self {
        Invalid(e.to_string())
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NullQuaternion { .. } => "NullQuaternion",
        Error::DegenerateDenominator { .. } => "DegenerateDenominator",
        Error::SuperluminalInput { .. } => "SuperluminalInput",
        Error::SubluminalLimit { .. } => "SubluminalLimit",
        Error::MismatchedC { .. } => "MismatchedC",
        Error::CollinearInput => "CollinearInput",
        Error::NonpositiveC(_) => "NonpositiveC",
        Error::NonFinite(_) => "NonFinite",
    }
}

/// Parses an argument vector (including the program name), writes the
/// report to `out` and diagnostics to `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INVALID
                }
            };
        }
    };
    let result = match cli.command {
        Command::Add(a) => cmd_add(&a).map(|s| (s, EXIT_OK)),
        Command::Boost(a) => cmd_boost(&a).map(|s| (s, EXIT_OK)),
        Command::Check(a) => cmd_check(&a),
        Command::Limit(a) => cmd_limit(&a).map(|s| (s, EXIT_OK)),
        Command::Matrix(a) => cmd_matrix(&a).map(|s| (s, EXIT_OK)),
    };
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
    }
}

// ---- parsing --------------------------------------------------------------

pub fn parse_vec3(s: &str) -> Result<RVec3, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!(
            "expected a comma-separated triple x,y,z, got {s:?}"
        ));
    }
    let mut xyz = [0.0; 3];
    for (slot, p) in xyz.iter_mut().zip(&parts) {
        *slot = p
            .trim()
            .parse::<f64>()
            .map_err(|_| format!("not a number: {p:?} in {s:?}"))?;
    }
    let v = RVec3::from(xyz);
    if !v.is_finite() {
        return Err(format!("non-finite component in {s:?}"));
    }
    Ok(v)
}

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` (exponents allowed).
pub fn parse_cplx(s: &str) -> Result<Cplx, String> {
    let t = s.trim();
    let bad = || format!("not a complex number: {s:?}");
    let Some(body) = t.strip_suffix('i') else {
        return t
            .parse::<f64>()
            .map(|re| Cplx::new(re, 0.0))
            .map_err(|_| bad());
    };
    // split at the last sign that is not the leading sign or an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re_str, im_str) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let re = if re_str.is_empty() {
        0.0
    } else {
        re_str.parse::<f64>().map_err(|_| bad())?
    };
    let im = match im_str {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse::<f64>().map_err(|_| bad())?,
    };
    let z = Cplx::new(re, im);
    if z.is_finite() {
        Ok(z)
    } else {
        Err(bad())
    }
}

fn parse_quat(s: &str) -> Result<BiQuaternion, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected four components s,x,y,z, got {s:?}"));
    }
    let c: Vec<Cplx> = parts
        .iter()
        .map(|p| parse_cplx(p))
        .collect::<Result<_, _>>()?;
    Ok(BiQuaternion::new(c[0], CVec3::new(c[1], c[2], c[3])))
}

fn parse_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| format!("not a number: {p:?}"))
        })
        .collect()
}

fn arg<T>(flag: &str, r: Result<T, String>) -> Result<T, Invalid> {
    r.map_err(|m| Invalid(format!("--{flag}: {m}")))
}

// ---- rendering ------------------------------------------------------------

fn jnum(x: f64) -> Value {
    // NaN and infinities have no JSON number form
    serde_json::Number::from_f64(unsign_zero(x))
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

fn jcplx(z: Cplx) -> Value {
    json!({ "re": jnum(z.re), "im": jnum(z.im) })
}

fn jcvec(v: CVec3) -> Value {
    Value::Array(v.components().iter().map(|&z| jcplx(z)).collect())
}

fn jrvec(v: RVec3) -> Value {
    Value::Array(v.to_array().iter().map(|&x| jnum(x)).collect())
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// One row of CSV cells, with a matching header.
#[derive(Default)]
struct CsvRow {
    header: Vec<String>,
    cells: Vec<String>,
}

impl CsvRow {
    fn text(&mut self, name: &str, v: &str) -> &mut Self {
        self.header.push(name.to_string());
        self.cells.push(v.to_string());
        self
    }

    fn real(&mut self, name: &str, x: f64) -> &mut Self {
        self.text(name, &unsign_zero(x).to_string())
    }

    fn cplx(&mut self, name: &str, z: Cplx) -> &mut Self {
        self.real(&format!("{name}_re"), z.re)
            .real(&format!("{name}_im"), z.im)
    }

    fn cvec(&mut self, name: &str, v: CVec3) -> &mut Self {
        for (axis, z) in ["x", "y", "z"].iter().zip(v.components()) {
            self.cplx(&format!("{name}_{axis}"), z);
        }
        self
    }

    fn rvec(&mut self, name: &str, v: RVec3) -> &mut Self {
        for (axis, x) in ["x", "y", "z"].iter().zip(v.to_array()) {
            self.real(&format!("{name}_{axis}"), x);
        }
        self
    }
}

fn csv_text(rows: &[CsvRow]) -> String {
    let mut s = String::new();
    if let Some(first) = rows.first() {
        s.push_str(&first.header.join(","));
        s.push('\n');
    }
    for r in rows {
        s.push_str(&r.cells.join(","));
        s.push('\n');
    }
    s
}

/// Two-column key/value table.
fn table_text(pairs: &[(String, String)]) -> String {
    let width = pairs
        .iter()
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0);
    let mut s = String::new();
    for (k, v) in pairs {
        let pad = width - k.chars().count();
        let _ = writeln!(s, "{k}{}  {v}", " ".repeat(pad));
    }
    s
}

fn kv(k: impl Into<String>, v: impl ToString) -> (String, String) {
    (k.into(), v.to_string())
}

// ---- add ------------------------------------------------------------------

fn cmd_add(a: &AddArgs) -> Result<String, Invalid> {
    let v = arg("v", parse_vec3(&a.v))?;
    let u = arg("u", parse_vec3(&a.u))?;
    let c = a.c;
    // V +̂ U, i.e. (−V') +̂ U with V' = −V
    let refl = match a.law {
        Law::Refl | Law::Both => Some(compose_velocities(-v, u, c)?),
        Law::Einstein => None,
    };
    let einstein = match a.law {
        Law::Einstein | Law::Both => Some(einstein_add(v, u, c)?),
        Law::Refl => None,
    };
    let refl_mag = refl.map(mag_sq);
    let ein_mag = einstein.map(RVec3::norm_sq);
    let diff = match (refl_mag, ein_mag) {
        (Some(r), Some(e)) => Some((r - Cplx::new(e, 0.0)).norm()),
        _ => None,
    };

    Ok(match a.format {
        Format::Json => {
            let mut m = Map::new();
            m.insert("v".into(), jrvec(v));
            m.insert("u".into(), jrvec(u));
            m.insert("c".into(), jnum(c));
            if let (Some(w), Some(ms)) = (refl, refl_mag) {
                m.insert("refl".into(), json!({ "w": jcvec(w), "mag_sq": jcplx(ms) }));
            }
            if let (Some(w), Some(ms)) = (einstein, ein_mag) {
                m.insert(
                    "einstein".into(),
                    json!({ "w": jrvec(w), "mag_sq": jnum(ms) }),
                );
            }
            if let Some(d) = diff {
                m.insert("mag_sq_diff".into(), jnum(d));
            }
            json_text(&Value::Object(m))
        }
        Format::Csv => {
            let mut row = CsvRow::default();
            row.rvec("v", v).rvec("u", u).real("c", c);
            if let (Some(w), Some(ms)) = (refl, refl_mag) {
                row.cvec("refl", w).cplx("refl_mag_sq", ms);
            }
            if let (Some(w), Some(ms)) = (einstein, ein_mag) {
                row.rvec("einstein", w).real("einstein_mag_sq", ms);
            }
            if let Some(d) = diff {
                row.real("mag_sq_diff", d);
            }
            csv_text(&[row])
        }
        Format::Table => {
            let mut pairs = vec![kv("v", v), kv("u", u), kv("c", c)];
            if let (Some(w), Some(ms)) = (refl, refl_mag) {
                pairs.push(kv("refl      w", w));
                pairs.push(kv("refl      w·w", fmt_cplx(ms)));
            }
            if let (Some(w), Some(ms)) = (einstein, ein_mag) {
                pairs.push(kv("einstein  w", w));
                pairs.push(kv("einstein  w·w", ms));
            }
            if let Some(d) = diff {
                pairs.push(kv("w·w difference", format!("{d:e}")));
            }
            table_text(&pairs)
        }
    })
}

// ---- boost ----------------------------------------------------------------

fn cmd_boost(a: &BoostArgs) -> Result<String, Invalid> {
    let v = arg("v", parse_vec3(&a.v))?;
    let x = arg("x", parse_vec3(&a.x))?;
    let event = Event::new(a.t, x, a.c)?;
    let rotor = make_boost(v, a.c)?;
    let interval_in = event.interval();

    let quat = match a.method {
        Method::Quat | Method::Both => {
            let te = boost_event(&rotor, &event)?;
            Some((te, spin_term(&rotor, &event)?))
        }
        Method::Le => None,
    };
    let le = match a.method {
        Method::Le | Method::Both => Some(le_boost(&rotor, &event)?),
        Method::Quat => None,
    };
    let le_interval = |t: f64, xp: RVec3| (a.c * t).powi(2) - xp.norm_sq();

    Ok(match a.format {
        Format::Json => {
            let mut m = Map::new();
            m.insert("v".into(), jrvec(v));
            m.insert("t".into(), jnum(a.t));
            m.insert("x".into(), jrvec(x));
            m.insert("c".into(), jnum(a.c));
            m.insert("g".into(), jnum(rotor.g));
            m.insert("interval_in".into(), jnum(interval_in));
            if let Some((te, spin)) = quat {
                m.insert(
                    "quat".into(),
                    json!({
                        "t_prime": jnum(te.t_prime),
                        "x_prime": jcvec(te.x_prime),
                        "spin_term": jcvec(spin),
                        "interval": jcplx(te.interval(a.c)),
                    }),
                );
            }
            if let Some((t, xp)) = le {
                m.insert(
                    "le".into(),
                    json!({ "t_prime": jnum(t), "x_prime": jrvec(xp), "interval": jnum(le_interval(t, xp)) }),
                );
            }
            json_text(&Value::Object(m))
        }
        Format::Csv => {
            let mut row = CsvRow::default();
            row.rvec("v", v)
                .real("t", a.t)
                .rvec("x", x)
                .real("c", a.c)
                .real("g", rotor.g)
                .real("interval_in", interval_in);
            if let Some((te, spin)) = quat {
                row.real("quat_t_prime", te.t_prime)
                    .cvec("quat_x_prime", te.x_prime)
                    .cvec("spin_term", spin)
                    .cplx("quat_interval", te.interval(a.c));
            }
            if let Some((t, xp)) = le {
                row.real("le_t_prime", t)
                    .rvec("le_x_prime", xp)
                    .real("le_interval", le_interval(t, xp));
            }
            csv_text(&[row])
        }
        Format::Table => {
            let mut pairs = vec![
                kv("v", v),
                kv("event", format!("t = {}, x = {}", a.t, x)),
                kv("c", a.c),
                kv("g", rotor.g),
                kv("interval in", unsign_zero(interval_in)),
            ];
            if let Some((te, spin)) = quat {
                pairs.push(kv("quat  t′", unsign_zero(te.t_prime)));
                pairs.push(kv("quat  x′", te.x_prime));
                pairs.push(kv("quat  spin term", spin));
                pairs.push(kv("quat  interval out", fmt_cplx(te.interval(a.c))));
            }
            if let Some((t, xp)) = le {
                pairs.push(kv("le    t′", unsign_zero(t)));
                pairs.push(kv("le    x′", xp));
                pairs.push(kv("le    interval out", unsign_zero(le_interval(t, xp))));
            }
            table_text(&pairs)
        }
    })
}

// ---- check ----------------------------------------------------------------

fn cmd_check(a: &CheckArgs) -> Result<(String, i32), Invalid> {
    let suite_name = a
        .suite
        .as_deref()
        .or(a.suite_flag.as_deref())
        .unwrap_or("all");
    let suite: Suite = suite_name.parse()?;
    let mut config = RunConfig {
        c: a.c,
        trials: a.trials,
        seed: a.seed,
        ..RunConfig::default()
    };
    for entry in &a.tolerance {
        let (id, val) = entry.split_once('=').ok_or_else(|| {
            Invalid(format!(
                "--tolerance: expected suite.property=value, got {entry:?}"
            ))
        })?;
        let tol: f64 = val
            .trim()
            .parse()
            .map_err(|_| Invalid(format!("--tolerance: not a number: {val:?}")))?;
        config
            .tolerance_overrides
            .insert(id.trim().to_string(), tol);
    }
    let report = check::run(suite, &config)?;
    let code = if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    };
    Ok((render_check(&report, a.format), code))
}

/// JSON and CSV carry no timing so that reruns are byte-identical.
pub fn render_check(report: &CheckReport, format: Format) -> String {
    match format {
        Format::Json => {
            let props: Vec<Value> = report
                .properties
                .iter()
                .map(|p| {
                    json!({
                        "id": p.id(),
                        "suite": p.suite.name(),
                        "property": p.name,
                        "trials": p.trials,
                        "max_deviation": jnum(p.max_deviation),
                        "tolerance": jnum(p.tolerance),
                        "passed": p.passed,
                    })
                })
                .collect();
            json_text(&json!({
                "suite": report.suite.name(),
                "seed": report.seed,
                "trials": report.trials,
                "c": jnum(report.c),
                "passed": report.all_passed(),
                "properties": props,
            }))
        }
        Format::Csv => {
            let rows: Vec<CsvRow> = report
                .properties
                .iter()
                .map(|p| {
                    let mut r = CsvRow::default();
                    r.text("suite", p.suite.name())
                        .text("property", p.name)
                        .text("trials", &p.trials.to_string())
                        .real("max_deviation", p.max_deviation)
                        .real("tolerance", p.tolerance)
                        .text("passed", &p.passed.to_string());
                    r
                })
                .collect();
            csv_text(&rows)
        }
        Format::Table => {
            let width = report
                .properties
                .iter()
                .map(|p| p.id().len())
                .max()
                .unwrap_or(8);
            let mut s = String::new();
            let _ = writeln!(
                s,
                "suite {}  seed {}  trials {}  c {}",
                report.suite, report.seed, report.trials, report.c
            );
            let _ = writeln!(
                s,
                "{:<width$}  {:>7}  {:>12}  {:>9}  result",
                "property", "trials", "max dev", "tolerance"
            );
            for p in &report.properties {
                let _ = writeln!(
                    s,
                    "{:<width$}  {:>7}  {:>12.3e}  {:>9.0e}  {}",
                    p.id(),
                    p.trials,
                    p.max_deviation,
                    p.tolerance,
                    if p.passed { "PASS" } else { "FAIL" }
                );
            }
            let failed = report.properties.iter().filter(|p| !p.passed).count();
            let _ = writeln!(
                s,
                "{} properties, {} failed, {:.3} s",
                report.properties.len(),
                failed,
                report.wall_time.as_secs_f64()
            );
            s
        }
    }
}

// ---- limit ----------------------------------------------------------------

struct LimitRow {
    kind: LimitKind,
    c: f64,
    value: BiQuaternion,
    target: BiQuaternion,
    deviation: f64,
    /// Empirical order `log(dev_prev/dev) / log(c_prev/c)` against the previous row.
    order: Option<f64>,
}

fn cmd_limit(a: &LimitArgs) -> Result<String, Invalid> {
    let x = arg("x", parse_vec3(&a.x))?;
    let v = arg("v", parse_vec3(&a.v))?;
    let cs = arg("c", parse_list(&a.c))?;
    let m = m_vector(x, v)?;
    let n = n_vector(x, v)?;

    let mut rows = Vec::new();
    for kind in LimitKind::ALL {
        let mut prev: Option<(f64, f64)> = None;
        for &c in &cs {
            let r = rotational_limit(kind, x, v, a.t, c)?;
            let dev = r.deviation();
            let order = prev.map(|(pc, pd)| (pd / dev).ln() / (pc / c).ln());
            rows.push(LimitRow {
                kind,
                c,
                value: r.value(),
                target: r.target(),
                deviation: dev,
                order,
            });
            prev = Some((c, dev));
        }
    }
    let final_order = |kind: LimitKind| {
        rows.iter()
            .rev()
            .find(|r| r.kind == kind)
            .and_then(|r| r.order)
    };

    Ok(match a.format {
        Format::Json => {
            let jrows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "kind": r.kind.name(),
                        "c": jnum(r.c),
                        "scalar": jcplx(r.value.s),
                        "vector": jcvec(r.value.v),
                        "target_scalar": jcplx(r.target.s),
                        "target_vector": jcvec(r.target.v),
                        "deviation": jnum(r.deviation),
                        "order": r.order.map(jnum).unwrap_or(Value::Null),
                    })
                })
                .collect();
            let conv: Vec<Value> = LimitKind::ALL
                .iter()
                .map(|&k| json!({ "kind": k.name(), "order": final_order(k).map(jnum).unwrap_or(Value::Null) }))
                .collect();
            json_text(&json!({
                "x": jrvec(x),
                "v": jrvec(v),
                "t": jnum(a.t),
                "m": jrvec(m),
                "n": jrvec(n),
                "m_dot_n": jnum(m.dot(n)),
                "rows": jrows,
                "convergence": conv,
            }))
        }
        Format::Csv => {
            let csv_rows: Vec<CsvRow> = rows
                .iter()
                .map(|r| {
                    let mut row = CsvRow::default();
                    row.text("kind", r.kind.name())
                        .real("c", r.c)
                        .cplx("scalar", r.value.s)
                        .cvec("vector", r.value.v)
                        .cplx("target_scalar", r.target.s)
                        .cvec("target_vector", r.target.v)
                        .real("deviation", r.deviation)
                        .text("order", &r.order.map(|o| o.to_string()).unwrap_or_default());
                    row
                })
                .collect();
            csv_text(&csv_rows)
        }
        Format::Table => {
            let mut s = String::new();
            let _ = writeln!(s, "x = {x}, v = {v}, t = {}", a.t);
            let _ = writeln!(s, "m = {m}, n = {n}, m·n = {:e}", m.dot(n));
            let quat = |q: &BiQuaternion| {
                q.components()
                    .iter()
                    .map(|&z| fmt_cplx_sci(z, 3))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let _ = writeln!(s, "{:<16}  {:>6}  {:<6}  s x y z", "kind", "c", "");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:<16}  {:>6.0e}  {:<6}  {}",
                    r.kind.name(),
                    r.c,
                    "value",
                    quat(&r.value)
                );
                let _ = writeln!(
                    s,
                    "{:<16}  {:>6}  {:<6}  {}",
                    "",
                    "",
                    "target",
                    quat(&r.target)
                );
                let _ = writeln!(
                    s,
                    "{:<16}  {:>6}  {:<6}  {:.3e}",
                    "", "", "dev", r.deviation
                );
            }
            for k in LimitKind::ALL {
                match final_order(k) {
                    Some(o) => {
                        let _ = writeln!(s, "convergence order ({}): {:.4}", k.name(), o);
                    }
                    None => {
                        let _ = writeln!(s, "convergence order ({}): n/a", k.name());
                    }
                }
            }
            s
        }
    })
}

// ---- matrix ---------------------------------------------------------------

fn cmd_matrix(a: &MatrixArgs) -> Result<String, Invalid> {
    let q = match (&a.source.q, &a.source.v) {
        (Some(q), _) => arg("q", parse_quat(q))?,
        (None, Some(v)) => make_boost(arg("v", parse_vec3(v))?, a.c)?.quat,
        (None, None) => unreachable!("clap group requires one source"),
    };
    let m = to_matrix(&q);
    let back = from_matrix(&m);
    let entries = m.entries();

    Ok(match a.format {
        Format::Json => json_text(&json!({
            "quaternion": { "s": jcplx(q.s), "v": jcvec(q.v) },
            "matrix": [[jcplx(entries[0]), jcplx(entries[1])], [jcplx(entries[2]), jcplx(entries[3])]],
            "det": jcplx(m.det()),
            "square_norm": jcplx(q.square_norm()),
            "roundtrip_deviation": jnum(back.max_abs_diff(&q)),
        })),
        Format::Csv => {
            let mut row = CsvRow::default();
            row.cplx("s", q.s).cvec("v", q.v);
            for (name, z) in ["m00", "m01", "m10", "m11"].iter().zip(entries) {
                row.cplx(name, z);
            }
            row.cplx("det", m.det())
                .cplx("square_norm", q.square_norm());
            csv_text(&[row])
        }
        Format::Table => {
            let w = entries
                .iter()
                .map(|&z| fmt_cplx(z).len())
                .max()
                .unwrap_or(0);
            let mut s = table_text(&[kv("quaternion", q)]);
            let _ = writeln!(
                s,
                "⎡ {:>w$}  {:>w$} ⎤",
                fmt_cplx(entries[0]),
                fmt_cplx(entries[1])
            );
            let _ = writeln!(
                s,
                "⎣ {:>w$}  {:>w$} ⎦",
                fmt_cplx(entries[2]),
                fmt_cplx(entries[3])
            );
            s.push_str(&table_text(&[
                kv("det", fmt_cplx(m.det())),
                kv("square norm", fmt_cplx(q.square_norm())),
            ]));
            s
        }
    })
}
