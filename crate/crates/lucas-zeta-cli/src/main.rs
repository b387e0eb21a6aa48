//! Command-line front end for the Lucas-sequence zeta toolkit.
//!
//! Three subcommands cover the library surface:
//!
//! * `eval`   — one value of zeta_U(s), zeta_U(s, z) or theta_U(t),
//!   reported as a JSON object on stdout;
//! * `poles`  — the pole/residue map of zeta_U or zeta_U(., z) over a
//!   rectangle, as CSV (or JSON) rows sorted by (re, im);
//! * `verify` — self-check suites comparing independent evaluation routes
//!   (direct vs continued sums, closed forms vs contour integrals).
//!
//! Sequences are selected either by `--P/--Q` or by `--preset`
//! (fibonacci | pell | jacobsthal | geomsum:RATIO | q0:BASE). The q0
//! preset routes to the pure-power suite U_n = BASE^(n-1), which the
//! admissibility check on (P, Q) otherwise rejects (Q = 0).
//!
//! Results go to stdout, diagnostics to stderr. Numbers are printed with
//! 17 significant digits and a `.` decimal separator regardless of locale.
//! Exit codes: 0 success; 1 failed verification or a computation that did
//! not converge; 2 invalid parameters or flags; 3 evaluation point too
//! close to a pole.

mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lucas_zeta::hurwitz::{hurwitz_continued, hurwitz_direct, hurwitz_poles, GeometricPowers};
use lucas_zeta::lucas::{classify_ratio, Certainty, LucasParams};
use lucas_zeta::theta::theta_direct;
use lucas_zeta::zeta::{zeta_continued, zeta_direct, zeta_poles, PoleOrigin, PoleSpec, Region};
use lucas_zeta::{Error, EvalConfig};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(
    name = "lucaszeta",
    version,
    about = "Zeta, theta and Hurwitz-type zeta functions of Lucas sequences"
)]
struct Cli {
    /// Flat key=value file overriding evaluation settings (one pair per
    /// line, `#` comments allowed).
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function value; JSON object on stdout.
    Eval(EvalArgs),
    /// List poles and residues in a rectangle; CSV or JSON on stdout.
    Poles(PolesArgs),
    /// Run self-check suites; JSON report on stdout.
    Verify(VerifyArgs),
}

/// Sequence selection shared by `eval` and `poles`.
#[derive(Args)]
struct SequenceArgs {
    /// Recurrence coefficient P (with --Q; alternative to --preset).
    #[arg(long = "P", value_name = "P", allow_hyphen_values = true)]
    p: Option<f64>,

    /// Recurrence coefficient Q.
    #[arg(long = "Q", value_name = "Q", allow_hyphen_values = true)]
    q: Option<f64>,

    /// Named sequence: fibonacci | pell | jacobsthal | geomsum:RATIO | q0:BASE.
    #[arg(long, conflicts_with_all = ["p", "q"])]
    preset: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FnKind {
    Zeta,
    Hurwitz,
    Theta,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Continued,
    Auto,
}

impl Method {
    fn label(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Continued => "continued",
            Method::Auto => "auto",
        }
    }
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    seq: SequenceArgs,

    /// Function to evaluate.
    #[arg(long = "fn", value_enum)]
    func: FnKind,

    /// Evaluation point s as RE,IM (zeta and hurwitz).
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    s: Option<Complex64>,

    /// Shift z as RE,IM with Re(z) > 0 (hurwitz only; default 1,0).
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    z: Option<Complex64>,

    /// Argument t > 0 (theta only).
    #[arg(long, allow_hyphen_values = true)]
    t: Option<f64>,

    /// Expansion order for the continued hurwitz route (default: automatic).
    #[arg(long)]
    m: Option<u32>,

    /// Evaluation route; `auto` takes the direct sum when Re(s) is at
    /// least the configured sigma_min and the continuation otherwise.
    #[arg(long, value_enum, default_value = "auto")]
    method: Method,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PoleFn {
    Zeta,
    Hurwitz,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct PolesArgs {
    #[command(flatten)]
    seq: SequenceArgs,

    /// Function whose poles to list.
    #[arg(long = "fn", value_enum)]
    func: PoleFn,

    /// Left edge of the search rectangle.
    #[arg(long, allow_hyphen_values = true)]
    re_min: f64,

    /// Right edge of the search rectangle.
    #[arg(long, allow_hyphen_values = true)]
    re_max: f64,

    /// Bottom edge of the search rectangle.
    #[arg(long, allow_hyphen_values = true)]
    im_min: f64,

    /// Top edge of the search rectangle.
    #[arg(long, allow_hyphen_values = true)]
    im_max: f64,

    /// Shift z as RE,IM (hurwitz only; default 1,0).
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    z: Option<Complex64>,

    /// Output format.
    #[arg(long, value_enum, default_value = "csv")]
    format: OutFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Overlap,
    Residues,
    ThetaOrder,
    Examples,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which checks to run.
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
}

/// Failure carrying the process exit code.
pub enum CliError {
    /// Invalid parameters or flags: exit 2.
    Validation(String),
    /// Evaluation point too close to a pole: exit 3.
    NearPole(String),
    /// Failed verification or non-converging computation: exit 1.
    Failure(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::NearPole(_) => 3,
            CliError::Failure(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::NearPole(m) | CliError::Failure(m) => m,
        }
    }
}

/// Maps library failures onto the exit-code classes.
fn lib_error(e: Error) -> CliError {
    match e {
        Error::InvalidParams(_) | Error::Domain(_) => CliError::Validation(e.to_string()),
        Error::NearPole { .. } | Error::GammaPole { .. } => CliError::NearPole(e.to_string()),
        _ => CliError::Failure(e.to_string()),
    }
}

fn validation(message: impl Into<String>) -> CliError {
    CliError::Validation(message.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let mut cfg = EvalConfig::default();
    if let Some(path) = &cli.config {
        apply_config_file(&mut cfg, path)?;
    }
    match cli.command {
        Command::Eval(args) => cmd_eval(args, &cfg),
        Command::Poles(args) => cmd_poles(args, &cfg),
        Command::Verify(args) => cmd_verify(args, &cfg),
    }
}

/// Applies a flat key=value override file to the evaluation settings.
fn apply_config_file(cfg: &mut EvalConfig, path: &std::path::Path) -> Result<(), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| validation(format!("cannot read config {}: {e}", path.display())))?;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| validation(format!("config line {}: expected key=value", idx + 1)))?;
        cfg.set(key.trim(), value.trim())
            .map_err(|e| validation(format!("config line {}: {e}", idx + 1)))?;
    }
    Ok(())
}

/// A sequence to operate on: an admissible (P, Q) pair or the Q = 0
/// pure-power suite.
enum Target {
    Lucas(LucasParams),
    Powers(GeometricPowers),
}

fn resolve_target(seq: &SequenceArgs) -> Result<Target, CliError> {
    if let Some(preset) = &seq.preset {
        return match preset.as_str() {
            "fibonacci" => Ok(Target::Lucas(LucasParams::fibonacci())),
            "pell" => Ok(Target::Lucas(LucasParams::pell())),
            "jacobsthal" => Ok(Target::Lucas(LucasParams::jacobsthal())),
            other => {
                if let Some(ratio) = other.strip_prefix("geomsum:") {
                    let ratio = ratio
                        .parse::<f64>()
                        .map_err(|e| validation(format!("bad geomsum ratio {ratio:?}: {e}")))?;
                    return Ok(Target::Lucas(
                        LucasParams::geometric_sum(ratio).map_err(lib_error)?,
                    ));
                }
                if let Some(base) = other.strip_prefix("q0:") {
                    let base = base
                        .parse::<f64>()
                        .map_err(|e| validation(format!("bad q0 base {base:?}: {e}")))?;
                    return Ok(Target::Powers(
                        GeometricPowers::new(base).map_err(lib_error)?,
                    ));
                }
                Err(validation(format!(
                    "unknown preset {other:?} (expected fibonacci | pell | jacobsthal | \
                     geomsum:RATIO | q0:BASE)"
                )))
            }
        };
    }
    match (seq.p, seq.q) {
        (Some(p), Some(q)) => Ok(Target::Lucas(LucasParams::new(p, q).map_err(lib_error)?)),
        _ => Err(validation(
            "select a sequence with --preset or both --P and --Q",
        )),
    }
}

/// Parses "RE,IM" (or a bare "RE") into a complex number.
fn parse_complex(text: &str) -> Result<Complex64, String> {
    let (re, im) = match text.split_once(',') {
        Some((re, im)) => (re, im),
        None => (text, "0"),
    };
    let re = re
        .trim()
        .parse::<f64>()
        .map_err(|e| format!("bad real part {re:?}: {e}"))?;
    let im = im
        .trim()
        .parse::<f64>()
        .map_err(|e| format!("bad imaginary part {im:?}: {e}"))?;
    Ok(Complex64::new(re, im))
}

/// 17 significant digits, locale-independent. Negative zero is printed
/// as zero.
fn sig17(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

/// A finite f64 as a JSON number printed with 17 significant digits.
fn num(x: f64) -> Value {
    sig17(x)
        .parse::<serde_json::Number>()
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

fn complex_value(v: Complex64) -> Value {
    json!({ "im": num(v.im), "re": num(v.re) })
}

fn params_json(target: &Target) -> Value {
    match target {
        Target::Lucas(p) => json!({
            "D": num(p.d),
            "P": num(p.p),
            "Q": num(p.q),
            "a": num(p.a),
            "b": num(p.b),
        }),
        // U_{n+1} = a U_n is the (P, Q) = (a, 0) recurrence: roots a and 0.
        Target::Powers(g) => json!({
            "D": num(g.a * g.a),
            "P": num(g.a),
            "Q": num(0.0),
            "a": num(g.a),
            "b": num(0.0),
        }),
    }
}

fn cmd_eval(args: EvalArgs, cfg: &EvalConfig) -> Result<(), CliError> {
    let target = resolve_target(&args.seq)?;
    let mut warnings: Vec<String> = Vec::new();
    let mut input = Map::new();

    let warn_unused = |warnings: &mut Vec<String>, unused: &[(&str, bool)], func: &str| {
        for (flag, given) in unused {
            if *given {
                warnings.push(format!("{flag} is ignored for --fn {func}"));
            }
        }
    };

    let (value, method, error_estimate) = match args.func {
        FnKind::Theta => {
            let t = args.t.ok_or_else(|| validation("--fn theta needs --t T"))?;
            warn_unused(
                &mut warnings,
                &[
                    ("--s", args.s.is_some()),
                    ("--z", args.z.is_some()),
                    ("--m", args.m.is_some()),
                    ("--method", args.method != Method::Auto),
                ],
                "theta",
            );
            let params = match &target {
                Target::Lucas(p) => p,
                Target::Powers(_) => {
                    return Err(validation(
                        "theta is not part of the q0 suite; use a --P/--Q sequence",
                    ))
                }
            };
            input.insert("t".into(), num(t));
            let v = theta_direct(params, t, cfg).map_err(lib_error)?;
            (
                Complex64::new(v, 0.0),
                "direct",
                cfg.eps_series * (1.0 + v.abs()),
            )
        }
        FnKind::Zeta => {
            let s = args
                .s
                .ok_or_else(|| validation("--fn zeta needs --s RE,IM"))?;
            warn_unused(
                &mut warnings,
                &[
                    ("--z", args.z.is_some()),
                    ("--t", args.t.is_some()),
                    ("--m", args.m.is_some()),
                ],
                "zeta",
            );
            input.insert("s".into(), complex_value(s));
            let direct = match args.method {
                Method::Direct => true,
                Method::Continued => false,
                Method::Auto => s.re >= cfg.sigma_min,
            };
            let (v, label) = match (&target, direct) {
                (Target::Lucas(p), true) => (zeta_direct(p, s, cfg).map_err(lib_error)?, "direct"),
                (Target::Lucas(p), false) => {
                    (zeta_continued(p, s, cfg).map_err(lib_error)?, "continued")
                }
                (Target::Powers(g), true) => (g.zeta_direct(s, cfg).map_err(lib_error)?, "direct"),
                (Target::Powers(g), false) => {
                    (g.zeta_closed(s, cfg).map_err(lib_error)?, "continued")
                }
            };
            (v, label, cfg.eps_series * (1.0 + v.norm()))
        }
        FnKind::Hurwitz => {
            let s = args
                .s
                .ok_or_else(|| validation("--fn hurwitz needs --s RE,IM"))?;
            let z = args.z.unwrap_or(Complex64::new(1.0, 0.0));
            warn_unused(&mut warnings, &[("--t", args.t.is_some())], "hurwitz");
            input.insert("s".into(), complex_value(s));
            input.insert("z".into(), complex_value(z));
            if let Some(m) = args.m {
                input.insert("m".into(), Value::from(m));
            }
            let direct = match args.method {
                Method::Direct => true,
                Method::Continued => false,
                Method::Auto => s.re >= cfg.sigma_min,
            };
            match (&target, direct) {
                (Target::Lucas(p), true) => {
                    if args.m.is_some() {
                        warnings.push("--m is ignored by the direct route".into());
                    }
                    let v = hurwitz_direct(p, s, z, cfg).map_err(lib_error)?;
                    (v, "direct", cfg.eps_series * (1.0 + v.norm()))
                }
                (Target::Lucas(p), false) => {
                    let v = hurwitz_continued(p, s, z, args.m, cfg).map_err(lib_error)?;
                    (
                        v,
                        "continued",
                        cfg.eps_quad + cfg.eps_series * (1.0 + v.norm()),
                    )
                }
                (Target::Powers(g), true) => {
                    if args.m.is_some() {
                        warnings.push("--m is ignored by the direct route".into());
                    }
                    let v = g.hurwitz_direct(s, z, cfg).map_err(lib_error)?;
                    (v, "direct", cfg.eps_series * (1.0 + v.norm()))
                }
                (Target::Powers(g), false) => {
                    if args.m.is_some() {
                        warnings.push("--m is ignored by the q0 binomial route".into());
                    }
                    let v = g.hurwitz_binomial(s, z, cfg).map_err(lib_error)?;
                    (v, "continued", cfg.eps_series * (1.0 + v.norm()))
                }
            }
        }
    };

    input.insert(
        "fn".into(),
        Value::String(
            match args.func {
                FnKind::Zeta => "zeta",
                FnKind::Hurwitz => "hurwitz",
                FnKind::Theta => "theta",
            }
            .into(),
        ),
    );
    input.insert("method".into(), Value::String(args.method.label().into()));

    let report = json!({
        "error_estimate": num(error_estimate),
        "input": Value::Object(input),
        "method": method,
        "params": params_json(&target),
        "value": complex_value(value),
        "warnings": warnings,
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    Ok(())
}

/// Poles of the pure-power zeta 1/(1 - a^{-s}): the line Re(s) = 0 at
/// spacing 2 pi / log a, residue 1/log a each.
fn q0_zeta_poles(g: &GeometricPowers, region: &Region) -> Vec<PoleSpec> {
    let mut out = Vec::new();
    if region.re_min > 0.0 || region.re_max < 0.0 {
        return out;
    }
    let n_lo = (region.im_min * g.log_a / (2.0 * std::f64::consts::PI)).ceil() as i64;
    let n_hi = (region.im_max * g.log_a / (2.0 * std::f64::consts::PI)).floor() as i64;
    for n in n_lo..=n_hi {
        out.push(PoleSpec {
            location: Complex64::new(0.0, 2.0 * std::f64::consts::PI * n as f64 / g.log_a),
            residue: Complex64::new(1.0 / g.log_a, 0.0),
            origins: vec![PoleOrigin::Lattice { k: 0, n }],
        });
    }
    out
}

/// Poles of the shifted pure-power zeta: the full lattice
/// -l + 2 n pi i / log a, l >= 0, with closed-form residues.
fn q0_hurwitz_poles(
    g: &GeometricPowers,
    region: &Region,
    z: Complex64,
) -> Result<Vec<PoleSpec>, CliError> {
    let mut out = Vec::new();
    let l_lo = (-region.re_max).ceil().max(0.0) as i64;
    let l_hi = (-region.re_min).floor() as i64;
    let n_lo = (region.im_min * g.log_a / (2.0 * std::f64::consts::PI)).ceil() as i64;
    let n_hi = (region.im_max * g.log_a / (2.0 * std::f64::consts::PI)).floor() as i64;
    for l in l_lo..=l_hi.max(l_lo - 1) {
        for n in n_lo..=n_hi {
            let residue = g.residue_at_lattice(l as u32, n, z).map_err(lib_error)?;
            out.push(PoleSpec {
                location: Complex64::new(
                    -(l as f64),
                    2.0 * std::f64::consts::PI * n as f64 / g.log_a,
                ),
                residue,
                origins: vec![PoleOrigin::ShiftedLattice {
                    l: l as u32,
                    k: 0,
                    n,
                }],
            });
        }
    }
    out.sort_by(|x, y| {
        (x.location.re, x.location.im)
            .partial_cmp(&(y.location.re, y.location.im))
            .expect("finite pole locations")
    });
    Ok(out)
}

/// Semicolon-joined "l,k,n" index triples behind one pole row.
fn origins_field(origins: &[PoleOrigin]) -> String {
    origins
        .iter()
        .map(|o| match o {
            PoleOrigin::NegInt { l } => format!("{l},0,0"),
            PoleOrigin::Lattice { k, n } => format!("0,{k},{n}"),
            PoleOrigin::ShiftedLattice { l, k, n } => format!("{l},{k},{n}"),
        })
        .collect::<Vec<_>>()
        .join(";")
}

fn cmd_poles(args: PolesArgs, cfg: &EvalConfig) -> Result<(), CliError> {
    let target = resolve_target(&args.seq)?;
    let region = Region {
        re_min: args.re_min,
        re_max: args.re_max,
        im_min: args.im_min,
        im_max: args.im_max,
    };
    let z = args.z.unwrap_or(Complex64::new(1.0, 0.0));
    if args.func == PoleFn::Zeta && args.z.is_some() {
        eprintln!("note: --z is ignored for --fn zeta");
    }

    let certainty = |c: Certainty| match c {
        Certainty::Exact => "exact",
        Certainty::Heuristic => "heuristic",
    };
    let (rows, label) = match (&target, args.func) {
        (Target::Lucas(p), PoleFn::Zeta) => (
            zeta_poles(p, &region, cfg).map_err(lib_error)?,
            certainty(classify_ratio(p, cfg).certainty),
        ),
        (Target::Lucas(p), PoleFn::Hurwitz) => (
            hurwitz_poles(p, &region, z, cfg).map_err(lib_error)?,
            certainty(classify_ratio(p, cfg).certainty),
        ),
        (Target::Powers(g), PoleFn::Zeta) => (q0_zeta_poles(g, &region), "exact"),
        (Target::Powers(g), PoleFn::Hurwitz) => (q0_hurwitz_poles(g, &region, z)?, "exact"),
    };

    match args.format {
        OutFormat::Csv => {
            println!("re,im,residue_re,residue_im,origins,classification_certainty");
            for p in &rows {
                println!(
                    "{},{},{},{},\"{}\",{}",
                    sig17(p.location.re),
                    sig17(p.location.im),
                    sig17(p.residue.re),
                    sig17(p.residue.im),
                    origins_field(&p.origins),
                    label
                );
            }
        }
        OutFormat::Json => {
            let arr: Vec<Value> = rows
                .iter()
                .map(|p| {
                    json!({
                        "classification_certainty": label,
                        "im": num(p.location.im),
                        "origins": origins_field(&p.origins),
                        "re": num(p.location.re),
                        "residue_im": num(p.residue.im),
                        "residue_re": num(p.residue.re),
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&Value::Array(arr)).expect("rows serialize")
            );
        }
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs, cfg: &EvalConfig) -> Result<(), CliError> {
    let checks = verify::run(args.suite, cfg);
    let mut first_failure: Option<String> = None;
    for check in &checks {
        let status = if check.passed { "ok" } else { "FAIL" };
        eprintln!("verify: {:<44} {status}  ({})", check.name, check.detail);
        if !check.passed && first_failure.is_none() {
            first_failure = Some(check.name.clone());
        }
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    let report = json!({
        "checks": checks
            .iter()
            .map(|c| {
                json!({
                    "detail": c.detail,
                    "name": c.name,
                    "passed": c.passed,
                })
            })
            .collect::<Vec<_>>(),
        "failed": failed,
        "passed": failed == 0,
        "suite": match args.suite {
            Suite::Overlap => "overlap",
            Suite::Residues => "residues",
            Suite::ThetaOrder => "theta-order",
            Suite::Examples => "examples",
            Suite::All => "all",
        },
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    match first_failure {
        None => Ok(()),
        Some(name) => Err(CliError::Failure(format!("first failing check: {name}"))),
    }
}
