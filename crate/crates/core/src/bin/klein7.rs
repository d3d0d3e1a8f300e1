//! Command-line front end: series expansion, identity verification, matrix
//! checks, numeric transformation-law checks, and the named constants.
//!
//! Exit codes: 0 = all requested checks pass, 1 = a verification failure,
//! 2 = usage or input error.

use std::collections::HashMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use klein7::exact::{named_constant, rational_to_string, NamedConstant};
use klein7::identities::{self, VerificationReport};
use klein7::klein;
use klein7::numeric::{self, NumericCheck};
use klein7::series::{BuildContext, SeriesName};

#[derive(Parser)]
#[command(
    name = "klein7",
    version,
    about = "Exact q-series and Q(zeta7) checks for the level-7 theta functions and the Hauptmodul of Gamma_1(7)"
)]
struct Cli {
    /// Plain-text key=value configuration file; flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the q-expansion of a named series (u, v, w, s, t, h, z, eta,
    /// eta7, etaquot4, j7star).
    Expand {
        name: String,
        /// Show coefficients with exponent below this integer bound.
        #[arg(long)]
        order: Option<i64>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Verify registry identities plus the exact matrix/root checks.
    Verify {
        /// Run every registry entry and every matrix check.
        #[arg(long, conflicts_with = "id")]
        all: bool,
        /// Verify a single id.
        #[arg(long)]
        id: Option<String>,
        /// Truncation order for series identities.
        #[arg(long)]
        order: Option<i64>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Also write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run a numeric transformation-law check (thm2, thm3, thm4,
    /// theta-inversion, theta-split, theta-quasi, st-theta-form, f-remark,
    /// h0-limit).
    Numeric {
        #[arg(long)]
        check: String,
        /// Evaluation point "re,im" with im > 0; defaults to the five
        /// standard points.
        #[arg(long)]
        tau: Option<String>,
        #[arg(long)]
        terms: Option<i64>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Print the cubic roots r, r', r'' and the attached constants, exactly
    /// and as complex approximations.
    Roots {
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

/// Defaults, config-file values, then flags; flags win.
struct RunConfig {
    order: i64,
    tol: f64,
    terms: i64,
    format: Format,
    tau: Option<String>,
    report: Option<PathBuf>,
}

impl RunConfig {
    fn from_file(path: Option<&PathBuf>) -> Result<Self, String> {
        let mut cfg = RunConfig {
            order: 40,
            tol: 1e-8,
            terms: 64,
            format: Format::Text,
            tau: None,
            report: None,
        };
        let Some(path) = path else { return Ok(cfg) };
        let text = fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        let mut pairs = HashMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {} is not key=value: {line}", lineno + 1))?;
            pairs.insert(k.trim().to_owned(), v.trim().to_owned());
        }
        for (k, v) in pairs {
            match k.as_str() {
                "order" => cfg.order = v.parse().map_err(|_| format!("bad order: {v}"))?,
                "tol" => cfg.tol = v.parse().map_err(|_| format!("bad tol: {v}"))?,
                "terms" => cfg.terms = v.parse().map_err(|_| format!("bad terms: {v}"))?,
                "tau" => cfg.tau = Some(v),
                "report" => cfg.report = Some(PathBuf::from(v)),
                "format" => {
                    cfg.format = match v.as_str() {
                        "text" => Format::Text,
                        "json" => Format::Json,
                        other => return Err(format!("bad format: {other}")),
                    }
                }
                other => return Err(format!("unknown config key: {other}")),
            }
        }
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), String> {
        if self.order < 5 {
            return Err(format!("truncation order must be >= 5, got {}", self.order));
        }
        if self.tol <= 0.0 {
            return Err(format!("tolerance must be positive, got {}", self.tol));
        }
        if self.terms < 1 {
            return Err(format!("terms must be >= 1, got {}", self.terms));
        }
        Ok(())
    }
}

fn parse_tau(s: &str) -> Result<Complex64, String> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| format!("tau must be \"re,im\", got {s}"))?;
    let re: f64 = re
        .trim()
        .parse()
        .map_err(|_| format!("bad tau real part: {re}"))?;
    let im: f64 = im
        .trim()
        .parse()
        .map_err(|_| format!("bad tau imaginary part: {im}"))?;
    if im <= 0.0 {
        return Err(format!(
            "tau must have positive imaginary part, got im = {im}"
        ));
    }
    Ok(Complex64::new(re, im))
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn wrap_results(config: Value, results: Vec<Value>) -> Value {
    json!({
        "version": env!("CARGO_PKG_VERSION"),
        "config": config,
        "results": results,
    })
}

fn write_report(path: &PathBuf, body: &Value) -> Result<(), String> {
    fs::write(
        path,
        serde_json::to_string_pretty(body).expect("serializable") + "\n",
    )
    .map_err(|e| format!("cannot write report {}: {e}", path.display()))
}

fn report_line(r: &VerificationReport) -> String {
    let order = r
        .order_checked
        .as_ref()
        .map(|o| format!(" order={}", rational_to_string(o)))
        .unwrap_or_default();
    let mismatch = r
        .first_mismatch
        .as_ref()
        .map(|m| {
            format!(
                "  first mismatch at {}: lhs={} rhs={}",
                m.location, m.lhs, m.rhs
            )
        })
        .unwrap_or_default();
    format!(
        "{:<24} {}{} ({:.1} ms){}",
        r.id,
        r.status.as_str(),
        order,
        r.wall_time_ms,
        mismatch
    )
}

fn cmd_expand(name: &str, cfg: &RunConfig, order_flag: Option<i64>) -> ExitCode {
    let Some(series_name) = SeriesName::parse(name) else {
        return usage_error(&format!(
            "unknown series name: {name} (expected one of {})",
            SeriesName::ALL.map(|n| n.as_str()).join(", ")
        ));
    };
    let order = order_flag.unwrap_or(cfg.order);
    // Derived series lose a little precision to inversions, so build with
    // context slack and display below the requested bound.
    let ctx = BuildContext::new(order.max(1));
    let series = ctx.series(series_name);
    let bound = (order * ctx.grid()).min(series.trunc());
    match cfg.format {
        Format::Text => {
            println!("# {} to order {} (exponents as rationals)", name, order);
            for (n, c) in series.terms() {
                if n >= bound {
                    break;
                }
                let e = klein7::exact::Rational::new(n.into(), ctx.grid().into());
                println!("{}\t{}", rational_to_string(&e), rational_to_string(c));
            }
        }
        Format::Json => {
            let body = json!({
                "version": env!("CARGO_PKG_VERSION"),
                "name": name,
                "order": order,
                "series": series.truncate_to(bound).to_json(),
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&body).expect("serializable")
            );
        }
    }
    ExitCode::SUCCESS
}

fn klein_check_by_id(id: &str) -> Option<VerificationReport> {
    match id {
        "klein-generators" => Some(klein::check_generators()),
        "klein-A2-scalar" => Some(klein::check_a_involution().0),
        "klein-T" => Some(klein::check_t()),
        "klein-word" => Some(klein::check_word_decomposition()),
        "klein-roots" => Some(klein::check_roots()),
        "klein-thm4" => Some(klein::check_thm4_algebra()),
        "klein-cusp-orbit" => Some(klein::check_cusp_orbit()),
        "klein-thm2-chain" => Some(klein::check_thm2_coefficients()),
        _ => None,
    }
}

fn cmd_verify(
    all: bool,
    id: Option<&str>,
    cfg: &RunConfig,
    report_path: Option<&PathBuf>,
) -> ExitCode {
    let reports: Vec<VerificationReport> = match (all, id) {
        (false, Some(id)) => match identities::verify(id, cfg.order) {
            Ok(r) => vec![r],
            Err(_) => match klein_check_by_id(id) {
                Some(r) => vec![r],
                None => {
                    let mut known: Vec<&str> =
                        identities::registry().iter().map(|e| e.id()).collect();
                    known.extend(klein::KLEIN_CHECK_IDS);
                    return usage_error(&format!(
                        "unknown identity id: {id} (known ids: {})",
                        known.join(", ")
                    ));
                }
            },
        },
        _ => {
            let ctx = BuildContext::new(cfg.order);
            let mut rs = identities::verify_all_with(&ctx);
            rs.extend(klein::run_all_checks());
            rs
        }
    };

    let all_pass = reports.iter().all(|r| r.passed());
    let config_json = json!({"order": cfg.order});
    let body = wrap_results(config_json, reports.iter().map(|r| r.to_json()).collect());
    if let Some(path) = report_path.or(cfg.report.as_ref()) {
        if let Err(e) = write_report(path, &body) {
            return usage_error(&e);
        }
    }
    match cfg.format {
        Format::Text => {
            for r in &reports {
                println!("{}", report_line(r));
            }
            println!(
                "{}: {}/{} checks passed",
                if all_pass { "ok" } else { "FAILED" },
                reports.iter().filter(|r| r.passed()).count(),
                reports.len()
            );
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&body).expect("serializable")
            );
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn cmd_numeric(check: &str, cfg: &RunConfig, report_path: Option<&PathBuf>) -> ExitCode {
    let check = match NumericCheck::parse(check) {
        Ok(c) => c,
        Err(e) => return usage_error(&e.to_string()),
    };
    let points: Vec<Complex64> = match &cfg.tau {
        Some(s) => match parse_tau(s) {
            Ok(t) => vec![t],
            Err(e) => return usage_error(&e),
        },
        // The cusp-limit check wants a tall point, not the generic five.
        None if check == NumericCheck::H0Limit => vec![Complex64::new(0.0, 4.0)],
        None => numeric::default_test_points().to_vec(),
    };
    let mut results = Vec::new();
    let mut all_pass = true;
    for tau in points {
        match numeric::run_check(check, tau, cfg.terms, cfg.tol) {
            Ok(report) => {
                all_pass &= report.pass;
                results.push(report);
            }
            Err(e) => return usage_error(&format!("{} at tau = {tau}: {e}", check.as_str())),
        }
    }
    let config_json = json!({"terms": cfg.terms, "tol": cfg.tol});
    let body = wrap_results(config_json, results.iter().map(|r| r.to_json()).collect());
    if let Some(path) = report_path.or(cfg.report.as_ref()) {
        if let Err(e) = write_report(path, &body) {
            return usage_error(&e);
        }
    }
    match cfg.format {
        Format::Text => {
            for r in &results {
                println!(
                    "{:<16} tau={:+.3}{:+.3}i terms={} max_error={:.3e} tol={:.1e} {}",
                    r.check,
                    r.tau.re,
                    r.tau.im,
                    r.terms,
                    r.max_error,
                    r.tol,
                    if r.pass { "pass" } else { "FAIL" }
                );
            }
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&body).expect("serializable")
            );
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn cmd_roots(cfg: &RunConfig) -> ExitCode {
    let constants = [
        NamedConstant::R,
        NamedConstant::RPrime,
        NamedConstant::RDblPrime,
        NamedConstant::Eps1,
        NamedConstant::Eta1,
        NamedConstant::Eta2,
        NamedConstant::Eta3,
        NamedConstant::Eps1Eta3Sq,
    ];
    match cfg.format {
        Format::Text => {
            println!("# roots of x^3 - 8x^2 + 5x + 1 and attached constants (z = zeta_7)");
            for c in constants {
                let v = named_constant(c);
                let a = v.embed(1, 10).expect("constants embed in f64");
                println!("{:<12} = {v}  ~  {:+.10}{:+.10}i", c.as_str(), a.re, a.im);
            }
            let r = named_constant(NamedConstant::R);
            let rp = named_constant(NamedConstant::RPrime);
            let rpp = named_constant(NamedConstant::RDblPrime);
            let sum = &(&r + &rp) + &rpp;
            println!("r + r' + r''  = {sum}");
        }
        Format::Json => {
            let results: Vec<Value> = constants
                .iter()
                .map(|c| {
                    let v = named_constant(*c);
                    let a = v.embed(1, 10).expect("constants embed in f64");
                    json!({
                        "name": c.as_str(),
                        "coefficients": v.coeffs().iter().map(rational_to_string).collect::<Vec<_>>(),
                        "approx": [a.re, a.im],
                        "display": v.to_string(),
                    })
                })
                .collect();
            let body = wrap_results(json!({}), results);
            println!(
                "{}",
                serde_json::to_string_pretty(&body).expect("serializable")
            );
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut cfg = match RunConfig::from_file(cli.config.as_ref()) {
        Ok(c) => c,
        Err(e) => return usage_error(&e),
    };
    // Apply command-scoped flag overrides.
    match &cli.command {
        Command::Expand { format, .. }
        | Command::Verify { format, .. }
        | Command::Numeric { format, .. }
        | Command::Roots { format } => {
            if let Some(f) = format {
                cfg.format = *f;
            }
        }
    }
    match &cli.command {
        Command::Verify { order: Some(o), .. } => cfg.order = *o,
        Command::Numeric {
            terms, tol, tau, ..
        } => {
            if let Some(t) = terms {
                cfg.terms = *t;
            }
            if let Some(t) = tol {
                cfg.tol = *t;
            }
            if let Some(t) = tau {
                cfg.tau = Some(t.clone());
            }
        }
        _ => {}
    }
    if let Err(e) = cfg.validate() {
        return usage_error(&e);
    }
    match &cli.command {
        Command::Expand { name, order, .. } => cmd_expand(name, &cfg, *order),
        Command::Verify {
            all, id, report, ..
        } => cmd_verify(*all, id.as_deref(), &cfg, report.as_ref()),
        Command::Numeric { check, report, .. } => cmd_numeric(check, &cfg, report.as_ref()),
        Command::Roots { .. } => cmd_roots(&cfg),
    }
}
