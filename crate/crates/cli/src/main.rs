use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use starcong::canonical::{format_complex, format_matrix, parse_matrix};
use starcong::perturbation::sample_neighborhood_with;
use starcong::report::Real;
use starcong::{
    classify, codimension, hasse_subgraph, no_arrow_certificate, reachable, selftest, stratum_info, to_dot,
    versal_profile, witness, ArrowQuery, CanonicalForm, Error, Execution,
};

#[derive(Parser)]
#[command(name = "starcong", version, about = "*Congruence classes of 2x2 complex matrices and their closure graph")]
struct Cli {
    /// Classification tolerance
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Perturbation bound for witnesses and sampling
    #[arg(long, global = true, default_value_t = 1e-4)]
    delta: f64,
    #[arg(long, global = true, default_value_t = 10_000)]
    samples: u64,
    /// Output format; `graph` defaults to dot, everything else to text
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical form of a matrix given as `a11,a12;a21,a22` or `{"m":[[..],[..]]}`
    Classify { matrix: String },
    /// Real codimension of a class
    Codim { form: String },
    /// Whether `source` degenerates into `target`, with a witness or an obstruction
    Arrow { source: String, target: String },
    /// A perturbation of norm at most --delta carrying `source` into `target`
    Witness { source: String, target: String },
    /// Monte Carlo histogram of classes within --delta of a class
    Sample { form: String },
    /// Hasse diagram of the closure order on the given classes
    Graph { forms: Vec<String> },
    /// Run the built-in consistency suites
    Selftest,
}

const OK: u8 = 0;
const REFUSED: u8 = 1;
const USAGE: u8 = 2;

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NoArrow { .. } | Error::AmbiguousClassification { .. } | Error::WitnessFailed(_) => REFUSED,
            Error::CertificateNotFound { .. } | Error::SingularMatrix | Error::NotHermitian => REFUSED,
            _ => USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: USAGE, message: message.into() }
}

#[derive(Serialize)]
struct RunReport {
    command: &'static str,
    version: &'static str,
    seed: u64,
    inputs: Value,
    outputs: Value,
}

/// What a command produced: text lines, a JSON payload, optional DOT, and
/// the exit code.
struct Output {
    text: String,
    json: Value,
    dot: Option<String>,
    code: u8,
}

fn form(text: &str) -> Result<CanonicalForm, Failure> {
    text.parse().map_err(|e: Error| usage(e.to_string()))
}

fn real_text(x: f64) -> String {
    if x.is_finite() {
        format_complex(x.into())
    } else {
        "inf".into()
    }
}

fn real(x: f64) -> Value {
    serde_json::to_value(Real(x)).unwrap_or(Value::Null)
}

fn run(cli: &Cli) -> Result<(&'static str, Value, Output), Failure> {
    let exec = Execution::default();
    match &cli.command {
        Command::Classify { matrix } => {
            let a = parse_matrix(matrix).map_err(|e| usage(e.to_string()))?;
            let r = classify(&a, cli.tol)?;
            let info = stratum_info(&r.form);
            let text = format!("{}  codim {}\nmargin {}\n", r.form, info.codim_r, real_text(r.margin));
            let json = json!({
                "form": r.form.to_string(),
                "family": r.form.family(),
                "codim": info.codim_r,
                "margin": real(r.margin),
                "scale": real(r.scale),
            });
            Ok(("classify", json!({ "matrix": matrix, "tol": real(cli.tol) }), done(text, json)))
        }
        Command::Codim { form: f } => {
            let f = form(f)?;
            let info = stratum_info(&f);
            let profile = versal_profile(&f);
            let text = format!("{}\n", info.codim_r);
            let json = json!({
                "form": f.to_string(),
                "codim": info.codim_r,
                "tangent_dim": info.dim_r,
                "versal_profile": profile.to_string(),
                "star_count": profile.star_count,
                "eps_count": profile.eps_count,
            });
            Ok(("codim", json!({ "form": f.to_string() }), done(text, json)))
        }
        Command::Arrow { source, target } => {
            let (m, n) = (form(source)?, form(target)?);
            let inputs = json!({ "source": m.to_string(), "target": n.to_string(), "delta": real(cli.delta) });
            if !reachable(&ArrowQuery::new(m, n)) {
                let c = no_arrow_certificate(&m, &n)?;
                let text = format!("reachable: false\ncertificate: {}  margin {}\n", c.kind, real_text(c.margin.0));
                let json = json!({ "reachable": false, "certificate": c });
                return Ok(("arrow", inputs, done(text, json)));
            }
            if m == n {
                let text = "reachable: true\nlazy path: source equals target\n".to_string();
                return Ok(("arrow", inputs, done(text, json!({ "reachable": true, "witness": null }))));
            }
            let w = witness(&m, &n, cli.delta, cli.seed)?;
            let text = format!("reachable: true\nwitness: ||E|| = {}  (delta {})\n", real_text(w.norm_e), real_text(w.delta));
            let json = json!({ "reachable": true, "witness": witness_json(&w) });
            Ok(("arrow", inputs, done(text, json)))
        }
        Command::Witness { source, target } => {
            let (m, n) = (form(source)?, form(target)?);
            let inputs = json!({ "source": m.to_string(), "target": n.to_string(), "delta": real(cli.delta) });
            let w = witness(&m, &n, cli.delta, cli.seed)?;
            let text = format!(
                "E = {}\nS = {}\n||E|| = {}  (delta {})\nM + E classifies as {}  (parameter error {}, tol {})\n",
                format_matrix(&w.e),
                format_matrix(&w.s),
                real_text(w.norm_e),
                real_text(w.delta),
                w.achieved,
                real_text(w.param_error),
                real_text(w.verify_tol),
            );
            Ok(("witness", inputs, done(text, witness_json(&w))))
        }
        Command::Sample { form: f } => {
            let f = form(f)?;
            let r = sample_neighborhood_with(&f, cli.delta, cli.samples, cli.seed, cli.tol, exec)?;
            let h = &r.histogram;
            let mut text = format!(
                "{} samples within {} of {}\nzero {}\nudz {}\npair {}\nhyp {}\ndelta {}\nboundary {}\n",
                r.samples,
                real_text(cli.delta),
                r.source,
                h.zero,
                h.udz,
                h.pair,
                h.hyp,
                h.delta,
                h.boundary
            );
            for s in &r.summaries {
                text.push_str(&format!(
                    "{} distance to reachable: min {} max {} mean {}\n",
                    s.family,
                    real_text(s.min.0),
                    real_text(s.max.0),
                    real_text(s.mean.0)
                ));
            }
            if let Some(d) = r.max_spectrum_drift {
                text.push_str(&format!("max spectrum drift {}\n", real_text(d.0)));
            }
            let inputs = json!({
                "form": f.to_string(),
                "delta": real(cli.delta),
                "samples": cli.samples,
                "tol": real(cli.tol),
            });
            let json = serde_json::to_value(&r).map_err(|e| usage(e.to_string()))?;
            Ok(("sample", inputs, done(text, json)))
        }
        Command::Graph { forms } => {
            let vertices = forms.iter().map(|s| form(s)).collect::<Result<Vec<_>, _>>()?;
            let g = hasse_subgraph(&vertices, exec)?;
            let names: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
            let mut edges: Vec<(String, String)> =
                g.edges.iter().map(|&(u, v)| (names[u].clone(), names[v].clone())).collect();
            edges.sort();
            let text: String = edges.iter().map(|(a, b)| format!("{a} -> {b}\n")).collect();
            let json = json!({
                "vertices": vertices.iter().map(|v| json!({ "form": v.to_string(), "codim": codimension(v) })).collect::<Vec<_>>(),
                "edges": edges,
            });
            let mut out = done(text, json);
            out.dot = Some(to_dot(&g));
            Ok(("graph", json!({ "forms": names }), out))
        }
        Command::Selftest => {
            let suites = selftest::run(exec);
            let text: String = suites
                .iter()
                .map(|s| {
                    let mut line = format!(
                        "{}  {} ({} checked)\n",
                        if s.passed() { "ok  " } else { "FAIL" },
                        s.name,
                        s.checked
                    );
                    for f in &s.failures {
                        line.push_str(&format!("      {f}\n"));
                    }
                    line
                })
                .collect();
            let all = suites.iter().all(|s| s.passed());
            let json = json!({
                "passed": all,
                "suites": suites.iter().map(|s| json!({
                    "name": s.name,
                    "checked": s.checked,
                    "passed": s.passed(),
                    "failures": s.failures,
                })).collect::<Vec<_>>(),
            });
            let mut out = done(text, json);
            out.code = if all { OK } else { REFUSED };
            Ok(("selftest", json!({}), out))
        }
    }
}

fn done(text: String, json: Value) -> Output {
    Output { text, json, dot: None, code: OK }
}

fn witness_json(w: &starcong::Witness) -> Value {
    json!({
        "e": format_matrix(&w.e),
        "s": format_matrix(&w.s),
        "norm_e": real(w.norm_e),
        "delta": real(w.delta),
        "classified_as": w.achieved.to_string(),
        "param_error": real(w.param_error),
        "verify_tol": real(w.verify_tol),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let is_graph = matches!(cli.command, Command::Graph { .. });
    let format = cli.format.unwrap_or(if is_graph { Format::Dot } else { Format::Text });
    if format == Format::Dot && !is_graph {
        eprintln!("error: --format dot is only available for graph");
        return ExitCode::from(USAGE);
    }
    let (command, inputs, out) = match run(&cli) {
        Ok(r) => r,
        Err(f) => {
            eprintln!("error: {}", f.message);
            return ExitCode::from(f.code);
        }
    };
    let rendered = match format {
        Format::Text => out.text,
        Format::Dot => out.dot.unwrap_or_default(),
        Format::Json => {
            let report = RunReport { command, version: env!("CARGO_PKG_VERSION"), seed: cli.seed, inputs, outputs: out.json };
            match serde_json::to_string_pretty(&report) {
                Ok(s) => s + "\n",
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(USAGE);
                }
            }
        }
    };
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(rendered.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(USAGE);
    }
    ExitCode::from(out.code)
}
