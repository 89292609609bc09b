//! `polyprod` command-line frontend: argument parsing, dispatch, and report rendering.
//!
//! Every command builds one [`Report`]; the JSON rendering is canonical (sorted keys, no timing
//! unless `--timing`), and the text rendering is derived from the same JSON value.

pub mod document;

use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use polyprod::complex::corpus;
use polyprod::decomp::{
    expr_homology, facet_removal_decomposition, loop_report, p_membership, quasitoric_report,
    skeleton_decomposition, Certificate, Decomposition, Grading, Membership,
};
use polyprod::homology::{
    rational_betti_numbers, reduced_homology, surface_classify, DEFAULT_ENUMERATION_CAP,
};
use polyprod::mac::{
    desuspension_criterion, golod_status, mac_homology, polyhedral_homology, rz_homology,
    skeleton_mac_homology, torsion_transfer_check, GolodVerdict, MacError, MacHomology,
};
use polyprod::pseudo::classify;
use polyprod::{HomologyProfile, PairKind, VertexSet};
use serde::Serialize;
use serde_json::{json, Map, Value};

pub use document::{parse_complex, parse_document, ComplexDocument, Input, ParseError};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(
    name = "polyprod",
    version,
    about = "Polyhedral products: homology, decompositions and 𝒫-membership certificates"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Vertex cap for Hochster-sum enumeration (default 20).
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// Acknowledge exponential cost when raising --cap above 20.
    #[arg(long, global = true)]
    pub allow_exponential: bool,
    /// Include wall-clock timing in the report (breaks byte-identical output).
    #[arg(long, global = true)]
    pub timing: bool,
}

/// INPUT is a document path, `-` for stdin, or `corpus:NAME[:p1,p2]`.
#[derive(Subcommand, Debug)]
pub enum Command {
    /// Pseudomanifold classification, neighbourliness, f-vector.
    Classify { input: String },
    /// Reduced integral homology of K.
    Homology { input: String },
    /// Homology of the polyhedral product of the input's pair class (Hochster/BBCG sum).
    Mac { input: String },
    /// Homology of the real moment-angle complex.
    Rz { input: String },
    /// Homology of the skeleton of 𝒵_K (Hochster sum without I = [m]).
    SkeletonMac { input: String },
    /// Golod verdict with the desuspension criterion.
    Golod { input: String },
    /// Theorem "faceinert" decomposition of (CA,A)^{K∖σ}.
    Decompose {
        input: String,
        /// Facet σ, e.g. "1 2 3".
        #[arg(long)]
        facet: String,
    },
    /// Theorem "maniwithboundretskel" decomposition of (CA,A)^{K^{n-1}}.
    SkeletonDecompose { input: String },
    /// Hilton–Milnor report for Ω𝒵_K.
    Loops {
        input: String,
        #[arg(long)]
        cutoff: Option<usize>,
    },
    /// Search for a certificate of Ω(CA,A)^K ∈ 𝒫.
    ProveP { input: String },
    /// ΩM for the quasitoric manifold over the dual of K = ∂P*.
    Quasitoric {
        input: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cutoff: Option<usize>,
    },
    /// Emit a corpus fixture as a canonical document (no NAME: list the catalog).
    Corpus {
        name: Option<String>,
        params: Vec<usize>,
    },
}

/// Verdict of a command, which determines the exit code.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Proved,
    Conditional,
    Unknown,
    Failure,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok | Status::Proved => 0,
            Status::Conditional | Status::Unknown | Status::Failure => 2,
            Status::Error => 1,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub engine_version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<ComplexDocument>,
    pub status: Status,
    pub summary: Vec<String>,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

/// Rendered output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Engine(String),
    #[error("cap {cap} exceeds the default {default}; pass --allow-exponential to acknowledge exponential cost")]
    CapNotAcknowledged { cap: usize, default: usize },
}

fn engine<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Engine(e.to_string())
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

/// Recursively sorts object keys, so output is canonical regardless of map implementation.
pub fn canonical(v: Value) -> Value {
    match v {
        Value::Object(map) => {
            let mut entries: Vec<(String, Value)> = map.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(
                entries
                    .into_iter()
                    .map(|(k, v)| (k, canonical(v)))
                    .collect::<Map<_, _>>(),
            )
        }
        Value::Array(items) => Value::Array(items.into_iter().map(canonical).collect()),
        other => other,
    }
}

/// `[{degree, group, rank, torsion}]` rows of a homology table.
fn table(p: &HomologyProfile) -> Value {
    Value::Array(
        p.iter()
            .map(|(d, g)| json!({"degree": d, "group": g.to_string(), "rank": g.rank, "torsion": p.torsion(d)}))
            .collect(),
    )
}

fn profile_summary(label: &str, p: &HomologyProfile) -> String {
    format!("{label}: {p}")
}

fn mac_result(h: &MacHomology) -> (Value, Vec<String>) {
    let mut summary = vec![
        profile_summary("reduced homology", &h.total),
        format!("Poincaré series: {}", h.total.poincare_polynomial()),
    ];
    for c in h.torsion_contributions() {
        let shifted = c.shifted_profile();
        if let Some((d, t)) = shifted.first_torsion() {
            summary.push(format!(
                "torsion from I = {}: {:?} in degree {d}",
                c.subset, t
            ));
        }
    }
    let contributions: Vec<Value> = h
        .contributions
        .iter()
        .map(|c| json!({"subset": c.subset, "shift": c.shift, "profile": c.profile.to_string(), "table": table(&c.shifted_profile())}))
        .collect();
    (
        json!({
            "variant": h.variant,
            "m": h.m,
            "non_faces": h.non_faces,
            "homology": h.total.to_string(),
            "poincare": h.total.poincare_polynomial(),
            "torsion_free": h.total.is_torsion_free(),
            "table": table(&h.total),
            "contributions": contributions,
        }),
        summary,
    )
}

fn mac_err(e: MacError) -> CliError {
    engine(e)
}

fn parse_facet(s: &str) -> Result<VertexSet, CliError> {
    let vertices = s
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| engine(format!("bad vertex `{t}` in --facet")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    VertexSet::try_from_vertices(vertices)
        .map_err(|v| engine(format!("vertex {v} in --facet is out of range")))
}

fn certificate_value(c: &Certificate) -> Value {
    let validation = match c.validate() {
        Ok(()) => "valid".to_string(),
        Err(e) => format!("invalid: {e}"),
    };
    json!({"certificate": c, "codes": c.codes(), "validation": validation})
}

fn grading_status(c: &Certificate) -> Status {
    match c.grading {
        Grading::Proved => Status::Proved,
        Grading::Conditional { .. } => Status::Conditional,
    }
}

fn decomposition_result(
    d: &Decomposition,
    input: &Input,
    cap: usize,
) -> Result<(Value, Vec<String>), CliError> {
    let predicted = expr_homology(&d.expr).map_err(engine)?;
    let computed = polyhedral_homology(&d.target, &input.pairs, cap)
        .map_err(mac_err)?
        .total;
    let mut summary = vec![d.certificate.goal.statement.clone()];
    summary.push(format!("expression homology: {predicted}"));
    summary.push(format!(
        "consistency with Hochster sum of the target: {}",
        if predicted == computed {
            "exact"
        } else {
            "MISMATCH"
        }
    ));
    Ok((
        json!({
            "expression": d.expr.to_string(),
            "raw_expression": d.raw.to_string(),
            "expr": d.expr,
            "target": d.target,
            "expression_homology": table(&predicted),
            "target_homology": table(&computed),
            "consistent": predicted == computed,
            "citation": d.certificate.citation,
            "certificate": certificate_value(&d.certificate),
        }),
        summary,
    ))
}

type Produced = (Option<ComplexDocument>, Status, Vec<String>, Value);

fn execute(cli: &Cli) -> Result<Produced, CliError> {
    let cap = cli.cap.unwrap_or(DEFAULT_ENUMERATION_CAP);
    if cap > DEFAULT_ENUMERATION_CAP && !cli.allow_exponential {
        return Err(CliError::CapNotAcknowledged {
            cap,
            default: DEFAULT_ENUMERATION_CAP,
        });
    }
    if let Command::Corpus { name, params } = &cli.command {
        return Ok(match name {
            None => {
                let catalog: Vec<Value> = corpus::CATALOG
                    .iter()
                    .map(|(n, p)| json!({"name": n, "parameters": p}))
                    .collect();
                let summary = corpus::CATALOG
                    .iter()
                    .map(|(n, p)| format!("{n}: {p}"))
                    .collect();
                (None, Status::Ok, summary, json!({"catalog": catalog}))
            }
            Some(name) => {
                let spec = if params.is_empty() {
                    name.clone()
                } else {
                    format!(
                        "{name}:{}",
                        params
                            .iter()
                            .map(|p| p.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    )
                };
                let input = document::parse_corpus_spec(&spec)?;
                let doc = input.document();
                let summary = vec![format!(
                    "{}: m = {}, {} facets, dimension {}",
                    doc.name.as_deref().unwrap_or(name),
                    doc.m,
                    doc.facets.len(),
                    input.complex.dim()
                )];
                (None, Status::Ok, summary, json!({"document": doc}))
            }
        });
    }
    let source = match &cli.command {
        Command::Classify { input }
        | Command::Homology { input }
        | Command::Mac { input }
        | Command::Rz { input }
        | Command::SkeletonMac { input }
        | Command::Golod { input }
        | Command::Decompose { input, .. }
        | Command::SkeletonDecompose { input }
        | Command::Loops { input, .. }
        | Command::ProveP { input }
        | Command::Quasitoric { input, .. } => input,
        Command::Corpus { .. } => unreachable!("handled above"),
    };
    let input = parse_complex(source)?;
    let k = &input.complex;
    let doc = Some(input.document());
    let (status, summary, result) = match &cli.command {
        Command::Classify { .. } => {
            let class = classify(k);
            let nb = k.neighbourliness();
            let mut words = vec![];
            if class.pseudomanifold {
                words.push("pseudomanifold".to_string());
                words.push("closed".to_string());
            } else if class.pseudomanifold_with_boundary {
                words.push("pseudomanifold with boundary".to_string());
            } else {
                words.push("not a pseudomanifold".to_string());
            }
            words.push(format!("n={}", class.dimension));
            let summary = vec![
                words.join(", "),
                format!(
                    "{}-neighbourly, complete 1-skeleton: {}",
                    nb.k,
                    k.has_complete_one_skeleton()
                ),
                format!("f-vector: {:?}", k.f_vector()),
            ];
            (
                Status::Ok,
                summary,
                json!({
                    "classification": class,
                    "neighbourliness": nb,
                    "complete_one_skeleton": k.has_complete_one_skeleton(),
                    "ghost_vertices": k.ghost_vertices(),
                    "f_vector": k.f_vector(),
                    "euler_characteristic": k.euler_characteristic(),
                    "minimal_non_faces": k.minimal_non_faces(),
                }),
            )
        }
        Command::Homology { .. } => {
            let h = reduced_homology(k);
            let q = rational_betti_numbers(k);
            let mut result = json!({
                "homology": h.to_string(),
                "table": table(&h),
                "rational_betti": table(&q),
                "torsion_free": h.is_torsion_free(),
                "euler_characteristic": k.euler_characteristic(),
            });
            let mut summary = vec![profile_summary("reduced homology", &h)];
            if k.dim() == 2 {
                let s = surface_classify(k);
                summary.push(format!("surface: {s:?}"));
                result["surface"] = to_value(&s);
            }
            (Status::Ok, summary, result)
        }
        Command::Mac { .. } => {
            let h = match input.pairs.kind {
                PairKind::MomentAngle => mac_homology(k, cap),
                PairKind::Real => rz_homology(k, cap),
                PairKind::General => polyhedral_homology(k, &input.pairs, cap),
            }
            .map_err(mac_err)?;
            let (r, s) = mac_result(&h);
            (Status::Ok, s, r)
        }
        Command::Rz { .. } => {
            let (r, s) = mac_result(&rz_homology(k, cap).map_err(mac_err)?);
            (Status::Ok, s, r)
        }
        Command::SkeletonMac { .. } => {
            let (r, s) = mac_result(&skeleton_mac_homology(k, cap).map_err(mac_err)?);
            (Status::Ok, s, r)
        }
        Command::Golod { .. } => {
            let g = golod_status(k);
            let criterion = desuspension_criterion(k, cap).map_err(engine)?;
            let transfer = torsion_transfer_check(k, cap).ok();
            let mut summary = vec![format!(
                "verdict: {:?}; minimally non-Golod: {}",
                g.verdict,
                match g.minimally_non_golod {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "unknown",
                }
            )];
            summary.extend(g.justification.iter().map(|j| format!("by {j}")));
            summary.extend(g.conditions.iter().map(|c| format!("condition: {c}")));
            if let Some(inner) = &criterion.inner_check {
                summary.push(format!(
                    "desuspension inner check (degree {}): {}",
                    inner.degree,
                    if inner.passed { "passed" } else { "failed" }
                ));
            }
            let status = if g.verdict == GolodVerdict::Unknown {
                Status::Unknown
            } else {
                Status::Ok
            };
            (
                status,
                summary,
                json!({"golod": g, "desuspension_criterion": criterion, "torsion_transfer": transfer}),
            )
        }
        Command::Decompose { facet, .. } => {
            let sigma = parse_facet(facet)?;
            match facet_removal_decomposition(k, sigma, &input.pairs) {
                Ok(d) => {
                    let (r, s) = decomposition_result(&d, &input, cap)?;
                    (Status::Ok, s, r)
                }
                Err(e) => (
                    Status::Failure,
                    vec![format!("hypotheses fail: {e}")],
                    json!({"error": e.to_string()}),
                ),
            }
        }
        Command::SkeletonDecompose { .. } => match skeleton_decomposition(k, &input.pairs) {
            Ok(d) => {
                let (mut r, s) = decomposition_result(&d, &input, cap)?;
                if let Ok(t) = torsion_transfer_check(k, cap) {
                    r["torsion_transfer"] = to_value(&t);
                }
                (Status::Ok, s, r)
            }
            Err(e) => (
                Status::Failure,
                vec![format!("hypotheses fail: {e}")],
                json!({"error": e.to_string()}),
            ),
        },
        Command::Loops { cutoff, .. } => match loop_report(k, *cutoff) {
            Ok(r) => {
                let mut summary = vec![r.statement.clone(), format!("skeleton: {}", r.skeleton)];
                summary.extend(r.factors.iter().map(|f| {
                    format!(
                        "weight {}: {} × ΩS^{}",
                        f.weight, f.multiplicity, f.sphere_dim
                    )
                }));
                summary.push(r.tail.clone());
                let status = grading_status(&r.certificate);
                let mut v = to_value(&r);
                v["skeleton_expression"] = Value::String(r.skeleton.to_string());
                v["certificate"] = certificate_value(&r.certificate);
                (
                    if status == Status::Proved {
                        Status::Ok
                    } else {
                        status
                    },
                    summary,
                    v,
                )
            }
            Err(e) => (
                Status::Failure,
                vec![format!("hypotheses fail: {e}")],
                json!({"error": e.to_string()}),
            ),
        },
        Command::ProveP { .. } => match p_membership(k, &input.pairs) {
            Membership::Derived(c) => {
                let mut summary = vec![
                    format!(
                        "{} — derived by {} ({})",
                        c.goal.statement,
                        c.rule,
                        c.code.as_deref().unwrap_or("-")
                    ),
                    format!(
                        "rules used: {}",
                        c.codes().into_iter().collect::<Vec<_>>().join(", ")
                    ),
                ];
                if let Grading::Conditional { hypotheses } = &c.grading {
                    summary.push(format!("conditional on: {}", hypotheses.join("; ")));
                }
                summary.push(format!("citation: {}", c.citation));
                (
                    grading_status(&c),
                    summary,
                    json!({"membership": "derived", "certificate": certificate_value(&c)}),
                )
            }
            Membership::Failure(f) => {
                let mut summary = vec![format!("{}: {}", f.goal.statement, f.summary())];
                if let Some(o) = &f.obstruction {
                    summary.push(format!(
                        "torsion witness: I = {} gives {:?}-torsion in H_{}(𝒵_K) ({}; {})",
                        o.subset, o.torsion, o.degree, o.status, o.citation
                    ));
                }
                (
                    Status::Failure,
                    summary,
                    json!({"membership": "failure", "report": f}),
                )
            }
        },
        Command::Quasitoric { n, cutoff, .. } => match quasitoric_report(k.m(), *n, k, *cutoff) {
            Ok(q) => {
                let mut summary = vec![q.summary.clone(), format!("by {}", q.citation)];
                if let Some(l) = &q.loop_report {
                    summary.push(format!("Ω𝒵_K: {}", l.statement));
                }
                let status = match &q.p_verdict {
                    Some(c) => {
                        summary.push(format!("ΩM ∈ 𝒫 by {}", c.citation));
                        grading_status(c)
                    }
                    None => Status::Ok,
                };
                if let Some(note) = &q.note {
                    summary.push(format!("note: {note}"));
                }
                let mut v = to_value(&q);
                v["expression_text"] = Value::String(q.expression.to_string());
                if let Some(c) = &q.p_verdict {
                    v["p_verdict"] = certificate_value(c);
                }
                let status = if q.p_verdict.is_none() && 2 * n >= 4 && 2 * n <= 8 {
                    Status::Unknown
                } else {
                    status
                };
                (status, summary, v)
            }
            Err(e) => (
                Status::Failure,
                vec![format!("hypotheses fail: {e}")],
                json!({"error": e.to_string()}),
            ),
        },
        Command::Corpus { .. } => unreachable!("handled above"),
    };
    Ok((doc, status, summary, result))
}

fn render_text_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(m) if !m.is_empty() => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text_value(v, indent + 1, out);
                    }
                    Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text_value(v, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(v))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_text_value(item, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", scalar(item))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Renders a canonical report value as text: header, summary, then the structured result.
pub fn render_text(report: &Value) -> String {
    let mut out = format!(
        "polyprod {} — {}\nstatus: {}\n",
        scalar(&report["engine_version"]),
        scalar(&report["command"]),
        scalar(&report["status"])
    );
    if let Some(lines) = report["summary"].as_array() {
        for line in lines {
            out.push_str(&format!("  {}\n", scalar(line)));
        }
    }
    if let Some(t) = report.get("timing_ms") {
        out.push_str(&format!("timing: {t} ms\n"));
    }
    out.push_str("result:\n");
    render_text_value(&report["result"], 1, &mut out);
    out
}

/// Runs one invocation; `args` excludes the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(
        std::iter::once("polyprod".to_string()).chain(args.iter().cloned()),
    ) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    let start = Instant::now();
    let command = std::iter::once("polyprod".to_string())
        .chain(args)
        .collect::<Vec<_>>()
        .join(" ");
    let (report, stderr) = match execute(&cli) {
        Ok((input, status, summary, result)) => (
            Report {
                command,
                engine_version: ENGINE_VERSION,
                input,
                status,
                summary,
                result,
                timing_ms: None,
            },
            String::new(),
        ),
        Err(e) => (
            Report {
                command,
                engine_version: ENGINE_VERSION,
                input: None,
                status: Status::Error,
                summary: vec![format!("error: {e}")],
                result: json!({"error": e.to_string()}),
                timing_ms: None,
            },
            format!("polyprod: error: {e}\n"),
        ),
    };
    let mut report = report;
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    let value = canonical(to_value(&report));
    let stdout = match cli.format {
        Format::Json => serde_json::to_string_pretty(&value).expect("json") + "\n",
        Format::Text => render_text(&value),
    };
    Outcome {
        stdout,
        stderr,
        code: report.status.exit_code(),
    }
}
