//! Batch commands over algebra documents.
//!
//! Every command returns an [`Outcome`] with the text to print and a stable
//! exit code (see [`exit`]). Output is a pure function of the arguments and
//! the input files.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use graded_lie::constructions::{self, RandomParams};
use graded_lie::document::{
    content_hash, parse_json, to_json_string, AlgebraDocument, CertificateDocument, FORMAT_VERSION,
};
use graded_lie::theorem::{self, Certificate, PrimeScanVerdict, ScanConfig};
use graded_lie::{Error, GradedAlgebra, GroupElement};
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub mod exit {
    pub const OK: u8 = 0;
    pub const THEOREM_VIOLATION: u8 = 1;
    pub const REJECTED: u8 = 2;
    pub const PARSE_ERROR: u8 = 3;
    pub const USAGE: u8 = 4;
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn fail(code: u8, msg: impl Into<String>) -> Outcome {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "graded-lie", version, about = "Checks gradings of Lie algebras by groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Jacobi identity and the grading axiom.
    Validate { path: PathBuf },
    /// Run the orthogonality, nested-bracket and closing-identity checks.
    Check {
        path: PathBuf,
        #[arg(long, default_value_t = theorem::DEFAULT_MAX_LEN)]
        max_len: usize,
        #[arg(long, default_value_t = theorem::DEFAULT_TUPLE_BUDGET)]
        budget: u64,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a pair of nonzero orthogonal graded ideals.
    PrimeScan {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a built-in example document.
    Examples {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a seeded random graded algebra.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        blocks: usize,
        /// sN, fN, z, zN, or a product such as s3xz.
        #[arg(long, default_value = "s3")]
        backend: String,
        #[arg(long, default_value_t = 24)]
        max_dim: usize,
        #[arg(long, default_value_t = 8)]
        max_support: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verify a certificate (or every certificate of a report) against an algebra.
    VerifyCert { algebra: PathBuf, certificate: PathBuf },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome {
                        code: exit::OK,
                        stdout: text,
                        stderr: String::new(),
                    }
                }
                _ => Outcome::fail(exit::USAGE, text),
            };
        }
    };
    match cli.command {
        Command::Validate { path } => cmd_validate(&path),
        Command::Check {
            path,
            max_len,
            budget,
            out,
        } => cmd_check(
            &path,
            ScanConfig {
                max_len,
                tuple_budget: budget,
            },
            out.as_deref(),
        ),
        Command::PrimeScan { path, out } => cmd_prime_scan(&path, out.as_deref()),
        Command::Examples { name, out } => cmd_examples(&name, out.as_deref()),
        Command::Random {
            seed,
            blocks,
            backend,
            max_dim,
            max_support,
            out,
        } => {
            let backend = match constructions::parse_backend(&backend) {
                Ok(b) => b,
                Err(e) => return Outcome::fail(exit::USAGE, e.to_string()),
            };
            let params = RandomParams {
                blocks,
                backend,
                max_dim,
                max_support,
            };
            cmd_random(seed, &params, out.as_deref())
        }
        Command::VerifyCert {
            algebra,
            certificate,
        } => cmd_verify_certificate(&algebra, &certificate),
    }
}

struct Loaded {
    name: String,
    algebra: GradedAlgebra,
}

fn load(path: &Path) -> Result<Loaded, Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::fail(exit::PARSE_ERROR, format!("{}: {e}", path.display())))?;
    let parse_fail = |e: Error| Outcome::fail(exit::PARSE_ERROR, format!("{}: {e}", path.display()));
    let doc = AlgebraDocument::parse(&text).map_err(parse_fail)?;
    let algebra = doc.to_graded().map_err(parse_fail)?;
    let name = if doc.metadata.name.is_empty() {
        path.display().to_string()
    } else {
        doc.metadata.name.clone()
    };
    Ok(Loaded { name, algebra })
}

/// Loads a document and insists on both axioms.
fn load_valid(path: &Path) -> Result<Loaded, Outcome> {
    let loaded = load(path)?;
    if let Err(e) = loaded.algebra.validate() {
        let mut out = Outcome::fail(exit::REJECTED, format!("{}: {e}", path.display()));
        out.stdout = validation_text(&loaded);
        return Err(out);
    }
    Ok(loaded)
}

fn header(verb: &str, loaded: &Loaded) -> String {
    format!(
        "{verb}: {} (dimension {}, group {})\n",
        loaded.name,
        loaded.algebra.dim(),
        loaded.algebra.ctx()
    )
}

fn validation_text(loaded: &Loaded) -> String {
    let a = &loaded.algebra;
    let mut out = header("validate", loaded);
    let jacobi = a.validate_algebra();
    if jacobi.is_valid() {
        let _ = writeln!(out, "Jacobi identity: ok");
    } else {
        let _ = writeln!(out, "Jacobi identity: {} failing triple(s)", jacobi.failures.len());
        for f in &jacobi.failures {
            let (i, j, k) = f.triple;
            let _ = writeln!(out, "  triple ({i}, {j}, {k}): residual {}", f.residual);
        }
    }
    let grading = a.validate_grading();
    if grading.is_valid() {
        let _ = writeln!(out, "grading axiom: ok");
    } else {
        let _ = writeln!(out, "grading axiom: {} violating pair(s)", grading.violations.len());
        for v in &grading.violations {
            let (i, j) = v.pair;
            let _ = writeln!(
                out,
                "  pair ({i}, {j}) with labels ({}, {}): [e{i}, e{j}] leaves L_{} at coordinates {:?}",
                a.labels()[i],
                a.labels()[j],
                v.expected,
                v.offending
            );
        }
    }
    let verdict = if jacobi.is_valid() && grading.is_valid() {
        "valid"
    } else {
        "invalid"
    };
    let _ = writeln!(out, "{verdict}");
    out
}

pub fn cmd_validate(path: &Path) -> Outcome {
    let loaded = match load(path) {
        Ok(l) => l,
        Err(o) => return o,
    };
    let stdout = validation_text(&loaded);
    let code = if loaded.algebra.validate().is_ok() {
        exit::OK
    } else {
        exit::REJECTED
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommandEcho {
    pub verb: String,
    pub input: String,
    pub flags: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindingDocument {
    pub check: String,
    pub message: String,
}

/// Machine-readable output of `check` and `prime-scan`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub format_version: String,
    pub command: CommandEcho,
    pub algebra_hash: String,
    pub verdicts: BTreeMap<String, Value>,
    pub certificates: Vec<CertificateDocument>,
    pub findings: Vec<FindingDocument>,
    pub counts: BTreeMap<String, u64>,
    pub truncated: bool,
}

fn pair_text(g: &GroupElement, h: &GroupElement) -> String {
    format!("({g}, {h})")
}

fn certificate_text(c: &Certificate) -> String {
    let what = match &c.pair {
        Some((g, h)) => format!("pair {}", pair_text(g, h)),
        None => "candidate pair".to_string(),
    };
    format!(
        "{what}: dim I = {}, dim J = {}, nonzero = {}, bracket zero = {}, graded = {}",
        c.ideal_i.dim(),
        c.ideal_j.dim(),
        c.ideals_nonzero,
        c.bracket_zero,
        c.ideals_graded
    )
}

fn write_report(out: Option<&Path>, report: &ReportDocument) -> Result<(), Outcome> {
    if let Some(path) = out {
        std::fs::write(path, to_json_string(report)).map_err(|e| {
            Outcome::fail(exit::USAGE, format!("cannot write {}: {e}", path.display()))
        })?;
    }
    Ok(())
}

fn run_check(loaded: &Loaded, config: ScanConfig) -> graded_lie::Result<(String, ReportDocument)> {
    let a = &loaded.algebra;
    let hash = content_hash(a);
    let mut text = header("check", loaded);
    let mut findings: Vec<theorem::Finding> = Vec::new();
    let mut counts = BTreeMap::new();
    let mut verdicts = BTreeMap::new();
    let mut truncated = false;

    let support = a.support();
    let shown: Vec<String> = support.iter().map(ToString::to_string).collect();
    let _ = writeln!(text, "algebra hash: {hash}");
    let _ = writeln!(text, "support: {{{}}}", shown.join(", "));

    let prop = theorem::check_proposition(a)?;
    findings.extend(prop.findings.iter().cloned());
    counts.insert("noncommuting_pairs".into(), prop.certificates.len() as u64);
    if prop.certificates.is_empty() {
        let _ = writeln!(text, "orthogonality: no noncommuting pairs");
    } else {
        let _ = writeln!(
            text,
            "orthogonality: {} noncommuting pair(s), one certificate each",
            prop.certificates.len()
        );
        for c in &prop.certificates {
            let _ = writeln!(text, "  {}", certificate_text(c));
        }
    }

    let sweep = theorem::star_sweep(a, config)?;
    truncated |= sweep.truncated;
    let star_violations: Vec<_> = sweep.violations().collect();
    for v in &star_violations {
        let (i, j) = v.violating_pair.expect("violation");
        findings.push(theorem::Finding {
            check: "star",
            message: format!(
                "nested bracket of {:?} has dimension {} but positions {i} and {j} do not commute",
                v.tuple.iter().map(ToString::to_string).collect::<Vec<_>>(),
                v.bracket_dim
            ),
        });
    }
    counts.insert("star_tuples_examined".into(), sweep.tuples_examined);
    counts.insert("star_nonzero_brackets".into(), sweep.results.len() as u64);
    counts.insert("star_violations".into(), star_violations.len() as u64);
    let _ = writeln!(
        text,
        "nested brackets up to length {}: {} tuples examined, {} nonzero, {} violation(s){}",
        config.max_len,
        sweep.tuples_examined,
        sweep.results.len(),
        star_violations.len(),
        if sweep.truncated { " [budget truncated]" } else { "" }
    );
    if let Some(w) = &sweep.warning {
        let _ = writeln!(text, "  warning: {w}");
    }

    let middle = config.max_len.saturating_sub(2);
    let mut closing_tuples = 0;
    for c in &prop.certificates {
        let (g, h) = c.pair.as_ref().expect("pair certificates");
        let r = theorem::final_identity_check(a, g, h, middle, config.tuple_budget)?;
        closing_tuples += r.tuples_checked;
        truncated |= r.truncated;
        for v in &r.violations {
            findings.push(theorem::Finding {
                check: "closing-identity",
                message: format!(
                    "[L_{h}, [..., L_{g}]] with middle {:?} is nonzero",
                    v.iter().map(ToString::to_string).collect::<Vec<_>>()
                ),
            });
        }
        let _ = writeln!(
            text,
            "closing identity for {} with middle length <= {middle}: {} tuples, {}{}",
            pair_text(g, h),
            r.tuples_checked,
            if r.violations.is_empty() {
                "all zero".to_string()
            } else {
                format!("{} nonzero", r.violations.len())
            },
            if r.truncated { " [budget truncated]" } else { "" }
        );
    }
    counts.insert("closing_tuples_checked".into(), closing_tuples);

    let support_report = theorem::support_subgroup_report(a)?;
    verdicts.insert("support_abelian".into(), Value::Bool(support_report.abelian));
    match (&support_report.violation, &support_report.certificate) {
        (Some((g, h)), Some(c)) => {
            let _ = writeln!(
                text,
                "support subgroup: not abelian, {} do not commute; certificate {} so the algebra is not graded-prime",
                pair_text(g, h),
                if c.claims_valid() { "valid" } else { "INVALID" }
            );
            verdicts.insert(
                "first_noncommuting_pair".into(),
                Value::Array(vec![g.to_literal(), h.to_literal()]),
            );
        }
        _ => {
            let _ = writeln!(text, "support subgroup: abelian (all support labels commute)");
            let _ = writeln!(text, "summary: no noncommuting pairs; support subgroup abelian");
        }
    }

    verdicts.insert("theorem_checks_pass".into(), Value::Bool(findings.is_empty()));
    if findings.is_empty() {
        let _ = writeln!(text, "findings: none");
    } else {
        let _ = writeln!(text, "findings: {}", findings.len());
        for f in &findings {
            let _ = writeln!(text, "  FINDING [{}]: {}", f.check, f.message);
        }
    }
    if truncated {
        let _ = writeln!(text, "budget truncated: results are partial");
    }

    let report = ReportDocument {
        format_version: FORMAT_VERSION.into(),
        command: CommandEcho {
            verb: "check".into(),
            input: String::new(),
            flags: BTreeMap::from([
                ("max_len".to_string(), config.max_len.to_string()),
                ("budget".to_string(), config.tuple_budget.to_string()),
            ]),
        },
        algebra_hash: hash.clone(),
        verdicts,
        certificates: prop
            .certificates
            .iter()
            .map(|c| CertificateDocument::from_certificate(c, &hash))
            .collect(),
        findings: findings
            .iter()
            .map(|f| FindingDocument {
                check: f.check.to_string(),
                message: f.message.clone(),
            })
            .collect(),
        counts,
        truncated,
    };
    Ok((text, report))
}

pub fn cmd_check(path: &Path, config: ScanConfig, out: Option<&Path>) -> Outcome {
    let loaded = match load_valid(path) {
        Ok(l) => l,
        Err(o) => return o,
    };
    let (text, mut report) = match run_check(&loaded, config) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(exit::REJECTED, e.to_string()),
    };
    report.command.input = path.display().to_string();
    if let Err(o) = write_report(out, &report) {
        return o;
    }
    Outcome {
        code: if report.findings.is_empty() {
            exit::OK
        } else {
            exit::THEOREM_VIOLATION
        },
        stdout: text,
        stderr: String::new(),
    }
}

pub fn cmd_prime_scan(path: &Path, out: Option<&Path>) -> Outcome {
    let loaded = match load_valid(path) {
        Ok(l) => l,
        Err(o) => return o,
    };
    let a = &loaded.algebra;
    let verdict = match theorem::prime_scan(a) {
        Ok(v) => v,
        Err(e) => return Outcome::fail(exit::REJECTED, e.to_string()),
    };
    let hash = content_hash(a);
    let mut text = header("prime-scan", &loaded);
    let mut verdicts = BTreeMap::new();
    let mut certificates = Vec::new();
    let mut counts = BTreeMap::new();
    match &verdict {
        PrimeScanVerdict::NotGradedPrime(c) => {
            let _ = writeln!(text, "verdict: NotGradedPrime");
            let _ = writeln!(text, "  {}", certificate_text(c));
            for (name, ideal) in [("I", &c.ideal_i), ("J", &c.ideal_j)] {
                let rows: Vec<String> = ideal.basis().iter().map(ToString::to_string).collect();
                let _ = writeln!(text, "  {name} = span{{{}}}", rows.join(", "));
            }
            verdicts.insert("verdict".into(), Value::String("NotGradedPrime".into()));
            certificates.push(CertificateDocument::from_certificate(c, &hash));
        }
        PrimeScanVerdict::NoWitnessFound {
            candidates_examined,
        } => {
            let _ = writeln!(
                text,
                "verdict: NoWitnessFound ({candidates_examined} candidate ideals examined; the search is incomplete)"
            );
            verdicts.insert("verdict".into(), Value::String("NoWitnessFound".into()));
            counts.insert("candidates_examined".into(), *candidates_examined as u64);
        }
    }
    let report = ReportDocument {
        format_version: FORMAT_VERSION.into(),
        command: CommandEcho {
            verb: "prime-scan".into(),
            input: path.display().to_string(),
            flags: BTreeMap::new(),
        },
        algebra_hash: hash,
        verdicts,
        certificates,
        findings: Vec::new(),
        counts,
        truncated: false,
    };
    if let Err(o) = write_report(out, &report) {
        return o;
    }
    Outcome {
        code: exit::OK,
        stdout: text,
        stderr: String::new(),
    }
}

fn emit_document(text: String, out: Option<&Path>) -> Outcome {
    match out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome {
                code: exit::OK,
                stdout: format!("wrote {}\n", path.display()),
                stderr: String::new(),
            },
            Err(e) => Outcome::fail(exit::USAGE, format!("cannot write {}: {e}", path.display())),
        },
        None => Outcome {
            code: exit::OK,
            stdout: text,
            stderr: String::new(),
        },
    }
}

pub fn example_notes(name: &str) -> &'static str {
    match name {
        "sl2-z" => "sl(2) on h, e, f graded by Z: h -> 0, e -> 1, f -> -1",
        "sl2-pauli" => "sl(2) with the Pauli grading by Z/2 x Z/2",
        "heisenberg" => "Heisenberg algebra [x, y] = z graded by Z^2",
        "s3-witness" => "two Z/2-graded copies of sl(2) placed in S3 along (1 2) and (1 3)",
        "free-witness" => "two copies of [x, y] = y with y labelled by the free generators a and b",
        "group-ring-s3" => "commutator algebra of the group ring of S3, labelled by group elements (not a grading)",
        "zero" => "zero-dimensional algebra",
        _ => "",
    }
}

/// The document text for a named example.
pub fn example_document(name: &str) -> graded_lie::Result<String> {
    let a = constructions::example(name)?;
    Ok(AlgebraDocument::from_graded(&a, name, example_notes(name)).to_json())
}

pub fn cmd_examples(name: &str, out: Option<&Path>) -> Outcome {
    match example_document(name) {
        Ok(text) => emit_document(text, out),
        Err(e) => Outcome::fail(
            exit::USAGE,
            format!("{e}; known examples: {}", constructions::EXAMPLE_NAMES.join(", ")),
        ),
    }
}

pub fn random_document(seed: u64, params: &RandomParams) -> graded_lie::Result<String> {
    let a = constructions::random_graded(seed, params)?;
    let notes = format!(
        "blocks <= {}, backend {}, max_dim {}, max_support {}",
        params.blocks, params.backend, params.max_dim, params.max_support
    );
    Ok(AlgebraDocument::from_graded(&a, &format!("random-{seed}"), &notes).to_json())
}

pub fn cmd_random(seed: u64, params: &RandomParams, out: Option<&Path>) -> Outcome {
    match random_document(seed, params) {
        Ok(text) => emit_document(text, out),
        Err(e) => Outcome::fail(exit::USAGE, e.to_string()),
    }
}

pub fn cmd_verify_certificate(algebra_path: &Path, certificate_path: &Path) -> Outcome {
    let loaded = match load_valid(algebra_path) {
        Ok(l) => l,
        Err(o) => return o,
    };
    let a = &loaded.algebra;
    let text = match std::fs::read_to_string(certificate_path) {
        Ok(t) => t,
        Err(e) => {
            return Outcome::fail(exit::PARSE_ERROR, format!("{}: {e}", certificate_path.display()))
        }
    };
    let parse_fail =
        |e: Error| Outcome::fail(exit::PARSE_ERROR, format!("{}: {e}", certificate_path.display()));
    let raw: Value = match parse_json(&text) {
        Ok(v) => v,
        Err(e) => return parse_fail(e),
    };
    let docs: Vec<CertificateDocument> = if raw.get("certificates").is_some() {
        match parse_json::<ReportDocument>(&text) {
            Ok(r) => r.certificates,
            Err(e) => return parse_fail(e),
        }
    } else {
        match parse_json::<CertificateDocument>(&text) {
            Ok(c) => vec![c],
            Err(e) => return parse_fail(e),
        }
    };
    if docs.is_empty() {
        return Outcome::fail(exit::REJECTED, "no certificates to verify");
    }
    let hash = content_hash(a);
    let mut out = header("verify-cert", &loaded);
    let mut all_valid = true;
    for (k, doc) in docs.iter().enumerate() {
        if doc.algebra_hash != hash {
            let _ = writeln!(
                out,
                "certificate {k}: REJECTED, it names algebra {} but this algebra hashes to {hash}",
                doc.algebra_hash
            );
            all_valid = false;
            continue;
        }
        let checked = doc
            .to_certificate(a)
            .and_then(|cert| cert.verify(a).map(|check| (cert, check)));
        match checked {
            Ok((cert, check)) if check.is_valid() => {
                let _ = writeln!(out, "certificate {k}: VALID ({})", certificate_text(&cert));
            }
            Ok((_, check)) => {
                all_valid = false;
                let _ = writeln!(out, "certificate {k}: REJECTED, {}", check.failures().join("; "));
            }
            Err(e) => {
                all_valid = false;
                let _ = writeln!(out, "certificate {k}: REJECTED, {e}");
            }
        }
    }
    Outcome {
        code: if all_valid { exit::OK } else { exit::REJECTED },
        stdout: out,
        stderr: String::new(),
    }
}
