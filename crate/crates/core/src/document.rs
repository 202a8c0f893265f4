//! JSON documents for algebras and certificates.
//!
//! Rationals are strings `"num/den"` (denominator omitted when 1). Group
//! elements use the literals of [`GroupElement::to_literal`]. Serialization is
//! deterministic: pretty-printed with a trailing newline.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::grading::GradedAlgebra;
use crate::group::{GroupContext, GroupElement};
use crate::lie::LieAlgebra;
use crate::linalg::{format_rational, parse_rational, Subspace, Vector};
use crate::theorem::{Certificate, IdealSource};

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default)]
    pub name: String,
    #[serde(default)]
    pub notes: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketRecord {
    pub i: usize,
    pub j: usize,
    pub value: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub format_version: String,
    #[serde(default)]
    pub metadata: Metadata,
    pub group: Value,
    pub dimension: usize,
    pub basis_labels: Vec<Value>,
    pub brackets: Vec<BracketRecord>,
}

pub fn vector_to_strings(v: &Vector) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn parse_vector(entries: &[String], dim: usize, at: &str) -> Result<Vector> {
    if entries.len() != dim {
        return Err(Error::Parse(format!(
            "{at}: expected {dim} entries, found {}",
            entries.len()
        )));
    }
    entries
        .iter()
        .enumerate()
        .map(|(k, s)| parse_rational(s).map_err(|e| Error::Parse(format!("{at}[{k}]: {e}"))))
        .collect()
}

fn located(at: &str) -> impl Fn(Error) -> Error + '_ {
    move |e| match e {
        Error::Parse(msg) => Error::Parse(format!("{at}: {msg}")),
        other => Error::Parse(format!("{at}: {other}")),
    }
}

/// Parses JSON text into a document, reporting the failing field path.
pub fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if path == "." || path.is_empty() {
            Error::Parse(inner.to_string())
        } else {
            Error::Parse(format!("{path}: {inner}"))
        }
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

impl AlgebraDocument {
    pub fn from_graded(a: &GradedAlgebra, name: &str, notes: &str) -> AlgebraDocument {
        AlgebraDocument {
            format_version: FORMAT_VERSION.to_string(),
            metadata: Metadata {
                name: name.to_string(),
                notes: notes.to_string(),
            },
            group: a.ctx().to_description(),
            dimension: a.dim(),
            basis_labels: a.labels().iter().map(GroupElement::to_literal).collect(),
            brackets: a
                .algebra()
                .constants()
                .map(|(i, j, v)| BracketRecord {
                    i,
                    j,
                    value: vector_to_strings(v),
                })
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<AlgebraDocument> {
        parse_json(text)
    }

    /// Builds the graded algebra, checking structure but not the axioms.
    pub fn to_graded(&self) -> Result<GradedAlgebra> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "format_version: unsupported version {:?}",
                self.format_version
            )));
        }
        let ctx = GroupContext::from_description(&self.group)?;
        let n = self.dimension;
        if self.basis_labels.len() != n {
            return Err(Error::Parse(format!(
                "basis_labels: expected {n} labels, found {}",
                self.basis_labels.len()
            )));
        }
        let labels = self
            .basis_labels
            .iter()
            .enumerate()
            .map(|(k, v)| ctx.parse_literal(v).map_err(located(&format!("basis_labels[{k}]"))))
            .collect::<Result<Vec<_>>>()?;
        let mut records = Vec::with_capacity(self.brackets.len());
        for (k, r) in self.brackets.iter().enumerate() {
            if r.i >= r.j || r.j >= n {
                return Err(Error::Parse(format!(
                    "brackets[{k}]: need 0 <= i < j < {n}, got i={} j={}",
                    r.i, r.j
                )));
            }
            let v = parse_vector(&r.value, n, &format!("brackets[{k}].value"))?;
            records.push((r.i, r.j, v));
        }
        let algebra = LieAlgebra::new(n, records).map_err(located("brackets"))?;
        GradedAlgebra::new(algebra, ctx, labels)
    }

    pub fn to_json(&self) -> String {
        to_json_string(self)
    }
}

/// Hex SHA-256 of the mathematical content (group, dimension, labels,
/// brackets) in compact canonical JSON. Metadata does not enter the hash.
pub fn content_hash(a: &GradedAlgebra) -> String {
    let doc = AlgebraDocument::from_graded(a, "", "");
    let canonical = serde_json::json!({
        "group": doc.group,
        "dimension": doc.dimension,
        "basis_labels": doc.basis_labels,
        "brackets": doc.brackets,
    });
    let digest = Sha256::digest(canonical.to_string().as_bytes());
    hex::encode(digest)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SourceDocument {
    Basis(usize),
    Component(Value),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub format_version: String,
    pub algebra_hash: String,
    pub pair: Option<(Value, Value)>,
    pub sources: (SourceDocument, SourceDocument),
    pub ideal_i: Vec<Vec<String>>,
    pub ideal_j: Vec<Vec<String>>,
    pub ideals_nonzero: bool,
    pub bracket_zero: bool,
    pub ideals_graded: bool,
}

fn subspace_rows(s: &Subspace) -> Vec<Vec<String>> {
    s.basis().iter().map(vector_to_strings).collect()
}

fn source_doc(s: &IdealSource) -> SourceDocument {
    match s {
        IdealSource::Basis(i) => SourceDocument::Basis(*i),
        IdealSource::Component(g) => SourceDocument::Component(g.to_literal()),
    }
}

impl CertificateDocument {
    pub fn from_certificate(cert: &Certificate, algebra_hash: &str) -> CertificateDocument {
        CertificateDocument {
            format_version: FORMAT_VERSION.to_string(),
            algebra_hash: algebra_hash.to_string(),
            pair: cert
                .pair
                .as_ref()
                .map(|(g, h)| (g.to_literal(), h.to_literal())),
            sources: (source_doc(&cert.sources.0), source_doc(&cert.sources.1)),
            ideal_i: subspace_rows(&cert.ideal_i),
            ideal_j: subspace_rows(&cert.ideal_j),
            ideals_nonzero: cert.ideals_nonzero,
            bracket_zero: cert.bracket_zero,
            ideals_graded: cert.ideals_graded,
        }
    }

    /// Reads the certificate against the group and dimension of `a`.
    /// Ideal rows are re-reduced, so any spanning set is accepted.
    pub fn to_certificate(&self, a: &GradedAlgebra) -> Result<Certificate> {
        let ctx = a.ctx();
        let n = a.dim();
        let subspace = |rows: &[Vec<String>], at: &str| -> Result<Subspace> {
            let vectors = rows
                .iter()
                .enumerate()
                .map(|(k, r)| {
                    if r.len() != n {
                        return Err(Error::DimensionMismatch {
                            expected: n,
                            found: r.len(),
                        });
                    }
                    parse_vector(r, n, &format!("{at}[{k}]"))
                })
                .collect::<Result<Vec<_>>>()?;
            Subspace::span(n, vectors)
        };
        let source = |s: &SourceDocument| -> Result<IdealSource> {
            Ok(match s {
                SourceDocument::Basis(i) => IdealSource::Basis(*i),
                SourceDocument::Component(v) => IdealSource::Component(ctx.parse_literal(v)?),
            })
        };
        Ok(Certificate {
            pair: match &self.pair {
                Some((g, h)) => Some((ctx.parse_literal(g)?, ctx.parse_literal(h)?)),
                None => None,
            },
            sources: (source(&self.sources.0)?, source(&self.sources.1)?),
            ideal_i: subspace(&self.ideal_i, "ideal_i")?,
            ideal_j: subspace(&self.ideal_j, "ideal_j")?,
            ideals_nonzero: self.ideals_nonzero,
            bracket_zero: self.bracket_zero,
            ideals_graded: self.ideals_graded,
        })
    }
}
