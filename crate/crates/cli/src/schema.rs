//! The JSON file formats: complex documents, operator documents, and the
//! shared rational-string conventions.
//!
//! Rationals travel as strings in lowest terms ("3/4", "-2", "0"). A
//! complex document lists its vertex labels in declaration order, which is
//! the total order used everywhere downstream. Operator documents carry
//! either explicit `terms` or the `weighted` shorthand for a grade-1 sum of
//! per-vertex generators.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use cosimplex_core::calculus::{weighted_codiff, weighted_diff, CodiffForm, DiffForm};
use cosimplex_core::hypergraph::{Hyperedge, Hypergraph, VertexSet};
use cosimplex_core::linalg::{parse_rational, rational_string};

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub declared_kind: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OperatorDocument {
    pub variance: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grade: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<OperatorTerm>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weighted: Option<WeightedSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OperatorTerm {
    pub vertices: Vec<String>,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WeightedSpec {
    pub f: BTreeMap<String, String>,
}

/// An operator together with its variance, ready to act.
#[derive(Debug, Clone)]
pub enum LoadedOperator {
    Diff(DiffForm),
    Codiff(CodiffForm),
}

impl LoadedOperator {
    pub fn grade(&self) -> usize {
        match self {
            LoadedOperator::Diff(f) => f.grade(),
            LoadedOperator::Codiff(f) => f.grade(),
        }
    }

    pub fn variance_name(&self) -> &'static str {
        match self {
            LoadedOperator::Diff(_) => "diff",
            LoadedOperator::Codiff(_) => "codiff",
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Parse(format!("cannot parse {}: {e}", path.display())))
}

pub fn parse_complex_document(
    doc: &ComplexDocument,
    max_vertices: usize,
) -> Result<Hypergraph, CliError> {
    let vertices = VertexSet::with_limit(doc.vertices.iter().cloned(), max_vertices)
        .map_err(|e| CliError::Parse(e.to_string()))?;
    let edges = doc
        .edges
        .iter()
        .map(|labels| {
            Hyperedge::from_labels(&vertices, labels).map_err(|e| CliError::Parse(e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Hypergraph::from_edges(vertices, edges))
}

/// Loads a complex without enforcing the declared kind; returns the kind
/// string for the caller to check.
pub fn load_complex_raw(
    path: &Path,
    max_vertices: usize,
) -> Result<(Hypergraph, Option<String>), CliError> {
    let doc: ComplexDocument = read_json(path)?;
    let h = parse_complex_document(&doc, max_vertices)?;
    if let Some(kind) = &doc.declared_kind {
        if !matches!(kind.as_str(), "simplicial" | "cosimplicial" | "hypergraph") {
            return Err(CliError::Parse(format!("unknown declared_kind {kind:?}")));
        }
    }
    Ok((h, doc.declared_kind))
}

pub fn kind_holds(h: &Hypergraph, kind: &str) -> bool {
    match kind {
        "simplicial" => h.is_simplicial(),
        "cosimplicial" => h.is_cosimplicial(),
        _ => true,
    }
}

/// Loads a complex and verifies its declared kind, when present.
pub fn load_complex(path: &Path, max_vertices: usize) -> Result<Hypergraph, CliError> {
    let (h, declared) = load_complex_raw(path, max_vertices)?;
    if let Some(kind) = declared {
        if !kind_holds(&h, &kind) {
            return Err(CliError::KindMismatch(format!(
                "{} declares kind {kind:?} but does not satisfy it",
                path.display()
            )));
        }
    }
    Ok(h)
}

pub fn complex_to_document(h: &Hypergraph) -> ComplexDocument {
    let vertices = h.vertex_set();
    ComplexDocument {
        vertices: vertices.labels().to_vec(),
        edges: h
            .edges()
            .map(|e| e.labels(vertices).iter().map(|s| s.to_string()).collect())
            .collect(),
        declared_kind: None,
    }
}

fn term_to_indexed(
    term: &OperatorTerm,
    vertices: &VertexSet,
) -> Result<(Vec<usize>, cosimplex_core::Rational), CliError> {
    let mut indices = Vec::with_capacity(term.vertices.len());
    for label in &term.vertices {
        let idx = vertices.index_of(label).ok_or_else(|| {
            CliError::Parse(format!("unknown vertex label {label:?} in operator"))
        })?;
        if indices.contains(&idx) {
            return Err(CliError::Parse(format!(
                "repeated vertex {label:?} in operator term"
            )));
        }
        indices.push(idx);
    }
    let coeff = parse_rational(&term.coeff)
        .ok_or_else(|| CliError::Parse(format!("bad rational {:?}", term.coeff)))?;
    Ok((indices, coeff))
}

pub fn parse_operator_document(
    doc: &OperatorDocument,
    vertices: &VertexSet,
) -> Result<LoadedOperator, CliError> {
    let is_diff = match doc.variance.as_str() {
        "diff" => true,
        "codiff" => false,
        other => {
            return Err(CliError::Parse(format!(
                "variance must be \"diff\" or \"codiff\", got {other:?}"
            )))
        }
    };
    let indexed: Vec<(Vec<usize>, cosimplex_core::Rational)> = match (&doc.terms, &doc.weighted) {
        (Some(terms), None) => terms
            .iter()
            .map(|t| term_to_indexed(t, vertices))
            .collect::<Result<_, _>>()?,
        (None, Some(spec)) => {
            if doc.grade.is_some_and(|g| g != 1) {
                return Err(CliError::Parse(
                    "weighted operators have grade 1".to_string(),
                ));
            }
            spec.f
                .iter()
                .map(|(label, coeff)| {
                    let idx = vertices.index_of(label).ok_or_else(|| {
                        CliError::Parse(format!("unknown vertex label {label:?} in weights"))
                    })?;
                    let coeff = parse_rational(coeff)
                        .ok_or_else(|| CliError::Parse(format!("bad rational {coeff:?}")))?;
                    Ok((vec![idx], coeff))
                })
                .collect::<Result<_, CliError>>()?
        }
        _ => {
            return Err(CliError::Parse(
                "operator needs exactly one of \"terms\" or \"weighted\"".to_string(),
            ))
        }
    };

    let grade = match (doc.grade, indexed.first()) {
        (Some(g), _) => g,
        (None, Some((v, _))) => v.len(),
        (None, None) => {
            return Err(CliError::Parse(
                "empty operator needs an explicit grade".to_string(),
            ))
        }
    };
    if let Some(bad) = indexed.iter().find(|(v, _)| v.len() != grade) {
        return Err(CliError::Parse(format!(
            "term arity {} does not match grade {grade}",
            bad.0.len()
        )));
    }

    if is_diff {
        if grade == 1 {
            Ok(LoadedOperator::Diff(weighted_diff(
                indexed.into_iter().map(|(v, c)| (v[0], c)),
            )))
        } else {
            Ok(LoadedOperator::Diff(DiffForm::from_terms(
                grade,
                indexed.iter().map(|(v, c)| (v.as_slice(), c.clone())),
            )))
        }
    } else if grade == 1 {
        Ok(LoadedOperator::Codiff(weighted_codiff(
            indexed.into_iter().map(|(v, c)| (v[0], c)),
        )))
    } else {
        Ok(LoadedOperator::Codiff(CodiffForm::from_terms(
            grade,
            indexed.iter().map(|(v, c)| (v.as_slice(), c.clone())),
        )))
    }
}

pub fn load_operator(path: &Path, vertices: &VertexSet) -> Result<LoadedOperator, CliError> {
    let doc: OperatorDocument = read_json(path)?;
    parse_operator_document(&doc, vertices)
}

/// Reads just the labels an operator document mentions, for building a
/// vertex context when no complex file is supplied.
pub fn operator_labels(path: &Path) -> Result<Vec<String>, CliError> {
    let doc: OperatorDocument = read_json(path)?;
    let mut labels = Vec::new();
    if let Some(terms) = &doc.terms {
        for term in terms {
            labels.extend(term.vertices.iter().cloned());
        }
    }
    if let Some(spec) = &doc.weighted {
        labels.extend(spec.f.keys().cloned());
    }
    Ok(labels)
}

/// Formats a path-vector term list as (labels, coefficient) rows in the
/// vector's canonical order.
pub fn term_rows(vector: &cosimplex_core::PathVector, vertices: &VertexSet) -> Vec<TermRow> {
    vector
        .terms()
        .map(|(path, coeff)| TermRow {
            path: path
                .vertices()
                .iter()
                .map(|&v| vertices.label(v).to_string())
                .collect(),
            coeff: rational_string(coeff),
        })
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermRow {
    pub path: Vec<String>,
    pub coeff: String,
}

/// Builds the ad-hoc vertex context for `apply` without a complex file:
/// all labels seen, ordered lexicographically.
pub fn adhoc_vertex_set(
    labels: impl IntoIterator<Item = String>,
    max_vertices: usize,
) -> Result<Arc<VertexSet>, CliError> {
    let ordered: std::collections::BTreeSet<String> = labels.into_iter().collect();
    VertexSet::with_limit(ordered, max_vertices).map_err(|e| CliError::Parse(e.to_string()))
}
