//! One function per subcommand; each returns the JSON report text.

use std::path::Path;
use std::sync::Arc;

use serde::Serialize;

use cosimplex_core::geometry::Embedding;
use cosimplex_core::homology::GradedComplex;
use cosimplex_core::hypergraph::{Hypergraph, VertexSet};
use cosimplex_core::linalg::{decimal_string, parse_rational, rational_string};
use cosimplex_core::paths::{ElementaryPath, PathVector};

use crate::schema::{
    self, adhoc_vertex_set, complex_to_document, load_complex, load_complex_raw, load_operator,
    term_rows, LoadedOperator, TermRow,
};
use crate::CliError;

fn render<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Parse(format!("cannot serialize report: {e}")))?;
    text.push('\n');
    Ok(text)
}

#[derive(Serialize)]
struct DimensionCount {
    dimension: usize,
    count: usize,
}

#[derive(Serialize)]
struct ValidateReport {
    vertices: usize,
    edges: usize,
    edges_by_dimension: Vec<DimensionCount>,
    is_simplicial: bool,
    is_cosimplicial: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    declared_kind: Option<String>,
    kind_matches: bool,
}

/// Prints the complex profile; exit code 2 signals a declared-kind
/// mismatch after the report is written.
pub fn validate(path: &Path, max_vertices: usize) -> Result<(String, bool), CliError> {
    let (h, declared) = load_complex_raw(path, max_vertices)?;
    let edges_by_dimension = h
        .max_dimension()
        .map(|top| {
            (0..=top)
                .map(|d| DimensionCount {
                    dimension: d,
                    count: h.dim_count(d),
                })
                .filter(|c| c.count > 0)
                .collect()
        })
        .unwrap_or_default();
    let kind_matches = declared
        .as_deref()
        .is_none_or(|kind| schema::kind_holds(&h, kind));
    let report = ValidateReport {
        vertices: h.vertex_set().len(),
        edges: h.edge_count(),
        edges_by_dimension,
        is_simplicial: h.is_simplicial(),
        is_cosimplicial: h.is_cosimplicial(),
        declared_kind: declared,
        kind_matches,
    };
    Ok((render(&report)?, kind_matches))
}

#[derive(Serialize)]
struct DegreeEntry {
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<i64>,
    d: i64,
    dim_chain: usize,
    kernel: usize,
    boundary_rank: usize,
    betti: usize,
}

#[derive(Serialize)]
struct BettiReport {
    operator_grade: usize,
    side: &'static str,
    degrees: Vec<DegreeEntry>,
    induced_maps: Vec<InducedEntry>,
}

#[derive(Serialize)]
struct InducedEntry {
    m: i64,
    n: i64,
    s: usize,
    source_degree: i64,
    target_degree: i64,
    source_dimension: usize,
    target_dimension: usize,
    matrix: Vec<Vec<String>>,
    rank: usize,
}

/// Parses an inclusive "a..b" range, or a single integer as "a..a".
fn parse_range(text: &str) -> Result<(i64, i64), CliError> {
    let parse_end = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| CliError::Parse(format!("bad range bound {s:?}")))
    };
    if let Some((a, b)) = text.split_once("..") {
        let (a, b) = (parse_end(a)?, parse_end(b)?);
        if a > b {
            return Err(CliError::Parse(format!("empty range {text:?}")));
        }
        Ok((a, b))
    } else {
        let d = parse_end(text)?;
        Ok((d, d))
    }
}

fn build_complex(h: &Hypergraph, op: LoadedOperator) -> Result<GradedComplex, CliError> {
    match op {
        LoadedOperator::Diff(alpha) => GradedComplex::chain(h, alpha).map_err(CliError::from),
        LoadedOperator::Codiff(omega) => GradedComplex::cochain(h, omega).map_err(CliError::from),
    }
}

pub struct BettiArgs<'a> {
    pub complex: &'a Path,
    pub operator: &'a Path,
    pub degrees: Option<String>,
    pub m: Option<i64>,
    pub n_range: Option<String>,
    pub side: Option<String>,
}

pub fn betti(args: BettiArgs<'_>, max_vertices: usize) -> Result<String, CliError> {
    let h = load_complex(args.complex, max_vertices)?;
    let op = load_operator(args.operator, h.vertex_set())?;
    if op.grade() % 2 == 0 {
        return Err(CliError::Parity(format!(
            "boundary operator grade {} must be odd",
            op.grade()
        )));
    }
    let side = match &op {
        LoadedOperator::Diff(_) => "homology",
        LoadedOperator::Codiff(_) => "cohomology",
    };
    if let Some(requested) = &args.side {
        if requested != side {
            return Err(CliError::Parse(format!(
                "--side {requested} conflicts with a {} operator",
                op.variance_name()
            )));
        }
    }
    let complex = build_complex(&h, op)?;
    let step = complex.step() as i64;

    let mut entries = Vec::new();
    match (&args.degrees, args.m, &args.n_range) {
        (Some(_), Some(_), _) | (Some(_), _, Some(_)) => {
            return Err(CliError::Parse(
                "--degrees and --m/--n-range are mutually exclusive".to_string(),
            ))
        }
        (Some(range), None, None) => {
            let (lo, hi) = parse_range(range)?;
            for d in lo..=hi {
                entries.push((None, None, d));
            }
        }
        (None, Some(m), n_range) => {
            let (lo, hi) = match n_range {
                Some(range) => parse_range(range)?,
                None => (0, complex.top_dimension().map_or(0, |t| t as i64)),
            };
            if lo < 0 {
                return Err(CliError::Parse("n is non-negative".to_string()));
            }
            for n in lo..=hi {
                entries.push((Some(m), Some(n), m + n * step));
            }
        }
        (None, None, Some(_)) => return Err(CliError::Parse("--n-range needs --m".to_string())),
        (None, None, None) => {
            let top = complex.top_dimension().map_or(0, |t| t as i64);
            for d in 0..=top {
                entries.push((None, None, d));
            }
        }
    }

    let degrees = entries
        .into_iter()
        .map(|(m, n, d)| {
            let result = complex.betti_at(d);
            DegreeEntry {
                m,
                n,
                d,
                dim_chain: complex.chain_dim(d),
                kernel: result.cycle_basis.len(),
                boundary_rank: result.boundary_rank,
                betti: result.dimension,
            }
        })
        .collect();

    render(&BettiReport {
        operator_grade: complex.step(),
        side,
        degrees,
        induced_maps: Vec::new(),
    })
}

pub fn induced(
    complex_path: &Path,
    operator_path: &Path,
    map_path: &Path,
    m: i64,
    n: i64,
    max_vertices: usize,
) -> Result<String, CliError> {
    let h = load_complex(complex_path, max_vertices)?;
    let op = load_operator(operator_path, h.vertex_set())?;
    let map_op = load_operator(map_path, h.vertex_set())?;
    if map_op.grade() % 2 == 1 {
        return Err(CliError::Parity(format!(
            "map operator grade {} must be even",
            map_op.grade()
        )));
    }
    if op.variance_name() != map_op.variance_name() {
        return Err(CliError::Parse(format!(
            "map operator variance {} does not match boundary operator variance {}",
            map_op.variance_name(),
            op.variance_name()
        )));
    }
    let s = map_op.grade() / 2;
    let complex = build_complex(&h, op)?;
    let map = match map_op {
        LoadedOperator::Diff(beta) => complex.induced_map(&beta, m, n),
        LoadedOperator::Codiff(mu) => complex.induced_comap(&mu, m, n),
    }
    .map_err(CliError::from)?;

    let matrix = (0..map.matrix.rows())
        .map(|i| {
            (0..map.matrix.cols())
                .map(|j| rational_string(&map.matrix.get(i, j)))
                .collect()
        })
        .collect();
    render(&InducedEntry {
        m,
        n,
        s,
        source_degree: map.source.degree,
        target_degree: map.target.degree,
        source_dimension: map.source.dimension,
        target_dimension: map.target.dimension,
        matrix,
        rank: map.rank,
    })
}

#[derive(Serialize)]
struct ApplyReport {
    input: Vec<TermRow>,
    result: Vec<TermRow>,
    sorted: Vec<TermRow>,
    cyclic: Vec<TermRow>,
    unsorted_regular: Vec<TermRow>,
}

/// Parses a linear combination of elementary paths: terms separated by
/// `+`/`-` tokens, each an optional rational coefficient followed by
/// vertex labels.
fn parse_path_vector(tokens: &[String], vertices: &VertexSet) -> Result<PathVector, CliError> {
    let mut out = PathVector::zero();
    let mut term: Vec<&str> = Vec::new();
    let mut negative = false;

    let mut flush = |term: &mut Vec<&str>, negative: bool| -> Result<(), CliError> {
        if term.is_empty() {
            return Ok(());
        }
        let mut coeff = cosimplex_core::linalg::rat_int(1);
        let mut labels = term.as_slice();
        if vertices.index_of(labels[0]).is_none() {
            if let Some(c) = parse_rational(labels[0]) {
                coeff = c;
                labels = &labels[1..];
            }
        }
        if labels.is_empty() {
            return Err(CliError::Parse(
                "a path term needs at least one vertex".into(),
            ));
        }
        let indices = labels
            .iter()
            .map(|l| {
                vertices
                    .index_of(l)
                    .ok_or_else(|| CliError::Parse(format!("unknown vertex label {l:?} in path")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if negative {
            coeff = -coeff;
        }
        out = out.add(&PathVector::from_terms([(
            ElementaryPath::new(indices),
            coeff,
        )]));
        term.clear();
        Ok(())
    };

    for token in tokens.iter().flat_map(|t| t.split_whitespace()) {
        match token {
            "+" => {
                flush(&mut term, negative)?;
                negative = false;
            }
            "-" => {
                flush(&mut term, negative)?;
                negative = true;
            }
            _ => term.push(token),
        }
    }
    flush(&mut term, negative)?;
    if out.is_zero() && tokens.iter().all(|t| t.trim().is_empty()) {
        return Err(CliError::Parse("empty path literal".into()));
    }
    Ok(out)
}

pub fn apply(
    operator_path: &Path,
    path_tokens: &[String],
    complex_path: Option<&Path>,
    max_vertices: usize,
) -> Result<String, CliError> {
    let vertices: Arc<VertexSet> = match complex_path {
        Some(path) => load_complex(path, max_vertices)?.vertex_set().clone(),
        None => {
            let mut labels = schema::operator_labels(operator_path)?;
            labels.extend(
                path_tokens
                    .iter()
                    .flat_map(|t| t.split_whitespace())
                    .filter(|t| *t != "+" && *t != "-" && parse_rational(t).is_none())
                    .map(|t| t.to_string()),
            );
            adhoc_vertex_set(labels, max_vertices)?
        }
    };
    let op = load_operator(operator_path, &vertices)?;
    let input = parse_path_vector(path_tokens, &vertices)?;
    let result = match &op {
        LoadedOperator::Diff(alpha) => alpha.apply(&input),
        LoadedOperator::Codiff(omega) => omega.apply(&input),
    };
    render(&ApplyReport {
        input: term_rows(&input, &vertices),
        result: term_rows(&result, &vertices),
        sorted: term_rows(&result.project_sorted(), &vertices),
        cyclic: term_rows(&result.cyclic_part(), &vertices),
        unsorted_regular: term_rows(&result.unsorted_regular_part(), &vertices),
    })
}

pub fn complement(
    complex_path: &Path,
    ambient_path: Option<&Path>,
    max_vertices: usize,
) -> Result<String, CliError> {
    let h = load_complex(complex_path, max_vertices)?;
    let ambient = match ambient_path {
        Some(path) => load_complex(path, max_vertices)?,
        None => Hypergraph::complete(h.vertex_set().clone()),
    };
    let rest = ambient.complement(&h).map_err(CliError::from)?;
    render(&complex_to_document(&rest))
}

pub fn closure(
    complex_path: &Path,
    simplicial: bool,
    cosimplicial: bool,
    max_vertices: usize,
) -> Result<String, CliError> {
    let h = load_complex(complex_path, max_vertices)?;
    let closed = match (simplicial, cosimplicial) {
        (true, false) => h.simplicial_closure(),
        (false, true) => h.cosimplicial_closure(),
        _ => {
            return Err(CliError::Parse(
                "pass exactly one of --simplicial or --cosimplicial".to_string(),
            ))
        }
    };
    render(&complex_to_document(&closed))
}

#[derive(Serialize)]
struct RealizeVertex {
    label: String,
    point: Vec<String>,
}

#[derive(Serialize)]
struct RealizeCell {
    vertices: Vec<String>,
    dimension: usize,
    barycenter: Vec<String>,
}

#[derive(Serialize)]
struct RealizeReport {
    vertices: Vec<RealizeVertex>,
    cells: Vec<RealizeCell>,
}

pub fn realize(
    complex_path: &Path,
    decimal: bool,
    precision: usize,
    max_vertices: usize,
) -> Result<String, CliError> {
    let h = load_complex(complex_path, max_vertices)?;
    let vertices = h.vertex_set().clone();
    if vertices.is_empty() {
        return Err(CliError::Parse(
            "realization needs at least one vertex".to_string(),
        ));
    }
    let embedding = Embedding::new(&vertices);
    let fmt = |r: &cosimplex_core::Rational| {
        if decimal {
            decimal_string(r, precision)
        } else {
            rational_string(r)
        }
    };
    let report = RealizeReport {
        vertices: (0..vertices.len())
            .map(|i| RealizeVertex {
                label: vertices.label(i).to_string(),
                point: embedding.point(i).iter().map(fmt).collect(),
            })
            .collect(),
        cells: embedding
            .realization_cells(&h)
            .into_iter()
            .map(|cell| RealizeCell {
                vertices: cell
                    .hyperedge
                    .labels(&vertices)
                    .iter()
                    .map(|s| s.to_string())
                    .collect(),
                dimension: cell.hyperedge.dimension(),
                barycenter: cell.barycenter.iter().map(fmt).collect(),
            })
            .collect(),
    };
    render(&report)
}
