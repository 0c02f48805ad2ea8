//! Finite vertex sets, hyperedges, hypergraphs, and the simplicial /
//! co-simplicial predicates and closures.
//!
//! A hyperedge is a non-empty subset of the vertex set, stored as its
//! strictly increasing index sequence under the set's total order. A
//! hypergraph is a deduplicated collection of hyperedges grouped by
//! dimension (cardinality minus one).

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::paths::ElementaryPath;

/// Ceiling on vertex-set size; the complete hypergraph is exponential in it.
pub const DEFAULT_VERTEX_LIMIT: usize = 24;

/// A totally ordered finite set of distinct labels. The order is the
/// declaration order of the labels, not lexicographic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl VertexSet {
    pub fn new<I, S>(labels: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::with_limit(labels, DEFAULT_VERTEX_LIMIT)
    }

    pub fn with_limit<I, S>(labels: I, limit: usize) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > limit {
            return Err(Error::VertexLimitExceeded {
                count: labels.len(),
                limit,
            });
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(label.clone()));
            }
        }
        Ok(Arc::new(VertexSet { labels, index }))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }
}

/// A strictly increasing, non-empty sequence of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperedge(Vec<usize>);

impl Hyperedge {
    /// Builds a hyperedge from labels viewed as a set: arbitrary input
    /// order is accepted and sorted, repeats are rejected.
    pub fn from_labels<S: AsRef<str>>(vertices: &VertexSet, labels: &[S]) -> Result<Self> {
        let mut indices = Vec::with_capacity(labels.len());
        for label in labels {
            let label = label.as_ref();
            let idx = vertices
                .index_of(label)
                .ok_or_else(|| Error::UnknownVertex(label.to_string()))?;
            indices.push(idx);
        }
        Self::from_indices(vertices, indices)
    }

    pub fn from_indices(vertices: &VertexSet, mut indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::EmptyHyperedge);
        }
        indices.sort_unstable();
        for pair in indices.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateVertex(vertices.label(pair[0]).to_string()));
            }
        }
        if let Some(&last) = indices.last() {
            if last >= vertices.len() {
                return Err(Error::UnknownVertex(format!("#{last}")));
            }
        }
        Ok(Hyperedge(indices))
    }

    /// Already strictly increasing and in range; used by in-crate builders.
    pub(crate) fn from_sorted_unchecked(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(!indices.is_empty());
        Hyperedge(indices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, vertex: usize) -> bool {
        self.0.binary_search(&vertex).is_ok()
    }

    pub fn is_subset_of(&self, other: &Hyperedge) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    pub fn labels<'a>(&self, vertices: &'a VertexSet) -> Vec<&'a str> {
        self.0.iter().map(|&i| vertices.label(i)).collect()
    }

    pub fn to_path(&self) -> ElementaryPath {
        ElementaryPath::new(self.0.clone())
    }
}

/// A deduplicated set of hyperedges over one vertex set, grouped by
/// dimension. Immutable after construction; iteration order is
/// (dimension, lexicographic vertices) throughout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: Arc<VertexSet>,
    by_dim: BTreeMap<usize, BTreeSet<Hyperedge>>,
}

impl Hypergraph {
    pub fn empty(vertices: Arc<VertexSet>) -> Self {
        Hypergraph {
            vertices,
            by_dim: BTreeMap::new(),
        }
    }

    pub fn from_edges<I>(vertices: Arc<VertexSet>, edges: I) -> Self
    where
        I: IntoIterator<Item = Hyperedge>,
    {
        let mut h = Hypergraph::empty(vertices);
        for edge in edges {
            h.insert(edge);
        }
        h
    }

    fn insert(&mut self, edge: Hyperedge) {
        debug_assert!(edge.vertices().last().copied().unwrap_or(0) < self.vertices.len());
        self.by_dim
            .entry(edge.dimension())
            .or_default()
            .insert(edge);
    }

    /// The complete `n`-uniform hypergraph: all C(#V, n+1) hyperedges of
    /// dimension `n`.
    pub fn complete_uniform(vertices: Arc<VertexSet>, n: usize) -> Result<Self> {
        let count = vertices.len();
        if count == 0 || n > count - 1 {
            return Err(Error::DimensionOutOfRange {
                dimension: n,
                vertices: count,
            });
        }
        let edges: Vec<Hyperedge> = (0..count)
            .combinations(n + 1)
            .map(Hyperedge::from_sorted_unchecked)
            .collect();
        Ok(Hypergraph::from_edges(vertices, edges))
    }

    /// The complete hypergraph: all `2^#V - 1` non-empty subsets.
    pub fn complete(vertices: Arc<VertexSet>) -> Self {
        let count = vertices.len();
        let mut h = Hypergraph::empty(vertices);
        for size in 1..=count {
            for combo in (0..count).combinations(size) {
                h.insert(Hyperedge::from_sorted_unchecked(combo));
            }
        }
        h
    }

    pub fn vertex_set(&self) -> &Arc<VertexSet> {
        &self.vertices
    }

    pub fn contains(&self, edge: &Hyperedge) -> bool {
        self.by_dim
            .get(&edge.dimension())
            .is_some_and(|set| set.contains(edge))
    }

    pub fn edge_count(&self) -> usize {
        self.by_dim.values().map(|s| s.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.by_dim.values().all(|s| s.is_empty())
    }

    pub fn max_dimension(&self) -> Option<usize> {
        self.by_dim
            .iter()
            .filter(|(_, set)| !set.is_empty())
            .map(|(d, _)| *d)
            .max()
    }

    pub fn edges(&self) -> impl Iterator<Item = &Hyperedge> {
        self.by_dim.values().flat_map(|set| set.iter())
    }

    pub fn edges_of_dim(&self, dim: usize) -> impl Iterator<Item = &Hyperedge> {
        self.by_dim.get(&dim).into_iter().flat_map(|set| set.iter())
    }

    pub fn dim_count(&self, dim: usize) -> usize {
        self.by_dim.get(&dim).map_or(0, |set| set.len())
    }

    /// Hyperedges of `self` that are not in `other` (the complement of
    /// `other` inside `self`). Both must share the vertex set.
    pub fn complement(&self, other: &Hypergraph) -> Result<Hypergraph> {
        if self.vertices != other.vertices {
            return Err(Error::VertexSetMismatch);
        }
        let edges: Vec<Hyperedge> = self
            .edges()
            .filter(|e| !other.contains(e))
            .cloned()
            .collect();
        Ok(Hypergraph::from_edges(self.vertices.clone(), edges))
    }

    /// Closed under non-empty subsets? Checked one facet at a time: removing
    /// any single vertex from an edge must stay inside, which by induction
    /// covers all subsets. The empty hypergraph passes vacuously.
    pub fn is_simplicial(&self) -> bool {
        self.edges().all(|edge| {
            edge.dimension() == 0
                || (0..edge.vertices().len()).all(|skip| {
                    let facet: Vec<usize> = edge
                        .vertices()
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != skip)
                        .map(|(_, v)| *v)
                        .collect();
                    self.contains(&Hyperedge::from_sorted_unchecked(facet))
                })
        })
    }

    /// Closed under supersets within the complete hypergraph? Adding any
    /// single absent vertex to an edge must stay inside; induction covers
    /// all supersets.
    pub fn is_cosimplicial(&self) -> bool {
        let count = self.vertices.len();
        self.edges().all(|edge| {
            (0..count).filter(|v| !edge.contains(*v)).all(|v| {
                let mut extended = edge.vertices().to_vec();
                let pos = extended.partition_point(|&u| u < v);
                extended.insert(pos, v);
                self.contains(&Hyperedge::from_sorted_unchecked(extended))
            })
        })
    }

    /// Smallest simplicial complex containing `self`: every non-empty
    /// subset of every edge is added.
    pub fn simplicial_closure(&self) -> Hypergraph {
        let mut seen: BTreeSet<Hyperedge> = self.edges().cloned().collect();
        let mut queue: Vec<Hyperedge> = seen.iter().cloned().collect();
        while let Some(edge) = queue.pop() {
            if edge.dimension() == 0 {
                continue;
            }
            for skip in 0..edge.vertices().len() {
                let facet: Vec<usize> = edge
                    .vertices()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, v)| *v)
                    .collect();
                let facet = Hyperedge::from_sorted_unchecked(facet);
                if seen.insert(facet.clone()) {
                    queue.push(facet);
                }
            }
        }
        Hypergraph::from_edges(self.vertices.clone(), seen)
    }

    /// Smallest co-simplicial complex containing `self`: every superset
    /// within the complete hypergraph is added.
    pub fn cosimplicial_closure(&self) -> Hypergraph {
        let count = self.vertices.len();
        let mut seen: BTreeSet<Hyperedge> = self.edges().cloned().collect();
        let mut queue: Vec<Hyperedge> = seen.iter().cloned().collect();
        while let Some(edge) = queue.pop() {
            for v in (0..count).filter(|v| !edge.contains(*v)) {
                let mut extended = edge.vertices().to_vec();
                let pos = extended.partition_point(|&u| u < v);
                extended.insert(pos, v);
                let superset = Hyperedge::from_sorted_unchecked(extended);
                if seen.insert(superset.clone()) {
                    queue.push(superset);
                }
            }
        }
        Hypergraph::from_edges(self.vertices.clone(), seen)
    }
}
