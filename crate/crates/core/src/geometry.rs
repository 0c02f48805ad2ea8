//! Standard-basis embedding of a vertex set into rational Euclidean space
//! and the finite, checkable shadows of the realization identities.
//!
//! Each open cell of the realization is an infinite point set; we represent
//! it exactly by its vertex list together with the barycenter, which is the
//! interior point with all barycentric weights equal.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hypergraph::{Hyperedge, Hypergraph, VertexSet};
use crate::linalg::Rational;

/// The embedding sending vertex `i` to the `i`-th unit coordinate vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    points: Vec<Vec<Rational>>,
}

/// One hyperedge cell: its vertex points and exact barycenter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellDescriptor {
    pub hyperedge: Hyperedge,
    pub vertex_points: Vec<Vec<Rational>>,
    pub barycenter: Vec<Rational>,
}

/// Outcome of the pairwise-disjointness check over all cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointnessReport {
    pub cells: usize,
    pub pairs_checked: usize,
    pub violation: Option<(Hyperedge, Hyperedge)>,
}

impl DisjointnessReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Outcome of comparing complement cells against the cell-set difference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementCellsReport {
    pub remaining: Vec<CellDescriptor>,
    pub missing: Vec<Hyperedge>,
    pub unexpected: Vec<Hyperedge>,
}

impl ComplementCellsReport {
    pub fn passed(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

impl Embedding {
    pub fn new(vertices: &VertexSet) -> Self {
        assert!(!vertices.is_empty(), "embedding needs at least one vertex");
        let n = vertices.len();
        let points = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Rational::from_integer(1.into())
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Embedding { points }
    }

    /// Ambient dimension, equal to the vertex count.
    pub fn dimension(&self) -> usize {
        self.points.len()
    }

    pub fn point(&self, vertex: usize) -> &[Rational] {
        &self.points[vertex]
    }

    /// Descriptor of one cell; the barycenter puts weight `1/(n+1)` on each
    /// of the n+1 supporting vertices.
    pub fn cell(&self, edge: &Hyperedge) -> CellDescriptor {
        let count = edge.vertices().len();
        let weight = Rational::new(1.into(), (count as i64).into());
        let mut barycenter = vec![Rational::zero(); self.dimension()];
        for &v in edge.vertices() {
            barycenter[v] = weight.clone();
        }
        CellDescriptor {
            hyperedge: edge.clone(),
            vertex_points: edge
                .vertices()
                .iter()
                .map(|&v| self.points[v].clone())
                .collect(),
            barycenter,
        }
    }

    /// One descriptor per hyperedge, ordered by (dimension, lexicographic
    /// vertices).
    pub fn realization_cells(&self, h: &Hypergraph) -> Vec<CellDescriptor> {
        h.edges().map(|e| self.cell(e)).collect()
    }

    /// Finite witness that distinct cells are disjoint: for every pair of
    /// distinct hyperedges the supports of the barycentric weights differ,
    /// so no point lies in both open cells.
    pub fn check_disjointness(&self, h: &Hypergraph) -> DisjointnessReport {
        let edges: Vec<&Hyperedge> = h.edges().collect();
        let mut pairs_checked = 0usize;
        let mut violation = None;
        'outer: for (i, a) in edges.iter().enumerate() {
            for b in &edges[i + 1..] {
                pairs_checked += 1;
                if a.vertices() == b.vertices() {
                    violation = Some(((*a).clone(), (*b).clone()));
                    break 'outer;
                }
            }
        }
        DisjointnessReport {
            cells: edges.len(),
            pairs_checked,
            violation,
        }
    }

    /// Checks that the cells of the complement are exactly the cell-set
    /// difference, hyperedge by hyperedge.
    pub fn check_complement_cells(
        &self,
        ambient: &Hypergraph,
        removed: &Hypergraph,
    ) -> Result<ComplementCellsReport> {
        if ambient.vertex_set() != removed.vertex_set() {
            return Err(Error::VertexSetMismatch);
        }
        let complement = ambient.complement(removed)?;
        let missing: Vec<Hyperedge> = ambient
            .edges()
            .filter(|e| !removed.contains(e) && !complement.contains(e))
            .cloned()
            .collect();
        let unexpected: Vec<Hyperedge> = complement
            .edges()
            .filter(|e| !ambient.contains(e) || removed.contains(e))
            .cloned()
            .collect();
        Ok(ComplementCellsReport {
            remaining: self.realization_cells(&complement),
            missing,
            unexpected,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::VertexSet;
    use crate::linalg::{rat, rat_int};
    use std::sync::Arc;

    fn vset(n: usize) -> Arc<VertexSet> {
        VertexSet::new((0..n).map(|i| format!("v{i}"))).unwrap()
    }

    fn edge(vs: &VertexSet, labels: &[&str]) -> Hyperedge {
        Hyperedge::from_labels(vs, labels).unwrap()
    }

    fn squared_distance(a: &[Rational], b: &[Rational]) -> Rational {
        a.iter()
            .zip(b)
            .map(|(x, y)| {
                let d = x - y;
                &d * &d
            })
            .sum()
    }

    #[test]
    fn embedding_is_the_standard_basis() {
        let vs = vset(3);
        let emb = Embedding::new(&vs);
        assert_eq!(emb.point(0), &[rat_int(1), rat_int(0), rat_int(0)]);
        assert_eq!(emb.point(1), &[rat_int(0), rat_int(1), rat_int(0)]);
        assert_eq!(emb.point(2), &[rat_int(0), rat_int(0), rat_int(1)]);

        let single = Embedding::new(&vset(1));
        assert_eq!(single.point(0), &[rat_int(1)]);
    }

    #[test]
    fn pairwise_squared_distances_are_two() {
        let vs = vset(5);
        let emb = Embedding::new(&vs);
        for i in 0..5 {
            for j in 0..5 {
                let d = squared_distance(emb.point(i), emb.point(j));
                assert_eq!(d, if i == j { rat_int(0) } else { rat_int(2) });
            }
        }
    }

    #[test]
    fn barycenters_are_uniform_weights() {
        let vs = vset(3);
        let emb = Embedding::new(&vs);

        let mid = emb.cell(&edge(&vs, &["v0", "v1"]));
        assert_eq!(mid.barycenter, vec![rat(1, 2), rat(1, 2), rat_int(0)]);

        let vertex = emb.cell(&edge(&vs, &["v0"]));
        assert_eq!(vertex.barycenter, vec![rat_int(1), rat_int(0), rat_int(0)]);

        let centroid = emb.cell(&edge(&vs, &["v0", "v1", "v2"]));
        assert_eq!(centroid.barycenter, vec![rat(1, 3), rat(1, 3), rat(1, 3)]);

        // weights sum to one and live on the support
        let sum: Rational = centroid.barycenter.iter().sum();
        assert_eq!(sum, rat_int(1));
    }

    #[test]
    fn realization_cell_lists() {
        let vs = vset(3);
        let emb = Embedding::new(&vs);
        let full = Hypergraph::complete(vs.clone());
        let cells = emb.realization_cells(&full);
        assert_eq!(cells.len(), 7);
        // ordered by dimension first
        assert_eq!(cells[0].hyperedge, edge(&vs, &["v0"]));
        assert_eq!(cells[6].hyperedge, edge(&vs, &["v0", "v1", "v2"]));

        assert!(emb
            .realization_cells(&Hypergraph::empty(vs.clone()))
            .is_empty());

        let two =
            Hypergraph::from_edges(vs.clone(), [edge(&vs, &["v0"]), edge(&vs, &["v0", "v1"])]);
        let cells = emb.realization_cells(&two);
        assert_eq!(cells.len(), 2);
        assert_ne!(cells[0].barycenter, cells[1].barycenter);
    }

    #[test]
    fn disjointness_scan_counts_pairs() {
        let vs = vset(4);
        let emb = Embedding::new(&vs);
        let full = Hypergraph::complete(vs.clone());
        let report = emb.check_disjointness(&full);
        assert!(report.passed());
        assert_eq!(report.cells, 15);
        assert_eq!(report.pairs_checked, 105);

        let lone = Hypergraph::from_edges(vs.clone(), [edge(&vs, &["v0", "v1"])]);
        let report = emb.check_disjointness(&lone);
        assert!(report.passed());
        assert_eq!(report.pairs_checked, 0);
    }

    #[test]
    fn complement_cells_match_set_difference() {
        let vs = vset(3);
        let emb = Embedding::new(&vs);
        let full = Hypergraph::complete(vs.clone());
        let rim = Hypergraph::from_edges(
            vs.clone(),
            [
                edge(&vs, &["v0"]),
                edge(&vs, &["v1"]),
                edge(&vs, &["v2"]),
                edge(&vs, &["v0", "v1"]),
                edge(&vs, &["v0", "v2"]),
                edge(&vs, &["v1", "v2"]),
            ],
        );
        let report = emb.check_complement_cells(&full, &rim).unwrap();
        assert!(report.passed());
        assert_eq!(report.remaining.len(), 1);
        assert_eq!(
            report.remaining[0].hyperedge,
            edge(&vs, &["v0", "v1", "v2"])
        );

        let all = emb
            .check_complement_cells(&full, &Hypergraph::empty(vs.clone()))
            .unwrap();
        assert!(all.passed());
        assert_eq!(all.remaining.len(), 7);

        let none = emb.check_complement_cells(&full, &full).unwrap();
        assert!(none.passed());
        assert!(none.remaining.is_empty());

        let other = Hypergraph::complete(vset(4));
        assert_eq!(
            emb.check_complement_cells(&full, &other),
            Err(Error::VertexSetMismatch)
        );
    }
}
