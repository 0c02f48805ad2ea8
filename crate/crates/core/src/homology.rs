//! Graded chain and cochain complexes carried by a hypergraph, with exact
//! Betti numbers and the homomorphisms induced by even-grade forms.
//!
//! An odd-grade differential form turns a simplicial complex into a chain
//! complex whose boundary drops the degree by the form's grade; dually, an
//! odd-grade co-differential form turns a co-simplicial complex into a
//! cochain complex raising the degree, with insertion images projected to
//! their strictly increasing terms. The primary index is the absolute
//! degree; the (m, n) accessors of the step-indexed groups resolve to
//! absolute degree `m + n * step`.

use num_traits::Zero;

use crate::calculus::{CodiffForm, DiffForm};
use crate::error::{Error, Result};
use crate::hypergraph::{Hyperedge, Hypergraph};
use crate::linalg::{Matrix, Rational, Span};
use crate::paths::PathVector;

/// Whether the boundary lowers (chain) or raises (cochain) the degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variance {
    Chain,
    Cochain,
}

/// The Euclidean split `m = lambda * (2t+1) + q` with `0 <= q <= 2t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeIndex {
    pub m: i64,
    pub t: u32,
    pub lambda: i64,
    pub q: u32,
}

impl DegreeIndex {
    pub fn new(m: i64, t: u32) -> Self {
        let step = 2 * i64::from(t) + 1;
        DegreeIndex {
            m,
            t,
            lambda: m.div_euclid(step),
            q: m.rem_euclid(step) as u32,
        }
    }

    pub fn step(&self) -> i64 {
        2 * i64::from(self.t) + 1
    }
}

/// The odd-grade operator driving a graded complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundaryOp {
    Diff(DiffForm),
    Codiff(CodiffForm),
}

impl BoundaryOp {
    pub fn grade(&self) -> usize {
        match self {
            BoundaryOp::Diff(f) => f.grade(),
            BoundaryOp::Codiff(f) => f.grade(),
        }
    }
}

/// Homology at one absolute degree: a full cycle basis, the rank of the
/// incoming boundary, and their difference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyResult {
    pub degree: i64,
    pub dimension: usize,
    pub cycle_basis: Vec<PathVector>,
    pub boundary_rank: usize,
}

/// The matrix of an even-grade form on homology, in deterministic
/// pivot-extended representative bases of source and target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedMap {
    pub source: HomologyResult,
    pub target: HomologyResult,
    pub matrix: Matrix,
    pub rank: usize,
}

/// Per-degree hyperedge bases of a carrier hypergraph together with the
/// exact matrices of its (co)boundary.
#[derive(Debug, Clone)]
pub struct GradedComplex {
    carrier: Hypergraph,
    operator: BoundaryOp,
    step: usize,
    bases: Vec<Vec<Hyperedge>>,
    matrices: Vec<Matrix>,
}

impl GradedComplex {
    /// Chain complex of a simplicial carrier under an odd-grade form.
    pub fn chain(carrier: &Hypergraph, alpha: DiffForm) -> Result<Self> {
        if alpha.grade().is_multiple_of(2) {
            return Err(Error::GradeParity {
                required: "odd",
                found: alpha.grade(),
            });
        }
        if !carrier.is_simplicial() {
            return Err(Error::NotSimplicial);
        }
        Ok(Self::build(carrier.clone(), BoundaryOp::Diff(alpha)))
    }

    /// Cochain complex of a co-simplicial carrier under an odd-grade form.
    pub fn cochain(carrier: &Hypergraph, omega: CodiffForm) -> Result<Self> {
        if omega.grade().is_multiple_of(2) {
            return Err(Error::GradeParity {
                required: "odd",
                found: omega.grade(),
            });
        }
        if !carrier.is_cosimplicial() {
            return Err(Error::NotCosimplicial);
        }
        Ok(Self::build(carrier.clone(), BoundaryOp::Codiff(omega)))
    }

    fn build(carrier: Hypergraph, operator: BoundaryOp) -> Self {
        let step = operator.grade();
        let top = carrier.max_dimension().map_or(0, |d| d + 1);
        let bases: Vec<Vec<Hyperedge>> = (0..top)
            .map(|d| carrier.edges_of_dim(d).cloned().collect())
            .collect();
        let mut complex = GradedComplex {
            carrier,
            operator,
            step,
            bases,
            matrices: Vec::new(),
        };
        complex.matrices = (0..top as i64).map(|d| complex.build_matrix(d)).collect();
        complex
    }

    fn build_matrix(&self, d: i64) -> Matrix {
        let source = self.basis(d);
        let target_degree = self.image_degree(d);
        let rows = self.chain_dim(target_degree);
        let columns = source
            .iter()
            .map(|edge| {
                let image = self.boundary_image(edge);
                self.coords_entries(target_degree, &image)
            })
            .collect();
        Matrix::from_columns(rows, columns)
    }

    fn boundary_image(&self, edge: &Hyperedge) -> PathVector {
        let path = PathVector::elementary(edge.to_path());
        match &self.operator {
            BoundaryOp::Diff(alpha) => alpha.apply(&path),
            BoundaryOp::Codiff(omega) => omega.apply(&path).project_sorted(),
        }
    }

    fn coords_entries(&self, degree: i64, vector: &PathVector) -> Vec<(usize, Rational)> {
        let basis = self.basis(degree);
        vector
            .terms()
            .map(|(path, coeff)| {
                debug_assert!(path.is_sorted());
                let edge = Hyperedge::from_sorted_unchecked(path.vertices().to_vec());
                let row = basis
                    .binary_search(&edge)
                    .expect("closure keeps boundary images inside the carrier");
                (row, coeff.clone())
            })
            .collect()
    }

    pub fn carrier(&self) -> &Hypergraph {
        &self.carrier
    }

    pub fn variance(&self) -> Variance {
        match self.operator {
            BoundaryOp::Diff(_) => Variance::Chain,
            BoundaryOp::Codiff(_) => Variance::Cochain,
        }
    }

    pub fn operator(&self) -> &BoundaryOp {
        &self.operator
    }

    /// The operator grade `2t + 1`.
    pub fn step(&self) -> usize {
        self.step
    }

    pub fn t(&self) -> u32 {
        ((self.step - 1) / 2) as u32
    }

    pub fn top_dimension(&self) -> Option<usize> {
        self.carrier.max_dimension()
    }

    /// Hyperedge basis at an absolute degree; empty outside the carrier's
    /// dimension range.
    pub fn basis(&self, d: i64) -> &[Hyperedge] {
        if d < 0 || d as usize >= self.bases.len() {
            &[]
        } else {
            &self.bases[d as usize]
        }
    }

    pub fn chain_dim(&self, d: i64) -> usize {
        self.basis(d).len()
    }

    /// Degree reached by the boundary from degree `d`.
    pub fn image_degree(&self, d: i64) -> i64 {
        match self.variance() {
            Variance::Chain => d - self.step as i64,
            Variance::Cochain => d + self.step as i64,
        }
    }

    /// Degree whose boundary lands in degree `d`.
    pub fn preimage_degree(&self, d: i64) -> i64 {
        match self.variance() {
            Variance::Chain => d + self.step as i64,
            Variance::Cochain => d - self.step as i64,
        }
    }

    /// The (co)boundary matrix from `basis(d)` to `basis(image_degree(d))`.
    pub fn matrix(&self, d: i64) -> Matrix {
        if d >= 0 && (d as usize) < self.matrices.len() {
            self.matrices[d as usize].clone()
        } else {
            Matrix::zero(self.chain_dim(self.image_degree(d)), self.chain_dim(d))
        }
    }

    /// The matrix of an even-grade form from `basis(d)` to the basis it
    /// lands in; the carrier's closure keeps every image term inside.
    pub fn chain_map_matrix(&self, beta: &DiffForm, d: i64) -> Matrix {
        assert_eq!(
            self.variance(),
            Variance::Chain,
            "chain map on a chain complex"
        );
        let target = d - beta.grade() as i64;
        let columns = self
            .basis(d)
            .iter()
            .map(|edge| {
                let image = beta.apply(&PathVector::elementary(edge.to_path()));
                self.coords_entries(target, &image)
            })
            .collect();
        Matrix::from_columns(self.chain_dim(target), columns)
    }

    pub fn cochain_map_matrix(&self, mu: &CodiffForm, d: i64) -> Matrix {
        assert_eq!(
            self.variance(),
            Variance::Cochain,
            "cochain map on a cochain complex"
        );
        let target = d + mu.grade() as i64;
        let columns = self
            .basis(d)
            .iter()
            .map(|edge| {
                let image = mu
                    .apply(&PathVector::elementary(edge.to_path()))
                    .project_sorted();
                self.coords_entries(target, &image)
            })
            .collect();
        Matrix::from_columns(self.chain_dim(target), columns)
    }

    fn kernel_vectors(&self, d: i64) -> Vec<Vec<Rational>> {
        self.matrix(d).kernel_basis()
    }

    fn vector_from_coords(&self, d: i64, coords: &[Rational]) -> PathVector {
        PathVector::from_terms(
            self.basis(d)
                .iter()
                .zip(coords)
                .map(|(edge, coeff)| (edge.to_path(), coeff.clone())),
        )
    }

    /// Homology (or cohomology) at an absolute degree: kernel of the
    /// outgoing boundary modulo image of the incoming one.
    pub fn betti_at(&self, d: i64) -> HomologyResult {
        let kernel = self.kernel_vectors(d);
        let boundary_rank = self.matrix(self.preimage_degree(d)).rank();
        assert!(
            boundary_rank <= kernel.len(),
            "boundaries escape the cycle space"
        );
        HomologyResult {
            degree: d,
            dimension: kernel.len() - boundary_rank,
            cycle_basis: kernel
                .iter()
                .map(|v| self.vector_from_coords(d, v))
                .collect(),
            boundary_rank,
        }
    }

    /// The step-indexed group at `(m, n)`, i.e. absolute degree
    /// `m + n * step`.
    pub fn group(&self, m: i64, n: i64) -> HomologyResult {
        self.betti_at(m + n * self.step as i64)
    }

    /// The homomorphism induced on homology by an even-grade form, which
    /// lowers the absolute degree by the form's grade. The matrix columns
    /// are indexed by the source representatives, rows by the target's.
    pub fn induced_map(&self, beta: &DiffForm, m: i64, n: i64) -> Result<InducedMap> {
        assert_eq!(
            self.variance(),
            Variance::Chain,
            "induced map on a chain complex"
        );
        if beta.grade() % 2 == 1 {
            return Err(Error::GradeParity {
                required: "even",
                found: beta.grade(),
            });
        }
        let d_src = m + n * self.step as i64;
        let d_tgt = d_src - beta.grade() as i64;
        let map_src = self.chain_map_matrix(beta, d_src);
        let map_prev = self.chain_map_matrix(beta, self.image_degree(d_src));
        let commutes = self.matrix(d_tgt).mul(&map_src) == map_prev.mul(&self.matrix(d_src));
        self.induced_common(d_src, d_tgt, map_src, commutes)
    }

    /// The homomorphism induced on cohomology by an even-grade form, which
    /// raises the absolute degree by the form's grade.
    pub fn induced_comap(&self, mu: &CodiffForm, m: i64, n: i64) -> Result<InducedMap> {
        assert_eq!(
            self.variance(),
            Variance::Cochain,
            "induced comap on a cochain complex"
        );
        if mu.grade() % 2 == 1 {
            return Err(Error::GradeParity {
                required: "even",
                found: mu.grade(),
            });
        }
        let d_src = m + n * self.step as i64;
        let d_tgt = d_src + mu.grade() as i64;
        let map_src = self.cochain_map_matrix(mu, d_src);
        let map_next = self.cochain_map_matrix(mu, self.image_degree(d_src));
        let commutes = self.matrix(d_tgt).mul(&map_src) == map_next.mul(&self.matrix(d_src));
        self.induced_common(d_src, d_tgt, map_src, commutes)
    }

    fn induced_common(
        &self,
        d_src: i64,
        d_tgt: i64,
        map_src: Matrix,
        commutes: bool,
    ) -> Result<InducedMap> {
        if !commutes {
            return Err(Error::NotAChainMap);
        }
        let source = self.betti_at(d_src);
        let target = self.betti_at(d_tgt);

        let source_reps = self.representatives(d_src);
        let (boundary_cols, target_reps) = self.homology_frame(d_tgt);
        assert_eq!(source_reps.len(), source.dimension);
        assert_eq!(target_reps.len(), target.dimension);
        assert_eq!(boundary_cols.len(), target.boundary_rank);
        let frame_rows = self.chain_dim(d_tgt);
        let frame = Matrix::from_columns(
            frame_rows,
            boundary_cols
                .iter()
                .chain(target_reps.iter())
                .map(|v| {
                    v.iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| (i, c.clone()))
                        .collect()
                })
                .collect(),
        );

        let boundary_count = boundary_cols.len();
        let columns = source_reps
            .iter()
            .map(|rep| {
                let image = map_src.apply(rep);
                let coords = frame.solve(&image).ok_or(Error::NotAChainMap)?;
                Ok(coords[boundary_count..]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (i, c.clone()))
                    .collect())
            })
            .collect::<Result<Vec<_>>>()?;
        let matrix = Matrix::from_columns(target.dimension, columns);
        let rank = matrix.rank();
        Ok(InducedMap {
            source,
            target,
            matrix,
            rank,
        })
    }

    /// Cycle vectors whose classes form a homology basis at `d`: the kernel
    /// vectors that extend the boundary image span, in kernel order.
    fn representatives(&self, d: i64) -> Vec<Vec<Rational>> {
        self.homology_frame(d).1
    }

    fn homology_frame(&self, d: i64) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
        let incoming = self.matrix(self.preimage_degree(d));
        let mut span = Span::new();
        let mut boundary_cols = Vec::new();
        for j in 0..incoming.cols() {
            let col = incoming.column(j);
            if span.try_insert(col.clone()) {
                boundary_cols.push(col);
            }
        }
        let mut reps = Vec::new();
        for vector in self.kernel_vectors(d) {
            if span.try_insert(vector.clone()) {
                reps.push(vector);
            }
        }
        (boundary_cols, reps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{weighted_codiff, weighted_diff};
    use crate::hypergraph::VertexSet;
    use crate::linalg::{rat_int, Rational};
    use std::sync::Arc;

    fn vset(n: usize) -> Arc<VertexSet> {
        VertexSet::new((0..n).map(|i| format!("v{i}"))).unwrap()
    }

    fn edge(vs: &VertexSet, labels: &[&str]) -> Hyperedge {
        Hyperedge::from_labels(vs, labels).unwrap()
    }

    fn triangle_rim(vs: &Arc<VertexSet>) -> Hypergraph {
        Hypergraph::from_edges(
            vs.clone(),
            [
                edge(vs, &["v0"]),
                edge(vs, &["v1"]),
                edge(vs, &["v2"]),
                edge(vs, &["v0", "v1"]),
                edge(vs, &["v0", "v2"]),
                edge(vs, &["v1", "v2"]),
            ],
        )
    }

    fn corner_fan(vs: &Arc<VertexSet>) -> Hypergraph {
        Hypergraph::from_edges(
            vs.clone(),
            [
                edge(vs, &["v0", "v1"]),
                edge(vs, &["v0", "v2"]),
                edge(vs, &["v0", "v1", "v2"]),
            ],
        )
    }

    fn ones(n: usize) -> Vec<(usize, Rational)> {
        (0..n).map(|v| (v, rat_int(1))).collect()
    }

    #[test]
    fn degree_decomposition_is_euclidean() {
        let d = DegreeIndex::new(0, 1);
        assert_eq!((d.lambda, d.q), (0, 0));
        let d = DegreeIndex::new(5, 1);
        assert_eq!((d.lambda, d.q), (1, 2));
        let d = DegreeIndex::new(-1, 1);
        assert_eq!((d.lambda, d.q), (-1, 2));
        for m in -10..=10 {
            for t in 0..3u32 {
                let d = DegreeIndex::new(m, t);
                assert_eq!(d.lambda * d.step() + i64::from(d.q), m);
                assert!(i64::from(d.q) <= 2 * i64::from(t));
            }
        }
    }

    #[test]
    fn bases_are_sorted_per_degree() {
        let vs = vset(3);
        let k = triangle_rim(&vs);
        let complex = GradedComplex::chain(&k, weighted_diff(ones(3))).unwrap();
        let one = complex.basis(1);
        assert_eq!(
            one,
            &[
                edge(&vs, &["v0", "v1"]),
                edge(&vs, &["v0", "v2"]),
                edge(&vs, &["v1", "v2"]),
            ]
        );
        assert!(complex.basis(2).is_empty());
        assert!(complex.basis(-1).is_empty());

        let l = corner_fan(&vs);
        let cochain = GradedComplex::cochain(&l, weighted_codiff(ones(3))).unwrap();
        assert!(cochain.basis(0).is_empty());
        assert_eq!(cochain.chain_dim(1), 2);
    }

    #[test]
    fn carrier_validation_is_strict() {
        let vs = vset(3);
        let open = Hypergraph::from_edges(vs.clone(), [edge(&vs, &["v0", "v1"])]);
        assert_eq!(
            GradedComplex::chain(&open, weighted_diff(ones(3))).unwrap_err(),
            Error::NotSimplicial
        );
        assert_eq!(
            GradedComplex::cochain(&open, weighted_codiff(ones(3))).unwrap_err(),
            Error::NotCosimplicial
        );
        let even = DiffForm::monomial(&[0, 1], rat_int(1));
        assert_eq!(
            GradedComplex::chain(&triangle_rim(&vs), even).unwrap_err(),
            Error::GradeParity {
                required: "odd",
                found: 2
            }
        );
    }

    #[test]
    fn rim_boundary_matrix_and_ranks() {
        let vs = vset(3);
        let k = triangle_rim(&vs);
        let complex = GradedComplex::chain(&k, weighted_diff(ones(3))).unwrap();
        let m = complex.matrix(1);
        assert_eq!((m.rows(), m.cols()), (3, 3));
        assert_eq!(m.column(0), vec![rat_int(-1), rat_int(1), rat_int(0)]);
        assert_eq!(m.column(1), vec![rat_int(-1), rat_int(0), rat_int(1)]);
        assert_eq!(m.column(2), vec![rat_int(0), rat_int(-1), rat_int(1)]);
        assert_eq!(m.rank(), 2);

        let zero_op = GradedComplex::chain(&k, weighted_diff([(0, rat_int(0))])).unwrap();
        assert!(zero_op.matrix(1).is_zero());

        // below the operator grade everything is a cycle
        let m0 = complex.matrix(0);
        assert_eq!((m0.rows(), m0.cols()), (0, 3));
        assert_eq!(m0.kernel_basis().len(), 3);
    }

    #[test]
    fn rim_betti_numbers() {
        let vs = vset(3);
        let k = triangle_rim(&vs);
        let weighted = GradedComplex::chain(&k, weighted_diff(ones(3))).unwrap();
        assert_eq!(weighted.betti_at(0).dimension, 1);
        assert_eq!(weighted.betti_at(1).dimension, 1);

        let zero = GradedComplex::chain(&k, weighted_diff([(0, rat_int(0))])).unwrap();
        assert_eq!(zero.betti_at(0).dimension, 3);
        assert_eq!(zero.betti_at(1).dimension, 3);

        let h = weighted.group(0, 0);
        assert_eq!(h.degree, 0);
        assert_eq!(h.dimension, 1);
        // step is 1, so (m, n) = (-3, 4) also lands at degree 1
        assert_eq!(weighted.group(-3, 4).degree, 1);
    }

    #[test]
    fn group_accessor_steps_by_the_operator_grade() {
        let vs = vset(4);
        let full = Hypergraph::complete(vs.clone());
        let alpha = DiffForm::from_terms(
            3,
            [
                (&[0usize, 1, 2][..], rat_int(1)),
                (&[0, 1, 3][..], rat_int(1)),
                (&[0, 2, 3][..], rat_int(1)),
                (&[1, 2, 3][..], rat_int(1)),
            ],
        );
        let chain = GradedComplex::chain(&full, alpha).unwrap();
        assert_eq!(chain.step(), 3);
        assert_eq!(chain.t(), 1);
        assert_eq!(chain.group(-3, 1).degree, 0);
        assert_eq!(chain.group(0, 2).degree, 6);
        assert_eq!(chain.group(0, 2).dimension, 0);
        assert_eq!(chain.group(2, 0).degree, 2);
        assert_eq!(chain.group(2, 0).dimension, 4);
    }

    #[test]
    fn fan_coboundary_and_cobetti() {
        let vs = vset(3);
        let l = corner_fan(&vs);
        let cochain = GradedComplex::cochain(&l, weighted_codiff(ones(3))).unwrap();

        let m1 = cochain.matrix(1);
        assert_eq!((m1.rows(), m1.cols()), (1, 2));
        assert_eq!(m1.get(0, 0), rat_int(1)); // image of v0v1 is +v0v1v2
        assert_eq!(m1.get(0, 1), rat_int(-1)); // image of v0v2 is -v0v1v2

        let m2 = cochain.matrix(2);
        assert_eq!((m2.rows(), m2.cols()), (0, 1));

        assert_eq!(cochain.betti_at(1).dimension, 1);
        assert_eq!(cochain.betti_at(2).dimension, 0);
        assert_eq!(cochain.betti_at(0).dimension, 0);
        assert_eq!(cochain.betti_at(3).dimension, 0);
        assert_eq!(cochain.betti_at(-2).dimension, 0);

        // killing the off-corner weights leaves everything a cocycle
        let flat = GradedComplex::cochain(&l, weighted_codiff([(0, rat_int(1))])).unwrap();
        assert_eq!(flat.betti_at(1).dimension, 2);
        assert_eq!(flat.betti_at(2).dimension, 1);
    }

    #[test]
    fn consecutive_matrices_compose_to_zero() {
        let vs = vset(4);
        let full = Hypergraph::complete(vs.clone());
        let chain = GradedComplex::chain(&full, weighted_diff(ones(4))).unwrap();
        for d in 0..=3 {
            let product = chain.matrix(d - 1).mul(&chain.matrix(d));
            assert!(product.is_zero(), "degree {d}");
        }
        let cochain = GradedComplex::cochain(&full, weighted_codiff(ones(4))).unwrap();
        for d in 0..=3 {
            let product = cochain.matrix(d + 1).mul(&cochain.matrix(d));
            assert!(product.is_zero(), "degree {d}");
        }
    }

    #[test]
    fn induced_map_of_grade_two_form_on_rim_is_zero() {
        let vs = vset(3);
        let k = triangle_rim(&vs);
        let complex = GradedComplex::chain(&k, weighted_diff(ones(3))).unwrap();
        let beta = DiffForm::from_terms(
            2,
            [
                (&[0usize, 1][..], rat_int(1)),
                (&[0, 2][..], rat_int(1)),
                (&[1, 2][..], rat_int(1)),
            ],
        );
        for m in -2..=2 {
            for n in 0..=2 {
                let map = complex.induced_map(&beta, m, n).unwrap();
                assert!(map.matrix.is_zero(), "(m, n) = ({m}, {n})");
                assert_eq!(map.rank, 0);
            }
        }
    }

    #[test]
    fn scalar_maps_act_by_scaling() {
        let vs = vset(3);
        let k = triangle_rim(&vs);
        let complex = GradedComplex::chain(&k, weighted_diff(ones(3))).unwrap();

        let identity = complex
            .induced_map(&DiffForm::scalar(rat_int(1)), 0, 0)
            .unwrap();
        assert_eq!(identity.matrix, Matrix::identity(identity.source.dimension));
        assert_eq!(identity.rank, identity.source.dimension);

        let tripled = complex
            .induced_map(&DiffForm::scalar(rat_int(3)), 1, 0)
            .unwrap();
        assert_eq!(
            tripled.matrix,
            Matrix::from_columns(1, vec![vec![(0, rat_int(3))]])
        );
    }

    #[test]
    fn induced_map_with_zero_boundary_is_the_raw_action() {
        // With the zero boundary every chain is a cycle and nothing is a
        // boundary, so the induced matrix is the plain action of the form:
        // on the full triangle, the grade-2 sum sends the top cell to
        // -g12 v0 + g02 v1 - g01 v2.
        let vs = vset(3);
        let full = Hypergraph::complete(vs.clone());
        let zero_alpha = weighted_diff([(0, rat_int(0))]);
        let chain = GradedComplex::chain(&full, zero_alpha).unwrap();
        let beta = DiffForm::from_terms(
            2,
            [
                (&[0usize, 1][..], rat_int(1)),
                (&[0, 2][..], rat_int(1)),
                (&[1, 2][..], rat_int(1)),
            ],
        );
        let map = chain.induced_map(&beta, 2, 0).unwrap();
        assert_eq!(map.source.degree, 2);
        assert_eq!(map.target.degree, 0);
        assert_eq!((map.source.dimension, map.target.dimension), (1, 3));
        assert_eq!(
            map.matrix.column(0),
            vec![rat_int(-1), rat_int(1), rat_int(-1)]
        );
        assert_eq!(map.rank, 1);
    }

    #[test]
    fn induced_map_rejects_odd_grades() {
        let vs = vset(3);
        let k = triangle_rim(&vs);
        let complex = GradedComplex::chain(&k, weighted_diff(ones(3))).unwrap();
        assert_eq!(
            complex
                .induced_map(&weighted_diff(ones(3)), 0, 0)
                .unwrap_err(),
            Error::GradeParity {
                required: "even",
                found: 1
            }
        );
    }

    #[test]
    fn induced_comap_of_grade_two_form_on_fan_is_zero() {
        let vs = vset(3);
        let l = corner_fan(&vs);
        let cochain = GradedComplex::cochain(&l, weighted_codiff(ones(3))).unwrap();
        let mu = CodiffForm::from_terms(
            2,
            [
                (&[0usize, 1][..], rat_int(1)),
                (&[0, 2][..], rat_int(1)),
                (&[1, 2][..], rat_int(1)),
            ],
        );
        for m in -2..=2 {
            for n in 0..=2 {
                let map = cochain.induced_comap(&mu, m, n).unwrap();
                assert!(map.matrix.is_zero(), "(m, n) = ({m}, {n})");
            }
        }
        let identity = cochain
            .induced_comap(&CodiffForm::scalar(rat_int(1)), 1, 0)
            .unwrap();
        assert_eq!(identity.matrix, Matrix::identity(1));
    }

    #[test]
    fn chain_map_commutes_with_boundary() {
        let vs = vset(4);
        let full = Hypergraph::complete(vs.clone());
        let chain = GradedComplex::chain(&full, weighted_diff(ones(4))).unwrap();
        let beta = DiffForm::from_terms(
            2,
            [(&[0usize, 1][..], rat_int(2)), (&[1, 3][..], rat_int(-1))],
        );
        for d in 0..=3i64 {
            let left = chain.matrix(d - 2).mul(&chain.chain_map_matrix(&beta, d));
            let right = chain.chain_map_matrix(&beta, d - 1).mul(&chain.matrix(d));
            assert_eq!(left, right, "degree {d}");
        }
    }

    #[test]
    fn rank_nullity_across_degrees() {
        let vs = vset(4);
        let full = Hypergraph::complete(vs.clone());
        let chain = GradedComplex::chain(&full, weighted_diff(ones(4))).unwrap();
        for d in 0..=3i64 {
            let m = chain.matrix(d);
            assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
        }
    }
}
