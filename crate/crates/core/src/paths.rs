//! Elementary paths and the graded path space over a vertex set.
//!
//! An elementary n-path is any sequence of n+1 vertex indices; repeats and
//! arbitrary order are allowed. Path vectors are sparse rational
//! combinations of elementary paths of one common grade, with elementary
//! paths orthonormal under the canonical inner product.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::linalg::Rational;

/// A finite vertex-index sequence of length >= 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementaryPath(Vec<usize>);

/// Classification used by the quotient cochain construction: cyclic paths
/// repeat a vertex, sorted paths are strictly increasing, and the rest are
/// regular but out of order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathClass {
    Cyclic,
    Sorted,
    UnsortedRegular,
}

impl ElementaryPath {
    pub fn new(vertices: Vec<usize>) -> Self {
        assert!(!vertices.is_empty(), "an elementary path has length >= 1");
        ElementaryPath(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn grade(&self) -> usize {
        self.0.len() - 1
    }

    /// Some vertex occurs twice?
    pub fn is_cyclic(&self) -> bool {
        let mut seen = self.0.clone();
        seen.sort_unstable();
        seen.windows(2).any(|w| w[0] == w[1])
    }

    /// Strictly increasing?
    pub fn is_sorted(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    pub fn class(&self) -> PathClass {
        if self.is_cyclic() {
            PathClass::Cyclic
        } else if self.is_sorted() {
            PathClass::Sorted
        } else {
            PathClass::UnsortedRegular
        }
    }
}

/// A sparse rational combination of elementary paths of one grade. The zero
/// vector carries no grade and stores no terms, so it compares equal to any
/// emptied vector; this is the uniform stand-in for the zero spaces in
/// negative grade.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathVector {
    grade: Option<usize>,
    terms: BTreeMap<ElementaryPath, Rational>,
}

impl PathVector {
    pub fn zero() -> Self {
        PathVector {
            grade: None,
            terms: BTreeMap::new(),
        }
    }

    pub fn elementary(path: ElementaryPath) -> Self {
        let mut terms = BTreeMap::new();
        let grade = path.grade();
        terms.insert(path, Rational::from_integer(1.into()));
        PathVector {
            grade: Some(grade),
            terms,
        }
    }

    /// Sums repeated paths and drops zero coefficients. All paths must
    /// share one grade.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (ElementaryPath, Rational)>,
    {
        let mut v = PathVector::zero();
        for (path, coeff) in terms {
            v.add_term(path, coeff);
        }
        v
    }

    pub(crate) fn add_term(&mut self, path: ElementaryPath, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.grade {
            None => self.grade = Some(path.grade()),
            Some(g) => assert_eq!(g, path.grade(), "mixed grades in a path vector"),
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(path) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
        if self.terms.is_empty() {
            self.grade = None;
        }
    }

    pub fn grade(&self) -> Option<usize> {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ElementaryPath, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, path: &ElementaryPath) -> Rational {
        self.terms.get(path).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &PathVector) -> PathVector {
        let mut out = self.clone();
        for (path, coeff) in other.terms() {
            out.add_term(path.clone(), coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &PathVector) -> PathVector {
        let mut out = self.clone();
        for (path, coeff) in other.terms() {
            out.add_term(path.clone(), -coeff.clone());
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> PathVector {
        if factor.is_zero() {
            return PathVector::zero();
        }
        PathVector {
            grade: self.grade,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.clone(), c * factor))
                .collect(),
        }
    }

    /// Canonical inner product: elementary paths are orthonormal, and
    /// vectors of different grades pair to zero by convention.
    pub fn inner(&self, other: &PathVector) -> Rational {
        if self.grade != other.grade {
            return Rational::zero();
        }
        let mut acc = Rational::zero();
        for (path, coeff) in &self.terms {
            if let Some(c) = other.terms.get(path) {
                acc += coeff * c;
            }
        }
        acc
    }

    fn filtered(&self, keep: impl Fn(&ElementaryPath) -> bool) -> PathVector {
        PathVector::from_terms(
            self.terms
                .iter()
                .filter(|(p, _)| keep(p))
                .map(|(p, c)| (p.clone(), c.clone())),
        )
    }

    /// Keeps only strictly increasing terms; this realizes passage to the
    /// hyperedge-spanned quotient of the path space.
    pub fn project_sorted(&self) -> PathVector {
        self.filtered(|p| p.class() == PathClass::Sorted)
    }

    /// Keeps only terms with a repeated vertex.
    pub fn cyclic_part(&self) -> PathVector {
        self.filtered(|p| p.class() == PathClass::Cyclic)
    }

    /// Keeps only regular terms that are out of order.
    pub fn unsorted_regular_part(&self) -> PathVector {
        self.filtered(|p| p.class() == PathClass::UnsortedRegular)
    }
}

pub fn path(vertices: &[usize]) -> ElementaryPath {
    ElementaryPath::new(vertices.to_vec())
}
