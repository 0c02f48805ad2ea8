//! The degree -1 and degree +1 vertex operators on path vectors, and the
//! exterior algebras they generate.
//!
//! `d_partial(v, -)` deletes occurrences of `v` with alternating signs;
//! `d_insert(v, -)` inserts `v` at every position with alternating signs.
//! The two are adjoint under the canonical inner product. Forms are stored
//! canonically: monomial keys are strictly increasing vertex tuples, with
//! the sorting sign absorbed into the coefficient and repeated-vertex
//! monomials annihilated. A monomial `w1 ^ w2 ^ ... ^ wk` acts as the
//! composition with `wk` applied first and `w1` last.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::linalg::Rational;
use crate::paths::{ElementaryPath, PathVector};

/// Deletes each occurrence of `v` from every term, with sign `(-1)^i` for
/// position `i`; grade drops by one, and grade-0 input maps to zero.
pub fn d_partial(v: usize, xi: &PathVector) -> PathVector {
    let mut out = PathVector::zero();
    for (path, coeff) in xi.terms() {
        let vertices = path.vertices();
        if vertices.len() == 1 {
            continue;
        }
        for (i, &u) in vertices.iter().enumerate() {
            if u != v {
                continue;
            }
            let mut rest = Vec::with_capacity(vertices.len() - 1);
            rest.extend_from_slice(&vertices[..i]);
            rest.extend_from_slice(&vertices[i + 1..]);
            let sign = if i % 2 == 0 {
                coeff.clone()
            } else {
                -coeff.clone()
            };
            out.add_term(ElementaryPath::new(rest), sign);
        }
    }
    out
}

/// Inserts `v` at each of the `len + 1` positions of every term, with sign
/// `(-1)^i` for position `i`; grade rises by one.
pub fn d_insert(v: usize, xi: &PathVector) -> PathVector {
    let mut out = PathVector::zero();
    for (path, coeff) in xi.terms() {
        let vertices = path.vertices();
        for i in 0..=vertices.len() {
            let mut extended = Vec::with_capacity(vertices.len() + 1);
            extended.extend_from_slice(&vertices[..i]);
            extended.push(v);
            extended.extend_from_slice(&vertices[i..]);
            let sign = if i % 2 == 0 {
                coeff.clone()
            } else {
                -coeff.clone()
            };
            out.add_term(ElementaryPath::new(extended), sign);
        }
    }
    out
}

/// Sorts a monomial's vertices, returning the permutation sign, or `None`
/// when a vertex repeats and the monomial is zero.
fn sort_with_sign(vertices: &mut [usize]) -> Option<bool> {
    let mut negative = false;
    for i in 1..vertices.len() {
        let mut j = i;
        while j > 0 && vertices[j - 1] > vertices[j] {
            vertices.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if vertices.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(negative)
    }
}

/// Sign of the grade-k adjoint: +1 for k = 0,1 (mod 4), -1 for k = 2,3.
fn adjoint_sign(grade: usize) -> Rational {
    if grade % 4 <= 1 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Canonical coefficient table shared by both exterior algebras.
#[derive(Debug, Clone, PartialEq, Eq)]
struct FormTable {
    grade: usize,
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl FormTable {
    fn zero(grade: usize) -> Self {
        FormTable {
            grade,
            terms: BTreeMap::new(),
        }
    }

    fn scalar(value: Rational) -> Self {
        let mut table = FormTable::zero(0);
        table.add_term(Vec::new(), value);
        table
    }

    fn monomial(vertices: &[usize], coeff: Rational) -> Self {
        let mut table = FormTable::zero(vertices.len());
        table.add_term(vertices.to_vec(), coeff);
        table
    }

    fn add_term(&mut self, mut vertices: Vec<usize>, coeff: Rational) {
        assert_eq!(vertices.len(), self.grade, "monomial arity mismatch");
        if coeff.is_zero() {
            return;
        }
        let Some(negative) = sort_with_sign(&mut vertices) else {
            return;
        };
        let signed = if negative { -coeff } else { coeff };
        use std::collections::btree_map::Entry;
        match self.terms.entry(vertices) {
            Entry::Vacant(slot) => {
                slot.insert(signed);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += signed;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn add(&self, other: &FormTable) -> FormTable {
        assert_eq!(self.grade, other.grade, "mixed grades in a form sum");
        let mut out = self.clone();
        for (key, coeff) in &other.terms {
            out.add_term(key.clone(), coeff.clone());
        }
        out
    }

    fn scale(&self, factor: &Rational) -> FormTable {
        if factor.is_zero() {
            return FormTable::zero(self.grade);
        }
        FormTable {
            grade: self.grade,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * factor))
                .collect(),
        }
    }

    fn wedge(&self, other: &FormTable) -> FormTable {
        let mut out = FormTable::zero(self.grade + other.grade);
        for (left, lc) in &self.terms {
            for (right, rc) in &other.terms {
                let mut key = Vec::with_capacity(left.len() + right.len());
                key.extend_from_slice(left);
                key.extend_from_slice(right);
                out.add_term(key, lc * rc);
            }
        }
        out
    }

    fn apply(&self, xi: &PathVector, atomic: fn(usize, &PathVector) -> PathVector) -> PathVector {
        let mut out = PathVector::zero();
        for (vertices, coeff) in &self.terms {
            // Rightmost operator acts first.
            let mut acc = xi.clone();
            for &v in vertices.iter().rev() {
                acc = atomic(v, &acc);
                if acc.is_zero() {
                    break;
                }
            }
            out = out.add(&acc.scale(coeff));
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

macro_rules! form_api {
    ($name:ident) => {
        impl $name {
            pub fn zero(grade: usize) -> Self {
                $name(FormTable::zero(grade))
            }

            /// A grade-0 form acting by scalar multiplication.
            pub fn scalar(value: Rational) -> Self {
                $name(FormTable::scalar(value))
            }

            /// Single monomial; unsorted vertices are sign-normalized and a
            /// repeated vertex yields the zero form.
            pub fn monomial(vertices: &[usize], coeff: Rational) -> Self {
                $name(FormTable::monomial(vertices, coeff))
            }

            pub fn from_terms<'a, I>(grade: usize, terms: I) -> Self
            where
                I: IntoIterator<Item = (&'a [usize], Rational)>,
            {
                let mut table = FormTable::zero(grade);
                for (vertices, coeff) in terms {
                    table.add_term(vertices.to_vec(), coeff);
                }
                $name(table)
            }

            pub fn grade(&self) -> usize {
                self.0.grade
            }

            pub fn is_zero(&self) -> bool {
                self.0.is_zero()
            }

            /// Canonical terms: strictly increasing tuples with nonzero
            /// coefficients, in lexicographic order.
            pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Rational)> {
                self.0.terms.iter().map(|(k, c)| (k.as_slice(), c))
            }

            pub fn coeff(&self, vertices: &[usize]) -> Rational {
                self.0
                    .terms
                    .get(vertices)
                    .cloned()
                    .unwrap_or_else(Rational::zero)
            }

            pub fn add(&self, other: &Self) -> Self {
                $name(self.0.add(&other.0))
            }

            pub fn scale(&self, factor: &Rational) -> Self {
                $name(self.0.scale(factor))
            }

            /// Exterior product: grades add, monomials concatenate and
            /// sign-normalize, repeated vertices annihilate.
            pub fn wedge(&self, other: &Self) -> Self {
                $name(self.0.wedge(&other.0))
            }
        }
    };
}

/// An element of the differential algebra: a combination of wedge monomials
/// in the degree -1 vertex operators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffForm(FormTable);

/// An element of the co-differential algebra: a combination of wedge
/// monomials in the degree +1 vertex operators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodiffForm(FormTable);

form_api!(DiffForm);
form_api!(CodiffForm);

impl DiffForm {
    /// Applies the form; output grade is input grade minus the form grade,
    /// with underflow mapping to zero.
    pub fn apply(&self, xi: &PathVector) -> PathVector {
        self.0.apply(xi, d_partial)
    }

    /// The adjoint co-differential form: same coefficient table scaled by
    /// the grade sign (+1 for grade 0,1 mod 4, -1 for 2,3 mod 4).
    pub fn adjoint(&self) -> CodiffForm {
        CodiffForm(self.0.scale(&adjoint_sign(self.grade())))
    }
}

impl CodiffForm {
    /// Applies the form; output grade is input grade plus the form grade.
    pub fn apply(&self, xi: &PathVector) -> PathVector {
        self.0.apply(xi, d_insert)
    }

    /// The adjoint differential form, with the same grade sign rule.
    pub fn adjoint(&self) -> DiffForm {
        DiffForm(self.0.scale(&adjoint_sign(self.grade())))
    }
}

/// The weighted sum of degree -1 vertex operators with the given
/// per-vertex weights.
pub fn weighted_diff<I>(weights: I) -> DiffForm
where
    I: IntoIterator<Item = (usize, Rational)>,
{
    let mut table = FormTable::zero(1);
    for (v, w) in weights {
        table.add_term(vec![v], w);
    }
    DiffForm(table)
}

/// The weighted sum of degree +1 vertex operators.
pub fn weighted_codiff<I>(weights: I) -> CodiffForm
where
    I: IntoIterator<Item = (usize, Rational)>,
{
    let mut table = FormTable::zero(1);
    for (v, w) in weights {
        table.add_term(vec![v], w);
    }
    CodiffForm(table)
}
