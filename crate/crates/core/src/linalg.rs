//! Exact rational linear algebra sized for boundary matrices: sparse
//! column-major storage, fraction-free rank, reduced-echelon kernels.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Sparse column-major matrix over the rationals. Column `j` holds the image
/// of the `j`-th source basis vector as sorted `(row, coefficient)` pairs
/// with no explicit zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, Rational)>>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let columns = (0..n).map(|j| vec![(j, Rational::one())]).collect();
        Matrix {
            rows: n,
            cols: n,
            columns,
        }
    }

    /// Builds from per-column entry lists; entries may arrive unsorted and
    /// may repeat (repeats are summed).
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, Rational)>>) -> Self {
        let cols = columns.len();
        let columns = columns
            .into_iter()
            .map(|mut entries| {
                entries.sort_by_key(|(r, _)| *r);
                let mut packed: Vec<(usize, Rational)> = Vec::with_capacity(entries.len());
                for (r, c) in entries {
                    assert!(r < rows, "row index {r} out of bounds for {rows} rows");
                    match packed.last_mut() {
                        Some((pr, pc)) if *pr == r => *pc += c,
                        _ => packed.push((r, c)),
                    }
                }
                packed.retain(|(_, c)| !c.is_zero());
                packed
            })
            .collect();
        Matrix {
            rows,
            cols,
            columns,
        }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut columns = vec![Vec::new(); ncols];
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    columns[j].push((i, v.clone()));
                }
            }
        }
        Matrix {
            rows: nrows,
            cols: ncols,
            columns,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.columns[col]
            .iter()
            .find(|(r, _)| *r == row)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn column(&self, col: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.rows];
        for (r, c) in &self.columns[col] {
            out[*r] = c.clone();
        }
        out
    }

    pub fn column_entries(&self, col: usize) -> &[(usize, Rational)] {
        &self.columns[col]
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                out[*i][j] = v.clone();
            }
        }
        out
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut columns = Vec::with_capacity(rhs.cols);
        for j in 0..rhs.cols {
            let mut acc = vec![Rational::zero(); self.rows];
            for (k, coeff) in &rhs.columns[j] {
                for (i, v) in &self.columns[*k] {
                    acc[*i] += coeff * v;
                }
            }
            columns.push(
                acc.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect(),
            );
        }
        Matrix {
            rows: self.rows,
            cols: rhs.cols,
            columns,
        }
    }

    pub fn apply(&self, vector: &[Rational]) -> Vec<Rational> {
        assert_eq!(vector.len(), self.cols, "dimension mismatch in apply");
        let mut out = vec![Rational::zero(); self.rows];
        for (j, coeff) in vector.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (i, v) in &self.columns[j] {
                out[*i] += coeff * v;
            }
        }
        out
    }

    /// Exact rank by fraction-free (Bareiss) elimination over the integers,
    /// after clearing denominators row by row. Pivots are chosen among the
    /// nonzero candidates with smallest magnitude to limit entry growth.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut a: Vec<Vec<BigInt>> = self
            .to_dense()
            .into_iter()
            .map(|row| {
                let lcm = row.iter().fold(BigInt::one(), |acc, v| {
                    if v.is_zero() {
                        acc
                    } else {
                        num_integer::lcm(acc, v.denom().clone())
                    }
                });
                row.into_iter()
                    .map(|v| (v * Rational::from(lcm.clone())).to_integer())
                    .collect()
            })
            .collect();

        let mut prev = BigInt::one();
        let mut rank = 0usize;
        for col in 0..self.cols {
            let pivot = (rank..self.rows)
                .filter(|&i| !a[i][col].is_zero())
                .min_by_key(|&i| a[i][col].abs());
            let Some(pivot) = pivot else { continue };
            a.swap(rank, pivot);
            for i in rank + 1..self.rows {
                for j in col + 1..self.cols {
                    let num = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                    let (q, r) = num_integer::div_rem(num, prev.clone());
                    debug_assert!(r.is_zero(), "fraction-free step produced a remainder");
                    a[i][j] = q;
                }
                a[i][col] = BigInt::zero();
            }
            prev = a[rank][col].clone();
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Kernel basis from the reduced row echelon form, one vector per free
    /// column in ascending order, each scaled so its first nonzero
    /// coordinate is 1.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (rref, pivots) = rref(self.to_dense(), self.cols);
        let pivot_set: Vec<Option<usize>> = {
            let mut set = vec![None; self.cols];
            for (row, col) in pivots.iter().enumerate() {
                set[*col] = Some(row);
            }
            set
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, col) in pivots.iter().enumerate() {
                v[*col] = -rref[row][free].clone();
            }
            normalize_leading(&mut v);
            basis.push(v);
        }
        basis
    }

    /// Columns that are independent of their predecessors, in ascending
    /// order; these index a basis of the column space.
    pub fn independent_columns(&self) -> Vec<usize> {
        let mut span = Span::new();
        (0..self.cols)
            .filter(|&j| span.try_insert(self.column(j)))
            .collect()
    }

    /// Exact solution of `self * x = rhs`. Free variables, if any, are set
    /// to zero; returns `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(rhs.len(), self.rows, "dimension mismatch in solve");
        let mut aug = self.to_dense();
        for (row, b) in aug.iter_mut().zip(rhs) {
            row.push(b.clone());
        }
        let (reduced, pivots) = rref(aug, self.cols + 1);
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, col) in pivots.iter().enumerate() {
            x[*col] = reduced[row][self.cols].clone();
        }
        Some(x)
    }
}

/// Reduced row echelon form over the rationals; returns the reduced rows
/// and the pivot column of each nonzero row. `width` bounds the pivot
/// search, so a pivot landing in an augmented column is visible to callers
/// as an inconsistency marker.
fn rref(mut a: Vec<Vec<Rational>>, width: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for col in 0..width {
        let Some(pivot) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, pivot);
        let inv = a[r][col].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][col].is_zero() {
                let factor = a[i][col].clone();
                let (head, tail) = a.split_at_mut(r.max(i));
                let (row_i, row_r) = if i < r {
                    (&mut head[i], &tail[0])
                } else {
                    (&mut tail[0], &head[r])
                };
                for (vi, vr) in row_i.iter_mut().zip(row_r.iter()) {
                    *vi -= &factor * vr;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows {
            break;
        }
    }
    (a, pivots)
}

fn normalize_leading(v: &mut [Rational]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        let inv = lead.recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
    }
}

/// Incrementally maintained reduced span, used to pick representatives that
/// extend a given subspace.
pub struct Span {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Span {
    pub fn new() -> Self {
        Span { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the span; inserts and returns `true` when it was
    /// independent.
    pub fn try_insert(&mut self, mut v: Vec<Rational>) -> bool {
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let factor = v[*pivot].clone();
                for (x, r) in v.iter_mut().zip(row.iter()) {
                    *x -= &factor * r;
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        self.rows.push((pivot, v));
        self.rows.sort_by_key(|(p, _)| *p);
        true
    }

    pub fn contains(&mut self, v: Vec<Rational>) -> bool {
        let mut v = v;
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let factor = v[*pivot].clone();
                for (x, r) in v.iter_mut().zip(row.iter()) {
                    *x -= &factor * r;
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }
}

impl Default for Span {
    fn default() -> Self {
        Self::new()
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`; the result is reduced to lowest terms. Returns
/// `None` for malformed input or a zero denominator.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let numer: BigInt = numer.parse().ok()?;
    let denom: BigInt = denom.parse().ok()?;
    if denom.is_zero() {
        return None;
    }
    Some(Rational::new(numer, denom))
}

/// Canonical string form: `"p/q"` in lowest terms, or `"p"` for integers.
pub fn rational_string(value: &Rational) -> String {
    value.to_string()
}

/// Decimal form rounded to `digits` fractional digits, half away from zero,
/// with trailing fractional zeros trimmed.
pub fn decimal_string(value: &Rational, digits: usize) -> String {
    let negative = value.is_negative();
    let abs = value.abs();
    let scale = BigInt::from(10u32).pow(digits as u32);
    let doubled = abs.numer() * &scale * 2u8 + abs.denom();
    let rounded = doubled / (abs.denom() * 2u8);
    let mut repr = rounded.to_string();
    if repr.len() <= digits {
        repr = format!("{}{}", "0".repeat(digits - repr.len() + 1), repr);
    }
    let split = repr.len() - digits;
    let (int_part, frac_part) = repr.split_at(split);
    let frac_part = frac_part.trim_end_matches('0');
    let mut out = String::new();
    if negative && (!int_part.trim_start_matches('0').is_empty() || !frac_part.is_empty()) {
        out.push('-');
    }
    out.push_str(int_part);
    if !frac_part.is_empty() {
        out.push('.');
        out.push_str(frac_part);
    }
    out
}
