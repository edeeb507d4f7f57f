//! Dense exact linear algebra over a [`Field`].
//!
//! Vectors are plain `Vec<Fe>`; matrices are row-major. Every routine here is
//! deterministic: pivots are chosen left to right and kernels are enumerated
//! by ascending free column.

use std::fmt;

use crate::error::LinalgError;
use crate::field::{Fe, Field};

pub fn zero_vector(field: Field, n: usize) -> Vec<Fe> {
    vec![field.zero(); n]
}

pub fn unit_vector(field: Field, n: usize, i: usize) -> Vec<Fe> {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vector(v: &[Fe]) -> bool {
    v.iter().all(Fe::is_zero)
}

/// `y += a·x`
pub fn axpy(y: &mut [Fe], a: Fe, x: &[Fe]) {
    debug_assert_eq!(y.len(), x.len());
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += a * *xi;
        }
    }
}

pub fn scale(v: &[Fe], a: Fe) -> Vec<Fe> {
    v.iter().map(|x| a * *x).collect()
}

pub fn add_vectors(x: &[Fe], y: &[Fe]) -> Vec<Fe> {
    x.iter().zip(y).map(|(a, b)| *a + *b).collect()
}

pub fn sub_vectors(x: &[Fe], y: &[Fe]) -> Vec<Fe> {
    x.iter().zip(y).map(|(a, b)| *a - *b).collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<Fe>]) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Fe>]) -> Result<Self, LinalgError> {
        let mut m = Self::zero(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(LinalgError::DimensionMismatch {
                    expected: rows,
                    got: c.len(),
                });
            }
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = *x;
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Fe> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn mul_vec(&self, x: &[Fe]) -> Result<Vec<Fe>, LinalgError> {
        if x.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(self.field.zero(), |acc, (a, b)| acc + *a * *b)
            })
            .collect())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                got: rhs.rows,
            });
        }
        let mut out = Matrix::zero(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut n: u64) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            n >>= 1;
        }
        Ok(acc)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Fe;
    fn index(&self, (i, j): (usize, usize)) -> &Fe {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Fe {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

pub fn rref(m: &Matrix) -> Rref {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(pr) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if pr != r {
            for j in 0..a.cols {
                a.data.swap(pr * a.cols + j, r * a.cols + j);
            }
        }
        let inv = a[(r, c)].inv().expect("pivot is nonzero");
        for j in c..a.cols {
            a[(r, j)] *= inv;
        }
        for i in 0..a.rows {
            if i == r {
                continue;
            }
            let f = a[(i, c)];
            if f.is_zero() {
                continue;
            }
            for j in c..a.cols {
                let v = a[(r, j)];
                if !v.is_zero() {
                    a[(i, j)] -= f * v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref {
        rank: pivots.len(),
        matrix: a,
        pivots,
    }
}

/// A subspace of `F^ambient_dim` together with a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient_dim: usize,
    basis: Vec<Vec<Fe>>,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Self {
        Self {
            field,
            ambient_dim,
            basis: Vec::new(),
        }
    }

    /// Uses `basis` verbatim; fails if the vectors are dependent or of the wrong length.
    pub fn from_basis(field: Field, ambient_dim: usize, basis: Vec<Vec<Fe>>) -> Result<Self, LinalgError> {
        let s = Self::span(field, ambient_dim, &basis)?;
        if s.dim() != basis.len() {
            return Err(LinalgError::DimensionMismatch {
                expected: basis.len(),
                got: s.dim(),
            });
        }
        Ok(Self {
            field,
            ambient_dim,
            basis,
        })
    }

    /// Span of `vectors`, keeping the greedy independent subset in input order.
    pub fn span(field: Field, ambient_dim: usize, vectors: &[Vec<Fe>]) -> Result<Self, LinalgError> {
        let mut ech = Echelon::new(ambient_dim);
        let mut basis = Vec::new();
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(LinalgError::DimensionMismatch {
                    expected: ambient_dim,
                    got: v.len(),
                });
            }
            if ech.insert(v).is_some() {
                basis.push(v.clone());
            }
        }
        Ok(Self {
            field,
            ambient_dim,
            basis,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Fe>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Fe]) -> Result<bool, LinalgError> {
        Ok(in_span(v, self)?.is_some())
    }

    /// `self ⊆ other`
    pub fn is_contained_in(&self, other: &Subspace) -> Result<bool, LinalgError> {
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_as(&self, other: &Subspace) -> Result<bool, LinalgError> {
        Ok(self.dim() == other.dim() && self.is_contained_in(other)?)
    }
}

pub fn kernel_basis(m: &Matrix) -> Subspace {
    let Rref { matrix: r, pivots, .. } = rref(m);
    let field = m.field();
    let mut basis = Vec::new();
    let mut is_pivot = vec![false; m.cols()];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    for f in (0..m.cols()).filter(|&c| !is_pivot[c]) {
        let mut v = zero_vector(field, m.cols());
        v[f] = field.one();
        for (row, &c) in pivots.iter().enumerate() {
            v[c] = -r[(row, f)];
        }
        basis.push(v);
    }
    Subspace {
        field,
        ambient_dim: m.cols(),
        basis,
    }
}

/// Basis of the column space, taken from the pivot columns of `m`.
pub fn image_basis(m: &Matrix) -> Subspace {
    let r = rref(m);
    Subspace {
        field: m.field(),
        ambient_dim: m.rows(),
        basis: r.pivots.iter().map(|&c| m.column(c)).collect(),
    }
}

/// Coordinates of `v` in the basis of `s`, if `v` lies in the span.
pub fn in_span(v: &[Fe], s: &Subspace) -> Result<Option<Vec<Fe>>, LinalgError> {
    if v.len() != s.ambient_dim {
        return Err(LinalgError::DimensionMismatch {
            expected: s.ambient_dim,
            got: v.len(),
        });
    }
    let k = s.dim();
    let mut cols = s.basis.clone();
    cols.push(v.to_vec());
    let aug = Matrix::from_columns(s.field, s.ambient_dim, &cols)?;
    let r = rref(&aug);
    if r.pivots.last() == Some(&k) {
        return Ok(None);
    }
    let mut coords = zero_vector(s.field, k);
    for (row, &c) in r.pivots.iter().enumerate() {
        coords[c] = r.matrix[(row, k)];
    }
    Ok(Some(coords))
}

/// Vectors of `kernel` whose classes form a basis of `kernel / image`.
///
/// Kernel basis vectors are scanned in order; each is reduced against the
/// image and the representatives chosen so far, and kept (scaled to leading
/// coefficient 1) when the remainder is nonzero.
pub fn complement_representatives(kernel: &Subspace, image: &Subspace) -> Result<Vec<Vec<Fe>>, LinalgError> {
    if kernel.ambient_dim != image.ambient_dim {
        return Err(LinalgError::DimensionMismatch {
            expected: kernel.ambient_dim,
            got: image.ambient_dim,
        });
    }
    if !image.is_contained_in(kernel)? {
        return Err(LinalgError::ImageNotContained);
    }
    let mut ech = Echelon::new(kernel.ambient_dim);
    for b in &image.basis {
        ech.insert(b);
    }
    let mut reps = Vec::new();
    for v in &kernel.basis {
        if let Some(rem) = ech.insert(v) {
            reps.push(rem);
        }
    }
    Ok(reps)
}

/// Incrementally maintained reduced row echelon basis.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<(usize, Vec<Fe>)>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Remainder of `v` after clearing every pivot coordinate.
    pub fn reduce(&self, v: &[Fe]) -> Vec<Fe> {
        let mut w = v.to_vec();
        for (c, row) in &self.rows {
            let f = w[*c];
            if !f.is_zero() {
                axpy(&mut w, -f, row);
            }
        }
        w
    }

    /// Adds `v`; returns the normalized remainder if `v` was new.
    pub fn insert(&mut self, v: &[Fe]) -> Option<Vec<Fe>> {
        let mut w = self.reduce(v);
        let c = w.iter().position(|x| !x.is_zero())?;
        let inv = w[c].inv().expect("nonzero");
        for x in w.iter_mut() {
            *x *= inv;
        }
        for (_, row) in self.rows.iter_mut() {
            let f = row[c];
            if !f.is_zero() {
                axpy(row, -f, &w);
            }
        }
        self.rows.push((c, w.clone()));
        Some(w)
    }

    pub fn contains(&self, v: &[Fe]) -> bool {
        is_zero_vector(&self.reduce(v))
    }
}
