//! Dense matrices over the ring of integers and over the field, with exact
//! row reduction for the latter.

use crate::error::{Error, Result};
use crate::quadfield::{Field, QuadElem, QuadInt};
use std::fmt;

/// Scalars a [`Matrix`] can hold.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero(field: Field) -> Self;
    fn one(field: Field) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    fn add_assign(&mut self, rhs: &Self);
}

impl Scalar for QuadInt {
    fn zero(field: Field) -> Self {
        QuadInt::zero(field)
    }
    fn one(field: Field) -> Self {
        QuadInt::one(field)
    }
    fn is_zero(&self) -> bool {
        QuadInt::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        QuadInt::conj(self)
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
}

impl Scalar for QuadElem {
    fn zero(field: Field) -> Self {
        QuadElem::zero(field)
    }
    fn one(field: Field) -> Self {
        QuadElem::one(field)
    }
    fn is_zero(&self) -> bool {
        QuadElem::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        QuadElem::conj(self)
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Matrix with entries in the ring of integers.
pub type IntMatrix = Matrix<QuadInt>;
/// Matrix with entries in the field.
pub type KMatrix = Matrix<QuadElem>;

impl<T: Scalar> Matrix<T> {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![T::zero(field); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one(field);
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { field, rows: r, cols: c, data: rows.into_iter().flatten().collect() }
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn conj(&self) -> Self {
        self.map(T::conj)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix add shape mismatch");
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sub shape mismatch");
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn add_assign(&mut self, rhs: &Self) {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix add shape mismatch");
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            a.add_assign(b);
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.mul(s))
    }

    /// Matrix product; panics on a shape mismatch.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::<T>::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(l, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j].add_assign(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(self.mul(rhs))
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero(self.field);
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_assign(&a.mul(b));
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product, `(A ⊗ B)[(i,k),(j,l)] = A[i][j] * B[k][l]`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        Matrix::from_fn(self.field, rows, cols, |r, c| {
            let (i, k) = (r / rhs.rows, r % rhs.rows);
            let (j, l) = (c / rhs.cols, c % rhs.cols);
            self.get(i, j).mul(rhs.get(k, l))
        })
    }

    /// Rows of `self` followed by rows of `below`.
    pub fn vstack(&self, below: &Self) -> Self {
        assert_eq!(self.cols, below.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Matrix { field: self.field, rows: self.rows + below.rows, cols: self.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.field, self.rows)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Matrix::identity(self.field, self.rows);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }
}

impl IntMatrix {
    pub fn to_field(&self) -> KMatrix {
        self.map(|v| QuadElem::from(v))
    }
}

impl KMatrix {
    /// The matrix over the ring of integers, if every entry is integral.
    pub fn to_integral(&self) -> Option<IntMatrix> {
        let data: Option<Vec<QuadInt>> = self.data.iter().map(QuadElem::to_integer).collect();
        Some(Matrix { field: self.field, rows: self.rows, cols: self.cols, data: data? })
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(QuadElem::is_integral)
    }

    /// Reduced row echelon form and the pivot columns.
    ///
    /// Pivots are the first nonzero entry in each column scan.
    pub fn rref(&self) -> (KMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pv = m.get(r, j);
                    if pv.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&factor * pv);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Right kernel `{v : M v = 0}`.
    pub fn kernel(&self) -> SubspaceBasis {
        let (r, pivots) = self.rref();
        let field = self.field;
        let mut vectors = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![QuadElem::zero(field); self.cols];
            v[free] = QuadElem::one(field);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free);
            }
            vectors.push(v);
        }
        SubspaceBasis::from_spanning(field, self.cols, vectors)
    }

    /// Determinant by exact Gaussian elimination.
    pub fn determinant(&self) -> Result<QuadElem> {
        if !self.is_square() {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = QuadElem::one(self.field);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(QuadElem::zero(self.field));
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero");
            for i in c + 1..n {
                let factor = m.get(i, c) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m.get(i, j) - &(&factor * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }
}

/// A subspace of `K^n`, held as the nonzero rows of a reduced row echelon
/// matrix. Equal subspaces have equal bases.
#[derive(Clone, Debug, PartialEq)]
pub struct SubspaceBasis {
    pub field: Field,
    pub ambient_dim: usize,
    pub vectors: Vec<Vec<QuadElem>>,
}

impl SubspaceBasis {
    pub fn zero(field: Field, ambient_dim: usize) -> Self {
        SubspaceBasis { field, ambient_dim, vectors: Vec::new() }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Self {
        KMatrix::identity(field, ambient_dim).row_space()
    }

    pub fn from_spanning(field: Field, ambient_dim: usize, vectors: Vec<Vec<QuadElem>>) -> Self {
        if vectors.is_empty() {
            return SubspaceBasis::zero(field, ambient_dim);
        }
        KMatrix::from_rows(field, vectors).row_space()
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn as_matrix(&self) -> KMatrix {
        if self.vectors.is_empty() {
            return KMatrix::zeros(self.field, 0, self.ambient_dim);
        }
        KMatrix::from_rows(self.field, self.vectors.clone())
    }

    /// Rows spanning the linear forms vanishing on the subspace.
    pub fn equations(&self) -> KMatrix {
        if self.vectors.is_empty() {
            return KMatrix::identity(self.field, self.ambient_dim);
        }
        let ann = self.as_matrix().kernel();
        ann.as_matrix()
    }

    pub fn contains(&self, v: &[QuadElem]) -> bool {
        self.equations().mul_vec(v).iter().all(QuadElem::is_zero)
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        other.vectors.iter().all(|v| self.contains(v))
    }

    pub fn intersect(&self, other: &SubspaceBasis) -> SubspaceBasis {
        if self.vectors.is_empty() || other.vectors.is_empty() {
            return SubspaceBasis::zero(self.field, self.ambient_dim);
        }
        // u = c^T U with E u = 0
        let u = self.as_matrix();
        let coeffs = other.equations().mul(&u.transpose()).kernel();
        let vectors = coeffs
            .vectors
            .iter()
            .map(|c| u.transpose().mul_vec(c))
            .collect();
        SubspaceBasis::from_spanning(self.field, self.ambient_dim, vectors)
    }

    pub fn sum(&self, other: &SubspaceBasis) -> SubspaceBasis {
        let mut all = self.vectors.clone();
        all.extend(other.vectors.iter().cloned());
        SubspaceBasis::from_spanning(self.field, self.ambient_dim, all)
    }

    /// Image under `m`.
    pub fn map(&self, m: &KMatrix) -> SubspaceBasis {
        let vectors = self.vectors.iter().map(|v| m.mul_vec(v)).collect();
        SubspaceBasis::from_spanning(self.field, m.rows(), vectors)
    }
}

impl KMatrix {
    pub fn row_space(&self) -> SubspaceBasis {
        let (r, pivots) = self.rref();
        SubspaceBasis {
            field: self.field,
            ambient_dim: self.cols,
            vectors: (0..pivots.len()).map(|i| r.row(i).to_vec()).collect(),
        }
    }
}
