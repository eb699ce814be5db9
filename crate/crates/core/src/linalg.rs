//! Dense exact matrices and order-2/3 tensors.
//!
//! A matrix stores column j as the image of the j-th domain basis vector.
//! A `Tensor2` stores `t[i][j]` as the coefficient of `e_i ⊗ f_j`; a
//! `Tensor3` does the same for triples.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Scalar::one())
    }

    /// `s · id` on an n-dimensional space.
    pub fn scalar(n: usize, s: &Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, s.clone());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Integer matrix given row by row.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix literal");
        Self::from_fn(r, c, |i, j| int(rows[i][j]))
    }

    /// Matrix whose j-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
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

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Scalar) {
        let slot = &mut self.data[i * self.cols + j];
        *slot += v;
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        let mut out = vec![Scalar::zero(); self.rows];
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += a * vj;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v * s).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(Scalar::zero(), |acc, i| acc + self.get(i, i))
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    pub fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(a.rows + b.rows, a.cols + b.cols);
        m.set_block(0, 0, a);
        m.set_block(a.rows, a.cols, b);
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    fn row_echelon(&self) -> (Vec<Vec<Scalar>>, Scalar, usize) {
        // returns (reduced rows, determinant factor, rank) for square input
        let mut a: Vec<Vec<Scalar>> =
            (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut det = Scalar::one();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !a[r][col].is_zero()) else {
                det = Scalar::zero();
                continue;
            };
            if p != rank {
                a.swap(p, rank);
                det = -det;
            }
            let pivot = a[rank][col].clone();
            det *= &pivot;
            for r in rank + 1..self.rows {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] / &pivot;
                for c in col..self.cols {
                    let sub = &f * &a[rank][c];
                    a[r][c] -= sub;
                }
            }
            rank += 1;
        }
        (a, det, rank)
    }

    pub fn det(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let (_, det, rank) = self.row_echelon();
        if rank < self.rows {
            Scalar::zero()
        } else {
            det
        }
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().2
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("cannot invert a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut row: Vec<Scalar> = (0..n).map(|j| self.get(i, j).clone()).collect();
                row.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or_else(|| Error::Singular("determinant is zero".into()))?;
            a.swap(p, col);
            let pivot = a[col][col].clone();
            for v in a[col].iter_mut() {
                *v /= &pivot;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let sub = &f * &a[col][c];
                    a[r][c] -= sub;
                }
            }
        }
        Ok(Matrix::from_fn(n, n, |i, j| a[i][n + j].clone()))
    }

    /// Entries row-major, matching [`map_labels`](crate::space::map_labels).
    pub fn flat(&self) -> &[Scalar] {
        &self.data
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| (idx / self.cols, idx % self.cols, v))
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shapes");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shapes");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shapes");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }
}

/// Element of `U ⊗ W`; `get(i, j)` is the coefficient of `u_i ⊗ w_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tensor2 {
    coeffs: Matrix,
}

impl Tensor2 {
    pub fn zeros(left: usize, right: usize) -> Self {
        Self { coeffs: Matrix::zeros(left, right) }
    }

    pub fn from_coeffs(coeffs: Matrix) -> Self {
        Self { coeffs }
    }

    /// The pure tensor `e_i ⊗ f_j`.
    pub fn basis(left: usize, right: usize, i: usize, j: usize) -> Self {
        let mut t = Self::zeros(left, right);
        t.coeffs.set(i, j, Scalar::one());
        t
    }

    pub fn coeffs(&self) -> &Matrix {
        &self.coeffs
    }

    pub fn left_dim(&self) -> usize {
        self.coeffs.rows()
    }

    pub fn right_dim(&self) -> usize {
        self.coeffs.cols()
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        self.coeffs.get(i, j)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.coeffs.set(i, j, v);
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Scalar) {
        self.coeffs.add_at(i, j, v);
    }

    /// τ: `u ⊗ w ↦ w ⊗ u`.
    pub fn flip(&self) -> Self {
        Self { coeffs: self.coeffs.transpose() }
    }

    /// `(M ⊗ N) t`, which in coordinates is `M · t · Nᵀ`.
    pub fn map(&self, m: &Matrix, n: &Matrix) -> Self {
        Self { coeffs: &(m * &self.coeffs) * &n.transpose() }
    }

    /// `(M ⊗ id) t`.
    pub fn map_left(&self, m: &Matrix) -> Self {
        Self { coeffs: m * &self.coeffs }
    }

    /// `(id ⊗ N) t`.
    pub fn map_right(&self, n: &Matrix) -> Self {
        Self { coeffs: &self.coeffs * &n.transpose() }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self { coeffs: self.coeffs.scale(s) }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn is_antisymmetric(&self) -> bool {
        (&self.coeffs + &self.coeffs.transpose()).is_zero()
    }

    /// Coefficients flattened row-major, matching `Space::tensor_labels`.
    pub fn flat(&self) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(self.left_dim() * self.right_dim());
        for i in 0..self.left_dim() {
            for j in 0..self.right_dim() {
                out.push(self.get(i, j).clone());
            }
        }
        out
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.coeffs.nonzeros()
    }
}

impl<'a> Add<&'a Tensor2> for &'a Tensor2 {
    type Output = Tensor2;
    fn add(self, rhs: &Tensor2) -> Tensor2 {
        Tensor2 { coeffs: &self.coeffs + &rhs.coeffs }
    }
}

impl<'a> Sub<&'a Tensor2> for &'a Tensor2 {
    type Output = Tensor2;
    fn sub(self, rhs: &Tensor2) -> Tensor2 {
        Tensor2 { coeffs: &self.coeffs - &rhs.coeffs }
    }
}

impl Neg for &Tensor2 {
    type Output = Tensor2;
    fn neg(self) -> Tensor2 {
        Tensor2 { coeffs: -&self.coeffs }
    }
}

/// Linear map `V* → V` with `T(e_i*) = Σ_j t(i,j) e_j`. Its matrix is `tᵀ`.
pub fn map_from_tensor(t: &Tensor2) -> Matrix {
    t.coeffs.transpose()
}

/// Inverse of [`map_from_tensor`].
pub fn tensor_from_map(m: &Matrix) -> Tensor2 {
    Tensor2 { coeffs: m.transpose() }
}

/// Element of `U ⊗ V ⊗ W`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dims: [usize; 3],
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(d0: usize, d1: usize, d2: usize) -> Self {
        Self { dims: [d0, d1, d2], data: vec![Scalar::zero(); d0 * d1 * d2] }
    }

    pub fn cube(n: usize) -> Self {
        Self::zeros(n, n, n)
    }

    pub fn basis(dims: [usize; 3], i: usize, j: usize, k: usize) -> Self {
        let mut t = Self::zeros(dims[0], dims[1], dims[2]);
        t.set(i, j, k, Scalar::one());
        t
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let idx = self.idx(i, j, k);
        self.data[idx] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, v: &Scalar) {
        let idx = self.idx(i, j, k);
        self.data[idx] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Coefficients flattened row-major.
    pub fn flat(&self) -> &[Scalar] {
        &self.data
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let [_, d1, d2] = self.dims;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| (idx / (d1 * d2), (idx / d2) % d1, idx % d2, v))
    }

    /// σ: `x ⊗ y ⊗ z ↦ z ⊗ x ⊗ y`, i.e. `result(a,b,c) = input(b,c,a)`.
    pub fn cyclic_shift(&self) -> Result<Self> {
        let [d0, d1, d2] = self.dims;
        if d0 != d1 || d1 != d2 {
            return Err(Error::Dimension(format!(
                "cyclic shift needs equal factors, found {d0}x{d1}x{d2}"
            )));
        }
        let mut out = Self::cube(d0);
        for (b, c, a, v) in self.nonzeros() {
            out.set(a, b, c, v.clone());
        }
        Ok(out)
    }

    /// `τ ⊗ id`: swaps the first two factors.
    pub fn flip12(&self) -> Self {
        let [d0, d1, d2] = self.dims;
        let mut out = Self::zeros(d1, d0, d2);
        for (i, j, k, v) in self.nonzeros() {
            out.set(j, i, k, v.clone());
        }
        out
    }

    /// Applies `m` to one tensor factor (`slot` ∈ {0,1,2}).
    pub fn map_slot(&self, slot: usize, m: &Matrix) -> Self {
        assert!(slot < 3, "tensor slot out of range");
        assert_eq!(m.cols(), self.dims[slot], "map domain");
        let mut dims = self.dims;
        dims[slot] = m.rows();
        let mut out = Self::zeros(dims[0], dims[1], dims[2]);
        for (i, j, k, v) in self.nonzeros() {
            let src = [i, j, k][slot];
            for r in 0..m.rows() {
                let a = m.get(r, src);
                if a.is_zero() {
                    continue;
                }
                let mut at = [i, j, k];
                at[slot] = r;
                out.add_at(at[0], at[1], at[2], &(a * v));
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self { dims: self.dims, data: self.data.iter().map(|v| v * s).collect() }
    }
}

impl<'a> Add<&'a Tensor3> for &'a Tensor3 {
    type Output = Tensor3;
    fn add(self, rhs: &Tensor3) -> Tensor3 {
        assert_eq!(self.dims, rhs.dims, "tensor shapes");
        Tensor3 { dims: self.dims, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a Tensor3> for &'a Tensor3 {
    type Output = Tensor3;
    fn sub(self, rhs: &Tensor3) -> Tensor3 {
        assert_eq!(self.dims, rhs.dims, "tensor shapes");
        Tensor3 { dims: self.dims, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Tensor3 {
    type Output = Tensor3;
    fn neg(self) -> Tensor3 {
        Tensor3 { dims: self.dims, data: self.data.iter().map(|a| -a).collect() }
    }
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x * s).collect()
}

pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}
