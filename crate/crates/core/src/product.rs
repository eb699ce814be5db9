//! Structure constants of binary operations and coproducts.

use num_traits::Zero;

use crate::error::{ensure_dim, Result};
use crate::linalg::{Matrix, Tensor2, Tensor3};
use crate::scalar::Scalar;
use crate::space::Space;

/// `e_i · e_j = Σ_k c(i,j,k) e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearProduct {
    space: Space,
    c: Vec<Scalar>,
}

impl BilinearProduct {
    pub fn zero(space: Space) -> Self {
        let n = space.dim();
        Self { space, c: vec![Scalar::zero(); n * n * n] }
    }

    pub fn from_fn(space: Space, mut f: impl FnMut(usize, usize) -> Vec<Scalar>) -> Self {
        let mut p = Self::zero(space);
        let n = p.dim();
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                assert_eq!(v.len(), n, "product value length");
                for (k, x) in v.into_iter().enumerate() {
                    p.set(i, j, k, x);
                }
            }
        }
        p
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Same structure constants over a relabelled space of equal dimension.
    pub fn with_space(&self, space: Space) -> Result<Self> {
        ensure_dim("relabelled product", self.dim(), space.dim())?;
        Ok(Self { space, c: self.c.clone() })
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        let n = self.dim();
        (i * n + j) * n + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let idx = self.idx(i, j, k);
        self.c[idx] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, v: &Scalar) {
        let idx = self.idx(i, j, k);
        self.c[idx] += v;
    }

    /// `e_i · e_j` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        let n = self.dim();
        let start = (i * n + j) * n;
        self.c[start..start + n].to_vec()
    }

    /// Bilinear extension to arbitrary vectors.
    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        assert!(u.len() == n && v.len() == n, "vector length");
        let mut out = vec![Scalar::zero(); n];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let w = ui * vj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        *o += c * &w;
                    }
                }
            }
        }
        out
    }

    /// Left multiplication `L(e_i): y ↦ e_i · y`.
    pub fn left(&self, i: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |k, j| self.get(i, j, k).clone())
    }

    /// Right multiplication `R(e_j): x ↦ x · e_j`.
    pub fn right(&self, j: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |k, i| self.get(i, j, k).clone())
    }

    pub fn left_all(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.left(i)).collect()
    }

    pub fn right_all(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|j| self.right(j)).collect()
    }

    /// Left multiplication by an arbitrary vector.
    pub fn left_by(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        m.add_at(k, j, &(c * xi));
                    }
                }
            }
        }
        m
    }

    /// Right multiplication by an arbitrary vector.
    pub fn right_by(&self, y: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            for i in 0..n {
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        m.add_at(k, i, &(c * yj));
                    }
                }
            }
        }
        m
    }

    /// Fills `c(j,i,k) = −c(i,j,k)` wherever the mirrored entry is empty,
    /// so a bracket can be given by its upper triangle.
    pub fn antisymmetrize_completion(&mut self) {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij_empty = self.basis_product(i, j).iter().all(Zero::is_zero);
                let ji = self.basis_product(j, i);
                if ij_empty && ji.iter().any(|v| !v.is_zero()) {
                    for (k, v) in ji.into_iter().enumerate() {
                        self.set(i, j, k, -v);
                    }
                }
            }
        }
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i..n).all(|j| (0..n).all(|k| (self.get(i, j, k) + self.get(j, i, k)).is_zero())))
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// `x·y − y·x`.
    pub fn commutator(&self) -> Self {
        Self::from_fn(self.space.clone(), |i, j| {
            let n = self.dim();
            (0..n).map(|k| self.get(i, j, k) - self.get(j, i, k)).collect()
        })
    }

    /// The opposite product `x ·op y = y · x`.
    pub fn opposite(&self) -> Self {
        Self::from_fn(self.space.clone(), |i, j| self.basis_product(j, i))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "product dimensions");
        Self { space: self.space.clone(), c: self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "product dimensions");
        Self { space: self.space.clone(), c: self.c.iter().zip(&other.c).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self { space: self.space.clone(), c: self.c.iter().map(|a| a * s).collect() }
    }

    /// Restriction to the basis block `start..start+dim(space)`, dropping
    /// components outside the block.
    pub fn restrict(&self, start: usize, space: Space) -> Self {
        let n = space.dim();
        Self::from_fn(space, |i, j| {
            let v = self.basis_product(start + i, start + j);
            v[start..start + n].to_vec()
        })
    }

    /// Whether the span of basis vectors `start..start+len` is closed.
    pub fn closes_on(&self, start: usize, len: usize) -> bool {
        let n = self.dim();
        (start..start + len).all(|i| {
            (start..start + len).all(|j| {
                (0..n).filter(|k| *k < start || *k >= start + len).all(|k| self.get(i, j, k).is_zero())
            })
        })
    }

    /// Nonzero `(i, j, k, c)` quadruples.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let n = self.dim();
        self.c
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| (idx / (n * n), (idx / n) % n, idx % n, v))
    }
}

/// Linear map `V → V ⊗ V`, stored as the image of each basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coproduct {
    space: Space,
    cols: Vec<Tensor2>,
}

impl Coproduct {
    pub fn zero(space: Space) -> Self {
        let n = space.dim();
        Self { space, cols: vec![Tensor2::zeros(n, n); n] }
    }

    pub fn from_columns(space: Space, cols: Vec<Tensor2>) -> Result<Self> {
        let n = space.dim();
        ensure_dim("coproduct columns", n, cols.len())?;
        for c in &cols {
            ensure_dim("coproduct column left factor", n, c.left_dim())?;
            ensure_dim("coproduct column right factor", n, c.right_dim())?;
        }
        Ok(Self { space, cols })
    }

    pub fn from_fn(space: Space, f: impl FnMut(usize) -> Tensor2) -> Self {
        let n = space.dim();
        let cols = (0..n).map(f).collect();
        Self::from_columns(space, cols).expect("columns built at the space dimension")
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn with_space(&self, space: Space) -> Result<Self> {
        ensure_dim("relabelled coproduct", self.dim(), space.dim())?;
        Ok(Self { space, cols: self.cols.clone() })
    }

    /// Image of the i-th basis vector.
    pub fn column(&self, i: usize) -> &Tensor2 {
        &self.cols[i]
    }

    pub fn columns(&self) -> &[Tensor2] {
        &self.cols
    }

    /// Coefficient of `e_j ⊗ e_k` in the image of `e_i`.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.cols[i].get(j, k)
    }

    /// Linear extension to an arbitrary vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.apply_tensor(v).flat()
    }

    pub fn apply_tensor(&self, v: &[Scalar]) -> Tensor2 {
        let n = self.dim();
        assert_eq!(v.len(), n, "vector length");
        let mut out = Tensor2::zeros(n, n);
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, k, c) in self.cols[i].nonzeros() {
                out.add_at(j, k, &(c * vi));
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(self.space.clone(), |i| &self.cols[i] + &other.cols[i])
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(self.space.clone(), |i| &self.cols[i] - &other.cols[i])
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Tensor2::is_zero)
    }

    /// `(A ⊗ B) ∘ self`.
    pub fn post_map(&self, a: &Matrix, b: &Matrix) -> Self {
        Self::from_fn(self.space.clone(), |i| self.cols[i].map(a, b))
    }

    /// `(δ ⊗ id) t`.
    pub fn on_first(&self, t: &Tensor2) -> Tensor3 {
        let n = self.dim();
        let mut out = Tensor3::zeros(n, n, t.right_dim());
        for (i, j, c) in t.nonzeros() {
            for (a, b, d) in self.cols[i].nonzeros() {
                out.add_at(a, b, j, &(c * d));
            }
        }
        out
    }

    /// `(id ⊗ δ) t`.
    pub fn on_second(&self, t: &Tensor2) -> Tensor3 {
        let n = self.dim();
        let mut out = Tensor3::zeros(t.left_dim(), n, n);
        for (i, j, c) in t.nonzeros() {
            for (b, d, e) in self.cols[j].nonzeros() {
                out.add_at(i, b, d, &(c * e));
            }
        }
        out
    }

    /// `self ∘ M`.
    pub fn pre_map(&self, m: &Matrix) -> Self {
        Self::from_fn(self.space.clone(), |i| self.apply_tensor(&m.column(i)))
    }
}

/// Product on `V*` dual to a coproduct on `V`:
/// `⟨δ(e_i), e_j* ⊗ e_k*⟩ = ⟨e_i, e_j* · e_k*⟩`.
pub fn dualize_coproduct(d: &Coproduct) -> BilinearProduct {
    let n = d.dim();
    let mut p = BilinearProduct::zero(d.space().dual());
    for i in 0..n {
        for (j, k, c) in d.column(i).nonzeros() {
            p.set(j, k, i, c.clone());
        }
    }
    p
}

/// Coproduct on `V*` dual to a product on `V`.
pub fn dualize_product(p: &BilinearProduct) -> Coproduct {
    let n = p.dim();
    let mut cols = vec![Tensor2::zeros(n, n); n];
    for (i, j, k, c) in p.nonzeros() {
        cols[k].set(i, j, c.clone());
    }
    Coproduct::from_columns(p.space().dual(), cols).expect("dual columns have matching dimension")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn sl2() -> BilinearProduct {
        let g = Space::from_labels("g", &["x", "h", "y"]);
        let mut p = BilinearProduct::zero(g);
        p.set(1, 0, 0, int(2));
        p.set(1, 2, 2, int(-2));
        p.set(0, 2, 1, int(1));
        p.antisymmetrize_completion();
        p
    }

    #[test]
    fn completion_fills_mirror() {
        let p = sl2();
        assert!(p.is_antisymmetric());
        assert_eq!(p.basis_product(0, 1), vec![int(-2), int(0), int(0)]);
        assert_eq!(p.nonzeros().count(), 6);
    }

    #[test]
    fn left_right_operators() {
        let p = sl2();
        let lh = p.left(1);
        assert_eq!(lh, Matrix::from_rows(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]));
        assert_eq!(p.right(0), -&p.left(0));
        assert_eq!(p.left_by(&[int(1), int(0), int(1)]), &p.left(0) + &p.left(2));
    }

    #[test]
    fn dualization_round_trip() {
        let p = sl2();
        let d = dualize_product(&p);
        let back = dualize_coproduct(&d);
        assert_eq!(back.space(), p.space());
        assert!(back == p);
    }
}
